//! Operators `Σ_w q_w · w` acting on polynomials in the strand variables.
//!
//! A term is a strand bijection `w` (source position `k` ends at target
//! position `w[k]`) and a rational coefficient in the target variables. It
//! acts by renaming `x_k ↦ x_{w[k]}` and then multiplying by `q_w`.
//!
//! Thin generators:
//!
//! - dot at `k`: multiplication by `x_k`;
//! - same-color crossing at `k`: the divided difference
//!   `∂_k f = (f - s_k f)/(x_k - x_{k+1})`;
//! - crossing of colors `(1,2)`: the transposition `s_k`;
//! - crossing of colors `(2,1)`: `(x_k + x_{k+1}) · s_k`.
//!
//! With this assignment the double adjacent crossing is `x_k + x_{k+1}` in
//! both orders and `ψ_1ψ_2ψ_1 = ψ_2ψ_1ψ_2 + 1` on both `(1,2,1)` and `(2,1,2)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use super::rational::RationalCoeff;
use crate::poly::{Poly, MAX_VARS};
use crate::Color;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OperatorError {
    #[error("position {pos} out of range for a sequence of length {len}")]
    Position { pos: usize, len: usize },
    #[error("interface mismatch: {left} vs {right}")]
    Interface { left: String, right: String },
    #[error("too many strands ({0}, limit {MAX_VARS})")]
    TooManyStrands(usize),
}

pub type Perm = Vec<u8>;

pub fn seq_string(seq: &[Color]) -> String {
    let s: Vec<String> = seq.iter().map(|c| c.to_string()).collect();
    format!("({})", s.join(","))
}

/// Number of pairs `k < l` with colors `(2, 1)`.
pub fn inversion_twist(seq: &[Color]) -> i64 {
    let mut twos = 0;
    let mut out = 0;
    for &c in seq {
        match c {
            Color::Two => twos += 1,
            Color::One => out += twos,
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramOperator {
    source: Vec<Color>,
    target: Vec<Color>,
    terms: BTreeMap<Perm, RationalCoeff>,
}

/// Graded degree of an operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree {
    Zero,
    Homogeneous(i64),
    Inhomogeneous,
}

fn identity_perm(n: usize) -> Perm {
    (0..n as u8).collect()
}

fn transposition(n: usize, k: usize) -> Perm {
    let mut w = identity_perm(n);
    w.swap(k, k + 1);
    w
}

fn check_len(n: usize) -> Result<(), OperatorError> {
    if n > MAX_VARS {
        Err(OperatorError::TooManyStrands(n))
    } else {
        Ok(())
    }
}

impl DiagramOperator {
    pub fn zero(source: Vec<Color>, target: Vec<Color>) -> Self {
        DiagramOperator { source, target, terms: BTreeMap::new() }
    }

    pub fn identity(seq: &[Color]) -> Self {
        Self::multiplication(seq, Poly::one())
    }

    /// Multiplication by a polynomial in the strand variables.
    pub fn multiplication(seq: &[Color], p: Poly) -> Self {
        let mut op = Self::zero(seq.to_vec(), seq.to_vec());
        op.add_term(identity_perm(seq.len()), RationalCoeff::from_poly(p));
        op
    }

    pub fn dot(seq: &[Color], k: usize) -> Result<Self, OperatorError> {
        check_len(seq.len())?;
        if k >= seq.len() {
            return Err(OperatorError::Position { pos: k, len: seq.len() });
        }
        Ok(Self::multiplication(seq, Poly::var(k)))
    }

    /// Crossing of strands `k` and `k+1`.
    pub fn crossing(seq: &[Color], k: usize) -> Result<Self, OperatorError> {
        check_len(seq.len())?;
        if k + 1 >= seq.len() {
            return Err(OperatorError::Position { pos: k, len: seq.len() });
        }
        let n = seq.len();
        let mut target = seq.to_vec();
        target.swap(k, k + 1);
        let mut op = Self::zero(seq.to_vec(), target);
        match (seq[k], seq[k + 1]) {
            (l, r) if l == r => {
                let inv = RationalCoeff::inv_root(k, k + 1);
                op.add_term(identity_perm(n), inv.clone());
                op.add_term(transposition(n, k), inv.neg());
            }
            (Color::One, _) => {
                op.add_term(transposition(n, k), RationalCoeff::one());
            }
            (Color::Two, _) => {
                let f = &Poly::var(k) + &Poly::var(k + 1);
                op.add_term(transposition(n, k), RationalCoeff::from_poly(f));
            }
        }
        Ok(op)
    }

    /// `Σ_w sgn(w) · c · w` over all permutations of `block` strands of one
    /// color, as an operator on `seq` acting on positions `start..start+block`.
    pub(crate) fn antisymmetrizer(seq: &[Color], start: usize, block: usize, c: &RationalCoeff) -> Self {
        let n = seq.len();
        let mut op = Self::zero(seq.to_vec(), seq.to_vec());
        crate::partitions::for_each_permutation(block, |p: &[usize], sign: i64| {
            let mut w = identity_perm(n);
            for (k, &t) in p.iter().enumerate() {
                w[start + k] = (start + t) as u8;
            }
            let coeff = if sign < 0 { c.neg() } else { c.clone() };
            op.add_term(w, coeff);
        });
        op
    }

    pub fn source(&self) -> &[Color] {
        &self.source
    }

    pub fn target(&self) -> &[Color] {
        &self.target
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &RationalCoeff)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: Perm, c: RationalCoeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&w) {
            None => {
                self.terms.insert(w, c);
            }
            Some(old) => {
                let s = old.add(&c);
                if !s.is_zero() {
                    self.terms.insert(w, s);
                }
            }
        }
    }

    fn check_same_interface(&self, other: &Self) -> Result<(), OperatorError> {
        if self.source != other.source || self.target != other.target {
            return Err(OperatorError::Interface {
                left: format!("{}->{}", seq_string(&self.source), seq_string(&self.target)),
                right: format!("{}->{}", seq_string(&other.source), seq_string(&other.target)),
            });
        }
        Ok(())
    }

    /// `self ∘ g`: apply `g` first.
    pub fn compose(&self, g: &DiagramOperator) -> Result<DiagramOperator, OperatorError> {
        if g.target != self.source {
            return Err(OperatorError::Interface {
                left: seq_string(&g.target),
                right: seq_string(&self.source),
            });
        }
        let mut acc: BTreeMap<Perm, Vec<RationalCoeff>> = BTreeMap::new();
        for (w, q) in &self.terms {
            for (v, r) in &g.terms {
                let wv: Perm = v.iter().map(|&k| w[k as usize]).collect();
                let c = q.mul_unreduced(&r.permute(w));
                if !c.is_zero() {
                    acc.entry(wv).or_default().push(c);
                }
            }
        }
        let mut out = Self::zero(g.source.clone(), self.target.clone());
        for (w, cs) in acc {
            let s = RationalCoeff::sum(&cs);
            if !s.is_zero() {
                out.terms.insert(w, s);
            }
        }
        Ok(out)
    }

    /// Compose a bottom-to-top chain.
    pub fn chain(ops: &[DiagramOperator]) -> Result<DiagramOperator, OperatorError> {
        let mut it = ops.iter();
        let mut acc = it.next().expect("empty chain").clone();
        for op in it {
            acc = op.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Side-by-side placement, `self` on the left.
    pub fn tensor(&self, g: &DiagramOperator) -> Result<DiagramOperator, OperatorError> {
        let n = self.source.len();
        check_len(n + g.source.len())?;
        let mut source = self.source.clone();
        source.extend_from_slice(&g.source);
        let mut target = self.target.clone();
        target.extend_from_slice(&g.target);
        let mut out = Self::zero(source, target);
        for (w, q) in &self.terms {
            for (v, r) in &g.terms {
                let mut wv = w.clone();
                wv.extend(v.iter().map(|&k| k + n as u8));
                out.add_term(wv, q.mul(&r.shift_vars(n)));
            }
        }
        Ok(out)
    }

    pub fn add(&self, g: &DiagramOperator) -> Result<DiagramOperator, OperatorError> {
        self.check_same_interface(g)?;
        let mut out = self.clone();
        for (w, c) in &g.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, g: &DiagramOperator) -> Result<DiagramOperator, OperatorError> {
        self.add(&g.neg())
    }

    /// Sum of many operators with one interface.
    pub fn sum(source: &[Color], target: &[Color], ops: &[DiagramOperator]) -> Result<DiagramOperator, OperatorError> {
        let mut acc: BTreeMap<Perm, Vec<RationalCoeff>> = BTreeMap::new();
        let proto = Self::zero(source.to_vec(), target.to_vec());
        for op in ops {
            proto.check_same_interface(op)?;
            for (w, c) in &op.terms {
                acc.entry(w.clone()).or_default().push(c.clone());
            }
        }
        let mut out = proto;
        for (w, cs) in acc {
            let s = RationalCoeff::sum(&cs);
            if !s.is_zero() {
                out.terms.insert(w, s);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> DiagramOperator {
        DiagramOperator {
            source: self.source.clone(),
            target: self.target.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> DiagramOperator {
        let mut out = Self::zero(self.source.clone(), self.target.clone());
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.scale(k));
        }
        out
    }

    /// Left multiplication by a polynomial in the target variables.
    pub fn mul_poly(&self, p: &Poly) -> DiagramOperator {
        let mut out = Self::zero(self.source.clone(), self.target.clone());
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.mul_poly(p));
        }
        out
    }

    /// The image of a polynomial in the source variables.
    pub fn apply(&self, f: &Poly) -> RationalCoeff {
        let parts: Vec<RationalCoeff> =
            self.terms.iter().map(|(w, q)| q.mul_poly(&f.permute(w))).collect();
        RationalCoeff::sum(&parts)
    }

    /// Twice the polynomial degree of the coefficients, before interface shifts.
    pub fn raw_degree(&self) -> Degree {
        let mut out = None;
        for c in self.terms.values() {
            match c.homogeneous_degree() {
                None => return Degree::Inhomogeneous,
                Some(d) if out.is_some_and(|o| o != d) => return Degree::Inhomogeneous,
                Some(d) => out = Some(d),
            }
        }
        match out {
            None => Degree::Zero,
            Some(d) => Degree::Homogeneous(2 * d),
        }
    }
}

impl fmt::Display for DiagramOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}: ", seq_string(&self.source), seq_string(&self.target))?;
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let p: Vec<String> = w.iter().map(|k| (k + 1).to_string()).collect();
                format!("[{}]·{}", p.join(""), c)
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
