//! Sparse multivariate polynomials over big integers in `x_0 … x_{MAX_VARS-1}`.
//!
//! Variables are 0-indexed internally; the text form prints them 1-indexed
//! (`x1`, `x2`, …). Exact division by root factors `x_i - x_j` is the only
//! division supported, which is all the operator engine and the bialternant
//! formula need.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub const MAX_VARS: usize = 12;

/// Exponent vector.
pub type Mono = [u16; MAX_VARS];

pub const UNIT_MONO: Mono = [0; MAX_VARS];

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    terms: BTreeMap<Mono, BigInt>,
}

fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    let mut out = *a;
    for (o, e) in out.iter_mut().zip(b) {
        *o += e;
    }
    out
}

fn mono_degree(m: &Mono) -> u32 {
    m.iter().map(|&e| e as u32).sum()
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_mono(UNIT_MONO, c)
    }

    pub fn from_mono(m: Mono, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    /// `x_i`.
    pub fn var(i: usize) -> Self {
        Self::var_pow(i, 1)
    }

    pub fn var_pow(i: usize, k: u16) -> Self {
        assert!(i < MAX_VARS, "variable index {i} out of range");
        let mut m = UNIT_MONO;
        m[i] = k;
        Self::from_mono(m, 1)
    }

    /// Monomial `Π x_i^{e_i}` from a short exponent list.
    pub fn monomial(exps: &[u16]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = UNIT_MONO;
        m[..exps.len()].copy_from_slice(exps);
        Self::from_mono(m, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&UNIT_MONO).is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Lexicographically largest term (`x_0` most significant).
    pub fn leading_term(&self) -> Option<(&Mono, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Mono, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn mul_mono(&self, m: &Mono) -> Self {
        Poly { terms: self.terms.iter().map(|(k, c)| (mono_mul(k, m), c.clone())).collect() }
    }

    pub fn mul_var(&self, i: usize) -> Self {
        let mut m = UNIT_MONO;
        m[i] = 1;
        self.mul_mono(&m)
    }

    /// `self · (x_i - x_j)`.
    pub fn mul_linear(&self, i: usize, j: usize) -> Self {
        let mut out = self.mul_var(i);
        out -= &self.mul_var(j);
        out
    }

    /// Exact quotient by `x_i - x_j`, or `None` if it does not divide.
    ///
    /// Terms are grouped by their exponents away from `x_i, x_j` and by
    /// `s = e_i + e_j`; each group is a binary form `Σ c_k x_i^k x_j^{s-k}`,
    /// divisible iff `Σ c_k = 0`, with quotient coefficients the suffix sums
    /// `q_{k-1} = Σ_{t ≥ k} c_t`.
    pub fn div_linear(&self, i: usize, j: usize) -> Option<Poly> {
        debug_assert!(i != j);
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let mut items: Vec<(Mono, u16, u16, &BigInt)> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut rest = *m;
                rest[i] = 0;
                rest[j] = 0;
                (rest, m[i] + m[j], m[i], c)
            })
            .collect();
        // Within a group, descending in the power of x_i.
        items.sort_unstable_by(|a, b| (a.0, a.1, b.2).cmp(&(b.0, b.1, a.2)));
        let mut out = Vec::with_capacity(items.len());
        let mut start = 0;
        while start < items.len() {
            let mut end = start;
            while end < items.len() && items[end].0 == items[start].0 && items[end].1 == items[start].1 {
                end += 1;
            }
            let (rest, s) = (items[start].0, items[start].1);
            let mut acc = BigInt::zero();
            let mut idx = start;
            for k in (1..=s).rev() {
                if idx < end && items[idx].2 == k {
                    acc += items[idx].3;
                    idx += 1;
                }
                if !acc.is_zero() {
                    let mut m = rest;
                    m[i] = k - 1;
                    m[j] = s - k;
                    out.push((m, acc.clone()));
                }
            }
            if idx < end {
                acc += items[idx].3;
            }
            if !acc.is_zero() {
                return None;
            }
            start = end;
        }
        Some(Poly { terms: out.into_iter().collect() })
    }

    /// Rename variables `x_k ↦ x_{w[k]}` for `k < w.len()`.
    pub fn permute(&self, w: &[u8]) -> Self {
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut r = *m;
            for (k, &wk) in w.iter().enumerate() {
                r[wk as usize] = m[k];
            }
            out.insert(r, c.clone());
        }
        Poly { terms: out }
    }

    /// Rename `x_k ↦ x_{k+offset}`.
    pub fn shift_vars(&self, offset: usize) -> Self {
        if offset == 0 {
            return self.clone();
        }
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut r = UNIT_MONO;
            for k in 0..MAX_VARS {
                if m[k] != 0 {
                    assert!(k + offset < MAX_VARS, "variable shift out of range");
                    r[k + offset] = m[k];
                }
            }
            out.insert(r, c.clone());
        }
        Poly { terms: out }
    }

    /// Number of leading variable slots that may be nonzero.
    pub fn var_span(&self) -> usize {
        self.terms
            .keys()
            .map(|m| m.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1))
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(mono_degree).max()
    }

    /// Common total degree of all terms, if homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(mono_degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// Divide every coefficient by `c`, which must divide all of them.
    pub fn div_exact_scalar(&self, c: &BigInt) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| {
                    debug_assert!((x % c).is_zero());
                    (*m, x / c)
                })
                .collect(),
        }
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(mono_mul(m1, m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let vars: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(k, &e)| if e == 1 { format!("x{}", k + 1) } else { format!("x{}^{}", k + 1, e) })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                f.write_str(&vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Poly {
        Poly::var(i)
    }

    #[test]
    fn linear_division_roundtrip() {
        let f = &(&x(0) * &x(0)) + &(&x(1) * &x(2));
        let g = f.mul_linear(0, 2);
        assert_eq!(g.div_linear(0, 2), Some(f.clone()));
        assert_eq!(g.div_linear(2, 0), Some(-&f));
        assert_eq!(f.div_linear(0, 1), None);
        assert_eq!(Poly::one().div_linear(0, 1), None);
    }

    #[test]
    fn difference_of_squares() {
        let f = &(&x(0) * &x(0)) - &(&x(1) * &x(1));
        assert_eq!(f.div_linear(0, 1), Some(&x(0) + &x(1)));
        assert_eq!(f.div_linear(1, 0), Some(-&(&x(0) + &x(1))));
    }

    #[test]
    fn permute_and_shift() {
        let f = &(&x(0) * &x(0)) + &x(1);
        assert_eq!(f.permute(&[1, 0]), &(&x(1) * &x(1)) + &x(0));
        assert_eq!(f.shift_vars(2), &(&x(2) * &x(2)) + &x(3));
        assert_eq!(f.var_span(), 2);
        assert_eq!(f.homogeneous_degree(), None);
    }

    #[test]
    fn display() {
        let f = &(&x(0) * &x(0)).scale(&BigInt::from(3)) - &x(1);
        assert_eq!(f.to_string(), "3*x1^2 - x2");
    }
}
