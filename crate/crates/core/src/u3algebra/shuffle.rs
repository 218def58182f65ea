//! Quantum shuffle embedding of `U⁺_q(sl3)`, used as an independent check on
//! the rewriting engine.
//!
//! Letters are colors; the product of words `u ⧢ v` sums over interleavings,
//! weighting each by `q^{-Σ x·y}` over pairs where a letter `y` of `v` lands
//! before a letter `x` of `u`. Under this braiding the quantum Serre relation
//! holds in its balanced form, and `E_i ↦ [i]` extends to an injective
//! algebra map with `E_i^(a) ↦ q^{-a(a-1)/2} [i^a]`.

use std::collections::BTreeMap;
use std::fmt;

use crate::qlaurent::LaurentPoly;
use crate::u3algebra::{AlgElem, CanonicalExpansion, Monomial};
use crate::Color;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ShuffleElem {
    terms: BTreeMap<Vec<Color>, LaurentPoly>,
}

impl ShuffleElem {
    pub fn zero() -> Self {
        ShuffleElem::default()
    }

    pub fn word(w: Vec<Color>, c: LaurentPoly) -> Self {
        let mut s = ShuffleElem::zero();
        s.add_term(w, c);
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Vec<Color>, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&mut self, other: &ShuffleElem) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> ShuffleElem {
        let mut out = ShuffleElem::zero();
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    pub fn shuffle(&self, other: &ShuffleElem) -> ShuffleElem {
        let mut out = ShuffleElem::zero();
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                let coeff = cu * cv;
                for (w, e) in shuffle_words(u, v) {
                    out.add_term(w, coeff.shift(e));
                }
            }
        }
        out
    }

    pub fn coeff(&self, w: &[Color]) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }
}

impl fmt::Display for ShuffleElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let s: String = w.iter().map(|c| c.to_string()).collect();
                format!("({c})[{s}]")
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// All interleavings of `u` and `v` with their `q`-exponents (with multiplicity).
fn shuffle_words(u: &[Color], v: &[Color]) -> Vec<(Vec<Color>, i64)> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(u.len() + v.len());
    go(u, v, 0, &mut cur, &mut out);
    out
}

fn go(u: &[Color], v: &[Color], e: i64, cur: &mut Vec<Color>, out: &mut Vec<(Vec<Color>, i64)>) {
    if u.is_empty() && v.is_empty() {
        out.push((cur.clone(), e));
        return;
    }
    if let Some((&x, rest)) = u.split_first() {
        cur.push(x);
        go(rest, v, e, cur, out);
        cur.pop();
    }
    if let Some((&y, rest)) = v.split_first() {
        // y jumps ahead of every remaining letter of u.
        let jump: i64 = u.iter().map(|&x| x.pairing(y)).sum();
        cur.push(y);
        go(u, rest, e - jump, cur, out);
        cur.pop();
    }
}

/// Image of `E_i^(a)`.
pub fn embed_letter(color: Color, a: u32) -> ShuffleElem {
    let a = a as i64;
    ShuffleElem::word(vec![color; a as usize], LaurentPoly::q_pow(-a * (a - 1) / 2))
}

pub fn embed_monomial(m: &Monomial) -> ShuffleElem {
    let mut acc = ShuffleElem::word(Vec::new(), LaurentPoly::one());
    for &(c, e) in m.letters() {
        acc = acc.shuffle(&embed_letter(c, e));
    }
    acc
}

pub fn embed(v: &AlgElem) -> ShuffleElem {
    let mut out = ShuffleElem::zero();
    for (m, c) in v.terms() {
        out.add(&embed_monomial(m).scale(c));
    }
    out
}

pub fn embed_canonical(v: &CanonicalExpansion) -> ShuffleElem {
    embed(&v.to_alg())
}
