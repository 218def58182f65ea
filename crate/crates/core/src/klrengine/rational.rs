//! Rational functions whose denominators are products of root factors
//! `x_i - x_j` (`i < j`).
//!
//! Every coefficient produced by dots, divided differences and permutations
//! has this shape, so the reduced form is canonical: the numerator is not
//! divisible by any factor that remains in the denominator, and denominator
//! factors are oriented `i < j`. Equality is therefore structural.

use std::fmt;

use num_bigint::BigInt;

use crate::poly::{Poly, MAX_VARS};

const PAIRS: usize = MAX_VARS * (MAX_VARS - 1) / 2;

const fn pair_table() -> [(u8, u8); PAIRS] {
    let mut out = [(0u8, 0u8); PAIRS];
    let mut k = 0;
    let mut i = 0;
    while i < MAX_VARS {
        let mut j = i + 1;
        while j < MAX_VARS {
            out[k] = (i as u8, j as u8);
            k += 1;
            j += 1;
        }
        i += 1;
    }
    out
}

const PAIR_OF: [(u8, u8); PAIRS] = pair_table();

fn pair_index(i: u8, j: u8) -> usize {
    debug_assert!(i < j && (j as usize) < MAX_VARS);
    let (i, j) = (i as usize, j as usize);
    i * (2 * MAX_VARS - i - 1) / 2 + (j - i - 1)
}

/// Denominator `Π (x_i - x_j)^e` with `i < j`, stored densely.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootDenominator {
    exps: [u8; PAIRS],
}

impl Default for RootDenominator {
    fn default() -> Self {
        RootDenominator { exps: [0; PAIRS] }
    }
}

impl RootDenominator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, i: u8, j: u8) -> u32 {
        self.exps[pair_index(i, j)] as u32
    }

    /// Multiply by `(x_i - x_j)^e`; `i < j`.
    pub fn insert(&mut self, i: u8, j: u8, e: u32) {
        let slot = &mut self.exps[pair_index(i, j)];
        *slot = u8::try_from(*slot as u32 + e).expect("root exponent overflow");
    }

    pub fn is_empty(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    /// Nonzero factors `((i, j), e)`.
    pub fn iter(&self) -> impl Iterator<Item = ((u8, u8), u32)> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e != 0).map(|(k, &e)| (PAIR_OF[k], e as u32))
    }

    fn lcm(&mut self, other: &RootDenominator) {
        for (a, &b) in self.exps.iter_mut().zip(&other.exps) {
            *a = (*a).max(b);
        }
    }

    fn add(&mut self, other: &RootDenominator) {
        for (a, &b) in self.exps.iter_mut().zip(&other.exps) {
            *a = a.checked_add(b).expect("root exponent overflow");
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalCoeff {
    num: Poly,
    den: RootDenominator,
}

impl RationalCoeff {
    pub fn zero() -> Self {
        RationalCoeff { num: Poly::zero(), den: RootDenominator::new() }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalCoeff { num: p, den: RootDenominator::new() }
    }

    /// `num / Π (x_i - x_j)^e` from factors in either orientation, reduced.
    pub fn new(num: Poly, factors: &[((u8, u8), u32)]) -> Self {
        let mut out = RationalCoeff { num, den: RootDenominator::new() };
        let mut negate = false;
        for &((i, j), e) in factors {
            if e == 0 {
                continue;
            }
            assert!(i != j, "degenerate root factor");
            if i > j && e % 2 == 1 {
                negate = !negate;
            }
            out.den.insert(i.min(j), i.max(j), e);
        }
        if negate {
            out.num = -&out.num;
        }
        out.reduce();
        out
    }

    /// `num / den` for an oriented denominator, reduced.
    pub fn with_denominator(num: Poly, den: RootDenominator) -> Self {
        let mut out = RationalCoeff { num, den };
        out.reduce();
        out
    }

    /// `1 / (x_i - x_j)`.
    pub fn inv_root(i: usize, j: usize) -> Self {
        Self::new(Poly::one(), &[((i as u8, j as u8), 1)])
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &RootDenominator {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = RootDenominator::new();
            return;
        }
        for (k, &(i, j)) in PAIR_OF.iter().enumerate() {
            while self.den.exps[k] > 0 {
                match self.num.div_linear(i as usize, j as usize) {
                    Some(q) => {
                        self.num = q;
                        self.den.exps[k] -= 1;
                    }
                    None => break,
                }
            }
        }
    }

    fn expand_factors(p: &Poly, to: &RootDenominator, from: &RootDenominator) -> Poly {
        let mut out = p.clone();
        for (k, &(i, j)) in PAIR_OF.iter().enumerate() {
            for _ in from.exps[k]..to.exps[k] {
                out = out.mul_linear(i as usize, j as usize);
            }
        }
        out
    }

    /// Sum of many terms over one common denominator, reduced once.
    pub fn sum(terms: &[RationalCoeff]) -> RationalCoeff {
        if terms.is_empty() {
            return RationalCoeff::zero();
        }
        let mut lcm = RootDenominator::new();
        for t in terms {
            lcm.lcm(&t.den);
        }
        let mut num = Poly::zero();
        for t in terms {
            if t.den == lcm {
                num += &t.num;
            } else {
                num += &Self::expand_factors(&t.num, &lcm, &t.den);
            }
        }
        let mut out = RationalCoeff { num, den: lcm };
        out.reduce();
        out
    }

    pub fn add(&self, other: &RationalCoeff) -> RationalCoeff {
        Self::sum(&[self.clone(), other.clone()])
    }

    pub fn mul(&self, other: &RationalCoeff) -> RationalCoeff {
        if self.is_zero() || other.is_zero() {
            return RationalCoeff::zero();
        }
        let num = &self.num * &other.num;
        let mut den = self.den;
        den.add(&other.den);
        let mut out = RationalCoeff { num, den };
        if !self.den.is_empty() || !other.den.is_empty() {
            out.reduce();
        }
        out
    }

    /// Product without cancelling common factors; callers reduce via [`RationalCoeff::sum`].
    pub(crate) fn mul_unreduced(&self, other: &RationalCoeff) -> RationalCoeff {
        if self.is_zero() || other.is_zero() {
            return RationalCoeff::zero();
        }
        let mut den = self.den;
        den.add(&other.den);
        RationalCoeff { num: &self.num * &other.num, den }
    }

    pub fn mul_poly(&self, p: &Poly) -> RationalCoeff {
        self.mul(&RationalCoeff::from_poly(p.clone()))
    }

    pub fn neg(&self) -> RationalCoeff {
        RationalCoeff { num: -&self.num, den: self.den }
    }

    pub fn scale(&self, c: &BigInt) -> RationalCoeff {
        let mut out = RationalCoeff { num: self.num.scale(c), den: self.den };
        if out.num.is_zero() {
            out.den = RootDenominator::new();
        }
        out
    }

    /// Rename `x_k ↦ x_{w[k]}`.
    pub fn permute(&self, w: &[u8]) -> RationalCoeff {
        let mut num = self.num.permute(w);
        let mut den = RootDenominator::new();
        let mut negate = false;
        for (&e, &(i, j)) in self.den.exps.iter().zip(&PAIR_OF) {
            if e == 0 {
                continue;
            }
            let (a, b) = (w[i as usize], w[j as usize]);
            if a > b && e % 2 == 1 {
                negate = !negate;
            }
            den.exps[pair_index(a.min(b), a.max(b))] = e;
        }
        if negate {
            num = -&num;
        }
        RationalCoeff { num, den }
    }

    /// Rename `x_k ↦ x_{k+offset}`.
    pub fn shift_vars(&self, offset: usize) -> RationalCoeff {
        let mut den = RootDenominator::new();
        for ((i, j), e) in self.den.iter() {
            den.insert(i + offset as u8, j + offset as u8, e);
        }
        RationalCoeff { num: self.num.shift_vars(offset), den }
    }

    /// `deg(num) - deg(den)` when the numerator is homogeneous.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let d = self.num.homogeneous_degree()? as i64;
        Some(d - self.den.degree() as i64)
    }
}

impl fmt::Display for RationalCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        let den: Vec<String> = self
            .den
            .iter()
            .map(|((i, j), e)| {
                if e == 1 {
                    format!("(x{}-x{})", i + 1, j + 1)
                } else {
                    format!("(x{}-x{})^{e}", i + 1, j + 1)
                }
            })
            .collect();
        write!(f, "({}) / {}", self.num, den.join(""))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Poly {
        Poly::var(i)
    }

    #[test]
    fn reduction_cancels_root_factors() {
        let num = &(&x(0) * &x(0)) - &(&x(1) * &x(1));
        let r = RationalCoeff::new(num, &[((0, 1), 1)]);
        assert!(r.is_polynomial());
        assert_eq!(r.numerator(), &(&x(0) + &x(1)));
    }

    #[test]
    fn orientation_is_normalized() {
        let a = RationalCoeff::new(Poly::one(), &[((1, 0), 1)]);
        let b = RationalCoeff::inv_root(0, 1).neg();
        assert_eq!(a, b);
    }

    #[test]
    fn sums_cancel() {
        // 1/(x1-x2) + 1/(x2-x1) = 0
        let s = RationalCoeff::sum(&[RationalCoeff::inv_root(0, 1), RationalCoeff::inv_root(1, 0)]);
        assert!(s.is_zero());
        // x1/(x1-x2) - x2/(x1-x2) = 1
        let a = RationalCoeff::inv_root(0, 1).mul_poly(&x(0));
        let b = RationalCoeff::inv_root(0, 1).mul_poly(&x(1)).neg();
        assert_eq!(a.add(&b), RationalCoeff::one());
    }

    #[test]
    fn permutation_flips_orientation() {
        let r = RationalCoeff::inv_root(0, 1).mul_poly(&x(0));
        let p = r.permute(&[1, 0]);
        // x2/(x2-x1) = -x2/(x1-x2)
        assert_eq!(p, RationalCoeff::inv_root(0, 1).mul_poly(&x(1)).neg());
        assert_eq!(r.homogeneous_degree(), Some(0));
    }
}
