//! Laurent polynomials in `q` with big-integer coefficients, and the balanced
//! quantum integers, factorials and binomials built from them.
//!
//! Text form: descending exponents with explicit signs, e.g.
//! `q^2 + 1 + q^-2`, `-2q^3 + q`, `0`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::text::{Cursor, ParseError};

/// Sign choice in `q^{±k}` families (alternating sums, higher Serre sums).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn apply(self, e: i64) -> i64 {
        match self {
            Sign::Plus => e,
            Sign::Minus => -e,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "plus",
            Sign::Minus => "minus",
        })
    }
}

/// Sparse Laurent polynomial; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `c·q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        LaurentPoly { coeffs }
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// Build from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    /// The substitution `q ↦ q⁻¹`.
    pub fn bar(&self) -> Self {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// True iff every stored coefficient is positive (vacuously for zero).
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| c.is_positive())
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, -c);
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if *e == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}")?;
            }
            if *e == 1 {
                f.write_str("q")?;
            } else {
                write!(f, "q^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut cur = Cursor::new(s);
        let p = parse_laurent(&mut cur)?;
        cur.finish()?;
        Ok(p)
    }
}

/// Parse a Laurent literal at the cursor, stopping before any character that
/// cannot continue it.
pub(crate) fn parse_laurent(cur: &mut Cursor<'_>) -> Result<LaurentPoly, ParseError> {
    let mut out = LaurentPoly::zero();
    cur.skip_ws();
    let mut negative = cur.eat("-");
    loop {
        cur.skip_ws();
        let (e, c) = parse_laurent_term(cur)?;
        out.add_term(e, if negative { -c } else { c });
        cur.skip_ws();
        if cur.eat("+") {
            negative = false;
        } else if cur.eat("-") {
            negative = true;
        } else {
            return Ok(out);
        }
    }
}

fn parse_laurent_term(cur: &mut Cursor<'_>) -> Result<(i64, BigInt), ParseError> {
    let start = cur.pos();
    let coeff = match cur.digits() {
        Some(d) => d.parse::<BigInt>().map_err(|_| ParseError {
            pos: start,
            expected: "coefficient".into(),
            found: format!("'{d}'"),
        })?,
        None => BigInt::one(),
    };
    let had_digits = cur.pos() != start;
    if cur.eat("q") {
        let e = if cur.eat("^") { cur.int()? } else { 1 };
        Ok((e, coeff))
    } else if had_digits {
        Ok((0, coeff))
    } else {
        Err(cur.error("coefficient or 'q'"))
    }
}

/// Balanced quantum integer `[n] = q^{n-1} + q^{n-3} + … + q^{-(n-1)}`.
pub fn qint(n: u32) -> LaurentPoly {
    let n = n as i64;
    LaurentPoly::from_terms((0..n).map(|k| (n - 1 - 2 * k, 1)))
}

/// `[n]! = [1][2]…[n]`.
pub fn qfact(n: u32) -> LaurentPoly {
    (1..=n).fold(LaurentPoly::one(), |acc, j| &acc * &qint(j))
}

/// Balanced quantum binomial; zero outside `0 ≤ k ≤ n`.
///
/// Computed by the recursion `[n,k] = q^{-k}[n-1,k] + q^{n-k}[n-1,k-1]`.
pub fn qbinom(n: i64, k: i64) -> LaurentPoly {
    if n < 0 || k < 0 || k > n {
        return LaurentPoly::zero();
    }
    let k = k.min(n - k) as usize;
    let n = n as usize;
    // row[j] holds [m, j] for the current m.
    let mut row: Vec<LaurentPoly> = vec![LaurentPoly::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity((m + 1).min(k + 1));
        for j in 0..=m.min(k) {
            let mut v = LaurentPoly::zero();
            if j < m && j < row.len() {
                v += &row[j].shift(-(j as i64));
            }
            if j >= 1 {
                v += &row[j - 1].shift((m - j) as i64);
            }
            next.push(v);
        }
        row = next;
    }
    row.swap_remove(k)
}

/// `Σ_{k=0}^{N} (-1)^k q^{±(N-1)k} [N choose k]`, which vanishes for `N ≥ 1`.
pub fn alternating_binomial_sum(n: u32, sign: Sign) -> LaurentPoly {
    let n = n as i64;
    let mut out = LaurentPoly::zero();
    for k in 0..=n {
        let term = qbinom(n, k).shift(sign.apply((n - 1) * k));
        if k % 2 == 0 {
            out += &term;
        } else {
            out -= &term;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn quantum_integers() {
        assert!(qint(0).is_zero());
        assert!(qint(1).is_one());
        assert_eq!(qint(2), LaurentPoly::from_terms([(1, 1), (-1, 1)]));
        assert_eq!(qint(4), LaurentPoly::from_terms([(3, 1), (1, 1), (-1, 1), (-3, 1)]));
    }

    #[test]
    fn binomials() {
        assert_eq!(qbinom(2, 1), qint(2));
        assert_eq!(qbinom(4, 2), LaurentPoly::from_terms([(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)]));
        assert!(qbinom(3, 5).is_zero());
        assert!(qbinom(-1, 0).is_zero());
        assert!(qbinom(3, -1).is_zero());
        assert!(qbinom(0, 0).is_one());
    }

    #[test]
    fn factorial_identity() {
        for n in 0..=8u32 {
            for k in 0..=n {
                let lhs = &(&qbinom(n as i64, k as i64) * &qfact(k)) * &qfact(n - k);
                assert_eq!(lhs, qfact(n), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn binomial_symmetries() {
        for n in 0..=10 {
            for k in 0..=n {
                assert_eq!(qbinom(n, k), qbinom(n, n - k));
                assert_eq!(qbinom(n, k).bar(), qbinom(n, k));
            }
        }
    }

    #[test]
    fn alternating_sums() {
        assert!(alternating_binomial_sum(0, Sign::Plus).is_one());
        for n in 1..=8 {
            assert!(alternating_binomial_sum(n, Sign::Plus).is_zero());
            assert!(alternating_binomial_sum(n, Sign::Minus).is_zero());
        }
    }

    #[test]
    fn nonnegativity() {
        assert!(qint(2).is_nonnegative());
        assert!(!lp("q - 1").is_nonnegative());
        assert!(LaurentPoly::zero().is_nonnegative());
    }

    #[test]
    fn bar_examples() {
        assert_eq!(lp("q^2 + 1").bar(), lp("1 + q^-2"));
        assert!(LaurentPoly::zero().bar().is_zero());
    }

    #[test]
    fn text_form() {
        assert_eq!(qbinom(4, 2).to_string(), "q^4 + q^2 + 2 + q^-2 + q^-4");
        assert_eq!(qint(2).to_string(), "q + q^-1");
        assert_eq!(lp("-2q^3 + q - 5 - q^-1").to_string(), "-2q^3 + q - 5 - q^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(lp("q + q"), LaurentPoly::monomial(2, 1));
        assert_eq!(lp(" 3q^-2").to_string(), "3q^-2");
        assert!("3 q".parse::<LaurentPoly>().is_err());
        assert!("q^".parse::<LaurentPoly>().is_err());
        assert!("+".parse::<LaurentPoly>().is_err());
    }
}
