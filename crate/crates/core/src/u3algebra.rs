//! The integral form of `U⁺_q(sl3)`: divided-power words, their products and
//! the rewriting onto the canonical basis `B = { E_i^(a) E_j^(b) E_i^(c) : b ≥ a+c }`.
//!
//! Words print as whitespace-separated letters `1^2 2^1 1^1`; the empty word
//! prints as `unit`.

pub mod shuffle;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::qlaurent::{qbinom, LaurentPoly, Sign};
use crate::Color;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("Serre rewrite needs b <= a+c, got (a,b,c) = ({a},{b},{c})")]
    SerreOutOfRange { a: u32, b: u32, c: u32 },
    #[error("({lead}: {a},{b},{c}) is not in the canonical basis: need b >= a+c")]
    NotCanonical { lead: Color, a: u32, b: u32, c: u32 },
    #[error("higher Serre sum needs m > n > 0, got m={m}, n={n}")]
    HigherSerreRange { m: u32, n: u32 },
}

/// A word of divided powers, not necessarily normalized.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    pub letters: Vec<(Color, u32)>,
}

impl Word {
    pub fn new(letters: Vec<(Color, u32)>) -> Self {
        Word { letters }
    }

    pub fn total_exponent(&self) -> u32 {
        self.letters.iter().map(|l| l.1).sum()
    }
}

fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[(Color, u32)]) -> fmt::Result {
    if letters.is_empty() {
        return f.write_str("unit");
    }
    for (i, (c, e)) in letters.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{c}^{e}")?;
    }
    Ok(())
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters)
    }
}

/// A word with no zero exponents and no two adjacent letters of equal color.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    letters: Vec<(Color, u32)>,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial::default()
    }

    /// `E_color^(e)`.
    pub fn letter(color: Color, e: u32) -> Self {
        Monomial::normalize(&[(color, e)]).0
    }

    /// Drop zero exponents and merge equal neighbours; the returned scalar is
    /// the product of the binomials picked up by merging.
    pub fn normalize(letters: &[(Color, u32)]) -> (Monomial, LaurentPoly) {
        let mut out: Vec<(Color, u32)> = Vec::with_capacity(letters.len());
        let mut coeff = LaurentPoly::one();
        for &(c, e) in letters {
            if e == 0 {
                continue;
            }
            match out.last_mut() {
                Some((lc, le)) if *lc == c => {
                    let (sum, factor) = merge_same_color(*le, e);
                    *le = sum;
                    coeff = &coeff * &factor;
                }
                _ => out.push((c, e)),
            }
        }
        (Monomial { letters: out }, coeff)
    }

    pub fn letters(&self) -> &[(Color, u32)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn total_exponent(&self) -> u32 {
        self.letters.iter().map(|l| l.1).sum()
    }

    pub fn to_word(&self) -> Word {
        Word { letters: self.letters.clone() }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters)
    }
}

/// `E_i^(a) E_i^(b) = [a+b choose a] E_i^(a+b)`.
pub fn merge_same_color(a: u32, b: u32) -> (u32, LaurentPoly) {
    (a + b, qbinom((a + b) as i64, a as i64))
}

/// Element `E_lead^(a) E_other^(b) E_lead^(c)` of the canonical basis.
///
/// The stored key is unique: when `b = a+c` the two equal presentations are
/// represented with `lead = 1`, and degenerate words (fewer than three
/// letters) are assigned the lead color that makes them fit `b ≥ a+c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct CanonicalElem {
    pub lead: Color,
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl CanonicalElem {
    pub fn new(lead: Color, a: u32, b: u32, c: u32) -> Result<Self, AlgebraError> {
        if b < a + c {
            return Err(AlgebraError::NotCanonical { lead, a, b, c });
        }
        if b == a + c && lead == Color::Two {
            return Ok(CanonicalElem { lead: Color::One, a: c, b, c: a });
        }
        Ok(CanonicalElem { lead, a, b, c })
    }

    pub fn unit() -> Self {
        CanonicalElem { lead: Color::One, a: 0, b: 0, c: 0 }
    }

    /// Key of a normalized word if it lies in `B`.
    pub fn from_monomial(m: &Monomial) -> Option<Self> {
        let l = m.letters();
        let (lead, a, b, c) = match l {
            [] => (Color::One, 0, 0, 0),
            [(x, e)] => (x.other(), 0, *e, 0),
            [(x, a), (y, b)] => {
                if b >= a {
                    (*x, *a, *b, 0)
                } else {
                    (*y, 0, *a, *b)
                }
            }
            [(x, a), (_, b), (_, c)] => (*x, *a, *b, *c),
            _ => return None,
        };
        CanonicalElem::new(lead, a, b, c).ok()
    }

    pub fn to_monomial(&self) -> Monomial {
        Monomial::normalize(&[(self.lead, self.a), (self.lead.other(), self.b), (self.lead, self.c)]).0
    }
}

impl fmt::Display for CanonicalElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_monomial())
    }
}

fn write_sum<'a, K: fmt::Display + 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a K, &'a LaurentPoly)>,
) -> fmt::Result {
    let mut any = false;
    for (k, c) in terms {
        if any {
            f.write_str(" + ")?;
        }
        any = true;
        if c.is_one() {
            write!(f, "{k}")?;
        } else {
            write!(f, "({c}) {k}")?;
        }
    }
    if !any {
        f.write_str("0")?;
    }
    Ok(())
}

/// Finite `LaurentPoly`-combination of normalized words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgElem {
    terms: BTreeMap<Monomial, LaurentPoly>,
}

impl AlgElem {
    pub fn zero() -> Self {
        AlgElem::default()
    }

    pub fn one() -> Self {
        Self::from_monomial(Monomial::unit())
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut e = AlgElem::zero();
        e.add_term(m, LaurentPoly::one());
        e
    }

    /// The product of the letters, merging equal neighbours.
    pub fn from_letters(letters: &[(Color, u32)]) -> Self {
        let (m, c) = Monomial::normalize(letters);
        let mut e = AlgElem::zero();
        e.add_term(m, c);
        e
    }

    pub fn add_term(&mut self, m: Monomial, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&mut self, other: &AlgElem) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> AlgElem {
        let mut out = AlgElem::zero();
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    /// Product by concatenation (no rewriting).
    pub fn concat(&self, other: &AlgElem) -> AlgElem {
        let mut out = AlgElem::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let letters: Vec<_> = m1.letters.iter().chain(&m2.letters).copied().collect();
                let (m, f) = Monomial::normalize(&letters);
                out.add_term(m, &(c1 * c2) * &f);
            }
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, self.terms.iter())
    }
}

/// Finite `LaurentPoly`-combination of canonical basis elements.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CanonicalExpansion {
    terms: BTreeMap<CanonicalElem, LaurentPoly>,
}

impl CanonicalExpansion {
    pub fn zero() -> Self {
        CanonicalExpansion::default()
    }

    pub fn add_term(&mut self, k: CanonicalElem, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CanonicalElem, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, k: &CanonicalElem) -> LaurentPoly {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Every coefficient lies in `N[q, q⁻¹]`.
    pub fn is_positive(&self) -> bool {
        self.terms.values().all(LaurentPoly::is_nonnegative)
    }

    /// The same element written over representative words.
    pub fn to_alg(&self) -> AlgElem {
        let mut out = AlgElem::zero();
        for (k, c) in &self.terms {
            out.add_term(k.to_monomial(), c.clone());
        }
        out
    }
}

impl fmt::Display for CanonicalExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, self.terms.iter())
    }
}

/// Which rewritable window to act on first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    Leftmost,
    Rightmost,
}

/// `E_i^(a) E_j^(b) E_i^(c) = Σ_{p+r=b, p≤c, r≤a} [a+c-b choose c-p] E_j^(p) E_i^(a+c) E_j^(r)`
/// for `b ≤ a+c`, with `i = lead`.
pub fn serre_rewrite(a: u32, b: u32, c: u32, lead: Color) -> Result<AlgElem, AlgebraError> {
    if b > a + c {
        return Err(AlgebraError::SerreOutOfRange { a, b, c });
    }
    let other = lead.other();
    let mut out = AlgElem::zero();
    for p in 0..=b.min(c) {
        let r = b - p;
        if r > a {
            continue;
        }
        let coeff = qbinom((a + c - b) as i64, (c - p) as i64);
        let (m, f) = Monomial::normalize(&[(other, p), (lead, a + c), (other, r)]);
        out.add_term(m, &coeff * &f);
    }
    Ok(out)
}

/// Index of a window `(k, k+1, k+2)` whose middle exponent is below the sum of
/// its outer exponents.
pub(crate) fn find_window(letters: &[(Color, u32)], strategy: Strategy) -> Option<usize> {
    if letters.len() < 3 {
        return None;
    }
    let ok = |k: usize| letters[k + 1].1 < letters[k].1 + letters[k + 2].1;
    match strategy {
        Strategy::Leftmost => (0..letters.len() - 2).find(|&k| ok(k)),
        Strategy::Rightmost => (0..letters.len() - 2).rev().find(|&k| ok(k)),
    }
}

/// Rewrite onto the canonical basis with the leftmost-window strategy.
pub fn canonicalize(v: &AlgElem) -> CanonicalExpansion {
    canonicalize_with(v, Strategy::Leftmost)
}

pub fn canonicalize_with(v: &AlgElem, strategy: Strategy) -> CanonicalExpansion {
    let mut out = CanonicalExpansion::zero();
    let mut pending: BTreeMap<Monomial, LaurentPoly> = v.terms.clone();
    while let Some((m, c)) = pending.pop_last() {
        if let Some(k) = CanonicalElem::from_monomial(&m) {
            out.add_term(k, c);
            continue;
        }
        let l = &m.letters;
        let k = find_window(l, strategy).expect("a non-canonical word has a rewritable window");
        let (x, a) = l[k];
        let b = l[k + 1].1;
        let cc = l[k + 2].1;
        let replacement = serre_rewrite(a, b, cc, x).expect("window satisfies b < a+c");
        for (mid, coeff) in replacement.terms() {
            let letters: Vec<_> =
                l[..k].iter().chain(mid.letters.iter()).chain(l[k + 3..].iter()).copied().collect();
            let (w, f) = Monomial::normalize(&letters);
            let total = &(&c * coeff) * &f;
            if total.is_zero() {
                continue;
            }
            let slot = pending.entry(w.clone()).or_default();
            *slot += &total;
            if slot.is_zero() {
                pending.remove(&w);
            }
        }
    }
    out
}

/// Concatenate and rewrite.
pub fn multiply(u: &AlgElem, v: &AlgElem) -> CanonicalExpansion {
    canonicalize(&u.concat(v))
}

/// `Σ_{r=0}^{m} (-1)^r q^{±(m-n-1)r} E_lead^(m-r) E_other^(n) E_lead^(r)`, before rewriting.
pub fn higher_serre_raw(m: u32, n: u32, sign: Sign, lead: Color) -> Result<AlgElem, AlgebraError> {
    if !(m > n && n > 0) {
        return Err(AlgebraError::HigherSerreRange { m, n });
    }
    let mut out = AlgElem::zero();
    for r in 0..=m {
        let mut c = LaurentPoly::q_pow(sign.apply((m as i64 - n as i64 - 1) * r as i64));
        if r % 2 == 1 {
            c = -c;
        }
        out.add(&AlgElem::from_letters(&[(lead, m - r), (lead.other(), n), (lead, r)]).scale(&c));
    }
    Ok(out)
}

/// The canonical expansion of the higher Serre sum; always zero.
pub fn higher_serre_sum(m: u32, n: u32, sign: Sign, lead: Color) -> Result<CanonicalExpansion, AlgebraError> {
    Ok(canonicalize(&higher_serre_raw(m, n, sign, lead)?))
}

/// All words with alternating or repeated letters of total exponent exactly `n`,
/// as compositions of `n` with a color per part.
pub fn words_of_exponent(n: u32) -> Vec<Word> {
    fn go(rem: u32, cur: &mut Vec<(Color, u32)>, out: &mut Vec<Word>) {
        if rem == 0 {
            out.push(Word::new(cur.clone()));
            return;
        }
        for e in 1..=rem {
            for color in Color::ALL {
                cur.push((color, e));
                go(rem - e, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

/// Scalar helper: `c` as a constant Laurent polynomial.
pub fn scalar(c: i64) -> LaurentPoly {
    LaurentPoly::constant(BigInt::from(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use Color::{One, Two};

    fn word(l: &[(Color, u32)]) -> AlgElem {
        AlgElem::from_letters(l)
    }

    fn ce(lead: Color, a: u32, b: u32, c: u32) -> CanonicalElem {
        CanonicalElem::new(lead, a, b, c).unwrap()
    }

    #[test]
    fn merge_examples() {
        assert_eq!(merge_same_color(1, 1), (2, qbinom(2, 1)));
        assert_eq!(merge_same_color(2, 3), (5, qbinom(5, 2)));
        assert_eq!(merge_same_color(0, 4), (4, LaurentPoly::one()));
    }

    #[test]
    fn serre_examples() {
        let s = serre_rewrite(1, 1, 1, One).unwrap();
        let mut expect = word(&[(One, 2), (Two, 1)]);
        expect.add(&word(&[(Two, 1), (One, 2)]));
        assert_eq!(s, expect);

        let s = serre_rewrite(2, 1, 1, One).unwrap();
        let mut expect = word(&[(One, 3), (Two, 1)]).scale(&qbinom(2, 1));
        expect.add(&word(&[(Two, 1), (One, 3)]));
        assert_eq!(s, expect);

        assert_eq!(serre_rewrite(1, 2, 1, One).unwrap(), word(&[(Two, 1), (One, 2), (Two, 1)]));
        assert!(serre_rewrite(1, 3, 1, One).is_err());
    }

    #[test]
    fn canonical_keys_are_unique() {
        for lead in Color::ALL {
            for a in 0..4 {
                for c in 0..4 {
                    for b in a + c..a + c + 3 {
                        let k = ce(lead, a, b, c);
                        assert_eq!(CanonicalElem::from_monomial(&k.to_monomial()), Some(k));
                    }
                }
            }
        }
        assert_eq!(ce(Two, 1, 2, 1), ce(One, 1, 2, 1));
        assert_eq!(ce(Two, 2, 3, 1), ce(One, 1, 3, 2));
        assert_eq!(CanonicalElem::from_monomial(&Monomial::unit()), Some(CanonicalElem::unit()));
    }

    #[test]
    fn canonicalize_examples() {
        let e = canonicalize(&word(&[(One, 1), (Two, 1), (One, 1)]));
        assert_eq!(e.to_string(), "1^2 2^1 + 2^1 1^2");
        assert!(e.is_positive());

        let e = canonicalize(&word(&[(One, 1), (Two, 2), (One, 1)]));
        let mut expect = CanonicalExpansion::zero();
        expect.add_term(ce(Two, 1, 2, 1), LaurentPoly::one());
        assert_eq!(e, expect);

        let e = canonicalize(&word(&[(One, 2)]).concat(&word(&[(One, 3)])));
        let mut expect = CanonicalExpansion::zero();
        expect.add_term(ce(Two, 0, 5, 0), qbinom(5, 2));
        assert_eq!(e, expect);
    }

    #[test]
    fn four_letter_word_follows_proof_chain() {
        // E1 E2 E1 E2 = (E1^(2)E2 + E2E1^(2)) E2 = [2] E1^(2)E2^(2) + E2 E1^(2) E2.
        let e = canonicalize(&word(&[(One, 1), (Two, 1), (One, 1), (Two, 1)]));
        let mut expect = CanonicalExpansion::zero();
        expect.add_term(ce(One, 2, 2, 0), qbinom(2, 1));
        expect.add_term(ce(Two, 1, 2, 1), LaurentPoly::one());
        assert_eq!(e, expect);
    }

    #[test]
    fn unit_is_neutral() {
        let v = word(&[(Two, 1), (One, 2)]);
        assert_eq!(multiply(&AlgElem::one(), &v), canonicalize(&v));
    }

    #[test]
    fn higher_serre_small() {
        for (m, n, s, lead) in [(2, 1, Sign::Plus, One), (3, 1, Sign::Plus, One), (3, 2, Sign::Minus, Two)] {
            assert!(higher_serre_sum(m, n, s, lead).unwrap().is_zero());
        }
        assert!(higher_serre_sum(1, 1, Sign::Plus, One).is_err());
        assert!(higher_serre_sum(2, 0, Sign::Plus, One).is_err());
    }

    #[test]
    fn word_text() {
        assert_eq!(Word::new(vec![(One, 1), (One, 1)]).to_string(), "1^1 1^1");
        assert_eq!(Monomial::unit().to_string(), "unit");
        assert_eq!(AlgElem::zero().to_string(), "0");
        let v = word(&[(One, 1), (One, 1)]);
        assert_eq!(v.to_string(), "(q + q^-1) 1^2");
    }
}
