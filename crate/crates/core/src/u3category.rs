//! Graded objects of the categorified algebra, their decomposition into the
//! indecomposables `E_i^(a) E_j^(b) E_i^(c){t}` with `b ≥ a+c`, and the
//! dotless degree spectra used to certify indecomposability.
//!
//! Object text form: `1^1 2^1 1^1 {0} (+) 2^2 1^3 {-1}`. A shift `{t}`
//! decategorifies to `q^t`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::partitions::enumerate_box;
use crate::qlaurent::LaurentPoly;
use crate::u3algebra::{find_window, AlgElem, CanonicalElem, CanonicalExpansion, Monomial, Strategy, Word};
use crate::Color;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CategoryError {
    #[error("E^({a}) E^({b}) E^({c}) with b > a+c is already indecomposable")]
    AlreadyIndecomposable { a: u32, b: u32, c: u32 },
    #[error("mixed hom degree needs 0 <= p <= a+c, got a={a}, c={c}, p={p}")]
    MixedRange { a: u32, c: u32, p: u32 },
}

/// Formal direct sum of shifted words (a multiset; order is irrelevant).
#[derive(Clone, Debug, Default)]
pub struct GradedObject {
    pub summands: Vec<(Word, i64)>,
}

impl GradedObject {
    pub fn zero() -> Self {
        GradedObject::default()
    }

    pub fn single(w: Word, t: i64) -> Self {
        GradedObject { summands: vec![(w, t)] }
    }

    pub fn push(&mut self, w: Word, t: i64) {
        self.summands.push((w, t));
    }

    pub fn extend(&mut self, other: GradedObject) {
        self.summands.extend(other.summands);
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    fn sorted(&self) -> Vec<(Word, i64)> {
        let mut v = self.summands.clone();
        v.sort();
        v
    }
}

impl PartialEq for GradedObject {
    fn eq(&self, other: &Self) -> bool {
        self.sorted() == other.sorted()
    }
}

impl Eq for GradedObject {}

impl fmt::Display for GradedObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, t)) in self.summands.iter().enumerate() {
            if i > 0 {
                f.write_str(" (+) ")?;
            }
            write!(f, "{w} {{{t}}}")?;
        }
        Ok(())
    }
}

/// A shifted canonical basis element, an indecomposable object.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Indecomposable {
    pub canonical: CanonicalElem,
    pub shift: i64,
}

impl Serialize for Indecomposable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Indecomposable", 5)?;
        st.serialize_field("lead", &self.canonical.lead.index())?;
        st.serialize_field("a", &self.canonical.a)?;
        st.serialize_field("b", &self.canonical.b)?;
        st.serialize_field("c", &self.canonical.c)?;
        st.serialize_field("shift", &self.shift)?;
        st.end()
    }
}

impl fmt::Display for Indecomposable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {{{}}}", self.canonical, self.shift)
    }
}

/// `E_i^(a) E_i^(b){t} ≅ ⊕_{α∈P(a,b)} E_i^(a+b){t + 2|α| - ab}`.
pub fn decompose_pair(color: Color, a: u32, b: u32, t: i64) -> GradedObject {
    let mut out = GradedObject::zero();
    for alpha in enumerate_box(a, b) {
        let s = t + 2 * alpha.size() as i64 - (a * b) as i64;
        out.push(Word::new(vec![(color, a + b)]), s);
    }
    out
}

/// `E_i^(a) E_j^(b) E_i^(c){t} ≅ ⊕_{p+r=b, p≤c, r≤a} ⊕_{α∈P(c-p, a-r)} E_j^(p) E_i^(a+c) E_j^(r){t + 2|α| - (c-p)(a-r)}`
/// for `b ≤ a+c`.
pub fn decompose_triple(a: u32, b: u32, c: u32, lead: Color, t: i64) -> Result<GradedObject, CategoryError> {
    if b > a + c {
        return Err(CategoryError::AlreadyIndecomposable { a, b, c });
    }
    let other = lead.other();
    let mut out = GradedObject::zero();
    for p in 0..=b.min(c) {
        let r = b - p;
        if r > a {
            continue;
        }
        let w = Word::new(vec![(other, p), (lead, a + c), (other, r)]);
        for alpha in enumerate_box(c - p, a - r) {
            let s = t + 2 * alpha.size() as i64 - ((c - p) * (a - r)) as i64;
            out.push(w.clone(), s);
        }
    }
    Ok(out)
}

fn strip_zeros(w: &Word) -> Vec<(Color, u32)> {
    w.letters.iter().copied().filter(|l| l.1 > 0).collect()
}

/// Decompose into indecomposables; the result is sorted.
pub fn normalize_object(x: &GradedObject) -> Vec<Indecomposable> {
    normalize_object_with(x, Strategy::Leftmost)
}

pub fn normalize_object_with(x: &GradedObject, strategy: Strategy) -> Vec<Indecomposable> {
    let mut out = Vec::new();
    let mut work: Vec<(Vec<(Color, u32)>, i64)> = x.summands.iter().map(|(w, t)| (strip_zeros(w), *t)).collect();
    while let Some((l, t)) = work.pop() {
        let pair = match strategy {
            Strategy::Leftmost => (0..l.len().saturating_sub(1)).find(|&k| l[k].0 == l[k + 1].0),
            Strategy::Rightmost => (0..l.len().saturating_sub(1)).rev().find(|&k| l[k].0 == l[k + 1].0),
        };
        if let Some(k) = pair {
            let (color, a) = l[k];
            let b = l[k + 1].1;
            for (w, s) in decompose_pair(color, a, b, t).summands {
                let next: Vec<_> = l[..k].iter().chain(&w.letters).chain(&l[k + 2..]).copied().collect();
                work.push((next, s));
            }
            continue;
        }
        let m = Monomial::normalize(&l).0;
        if let Some(canonical) = CanonicalElem::from_monomial(&m) {
            out.push(Indecomposable { canonical, shift: t });
            continue;
        }
        let k = find_window(&l, strategy).expect("non-canonical alternating word has a window");
        let (lead, a) = l[k];
        let (b, c) = (l[k + 1].1, l[k + 2].1);
        let pieces = decompose_triple(a, b, c, lead, t).expect("window satisfies b < a+c");
        for (w, s) in pieces.summands {
            let next: Vec<_> =
                l[..k].iter().chain(w.letters.iter().filter(|x| x.1 > 0)).chain(&l[k + 3..]).copied().collect();
            work.push((next, s));
        }
    }
    out.sort();
    out
}

/// `Σ q^t · w` over the summands.
pub fn decategorify(x: &GradedObject) -> AlgElem {
    let mut out = AlgElem::zero();
    for (w, t) in &x.summands {
        let (m, c) = Monomial::normalize(&w.letters);
        out.add_term(m, c.shift(*t));
    }
    out
}

pub fn decategorify_indecomposables(xs: &[Indecomposable]) -> CanonicalExpansion {
    let mut out = CanonicalExpansion::zero();
    for x in xs {
        out.add_term(x.canonical, LaurentPoly::q_pow(x.shift));
    }
    out
}

/// Multiset view `(canonical, shift) ↦ multiplicity`.
pub fn multiplicities(xs: &[Indecomposable]) -> BTreeMap<Indecomposable, usize> {
    let mut m = BTreeMap::new();
    for x in xs {
        *m.entry(*x).or_insert(0) += 1;
    }
    m
}

/// Degrees `2(c-y)(b-a-y)`, `y = 0..=c`, of the dotless standard endomorphisms
/// of `E_i^(a) E_j^(b) E_i^(c)`.
pub fn endo_dotless_degrees(a: u32, b: u32, c: u32) -> Vec<i64> {
    let (a, b, c) = (a as i64, b as i64, c as i64);
    (0..=c).map(|y| 2 * (c - y) * (b - a - y)).collect()
}

/// Minimal degree `-ax-ay-cx-cy-2xy+b(x+y)` of a dotless map between two
/// distinct elements of the same `E_i^(a+x) E_j^(b) E_i^(c+y)` family.
pub fn cross_hom_degree(a: i64, b: i64, c: i64, x: i64, y: i64) -> i64 {
    -a * x - a * y - c * x - c * y - 2 * x * y + b * (x + y)
}

/// Degree `-ac - pr + ap + cr` (with `r = a+c-p`) of the minimal dotless map
/// `E_1^(a) E_2^(a+c) E_1^(c) → E_2^(p) E_1^(a+c) E_2^(r)`; equals `(p-c)²`.
pub fn mixed_hom_degree(a: u32, c: u32, p: u32) -> Result<i64, CategoryError> {
    if p > a + c {
        return Err(CategoryError::MixedRange { a, c, p });
    }
    let (a, c, p) = (a as i64, c as i64, p as i64);
    let r = a + c - p;
    Ok(-a * c - p * r + a * p + c * r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlaurent::qint;
    use crate::u3algebra::canonicalize;
    use Color::{One, Two};

    fn w(l: &[(Color, u32)]) -> Word {
        Word::new(l.to_vec())
    }

    #[test]
    fn pair_examples() {
        let d = decompose_pair(One, 1, 1, 0);
        assert_eq!(d, GradedObject { summands: vec![(w(&[(One, 2)]), -1), (w(&[(One, 2)]), 1)] });
        assert_eq!(decompose_pair(One, 3, 0, 4), GradedObject::single(w(&[(One, 3)]), 4));
        let shifts: Vec<i64> = decompose_pair(Two, 2, 1, 0).summands.iter().map(|s| s.1).collect();
        assert_eq!(shifts, vec![-2, 0, 2]);
    }

    #[test]
    fn triple_examples() {
        let d = decompose_triple(1, 1, 1, One, 0).unwrap();
        assert_eq!(
            d,
            GradedObject { summands: vec![(w(&[(Two, 0), (One, 2), (Two, 1)]), 0), (w(&[(Two, 1), (One, 2), (Two, 0)]), 0)] }
        );
        let d = decompose_triple(1, 2, 1, One, 0).unwrap();
        assert_eq!(d, GradedObject::single(w(&[(Two, 1), (One, 2), (Two, 1)]), 0));
        let d = decompose_triple(1, 1, 2, One, 0).unwrap();
        assert_eq!(
            d,
            GradedObject {
                summands: vec![
                    (w(&[(Two, 0), (One, 3), (Two, 1)]), 0),
                    (w(&[(Two, 1), (One, 3), (Two, 0)]), -1),
                    (w(&[(Two, 1), (One, 3), (Two, 0)]), 1),
                ]
            }
        );
        assert!(decompose_triple(1, 3, 1, One, 0).is_err());
    }

    #[test]
    fn normalize_examples() {
        let n = normalize_object(&GradedObject::single(w(&[(One, 1), (Two, 1), (One, 1)]), 0));
        let k1 = CanonicalElem::new(Two, 0, 2, 1).unwrap();
        let k2 = CanonicalElem::new(Two, 1, 2, 0).unwrap();
        assert_eq!(n, vec![Indecomposable { canonical: k1, shift: 0 }, Indecomposable { canonical: k2, shift: 0 }]);

        let n = normalize_object(&GradedObject::single(w(&[(One, 1), (One, 1)]), 5));
        let k = CanonicalElem::new(Two, 0, 2, 0).unwrap();
        assert_eq!(n, vec![Indecomposable { canonical: k, shift: 4 }, Indecomposable { canonical: k, shift: 6 }]);

        let x = GradedObject::single(w(&[(Two, 1), (One, 3), (Two, 1)]), -2);
        assert_eq!(normalize_object(&x).len(), 1);
    }

    #[test]
    fn decategorify_examples() {
        let x = GradedObject { summands: vec![(w(&[(One, 2)]), -1), (w(&[(One, 2)]), 1)] };
        assert_eq!(decategorify(&x), AlgElem::from_letters(&[(One, 2)]).scale(&qint(2)));
        assert!(decategorify(&GradedObject::zero()).is_zero());
        let x = GradedObject::single(w(&[(One, 1), (Two, 1)]), 3);
        assert_eq!(decategorify(&x), AlgElem::from_letters(&[(One, 1), (Two, 1)]).scale(&LaurentPoly::q_pow(3)));
    }

    #[test]
    fn k0_consistency_small() {
        let x = GradedObject::single(w(&[(One, 1), (Two, 1), (One, 2), (Two, 1)]), 2);
        let lhs = decategorify_indecomposables(&normalize_object(&x));
        assert_eq!(lhs, canonicalize(&decategorify(&x)));
    }

    #[test]
    fn degree_examples() {
        assert_eq!(endo_dotless_degrees(1, 2, 1), vec![2, 0]);
        assert_eq!(endo_dotless_degrees(0, 5, 0), vec![0]);
        assert_eq!(endo_dotless_degrees(1, 1, 1), vec![0, 0]);
        assert_eq!(cross_hom_degree(3, 5, 2, 0, 0), 0);
        assert_eq!(cross_hom_degree(1, 3, 1, 1, 0), 1);
        assert_eq!(cross_hom_degree(1, 4, 1, 1, 1), 2);
        assert_eq!(mixed_hom_degree(1, 1, 1).unwrap(), 0);
        assert_eq!(mixed_hom_degree(2, 1, 2).unwrap(), 1);
        assert_eq!(mixed_hom_degree(1, 1, 0).unwrap(), 1);
        assert!(mixed_hom_degree(1, 1, 3).is_err());
    }
}
