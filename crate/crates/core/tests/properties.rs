//! Property tests for the algebraic invariants of each layer.

use num_bigint::BigInt;
use proptest::prelude::*;

use sl3cat::cli::{Expression, Separator, Term};
use sl3cat::klrengine::{DiagramOperator, RationalCoeff};
use sl3cat::partitions::{lr_coefficient, Partition};
use sl3cat::poly::Poly;
use sl3cat::qlaurent::{qbinom, LaurentPoly};
use sl3cat::u3algebra::{canonicalize, canonicalize_with, AlgElem, Strategy as Rewrite};
use sl3cat::u3category::{decategorify, decategorify_indecomposables, normalize_object, normalize_object_with, GradedObject};
use sl3cat::u3algebra::Word;
use sl3cat::Color;

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, -5i64..=5), 0..5).prop_map(LaurentPoly::from_terms)
}

fn poly3() -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::array::uniform3(0u16..3), -4i64..=4), 0..5).prop_map(|ts| {
        let mut p = Poly::zero();
        for (e, c) in ts {
            p += &Poly::monomial(&e).scale(&BigInt::from(c));
        }
        p
    })
}

fn color() -> impl Strategy<Value = Color> {
    prop_oneof![Just(Color::One), Just(Color::Two)]
}

fn letters(max_len: usize, max_exp: u32) -> impl Strategy<Value = Vec<(Color, u32)>> {
    prop::collection::vec((color(), 1..=max_exp), 0..=max_len)
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0u32..=4, 0..=4).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v.into_iter().filter(|&x| x > 0).collect()).unwrap()
    })
}

fn thin_steps() -> impl Strategy<Value = Vec<(bool, usize)>> {
    prop::collection::vec((any::<bool>(), 0usize..3), 0..4)
}

/// Dots and crossings applied in order to a length-3 sequence.
fn thin_operator(seq: &[sl3cat::Color], steps: &[(bool, usize)]) -> DiagramOperator {
    let mut acc = DiagramOperator::identity(seq);
    for &(is_dot, k) in steps {
        let g = if is_dot {
            DiagramOperator::dot(acc.target(), k).unwrap()
        } else {
            DiagramOperator::crossing(acc.target(), k.min(1)).unwrap()
        };
        acc = g.compose(&acc).unwrap();
    }
    acc
}

/// Composable operators `[h, g, f]` with `h` applied first.
fn thin_chain() -> impl Strategy<Value = Vec<DiagramOperator>> {
    (prop::collection::vec(color(), 3), prop::collection::vec(thin_steps(), 3)).prop_map(|(seq, steps)| {
        let mut out: Vec<DiagramOperator> = Vec::new();
        for st in &steps {
            let src = out.last().map_or(seq.clone(), |o| o.target().to_vec());
            out.push(thin_operator(&src, st));
        }
        out
    })
}

fn term() -> impl Strategy<Value = Term> {
    (prop::option::of(laurent()), letters(4, 12), prop::option::of(-20i64..=20))
        .prop_map(|(coeff, letters, shift)| Term { coeff, letters, shift })
}

fn expression() -> impl Strategy<Value = Expression> {
    (prop::collection::vec(term(), 0..5), any::<bool>()).prop_map(|(terms, direct)| {
        let separator = if direct && terms.len() > 1 { Separator::DirectSum } else { Separator::Plus };
        Expression { terms, separator }
    })
}

proptest! {
    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
    }

    #[test]
    fn laurent_text_round_trip(a in laurent()) {
        prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a);
    }

    #[test]
    fn qbinom_symmetric_and_bar_invariant(n in 0i64..=10, k in 0i64..=10) {
        prop_assume!(k <= n);
        prop_assert_eq!(qbinom(n, k), qbinom(n, n - k));
        prop_assert_eq!(qbinom(n, k).bar(), qbinom(n, k));
    }

    #[test]
    fn poly_ring_axioms(a in poly3(), b in poly3(), c in poly3()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn root_factor_cancels(p in poly3(), i in 0usize..3, j in 0usize..3) {
        prop_assume!(i != j);
        prop_assert_eq!(p.mul_linear(i, j).div_linear(i, j), Some(p.clone()));
        let r = RationalCoeff::new(p.mul_linear(i, j), &[((i as u8, j as u8), 1)]);
        prop_assert_eq!(r, RationalCoeff::from_poly(p));
    }

    #[test]
    fn rational_field_ops(p in poly3(), q in poly3(), e in 0u32..3) {
        let x = RationalCoeff::new(p, &[((0, 1), e)]);
        let y = RationalCoeff::new(q, &[((1, 2), 1), ((0, 2), e)]);
        prop_assert_eq!(x.add(&y), y.add(&x));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert_eq!(RationalCoeff::sum(&[x.clone(), y.clone()]), x.add(&y));
        prop_assert!(x.add(&x.neg()).is_zero());
    }

    #[test]
    fn composition_matches_action(ops in thin_chain(), p in poly3()) {
        let (g, f) = (&ops[0], &ops[1]);
        let fg = f.compose(g).unwrap();
        let via_g = g.apply(&p);
        prop_assert!(via_g.is_polynomial());
        prop_assert_eq!(fg.apply(&p), f.apply(via_g.numerator()));
    }

    #[test]
    fn composition_associative(ops in thin_chain()) {
        let (h, g, f) = (&ops[0], &ops[1], &ops[2]);
        let l = f.compose(g).unwrap().compose(h).unwrap();
        let r = f.compose(&g.compose(h).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn conjugate_is_involution(a in partition()) {
        prop_assert_eq!(a.conjugate().conjugate(), a);
    }

    #[test]
    fn hat_is_involution(a in partition(), rows in 0u32..=4, cols in 0u32..=4) {
        prop_assume!(a.fits(rows, cols));
        let h = a.hat(rows, cols).unwrap();
        prop_assert_eq!(h.size(), rows * cols - a.size());
        prop_assert_eq!(h.hat(cols, rows).unwrap(), a);
    }

    #[test]
    fn lr_symmetric(g in partition(), a in partition(), b in partition()) {
        prop_assert_eq!(lr_coefficient(&g, &a, &b), lr_coefficient(&g, &b, &a));
    }

    #[test]
    fn canonicalize_linear_and_idempotent(x in letters(4, 2), y in letters(4, 2), c in laurent()) {
        let (x, y) = (AlgElem::from_letters(&x), AlgElem::from_letters(&y));
        let mut sum = x.clone();
        sum.add(&y.scale(&c));
        let mut expect = canonicalize(&x).to_alg();
        expect.add(&canonicalize(&y).to_alg().scale(&c));
        let cs = canonicalize(&sum);
        prop_assert_eq!(cs.to_alg(), expect);
        prop_assert_eq!(canonicalize(&cs.to_alg()), cs);
    }

    #[test]
    fn canonicalize_order_independent(x in letters(5, 2)) {
        let x = AlgElem::from_letters(&x);
        prop_assert_eq!(canonicalize_with(&x, Rewrite::Leftmost), canonicalize_with(&x, Rewrite::Rightmost));
    }

    #[test]
    fn object_decomposition_consistent(
        words in prop::collection::vec((letters(4, 2), -5i64..=5), 1..4)
    ) {
        let mut obj = GradedObject::zero();
        for (w, t) in words {
            obj.push(Word::new(w), t);
        }
        let xs = normalize_object(&obj);
        prop_assert_eq!(&xs, &normalize_object_with(&obj, Rewrite::Rightmost));
        prop_assert_eq!(decategorify_indecomposables(&xs), canonicalize(&decategorify(&obj)));
    }

    #[test]
    fn expression_round_trip(e in expression()) {
        let s = e.to_string();
        let back = Expression::parse(&s).unwrap();
        prop_assert_eq!(back.to_string(), s);
        prop_assert_eq!(back, e);
    }
}
