//! Exhaustive checks of the stated invariants over small ranges.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use sl3cat::partitions::{box_count, enumerate_box, lr_coefficient, partitions_of, schur_polynomial, Partition};
use sl3cat::poly::Poly;
use sl3cat::qlaurent::{qbinom, qfact};
use sl3cat::u3algebra::{canonicalize_with, AlgElem, Strategy};
use sl3cat::u3category::decompose_triple;
use sl3cat::Color;

fn all_partitions(max_size: u32) -> Vec<Partition> {
    (0..=max_size).flat_map(|n| partitions_of(n, n, n)).collect()
}

#[test]
fn qbinom_factorial_identity() {
    for n in 0..=8i64 {
        for k in 0..=n {
            let lhs = &(&qbinom(n, k) * &qfact(k as u32)) * &qfact((n - k) as u32);
            assert_eq!(lhs, qfact(n as u32), "n={n} k={k}");
        }
    }
}

#[test]
fn conjugation_involutive_to_twelve() {
    for a in all_partitions(12) {
        assert_eq!(a.conjugate().conjugate(), a);
        assert_eq!(a.conjugate().size(), a.size());
    }
}

#[test]
fn hat_complement_in_boxes() {
    for a in 0..=4 {
        for b in 0..=4 {
            for alpha in enumerate_box(a, b) {
                let h = alpha.hat(a, b).unwrap();
                assert_eq!(h.size(), a * b - alpha.size());
                assert_eq!(h.hat(b, a).unwrap(), alpha, "{alpha} in {a}x{b}");
            }
        }
    }
}

#[test]
fn box_cardinality_is_binomial() {
    for a in 0..=6u32 {
        for b in 0..=6u32 {
            let n = enumerate_box(a, b).len();
            assert_eq!(BigInt::from(n), box_count(a, b));
            let mut binom = 1u64;
            for i in 0..a as u64 {
                binom = binom * (a as u64 + b as u64 - i) / (i + 1);
            }
            assert_eq!(n as u64, binom, "P({a},{b})");
        }
    }
}

#[test]
fn lr_symmetric_to_eight() {
    let ps = all_partitions(8);
    for g in &ps {
        for a in &ps {
            if a.size() > g.size() || !g.contains(a) {
                continue;
            }
            for b in partitions_of(g.size() - a.size(), 8, 8) {
                assert_eq!(lr_coefficient(g, a, &b), lr_coefficient(g, &b, a), "{g} {a} {b}");
            }
        }
    }
}

#[test]
fn lr_matches_schur_products() {
    let n = 3;
    let ps = all_partitions(6);
    for a in &ps {
        for b in &ps {
            if a.size() + b.size() > 6 {
                continue;
            }
            let product = &schur_polynomial(a, n) * &schur_polynomial(b, n);
            let mut expansion = Poly::zero();
            for g in partitions_of(a.size() + b.size(), n as u32, a.size() + b.size()) {
                let c = lr_coefficient(&g, a, b);
                if c > 0 {
                    expansion += &schur_polynomial(&g, n).scale(&BigInt::from(c));
                }
            }
            assert_eq!(product, expansion, "s_{a} s_{b}");
        }
    }
}

fn words(max_len: usize, max_exp: u32) -> Vec<Vec<(Color, u32)>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for c in Color::ALL {
                for e in 1..=max_exp {
                    let mut v: Vec<(Color, u32)> = w.clone();
                    v.push((c, e));
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

#[test]
fn rewriting_confluent_on_short_words() {
    for w in words(5, 2) {
        let x = AlgElem::from_letters(&w);
        assert_eq!(canonicalize_with(&x, Strategy::Leftmost), canonicalize_with(&x, Strategy::Rightmost), "{w:?}");
    }
}

#[test]
fn triple_shift_blocks_symmetric() {
    for a in 0..=4 {
        for c in 0..=4 {
            for b in 0..=a + c {
                let obj = decompose_triple(a, b, c, Color::One, 0).unwrap();
                let mut blocks: BTreeMap<String, Vec<i64>> = BTreeMap::new();
                for (w, t) in &obj.summands {
                    blocks.entry(w.to_string()).or_default().push(*t);
                }
                for (w, mut shifts) in blocks {
                    let mut negated: Vec<i64> = shifts.iter().map(|t| -t).collect();
                    shifts.sort_unstable();
                    negated.sort_unstable();
                    assert_eq!(shifts, negated, "({a},{b},{c}) block {w}");
                }
            }
        }
    }
}
