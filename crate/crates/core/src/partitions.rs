//! Partitions, box enumeration `P(a,b)`, hat-complements, Littlewood-Richardson
//! coefficients and Schur polynomials.
//!
//! Text form: `(3,1,1)`, with `()` for the empty partition.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::poly::{Poly, MAX_VARS, UNIT_MONO};
use crate::text::{Cursor, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<u32>),
    #[error("partition {partition} does not fit in the {rows}x{cols} box")]
    NotInBox { partition: Partition, rows: u32, cols: u32 },
}

/// Weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition::default()
    }

    /// Accepts trailing zeros; rejects increasing sequences.
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// The `rows × cols` rectangle `(cols, …, cols)`.
    pub fn rectangle(rows: u32, cols: u32) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition { parts: vec![cols; rows as usize] }
    }

    /// Single row `(d)`.
    pub fn row(d: u32) -> Self {
        Partition::rectangle(1, d)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `α_i` with 0-based index; zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width).map(|j| self.parts.iter().filter(|&&p| p > j).count() as u32).collect();
        Partition { parts }
    }

    /// Young diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    /// Membership in `P(rows, cols)`: at most `rows` parts, each at most `cols`.
    pub fn fits(&self, rows: u32, cols: u32) -> bool {
        self.len() <= rows as usize && self.part(0) <= cols
    }

    /// Conjugate of the complement `(b-α_a, …, b-α_1)` of `α` in the `a × b` box.
    pub fn hat(&self, a: u32, b: u32) -> Result<Partition, PartitionError> {
        if !self.fits(a, b) {
            return Err(PartitionError::NotInBox { partition: self.clone(), rows: a, cols: b });
        }
        Ok(self.box_complement(a, b).conjugate())
    }

    /// `(b-α_a, …, b-α_1)`, the complement in the `a × b` box.
    pub fn box_complement(&self, a: u32, b: u32) -> Partition {
        let parts = (0..a as usize).rev().map(|i| b - self.part(i)).collect();
        Partition::new(parts).expect("complement of a fitting partition is a partition")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Partition {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut cur = Cursor::new(s);
        cur.skip_ws();
        let p = parse_partition(&mut cur)?;
        cur.finish()?;
        Ok(p)
    }
}

pub(crate) fn parse_partition(cur: &mut Cursor<'_>) -> Result<Partition, ParseError> {
    let start = cur.pos();
    cur.expect("(")?;
    let mut parts = Vec::new();
    cur.skip_ws();
    if !cur.eat(")") {
        loop {
            cur.skip_ws();
            let v = cur.uint()?;
            parts.push(u32::try_from(v).map_err(|_| cur.error("part in range"))?);
            cur.skip_ws();
            if cur.eat(")") {
                break;
            }
            cur.expect(",")?;
        }
    }
    Partition::new(parts).map_err(|e| ParseError {
        pos: start,
        expected: "weakly decreasing parts".into(),
        found: e.to_string(),
    })
}

/// All of `P(a,b)`: at most `a` parts, each at most `b`, in graded-lex order.
pub fn enumerate_box(a: u32, b: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill_box(a as usize, b, &mut cur, &mut out);
    out.sort_by(|x, y| x.size().cmp(&y.size()).then_with(|| y.parts.cmp(&x.parts)));
    out
}

fn fill_box(rows: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    out.push(Partition { parts: cur.clone() });
    if cur.len() == rows {
        return;
    }
    for v in 1..=max {
        cur.push(v);
        fill_box(rows, v, cur, out);
        cur.pop();
    }
}

/// Partitions of exactly `n` with at most `max_parts` parts and parts at most `max_part`.
pub fn partitions_of(n: u32, max_parts: u32, max_part: u32) -> Vec<Partition> {
    fn go(n: u32, rows: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if rows == 0 {
            return;
        }
        for v in (1..=max.min(n)).rev() {
            cur.push(v);
            go(n - v, rows - 1, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_parts, max_part, &mut Vec::new(), &mut out);
    out
}

/// `P(a)` restricted to `|α| ≤ max_size`.
pub fn enumerate_bounded(a: u32, max_size: u32) -> Vec<Partition> {
    (0..=max_size).flat_map(|n| partitions_of(n, a, n)).collect()
}

/// Partitions `μ ⊆ outer` with `|μ| = n`.
fn sub_partitions_of_size(outer: &Partition, n: u32) -> Vec<Partition> {
    fn go(outer: &Partition, row: usize, n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if row >= outer.len() {
            return;
        }
        let cap = max.min(outer.part(row)).min(n);
        for v in (1..=cap).rev() {
            cur.push(v);
            go(outer, row + 1, n - v, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(outer, 0, n, u32::MAX, &mut Vec::new(), &mut out);
    out
}

/// Number of LR tableaux of shape `γ/α` and content `β`.
///
/// Fills the skew shape in reverse reading order (rows top to bottom, each
/// right to left), enforcing row weak increase, column strict increase and
/// the lattice condition on the reading word.
pub fn lr_coefficient(gamma: &Partition, alpha: &Partition, beta: &Partition) -> u64 {
    if !gamma.contains(alpha) || gamma.size() != alpha.size() + beta.size() {
        return 0;
    }
    if beta.is_empty() {
        return 1;
    }
    let mut cells = Vec::new();
    for r in 0..gamma.len() {
        for c in (alpha.part(r)..gamma.part(r)).rev() {
            cells.push((r, c as usize));
        }
    }
    let mut grid: Vec<Vec<u32>> = (0..gamma.len()).map(|r| vec![0; gamma.part(r) as usize]).collect();
    let mut counts = vec![0u32; beta.len() + 1];
    let mut total = 0u64;
    lr_fill(&cells, 0, alpha, beta, &mut grid, &mut counts, &mut total);
    total
}

fn lr_fill(
    cells: &[(usize, usize)],
    idx: usize,
    alpha: &Partition,
    beta: &Partition,
    grid: &mut Vec<Vec<u32>>,
    counts: &mut Vec<u32>,
    total: &mut u64,
) {
    if idx == cells.len() {
        *total += 1;
        return;
    }
    let (r, c) = cells[idx];
    // Row weakly increasing: at most the entry to the right, if that cell is in the skew shape.
    let upper = if c + 1 < grid[r].len() { grid[r][c + 1] } else { beta.len() as u32 };
    // Column strictly increasing: above the entry in the row above, if in the skew shape.
    let lower = if r > 0 && c as u32 >= alpha.part(r - 1) { grid[r - 1][c] + 1 } else { 1 };
    for v in lower..=upper {
        let vi = v as usize;
        if counts[vi] >= beta.part(vi - 1) {
            continue;
        }
        if vi > 1 && counts[vi] + 1 > counts[vi - 1] {
            continue;
        }
        counts[vi] += 1;
        grid[r][c] = v;
        lr_fill(cells, idx + 1, alpha, beta, grid, counts, total);
        grid[r][c] = 0;
        counts[vi] -= 1;
    }
}

/// Coefficient of `π_β` in the product `π_{α_1} ⋯ π_{α_k}`.
pub fn multi_lr(parts: &[Partition], beta: &Partition) -> u64 {
    assert!(!parts.is_empty(), "multi_lr needs at least one factor");
    let total: u32 = parts.iter().map(Partition::size).sum();
    if total != beta.size() {
        return 0;
    }
    // Expansion of the running product, restricted to shapes inside β.
    let mut acc: BTreeMap<Partition, u64> = BTreeMap::new();
    if beta.contains(&parts[0]) {
        acc.insert(parts[0].clone(), 1);
    }
    let mut size = parts[0].size();
    for factor in &parts[1..] {
        size += factor.size();
        let mut next: BTreeMap<Partition, u64> = BTreeMap::new();
        for gamma in sub_partitions_of_size(beta, size) {
            let mut c = 0;
            for (mu, m) in &acc {
                c += m * lr_coefficient(&gamma, mu, factor);
            }
            if c > 0 {
                next.insert(gamma, c);
            }
        }
        acc = next;
    }
    acc.get(beta).copied().unwrap_or(0)
}

/// `π_{γ/α} = Σ_β c^γ_{α,β} π_β`.
pub fn skew_schur_expand(gamma: &Partition, alpha: &Partition) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    if !gamma.contains(alpha) {
        return out;
    }
    for beta in sub_partitions_of_size(gamma, gamma.size() - alpha.size()) {
        let c = lr_coefficient(gamma, alpha, &beta);
        if c > 0 {
            out.insert(beta, c);
        }
    }
    out
}

/// Schur polynomial `π_α(x_0, …, x_{n-1})` from the bialternant formula
/// `det(x_i^{α_j + n - 1 - j}) / Δ` with `Δ = Π_{i<j} (x_i - x_j)`.
pub fn schur_polynomial(alpha: &Partition, n: usize) -> Poly {
    assert!(n <= MAX_VARS, "variable count out of range");
    if alpha.len() > n {
        return Poly::zero();
    }
    if n == 0 {
        return Poly::one();
    }
    let exps: Vec<u16> = (0..n).map(|j| (alpha.part(j) + (n - 1 - j) as u32) as u16).collect();
    let mut det = Poly::zero();
    for_each_permutation(n, |perm, sign| {
        let mut m = UNIT_MONO;
        for (i, &j) in perm.iter().enumerate() {
            m[i] = exps[j];
        }
        det.add_term(m, BigInt::from(sign));
    });
    for i in 0..n {
        for j in i + 1..n {
            det = det.div_linear(i, j).expect("alternant divisible by Vandermonde factor");
        }
    }
    det
}

/// Calls `f(perm, sign)` for every permutation of `0..n`.
pub(crate) fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize], i64)) {
    fn go(k: usize, perm: &mut Vec<usize>, sign: i64, f: &mut dyn FnMut(&[usize], i64)) {
        if k == perm.len() {
            f(perm, sign);
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            go(k + 1, perm, if i == k { sign } else { -sign }, f);
            perm.swap(k, i);
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    go(0, &mut perm, 1, &mut f);
}

/// Expand a symmetric polynomial in `x_0..x_{n-1}` in the Schur basis, by
/// peeling off the lexicographically leading term. Returns `None` if the
/// input is not symmetric.
pub fn schur_expand(f: &Poly, n: usize) -> Option<BTreeMap<Partition, BigInt>> {
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    while let Some((m, c)) = rest.leading_term() {
        if m[n..].iter().any(|&e| e != 0) {
            return None;
        }
        let parts: Vec<u32> = m[..n].iter().map(|&e| e as u32).collect();
        let lambda = Partition::new(parts).ok()?;
        let c = c.clone();
        rest -= &schur_polynomial(&lambda, n).scale(&c);
        out.insert(lambda, c);
    }
    Some(out)
}

/// `Σ_β coeff_β π_β(x_0..x_{n-1})`.
pub fn schur_combination(terms: &BTreeMap<Partition, u64>, n: usize) -> Poly {
    let mut out = Poly::zero();
    for (beta, c) in terms {
        if *c != 0 {
            out += &schur_polynomial(beta, n).scale(&BigInt::from(*c));
        }
    }
    out
}

/// Number of elements of `P(a,b)`, i.e. `binomial(a+b, a)`.
pub fn box_count(a: u32, b: u32) -> BigInt {
    let mut num = BigInt::one();
    for k in 0..a {
        num = num * BigInt::from(b + 1 + k) / BigInt::from(k + 1);
    }
    if num.is_zero() {
        BigInt::one()
    } else {
        num
    }
}
