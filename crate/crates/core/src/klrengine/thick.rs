//! Thick edges and their thin realization.
//!
//! A thick edge of color `i` and thickness `a` lives on `a` thin strands of
//! color `i` and is realized by the idempotent `e_a = x^δ ∂_{w_0}` with
//! `δ = (a-1, …, 1, 0)`. Generators:
//!
//! - merge `(a,b) → a+b`: `e_{a+b}`;
//! - split `a+b → (a,b)`: `x^{δ_a} ⊗ x^{δ_b} · ∂_{w_0}`;
//! - label `π_α` on thickness `a`: `π_α(x) · e_a`, zero if `α` has more than `a` parts;
//! - same-color crossing: `(e_b ⊗ e_a) ∘ ∂_{w_block} ∘ (e_a ⊗ e_b)`;
//! - adjacent-color crossing: the block of thin crossings after `e_a ⊗ e_b`.
//!
//! Each thick edge carries the internal shift `-a(a-1)/2` and each thin pair
//! of colors `(2,1)` in a boundary the shift `1`; the effective degree of an
//! operator is twice its polynomial degree plus the shift of its target minus
//! that of its source.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use thiserror::Error;

use super::operator::{inversion_twist, Degree, DiagramOperator, OperatorError};
use super::rational::{RationalCoeff, RootDenominator};
use crate::partitions::{parse_partition, schur_polynomial, Partition};
use crate::poly::Poly;
use crate::text::{Cursor, ParseError};
use crate::Color;

/// A thick edge: color and thickness.
pub type Edge = (Color, u32);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ThickError {
    #[error("interface mismatch in {context}: {below} vs {above}")]
    Interface { context: &'static str, below: String, above: String },
    #[error("empty {0} node")]
    Empty(&'static str),
    #[error("invalid diagram: {0}")]
    Invalid(String),
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub fn edges_string(edges: &[Edge]) -> String {
    let s: Vec<String> = edges.iter().map(|(c, a)| format!("{c}^{a}")).collect();
    format!("[{}]", s.join(" "))
}

pub fn thin_colors(edges: &[Edge]) -> Vec<Color> {
    edges.iter().flat_map(|&(c, a)| std::iter::repeat_n(c, a as usize)).collect()
}

pub fn thick_shift(a: u32) -> i64 {
    let a = a as i64;
    -a * (a - 1) / 2
}

/// Internal shift of a boundary.
pub fn interface_shift(edges: &[Edge]) -> i64 {
    inversion_twist(&thin_colors(edges)) + edges.iter().map(|&(_, a)| thick_shift(a)).sum::<i64>()
}

/// Raw degree adjusted by the internal shifts of both boundaries.
pub fn effective_degree(op: &DiagramOperator, source: &[Edge], target: &[Edge]) -> Degree {
    match op.raw_degree() {
        Degree::Homogeneous(d) => Degree::Homogeneous(d + interface_shift(target) - interface_shift(source)),
        other => other,
    }
}

fn staircase(a: u32, offset: usize) -> Poly {
    let mut exps = vec![0u16; offset + a as usize];
    for k in 0..a as usize {
        exps[offset + k] = (a as usize - 1 - k) as u16;
    }
    Poly::monomial(&exps)
}

fn vandermonde_den(n: u32) -> RootDenominator {
    let mut den = RootDenominator::new();
    for i in 0..n as u8 {
        for j in i + 1..n as u8 {
            den.insert(i, j, 1);
        }
    }
    den
}

/// `Σ_w sgn(w) · (p / Δ) · w` on `n` strands of one color.
fn antisymmetrized(color: Color, n: u32, p: Poly) -> DiagramOperator {
    let seq = vec![color; n as usize];
    let c = RationalCoeff::with_denominator(p, vandermonde_den(n));
    DiagramOperator::antisymmetrizer(&seq, 0, n as usize, &c)
}

/// `e_a` in closed form.
pub fn idempotent(color: Color, a: u32) -> DiagramOperator {
    antisymmetrized(color, a, staircase(a, 0))
}

/// A reduced word for the longest permutation of `S_a`.
pub fn longest_word(a: u32) -> Vec<usize> {
    let mut out = Vec::new();
    for i in 1..a as usize {
        for k in (0..i).rev() {
            out.push(k);
        }
    }
    out
}

/// `x^δ · ∂_{i_1} ⋯ ∂_{i_l}` from a word of thin crossings.
pub fn idempotent_from_word(color: Color, a: u32, word: &[usize]) -> Result<DiagramOperator, OperatorError> {
    let seq = vec![color; a as usize];
    let mut acc = DiagramOperator::identity(&seq);
    // ∂_{i_1} is applied last.
    for &k in word.iter().rev() {
        acc = DiagramOperator::crossing(&seq, k)?.compose(&acc)?;
    }
    Ok(acc.mul_poly(&staircase(a, 0)))
}

/// `e` on every edge of a boundary.
pub fn idempotent_on(edges: &[Edge]) -> Result<DiagramOperator, OperatorError> {
    let mut acc = DiagramOperator::identity(&[]);
    for &(c, a) in edges {
        acc = acc.tensor(&idempotent(c, a))?;
    }
    Ok(acc)
}

pub fn split_op(color: Color, a: u32, b: u32) -> DiagramOperator {
    if a == 0 || b == 0 {
        return idempotent(color, a + b);
    }
    let p = &staircase(a, 0) * &staircase(b, a as usize);
    antisymmetrized(color, a + b, p)
}

pub fn merge_op(color: Color, a: u32, b: u32) -> DiagramOperator {
    idempotent(color, a + b)
}

pub fn label_op(color: Color, a: u32, alpha: &Partition) -> DiagramOperator {
    if alpha.len() > a as usize {
        let seq = vec![color; a as usize];
        return DiagramOperator::zero(seq.clone(), seq);
    }
    let p = &schur_polynomial(alpha, a as usize) * &staircase(a, 0);
    antisymmetrized(color, a, p)
}

/// Thin crossings moving a block of `a` strands right past `b` strands.
pub fn block_crossing(seq: &[Color], a: usize, b: usize) -> Result<DiagramOperator, OperatorError> {
    let mut acc = DiagramOperator::identity(seq);
    for i in (0..a).rev() {
        for j in 0..b {
            let c = DiagramOperator::crossing(acc.target(), i + j)?;
            acc = c.compose(&acc)?;
        }
    }
    Ok(acc)
}

pub fn crossing_op(left: Edge, right: Edge) -> Result<DiagramOperator, OperatorError> {
    let src = idempotent_on(&[left, right])?;
    let x = block_crossing(src.target(), left.1 as usize, right.1 as usize)?;
    let x = x.compose(&src)?;
    if left.0 == right.0 {
        idempotent_on(&[right, left])?.compose(&x)
    } else {
        Ok(x)
    }
}

/// A thick diagram as a composition tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ThickDiagram {
    Id(Color, u32),
    Label(Color, u32, Partition),
    /// Crossing with `left` passing to the right.
    Cross(Edge, Edge),
    /// `a+b → (a, b)`.
    Split(Color, u32, u32),
    /// `(a, b) → a+b`.
    Merge(Color, u32, u32),
    Tensor(Vec<ThickDiagram>),
    /// Vertical composition listed bottom to top.
    Seq(Vec<ThickDiagram>),
    Scale(i64, Box<ThickDiagram>),
    Sum(Vec<ThickDiagram>),
}

fn cache() -> &'static Mutex<HashMap<ThickDiagram, DiagramOperator>> {
    static CACHE: OnceLock<Mutex<HashMap<ThickDiagram, DiagramOperator>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

impl ThickDiagram {
    pub fn identity_on(edges: &[Edge]) -> ThickDiagram {
        ThickDiagram::Tensor(edges.iter().map(|&(c, a)| ThickDiagram::Id(c, a)).collect())
    }

    pub fn source(&self) -> Result<Vec<Edge>, ThickError> {
        self.interface(true)
    }

    pub fn target(&self) -> Result<Vec<Edge>, ThickError> {
        self.interface(false)
    }

    fn interface(&self, bottom: bool) -> Result<Vec<Edge>, ThickError> {
        use ThickDiagram::*;
        Ok(match self {
            Id(c, a) | Label(c, a, _) => vec![(*c, *a)],
            Cross(l, r) => {
                if bottom {
                    vec![*l, *r]
                } else {
                    vec![*r, *l]
                }
            }
            Split(c, a, b) | Merge(c, a, b) => {
                let whole = vec![(*c, a + b)];
                let parts = vec![(*c, *a), (*c, *b)];
                if bottom == matches!(self, Split(..)) {
                    whole
                } else {
                    parts
                }
            }
            Tensor(ds) => {
                let mut out = Vec::new();
                for d in ds {
                    out.extend(d.interface(bottom)?);
                }
                out
            }
            Seq(ds) => {
                if ds.is_empty() {
                    return Err(ThickError::Empty("seq"));
                }
                for w in ds.windows(2) {
                    let below = w[0].target()?;
                    let above = w[1].source()?;
                    if below != above {
                        return Err(ThickError::Interface {
                            context: "seq",
                            below: edges_string(&below),
                            above: edges_string(&above),
                        });
                    }
                }
                if bottom {
                    ds[0].source()?
                } else {
                    ds[ds.len() - 1].target()?
                }
            }
            Scale(_, d) => d.interface(bottom)?,
            Sum(ds) => {
                let first = ds.first().ok_or(ThickError::Empty("sum"))?;
                let out = first.interface(bottom)?;
                for d in &ds[1..] {
                    let other = d.interface(bottom)?;
                    if other != out {
                        return Err(ThickError::Interface {
                            context: "sum",
                            below: edges_string(&out),
                            above: edges_string(&other),
                        });
                    }
                }
                out
            }
        })
    }

    fn is_leafy(&self) -> bool {
        use ThickDiagram::*;
        match self {
            Id(..) | Label(..) | Cross(..) | Split(..) | Merge(..) => true,
            Tensor(ds) => ds.iter().all(|d| matches!(d, Id(..) | Label(..) | Cross(..) | Split(..) | Merge(..))),
            _ => false,
        }
    }

    /// Thin operator realizing the diagram.
    pub fn compile(&self) -> Result<DiagramOperator, ThickError> {
        let cacheable = self.is_leafy();
        if cacheable {
            if let Some(op) = cache().lock().unwrap().get(self) {
                return Ok(op.clone());
            }
        }
        let op = self.compile_uncached()?;
        if cacheable {
            cache().lock().unwrap().insert(self.clone(), op.clone());
        }
        Ok(op)
    }

    fn compile_uncached(&self) -> Result<DiagramOperator, ThickError> {
        use ThickDiagram::*;
        Ok(match self {
            Id(c, a) => idempotent(*c, *a),
            Label(c, a, alpha) => label_op(*c, *a, alpha),
            Cross(l, r) => crossing_op(*l, *r)?,
            Split(c, a, b) => split_op(*c, *a, *b),
            Merge(c, a, b) => merge_op(*c, *a, *b),
            Tensor(ds) => {
                let mut acc = DiagramOperator::identity(&[]);
                for d in ds {
                    acc = acc.tensor(&d.compile()?)?;
                }
                acc
            }
            Seq(ds) => {
                self.source()?;
                let ops = ds.iter().map(|d| d.compile()).collect::<Result<Vec<_>, _>>()?;
                DiagramOperator::chain(&ops)?
            }
            Scale(k, d) => d.compile()?.scale(&BigInt::from(*k)),
            Sum(ds) => {
                let src = thin_colors(&self.source()?);
                let tgt = thin_colors(&self.target()?);
                let ops = ds.iter().map(|d| d.compile()).collect::<Result<Vec<_>, _>>()?;
                DiagramOperator::sum(&src, &tgt, &ops)?
            }
        })
    }

    /// Degree read off the generators; `None` if summands disagree.
    pub fn combinatorial_degree(&self) -> Option<i64> {
        use ThickDiagram::*;
        match self {
            Id(..) => Some(0),
            Label(_, _, alpha) => Some(2 * alpha.size() as i64),
            Cross((ci, p), (cj, q)) => Some(-ci.pairing(*cj) * (*p as i64) * (*q as i64)),
            Split(_, a, b) | Merge(_, a, b) => Some(-(*a as i64) * (*b as i64)),
            Tensor(ds) | Seq(ds) => ds.iter().map(|d| d.combinatorial_degree()).sum(),
            Scale(_, d) => d.combinatorial_degree(),
            Sum(ds) => {
                let mut out = None;
                for d in ds {
                    let k = d.combinatorial_degree()?;
                    if out.is_some_and(|o| o != k) {
                        return None;
                    }
                    out = Some(k);
                }
                out
            }
        }
    }

    /// Effective degree of the compiled operator.
    pub fn effective_degree(&self) -> Result<Degree, ThickError> {
        let op = self.compile()?;
        Ok(effective_degree(&op, &self.source()?, &self.target()?))
    }
}

impl fmt::Display for ThickDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ThickDiagram::*;
        fn list(f: &mut fmt::Formatter<'_>, head: &str, ds: &[ThickDiagram]) -> fmt::Result {
            write!(f, "({head}")?;
            for d in ds {
                write!(f, " {d}")?;
            }
            f.write_str(")")
        }
        match self {
            Id(c, a) => write!(f, "(id {c} {a})"),
            Label(c, a, alpha) => write!(f, "(label {c} {a} {alpha})"),
            Cross((c1, a1), (c2, a2)) => write!(f, "(cross {c1} {a1} {c2} {a2})"),
            Split(c, a, b) => write!(f, "(split {c} {a} {b})"),
            Merge(c, a, b) => write!(f, "(merge {c} {a} {b})"),
            Tensor(ds) => list(f, "tensor", ds),
            Seq(ds) => list(f, "seq", ds),
            Scale(k, d) => write!(f, "(scale {k} {d})"),
            Sum(ds) => list(f, "sum", ds),
        }
    }
}

fn parse_color(cur: &mut Cursor<'_>) -> Result<Color, ParseError> {
    cur.skip_ws();
    if cur.eat("1") {
        Ok(Color::One)
    } else if cur.eat("2") {
        Ok(Color::Two)
    } else {
        Err(cur.error("color 1 or 2"))
    }
}

fn parse_u32(cur: &mut Cursor<'_>) -> Result<u32, ParseError> {
    cur.skip_ws();
    let v = cur.uint()?;
    u32::try_from(v).map_err(|_| cur.error("thickness in range"))
}

fn parse_children(cur: &mut Cursor<'_>) -> Result<Vec<ThickDiagram>, ParseError> {
    let mut out = Vec::new();
    loop {
        cur.skip_ws();
        if cur.starts_with(")") {
            return Ok(out);
        }
        out.push(parse_diagram(cur)?);
    }
}

pub(crate) fn parse_diagram(cur: &mut Cursor<'_>) -> Result<ThickDiagram, ParseError> {
    use ThickDiagram::*;
    cur.skip_ws();
    cur.expect("(")?;
    cur.skip_ws();
    let start = cur.pos();
    let head: String = cur.rest().chars().take_while(|c| c.is_ascii_alphabetic()).collect();
    cur.eat(&head);
    let d = match head.as_str() {
        "id" => Id(parse_color(cur)?, parse_u32(cur)?),
        "label" => {
            let c = parse_color(cur)?;
            let a = parse_u32(cur)?;
            cur.skip_ws();
            Label(c, a, parse_partition(cur)?)
        }
        "cross" => {
            let l = (parse_color(cur)?, parse_u32(cur)?);
            let r = (parse_color(cur)?, parse_u32(cur)?);
            Cross(l, r)
        }
        "split" => Split(parse_color(cur)?, parse_u32(cur)?, parse_u32(cur)?),
        "merge" => Merge(parse_color(cur)?, parse_u32(cur)?, parse_u32(cur)?),
        "tensor" => Tensor(parse_children(cur)?),
        "seq" => Seq(parse_children(cur)?),
        "sum" => Sum(parse_children(cur)?),
        "scale" => {
            cur.skip_ws();
            let k = cur.int()?;
            Scale(k, Box::new(parse_diagram(cur)?))
        }
        _ => {
            return Err(ParseError {
                pos: start,
                expected: "one of id, label, cross, split, merge, tensor, seq, scale, sum".into(),
                found: format!("'{head}'"),
            })
        }
    };
    cur.skip_ws();
    cur.expect(")")?;
    Ok(d)
}

impl FromStr for ThickDiagram {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut cur = Cursor::new(s);
        let d = parse_diagram(&mut cur)?;
        cur.finish()?;
        Ok(d)
    }
}
