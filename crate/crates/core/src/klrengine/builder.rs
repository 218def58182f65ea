//! Layer-by-layer construction of thick diagrams, and the morphisms built
//! from it: `λ^p_α`, `σ^p_α`, the differentials `d_i` and homotopies `h_i`,
//! and both sides of the thick local relations.

use super::thick::{edges_string, Edge, ThickDiagram, ThickError};
use crate::partitions::{enumerate_box, multi_lr, Partition};
use crate::Color;

/// Builds a diagram bottom to top while tracking the current boundary.
#[derive(Clone, Debug)]
pub struct Builder {
    source: Vec<Edge>,
    boundary: Vec<Edge>,
    layers: Vec<ThickDiagram>,
    sign: i64,
}

fn invalid(msg: String) -> ThickError {
    ThickError::Invalid(msg)
}

impl Builder {
    pub fn new(source: Vec<Edge>) -> Self {
        Builder { boundary: source.clone(), source, layers: Vec::new(), sign: 1 }
    }

    pub fn boundary(&self) -> &[Edge] {
        &self.boundary
    }

    fn edge(&self, pos: usize) -> Result<Edge, ThickError> {
        self.boundary
            .get(pos)
            .copied()
            .ok_or_else(|| invalid(format!("no edge at {pos} in {}", edges_string(&self.boundary))))
    }

    fn push(&mut self, pos: usize, width: usize, gen: ThickDiagram, replacement: Vec<Edge>) {
        let mut layer: Vec<ThickDiagram> = self.boundary[..pos].iter().map(|&(c, a)| ThickDiagram::Id(c, a)).collect();
        layer.push(gen);
        layer.extend(self.boundary[pos + width..].iter().map(|&(c, a)| ThickDiagram::Id(c, a)));
        self.boundary.splice(pos..pos + width, replacement);
        self.layers.push(ThickDiagram::Tensor(layer));
    }

    pub fn split(&mut self, pos: usize, a: u32, b: u32) -> Result<&mut Self, ThickError> {
        let (c, t) = self.edge(pos)?;
        if t != a + b {
            return Err(invalid(format!("cannot split thickness {t} into ({a},{b})")));
        }
        self.push(pos, 1, ThickDiagram::Split(c, a, b), vec![(c, a), (c, b)]);
        Ok(self)
    }

    pub fn merge(&mut self, pos: usize) -> Result<&mut Self, ThickError> {
        let (c, a) = self.edge(pos)?;
        let (c2, b) = self.edge(pos + 1)?;
        if c != c2 {
            return Err(invalid(format!("cannot merge colors {c} and {c2}")));
        }
        self.push(pos, 2, ThickDiagram::Merge(c, a, b), vec![(c, a + b)]);
        Ok(self)
    }

    pub fn cross(&mut self, pos: usize) -> Result<&mut Self, ThickError> {
        let l = self.edge(pos)?;
        let r = self.edge(pos + 1)?;
        self.push(pos, 2, ThickDiagram::Cross(l, r), vec![r, l]);
        Ok(self)
    }

    pub fn label(&mut self, pos: usize, alpha: &Partition) -> Result<&mut Self, ThickError> {
        let (c, a) = self.edge(pos)?;
        self.push(pos, 1, ThickDiagram::Label(c, a, alpha.clone()), vec![(c, a)]);
        Ok(self)
    }

    /// `d` dots on a thin edge.
    pub fn dots(&mut self, pos: usize, d: u32) -> Result<&mut Self, ThickError> {
        let (_, a) = self.edge(pos)?;
        if a != 1 {
            return Err(invalid(format!("dots need a thin edge, found thickness {a}")));
        }
        self.label(pos, &Partition::row(d))
    }

    pub fn negate(&mut self, yes: bool) -> &mut Self {
        if yes {
            self.sign = -self.sign;
        }
        self
    }

    pub fn finish(&self) -> ThickDiagram {
        let body = if self.layers.is_empty() {
            ThickDiagram::identity_on(&self.source)
        } else {
            ThickDiagram::Seq(self.layers.clone())
        };
        if self.sign == 1 {
            body
        } else {
            ThickDiagram::Scale(self.sign, Box::new(body))
        }
    }
}

fn sign_of(k: i64) -> bool {
    k.rem_euclid(2) == 1
}

/// The object `E_i^(a) E_j^(b) E_i^(c)` as a boundary.
pub fn triple(lead: Color, a: u32, b: u32, c: u32) -> Vec<Edge> {
    vec![(lead, a), (lead.other(), b), (lead, c)]
}

/// Index set `(p, α)` with `max(0,b-a) ≤ p ≤ min(b,c)` and `α ∈ P(c-p, a-r)`, `r = b-p`.
pub fn admissible_indices(a: u32, b: u32, c: u32) -> Vec<(u32, Partition)> {
    let mut out = Vec::new();
    for p in b.saturating_sub(a)..=b.min(c) {
        let r = b - p;
        for alpha in enumerate_box(c - p, a - r) {
            out.push((p, alpha));
        }
    }
    out
}

fn check_lambda_params(a: u32, b: u32, c: u32, p: u32, alpha: &Partition) -> Result<u32, ThickError> {
    if b > a + c {
        return Err(invalid(format!("need b ≤ a+c, got ({a},{b},{c})")));
    }
    if p < b.saturating_sub(a) || p > b.min(c) {
        return Err(invalid(format!("p={p} outside [{}, {}]", b.saturating_sub(a), b.min(c))));
    }
    let r = b - p;
    if !alpha.fits(c - p, a - r) {
        return Err(invalid(format!("{alpha} not in P({}, {})", c - p, a - r)));
    }
    Ok(r)
}

/// Shift `2|α| - (c-p)(a-r)` carried by the source of `λ^p_α`.
pub fn lambda_shift(a: u32, b: u32, c: u32, p: u32, alpha: &Partition) -> i64 {
    let r = b - p;
    2 * alpha.size() as i64 - ((c - p) as i64) * ((a - r) as i64)
}

/// `λ^p_α : E_j^(p) E_i^(a+c) E_j^(r) → E_i^(a) E_j^(b) E_i^(c)`.
pub fn lambda(lead: Color, a: u32, b: u32, c: u32, p: u32, alpha: &Partition) -> Result<ThickDiagram, ThickError> {
    let r = check_lambda_params(a, b, c, p, alpha)?;
    let j = lead.other();
    let mut bld = Builder::new(vec![(j, p), (lead, a + c), (j, r)]);
    bld.split(1, a + c - p, p)?
        .cross(0)?
        .cross(2)?
        .merge(1)?
        .split(0, a, c - p)?
        .cross(1)?
        .label(2, alpha)?
        .merge(2)?
        .negate(sign_of((r * (a + c - r) + alpha.size()) as i64));
    Ok(bld.finish())
}

/// `σ^p_α : E_i^(a) E_j^(b) E_i^(c) → E_j^(p) E_i^(a+c) E_j^(r)`, labelled by `π_{hat α}`.
pub fn sigma(lead: Color, a: u32, b: u32, c: u32, p: u32, alpha: &Partition) -> Result<ThickDiagram, ThickError> {
    let r = check_lambda_params(a, b, c, p, alpha)?;
    let hat = alpha.hat(c - p, a - r).map_err(|e| invalid(e.to_string()))?;
    let mut bld = Builder::new(triple(lead, a, b, c));
    bld.split(0, r, a - r)?
        .label(1, &hat)?
        .cross(1)?
        .merge(2)?
        .split(1, p, r)?
        .cross(0)?
        .cross(2)?
        .merge(1)?;
    Ok(bld.finish())
}

fn check_complex(a: u32, b: u32, i: u32) -> Result<(), ThickError> {
    if !(a > b && b > 0) {
        return Err(invalid(format!("need a > b > 0, got ({a},{b})")));
    }
    if i >= a {
        return Err(invalid(format!("need 0 ≤ i ≤ a-1, got i={i}")));
    }
    Ok(())
}

/// `C_i = E_1^(a-i) E_2^(b) E_1^(i)`.
pub fn complex_term(a: u32, b: u32, i: u32) -> Vec<Edge> {
    triple(Color::One, a - i, b, i)
}

/// Shift of `C_i` in the complex.
pub fn complex_shift(a: u32, b: u32, i: u32) -> i64 {
    i as i64 * (a as i64 - b as i64 - 1)
}

/// `d_i : C_i → C_{i+1}`.
pub fn differential(a: u32, b: u32, i: u32) -> Result<ThickDiagram, ThickError> {
    check_complex(a, b, i)?;
    let mut bld = Builder::new(complex_term(a, b, i));
    bld.split(0, a - i - 1, 1)?.cross(1)?.merge(2)?;
    Ok(bld.finish())
}

/// `h_i : C_{i+1} → C_i`.
pub fn homotopy(a: u32, b: u32, i: u32) -> Result<ThickDiagram, ThickError> {
    check_complex(a, b, i)?;
    let mut bld = Builder::new(complex_term(a, b, i + 1));
    bld.split(2, 1, i)?
        .cross(1)?
        .dots(1, a - b - 1)?
        .merge(0)?
        .negate(sign_of((a - 1 - i) as i64));
    Ok(bld.finish())
}

/// `E_i^(a) E_j^(c) E_i^(b)` crossed into `E_i^(b) E_j^(c) E_i^(a)` by three thick crossings.
pub fn thick_r3_lhs(lead: Color, a: u32, c: u32, b: u32) -> Result<ThickDiagram, ThickError> {
    let mut bld = Builder::new(triple(lead, a, c, b));
    bld.cross(0)?.cross(1)?.cross(0)?;
    Ok(bld.finish())
}

/// `E_i^(a) E_j^(c) E_i^(b)` crossed the other way round.
pub fn thick_r3_far(lead: Color, a: u32, c: u32, b: u32) -> Result<ThickDiagram, ThickError> {
    let mut bld = Builder::new(triple(lead, a, c, b));
    bld.cross(1)?.cross(0)?.cross(1)?;
    Ok(bld.finish())
}

/// One correction term: `t` strands of each outer edge pass through with
/// labels `π_α`, `π_β` and `π_γ'` on the middle edge.
#[allow(clippy::too_many_arguments)]
pub fn thick_r3_term(
    lead: Color,
    a: u32,
    c: u32,
    b: u32,
    t: u32,
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
) -> Result<ThickDiagram, ThickError> {
    let mut bld = Builder::new(triple(lead, a, c, b));
    bld.split(0, t, a - t)?
        .split(3, b - t, t)?
        .label(0, alpha)?
        .label(4, beta)?
        .label(2, &gamma.conjugate())?
        .cross(2)?
        .cross(1)?
        .cross(2)?
        .merge(0)?
        .merge(2)?;
    Ok(bld.finish())
}

/// Right-hand side of the thick R3 move, `Σ_t Σ c^{K_t}_{αβγ} (term)` with
/// `K_t = (c-t)^t`. The `t = 0` term is the far composite.
pub fn thick_r3_rhs(lead: Color, a: u32, c: u32, b: u32) -> Result<ThickDiagram, ThickError> {
    let mut terms = Vec::new();
    for t in 0..=a.min(b).min(c) {
        let k = Partition::rectangle(t, c - t);
        let parts = enumerate_box(t, c - t);
        for alpha in &parts {
            for beta in &parts {
                for gamma in &parts {
                    let m = multi_lr(&[alpha.clone(), beta.clone(), gamma.clone()], &k);
                    if m == 0 {
                        continue;
                    }
                    let d = thick_r3_term(lead, a, c, b, t, alpha, beta, gamma)?;
                    terms.push(if m == 1 { d } else { ThickDiagram::Scale(m as i64, Box::new(d)) });
                }
            }
        }
    }
    Ok(ThickDiagram::Sum(terms))
}
