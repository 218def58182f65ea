//! Verification suites: thin local relations, the thick relation suite,
//! `σλ` orthogonality, idempotent decompositions and the null-homotopic
//! complexes.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use super::builder::{
    admissible_indices, complex_shift, complex_term, differential, homotopy, lambda, lambda_shift, sigma, thick_r3_lhs,
    thick_r3_rhs, triple, Builder,
};
use super::operator::{seq_string, Degree, DiagramOperator};
use super::report::CheckResult;
use super::thick::{idempotent, idempotent_from_word, longest_word, Edge, ThickDiagram, ThickError};
use crate::partitions::{enumerate_box, enumerate_bounded, skew_schur_expand, Partition};
use crate::poly::Poly;
use crate::Color;

fn all_sequences(len: usize) -> Vec<Vec<Color>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|s| {
                Color::ALL.iter().map(move |&c| {
                    let mut t = s.clone();
                    t.push(c);
                    t
                })
            })
            .collect();
    }
    out
}

fn op_err(e: super::operator::OperatorError) -> ThickError {
    ThickError::Operator(e)
}

fn cross(seq: &[Color], k: usize) -> Result<DiagramOperator, ThickError> {
    DiagramOperator::crossing(seq, k).map_err(op_err)
}

fn mul(seq: &[Color], p: Poly) -> DiagramOperator {
    DiagramOperator::multiplication(seq, p)
}

/// Crossings applied bottom to top at the given positions.
fn crossings(seq: &[Color], word: &[usize]) -> Result<DiagramOperator, ThickError> {
    let mut acc = DiagramOperator::identity(seq);
    for &k in word {
        acc = cross(acc.target(), k)?.compose(&acc).map_err(op_err)?;
    }
    Ok(acc)
}

fn then(first: &DiagramOperator, second: &DiagramOperator) -> Result<DiagramOperator, ThickError> {
    second.compose(first).map_err(op_err)
}

fn diff(l: Result<DiagramOperator, ThickError>, r: Result<DiagramOperator, ThickError>) -> Result<DiagramOperator, ThickError> {
    l?.sub(&r?).map_err(op_err)
}

fn local_checks(seq: &[Color]) -> Vec<CheckResult> {
    let n = seq.len();
    let s = seq_string(seq);
    let mut out = Vec::new();
    for k in 0..n.saturating_sub(1) {
        let params = |extra: Value| {
            let mut p = json!({"seq": s, "k": k + 1});
            if let Value::Object(m) = extra {
                p.as_object_mut().unwrap().extend(m);
            }
            p
        };
        let xk = Poly::var(k);
        let xk1 = Poly::var(k + 1);
        let psi = cross(seq, k);
        let tgt = {
            let mut t = seq.to_vec();
            t.swap(k, k + 1);
            t
        };
        let psi2 = psi.as_ref().map_err(Clone::clone).and_then(|p| then(p, &cross(&tgt, k)?));
        if seq[k] == seq[k + 1] {
            out.push(CheckResult::zero("double-crossing-same", params(json!({})), psi2));
            // x_k ψ - ψ x_{k+1} = 1 and ψ x_k - x_{k+1} ψ = 1
            let one = Ok(DiagramOperator::identity(seq));
            let top_left = psi.as_ref().map_err(Clone::clone).and_then(|p| then(p, &mul(&tgt, xk.clone())));
            let bottom_right = psi.as_ref().map_err(Clone::clone).and_then(|p| then(&mul(seq, xk1.clone()), p));
            out.push(CheckResult::equal("nilhecke-dot-slide", params(json!({"side": "top-left"})), diff(top_left, bottom_right), one.clone()));
            let bottom_left = psi.as_ref().map_err(Clone::clone).and_then(|p| then(&mul(seq, xk.clone()), p));
            let top_right = psi.as_ref().map_err(Clone::clone).and_then(|p| then(p, &mul(&tgt, xk1.clone())));
            out.push(CheckResult::equal("nilhecke-dot-slide", params(json!({"side": "bottom-left"})), diff(bottom_left, top_right), one));
            for d in 1..=3u16 {
                let xd = Poly::var_pow(k, d);
                let yd = Poly::var_pow(k + 1, d);
                let mut rhs = Poly::zero();
                for r in 0..d {
                    rhs += &(&Poly::var_pow(k, r) * &Poly::var_pow(k + 1, d - 1 - r));
                }
                let p = psi.as_ref().map_err(Clone::clone);
                let first = p.clone().and_then(|p| diff(then(p, &mul(&tgt, xd.clone())), then(&mul(seq, yd.clone()), p)));
                let second = p.and_then(|p| diff(then(&mul(seq, xd.clone()), p), then(p, &mul(&tgt, yd.clone()))));
                out.push(CheckResult::equal("dot-migration", params(json!({"d": d, "form": "top-left"})), first, Ok(mul(seq, rhs.clone()))));
                out.push(CheckResult::equal("dot-migration", params(json!({"d": d, "form": "bottom-left"})), second, Ok(mul(seq, rhs))));
            }
        } else {
            out.push(CheckResult::equal("r2-adjacent", params(json!({})), psi2, Ok(mul(seq, &xk + &xk1))));
            let p = psi.as_ref().map_err(Clone::clone);
            let a = p.clone().and_then(|p| then(p, &mul(&tgt, xk1.clone())));
            let b = p.clone().and_then(|p| then(&mul(seq, xk.clone()), p));
            out.push(CheckResult::equal("dot-slide-adjacent", params(json!({"side": "left-to-right"})), a, b));
            let a = p.clone().and_then(|p| then(p, &mul(&tgt, xk.clone())));
            let b = p.and_then(|p| then(&mul(seq, xk1.clone()), p));
            out.push(CheckResult::equal("dot-slide-adjacent", params(json!({"side": "right-to-left"})), a, b));
        }
    }
    for k in 0..n.saturating_sub(2) {
        let params = json!({"seq": s, "k": k + 1});
        let lhs = crossings(seq, &[k, k + 1, k]);
        let rhs = crossings(seq, &[k + 1, k, k + 1]);
        let (c0, c1, c2) = (seq[k], seq[k + 1], seq[k + 2]);
        if c0 == c2 && c0 != c1 {
            let rhs = rhs.and_then(|r| r.add(&DiagramOperator::identity(seq)).map_err(op_err));
            out.push(CheckResult::equal("r3-adjacent", params, lhs, rhs));
        } else if c0 == c1 && c1 == c2 {
            out.push(CheckResult::equal("r3-same", params, lhs, rhs));
        } else {
            out.push(CheckResult::equal("r3-braid", params, lhs, rhs));
        }
    }
    out
}

/// Every thin local relation on every color sequence of length `2..=max_len`.
pub fn verify_local_relations(max_len: usize) -> Vec<CheckResult> {
    let seqs: Vec<Vec<Color>> = (2..=max_len).flat_map(all_sequences).collect();
    seqs.par_iter().map(|s| local_checks(s)).collect::<Vec<_>>().into_iter().flatten().collect()
}

fn compile(d: &ThickDiagram) -> Result<DiagramOperator, ThickError> {
    d.compile()
}

fn audit(name: &str, d: &ThickDiagram) -> CheckResult {
    let params = json!({"diagram": d.to_string()});
    let comb = d.combinatorial_degree();
    match d.effective_degree() {
        Err(e) => CheckResult::fail("degree-audit", params, format!("{name}: error {e}")),
        Ok(Degree::Zero) => CheckResult::pass("degree-audit", params),
        Ok(eff) => CheckResult::expect("degree-audit", params, comb.map(Degree::Homogeneous) == Some(eff), || {
            format!("{name}: combinatorial {comb:?}, effective {eff:?}")
        }),
    }
}

fn seq_diagram(layers: Vec<ThickDiagram>) -> ThickDiagram {
    ThickDiagram::Seq(layers)
}

fn id(e: Edge) -> ThickDiagram {
    ThickDiagram::Id(e.0, e.1)
}

fn tensor(ds: Vec<ThickDiagram>) -> ThickDiagram {
    ThickDiagram::Tensor(ds)
}

fn build(source: Vec<Edge>, f: impl FnOnce(&mut Builder) -> Result<(), ThickError>) -> Result<ThickDiagram, ThickError> {
    let mut b = Builder::new(source);
    f(&mut b)?;
    Ok(b.finish())
}

fn compile_built(d: Result<ThickDiagram, ThickError>) -> Result<DiagramOperator, ThickError> {
    d.and_then(|d| d.compile())
}

/// `e_a² = e_a`, and the closed form agrees with products of divided differences.
pub fn verify_idempotent_edges(max_a: u32) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for color in Color::ALL {
        for a in 1..=max_a {
            let e = idempotent(color, a);
            let params = json!({"color": color.index(), "a": a});
            out.push(CheckResult::equal("idempotent", params.clone(), e.compose(&e).map_err(op_err), Ok(e.clone())));
            let w = idempotent_from_word(color, a, &longest_word(a)).map_err(op_err);
            out.push(CheckResult::equal("idempotent-word", params, w, Ok(e)));
        }
    }
    let w1 = idempotent_from_word(Color::One, 3, &[0, 1, 0]).map_err(op_err);
    let w2 = idempotent_from_word(Color::One, 3, &[1, 0, 1]).map_err(op_err);
    out.push(CheckResult::equal("idempotent-braid-words", json!({"a": 3, "words": ["121", "212"]}), w1, w2));
    out
}

fn associativity(color: Color, a: u32, b: u32, c: u32) -> Vec<CheckResult> {
    let params = json!({"color": color.index(), "a": a, "b": b, "c": c});
    let merge_l = seq_diagram(vec![
        tensor(vec![ThickDiagram::Merge(color, a, b), id((color, c))]),
        ThickDiagram::Merge(color, a + b, c),
    ]);
    let merge_r = seq_diagram(vec![
        tensor(vec![id((color, a)), ThickDiagram::Merge(color, b, c)]),
        ThickDiagram::Merge(color, a, b + c),
    ]);
    let split_l = seq_diagram(vec![
        ThickDiagram::Split(color, a + b, c),
        tensor(vec![ThickDiagram::Split(color, a, b), id((color, c))]),
    ]);
    let split_r = seq_diagram(vec![
        ThickDiagram::Split(color, a, b + c),
        tensor(vec![id((color, a)), ThickDiagram::Split(color, b, c)]),
    ]);
    let mut p1 = params.clone();
    p1["kind"] = json!("merge");
    let mut p2 = params;
    p2["kind"] = json!("split");
    vec![
        CheckResult::equal("associativity", p1, compile(&merge_l), compile(&merge_r)),
        CheckResult::equal("associativity", p2, compile(&split_l), compile(&split_r)),
    ]
}

fn pitchfork(i: Color, j: Color, a: u32, b: u32, c: u32) -> Vec<CheckResult> {
    let base = json!({"thick": i.index(), "through": j.index(), "a": a, "b": b, "c": c});
    let with = |variant: &str| {
        let mut p = base.clone();
        p["variant"] = json!(variant);
        p
    };
    let ab = (i, a + b);
    let jc = (j, c);
    let cases = vec![
        (
            "split-right",
            build(vec![ab, jc], |x| x.split(0, a, b)?.cross(1)?.cross(0).map(drop)),
            build(vec![ab, jc], |x| x.cross(0)?.split(1, a, b).map(drop)),
        ),
        (
            "split-left",
            build(vec![jc, ab], |x| x.split(1, a, b)?.cross(0)?.cross(1).map(drop)),
            build(vec![jc, ab], |x| x.cross(0)?.split(0, a, b).map(drop)),
        ),
        (
            "merge-right",
            build(vec![(i, a), (i, b), jc], |x| x.cross(1)?.cross(0)?.merge(1).map(drop)),
            build(vec![(i, a), (i, b), jc], |x| x.merge(0)?.cross(0).map(drop)),
        ),
        (
            "merge-left",
            build(vec![jc, (i, a), (i, b)], |x| x.cross(0)?.cross(1)?.merge(0).map(drop)),
            build(vec![jc, (i, a), (i, b)], |x| x.merge(1)?.cross(0).map(drop)),
        ),
    ];
    cases
        .into_iter()
        .map(|(v, l, r)| CheckResult::equal("pitchfork", with(v), compile_built(l), compile_built(r)))
        .collect()
}

fn opening(color: Color, a: u32, b: u32, x: u32) -> CheckResult {
    let params = json!({"color": color.index(), "a": a, "b": b, "x": x});
    let src = vec![(color, a + x), (color, b)];
    let lhs = build(src.clone(), |d| d.merge(0)?.split(0, b + x, a).map(drop));
    let rhs = build(src, |d| d.split(0, x, a)?.cross(1)?.merge(0).map(drop));
    CheckResult::equal("opening", params, compile_built(lhs), compile_built(rhs))
}

fn digon(color: Color, a: u32, b: u32, labels: &[(usize, Partition)]) -> Result<ThickDiagram, ThickError> {
    build(vec![(color, a + b)], |d| {
        d.split(0, a, b)?;
        for (pos, l) in labels {
            d.label(*pos, l)?;
        }
        d.merge(0).map(drop)
    })
}

/// Digon with `π_α` left and `π_β` right: `±e_{a+b}` when `β = hat α`, else zero.
fn digon_table(color: Color, a: u32, b: u32) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for alpha in enumerate_box(a, b) {
        let hat = alpha.hat(a, b).expect("fits");
        for beta in enumerate_box(b, a) {
            let params = json!({"color": color.index(), "a": a, "b": b, "alpha": alpha.to_string(), "beta": beta.to_string()});
            let lhs = compile_built(digon(color, a, b, &[(0, alpha.clone()), (1, beta.clone())]));
            let e = idempotent(color, a + b);
            let rhs = if beta == hat {
                let sign = if beta.size() % 2 == 1 { -1 } else { 1 };
                e.scale(&BigInt::from(sign))
            } else {
                DiagramOperator::zero(e.source().to_vec(), e.target().to_vec())
            };
            out.push(CheckResult::equal("digon", params, lhs, Ok(rhs)));
        }
    }
    out
}

/// Digon with `π_γ π_ψ` on the left edge: the skew Schur expansion of `γ` by the box complement of `ψ`.
fn digon_skew(color: Color, a: u32, b: u32) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let gammas = enumerate_bounded(a, a * b + 2);
    for psi in enumerate_box(a, b) {
        let k_minus = psi.box_complement(a, b);
        for gamma in &gammas {
            let params = json!({"color": color.index(), "a": a, "b": b, "gamma": gamma.to_string(), "psi": psi.to_string()});
            let lhs = compile_built(digon(color, a, b, &[(0, gamma.clone()), (0, psi.clone())]));
            let mut terms = Vec::new();
            for (nu, m) in skew_schur_expand(gamma, &k_minus) {
                let l = ThickDiagram::Label(color, a + b, nu);
                terms.push(if m == 1 { l } else { ThickDiagram::Scale(m as i64, Box::new(l)) });
            }
            let rhs = if terms.is_empty() {
                let e = idempotent(color, a + b);
                Ok(DiagramOperator::zero(e.source().to_vec(), e.target().to_vec()))
            } else {
                compile(&ThickDiagram::Sum(terms))
            };
            out.push(CheckResult::equal("digon-skew", params, lhs, rhs));
        }
    }
    out
}

fn thick_r2(i: Color, a: u32, b: u32) -> CheckResult {
    let j = i.other();
    let params = json!({"left": i.index(), "a": a, "b": b});
    let lhs = seq_diagram(vec![ThickDiagram::Cross((i, a), (j, b)), ThickDiagram::Cross((j, b), (i, a))]);
    let terms: Vec<ThickDiagram> = enumerate_box(a, b)
        .into_iter()
        .map(|alpha| {
            let hat = alpha.hat(a, b).expect("fits");
            tensor(vec![ThickDiagram::Label(i, a, alpha), ThickDiagram::Label(j, b, hat)])
        })
        .collect();
    CheckResult::equal("thick-r2", params, compile(&lhs), compile(&ThickDiagram::Sum(terms)))
}

fn thick_r3(lead: Color, a: u32, c: u32, b: u32) -> CheckResult {
    let params = json!({"lead": lead.index(), "a": a, "c": c, "b": b});
    let lhs = thick_r3_lhs(lead, a, c, b);
    let rhs = thick_r3_rhs(lead, a, c, b);
    CheckResult::equal("thick-r3", params, compile_built(lhs), compile_built(rhs))
}

/// All generators with thickness parameters up to `max`.
pub fn generators(max: u32) -> Vec<ThickDiagram> {
    let mut out = Vec::new();
    for c in Color::ALL {
        for a in 1..=max {
            out.push(ThickDiagram::Id(c, a));
            for alpha in enumerate_box(a, 2) {
                out.push(ThickDiagram::Label(c, a, alpha));
            }
            for b in 1..=max {
                out.push(ThickDiagram::Split(c, a, b));
                out.push(ThickDiagram::Merge(c, a, b));
                for d in Color::ALL {
                    out.push(ThickDiagram::Cross((c, a), (d, b)));
                }
            }
        }
    }
    out
}

/// The whole thick relation suite for parameters up to `max`.
pub fn verify_thick(max: u32) -> Vec<CheckResult> {
    type Job = Box<dyn Fn() -> Vec<CheckResult> + Send + Sync>;
    let mut jobs: Vec<Job> = Vec::new();
    jobs.push(Box::new(move || verify_idempotent_edges(max.max(4))));
    let r = 1..=max;
    for c in Color::ALL {
        for a in r.clone() {
            for b in r.clone() {
                for x in r.clone() {
                    jobs.push(Box::new(move || associativity(c, a, b, x)));
                }
            }
        }
    }
    for i in Color::ALL {
        for j in Color::ALL {
            for a in r.clone() {
                for b in r.clone() {
                    for c in r.clone() {
                        jobs.push(Box::new(move || pitchfork(i, j, a, b, c)));
                    }
                }
            }
        }
    }
    for c in Color::ALL {
        for a in r.clone() {
            for b in r.clone() {
                for x in r.clone() {
                    jobs.push(Box::new(move || vec![opening(c, a, b, x)]));
                }
                jobs.push(Box::new(move || digon_table(c, a, b)));
                jobs.push(Box::new(move || digon_skew(c, a, b)));
                jobs.push(Box::new(move || vec![thick_r2(c, a, b)]));
            }
        }
    }
    for lead in Color::ALL {
        for a in r.clone() {
            for c in r.clone() {
                for b in r.clone() {
                    jobs.push(Box::new(move || vec![thick_r3(lead, a, c, b)]));
                }
            }
        }
    }
    jobs.push(Box::new(move || generators(max).iter().map(|g| audit("generator", g)).collect()));
    jobs.par_iter().map(|j| j()).collect::<Vec<_>>().into_iter().flatten().collect()
}

/// Parameters of the `σλ` and idempotent suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Triple {
    pub lead: Color,
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl Triple {
    pub fn new(a: u32, b: u32, c: u32) -> Self {
        Triple { lead: Color::One, a, b, c }
    }

    fn params(&self) -> Value {
        json!({"lead": self.lead.index(), "a": self.a, "b": self.b, "c": self.c})
    }

    fn check(&self) -> Result<(), String> {
        if self.b > self.a + self.c {
            Err(format!("need b ≤ a+c, got ({},{},{})", self.a, self.b, self.c))
        } else {
            Ok(())
        }
    }
}

fn index_params(t: &Triple, p: u32, alpha: &Partition) -> Value {
    let mut v = t.params();
    v["p"] = json!(p);
    v["alpha"] = json!(alpha.to_string());
    v
}

fn lambda_sigma_audits(t: &Triple) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for (p, alpha) in admissible_indices(t.a, t.b, t.c) {
        let params = index_params(t, p, &alpha);
        let shift = lambda_shift(t.a, t.b, t.c, p, &alpha);
        for (name, d, expect) in [
            ("lambda", lambda(t.lead, t.a, t.b, t.c, p, &alpha), shift),
            ("sigma", sigma(t.lead, t.a, t.b, t.c, p, &alpha), -shift),
        ] {
            match d {
                Err(e) => out.push(CheckResult::fail("degree-audit", params.clone(), format!("{name}: {e}"))),
                Ok(d) => {
                    let mut r = audit(name, &d);
                    r.params = params.clone();
                    r.params["map"] = json!(name);
                    out.push(r);
                    let comb = d.combinatorial_degree();
                    out.push(CheckResult::expect("shift-degree", json!({"map": name, "params": params}), comb == Some(expect), || {
                        format!("{name}: degree {comb:?}, shift requires {expect}")
                    }));
                }
            }
        }
    }
    out
}

/// `σ^{p'}_{α'} λ^p_α = δ δ Id` for every pair of admissible indices.
pub fn verify_sigma_lambda(t: Triple) -> Vec<CheckResult> {
    if let Err(e) = t.check() {
        return vec![CheckResult::fail("sigma-lambda", t.params(), e)];
    }
    let idx = admissible_indices(t.a, t.b, t.c);
    let pairs: Vec<_> = idx.iter().flat_map(|x| idx.iter().map(move |y| (x.clone(), y.clone()))).collect();
    let mut out: Vec<CheckResult> = pairs
        .par_iter()
        .map(|((p, alpha), (p2, alpha2))| {
            let mut params = index_params(&t, *p, alpha);
            params["p'"] = json!(p2);
            params["alpha'"] = json!(alpha2.to_string());
            let l = lambda(t.lead, t.a, t.b, t.c, *p, alpha);
            let s = sigma(t.lead, t.a, t.b, t.c, *p2, alpha2);
            let (l, s) = match (l, s) {
                (Ok(l), Ok(s)) => (l, s),
                (Err(e), _) | (_, Err(e)) => return CheckResult::fail("sigma-lambda", params, e.to_string()),
            };
            let src = match l.source() {
                Ok(s) => s,
                Err(e) => return CheckResult::fail("sigma-lambda", params, e.to_string()),
            };
            let comp = l.compile().and_then(|lo| then(&lo, &s.compile()?));
            if p == p2 && alpha == alpha2 {
                CheckResult::equal("sigma-lambda", params, comp, ThickDiagram::identity_on(&src).compile())
            } else {
                CheckResult::zero("sigma-lambda", params, comp)
            }
        })
        .collect();
    out.extend(lambda_sigma_audits(&t));
    out
}

fn idempotent_op(t: &Triple, p: u32, alpha: &Partition) -> Result<DiagramOperator, ThickError> {
    let l = lambda(t.lead, t.a, t.b, t.c, p, alpha)?;
    let s = sigma(t.lead, t.a, t.b, t.c, p, alpha)?;
    then(&s.compile()?, &l.compile()?)
}

/// `e^p_α = λ^p_α σ^p_α` are orthogonal idempotents summing to the identity.
pub fn verify_idempotents(t: Triple) -> Vec<CheckResult> {
    if let Err(e) = t.check() {
        return vec![CheckResult::fail("idempotents", t.params(), e)];
    }
    let idx = admissible_indices(t.a, t.b, t.c);
    let ops: Vec<Result<DiagramOperator, ThickError>> = idx.par_iter().map(|(p, a)| idempotent_op(&t, *p, a)).collect();
    let mut out = Vec::new();
    for (k, (p, alpha)) in idx.iter().enumerate() {
        for (m, (p2, alpha2)) in idx.iter().enumerate() {
            let mut params = index_params(&t, *p, alpha);
            params["p'"] = json!(p2);
            params["alpha'"] = json!(alpha2.to_string());
            let prod = match (&ops[k], &ops[m]) {
                (Ok(e), Ok(f)) => then(f, e),
                (Err(e), _) | (_, Err(e)) => Err(e.clone()),
            };
            if k == m {
                out.push(CheckResult::equal("idempotent-square", params, prod, ops[k].clone()));
            } else {
                out.push(CheckResult::zero("idempotent-orthogonal", params, prod));
            }
        }
    }
    let id = ThickDiagram::identity_on(&triple(t.lead, t.a, t.b, t.c)).compile();
    let total = ops
        .iter()
        .cloned()
        .collect::<Result<Vec<_>, _>>()
        .and_then(|v| {
            let src = v[0].source().to_vec();
            DiagramOperator::sum(&src, &src, &v).map_err(op_err)
        });
    out.push(CheckResult::equal("idempotent-completeness", t.params(), total, id));
    out
}

/// Which way the complex points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Reversed,
}

/// `d² = 0` (or `h² = 0`) and the homotopy identities on `C_0 … C_a`.
pub fn verify_complex(a: u32, b: u32, direction: Direction) -> Vec<CheckResult> {
    let base = json!({"a": a, "b": b, "direction": direction});
    if !(a > b && b > 0) {
        return vec![CheckResult::fail("complex", base, format!("need a > b > 0, got ({a},{b})"))];
    }
    let with = |extra: Value| {
        let mut p = base.clone();
        p.as_object_mut().unwrap().extend(extra.as_object().unwrap().clone());
        p
    };
    let ds: Vec<Result<DiagramOperator, ThickError>> =
        (0..a).into_par_iter().map(|i| differential(a, b, i).and_then(|d| d.compile())).collect();
    let hs: Vec<Result<DiagramOperator, ThickError>> =
        (0..a).into_par_iter().map(|i| homotopy(a, b, i).and_then(|d| d.compile())).collect();
    let get = |v: &[Result<DiagramOperator, ThickError>], i: u32| v[i as usize].clone();
    let ident = |i: u32| ThickDiagram::identity_on(&complex_term(a, b, i)).compile();
    let mut out = Vec::new();
    match direction {
        Direction::Forward => {
            for i in 0..a.saturating_sub(1) {
                let sq = get(&ds, i).and_then(|d0| then(&d0, &get(&ds, i + 1)?));
                out.push(CheckResult::zero("d-squared", with(json!({"i": i})), sq));
            }
        }
        Direction::Reversed => {
            for i in 0..a.saturating_sub(1) {
                let sq = get(&hs, i + 1).and_then(|h1| then(&h1, &get(&hs, i)?));
                out.push(CheckResult::zero("h-squared", with(json!({"i": i})), sq));
            }
        }
    }
    for i in 1..a {
        let hd = get(&ds, i).and_then(|d| then(&d, &get(&hs, i)?));
        let dh = get(&hs, i - 1).and_then(|h| then(&h, &get(&ds, i - 1)?));
        let sum = hd.and_then(|x| x.add(&dh?).map_err(op_err));
        out.push(CheckResult::equal("hom1", with(json!({"i": i})), sum, ident(i)));
    }
    let h0d0 = get(&ds, 0).and_then(|d| then(&d, &get(&hs, 0)?));
    out.push(CheckResult::equal("hom2", with(json!({})), h0d0, ident(0)));
    let dh = get(&hs, a - 1).and_then(|h| then(&h, &get(&ds, a - 1)?));
    out.push(CheckResult::equal("hom3", with(json!({})), dh, ident(a)));
    for i in 0..a {
        let s_i = complex_shift(a, b, i);
        let s_next = complex_shift(a, b, i + 1);
        for (name, d, expect) in [
            ("d", differential(a, b, i), s_i - s_next),
            ("h", homotopy(a, b, i), s_next - s_i),
        ] {
            let params = with(json!({"map": name, "i": i}));
            match d {
                Err(e) => out.push(CheckResult::fail("degree-audit", params, e.to_string())),
                Ok(d) => {
                    let mut r = audit(name, &d);
                    r.params = params.clone();
                    out.push(r);
                    let comb = d.combinatorial_degree();
                    out.push(CheckResult::expect("shift-degree", params, comb == Some(expect), || {
                        format!("{name}_{i}: degree {comb:?}, shifts require {expect}")
                    }));
                }
            }
        }
    }
    out
}
