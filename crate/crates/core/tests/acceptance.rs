//! Acceptance suite: one line per criterion, exact comparisons, pinned time limits.
//!
//! Runs without the libtest harness so the summary is always printed.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sl3cat::cli::{Expression, Separator, Term};
use sl3cat::klrengine::verify::{
    verify_complex, verify_idempotents, verify_local_relations, verify_sigma_lambda, verify_thick, Direction, Triple,
};
use sl3cat::klrengine::CheckResult;
use sl3cat::partitions::enumerate_box;
use sl3cat::qlaurent::{alternating_binomial_sum, qbinom, LaurentPoly, Sign};
use sl3cat::u3algebra::shuffle::{embed, embed_canonical};
use sl3cat::u3algebra::{canonicalize, higher_serre_sum, words_of_exponent, AlgElem, Word};
use sl3cat::u3category::{
    cross_hom_degree, decategorify, decategorify_indecomposables, endo_dotless_degrees, mixed_hom_degree,
    normalize_object, GradedObject,
};
use sl3cat::Color;

const SEED: u64 = 0x5eed_0003;

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

/// All checks pass and every required check name occurs.
fn all_pass(results: &[CheckResult], required: &[&str]) -> Outcome {
    if let Some(f) = results.iter().find(|r| !r.pass) {
        return Err(f.to_string());
    }
    let names: BTreeSet<&str> = results.iter().map(|r| r.check.as_str()).collect();
    for n in required {
        ensure(names.contains(n), || format!("no '{n}' checks ran"))?;
    }
    Ok(format!("{} checks", results.len()))
}

fn quantum_combinatorics() -> Outcome {
    for n in 1..=8 {
        for s in [Sign::Plus, Sign::Minus] {
            let v = alternating_binomial_sum(n, s);
            ensure(v.is_zero(), || format!("alternating sum N={n} {s}: {v}"))?;
        }
    }
    for m in 0..=6u32 {
        for n in 0..=6u32 {
            let mut oracle = LaurentPoly::zero();
            for alpha in enumerate_box(m, n) {
                oracle += &LaurentPoly::q_pow(2 * alpha.size() as i64 - (m * n) as i64);
            }
            let v = qbinom((m + n) as i64, m as i64);
            ensure(v == oracle, || format!("qbinom({},{m}) = {v}, partitions give {oracle}", m + n))?;
        }
    }
    Ok("16 alternating sums, 49 Gaussian identities".into())
}

fn canonical_basis() -> Outcome {
    let mut words = 0;
    for n in 0..=7 {
        for w in words_of_exponent(n) {
            let x = AlgElem::from_letters(&w.letters);
            let c = canonicalize(&x);
            ensure(c.is_positive(), || format!("{w} -> {c} is not positive"))?;
            ensure(embed(&x) == embed_canonical(&c), || format!("{w}: shuffle images differ"))?;
            words += 1;
        }
    }
    let mut sums = 0;
    for m in 2..=5 {
        for n in 1..m {
            for s in [Sign::Plus, Sign::Minus] {
                for lead in Color::ALL {
                    let v = higher_serre_sum(m, n, s, lead).map_err(|e| e.to_string())?;
                    ensure(v.is_zero(), || format!("serre m={m} n={n} {s} lead {lead}: {v}"))?;
                    sums += 1;
                }
            }
        }
    }
    Ok(format!("{words} words positive and oracle-equal, {sums} Serre sums zero"))
}

fn random_object(rng: &mut ChaCha8Rng) -> GradedObject {
    let mut obj = GradedObject::zero();
    let summands = rng.gen_range(1..=3);
    let mut budget = 6u32;
    for _ in 0..summands {
        let mut total = rng.gen_range(0..=budget);
        budget -= total;
        let mut letters = Vec::new();
        while total > 0 {
            let e = rng.gen_range(1..=total);
            let color = if rng.gen_bool(0.5) { Color::One } else { Color::Two };
            letters.push((color, e));
            total -= e;
        }
        obj.push(Word::new(letters), rng.gen_range(-5..=5));
    }
    obj
}

fn k0_consistency() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for i in 0..500 {
        let x = random_object(&mut rng);
        let lhs = decategorify_indecomposables(&normalize_object(&x));
        let rhs = canonicalize(&decategorify(&x));
        ensure(lhs == rhs, || format!("object {i} [{x}]: {lhs} vs {rhs}"))?;
    }
    Ok("500 random objects".into())
}

fn indecomposability_spectra() -> Outcome {
    let mut cases = 0;
    for a in 0..=3u32 {
        for c in 0..=3u32 {
            for b in a + c..=a + c + 2 {
                let d = endo_dotless_degrees(a, b, c);
                let zeros = d.iter().filter(|&&x| x == 0).count();
                ensure(zeros == 1 && d.iter().all(|&x| x >= 0), || format!("({a},{b},{c}): {d:?}"))?;
                cases += 1;
            }
        }
    }
    for a in 0..=3i64 {
        for c in 0..=3i64 {
            for x in 0..=3i64 {
                for y in 0..=3i64 {
                    for b in a + c + x + y..=a + c + x + y + 2 {
                        let d = cross_hom_degree(a, b, c, x, y);
                        ensure(d >= x * x + y * y, || format!("cross ({a},{b},{c},{x},{y}) = {d}"))?;
                    }
                }
            }
            for p in 0..=(a + c) as u32 {
                let d = mixed_hom_degree(a as u32, c as u32, p).map_err(|e| e.to_string())?;
                ensure((d == 0) == (p == c as u32) && d >= 0, || format!("mixed ({a},{c},{p}) = {d}"))?;
            }
        }
    }
    Ok(format!("{cases} endomorphism spectra"))
}

fn klr_relations() -> Outcome {
    all_pass(
        &verify_local_relations(3),
        &["double-crossing-same", "nilhecke-dot-slide", "dot-migration", "r2-adjacent", "dot-slide-adjacent", "r3-adjacent", "r3-same", "r3-braid"],
    )
}

fn thick_suite() -> Outcome {
    all_pass(
        &verify_thick(2),
        &[
            "idempotent",
            "idempotent-word",
            "idempotent-braid-words",
            "associativity",
            "pitchfork",
            "opening",
            "digon",
            "digon-skew",
            "thick-r2",
            "thick-r3",
            "degree-audit",
        ],
    )
}

const TRIPLES: [(u32, u32, u32); 5] = [(1, 1, 1), (2, 1, 1), (1, 1, 2), (1, 2, 1), (1, 2, 2)];

fn sigma_lambda_and_idempotents() -> Outcome {
    let mut results = Vec::new();
    for (a, b, c) in TRIPLES {
        let t = Triple::new(a, b, c);
        results.extend(verify_sigma_lambda(t));
        results.extend(verify_idempotents(t));
    }
    let completeness = results.iter().filter(|r| r.check == "idempotent-completeness").count();
    ensure(completeness == TRIPLES.len(), || format!("{completeness} completeness checks"))?;
    all_pass(&results, &["sigma-lambda", "idempotent-orthogonal", "idempotent-completeness", "degree-audit"])
}

fn null_homotopy() -> Outcome {
    let mut results = Vec::new();
    for (a, b) in [(2, 1), (3, 1), (3, 2)] {
        for d in [Direction::Forward, Direction::Reversed] {
            results.extend(verify_complex(a, b, d));
        }
    }
    all_pass(&results, &["d-squared", "h-squared", "hom1", "hom2", "hom3", "degree-audit", "shift-degree"])
}

fn random_expression(rng: &mut ChaCha8Rng) -> Expression {
    let n = rng.gen_range(0..=4);
    let terms: Vec<Term> = (0..n)
        .map(|_| {
            let coeff = rng.gen_bool(0.4).then(|| {
                LaurentPoly::from_terms((0..rng.gen_range(0..=3)).map(|_| (rng.gen_range(-6..=6), rng.gen_range(-9i64..=9))))
            });
            let letters = (0..rng.gen_range(0..=5))
                .map(|_| (if rng.gen_bool(0.5) { Color::One } else { Color::Two }, rng.gen_range(0..=20)))
                .collect();
            let shift = rng.gen_bool(0.5).then(|| rng.gen_range(-30..=30));
            Term { coeff, letters, shift }
        })
        .collect();
    let separator = if n > 1 && rng.gen_bool(0.5) { Separator::DirectSum } else { Separator::Plus };
    Expression { terms, separator }
}

fn cli_contract() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for i in 0..1000 {
        let e = random_expression(&mut rng);
        let s = e.to_string();
        let back = Expression::parse(&s).map_err(|err| format!("expression {i} '{s}': {err}"))?;
        ensure(back == e && back.to_string() == s, || format!("expression {i} '{s}' does not round-trip"))?;
    }

    let bin = env!("CARGO_BIN_EXE_sl3cat");
    let dir = std::env::temp_dir().join(format!("sl3cat-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let run = |args: &[&str], file: &str| -> Result<(i32, serde_json::Value), String> {
        let out = dir.join(file);
        let status = Command::new(bin)
            .args(args)
            .args(["--format", "json", "--out"])
            .arg(&out)
            .status()
            .map_err(|e| e.to_string())?;
        let text = std::fs::read_to_string(&out).map_err(|e| e.to_string())?;
        let json: serde_json::Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
        Ok((status.code().unwrap_or(-1), json))
    };

    let (all_code, report) = run(&["verify", "--all"], "all.json")?;
    ensure(report["schema"] == 1, || "missing schema".into())?;
    let results = report["results"].as_array().ok_or("no results array")?;
    let failures = results.iter().filter(|r| r["pass"] != true).count();
    ensure(!results.is_empty(), || "empty report".into())?;
    ensure((all_code == 0) == (failures == 0), || format!("verify --all exit {all_code} with {failures} failures"))?;

    let (code, neg) = run(&["canon", "(-1) 1^1"], "neg.json")?;
    ensure(neg["positive"] == false && code == 1, || format!("failing canon exited {code}"))?;
    let (code, serre) = run(&["serre", "3", "1", "--sign", "plus"], "serre.json")?;
    ensure(serre["pass"] == true && code == 0, || format!("serre exited {code}"))?;
    let _ = std::fs::remove_dir_all(&dir);
    Ok(format!("1000 round trips, verify --all: {} checks, exit {all_code}", results.len()))
}

fn main() {
    let criteria = [
        Criterion { id: 1, name: "quantum combinatorics", limit: Duration::from_secs(1), run: quantum_combinatorics },
        Criterion { id: 2, name: "canonical basis", limit: Duration::from_secs(30), run: canonical_basis },
        Criterion { id: 3, name: "K0 consistency", limit: Duration::from_secs(60), run: k0_consistency },
        Criterion { id: 4, name: "indecomposability spectra", limit: Duration::from_secs(1), run: indecomposability_spectra },
        Criterion { id: 5, name: "KLR relation suite", limit: Duration::from_secs(10), run: klr_relations },
        Criterion { id: 6, name: "thick suite", limit: Duration::from_secs(300), run: thick_suite },
        Criterion { id: 7, name: "sigma-lambda and idempotents", limit: Duration::from_secs(600), run: sigma_lambda_and_idempotents },
        Criterion { id: 8, name: "null-homotopic complex", limit: Duration::from_secs(600), run: null_homotopy },
        Criterion { id: 9, name: "CLI contract", limit: Duration::from_secs(60), run: cli_contract },
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for c in &criteria {
        if !filter.is_empty() && !filter.iter().any(|f| c.name.contains(f.as_str()) || c.id.to_string() == *f) {
            continue;
        }
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= c.limit => (true, d),
            Ok(d) => (false, format!("{d}; over time limit")),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "{} [{}] {}: {} ({:.2}s, limit {}s)",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.name,
            detail,
            elapsed.as_secs_f64(),
            c.limit.as_secs()
        );
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
