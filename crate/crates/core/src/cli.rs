//! Expression grammar, command-line verbs and report output.
//!
//! Grammar:
//!
//! ```text
//! expr   := '0' | term (sep term)*        one separator kind per expression
//! sep    := '+' | '(+)'
//! term   := ['(' laurent ')'] (letter+ | 'unit') ['{' int '}']
//! letter := ('1' | '2') '^' uint
//! ```
//!
//! At algebra level shifts are ignored and `+` and `(+)` both mean sum; at
//! object level coefficients are rejected and every term is one summand.

use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::klrengine::verify::{
    verify_complex, verify_idempotents, verify_local_relations, verify_sigma_lambda, verify_thick, Direction, Triple,
};
use crate::klrengine::{CheckResult, Report};
use crate::partitions::{lr_coefficient, Partition};
use crate::qlaurent::{parse_laurent, qbinom, LaurentPoly, Sign};
use crate::text::{Cursor, ParseError};
use crate::u3algebra::{canonicalize, higher_serre_sum, AlgElem, AlgebraError, Word};
use crate::u3category::{normalize_object, GradedObject};
use crate::Color;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("cannot mix '+' and '(+)' in one expression")]
    MixedSeparators,
    #[error("coefficients are not allowed in an object: term {0}")]
    CoefficientInObject(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("invalid parameters: {0}")]
    Invalid(String),
    #[error("cannot write {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Separator {
    Plus,
    DirectSum,
}

impl Separator {
    fn as_str(self) -> &'static str {
        match self {
            Separator::Plus => "+",
            Separator::DirectSum => "(+)",
        }
    }
}

/// One summand of an expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Option<LaurentPoly>,
    /// Empty means `unit`.
    pub letters: Vec<(Color, u32)>,
    pub shift: Option<i64>,
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = &self.coeff {
            write!(f, "({c}) ")?;
        }
        write!(f, "{}", Word::new(self.letters.clone()))?;
        if let Some(t) = self.shift {
            write!(f, " {{{t}}}")?;
        }
        Ok(())
    }
}

/// Parsed expression, kept verbatim so it prints back to its source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expression {
    pub terms: Vec<Term>,
    pub separator: Separator,
}

impl Expression {
    pub fn parse(src: &str) -> Result<Expression, CliError> {
        let mut cur = Cursor::new(src);
        cur.skip_ws();
        if cur.eat("0") {
            cur.finish()?;
            return Ok(Expression { terms: Vec::new(), separator: Separator::Plus });
        }
        let mut terms = vec![parse_term(&mut cur)?];
        let mut separator = None;
        loop {
            cur.skip_ws();
            if cur.at_end() {
                break;
            }
            let sep = if cur.eat("(+)") {
                Separator::DirectSum
            } else if cur.eat("+") {
                Separator::Plus
            } else {
                return Err(cur.error("'+', '(+)' or end of input").into());
            };
            if separator.is_some_and(|s| s != sep) {
                return Err(CliError::MixedSeparators);
            }
            separator = Some(sep);
            terms.push(parse_term(&mut cur)?);
        }
        Ok(Expression { terms, separator: separator.unwrap_or(Separator::Plus) })
    }

    /// Sum of the terms as an algebra element; shifts are ignored.
    pub fn to_alg(&self) -> AlgElem {
        let mut out = AlgElem::zero();
        for t in &self.terms {
            let x = AlgElem::from_letters(&t.letters);
            out.add(&match &t.coeff {
                Some(c) => x.scale(c),
                None => x,
            });
        }
        out
    }

    /// Direct sum of shifted words; a missing shift is `{0}`.
    pub fn to_object(&self) -> Result<GradedObject, CliError> {
        let mut out = GradedObject::zero();
        for (i, t) in self.terms.iter().enumerate() {
            if t.coeff.is_some() {
                return Err(CliError::CoefficientInObject(i));
            }
            out.push(Word::new(t.letters.clone()), t.shift.unwrap_or(0));
        }
        Ok(out)
    }
}

impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " {} ", self.separator.as_str())?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Expression {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        Expression::parse(s)
    }
}

fn parse_term(cur: &mut Cursor<'_>) -> Result<Term, CliError> {
    cur.skip_ws();
    let coeff = if cur.starts_with("(") && !cur.starts_with("(+)") {
        cur.bump();
        let c = parse_laurent(cur)?;
        cur.skip_ws();
        cur.expect(")")?;
        cur.skip_ws();
        Some(c)
    } else {
        None
    };
    let mut letters = Vec::new();
    if cur.eat("unit") {
        cur.skip_ws();
    } else {
        loop {
            let color = match cur.peek() {
                Some('1') => Color::One,
                Some('2') => Color::Two,
                _ => break,
            };
            cur.bump();
            cur.expect("^")?;
            let start = cur.pos();
            let e = cur.uint()?;
            let e = u32::try_from(e).map_err(|_| ParseError {
                pos: start,
                expected: "exponent below 2^32".into(),
                found: e.to_string(),
            })?;
            letters.push((color, e));
            let before = cur.pos();
            cur.skip_ws();
            if cur.pos() == before && matches!(cur.peek(), Some('1' | '2')) {
                return Err(cur.error("whitespace between letters").into());
            }
        }
        if letters.is_empty() {
            return Err(cur.error("letter '1^k', '2^k' or 'unit'").into());
        }
    }
    let shift = if cur.eat("{") {
        cur.skip_ws();
        let t = cur.int()?;
        cur.skip_ws();
        cur.expect("}")?;
        Some(t)
    } else {
        None
    };
    Ok(Term { coeff, letters, shift })
}

#[derive(Parser, Debug)]
#[command(name = "sl3cat", version, about = "Exact computations in U+_q(sl3) and its thick-calculus categorification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Quantum binomial [n choose k].
    Qb { n: i64, k: i64 },
    /// Littlewood-Richardson coefficient c^gamma_{alpha,beta}.
    Lr { gamma: Partition, alpha: Partition, beta: Partition },
    /// Canonical basis expansion and positivity.
    Canon { expr: String },
    /// Decomposition of an object into indecomposables.
    Decompose { expr: String },
    /// Higher quantum Serre sum for m > n > 0.
    Serre {
        m: u32,
        n: u32,
        #[arg(long, value_enum, default_value_t = SignArg::Plus)]
        sign: SignArg,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        lead: u8,
    },
    /// Operator verification suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Plus,
    Minus,
}

impl From<SignArg> for Sign {
    fn from(s: SignArg) -> Sign {
        match s {
            SignArg::Plus => Sign::Plus,
            SignArg::Minus => Sign::Minus,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    Relations,
    Thick,
    LemmaGl,
    Idempotents,
    Complex,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Relations, Suite::Thick, Suite::LemmaGl, Suite::Idempotents, Suite::Complex];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    Forward,
    Reversed,
    Both,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[arg(value_enum, required_unless_present = "all", conflicts_with = "all")]
    pub suite: Option<Suite>,
    /// Run every suite in order.
    #[arg(long)]
    pub all: bool,
    #[arg(long)]
    pub a: Option<u32>,
    #[arg(long)]
    pub b: Option<u32>,
    #[arg(long)]
    pub c: Option<u32>,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub lead: u8,
    /// Longest thin color sequence for `relations`.
    #[arg(long, default_value_t = 3)]
    pub max_len: usize,
    /// Largest thickness for `thick`.
    #[arg(long, default_value_t = 2)]
    pub max: u32,
    #[arg(long, value_enum, default_value_t = DirectionArg::Both)]
    pub direction: DirectionArg,
}

pub const DEFAULT_TRIPLES: [(u32, u32, u32); 5] = [(1, 1, 1), (2, 1, 1), (1, 1, 2), (1, 2, 1), (1, 2, 2)];
pub const DEFAULT_COMPLEXES: [(u32, u32); 3] = [(2, 1), (3, 1), (3, 2)];

impl VerifyArgs {
    fn triples(&self) -> Result<Vec<Triple>, CliError> {
        let lead = Color::from_index(self.lead).expect("clap bounds lead");
        let list = match (self.a, self.b, self.c) {
            (None, None, None) => DEFAULT_TRIPLES.to_vec(),
            (Some(a), Some(b), Some(c)) => vec![(a, b, c)],
            _ => return Err(CliError::Invalid("give all of --a --b --c or none".into())),
        };
        Ok(list.into_iter().map(|(a, b, c)| Triple { lead, a, b, c }).collect())
    }

    fn complexes(&self) -> Result<Vec<(u32, u32, Direction)>, CliError> {
        let pairs = match (self.a, self.b) {
            (None, None) => DEFAULT_COMPLEXES.to_vec(),
            (Some(a), Some(b)) => vec![(a, b)],
            _ => return Err(CliError::Invalid("give both --a and --b or neither".into())),
        };
        let dirs: &[Direction] = match self.direction {
            DirectionArg::Forward => &[Direction::Forward],
            DirectionArg::Reversed => &[Direction::Reversed],
            DirectionArg::Both => &[Direction::Forward, Direction::Reversed],
        };
        Ok(pairs.into_iter().flat_map(|(a, b)| dirs.iter().map(move |&d| (a, b, d))).collect())
    }

    fn run_suite(&self, suite: Suite) -> Result<Vec<CheckResult>, CliError> {
        let flatten = |v: Vec<Vec<CheckResult>>| v.into_iter().flatten().collect();
        Ok(match suite {
            Suite::Relations => verify_local_relations(self.max_len),
            Suite::Thick => verify_thick(self.max),
            Suite::LemmaGl => flatten(self.triples()?.par_iter().map(|&t| verify_sigma_lambda(t)).collect()),
            Suite::Idempotents => flatten(self.triples()?.par_iter().map(|&t| verify_idempotents(t)).collect()),
            Suite::Complex => {
                flatten(self.complexes()?.par_iter().map(|&(a, b, d)| verify_complex(a, b, d)).collect())
            }
        })
    }

    pub fn report(&self) -> Result<Report, CliError> {
        let suites: Vec<Suite> = if self.all { Suite::ALL.to_vec() } else { self.suite.into_iter().collect() };
        let mut report = Report::new(Vec::new());
        for s in suites {
            report.extend(self.run_suite(s)?);
        }
        Ok(report)
    }
}

/// Result of one command in both renderings.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

impl Outcome {
    fn new(text: String, mut json: Value, ok: bool) -> Self {
        json["schema"] = json!(1);
        Outcome { text, json, ok }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("json serializes");
                s.push('\n');
                s
            }
        }
    }

    /// 0 iff nothing failed.
    pub fn exit_code(&self) -> i32 {
        if self.ok {
            0
        } else {
            1
        }
    }
}

impl From<Report> for Outcome {
    fn from(r: Report) -> Self {
        let json = serde_json::to_value(&r).expect("report serializes");
        Outcome { text: r.to_text(), json, ok: r.all_pass() }
    }
}

pub fn run(command: &Command) -> Result<Outcome, CliError> {
    Ok(match command {
        Command::Qb { n, k } => {
            let v = qbinom(*n, *k);
            Outcome::new(format!("{v}\n"), json!({"n": n, "k": k, "value": v.to_string()}), true)
        }
        Command::Lr { gamma, alpha, beta } => {
            let v = lr_coefficient(gamma, alpha, beta);
            let json = json!({"gamma": gamma.to_string(), "alpha": alpha.to_string(), "beta": beta.to_string(), "value": v});
            Outcome::new(format!("{v}\n"), json, true)
        }
        Command::Canon { expr } => {
            let e = Expression::parse(expr)?;
            let x = canonicalize(&e.to_alg());
            let positive = x.is_positive();
            let terms: Vec<Value> =
                x.terms().map(|(k, c)| json!({"element": k.to_string(), "coeff": c.to_string()})).collect();
            let json = json!({"input": e.to_string(), "expansion": x.to_string(), "terms": terms, "positive": positive});
            Outcome::new(format!("{x}\npositivity: {positive}\n"), json, positive)
        }
        Command::Decompose { expr } => {
            let obj = Expression::parse(expr)?.to_object()?;
            let xs = normalize_object(&obj);
            let text = if xs.is_empty() {
                "0".to_string()
            } else {
                xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" (+) ")
            };
            Outcome::new(format!("{text}\n"), json!({"input": obj.to_string(), "summands": xs}), true)
        }
        Command::Serre { m, n, sign, lead } => {
            let lead = Color::from_index(*lead).expect("clap bounds lead");
            let sign = Sign::from(*sign);
            let x = higher_serre_sum(*m, *n, sign, lead)?;
            let ok = x.is_zero();
            let verdict = if ok { "pass" } else { "FAIL" };
            let json = json!({"m": m, "n": n, "sign": sign, "lead": lead.index(), "sum": x.to_string(), "pass": ok});
            Outcome::new(format!("{x}\n{verdict}\n"), json, ok)
        }
        Command::Verify(args) => Outcome::from(args.report()?),
    })
}

/// Run a parsed command line, writing output; returns the exit code.
pub fn main_with(cli: Cli) -> i32 {
    match run(&cli.command) {
        Ok(outcome) => {
            let body = outcome.render(cli.format);
            match &cli.out {
                None => print!("{body}"),
                Some(path) => {
                    if let Err(source) = std::fs::write(path, &body) {
                        report_error(&CliError::Io { path: path.clone(), source }, cli.format);
                        return 2;
                    }
                    if !outcome.ok {
                        eprintln!("failures written to {}", path.display());
                    }
                }
            }
            outcome.exit_code()
        }
        Err(e) => {
            report_error(&e, cli.format);
            2
        }
    }
}

fn report_error(e: &CliError, format: Format) {
    match format {
        Format::Text => eprintln!("error: {e}"),
        Format::Json => println!("{}", json!({"schema": 1, "error": e.to_string()})),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_term() {
        let e = Expression::parse("1^1 2^1 1^1").unwrap();
        assert_eq!(e.terms.len(), 1);
        assert_eq!(e.terms[0].letters, vec![(Color::One, 1), (Color::Two, 1), (Color::One, 1)]);
        assert_eq!(e.to_string(), "1^1 2^1 1^1");
    }

    #[test]
    fn shifted_term() {
        let e = Expression::parse("1^2 2^1 {3}").unwrap();
        assert_eq!(e.terms[0].letters, vec![(Color::One, 2), (Color::Two, 1)]);
        assert_eq!(e.terms[0].shift, Some(3));
        assert_eq!(e.to_object().unwrap(), GradedObject::single(Word::new(vec![(Color::One, 2), (Color::Two, 1)]), 3));
    }

    #[test]
    fn repeated_letter_both_levels() {
        let e = Expression::parse("1^1 1^1").unwrap();
        let mut expect = AlgElem::zero();
        expect.add_term(crate::u3algebra::Monomial::letter(Color::One, 2), crate::qlaurent::qint(2));
        assert_eq!(e.to_alg(), expect);
        let obj = e.to_object().unwrap();
        assert_eq!(obj.len(), 1);
        assert_eq!(normalize_object(&obj).len(), 2);
    }

    #[test]
    fn coefficients_and_separators() {
        for s in ["(q^2 + 1 + q^-2) 1^1 + (-2q) unit {-1}", "unit (+) 2^3 {0}", "0", "(0) 1^0"] {
            assert_eq!(Expression::parse(s).unwrap().to_string(), s);
        }
        assert!(matches!(Expression::parse("1^1 + 2^1 (+) 1^1"), Err(CliError::MixedSeparators)));
        assert!(Expression::parse("1^1 2^1 +").is_err());
        assert!(Expression::parse("3^1").is_err());
        assert!(Expression::parse("1^12^1").is_err());
        assert!(matches!(Expression::parse("(q) 1^1").unwrap().to_object(), Err(CliError::CoefficientInObject(0))));
    }

    #[test]
    fn error_position() {
        match Expression::parse("1^1 2^x") {
            Err(CliError::Parse(p)) => assert_eq!(p.pos, 6),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn canon_serre_outputs() {
        let o = run(&Command::Canon { expr: "1^1 2^1 1^1".into() }).unwrap();
        assert_eq!(o.text, "1^2 2^1 + 2^1 1^2\npositivity: true\n");
        assert_eq!(o.exit_code(), 0);
        let o = run(&Command::Serre { m: 3, n: 1, sign: SignArg::Plus, lead: 1 }).unwrap();
        assert_eq!(o.text, "0\npass\n");
        assert_eq!(o.json["schema"], 1);
        let o = run(&Command::Canon { expr: "(-1) 1^1".into() }).unwrap();
        assert_eq!(o.exit_code(), 1);
    }

    #[test]
    fn exit_code_follows_report() {
        let good = Outcome::from(Report::new(vec![CheckResult::pass("x", json!({}))]));
        let bad = Outcome::from(Report::new(vec![CheckResult::pass("x", json!({})), CheckResult::fail("y", json!({}), "no")]));
        assert_eq!(good.exit_code(), 0);
        assert_eq!(bad.exit_code(), 1);
        assert_eq!(bad.json["schema"], 1);
    }
}
