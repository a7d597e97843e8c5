use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigUint;
use serde_json::{json, Value};
use spancalc::boolpoly::{from_truth_table, AnfPoly};
use spancalc::diagram::{first_disallowed, parse, Diagram, Fragment};
use spancalc::f2::F2Matrix;
use spancalc::rules::{catalog_with, normalize_zero, probe_with, verify_catalog, CatalogConfig, ProbeConfig};
use spancalc::semantics::{
    decide_equal, equal_under, eval_affine_span, eval_f2_matrix, eval_linear_span, evaluate, SemanticValue,
    SemanticsKind,
};
use spancalc::spancat::{canonicalize_linear, pariso_factor, span_split, RawLinearSpan};
use spancalc::{Error, ParseErrorKind};

use crate::{Cli, Command, FactorMode, Format};

pub struct Output {
    pub text: String,
    pub code: u8,
}

#[derive(Debug)]
pub struct Failure {
    pub message: String,
    pub code: u8,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { message: message.into(), code: 64 }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse(p) if p.kind == ParseErrorKind::Arity => 2,
            Error::Parse(_) | Error::Invalid(_) | Error::NoMatch(_) => 1,
            Error::Shape(_) | Error::Disallowed { .. } | Error::InvalidPermutation(_) => 2,
            Error::Inapplicable { .. } => 3,
            Error::Budget(_) | Error::Overflow(_) => 4,
            Error::Invariant(_) => 70,
        };
        Failure { message: e.to_string(), code }
    }
}

type Run = Result<Output, Failure>;

pub fn run(cli: &Cli) -> Run {
    let fragment = match &cli.fragment {
        Some(name) => {
            Some(Fragment::by_name(name).ok_or_else(|| Failure::usage(format!("unknown fragment `{name}`")))?)
        }
        None => None,
    };
    let semantics = match &cli.semantics {
        Some(name) => {
            Some(name.parse::<SemanticsKind>().map_err(|_| Failure::usage(format!("unknown semantics `{name}`")))?)
        }
        None => None,
    };
    if let (Some(f), Some(s)) = (fragment, semantics) {
        if !f.applicable(s) {
            return Err(Error::Inapplicable { semantics: s.to_string(), fragment: f.name.to_string() }.into());
        }
    }
    let ctx = Ctx { cli, fragment, semantics };
    match &cli.command {
        Command::Eval { file } => ctx.eval(file),
        Command::Eq { a, b } => ctx.eq(a, b),
        Command::Factor { file, mode } => ctx.factor(file, *mode),
        Command::VerifyRules { filter } => ctx.verify_rules(filter.as_deref()),
        Command::ProbeConjecture { wires, depth, slack } => ctx.probe(*wires, *depth, *slack),
        Command::Anf { table, poly, vars } => ctx.anf(table.as_deref(), poly.as_deref(), *vars),
        Command::Normalize { file } => ctx.normalize(file),
    }
}

struct Ctx<'a> {
    cli: &'a Cli,
    fragment: Option<&'static Fragment>,
    semantics: Option<SemanticsKind>,
}

fn read(path: &Path) -> Result<String, Failure> {
    let text =
        if path == Path::new("-") { std::io::read_to_string(std::io::stdin()) } else { std::fs::read_to_string(path) };
    text.map_err(|e| Failure { message: format!("cannot read {}: {e}", path.display()), code: 66 })
}

fn matrix_rows(m: &F2Matrix) -> Vec<Vec<u8>> {
    m.to_rows()
}

fn raw_span(s: &RawLinearSpan) -> Value {
    json!({ "apex": s.apex(), "left": matrix_rows(s.left()), "right": matrix_rows(s.right()) })
}

fn rows_text(rows: &[Vec<impl std::fmt::Display>]) -> String {
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

impl Ctx<'_> {
    fn emit(&self, value: Value, text: impl FnOnce() -> String) -> Run {
        self.emit_code(value, text, 0)
    }

    fn emit_code(&self, value: Value, text: impl FnOnce() -> String, code: u8) -> Run {
        let text = match self.cli.format {
            Format::Json => serde_json::to_string_pretty(&value).expect("json values serialize") + "\n",
            Format::Text => text(),
        };
        Ok(Output { text, code })
    }

    fn diagram(&self, path: &Path) -> Result<Diagram, Failure> {
        let d = parse(&read(path)?)?;
        if let Some(f) = self.fragment {
            if let Some(g) = first_disallowed(&d, f) {
                return Err(Error::Disallowed { generator: g.name().into(), context: f.name.into() }.into());
            }
        }
        Ok(d)
    }

    fn eval(&self, path: &Path) -> Run {
        let d = self.diagram(path)?;
        let kind = self.semantics.or(self.fragment.map(|f| f.designated)).unwrap_or(SemanticsKind::CountingState);
        let value: SemanticValue<BigUint> = evaluate(&d, kind, self.fragment)?;
        let json = json!({
            "dom": d.dom(),
            "cod": d.cod(),
            "semantics": kind,
            "value": serde_json::to_value(&value).expect("values serialize"),
        });
        self.emit(json, || match &value {
            SemanticValue::Nat(m) => rows_text(&m.to_rows()),
            SemanticValue::F2(m) => rows_text(&m.to_rows()),
            other => serde_json::to_string(other).expect("values serialize") + "\n",
        })
    }

    fn eq(&self, a: &Path, b: &Path) -> Run {
        let (da, db) = (self.diagram(a)?, self.diagram(b)?);
        let f = self.fragment.unwrap_or_else(|| Fragment::by_name("SPAN_F2").expect("built-in fragment"));
        let kind = self.semantics.unwrap_or(f.designated);
        let equal = match self.semantics {
            Some(s) => equal_under(&da, &db, s, f)?,
            None => decide_equal(&da, &db, f)?,
        };
        let word = if equal { "equal" } else { "unequal" };
        let json = json!({ "equal": equal, "fragment": f.name, "semantics": kind });
        self.emit_code(json, || format!("{word}\n"), if equal { 0 } else { 10 })
    }

    fn factor(&self, path: &Path, mode: FactorMode) -> Run {
        let d = self.diagram(path)?;
        let json = match mode {
            FactorMode::Rank => {
                let a = eval_f2_matrix(&d)?;
                let (e, m) = a.rank_factorize();
                let recomposes = m.mul(&e)? == a;
                json!({
                    "mode": "rank",
                    "matrix": matrix_rows(&a),
                    "rank": e.rows(),
                    "epi": matrix_rows(&e),
                    "mono": matrix_rows(&m),
                    "epi_surjective": e.rank() == e.rows(),
                    "mono_injective": m.rank() == m.cols(),
                    "recomposes": recomposes,
                })
            }
            FactorMode::Pariso => {
                let span = eval_linear_span(&d)?;
                let raw = span.to_raw();
                let f = pariso_factor(&raw);
                let recomposes = canonicalize_linear(&f.recompose()?) == span;
                json!({
                    "mode": "pariso",
                    "span": raw_span(&raw),
                    "epi": matrix_rows(&f.epi),
                    "mono_left": matrix_rows(&f.mono_left),
                    "mono_right": matrix_rows(&f.mono_right),
                    "epi_surjective": f.epi_is_surjective(),
                    "monos_jointly_injective": f.monos_jointly_injective(),
                    "recomposes": recomposes,
                })
            }
            FactorMode::Split => {
                let span = eval_linear_span(&d)?;
                let raw = span.to_raw();
                let (first, second) = span_split(&raw);
                let recomposes = canonicalize_linear(&first.compose(&second)?) == span;
                json!({
                    "mode": "split",
                    "span": raw_span(&raw),
                    "first": raw_span(&first),
                    "second": raw_span(&second),
                    "recomposes": recomposes,
                })
            }
        };
        let summary = format!("{} recomposes: {}\n", json["mode"].as_str().unwrap_or(""), json["recomposes"]);
        self.emit(json, || summary)
    }

    fn pool(&self) -> Result<Option<rayon::ThreadPool>, Failure> {
        match self.cli.jobs {
            None => Ok(None),
            Some(n) => rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map(Some)
                .map_err(|e| Failure { message: format!("cannot start worker pool: {e}"), code: 70 }),
        }
    }

    fn verify_rules(&self, filter: Option<&str>) -> Run {
        let cfg = self.cli.bound.map_or_else(CatalogConfig::default, CatalogConfig::with_bound);
        let rules: Vec<_> = catalog_with(&cfg)
            .into_iter()
            .filter(|r| filter.is_none_or(|p| r.name.starts_with(p)))
            .filter(|r| self.fragment.is_none_or(|f| r.fragment == f.id))
            .collect();
        let reports = verify_catalog(&rules, self.cli.jobs)?;
        let failed = reports.iter().filter(|r| !r.verified).count();
        let json = serde_json::to_value(&reports).expect("reports serialize");
        let text = || {
            let mut out = String::new();
            for r in &reports {
                let _ =
                    writeln!(out, "{} {} {}", if r.verified { "ok  " } else { "FAIL" }, r.name, r.failures.join("; "));
            }
            let _ = writeln!(out, "{} rules, {failed} failed", reports.len());
            out
        };
        self.emit_code(json, text, if failed == 0 { 0 } else { 5 })
    }

    fn probe(&self, wires: usize, depth: usize, slack: Option<usize>) -> Run {
        let mut cfg = ProbeConfig::default();
        if let Some(s) = slack {
            cfg.slack = s;
        }
        let report = match self.pool()? {
            Some(pool) => pool.install(|| probe_with(wires, depth, &cfg))?,
            None => probe_with(wires, depth, &cfg)?,
        };
        let json = serde_json::to_value(&report).expect("reports serialize");
        self.emit(json, || {
            let verdict =
                if report.agree_within_budget { "agrees within budget" } else { "separating witnesses found" };
            let mut out = format!(
                "{} circuits, {} semantic classes, {} rewrite classes: {verdict}\n",
                report.circuits, report.semantic_classes, report.rewrite_classes
            );
            for w in &report.witnesses {
                let _ = writeln!(out, "{} {} = {}", w.kind, w.left, w.right);
            }
            out
        })
    }

    fn anf(&self, table: Option<&str>, poly: Option<&str>, vars: Option<usize>) -> Run {
        let (p, from_table) = match (table, poly) {
            (Some(t), _) => {
                let bits = t
                    .chars()
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        _ => Err(Error::Invalid(format!("truth table `{t}` may only contain 0 and 1"))),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                (from_truth_table(&bits)?, true)
            }
            (None, Some(text)) => (AnfPoly::parse(text, vars)?, false),
            (None, None) => return Err(Failure::usage("give --table or --poly")),
        };
        let table: String = p.to_truth_table().iter().map(|&b| if b { '1' } else { '0' }).collect();
        let anf = p.to_string();
        let json = json!({ "anf": anf, "table": table, "vars": p.num_vars() });
        self.emit(json, || if from_table { format!("{anf}\n") } else { format!("{table}\n") })
    }

    fn normalize(&self, path: &Path) -> Run {
        let d = self.diagram(path)?;
        let empty = eval_affine_span(&d)?.is_empty();
        let out = normalize_zero(&d)?;
        let text = out.serialize();
        let json = json!({ "diagram": text, "empty": empty, "changed": out != d });
        self.emit(json, || format!("{text}\n"))
    }
}
