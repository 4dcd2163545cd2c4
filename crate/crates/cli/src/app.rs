//! Command dispatch. Exit codes: 0 success, 1 negative verdict, 2 input error.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use maxtorus::constructions::{self, gallery, ConstructionError};
use maxtorus::exact::{GaussMatrix, Matrix, Rational};
use maxtorus::oracle;
use maxtorus::{GaussianRational, Triple};
use serde_json::{json, Map, Value};

use crate::document::{
    parse_json, parse_triple, AdmissibilityDocument, DocumentError, MorphismDocument, TripleDocument,
};
use crate::report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

const ORACLE_SAMPLES: usize = 1000;

#[derive(Parser, Debug)]
#[command(name = "maxtorus", version, about = "Exact checks for fans, torus actions and moment-angle lifts")]
struct Cli {
    /// Cross-check exact verdicts against the sampling oracles.
    #[arg(long, global = true)]
    oracle: bool,
    /// Seed for the sampling oracles.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the fan axioms, injectivity of p on h and the quotient fan of a triple.
    Validate { file: PathBuf },
    /// Dimensions, minimal orbits, HERT table and Kähler verdict.
    Invariants { file: PathBuf },
    /// The quotient fan q(Δ).
    Quotient { file: PathBuf },
    /// Whether dim span(rays) equals 2n - m.
    Kaehler { file: PathBuf },
    /// Split a Kähler triple into a toric fiber and a torus base.
    Decompose { file: PathBuf },
    /// Lift a triple to a moment-angle complex on m vertices.
    Lift {
        file: PathBuf,
        #[arg(long)]
        m: usize,
    },
    /// Validate a morphism document and test for isomorphism.
    Morphism { file: PathBuf },
    /// The principal-bundle criterion for a morphism document.
    Principal { file: PathBuf },
    /// Print a gallery triple as a document.
    Example {
        name: ExampleName,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// alpha tilde as `re_num,re_den,im_num,im_den`.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        alpha: Option<Vec<i64>>,
    },
    /// Moment-angle admissibility of a complex with a candidate realisation.
    Admissibility { file: PathBuf },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum ExampleName {
    Torus,
    Hopf,
    CalabiEckmann,
    CompleteToricP1,
    CompleteToricP1xp1,
}

enum Failure {
    Input(String),
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        Failure::Input(e.to_string())
    }
}

struct Outcome {
    report: Value,
    code: i32,
}

impl Outcome {
    fn new(report: Value, ok: bool) -> Self {
        Outcome { report, code: if ok { EXIT_OK } else { EXIT_NEGATIVE } }
    }
}

/// Runs the command line `args` (including the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(outcome) => {
            let text = report::render(&outcome.report);
            let _ = writeln!(out, "{text}");
            outcome.code
        }
        Err(Failure::Input(message)) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_INPUT
        }
    }
}

fn read(path: &Path) -> Result<(String, String), Failure> {
    let name = path.display().to_string();
    let mut text = String::new();
    let result = if name == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    result.map_err(|e| Failure::Input(format!("{name}: cannot read: {e}")))?;
    Ok((name, text))
}

fn load_triple(path: &Path) -> Result<Triple, Failure> {
    let (name, text) = read(path)?;
    Ok(parse_triple(&name, &text)?)
}

fn with_command(command: &str, body: Map<String, Value>) -> Value {
    let mut m = Map::new();
    m.insert("command".into(), command.into());
    m.extend(body);
    Value::Object(m)
}

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("reports are objects"),
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Validate { file } => {
            let t = load_triple(file)?;
            let r = t.validate();
            let mut body = report::validation(&t, &r);
            if cli.oracle {
                body.insert("oracle".into(), oracle_report(&t, cli.seed));
            }
            Ok(Outcome::new(with_command("validate", body), r.is_valid()))
        }
        Command::Invariants { file } => {
            let t = load_triple(file)?;
            let r = t.validate();
            if !r.is_valid() {
                return Ok(Outcome::new(with_command("invariants", invalid(&t)), false));
            }
            let mut body = Map::new();
            body.insert("valid".into(), true.into());
            body.extend(report::invariants(&t));
            Ok(Outcome::new(with_command("invariants", body), true))
        }
        Command::Quotient { file } => {
            let t = load_triple(file)?;
            match t.quotient_fan() {
                Ok(q) => {
                    let mut body = Map::new();
                    body.insert("condition_1".into(), true.into());
                    body.extend(object(report::quotient(&q)));
                    Ok(Outcome::new(with_command("quotient", body), true))
                }
                Err(e) => {
                    let mut body = Map::new();
                    body.insert("condition_1".into(), false.into());
                    body.insert("error".into(), e.to_string().into());
                    Ok(Outcome::new(with_command("quotient", body), false))
                }
            }
        }
        Command::Kaehler { file } => {
            let t = load_triple(file)?;
            let k = t.kaehler_obstruction();
            Ok(Outcome::new(with_command("kaehler", object(report::kaehler(&k))), k.passes))
        }
        Command::Decompose { file } => {
            let t = load_triple(file)?;
            match t.product_decomposition() {
                Ok(d) => Ok(Outcome::new(with_command("decompose", object(report::decomposition(&d))), true)),
                Err(e) => {
                    let mut body = object(report::kaehler(&t.kaehler_obstruction()));
                    body.insert("error".into(), e.to_string().into());
                    Ok(Outcome::new(with_command("decompose", body), false))
                }
            }
        }
        Command::Lift { file, m } => {
            let t = load_triple(file)?;
            match constructions::moment_angle_lift(&t, *m) {
                Ok(l) => Ok(Outcome::new(with_command("lift", object(report::lift(*m, &l))), true)),
                Err(e @ (ConstructionError::ParityViolation { .. } | ConstructionError::SizeViolation(_))) => {
                    Err(Failure::Input(format!("{}: --m: {e}", file.display())))
                }
                Err(e) => {
                    let mut body = Map::new();
                    body.insert("m".into(), (*m).into());
                    body.insert("error".into(), e.to_string().into());
                    Ok(Outcome::new(with_command("lift", body), false))
                }
            }
        }
        Command::Morphism { file } => {
            let (name, text) = read(file)?;
            let f = parse_json::<MorphismDocument>(&name, &text)?.to_morphism(&name)?;
            let r = f.validate();
            Ok(Outcome::new(with_command("morphism", object(report::morphism(&f, &r))), r.is_valid()))
        }
        Command::Principal { file } => {
            let (name, text) = read(file)?;
            let f = parse_json::<MorphismDocument>(&name, &text)?.to_morphism(&name)?;
            let p = f.principal_bundle_check();
            Ok(Outcome::new(with_command("principal", object(report::principal(&p))), p.is_principal))
        }
        Command::Example { name, k, m, n, alpha } => {
            let t = example(*name, *k, *m, *n, alpha.as_deref())?;
            Ok(Outcome::new(serde_json::to_value(TripleDocument::from_triple(&t)).expect("serializes"), true))
        }
        Command::Admissibility { file } => {
            let (name, text) = read(file)?;
            let input = parse_json::<AdmissibilityDocument>(&name, &text)?.to_input(&name)?;
            let r = constructions::moment_angle_admissibility(&input.sigma, input.m, input.d, &input.rays)
                .map_err(|e| Failure::Input(format!("{name}: {e}")))?;
            Ok(Outcome::new(with_command("admissibility", object(report::admissibility(&r))), r.is_admissible()))
        }
    }
}

fn invalid(t: &Triple) -> Map<String, Value> {
    let r = t.validate();
    let mut body = Map::new();
    body.insert("valid".into(), false.into());
    if let Some(v) = r.first_failure() {
        body.insert("failure".into(), json!({ "condition": v.condition, "witness": v.witness }));
    }
    body
}

fn example(
    name: ExampleName,
    k: Option<usize>,
    m: Option<usize>,
    n: Option<usize>,
    alpha: Option<&[i64]>,
) -> Result<Triple, Failure> {
    let bad = |e: ConstructionError| Failure::Input(format!("example {}: {e}", name_of(name)));
    let alpha = match alpha {
        None => GaussianRational::i(),
        Some(a) => {
            if a.len() != 4 {
                return Err(Failure::Input(format!("--alpha: expected 4 integers, found {}", a.len())));
            }
            if a[1] == 0 || a[3] == 0 {
                return Err(Failure::Input("--alpha: denominator is zero".into()));
            }
            GaussianRational::new(Rational::new(a[0].into(), a[1].into()), Rational::new(a[2].into(), a[3].into()))
        }
    };
    match name {
        ExampleName::Torus => {
            let n = n.unwrap_or(1);
            if n == 0 {
                return Err(Failure::Input("--n: must be positive".into()));
            }
            // periods (I | αI)
            let periods: GaussMatrix = Matrix::from_fn(n, 2 * n, |i, j| {
                if j == i {
                    GaussianRational::from_ints(1, 0)
                } else if j == n + i {
                    alpha.clone()
                } else {
                    GaussianRational::from_ints(0, 0)
                }
            });
            constructions::make_torus(n, &periods).map_err(bad)
        }
        ExampleName::Hopf => {
            let n = n.unwrap_or(2);
            constructions::make_calabi_eckmann(n, n + 1, alpha).map_err(bad)
        }
        ExampleName::CalabiEckmann => {
            constructions::make_calabi_eckmann(k.unwrap_or(2), m.unwrap_or(4), alpha).map_err(bad)
        }
        ExampleName::CompleteToricP1 => Ok(gallery::p1()),
        ExampleName::CompleteToricP1xp1 => Ok(gallery::p1xp1()),
    }
}

fn name_of(name: ExampleName) -> String {
    name.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

/// Oracle agreement on `Δ` and, when `p` is injective on `𝔥`, on `q(Δ)`.
fn oracle_report(t: &Triple, seed: u64) -> Value {
    let fan = t.fan().to_rational();
    let fan_report = t.fan().validate();
    let independent = fan.dependent_cone().is_none();
    let fan_overlap = independent.then(|| {
        let found = oracle::fan_overlap_by_oracle(&fan, ORACLE_SAMPLES, seed).is_some();
        found == !fan_report.fan_property
    });
    let mut quotient = Value::Null;
    if let Ok(q) = t.quotient_fan() {
        if q.fan.dependent_cone().is_none() {
            let d = q.quotient_dim;
            let overlap = oracle::fan_overlap_by_oracle(&q.fan, ORACLE_SAMPLES, seed);
            let exact_overlap = q.fan.overlapping_pair();
            let exact_complete = exact_overlap.is_none() && q.fan.is_complete(d).unwrap_or(false);
            let sampled_complete = oracle::complete_by_sampling(&q.fan, d, ORACLE_SAMPLES, seed);
            quotient = json!({
                "overlap_agrees": overlap.is_some() == exact_overlap.is_some(),
                "complete_agrees": exact_overlap.is_some() || sampled_complete == exact_complete,
            });
        }
    }
    json!({
        "seed": seed,
        "samples": ORACLE_SAMPLES,
        "fan_overlap_agrees": fan_overlap,
        "quotient": quotient,
    })
}
