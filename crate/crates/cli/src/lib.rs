//! Command-line front end for `toric-bdiv`.
//!
//! Every subcommand reads JSON objects from `--input` files and prints a JSON
//! report. Exit status is 0 on success, 1 when a check fails and 2 on input
//! errors, which are printed to stderr as `{"error": {"code", "message"}}`.

pub mod input;
pub mod plot;
pub mod random;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use toric_bdiv::correspondence::{
    b_divisoriality, check_extraction_inequality, check_injectivity, check_saturated_roundtrip,
    main_inequality, CheckReport,
};
use toric_bdiv::oracles::{fekete_estimate, grid_infimum, saturation_oracle};
use toric_bdiv::{Filtration, MonomialIdeal, Polynomial, Rational, ToricBDivisor};

pub use input::{CliError, CliResult, Object};

#[derive(Parser, Debug)]
#[command(name = "toric-bdiv", version, about = "Filtrations, saturation and b-divisors in the toric model")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// JSON object file; repeat for commands taking two inputs.
    #[arg(long = "input", short = 'i')]
    inputs: Vec<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// φ(w) of a b-divisor, or v_w(𝔞_•) of a filtration.
    Eval {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        weights: String,
    },
    /// Minimal generators of 𝔞_λ.
    IdealAt {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        lambda: String,
    },
    /// The saturation, or its ideal at λ.
    Saturate {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Compares 𝔞_λ with the saturation at each λ.
    IsSaturated {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        lambdas: String,
    },
    /// The b-divisor Z(𝔞_•) with its boundedness class.
    Zdiv {
        #[command(flatten)]
        common: Common,
    },
    /// The filtration 𝔞_•(W), or its ideal at λ.
    Extract {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Vanishing order ord_W(f) along a b-divisor.
    Order {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        poly: String,
    },
    /// The norm ord_{𝔞_•}(f) = sup {λ : f ∈ 𝔞_λ}.
    Norm {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        poly: String,
    },
    /// Linear boundedness constants (ε, C).
    Bounds {
        #[command(flatten)]
        common: Common,
    },
    /// Checks one statement of the correspondence.
    CheckTheorem {
        #[arg(value_enum)]
        statement: Statement,
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        lambdas: Option<String>,
        #[arg(long)]
        weights: Option<String>,
        #[arg(long)]
        poly: Option<String>,
        /// Without inputs, run this many random cases.
        #[arg(long, default_value_t = 20)]
        cases: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// v_w(f) = ord_{Z(v_w)}(f) for a weight of any support.
    CheckBdivisorial {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        weights: String,
        #[arg(long)]
        poly: String,
    },
    /// SVG of a staircase, region or fan, with a CSV of its points.
    Plot {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Brute-force certificates.
    Oracle {
        #[arg(value_enum)]
        kind: OracleKind,
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        weights: Option<String>,
        #[arg(long = "box")]
        box_bound: Option<u32>,
        #[arg(long, default_value_t = 16)]
        m_max: u32,
        #[arg(long, default_value_t = 8)]
        resolution: u32,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Statement {
    Roundtrip,
    Extraction,
    Injectivity,
    MainInequality,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum OracleKind {
    Saturation,
    Fekete,
    Grid,
}

/// What a subcommand produced.
struct Outcome {
    report: Value,
    passed: bool,
}

impl Outcome {
    fn ok(report: Value) -> Self {
        Outcome { report, passed: true }
    }
}

fn usage(msg: &str) -> CliError {
    CliError::new("usage", msg)
}

fn one_input(c: &Common) -> CliResult<Object> {
    match c.inputs.as_slice() {
        [p] => Object::load(p),
        _ => Err(usage("expected exactly one --input")),
    }
}

fn generators(a: &MonomialIdeal) -> Value {
    json!(a.generators())
}

fn to_value<T: Serialize>(x: &T) -> CliResult<Value> {
    serde_json::to_value(x).map_err(|e| CliError::new("internal", e.to_string()))
}

fn report_value(r: &CheckReport) -> CliResult<Outcome> {
    Ok(Outcome { report: to_value(r)?, passed: r.passed() })
}

fn poly_for(text: &str, dim: usize) -> CliResult<Polynomial> {
    Ok(Polynomial::parse(text, dim)?)
}

fn lambda_default(l: &Option<String>) -> CliResult<Rational> {
    l.as_deref().map_or(Ok(Rational::one()), input::parse_rational)
}

fn execute(cmd: Command) -> CliResult<(Outcome, Option<PathBuf>)> {
    let out;
    let outcome = match cmd {
        Command::Eval { common, weights } => {
            out = common.out.clone();
            let w = input::parse_weights(&weights)?;
            match one_input(&common)? {
                Object::Divisor(d) => Outcome::ok(json!({ "weights": w.as_qvector(), "value": d.evaluate(&w)? })),
                obj => {
                    let f = obj.into_filtration()?;
                    let v = f.asymptotic_value_with_source(&w)?;
                    Outcome::ok(json!({ "weights": w.as_qvector(), "value": v.value, "source": v.source }))
                }
            }
        }
        Command::IdealAt { common, lambda } => {
            out = common.out.clone();
            let l = input::parse_rational(&lambda)?;
            let f = one_input(&common)?.into_filtration()?;
            Outcome::ok(json!({ "lambda": l, "generators": generators(&f.ideal_at(&l)?) }))
        }
        Command::Saturate { common, lambda } => {
            out = common.out.clone();
            let s = one_input(&common)?.into_filtration()?.saturate();
            match lambda {
                Some(l) => {
                    let l = input::parse_rational(&l)?;
                    Outcome::ok(json!({ "lambda": l, "generators": generators(&s.ideal_at(&l)?) }))
                }
                None => Outcome::ok(json!({ "saturation": to_value(&s)? })),
            }
        }
        Command::IsSaturated { common, lambdas } => {
            out = common.out.clone();
            let ls = input::parse_rationals(&lambdas)?;
            let check = one_input(&common)?.into_filtration()?.is_saturated(&ls)?;
            Outcome { passed: check.is_saturated(), report: to_value(&check)? }
        }
        Command::Zdiv { common } => {
            out = common.out.clone();
            let d = one_input(&common)?.into_divisor()?;
            Outcome::ok(json!({ "divisor": to_value(&d)?, "bounds": to_value(&d.boundedness_constants()?)? }))
        }
        Command::Extract { common, lambda } => {
            out = common.out.clone();
            let d = one_input(&common)?.into_divisor()?;
            let f = d.extract_filtration()?;
            match lambda {
                Some(l) => {
                    let l = input::parse_rational(&l)?;
                    Outcome::ok(json!({ "lambda": l, "generators": generators(&f.ideal_at(&l)?) }))
                }
                None => Outcome::ok(json!({
                    "region": f.asymptotic_region(),
                    "breakpoint_step": f.breakpoint_step(),
                })),
            }
        }
        Command::Order { common, poly } => {
            out = common.out.clone();
            let d = one_input(&common)?.into_divisor()?;
            let p = poly_for(&poly, d.dim())?;
            Outcome::ok(json!({ "poly": p.to_string(), "order": d.vanishing_order(&p)? }))
        }
        Command::Norm { common, poly } => {
            out = common.out.clone();
            let f = one_input(&common)?.into_filtration()?;
            let p = poly_for(&poly, f.dim())?;
            Outcome::ok(json!({ "poly": p.to_string(), "norm": f.norm_value(&p)? }))
        }
        Command::Bounds { common } => {
            out = common.out.clone();
            match one_input(&common)? {
                Object::Divisor(d) => Outcome::ok(to_value(&d.boundedness_constants()?)?),
                obj => {
                    let (epsilon, c) = obj.into_filtration()?.linear_boundedness();
                    Outcome::ok(json!({ "epsilon": epsilon, "c": c }))
                }
            }
        }
        Command::CheckTheorem { statement, common, lambdas, weights, poly, cases, seed } => {
            out = common.out.clone();
            check_theorem(statement, &common, lambdas, weights, poly, cases, seed)?
        }
        Command::CheckBdivisorial { common, weights, poly } => {
            out = common.out.clone();
            let w = input::parse_weights(&weights)?;
            report_value(&b_divisoriality(&w, &poly_for(&poly, w.dim())?)?)?
        }
        Command::Plot { common, lambda } => {
            let target = common.out.clone().ok_or_else(|| usage("plot needs --out for the SVG file"))?;
            let obj = one_input(&common)?;
            let report = plot(obj, &lambda, &target)?;
            return Ok((Outcome::ok(report), None));
        }
        Command::Oracle { kind, common, lambda, weights, box_bound, m_max, resolution } => {
            out = common.out.clone();
            oracle(kind, &common, lambda, weights, box_bound, m_max, resolution)?
        }
    };
    Ok((outcome, out))
}

fn check_theorem(
    statement: Statement,
    common: &Common,
    lambdas: Option<String>,
    weights: Option<String>,
    poly: Option<String>,
    cases: usize,
    seed: u64,
) -> CliResult<Outcome> {
    let ls = match &lambdas {
        Some(s) => input::parse_rationals(s)?,
        None => (1..=6).map(|k| Rational::new(k, 2)).collect(),
    };
    let inputs: Vec<Object> = common.inputs.iter().map(|p| Object::load(p)).collect::<CliResult<_>>()?;
    let mut rng = random::rng(seed);
    let reports: Vec<CheckReport> = match statement {
        Statement::Roundtrip => {
            let fs: Vec<Filtration> = if inputs.is_empty() {
                (0..cases).map(|k| {
                    let r = random::region(&mut rng, 2 + k % 2, 5, 6);
                    Filtration::region(r).expect("m-primary")
                }).collect()
            } else {
                inputs.into_iter().map(Object::into_filtration).collect::<CliResult<_>>()?
            };
            fs.iter().map(|f| check_saturated_roundtrip(f, &ls)).collect::<Result<_, _>>()?
        }
        Statement::Extraction => {
            let ds: Vec<ToricBDivisor> = if inputs.is_empty() {
                (0..cases).map(|_| random::fan_divisor(&mut rng)).collect()
            } else {
                inputs.into_iter().map(Object::into_divisor).collect::<CliResult<_>>()?
            };
            ds.iter().map(check_extraction_inequality).collect::<Result<_, _>>()?
        }
        Statement::Injectivity => {
            let [a, b]: [Object; 2] =
                inputs.try_into().map_err(|_| usage("injectivity needs two --input files"))?;
            vec![check_injectivity(&a.into_filtration()?, &b.into_filtration()?, &ls)?]
        }
        Statement::MainInequality => {
            let w = input::parse_weights(weights.as_deref().ok_or_else(|| usage("--weights is required"))?)?;
            let p = poly_for(poly.as_deref().ok_or_else(|| usage("--poly is required"))?, w.dim())?;
            vec![main_inequality(&w, &p)?]
        }
    };
    if let [single] = reports.as_slice() {
        return report_value(single);
    }
    let passed = reports.iter().all(CheckReport::passed);
    Ok(Outcome {
        passed,
        report: json!({
            "cases": reports.len(),
            "seed": seed,
            "passed": reports.iter().filter(|r| r.passed()).count(),
            "failures": reports.iter().filter(|r| !r.passed()).map(to_value).collect::<CliResult<Vec<_>>>()?,
        }),
    })
}

fn oracle(
    kind: OracleKind,
    common: &Common,
    lambda: Option<String>,
    weights: Option<String>,
    box_bound: Option<u32>,
    m_max: u32,
    resolution: u32,
) -> CliResult<Outcome> {
    match kind {
        OracleKind::Saturation => {
            let f = one_input(common)?.into_filtration()?;
            let l = lambda_default(&lambda)?;
            let b = box_bound.ok_or_else(|| usage("--box is required"))?;
            let oracle = saturation_oracle(&f, &l, b)?;
            let closed = f.saturate().ideal_at(&l)?;
            Ok(Outcome {
                passed: oracle == closed,
                report: json!({ "lambda": l, "oracle": generators(&oracle), "closed_form": generators(&closed) }),
            })
        }
        OracleKind::Fekete => {
            let f = one_input(common)?.into_filtration()?;
            let w = input::parse_weights(weights.as_deref().ok_or_else(|| usage("--weights is required"))?)?;
            let seq = fekete_estimate(&f, &w, m_max)?;
            let limit = f.asymptotic_value(&w)?;
            let passed = seq.iter().all(|(_, x)| *x >= limit);
            let entries: Vec<Value> = seq.iter().map(|(m, x)| json!([m, x])).collect();
            Ok(Outcome { passed, report: json!({ "limit": limit, "sequence": entries }) })
        }
        OracleKind::Grid => {
            let [a, b]: [Object; 2] = common
                .inputs
                .iter()
                .map(|p| Object::load(p))
                .collect::<CliResult<Vec<_>>>()?
                .try_into()
                .map_err(|_| usage("grid needs two --input divisors"))?;
            let (a, b) = (a.into_divisor()?, b.into_divisor()?);
            let n = a.dim();
            let ratio = |w: &toric_bdiv::QVector| {
                let w = toric_bdiv::WeightVector::new(w.clone()).ok()?;
                let den = b.evaluate(&w).ok()?;
                (!den.is_zero()).then(|| a.evaluate(&w).ok().map(|x| x / den)).flatten()
            };
            let (value, at) = grid_infimum(n, resolution, ratio)?;
            Ok(Outcome::ok(json!({ "resolution": resolution, "value": value, "at": at })))
        }
    }
}

fn plot(obj: Object, lambda: &Option<String>, target: &Path) -> CliResult<Value> {
    if obj.dim() != 2 {
        return Err(CliError::new("unsupported_representation", "plots are planar"));
    }
    let (svg, csv, what) = match obj {
        Object::Ideal(a) => {
            let q = a.newton_region().ok();
            (plot::staircase_svg(&a, q.as_ref()), plot::exponents_csv(a.generators()), "staircase")
        }
        Object::Filtration(f) => {
            let l = lambda_default(lambda)?;
            let a = f.ideal_at(&l)?;
            let q = f.asymptotic_region().scale(&l)?;
            (plot::staircase_svg(&a, Some(&q)), plot::exponents_csv(a.generators()), "staircase")
        }
        Object::Divisor(ToricBDivisor::FanPl { fan, values }) => {
            let rays: Vec<_> = fan
                .rays()
                .iter()
                .zip(&values)
                .map(|(r, v)| (toric_bdiv::QVector::from_ints(*r), v.clone()))
                .collect();
            let pts: Vec<_> = rays.iter().map(|(r, _)| r.clone()).collect();
            (plot::fan_svg(&rays), plot::points_csv(&pts), "fan")
        }
        Object::Divisor(d) => {
            let q = d
                .convex_region()
                .ok_or_else(|| CliError::new("unsupported_representation", "sampled divisors cannot be plotted"))?;
            (plot::region_svg(&q), plot::points_csv(q.vertices()), "region")
        }
        _ => return Err(CliError::new("unsupported_representation", "nothing to plot")),
    };
    let csv_path = target.with_extension("csv");
    write_file(target, &svg)?;
    write_file(&csv_path, &csv)?;
    Ok(json!({ "plot": what, "svg": target.display().to_string(), "csv": csv_path.display().to_string() }))
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|e| CliError::new("io_error", format!("{}: {e}", path.display())))
}

/// Parses `args`, runs the subcommand and returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return if code == 0 { 0 } else { 2 };
        }
    };
    match execute(cli.command) {
        Ok((outcome, out)) => {
            let mut text = serde_json::to_string_pretty(&outcome.report).expect("json values serialize");
            text.push('\n');
            match out {
                Some(path) => {
                    if let Err(e) = write_file(&path, &text) {
                        return fail(e);
                    }
                }
                None => print!("{text}"),
            }
            if outcome.passed { 0 } else { 1 }
        }
        Err(e) => fail(e),
    }
}

fn fail(e: CliError) -> i32 {
    eprintln!("{}", json!({ "error": { "code": e.code, "message": e.message } }));
    2
}
