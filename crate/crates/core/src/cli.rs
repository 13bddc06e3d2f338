//! Command-line front end. Every subcommand prints one JSON document (or a
//! flat table) and exits 0 on success, 1 when a verification fails and 2 on
//! usage errors.
//!
//! With `LOOPALG_GOLDEN_DIR` set, the JSON output is compared byte for byte
//! with `<dir>/<subcommand>_<args>.json` instead of being trusted;
//! `LOOPALG_GOLDEN_BLESS=1` rewrites the file instead.

use std::ffi::OsString;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::affine::Parahoric;
use crate::error::Error;
use crate::hitchin::{
    hitchin_bounds, residue_diagram, torus_invariant_generator, verify_containment, verify_n1_corollary,
    verify_surjectivity, InvariantSystem,
};
use crate::laurent::LaurentPoly;
use crate::opers::{
    check_irregular_type, check_residue_rs, cyclic_ode, fg_connection, global_hitchin_base, global_oper_space,
    infinity_orders, slope_certificate,
};
use crate::rootdata::{CartanType, RootDatum};
use crate::scalar::{fmt_q, parse_q, Scalar};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Parser, Debug)]
#[command(
    name = "loopalg",
    version,
    about = "Exact computations with parahoric lattices, the local Hitchin map and opers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads for sample sweeps (0: one per core). Output does not depend on it.
    #[arg(long, default_value_t = 0, global = true)]
    pub jobs: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Fundamental degrees, exponents, Coxeter number and Kac labels.
    Degrees { cartan: String },
    /// Period, cocharacter, Levi dimension and principality of a standard parahoric.
    Kac(ParahoricArgs),
    /// The Z/m-grading of the finite algebra induced by Kac coordinates.
    Grading(ParahoricArgs),
    /// Order bounds b_i = d_i - ceil(d_i(1-n)/m) for the image of the dual lattice.
    HitchinImage {
        #[command(flatten)]
        parahoric: ParahoricArgs,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        n: i64,
    },
    /// Run one verification and report pass/fail through the exit code.
    Verify(VerifyArgs),
    /// The connection d + (f/z + a e_theta)dz on the dual group with its certificates.
    Fg {
        cartan: String,
        /// Rational parameter, e.g. 1, -2 or 3/5.
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Opers on P^1 with regular singularity f/z at 0 and slope 1/h at infinity.
    OperSpace { cartan: String },
    /// Dimension of the global Hitchin base on P^1 for the same level structure.
    HitchinBase { cartan: String },
}

#[derive(Args, Debug, Clone)]
pub struct ParahoricArgs {
    /// Cartan type, e.g. A2, C2, G2.
    #[arg(long = "type")]
    pub cartan: String,
    /// Kac coordinates s_0,...,s_l (default: all ones, the Iwahori).
    #[arg(long)]
    pub kac: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Proposition {
    /// The Hitchin map sends the dual of p(n) into sum_i omega^{d_i}(b_i).
    SizeOfImage,
    /// For principal parahorics at n = 2 the bounds are attained (Kostant section).
    Surjectivity,
    /// For n = 1 every bound b_i = d_i is attained, for every parahoric.
    N1Corollary,
    /// The residue square commutes up to one scalar (Iwahori).
    ResidueDiagram,
    /// The global oper space is one-dimensional, spanned by e_theta.
    GlobalOper,
    /// The torus invariants of V are generated by the monomial with Kac-label exponents.
    InvariantGenerator,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub proposition: Proposition,
    #[command(flatten)]
    pub parahoric: ParahoricArgs,
    #[arg(long, default_value_t = 2, allow_negative_numbers = true)]
    pub n: i64,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Outcome of a subcommand: the report and whether it passed.
struct Outcome {
    report: Value,
    passed: bool,
}

fn usage(e: Error) -> (i32, String) {
    (2, format!("error: {e}"))
}

fn cartan(s: &str) -> Result<CartanType, Error> {
    s.parse()
}

fn parahoric(args: &ParahoricArgs) -> Result<Parahoric, Error> {
    let rd = Arc::new(RootDatum::from_name(&args.cartan)?);
    match &args.kac {
        None => Ok(Parahoric::iwahori(rd)),
        Some(s) => Parahoric::new(rd, &Parahoric::parse_coords(s)?),
    }
}

fn laurent_json(p: &LaurentPoly) -> Value {
    let map: serde_json::Map<String, Value> = p.terms().map(|(k, c)| (k.to_string(), json!(fmt_q(&c)))).collect();
    Value::Object(map)
}

fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::UnsupportedType(_)
            | Error::InvalidCoordinates(_)
            | Error::UnsupportedTwisted(_)
            | Error::Precondition(_)
            | Error::Parse(_)
    )
}

fn execute(cli: &Cli) -> Result<Outcome, Error> {
    let ok = |report: Value| Ok(Outcome { report, passed: true });
    match &cli.command {
        Command::Degrees { cartan: name } => {
            let rd = RootDatum::from_name(name)?;
            ok(json!({
                "type": rd.cartan.to_string(),
                "degrees": rd.fundamental_degrees().0,
                "exponents": rd.exponents(),
                "coxeter_number": rd.coxeter_number,
                "kac_labels": rd.kac_labels,
                "dimension": rd.dim(),
            }))
        }
        Command::Kac(args) => {
            let p = parahoric(args)?;
            ok(json!({
                "type": p.rd.cartan.to_string(),
                "kac_coords": p.kac_coords,
                "m": p.m,
                "eta": p.eta(),
                "levi_dimension": p.levi_dimension(),
                "iwahori": p.is_iwahori(),
                "hyperspecial": p.is_hyperspecial(),
                "principal": p.is_principal(),
                "principal_simple_system": p.principal_witness(),
            }))
        }
        Command::Grading(args) => {
            let p = parahoric(args)?;
            let g = p.kac_grading()?;
            let pieces: serde_json::Map<String, Value> = g
                .pieces
                .iter()
                .map(|(k, lines)| (k.to_string(), json!(lines.iter().map(|&l| p.rd.line_name(l)).collect::<Vec<_>>())))
                .collect();
            ok(json!({
                "type": p.rd.cartan.to_string(),
                "kac_coords": p.kac_coords,
                "m": g.m,
                "eta": g.eta,
                "pieces": pieces,
                "bracket_compatible": g.is_compatible(&p.rd),
            }))
        }
        Command::HitchinImage { parahoric: args, n } => {
            let p = parahoric(args)?;
            let img = hitchin_bounds(&p, *n);
            let lattice = p.moy_prasad(*n);
            let perp = p.orthogonal_lattice(*n)?;
            ok(json!({
                "type": p.rd.cartan.to_string(),
                "kac_coords": p.kac_coords,
                "m": p.m,
                "n": n,
                "degrees": img.bounds.degrees,
                "bounds": img.bounds.bounds,
                "lattice_orders": lattice.dump(&p.rd),
                "dual_lattice_orders": perp.dump(&p.rd),
            }))
        }
        Command::Verify(v) => verify(v, cli.jobs),
        Command::Fg { cartan: name, a } => {
            let t = cartan(name)?;
            let a = parse_q(a)?;
            let op = fg_connection(t, &a)?;
            let m = op.defining_matrix();
            let matrix: Vec<Vec<Value>> =
                (0..m.rows).map(|r| (0..m.cols).map(|c| laurent_json(m.get(r, c))).collect()).collect();
            let rs = check_residue_rs(&op);
            let irr = check_irregular_type(&op);
            let certificate =
                if a.is_zero() { Value::Null } else { serde_json::to_value(slope_certificate(&op)?).unwrap() };
            let ode = cyclic_ode(&op)?;
            let orders: Vec<Value> =
                infinity_orders(&op)?.iter().map(|(d, o, b)| json!({"degree": d, "order": o, "bound": b})).collect();
            let report = json!({
                "type": t.to_string(),
                "dual_type": op.rd.cartan.to_string(),
                "dual_node_permutation": t.langlands_dual().1,
                "a": fmt_q(&a),
                "matrix": matrix,
                "residue_rs": rs,
                "irregular_type": irr,
                "infinity_orders": orders,
                "slope_certificate": certificate,
                "ode": {
                    "cyclic_vector": ode.cyclic_vector,
                    "coefficients": ode.polynomial_form().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "irregularity_at_zero": ode.irregularity_at_zero(),
                    "irregularity_at_infinity": ode.irregularity_at_infinity(),
                },
            });
            Ok(Outcome { report, passed: rs && irr })
        }
        Command::OperSpace { cartan: name } => {
            let s = global_oper_space(cartan(name)?)?;
            let passed = s.dimension == 1 && s.basis_is_e_theta;
            Ok(Outcome { report: serde_json::to_value(s).unwrap(), passed })
        }
        Command::HitchinBase { cartan: name } => {
            let b = global_hitchin_base(cartan(name)?)?;
            let passed = b.total == 1;
            Ok(Outcome { report: serde_json::to_value(b).unwrap(), passed })
        }
    }
}

fn verify(v: &VerifyArgs, jobs: usize) -> Result<Outcome, Error> {
    let report = |r: crate::hitchin::Report| {
        let passed = r.passed();
        Ok(Outcome { report: serde_json::to_value(r).unwrap(), passed })
    };
    let inv = || InvariantSystem::from_name(&v.parahoric.cartan);
    match v.proposition {
        Proposition::SizeOfImage => {
            let p = parahoric(&v.parahoric)?;
            report(verify_containment(&inv()?, &p, v.n, v.samples, v.seed, jobs)?)
        }
        Proposition::Surjectivity => {
            let p = parahoric(&v.parahoric)?;
            report(verify_surjectivity(&inv()?, &p, v.samples, v.seed, jobs)?)
        }
        Proposition::N1Corollary => {
            let p = parahoric(&v.parahoric)?;
            report(verify_n1_corollary(&inv()?, &p, v.seed)?)
        }
        Proposition::ResidueDiagram => {
            let p = parahoric(&v.parahoric)?;
            report(residue_diagram(&inv()?, &p, v.samples, v.seed, jobs)?)
        }
        Proposition::InvariantGenerator => {
            let p = parahoric(&v.parahoric)?;
            let g = torus_invariant_generator(&p)?;
            let passed = g.exponents == p.rd.kac_labels;
            Ok(Outcome {
                report: json!({
                    "proposition": "invariant-generator",
                    "type": p.rd.cartan.to_string(),
                    "parahoric": p.kac_coords,
                    "exponents": g.exponents,
                    "kac_labels": p.rd.kac_labels,
                    "degree": g.degree,
                    "checked_up_to": g.checked_up_to,
                    "status": if passed { "pass" } else { "fail" },
                }),
                passed,
            })
        }
        Proposition::GlobalOper => {
            let t = cartan(&v.parahoric.cartan)?;
            let s = global_oper_space(t)?;
            let b = global_hitchin_base(t)?;
            let passed = s.dimension == 1 && s.basis_is_e_theta && b.total == 1;
            Ok(Outcome {
                report: json!({
                    "proposition": "global-oper",
                    "type": t.to_string(),
                    "dual_type": s.dual_type,
                    "dim": s.dimension,
                    "basis_is_e_theta": s.basis_is_e_theta,
                    "hitchin_base_dim": b.total,
                    "status": if passed { "pass" } else { "fail" },
                }),
                passed,
            })
        }
    }
}

fn table(v: &Value) -> String {
    match v {
        Value::Object(map) => map
            .iter()
            .map(|(k, x)| {
                let cell = match x {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                format!("{k:<24} {cell}")
            })
            .collect::<Vec<_>>()
            .join("\n"),
        other => other.to_string(),
    }
}

/// Golden-file name for a command line: subcommand and arguments joined by `_`.
pub fn golden_key(args: &[String]) -> String {
    let parts: Vec<String> = args
        .iter()
        .skip(1)
        .filter(|a| !a.starts_with("--jobs") && !a.starts_with("--format") && !a.starts_with("--output"))
        .map(|a| a.trim_start_matches('-').replace(['/', ','], "-"))
        .collect();
    parts.join("_")
}

fn strip_runtime_flags(args: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    let mut skip = false;
    for a in args {
        if skip {
            skip = false;
            continue;
        }
        if ["--jobs", "--format", "--output"].contains(&a.as_str()) {
            skip = true;
            continue;
        }
        out.push(a.clone());
    }
    out
}

fn golden_check(args: &[String], text: &str) -> Option<(i32, String)> {
    let dir = std::env::var_os("LOOPALG_GOLDEN_DIR")?;
    let path = PathBuf::from(dir).join(format!("{}.json", golden_key(&strip_runtime_flags(args))));
    if std::env::var("LOOPALG_GOLDEN_BLESS").is_ok_and(|v| v == "1") {
        return match std::fs::write(&path, text) {
            Ok(()) => None,
            Err(e) => Some((2, format!("error: cannot write {}: {e}", path.display()))),
        };
    }
    match std::fs::read_to_string(&path) {
        Ok(expected) if expected == text => None,
        Ok(_) => Some((1, format!("golden mismatch: {}", path.display()))),
        Err(e) => Some((1, format!("golden file {} unreadable: {e}", path.display()))),
    }
}

/// Runs the CLI on `args` (including the program name). Returns the exit
/// code and the text for stdout (or stderr when the code is 2).
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) if is_usage_error(&e) => return usage(e),
        Err(e) => {
            let report = json!({"status": "fail", "error": e.to_string()});
            Outcome { report, passed: false }
        }
    };
    let mut report = outcome.report;
    if let Value::Object(map) = &mut report {
        map.insert("schema_version".into(), json!(SCHEMA_VERSION));
    }
    let json_text = serde_json::to_string_pretty(&report).unwrap() + "\n";
    let strings: Vec<String> = args.iter().map(|a| a.to_string_lossy().into_owned()).collect();
    if let Some(fail) = golden_check(&strings, &json_text) {
        return fail;
    }
    let text = match cli.format {
        Format::Json => json_text,
        Format::Table => table(&report) + "\n",
    };
    if let Some(path) = &cli.output {
        if let Err(e) = std::fs::write(path, &text) {
            return (2, format!("error: cannot write {}: {e}", path.display()));
        }
        return (i32::from(!outcome.passed), String::new());
    }
    (i32::from(!outcome.passed), text)
}

pub fn main_entry() -> i32 {
    let (code, text) = run(std::env::args_os());
    if code == 2 {
        eprint!("{text}");
        if !text.ends_with('\n') {
            eprintln!();
        }
    } else {
        print!("{text}");
    }
    code
}
