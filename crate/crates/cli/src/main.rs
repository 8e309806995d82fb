//! `whideal`: weighted Hodge ideals, minimal exponents and singularity bounds
//! from the command line.

mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use whideal_core::dims::{
    dim_fp_pushforward, grf_from_resolution, hockey_stick, projective_bounds,
    surjectivity_threshold, GrFDims, HodgeNumberTable,
};
use whideal_core::invariants::{classify, jacobian_witness};
use whideal_core::snc::{verify_snc_theorems, weighted_hodge_ideal_snc, SncVerification};
use whideal_core::{
    parse_polynomial, AnalysisOptions, Error, ExponentVector, GroebnerLimits, SncModel,
};

use render::Style;

#[derive(Parser, Debug)]
#[command(
    name = "whideal",
    version,
    about = "Weighted Hodge ideals and hypersurface singularity invariants"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Analyze an isolated singularity at the origin via its Newton polyhedron.
    Analyze(AnalyzeArgs),
    /// Generators of the weighted Hodge ideal of a simple normal crossings divisor.
    Snc(SncArgs),
    /// Singularity-count bounds for a projective hypersurface.
    Bounds(BoundsArgs),
    /// Hodge-graded dimensions from a resolution's Hodge number table.
    Dims(DimsArgs),
    /// Run the built-in theorem checks.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    /// Polynomial, e.g. "x^2 + y^3".
    #[arg(required_unless_present = "file", conflicts_with = "file")]
    polynomial: Option<String>,

    /// Read the polynomial from a file.
    #[arg(long, short)]
    file: Option<PathBuf>,

    /// Comma-separated variable order; defaults to order of first appearance.
    #[arg(long, value_delimiter = ',')]
    vars: Option<Vec<String>>,

    /// Monomial to test against the Jacobian ideal.
    #[arg(long)]
    witness: Option<String>,

    /// Hodge level for the witness annotation; defaults to the detected level or 0.
    #[arg(long, requires = "witness")]
    witness_p: Option<u32>,

    /// Accept polynomials that are not convenient.
    #[arg(long)]
    allow_nonconvenient: bool,

    /// Maximum total generator terms for Groebner computations.
    #[arg(long, value_name = "N")]
    groebner_limit: Option<usize>,
}

#[derive(Args, Debug)]
struct SncArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    p: u32,
    #[arg(long)]
    l: usize,
    /// Also check the chain, stabilization and adjoint statements up to p.
    #[arg(long)]
    verify: bool,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    d: u32,
    #[arg(long)]
    p: u32,
    /// Weight degree for the surjectivity threshold.
    #[arg(long)]
    l: Option<u32>,
}

#[derive(Args, Debug)]
struct DimsArgs {
    /// JSON Hodge number table: {"n": 5, "middle": [[a, b, h]], "top": [[a, b, h]]}.
    #[arg(long)]
    table: PathBuf,
    #[arg(long)]
    l: u32,
    #[arg(long)]
    p: u32,
    /// Also report dim F_p of the pushforward, with d(r) = dim Gr_F^{n-r} H_l.
    #[arg(long)]
    pushforward: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value_t = 5)]
    n_max: usize,
    #[arg(long, default_value_t = 3)]
    p_max: u32,
    /// Range checked for the hockey-stick identity.
    #[arg(long, default_value_t = 20)]
    hockey_max: u32,
}

enum Failure {
    Core(Error),
    Io(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Core(Error::Parse(_)) => 1,
            Failure::Core(Error::GroebnerGuard { .. }) => 3,
            _ => 2,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::Io(m) | Failure::Check(m) => m.clone(),
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let style = Style::detect();
    let result = match &cli.command {
        Command::Analyze(a) => analyze(a, cli.json, style),
        Command::Snc(a) => snc(a, cli.json, style),
        Command::Bounds(a) => bounds(a, cli.json, style),
        Command::Dims(a) => dims(a, cli.json, style),
        Command::Verify(a) => verify(a, cli.json, style),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check(out)) => {
            // the report is still useful on stdout
            print!("{out}");
            eprintln!("error: verification failed");
            ExitCode::from(2)
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

fn analyze(a: &AnalyzeArgs, json: bool, style: Style) -> Outcome {
    let text = match (&a.polynomial, &a.file) {
        (Some(p), _) => p.clone(),
        (None, Some(path)) => fs::read_to_string(path)
            .map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?,
        (None, None) => unreachable!("clap requires one input"),
    };
    let f = parse_polynomial(text.trim(), a.vars.as_deref()).map_err(Error::from)?;
    let limits = a
        .groebner_limit
        .map(GroebnerLimits::with_max_terms)
        .unwrap_or_default();
    let opts = AnalysisOptions {
        allow_nonconvenient: a.allow_nonconvenient,
        groebner_limits: limits,
    };
    let mut report = classify(&f, &opts)?;
    if let Some(w) = &a.witness {
        let m = parse_monomial(w, f.variables())?;
        let p = a.witness_p.or(report.p_level).unwrap_or(0);
        report.witness = Some(jacobian_witness(&f, &m, p, &opts.groebner_limits)?);
    }
    Ok(if json {
        to_json(&report)
    } else {
        render::report(&report, style)
    })
}

fn parse_monomial(text: &str, names: &[String]) -> Result<ExponentVector, Error> {
    let g = parse_polynomial(text, Some(names))?;
    let mut terms = g.terms();
    match (terms.next(), terms.next()) {
        (Some((e, c)), None) if *c == whideal_core::rational::int(1) => Ok(e.clone()),
        _ => Err(Error::InvalidParameter(format!(
            "witness must be a single monic monomial, got {text:?}"
        ))),
    }
}

#[derive(Serialize)]
struct SncOutput {
    schema: &'static str,
    n: usize,
    r: usize,
    p: u32,
    l: usize,
    ideal: String,
    generators: Vec<ExponentVector>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verification: Option<SncVerification>,
}

fn snc(a: &SncArgs, json: bool, style: Style) -> Outcome {
    let model = SncModel::new(a.n, a.r)?;
    let ideal = weighted_hodge_ideal_snc(model, a.p, a.l);
    let out = SncOutput {
        schema: "whideal-snc/1",
        n: a.n,
        r: a.r,
        p: a.p,
        l: a.l,
        ideal: ideal.render_indexed(),
        generators: ideal.generators().to_vec(),
        verification: a.verify.then(|| verify_snc_theorems(model, a.p)),
    };
    let text = if json {
        to_json(&out)
    } else {
        render::snc(&out, style)
    };
    match &out.verification {
        Some(v) if !v.all_passed() => Err(Failure::Check(text)),
        _ => Ok(text),
    }
}

#[derive(Serialize)]
struct BoundsOutput {
    schema: &'static str,
    n: u32,
    d: u32,
    p: u32,
    /// Decimal strings: the binomials outgrow 64 bits quickly.
    bound_z2: String,
    bound_z: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    l: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    surjectivity_threshold: Option<i64>,
}

fn bounds(a: &BoundsArgs, json: bool, style: Style) -> Outcome {
    let (z2, z) = projective_bounds(a.n, a.d, a.p)?;
    let threshold =
        a.l.map(|l| surjectivity_threshold(a.n, a.d, a.p, l))
            .transpose()?;
    let out = BoundsOutput {
        schema: "whideal-bounds/1",
        n: a.n,
        d: a.d,
        p: a.p,
        bound_z2: z2.to_string(),
        bound_z: z.to_string(),
        l: a.l,
        surjectivity_threshold: threshold,
    };
    Ok(if json {
        to_json(&out)
    } else {
        render::bounds(&out, style)
    })
}

#[derive(Serialize)]
struct DimsOutput {
    schema: &'static str,
    n: u32,
    l: u32,
    p: u32,
    grf: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pushforward_fp: Option<String>,
}

fn dims(a: &DimsArgs, json: bool, style: Style) -> Outcome {
    let raw = fs::read_to_string(&a.table)
        .map_err(|e| Failure::Io(format!("cannot read {}: {e}", a.table.display())))?;
    let table = HodgeNumberTable::from_json(&raw)?;
    let grf = grf_from_resolution(&table, a.l, a.p)?;
    let pushforward = if a.pushforward {
        let d = (0..=a.p)
            .map(|r| grf_from_resolution(&table, a.l, r))
            .collect::<Result<Vec<u64>, Error>>()?;
        Some(dim_fp_pushforward(&GrFDims::from_slice(&d), a.p, table.n())?.to_string())
    } else {
        None
    };
    let out = DimsOutput {
        schema: "whideal-dims/1",
        n: table.n(),
        l: a.l,
        p: a.p,
        grf,
        pushforward_fp: pushforward,
    };
    Ok(if json {
        to_json(&out)
    } else {
        render::dims(&out, style)
    })
}

#[derive(Serialize)]
struct VerifyOutput {
    schema: &'static str,
    n_max: usize,
    p_max: u32,
    snc: Vec<SncVerification>,
    hockey_max: u32,
    hockey_failures: Vec<(u32, u32)>,
    passed: bool,
}

fn verify(a: &VerifyArgs, json: bool, style: Style) -> Outcome {
    let mut snc = Vec::new();
    for n in 1..=a.n_max {
        for r in 1..=n {
            snc.push(verify_snc_theorems(SncModel::new(n, r)?, a.p_max));
        }
    }
    let hockey_failures: Vec<(u32, u32)> = (1..=a.hockey_max)
        .flat_map(|n| (0..=a.hockey_max).map(move |m| (n, m)))
        .filter(|&(n, m)| !hockey_stick(n, m))
        .collect();
    let passed = snc.iter().all(SncVerification::all_passed) && hockey_failures.is_empty();
    let out = VerifyOutput {
        schema: "whideal-verify/1",
        n_max: a.n_max,
        p_max: a.p_max,
        snc,
        hockey_max: a.hockey_max,
        hockey_failures,
        passed,
    };
    let text = if json {
        to_json(&out)
    } else {
        render::verify(&out, style)
    };
    if passed {
        Ok(text)
    } else {
        Err(Failure::Check(text))
    }
}
