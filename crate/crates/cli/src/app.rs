//! Argument definitions, command dispatch and rendering.
//!
//! Exit codes: 0 success (and all verdicts true), 2 admissibility error,
//! 3 invalid base, 4 bad parameters.

use crate::basefile::read_base_file;
use crate::dto::*;
use clap::{Args, Parser, Subcommand};
use sphere_tdual::catalog;
use sphere_tdual::chern::{inverse_factorial, ChernContext, ChernError, Sign};
use sphere_tdual::fgab::is_isomorphic;
use sphere_tdual::graded::{twisted_cohomology, BaseManifold};
use sphere_tdual::gysin::{BundleWithFlux, GysinError};
use sphere_tdual::tduality::{dualize, twisted_k, DualityReport, TdualError};
use std::fmt::Write as _;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(
    name = "stdual",
    version,
    about = "Exact cohomology, twisted K-theory and spherical T-duality of odd sphere bundles"
)]
pub struct Cli {
    /// Emit a machine-readable JSON document instead of a table
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Degreewise integral cohomology of the sphere-bundle total space
    #[command(name = "bundle-cohomology")]
    BundleCohomology(BundleArgs),
    /// Twisted cohomology, and twisted K-theory when the base is torsion free
    Twisted(PairArgs),
    /// Construct the spherical T-dual and verify the degree-shifting isomorphisms
    Tdual(PairArgs),
    /// Verify the Chern-series recursions in the formal algebra
    #[command(name = "chern-verify")]
    ChernVerify(ChernArgs),
}

#[derive(Args, Debug)]
pub struct BaseArgs {
    /// Name of a catalog base manifold (see --help for the list)
    #[arg(long, conflicts_with = "base_file")]
    pub base: Option<String>,
    /// JSON description of the base manifold
    /// ({"name": .., "dim": .., "groups": [{"degree", "rank", "torsion"}]})
    #[arg(long = "base-file", value_name = "PATH")]
    pub base_file: Option<PathBuf>,
    /// Half-dimension n; checked against the base when given
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Args, Debug)]
pub struct BundleArgs {
    #[command(flatten)]
    pub base: BaseArgs,
    /// Euler number of the bundle
    #[arg(long = "e", allow_hyphen_values = true)]
    pub e: i64,
}

#[derive(Args, Debug)]
pub struct PairArgs {
    #[command(flatten)]
    pub base: BaseArgs,
    /// Euler number of the bundle
    #[arg(long = "e", allow_hyphen_values = true)]
    pub e: i64,
    /// Flux integer on the total space
    #[arg(long = "h", allow_hyphen_values = true)]
    pub h: i64,
}

#[derive(Args, Debug)]
pub struct ChernArgs {
    /// Twist degree parameter: the twist lives in degree 2k+1
    #[arg(long = "k")]
    pub k: u32,
    /// Truncation degree (computations are exact modulo higher degrees)
    #[arg(long = "N")]
    pub truncation: u32,
}

/// Errors carrying the documented exit codes.
#[derive(Debug)]
pub enum CliError {
    Admissibility(String),
    InvalidBase(String),
    BadParameters(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Admissibility(_) => 2,
            CliError::InvalidBase(_) => 3,
            CliError::BadParameters(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Admissibility(m) | CliError::InvalidBase(m) | CliError::BadParameters(m) => m,
        }
    }
}

impl From<GysinError> for CliError {
    fn from(e: GysinError) -> Self {
        match e {
            GysinError::InadmissibleEuler { .. } => CliError::Admissibility(e.to_string()),
            GysinError::InvalidBase(_) => CliError::InvalidBase(e.to_string()),
        }
    }
}

impl From<TdualError> for CliError {
    fn from(e: TdualError) -> Self {
        match e {
            TdualError::InadmissibleDualEuler { .. } => CliError::Admissibility(e.to_string()),
            TdualError::Gysin(g) => g.into(),
            other => CliError::BadParameters(other.to_string()),
        }
    }
}

impl From<ChernError> for CliError {
    fn from(e: ChernError) -> Self {
        CliError::BadParameters(e.to_string())
    }
}

/// Rendered command output and the process exit code.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub exit_code: u8,
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::BundleCohomology(args) => bundle_cohomology(args, cli.json),
        Command::Twisted(args) => twisted(args, cli.json),
        Command::Tdual(args) => tdual(args, cli.json),
        Command::ChernVerify(args) => chern_verify(args, cli.json),
    }
}

fn resolve_base(args: &BaseArgs) -> Result<BaseManifold, CliError> {
    let base = match (&args.base, &args.base_file) {
        (Some(name), None) => catalog::lookup(name).ok_or_else(|| {
            let names: Vec<String> =
                catalog::builtin().into_iter().map(|m| m.name).collect();
            CliError::InvalidBase(format!(
                "unknown base '{name}'; catalog: {}",
                names.join(", ")
            ))
        })?,
        (None, Some(path)) => read_base_file(path).map_err(CliError::InvalidBase)?,
        _ => {
            return Err(CliError::BadParameters(
                "exactly one of --base or --base-file is required".to_string(),
            ))
        }
    };
    if let Some(n) = args.n {
        if n != base.half_dim {
            return Err(CliError::BadParameters(format!(
                "--n {n} does not match the base '{}' of dimension {}",
                base.name,
                2 * base.half_dim
            )));
        }
    }
    Ok(base)
}

fn bundle_cohomology(args: &BundleArgs, json: bool) -> Result<Outcome, CliError> {
    let base = resolve_base(&args.base)?;
    let bundle = BundleWithFlux::new(base, args.e, 0)?;
    let hz = bundle.total_space_cohomology();

    let inputs = BundleInputs {
        base: bundle.base().name.clone(),
        n: bundle.n(),
        e: bundle.euler(),
    };
    let results = CohomologyResults {
        cohomology: hz
            .iter()
            .map(|(degree, group)| DegreeGroup {
                degree,
                group: group.into(),
            })
            .collect(),
    };

    let stdout = if json {
        to_json(&Document {
            command: "bundle-cohomology".to_string(),
            inputs,
            results,
        })
    } else {
        let mut out = format!(
            "H^*(Z;Z) for an S^{} bundle over {} with e = {}\n",
            2 * bundle.n() - 1,
            inputs.base,
            inputs.e
        );
        let _ = writeln!(out, "{:>4}  group", "deg");
        for (degree, group) in hz.iter() {
            let _ = writeln!(out, "{degree:>4}  {group}");
        }
        out
    };
    Ok(Outcome {
        stdout,
        exit_code: 0,
    })
}

fn twisted(args: &PairArgs, json: bool) -> Result<Outcome, CliError> {
    let base = resolve_base(&args.base)?;
    let bundle = BundleWithFlux::new(base, args.e, args.h)?;
    let hz = bundle.total_space_cohomology();
    let (even_h, odd_h) =
        twisted_cohomology(&hz, args.h).map_err(|e| CliError::InvalidBase(e.to_string()))?;

    let torsion_free = bundle.base().torsion_free;
    let (k0, k1, agree, notice) = if torsion_free {
        let (k0, k1) = twisted_k(&bundle)?;
        let agree = is_isomorphic(&k0, &even_h) && is_isomorphic(&k1, &odd_h);
        (Some(k0), Some(k1), Some(agree), None)
    } else {
        (
            None,
            None,
            None,
            Some("twisted K-theory skipped: base has torsion".to_string()),
        )
    };

    let inputs = TwistedInputs {
        base: bundle.base().name.clone(),
        n: bundle.n(),
        e: bundle.euler(),
        h: bundle.flux(),
    };
    let results = TwistedResults {
        even_h: (&even_h).into(),
        odd_h: (&odd_h).into(),
        k0: k0.as_ref().map(Into::into),
        k1: k1.as_ref().map(Into::into),
        agree,
        notice: notice.clone(),
    };

    let stdout = if json {
        to_json(&Document {
            command: "twisted".to_string(),
            inputs,
            results,
        })
    } else {
        let mut out = format!(
            "twisted invariants over {} (n = {}, e = {}, h = {})\n",
            inputs.base, inputs.n, inputs.e, inputs.h
        );
        let _ = writeln!(out, "H_even = {even_h}");
        let _ = writeln!(out, "H_odd  = {odd_h}");
        match (&k0, &k1, agree) {
            (Some(k0), Some(k1), Some(agree)) => {
                let _ = writeln!(out, "K^0    = {k0}");
                let _ = writeln!(out, "K^1    = {k1}");
                let _ = writeln!(out, "agree  = {agree}");
            }
            _ => {
                let _ = writeln!(out, "{}", notice.unwrap_or_default());
            }
        }
        out
    };
    Ok(Outcome {
        stdout,
        exit_code: 0,
    })
}

fn duality_dto(report: &DualityReport) -> DualityDto {
    DualityDto {
        lhs: DualitySide {
            even: (&report.lhs_even).into(),
            odd: (&report.lhs_odd).into(),
        },
        rhs: DualitySide {
            even: (&report.rhs_even).into(),
            odd: (&report.rhs_odd).into(),
        },
        ok: report.crossed_isomorphism_holds(),
    }
}

fn tdual(args: &PairArgs, json: bool) -> Result<Outcome, CliError> {
    let base = resolve_base(&args.base)?;
    let bundle = BundleWithFlux::new(base, args.e, args.h)?;
    let dual = dualize(&bundle)?;

    let cohomology =
        duality_dto(&sphere_tdual::tduality::verify_cohomology_duality(&bundle)?);
    let (ktheory, notice) = if bundle.base().torsion_free {
        (
            Some(duality_dto(&sphere_tdual::tduality::verify_k_duality(
                &bundle,
            )?)),
            None,
        )
    } else {
        (
            None,
            Some("twisted K-theory skipped: base has torsion".to_string()),
        )
    };

    let all_ok = cohomology.ok && ktheory.as_ref().is_none_or(|k| k.ok);
    let inputs = TwistedInputs {
        base: bundle.base().name.clone(),
        n: bundle.n(),
        e: bundle.euler(),
        h: bundle.flux(),
    };
    let results = TdualResults {
        dual_e: dual.euler(),
        dual_h: dual.flux(),
        cohomology,
        ktheory,
        notice,
    };

    let stdout = if json {
        to_json(&Document {
            command: "tdual".to_string(),
            inputs,
            results,
        })
    } else {
        let mut out = format!(
            "T-dual of ({}, e = {}, h = {}) is (e = {}, h = {})\n",
            inputs.base, inputs.e, inputs.h, results.dual_e, results.dual_h
        );
        let c = &results.cohomology;
        let _ = writeln!(
            out,
            "twisted cohomology: lhs (even, odd) = ({}, {}); rhs = ({}, {}); ok = {}",
            render(&c.lhs.even),
            render(&c.lhs.odd),
            render(&c.rhs.even),
            render(&c.rhs.odd),
            c.ok
        );
        match &results.ktheory {
            Some(k) => {
                let _ = writeln!(
                    out,
                    "twisted K-theory:   lhs (K^0, K^1)  = ({}, {}); rhs = ({}, {}); ok = {}",
                    render(&k.lhs.even),
                    render(&k.lhs.odd),
                    render(&k.rhs.even),
                    render(&k.rhs.odd),
                    k.ok
                );
            }
            None => {
                let _ = writeln!(out, "{}", results.notice.clone().unwrap_or_default());
            }
        }
        out
    };
    Ok(Outcome {
        stdout,
        exit_code: if all_ok { 0 } else { 1 },
    })
}

fn chern_verify(args: &ChernArgs, json: bool) -> Result<Outcome, CliError> {
    if args.k < 1 {
        return Err(CliError::BadParameters("--k must be at least 1".to_string()));
    }
    if args.truncation < 2 * args.k + 2 {
        return Err(CliError::BadParameters(format!(
            "--N {} is too small for k = {}; need at least 2k+2 = {}",
            args.truncation,
            args.k,
            2 * args.k + 2
        )));
    }
    let ctx = ChernContext::new(args.k, args.truncation)?;
    let d_squared_holds = ctx.d_squared_check();
    let sign = ctx.twisted_closure_sign()?;
    let seeds: Vec<_> = (1..=args.k).map(inverse_factorial).collect();
    let solution = ctx.odd_series_coefficients(sign, &seeds)?;
    let factorial_closes = solution
        .coefficients
        .iter()
        .enumerate()
        .all(|(i, a)| a == &inverse_factorial(i as u32 + 1));

    let inputs = ChernInputs {
        k: args.k,
        truncation: args.truncation,
    };
    let results = ChernResults {
        d_squared_holds,
        closure_sign: sign.to_i8(),
        plus_sign_convention_agrees: sign == Sign::Plus,
        odd_coefficients: solution
            .coefficients
            .iter()
            .map(|a| a.to_string())
            .collect(),
        factorial_odd_series_closes: factorial_closes,
        lambda_weighted_odd_series_closes: solution.lambda_weighted_closes,
    };

    let stdout = if json {
        to_json(&Document {
            command: "chern-verify".to_string(),
            inputs,
            results,
        })
    } else {
        let mut out = format!(
            "chern series check for k = {}, truncation N = {}\n",
            args.k, args.truncation
        );
        let _ = writeln!(out, "d^2 = 0 on all monomials: {d_squared_holds}");
        let _ = writeln!(
            out,
            "closure sign: {sign} (plus-sign convention {})",
            if results.plus_sign_convention_agrees {
                "agrees"
            } else {
                "disagrees"
            }
        );
        let _ = writeln!(
            out,
            "odd series coefficients: {}",
            results.odd_coefficients.join(", ")
        );
        let _ = writeln!(
            out,
            "factorial coefficients close the odd series: {factorial_closes}"
        );
        let _ = writeln!(
            out,
            "lambda-weighted coefficients close the odd series: {}",
            results.lambda_weighted_odd_series_closes
        );
        out
    };
    Ok(Outcome {
        stdout,
        exit_code: 0,
    })
}

fn render(g: &GroupDto) -> String {
    if g.rank == 0 && g.torsion.is_empty() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    match g.rank {
        0 => {}
        1 => parts.push("Z".to_string()),
        r => parts.push(format!("Z^{r}")),
    }
    for d in &g.torsion {
        parts.push(format!("Z_{d}"));
    }
    parts.join(" + ")
}

fn to_json<T: serde::Serialize>(doc: &T) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("documents serialize");
    text.push('\n');
    text
}
