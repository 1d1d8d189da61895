//! `leibsuper`: build, verify, compare and classify family algebras.
//!
//! Every invocation prints one JSON document on stdout. Exit codes: 0 for
//! success or "yes", 1 for a failed check or "no", 2 for usage and format
//! errors, which are reported as a JSON object on stderr.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use leibsuper_core::algebra::{
    char_sequence, check_graded_closure, check_leibniz, lower_central_series, minimal_generators,
    nilindex, right_annihilator, series_dims,
};
use leibsuper_core::families::{enumerate_representatives, Coord, FamilyKind, FamilyParams};
use leibsuper_core::iso::{calibrate_exponents, classify, decide_iso, fingerprint};
use leibsuper_core::json::{algebra_from_str, algebra_to_value, params_from_str, MAX_FAMILY_N};
use leibsuper_core::{Error, GaussianRational};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "leibsuper",
    version,
    about = "Exact tools for nilpotent Leibniz superalgebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Family {
    /// m1 (odd part n+1) or m2 (odd part n+2)
    #[arg(long)]
    kind: Option<FamilyKind>,
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args)]
struct Output {
    /// Also write the JSON document to this file.
    #[arg(short = 'o', long = "out")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Write the structure constants of a family member.
    FamilyBuild {
        #[command(flatten)]
        family: Family,
        /// Parameter file; kind and n flags must agree with it when given.
        #[arg(long)]
        params: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        /// `J=VALUE`, repeatable.
        #[arg(long = "beta-j", allow_hyphen_values = true)]
        beta_j: Vec<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Run the structural checks and invariants on an algebra file.
    Verify {
        algebra: PathBuf,
        /// Extra random elements for the characteristic sequence.
        #[arg(long, default_value_t = 25)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Decide whether two parameter files give isomorphic algebras.
    Iso {
        first: PathBuf,
        second: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// List the class representatives for a family and n.
    Enumerate {
        #[command(flatten)]
        family: Family,
        #[command(flatten)]
        output: Output,
    },
    /// Representative descriptor and fingerprint of a parameter file.
    Classify {
        params: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Recover the parameter weights from transport.
    Calibrate {
        #[command(flatten)]
        family: Family,
        #[arg(long, default_value_t = 8)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
}

struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            kind: "usage",
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, kind) = match e {
            Error::Parse(_) => (2, "format"),
            Error::InconsistentExponents(_) => (1, "check"),
            _ => (2, "input"),
        };
        Failure {
            code,
            kind,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<(Value, u8), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        kind: "io",
        message: format!("{}: {e}", path.display()),
    })
}

fn read_params(path: &Path) -> Result<FamilyParams, Failure> {
    Ok(params_from_str(&read(path)?)?)
}

fn family(f: &Family) -> Result<(FamilyKind, usize), Failure> {
    let kind = f.kind.ok_or_else(|| Failure::usage("--kind is required"))?;
    let n = f.n.ok_or_else(|| Failure::usage("--n is required"))?;
    if !(2..=MAX_FAMILY_N).contains(&n) {
        return Err(Failure::usage(format!(
            "--n must be in 2..={MAX_FAMILY_N}, got {n}"
        )));
    }
    Ok((kind, n))
}

fn scalar(s: &str) -> Result<GaussianRational, Failure> {
    Ok(GaussianRational::parse(s)?)
}

fn family_build(
    f: &Family,
    params: Option<&Path>,
    gamma: Option<&str>,
    beta: Option<&str>,
    beta_j: &[String],
) -> Outcome {
    let mut p = match params {
        Some(path) => {
            let p = read_params(path)?;
            if f.kind.is_some_and(|k| k != p.kind()) || f.n.is_some_and(|n| n != p.n()) {
                return Err(Failure::usage(
                    "--kind/--n disagree with the parameter file",
                ));
            }
            p
        }
        None => {
            let (kind, n) = family(f)?;
            FamilyParams::zero(kind, n)?
        }
    };
    if let Some(g) = gamma {
        p.set(Coord::Gamma, scalar(g)?)?;
    }
    if let Some(b) = beta {
        p.set(Coord::Beta, scalar(b)?)?;
    }
    for item in beta_j {
        let (j, v) = item
            .split_once('=')
            .ok_or_else(|| Failure::usage(format!("--beta-j expects J=VALUE, got {item:?}")))?;
        let j: usize = j
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("bad index in --beta-j {item:?}")))?;
        p.set(Coord::BetaJ(j), scalar(v)?)?;
    }
    Ok((algebra_to_value(&p.build()?), 0))
}

fn verify(path: &Path, samples: usize, seed: u64) -> Outcome {
    let a = algebra_from_str(&read(path)?)?;
    let closure = check_graded_closure(&a);
    let leibniz = check_leibniz(&a);
    let series = lower_central_series(&a);
    let nil = nilindex(&a);
    let cs = char_sequence(&a, samples, seed).ok();
    let ok = closure.ok && leibniz.ok && nil.is_some();
    let report = json!({
        "ok": ok,
        "graded_closure": closure,
        "leibniz": leibniz,
        "nilpotent": nil.is_some(),
        "nilindex": nil,
        "series_dims": series_dims(&series),
        "char_sequence": cs.map(|c| json!({
            "display": c.sequence.to_string(),
            "even_part": c.sequence.even_part,
            "odd_part": c.sequence.odd_part,
            "even_witness": c.even_witness,
            "odd_witness": c.odd_witness,
            "tested": c.tested,
        })),
        "right_annihilator_dim": right_annihilator(&a).dim(),
        "generators": minimal_generators(&a),
    });
    Ok((report, if ok { 0 } else { 1 }))
}

fn iso(first: &Path, second: &Path) -> Outcome {
    let (p, q) = (read_params(first)?, read_params(second)?);
    if p.kind() != q.kind() || p.n() != q.n() {
        return Err(Failure::usage(format!(
            "parameter files differ in family: {} n={} vs {} n={}",
            p.kind().name(),
            p.n(),
            q.kind().name(),
            q.n()
        )));
    }
    let d = decide_iso(&p, &q)?;
    let code = if d.isomorphic { 0 } else { 1 };
    Ok((to_value(&d)?, code))
}

fn to_value<T: serde::Serialize>(v: &T) -> Result<Value, Failure> {
    serde_json::to_value(v).map_err(|e| Failure {
        code: 2,
        kind: "internal",
        message: e.to_string(),
    })
}

fn run(cmd: &Command) -> Outcome {
    match cmd {
        Command::FamilyBuild {
            family: f,
            params,
            gamma,
            beta,
            beta_j,
            ..
        } => family_build(
            f,
            params.as_deref(),
            gamma.as_deref(),
            beta.as_deref(),
            beta_j,
        ),
        Command::Verify {
            algebra,
            samples,
            seed,
            ..
        } => verify(algebra, *samples, *seed),
        Command::Iso { first, second, .. } => iso(first, second),
        Command::Enumerate { family: f, .. } => {
            let (kind, n) = family(f)?;
            Ok((to_value(&enumerate_representatives(n, kind)?)?, 0))
        }
        Command::Classify { params, .. } => {
            let p = read_params(params)?;
            let doc = json!({
                "descriptor": to_value(&classify(&p)?)?,
                "fingerprint": to_value(&fingerprint(&p)?)?,
            });
            Ok((doc, 0))
        }
        Command::Calibrate {
            family: f,
            samples,
            seed,
            ..
        } => {
            let (kind, n) = family(f)?;
            if *samples == 0 {
                return Err(Failure::usage("--samples must be positive"));
            }
            Ok((
                to_value(&calibrate_exponents(kind, n, *samples, *seed)?)?,
                0,
            ))
        }
    }
}

fn out_path(cmd: &Command) -> Option<&Path> {
    match cmd {
        Command::FamilyBuild { output, .. }
        | Command::Verify { output, .. }
        | Command::Iso { output, .. }
        | Command::Enumerate { output, .. }
        | Command::Classify { output, .. }
        | Command::Calibrate { output, .. } => output.out.as_deref(),
    }
}

fn fail(f: Failure) -> ExitCode {
    let doc = json!({"error": {"kind": f.kind, "message": f.message}});
    eprintln!("{doc}");
    ExitCode::from(f.code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail(Failure::usage(e.to_string().trim_end())),
    };
    std::panic::set_hook(Box::new(|_| {}));
    let result = std::panic::catch_unwind(|| run(&cli.command)).unwrap_or_else(|_| {
        Err(Failure {
            code: 2,
            kind: "internal",
            message: "unexpected internal failure".into(),
        })
    });
    match result {
        Ok((doc, code)) => {
            let text = serde_json::to_string_pretty(&doc).unwrap_or_else(|_| "null".into());
            if let Some(path) = out_path(&cli.command) {
                if let Err(e) = fs::write(path, format!("{text}\n")) {
                    return fail(Failure {
                        code: 2,
                        kind: "io",
                        message: format!("{}: {e}", path.display()),
                    });
                }
            }
            println!("{text}");
            ExitCode::from(code)
        }
        Err(f) => fail(f),
    }
}
