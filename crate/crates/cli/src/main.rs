//! `rayleigh` command-line front end.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use rayleigh::numeric::{
    bessel_zeros, numeric_sigma, verify_ratio_formula, verify_residue_identity,
};
use rayleigh::rational::to_fraction_string;
use rayleigh::{
    eval_sigma_exact, parse_rational, zeta_even, Error, FactoredRationalFn, SigmaTable,
};
use serde::{Deserialize, Serialize};

const CACHE_FORMAT_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "rayleigh",
    version,
    about = "Closed forms of Rayleigh functions σ(p,ν)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Derive the closed form of σ(p,ν).
    Derive {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        p: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        cache: CacheArg,
    },
    /// Evaluate σ(p,ν) at a given ν.
    Eval {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        p: u32,
        /// "a/b", an integer or a decimal such as 2.7 or -1e-3.
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        /// Print the exact reduced fraction instead of a float.
        #[arg(long)]
        exact: bool,
        #[command(flatten)]
        cache: CacheArg,
    },
    /// Check an identity numerically.
    Verify {
        #[arg(value_enum)]
        kind: VerifyKind,
        #[arg(long)]
        p: f64,
        #[arg(long, allow_hyphen_values = true)]
        nu: f64,
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(2..))]
        terms: u64,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        /// Zero index for `ratio`.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
    },
    /// Exact ζ(2p) as a rational multiple of π^{2p}.
    Zeta {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        p: u32,
    },
    /// List the first positive zeros of J_ν.
    Zeros {
        #[arg(long, allow_hyphen_values = true)]
        nu: f64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        /// Digits after the decimal point; shortest round-trip form if omitted.
        #[arg(long, value_parser = clap::value_parser!(u8).range(..=17))]
        digits: Option<u8>,
    },
    /// Closed forms for p = 1..pmax.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        pmax: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        cache: CacheArg,
    },
}

#[derive(Args, Debug)]
struct CacheArg {
    /// JSON file memoizing derived closed forms.
    #[arg(long = "cache", value_name = "PATH")]
    path: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VerifyKind {
    Residues,
    Ratio,
    Sigma,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    format_version: u32,
    entries: SigmaTable,
}

#[derive(Serialize)]
struct Entry<'a> {
    p: u32,
    sigma: &'a FactoredRationalFn,
}

/// Failure carrying its process exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, message) = match &e {
            Error::Pole(nu) => (3, format!("pole at nu={nu}")),
            Error::Parse(_) | Error::Domain(_) | Error::InvalidOrder(_) => (2, e.to_string()),
            _ => (4, e.to_string()),
        };
        Failure { code, message }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = std::io::stdout().lock();
    match run(cli.command, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            let _ = out.flush();
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Result<u8, Failure> {
    match command {
        Command::Derive { p, format, cache } => {
            let mut table = load_table(cache.path.as_deref());
            let f = table.sigma(p)?.clone();
            save_table(cache.path.as_deref(), &table)?;
            let line = match format {
                Format::Text => f.to_text(),
                Format::Latex => f.to_latex(),
                Format::Json => to_json(&Entry { p, sigma: &f })?,
            };
            emit(out, &line)?;
            Ok(0)
        }
        Command::Eval {
            p,
            nu,
            exact,
            cache,
        } => {
            let nu = parse_rational(&nu)?;
            let mut table = load_table(cache.path.as_deref());
            let value = eval_sigma_exact(table.sigma(p)?, &nu)?;
            save_table(cache.path.as_deref(), &table)?;
            let line = if exact {
                to_fraction_string(&value)
            } else {
                format!("{}", value.to_f64().unwrap_or(f64::NAN))
            };
            emit(out, &line)?;
            Ok(0)
        }
        Command::Verify {
            kind,
            p,
            nu,
            terms,
            tol,
            k,
        } => verify(out, kind, p, nu, terms as usize, tol, k as usize),
        Command::Zeta { p } => {
            let z = zeta_even(p, &mut SigmaTable::new())?;
            emit(out, &z.to_string())?;
            Ok(0)
        }
        Command::Zeros { nu, count, digits } => {
            let zeros = bessel_zeros(nu, count as usize)?;
            for x in &zeros.zeros {
                let line = match digits {
                    Some(d) => format!("{x:.*}", d as usize),
                    None => format!("{x}"),
                };
                emit(out, &line)?;
            }
            Ok(0)
        }
        Command::Table {
            pmax,
            format,
            cache,
        } => {
            let mut table = load_table(cache.path.as_deref());
            table.sigma(pmax)?;
            save_table(cache.path.as_deref(), &table)?;
            let rows: Vec<_> = table.iter().take_while(|(p, _)| *p <= pmax).collect();
            match format {
                Format::Json => {
                    let entries: Vec<_> =
                        rows.iter().map(|&(p, sigma)| Entry { p, sigma }).collect();
                    emit(out, &to_json(&entries)?)?;
                }
                _ => {
                    for (p, f) in rows {
                        emit(out, &render_row(p, f, format))?;
                    }
                }
            }
            Ok(0)
        }
    }
}

fn verify(
    out: &mut impl Write,
    kind: VerifyKind,
    p: f64,
    nu: f64,
    terms: usize,
    tol: f64,
    k: usize,
) -> Result<u8, Failure> {
    let integer_p = || -> Result<u32, Failure> {
        if p >= 1.0 && p.fract() == 0.0 && p <= u32::MAX as f64 {
            Ok(p as u32)
        } else {
            Err(Failure::usage(
                format!("{kind:?} needs an integer p ≥ 1, got {p}").to_lowercase(),
            ))
        }
    };
    let pass = match kind {
        VerifyKind::Sigma => {
            let p = integer_p()?;
            let exact_nu = parse_rational(&format!("{nu:e}"))?;
            let mut table = SigmaTable::new();
            let lhs = eval_sigma_exact(table.sigma(p)?, &exact_nu)?
                .to_f64()
                .unwrap_or(f64::NAN);
            let zeros = bessel_zeros(nu, terms)?;
            let sum = numeric_sigma(nu, p as f64, &zeros)?;
            let residual = ((sum.value - lhs) / lhs).abs();
            emit(out, &format!("closed form = {lhs:e}"))?;
            emit(out, &format!("zero sum = {:e}", sum.value))?;
            emit(out, &format!("relative residual = {residual:e}"))?;
            emit(out, &format!("tail bound = {:e}", sum.tail_bound))?;
            residual <= tol
        }
        VerifyKind::Ratio => {
            let p = integer_p()?;
            let residual = verify_ratio_formula(nu, p, k)?;
            emit(out, &format!("zero index = {k}"))?;
            emit(out, &format!("residual = {residual:e}"))?;
            residual <= tol
        }
        VerifyKind::Residues => {
            let r = verify_residue_identity(nu, p, terms)?;
            emit(out, &format!("lhs = {:e}", r.lhs))?;
            emit(out, &format!("rhs = {:e}", r.partial_rhs))?;
            emit(out, &format!("residual = {:e}", r.residual))?;
            emit(out, &format!("half residual = {:e}", r.half_residual))?;
            emit(out, &format!("tail bound = {:e}", r.tail_scale))?;
            r.residual <= tol || (r.converging && r.residual <= r.tail_scale)
        }
    };
    emit(out, if pass { "status: pass" } else { "status: fail" })?;
    Ok(if pass { 0 } else { 1 })
}

/// One labelled table row.
fn render_row(p: u32, f: &FactoredRationalFn, format: Format) -> String {
    match format {
        Format::Latex => format!("\\sigma({p},\\nu) = {}", f.to_latex()),
        _ => format!("sigma({p}, v) = {}", f.to_text()),
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string(value).map_err(|e| Failure {
        code: 4,
        message: e.to_string(),
    })
}

fn emit(out: &mut impl Write, line: &str) -> Result<(), Failure> {
    writeln!(out, "{line}").map_err(|e| Failure {
        code: 4,
        message: format!("write failed: {e}"),
    })
}

/// Reads a cache file, keeping it only if it matches a fresh derivation byte for byte.
fn load_table(path: Option<&Path>) -> SigmaTable {
    let Some(path) = path else {
        return SigmaTable::new();
    };
    let Ok(text) = fs::read_to_string(path) else {
        return SigmaTable::new();
    };
    let cached = match serde_json::from_str::<CacheFile>(&text) {
        Ok(c) if c.format_version == CACHE_FORMAT_VERSION => c.entries,
        Ok(c) => {
            eprintln!(
                "warning: ignoring cache {}: format_version {}",
                path.display(),
                c.format_version
            );
            return SigmaTable::new();
        }
        Err(e) => {
            eprintln!("warning: ignoring unreadable cache {}: {e}", path.display());
            return SigmaTable::new();
        }
    };
    let mut fresh = SigmaTable::new();
    if cached.p_max() > 0 && fresh.sigma(cached.p_max()).is_err() {
        return SigmaTable::new();
    }
    match (
        serde_json::to_string(&cached),
        serde_json::to_string(&fresh),
    ) {
        (Ok(a), Ok(b)) if a == b => cached,
        _ => {
            eprintln!(
                "warning: discarding cache {}: entries differ from a fresh derivation",
                path.display()
            );
            fresh
        }
    }
}

fn save_table(path: Option<&Path>, table: &SigmaTable) -> Result<(), Failure> {
    let Some(path) = path else { return Ok(()) };
    let file = CacheFile {
        format_version: CACHE_FORMAT_VERSION,
        entries: table.clone(),
    };
    let json = serde_json::to_string_pretty(&file).map_err(|e| Failure {
        code: 4,
        message: e.to_string(),
    })?;
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, json + "\n")
        .and_then(|_| fs::rename(&tmp, path))
        .map_err(|e| Failure {
            code: 4,
            message: format!("cannot write cache {}: {e}", path.display()),
        })
}
