//! `dmf`: compute t-expansions of Drinfeld modular forms and verify the
//! closed formulas for them.

use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use drinfeld_core::expansions::bounds::{bound, Params, TheoremId};
use drinfeld_core::expansions::verify::{verify, verify_all, VerificationReport, DEFAULT_BUDGET};
use drinfeld_core::render::{series_json, series_text};
use drinfeld_core::{Error, Expansions, RingSpec, TruncatedSeries};
use serde_json::Value;

/// Largest precision accepted by `compute` and by single `verify` runs.
const MAX_PREC: u64 = 4096;

#[derive(Parser)]
#[command(name = "dmf", version, about = "Exact t-expansions of Drinfeld modular forms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the t-expansion of a form.
    Compute {
        form: Form,
        #[command(flatten)]
        opts: Opts,
    },
    /// Check a closed formula or bound, or the whole suite with `all`.
    Verify {
        theorem: String,
        #[command(flatten)]
        opts: Opts,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Form {
    Eisenstein,
    G,
    H,
    Theta,
    Sigma,
    Pi,
    Tate,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Opts {
    #[arg(long)]
    q: u32,
    #[arg(long)]
    r: u32,
    #[arg(long, default_value_t = 1)]
    k: u32,
    #[arg(long, default_value_t = 1)]
    j: u32,
    #[arg(long, default_value_t = 1)]
    d: u32,
    /// Defaults to the bound of the matching statement.
    #[arg(long)]
    prec: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<String>,
}

impl Opts {
    fn params(&self) -> Params {
        Params { k: self.k, j: self.j, d: self.d }
    }
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn emit(opts: &Opts, body: &str) -> Result<(), Failure> {
    match &opts.out {
        Some(path) => fs::write(path, body)?,
        None => io::stdout().lock().write_all(body.as_bytes())?,
    }
    Ok(())
}

fn theorem_of(form: Form, d: u32) -> TheoremId {
    match form {
        Form::Eisenstein => TheoremId::Eisenstein,
        Form::G => TheoremId::G,
        Form::H => TheoremId::H,
        Form::Theta => TheoremId::Theta,
        Form::Sigma => TheoremId::Sigma,
        Form::Pi if d == 1 => TheoremId::Pi1,
        Form::Pi => TheoremId::Pi2,
        Form::Tate => TheoremId::Tate,
    }
}

fn default_prec(form: Form, q: u64, r: u32, p: Params) -> Result<u64, Failure> {
    let n = bound(theorem_of(form, p.d), q, r, p)?;
    Ok(match form {
        Form::Pi if p.d >= 3 => (q - 1) * (q.pow((r - 1) * p.d) - 1) + 1,
        Form::Pi => n + 1,
        _ => n,
    })
}

fn compute(form: Form, opts: &Opts) -> Result<(), Failure> {
    let ring = RingSpec::for_q(opts.q, opts.r)?;
    let q = opts.q as u64;
    let p = opts.params();
    let prec = match opts.prec {
        Some(m) => {
            bound(theorem_of(form, p.d), q, opts.r, p)?;
            m
        }
        None => default_prec(form, q, opts.r, p)?,
    };
    if prec > MAX_PREC {
        return Err(Failure::Usage(format!("precision {prec} exceeds the budget {MAX_PREC}")));
    }
    let ex = Expansions::new(&ring);
    let (label, series): (String, TruncatedSeries<RingSpec>) = match form {
        Form::Eisenstein => {
            let e = ex.eisenstein_a_expansion(p.k, prec)?;
            (e.label, e.series)
        }
        Form::G => {
            let g = ex.g_series(p.k, prec)?;
            (g.label, g.series)
        }
        Form::H => ("H".into(), ex.h_normalized(prec)?),
        Form::Theta => (format!("Θ({},{})", p.j, p.d), ex.theta(p.j, p.d, prec)?),
        Form::Sigma => (format!("Σ({},{})", p.j, p.d), ex.sigma(p.j, p.d, prec)?),
        Form::Pi => (format!("Π({})", p.d), ex.pi(p.d, prec)?),
        Form::Tate => (format!("E_{}(L)", q.pow(p.k) - 1), ex.tate_eisenstein(p.k, prec)?),
    };
    let body = match opts.format {
        Format::Text => series_text(&ring, &label, &series) + "\n",
        Format::Json => series_json(&series).to_string() + "\n",
    };
    emit(opts, &body)
}

fn run_verify(theorem: &str, opts: &Opts) -> Result<(), Failure> {
    let q = opts.q as u64;
    RingSpec::for_q(opts.q, opts.r)?;
    let reports: Vec<VerificationReport> = if theorem == "all" {
        let budget = opts.prec.unwrap_or(DEFAULT_BUDGET);
        verify_all(q, opts.r, budget)?
    } else {
        let t: TheoremId = theorem.parse()?;
        let n = bound(t, q, opts.r, opts.params())?;
        if n > MAX_PREC {
            return Err(Failure::Usage(format!("bound {n} exceeds the budget {MAX_PREC}")));
        }
        vec![verify(t, q, opts.r, opts.params())?]
    };
    let body = match opts.format {
        Format::Text => reports.iter().map(|r| r.to_text() + "\n").collect::<String>(),
        Format::Json => {
            let items: Vec<Value> = reports.iter().map(|r| r.to_json(false)).collect();
            let v = if theorem == "all" { Value::Array(items) } else { items.into_iter().next().unwrap() };
            v.to_string() + "\n"
        }
    };
    for r in &reports {
        eprintln!("{} {} ms", r.theorem, r.ms);
    }
    emit(opts, &body)?;
    if reports.iter().all(|r| r.pass) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = match &cli.command {
        Command::Compute { opts, .. } | Command::Verify { opts, .. } => opts,
    };
    if opts.threads == 0 {
        eprintln!("error: --threads must be at least 1");
        return ExitCode::from(2);
    }
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(opts.threads).build_global() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let result = match &cli.command {
        Command::Compute { form, opts } => compute(*form, opts),
        Command::Verify { theorem, opts } => run_verify(theorem, opts),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
