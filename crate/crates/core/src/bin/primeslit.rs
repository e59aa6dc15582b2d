//! `primeslit`: reproduce the interference curves, sieve, factor, and check
//! the zeta identity from the command line. Output is CSV or plain text.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 invalid input.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use primeslit::csvfmt::g17;
use primeslit::geometry::write_overlaps_csv;
use primeslit::series::factorize_series;
use primeslit::sieve::{sieve_to_traced, write_trace_csv};
use primeslit::{
    build_arrangement, coherent_intensity, eratosthenes, factorize, incoherent_intensity,
    intensity::grid, locate_zeros_float, overlaps, profile, sieve_to, zeta_identity_check,
    EvalConfig, OmegaPartialSum, Placement, ZetaCheckReport,
};

#[derive(Parser, Debug)]
#[command(name = "primeslit", version, about = "Prime factorization through multi-slit interference")]
struct Cli {
    #[command(flatten)]
    tolerances: Tolerances,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Tolerances {
    /// Half-width around kernel singularities where the phasor sum is used
    #[arg(long, global = true, default_value_t = EvalConfig::DEFAULT_SINGULARITY_WINDOW)]
    singularity_window: f64,
    /// Values below this count as zero
    #[arg(long, global = true, default_value_t = EvalConfig::DEFAULT_ZERO_THRESHOLD)]
    zero_threshold: f64,
    /// Distance within which a real x is taken to be an integer
    #[arg(long, global = true, default_value_t = EvalConfig::DEFAULT_INTEGER_SNAP)]
    integer_snap: f64,
}

#[derive(Args, Debug)]
struct Range {
    #[arg(long, allow_negative_numbers = true)]
    from: f64,
    #[arg(long, allow_negative_numbers = true)]
    to: f64,
    #[arg(long, default_value_t = 0.001)]
    step: f64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Intensity of one set of p slits on a grid (CSV x,intensity)
    Profile {
        #[arg(long)]
        p: u64,
        #[command(flatten)]
        range: Range,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Partial sum over the first m primes on a grid (CSV x,omega_m)
    OmegaM {
        /// Gap-free seed primes, e.g. 2,3,5
        #[arg(long, value_delimiter = ',', conflicts_with = "m", required_unless_present = "m")]
        primes: Vec<u64>,
        /// Use the first m primes
        #[arg(long)]
        m: Option<usize>,
        #[command(flatten)]
        range: Range,
        /// Print the integer zeros (one per line) instead of the curve; the
        /// curve still goes to --out when given
        #[arg(long)]
        zeros: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Factorization, omega and Omega of n
    Factor {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = FactorMode::Series)]
        mode: FactorMode,
        /// Compute with both paths and report whether they agree
        #[arg(long)]
        both: bool,
    },
    /// Primes up to n by locating zeros of the partial sum
    Sieve {
        #[arg(long)]
        n: u64,
        #[arg(long, value_delimiter = ',', default_value = "2")]
        seed: Vec<u64>,
        /// Cross-check against the sieve of Eratosthenes
        #[arg(long)]
        verify: bool,
        /// Emit CSV n,omega_m_value for every scanned integer instead of the primes
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Convergence of sum 2^omega(n)/n^s towards zeta(s)^2/zeta(2s)
    Zeta {
        #[arg(long)]
        s: f64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Slit arrangement dump and overlap report, or a coherent/incoherent comparison
    Geometry {
        #[arg(long, value_delimiter = ',', required = true)]
        primes: Vec<u64>,
        #[arg(long, default_value_t = 1.0)]
        d: f64,
        #[arg(long, value_enum, default_value_t = PlacementArg::Centered)]
        placement: PlacementArg,
        /// Emit CSV x,incoherent,coherent over --from/--to/--step
        #[arg(long, requires_all = ["from", "to"])]
        compare: bool,
        #[arg(long, allow_negative_numbers = true)]
        from: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        to: Option<f64>,
        #[arg(long, default_value_t = 0.01)]
        step: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FactorMode {
    Series,
    Oracle,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum PlacementArg {
    Centered,
    Left,
}

impl From<PlacementArg> for Placement {
    fn from(p: PlacementArg) -> Self {
        match p {
            PlacementArg::Centered => Placement::Centered,
            PlacementArg::Left => Placement::LeftAnchored,
        }
    }
}

enum Failure {
    /// Downstream reader went away (e.g. piped into `head`).
    Closed,
    Invalid(String),
    Mismatch(String),
}

impl From<primeslit::Error> for Failure {
    fn from(e: primeslit::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            return Failure::Closed;
        }
        Failure::Invalid(format!("i/o error: {e}"))
    }
}

type CmdResult = Result<(), Failure>;

fn open_out(path: Option<&PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) | Err(Failure::Closed) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(msg)) => {
            eprintln!("primeslit: verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("primeslit: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> CmdResult {
    let t = &cli.tolerances;
    let cfg = EvalConfig::new(t.singularity_window, t.zero_threshold, t.integer_snap)?;
    match cli.command {
        Command::Profile { p, range, out } => {
            let prof = profile(p, range.from, range.to, range.step, &cfg)?;
            let mut w = open_out(out.as_ref())?;
            prof.write_csv(&mut w)?;
            w.flush()?;
        }
        Command::OmegaM {
            primes,
            m,
            range,
            zeros,
            out,
        } => {
            let sum = match m {
                Some(m) => OmegaPartialSum::first(m, cfg)?,
                None => OmegaPartialSum::new(primes, cfg)?,
            };
            if zeros {
                if out.is_some() {
                    let mut w = open_out(out.as_ref())?;
                    sum.profile(range.from, range.to, range.step)?.write_csv(&mut w)?;
                    w.flush()?;
                }
                let found = locate_zeros_float(&sum, range.from, range.to, range.step)?;
                let mut w = open_out(None)?;
                for z in found {
                    writeln!(w, "{}", g17(z))?;
                }
                w.flush()?;
            } else {
                let prof = sum.profile(range.from, range.to, range.step)?;
                let mut w = open_out(out.as_ref())?;
                prof.write_csv(&mut w)?;
                w.flush()?;
            }
        }
        Command::Factor { n, mode, both } => factor(n, mode, both)?,
        Command::Sieve {
            n,
            seed,
            verify,
            trace,
            out,
        } => {
            let (primes, rows) = if trace {
                sieve_to_traced(n, seed)?
            } else {
                (sieve_to(n, seed)?, Vec::new())
            };
            let mut w = open_out(out.as_ref())?;
            if trace {
                write_trace_csv(&rows, &mut w)?;
            } else {
                for p in &primes {
                    writeln!(w, "{p}")?;
                }
            }
            w.flush()?;
            if verify {
                let reference = eratosthenes(n)?;
                if primes != reference.primes() {
                    return Err(Failure::Mismatch(format!(
                        "interference sieve found {} primes, Eratosthenes {}",
                        primes.len(),
                        reference.len()
                    )));
                }
            }
        }
        Command::Zeta { s, n, out } => {
            let mut checkpoints: Vec<u64> = std::iter::successors(Some(1u64), |k| k.checked_mul(10))
                .take_while(|&k| k < n)
                .collect();
            checkpoints.push(n);
            let reports = checkpoints
                .into_iter()
                .map(|k| zeta_identity_check(s, k))
                .collect::<Result<Vec<_>, _>>()?;
            let mut w = open_out(out.as_ref())?;
            writeln!(w, "{}", ZetaCheckReport::CSV_HEADER)?;
            for r in reports {
                writeln!(w, "{}", r.csv_row())?;
            }
            w.flush()?;
        }
        Command::Geometry {
            primes,
            d,
            placement,
            compare,
            from,
            to,
            step,
            out,
        } => {
            let arr = build_arrangement(d, &primes, placement.into())?;
            let mut w = open_out(out.as_ref())?;
            if compare {
                let (from, to) = (from.expect("required by clap"), to.expect("required by clap"));
                writeln!(w, "x,incoherent,coherent")?;
                for x in grid(from, to, step)? {
                    let inc = incoherent_intensity(&arr, x, &cfg)?;
                    let coh = coherent_intensity(&arr, x)?;
                    writeln!(w, "{},{},{}", g17(x), g17(inc), g17(coh))?;
                }
            } else {
                arr.write_csv(&mut w)?;
                writeln!(w)?;
                write_overlaps_csv(&arr, &overlaps(&arr), &mut w)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn factor(n: u64, mode: FactorMode, both: bool) -> CmdResult {
    let line = |f: &primeslit::Factorization| format!("{f}, omega={}, Omega={}", f.omega(), f.big_omega());
    let mut w = open_out(None)?;
    if both {
        let series = factorize_series(n)?;
        let oracle = factorize(n)?;
        if series == oracle {
            writeln!(w, "{}, match=true", line(&series))?;
            w.flush()?;
        } else {
            writeln!(w, "series: {}", line(&series))?;
            writeln!(w, "oracle: {}", line(&oracle))?;
            writeln!(w, "match=false")?;
            w.flush()?;
            return Err(Failure::Mismatch(format!("factorizations of {n} differ")));
        }
    } else {
        let f = match mode {
            FactorMode::Series => factorize_series(n)?,
            FactorMode::Oracle => factorize(n)?,
        };
        writeln!(w, "{}", line(&f))?;
        w.flush()?;
    }
    Ok(())
}
