use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lambertw::applications::{
    gh_full, gh_full_inverse, gh_reduced, gh_reduced_inverse, moyal, moyal_inverse,
    GaisserHillasParams, MoyalSide,
};
use lambertw::iterations::Method;
use lambertw::oracle::{sweep, Evaluator, Grid, GridKind};
use lambertw::order::{convergence_order, DEFAULT_PERTURBATIONS};
use lambertw::report::{format_value, write_csv};
use lambertw::{lambert_w, Branch};

const EXIT_USAGE: u8 = 1;
const EXIT_DOMAIN: u8 = 2;

/// Real branches of the Lambert W function, with accuracy tooling.
#[derive(Debug, Parser)]
#[command(name = "lambertw", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate W on one branch.
    #[command(allow_negative_numbers = true)]
    Eval {
        /// Branch: 0 or -1.
        #[arg(long, short, default_value = "0")]
        branch: Branch,
        /// Print `nan` instead of failing on arguments outside the domain.
        #[arg(long)]
        nan_on_domain_error: bool,
        x: f64,
    },
    /// Tabulate an evaluator against the reference as CSV.
    #[command(allow_negative_numbers = true)]
    Sweep {
        #[arg(long, short, default_value = "0")]
        branch: Branch,
        /// One of bp9, bp5, q01, q02, qm1, asym5, logrec9, exprec, piecewise,
        /// piecewise+fritsch1, piecewise+halley1, piecewise+halley2, full.
        #[arg(long, short, default_value = "full")]
        evaluator: Evaluator,
        #[arg(long, default_value = "linear")]
        grid: GridKind,
        #[arg(long)]
        lo: f64,
        #[arg(long)]
        hi: f64,
        #[arg(long, short, default_value_t = 1000)]
        n: usize,
        /// Write to this file instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Fit the one-step convergence order of an iteration around W0(x).
    #[command(allow_negative_numbers = true)]
    Order { method: Method, x: f64 },
    /// Evaluate the Gaisser-Hillas profile.
    #[command(allow_negative_numbers = true)]
    Gh {
        /// Depth (reduced unless X0 and lambda are given).
        #[arg(long)]
        x: f64,
        #[command(flatten)]
        shape: GhShape,
    },
    /// Both depths where the Gaisser-Hillas profile equals `a`.
    #[command(allow_negative_numbers = true)]
    GhInverse {
        /// Profile level in (0, 1].
        #[arg(long)]
        a: f64,
        #[command(flatten)]
        shape: GhShape,
        /// Also print the profile re-evaluated at both roots.
        #[arg(long)]
        verify: bool,
    },
    /// Evaluate the Moyal function.
    #[command(allow_negative_numbers = true)]
    Moyal {
        #[arg(long)]
        x: f64,
    },
    /// Both preimages of `y` under the Moyal function, left first.
    #[command(allow_negative_numbers = true)]
    MoyalInverse {
        /// Level in (0, e^-1/2].
        #[arg(long)]
        y: f64,
        /// Also print the Moyal function re-evaluated at both preimages.
        #[arg(long)]
        verify: bool,
    },
}

#[derive(Debug, Args)]
struct GhShape {
    /// Depth of the maximum.
    #[arg(long)]
    xmax: f64,
    /// Depth offset; switches to the three-parameter form together with --lambda.
    #[arg(long, requires = "lambda")]
    x0: Option<f64>,
    /// Interaction length.
    #[arg(long, requires = "x0")]
    lambda: Option<f64>,
}

impl GhShape {
    fn params(&self) -> lambertw::Result<Option<GaisserHillasParams>> {
        match (self.x0, self.lambda) {
            (Some(x0), Some(lambda)) => GaisserHillasParams::new(x0, self.xmax, lambda).map(Some),
            _ => Ok(None),
        }
    }

    fn forward(&self, x: f64) -> lambertw::Result<f64> {
        match self.params()? {
            Some(p) => gh_full(x, &p),
            None => gh_reduced(x, self.xmax),
        }
    }

    fn inverse(&self, a: f64) -> lambertw::Result<(f64, f64)> {
        match self.params()? {
            Some(p) => gh_full_inverse(a, &p),
            None => gh_reduced_inverse(a, self.xmax),
        }
    }
}

#[derive(Debug)]
enum Failure {
    Lib(lambertw::Error),
    Io(io::Error),
}

impl From<lambertw::Error> for Failure {
    fn from(e: lambertw::Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn pair(a: f64, b: f64) -> String {
    format!("{} {}", format_value(a), format_value(b))
}

fn run(command: Command, out: &mut impl Write) -> Result<(), Failure> {
    match command {
        Command::Eval {
            branch,
            nan_on_domain_error,
            x,
        } => {
            let w = match lambert_w(branch, x) {
                Ok(r) => r.value,
                Err(e) if nan_on_domain_error && e.is_domain() => f64::NAN,
                Err(e) => return Err(e.into()),
            };
            writeln!(out, "{}", format_value(w))?;
        }
        Command::Sweep {
            branch,
            evaluator,
            grid,
            lo,
            hi,
            n,
            output,
        } => {
            let grid = Grid::new(grid, lo, hi, n)?;
            let samples = sweep(branch, evaluator, &grid)?;
            match output {
                Some(path) => {
                    let mut file = BufWriter::new(File::create(path)?);
                    write_csv(&mut file, &samples)?;
                    file.flush()?;
                }
                None => write_csv(out, &samples)?,
            }
        }
        Command::Order { method, x } => {
            let report = convergence_order(method, x, &DEFAULT_PERTURBATIONS)?;
            writeln!(out, "method {}", report.method)?;
            writeln!(out, "x {}", format_value(report.x))?;
            writeln!(out, "root {}", format_value(report.root))?;
            writeln!(out, "perturbation,error,used")?;
            for p in &report.points {
                writeln!(
                    out,
                    "{},{},{}",
                    format_value(p.perturbation),
                    format_value(p.error),
                    p.used
                )?;
            }
            writeln!(out, "exponent {:.4}", report.exponent)?;
            writeln!(out, "fixed-point ulps {}", report.fixed_point_ulps)?;
        }
        Command::Gh { x, shape } => writeln!(out, "{}", format_value(shape.forward(x)?))?,
        Command::GhInverse { a, shape, verify } => {
            let (left, right) = shape.inverse(a)?;
            writeln!(out, "{}", pair(left, right))?;
            if verify {
                writeln!(out, "{}", pair(shape.forward(left)?, shape.forward(right)?))?;
            }
        }
        Command::Moyal { x } => writeln!(out, "{}", format_value(moyal(x)))?,
        Command::MoyalInverse { y, verify } => {
            let left = moyal_inverse(y, MoyalSide::Minus)?;
            let right = moyal_inverse(y, MoyalSide::Plus)?;
            writeln!(out, "{}", pair(left, right))?;
            if verify {
                writeln!(out, "{}", pair(moyal(left), moyal(right)))?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();

    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };

    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_domain() {
                EXIT_DOMAIN
            } else {
                EXIT_USAGE
            })
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
