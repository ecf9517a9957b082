mod commands;
mod text;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "apolar",
    version,
    about = "Invariants, apolarity and sphere geometry of binary quantics"
)]
pub struct Cli {
    /// Read inputs as exact Gaussian rationals where the command supports it.
    #[arg(long, global = true)]
    pub exact: bool,
    /// Relative tolerance for every zero test.
    #[arg(long, global = true, default_value_t = apolar::DEFAULT_TOL, value_parser = positive)]
    pub tol: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The quadratic invariant 𝓘 of an even-degree quantic.
    Invariant {
        file: PathBuf,
        /// Also print the degree-four invariant 𝓙 (sextics only).
        #[arg(long)]
        catalectant: bool,
    },
    /// The k-th transvectant of two quantics.
    Transvect {
        p: PathBuf,
        q: PathBuf,
        #[arg(short, long)]
        k: usize,
    },
    /// Roots of a quantic with multiplicities.
    Roots { file: PathBuf },
    /// The quantic with the given roots.
    FromRoots { file: PathBuf },
    /// X-points of a sextic for one split or all six.
    Xpoints {
        file: PathBuf,
        #[arg(long)]
        split: Option<usize>,
    },
    /// Check that 𝓘 = 0 exactly when every split has tetrahedral X-points.
    /// Accepts one sextic or an array of them; exits 1 if any check fails.
    VerifyTheorem1 { file: PathBuf },
    /// Fifth points making y·Π(x − xᵢy)·(x − x₅y) self-apolar.
    FifthPoint { file: PathBuf },
    /// Whether five points are maximally separated, with a normalising map.
    MaxSeparated { file: PathBuf },
    /// Random self-apolar sextics from the two-parameter family.
    SampleSelfapolar {
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Radius of the disc the parameters are drawn from.
        #[arg(long, default_value_t = 2.0, value_parser = positive)]
        radius: f64,
    },
    /// Cross-ratio class of the roots of a quartic.
    ClassifyQuartic { file: PathBuf },
    /// The three-form compatibility scalar of a sextic next to 𝓘.
    G2Check { file: PathBuf },
    /// Two-panel SVG of points and their projection from a pole.
    Plot {
        file: PathBuf,
        /// `inf`, `[re, im]` or `{"alpha": …, "beta": …}`.
        #[arg(long, allow_hyphen_values = true)]
        pole: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        Ok(_) => Err("must be a positive number".into()),
        Err(e) => Err(e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(output) => {
            print!("{}", output.text);
            ExitCode::from(output.status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.status())
        }
    }
}
