use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use nakayama_cli::commands;
use nakayama_cli::format::{LoadError, Loaded, PresentationFile};
use nakayama_cli::report::{digest, Outcome, Report};
use nakayama_core::nakayama::Direction;

#[derive(Parser)]
#[command(name = "nakayama", version, about = "Nakayama functors and Frobenius properties of finite-dimensional coalgebras")]
struct Cli {
    /// Leave out the timing block so reports are byte-stable.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirArg {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    L,
    R,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of a presentation file.
    Validate { file: PathBuf },
    /// Cosemisimple, quasi-Frobenius, co-Frobenius and symmetric flags.
    Classify {
        file: PathBuf,
        /// Dimension bound for the indecomposables used by the functor route.
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Apply a Nakayama functor to a named comodule.
    Nakayama {
        file: PathBuf,
        #[arg(long)]
        comodule: String,
        #[arg(long, value_enum)]
        direction: DirArg,
    },
    /// A nondegenerate balanced pairing and its Nakayama automorphism.
    Pairing { file: PathBuf },
    /// Cointegrals of a Hopf algebra or coquasi-bialgebra.
    Integrals {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "l")]
        side: SideArg,
    },
    /// Radford's S^4 isomorphism on indecomposables up to a dimension.
    Radford {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
    },
    /// Preantipode and cointegral report of a coquasi-bialgebra.
    Coquasi { file: PathBuf },
    /// Run the property checks over corpus instances.
    VerifySuite {
        #[arg(long)]
        family: Option<String>,
        /// Random-coalgebra seeds, as A..B.
        #[arg(long, default_value = "0..10")]
        seed_range: String,
    },
    /// Corpus utilities.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    /// Print the presentation file of a corpus spec such as `taft:n=3,q=2,p=7`.
    Emit { spec: String },
}

fn input_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(3)
}

fn load(path: &PathBuf) -> Result<(String, Result<Loaded, Outcome>), String> {
    let bytes = std::fs::read(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let text = String::from_utf8(bytes.clone()).map_err(|e| format!("{}: {e}", path.display()))?;
    let file = PresentationFile::parse(&text).map_err(|e| match e {
        LoadError::Input(m) => format!("{}: {m}", path.display()),
        LoadError::Core(e, _) => e.to_string(),
    })?;
    let loaded = match file.load() {
        Ok(l) => Ok(l),
        Err(LoadError::Input(m)) => return Err(format!("{}: {m}", path.display())),
        Err(LoadError::Core(e, detail)) => {
            let mut o = Outcome::from_error(e)?;
            if let (Some(w), Some(d)) = (o.witness.as_mut(), detail) {
                w["values"] = d;
            }
            Err(o)
        }
    };
    Ok((digest(&text.into_bytes()), loaded))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let start = Instant::now();
    let (name, digest_hex, outcome) = match cli.command {
        Command::Corpus { action: CorpusAction::Emit { spec } } => {
            return match commands::emit(&spec) {
                Ok(s) => {
                    print!("{s}");
                    ExitCode::SUCCESS
                }
                Err(m) => input_error(&m),
            };
        }
        Command::VerifySuite { family, seed_range } => {
            let specs = commands::seed_range(&seed_range)
                .and_then(|r| commands::suite_instances(family.as_deref(), r));
            let specs = match specs {
                Ok(s) => s,
                Err(m) => return input_error(&m),
            };
            let key = format!("verify-suite family={} seeds={seed_range}", family.as_deref().unwrap_or("all"));
            ("verify-suite", digest(key.as_bytes()), commands::verify_suite(&specs))
        }
        command => {
            let (name, file) = match &command {
                Command::Validate { file } => ("validate", file),
                Command::Classify { file, .. } => ("classify", file),
                Command::Nakayama { file, .. } => ("nakayama", file),
                Command::Pairing { file } => ("pairing", file),
                Command::Integrals { file, .. } => ("integrals", file),
                Command::Radford { file, .. } => ("radford", file),
                Command::Coquasi { file } => ("coquasi", file),
                _ => unreachable!(),
            };
            let (d, loaded) = match load(file) {
                Ok(x) => x,
                Err(m) => return input_error(&m),
            };
            let outcome = match loaded {
                Err(violation) => Ok(violation),
                Ok(l) => match &command {
                    Command::Validate { .. } => commands::validate(&l),
                    Command::Classify { bound, .. } => commands::classify_cmd(&l, *bound),
                    Command::Nakayama { comodule, direction, .. } => {
                        let dir = match direction {
                            DirArg::Left => Direction::Left,
                            DirArg::Right => Direction::Right,
                        };
                        commands::nakayama(&l, comodule, dir)
                    }
                    Command::Pairing { .. } => commands::pairing(&l),
                    Command::Integrals { side, .. } => commands::integrals(&l, matches!(side, SideArg::L)),
                    Command::Radford { max_dim, .. } => commands::radford(&l, *max_dim),
                    Command::Coquasi { .. } => commands::coquasi(&l),
                    _ => unreachable!(),
                },
            };
            (name, d, outcome)
        }
    };
    let outcome = match outcome {
        Ok(o) => o,
        Err(m) => return input_error(&m),
    };
    let report = Report {
        command: name.into(),
        digest: digest_hex,
        elapsed: (!cli.no_timing).then(|| start.elapsed()),
        outcome,
    };
    print!("{}", report.to_json());
    if report.outcome.status != nakayama_cli::report::Status::Ok {
        eprintln!("status: {}", report.outcome.status.name());
    }
    ExitCode::from(report.outcome.status.exit_code())
}
