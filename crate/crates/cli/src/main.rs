use clap::{Parser, Subcommand, ValueEnum};
use nary_cli::commands::{parse_signs, ComplexKind, RepChoice};
use nary_cli::{cmd_check, cmd_cohomology, cmd_generate, cmd_poisson, GenerateSpec, InputError, PoissonCheck, RunReport, Suite};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "nary", version, about = "Exact checks for Lie, generalized Lie, Filippov and Leibniz algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run validation suites on an algebra file.
    Check {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
    /// Emit a catalog algebra or tensor.
    Generate {
        #[command(subcommand)]
        kind: GenerateKind,
        /// Output file; stdout when absent.
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Cohomology dimensions by exact rank.
    Cohomology {
        path: PathBuf,
        #[arg(long, value_enum)]
        complex: Option<ComplexArg>,
        /// `ad`, `trivial`, `trivial:<dim>` or a representation file.
        #[arg(long)]
        rep: Option<String>,
        #[arg(long, default_value_t = 2)]
        pmax: usize,
    },
    /// Generalized Poisson and Nambu–Poisson conditions for a tensor file.
    Poisson {
        path: PathBuf,
        #[arg(long, value_enum)]
        check: PoissonArg,
    },
}

#[derive(Subcommand)]
enum GenerateKind {
    /// su(n) in the Gell-Mann basis.
    Su {
        #[arg(long)]
        n: usize,
    },
    /// The simple n-ary Filippov algebra on n+1 generators.
    SimpleFa {
        #[arg(long)]
        n: usize,
        /// Metric signs, one `+` or `-` per generator.
        #[arg(long, allow_hyphen_values = true)]
        signs: Option<String>,
    },
    /// The (2m−2)-ary generalized Lie algebra from the order-m invariant of su(n).
    GlaFromSu {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// The three-dimensional Heisenberg Lie algebra.
    Heisenberg,
    /// The Nambu–Heisenberg–Weyl 3-algebra.
    Nhw {
        #[arg(long, default_value_t = 1)]
        copies: usize,
    },
    /// The Filippov algebra read off from a gamma-matrix realization.
    Clifford {
        #[arg(long)]
        n: usize,
    },
    /// The abelian algebra of the given arity.
    Abelian {
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 2)]
        arity: usize,
    },
    /// The linear multivector of an algebra file.
    LinearTensor { input: PathBuf },
    /// Sum of constant n-vectors on disjoint coordinate blocks.
    Nambu {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        blocks: usize,
    },
    /// Negate one structure constant of an algebra file.
    Flip {
        input: PathBuf,
        /// 1-based position among the file's entries.
        #[arg(long, default_value_t = 1)]
        entry: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Identity,
    Metric,
    Cohomology,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum ComplexArg {
    Trivial,
    Module,
    Deformation,
}

#[derive(Clone, Copy, ValueEnum)]
enum PoissonArg {
    Gps,
    Np,
    SnbSelf,
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|e| InputError::plain(format!("{}: {e}", path.display())))
}

fn with_path(path: &Path, e: InputError) -> InputError {
    InputError { message: format!("{}: {}", path.display(), e.message), ..e }
}

fn report(r: &RunReport) -> ExitCode {
    print!("{}", r.json_lines());
    eprint!("{}", r.human());
    ExitCode::from(r.exit_code() as u8)
}

fn run(cli: Cli) -> Result<ExitCode, InputError> {
    match cli.command {
        Command::Check { path, suite } => {
            let suite = match suite {
                SuiteArg::Identity => Suite::Identity,
                SuiteArg::Metric => Suite::Metric,
                SuiteArg::Cohomology => Suite::Cohomology,
                SuiteArg::All => Suite::All,
            };
            let r = cmd_check(&read(&path)?, suite).map_err(|e| with_path(&path, e))?;
            Ok(report(&r))
        }
        Command::Generate { kind, output } => {
            let spec = match kind {
                GenerateKind::Su { n } => GenerateSpec::Su { n },
                GenerateKind::SimpleFa { n, signs } => {
                    let signs = match signs {
                        Some(s) => parse_signs(&s)?,
                        None => vec![1; n + 1],
                    };
                    GenerateSpec::SimpleFa { n, signs }
                }
                GenerateKind::GlaFromSu { n, m } => GenerateSpec::GlaFromSu { n, m },
                GenerateKind::Heisenberg => GenerateSpec::Heisenberg,
                GenerateKind::Nhw { copies } => GenerateSpec::Nhw { copies },
                GenerateKind::Clifford { n } => GenerateSpec::Clifford { n },
                GenerateKind::Abelian { dim, arity } => GenerateSpec::Abelian { arity, dim },
                GenerateKind::LinearTensor { input } => GenerateSpec::LinearTensor { algebra: read(&input)? },
                GenerateKind::Nambu { n, blocks } => GenerateSpec::Nambu { n, blocks },
                GenerateKind::Flip { input, entry } => GenerateSpec::Flip { algebra: read(&input)?, entry },
            };
            let text = cmd_generate(&spec)?;
            match output {
                None => print!("{text}"),
                Some(p) => std::fs::write(&p, text).map_err(|e| InputError::plain(format!("{}: {e}", p.display())))?,
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Cohomology { path, complex, rep, pmax } => {
            let complex = complex.map(|c| match c {
                ComplexArg::Trivial => ComplexKind::Trivial,
                ComplexArg::Module => ComplexKind::Module,
                ComplexArg::Deformation => ComplexKind::Deformation,
            });
            let rep = match rep.as_deref() {
                None => None,
                Some("ad") => Some(RepChoice::Adjoint),
                Some("trivial") => Some(RepChoice::Trivial(1)),
                Some(s) if s.starts_with("trivial:") => {
                    let k = s["trivial:".len()..]
                        .parse()
                        .map_err(|_| InputError::plain(format!("bad module dimension in `{s}`")))?;
                    Some(RepChoice::Trivial(k))
                }
                Some(path) => Some(RepChoice::File(read(Path::new(path))?)),
            };
            let lines = cmd_cohomology(&read(&path)?, complex, rep, pmax).map_err(|e| with_path(&path, e))?;
            for l in &lines {
                println!("{}", serde_json::to_string(l).expect("degree line serializes"));
                eprintln!("H^{} = {}  (cochains {}, cocycles {}, coboundaries {})", l.p, l.cohomology, l.cochains, l.cocycles, l.coboundaries);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Poisson { path, check } => {
            let check = match check {
                PoissonArg::Gps => PoissonCheck::Gps,
                PoissonArg::Np => PoissonCheck::Np,
                PoissonArg::SnbSelf => PoissonCheck::SnbSelf,
            };
            let r = cmd_poisson(&read(&path)?, check).map_err(|e| with_path(&path, e))?;
            Ok(report(&r))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            let json = serde_json::json!({ "error": e.to_string(), "line": e.line, "column": e.column });
            println!("{json}");
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
