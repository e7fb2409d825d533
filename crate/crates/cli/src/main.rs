use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use enriched_center::basecat::FusionData;
use enriched_center::canonical::CentralFunctor;
use enriched_center::format::{self, BaseFile};
use enriched_center::report::{self, Input, RunReport, Status, Theorem};
use enriched_center::{Error, Result};
use sha2::{Digest, Sha256};

#[derive(Parser)]
#[command(name = "enriched-center", version, about = "Exact checks for enriched monoidal categories and their centers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    Mtc,
    SelfEnrich,
    CenterBraided,
    GeneralizedCenter,
}

#[derive(Subcommand)]
enum Command {
    /// Check the unit, duality, pentagon, hexagon and zigzag axioms.
    Validate {
        #[arg(long)]
        base: PathBuf,
    },
    /// Transparent simples of a braided category.
    Mueger {
        #[arg(long)]
        base: PathBuf,
    },
    /// Radical of the quadratic form of a metric group.
    Radical {
        #[arg(long)]
        base: PathBuf,
    },
    /// Monoidal axioms of the self-enrichment.
    SelfEnrich {
        #[arg(long)]
        base: PathBuf,
        /// Also write the self-enrichment as a JSON table to this file.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Category axioms of the product of the self-enrichment with itself.
    Product {
        #[arg(long)]
        base: PathBuf,
    },
    /// Center homs of the self-enrichment.
    Center {
        #[arg(long)]
        base: PathBuf,
        /// Compare every hom with the transparent part of `y x*`.
        #[arg(long)]
        against_oracle: bool,
    },
    /// Solve for all half-braidings of the simples of the self-enrichment.
    HalfBraidings {
        #[arg(long)]
        base: PathBuf,
        /// List the components of every solution.
        #[arg(long)]
        enumerate: bool,
    },
    /// Enrichment of the target over the base through a central functor.
    CanonicalEnrich {
        #[arg(long)]
        base: Option<PathBuf>,
        #[arg(long)]
        target: PathBuf,
        #[arg(long)]
        functor: PathBuf,
    },
    /// Center objects with simple carriers, by exhaustive search.
    OrdinaryCenter {
        #[arg(long)]
        base: PathBuf,
        /// Give up after visiting this many search nodes.
        #[arg(long)]
        node_budget: Option<u64>,
    },
    /// Simples double-braiding trivially with the given ones.
    Centralizer {
        #[arg(long)]
        base: PathBuf,
        #[arg(long = "of", num_args = 1.., required = true)]
        of: Vec<String>,
    },
    /// Verify a theorem on a base, or on a central functor for the generalized center.
    Verify {
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        #[arg(long)]
        base: Option<PathBuf>,
        #[arg(long)]
        target: Option<PathBuf>,
        #[arg(long)]
        functor: Option<PathBuf>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Mueger { .. } => "mueger",
            Command::Radical { .. } => "radical",
            Command::SelfEnrich { .. } => "self-enrich",
            Command::Product { .. } => "product",
            Command::Center { .. } => "center",
            Command::HalfBraidings { .. } => "half-braidings",
            Command::CanonicalEnrich { .. } => "canonical-enrich",
            Command::OrdinaryCenter { .. } => "ordinary-center",
            Command::Centralizer { .. } => "centralizer",
            Command::Verify { .. } => "verify",
        }
    }
}

/// Reads input files and records their digests.
#[derive(Default)]
struct Inputs(Vec<Input>);

impl Inputs {
    fn read(&mut self, path: &Path) -> Result<String> {
        let bytes = std::fs::read(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        self.0.push(Input {
            path: path.display().to_string(),
            sha256: format!("{:x}", Sha256::digest(&bytes)),
        });
        String::from_utf8(bytes).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }

    fn base_file(&mut self, path: &Path) -> Result<BaseFile> {
        let text = self.read(path)?;
        format::parse_base(&text).map_err(|e| format::with_path(e, path))
    }
}

/// A parsed base that failed validation short-circuits into the validation report.
enum Loaded<T> {
    Valid(T),
    Invalid(RunReport),
}

fn checked(c: FusionData, command: &str) -> Loaded<Arc<FusionData>> {
    if c.validate().is_valid() {
        Loaded::Valid(Arc::new(c))
    } else {
        let mut r = report::validate(&c);
        r.command = command.to_string();
        Loaded::Invalid(r)
    }
}

macro_rules! valid {
    ($e:expr) => {
        match $e {
            Loaded::Valid(v) => v,
            Loaded::Invalid(r) => return Ok(r),
        }
    };
}

fn functor(
    inputs: &mut Inputs,
    base: Option<&Path>,
    target: &Path,
    path: &Path,
    command: &str,
) -> Result<Loaded<Arc<CentralFunctor>>> {
    let c = match checked(inputs.base_file(target)?.into_data(), command) {
        Loaded::Valid(c) => c,
        Loaded::Invalid(r) => return Ok(Loaded::Invalid(r)),
    };
    let b = match base {
        Some(p) => match checked(inputs.base_file(p)?.into_data(), command) {
            Loaded::Valid(b) => Some(b),
            Loaded::Invalid(r) => return Ok(Loaded::Invalid(r)),
        },
        None => None,
    };
    let text = inputs.read(path)?;
    let psi = format::parse_functor(&text, b, c).map_err(|e| format::with_path(e, path))?;
    Ok(Loaded::Valid(Arc::new(psi)))
}

fn dispatch(cmd: &Command, inputs: &mut Inputs) -> Result<RunReport> {
    let name = cmd.name();
    let base = |p: &Path, inputs: &mut Inputs| -> Result<Loaded<Arc<FusionData>>> {
        Ok(checked(inputs.base_file(p)?.into_data(), name))
    };
    match cmd {
        Command::Validate { base } => Ok(report::validate(inputs.base_file(base)?.data())),
        Command::Mueger { base: p } => report::mueger(&*valid!(base(p, inputs)?)),
        Command::Radical { base: p } => match inputs.base_file(p)? {
            BaseFile::Metric(m) => {
                valid!(checked(m.data.clone(), name));
                Ok(report::radical(&m))
            }
            BaseFile::Category(_) => Err(Error::Schema(format!(
                "{}: radical needs a metric-group file with a [group] table",
                p.display()
            ))),
        },
        Command::SelfEnrich { base: p, emit } => {
            let b = valid!(base(p, inputs)?);
            if let Some(out) = emit {
                std::fs::write(out, report::self_enrichment_table(&b)?)
                    .map_err(|e| Error::InvalidArgument(format!("{}: {e}", out.display())))?;
            }
            report::self_enrich(&b)
        }
        Command::Product { base: p } => report::product(&valid!(base(p, inputs)?)),
        Command::Center { base: p, against_oracle } => report::center(&valid!(base(p, inputs)?), *against_oracle),
        Command::HalfBraidings { base: p, enumerate } => {
            report::half_braidings(&valid!(base(p, inputs)?), *enumerate)
        }
        Command::CanonicalEnrich { base: b, target, functor: f } => {
            report::canonical_enrich(valid!(functor(inputs, b.as_deref(), target, f, name)?))
        }
        Command::OrdinaryCenter { base: p, node_budget } => {
            report::ordinary_center(&*valid!(base(p, inputs)?), *node_budget)
        }
        Command::Centralizer { base: p, of } => report::centralizer(&*valid!(base(p, inputs)?), of),
        Command::Verify { theorem, base: b, target, functor: f } => {
            let theorem = match theorem {
                TheoremArg::Mtc => Theorem::Mtc,
                TheoremArg::SelfEnrich => Theorem::SelfEnrich,
                TheoremArg::CenterBraided => Theorem::CenterBraided,
                TheoremArg::GeneralizedCenter => Theorem::GeneralizedCenter,
            };
            match (theorem, b, target, f) {
                (Theorem::GeneralizedCenter, b, Some(t), Some(f)) => {
                    let psi = valid!(functor(inputs, b.as_deref(), t, f, name)?);
                    let source = psi.source().clone();
                    report::verify(theorem, &source, Some(psi))
                }
                (Theorem::GeneralizedCenter, Some(p), None, None) => {
                    report::verify(theorem, &valid!(base(p, inputs)?), None)
                }
                (Theorem::GeneralizedCenter, ..) => Err(Error::InvalidArgument(
                    "generalized-center needs --target and --functor, or --base alone for the canonical functor".into(),
                )),
                (_, Some(p), None, None) => report::verify(theorem, &valid!(base(p, inputs)?), None),
                _ => Err(Error::InvalidArgument("this theorem takes --base only".into())),
            }
        }
    }
}

fn exit_code(r: &RunReport, err: Option<&Error>) -> u8 {
    match (r.status, err) {
        (Status::Pass, _) => 0,
        (_, Some(Error::Parse(_) | Error::Schema(_))) => 2,
        (_, Some(Error::Resource(_))) => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("ENRICHED_CENTER_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .expect("thread pool is configured once");
    }
    let start = Instant::now();
    let mut inputs = Inputs::default();
    let (mut rep, err) = match dispatch(&cli.command, &mut inputs) {
        Ok(r) => (r, None),
        Err(e) => (RunReport::error(cli.command.name(), e.to_string()), Some(e)),
    };
    rep.inputs = inputs.0;
    match cli.format {
        Format::Json => print!("{}", rep.to_json()),
        Format::Text => {
            print!("{}", rep.to_text());
            println!("time: {} ms", start.elapsed().as_millis());
        }
    }
    ExitCode::from(exit_code(&rep, err.as_ref()))
}
