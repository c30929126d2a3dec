//! Command-line front end for the `mlaw` library.

pub mod error;
pub mod report;
pub mod spec;
pub mod table;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mlaw::{
    classes_are_lie_simple, classify_structures, commutator_hom, enumerate_structures_direct_with,
    enumerate_structures_via_wedge, exterior_square, tensor_square, verify_axioms, EnumerationLimits,
    FiniteGroup, MlaStructure, Strategy, WedgeConfig, WedgeSquare,
};

pub use error::{CliError, EXIT_INVALID};
pub use spec::GroupSpec;
pub use table::{parse_star_table, StarTableFile};

use report::*;

pub const DEFAULT_MAX_COSETS: usize = 1_000_000;
pub const DEFAULT_MAX_ORDER: usize = 64;

#[derive(Debug, Parser)]
#[command(name = "mlaw", version, about = "Tensor and exterior squares, Schur multipliers and multiplicative Lie algebra structures on small finite groups")]
pub struct Cli {
    #[command(flatten)]
    pub config: ConfigArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct ConfigArgs {
    /// Coset limit for Todd–Coxeter enumeration
    #[arg(long, global = true, env = "MLAW_MAX_COSETS", default_value_t = DEFAULT_MAX_COSETS, value_parser = positive)]
    pub max_cosets: usize,

    /// Largest group order accepted
    #[arg(long, global = true, env = "MLAW_MAX_ORDER", default_value_t = DEFAULT_MAX_ORDER, value_parser = positive)]
    pub max_order: usize,

    /// Worker threads (defaults to the number of CPUs)
    #[arg(long, global = true, value_parser = positive)]
    pub threads: Option<usize>,

    /// Print JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,
}

fn positive(text: &str) -> Result<usize, String> {
    match text.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Basic facts about a group
    Group { spec: GroupSpec },
    /// Nonabelian tensor or exterior square
    Wedge {
        spec: GroupSpec,
        #[arg(long, conflicts_with = "exterior")]
        tensor: bool,
        #[arg(long)]
        exterior: bool,
    },
    /// Multiplicative Lie algebra structures
    #[command(subcommand)]
    Mla(MlaCommand),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Wedge,
    Direct,
    Both,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Wedge => "wedge",
            Method::Direct => "direct",
            Method::Both => "both",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Trivial,
    Commutator,
}

#[derive(Debug, Subcommand)]
pub enum MlaCommand {
    /// Enumerate and classify all structures
    Enumerate {
        spec: GroupSpec,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        /// Generating-set bound for the direct enumerator
        #[arg(long, default_value_t = mlaw::mla::DEFAULT_DIRECT_MAX_GENERATORS)]
        max_generators: usize,
    },
    /// Check a star table against the axioms
    Verify {
        spec: GroupSpec,
        #[arg(long)]
        table: PathBuf,
    },
    /// Print a star table as JSON
    Table {
        spec: GroupSpec,
        #[arg(long, value_enum, conflicts_with = "index")]
        kind: Option<TableKind>,
        /// Position in the sorted list of enumerated structures
        #[arg(long)]
        index: Option<usize>,
    },
}

/// Output text and process exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub code: u8,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, code: 0 }
    }
}

struct Context {
    limits: EnumerationLimits,
    max_order: usize,
    json: bool,
}

impl Context {
    fn wedge_config(&self) -> WedgeConfig {
        WedgeConfig {
            limits: self.limits,
            max_order: self.max_order,
            strategy: Strategy::Felsch,
        }
    }

    fn build(&self, spec: &GroupSpec) -> Result<FiniteGroup, CliError> {
        spec.build(self.max_order, &self.limits)
    }

    fn emit<T: serde::Serialize>(&self, value: &T, text: impl FnOnce(&T) -> String) -> String {
        if self.json {
            let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
            s.push('\n');
            s
        } else {
            text(value)
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let ctx = Context {
        limits: EnumerationLimits::new(cli.config.max_cosets, EnumerationLimits::default().max_passes)?,
        max_order: cli.config.max_order,
        json: cli.config.json,
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.config.threads {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| CliError::Internal(format!("cannot start worker threads: {e}")))?;
    pool.install(|| dispatch(&ctx, &cli.command))
}

fn dispatch(ctx: &Context, command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Group { spec } => {
            let g = ctx.build(spec)?;
            let report = GroupReport::new(&spec.to_string(), &g);
            Ok(Outcome::ok(ctx.emit(&report, |r| {
                let mut s = String::new();
                r.render(&mut s);
                s
            })))
        }
        Command::Wedge { spec, tensor, .. } => {
            let g = ctx.build(spec)?;
            let cfg = ctx.wedge_config();
            let ws = if *tensor { tensor_square(&g, &cfg)? } else { exterior_square(&g, &cfg)? };
            let schur = if *tensor { None } else { Some(schur_report(&ws)?) };
            let report = WedgeCommandReport {
                group: GroupReport::new(&spec.to_string(), &g),
                wedge: wedge_report(&ws),
                schur_multiplier: schur,
            };
            Ok(Outcome::ok(ctx.emit(&report, WedgeCommandReport::render)))
        }
        Command::Mla(MlaCommand::Enumerate {
            spec,
            method,
            max_generators,
        }) => enumerate(ctx, spec, *method, *max_generators),
        Command::Mla(MlaCommand::Verify { spec, table }) => verify(ctx, spec, table),
        Command::Mla(MlaCommand::Table { spec, kind, index }) => {
            let g = ctx.build(spec)?;
            let s = match (kind, index) {
                (_, Some(i)) => {
                    let all = enumerate_structures_via_wedge(&g, &ctx.wedge_config())?.structures;
                    let count = all.len();
                    all.into_iter().nth(*i).ok_or_else(|| {
                        CliError::Input(format!("structure index {i} out of range ({count} structures)"))
                    })?
                }
                (Some(TableKind::Commutator), None) => MlaStructure::commutator(&g),
                (Some(TableKind::Trivial) | None, None) => MlaStructure::trivial(&g),
            };
            let mut text = StarTableFile::from_structure(&s).to_json();
            text.push('\n');
            Ok(Outcome::ok(text))
        }
    }
}

fn wedge_report(ws: &WedgeSquare) -> WedgeReport {
    WedgeReport {
        kind: ws.kind().to_string(),
        square: GroupDescription::of(ws.square()),
    }
}

fn schur_report(ws: &WedgeSquare) -> Result<SchurReport, CliError> {
    let data = commutator_hom(ws)?;
    Ok(SchurReport {
        order: data.multiplier.order(),
        invariants: data.invariants.divisors().to_vec(),
    })
}

fn enumerate(ctx: &Context, spec: &GroupSpec, method: Method, max_generators: usize) -> Result<Outcome, CliError> {
    let g = ctx.build(spec)?;
    let mut report = EnumerateReport {
        group: GroupReport::new(&spec.to_string(), &g),
        wedge: None,
        schur_multiplier: None,
        structures: StructuresReport {
            method: method.name().into(),
            raw_count: 0,
            class_count: 0,
            classes: Vec::new(),
            lie_simple: false,
            homomorphisms: None,
            rejected_by_equivariance: None,
            rejected_by_jacobi: None,
            methods_agree: None,
        },
    };
    let via = if method == Method::Direct {
        None
    } else {
        let e = enumerate_structures_via_wedge(&g, &ctx.wedge_config())?;
        report.wedge = Some(wedge_report(&e.square));
        report.schur_multiplier = Some(schur_report(&e.square)?);
        report.structures.homomorphisms = Some(e.hom_count);
        report.structures.rejected_by_equivariance = Some(e.rejected_by_equivariance);
        report.structures.rejected_by_jacobi = Some(e.rejected_by_jacobi);
        Some(e.structures)
    };
    let direct = if method == Method::Wedge {
        None
    } else {
        Some(enumerate_structures_direct_with(&g, max_generators)?)
    };
    let tables = match (via, direct) {
        (Some(v), Some(d)) => {
            if v != d {
                return Err(CliError::Internal(format!(
                    "enumerators disagree: {} tables via the exterior square, {} directly",
                    v.len(),
                    d.len()
                )));
            }
            report.structures.methods_agree = Some(true);
            v
        }
        (Some(t), None) | (None, Some(t)) => t,
        (None, None) => unreachable!(),
    };
    let classes = classify_structures(&g, &tables)?;
    report.structures.raw_count = tables.len();
    report.structures.class_count = classes.len();
    report.structures.lie_simple = classes_are_lie_simple(&classes);
    report.structures.classes = classes.iter().map(ClassReport::new).collect();
    Ok(Outcome::ok(ctx.emit(&report, EnumerateReport::render)))
}

fn verify(ctx: &Context, spec: &GroupSpec, path: &PathBuf) -> Result<Outcome, CliError> {
    let g = ctx.build(spec)?;
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let s = parse_star_table(&text)?;
    let axioms = verify_axioms(&g, &s)?;
    let report = VerifyReport {
        group: spec.to_string(),
        order: g.order(),
        valid: axioms.is_valid(),
        axioms: (0..5)
            .map(|i| AxiomLine {
                axiom: i + 1,
                holds: axioms.holds[i],
                witness: axioms.witnesses[i]
                    .as_ref()
                    .map(|w| w.iter().map(|&x| g.name(x).to_string()).collect()),
            })
            .collect(),
    };
    let output = ctx.emit(&report, VerifyReport::render);
    Ok(Outcome {
        output,
        code: if report.valid { 0 } else { EXIT_INVALID },
    })
}
