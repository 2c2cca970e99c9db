mod session;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use repring::render::{renderers, Basis, HarrisonReport, Report};
use repring::ring::{casimir_gram, idempotents, multiplication_matrix, relations, unit_group};
use repring::strategy::power_methods;
use repring::sym::{CharacterTable, Partition};
use repring::tensor::{kronecker, multiply, power_closed_form};

use session::{OrderChoice, Session};

const MAX_HARRISON_DEGREE: usize = 8;

#[derive(Parser)]
#[command(
    name = "repring",
    version,
    about = "Exact computations in representation rings of symmetric groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Require the published V_i numbering (n = 4, 5, 6).
    #[arg(long, global = true, conflicts_with = "canonical")]
    paper_order: bool,

    /// Use reverse-lexicographic partition order even where a published numbering exists.
    #[arg(long, global = true)]
    canonical: bool,

    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Directory for cached structure tensors.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Plain,
    Json,
    Latex,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Plain => "plain",
            Format::Json => "json",
            Format::Latex => "latex",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Character table of S_n.
    Chartable { n: usize },
    /// Kronecker coefficient g_ijk: multiplicity of the third irrep in the
    /// product of the first two. Irreps are 1-based indices or partitions
    /// such as 3+2+1.
    Kron {
        n: usize,
        #[arg(long, num_args = 3, value_names = ["I", "J", "K"])]
        idx: Option<Vec<String>>,
        #[arg(conflicts_with = "idx")]
        irreps: Vec<String>,
    },
    /// Decomposition of V_i ⊗ V_j.
    Decompose { n: usize, i: String, j: String },
    /// Decomposition of the k-th tensor power of V_i.
    Power {
        n: usize,
        i: String,
        k: Option<usize>,
        /// Print the closed-form coefficient table instead.
        #[arg(long)]
        closed_form: bool,
        #[arg(long, default_value = "iterative")]
        method: String,
    },
    /// Presentation and invariants of R(S_n).
    Ring { n: usize, action: RingAction },
    /// Harrison center of the cubic form of R(S_n).
    Harrison { n: usize },
}

#[derive(Clone, Copy, ValueEnum)]
enum RingAction {
    Relations,
    Idempotents,
    Units,
    Casimir,
    Matrices,
}

/// Accepts a 1-based index or a partition (`3+2+1`, `3,2,1`, `(6)`).
fn resolve_irrep(table: &CharacterTable, arg: &str) -> Result<usize> {
    let s = table.s();
    if let Ok(i) = arg.parse::<usize>() {
        if i == 0 || i > s {
            bail!("irrep index {i} out of range 1..={s}");
        }
        return Ok(i - 1);
    }
    let p: Partition = arg.parse().map_err(|e| anyhow!("invalid irrep '{arg}': {e}"))?;
    if p.n() != table.n() {
        bail!("partition {p} is not a partition of {}", table.n());
    }
    table.irrep_index(&p).ok_or_else(|| anyhow!("no irrep labelled {p}"))
}

fn run(cli: &Cli) -> Result<String> {
    let order = match (cli.paper_order, cli.canonical) {
        (true, _) => OrderChoice::Paper,
        (_, true) => OrderChoice::Canonical,
        _ => OrderChoice::Auto,
    };
    let mut session = Session::new(order, cli.cache_dir.clone());
    let report = match &cli.command {
        Command::Chartable { n } => Report::CharacterTable {
            table: session.table(*n)?.clone(),
        },
        Command::Kron { n, idx, irreps } => {
            let args = idx.clone().unwrap_or_else(|| irreps.clone());
            if args.len() != 3 {
                bail!("kron needs three irreps (use --idx I J K or three partitions)");
            }
            let (table, t) = session.tensor(*n)?;
            let mut indices = [0; 3];
            for (slot, a) in indices.iter_mut().zip(&args) {
                *slot = resolve_irrep(table, a)?;
            }
            let [i, j, k] = indices;
            Report::Kronecker {
                basis: Basis::of(t),
                indices,
                value: kronecker(table, i, j, k)?,
            }
        }
        Command::Decompose { n, i, j } => {
            let (table, t) = session.tensor(*n)?;
            let (left, right) = (resolve_irrep(table, i)?, resolve_irrep(table, j)?);
            Report::Decomposition {
                basis: Basis::of(t),
                left,
                right,
                element: multiply(&t.basis(left), &t.basis(right), t)?,
            }
        }
        Command::Power {
            n,
            i,
            k,
            closed_form,
            method,
        } => {
            let (table, t) = session.tensor(*n)?;
            let base = resolve_irrep(table, i)?;
            if *closed_form {
                Report::ClosedForm {
                    basis: Basis::of(t),
                    form: power_closed_form(base, table)?,
                }
            } else {
                let k = k.context("power needs an exponent k (or --closed-form)")?;
                let methods = power_methods();
                Report::Power {
                    basis: Basis::of(t),
                    base,
                    exponent: k,
                    method: method.clone(),
                    element: methods.get(method)?.power(table, t, base, k)?,
                }
            }
        }
        Command::Ring { n, action } => {
            let (table, t) = session.tensor(*n)?;
            let basis = Basis::of(t);
            match action {
                RingAction::Relations => Report::Relations {
                    basis,
                    relations: relations(t)?,
                },
                RingAction::Idempotents => Report::Idempotents {
                    basis,
                    classes: table.classes().iter().map(|c| c.cycle_type.clone()).collect(),
                    set: idempotents(table),
                },
                RingAction::Units => Report::Units {
                    basis,
                    report: unit_group(table, t)?,
                },
                RingAction::Casimir => Report::Casimir {
                    basis,
                    report: casimir_gram(t)?,
                },
                RingAction::Matrices => Report::Matrices {
                    basis,
                    matrices: (0..t.s())
                        .map(|i| multiplication_matrix(i, t).map(|m| m.to_rows()))
                        .collect::<Result<_, _>>()?,
                },
            }
        }
        Command::Harrison { n } => {
            if *n > MAX_HARRISON_DEGREE {
                bail!("harrison supports n <= {MAX_HARRISON_DEGREE}, got {n}");
            }
            let (_, t) = session.tensor(*n)?;
            Report::Harrison(Box::new(HarrisonReport::build(t)?))
        }
    };
    Ok(renderers().get(cli.format.name())?.render(&report)?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|text| match &cli.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
