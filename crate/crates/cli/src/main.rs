//! `strongcol`: generate graphs, build and verify strong edge colorings, run the exact
//! solver, and tabulate bounds.

mod error;
mod family;
mod table;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use strongcol::{
    bounds_table, cartesian_product, cayley_strong_coloring, chi_s_formula, cycle, exact_chi_s,
    star, star_product_coloring, tree_cycle_budget, tree_cycle_coloring, tree_product_coloring,
    unitary_cayley, verify_strong, BoundsReport, ColoringJson, EdgeColoring, Graph,
    VerificationReport, DEFAULT_BUDGET,
};

use crate::error::CliError;

#[derive(Parser)]
#[command(
    name = "strongcol",
    version,
    about = "Strong edge colorings: constructions, verification and exact search"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ColorFamily {
    Cayley,
    TreeProduct,
    StarProduct,
    TreeCycle,
}

#[derive(Subcommand)]
enum Command {
    /// Print a graph: cayley N, cycle N, path N, star N, hypercube D, jellyfish K P1,..,PK,
    /// random-tree N SEED, tree U-V,.., or cartesian/categorical with --left and --right.
    Gen {
        family: String,
        params: Vec<String>,
        /// Left factor of a product, e.g. "star 3".
        #[arg(long)]
        left: Option<String>,
        /// Right factor of a product, e.g. "cycle 8".
        #[arg(long)]
        right: Option<String>,
    },
    /// Build a strong coloring, verify it, and print it with a summary line.
    Color {
        family: ColorFamily,
        /// N for cayley; N M for star-product.
        params: Vec<usize>,
        /// Tree file (Graph JSON or an edge list); tree-product takes two.
        #[arg(long)]
        tree: Vec<PathBuf>,
        /// Cycle length for tree-cycle.
        #[arg(long)]
        cycle: Option<usize>,
    },
    /// Check a coloring file against a graph file.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Compute the strong chromatic index by branch and bound.
    Exact {
        #[arg(long)]
        graph: PathBuf,
        /// Search node budget.
        #[arg(long, env = "STRONGCOL_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Lower bound and construction budget for a tree times a cycle.
    Bounds {
        #[arg(long)]
        tree: PathBuf,
        #[arg(long)]
        cycle: usize,
        /// Also solve the product exactly.
        #[arg(long)]
        exact: bool,
        /// Search node budget for --exact.
        #[arg(long, env = "STRONGCOL_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// One row of bounds per instance of a corpus.
    Table(table::TableArgs),
}

/// Exit status of a command that ran to completion.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Ok,
    CheckFailed,
}

pub fn json_line<T: Serialize>(out: &mut impl Write, value: &T) -> io::Result<()> {
    writeln!(
        out,
        "{}",
        serde_json::to_string(value).expect("serializable")
    )
}

fn no_dot(format: Format, command: &str) -> Result<(), CliError> {
    if format == Format::Dot {
        return Err(CliError::Usage(format!(
            "--format dot is not available for {command}"
        )));
    }
    Ok(())
}

fn emit_coloring(
    out: &mut impl Write,
    format: Format,
    g: &Graph,
    c: &EdgeColoring,
) -> io::Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", c.to_json_string()),
        Format::Dot => write!(out, "{}", c.to_dot(g)),
        Format::Text => {
            for (e, color) in c.iter() {
                writeln!(out, "{} {} {color}", e.u(), e.v())?;
            }
            Ok(())
        }
    }
}

fn emit_report(
    out: &mut impl Write,
    format: Format,
    report: &VerificationReport,
) -> io::Result<()> {
    match format {
        Format::Text => {
            writeln!(
                out,
                "valid={} violations={}",
                report.valid,
                report.violations.len()
            )?;
            for v in &report.violations {
                let kind = serde_json::to_value(v.kind).expect("serializable");
                writeln!(
                    out,
                    "{} {} {}",
                    v.first,
                    v.second,
                    kind.as_str().unwrap_or_default()
                )?;
            }
            Ok(())
        }
        _ => json_line(out, report),
    }
}

fn cmd_gen(
    out: &mut impl Write,
    format: Format,
    family: &str,
    params: &[String],
    left: Option<&str>,
    right: Option<&str>,
) -> Result<Status, CliError> {
    let g = family::build(family, params, left, right)?;
    match format {
        Format::Json => writeln!(out, "{}", g.to_json_string()),
        Format::Dot => write!(out, "{}", g.to_dot()),
        Format::Text => {
            writeln!(out, "n={} m={}", g.vertex_count(), g.edge_count()).and_then(|_| {
                g.edges()
                    .try_for_each(|e| writeln!(out, "{} {}", e.u(), e.v()))
            })
        }
    }
    .map_err(io_error)?;
    Ok(Status::Ok)
}

fn io_error(e: io::Error) -> CliError {
    CliError::Io {
        path: "standard output".into(),
        source: e,
    }
}

fn one_tree(trees: &[PathBuf], family: &str) -> Result<Graph, CliError> {
    match trees {
        [t] => family::read_graph(t),
        _ => Err(CliError::Usage(format!(
            "{family} needs exactly one --tree"
        ))),
    }
}

fn cmd_color(
    out: &mut impl Write,
    format: Format,
    family: ColorFamily,
    params: &[usize],
    trees: &[PathBuf],
    cycle_len: Option<usize>,
) -> Result<Status, CliError> {
    let usage = |msg: &str| Err(CliError::Usage(msg.into()));
    let takes_trees = matches!(family, ColorFamily::TreeProduct | ColorFamily::TreeCycle);
    if !takes_trees && !trees.is_empty() {
        return usage("--tree only applies to tree-product and tree-cycle");
    }
    if !matches!(family, ColorFamily::TreeCycle) && cycle_len.is_some() {
        return usage("--cycle only applies to tree-cycle");
    }
    if takes_trees && !params.is_empty() {
        return usage("tree families take their input from --tree");
    }
    // (graph, coloring, summary label, expected or budgeted color count)
    let (g, coloring, label, target) = match family {
        ColorFamily::Cayley => {
            let [n] = params else {
                return usage("cayley takes one parameter N");
            };
            let formula = chi_s_formula(*n as u64)? as usize;
            (
                unitary_cayley(*n)?,
                cayley_strong_coloring(*n as u64)?,
                "formula",
                formula,
            )
        }
        ColorFamily::StarProduct => {
            let [n, m] = params else {
                return usage("star-product takes two parameters N M");
            };
            let g = cartesian_product(&star(*n)?, &star(*m)?)?;
            (g, star_product_coloring(*n, *m)?, "budget", 2 * n + m + 2)
        }
        ColorFamily::TreeProduct => {
            let [a, b] = trees else {
                return usage("tree-product needs two --tree files");
            };
            let (t1, t2) = (family::read_graph(a)?, family::read_graph(b)?);
            let budget = 2 * t1.max_degree() + 2 * t2.max_degree();
            let c = tree_product_coloring(&t1, &t2)?;
            (cartesian_product(&t1, &t2)?, c, "budget", budget)
        }
        ColorFamily::TreeCycle => {
            let t = one_tree(trees, "tree-cycle")?;
            let Some(len) = cycle_len else {
                return usage("tree-cycle needs --cycle L");
            };
            let budget = tree_cycle_budget(t.max_degree(), len)?;
            let c = tree_cycle_coloring(&t, len)?;
            (cartesian_product(&t, &cycle(len)?)?, c, "budget", budget)
        }
    };
    let report = verify_strong(&g, &coloring);
    let colors = coloring.num_colors();
    emit_coloring(out, format, &g, &coloring).map_err(io_error)?;
    let summary = format!("colors={colors} {label}={target} verified={}", report.valid);
    if format == Format::Dot {
        eprintln!("{summary}");
    } else {
        writeln!(out, "{summary}").map_err(io_error)?;
    }
    if !report.valid {
        emit_report(out, Format::Json, &report).map_err(io_error)?;
        return Ok(Status::CheckFailed);
    }
    let within = match family {
        ColorFamily::Cayley => colors == target,
        _ => colors <= target,
    };
    Ok(if within {
        Status::Ok
    } else {
        Status::CheckFailed
    })
}

fn cmd_verify(
    out: &mut impl Write,
    format: Format,
    graph: &std::path::Path,
    coloring: &std::path::Path,
) -> Result<Status, CliError> {
    no_dot(format, "verify")?;
    let g = family::read_graph(graph)?;
    let text = std::fs::read_to_string(coloring).map_err(|source| CliError::Io {
        path: coloring.display().to_string(),
        source,
    })?;
    let c = EdgeColoring::from_json_str(&text)
        .map_err(|e| CliError::Usage(format!("{}: {e}", coloring.display())))?;
    let report = verify_strong(&g, &c);
    emit_report(out, format, &report).map_err(io_error)?;
    Ok(if report.valid {
        Status::Ok
    } else {
        Status::CheckFailed
    })
}

#[derive(Serialize)]
struct ExactJson {
    chi: usize,
    optimal: bool,
    nodes: u64,
    witness: ColoringJson,
}

fn cmd_exact(
    out: &mut impl Write,
    format: Format,
    graph: &std::path::Path,
    budget: u64,
) -> Result<Status, CliError> {
    let g = family::read_graph(graph)?;
    let r = exact_chi_s(&g, Some(budget))?;
    match format {
        Format::Json => json_line(
            out,
            &ExactJson {
                chi: r.chi,
                optimal: r.optimal,
                nodes: r.nodes_explored,
                witness: r.witness.to_json(),
            },
        ),
        Format::Dot => write!(out, "{}", r.witness.to_dot(&g)),
        Format::Text => writeln!(
            out,
            "chi={} optimal={} nodes={} lower_bound={}",
            r.chi, r.optimal, r.nodes_explored, r.lower_bound_used
        ),
    }
    .map_err(io_error)?;
    Ok(if r.optimal {
        Status::Ok
    } else {
        Status::CheckFailed
    })
}

fn cmd_bounds(
    out: &mut impl Write,
    format: Format,
    tree: &std::path::Path,
    len: usize,
    exact: bool,
    budget: u64,
) -> Result<Status, CliError> {
    no_dot(format, "bounds")?;
    let t = family::read_graph(tree)?;
    let mut report: BoundsReport = bounds_table(&t, len)?;
    let mut status = Status::Ok;
    if exact {
        let r = exact_chi_s(&cartesian_product(&t, &cycle(len)?)?, Some(budget))?;
        if r.optimal {
            report = report.with_exact(r.chi);
        }
        if !r.optimal || !report.exact_within_bounds() {
            status = Status::CheckFailed;
        }
    }
    match format {
        Format::Text => writeln!(
            out,
            "delta={} cycle={} lower={} ({}) upper={} ({}) exact={} gap={} within_remark_bound={}",
            report.delta,
            report.cycle_length,
            report.lower.value,
            report.lower.method,
            report.upper.value,
            report.upper.method,
            report.exact.map_or("-".into(), |x| x.to_string()),
            report.gap,
            report.within_remark_bound
        ),
        _ => json_line(out, &report),
    }
    .map_err(io_error)?;
    Ok(status)
}

fn run(cli: Cli, out: &mut impl Write) -> Result<Status, CliError> {
    let format = cli.format;
    match cli.command {
        Command::Gen {
            family,
            params,
            left,
            right,
        } => cmd_gen(
            out,
            format,
            &family,
            &params,
            left.as_deref(),
            right.as_deref(),
        ),
        Command::Color {
            family,
            params,
            tree,
            cycle,
        } => cmd_color(out, format, family, &params, &tree, cycle),
        Command::Verify { graph, coloring } => cmd_verify(out, format, &graph, &coloring),
        Command::Exact { graph, budget } => cmd_exact(out, format, &graph, budget),
        Command::Bounds {
            tree,
            cycle,
            exact,
            budget,
        } => cmd_bounds(out, format, &tree, cycle, exact, budget),
        Command::Table(args) => {
            no_dot(format, "table")?;
            table::cmd_table(out, format == Format::Text, &args)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match result {
        Ok(Status::Ok) if flushed.is_ok() => ExitCode::SUCCESS,
        Ok(Status::Ok) => ExitCode::from(2),
        Ok(Status::CheckFailed) => ExitCode::from(1),
        Err(e) => {
            if let CliError::Library(strongcol::Error::InvalidColoring { report, .. }) = &e {
                let _ = json_line(&mut io::stdout(), report.as_ref());
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
