//! Bound tables: one row per instance of a corpus, computed in parallel and printed in
//! input order.

use std::io::Write;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};

use clap::{Args, ValueEnum};
use serde::Serialize;
use strongcol::{
    bounds_table, cartesian_product, cayley_strong_coloring, chi_s_formula, counting_lower_bound,
    cycle, exact_chi_s, path, random_tree_corpus, star, star_product_coloring, tree_cycle_coloring,
    tree_cycle_lower_bound, tree_from_edges, tree_product_coloring, tree_product_lower_bound,
    unitary_cayley, verify_strong, EdgeColoring, Graph, DEFAULT_BUDGET,
};

use crate::error::CliError;
use crate::{family, json_line, Status};

#[derive(Clone, Copy, ValueEnum)]
pub enum Corpus {
    /// Unitary Cayley graphs for n in --from..=--to.
    Cayley,
    /// Trees times cycles of each length in --cycles.
    TreeCycle,
    /// Small products of trees, stars and cycles, all solved exactly.
    Products,
}

#[derive(Args)]
pub struct TableArgs {
    corpus: Corpus,
    #[arg(long, default_value_t = 2)]
    from: usize,
    #[arg(long, default_value_t = 60)]
    to: usize,
    /// Cycle lengths for tree-cycle rows.
    #[arg(long, value_delimiter = ',', default_values_t = [3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 16, 20])]
    cycles: Vec<usize>,
    /// A single tree file for tree-cycle rows.
    #[arg(long, conflicts_with = "delta")]
    tree: Option<PathBuf>,
    /// Use the depth-two tree whose center and its neighbors all have degree Δ.
    #[arg(long)]
    delta: Option<usize>,
    /// Size of the random tree corpus when neither --tree nor --delta is given.
    #[arg(long, default_value_t = 10)]
    trees: usize,
    #[arg(long, default_value_t = 12)]
    max_vertices: usize,
    #[arg(long, default_value_t = 6)]
    max_degree: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Also run the exact solver on cayley and tree-cycle rows.
    #[arg(long)]
    exact: bool,
    /// Search node budget for the exact solver.
    #[arg(long, env = "STRONGCOL_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub instance: String,
    pub lower: usize,
    pub upper: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<usize>,
    pub gap: usize,
    /// Tree-cycle rows: `gap ≤ 4`, or `gap ≤ 3` for odd `L ≥ 9`. Cayley rows: `gap = 0`.
    /// Every row: a known exact value lies in `[lower, upper]`.
    pub within_remark_bound: bool,
}

impl TableRow {
    fn new(
        instance: String,
        lower: usize,
        upper: usize,
        exact: Option<usize>,
        gap_ok: bool,
    ) -> Self {
        let contained = exact.is_none_or(|x| lower <= x && x <= upper);
        TableRow {
            instance,
            lower,
            upper,
            exact,
            gap: upper.saturating_sub(lower),
            within_remark_bound: gap_ok && lower <= upper && contained,
        }
    }
}

/// The tree with a center of degree `delta` whose neighbors all have degree `delta`.
pub fn regular_depth_two_tree(delta: usize) -> Result<Graph, CliError> {
    if delta == 0 {
        return Err(CliError::Usage("--delta must be at least 1".into()));
    }
    let mut edges: Vec<(usize, usize)> = (1..=delta).map(|c| (0, c)).collect();
    let mut next = delta + 1;
    for c in 1..=delta {
        for _ in 1..delta {
            edges.push((c, next));
            next += 1;
        }
    }
    Ok(tree_from_edges(&edges)?)
}

fn checked(construction: &str, g: &Graph, c: EdgeColoring) -> Result<usize, CliError> {
    if verify_strong(g, &c).valid {
        Ok(c.num_colors())
    } else {
        Err(CliError::Failed(format!(
            "{construction}: coloring failed verification"
        )))
    }
}

fn solve(g: &Graph, budget: u64) -> Result<Option<usize>, CliError> {
    let r = exact_chi_s(g, Some(budget))?;
    Ok(r.optimal.then_some(r.chi))
}

type Job = Box<dyn Fn() -> Result<TableRow, CliError> + Send + Sync>;

fn cayley_jobs(args: &TableArgs) -> Result<Vec<Job>, CliError> {
    if args.from < 2 || args.from > args.to {
        return Err(CliError::Usage(format!(
            "need 2 <= --from <= --to, got {}..={}",
            args.from, args.to
        )));
    }
    let (exact, budget) = (args.exact, args.budget);
    Ok((args.from..=args.to)
        .map(|n| -> Job {
            Box::new(move || {
                let g = unitary_cayley(n)?;
                let colors = checked("cayley", &g, cayley_strong_coloring(n as u64)?)?;
                let formula = chi_s_formula(n as u64)? as usize;
                if colors != formula {
                    return Err(CliError::Failed(format!(
                        "cayley n={n}: {colors} colors but the formula gives {formula}"
                    )));
                }
                let exact = if exact { solve(&g, budget)? } else { None };
                let lower = counting_lower_bound(&g)?;
                Ok(TableRow::new(
                    format!("cayley n={n}"),
                    lower,
                    colors,
                    exact,
                    lower == colors,
                ))
            })
        })
        .collect())
}

fn tree_cycle_jobs(args: &TableArgs) -> Result<Vec<Job>, CliError> {
    let trees: Vec<(String, Graph)> = if let Some(path) = &args.tree {
        vec![(path.display().to_string(), family::read_graph(path)?)]
    } else if let Some(delta) = args.delta {
        vec![(format!("Δ={delta}"), regular_depth_two_tree(delta)?)]
    } else {
        random_tree_corpus(args.trees, args.max_vertices, args.max_degree, args.seed)?
            .into_iter()
            .enumerate()
            .map(|(i, t)| {
                (
                    format!("tree#{i} n={} Δ={}", t.vertex_count(), t.max_degree()),
                    t,
                )
            })
            .collect()
    };
    if trees.iter().any(|(_, t)| t.edge_count() == 0) {
        return Err(CliError::Usage(
            "tree-cycle rows need trees with at least one edge".into(),
        ));
    }
    let mut jobs: Vec<Job> = Vec::new();
    for (name, t) in trees {
        for &len in &args.cycles {
            let (name, t) = (name.clone(), t.clone());
            let (exact, budget) = (args.exact, args.budget);
            jobs.push(Box::new(move || {
                let report = bounds_table(&t, len)?;
                let g = cartesian_product(&t, &cycle(len)?)?;
                let colors = checked("tree-cycle", &g, tree_cycle_coloring(&t, len)?)?;
                if colors > report.upper.value {
                    return Err(CliError::Failed(format!(
                        "{name} L={len}: {colors} colors exceed the budget {}",
                        report.upper.value
                    )));
                }
                let exact = if exact { solve(&g, budget)? } else { None };
                Ok(TableRow::new(
                    format!("{name} L={len}"),
                    report.lower.value,
                    report.upper.value,
                    exact,
                    report.within_remark_bound,
                ))
            }));
        }
    }
    Ok(jobs)
}

type Factor = fn() -> strongcol::Result<Graph>;

fn product_jobs(args: &TableArgs) -> Vec<Job> {
    let budget = args.budget;
    let mut jobs: Vec<Job> = Vec::new();
    let tree_pairs: [(&str, Factor, Factor); 6] = [
        ("P2□P2", || path(2), || path(2)),
        ("P3□P2", || path(3), || path(2)),
        ("P3□P3", || path(3), || path(3)),
        ("P4□P2", || path(4), || path(2)),
        ("K1,3□P2", || star(3), || path(2)),
        ("K1,3□P3", || star(3), || path(3)),
    ];
    for (name, a, b) in tree_pairs {
        jobs.push(Box::new(move || {
            let (t1, t2) = (a()?, b()?);
            let g = cartesian_product(&t1, &t2)?;
            let colors = checked(name, &g, tree_product_coloring(&t1, &t2)?)?;
            let lower = tree_product_lower_bound(&t1, &t2)?;
            Ok(TableRow::new(
                name.into(),
                lower,
                colors,
                solve(&g, budget)?,
                true,
            ))
        }));
    }
    for (n, m) in [(2, 2), (3, 2), (3, 3)] {
        jobs.push(Box::new(move || {
            let g = cartesian_product(&star(n)?, &star(m)?)?;
            let name = format!("K1,{n}□K1,{m}");
            let colors = checked(&name, &g, star_product_coloring(n, m)?)?;
            let lower = counting_lower_bound(&g)?;
            Ok(TableRow::new(name, lower, colors, solve(&g, budget)?, true))
        }));
    }
    for (k, len) in [(2, 3), (3, 3), (2, 6), (3, 6), (2, 10)] {
        jobs.push(Box::new(move || {
            let t = path(k)?;
            let g = cartesian_product(&t, &cycle(len)?)?;
            let name = format!("P{k}□C{len}");
            let report = bounds_table(&t, len)?;
            let colors = checked(&name, &g, tree_cycle_coloring(&t, len)?)?;
            if colors > report.upper.value {
                return Err(CliError::Failed(format!(
                    "{name}: {colors} colors exceed the budget"
                )));
            }
            let lower = tree_cycle_lower_bound(&t, len)?;
            Ok(TableRow::new(
                name,
                lower,
                report.upper.value,
                solve(&g, budget)?,
                true,
            ))
        }));
    }
    jobs
}

/// Runs every job on a pool of scoped threads; results keep the job order.
fn run_jobs(jobs: &[Job], workers: usize) -> Vec<Result<TableRow, CliError>> {
    let next = AtomicUsize::new(0);
    let workers = workers.clamp(1, jobs.len().max(1));
    let mut done: Vec<(usize, Result<TableRow, CliError>)> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                scope.spawn(|| {
                    let mut mine = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        let Some(job) = jobs.get(i) else { break };
                        mine.push((i, job()));
                    }
                    mine
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("table worker panicked"))
            .collect()
    });
    done.sort_by_key(|(i, _)| *i);
    done.into_iter().map(|(_, r)| r).collect()
}

fn write_text(out: &mut impl Write, rows: &[TableRow]) -> std::io::Result<()> {
    let width = rows
        .iter()
        .map(|r| r.instance.chars().count())
        .max()
        .unwrap_or(8)
        .max(8);
    writeln!(out, "{:<width$}  lower  upper  exact  gap  ok", "instance")?;
    for r in rows {
        let exact = r.exact.map_or("-".into(), |x| x.to_string());
        let pad = width - r.instance.chars().count();
        writeln!(
            out,
            "{}{}  {:>5}  {:>5}  {:>5}  {:>3}  {}",
            r.instance,
            " ".repeat(pad),
            r.lower,
            r.upper,
            exact,
            r.gap,
            if r.within_remark_bound { "yes" } else { "NO" }
        )?;
    }
    Ok(())
}

pub fn cmd_table(out: &mut impl Write, text: bool, args: &TableArgs) -> Result<Status, CliError> {
    let jobs = match args.corpus {
        Corpus::Cayley => cayley_jobs(args)?,
        Corpus::TreeCycle => tree_cycle_jobs(args)?,
        Corpus::Products => product_jobs(args),
    };
    let workers = args
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let mut rows = Vec::new();
    let mut failure: Option<CliError> = None;
    for result in run_jobs(&jobs, workers) {
        match result {
            Ok(row) => rows.push(row),
            Err(e) => {
                eprintln!("error: {e}");
                if failure
                    .as_ref()
                    .is_none_or(|f| e.exit_code() > f.exit_code())
                {
                    failure = Some(e);
                }
            }
        }
    }
    let io = |e| CliError::Io {
        path: "standard output".into(),
        source: e,
    };
    if text {
        write_text(out, &rows).map_err(io)?;
    } else {
        for row in &rows {
            json_line(out, row).map_err(io)?;
        }
    }
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(if rows.iter().all(|r| r.within_remark_bound) {
        Status::Ok
    } else {
        Status::CheckFailed
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn depth_two_tree() {
        let t = regular_depth_two_tree(3).unwrap();
        assert_eq!((t.vertex_count(), t.max_degree()), (10, 3));
        assert!((0..=3).all(|v| t.degree(v).unwrap() == 3));
    }

    #[test]
    fn row_flags() {
        let r = TableRow::new("x".into(), 10, 12, Some(11), true);
        assert_eq!(r.gap, 2);
        assert!(r.within_remark_bound);
        assert!(!TableRow::new("x".into(), 10, 12, Some(13), true).within_remark_bound);
        assert!(!TableRow::new("x".into(), 10, 12, None, false).within_remark_bound);
    }

    #[test]
    fn jobs_keep_order() {
        let jobs: Vec<Job> = (0..20)
            .map(|i| -> Job {
                Box::new(move || Ok(TableRow::new(i.to_string(), 0, i, None, true)))
            })
            .collect();
        let rows = run_jobs(&jobs, 4);
        assert!(rows
            .iter()
            .enumerate()
            .all(|(i, r)| r.as_ref().unwrap().upper == i));
    }
}
