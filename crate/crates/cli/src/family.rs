//! Graph families named on the command line, e.g. `cayley 12` or `jellyfish 5 2,2,2,2,2`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use strongcol::{
    cartesian_product, categorical_product, cycle, hypercube, jellyfish, path, random_tree, star,
    tree_from_edges, unitary_cayley, Graph,
};

use crate::error::CliError;

pub const FAMILIES: &str = "cayley N | cycle N | path N | star N | hypercube D | \
    jellyfish K P1,..,PK | random-tree N SEED | tree U-V,.. | cartesian | categorical";

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn number<T: std::str::FromStr>(family: &str, params: &[String], i: usize) -> Result<T, CliError> {
    let raw = params
        .get(i)
        .ok_or_else(|| usage(format!("{family}: missing parameter {}", i + 1)))?;
    raw.parse()
        .map_err(|_| usage(format!("{family}: {raw:?} is not a valid number")))
}

fn exact_arity(family: &str, params: &[String], n: usize) -> Result<(), CliError> {
    if params.len() != n {
        return Err(usage(format!(
            "{family} takes {n} parameter(s), got {}",
            params.len()
        )));
    }
    Ok(())
}

fn edge_list(spec: &str) -> Result<Vec<(usize, usize)>, CliError> {
    spec.split(',')
        .map(|pair| {
            let (a, b) = pair
                .split_once('-')
                .ok_or_else(|| usage(format!("edge {pair:?} is not of the form U-V")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse()
                    .map_err(|_| usage(format!("edge {pair:?} has a non-numeric endpoint")))
            };
            Ok((parse(a)?, parse(b)?))
        })
        .collect()
}

/// Builds a graph from a family name and its parameters. Products take their factors from
/// `left` and `right`, each itself a family spec such as `"star 3"`.
pub fn build(
    family: &str,
    params: &[String],
    left: Option<&str>,
    right: Option<&str>,
) -> Result<Graph, CliError> {
    let graph = match family {
        "cartesian" | "categorical" => {
            exact_arity(family, params, 0)?;
            let (Some(l), Some(r)) = (left, right) else {
                return Err(usage(format!("{family} needs --left and --right")));
            };
            let (g, h) = (parse_spec(l)?, parse_spec(r)?);
            if family == "cartesian" {
                cartesian_product(&g, &h)?
            } else {
                categorical_product(&g, &h)?
            }
        }
        _ if left.is_some() || right.is_some() => {
            return Err(usage(format!(
                "--left and --right only apply to products, not {family}"
            )));
        }
        "cayley" => {
            exact_arity(family, params, 1)?;
            unitary_cayley(number(family, params, 0)?)?
        }
        "cycle" => {
            exact_arity(family, params, 1)?;
            cycle(number(family, params, 0)?)?
        }
        "path" => {
            exact_arity(family, params, 1)?;
            path(number(family, params, 0)?)?
        }
        "star" => {
            exact_arity(family, params, 1)?;
            star(number(family, params, 0)?)?
        }
        "hypercube" => {
            exact_arity(family, params, 1)?;
            hypercube(number(family, params, 0)?)?
        }
        "jellyfish" => {
            exact_arity(family, params, 2)?;
            let k = number(family, params, 0)?;
            let pendants = params[1]
                .split(',')
                .map(|p| p.trim().parse())
                .collect::<Result<Vec<usize>, _>>()
                .map_err(|_| usage("jellyfish pendant counts must be numbers"))?;
            jellyfish(k, &pendants)?
        }
        "random-tree" => {
            exact_arity(family, params, 2)?;
            let mut rng = ChaCha8Rng::seed_from_u64(number(family, params, 1)?);
            random_tree(number(family, params, 0)?, &mut rng)?
        }
        "tree" => {
            exact_arity(family, params, 1)?;
            tree_from_edges(&edge_list(&params[0])?)?
        }
        _ => {
            return Err(usage(format!(
                "unknown family {family:?}; expected {FAMILIES}"
            )))
        }
    };
    Ok(graph)
}

/// A non-product family written as one string, e.g. `"cycle 8"`.
pub fn parse_spec(spec: &str) -> Result<Graph, CliError> {
    let mut words = spec.split_whitespace().map(str::to_owned);
    let family = words.next().ok_or_else(|| usage("empty family spec"))?;
    let params: Vec<String> = words.collect();
    build(&family, &params, None, None)
}

/// A graph file in Graph JSON, or a bare edge list `[[u, v], ..]` on vertices `0..=max`.
pub fn read_graph(path: &std::path::Path) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    if text.trim_start().starts_with('[') {
        let edges: Vec<[usize; 2]> = serde_json::from_str(&text)
            .map_err(|e| usage(format!("{}: malformed edge list: {e}", path.display())))?;
        let n = edges.iter().flatten().max().map_or(0, |&v| v + 1);
        return Ok(Graph::from_edges(
            n,
            edges.into_iter().map(|[a, b]| (a, b)),
        )?);
    }
    Graph::from_json_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}
