use std::path::Path;

use gamma2::families::{self, AbelianCayleySpec, PermCayleySpec};
use gamma2::graph::{parse_edge_list, parse_json};
use gamma2::{Error, Graph, Result};

/// A loaded graph plus interior markers when the family is a truncation.
pub struct Loaded {
    pub graph: Graph,
    pub interior: Option<Vec<usize>>,
}

impl From<Graph> for Loaded {
    fn from(graph: Graph) -> Self {
        Self { graph, interior: None }
    }
}

pub const FAMILY_HELP: &str = "\
families:
  hypercube N | complete N | cycle N | path N | path-truncated N
  slice N K | middle-slice N | dyck N | tree D DEPTH | petersen
  sn-special N | sn-transpositions N
  abelian ORDERS GEN... e.g. `abelian 3x3 1,0 0,1` or `abelian 9 2 3`";

fn num(args: &[String], i: usize, family: &str) -> Result<usize> {
    let raw = args
        .get(i)
        .ok_or_else(|| Error::InvalidParameter(format!("{family}: missing parameter {}", i + 1)))?;
    raw.parse()
        .map_err(|_| Error::InvalidParameter(format!("{family}: '{raw}' is not a non-negative integer")))
}

fn arity(args: &[String], want: usize, family: &str) -> Result<()> {
    if args.len() != want {
        return Err(Error::InvalidParameter(format!(
            "{family} takes {want} parameter(s), got {}",
            args.len()
        )));
    }
    Ok(())
}

fn tuple<T: std::str::FromStr>(raw: &str, sep: char, what: &str) -> Result<Vec<T>> {
    raw.split(sep)
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad {what} '{raw}'")))
        })
        .collect()
}

/// Builds a graph from `family param...`.
pub fn family(spec: &[String]) -> Result<Loaded> {
    let (name, args) = spec
        .split_first()
        .ok_or_else(|| Error::InvalidParameter("no family given".into()))?;
    let name = name.as_str();
    let one = |f: fn(usize) -> Result<Graph>| -> Result<Loaded> {
        arity(args, 1, name)?;
        Ok(f(num(args, 0, name)?)?.into())
    };
    match name {
        "hypercube" => one(families::hypercube),
        "complete" => one(families::complete),
        "cycle" => one(families::cycle),
        "path" => one(families::path),
        "middle-slice" => one(families::middle_slice_adjacent),
        "dyck" => one(families::dyck),
        "sn-special" => one(families::sn_special),
        "sn-transpositions" => {
            arity(args, 1, name)?;
            Ok(families::perm_cayley(&PermCayleySpec::all_transpositions(num(args, 0, name)?))?.into())
        }
        "petersen" => {
            arity(args, 0, name)?;
            Ok(families::petersen().into())
        }
        "slice" => {
            arity(args, 2, name)?;
            Ok(families::slice(num(args, 0, name)?, num(args, 1, name)?)?.into())
        }
        "path-truncated" => {
            arity(args, 1, name)?;
            let t = families::path_truncated(num(args, 0, name)?)?;
            Ok(Loaded {
                graph: t.graph,
                interior: Some(t.interior),
            })
        }
        "tree" => {
            arity(args, 2, name)?;
            let t = families::tree(num(args, 0, name)?, num(args, 1, name)?)?;
            Ok(Loaded {
                graph: t.graph,
                interior: Some(t.interior),
            })
        }
        "abelian" => {
            let (orders, gens) = args
                .split_first()
                .ok_or_else(|| Error::InvalidParameter("abelian: missing group orders".into()))?;
            let orders: Vec<usize> = tuple(orders, 'x', "group orders")?;
            let gens = gens
                .iter()
                .map(|g| tuple(g, ',', "generator"))
                .collect::<Result<Vec<Vec<i64>>>>()?;
            Ok(families::abelian_cayley(&AbelianCayleySpec::new(orders, gens))?.into())
        }
        other => Err(Error::InvalidParameter(format!(
            "unknown family '{other}'\n{FAMILY_HELP}"
        ))),
    }
}

/// Reads an edge list or, for `.json` files or text starting with `{`, a
/// JSON graph. Unnamed graphs take the file stem as name.
pub fn file(path: &Path) -> Result<Loaded> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidParameter(format!("cannot read {}: {e}", path.display())))?;
    let is_json = path.extension().is_some_and(|e| e == "json") || text.trim_start().starts_with('{');
    let g = if is_json {
        parse_json(&text)?
    } else {
        parse_edge_list(&text)?
    };
    let g = match (g.name().is_some(), path.file_stem()) {
        (false, Some(stem)) => {
            let stem = stem.to_string_lossy().into_owned();
            g.with_name(stem)
        }
        _ => g,
    };
    Ok(g.into())
}

pub fn load(input: Option<&Path>, spec: &[String]) -> Result<Loaded> {
    match (input, spec.is_empty()) {
        (Some(p), true) => file(p),
        (None, false) => family(spec),
        (Some(_), false) => Err(Error::InvalidParameter(
            "give either --input or a family, not both".into(),
        )),
        (None, true) => Err(Error::InvalidParameter(format!("no input graph\n{FAMILY_HELP}"))),
    }
}
