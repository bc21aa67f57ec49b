use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::Args;
use cupstack::graph::PathPartition;
use cupstack::{build_family, Family, Graph};

/// Where a graph comes from: an edge-list file or a family descriptor.
#[derive(Args, Debug, Clone)]
pub struct GraphInput {
    /// Edge-list file ("n m" header, then one "u v" per line).
    #[arg(long, conflicts_with = "family")]
    pub graph: Option<PathBuf>,
    /// Family descriptor such as `hypercube:4`, `biwheel:24:1,9,17` or `f10`.
    #[arg(long)]
    pub family: Option<String>,
}

pub struct Loaded {
    pub graph: Graph,
    pub name: String,
    pub family: Option<Family>,
}

impl GraphInput {
    pub fn load(&self) -> Result<Loaded> {
        match (&self.graph, &self.family) {
            (Some(path), None) => Ok(Loaded {
                graph: read_graph_file(path)?,
                name: path.display().to_string(),
                family: None,
            }),
            (None, Some(spec)) => load_spec(spec),
            _ => bail!("give exactly one of --graph or --family"),
        }
    }
}

fn read_graph_file(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Graph::parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn load_spec(spec: &str) -> Result<Loaded> {
    let family: Family = spec.parse().with_context(|| format!("family {spec:?}"))?;
    let graph = build_family(&family)?;
    Ok(Loaded {
        graph,
        name: family.to_string(),
        family: Some(family),
    })
}

/// An existing file is read as an edge list, anything else as a family.
pub fn load_file_or_spec(arg: &str) -> Result<Loaded> {
    let path = Path::new(arg);
    if path.is_file() {
        Ok(Loaded {
            graph: read_graph_file(path)?,
            name: arg.to_string(),
            family: None,
        })
    } else {
        load_spec(arg)
    }
}

/// Named parameters for `gen`, turned into a compact descriptor.
#[derive(Args, Debug, Clone, Default)]
pub struct FamilyParams {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    #[arg(long)]
    pub l: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    pub removed: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    pub dims: Vec<usize>,
}

impl FamilyParams {
    /// `name` may already be a full descriptor, in which case it is returned.
    pub fn descriptor(&self, name: &str) -> Result<String> {
        if name.contains(':') {
            return Ok(name.to_string());
        }
        let need = |v: Option<usize>, flag: &str| v.with_context(|| format!("{name} needs --{flag}"));
        let list = |xs: &[usize]| xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        Ok(match name {
            "path" | "cycle" | "complete" | "star" | "f" => format!("{name}:{}", need(self.n, "n")?),
            "hypercube" => format!("hypercube:{}", need(self.d, "d")?),
            "kab" | "complete-bipartite" => format!("kab:{},{}", need(self.a, "a")?, need(self.b, "b")?),
            "kneser" => format!("kneser:{},{}", need(self.n, "n")?, need(self.k, "k")?),
            "johnson" => format!(
                "johnson:{},{},{}",
                need(self.n, "n")?,
                need(self.k, "k")?,
                need(self.s, "s")?
            ),
            "biwheel" if self.removed.is_empty() => format!("biwheel:{}", need(self.l, "l")?),
            "biwheel" => format!("biwheel:{}:{}", need(self.l, "l")?, list(&self.removed)),
            "grid" if !self.dims.is_empty() => format!("grid:{}", list(&self.dims)),
            _ if name.parse::<Family>().is_ok() => name.to_string(),
            _ => bail!("family {name:?} takes a compact descriptor, e.g. `cactus:5:path:2`"),
        })
    }
}

/// Parses `0,1,2;3,4,5` into paths.
pub fn parse_partition(g: &Graph, text: &str) -> Result<PathPartition> {
    let paths = text
        .split(';')
        .map(|p| {
            p.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<usize>()
                        .with_context(|| format!("bad vertex {x:?}"))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PathPartition::new(g, paths)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_params() {
        let p = FamilyParams {
            d: Some(4),
            ..Default::default()
        };
        assert_eq!(p.descriptor("hypercube").unwrap(), "hypercube:4");
        let p = FamilyParams {
            l: Some(24),
            removed: vec![1, 9, 17],
            ..Default::default()
        };
        assert_eq!(p.descriptor("biwheel").unwrap(), "biwheel:24:1,9,17");
        assert_eq!(
            FamilyParams::default().descriptor("petersen").unwrap(),
            "petersen"
        );
        assert!(FamilyParams::default().descriptor("kneser").is_err());
    }
}
