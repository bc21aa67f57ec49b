//! Plain-text edge lists and DOT export.
//!
//! The edge-list format is ASCII: a header line `n m`, then `m` lines `u v`
//! with 0-based indices. Blank lines and lines starting with `#` are ignored
//! when reading; the writer emits edges sorted with `u < v`.

use std::fmt::Write as _;

use super::{Graph, GraphError};

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize), GraphError> {
    let err = |message: String| GraphError::Parse {
        line: lineno,
        message,
    };
    let mut fields = line.split_whitespace();
    let mut next = || -> Result<usize, GraphError> {
        let field = fields.next().ok_or_else(|| err("expected two integers".into()))?;
        field
            .parse()
            .map_err(|_| err(format!("not a non-negative integer: {field:?}")))
    };
    let pair = (next()?, next()?);
    if fields.next().is_some() {
        return Err(err("trailing fields".into()));
    }
    Ok(pair)
}

impl Graph {
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (lineno, header) = lines.next().ok_or(GraphError::Parse {
            line: 1,
            message: "missing `n m` header".into(),
        })?;
        let (n, m) = parse_pair(header, lineno)?;
        let edges = lines
            .map(|(lineno, l)| parse_pair(l, lineno))
            .collect::<Result<Vec<_>, _>>()?;
        if edges.len() != m {
            return Err(GraphError::Parse {
                line: lineno,
                message: format!("header announces {m} edges, found {}", edges.len()),
            });
        }
        Graph::from_edges(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.edge_count());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Graphviz rendering; `highlight` vertices are drawn filled.
    pub fn to_dot(&self, highlight: &[usize]) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n() {
            let fill = if highlight.contains(&v) {
                ", style=filled, fillcolor=gray"
            } else {
                ""
            };
            let _ = writeln!(out, "  {v} [label=\"{}\"{fill}];", self.label(v));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, Family};

    #[test]
    fn writes_sorted_edges() {
        let g = Graph::from_edges(3, &[(2, 1), (1, 0)]).unwrap();
        assert_eq!(g.to_edge_list(), "3 2\n0 1\n1 2\n");
    }

    #[test]
    fn round_trip_petersen() {
        let g = build_family(&Family::Petersen).unwrap();
        let back = Graph::parse_edge_list(&g.to_edge_list()).unwrap();
        assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = Graph::parse_edge_list("3 2\n0 1\n1 x\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 3, .. }), "{err:?}");
        assert!(Graph::parse_edge_list("3 2\n0 1\n").is_err());
        assert!(Graph::parse_edge_list("").is_err());
        assert!(matches!(
            Graph::parse_edge_list("2 1\n0 0\n"),
            Err(GraphError::SelfLoop(0))
        ));
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let g = Graph::parse_edge_list("# triangle\n3 3\n\n0 1\n1 2\n0 2\n").unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn dot_mentions_every_edge() {
        let g = build_family(&Family::Path(3)).unwrap();
        let dot = g.to_dot(&[1]);
        assert!(dot.contains("0 -- 1;") && dot.contains("1 -- 2;"));
        assert!(dot.contains("1 [label=\"1\", style=filled"));
    }
}
