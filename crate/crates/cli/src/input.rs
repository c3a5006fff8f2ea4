//! Graph sources accepted on the command line.

use std::fs;
use std::path::PathBuf;

use clap::Args;
use eccspec::families::Family;
use eccspec::{parse_graph6, Error, Graph};

use crate::Failure;

#[derive(Debug, Args)]
#[group(required = false, multiple = false)]
pub struct GraphInput {
    /// graph6 string
    #[arg(long, value_name = "GRAPH6")]
    pub g6: Option<String>,
    /// family string, e.g. `cs:7,3`, `windmill:3,2`, `mixed:1,-2,3`
    #[arg(long, value_name = "FAMILY")]
    pub family: Option<String>,
    /// edge-list file: `n m`, then `m` lines `u v` (0-indexed)
    #[arg(long, value_name = "PATH")]
    pub edges: Option<PathBuf>,
}

impl GraphInput {
    pub fn is_given(&self) -> bool {
        self.g6.is_some() || self.family.is_some() || self.edges.is_some()
    }

    pub fn load(&self) -> Result<Graph, Failure> {
        if let Some(s) = &self.g6 {
            return parse_graph6(s).map_err(Failure::from);
        }
        if let Some(s) = &self.family {
            let family: Family = s.parse()?;
            return family.build().map_err(Failure::from);
        }
        if let Some(path) = &self.edges {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
            return parse_edge_list(&text).map_err(Failure::from);
        }
        Err(Failure::usage("one of --g6, --family or --edges is required"))
    }
}

/// `n m` header then `m` lines `u v`. Blank lines are skipped; error
/// positions are 1-based line numbers.
pub fn parse_edge_list(text: &str) -> Result<Graph, Error> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let parse_pair = |line_no: usize, line: &str| -> Result<(usize, usize), Error> {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let bad = |message: String| Error::Parse { position: line_no + 1, message };
        if fields.len() != 2 {
            return Err(bad(format!("expected two integers, found {} fields", fields.len())));
        }
        let a = fields[0].parse().map_err(|_| bad(format!("not a non-negative integer: {:?}", fields[0])))?;
        let b = fields[1].parse().map_err(|_| bad(format!("not a non-negative integer: {:?}", fields[1])))?;
        Ok((a, b))
    };
    let (header_no, header) = lines.next().ok_or(Error::Parse { position: 1, message: "empty edge list".into() })?;
    let (n, m) = parse_pair(header_no, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines.by_ref().take(m) {
        let (u, v) = parse_pair(line_no, line)?;
        if u >= n || v >= n || u == v {
            return Err(Error::Parse { position: line_no + 1, message: format!("invalid edge {u} {v} for {n} vertices") });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse { position: text.lines().count() + 1, message: format!("expected {m} edges, found {}", edges.len()) });
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(Error::Parse { position: line_no + 1, message: "trailing content after the edge list".into() });
    }
    Graph::from_edges(n, &edges)
}
