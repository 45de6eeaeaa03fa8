//! Plain-text edge lists: one `u v` pair per line, `#` starts a comment.
//!
//! Labels are arbitrary whitespace-free tokens. They are mapped to dense ids
//! in sorted order (integers by value, then everything else by bytes), so
//! the ids do not depend on line order and re-serializing a parsed list is
//! stable.

use std::collections::HashMap;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A parsed graph together with the original label of every vertex id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl LabeledGraph {
    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn id_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

pub fn parse_edge_list(text: &str) -> Result<LabeledGraph> {
    let mut ids: HashMap<&str, usize> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    let mut seen_edges: HashMap<(usize, usize), usize> = HashMap::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.len() {
            0 => continue,
            2 => {}
            k => {
                return Err(Error::Parse {
                    line,
                    message: format!("expected two vertex labels, found {k}"),
                })
            }
        }
        let u = intern(tokens[0], &mut ids, &mut labels);
        let v = intern(tokens[1], &mut ids, &mut labels);
        if u == v {
            return Err(Error::Parse {
                line,
                message: format!("self-loop on vertex {}", tokens[0]),
            });
        }
        if let Some(first) = seen_edges.insert((u.min(v), u.max(v)), line) {
            return Err(Error::Parse {
                line,
                message: format!(
                    "duplicate edge {} {} (first given on line {first})",
                    tokens[0], tokens[1]
                ),
            });
        }
        edges.push((u, v));
    }
    let mut order: Vec<usize> = (0..labels.len()).collect();
    order.sort_by(|&a, &b| label_key(&labels[a]).cmp(&label_key(&labels[b])));
    let mut rank = vec![0; labels.len()];
    for (r, &old) in order.iter().enumerate() {
        rank[old] = r;
    }
    let edges: Vec<_> = edges.into_iter().map(|(u, v)| (rank[u], rank[v])).collect();
    let labels: Vec<String> = order
        .into_iter()
        .map(|old| std::mem::take(&mut labels[old]))
        .collect();
    let graph = Graph::from_edges(labels.len(), &edges)?;
    Ok(LabeledGraph { graph, labels })
}

fn label_key(label: &str) -> (bool, u64, &str) {
    match label.parse::<u64>() {
        Ok(v) => (false, v, label),
        Err(_) => (true, 0, label),
    }
}

fn intern<'a>(tok: &'a str, ids: &mut HashMap<&'a str, usize>, labels: &mut Vec<String>) -> usize {
    *ids.entry(tok).or_insert_with(|| {
        labels.push(tok.to_string());
        labels.len() - 1
    })
}

/// Serializes edges in lexicographic id order, one per line.
pub fn write_edge_list(graph: &Graph, labels: Option<&[String]>) -> String {
    let mut out = String::new();
    for (u, v) in graph.edges() {
        match labels {
            Some(l) => writeln!(out, "{} {}", l[u], l[v]),
            None => writeln!(out, "{u} {v}"),
        }
        .expect("writing to a String cannot fail");
    }
    out
}
