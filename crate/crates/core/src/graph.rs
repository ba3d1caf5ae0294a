//! Simple undirected graphs with string labels over dense vertex ids.
//!
//! Three external forms are supported: a line-oriented edge list (the
//! canonical input format), a JSON document, and a best-effort DOT export.
//!
//! Edge-list format: one edge per line as two whitespace-separated labels;
//! blank lines and lines starting with `#` are ignored; a line `v <label>`
//! declares a vertex (used for isolated vertices). Labels receive ids in
//! order of first appearance.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense vertex id, `0..vertex_count`.
pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adjacency: Vec<Vec<VertexId>>,
}

fn check_label(label: &str) -> Result<()> {
    if label.is_empty() || label.starts_with('#') || label.chars().any(char::is_whitespace) {
        return Err(Error::InvalidLabel(label.to_string()));
    }
    Ok(())
}

/// Incremental graph construction. Rejects self-loops and duplicate edges.
#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    labels: Vec<String>,
    index: HashMap<String, VertexId>,
    adjacency: Vec<Vec<VertexId>>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// Adds a new vertex. Fails if the label is already present.
    pub fn add_vertex(&mut self, label: impl Into<String>) -> Result<VertexId> {
        let label = label.into();
        check_label(&label)?;
        if self.index.contains_key(&label) {
            return Err(Error::DuplicateLabel(label));
        }
        Ok(self.insert_label(label))
    }

    /// Returns the id for `label`, creating the vertex if needed.
    pub fn vertex(&mut self, label: &str) -> Result<VertexId> {
        if let Some(&id) = self.index.get(label) {
            return Ok(id);
        }
        check_label(label)?;
        Ok(self.insert_label(label.to_string()))
    }

    fn insert_label(&mut self, label: String) -> VertexId {
        let id = self.labels.len();
        self.index.insert(label.clone(), id);
        self.labels.push(label);
        self.adjacency.push(Vec::new());
        id
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.adjacency.get(a).is_some_and(|n| n.contains(&b))
    }

    pub fn add_edge(&mut self, a: VertexId, b: VertexId) -> Result<()> {
        self.add_edge_at(a, b, 0)
    }

    fn add_edge_at(&mut self, a: VertexId, b: VertexId, line: usize) -> Result<()> {
        let size = self.labels.len();
        for id in [a, b] {
            if id >= size {
                return Err(Error::VertexOutOfRange { id, size });
            }
        }
        if a == b {
            return Err(Error::SelfLoop {
                line,
                label: self.labels[a].clone(),
            });
        }
        if self.has_edge(a, b) {
            return Err(Error::DuplicateEdge {
                line,
                a: self.labels[a].clone(),
                b: self.labels[b].clone(),
            });
        }
        self.adjacency[a].push(b);
        self.adjacency[b].push(a);
        Ok(())
    }

    pub fn build(mut self) -> Graph {
        for neighbors in &mut self.adjacency {
            neighbors.sort_unstable();
        }
        Graph {
            labels: self.labels,
            adjacency: self.adjacency,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<[VertexId; 2]>,
}

impl Graph {
    /// Builds a graph with labels `v1..vn` from an edge list over ids.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let labels: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        Self::from_labeled_edges(labels, edges)
    }

    pub fn from_labeled_edges(labels: Vec<String>, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut builder = GraphBuilder::new();
        for label in labels {
            builder.add_vertex(label)?;
        }
        for &(a, b) in edges {
            builder.add_edge(a, b)?;
        }
        Ok(builder.build())
    }

    /// Parses the edge-list format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut builder = GraphBuilder::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = trimmed.split_whitespace().collect();
            let bad = |message: String| Error::Format { line, message };
            match tokens.as_slice() {
                ["v", label] => {
                    builder.vertex(label).map_err(|e| bad(e.to_string()))?;
                }
                [a, b] => {
                    let a = builder.vertex(a).map_err(|e| bad(e.to_string()))?;
                    let b = builder.vertex(b).map_err(|e| bad(e.to_string()))?;
                    builder.add_edge_at(a, b, line)?;
                }
                _ => {
                    return Err(bad(format!(
                        "expected two labels or `v <label>`, found {} token(s)",
                        tokens.len()
                    )))
                }
            }
        }
        Ok(builder.build())
    }

    /// Serializes to the edge-list format. Every vertex is declared up front
    /// so that parsing the output reproduces the same ids.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for label in &self.labels {
            let _ = writeln!(out, "v {label}");
        }
        for (a, b) in self.edges() {
            // `v x` would read as a declaration
            let (first, second) = if self.labels[a] == "v" { (b, a) } else { (a, b) };
            let _ = writeln!(out, "{} {}", self.labels[first], self.labels[second]);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let doc = GraphJson {
            vertices: self.labels.clone(),
            edges: self.edges().map(|(a, b)| [a, b]).collect(),
        };
        serde_json::to_value(doc).expect("graph serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let doc: GraphJson = serde_json::from_value(value.clone())?;
        let edges: Vec<_> = doc.edges.iter().map(|e| (e[0], e[1])).collect();
        Self::from_labeled_edges(doc.vertices, &edges)
    }

    /// DOT rendering for visualization only.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for label in &self.labels {
            let _ = writeln!(out, "  \"{}\";", label.replace('"', "\\\""));
        }
        for (a, b) in self.edges() {
            let _ = writeln!(
                out,
                "  \"{}\" -- \"{}\";",
                self.labels[a].replace('"', "\\\""),
                self.labels[b].replace('"', "\\\"")
            );
        }
        out.push_str("}\n");
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn id_of(&self, label: &str) -> Option<VertexId> {
        self.labels.iter().position(|l| l == label)
    }

    /// Sorted neighbor ids. Panics on an out-of-range id.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.adjacency
            .get(v)
            .map(Vec::len)
            .ok_or(Error::VertexOutOfRange {
                id: v,
                size: self.vertex_count(),
            })
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.adjacency
            .get(a)
            .is_some_and(|n| n.binary_search(&b).is_ok())
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(a, ns)| ns.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
    }

    pub fn is_odd_degree(&self) -> bool {
        self.adjacency.iter().all(|n| n.len() % 2 == 1)
    }

    /// Neighborhoods as bitmasks; `None` above 64 vertices.
    pub fn neighbor_masks(&self) -> Option<Vec<u64>> {
        if self.vertex_count() > 64 {
            return None;
        }
        Some(
            self.adjacency
                .iter()
                .map(|ns| ns.iter().fold(0u64, |m, &u| m | (1 << u)))
                .collect(),
        )
    }

    /// Subgraph induced by `set`, with vertices renumbered in ascending order.
    pub fn induced(&self, set: &VertexSet) -> Graph {
        let mut new_id = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in set.iter().enumerate() {
            new_id[v] = i;
        }
        let adjacency = set
            .iter()
            .map(|&v| {
                self.adjacency[v]
                    .iter()
                    .filter(|&&u| new_id[u] != usize::MAX)
                    .map(|&u| new_id[u])
                    .collect()
            })
            .collect();
        Graph {
            labels: set.iter().map(|&v| self.labels[v].clone()).collect(),
            adjacency,
        }
    }

    /// Resolves labels to a vertex set.
    pub fn vertex_set<S: AsRef<str>>(&self, labels: &[S]) -> Result<VertexSet> {
        let ids = labels
            .iter()
            .map(|l| {
                self.id_of(l.as_ref())
                    .ok_or_else(|| Error::UnknownLabel(l.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        VertexSet::new(self.vertex_count(), ids)
    }
}

/// A set of vertex ids tied to the size of the graph it was built against.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    members: Vec<VertexId>,
    graph_size: usize,
}

impl VertexSet {
    /// Sorts and deduplicates `members`.
    pub fn new(graph_size: usize, members: impl IntoIterator<Item = VertexId>) -> Result<Self> {
        let mut members: Vec<VertexId> = members.into_iter().collect();
        if let Some(&id) = members.iter().find(|&&v| v >= graph_size) {
            return Err(Error::VertexOutOfRange {
                id,
                size: graph_size,
            });
        }
        members.sort_unstable();
        members.dedup();
        Ok(Self {
            members,
            graph_size,
        })
    }

    pub fn empty(graph_size: usize) -> Self {
        Self {
            members: Vec::new(),
            graph_size,
        }
    }

    pub fn full(graph_size: usize) -> Self {
        Self {
            members: (0..graph_size).collect(),
            graph_size,
        }
    }

    pub fn from_mask(graph_size: usize, mask: u64) -> Self {
        let members = (0..graph_size.min(64)).filter(|&v| mask >> v & 1 == 1).collect();
        Self {
            members,
            graph_size,
        }
    }

    /// Bitmask form; `None` if any member is >= 64.
    pub fn to_mask(&self) -> Option<u64> {
        self.members
            .iter()
            .try_fold(0u64, |m, &v| (v < 64).then(|| m | (1 << v)))
    }

    pub fn members(&self) -> &[VertexId] {
        &self.members
    }

    pub fn graph_size(&self) -> usize {
        self.graph_size
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexId> {
        self.members.iter()
    }

    pub fn membership(&self) -> Vec<bool> {
        let mut flags = vec![false; self.graph_size];
        for &v in &self.members {
            flags[v] = true;
        }
        flags
    }

    pub fn labels<'g>(&self, g: &'g Graph) -> Vec<&'g str> {
        self.members.iter().map(|&v| g.label(v)).collect()
    }

    /// `{a,b,c}` using the graph's labels.
    pub fn display(&self, g: &Graph) -> String {
        format!("{{{}}}", self.labels(g).join(","))
    }

    pub(crate) fn check_size(&self, expected: usize) -> Result<()> {
        if self.graph_size != expected {
            return Err(Error::SizeMismatch {
                expected,
                actual: self.graph_size,
            });
        }
        Ok(())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a VertexId;
    type IntoIter = std::slice::Iter<'a, VertexId>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    Graph::parse(text)
}

pub fn degree(g: &Graph, v: VertexId) -> Result<usize> {
    g.degree(v)
}

/// Connected components, each sorted, ordered by smallest member.
pub fn components(g: &Graph) -> Vec<VertexSet> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        queue.push_back(start);
        let mut members = Vec::new();
        while let Some(v) = queue.pop_front() {
            members.push(v);
            for &u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        members.sort_unstable();
        out.push(VertexSet {
            members,
            graph_size: n,
        });
    }
    out
}

pub fn is_vertex_cover(g: &Graph, d: &VertexSet) -> bool {
    let inside = d.membership();
    g.edges().all(|(a, b)| inside[a] || inside[b])
}

pub fn is_forest(g: &Graph) -> bool {
    g.edge_count() + components(g).len() == g.vertex_count()
}
