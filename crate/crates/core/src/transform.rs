//! Odd-degree transformation: every even-degree vertex gets one pendant
//! auxiliary neighbor, so that no vertex of the result can see a tied
//! neighborhood. Valid profiles of the two graphs correspond one to one
//! (auxiliaries copy their host's opinion).

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, VertexId, VertexSet};
use crate::profiles::{is_valid_profile, OpinionProfile};

/// Host/auxiliary correspondence. Auxiliary ids follow the original ids in
/// host order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformMap {
    original_count: usize,
    aux_of: BTreeMap<VertexId, VertexId>,
    host_of: BTreeMap<VertexId, VertexId>,
}

#[derive(Serialize, Deserialize)]
struct TransformMapJson {
    aux_of: BTreeMap<String, VertexId>,
}

impl TransformMap {
    pub fn original_count(&self) -> usize {
        self.original_count
    }

    pub fn transformed_count(&self) -> usize {
        self.original_count + self.aux_of.len()
    }

    pub fn aux_of(&self, host: VertexId) -> Option<VertexId> {
        self.aux_of.get(&host).copied()
    }

    pub fn host_of(&self, aux: VertexId) -> Option<VertexId> {
        self.host_of.get(&aux).copied()
    }

    pub fn is_auxiliary(&self, v: VertexId) -> bool {
        v >= self.original_count
    }

    /// `(host, aux)` pairs in host order.
    pub fn pairs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.aux_of.iter().map(|(&h, &a)| (h, a))
    }

    /// `{"aux_of": {"<host id>": <aux id>, ...}}`
    pub fn to_json(&self) -> serde_json::Value {
        let doc = TransformMapJson {
            aux_of: self.aux_of.iter().map(|(h, a)| (h.to_string(), *a)).collect(),
        };
        serde_json::to_value(doc).expect("map serializes")
    }

    /// Maps an original-graph vertex set to the same ids in G′.
    pub fn lift_set(&self, d: &VertexSet) -> Result<VertexSet> {
        d.check_size(self.original_count)?;
        VertexSet::new(self.transformed_count(), d.iter().copied())
    }
}

pub fn odd_transform(g: &Graph) -> (Graph, TransformMap) {
    let n = g.vertex_count();
    let mut builder = GraphBuilder::new();
    for label in g.labels() {
        builder.add_vertex(label.clone()).expect("labels of a graph are unique");
    }
    for (a, b) in g.edges() {
        builder.add_edge(a, b).expect("edges of a graph are simple");
    }
    let mut taken: HashSet<String> = g.labels().iter().cloned().collect();
    let mut aux_of = BTreeMap::new();
    let mut host_of = BTreeMap::new();
    for host in (0..n).filter(|&v| g.neighbors(v).len().is_multiple_of(2)) {
        let mut label = format!("{}+aux", g.label(host));
        while taken.contains(label.as_str()) {
            label.push_str("+aux");
        }
        taken.insert(label.clone());
        let aux = builder.add_vertex(label).expect("auxiliary label is fresh");
        builder.add_edge(host, aux).expect("auxiliary edge is new");
        aux_of.insert(host, aux);
        host_of.insert(aux, host);
    }
    (
        builder.build(),
        TransformMap {
            original_count: n,
            aux_of,
            host_of,
        },
    )
}

pub fn lift_profile(m: &TransformMap, p: &OpinionProfile) -> Result<OpinionProfile> {
    if p.graph_size() != m.original_count {
        return Err(Error::SizeMismatch {
            expected: m.original_count,
            actual: p.graph_size(),
        });
    }
    let mut bits = p.bits().to_vec();
    bits.extend(m.aux_of.keys().map(|&host| p.get(host)));
    Ok(OpinionProfile::from_bits(bits))
}

/// Restricts a valid G′ profile to the original vertices.
///
/// `transformed` is G′ itself; it is only consulted when an auxiliary
/// disagrees with its host, to tell an invalid input from a broken
/// correspondence.
pub fn project_profile(m: &TransformMap, transformed: &Graph, p: &OpinionProfile) -> Result<OpinionProfile> {
    if p.graph_size() != m.transformed_count() {
        return Err(Error::SizeMismatch {
            expected: m.transformed_count(),
            actual: p.graph_size(),
        });
    }
    if m.pairs().any(|(host, aux)| p.get(host) != p.get(aux)) {
        return Err(if is_valid_profile(transformed, p)? {
            Error::Internal("valid transformed profile with an auxiliary disagreeing with its host".into())
        } else {
            Error::InvalidProfile
        });
    }
    Ok(OpinionProfile::from_bits(p.bits()[..m.original_count].to_vec()))
}

/// Replaces every auxiliary in `d` by its host.
pub fn collapse_ids(m: &TransformMap, d: &VertexSet) -> Result<VertexSet> {
    d.check_size(m.transformed_count())?;
    VertexSet::new(
        m.original_count,
        d.iter().map(|&v| m.host_of(v).unwrap_or(v)),
    )
}

#[cfg(test)]
pub(crate) fn lift_mask(m: &TransformMap, mask: u64) -> u64 {
    m.pairs()
        .fold(mask, |acc, (host, aux)| acc | ((mask >> host & 1) << aux))
}
