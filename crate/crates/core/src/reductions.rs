//! Hardness-reduction gadgets and the small exact solvers used to check
//! them on desk-scale instances.
//!
//! * set partition -> strong community bisection: each integer `x` becomes
//!   two `2x`-cliques where position `p` of one clique is joined to every
//!   position `q != p` of the other.
//! * strong community bisection -> IDS check: two copies of an even-degree
//!   graph, each fully joined to its own connector, with the two connectors
//!   adjacent. The candidate set is everything but the connectors.
//! * set partition -> minimum IDS: the composition, with size bound `2k`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::combos::{binomial, find_first_combination};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, VertexId, VertexSet};

pub const DEFAULT_BISECTION_CAP: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerSet {
    values: Vec<u64>,
}

impl IntegerSet {
    pub fn new(values: Vec<u64>) -> Result<Self> {
        if values.contains(&0) {
            return Err(Error::InvalidIntegers("values must be positive".into()));
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn k(&self) -> usize {
        self.values.len()
    }

    pub fn total(&self) -> u64 {
        self.values.iter().sum()
    }
}

impl FromStr for IntegerSet {
    type Err = Error;

    /// Comma- or whitespace-separated positive integers.
    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u64>()
                    .map_err(|e| Error::InvalidIntegers(format!("{t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(values)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GadgetKind {
    Scb,
    Idsc,
    Mids,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CliqueTag {
    C1,
    C2,
}

impl fmt::Display for CliqueTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CliqueTag::C1 => "C1",
            CliqueTag::C2 => "C2",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CliqueSlot {
    /// 1-based index of the integer this vertex encodes.
    pub component: usize,
    pub clique: CliqueTag,
    pub position: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CopyTag {
    G1,
    G2,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GadgetMeta {
    pub kind: GadgetKind,
    pub clique_membership: BTreeMap<VertexId, CliqueSlot>,
    pub connector_ids: Option<[VertexId; 2]>,
    pub copy_membership: BTreeMap<VertexId, CopyTag>,
    pub threshold: Option<usize>,
}

pub fn build_scb_gadget(s: &IntegerSet) -> (Graph, GadgetMeta) {
    let mut builder = GraphBuilder::new();
    let mut clique_membership = BTreeMap::new();
    for (i, &x) in s.values().iter().enumerate() {
        let size = 2 * x as usize;
        let mut ids = [Vec::with_capacity(size), Vec::with_capacity(size)];
        for (side, tag) in [CliqueTag::C1, CliqueTag::C2].into_iter().enumerate() {
            for p in 0..size {
                let id = builder
                    .add_vertex(format!("x{}.{tag}.{p}", i + 1))
                    .expect("gadget labels are unique");
                clique_membership.insert(
                    id,
                    CliqueSlot {
                        component: i + 1,
                        clique: tag,
                        position: p,
                    },
                );
                ids[side].push(id);
            }
        }
        for clique in &ids {
            for a in 0..size {
                for b in a + 1..size {
                    builder.add_edge(clique[a], clique[b]).expect("fresh edge");
                }
            }
        }
        for p in 0..size {
            for q in (0..size).filter(|&q| q != p) {
                builder.add_edge(ids[0][p], ids[1][q]).expect("fresh edge");
            }
        }
    }
    (
        builder.build(),
        GadgetMeta {
            kind: GadgetKind::Scb,
            clique_membership,
            connector_ids: None,
            copy_membership: BTreeMap::new(),
            threshold: None,
        },
    )
}

/// Doubles an even-degree graph around two adjacent connectors. Returns the
/// gadget, the candidate set (all vertices but the connectors) and metadata.
pub fn build_idsc_gadget(g: &Graph) -> Result<(Graph, VertexSet, GadgetMeta)> {
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.neighbors(v).len() % 2 == 1) {
        return Err(Error::NotEvenDegree(v));
    }
    let n = g.vertex_count();
    let mut builder = GraphBuilder::new();
    let mut copy_membership = BTreeMap::new();
    for (tag, prefix) in [(CopyTag::G1, "G1"), (CopyTag::G2, "G2")] {
        for label in g.labels() {
            let id = builder.add_vertex(format!("{prefix}.{label}"))?;
            copy_membership.insert(id, tag);
        }
    }
    let v1 = builder.add_vertex("conn.v1")?;
    let v2 = builder.add_vertex("conn.v2")?;
    for offset in [0, n] {
        for (a, b) in g.edges() {
            builder.add_edge(offset + a, offset + b)?;
        }
    }
    for v in 0..n {
        builder.add_edge(v, v1)?;
        builder.add_edge(n + v, v2)?;
    }
    builder.add_edge(v1, v2)?;
    let gadget = builder.build();
    let candidate = VertexSet::new(gadget.vertex_count(), 0..2 * n)?;
    Ok((
        gadget,
        candidate,
        GadgetMeta {
            kind: GadgetKind::Idsc,
            clique_membership: BTreeMap::new(),
            connector_ids: Some([v1, v2]),
            copy_membership,
            threshold: None,
        },
    ))
}

/// Composition of the two builders; the returned threshold is `2k`.
pub fn build_mids_gadget(s: &IntegerSet) -> (Graph, usize, GadgetMeta) {
    let (inner, inner_meta) = build_scb_gadget(s);
    let n = inner.vertex_count();
    let (gadget, _, mut meta) = build_idsc_gadget(&inner).expect("partition gadgets have even degrees");
    let threshold = 2 * s.k();
    meta.kind = GadgetKind::Mids;
    meta.threshold = Some(threshold);
    meta.clique_membership = inner_meta
        .clique_membership
        .iter()
        .flat_map(|(&v, &slot)| [(v, slot), (n + v, slot)])
        .collect();
    (gadget, threshold, meta)
}

/// An equal-sum split of an [`IntegerSet`], by index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

impl Partition {
    pub fn first_values(&self, s: &IntegerSet) -> Vec<u64> {
        self.first.iter().map(|&i| s.values()[i]).collect()
    }

    pub fn second_values(&self, s: &IntegerSet) -> Vec<u64> {
        self.second.iter().map(|&i| s.values()[i]).collect()
    }
}

/// Subset-sum dynamic program. The first side is the lexicographically
/// least index set reaching half the total, so it contains index 0.
pub fn solve_spp(s: &IntegerSet) -> Option<Partition> {
    let total = s.total();
    if total % 2 == 1 {
        return None;
    }
    let half = (total / 2) as usize;
    let k = s.k();
    // reach[i][t]: items i.. can sum to exactly t
    let mut reach = vec![vec![false; half + 1]; k + 1];
    reach[k][0] = true;
    for i in (0..k).rev() {
        let x = s.values()[i] as usize;
        for t in 0..=half {
            reach[i][t] = reach[i + 1][t] || (t >= x && reach[i + 1][t - x]);
        }
    }
    if !reach[0][half] {
        return None;
    }
    let mut first = Vec::new();
    let mut second = Vec::new();
    let mut t = half;
    for i in 0..k {
        let x = s.values()[i] as usize;
        if t >= x && reach[i + 1][t - x] {
            first.push(i);
            t -= x;
        } else {
            second.push(i);
        }
    }
    Some(Partition { first, second })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bisection {
    pub side_a: VertexSet,
    pub side_b: VertexSet,
}

/// Every vertex has strictly more neighbors on its own side.
pub fn is_strong_bisection(g: &Graph, side_a: &VertexSet) -> bool {
    let inside = side_a.membership();
    (0..g.vertex_count()).all(|v| {
        let internal = g.neighbors(v).iter().filter(|&&u| inside[u] == inside[v]).count();
        2 * internal > g.neighbors(v).len()
    })
}

/// Exhaustive strong-community-bisection search. Vertex 0 is always on
/// `side_a`; the first qualifying split in lexicographic order of `side_a`
/// is returned.
pub fn check_scb(g: &Graph, cap: Option<u128>) -> Result<Option<Bisection>> {
    let n = g.vertex_count();
    if n == 0 || n % 2 == 1 {
        return Err(Error::OddVertexCount(n));
    }
    let cap = cap.unwrap_or(DEFAULT_BISECTION_CAP);
    let required = binomial(n - 1, n / 2 - 1);
    if required > cap {
        return Err(Error::CapExceeded { required, cap });
    }
    let masks = g.neighbor_masks().ok_or(Error::VertexLimit {
        vertices: n,
        limit: 64,
    })?;
    let hit = find_first_combination(n - 1, n / 2 - 1, |combo| {
        let side = combo.iter().fold(1u64, |m, &i| m | 1 << (i + 1));
        masks.iter().enumerate().all(|(v, &nbrs)| {
            let own = if side >> v & 1 == 1 { side } else { !side };
            2 * (nbrs & own).count_ones() > nbrs.count_ones()
        })
    });
    Ok(hit.map(|(_, combo)| {
        let a = VertexSet::new(n, std::iter::once(0).chain(combo.iter().map(|&i| i + 1)))
            .expect("ids in range");
        let b = VertexSet::new(n, (0..n).filter(|&v| !a.contains(v))).expect("ids in range");
        Bisection { side_a: a, side_b: b }
    }))
}
