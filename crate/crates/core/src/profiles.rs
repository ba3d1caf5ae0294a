//! Binary opinion profiles and the local majority rule.
//!
//! A profile is valid when every vertex has at least as many same-minded
//! neighbors as opposite-minded ones. Ties, including degree-0 vertices,
//! allow either opinion.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Default cap on the number of vertices `enumerate_valid_profiles` accepts.
pub const DEFAULT_VERTEX_LIMIT: usize = 26;

/// Profiles are held as `u64` masks internally, so no limit can exceed this.
pub const MAX_VERTEX_LIMIT: usize = 64;

// Below this size a single thread finishes before rayon would help.
const PARALLEL_THRESHOLD: usize = 18;
const SPLIT_DEPTH: usize = 8;

/// One opinion per vertex; bit `v` is the opinion of vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OpinionProfile {
    bits: Vec<bool>,
}

impl OpinionProfile {
    pub fn zeros(graph_size: usize) -> Self {
        Self {
            bits: vec![false; graph_size],
        }
    }

    pub fn ones(graph_size: usize) -> Self {
        Self {
            bits: vec![true; graph_size],
        }
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    /// Vertex 0 is the least significant bit.
    pub fn from_mask(graph_size: usize, mask: u64) -> Self {
        Self {
            bits: (0..graph_size).map(|v| v < 64 && mask >> v & 1 == 1).collect(),
        }
    }

    pub fn to_mask(&self) -> Option<u64> {
        if self.bits.len() > 64 {
            return None;
        }
        Some(
            self.bits
                .iter()
                .enumerate()
                .fold(0, |m, (v, &b)| m | (u64::from(b) << v)),
        )
    }

    pub fn graph_size(&self) -> usize {
        self.bits.len()
    }

    pub fn get(&self, v: VertexId) -> bool {
        self.bits[v]
    }

    pub fn set(&mut self, v: VertexId, opinion: bool) {
        self.bits[v] = opinion;
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }
}

impl fmt::Display for OpinionProfile {
    /// `0`/`1` string, leftmost character is vertex 0.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for OpinionProfile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(i, c)| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Format {
                    line: 1,
                    message: format!("profile character {i} is {other:?}, expected '0' or '1'"),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::from_bits)
    }
}

impl Serialize for OpinionProfile {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn profile_string(graph_size: usize, mask: u64) -> String {
    OpinionProfile::from_mask(graph_size, mask).to_string()
}

pub fn complement_profile(p: &OpinionProfile) -> OpinionProfile {
    OpinionProfile {
        bits: p.bits.iter().map(|b| !b).collect(),
    }
}

pub fn is_valid_profile(g: &Graph, p: &OpinionProfile) -> Result<bool> {
    if p.graph_size() != g.vertex_count() {
        return Err(Error::SizeMismatch {
            expected: g.vertex_count(),
            actual: p.graph_size(),
        });
    }
    Ok((0..g.vertex_count()).all(|v| {
        let same = g.neighbors(v).iter().filter(|&&u| p.get(u) == p.get(v)).count();
        2 * same >= g.neighbors(v).len()
    }))
}

#[cfg(test)]
pub(crate) fn is_valid_mask(neighbor_masks: &[u64], mask: u64) -> bool {
    neighbor_masks.iter().enumerate().all(|(v, &nbrs)| {
        let opposite = if mask >> v & 1 == 1 {
            nbrs & !mask
        } else {
            nbrs & mask
        };
        2 * opposite.count_ones() <= nbrs.count_ones()
    })
}

/// All valid profiles of a graph, as masks in ascending integer order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidProfileSet {
    graph_size: usize,
    masks: Vec<u64>,
    complete: bool,
}

impl ValidProfileSet {
    pub fn graph_size(&self) -> usize {
        self.graph_size
    }

    pub fn masks(&self) -> &[u64] {
        &self.masks
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn contains(&self, mask: u64) -> bool {
        self.masks.binary_search(&mask).is_ok()
    }

    pub fn profiles(&self) -> impl Iterator<Item = OpinionProfile> + '_ {
        self.masks
            .iter()
            .map(|&m| OpinionProfile::from_mask(self.graph_size, m))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "profiles": self.profiles().map(|p| p.to_string()).collect::<Vec<_>>(),
            "complete": self.complete,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub vertex_limit: usize,
    pub cap: Option<usize>,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        Self {
            vertex_limit: DEFAULT_VERTEX_LIMIT,
            cap: None,
        }
    }
}

impl EnumerationConfig {
    pub fn with_limit(vertex_limit: usize) -> Self {
        Self {
            vertex_limit,
            cap: None,
        }
    }

    pub fn check(&self, g: &Graph) -> Result<()> {
        let limit = self.vertex_limit.min(MAX_VERTEX_LIMIT);
        if g.vertex_count() > limit {
            return Err(Error::VertexLimit {
                vertices: g.vertex_count(),
                limit,
            });
        }
        Ok(())
    }
}

pub fn enumerate_valid_profiles(g: &Graph, cap: Option<usize>) -> Result<ValidProfileSet> {
    enumerate_with(
        g,
        &EnumerationConfig {
            cap,
            ..EnumerationConfig::default()
        },
    )
}

/// Backtracking enumeration over vertex ids in ascending order.
///
/// A vertex whose opinion is fixed is pruned once its opposite-minded
/// assigned neighbors outnumber its same-minded assigned neighbors by more
/// than its unassigned neighbors. When a cap truncates the search, the
/// retained profiles are the first `cap` in string order (vertex 0 leftmost).
pub fn enumerate_with(g: &Graph, config: &EnumerationConfig) -> Result<ValidProfileSet> {
    config.check(g)?;
    let n = g.vertex_count();
    let cap = config.cap.unwrap_or(usize::MAX);
    let mut found = Vec::new();

    if n < PARALLEL_THRESHOLD {
        let mut search = Search::new(g);
        search.run(0, n, cap, &mut |m| found.push(m));
    } else {
        let depth = SPLIT_DEPTH.min(n);
        let mut prefixes = Vec::new();
        Search::new(g).run(0, depth, usize::MAX, &mut |m| prefixes.push(m));
        let blocks: Vec<Vec<u64>> = prefixes
            .par_iter()
            .map(|&prefix| {
                let mut search = Search::new(g);
                let mut block = Vec::new();
                if search.replay(prefix, depth) {
                    search.run(depth, n, cap, &mut |m| block.push(m));
                }
                block
            })
            .collect();
        for block in blocks {
            found.extend(block);
            if found.len() >= cap {
                break;
            }
        }
    }

    // the search collects cap + 1 items when more exist
    let complete = found.len() <= cap;
    found.truncate(cap);
    found.sort_unstable();
    Ok(ValidProfileSet {
        graph_size: n,
        masks: found,
        complete,
    })
}

struct Search {
    lower: Vec<Vec<VertexId>>,
    higher_count: Vec<i32>,
    same: Vec<i32>,
    opposite: Vec<i32>,
    remaining: Vec<i32>,
    bits: u64,
}

impl Search {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let lower = (0..n)
            .map(|v| g.neighbors(v).iter().copied().filter(|&u| u < v).collect())
            .collect();
        let higher_count = (0..n)
            .map(|v| g.neighbors(v).iter().filter(|&&u| u > v).count() as i32)
            .collect();
        let remaining = (0..n).map(|v| g.neighbors(v).len() as i32).collect();
        Self {
            lower,
            higher_count,
            same: vec![0; n],
            opposite: vec![0; n],
            remaining,
            bits: 0,
        }
    }

    fn violated(&self, v: VertexId) -> bool {
        self.opposite[v] - self.same[v] > self.remaining[v]
    }

    /// Fixes vertex `v` (all lower ids already fixed). Returns false on a
    /// certain violation; the caller must still `unassign`.
    fn assign(&mut self, v: VertexId, opinion: bool) -> bool {
        if opinion {
            self.bits |= 1 << v;
        }
        self.remaining[v] = self.higher_count[v];
        let mut ok = true;
        for i in 0..self.lower[v].len() {
            let u = self.lower[v][i];
            if (self.bits >> u & 1 == 1) == opinion {
                self.same[u] += 1;
                self.same[v] += 1;
            } else {
                self.opposite[u] += 1;
                self.opposite[v] += 1;
            }
            self.remaining[u] -= 1;
            ok &= !self.violated(u);
        }
        ok && !self.violated(v)
    }

    fn unassign(&mut self, v: VertexId, opinion: bool) {
        for i in 0..self.lower[v].len() {
            let u = self.lower[v][i];
            if (self.bits >> u & 1 == 1) == opinion {
                self.same[u] -= 1;
            } else {
                self.opposite[u] -= 1;
            }
            self.remaining[u] += 1;
        }
        self.same[v] = 0;
        self.opposite[v] = 0;
        self.bits &= !(1 << v);
    }

    /// Re-applies the first `depth` assignments of `prefix`.
    fn replay(&mut self, prefix: u64, depth: usize) -> bool {
        (0..depth).all(|v| self.assign(v, prefix >> v & 1 == 1))
    }

    /// Emits every completion of vertices `v..stop`; stops once more than
    /// `cap` items were emitted. Returns the number emitted.
    fn run(&mut self, v: usize, stop: usize, cap: usize, emit: &mut dyn FnMut(u64)) -> usize {
        let mut emitted = 0;
        self.dfs(v, stop, cap, &mut emitted, emit);
        emitted
    }

    fn dfs(&mut self, v: usize, stop: usize, cap: usize, emitted: &mut usize, emit: &mut dyn FnMut(u64)) {
        if v == stop {
            emit(self.bits);
            *emitted += 1;
            return;
        }
        for opinion in [false, true] {
            if *emitted > cap {
                return;
            }
            if self.assign(v, opinion) {
                self.dfs(v + 1, stop, cap, emitted, emit);
            }
            self.unassign(v, opinion);
        }
    }
}
