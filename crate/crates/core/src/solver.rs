//! Exact IDS checking, exact minimum search, and the vertex-cover bound.
//!
//! A set `D` is an IDS exactly when no two distinct valid profiles agree on
//! every vertex of `D`, i.e. when restricting the valid set to `D` is
//! injective. A colliding pair is the certificate that `D` is not an IDS.

use std::collections::HashMap;

use serde_json::json;

use crate::combos::find_first_combination;
use crate::error::{Error, Result};
use crate::graph::{is_vertex_cover, Graph, VertexId, VertexSet};
use crate::profiles::{enumerate_with, EnumerationConfig, OpinionProfile, ValidProfileSet};
use crate::transform::{collapse_ids, odd_transform};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub is_ids: bool,
    /// Two distinct valid profiles that agree on the checked set.
    pub witness: Option<(OpinionProfile, OpinionProfile)>,
    pub profiles_examined: usize,
}

impl CheckResult {
    pub fn to_json(&self, g: &Graph, d: &VertexSet) -> serde_json::Value {
        json!({
            "set": d.labels(g),
            "is_ids": self.is_ids,
            "witness": self.witness.as_ref().map(|(a, b)| [a.to_string(), b.to_string()]),
            "profiles_examined": self.profiles_examined,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MidsResult {
    pub set: VertexSet,
    pub size: usize,
    pub optimal: bool,
    pub subsets_tested: u128,
    /// `Some(k)` when a size bound was given and no IDS of size <= k exists;
    /// `set` is then the full vertex set and `size` the graph order.
    pub none_within: Option<usize>,
}

impl MidsResult {
    pub fn to_json(&self, g: &Graph) -> serde_json::Value {
        json!({
            "set": self.set.labels(g),
            "size": self.size,
            "optimal": self.optimal,
            "subsets_tested": self.subsets_tested.to_string(),
            "none_within": self.none_within,
        })
    }
}

fn complete_set(g: &Graph, u: Option<&ValidProfileSet>, config: &EnumerationConfig) -> Result<ValidProfileSet> {
    match u {
        Some(u) => {
            if u.graph_size() != g.vertex_count() {
                return Err(Error::SizeMismatch {
                    expected: g.vertex_count(),
                    actual: u.graph_size(),
                });
            }
            if !u.is_complete() {
                return Err(Error::IncompleteProfileSet);
            }
            Ok(u.clone())
        }
        None => {
            let set = enumerate_with(
                g,
                &EnumerationConfig {
                    cap: None,
                    ..*config
                },
            )?;
            Ok(set)
        }
    }
}

/// True iff `mask & dmask` is distinct across `masks`. `scratch` is reused
/// between calls.
pub(crate) fn separates(masks: &[u64], dmask: u64, scratch: &mut Vec<u64>) -> bool {
    scratch.clear();
    scratch.extend(masks.iter().map(|&m| m & dmask));
    scratch.sort_unstable();
    scratch.windows(2).all(|w| w[0] != w[1])
}

/// Lexicographically least `(a, b)`, `a < b`, with equal restriction to `dmask`.
pub(crate) fn first_collision(masks: &[u64], dmask: u64) -> Option<(u64, u64)> {
    let mut groups: HashMap<u64, (u64, Option<u64>)> = HashMap::new();
    // masks ascend, so the first two arrivals per key are its two smallest
    for &m in masks {
        groups
            .entry(m & dmask)
            .and_modify(|g| {
                if g.1.is_none() {
                    g.1 = Some(m);
                }
            })
            .or_insert((m, None));
    }
    groups
        .into_values()
        .filter_map(|(a, b)| b.map(|b| (a, b)))
        .min()
}

pub fn check_ids(g: &Graph, d: &VertexSet, u: Option<&ValidProfileSet>) -> Result<CheckResult> {
    check_ids_with(g, d, u, &EnumerationConfig::default())
}

pub fn check_ids_with(
    g: &Graph,
    d: &VertexSet,
    u: Option<&ValidProfileSet>,
    config: &EnumerationConfig,
) -> Result<CheckResult> {
    d.check_size(g.vertex_count())?;
    let u = complete_set(g, u, config)?;
    let dmask = d.to_mask().expect("enumerable graphs have at most 64 vertices");
    let n = g.vertex_count();
    let witness = first_collision(u.masks(), dmask).map(|(a, b)| {
        (
            OpinionProfile::from_mask(n, a),
            OpinionProfile::from_mask(n, b),
        )
    });
    Ok(CheckResult {
        is_ids: witness.is_none(),
        witness,
        profiles_examined: u.len(),
    })
}

pub fn solve_mids_exact(g: &Graph, max_size: Option<usize>) -> Result<MidsResult> {
    solve_mids_exact_with(g, max_size, &EnumerationConfig::default())
}

/// Smallest IDS by exhaustive search: sizes ascend, and within a size
/// subsets are tried in lexicographic order, so the answer is the
/// lexicographically least minimum IDS. Isolated vertices belong to every
/// IDS and are fixed before the search.
pub fn solve_mids_exact_with(g: &Graph, max_size: Option<usize>, config: &EnumerationConfig) -> Result<MidsResult> {
    let u = complete_set(g, None, config)?;
    solve_mids_from(g, &u, max_size)
}

/// As [`solve_mids_exact`], reusing an already enumerated valid set.
pub fn solve_mids_from(g: &Graph, u: &ValidProfileSet, max_size: Option<usize>) -> Result<MidsResult> {
    let u = complete_set(g, Some(u), &EnumerationConfig::default())?;
    let n = g.vertex_count();
    let (forced, free): (Vec<VertexId>, Vec<VertexId>) = (0..n).partition(|&v| g.neighbors(v).is_empty());
    let forced_mask = forced.iter().fold(0u64, |m, &v| m | 1 << v);
    let masks = u.masks();
    let limit = max_size.unwrap_or(n);

    let mut tested: u128 = 0;
    for k in 0..=free.len() {
        if forced.len() + k > limit {
            break;
        }
        let hit = find_first_combination(free.len(), k, |combo| {
            let dmask = combo.iter().fold(forced_mask, |m, &i| m | 1 << free[i]);
            separates(masks, dmask, &mut Vec::with_capacity(masks.len()))
        });
        match hit {
            Some((rank, combo)) => {
                tested += rank + 1;
                let set = VertexSet::new(n, forced.iter().copied().chain(combo.iter().map(|&i| free[i])))?;
                return Ok(MidsResult {
                    size: set.len(),
                    set,
                    optimal: true,
                    subsets_tested: tested,
                    none_within: None,
                });
            }
            None => tested += crate::combos::binomial(free.len(), k),
        }
    }
    // only reachable with a bound below the optimum
    Ok(MidsResult {
        set: VertexSet::full(n),
        size: n,
        optimal: false,
        subsets_tested: tested,
        none_within: Some(limit),
    })
}

/// Vertex-cover test on an odd-degree graph. A cover there is always an
/// IDS; the converse does not hold.
pub fn vc_sufficient_check(g_odd: &Graph, d: &VertexSet) -> Result<bool> {
    d.check_size(g_odd.vertex_count())?;
    if let Some(v) = (0..g_odd.vertex_count()).find(|&v| g_odd.neighbors(v).len().is_multiple_of(2)) {
        return Err(Error::NotOddDegree(v));
    }
    Ok(is_vertex_cover(g_odd, d))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpperBound {
    pub set: VertexSet,
    /// False when the graph was too large to verify by enumeration.
    pub verified: bool,
}

impl UpperBound {
    pub fn to_json(&self, g: &Graph) -> serde_json::Value {
        json!({
            "set": self.set.labels(g),
            "size": self.set.len(),
            "optimal": false,
            "verified": self.verified,
        })
    }
}

/// Maximal-matching cover of the odd transform, pruned of redundant
/// vertices (highest ids first), collapsed back onto the original vertices.
/// An upper bound on the minimum IDS size with no ratio guarantee.
pub fn vc_upper_bound(g: &Graph, config: &EnumerationConfig) -> Result<UpperBound> {
    let (gp, map) = odd_transform(g);
    let mut in_cover = vec![false; gp.vertex_count()];
    for (a, b) in gp.edges() {
        if !in_cover[a] && !in_cover[b] {
            in_cover[a] = true;
            in_cover[b] = true;
        }
    }
    for v in (0..gp.vertex_count()).rev() {
        if in_cover[v] && gp.neighbors(v).iter().all(|&u| in_cover[u]) {
            in_cover[v] = false;
        }
    }
    let cover = VertexSet::new(gp.vertex_count(), (0..gp.vertex_count()).filter(|&v| in_cover[v]))?;
    let set = collapse_ids(&map, &cover)?;
    if config.check(g).is_err() {
        return Ok(UpperBound { set, verified: false });
    }
    let result = check_ids_with(g, &set, None, config)?;
    if !result.is_ids {
        return Err(Error::Internal(format!(
            "collapsed cover {} is not an IDS",
            set.display(g)
        )));
    }
    Ok(UpperBound { set, verified: true })
}
