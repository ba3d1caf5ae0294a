//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the enumeration or checking code under test.

#![allow(dead_code)]

use ids_core::Graph;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn two_triangles() -> Graph {
    Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap()
}

/// Every opinion assignment checked vertex by vertex against the rule.
pub fn naive_valid_profiles(g: &Graph) -> Vec<u64> {
    let n = g.vertex_count();
    assert!(n < 32, "oracle is meant for small graphs");
    (0..1u64 << n)
        .filter(|&mask| {
            (0..n).all(|v| {
                let mine = mask >> v & 1;
                let mut same = 0;
                let mut opposite = 0;
                for &u in g.neighbors(v) {
                    if mask >> u & 1 == mine {
                        same += 1;
                    } else {
                        opposite += 1;
                    }
                }
                same >= opposite
            })
        })
        .collect()
}

/// Pairwise comparison over all valid profiles.
pub fn naive_is_ids(valid: &[u64], set_mask: u64) -> bool {
    for (i, &a) in valid.iter().enumerate() {
        for &b in &valid[i + 1..] {
            if a & set_mask == b & set_mask {
                return false;
            }
        }
    }
    true
}

pub fn masks_by_size(n: usize) -> Vec<u64> {
    let mut all: Vec<u64> = (0..1u64 << n).collect();
    // lexicographic on sorted member lists: containing the smallest id wins
    all.sort_by_key(|m| (m.count_ones(), std::cmp::Reverse(m.reverse_bits())));
    all
}

pub fn naive_min_ids(g: &Graph) -> usize {
    let valid = naive_valid_profiles(g);
    (0..1u64 << g.vertex_count())
        .filter(|&m| naive_is_ids(&valid, m))
        .map(u64::count_ones)
        .min()
        .unwrap() as usize
}

pub fn covers(g: &Graph, mask: u64) -> bool {
    g.edges().all(|(a, b)| mask >> a & 1 == 1 || mask >> b & 1 == 1)
}

pub fn dominates(g: &Graph, mask: u64) -> bool {
    (0..g.vertex_count()).all(|v| mask >> v & 1 == 1 || g.neighbors(v).iter().any(|&u| mask >> u & 1 == 1))
}

pub fn min_vertex_cover_size(g: &Graph) -> usize {
    (0..1u64 << g.vertex_count())
        .filter(|&m| covers(g, m))
        .map(u64::count_ones)
        .min()
        .unwrap() as usize
}

pub fn minimum_dominating_sets(g: &Graph) -> Vec<u64> {
    let all: Vec<u64> = (0..1u64 << g.vertex_count()).filter(|&m| dominates(g, m)).collect();
    let best = all.iter().map(|m| m.count_ones()).min().unwrap();
    all.into_iter().filter(|m| m.count_ones() == best).collect()
}

pub fn random_gnp(n: usize, p: f64, rng: &mut StdRng) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_forest(n: usize, rng: &mut StdRng) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        if rng.gen_bool(0.85) {
            edges.push((rng.gen_range(0..v), v));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn mask_of(ids: &[usize]) -> u64 {
    ids.iter().fold(0, |m, &v| m | 1 << v)
}
