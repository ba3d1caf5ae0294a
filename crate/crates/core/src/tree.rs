//! Linear-time IDS checking and minimization on forests.
//!
//! On an odd-degree forest an IDS with no leaf is a vertex cover, and any
//! IDS can be made leaf-free without growing (a leaf always shares its
//! neighbor's opinion). A minimum vertex cover that avoids leaves is
//! therefore a minimum IDS, and the classic leaves-upward greedy finds one.
//!
//! Single-edge components are the exception: both endpoints are leaves.
//! Either endpoint alone is a minimum IDS there; the smaller id is used.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{is_forest, Graph, VertexId, VertexSet};
use crate::solver::MidsResult;
use crate::transform::{collapse_ids, odd_transform};

/// Rooted traversal of a forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreePlan {
    /// One root per component: its smallest non-leaf vertex, or its
    /// smallest vertex when every vertex is a leaf (K1, K2).
    pub roots: Vec<VertexId>,
    /// Every vertex after all of its descendants.
    pub order: Vec<VertexId>,
    pub parent: Vec<Option<VertexId>>,
    pub is_leaf: Vec<bool>,
    /// Vertices visited plus adjacency entries scanned while planning.
    pub operations: usize,
}

impl TreePlan {
    pub fn new(g: &Graph) -> Result<Self> {
        if !is_forest(g) {
            return Err(Error::NotForest);
        }
        let n = g.vertex_count();
        let is_leaf: Vec<bool> = (0..n).map(|v| g.neighbors(v).len() == 1).collect();
        let mut component = vec![usize::MAX; n];
        let mut parent = vec![None; n];
        let mut roots = Vec::new();
        let mut bfs = Vec::with_capacity(n);
        let mut queue = VecDeque::new();
        let mut operations = 0;

        // label components first so each root can be picked by id
        let mut members: Vec<Vec<VertexId>> = Vec::new();
        for start in 0..n {
            if component[start] != usize::MAX {
                continue;
            }
            let c = members.len();
            component[start] = c;
            members.push(vec![start]);
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                operations += 1;
                for &u in g.neighbors(v) {
                    operations += 1;
                    if component[u] == usize::MAX {
                        component[u] = c;
                        members[c].push(u);
                        queue.push_back(u);
                    }
                }
            }
        }

        for comp in &members {
            let root = comp
                .iter()
                .copied()
                .filter(|&v| !is_leaf[v] && !g.neighbors(v).is_empty())
                .min()
                .unwrap_or_else(|| *comp.iter().min().expect("components are non-empty"));
            roots.push(root);
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                operations += 1;
                bfs.push(v);
                for &u in g.neighbors(v) {
                    operations += 1;
                    if Some(u) != parent[v] && u != root {
                        parent[u] = Some(v);
                        queue.push_back(u);
                    }
                }
            }
        }
        bfs.reverse();
        Ok(Self {
            roots,
            order: bfs,
            parent,
            is_leaf,
            operations,
        })
    }
}

/// Counts work done by the tree solver.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TreeStats {
    pub operations: usize,
}

fn greedy_cover(g: &Graph, plan: &TreePlan, stats: &mut TreeStats) -> Vec<bool> {
    let mut in_cover = vec![false; g.vertex_count()];
    for &v in &plan.order {
        stats.operations += 1;
        if let Some(p) = plan.parent[v] {
            if !in_cover[v] && !in_cover[p] {
                in_cover[p] = true;
            }
        }
    }
    in_cover
}

/// Minimum vertex cover of a forest containing no leaf, except that a K2
/// component contributes its smaller endpoint.
pub fn nonleaf_mvc_tree(g: &Graph) -> Result<VertexSet> {
    nonleaf_mvc_tree_counted(g, &mut TreeStats::default())
}

fn nonleaf_mvc_tree_counted(g: &Graph, stats: &mut TreeStats) -> Result<VertexSet> {
    let plan = TreePlan::new(g)?;
    stats.operations += plan.operations;
    let in_cover = greedy_cover(g, &plan, stats);
    VertexSet::new(g.vertex_count(), (0..g.vertex_count()).filter(|&v| in_cover[v]))
}

pub fn solve_mids_tree(g: &Graph) -> Result<MidsResult> {
    solve_mids_tree_counted(g).map(|(r, _)| r)
}

/// `solve_mids_tree` plus an operation count, for measuring scaling.
pub fn solve_mids_tree_counted(g: &Graph) -> Result<(MidsResult, TreeStats)> {
    if !is_forest(g) {
        return Err(Error::NotForest);
    }
    let mut stats = TreeStats::default();
    let (gp, map) = odd_transform(g);
    stats.operations += gp.vertex_count() + 2 * gp.edge_count();
    let cover = nonleaf_mvc_tree_counted(&gp, &mut stats)?;
    let set = collapse_ids(&map, &cover)?;
    Ok((
        MidsResult {
            size: set.len(),
            set,
            optimal: true,
            subsets_tested: 0,
            none_within: None,
        },
        stats,
    ))
}

/// Replaces every leaf in `d` by its neighbor, unless that neighbor is a
/// leaf too (a K2 component). Valid in any graph: a degree-1 vertex always
/// shares its neighbor's opinion.
pub fn nonleaf_transform(g: &Graph, d: &VertexSet) -> Result<VertexSet> {
    d.check_size(g.vertex_count())?;
    let is_leaf = |v: VertexId| g.neighbors(v).len() == 1;
    VertexSet::new(
        g.vertex_count(),
        d.iter().map(|&v| {
            if is_leaf(v) && !is_leaf(g.neighbors(v)[0]) {
                g.neighbors(v)[0]
            } else {
                v
            }
        }),
    )
}

/// IDS test on a forest: lift `d` into the odd transform, make it
/// leaf-free, and test whether it covers every edge.
pub fn check_ids_tree(g: &Graph, d: &VertexSet) -> Result<bool> {
    if !is_forest(g) {
        return Err(Error::NotForest);
    }
    d.check_size(g.vertex_count())?;
    let (gp, map) = odd_transform(g);
    let lifted = map.lift_set(d)?;
    let cover = nonleaf_transform(&gp, &lifted)?.membership();
    let covered = gp.edges().all(|(a, b)| cover[a] || cover[b]);
    Ok(covered)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn set(n: usize, ids: &[usize]) -> VertexSet {
        VertexSet::new(n, ids.iter().copied()).unwrap()
    }

    #[test]
    fn plan_orders_children_first() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let plan = TreePlan::new(&g).unwrap();
        assert_eq!(plan.roots, [1]);
        let pos = |v: usize| plan.order.iter().position(|&x| x == v).unwrap();
        for v in 0..5 {
            if let Some(p) = plan.parent[v] {
                assert!(pos(v) < pos(p));
            }
        }
        assert!(plan.is_leaf[0] && plan.is_leaf[4] && !plan.is_leaf[3]);
    }

    #[test]
    fn cover_of_transformed_paths() {
        let (p3p, _) = odd_transform(&path(3));
        assert_eq!(nonleaf_mvc_tree(&p3p).unwrap().members(), [1]);
        let (p4p, _) = odd_transform(&path(4));
        assert_eq!(nonleaf_mvc_tree(&p4p).unwrap().members(), [1, 2]);
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(nonleaf_mvc_tree(&star).unwrap().members(), [0]);
    }

    #[test]
    fn k2_takes_smaller_endpoint() {
        let g = Graph::from_edges(4, &[(2, 3), (0, 1)]).unwrap();
        assert_eq!(nonleaf_mvc_tree(&g).unwrap().members(), [0, 2]);
    }

    #[test]
    fn rejects_cycles() {
        let c3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(matches!(nonleaf_mvc_tree(&c3), Err(Error::NotForest)));
        assert!(matches!(solve_mids_tree(&c3), Err(Error::NotForest)));
        assert!(matches!(check_ids_tree(&c3, &set(3, &[0])), Err(Error::NotForest)));
    }

    #[test]
    fn tree_minimums() {
        let r = solve_mids_tree(&path(3)).unwrap();
        assert_eq!(r.set.members(), [1]);
        assert!(r.optimal);
        assert_eq!(solve_mids_tree(&path(4)).unwrap().set.members(), [1, 2]);
        let lone = solve_mids_tree(&Graph::from_edges(1, &[]).unwrap()).unwrap();
        assert_eq!(lone.set.members(), [0]);
        assert_eq!(solve_mids_tree(&Graph::from_edges(0, &[]).unwrap()).unwrap().size, 0);
    }

    #[test]
    fn tree_checks() {
        assert!(check_ids_tree(&path(4), &set(4, &[0, 2])).unwrap());
        assert!(!check_ids_tree(&path(4), &set(4, &[1])).unwrap());
        assert!(check_ids_tree(&path(3), &set(3, &[0])).unwrap());
        let lone = Graph::from_edges(1, &[]).unwrap();
        assert!(check_ids_tree(&lone, &set(1, &[0])).unwrap());
        assert!(!check_ids_tree(&lone, &set(1, &[])).unwrap());
    }

    #[test]
    fn leaf_replacement() {
        let t = nonleaf_transform(&path(4), &set(4, &[0, 1, 3])).unwrap();
        assert_eq!(t.members(), [1, 2]);
        let k2 = nonleaf_transform(&path(2), &set(2, &[1])).unwrap();
        assert_eq!(k2.members(), [1]);
    }
}
