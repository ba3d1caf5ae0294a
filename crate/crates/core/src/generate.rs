//! Random instances for tests, benchmarks and the `random` subcommand.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;

/// Erdős–Rényi G(n, p) with labels `v1..vn`.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("generated edges are simple")
}

/// Random recursive tree: vertex `v` attaches to a uniform earlier vertex.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    random_forest(n, 1.0, rng)
}

/// Like [`random_tree`], but each vertex after the first attaches only with
/// probability `attach`, otherwise starting a new component.
pub fn random_forest<R: Rng + ?Sized>(n: usize, attach: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        if rng.gen_bool(attach) {
            edges.push((rng.gen_range(0..v), v));
        }
    }
    Graph::from_edges(n, &edges).expect("generated edges are simple")
}

/// A G(n, p) sample repaired to have every degree odd by toggling edges
/// between pairs of even-degree vertices. `n` must be even.
pub fn random_odd_degree<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    assert!(n.is_multiple_of(2), "odd-degree graphs have an even number of vertices");
    let mut adj = vec![vec![false; n]; n];
    for (a, b) in (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))) {
        if rng.gen_bool(p) {
            adj[a][b] = true;
            adj[b][a] = true;
        }
    }
    let mut even: Vec<usize> = (0..n)
        .filter(|&v| adj[v].iter().filter(|&&e| e).count().is_multiple_of(2))
        .collect();
    even.shuffle(rng);
    for pair in even.chunks(2) {
        let (a, b) = (pair[0], pair[1]);
        adj[a][b] = !adj[a][b];
        adj[b][a] = !adj[b][a];
    }
    let edges: Vec<_> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| adj[a][b])
        .collect();
    Graph::from_edges(n, &edges).expect("generated edges are simple")
}
