//! Seeded random graph generation for the verification suites.

use domforce_core::Graph;
use rand::Rng;

/// G(n, p) over labeled simple graphs.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("sampled edges are simple by construction")
}

/// Uniform over labeled graphs with edge probability 1/2, conditioned on
/// connectivity by rejection.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize) -> Graph {
    loop {
        let g = random_graph(rng, n, 0.5);
        if g.is_connected() {
            return g;
        }
    }
}

/// Uniform random labeled tree via a random Pruefer sequence.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    assert!(n >= 1);
    if n == 1 {
        return Graph::from_edges(1, []).unwrap();
    }
    if n == 2 {
        return Graph::from_edges(2, [(0, 1)]).unwrap();
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // repeatedly join the smallest leaf to the next sequence entry
    let mut leaf_heap: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    for &v in &seq {
        let std::cmp::Reverse(leaf) = leaf_heap.pop().expect("a tree always has a leaf");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
        if degree[v] == 1 {
            leaf_heap.push(std::cmp::Reverse(v));
        }
    }
    let std::cmp::Reverse(a) = leaf_heap.pop().unwrap();
    let std::cmp::Reverse(b) = leaf_heap.pop().unwrap();
    edges.push((a, b));
    Graph::from_edges(n, edges).expect("Pruefer decoding yields a tree")
}
