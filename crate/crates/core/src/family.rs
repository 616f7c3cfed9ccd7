//! Constructors for the named graph families, with documented vertex
//! labelings so that witness sets in reports are reproducible.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::product;

/// A named family instance.
///
/// Labelings:
/// * `Path`/`Cycle`: consecutive 0-based indices.
/// * `Complete`: all pairs.
/// * `CompleteBipartite { m, n }`: left part `0..m`, right part `m..m+n`.
/// * `Star { n }`: hub 0, leaves `1..=n` (the star K_{1,n}, order n+1).
/// * `Wheel { n }`: n vertices total; cycle `0..n-1` plus hub `n-1` joined to
///   every cycle vertex.
/// * `Helm { m }`: cycle `0..m`, hub `m` joined to the cycle, pendant
///   `m+1+i` attached to cycle vertex `i` (order 2m+1).
/// * `Coconut { m, n }`: path `0..m` plus pendants `m..m+n` on vertex `m-1`.
/// * `Hypercube { k }`: binary-word vertices, adjacent at Hamming distance 1.
/// * `Petersen`: outer 5-cycle `0..5`, inner pentagram `5..10`, spokes
///   `i -- i+5`.
/// * `Grid { p, q }` (p <= q): row-major, 1-based coordinate (i, j) maps to
///   index `(i-1)*q + (j-1)`.
/// * `Ladder { n }`: `Grid { p: 2, q: n }`.
/// * `Prism { n }`: Cartesian product of the n-cycle with the 2-path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { m: usize, n: usize },
    Star { n: usize },
    Wheel { n: usize },
    Helm { m: usize },
    Coconut { m: usize, n: usize },
    Hypercube { k: usize },
    Petersen,
    Grid { p: usize, q: usize },
    Ladder { n: usize },
    Prism { n: usize },
}

fn invalid(what: &'static str, message: String) -> Error {
    Error::InvalidParameter { what, message }
}

impl FamilySpec {
    /// Canonical textual id, e.g. `path:6` or `grid:4,5`. Used verbatim as
    /// `graph_id` in reports and accepted by the CLI spec grammar.
    pub fn id(&self) -> String {
        match *self {
            FamilySpec::Path { n } => format!("path:{n}"),
            FamilySpec::Cycle { n } => format!("cycle:{n}"),
            FamilySpec::Complete { n } => format!("complete:{n}"),
            FamilySpec::CompleteBipartite { m, n } => format!("complete_bipartite:{m},{n}"),
            FamilySpec::Star { n } => format!("star:{n}"),
            FamilySpec::Wheel { n } => format!("wheel:{n}"),
            FamilySpec::Helm { m } => format!("helm:{m}"),
            FamilySpec::Coconut { m, n } => format!("coconut:{m},{n}"),
            FamilySpec::Hypercube { k } => format!("hypercube:{k}"),
            FamilySpec::Petersen => String::from("petersen"),
            FamilySpec::Grid { p, q } => format!("grid:{p},{q}"),
            FamilySpec::Ladder { n } => format!("ladder:{n}"),
            FamilySpec::Prism { n } => format!("prism:{n}"),
        }
    }

    /// Builds the labeled graph.
    pub fn build(&self) -> Result<Graph> {
        match *self {
            FamilySpec::Path { n } => path(n),
            FamilySpec::Cycle { n } => cycle(n),
            FamilySpec::Complete { n } => complete(n),
            FamilySpec::CompleteBipartite { m, n } => complete_bipartite(m, n),
            FamilySpec::Star { n } => star(n),
            FamilySpec::Wheel { n } => wheel(n),
            FamilySpec::Helm { m } => helm(m),
            FamilySpec::Coconut { m, n } => coconut(m, n),
            FamilySpec::Hypercube { k } => hypercube(k),
            FamilySpec::Petersen => petersen(),
            FamilySpec::Grid { p, q } => grid(p, q),
            FamilySpec::Ladder { n } => ladder(n),
            FamilySpec::Prism { n } => prism(n),
        }
    }
}

/// The path P_n on vertices 0..n, edges i -- i+1.
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(invalid("path", format!("need n >= 1, got {n}")));
    }
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

/// The cycle C_n, edges i -- (i+1 mod n).
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("cycle", format!("need n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// The complete graph K_n.
pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(invalid("complete", format!("need n >= 1, got {n}")));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges)
}

/// K_{m,n} with left part 0..m and right part m..m+n.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if m < 1 || n < 1 {
        return Err(invalid(
            "complete_bipartite",
            format!("need m, n >= 1, got ({m}, {n})"),
        ));
    }
    let mut edges = Vec::new();
    for u in 0..m {
        for v in 0..n {
            edges.push((u, m + v));
        }
    }
    Graph::from_edges(m + n, edges)
}

/// The star K_{1,n}: hub 0, leaves 1..=n.
pub fn star(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(invalid("star", format!("need n >= 1, got {n}")));
    }
    Graph::from_edges(n + 1, (1..=n).map(|v| (0, v)))
}

/// The wheel W_n on n vertices: a hub connected to every vertex of C_{n-1}.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(invalid("wheel", format!("need n >= 4, got {n}")));
    }
    let c = n - 1;
    let mut edges: Vec<(usize, usize)> = (0..c).map(|v| (v, (v + 1) % c)).collect();
    edges.extend((0..c).map(|v| (v, c)));
    Graph::from_edges(n, edges)
}

/// The helm H_m: an m-cycle, a hub joined to the cycle, and one pendant per
/// cycle vertex. Order 2m+1.
pub fn helm(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(invalid("helm", format!("need m >= 3, got {m}")));
    }
    let hub = m;
    let mut edges: Vec<(usize, usize)> = (0..m).map(|v| (v, (v + 1) % m)).collect();
    edges.extend((0..m).map(|v| (v, hub)));
    edges.extend((0..m).map(|v| (v, m + 1 + v)));
    Graph::from_edges(2 * m + 1, edges)
}

/// The coconut tree CT(m, n): the path P_m with n new pendant edges appended
/// at its end vertex m-1.
pub fn coconut(m: usize, n: usize) -> Result<Graph> {
    if m < 1 || n < 1 {
        return Err(invalid("coconut", format!("need m, n >= 1, got ({m}, {n})")));
    }
    let mut edges: Vec<(usize, usize)> = (1..m).map(|v| (v - 1, v)).collect();
    edges.extend((0..n).map(|i| (m - 1, m + i)));
    Graph::from_edges(m + n, edges)
}

/// The hypercube Q_k: vertices are binary words of length k, adjacent when
/// they differ in exactly one coordinate.
pub fn hypercube(k: usize) -> Result<Graph> {
    if !(1..=10).contains(&k) {
        return Err(invalid("hypercube", format!("need 1 <= k <= 10, got {k}")));
    }
    let n = 1usize << k;
    let mut edges = Vec::new();
    for v in 0..n {
        for bit in 0..k {
            let u = v ^ (1 << bit);
            if v < u {
                edges.push((v, u));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// The Petersen graph in its standard labeling: outer cycle 0..5, inner
/// pentagram 5..10 (i+5 adjacent to ((i+2) mod 5)+5), spokes i -- i+5.
pub fn petersen() -> Result<Graph> {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i + 5, ((i + 2) % 5) + 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, edges)
}

/// Grid coordinate (i, j), 1-based with 1 <= i <= p and 1 <= j <= q, to the
/// row-major index used by [`grid`].
pub fn grid_index(q: usize, i: usize, j: usize) -> usize {
    (i - 1) * q + (j - 1)
}

/// The p x q grid graph (p <= q), row-major labeling.
pub fn grid(p: usize, q: usize) -> Result<Graph> {
    if p < 1 || q < p {
        return Err(invalid("grid", format!("need 1 <= p <= q, got ({p}, {q})")));
    }
    let mut edges = Vec::new();
    for i in 1..=p {
        for j in 1..=q {
            if j < q {
                edges.push((grid_index(q, i, j), grid_index(q, i, j + 1)));
            }
            if i < p {
                edges.push((grid_index(q, i, j), grid_index(q, i + 1, j)));
            }
        }
    }
    Graph::from_edges(p * q, edges)
}

/// The ladder L_n = the 2 x n grid.
pub fn ladder(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(invalid("ladder", format!("need n >= 2, got {n}")));
    }
    grid(2, n)
}

/// The prism C_n x K_2 (Cartesian product of the n-cycle with an edge).
pub fn prism(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("prism", format!("need n >= 3, got {n}")));
    }
    product::cartesian(&cycle(n)?, &path(2)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn wheel_of_order_four_is_complete() {
        let w4 = wheel(4).unwrap();
        let k4 = complete(4).unwrap();
        // same labeled edge set: C_3 plus a universal hub is K_4
        assert_eq!(w4.edges().collect::<Vec<_>>(), k4.edges().collect::<Vec<_>>());
    }

    #[test]
    fn small_grids_and_cubes_are_four_cycles() {
        for g in [grid(2, 2).unwrap(), hypercube(2).unwrap()] {
            assert_eq!(g.order(), 4);
            assert!(g.is_connected());
            assert!(g.vertices().all(|v| g.degree(v) == 2));
        }
    }

    #[test]
    fn helm_structure() {
        let h = helm(4).unwrap();
        assert_eq!(h.order(), 9);
        assert_eq!(h.edge_count(), 12); // 4 cycle + 4 spokes + 4 pendants
        assert_eq!(h.degree(4), 4); // hub
        for pendant in 5..9 {
            assert_eq!(h.degree(pendant), 1);
        }
        for cycle_v in 0..4 {
            assert_eq!(h.degree(cycle_v), 4);
        }
    }

    #[test]
    fn coconut_structure() {
        // CT(3, 2): path 0-1-2 plus pendants 3, 4 on vertex 2
        let ct = coconut(3, 2).unwrap();
        assert_eq!(ct.order(), 5);
        assert_eq!(ct.neighbors(2).to_vec(), vec![1, 3, 4]);
        assert_eq!(ct.degree(0), 1);
    }

    #[test]
    fn petersen_is_cubic_and_connected() {
        let p = petersen().unwrap();
        assert_eq!(p.order(), 10);
        assert_eq!(p.edge_count(), 15);
        assert!(p.vertices().all(|v| p.degree(v) == 3));
        assert!(p.is_connected());
        // girth 5: no two adjacent vertices share a neighbor
        for (u, v) in p.edges() {
            assert_eq!(p.neighbors(u).intersection_len(p.neighbors(v)), 0);
        }
    }

    #[test]
    fn grid_labeling_is_row_major_with_unit_steps() {
        let g = grid(3, 4).unwrap();
        assert_eq!(g.order(), 12);
        // index map is a bijection onto 0..p*q by construction; check the
        // neighbor structure: neighbors differ by exactly one coordinate step
        for i in 1..=3usize {
            for j in 1..=4usize {
                let v = grid_index(4, i, j);
                for u in g.neighbors(v).iter() {
                    let (ui, uj) = (u / 4 + 1, u % 4 + 1);
                    let d = i.abs_diff(ui) + j.abs_diff(uj);
                    assert_eq!(d, 1, "grid neighbors must differ by one step");
                }
                let expected_degree = [i > 1, i < 3, j > 1, j < 4]
                    .iter()
                    .filter(|&&b| b)
                    .count();
                assert_eq!(g.degree(v), expected_degree);
            }
        }
    }

    #[test]
    fn all_families_are_connected_and_satisfy_order_formulas() {
        let cases: Vec<(FamilySpec, usize)> = vec![
            (FamilySpec::Path { n: 7 }, 7),
            (FamilySpec::Cycle { n: 6 }, 6),
            (FamilySpec::Complete { n: 5 }, 5),
            (FamilySpec::CompleteBipartite { m: 2, n: 3 }, 5),
            (FamilySpec::Star { n: 4 }, 5),
            (FamilySpec::Wheel { n: 8 }, 8),
            (FamilySpec::Helm { m: 5 }, 11),
            (FamilySpec::Coconut { m: 4, n: 3 }, 7),
            (FamilySpec::Hypercube { k: 3 }, 8),
            (FamilySpec::Petersen, 10),
            (FamilySpec::Grid { p: 3, q: 5 }, 15),
            (FamilySpec::Ladder { n: 4 }, 8),
            (FamilySpec::Prism { n: 5 }, 10),
        ];
        for (spec, order) in cases {
            let g = spec.build().unwrap();
            assert_eq!(g.order(), order, "{}", spec.id());
            assert!(g.is_connected(), "{} must be connected", spec.id());
        }
    }

    #[test]
    fn parameter_validation() {
        assert!(path(0).is_err());
        assert!(cycle(2).is_err());
        assert!(wheel(3).is_err());
        assert!(helm(2).is_err());
        assert!(grid(3, 2).is_err());
        assert!(ladder(1).is_err());
        assert!(prism(2).is_err());
        assert!(hypercube(0).is_err());
        assert!(hypercube(11).is_err());
        assert!(complete_bipartite(0, 2).is_err());
    }
}
