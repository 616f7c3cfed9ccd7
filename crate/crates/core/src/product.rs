//! Graph products: join, corona (plain, generalized, iterated), rooted
//! product, Cartesian product and the splitting graph.
//!
//! Labelings, with g = |V(G)| and h = |V(H)|:
//! * `join`: G on `0..g`, H on `g..g+h`, all cross edges added.
//! * `corona`: G on `0..g`; copy i of H occupies `g + i*h ..`, fully joined
//!   to vertex i of G. Order g*(h+1).
//! * `generalized_corona`: like corona with one attachment graph per vertex
//!   of G, at cumulative offsets.
//! * `rooted_product`: copy i of H occupies `i*h ..` with its root as the
//!   copy's designated vertex; the edges of G are drawn between roots.
//!   Order g*h.
//! * `cartesian`: vertex (u, v) has index `u*h + v`.
//! * `splitting`: the shadow v' of v has index `g + v` and is joined to all
//!   neighbors of v in G. Order 2g.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn require_nonempty(g: &Graph) -> Result<()> {
    if g.order() == 0 {
        Err(Error::EmptyGraph)
    } else {
        Ok(())
    }
}

/// The join of two graphs: their disjoint union plus every edge between them.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    require_nonempty(g)?;
    require_nonempty(h)?;
    let (gn, hn) = (g.order(), h.order());
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.extend(h.edges().map(|(u, v)| (gn + u, gn + v)));
    for u in 0..gn {
        for v in 0..hn {
            edges.push((u, gn + v));
        }
    }
    Graph::from_edges(gn + hn, edges)
}

/// The corona of G with H: one copy of G, |V(G)| copies of H, all vertices of
/// the i-th copy joined to vertex i of G.
pub fn corona(g: &Graph, h: &Graph) -> Result<Graph> {
    require_nonempty(h)?;
    let copies: Vec<&Graph> = (0..g.order()).map(|_| h).collect();
    generalized_corona(g, &copies)
}

/// The generalized corona: attachment graph `hs[i]` is fully joined to
/// vertex i of G. Requires exactly one attachment graph per vertex of G.
pub fn generalized_corona(g: &Graph, hs: &[&Graph]) -> Result<Graph> {
    require_nonempty(g)?;
    let gn = g.order();
    if hs.len() != gn {
        return Err(Error::OperandCountMismatch {
            expected: gn,
            got: hs.len(),
        });
    }
    for h in hs {
        require_nonempty(h)?;
    }
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    let mut offset = gn;
    for (i, h) in hs.iter().enumerate() {
        edges.extend(h.edges().map(|(u, v)| (offset + u, offset + v)));
        for v in 0..h.order() {
            edges.push((i, offset + v));
        }
        offset += h.order();
    }
    Graph::from_edges(offset, edges)
}

/// The k-fold iterated corona: one corona for k = 1, then corona of the
/// previous result with H again.
pub fn iterated_corona(g: &Graph, h: &Graph, k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::InvalidParameter {
            what: "iterated_corona",
            message: alloc::format!("need k >= 1, got {k}"),
        });
    }
    let mut out = corona(g, h)?;
    for _ in 1..k {
        out = corona(&out, h)?;
    }
    Ok(out)
}

/// The rooted product of G by a sequence of rooted graphs, one per vertex of
/// G: the root of the i-th rooted graph is identified with vertex i.
pub fn rooted_product_sequence(g: &Graph, rooted: &[(&Graph, usize)]) -> Result<Graph> {
    require_nonempty(g)?;
    let gn = g.order();
    if rooted.len() != gn {
        return Err(Error::OperandCountMismatch {
            expected: gn,
            got: rooted.len(),
        });
    }
    let mut offsets = Vec::with_capacity(gn);
    let mut total = 0;
    for &(h, root) in rooted {
        require_nonempty(h)?;
        if root >= h.order() {
            return Err(Error::RootOutOfRange {
                root,
                order: h.order(),
            });
        }
        offsets.push(total);
        total += h.order();
    }
    let mut edges = Vec::new();
    for (i, &(h, _)) in rooted.iter().enumerate() {
        edges.extend(h.edges().map(|(u, v)| (offsets[i] + u, offsets[i] + v)));
    }
    for (u, v) in g.edges() {
        let ru = offsets[u] + rooted[u].1;
        let rv = offsets[v] + rooted[v].1;
        edges.push((ru, rv));
    }
    Graph::from_edges(total, edges)
}

/// The rooted product of G by one repeated rooted graph H.
pub fn rooted_product(g: &Graph, h: &Graph, root: usize) -> Result<Graph> {
    let rooted: Vec<(&Graph, usize)> = (0..g.order()).map(|_| (h, root)).collect();
    rooted_product_sequence(g, &rooted)
}

/// The Cartesian product: (u, v) adjacent to (u', v') iff u = u' and vv' is
/// an edge of H, or v = v' and uu' is an edge of G.
pub fn cartesian(g: &Graph, h: &Graph) -> Result<Graph> {
    require_nonempty(g)?;
    require_nonempty(h)?;
    let (gn, hn) = (g.order(), h.order());
    let mut edges = Vec::new();
    for u in 0..gn {
        for (v, w) in h.edges() {
            edges.push((u * hn + v, u * hn + w));
        }
    }
    for (u, w) in g.edges() {
        for v in 0..hn {
            edges.push((u * hn + v, w * hn + v));
        }
    }
    Graph::from_edges(gn * hn, edges)
}

/// The splitting graph S(G): for each vertex v add a shadow v' joined to all
/// neighbors of v.
pub fn splitting(g: &Graph) -> Result<Graph> {
    require_nonempty(g)?;
    let gn = g.order();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for v in 0..gn {
        for u in g.neighbors(v).iter() {
            edges.push((gn + v, u));
        }
    }
    Graph::from_edges(2 * gn, edges)
}

/// A product instance with concrete operands, mirroring the CLI surface.
#[derive(Clone, Debug)]
pub enum ProductSpec {
    Join { a: Graph, b: Graph },
    Corona { a: Graph, b: Graph },
    GeneralizedCorona { a: Graph, parts: Vec<Graph> },
    IteratedCorona { a: Graph, b: Graph, k: usize },
    RootedProduct { a: Graph, b: Graph, root: usize },
    Cartesian { a: Graph, b: Graph },
    Splitting { a: Graph },
}

impl ProductSpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            ProductSpec::Join { a, b } => join(a, b),
            ProductSpec::Corona { a, b } => corona(a, b),
            ProductSpec::GeneralizedCorona { a, parts } => {
                let refs: Vec<&Graph> = parts.iter().collect();
                generalized_corona(a, &refs)
            }
            ProductSpec::IteratedCorona { a, b, k } => iterated_corona(a, b, *k),
            ProductSpec::RootedProduct { a, b, root } => rooted_product(a, b, *root),
            ProductSpec::Cartesian { a, b } => cartesian(a, b),
            ProductSpec::Splitting { a } => splitting(a),
        }
    }
}
