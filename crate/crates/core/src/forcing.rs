//! The color-change rule, its closure, forcing traces and the compound
//! feasibility predicates.
//!
//! Rule: a black vertex with exactly one white neighbor turns that neighbor
//! black. The closure (the fixpoint of repeatedly applying the rule) does not
//! depend on the order in which eligible forces fire, so [`closure`] uses a
//! work queue keyed on white-neighbor counts while [`closure_rescan`] keeps
//! the naive lowest-index rescan as an independent reference route.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// A chronicle of one deterministic run of the color-change rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcingTrace {
    /// The initial black set.
    pub initial: VertexSet,
    /// Fired forces as `(forcer, forced)` pairs, in firing order under the
    /// deterministic schedule (lowest-index eligible forcer first, rescanning
    /// after every force).
    pub forces: Vec<(usize, usize)>,
    /// The closure of `initial`.
    pub final_set: VertexSet,
}

/// Fixpoint of the color-change rule from `black`, via a work queue that
/// tracks the white-neighbor count of every vertex and decrements on each
/// force. Always a superset of `black`.
pub fn closure(g: &Graph, black: &VertexSet) -> VertexSet {
    let n = g.order();
    let mut black = black.clone();
    let white = black.complement();

    let mut white_count: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).intersection_len(&white) as u32)
        .collect();

    let mut queue: Vec<usize> =
        black.iter().filter(|&v| white_count[v] == 1).collect();

    while let Some(u) = queue.pop() {
        if white_count[u] != 1 {
            continue; // stale entry
        }
        let v = g
            .neighbors(u)
            .iter()
            .find(|&w| !black.contains(w))
            .expect("white-neighbor count said one neighbor is white");
        black.insert(v);
        for w in g.neighbors(v).iter() {
            white_count[w] -= 1;
            if white_count[w] == 1 && black.contains(w) {
                queue.push(w);
            }
        }
        if white_count[v] == 1 {
            queue.push(v);
        }
    }
    black
}

/// Naive closure: rescan all vertices for an eligible force, fire the first,
/// repeat. Kept as the reference route for the queue-based [`closure`].
pub fn closure_rescan(g: &Graph, black: &VertexSet) -> VertexSet {
    let mut black = black.clone();
    while let Some((_, v)) = first_eligible_force(g, &black) {
        black.insert(v);
    }
    black
}

fn first_eligible_force(g: &Graph, black: &VertexSet) -> Option<(usize, usize)> {
    let white = black.complement();
    for u in black.iter() {
        let candidates = g.neighbors(u).intersection(&white);
        if candidates.len() == 1 {
            return Some((u, candidates.first().unwrap()));
        }
    }
    None
}

/// Runs the deterministic schedule (lowest-index eligible forcer first,
/// rescanning after each force) and records every force.
pub fn trace(g: &Graph, black: &VertexSet) -> ForcingTrace {
    let initial = black.clone();
    let mut black = black.clone();
    let mut forces = Vec::new();
    while let Some((u, v)) = first_eligible_force(g, &black) {
        forces.push((u, v));
        black.insert(v);
    }
    ForcingTrace {
        initial,
        forces,
        final_set: black,
    }
}

/// Is `s` a zero forcing set (closure reaches every vertex)?
pub fn is_zfs(g: &Graph, s: &VertexSet) -> bool {
    closure(g, s).len() == g.order()
}

/// Is `s` a connected zero forcing set? Errors on disconnected graphs; the
/// connected variants are only defined on connected input here.
pub fn is_czfs(g: &Graph, s: &VertexSet) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    Ok(is_zfs(g, s) && g.induced_connected(s))
}

/// Is `s` simultaneously dominating and zero forcing?
pub fn is_dom_forcing(g: &Graph, s: &VertexSet) -> bool {
    g.is_dominating(s) && is_zfs(g, s)
}

/// Is `s` dominating, zero forcing, and connected-inducing? Errors on
/// disconnected graphs.
pub fn is_connected_dom_forcing(g: &Graph, s: &VertexSet) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    Ok(g.is_dominating(s) && g.induced_connected(s) && is_zfs(g, s))
}
