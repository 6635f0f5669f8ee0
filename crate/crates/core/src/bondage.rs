//! Exact bondage number by increasing-cardinality edge-subset search.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::domination::domination_number;
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeList, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BondageResult {
    pub b: usize,
    /// Edges whose removal raises the domination number, `|witness| == b`.
    pub witness: EdgeList,
    pub gamma_before: usize,
    pub gamma_after: usize,
}

/// Hartnell–Rall bound: the minimum over edges `uv` of
/// `d(u) + d(v) - 1 - |N(u) ∩ N(v)|`.
pub fn hr_bound(g: &Graph) -> Result<usize> {
    g.edges()
        .iter()
        .map(|e| {
            let du = g.neighbors(e.u).len();
            let dv = g.neighbors(e.v).len();
            Ok(du + dv - 1 - g.common_neighbors(e.u, e.v)?)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .min()
        .ok_or(Error::Edgeless)
}

/// Searches a connected graph with at least one edge. Returns `None` when no
/// subset of at most `budget` edges raises the domination number.
fn connected_bondage(g: &Graph, budget: usize) -> Option<(EdgeList, usize)> {
    let gamma = domination_number(g).size();
    let edges = g.edges();
    for k in 1..=budget.min(edges.len()) {
        for subset in edges.iter().copied().combinations(k) {
            let reduced = g.remove_edges(&subset).expect("subset of the edge set");
            let after = domination_number(&reduced).size();
            if after > gamma {
                return Some((subset, after));
            }
        }
    }
    None
}

/// Exact bondage number. `budget` caps the subset size searched and defaults
/// to the Hartnell–Rall bound of each component, which always suffices.
///
/// Disconnected graphs are solved per component (components without edges
/// are skipped) and the minimum is returned; the witness uses the ids of `g`.
pub fn bondage_number(g: &Graph, budget: Option<usize>) -> Result<BondageResult> {
    if g.m() == 0 {
        return Err(Error::Edgeless);
    }
    if budget == Some(0) {
        return Err(Error::InvalidArgument(
            "bondage budget must be positive".into(),
        ));
    }
    let mut best: Option<EdgeList> = None;
    let mut exhausted_budget = 0;
    for comp in g.components().into_iter().filter(|c| c.graph.m() > 0) {
        let mut cap = match budget {
            Some(b) => b,
            None => hr_bound(&comp.graph)?,
        };
        if let Some(found) = &best {
            // only a strictly smaller witness can improve the minimum
            if found.len() == 1 {
                break;
            }
            cap = cap.min(found.len() - 1);
        }
        match connected_bondage(&comp.graph, cap) {
            Some((local, _)) => {
                let witness = local
                    .iter()
                    .map(|e| Edge::new(comp.to_parent[e.u], comp.to_parent[e.v]))
                    .collect();
                best = Some(witness);
            }
            None => exhausted_budget = exhausted_budget.max(cap),
        }
    }
    let witness = best.ok_or(Error::BondageBudgetExhausted {
        budget: exhausted_budget,
    })?;
    let gamma_before = domination_number(g).size();
    let gamma_after = domination_number(&g.remove_edges(&witness)?).size();
    Ok(BondageResult {
        b: witness.len(),
        witness,
        gamma_before,
        gamma_after,
    })
}
