//! Exact domination number by branch and bound over bit masks.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominatingSet {
    /// Sorted vertex ids.
    pub members: Vec<usize>,
}

impl DominatingSet {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

pub fn is_dominating(g: &Graph, set: &[usize]) -> Result<bool> {
    let mut covered = 0u64;
    for &v in set {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            });
        }
        covered |= g.closed_neighborhood_mask(v);
    }
    Ok(covered == g.vertex_mask())
}

/// Greedy dominating set: repeatedly take the vertex that dominates the most
/// new vertices, lowest id on ties.
pub fn greedy_dominating_set(g: &Graph) -> DominatingSet {
    let closed: Vec<u64> = (0..g.n()).map(|v| g.closed_neighborhood_mask(v)).collect();
    let all = g.vertex_mask();
    let mut covered = 0u64;
    let mut members = Vec::new();
    while covered != all {
        let (best, _) = closed
            .iter()
            .enumerate()
            .map(|(v, &mask)| (v, (mask & !covered).count_ones()))
            .fold(
                (usize::MAX, 0),
                |acc, cur| if cur.1 > acc.1 { cur } else { acc },
            );
        members.push(best);
        covered |= closed[best];
    }
    members.sort_unstable();
    DominatingSet { members }
}

struct Search {
    closed: Vec<u64>,
    all: u64,
    cover_cap: u32,
    best: Vec<usize>,
}

impl Search {
    fn run(&mut self, covered: u64, chosen: &mut Vec<usize>) {
        if covered == self.all {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return;
        }
        let open = self.all & !covered;
        let lower = chosen.len() + open.count_ones().div_ceil(self.cover_cap) as usize;
        if lower >= self.best.len() {
            return;
        }
        // undominated vertex with the fewest candidate dominators, lowest id first
        let mut pick = usize::MAX;
        let mut pick_choices = u32::MAX;
        let mut rest = open;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let choices = self.closed[v].count_ones();
            if choices < pick_choices {
                pick = v;
                pick_choices = choices;
            }
        }
        let mut candidates = self.closed[pick];
        while candidates != 0 {
            let w = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            chosen.push(w);
            self.run(covered | self.closed[w], chosen);
            chosen.pop();
        }
    }
}

/// Minimum dominating set; its size is the domination number.
pub fn domination_number(g: &Graph) -> DominatingSet {
    if g.n() == 0 {
        return DominatingSet {
            members: Vec::new(),
        };
    }
    let greedy = greedy_dominating_set(g);
    let delta = g.max_degree().unwrap_or(0);
    let mut search = Search {
        closed: (0..g.n()).map(|v| g.closed_neighborhood_mask(v)).collect(),
        all: g.vertex_mask(),
        cover_cap: delta as u32 + 1,
        best: greedy.members,
    };
    search.run(0, &mut Vec::new());
    let mut members = search.best;
    members.sort_unstable();
    DominatingSet { members }
}
