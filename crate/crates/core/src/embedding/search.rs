//! Largest Euler characteristic over all rotation systems of a graph.
//!
//! Reversing every rotation preserves the face structure, so exhaustive
//! enumeration pins the rotation at one vertex of degree 3 when there is one
//! (its two cyclic orders are mirror images). With signatures allowed, the
//! signatures of a spanning tree are fixed to `+1` since vertex switching
//! makes any other choice equivalent. A seeded hill
//! climb runs first; reaching the Euler upper bound ends the search early.

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::faces::FaceCounter;
use super::rotation::{DartIndex, RotationSystem};
use crate::error::{Error, Result};
use crate::graph::Graph;

const HILL_CLIMB_SEED: u64 = 0x6a09_e667_f3bc_c908;
const HILL_CLIMB_CAP: u128 = 5_000;
const SAMPLED_ORDERS: usize = 24;

/// Upper bound on the Euler characteristic of any 2-cell embedding of a
/// connected graph: every face of a graph with a cycle has degree at least
/// the girth, and orientable characteristics are even.
pub fn euler_upper_bound(g: &Graph, orientable: bool) -> i64 {
    let (n, m) = (g.n() as i64, g.m() as i64);
    let Some(girth) = g.girth().finite() else {
        return 2;
    };
    let bound = (n - m + 2 * m / girth as i64).min(2);
    if orientable {
        bound - bound.rem_euclid(2)
    } else {
        bound
    }
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).fold(1u128, |acc, x| acc.saturating_mul(x))
}

fn fixed_vertex(g: &Graph) -> Option<usize> {
    (0..g.n()).find(|&v| g.neighbors(v).len() == 3)
}

fn cotree_edges(g: &Graph) -> Vec<usize> {
    let mut in_tree = vec![false; g.m()];
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                in_tree[g.edge_index(crate::graph::Edge::new(v, w)).expect("edge")] = true;
                stack.push(w);
            }
        }
    }
    (0..g.m()).filter(|&e| !in_tree[e]).collect()
}

/// Number of evaluations an exhaustive search performs.
pub fn rotation_count(g: &Graph, allow_signatures: bool) -> u128 {
    if g.n() == 0 {
        return 0;
    }
    let fixed = fixed_vertex(g);
    let rotations = (0..g.n())
        .filter(|&v| Some(v) != fixed)
        .map(|v| factorial(g.neighbors(v).len().saturating_sub(1)))
        .fold(1u128, |acc, x| acc.saturating_mul(x));
    if allow_signatures && g.m() + 1 >= g.n() {
        let cotree = (g.m() + 1 - g.n()) as u32;
        rotations.saturating_mul(1u128.checked_shl(cotree).unwrap_or(u128::MAX))
    } else {
        rotations
    }
}

struct Workspace {
    idx: DartIndex,
    counter: FaceCounter,
    orientable: bool,
    evaluations: u128,
}

impl Workspace {
    fn set_rotation(&mut self, v: usize, darts: &[usize]) {
        self.idx.rot[v].copy_from_slice(darts);
        for (i, &d) in darts.iter().enumerate() {
            self.idx.pos[d] = i;
        }
    }

    fn faces(&mut self) -> usize {
        self.evaluations += 1;
        self.counter.count(&self.idx, self.orientable)
    }
}

/// Maximum of `n - m + f` over every rotation system (and, with
/// `allow_signatures`, every edge signature) of a connected graph.
///
/// Fails with [`Error::RotationBudgetExceeded`] when the hill climb does not
/// reach the Euler upper bound and an exhaustive search would need more
/// than `budget` evaluations.
pub fn max_euler_characteristic(g: &Graph, budget: u128, allow_signatures: bool) -> Result<i64> {
    max_euler_characteristic_seeded(g, budget, allow_signatures, HILL_CLIMB_SEED)
}

/// [`max_euler_characteristic`] with an explicit seed for the hill climb.
/// The seed only affects how quickly an optimal embedding is found (and so
/// whether a search over budget can still succeed), never a returned value.
pub fn max_euler_characteristic_seeded(
    g: &Graph,
    budget: u128,
    allow_signatures: bool,
    seed: u64,
) -> Result<i64> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.m() + 1 == g.n() {
        return Ok(2);
    }
    let (n, m) = (g.n() as i64, g.m() as i64);
    let orientable = !allow_signatures;
    let upper = euler_upper_bound(g, orientable);
    let target = (upper - n + m) as usize;
    let total = rotation_count(g, allow_signatures);

    let idx = DartIndex::new(g, &RotationSystem::sorted(g));
    let mut ws = Workspace {
        counter: FaceCounter::new(idx.darts()),
        idx,
        orientable,
        evaluations: 0,
    };
    let fixed = fixed_vertex(g);
    let free: Vec<usize> = (0..g.n())
        .filter(|&v| Some(v) != fixed && g.neighbors(v).len() >= 3)
        .collect();
    let cotree = if allow_signatures {
        cotree_edges(g)
    } else {
        Vec::new()
    };

    let climb_cap = if total <= budget {
        (total / 4).min(HILL_CLIMB_CAP)
    } else {
        budget
    };
    let mut best = hill_climb(&mut ws, &free, &cotree, target, climb_cap, seed);
    if best == target {
        return Ok(upper);
    }
    if total > budget {
        return Err(Error::RotationBudgetExceeded {
            needed: total,
            budget,
            best_found: Some(n - m + best as i64),
        });
    }

    let choices: Vec<Vec<Vec<usize>>> = free
        .iter()
        .map(|&v| {
            let base = ws.idx.rot[v].clone();
            base[1..]
                .iter()
                .copied()
                .permutations(base.len() - 1)
                .map(|rest| std::iter::once(base[0]).chain(rest).collect())
                .collect()
        })
        .collect();
    for sig in ws.idx.sig.iter_mut() {
        *sig = 1;
    }
    for (k, &v) in free.iter().enumerate() {
        ws.set_rotation(v, &choices[k][0]);
    }
    let mut digits = vec![0usize; free.len()];
    'outer: loop {
        if allow_signatures {
            for mask in 0u64..(1u64 << cotree.len()) {
                for (bit, &e) in cotree.iter().enumerate() {
                    ws.idx.sig[e] = if mask >> bit & 1 == 1 { -1 } else { 1 };
                }
                best = best.max(ws.faces());
                if best == target {
                    break 'outer;
                }
            }
        } else {
            best = best.max(ws.faces());
            if best == target {
                break;
            }
        }
        // odometer step
        let mut k = 0;
        loop {
            if k == free.len() {
                break 'outer;
            }
            digits[k] += 1;
            if digits[k] == choices[k].len() {
                digits[k] = 0;
                ws.set_rotation(free[k], &choices[k][0]);
                k += 1;
            } else {
                ws.set_rotation(free[k], &choices[k][digits[k]]);
                break;
            }
        }
    }
    Ok(n - m + best as i64)
}

fn hill_climb(
    ws: &mut Workspace,
    free: &[usize],
    cotree: &[usize],
    target: usize,
    cap: u128,
    seed: u64,
) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = ws.faces();
    while best < target && ws.evaluations < cap {
        for &v in free {
            let mut darts = ws.idx.rot[v].clone();
            darts[1..].shuffle(&mut rng);
            ws.set_rotation(v, &darts);
        }
        for &e in cotree {
            ws.idx.sig[e] = if rng.gen_bool(0.5) { -1 } else { 1 };
        }
        let mut current = ws.faces();
        let mut stale_sweeps = 0;
        while stale_sweeps < 3 && current < target && ws.evaluations < cap {
            let before = current;
            for &v in free {
                let keep = ws.idx.rot[v].clone();
                let d = keep.len();
                let candidates: Vec<Vec<usize>> = if factorial(d - 1) <= SAMPLED_ORDERS as u128 {
                    keep[1..]
                        .iter()
                        .copied()
                        .permutations(d - 1)
                        .map(|rest| std::iter::once(keep[0]).chain(rest).collect())
                        .collect()
                } else {
                    (0..SAMPLED_ORDERS)
                        .map(|_| {
                            let mut c = keep.clone();
                            c[1..].shuffle(&mut rng);
                            c
                        })
                        .collect()
                };
                let mut chosen = keep;
                for cand in candidates {
                    ws.set_rotation(v, &cand);
                    let f = ws.faces();
                    // sideways moves help cross plateaus
                    if f > current || (f == current && rng.gen_bool(0.3)) {
                        current = f;
                        chosen = cand;
                    }
                }
                ws.set_rotation(v, &chosen);
                for &e in cotree {
                    ws.idx.sig[e] = -ws.idx.sig[e];
                    let f = ws.faces();
                    if f > current {
                        current = f;
                    } else {
                        ws.idx.sig[e] = -ws.idx.sig[e];
                    }
                }
                best = best.max(current);
                if best >= target || ws.evaluations >= cap {
                    return best;
                }
            }
            if current > before {
                stale_sweeps = 0;
            } else {
                stale_sweeps += 1;
            }
        }
        best = best.max(current);
    }
    best
}
