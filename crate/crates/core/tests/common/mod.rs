//! Brute-force oracles that share no code with the library's algorithms.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use bondage_core::embedding::RotationSystem;
use bondage_core::{graph6, Graph};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn data(name: &str) -> String {
    let path = format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

pub fn catalog(name: &str) -> Vec<Graph> {
    graph6::decode_all(&data(name)).expect("catalog parses")
}

/// Every graph on up to seven vertices, one per isomorphism class.
pub fn small_graphs() -> Vec<Graph> {
    catalog("graphs_n1-7.g6")
}

pub fn planar_flags() -> Vec<bool> {
    data("graphs_n1-7.planar")
        .lines()
        .map(|l| l.trim() == "1")
        .collect()
}

/// K5, K6, K3,3, Petersen.
pub fn named() -> Vec<Graph> {
    catalog("named.g6")
}

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

pub fn edge_pairs(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().iter().map(|e| (e.u, e.v)).collect()
}

/// Minimum dominating set size by trying all 2^n vertex subsets.
pub fn brute_gamma_edges(n: usize, edges: &[(usize, usize)]) -> usize {
    let adj = adjacency(n, edges);
    let mut best = n;
    for set in 0u32..(1 << n) {
        let size = set.count_ones() as usize;
        if size >= best {
            continue;
        }
        let dominated =
            (0..n).all(|v| set & (1 << v) != 0 || (0..n).any(|u| set & (1 << u) != 0 && adj[u][v]));
        if dominated {
            best = size;
        }
    }
    best
}

pub fn brute_gamma(g: &Graph) -> usize {
    brute_gamma_edges(g.n(), &edge_pairs(g))
}

fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            go(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// Smallest number of edges whose removal raises the brute-force domination
/// number, trying every edge subset of the whole graph.
pub fn naive_bondage(g: &Graph) -> usize {
    let edges = edge_pairs(g);
    let gamma = brute_gamma_edges(g.n(), &edges);
    for k in 1..=edges.len() {
        for removed in subsets(edges.len(), k) {
            let kept: Vec<_> = edges
                .iter()
                .enumerate()
                .filter(|(i, _)| !removed.contains(i))
                .map(|(_, e)| *e)
                .collect();
            if brute_gamma_edges(g.n(), &kept) > gamma {
                return k;
            }
        }
    }
    unreachable!("removing every edge raises gamma of a graph with an edge")
}

/// Shortest cycle through each edge is one plus the distance between its
/// ends once the edge is gone.
pub fn brute_girth(g: &Graph) -> Option<usize> {
    let edges = edge_pairs(g);
    let mut best = None;
    for (i, &(a, b)) in edges.iter().enumerate() {
        let rest: Vec<_> = edges
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, e)| *e)
            .collect();
        let adj = adjacency(g.n(), &rest);
        let mut dist = vec![usize::MAX; g.n()];
        dist[a] = 0;
        let mut queue = VecDeque::from([a]);
        while let Some(x) = queue.pop_front() {
            for y in 0..g.n() {
                if adj[x][y] && dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if dist[b] != usize::MAX {
            let len = dist[b] + 1;
            best = Some(best.map_or(len, |x: usize| x.min(len)));
        }
    }
    best
}

/// Faces of an orientable embedding as orbits of the permutation
/// `(u, v) -> (v, w)` with `w` following `u` in the rotation at `v`.
pub fn orbit_faces(order: &[Vec<usize>]) -> Vec<usize> {
    let mut seen = HashSet::new();
    let mut lengths = Vec::new();
    for (u, around) in order.iter().enumerate() {
        for &v in around {
            if seen.contains(&(u, v)) {
                continue;
            }
            let mut len = 0;
            let mut dart = (u, v);
            while seen.insert(dart) {
                len += 1;
                let (a, b) = dart;
                let at_b = &order[b];
                let i = at_b.iter().position(|&x| x == a).unwrap();
                dart = (b, at_b[(i + 1) % at_b.len()]);
            }
            lengths.push(len);
        }
    }
    if order.iter().all(Vec::is_empty) && !order.is_empty() {
        lengths.push(0);
    }
    lengths.sort_unstable();
    lengths
}

/// Connected graph: a random tree plus each other pair with probability `p`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_order<R: Rng>(rng: &mut R, g: &Graph) -> Vec<Vec<usize>> {
    (0..g.n())
        .map(|v| {
            let mut around = g.neighbors(v).to_vec();
            around.shuffle(rng);
            around
        })
        .collect()
}

pub fn random_rotation<R: Rng>(rng: &mut R, g: &Graph, signed: bool) -> RotationSystem {
    let order = random_order(rng, g);
    let signature = (0..g.m())
        .map(|_| if signed && rng.gen_bool(0.5) { -1 } else { 1 })
        .collect();
    RotationSystem::new(g, order, signature).unwrap()
}
