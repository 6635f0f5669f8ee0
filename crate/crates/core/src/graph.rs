//! Simple undirected graphs on dense vertex ids `0..n`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported vertex count. Vertex sets are packed into `u64` masks.
pub const MAX_VERTICES: usize = 64;

/// An undirected edge stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Builds the canonical form of `{a, b}`. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "loops are not edges of a simple graph");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Lexicographically ordered, duplicate-free list of edges.
pub type EdgeList = Vec<Edge>;

/// Length of a shortest cycle; forests have infinite girth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

/// Immutable simple graph in sorted adjacency-list form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

/// A connected component together with the map from its local ids to the
/// ids of the parent graph (`to_parent[local] = parent`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub graph: Graph,
    pub to_parent: Vec<usize>,
}

impl Graph {
    /// Graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        })
    }

    /// Builds a graph from an edge list, rejecting loops, repeated edges and
    /// out-of-range endpoints. Edge order and orientation are irrelevant.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            g.adj[a].push(b);
            g.adj[b].push(a);
        }
        for (v, list) in g.adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(v.min(w[0]), v.max(w[0])));
            }
        }
        g.m = edges.len();
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    pub fn max_degree(&self) -> Result<usize> {
        self.adj.iter().map(Vec::len).max().ok_or(Error::EmptyGraph)
    }

    pub fn min_degree(&self) -> Result<usize> {
        self.adj.iter().map(Vec::len).min().ok_or(Error::EmptyGraph)
    }

    /// Closed neighbourhood of `v` as a bit mask.
    pub fn closed_neighborhood_mask(&self, v: usize) -> u64 {
        self.adj[v]
            .iter()
            .fold(1u64 << v, |acc, &w| acc | (1u64 << w))
    }

    /// Mask with one bit per vertex.
    pub fn vertex_mask(&self) -> u64 {
        match self.n() {
            64 => u64::MAX,
            n => (1u64 << n) - 1,
        }
    }

    /// Canonical edge list, sorted lexicographically.
    pub fn edges(&self) -> EdgeList {
        let mut out = Vec::with_capacity(self.m);
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| Edge { u, v }));
        }
        out
    }

    /// Index of `e` in [`Graph::edges`].
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        if !self.has_edge(e.u, e.v) {
            return None;
        }
        let before: usize = (0..e.u)
            .map(|u| self.adj[u].iter().filter(|&&v| v > u).count())
            .sum();
        let within = self.adj[e.u]
            .iter()
            .filter(|&&v| v > e.u && v < e.v)
            .count();
        Some(before + within)
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidArgument(format!(
                "common_neighbors needs two distinct vertices, got {u} twice"
            )));
        }
        let (a, b) = (&self.adj[u], &self.adj[v]);
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        Ok(count)
    }

    /// Copy of the graph without the edges in `removed`.
    pub fn remove_edges(&self, removed: &[Edge]) -> Result<Graph> {
        let mut adj = self.adj.clone();
        for e in removed {
            let pos_u = adj
                .get(e.u)
                .and_then(|l| l.binary_search(&e.v).ok())
                .ok_or(Error::MissingEdge(e.u, e.v))?;
            adj[e.u].remove(pos_u);
            let pos_v = adj[e.v]
                .binary_search(&e.u)
                .map_err(|_| Error::MissingEdge(e.u, e.v))?;
            adj[e.v].remove(pos_v);
        }
        Ok(Graph {
            adj,
            m: self.m - removed.len(),
        })
    }

    /// Shortest cycle length via a BFS from every vertex.
    pub fn girth(&self) -> Girth {
        let n = self.n();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(x) = queue.pop_front() {
                if 2 * dist[x] + 1 >= best {
                    break;
                }
                for &y in &self.adj[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        // non-tree edge closes a closed walk through the root
                        best = best.min(dist[x] + dist[y] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Connected components ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Component> {
        let n = self.n();
        let mut label = vec![usize::MAX; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            let id = comps.len();
            let mut members = vec![start];
            label[start] = id;
            let mut head = 0;
            while head < members.len() {
                let x = members[head];
                head += 1;
                for &y in &self.adj[x] {
                    if label[y] == usize::MAX {
                        label[y] = id;
                        members.push(y);
                    }
                }
            }
            members.sort_unstable();
            comps.push(members);
        }
        comps
            .into_iter()
            .map(|members| {
                let mut local = vec![usize::MAX; n];
                for (i, &v) in members.iter().enumerate() {
                    local[v] = i;
                }
                let adj: Vec<Vec<usize>> = members
                    .iter()
                    .map(|&v| self.adj[v].iter().map(|&w| local[w]).collect())
                    .collect();
                let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
                Component {
                    graph: Graph { adj, m },
                    to_parent: members,
                }
            })
            .collect()
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n();
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::InvalidArgument(
                "relabeling is not a permutation".into(),
            ));
        }
        let edges: Vec<_> = self
            .edges()
            .iter()
            .map(|e| (perm[e.u], perm[e.v]))
            .collect();
        Graph::from_edges(n, &edges)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let off = self.n();
        let mut edges: Vec<_> = self.edges().iter().map(|e| (e.u, e.v)).collect();
        edges.extend(other.edges().iter().map(|e| (e.u + off, e.v + off)));
        Graph::from_edges(off + other.n(), &edges)
    }
}

/// Small named families used by tests and the command line.
pub mod families {
    use super::Graph;
    use crate::error::Result;

    pub fn complete(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Cycle `0-1-…-(n-1)-0`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(crate::Error::InvalidArgument(format!(
                "cycle needs n >= 3, got {n}"
            )));
        }
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges)
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
        let edges: Vec<_> = (0..a)
            .flat_map(|u| (a..a + b).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(a + b, &edges)
    }

    pub fn star(leaves: usize) -> Result<Graph> {
        complete_bipartite(1, leaves)
    }

    pub fn petersen() -> Result<Graph> {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, &edges)
    }
}
