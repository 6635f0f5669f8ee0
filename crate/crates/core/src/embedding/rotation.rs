use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// A dart is an edge with a direction. Edge `i` of the canonical edge list
/// `(u, v)` with `u < v` yields dart `2i` (`u -> v`) and `2i + 1` (`v -> u`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart(pub usize);

impl Dart {
    pub fn edge(self) -> usize {
        self.0 / 2
    }

    pub fn reverse(self) -> Dart {
        Dart(self.0 ^ 1)
    }
}

/// Per-vertex cyclic order of neighbours plus a `±1` signature per edge.
/// All-positive signatures describe an orientable embedding.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RotationSystem {
    order: Vec<Vec<usize>>,
    signature: Vec<i8>,
}

impl RotationSystem {
    /// Validates that `order[v]` lists every neighbour of `v` exactly once and
    /// that `signature` has one `±1` entry per canonical edge.
    pub fn new(g: &Graph, order: Vec<Vec<usize>>, signature: Vec<i8>) -> Result<Self> {
        if order.len() != g.n() {
            return Err(Error::Rotation(format!(
                "{} vertex rotations given for {} vertices",
                order.len(),
                g.n()
            )));
        }
        for (v, cyc) in order.iter().enumerate() {
            let mut sorted = cyc.clone();
            sorted.sort_unstable();
            if sorted != g.neighbors(v) {
                return Err(Error::Rotation(format!(
                    "rotation at vertex {v} is {cyc:?}, neighbours are {:?}",
                    g.neighbors(v)
                )));
            }
        }
        if signature.len() != g.m() {
            return Err(Error::Rotation(format!(
                "{} signatures given for {} edges",
                signature.len(),
                g.m()
            )));
        }
        if let Some(s) = signature.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::Rotation(format!("signature {s} is not +1 or -1")));
        }
        Ok(RotationSystem { order, signature })
    }

    /// Neighbours in increasing order at every vertex, all signatures `+1`.
    pub fn sorted(g: &Graph) -> Self {
        RotationSystem {
            order: (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect(),
            signature: vec![1; g.m()],
        }
    }

    pub fn order(&self, v: usize) -> &[usize] {
        &self.order[v]
    }

    pub fn signatures(&self) -> &[i8] {
        &self.signature
    }

    pub fn is_orientable_signature(&self) -> bool {
        self.signature.iter().all(|&s| s == 1)
    }

    /// Parses the line format `v: n1 n2 …` (cyclic neighbour order) with
    /// optional `sig u v -1` lines; `#` starts a comment. Vertices without
    /// neighbours may be omitted.
    pub fn parse(g: &Graph, text: &str) -> Result<Self> {
        let mut order: Vec<Option<Vec<usize>>> = vec![None; g.n()];
        let mut signature = vec![1i8; g.m()];
        let parse_id = |tok: &str, lineno: usize| {
            tok.parse::<usize>()
                .map_err(|_| Error::Rotation(format!("line {lineno}: bad vertex id {tok:?}")))
        };
        for (i, raw) in text.lines().enumerate() {
            let lineno = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("sig") {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                let [a, b, s] = toks[..] else {
                    return Err(Error::Rotation(format!(
                        "line {lineno}: expected `sig u v -1`"
                    )));
                };
                let (a, b) = (parse_id(a, lineno)?, parse_id(b, lineno)?);
                let sign = match s {
                    "-1" => -1,
                    "1" | "+1" => 1,
                    _ => {
                        return Err(Error::Rotation(format!(
                            "line {lineno}: bad signature {s:?}"
                        )))
                    }
                };
                if a == b {
                    return Err(Error::Rotation(format!(
                        "line {lineno}: {a}-{b} is not an edge"
                    )));
                }
                let idx = g.edge_index(Edge::new(a, b)).ok_or_else(|| {
                    Error::Rotation(format!("line {lineno}: {a}-{b} is not an edge"))
                })?;
                signature[idx] = sign;
                continue;
            }
            let (head, tail) = line.split_once(':').ok_or_else(|| {
                Error::Rotation(format!("line {lineno}: expected `v: neighbours`"))
            })?;
            let v = parse_id(head.trim(), lineno)?;
            if v >= g.n() {
                return Err(Error::Rotation(format!(
                    "line {lineno}: vertex {v} out of range"
                )));
            }
            if order[v].is_some() {
                return Err(Error::Rotation(format!(
                    "line {lineno}: vertex {v} listed twice"
                )));
            }
            let nbrs = tail
                .split_whitespace()
                .map(|t| parse_id(t, lineno))
                .collect::<Result<Vec<_>>>()?;
            order[v] = Some(nbrs);
        }
        let order = order
            .into_iter()
            .enumerate()
            .map(|(v, o)| match o {
                Some(o) => Ok(o),
                None if g.neighbors(v).is_empty() => Ok(Vec::new()),
                None => Err(Error::Rotation(format!("no rotation given for vertex {v}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        RotationSystem::new(g, order, signature)
    }

    pub fn to_text(&self, g: &Graph) -> String {
        let mut out = String::new();
        for (v, cyc) in self.order.iter().enumerate() {
            let _ = write!(out, "{v}:");
            for w in cyc {
                let _ = write!(out, " {w}");
            }
            out.push('\n');
        }
        for (e, &s) in g.edges().iter().zip(&self.signature) {
            if s < 0 {
                let _ = writeln!(out, "sig {} {} -1", e.u, e.v);
            }
        }
        out
    }
}

/// Dart-level view of a rotation system, shared by face tracing and the
/// rotation search.
#[derive(Debug, Clone)]
pub(crate) struct DartIndex {
    pub head: Vec<usize>,
    /// Outgoing darts of each vertex in rotation order.
    pub rot: Vec<Vec<usize>>,
    /// Position of each dart within its tail's rotation.
    pub pos: Vec<usize>,
    pub sig: Vec<i8>,
}

impl DartIndex {
    pub fn new(g: &Graph, r: &RotationSystem) -> Self {
        let edges = g.edges();
        let mut head = vec![0; 2 * edges.len()];
        let mut out_dart = vec![Vec::new(); g.n()];
        for (i, e) in edges.iter().enumerate() {
            head[2 * i] = e.v;
            head[2 * i + 1] = e.u;
            out_dart[e.u].push((e.v, 2 * i));
            out_dart[e.v].push((e.u, 2 * i + 1));
        }
        let lookup = |v: usize, w: usize| {
            out_dart[v]
                .iter()
                .find(|&&(x, _)| x == w)
                .map(|&(_, d)| d)
                .expect("validated rotation")
        };
        let rot: Vec<Vec<usize>> = (0..g.n())
            .map(|v| r.order(v).iter().map(|&w| lookup(v, w)).collect())
            .collect();
        let mut pos = vec![0; head.len()];
        for cyc in &rot {
            for (i, &d) in cyc.iter().enumerate() {
                pos[d] = i;
            }
        }
        DartIndex {
            head,
            rot,
            pos,
            sig: r.signatures().to_vec(),
        }
    }

    pub fn darts(&self) -> usize {
        self.head.len()
    }

    /// One step of a boundary walk: leave along `d` carrying orientation `s`.
    #[inline]
    pub fn step(&self, d: usize, s: i8) -> (usize, i8) {
        let v = self.head[d];
        let s2 = s * self.sig[d / 2];
        let cyc = &self.rot[v];
        let i = self.pos[d ^ 1];
        let j = if s2 > 0 {
            (i + 1) % cyc.len()
        } else {
            (i + cyc.len() - 1) % cyc.len()
        };
        (cyc[j], s2)
    }

    /// The state that walks the same face in the opposite direction.
    #[inline]
    pub fn mirror(&self, d: usize, s: i8) -> (usize, i8) {
        (d ^ 1, -s * self.sig[d / 2])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn text_round_trip() {
        let g = families::complete(4).unwrap();
        let text = "0: 1 2 3\n1: 0 3 2 # comment\n2: 0 1 3\n3: 0 2 1\nsig 1 2 -1\n";
        let r = RotationSystem::parse(&g, text).unwrap();
        assert_eq!(r.order(1), &[0, 3, 2]);
        assert_eq!(r.signatures().iter().filter(|&&s| s < 0).count(), 1);
        assert_eq!(RotationSystem::parse(&g, &r.to_text(&g)).unwrap(), r);
    }

    #[test]
    fn malformed_rotations() {
        let g = families::cycle(3).unwrap();
        assert!(RotationSystem::parse(&g, "0: 1 2\n1: 0 2\n").is_err()); // vertex 2 missing
        assert!(RotationSystem::parse(&g, "0: 1 1\n1: 0 2\n2: 0 1\n").is_err());
        assert!(RotationSystem::parse(&g, "0: 1\n1: 0 2\n2: 0 1\n").is_err());
        assert!(RotationSystem::parse(&g, "0: 1 2\n0: 1 2\n1: 0 2\n2: 0 1\n").is_err());
        assert!(RotationSystem::parse(&g, "0: 1 2\n1: 0 2\n2: 0 1\nsig 0 0 -1\n").is_err());
        assert!(RotationSystem::parse(&g, "0: 1 2\n1: 0 2\n2: 0 1\nsig 0 1 2\n").is_err());
        assert!(RotationSystem::parse(&g, "0 1 2\n").is_err());
        assert!(RotationSystem::new(&g, vec![vec![1, 2]; 3], vec![1; 3]).is_err());
        assert!(
            RotationSystem::new(&g, RotationSystem::sorted(&g).order.clone(), vec![0; 3]).is_err()
        );
    }

    #[test]
    fn isolated_vertex_may_be_omitted() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let r = RotationSystem::parse(&g, "0: 1\n1: 0\n").unwrap();
        assert!(r.order(2).is_empty());
    }

    #[test]
    fn darts() {
        assert_eq!(Dart(4).edge(), 2);
        assert_eq!(Dart(4).reverse(), Dart(5));
        assert_eq!(Dart(5).reverse().reverse(), Dart(5));
    }
}
