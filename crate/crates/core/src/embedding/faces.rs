use super::rotation::{Dart, DartIndex, RotationSystem};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Faces of an embedding as closed boundary walks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    faces: Vec<Vec<Dart>>,
    /// For each edge, the faces on its two sides (equal when one face
    /// meets the edge twice).
    sides: Vec<[usize; 2]>,
}

impl FaceSet {
    pub fn faces(&self) -> &[Vec<Dart>] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Boundary walk length, counted with multiplicity.
    pub fn face_degree(&self, face: usize) -> usize {
        self.faces[face].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    /// Faces on either side of edge `edge` (canonical index).
    pub fn sides(&self, edge: usize) -> [usize; 2] {
        self.sides[edge]
    }
}

/// Traces every face of the embedding described by `r`.
///
/// A walk state is a dart plus the current local orientation. Leaving a
/// vertex along `d`, the walk multiplies its orientation by the signature of
/// `d`'s edge and continues with the successor (orientation `+1`) or
/// predecessor (`-1`) of `reverse(d)` in the rotation at the head of `d`.
/// Each face is found twice, once per direction; the mirror image of every
/// traced state is marked so each face is reported once.
pub fn trace_faces(g: &Graph, r: &RotationSystem) -> Result<FaceSet> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.m() == 0 {
        // a lone vertex on the sphere
        return Ok(FaceSet {
            faces: vec![Vec::new()],
            sides: Vec::new(),
        });
    }
    for v in 0..g.n() {
        let mut sorted = r.order(v).to_vec();
        sorted.sort_unstable();
        if sorted != g.neighbors(v) {
            return Err(Error::Rotation(format!(
                "rotation at vertex {v} does not match the graph"
            )));
        }
    }
    if r.signatures().len() != g.m() {
        return Err(Error::Rotation(
            "signature count does not match the edge count".into(),
        ));
    }
    let idx = DartIndex::new(g, r);
    let darts = idx.darts();
    let state = |d: usize, s: i8| 2 * d + usize::from(s < 0);
    let mut seen = vec![false; 2 * darts];
    let mut faces = Vec::new();
    let mut sides = vec![[usize::MAX; 2]; g.m()];
    for s0 in [1i8, -1] {
        for d0 in 0..darts {
            if seen[state(d0, s0)] {
                continue;
            }
            let face_id = faces.len();
            let mut walk = Vec::new();
            let (mut d, mut s) = (d0, s0);
            loop {
                seen[state(d, s)] = true;
                let (md, ms) = idx.mirror(d, s);
                seen[state(md, ms)] = true;
                walk.push(Dart(d));
                let slot = &mut sides[d / 2];
                if slot[0] == usize::MAX {
                    slot[0] = face_id;
                } else {
                    slot[1] = face_id;
                }
                (d, s) = idx.step(d, s);
                if (d, s) == (d0, s0) {
                    break;
                }
            }
            faces.push(walk);
        }
    }
    debug_assert!(sides.iter().all(|s| s[1] != usize::MAX));
    Ok(FaceSet { faces, sides })
}

/// `n - m + f` for the embedding.
pub fn euler_characteristic(g: &Graph, r: &RotationSystem) -> Result<i64> {
    let faces = trace_faces(g, r)?;
    Ok(g.n() as i64 - g.m() as i64 + faces.len() as i64)
}

/// Face counter for the rotation search: reuses its buffers and skips
/// validation.
pub(crate) struct FaceCounter {
    seen: Vec<bool>,
}

impl FaceCounter {
    pub fn new(darts: usize) -> Self {
        FaceCounter {
            seen: vec![false; 2 * darts],
        }
    }

    pub fn count(&mut self, idx: &DartIndex, orientable: bool) -> usize {
        let darts = idx.darts();
        self.seen.iter_mut().for_each(|x| *x = false);
        let mut faces = 0;
        if orientable {
            for d0 in 0..darts {
                if self.seen[d0] {
                    continue;
                }
                faces += 1;
                let mut d = d0;
                loop {
                    self.seen[d] = true;
                    d = idx.step(d, 1).0;
                    if d == d0 {
                        break;
                    }
                }
            }
            return faces;
        }
        let state = |d: usize, s: i8| 2 * d + usize::from(s < 0);
        for s0 in [1i8, -1] {
            for d0 in 0..darts {
                if self.seen[state(d0, s0)] {
                    continue;
                }
                faces += 1;
                let (mut d, mut s) = (d0, s0);
                loop {
                    self.seen[state(d, s)] = true;
                    let (md, ms) = idx.mirror(d, s);
                    self.seen[state(md, ms)] = true;
                    (d, s) = idx.step(d, s);
                    if (d, s) == (d0, s0) {
                        break;
                    }
                }
            }
        }
        faces
    }
}
