use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::faces::{trace_faces, FaceSet};
use super::rotation::RotationSystem;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

pub type Rational = BigRational;

fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Renders a rational as `num/den`, including integers (`0/1`).
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// `w(uv) = 1/d(u) + 1/d(v) - 1 + 1/m + 1/m' - χ/|E|` where `m`, `m'` are the
/// degrees of the faces on the two sides of `uv` and `χ` is the Euler
/// characteristic of the traced embedding.
pub fn edge_curvature(g: &Graph, faces: &FaceSet, edge: Edge) -> Result<Rational> {
    let idx = g
        .edge_index(edge)
        .ok_or(Error::MissingEdge(edge.u, edge.v))?;
    let chi = g.n() as i64 - g.m() as i64 + faces.len() as i64;
    let [a, b] = faces.sides(idx);
    let du = g.neighbors(edge.u).len() as i64;
    let dv = g.neighbors(edge.v).len() as i64;
    let m = faces.face_degree(a) as i64;
    let m2 = faces.face_degree(b) as i64;
    Ok(frac(1, du) + frac(1, dv) - frac(1, 1) + frac(1, m) + frac(1, m2) - frac(chi, g.m() as i64))
}

#[derive(Debug, Clone, PartialEq)]
pub struct EdgeCharge {
    pub edge: Edge,
    pub face_degrees: [usize; 2],
    pub curvature: Rational,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureReport {
    pub chi: i64,
    pub face_degrees: Vec<usize>,
    pub edges: Vec<EdgeCharge>,
    pub sum: Rational,
    /// Edges with a side whose face degree is below 3; only `P_2` has them.
    pub degenerate: Vec<Edge>,
}

pub fn curvature_report(g: &Graph, r: &RotationSystem) -> Result<CurvatureReport> {
    if g.m() == 0 {
        return Err(Error::Edgeless);
    }
    let faces = trace_faces(g, r)?;
    let chi = g.n() as i64 - g.m() as i64 + faces.len() as i64;
    let mut edges = Vec::with_capacity(g.m());
    let mut sum = Rational::zero();
    let mut degenerate = Vec::new();
    for (i, e) in g.edges().into_iter().enumerate() {
        let [a, b] = faces.sides(i);
        let degs = [faces.face_degree(a), faces.face_degree(b)];
        if degs.iter().any(|&d| d < 3) {
            degenerate.push(e);
        }
        let w = edge_curvature(g, &faces, e)?;
        sum += &w;
        edges.push(EdgeCharge {
            edge: e,
            face_degrees: degs,
            curvature: w,
        });
    }
    Ok(CurvatureReport {
        chi,
        face_degrees: faces.degrees(),
        edges,
        sum,
        degenerate,
    })
}

/// Total curvature of the embedding; zero for every valid embedding.
pub fn curvature_sum(g: &Graph, r: &RotationSystem) -> Result<Rational> {
    Ok(curvature_report(g, r)?.sum)
}
