use std::fmt::Write as _;

use crate::bounds::{
    girth_bound, gz_bound, gz_improved_bound, h1_bound, h2_bound, sachs_bound, Chi,
};
use crate::embedding::{curvature_report, format_rational, CurvatureReport, RotationSystem};
use crate::error::{Error, Result};
use crate::graph::{Girth, Graph};
use crate::graph6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BoundQuery {
    pub delta: u64,
    pub chi: Option<i64>,
    pub girth: Option<Girth>,
    /// Orientable genus.
    pub h: Option<u64>,
    /// Non-orientable genus.
    pub k: Option<u64>,
}

/// Parses a girth argument: an integer `>= 3`, or `inf`.
pub fn parse_girth(text: &str) -> Result<Girth> {
    let text = text.trim();
    if text.eq_ignore_ascii_case("inf") {
        return Ok(Girth::Infinite);
    }
    let g: usize = text
        .parse()
        .map_err(|_| Error::InvalidGirth(format!("{text:?} is not a girth")))?;
    if g < 3 {
        return Err(Error::InvalidGirth(format!("girth {g} is below 3")));
    }
    Ok(Girth::Finite(g))
}

/// Evaluates every bound that applies to the query, in a fixed order.
pub fn cmd_bound(q: &BoundQuery) -> Result<Vec<(&'static str, u64)>> {
    if q.chi.is_none() && q.h.is_none() && q.k.is_none() {
        return Err(Error::InvalidArgument(
            "need at least one of chi, h, k".into(),
        ));
    }
    let chi = q.chi.map(Chi::new).transpose()?;
    if let (Some(c), Some(h)) = (q.chi, q.h) {
        if c < 2 - 2 * h as i64 {
            return Err(Error::InvalidArgument(format!(
                "chi = {c} is below 2 - 2h for h = {h}"
            )));
        }
    }
    if let (Some(c), Some(k)) = (q.chi, q.k) {
        if c < 2 - k as i64 {
            return Err(Error::InvalidArgument(format!(
                "chi = {c} is below 2 - k for k = {k}"
            )));
        }
    }
    match q.girth {
        Some(Girth::Infinite) => {
            return Err(Error::InvalidGirth(
                "forests have no girth bound; b <= 2".into(),
            ))
        }
        Some(Girth::Finite(g)) if g < 3 => {
            return Err(Error::InvalidGirth(format!("girth {g} is below 3")))
        }
        _ => {}
    }

    let d = q.delta;
    let mut out = Vec::new();
    if let Some(c) = chi {
        out.push(("h1", h1_bound(d, c)?));
        if c.get() <= 0 {
            out.push(("h2", h2_bound(d, c)?));
            out.push(("sachs", sachs_bound(d, c)?));
            if let Some(g) = q.girth {
                out.push(("girth", girth_bound(d, c, g)?));
            }
        }
    }
    if q.h.is_some() || q.k.is_some() {
        out.push(("gz", gz_bound(d, q.h, q.k)?));
        out.push(("gz_improved", gz_improved_bound(d, q.h, q.k)?));
    }
    if q.chi == Some(2) {
        out.push(("ky", (d + 2).min(8)));
    }
    Ok(out)
}

pub fn render_bounds(rows: &[(&'static str, u64)]) -> String {
    rows.iter()
        .map(|(name, v)| format!("{name}\t{v}\n"))
        .collect()
}

/// First graph of a graph6 text together with a rotation system given in text.
pub fn cmd_curvature(graph_text: &str, rotation_text: &str) -> Result<(Graph, CurvatureReport)> {
    let g = graph6::decode_all(graph_text)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::Graph6("no graph in input".into()))?;
    let r = RotationSystem::parse(&g, rotation_text)?;
    let report = curvature_report(&g, &r)?;
    Ok((g, report))
}

pub fn render_curvature(report: &CurvatureReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "chi\t{}", report.chi);
    let degrees: Vec<String> = report
        .face_degrees
        .iter()
        .map(ToString::to_string)
        .collect();
    let _ = writeln!(
        out,
        "faces\t{}\t{}",
        report.face_degrees.len(),
        degrees.join(" ")
    );
    for e in &report.edges {
        let _ = writeln!(
            out,
            "edge\t{}\t{} {}\t{}",
            e.edge,
            e.face_degrees[0],
            e.face_degrees[1],
            format_rational(&e.curvature)
        );
    }
    let _ = writeln!(out, "sum\t{}", format_rational(&report.sum));
    for e in &report.degenerate {
        let _ = writeln!(out, "warning: edge {e} borders a face of degree below 3");
    }
    out
}
