//! Closed-form upper bounds on the bondage number.
//!
//! Every bound takes the maximum degree `Δ` and surface data (Euler
//! characteristic, genera, girth) rather than a graph, so tables can be
//! produced without one. Floors and ceilings of irrational quantities are
//! settled in exact integer arithmetic.

mod cubic;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Girth;

pub use cubic::{
    cardano_f, closed_form_roots, floor_r, largest_root_r, poly_c_int, trigonometric_roots,
    RootResult,
};

/// Euler characteristic of a surface: `2 - 2h` for the orientable surface of
/// genus `h`, `2 - k` for the non-orientable surface of genus `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Chi(i64);

impl Chi {
    pub fn new(chi: i64) -> Result<Self> {
        if chi > 2 {
            return Err(Error::ChiOutOfRange {
                chi,
                allowed: "chi <= 2",
            });
        }
        Ok(Chi(chi))
    }

    pub fn get(self) -> i64 {
        self.0
    }

    /// Orientable genus, when `χ` is even.
    pub fn orientable_genus(self) -> Option<i64> {
        (self.0 % 2 == 0).then_some((2 - self.0) / 2)
    }

    pub fn nonorientable_genus(self) -> Option<i64> {
        (self.0 <= 1).then_some(2 - self.0)
    }

    fn require_nonpositive(self) -> Result<i64> {
        if self.0 > 0 {
            Err(Error::ChiOutOfRange {
                chi: self.0,
                allowed: "chi <= 0",
            })
        } else {
            Ok(self.0)
        }
    }
}

impl TryFrom<i64> for Chi {
    type Error = Error;

    fn try_from(chi: i64) -> Result<Self> {
        Chi::new(chi)
    }
}

pub fn poly_a(z: f64, chi: i64) -> f64 {
    z * z - z + 4.0 * chi as f64 - 6.0
}

pub fn poly_b(z: f64, chi: i64) -> f64 {
    let x = chi as f64;
    ((5.0 * z + 6.0) * z + 24.0 * x - 31.0) * z + 48.0 * x - 70.0
}

pub fn poly_c(z: f64, chi: i64) -> f64 {
    let x = chi as f64;
    ((z + 2.0) * z + 6.0 * x - 7.0) * z + 18.0 * x - 24.0
}

/// Larger root of `A`: `1/2 + sqrt(25 - 16χ)/2`.
pub fn poly_a_root(chi: i64) -> f64 {
    0.5 + 0.5 * (25.0 - 16.0 * chi as f64).sqrt()
}

/// `Δ + floor(r(χ))` for `χ <= 0`; `Δ + 2` for `χ ∈ {1, 2}`.
pub fn h1_bound(delta: u64, chi: Chi) -> Result<u64> {
    if chi.get() > 0 {
        return Ok(delta + 2);
    }
    Ok(delta + floor_r(chi)? as u64)
}

/// `Δ + ceil(sqrt(12 - 6χ) - 1/2)` for `χ <= 0`.
pub fn h2_bound(delta: u64, chi: Chi) -> Result<u64> {
    let x = chi.require_nonpositive()? as i128;
    // smallest t >= 0 with (2t + 1)^2 >= 48 - 24χ
    let target = 48 - 24 * x;
    let mut t = ((target as f64).sqrt() / 2.0 - 0.5).ceil().max(0.0) as i128;
    while t > 0 && (2 * t - 1) * (2 * t - 1) >= target {
        t -= 1;
    }
    while (2 * t + 1) * (2 * t + 1) < target {
        t += 1;
    }
    Ok(delta + t as u64)
}

/// `min(Δ + h + 2, Δ + k + 1)` over whichever genera are known.
pub fn gz_bound(delta: u64, h: Option<u64>, k: Option<u64>) -> Result<u64> {
    if k == Some(0) {
        return Err(Error::InvalidArgument(
            "non-orientable genus must be at least 1".into(),
        ));
    }
    let candidates = [h.map(|h| delta + h + 2), k.map(|k| delta + k + 1)];
    candidates
        .into_iter()
        .flatten()
        .min()
        .ok_or_else(|| Error::InvalidArgument("gz bound needs h or k".into()))
}

/// [`gz_bound`] tightened by the refinements that apply for large genus:
/// `Δ + h + 1` (h ≥ 8), `Δ + h` (h ≥ 11), `Δ + k` (k ≥ 3), `Δ + k - 1` (k ≥ 6).
pub fn gz_improved_bound(delta: u64, h: Option<u64>, k: Option<u64>) -> Result<u64> {
    let base = gz_bound(delta, h, k)?;
    let refinements = [
        h.filter(|&h| h >= 8).map(|h| delta + h + 1),
        h.filter(|&h| h >= 11).map(|h| delta + h),
        k.filter(|&k| k >= 3).map(|k| delta + k),
        k.filter(|&k| k >= 6).map(|k| delta + k - 1),
    ];
    Ok(refinements.into_iter().flatten().fold(base, u64::min))
}

/// `Δ + floor((3 + sqrt(49 - 24χ)) / 2)` for `χ <= 0`, from the minimum
/// degree bound for graphs on the surface together with Hartnell–Rall.
pub fn sachs_bound(delta: u64, chi: Chi) -> Result<u64> {
    let x = chi.require_nonpositive()? as i128;
    // largest t with 2t - 3 <= sqrt(49 - 24χ)
    let d = 49 - 24 * x;
    let fits = |t: i128| 2 * t - 3 < 0 || (2 * t - 3) * (2 * t - 3) <= d;
    let mut t = ((3.0 + (d as f64).sqrt()) / 2.0).floor() as i128;
    while fits(t + 1) {
        t += 1;
    }
    while !fits(t) {
        t -= 1;
    }
    Ok(delta + t as u64)
}

/// `(g - 2) t^2 + (g - 6) t + 2χg - 2g - 4` in exact arithmetic.
pub fn girth_poly_int(t: i64, chi: i64, g: i64) -> i128 {
    let (t, c, g) = (t as i128, chi as i128, g as i128);
    (g - 2) * t * t + (g - 6) * t + 2 * c * g - 2 * g - 4
}

/// Larger root `s` of the girth quadratic.
pub fn girth_root_s(chi: i64, g: u64) -> f64 {
    let (x, g) = (chi as f64, g as f64);
    ((8.0 * g * (2.0 - g) * x + (3.0 * g - 2.0).powi(2)).sqrt() - (g - 6.0)) / (2.0 * (g - 2.0))
}

/// `Δ + floor(s)` for `χ <= 0` and finite girth `g >= 3`.
pub fn girth_bound(delta: u64, chi: Chi, girth: Girth) -> Result<u64> {
    let x = chi.require_nonpositive()?;
    let g = match girth {
        Girth::Infinite => {
            return Err(Error::InvalidGirth(
                "forests have infinite girth; their bondage number is at most 2".into(),
            ))
        }
        Girth::Finite(g) if g < 3 => return Err(Error::InvalidGirth(format!("girth {g} < 3"))),
        Girth::Finite(g) => g as i64,
    };
    // the quadratic is negative at 0, so floor(s) is the largest t >= 0 where
    // it is still non-positive
    let mut t = girth_root_s(x, g as u64).floor().max(0.0) as i64;
    while girth_poly_int(t + 1, x, g) <= 0 {
        t += 1;
    }
    while t > 0 && girth_poly_int(t, x, g) > 0 {
        t -= 1;
    }
    Ok(delta + t as u64)
}

/// `(sqrt(12 - 6χ) + 1/2) / r(χ)`; tends to 1 as `χ → -∞`.
pub fn asymptotic_ratio(chi: Chi) -> Result<f64> {
    let x = chi.require_nonpositive()?;
    let root = largest_root_r(chi)?;
    Ok(((12.0 - 6.0 * x as f64).sqrt() + 0.5) / (root.r + root.r_lo))
}
