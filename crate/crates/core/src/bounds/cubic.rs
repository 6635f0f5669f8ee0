//! Largest real root of `C(z) = z^3 + 2z^2 + (6χ - 7)z + 18χ - 24`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{poly_c, Chi};
use crate::error::{Error, Result};

const RESIDUAL_TOL: f64 = 1e-9;
const MAX_POLISH: u32 = 60;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RootResult {
    /// Root rounded to `f64`.
    pub r: f64,
    /// Low-order correction: the polished root is `r + r_lo`.
    pub r_lo: f64,
    /// `|C(r + r_lo)|`, evaluated in double-double arithmetic.
    pub residual: f64,
    pub iterations: u32,
}

/// Discriminant-like quantity under the square root of the closed form;
/// non-negative exactly when the cubic has a single real root.
pub fn cardano_f(chi: i64) -> i128 {
    let c = chi as i128;
    5376 - 6876 * c + 1269 * c * c + 648 * c * c * c
}

/// Real roots from the closed form
/// `r = (25 - 18χ) / (3 Q^{1/3}) + Q^{1/3} / 3 - 2/3` with
/// `Q = 253 - 189χ + 3 sqrt(f)`, taking the principal complex square root and
/// all three cube roots when `f < 0`.
pub fn closed_form_roots(chi: i64) -> Vec<f64> {
    let x = chi as f64;
    let f = cardano_f(chi) as f64;
    let eval = |cbrt: Complex64| (25.0 - 18.0 * x) / (3.0 * cbrt) + cbrt / 3.0 - 2.0 / 3.0;
    if f >= 0.0 {
        let q = 253.0 - 189.0 * x + 3.0 * f.sqrt();
        vec![eval(Complex64::new(q.cbrt(), 0.0)).re]
    } else {
        let q = Complex64::new(253.0 - 189.0 * x, 0.0) + 3.0 * Complex64::new(f, 0.0).sqrt();
        let principal = q.cbrt();
        (0..3)
            .map(|k| {
                let turn = Complex64::from_polar(1.0, 2.0 * PI * k as f64 / 3.0);
                eval(principal * turn).re
            })
            .collect()
    }
}

/// Three real roots by the trigonometric method (valid when `f < 0`).
/// With `z = t - 2/3` the cubic becomes `t^3 + p t + q` where
/// `p = (18χ - 25)/3` and `q = 14χ - 506/27`.
pub fn trigonometric_roots(chi: i64) -> [f64; 3] {
    let x = chi as f64;
    let p = (18.0 * x - 25.0) / 3.0;
    let q = 14.0 * x - 506.0 / 27.0;
    let amp = 2.0 * (-p / 3.0).sqrt();
    let arg = ((3.0 * q) / (2.0 * p) * (-3.0 / p).sqrt()).clamp(-1.0, 1.0);
    let theta = arg.acos() / 3.0;
    [0, 1, 2].map(|k| amp * (theta - 2.0 * PI * k as f64 / 3.0).cos() - 2.0 / 3.0)
}

#[derive(Debug, Clone, Copy)]
struct DoubleDouble {
    hi: f64,
    lo: f64,
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

impl DoubleDouble {
    fn new(x: f64) -> Self {
        DoubleDouble { hi: x, lo: 0.0 }
    }

    fn add(self, o: DoubleDouble) -> Self {
        let (s, e) = two_sum(self.hi, o.hi);
        let (hi, lo) = two_sum(s, e + self.lo + o.lo);
        DoubleDouble { hi, lo }
    }

    fn mul(self, o: DoubleDouble) -> Self {
        let p = self.hi * o.hi;
        let e = self.hi.mul_add(o.hi, -p);
        let (hi, lo) = two_sum(p, e + self.hi * o.lo + self.lo * o.hi);
        DoubleDouble { hi, lo }
    }
}

fn poly_c_dd(z: DoubleDouble, chi: i64) -> DoubleDouble {
    let x = chi as f64;
    let mut acc = z.add(DoubleDouble::new(2.0));
    acc = acc.mul(z).add(DoubleDouble::new(6.0 * x - 7.0));
    acc.mul(z).add(DoubleDouble::new(18.0 * x - 24.0))
}

fn polish(start: f64, chi: i64) -> RootResult {
    let x = chi as f64;
    let mut z = DoubleDouble::new(start);
    let mut iterations = 0;
    let mut value = poly_c_dd(z, chi);
    while iterations < MAX_POLISH {
        let slope = 3.0 * z.hi * z.hi + 4.0 * z.hi + 6.0 * x - 7.0;
        let step = value.hi / slope;
        iterations += 1;
        z = z.add(DoubleDouble::new(-step));
        value = poly_c_dd(z, chi);
        if step.abs() <= 1e-26 * z.hi.abs().max(1.0) || value.hi == 0.0 {
            break;
        }
    }
    RootResult {
        r: z.hi,
        r_lo: z.lo,
        residual: value.hi.abs(),
        iterations,
    }
}

/// Largest real root `r(χ)` for `χ <= 0`; it is also the unique positive
/// root since `C(0) < 0` and `C` is convex on `z > 0`.
pub fn largest_root_r(chi: Chi) -> Result<RootResult> {
    let x = chi.get();
    if x > 0 {
        return Err(Error::ChiOutOfRange {
            chi: x,
            allowed: "chi <= 0",
        });
    }
    debug_assert!(poly_c(0.0, x) < 0.0);
    let start = if cardano_f(x) >= 0 {
        closed_form_roots(x)[0]
    } else {
        trigonometric_roots(x)
            .into_iter()
            .fold(f64::NEG_INFINITY, f64::max)
    };
    let root = polish(start, x);
    if root.residual > RESIDUAL_TOL {
        return Err(Error::InvalidArgument(format!(
            "root polish for chi = {x} stalled at residual {}",
            root.residual
        )));
    }
    Ok(root)
}

/// `C(t)` in exact integer arithmetic.
pub fn poly_c_int(t: i64, chi: i64) -> i128 {
    let (t, c) = (t as i128, chi as i128);
    t * t * t + 2 * t * t + (6 * c - 7) * t + 18 * c - 24
}

/// `floor(r(χ))`. The float root is only a starting point: the result is the
/// largest integer `t >= 0` with `C(t) <= 0`, checked exactly.
pub fn floor_r(chi: Chi) -> Result<i64> {
    let root = largest_root_r(chi)?;
    let x = chi.get();
    let mut t = (root.r + root.r_lo).floor() as i64;
    while poly_c_int(t + 1, x) <= 0 {
        t += 1;
    }
    while t > 0 && poly_c_int(t, x) > 0 {
        t -= 1;
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi(x: i64) -> Chi {
        Chi::new(x).unwrap()
    }

    #[test]
    fn exact_root_at_zero() {
        let root = largest_root_r(chi(0)).unwrap();
        assert_eq!(root.r, 3.0);
        assert_eq!(poly_c_int(3, 0), 0);
        assert_eq!(floor_r(chi(0)).unwrap(), 3);
    }

    #[test]
    fn branch_boundary() {
        assert!(cardano_f(-4) >= 0);
        assert!(cardano_f(-5) < 0);
        assert!((-4..=0).all(|x| cardano_f(x) >= 0));
        assert!((-200..=-5).all(|x| cardano_f(x) < 0));
    }

    #[test]
    fn reference_roots() {
        // numpy.roots on the same polynomial
        let cases = [
            (-1, 3.960354060955851),
            (-2, 4.719537564817953),
            (-5, 6.45974273278816),
        ];
        for (x, expected) in cases {
            let r = largest_root_r(chi(x)).unwrap().r;
            assert!((r - expected).abs() < 1e-12, "chi={x}: {r}");
        }
        let r = largest_root_r(chi(-21)).unwrap().r;
        assert!((r - 11.947829146035735).abs() < 1e-12);
    }

    #[test]
    fn closed_form_agrees_with_trigonometric() {
        for x in -60..=-5 {
            let mut closed = closed_form_roots(x);
            let mut trig = trigonometric_roots(x).to_vec();
            closed.sort_by(f64::total_cmp);
            trig.sort_by(f64::total_cmp);
            for (a, b) in closed.iter().zip(&trig) {
                assert!(
                    (a - b).abs() < 1e-8 * b.abs().max(1.0),
                    "chi={x}: {a} vs {b}"
                );
            }
            for z in trig {
                assert!(poly_c(z, x).abs() < 1e-6 * (1.0 + z.abs().powi(3)));
            }
        }
    }

    #[test]
    fn positive_chi_rejected() {
        assert!(matches!(
            largest_root_r(chi(1)),
            Err(Error::ChiOutOfRange { .. })
        ));
    }

    #[test]
    fn residual_far_out() {
        for x in [-1_000, -10_000, -1_000_000] {
            let root = largest_root_r(chi(x)).unwrap();
            assert!(root.residual <= 1e-9, "chi={x}: {root:?}");
        }
    }
}
