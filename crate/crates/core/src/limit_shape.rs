//! The Plancherel limit shape in the `(X(w), Y(w))` parametrization, the
//! semicircle law, the jdt angle map `Π` with its CDF `F_Θ`, and the finite-n
//! path classifier `Ψ`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use serde::{Deserialize, Serialize};

use crate::alphabet::Letter;
use crate::error::{Error, Result};
use crate::jdt::JdtPath;

/// Absolute tolerance of the bisection inversions.
pub const INVERSION_TOLERANCE: f64 = 1e-12;

/// Smallest prefix size accepted by [`classify_path`].
pub const DEFAULT_CLASSIFIER_MIN: usize = 100;

fn check_u(what: &'static str, u: f64) -> Result<()> {
    if (-2.0..=2.0).contains(&u) {
        Ok(())
    } else {
        Err(Error::Domain { what, value: u })
    }
}

/// `Ω(u) = (2/π)(u·asin(u/2) + √(4−u²))`.
pub fn omega(u: f64) -> Result<f64> {
    check_u("omega", u)?;
    Ok(2.0 / PI * (u * (u / 2.0).asin() + (4.0 - u * u).sqrt()))
}

/// CDF of the semicircle law on `[-2, 2]`.
pub fn semicircle_cdf(u: f64) -> Result<f64> {
    check_u("semicircle_cdf", u)?;
    let v = 0.5 + (u * (4.0 - u * u).sqrt() / 4.0 + (u / 2.0).asin()) / PI;
    Ok(v.clamp(0.0, 1.0))
}

/// Bisection for a monotone `f` on `[lo, hi]`.
fn bisect(mut lo: f64, mut hi: f64, increasing: bool, target: f64, f: impl Fn(f64) -> f64) -> f64 {
    while hi - lo > INVERSION_TOLERANCE {
        let mid = 0.5 * (lo + hi);
        if (f(mid) < target) == increasing {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `U(w) = F⁻¹(w)`.
pub fn semicircle_quantile(w: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&w) {
        return Err(Error::Domain {
            what: "semicircle_quantile",
            value: w,
        });
    }
    if w == 0.0 {
        return Ok(-2.0);
    }
    if w == 1.0 {
        return Ok(2.0);
    }
    Ok(bisect(-2.0, 2.0, true, w, |u| {
        semicircle_cdf(u).expect("bisection stays in domain")
    }))
}

/// A point `(X(w), Y(w))` on the limit curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ShapePoint {
    pub w: f64,
    pub x: f64,
    pub y: f64,
}

impl ShapePoint {
    /// `U(w) = x − y`.
    pub fn u(&self) -> f64 {
        self.x - self.y
    }

    pub fn angle(&self) -> f64 {
        self.y.atan2(self.x)
    }
}

pub fn curve_point(w: f64) -> Result<ShapePoint> {
    if !(0.0..=1.0).contains(&w) {
        return Err(Error::Domain {
            what: "curve_point",
            value: w,
        });
    }
    let u = semicircle_quantile(w)?;
    let v = omega(u)?;
    Ok(ShapePoint {
        w,
        x: (v + u) / 2.0,
        y: (v - u) / 2.0,
    })
}

/// `Π(u) = π/4 − cot⁻¹[(2/π)(asin(u/2) + √(4−u²)/u)]`, with
/// `cot⁻¹(x) = arctan(1/x)` and `Π(0) = π/4`.
pub fn pi_angle(u: f64) -> Result<f64> {
    check_u("pi_angle", u)?;
    if u == 0.0 {
        return Ok(FRAC_PI_4);
    }
    let arg = 2.0 / PI * ((u / 2.0).asin() + (4.0 - u * u).sqrt() / u);
    Ok(FRAC_PI_4 - (1.0 / arg).atan())
}

/// `Π⁻¹(θ)` on `[0, π/2]`.
pub fn pi_angle_inverse(theta: f64) -> Result<f64> {
    if !(0.0..=FRAC_PI_2).contains(&theta) {
        return Err(Error::Domain {
            what: "pi_angle_inverse",
            value: theta,
        });
    }
    if theta == 0.0 {
        return Ok(2.0);
    }
    if theta == FRAC_PI_2 {
        return Ok(-2.0);
    }
    Ok(bisect(-2.0, 2.0, false, theta, |u| {
        pi_angle(u).expect("bisection stays in domain")
    }))
}

/// `F_Θ(θ) = 1 − F(Π⁻¹(θ))`.
pub fn theta_cdf(theta: f64) -> Result<f64> {
    if !(0.0..=FRAC_PI_2).contains(&theta) {
        return Err(Error::Domain {
            what: "theta_cdf",
            value: theta,
        });
    }
    Ok(1.0 - semicircle_cdf(pi_angle_inverse(theta)?)?)
}

/// Value of `Ψ` on a tableau.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "lowercase")]
pub enum PsiValue {
    Row(u32),
    Column(u32),
    Continuous(f64),
}

impl PsiValue {
    pub fn to_letter(self) -> Letter {
        match self {
            PsiValue::Row(k) => Letter::Row(k),
            PsiValue::Column(k) => Letter::Col(k),
            PsiValue::Continuous(v) => Letter::Neutral(v),
        }
    }

    /// Position on `[0, 1]` of the compactified alphabet: rows sit at 0,
    /// columns at 1.
    pub fn unit_value(self) -> f64 {
        match self {
            PsiValue::Row(_) => 0.0,
            PsiValue::Column(_) => 1.0,
            PsiValue::Continuous(v) => v,
        }
    }
}

/// Finite-n estimate of `Ψ` from a jdt path of an `n`-box prefix.
///
/// Row and column letters make the path run off along a single row or column
/// at linear speed, while a sloped path stays within the `2√n` envelope of the
/// continuous part. A final box beyond the envelope horizontally is read as a
/// row, vertically as a column; otherwise its slope is mapped through `F_Θ`.
pub fn classify_path_with_min(path: &JdtPath, n: usize, min: usize) -> Result<PsiValue> {
    if n < min || n == 0 {
        return Err(Error::PrefixTooShort { n, min });
    }
    let last = path.lazy_at(n as u32);
    let envelope = 2.0 * (n as f64).sqrt();
    if last.x as f64 > envelope {
        return Ok(PsiValue::Row(last.y as u32));
    }
    if last.y as f64 > envelope {
        return Ok(PsiValue::Column(last.x as u32));
    }
    let theta = (last.y as f64).atan2(last.x as f64);
    Ok(PsiValue::Continuous(theta_cdf(theta)?))
}

pub fn classify_path(path: &JdtPath, n: usize) -> Result<PsiValue> {
    classify_path_with_min(path, n, DEFAULT_CLASSIFIER_MIN)
}
