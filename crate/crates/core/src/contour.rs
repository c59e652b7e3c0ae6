//! The bent arch: the coordinate change `sinh r = -i e^{i xi}` restricted to
//! the shifted line `Im r = -eps`.
//!
//! Splitting `xi = v - iu` and `r = x - i eps`, the defining relation is the
//! pair of invertible trigonometric rules
//!
//! ```text
//! sinh x cos eps = e^u sin v,      cosh x sin eps = e^u cos v,
//! ```
//!
//! so the real line of `x` maps onto the PT-symmetric arch
//!
//! ```text
//! v = arctan(tanh x / tan eps),    u = (1/2) ln(sinh^2 x + sin^2 eps),
//! ```
//!
//! confined to the strip `v in (-pi/2 + eps, pi/2 - eps)`. The arch starts
//! and ends at imaginary minus infinity and its top sits at `x = v = 0`,
//! height `-u(0) = ln(1/sin eps)`: shrinking `eps` pushes the image of the
//! `r = 0` singularity upwards and off to infinity.

use crate::liouville::CoordinateMap;
use crate::poschl_teller::check_epsilon;
use crate::{Error, Result};
use num_complex::Complex64;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// How far the inverse map may land off the `Im r = -eps` line when the
/// requested point is supposed to sit on the arch.
const INVERSION_TOL: f64 = 1e-9;

/// One sampled point of the arch, carrying both coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourPoint {
    /// Position on the original line.
    pub x: f64,
    /// `Re xi`.
    pub v: f64,
    /// `-Im xi`.
    pub u: f64,
    /// `xi = v - i u`.
    pub xi: Complex64,
    /// `r = x - i eps`.
    pub r: Complex64,
}

/// The arch map for a fixed shift `eps in (0, pi/2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Arch {
    epsilon: f64,
}

impl Arch {
    pub fn new(epsilon: f64) -> Result<Self> {
        check_epsilon(epsilon)?;
        Ok(Self { epsilon })
    }

    /// Constructor for callers that already validated `epsilon`.
    pub(crate) fn unchecked(epsilon: f64) -> Self {
        Self { epsilon }
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// `(v, u)` of the arch point above `x`.
    pub fn xi_parts(&self, x: f64) -> (f64, f64) {
        let v = (x.tanh() / self.epsilon.tan()).atan();
        let u = 0.5 * (x.sinh().powi(2) + self.epsilon.sin().powi(2)).ln();
        (v, u)
    }

    /// `xi(x) = v - i u`.
    pub fn xi(&self, x: f64) -> Complex64 {
        let (v, u) = self.xi_parts(x);
        Complex64::new(v, -u)
    }

    /// The fully populated contour point above `x`.
    pub fn point(&self, x: f64) -> ContourPoint {
        let (v, u) = self.xi_parts(x);
        ContourPoint {
            x,
            v,
            u,
            xi: Complex64::new(v, -u),
            r: Complex64::new(x, -self.epsilon),
        }
    }

    /// Uniformly spaced sample of the arch, endpoints included.
    pub fn sample(&self, x_min: f64, x_max: f64, count: usize) -> Result<Vec<ContourPoint>> {
        if count < 2 {
            return Err(Error::InvalidArgument(format!(
                "need at least 2 sample points, got {count}"
            )));
        }
        if x_min >= x_max || x_min.is_nan() || x_max.is_nan() {
            return Err(Error::InvalidArgument(format!(
                "empty sample range [{x_min}, {x_max}]"
            )));
        }
        let span = x_max - x_min;
        let denom = (count - 1) as f64;
        Ok((0..count)
            .map(|i| self.point(x_min + span * (i as f64 / denom)))
            .collect())
    }

    /// Solve `sinh r = -i e^{i xi}` for the branch near `Im r = -eps`.
    ///
    /// The principal inverse hyperbolic sine already lands in the strip
    /// `Im r in (-pi/2, 0)` whenever `xi` sits on or near the arch, because
    /// there `Im(-i e^{i xi}) < 0`; anything else has left the branch.
    pub fn invert(&self, xi: Complex64) -> Result<Complex64> {
        let r = stable_asinh(-I * (I * xi).exp());
        if !(r.re.is_finite() && r.im.is_finite()) || r.im >= 0.0 {
            return Err(Error::InversionBranch {
                at: xi,
                deviation: (r.im + self.epsilon).abs(),
            });
        }
        Ok(r)
    }

    /// As [`Arch::invert`], additionally requiring the result to land on the
    /// shifted line to within 1e-9. Use for points meant to be exactly on
    /// the arch.
    pub fn invert_on_line(&self, xi: Complex64) -> Result<Complex64> {
        let r = self.invert(xi)?;
        let deviation = (r.im + self.epsilon).abs();
        if deviation > INVERSION_TOL {
            return Err(Error::InversionBranch { at: xi, deviation });
        }
        Ok(r)
    }
}

impl CoordinateMap for Arch {
    fn r(&self, xi: Complex64) -> Result<Complex64> {
        self.invert(xi)
    }

    /// `r'(xi) = i tanh r`, from differentiating the defining relation.
    fn d1(&self, xi: Complex64) -> Result<Complex64> {
        Ok(I * self.invert(xi)?.tanh())
    }

    /// `r''(xi) = -tanh r sech^2 r` (chain rule through `d1`).
    fn d2(&self, xi: Complex64) -> Result<Complex64> {
        let r = self.invert(xi)?;
        let t = r.tanh();
        let sech2 = sech_squared(r);
        Ok(-t * sech2)
    }

    /// `r'''(xi) = i tanh r sech^2 r (2 tanh^2 r - sech^2 r)`.
    fn d3(&self, xi: Complex64) -> Result<Complex64> {
        let r = self.invert(xi)?;
        let t = r.tanh();
        let sech2 = sech_squared(r);
        Ok(I * t * sech2 * (2.0 * t * t - sech2))
    }
}

fn sech_squared(r: Complex64) -> Complex64 {
    let cosh = r.cosh();
    1.0 / (cosh * cosh)
}

/// Principal `asinh`, reduced by odd symmetry to `Re w >= 0` where the
/// `ln(w + sqrt(1 + w^2))` formula is free of cancellation. The naive form
/// loses ~`|w|^2 eps` absolute accuracy for large negative `Re w`, which is
/// exactly where the arch tails live.
fn stable_asinh(w: Complex64) -> Complex64 {
    if w.re < 0.0 {
        -(-w).asinh()
    } else {
        w.asinh()
    }
}
