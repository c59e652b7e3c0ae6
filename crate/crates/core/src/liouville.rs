//! The Liouville change of variables: push a Schrodinger problem through an
//! analytic coordinate map `r = r(xi)`.
//!
//! With `-chi'' + W chi = -kappa^2 chi` in the `r` variable, the transformed
//! pair is
//!
//! ```text
//! Psi(xi)   = chi(r(xi)) / sqrt(r'(xi))
//! V(xi) - E = (r')^2 (W(r(xi)) + kappa^2) + (3/4)(r''/r')^2 - (1/2)(r'''/r')
//! ```
//!
//! Maps carry their first three derivatives analytically; third derivatives
//! obtained by differencing are too noisy to feed the potential transform,
//! so differencing exists only as a cross-check (see the tests).

use crate::{Error, Result, POLE_GUARD};
use num_complex::Complex64;

/// An analytic coordinate map with its first three derivatives.
///
/// `d1` must stay away from zero at every evaluated point; that is the
/// invertibility of `r(xi)` that the transform rests on.
pub trait CoordinateMap {
    fn r(&self, xi: Complex64) -> Result<Complex64>;
    fn d1(&self, xi: Complex64) -> Result<Complex64>;
    fn d2(&self, xi: Complex64) -> Result<Complex64>;
    fn d3(&self, xi: Complex64) -> Result<Complex64>;
}

fn invertible_d1<M: CoordinateMap + ?Sized>(map: &M, xi: Complex64) -> Result<Complex64> {
    let d1 = map.d1(xi)?;
    if d1.norm() < POLE_GUARD {
        return Err(Error::NotInvertible {
            at: xi,
            magnitude: d1.norm(),
        });
    }
    Ok(d1)
}

/// `V(xi) - E` for the transformed problem, given the original potential `W`
/// and original energy `-kappa_sq`.
pub fn transform_potential<M, W>(
    potential: W,
    kappa_sq: f64,
    map: &M,
    xi: Complex64,
) -> Result<Complex64>
where
    M: CoordinateMap + ?Sized,
    W: Fn(Complex64) -> Result<Complex64>,
{
    let d1 = invertible_d1(map, xi)?;
    let w = potential(map.r(xi)?)?;
    Ok(d1 * d1 * (w + kappa_sq) + schwarzian_terms(map, xi)?)
}

/// The derivative-only part of the transformed potential,
/// `(3/4)(r''/r')^2 - (1/2)(r'''/r')`.
pub fn schwarzian_terms<M>(map: &M, xi: Complex64) -> Result<Complex64>
where
    M: CoordinateMap + ?Sized,
{
    let d1 = invertible_d1(map, xi)?;
    let ratio2 = map.d2(xi)? / d1;
    let ratio3 = map.d3(xi)? / d1;
    Ok(0.75 * ratio2 * ratio2 - 0.5 * ratio3)
}

/// `Psi(xi) = chi(r(xi)) / sqrt(r'(xi))` with the square-root branch kept
/// continuous along a sweep by `tracker`.
///
/// The caller supplies `chi_value = chi(r(xi))`; this function only applies
/// the Jacobian factor, so the same machinery serves any source model.
pub fn transform_wavefunction<M>(
    chi_value: Complex64,
    map: &M,
    xi: Complex64,
    tracker: &mut PhaseTracker,
) -> Result<Complex64>
where
    M: CoordinateMap + ?Sized,
{
    let d1 = invertible_d1(map, xi)?;
    Ok(chi_value / tracker.continuous_sqrt(d1))
}

/// Square-root branch unwrapping along one contour sweep.
///
/// The first call takes the principal root; later calls pick the sign that
/// stays closer to the previous root. When the radicand itself advances by
/// more than pi/2 in phase between consecutive samples the sweep is too
/// coarse for the sign choice to be trustworthy; that is counted and logged,
/// not fatal.
///
/// One tracker serves one sweep. Concurrent sweeps use independent trackers.
#[derive(Debug, Default, Clone)]
pub struct PhaseTracker {
    prev_input: Option<Complex64>,
    prev_root: Option<Complex64>,
    jumps: usize,
}

impl PhaseTracker {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of phase discontinuities (> pi/2 between samples) seen so far.
    pub fn jumps(&self) -> usize {
        self.jumps
    }

    pub fn continuous_sqrt(&mut self, w: Complex64) -> Complex64 {
        let mut root = w.sqrt();
        if let Some(prev) = self.prev_root {
            if (root + prev).norm() < (root - prev).norm() {
                root = -root;
            }
        }
        if let Some(prev) = self.prev_input {
            if prev.norm() > 0.0 && w.norm() > 0.0 {
                let step = (w / prev).arg().abs();
                if step > std::f64::consts::FRAC_PI_2 {
                    self.jumps += 1;
                    log::warn!(
                        "square-root argument advanced by {step:.3} rad between consecutive \
                         samples; branch tracking may be unreliable"
                    );
                }
            }
        }
        self.prev_input = Some(w);
        self.prev_root = Some(root);
        root
    }
}
