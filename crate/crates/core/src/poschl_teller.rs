//! The PT-symmetric Poschl-Teller well on the shifted line `r = x - i*eps`.
//!
//! The potential
//!
//! ```text
//! W(r) = (beta^2 - 1/4)/sinh^2 r - (alpha^2 - 1/4)/cosh^2 r
//! ```
//!
//! is evaluated just below the real axis, which keeps it regular for any
//! shift `eps` in `(0, pi/2)`. Bound states exist at `E = -kappa^2` with
//! `kappa = -sigma*alpha - tau*beta - 2n - 1 > 0`; the generalized parities
//! `sigma, tau = +-1` select the sign branches of the coupling exponents in
//! the wave functions and double the solution families of the real-line
//! problem.

use crate::jacobi::Jacobi;
use crate::{Error, Result, POLE_GUARD};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::FRAC_PI_2;
use std::fmt;

/// Generalized parity (quasi-parity) label.
///
/// Ordered so that `-1 < +1`, which fixes the deterministic tie-break of
/// degenerate spectrum entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum Parity {
    Minus,
    Plus,
}

impl Parity {
    pub const BOTH: [Parity; 2] = [Parity::Minus, Parity::Plus];

    /// The sign as a float, `-1.0` or `+1.0`.
    pub fn sign(self) -> f64 {
        match self {
            Parity::Minus => -1.0,
            Parity::Plus => 1.0,
        }
    }

    /// Parity carrying the sign of `value`; zero maps to `Plus`.
    pub fn of_sign(value: f64) -> Self {
        if value < 0.0 {
            Parity::Minus
        } else {
            Parity::Plus
        }
    }
}

impl From<Parity> for i8 {
    fn from(p: Parity) -> i8 {
        match p {
            Parity::Minus => -1,
            Parity::Plus => 1,
        }
    }
}

impl TryFrom<i8> for Parity {
    type Error = String;
    fn try_from(v: i8) -> std::result::Result<Self, String> {
        match v {
            -1 => Ok(Parity::Minus),
            1 => Ok(Parity::Plus),
            other => Err(format!("parity must be -1 or +1, got {other}")),
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", i8::from(*self))
    }
}

/// Labels of one bound state: level index and the two generalized parities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuantumNumbers {
    pub n: u32,
    pub sigma: Parity,
    pub tau: Parity,
}

/// One bound state of either model.
///
/// `energy` is `-kappa^2` on the Poschl-Teller side and `+kappa^2` on the
/// Hulthen side. `beta_effective` is the model `beta` for Poschl-Teller
/// entries and the state-dependent product `tau*beta` for Hulthen entries.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub qn: QuantumNumbers,
    pub kappa: f64,
    pub energy: f64,
    pub beta_effective: f64,
}

/// The PT-symmetric Poschl-Teller model: couplings `alpha`, `beta` and the
/// contour shift `eps`.
///
/// `alpha` and `beta` are stored nonnegative; the formulas are invariant
/// under `(alpha -> -alpha, sigma -> -sigma)` so signs live entirely in the
/// parities and canonicalizing avoids double counting.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PoschlTeller {
    alpha: f64,
    beta: f64,
    epsilon: f64,
}

impl PoschlTeller {
    pub fn new(alpha: f64, beta: f64, epsilon: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha < 0.0 {
            return Err(Error::InvalidModel(format!(
                "alpha must be finite and >= 0, got {alpha}"
            )));
        }
        if !beta.is_finite() || beta < 0.0 {
            return Err(Error::InvalidModel(format!(
                "beta must be finite and >= 0, got {beta}"
            )));
        }
        check_epsilon(epsilon)?;
        Ok(Self {
            alpha,
            beta,
            epsilon,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// The shifted-line point `r = x - i*eps`.
    pub fn shifted(&self, x: f64) -> Complex64 {
        Complex64::new(x, -self.epsilon)
    }

    /// `W(r) = (beta^2 - 1/4)/sinh^2 r - (alpha^2 - 1/4)/cosh^2 r`.
    pub fn potential(&self, r: Complex64) -> Result<Complex64> {
        let sinh = r.sinh();
        let cosh = r.cosh();
        if sinh.norm() < POLE_GUARD {
            return Err(Error::PoleProximity {
                what: "sinh r",
                magnitude: sinh.norm(),
            });
        }
        if cosh.norm() < POLE_GUARD {
            return Err(Error::PoleProximity {
                what: "cosh r",
                magnitude: cosh.norm(),
            });
        }
        let beta_term = self.beta * self.beta - 0.25;
        let alpha_term = self.alpha * self.alpha - 0.25;
        Ok(beta_term / (sinh * sinh) - alpha_term / (cosh * cosh))
    }

    /// `kappa = -sigma*alpha - tau*beta - 2n - 1`. May come out nonpositive;
    /// admissibility (`kappa > 0`) is the caller's filter.
    pub fn kappa(&self, qn: &QuantumNumbers) -> f64 {
        -qn.sigma.sign() * self.alpha - qn.tau.sign() * self.beta - 2.0 * f64::from(qn.n) - 1.0
    }

    /// All bound states, energies `-kappa^2`, sorted by energy ascending.
    /// Degenerate energies are ordered by `(sigma, tau, n)`.
    ///
    /// Admissibility is `kappa > 0` and nothing else. Whether regularity at
    /// the removed `r = 0` singularity imposes further constraints (say on
    /// `tau*beta`) is left open here; the oracle suite checks the enumerated
    /// states against an independent discretization instead of assuming
    /// more.
    pub fn spectrum(&self) -> Vec<SpectrumEntry> {
        let mut entries = Vec::new();
        for sigma in Parity::BOTH {
            for tau in Parity::BOTH {
                for n in 0.. {
                    let qn = QuantumNumbers { n, sigma, tau };
                    let kappa = self.kappa(&qn);
                    if kappa <= 0.0 {
                        break; // kappa drops by 2 per level; nothing further is bound
                    }
                    entries.push(SpectrumEntry {
                        qn,
                        kappa,
                        energy: -kappa * kappa,
                        beta_effective: self.beta,
                    });
                }
            }
        }
        sort_entries(&mut entries);
        entries
    }

    /// The wave function
    /// `chi(r) = sinh^{tau*beta+1/2} r * cosh^{sigma*alpha+1/2} r * P_n^{(tau*beta, sigma*alpha)}(cosh 2r)`
    /// with complex powers on the principal branch.
    ///
    /// On the shifted line `Im sinh r = -cosh x sin eps < 0`, so the power
    /// base never touches the principal cut; for off-line points the cut is
    /// checked explicitly.
    pub fn chi(&self, qn: &QuantumNumbers, r: Complex64) -> Result<Complex64> {
        let parts = self.chi_parts(qn, r)?;
        Ok(parts.prefactor * parts.poly.eval(parts.argument))
    }

    /// `(chi, chi', chi'')` with the derivatives taken analytically through
    /// the product rule and the Jacobi parameter-shift identity.
    pub fn chi_with_derivatives(
        &self,
        qn: &QuantumNumbers,
        r: Complex64,
    ) -> Result<(Complex64, Complex64, Complex64)> {
        let ChiParts {
            prefactor,
            poly,
            argument: z,
            sinh,
            cosh,
            s,
            c,
        } = self.chi_parts(qn, r)?;

        let p0 = poly.eval(z);
        let p1 = poly.deriv(z, 1);
        let p2 = poly.deriv(z, 2);

        // log-derivative of the prefactor and its derivative
        let log_d = s * cosh / sinh + c * sinh / cosh;
        let log_dd = -s / (sinh * sinh) + c / (cosh * cosh);

        // d/dr and d2/dr2 of P_n(cosh 2r)
        let sinh2r = 2.0 * sinh * cosh;
        let p_r = 2.0 * sinh2r * p1;
        let p_rr = 4.0 * z * p1 + 4.0 * sinh2r * sinh2r * p2;

        let chi = prefactor * p0;
        let chi_d = prefactor * (log_d * p0 + p_r);
        let chi_dd = prefactor * ((log_d * log_d + log_dd) * p0 + 2.0 * log_d * p_r + p_rr);
        Ok((chi, chi_d, chi_dd))
    }

    fn chi_parts(&self, qn: &QuantumNumbers, r: Complex64) -> Result<ChiParts> {
        let sinh = r.sinh();
        let cosh = r.cosh();
        if sinh.norm() < POLE_GUARD {
            return Err(Error::PoleProximity {
                what: "sinh r",
                magnitude: sinh.norm(),
            });
        }
        if cosh.norm() < POLE_GUARD {
            return Err(Error::PoleProximity {
                what: "cosh r",
                magnitude: cosh.norm(),
            });
        }
        if sinh.im.abs() < POLE_GUARD && sinh.re < 0.0 {
            return Err(Error::BranchCut { at: r });
        }
        let a = qn.tau.sign() * self.beta;
        let b = qn.sigma.sign() * self.alpha;
        let s = a + 0.5;
        let c = b + 0.5;
        Ok(ChiParts {
            prefactor: sinh.powf(s) * cosh.powf(c),
            poly: Jacobi::with_real_parameters(qn.n, a, b),
            argument: (2.0 * r).cosh(),
            sinh,
            cosh,
            s,
            c,
        })
    }
}

struct ChiParts {
    prefactor: Complex64,
    poly: Jacobi,
    argument: Complex64,
    sinh: Complex64,
    cosh: Complex64,
    s: f64,
    c: f64,
}

pub(crate) fn check_epsilon(epsilon: f64) -> Result<()> {
    if !epsilon.is_finite() || epsilon <= 0.0 || epsilon >= FRAC_PI_2 {
        return Err(Error::InvalidModel(format!(
            "contour shift epsilon must lie in (0, pi/2), got {epsilon}"
        )));
    }
    Ok(())
}

/// Ascending energy, ties by `(sigma, tau, n)`.
pub(crate) fn sort_entries(entries: &mut [SpectrumEntry]) {
    entries.sort_by(|a, b| {
        a.energy
            .partial_cmp(&b.energy)
            .expect("finite energies")
            .then(a.qn.sigma.cmp(&b.qn.sigma))
            .then(a.qn.tau.cmp(&b.qn.tau))
            .then(a.qn.n.cmp(&b.qn.n))
    });
}
