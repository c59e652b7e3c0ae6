//! The PT-symmetric generalized Hulthen potential on the arch,
//!
//! ```text
//! V(xi) = A/(1 - e^{2 i xi})^2 + B/(1 - e^{2 i xi}),      E = +kappa^2,
//! ```
//!
//! obtained by pushing the Poschl-Teller well through the arch map. At
//! imaginary `xi` and `A = 0` this is the textbook Hulthen shape. The
//! couplings inherit the source parameters through `A = 1 - alpha^2` and
//! `C = A + B = kappa^2 - beta^2`; the state-dependence that this would
//! inject into `C` is transferred onto `beta` instead, which stays exactly
//! solvable because `C = t (t + 2 tau beta)` with `t = sigma alpha + 2n + 1`
//! is linear in `tau beta`.

use crate::contour::{Arch, ContourPoint};
use crate::liouville::{transform_wavefunction, CoordinateMap, PhaseTracker};
use crate::poschl_teller::{
    check_epsilon, sort_entries, Parity, PoschlTeller, QuantumNumbers, SpectrumEntry,
};
use crate::{Error, Result, POLE_GUARD};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Hard search bound for the level index; admissibility self-terminates well
/// below this for any sane couplings.
pub const DEFAULT_N_CAP: u32 = 64;

/// Near-zero guard for the linear-inversion denominator `t`.
const DEGENERATE_T: f64 = 1e-12;

/// The target model: couplings `A`, `B` of the potential, the arch shift,
/// and the derived source quantities `alpha = sqrt(1 - A)` and `C = A + B`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HulthenModel {
    coupling_a: f64,
    coupling_b: f64,
    epsilon: f64,
    alpha: f64,
    coupling_c: f64,
}

/// Output of the coupling inversion for one `(sigma, n)` pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StateParameters {
    /// `t = sigma alpha + 2n + 1`.
    pub t: f64,
    /// `tau beta = (C - t^2) / (2t)`.
    pub tau_beta: f64,
    /// `kappa = -(t^2 + C) / (2t)`; the state is bound iff this is positive.
    pub kappa: f64,
}

impl HulthenModel {
    /// Build the model from the potential couplings. Requires `A <= 1` so
    /// that the source coupling `alpha` stays real.
    pub fn new(coupling_a: f64, coupling_b: f64, epsilon: f64) -> Result<Self> {
        if !coupling_a.is_finite() || !coupling_b.is_finite() {
            return Err(Error::InvalidModel(format!(
                "couplings must be finite, got A = {coupling_a}, B = {coupling_b}"
            )));
        }
        if coupling_a > 1.0 {
            return Err(Error::InvalidModel(format!(
                "A must be <= 1 so that alpha = sqrt(1 - A) is real, got A = {coupling_a}"
            )));
        }
        check_epsilon(epsilon)?;
        Ok(Self {
            coupling_a,
            coupling_b,
            epsilon,
            alpha: (1.0 - coupling_a).sqrt(),
            coupling_c: coupling_a + coupling_b,
        })
    }

    /// The model whose spectrum contains the image of one Poschl-Teller
    /// bound state: `A = 1 - alpha^2`, `C = kappa^2 - beta^2`.
    pub fn from_poschl_teller_state(source: &PoschlTeller, qn: &QuantumNumbers) -> Result<Self> {
        let kappa = source.kappa(qn);
        if kappa <= 0.0 {
            return Err(Error::InvalidModel(format!(
                "source state has kappa = {kappa} <= 0, not a bound state"
            )));
        }
        let coupling_a = 1.0 - source.alpha() * source.alpha();
        let coupling_c = kappa * kappa - source.beta() * source.beta();
        Self::new(coupling_a, coupling_c - coupling_a, source.epsilon())
    }

    pub fn coupling_a(&self) -> f64 {
        self.coupling_a
    }

    pub fn coupling_b(&self) -> f64 {
        self.coupling_b
    }

    /// `C = A + B`.
    pub fn coupling_c(&self) -> f64 {
        self.coupling_c
    }

    /// `alpha = sqrt(1 - A)` of the source model.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// The arch this model lives on.
    pub fn arch(&self) -> Arch {
        Arch::unchecked(self.epsilon)
    }

    /// `V(xi) = A/(1 - e^{2 i xi})^2 + B/(1 - e^{2 i xi})`.
    pub fn potential(&self, xi: Complex64) -> Result<Complex64> {
        let q = (2.0 * Complex64::new(0.0, 1.0) * xi).exp();
        let denom = 1.0 - q;
        if denom.norm() < POLE_GUARD {
            return Err(Error::PoleProximity {
                what: "1 - e^{2 i xi}",
                magnitude: denom.norm(),
            });
        }
        Ok(self.coupling_a / (denom * denom) + self.coupling_b / denom)
    }

    /// Invert the coupling transfer for `(sigma, n)`.
    pub fn state_parameters(&self, sigma: Parity, n: u32) -> Result<StateParameters> {
        let t = sigma.sign() * self.alpha + 2.0 * f64::from(n) + 1.0;
        if t.abs() < DEGENERATE_T {
            return Err(Error::DegenerateState { t });
        }
        let tau_beta = (self.coupling_c - t * t) / (2.0 * t);
        let kappa = -(t * t + self.coupling_c) / (2.0 * t);
        Ok(StateParameters { t, tau_beta, kappa })
    }

    /// The closed-form energy
    /// `E = A + B + (1/4) [t - (A+B)/t]^2`, algebraically equal to `kappa^2`
    /// from [`HulthenModel::state_parameters`].
    pub fn energy(&self, sigma: Parity, n: u32) -> Result<f64> {
        let t = sigma.sign() * self.alpha + 2.0 * f64::from(n) + 1.0;
        if t.abs() < DEGENERATE_T {
            return Err(Error::DegenerateState { t });
        }
        let c = self.coupling_c;
        let bracket = t - c / t;
        Ok(c + 0.25 * bracket * bracket)
    }

    /// All bound states with `t != 0` and `kappa > 0`, energies `+kappa^2`,
    /// sorted ascending. Ties are ordered by `(sigma, n)`.
    ///
    /// The inversion fixes only the product `tau beta`, and
    /// `(tau, beta) -> (-tau, -beta)` changes nothing, so entries carry the
    /// canonical `tau = +1` with the signed product in `beta_effective`.
    pub fn spectrum(&self, n_cap: u32) -> Vec<SpectrumEntry> {
        let mut entries = Vec::new();
        for sigma in Parity::BOTH {
            for n in 0..=n_cap {
                let Ok(params) = self.state_parameters(sigma, n) else {
                    continue; // t = 0: the inversion is undefined here
                };
                if params.kappa <= 0.0 {
                    continue;
                }
                entries.push(SpectrumEntry {
                    qn: QuantumNumbers {
                        n,
                        sigma,
                        tau: Parity::Plus,
                    },
                    kappa: params.kappa,
                    energy: params.kappa * params.kappa,
                    beta_effective: params.tau_beta,
                });
            }
        }
        sort_entries(&mut entries);
        entries
    }

    /// The source Poschl-Teller state behind one spectrum entry: `beta` is
    /// `|tau beta|` with the sign moved into the `tau` parity.
    pub fn source_state(&self, entry: &SpectrumEntry) -> Result<(PoschlTeller, QuantumNumbers)> {
        let model = PoschlTeller::new(self.alpha, entry.beta_effective.abs(), self.epsilon)?;
        let qn = QuantumNumbers {
            n: entry.qn.n,
            sigma: entry.qn.sigma,
            tau: Parity::of_sign(entry.beta_effective),
        };
        Ok((model, qn))
    }

    /// The transformed eigenfunction `psi(xi) = chi(r(xi)) / sqrt(r'(xi))`
    /// at one point, on the principal square-root branch.
    ///
    /// For sweeps along the arch prefer [`HulthenModel::psi_on_arch`], which
    /// unwraps the branch continuously outward from the arch top.
    pub fn psi(&self, entry: &SpectrumEntry, xi: Complex64) -> Result<Complex64> {
        let (source, qn) = self.source_state(entry)?;
        let arch = self.arch();
        let chi = source.chi(&qn, arch.r(xi)?)?;
        transform_wavefunction(chi, &arch, xi, &mut PhaseTracker::new())
    }

    /// `psi` along a sampled arch, branch-tracked from the point nearest the
    /// top (`x = 0`) outward in both directions.
    pub fn psi_on_arch(
        &self,
        entry: &SpectrumEntry,
        points: &[ContourPoint],
    ) -> Result<Vec<Complex64>> {
        let (source, qn) = self.source_state(entry)?;
        let arch = self.arch();
        let mut values = vec![Complex64::new(0.0, 0.0); points.len()];
        if points.is_empty() {
            return Ok(values);
        }
        let seed = points
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| a.x.abs().total_cmp(&b.x.abs()))
            .map(|(i, _)| i)
            .unwrap_or(0);

        let mut rightward = PhaseTracker::new();
        for (i, point) in points.iter().enumerate().skip(seed) {
            let chi = source.chi(&qn, point.r)?;
            values[i] = transform_wavefunction(chi, &arch, point.xi, &mut rightward)?;
        }
        let mut leftward = PhaseTracker::new();
        for (i, point) in points.iter().enumerate().take(seed + 1).rev() {
            let chi = source.chi(&qn, point.r)?;
            values[i] = transform_wavefunction(chi, &arch, point.xi, &mut leftward)?;
        }
        Ok(values)
    }
}
