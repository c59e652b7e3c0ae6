//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line (visible with `--nocapture`). Tolerances are pinned here
//! and nowhere else.
//!
//! Run with:
//!   cargo test -p ptspec-core --test acceptance -- --nocapture --test-threads=1

mod common;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

use ptspec_core::hulthen::DEFAULT_N_CAP;
use ptspec_core::jacobi::Jacobi;
use ptspec_core::verify::{self, FdGrid};
use ptspec_core::{Arch, HulthenModel, Parity, PoschlTeller, SpectrumEntry};

const I: Complex64 = Complex64::new(0.0, 1.0);

struct Criterion {
    number: u32,
    name: &'static str,
    started: Instant,
    budget_s: f64,
}

impl Criterion {
    fn start(number: u32, name: &'static str, budget_s: f64) -> Self {
        Self {
            number,
            name,
            started: Instant::now(),
            budget_s,
        }
    }

    fn finish(self, pass: bool, detail: String) {
        let elapsed = self.started.elapsed().as_secs_f64();
        let verdict = if pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {} [{}]: {verdict} ({detail}; {elapsed:.2} s)",
            self.number, self.name
        );
        assert!(pass, "criterion {} failed: {detail}", self.number);
        assert!(
            elapsed < self.budget_s,
            "criterion {} exceeded its {} s budget: {elapsed:.2} s",
            self.number,
            self.budget_s
        );
    }
}

fn alpha_beta_three() -> PoschlTeller {
    PoschlTeller::new(3.0, 3.0, 0.3).unwrap()
}

/// The Hulthen image entry of a Poschl-Teller state (energy flips to
/// +kappa^2, beta picks up the tau sign).
fn image_entry(source: &PoschlTeller, entry: &SpectrumEntry) -> SpectrumEntry {
    SpectrumEntry {
        qn: entry.qn,
        kappa: entry.kappa,
        energy: entry.kappa * entry.kappa,
        beta_effective: entry.qn.tau.sign() * source.beta(),
    }
}

#[test]
fn criterion_1_closed_form_consistency() {
    let criterion = Criterion::start(1, "closed-form energy consistency", 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(0x1d_2026);
    let mut worst = 0.0f64;
    let mut drawn = 0;
    while drawn < 1000 {
        let alpha: f64 = rng.random_range(0.0..5.0);
        let c: f64 = rng.random_range(-20.0..20.0);
        let sigma = if rng.random::<bool>() {
            Parity::Plus
        } else {
            Parity::Minus
        };
        let n: u32 = rng.random_range(0..=10);
        let t = sigma.sign() * alpha + 2.0 * f64::from(n) + 1.0;
        if t.abs() <= 1e-6 {
            continue;
        }
        drawn += 1;
        let coupling_a = 1.0 - alpha * alpha;
        let model = HulthenModel::new(coupling_a, c - coupling_a, 0.3).unwrap();
        let energy = model.energy(sigma, n).unwrap();
        let kappa = model.state_parameters(sigma, n).unwrap().kappa;
        worst = worst.max(common::rel_gap(energy, kappa * kappa));
    }
    criterion.finish(
        worst < 1e-12,
        format!("1000 draws, worst rel gap {worst:.2e}"),
    );
}

#[test]
fn criterion_2_liouville_identity() {
    let criterion = Criterion::start(2, "potential transform identity", 5.0);
    let source = alpha_beta_three();
    let spectrum = source.spectrum();
    assert_eq!(spectrum.len(), 3, "hand enumeration: kappa in {{5, 3, 1}}");

    let mut worst = 0.0f64;
    let mut control = f64::INFINITY;
    for entry in &spectrum {
        let target = HulthenModel::from_poschl_teller_state(&source, &entry.qn).unwrap();
        let points = target.arch().sample(-5.0, 5.0, 200).unwrap();
        let deviation =
            verify::check_liouville_identity(&source, &entry.qn, &target, &points).unwrap();
        worst = worst.max(deviation);

        // perturbed-coupling negative control
        let skewed =
            HulthenModel::new(target.coupling_a(), target.coupling_b() + 0.1, 0.3).unwrap();
        let skew_dev = verify::transform_deviation(&source, &entry.qn, &skewed, &points).unwrap();
        control = control.min(skew_dev);
    }
    criterion.finish(
        worst < 1e-8 && control > 1e-3,
        format!(
            "3 states x 200 points, worst deviation {worst:.2e}, weakest control {control:.2e}"
        ),
    );
}

#[test]
fn criterion_3_ode_residuals() {
    let criterion = Criterion::start(3, "ODE residuals on both sides", 10.0);
    let source = alpha_beta_three();
    let spectrum = source.spectrum();

    let line: Vec<Complex64> = (0..50)
        .map(|i| source.shifted(-5.0 + 10.0 * (i as f64) / 49.0))
        .collect();

    let mut worst_line = 0.0f64;
    let mut worst_arch = 0.0f64;
    for entry in &spectrum {
        let analytic = |r: Complex64| {
            let (chi, _, chi_dd) = source.chi_with_derivatives(&entry.qn, r)?;
            Ok((chi, chi_dd))
        };
        let residual =
            verify::residual_sweep_analytic(analytic, |r| source.potential(r), entry.energy, &line)
                .unwrap();
        worst_line = worst_line.max(residual);

        let target = HulthenModel::from_poschl_teller_state(&source, &entry.qn).unwrap();
        let image = image_entry(&source, entry);
        let xis: Vec<Complex64> = target
            .arch()
            .sample(-5.0, 5.0, 100)
            .unwrap()
            .iter()
            .map(|p| p.xi)
            .collect();
        let residual = verify::residual_sweep_differenced(
            |xi| target.psi(&image, xi),
            |xi| target.potential(xi),
            image.energy,
            &xis,
        )
        .unwrap();
        worst_arch = worst_arch.max(residual);
    }

    // negative controls at E + 1 on the ground state, both sides
    let ground = &spectrum[0];
    let analytic = |r: Complex64| {
        let (chi, _, chi_dd) = source.chi_with_derivatives(&ground.qn, r)?;
        Ok((chi, chi_dd))
    };
    let line_control = verify::residual_sweep_analytic(
        analytic,
        |r| source.potential(r),
        ground.energy + 1.0,
        &line,
    )
    .unwrap();
    let target = HulthenModel::from_poschl_teller_state(&source, &ground.qn).unwrap();
    let image = image_entry(&source, ground);
    let xis: Vec<Complex64> = target
        .arch()
        .sample(-5.0, 5.0, 100)
        .unwrap()
        .iter()
        .map(|p| p.xi)
        .collect();
    let arch_control = verify::residual_sweep_differenced(
        |xi| target.psi(&image, xi),
        |xi| target.potential(xi),
        image.energy + 1.0,
        &xis,
    )
    .unwrap();

    criterion.finish(
        worst_line < 1e-9 && worst_arch < 1e-7 && line_control > 1e-2 && arch_control > 1e-2,
        format!(
            "line residual {worst_line:.2e}, arch residual {worst_arch:.2e}, \
             controls {line_control:.2e}/{arch_control:.2e}"
        ),
    );
}

#[test]
fn criterion_4_finite_difference_oracle() {
    let criterion = Criterion::start(4, "finite-difference eigenvalue oracle", 60.0);
    let source = alpha_beta_three();
    let targets: Vec<f64> = source.spectrum().iter().map(|e| e.energy).collect();
    assert_eq!(targets, vec![-25.0, -9.0, -1.0]);

    let mut errors: Vec<Vec<f64>> = Vec::new(); // [grid][state]
    let mut detail = String::new();
    let mut pass = true;
    for (refinement, n) in [500usize, 1000, 2000].into_iter().enumerate() {
        let grid = FdGrid::new(12.0, n).unwrap();
        let eigenvalues = verify::fd_pt_eigenvalues(&source, &grid, n).unwrap();

        let negatives = eigenvalues.iter().filter(|e| e.re < 0.0).count();
        pass &= negatives == targets.len();

        let reports = verify::match_eigenvalues(&targets, &eigenvalues);
        if n == 2000 {
            for report in &reports {
                pass &= report.abs_error < 1e-2 && report.imag_leak < 1e-6;
                detail.push_str(&format!(
                    "E={}: err {:.1e} imag {:.0e}; ",
                    report.target, report.abs_error, report.imag_leak
                ));
            }
        }
        errors.push(reports.iter().map(|r| r.abs_error).collect());
        let _ = refinement;
    }

    // second-order convergence: error drops ~4x per grid doubling
    for step in 0..2 {
        for (coarse, fine) in errors[step].iter().zip(&errors[step + 1]) {
            let ratio = coarse / fine;
            pass &= (3.2..4.8).contains(&ratio);
            if step == 1 {
                detail.push_str(&format!("ratio {ratio:.2}; "));
            }
        }
    }
    criterion.finish(pass, detail.trim_end_matches("; ").to_string());
}

#[test]
fn criterion_5_contour_geometry() {
    let criterion = Criterion::start(5, "contour geometry", 1.0);
    let mut worst = 0.0f64;
    let mut antisymmetric = true;
    let mut confined = true;
    for epsilon in [0.1, 0.3, 0.7, 1.2] {
        let arch = Arch::new(epsilon).unwrap();
        let bound = std::f64::consts::FRAC_PI_2 - epsilon;
        for k in 0..2500 {
            let x = -6.0 + 12.0 * (k as f64) / 2499.0;
            let xi = arch.xi(x);
            worst = worst.max(common::rel_dev(
                Complex64::new(x, -epsilon).sinh(),
                -I * (I * xi).exp(),
            ));
            // PT antisymmetry, exact to rounding (bitwise for these formulas)
            antisymmetric &= arch.xi(-x) == -xi.conj();
            confined &= xi.re.abs() <= bound;
        }
    }
    criterion.finish(
        worst < 1e-12 && antisymmetric && confined,
        format!("4 shifts x 2500 points, worst identity deviation {worst:.2e}"),
    );
}

#[test]
fn criterion_6_positivity_and_decay() {
    let criterion = Criterion::start(6, "energy positivity and decay", 5.0);
    // alpha = 3, C = 16 (one state) and alpha = 3.5, C = 16 (two states)
    let models = [
        HulthenModel::new(-8.0, 24.0, 0.3).unwrap(),
        HulthenModel::new(1.0 - 12.25, 16.0 - (1.0 - 12.25), 0.3).unwrap(),
    ];

    let mut pass = true;
    let mut states = 0;
    let mut tail = String::new();
    for model in &models {
        // potential tail along the downward spike xi = -iu; the thresholds
        // ride on the coupling scale since |V| ~ (|A|+|B|) e^{-2u}
        let scale = model.coupling_a().abs() + model.coupling_b().abs();
        for (u, bound) in [(5.0, 1e-3), (10.0, 1e-7), (20.0, 1e-15)] {
            let v = model.potential(Complex64::new(0.0, -u)).unwrap().norm();
            pass &= v < scale * bound;
            if u == 5.0 {
                tail.push_str(&format!("|V(-5i)| {v:.1e}; "));
            }
        }

        let spectrum = model.spectrum(DEFAULT_N_CAP);
        pass &= !spectrum.is_empty();
        for entry in &spectrum {
            states += 1;
            pass &= entry.energy > 0.0;

            // moduli decay strictly beyond |x| = 5
            let points = model.arch().sample(-10.0, 10.0, 201).unwrap();
            let values = model.psi_on_arch(entry, &points).unwrap();
            for i in 0..points.len() - 1 {
                if points[i].x >= 5.0 {
                    pass &= values[i + 1].norm() < values[i].norm();
                }
                if points[i + 1].x <= -5.0 {
                    pass &= values[i].norm() < values[i + 1].norm();
                }
            }
        }
    }
    criterion.finish(
        pass,
        format!(
            "{states} states positive and decaying; {}",
            tail.trim_end_matches("; ")
        ),
    );
}

#[test]
fn criterion_7_special_function_suite() {
    let criterion = Criterion::start(7, "Jacobi special-function suite", 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(0x7ac0b1);

    // recurrence vs the entire finite-sum representation
    let mut worst_oracle = 0.0f64;
    for _ in 0..500 {
        let n = rng.random_range(0u32..=10);
        let a = common::complex_in_disk(&mut rng, 3.0);
        let b = common::complex_in_disk(&mut rng, 3.0);
        let z = common::complex_in_disk(&mut rng, 3.0);
        let got = Jacobi::new(n, a, b).eval(z);
        let oracle = common::jacobi_finite_sum(n, a, b, z);
        worst_oracle = worst_oracle.max(common::rel_dev(got, oracle));
    }

    // reflection symmetry
    let mut worst_symmetry = 0.0f64;
    for _ in 0..500 {
        let n = rng.random_range(0u32..=8);
        let a = common::complex_in_disk(&mut rng, 2.0);
        let b = common::complex_in_disk(&mut rng, 2.0);
        let z = common::complex_in_disk(&mut rng, 3.0);
        let lhs = Jacobi::new(n, a, b).eval(-z);
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let rhs = sign * Jacobi::new(n, b, a).eval(z);
        worst_symmetry = worst_symmetry.max(common::rel_dev(lhs, rhs));
    }

    // endpoint value against the product-formula binomial
    let mut worst_endpoint = 0.0f64;
    for _ in 0..500 {
        let n = rng.random_range(0u32..=10);
        let a = rng.random_range(-0.99f64..5.0);
        let b = common::complex_in_disk(&mut rng, 5.0);
        let got = Jacobi::new(n, Complex64::new(a, 0.0), b).eval(Complex64::new(1.0, 0.0));
        let expected = common::binomial(Complex64::new(a + f64::from(n), 0.0), n);
        worst_endpoint = worst_endpoint.max(common::rel_dev(got, expected));
    }

    // derivative identity vs Richardson differencing, at the polynomial scale
    let mut worst_deriv = 0.0f64;
    for _ in 0..500 {
        let n = rng.random_range(1u32..=8);
        let a = common::complex_in_disk(&mut rng, 3.0);
        let b = common::complex_in_disk(&mut rng, 3.0);
        let z = common::complex_in_disk(&mut rng, 3.0);
        let poly = Jacobi::new(n, a, b);
        let got = poly.deriv(z, 1);
        let diff = ptspec_core::numdiff::first_derivative_refined(
            |w| Ok(poly.eval(w)),
            z,
            1e-3,
            Complex64::new(1.0, 0.0),
        )
        .unwrap();
        let scale = got
            .norm()
            .max(diff.norm())
            .max(poly.eval(z).norm())
            .max(1.0);
        worst_deriv = worst_deriv.max((got - diff).norm() / scale);
    }

    criterion.finish(
        worst_oracle < 1e-10
            && worst_symmetry < 1e-12
            && worst_endpoint < 1e-12
            && worst_deriv < 1e-7,
        format!(
            "oracle {worst_oracle:.1e}, symmetry {worst_symmetry:.1e}, \
             endpoint {worst_endpoint:.1e}, derivative {worst_deriv:.1e}"
        ),
    );
}
