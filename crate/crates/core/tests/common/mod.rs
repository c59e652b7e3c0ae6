//! Shared test-side oracles and samplers. Everything here is independent of
//! the library's evaluation paths: the finite-sum Jacobi representation is
//! entire in all arguments and shares no code with the degree recurrence.

// each test binary uses its own subset
#![allow(dead_code)]

use num_complex::Complex64;
use rand::Rng;

/// `P_n^{(a,b)}(z) = sum_s C(n+a, n-s) C(n+b, s) ((z-1)/2)^s ((z+1)/2)^{n-s}`.
pub fn jacobi_finite_sum(n: u32, a: Complex64, b: Complex64, z: Complex64) -> Complex64 {
    let mut total = Complex64::new(0.0, 0.0);
    for s in 0..=n {
        total += binomial(a + f64::from(n), n - s)
            * binomial(b + f64::from(n), s)
            * ((z - 1.0) / 2.0).powu(s)
            * ((z + 1.0) / 2.0).powu(n - s);
    }
    total
}

/// Generalized binomial `C(x, k) = x (x-1) ... (x-k+1) / k!`.
pub fn binomial(x: Complex64, k: u32) -> Complex64 {
    let mut num = Complex64::new(1.0, 0.0);
    let mut den = 1.0;
    for j in 0..k {
        num *= x - f64::from(j);
        den *= f64::from(j + 1);
    }
    num / den
}

/// Uniform draw from the complex disk of the given radius.
pub fn complex_in_disk<R: Rng>(rng: &mut R, radius: f64) -> Complex64 {
    let r = radius * rng.random::<f64>().sqrt();
    let angle = rng.random_range(0.0..std::f64::consts::TAU);
    Complex64::from_polar(r, angle)
}

/// `|a - b| / max(1, |a|, |b|)`.
pub fn rel_dev(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1.0)
}

/// Relative gap between two real routes, floored at scale one.
pub fn rel_gap(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(1.0)
}
