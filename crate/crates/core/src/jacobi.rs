//! Jacobi polynomials `P_n^{(a,b)}(z)` with complex parameters and argument.
//!
//! The superscript parameters that occur here are generally not the classical
//! `a, b > -1`: the bound-state wave functions carry parameters like
//! `tau*beta` that are negative or complex. Evaluation therefore goes through
//! the three-term degree recurrence, which is a polynomial identity in `a`,
//! `b` and `z` and needs no Gamma-function machinery.

use num_complex::Complex64;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A Jacobi polynomial fixed by degree `n` and superscripts `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jacobi {
    n: u32,
    a: Complex64,
    b: Complex64,
}

impl Jacobi {
    pub fn new(n: u32, a: Complex64, b: Complex64) -> Self {
        Self { n, a, b }
    }

    /// Shorthand for real superscripts.
    pub fn with_real_parameters(n: u32, a: f64, b: f64) -> Self {
        Self::new(n, Complex64::new(a, 0.0), Complex64::new(b, 0.0))
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    /// Evaluate `P_n^{(a,b)}(z)` by upward recurrence in the degree.
    ///
    /// Degrees 0 and 1 use the explicit formulas; this also sidesteps the
    /// removable `a + b = -1` singularity of the standard recurrence
    /// coefficients at the first step.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let (a, b) = (self.a, self.b);
        if self.n == 0 {
            return ONE;
        }
        let mut prev = ONE;
        let mut cur = degree_one(a, b, z);
        for m in 2..=self.n {
            let m = f64::from(m);
            let s = a + b + 2.0 * m; // 2m + a + b
            let lead = 2.0 * m * (a + b + m) * (s - 2.0);
            let mid = (s - 1.0) * ((a * a - b * b) + z * (s * (s - 2.0)));
            let tail = 2.0 * (a + (m - 1.0)) * (b + (m - 1.0)) * s;
            let next = (mid * cur - tail * prev) / lead;
            prev = cur;
            cur = next;
        }
        cur
    }

    /// `d^k/dz^k P_n^{(a,b)}(z)` via the parameter-shift identity
    /// `d/dz P_n^{(a,b)} = (n+a+b+1)/2 * P_{n-1}^{(a+1,b+1)}` applied `k` times.
    pub fn deriv(&self, z: Complex64, k: u32) -> Complex64 {
        if k > self.n {
            return Complex64::new(0.0, 0.0);
        }
        let nab = f64::from(self.n) + self.a + self.b;
        let mut factor = ONE;
        for j in 1..=k {
            factor *= (nab + f64::from(j)) / 2.0;
        }
        let shift = f64::from(k);
        factor * Jacobi::new(self.n - k, self.a + shift, self.b + shift).eval(z)
    }
}

/// `P_1^{(a,b)}(z) = (a+1) + (a+b+2)(z-1)/2`.
fn degree_one(a: Complex64, b: Complex64, z: Complex64) -> Complex64 {
    a + 1.0 + (a + b + 2.0) * (z - 1.0) / 2.0
}
