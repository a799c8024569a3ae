//! Contour-integral engine and the special functions, Toeplitz and
//! Fredholm determinants underlying every kernel evaluation.

pub mod dets;
pub mod special;
pub mod theta;

pub use dets::{fredholm_det, toeplitz_det_fn, toeplitz_det_laurent, IndexRange};
pub use special::{airy_ai, airy_ai_prime, airy_shifted, heaviside, hermite, phi};
pub use theta::{theta_function, ThetaVariant};

use crate::error::Error;
use crate::Result;
use num_complex::Complex64;

/// Absolute tolerance targeted by adaptive quadrature; acceptance checks
/// run at 1e-6..1e-8, so keep two orders of headroom.
pub const DEFAULT_TOL: f64 = 1e-10;

/// A contour for [`eval_contour`]: counterclockwise circle or an upgoing
/// vertical segment (standing in for the line Re z = re).
#[derive(Clone, Copy, Debug)]
pub enum ContourSpec {
    Circle { center: Complex64, radius: f64, nodes: usize },
    VerticalLine { re: f64, half_len: f64, nodes: usize },
}

impl ContourSpec {
    pub fn circle(radius: f64) -> Self {
        ContourSpec::Circle { center: Complex64::new(0.0, 0.0), radius, nodes: 64 }
    }

    /// Line Re z = re truncated per the integrand's Gaussian decay.
    pub fn line(re: f64, spread: f64) -> Self {
        ContourSpec::VerticalLine { re, half_len: spread.max(8.0), nodes: 64 }
    }

    fn with_nodes(self, nodes: usize) -> Self {
        match self {
            ContourSpec::Circle { center, radius, .. } => ContourSpec::Circle { center, radius, nodes },
            ContourSpec::VerticalLine { re, half_len, .. } => {
                ContourSpec::VerticalLine { re, half_len, nodes }
            }
        }
    }

    fn nodes(&self) -> usize {
        match self {
            ContourSpec::Circle { nodes, .. } | ContourSpec::VerticalLine { nodes, .. } => *nodes,
        }
    }
}

/// A value with the error estimate the adaptive rule observed.
#[derive(Clone, Copy, Debug)]
pub struct SpecialValue {
    pub value: Complex64,
    pub est_error: f64,
}

impl SpecialValue {
    pub fn re(&self) -> f64 {
        self.value.re
    }
}

/// Fixed-node evaluation of ∮ f(z) dz / (2πi) along the contour.
pub fn contour_sum(spec: &ContourSpec, f: &dyn Fn(Complex64) -> Complex64) -> Complex64 {
    match *spec {
        ContourSpec::Circle { center, radius, nodes } => {
            // trapezoidal rule; spectrally accurate for analytic integrands
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..nodes {
                let th = 2.0 * std::f64::consts::PI * k as f64 / nodes as f64;
                let e = Complex64::from_polar(1.0, th);
                let z = center + radius * e;
                acc += f(z) * e;
            }
            acc * radius / nodes as f64
        }
        ContourSpec::VerticalLine { re, half_len, nodes } => {
            // composite Gauss-Legendre on [-L, L]; dz = i dt
            let (xs, ws) = gauss_legendre(16);
            let panels = nodes.div_ceil(16).max(2);
            let h = 2.0 * half_len / panels as f64;
            let mut acc = Complex64::new(0.0, 0.0);
            for p in 0..panels {
                let a = -half_len + p as f64 * h;
                for (x, w) in xs.iter().zip(ws.iter()) {
                    let t = a + 0.5 * h * (x + 1.0);
                    acc += f(Complex64::new(re, t)) * (0.5 * h * w);
                }
            }
            acc / (2.0 * std::f64::consts::PI)
        }
    }
}

/// Adaptive evaluation of ∮ f(z) dz / (2πi): doubles the node count until
/// two successive values agree within `tol` (absolute, with a relative
/// fallback for large values).
pub fn eval_contour(
    spec: &ContourSpec,
    f: &dyn Fn(Complex64) -> Complex64,
    tol: f64,
) -> Result<SpecialValue> {
    let mut nodes = spec.nodes().max(32);
    let mut prev = contour_sum(&spec.with_nodes(nodes), f);
    for _ in 0..8 {
        nodes *= 2;
        let cur = contour_sum(&spec.with_nodes(nodes), f);
        let err = (cur - prev).norm();
        if err <= tol * 1f64.max(cur.norm()) {
            return Ok(SpecialValue { value: cur, est_error: err });
        }
        prev = cur;
    }
    Err(Error::numerical(format!(
        "contour integral did not stabilize at {nodes} nodes on {spec:?}; last value {prev}"
    )))
}

/// Gauss-Legendre nodes and weights on [-1, 1].
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut xs = vec![0.0; n];
    let mut ws = vec![0.0; n];
    for i in 0..n {
        // Newton from the Chebyshev initial guess
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_and_deriv(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_and_deriv(n, x);
        xs[n - 1 - i] = x;
        ws[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (xs, ws)
}

fn legendre_and_deriv(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residue_of_one_over_z() {
        let c = ContourSpec::circle(0.5);
        let v = eval_contour(&c, &|z| 1.0 / z, 1e-12).unwrap();
        assert!((v.value.re - 1.0).abs() < 1e-12);
        assert!(v.value.im.abs() < 1e-12);
    }

    #[test]
    fn taylor_coefficients_of_exp() {
        for j in 0..6u32 {
            let c = ContourSpec::circle(0.5);
            let v = eval_contour(&c, &|z| z.exp() / z.powi(j as i32 + 1), 1e-12).unwrap();
            let fact: f64 = (1..=j).map(|k| k as f64).product();
            assert!(
                (v.value.re - 1.0 / fact).abs() < 1e-11,
                "j={j}: {} vs {}",
                v.value.re,
                1.0 / fact
            );
        }
    }

    #[test]
    fn gaussian_on_vertical_line() {
        // (1/2πi) ∫ e^{v²/2} dv over Re v = 1 equals φ(0) = 1/√(2π)
        let c = ContourSpec::line(1.0, 8.0);
        let v = eval_contour(&c, &|z| (z * z / 2.0).exp(), 1e-12).unwrap();
        let expect = 1.0 / (2.0 * std::f64::consts::PI).sqrt();
        assert!((v.value.re - expect).abs() < 1e-12, "{} vs {expect}", v.value.re);
    }

    #[test]
    fn gl_nodes_integrate_polynomials() {
        let (xs, ws) = gauss_legendre(16);
        let int: f64 = xs.iter().zip(&ws).map(|(x, w)| w * x.powi(8)).sum();
        assert!((int - 2.0 / 9.0).abs() < 1e-14);
    }

    #[test]
    fn radius_independence_within_annulus() {
        // analytic between the poles at 0 and 2: same residue for r in (0,2)
        for r in [0.3, 0.5, 1.2] {
            let c = ContourSpec::circle(r);
            let v = eval_contour(&c, &|z| 1.0 / (z * (z - 2.0)), 1e-12).unwrap();
            assert!((v.value.re + 0.5).abs() < 1e-10, "r={r}");
        }
    }
}
