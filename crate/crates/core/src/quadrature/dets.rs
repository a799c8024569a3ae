//! Toeplitz determinants of analytic symbols and finite-section Fredholm
//! determinants.

use super::{contour_sum, ContourSpec};
use crate::error::Error;
use crate::linalg::{det_c64, det_f64, det_rat, Mat};
use crate::Result;
use num::{BigRational, Zero};
use num_complex::Complex64;
use std::collections::BTreeMap;

/// D_α(f) = det(f̂_{i−j})_{1≤i,j≤α} with Fourier coefficients computed by
/// circle quadrature at the given radius (default 1).
pub fn toeplitz_det_fn(
    symbol: &dyn Fn(Complex64) -> Complex64,
    alpha: usize,
    radius: f64,
) -> Result<Complex64> {
    if alpha == 0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    // f̂_k = ∮ f(z) z^{−k} dz/(2πi z); one adaptive sweep for all k
    let mut nodes = 128usize.max(4 * alpha);
    let coeff = |k: i64, nodes: usize| -> Complex64 {
        let spec = ContourSpec::Circle {
            center: Complex64::new(0.0, 0.0),
            radius,
            nodes,
        };
        contour_sum(&spec, &|z| symbol(z) * z.powf(-(k as f64) - 1.0))
    };
    let build = |nodes: usize| -> Complex64 {
        let ks: Vec<i64> = (-(alpha as i64 - 1)..=(alpha as i64 - 1)).collect();
        let cs: BTreeMap<i64, Complex64> = ks.iter().map(|&k| (k, coeff(k, nodes))).collect();
        let m = Mat::from_fn(alpha, alpha, |i, j| cs[&(i as i64 - j as i64)]);
        det_c64(&m)
    };
    let mut prev = build(nodes);
    for _ in 0..6 {
        nodes *= 2;
        let cur = build(nodes);
        if (cur - prev).norm() <= 1e-10 * cur.norm().max(1.0) {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::numerical("Toeplitz symbol quadrature did not stabilize"))
}

/// Exact Toeplitz determinant for a Laurent-polynomial symbol with
/// rational coefficients.
pub fn toeplitz_det_laurent(coeffs: &BTreeMap<i64, BigRational>, alpha: usize) -> BigRational {
    if alpha == 0 {
        return BigRational::from_integer(1.into());
    }
    let m = Mat::from_fn(alpha, alpha, |i, j| {
        coeffs
            .get(&(i as i64 - j as i64))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    });
    det_rat(&m)
}

/// Index set for a Fredholm determinant.
#[derive(Clone, Copy, Debug)]
pub enum IndexRange {
    /// Finite window [lo, hi] inclusive.
    Finite(i64, i64),
    /// Half line {lo, lo+1, ...}; the finite section grows until the
    /// determinant stabilizes twice in a row.
    HalfLineUp(i64),
}

/// det(1 − K) over the index range by finite sections.
pub fn fredholm_det(kernel: &dyn Fn(i64, i64) -> f64, range: IndexRange, tol: f64) -> Result<f64> {
    let section = |lo: i64, hi: i64| -> f64 {
        let n = (hi - lo + 1).max(0) as usize;
        if n == 0 {
            return 1.0;
        }
        let m = Mat::from_fn(n, n, |i, j| {
            let d = if i == j { 1.0 } else { 0.0 };
            d - kernel(lo + i as i64, lo + j as i64)
        });
        det_f64(&m)
    };
    match range {
        IndexRange::Finite(lo, hi) => Ok(section(lo, hi)),
        IndexRange::HalfLineUp(lo) => {
            let mut width = 8i64;
            let mut prev = section(lo, lo + width - 1);
            let mut stable = 0;
            for _ in 0..10 {
                width *= 2;
                let cur = section(lo, lo + width - 1);
                if (cur - prev).abs() <= tol {
                    stable += 1;
                    if stable >= 2 {
                        return Ok(cur);
                    }
                } else {
                    stable = 0;
                }
                prev = cur;
            }
            Err(Error::numerical(format!(
                "Fredholm finite sections did not stabilize (last width {width}, value {prev})"
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::rational::Ratio;
    use num::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        Ratio::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn toeplitz_identity_symbol() {
        for alpha in 1..=4 {
            let d = toeplitz_det_fn(&|_z| Complex64::new(1.0, 0.0), alpha, 1.0).unwrap();
            assert!((d - Complex64::new(1.0, 0.0)).norm() < 1e-10);
        }
    }

    #[test]
    fn toeplitz_shift_symbol_vanishes() {
        for alpha in 1..=3 {
            let d = toeplitz_det_fn(&|z| z, alpha, 1.0).unwrap();
            assert!(d.norm() < 1e-10, "alpha={alpha}");
        }
    }

    #[test]
    fn toeplitz_rational_symbol() {
        // (1+aζ)/(1−a/ζ), a = 1/2, α = 1: constant coefficient 1+a²
        let a = 0.5;
        let d = toeplitz_det_fn(
            &|z| (1.0 + a * z) / (1.0 - a / z),
            1,
            1.0,
        )
        .unwrap();
        assert!((d.re - 1.25).abs() < 1e-10, "{d}");
        // exact Laurent route: coefficients of (1+aζ)·Σ a^g ζ^{−g}
        let mut coeffs = BTreeMap::new();
        for g in 0..60i64 {
            let ag = rat(1, 2).pow(g as i32);
            *coeffs.entry(-g).or_insert_with(BigRational::zero) += ag.clone();
            *coeffs.entry(-g + 1).or_insert_with(BigRational::zero) += ag * rat(1, 2);
        }
        assert_eq!(toeplitz_det_laurent(&coeffs, 1), rat(5, 4));
    }

    #[test]
    fn fredholm_rank_one() {
        // K = c e⊗e  =>  det(1−K) = 1−c on any window containing the support
        let c = 0.3;
        let k = move |i: i64, j: i64| if i == 2 && j == 2 { c } else { 0.0 };
        let d = fredholm_det(&k, IndexRange::Finite(0, 10), 1e-12).unwrap();
        assert!((d - 0.7).abs() < 1e-12);
        let d0 = fredholm_det(&|_, _| 0.0, IndexRange::Finite(-3, 3), 1e-12).unwrap();
        assert!((d0 - 1.0).abs() < 1e-15);
    }

    #[test]
    fn fredholm_half_line_geometric_decay() {
        // diagonal kernel 2^{-i}: det = ∏ (1 − 2^{-i})
        let k = |i: i64, j: i64| if i == j { 0.5f64.powi(i as i32) } else { 0.0 };
        let d = fredholm_det(&k, IndexRange::HalfLineUp(1), 1e-12).unwrap();
        let expect: f64 = (1..60).map(|i| 1.0 - 0.5f64.powi(i)).product();
        assert!((d - expect).abs() < 1e-10);
    }
}
