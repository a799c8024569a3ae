//! Θ-functions of the discrete tacnode kernel via Andréief reduction:
//! the r-fold symmetrized contour integral with a squared Vandermonde
//! collapses to an r×r determinant of one-dimensional integrals with
//! monomial insertions.

use super::{eval_contour, ContourSpec, DEFAULT_TOL};
use crate::error::Error;
use crate::linalg::{det_c64, Mat};
use crate::Result;
use num_complex::Complex64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThetaVariant {
    /// Θ_r with the insertion (v−w)/(u−w).
    Theta,
    /// Θ⁺_{r−1} with the insertion (u−w)(v−w).
    ThetaPlus,
    /// Θ⁻_{r+1} with the insertion 1/((u−w)(v−w)).
    ThetaMinus,
}

/// Maximum r after Andréief reduction (the cost is r² one-dimensional
/// integrals; the paper's figures stay below r = 10).
pub const THETA_R_CAP: i64 = 16;

/// Evaluate Θ_r, Θ⁺_{r−1} or Θ⁻_{r+1} at (u, v) for strip parameters
/// (r, ρ) and weight-shift β. Empty determinants are 1; Θ⁺ at r = 0 is 0
/// (no cross term survives in the degenerate kernel).
pub fn theta_function(
    r: i64,
    rho: i64,
    beta: f64,
    u: Complex64,
    v: Complex64,
    variant: ThetaVariant,
) -> Result<Complex64> {
    if r < 0 {
        return Err(Error::validation("theta needs r >= 0"));
    }
    if r > THETA_R_CAP {
        return Err(Error::UnsupportedRange(format!("theta capped at r <= {THETA_R_CAP}")));
    }
    let size = match variant {
        ThetaVariant::Theta => r,
        ThetaVariant::ThetaPlus => {
            if r == 0 {
                return Ok(Complex64::new(0.0, 0.0));
            }
            r - 1
        }
        ThetaVariant::ThetaMinus => r + 1,
    };
    if size == 0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let size = size as usize;
    let spread = 8.0 + u.im.abs().max(v.im.abs()) + beta.abs();
    let contour = ContourSpec::line(1.0, spread);
    let mut entries = Vec::with_capacity(2 * size - 1);
    for pw in 0..(2 * size - 1) {
        let f = move |w: Complex64| -> Complex64 {
            let weight = (w * w - 2.0 * beta * w).exp() * w.powf(-(rho as f64)) * w.powu(pw as u32);
            let insertion = match variant {
                ThetaVariant::Theta => (v - w) / (u - w),
                ThetaVariant::ThetaPlus => (u - w) * (v - w),
                ThetaVariant::ThetaMinus => 1.0 / ((u - w) * (v - w)),
            };
            weight * insertion
        };
        entries.push(eval_contour(&contour, &f, DEFAULT_TOL)?.value);
    }
    let m = Mat::from_fn(size, size, |i, j| entries[i + j]);
    Ok(det_c64(&m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64, y: f64) -> Complex64 {
        Complex64::new(x, y)
    }

    #[test]
    fn theta_zero_is_one() {
        let v = theta_function(0, 2, 0.3, c(0.2, 0.0), c(1.5, 0.4), ThetaVariant::Theta).unwrap();
        assert_eq!(v, c(1.0, 0.0));
    }

    #[test]
    fn theta_at_equal_arguments_matches_origin() {
        // the insertion ∏ (v−w)/(u−w) is identically 1 at v = u
        for r in 1..=3 {
            let a = theta_function(r, 1, 0.2, c(0.3, 0.1), c(0.3, 0.1), ThetaVariant::Theta).unwrap();
            let b = theta_function(r, 1, 0.2, c(0.0, 0.0), c(0.0, 0.0), ThetaVariant::Theta).unwrap();
            assert!((a - b).norm() < 1e-9 * b.norm().max(1.0), "r={r}: {a} vs {b}");
        }
    }

    #[test]
    fn theta_plus_degenerate_cases() {
        assert_eq!(
            theta_function(0, 0, 0.0, c(0.1, 0.0), c(0.2, 0.0), ThetaVariant::ThetaPlus).unwrap(),
            c(0.0, 0.0)
        );
        assert_eq!(
            theta_function(1, 0, 0.0, c(0.1, 0.0), c(0.2, 0.0), ThetaVariant::ThetaPlus).unwrap(),
            c(1.0, 0.0)
        );
    }
}
