//! Special functions: Heaviside powers, Hermite polynomials (three
//! routes), the incomplete-Gaussian integrals Φ_k, and the Airy function.

use super::{eval_contour, gauss_legendre, ContourSpec, DEFAULT_TOL};
use crate::Result;
use num_complex::Complex64;
use std::f64::consts::PI;

/// ℍ^m(z) = z^{m−1}/(m−1)! for z ≥ 0 and m ≥ 1, else 0.
pub fn heaviside(m: i64, z: f64) -> f64 {
    if m < 1 || z < 0.0 {
        return 0.0;
    }
    let mut acc = 1.0;
    for k in 1..m {
        acc *= z / k as f64;
    }
    acc
}

/// Physicists' Hermite polynomial by the three-term recurrence
/// H_{j+1} = 2x H_j − 2j H_{j−1}.
pub fn hermite(j: u32, x: f64) -> f64 {
    let (mut h0, mut h1) = (1.0, 2.0 * x);
    if j == 0 {
        return h0;
    }
    for k in 1..j {
        let h2 = 2.0 * x * h1 - 2.0 * k as f64 * h0;
        h0 = h1;
        h1 = h2;
    }
    h1
}

/// Hermite via the small-circle representation
/// H_j(x) = j! ∮ e^{−z²+2xz} dz/(2πi z^{j+1}).
pub fn hermite_circle(j: u32, x: f64) -> Result<f64> {
    let c = ContourSpec::circle(0.5);
    let v = eval_contour(&c, &move |z: Complex64| {
        (-z * z + 2.0 * x * z).exp() / z.powi(j as i32 + 1)
    }, DEFAULT_TOL)?;
    let fact: f64 = (1..=j).map(|k| k as f64).product();
    Ok(fact * v.value.re)
}

/// Hermite via the vertical-line representation
/// H_j(x) = 2√π 2^j ∫_L e^{(w−x)²} w^j dw/(2πi).
pub fn hermite_line(j: u32, x: f64) -> Result<f64> {
    let c = ContourSpec::line(x + 1.0, x.abs() + 10.0);
    let v = eval_contour(&c, &move |w: Complex64| {
        let d = w - x;
        (d * d).exp() * w.powi(j as i32)
    }, DEFAULT_TOL)?;
    Ok(2.0 * PI.sqrt() * 2f64.powi(j as i32) * v.value.re)
}

/// Φ_k(η) = (1/2πi) ∫_L e^{v²+2ηv} v^{−k−1} dv. For k ≤ −1 this reduces
/// to a Hermite polynomial times a Gaussian; for k ≥ 0 it is the
/// incomplete-Gaussian integral (2^k/√π) ∫_0^∞ ξ^k/k! e^{−(ξ−η)²} dξ.
pub fn phi(k: i64, eta: f64) -> f64 {
    if k <= -1 {
        let j = (-k - 1) as u32;
        2f64.powi(k as i32) / PI.sqrt() * (-eta * eta).exp() * hermite(j, -eta)
    } else {
        // composite Gauss-Legendre on [0, T] with T past the integrand's
        // Gaussian tail
        let t_max = eta.max(0.0) + (k as f64).sqrt() * 2.0 + 14.0;
        let (xs, ws) = gauss_legendre(32);
        let panels = (t_max.ceil() as usize).max(8);
        let h = t_max / panels as f64;
        let mut acc = 0.0;
        for p in 0..panels {
            let a = p as f64 * h;
            for (x, w) in xs.iter().zip(ws.iter()) {
                let xi = a + 0.5 * h * (x + 1.0);
                // ξ^k/k! e^{−(ξ−η)²} via logs to dodge overflow
                let ln_t = k as f64 * xi.ln() - ln_factorial(k as u64) - (xi - eta) * (xi - eta);
                acc += w * 0.5 * h * ln_t.exp();
            }
        }
        2f64.powi(k as i32) / PI.sqrt() * acc
    }
}

/// Φ_k via its defining line integral; cross-check for [`phi`].
pub fn phi_line(k: i64, eta: f64) -> Result<f64> {
    let c = ContourSpec::line(1.0, eta.abs() + 10.0);
    let v = eval_contour(&c, &move |v: Complex64| {
        (v * v + 2.0 * eta * v).exp() * v.powf(-(k as f64) - 1.0)
    }, DEFAULT_TOL)?;
    Ok(v.value.re)
}

pub fn ln_factorial(n: u64) -> f64 {
    (1..=n).map(|k| (k as f64).ln()).sum()
}

/// The integrals I_p(y) = (1/2πi) ∫_L v^p e^{v²/2−yv} dv appearing in the
/// GUE-minor kernel; I_p(y) = (√2)^{p+1} Φ_{−p−1}(−y/√2).
pub fn gaussian_moment(p: i64, y: f64) -> f64 {
    2f64.powf((p + 1) as f64 / 2.0) * phi(-p - 1, -y / std::f64::consts::SQRT_2)
}

// The Maclaurin series cancels like e^{2|x|^{3/2}/3}; keep it where that
// costs at most ~7 digits and switch to the asymptotic expansions beyond.
const AIRY_POS_CUT: f64 = 6.0;
const AIRY_NEG_CUT: f64 = -9.0;

/// Airy function Ai(x).
pub fn airy_ai(x: f64) -> f64 {
    if x > AIRY_POS_CUT {
        airy_asym_pos(x).0
    } else if x < AIRY_NEG_CUT {
        airy_asym_neg(-x).0
    } else {
        airy_series(x).0
    }
}

/// Derivative Ai'(x).
pub fn airy_ai_prime(x: f64) -> f64 {
    if x > AIRY_POS_CUT {
        airy_asym_pos(x).1
    } else if x < AIRY_NEG_CUT {
        airy_asym_neg(-x).1
    } else {
        airy_series(x).1
    }
}

/// Shifted Airy function Ai^{(s)}(x) = e^{sx + 2s³/3} Ai(x + s²).
pub fn airy_shifted(s: f64, x: f64) -> f64 {
    (s * x + 2.0 * s * s * s / 3.0).exp() * airy_ai(x + s * s)
}

// Ai(0) = 3^{-2/3}/Γ(2/3), Ai'(0) = -3^{-1/3}/Γ(1/3)
const AI0: f64 = 0.355028053887817239;
const AIP0: f64 = -0.258819403792806798;

fn airy_series(x: f64) -> (f64, f64) {
    // Ai = AI0·f + AIP0·g with f = Σ t_k x^{3k}, g = Σ s_k x^{3k+1},
    // t_{k+1} = t_k x³/((3k+2)(3k+3)), s_{k+1} = s_k x³/((3k+3)(3k+4)).
    let x3 = x * x * x;
    let (mut f, mut fp, mut g, mut gp) = (1.0, 0.0, x, 1.0);
    let (mut t, mut s) = (1.0, x);
    for k in 0..60u32 {
        let kk = 3.0 * k as f64;
        t *= x3 / ((kk + 2.0) * (kk + 3.0));
        s *= x3 / ((kk + 3.0) * (kk + 4.0));
        f += t;
        g += s;
        // derivative terms: d/dx [x^{3k+3}] and d/dx [x^{3k+4}]
        if x != 0.0 {
            fp += t * (kk + 3.0) / x;
            gp += s * (kk + 4.0) / x;
        }
        if t.abs() < 1e-18 && s.abs() < 1e-18 {
            break;
        }
    }
    (AI0 * f + AIP0 * g, AI0 * fp + AIP0 * gp)
}

fn airy_asym_pos(x: f64) -> (f64, f64) {
    let zeta = 2.0 / 3.0 * x.powf(1.5);
    let mut u = 1.0;
    let (mut sum_a, mut sum_ap) = (1.0, 1.0);
    for k in 1..=22u32 {
        let kf = k as f64;
        let next = u * (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0)
            / (216.0 * kf * (2.0 * kf - 1.0));
        if (next / zeta.powi(k as i32)).abs() > (u / zeta.powi(k as i32 - 1)).abs() {
            break; // divergent tail reached
        }
        u = next;
        let term = u / zeta.powi(k as i32);
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum_a += sign * term;
        let v = u * (6.0 * kf + 1.0) / (1.0 - 6.0 * kf);
        sum_ap += sign * v / zeta.powi(k as i32);
    }
    let pref = (-zeta).exp() / (2.0 * PI.sqrt());
    (pref * sum_a / x.powf(0.25), -pref * x.powf(0.25) * sum_ap)
}

fn airy_asym_neg(t: f64) -> (f64, f64) {
    // Ai(−t) for t > 0, oscillatory expansion
    let zeta = 2.0 / 3.0 * t.powf(1.5);
    let mut us = vec![1.0f64];
    for k in 1..=16u32 {
        let kf = k as f64;
        let next = us[k as usize - 1] * (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0)
            / (216.0 * kf * (2.0 * kf - 1.0));
        us.push(next);
    }
    let (mut ceven, mut codd) = (0.0, 0.0);
    let (mut deven, mut dodd) = (0.0, 0.0);
    for (k, &u) in us.iter().enumerate() {
        let v = if k == 0 { 1.0 } else { u * (6.0 * k as f64 + 1.0) / (1.0 - 6.0 * k as f64) };
        let term = u / zeta.powi(k as i32);
        let term_v = v / zeta.powi(k as i32);
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            ceven += sign * term;
            deven += sign * term_v;
        } else {
            codd += sign * term;
            dodd += sign * term_v;
        }
    }
    let arg = zeta + PI / 4.0;
    let ai = (arg.sin() * ceven - arg.cos() * codd) / (PI.sqrt() * t.powf(0.25));
    let aip = -t.powf(0.25) / PI.sqrt() * (arg.cos() * deven + arg.sin() * dodd);
    (ai, aip)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heaviside_values() {
        assert_eq!(heaviside(2, 3.0), 3.0);
        assert_eq!(heaviside(0, 3.0), 0.0);
        assert_eq!(heaviside(-1, 3.0), 0.0);
        assert_eq!(heaviside(1, 0.0), 1.0);
        assert_eq!(heaviside(3, -0.5), 0.0);
        assert_eq!(heaviside(3, 2.0), 2.0);
    }

    #[test]
    fn hermite_small_values() {
        assert_eq!(hermite(2, 1.0), 2.0); // 4x²−2
        assert_eq!(hermite(0, 5.0), 1.0);
        assert_eq!(hermite(1, 0.5), 1.0);
        assert_eq!(hermite(3, 1.0), -4.0); // 8x³−12x
    }

    #[test]
    fn phi_closed_values() {
        assert!((phi(0, 0.0) - 0.5).abs() < 1e-12);
        assert!((phi(-1, 0.0) - 1.0 / (2.0 * PI.sqrt())).abs() < 1e-14);
    }

    #[test]
    fn phi_matches_line_integral() {
        for k in [-3i64, -1, 0, 1, 2, 5] {
            for eta in [-1.3, 0.0, 0.7, 2.1] {
                let a = phi(k, eta);
                let b = phi_line(k, eta).unwrap();
                assert!((a - b).abs() < 1e-8, "k={k} eta={eta}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn phi_derivative_identity() {
        // dΦ_k/dη = 2 Φ_{k−1}
        let h = 1e-5;
        for k in [-4i64, -1, 0, 2, 6] {
            for eta in [-0.8, 0.3, 1.9] {
                let d = (phi(k, eta + h) - phi(k, eta - h)) / (2.0 * h);
                let expect = 2.0 * phi(k - 1, eta);
                assert!(
                    (d - expect).abs() < 1e-6 * expect.abs().max(1.0),
                    "k={k} eta={eta}: {d} vs {expect}"
                );
            }
        }
    }

    #[test]
    fn airy_reference_values() {
        assert!((airy_ai(0.0) - 0.3550280538878172).abs() < 1e-12);
        assert!((airy_ai_prime(0.0) + 0.2588194037928068).abs() < 1e-12);
        // Ai(2) and Ai(17) from standard tables
        assert!((airy_ai(2.0) - 0.03492413042327438).abs() < 1e-12);
        assert!((airy_ai(17.0) - 7.05019729838861e-22).abs() < 1e-33);
        assert!((airy_ai(-5.0) - 0.3507610090241142).abs() < 1e-10);
    }

    #[test]
    fn airy_ode_finite_differences() {
        // five-point stencil keeps the roundoff amplification below the
        // 1e-5 relative target
        let h = 1e-2;
        let mut x = -5.0;
        while x <= 5.0 {
            let dd = (-airy_ai(x + 2.0 * h) + 16.0 * airy_ai(x + h) - 30.0 * airy_ai(x)
                + 16.0 * airy_ai(x - h)
                - airy_ai(x - 2.0 * h))
                / (12.0 * h * h);
            let expect = x * airy_ai(x);
            assert!(
                (dd - expect).abs() < 1e-5 * expect.abs().max(0.05),
                "x={x}: {dd} vs {expect}"
            );
            x += 0.5;
        }
    }

    #[test]
    fn hermite_representations_agree() {
        for j in 0..=8u32 {
            for x in [-1.2, 0.0, 0.8, 2.0] {
                let h = hermite(j, x);
                let hc = hermite_circle(j, x).unwrap();
                let hl = hermite_line(j, x).unwrap();
                assert!((h - hc).abs() < 1e-8 * h.abs().max(1.0), "circle j={j} x={x}: {h} vs {hc}");
                assert!((h - hl).abs() < 1e-8 * h.abs().max(1.0), "line j={j} x={x}: {h} vs {hl}");
            }
        }
    }

    #[test]
    fn airy_branches_overlap() {
        // series vs asymptotics near each branch cut
        // the series carries ~e^{2x^{3/2}/3}·ε of cancellation noise here,
        // so agreement near its noise floor is all consistency can show
        for x in [6.01, 6.3, 7.0] {
            let s = airy_series(x);
            let a = airy_asym_pos(x);
            assert!((s.0 - a.0).abs() < 5e-5 * a.0.abs(), "x={x}: {} vs {}", s.0, a.0);
            assert!((s.1 - a.1).abs() < 5e-5 * a.1.abs(), "xp={x}: {} vs {}", s.1, a.1);
        }
        for x in [-9.8, -9.2, -8.6] {
            let s = airy_series(x);
            let a = airy_asym_neg(-x);
            assert!((s.0 - a.0).abs() < 1e-7, "x={x}: {} vs {}", s.0, a.0);
            assert!((s.1 - a.1).abs() < 1e-7, "x'={x}: {} vs {}", s.1, a.1);
        }
    }

    #[test]
    fn gaussian_moment_normal_density() {
        // I_0(y) = e^{−y²/2}/√(2π)
        for y in [-1.0f64, 0.0, 0.5, 2.0] {
            let expect = (-y * y / 2.0).exp() / (2.0 * PI).sqrt();
            assert!((gaussian_moment(0, y) - expect).abs() < 1e-12);
        }
    }
}
