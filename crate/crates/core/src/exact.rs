//! Exact big-rational helpers: generalized binomials, truncated power
//! series (for residue extraction of rational contour integrands), and
//! careful rational-to-float conversion for astronomically large
//! numerators.

use num::bigint::Sign;
use num::rational::Ratio;
use num::{BigInt, BigRational, BigUint, One, Zero};

pub fn rat_i64(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> BigRational {
    Ratio::new(BigInt::from(n), BigInt::from(d))
}

/// Generalized binomial coefficient C(e, k) = e(e-1)...(e-k+1)/k! for any
/// integer `e` (negative allowed) and k >= 0.
pub fn gen_binom(e: i64, k: usize) -> BigRational {
    let mut num = BigRational::one();
    for i in 0..k {
        num *= rat_i64(e - i as i64);
        num /= rat_i64(i as i64 + 1);
    }
    num
}

/// Plain binomial C(n, k) as a big integer; zero when k > n.
pub fn binom(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Integer power of a rational, negative exponents allowed.
pub fn rat_pow(base: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        num::pow::pow(base.clone(), e as usize)
    } else {
        num::pow::pow(base.clone(), (-e) as usize).recip()
    }
}

/// Truncated power series over BigRational: coeffs[i] is the ζ^i
/// coefficient, kept to a fixed order.
#[derive(Clone, Debug)]
pub struct RSeries {
    pub coeffs: Vec<BigRational>,
}

impl RSeries {
    pub fn zero(order: usize) -> Self {
        RSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Series of (c + ζ)^e around ζ = 0, c != 0, any integer e.
    pub fn binom_series(c: &BigRational, e: i64, order: usize) -> Self {
        assert!(!c.is_zero(), "binomial series needs nonzero constant term");
        let mut coeffs = Vec::with_capacity(order + 1);
        // (c + ζ)^e = c^e Σ_k C(e,k) c^{-k} ζ^k
        let ce = rat_pow(c, e);
        let cinv = c.recip();
        let mut factor = BigRational::one();
        for k in 0..=order {
            if k > 0 {
                factor *= rat_i64(e - k as i64 + 1);
                factor /= rat_i64(k as i64);
                factor *= &cinv;
            }
            coeffs.push(&ce * &factor);
        }
        RSeries { coeffs }
    }

    pub fn mul(&self, other: &RSeries) -> RSeries {
        let order = self.order().min(other.order());
        let mut out = RSeries::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(order - i) {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                let prod = &self.coeffs[i] * &other.coeffs[j];
                out.coeffs[i + j] += prod;
            }
        }
        out
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }
}

/// Convert a BigRational to f64 without overflowing on huge numerators or
/// denominators: strips a common power of two first.
pub fn rat_to_f64(x: &BigRational) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let num = x.numer();
    let den = x.denom();
    let nb = num.bits() as i64;
    let db = den.bits() as i64;
    let shift = (nb.max(db) - 900).max(0) as u64;
    let n = num >> shift;
    let d = den >> shift;
    let nf = bigint_to_f64(&n);
    let df = bigint_to_f64(&d);
    nf / df
}

fn bigint_to_f64(x: &BigInt) -> f64 {
    // BigInt::to_f64 saturates to infinity beyond ~1e308; callers shift
    // first so this stays finite.
    let (sign, mag) = (x.sign(), x.magnitude());
    let bits = mag.bits();
    if bits <= 63 {
        let v: u64 = mag.iter_u64_digits().next().unwrap_or(0);
        let f = v as f64;
        return if sign == Sign::Minus { -f } else { f };
    }
    let shift = bits - 53;
    let top: u64 = (mag >> shift).iter_u64_digits().next().unwrap_or(0);
    let f = top as f64 * 2f64.powi(shift as i32);
    if sign == Sign::Minus {
        -f
    } else {
        f
    }
}

/// Gaussian binomial coefficient [n choose k]_q evaluated at a rational q.
/// Falls back to the plain binomial at q = 1.
pub fn q_binom(n: u64, k: u64, q: &BigRational) -> BigRational {
    if k > n {
        return BigRational::zero();
    }
    if q.is_one() {
        return BigRational::from_integer(BigInt::from_biguint(Sign::Plus, binom(n, k)));
    }
    let mut num = BigRational::one();
    let mut den = BigRational::one();
    for i in 1..=k {
        num *= BigRational::one() - rat_pow(q, (n - k + i) as i64);
        den *= BigRational::one() - rat_pow(q, i as i64);
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gen_binom_matches_plain() {
        assert_eq!(gen_binom(5, 2), rat_i64(10));
        assert_eq!(gen_binom(-1, 3), rat_i64(-1));
        assert_eq!(gen_binom(-2, 2), rat_i64(3));
    }

    #[test]
    fn binom_series_inverse_square() {
        // (1 + ζ)^{-2} = 1 - 2ζ + 3ζ² - 4ζ³ + ...
        let s = RSeries::binom_series(&rat_i64(1), -2, 3);
        assert_eq!(s.coeffs, vec![rat_i64(1), rat_i64(-2), rat_i64(3), rat_i64(-4)]);
    }

    #[test]
    fn series_mul_truncates() {
        let a = RSeries::binom_series(&rat_i64(1), 2, 4); // (1+ζ)²
        let b = RSeries::binom_series(&rat_i64(1), -2, 4);
        let prod = a.mul(&b);
        assert_eq!(prod.coeff(0), rat_i64(1));
        for k in 1..=4 {
            assert!(prod.coeff(k).is_zero());
        }
    }

    #[test]
    fn big_rat_to_f64_huge() {
        // 2^2000 / (3 * 2^2000) = 1/3 even though parts overflow f64.
        let big = BigInt::from(2).pow(2000u32);
        let x = Ratio::new(big.clone(), big * 3);
        assert!((rat_to_f64(&x) - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn q_binom_limits() {
        assert_eq!(q_binom(4, 2, &rat_i64(1)), rat_i64(6));
        // [4 2]_q = 1 + q + 2q² + q³ + q⁴ at q=2: 1+2+8+8+16 = 35
        assert_eq!(q_binom(4, 2, &rat_i64(2)), rat_i64(35));
    }
}
