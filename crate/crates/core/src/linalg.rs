//! Small dense linear algebra: determinants, solves and a Hermitian
//! eigensolver, for the handful of element types used in this crate
//! (f64, Complex64, BigRational). Matrices here are at most a few
//! hundred rows, so plain Gaussian elimination with partial pivoting
//! is all we need.

use num::BigRational;
use num_complex::Complex64;
use num_traits::{One, Zero};

/// Row-major dense matrix.
#[derive(Clone, Debug)]
pub struct Mat<T> {
    pub n_rows: usize,
    pub n_cols: usize,
    pub data: Vec<T>,
}

impl<T: Clone> Mat<T> {
    pub fn from_fn(n_rows: usize, n_cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(n_rows * n_cols);
        for i in 0..n_rows {
            for j in 0..n_cols {
                data.push(f(i, j));
            }
        }
        Mat { n_rows, n_cols, data }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n_cols + j]
    }

    #[inline]
    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.n_cols + j]
    }
}

macro_rules! gaussian_impl {
    ($ty:ty, $mag:expr, $det_fn:ident, $solve_fn:ident, $inv_fn:ident) => {
        /// Determinant by Gaussian elimination with partial pivoting.
        pub fn $det_fn(m: &Mat<$ty>) -> $ty {
            assert_eq!(m.n_rows, m.n_cols);
            let n = m.n_rows;
            let mut a = m.data.clone();
            let mut det: $ty = One::one();
            for col in 0..n {
                let mut pivot = col;
                let mut best = $mag(&a[col * n + col]);
                for r in (col + 1)..n {
                    let v = $mag(&a[r * n + col]);
                    if v > best {
                        best = v;
                        pivot = r;
                    }
                }
                if best == 0.0 {
                    return Zero::zero();
                }
                if pivot != col {
                    for j in 0..n {
                        a.swap(col * n + j, pivot * n + j);
                    }
                    det = -det;
                }
                let p = a[col * n + col].clone();
                det = det * p.clone();
                for r in (col + 1)..n {
                    let factor = a[r * n + col].clone() / p.clone();
                    if $mag(&factor) == 0.0 {
                        continue;
                    }
                    for j in col..n {
                        let sub = factor.clone() * a[col * n + j].clone();
                        a[r * n + j] = a[r * n + j].clone() - sub;
                    }
                }
            }
            det
        }

        /// Solve `m x = b` for a single right-hand side.
        pub fn $solve_fn(m: &Mat<$ty>, b: &[$ty]) -> Option<Vec<$ty>> {
            assert_eq!(m.n_rows, m.n_cols);
            assert_eq!(m.n_rows, b.len());
            let n = m.n_rows;
            let mut a = m.data.clone();
            let mut x: Vec<$ty> = b.to_vec();
            for col in 0..n {
                let mut pivot = col;
                let mut best = $mag(&a[col * n + col]);
                for r in (col + 1)..n {
                    let v = $mag(&a[r * n + col]);
                    if v > best {
                        best = v;
                        pivot = r;
                    }
                }
                if best == 0.0 {
                    return None;
                }
                if pivot != col {
                    for j in 0..n {
                        a.swap(col * n + j, pivot * n + j);
                    }
                    x.swap(col, pivot);
                }
                let p = a[col * n + col].clone();
                for r in (col + 1)..n {
                    let factor = a[r * n + col].clone() / p.clone();
                    if $mag(&factor) == 0.0 {
                        continue;
                    }
                    for j in col..n {
                        let sub = factor.clone() * a[col * n + j].clone();
                        a[r * n + j] = a[r * n + j].clone() - sub;
                    }
                    let sub = factor * x[col].clone();
                    x[r] = x[r].clone() - sub;
                }
            }
            for col in (0..n).rev() {
                let mut acc = x[col].clone();
                for j in (col + 1)..n {
                    acc = acc - a[col * n + j].clone() * x[j].clone();
                }
                x[col] = acc / a[col * n + col].clone();
            }
            Some(x)
        }

        /// Matrix inverse (column-by-column solve).
        pub fn $inv_fn(m: &Mat<$ty>) -> Option<Mat<$ty>> {
            let n = m.n_rows;
            let mut cols: Vec<Vec<$ty>> = Vec::with_capacity(n);
            for j in 0..n {
                let mut e: Vec<$ty> = vec![Zero::zero(); n];
                e[j] = One::one();
                cols.push($solve_fn(m, &e)?);
            }
            Some(Mat::from_fn(n, n, |i, j| cols[j][i].clone()))
        }
    };
}

fn mag_f64(x: &f64) -> f64 {
    x.abs()
}
fn mag_c64(x: &Complex64) -> f64 {
    x.norm_sqr()
}
fn mag_rat(x: &BigRational) -> f64 {
    // Pivoting only needs zero / nonzero for exact arithmetic.
    if x.is_zero() {
        0.0
    } else {
        1.0
    }
}

gaussian_impl!(f64, mag_f64, det_f64, solve_f64, inv_f64);
gaussian_impl!(Complex64, mag_c64, det_c64, solve_c64, inv_c64);
gaussian_impl!(BigRational, mag_rat, det_rat, solve_rat, inv_rat);

/// Eigenvalues of a Hermitian matrix by the cyclic Jacobi method.
/// Sizes here are tiny (GUE principal minors), so no effort is spent
/// on performance.
pub fn hermitian_eigenvalues(m: &Mat<Complex64>) -> Vec<f64> {
    assert_eq!(m.n_rows, m.n_cols);
    let n = m.n_rows;
    if n == 0 {
        return vec![];
    }
    if n == 1 {
        return vec![m.at(0, 0).re];
    }
    let mut a = m.data.clone();
    let idx = |i: usize, j: usize| i * n + j;
    for _sweep in 0..60 {
        let mut off = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                off += a[idx(i, j)].norm_sqr();
            }
        }
        if off < 1e-28 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[idx(p, q)];
                if apq.norm_sqr() < 1e-32 {
                    continue;
                }
                // Unitary 2x2 rotation zeroing the (p,q) entry.
                let app = a[idx(p, p)].re;
                let aqq = a[idx(q, q)].re;
                let abs_apq = apq.norm();
                let phase = apq / abs_apq;
                let theta = 0.5 * (2.0 * abs_apq).atan2(aqq - app);
                let (s, c) = theta.sin_cos();
                // Column rotation: [p q] -> [c*p - s*conj(phase)*q, s*phase*p + c*q]
                let sp = phase * s;
                for k in 0..n {
                    let akp = a[idx(k, p)];
                    let akq = a[idx(k, q)];
                    a[idx(k, p)] = akp * c - akq * sp.conj();
                    a[idx(k, q)] = akp * sp + akq * c;
                }
                for k in 0..n {
                    let apk = a[idx(p, k)];
                    let aqk = a[idx(q, k)];
                    a[idx(p, k)] = apk * c - aqk * sp;
                    a[idx(q, k)] = apk * sp.conj() + aqk * c;
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[idx(i, i)].re).collect();
    eig.sort_by(|x, y| x.partial_cmp(y).unwrap());
    eig
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
    fn det_small_f64() {
        let m = Mat {
            n_rows: 2,
            n_cols: 2,
            data: vec![1.0, 2.0, 3.0, 4.0],
        };
        assert!((det_f64(&m) + 2.0).abs() < 1e-14);
    }

    #[test]
    fn det_rational_exact() {
        let m = Mat::from_fn(3, 3, |i, j| rat((i * 3 + j) as i64 + 1, 1));
        assert!(det_rat(&m).is_zero());
        let m2 = Mat::from_fn(2, 2, |i, j| rat(1, (i + j + 1) as i64));
        // det [[1, 1/2], [1/2, 1/3]] = 1/3 - 1/4 = 1/12
        assert_eq!(det_rat(&m2), rat(1, 12));
    }

    #[test]
    fn solve_roundtrip() {
        let m = Mat {
            n_rows: 2,
            n_cols: 2,
            data: vec![2.0, 1.0, 1.0, 3.0],
        };
        let x = solve_f64(&m, &[5.0, 10.0]).unwrap();
        assert!((2.0 * x[0] + x[1] - 5.0).abs() < 1e-12);
        assert!((x[0] + 3.0 * x[1] - 10.0).abs() < 1e-12);
    }

    #[test]
    fn hermitian_eigs_match_trace() {
        let m = Mat {
            n_rows: 2,
            n_cols: 2,
            data: vec![
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 2.0),
                Complex64::new(0.0, -2.0),
                Complex64::new(3.0, 0.0),
            ],
        };
        let e = hermitian_eigenvalues(&m);
        // trace 4, det 3 - 4 = -1 => eigenvalues 2 +- sqrt(5)
        assert!((e[0] - (2.0 - 5.0_f64.sqrt())).abs() < 1e-10);
        assert!((e[1] - (2.0 + 5.0_f64.sqrt())).abs() < 1e-10);
    }
}
