//! Eigenvalues of small hermitian matrices by cyclic Jacobi rotations.
//!
//! Dimensions in this crate stay below a few tens, where Jacobi is simple,
//! robust, and plenty fast. Each pivot (p, q) is phase-rotated to a real
//! 2x2 block and annihilated with the classic symmetric rotation.

use crate::operators::{ComplexMatrix, OperatorError};
use crate::scalar::{cr, C, Scalar};

const MAX_SWEEPS: usize = 64;

/// Eigenvalues of a hermitian matrix, ascending. The input is symmetrized
/// internally; inputs further than `1e-6 * scale` from hermitian are
/// rejected.
pub fn hermitian_eigenvalues<T: Scalar>(m: &ComplexMatrix<T>) -> Result<Vec<T>, OperatorError> {
    if !m.is_square() {
        return Err(OperatorError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(Vec::new());
    }
    let scale = m.max_abs().max(T::one());
    let herm_err = m.hermiticity_error();
    if herm_err > T::real(1e-6) * scale {
        return Err(OperatorError::NotHermitian { deviation: format!("{herm_err}") });
    }

    // Symmetrized working copy, row-major.
    let mut a: Vec<C<T>> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let z = (m[(i, j)] + m[(j, i)].conj()).scale(T::real(0.5));
            a.push(z);
        }
    }

    let tol = T::epsilon() * scale * T::real(n as f64);
    for _ in 0..MAX_SWEEPS {
        let mut off = T::zero();
        for p in 0..n {
            for q in (p + 1)..n {
                off = off.max(a[p * n + q].norm());
            }
        }
        if off <= tol {
            let mut eigs: Vec<T> = (0..n).map(|i| a[i * n + i].re).collect();
            eigs.sort_by(|x, y| x.partial_cmp(y).expect("eigenvalues are finite"));
            return Ok(eigs);
        }

        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                let mag = apq.norm();
                if mag <= tol * T::real(1e-3) {
                    continue;
                }
                let app = a[p * n + p].re;
                let aqq = a[q * n + q].re;
                // Phase e^{i phi} of the pivot; the conjugate maps the pivot
                // column into a real symmetric 2x2 problem.
                let phase = apq.unscale(mag);
                let conj_phase = phase.conj();

                let theta = (aqq - app) / (mag + mag);
                let t = if theta >= T::zero() {
                    T::one() / (theta + (theta * theta + T::one()).sqrt())
                } else {
                    -T::one() / (-theta + (theta * theta + T::one()).sqrt())
                };
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;

                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    let new_rp = arp.scale(c) - arq * conj_phase.scale(s);
                    let new_rq = arp.scale(s) + arq * conj_phase.scale(c);
                    a[r * n + p] = new_rp;
                    a[p * n + r] = new_rp.conj();
                    a[r * n + q] = new_rq;
                    a[q * n + r] = new_rq.conj();
                }
                a[p * n + p] = cr(app - t * mag);
                a[q * n + q] = cr(aqq + t * mag);
                a[p * n + q] = C::new(T::zero(), T::zero());
                a[q * n + p] = C::new(T::zero(), T::zero());
            }
        }
    }
    Err(OperatorError::EigenFailed { sweeps: MAX_SWEEPS })
}

/// Smallest eigenvalue of a hermitian matrix.
pub fn min_eigenvalue<T: Scalar>(m: &ComplexMatrix<T>) -> Result<T, OperatorError> {
    let eigs = hermitian_eigenvalues(m)?;
    Ok(eigs.into_iter().fold(T::infinity(), T::min))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::{kron, sigma_z};
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> C<f64> {
        C::new(re, im)
    }

    #[test]
    fn two_by_two_analytic() {
        // [[a, b e^{i phi}], [b e^{-i phi}, d]] has eigenvalues
        // (a+d)/2 +- sqrt(((a-d)/2)^2 + b^2).
        let (a, d, b, phi) = (0.7, -1.3, 0.45, 0.9_f64);
        let off = c(b * phi.cos(), b * phi.sin());
        let m = ComplexMatrix::from_row_major(2, 2, vec![c(a, 0.0), off, off.conj(), c(d, 0.0)])
            .unwrap();
        let eigs = hermitian_eigenvalues(&m).unwrap();
        let mid = 0.5 * (a + d);
        let rad = (0.25 * (a - d).powi(2) + b * b).sqrt();
        assert_relative_eq!(eigs[0], mid - rad, max_relative = 1e-13);
        assert_relative_eq!(eigs[1], mid + rad, max_relative = 1e-13);
    }

    #[test]
    fn diagonal_matrix_passthrough() {
        let m = ComplexMatrix::from_fn(4, 4, |i, j| {
            if i == j {
                c([3.0, -1.0, 0.5, 2.0][i], 0.0)
            } else {
                c(0.0, 0.0)
            }
        });
        let eigs = hermitian_eigenvalues(&m).unwrap();
        assert_eq!(eigs, vec![-1.0, 0.5, 2.0, 3.0]);
    }

    #[test]
    fn embedded_sigma_z_spectrum() {
        let m = kron(&ComplexMatrix::<f64>::identity(3), &sigma_z::<f64>());
        let eigs = hermitian_eigenvalues(&m).unwrap();
        assert_eq!(eigs.len(), 6);
        for k in 0..3 {
            assert_relative_eq!(eigs[k], -1.0, epsilon = 1e-14);
            assert_relative_eq!(eigs[k + 3], 1.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn sum_rules_on_dense_hermitian() {
        // Eigenvalue sum equals the trace, eigenvalue square sum equals the
        // squared Frobenius norm; both are implementation-independent checks.
        let m = ComplexMatrix::from_row_major(
            3,
            3,
            vec![
                c(1.0, 0.0),
                c(0.3, 0.7),
                c(-0.2, 0.1),
                c(0.3, -0.7),
                c(-0.5, 0.0),
                c(0.9, -0.4),
                c(-0.2, -0.1),
                c(0.9, 0.4),
                c(2.2, 0.0),
            ],
        )
        .unwrap();
        let eigs = hermitian_eigenvalues(&m).unwrap();
        let trace: f64 = eigs.iter().sum();
        assert_relative_eq!(trace, m.trace().re, max_relative = 1e-12);
        let sq: f64 = eigs.iter().map(|x| x * x).sum();
        let frob: f64 = m.data().iter().map(|z| z.norm_sqr()).sum();
        assert_relative_eq!(sq, frob, max_relative = 1e-12);
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = ComplexMatrix::from_row_major(2, 2, vec![c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)])
            .unwrap();
        assert!(matches!(hermitian_eigenvalues(&m), Err(OperatorError::NotHermitian { .. })));
    }
}
