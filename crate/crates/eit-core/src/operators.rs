//! Dense complex-matrix algebra and the qubit/resonator operator set.
//!
//! Everything lives in the truncated product space of a two-level system and
//! a harmonic mode. Basis convention, documented once and asserted in tests:
//! the composite index of |q, n> is `2*n + q` with `q = 0` for |e> and
//! `q = 1` for |g>, i.e. qubit operators embed as `kron(I_fock, m)` and
//! resonator operators as `kron(m, I_2)`.
//!
//! Dimensions stay at or below a few tens, so storage is dense throughout.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use thiserror::Error;

use crate::scalar::{cr, C, Scalar};

/// Errors from matrix and operator construction or combination.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OperatorError {
    #[error("dimension mismatch in {context}: left is {left_rows}x{left_cols}, right is {right_rows}x{right_cols}")]
    DimensionMismatch {
        context: &'static str,
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("entry count {len} does not equal rows x cols = {rows}x{cols}")]
    ShapeError { rows: usize, cols: usize, len: usize },
    #[error("Fock cutoff must be at least 1, got {0}")]
    InvalidFockCutoff(usize),
    #[error("operators act on different spaces: cutoffs {left} and {right}")]
    SpaceMismatch { left: usize, right: usize },
    #[error("matrix of dimension {dim} does not match the space dimension {expected}")]
    SpaceDimension { dim: usize, expected: usize },
    #[error("eigensolver did not converge after {sweeps} sweeps")]
    EigenFailed { sweeps: usize },
    #[error("matrix is not hermitian: max deviation {deviation}")]
    NotHermitian { deviation: String },
}

// ---------------------------------------------------------------------------
// ComplexMatrix
// ---------------------------------------------------------------------------

/// Dense complex matrix in row-major order.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<C<T>>,
}

impl<T: Scalar> ComplexMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![C::new(T::zero(), T::zero()); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = cr(T::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C<T>) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Build from a flat row-major entry list.
    pub fn from_row_major(rows: usize, cols: usize, data: Vec<C<T>>) -> Result<Self, OperatorError> {
        if data.len() != rows * cols {
            return Err(OperatorError::ShapeError { rows, cols, len: data.len() });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[C<T>] {
        &self.data
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    /// Largest entry magnitude (max norm).
    pub fn max_abs(&self) -> T {
        self.data.iter().map(|z| z.norm()).fold(T::zero(), T::max)
    }

    /// Max-norm distance to the conjugate transpose; zero for hermitian input.
    pub fn hermiticity_error(&self) -> T {
        let mut worst = T::zero();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let d = (self[(i, j)] - self[(j, i)].conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    pub fn trace(&self) -> C<T> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).fold(C::new(T::zero(), T::zero()), |a, b| a + b)
    }

    pub fn scale(&self, factor: C<T>) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn scale_re(&self, factor: T) -> Self {
        self.scale(cr(factor))
    }

    /// Matrix product. Panics on dimension mismatch; use [`checked_mul`] for
    /// a recoverable error.
    ///
    /// [`checked_mul`]: ComplexMatrix::checked_mul
    pub fn mul_mat(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        let zero = C::new(T::zero(), T::zero());
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == zero {
                    continue;
                }
                let row_b = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                let row_out = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for j in 0..rhs.cols {
                    row_out[j] = row_out[j] + a * row_b[j];
                }
            }
        }
        out
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, OperatorError> {
        if self.cols != rhs.rows {
            return Err(OperatorError::DimensionMismatch {
                context: "matrix product",
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: rhs.rows,
                right_cols: rhs.cols,
            });
        }
        Ok(self.mul_mat(rhs))
    }

    /// Apply the matrix to a column vector.
    pub fn mul_vec(&self, v: &[C<T>]) -> Vec<C<T>> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self[(i, j)] * v[j])
                    .fold(C::new(T::zero(), T::zero()), |a, b| a + b)
            })
            .collect()
    }
}

impl<T: Scalar> Index<(usize, usize)> for ComplexMatrix<T> {
    type Output = C<T>;
    fn index(&self, (i, j): (usize, usize)) -> &C<T> {
        &self.data[i * self.cols + j]
    }
}

impl<T: Scalar> IndexMut<(usize, usize)> for ComplexMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C<T> {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> Add for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn add(self, rhs: Self) -> ComplexMatrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum dimension mismatch");
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<T: Scalar> Sub for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn sub(self, rhs: Self) -> ComplexMatrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference dimension mismatch");
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<T: Scalar> Neg for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn neg(self) -> ComplexMatrix<T> {
        self.scale(cr(-T::one()))
    }
}

impl<T: Scalar> Mul for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn mul(self, rhs: Self) -> ComplexMatrix<T> {
        self.mul_mat(rhs)
    }
}

impl<T: Scalar> fmt::Debug for ComplexMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self[(i, j)];
                write!(f, "{:+.4}{:+.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Kronecker product; dimensions multiply.
pub fn kron<T: Scalar>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> ComplexMatrix<T> {
    let mut out = ComplexMatrix::zeros(a.rows() * b.rows(), a.cols() * b.cols());
    for ia in 0..a.rows() {
        for ja in 0..a.cols() {
            let f = a[(ia, ja)];
            for ib in 0..b.rows() {
                for jb in 0..b.cols() {
                    out[(ia * b.rows() + ib, ja * b.cols() + jb)] = f * b[(ib, jb)];
                }
            }
        }
    }
    out
}

/// Commutator `ab - ba` of two square matrices of equal dimension.
pub fn matrix_commutator<T: Scalar>(
    a: &ComplexMatrix<T>,
    b: &ComplexMatrix<T>,
) -> Result<ComplexMatrix<T>, OperatorError> {
    if !a.is_square() {
        return Err(OperatorError::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(OperatorError::DimensionMismatch {
            context: "commutator",
            left_rows: a.rows(),
            left_cols: a.cols(),
            right_rows: b.rows(),
            right_cols: b.cols(),
        });
    }
    Ok(&a.mul_mat(b) - &b.mul_mat(a))
}

// ---------------------------------------------------------------------------
// Qubit and resonator constructors
// ---------------------------------------------------------------------------

/// sigma_z = |e><e| - |g><g| as a 2x2 matrix (basis order e, g).
pub fn sigma_z<T: Scalar>() -> ComplexMatrix<T> {
    let mut m = ComplexMatrix::zeros(2, 2);
    m[(0, 0)] = cr(T::one());
    m[(1, 1)] = cr(-T::one());
    m
}

/// sigma^+ = |e><g|.
pub fn sigma_plus<T: Scalar>() -> ComplexMatrix<T> {
    let mut m = ComplexMatrix::zeros(2, 2);
    m[(0, 1)] = cr(T::one());
    m
}

/// sigma^- = |g><e|.
pub fn sigma_minus<T: Scalar>() -> ComplexMatrix<T> {
    let mut m = ComplexMatrix::zeros(2, 2);
    m[(1, 0)] = cr(T::one());
    m
}

/// Annihilation operator on the truncated Fock ladder: a|n> = sqrt(n)|n-1>,
/// dimension `(cutoff + 1) x (cutoff + 1)`.
pub fn annihilation<T: Scalar>(cutoff: usize) -> Result<ComplexMatrix<T>, OperatorError> {
    if cutoff == 0 {
        return Err(OperatorError::InvalidFockCutoff(0));
    }
    let dim = cutoff + 1;
    let mut m = ComplexMatrix::zeros(dim, dim);
    for n in 1..dim {
        m[(n - 1, n)] = cr(T::real(n as f64).sqrt());
    }
    Ok(m)
}

/// Creation operator a^dagger on the truncated Fock ladder.
pub fn creation<T: Scalar>(cutoff: usize) -> Result<ComplexMatrix<T>, OperatorError> {
    Ok(annihilation(cutoff)?.dagger())
}

/// Number operator a^dagger a (exact diagonal form).
pub fn number_op<T: Scalar>(cutoff: usize) -> Result<ComplexMatrix<T>, OperatorError> {
    if cutoff == 0 {
        return Err(OperatorError::InvalidFockCutoff(0));
    }
    let dim = cutoff + 1;
    Ok(ComplexMatrix::from_fn(dim, dim, |i, j| {
        if i == j {
            cr(T::real(i as f64))
        } else {
            C::new(T::zero(), T::zero())
        }
    }))
}

// ---------------------------------------------------------------------------
// HilbertSpace and Operator
// ---------------------------------------------------------------------------

/// Qubit basis label; the numeric value is the in-pair index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Qubit {
    Excited = 0,
    Ground = 1,
}

/// Truncated product space of qubit and resonator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HilbertSpace {
    fock_cutoff: usize,
}

impl HilbertSpace {
    pub fn new(fock_cutoff: usize) -> Result<Self, OperatorError> {
        if fock_cutoff == 0 {
            return Err(OperatorError::InvalidFockCutoff(0));
        }
        Ok(Self { fock_cutoff })
    }

    pub fn fock_cutoff(&self) -> usize {
        self.fock_cutoff
    }

    pub fn qubit_dim(&self) -> usize {
        2
    }

    pub fn fock_dim(&self) -> usize {
        self.fock_cutoff + 1
    }

    pub fn total_dim(&self) -> usize {
        self.qubit_dim() * self.fock_dim()
    }

    /// Composite index of |q, n>: `2*n + q`.
    pub fn basis_index(&self, q: Qubit, n: usize) -> usize {
        assert!(n <= self.fock_cutoff, "Fock level {n} above cutoff {}", self.fock_cutoff);
        2 * n + q as usize
    }
}

/// Dense operator tagged with the space it acts on.
#[derive(Debug, Clone, PartialEq)]
pub struct Operator<T> {
    space: HilbertSpace,
    matrix: ComplexMatrix<T>,
}

impl<T: Scalar> Operator<T> {
    pub fn new(space: HilbertSpace, matrix: ComplexMatrix<T>) -> Result<Self, OperatorError> {
        if matrix.rows() != space.total_dim() || matrix.cols() != space.total_dim() {
            return Err(OperatorError::SpaceDimension {
                dim: matrix.rows(),
                expected: space.total_dim(),
            });
        }
        Ok(Self { space, matrix })
    }

    pub fn zeros(space: HilbertSpace) -> Self {
        Self { space, matrix: ComplexMatrix::zeros(space.total_dim(), space.total_dim()) }
    }

    pub fn identity(space: HilbertSpace) -> Self {
        Self { space, matrix: ComplexMatrix::identity(space.total_dim()) }
    }

    /// Embed a 2x2 qubit operator: `kron(I_fock, m)`.
    pub fn embed_qubit(space: HilbertSpace, m: &ComplexMatrix<T>) -> Result<Self, OperatorError> {
        if m.rows() != 2 || m.cols() != 2 {
            return Err(OperatorError::SpaceDimension { dim: m.rows(), expected: 2 });
        }
        let eye = ComplexMatrix::identity(space.fock_dim());
        Self::new(space, kron(&eye, m))
    }

    /// Embed a resonator operator: `kron(m, I_2)`.
    pub fn embed_resonator(space: HilbertSpace, m: &ComplexMatrix<T>) -> Result<Self, OperatorError> {
        if m.rows() != space.fock_dim() || m.cols() != space.fock_dim() {
            return Err(OperatorError::SpaceDimension { dim: m.rows(), expected: space.fock_dim() });
        }
        let eye = ComplexMatrix::identity(2);
        Self::new(space, kron(m, &eye))
    }

    /// Product of a resonator factor and a qubit factor, `kron(fock, qubit)`.
    pub fn from_parts(
        space: HilbertSpace,
        fock: &ComplexMatrix<T>,
        qubit: &ComplexMatrix<T>,
    ) -> Result<Self, OperatorError> {
        if fock.rows() != space.fock_dim() || fock.cols() != space.fock_dim() {
            return Err(OperatorError::SpaceDimension { dim: fock.rows(), expected: space.fock_dim() });
        }
        if qubit.rows() != 2 || qubit.cols() != 2 {
            return Err(OperatorError::SpaceDimension { dim: qubit.rows(), expected: 2 });
        }
        Self::new(space, kron(fock, qubit))
    }

    /// Projector |q, n><q, n|.
    pub fn projector(space: HilbertSpace, q: Qubit, n: usize) -> Self {
        let idx = space.basis_index(q, n);
        let mut m = ComplexMatrix::zeros(space.total_dim(), space.total_dim());
        m[(idx, idx)] = cr(T::one());
        Self { space, matrix: m }
    }

    pub fn space(&self) -> HilbertSpace {
        self.space
    }

    pub fn matrix(&self) -> &ComplexMatrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix<T> {
        self.matrix
    }

    pub fn dagger(&self) -> Self {
        Self { space: self.space, matrix: self.matrix.dagger() }
    }

    pub fn scale(&self, factor: C<T>) -> Self {
        Self { space: self.space, matrix: self.matrix.scale(factor) }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, OperatorError> {
        self.check_space(rhs)?;
        Ok(Self { space: self.space, matrix: &self.matrix + &rhs.matrix })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, OperatorError> {
        self.check_space(rhs)?;
        Ok(Self { space: self.space, matrix: self.matrix.mul_mat(&rhs.matrix) })
    }

    fn check_space(&self, rhs: &Self) -> Result<(), OperatorError> {
        if self.space != rhs.space {
            return Err(OperatorError::SpaceMismatch {
                left: self.space.fock_cutoff,
                right: rhs.space.fock_cutoff,
            });
        }
        Ok(())
    }
}

/// Commutator `[a, b] = ab - ba` of operators on the same space.
pub fn commutator<T: Scalar>(a: &Operator<T>, b: &Operator<T>) -> Result<Operator<T>, OperatorError> {
    if a.space() != b.space() {
        return Err(OperatorError::SpaceMismatch {
            left: a.space().fock_cutoff,
            right: b.space().fock_cutoff,
        });
    }
    Ok(Operator { space: a.space(), matrix: matrix_commutator(a.matrix(), b.matrix())? })
}

/// Expectation value Tr(rho op). The caller is responsible for passing a
/// hermitian, unit-trace rho; only dimensions are checked here.
pub fn expectation<T: Scalar>(
    rho: &ComplexMatrix<T>,
    op: &Operator<T>,
) -> Result<C<T>, OperatorError> {
    let d = op.space().total_dim();
    if rho.rows() != d || rho.cols() != d {
        return Err(OperatorError::DimensionMismatch {
            context: "expectation",
            left_rows: rho.rows(),
            left_cols: rho.cols(),
            right_rows: d,
            right_cols: d,
        });
    }
    let mut acc = C::new(T::zero(), T::zero());
    for i in 0..d {
        for j in 0..d {
            acc = acc + rho[(i, j)] * op.matrix()[(j, i)];
        }
    }
    Ok(acc)
}
