//! Dense complex linear algebra: tensor products, partial traces over labeled
//! subsystems, operator vectorization, and the maximally entangled state.
//!
//! Index convention: tensor factor 0 is the most significant index block
//! (big-endian). Operator vectorization of A : V -> W places the domain
//! factor first, |A> = sum_i |i> (x) A|i> in V (x) W.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Default entrywise comparison tolerance.
pub const DEFAULT_TOL: f64 = 1e-9;

pub(crate) const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub(crate) const ONE: Complex64 = Complex64::new(1.0, 0.0);

// ---------------------------------------------------------------------------
// ComplexMatrix
// ---------------------------------------------------------------------------

/// Dense rectangular complex matrix, row-major storage.
///
/// The universal carrier for states, Kraus operators, and vectorized
/// operators. Hermiticity, positivity, and unit trace are checkable
/// predicates, not structural guarantees.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self {
            rows,
            cols,
            entries: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        for i in 0..dim {
            m.set(i, i, ONE);
        }
        m
    }

    /// Build from a row-major entry vector; length must equal rows * cols.
    pub fn from_vec(rows: usize, cols: usize, entries: Vec<Complex64>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries for a {}x{} matrix, got {}",
                rows * cols,
                rows,
                cols,
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    /// Build from real row-major entries.
    pub fn from_real(rows: usize, cols: usize, entries: &[f64]) -> Result<Self> {
        Self::from_vec(
            rows,
            cols,
            entries.iter().map(|&r| Complex64::new(r, 0.0)).collect(),
        )
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square(), "trace of a non-square matrix");
        (0..self.rows).map(|i| self.get(i, i)).sum()
    }

    /// Matrix product self * rhs.
    pub fn mul(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(
            self.cols, rhs.rows,
            "matmul shape mismatch: {}x{} * {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = ComplexMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == ZERO {
                    continue;
                }
                let row = i * rhs.cols;
                let krow = k * rhs.cols;
                for j in 0..rhs.cols {
                    out.entries[row + j] += a * rhs.entries[krow + j];
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &StateVector) -> StateVector {
        assert_eq!(self.cols, v.dim(), "matvec shape mismatch");
        let mut out = vec![ZERO; self.rows];
        for i in 0..self.rows {
            let row = i * self.cols;
            let mut acc = ZERO;
            for j in 0..self.cols {
                acc += self.entries[row + j] * v.amplitudes[j];
            }
            out[i] = acc;
        }
        StateVector::new(out)
    }

    pub fn add(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a + b)
            .collect();
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn sub(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a - b)
            .collect();
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn scale(&self, s: Complex64) -> ComplexMatrix {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * s).collect(),
        }
    }

    pub fn scale_real(&self, s: f64) -> ComplexMatrix {
        self.scale(Complex64::new(s, 0.0))
    }

    pub fn transpose(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> ComplexMatrix {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a.conj()).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    /// Largest entrywise absolute difference from `rhs`.
    pub fn max_abs_diff(&self, rhs: &ComplexMatrix) -> f64 {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        self.entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, rhs: &ComplexMatrix, tol: f64) -> bool {
        (self.rows, self.cols) == (rhs.rows, rhs.cols) && self.max_abs_diff(rhs) <= tol
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.is_square() && self.max_abs_diff(&self.dagger()) <= tol
    }

    /// Deviation of self&dagger; * self from the identity.
    pub fn unitary_deviation(&self) -> f64 {
        self.dagger()
            .mul(self)
            .max_abs_diff(&ComplexMatrix::identity(self.cols))
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.is_square() && self.unitary_deviation() <= tol
    }

    /// Hermitian / positive-semidefinite / unit-trace check for density matrices.
    pub fn is_density(&self, tol: f64) -> bool {
        if !self.is_hermitian(tol) {
            return false;
        }
        if (self.trace() - ONE).norm() > tol {
            return false;
        }
        hermitian_eigenvalues(self)
            .iter()
            .all(|&lambda| lambda >= -tol)
    }
}

// ---------------------------------------------------------------------------
// StateVector
// ---------------------------------------------------------------------------

/// Dense complex vector. Norm may be non-unit for intermediate values.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    pub fn new(amplitudes: Vec<Complex64>) -> Self {
        assert!(!amplitudes.is_empty(), "state dimension must be positive");
        Self { amplitudes }
    }

    pub fn zeros(dim: usize) -> Self {
        Self::new(vec![ZERO; dim])
    }

    /// Computational basis state |index>.
    pub fn basis(dim: usize, index: usize) -> Self {
        assert!(index < dim);
        let mut v = Self::zeros(dim);
        v.amplitudes[index] = ONE;
        v
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    #[inline]
    pub fn get(&self, i: usize) -> Complex64 {
        self.amplitudes[i]
    }

    #[inline]
    pub fn set(&mut self, i: usize, v: Complex64) {
        self.amplitudes[i] = v;
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Inner product <self|other>.
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        assert_eq!(self.dim(), other.dim(), "inner product shape mismatch");
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Outer product |self><other|.
    pub fn outer(&self, other: &StateVector) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.dim(), other.dim(), |i, j| {
            self.amplitudes[i] * other.amplitudes[j].conj()
        })
    }

    pub fn tensor(&self, other: &StateVector) -> StateVector {
        let mut out = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.amplitudes {
            for b in &other.amplitudes {
                out.push(a * b);
            }
        }
        StateVector::new(out)
    }

    pub fn conj(&self) -> StateVector {
        StateVector::new(self.amplitudes.iter().map(|a| a.conj()).collect())
    }

    pub fn scale(&self, s: Complex64) -> StateVector {
        StateVector::new(self.amplitudes.iter().map(|a| a * s).collect())
    }
}

// ---------------------------------------------------------------------------
// SubsystemLayout
// ---------------------------------------------------------------------------

/// Ordered local dimensions of consecutive tensor factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsystemLayout {
    factor_dims: Vec<usize>,
}

impl SubsystemLayout {
    pub fn new(factor_dims: Vec<usize>) -> Result<Self> {
        if factor_dims.is_empty() || factor_dims.iter().any(|&d| d == 0) {
            return Err(Error::OutOfRange(
                "layout factors must be positive".into(),
            ));
        }
        Ok(Self { factor_dims })
    }

    /// n qubit factors.
    pub fn qubits(n: usize) -> Self {
        Self {
            factor_dims: vec![2; n],
        }
    }

    pub fn factor_dims(&self) -> &[usize] {
        &self.factor_dims
    }

    pub fn num_factors(&self) -> usize {
        self.factor_dims.len()
    }

    pub fn dim(&self) -> usize {
        self.factor_dims.iter().product()
    }

    /// Decompose a flat index into per-factor digits (factor 0 most significant).
    fn digits(&self, mut index: usize, out: &mut [usize]) {
        for k in (0..self.factor_dims.len()).rev() {
            out[k] = index % self.factor_dims[k];
            index /= self.factor_dims[k];
        }
    }
}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Tensor (Kronecker) product with row index `i_a * rows_b + i_b`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(a.rows() * b.rows(), a.cols() * b.cols());
    for ia in 0..a.rows() {
        for ja in 0..a.cols() {
            let av = a.get(ia, ja);
            if av == ZERO {
                continue;
            }
            for ib in 0..b.rows() {
                for jb in 0..b.cols() {
                    out.set(ia * b.rows() + ib, ja * b.cols() + jb, av * b.get(ib, jb));
                }
            }
        }
    }
    out
}

/// Partial trace over the factors listed in `traced`, remaining factor order
/// preserved. Tracing every factor returns the 1x1 matrix [[Tr(rho)]].
pub fn partial_trace(
    rho: &ComplexMatrix,
    layout: &SubsystemLayout,
    traced: &[usize],
) -> Result<ComplexMatrix> {
    if !rho.is_square() || rho.rows() != layout.dim() {
        return Err(Error::DimensionMismatch(format!(
            "matrix is {}x{} but layout dimension is {}",
            rho.rows(),
            rho.cols(),
            layout.dim()
        )));
    }
    let m = layout.num_factors();
    let mut keep_mask = vec![true; m];
    for &t in traced {
        if t >= m {
            return Err(Error::OutOfRange(format!(
                "traced factor {} out of range for {} factors",
                t, m
            )));
        }
        keep_mask[t] = false;
    }

    let kept: Vec<usize> = (0..m).filter(|&k| keep_mask[k]).collect();
    let reduced_dim: usize = kept.iter().map(|&k| layout.factor_dims()[k]).product();
    let mut out = ComplexMatrix::zeros(reduced_dim.max(1), reduced_dim.max(1));

    let dim = layout.dim();
    let mut di = vec![0usize; m];
    let mut dj = vec![0usize; m];
    for i in 0..dim {
        layout.digits(i, &mut di);
        for j in 0..dim {
            layout.digits(j, &mut dj);
            // traced digits must coincide row/column-wise
            if (0..m).any(|k| !keep_mask[k] && di[k] != dj[k]) {
                continue;
            }
            let mut ri = 0usize;
            let mut rj = 0usize;
            for &k in &kept {
                ri = ri * layout.factor_dims()[k] + di[k];
                rj = rj * layout.factor_dims()[k] + dj[k];
            }
            let v = out.get(ri, rj) + rho.get(i, j);
            out.set(ri, rj, v);
        }
    }
    Ok(out)
}

/// Reorder tensor factors: output factor position `t` carries input factor
/// `order[t]`. `order` must be a permutation of 0..num_factors.
pub fn reorder_factors(
    rho: &ComplexMatrix,
    layout: &SubsystemLayout,
    order: &[usize],
) -> Result<ComplexMatrix> {
    let m = layout.num_factors();
    if !rho.is_square() || rho.rows() != layout.dim() {
        return Err(Error::DimensionMismatch(
            "matrix dimension does not match layout".into(),
        ));
    }
    let mut seen = vec![false; m];
    for &o in order {
        if o >= m || seen[o] {
            return Err(Error::OutOfRange("order is not a permutation".into()));
        }
        seen[o] = true;
    }
    if order.len() != m {
        return Err(Error::OutOfRange("order is not a permutation".into()));
    }

    let out_dims: Vec<usize> = order.iter().map(|&o| layout.factor_dims()[o]).collect();
    let dim = layout.dim();

    // index_map[i] = flat output index of input index i
    let mut index_map = vec![0usize; dim];
    let mut digits = vec![0usize; m];
    for (i, slot) in index_map.iter_mut().enumerate() {
        layout.digits(i, &mut digits);
        let mut idx = 0usize;
        for (t, &o) in order.iter().enumerate() {
            idx = idx * out_dims[t] + digits[o];
        }
        *slot = idx;
    }

    let mut out = ComplexMatrix::zeros(dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            out.set(index_map[i], index_map[j], rho.get(i, j));
        }
    }
    Ok(out)
}

/// Operator vectorization |A> = sum_i |i> (x) A|i>, domain factor first.
///
/// For A : V -> W (a `rows x cols` matrix mapping dim-`cols` V into
/// dim-`rows` W) the result lives in V (x) W and equals
/// sqrt(dim V) * (Id (x) A) phi+(V).
pub fn vectorize(a: &ComplexMatrix) -> StateVector {
    let (dw, dv) = (a.rows(), a.cols());
    let mut out = vec![ZERO; dv * dw];
    for v in 0..dv {
        for w in 0..dw {
            out[v * dw + w] = a.get(w, v);
        }
    }
    StateVector::new(out)
}

/// Maximally entangled state (1/sqrt(dim)) sum_i |i>|i>.
pub fn maximally_entangled(dim: usize) -> StateVector {
    assert!(dim >= 1, "dimension must be positive");
    let s = Complex64::new(1.0 / (dim as f64).sqrt(), 0.0);
    let mut v = StateVector::zeros(dim * dim);
    for i in 0..dim {
        v.set(i * dim + i, s);
    }
    v
}

// ---------------------------------------------------------------------------
// Hermitian eigenvalues (cyclic Jacobi)
// ---------------------------------------------------------------------------

/// Eigenvalues of a Hermitian matrix, ascending, via cyclic Jacobi sweeps.
///
/// Intended for the small dimensions used here (<= a few hundred); quadratic
/// convergence once off-diagonal mass is small.
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Vec<f64> {
    assert!(m.is_square(), "eigenvalues of a non-square matrix");
    let n = m.rows();
    let mut a = m.clone();

    let off = |a: &ComplexMatrix| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a.get(i, j).norm_sqr();
                }
            }
        }
        s
    };

    for _sweep in 0..100 {
        if off(&a) < 1e-28 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a.get(p, q);
                if apq.norm() < 1e-300 {
                    continue;
                }
                // Unitary 2x2 rotation eliminating the (p,q) element:
                // diagonalize [[app, apq], [apq*, aqq]].
                let app = a.get(p, p).re;
                let aqq = a.get(q, q).re;
                let phase = apq / apq.norm(); // e^{i arg}
                let g = apq.norm();
                let tau = (aqq - app) / (2.0 * g);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // columns/rows update with complex Givens: R = [[c, s*phase], [-s*conj(phase), c]]
                for k in 0..n {
                    let akp = a.get(k, p);
                    let akq = a.get(k, q);
                    a.set(k, p, akp * c - akq * s * phase.conj());
                    a.set(k, q, akp * s * phase + akq * c);
                }
                for k in 0..n {
                    let apk = a.get(p, k);
                    let aqk = a.get(q, k);
                    a.set(p, k, apk * c - aqk * s * phase);
                    a.set(q, k, apk * s * phase.conj() + aqk * c);
                }
            }
        }
    }

    let mut eig: Vec<f64> = (0..n).map(|i| a.get(i, i).re).collect();
    eig.sort_by(|x, y| x.partial_cmp(y).unwrap());
    eig
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_matrix, random_unitary};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const TOL: f64 = 1e-9;

    fn sigma_x() -> ComplexMatrix {
        ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]).unwrap()
    }

    fn sigma_z() -> ComplexMatrix {
        ComplexMatrix::from_real(2, 2, &[1.0, 0.0, 0.0, -1.0]).unwrap()
    }

    #[test]
    fn kron_identity_case() {
        let id2 = ComplexMatrix::identity(2);
        assert!(kron(&id2, &id2).approx_eq(&ComplexMatrix::identity(4), 0.0));
    }

    #[test]
    fn kron_sigma_x_sigma_z() {
        let m = kron(&sigma_x(), &sigma_z());
        let mut expected = ComplexMatrix::zeros(4, 4);
        expected.set(0, 2, ONE);
        expected.set(1, 3, -ONE);
        expected.set(2, 0, ONE);
        expected.set(3, 1, -ONE);
        assert!(m.approx_eq(&expected, 0.0));
    }

    #[test]
    fn kron_shape_arithmetic() {
        let a = ComplexMatrix::zeros(2, 3);
        let b = ComplexMatrix::zeros(4, 5);
        let k = kron(&a, &b);
        assert_eq!((k.rows(), k.cols()), (8, 15));
    }

    #[test]
    fn kron_associative_exactly() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let a = random_matrix(&mut rng, 2, 3);
        let b = random_matrix(&mut rng, 3, 2);
        let c = random_matrix(&mut rng, 2, 2);
        let left = kron(&kron(&a, &b), &c);
        let right = kron(&a, &kron(&b, &c));
        assert_eq!(left, right);
    }

    #[test]
    fn partial_trace_product_state() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = random_matrix(&mut rng, 3, 3);
        let b = random_matrix(&mut rng, 4, 4);
        let layout = SubsystemLayout::new(vec![3, 4]).unwrap();
        let reduced = partial_trace(&kron(&a, &b), &layout, &[1]).unwrap();
        assert!(reduced.approx_eq(&a.scale(b.trace()), 1e-12));
        let reduced0 = partial_trace(&kron(&a, &b), &layout, &[0]).unwrap();
        assert!(reduced0.approx_eq(&b.scale(a.trace()), 1e-12));
    }

    #[test]
    fn partial_trace_maximally_entangled() {
        let phi = maximally_entangled(2);
        let rho = phi.outer(&phi);
        let layout = SubsystemLayout::new(vec![2, 2]).unwrap();
        let reduced = partial_trace(&rho, &layout, &[1]).unwrap();
        assert!(reduced.approx_eq(&ComplexMatrix::identity(2).scale_real(0.5), 1e-12));
    }

    #[test]
    fn partial_trace_all_factors_is_trace() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let rho = random_matrix(&mut rng, 6, 6);
        let layout = SubsystemLayout::new(vec![2, 3]).unwrap();
        let t = partial_trace(&rho, &layout, &[0, 1]).unwrap();
        assert_eq!((t.rows(), t.cols()), (1, 1));
        assert!((t.get(0, 0) - rho.trace()).norm() < 1e-12);
    }

    #[test]
    fn partial_trace_preserves_trace() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let rho = random_matrix(&mut rng, 12, 12);
            let layout = SubsystemLayout::new(vec![2, 3, 2]).unwrap();
            let reduced = partial_trace(&rho, &layout, &[1]).unwrap();
            assert!((reduced.trace() - rho.trace()).norm() < 1e-12);
        }
    }

    #[test]
    fn partial_trace_rejects_bad_layout() {
        let rho = ComplexMatrix::identity(4);
        let layout = SubsystemLayout::new(vec![3, 2]).unwrap();
        assert!(partial_trace(&rho, &layout, &[0]).is_err());
    }

    #[test]
    fn vectorize_identity_is_unnormalized_phi_plus() {
        let v = vectorize(&ComplexMatrix::identity(2));
        let expected = maximally_entangled(2).scale(Complex64::new(2f64.sqrt(), 0.0));
        for i in 0..4 {
            assert!((v.get(i) - expected.get(i)).norm() < 1e-12);
        }
    }

    #[test]
    fn vectorize_sigma_x() {
        let v = vectorize(&sigma_x());
        // |0>|1> + |1>|0>
        assert!((v.get(1) - ONE).norm() < 1e-15);
        assert!((v.get(2) - ONE).norm() < 1e-15);
        assert!(v.get(0).norm() < 1e-15 && v.get(3).norm() < 1e-15);
    }

    #[test]
    fn vectorize_inner_product_is_hs_inner_product() {
        // <A|B> = Tr(A^dag B) on >= 100 random rectangular pairs
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..100 {
            let a = random_matrix(&mut rng, 3, 2);
            let b = random_matrix(&mut rng, 3, 2);
            let lhs = vectorize(&a).inner(&vectorize(&b));
            let rhs = a.dagger().mul(&b).trace();
            assert!((lhs - rhs).norm() < TOL);
        }
    }

    #[test]
    fn vectorize_codomain_form() {
        // |A> = sqrt(dim W) (A^t (x) Id) phi+(W)
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let a = random_matrix(&mut rng, 4, 3);
        let lhs = vectorize(&a);
        let phi = maximally_entangled(4);
        let op = kron(&a.transpose(), &ComplexMatrix::identity(4));
        let rhs = op.mul_vec(&phi).scale(Complex64::new(2.0, 0.0));
        for i in 0..lhs.dim() {
            assert!((lhs.get(i) - rhs.get(i)).norm() < 1e-12);
        }
    }

    #[test]
    fn vectorized_outer_partial_traces() {
        // Tr_V |B><A| = B A^dag ; Tr_W |B><A| = (A^dag B)^t
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..25 {
            let a = random_matrix(&mut rng, 3, 2);
            let b = random_matrix(&mut rng, 3, 2);
            let outer = vectorize(&b).outer(&vectorize(&a));
            let layout = SubsystemLayout::new(vec![2, 3]).unwrap();
            let tr_v = partial_trace(&outer, &layout, &[0]).unwrap();
            assert!(tr_v.approx_eq(&b.mul(&a.dagger()), TOL));
            let tr_w = partial_trace(&outer, &layout, &[1]).unwrap();
            assert!(tr_w.approx_eq(&a.dagger().mul(&b).transpose(), TOL));
        }
    }

    #[test]
    fn maximally_entangled_norms() {
        for dim in 1..=8 {
            assert!((maximally_entangled(dim).norm() - 1.0).abs() < 1e-12);
        }
        let v = maximally_entangled(1);
        assert_eq!(v.dim(), 1);
        assert!((v.get(0) - ONE).norm() < 1e-15);
    }

    #[test]
    fn reorder_factors_swaps_kron_order() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let a = random_matrix(&mut rng, 2, 2);
        let b = random_matrix(&mut rng, 3, 3);
        let layout = SubsystemLayout::new(vec![2, 3]).unwrap();
        let swapped = reorder_factors(&kron(&a, &b), &layout, &[1, 0]).unwrap();
        assert!(swapped.approx_eq(&kron(&b, &a), 1e-12));
    }

    #[test]
    fn jacobi_matches_known_spectrum() {
        // sigma_x has eigenvalues -1, 1
        let eig = hermitian_eigenvalues(&sigma_x());
        assert!((eig[0] + 1.0).abs() < 1e-10 && (eig[1] - 1.0).abs() < 1e-10);

        // U diag(d) U^dag has spectrum d
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let u = random_unitary(&mut rng, 5);
        let d = [0.05, 0.1, 0.2, 0.25, 0.4];
        let mut diag = ComplexMatrix::zeros(5, 5);
        for (i, &v) in d.iter().enumerate() {
            diag.set(i, i, Complex64::new(v, 0.0));
        }
        let h = u.mul(&diag).mul(&u.dagger());
        let eig = hermitian_eigenvalues(&h);
        for (got, want) in eig.iter().zip(d.iter()) {
            assert!((got - want).abs() < 1e-9, "got {got}, want {want}");
        }
    }
}
