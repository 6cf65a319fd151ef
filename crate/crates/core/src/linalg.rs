//! Dense complex matrices sized for a handful of qubits.
//!
//! Everything downstream (density operators, marginals, decohered states)
//! is a [`CMatrix`]. The eigensolver is a cyclic complex Jacobi iteration:
//! the matrices here are at most a few dozen rows wide, and Jacobi delivers
//! orthonormal eigenvectors to working precision.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Range;

use crate::error::{Error, Result};

pub use num_complex::Complex64 as Complex;

/// Largest row or column count accepted by [`kron`] (ten qubits).
pub const MAX_DIM: usize = 1 << 10;

/// Relative eigenvalue gap below which two eigenvalues are treated as equal.
pub const DEGENERACY_TOL: f64 = 1e-9;

/// Relative tolerance of the Hermiticity check.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Entries of a probability vector may dip this far below zero (eigensolver
/// noise on rank-deficient operators) before being rejected.
pub const PROB_CLAMP: f64 = 1e-12;

const MAX_SWEEPS: usize = 100;
const OFF_DIAGONAL_TOL: f64 = 1e-13;

#[inline]
pub(crate) fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

/// Dense row-major complex matrix.
#[derive(Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c(1.0, 0.0);
        }
        m
    }

    /// Builds a matrix from row-major entries, rejecting NaN and infinities.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Complex>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch(format!(
                "empty matrix ({rows}x{cols})"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(k) = data
            .iter()
            .position(|z| !(z.re.is_finite() && z.im.is_finite()))
        {
            return Err(Error::NonFinite {
                row: k / cols,
                col: k % cols,
            });
        }
        Ok(Self { rows, cols, data })
    }

    /// Real-valued matrix from row-major entries.
    pub fn from_real(rows: usize, cols: usize, data: &[f64]) -> Result<Self> {
        Self::from_vec(rows, cols, data.iter().map(|&x| c(x, 0.0)).collect())
    }

    pub fn from_diag(diag: &[f64]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, &d) in diag.iter().enumerate() {
            m.data[i * n + i] = c(d, 0.0);
        }
        m
    }

    /// The projector `|v><v|`.
    pub fn outer(v: &[Complex]) -> Self {
        let n = v.len();
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m.data[i * n + j] = v[i] * v[j].conj();
            }
        }
        m
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

    pub fn as_slice(&self) -> &[Complex] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, col: usize) -> Complex {
        self.data[r * self.cols + col]
    }

    #[inline]
    pub fn set(&mut self, r: usize, col: usize, v: Complex) {
        self.data[r * self.cols + col] = v;
    }

    pub fn column(&self, k: usize) -> Vec<Complex> {
        (0..self.rows).map(|r| self.get(r, k)).collect()
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for col in 0..self.cols {
                out.data[col * self.rows + r] = self.get(r, col).conj();
            }
        }
        out
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == Complex::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// `U self U†`.
    pub fn conjugate_by(&self, u: &Self) -> Result<Self> {
        u.matmul(self)?.matmul(&u.adjoint())
    }

    pub fn trace(&self) -> Complex {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn diagonal_real(&self) -> Vec<f64> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).re)
            .collect()
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// `max_ij |M_ij - conj(M_ji)|`, or infinity for non-square input.
    pub fn hermitian_asymmetry(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let n = self.rows;
        let mut worst = 0.0_f64;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian_asymmetry() <= HERMITIAN_TOL * self.max_abs().max(1.0)
    }

    /// `Tr(M^2)`; the purity when `M` is a density matrix.
    pub fn purity(&self) -> f64 {
        let n = self.rows;
        let mut acc = Complex::new(0.0, 0.0);
        for i in 0..n {
            for k in 0..n {
                acc += self.get(i, k) * self.get(k, i);
            }
        }
        acc.re
    }
}

impl fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for col in 0..self.cols {
                let z = self.get(r, col);
                write!(f, "{:+.6}{:+.6}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Kronecker product `A ⊗ B`.
pub fn kron(a: &CMatrix, b: &CMatrix) -> Result<CMatrix> {
    let rows = a.rows.saturating_mul(b.rows);
    let cols = a.cols.saturating_mul(b.cols);
    if rows > MAX_DIM || cols > MAX_DIM {
        return Err(Error::TooLarge(rows.max(cols)));
    }
    let mut out = CMatrix::zeros(rows, cols);
    for ar in 0..a.rows {
        for ac in 0..a.cols {
            let x = a.get(ar, ac);
            for br in 0..b.rows {
                for bc in 0..b.cols {
                    out.set(ar * b.rows + br, ac * b.cols + bc, x * b.get(br, bc));
                }
            }
        }
    }
    Ok(out)
}

/// Traces out every subsystem not listed in `keep`.
///
/// `dims` lists the subsystem dimensions, most significant first. The result
/// is ordered by the kept subsystems in ascending index order.
pub fn partial_trace(rho: &CMatrix, dims: &[usize], keep: &[usize]) -> Result<CMatrix> {
    if !rho.is_square() {
        return Err(Error::NotSquare {
            rows: rho.rows,
            cols: rho.cols,
        });
    }
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::DimensionMismatch(format!(
            "invalid subsystem dimensions {dims:?}"
        )));
    }
    let total: usize = dims.iter().product();
    if total != rho.rows {
        return Err(Error::DimensionMismatch(format!(
            "subsystem dimensions {dims:?} multiply to {total}, matrix is {}x{}",
            rho.rows, rho.cols
        )));
    }
    let mut kept: Vec<usize> = keep.to_vec();
    kept.sort_unstable();
    kept.dedup();
    if kept.len() != keep.len() || kept.iter().any(|&k| k >= dims.len()) {
        return Err(Error::DimensionMismatch(format!(
            "invalid kept subsystems {keep:?} for {} subsystems",
            dims.len()
        )));
    }
    let traced: Vec<usize> = (0..dims.len()).filter(|i| !kept.contains(i)).collect();

    // stride of subsystem i in the full index
    let mut strides = vec![1usize; dims.len()];
    for i in (0..dims.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * dims[i + 1];
    }
    let offsets = |subsystems: &[usize]| -> Vec<usize> {
        let count: usize = subsystems.iter().map(|&s| dims[s]).product();
        (0..count)
            .map(|mut idx| {
                let mut off = 0;
                for &s in subsystems.iter().rev() {
                    off += (idx % dims[s]) * strides[s];
                    idx /= dims[s];
                }
                off
            })
            .collect()
    };
    let kept_off = offsets(&kept);
    let traced_off = offsets(&traced);

    let d = kept_off.len();
    let mut out = CMatrix::zeros(d, d);
    for (i, &ri) in kept_off.iter().enumerate() {
        for (j, &cj) in kept_off.iter().enumerate() {
            let s: Complex = traced_off.iter().map(|&t| rho.get(ri + t, cj + t)).sum();
            out.set(i, j, s);
        }
    }
    Ok(out)
}

/// Eigenvalues (descending) with matching unit eigenvectors as columns.
#[derive(Clone, Debug)]
pub struct EigenSystem {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: CMatrix,
}

impl EigenSystem {
    /// Index ranges of runs of (numerically) equal eigenvalues.
    pub fn degenerate_blocks(&self) -> Vec<Range<usize>> {
        let mut blocks = Vec::new();
        let mut start = 0;
        for k in 1..=self.eigenvalues.len() {
            if k == self.eigenvalues.len()
                || !nearly_equal(self.eigenvalues[k - 1], self.eigenvalues[k])
            {
                blocks.push(start..k);
                start = k;
            }
        }
        blocks
    }

    /// `V diag(λ) V†`.
    pub fn reconstruct(&self) -> CMatrix {
        let n = self.eigenvalues.len();
        let v = &self.eigenvectors;
        let mut out = CMatrix::zeros(v.rows(), v.rows());
        for i in 0..v.rows() {
            for j in 0..v.rows() {
                let s: Complex = (0..n)
                    .map(|k| v.get(i, k) * self.eigenvalues[k] * v.get(j, k).conj())
                    .sum();
                out.set(i, j, s);
            }
        }
        out
    }
}

fn nearly_equal(a: f64, b: f64) -> bool {
    (a - b).abs() < DEGENERACY_TOL * a.abs().max(b.abs()).max(1.0)
}

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi sweeps.
///
/// Output is deterministic: each eigenvector's largest-modulus entry (first
/// one on ties) is made real and non-negative, eigenvalues are sorted in
/// descending order and numerically tied eigenvalues are ordered by a
/// descending lexicographic comparison of their eigenvectors.
pub fn hermitian_eig(m: &CMatrix) -> Result<EigenSystem> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    if !m.is_hermitian() {
        return Err(Error::NotHermitian {
            asymmetry: m.hermitian_asymmetry(),
        });
    }
    let n = m.rows;

    // work on the exactly Hermitian part
    let mut a = CMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            a.set(i, j, (m.get(i, j) + m.get(j, i).conj()) * 0.5);
        }
    }
    let mut v = CMatrix::identity(n);
    let threshold = OFF_DIAGONAL_TOL * m.frobenius_norm();

    let mut converged = false;
    for _ in 0..=MAX_SWEEPS {
        if off_diagonal_norm(&a) <= threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }

    for k in 0..n {
        fix_phase(&mut v, k);
    }
    let values: Vec<f64> = (0..n).map(|i| a.get(i, i).re).collect();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[j].total_cmp(&values[i]));
    // reorder tied runs by their eigenvectors
    let mut start = 0;
    for k in 1..=n {
        if k == n || !nearly_equal(values[order[k - 1]], values[order[k]]) {
            order[start..k].sort_by(|&i, &j| lex_desc(&v, i, j));
            start = k;
        }
    }

    let eigenvalues = order.iter().map(|&i| values[i]).collect();
    let mut eigenvectors = CMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        for r in 0..n {
            eigenvectors.set(r, dst, v.get(r, src));
        }
    }
    Ok(EigenSystem {
        eigenvalues,
        eigenvectors,
    })
}

fn off_diagonal_norm(a: &CMatrix) -> f64 {
    let n = a.rows;
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a.get(i, j).norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// One Jacobi rotation annihilating `a[p][q]`: `A <- J† A J`, `V <- V J`.
fn rotate(a: &mut CMatrix, v: &mut CMatrix, p: usize, q: usize) {
    let apq = a.get(p, q);
    let g = apq.norm();
    if g == 0.0 {
        return;
    }
    let app = a.get(p, p).re;
    let aqq = a.get(q, q).re;
    // phase that makes the pivot real and positive
    let phase = (apq / g).conj();

    let theta = (aqq - app) / (2.0 * g);
    let t = if theta == 0.0 {
        1.0
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let cs = 1.0 / (1.0 + t * t).sqrt();
    let sn = t * cs;

    let j_pp = c(cs, 0.0);
    let j_pq = c(sn, 0.0);
    let j_qp = phase * (-sn);
    let j_qq = phase * cs;

    let n = a.rows;
    for k in 0..n {
        let akp = a.get(k, p);
        let akq = a.get(k, q);
        a.set(k, p, akp * j_pp + akq * j_qp);
        a.set(k, q, akp * j_pq + akq * j_qq);
    }
    for k in 0..n {
        let apk = a.get(p, k);
        let aqk = a.get(q, k);
        a.set(p, k, j_pp.conj() * apk + j_qp.conj() * aqk);
        a.set(q, k, j_pq.conj() * apk + j_qq.conj() * aqk);
    }
    a.set(p, q, c(0.0, 0.0));
    a.set(q, p, c(0.0, 0.0));
    let (dp, dq) = (a.get(p, p).re, a.get(q, q).re);
    a.set(p, p, c(dp, 0.0));
    a.set(q, q, c(dq, 0.0));

    for k in 0..n {
        let vkp = v.get(k, p);
        let vkq = v.get(k, q);
        v.set(k, p, vkp * j_pp + vkq * j_qp);
        v.set(k, q, vkp * j_pq + vkq * j_qq);
    }
}

/// Rotates column `k` so its largest-modulus entry is real and non-negative.
pub(crate) fn fix_phase(v: &mut CMatrix, k: usize) {
    let n = v.rows;
    let max = (0..n).map(|r| v.get(r, k).norm()).fold(0.0, f64::max);
    if max == 0.0 {
        return;
    }
    let pivot = (0..n)
        .find(|&r| v.get(r, k).norm() >= max * (1.0 - 1e-12))
        .unwrap_or(0);
    let z = v.get(pivot, k);
    let rot = z.conj() / z.norm();
    for r in 0..n {
        let x = v.get(r, k) * rot;
        v.set(r, k, x);
    }
    let re = v.get(pivot, k).re;
    v.set(pivot, k, c(re, 0.0));
}

fn lex_desc(v: &CMatrix, i: usize, j: usize) -> Ordering {
    for r in 0..v.rows {
        let (a, b) = (v.get(r, i), v.get(r, j));
        let ord = b.re.total_cmp(&a.re).then(b.im.total_cmp(&a.im));
        if ord != Ordering::Equal {
            return ord;
        }
    }
    Ordering::Equal
}

/// `x ln x` with `0 ln 0 = 0`.
#[inline]
pub fn xlnx(x: f64) -> f64 {
    if x > 0.0 {
        x * x.ln()
    } else {
        0.0
    }
}

/// Shannon entropy `-Σ p ln p` of a probability vector.
///
/// Entries down to `-1e-12` are clamped to zero; the sum must lie within
/// `1e-9` of one.
pub fn shannon(p: &[f64]) -> Result<f64> {
    if p.is_empty() {
        return Err(Error::InvalidProbability("empty vector".into()));
    }
    if let Some(&bad) = p.iter().find(|x| !x.is_finite() || **x < -PROB_CLAMP) {
        return Err(Error::InvalidProbability(format!("entry {bad:e}")));
    }
    let sum: f64 = p.iter().sum();
    if (sum - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidProbability(format!("entries sum to {sum}")));
    }
    Ok(-p.iter().map(|&x| xlnx(x.clamp(0.0, 1.0))).sum::<f64>())
}

/// `-x ln x - (1-x) ln(1-x)` for `x` in `[0, 1]`.
pub fn binary_entropy(x: f64) -> f64 {
    -xlnx(x) - xlnx(1.0 - x)
}

/// Von Neumann entropy `-Tr ρ ln ρ` from the spectrum.
pub fn von_neumann_entropy(rho: &CMatrix) -> Result<f64> {
    let eig = hermitian_eig(rho)?;
    shannon(&eig.eigenvalues)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sigma_x() -> CMatrix {
        CMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]).unwrap()
    }

    #[test]
    fn kron_identity_and_projectors() {
        let i4 = kron(&CMatrix::identity(2), &CMatrix::identity(2)).unwrap();
        assert_eq!(i4, CMatrix::identity(4));

        let p = CMatrix::from_diag(&[1.0, 0.0]);
        assert_eq!(
            kron(&p, &p).unwrap(),
            CMatrix::from_diag(&[1.0, 0.0, 0.0, 0.0])
        );
    }

    #[test]
    fn kron_sigma_x_flips_both_qubits() {
        let xx = kron(&sigma_x(), &sigma_x()).unwrap();
        let ket00 = CMatrix::from_real(4, 1, &[1.0, 0.0, 0.0, 0.0]).unwrap();
        let out = xx.matmul(&ket00).unwrap();
        assert_eq!(
            out,
            CMatrix::from_real(4, 1, &[0.0, 0.0, 0.0, 1.0]).unwrap()
        );
    }

    #[test]
    fn kron_rejects_oversized_products() {
        let big = CMatrix::identity(64);
        assert!(matches!(kron(&big, &big), Err(Error::TooLarge(4096))));
        assert!(kron(&CMatrix::identity(32), &CMatrix::identity(32)).is_ok());
    }

    #[test]
    fn from_vec_rejects_nan() {
        let data = vec![c(1.0, 0.0), c(f64::NAN, 0.0), c(0.0, 0.0), c(1.0, 0.0)];
        assert!(matches!(
            CMatrix::from_vec(2, 2, data),
            Err(Error::NonFinite { row: 0, col: 1 })
        ));
    }

    #[test]
    fn partial_trace_of_product_state() {
        let rho = CMatrix::from_diag(&[1.0, 0.0, 0.0, 0.0]);
        let a = partial_trace(&rho, &[2, 2], &[0]).unwrap();
        assert_eq!(a, CMatrix::from_diag(&[1.0, 0.0]));
    }

    #[test]
    fn partial_trace_keeps_correct_factor() {
        // diag(1,0) ⊗ diag(0.3, 0.7)
        let a = CMatrix::from_diag(&[1.0, 0.0]);
        let b = CMatrix::from_real(2, 2, &[0.3, 0.1, 0.1, 0.7]).unwrap();
        let rho = kron(&a, &b).unwrap();
        assert!(partial_trace(&rho, &[2, 2], &[1]).unwrap().max_abs_diff(&b) < 1e-15);
        assert!(partial_trace(&rho, &[2, 2], &[0]).unwrap().max_abs_diff(&a) < 1e-15);
    }

    #[test]
    fn partial_trace_errors() {
        let rho = CMatrix::identity(4);
        assert!(matches!(
            partial_trace(&rho, &[2, 3], &[0]),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            partial_trace(&rho, &[2, 2], &[2]),
            Err(Error::DimensionMismatch(_))
        ));
        let rect = CMatrix::zeros(4, 2);
        assert!(matches!(
            partial_trace(&rect, &[2, 2], &[0]),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn eig_of_wwbar_marginal() {
        let m = CMatrix::from_real(2, 2, &[3.0, 2.0, 2.0, 3.0])
            .unwrap()
            .scale(1.0 / 6.0);
        let eig = hermitian_eig(&m).unwrap();
        assert!((eig.eigenvalues[0] - 5.0 / 6.0).abs() < 1e-14);
        assert!((eig.eigenvalues[1] - 1.0 / 6.0).abs() < 1e-14);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let v = &eig.eigenvectors;
        assert!((v.get(0, 0) - c(h, 0.0)).norm() < 1e-14);
        assert!((v.get(1, 0) - c(h, 0.0)).norm() < 1e-14);
        assert!((v.get(0, 1) - c(h, 0.0)).norm() < 1e-14);
        assert!((v.get(1, 1) - c(-h, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn eig_of_identity() {
        let eig = hermitian_eig(&CMatrix::identity(2)).unwrap();
        assert_eq!(eig.eigenvalues, vec![1.0, 1.0]);
        assert_eq!(eig.eigenvectors, CMatrix::identity(2));
        assert_eq!(eig.degenerate_blocks(), vec![0..2]);
    }

    #[test]
    fn eig_of_complex_hermitian() {
        // [[2, i], [-i, 2]] has eigenvalues 3 and 1
        let m = CMatrix::from_vec(
            2,
            2,
            vec![c(2.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(2.0, 0.0)],
        )
        .unwrap();
        let eig = hermitian_eig(&m).unwrap();
        assert!((eig.eigenvalues[0] - 3.0).abs() < 1e-13);
        assert!((eig.eigenvalues[1] - 1.0).abs() < 1e-13);
        assert!(eig.reconstruct().max_abs_diff(&m) < 1e-13);
        for k in 0..2 {
            // pivot convention
            let col = eig.eigenvectors.column(k);
            let max = col.iter().map(|z| z.norm()).fold(0.0, f64::max);
            let pivot = col
                .iter()
                .find(|z| z.norm() >= max * (1.0 - 1e-12))
                .unwrap();
            assert!(pivot.im.abs() < 1e-15 && pivot.re > 0.0);
        }
    }

    #[test]
    fn eig_rejects_non_hermitian() {
        let m = CMatrix::from_real(2, 2, &[1.0, 2.0, 0.0, 1.0]).unwrap();
        assert!(matches!(hermitian_eig(&m), Err(Error::NotHermitian { .. })));
        assert!(matches!(
            hermitian_eig(&CMatrix::zeros(2, 3)),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn eig_of_zero_matrix() {
        let eig = hermitian_eig(&CMatrix::zeros(3, 3)).unwrap();
        assert_eq!(eig.eigenvalues, vec![0.0; 3]);
    }

    #[test]
    fn shannon_values() {
        assert!((shannon(&[0.5, 0.5]).unwrap() - std::f64::consts::LN_2).abs() < 1e-15);
        assert_eq!(shannon(&[1.0, 0.0]).unwrap(), 0.0);
        let s = shannon(&[5.0 / 6.0, 1.0 / 6.0]).unwrap();
        assert!((s - 0.450561).abs() < 1e-6);
    }

    #[test]
    fn shannon_clamps_and_rejects() {
        assert!(shannon(&[1.0 + 5e-13, -5e-13]).is_ok());
        assert!(matches!(
            shannon(&[1.1, -0.1]),
            Err(Error::InvalidProbability(_))
        ));
        assert!(matches!(
            shannon(&[0.5, 0.4]),
            Err(Error::InvalidProbability(_))
        ));
        assert!(shannon(&[]).is_err());
    }
}
