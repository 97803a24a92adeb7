//! Small dense complex matrices and a cyclic Jacobi eigensolver for the
//! Hermitian case.

use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Square complex matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { ONE } else { ZERO })
    }

    pub fn from_fn<F: FnMut(usize, usize) -> Complex64>(dim: usize, mut f: F) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// `diag(upper, lower)` for two blocks of equal size.
    pub fn block_diag(upper: &ComplexMatrix, lower: &ComplexMatrix) -> Self {
        assert_eq!(upper.dim, lower.dim, "blocks must have equal size");
        let n = upper.dim;
        Self::from_fn(2 * n, |i, j| match (i < n, j < n) {
            (true, true) => upper[(i, j)],
            (false, false) => lower[(i - n, j - n)],
            _ => ZERO,
        })
    }

    /// Square sub-block starting at `(offset, offset)`.
    pub fn block(&self, offset: usize, size: usize) -> Self {
        Self::from_fn(size, |i, j| self[(offset + i, offset + j)])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn scale_real(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    /// `[self, other] = self·other - other·self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    /// `⟨v| self |v⟩`.
    pub fn expectation(&self, v: &[Complex64]) -> Complex64 {
        let mv = self.apply(v);
        v.iter().zip(&mv).map(|(a, b)| a.conj() * b).sum()
    }

    /// Largest entry magnitude of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.max_abs_diff(&self.adjoint()) <= tol
    }

    fn off_diagonal_norm_sqr(&self) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                if i != j {
                    acc += self[(i, j)].norm_sqr();
                }
            }
        }
        acc
    }

    fn frobenius_norm_sqr(&self) -> f64 {
        self.entries.iter().map(Complex64::norm_sqr).sum()
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.entries[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.entries[i * self.dim + j]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        ComplexMatrix::from_fn(n, |i, j| (0..n).map(|k| self[(i, k)] * rhs[(k, j)]).sum())
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim);
        ComplexMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim);
        ComplexMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

/// Eigenvalues (ascending) and matching unit eigenvectors of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    /// `vectors[k]` belongs to `values[k]`; first significant component is
    /// real and positive.
    pub vectors: Vec<Vec<Complex64>>,
    pub sweeps: usize,
}

const MAX_SWEEPS: usize = 100;

/// Cyclic Jacobi diagonalisation of a Hermitian matrix.
///
/// Each `(p, q)` step first removes the phase of `a_pq` with a diagonal
/// unitary, then annihilates the now-real entry with a plane rotation.
pub fn hermitian_eigen(m: &ComplexMatrix) -> HermitianEigen {
    let n = m.dim();
    let mut a = m.clone();
    let mut v = ComplexMatrix::identity(n);
    let scale = a.frobenius_norm_sqr().max(f64::MIN_POSITIVE);
    let mut sweeps = 0;

    while sweeps < MAX_SWEEPS && a.off_diagonal_norm_sqr() > 1e-32 * scale {
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                let mag = apq.norm();
                if mag <= 1e-300 {
                    continue;
                }
                // Phase step: D = diag(.., e^{-iφ} at q, ..) makes a_pq real.
                let phase = apq / mag;
                let d_q = phase.conj();
                for k in 0..n {
                    a[(k, q)] *= d_q;
                    v[(k, q)] *= d_q;
                }
                for k in 0..n {
                    a[(q, k)] *= phase;
                }

                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let tau = (aqq - app) / (2.0 * mag);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                // A ← Rᵀ A R with R_pp = R_qq = c, R_pq = s, R_qp = -s.
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = akp * c - akq * s;
                    a[(k, q)] = akp * s + akq * c;
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp * c - vkq * s;
                    v[(k, q)] = vkp * s + vkq * c;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = apk * c - aqk * s;
                    a[(q, k)] = apk * s + aqk * c;
                }
                a[(p, q)] = ZERO;
                a[(q, p)] = ZERO;
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = order
        .iter()
        .map(|&col| normalize_phase((0..n).map(|k| v[(k, col)]).collect()))
        .collect();
    HermitianEigen {
        values,
        vectors,
        sweeps,
    }
}

/// Rescales `v` to unit norm with its first significant component real and positive.
pub fn normalize_phase(mut v: Vec<Complex64>) -> Vec<Complex64> {
    let norm = v.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt();
    if norm == 0.0 {
        return v;
    }
    let pivot = v
        .iter()
        .copied()
        .find(|z| z.norm() > 1e-12 * norm)
        .unwrap_or(ONE);
    let rot = pivot.conj() / (pivot.norm() * norm);
    for z in &mut v {
        *z *= rot;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn pauli_y_spectrum() {
        let m = ComplexMatrix::from_fn(2, |i, j| match (i, j) {
            (0, 1) => c(0.0, -1.0),
            (1, 0) => c(0.0, 1.0),
            _ => ZERO,
        });
        let e = hermitian_eigen(&m);
        assert!((e.values[0] + 1.0).abs() < 1e-14);
        assert!((e.values[1] - 1.0).abs() < 1e-14);
        for (val, vec) in e.values.iter().zip(&e.vectors) {
            let mv = m.apply(vec);
            for (a, b) in mv.iter().zip(vec) {
                assert!((a - b * val).norm() < 1e-13);
            }
            assert!(vec[0].im == 0.0 && vec[0].re > 0.0);
        }
    }

    #[test]
    fn random_hermitian_reconstructs() {
        let n = 6;
        let mut seed = 12345u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 11) as f64 / (1u64 << 53) as f64) - 0.5
        };
        let raw = ComplexMatrix::from_fn(n, |_, _| c(next(), next()));
        let h = &raw + &raw.adjoint();
        let e = hermitian_eigen(&h);
        assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
        let trace: f64 = (0..n).map(|i| h[(i, i)].re).sum();
        assert!((trace - e.values.iter().sum::<f64>()).abs() < 1e-12);
        for (val, vec) in e.values.iter().zip(&e.vectors) {
            let mv = h.apply(vec);
            for (a, b) in mv.iter().zip(vec) {
                assert!((a - b * val).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn diagonal_needs_no_sweeps() {
        let d = ComplexMatrix::from_fn(3, |i, j| if i == j { c(3.0 - i as f64, 0.0) } else { ZERO });
        let e = hermitian_eigen(&d);
        assert_eq!(e.sweeps, 0);
        assert_eq!(e.values, vec![1.0, 2.0, 3.0]);
    }
}
