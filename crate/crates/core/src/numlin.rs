//! Dense vectors and matrices, norms, Cholesky factorization, and seeded
//! randomness. Everything downstream builds on this module.
//!
//! Matrices are row-major `f64` with explicit dimensions and are checked to
//! be finite on construction. Problem sizes are desk scale (dimensions up to
//! a few hundred), so no sparse storage or blocking is attempted.

use crate::error::{Error, Result};
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

/// Vector norm selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Norm {
    L1,
    L2,
    Inf,
}

impl Norm {
    /// Evaluate the norm of `v`. The empty vector has norm 0 under all three.
    pub fn eval(self, v: &[f64]) -> f64 {
        match self {
            Norm::L1 => v.iter().map(|x| x.abs()).sum(),
            Norm::L2 => v.iter().map(|x| x * x).sum::<f64>().sqrt(),
            Norm::Inf => v.iter().fold(0.0, |acc, x| acc.max(x.abs())),
        }
    }
}

/// ℓp norm of a vector, p in {1, 2, inf}.
pub fn norm(v: &[f64], p: Norm) -> f64 {
    p.eval(v)
}

/// Dot product. Panics on length mismatch (caller bug, not input error).
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len(), "dot: length mismatch");
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `a - b` elementwise.
pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    assert_eq!(a.len(), b.len(), "sub: length mismatch");
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    /// Build from explicit storage. All entries must be finite.
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                actual: data.len(),
            });
        }
        if data.iter().any(|x| !x.is_finite()) {
            return Err(Error::Parse("matrix entry is not finite".into()));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    expected: c,
                    actual: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Self::new(r, c, data)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [f64] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// Matrix-vector product `self * v`.
    pub fn matvec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.cols, "matvec: dimension mismatch");
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    /// Matrix product `self * other`.
    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matmul: dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    /// Scale every entry by the diagonal matrix `diag(d)` from the left,
    /// i.e. row `i` is multiplied by `d[i]`.
    pub fn scale_rows(&self, d: &[f64]) -> Matrix {
        assert_eq!(d.len(), self.rows);
        let mut out = self.clone();
        for i in 0..self.rows {
            for x in out.row_mut(i) {
                *x *= d[i];
            }
        }
        out
    }

    pub fn frobenius_norm_sq(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |acc: f64, x| acc.max(x.abs()))
    }
}

/// Cholesky factorization of a symmetric positive definite matrix.
///
/// Returns the upper-triangular factor `V` with `Vᵀ V = S`. Only the lower
/// triangle of `S` is read. Fails with [`Error::NotPositiveDefinite`] when a
/// pivot drops to `1e-12` or below.
pub fn cholesky(s: &Matrix) -> Result<Matrix> {
    let n = s.rows();
    if s.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: s.cols(),
        });
    }
    // Compute lower L with L Lᵀ = S, then return Lᵀ.
    let mut l = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..=i {
            let mut sum = s.get(i, j);
            for k in 0..j {
                sum -= l.get(i, k) * l.get(j, k);
            }
            if i == j {
                if sum <= 1e-12 {
                    return Err(Error::NotPositiveDefinite {
                        index: i,
                        pivot: sum,
                    });
                }
                l.set(i, j, sum.sqrt());
            } else {
                l.set(i, j, sum / l.get(j, j));
            }
        }
    }
    Ok(l.transpose())
}

/// Solve `Vᵀ V x = b` given the upper-triangular Cholesky factor `V`.
pub fn cholesky_solve(v_upper: &Matrix, b: &[f64]) -> Vec<f64> {
    let n = v_upper.rows();
    assert_eq!(b.len(), n);
    // Vᵀ y = b (forward substitution; Vᵀ is lower triangular).
    let mut y = vec![0.0; n];
    for i in 0..n {
        let mut sum = b[i];
        for k in 0..i {
            sum -= v_upper.get(k, i) * y[k];
        }
        y[i] = sum / v_upper.get(i, i);
    }
    // V x = y (back substitution).
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut sum = y[i];
        for k in i + 1..n {
            sum -= v_upper.get(i, k) * x[k];
        }
        x[i] = sum / v_upper.get(i, i);
    }
    x
}

/// Invert an upper-triangular matrix by back substitution on unit vectors.
pub fn invert_upper_triangular(v: &Matrix) -> Matrix {
    let n = v.rows();
    assert_eq!(v.cols(), n);
    let mut inv = Matrix::zeros(n, n);
    for col in 0..n {
        let mut x = vec![0.0; n];
        for i in (0..n).rev() {
            let mut sum = if i == col { 1.0 } else { 0.0 };
            for k in i + 1..n {
                sum -= v.get(i, k) * x[k];
            }
            x[i] = sum / v.get(i, i);
        }
        for i in 0..n {
            inv.set(i, col, x[i]);
        }
    }
    inv
}

/// Seeded pseudorandom generator.
///
/// Streams are reproducible for a fixed seed within one build of the
/// artifact; cross-build bit equality is not a contract. A generator is
/// single-owner: derive independent child streams instead of sharing.
#[derive(Debug, Clone)]
pub struct Rng {
    seed: u64,
    inner: ChaCha8Rng,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Derive an independent child stream. Children with distinct tags (or
    /// from distinct parents) never overlap in practice.
    pub fn derive(&self, tag: u64) -> Rng {
        Rng::new(splitmix64(self.seed ^ splitmix64(tag)))
    }

    /// Uniform draw in `[lo, hi)`.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.inner.random::<f64>()
    }

    /// Standard normal draw.
    pub fn standard_normal(&mut self) -> f64 {
        self.inner.sample(StandardNormal)
    }

    /// Uniform integer in `[0, n)`.
    pub fn index(&mut self, n: usize) -> usize {
        assert!(n > 0);
        self.inner.random_range(0..n)
    }

    /// `true` with probability 1/2.
    pub fn coin(&mut self) -> bool {
        self.inner.random::<bool>()
    }

    /// `k` distinct indices from `[0, n)` via partial Fisher-Yates,
    /// returned in selection order.
    pub fn distinct_indices(&mut self, n: usize, k: usize) -> Vec<usize> {
        assert!(k <= n);
        let mut pool: Vec<usize> = (0..n).collect();
        for i in 0..k {
            let j = i + self.index(n - i);
            pool.swap(i, j);
        }
        pool.truncate(k);
        pool
    }

    pub fn uniform_vec(&mut self, n: usize, lo: f64, hi: f64) -> Vec<f64> {
        (0..n).map(|_| self.uniform(lo, hi)).collect()
    }

    pub fn normal_vec(&mut self, n: usize) -> Vec<f64> {
        (0..n).map(|_| self.standard_normal()).collect()
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn random_spd(n: usize, rng: &mut Rng) -> Matrix {
        let m = Matrix::from_fn(n, n, |_, _| rng.uniform(-1.0, 1.0));
        let mut s = m.transpose().matmul(&m);
        for i in 0..n {
            s.set(i, i, s.get(i, i) + 0.1);
        }
        s
    }

    #[test]
    fn cholesky_identity() {
        let v = cholesky(&Matrix::identity(3)).unwrap();
        assert_eq!(v, Matrix::identity(3));
    }

    #[test]
    fn cholesky_diagonal() {
        let s = Matrix::from_rows(&[vec![4.0, 0.0], vec![0.0, 1.0]]).unwrap();
        let v = cholesky(&s).unwrap();
        let expected = Matrix::from_rows(&[vec![2.0, 0.0], vec![0.0, 1.0]]).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert!((v.get(i, j) - expected.get(i, j)).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn cholesky_reconstructs_random_spd() {
        let mut rng = Rng::new(7);
        for trial in 0..100 {
            let n = 2 + trial % 11; // up to 12
            let s = random_spd(n, &mut rng);
            let v = cholesky(&s).unwrap();
            let recon = v.transpose().matmul(&v);
            let scale = s.max_abs();
            let mut err: f64 = 0.0;
            for i in 0..n {
                for j in 0..n {
                    err = err.max((recon.get(i, j) - s.get(i, j)).abs());
                }
            }
            assert!(
                err <= 1e-9 * scale,
                "reconstruction error {err} exceeds 1e-9 * {scale}"
            );
        }
    }

    #[test]
    fn cholesky_rejects_indefinite() {
        let s = Matrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 1.0]]).unwrap();
        assert!(matches!(
            cholesky(&s),
            Err(Error::NotPositiveDefinite { .. })
        ));
    }

    #[test]
    fn cholesky_solve_matches_direct() {
        let mut rng = Rng::new(11);
        let s = random_spd(5, &mut rng);
        let v = cholesky(&s).unwrap();
        let b = rng.uniform_vec(5, -2.0, 2.0);
        let x = cholesky_solve(&v, &b);
        let back = s.matvec(&x);
        for i in 0..5 {
            assert!((back[i] - b[i]).abs() < 1e-9);
        }
    }

    #[test]
    fn invert_upper_triangular_roundtrip() {
        let mut rng = Rng::new(13);
        let s = random_spd(6, &mut rng);
        let v = cholesky(&s).unwrap();
        let inv = invert_upper_triangular(&v);
        let prod = v.matmul(&inv);
        for i in 0..6 {
            for j in 0..6 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((prod.get(i, j) - want).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn norms_basic() {
        assert_eq!(norm(&[3.0, 4.0], Norm::L2), 5.0);
        assert_eq!(norm(&[1.0, -1.0], Norm::L1), 2.0);
        assert_eq!(norm(&[1.0, -3.0], Norm::Inf), 3.0);
        assert_eq!(norm(&[], Norm::L2), 0.0);
    }

    #[test]
    fn norm_l2_matches_direct_summation() {
        let mut rng = Rng::new(3);
        for _ in 0..50 {
            let v = rng.uniform_vec(17, -10.0, 10.0);
            let direct: f64 = v.iter().map(|x| x * x).sum();
            let n = norm(&v, Norm::L2);
            assert!((n * n - direct).abs() <= 1e-9 * direct.max(1.0));
        }
    }

    #[test]
    fn rng_streams_repeat_under_seed() {
        let mut a = Rng::new(42);
        let mut b = Rng::new(42);
        for _ in 0..10_000 {
            assert_eq!(a.uniform(0.0, 1.0), b.uniform(0.0, 1.0));
        }
    }

    #[test]
    fn rng_derived_streams_differ() {
        let root = Rng::new(1);
        let mut a = root.derive(1);
        let mut b = root.derive(2);
        let same = (0..100).filter(|_| a.uniform(0.0, 1.0) == b.uniform(0.0, 1.0)).count();
        assert_eq!(same, 0);
    }

    #[test]
    fn matrix_rejects_nonfinite() {
        assert!(Matrix::new(1, 2, vec![1.0, f64::NAN]).is_err());
        assert!(Matrix::new(1, 2, vec![1.0, f64::INFINITY]).is_err());
    }

    #[test]
    fn distinct_indices_are_distinct() {
        let mut rng = Rng::new(5);
        let idx = rng.distinct_indices(100, 30);
        let mut sorted = idx.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), 30);
    }
}
