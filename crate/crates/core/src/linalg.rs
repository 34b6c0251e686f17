//! Exact dense linear algebra over the rationals.
//!
//! A linear map `f: V -> W` is stored as the matrix whose column `j` is
//! `f(basis_j)`. Tensor products use the row-major index `(i, j) -> i * d2 + j`.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational scalar, always in lowest terms.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("matrix of size {size} has rank {rank} and is not invertible")]
    NotInvertible { size: usize, rank: usize },
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("linear system has no solution")]
    NoSolution,
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count does not match {rows}x{cols}");
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        Matrix::new(rows, cols, entries.iter().map(|&v| int(v)).collect())
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let data: Vec<Rational> = rows.into_iter().flatten().collect();
        Matrix::new(r, c, data)
    }

    /// Single column holding `v`.
    pub fn column(v: Vec<Rational>) -> Self {
        let n = v.len();
        Matrix::new(n, 1, v)
    }

    /// Single row holding `v`.
    pub fn row(v: Vec<Rational>) -> Self {
        let n = v.len();
        Matrix::new(1, n, v)
    }

    /// Column `i` of the identity of size `n`.
    pub fn unit_vector(n: usize, i: usize) -> Self {
        let mut m = Matrix::zeros(n, 1);
        m.data[i] = Rational::one();
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &Rational) {
        let e = &mut self.data[i * self.cols + j];
        *e += v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn col(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vec(&self, i: usize) -> Vec<Rational> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix::new(self.rows, self.cols, self.data.iter().map(|v| v * c).collect())
    }

    /// Reinterprets the entries with a new shape of the same size.
    pub fn reshape(&self, rows: usize, cols: usize) -> Matrix {
        Matrix::new(rows, cols, self.data.clone())
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut b = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                b.data[i * cols + j] = self.get(r0 + i, c0 + j).clone();
            }
        }
        b
    }

    pub fn vstack(parts: &[Matrix]) -> Matrix {
        let cols = parts.first().map_or(0, |m| m.cols);
        let mut data = Vec::new();
        let mut rows = 0;
        for p in parts {
            assert_eq!(p.cols, cols, "vstack column mismatch");
            rows += p.rows;
            data.extend(p.data.iter().cloned());
        }
        Matrix::new(rows, cols, data)
    }

    pub fn hstack(parts: &[Matrix]) -> Matrix {
        let rows = parts.first().map_or(0, |m| m.rows);
        let cols: usize = parts.iter().map(|p| p.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut c0 = 0;
        for p in parts {
            assert_eq!(p.rows, rows, "hstack row mismatch");
            out.set_block(0, c0, p);
            c0 += p.cols;
        }
        out
    }

    /// Kronecker product: `kron(a, b)(u ⊗ v) = (a u) ⊗ (b v)`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r1, c1) = self.shape();
        let (r2, c2) = other.shape();
        let mut out = Matrix::zeros(r1 * r2, c1 * c2);
        for i in 0..r1 {
            for j in 0..c1 {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.data[(i * r2 + k) * (c1 * c2) + j * c2 + l] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Reduced row-echelon form, rank and pivot columns.
    pub fn rref(&self) -> (Matrix, usize, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let pv = m.get(r, j);
                    if pv.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &f * pv;
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, r, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Basis of the null space, each vector scaled so its first nonzero entry is 1.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (r, rank, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (i, &p) in pivots.iter().enumerate().take(rank) {
                    v[p] = -r.get(i, f).clone();
                }
                normalize_leading(&mut v);
                v
            })
            .collect()
    }

    pub fn invert(&self) -> Result<Matrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let aug = Matrix::hstack(&[self.clone(), Matrix::identity(n)]);
        let (r, _, pivots) = aug.rref();
        let rank = pivots.iter().filter(|&&p| p < n).count();
        if rank < n {
            return Err(LinalgError::NotInvertible { size: n, rank });
        }
        Ok(r.block(0, n, n, n))
    }

    /// One exact solution of `self * x = b`.
    pub fn solve(&self, b: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let aug = Matrix::hstack(&[self.clone(), Matrix::column(b.to_vec())]);
        let (r, rank, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Err(LinalgError::NoSolution);
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate().take(rank) {
            x[p] = r.get(i, self.cols).clone();
        }
        Ok(x)
    }

    /// Applies the matrix to a vector.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    /// First column where `self` and `other` differ, with the residual `self - other` there.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, Vec<Rational>)> {
        assert_eq!(self.shape(), other.shape(), "comparing matrices of different shapes");
        (0..self.cols).find_map(|j| {
            let residual: Vec<Rational> =
                (0..self.rows).map(|i| self.get(i, j) - other.get(i, j)).collect();
            residual.iter().any(|v| !v.is_zero()).then_some((j, residual))
        })
    }
}

fn normalize_leading(v: &mut [Rational]) {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
        for x in v.iter_mut() {
            *x /= &lead;
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        self.get(i, j)
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, rhs.rows,
            "cannot compose {}x{} after {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "adding matrices of different shapes");
        Matrix::new(self.rows, self.cols, self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "subtracting matrices of different shapes");
        Matrix::new(self.rows, self.cols, self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix::new(self.rows, self.cols, self.data.iter().map(|a| -a).collect())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row_vec(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Composite of maps listed in application order: `chain(&[f, g, h]) = h ∘ g ∘ f`.
pub fn chain(maps: &[&Matrix]) -> Matrix {
    let (first, rest) = maps.split_first().expect("chain needs at least one map");
    rest.iter().fold((*first).clone(), |acc, m| *m * &acc)
}

/// Permutation sending tensor index `(i, j)` of `V1 ⊗ V2` to `(j, i)` of `V2 ⊗ V1`.
pub fn swap_map(d1: usize, d2: usize) -> Matrix {
    let mut m = Matrix::zeros(d1 * d2, d1 * d2);
    for i in 0..d1 {
        for j in 0..d2 {
            m.set(j * d1 + i, i * d2 + j, Rational::one());
        }
    }
    m
}

pub fn eye(n: usize) -> Matrix {
    Matrix::identity(n)
}
