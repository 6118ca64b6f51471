//! Exact rational scalars and the dense linear-algebra engine.
//!
//! Every space in the crate (invariant subspaces, derivation spaces, cocycles,
//! coboundaries) is eventually a kernel or an image of a [`Matrix`] over
//! [`Scalar`]. Elimination runs on primitive integer rows (fraction-free), and
//! results are returned as [`Subspace`] values in reduced row-echelon form so
//! that two equal subspaces always compare equal.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Scalar = BigRational;

/// Coordinate vector over [`Scalar`].
pub type Vector = Vec<Scalar>;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `p/q` as a scalar. Panics on `q == 0`.
pub fn frac(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero_vec(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `y += c * x`
pub fn axpy(y: &mut [Scalar], c: &Scalar, x: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += c * xi;
        }
    }
}

pub fn sub_vec(x: &[Scalar], y: &[Scalar]) -> Vector {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn add_vec(x: &[Scalar], y: &[Scalar]) -> Vector {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn scale_vec(c: &Scalar, x: &[Scalar]) -> Vector {
    x.iter().map(|a| c * a).collect()
}

/// Why a scalar literal failed to parse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScalarSyntax {
    Malformed,
    ZeroDenominator,
}

/// Parses `p` or `p/q` with `q > 0`.
pub fn parse_scalar(s: &str) -> std::result::Result<Scalar, ScalarSyntax> {
    let parse_int = |t: &str| -> std::result::Result<BigInt, ScalarSyntax> {
        let t = t.trim();
        if t.is_empty() {
            return Err(ScalarSyntax::Malformed);
        }
        t.parse::<BigInt>().map_err(|_| ScalarSyntax::Malformed)
    };
    match s.split_once('/') {
        None => Ok(Scalar::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let p = parse_int(p)?;
            let q = parse_int(q)?;
            if q.is_zero() {
                Err(ScalarSyntax::ZeroDenominator)
            } else if q.is_negative() {
                Err(ScalarSyntax::Malformed)
            } else {
                Ok(Scalar::new(p, q))
            }
        }
    }
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn fmt_scalar(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

pub fn fmt_vec(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(fmt_scalar).collect();
    format!("({})", parts.join(", "))
}

/// Dense row-major matrix of scalars.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn scalar_identity(n: usize, c: &Scalar) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    /// Builds a matrix from row vectors; all rows must share `cols` entries.
    pub fn from_rows(rows: Vec<Vector>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(Matrix {
            rows: n,
            cols,
            data,
        })
    }

    /// Builds a matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(columns: &[Vector], rows: usize) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: c.len(),
                });
            }
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }

    /// Small-integer convenience constructor, mostly for tests and examples.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            for (j, &x) in r.iter().enumerate() {
                m[(i, j)] = int(x);
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

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = &self[(i, j)];
                if !x.is_zero() {
                    t[(j, i)] = x.clone();
                }
            }
        }
        t
    }

    fn check_same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: add_vec(&self.data, &other.data),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: sub_vec(&self.data, &other.data),
        })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: scale_vec(c, &self.data),
        }
    }

    /// Matrix product; zero entries of the left factor are skipped, which
    /// matters for the very sparse differential matrices.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let mut out = zero_vec(self.rows);
        for (i, o) in out.iter_mut().enumerate() {
            for (a, x) in self.row(i).iter().zip(v) {
                if !a.is_zero() && !x.is_zero() {
                    *o += a * x;
                }
            }
        }
        Ok(out)
    }

    pub fn pow2(&self) -> Result<Matrix> {
        self.mul(self)
    }

    /// Index and value of the entry with the largest absolute value.
    pub fn max_abs_entry(&self) -> Option<((usize, usize), Scalar)> {
        let mut best: Option<((usize, usize), Scalar)> = None;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self[(i, j)].abs();
                if a.is_zero() {
                    continue;
                }
                if best.as_ref().is_none_or(|(_, b)| a > *b) {
                    best = Some(((i, j), a));
                }
            }
        }
        best
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(fmt_scalar).collect())
            .collect();
        let width = cells
            .iter()
            .flatten()
            .map(String::len)
            .max()
            .unwrap_or(1);
        for r in &cells {
            let line: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}

/// A linear subspace of `Q^ambient_dim`, stored as its reduced row-echelon basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: (0..ambient_dim).map(|i| unit_vec(ambient_dim, i)).collect(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// The span of arbitrary vectors (dependent or not).
    pub fn span(ambient_dim: usize, vectors: &[Vector]) -> Result<Self> {
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: v.len(),
                });
            }
        }
        let (basis, pivots) = rref(vectors, ambient_dim);
        Ok(Subspace {
            ambient_dim,
            basis,
            pivots,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Basis vectors as the columns of an `ambient_dim × dim` matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(&self.basis, self.ambient_dim).expect("basis vectors have ambient length")
    }

    /// Residue of `v` after reduction by the echelon basis; zero iff `v` is in the span.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let c = -r[p].clone();
                axpy(&mut r, &c, b);
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: v.len(),
            });
        }
        Ok(is_zero_vec(&self.reduce(v)))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.basis.iter().all(|b| is_zero_vec(&other.reduce(b)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient_dim, &all)
    }

    /// Intersection via the kernel of `[B_self | -B_other]`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        let n = self.ambient_dim;
        let (p, q) = (self.dim(), other.dim());
        let mut m = Matrix::zeros(n, p + q);
        for (j, b) in self.basis.iter().enumerate() {
            for i in 0..n {
                m[(i, j)] = b[i].clone();
            }
        }
        for (j, b) in other.basis.iter().enumerate() {
            for i in 0..n {
                m[(i, p + j)] = -b[i].clone();
            }
        }
        let ker = kernel_basis(&m);
        let vecs: Vec<Vector> = ker
            .basis()
            .iter()
            .map(|c| {
                let mut v = zero_vec(n);
                for (j, b) in self.basis.iter().enumerate() {
                    axpy(&mut v, &c[j], b);
                }
                v
            })
            .collect();
        Subspace::span(n, &vecs)
    }

    /// Image of the subspace under `m` (`m` must have `ambient_dim` columns).
    pub fn image_under(&self, m: &Matrix) -> Result<Subspace> {
        let imgs = self
            .basis
            .iter()
            .map(|b| m.mul_vec(b))
            .collect::<Result<Vec<_>>>()?;
        Subspace::span(m.rows(), &imgs)
    }
}

/// Reduced row-echelon form of the given rows over `ncols` columns.
///
/// Forward and backward elimination are carried out on primitive integer rows
/// (`p·r_i − a·r_p`, then divided by the row content), and only the final
/// normalisation by the pivot returns to rationals. Zero rows are dropped.
/// Returns the nonzero echelon rows and their pivot columns.
pub fn rref(rows: &[Vector], ncols: usize) -> (Vec<Vector>, Vec<usize>) {
    let mut work: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| !is_zero_vec(r))
        .map(|r| primitive_integer_row(r))
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..ncols {
        if rank == work.len() {
            break;
        }
        // smallest pivot magnitude keeps the integer rows short
        let mut best: Option<usize> = None;
        for (r, row) in work.iter().enumerate().skip(rank) {
            if !row[c].is_zero() && best.is_none_or(|b| row[c].bits() < work[b][c].bits()) {
                best = Some(r);
            }
        }
        let Some(p) = best else { continue };
        work.swap(rank, p);
        let pivot_row = std::mem::take(&mut work[rank]);
        let support: Vec<usize> = (c..ncols).filter(|&j| !pivot_row[j].is_zero()).collect();
        let pv = pivot_row[c].clone();
        for (r, row) in work.iter_mut().enumerate() {
            if r == rank || row.is_empty() || row[c].is_zero() {
                continue;
            }
            let g = pv.gcd(&row[c]);
            let s = &pv / &g;
            let t = &row[c] / &g;
            if !s.is_one() {
                for x in row.iter_mut() {
                    if !x.is_zero() {
                        *x *= &s;
                    }
                }
            }
            for &j in &support {
                row[j] -= &t * &pivot_row[j];
            }
            make_primitive(row);
        }
        work[rank] = pivot_row;
        pivots.push(c);
        rank += 1;
    }
    work.truncate(rank);
    let basis = work
        .into_iter()
        .zip(&pivots)
        .map(|(row, &c)| {
            let pv = row[c].clone();
            row.into_iter()
                .map(|x| Scalar::new(x, pv.clone()))
                .collect()
        })
        .collect();
    (basis, pivots)
}

fn primitive_integer_row(r: &[Scalar]) -> Vec<BigInt> {
    let l = r
        .iter()
        .filter(|x| !x.is_zero())
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut row: Vec<BigInt> = r.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    make_primitive(&mut row);
    row
}

fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        if !x.is_zero() {
            *x /= &g;
        }
    }
}

pub fn rank(m: &Matrix) -> usize {
    rref(&m.row_vectors(), m.cols()).0.len()
}

/// Null space of `m` in canonical echelon form.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let n = m.cols();
    let (r, pivots) = rref(&m.row_vectors(), n);
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vecs: Vec<Vector> = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = unit_vec(n, f);
            for (row, &p) in r.iter().zip(&pivots) {
                if !row[f].is_zero() {
                    v[p] = -row[f].clone();
                }
            }
            v
        })
        .collect();
    Subspace::span(n, &vecs).expect("kernel vectors have column length")
}

/// Column space of `m` in canonical echelon form.
pub fn image_basis(m: &Matrix) -> Subspace {
    let (basis, pivots) = rref(&m.transpose().row_vectors(), m.rows());
    Subspace {
        ambient_dim: m.rows(),
        basis,
        pivots,
    }
}

/// One solution of `m·x = rhs`, or `None` when the system is inconsistent.
pub fn solve(m: &Matrix, rhs: &[Scalar]) -> Result<Option<Vector>> {
    if rhs.len() != m.rows() {
        return Err(Error::DimensionMismatch {
            expected: m.rows(),
            found: rhs.len(),
        });
    }
    let n = m.cols();
    let aug: Vec<Vector> = (0..m.rows())
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.push(rhs[i].clone());
            r
        })
        .collect();
    let (r, pivots) = rref(&aug, n + 1);
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = zero_vec(n);
    for (row, &p) in r.iter().zip(&pivots) {
        x[p] = row[n].clone();
    }
    Ok(Some(x))
}

/// Inverse of a square matrix, or `None` when it is singular.
pub fn inverse(m: &Matrix) -> Result<Option<Matrix>> {
    if !m.is_square() {
        return Err(Error::ShapeMismatch {
            left: (m.rows(), m.rows()),
            right: (m.rows(), m.cols()),
        });
    }
    let n = m.rows();
    let aug: Vec<Vector> = (0..n)
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.extend(unit_vec(n, i));
            r
        })
        .collect();
    let (r, pivots) = rref(&aug, 2 * n);
    if pivots.len() < n || (n > 0 && pivots[n - 1] >= n) {
        return Ok(None);
    }
    let rows: Vec<Vector> = r.into_iter().map(|row| row[n..].to_vec()).collect();
    Matrix::from_rows(rows, n).map(Some)
}

pub fn member(s: &Subspace, v: &[Scalar]) -> Result<bool> {
    s.contains(v)
}

/// `dim z − dim b` and coset representatives of `z / b`.
///
/// Representatives are chosen greedily from the canonical basis of `z`, so
/// they are deterministic and independent modulo `b`.
pub fn quotient_dim_and_reps(z: &Subspace, b: &Subspace) -> Result<(usize, Vec<Vector>)> {
    if z.ambient_dim() != b.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: z.ambient_dim(),
            found: b.ambient_dim(),
        });
    }
    for (idx, v) in b.basis().iter().enumerate() {
        if !z.contains(v)? {
            return Err(Error::SubspaceNotContained { index: idx });
        }
    }
    let mut acc = b.clone();
    let mut reps = Vec::new();
    for v in z.basis() {
        if !acc.contains(v)? {
            reps.push(v.clone());
            acc = acc.sum(&Subspace::span(z.ambient_dim(), std::slice::from_ref(v))?)?;
        }
    }
    debug_assert_eq!(reps.len(), z.dim() - b.dim());
    Ok((z.dim() - b.dim(), reps))
}
