//! The zigzag cochain complex of a representation `(V, ρ, μ)`.
//!
//! `C^n = Hom(A^{⊗n}, V)` is coordinatised by multi-index `(i₁,…,i_n)` major
//! and `V`-coordinate minor: the entry for `f(e_{i₁},…,e_{i_n})_v` sits at
//! `((i₁·d + i₂)·d + … + i_n)·vdim + v`. For `n = 1` this is the column-major
//! flattening of a `vdim × d` matrix, so `C¹` and the derivation spaces share
//! coordinates.
//!
//! `d^n: C^n → C^{n+1}` is
//!
//! ```text
//! d^n f(x₁,…,x_{n+1}) = Σ_{i≤n} ρ(x_i) f(x₁,…,x̂_i,…,x_{n+1})
//!                     + Σ_{i≤n} μ(x_{n+1}) f(x₁,…,x̂_i,…,x_n, x_i)
//!                     + Σ_{i≤n} f(x₁,…,x̂_i,…,x_n, x_i·x_{n+1})
//!                     + Σ_{i<j≤n} f(x_i∗x_j, x₁,…,x̂_i,…,x̂_j,…,x_{n+1})
//! ```
//!
//! and `δ^n: A^n → C^{n+1}` is the same expression with the last two sums
//! negated. In degree zero both are `v ↦ (x ↦ ρ(x)v + μ(x)v)` on
//! `C⁰ = A⁰ = V^{r.Aas}`.

use std::collections::{BTreeMap, HashSet};

use num_traits::{One, Zero};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::ratlinalg::{
    image_basis, kernel_basis, quotient_dim_and_reps, zero_vec, Matrix, Scalar, Subspace, Vector,
};
use crate::representation::Representation;

/// An element of `C^n(A, V)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    alg_dim: usize,
    vdim: usize,
    values: Vector,
}

/// `(alg_dim)^n · vdim`, or `None` on overflow.
pub fn cochain_dim(alg_dim: usize, vdim: usize, n: usize) -> Option<usize> {
    let mut total = vdim;
    for _ in 0..n {
        total = total.checked_mul(alg_dim)?;
    }
    Some(total)
}

fn encode(args: &[usize], v: usize, d: usize, vdim: usize) -> usize {
    args.iter().fold(0, |acc, &i| acc * d + i) * vdim + v
}

fn decode(mut idx: usize, n: usize, d: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for slot in out.iter_mut().rev() {
        *slot = idx % d;
        idx /= d;
    }
    out
}

impl Cochain {
    pub fn new(degree: usize, alg_dim: usize, vdim: usize, values: Vector) -> Result<Self> {
        let expected = cochain_dim(alg_dim, vdim, degree).ok_or(Error::DimensionMismatch {
            expected: usize::MAX,
            found: values.len(),
        })?;
        if values.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: values.len(),
            });
        }
        Ok(Cochain {
            degree,
            alg_dim,
            vdim,
            values,
        })
    }

    pub fn zero(degree: usize, alg_dim: usize, vdim: usize) -> Self {
        let n = cochain_dim(alg_dim, vdim, degree).expect("cochain space fits in memory");
        Cochain {
            degree,
            alg_dim,
            vdim,
            values: zero_vec(n),
        }
    }

    /// The one-cochain of a `vdim × dim` matrix (column `j` is `f(e_j)`).
    pub fn from_map(m: &Matrix) -> Self {
        Cochain {
            degree: 1,
            alg_dim: m.cols(),
            vdim: m.rows(),
            values: m.columns().into_iter().flatten().collect(),
        }
    }

    /// Inverse of [`Cochain::from_map`]; degree must be 1.
    pub fn to_map(&self) -> Result<Matrix> {
        if self.degree != 1 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: self.degree,
            });
        }
        if self.vdim == 0 {
            return Ok(Matrix::zeros(0, self.alg_dim));
        }
        let cols: Vec<Vector> = self.values.chunks(self.vdim).map(<[Scalar]>::to_vec).collect();
        Matrix::from_columns(&cols, self.vdim)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn alg_dim(&self) -> usize {
        self.alg_dim
    }

    pub fn vdim(&self) -> usize {
        self.vdim
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn into_values(self) -> Vector {
        self.values
    }

    fn offset(&self, args: &[usize]) -> Result<usize> {
        if args.len() != self.degree {
            return Err(Error::DimensionMismatch {
                expected: self.degree,
                found: args.len(),
            });
        }
        if let Some(&bad) = args.iter().find(|&&i| i >= self.alg_dim) {
            return Err(Error::DimensionMismatch {
                expected: self.alg_dim,
                found: bad,
            });
        }
        Ok(encode(args, 0, self.alg_dim, self.vdim))
    }

    /// `f(e_{args[0]}, …)` as a vector of `V` (0-based indices).
    pub fn get(&self, args: &[usize]) -> Result<&[Scalar]> {
        let o = self.offset(args)?;
        Ok(&self.values[o..o + self.vdim])
    }

    pub fn set(&mut self, args: &[usize], value: &[Scalar]) -> Result<()> {
        if value.len() != self.vdim {
            return Err(Error::DimensionMismatch {
                expected: self.vdim,
                found: value.len(),
            });
        }
        let o = self.offset(args)?;
        self.values[o..o + self.vdim].clone_from_slice(value);
        Ok(())
    }

    /// Multilinear evaluation on arbitrary coordinate vectors.
    pub fn eval(&self, xs: &[&[Scalar]]) -> Result<Vector> {
        if xs.len() != self.degree {
            return Err(Error::DimensionMismatch {
                expected: self.degree,
                found: xs.len(),
            });
        }
        let mut out = zero_vec(self.vdim);
        let total = cochain_dim(self.alg_dim, 1, self.degree).unwrap_or(0);
        for t in 0..total {
            let args = decode(t, self.degree, self.alg_dim);
            let mut coef = Scalar::one();
            for (x, &i) in xs.iter().zip(&args) {
                if x[i].is_zero() {
                    coef = Scalar::zero();
                    break;
                }
                coef *= &x[i];
            }
            if coef.is_zero() {
                continue;
            }
            let base = t * self.vdim;
            for (o, v) in out.iter_mut().zip(&self.values[base..base + self.vdim]) {
                *o += &coef * v;
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }
}

/// Row-major sparse matrix used while assembling differentials.
#[derive(Clone, Debug)]
struct Sparse {
    cols: usize,
    rows: Vec<BTreeMap<usize, Scalar>>,
}

impl Sparse {
    fn add(&mut self, row: usize, col: usize, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.rows[row].entry(col).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            self.rows[row].remove(&col);
        }
    }

    fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.rows.len(), self.cols);
        for (r, row) in self.rows.iter().enumerate() {
            for (&c, x) in row {
                m[(r, c)] = x.clone();
            }
        }
        m
    }

    fn mul_vec(&self, v: &[Scalar]) -> Vector {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .filter(|(&c, _)| !v[c].is_zero())
                    .fold(Scalar::zero(), |acc, (&c, x)| acc + x * &v[c])
            })
            .collect()
    }

    fn mul_dense(&self, m: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows.len(), m.cols());
        for (r, row) in self.rows.iter().enumerate() {
            for (&c, x) in row {
                for k in 0..m.cols() {
                    let y = &m[(c, k)];
                    if !y.is_zero() {
                        out[(r, k)] += x * y;
                    }
                }
            }
        }
        out
    }

    /// Kernel, computed from the distinct nonzero rows only.
    fn kernel(&self) -> Subspace {
        let mut seen: HashSet<&BTreeMap<usize, Scalar>> = HashSet::new();
        let mut dense = Vec::new();
        for row in &self.rows {
            if row.is_empty() || !seen.insert(row) {
                continue;
            }
            let mut v = zero_vec(self.cols);
            for (&c, x) in row {
                v[c] = x.clone();
            }
            dense.push(v);
        }
        kernel_basis(&Matrix::from_rows(dense, self.cols).expect("rows have `cols` entries"))
    }
}

/// Nonzero structure constants per basis pair, for `·` and for `∗`.
struct Tables {
    prod: Vec<Vec<(usize, Scalar)>>,
    anti: Vec<Vec<(usize, Scalar)>>,
}

impl Tables {
    fn new(a: &Algebra) -> Self {
        let d = a.dim();
        let collect = |v: Vector| -> Vec<(usize, Scalar)> {
            v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
        };
        let mut prod = Vec::with_capacity(d * d);
        let mut anti = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                prod.push(collect(a.basis_product(i, j).to_vec()));
                anti.push(collect(a.basis_anticommutator(i, j)));
            }
        }
        Tables { prod, anti }
    }
}

fn without(xs: &[usize], skip: &[usize]) -> Vec<usize> {
    xs.iter()
        .enumerate()
        .filter(|(k, _)| !skip.contains(k))
        .map(|(_, &x)| x)
        .collect()
}

/// `v ↦ (x ↦ ρ(x)v + μ(x)v)` as a `(d·vdim) × vdim` matrix on all of `V`.
fn degree_zero_operator(r: &Representation) -> Matrix {
    let (d, vd) = (r.alg().dim(), r.vdim());
    let mut m = Matrix::zeros(d * vd, vd);
    for i in 0..d {
        for o in 0..vd {
            for c in 0..vd {
                m[(i * vd + o, c)] = &r.rho()[i][(o, c)] + &r.mu()[i][(o, c)];
            }
        }
    }
    m
}

/// Assembles `d^n` (`sign = +1`) or `δ^n` (`sign = −1`) on all of `C^n`, `n ≥ 1`.
fn operator(r: &Representation, n: usize, sign: &Scalar) -> Sparse {
    assert!(n >= 1);
    let (d, vd) = (r.alg().dim(), r.vdim());
    let tables = Tables::new(r.alg());
    let n_out = cochain_dim(d, 1, n + 1).expect("cochain space fits in memory");
    let cols = cochain_dim(d, vd, n).expect("cochain space fits in memory");
    let mut s = Sparse {
        cols,
        rows: vec![BTreeMap::new(); n_out * vd],
    };
    for t in 0..n_out {
        let x = decode(t, n + 1, d);
        let last = x[n];
        for i in 0..n {
            let y1 = without(&x, &[i]);
            let mut y2 = without(&x[..n], &[i]);
            y2.push(x[i]);
            for o in 0..vd {
                let row = t * vd + o;
                for c in 0..vd {
                    s.add(row, encode(&y1, c, d, vd), r.rho()[x[i]][(o, c)].clone());
                    s.add(row, encode(&y2, c, d, vd), r.mu()[last][(o, c)].clone());
                }
            }
            let mut y3 = without(&x[..n], &[i]);
            y3.push(0);
            for (k, c) in &tables.prod[x[i] * d + last] {
                *y3.last_mut().expect("nonempty") = *k;
                for o in 0..vd {
                    s.add(t * vd + o, encode(&y3, o, d, vd), sign * c);
                }
            }
            for j in i + 1..n {
                let mut y4 = vec![0];
                y4.extend(without(&x, &[i, j]));
                for (k, c) in &tables.anti[x[i] * d + x[j]] {
                    y4[0] = *k;
                    for o in 0..vd {
                        s.add(t * vd + o, encode(&y4, o, d, vd), sign * c);
                    }
                }
            }
        }
    }
    s
}

/// `C⁰ = A⁰ = V^{r.Aas}`.
pub fn c0_space(r: &Representation) -> Subspace {
    r.invariant_subspaces().r_aas
}

/// Matrix of `d^n`. For `n = 0` the domain is all of `V` (restrict to
/// [`c0_space`] to obtain `d⁰` proper); for `n ≥ 1` it is `C^n`.
pub fn differential_matrix(r: &Representation, n: usize) -> Matrix {
    if n == 0 {
        degree_zero_operator(r)
    } else {
        operator(r, n, &Scalar::one()).to_dense()
    }
}

/// The formula of `δ^n` applied to an arbitrary `n`-cochain (for `n = 0`, any `v ∈ V`).
pub fn apply_delta(r: &Representation, f: &Cochain) -> Result<Cochain> {
    apply(r, f, &-Scalar::one())
}

/// `d^n f`.
pub fn apply_differential(r: &Representation, f: &Cochain) -> Result<Cochain> {
    apply(r, f, &Scalar::one())
}

fn apply(r: &Representation, f: &Cochain, sign: &Scalar) -> Result<Cochain> {
    if f.alg_dim != r.alg().dim() || f.vdim != r.vdim() {
        return Err(Error::DimensionMismatch {
            expected: r.alg().dim() * r.vdim(),
            found: f.alg_dim * f.vdim,
        });
    }
    let values = if f.degree == 0 {
        degree_zero_operator(r).mul_vec(&f.values)?
    } else {
        operator(r, f.degree, sign).mul_vec(&f.values)
    };
    Cochain::new(f.degree + 1, f.alg_dim, f.vdim, values)
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// `A^n ⊆ C^n`: `A⁰ = C⁰`, `A¹ = C¹`, and for `n ≥ 2` the cochains that are
/// skew-symmetric in their first `n − 1` arguments and satisfy
/// `↺_{(u,v,w)} f(u∗v, y₁,…,y_{n−2}, w·z) = 0`.
pub fn a_space(r: &Representation, n: usize) -> Subspace {
    let (d, vd) = (r.alg().dim(), r.vdim());
    match n {
        0 => return c0_space(r),
        1 => return Subspace::full(d * vd),
        _ => {}
    }
    let cols = cochain_dim(d, vd, n).expect("cochain space fits in memory");
    let tuples = cochain_dim(d, 1, n).expect("fits");
    let mut s = Sparse { cols, rows: Vec::new() };
    let mut push = |entries: BTreeMap<usize, Scalar>| {
        if !entries.is_empty() {
            s.rows.push(entries);
        }
    };
    for p in 0..n.saturating_sub(2) {
        for t in 0..tuples {
            let y = decode(t, n, d);
            if y[p] > y[p + 1] {
                continue;
            }
            let mut sw = y.clone();
            sw.swap(p, p + 1);
            for v in 0..vd {
                let mut row = BTreeMap::new();
                let (a, b) = (encode(&y, v, d, vd), encode(&sw, v, d, vd));
                *row.entry(a).or_insert_with(Scalar::zero) += Scalar::one();
                *row.entry(b).or_insert_with(Scalar::zero) += Scalar::one();
                push(row);
            }
        }
    }
    let tables = Tables::new(r.alg());
    let middles = cochain_dim(d, 1, n - 2).expect("fits");
    for u in 0..d {
        for v in 0..d {
            for w in 0..d {
                for z in 0..d {
                    for m in 0..middles {
                        let ys = decode(m, n - 2, d);
                        for o in 0..vd {
                            let mut row: BTreeMap<usize, Scalar> = BTreeMap::new();
                            for (a, b, c) in [(u, v, w), (v, w, u), (w, u, v)] {
                                for (k1, c1) in &tables.anti[a * d + b] {
                                    for (k2, c2) in &tables.prod[c * d + z] {
                                        let mut args = vec![*k1];
                                        args.extend(&ys);
                                        args.push(*k2);
                                        *row.entry(encode(&args, o, d, vd)).or_insert_with(Scalar::zero) += c1 * c2;
                                    }
                                }
                            }
                            row.retain(|_, x| !x.is_zero());
                            push(row);
                        }
                    }
                }
            }
        }
    }
    let space = s.kernel();
    let bound = binomial(d, n - 1) * d * vd;
    assert!(
        n < 3 || space.dim() <= bound,
        "skew-symmetric cochains exceed their dimension bound"
    );
    space
}

/// Matrix of `δ^n: A^n → C^{n+1}` with the domain in the canonical basis of
/// [`a_space`].
pub fn delta_matrix(r: &Representation, n: usize) -> Matrix {
    let basis = a_space(r, n).basis_matrix();
    if n == 0 {
        degree_zero_operator(r).mul(&basis).expect("shapes agree")
    } else {
        operator(r, n, &-Scalar::one()).mul_dense(&basis)
    }
}

/// Result of multiplying `d^n` by `δ^{n−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZigzagReport {
    pub degree: usize,
    pub holds: bool,
    /// `(row, col, value)` of a largest-magnitude entry of the product.
    pub max_defect: Option<(usize, usize, Scalar)>,
}

/// Checks `d^n ∘ δ^{n−1} = 0` exactly; `n ≥ 1`.
pub fn verify_zigzag(r: &Representation, n: usize) -> ZigzagReport {
    assert!(n >= 1, "the zigzag identity starts in degree 1");
    let delta = delta_matrix(r, n - 1);
    let prod = operator(r, n, &Scalar::one()).mul_dense(&delta);
    let mut max: Option<(usize, usize, Scalar)> = None;
    for i in 0..prod.rows() {
        for j in 0..prod.cols() {
            let x = &prod[(i, j)];
            if !x.is_zero() && max.as_ref().is_none_or(|(_, _, m)| num_traits::Signed::abs(x) > num_traits::Signed::abs(m)) {
                max = Some((i, j, x.clone()));
            }
        }
    }
    ZigzagReport {
        degree: n,
        holds: max.is_none(),
        max_defect: max,
    }
}

/// One degree of the complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexSlice {
    pub degree: usize,
    pub a_basis: Subspace,
    pub d_matrix: Matrix,
    pub delta_matrix: Matrix,
}

pub fn complex_slice(r: &Representation, k: usize) -> ComplexSlice {
    ComplexSlice {
        degree: k,
        a_basis: a_space(r, k),
        d_matrix: differential_matrix(r, k),
        delta_matrix: delta_matrix(r, k),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyReport {
    pub degree: usize,
    pub dim_z: usize,
    pub dim_b: usize,
    pub dim_h: usize,
    /// Coset representatives of a basis of `H^k`.
    pub representatives: Vec<Cochain>,
    pub z: Subspace,
    pub b: Subspace,
}

/// `H^k = Z^k / B^k` with `Z^k = ker d^k` (inside `C⁰` when `k = 0`),
/// `B^k = Im δ^{k−1}` and `B⁰ = 0`.
pub fn cohomology(r: &Representation, k: usize) -> Result<CohomologyReport> {
    let (d, vd) = (r.alg().dim(), r.vdim());
    let (z, b) = if k == 0 {
        let ker = kernel_basis(&degree_zero_operator(r));
        (ker.intersection(&c0_space(r))?, Subspace::zero(vd))
    } else {
        let z = operator(r, k, &Scalar::one()).kernel();
        let b = image_basis(&delta_matrix(r, k - 1));
        (z, b)
    };
    let (dim_h, reps) = quotient_dim_and_reps(&z, &b)?;
    let representatives = reps
        .into_iter()
        .map(|v| Cochain::new(k, d, vd, v))
        .collect::<Result<Vec<_>>>()?;
    Ok(CohomologyReport {
        degree: k,
        dim_z: z.dim(),
        dim_b: b.dim(),
        dim_h,
        representatives,
        z,
        b,
    })
}

/// `H¹(A, K)` for the trivial one-dimensional representation; its dimension
/// equals `dim A − dim A²`.
pub fn scalar_cohomology_h1(a: &Algebra) -> Result<CohomologyReport> {
    let rep = cohomology(&Representation::scalar(a), 1)?;
    let expected = a.dim() - a.square_span().dim();
    if rep.dim_h != expected {
        return Err(Error::ContractViolated(format!(
            "dim H1(A, K) = {} but dim A - dim A^2 = {expected}",
            rep.dim_h
        )));
    }
    Ok(rep)
}
