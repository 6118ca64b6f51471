//! Brute-force reference computations. Nothing here calls into the library:
//! parsing, products, actions and elimination are all re-done naively.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

fn parse_q(tok: &str) -> Q {
    match tok.split_once('/') {
        Some((p, d)) => Q::new(p.parse().unwrap(), d.parse().unwrap()),
        None => Q::from_integer(tok.parse().unwrap()),
    }
}

fn body(text: &str) -> Vec<Vec<String>> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        if line == "end" {
            break;
        }
        out.push(line.split_whitespace().map(str::to_string).collect());
    }
    out
}

/// `c[i][j]` is the coordinate vector of `e_i·e_j`.
#[derive(Clone, Debug)]
pub struct OAlg {
    pub d: usize,
    pub c: Vec<Vec<Vec<Q>>>,
}

impl OAlg {
    pub fn new(d: usize) -> Self {
        OAlg {
            d,
            c: vec![vec![vec![Q::zero(); d]; d]; d],
        }
    }

    pub fn parse(text: &str) -> Self {
        let lines = body(text);
        let d: usize = lines[1][1].parse().unwrap();
        let mut a = OAlg::new(d);
        for l in &lines[2..] {
            let (i, j, k): (usize, usize, usize) = (l[0].parse().unwrap(), l[1].parse().unwrap(), l[2].parse().unwrap());
            a.c[i - 1][j - 1][k - 1] = parse_q(&l[3]);
        }
        a
    }

    pub fn mul(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.d];
        for i in 0..self.d {
            for j in 0..self.d {
                let s = &x[i] * &y[j];
                if s.is_zero() {
                    continue;
                }
                for k in 0..self.d {
                    out[k] += &s * &self.c[i][j][k];
                }
            }
        }
        out
    }

    pub fn jmul(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        add(&self.mul(x, y), &self.mul(y, x))
    }

    pub fn basis(&self, i: usize) -> Vec<Q> {
        unit(self.d, i)
    }

    /// Rank of the span of all products `e_i·e_j`.
    pub fn square_rank(&self) -> usize {
        let mut rows = Vec::new();
        for i in 0..self.d {
            for j in 0..self.d {
                rows.push(self.c[i][j].clone());
            }
        }
        rank(rows)
    }

    pub fn is_left_prejj(&self) -> bool {
        for x in 0..self.d {
            for y in 0..self.d {
                for z in 0..self.d {
                    let (ex, ey, ez) = (self.basis(x), self.basis(y), self.basis(z));
                    let s = [
                        self.mul(&self.mul(&ex, &ey), &ez),
                        self.mul(&ex, &self.mul(&ey, &ez)),
                        self.mul(&self.mul(&ey, &ex), &ez),
                        self.mul(&ey, &self.mul(&ex, &ez)),
                    ];
                    if s.iter().fold(vec![Q::zero(); self.d], |a, b| add(&a, b)).iter().any(|v| !v.is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Matrices as row vectors: `m[r][c]`.
pub type OMat = Vec<Vec<Q>>;

#[derive(Clone, Debug)]
pub struct ORep {
    pub m: usize,
    pub rho: Vec<OMat>,
    pub mu: Vec<OMat>,
}

impl ORep {
    pub fn parse(text: &str) -> Self {
        let lines = body(text);
        let d: usize = lines[1][1].parse().unwrap();
        let m: usize = lines[2][1].parse().unwrap();
        let mut rho = vec![vec![vec![Q::zero(); m]; m]; d];
        let mut mu = rho.clone();
        for l in &lines[3..] {
            let i: usize = l[1].parse().unwrap();
            let r: usize = l[2].parse().unwrap();
            let c: usize = l[3].parse().unwrap();
            let target = if l[0] == "rho" { &mut rho } else { &mut mu };
            target[i - 1][r - 1][c - 1] = parse_q(&l[4]);
        }
        ORep { m, rho, mu }
    }

    pub fn scalar(d: usize) -> Self {
        ORep {
            m: 1,
            rho: vec![vec![vec![Q::zero()]]; d],
            mu: vec![vec![vec![Q::zero()]]; d],
        }
    }

    pub fn regular(a: &OAlg) -> Self {
        let d = a.d;
        let mut rho = vec![vec![vec![Q::zero(); d]; d]; d];
        let mut mu = rho.clone();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    rho[i][k][j] = a.c[i][j][k].clone();
                    mu[i][k][j] = a.c[j][i][k].clone();
                }
            }
        }
        ORep { m: d, rho, mu }
    }

    fn combo(family: &[OMat], x: &[Q], m: usize) -> OMat {
        let mut out = vec![vec![Q::zero(); m]; m];
        for (k, xk) in x.iter().enumerate() {
            if xk.is_zero() {
                continue;
            }
            for r in 0..m {
                for c in 0..m {
                    out[r][c] += xk * &family[k][r][c];
                }
            }
        }
        out
    }

    pub fn rho_at(&self, x: &[Q], v: &[Q]) -> Vec<Q> {
        apply(&Self::combo(&self.rho, x, self.m), v)
    }

    pub fn mu_at(&self, x: &[Q], v: &[Q]) -> Vec<Q> {
        apply(&Self::combo(&self.mu, x, self.m), v)
    }
}

pub fn unit(n: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[i] = Q::one();
    v
}

pub fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(c: &Q, a: &[Q]) -> Vec<Q> {
    a.iter().map(|x| c * x).collect()
}

pub fn apply(m: &OMat, v: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(Q::zero(), |acc, (a, b)| acc + a * b))
        .collect()
}

/// Plain Gauss-Jordan over the rationals; returns the reduced nonzero rows
/// and their pivot columns.
pub fn reduce(mut rows: Vec<Vec<Q>>) -> (Vec<Vec<Q>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = Q::one() / &rows[r][c];
        rows[r] = scale(&inv, &rows[r]);
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let sub = scale(&f, &rows[r]);
                rows[i] = rows[i].iter().zip(&sub).map(|(a, b)| a - b).collect();
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank(rows: Vec<Vec<Q>>) -> usize {
    reduce(rows).0.len()
}

/// Kernel of the matrix whose rows are `rows`, as a list of vectors.
pub fn nullspace(rows: Vec<Vec<Q>>, ncols: usize) -> Vec<Vec<Q>> {
    let (red, pivots) = if rows.is_empty() { (vec![], vec![]) } else { reduce(rows) };
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Q::zero(); ncols];
        v[free] = Q::one();
        for (row, &p) in red.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        out.push(v);
    }
    out
}

/// All tuples in `{0..d}^n`, lexicographic.
pub fn tuples(d: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for t in &out {
            for i in 0..d {
                let mut u = t.clone();
                u.push(i);
                next.push(u);
            }
        }
        out = next;
    }
    out
}

/// An `n`-cochain as a table from index tuples to vectors of `V`.
#[derive(Clone, Debug)]
pub struct OCochain {
    pub n: usize,
    pub table: std::collections::HashMap<Vec<usize>, Vec<Q>>,
    pub m: usize,
}

impl OCochain {
    /// Multilinear evaluation.
    pub fn eval(&self, xs: &[Vec<Q>]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.m];
        for (t, val) in &self.table {
            let mut coef = Q::one();
            for (x, &i) in xs.iter().zip(t) {
                coef *= &x[i];
                if coef.is_zero() {
                    break;
                }
            }
            if !coef.is_zero() {
                out = add(&out, &scale(&coef, val));
            }
        }
        out
    }
}

/// Standard basis of `C^n`, in the oracle's own ordering.
pub fn cochain_basis(d: usize, m: usize, n: usize) -> Vec<OCochain> {
    let mut out = Vec::new();
    for t in tuples(d, n) {
        for v in 0..m {
            let mut table = std::collections::HashMap::new();
            table.insert(t.clone(), unit(m, v));
            out.push(OCochain { n, table, m });
        }
    }
    out
}

/// `(d f)(x₁,…,x_{n+1})` with `sign = 1` and `(δ f)` with `sign = −1`, by
/// direct evaluation of the defining sums.
pub fn coboundary_at(a: &OAlg, r: &ORep, f: &OCochain, xs: &[Vec<Q>], sign: i64) -> Vec<Q> {
    let n = f.n;
    let s = q(sign);
    if n == 0 {
        let v = f.eval(&[]);
        return add(&r.rho_at(&xs[0], &v), &r.mu_at(&xs[0], &v));
    }
    let last = &xs[n];
    let mut out = vec![Q::zero(); r.m];
    for i in 0..n {
        let rest: Vec<Vec<Q>> = xs.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, x)| x.clone()).collect();
        out = add(&out, &r.rho_at(&xs[i], &f.eval(&rest)));

        let mut moved: Vec<Vec<Q>> = xs[..n].iter().enumerate().filter(|(k, _)| *k != i).map(|(_, x)| x.clone()).collect();
        moved.push(xs[i].clone());
        out = add(&out, &r.mu_at(last, &f.eval(&moved)));

        let mut prod: Vec<Vec<Q>> = xs[..n].iter().enumerate().filter(|(k, _)| *k != i).map(|(_, x)| x.clone()).collect();
        prod.push(a.mul(&xs[i], last));
        out = add(&out, &scale(&s, &f.eval(&prod)));

        for j in i + 1..n {
            let mut args = vec![a.jmul(&xs[i], &xs[j])];
            args.extend(xs.iter().enumerate().filter(|(k, _)| *k != i && *k != j).map(|(_, x)| x.clone()));
            out = add(&out, &scale(&s, &f.eval(&args)));
        }
    }
    out
}

/// The full coboundary of `f` as one long vector over all basis inputs.
pub fn coboundary(a: &OAlg, r: &ORep, f: &OCochain, sign: i64) -> Vec<Q> {
    let mut out = Vec::new();
    for t in tuples(a.d, f.n + 1) {
        let xs: Vec<Vec<Q>> = t.iter().map(|&i| a.basis(i)).collect();
        out.extend(coboundary_at(a, r, f, &xs, sign));
    }
    out
}

/// `{v : ρ(x·y)v + ρ(x)ρ(y)v = 0}` as a list of basis vectors.
pub fn c0(a: &OAlg, r: &ORep) -> Vec<Vec<Q>> {
    let mut rows = Vec::new();
    for i in 0..a.d {
        for j in 0..a.d {
            let xy = a.mul(&a.basis(i), &a.basis(j));
            for c in 0..r.m {
                let e = unit(r.m, c);
                let col = add(&r.rho_at(&xy, &e), &r.rho_at(&a.basis(i), &r.rho_at(&a.basis(j), &e)));
                if rows.is_empty() {
                    rows = vec![vec![Q::zero(); r.m]; a.d * a.d * r.m];
                }
                for (o, val) in col.into_iter().enumerate() {
                    rows[(i * a.d + j) * r.m + o][c] = val;
                }
            }
        }
    }
    nullspace(rows, r.m)
}

fn from_vector(v: &[Q], n: usize, d: usize, m: usize) -> OCochain {
    let mut table = std::collections::HashMap::new();
    for (k, t) in tuples(d, n).into_iter().enumerate() {
        table.insert(t, v[k * m..(k + 1) * m].to_vec());
    }
    OCochain { n, table, m }
}

/// Columns of the linear map `f ↦ coboundary(f)` on `domain`, returned as rows
/// of the transpose (one row per domain vector).
fn images(a: &OAlg, r: &ORep, domain: &[OCochain], sign: i64) -> Vec<Vec<Q>> {
    domain.iter().map(|f| coboundary(a, r, f, sign)).collect()
}

/// `(dim Z^k, dim B^k, dim H^k)`.
pub fn cohomology_dims(a: &OAlg, r: &ORep, k: usize) -> (usize, usize, usize) {
    let (d, m) = (a.d, r.m);
    let z = if k == 0 {
        let dom: Vec<OCochain> = c0(a, r).iter().map(|v| from_vector(v, 0, d, m)).collect();
        dom.len() - rank_or_zero(images(a, r, &dom, 1))
    } else {
        let dom = cochain_basis(d, m, k);
        dom.len() - rank_or_zero(images(a, r, &dom, 1))
    };
    let b = match k {
        0 => 0,
        1 => {
            let dom: Vec<OCochain> = c0(a, r).iter().map(|v| from_vector(v, 0, d, m)).collect();
            rank_or_zero(images(a, r, &dom, -1))
        }
        2 => rank_or_zero(images(a, r, &cochain_basis(d, m, 1), -1)),
        _ => panic!("oracle covers degrees up to 2"),
    };
    (z, b, z - b)
}

fn rank_or_zero(rows: Vec<Vec<Q>>) -> usize {
    if rows.is_empty() {
        0
    } else {
        rank(rows)
    }
}

/// Dimension of `{f ∈ C²: ↺_{(u,v,w)} f(u∗v, w·z) = 0}`.
pub fn a2_dim(a: &OAlg, r: &ORep) -> usize {
    let (d, m) = (a.d, r.m);
    let basis = cochain_basis(d, m, 2);
    let mut cols: Vec<Vec<Q>> = Vec::new();
    for f in &basis {
        let mut col = Vec::new();
        for t in tuples(d, 4) {
            let (u, v, w, z) = (a.basis(t[0]), a.basis(t[1]), a.basis(t[2]), a.basis(t[3]));
            let mut s = vec![Q::zero(); m];
            for (x, y, c) in [(&u, &v, &w), (&v, &w, &u), (&w, &u, &v)] {
                s = add(&s, &f.eval(&[a.jmul(x, y), a.mul(c, &z)]));
            }
            col.extend(s);
        }
        cols.push(col);
    }
    basis.len() - rank_or_zero(cols)
}

/// Dimension of `{D : D(x·y) = s·(μ(y)D(x) + ρ(x)D(y))}`.
pub fn derivation_dim(a: &OAlg, r: &ORep, s: i64) -> usize {
    let (d, m) = (a.d, r.m);
    let s = q(s);
    let mut cols = Vec::new();
    for f in cochain_basis(d, m, 1) {
        let mut col = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let (x, y) = (a.basis(i), a.basis(j));
                let lhs = f.eval(&[a.mul(&x, &y)]);
                let rhs = add(&r.mu_at(&y, &f.eval(&[x.clone()])), &r.rho_at(&x, &f.eval(&[y.clone()])));
                col.extend(add(&lhs, &scale(&-s.clone(), &rhs)));
            }
        }
        cols.push(col);
    }
    d * m - rank_or_zero(cols)
}

/// `A ⋉ V` on the basis `e_1..e_d, f_1..f_m`.
pub fn semidirect(a: &OAlg, r: &ORep) -> OAlg {
    let (d, m) = (a.d, r.m);
    let mut out = OAlg::new(d + m);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                out.c[i][j][k] = a.c[i][j][k].clone();
            }
        }
        for b in 0..m {
            for row in 0..m {
                out.c[i][d + b][d + row] = r.rho[i][row][b].clone();
                out.c[d + b][i][d + row] = r.mu[i][row][b].clone();
            }
        }
    }
    out
}
