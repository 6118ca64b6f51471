//! Seeded generators for algebras, representations and operators.

use pjj::algebra::Algebra;
use pjj::catalog::{a1, a2, dual_numbers, prejj_catalog};
use pjj::deformation::{nijenhuis_check, search_nijenhuis};
use pjj::ratlinalg::{frac, int, inverse, Matrix, Scalar};
use pjj::representation::{semidirect_product, Representation};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn small_scalar(rng: &mut StdRng) -> Scalar {
    let num = rng.gen_range(-3i64..=3);
    let den = *[1i64, 1, 1, 2, 3].choose(rng).unwrap();
    frac(num, den)
}

/// A random invertible `n × n` matrix with small entries.
pub fn invertible(rng: &mut StdRng, n: usize) -> (Matrix, Matrix) {
    loop {
        let mut p = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                p[(r, c)] = int(rng.gen_range(-2i64..=2));
            }
        }
        if let Some(inv) = inverse(&p).unwrap() {
            return (p, inv);
        }
    }
}

/// Left pre-JJ algebras of dimension at most 4 reachable from the catalog by
/// opposite, tensoring with a commutative associative algebra, and semidirect
/// products with regular, scalar and zero representations.
pub fn closures() -> Vec<Algebra> {
    let base: Vec<Algebra> = prejj_catalog().into_iter().filter(|a| a.dim() <= 4).collect();
    let mut out = base.clone();
    out.extend(base.iter().map(Algebra::opposite));
    for a in &base {
        for b in [dual_numbers(), pjj::algebra::unital_line()] {
            if a.dim() * b.dim() <= 4 {
                out.push(a.tensor_with_comm_assoc(&b).unwrap());
            }
        }
        if a.dim() * 2 <= 4 {
            out.push(semidirect_product(a, &Representation::regular(a).unwrap()).unwrap());
        }
        if a.dim() < 4 {
            out.push(semidirect_product(a, &Representation::scalar(a)).unwrap());
        }
        for m in 1..=(4 - a.dim().min(4)) {
            out.push(semidirect_product(a, &Representation::zero(a, m)).unwrap());
        }
    }
    out.retain(|a| a.dim() <= 4);
    out
}

/// A random closure algebra in a random basis.
pub fn random_prejj(rng: &mut StdRng, pool: &[Algebra]) -> Algebra {
    let a = pool.choose(rng).unwrap();
    let (p, _) = invertible(rng, a.dim());
    a.change_basis(&p).unwrap()
}

/// Hand-built representation of the 2-dimensional zero algebra on `Q³` whose
/// `μ` matrices do not commute.
pub fn noncommuting_rep() -> Representation {
    let a = Algebra::zero(2);
    let e = |r: usize, c: usize, v: i64| {
        let mut m = Matrix::zeros(3, 3);
        m[(r, c)] = int(v);
        m
    };
    Representation::new(a, 3, vec![e(1, 2, -1), Matrix::zeros(3, 3)], vec![e(1, 2, 1), e(0, 1, 1)]).unwrap()
}

/// Representations known to be valid.
pub fn valid_reps() -> Vec<Representation> {
    let mut out = Vec::new();
    for a in prejj_catalog() {
        let reg = Representation::regular(&a).unwrap();
        if let Ok(d) = reg.dual() {
            out.push(d);
        }
        out.push(reg);
        out.push(Representation::scalar(&a));
        out.push(Representation::zero(&a, 2));
    }
    out.push(noncommuting_rep());
    out
}

/// `(P ρ P⁻¹, P μ P⁻¹)`.
pub fn conjugate(r: &Representation, p: &Matrix, pinv: &Matrix) -> Representation {
    let conj = |m: &Matrix| p.mul(m).unwrap().mul(pinv).unwrap();
    Representation::new(
        r.alg().clone(),
        r.vdim(),
        r.rho().iter().map(conj).collect(),
        r.mu().iter().map(conj).collect(),
    )
    .unwrap()
}

/// Adds a random nonzero scalar to one random entry of one `ρ` or `μ` matrix.
pub fn perturb(rng: &mut StdRng, r: &Representation) -> Representation {
    let mut out = r.clone();
    let i = rng.gen_range(0..r.alg().dim());
    let (row, col) = (rng.gen_range(0..r.vdim()), rng.gen_range(0..r.vdim()));
    let mut c = small_scalar(rng);
    if num_traits::Zero::is_zero(&c) {
        c = int(1);
    }
    let target = if rng.gen_bool(0.5) { &mut out.rho_mut()[i] } else { &mut out.mu_mut()[i] };
    target[(row, col)] += c;
    out
}

/// Nijenhuis operators on `a`: `0`, `Id`, `λ·Id`, the maps found by a bounded
/// search, and on `A1` the nilpotent `e1 ↦ e2`.
pub fn nijenhuis_corpus(a: &Algebra, budget: usize) -> Vec<Matrix> {
    let d = a.dim();
    let mut out = vec![
        Matrix::zeros(d, d),
        Matrix::identity(d),
        Matrix::scalar_identity(d, &int(3)),
        Matrix::scalar_identity(d, &frac(-1, 2)),
    ];
    if a.name() == a1().name() && d == 2 {
        let mut n = Matrix::zeros(2, 2);
        n[(1, 0)] = int(1);
        out.push(n);
    }
    for m in search_nijenhuis(a, budget) {
        if !out.contains(&m) {
            out.push(m);
        }
    }
    out.retain(|m| nijenhuis_check(a, m).unwrap().holds);
    out
}

/// The algebras the operator suites run over.
pub fn operator_algebras() -> Vec<Algebra> {
    vec![a1(), a2(), Algebra::zero(2)]
}

pub fn random_matrix(rng: &mut StdRng, d: usize) -> Matrix {
    let mut m = Matrix::zeros(d, d);
    for r in 0..d {
        for c in 0..d {
            if rng.gen_bool(0.4) {
                m[(r, c)] = small_scalar(rng);
            }
        }
    }
    m
}

/// Copies structure constants into the oracle's own representation.
pub fn to_oracle_alg(a: &Algebra) -> crate::common::oracle::OAlg {
    let mut o = crate::common::oracle::OAlg::new(a.dim());
    for (i, j, k, c) in a.nonzero_constants() {
        o.c[i][j][k] = c;
    }
    o
}

pub fn to_oracle_rep(r: &Representation) -> crate::common::oracle::ORep {
    let rows = |m: &Matrix| (0..m.rows()).map(|i| m.row(i).to_vec()).collect::<Vec<_>>();
    crate::common::oracle::ORep {
        m: r.vdim(),
        rho: r.rho().iter().map(rows).collect(),
        mu: r.mu().iter().map(rows).collect(),
    }
}

/// `P D P⁻¹` with `D` diagonal with entries in `{0, 1}`.
pub fn random_idempotent(rng: &mut StdRng, d: usize) -> Matrix {
    let (p, pinv) = invertible(rng, d);
    let mut diag = Matrix::zeros(d, d);
    for i in 0..d {
        if rng.gen_bool(0.5) {
            diag[(i, i)] = int(1);
        }
    }
    p.mul(&diag).unwrap().mul(&pinv).unwrap()
}

/// `P L P⁻¹` with `L` strictly lower triangular and `L² = 0`.
pub fn random_square_zero(rng: &mut StdRng, d: usize) -> Matrix {
    let (p, pinv) = invertible(rng, d);
    loop {
        let mut l = Matrix::zeros(d, d);
        for r in 0..d {
            for c in 0..r {
                if rng.gen_bool(0.3) {
                    l[(r, c)] = small_scalar(rng);
                }
            }
        }
        if l.mul(&l).unwrap().is_zero() {
            return p.mul(&l).unwrap().mul(&pinv).unwrap();
        }
    }
}
