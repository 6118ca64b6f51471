//! Finite-dimensional algebras given by structure constants, and the identity
//! checks and constructions defined on them.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ratlinalg::{
    add_vec, axpy, fmt_vec, int, inverse, is_zero_vec, zero_vec, Matrix, Scalar, Vector,
};
use crate::representation::{invariant_subspaces_of, InvariantSubspaces};

/// Witness lists in reports are truncated to this many entries per axiom
/// unless the caller asks for all of them.
pub const WITNESS_CAP: usize = 16;

/// An algebra on `Q^dim` with `e_i·e_j = Σ_k c[i][j][k] e_k` (0-based indices).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Algebra {
    name: String,
    dim: usize,
    sc: Vec<Scalar>,
}

impl Algebra {
    /// The algebra of dimension `dim` with every product zero.
    pub fn zero(dim: usize) -> Self {
        Algebra {
            name: format!("zero{dim}"),
            dim,
            sc: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    /// Builds an algebra from `(i, j, k, c)` entries meaning `c_{ij}^k = c`
    /// (0-based). Repeated triples accumulate.
    pub fn from_constants(
        name: impl Into<String>,
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut a = Algebra::zero(dim);
        a.name = name.into();
        for (i, j, k, c) in entries {
            for idx in [i, j, k] {
                if idx >= dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        found: idx + 1,
                    });
                }
            }
            a.sc[(i * dim + j) * dim + k] += c;
        }
        Ok(a)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.sc[(i * self.dim + j) * self.dim + k]
    }

    pub fn set_constant(&mut self, i: usize, j: usize, k: usize, c: Scalar) {
        let d = self.dim;
        self.sc[(i * d + j) * d + k] = c;
    }

    /// Nonzero structure constants as `(i, j, k, c)`, lexicographically ordered.
    pub fn nonzero_constants(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let d = self.dim;
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn is_zero_algebra(&self) -> bool {
        self.sc.iter().all(Zero::is_zero)
    }

    /// `e_i · e_j` as a coordinate vector.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let start = (i * self.dim + j) * self.dim;
        &self.sc[start..start + self.dim]
    }

    /// `e_i ∗ e_j = e_i·e_j + e_j·e_i`.
    pub fn basis_anticommutator(&self, i: usize, j: usize) -> Vector {
        add_vec(self.basis_product(i, j), self.basis_product(j, i))
    }

    fn check_len(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Bilinear extension of the structure constants.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.mul_unchecked(x, y))
    }

    pub(crate) fn mul_unchecked(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                axpy(&mut out, &c, self.basis_product(i, j));
            }
        }
        out
    }

    /// `x ∗ y = x·y + y·x`.
    pub fn anticommutator(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        Ok(add_vec(&self.multiply(x, y)?, &self.multiply(y, x)?))
    }

    /// `(x·y)·z + x·(y·z)`.
    pub fn anti_associator(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Result<Vector> {
        self.check_len(z)?;
        let xy = self.multiply(x, y)?;
        let yz = self.multiply(y, z)?;
        Ok(add_vec(
            &self.mul_unchecked(&xy, z),
            &self.mul_unchecked(x, &yz),
        ))
    }

    /// Cyclic sum of `(x∗y)∗z`. For a commutative algebra the product itself is
    /// used; otherwise the sub-adjacent product `∗`. [`Algebra::jacobian_product`]
    /// tells which one applies.
    pub fn jacobian(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Result<Vector> {
        self.check_len(x)?;
        self.check_len(y)?;
        self.check_len(z)?;
        let comm = self.is_commutative();
        let p = |u: &[Scalar], v: &[Scalar]| {
            if comm {
                self.mul_unchecked(u, v)
            } else {
                add_vec(&self.mul_unchecked(u, v), &self.mul_unchecked(v, u))
            }
        };
        let mut out = p(&p(x, y), z);
        out = add_vec(&out, &p(&p(y, z), x));
        out = add_vec(&out, &p(&p(z, x), y));
        Ok(out)
    }

    pub fn jacobian_product(&self) -> JacobianProduct {
        if self.is_commutative() {
            JacobianProduct::Own
        } else {
            JacobianProduct::SubAdjacent
        }
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim)
            .all(|i| (i + 1..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    pub fn is_associative(&self) -> bool {
        let d = self.dim;
        (0..d).all(|i| {
            (0..d).all(|j| {
                (0..d).all(|k| {
                    let (l, r) = self.basis_assoc_terms(i, j, k);
                    l == r
                })
            })
        })
    }

    /// `((e_i·e_j)·e_k, e_i·(e_j·e_k))`
    fn basis_assoc_terms(&self, i: usize, j: usize, k: usize) -> (Vector, Vector) {
        let mut left = zero_vec(self.dim);
        let mut right = zero_vec(self.dim);
        for (m, c) in self.basis_product(i, j).iter().enumerate() {
            axpy(&mut left, c, self.basis_product(m, k));
        }
        for (m, c) in self.basis_product(j, k).iter().enumerate() {
            axpy(&mut right, c, self.basis_product(i, m));
        }
        (left, right)
    }

    fn basis_anti_associator(&self, i: usize, j: usize, k: usize) -> Vector {
        let (l, r) = self.basis_assoc_terms(i, j, k);
        add_vec(&l, &r)
    }

    /// Left multiplication `L(e_i)`: column `j` is `e_i·e_j`.
    pub fn left_mult(&self, i: usize) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.basis_product(i, j).to_vec()).collect();
        Matrix::from_columns(&cols, self.dim).expect("square")
    }

    /// Right multiplication `R(e_i)`: column `j` is `e_j·e_i`.
    pub fn right_mult(&self, i: usize) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.basis_product(j, i).to_vec()).collect();
        Matrix::from_columns(&cols, self.dim).expect("square")
    }

    /// Span of all products `e_i·e_j`.
    pub fn square_span(&self) -> crate::ratlinalg::Subspace {
        let prods: Vec<Vector> = (0..self.dim)
            .flat_map(|i| (0..self.dim).map(move |j| (i, j)))
            .map(|(i, j)| self.basis_product(i, j).to_vec())
            .collect();
        crate::ratlinalg::Subspace::span(self.dim, &prods).expect("product length")
    }

    pub fn check_axioms(&self) -> AxiomReport {
        self.check_axioms_capped(Some(WITNESS_CAP))
    }

    /// Evaluates every identity on all basis tuples; by multilinearity this
    /// decides it on the whole algebra. `cap = None` keeps all witnesses.
    pub fn check_axioms_capped(&self, cap: Option<usize>) -> AxiomReport {
        let d = self.dim;
        let mut w = WitnessCollector::new(cap);

        for i in 0..d {
            for j in i + 1..d {
                let defect: Vector = self
                    .basis_product(i, j)
                    .iter()
                    .zip(self.basis_product(j, i))
                    .map(|(a, b)| a - b)
                    .collect();
                w.record(Axiom::Commutative, vec![i, j], defect);
            }
        }
        let commutative = !w.any(Axiom::Commutative);

        let mut aasso = vec![Vec::new(); d * d * d];
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    aasso[(i * d + j) * d + k] = self.basis_anti_associator(i, j, k);
                }
            }
        }
        let at = |i: usize, j: usize, k: usize| &aasso[(i * d + j) * d + k];
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    w.record(Axiom::AntiAssociative, vec![i, j, k], at(i, j, k).clone());
                    w.record(
                        Axiom::LeftPreJJ,
                        vec![i, j, k],
                        add_vec(at(i, j, k), at(j, i, k)),
                    );
                    w.record(
                        Axiom::RightPreJJ,
                        vec![i, j, k],
                        add_vec(at(i, j, k), at(i, k, j)),
                    );
                }
            }
        }

        if !commutative {
            let first = w
                .witnesses
                .iter()
                .find(|x| x.axiom == Axiom::Commutative)
                .cloned();
            if let Some(c) = first {
                w.record(Axiom::JacobiJordan, c.indices, c.defect);
            }
        }
        let basis: Vec<Vector> = (0..d).map(|i| crate::ratlinalg::unit_vec(d, i)).collect();
        for i in 0..d {
            for j in i..d {
                for k in j..d {
                    let jac = self
                        .jacobian(&basis[i], &basis[j], &basis[k])
                        .expect("basis vectors");
                    w.record(Axiom::JacobiJordan, vec![i, j, k], jac);
                }
            }
        }

        AxiomReport {
            commutative,
            anti_associative: !w.any(Axiom::AntiAssociative),
            left_prejj: !w.any(Axiom::LeftPreJJ),
            right_prejj: !w.any(Axiom::RightPreJJ),
            jacobi_jordan: !w.any(Axiom::JacobiJordan),
            jacobian_product: self.jacobian_product(),
            witnesses: w.witnesses,
        }
    }

    pub fn is_left_prejj(&self) -> bool {
        let d = self.dim;
        (0..d).all(|i| {
            (0..d).all(|j| {
                (0..d).all(|k| {
                    is_zero_vec(&add_vec(
                        &self.basis_anti_associator(i, j, k),
                        &self.basis_anti_associator(j, i, k),
                    ))
                })
            })
        })
    }

    pub fn is_jacobi_jordan(&self) -> bool {
        self.check_axioms_capped(Some(1)).jacobi_jordan
    }

    pub(crate) fn require_left_prejj(&self) -> Result<()> {
        if self.is_left_prejj() {
            Ok(())
        } else {
            Err(Error::NotPreJJ(self.name.clone()))
        }
    }

    pub(crate) fn require_jacobi_jordan(&self) -> Result<()> {
        if self.is_jacobi_jordan() {
            Ok(())
        } else {
            Err(Error::NotJJ(self.name.clone()))
        }
    }

    /// The opposite algebra `x • y = y · x`.
    pub fn opposite(&self) -> Algebra {
        let d = self.dim;
        let mut op = Algebra::zero(d).with_name(format!("{}_op", self.name));
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    op.set_constant(i, j, k, self.constant(j, i, k).clone());
                }
            }
        }
        op
    }

    /// The sub-adjacent Jacobi-Jordan algebra `x ∗ y = x·y + y·x`.
    pub fn sub_adjacent(&self) -> Result<Algebra> {
        self.require_left_prejj()?;
        Ok(self.anticommutator_algebra())
    }

    /// `(A, ∗)` without the left pre-Jacobi-Jordan precondition.
    pub(crate) fn anticommutator_algebra(&self) -> Algebra {
        let d = self.dim;
        let mut c = Algebra::zero(d).with_name(format!("{}_C", self.name));
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    c.set_constant(i, j, k, self.constant(i, j, k) + self.constant(j, i, k));
                }
            }
        }
        c
    }

    /// `A ⊗ B` with `(x⊗a)(y⊗b) = (x·y)⊗(a◇b)` for a commutative associative `B`.
    /// The basis `e_i ⊗ f_j` sits at index `i·dim B + j`.
    pub fn tensor_with_comm_assoc(&self, b: &Algebra) -> Result<Algebra> {
        self.require_left_prejj()?;
        if !(b.is_commutative() && b.is_associative()) {
            return Err(Error::NotCommAssoc(b.name.clone()));
        }
        let (da, db) = (self.dim, b.dim);
        let n = da * db;
        let mut t = Algebra::zero(n).with_name(format!("{}_x_{}", self.name, b.name));
        for (i, ip, k, c) in self.nonzero_constants() {
            for (j, jp, l, cb) in b.nonzero_constants() {
                t.set_constant(i * db + j, ip * db + jp, k * db + l, &c * &cb);
            }
        }
        Ok(t)
    }

    /// Transports the product along a change of basis whose columns are the new
    /// basis vectors expressed in the old basis.
    pub fn change_basis(&self, p: &Matrix) -> Result<Algebra> {
        let d = self.dim;
        if p.rows() != d || p.cols() != d {
            return Err(Error::ShapeMismatch {
                left: (d, d),
                right: (p.rows(), p.cols()),
            });
        }
        let pinv = inverse(p)?.ok_or_else(|| Error::ContractViolated("singular change of basis".into()))?;
        let cols = p.columns();
        let mut out = Algebra::zero(d).with_name(self.name.clone());
        for i in 0..d {
            for j in 0..d {
                let prod = self.mul_unchecked(&cols[i], &cols[j]);
                let coords = pinv.mul_vec(&prod)?;
                for (k, c) in coords.into_iter().enumerate() {
                    out.set_constant(i, j, k, c);
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} (dim {})", self.name, self.dim)?;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let p = self.basis_product(i, j);
                if !is_zero_vec(p) {
                    writeln!(f, "  e{}·e{} = {}", i + 1, j + 1, fmt_vec(p))?;
                }
            }
        }
        Ok(())
    }
}

/// Which product a Jacobian was computed with.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JacobianProduct {
    /// The algebra is commutative and its own product was used.
    Own,
    /// The algebra is not commutative; `x∗y = x·y + y·x` was used.
    SubAdjacent,
}

impl fmt::Display for JacobianProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JacobianProduct::Own => write!(f, "own"),
            JacobianProduct::SubAdjacent => write!(f, "subadjacent"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    Commutative,
    AntiAssociative,
    LeftPreJJ,
    RightPreJJ,
    JacobiJordan,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Commutative => "commutative",
            Axiom::AntiAssociative => "anti_associative",
            Axiom::LeftPreJJ => "left_prejj",
            Axiom::RightPreJJ => "right_prejj",
            Axiom::JacobiJordan => "jacobi_jordan",
        };
        f.write_str(s)
    }
}

/// A basis tuple (0-based) on which an identity fails, with the defect.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub axiom: Axiom,
    pub indices: Vec<usize>,
    pub defect: Vector,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{} ({}): defect {}", self.axiom, idx.join(","), fmt_vec(&self.defect))
    }
}

struct WitnessCollector {
    cap: Option<usize>,
    witnesses: Vec<Witness>,
    counts: std::collections::HashMap<Axiom, usize>,
}

impl WitnessCollector {
    fn new(cap: Option<usize>) -> Self {
        WitnessCollector {
            cap,
            witnesses: Vec::new(),
            counts: Default::default(),
        }
    }

    fn record(&mut self, axiom: Axiom, indices: Vec<usize>, defect: Vector) {
        if is_zero_vec(&defect) {
            return;
        }
        let n = self.counts.entry(axiom).or_insert(0);
        *n += 1;
        if self.cap.is_none_or(|c| *n <= c) {
            self.witnesses.push(Witness {
                axiom,
                indices,
                defect,
            });
        }
    }

    fn any(&self, axiom: Axiom) -> bool {
        self.counts.get(&axiom).copied().unwrap_or(0) > 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub commutative: bool,
    pub anti_associative: bool,
    pub left_prejj: bool,
    pub right_prejj: bool,
    /// Commutative and with vanishing Jacobian.
    pub jacobi_jordan: bool,
    pub jacobian_product: JacobianProduct,
    pub witnesses: Vec<Witness>,
}

impl AxiomReport {
    pub fn witnesses_for(&self, axiom: Axiom) -> impl Iterator<Item = &Witness> {
        self.witnesses.iter().filter(move |w| w.axiom == axiom)
    }
}

/// Outcome of [`check_morphism`]; witnesses are 0-based basis pairs with
/// the defect `f(e_i·e_j) − f(e_i)·f(e_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismReport {
    pub holds: bool,
    pub witnesses: Vec<(usize, usize, Vector)>,
}

/// Checks `f(x·y) = f(x)·f(y)` on all basis pairs; `f` is `dim b × dim a`.
pub fn check_morphism(f: &Matrix, a: &Algebra, b: &Algebra) -> Result<MorphismReport> {
    if f.rows() != b.dim() || f.cols() != a.dim() {
        return Err(Error::ShapeMismatch {
            left: (b.dim(), a.dim()),
            right: (f.rows(), f.cols()),
        });
    }
    let images = f.columns();
    let mut witnesses = Vec::new();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = f.mul_vec(a.basis_product(i, j))?;
            let rhs = b.mul_unchecked(&images[i], &images[j]);
            let defect: Vector = lhs.iter().zip(&rhs).map(|(x, y)| x - y).collect();
            if !is_zero_vec(&defect) {
                witnesses.push((i, j, defect));
            }
        }
    }
    Ok(MorphismReport {
        holds: witnesses.is_empty(),
        witnesses,
    })
}

/// The five invariant subspaces of the regular action `(L, R)` on `A`.
pub fn centers(a: &Algebra) -> InvariantSubspaces {
    let rho: Vec<Matrix> = (0..a.dim()).map(|i| a.left_mult(i)).collect();
    let mu: Vec<Matrix> = (0..a.dim()).map(|i| a.right_mult(i)).collect();
    invariant_subspaces_of(a, &rho, &mu)
}

/// The 1-dimensional unital algebra `f1·f1 = f1`.
pub fn unital_line() -> Algebra {
    Algebra::from_constants("K", 1, [(0, 0, 0, Scalar::one())]).expect("valid")
}

/// Scalar multiple of the identity on `A`, used as a linear map.
pub fn scaled_identity(a: &Algebra, c: i64) -> Matrix {
    Matrix::scalar_identity(a.dim(), &int(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{a1, a2};
    use crate::ratlinalg::{frac, unit_vec};

    fn e(d: usize, i: usize) -> Vector {
        unit_vec(d, i - 1)
    }

    #[test]
    fn multiply_examples() {
        let a = a1();
        assert_eq!(a.multiply(&e(2, 1), &e(2, 1)).unwrap(), e(2, 2));
        let b = a2();
        let mut expect = zero_vec(4);
        expect[3] = frac(5, 9);
        assert_eq!(b.multiply(&e(4, 1), &e(4, 3)).unwrap(), expect);
        assert!(is_zero_vec(&b.multiply(&zero_vec(4), &e(4, 2)).unwrap()));
        assert!(b.multiply(&e(3, 1), &e(4, 1)).is_err());
    }

    #[test]
    fn anti_associator_examples() {
        let a = a1();
        assert!(is_zero_vec(&a.anti_associator(&e(2, 1), &e(2, 1), &e(2, 1)).unwrap()));
        let b = a2();
        assert!(is_zero_vec(&b.anti_associator(&e(4, 1), &e(4, 1), &e(4, 3)).unwrap()));
        let z = Algebra::zero(3);
        assert!(is_zero_vec(&z.anti_associator(&e(3, 1), &e(3, 2), &e(3, 3)).unwrap()));
    }

    #[test]
    fn jacobian_examples() {
        let a = a1();
        assert_eq!(a.jacobian_product(), JacobianProduct::Own);
        assert!(is_zero_vec(&a.jacobian(&e(2, 1), &e(2, 1), &e(2, 1)).unwrap()));
        let c = a2().sub_adjacent().unwrap();
        assert!(is_zero_vec(&c.jacobian(&e(4, 1), &e(4, 1), &e(4, 3)).unwrap()));
        assert_eq!(a2().jacobian_product(), JacobianProduct::SubAdjacent);
    }

    #[test]
    fn axioms_of_a1() {
        let r = a1().check_axioms();
        assert!(r.commutative && r.anti_associative && r.left_prejj && r.right_prejj && r.jacobi_jordan);
        assert!(r.witnesses.is_empty());
    }

    #[test]
    fn axioms_of_a2() {
        let r = a2().check_axioms();
        assert!(r.left_prejj);
        assert!(!r.commutative);
        let w: Vec<_> = r.witnesses_for(Axiom::Commutative).collect();
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].indices, vec![0, 2]);
        assert_eq!(w[0].defect, vec![int(0), int(0), int(0), frac(1, 9)]);
        assert!(r.witnesses_for(Axiom::JacobiJordan).count() >= 1);
    }

    #[test]
    fn zero_algebra_passes_everything() {
        let r = Algebra::zero(3).check_axioms();
        assert!(r.commutative && r.anti_associative && r.left_prejj && r.right_prejj && r.jacobi_jordan);
    }

    #[test]
    fn witness_cap() {
        // e1·e1 = e1 fails anti-associativity on one triple only; a generic
        // algebra fails on many.
        let mut a = Algebra::zero(3);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    a.set_constant(i, j, k, int((i + 2 * j + k) as i64 % 3 + 1));
                }
            }
        }
        let capped = a.check_axioms();
        let full = a.check_axioms_capped(None);
        assert_eq!(capped.witnesses_for(Axiom::AntiAssociative).count(), WITNESS_CAP);
        assert_eq!(full.witnesses_for(Axiom::AntiAssociative).count(), 27);
    }

    #[test]
    fn opposite_examples() {
        let op = a2().opposite();
        let mut expect = zero_vec(4);
        expect[3] = frac(5, 9);
        assert_eq!(op.basis_product(2, 0), expect.as_slice());
        let a = a1();
        assert_eq!(a.opposite().sc, a.sc);
        assert_eq!(a2().opposite().opposite().sc, a2().sc);
    }

    #[test]
    fn sub_adjacent_examples() {
        let c = a1().sub_adjacent().unwrap();
        assert_eq!(c.basis_product(0, 0), &[int(0), int(2)]);
        let c2 = a2().sub_adjacent().unwrap();
        assert_eq!(c2.basis_product(0, 2), &[int(0), int(0), int(0), int(1)]);
        assert!(c2.check_axioms().jacobi_jordan);
        assert!(Algebra::zero(2).sub_adjacent().unwrap().is_zero_algebra());
        let bad = Algebra::from_constants("idem", 1, [(0, 0, 0, int(1))]).unwrap();
        assert!(matches!(bad.sub_adjacent(), Err(Error::NotPreJJ(_))));
    }

    #[test]
    fn tensor_examples() {
        let a = a2();
        let t = a.tensor_with_comm_assoc(&unital_line()).unwrap();
        assert_eq!(t.sc, a.sc);

        let b = Algebra::from_constants(
            "B",
            2,
            [
                (0, 0, 0, int(1)),
                (0, 1, 1, int(1)),
                (1, 0, 1, int(1)),
            ],
        )
        .unwrap();
        let t = a1().tensor_with_comm_assoc(&b).unwrap();
        assert_eq!(t.dim(), 4);
        assert!(t.check_axioms().left_prejj);
        // (e1⊗f1)(e1⊗f2) = e2⊗f2
        assert_eq!(t.constant(0, 1, 3), &int(1));

        let z = a1().tensor_with_comm_assoc(&Algebra::zero(2)).unwrap();
        assert!(z.is_zero_algebra());

        assert!(matches!(
            a1().tensor_with_comm_assoc(&a2()),
            Err(Error::NotCommAssoc(_))
        ));
    }

    #[test]
    fn morphism_examples() {
        let a = a1();
        assert!(check_morphism(&Matrix::identity(2), &a, &a).unwrap().holds);
        assert!(check_morphism(&Matrix::zeros(4, 2), &a, &a2()).unwrap().holds);
        let f = Matrix::from_i64(&[&[1, 0], &[0, 2]]);
        let r = check_morphism(&f, &a, &a).unwrap();
        assert!(!r.holds);
        assert_eq!(r.witnesses, vec![(0, 0, vec![int(0), int(1)])]);
        assert!(check_morphism(&Matrix::identity(3), &a, &a).is_err());
    }

    #[test]
    fn center_examples() {
        assert_eq!(centers(&a1()).r_aas.dim(), 2);
        assert_eq!(centers(&a2()).r_aas.dim(), 4);
        let z = centers(&Algebra::zero(3));
        for s in [&z.r_aas, &z.l_aas, &z.r_inv, &z.l_inv, &z.inv] {
            assert_eq!(s.dim(), 3);
        }
    }

    #[test]
    fn change_basis_preserves_axioms() {
        let p = Matrix::from_i64(&[&[1, 1, 0, 0], &[0, 1, 0, 2], &[0, 0, 1, 0], &[1, 0, 0, 1]]);
        let t = a2().change_basis(&p).unwrap();
        assert!(t.check_axioms().left_prejj);
        assert!(!t.is_commutative());
    }
}
