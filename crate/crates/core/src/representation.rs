//! Representations `(V, ρ, μ)` of left pre-Jacobi-Jordan algebras, `(V, ρ)` of
//! Jacobi-Jordan algebras, and the constructions between them.

use std::fmt;

use crate::algebra::{check_morphism, Algebra};
use crate::error::{Error, Result};
use crate::ratlinalg::{axpy, kernel_basis, Matrix, Scalar, Subspace, Vector};

/// `(ρ(e_i))_i` and `(μ(e_i))_i` acting on `Q^vdim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    alg: Algebra,
    vdim: usize,
    rho: Vec<Matrix>,
    mu: Vec<Matrix>,
}

fn check_family(alg_dim: usize, vdim: usize, family: &[Matrix]) -> Result<()> {
    if family.len() != alg_dim {
        return Err(Error::DimensionMismatch {
            expected: alg_dim,
            found: family.len(),
        });
    }
    for m in family {
        if m.rows() != vdim || m.cols() != vdim {
            return Err(Error::ShapeMismatch {
                left: (vdim, vdim),
                right: (m.rows(), m.cols()),
            });
        }
    }
    Ok(())
}

fn combine(family: &[Matrix], x: &[Scalar], vdim: usize) -> Matrix {
    let mut out = Matrix::zeros(vdim, vdim);
    for (m, c) in family.iter().zip(x) {
        if !num_traits::Zero::is_zero(c) {
            out = out.add(&m.scale(c)).expect("same shape");
        }
    }
    out
}

impl Representation {
    /// Wraps matrix families after checking their shapes; the representation
    /// identities are *not* checked here.
    pub fn new(alg: Algebra, vdim: usize, rho: Vec<Matrix>, mu: Vec<Matrix>) -> Result<Self> {
        check_family(alg.dim(), vdim, &rho)?;
        check_family(alg.dim(), vdim, &mu)?;
        Ok(Representation { alg, vdim, rho, mu })
    }

    /// `ρ = μ = 0` on `Q^vdim`.
    pub fn zero(alg: &Algebra, vdim: usize) -> Self {
        let z = vec![Matrix::zeros(vdim, vdim); alg.dim()];
        Representation {
            alg: alg.clone(),
            vdim,
            rho: z.clone(),
            mu: z,
        }
    }

    /// The trivial action on the ground field.
    pub fn scalar(alg: &Algebra) -> Self {
        Self::zero(alg, 1)
    }

    pub fn alg(&self) -> &Algebra {
        &self.alg
    }

    pub fn vdim(&self) -> usize {
        self.vdim
    }

    pub fn rho(&self) -> &[Matrix] {
        &self.rho
    }

    pub fn mu(&self) -> &[Matrix] {
        &self.mu
    }

    pub fn rho_mut(&mut self) -> &mut [Matrix] {
        &mut self.rho
    }

    pub fn mu_mut(&mut self) -> &mut [Matrix] {
        &mut self.mu
    }

    /// `ρ(x)` for an arbitrary coordinate vector `x`.
    pub fn rho_of(&self, x: &[Scalar]) -> Matrix {
        combine(&self.rho, x, self.vdim)
    }

    pub fn mu_of(&self, x: &[Scalar]) -> Matrix {
        combine(&self.mu, x, self.vdim)
    }

    /// Raw identity check, without requiring the algebra to be pre-JJ.
    pub(crate) fn identity_defects(&self) -> Vec<RepWitness> {
        let d = self.alg.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let rr = self.rho[i].mul(&self.rho[j]).expect("square");
                let rr2 = self.rho[j].mul(&self.rho[i]).expect("square");
                let jordan = self
                    .rho_of(&self.alg.basis_anticommutator(i, j))
                    .add(&rr)
                    .and_then(|m| m.add(&rr2))
                    .expect("square");
                if !jordan.is_zero() {
                    out.push(RepWitness {
                        equation: RepEquation::JordanAction,
                        i,
                        j,
                    });
                }
                let mixed = self
                    .mu_of(self.alg.basis_product(i, j))
                    .add(&self.mu[j].mul(&self.mu[i]).expect("square"))
                    .and_then(|m| m.add(&self.mu[j].mul(&self.rho[i]).expect("square")))
                    .and_then(|m| m.add(&self.rho[i].mul(&self.mu[j]).expect("square")))
                    .expect("square");
                if !mixed.is_zero() {
                    out.push(RepWitness {
                        equation: RepEquation::MixedAction,
                        i,
                        j,
                    });
                }
            }
        }
        out
    }

    /// Checks both representation identities on all basis pairs.
    pub fn check(&self) -> Result<RepCheck> {
        self.alg.require_left_prejj()?;
        let witnesses = self.identity_defects();
        Ok(RepCheck {
            holds: witnesses.is_empty(),
            witnesses,
        })
    }

    pub(crate) fn require_valid(&self) -> Result<()> {
        let c = self.check()?;
        match c.witnesses.first() {
            None => Ok(()),
            Some(w) => Err(Error::NotRepresentation(w.to_string())),
        }
    }

    /// `ρ(e_i) = L(e_i)`, `μ(e_i) = R(e_i)`.
    pub fn regular(alg: &Algebra) -> Result<Self> {
        alg.require_left_prejj()?;
        Ok(Representation {
            alg: alg.clone(),
            vdim: alg.dim(),
            rho: (0..alg.dim()).map(|i| alg.left_mult(i)).collect(),
            mu: (0..alg.dim()).map(|i| alg.right_mult(i)).collect(),
        })
    }

    /// Dual module `V*` with `ρ*(x) = ρ(x)ᵀ`, `μ*(x) = μ(x)ᵀ`.
    ///
    /// The pairing `(ρ*(x)f)(v) = f(ρ(x)v)` carries no sign, so the dual is the
    /// plain transpose family (unlike the usual Lie-theoretic `−ρ(x)ᵀ`). This is
    /// a representation provided the `μ(e_i)` pairwise commute.
    pub fn dual(&self) -> Result<Representation> {
        self.require_valid()?;
        let d = self.alg.dim();
        for i in 0..d {
            for j in i + 1..d {
                let ij = self.mu[i].mul(&self.mu[j])?;
                let ji = self.mu[j].mul(&self.mu[i])?;
                if ij != ji {
                    return Err(Error::HypothesisHpViolated(i + 1, j + 1));
                }
            }
        }
        let dual = Representation {
            alg: self.alg.clone(),
            vdim: self.vdim,
            rho: self.rho.iter().map(Matrix::transpose).collect(),
            mu: self.mu.iter().map(Matrix::transpose).collect(),
        };
        if !dual.identity_defects().is_empty() {
            return Err(Error::ContractViolated(
                "dual of a representation with commuting mu failed the identities".into(),
            ));
        }
        Ok(dual)
    }

    /// `(V, ρ + μ)` as a representation of the sub-adjacent algebra.
    pub fn sum_representation(&self) -> Result<JJRepresentation> {
        self.require_valid()?;
        let rho = self
            .rho
            .iter()
            .zip(&self.mu)
            .map(|(r, m)| r.add(m))
            .collect::<Result<Vec<_>>>()?;
        let jj = JJRepresentation {
            alg: self.alg.sub_adjacent()?,
            vdim: self.vdim,
            rho,
        };
        if !jj.identity_defects().is_empty() {
            return Err(Error::ContractViolated(
                "rho + mu is not a Jacobi-Jordan representation".into(),
            ));
        }
        Ok(jj)
    }

    pub fn invariant_subspaces(&self) -> InvariantSubspaces {
        invariant_subspaces_of(&self.alg, &self.rho, &self.mu)
    }
}

/// Which representation identity failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepEquation {
    /// `ρ(x∗y) + ρ(x)ρ(y) + ρ(y)ρ(x) = 0`
    JordanAction,
    /// `μ(x·y) + μ(y)μ(x) + μ(y)ρ(x) + ρ(x)μ(y) = 0`
    MixedAction,
}

/// Failing equation on the basis pair `(e_i, e_j)` (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RepWitness {
    pub equation: RepEquation,
    pub i: usize,
    pub j: usize,
}

impl fmt::Display for RepWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let eq = match self.equation {
            RepEquation::JordanAction => "rho(x*y)+rho(x)rho(y)+rho(y)rho(x)=0",
            RepEquation::MixedAction => "mu(x.y)+mu(y)mu(x)+mu(y)rho(x)+rho(x)mu(y)=0",
        };
        write!(f, "{eq} fails at (e{}, e{})", self.i + 1, self.j + 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepCheck {
    pub holds: bool,
    pub witnesses: Vec<RepWitness>,
}

/// A representation `ρ` of a Jacobi-Jordan algebra: `ρ(x∗y) = −ρ(x)ρ(y) − ρ(y)ρ(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JJRepresentation {
    alg: Algebra,
    vdim: usize,
    rho: Vec<Matrix>,
}

impl JJRepresentation {
    pub fn new(alg: Algebra, vdim: usize, rho: Vec<Matrix>) -> Result<Self> {
        check_family(alg.dim(), vdim, &rho)?;
        Ok(JJRepresentation { alg, vdim, rho })
    }

    pub fn zero(alg: &Algebra, vdim: usize) -> Self {
        JJRepresentation {
            alg: alg.clone(),
            vdim,
            rho: vec![Matrix::zeros(vdim, vdim); alg.dim()],
        }
    }

    /// Left multiplication of a Jacobi-Jordan algebra on itself.
    pub fn regular(alg: &Algebra) -> Result<Self> {
        alg.require_jacobi_jordan()?;
        Ok(JJRepresentation {
            alg: alg.clone(),
            vdim: alg.dim(),
            rho: (0..alg.dim()).map(|i| alg.left_mult(i)).collect(),
        })
    }

    pub fn alg(&self) -> &Algebra {
        &self.alg
    }

    pub fn vdim(&self) -> usize {
        self.vdim
    }

    pub fn rho(&self) -> &[Matrix] {
        &self.rho
    }

    fn identity_defects(&self) -> Vec<(usize, usize)> {
        let d = self.alg.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in i..d {
                let lhs = combine(&self.rho, self.alg.basis_product(i, j), self.vdim);
                let s = lhs
                    .add(&self.rho[i].mul(&self.rho[j]).expect("square"))
                    .and_then(|m| m.add(&self.rho[j].mul(&self.rho[i]).expect("square")))
                    .expect("square");
                if !s.is_zero() {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Witnesses are 0-based basis pairs `i ≤ j`.
    pub fn check(&self) -> Result<(bool, Vec<(usize, usize)>)> {
        self.alg.require_jacobi_jordan()?;
        let w = self.identity_defects();
        Ok((w.is_empty(), w))
    }
}

/// Representation of `a` on the space of `b` induced by a morphism `f: a → b`:
/// `ρ(x)v = f(x)·v`, `μ(x)v = v·f(x)`.
pub fn representation_from_morphism(f: &Matrix, a: &Algebra, b: &Algebra) -> Result<Representation> {
    a.require_left_prejj()?;
    b.require_left_prejj()?;
    let report = check_morphism(f, a, b)?;
    if let Some((i, j, _)) = report.witnesses.first() {
        return Err(Error::NotMorphism(format!(
            "f(e{0}·e{1}) != f(e{0})·f(e{1})",
            i + 1,
            j + 1
        )));
    }
    let lb: Vec<Matrix> = (0..b.dim()).map(|k| b.left_mult(k)).collect();
    let rb: Vec<Matrix> = (0..b.dim()).map(|k| b.right_mult(k)).collect();
    let images = f.columns();
    let r = Representation {
        alg: a.clone(),
        vdim: b.dim(),
        rho: images.iter().map(|x| combine(&lb, x, b.dim())).collect(),
        mu: images.iter().map(|x| combine(&rb, x, b.dim())).collect(),
    };
    if !r.identity_defects().is_empty() {
        return Err(Error::ContractViolated(
            "morphism-induced action failed the representation identities".into(),
        ));
    }
    Ok(r)
}

/// Jacobi-Jordan variant: `ρ(x)v = f(x)∗v` for a morphism of Jacobi-Jordan algebras.
pub fn jj_representation_from_morphism(f: &Matrix, a: &Algebra, b: &Algebra) -> Result<JJRepresentation> {
    a.require_jacobi_jordan()?;
    b.require_jacobi_jordan()?;
    let report = check_morphism(f, a, b)?;
    if !report.holds {
        let (i, j, _) = &report.witnesses[0];
        return Err(Error::NotMorphism(format!("fails at (e{}, e{})", i + 1, j + 1)));
    }
    let lb: Vec<Matrix> = (0..b.dim()).map(|k| b.left_mult(k)).collect();
    let r = JJRepresentation {
        alg: a.clone(),
        vdim: b.dim(),
        rho: f.columns().iter().map(|x| combine(&lb, x, b.dim())).collect(),
    };
    if !r.identity_defects().is_empty() {
        return Err(Error::ContractViolated(
            "morphism-induced Jacobi-Jordan action failed its identity".into(),
        ));
    }
    Ok(r)
}

/// The action `ρ(a)b = a∗b` of a Jacobi-Jordan algebra on one of its ideals,
/// in the coordinates of the ideal's canonical basis.
pub fn ideal_representation(a: &Algebra, ideal: &Subspace) -> Result<JJRepresentation> {
    a.require_jacobi_jordan()?;
    if ideal.ambient_dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: ideal.ambient_dim(),
        });
    }
    let basis = ideal.basis_matrix();
    let k = ideal.dim();
    let mut rho = Vec::with_capacity(a.dim());
    for i in 0..a.dim() {
        let mut m = Matrix::zeros(k, k);
        for (c, b) in ideal.basis().iter().enumerate() {
            let prod = a.mul_unchecked(&crate::ratlinalg::unit_vec(a.dim(), i), b);
            let coords = crate::ratlinalg::solve(&basis, &prod)?
                .ok_or_else(|| Error::NotIdeal(format!("e{}∗b{} leaves the subspace", i + 1, c + 1)))?;
            for (r, x) in coords.into_iter().enumerate() {
                m[(r, c)] = x;
            }
        }
        rho.push(m);
    }
    Ok(JJRepresentation {
        alg: a.clone(),
        vdim: k,
        rho,
    })
}

/// The algebra on `A ⊕ V` with `(x,u)(y,v) = (x·y, ρ(x)v + μ(y)u)`; basis is
/// the `A` basis followed by the `V` basis.
///
/// When `a` is left pre-Jacobi-Jordan, the result is left pre-Jacobi-Jordan
/// exactly when `r` satisfies the representation identities; both sides are
/// computed and a disagreement is reported as [`Error::ContractViolated`].
pub fn semidirect_product(a: &Algebra, r: &Representation) -> Result<Algebra> {
    if r.alg.dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: r.alg.dim(),
        });
    }
    let (n, m) = (a.dim(), r.vdim);
    let mut out = Algebra::zero(n + m).with_name(format!("{}_semi_{}", a.name(), m));
    for (i, j, k, c) in a.nonzero_constants() {
        out.set_constant(i, j, k, c);
    }
    for i in 0..n {
        for b in 0..m {
            for row in 0..m {
                // e_i · f_b = ρ(e_i) f_b
                let x = &r.rho[i][(row, b)];
                if !num_traits::Zero::is_zero(x) {
                    out.set_constant(i, n + b, n + row, x.clone());
                }
                // f_b · e_i = μ(e_i) f_b
                let y = &r.mu[i][(row, b)];
                if !num_traits::Zero::is_zero(y) {
                    out.set_constant(n + b, i, n + row, y.clone());
                }
            }
        }
    }
    if a.is_left_prejj() {
        let product_ok = out.is_left_prejj();
        let rep_ok = r.identity_defects().is_empty();
        if product_ok != rep_ok {
            return Err(Error::ContractViolated(format!(
                "semidirect product left pre-JJ = {product_ok} but representation valid = {rep_ok}"
            )));
        }
    }
    Ok(out)
}

/// The five invariant subspaces of a representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantSubspaces {
    /// `{v : ρ(x·y)v + ρ(x)ρ(y)v = 0}`
    pub r_aas: Subspace,
    /// `{v : μ(x·y)v + μ(y)μ(x)v = 0}`
    pub l_aas: Subspace,
    /// `{v : ρ(x)v = 0}`
    pub r_inv: Subspace,
    /// `{v : μ(x)v = 0}`
    pub l_inv: Subspace,
    /// `{v : ρ(x)v + μ(x)v = 0}`
    pub inv: Subspace,
}

fn stacked_kernel(vdim: usize, blocks: impl IntoIterator<Item = Matrix>) -> Subspace {
    let rows: Vec<Vector> = blocks.into_iter().flat_map(|m| m.row_vectors()).collect();
    let n = rows.len();
    let m = Matrix::from_rows(rows, vdim).expect("blocks have vdim columns");
    debug_assert_eq!(m.rows(), n);
    kernel_basis(&m)
}

pub(crate) fn invariant_subspaces_of(alg: &Algebra, rho: &[Matrix], mu: &[Matrix]) -> InvariantSubspaces {
    let d = alg.dim();
    let vdim = rho.first().map_or_else(|| mu.first().map_or(0, Matrix::rows), Matrix::rows);
    let vdim = if d == 0 { 0 } else { vdim };
    let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).collect();
    let r_aas = stacked_kernel(
        vdim,
        pairs.iter().map(|&(i, j)| {
            combine(rho, alg.basis_product(i, j), vdim)
                .add(&rho[i].mul(&rho[j]).expect("square"))
                .expect("square")
        }),
    );
    let l_aas = stacked_kernel(
        vdim,
        pairs.iter().map(|&(i, j)| {
            combine(mu, alg.basis_product(i, j), vdim)
                .add(&mu[j].mul(&mu[i]).expect("square"))
                .expect("square")
        }),
    );
    let r_inv = stacked_kernel(vdim, rho.iter().cloned());
    let l_inv = stacked_kernel(vdim, mu.iter().cloned());
    let inv = stacked_kernel(
        vdim,
        rho.iter().zip(mu).map(|(r, m)| r.add(m).expect("square")),
    );
    InvariantSubspaces {
        r_aas,
        l_aas,
        r_inv,
        l_inv,
        inv,
    }
}

/// `v ↦ (ρ(e_i)v + μ(e_i)v)_i`, i.e. the inner map `w ↦ D_w` flattened.
pub(crate) fn inner_map_images(r: &Representation, w: &[Scalar]) -> Vector {
    let mut out = Vec::with_capacity(r.alg.dim() * r.vdim);
    for i in 0..r.alg.dim() {
        let mut col = r.rho[i].mul_vec(w).expect("vdim");
        let m = r.mu[i].mul_vec(w).expect("vdim");
        axpy(&mut col, &num_traits::One::one(), &m);
        out.extend(col);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{a1, a2, dual_numbers};
    use crate::ratlinalg::{frac, int, unit_vec};

    #[test]
    fn regular_representation_entries() {
        let r = Representation::regular(&a1()).unwrap();
        let mut expect = Matrix::zeros(2, 2);
        expect[(1, 0)] = int(1);
        assert_eq!(r.rho()[0], expect);
        let r2 = Representation::regular(&a2()).unwrap();
        assert_eq!(r2.mu()[0][(3, 2)], frac(4, 9));
        let z = Representation::regular(&crate::algebra::Algebra::zero(2)).unwrap();
        assert!(z.rho().iter().chain(z.mu()).all(Matrix::is_zero));
    }

    #[test]
    fn prejj_representation_checks() {
        assert!(Representation::regular(&a1()).unwrap().check().unwrap().holds);
        assert!(Representation::zero(&a2(), 3).check().unwrap().holds);
        let mut r = Representation::regular(&a2()).unwrap();
        r.mu_mut()[0] = Matrix::identity(4);
        let c = r.check().unwrap();
        assert!(!c.holds);
        assert!(c.witnesses.iter().any(|w| w.equation == RepEquation::MixedAction));
        r.rho_mut()[1] = Matrix::identity(4);
        let c = r.check().unwrap();
        assert!(c.witnesses.iter().any(|w| w.equation == RepEquation::JordanAction));
        let bad = crate::algebra::Algebra::from_constants("idem", 1, [(0, 0, 0, int(1))]).unwrap();
        assert!(matches!(Representation::zero(&bad, 1).check(), Err(Error::NotPreJJ(_))));
    }

    #[test]
    fn jj_representation_checks() {
        let c = a1().sub_adjacent().unwrap();
        assert!(JJRepresentation::regular(&c).unwrap().check().unwrap().0);
        assert!(JJRepresentation::zero(&c, 2).check().unwrap().0);
        let ideal = Subspace::span(2, &[unit_vec(2, 1)]).unwrap();
        let r = ideal_representation(&c, &ideal).unwrap();
        assert_eq!(r.vdim(), 1);
        assert!(r.check().unwrap().0);
        let not_ideal = Subspace::span(2, &[unit_vec(2, 0)]).unwrap();
        assert!(matches!(ideal_representation(&c, &not_ideal), Err(Error::NotIdeal(_))));
        assert!(matches!(JJRepresentation::regular(&a2()), Err(Error::NotJJ(_))));
    }

    #[test]
    fn dual_representations() {
        let z = Representation::zero(&a1(), 2).dual().unwrap();
        assert!(z.rho().iter().all(Matrix::is_zero));
        let d = Representation::regular(&a1()).unwrap().dual().unwrap();
        assert!(d.check().unwrap().holds);
        assert_eq!(d.rho()[0], Representation::regular(&a1()).unwrap().rho()[0].transpose());
    }

    #[test]
    fn semidirect_products() {
        let a = a1();
        let s = semidirect_product(&a, &Representation::regular(&a).unwrap()).unwrap();
        assert_eq!(s.dim(), 4);
        assert!(s.check_axioms().left_prejj);

        let s0 = semidirect_product(&a, &Representation::zero(&a, 2)).unwrap();
        assert_eq!(s0.nonzero_constants(), a.nonzero_constants());

        let mut bad = Representation::regular(&a).unwrap();
        bad.rho_mut()[1][(0, 0)] = int(1);
        assert!(!bad.check().unwrap().holds);
        let sb = semidirect_product(&a, &bad).unwrap();
        assert!(!sb.check_axioms().left_prejj);
    }

    #[test]
    fn sum_representations() {
        let s = Representation::regular(&a1()).unwrap().sum_representation().unwrap();
        assert_eq!(s.rho()[0][(1, 0)], int(2));
        let z = Representation::zero(&a1(), 3).sum_representation().unwrap();
        assert!(z.rho().iter().all(Matrix::is_zero));
        let s2 = Representation::regular(&a2()).unwrap().sum_representation().unwrap();
        assert!(s2.check().unwrap().0);
    }

    #[test]
    fn morphism_induced_representations() {
        let a = a1();
        let id = representation_from_morphism(&Matrix::identity(2), &a, &a).unwrap();
        assert_eq!(id, Representation::regular(&a).unwrap());
        let z = representation_from_morphism(&Matrix::zeros(2, 2), &a, &a).unwrap();
        assert!(z.rho().iter().chain(z.mu()).all(Matrix::is_zero));

        // x ↦ x ⊗ f1 into A1 ⊗ D
        let t = a.tensor_with_comm_assoc(&dual_numbers()).unwrap();
        let mut f = Matrix::zeros(4, 2);
        f[(0, 0)] = int(1);
        f[(2, 1)] = int(1);
        let r = representation_from_morphism(&f, &a, &t).unwrap();
        assert_eq!(r.vdim(), 4);
        assert!(r.check().unwrap().holds);

        let g = Matrix::from_i64(&[&[1, 0], &[0, 2]]);
        assert!(matches!(
            representation_from_morphism(&g, &a, &a),
            Err(Error::NotMorphism(_))
        ));

        let c = a.sub_adjacent().unwrap();
        let jj = jj_representation_from_morphism(&Matrix::identity(2), &c, &c).unwrap();
        assert!(jj.check().unwrap().0);
    }

    #[test]
    fn invariant_subspace_examples() {
        let r = Representation::regular(&a1()).unwrap().invariant_subspaces();
        assert_eq!(r.r_aas, Subspace::full(2));
        let z = Representation::zero(&a2(), 3).invariant_subspaces();
        assert_eq!(z.inv, Subspace::full(3));
        assert_eq!(z.l_aas, Subspace::full(3));
        let r2 = Representation::regular(&a2()).unwrap().invariant_subspaces();
        let expect = Subspace::span(4, &[unit_vec(4, 1), unit_vec(4, 3)]).unwrap();
        assert_eq!(r2.inv, expect);
        assert!(r2.r_inv.is_subspace_of(&r2.r_aas));
        assert!(r2.l_inv.is_subspace_of(&r2.l_aas));
    }
}
