//! Derivations, antiderivations and inner antiderivations with values in a
//! representation, and the (anti)commutator structure on the adjoint spaces.
//!
//! A map `D: A → V` is stored as a `vdim × dim` matrix whose column `j` is
//! `D(e_j)`; as a vector it is flattened column-major, so entry `(r, j)` sits
//! at index `j·vdim + r`.

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::ratlinalg::{kernel_basis, unit_vec, Matrix, Scalar, Subspace, Vector};
use crate::representation::{inner_map_images, Representation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DerivationKind {
    /// `D(u·v) = μ(v)D(u) + ρ(u)D(v)`
    Derivation,
    /// `D(u·v) = −μ(v)D(u) − ρ(u)D(v)`
    Antiderivation,
    /// `u ↦ ρ(u)w + μ(u)w` for `w` in the right associative-annihilator part.
    InnerAntiderivation,
}

impl fmt::Display for DerivationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DerivationKind::Derivation => "der",
            DerivationKind::Antiderivation => "ader",
            DerivationKind::InnerAntiderivation => "iader",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationSpace {
    kind: DerivationKind,
    rep: Representation,
    basis: Subspace,
}

impl DerivationSpace {
    pub fn kind(&self) -> DerivationKind {
        self.kind
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    /// The space as a subspace of `Q^(vdim·dim)`.
    pub fn subspace(&self) -> &Subspace {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn basis_maps(&self) -> Vec<Matrix> {
        let (v, d) = (self.rep.vdim(), self.rep.alg().dim());
        self.basis.basis().iter().map(|b| unflatten_map(b, v, d)).collect()
    }

    pub fn contains_map(&self, m: &Matrix) -> Result<bool> {
        let (v, d) = (self.rep.vdim(), self.rep.alg().dim());
        if m.rows() != v || m.cols() != d {
            return Err(Error::ShapeMismatch {
                left: (v, d),
                right: (m.rows(), m.cols()),
            });
        }
        self.basis.contains(&flatten_map(m))
    }
}

/// Column-major flattening.
pub fn flatten_map(m: &Matrix) -> Vector {
    m.columns().into_iter().flatten().collect()
}

/// Inverse of [`flatten_map`]; `v.len()` must be `rows·cols`.
pub fn unflatten_map(v: &[Scalar], rows: usize, cols: usize) -> Matrix {
    assert_eq!(v.len(), rows * cols, "flattened map has wrong length");
    let columns: Vec<Vector> = v.chunks(rows.max(1)).map(<[Scalar]>::to_vec).collect();
    if rows == 0 {
        return Matrix::zeros(0, cols);
    }
    Matrix::from_columns(&columns, rows).expect("chunks have `rows` entries")
}

/// Kernel of `D ↦ (D(e_i·e_j) − s·μ(e_j)D(e_i) − s·ρ(e_i)D(e_j))_{i,j}`.
fn signed_derivation_subspace(r: &Representation, s: &Scalar) -> Subspace {
    let (d, vd) = (r.alg().dim(), r.vdim());
    let n = d * vd;
    let mut rows: Vec<Vector> = Vec::with_capacity(d * d * vd);
    for i in 0..d {
        for j in 0..d {
            let p = r.alg().basis_product(i, j);
            for o in 0..vd {
                let mut row = vec![Scalar::zero(); n];
                for (k, pk) in p.iter().enumerate() {
                    if !pk.is_zero() {
                        row[k * vd + o] += pk;
                    }
                }
                for c in 0..vd {
                    let m = &r.mu()[j][(o, c)];
                    if !m.is_zero() {
                        row[i * vd + c] -= s * m;
                    }
                    let q = &r.rho()[i][(o, c)];
                    if !q.is_zero() {
                        row[j * vd + c] -= s * q;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let m = Matrix::from_rows(rows, n).expect("rows have length n");
    kernel_basis(&m)
}

pub fn derivation_space(r: &Representation) -> Result<DerivationSpace> {
    r.require_valid()?;
    Ok(DerivationSpace {
        kind: DerivationKind::Derivation,
        rep: r.clone(),
        basis: signed_derivation_subspace(r, &Scalar::one()),
    })
}

pub fn antiderivation_space(r: &Representation) -> Result<DerivationSpace> {
    r.require_valid()?;
    Ok(DerivationSpace {
        kind: DerivationKind::Antiderivation,
        rep: r.clone(),
        basis: signed_derivation_subspace(r, &-Scalar::one()),
    })
}

/// Image of `w ↦ D_w` on the right associative-annihilator subspace.
pub fn inner_antiderivation_space(r: &Representation) -> Result<DerivationSpace> {
    r.require_valid()?;
    let n = r.alg().dim() * r.vdim();
    let raas = r.invariant_subspaces().r_aas;
    let images: Vec<Vector> = raas.basis().iter().map(|w| inner_map_images(r, w)).collect();
    let basis = Subspace::span(n, &images)?;
    let ader = signed_derivation_subspace(r, &-Scalar::one());
    if !basis.is_subspace_of(&ader) {
        return Err(Error::ContractViolated(
            "an inner antiderivation is not an antiderivation".into(),
        ));
    }
    Ok(DerivationSpace {
        kind: DerivationKind::InnerAntiderivation,
        rep: r.clone(),
        basis,
    })
}

/// Defect of the defining identity of `kind` at each basis pair; empty when
/// `m` satisfies it everywhere. Inner antiderivations are tested as
/// antiderivations.
pub fn identity_defects(r: &Representation, kind: DerivationKind, m: &Matrix) -> Result<Vec<(usize, usize, Vector)>> {
    let d = r.alg().dim();
    if m.rows() != r.vdim() || m.cols() != d {
        return Err(Error::ShapeMismatch {
            left: (r.vdim(), d),
            right: (m.rows(), m.cols()),
        });
    }
    let s = match kind {
        DerivationKind::Derivation => Scalar::one(),
        _ => -Scalar::one(),
    };
    let cols = m.columns();
    let mut out = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let mut lhs = m.mul_vec(r.alg().basis_product(i, j))?;
            let a = r.mu()[j].mul_vec(&cols[i])?;
            let b = r.rho()[i].mul_vec(&cols[j])?;
            for ((l, x), y) in lhs.iter_mut().zip(a).zip(b) {
                *l -= &s * (x + y);
            }
            if lhs.iter().any(|x| !x.is_zero()) {
                out.push((i, j, lhs));
            }
        }
    }
    Ok(out)
}

/// `D1·D2 − D2·D1`.
pub fn bracket(d1: &Matrix, d2: &Matrix) -> Result<Matrix> {
    d1.mul(d2)?.sub(&d2.mul(d1)?)
}

/// `D1·D2 + D2·D1`.
pub fn anticommutator(d1: &Matrix, d2: &Matrix) -> Result<Matrix> {
    d1.mul(d2)?.add(&d2.mul(d1)?)
}

fn as_pair_kind(k: DerivationKind) -> DerivationKind {
    match k {
        DerivationKind::InnerAntiderivation => DerivationKind::Antiderivation,
        other => other,
    }
}

/// Closure table for commutators of adjoint (anti)derivations:
/// two of the same kind give a derivation, mixed kinds give an antiderivation.
pub fn bracket_kind(k1: DerivationKind, k2: DerivationKind) -> DerivationKind {
    if as_pair_kind(k1) == as_pair_kind(k2) {
        DerivationKind::Derivation
    } else {
        DerivationKind::Antiderivation
    }
}

/// Computes `[d1, d2]` for adjoint (anti)derivations of `a` of the stated
/// kinds, checks the inputs and the result against the computed spaces, and
/// returns the bracket together with its kind.
pub fn classify_bracket(
    a: &Algebra,
    k1: DerivationKind,
    d1: &Matrix,
    k2: DerivationKind,
    d2: &Matrix,
) -> Result<(Matrix, DerivationKind)> {
    let r = Representation::regular(a)?;
    let der = derivation_space(&r)?;
    let ader = antiderivation_space(&r)?;
    let space = |k: DerivationKind| match as_pair_kind(k) {
        DerivationKind::Derivation => &der,
        _ => &ader,
    };
    for (n, (k, d)) in [(k1, d1), (k2, d2)].into_iter().enumerate() {
        if !space(k).contains_map(d)? {
            return Err(Error::MembershipFailed(format!("input D{} is not a {k}", n + 1)));
        }
    }
    let b = bracket(d1, d2)?;
    let kind = bracket_kind(k1, k2);
    if !space(kind).contains_map(&b)? {
        return Err(Error::MembershipFailed(format!(
            "[D1, D2] of a ({k1}, {k2}) pair is not a {kind}"
        )));
    }
    Ok((b, kind))
}

/// Outcome of [`anticommutator_condition`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnticommutatorReport {
    /// `({D1,D2}u)·v + u·({D1,D2}v) + (D1u)·(D2v) + (D2u)·(D1v) = 0` on all basis pairs.
    pub antider_condition: bool,
    /// `(D1u)·(D2v) + (D2u)·(D1v) = 0` on all basis pairs.
    pub der_condition: bool,
    /// Direct membership of `{D1,D2}` in the antiderivation space.
    pub is_ader: bool,
    /// Direct membership of `{D1,D2}` in the derivation space.
    pub is_der: bool,
    /// Kinds of `D1` and `D2` detected by membership (`None` if neither).
    pub kinds: (Option<DerivationKind>, Option<DerivationKind>),
}

fn detect_kind(der: &DerivationSpace, ader: &DerivationSpace, m: &Matrix) -> Result<Vec<DerivationKind>> {
    let mut out = Vec::new();
    if der.contains_map(m)? {
        out.push(DerivationKind::Derivation);
    }
    if ader.contains_map(m)? {
        out.push(DerivationKind::Antiderivation);
    }
    Ok(out)
}

/// Evaluates the two anticommutator conditions for square maps on `a` and,
/// whenever `D1` and `D2` are each a derivation or an antiderivation, checks
/// them against direct membership of `{D1, D2}`:
///
/// * same kinds: `{D1,D2} ∈ ADer ⇔ antider_condition`, `{D1,D2} ∈ Der ⇔ der_condition`;
/// * mixed kinds: `{D1,D2} ∈ ADer ⇔ der_condition`, `{D1,D2} ∈ Der ⇔ antider_condition`.
pub fn anticommutator_condition(d1: &Matrix, d2: &Matrix, a: &Algebra) -> Result<AnticommutatorReport> {
    let n = a.dim();
    for m in [d1, d2] {
        if m.rows() != n || m.cols() != n {
            return Err(Error::ShapeMismatch {
                left: (n, n),
                right: (m.rows(), m.cols()),
            });
        }
    }
    let r = Representation::regular(a)?;
    let der = derivation_space(&r)?;
    let ader = antiderivation_space(&r)?;
    let anti = anticommutator(d1, d2)?;

    let (c1, c2, ca) = (d1.columns(), d2.columns(), anti.columns());
    let mut antider_condition = true;
    let mut der_condition = true;
    for u in 0..n {
        for v in 0..n {
            let eu = unit_vec(n, u);
            let ev = unit_vec(n, v);
            let mut cross = a.mul_unchecked(&c1[u], &c2[v]);
            let x = a.mul_unchecked(&c2[u], &c1[v]);
            for (c, y) in cross.iter_mut().zip(x) {
                *c += y;
            }
            if cross.iter().any(|c| !c.is_zero()) {
                der_condition = false;
            }
            let p = a.mul_unchecked(&ca[u], &ev);
            let q = a.mul_unchecked(&eu, &ca[v]);
            let total_nonzero = cross
                .iter()
                .zip(p)
                .zip(q)
                .any(|((c, p), q)| !(c + p + q).is_zero());
            if total_nonzero {
                antider_condition = false;
            }
        }
    }
    let is_ader = ader.contains_map(&anti)?;
    let is_der = der.contains_map(&anti)?;
    let k1 = detect_kind(&der, &ader, d1)?;
    let k2 = detect_kind(&der, &ader, d2)?;
    for &a1 in &k1 {
        for &a2 in &k2 {
            let (ader_pred, der_pred) = if a1 == a2 {
                (antider_condition, der_condition)
            } else {
                (der_condition, antider_condition)
            };
            if ader_pred != is_ader || der_pred != is_der {
                return Err(Error::ConditionMembershipMismatch(format!(
                    "kinds ({a1}, {a2}): predicted ader={ader_pred} der={der_pred}, \
                     membership ader={is_ader} der={is_der}"
                )));
            }
        }
    }
    Ok(AnticommutatorReport {
        antider_condition,
        der_condition,
        is_ader,
        is_der,
        kinds: (k1.first().copied(), k2.first().copied()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{a1, a2};
    use crate::ratlinalg::int;

    fn reg(a: &Algebra) -> Representation {
        Representation::regular(a).unwrap()
    }

    #[test]
    fn flattening_roundtrip() {
        let m = Matrix::from_i64(&[&[1, 2, 3], &[4, 5, 6]]);
        let v = flatten_map(&m);
        assert_eq!(v, [1, 4, 2, 5, 3, 6].map(int).to_vec());
        assert_eq!(unflatten_map(&v, 2, 3), m);
    }

    #[test]
    fn zero_algebra_spaces() {
        let z = Algebra::zero(2);
        let r = Representation::zero(&z, 3);
        assert_eq!(derivation_space(&r).unwrap().dim(), 6);
        assert_eq!(antiderivation_space(&reg(&z)).unwrap().dim(), 4);
        assert_eq!(inner_antiderivation_space(&reg(&z)).unwrap().dim(), 0);
    }

    #[test]
    fn a1_spaces() {
        let r = reg(&a1());
        let der = derivation_space(&r).unwrap();
        assert_eq!(der.dim(), 2);
        let ader = antiderivation_space(&r).unwrap();
        assert_eq!(ader.dim(), 2);
        for m in ader.basis_maps() {
            assert!(m[(0, 1)].is_zero());
            assert_eq!(m[(1, 1)], int(-2) * &m[(0, 0)]);
        }
        let iader = inner_antiderivation_space(&r).unwrap();
        assert_eq!(iader.dim(), 1);
        let mut expect = Matrix::zeros(2, 2);
        expect[(1, 0)] = int(2);
        assert!(iader.contains_map(&expect).unwrap());
    }

    #[test]
    fn a2_spaces() {
        let r = reg(&a2());
        assert_eq!(antiderivation_space(&r).unwrap().dim(), 7);
        let iader = inner_antiderivation_space(&r).unwrap();
        assert_eq!(iader.dim(), 2);
        for m in iader.basis_maps() {
            assert_eq!(m[(1, 0)], m[(3, 2)]);
            for (i, j) in [(0, 0), (0, 1), (1, 1), (2, 0), (3, 1), (3, 3)] {
                assert!(m[(i, j)].is_zero());
            }
        }
    }

    #[test]
    fn basis_maps_satisfy_identities() {
        for a in crate::catalog::prejj_catalog() {
            let r = reg(&a);
            for s in [derivation_space(&r).unwrap(), antiderivation_space(&r).unwrap()] {
                for m in s.basis_maps() {
                    assert!(identity_defects(&r, s.kind(), &m).unwrap().is_empty());
                }
            }
        }
    }

    #[test]
    fn bracket_table() {
        let a = a1();
        let ader = antiderivation_space(&reg(&a)).unwrap().basis_maps();
        let der = derivation_space(&reg(&a)).unwrap().basis_maps();
        let (b, k) = classify_bracket(
            &a,
            DerivationKind::Antiderivation,
            &ader[0],
            DerivationKind::Antiderivation,
            &ader[1],
        )
        .unwrap();
        assert_eq!(k, DerivationKind::Derivation);
        assert_eq!(b, bracket(&ader[0], &ader[1]).unwrap());
        let (_, k) = classify_bracket(
            &a,
            DerivationKind::Antiderivation,
            &ader[0],
            DerivationKind::Derivation,
            &der[0],
        )
        .unwrap();
        assert_eq!(k, DerivationKind::Antiderivation);
        assert!(bracket(&der[0], &der[0]).unwrap().is_zero());
        assert!(matches!(
            classify_bracket(
                &a,
                DerivationKind::Derivation,
                &ader[0],
                DerivationKind::Derivation,
                &der[0]
            ),
            Err(Error::MembershipFailed(_))
        ));
    }

    #[test]
    fn anticommutator_conditions() {
        let z = Matrix::zeros(2, 2);
        let rep = anticommutator_condition(&z, &z, &a1()).unwrap();
        assert!(rep.antider_condition && rep.der_condition && rep.is_ader && rep.is_der);

        let d = Matrix::from_i64(&[&[1, 0], &[0, -2]]);
        let rep = anticommutator_condition(&d, &d, &a1()).unwrap();
        assert!(!rep.der_condition && !rep.is_der && !rep.is_ader);

        let zero = Algebra::zero(2);
        let rep = anticommutator_condition(&d, &Matrix::identity(2), &zero).unwrap();
        assert!(rep.antider_condition && rep.der_condition);
    }
}
