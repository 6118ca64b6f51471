//! Linear deformations `x·_t y = x·y + t·ω(x,y)`, their equivalence, and
//! Nijenhuis and Rota-Baxter operators.
//!
//! The parameter `t` is never symbolic. Generation is decided by the two
//! `t`-free identities (the 2-cocycle condition and the pre-JJ condition on
//! `ω`), and identities that are polynomial in `t` of degree at most 3 are
//! spot-checked at the four points of [`t_samples`], which determine such a
//! polynomial.

use num_traits::{One, Zero};

use crate::algebra::{check_morphism, Algebra};
use crate::cohomology::{apply_delta, apply_differential, cohomology, Cochain};
use crate::error::{Error, Result};
use crate::ratlinalg::{add_vec, frac, int, solve, sub_vec, unit_vec, Matrix, Scalar, Vector};
use crate::representation::Representation;

/// `{1, −1, 1/2, 7/3}`.
pub fn t_samples() -> [Scalar; 4] {
    [int(1), int(-1), frac(1, 2), frac(7, 3)]
}

fn require_square(a: &Algebra, m: &Matrix) -> Result<()> {
    if m.rows() != a.dim() || m.cols() != a.dim() {
        return Err(Error::ShapeMismatch {
            left: (a.dim(), a.dim()),
            right: (m.rows(), m.cols()),
        });
    }
    Ok(())
}

fn require_bilinear(a: &Algebra, w: &Cochain) -> Result<()> {
    if w.degree() != 2 || w.alg_dim() != a.dim() || w.vdim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: w.vdim(),
        });
    }
    Ok(())
}

/// The bilinear map `ω` of a degree-2 cochain with values in `A`, read as an
/// algebra on the same basis.
pub fn cochain_algebra(w: &Cochain, name: impl Into<String>) -> Result<Algebra> {
    if w.degree() != 2 || w.alg_dim() != w.vdim() {
        return Err(Error::DimensionMismatch {
            expected: w.alg_dim(),
            found: w.vdim(),
        });
    }
    let d = w.alg_dim();
    let mut out = Algebra::zero(d).with_name(name);
    for i in 0..d {
        for j in 0..d {
            for (k, c) in w.get(&[i, j])?.iter().enumerate() {
                if !c.is_zero() {
                    out.set_constant(i, j, k, c.clone());
                }
            }
        }
    }
    Ok(out)
}

/// The product of an algebra as a degree-2 cochain with values in itself.
pub fn product_cochain(a: &Algebra) -> Cochain {
    let d = a.dim();
    let mut w = Cochain::zero(2, d, d);
    for i in 0..d {
        for j in 0..d {
            w.set(&[i, j], a.basis_product(i, j)).expect("in range");
        }
    }
    w
}

/// Basis triple `(x, y, z)` (0-based) with the nonzero defect found there.
pub type TripleWitness = (usize, usize, usize, Vector);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationCheck {
    pub is_two_cocycle: bool,
    pub is_prejj_square: bool,
    pub generates: bool,
    pub cocycle_witnesses: Vec<TripleWitness>,
    pub prejj_witnesses: Vec<TripleWitness>,
}

/// Decides whether `ω` generates a linear deformation of `a`.
///
/// The 2-cocycle identity
/// `ω(x,y)·z + ω(y,x)·z + ω(x·y,z) + ω(y·x,z) + ω(x,y·z) + ω(y,x·z) + x·ω(y,z) + y·ω(x,z) = 0`
/// is evaluated directly and also as `d²ω` for the regular representation;
/// the two evaluations must agree entrywise.
pub fn check_deformation(a: &Algebra, w: &Cochain) -> Result<DeformationCheck> {
    a.require_left_prejj()?;
    require_bilinear(a, w)?;
    let d = a.dim();
    let om = cochain_algebra(w, "omega")?;
    let reg = Representation::regular(a)?;
    let dw = apply_differential(&reg, w)?;

    let mut cocycle_witnesses = Vec::new();
    let mut prejj_witnesses = Vec::new();
    for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                let (ex, ey, ez) = (unit_vec(d, x), unit_vec(d, y), unit_vec(d, z));
                let xy = a.mul_unchecked(&ex, &ey);
                let yx = a.mul_unchecked(&ey, &ex);
                let yz = a.mul_unchecked(&ey, &ez);
                let xz = a.mul_unchecked(&ex, &ez);
                let terms = [
                    a.mul_unchecked(&om.mul_unchecked(&ex, &ey), &ez),
                    a.mul_unchecked(&om.mul_unchecked(&ey, &ex), &ez),
                    om.mul_unchecked(&xy, &ez),
                    om.mul_unchecked(&yx, &ez),
                    om.mul_unchecked(&ex, &yz),
                    om.mul_unchecked(&ey, &xz),
                    a.mul_unchecked(&ex, &om.mul_unchecked(&ey, &ez)),
                    a.mul_unchecked(&ey, &om.mul_unchecked(&ex, &ez)),
                ];
                let cocycle = terms.iter().fold(vec![Scalar::zero(); d], |acc, t| add_vec(&acc, t));
                if cocycle.as_slice() != dw.get(&[x, y, z])? {
                    return Err(Error::ContractViolated(format!(
                        "cocycle identity and d2 disagree at (e{}, e{}, e{})",
                        x + 1,
                        y + 1,
                        z + 1
                    )));
                }
                if cocycle.iter().any(|c| !c.is_zero()) {
                    cocycle_witnesses.push((x, y, z, cocycle));
                }
                let sq = add_vec(&om.anti_associator(&ex, &ey, &ez)?, &om.anti_associator(&ey, &ex, &ez)?);
                if sq.iter().any(|c| !c.is_zero()) {
                    prejj_witnesses.push((x, y, z, sq));
                }
            }
        }
    }
    let is_two_cocycle = cocycle_witnesses.is_empty();
    let is_prejj_square = prejj_witnesses.is_empty();
    Ok(DeformationCheck {
        is_two_cocycle,
        is_prejj_square,
        generates: is_two_cocycle && is_prejj_square,
        cocycle_witnesses,
        prejj_witnesses,
    })
}

/// Structure constants `c_{ij}^k + t·ω_{ij}^k`.
///
/// When `a` is left pre-JJ and `ω` generates, the result is asserted to be
/// left pre-JJ.
pub fn deformed_algebra(a: &Algebra, w: &Cochain, t: &Scalar) -> Result<Algebra> {
    require_bilinear(a, w)?;
    let d = a.dim();
    let mut out = a.clone().with_name(format!("{}_t", a.name()));
    for i in 0..d {
        for j in 0..d {
            for (k, c) in w.get(&[i, j])?.iter().enumerate() {
                if !c.is_zero() {
                    out.set_constant(i, j, k, a.constant(i, j, k) + t * c);
                }
            }
        }
    }
    if a.is_left_prejj() && check_deformation(a, w)?.generates && !out.is_left_prejj() {
        return Err(Error::ContractViolated(format!(
            "generating cochain instantiated at t = {t} is not left pre-JJ"
        )));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceCheck {
    /// `ω′(x,y) − ω(x,y) = −N(x)·y − x·N(y) + N(x·y)`
    pub linear_term: bool,
    /// `N(ω(x,y)) = N(x)·N(y) + ω′(N(x),y) + ω′(x,N(y))`
    pub quadratic_term: bool,
    /// `ω′(N(x),N(y)) = 0`
    pub cubic_term: bool,
    pub equivalent: bool,
}

/// Checks whether `Id + tN` is an equivalence from the deformation generated
/// by `w` to the one generated by `w2`, through the coefficients of `t`, `t²`
/// and `t³`. When it is, `w − w2 = δ¹N` is asserted, so the two cochains
/// are cohomologous.
pub fn check_equivalence(a: &Algebra, w: &Cochain, w2: &Cochain, n: &Matrix) -> Result<EquivalenceCheck> {
    require_square(a, n)?;
    for (name, c) in [("first", w), ("second", w2)] {
        if !check_deformation(a, c)?.generates {
            return Err(Error::NotGenerating(format!("the {name} cochain")));
        }
    }
    let d = a.dim();
    let om2 = cochain_algebra(w2, "omega2")?;
    let cols = n.columns();
    let (mut linear_term, mut quadratic_term, mut cubic_term) = (true, true, true);
    for x in 0..d {
        for y in 0..d {
            let (ex, ey) = (unit_vec(d, x), unit_vec(d, y));
            let (nx, ny) = (&cols[x], &cols[y]);
            let lhs = sub_vec(w2.get(&[x, y])?, w.get(&[x, y])?);
            let mut rhs = n.mul_vec(a.basis_product(x, y))?;
            rhs = sub_vec(&rhs, &a.mul_unchecked(nx, &ey));
            rhs = sub_vec(&rhs, &a.mul_unchecked(&ex, ny));
            linear_term &= lhs == rhs;

            let lhs = n.mul_vec(w.get(&[x, y])?)?;
            let mut rhs = a.mul_unchecked(nx, ny);
            rhs = add_vec(&rhs, &om2.mul_unchecked(nx, &ey));
            rhs = add_vec(&rhs, &om2.mul_unchecked(&ex, ny));
            quadratic_term &= lhs == rhs;

            cubic_term &= om2.mul_unchecked(nx, ny).iter().all(Zero::is_zero);
        }
    }
    let equivalent = linear_term && quadratic_term && cubic_term;
    if equivalent {
        let reg = Representation::regular(a)?;
        let dn = apply_delta(&reg, &Cochain::from_map(n))?;
        if sub_vec(w.values(), w2.values()) != dn.values() {
            return Err(Error::ContractViolated("equivalent deformations with w - w2 != delta N".into()));
        }
    }
    Ok(EquivalenceCheck {
        linear_term,
        quadratic_term,
        cubic_term,
        equivalent,
    })
}

/// Outcome of an operator identity checked on all basis pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorCheck {
    pub holds: bool,
    /// `(i, j, lhs − rhs)` for failing basis pairs (0-based).
    pub witnesses: Vec<(usize, usize, Vector)>,
}

/// `x·_N y = N(x)·y + x·N(y) − N(x·y)`, with no check on `N`.
pub fn nijenhuis_product(a: &Algebra, n: &Matrix) -> Result<Algebra> {
    require_square(a, n)?;
    let d = a.dim();
    let cols = n.columns();
    let mut out = Algebra::zero(d).with_name(format!("{}_N", a.name()));
    for i in 0..d {
        for j in 0..d {
            let mut p = add_vec(
                &a.mul_unchecked(&cols[i], &unit_vec(d, j)),
                &a.mul_unchecked(&unit_vec(d, i), &cols[j]),
            );
            p = sub_vec(&p, &n.mul_vec(a.basis_product(i, j))?);
            for (k, c) in p.into_iter().enumerate() {
                if !c.is_zero() {
                    out.set_constant(i, j, k, c);
                }
            }
        }
    }
    Ok(out)
}

/// `P(x)·P(y) = P(P(x)·y + x·P(y) + λ·P(x·y))` on basis pairs of `a`.
pub fn rota_baxter_check(a: &Algebra, p: &Matrix, weight: &Scalar) -> Result<OperatorCheck> {
    require_square(a, p)?;
    let d = a.dim();
    let cols = p.columns();
    let mut witnesses = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let lhs = a.mul_unchecked(&cols[i], &cols[j]);
            let mut inner = add_vec(
                &a.mul_unchecked(&cols[i], &unit_vec(d, j)),
                &a.mul_unchecked(&unit_vec(d, i), &cols[j]),
            );
            let pxy = p.mul_vec(a.basis_product(i, j))?;
            for (x, y) in inner.iter_mut().zip(pxy) {
                *x += weight * y;
            }
            let diff = sub_vec(&lhs, &p.mul_vec(&inner)?);
            if diff.iter().any(|c| !c.is_zero()) {
                witnesses.push((i, j, diff));
            }
        }
    }
    Ok(OperatorCheck {
        holds: witnesses.is_empty(),
        witnesses,
    })
}

/// `N(x)·N(y) = N(x·_N y)` on basis pairs of `a`.
pub fn nijenhuis_check(a: &Algebra, n: &Matrix) -> Result<OperatorCheck> {
    let prod = nijenhuis_product(a, n)?;
    let d = a.dim();
    let cols = n.columns();
    let mut witnesses = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let diff = sub_vec(&a.mul_unchecked(&cols[i], &cols[j]), &n.mul_vec(prod.basis_product(i, j))?);
            if diff.iter().any(|c| !c.is_zero()) {
                witnesses.push((i, j, diff));
            }
        }
    }
    Ok(OperatorCheck {
        holds: witnesses.is_empty(),
        witnesses,
    })
}

fn require_nijenhuis(a: &Algebra, n: &Matrix) -> Result<()> {
    let c = nijenhuis_check(a, n)?;
    match c.witnesses.first() {
        None => Ok(()),
        Some((i, j, _)) => Err(Error::NotNijenhuis(format!("fails at (e{}, e{})", i + 1, j + 1))),
    }
}

/// `A_N = (A, ·_N)` for a Nijenhuis operator `N`; asserts that `A_N` is left
/// pre-JJ and that `N: A_N → A` is a morphism.
pub fn deformed_product_n(a: &Algebra, n: &Matrix) -> Result<Algebra> {
    a.require_left_prejj()?;
    require_nijenhuis(a, n)?;
    let an = nijenhuis_product(a, n)?;
    if !an.is_left_prejj() {
        return Err(Error::ContractViolated("A_N is not left pre-JJ".into()));
    }
    if !check_morphism(n, &an, a)?.holds {
        return Err(Error::ContractViolated("N is not a morphism A_N -> A".into()));
    }
    Ok(an)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivialDeformation {
    /// `ω = δ¹N`, i.e. `ω(x,y) = x·_N y`.
    pub w: Cochain,
    pub check: DeformationCheck,
    /// `(t, (Id + tN)(x·_t y) = (Id + tN)x · (Id + tN)y on all basis pairs)`.
    pub trivial_at: Vec<(Scalar, bool)>,
}

/// The deformation generated by `δ¹N` for a Nijenhuis operator `N`, with the
/// checks that it generates and that `Id + tN` trivialises it at every sample `t`.
pub fn nijenhuis_trivial_deformation(a: &Algebra, n: &Matrix) -> Result<TrivialDeformation> {
    a.require_left_prejj()?;
    require_nijenhuis(a, n)?;
    let reg = Representation::regular(a)?;
    let w = apply_delta(&reg, &Cochain::from_map(n))?;
    if w != product_cochain(&nijenhuis_product(a, n)?) {
        return Err(Error::ContractViolated("delta N differs from the N-product".into()));
    }
    let check = check_deformation(a, &w)?;
    if !check.generates {
        return Err(Error::ContractViolated("delta N of a Nijenhuis operator does not generate".into()));
    }
    let mut trivial_at = Vec::new();
    for t in t_samples() {
        let at = deformed_algebra(a, &w, &t)?;
        let phi = Matrix::identity(a.dim()).add(&n.scale(&t))?;
        let ok = check_morphism(&phi, &at, a)?.holds;
        if !ok {
            return Err(Error::ContractViolated(format!("Id + tN is not a morphism at t = {t}")));
        }
        trivial_at.push((t, ok));
    }
    Ok(TrivialDeformation { w, check, trivial_at })
}

/// `N(u)∗N(v) = N(N(u)∗v + u∗N(v) − N(u∗v))`, where `∗` is the product of the
/// Jacobi-Jordan algebra `a` itself.
pub fn nijenhuis_jj_check(a: &Algebra, n: &Matrix) -> Result<OperatorCheck> {
    a.require_jacobi_jordan()?;
    nijenhuis_check(a, n)
}

/// A linear operator on `a` together with the operator identities that can be
/// derived from it.
#[derive(Clone, Debug)]
pub struct OperatorFamily {
    a: Algebra,
    n: Matrix,
    is_nijenhuis: bool,
}

pub fn nijenhuis_algebra_of_operators(a: &Algebra, n: &Matrix) -> Result<OperatorFamily> {
    let is_nijenhuis = nijenhuis_check(a, n)?.holds;
    Ok(OperatorFamily {
        a: a.clone(),
        n: n.clone(),
        is_nijenhuis,
    })
}

impl OperatorFamily {
    pub fn is_nijenhuis(&self) -> bool {
        self.is_nijenhuis
    }

    /// Whether `N + λ·Id` is Nijenhuis; asserted true whenever `N` is.
    pub fn shift_ok(&self, lambda: &Scalar) -> Result<bool> {
        let shifted = self.n.add(&Matrix::scalar_identity(self.a.dim(), lambda))?;
        let ok = nijenhuis_check(&self.a, &shifted)?.holds;
        if self.is_nijenhuis && !ok {
            return Err(Error::ContractViolated(format!("N + {lambda} Id is not Nijenhuis")));
        }
        Ok(ok)
    }

    /// For `N² = 0`: Nijenhuis ⇔ Rota-Baxter of weight 0 (asserted); returns the common value.
    pub fn nilpotent_equiv(&self) -> Result<bool> {
        if !self.n.mul(&self.n)?.is_zero() {
            return Err(Error::PreconditionNotNilpotent);
        }
        self.equivalent_to_rota_baxter(&Scalar::zero())
    }

    /// For `N² = N`: Nijenhuis ⇔ Rota-Baxter of weight −1 (asserted); returns the common value.
    pub fn idempotent_equiv(&self) -> Result<bool> {
        if self.n.mul(&self.n)? != self.n {
            return Err(Error::PreconditionNotIdempotent);
        }
        self.equivalent_to_rota_baxter(&-Scalar::one())
    }

    fn equivalent_to_rota_baxter(&self, weight: &Scalar) -> Result<bool> {
        let rb = rota_baxter_check(&self.a, &self.n, weight)?.holds;
        if rb != self.is_nijenhuis {
            return Err(Error::ContractViolated(format!(
                "Nijenhuis = {} but Rota-Baxter of weight {weight} = {rb}",
                self.is_nijenhuis
            )));
        }
        Ok(rb)
    }
}

/// Iterates square matrices with entries in `{−1, 0, 1}` in a fixed order,
/// starting from the zero matrix. The enumeration is exhaustive only when
/// `budget ≥ 3^(d²)`.
fn small_maps(d: usize, budget: usize) -> impl Iterator<Item = Matrix> {
    let total = 3usize.checked_pow((d * d) as u32).unwrap_or(usize::MAX);
    (0..total.min(budget)).map(move |mut code| {
        let mut m = Matrix::zeros(d, d);
        for r in 0..d {
            for c in 0..d {
                m[(r, c)] = match code % 3 {
                    0 => int(0),
                    1 => int(1),
                    _ => int(-1),
                };
                code /= 3;
            }
        }
        m
    })
}

/// Nijenhuis operators among the first `budget` maps with entries in
/// `{−1, 0, 1}`. Best effort: not exhaustive for large dimensions.
pub fn search_nijenhuis(a: &Algebra, budget: usize) -> Vec<Matrix> {
    small_maps(a.dim(), budget)
        .filter(|m| nijenhuis_check(a, m).map(|c| c.holds).unwrap_or(false))
        .collect()
}

/// The first `N` with entries in `{−1, 0, 1}`, among `budget` candidates,
/// making `w` and `w2` equivalent. Best effort: `None` does not prove
/// inequivalence.
pub fn search_equivalence(a: &Algebra, w: &Cochain, w2: &Cochain, budget: usize) -> Result<Option<Matrix>> {
    for m in small_maps(a.dim(), budget) {
        if check_equivalence(a, w, w2, &m)?.equivalent {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// Coordinates of the class of a 2-cocycle `w` in `H²(A, A)` with respect to
/// the representatives reported by the cohomology module.
pub fn h2_class(a: &Algebra, w: &Cochain) -> Result<Vector> {
    require_bilinear(a, w)?;
    let reg = Representation::regular(a)?;
    let h = cohomology(&reg, 2)?;
    if !h.z.contains(w.values())? {
        return Err(Error::NotGenerating("not a 2-cocycle".into()));
    }
    let mut cols: Vec<Vector> = h.representatives.iter().map(|c| c.values().to_vec()).collect();
    cols.extend(h.b.basis().iter().cloned());
    let m = Matrix::from_columns(&cols, w.values().len())?;
    let coords = solve(&m, w.values())?
        .ok_or_else(|| Error::ContractViolated("cocycle outside representatives + coboundaries".into()))?;
    Ok(coords[..h.dim_h].to_vec())
}

/// The cochain `Σ c_i·rep_i` for class coordinates `c`.
pub fn h2_representative(a: &Algebra, class: &[Scalar]) -> Result<Cochain> {
    let reg = Representation::regular(a)?;
    let h = cohomology(&reg, 2)?;
    if class.len() != h.dim_h {
        return Err(Error::DimensionMismatch {
            expected: h.dim_h,
            found: class.len(),
        });
    }
    let d = a.dim();
    let mut out = Cochain::zero(2, d, d).into_values();
    for (c, r) in class.iter().zip(&h.representatives) {
        for (o, x) in out.iter_mut().zip(r.values()) {
            *o += c * x;
        }
    }
    Cochain::new(2, d, d, out)
}
