//! Small named algebras used throughout the examples and tests.

use crate::algebra::Algebra;
use crate::ratlinalg::{frac, int};

/// `A1`: basis `{e1, e2}`, only nonzero product `e1·e1 = e2`.
pub fn a1() -> Algebra {
    Algebra::from_constants("A1", 2, [(0, 0, 1, int(1))]).expect("valid constants")
}

/// `A2`: basis `{e1, …, e4}` with `e1·e1 = ½e2`, `e1·e3 = 5/9 e4`, `e3·e1 = 4/9 e4`.
pub fn a2() -> Algebra {
    Algebra::from_constants(
        "A2",
        4,
        [
            (0, 0, 1, frac(1, 2)),
            (0, 2, 3, frac(5, 9)),
            (2, 0, 3, frac(4, 9)),
        ],
    )
    .expect("valid constants")
}

/// The 2-dimensional commutative associative algebra `f1·f1 = f1`,
/// `f1·f2 = f2·f1 = f2`, `f2·f2 = 0` (dual numbers).
pub fn dual_numbers() -> Algebra {
    Algebra::from_constants(
        "D",
        2,
        [(0, 0, 0, int(1)), (0, 1, 1, int(1)), (1, 0, 1, int(1))],
    )
    .expect("valid constants")
}

/// Every named left pre-Jacobi-Jordan algebra shipped with the crate.
pub fn prejj_catalog() -> Vec<Algebra> {
    vec![
        Algebra::zero(1),
        Algebra::zero(2),
        a1(),
        a2(),
        a1().tensor_with_comm_assoc(&dual_numbers())
            .expect("A1 ⊗ D is defined"),
    ]
}
