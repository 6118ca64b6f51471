//! Representations: the regular one, its dual, semidirect products, and a
//! valid representation whose dual is not defined.

use pjj::algebra::Algebra;
use pjj::catalog::a2;
use pjj::ratlinalg::{int, Matrix};
use pjj::representation::{semidirect_product, Representation};

fn main() -> pjj::Result<()> {
    let a = a2();
    let reg = Representation::regular(&a)?;
    println!("regular rep of {} valid: {}", a.name(), reg.check()?.holds);

    let dual = reg.dual()?;
    println!("dual valid: {}", dual.check()?.holds);

    let semi = semidirect_product(&a, &reg)?;
    println!("{} has dim {} and left_prejj = {}", semi.name(), semi.dim(), semi.is_left_prejj());

    let inv = reg.invariant_subspaces();
    println!("dim V^inv = {}, dim V^r.Aas = {}", inv.inv.dim(), inv.r_aas.dim());

    // Zero algebra on Q^2 acting on Q^3 with non-commuting right actions.
    let e = |r: usize, c: usize| {
        let mut m = Matrix::zeros(3, 3);
        m[(r, c)] = int(1);
        m
    };
    let z = Algebra::zero(2);
    let r = Representation::new(z, 3, vec![e(1, 2).scale(&int(-1)), Matrix::zeros(3, 3)], vec![e(1, 2), e(0, 1)])?;
    println!("\nrepresentation valid: {}", r.check()?.holds);
    match r.dual() {
        Ok(_) => println!("dual defined"),
        Err(e) => println!("dual refused: {e}"),
    }
    Ok(())
}
