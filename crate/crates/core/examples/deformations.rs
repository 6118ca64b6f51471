//! Linear deformations: checking a 2-cochain, instantiating the deformed
//! product and locating its cohomology class.

use pjj::catalog::a1;
use pjj::cohomology::Cochain;
use pjj::deformation::{check_deformation, deformed_algebra, h2_class, t_samples};
use pjj::ratlinalg::int;

fn main() -> pjj::Result<()> {
    let a = a1();
    // ω(e1, e1) = e1: a 2-cochain on A1 with values in A1.
    let mut w = Cochain::zero(2, 2, 2);
    w.set(&[0, 0], &[int(1), int(0)])?;

    let c = check_deformation(&a, &w)?;
    println!("cocycle={} prejj_square={} generates={}", c.is_two_cocycle, c.is_prejj_square, c.generates);
    for (x, y, z, defect) in c.cocycle_witnesses.iter().chain(&c.prejj_witnesses).take(4) {
        let defect: Vec<String> = defect.iter().map(ToString::to_string).collect();
        println!("  fails at (e{}, e{}, e{}): ({})", x + 1, y + 1, z + 1, defect.join(", "));
    }

    // ω(e1, e1) = e2 is the product itself and always generates.
    let mut w = Cochain::zero(2, 2, 2);
    w.set(&[0, 0], &[int(0), int(1)])?;
    let c = check_deformation(&a, &w)?;
    println!("\nω = product: generates={}", c.generates);
    for t in t_samples() {
        let at = deformed_algebra(&a, &w, &t)?;
        println!("  t = {t:<4} left_prejj = {}", at.is_left_prejj());
    }
    println!("class in H2: {:?}", h2_class(&a, &w)?.iter().map(ToString::to_string).collect::<Vec<_>>());
    Ok(())
}
