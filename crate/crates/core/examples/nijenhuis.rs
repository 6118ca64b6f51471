//! Nijenhuis operators, the trivial deformations they generate, and the
//! Rota-Baxter identities they are tied to.

use pjj::catalog::a1;
use pjj::deformation::{
    nijenhuis_algebra_of_operators, nijenhuis_check, nijenhuis_jj_check, nijenhuis_trivial_deformation,
    rota_baxter_check, search_nijenhuis,
};
use pjj::ratlinalg::{frac, int, Matrix};

fn main() -> pjj::Result<()> {
    let a = a1();
    let mut n = Matrix::zeros(2, 2);
    n[(1, 0)] = int(1); // e1 ↦ e2

    println!("N =\n{n}");
    println!("Nijenhuis: {}", nijenhuis_check(&a, &n)?.holds);
    println!("Rota-Baxter weight 0: {}", rota_baxter_check(&a, &n, &int(0))?.holds);

    let triv = nijenhuis_trivial_deformation(&a, &n)?;
    for (t, ok) in &triv.trivial_at {
        println!("  Id + {t}N trivialises: {ok}");
    }

    let fam = nijenhuis_algebra_of_operators(&a, &n)?;
    for l in [int(0), int(1), int(-2), frac(5, 7)] {
        println!("  N + {l} Id Nijenhuis: {}", fam.shift_ok(&l)?);
    }
    println!("on the sub-adjacent algebra: {}", nijenhuis_jj_check(&a.sub_adjacent()?, &n)?.holds);

    let found = search_nijenhuis(&a, 81);
    println!("\n{} of the 81 maps with entries in {{-1, 0, 1}} are Nijenhuis on A1", found.len());
    Ok(())
}
