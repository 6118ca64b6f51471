//! Checks the algebra identities on the catalog and prints witnesses where
//! they fail.
//!
//! ```text
//! cargo run --example axioms
//! ```

use pjj::catalog::prejj_catalog;

fn main() {
    for a in prejj_catalog() {
        let r = a.check_axioms();
        println!(
            "{:<12} dim {}  commutative={} anti_associative={} left={} right={} jacobi_jordan={} ({})",
            a.name(),
            a.dim(),
            r.commutative,
            r.anti_associative,
            r.left_prejj,
            r.right_prejj,
            r.jacobi_jordan,
            r.jacobian_product,
        );
        for w in &r.witnesses {
            println!("    {w}");
        }
    }

    // The sub-adjacent product x∗y = x·y + y·x is always Jacobi-Jordan.
    let jj = pjj::catalog::a2().sub_adjacent().unwrap();
    println!("\n{jj}");
    println!("jacobi_jordan = {}", jj.is_jacobi_jordan());
}
