//! Cohomology in low degrees and the zigzag identity.

use pjj::catalog::{a1, a2};
use pjj::cohomology::{cohomology, scalar_cohomology_h1, verify_zigzag};
use pjj::representation::Representation;

fn main() -> pjj::Result<()> {
    for a in [a1(), a2()] {
        let reps = [
            ("regular", Representation::regular(&a)?),
            ("scalar", Representation::scalar(&a)),
            ("dual", Representation::regular(&a)?.dual()?),
        ];
        for (label, r) in &reps {
            let dims: Vec<String> = (0..=2)
                .map(|k| cohomology(r, k).map(|h| format!("H{k}={} ({}/{})", h.dim_h, h.dim_z, h.dim_b)))
                .collect::<pjj::Result<_>>()?;
            let zigzag = (1..=3).all(|n| verify_zigzag(r, n).holds);
            println!("{} {label:<8} {}  zigzag={zigzag}", a.name(), dims.join("  "));
        }
    }

    let h = scalar_cohomology_h1(&a2())?;
    println!("\nH1(A2, K) representatives:");
    for c in &h.representatives {
        println!("  {:?}", c.values().iter().map(ToString::to_string).collect::<Vec<_>>());
    }
    Ok(())
}
