//! Derivation, antiderivation and inner antiderivation spaces, and the kinds
//! of their brackets.

use pjj::catalog::{a1, a2};
use pjj::derivation::{
    antiderivation_space, bracket_kind, classify_bracket, derivation_space, inner_antiderivation_space,
    DerivationKind,
};
use pjj::representation::Representation;

fn main() -> pjj::Result<()> {
    for a in [a1(), a2()] {
        let r = Representation::regular(&a)?;
        let der = derivation_space(&r)?;
        let ader = antiderivation_space(&r)?;
        let iader = inner_antiderivation_space(&r)?;
        println!("{}: dim Der = {}, dim ADer = {}, dim IADer = {}", a.name(), der.dim(), ader.dim(), iader.dim());
        for (n, m) in ader.basis_maps().iter().enumerate() {
            println!("  antiderivation {}:\n{m}", n + 1);
        }
    }

    use DerivationKind::*;
    for k1 in [Derivation, Antiderivation] {
        for k2 in [Derivation, Antiderivation] {
            println!("[{k1}, {k2}] is a {}", bracket_kind(k1, k2));
        }
    }

    let a = a2();
    let ader = antiderivation_space(&Representation::regular(&a)?)?.basis_maps();
    let (b, kind) = classify_bracket(&a, Antiderivation, &ader[0], Antiderivation, &ader[5])?;
    println!("\n[D1, D6] ({kind}):\n{b}");
    Ok(())
}
