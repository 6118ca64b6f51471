//! Reading and writing the plain-text algebra, map, representation and
//! cochain formats.

use pjj::catalog::a2;
use pjj::io::{parse_algebra, parse_rep, serialize_algebra, serialize_cochain, serialize_map, serialize_rep, RepFile};
use pjj::ratlinalg::Matrix;
use pjj::representation::Representation;

const TEXT: &str = "\
# comments run to the end of the line
algebra A1
dim 2
1 1 2 1   # e1·e1 = e2
end
";

fn main() -> pjj::Result<()> {
    let a = parse_algebra(TEXT)?;
    println!("parsed {} of dim {}\n", a.name(), a.dim());

    print!("{}", serialize_algebra(&a2()));
    print!("{}", serialize_map("id2", &Matrix::identity(2)));

    let r = Representation::regular(&a2())?;
    let text = serialize_rep(&RepFile::from_representation("A2_regular", &r));
    print!("{text}");
    let back = parse_rep(&text)?.into_representation(&a2())?;
    println!("# round trip equal: {}\n", back.rho() == r.rho() && back.mu() == r.mu());

    print!("{}", serialize_cochain(&pjj::deformation::product_cochain(&a)));

    match parse_algebra("algebra X\ndim 2\n1 1 3 1\nend\n") {
        Ok(_) => println!("unexpected success"),
        Err(e) => println!("\nerror: {e}"),
    }
    Ok(())
}
