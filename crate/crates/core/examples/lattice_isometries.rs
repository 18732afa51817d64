//! The four Gram matrices M_{α,β} and explicit unimodular changes of basis.
//!
//! cargo run --example lattice_isometries

use hassett_cubics::lattices;
use hassett_cubics::Result;

fn main() -> Result<()> {
    let cases = [(0u8, 0u8), (0, 1), (1, 0), (1, 1)];
    for (a, b) in cases {
        let m = lattices::gram_m(a, b)?;
        println!("M_{{{a},{b}}}  positive definite: {}\n{m}", m.is_positive_definite());
    }
    for t in &cases[1..] {
        let u = lattices::isometry_to((0, 0), *t)?;
        println!("(0,0) → {t:?}: det {}  Uᵀ M U = M': {}", u.determinant(), u.check()?);
        for row in &u.matrix {
            println!("  {}", row.iter().map(|x| format!("{x:>3}")).collect::<String>());
        }
    }
    let f = lattices::induced_form_f();
    println!("discriminant pairing on the orthogonal complement: {f:?}");
    Ok(())
}
