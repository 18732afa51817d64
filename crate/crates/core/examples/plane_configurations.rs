//! Four planes in P^5, their intersection pattern, and the cubics through them.
//!
//! cargo run --example plane_configurations

use hassett_cubics::geometry::{self, monomial_name};
use hassett_cubics::json::parse_rational;
use hassett_cubics::Result;
use num_traits::Zero;

fn main() -> Result<()> {
    let pairs = [("0", "0"), ("0", "1"), ("1", "0"), ("1", "1"), ("2/3", "-5")];
    for (a, b) in pairs {
        let config = geometry::standard_config(&parse_rational(a).unwrap(), &parse_rational(b).unwrap())?;
        let r = geometry::dimension_report(&config)?;
        println!("a = {a}, b = {b}  →  (α, β) = ({}, {})", r.alpha, r.beta);
        for p in &r.profiles {
            println!("  P{} ∩ P{}: {}", p.i, p.j, p.incidence);
        }
        println!(
            "  cubics through the planes: {}  stabilizer {}  orbit {}  total {}",
            r.fiber_dim, r.stabilizer_dim, r.orbit_dim, r.total_dim
        );
        println!("  rank checks agree: {}", r.consistent());
    }

    let config = geometry::standard_config(&parse_rational("0").unwrap(), &parse_rational("1").unwrap())?;
    let cubic = config.random_cubic(7)?;
    let monomials = geometry::cubic_monomials();
    let terms: Vec<String> = cubic
        .coeffs
        .iter()
        .zip(&monomials)
        .filter(|(c, _)| !c.is_zero())
        .take(6)
        .map(|(c, m)| format!("{c}·{}", monomial_name(m)))
        .collect();
    println!("\nrandom cubic through the (0,1) configuration begins {} + …", terms.join(" + "));
    println!("contains all four planes: {}", config.contains_planes(&cubic));
    Ok(())
}
