//! Values of the quaternary form F on primitive vectors, compared with the
//! Hassett discriminants 6n+2 and n ≡ 0, 2 mod 6.
//!
//! cargo run --example primitive_image -- 400

use hassett_cubics::hassett_rep::in_hassett;
use hassett_cubics::qforms::{builtin, to_int_vector, BuiltinForm};
use hassett_cubics::{Integer, Result};

fn main() -> Result<()> {
    let bound: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(200);
    let f = builtin(BuiltinForm::F);
    println!("F = {f:?}");
    println!("positive definite: {}", f.is_positive_definite());

    let image = f.primitive_image(&Integer::from(bound))?;
    let hassett: Vec<i64> = (1..=bound).filter(|&n| in_hassett(&n.into())).collect();
    println!("{} primitive values ≤ {bound}", image.len());
    println!("first few: {:?}", image.iter().take(12).map(|n| n.to_string()).collect::<Vec<_>>());

    let agree = image.len() == hassett.len() && image.iter().zip(&hassett).all(|(a, b)| *a == Integer::from(*b));
    println!("matches the Hassett set up to {bound}: {agree}");

    let v = to_int_vector(&[1, 1, 1, 1]);
    println!("F(1,1,1,1) = {}", f.evaluate_int(&v)?);
    Ok(())
}
