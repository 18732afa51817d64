//! Davenport–Cassels style descent from a rational point to an integral one.
//!
//! cargo run --example adc_descent

use hassett_cubics::adc::{self, RationalPoint, StepKind};
use hassett_cubics::qforms::to_int_vector;
use hassett_cubics::{Integer, QuadraticForm, Result};

fn describe(p: &RationalPoint) -> String {
    let coords: Vec<String> = p.v.iter().map(|x| x.to_string()).collect();
    format!("({})/{}", coords.join(", "), p.t)
}

fn run(name: &str, form: &QuadraticForm, point: RationalPoint) -> Result<()> {
    println!("{name}: start {}  value {}", describe(&point), point.m);
    let trace = adc::descend(form, &point)?;
    for step in &trace.steps {
        let tag = match step.kind {
            StepKind::Torus => format!("torus p={}", step.prime.unwrap_or(0)),
            k => format!("{k:?}").to_lowercase(),
        };
        println!("  {tag:<14} → {}", describe(&step.output));
    }
    println!("  terminal {}  verified {}", describe(&trace.terminal), trace.verify(form));
    if !trace.fallback_primes.is_empty() {
        println!("  fallback primes: {:?}", trace.fallback_primes);
    }
    Ok(())
}

fn main() -> Result<()> {
    let q3 = adc::q3();
    let g = adc::g();
    println!("cube side: Q3 {}, G {}", adc::cube_side(&q3)?, adc::cube_side(&g)?);

    run("Q3", &q3, RationalPoint::from_vector(&q3, to_int_vector(&[3, 4, 5]), 5.into())?)?;

    let p = adc::secant_parametrize(&g, &to_int_vector(&[1, 1, 1]), &to_int_vector(&[17, -5, 9]))?;
    run("G", &g, p)?;

    let p = adc::secant_parametrize(&q3, &to_int_vector(&[2, 1, 0]), &to_int_vector(&[31, 7, -12]))?;
    run("Q3", &q3, p)?;

    for (name, form) in [("Q3", &q3), ("G", &g)] {
        let bad = adc::adc_check(form, &Integer::from(1000))?;
        println!("{name}: rational-but-not-integral values ≤ 1000: {}", bad.len());
    }
    Ok(())
}
