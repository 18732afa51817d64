//! Build and check explicit representation certificates n = F(v).
//!
//! cargo run --example hassett_certificates -- 8 14 24 78 1000002

use hassett_cubics::hassett_rep::{self, Branch};
use hassett_cubics::qforms::{builtin, BuiltinForm};
use hassett_cubics::{Integer, Result};

fn show(v: &Option<Vec<Integer>>) -> String {
    match v {
        Some(v) => format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")),
        None => "-".into(),
    }
}

fn main() -> Result<()> {
    let mut ns: Vec<Integer> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    if ns.is_empty() {
        ns = [8, 14, 24, 42, 60, 78, 96, 1_000_002].into_iter().map(Integer::from).collect();
    }
    let f = builtin(BuiltinForm::F);

    for n in &ns {
        if !hassett_rep::in_hassett(n) {
            println!("{n}: not a Hassett discriminant");
            continue;
        }
        let c = hassett_rep::represent(n)?;
        let branch = match c.branch {
            Branch::Special => "special".to_string(),
            b => format!("u = {}", b.u().unwrap()),
        };
        println!("n = {n}  [{branch}]");
        if let Some(k) = &c.k {
            let checks = hassett_rep::check_k_properties(k);
            println!("  k = {k}  (k ≡ 7 mod 8: {}, 3 ∤ k: {})", checks.mod8, checks.mod3);
        }
        println!("  G-witness {}  →  xyz {}", show(&c.g), show(&c.xyz));
        println!("  v = {}  F(v) = {}", show(&Some(c.v.clone())), f.evaluate_int(&c.v)?);
        println!("  certificate verifies: {}", hassett_rep::verify_certificate(&c));
    }

    let limit = Integer::from(2000);
    let all = hassett_rep::verify_range(&limit)?;
    let ok = all.iter().all(hassett_rep::verify_certificate);
    println!("\nall {} discriminants up to {limit} certified: {ok}", all.len());
    Ok(())
}
