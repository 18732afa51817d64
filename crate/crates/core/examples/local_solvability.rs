//! Local certificates for G(x,y,z) = k at the real place and at small primes.
//!
//! cargo run --example local_solvability -- 55 87 -4

use hassett_cubics::local_global::{self, Place};
use hassett_cubics::{Integer, Result};

fn main() -> Result<()> {
    let mut ks: Vec<Integer> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    if ks.is_empty() {
        ks = [7, 55, 87, 6, -4].into_iter().map(Integer::from).collect();
    }
    for k in &ks {
        let report = local_global::certify_global(k, None, 4)?;
        println!("k = {k}: {:?}  (replays: {})", report.verdict, report.replay());
        for c in &report.certificates {
            let witness = c
                .witness
                .as_ref()
                .map(|w| w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
                .unwrap_or_else(|| "-".into());
            println!("  {:<5} {:?}  {:?}  scale {}  witness ({witness})", c.place.to_string(), c.verdict, c.method, c.scale);
        }
    }

    let a = Integer::from(-1);
    for p in [2u64, 3, 5, 7] {
        let h = local_global::hilbert_symbol(&a, &Integer::from(-3), Place::Prime(p))?;
        println!("(−1, −3)_{p} = {h}");
    }
    Ok(())
}
