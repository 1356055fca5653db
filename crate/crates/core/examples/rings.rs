//! Builds the default rings and prints their nilpotent elements and 2-primality.

use radical_lab::catalog::default_rings;
use radical_lab::RingAnalysis;

fn main() -> radical_lab::Result<()> {
    for ring in default_rings()? {
        let a = RingAnalysis::new(&ring)?;
        let t = a.two_primal()?;
        let nil: Vec<&str> = t.nil.iter().map(|&x| ring.name(x)).collect();
        println!(
            "{:<8} |R| = {:<3} commutative: {:<5} 2-primal: {:<5} N(R) = {{{}}}",
            ring.label(),
            ring.size(),
            ring.is_commutative(),
            t.verdict.holds,
            nil.join(", ")
        );
    }
    Ok(())
}
