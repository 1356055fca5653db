//! Jacobson radical, maximal left ideals, Dedekind finiteness and related ring facts.

use radical_lab::catalog::default_rings;
use radical_lab::RingAnalysis;

fn main() -> radical_lab::Result<()> {
    for ring in default_rings()? {
        let a = RingAnalysis::new(&ring)?;
        let p = a.properties()?;
        println!(
            "{:<8} J(R) = {:?}, {} maximal left ideals, Dedekind finite {}, primes completely prime {}, semisimple {}",
            ring.label(),
            a.jacobson_radical()?.elements(),
            a.maximal_left_ideals()?.len(),
            p.dedekind_finite.holds,
            p.primes_completely_prime.holds,
            p.is_semisimple.holds
        );
    }
    Ok(())
}
