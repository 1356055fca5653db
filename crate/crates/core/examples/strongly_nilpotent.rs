//! Strongly nilpotent elements: a is eventually annihilating for m when every
//! sequence a, a' in aRa, a'' in a'Ra', ... reaches some a_k with a_k R m = 0.

use radical_lab::catalog::{module_regular, ring_m2_z2, ring_upper_triangular, ring_zn};
use radical_lab::ModuleAnalysis;

fn main() -> radical_lab::Result<()> {
    let rings = [ring_zn(4)?, ring_zn(8)?, ring_upper_triangular(2, &ring_zn(2)?)?, ring_m2_z2()?];
    for ring in rings {
        let m = module_regular(&ring)?;
        let a = ModuleAnalysis::new(&m)?;
        let one = ring.one();
        let persistent: Vec<&str> = a.persistent_set(one).ones().map(|x| ring.name(x)).collect();
        let ns: Vec<&str> = a.strongly_nilpotent()?.elements().iter().map(|&x| m.name(x)).collect();
        println!("{}: persistent for 1 = {{{}}}", ring.label(), persistent.join(", "));
        println!("{}: N_s = {{{}}}", ring.label(), ns.join(", "));
    }
    Ok(())
}
