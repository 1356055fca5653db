//! Prime and completely prime submodules, the radicals they cut out, and the
//! witnesses produced when a submodule fails.

use radical_lab::catalog::{module_free, ring_upper_triangular, ring_zn};
use radical_lab::ModuleAnalysis;

fn main() -> radical_lab::Result<()> {
    let ring = ring_upper_triangular(2, &ring_zn(2)?)?;
    let m = module_free(&ring, 2)?;
    let a = ModuleAnalysis::new(&m)?;
    println!("{}: {} submodules", m.label(), a.lattice().len());
    println!("prime submodules:            {}", a.prime_submodules().count());
    println!("completely prime submodules: {}", a.completely_prime_submodules().count());
    println!("beta    = {:?}", a.beta().elements());
    println!("beta_co = {:?}", a.beta_co().elements());

    let v = a.is_completely_prime(a.zero())?;
    println!("zero submodule completely prime: {}", v.holds);
    if let Some(w) = v.witness() {
        println!("  witness: {}", w.summary());
    }
    Ok(())
}
