//! The radical formula and complete radical formula, and the subdirect
//! decomposition of a module with zero completely prime radical.

use radical_lab::catalog::{module_example_exx, module_regular, ring_zn};
use radical_lab::ModuleAnalysis;

fn main() -> radical_lab::Result<()> {
    for m in [module_regular(&ring_zn(6)?)?, module_regular(&ring_zn(8)?)?, module_example_exx()?] {
        let a = ModuleAnalysis::new(&m)?;
        println!(
            "{}: RF {} CRF {} 2-primal {}",
            m.label(),
            a.satisfies_rf()?.holds,
            a.satisfies_crf()?.holds,
            a.two_primal().holds
        );
        let d = a.subdirect_decomposition()?;
        match &d.factors {
            Some(factors) if d.exists() => {
                for f in factors {
                    println!("  factor M/{:?} of size {}", f.submodule.elements(), f.quotient.size());
                }
            }
            _ => println!("  no subdirect decomposition into completely prime factors"),
        }
    }
    Ok(())
}
