//! Transfer of the radical formulas along the epimorphism Z6^2 -> Z6/{0,2,4}.

use radical_lab::catalog::{module_free, ring_zn};
use radical_lab::module::{quotient_module, ModuleHom};
use radical_lab::radicals::hom_transfer_check;
use radical_lab::substructure::{generated_substructure, Substructure};
use radical_lab::{FiniteModule, Kind};

fn main() -> radical_lab::Result<()> {
    let ring = ring_zn(6)?;
    let regular = FiniteModule::regular(&ring)?;
    let ideal = generated_substructure(&regular, Kind::Submodule, &[2])?;
    let (cyclic, pi) = quotient_module(&regular, &ideal)?;
    let free = module_free(&ring, 2)?;
    let map = free.elements().map(|x| pi.apply(x / ring.size())).collect();
    let phi = ModuleHom::new(&free, &cyclic, map)?;
    println!("{} -> {}: kernel of size {}", free.label(), cyclic.label(), phi.kernel().len());

    let whole = Substructure::full(&free, Kind::Submodule)?;
    for n in [phi.kernel(), whole] {
        let t = hom_transfer_check(&phi, &n)?;
        println!(
            "N of size {}: CRF {} -> {} -> {}, RF {} -> {} -> {}",
            n.len(),
            t.source_crf,
            t.image_crf,
            t.preimage_crf,
            t.source_rf,
            t.image_rf,
            t.preimage_rf
        );
    }
    Ok(())
}
