//! Envelopes E_M(N) = { rm : r^k m in N for some k } and the submodules they generate.

use radical_lab::catalog::{module_regular, ring_zn};
use radical_lab::ModuleAnalysis;

fn main() -> radical_lab::Result<()> {
    for n in [4, 8, 12] {
        let m = module_regular(&ring_zn(n)?)?;
        let a = ModuleAnalysis::new(&m)?;
        for sub in a.lattice() {
            let env: Vec<usize> = a.envelope(sub)?.ones().collect();
            let gen = a.envelope_submodule(sub)?;
            println!("Z{n}: E({:?}) = {env:?}, generating {:?}", sub.elements(), gen.elements());
        }
    }
    Ok(())
}
