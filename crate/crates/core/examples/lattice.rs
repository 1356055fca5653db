//! Enumerates submodule lattices and left ideal lattices.

use radical_lab::catalog::{module_regular, ring_upper_triangular, ring_zn};
use radical_lab::substructure::all_substructures;
use radical_lab::Kind;

fn main() -> radical_lab::Result<()> {
    let z8 = module_regular(&ring_zn(8)?)?;
    for n in all_substructures(&z8, Kind::Submodule)? {
        println!("Z8 submodule {:?}", n.elements());
    }

    let u2 = ring_upper_triangular(2, &ring_zn(2)?)?;
    let left = all_substructures(&u2, Kind::LeftIdeal)?;
    let ideals = all_substructures(&u2, Kind::TwoSidedIdeal)?;
    println!("U2(Z2): {} left ideals, {} two-sided ideals", left.len(), ideals.len());
    for l in &left {
        let names: Vec<&str> = l.elements().iter().map(|&x| u2.name(x)).collect();
        println!("  {}", names.join(" "));
    }
    Ok(())
}
