//! IFP, symmetric, semi-symmetric and Lee-Zhou reduced flags across the default catalog.

use radical_lab::catalog::Catalog;
use radical_lab::ModuleAnalysis;

fn main() -> radical_lab::Result<()> {
    println!("{:<28} {:>5} {:>5} {:>5} {:>5}", "module", "ifp", "sym", "semi", "lz");
    for (_, m) in Catalog::default_catalog()?.modules() {
        let f = ModuleAnalysis::new(m)?.class_flags();
        println!(
            "{:<28} {:>5} {:>5} {:>5} {:>5}",
            m.label(),
            f.ifp.holds,
            f.symmetric.holds,
            f.semi_symmetric.holds,
            f.lee_zhou_reduced.holds
        );
    }
    Ok(())
}
