//! Searches matrix-ring modules for a prime module that is not completely prime,
//! and a catalog for a semiprime module outside the Lee-Zhou class.

use radical_lab::catalog::Catalog;
use radical_lab::search::{search_catalog, Predicate};

fn main() -> radical_lab::Result<()> {
    let catalog = Catalog::default_catalog()?;
    for text in [
        "prime and not completely_prime",
        "semiprime and completely_semiprime and not lee_zhou_reduced and not completely_prime",
        "satisfies_crf and not satisfies_rf",
    ] {
        let p = Predicate::parse(text)?;
        let out = search_catalog(&p, &catalog, Some(100))?;
        let found = out.hit.as_ref().map(|h| h.report.module.as_str()).unwrap_or("-");
        println!("{p}: {:?} after {} of {} candidates ({found})", out.status, out.stats.examined, out.stats.candidates);
    }
    Ok(())
}
