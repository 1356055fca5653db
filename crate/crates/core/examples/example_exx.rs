//! The four-element module of constant-row matrices over M2(Z2): prime but not
//! completely prime, satisfying the complete radical formula but not the radical formula.

use radical_lab::catalog::module_example_exx;
use radical_lab::ModuleAnalysis;

fn main() -> radical_lab::Result<()> {
    let m = module_example_exx()?;
    let report = ModuleAnalysis::new(&m)?.report()?;
    println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
    Ok(())
}
