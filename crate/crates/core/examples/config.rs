//! Builds a structure from a JSON config and prints the analysis document.

use radical_lab::config::StructureConfig;
use radical_lab::report::{render_analysis, AnalysisBody, Document};
use radical_lab::ModuleAnalysis;

const CONFIG: &str = r#"{
  "schema": 1,
  "ring": {"constructor": "upper_triangular", "params": {"k": 2, "base": {"constructor": "Zn", "params": {"n": 2}}}},
  "module": {"constructor": "summand", "params": {"idempotent": 4}}
}"#;

fn main() -> radical_lab::Result<()> {
    let (_, module) = StructureConfig::from_json(CONFIG)?.build()?;
    let body = AnalysisBody::new(&ModuleAnalysis::new(&module)?)?;
    print!("{}", render_analysis(&body));
    print!("{}", Document::new(body).to_json());
    Ok(())
}
