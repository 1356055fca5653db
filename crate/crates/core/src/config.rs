//! JSON configuration: structure definitions, catalog generators, search requests.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::catalog::{
    module_cyclic, module_example_exx, module_free, module_regular, module_summand, ring_matrix, ring_product,
    ring_upper_triangular, ring_zn, ModuleFamily,
};
use crate::error::{Error, Result};
use crate::module::{module_from_action, FiniteModule, ModuleTables};
use crate::ring::{FiniteRing, RingTables};
use crate::substructure::{generated_substructure, Kind};

pub const SCHEMA_VERSION: u32 = 1;

/// Parses `text`, reporting the JSON path of the first offending field.
pub fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        Error::config(if path == "." { "$".into() } else { format!("$.{path}") }, e.into_inner().to_string())
    })
}

fn check_schema(schema: Option<u32>) -> Result<()> {
    match schema {
        None | Some(SCHEMA_VERSION) => Ok(()),
        Some(v) => Err(Error::config("$.schema", format!("unsupported schema version {v}"))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RingConstructor {
    #[serde(rename = "Zn")]
    Zn,
    #[serde(rename = "matrix")]
    Matrix,
    #[serde(rename = "upper_triangular")]
    UpperTriangular,
    #[serde(rename = "product")]
    Product,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingParams {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<Box<RingConfig>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<RingConfig>>,
}

/// Either `{"constructor": .., "params": ..}` or `{"tables": {add, mul, one}}`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constructor: Option<RingConstructor>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<RingParams>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tables: Option<RingTables>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl RingConfig {
    pub fn zn(n: usize) -> Self {
        RingConfig {
            constructor: Some(RingConstructor::Zn),
            params: Some(RingParams {
                n: Some(n),
                ..RingParams::default()
            }),
            ..RingConfig::default()
        }
    }

    pub fn from_ring(ring: &FiniteRing) -> Self {
        RingConfig {
            tables: Some(ring.tables()),
            label: Some(ring.label().to_string()),
            ..RingConfig::default()
        }
    }

    pub fn build(&self) -> Result<FiniteRing> {
        self.build_at("$.ring")
    }

    fn build_at(&self, path: &str) -> Result<FiniteRing> {
        let ring = match (&self.constructor, &self.tables) {
            (Some(_), Some(_)) => return Err(Error::config(path, "give either `constructor` or `tables`, not both")),
            (None, None) => return Err(Error::config(path, "missing `constructor` or `tables`")),
            (None, Some(t)) => FiniteRing::from_tables(t, self.label.as_deref().unwrap_or("R"))?,
            (Some(c), None) => {
                let p = self.params.clone().unwrap_or_default();
                let need = |v: Option<usize>, name: &str| {
                    v.ok_or_else(|| Error::config(format!("{path}.params.{name}"), "missing parameter"))
                };
                let base = |p: &RingParams| -> Result<FiniteRing> {
                    p.base
                        .as_ref()
                        .ok_or_else(|| Error::config(format!("{path}.params.base"), "missing parameter"))?
                        .build_at(&format!("{path}.params.base"))
                };
                match c {
                    RingConstructor::Zn => ring_zn(need(p.n, "n")?),
                    RingConstructor::Matrix => ring_matrix(need(p.k, "k")?, &base(&p)?),
                    RingConstructor::UpperTriangular => ring_upper_triangular(need(p.k, "k")?, &base(&p)?),
                    RingConstructor::Product => {
                        let factors = p
                            .factors
                            .as_ref()
                            .ok_or_else(|| Error::config(format!("{path}.params.factors"), "missing parameter"))?;
                        let rings = factors
                            .iter()
                            .enumerate()
                            .map(|(i, f)| f.build_at(&format!("{path}.params.factors[{i}]")))
                            .collect::<Result<Vec<_>>>()?;
                        ring_product(&rings)
                    }
                }
                .map_err(|e| match e {
                    Error::InvalidParameter(msg) => Error::config(format!("{path}.params"), msg),
                    other => other,
                })?
            }
        };
        Ok(match (&self.label, &self.constructor) {
            (Some(l), Some(_)) => ring.relabeled(l),
            _ => ring,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleConstructor {
    Regular,
    Free,
    Cyclic,
    Summand,
    ExampleExx,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleParams {
    /// Free rank.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    /// Generators of the left ideal a cyclic module is a quotient by.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub idempotent: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constructor: Option<ModuleConstructor>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<ModuleParams>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tables: Option<ModuleTables>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl ModuleConfig {
    pub fn from_module(module: &FiniteModule) -> Self {
        ModuleConfig {
            tables: Some(module.tables()),
            label: Some(module.label().to_string()),
            ..ModuleConfig::default()
        }
    }

    pub fn build(&self, ring: &FiniteRing) -> Result<FiniteModule> {
        let path = "$.module";
        match (&self.constructor, &self.tables) {
            (Some(_), Some(_)) => Err(Error::config(path, "give either `constructor` or `tables`, not both")),
            (None, None) => Err(Error::config(path, "missing `constructor` or `tables`")),
            (None, Some(t)) => module_from_action(ring, t, self.label.as_deref().unwrap_or("M")),
            (Some(c), None) => {
                let p = self.params.clone().unwrap_or_default();
                let m = match c {
                    ModuleConstructor::Regular => module_regular(ring),
                    ModuleConstructor::Free => module_free(ring, p.rank.unwrap_or(2)),
                    ModuleConstructor::Cyclic => {
                        let gens = p.generators.unwrap_or_default();
                        if let Some(&g) = gens.iter().find(|&&g| g >= ring.size()) {
                            return Err(Error::config(
                                format!("{path}.params.generators"),
                                format!("element {g} out of range for `{}`", ring.label()),
                            ));
                        }
                        let ideal = generated_substructure(ring, Kind::LeftIdeal, &gens)?;
                        module_cyclic(ring, &ideal)
                    }
                    ModuleConstructor::Summand => {
                        let e = p
                            .idempotent
                            .ok_or_else(|| Error::config(format!("{path}.params.idempotent"), "missing parameter"))?;
                        module_summand(ring, e)
                    }
                    ModuleConstructor::ExampleExx => {
                        let m = module_example_exx()?;
                        if !m.ring().same_as(ring) {
                            return Err(Error::config(path, "example_exx lives over M2(Z2)"));
                        }
                        Ok(m)
                    }
                };
                m.map_err(|e| match e {
                    Error::InvalidParameter(msg) => Error::config(format!("{path}.params"), msg),
                    other => other,
                })
            }
        }
    }
}

/// A ring with an optional module. Unknown top-level keys are ignored so that
/// search output can be analyzed directly.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StructureConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<u32>,
    pub ring: RingConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleConfig>,
}

impl StructureConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: StructureConfig = parse_json(text)?;
        check_schema(cfg.schema)?;
        Ok(cfg)
    }

    /// The ring, and the module (the regular module when none is given).
    pub fn build(&self) -> Result<(FiniteRing, FiniteModule)> {
        let ring = self.ring.build()?;
        if ring.is_zero_ring() {
            return Err(Error::ZeroBaseRing);
        }
        let module = match &self.module {
            Some(m) => m.build(&ring)?,
            None => module_regular(&ring)?,
        };
        Ok((ring, module))
    }

    /// Raw-table form of a built structure.
    pub fn from_module(module: &FiniteModule) -> Self {
        StructureConfig {
            schema: Some(SCHEMA_VERSION),
            ring: RingConfig::from_ring(module.ring()),
            module: Some(ModuleConfig::from_module(module)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepParam {
    N,
    K,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Sweep {
    pub param: SweepParam,
    pub min: usize,
    pub max: usize,
}

/// One ring, or a family of rings obtained by sweeping `n` or `k`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingFamily {
    pub ring: RingConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<Sweep>,
}

fn default_free_rank() -> usize {
    2
}

/// Which rings and which module constructors a catalog is built from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorSpec {
    pub rings: Vec<RingFamily>,
    /// Module constructors, in enumeration order; all of them when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modules: Option<Vec<ModuleFamily>>,
    #[serde(default = "default_free_rank")]
    pub free_rank: usize,
}

impl GeneratorSpec {
    pub fn module_families(&self) -> Vec<ModuleFamily> {
        let mut fams = self.modules.clone().unwrap_or_else(|| ModuleFamily::ALL.to_vec());
        fams.dedup();
        fams
    }

    /// Rings in spec order, sweeps ascending.
    pub fn expand_rings(&self) -> Result<Vec<FiniteRing>> {
        let mut out = Vec::new();
        for (i, fam) in self.rings.iter().enumerate() {
            let path = format!("$.generator.rings[{i}]");
            match fam.sweep {
                None => out.push(fam.ring.build_at(&format!("{path}.ring"))?),
                Some(s) => {
                    if s.min > s.max {
                        return Err(Error::config(format!("{path}.sweep"), "min exceeds max"));
                    }
                    for v in s.min..=s.max {
                        let mut cfg = fam.ring.clone();
                        let params = cfg.params.get_or_insert_with(RingParams::default);
                        match s.param {
                            SweepParam::N => params.n = Some(v),
                            SweepParam::K => params.k = Some(v),
                        }
                        out.push(cfg.build_at(&format!("{path}.ring"))?);
                    }
                }
            }
        }
        Ok(out)
    }
}

/// `verify --catalog` document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<u32>,
    pub generator: GeneratorSpec,
}

impl CatalogConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: CatalogConfig = parse_json(text)?;
        check_schema(cfg.schema)?;
        Ok(cfg)
    }
}

/// `search` document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<u32>,
    pub predicate: String,
    pub generator: GeneratorSpec,
    /// Maximum number of candidate modules examined.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<usize>,
}

impl SearchConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: SearchConfig = parse_json(text)?;
        check_schema(cfg.schema)?;
        Ok(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructor_and_tables_agree() {
        let cfg = StructureConfig::from_json(r#"{"ring": {"constructor": "Zn", "params": {"n": 4}}}"#).unwrap();
        let (ring, module) = cfg.build().unwrap();
        assert_eq!(ring.size(), 4);
        assert_eq!(module.size(), 4);

        let round = StructureConfig::from_module(&module);
        let text = serde_json::to_string(&round).unwrap();
        let (r2, m2) = StructureConfig::from_json(&text).unwrap().build().unwrap();
        assert!(r2.same_as(&ring));
        assert_eq!(m2.tables(), module.tables());
    }

    #[test]
    fn nested_constructors() {
        let text = r#"{"ring": {"constructor": "matrix", "params": {"k": 2, "base": {"constructor": "Zn", "params": {"n": 2}}}},
                       "module": {"constructor": "example_exx"}}"#;
        let (_, m) = StructureConfig::from_json(text).unwrap().build().unwrap();
        assert_eq!(m.size(), 4);
    }

    #[test]
    fn errors_carry_paths() {
        let e = StructureConfig::from_json(r#"{"ring": {"constructor": "Zn", "params": {"n": "four"}}}"#).unwrap_err();
        match e {
            Error::Config { path, .. } => assert_eq!(path, "$.ring.params.n"),
            other => panic!("unexpected {other:?}"),
        }
        let e = StructureConfig::from_json(r#"{"ring": {"constructor": "matrix", "params": {"k": 2}}}"#)
            .unwrap()
            .build()
            .unwrap_err();
        assert!(matches!(e, Error::Config { ref path, .. } if path == "$.ring.params.base"));
        let e = StructureConfig::from_json(r#"{"schema": 7, "ring": {"constructor": "Zn"}}"#).unwrap_err();
        assert!(matches!(e, Error::Config { ref path, .. } if path == "$.schema"));
    }

    #[test]
    fn axiom_violations_pass_through() {
        let text = r#"{"ring": {"tables": {"add": [[0,1],[1,0]], "mul": [[0,0],[0,0]], "one": 1}}}"#;
        let e = StructureConfig::from_json(text).unwrap().build().unwrap_err();
        assert!(matches!(e, Error::AxiomViolation { .. }));
    }

    #[test]
    fn sweeps_expand_in_order() {
        let text = r#"{"generator": {"rings": [{"ring": {"constructor": "Zn"}, "sweep": {"param": "n", "min": 2, "max": 5}}],
                       "modules": ["regular"]}}"#;
        let cfg = CatalogConfig::from_json(text).unwrap();
        let labels: Vec<String> = cfg
            .generator
            .expand_rings()
            .unwrap()
            .iter()
            .map(|r| r.label().to_string())
            .collect();
        assert_eq!(labels, ["Z2", "Z3", "Z4", "Z5"]);
    }
}
