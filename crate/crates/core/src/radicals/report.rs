use std::collections::BTreeMap;

use serde::Serialize;

use super::module_level::ModuleAnalysis;
use super::verdict::{Verdict, Witness};
use crate::error::{Error, Result};
use crate::module::{FiniteModule, Tag};
use crate::substructure::Substructure;

/// A substructure as it appears in reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SetReport {
    pub members: Vec<usize>,
    pub names: Vec<String>,
}

impl SetReport {
    pub fn of_module(module: &FiniteModule, s: &Substructure) -> Self {
        let members = s.elements();
        let names = members.iter().map(|&m| module.name(m).to_string()).collect();
        SetReport { members, names }
    }
}

/// Flag names, in report order.
pub const CLASS_FLAGS: [&str; 11] = [
    "prime",
    "completely_prime",
    "semiprime",
    "completely_semiprime",
    "ifp",
    "symmetric",
    "semi_symmetric",
    "lee_zhou_reduced",
    "two_primal",
    "satisfies_rf",
    "satisfies_crf",
];

/// Radicals and class flags of one module.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadicalReport {
    pub module: String,
    pub ring: String,
    pub module_size: usize,
    pub ring_size: usize,
    pub tags: Vec<String>,
    pub submodule_count: usize,
    pub envelope_zero: SetReport,
    pub strongly_nilpotent: SetReport,
    pub beta: SetReport,
    pub beta_co: SetReport,
    pub class_flags: BTreeMap<String, Verdict>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl RadicalReport {
    pub fn flag(&self, name: &str) -> Option<bool> {
        self.class_flags.get(name).map(|v| v.holds)
    }
}

/// The example module is built over `M2(Z2)`; this is recorded in its report.
pub const EXX_NOTE: &str = "the integer matrix ring acts on this module through reduction mod 2; \
    it is analysed over M2(Z2), which has the same submodule lattice, ideal action and primality verdicts";

impl ModuleAnalysis {
    /// Applies a zero-submodule predicate, turning `NotProper` (the zero module) into a failure.
    fn zero_predicate(&self, f: impl Fn(&Substructure) -> Result<Verdict>) -> Result<Verdict> {
        match f(self.zero()) {
            Err(Error::NotProper) => Ok(Verdict::fail(
                format!("zero submodule of {}", self.module.label()),
                Witness::new().note("zero submodule", "equals the whole module, so it is not proper"),
            )),
            other => other,
        }
    }

    pub fn report(&self) -> Result<RadicalReport> {
        let m = &self.module;
        let zero = self.zero().clone();
        let env = self.envelope_submodule(&zero)?;
        let ns = self.strongly_nilpotent()?;
        let classes = self.class_flags();
        let mut flags = BTreeMap::new();
        flags.insert("prime".into(), self.zero_predicate(|p| self.is_prime(p))?);
        flags.insert("completely_prime".into(), self.zero_predicate(|p| self.is_completely_prime(p))?);
        flags.insert("semiprime".into(), self.zero_predicate(|p| self.is_semiprime(p))?);
        flags.insert(
            "completely_semiprime".into(),
            self.zero_predicate(|p| self.is_completely_semiprime(p))?,
        );
        flags.insert("ifp".into(), classes.ifp);
        flags.insert("symmetric".into(), classes.symmetric);
        flags.insert("semi_symmetric".into(), classes.semi_symmetric);
        flags.insert("lee_zhou_reduced".into(), classes.lee_zhou_reduced);
        flags.insert("two_primal".into(), self.two_primal());
        flags.insert("satisfies_rf".into(), self.satisfies_rf()?);
        flags.insert("satisfies_crf".into(), self.satisfies_crf()?);
        let mut notes = Vec::new();
        if m.has_tag(&Tag::ExampleExx) {
            notes.push(EXX_NOTE.to_string());
        }
        Ok(RadicalReport {
            module: m.label().to_string(),
            ring: m.ring().label().to_string(),
            module_size: m.size(),
            ring_size: m.ring().size(),
            tags: m.tags().iter().map(ToString::to_string).collect(),
            submodule_count: self.lattice.len(),
            envelope_zero: SetReport::of_module(m, &env),
            strongly_nilpotent: SetReport::of_module(m, &ns),
            beta: SetReport::of_module(m, &self.beta()),
            beta_co: SetReport::of_module(m, &self.beta_co()),
            class_flags: flags,
            notes,
        })
    }
}
