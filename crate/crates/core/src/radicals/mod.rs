//! Envelopes, prime-type radicals, strongly nilpotent submodules, module classes,
//! radical formulas and 2-primality.
//!
//! [`ModuleAnalysis`] and [`RingAnalysis`] cache the lattices every predicate
//! quantifies over; the free functions below build a fresh analysis per call.

mod classes;
mod formula;
mod module_level;
mod nilpotent;
mod report;
mod ring_level;
mod verdict;


pub use classes::ClassFlags;
pub use formula::{hom_transfer_check, hom_transfer_check_with, HomTransfer, Subdirect, SubdirectFactor};
pub use module_level::ModuleAnalysis;
pub use report::{RadicalReport, SetReport, CLASS_FLAGS, EXX_NOTE};
pub use ring_level::{power_sequence, RingAnalysis, RingProperties, RingTwoPrimality};
pub use verdict::{Verdict, Witness, WitnessEntry, WitnessValue};

use crate::error::Result;
use crate::module::FiniteModule;
use crate::ring::FiniteRing;
use crate::substructure::{ElementSet, Substructure};

pub fn envelope(m: &FiniteModule, n: &Substructure) -> Result<ElementSet> {
    ModuleAnalysis::new(m)?.envelope(n)
}

pub fn envelope_submodule(m: &FiniteModule, n: &Substructure) -> Result<Substructure> {
    ModuleAnalysis::new(m)?.envelope_submodule(n)
}

pub fn is_prime_submodule(m: &FiniteModule, p: &Substructure) -> Result<Verdict> {
    ModuleAnalysis::new(m)?.is_prime(p)
}

pub fn is_completely_prime_submodule(m: &FiniteModule, p: &Substructure) -> Result<Verdict> {
    ModuleAnalysis::new(m)?.is_completely_prime(p)
}

pub fn is_semiprime_submodule(m: &FiniteModule, p: &Substructure) -> Result<Verdict> {
    ModuleAnalysis::new(m)?.is_semiprime(p)
}

pub fn is_completely_semiprime_submodule(m: &FiniteModule, p: &Substructure) -> Result<Verdict> {
    ModuleAnalysis::new(m)?.is_completely_semiprime(p)
}

pub fn beta(m: &FiniteModule) -> Result<Substructure> {
    Ok(ModuleAnalysis::new(m)?.beta())
}

pub fn beta_co(m: &FiniteModule) -> Result<Substructure> {
    Ok(ModuleAnalysis::new(m)?.beta_co())
}

pub fn beta_s(m: &FiniteModule, n: &Substructure) -> Result<Substructure> {
    ModuleAnalysis::new(m)?.beta_s(n)
}

pub fn beta_co_s(m: &FiniteModule, n: &Substructure) -> Result<Substructure> {
    ModuleAnalysis::new(m)?.beta_co_s(n)
}

/// `𝒩(R)`.
pub fn nil_elements(r: &FiniteRing) -> Result<ElementSet> {
    Ok(RingAnalysis::new(r)?.nil_elements())
}

pub fn is_nil_left_ideal(r: &FiniteRing, i: &Substructure) -> Result<Verdict> {
    Ok(RingAnalysis::new(r)?.is_nil(i))
}

pub fn strongly_nilpotent_submodule(m: &FiniteModule) -> Result<Substructure> {
    ModuleAnalysis::new(m)?.strongly_nilpotent()
}

pub fn module_class_flags(m: &FiniteModule) -> Result<ClassFlags> {
    Ok(ModuleAnalysis::new(m)?.class_flags())
}

pub fn is_two_primal_module(m: &FiniteModule) -> Result<Verdict> {
    Ok(ModuleAnalysis::new(m)?.two_primal())
}

pub fn is_two_primal_submodule(m: &FiniteModule, n: &Substructure) -> Result<Verdict> {
    ModuleAnalysis::new(m)?.submodule_two_primal(n)
}

pub fn is_two_primal_ring(r: &FiniteRing) -> Result<RingTwoPrimality> {
    RingAnalysis::new(r)?.two_primal()
}

pub fn is_two_primal_ideal(r: &FiniteRing, i: &Substructure) -> Result<Verdict> {
    RingAnalysis::new(r)?.is_two_primal_ideal(i)
}

pub fn satisfies_rf(m: &FiniteModule) -> Result<Verdict> {
    ModuleAnalysis::new(m)?.satisfies_rf()
}

pub fn satisfies_crf(m: &FiniteModule) -> Result<Verdict> {
    ModuleAnalysis::new(m)?.satisfies_crf()
}

pub fn submodule_satisfies_rf(m: &FiniteModule, n: &Substructure) -> Result<Verdict> {
    ModuleAnalysis::new(m)?.submodule_rf(n)
}

pub fn submodule_satisfies_crf(m: &FiniteModule, n: &Substructure) -> Result<Verdict> {
    ModuleAnalysis::new(m)?.submodule_crf(n)
}

pub fn subdirect_decomposition(m: &FiniteModule) -> Result<Subdirect> {
    ModuleAnalysis::new(m)?.subdirect_decomposition()
}

pub fn ring_properties(r: &FiniteRing) -> Result<RingProperties> {
    RingAnalysis::new(r)?.properties()
}

pub fn radical_report(m: &FiniteModule) -> Result<RadicalReport> {
    ModuleAnalysis::new(m)?.report()
}
