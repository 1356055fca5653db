use std::collections::HashMap;
use std::sync::Arc;

use super::ring_level::RingAnalysis;
use super::verdict::{Verdict, Witness};
use crate::error::{Error, Result};
use crate::module::FiniteModule;
use crate::substructure::{all_substructures, generated_substructure, intersect_family, ElementSet, Kind, Substructure};

/// A module together with its submodule lattice and the primality of every lattice member.
#[derive(Debug, Clone)]
pub struct ModuleAnalysis {
    pub(super) module: FiniteModule,
    pub(super) ring: Arc<RingAnalysis>,
    pub(super) lattice: Vec<Substructure>,
    index: HashMap<ElementSet, usize>,
    prime: Vec<bool>,
    completely_prime: Vec<bool>,
    /// Distinct elements of `Rm`.
    pub(super) orbits: Vec<Vec<usize>>,
}

impl ModuleAnalysis {
    pub fn new(module: &FiniteModule) -> Result<Self> {
        Self::with_ring(module, Arc::new(RingAnalysis::new(module.ring())?))
    }

    /// Reuses the ring tables of an earlier analysis over the same ring.
    pub fn with_ring(module: &FiniteModule, ring: Arc<RingAnalysis>) -> Result<Self> {
        if !ring.ring().same_as(module.ring()) {
            return Err(Error::RingMismatch);
        }
        let lattice = all_substructures(module, Kind::Submodule)?;
        let index = lattice
            .iter()
            .enumerate()
            .map(|(i, s)| (s.members().clone(), i))
            .collect();
        let orbits = module
            .elements()
            .map(|m| {
                let mut seen = ElementSet::with_capacity(module.size());
                module
                    .ring()
                    .elements()
                    .map(|r| module.act(r, m))
                    .filter(|&x| !seen.put(x))
                    .collect()
            })
            .collect();
        let mut a = ModuleAnalysis {
            module: module.clone(),
            ring,
            lattice,
            index,
            prime: Vec::new(),
            completely_prime: Vec::new(),
            orbits,
        };
        let (mut prime, mut cp) = (Vec::new(), Vec::new());
        for p in &a.lattice {
            let proper = !p.is_full();
            prime.push(proper && a.prime_scan(p).is_ok());
            cp.push(proper && a.completely_prime_scan(p).is_ok());
        }
        a.prime = prime;
        a.completely_prime = cp;
        Ok(a)
    }

    pub fn module(&self) -> &FiniteModule {
        &self.module
    }

    pub fn ring_analysis(&self) -> &Arc<RingAnalysis> {
        &self.ring
    }

    /// All submodules in canonical order.
    pub fn lattice(&self) -> &[Substructure] {
        &self.lattice
    }

    pub fn zero(&self) -> &Substructure {
        &self.lattice[0]
    }

    pub fn full(&self) -> &Substructure {
        self.lattice.last().expect("lattice is never empty")
    }

    pub fn index_of(&self, n: &Substructure) -> Option<usize> {
        if n.parent() != self.module.id() {
            return None;
        }
        self.index.get(n.members()).copied()
    }

    pub(super) fn check(&self, n: &Substructure) -> Result<()> {
        if n.parent() != self.module.id() {
            return Err(Error::ParentMismatch);
        }
        if n.kind() != Kind::Submodule {
            return Err(Error::KindMismatch {
                expected: Kind::Submodule.to_string(),
                found: n.kind().to_string(),
            });
        }
        Ok(())
    }

    fn check_proper(&self, p: &Substructure) -> Result<()> {
        self.check(p)?;
        if p.is_full() {
            return Err(Error::NotProper);
        }
        Ok(())
    }

    pub(super) fn sub(&self, members: ElementSet) -> Substructure {
        Substructure::from_set_unchecked(self.module.id(), Kind::Submodule, members)
    }

    fn label(&self) -> &str {
        self.module.label()
    }

    fn ring_witness(&self, w: Witness, role: &str, r: usize) -> Witness {
        w.ring(role, r, self.module.ring().name(r))
    }

    fn elem_witness(&self, w: Witness, role: &str, m: usize) -> Witness {
        w.elem(role, m, self.module.name(m))
    }

    /// `E_M(N) = { rm : r^k m ∈ N for some k ≥ 1 }`.
    pub fn envelope(&self, n: &Substructure) -> Result<ElementSet> {
        self.check(n)?;
        let m = &self.module;
        let mut out = ElementSet::with_capacity(m.size());
        for r in m.ring().elements() {
            let powers = self.ring.powers(r);
            for x in m.elements() {
                if powers.iter().any(|&p| n.contains(m.act(p, x))) {
                    out.insert(m.act(r, x));
                }
            }
        }
        Ok(out)
    }

    /// `⟨E_M(N)⟩`.
    pub fn envelope_submodule(&self, n: &Substructure) -> Result<Substructure> {
        let env: Vec<usize> = self.envelope(n)?.ones().collect();
        generated_substructure(&self.module, Kind::Submodule, &env)
    }

    /// Dauns primality, scanning ideals `A` in canonical order. For each `A` the set
    /// `Q_A = { m : Am ⊆ P }` is the largest submodule `N` with `AN ⊆ P`.
    fn prime_scan(&self, p: &Substructure) -> std::result::Result<(), Witness> {
        let m = &self.module;
        for a in self.ring.ideals() {
            let am_inside = a.members().ones().all(|r| m.elements().all(|x| p.contains(m.act(r, x))));
            if am_inside {
                continue;
            }
            let mut q = ElementSet::with_capacity(m.size());
            q.extend(m.elements().filter(|&x| a.members().ones().all(|r| p.contains(m.act(r, x)))));
            if q.is_subset(p.members()) {
                continue;
            }
            let n = self
                .lattice
                .iter()
                .find(|n| n.members().is_subset(&q) && !n.is_subset(p))
                .expect("Q_A itself is a submodule");
            return Err(Witness::new().set("A", a).set("N", n));
        }
        Ok(())
    }

    /// `rm ∈ P ⇒ m ∈ P or rM ⊆ P`.
    fn completely_prime_scan(&self, p: &Substructure) -> std::result::Result<(), Witness> {
        let m = &self.module;
        for r in m.ring().elements() {
            if m.elements().all(|x| p.contains(m.act(r, x))) {
                continue;
            }
            if let Some(x) = m.elements().find(|&x| !p.contains(x) && p.contains(m.act(r, x))) {
                let w = self.ring_witness(Witness::new(), "r", r);
                return Err(self.elem_witness(w, "m", x));
            }
        }
        Ok(())
    }

    pub fn is_prime(&self, p: &Substructure) -> Result<Verdict> {
        self.check_proper(p)?;
        Ok(Verdict::from_scan(
            format!("two-sided ideals of {} and submodules of {}", self.module.ring().label(), self.label()),
            self.prime_scan(p),
        ))
    }

    pub fn is_completely_prime(&self, p: &Substructure) -> Result<Verdict> {
        self.check_proper(p)?;
        Ok(Verdict::from_scan(
            format!("pairs (r, m) over {}", self.label()),
            self.completely_prime_scan(p),
        ))
    }

    /// `aRam ⊆ P ⇒ am ∈ P`.
    pub fn is_semiprime(&self, p: &Substructure) -> Result<Verdict> {
        self.check_proper(p)?;
        let m = &self.module;
        let scan = || {
            for a in m.ring().elements() {
                for x in m.elements() {
                    if p.contains(m.act(a, x)) {
                        continue;
                    }
                    if self.ring.ara(a).iter().all(|&s| p.contains(m.act(s, x))) {
                        let w = self.ring_witness(Witness::new(), "a", a);
                        return Err(self.elem_witness(w, "m", x));
                    }
                }
            }
            Ok(())
        };
        Ok(Verdict::from_scan(format!("pairs (a, m) over {}", self.label()), scan()))
    }

    /// `a²m ∈ P ⇒ am ∈ P`.
    pub fn is_completely_semiprime(&self, p: &Substructure) -> Result<Verdict> {
        self.check_proper(p)?;
        let m = &self.module;
        let ring = m.ring();
        let scan = || {
            for a in ring.elements() {
                let a2 = ring.mul(a, a);
                for x in m.elements() {
                    if p.contains(m.act(a2, x)) && !p.contains(m.act(a, x)) {
                        let w = self.ring_witness(Witness::new(), "a", a);
                        return Err(self.elem_witness(w, "m", x));
                    }
                }
            }
            Ok(())
        };
        Ok(Verdict::from_scan(format!("pairs (a, m) over {}", self.label()), scan()))
    }

    /// Prime submodules in canonical order.
    pub fn prime_submodules(&self) -> impl Iterator<Item = &Substructure> {
        self.lattice.iter().zip(&self.prime).filter(|(_, &p)| p).map(|(s, _)| s)
    }

    pub fn completely_prime_submodules(&self) -> impl Iterator<Item = &Substructure> {
        self.lattice
            .iter()
            .zip(&self.completely_prime)
            .filter(|(_, &p)| p)
            .map(|(s, _)| s)
    }

    /// `β(M)`; `M` when there are no prime submodules.
    pub fn beta(&self) -> Substructure {
        intersect_family(&self.module, Kind::Submodule, self.prime_submodules()).expect("same parent")
    }

    /// `β_co(M)`; `M` when there are no completely prime submodules.
    pub fn beta_co(&self) -> Substructure {
        intersect_family(&self.module, Kind::Submodule, self.completely_prime_submodules()).expect("same parent")
    }

    /// `β^s(N)`: intersection of the prime submodules containing `N`.
    pub fn beta_s(&self, n: &Substructure) -> Result<Substructure> {
        self.check(n)?;
        intersect_family(&self.module, Kind::Submodule, self.prime_submodules().filter(|p| n.is_subset(p)))
    }

    /// `β_co^s(N)`: intersection of the completely prime submodules containing `N`.
    pub fn beta_co_s(&self, n: &Substructure) -> Result<Substructure> {
        self.check(n)?;
        intersect_family(
            &self.module,
            Kind::Submodule,
            self.completely_prime_submodules().filter(|p| n.is_subset(p)),
        )
    }
}
