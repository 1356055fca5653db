use serde::Serialize;

use super::module_level::ModuleAnalysis;
use super::verdict::{Verdict, Witness};

/// Element-condition module classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassFlags {
    pub ifp: Verdict,
    pub symmetric: Verdict,
    pub semi_symmetric: Verdict,
    pub lee_zhou_reduced: Verdict,
}

impl ModuleAnalysis {
    fn pairs_universe(&self) -> String {
        format!("pairs (a, m) over {}", self.module.label())
    }

    fn w(&self) -> WitnessBuilder<'_> {
        WitnessBuilder {
            a: self,
            w: Witness::new(),
        }
    }

    /// `am = 0 ⇒ aRm = 0`.
    pub fn ifp(&self) -> Verdict {
        let m = &self.module;
        let ring = m.ring();
        let scan = || {
            for a in ring.elements() {
                for x in m.elements().filter(|&x| m.act(a, x) == m.zero()) {
                    if let Some(r) = ring.elements().find(|&r| m.act(a, m.act(r, x)) != m.zero()) {
                        return Err(self.w().ring("a", a).elem("m", x).ring("r", r).done());
                    }
                }
            }
            Ok(())
        };
        Verdict::from_scan(self.pairs_universe(), scan())
    }

    /// `abm = 0 ⇒ bam = 0`.
    pub fn symmetric(&self) -> Verdict {
        let m = &self.module;
        let ring = m.ring();
        let scan = || {
            for a in ring.elements() {
                for b in ring.elements() {
                    for x in m.elements() {
                        if m.act(a, m.act(b, x)) == m.zero() && m.act(b, m.act(a, x)) != m.zero() {
                            return Err(self.w().ring("a", a).ring("b", b).elem("m", x).done());
                        }
                    }
                }
            }
            Ok(())
        };
        Verdict::from_scan(format!("triples (a, b, m) over {}", m.label()), scan())
    }

    /// `a²m = 0 ⇒ (a)²m = 0`, with `(a)` the two-sided ideal generated by `a`.
    pub fn semi_symmetric(&self) -> Verdict {
        let m = &self.module;
        let ring = m.ring();
        let scan = || {
            for a in ring.elements() {
                let a2 = ring.mul(a, a);
                let ideal = self.ring.principal_ideal(a);
                for x in m.elements().filter(|&x| m.act(a2, x) == m.zero()) {
                    for &y in ideal {
                        let yx = m.act(y, x);
                        if let Some(&z) = ideal.iter().find(|&&z| m.act(z, yx) != m.zero()) {
                            return Err(self.w().ring("a", a).elem("m", x).ring("x", z).ring("y", y).done());
                        }
                    }
                }
            }
            Ok(())
        };
        Verdict::from_scan(self.pairs_universe(), scan())
    }

    /// `a²m = 0 ⇒ aRm = 0`.
    pub fn lee_zhou_reduced(&self) -> Verdict {
        let m = &self.module;
        let ring = m.ring();
        let scan = || {
            for a in ring.elements() {
                let a2 = ring.mul(a, a);
                for x in m.elements().filter(|&x| m.act(a2, x) == m.zero()) {
                    if let Some(r) = ring.elements().find(|&r| m.act(a, m.act(r, x)) != m.zero()) {
                        return Err(self.w().ring("a", a).elem("m", x).ring("r", r).done());
                    }
                }
            }
            Ok(())
        };
        Verdict::from_scan(self.pairs_universe(), scan())
    }

    /// The annihilator form of the Lee–Zhou condition: `am = 0 ⇒ Rm ∩ aM = 0`.
    pub fn lee_zhou_reduced_annihilator_form(&self) -> Verdict {
        let m = &self.module;
        let ring = m.ring();
        let scan = || {
            for a in ring.elements() {
                let mut am = crate::substructure::ElementSet::with_capacity(m.size());
                am.extend(m.elements().map(|y| m.act(a, y)));
                for x in m.elements().filter(|&x| m.act(a, x) == m.zero()) {
                    if let Some(&y) = self.orbits[x].iter().find(|&&y| y != m.zero() && am.contains(y)) {
                        return Err(self.w().ring("a", a).elem("m", x).elem("common", y).done());
                    }
                }
            }
            Ok(())
        };
        Verdict::from_scan(self.pairs_universe(), scan())
    }

    pub fn class_flags(&self) -> ClassFlags {
        ClassFlags {
            ifp: self.ifp(),
            symmetric: self.symmetric(),
            semi_symmetric: self.semi_symmetric(),
            lee_zhou_reduced: self.lee_zhou_reduced(),
        }
    }
}

struct WitnessBuilder<'a> {
    a: &'a ModuleAnalysis,
    w: Witness,
}

impl WitnessBuilder<'_> {
    fn ring(mut self, role: &str, r: usize) -> Self {
        self.w = self.w.ring(role, r, self.a.module.ring().name(r));
        self
    }

    fn elem(mut self, role: &str, m: usize) -> Self {
        self.w = self.w.elem(role, m, self.a.module.name(m));
        self
    }

    fn done(self) -> Witness {
        self.w
    }
}
