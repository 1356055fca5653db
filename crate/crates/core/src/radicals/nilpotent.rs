use super::module_level::ModuleAnalysis;
use crate::error::{Error, Result};
use crate::substructure::{additive_span, ElementSet, Substructure};

impl ModuleAnalysis {
    /// The largest set `S` of ring elements with `aRm ≠ 0` and `aRa ∩ S ≠ ∅` for
    /// every `a ∈ S`. Its members start infinite sequences `a₁ = a`,
    /// `a_{n+1} ∈ a_n R a_n` that never annihilate `m` through `R`.
    pub fn persistent_set(&self, m: usize) -> ElementSet {
        let module = &self.module;
        let ring = module.ring();
        let zero = module.zero();
        let mut s = ElementSet::with_capacity(ring.size());
        s.extend(
            ring.elements()
                .filter(|&a| self.orbits[m].iter().any(|&x| module.act(a, x) != zero)),
        );
        loop {
            let dead: Vec<usize> = s
                .ones()
                .filter(|&a| !self.ring.ara(a).iter().any(|&b| s.contains(b)))
                .collect();
            if dead.is_empty() {
                return s;
            }
            for a in dead {
                s.set(a, false);
            }
        }
    }

    /// Every sequence `a₁ = a`, `a_{n+1} ∈ a_n R a_n` reaches some `a_k` with `a_k R m = 0`.
    pub fn eventually_annihilating(&self, a: usize, m: usize) -> bool {
        !self.persistent_set(m).contains(a)
    }

    /// `𝒩_s(M)`: the additive closure of the products `am` with `a` eventually
    /// annihilating `m`. Closure under the action is checked, not imposed.
    pub fn strongly_nilpotent(&self) -> Result<Substructure> {
        let module = &self.module;
        let ring = module.ring();
        let mut gens = ElementSet::with_capacity(module.size());
        gens.insert(module.zero());
        for m in module.elements() {
            let persistent = self.persistent_set(m);
            gens.extend(
                ring.elements()
                    .filter(|&a| !persistent.contains(a))
                    .map(|a| module.act(a, m)),
            );
        }
        let span = additive_span(module, gens.ones());
        for x in span.ones() {
            for r in ring.elements() {
                let y = module.act(r, x);
                if !span.contains(y) {
                    return Err(Error::InvariantBreach(format!(
                        "strongly nilpotent elements of `{}` are not closed under the action: {} * {} = {}",
                        module.label(),
                        ring.name(r),
                        module.name(x),
                        module.name(y)
                    )));
                }
            }
        }
        Ok(self.sub(span))
    }
}
