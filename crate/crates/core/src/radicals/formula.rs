use serde::Serialize;

use super::module_level::ModuleAnalysis;
use super::verdict::{Verdict, Witness};
use crate::error::{Error, Result};
use crate::module::{quotient_module, FiniteModule, ModuleHom};
use crate::substructure::{annihilator, ElementSet, Substructure};

impl ModuleAnalysis {
    /// `β(M) = β_co(M)`.
    pub fn two_primal(&self) -> Verdict {
        let (b, bc) = (self.beta(), self.beta_co());
        let universe = format!("prime and completely prime submodules of {}", self.module.label());
        if b == bc {
            Verdict::pass(universe)
        } else {
            Verdict::fail(universe, Witness::new().set("beta", &b).set("beta_co", &bc))
        }
    }

    /// `N` is 2-primal when `M/N` is a 2-primal module.
    pub fn submodule_two_primal(&self, n: &Substructure) -> Result<Verdict> {
        self.check(n)?;
        let (q, _) = quotient_module(&self.module, n)?;
        let qa = ModuleAnalysis::with_ring(&q, self.ring.clone())?;
        let mut v = qa.two_primal();
        if let Some(w) = v.witness.take() {
            let mut out = Witness::new().set("N", n);
            out.0.extend(w.0.into_iter().map(|mut e| {
                e.role = format!("{} of M/N", e.role);
                e
            }));
            v.witness = Some(out);
        }
        Ok(v)
    }

    fn formula_check(&self, n: &Substructure, complete: bool) -> Result<Verdict> {
        let env = self.envelope_submodule(n)?;
        let rad = if complete { self.beta_co_s(n)? } else { self.beta_s(n)? };
        let name = if complete { "beta_co_s" } else { "beta_s" };
        let universe = format!("one submodule of {}", self.module.label());
        Ok(if env == rad {
            Verdict::pass(universe)
        } else {
            Verdict::fail(universe, Witness::new().set("N", n).set("envelope", &env).set(name, &rad))
        })
    }

    /// `⟨E_M(N)⟩ = β^s(N)`.
    pub fn submodule_rf(&self, n: &Substructure) -> Result<Verdict> {
        self.formula_check(n, false)
    }

    /// `⟨E_M(N)⟩ = β_co^s(N)`.
    pub fn submodule_crf(&self, n: &Substructure) -> Result<Verdict> {
        self.formula_check(n, true)
    }

    fn module_formula(&self, complete: bool) -> Result<Verdict> {
        for n in &self.lattice {
            let v = self.formula_check(n, complete)?;
            if !v.holds {
                return Ok(Verdict {
                    checked_universe: format!("all {} submodules of {}", self.lattice.len(), self.module.label()),
                    ..v
                });
            }
        }
        Ok(Verdict::pass(format!(
            "all {} submodules of {}",
            self.lattice.len(),
            self.module.label()
        )))
    }

    /// Every submodule satisfies the radical formula.
    pub fn satisfies_rf(&self) -> Result<Verdict> {
        self.module_formula(false)
    }

    /// Every submodule satisfies the complete radical formula.
    pub fn satisfies_crf(&self) -> Result<Verdict> {
        self.module_formula(true)
    }

    /// `(N : M)`, as an ideal of the analysed ring.
    pub fn colon(&self, n: &Substructure) -> Result<Substructure> {
        self.check(n)?;
        let a = annihilator(&self.module, n)?;
        Ok(a.reparent(self.ring.ring().id(), a.kind()))
    }

    /// `M/N` is torsion-free over `R/(N:M)`, read element-wise:
    /// `r ∉ (N:M)` and `m ∉ N` give `rm ∉ N`.
    pub fn torsion_free_elementwise(&self, n: &Substructure) -> Result<Verdict> {
        let p = self.colon(n)?;
        let m = &self.module;
        let scan = || {
            for r in m.ring().elements().filter(|&r| !p.contains(r)) {
                for x in m.elements().filter(|&x| !n.contains(x)) {
                    if n.contains(m.act(r, x)) {
                        return Err(Witness::new().ring("r", r, m.ring().name(r)).elem("m", x, m.name(x)));
                    }
                }
            }
            Ok(())
        };
        Ok(Verdict::from_scan(format!("pairs (r, m) over {}", m.label()), scan()))
    }

    /// `M/N` is torsion-free over `R/(N:M)`, read ideal-wise: an ideal `A ⊄ (N:M)`
    /// and a submodule `K ⊄ N` give `AK ⊄ N`.
    pub fn torsion_free_ideal(&self, n: &Substructure) -> Result<Verdict> {
        let p = self.colon(n)?;
        let m = &self.module;
        let scan = || {
            for a in self.ring.ideals().iter().filter(|a| !a.is_subset(&p)) {
                for k in self.lattice.iter().filter(|k| !k.is_subset(n)) {
                    let inside = a
                        .members()
                        .ones()
                        .all(|r| k.members().ones().all(|x| n.contains(m.act(r, x))));
                    if inside {
                        return Err(Witness::new().set("A", a).set("K", k));
                    }
                }
            }
            Ok(())
        };
        Ok(Verdict::from_scan(
            format!("ideals of {} and submodules of {}", m.ring().label(), m.label()),
            scan(),
        ))
    }

    /// When `β_co(M) = 0`, the family of projections `M → M/N` over the completely
    /// prime submodules `N`, checked to be a subdirect representation.
    pub fn subdirect_decomposition(&self) -> Result<Subdirect> {
        let bc = self.beta_co();
        let universe = format!("completely prime submodules of {}", self.module.label());
        if !bc.is_zero() {
            return Ok(Subdirect {
                factors: None,
                verdict: Verdict::fail(universe, Witness::new().set("beta_co", &bc)),
            });
        }
        let mut factors = Vec::new();
        let mut joint = ElementSet::with_capacity(self.module.size());
        joint.insert_range(..);
        for n in self.completely_prime_submodules() {
            let (q, proj) = quotient_module(&self.module, n)?;
            joint.intersect_with(proj.kernel().members());
            let qa = ModuleAnalysis::with_ring(&q, self.ring.clone())?;
            let factor_cp = qa.is_completely_prime(qa.zero())?;
            if !proj.is_surjective() || !factor_cp.holds {
                return Err(Error::InvariantBreach(format!(
                    "subdirect factor {} of `{}` is not a completely prime quotient",
                    q.label(),
                    self.module.label()
                )));
            }
            factors.push(SubdirectFactor {
                submodule: n.clone(),
                quotient: q,
                projection: proj,
            });
        }
        let verdict = if joint.count_ones(..) <= 1 {
            Verdict::pass(universe)
        } else {
            Verdict::fail(universe, Witness::new().set("joint kernel", &self.sub(joint)))
        };
        Ok(Subdirect {
            factors: Some(factors),
            verdict,
        })
    }
}

#[derive(Debug, Clone)]
pub struct SubdirectFactor {
    pub submodule: Substructure,
    pub quotient: FiniteModule,
    pub projection: ModuleHom,
}

/// Outcome of `subdirect_decomposition`: the factors when `β_co(M) = 0`.
#[derive(Debug, Clone)]
pub struct Subdirect {
    pub factors: Option<Vec<SubdirectFactor>>,
    pub verdict: Verdict,
}

impl Subdirect {
    pub fn exists(&self) -> bool {
        self.factors.is_some() && self.verdict.holds
    }
}

/// The four transfer implications for an epimorphism `φ : M → M'` and `N ⊇ ker φ`,
/// with `N' = φ(N)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomTransfer {
    pub verdict: Verdict,
    pub source_crf: bool,
    pub image_crf: bool,
    pub preimage_crf: bool,
    pub source_rf: bool,
    pub image_rf: bool,
    pub preimage_rf: bool,
}

pub fn hom_transfer_check(phi: &ModuleHom, n: &Substructure) -> Result<HomTransfer> {
    let src = ModuleAnalysis::new(phi.source())?;
    let tgt = ModuleAnalysis::with_ring(phi.target(), src.ring_analysis().clone())?;
    hom_transfer_check_with(&src, &tgt, phi, n)
}

/// As [`hom_transfer_check`], reusing analyses of the source and target.
pub fn hom_transfer_check_with(
    src: &ModuleAnalysis,
    tgt: &ModuleAnalysis,
    phi: &ModuleHom,
    n: &Substructure,
) -> Result<HomTransfer> {
    if phi.source().id() != src.module().id() || phi.target().id() != tgt.module().id() {
        return Err(Error::RingMismatch);
    }
    if !phi.is_surjective() {
        return Err(Error::NotEpimorphism);
    }
    src.check(n)?;
    if !phi.kernel().is_subset(n) {
        return Err(Error::KernelNotContained);
    }
    let image = phi.image_of(n)?;
    let pre = phi.preimage(&image)?;
    let source_crf = src.submodule_crf(n)?.holds;
    let image_crf = tgt.submodule_crf(&image)?.holds;
    let preimage_crf = src.submodule_crf(&pre)?.holds;
    let source_rf = src.submodule_rf(n)?.holds;
    let image_rf = tgt.submodule_rf(&image)?.holds;
    let preimage_rf = src.submodule_rf(&pre)?.holds;
    let implications = [
        ("(i)", source_crf, image_crf),
        ("(ii)", image_crf, preimage_crf),
        ("(iii)", source_rf, image_rf),
        ("(iv)", image_rf, preimage_rf),
    ];
    let universe = format!(
        "transfer along {} -> {}",
        phi.source().label(),
        phi.target().label()
    );
    let verdict = match implications.iter().find(|(_, hyp, concl)| *hyp && !*concl) {
        None => Verdict::pass(universe),
        Some((name, _, _)) => Verdict::fail(
            universe,
            Witness::new()
                .note("implication", *name)
                .set("N", n)
                .set("phi(N)", &image),
        ),
    };
    Ok(HomTransfer {
        verdict,
        source_crf,
        image_crf,
        preimage_crf,
        source_rf,
        image_rf,
        preimage_rf,
    })
}
