//! Theorem suites: each checks one family of claims on every catalog instance.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{module_example_exx, Catalog};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::module::{quotient_module, FiniteModule, ModuleHom, Tag};
use crate::radicals::{
    hom_transfer_check_with, ModuleAnalysis, RingAnalysis, RingTwoPrimality, Verdict, Witness,
};
use crate::substructure::{all_substructures, additive_span, ElementSet, Kind, Substructure};

pub struct SuiteInfo {
    pub name: &'static str,
    pub description: &'static str,
}

pub const SUITES: [SuiteInfo; 17] = [
    SuiteInfo {
        name: "eq1-chain",
        description: "E_R(0) = N(R) = beta(R) = beta_co(R) for commutative rings; ring radicals match the regular module",
    },
    SuiteInfo {
        name: "lemma-ll-chain",
        description: "<E_M(N)> in beta_co^s(N) for every N; N_s(M) in <E_M(0)> in beta_co(M); beta(M) in beta_co(M)",
    },
    SuiteInfo {
        name: "prop-pr",
        description: "E_M(N) = N iff N is completely semiprime, for proper N",
    },
    SuiteInfo {
        name: "cor-gd",
        description: "Lee-Zhou reduced iff IFP and E_M(0) = 0; both Lee-Zhou conditions agree",
    },
    SuiteInfo {
        name: "thm-prim",
        description: "beta(R) in N(R) in E_R(0) in beta_co(R); 2-primal iff beta(R) = E_R(0)",
    },
    SuiteInfo {
        name: "cor-2m",
        description: "2-primal rings: beta = N = E_R(0) = beta_co = N_s(_RR), and N(R) is an ideal",
    },
    SuiteInfo {
        name: "prop-p-agreement",
        description: "the three ring 2-primality criteria agree and match the known families",
    },
    SuiteInfo {
        name: "prop-annihilator",
        description: "N (completely) prime iff (N:M) is a (completely) prime ideal and M/N is torsion-free",
    },
    SuiteInfo {
        name: "prop-pf",
        description: "complete radical formula iff every completely semiprime N equals beta_co^s(N)",
    },
    SuiteInfo {
        name: "prop-ccc",
        description: "2-primal modules: complete radical formula iff radical formula",
    },
    SuiteInfo {
        name: "thm-rf",
        description: "under the complete radical formula: completely semiprime iff <E_M(0)> = 0 iff beta_co(M) = 0 iff subdirect product of completely prime modules",
    },
    SuiteInfo {
        name: "thm-fg",
        description: "modules over 2-primal rings satisfy both radical formulas, are 2-primal, and N_s = <E> = beta_co = beta",
    },
    SuiteInfo {
        name: "thm-lt",
        description: "modules over 2-primal rings are 2-primal; beta(M) completely prime implies 2-primal",
    },
    SuiteInfo {
        name: "thm-pl",
        description: "beta_co(M) = 0, <E_M(0)> = M, regular modules of 2-primal rings, and projective 2-primal modules satisfy the complete radical formula",
    },
    SuiteInfo {
        name: "hom-transfer",
        description: "radical formulas transfer along epimorphisms M -> M/K and R^n -> R/I",
    },
    SuiteInfo {
        name: "ring-properties",
        description: "Dedekind finiteness, Koethe, primes completely prime and semisimplicity of catalog rings",
    },
    SuiteInfo {
        name: "example-exx-golden",
        description: "the 4-element module over M2(Z2): lattice {0, M}, beta = 0, beta_co = <E_M(0)> = M, CRF but not RF at 0, not 2-primal",
    },
];

pub fn suite_names() -> impl Iterator<Item = &'static str> {
    SUITES.iter().map(|s| s.name)
}

/// One `(instance, check)` result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub instance: String,
    pub check: String,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub description: String,
    pub passed: bool,
    pub checks: usize,
    pub failures: usize,
    pub outcomes: Vec<CheckOutcome>,
}

/// Analyses of every catalog ring and module, built once and shared by the suites.
pub struct SuiteContext {
    pub catalog: Catalog,
    rings: Vec<Arc<RingAnalysis>>,
    two_primality: Vec<Result<RingTwoPrimality>>,
    /// `(entry index, analysis)` in catalog order.
    modules: Vec<(usize, ModuleAnalysis)>,
}

impl SuiteContext {
    pub fn new(catalog: Catalog) -> Result<Self> {
        let rings: Vec<Arc<RingAnalysis>> = catalog
            .entries
            .par_iter()
            .map(|e| RingAnalysis::new(&e.ring).map(Arc::new))
            .collect::<Result<_>>()?;
        let two_primality = rings.par_iter().map(|r| r.two_primal()).collect();
        let jobs: Vec<(usize, &FiniteModule)> = catalog
            .entries
            .iter()
            .enumerate()
            .flat_map(|(i, e)| e.modules.iter().map(move |m| (i, m)))
            .collect();
        let modules = jobs
            .par_iter()
            .map(|&(i, m)| ModuleAnalysis::with_ring(m, rings[i].clone()).map(|a| (i, a)))
            .collect::<Result<_>>()?;
        Ok(SuiteContext {
            catalog,
            rings,
            two_primality,
            modules,
        })
    }

    pub fn default_catalog() -> Result<Self> {
        SuiteContext::new(Catalog::default_catalog()?)
    }

    fn ring_two_primal(&self, i: usize) -> Option<bool> {
        self.two_primality[i].as_ref().ok().map(|t| t.verdict.holds)
    }

    fn ring_label(&self, i: usize) -> &str {
        self.rings[i].ring().label()
    }

    /// Runs `f` on every module in parallel and concatenates results in catalog order.
    fn per_module<F>(&self, f: F) -> Result<Vec<CheckOutcome>>
    where
        F: Fn(usize, &ModuleAnalysis) -> Result<Vec<CheckOutcome>> + Sync,
    {
        let parts: Vec<Vec<CheckOutcome>> = self
            .modules
            .par_iter()
            .map(|(i, a)| f(*i, a))
            .collect::<Result<_>>()?;
        Ok(parts.into_iter().flatten().collect())
    }

    fn per_ring<F>(&self, f: F) -> Result<Vec<CheckOutcome>>
    where
        F: Fn(usize, &RingAnalysis) -> Result<Vec<CheckOutcome>> + Sync,
    {
        let parts: Vec<Vec<CheckOutcome>> = self
            .rings
            .par_iter()
            .enumerate()
            .map(|(i, r)| f(i, r))
            .collect::<Result<_>>()?;
        Ok(parts.into_iter().flatten().collect())
    }
}

pub fn run_suite(name: &str, ctx: &SuiteContext) -> Result<SuiteReport> {
    let info = SUITES
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownSuite(name.to_string()))?;
    let outcomes = match name {
        "eq1-chain" => eq1_chain(ctx),
        "lemma-ll-chain" => lemma_ll_chain(ctx),
        "prop-pr" => prop_pr(ctx),
        "cor-gd" => cor_gd(ctx),
        "thm-prim" => thm_prim(ctx),
        "cor-2m" => cor_2m(ctx),
        "prop-p-agreement" => prop_p_agreement(ctx),
        "prop-annihilator" => prop_annihilator(ctx),
        "prop-pf" => prop_pf(ctx),
        "prop-ccc" => prop_ccc(ctx),
        "thm-rf" => thm_rf(ctx),
        "thm-fg" => thm_fg(ctx),
        "thm-lt" => thm_lt(ctx),
        "thm-pl" => thm_pl(ctx),
        "hom-transfer" => hom_transfer(ctx),
        "ring-properties" => ring_properties(ctx),
        "example-exx-golden" => example_exx_golden(),
        _ => unreachable!("suite table and dispatch agree"),
    }?;
    let failures = outcomes.iter().filter(|o| !o.verdict.holds).count();
    Ok(SuiteReport {
        suite: name.to_string(),
        description: info.description.to_string(),
        passed: failures == 0,
        checks: outcomes.len(),
        failures,
        outcomes,
    })
}

// ---------------------------------------------------------------------------
// helpers

/// Turns engine errors inside a check into failing verdicts. Size guards still abort.
fn outcome(instance: &str, check: &str, v: Result<Verdict>) -> Result<CheckOutcome> {
    let verdict = match v {
        Ok(v) => v,
        Err(e @ Error::SizeGuardExceeded { .. }) => return Err(e),
        Err(e) => Verdict::fail(check, Witness::new().note("error", e.to_string())),
    };
    Ok(CheckOutcome {
        instance: instance.to_string(),
        check: check.to_string(),
        verdict,
    })
}

fn module_instance(a: &ModuleAnalysis) -> String {
    format!("module {}", a.module().label())
}

fn ring_instance(r: &RingAnalysis) -> String {
    format!("ring {}", r.ring().label())
}

/// Applies `f` to each submodule; the first witness returned fails the check.
fn over_lattice(a: &ModuleAnalysis, f: impl Fn(&Substructure) -> Result<Option<Witness>>) -> Result<Verdict> {
    let universe = format!("all {} submodules of {}", a.lattice().len(), a.module().label());
    for n in a.lattice() {
        if let Some(w) = f(n)? {
            return Ok(Verdict::fail(universe, w));
        }
    }
    Ok(Verdict::pass(universe))
}

fn expect(universe: &str, ok: bool, w: impl FnOnce() -> Witness) -> Verdict {
    if ok {
        Verdict::pass(universe)
    } else {
        Verdict::fail(universe, w())
    }
}

fn set_witness(pairs: &[(&str, &Substructure)]) -> Witness {
    pairs.iter().fold(Witness::new(), |w, (role, s)| w.set(role, s))
}

fn bools_witness(pairs: &[(&str, bool)]) -> Witness {
    pairs
        .iter()
        .fold(Witness::new(), |w, (role, b)| w.note(role, b.to_string()))
}

fn ring_set(r: &RingAnalysis, s: &ElementSet) -> Substructure {
    // Ring subsets only used for reporting; kind is nominal.
    Substructure::from_set_unchecked(r.ring().id(), Kind::TwoSidedIdeal, s.clone())
}

fn holds(v: Result<Verdict>) -> Result<bool> {
    match v {
        Ok(v) => Ok(v.holds),
        Err(Error::NotProper) => Ok(false),
        Err(e) => Err(e),
    }
}

// ---------------------------------------------------------------------------
// ring suites

fn eq1_chain(ctx: &SuiteContext) -> Result<Vec<CheckOutcome>> {
    ctx.per_ring(|_, r| {
        let inst = ring_instance(r);
        let mut out = Vec::new();
        let ring = r.ring();
        let (b, bc) = (r.beta(), r.beta_co());
        let (nil, env) = (r.nil_elements(), r.envelope_zero());
        if ring.is_commutative() {
            let ok = env == nil && &nil == b.members() && b == bc;
            out.push(outcome(
                &inst,
                "commutative: E_R(0) = N(R) = beta(R) = beta_co(R)",
                Ok(expect("radicals of a commutative ring", ok, || {
                    set_witness(&[("E_R(0)", &ring_set(r, &env)), ("N(R)", &ring_set(r, &nil)), ("beta", &b), ("beta_co", &bc)])
                })),
            )?);
        }
        let reg = crate::module::FiniteModule::regular(ring)?;
        let ma = ModuleAnalysis::with_ring(&reg, Arc::new(RingAnalysis::new(ring)?))?;
        let ok = ma.beta().members() == b.members() && ma.beta_co().members() == bc.members();
        out.push(outcome(
            &inst,
            "beta(R) = beta(_RR) and beta_co(R) = beta_co(_RR)",
            Ok(expect("ideal and left-ideal radicals", ok, || {
                set_witness(&[("beta(R)", &b), ("beta(_RR)", &ma.beta()), ("beta_co(R)", &bc), ("beta_co(_RR)", &ma.beta_co())])
            })),
        )?);
        let menv = ma.envelope(ma.zero())?;
        out.push(outcome(
            &inst,
            "E_R(0) = E_{_RR}(0)",
            Ok(expect("ring and module envelopes", menv == env, || {
                set_witness(&[("E_R(0)", &ring_set(r, &env)), ("E_{_RR}(0)", &ring_set(r, &menv))])
            })),
        )?);
        Ok(out)
    })
}

fn thm_prim(ctx: &SuiteContext) -> Result<Vec<CheckOutcome>> {
    ctx.per_ring(|i, r| {
        let inst = ring_instance(r);
        let (b, bc) = (r.beta(), r.beta_co());
        let (nil, env) = (r.nil_elements(), r.envelope_zero());
        let chain = b.members().is_subset(&nil) && nil.is_subset(&env) && env.is_subset(bc.members());
        let mut out = vec![outcome(
            &inst,
            "beta(R) in N(R) in E_R(0) in beta_co(R)",
            Ok(expect("ring radical chain", chain, || {
                set_witness(&[("beta", &b), ("N(R)", &ring_set(r, &nil)), ("E_R(0)", &ring_set(r, &env)), ("beta_co", &bc)])
            })),
        )?];
        let v = match &ctx.two_primality[i] {
            Ok(t) => {
                let agree = t.verdict.holds == t.beta_eq_envelope;
                Ok(expect("2-primality against beta(R) = E_R(0)", agree, || {
                    bools_witness(&[("2-primal", t.verdict.holds), ("beta = E_R(0)", t.beta_eq_envelope)])
                }))
            }
            Err(e) => Err(e.clone()),
        };
        out.push(outcome(&inst, "2-primal iff beta(R) = E_R(0)", v)?);
        Ok(out)
    })
}

fn cor_2m(ctx: &SuiteContext) -> Result<Vec<CheckOutcome>> {
    ctx.per_ring(|i, r| {
        if ctx.ring_two_primal(i) != Some(true) {
            return Ok(Vec::new());
        }
        let inst = ring_instance(r);
        let ring = r.ring();
        let (b, bc) = (r.beta(), r.beta_co());
        let (nil, env) = (r.nil_elements(), r.envelope_zero());
        let reg = crate::module::FiniteModule::regular(ring)?;
        let ma = ModuleAnalysis::with_ring(&reg, ctx.rings[i].clone())?;
        let ns = ma.strongly_nilpotent();
        let mut out = Vec::new();
        let v = ns.map(|ns| {
            let ok = b.members() == &nil && nil == env && b == bc && ns.members() == b.members();
            expect("radicals of a 2-primal ring", ok, || {
                set_witness(&[
                    ("beta", &b),
                    ("N(R)", &ring_set(r, &nil)),
                    ("E_R(0)", &ring_set(r, &env)),
                    ("beta_co", &bc),
                    ("N_s(_RR)", &ns),
                ])
            })
        });
        out.push(outcome(&inst, "beta = N(R) = E_R(0) = beta_co = N_s(_RR)", v)?);
        let span = additive_span(ring, nil.ones());
        out.push(outcome(
            &inst,
            "N(R) is an ideal",
            Ok(expect("nilpotent elements", span == nil, || {
                set_witness(&[("N(R)", &ring_set(r, &nil)), ("additive span", &ring_set(r, &span))])
            })),
        )?);
        Ok(out)
    })
}

/// 2-primality forced by the construction: commutative rings are, full matrix rings of size at least 2 are not.
fn known_two_primality(r: &RingAnalysis) -> Option<bool> {
    let ring = r.ring();
    if ring.is_commutative() {
        return Some(true);
    }
    let label = ring.label();
    let k: Option<usize> = label
        .strip_prefix('M')
        .and_then(|rest| rest.split('(').next())
        .and_then(|k| k.parse().ok());
    match k {
        Some(k) if k >= 2 => Some(false),
        _ => None,
    }
}

fn prop_p_agreement(ctx: &SuiteContext) -> Result<Vec<CheckOutcome>> {
    ctx.per_ring(|i, r| {
        let inst = ring_instance(r);
        let mut out = Vec::new();
        let t = ctx.two_primality[i].clone();
        out.push(outcome(
            &inst,
            "N = beta, beta_co = beta and beta = E_R(0) agree",
            t.clone().map(|t| t.verdict.clone()).map(|_| Verdict::pass("three criteria")),
        )?);
        if let (Some(expected), Ok(t)) = (known_two_primality(r), t) {
            out.push(outcome(
                &inst,
                "2-primality matches the ring family",
                Ok(expect("known 2-primality", t.verdict.holds == expected, || {
                    bools_witness(&[("expected", expected), ("computed", t.verdict.holds)])
                })),
            )?);
        }
        if r.ring().label().starts_with('U') {
            if let Ok(t) = &ctx.two_primality[i] {
                let strict: Vec<usize> = r
                    .ring()
                    .elements()
                    .filter(|&x| r.is_nilpotent(x))
                    .collect();
                out.push(outcome(
                    &inst,
                    "upper triangular: 2-primal with beta = N(R)",
                    Ok(expect("upper triangular ring", t.verdict.holds && t.beta == strict, || {
                        bools_witness(&[("2-primal", t.verdict.holds)])
                    })),
                )?);
            }
        }
        Ok(out)
    })
}

fn ring_properties(ctx: &SuiteContext) -> Result<Vec<CheckOutcome>> {
    let ring_checks = ctx.per_ring(|i, r| {
        let inst = ring_instance(r);
        let p = r.properties()?;
        let two_primal = ctx.ring_two_primal(i) == Some(true);
        let mut out = vec![outcome(&inst, "Dedekind finite", Ok(p.dedekind_finite.clone()))?];
        if two_primal {
            out.push(outcome(&inst, "2-primal: Koethe (nil left ideal sums are nil)", Ok(p.kothe_finite_scale.clone()))?);
            out.push(outcome(&inst, "2-primal: prime ideals are completely prime", Ok(p.primes_completely_prime.clone()))?);
        }
        if known_two_primality(r) == Some(false) {
            out.push(outcome(
                &inst,
                "full matrix ring: some prime ideal is not completely prime",
                Ok(expect("prime ideals", !p.primes_completely_prime.holds, || {
                    Witness::new().note("primes", "all prime ideals are completely prime")
                })),
            )?);
        }
        // semisimple iff every left ideal has a complement
        let left = r.left_ideals()?;
        let complemented = left.iter().all(|l| {
            left.iter().any(|k| {
                let mut meet = l.members().clone();
                meet.intersect_with(k.members());
                let mut join = l.members().clone();
                join.union_with(k.members());
                meet.count_ones(..) == 1 && additive_span(r.ring(), join.ones()).count_ones(..) == r.ring().size()
            })
        });
        out.push(outcome(
            &inst,
            "semisimple iff the left ideal lattice is complemented",
            Ok(expect("maximal left ideals and complements", p.is_semisimple.holds == complemented, || {
                bools_witness(&[("J(R) = 0", p.is_semisimple.holds), ("complemented", complemented)])
            })),
        )?);
        Ok(out)
    })?;
    // semisimple 2-primal rings: every module satisfies both formulas
    let module_checks = ctx.per_module(|i, a| {
        let r = &ctx.rings[i];
        if ctx.ring_two_primal(i) != Some(true) || !r.properties()?.is_semisimple.holds {
            return Ok(Vec::new());
        }
        let inst = module_instance(a);
        Ok(vec![
            outcome(&inst, "semisimple 2-primal ring: complete radical formula", a.satisfies_crf())?,
            outcome(&inst, "semisimple 2-primal ring: radical formula", a.satisfies_rf())?,
        ])
    })?;
    Ok(ring_checks.into_iter().chain(module_checks).collect())
}

// ---------------------------------------------------------------------------
// module suites

fn lemma_ll_chain(ctx: &SuiteContext) -> Result<Vec<CheckOutcome>> {
    ctx.per_module(|_, a| {
        let inst = module_instance(a);
        let per_n = over_lattice(a, |n| {
            let env = a.envelope_submodule(n)?;
            let bcs = a.beta_co_s(n)?;
            Ok((!env.is_subset(&bcs)).then(|| set_witness(&[("N", n), ("envelope", &env), ("beta_co_s", &bcs)])))
        });
        let chain = (|| {
            let ns = a.strongly_nilpotent()?;
            let env = a.envelope_submodule(a.zero())?;
            let (b, bc) = (a.beta(), a.beta_co());
            let ok = ns.is_subset(&env) && env.is_subset(&bc) && b.is_subset(&bc);
            Ok(expect("radicals of the module", ok, || {
                set_witness(&[("N_s", &ns), ("envelope", &env), ("beta", &b), ("beta_co", &bc)])
            }))
        })();
        Ok(vec![
            outcome(&inst, "<E_M(N)> in beta_co^s(N)", per_n)?,
            outcome(&inst, "N_s(M) in <E_M(0)> in beta_co(M), beta(M) in beta_co(M)", chain)?,
        ])
    })
}

fn prop_pr(ctx: &SuiteContext) -> Result<Vec<CheckOutcome>> {
    ctx.per_module(|_, a| {
        let v = over_lattice(a, |n| {
            if n.is_full() {
                return Ok(None);
            }
            let fixed = a.envelope(n)? == *n.members();
            let csp = a.is_completely_semiprime(n)?.holds;
            Ok((fixed != csp).then(|| {
                set_witness(&[("N", n)])
                    .note("E_M(N) = N", fixed.to_string())
                    .note("completely semiprime", csp.to_string())
            }))
        });
        Ok(vec![outcome(&module_instance(a), "E_M(N) = N iff completely semiprime", v)?])
    })
}

fn cor_gd(ctx: &SuiteContext) -> Result<Vec<CheckOutcome>> {
    ctx.per_module(|_, a| {
        let inst = module_instance(a);
        let lz = a.lee_zhou_reduced().holds;
        let ifp = a.ifp().holds;
        let env_zero = a.envelope(a.zero())?.count_ones(..) == 1;
        let alt = a.lee_zhou_reduced_annihilator_form().holds;
        Ok(vec![
            outcome(
                &inst,
                "Lee-Zhou reduced iff IFP and E_M(0) = 0",
                Ok(expect("module classes", lz == (ifp && env_zero), || {
                    bools_witness(&[("lee_zhou_reduced", lz), ("ifp", ifp), ("E_M(0) = 0", env_zero)])
                })),
            )?,
            outcome(
                &inst,
                "a^2 m = 0 => aRm = 0 iff am = 0 => Rm meet aM = 0",
                Ok(expect("Lee-Zhou conditions", lz == alt, || {
                    bools_witness(&[("square form", lz), ("annihilator form", alt)])
                })),
            )?,
        ])
    })
}

fn prop_annihilator(ctx: &SuiteContext) -> Result<Vec<CheckOutcome>> {
    ctx.per_module(|i, a| {
        let r = &ctx.rings[i];
        let inst = module_instance(a);
        let cp = over_lattice(a, |n| {
            let lhs = holds(a.is_completely_prime(n))?;
            let colon = a.colon(n)?;
            let rhs = holds(r.is_completely_prime_ideal(&colon))? && a.torsion_free_elementwise(n)?.holds;
            Ok((lhs != rhs).then(|| {
                set_witness(&[("N", n), ("(N:M)", &colon)])
                    .note("completely prime", lhs.to_string())
                    .note("ideal and torsion-free", rhs.to_string())
            }))
        });
        let prime = over_lattice(a, |n| {
            let lhs = holds(a.is_prime(n))?;
            let colon = a.colon(n)?;
            let rhs = holds(r.is_prime_ideal(&colon))? && a.torsion_free_ideal(n)?.holds;
            Ok((lhs != rhs).then(|| {
                set_witness(&[("N", n), ("(N:M)", &colon)])
                    .note("prime", lhs.to_string())
                    .note("ideal and torsion-free", rhs.to_string())
            }))
        });
        Ok(vec![
            outcome(&inst, "completely prime iff (N:M) completely prime and M/N torsion-free", cp)?,
            outcome(&inst, "prime iff (N:M) prime and M/N torsion-free (ideal form)", prime)?,
        ])
    })
}

fn prop_pf(ctx: &SuiteContext) -> Result<Vec<CheckOutcome>> {
    ctx.per_module(|_, a| {
        let crf = a.satisfies_crf()?.holds;
        let mut bad = None;
        for n in a.lattice().iter().filter(|n| !n.is_full()) {
            if a.is_completely_semiprime(n)?.holds && a.beta_co_s(n)? != *n {
                bad = Some(n.clone());
                break;
            }
        }
        let ok = crf == bad.is_none();
        let v = expect("completely semiprime submodules", ok, || {
            let w = Witness::new().note("complete radical formula", crf.to_string());
            match &bad {
                Some(n) => w.set("completely semiprime N != beta_co^s(N)", n),
                None => w.note("every completely semiprime N", "is an intersection of completely prime submodules"),
            }
        });
        Ok(vec![outcome(
            &module_instance(a),
            "CRF iff completely semiprime submodules are completely prime intersections",
            Ok(v),
        )?])
    })
}

fn prop_ccc(ctx: &SuiteContext) -> Result<Vec<CheckOutcome>> {
    ctx.per_module(|_, a| {
        if !a.two_primal().holds {
            return Ok(Vec::new());
        }
        let crf = a.satisfies_crf()?.holds;
        let rf = a.satisfies_rf()?.holds;
        Ok(vec![outcome(
            &module_instance(a),
            "2-primal: CRF iff RF",
            Ok(expect("radical formulas", crf == rf, || {
                bools_witness(&[("crf", crf), ("rf", rf)])
            })),
        )?])
    })
}

fn thm_rf(ctx: &SuiteContext) -> Result<Vec<CheckOutcome>> {
    let exx = module_example_exx()?;
    let exx_a = ModuleAnalysis::new(&exx)?;
    let mut analyses: Vec<&ModuleAnalysis> = ctx.modules.iter().map(|(_, a)| a).collect();
    if !ctx.modules.iter().any(|(_, a)| a.module().has_tag(&Tag::ExampleExx)) {
        analyses.push(&exx_a);
    }
    let rows: Vec<Option<(CheckOutcome, bool)>> = analyses
        .par_iter()
        .map(|a| -> Result<Option<(CheckOutcome, bool)>> {
            // the zero submodule of a zero module is not proper, so the module is never completely semiprime
            if a.module().is_zero_module() || !a.satisfies_crf()?.holds {
                return Ok(None);
            }
            let csp = a.is_completely_semiprime(a.zero())?.holds;
            let env0 = a.envelope_submodule(a.zero())?.is_zero();
            let bc0 = a.beta_co().is_zero();
            let sub = a.subdirect_decomposition()?.exists();
            let ok = csp == env0 && env0 == bc0 && bc0 == sub;
            let v = expect("four conditions", ok, || {
                bools_witness(&[
                    ("completely semiprime", csp),
                    ("<E_M(0)> = 0", env0),
                    ("beta_co = 0", bc0),
                    ("subdirect product", sub),
                ])
            });
            Ok(Some((outcome(&module_instance(a), "four conditions agree", Ok(v))?, csp)))
        })
        .collect::<Result<_>>()?;
    let rows: Vec<(CheckOutcome, bool)> = rows.into_iter().flatten().collect();
    let positives = rows.iter().filter(|(_, p)| *p).count();
    let negatives = rows.len() - positives;
    let mut out: Vec<CheckOutcome> = rows.into_iter().map(|(o, _)| o).collect();
    out.push(outcome(
        "catalog",
        "both sides represented",
        Ok(expect("modules satisfying CRF", positives > 0 && negatives > 0, || {
            Witness::new()
                .note("positive", positives.to_string())
                .note("negative", negatives.to_string())
        })),
    )?);
    Ok(out)
}

fn thm_fg(ctx: &SuiteContext) -> Result<Vec<CheckOutcome>> {
    ctx.per_module(|i, a| {
        if ctx.ring_two_primal(i) != Some(true) {
            return Ok(Vec::new());
        }
        let inst = module_instance(a);
        let chain = (|| {
            let ns = a.strongly_nilpotent()?;
            let env = a.envelope_submodule(a.zero())?;
            let (b, bc) = (a.beta(), a.beta_co());
            let ok = ns == env && env == bc && bc == b;
            Ok(expect("radicals of the module", ok, || {
                set_witness(&[("N_s", &ns), ("envelope", &env), ("beta_co", &bc), ("beta", &b)])
            }))
        })();
        Ok(vec![
            outcome(&inst, "radical formula", a.satisfies_rf())?,
            outcome(&inst, "complete radical formula", a.satisfies_crf())?,
            outcome(&inst, "2-primal", Ok(a.two_primal()))?,
            outcome(&inst, "N_s = <E_M(0)> = beta_co = beta", chain)?,
        ])
    })
}

fn thm_lt(ctx: &SuiteContext) -> Result<Vec<CheckOutcome>> {
    ctx.per_module(|i, a| {
        let inst = module_instance(a);
        let mut out = Vec::new();
        if ctx.ring_two_primal(i) == Some(true) {
            out.push(outcome(
                &inst,
                &format!("2-primal over the 2-primal ring {}", ctx.ring_label(i)),
                Ok(a.two_primal()),
            )?);
        }
        let b = a.beta();
        if !b.is_full() && a.is_completely_prime(&b)?.holds {
            out.push(outcome(&inst, "beta(M) completely prime implies 2-primal", Ok(a.two_primal()))?);
        }
        Ok(out)
    })
}

fn thm_pl(ctx: &SuiteContext) -> Result<Vec<CheckOutcome>> {
    ctx.per_module(|i, a| {
        let inst = module_instance(a);
        let mut out = Vec::new();
        let env = a.envelope_submodule(a.zero())?;
        let bc = a.beta_co();
        let regular_two_primal = a.module().has_tag(&Tag::Regular) && ctx.ring_two_primal(i) == Some(true);
        let projective_two_primal = a.module().is_projective() && a.two_primal().holds;
        let equal_chain = || -> Result<Verdict> {
            let ns = a.strongly_nilpotent()?;
            let b = a.beta();
            let ok = ns == env && env == bc && bc == b;
            Ok(expect("radicals of the module", ok, || {
                set_witness(&[("N_s", &ns), ("envelope", &env), ("beta_co", &bc), ("beta", &b)])
            }))
        };
        if bc.is_zero() {
            out.push(outcome(&inst, "beta_co = 0: complete radical formula", a.satisfies_crf())?);
            out.push(outcome(&inst, "beta_co = 0: radical formula", a.satisfies_rf())?);
            out.push(outcome(&inst, "beta_co = 0: 2-primal", Ok(a.two_primal()))?);
            out.push(outcome(&inst, "beta_co = 0: N_s = <E_M(0)> = beta_co = beta", equal_chain())?);
        }
        if env.is_full() {
            out.push(outcome(&inst, "<E_M(0)> = M: complete radical formula", a.satisfies_crf())?);
        }
        if regular_two_primal {
            out.push(outcome(&inst, "regular, 2-primal ring: complete radical formula", a.satisfies_crf())?);
            out.push(outcome(&inst, "regular, 2-primal ring: radical formula", a.satisfies_rf())?);
            out.push(outcome(&inst, "regular, 2-primal ring: 2-primal", Ok(a.two_primal()))?);
            out.push(outcome(&inst, "regular, 2-primal ring: N_s = <E_M(0)> = beta_co = beta", equal_chain())?);
        }
        if projective_two_primal {
            out.push(outcome(&inst, "projective 2-primal: N_s = <E_M(0)> = beta_co = beta", equal_chain())?);
            out.push(outcome(&inst, "projective 2-primal: complete radical formula", a.satisfies_crf())?);
            out.push(outcome(&inst, "projective 2-primal: radical formula", a.satisfies_rf())?);
        }
        Ok(out)
    })
}

fn hom_transfer(ctx: &SuiteContext) -> Result<Vec<CheckOutcome>> {
    let quotients = ctx.per_module(|i, a| {
        let inst = module_instance(a);
        let v = (|| -> Result<Verdict> {
            let universe = format!("projections M -> M/K and N containing K, over {}", a.module().label());
            for k in a.lattice() {
                let (q, proj) = quotient_module(a.module(), k)?;
                let qa = ModuleAnalysis::with_ring(&q, ctx.rings[i].clone())?;
                for n in a.lattice().iter().filter(|n| k.is_subset(n)) {
                    let t = hom_transfer_check_with(a, &qa, &proj, n)?;
                    if let Some(w) = t.verdict.witness {
                        return Ok(Verdict::fail(universe, w.set("K", k)));
                    }
                }
            }
            Ok(Verdict::pass(universe))
        })();
        Ok(vec![outcome(&inst, "transfer along M -> M/K", v)?])
    })?;
    // R^n onto each cyclic module R/I by the first coordinate; n = 2 unless R^2 exceeds the size guard
    let cyclic = ctx.per_ring(|i, r| {
        let ring = r.ring();
        let mut out = Vec::new();
        let rank = if ring.size() * ring.size() <= Limits::global().max_validation_size { 2 } else { 1 };
        let free = crate::catalog::module_free(ring, rank)?;
        let fa = ModuleAnalysis::with_ring(&free, ctx.rings[i].clone())?;
        let reg = crate::module::FiniteModule::regular(ring)?;
        for ideal in all_substructures(&reg, Kind::Submodule)? {
            let (cyc, pi) = quotient_module(&reg, &ideal)?;
            let stride = ring.size().pow(rank as u32 - 1);
            let map = free.elements().map(|x| pi.apply(x / stride)).collect();
            let phi = ModuleHom::new(&free, &cyc, map)?;
            let ca = ModuleAnalysis::with_ring(&cyc, ctx.rings[i].clone())?;
            let ker = phi.kernel();
            let v = (|| -> Result<Verdict> {
                let universe = format!("N containing the kernel of {} -> {}", free.label(), cyc.label());
                for n in fa.lattice().iter().filter(|n| ker.is_subset(n)) {
                    let t = hom_transfer_check_with(&fa, &ca, &phi, n)?;
                    if let Some(w) = t.verdict.witness {
                        return Ok(Verdict::fail(universe, w));
                    }
                }
                Ok(Verdict::pass(universe))
            })();
            out.push(outcome(&format!("module {}", cyc.label()), &format!("transfer along R^{rank} -> R/I"), v)?);
        }
        Ok(out)
    })?;
    Ok(quotients.into_iter().chain(cyclic).collect())
}

fn example_exx_golden() -> Result<Vec<CheckOutcome>> {
    let m = module_example_exx()?;
    let a = ModuleAnalysis::new(&m)?;
    let inst = "module exx";
    let zero = a.zero().clone();
    let lattice: Vec<Vec<usize>> = a.lattice().iter().map(Substructure::elements).collect();
    let b = a.beta();
    let bc = a.beta_co();
    let env = a.envelope_submodule(&zero)?;
    let crf0 = a.submodule_crf(&zero)?.holds;
    let rf0 = a.submodule_rf(&zero)?.holds;
    let tp = a.two_primal().holds;
    let prime = a.is_prime(&zero)?.holds;
    let cp = a.is_completely_prime(&zero)?.holds;
    let fact = |name: &str, ok: bool, w: Witness| outcome(inst, name, Ok(expect("example module", ok, || w)));
    Ok(vec![
        fact(
            "submodule lattice is {0, M}",
            lattice == vec![vec![0], vec![0, 1, 2, 3]],
            Witness::new().note("lattice", format!("{lattice:?}")),
        )?,
        fact("beta(M) = 0", b.is_zero(), set_witness(&[("beta", &b)]))?,
        fact("beta_co(M) = M", bc.is_full(), set_witness(&[("beta_co", &bc)]))?,
        fact("<E_M(0)> = M", env.is_full(), set_witness(&[("envelope", &env)]))?,
        fact(
            "zero submodule satisfies CRF but not RF",
            crf0 && !rf0,
            bools_witness(&[("crf", crf0), ("rf", rf0)]),
        )?,
        fact("not 2-primal", !tp, bools_witness(&[("two_primal", tp)]))?,
        fact(
            "prime but not completely prime",
            prime && !cp,
            bools_witness(&[("prime", prime), ("completely_prime", cp)]),
        )?,
    ])
}
