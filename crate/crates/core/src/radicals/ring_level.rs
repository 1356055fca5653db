use std::sync::OnceLock;

use serde::Serialize;

use super::verdict::{Verdict, Witness};
use crate::error::{Error, Result};
use crate::ring::{quotient_ring, FiniteRing};
use crate::substructure::{
    additive_span, all_substructures, generated_substructure, intersect_family, ElementSet, Kind, Substructure,
};

/// Per-ring tables shared by every analysis over that ring.
#[derive(Debug)]
pub struct RingAnalysis {
    ring: FiniteRing,
    /// Distinct powers `r, r², …` up to the first repetition.
    powers: Vec<Vec<usize>>,
    /// Distinct elements of `aRa`.
    ara: Vec<Vec<usize>>,
    ideals: Vec<Substructure>,
    left_ideals: OnceLock<Result<Vec<Substructure>>>,
    principal: OnceLock<Vec<Vec<usize>>>,
}

fn distinct(it: impl Iterator<Item = usize>, n: usize) -> Vec<usize> {
    let mut seen = ElementSet::with_capacity(n);
    it.filter(|&x| !seen.put(x)).collect()
}

/// Distinct powers of `r`, in order of first appearance.
pub fn power_sequence(ring: &FiniteRing, r: usize) -> Vec<usize> {
    let mut seen = ElementSet::with_capacity(ring.size());
    let mut out = Vec::new();
    let mut p = r;
    while !seen.put(p) {
        out.push(p);
        p = ring.mul(p, r);
    }
    out
}

impl RingAnalysis {
    pub fn new(ring: &FiniteRing) -> Result<Self> {
        let n = ring.size();
        let powers = ring.elements().map(|r| power_sequence(ring, r)).collect();
        let ara = ring
            .elements()
            .map(|a| distinct(ring.elements().map(|r| ring.mul(ring.mul(a, r), a)), n))
            .collect();
        let ideals = all_substructures(ring, Kind::TwoSidedIdeal)?;
        Ok(RingAnalysis {
            ring: ring.clone(),
            powers,
            ara,
            ideals,
            left_ideals: OnceLock::new(),
            principal: OnceLock::new(),
        })
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn powers(&self, r: usize) -> &[usize] {
        &self.powers[r]
    }

    pub fn ara(&self, a: usize) -> &[usize] {
        &self.ara[a]
    }

    pub fn is_nilpotent(&self, r: usize) -> bool {
        self.powers[r].contains(&self.ring.zero())
    }

    /// Two-sided ideals in canonical order.
    pub fn ideals(&self) -> &[Substructure] {
        &self.ideals
    }

    pub fn left_ideals(&self) -> Result<&[Substructure]> {
        self.left_ideals
            .get_or_init(|| all_substructures(&self.ring, Kind::LeftIdeal))
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    /// Members of the two-sided ideal `(a)`.
    pub fn principal_ideal(&self, a: usize) -> &[usize] {
        &self.principal.get_or_init(|| {
            self.ring
                .elements()
                .map(|x| {
                    generated_substructure(&self.ring, Kind::TwoSidedIdeal, &[x])
                        .expect("rings support two-sided ideals")
                        .elements()
                })
                .collect()
        })[a]
    }

    fn check_ideal(&self, p: &Substructure) -> Result<()> {
        if p.parent() != self.ring.id() {
            return Err(Error::ParentMismatch);
        }
        if p.kind() != Kind::TwoSidedIdeal {
            return Err(Error::KindMismatch {
                expected: Kind::TwoSidedIdeal.to_string(),
                found: p.kind().to_string(),
            });
        }
        if p.is_full() {
            return Err(Error::NotProper);
        }
        Ok(())
    }

    /// `AB ⊆ P ⇒ A ⊆ P or B ⊆ P` over two-sided ideals.
    pub fn is_prime_ideal(&self, p: &Substructure) -> Result<Verdict> {
        self.check_ideal(p)?;
        let r = &self.ring;
        let outside: Vec<&Substructure> = self.ideals.iter().filter(|a| !a.is_subset(p)).collect();
        let scan = || {
            for a in &outside {
                for b in &outside {
                    let product_inside = a
                        .members()
                        .ones()
                        .all(|x| b.members().ones().all(|y| p.contains(r.mul(x, y))));
                    if product_inside {
                        return Err(Witness::new().set("A", a).set("B", b));
                    }
                }
            }
            Ok(())
        };
        Ok(Verdict::from_scan(
            format!("pairs of two-sided ideals of {}", r.label()),
            scan(),
        ))
    }

    /// `ab ∈ P ⇒ a ∈ P or b ∈ P`.
    pub fn is_completely_prime_ideal(&self, p: &Substructure) -> Result<Verdict> {
        self.check_ideal(p)?;
        let r = &self.ring;
        let scan = || {
            for a in r.elements().filter(|&a| !p.contains(a)) {
                for b in r.elements().filter(|&b| !p.contains(b)) {
                    if p.contains(r.mul(a, b)) {
                        return Err(Witness::new().ring("a", a, r.name(a)).ring("b", b, r.name(b)));
                    }
                }
            }
            Ok(())
        };
        Ok(Verdict::from_scan(format!("pairs of elements of {}", r.label()), scan()))
    }

    pub fn prime_ideals(&self) -> Vec<&Substructure> {
        self.ideals
            .iter()
            .filter(|p| !p.is_full() && self.is_prime_ideal(p).map(|v| v.holds).unwrap_or(false))
            .collect()
    }

    pub fn completely_prime_ideals(&self) -> Vec<&Substructure> {
        self.ideals
            .iter()
            .filter(|p| !p.is_full() && self.is_completely_prime_ideal(p).map(|v| v.holds).unwrap_or(false))
            .collect()
    }

    /// `β(R)`, the intersection of the prime ideals.
    pub fn beta(&self) -> Substructure {
        intersect_family(&self.ring, Kind::TwoSidedIdeal, self.prime_ideals()).expect("same parent")
    }

    /// `β_co(R)`, the intersection of the completely prime ideals.
    pub fn beta_co(&self) -> Substructure {
        intersect_family(&self.ring, Kind::TwoSidedIdeal, self.completely_prime_ideals()).expect("same parent")
    }

    /// `𝒩(R)`.
    pub fn nil_elements(&self) -> ElementSet {
        let mut s = ElementSet::with_capacity(self.ring.size());
        s.extend(self.ring.elements().filter(|&r| self.is_nilpotent(r)));
        s
    }

    /// `E_R(0) = { rm : r^k m = 0 for some k }`, as a set.
    pub fn envelope_zero(&self) -> ElementSet {
        let r = &self.ring;
        let mut s = ElementSet::with_capacity(r.size());
        for a in r.elements() {
            for m in r.elements() {
                if self.powers[a].iter().any(|&p| r.mul(p, m) == r.zero()) {
                    s.insert(r.mul(a, m));
                }
            }
        }
        s
    }

    /// Every member of `I` is nilpotent.
    pub fn is_nil(&self, i: &Substructure) -> Verdict {
        let universe = format!("members of a {} of {}", i.kind(), self.ring.label());
        match i.members().ones().find(|&x| !self.is_nilpotent(x)) {
            None => Verdict::pass(universe),
            Some(x) => Verdict::fail(universe, Witness::new().ring("non-nilpotent", x, self.ring.name(x))),
        }
    }

    /// All three characterizations of 2-primality, which must agree.
    pub fn two_primal(&self) -> Result<RingTwoPrimality> {
        let beta = self.beta();
        let beta_co = self.beta_co();
        let nil = self.nil_elements();
        let env = self.envelope_zero();
        let nil_eq_beta = &nil == beta.members();
        let beta_co_eq_beta = beta_co == beta;
        let beta_eq_envelope = &env == beta.members();
        if nil_eq_beta != beta_co_eq_beta || nil_eq_beta != beta_eq_envelope {
            return Err(Error::CharacterizationMismatch {
                ring: self.ring.label().to_string(),
                detail: format!(
                    "N(R)=beta(R): {nil_eq_beta}, beta_co(R)=beta(R): {beta_co_eq_beta}, beta(R)=E_R(0): {beta_eq_envelope}"
                ),
            });
        }
        let universe = format!("prime and completely prime ideals and nilpotents of {}", self.ring.label());
        let verdict = if nil_eq_beta {
            Verdict::pass(universe)
        } else {
            let extra = nil.ones().find(|&x| !beta.contains(x)).expect("beta is nil");
            Verdict::fail(
                universe,
                Witness::new()
                    .set("beta", &beta)
                    .ring("nilpotent outside beta", extra, self.ring.name(extra)),
            )
        };
        Ok(RingTwoPrimality {
            verdict,
            nil_eq_beta,
            beta_co_eq_beta,
            beta_eq_envelope,
            beta: beta.elements(),
            beta_co: beta_co.elements(),
            nil: nil.ones().collect(),
            envelope_zero: env.ones().collect(),
        })
    }

    /// `I` is 2-primal when `R/I` is a 2-primal ring.
    pub fn is_two_primal_ideal(&self, i: &Substructure) -> Result<Verdict> {
        self.check_ideal(i)?;
        let q = quotient_ring(&self.ring, i)?;
        let tp = RingAnalysis::new(&q.ring)?.two_primal()?;
        let mut v = tp.verdict;
        v.checked_universe = format!("2-primality of {}", q.ring.label());
        if let Some(w) = v.witness.take() {
            v.witness = Some(Witness::new().set("ideal", i).note("quotient", w.summary()));
        }
        Ok(v)
    }

    /// Maximal left ideals.
    pub fn maximal_left_ideals(&self) -> Result<Vec<Substructure>> {
        let all = self.left_ideals()?;
        let proper: Vec<&Substructure> = all.iter().filter(|l| !l.is_full()).collect();
        Ok(proper
            .iter()
            .filter(|l| !proper.iter().any(|k| k.len() > l.len() && l.is_subset(k)))
            .map(|l| (*l).clone())
            .collect())
    }

    /// `J(R)`, the intersection of the maximal left ideals.
    pub fn jacobson_radical(&self) -> Result<Substructure> {
        let max = self.maximal_left_ideals()?;
        intersect_family(&self.ring, Kind::LeftIdeal, max.iter())
    }

    pub fn properties(&self) -> Result<RingProperties> {
        let r = &self.ring;
        let label = r.label();

        let dedekind = {
            let scan = || {
                for a in r.elements() {
                    for b in r.elements() {
                        if r.mul(a, b) == r.one() && r.mul(b, a) != r.one() {
                            return Err(Witness::new().ring("a", a, r.name(a)).ring("b", b, r.name(b)));
                        }
                    }
                }
                Ok(())
            };
            Verdict::from_scan(format!("pairs of elements of {label}"), scan())
        };

        let kothe = {
            let nil: Vec<&Substructure> = self
                .left_ideals()?
                .iter()
                .filter(|i| i.members().ones().all(|x| self.is_nilpotent(x)))
                .collect();
            let scan = || {
                for (i, a) in nil.iter().enumerate() {
                    for b in &nil[i..] {
                        let mut s = a.members().clone();
                        s.union_with(b.members());
                        let span = additive_span(r, s.ones());
                        if let Some(x) = span.ones().find(|&x| !self.is_nilpotent(x)) {
                            return Err(Witness::new().set("I", a).set("J", b).ring("non-nilpotent", x, r.name(x)));
                        }
                    }
                }
                Ok(())
            };
            Verdict::from_scan(format!("pairs of nil left ideals of {label}"), scan())
        };

        let primes_cp = {
            let scan = || -> Result<std::result::Result<(), Witness>> {
                for p in self.prime_ideals() {
                    let v = self.is_completely_prime_ideal(p)?;
                    if let Some(w) = v.witness {
                        let mut out = Witness::new().set("prime ideal", p);
                        out.0.extend(w.0);
                        return Ok(Err(out));
                    }
                }
                Ok(Ok(()))
            };
            Verdict::from_scan(format!("prime ideals of {label}"), scan()?)
        };

        let semisimple = {
            let j = self.jacobson_radical()?;
            let universe = format!("maximal left ideals of {label}");
            if j.is_zero() {
                Verdict::pass(universe)
            } else {
                Verdict::fail(universe, Witness::new().set("jacobson radical", &j))
            }
        };

        Ok(RingProperties {
            dedekind_finite: dedekind,
            kothe_finite_scale: kothe,
            primes_completely_prime: primes_cp,
            is_semisimple: semisimple,
        })
    }
}

/// The three ring-level 2-primality criteria and the sets they compare.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingTwoPrimality {
    pub verdict: Verdict,
    pub nil_eq_beta: bool,
    pub beta_co_eq_beta: bool,
    pub beta_eq_envelope: bool,
    pub beta: Vec<usize>,
    pub beta_co: Vec<usize>,
    pub nil: Vec<usize>,
    pub envelope_zero: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingProperties {
    pub dedekind_finite: Verdict,
    pub kothe_finite_scale: Verdict,
    pub primes_completely_prime: Verdict,
    pub is_semisimple: Verdict,
}
