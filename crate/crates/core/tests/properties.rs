//! Properties that hold for every finite module, checked on generated rings and modules.

mod common;

use proptest::prelude::*;
use radical_lab::catalog::{
    module_cyclic, module_free, module_regular, module_summand, ring_m2_z2, ring_product, ring_upper_triangular, ring_zn,
};
use radical_lab::config::StructureConfig;
use radical_lab::module::quotient_module;
use radical_lab::radicals::{ModuleAnalysis, CLASS_FLAGS};
use radical_lab::substructure::{generated_substructure, intersect, sum};
use radical_lab::{FiniteModule, FiniteRing, Kind};

#[derive(Debug, Clone)]
enum RingChoice {
    Zn(usize),
    Product(usize, usize),
    Upper(usize),
    M2Z2,
}

#[derive(Debug, Clone)]
enum ModuleChoice {
    Regular,
    Cyclic(usize),
    Summand(usize),
    Free,
}

fn ring_choice() -> impl Strategy<Value = RingChoice> {
    prop_oneof![
        (2usize..=16).prop_map(RingChoice::Zn),
        (2usize..=4, 2usize..=4).prop_map(|(a, b)| RingChoice::Product(a, b)),
        (2usize..=3).prop_map(RingChoice::Upper),
        Just(RingChoice::M2Z2),
    ]
}

fn module_choice() -> impl Strategy<Value = ModuleChoice> {
    prop_oneof![
        Just(ModuleChoice::Regular),
        (0usize..64).prop_map(ModuleChoice::Cyclic),
        (0usize..64).prop_map(ModuleChoice::Summand),
        Just(ModuleChoice::Free),
    ]
}

fn build_ring(c: &RingChoice) -> FiniteRing {
    match *c {
        RingChoice::Zn(n) => ring_zn(n).unwrap(),
        RingChoice::Product(a, b) => ring_product(&[ring_zn(a).unwrap(), ring_zn(b).unwrap()]).unwrap(),
        RingChoice::Upper(n) => ring_upper_triangular(2, &ring_zn(n).unwrap()).unwrap(),
        RingChoice::M2Z2 => ring_m2_z2().unwrap(),
    }
}

/// Falls back to the regular module when the choice does not apply to the ring.
fn build_module(ring: &FiniteRing, c: &ModuleChoice) -> FiniteModule {
    let n = ring.size();
    match *c {
        ModuleChoice::Cyclic(g) => {
            let l = generated_substructure(ring, Kind::LeftIdeal, &[g % n]).unwrap();
            module_cyclic(ring, &l).unwrap()
        }
        ModuleChoice::Summand(e) if ring.mul(e % n, e % n) == e % n => module_summand(ring, e % n).unwrap(),
        ModuleChoice::Free if n <= 8 => module_free(ring, 2).unwrap(),
        _ => module_regular(ring).unwrap(),
    }
}

fn structure() -> impl Strategy<Value = FiniteModule> {
    (ring_choice(), module_choice()).prop_map(|(r, m)| build_module(&build_ring(&r), &m))
}

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 48,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn lattice_matches_subset_scan(m in structure()) {
        let a = ModuleAnalysis::new(&m).unwrap();
        prop_assert!(a.lattice().windows(2).all(|w| w[0].canonical_cmp(&w[1]).is_lt()));
        if m.size() <= 16 {
            let engine: Vec<common::Set> = a.lattice().iter().map(common::members).collect();
            prop_assert_eq!(engine, common::lattice(&m));
        }
        // sums and intersections stay in the lattice
        for x in a.lattice() {
            for y in a.lattice() {
                prop_assert!(a.index_of(&sum(&m, x, y).unwrap()).is_some());
                prop_assert!(a.index_of(&intersect(x, y).unwrap()).is_some());
            }
        }
    }

    #[test]
    fn radical_chains(m in structure()) {
        let a = ModuleAnalysis::new(&m).unwrap();
        let ns = a.strongly_nilpotent().unwrap();
        let env = a.envelope_submodule(a.zero()).unwrap();
        let (b, bc) = (a.beta(), a.beta_co());
        prop_assert!(ns.is_subset(&env));
        prop_assert!(env.is_subset(&bc));
        prop_assert!(b.is_subset(&bc));
        for n in a.lattice() {
            let e = a.envelope(n).unwrap();
            prop_assert!(n.members().is_subset(&e));
            let envn = a.envelope_submodule(n).unwrap();
            let bcs = a.beta_co_s(n).unwrap();
            prop_assert!(envn.is_subset(&bcs));
            prop_assert!(a.beta_s(n).unwrap().is_subset(&bcs));
            if !n.is_full() {
                let cp = a.is_completely_prime(n).unwrap().holds;
                prop_assert!(!cp || a.is_prime(n).unwrap().holds);
                prop_assert!(!cp || a.is_completely_semiprime(n).unwrap().holds);
                prop_assert!(!a.is_prime(n).unwrap().holds || a.is_semiprime(n).unwrap().holds);
                // E_M(N) = N exactly for completely semiprime N
                prop_assert_eq!(e == *n.members(), a.is_completely_semiprime(n).unwrap().holds);
            }
        }
    }

    #[test]
    fn class_equivalences(m in structure()) {
        let a = ModuleAnalysis::new(&m).unwrap();
        let lz = a.lee_zhou_reduced().holds;
        prop_assert_eq!(lz, a.lee_zhou_reduced_annihilator_form().holds);
        let env_zero = a.envelope(a.zero()).unwrap().count_ones(..) == 1;
        prop_assert_eq!(lz, a.ifp().holds && env_zero);
        // symmetric implies semi-symmetric implies IFP
        prop_assert!(!a.symmetric().holds || a.semi_symmetric().holds);
        prop_assert!(!a.semi_symmetric().holds || a.ifp().holds);
        if a.two_primal().holds {
            prop_assert_eq!(a.satisfies_crf().unwrap().holds, a.satisfies_rf().unwrap().holds);
        }
        if a.ring_analysis().two_primal().unwrap().verdict.holds {
            prop_assert!(a.two_primal().holds);
        }
    }

    #[test]
    fn failing_verdicts_carry_witnesses(m in structure()) {
        let report = ModuleAnalysis::new(&m).unwrap().report().unwrap();
        prop_assert_eq!(report.class_flags.len(), CLASS_FLAGS.len());
        for (name, v) in &report.class_flags {
            prop_assert_eq!(v.holds, v.witness.is_none(), "{}", name);
        }
        let text = serde_json::to_string(&report).unwrap();
        prop_assert!(text.contains("checked_universe"));
    }

    #[test]
    fn quotients_split_the_order(m in structure(), pick in 0usize..1000) {
        let a = ModuleAnalysis::new(&m).unwrap();
        let n = &a.lattice()[pick % a.lattice().len()];
        let (q, proj) = quotient_module(&m, n).unwrap();
        prop_assert_eq!(q.size() * n.len(), m.size());
        prop_assert!(proj.is_surjective());
        prop_assert_eq!(&proj.kernel(), n);
        // submodules of M/N correspond to submodules of M above N
        let above = a.lattice().iter().filter(|k| n.is_subset(k)).count();
        prop_assert_eq!(ModuleAnalysis::new(&q).unwrap().lattice().len(), above);
    }

    #[test]
    fn configs_round_trip(m in structure()) {
        let text = serde_json::to_string(&StructureConfig::from_module(&m)).unwrap();
        let (ring, back) = StructureConfig::from_json(&text).unwrap().build().unwrap();
        prop_assert!(ring.same_as(m.ring()));
        prop_assert_eq!(back.tables(), m.tables());
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn ring_radicals_agree_with_oracle(c in ring_choice()) {
        let r = build_ring(&c);
        prop_assume!(r.size() <= 16);
        let ra = radical_lab::RingAnalysis::new(&r).unwrap();
        let t = ra.two_primal().unwrap();
        let o = common::RingOracle::new(&r);
        let as_set = |v: &Vec<usize>| v.iter().copied().collect::<common::Set>();
        prop_assert_eq!(as_set(&t.beta), o.beta);
        prop_assert_eq!(as_set(&t.beta_co), o.beta_co);
        prop_assert_eq!(as_set(&t.nil), o.nil);
        prop_assert_eq!(as_set(&t.envelope_zero), o.envelope_zero);
        if r.is_commutative() {
            prop_assert!(t.verdict.holds);
        }
    }
}
