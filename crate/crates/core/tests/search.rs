use radical_lab::catalog::{ring_m2_z2, Catalog, ModuleFamily};
use radical_lab::search::{search_catalog, Predicate, SearchStatus};

fn matrix_catalog() -> Catalog {
    Catalog::build(&[ring_m2_z2().unwrap()], &ModuleFamily::ALL, 2).unwrap()
}

#[test]
fn prime_not_completely_prime_is_the_example_shape() {
    let p = Predicate::parse("prime & !completely_prime").unwrap();
    let out = search_catalog(&p, &matrix_catalog(), None).unwrap();
    assert_eq!(out.status, SearchStatus::Found);
    let hit = out.hit.unwrap();
    let r = &hit.report;
    assert_eq!(r.module_size, 4);
    assert_eq!(r.submodule_count, 2);
    assert_eq!(r.beta.members, [0]);
    assert_eq!(r.beta_co.members, [0, 1, 2, 3]);
    assert_eq!(out.stats.examined, hit.candidate_index + 1);
}

#[test]
fn first_hit_does_not_depend_on_thread_count() {
    let catalog = Catalog::default_catalog().unwrap();
    let p = Predicate::parse("not two_primal or not ifp").unwrap();
    let default = search_catalog(&p, &catalog, None).unwrap();
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(|| search_catalog(&p, &catalog, None).unwrap());
    assert_eq!(default, single);
    assert_eq!(default.status, SearchStatus::Found);
}

#[test]
fn commutative_rings_never_fail_two_primality() {
    let p = Predicate::parse("not two_primal or not ring_two_primal").unwrap();
    let catalog = Catalog::default_catalog().unwrap();
    let commutative: Vec<_> = catalog.rings().filter(|r| r.is_commutative()).cloned().collect();
    let sub = Catalog::build(&commutative, &ModuleFamily::ALL, 2).unwrap();
    let out = search_catalog(&p, &sub, None).unwrap();
    assert_eq!(out.status, SearchStatus::NotFound);
    assert_eq!(out.stats.examined, out.stats.candidates);
}

#[test]
fn budget_limits_examination() {
    let p = Predicate::parse("not ring_commutative").unwrap();
    let out = search_catalog(&p, &Catalog::default_catalog().unwrap(), Some(3)).unwrap();
    assert_eq!(out.status, SearchStatus::BudgetExhausted);
    assert_eq!(out.stats.examined, 3);
    assert!(out.hit.is_none());
}
