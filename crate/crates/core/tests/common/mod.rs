//! Brute-force oracles written directly from the definitions, sharing no code
//! with the engine beyond table lookups.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use radical_lab::{FiniteModule, FiniteRing};

pub type Set = BTreeSet<usize>;

/// Every subset containing 0 closed under `+` and `keep`, by scanning all subsets.
fn subset_scan(size: usize, zero: usize, add: impl Fn(usize, usize) -> usize, keep: impl Fn(&Set) -> bool) -> Vec<Set> {
    assert!(size <= 16, "subset scan is limited to 16 elements");
    let others: Vec<usize> = (0..size).filter(|&x| x != zero).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << others.len()) {
        let mut s: Set = others
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &x)| x)
            .collect();
        s.insert(zero);
        let closed = s.iter().all(|&a| s.iter().all(|&b| s.contains(&add(a, b))));
        if closed && keep(&s) {
            out.push(s);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

pub fn lattice(m: &FiniteModule) -> Vec<Set> {
    let r = m.ring();
    subset_scan(m.size(), m.zero(), |a, b| m.add(a, b), |s| {
        s.iter().all(|&x| r.elements().all(|a| s.contains(&m.act(a, x))))
    })
}

pub fn two_sided_ideals(r: &FiniteRing) -> Vec<Set> {
    subset_scan(r.size(), r.zero(), |a, b| r.add(a, b), |s| {
        s.iter()
            .all(|&x| r.elements().all(|a| s.contains(&r.mul(a, x)) && s.contains(&r.mul(x, a))))
    })
}

pub fn left_ideals(r: &FiniteRing) -> Vec<Set> {
    subset_scan(r.size(), r.zero(), |a, b| r.add(a, b), |s| {
        s.iter().all(|&x| r.elements().all(|a| s.contains(&r.mul(a, x))))
    })
}

pub fn full(n: usize) -> Set {
    (0..n).collect()
}

/// `rⁿ x` for `n = 1..=|R|+1`.
fn powers_on(m: &FiniteModule, r: usize, x: usize) -> Vec<usize> {
    let ring = m.ring();
    let mut p = r;
    let mut out = Vec::new();
    for _ in 0..=ring.size() {
        out.push(m.act(p, x));
        p = ring.mul(p, r);
    }
    out
}

/// `E_M(N)` as a set.
pub fn envelope(m: &FiniteModule, n: &Set) -> Set {
    let mut out = Set::new();
    for r in m.ring().elements() {
        for x in m.elements() {
            if powers_on(m, r, x).iter().any(|y| n.contains(y)) {
                out.insert(m.act(r, x));
            }
        }
    }
    out
}

/// The smallest member of `lattice` containing `s`.
pub fn generated(lattice: &[Set], s: &Set) -> Set {
    lattice
        .iter()
        .filter(|l| s.is_subset(l))
        .min_by_key(|l| l.len())
        .cloned()
        .expect("the whole module contains everything")
}

pub fn intersection<'a>(sets: impl IntoIterator<Item = &'a Set>, whole: Set) -> Set {
    sets.into_iter().fold(whole, |acc, s| acc.intersection(s).copied().collect())
}

pub fn is_completely_prime(m: &FiniteModule, p: &Set) -> bool {
    if p.len() == m.size() {
        return false;
    }
    let r = m.ring();
    r.elements().all(|a| {
        let a_m_inside = m.elements().all(|x| p.contains(&m.act(a, x)));
        a_m_inside || m.elements().all(|x| !p.contains(&m.act(a, x)) || p.contains(&x))
    })
}

pub fn is_prime(m: &FiniteModule, p: &Set, ideals: &[Set], lattice: &[Set]) -> bool {
    if p.len() == m.size() {
        return false;
    }
    ideals.iter().all(|a| {
        let am_inside = a.iter().all(|&r| m.elements().all(|x| p.contains(&m.act(r, x))));
        am_inside
            || lattice.iter().all(|n| {
                let an_inside = a.iter().all(|&r| n.iter().all(|&x| p.contains(&m.act(r, x))));
                !an_inside || n.is_subset(p)
            })
    })
}

pub fn is_completely_semiprime(m: &FiniteModule, p: &Set) -> bool {
    if p.len() == m.size() {
        return false;
    }
    let r = m.ring();
    r.elements()
        .all(|a| m.elements().all(|x| !p.contains(&m.act(r.mul(a, a), x)) || p.contains(&m.act(a, x))))
}

/// `β_co^s(N)`: completely prime submodules containing `N`, intersected.
pub fn beta_co_s(m: &FiniteModule, lattice: &[Set], n: &Set) -> Set {
    intersection(
        lattice.iter().filter(|p| n.is_subset(p) && is_completely_prime(m, p)),
        full(m.size()),
    )
}

pub fn beta_s(m: &FiniteModule, lattice: &[Set], ideals: &[Set], n: &Set) -> Set {
    intersection(
        lattice.iter().filter(|p| n.is_subset(p) && is_prime(m, p, ideals, lattice)),
        full(m.size()),
    )
}

pub fn nilpotent_elements(r: &FiniteRing) -> Set {
    r.elements()
        .filter(|&a| {
            let mut p = a;
            for _ in 0..=r.size() {
                if p == r.zero() {
                    return true;
                }
                p = r.mul(p, a);
            }
            false
        })
        .collect()
}

fn ideal_product_inside(r: &FiniteRing, a: &Set, b: &Set, p: &Set) -> bool {
    a.iter().all(|&x| b.iter().all(|&y| p.contains(&r.mul(x, y))))
}

pub fn is_prime_ideal(r: &FiniteRing, ideals: &[Set], p: &Set) -> bool {
    p.len() < r.size()
        && ideals.iter().all(|a| {
            ideals
                .iter()
                .all(|b| !ideal_product_inside(r, a, b, p) || a.is_subset(p) || b.is_subset(p))
        })
}

pub fn is_completely_prime_ideal(r: &FiniteRing, p: &Set) -> bool {
    p.len() < r.size()
        && r.elements()
            .all(|a| r.elements().all(|b| !p.contains(&r.mul(a, b)) || p.contains(&a) || p.contains(&b)))
}

/// `β(R)`, `β_co(R)`, `𝒩(R)` and `E_R(0)` of a ring with at most 16 elements.
pub struct RingOracle {
    pub beta: Set,
    pub beta_co: Set,
    pub nil: Set,
    pub envelope_zero: Set,
}

impl RingOracle {
    pub fn new(r: &FiniteRing) -> Self {
        let ideals = two_sided_ideals(r);
        let beta = intersection(ideals.iter().filter(|p| is_prime_ideal(r, &ideals, p)), full(r.size()));
        let beta_co = intersection(ideals.iter().filter(|p| is_completely_prime_ideal(r, p)), full(r.size()));
        let reg = FiniteModule::regular(r).unwrap();
        let zero: Set = [r.zero()].into();
        RingOracle {
            beta,
            beta_co,
            nil: nilpotent_elements(r),
            envelope_zero: envelope(&reg, &zero),
        }
    }
}

/// True when some sequence `a₀ = a, a_{k+1} ∈ a_k R a_k` of length `d + 1`
/// keeps `a_k R m ≠ 0` throughout. Memoized on `(a, d)`.
pub struct AvoidOracle<'a> {
    m: &'a FiniteModule,
    x: usize,
    memo: HashMap<(usize, usize), bool>,
}

impl<'a> AvoidOracle<'a> {
    pub fn new(m: &'a FiniteModule, x: usize) -> Self {
        AvoidOracle {
            m,
            x,
            memo: HashMap::new(),
        }
    }

    pub fn can_avoid(&mut self, a: usize, d: usize) -> bool {
        if let Some(&v) = self.memo.get(&(a, d)) {
            return v;
        }
        let r = self.m.ring();
        let alive = r.elements().any(|s| self.m.act(r.mul(a, s), self.x) != self.m.zero());
        let v = alive
            && (d == 0
                || r.elements()
                    .map(|s| r.mul(r.mul(a, s), a))
                    .collect::<Set>()
                    .into_iter()
                    .any(|b| self.can_avoid(b, d - 1)));
        self.memo.insert((a, d), v);
        v
    }
}

pub fn members(s: &radical_lab::Substructure) -> Set {
    s.elements().into_iter().collect()
}
