//! Submodules, left ideals and two-sided ideals: generation, enumeration, lattice operations.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::module::FiniteModule;
use crate::ring::FiniteRing;

/// A set of element indices of a fixed parent structure.
pub type ElementSet = FixedBitSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Submodule,
    LeftIdeal,
    TwoSidedIdeal,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Submodule => "submodule",
            Kind::LeftIdeal => "left ideal",
            Kind::TwoSidedIdeal => "two-sided ideal",
        })
    }
}

/// Anything substructures can live in: a ring (ideals) or a module (submodules).
pub trait Carrier {
    fn carrier_id(&self) -> u64;
    fn carrier_label(&self) -> &str;
    fn carrier_size(&self) -> usize;
    fn carrier_zero(&self) -> usize;
    fn carrier_add(&self, a: usize, b: usize) -> usize;
    fn carrier_neg(&self, a: usize) -> usize;
    fn scalars(&self) -> &FiniteRing;
    /// `r · x`.
    fn left_act(&self, r: usize, x: usize) -> usize;
    /// `x · r`, rings only.
    fn right_act(&self, x: usize, r: usize) -> Option<usize>;
    fn supports(&self, kind: Kind) -> bool;
}

impl Carrier for FiniteRing {
    fn carrier_id(&self) -> u64 {
        self.id()
    }
    fn carrier_label(&self) -> &str {
        self.label()
    }
    fn carrier_size(&self) -> usize {
        self.size()
    }
    fn carrier_zero(&self) -> usize {
        self.zero()
    }
    fn carrier_add(&self, a: usize, b: usize) -> usize {
        self.add(a, b)
    }
    fn carrier_neg(&self, a: usize) -> usize {
        self.neg(a)
    }
    fn scalars(&self) -> &FiniteRing {
        self
    }
    fn left_act(&self, r: usize, x: usize) -> usize {
        self.mul(r, x)
    }
    fn right_act(&self, x: usize, r: usize) -> Option<usize> {
        Some(self.mul(x, r))
    }
    fn supports(&self, kind: Kind) -> bool {
        kind != Kind::Submodule
    }
}

impl Carrier for FiniteModule {
    fn carrier_id(&self) -> u64 {
        self.id()
    }
    fn carrier_label(&self) -> &str {
        self.label()
    }
    fn carrier_size(&self) -> usize {
        self.size()
    }
    fn carrier_zero(&self) -> usize {
        self.zero()
    }
    fn carrier_add(&self, a: usize, b: usize) -> usize {
        self.add(a, b)
    }
    fn carrier_neg(&self, a: usize) -> usize {
        self.neg(a)
    }
    fn scalars(&self) -> &FiniteRing {
        self.ring()
    }
    fn left_act(&self, r: usize, x: usize) -> usize {
        self.act(r, x)
    }
    fn right_act(&self, _x: usize, _r: usize) -> Option<usize> {
        None
    }
    fn supports(&self, kind: Kind) -> bool {
        kind == Kind::Submodule
    }
}

/// A validated substructure of a ring or module.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Substructure {
    parent: u64,
    kind: Kind,
    members: ElementSet,
}

impl Substructure {
    pub fn parent(&self) -> u64 {
        self.parent
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn elements(&self) -> Vec<usize> {
        self.members.ones().collect()
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    /// True for the zero substructure.
    pub fn is_zero(&self) -> bool {
        self.len() == 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn is_subset(&self, other: &Substructure) -> bool {
        self.members.is_subset(&other.members)
    }

    /// The zero substructure `{0}`.
    pub fn zero<C: Carrier + ?Sized>(parent: &C, kind: Kind) -> Result<Self> {
        check_kind(parent, kind)?;
        let mut members = ElementSet::with_capacity(parent.carrier_size());
        members.insert(parent.carrier_zero());
        Ok(Substructure {
            parent: parent.carrier_id(),
            kind,
            members,
        })
    }

    /// The whole parent.
    pub fn full<C: Carrier + ?Sized>(parent: &C, kind: Kind) -> Result<Self> {
        check_kind(parent, kind)?;
        let mut members = ElementSet::with_capacity(parent.carrier_size());
        members.insert_range(..);
        Ok(Substructure {
            parent: parent.carrier_id(),
            kind,
            members,
        })
    }

    /// Wraps an explicit member list after checking closure.
    pub fn from_members<C: Carrier + ?Sized>(parent: &C, kind: Kind, members: &[usize]) -> Result<Self> {
        check_kind(parent, kind)?;
        let mut set = ElementSet::with_capacity(parent.carrier_size());
        for &x in members {
            check_range(parent, x)?;
            set.insert(x);
        }
        let s = Substructure {
            parent: parent.carrier_id(),
            kind,
            members: set,
        };
        validate_substructure(parent, &s)?;
        Ok(s)
    }

    /// Trusted constructor for sets known to be closed.
    pub(crate) fn from_set_unchecked(parent: u64, kind: Kind, members: ElementSet) -> Self {
        Substructure { parent, kind, members }
    }

    /// Same members attached to another parent of the same size (e.g. a relabelled copy).
    pub(crate) fn reparent(&self, parent: u64, kind: Kind) -> Self {
        Substructure {
            parent,
            kind,
            members: self.members.clone(),
        }
    }

    /// Orders by cardinality, then lexicographically by member list.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        canonical_cmp(&self.members, &other.members)
    }
}

pub(crate) fn canonical_cmp(a: &ElementSet, b: &ElementSet) -> Ordering {
    a.count_ones(..)
        .cmp(&b.count_ones(..))
        .then_with(|| a.ones().cmp(b.ones()))
}

fn check_kind<C: Carrier + ?Sized>(parent: &C, kind: Kind) -> Result<()> {
    if parent.supports(kind) {
        Ok(())
    } else {
        Err(Error::KindMismatch {
            expected: if kind == Kind::Submodule {
                "module".into()
            } else {
                "ring".into()
            },
            found: format!("{kind} of `{}`", parent.carrier_label()),
        })
    }
}

fn check_range<C: Carrier + ?Sized>(parent: &C, x: usize) -> Result<()> {
    if x < parent.carrier_size() {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            index: x,
            size: parent.carrier_size(),
        })
    }
}

/// Checks zero membership and closure under the operations required by the kind.
pub fn validate_substructure<C: Carrier + ?Sized>(parent: &C, s: &Substructure) -> Result<()> {
    check_kind(parent, s.kind)?;
    if s.parent != parent.carrier_id() {
        return Err(Error::ParentMismatch);
    }
    if s.members.len() != parent.carrier_size() {
        return Err(Error::TableShape("member set sized for another parent".into()));
    }
    if !s.contains(parent.carrier_zero()) {
        return Err(Error::axiom("contains zero", &[]));
    }
    let members = s.elements();
    let ring = parent.scalars();
    for &a in &members {
        if !s.contains(parent.carrier_neg(a)) {
            return Err(Error::axiom("closed under negation", &[a]));
        }
        for &b in &members {
            if !s.contains(parent.carrier_add(a, b)) {
                return Err(Error::axiom("closed under addition", &[a, b]));
            }
        }
        for r in ring.elements() {
            if !s.contains(parent.left_act(r, a)) {
                return Err(Error::axiom("closed under left multiplication", &[r, a]));
            }
            if s.kind == Kind::TwoSidedIdeal {
                let ar = parent.right_act(a, r).expect("rings act on the right");
                if !s.contains(ar) {
                    return Err(Error::axiom("closed under right multiplication", &[a, r]));
                }
            }
        }
    }
    Ok(())
}

/// Extends the additive subgroup `set` to `set + <h>`.
fn extend_span<C: Carrier + ?Sized>(parent: &C, set: &mut ElementSet, h: usize) {
    if set.contains(h) {
        return;
    }
    let mut frontier: Vec<usize> = set.ones().collect();
    loop {
        let next: Vec<usize> = frontier
            .iter()
            .map(|&x| parent.carrier_add(x, h))
            .filter(|&y| !set.contains(y))
            .collect();
        if next.is_empty() {
            break;
        }
        for &y in &next {
            set.insert(y);
        }
        frontier = next;
    }
}

/// The additive subgroup generated by `gens`.
pub fn additive_span<C: Carrier + ?Sized>(parent: &C, gens: impl IntoIterator<Item = usize>) -> ElementSet {
    let mut set = ElementSet::with_capacity(parent.carrier_size());
    set.insert(parent.carrier_zero());
    for h in gens {
        extend_span(parent, &mut set, h);
    }
    set
}

/// Everything reachable from `g` by the multiplications of `kind`: `Rg`, or `RgR` for two-sided ideals.
fn orbit<C: Carrier + ?Sized>(parent: &C, kind: Kind, g: usize) -> Vec<usize> {
    let ring = parent.scalars();
    let mut seen = ElementSet::with_capacity(parent.carrier_size());
    let mut out = Vec::new();
    for r in ring.elements() {
        let rg = parent.left_act(r, g);
        if kind == Kind::TwoSidedIdeal {
            for s in ring.elements() {
                let rgs = parent.right_act(rg, s).expect("rings act on the right");
                if !seen.put(rgs) {
                    out.push(rgs);
                }
            }
        } else if !seen.put(rg) {
            out.push(rg);
        }
    }
    out
}

/// Smallest substructure of the given kind containing `generators`.
///
/// The additive span of the multiplication orbit of the generators is already
/// closed under the ring action, so no outer fixpoint is needed.
pub fn generated_substructure<C: Carrier + ?Sized>(parent: &C, kind: Kind, generators: &[usize]) -> Result<Substructure> {
    check_kind(parent, kind)?;
    let mut set = ElementSet::with_capacity(parent.carrier_size());
    set.insert(parent.carrier_zero());
    for &g in generators {
        check_range(parent, g)?;
        if set.contains(g) {
            continue;
        }
        for h in orbit(parent, kind, g) {
            extend_span(parent, &mut set, h);
        }
    }
    Ok(Substructure {
        parent: parent.carrier_id(),
        kind,
        members: set,
    })
}

/// Every substructure of the given kind, sorted canonically.
pub fn all_substructures<C: Carrier + ?Sized>(parent: &C, kind: Kind) -> Result<Vec<Substructure>> {
    all_substructures_with(parent, kind, Limits::global())
}

/// Seeds the family with all cyclic substructures and closes it under joins
/// with those seeds; every substructure is a finite join of cyclic ones.
pub fn all_substructures_with<C: Carrier + ?Sized>(parent: &C, kind: Kind, limits: &Limits) -> Result<Vec<Substructure>> {
    check_kind(parent, kind)?;
    let n = parent.carrier_size();
    limits.check_enumeration(&format!("`{}`", parent.carrier_label()), n)?;

    // (generator, orbit, members) for each distinct cyclic substructure
    let mut seeds: Vec<(usize, Vec<usize>, ElementSet)> = Vec::new();
    let mut seen_seeds: HashSet<ElementSet> = HashSet::new();
    for x in 0..n {
        let gens = orbit(parent, kind, x);
        let span = additive_span(parent, gens.iter().copied());
        if seen_seeds.insert(span.clone()) {
            seeds.push((x, gens, span));
        }
    }

    let too_many = |count: usize| Error::SizeGuardExceeded {
        what: format!("lattice of `{}`", parent.carrier_label()),
        actual: count,
        limit: limits.max_lattice_members,
    };
    if seen_seeds.len() > limits.max_lattice_members {
        return Err(too_many(seen_seeds.len()));
    }
    let mut family: HashSet<ElementSet> = seen_seeds;
    let mut queue: Vec<ElementSet> = family.iter().cloned().collect();
    while let Some(s) = queue.pop() {
        for (x, gens, _) in &seeds {
            if s.contains(*x) {
                continue;
            }
            let mut joined = s.clone();
            for &h in gens {
                extend_span(parent, &mut joined, h);
            }
            if !family.contains(&joined) {
                family.insert(joined.clone());
                if family.len() > limits.max_lattice_members {
                    return Err(too_many(family.len()));
                }
                queue.push(joined);
            }
        }
    }

    let mut out: Vec<ElementSet> = family.into_iter().collect();
    out.sort_by(canonical_cmp);
    let id = parent.carrier_id();
    Ok(out
        .into_iter()
        .map(|members| Substructure {
            parent: id,
            kind,
            members,
        })
        .collect())
}

fn check_pair(a: &Substructure, b: &Substructure) -> Result<()> {
    if a.parent != b.parent {
        return Err(Error::ParentMismatch);
    }
    if a.kind != b.kind {
        return Err(Error::KindMismatch {
            expected: a.kind.to_string(),
            found: b.kind.to_string(),
        });
    }
    Ok(())
}

/// Lattice join `A + B`.
pub fn sum<C: Carrier + ?Sized>(parent: &C, a: &Substructure, b: &Substructure) -> Result<Substructure> {
    check_pair(a, b)?;
    if a.parent != parent.carrier_id() {
        return Err(Error::ParentMismatch);
    }
    let mut members = a.members.clone();
    for h in b.members.ones() {
        extend_span(parent, &mut members, h);
    }
    Ok(Substructure {
        parent: a.parent,
        kind: a.kind,
        members,
    })
}

/// Lattice meet `A ∩ B`.
pub fn intersect(a: &Substructure, b: &Substructure) -> Result<Substructure> {
    check_pair(a, b)?;
    let mut members = a.members.clone();
    members.intersect_with(&b.members);
    Ok(Substructure {
        parent: a.parent,
        kind: a.kind,
        members,
    })
}

/// Meet of a family; the empty meet is the whole parent.
pub fn intersect_family<'a, C: Carrier + ?Sized>(
    parent: &C,
    kind: Kind,
    family: impl IntoIterator<Item = &'a Substructure>,
) -> Result<Substructure> {
    let mut acc = Substructure::full(parent, kind)?;
    for s in family {
        acc = intersect(&acc, s)?;
    }
    Ok(acc)
}

/// `(N : M) = { r ∈ R : rM ⊆ N }`, a two-sided ideal of the base ring.
pub fn annihilator(module: &FiniteModule, n: &Substructure) -> Result<Substructure> {
    if n.parent != module.id() {
        return Err(Error::ParentMismatch);
    }
    let ring = module.ring();
    let mut members = ElementSet::with_capacity(ring.size());
    for r in ring.elements() {
        if module.elements().all(|m| n.contains(module.act(r, m))) {
            members.insert(r);
        }
    }
    let ideal = Substructure {
        parent: ring.id(),
        kind: Kind::TwoSidedIdeal,
        members,
    };
    debug_assert!(validate_substructure(ring, &ideal).is_ok());
    Ok(ideal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{module_free, module_regular, ring_product, ring_zn};

    fn members(s: &Substructure) -> Vec<usize> {
        s.elements()
    }

    #[test]
    fn generated_from_nothing_is_zero() {
        let m = module_regular(&ring_zn(4).unwrap()).unwrap();
        let s = generated_substructure(&m, Kind::Submodule, &[]).unwrap();
        assert_eq!(members(&s), vec![0]);
    }

    #[test]
    fn generated_from_everything_is_full() {
        let m = module_regular(&ring_zn(6).unwrap()).unwrap();
        let all: Vec<usize> = m.elements().collect();
        assert!(generated_substructure(&m, Kind::Submodule, &all).unwrap().is_full());
    }

    #[test]
    fn two_generates_zero_two_in_z4() {
        let m = module_regular(&ring_zn(4).unwrap()).unwrap();
        let s = generated_substructure(&m, Kind::Submodule, &[2]).unwrap();
        assert_eq!(members(&s), vec![0, 2]);
    }

    #[test]
    fn z4_has_three_submodules() {
        let m = module_regular(&ring_zn(4).unwrap()).unwrap();
        let lat = all_substructures(&m, Kind::Submodule).unwrap();
        let sets: Vec<Vec<usize>> = lat.iter().map(members).collect();
        assert_eq!(sets, vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]]);
    }

    #[test]
    fn kind_must_match_parent() {
        let r = ring_zn(4).unwrap();
        assert!(matches!(
            generated_substructure(&r, Kind::Submodule, &[1]),
            Err(Error::KindMismatch { .. })
        ));
        let m = module_regular(&r).unwrap();
        assert!(matches!(
            all_substructures(&m, Kind::TwoSidedIdeal),
            Err(Error::KindMismatch { .. })
        ));
    }

    #[test]
    fn lattice_identities() {
        let m = module_regular(&ring_zn(6).unwrap()).unwrap();
        let lat = all_substructures(&m, Kind::Submodule).unwrap();
        let zero = Substructure::zero(&m, Kind::Submodule).unwrap();
        let full = Substructure::full(&m, Kind::Submodule).unwrap();
        for a in &lat {
            assert_eq!(&sum(&m, a, &zero).unwrap(), a);
            assert_eq!(&intersect(a, &full).unwrap(), a);
        }
    }

    #[test]
    fn coordinate_axes_span_z2_squared() {
        let z2 = ring_zn(2).unwrap();
        let m = module_free(&z2, 2).unwrap();
        let e1 = m.element_named("(1,0)").unwrap();
        let e2 = m.element_named("(0,1)").unwrap();
        let a = generated_substructure(&m, Kind::Submodule, &[e1]).unwrap();
        let b = generated_substructure(&m, Kind::Submodule, &[e2]).unwrap();
        assert!(sum(&m, &a, &b).unwrap().is_full());
    }

    #[test]
    fn empty_meet_is_top() {
        let m = module_regular(&ring_zn(4).unwrap()).unwrap();
        let top = intersect_family(&m, Kind::Submodule, std::iter::empty()).unwrap();
        assert!(top.is_full());
    }

    #[test]
    fn mixing_parents_is_rejected() {
        let m1 = module_regular(&ring_zn(4).unwrap()).unwrap();
        let m2 = module_regular(&ring_zn(4).unwrap()).unwrap();
        let a = Substructure::zero(&m1, Kind::Submodule).unwrap();
        let b = Substructure::zero(&m2, Kind::Submodule).unwrap();
        assert_eq!(intersect(&a, &b), Err(Error::ParentMismatch));
        assert_eq!(sum(&m1, &a, &b), Err(Error::ParentMismatch));
    }

    #[test]
    fn annihilators_in_z4() {
        let m = module_regular(&ring_zn(4).unwrap()).unwrap();
        let lat = all_substructures(&m, Kind::Submodule).unwrap();
        let ann: Vec<Vec<usize>> = lat
            .iter()
            .map(|n| annihilator(&m, n).unwrap().elements())
            .collect();
        assert_eq!(ann, vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]]);
    }

    #[test]
    fn left_and_two_sided_ideals_agree_on_commutative_rings() {
        let r = ring_product(&[ring_zn(2).unwrap(), ring_zn(4).unwrap()]).unwrap();
        let left = all_substructures(&r, Kind::LeftIdeal).unwrap();
        let two = all_substructures(&r, Kind::TwoSidedIdeal).unwrap();
        let l: Vec<_> = left.iter().map(members).collect();
        let t: Vec<_> = two.iter().map(members).collect();
        assert_eq!(l, t);
    }

    #[test]
    fn enumeration_guard_trips() {
        let m = module_regular(&ring_zn(8).unwrap()).unwrap();
        let tight = Limits {
            max_lattice_members: 2,
            ..Limits::default()
        };
        assert!(matches!(
            all_substructures_with(&m, Kind::Submodule, &tight),
            Err(Error::SizeGuardExceeded { .. })
        ));
        let tiny = Limits {
            max_enumeration_size: 4,
            ..Limits::default()
        };
        assert!(matches!(
            all_substructures_with(&m, Kind::Submodule, &tiny),
            Err(Error::SizeGuardExceeded { .. })
        ));
    }
}
