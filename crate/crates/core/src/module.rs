//! Finite left modules over finite rings, quotients, products and homomorphisms.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::ring::{
    check_abelian_group, checked_product, cosets, find_identity, flatten, from_digits, inverses, next_id,
    to_digits, FiniteRing, RingElement,
};
use crate::substructure::{ElementSet, Kind, Substructure};

/// Provenance tags. `Projective` is only ever placed by constructors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    Free,
    Projective,
    Regular,
    Cyclic,
    Summand,
    Product,
    QuotientOf(String),
    SubmoduleOf(String),
    ExampleExx,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tag::Free => f.write_str("free"),
            Tag::Projective => f.write_str("projective"),
            Tag::Regular => f.write_str("regular"),
            Tag::Cyclic => f.write_str("cyclic"),
            Tag::Summand => f.write_str("summand"),
            Tag::Product => f.write_str("product"),
            Tag::QuotientOf(x) => write!(f, "quotient-of({x})"),
            Tag::SubmoduleOf(x) => write!(f, "submodule-of({x})"),
            Tag::ExampleExx => f.write_str("example-exx"),
        }
    }
}

/// Raw module tables: the additive group and the action `action[r][m] = r·m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleTables {
    pub add: Vec<Vec<usize>>,
    pub action: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

struct ModuleData {
    id: u64,
    label: String,
    names: Vec<String>,
    ring: FiniteRing,
    size: usize,
    zero: usize,
    add: Vec<usize>,
    neg: Vec<usize>,
    action: Vec<usize>,
    tags: BTreeSet<Tag>,
}

/// A validated finite left module. Cloning is cheap.
#[derive(Clone)]
pub struct FiniteModule(Arc<ModuleData>);

impl fmt::Debug for FiniteModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteModule")
            .field("label", &self.0.label)
            .field("ring", &self.0.ring.label())
            .field("size", &self.0.size)
            .finish()
    }
}

/// Builds and validates a module from raw tables.
pub fn module_from_action(ring: &FiniteRing, tables: &ModuleTables, label: &str) -> Result<FiniteModule> {
    module_from_action_with(ring, tables, label, Limits::global())
}

pub fn module_from_action_with(
    ring: &FiniteRing,
    tables: &ModuleTables,
    label: &str,
    limits: &Limits,
) -> Result<FiniteModule> {
    let size = tables.add.len();
    if size == 0 {
        return Err(Error::TableShape("module must have at least one element".into()));
    }
    let add = flatten("add", &tables.add, size, size)?;
    let action = flatten("action", &tables.action, ring.size(), size)?;
    let names = match &tables.names {
        Some(n) if n.len() != size => {
            return Err(Error::TableShape(format!("{} names given for {} elements", n.len(), size)))
        }
        Some(n) => n.clone(),
        None => (0..size).map(|i| i.to_string()).collect(),
    };
    FiniteModule::from_flat(ring, label.to_string(), names, add, action, BTreeSet::new(), limits)
}

impl FiniteModule {
    pub(crate) fn from_flat(
        ring: &FiniteRing,
        label: String,
        names: Vec<String>,
        add: Vec<usize>,
        action: Vec<usize>,
        tags: BTreeSet<Tag>,
        limits: &Limits,
    ) -> Result<Self> {
        if ring.is_zero_ring() {
            return Err(Error::ZeroBaseRing);
        }
        let size = names.len();
        limits.check_validation(&format!("module `{label}`"), size)?;
        let zero = find_identity(size, &add).ok_or_else(|| Error::axiom("additive identity", &[]))?;
        let neg = inverses(size, &add, zero)?;
        check_abelian_group(size, &add)?;
        let act = |r: usize, m: usize| action[r * size + m];
        let plus = |a: usize, b: usize| add[a * size + b];
        for m in 0..size {
            if act(ring.one(), m) != m {
                return Err(Error::axiom("unital action", &[m]));
            }
        }
        for r in ring.elements() {
            for m in 0..size {
                for n in 0..size {
                    if act(r, plus(m, n)) != plus(act(r, m), act(r, n)) {
                        return Err(Error::axiom("action distributes over module addition", &[r, m, n]));
                    }
                }
            }
        }
        for r in ring.elements() {
            for s in ring.elements() {
                let rs = ring.mul(r, s);
                let r_plus_s = ring.add(r, s);
                for m in 0..size {
                    if act(rs, m) != act(r, act(s, m)) {
                        return Err(Error::axiom("action associativity", &[r, s, m]));
                    }
                    if act(r_plus_s, m) != plus(act(r, m), act(s, m)) {
                        return Err(Error::axiom("action distributes over ring addition", &[r, s, m]));
                    }
                }
            }
        }
        Ok(FiniteModule(Arc::new(ModuleData {
            id: next_id(),
            label,
            names,
            ring: ring.clone(),
            size,
            zero,
            add,
            neg,
            action,
            tags,
        })))
    }

    /// The regular module `_R R`, tagged free, projective and regular.
    pub fn regular(ring: &FiniteRing) -> Result<Self> {
        let n = ring.size();
        let add = (0..n * n).map(|i| ring.add(i / n, i % n)).collect();
        let action = (0..n * n).map(|i| ring.mul(i / n, i % n)).collect();
        let tags = [Tag::Free, Tag::Projective, Tag::Regular, Tag::Cyclic].into_iter().collect();
        FiniteModule::from_flat(
            ring,
            ring.label().to_string(),
            ring.names().to_vec(),
            add,
            action,
            tags,
            Limits::global(),
        )
    }

    pub fn id(&self) -> u64 {
        self.0.id
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.0.ring
    }

    pub fn size(&self) -> usize {
        self.0.size
    }

    pub fn zero(&self) -> usize {
        self.0.zero
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.0.add[a * self.0.size + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.0.neg[a]
    }

    /// `r · m`.
    #[inline]
    pub fn act(&self, r: usize, m: usize) -> usize {
        self.0.action[r * self.0.size + m]
    }

    pub fn name(&self, m: usize) -> &str {
        &self.0.names[m]
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn element_named(&self, name: &str) -> Option<usize> {
        self.0.names.iter().position(|n| n == name)
    }

    pub fn tags(&self) -> &BTreeSet<Tag> {
        &self.0.tags
    }

    pub fn has_tag(&self, tag: &Tag) -> bool {
        self.0.tags.contains(tag)
    }

    pub fn is_projective(&self) -> bool {
        self.has_tag(&Tag::Projective)
    }

    pub fn is_zero_module(&self) -> bool {
        self.0.size == 1
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.0.size
    }

    pub fn elem(&self, index: usize) -> ModuleElement<'_> {
        assert!(index < self.size(), "element {index} out of range");
        ModuleElement { module: self, index }
    }

    pub fn tables(&self) -> ModuleTables {
        let n = self.size();
        ModuleTables {
            add: self.0.add.chunks(n).map(<[usize]>::to_vec).collect(),
            action: self.0.action.chunks(n).map(<[usize]>::to_vec).collect(),
            names: Some(self.0.names.clone()),
        }
    }

    /// A copy with a new label and extra tags. Keeps the same identity.
    pub(crate) fn retagged(&self, label: &str, extra: impl IntoIterator<Item = Tag>) -> FiniteModule {
        let d = &self.0;
        let mut tags = d.tags.clone();
        tags.extend(extra);
        FiniteModule(Arc::new(ModuleData {
            id: d.id,
            label: label.to_string(),
            names: d.names.clone(),
            ring: d.ring.clone(),
            size: d.size,
            zero: d.zero,
            add: d.add.clone(),
            neg: d.neg.clone(),
            action: d.action.clone(),
            tags,
        }))
    }

    /// Re-runs the full axiom check.
    pub fn revalidate(&self) -> Result<()> {
        let d = &self.0;
        FiniteModule::from_flat(
            &d.ring,
            d.label.clone(),
            d.names.clone(),
            d.add.clone(),
            d.action.clone(),
            d.tags.clone(),
            &Limits {
                max_validation_size: usize::MAX,
                ..Limits::default()
            },
        )
        .map(|_| ())
    }
}

/// A module element bound to its module.
#[derive(Clone, Copy)]
pub struct ModuleElement<'a> {
    module: &'a FiniteModule,
    index: usize,
}

impl<'a> ModuleElement<'a> {
    pub fn index(self) -> usize {
        self.index
    }

    pub fn is_zero(self) -> bool {
        self.index == self.module.zero()
    }
}

impl PartialEq for ModuleElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.module.id() == other.module.id() && self.index == other.index
    }
}

impl fmt::Debug for ModuleElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.module.name(self.index))
    }
}

impl fmt::Display for ModuleElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.module.name(self.index))
    }
}

impl<'a> Add for ModuleElement<'a> {
    type Output = ModuleElement<'a>;
    fn add(self, rhs: Self) -> Self::Output {
        ModuleElement {
            module: self.module,
            index: self.module.add(self.index, rhs.index),
        }
    }
}

impl<'a> Neg for ModuleElement<'a> {
    type Output = ModuleElement<'a>;
    fn neg(self) -> Self::Output {
        ModuleElement {
            module: self.module,
            index: self.module.neg(self.index),
        }
    }
}

impl<'a, 'r> Mul<ModuleElement<'a>> for RingElement<'r> {
    type Output = ModuleElement<'a>;
    fn mul(self, rhs: ModuleElement<'a>) -> Self::Output {
        assert!(self.ring().same_as(rhs.module.ring()), "ring mismatch");
        ModuleElement {
            module: rhs.module,
            index: rhs.module.act(self.index(), rhs.index),
        }
    }
}

/// An R-linear map between two modules over the same ring.
#[derive(Debug, Clone)]
pub struct ModuleHom {
    source: FiniteModule,
    target: FiniteModule,
    map: Vec<usize>,
}

impl ModuleHom {
    pub fn new(source: &FiniteModule, target: &FiniteModule, map: Vec<usize>) -> Result<Self> {
        if !source.ring().same_as(target.ring()) {
            return Err(Error::RingMismatch);
        }
        if map.len() != source.size() {
            return Err(Error::TableShape(format!(
                "map has {} entries for a source of size {}",
                map.len(),
                source.size()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&y| y >= target.size()) {
            return Err(Error::OutOfRange {
                index: bad,
                size: target.size(),
            });
        }
        if map[source.zero()] != target.zero() {
            return Err(Error::axiom("hom preserves zero", &[source.zero()]));
        }
        for a in source.elements() {
            for b in source.elements() {
                if map[source.add(a, b)] != target.add(map[a], map[b]) {
                    return Err(Error::axiom("hom additivity", &[a, b]));
                }
            }
            for r in source.ring().elements() {
                if map[source.act(r, a)] != target.act(r, map[a]) {
                    return Err(Error::axiom("hom linearity", &[r, a]));
                }
            }
        }
        Ok(ModuleHom {
            source: source.clone(),
            target: target.clone(),
            map,
        })
    }

    pub fn identity(module: &FiniteModule) -> Self {
        ModuleHom {
            source: module.clone(),
            target: module.clone(),
            map: module.elements().collect(),
        }
    }

    pub fn source(&self) -> &FiniteModule {
        &self.source
    }

    pub fn target(&self) -> &FiniteModule {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn kernel(&self) -> Substructure {
        let mut set = ElementSet::with_capacity(self.source.size());
        for x in self.source.elements() {
            if self.map[x] == self.target.zero() {
                set.insert(x);
            }
        }
        Substructure::from_set_unchecked(self.source.id(), Kind::Submodule, set)
    }

    pub fn image(&self) -> Substructure {
        let mut set = ElementSet::with_capacity(self.target.size());
        for &y in &self.map {
            set.insert(y);
        }
        Substructure::from_set_unchecked(self.target.id(), Kind::Submodule, set)
    }

    /// `φ(N)` for a submodule `N` of the source.
    pub fn image_of(&self, n: &Substructure) -> Result<Substructure> {
        if n.parent() != self.source.id() {
            return Err(Error::ParentMismatch);
        }
        let mut set = ElementSet::with_capacity(self.target.size());
        for x in n.members().ones() {
            set.insert(self.map[x]);
        }
        Ok(Substructure::from_set_unchecked(self.target.id(), Kind::Submodule, set))
    }

    /// `φ⁻¹(N')` for a submodule `N'` of the target.
    pub fn preimage(&self, n: &Substructure) -> Result<Substructure> {
        if n.parent() != self.target.id() {
            return Err(Error::ParentMismatch);
        }
        let mut set = ElementSet::with_capacity(self.source.size());
        for x in self.source.elements() {
            if n.contains(self.map[x]) {
                set.insert(x);
            }
        }
        Ok(Substructure::from_set_unchecked(self.source.id(), Kind::Submodule, set))
    }

    pub fn is_surjective(&self) -> bool {
        self.image().is_full()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_zero()
    }
}

/// `M / N` with its projection. The projection's kernel is exactly `N`.
pub fn quotient_module(module: &FiniteModule, n: &Substructure) -> Result<(FiniteModule, ModuleHom)> {
    if n.kind() != Kind::Submodule {
        return Err(Error::KindMismatch {
            expected: Kind::Submodule.to_string(),
            found: n.kind().to_string(),
        });
    }
    if n.parent() != module.id() {
        return Err(Error::ParentMismatch);
    }
    let members = n.elements();
    let (class_of, reps) = cosets(module.size(), &members, |a, b| module.add(a, b));
    let q = reps.len();
    let ring = module.ring();
    let mut add = vec![0; q * q];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            add[i * q + j] = class_of[module.add(a, b)];
        }
    }
    let mut action = vec![0; ring.size() * q];
    for r in ring.elements() {
        for (i, &a) in reps.iter().enumerate() {
            action[r * q + i] = class_of[module.act(r, a)];
        }
    }
    let names = reps.iter().map(|&r| format!("[{}]", module.name(r))).collect();
    let label = format!("{}/N{}", module.label(), members.len());
    let tags = [Tag::QuotientOf(module.label().to_string())].into_iter().collect();
    let unbounded = Limits {
        max_validation_size: usize::MAX,
        ..*Limits::global()
    };
    let quotient = FiniteModule::from_flat(ring, label, names, add, action, tags, &unbounded)?;
    let projection = ModuleHom {
        source: module.clone(),
        target: quotient.clone(),
        map: class_of,
    };
    Ok((quotient, projection))
}

/// A submodule viewed as a module in its own right, with the inclusion map.
pub fn submodule_as_module(module: &FiniteModule, n: &Substructure) -> Result<(FiniteModule, ModuleHom)> {
    if n.kind() != Kind::Submodule {
        return Err(Error::KindMismatch {
            expected: Kind::Submodule.to_string(),
            found: n.kind().to_string(),
        });
    }
    if n.parent() != module.id() {
        return Err(Error::ParentMismatch);
    }
    let elems = n.elements();
    let mut index_of = vec![usize::MAX; module.size()];
    for (i, &x) in elems.iter().enumerate() {
        index_of[x] = i;
    }
    let k = elems.len();
    let ring = module.ring();
    let add = (0..k * k)
        .map(|i| index_of[module.add(elems[i / k], elems[i % k])])
        .collect();
    let action = (0..ring.size() * k)
        .map(|i| index_of[module.act(i / k, elems[i % k])])
        .collect();
    let names = elems.iter().map(|&x| module.name(x).to_string()).collect();
    let label = format!("{}<{}>", module.label(), k);
    let tags = [Tag::SubmoduleOf(module.label().to_string())].into_iter().collect();
    let sub = FiniteModule::from_flat(ring, label, names, add, action, tags, Limits::global())?;
    let inclusion = ModuleHom {
        source: sub.clone(),
        target: module.clone(),
        map: elems,
    };
    Ok((sub, inclusion))
}

/// Componentwise product of modules over one ring. Projective (free) when every factor is.
pub fn module_direct_product(factors: &[FiniteModule]) -> Result<FiniteModule> {
    let first = factors.first().ok_or(Error::EmptyList)?;
    let ring = first.ring();
    if factors.iter().any(|m| !m.ring().same_as(ring)) {
        return Err(Error::RingMismatch);
    }
    let limits = Limits::global();
    let sizes: Vec<usize> = factors.iter().map(FiniteModule::size).collect();
    let size = checked_product(&sizes, "product module", limits)?;
    let all: Vec<Vec<usize>> = (0..size).map(|x| to_digits(x, &sizes)).collect();
    let mut add = vec![0; size * size];
    for a in 0..size {
        for b in 0..size {
            let s: Vec<usize> = factors
                .iter()
                .enumerate()
                .map(|(i, m)| m.add(all[a][i], all[b][i]))
                .collect();
            add[a * size + b] = from_digits(&s, &sizes);
        }
    }
    let mut action = vec![0; ring.size() * size];
    for r in ring.elements() {
        for a in 0..size {
            let s: Vec<usize> = factors
                .iter()
                .enumerate()
                .map(|(i, m)| m.act(r, all[a][i]))
                .collect();
            action[r * size + a] = from_digits(&s, &sizes);
        }
    }
    let names = all
        .iter()
        .map(|d| {
            let parts: Vec<&str> = d.iter().zip(factors).map(|(&x, m)| m.name(x)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let label = if factors.iter().all(|m| m.label() == first.label()) && factors.len() > 1 {
        format!("{}^{}", first.label(), factors.len())
    } else {
        factors.iter().map(FiniteModule::label).collect::<Vec<_>>().join("x")
    };
    let mut tags: BTreeSet<Tag> = [Tag::Product].into_iter().collect();
    if factors.iter().all(FiniteModule::is_projective) {
        tags.insert(Tag::Projective);
    }
    if factors.iter().all(|m| m.has_tag(&Tag::Free)) {
        tags.insert(Tag::Free);
    }
    FiniteModule::from_flat(ring, label, names, add, action, tags, limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{module_example_exx, module_regular, ring_matrix, ring_zn};
    use crate::substructure::{all_substructures, generated_substructure};

    #[test]
    fn quotient_by_zero_is_bijective() {
        let m = module_regular(&ring_zn(6).unwrap()).unwrap();
        let zero = Substructure::zero(&m, Kind::Submodule).unwrap();
        let (q, p) = quotient_module(&m, &zero).unwrap();
        assert_eq!(q.size(), 6);
        assert!(p.is_injective() && p.is_surjective());
    }

    #[test]
    fn quotient_by_everything_is_zero_module() {
        let m = module_regular(&ring_zn(4).unwrap()).unwrap();
        let full = Substructure::full(&m, Kind::Submodule).unwrap();
        let (q, _) = quotient_module(&m, &full).unwrap();
        assert!(q.is_zero_module());
    }

    #[test]
    fn z4_mod_two_has_size_two_and_kernel_n() {
        let m = module_regular(&ring_zn(4).unwrap()).unwrap();
        let n = generated_substructure(&m, Kind::Submodule, &[2]).unwrap();
        let (q, p) = quotient_module(&m, &n).unwrap();
        assert_eq!(q.size(), 2);
        assert_eq!(p.kernel(), n);
        assert!(p.is_surjective());
        // 1 + 1 = 2 ≡ 0 in the quotient
        assert_eq!(q.add(p.apply(1), p.apply(1)), q.zero());
    }

    #[test]
    fn quotient_needs_a_submodule_of_the_module() {
        let r = ring_zn(4).unwrap();
        let m = module_regular(&r).unwrap();
        let other = module_regular(&r).unwrap();
        let n = Substructure::zero(&other, Kind::Submodule).unwrap();
        assert_eq!(quotient_module(&m, &n).unwrap_err(), Error::ParentMismatch);
        let ideal = Substructure::zero(&r, Kind::TwoSidedIdeal).unwrap();
        assert!(matches!(quotient_module(&m, &ideal), Err(Error::KindMismatch { .. })));
    }

    #[test]
    fn free_square_of_z4() {
        let m = module_regular(&ring_zn(4).unwrap()).unwrap();
        let f = module_direct_product(&[m.clone(), m.clone()]).unwrap();
        assert_eq!(f.size(), 16);
        assert!(f.has_tag(&Tag::Free) && f.is_projective());
        f.revalidate().unwrap();
    }

    #[test]
    fn product_over_different_rings_is_rejected() {
        let a = module_regular(&ring_zn(2).unwrap()).unwrap();
        let b = module_regular(&ring_zn(3).unwrap()).unwrap();
        assert_eq!(module_direct_product(&[a, b]).unwrap_err(), Error::RingMismatch);
        assert_eq!(module_direct_product(&[]).unwrap_err(), Error::EmptyList);
    }

    #[test]
    fn broken_action_is_rejected() {
        let r = ring_zn(4).unwrap();
        let mut t = module_regular(&r).unwrap().tables();
        // 2·1 := 1 breaks linearity in the ring variable
        t.action[2][1] = 1;
        match module_from_action(&r, &t, "bad") {
            Err(Error::AxiomViolation { axiom, .. }) => assert!(axiom.starts_with("action")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn action_breaking_associativity_only() {
        // Z2 x Z2 acting on Z2^2 through (a,b) ↦ b·I + (a+b)·A with A nilpotent:
        // additive and unital, but (1,0) is idempotent while A is not.
        let r = crate::catalog::ring_product(&[ring_zn(2).unwrap(), ring_zn(2).unwrap()]).unwrap();
        let vec_of = |m: usize| (m >> 1, m & 1);
        let idx = |x: usize, y: usize| (x << 1) | y;
        let mut action = vec![vec![0; 4]; 4];
        for e in r.elements() {
            let name = r.name(e);
            let a = usize::from(name.as_bytes()[1] == b'1');
            let b = usize::from(name.as_bytes()[3] == b'1');
            for m in 0..4 {
                let (x, y) = vec_of(m);
                action[e][m] = idx((b * x + (a + b) * y) % 2, (b * y) % 2);
            }
        }
        let t = ModuleTables {
            add: (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect(),
            action,
            names: None,
        };
        match module_from_action(&r, &t, "bad") {
            Err(Error::AxiomViolation { axiom, witness }) => {
                assert_eq!(axiom, "action associativity");
                let [s1, s2, m] = [witness[0], witness[1], witness[2]];
                assert_ne!(t.action[r.mul(s1, s2)][m], t.action[s1][t.action[s2][m]]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn zero_ring_cannot_carry_modules() {
        let zero = ring_zn(1);
        // Z1 is rejected by the catalog; build it by hand.
        assert!(zero.is_err());
        let z1 = FiniteRing::from_tables(
            &crate::ring::RingTables {
                add: vec![vec![0]],
                mul: vec![vec![0]],
                one: 0,
                names: None,
            },
            "0",
        )
        .unwrap();
        assert_eq!(FiniteModule::regular(&z1).unwrap_err(), Error::ZeroBaseRing);
    }

    #[test]
    fn exx_is_a_four_element_module() {
        let m = module_example_exx().unwrap();
        assert_eq!(m.size(), 4);
        assert_eq!(m.ring().size(), 16);
        m.revalidate().unwrap();
        assert!(m.ring().same_as(&ring_matrix(2, &ring_zn(2).unwrap()).unwrap()));
    }

    #[test]
    fn hom_image_and_preimage() {
        let m = module_regular(&ring_zn(6).unwrap()).unwrap();
        let lat = all_substructures(&m, Kind::Submodule).unwrap();
        let n = &lat[1];
        let (q, p) = quotient_module(&m, n).unwrap();
        for k in &lat {
            let img = p.image_of(k).unwrap();
            crate::substructure::validate_substructure(&q, &img).unwrap();
            let back = p.preimage(&img).unwrap();
            assert!(k.is_subset(&back));
        }
    }

    #[test]
    fn element_arithmetic() {
        let r = ring_zn(4).unwrap();
        let m = module_regular(&r).unwrap();
        let x = r.elem(2) * m.elem(3);
        assert_eq!(x.index(), 2);
        assert!((x + x).is_zero());
        assert_eq!((-m.elem(1)).index(), 3);
    }
}
