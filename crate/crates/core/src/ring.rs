//! Finite unital associative rings stored as dense operation tables.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::substructure::{Kind, Substructure};

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

pub(crate) fn next_id() -> u64 {
    NEXT_ID.fetch_add(1, Ordering::Relaxed)
}

/// Raw operation tables as they appear in configuration files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingTables {
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub one: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

struct RingData {
    id: u64,
    label: String,
    names: Vec<String>,
    size: usize,
    zero: usize,
    one: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    commutative: bool,
}

/// A validated finite ring. Cloning is cheap; the tables are shared.
#[derive(Clone)]
pub struct FiniteRing(Arc<RingData>);

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("label", &self.0.label)
            .field("size", &self.0.size)
            .finish()
    }
}

impl FiniteRing {
    /// Builds and validates a ring from raw tables under the process-wide limits.
    pub fn from_tables(tables: &RingTables, label: &str) -> Result<Self> {
        Self::from_tables_with(tables, label, Limits::global())
    }

    pub fn from_tables_with(tables: &RingTables, label: &str, limits: &Limits) -> Result<Self> {
        let size = tables.add.len();
        if size == 0 {
            return Err(Error::TableShape("ring must have at least one element".into()));
        }
        let add = flatten("add", &tables.add, size, size)?;
        let mul = flatten("mul", &tables.mul, size, size)?;
        if tables.one >= size {
            return Err(Error::OutOfRange {
                index: tables.one,
                size,
            });
        }
        let names = match &tables.names {
            Some(n) if n.len() != size => {
                return Err(Error::TableShape(format!(
                    "{} names given for {} elements",
                    n.len(),
                    size
                )))
            }
            Some(n) => n.clone(),
            None => (0..size).map(|i| i.to_string()).collect(),
        };
        Self::from_flat(label.to_string(), names, add, mul, tables.one, limits)
    }

    pub(crate) fn from_flat(
        label: String,
        names: Vec<String>,
        add: Vec<usize>,
        mul: Vec<usize>,
        one: usize,
        limits: &Limits,
    ) -> Result<Self> {
        let size = names.len();
        limits.check_validation(&format!("ring `{label}`"), size)?;
        let zero = find_identity(size, &add).ok_or_else(|| Error::axiom("additive identity", &[]))?;
        let neg = inverses(size, &add, zero)?;
        check_abelian_group(size, &add)?;
        let at = |a: usize, b: usize| a * size + b;
        for a in 0..size {
            if mul[at(one, a)] != a || mul[at(a, one)] != a {
                return Err(Error::axiom("multiplicative identity", &[a]));
            }
        }
        for a in 0..size {
            for b in 0..size {
                let ab = mul[at(a, b)];
                let a_plus_b = add[at(a, b)];
                for c in 0..size {
                    if mul[at(ab, c)] != mul[at(a, mul[at(b, c)])] {
                        return Err(Error::axiom("multiplicative associativity", &[a, b, c]));
                    }
                    if mul[at(a, add[at(b, c)])] != add[at(ab, mul[at(a, c)])] {
                        return Err(Error::axiom("left distributivity", &[a, b, c]));
                    }
                    if mul[at(a_plus_b, c)] != add[at(mul[at(a, c)], mul[at(b, c)])] {
                        return Err(Error::axiom("right distributivity", &[a, b, c]));
                    }
                }
            }
        }
        let commutative = (0..size).all(|a| (0..size).all(|b| mul[at(a, b)] == mul[at(b, a)]));
        Ok(FiniteRing(Arc::new(RingData {
            id: next_id(),
            label,
            names,
            size,
            zero,
            one,
            add,
            mul,
            neg,
            commutative,
        })))
    }

    pub fn id(&self) -> u64 {
        self.0.id
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    pub fn size(&self) -> usize {
        self.0.size
    }

    pub fn zero(&self) -> usize {
        self.0.zero
    }

    pub fn one(&self) -> usize {
        self.0.one
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.0.add[a * self.0.size + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.0.mul[a * self.0.size + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.0.neg[a]
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `a^k` for `k >= 1`.
    pub fn pow(&self, a: usize, k: usize) -> usize {
        assert!(k >= 1, "exponent must be positive");
        (1..k).fold(a, |acc, _| self.mul(acc, a))
    }

    pub fn name(&self, a: usize) -> &str {
        &self.0.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn is_commutative(&self) -> bool {
        self.0.commutative
    }

    pub fn is_zero_ring(&self) -> bool {
        self.0.size == 1
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.0.size
    }

    pub fn elem(&self, index: usize) -> RingElement<'_> {
        assert!(index < self.size(), "element {index} out of range");
        RingElement { ring: self, index }
    }

    /// Finds an element by its display name.
    pub fn element_named(&self, name: &str) -> Option<usize> {
        self.0.names.iter().position(|n| n == name)
    }

    /// Same tables, different label.
    pub fn relabeled(&self, label: &str) -> FiniteRing {
        let d = &self.0;
        FiniteRing(Arc::new(RingData {
            id: d.id,
            label: label.to_string(),
            names: d.names.clone(),
            size: d.size,
            zero: d.zero,
            one: d.one,
            add: d.add.clone(),
            mul: d.mul.clone(),
            neg: d.neg.clone(),
            commutative: d.commutative,
        }))
    }

    /// Structural equality: identical tables (labels and names ignored).
    pub fn same_as(&self, other: &FiniteRing) -> bool {
        self.0.id == other.0.id
            || (self.0.size == other.0.size
                && self.0.one == other.0.one
                && self.0.add == other.0.add
                && self.0.mul == other.0.mul)
    }

    pub fn tables(&self) -> RingTables {
        let n = self.size();
        RingTables {
            add: self.0.add.chunks(n).map(<[usize]>::to_vec).collect(),
            mul: self.0.mul.chunks(n).map(<[usize]>::to_vec).collect(),
            one: self.one(),
            names: Some(self.0.names.clone()),
        }
    }

    /// Re-runs the full axiom check on the stored tables.
    pub fn revalidate(&self) -> Result<()> {
        let d = &self.0;
        FiniteRing::from_flat(
            d.label.clone(),
            d.names.clone(),
            d.add.clone(),
            d.mul.clone(),
            d.one,
            &Limits {
                max_validation_size: usize::MAX,
                ..Limits::default()
            },
        )
        .map(|_| ())
    }
}

/// Quotient `R / I` together with the canonical projection.
#[derive(Debug, Clone)]
pub struct QuotientRing {
    pub ring: FiniteRing,
    /// `projection[x]` is the coset of `x`.
    pub projection: Vec<usize>,
}

pub fn quotient_ring(ring: &FiniteRing, ideal: &Substructure) -> Result<QuotientRing> {
    if ideal.kind() != Kind::TwoSidedIdeal {
        return Err(Error::KindMismatch {
            expected: Kind::TwoSidedIdeal.to_string(),
            found: ideal.kind().to_string(),
        });
    }
    if ideal.parent() != ring.id() {
        return Err(Error::ParentMismatch);
    }
    let members: Vec<usize> = ideal.members().ones().collect();
    let (class_of, reps) = cosets(ring.size(), &members, |a, b| ring.add(a, b));
    let q = reps.len();
    let mut add = vec![0; q * q];
    let mut mul = vec![0; q * q];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            add[i * q + j] = class_of[ring.add(a, b)];
            mul[i * q + j] = class_of[ring.mul(a, b)];
        }
    }
    let names = reps.iter().map(|&r| format!("[{}]", ring.name(r))).collect();
    let label = format!("{}/I{}", ring.label(), members.len());
    let unbounded = Limits {
        max_validation_size: usize::MAX,
        ..*Limits::global()
    };
    let quotient = FiniteRing::from_flat(label, names, add, mul, class_of[ring.one()], &unbounded)?;
    Ok(QuotientRing {
        ring: quotient,
        projection: class_of,
    })
}

/// Componentwise product; the first factor is the most significant digit.
pub fn ring_direct_product(factors: &[FiniteRing]) -> Result<FiniteRing> {
    ring_direct_product_with(factors, Limits::global())
}

pub fn ring_direct_product_with(factors: &[FiniteRing], limits: &Limits) -> Result<FiniteRing> {
    if factors.is_empty() {
        return Err(Error::EmptyList);
    }
    let sizes: Vec<usize> = factors.iter().map(FiniteRing::size).collect();
    let size = checked_product(&sizes, "product ring", limits)?;
    let digits = |x: usize| to_digits(x, &sizes);
    let encode = |d: &[usize]| from_digits(d, &sizes);
    let mut add = vec![0; size * size];
    let mut mul = vec![0; size * size];
    let all: Vec<Vec<usize>> = (0..size).map(digits).collect();
    for a in 0..size {
        for b in 0..size {
            let s: Vec<usize> = factors
                .iter()
                .enumerate()
                .map(|(i, r)| r.add(all[a][i], all[b][i]))
                .collect();
            let p: Vec<usize> = factors
                .iter()
                .enumerate()
                .map(|(i, r)| r.mul(all[a][i], all[b][i]))
                .collect();
            add[a * size + b] = encode(&s);
            mul[a * size + b] = encode(&p);
        }
    }
    let one = encode(&factors.iter().map(FiniteRing::one).collect::<Vec<_>>());
    let names = all
        .iter()
        .map(|d| {
            let parts: Vec<&str> = d.iter().zip(factors).map(|(&x, r)| r.name(x)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let label = factors
        .iter()
        .map(FiniteRing::label)
        .collect::<Vec<_>>()
        .join("x");
    FiniteRing::from_flat(label, names, add, mul, one, limits)
}

pub(crate) fn checked_product(sizes: &[usize], what: &str, limits: &Limits) -> Result<usize> {
    let mut size: usize = 1;
    for &s in sizes {
        size = size.checked_mul(s).ok_or(Error::SizeGuardExceeded {
            what: what.to_string(),
            actual: usize::MAX,
            limit: limits.max_validation_size,
        })?;
    }
    limits.check_validation(what, size)?;
    Ok(size)
}

pub(crate) fn to_digits(mut x: usize, radices: &[usize]) -> Vec<usize> {
    let mut d = vec![0; radices.len()];
    for i in (0..radices.len()).rev() {
        d[i] = x % radices[i];
        x /= radices[i];
    }
    d
}

pub(crate) fn from_digits(d: &[usize], radices: &[usize]) -> usize {
    d.iter().zip(radices).fold(0, |acc, (&x, &r)| acc * r + x)
}

/// Partitions `0..size` into cosets of the subgroup `members`.
/// Classes are numbered in order of their smallest element.
pub(crate) fn cosets(
    size: usize,
    members: &[usize],
    add: impl Fn(usize, usize) -> usize,
) -> (Vec<usize>, Vec<usize>) {
    let mut class_of = vec![usize::MAX; size];
    let mut reps = Vec::new();
    for x in 0..size {
        if class_of[x] == usize::MAX {
            let c = reps.len();
            reps.push(x);
            for &n in members {
                class_of[add(x, n)] = c;
            }
        }
    }
    (class_of, reps)
}

pub(crate) fn flatten(name: &str, rows: &[Vec<usize>], n_rows: usize, n_cols: usize) -> Result<Vec<usize>> {
    if rows.len() != n_rows {
        return Err(Error::TableShape(format!(
            "`{name}` has {} rows, expected {n_rows}",
            rows.len()
        )));
    }
    let mut flat = Vec::with_capacity(n_rows * n_cols);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n_cols {
            return Err(Error::TableShape(format!(
                "`{name}` row {i} has {} entries, expected {n_cols}",
                row.len()
            )));
        }
        for &x in row {
            if x >= n_cols {
                return Err(Error::OutOfRange { index: x, size: n_cols });
            }
            flat.push(x);
        }
    }
    Ok(flat)
}

pub(crate) fn find_identity(size: usize, add: &[usize]) -> Option<usize> {
    (0..size).find(|&z| (0..size).all(|x| add[z * size + x] == x && add[x * size + z] == x))
}

pub(crate) fn inverses(size: usize, add: &[usize], zero: usize) -> Result<Vec<usize>> {
    (0..size)
        .map(|a| {
            (0..size)
                .find(|&b| add[a * size + b] == zero)
                .ok_or_else(|| Error::axiom("additive inverse", &[a]))
        })
        .collect()
}

pub(crate) fn check_abelian_group(size: usize, add: &[usize]) -> Result<()> {
    for a in 0..size {
        for b in 0..size {
            let ab = add[a * size + b];
            if ab != add[b * size + a] {
                return Err(Error::axiom("additive commutativity", &[a, b]));
            }
            for c in 0..size {
                if add[ab * size + c] != add[a * size + add[b * size + c]] {
                    return Err(Error::axiom("additive associativity", &[a, b, c]));
                }
            }
        }
    }
    Ok(())
}

/// A ring element bound to its ring, for readable arithmetic.
#[derive(Clone, Copy)]
pub struct RingElement<'a> {
    ring: &'a FiniteRing,
    index: usize,
}

impl<'a> RingElement<'a> {
    pub fn index(self) -> usize {
        self.index
    }

    pub fn ring(self) -> &'a FiniteRing {
        self.ring
    }

    pub fn pow(self, k: usize) -> Self {
        RingElement {
            ring: self.ring,
            index: self.ring.pow(self.index, k),
        }
    }

    pub fn is_zero(self) -> bool {
        self.index == self.ring.zero()
    }
}

impl PartialEq for RingElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.ring.id() == other.ring.id() && self.index == other.index
    }
}

impl fmt::Debug for RingElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ring.name(self.index))
    }
}

impl fmt::Display for RingElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.ring.name(self.index))
    }
}

impl<'a> Add for RingElement<'a> {
    type Output = RingElement<'a>;
    fn add(self, rhs: Self) -> Self::Output {
        RingElement {
            ring: self.ring,
            index: self.ring.add(self.index, rhs.index),
        }
    }
}

impl<'a> Sub for RingElement<'a> {
    type Output = RingElement<'a>;
    fn sub(self, rhs: Self) -> Self::Output {
        RingElement {
            ring: self.ring,
            index: self.ring.sub(self.index, rhs.index),
        }
    }
}

impl<'a> Mul for RingElement<'a> {
    type Output = RingElement<'a>;
    fn mul(self, rhs: Self) -> Self::Output {
        RingElement {
            ring: self.ring,
            index: self.ring.mul(self.index, rhs.index),
        }
    }
}

impl<'a> Neg for RingElement<'a> {
    type Output = RingElement<'a>;
    fn neg(self) -> Self::Output {
        RingElement {
            ring: self.ring,
            index: self.ring.neg(self.index),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn_tables(n: usize) -> RingTables {
        RingTables {
            add: (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(),
            mul: (0..n).map(|a| (0..n).map(|b| (a * b) % n).collect()).collect(),
            one: 1 % n,
            names: None,
        }
    }

    #[test]
    fn z2_from_tables() {
        let r = FiniteRing::from_tables(&zn_tables(2), "Z2").unwrap();
        assert_eq!(r.size(), 2);
        assert_eq!(r.add(1, 1), 0);
        assert!(r.is_commutative());
    }

    #[test]
    fn z4_two_squared_is_zero() {
        let r = FiniteRing::from_tables(&zn_tables(4), "Z4").unwrap();
        let two = r.elem(2);
        assert!((two * two).is_zero());
        assert_eq!((two + two).index(), 0);
        assert_eq!((-r.elem(1)).index(), 3);
    }

    /// Unital bilinear algebra on F2^3 with basis 1, x, y and
    /// x*y = y, y*y = x, all other basis products zero: (xy)y != x(yy).
    fn non_associative_tables() -> RingTables {
        let basis_mul = |i: usize, j: usize| -> [u8; 3] {
            match (i, j) {
                (0, k) | (k, 0) => {
                    let mut v = [0; 3];
                    v[k] = 1;
                    v
                }
                (1, 2) => [0, 0, 1],
                (2, 2) => [0, 1, 0],
                _ => [0, 0, 0],
            }
        };
        let bits = |v: usize| [(v & 1) as u8, ((v >> 1) & 1) as u8, ((v >> 2) & 1) as u8];
        let enc = |v: [u8; 3]| (v[0] as usize) | ((v[1] as usize) << 1) | ((v[2] as usize) << 2);
        let mul = |a: usize, b: usize| {
            let (va, vb) = (bits(a), bits(b));
            let mut out = [0u8; 3];
            for i in 0..3 {
                for j in 0..3 {
                    if va[i] & vb[j] == 1 {
                        let p = basis_mul(i, j);
                        for k in 0..3 {
                            out[k] ^= p[k];
                        }
                    }
                }
            }
            enc(out)
        };
        RingTables {
            add: (0..8).map(|a| (0..8).map(|b| a ^ b).collect()).collect(),
            mul: (0..8).map(|a| (0..8).map(|b| mul(a, b)).collect()).collect(),
            one: 1,
            names: None,
        }
    }

    #[test]
    fn non_associative_multiplication_is_rejected() {
        let t = non_associative_tables();
        match FiniteRing::from_tables(&t, "bad") {
            Err(Error::AxiomViolation { axiom, witness }) => {
                assert_eq!(axiom, "multiplicative associativity");
                let [a, b, c] = [witness[0], witness[1], witness[2]];
                assert_ne!(t.mul[t.mul[a][b]][c], t.mul[a][t.mul[b][c]]);
            }
            other => panic!("expected axiom violation, got {other:?}"),
        }
    }

    #[test]
    fn ragged_tables_are_a_shape_error() {
        let mut t = zn_tables(3);
        t.add[1].pop();
        assert!(matches!(FiniteRing::from_tables(&t, "bad"), Err(Error::TableShape(_))));
    }

    #[test]
    fn zero_ring_is_a_valid_carrier() {
        let r = FiniteRing::from_tables(&zn_tables(1), "0").unwrap();
        assert!(r.is_zero_ring());
        assert_eq!(r.zero(), r.one());
    }

    #[test]
    fn product_of_z2_and_z2() {
        let z2 = FiniteRing::from_tables(&zn_tables(2), "Z2").unwrap();
        let p = ring_direct_product(&[z2.clone(), z2.clone()]).unwrap();
        assert_eq!(p.size(), 4);
        let x = p.element_named("(1,0)").unwrap();
        let y = p.element_named("(0,1)").unwrap();
        assert_eq!(p.mul(x, y), p.zero());
        assert_eq!(p.name(p.add(x, y)), "(1,1)");
        assert_eq!(p.one(), p.element_named("(1,1)").unwrap());
    }

    #[test]
    fn product_of_one_factor_is_a_copy() {
        let z4 = FiniteRing::from_tables(&zn_tables(4), "Z4").unwrap();
        let p = ring_direct_product(std::slice::from_ref(&z4)).unwrap();
        assert!(p.same_as(&z4));
        assert!(matches!(ring_direct_product(&[]), Err(Error::EmptyList)));
    }
}
