//! Stock rings and modules, the 4-element simple module over `M2(Z2)`, and catalog assembly.

use serde::{Deserialize, Serialize};

use crate::config::GeneratorSpec;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::module::{module_direct_product, quotient_module, submodule_as_module, FiniteModule, ModuleTables, Tag};
use crate::ring::{checked_product, from_digits, ring_direct_product, to_digits, FiniteRing};
use crate::substructure::{all_substructures, generated_substructure, Kind, Substructure};

/// `Z/nZ`, `n >= 2`.
pub fn ring_zn(n: usize) -> Result<FiniteRing> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("Zn needs n >= 2, got {n}")));
    }
    Limits::global().check_validation(&format!("Z{n}"), n)?;
    let add = (0..n * n).map(|i| (i / n + i % n) % n).collect();
    let mul = (0..n * n).map(|i| (i / n) * (i % n) % n).collect();
    let names = (0..n).map(|i| i.to_string()).collect();
    FiniteRing::from_flat(format!("Z{n}"), names, add, mul, 1, Limits::global())
}

/// Positions `(i, j)` of a `k x k` matrix that carry entries.
fn matrix_ring(k: usize, base: &FiniteRing, positions: &[(usize, usize)], label: String) -> Result<FiniteRing> {
    if k == 0 {
        return Err(Error::InvalidParameter("matrix size must be at least 1".into()));
    }
    let limits = Limits::global();
    let q = base.size();
    let radices = vec![q; positions.len()];
    let size = checked_product(&radices, &label, limits)?;
    let slot = |i: usize, j: usize| positions.iter().position(|&p| p == (i, j));
    let decode = |x: usize| -> Vec<Vec<usize>> {
        let d = to_digits(x, &radices);
        (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| slot(i, j).map_or(base.zero(), |s| d[s]))
                    .collect()
            })
            .collect()
    };
    let encode = |m: &[Vec<usize>]| -> usize {
        let d: Vec<usize> = positions.iter().map(|&(i, j)| m[i][j]).collect();
        from_digits(&d, &radices)
    };
    let mats: Vec<Vec<Vec<usize>>> = (0..size).map(decode).collect();
    let mut add = vec![0; size * size];
    let mut mul = vec![0; size * size];
    for a in 0..size {
        for b in 0..size {
            let (x, y) = (&mats[a], &mats[b]);
            let sum: Vec<Vec<usize>> = (0..k)
                .map(|i| (0..k).map(|j| base.add(x[i][j], y[i][j])).collect())
                .collect();
            let prod: Vec<Vec<usize>> = (0..k)
                .map(|i| {
                    (0..k)
                        .map(|j| (0..k).fold(base.zero(), |acc, t| base.add(acc, base.mul(x[i][t], y[t][j]))))
                        .collect()
                })
                .collect();
            add[a * size + b] = encode(&sum);
            mul[a * size + b] = encode(&prod);
        }
    }
    let identity: Vec<Vec<usize>> = (0..k)
        .map(|i| (0..k).map(|j| if i == j { base.one() } else { base.zero() }).collect())
        .collect();
    let one = encode(&identity);
    let names = mats
        .iter()
        .map(|m| {
            let rows: Vec<String> = m
                .iter()
                .map(|row| {
                    let cells: Vec<&str> = row.iter().map(|&c| base.name(c)).collect();
                    format!("[{}]", cells.join(","))
                })
                .collect();
            format!("[{}]", rows.join(","))
        })
        .collect();
    FiniteRing::from_flat(label, names, add, mul, one, limits)
}

/// Full matrix ring `M_k(base)`. Entries are stored row-major, first entry most significant.
pub fn ring_matrix(k: usize, base: &FiniteRing) -> Result<FiniteRing> {
    let positions: Vec<(usize, usize)> = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).collect();
    matrix_ring(k, base, &positions, format!("M{k}({})", base.label()))
}

/// Upper triangular matrices `U_k(base)`.
pub fn ring_upper_triangular(k: usize, base: &FiniteRing) -> Result<FiniteRing> {
    let positions: Vec<(usize, usize)> = (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
    matrix_ring(k, base, &positions, format!("U{k}({})", base.label()))
}

pub fn ring_product(factors: &[FiniteRing]) -> Result<FiniteRing> {
    ring_direct_product(factors)
}

pub fn module_regular(ring: &FiniteRing) -> Result<FiniteModule> {
    FiniteModule::regular(ring)
}

/// `R^n`, tagged free and projective.
pub fn module_free(ring: &FiniteRing, rank: usize) -> Result<FiniteModule> {
    if rank == 0 {
        return Err(Error::InvalidParameter("free rank must be at least 1".into()));
    }
    let r = module_regular(ring)?;
    if rank == 1 {
        return Ok(r);
    }
    module_direct_product(&vec![r; rank])
}

/// `R / I` for a left ideal `I`: the cyclic quotient of the regular module.
pub fn module_cyclic(ring: &FiniteRing, ideal: &Substructure) -> Result<FiniteModule> {
    if ideal.kind() != Kind::LeftIdeal && ideal.kind() != Kind::TwoSidedIdeal {
        return Err(Error::KindMismatch {
            expected: Kind::LeftIdeal.to_string(),
            found: ideal.kind().to_string(),
        });
    }
    if ideal.parent() != ring.id() {
        return Err(Error::ParentMismatch);
    }
    let regular = module_regular(ring)?;
    let as_submodule = ideal.reparent(regular.id(), Kind::Submodule);
    let (q, _) = quotient_module(&regular, &as_submodule)?;
    let members: Vec<String> = ideal.elements().iter().map(usize::to_string).collect();
    let label = format!("{}/L{{{}}}", ring.label(), members.join(","));
    Ok(q.retagged(&label, [Tag::Cyclic]))
}

/// The left ideal `Re` for an idempotent `e`, a direct summand of the regular module.
pub fn module_summand(ring: &FiniteRing, idempotent: usize) -> Result<FiniteModule> {
    if idempotent >= ring.size() || ring.mul(idempotent, idempotent) != idempotent {
        return Err(Error::InvalidParameter(format!(
            "element {idempotent} of `{}` is not idempotent",
            ring.label()
        )));
    }
    let regular = module_regular(ring)?;
    let re = generated_substructure(&regular, Kind::Submodule, &[idempotent])?;
    let (sub, _) = submodule_as_module(&regular, &re)?;
    let label = format!("{}e{}", ring.label(), ring.name(idempotent));
    Ok(sub.retagged(&label, [Tag::Summand, Tag::Projective]))
}

/// Generic constructor from raw tables.
pub fn module_abelian_with_action(ring: &FiniteRing, tables: &ModuleTables, label: &str) -> Result<FiniteModule> {
    crate::module::module_from_action(ring, tables, label)
}

/// The ring `M2(Z2)` that the 4-element example module lives over.
pub fn ring_m2_z2() -> Result<FiniteRing> {
    ring_matrix(2, &ring_zn(2)?)
}

/// The constant-row matrices over `Z2`, `{[[x,x],[y,y]]}`, under left matrix multiplication
/// by `M2(Z2)`. Elements are indexed `2x + y` in the order
/// `0, [[0,0],[1,1]], [[1,1],[0,0]], [[1,1],[1,1]]`.
///
/// The integer matrix ring acts on this module through reduction mod 2, so the
/// submodule lattice, ideal action and every primality verdict are those of the
/// `M2(Z2)` action used here.
pub fn module_example_exx() -> Result<FiniteModule> {
    let ring = ring_m2_z2()?;
    let entry = |r: usize, i: usize, j: usize| (r >> (3 - (2 * i + j))) & 1;
    let idx = |x: usize, y: usize| 2 * x + y;
    let mut action = vec![vec![0; 4]; ring.size()];
    for (r, row) in action.iter_mut().enumerate() {
        for (m, out) in row.iter_mut().enumerate() {
            let (x, y) = (m >> 1, m & 1);
            let top = (entry(r, 0, 0) * x + entry(r, 0, 1) * y) % 2;
            let bottom = (entry(r, 1, 0) * x + entry(r, 1, 1) * y) % 2;
            *out = idx(top, bottom);
        }
    }
    let tables = ModuleTables {
        add: (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect(),
        action,
        names: Some(
            (0..4)
                .map(|m| {
                    let (x, y) = (m >> 1, m & 1);
                    format!("[[{x},{x}],[{y},{y}]]")
                })
                .collect(),
        ),
    };
    let m = crate::module::module_from_action(&ring, &tables, "exx")?;
    Ok(m.retagged("exx", [Tag::ExampleExx]))
}

/// Module constructors a catalog applies to each ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleFamily {
    /// The 4-element simple module; only applies to `M2(Z2)`.
    ExampleExx,
    Regular,
    Free,
    /// `R / I` for every left ideal `I`.
    Cyclic,
    /// `Re` for every idempotent `e ≠ 0, 1` (distinct left ideals only).
    Summand,
}

impl ModuleFamily {
    pub const ALL: [ModuleFamily; 5] = [
        ModuleFamily::ExampleExx,
        ModuleFamily::Regular,
        ModuleFamily::Free,
        ModuleFamily::Cyclic,
        ModuleFamily::Summand,
    ];
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub ring: FiniteRing,
    pub modules: Vec<FiniteModule>,
}

/// Rings with the modules built over them, in a fixed order: rings as listed,
/// modules by ascending size, ties broken by constructor order.
#[derive(Debug, Clone, Default)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    /// `Z2, Z3, Z4, Z6, Z8, Z2xZ2, U2(Z2), M2(Z2)` with regular, rank-2 free,
    /// cyclic and summand modules, plus the example module over `M2(Z2)`.
    pub fn default_catalog() -> Result<Catalog> {
        Catalog::build(&default_rings()?, &ModuleFamily::ALL, 2)
    }

    pub fn from_spec(spec: &GeneratorSpec) -> Result<Catalog> {
        let rings = spec.expand_rings()?;
        Catalog::build(&rings, &spec.module_families(), spec.free_rank)
    }

    pub fn build(rings: &[FiniteRing], families: &[ModuleFamily], free_rank: usize) -> Result<Catalog> {
        let exx = module_example_exx()?;
        let mut entries = Vec::with_capacity(rings.len());
        for ring in rings {
            let mut modules = Vec::new();
            if !ring.is_zero_ring() {
                for family in families {
                    modules.extend(build_family(ring, *family, free_rank, &exx)?);
                }
            }
            modules.sort_by_key(FiniteModule::size);
            entries.push(CatalogEntry {
                ring: ring.clone(),
                modules,
            });
        }
        Ok(Catalog { entries })
    }

    pub fn rings(&self) -> impl Iterator<Item = &FiniteRing> {
        self.entries.iter().map(|e| &e.ring)
    }

    /// Every `(ring, module)` pair in catalog order.
    pub fn modules(&self) -> impl Iterator<Item = (&FiniteRing, &FiniteModule)> {
        self.entries
            .iter()
            .flat_map(|e| e.modules.iter().map(move |m| (&e.ring, m)))
    }

    pub fn module_count(&self) -> usize {
        self.entries.iter().map(|e| e.modules.len()).sum()
    }
}

pub fn default_rings() -> Result<Vec<FiniteRing>> {
    let z2 = ring_zn(2)?;
    Ok(vec![
        z2.clone(),
        ring_zn(3)?,
        ring_zn(4)?,
        ring_zn(6)?,
        ring_zn(8)?,
        ring_product(&[z2.clone(), z2.clone()])?,
        ring_upper_triangular(2, &z2)?,
        ring_matrix(2, &z2)?,
    ])
}

fn build_family(ring: &FiniteRing, family: ModuleFamily, free_rank: usize, exx: &FiniteModule) -> Result<Vec<FiniteModule>> {
    Ok(match family {
        ModuleFamily::ExampleExx => {
            if ring.same_as(exx.ring()) {
                vec![exx.clone()]
            } else {
                vec![]
            }
        }
        ModuleFamily::Regular => vec![module_regular(ring)?],
        ModuleFamily::Free => vec![module_free(ring, free_rank)?],
        ModuleFamily::Cyclic => all_substructures(ring, Kind::LeftIdeal)?
            .iter()
            .map(|ideal| module_cyclic(ring, ideal))
            .collect::<Result<_>>()?,
        ModuleFamily::Summand => {
            let mut seen: Vec<Substructure> = Vec::new();
            let mut out = Vec::new();
            for e in ring.elements() {
                if e == ring.zero() || e == ring.one() || ring.mul(e, e) != e {
                    continue;
                }
                let left = generated_substructure(ring, Kind::LeftIdeal, &[e])?;
                if seen.contains(&left) {
                    continue;
                }
                seen.push(left);
                out.push(module_summand(ring, e)?);
            }
            out
        }
    })
}
