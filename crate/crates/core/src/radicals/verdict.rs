use serde::{Deserialize, Serialize};

use crate::substructure::{Kind, Substructure};

/// One labelled piece of a counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessEntry {
    pub role: String,
    #[serde(flatten)]
    pub value: WitnessValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum WitnessValue {
    RingElement { index: usize, name: String },
    ModuleElement { index: usize, name: String },
    Set { kind: Kind, members: Vec<usize> },
    Note { text: String },
}

/// Counterexample data. Entries are listed in the order the definition names them.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Witness(pub Vec<WitnessEntry>);

impl Witness {
    pub fn new() -> Self {
        Witness(Vec::new())
    }

    pub fn ring(mut self, role: &str, index: usize, name: &str) -> Self {
        self.0.push(WitnessEntry {
            role: role.into(),
            value: WitnessValue::RingElement {
                index,
                name: name.into(),
            },
        });
        self
    }

    pub fn elem(mut self, role: &str, index: usize, name: &str) -> Self {
        self.0.push(WitnessEntry {
            role: role.into(),
            value: WitnessValue::ModuleElement {
                index,
                name: name.into(),
            },
        });
        self
    }

    pub fn set(mut self, role: &str, s: &Substructure) -> Self {
        self.0.push(WitnessEntry {
            role: role.into(),
            value: WitnessValue::Set {
                kind: s.kind(),
                members: s.elements(),
            },
        });
        self
    }

    pub fn note(mut self, role: &str, text: impl Into<String>) -> Self {
        self.0.push(WitnessEntry {
            role: role.into(),
            value: WitnessValue::Note { text: text.into() },
        });
        self
    }

    /// Index of the ring or module element recorded under `role`.
    pub fn index(&self, role: &str) -> Option<usize> {
        self.0.iter().find(|e| e.role == role).and_then(|e| match e.value {
            WitnessValue::RingElement { index, .. } | WitnessValue::ModuleElement { index, .. } => Some(index),
            _ => None,
        })
    }

    /// Members of the set recorded under `role`.
    pub fn members(&self, role: &str) -> Option<&[usize]> {
        self.0.iter().find(|e| e.role == role).and_then(|e| match &e.value {
            WitnessValue::Set { members, .. } => Some(members.as_slice()),
            _ => None,
        })
    }

    pub fn text(&self, role: &str) -> Option<&str> {
        self.0.iter().find(|e| e.role == role).and_then(|e| match &e.value {
            WitnessValue::Note { text } => Some(text.as_str()),
            _ => None,
        })
    }

    /// One-line rendering for text reports.
    pub fn summary(&self) -> String {
        self.0
            .iter()
            .map(|e| match &e.value {
                WitnessValue::RingElement { name, .. } | WitnessValue::ModuleElement { name, .. } => {
                    format!("{}={}", e.role, name)
                }
                WitnessValue::Set { members, .. } => {
                    let m: Vec<String> = members.iter().map(usize::to_string).collect();
                    format!("{}={{{}}}", e.role, m.join(","))
                }
                WitnessValue::Note { text } => format!("{}: {}", e.role, text),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Outcome of a quantified check. A failing verdict always carries a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub checked_universe: String,
}

impl Verdict {
    pub fn pass(universe: impl Into<String>) -> Self {
        Verdict {
            holds: true,
            witness: None,
            checked_universe: universe.into(),
        }
    }

    pub fn fail(universe: impl Into<String>, witness: Witness) -> Self {
        Verdict {
            holds: false,
            witness: Some(witness),
            checked_universe: universe.into(),
        }
    }

    /// `Ok(())` becomes a pass, `Err(w)` a failure with witness `w`.
    pub fn from_scan(universe: impl Into<String>, scan: std::result::Result<(), Witness>) -> Self {
        match scan {
            Ok(()) => Verdict::pass(universe),
            Err(w) => Verdict::fail(universe, w),
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witness.as_ref()
    }
}
