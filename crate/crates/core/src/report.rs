//! JSON documents and text renderings emitted by the command-line front end.
//!
//! Every document carries `"schema": 1` and a `header` holding the only
//! run-dependent data (the timestamp); everything else is deterministic.

use std::fmt::Write as _;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;

use crate::catalog::Catalog;
use crate::config::{ModuleConfig, RingConfig, SCHEMA_VERSION};
use crate::radicals::{
    ModuleAnalysis, RadicalReport, RingProperties, RingTwoPrimality, SetReport, Verdict, CLASS_FLAGS,
};
use crate::error::Result;
use crate::search::{SearchOutcome, SearchStats, SearchStatus};
use crate::suites::SuiteReport;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Header {
    pub tool: String,
    pub version: String,
    pub generated_unix: u64,
}

impl Header {
    pub fn now() -> Self {
        Header {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            generated_unix: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map_or(0, |d| d.as_secs()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Document<T> {
    pub schema: u32,
    pub header: Header,
    #[serde(flatten)]
    pub body: T,
}

impl<T: Serialize> Document<T> {
    pub fn new(body: T) -> Self {
        Document {
            schema: SCHEMA_VERSION,
            header: Header::now(),
            body,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report types serialize");
        s.push('\n');
        s
    }
}

/// The document with its header removed, for run-to-run comparisons.
pub fn without_header(json: &str) -> serde_json::Result<serde_json::Value> {
    let mut v: serde_json::Value = serde_json::from_str(json)?;
    if let Some(obj) = v.as_object_mut() {
        obj.remove("header");
    }
    Ok(v)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisBody {
    pub kind: &'static str,
    pub report: RadicalReport,
    pub ring_two_primality: RingTwoPrimality,
    pub ring_properties: RingProperties,
}

impl AnalysisBody {
    pub fn new(a: &ModuleAnalysis) -> Result<Self> {
        Ok(AnalysisBody {
            kind: "analysis",
            report: a.report()?,
            ring_two_primality: a.ring_analysis().two_primal()?,
            ring_properties: a.ring_analysis().properties()?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogSummary {
    pub rings: Vec<String>,
    pub modules: usize,
}

impl CatalogSummary {
    pub fn of(catalog: &Catalog) -> Self {
        CatalogSummary {
            rings: catalog.rings().map(|r| r.label().to_string()).collect(),
            modules: catalog.module_count(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationBody {
    pub kind: &'static str,
    pub catalog: CatalogSummary,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

impl VerificationBody {
    pub fn new(catalog: &Catalog, suites: Vec<SuiteReport>) -> Self {
        VerificationBody {
            kind: "verification",
            catalog: CatalogSummary::of(catalog),
            passed: suites.iter().all(|s| s.passed),
            suites,
        }
    }
}

/// A search result. On a hit the top-level `ring` and `module` objects are a
/// structure config, so the document can be passed straight to `analyze`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchBody {
    pub kind: &'static str,
    pub predicate: String,
    pub status: SearchStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub candidate_index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ring: Option<RingConfig>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleConfig>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<RadicalReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ring_properties: Option<RingProperties>,
    pub stats: SearchStats,
}

impl From<SearchOutcome> for SearchBody {
    fn from(o: SearchOutcome) -> Self {
        let (index, ring, module, report, props) = match o.hit {
            Some(h) => (
                Some(h.candidate_index),
                Some(h.structure.ring),
                h.structure.module,
                Some(h.report),
                Some(h.ring_properties),
            ),
            None => (None, None, None, None, None),
        };
        SearchBody {
            kind: "search",
            predicate: o.predicate,
            status: o.status,
            candidate_index: index,
            ring,
            module,
            report,
            ring_properties: props,
            stats: o.stats,
        }
    }
}

fn status(holds: bool) -> &'static str {
    if holds {
        "PASS"
    } else {
        "FAIL"
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn set_text(s: &SetReport) -> String {
    format!("{{{}}}", s.names.join(", "))
}

fn verdict_line(out: &mut String, label: &str, v: &Verdict) {
    let _ = write!(out, "{} {label}", status(v.holds));
    if let Some(w) = v.witness() {
        let _ = write!(out, "  [{}]", w.summary());
    }
    out.push('\n');
}

pub fn render_analysis(b: &AnalysisBody) -> String {
    let r = &b.report;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "module {} over {}: {} elements, ring of {} elements, {} submodules",
        r.module, r.ring, r.module_size, r.ring_size, r.submodule_count
    );
    if !r.tags.is_empty() {
        let _ = writeln!(out, "tags: {}", r.tags.join(", "));
    }
    for (name, s) in [
        ("E_M(0)", &r.envelope_zero),
        ("N_s(M)", &r.strongly_nilpotent),
        ("beta(M)", &r.beta),
        ("beta_co(M)", &r.beta_co),
    ] {
        let _ = writeln!(out, "{name:<11} {}", set_text(s));
    }
    for flag in CLASS_FLAGS {
        if let Some(v) = r.class_flags.get(flag) {
            verdict_line(&mut out, flag, v);
        }
    }
    let t = &b.ring_two_primality;
    let _ = writeln!(
        out,
        "ring {}: 2-primal {} (N = beta {}, beta_co = beta {}, beta = E_R(0) {})",
        r.ring,
        yes(t.verdict.holds),
        yes(t.nil_eq_beta),
        yes(t.beta_co_eq_beta),
        yes(t.beta_eq_envelope)
    );
    let p = &b.ring_properties;
    verdict_line(&mut out, "ring Dedekind finite", &p.dedekind_finite);
    verdict_line(&mut out, "ring nil left ideal sums are nil", &p.kothe_finite_scale);
    verdict_line(&mut out, "ring prime ideals completely prime", &p.primes_completely_prime);
    verdict_line(&mut out, "ring semisimple", &p.is_semisimple);
    for note in &r.notes {
        let _ = writeln!(out, "note: {note}");
    }
    out
}

pub fn render_suite(s: &SuiteReport) -> String {
    let mut out = String::new();
    for o in &s.outcomes {
        let _ = write!(out, "{} {} | {} | {}", status(o.verdict.holds), s.suite, o.instance, o.check);
        if let Some(w) = o.verdict.witness() {
            let _ = write!(out, "  [{}]", w.summary());
        }
        out.push('\n');
    }
    let _ = writeln!(
        out,
        "{} {}: {} checks, {} failures",
        status(s.passed),
        s.suite,
        s.checks,
        s.failures
    );
    out
}

pub fn render_search(b: &SearchBody) -> String {
    let mut out = String::new();
    let st = &b.stats;
    let budget = st.budget.map_or("unlimited".to_string(), |n| n.to_string());
    match b.status {
        SearchStatus::Found => {
            let r = b.report.as_ref().expect("hits carry a report");
            let _ = writeln!(
                out,
                "found: module {} over {} (candidate {}) satisfies `{}`",
                r.module,
                r.ring,
                b.candidate_index.unwrap_or_default(),
                b.predicate
            );
        }
        SearchStatus::NotFound => {
            let _ = writeln!(out, "no candidate satisfies `{}`", b.predicate);
        }
        SearchStatus::BudgetExhausted => {
            let _ = writeln!(out, "budget exhausted before a candidate satisfied `{}`", b.predicate);
        }
    }
    let _ = writeln!(
        out,
        "examined {} of {} candidates over {} rings (budget {budget})",
        st.examined, st.candidates, st.rings
    );
    if let Some(r) = &b.report {
        for flag in CLASS_FLAGS {
            if let Some(v) = r.class_flags.get(flag) {
                verdict_line(&mut out, flag, v);
            }
        }
    }
    out
}
