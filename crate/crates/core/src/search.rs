//! Counterexample search: the first catalog module satisfying a boolean
//! combination of class flags.
//!
//! Candidates are enumerated ring by ring in generator order, modules within a
//! ring by family then size. Candidates are evaluated in parallel batches; the
//! lowest enumeration index among the hits wins, so results do not depend on
//! the thread count.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::Catalog;
use crate::config::{GeneratorSpec, StructureConfig};
use crate::error::{Error, Result};
use crate::module::FiniteModule;
use crate::radicals::{ModuleAnalysis, RadicalReport, RingAnalysis, RingProperties, CLASS_FLAGS};

/// Flags that look at the base ring rather than the module.
pub const RING_FLAGS: [&str; 2] = ["ring_two_primal", "ring_commutative"];

/// Structural flags of the candidate itself.
pub const STRUCTURE_FLAGS: [&str; 1] = ["projective"];

pub fn known_flags() -> impl Iterator<Item = &'static str> {
    CLASS_FLAGS.iter().chain(&RING_FLAGS).chain(&STRUCTURE_FLAGS).copied()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Predicate {
    Flag(String),
    Not(Box<Predicate>),
    And(Box<Predicate>, Box<Predicate>),
    Or(Box<Predicate>, Box<Predicate>),
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicate::Flag(name) => f.write_str(name),
            Predicate::Not(p) => match **p {
                Predicate::Flag(_) | Predicate::Not(_) => write!(f, "not {p}"),
                _ => write!(f, "not ({p})"),
            },
            Predicate::And(a, b) => {
                let side = |p: &Predicate| match p {
                    Predicate::Or(..) => format!("({p})"),
                    _ => p.to_string(),
                };
                write!(f, "{} and {}", side(a), side(b))
            }
            Predicate::Or(a, b) => write!(f, "{a} or {b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Not,
    And,
    Or,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '(' | ')' | '!' | '~' | '¬' | '∧' | '∨' => {
                chars.next();
                out.push(match c {
                    '(' => Token::Open,
                    ')' => Token::Close,
                    '∧' => Token::And,
                    '∨' => Token::Or,
                    _ => Token::Not,
                });
            }
            '&' | '|' => {
                chars.next();
                if chars.peek().map(|&(_, d)| d) == Some(c) {
                    chars.next();
                }
                out.push(if c == '&' { Token::And } else { Token::Or });
            }
            c if c.is_ascii_alphanumeric() || c == '_' || c == '-' => {
                let mut word = String::new();
                while let Some(&(_, d)) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' || d == '-' {
                        word.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(match word.to_ascii_lowercase().as_str() {
                    "not" => Token::Not,
                    "and" => Token::And,
                    "or" => Token::Or,
                    _ => Token::Ident(word.to_ascii_lowercase().replace('-', "_")),
                });
            }
            _ => return Err(Error::Predicate(format!("unexpected character `{c}` at offset {i}"))),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Predicate> {
        let mut lhs = self.term()?;
        while self.peek() == Some(&Token::Or) {
            self.pos += 1;
            lhs = Predicate::Or(Box::new(lhs), Box::new(self.term()?));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Predicate> {
        let mut lhs = self.factor()?;
        while self.peek() == Some(&Token::And) {
            self.pos += 1;
            lhs = Predicate::And(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Predicate> {
        match self.next() {
            Some(Token::Not) => Ok(Predicate::Not(Box::new(self.factor()?))),
            Some(Token::Open) => {
                let p = self.expr()?;
                match self.next() {
                    Some(Token::Close) => Ok(p),
                    _ => Err(Error::Predicate("missing `)`".into())),
                }
            }
            Some(Token::Ident(name)) => {
                if known_flags().any(|f| f == name) {
                    Ok(Predicate::Flag(name))
                } else {
                    let known: Vec<&str> = known_flags().collect();
                    Err(Error::Predicate(format!("unknown flag `{name}`; known flags: {}", known.join(", "))))
                }
            }
            Some(t) => Err(Error::Predicate(format!("unexpected {t:?}"))),
            None => Err(Error::Predicate("unexpected end of predicate".into())),
        }
    }
}

impl Predicate {
    /// Parses `not`/`!`/`¬`, `and`/`&`/`∧`, `or`/`|`/`∨` and parentheses over flag names.
    /// `and` binds tighter than `or`.
    pub fn parse(text: &str) -> Result<Predicate> {
        let mut p = Parser {
            tokens: tokenize(text)?,
            pos: 0,
        };
        let pred = p.expr()?;
        if let Some(t) = p.peek() {
            return Err(Error::Predicate(format!("trailing {t:?}")));
        }
        Ok(pred)
    }

    pub fn eval(&self, flag: &mut impl FnMut(&str) -> Result<bool>) -> Result<bool> {
        Ok(match self {
            Predicate::Flag(name) => flag(name)?,
            Predicate::Not(p) => !p.eval(flag)?,
            Predicate::And(a, b) => a.eval(flag)? && b.eval(flag)?,
            Predicate::Or(a, b) => a.eval(flag)? || b.eval(flag)?,
        })
    }
}

/// Evaluates flags of one candidate, computing each at most once.
pub struct FlagEvaluator<'a> {
    analysis: &'a ModuleAnalysis,
    cache: HashMap<String, bool>,
}

impl<'a> FlagEvaluator<'a> {
    pub fn new(analysis: &'a ModuleAnalysis) -> Self {
        FlagEvaluator {
            analysis,
            cache: HashMap::new(),
        }
    }

    pub fn flag(&mut self, name: &str) -> Result<bool> {
        if let Some(&v) = self.cache.get(name) {
            return Ok(v);
        }
        let v = module_flag(self.analysis, name)?;
        self.cache.insert(name.to_string(), v);
        Ok(v)
    }

    pub fn eval(&mut self, p: &Predicate) -> Result<bool> {
        p.eval(&mut |name| self.flag(name))
    }
}

/// One flag of a module. Prime-type flags describe the zero submodule and are
/// false on the zero module, whose zero submodule is not proper.
pub fn module_flag(a: &ModuleAnalysis, name: &str) -> Result<bool> {
    let zero_pred = |v: Result<crate::radicals::Verdict>| match v {
        Ok(v) => Ok(v.holds),
        Err(Error::NotProper) => Ok(false),
        Err(e) => Err(e),
    };
    match name {
        "prime" => zero_pred(a.is_prime(a.zero())),
        "completely_prime" => zero_pred(a.is_completely_prime(a.zero())),
        "semiprime" => zero_pred(a.is_semiprime(a.zero())),
        "completely_semiprime" => zero_pred(a.is_completely_semiprime(a.zero())),
        "ifp" => Ok(a.ifp().holds),
        "symmetric" => Ok(a.symmetric().holds),
        "semi_symmetric" => Ok(a.semi_symmetric().holds),
        "lee_zhou_reduced" => Ok(a.lee_zhou_reduced().holds),
        "two_primal" => Ok(a.two_primal().holds),
        "satisfies_rf" => Ok(a.satisfies_rf()?.holds),
        "satisfies_crf" => Ok(a.satisfies_crf()?.holds),
        "ring_two_primal" => Ok(a.ring_analysis().two_primal()?.verdict.holds),
        "ring_commutative" => Ok(a.module().ring().is_commutative()),
        "projective" => Ok(a.module().is_projective()),
        other => Err(Error::Predicate(format!("unknown flag `{other}`"))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    Found,
    /// Every candidate was examined without a hit.
    NotFound,
    /// The budget ran out before the candidates did.
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub rings: usize,
    pub candidates: usize,
    /// Candidates up to and including the hit, or all that the budget allowed.
    pub examined: usize,
    pub budget: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchHit {
    pub candidate_index: usize,
    pub structure: StructureConfig,
    pub report: RadicalReport,
    pub ring_properties: RingProperties,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchOutcome {
    pub predicate: String,
    pub status: SearchStatus,
    pub hit: Option<SearchHit>,
    pub stats: SearchStats,
}

pub fn search_counterexample(predicate: &Predicate, spec: &GeneratorSpec, budget: Option<usize>) -> Result<SearchOutcome> {
    search_catalog(predicate, &Catalog::from_spec(spec)?, budget)
}

pub fn search_catalog(predicate: &Predicate, catalog: &Catalog, budget: Option<usize>) -> Result<SearchOutcome> {
    let rings: Vec<Arc<RingAnalysis>> = catalog
        .entries
        .par_iter()
        .map(|e| RingAnalysis::new(&e.ring).map(Arc::new))
        .collect::<Result<_>>()?;
    let candidates: Vec<(usize, &FiniteModule)> = catalog
        .entries
        .iter()
        .enumerate()
        .flat_map(|(i, e)| e.modules.iter().map(move |m| (i, m)))
        .collect();
    let limit = budget.map_or(candidates.len(), |b| b.min(candidates.len()));
    let batch = 2 * rayon::current_num_threads().max(1);
    let mut hit = None;
    let mut start = 0;
    while start < limit && hit.is_none() {
        let end = (start + batch).min(limit);
        let results: Vec<Option<(ModuleAnalysis, usize)>> = candidates[start..end]
            .par_iter()
            .enumerate()
            .map(|(k, &(ring, m))| {
                let a = ModuleAnalysis::with_ring(m, rings[ring].clone())?;
                let found = FlagEvaluator::new(&a).eval(predicate)?;
                Ok(found.then_some((a, start + k)))
            })
            .collect::<Result<_>>()?;
        hit = results.into_iter().flatten().next();
        start = end;
    }
    let stats = |examined| SearchStats {
        rings: catalog.entries.len(),
        candidates: candidates.len(),
        examined,
        budget,
    };
    let predicate_text = predicate.to_string();
    Ok(match hit {
        Some((a, index)) => SearchOutcome {
            predicate: predicate_text,
            status: SearchStatus::Found,
            hit: Some(SearchHit {
                candidate_index: index,
                structure: StructureConfig::from_module(a.module()),
                report: a.report()?,
                ring_properties: a.ring_analysis().properties()?,
            }),
            stats: stats(index + 1),
        },
        None => SearchOutcome {
            predicate: predicate_text,
            status: if limit < candidates.len() {
                SearchStatus::BudgetExhausted
            } else {
                SearchStatus::NotFound
            },
            hit: None,
            stats: stats(limit),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_connectives_and_precedence() {
        let p = Predicate::parse("prime ∧ ¬completely_prime").unwrap();
        assert_eq!(p.to_string(), "prime and not completely_prime");
        let q = Predicate::parse("!a_b").unwrap_err();
        assert!(matches!(q, Error::Predicate(_)));
        let r = Predicate::parse("ifp | symmetric & not (two_primal or prime)").unwrap();
        assert_eq!(r.to_string(), "ifp or symmetric and not (two_primal or prime)");
        assert_eq!(Predicate::parse(&r.to_string()).unwrap(), r);
        assert!(Predicate::parse("prime &&").is_err());
        assert!(Predicate::parse("(prime").is_err());
        assert!(Predicate::parse("prime prime").is_err());
    }

    #[test]
    fn evaluation_is_boolean_algebra() {
        let p = Predicate::parse("not (ifp and prime) or symmetric").unwrap();
        let flags = |v: [bool; 3]| {
            p.eval(&mut |n| {
                Ok(match n {
                    "ifp" => v[0],
                    "prime" => v[1],
                    _ => v[2],
                })
            })
            .unwrap()
        };
        assert!(flags([false, true, false]));
        assert!(!flags([true, true, false]));
        assert!(flags([true, true, true]));
    }
}
