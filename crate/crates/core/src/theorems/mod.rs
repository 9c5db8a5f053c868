//! One verifier per numbered statement. Each verifier evaluates every side of
//! the claim through its own code path and records the sides as named
//! booleans; `holds` is then computed from those booleans alone.

mod corollaries;
mod lemmas;
mod structure;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use dashmap::DashMap;
use serde::Serialize;

use crate::classes;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::primes::PrimeSet;
use crate::workspace::{Limits, Workspace};

pub use corollaries::{
    baer_suzuki_set, cor_1_11_set, cor_1_13_sets, verify_baer_suzuki, verify_cor_1_11,
    verify_cor_1_13, verify_cor_1_8, verify_cor_1_9,
};
pub use lemmas::{verify_lemma_2_1, verify_lemma_2_3, verify_lemma_2_8};
pub use structure::{
    thm_1_3_set, verify_prop_2_2, verify_thm_1_1, verify_thm_1_2, verify_thm_1_3,
    verify_thm_1_6_1, verify_thm_1_6_2, verify_thm_1_6_3, verify_thm_1_6_4,
};

/// Theorem identifiers accepted by the suite, in report order.
pub const THEOREM_IDS: [&str; 16] = [
    "thm1.1",
    "thm1.2",
    "thm1.3",
    "thm1.6.1",
    "thm1.6.2",
    "thm1.6.3",
    "thm1.6.4",
    "prop2.2",
    "cor1.8",
    "cor1.9",
    "cor1.11",
    "cor1.13",
    "lem2.1",
    "lem2.3",
    "lem2.8",
    "baer-suzuki",
];

/// Deliberate defects used by negative-control tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fault {
    /// `F_k(G)` is computed as `F_{k-1}(G)`.
    FittingOffByOne,
}

impl std::str::FromStr for Fault {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fitting-off-by-one" => Ok(Fault::FittingOffByOne),
            _ => Err(Error::Unsupported(format!("unknown fault `{s}`"))),
        }
    }
}

/// A group or subgroup together with its catalog name.
#[derive(Clone, Copy)]
pub struct Named<'a> {
    pub name: &'a str,
    pub group: &'a PermGroup,
}

impl<'a> Named<'a> {
    pub fn new(name: &'a str, group: &'a PermGroup) -> Self {
        Named { name, group }
    }
}

/// Shared state for a verification run: limits, an optional injected fault
/// and one workspace per ambient group.
pub struct VerifyCtx {
    limits: Limits,
    fault: Option<Fault>,
    workspaces: DashMap<Vec<Permutation>, Arc<Workspace>>,
}

impl Default for VerifyCtx {
    fn default() -> Self {
        VerifyCtx::new(Limits::default(), None)
    }
}

impl VerifyCtx {
    pub fn new(limits: Limits, fault: Option<Fault>) -> Self {
        VerifyCtx {
            limits,
            fault,
            workspaces: DashMap::new(),
        }
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn fault(&self) -> Option<Fault> {
        self.fault
    }

    pub fn workspace(&self, g: &PermGroup) -> Result<Arc<Workspace>> {
        let key = g.generators().to_vec();
        if let Some(ws) = self.workspaces.get(&key) {
            return Ok(ws.clone());
        }
        let ws = Arc::new(Workspace::new(g, self.limits)?);
        Ok(self.workspaces.entry(key).or_insert(ws).clone())
    }

    /// `F_k(G)`, subject to the injected fault.
    pub fn fitting_term(&self, g: &PermGroup, k: usize) -> Result<PermGroup> {
        match self.fault {
            Some(Fault::FittingOffByOne) => classes::fitting_term(g, k.saturating_sub(1)),
            None => classes::fitting_term(g, k),
        }
    }
}

/// What a verdict was computed on.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Instance {
    pub group: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pi: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
}

impl Instance {
    pub fn group(g: &str) -> Self {
        Instance {
            group: g.to_string(),
            ..Instance::default()
        }
    }

    pub fn pair(g: &str, a: &str, b: &str) -> Self {
        Instance {
            a: Some(a.to_string()),
            b: Some(b.to_string()),
            ..Instance::group(g)
        }
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k as u32);
        self
    }

    pub fn with_pi(mut self, pi: &PrimeSet) -> Self {
        self.pi = Some(pi.to_list());
        self
    }

    pub fn with_rho(mut self, rho: &PrimeSet) -> Self {
        self.rho = Some(rho.to_list());
        self
    }

    pub fn with_class(mut self, class: &str) -> Self {
        self.class = Some(class.to_string());
        self
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.group)?;
        if let (Some(a), Some(b)) = (&self.a, &self.b) {
            write!(f, " = {a}·{b}")?;
        }
        if let Some(k) = self.k {
            write!(f, " k={k}")?;
        }
        if let Some(p) = &self.pi {
            write!(f, " pi={p}")?;
        }
        if let Some(r) = &self.rho {
            write!(f, " rho={r}")?;
        }
        if let Some(c) = &self.class {
            write!(f, " class={c}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SkipKind {
    /// The statement's hypothesis is not met by the instance.
    Hypothesis,
    /// A size cap or pair budget was exceeded.
    Caps,
    /// The computation is not supported for this instance.
    Unsupported,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Skip {
    pub kind: SkipKind,
    pub reason: String,
}

/// One clause of a theorem's logical shape.
#[derive(Debug, Clone)]
pub enum Clause {
    /// All named statements take the same value.
    Equal(Vec<&'static str>),
    /// The first statement implies the second.
    Implies(&'static str, &'static str),
    True(&'static str),
}

impl Clause {
    fn check(&self, s: &BTreeMap<String, bool>) -> bool {
        let get = |n: &str| *s.get(n).unwrap_or_else(|| panic!("statement `{n}` not recorded"));
        match self {
            Clause::Equal(names) => names.windows(2).all(|w| get(w[0]) == get(w[1])),
            Clause::Implies(p, q) => !get(p) || get(q),
            Clause::True(n) => get(n),
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Clause::Equal(n) => write!(f, "{}", n.join(" <=> ")),
            Clause::Implies(p, q) => write!(f, "{p} => {q}"),
            Clause::True(n) => write!(f, "{n}"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub theorem_id: String,
    pub instance: Instance,
    pub statements: BTreeMap<String, bool>,
    pub holds: bool,
    pub witness: Option<BTreeMap<String, String>>,
    pub skipped: Option<Skip>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub observations: Vec<String>,
    pub elapsed_ms: Option<u64>,
}

impl Verdict {
    pub fn is_skipped(&self) -> bool {
        self.skipped.is_some()
    }

    pub fn is_failure(&self) -> bool {
        !self.holds
    }

    /// A failing verdict for an error that is not a resource limit.
    fn error(theorem: &str, instance: Instance, e: &Error) -> Self {
        let mut w = BTreeMap::new();
        w.insert("instance".to_string(), instance.to_string());
        w.insert("error".to_string(), e.to_string());
        Verdict {
            theorem_id: theorem.to_string(),
            instance,
            statements: BTreeMap::new(),
            holds: false,
            witness: Some(w),
            skipped: None,
            observations: Vec::new(),
            elapsed_ms: None,
        }
    }

    fn skipped(theorem: &str, instance: Instance, kind: SkipKind, reason: String) -> Self {
        Verdict {
            theorem_id: theorem.to_string(),
            instance,
            statements: BTreeMap::new(),
            holds: true,
            witness: None,
            skipped: Some(Skip { kind, reason }),
            observations: Vec::new(),
            elapsed_ms: None,
        }
    }
}

/// Control flow inside a verifier: either a finished verdict or an early
/// skip.
pub(crate) enum Outcome {
    Done(Builder),
    Skip(SkipKind, String),
}

pub(crate) fn hypothesis(reason: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome::Skip(SkipKind::Hypothesis, reason.into()))
}

/// Collects statements, clauses and witness details for one verdict.
#[derive(Default)]
pub(crate) struct Builder {
    statements: BTreeMap<String, bool>,
    clauses: Vec<Clause>,
    details: BTreeMap<String, String>,
    observations: Vec<String>,
}

impl Builder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn stmt(&mut self, name: &'static str, value: bool) -> &mut Self {
        self.statements.insert(name.to_string(), value);
        self
    }

    pub fn clause(&mut self, c: Clause) -> &mut Self {
        self.clauses.push(c);
        self
    }

    /// Witness detail, reported only if the verdict fails.
    pub fn detail(&mut self, key: impl Into<String>, value: impl Into<String>) -> &mut Self {
        self.details.insert(key.into(), value.into());
        self
    }

    pub fn observe(&mut self, note: impl Into<String>) -> &mut Self {
        self.observations.push(note.into());
        self
    }

    pub fn done(self) -> Result<Outcome> {
        Ok(Outcome::Done(self))
    }
}

/// Run a verifier body and turn its outcome or error into a verdict.
pub(crate) fn run(theorem: &str, instance: Instance, body: impl FnOnce() -> Result<Outcome>) -> Verdict {
    let start = Instant::now();
    let mut v = match body() {
        Ok(Outcome::Done(b)) => {
            let holds = b.clauses.iter().all(|c| c.check(&b.statements));
            let witness = (!holds).then(|| {
                let mut w = b.details;
                w.insert("instance".to_string(), instance.to_string());
                let failed: Vec<String> = b
                    .clauses
                    .iter()
                    .filter(|c| !c.check(&b.statements))
                    .map(|c| c.to_string())
                    .collect();
                w.insert("failed".to_string(), failed.join("; "));
                w
            });
            Verdict {
                theorem_id: theorem.to_string(),
                instance,
                statements: b.statements,
                holds,
                witness,
                skipped: None,
                observations: b.observations,
                elapsed_ms: None,
            }
        }
        Ok(Outcome::Skip(kind, reason)) => Verdict::skipped(theorem, instance, kind, reason),
        Err(e @ Error::GroupTooLarge(_)) => Verdict::skipped(theorem, instance, SkipKind::Caps, e.to_string()),
        Err(e @ Error::Unsupported(_)) => {
            let kind = if e.to_string().contains("budget") {
                SkipKind::Caps
            } else {
                SkipKind::Unsupported
            };
            Verdict::skipped(theorem, instance, kind, e.to_string())
        }
        Err(e) => Verdict::error(theorem, instance, &e),
    };
    v.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    v
}

/// Canonical cycle string of an element.
pub(crate) fn show(x: &Permutation) -> String {
    x.to_string()
}

#[cfg(test)]
mod tests;
