//! Runs the verifiers over every applicable instance of a catalog and
//! assembles a deterministic report.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::classes::GroupClass;
use crate::corpus::{Catalog, CorpusEntry};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::primes::{prime_divisors, PrimeSet};
use crate::theorems::{self as th, Fault, Instance, Named, SkipKind, Verdict, VerifyCtx, THEOREM_IDS};
use crate::workspace::Limits;

pub const TOOL: &str = "lconn";
pub const DEFAULT_MAX_ORDER: u128 = 2000;
pub const DEFAULT_MAX_SKIP_RATE: f64 = 0.10;

#[derive(Debug, Clone, Serialize)]
pub struct SuiteConfig {
    pub corpus: String,
    pub theorems: Vec<String>,
    pub max_order: u128,
    pub max_pairs: u64,
    pub jobs: usize,
    pub seed: u64,
    pub max_skip_rate: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fault: Option<Fault>,
    pub timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            corpus: "shipped".into(),
            theorems: THEOREM_IDS.iter().map(|s| s.to_string()).collect(),
            max_order: DEFAULT_MAX_ORDER,
            max_pairs: Limits::default().max_pairs,
            jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
            seed: 0,
            max_skip_rate: DEFAULT_MAX_SKIP_RATE,
            fault: None,
            timings: false,
        }
    }
}

/// Expand `all` and comma lists into known theorem ids, in report order.
pub fn parse_theorem_list(spec: &str) -> Result<Vec<String>> {
    let mut wanted = BTreeSet::new();
    for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if part == "all" {
            wanted.extend(THEOREM_IDS.iter().copied());
        } else if let Some(id) = THEOREM_IDS.iter().find(|&&id| id == part) {
            wanted.insert(*id);
        } else {
            return Err(Error::Unsupported(format!("unknown theorem `{part}`")));
        }
    }
    if wanted.is_empty() {
        return Err(Error::Unsupported("no theorem selected".into()));
    }
    Ok(THEOREM_IDS
        .iter()
        .filter(|id| wanted.contains(*id))
        .map(|s| s.to_string())
        .collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct Header {
    pub tool: String,
    pub version: String,
    pub catalog_source: String,
    pub catalog_sha256: String,
    pub flags: SuiteConfig,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Summary {
    pub verdicts: usize,
    pub failures: usize,
    pub skipped_hypothesis: usize,
    pub skipped_caps: usize,
    pub skipped_unsupported: usize,
    pub skip_rate: f64,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub header: Header,
    pub summary: Summary,
    pub verdicts: Vec<Verdict>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.holds)
    }
}

fn summarize(verdicts: &[Verdict], max_skip_rate: f64) -> Summary {
    let mut s = Summary {
        verdicts: verdicts.len(),
        ..Summary::default()
    };
    for v in verdicts {
        if !v.holds {
            s.failures += 1;
        }
        match v.skipped.as_ref().map(|k| k.kind) {
            Some(SkipKind::Hypothesis) => s.skipped_hypothesis += 1,
            Some(SkipKind::Caps) => s.skipped_caps += 1,
            Some(SkipKind::Unsupported) => s.skipped_unsupported += 1,
            None => {}
        }
    }
    let applicable = s.verdicts - s.skipped_hypothesis;
    let resource = s.skipped_caps + s.skipped_unsupported;
    s.skip_rate = if applicable == 0 {
        0.0
    } else {
        resource as f64 / applicable as f64
    };
    s.ok = s.failures == 0 && s.skip_rate <= max_skip_rate;
    s
}

type Job<'a> = Box<dyn Fn(&VerifyCtx) -> Verdict + Send + Sync + 'a>;

struct Plan<'a> {
    wanted: BTreeSet<String>,
    seen: BTreeSet<(String, Instance)>,
    jobs: Vec<Job<'a>>,
}

impl<'a> Plan<'a> {
    fn push(&mut self, theorem: &str, key: Instance, job: impl Fn(&VerifyCtx) -> Verdict + Send + Sync + 'a) {
        if self.wanted.contains(theorem) && self.seen.insert((theorem.to_string(), key)) {
            self.jobs.push(Box::new(job));
        }
    }
}

/// Prime sweeps `(π, ρ)`: each single prime of `|G|` against the rest, plus
/// any attached parameters.
fn prime_pairs(e: &CorpusEntry) -> Vec<(PrimeSet, PrimeSet)> {
    let primes = prime_divisors(e.group.order());
    let rest = |pi: &PrimeSet| PrimeSet::new(primes.iter().copied().filter(|&q| !pi.contains(q)));
    let mut out: Vec<(PrimeSet, PrimeSet)> = primes
        .iter()
        .map(|&p| {
            let pi = PrimeSet::single(p);
            let rho = rest(&pi);
            (pi, rho)
        })
        .collect();
    for params in &e.params {
        if let Some(pi) = &params.pi {
            let rho = params.rho.clone().unwrap_or_else(|| rest(pi));
            out.push((pi.clone(), rho));
        }
    }
    out
}

fn param_classes(e: &CorpusEntry) -> Vec<GroupClass> {
    e.params
        .iter()
        .filter_map(|p| p.class.as_deref())
        .filter_map(|c| GroupClass::parse(c).ok())
        .collect()
}

fn plan_entry<'a>(plan: &mut Plan<'a>, e: &'a CorpusEntry) {
    let gname = e.name.as_str();
    let g = &e.group;
    let named = move || Named::new(gname, g);

    plan.push("thm1.2", Instance::group(gname), move |c| th::verify_thm_1_2(c, named()));
    plan.push("thm1.3", Instance::group(gname), move |c| th::verify_thm_1_3(c, named()));
    plan.push("baer-suzuki", Instance::group(gname), move |c| th::verify_baer_suzuki(c, named()));
    let mut ks: BTreeSet<usize> = (1..=3).collect();
    ks.extend(e.params.iter().filter_map(|p| p.k).map(|k| k as usize));
    for k in ks {
        let inst = Instance::group(gname).with_k(k);
        plan.push("cor1.11", inst.clone(), move |c| th::verify_cor_1_11(c, named(), k));
        plan.push("cor1.13", inst, move |c| th::verify_cor_1_13(c, named(), k));
    }

    let primes = prime_pairs(e);
    let extra = param_classes(e);
    let classes_with = |base: Vec<GroupClass>| -> Vec<GroupClass> {
        let mut out = base;
        for c in &extra {
            if !out.contains(c) {
                out.push(c.clone());
            }
        }
        out
    };
    let nf_classes = classes_with(vec![GroupClass::abelian(), GroupClass::nilpotent()]);
    let cor8_classes = classes_with(vec![GroupClass::nilpotent(), GroupClass::supersoluble(), GroupClass::soluble()]);
    let lem1_classes = classes_with(vec![GroupClass::nilpotent(), GroupClass::supersoluble()]);

    let mut pairs: Vec<(&'a str, &'a PermGroup, &'a str, &'a PermGroup, bool)> = Vec::new();
    for (an, bn) in &e.factorizations {
        if let (Some(a), Some(b)) = (e.subgroup(an), e.subgroup(bn)) {
            pairs.push((an.as_str(), a, bn.as_str(), b, true));
        }
    }
    pairs.push((gname, g, gname, g, false));

    for (an, a, bn, b, proper) in pairs {
        let na = move || Named::new(an, a);
        let nb = move || Named::new(bn, b);
        let inst = Instance::pair(gname, an, bn);
        plan.push("thm1.1", inst.clone(), move |c| th::verify_thm_1_1(c, named(), na(), nb()));
        plan.push("thm1.6.1", inst.clone(), move |c| th::verify_thm_1_6_1(c, named(), na(), nb()));
        plan.push("thm1.6.2", inst.clone(), move |c| th::verify_thm_1_6_2(c, named(), na(), nb()));
        if !proper {
            continue;
        }
        for (pi, rho) in &primes {
            let (pi, rho) = (pi.clone(), rho.clone());
            let key = inst.clone().with_pi(&pi).with_rho(&rho);
            plan.push("thm1.6.3", key, move |c| th::verify_thm_1_6_3(c, named(), na(), nb(), &pi, &rho));
        }
        let mut pis: Vec<PrimeSet> = primes.iter().map(|(pi, _)| pi.clone()).collect();
        pis.dedup();
        for pi in pis {
            let key = inst.clone().with_pi(&pi);
            plan.push("cor1.9", key, move |c| th::verify_cor_1_9(c, named(), na(), nb(), &pi));
        }
        for f in &nf_classes {
            let key = inst.clone().with_class(f.name());
            let f1 = f.clone();
            plan.push("thm1.6.4", key.clone(), move |c| th::verify_thm_1_6_4(c, named(), na(), nb(), &f1));
            let f2 = f.clone();
            plan.push("prop2.2", key, move |c| th::verify_prop_2_2(c, named(), na(), nb(), &f2));
        }
        for f in &cor8_classes {
            let key = inst.clone().with_class(f.name());
            let f = f.clone();
            plan.push("cor1.8", key, move |c| th::verify_cor_1_8(c, named(), na(), nb(), &f));
        }
        for f in &lem1_classes {
            let key = inst.clone().with_class(f.name());
            let f = f.clone();
            plan.push("lem2.1", key, move |c| th::verify_lemma_2_1(c, named(), na(), nb(), Some(&f)));
        }
        for (xn, x, yn, y) in [(an, a, bn, b), (bn, b, an, a)] {
            let nx = move || Named::new(xn, x);
            let ny = move || Named::new(yn, y);
            let key = Instance::pair(gname, xn, yn);
            plan.push("lem2.3", key.clone(), move |c| th::verify_lemma_2_3(c, named(), nx(), ny()));
            plan.push("lem2.8", key, move |c| th::verify_lemma_2_8(c, named(), nx(), ny()));
        }
    }
}

/// Failing verdicts for catalog entries that break their invariants.
fn catalog_verdicts(catalog: &Catalog) -> Vec<Verdict> {
    catalog
        .validate()
        .into_iter()
        .map(|issue| {
            let instance = match &issue.pair {
                Some((a, b)) => Instance::pair(&issue.entry, a, b),
                None => Instance::group(&issue.entry),
            };
            let mut w = BTreeMap::new();
            w.insert("instance".to_string(), instance.to_string());
            w.insert("failed".to_string(), issue.message.clone());
            let mut statements = BTreeMap::new();
            statements.insert("valid".to_string(), false);
            Verdict {
                theorem_id: "catalog".into(),
                instance,
                statements,
                holds: false,
                witness: Some(w),
                skipped: None,
                observations: Vec::new(),
                elapsed_ms: None,
            }
        })
        .collect()
}

/// Number of verifier runs the configuration would schedule.
pub fn count_tasks(catalog: &Catalog, cfg: &SuiteConfig) -> usize {
    build_plan(catalog, cfg).jobs.len()
}

fn build_plan<'a>(catalog: &'a Catalog, cfg: &SuiteConfig) -> Plan<'a> {
    let mut plan = Plan {
        wanted: cfg.theorems.iter().cloned().collect(),
        seen: BTreeSet::new(),
        jobs: Vec::new(),
    };
    for e in &catalog.entries {
        if e.group.order() <= cfg.max_order {
            plan_entry(&mut plan, e);
        }
    }
    plan
}

pub fn run_suite(catalog: &Catalog, cfg: &SuiteConfig) -> Result<Report> {
    let plan = build_plan(catalog, cfg);
    let ctx = VerifyCtx::new(Limits { max_pairs: cfg.max_pairs }, cfg.fault);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs.max(1))
        .build()
        .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))?;
    let mut verdicts: Vec<Verdict> = pool.install(|| plan.jobs.par_iter().map(|job| job(&ctx)).collect());
    verdicts.extend(catalog_verdicts(catalog));
    if !cfg.timings {
        for v in &mut verdicts {
            v.elapsed_ms = None;
        }
    }
    verdicts.sort_by(|a, b| {
        a.theorem_id
            .cmp(&b.theorem_id)
            .then_with(|| a.instance.cmp(&b.instance))
    });
    let summary = summarize(&verdicts, cfg.max_skip_rate);
    Ok(Report {
        header: Header {
            tool: TOOL.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            catalog_source: catalog.source.clone(),
            catalog_sha256: catalog.hash(),
            flags: cfg.clone(),
        },
        summary,
        verdicts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::parse;

    #[test]
    fn theorem_lists() {
        assert_eq!(parse_theorem_list("all").unwrap().len(), THEOREM_IDS.len());
        assert_eq!(parse_theorem_list("cor1.13,thm1.1").unwrap(), vec!["thm1.1", "cor1.13"]);
        assert!(parse_theorem_list("thm9").is_err());
        assert!(parse_theorem_list("").is_err());
    }

    #[test]
    fn small_catalog_suite() {
        let text = "group S3 degree 3\ngen (1,2)\ngen (1,2,3)\nend\n\
                    subgroup C3 of S3\ngen (1,2,3)\nend\n\
                    subgroup C2 of S3\ngen (1,2)\nend\n\
                    factorization S3 C3 C2\n";
        let cat = parse(text).unwrap();
        let cfg = SuiteConfig {
            jobs: 2,
            ..SuiteConfig::default()
        };
        let report = run_suite(&cat, &cfg).unwrap();
        assert!(report.summary.ok, "{:#?}", report.failures().collect::<Vec<_>>());
        assert_eq!(report.summary.verdicts, count_tasks(&cat, &cfg));
        let again = run_suite(&cat, &cfg).unwrap();
        assert_eq!(report.to_json(), again.to_json());
        let mut keys: Vec<_> = report.verdicts.iter().map(|v| (&v.theorem_id, &v.instance)).collect();
        let sorted = keys.clone();
        keys.sort();
        keys.dedup();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn skip_rate_ignores_hypothesis_skips() {
        let mk = |kind: Option<SkipKind>| Verdict {
            theorem_id: "t".into(),
            instance: Instance::group("G"),
            statements: BTreeMap::new(),
            holds: true,
            witness: None,
            skipped: kind.map(|kind| th::Skip { kind, reason: String::new() }),
            observations: Vec::new(),
            elapsed_ms: None,
        };
        let vs = vec![mk(None), mk(Some(SkipKind::Hypothesis)), mk(Some(SkipKind::Caps)), mk(None)];
        let s = summarize(&vs, 0.5);
        assert!((s.skip_rate - 1.0 / 3.0).abs() < 1e-12);
        assert!(s.ok);
        assert!(!summarize(&vs, 0.1).ok);
    }
}
