//! Seeded search for instances the theorems say nothing definite about:
//! π-length-sharp `N²`-connected factorisations, elements outside `F_2(G)`
//! passing the two-generator `N²` test, and the status of the nilpotent-by-F
//! equivalence when neither of its hypotheses holds. Findings are
//! observations, never assertions.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::classes::{self, GroupClass};
use crate::connection::{connected_in, coprime_indices, is_normally_embedded};
use crate::corpus::{direct_product, find_factorizations, Catalog};
use crate::error::Result;
use crate::group::PermGroup;
use crate::primes::{prime_divisors, PrimeSet};
use crate::workspace::{Limits, SubId, Workspace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchKind {
    /// π-length of `G` equals `l + 1`
    SharpPiLength,
    /// `g ∉ F_2(G)` with `⟨g, g^x⟩ ∈ N²` for all `x`
    F2Contrast,
    /// nilpotent-by-F equivalence where neither hypothesis holds
    NfUnhypothesized,
}

impl SearchKind {
    pub const ALL: [SearchKind; 3] = [SearchKind::SharpPiLength, SearchKind::F2Contrast, SearchKind::NfUnhypothesized];

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "a" | "sharp-pi-length" => Some(SearchKind::SharpPiLength),
            "b" | "f2-contrast" => Some(SearchKind::F2Contrast),
            "c" | "nf-unhypothesized" => Some(SearchKind::NfUnhypothesized),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchConfig {
    pub kinds: Vec<SearchKind>,
    pub max_order: u128,
    /// Random direct products of catalog groups added to the pool.
    pub samples: usize,
    pub seed: u64,
    pub max_pairs: u64,
    pub jobs: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            kinds: SearchKind::ALL.to_vec(),
            max_order: 60,
            samples: 8,
            seed: 0,
            max_pairs: Limits::default().max_pairs,
            jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Finding {
    pub kind: SearchKind,
    pub group: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub tool: String,
    pub version: String,
    pub catalog_sha256: String,
    pub flags: SearchConfig,
    pub groups_examined: Vec<String>,
    pub findings: Vec<Finding>,
}

impl SearchReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

struct Candidate {
    name: String,
    group: PermGroup,
    pairs: Vec<(String, PermGroup, String, PermGroup)>,
}

/// Catalog groups within the order bound, plus `samples` seeded direct
/// products of two of them, each with its proper factorisations.
fn candidates(catalog: &Catalog, cfg: &SearchConfig) -> Result<Vec<Candidate>> {
    let mut out = Vec::new();
    let small: Vec<_> = catalog
        .entries
        .iter()
        .filter(|e| e.group.order() <= cfg.max_order)
        .collect();
    for e in &small {
        let mut pairs = Vec::new();
        for (an, bn) in &e.factorizations {
            if let (Some(a), Some(b)) = (e.subgroup(an), e.subgroup(bn)) {
                pairs.push((an.clone(), a.clone(), bn.clone(), b.clone()));
            }
        }
        out.push(Candidate {
            name: e.name.clone(),
            group: e.group.clone(),
            pairs,
        });
    }
    let factors: Vec<_> = small.iter().filter(|e| e.group.order() > 1).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut names = BTreeSet::new();
    let mut tries = 0;
    while names.len() < cfg.samples && tries < cfg.samples * 20 && !factors.is_empty() {
        tries += 1;
        let x = factors[rng.random_range(0..factors.len())];
        let y = factors[rng.random_range(0..factors.len())];
        if x.group.order() * y.group.order() > cfg.max_order {
            continue;
        }
        let name = format!("{}x{}", x.name, y.name);
        if !names.insert(name.clone()) {
            continue;
        }
        let g = direct_product(&x.group, &y.group)?;
        let pairs = find_factorizations(&g, true)?
            .into_iter()
            .enumerate()
            .map(|(i, f)| (format!("A{i}"), f.a, format!("B{i}"), f.b))
            .collect();
        out.push(Candidate { name, group: g, pairs });
    }
    Ok(out)
}

fn all(_: &crate::perm::Permutation) -> bool {
    true
}

fn connected(ws: &Workspace, a: SubId, b: SubId, l: &GroupClass) -> Result<bool> {
    Ok(connected_in(ws, a, b, l, &all, &all)?.is_connected())
}

fn examine(c: &Candidate, cfg: &SearchConfig) -> Result<Vec<Finding>> {
    let mut out = Vec::new();
    let ws = Workspace::new(&c.group, Limits { max_pairs: cfg.max_pairs })?;
    let finding = |kind, a: Option<&str>, b: Option<&str>, detail: String| Finding {
        kind,
        group: c.name.clone(),
        a: a.map(str::to_string),
        b: b.map(str::to_string),
        detail,
    };
    let wants = |k| cfg.kinds.contains(&k);

    if wants(SearchKind::F2Contrast) {
        let n2 = GroupClass::nilpotent_length(2);
        let f2 = ws.id_of(&classes::fitting_term(&c.group, 2)?)?;
        let n = ws.order() as u32;
        for class in ws.classes()? {
            let g = class[0];
            if ws.contains(f2, g) {
                continue;
            }
            let mut all_in = true;
            for x in 0..n {
                if !ws.member(ws.pair(g, ws.table().conj(g, x)), &n2)? {
                    all_in = false;
                    break;
                }
            }
            if all_in {
                out.push(finding(
                    SearchKind::F2Contrast,
                    None,
                    None,
                    format!("g = {} (class size {}) lies outside F_2(G)", ws.element(g), class.len()),
                ));
            }
        }
    }

    for (an, a, bn, b) in &c.pairs {
        let (ia, ib) = (ws.id_of(a)?, ws.id_of(b)?);
        if wants(SearchKind::SharpPiLength) && connected(&ws, ia, ib, &GroupClass::nilpotent_length(2))? {
            for p in prime_divisors(c.group.order()) {
                let pi = PrimeSet::single(p);
                let (Some(la), Some(lb)) = (classes::pi_length(a, &pi)?, classes::pi_length(b, &pi)?) else {
                    continue;
                };
                let l = la.max(lb);
                if classes::pi_length(&c.group, &pi)? == Some(l + 1) {
                    out.push(finding(
                        SearchKind::SharpPiLength,
                        Some(an),
                        Some(bn),
                        format!("pi={p}: l = {l}, pi-length of G = {}", l + 1),
                    ));
                }
            }
        }
        if wants(SearchKind::NfUnhypothesized)
            && !is_normally_embedded(a, &c.group)?
            && !is_normally_embedded(b, &c.group)?
            && !coprime_indices(a, b, &c.group)?
        {
            let fit = ws.radical(ws.whole(), &GroupClass::nilpotent())?;
            let q = ws.quotient(fit)?;
            let (qa, qb) = (q.image_of(&ws, ia)?, q.image_of(&ws, ib)?);
            for f in [GroupClass::abelian(), GroupClass::nilpotent()] {
                let lhs = connected(&ws, ia, ib, &GroupClass::nilpotent_by(&f)?)?;
                let rhs = connected(&q.workspace, qa, qb, &f)?;
                let status = if lhs == rhs { "equivalence holds" } else { "equivalence fails" };
                out.push(finding(
                    SearchKind::NfUnhypothesized,
                    Some(an),
                    Some(bn),
                    format!("F={}: N(F)-connected = {lhs}, quotient F-connected = {rhs}; {status}", f.name()),
                ));
            }
        }
    }
    Ok(out)
}

pub fn run_search(catalog: &Catalog, cfg: &SearchConfig) -> Result<SearchReport> {
    let cands = candidates(catalog, cfg)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs.max(1))
        .build()
        .map_err(|e| crate::Error::Unsupported(format!("thread pool: {e}")))?;
    let results: Vec<Result<Vec<Finding>>> = pool.install(|| cands.par_iter().map(|c| examine(c, cfg)).collect());
    let mut findings = Vec::new();
    for r in results {
        match r {
            Ok(f) => findings.extend(f),
            Err(e) if e.is_resource_limit() => {}
            Err(e) => return Err(e),
        }
    }
    findings.sort();
    let mut groups_examined: Vec<String> = cands.into_iter().map(|c| c.name).collect();
    groups_examined.sort();
    Ok(SearchReport {
        tool: crate::suite::TOOL.into(),
        version: env!("CARGO_PKG_VERSION").into(),
        catalog_sha256: catalog.hash(),
        flags: cfg.clone(),
        groups_examined,
        findings,
    })
}
