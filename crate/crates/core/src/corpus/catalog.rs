//! Line-oriented catalog format:
//!
//! ```text
//! group S4 degree 4
//! gen (1,2)
//! gen (1,2,3,4)
//! end
//! subgroup Klein of S4
//! gen (1,2)(3,4)
//! gen (1,3)(2,4)
//! end
//! factorization S4 Klein S3
//! params S4 pi=2
//! ```
//!
//! `#` starts a comment. Serialisation is canonical: entries, subgroups,
//! factorisations and parameter lines are sorted, and cycles are written
//! least point first.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::classes::GroupClass;
use crate::connection::is_factorization;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::primes::PrimeSet;

/// Parameters attached to an entry for targeted suites.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Params {
    pub k: Option<u32>,
    pub pi: Option<PrimeSet>,
    pub rho: Option<PrimeSet>,
    pub class: Option<String>,
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub group: PermGroup,
    /// Sorted by name.
    pub subgroups: Vec<(String, PermGroup)>,
    /// `(A, B)` subgroup names, sorted.
    pub factorizations: Vec<(String, String)>,
    pub params: Vec<Params>,
}

impl CorpusEntry {
    pub fn new(name: impl Into<String>, group: PermGroup) -> Self {
        CorpusEntry {
            name: name.into(),
            group,
            subgroups: Vec::new(),
            factorizations: Vec::new(),
            params: Vec::new(),
        }
    }

    pub fn subgroup(&self, name: &str) -> Option<&PermGroup> {
        self.subgroups.iter().find(|(n, _)| n == name).map(|(_, h)| h)
    }

    fn canonicalize(&mut self) {
        self.subgroups.sort_by(|a, b| a.0.cmp(&b.0));
        self.factorizations.sort();
        self.factorizations.dedup();
        self.params.sort();
        self.params.dedup();
    }
}

fn same_generators(a: &PermGroup, b: &PermGroup) -> bool {
    a.degree() == b.degree() && a.generators() == b.generators()
}

impl PartialEq for CorpusEntry {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && same_generators(&self.group, &other.group)
            && self.subgroups.len() == other.subgroups.len()
            && self
                .subgroups
                .iter()
                .zip(&other.subgroups)
                .all(|(a, b)| a.0 == b.0 && same_generators(&a.1, &b.1))
            && self.factorizations == other.factorizations
            && self.params == other.params
    }
}

/// A validation failure found on load.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Issue {
    pub entry: String,
    /// The factor names, when the issue is about one factorisation line.
    pub pair: Option<(String, String)>,
    pub message: String,
}

#[derive(Debug, Clone)]
pub struct Catalog {
    pub entries: Vec<CorpusEntry>,
    /// Where the catalog came from, e.g. a path or `shipped`.
    pub source: String,
}

impl PartialEq for Catalog {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl Catalog {
    pub fn new(mut entries: Vec<CorpusEntry>, source: impl Into<String>) -> Self {
        for e in &mut entries {
            e.canonicalize();
        }
        entries.sort_by(|a, b| a.name.cmp(&b.name));
        Catalog {
            entries,
            source: source.into(),
        }
    }

    pub fn entry(&self, name: &str) -> Option<&CorpusEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// SHA-256 of the canonical text, hex encoded.
    pub fn hash(&self) -> String {
        let digest = Sha256::digest(serialize(self).as_bytes());
        digest.iter().fold(String::with_capacity(64), |mut s, b| {
            let _ = write!(s, "{b:02x}");
            s
        })
    }

    /// Check containment, factorisation claims, and references.
    pub fn validate(&self) -> Vec<Issue> {
        let mut issues = Vec::new();
        for e in &self.entries {
            let mut issue = |pair: Option<(&String, &String)>, message: String| {
                issues.push(Issue {
                    entry: e.name.clone(),
                    pair: pair.map(|(a, b)| (a.clone(), b.clone())),
                    message,
                })
            };
            for (name, h) in &e.subgroups {
                if !e.group.contains_group(h) {
                    issue(None, format!("subgroup {name} is not contained in {}", e.name));
                }
            }
            for (a, b) in &e.factorizations {
                let (Some(ha), Some(hb)) = (e.subgroup(a), e.subgroup(b)) else {
                    issue(Some((a, b)), format!("factorization {} {a} {b} names an unknown subgroup", e.name));
                    continue;
                };
                match is_factorization(&e.group, ha, hb) {
                    Ok(true) => {}
                    Ok(false) => issue(
                        Some((a, b)),
                        format!(
                        "factorization {} {a} {b} is false: |{a}||{b}|/|{a}∩{b}| ≠ |{}| = {}",
                        e.name,
                        e.name,
                        e.group.order()
                        ),
                    ),
                    Err(err) => issue(Some((a, b)), format!("factorization {} {a} {b}: {err}", e.name)),
                }
            }
            for p in &e.params {
                if let Some(c) = &p.class {
                    if GroupClass::parse(c).is_err() {
                        issue(None, format!("params name unknown class `{c}`"));
                    }
                }
            }
        }
        issues
    }
}

/// Parse and validate.
pub fn parse(text: &str) -> Result<Catalog> {
    let cat = parse_unvalidated(text)?;
    if let Some(i) = cat.validate().into_iter().next() {
        return Err(Error::Validation(format!("{}: {}", i.entry, i.message)));
    }
    Ok(cat)
}

struct RawSubgroup {
    name: String,
    of: String,
    gens: Vec<(usize, String)>,
    line: usize,
}

enum Block {
    Group {
        name: String,
        degree: usize,
        gens: Vec<(usize, String)>,
    },
    Subgroup(RawSubgroup),
}

/// Parse without the semantic checks of [`Catalog::validate`]. Syntax and
/// permutation errors are still reported.
pub fn parse_unvalidated(text: &str) -> Result<Catalog> {
    let err = |line: usize, message: String| Error::Parse { line, message };
    let mut groups: BTreeMap<String, CorpusEntry> = BTreeMap::new();
    let mut order: Vec<String> = Vec::new();
    let mut subgroups: Vec<RawSubgroup> = Vec::new();
    let mut facts: Vec<(usize, String, String, String)> = Vec::new();
    let mut params: Vec<(usize, String, Params)> = Vec::new();
    let mut open: Option<(usize, Block)> = None;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let words: Vec<&str> = content.split_whitespace().collect();
        if let Some((_, block)) = &mut open {
            match words[0] {
                "gen" => {
                    let rest = content["gen".len()..].trim();
                    if rest.is_empty() {
                        return Err(err(line, "`gen` needs a permutation".into()));
                    }
                    match block {
                        Block::Group { gens, .. } => gens.push((line, rest.to_string())),
                        Block::Subgroup(s) => s.gens.push((line, rest.to_string())),
                    }
                }
                "end" if words.len() == 1 => {
                    let (_, block) = open.take().expect("open block");
                    match block {
                        Block::Group { name, degree, gens } => {
                            let perms = gens
                                .iter()
                                .map(|(l, s)| {
                                    Permutation::parse_cycles(degree, s).map_err(|e| err(*l, e.to_string()))
                                })
                                .collect::<Result<Vec<_>>>()?;
                            let group = if perms.is_empty() {
                                PermGroup::trivial(degree)
                            } else {
                                PermGroup::closure(degree, &perms).map_err(|e| err(line, e.to_string()))?
                            };
                            order.push(name.clone());
                            groups.insert(name.clone(), CorpusEntry::new(name, group));
                        }
                        Block::Subgroup(s) => subgroups.push(s),
                    }
                }
                _ => return Err(err(line, format!("expected `gen` or `end`, found `{content}`"))),
            }
            continue;
        }
        match words.as_slice() {
            ["group", name, "degree", n] => {
                let degree: usize = n
                    .parse()
                    .ok()
                    .filter(|&d| d >= 1)
                    .ok_or_else(|| err(line, format!("bad degree `{n}`")))?;
                if groups.contains_key(*name) || order.iter().any(|o| o == name) {
                    return Err(err(line, format!("duplicate group `{name}`")));
                }
                open = Some((
                    line,
                    Block::Group {
                        name: name.to_string(),
                        degree,
                        gens: Vec::new(),
                    },
                ));
            }
            ["subgroup", name, "of", of] => {
                open = Some((
                    line,
                    Block::Subgroup(RawSubgroup {
                        name: name.to_string(),
                        of: of.to_string(),
                        gens: Vec::new(),
                        line,
                    }),
                ));
            }
            ["factorization", g, a, b] => facts.push((line, g.to_string(), a.to_string(), b.to_string())),
            ["params", g, rest @ ..] => {
                let mut p = Params::default();
                for kv in rest {
                    let (k, v) = kv
                        .split_once('=')
                        .ok_or_else(|| err(line, format!("expected key=value, found `{kv}`")))?;
                    let bad = |e: Error| err(line, format!("bad value for `{k}`: {e}"));
                    match k {
                        "k" => p.k = Some(v.parse().map_err(|_| err(line, format!("bad k `{v}`")))?),
                        "pi" => p.pi = Some(v.parse().map_err(bad)?),
                        "rho" => p.rho = Some(v.parse().map_err(bad)?),
                        "class" => p.class = Some(v.to_string()),
                        _ => return Err(err(line, format!("unknown parameter `{k}`"))),
                    }
                }
                params.push((line, g.to_string(), p));
            }
            _ => return Err(err(line, format!("unrecognised line `{content}`"))),
        }
    }
    if let Some((line, _)) = open {
        return Err(err(line, "block is not closed with `end`".into()));
    }

    for s in subgroups {
        let entry = groups
            .get_mut(&s.of)
            .ok_or_else(|| err(s.line, format!("subgroup `{}` of unknown group `{}`", s.name, s.of)))?;
        if entry.subgroup(&s.name).is_some() {
            return Err(err(s.line, format!("duplicate subgroup `{}` of `{}`", s.name, s.of)));
        }
        let degree = entry.group.degree();
        let perms = s
            .gens
            .iter()
            .map(|(l, t)| Permutation::parse_cycles(degree, t).map_err(|e| err(*l, e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        let h = if perms.is_empty() {
            PermGroup::trivial(degree)
        } else {
            PermGroup::closure(degree, &perms).map_err(|e| err(s.line, e.to_string()))?
        };
        entry.subgroups.push((s.name, h));
    }
    for (line, g, a, b) in facts {
        let entry = groups
            .get_mut(&g)
            .ok_or_else(|| err(line, format!("factorization of unknown group `{g}`")))?;
        entry.factorizations.push((a, b));
    }
    for (line, g, p) in params {
        let entry = groups
            .get_mut(&g)
            .ok_or_else(|| err(line, format!("params for unknown group `{g}`")))?;
        entry.params.push(p);
    }
    Ok(Catalog::new(groups.into_values().collect(), "text"))
}

fn write_block(out: &mut String, header: String, g: &PermGroup) {
    out.push_str(&header);
    out.push('\n');
    for x in g.generators() {
        let _ = writeln!(out, "gen {x}");
    }
    out.push_str("end\n");
}

/// Canonical text form.
pub fn serialize(cat: &Catalog) -> String {
    let mut entries: Vec<&CorpusEntry> = cat.entries.iter().collect();
    entries.sort_by(|a, b| a.name.cmp(&b.name));
    let mut out = String::new();
    for (i, e) in entries.into_iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        write_block(&mut out, format!("group {} degree {}", e.name, e.group.degree()), &e.group);
        let mut subs: Vec<&(String, PermGroup)> = e.subgroups.iter().collect();
        subs.sort_by(|a, b| a.0.cmp(&b.0));
        for (name, h) in subs {
            write_block(&mut out, format!("subgroup {name} of {}", e.name), h);
        }
        let mut facts = e.factorizations.clone();
        facts.sort();
        facts.dedup();
        for (a, b) in facts {
            let _ = writeln!(out, "factorization {} {a} {b}", e.name);
        }
        let mut params = e.params.clone();
        params.sort();
        params.dedup();
        for p in params {
            let _ = write!(out, "params {}", e.name);
            if let Some(k) = p.k {
                let _ = write!(out, " k={k}");
            }
            if let Some(pi) = &p.pi {
                let _ = write!(out, " pi={}", pi.to_list());
            }
            if let Some(rho) = &p.rho {
                let _ = write!(out, " rho={}", rho.to_list());
            }
            if let Some(c) = &p.class {
                let _ = write!(out, " class={c}");
            }
            out.push('\n');
        }
    }
    out
}
