//! Per-group caches shared by the connection checks and the verifiers.
//!
//! Subgroups of the ambient group are interned as element bitsets over the
//! multiplication table; class memberships, radicals and the subgroup
//! `⟨a, b⟩` of each element pair are memoised against the interned id.

use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::{Arc, OnceLock, RwLock};

use dashmap::DashMap;

use crate::classes::{self, GroupClass};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::quotient::QuotientMap;
use crate::table::{CayleyTable, ElementSet};

pub type SubId = u32;

/// Budgets applied to pair loops.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Upper bound on `|A|·|B|` for one connection check.
    pub max_pairs: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_pairs: 250_000 }
    }
}

/// Above this order the pair memo is a hash map rather than a dense array.
const DENSE_PAIRS: usize = 1024;
const UNSET: u32 = u32::MAX;

struct Sub {
    set: ElementSet,
    group: OnceLock<PermGroup>,
    members: DashMap<String, bool>,
    radicals: DashMap<String, SubId>,
    nilpotent_length: OnceLock<Option<usize>>,
}

enum PairMemo {
    Dense(Box<[AtomicU32]>),
    Sparse(DashMap<(u32, u32), SubId>),
}

pub struct Workspace {
    group: PermGroup,
    limits: Limits,
    pairs: PairMemo,
    ids: DashMap<ElementSet, SubId>,
    subs: RwLock<Vec<Arc<Sub>>>,
    quotients: DashMap<SubId, Arc<QuotientView>>,
}

/// `G/N` with its own workspace.
pub struct QuotientView {
    pub map: QuotientMap,
    pub workspace: Arc<Workspace>,
}

impl Workspace {
    /// Requires the group to have a multiplication table.
    pub fn new(group: &PermGroup, limits: Limits) -> Result<Self> {
        let n = group.table()?.len();
        let pairs = if n <= DENSE_PAIRS {
            PairMemo::Dense((0..n * n).map(|_| AtomicU32::new(UNSET)).collect())
        } else {
            PairMemo::Sparse(DashMap::new())
        };
        Ok(Workspace {
            group: group.clone(),
            limits,
            pairs,
            ids: DashMap::new(),
            subs: RwLock::new(Vec::new()),
            quotients: DashMap::new(),
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn table(&self) -> &CayleyTable {
        self.group.table().expect("checked at construction")
    }

    pub fn order(&self) -> usize {
        self.table().len()
    }

    pub fn index(&self, g: &Permutation) -> Result<u32> {
        self.table().index(g).ok_or(Error::ContainmentViolation)
    }

    pub fn element(&self, i: u32) -> &Permutation {
        self.table().element(i)
    }

    fn sub(&self, id: SubId) -> Arc<Sub> {
        self.subs.read().expect("poisoned")[id as usize].clone()
    }

    /// Intern an element set that is known to be a subgroup.
    pub fn intern(&self, set: ElementSet) -> SubId {
        if let Some(id) = self.ids.get(&set) {
            return *id;
        }
        *self.ids.entry(set.clone()).or_insert_with(|| {
            let mut subs = self.subs.write().expect("poisoned");
            subs.push(Arc::new(Sub {
                set,
                group: OnceLock::new(),
                members: DashMap::new(),
                radicals: DashMap::new(),
                nilpotent_length: OnceLock::new(),
            }));
            (subs.len() - 1) as SubId
        })
    }

    pub fn id_of(&self, h: &PermGroup) -> Result<SubId> {
        Ok(self.intern(self.table().set_of(h)?))
    }

    pub fn whole(&self) -> SubId {
        let mut all = self.table().empty_set();
        all.insert_range(..);
        self.intern(all)
    }

    pub fn set(&self, id: SubId) -> ElementSet {
        self.sub(id).set.clone()
    }

    pub fn size(&self, id: SubId) -> usize {
        self.sub(id).set.count_ones(..)
    }

    pub fn contains(&self, id: SubId, element: u32) -> bool {
        self.sub(id).set.contains(element as usize)
    }

    pub fn is_subset(&self, a: SubId, b: SubId) -> bool {
        self.sub(a).set.is_subset(&self.sub(b).set)
    }

    pub fn elements_of(&self, id: SubId) -> Vec<u32> {
        self.sub(id).set.ones().map(|i| i as u32).collect()
    }

    pub fn subgroup(&self, id: SubId) -> PermGroup {
        let sub = self.sub(id);
        sub.group.get_or_init(|| self.table().to_group(&sub.set)).clone()
    }

    /// `⟨a, b⟩`
    pub fn pair(&self, a: u32, b: u32) -> SubId {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        let compute = || self.intern(self.table().closure(&[a, b]));
        match &self.pairs {
            PairMemo::Dense(cells) => {
                let cell = &cells[a as usize * self.order() + b as usize];
                let v = cell.load(Ordering::Relaxed);
                if v != UNSET {
                    return v;
                }
                let id = compute();
                cell.store(id, Ordering::Relaxed);
                id
            }
            PairMemo::Sparse(map) => {
                if let Some(id) = map.get(&(a, b)) {
                    return *id;
                }
                let id = compute();
                map.insert((a, b), id);
                id
            }
        }
    }

    /// Subgroup generated by the given subgroups and elements.
    pub fn join(&self, subs: &[SubId], elements: &[u32]) -> SubId {
        let table = self.table();
        let mut set = table.closure(elements);
        for &s in subs {
            let gens: Vec<u32> = self.sub(s).set.ones().map(|i| i as u32).collect();
            table.extend(&mut set, &gens);
        }
        self.intern(set)
    }

    pub fn meet(&self, a: SubId, b: SubId) -> SubId {
        let mut set = self.sub(a).set.clone();
        set.intersect_with(&self.sub(b).set);
        self.intern(set)
    }

    /// `⟨S^X⟩` for elements `S` and a subgroup `X` normalising the result.
    pub fn normal_closure(&self, seeds: &[u32], by: &[u32]) -> SubId {
        self.intern(self.table().normal_closure(seeds, by))
    }

    /// Memoised class membership of a subgroup.
    pub fn member(&self, id: SubId, class: &GroupClass) -> Result<bool> {
        let sub = self.sub(id);
        if let Some(v) = sub.members.get(class.name()) {
            return Ok(*v);
        }
        let v = class.contains(&self.subgroup(id))?;
        sub.members.insert(class.name().to_string(), v);
        Ok(v)
    }

    /// Memoised radical of a subgroup.
    pub fn radical(&self, id: SubId, class: &GroupClass) -> Result<SubId> {
        let sub = self.sub(id);
        if let Some(v) = sub.radicals.get(class.name()) {
            return Ok(*v);
        }
        let r = classes::radical(&self.subgroup(id), class)?;
        let rid = self.id_of(&r)?;
        sub.radicals.insert(class.name().to_string(), rid);
        Ok(rid)
    }

    pub fn nilpotent_length(&self, id: SubId) -> Result<Option<usize>> {
        let sub = self.sub(id);
        if let Some(v) = sub.nilpotent_length.get() {
            return Ok(*v);
        }
        let v = classes::nilpotent_length(&self.subgroup(id))?;
        Ok(*sub.nilpotent_length.get_or_init(|| v))
    }

    /// `G/N` for a normal subgroup `N` of the ambient group, memoised.
    pub fn quotient(&self, n: SubId) -> Result<Arc<QuotientView>> {
        if let Some(q) = self.quotients.get(&n) {
            return Ok(q.clone());
        }
        let map = crate::quotient::quotient(&self.group, &self.subgroup(n))?;
        let workspace = Arc::new(Workspace::new(map.image(), self.limits)?);
        let view = Arc::new(QuotientView { map, workspace });
        self.quotients.insert(n, view.clone());
        Ok(view)
    }

    /// Elements normalising every listed subgroup.
    pub fn common_normalizer(&self, subs: &[SubId]) -> Vec<u32> {
        let table = self.table();
        let sets: Vec<Arc<Sub>> = subs.iter().map(|&s| self.sub(s)).collect();
        let gens: Vec<Vec<u32>> = subs
            .iter()
            .map(|&s| {
                self.subgroup(s)
                    .generators()
                    .iter()
                    .map(|g| table.index(g).expect("subgroup of ambient"))
                    .collect()
            })
            .collect();
        (0..table.len() as u32)
            .filter(|&k| {
                sets.iter().zip(&gens).all(|(s, gs)| {
                    gs.iter().all(|&g| s.set.contains(table.conj(g, k) as usize))
                })
            })
            .collect()
    }

    /// Index lists of the conjugacy classes of the ambient group.
    pub fn classes(&self) -> Result<&[Vec<u32>]> {
        self.group.conjugacy_classes()
    }
}

impl QuotientView {
    /// Image of an ambient subgroup inside the quotient workspace.
    pub fn image_of(&self, source: &Workspace, id: SubId) -> Result<SubId> {
        let img = self.map.map_subgroup(&source.subgroup(id))?;
        self.workspace.id_of(&img)
    }
}
