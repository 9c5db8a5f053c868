use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::chain::StabChain;
use crate::error::{Error, Result};
use crate::perm::{Permutation, MAX_DEGREE};
use crate::table::CayleyTable;

/// Default bound on materialised element lists.
pub const DEFAULT_ELEMENT_CAP: usize = 200_000;

/// A finitely generated permutation group with cached order and, when the
/// order is at most the element cap, its sorted element list.
#[derive(Clone)]
pub struct PermGroup {
    inner: Arc<Inner>,
}

struct Inner {
    degree: usize,
    gens: Vec<Permutation>,
    order: u128,
    elements: Option<Vec<Permutation>>,
    chain: OnceLock<StabChain>,
    classes: OnceLock<Vec<Vec<u32>>>,
    class_closures: OnceLock<Vec<PermGroup>>,
    table: OnceLock<Option<CayleyTable>>,
}

impl PermGroup {
    /// The subgroup generated by `gens`, with the default element cap.
    pub fn closure(degree: usize, gens: &[Permutation]) -> Result<Self> {
        Self::closure_capped(degree, gens, DEFAULT_ELEMENT_CAP)
    }

    pub fn closure_capped(degree: usize, gens: &[Permutation], element_cap: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        if degree > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(degree));
        }
        check_degrees(degree, gens)?;
        let gens = dedup_nontrivial(gens);
        let chain = StabChain::new(degree, &gens)?;
        let order = chain
            .order()
            .ok_or_else(|| Error::too_large("order overflows 128 bits"))?;
        let elements = if order <= element_cap as u128 {
            let mut els = chain.elements(element_cap)?;
            els.sort_unstable();
            Some(els)
        } else {
            None
        };
        let cell = OnceLock::new();
        let _ = cell.set(chain);
        Ok(PermGroup {
            inner: Arc::new(Inner {
                degree,
                gens,
                order,
                elements,
                chain: cell,
                classes: OnceLock::new(),
                class_closures: OnceLock::new(),
                table: OnceLock::new(),
            }),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_sorted_elements(degree, Vec::new(), vec![Permutation::identity(degree)])
    }

    /// Trusted constructor: `elements` must be the sorted, duplicate-free
    /// element list of the group generated by `gens`.
    pub(crate) fn from_sorted_elements(
        degree: usize,
        gens: Vec<Permutation>,
        elements: Vec<Permutation>,
    ) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        PermGroup {
            inner: Arc::new(Inner {
                degree,
                gens: dedup_nontrivial(&gens),
                order: elements.len() as u128,
                elements: Some(elements),
                chain: OnceLock::new(),
                classes: OnceLock::new(),
                class_closures: OnceLock::new(),
                table: OnceLock::new(),
            }),
        }
    }

    /// Build a group from an element set already known to be closed.
    /// Generators are picked greedily.
    pub(crate) fn from_element_set(degree: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        let gens = greedy_generators(degree, &elements);
        Self::from_sorted_elements(degree, gens, elements)
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.inner.gens
    }

    pub fn order(&self) -> u128 {
        self.inner.order
    }

    pub fn order_u64(&self) -> u64 {
        self.inner.order as u64
    }

    pub fn is_trivial(&self) -> bool {
        self.inner.order == 1
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.inner.degree)
    }

    pub fn has_elements(&self) -> bool {
        self.inner.elements.is_some()
    }

    /// The sorted element list.
    pub fn elements(&self) -> Result<&[Permutation]> {
        self.inner.elements.as_deref().ok_or_else(|| {
            Error::too_large(format!(
                "order {} exceeds the element cap",
                self.inner.order
            ))
        })
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.inner
            .elements
            .as_ref()
            .and_then(|els| els.binary_search(g).ok())
    }

    fn chain(&self) -> &StabChain {
        self.inner.chain.get_or_init(|| {
            StabChain::new(self.inner.degree, &self.inner.gens).expect("validated generators")
        })
    }

    /// Membership test.
    pub fn contains(&self, g: &Permutation) -> Result<bool> {
        if g.degree() != self.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: g.degree(),
            });
        }
        Ok(self.includes(g))
    }

    /// Membership test that treats a degree mismatch as non-membership.
    pub fn includes(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree() {
            return false;
        }
        match &self.inner.elements {
            Some(els) => els.binary_search(g).is_ok(),
            None => self.chain().contains(g),
        }
    }

    /// `other ≤ self`
    pub fn contains_group(&self, other: &PermGroup) -> bool {
        other.degree() == self.degree()
            && other.order() <= self.order()
            && self.order().is_multiple_of(other.order())
            && other.generators().iter().all(|g| self.includes(g))
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain().base()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.chain().strong_generators()
    }

    /// Conjugacy classes as index lists into `elements()`, ordered by their
    /// least element; each class starts with its least element.
    pub fn conjugacy_classes(&self) -> Result<&[Vec<u32>]> {
        let els = self.elements()?;
        Ok(self.inner.classes.get_or_init(|| {
            let mut class_of = vec![u32::MAX; els.len()];
            let mut classes = Vec::new();
            for start in 0..els.len() {
                if class_of[start] != u32::MAX {
                    continue;
                }
                let id = classes.len() as u32;
                class_of[start] = id;
                let mut members = vec![start as u32];
                let mut i = 0;
                while i < members.len() {
                    let g = &els[members[i] as usize];
                    for x in self.generators() {
                        let c = g.conjugate_by(x);
                        let ci = els.binary_search(&c).expect("closed under conjugation");
                        if class_of[ci] == u32::MAX {
                            class_of[ci] = id;
                            members.push(ci as u32);
                        }
                    }
                    i += 1;
                }
                members.sort_unstable();
                classes.push(members);
            }
            classes
        }))
    }

    pub fn class_representatives(&self) -> Result<Vec<Permutation>> {
        let els = self.elements()?;
        Ok(self
            .conjugacy_classes()?
            .iter()
            .map(|c| els[c[0] as usize].clone())
            .collect())
    }

    /// `⟨g^G⟩` for each conjugacy-class representative, in class order.
    pub fn class_closures(&self) -> Result<&[PermGroup]> {
        if let Some(c) = self.inner.class_closures.get() {
            return Ok(c);
        }
        let reps = self.class_representatives()?;
        let closures = reps
            .iter()
            .map(|r| {
                crate::ops::conjugation_closure(self.degree(), std::slice::from_ref(r), self.generators())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.inner.class_closures.get_or_init(|| closures))
    }

    /// Cached multiplication table (orders up to [`crate::table::TABLE_CAP`]).
    pub fn table(&self) -> Result<&CayleyTable> {
        self.inner
            .table
            .get_or_init(|| CayleyTable::new(self).ok())
            .as_ref()
            .ok_or_else(|| Error::too_large(format!("no multiplication table for order {}", self.order())))
    }

    pub fn is_abelian(&self) -> bool {
        let g = self.generators();
        g.iter()
            .enumerate()
            .all(|(i, a)| g[i + 1..].iter().all(|b| a.commutes_with(b)))
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree() == other.degree()
            && self.order() == other.order()
            && other.generators().iter().all(|g| self.includes(g))
    }
}

impl Eq for PermGroup {}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup(order {}, gens [", self.order())?;
        for (i, g) in self.generators().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g)?;
        }
        f.write_str("])")
    }
}

pub(crate) fn check_degrees(degree: usize, gens: &[Permutation]) -> Result<()> {
    match gens.iter().find(|g| g.degree() != degree) {
        Some(g) => Err(Error::DegreeMismatch {
            expected: degree,
            found: g.degree(),
        }),
        None => Ok(()),
    }
}

fn dedup_nontrivial(gens: &[Permutation]) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = Vec::with_capacity(gens.len());
    for g in gens {
        if !g.is_identity() && !out.contains(g) {
            out.push(g.clone());
        }
    }
    out
}

/// Breadth-first closure of a growing generating set.
pub(crate) struct BfsClosure {
    seen: HashSet<Permutation>,
    elements: Vec<Permutation>,
    gens: Vec<Permutation>,
}

impl BfsClosure {
    pub fn new(degree: usize) -> Self {
        let id = Permutation::identity(degree);
        let mut seen = HashSet::new();
        seen.insert(id.clone());
        BfsClosure {
            seen,
            elements: vec![id],
            gens: Vec::new(),
        }
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.seen.contains(g)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Adjoin `g`; returns false if it was already present. Fails once the
    /// closure would exceed `cap` elements.
    pub fn add(&mut self, g: Permutation, cap: usize) -> Result<bool> {
        if self.seen.contains(&g) {
            return Ok(false);
        }
        self.gens.push(g);
        let mut i = 0;
        // Every existing element times the new generator, then closure under all.
        let mut frontier: Vec<Permutation> = self.elements.clone();
        while i < frontier.len() {
            let x = frontier[i].clone();
            for s in &self.gens {
                let y = x.then(s);
                if !self.seen.contains(&y) {
                    if self.elements.len() >= cap {
                        return Err(Error::too_large(format!("closure exceeds {} elements", cap)));
                    }
                    self.seen.insert(y.clone());
                    self.elements.push(y.clone());
                    frontier.push(y);
                }
            }
            i += 1;
        }
        Ok(true)
    }

    pub fn into_group(self, degree: usize) -> PermGroup {
        let mut els = self.elements;
        els.sort_unstable();
        PermGroup::from_sorted_elements(degree, self.gens, els)
    }
}

/// Pick generators greedily, largest element order first.
fn greedy_generators(degree: usize, elements: &[Permutation]) -> Vec<Permutation> {
    let mut by_order: Vec<&Permutation> = elements.iter().filter(|g| !g.is_identity()).collect();
    by_order.sort_by_key(|g| std::cmp::Reverse(g.order()));
    let mut bfs = BfsClosure::new(degree);
    for g in by_order {
        if bfs.len() == elements.len() {
            break;
        }
        bfs.add(g.clone(), usize::MAX).expect("uncapped");
    }
    bfs.gens
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(degree: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(degree, s).unwrap()
    }

    /// Oracle: exhaustive left-multiplication closure.
    fn exhaustive_order(degree: usize, gens: &[Permutation]) -> usize {
        let mut seen = HashSet::new();
        let mut queue = vec![Permutation::identity(degree)];
        seen.insert(queue[0].clone());
        while let Some(x) = queue.pop() {
            for s in gens {
                let y = s.then(&x);
                if seen.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn closure_examples() {
        assert_eq!(PermGroup::closure(3, &[]).unwrap().order(), 1);
        let s3 = PermGroup::closure(3, &[p(3, "(1,2)"), p(3, "(1,2,3)")]).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(exhaustive_order(3, s3.generators()), 6);
        let v4 = PermGroup::closure(4, &[p(4, "(1,2)(3,4)"), p(4, "(1,3)(2,4)")]).unwrap();
        assert_eq!(v4.order(), 4);
        assert_eq!(exhaustive_order(4, v4.generators()), 4);
    }

    #[test]
    fn membership_examples() {
        let c3 = PermGroup::closure(3, &[p(3, "(1,2,3)")]).unwrap();
        assert!(c3.contains(&p(3, "(1,3,2)")).unwrap());
        assert!(!c3.contains(&p(3, "(1,2)")).unwrap());
        let t = PermGroup::trivial(3);
        assert!(t.contains(&Permutation::identity(3)).unwrap());
        assert!(matches!(
            c3.contains(&p(4, "(1,2)")),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn degree_mismatch_in_generators() {
        assert!(PermGroup::closure(3, &[p(4, "(1,2)")]).is_err());
    }

    #[test]
    fn large_group_uses_chain_membership() {
        let n = 10;
        let gens = vec![
            p(n, "(1,2)"),
            Permutation::from_cycles(n, &[(1..=n).collect()]).unwrap(),
        ];
        let g = PermGroup::closure_capped(n, &gens, 1000).unwrap();
        assert_eq!(g.order(), 3_628_800);
        assert!(!g.has_elements());
        assert!(g.includes(&p(n, "(3,7,9)")));
        assert!(g.elements().is_err());
    }

    #[test]
    fn conjugacy_classes_of_s4() {
        let s4 = PermGroup::closure(4, &[p(4, "(1,2)"), p(4, "(1,2,3,4)")]).unwrap();
        let mut sizes: Vec<usize> = s4.conjugacy_classes().unwrap().iter().map(|c| c.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
    }

    #[test]
    fn from_element_set_recovers_group() {
        let s3 = PermGroup::closure(3, &[p(3, "(1,2)"), p(3, "(1,2,3)")]).unwrap();
        let again = PermGroup::from_element_set(3, s3.elements().unwrap().to_vec());
        assert_eq!(again, s3);
        assert_eq!(
            PermGroup::closure(3, again.generators()).unwrap().order(),
            6
        );
    }
}
