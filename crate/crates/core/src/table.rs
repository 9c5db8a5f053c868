//! Multiplication table of a small group, with subgroups as bitsets over
//! its sorted element list.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Largest group order for which a table is built.
pub const TABLE_CAP: usize = 2048;

pub type ElementSet = FixedBitSet;

pub struct CayleyTable {
    n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    identity: u32,
    degree: usize,
    elements: Vec<Permutation>,
    gens: Vec<u32>,
}

impl CayleyTable {
    pub fn new(group: &PermGroup) -> Result<Self> {
        let els = group.elements()?;
        let n = els.len();
        if n > TABLE_CAP {
            return Err(Error::too_large(format!(
                "order {n} exceeds the table cap {TABLE_CAP}"
            )));
        }
        let mut mul = vec![0u32; n * n];
        for (i, a) in els.iter().enumerate() {
            for (j, b) in els.iter().enumerate() {
                mul[i * n + j] = els.binary_search(&a.then(b)).expect("closed") as u32;
            }
        }
        let identity = els
            .binary_search(&Permutation::identity(group.degree()))
            .expect("identity present") as u32;
        let mut inv = vec![0u32; n];
        for i in 0..n {
            for j in 0..n {
                if mul[i * n + j] == identity {
                    inv[i] = j as u32;
                    break;
                }
            }
        }
        let gens = group
            .generators()
            .iter()
            .map(|g| els.binary_search(g).expect("generator in group") as u32)
            .collect();
        Ok(CayleyTable {
            n,
            mul,
            inv,
            identity,
            degree: group.degree(),
            elements: els.to_vec(),
            gens,
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.n + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }

    /// `x⁻¹ a x`
    #[inline]
    pub fn conj(&self, a: u32, x: u32) -> u32 {
        self.mul(self.mul(self.inv(x), a), x)
    }

    pub fn index(&self, g: &Permutation) -> Option<u32> {
        self.elements.binary_search(g).ok().map(|i| i as u32)
    }

    pub fn element(&self, i: u32) -> &Permutation {
        &self.elements[i as usize]
    }

    pub fn empty_set(&self) -> ElementSet {
        FixedBitSet::with_capacity(self.n)
    }

    /// Subgroup generated by the given elements.
    pub fn closure(&self, gens: &[u32]) -> ElementSet {
        let mut set = self.empty_set();
        set.insert(self.identity as usize);
        self.extend(&mut set, gens);
        set
    }

    /// Grow a subgroup by extra generators. The existing members are used as
    /// generators too, so `set` need not carry its own generating set.
    pub fn extend(&self, set: &mut ElementSet, gens: &[u32]) {
        if gens.iter().all(|&g| set.contains(g as usize)) {
            return;
        }
        let mut step: Vec<u32> = gens.to_vec();
        step.extend(set.ones().map(|i| i as u32).filter(|&e| e != self.identity));
        let mut stack: Vec<u32> = set.ones().map(|i| i as u32).collect();
        while let Some(x) = stack.pop() {
            for &s in &step {
                let y = self.mul(x, s);
                if !set.contains(y as usize) {
                    set.insert(y as usize);
                    stack.push(y);
                }
            }
        }
    }

    /// Closure under conjugation by `conj` (and products).
    pub fn normal_closure(&self, seeds: &[u32], conj: &[u32]) -> ElementSet {
        let mut set = self.closure(seeds);
        loop {
            let missing: Vec<u32> = set
                .ones()
                .flat_map(|a| conj.iter().map(move |&x| (a as u32, x)))
                .map(|(a, x)| self.conj(a, x))
                .filter(|c| !set.contains(*c as usize))
                .collect();
            if missing.is_empty() {
                return set;
            }
            self.extend(&mut set, &missing);
        }
    }

    pub fn to_group(&self, set: &ElementSet) -> PermGroup {
        let members: Vec<Permutation> = set.ones().map(|i| self.elements[i].clone()).collect();
        PermGroup::from_element_set(self.degree, members)
    }

    pub fn set_of(&self, h: &PermGroup) -> Result<ElementSet> {
        let mut set = self.empty_set();
        for g in h.elements()? {
            let i = self.index(g).ok_or(Error::ContainmentViolation)?;
            set.insert(i as usize);
        }
        Ok(set)
    }

    pub fn generator_indices(&self) -> Vec<u32> {
        self.gens.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s4() -> PermGroup {
        let gens = [
            Permutation::parse_cycles(4, "(1,2)").unwrap(),
            Permutation::parse_cycles(4, "(1,2,3,4)").unwrap(),
        ];
        PermGroup::closure(4, &gens).unwrap()
    }

    #[test]
    fn table_closure_matches_group_closure() {
        let g = s4();
        let t = CayleyTable::new(&g).unwrap();
        let a = t.index(&Permutation::parse_cycles(4, "(1,2)(3,4)").unwrap()).unwrap();
        let b = t.index(&Permutation::parse_cycles(4, "(1,3)").unwrap()).unwrap();
        assert_eq!(t.closure(&[a, b]).count_ones(..), 8);
        assert_eq!(t.normal_closure(&[a], &t.generator_indices()).count_ones(..), 4);
        let id = t.identity();
        assert_eq!(t.mul(a, t.inv(a)), id);
        let c3 = t.closure(&[t.index(&Permutation::parse_cycles(4, "(1,2,3)").unwrap()).unwrap()]);
        let mut d = c3.clone();
        t.extend(&mut d, &[a]);
        assert_eq!(d.count_ones(..), 12);
    }
}
