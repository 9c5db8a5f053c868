use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::table::{CayleyTable, ElementSet};

/// Default largest order for subgroup enumeration.
pub const SUBGROUP_CAP: usize = 500;

/// All subgroups, sorted by order and then by element list.
pub fn enumerate_subgroups(g: &PermGroup) -> Result<Vec<PermGroup>> {
    enumerate_subgroups_capped(g, SUBGROUP_CAP)
}

pub fn enumerate_subgroups_capped(g: &PermGroup, cap: usize) -> Result<Vec<PermGroup>> {
    let table = checked_table(g, cap)?;
    Ok(subgroup_sets(table)
        .iter()
        .map(|(s, _)| table.to_group(s))
        .collect())
}

fn checked_table(g: &PermGroup, cap: usize) -> Result<&CayleyTable> {
    if g.order() > cap as u128 {
        return Err(Error::too_large(format!(
            "subgroup enumeration of order {} exceeds the cap {cap}",
            g.order()
        )));
    }
    g.table()
}

/// Layered closure: cyclic subgroups first, then `⟨H, g⟩` for every found
/// `H` and every `g`, to a fixpoint. Each set carries a generating list.
pub(crate) fn subgroup_sets(table: &CayleyTable) -> Vec<(ElementSet, Vec<u32>)> {
    let n = table.len() as u32;
    let mut found: HashMap<ElementSet, Vec<u32>> = HashMap::new();
    let mut frontier = Vec::new();
    for x in 0..n {
        let s = table.closure(&[x]);
        if !found.contains_key(&s) {
            let gens = if x == table.identity() { vec![] } else { vec![x] };
            found.insert(s.clone(), gens.clone());
            frontier.push((s, gens));
        }
    }
    while let Some((h, gens)) = frontier.pop() {
        for x in 0..n {
            if h.contains(x as usize) {
                continue;
            }
            let mut next_gens = gens.clone();
            next_gens.push(x);
            let s = table.closure(&next_gens);
            if !found.contains_key(&s) {
                found.insert(s.clone(), next_gens.clone());
                frontier.push((s, next_gens));
            }
        }
    }
    let mut all: Vec<_> = found.into_iter().collect();
    all.sort_by(|a, b| {
        a.0.count_ones(..)
            .cmp(&b.0.count_ones(..))
            .then_with(|| a.0.ones().cmp(b.0.ones()))
    });
    all
}

/// A factorisation `G = AB` found by search.
#[derive(Debug, Clone)]
pub struct Factorization {
    pub a: PermGroup,
    pub b: PermGroup,
}

/// Factorisations `G = AB` up to swapping the factors and simultaneous
/// conjugation, with `|A| ≥ |B|`. With `proper_only`, both factors are
/// proper subgroups.
pub fn find_factorizations(g: &PermGroup, proper_only: bool) -> Result<Vec<Factorization>> {
    let table = checked_table(g, SUBGROUP_CAP)?;
    let subs = subgroup_sets(table);
    let index: HashMap<&ElementSet, usize> = subs.iter().enumerate().map(|(i, (s, _))| (s, i)).collect();
    let n = table.len();
    // conjugation action of the generators of G on subgroup ids
    let gens = table.generator_indices();
    let action: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| {
            subs.iter()
                .map(|(s, _)| {
                    let mut img = table.empty_set();
                    for e in s.ones() {
                        img.insert(table.conj(e as u32, x) as usize);
                    }
                    index[&img]
                })
                .collect()
        })
        .collect();
    let sizes: Vec<usize> = subs.iter().map(|(s, _)| s.count_ones(..)).collect();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for j in (0..subs.len()).rev() {
        for i in 0..=j {
            let (sa, sb) = (sizes[j], sizes[i]);
            if sa * sb < n || (sa * sb) % n != 0 {
                continue;
            }
            if proper_only && (sa == n || sb == n) {
                continue;
            }
            let meet = subs[j].0.intersection(&subs[i].0).count();
            if sa * sb != n * meet || seen.contains(&(j, i)) {
                continue;
            }
            // mark the orbit of the unordered pair
            let mut stack = vec![(j, i)];
            seen.insert((j, i));
            while let Some((a, b)) = stack.pop() {
                for act in &action {
                    let (x, y) = (act[a], act[b]);
                    for key in [(x, y), (y, x)] {
                        if seen.insert(key) {
                            stack.push(key);
                        }
                    }
                }
                if seen.insert((b, a)) {
                    stack.push((b, a));
                }
            }
            out.push(Factorization {
                a: table.to_group(&subs[j].0),
                b: table.to_group(&subs[i].0),
            });
        }
    }
    Ok(out)
}
