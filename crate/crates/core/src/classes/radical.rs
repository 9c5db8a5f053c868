use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::ops::derived_subgroup;
use crate::perm::Permutation;
use crate::primes::PrimeSet;
use crate::quotient::QuotientMap;
use crate::table::TABLE_CAP;

use super::series::{series, SeriesKind};
use super::{ClassKind, GroupClass};

/// Largest group order for which the normal-subgroup lattice is enumerated.
pub const DEFAULT_ORACLE_CAP: usize = 2000;

pub(crate) fn join_all(degree: usize, parts: &[PermGroup]) -> Result<PermGroup> {
    let gens: Vec<Permutation> = parts
        .iter()
        .flat_map(|p| p.generators().iter().cloned())
        .collect();
    PermGroup::closure(degree, &gens)
}

/// Join of the `⟨g^G⟩` accepted by `keep`, over class representatives `g`.
pub(crate) fn radical_by(
    g: &PermGroup,
    mut keep: impl FnMut(&PermGroup) -> Result<bool>,
) -> Result<PermGroup> {
    let mut parts = Vec::new();
    for c in g.class_closures()? {
        if !c.is_trivial() && keep(c)? {
            parts.push(c.clone());
        }
    }
    join_all(g.degree(), &parts)
}

/// `G_X`: the largest normal subgroup of `g` in the Fitting class `x`.
pub fn radical(g: &PermGroup, x: &GroupClass) -> Result<PermGroup> {
    x.require_fitting()?;
    match x.kind() {
        ClassKind::Nilpotent => super::fitting_subgroup(g),
        ClassKind::PiGroups(pi) => super::o_pi(g, pi),
        _ => {
            if x.contains(g)? {
                return Ok(g.clone());
            }
            radical_by(g, |n| x.contains(n))
        }
    }
}

/// `G^F`: the smallest normal subgroup of `g` with quotient in the
/// formation `f`.
pub fn residual(g: &PermGroup, f: &GroupClass) -> Result<PermGroup> {
    f.require_formation()?;
    match f.kind() {
        ClassKind::Trivial => Ok(g.clone()),
        ClassKind::Abelian => derived_subgroup(g),
        ClassKind::Nilpotent => Ok(series(g, &SeriesKind::LowerCentral)?.last().clone()),
        ClassKind::Soluble => Ok(series(g, &SeriesKind::Derived)?.last().clone()),
        ClassKind::PiGroups(pi) => pi_prime_generated(g, pi),
        _ => {
            if f.contains(g)? {
                return Ok(PermGroup::trivial(g.degree()));
            }
            // the normal subgroups with quotient in a formation are closed
            // under intersection, so the first hit by order is the least one
            let mut normals = normal_subgroups(g)?;
            normals.sort_by_key(|n| n.order());
            for n in normals {
                if f.contains(QuotientMap::new_unchecked(g, &n)?.image())? {
                    return Ok(n);
                }
            }
            unreachable!("G/G is trivial and every formation contains it")
        }
    }
}

/// `⟨π′-elements of G⟩`
fn pi_prime_generated(g: &PermGroup, pi: &PrimeSet) -> Result<PermGroup> {
    let pi_prime = pi.complement();
    let gens: Vec<Permutation> = g
        .class_representatives()?
        .into_iter()
        .filter(|x| !x.is_identity() && pi_prime.divides_only(x.order() as u128))
        .collect();
    crate::ops::conjugation_closure(g.degree(), &gens, g.generators())
}

/// The residual as an intersection over the whole normal-subgroup lattice.
pub fn residual_generic(g: &PermGroup, f: &GroupClass) -> Result<PermGroup> {
    f.require_formation()?;
    let mut acc = g.clone();
    for n in normal_subgroups(g)? {
        if f.contains(QuotientMap::new_unchecked(g, &n)?.image())? {
            acc = crate::ops::intersection(&acc, &n)?;
        }
    }
    Ok(acc)
}

/// All normal subgroups, sorted by order, as the join-closure of the
/// normal closures of class representatives.
pub fn normal_subgroups(g: &PermGroup) -> Result<Vec<PermGroup>> {
    normal_subgroups_capped(g, DEFAULT_ORACLE_CAP)
}

pub fn normal_subgroups_capped(g: &PermGroup, cap: usize) -> Result<Vec<PermGroup>> {
    let cap = cap.min(TABLE_CAP);
    if g.order() > cap as u128 {
        return Err(Error::too_large(format!(
            "normal subgroup enumeration of order {} exceeds the oracle cap {cap}",
            g.order()
        )));
    }
    let table = g.table()?;
    let atoms: Vec<Vec<u32>> = g
        .class_closures()?
        .iter()
        .filter(|c| !c.is_trivial())
        .map(|c| {
            c.generators()
                .iter()
                .map(|x| table.index(x).expect("closure inside G"))
                .collect()
        })
        .collect();
    let bottom = table.closure(&[]);
    let mut seen = HashSet::new();
    seen.insert(bottom.clone());
    let mut queue = vec![bottom];
    while let Some(n) = queue.pop() {
        for a in &atoms {
            if a.iter().all(|&x| n.contains(x as usize)) {
                continue;
            }
            let mut m = n.clone();
            table.extend(&mut m, a);
            if seen.insert(m.clone()) {
                queue.push(m);
            }
        }
    }
    let mut sets: Vec<_> = seen.into_iter().collect();
    sets.sort_by(|a, b| {
        a.count_ones(..)
            .cmp(&b.count_ones(..))
            .then_with(|| a.ones().cmp(b.ones()))
    });
    Ok(sets.iter().map(|s| table.to_group(s)).collect())
}
