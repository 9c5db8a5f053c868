//! Group builders, subgroup and factorisation search, and the catalog file
//! format.

mod catalog;
mod names;
mod shipped;
mod subgroups;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::{Permutation, MAX_DEGREE};

pub use catalog::{parse, parse_unvalidated, serialize, Catalog, CorpusEntry, Issue, Params};
pub use names::describe;
pub use shipped::{build_shipped_catalog, shipped_catalog, SHIPPED_SOURCE};
pub use subgroups::{
    enumerate_subgroups, enumerate_subgroups_capped, find_factorizations, Factorization,
    SUBGROUP_CAP,
};

fn check_degree(n: usize) -> Result<usize> {
    if n > MAX_DEGREE {
        return Err(Error::DegreeTooLarge(n));
    }
    Ok(n.max(1))
}

fn cycle(degree: usize, points: impl IntoIterator<Item = usize>) -> Result<Permutation> {
    Permutation::from_cycles(degree, &[points.into_iter().collect()])
}

/// `C_n` acting regularly on `n` points.
pub fn cyclic(n: usize) -> Result<PermGroup> {
    let d = check_degree(n)?;
    if n <= 1 {
        return Ok(PermGroup::trivial(1));
    }
    PermGroup::closure(d, &[cycle(d, 1..=n)?])
}

/// The symmetry group of the regular `n`-gon, of order `2n`, for `n ≥ 3`.
pub fn dihedral(n: usize) -> Result<PermGroup> {
    let d = check_degree(n)?;
    if n < 3 {
        return Err(Error::Unsupported(format!("dihedral group on {n} points")));
    }
    let refl: Vec<Vec<usize>> = (2..=n / 2 + n % 2)
        .map(|i| vec![i, n + 2 - i])
        .filter(|c| c[0] != c[1])
        .collect();
    PermGroup::closure(d, &[cycle(d, 1..=n)?, Permutation::from_cycles(d, &refl)?])
}

pub fn symmetric(n: usize) -> Result<PermGroup> {
    let d = check_degree(n)?;
    if n <= 1 {
        return Ok(PermGroup::trivial(1));
    }
    PermGroup::closure(d, &[cycle(d, [1, 2])?, cycle(d, 1..=n)?])
}

pub fn alternating(n: usize) -> Result<PermGroup> {
    let d = check_degree(n)?;
    if n <= 2 {
        return Ok(PermGroup::trivial(d));
    }
    let gens: Vec<Permutation> = (3..=n)
        .map(|k| cycle(d, [1, 2, k]))
        .collect::<Result<_>>()?;
    PermGroup::closure(d, &gens)
}

/// `G × H` on the disjoint union of the point sets, `G` first.
pub fn direct_product(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    let d = check_degree(g.degree() + h.degree())?;
    let shift = g.degree();
    let mut gens = Vec::new();
    for x in g.generators() {
        let mut images: Vec<usize> = x.images().iter().map(|&p| p as usize).collect();
        images.extend(shift..d);
        gens.push(Permutation::from_images(images)?);
    }
    for y in h.generators() {
        let mut images: Vec<usize> = (0..shift).collect();
        images.extend(y.images().iter().map(|&p| p as usize + shift));
        gens.push(Permutation::from_images(images)?);
    }
    PermGroup::closure(d, &gens)
}

pub fn from_generators(degree: usize, gens: &[Permutation]) -> Result<PermGroup> {
    PermGroup::closure(check_degree(degree)?, gens)
}

#[cfg(test)]
mod tests;
