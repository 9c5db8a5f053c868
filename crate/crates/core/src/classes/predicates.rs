use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::ops::{commutator_subgroup, derived_subgroup};
use crate::primes::{prime_divisors, PrimeSet};
use crate::quotient::QuotientMap;

use super::radical::{normal_subgroups_capped, DEFAULT_ORACLE_CAP};
use super::series::{fitting_term, o_pi, pi_length, series, SeriesKind};

pub fn is_abelian(g: &PermGroup) -> bool {
    g.is_abelian()
}

pub fn is_nilpotent(g: &PermGroup) -> Result<bool> {
    if prime_divisors(g.order()).len() <= 1 {
        return Ok(true);
    }
    let mut gamma = g.clone();
    loop {
        let next = commutator_subgroup(&gamma, g)?;
        if next.is_trivial() {
            return Ok(true);
        }
        if next.order() == gamma.order() {
            return Ok(false);
        }
        gamma = next;
    }
}

pub fn is_soluble(g: &PermGroup) -> Result<bool> {
    // Burnside's p^a q^b theorem
    if prime_divisors(g.order()).len() <= 2 {
        return Ok(true);
    }
    Ok(series(g, &SeriesKind::Derived)?.last().is_trivial())
}

pub fn is_pi_group(g: &PermGroup, pi: &PrimeSet) -> bool {
    pi.divides_only(g.order())
}

/// Soluble with `F_k(G) = G`.
pub fn is_n_k(g: &PermGroup, k: u32) -> Result<bool> {
    if k == 0 {
        return Ok(g.is_trivial());
    }
    Ok(fitting_term(g, k as usize)?.order() == g.order())
}

pub fn is_metanilpotent(g: &PermGroup) -> Result<bool> {
    is_n_k(g, 2)
}

/// `G′` nilpotent.
pub fn is_na(g: &PermGroup) -> Result<bool> {
    is_nilpotent(&derived_subgroup(g)?)
}

/// Soluble with `G/O_π(G)` a ρ-group.
pub fn is_spi_srho(g: &PermGroup, pi: &PrimeSet, rho: &PrimeSet) -> Result<bool> {
    if !is_soluble(g)? {
        return Ok(false);
    }
    let o = o_pi(g, pi)?;
    Ok(rho.divides_only(g.order() / o.order()))
}

pub fn is_pi_separable(g: &PermGroup, pi: &PrimeSet) -> Result<bool> {
    Ok(pi_length(g, pi)?.is_some())
}

/// Every chief factor has prime order. Decided by descending through a
/// minimal normal subgroup at each step.
pub fn is_supersoluble(g: &PermGroup) -> Result<bool> {
    is_supersoluble_capped(g, DEFAULT_ORACLE_CAP)
}

pub fn is_supersoluble_capped(g: &PermGroup, cap: usize) -> Result<bool> {
    if g.is_trivial() || is_nilpotent(g)? {
        return Ok(true);
    }
    if g.order() > cap as u128 {
        return Err(Error::Unsupported(format!(
            "supersolubility of a group of order {} exceeds the oracle cap {cap}",
            g.order()
        )));
    }
    if !is_soluble(g)? {
        return Ok(false);
    }
    let normals = normal_subgroups_capped(g, cap)?;
    let minimal = normals
        .iter()
        .find(|n| !n.is_trivial())
        .expect("G itself is a nontrivial normal subgroup");
    if prime_divisors(minimal.order()) != [minimal.order() as u64] {
        return Ok(false);
    }
    let q = QuotientMap::new_unchecked(g, minimal)?;
    is_supersoluble_capped(q.image(), cap)
}
