use crate::error::Result;
use crate::group::PermGroup;
use crate::ops::{center, commutator_subgroup, derived_subgroup, is_normal};
use crate::primes::PrimeSet;
use crate::quotient::QuotientMap;
use crate::Error;

use super::radical::{join_all, radical_by};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesKind {
    Derived,
    LowerCentral,
    UpperCentral,
    Fitting,
    UpperPi(PrimeSet),
}

/// A chain of subgroups followed to its stable term. The stable term is
/// repeated at the end, so `terms` ends in two equal groups.
#[derive(Debug, Clone)]
pub struct SeriesResult {
    pub terms: Vec<PermGroup>,
    pub stabilized: bool,
    /// Strict steps; for `UpperPi`, the number of π-factors.
    pub length: usize,
}

impl SeriesResult {
    pub fn last(&self) -> &PermGroup {
        self.terms.last().expect("series has at least one term")
    }

    /// `terms[i]`, or the stable term past the end.
    pub fn term(&self, i: usize) -> &PermGroup {
        self.terms.get(i).unwrap_or_else(|| self.last())
    }
}

fn follow(start: PermGroup, mut step: impl FnMut(&PermGroup) -> Result<PermGroup>) -> Result<SeriesResult> {
    let mut terms = vec![start];
    loop {
        let next = step(terms.last().unwrap())?;
        let same = next.order() == terms.last().unwrap().order();
        terms.push(next);
        if same {
            let length = terms.len() - 2;
            return Ok(SeriesResult {
                terms,
                stabilized: true,
                length,
            });
        }
    }
}

/// Compute one of the standard series of `g`.
pub fn series(g: &PermGroup, kind: &SeriesKind) -> Result<SeriesResult> {
    match kind {
        SeriesKind::Derived => follow(g.clone(), derived_subgroup),
        SeriesKind::LowerCentral => follow(g.clone(), |x| commutator_subgroup(x, g)),
        SeriesKind::UpperCentral => follow(PermGroup::trivial(g.degree()), |z| {
            let q = QuotientMap::new_unchecked(g, z)?;
            q.pullback(&center(q.image())?)
        }),
        SeriesKind::Fitting => follow(PermGroup::trivial(g.degree()), |f| {
            let q = QuotientMap::new_unchecked(g, f)?;
            q.pullback(&fitting_subgroup(q.image())?)
        }),
        SeriesKind::UpperPi(pi) => upper_pi_series(g, pi),
    }
}

/// `1 = P₀ ≤ N₀ ≤ P₁ ≤ N₁ ≤ …` with `N_i/P_i = O_{π′}(G/P_i)` and
/// `P_{i+1}/N_i = O_π(G/N_i)`. Only strict steps are kept.
fn upper_pi_series(g: &PermGroup, pi: &PrimeSet) -> Result<SeriesResult> {
    let pi_prime = pi.complement();
    let mut terms = vec![PermGroup::trivial(g.degree())];
    let mut pi_factors = 0;
    let mut idle = 0;
    let mut use_pi = false;
    while idle < 2 {
        let cur = terms.last().unwrap().clone();
        let q = QuotientMap::new_unchecked(g, &cur)?;
        let set = if use_pi { pi } else { &pi_prime };
        let next = q.pullback(&o_pi(q.image(), set)?)?;
        if next.order() > cur.order() {
            if use_pi {
                pi_factors += 1;
            }
            terms.push(next);
            idle = 0;
        } else {
            idle += 1;
        }
        use_pi = !use_pi;
    }
    let stable = terms.last().unwrap().clone();
    terms.push(stable);
    Ok(SeriesResult {
        terms,
        stabilized: true,
        length: pi_factors,
    })
}

/// `O_π(G)`, the largest normal π-subgroup.
pub fn o_pi(g: &PermGroup, pi: &PrimeSet) -> Result<PermGroup> {
    if pi.divides_only(g.order()) {
        return Ok(g.clone());
    }
    radical_by(g, |n| Ok(pi.divides_only(n.order())))
}

/// `F(G)`.
pub fn fitting_subgroup(g: &PermGroup) -> Result<PermGroup> {
    if g.order() == 1 || super::is_nilpotent(g)? {
        return Ok(g.clone());
    }
    // F(G) is the product of the O_p(G)
    let parts: Vec<PermGroup> = crate::primes::prime_divisors(g.order())
        .into_iter()
        .map(|p| o_pi(g, &PrimeSet::single(p)))
        .collect::<Result<_>>()?;
    join_all(g.degree(), &parts)
}

/// `F_k(G)`; `F_0 = 1`.
pub fn fitting_term(g: &PermGroup, k: usize) -> Result<PermGroup> {
    let mut f = PermGroup::trivial(g.degree());
    for _ in 0..k {
        if f.order() == g.order() {
            break;
        }
        let q = QuotientMap::new_unchecked(g, &f)?;
        let next = q.pullback(&fitting_subgroup(q.image())?)?;
        if next.order() == f.order() {
            break;
        }
        f = next;
    }
    Ok(f)
}

/// Nilpotent length, or `None` for insoluble groups.
pub fn nilpotent_length(g: &PermGroup) -> Result<Option<usize>> {
    let s = series(g, &SeriesKind::Fitting)?;
    Ok((s.last().order() == g.order()).then_some(s.length))
}

/// π-length along the upper π-series, or `None` if `g` is not π-separable.
pub fn pi_length(g: &PermGroup, pi: &PrimeSet) -> Result<Option<usize>> {
    let s = upper_pi_series(g, pi)?;
    Ok((s.last().order() == g.order()).then_some(s.length))
}

/// Preimage of `Z_∞(G/N)`.
pub fn hypercenter_mod(g: &PermGroup, n: &PermGroup) -> Result<PermGroup> {
    if !is_normal(n, g)? {
        return Err(Error::NotNormal);
    }
    let q = QuotientMap::new_unchecked(g, n)?;
    let z = series(q.image(), &SeriesKind::UpperCentral)?;
    q.pullback(z.last())
}

/// `Z_∞(G)`
pub fn hypercenter(g: &PermGroup) -> Result<PermGroup> {
    Ok(series(g, &SeriesKind::UpperCentral)?.last().clone())
}
