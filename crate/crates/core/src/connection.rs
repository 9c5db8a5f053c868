//! Relations between pairs of subgroups: factorisation, connection,
//! local and global radicality, normal embedding and coprime indices.

use fixedbitset::FixedBitSet;

use crate::classes::GroupClass;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::ops::{intersection, join, normal_closure, sylow};
use crate::perm::{gcd, Permutation};
use crate::primes::{p_part, prime_divisors};
use crate::workspace::{Limits, SubId, Workspace};

/// Outcome of a connection check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Connection {
    Connected,
    /// The first pair, in element order, whose subgroup lies outside the class.
    Witness { a: Permutation, b: Permutation },
}

impl Connection {
    pub fn is_connected(&self) -> bool {
        matches!(self, Connection::Connected)
    }
}

fn require_subgroup(g: &PermGroup, h: &PermGroup) -> Result<()> {
    if g.degree() != h.degree() {
        return Err(Error::DegreeMismatch {
            expected: g.degree(),
            found: h.degree(),
        });
    }
    if !g.contains_group(h) {
        return Err(Error::ContainmentViolation);
    }
    Ok(())
}

/// `G = AB`, decided by `|A||B| = |G||A ∩ B|`.
pub fn is_factorization(g: &PermGroup, a: &PermGroup, b: &PermGroup) -> Result<bool> {
    require_subgroup(g, a)?;
    require_subgroup(g, b)?;
    let meet = intersection(a, b)?;
    Ok(a.order() * b.order() == g.order() * meet.order())
}

/// `gcd(|G:A|, |G:B|) = 1`
pub fn coprime_indices(a: &PermGroup, b: &PermGroup, g: &PermGroup) -> Result<bool> {
    require_subgroup(g, a)?;
    require_subgroup(g, b)?;
    let ia = (g.order() / a.order()) as u64;
    let ib = (g.order() / b.order()) as u64;
    Ok(gcd(ia, ib) == 1)
}

/// Every Sylow subgroup `A_p` of `A` is Sylow in `⟨A_p^G⟩`.
pub fn is_normally_embedded(a: &PermGroup, g: &PermGroup) -> Result<bool> {
    require_subgroup(g, a)?;
    for p in prime_divisors(a.order()) {
        let ap = sylow(a, p)?;
        let m = normal_closure(g, ap.generators(), g)?;
        if p_part(m.order(), p) != ap.order() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `⟨a, b⟩ ∈ L` for every `a ∈ A`, `b ∈ B`.
pub fn are_connected(a: &PermGroup, b: &PermGroup, l: &GroupClass) -> Result<Connection> {
    are_connected_restricted(a, b, l, |_| true, |_| true)
}

/// As [`are_connected`], over the elements passing the selectors. The
/// selectors must be invariant under conjugation.
pub fn are_connected_restricted(
    a: &PermGroup,
    b: &PermGroup,
    l: &GroupClass,
    sel_a: impl Fn(&Permutation) -> bool,
    sel_b: impl Fn(&Permutation) -> bool,
) -> Result<Connection> {
    let ambient = join(a, b)?;
    match Workspace::new(&ambient, Limits::default()) {
        Ok(ws) => {
            let (ia, ib) = (ws.id_of(a)?, ws.id_of(b)?);
            connected_in(&ws, ia, ib, l, &sel_a, &sel_b)
        }
        Err(e) if e.is_resource_limit() => connected_direct(a, b, l, &sel_a, &sel_b),
        Err(e) => Err(e),
    }
}

/// Pair loop without a multiplication table.
fn connected_direct(
    a: &PermGroup,
    b: &PermGroup,
    l: &GroupClass,
    sel_a: &dyn Fn(&Permutation) -> bool,
    sel_b: &dyn Fn(&Permutation) -> bool,
) -> Result<Connection> {
    budget(a.order() * b.order(), Limits::default())?;
    let mut memo = std::collections::HashMap::new();
    for x in a.elements()?.iter().filter(|x| sel_a(x)) {
        for y in b.elements()?.iter().filter(|y| sel_b(y)) {
            let h = PermGroup::closure(a.degree(), &[x.clone(), y.clone()])?;
            let ok = if h.order() <= 4096 {
                let key = h.elements()?.to_vec();
                match memo.get(&key) {
                    Some(&v) => v,
                    None => {
                        let v = l.contains(&h)?;
                        memo.insert(key, v);
                        v
                    }
                }
            } else {
                l.contains(&h)?
            };
            if !ok {
                return Ok(Connection::Witness {
                    a: x.clone(),
                    b: y.clone(),
                });
            }
        }
    }
    Ok(Connection::Connected)
}

fn budget(pairs: u128, limits: Limits) -> Result<()> {
    if pairs > limits.max_pairs as u128 {
        return Err(Error::Unsupported(format!(
            "{pairs} element pairs exceed the pair budget {}",
            limits.max_pairs
        )));
    }
    Ok(())
}

/// Connection check inside a workspace. Pairs conjugate under the common
/// normaliser of `A` and `B` to an already checked pair are skipped.
pub fn connected_in(
    ws: &Workspace,
    a: SubId,
    b: SubId,
    l: &GroupClass,
    sel_a: &dyn Fn(&Permutation) -> bool,
    sel_b: &dyn Fn(&Permutation) -> bool,
) -> Result<Connection> {
    budget(ws.size(a) as u128 * ws.size(b) as u128, ws.limits())?;
    let n = ws.order();
    let xs: Vec<u32> = ws.elements_of(a).into_iter().filter(|&x| sel_a(ws.element(x))).collect();
    let ys: Vec<u32> = ws.elements_of(b).into_iter().filter(|&y| sel_b(ws.element(y))).collect();
    if xs.is_empty() || ys.is_empty() {
        return Ok(Connection::Connected);
    }
    let mut pos_x = vec![u32::MAX; n];
    let mut pos_y = vec![u32::MAX; n];
    for (i, &x) in xs.iter().enumerate() {
        pos_x[x as usize] = i as u32;
    }
    for (j, &y) in ys.iter().enumerate() {
        pos_y[y as usize] = j as u32;
    }
    let table = ws.table();
    let k: Vec<u32> = ws
        .common_normalizer(&[a, b])
        .into_iter()
        .filter(|&k| k != table.identity())
        .collect();
    let width = ys.len();
    let mut seen = FixedBitSet::with_capacity(xs.len() * width);
    for (i, &x) in xs.iter().enumerate() {
        for (j, &y) in ys.iter().enumerate() {
            if seen.contains(i * width + j) {
                continue;
            }
            let h = ws.pair(x, y);
            if !ws.member(h, l)? {
                return Ok(Connection::Witness {
                    a: ws.element(x).clone(),
                    b: ws.element(y).clone(),
                });
            }
            for &c in &k {
                let (px, py) = (
                    pos_x[table.conj(x, c) as usize],
                    pos_y[table.conj(y, c) as usize],
                );
                if px != u32::MAX && py != u32::MAX {
                    seen.insert(px as usize * width + py as usize);
                }
            }
        }
    }
    Ok(Connection::Connected)
}

/// `⟨g^{⟨g,x⟩}⟩ ∈ X` for every `x ∈ G`.
pub fn locally_radical(g: &Permutation, ambient: &PermGroup, x: &GroupClass) -> Result<bool> {
    x.require_fitting()?;
    let ws = Workspace::new(ambient, Limits::default())?;
    locally_radical_in(&ws, ws.index(g)?, x)
}

pub fn locally_radical_in(ws: &Workspace, g: u32, x: &GroupClass) -> Result<bool> {
    for h in 0..ws.order() as u32 {
        let c = ws.normal_closure(&[g], &[g, h]);
        if !ws.member(c, x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The same property read as `g ∈ ⟨g, x⟩_X` for every `x ∈ G`.
pub fn locally_radical_via_radical(g: &Permutation, ambient: &PermGroup, x: &GroupClass) -> Result<bool> {
    x.require_fitting()?;
    let ws = Workspace::new(ambient, Limits::default())?;
    let gi = ws.index(g)?;
    for h in 0..ws.order() as u32 {
        let r = ws.radical(ws.pair(gi, h), x)?;
        if !ws.contains(r, gi) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `⟨g^G⟩ ∈ X`
pub fn globally_radical(g: &Permutation, ambient: &PermGroup, x: &GroupClass) -> Result<bool> {
    let n = normal_closure(ambient, std::slice::from_ref(g), ambient)?;
    x.contains(&n)
}

#[cfg(test)]
mod tests;
