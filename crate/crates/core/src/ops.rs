//! Subgroup constructions and predicates on permutation groups.

use crate::error::{Error, Result};
use crate::group::{check_degrees, BfsClosure, PermGroup, DEFAULT_ELEMENT_CAP};
use crate::perm::Permutation;
use crate::primes::{p_part, PrimeSet};

fn same_degree(a: &PermGroup, b: &PermGroup) -> Result<()> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            expected: a.degree(),
            found: b.degree(),
        });
    }
    Ok(())
}

/// `⟨A, B⟩`
pub fn join(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    same_degree(a, b)?;
    if a.contains_group(b) {
        return Ok(a.clone());
    }
    if b.contains_group(a) {
        return Ok(b.clone());
    }
    let gens: Vec<_> = a.generators().iter().chain(b.generators()).cloned().collect();
    PermGroup::closure(a.degree(), &gens)
}

/// `⟨S^X⟩`, the smallest subgroup containing `S` normalised by `X`.
pub fn normal_closure(ambient: &PermGroup, s: &[Permutation], x: &PermGroup) -> Result<PermGroup> {
    let degree = ambient.degree();
    check_degrees(degree, s)?;
    same_degree(ambient, x)?;
    if !s.iter().all(|g| ambient.includes(g)) || !ambient.contains_group(x) {
        return Err(Error::ContainmentViolation);
    }
    conjugation_closure(degree, s, x.generators())
}

/// Closure of `s` under products and conjugation by `conj`; no containment checks.
pub(crate) fn conjugation_closure(
    degree: usize,
    s: &[Permutation],
    conj: &[Permutation],
) -> Result<PermGroup> {
    let mut bfs = BfsClosure::new(degree);
    let mut gens: Vec<Permutation> = Vec::new();
    let mut pending: Vec<Permutation> = s.to_vec();
    let mut overflow = false;
    'grow: loop {
        let batch = std::mem::take(&mut pending);
        for (i, g) in batch.iter().enumerate() {
            if bfs.contains(g) {
                continue;
            }
            if bfs.add(g.clone(), DEFAULT_ELEMENT_CAP).is_err() {
                overflow = true;
                gens.extend(batch[i..].iter().cloned());
                break 'grow;
            }
            gens.push(g.clone());
        }
        for g in &gens {
            for x in conj {
                let c = g.conjugate_by(x);
                if !bfs.contains(&c) {
                    pending.push(c);
                }
            }
        }
        if pending.is_empty() {
            break;
        }
    }
    if !overflow {
        return Ok(bfs.into_group(degree));
    }
    // Large result: fall back to stabilizer-chain membership.
    let mut h = PermGroup::closure(degree, &gens)?;
    loop {
        let mut added = false;
        let mut new_gens = h.generators().to_vec();
        for g in h.generators() {
            for x in conj {
                let c = g.conjugate_by(x);
                if !h.includes(&c) && !new_gens.contains(&c) {
                    new_gens.push(c);
                    added = true;
                }
            }
        }
        if !added {
            return Ok(h);
        }
        h = PermGroup::closure(degree, &new_gens)?;
    }
}

/// `[H, K]`, the normal closure in `⟨H, K⟩` of generator commutators.
pub fn commutator_subgroup(h: &PermGroup, k: &PermGroup) -> Result<PermGroup> {
    same_degree(h, k)?;
    let mut comms = Vec::new();
    for a in h.generators() {
        for b in k.generators() {
            let c = a.commutator(b);
            if !c.is_identity() && !comms.contains(&c) {
                comms.push(c);
            }
        }
    }
    if comms.is_empty() {
        return Ok(PermGroup::trivial(h.degree()));
    }
    let conj: Vec<_> = h.generators().iter().chain(k.generators()).cloned().collect();
    conjugation_closure(h.degree(), &comms, &conj)
}

/// `G′`
pub fn derived_subgroup(g: &PermGroup) -> Result<PermGroup> {
    commutator_subgroup(g, g)
}

/// `A ∩ B` by filtering the smaller operand's elements.
pub fn intersection(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    same_degree(a, b)?;
    let (small, large) = match (a.has_elements(), b.has_elements()) {
        (true, true) if a.order() <= b.order() => (a, b),
        (true, true) => (b, a),
        (true, false) => (a, b),
        (false, true) => (b, a),
        (false, false) => {
            return Err(Error::too_large(
                "neither operand of the intersection has an element list",
            ))
        }
    };
    if large.contains_group(small) {
        return Ok(small.clone());
    }
    let common: Vec<Permutation> = small
        .elements()?
        .iter()
        .filter(|g| large.includes(g))
        .cloned()
        .collect();
    Ok(PermGroup::from_element_set(a.degree(), common))
}

/// Elements of `G` commuting with every element of `S`.
pub fn centralizer(g: &PermGroup, s: &[Permutation]) -> Result<PermGroup> {
    check_degrees(g.degree(), s)?;
    let els: Vec<Permutation> = g
        .elements()?
        .iter()
        .filter(|x| s.iter().all(|y| x.commutes_with(y)))
        .cloned()
        .collect();
    Ok(PermGroup::from_element_set(g.degree(), els))
}

pub fn center(g: &PermGroup) -> Result<PermGroup> {
    centralizer(g, g.generators())
}

/// `N_G(H)`
pub fn normalizer(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    same_degree(g, h)?;
    let els: Vec<Permutation> = g
        .elements()?
        .iter()
        .filter(|x| h.generators().iter().all(|y| h.includes(&y.conjugate_by(x))))
        .cloned()
        .collect();
    Ok(PermGroup::from_element_set(g.degree(), els))
}

/// `N ⊴ G`; `N` must be a subgroup of `G`.
pub fn is_normal(n: &PermGroup, g: &PermGroup) -> Result<bool> {
    same_degree(n, g)?;
    if !g.contains_group(n) {
        return Err(Error::ContainmentViolation);
    }
    Ok(n.generators()
        .iter()
        .all(|a| g.generators().iter().all(|x| n.includes(&a.conjugate_by(x)))))
}

/// Follows `K₀ = G, K_{i+1} = ⟨H^{K_i}⟩` to its stable term.
pub fn is_subnormal(h: &PermGroup, g: &PermGroup) -> Result<bool> {
    same_degree(h, g)?;
    if !g.contains_group(h) {
        return Err(Error::ContainmentViolation);
    }
    let mut k = g.clone();
    loop {
        if k.order() == h.order() {
            return Ok(true);
        }
        let next = conjugation_closure(g.degree(), h.generators(), k.generators())?;
        if next.order() == k.order() {
            return Ok(false);
        }
        k = next;
    }
}

/// A Sylow `p`-subgroup, grown through normalizers from a cyclic subgroup
/// of maximal `p`-power order.
pub fn sylow(g: &PermGroup, p: u64) -> Result<PermGroup> {
    let target = p_part(g.order(), p);
    if target == 1 {
        return Ok(PermGroup::trivial(g.degree()));
    }
    let els = g.elements()?;
    let start = els
        .iter()
        .filter(|x| x.is_p_element(p))
        .max_by_key(|x| (x.order(), std::cmp::Reverse((*x).clone())))
        .expect("p divides |G| so a p-element exists");
    let mut sub = PermGroup::closure(g.degree(), std::slice::from_ref(start))?;
    while sub.order() < target {
        let norm = normalizer(g, &sub)?;
        let y = norm
            .elements()?
            .iter()
            .find(|y| y.is_p_element(p) && !sub.includes(y))
            .cloned()
            .expect("a non-Sylow p-subgroup has a p-element in its normalizer outside it");
        let mut gens = sub.generators().to_vec();
        gens.push(y);
        sub = PermGroup::closure(g.degree(), &gens)?;
    }
    Ok(sub)
}

/// The commuting factorisation `g = u·v` with `u` a π-element and `v` a
/// π′-element, both powers of `g`.
pub fn element_order_parts(g: &Permutation, pi: &PrimeSet) -> (Permutation, Permutation) {
    let n = g.order();
    let m1 = pi.part_of(n as u128) as u64;
    let m2 = n / m1;
    let id = Permutation::identity(g.degree());
    if m1 == 1 {
        return (id, g.clone());
    }
    if m2 == 1 {
        return (g.clone(), id);
    }
    // e ≡ 1 (mod m1), e ≡ 0 (mod m2)
    let e = (m2 as u128 * mod_inverse(m2 % m1, m1) as u128 % n as u128) as i64;
    let u = g.pow(e);
    let v = g.pow((1 - e).rem_euclid(n as i64));
    (u, v)
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    old_s.rem_euclid(m as i128) as u64
}
