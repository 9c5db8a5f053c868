use crate::classes::{self, GroupClass};
use crate::error::Result;
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::primes::PrimeSet;
use crate::quotient::quotient;
use crate::workspace::Workspace;

use super::structure::{by_class, connected, elements, factorized, indicator, set_equality};
use super::{hypothesis, run, show, Builder, Clause, Instance, Named, Verdict, VerifyCtx};

/// `N∘F`. For a class that is Q-closed but not a formation, membership is
/// still decided on `G/F(G)`.
fn nf_class(f: &GroupClass) -> Result<GroupClass> {
    if f.flags().formation {
        return GroupClass::nilpotent_by(f);
    }
    let inner = f.clone();
    let mut flags = f.flags();
    flags.fitting_class = false;
    Ok(GroupClass::custom(format!("N({})", f.name()), flags, move |g| {
        let q = quotient(g, &classes::fitting_subgroup(g)?)?;
        inner.contains(q.image())
    }))
}

pub fn verify_cor_1_8(ctx: &VerifyCtx, g: Named, a: Named, b: Named, f: &GroupClass) -> Verdict {
    run("cor1.8", Instance::pair(g.name, a.name, b.name).with_class(f.name()), || {
        let (ws, ia, ib) = factorized!(ctx, g, a, b);
        let mut out = Builder::new();
        if !connected(&ws, ia, ib, &GroupClass::nilpotent_length(2), &mut out, "n2")? {
            return hypothesis("factors are not N^2-connected");
        }
        let fl = f.flags();
        let q_fitting = fl.q_closed && fl.fitting_class;
        let part1 = q_fitting || (fl.formation && (fl.saturated || fl.contains_all_nilpotent));
        let part2 = q_fitting
            || (fl.formation && (fl.saturated || (fl.soluble_only && fl.contains_all_nilpotent)));
        if !part1 && !part2 {
            return hypothesis(format!("class {} meets neither flag condition", f.name()));
        }
        let nf = nf_class(f)?;
        let whole = ws.whole();
        let (a_f, b_f) = (ws.member(ia, f)?, ws.member(ib, f)?);
        let (a_nf, b_nf) = (ws.member(ia, &nf)?, ws.member(ib, &nf)?);
        out.stmt("A_in_F", a_f)
            .stmt("B_in_F", b_f)
            .stmt("A_B_in_F", a_f && b_f)
            .stmt("G_in_NF", ws.member(whole, &nf)?)
            .stmt("A_in_NF", a_nf)
            .stmt("B_in_NF", b_nf)
            .stmt("A_B_in_NF", a_nf && b_nf);
        if part1 {
            out.clause(Clause::Implies("A_B_in_F", "G_in_NF"));
        }
        if part2 {
            out.clause(Clause::Implies("G_in_NF", "A_B_in_NF"));
        }
        out.done()
    })
}

pub fn verify_cor_1_9(ctx: &VerifyCtx, g: Named, a: Named, b: Named, pi: &PrimeSet) -> Verdict {
    run("cor1.9", Instance::pair(g.name, a.name, b.name).with_pi(pi), || {
        let (ws, ia, ib) = factorized!(ctx, g, a, b);
        let mut out = Builder::new();
        if !connected(&ws, ia, ib, &GroupClass::nilpotent_length(2), &mut out, "n2")? {
            return hypothesis("factors are not N^2-connected");
        }
        let (la, lb) = (classes::pi_length(a.group, pi)?, classes::pi_length(b.group, pi)?);
        let (Some(la), Some(lb)) = (la, lb) else {
            return hypothesis("a factor is not pi-separable");
        };
        let l = la.max(lb);
        let separable = classes::is_pi_separable(g.group, pi)?;
        let len = classes::pi_length(g.group, pi)?;
        out.stmt("G_pi_separable", separable)
            .stmt("length_bound", len.is_some_and(|n| n <= l + 1));
        out.clause(Clause::True("G_pi_separable")).clause(Clause::True("length_bound"));
        out.detail("l", l.to_string());
        out.detail("pi_length(G)", len.map_or("none".into(), |n| n.to_string()));
        if len == Some(l + 1) {
            out.observe(format!("sharp: pi_length(G) = {} = l + 1", l + 1));
        }
        out.done()
    })
}

/// `{g : ⟨g, h⟩ ∈ N^k for all h}` as an indicator vector.
fn nk_everywhere(ws: &Workspace, k: usize) -> Result<Vec<bool>> {
    let nk = GroupClass::nilpotent_length(k as u32);
    let n = ws.order() as u32;
    by_class(ws, |x| {
        for y in 0..n {
            if !ws.member(ws.pair(x, y), &nk)? {
                return Ok(false);
            }
        }
        Ok(true)
    })
}

/// The elements `g` with `⟨g, h⟩ ∈ N^k` for every `h ∈ G`.
pub fn cor_1_11_set(ctx: &VerifyCtx, g: &PermGroup, k: usize) -> Result<Vec<Permutation>> {
    let ws = ctx.workspace(g)?;
    Ok(elements(&ws, &nk_everywhere(&ws, k)?))
}

pub fn verify_cor_1_11(ctx: &VerifyCtx, g: Named, k: usize) -> Verdict {
    run("cor1.11", Instance::group(g.name).with_k(k), || {
        if k == 0 {
            return hypothesis("k must be at least 1");
        }
        let ws = ctx.workspace(g.group)?;
        let mut out = Builder::new();
        let l = nk_everywhere(&ws, k)?;
        let base = ctx.fitting_term(g.group, k - 1)?;
        let z = ws.id_of(&classes::hypercenter_mod(g.group, &base)?)?;
        set_equality(&ws, &mut out, ("L", &l), ("Z", &indicator(&ws, z)), "L_in_Z", "Z_in_L");
        out.done()
    })
}

/// The three element sets: locally `N^k`-radical, the two-generator
/// condition, and `F_k(G)`.
fn cor_1_13_data(ctx: &VerifyCtx, ws: &Workspace, k: usize) -> Result<[Vec<bool>; 3]> {
    let nk = GroupClass::nilpotent_length(k as u32);
    let nk1 = GroupClass::nilpotent_length(k as u32 + 1);
    let n = ws.order() as u32;
    let s1 = by_class(ws, |x| {
        for y in 0..n {
            if !ws.contains(ws.radical(ws.pair(x, y), &nk)?, x) {
                return Ok(false);
            }
        }
        Ok(true)
    })?;
    let radical = ws.radical(ws.whole(), &nk)?;
    let fk_elements = ws.elements_of(radical);
    let s2 = by_class(ws, |x| {
        for &y in &fk_elements {
            if !ws.member(ws.pair(x, y), &nk)? {
                return Ok(false);
            }
        }
        for y in 0..n {
            if !ws.member(ws.pair(x, y), &nk1)? {
                return Ok(false);
            }
        }
        Ok(true)
    })?;
    let s3 = indicator(ws, ws.id_of(&ctx.fitting_term(ws.group(), k)?)?);
    Ok([s1, s2, s3])
}

pub fn cor_1_13_sets(ctx: &VerifyCtx, g: &PermGroup, k: usize) -> Result<[Vec<Permutation>; 3]> {
    let ws = ctx.workspace(g)?;
    let [s1, s2, s3] = cor_1_13_data(ctx, &ws, k)?;
    Ok([elements(&ws, &s1), elements(&ws, &s2), elements(&ws, &s3)])
}

pub fn verify_cor_1_13(ctx: &VerifyCtx, g: Named, k: usize) -> Verdict {
    run("cor1.13", Instance::group(g.name).with_k(k), || {
        if k == 0 {
            return hypothesis("k must be at least 1");
        }
        let ws = ctx.workspace(g.group)?;
        let mut out = Builder::new();
        let [s1, s2, s3] = cor_1_13_data(ctx, &ws, k)?;
        set_equality(&ws, &mut out, ("s1", &s1), ("s3", &s3), "s1_in_s3", "s3_in_s1");
        set_equality(&ws, &mut out, ("s2", &s2), ("s3", &s3), "s2_in_s3", "s3_in_s2");
        out.done()
    })
}

/// `{g : ⟨g, g^x⟩ ∈ L for all x}`
fn conjugate_pairs_in(ws: &Workspace, l: &GroupClass) -> Result<Vec<bool>> {
    let n = ws.order() as u32;
    let table = ws.table();
    by_class(ws, |g| {
        for x in 0..n {
            if !ws.member(ws.pair(g, table.conj(g, x)), l)? {
                return Ok(false);
            }
        }
        Ok(true)
    })
}

pub fn baer_suzuki_set(ctx: &VerifyCtx, g: &PermGroup) -> Result<Vec<Permutation>> {
    let ws = ctx.workspace(g)?;
    Ok(elements(&ws, &conjugate_pairs_in(&ws, &GroupClass::nilpotent())?))
}

pub fn verify_baer_suzuki(ctx: &VerifyCtx, g: Named) -> Verdict {
    run("baer-suzuki", Instance::group(g.name), || {
        let ws = ctx.workspace(g.group)?;
        let mut out = Builder::new();
        let set = conjugate_pairs_in(&ws, &GroupClass::nilpotent())?;
        let f = indicator(&ws, ws.id_of(&ctx.fitting_term(g.group, 1)?)?);
        set_equality(&ws, &mut out, ("set", &set), ("F", &f), "set_in_F", "F_in_set");
        // k = 2 contrast: reported, not asserted
        let probe = conjugate_pairs_in(&ws, &GroupClass::nilpotent_length(2))?;
        let f2 = ws.id_of(&classes::fitting_term(g.group, 2)?)?;
        for class in ws.classes()? {
            let x = class[0];
            if probe[x as usize] && !ws.contains(f2, x) {
                out.observe(format!(
                    "k=2: {} is outside F_2(G) yet <g, g^x> is in N^2 for all x (class size {})",
                    show(ws.element(x)),
                    class.len()
                ));
            }
        }
        out.done()
    })
}
