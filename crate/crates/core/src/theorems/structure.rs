use std::sync::Arc;

use crate::classes::{self, ClassFlags, GroupClass};
use crate::connection::{coprime_indices, connected_in, is_factorization, is_normally_embedded, Connection};
use crate::error::Result;
use crate::ops::{commutator_subgroup, is_subnormal};
use crate::perm::Permutation;
use crate::primes::{prime_divisors, PrimeSet};
use crate::workspace::{SubId, Workspace};

use super::{hypothesis, run, show, Builder, Clause, Instance, Named, Outcome, Verdict, VerifyCtx};

fn all(_: &Permutation) -> bool {
    true
}

/// Connection check over all pairs, recording a witness pair under `label`.
pub(crate) fn connected(
    ws: &Workspace,
    a: SubId,
    b: SubId,
    l: &GroupClass,
    out: &mut Builder,
    label: &str,
) -> Result<bool> {
    Ok(match connected_in(ws, a, b, l, &all, &all)? {
        Connection::Connected => true,
        Connection::Witness { a, b } => {
            out.detail(format!("{label}.pair"), format!("{} {}", show(&a), show(&b)));
            false
        }
    })
}

/// The images of `A` and `B` in `G/N` are `L`-connected.
pub(crate) fn connected_mod(
    ws: &Workspace,
    n: SubId,
    a: SubId,
    b: SubId,
    l: &GroupClass,
    out: &mut Builder,
    label: &str,
) -> Result<bool> {
    let q = ws.quotient(n)?;
    let (qa, qb) = (q.image_of(ws, a)?, q.image_of(ws, b)?);
    connected(&q.workspace, qa, qb, l, out, label)
}

/// Workspace plus the ids of both factors, or a skip if `G ≠ AB`.
type Split = (Arc<Workspace>, SubId, SubId);

pub(crate) fn split_factorized(
    ctx: &VerifyCtx,
    g: Named,
    a: Named,
    b: Named,
) -> Result<std::result::Result<Split, Outcome>> {
    if !is_factorization(g.group, a.group, b.group)? {
        return Ok(Err(hypothesis(format!("{} is not the product {}·{}", g.name, a.name, b.name))?));
    }
    let ws = ctx.workspace(g.group)?;
    let (ia, ib) = (ws.id_of(a.group)?, ws.id_of(b.group)?);
    Ok(Ok((ws, ia, ib)))
}

macro_rules! factorized {
    ($ctx:expr, $g:expr, $a:expr, $b:expr) => {
        match $crate::theorems::structure::split_factorized($ctx, $g, $a, $b)? {
            Ok(v) => v,
            Err(skip) => return Ok(skip),
        }
    };
}
pub(crate) use factorized;

/// `[A, B]` as an id of the ambient workspace.
pub(crate) fn commutator(ws: &Workspace, a: SubId, b: SubId) -> Result<SubId> {
    ws.id_of(&commutator_subgroup(&ws.subgroup(a), &ws.subgroup(b))?)
}

pub(crate) fn fitting(ws: &Workspace) -> Result<SubId> {
    ws.radical(ws.whole(), &GroupClass::nilpotent())
}

pub(crate) fn soluble_radical(ws: &Workspace) -> Result<SubId> {
    ws.radical(ws.whole(), &GroupClass::soluble())
}

/// Evaluate a conjugation-invariant predicate on class representatives and
/// spread the answer over each class. Indexed by element.
pub(crate) fn by_class(ws: &Workspace, mut pred: impl FnMut(u32) -> Result<bool>) -> Result<Vec<bool>> {
    let mut out = vec![false; ws.order()];
    for class in ws.classes()? {
        let v = pred(class[0])?;
        for &x in class {
            out[x as usize] = v;
        }
    }
    Ok(out)
}

/// Record `L ⊆ R` and `R ⊆ L` for two element sets given as indicator
/// vectors, with the first element on which they differ.
pub(crate) fn set_equality(
    ws: &Workspace,
    out: &mut Builder,
    (ln, lhs): (&'static str, &[bool]),
    (rn, rhs): (&'static str, &[bool]),
    sub: &'static str,
    sup: &'static str,
) {
    let first = |p: &[bool], q: &[bool]| (0..p.len()).find(|&i| p[i] && !q[i]);
    let l_not_r = first(lhs, rhs);
    let r_not_l = first(rhs, lhs);
    out.stmt(sub, l_not_r.is_none()).stmt(sup, r_not_l.is_none());
    out.clause(Clause::True(sub)).clause(Clause::True(sup));
    if let Some(i) = l_not_r {
        out.detail(format!("in {ln} not {rn}"), show(ws.element(i as u32)));
    }
    if let Some(i) = r_not_l {
        out.detail(format!("in {rn} not {ln}"), show(ws.element(i as u32)));
    }
    out.detail(format!("|{ln}|"), lhs.iter().filter(|&&x| x).count().to_string());
    out.detail(format!("|{rn}|"), rhs.iter().filter(|&&x| x).count().to_string());
}

pub(crate) fn indicator(ws: &Workspace, id: SubId) -> Vec<bool> {
    let set = ws.set(id);
    (0..ws.order()).map(|i| set.contains(i)).collect()
}

pub(crate) fn elements(ws: &Workspace, mask: &[bool]) -> Vec<Permutation> {
    (0..mask.len())
        .filter(|&i| mask[i])
        .map(|i| ws.element(i as u32).clone())
        .collect()
}

pub fn verify_thm_1_1(ctx: &VerifyCtx, g: Named, a: Named, b: Named) -> Verdict {
    run("thm1.1", Instance::pair(g.name, a.name, b.name), || {
        let (ws, ia, ib) = factorized!(ctx, g, a, b);
        let s = GroupClass::soluble();
        let mut out = Builder::new();
        let s1 = connected(&ws, ia, ib, &s, &mut out, "s1")?;
        let primes = prime_divisors(g.group.order());
        let mut s2 = true;
        'outer: for &p in &primes {
            for &q in &primes {
                if p == q {
                    continue;
                }
                let sel_a = move |x: &Permutation| x.is_p_element(p);
                let sel_b = move |y: &Permutation| y.is_p_element(q);
                if let Connection::Witness { a, b } = connected_in(&ws, ia, ib, &s, &sel_a, &sel_b)? {
                    out.detail("s2.pair", format!("{} {} (p={p}, q={q})", show(&a), show(&b)));
                    s2 = false;
                    break 'outer;
                }
            }
        }
        let comm = commutator(&ws, ia, ib)?;
        let s3 = ws.is_subset(comm, soluble_radical(&ws)?);
        out.stmt("s1", s1).stmt("s2", s2).stmt("s3", s3);
        out.clause(Clause::Equal(vec!["s1", "s2", "s3"]));
        out.done()
    })
}

pub fn verify_thm_1_2(ctx: &VerifyCtx, g: Named) -> Verdict {
    run("thm1.2", Instance::group(g.name), || {
        let ws = ctx.workspace(g.group)?;
        let mut out = Builder::new();
        let soluble = classes::is_soluble(g.group)?;
        let whole = ws.whole();
        let all2gen = connected(&ws, whole, whole, &GroupClass::soluble(), &mut out, "all2gen")?;
        out.stmt("soluble", soluble).stmt("all2gen", all2gen);
        out.clause(Clause::Equal(vec!["soluble", "all2gen"]));
        out.done()
    })
}

/// `{x : ⟨x, y⟩ soluble for all y}` together with, for each member, the
/// largest nilpotent length of the subgroups `⟨x, y⟩`.
fn thm_1_3_data(ws: &Workspace) -> Result<(Vec<bool>, Vec<usize>)> {
    let s = GroupClass::soluble();
    let n = ws.order() as u32;
    let mut lengths = vec![0; ws.order()];
    let mask = by_class(ws, |x| {
        let mut l = 0;
        for y in 0..n {
            let h = ws.pair(x, y);
            if !ws.member(h, &s)? {
                return Ok(false);
            }
            l = l.max(ws.nilpotent_length(h)?.expect("soluble"));
        }
        lengths[x as usize] = l;
        Ok(true)
    })?;
    for class in ws.classes()? {
        for &x in class {
            lengths[x as usize] = lengths[class[0] as usize];
        }
    }
    Ok((mask, lengths))
}

/// The elements `x` with `⟨x, y⟩` soluble for every `y ∈ G`.
pub fn thm_1_3_set(ctx: &VerifyCtx, g: &crate::group::PermGroup) -> Result<Vec<Permutation>> {
    let ws = ctx.workspace(g)?;
    Ok(elements(&ws, &thm_1_3_data(&ws)?.0))
}

pub fn verify_thm_1_3(ctx: &VerifyCtx, g: Named) -> Verdict {
    run("thm1.3", Instance::group(g.name), || {
        let ws = ctx.workspace(g.group)?;
        let mut out = Builder::new();
        let (l, lengths) = thm_1_3_data(&ws)?;
        let rad = indicator(&ws, soluble_radical(&ws)?);
        set_equality(&ws, &mut out, ("L", &l), ("G_S", &rad), "L_in_G_S", "G_S_in_L");
        // each x ∈ L lies in F_l(G) for l its largest nilpotent length
        let mut in_fl = true;
        let mut terms = std::collections::BTreeMap::new();
        for class in ws.classes()? {
            let x = class[0];
            if !l[x as usize] {
                continue;
            }
            let k = lengths[x as usize];
            if let std::collections::btree_map::Entry::Vacant(e) = terms.entry(k) {
                e.insert(ws.id_of(&ctx.fitting_term(g.group, k)?)?);
            }
            if !ws.contains(terms[&k], x) {
                out.detail("not in F_l", format!("{} (l={k})", show(ws.element(x))));
                in_fl = false;
                break;
            }
        }
        out.stmt("L_in_F_l", in_fl).clause(Clause::True("L_in_F_l"));
        out.done()
    })
}

pub fn verify_thm_1_6_1(ctx: &VerifyCtx, g: Named, a: Named, b: Named) -> Verdict {
    run("thm1.6.1", Instance::pair(g.name, a.name, b.name), || {
        let (ws, ia, ib) = factorized!(ctx, g, a, b);
        let mut out = Builder::new();
        let lhs = connected(&ws, ia, ib, &GroupClass::nilpotent_derived(), &mut out, "lhs")?;
        let rhs = ws.is_subset(commutator(&ws, ia, ib)?, fitting(&ws)?);
        out.stmt("lhs", lhs).stmt("rhs", rhs);
        out.clause(Clause::Equal(vec!["lhs", "rhs"]));
        out.done()
    })
}

pub fn verify_thm_1_6_2(ctx: &VerifyCtx, g: Named, a: Named, b: Named) -> Verdict {
    run("thm1.6.2", Instance::pair(g.name, a.name, b.name), || {
        let (ws, ia, ib) = factorized!(ctx, g, a, b);
        let mut out = Builder::new();
        let n = GroupClass::nilpotent();
        let lhs = connected(&ws, ia, ib, &GroupClass::nilpotent_length(2), &mut out, "lhs")?;
        let f = fitting(&ws)?;
        let rhs = connected_mod(&ws, f, ia, ib, &n, &mut out, "rhs")?;
        let fg = ws.subgroup(f);
        let reform_class = GroupClass::custom("residual N in F(G)", ClassFlags::default(), move |h| {
            Ok(fg.contains_group(&classes::residual(h, &GroupClass::nilpotent())?))
        });
        let reform = connected(&ws, ia, ib, &reform_class, &mut out, "residual")?;
        out.stmt("lhs", lhs).stmt("rhs", rhs).stmt("residual", reform);
        out.clause(Clause::Equal(vec!["lhs", "rhs", "residual"]));
        out.done()
    })
}

/// `O^ρ(H)`, the subgroup generated by the ρ′-elements.
fn o_upper(ws: &Workspace, h: SubId, rho: &PrimeSet) -> Result<SubId> {
    let r = classes::residual(&ws.subgroup(h), &GroupClass::pi_groups(rho.clone()))?;
    ws.id_of(&r)
}

pub fn verify_thm_1_6_3(ctx: &VerifyCtx, g: Named, a: Named, b: Named, pi: &PrimeSet, rho: &PrimeSet) -> Verdict {
    let inst = Instance::pair(g.name, a.name, b.name).with_pi(pi).with_rho(rho);
    run("thm1.6.3", inst, || {
        let (ws, ia, ib) = factorized!(ctx, g, a, b);
        let mut out = Builder::new();
        let pr = GroupClass::pi_by_rho(pi.clone(), rho.clone());
        let spi = GroupClass::soluble_pi(pi.clone());
        let sa = connected(&ws, ia, ib, &pr, &mut out, "a")?;

        let covered = pi.union(rho).divides_only(g.group.order());
        let ab = commutator(&ws, ia, ib)?;
        let ab_soluble = ws.member(ab, &GroupClass::soluble())?;
        let ab_pr = ws.member(ab, &pr)?;
        let x = commutator(&ws, ia, o_upper(&ws, ib, rho)?)?;
        let y = commutator(&ws, ib, o_upper(&ws, ia, rho)?)?;
        let (x_spi, y_spi) = (ws.member(x, &spi)?, ws.member(y, &spi)?);
        out.stmt("a", sa)
            .stmt("b", covered && ab_soluble && x_spi && y_spi)
            .stmt("c", covered && ab_pr && x_spi && y_spi);
        out.clause(Clause::Equal(vec!["a", "b", "c"]));

        // [A, O^ρ(B)] is subnormal, and its three membership readings agree
        let sub = is_subnormal(&ws.subgroup(x), g.group)? && is_subnormal(&ws.subgroup(y), g.group)?;
        out.stmt("subnormal", sub).clause(Clause::True("subnormal"));
        if ab_soluble {
            let opi = ws.id_of(&classes::o_pi(g.group, pi)?)?;
            let gs = soluble_radical(&ws)?;
            let opi_gs = ws.id_of(&classes::o_pi(&ws.subgroup(gs), pi)?)?;
            out.stmt("x_in_Spi", x_spi)
                .stmt("x_le_Opi_G", ws.is_subset(x, opi))
                .stmt("x_le_Opi_G_S", ws.is_subset(x, opi_gs))
                .stmt("y_in_Spi", y_spi)
                .stmt("y_le_Opi_G", ws.is_subset(y, opi))
                .stmt("y_le_Opi_G_S", ws.is_subset(y, opi_gs));
            out.clause(Clause::Equal(vec!["x_in_Spi", "x_le_Opi_G", "x_le_Opi_G_S"]));
            out.clause(Clause::Equal(vec!["y_in_Spi", "y_le_Opi_G", "y_le_Opi_G_S"]));
        }
        out.done()
    })
}

fn require_nf_flags(f: &GroupClass) -> Option<String> {
    let fl = f.flags();
    (!(fl.formation && fl.soluble_only && fl.contains_all_abelian))
        .then(|| format!("class {} is not a formation of soluble groups containing all abelian groups", f.name()))
}

pub fn verify_thm_1_6_4(ctx: &VerifyCtx, g: Named, a: Named, b: Named, f: &GroupClass) -> Verdict {
    run("thm1.6.4", Instance::pair(g.name, a.name, b.name).with_class(f.name()), || {
        if let Some(reason) = require_nf_flags(f) {
            return hypothesis(reason);
        }
        let (ws, ia, ib) = factorized!(ctx, g, a, b);
        let embedded = is_normally_embedded(a.group, g.group)? || is_normally_embedded(b.group, g.group)?;
        if !embedded && !coprime_indices(a.group, b.group, g.group)? {
            return hypothesis("hypothesis (i)/(ii) unmet");
        }
        let mut out = Builder::new();
        let lhs = connected(&ws, ia, ib, &GroupClass::nilpotent_by(f)?, &mut out, "lhs")?;
        let rhs = connected_mod(&ws, fitting(&ws)?, ia, ib, f, &mut out, "rhs")?;
        out.stmt("lhs", lhs).stmt("rhs", rhs);
        out.clause(Clause::Equal(vec!["lhs", "rhs"]));
        out.done()
    })
}

pub fn verify_prop_2_2(ctx: &VerifyCtx, g: Named, a: Named, b: Named, f: &GroupClass) -> Verdict {
    run("prop2.2", Instance::pair(g.name, a.name, b.name).with_class(f.name()), || {
        if let Some(reason) = require_nf_flags(f) {
            return hypothesis(reason);
        }
        if !classes::is_soluble(g.group)? {
            return hypothesis(format!("{} is not soluble", g.name));
        }
        let (ws, ia, ib) = factorized!(ctx, g, a, b);
        let applies = is_normally_embedded(a.group, g.group)?
            || is_normally_embedded(b.group, g.group)?
            || coprime_indices(a.group, b.group, g.group)?
            || (classes::is_nilpotent(a.group)? && classes::is_nilpotent(b.group)?);
        if !applies {
            return hypothesis("hypotheses (i)/(ii)/(iii) unmet");
        }
        let mut out = Builder::new();
        let nf = connected(&ws, ia, ib, &GroupClass::nilpotent_by(f)?, &mut out, "nf")?;
        let quo = connected_mod(&ws, fitting(&ws)?, ia, ib, f, &mut out, "quotient")?;
        out.stmt("nf_connected", nf).stmt("quotient_connected", quo);
        out.clause(Clause::Implies("nf_connected", "quotient_connected"));
        out.done()
    })
}
