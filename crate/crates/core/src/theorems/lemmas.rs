use std::collections::BTreeSet;

use crate::classes::{self, GroupClass};
use crate::connection::{coprime_indices, is_normally_embedded};
use crate::ops::is_subnormal;
use crate::workspace::{SubId, Workspace};

use super::structure::{commutator, connected, factorized, soluble_radical};
use super::{hypothesis, run, show, Builder, Clause, Instance, Named, Verdict, VerifyCtx};

pub fn verify_lemma_2_1(ctx: &VerifyCtx, g: Named, a: Named, b: Named, f: Option<&GroupClass>) -> Verdict {
    let mut inst = Instance::pair(g.name, a.name, b.name);
    if let Some(f) = f {
        inst = inst.with_class(f.name());
    }
    run("lem2.1", inst, || {
        let (ws, ia, ib) = factorized!(ctx, g, a, b);
        let mut out = Builder::new();
        if !connected(&ws, ia, ib, &GroupClass::nilpotent(), &mut out, "n")? {
            return hypothesis("factors are not N-connected");
        }
        let sub = is_subnormal(a.group, g.group)? && is_subnormal(b.group, g.group)?;
        let z = ws.id_of(&classes::hypercenter(g.group)?)?;
        out.stmt("subnormal", sub)
            .stmt("meet_in_hypercenter", ws.is_subset(ws.meet(ia, ib), z));
        out.clause(Clause::True("subnormal")).clause(Clause::True("meet_in_hypercenter"));
        if let Some(f) = f {
            let fl = f.flags();
            let part3 = fl.formation && (fl.saturated || fl.contains_all_nilpotent);
            let part4 = fl.formation && (fl.saturated || (fl.soluble_only && fl.contains_all_nilpotent));
            let ab = ws.member(ia, f)? && ws.member(ib, f)?;
            out.stmt("A_B_in_F", ab).stmt("G_in_F", ws.member(ws.whole(), f)?);
            if part3 {
                out.clause(Clause::Implies("A_B_in_F", "G_in_F"));
            }
            if part4 {
                out.clause(Clause::Implies("G_in_F", "A_B_in_F"));
            }
        }
        out.done()
    })
}

/// The distinct cyclic subgroups `⟨a⟩`, `a ∈ A`, with one generator each.
fn cyclic_subgroups(ws: &Workspace, a: SubId) -> Vec<(SubId, u32)> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for x in ws.elements_of(a) {
        let c = ws.intern(ws.table().closure(&[x]));
        if seen.insert(c) {
            out.push((c, x));
        }
    }
    out
}

pub fn verify_lemma_2_3(ctx: &VerifyCtx, g: Named, a: Named, b: Named) -> Verdict {
    run("lem2.3", Instance::pair(g.name, a.name, b.name), || {
        let (ws, ia, ib) = factorized!(ctx, g, a, b);
        if !ws.member(commutator(&ws, ia, ib)?, &GroupClass::soluble())? {
            return hypothesis("[A, B] is not soluble");
        }
        let mut out = Builder::new();
        let gs = soluble_radical(&ws)?;
        let whole = ws.whole();
        let mut met = false;
        for (_, x) in cyclic_subgroups(&ws, ia) {
            if ws.join(&[ib, gs], &[x]) == whole {
                out.detail("a", show(ws.element(x)));
                met = true;
                break;
            }
        }
        out.stmt("hypothesis_met", met).stmt("A_le_G_S", ws.is_subset(ia, gs));
        out.clause(Clause::Implies("hypothesis_met", "A_le_G_S"));
        out.done()
    })
}

pub fn verify_lemma_2_8(ctx: &VerifyCtx, g: Named, a: Named, b: Named) -> Verdict {
    run("lem2.8", Instance::pair(g.name, a.name, b.name), || {
        let (ws, ia, ib) = factorized!(ctx, g, a, b);
        let soluble = ws.member(commutator(&ws, ia, ib)?, &GroupClass::soluble())?;
        let embedded = is_normally_embedded(a.group, g.group)?;
        let coprime = coprime_indices(a.group, b.group, g.group)?;
        let (part2, part3) = (embedded && soluble, coprime && soluble);
        if !embedded && !part3 {
            return hypothesis("A is not normally embedded and part 3 does not apply");
        }
        let mut out = Builder::new();
        let cyclics = cyclic_subgroups(&ws, ia);

        if embedded {
            let mut ok = true;
            'normals: for n in classes::normal_subgroups(g.group)? {
                let n_id = ws.id_of(&n)?;
                if ws.join(&[n_id, ia], &[]) != ws.whole() {
                    continue;
                }
                for &(c, x) in &cyclics {
                    let m = ws.join(&[n_id, c], &[]);
                    if !is_normally_embedded(&ws.subgroup(ws.meet(m, ia)), &ws.subgroup(m))? {
                        out.detail("part1", format!("N of order {}, a = {}", n.order(), show(ws.element(x))));
                        ok = false;
                        break 'normals;
                    }
                }
            }
            out.stmt("part1", ok).clause(Clause::True("part1"));
        }
        if part2 || part3 {
            let gs = soluble_radical(&ws)?;
            let (mut ok2, mut ok3) = (true, true);
            for &(c, x) in &cyclics {
                let l = ws.join(&[gs, ib, c], &[]);
                let la = ws.subgroup(ws.meet(l, ia));
                let lg = ws.subgroup(l);
                if part2 && ok2 && !is_normally_embedded(&la, &lg)? {
                    out.detail("part2.a", show(ws.element(x)));
                    ok2 = false;
                }
                if part3 && ok3 && !coprime_indices(&la, b.group, &lg)? {
                    out.detail("part3.a", show(ws.element(x)));
                    ok3 = false;
                }
            }
            if part2 {
                out.stmt("part2", ok2).clause(Clause::True("part2"));
            }
            if part3 {
                out.stmt("part3", ok3).clause(Clause::True("part3"));
            }
        }
        out.done()
    })
}
