use super::*;
use crate::classes::{is_nilpotent, is_soluble, GroupClass};
use crate::corpus::{alternating, cyclic, direct_product, shipped_catalog, symmetric};

fn perm(d: usize, s: &str) -> Permutation {
    Permutation::parse_cycles(d, s).unwrap()
}

fn gen(d: usize, gens: &[&str]) -> PermGroup {
    let gs: Vec<_> = gens.iter().map(|s| perm(d, s)).collect();
    PermGroup::closure(d, &gs).unwrap()
}

fn n<'a>(name: &'a str, g: &'a PermGroup) -> Named<'a> {
    Named::new(name, g)
}

fn st(v: &Verdict, k: &str) -> bool {
    v.statements[k]
}

fn check(v: &Verdict) {
    assert_eq!(v.witness.is_some(), !v.holds, "{v:?}");
    assert!(v.holds, "{v:?}");
}

fn sorted(mut v: Vec<Permutation>) -> Vec<Permutation> {
    v.sort();
    v
}

fn elems(g: &PermGroup) -> Vec<Permutation> {
    sorted(g.elements().unwrap().to_vec())
}

// brute-force oracle: ⟨x, y⟩ ∈ L for all y, without workspaces
fn two_gen_set(g: &PermGroup, l: impl Fn(&PermGroup) -> bool) -> Vec<Permutation> {
    let els = g.elements().unwrap();
    els.iter()
        .filter(|x| {
            els.iter().all(|y| {
                let h = PermGroup::closure(g.degree(), &[(*x).clone(), y.clone()]).unwrap();
                l(&h)
            })
        })
        .cloned()
        .collect()
}

struct S4 {
    g: PermGroup,
    klein: PermGroup,
    s3: PermGroup,
    d8: PermGroup,
    c3: PermGroup,
    a4: PermGroup,
}

fn s4() -> S4 {
    S4 {
        g: symmetric(4).unwrap(),
        klein: gen(4, &["(1,2)(3,4)", "(1,3)(2,4)"]),
        s3: gen(4, &["(1,2)", "(1,2,3)"]),
        d8: gen(4, &["(1,2,3,4)", "(1,3)"]),
        c3: gen(4, &["(1,2,3)"]),
        a4: alternating(4).unwrap(),
    }
}

#[test]
fn thm_1_1_examples() {
    let ctx = VerifyCtx::default();
    let s = s4();
    let v = verify_thm_1_1(&ctx, n("S4", &s.g), n("D8", &s.d8), n("C3", &s.c3));
    check(&v);
    assert!(st(&v, "s1") && st(&v, "s2") && st(&v, "s3"));
    let a5 = alternating(5).unwrap();
    let v = verify_thm_1_1(&ctx, n("A5", &a5), n("A5", &a5), n("A5", &a5));
    check(&v);
    assert!(!st(&v, "s1") && !st(&v, "s2") && !st(&v, "s3"));
    let t = PermGroup::trivial(1);
    let v = verify_thm_1_1(&ctx, n("1", &t), n("1", &t), n("1", &t));
    check(&v);
    assert!(st(&v, "s1"));
}

#[test]
fn non_factorization_is_skipped() {
    let ctx = VerifyCtx::default();
    let s = s4();
    let v = verify_thm_1_1(&ctx, n("S4", &s.g), n("C3", &s.c3), n("C3", &s.c3));
    assert_eq!(v.skipped.as_ref().unwrap().kind, SkipKind::Hypothesis);
    assert!(v.holds && v.witness.is_none());
}

#[test]
fn thm_1_2_examples() {
    let ctx = VerifyCtx::default();
    for (g, expect) in [
        (symmetric(4).unwrap(), true),
        (alternating(5).unwrap(), false),
        (cyclic(6).unwrap(), true),
    ] {
        let v = verify_thm_1_2(&ctx, n("G", &g));
        check(&v);
        assert_eq!(st(&v, "soluble"), expect);
        assert_eq!(st(&v, "all2gen"), expect);
    }
}

#[test]
fn thm_1_3_sets() {
    let ctx = VerifyCtx::default();
    let a5 = alternating(5).unwrap();
    assert_eq!(thm_1_3_set(&ctx, &a5).unwrap(), vec![a5.identity()]);
    check(&verify_thm_1_3(&ctx, n("A5", &a5)));

    let cat = shipped_catalog();
    let sl25 = &cat.entry("SL25").unwrap().group;
    let l = thm_1_3_set(&ctx, sl25).unwrap();
    assert_eq!(l, elems(&crate::ops::center(sl25).unwrap()));
    assert_eq!(l.len(), 2);
    check(&verify_thm_1_3(&ctx, n("SL25", sl25)));

    let s4 = symmetric(4).unwrap();
    assert_eq!(thm_1_3_set(&ctx, &s4).unwrap(), elems(&s4));
    let oracle = two_gen_set(&a5, |h| is_soluble(h).unwrap());
    assert_eq!(oracle, vec![a5.identity()]);
}

#[test]
fn thm_1_6_1_examples() {
    let ctx = VerifyCtx::default();
    let s3 = symmetric(3).unwrap();
    let a3 = alternating(3).unwrap();
    let v = verify_thm_1_6_1(&ctx, n("S3", &s3), n("S3", &s3), n("A3", &a3));
    check(&v);
    assert!(st(&v, "lhs") && st(&v, "rhs"));
    let s4 = symmetric(4).unwrap();
    let v = verify_thm_1_6_1(&ctx, n("S4", &s4), n("S4", &s4), n("S4", &s4));
    check(&v);
    assert!(!st(&v, "lhs") && !st(&v, "rhs"));
    let c6 = cyclic(6).unwrap();
    let v = verify_thm_1_6_1(&ctx, n("C6", &c6), n("C6", &c6), n("C6", &c6));
    assert!(st(&v, "lhs") && st(&v, "rhs"));
}

#[test]
fn thm_1_6_2_examples() {
    let ctx = VerifyCtx::default();
    let s = s4();
    let v = verify_thm_1_6_2(&ctx, n("A4", &s.a4), n("Klein", &s.klein), n("C3", &s.c3));
    check(&v);
    assert!(st(&v, "lhs") && st(&v, "rhs") && st(&v, "residual"));
    let v = verify_thm_1_6_2(&ctx, n("S4", &s.g), n("S4", &s.g), n("S4", &s.g));
    check(&v);
    assert!(!st(&v, "lhs") && !st(&v, "rhs"));
    let d8 = s.d8.clone();
    let v = verify_thm_1_6_2(&ctx, n("D8", &d8), n("D8", &d8), n("D8", &d8));
    assert!(st(&v, "lhs") && st(&v, "rhs"));
}

#[test]
fn thm_1_6_3_examples() {
    let ctx = VerifyCtx::default();
    let s = s4();
    let (two, three) = (PrimeSet::single(2), PrimeSet::single(3));
    let v = verify_thm_1_6_3(&ctx, n("S4", &s.g), n("D8", &s.d8), n("C3", &s.c3), &two, &three);
    check(&v);
    assert_eq!(st(&v, "a"), st(&v, "b"));
    assert!(st(&v, "subnormal"));
    // S4 ∈ S_2 S_3 fails, so some ⟨a, b⟩ escapes the class
    assert!(!st(&v, "a"));

    let d8 = s.d8.clone();
    let c4 = gen(4, &["(1,2,3,4)"]);
    let c2 = gen(4, &["(1,3)"]);
    let v = verify_thm_1_6_3(&ctx, n("D8", &d8), n("C4", &c4), n("C2", &c2), &two, &PrimeSet::empty());
    check(&v);
    assert!(st(&v, "a") && st(&v, "b") && st(&v, "c"));

    let t = PermGroup::trivial(1);
    let v = verify_thm_1_6_3(&ctx, n("1", &t), n("1", &t), n("1", &t), &two, &three);
    check(&v);
    assert!(st(&v, "a") && st(&v, "b") && st(&v, "c"));
}

#[test]
fn thm_1_6_4_and_prop_2_2() {
    let ctx = VerifyCtx::default();
    let s = s4();
    let a = GroupClass::abelian();
    let v = verify_thm_1_6_4(&ctx, n("S4", &s.g), n("D8", &s.d8), n("C3", &s.c3), &a);
    check(&v);
    assert!(v.skipped.is_none());
    let v = verify_thm_1_6_4(&ctx, n("S4", &s.g), n("Klein", &s.klein), n("S3", &s.s3), &GroupClass::nilpotent());
    check(&v);
    assert!(v.skipped.is_none());
    let v = verify_prop_2_2(&ctx, n("S4", &s.g), n("D8", &s.d8), n("C3", &s.c3), &a);
    check(&v);
    assert!(v.skipped.is_none());
    let c6 = cyclic(6).unwrap();
    let v = verify_thm_1_6_4(&ctx, n("C6", &c6), n("C6", &c6), n("C6", &c6), &a);
    check(&v);
    assert!(st(&v, "lhs") && st(&v, "rhs"));
    let v = verify_thm_1_6_4(&ctx, n("S4", &s.g), n("D8", &s.d8), n("C3", &s.c3), &GroupClass::trivial());
    assert_eq!(v.skipped.unwrap().kind, SkipKind::Hypothesis);
}

#[test]
fn cor_1_8_examples() {
    let ctx = VerifyCtx::default();
    let s = s4();
    for f in [GroupClass::nilpotent(), GroupClass::supersoluble(), GroupClass::soluble()] {
        let v = verify_cor_1_8(&ctx, n("A4", &s.a4), n("Klein", &s.klein), n("C3", &s.c3), &f);
        check(&v);
        assert!(st(&v, "A_B_in_F") && st(&v, "G_in_NF"), "{v:?}");
    }
    // abelian groups form neither a saturated formation nor one containing N
    let a = GroupClass::abelian();
    let v = verify_cor_1_8(&ctx, n("A4", &s.a4), n("Klein", &s.klein), n("C3", &s.c3), &a);
    assert_eq!(v.skipped.unwrap().kind, SkipKind::Hypothesis);
    assert!(crate::classes::is_na(&s.a4).unwrap());
    // S4 = D8·C3 is not N^2-connected
    let v = verify_cor_1_8(&ctx, n("S4", &s.g), n("D8", &s.d8), n("C3", &s.c3), &GroupClass::nilpotent());
    assert!(v.skipped.is_some());
}

#[test]
fn cor_1_9_sharpness() {
    let ctx = VerifyCtx::default();
    let s = s4();
    let two = PrimeSet::single(2);
    let v = verify_cor_1_9(&ctx, n("S4", &s.g), n("Klein", &s.klein), n("S3", &s.s3), &two);
    check(&v);
    assert!(v.skipped.is_none());
    assert!(v.observations.iter().any(|o| o.contains("sharp")));
    assert_eq!(crate::classes::pi_length(&s.g, &two).unwrap(), Some(2));
    let v = verify_cor_1_9(&ctx, n("A4", &s.a4), n("Klein", &s.klein), n("C3", &s.c3), &two);
    check(&v);
    assert!(v.skipped.is_none());
}

#[test]
fn cor_1_11_examples() {
    let ctx = VerifyCtx::default();
    let g = direct_product(&symmetric(3).unwrap(), &cyclic(2).unwrap()).unwrap();
    let l = cor_1_11_set(&ctx, &g, 1).unwrap();
    assert_eq!(l, sorted(vec![g.identity(), perm(5, "(4,5)")]));
    let oracle = two_gen_set(&g, |h| is_nilpotent(h).unwrap());
    assert_eq!(l, oracle);
    check(&verify_cor_1_11(&ctx, n("S3xC2", &g), 1));
    let s4 = symmetric(4).unwrap();
    assert_eq!(cor_1_11_set(&ctx, &s4, 3).unwrap(), elems(&s4));
    for k in 1..=3 {
        check(&verify_cor_1_11(&ctx, n("S4", &s4), k));
    }
    let d8 = gen(4, &["(1,2,3,4)", "(1,3)"]);
    assert_eq!(cor_1_11_set(&ctx, &d8, 1).unwrap(), elems(&d8));
}

#[test]
fn cor_1_13_sets_on_s4() {
    let ctx = VerifyCtx::default();
    let s = s4();
    for (k, expect) in [(1, &s.klein), (2, &s.a4), (3, &s.g)] {
        let sets = cor_1_13_sets(&ctx, &s.g, k).unwrap();
        for set in sets {
            assert_eq!(set, elems(expect), "k={k}");
        }
        check(&verify_cor_1_13(&ctx, n("S4", &s.g), k));
    }
}

#[test]
fn lemma_examples() {
    let ctx = VerifyCtx::default();
    let c6 = cyclic(6).unwrap();
    let c2 = gen(6, &["(1,4)(2,5)(3,6)"]);
    let c3 = gen(6, &["(1,3,5)(2,4,6)"]);
    let v = verify_lemma_2_1(&ctx, n("C6", &c6), n("C2", &c2), n("C3", &c3), Some(&GroupClass::nilpotent()));
    check(&v);
    assert!(v.skipped.is_none());
    let s = s4();
    let v = verify_lemma_2_1(&ctx, n("A4", &s.a4), n("Klein", &s.klein), n("C3", &s.c3), None);
    assert_eq!(v.skipped.unwrap().kind, SkipKind::Hypothesis);

    let cat = shipped_catalog();
    let e = cat.entry("A5xC2").unwrap();
    let (a5, c2) = (e.subgroup("A5").unwrap(), e.subgroup("C2").unwrap());
    let v = verify_lemma_2_3(&ctx, n("A5xC2", &e.group), n("C2", c2), n("A5", a5));
    check(&v);
    assert!(st(&v, "hypothesis_met") && st(&v, "A_le_G_S"));
    let v = verify_lemma_2_3(&ctx, n("S4", &s.g), n("D8", &s.d8), n("C3", &s.c3));
    check(&v);

    let v = verify_lemma_2_8(&ctx, n("S4", &s.g), n("Klein", &s.klein), n("S3", &s.s3));
    check(&v);
    assert!(st(&v, "part1") && st(&v, "part2"));
    let v = verify_lemma_2_8(&ctx, n("S4", &s.g), n("D8", &s.d8), n("C3", &s.c3));
    check(&v);
    assert!(st(&v, "part3"));
}

#[test]
fn baer_suzuki_examples() {
    let ctx = VerifyCtx::default();
    let s = s4();
    assert_eq!(baer_suzuki_set(&ctx, &s.g).unwrap(), elems(&s.klein));
    check(&verify_baer_suzuki(&ctx, n("S4", &s.g)));
    let a5 = alternating(5).unwrap();
    assert_eq!(baer_suzuki_set(&ctx, &a5).unwrap(), vec![a5.identity()]);
    check(&verify_baer_suzuki(&ctx, n("A5", &a5)));
    let q = s.d8.clone();
    assert_eq!(baer_suzuki_set(&ctx, &q).unwrap(), elems(&q));
}

#[test]
fn injected_fault_is_localized() {
    let ctx = VerifyCtx::new(crate::workspace::Limits::default(), Some(Fault::FittingOffByOne));
    let s4 = symmetric(4).unwrap();
    let v = verify_cor_1_13(&ctx, n("S4", &s4), 1);
    assert!(!v.holds);
    let w = v.witness.unwrap();
    assert_eq!(w["instance"], "S4 k=1");
    assert!(w.contains_key("in s1 not s3"));
    assert!(!verify_baer_suzuki(&ctx, n("S4", &s4)).holds);
}

#[test]
fn pair_budget_becomes_a_caps_skip() {
    let ctx = VerifyCtx::new(crate::workspace::Limits { max_pairs: 10 }, None);
    let s4 = symmetric(4).unwrap();
    let v = verify_thm_1_2(&ctx, n("S4", &s4));
    assert_eq!(v.skipped.unwrap().kind, SkipKind::Caps);
    assert!(v.holds);
}

#[test]
fn instance_labels() {
    let i = Instance::pair("S4", "D8", "C3").with_pi(&PrimeSet::single(2)).with_k(2);
    assert_eq!(i.to_string(), "S4 = D8·C3 k=2 pi=2");
    assert_eq!("fitting-off-by-one".parse::<Fault>().unwrap(), Fault::FittingOffByOne);
}
