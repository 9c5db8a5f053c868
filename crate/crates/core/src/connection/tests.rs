use super::*;
use crate::classes::{normal_subgroups, radical};

fn grp(degree: usize, gens: &[&str]) -> PermGroup {
    let gens: Vec<_> = gens
        .iter()
        .map(|s| Permutation::parse_cycles(degree, s).unwrap())
        .collect();
    PermGroup::closure(degree, &gens).unwrap()
}

fn p(degree: usize, s: &str) -> Permutation {
    Permutation::parse_cycles(degree, s).unwrap()
}

fn s4() -> PermGroup {
    grp(4, &["(1,2)", "(1,2,3,4)"])
}
fn a5() -> PermGroup {
    grp(5, &["(1,2,3)", "(1,2,3,4,5)"])
}

#[test]
fn factorizations() {
    let g = s4();
    let d8 = grp(4, &["(1,2,3,4)", "(1,3)"]);
    let c3 = grp(4, &["(1,2,3)"]);
    assert!(is_factorization(&g, &d8, &c3).unwrap());
    assert!(!is_factorization(&g, &c3, &c3).unwrap());
    let a4 = grp(5, &["(1,2,3)", "(1,2)(3,4)"]);
    let c5 = grp(5, &["(1,2,3,4,5)"]);
    assert!(is_factorization(&a5(), &a4, &c5).unwrap());
    assert!(is_factorization(&g, &g, &PermGroup::trivial(4)).unwrap());
    assert_eq!(
        is_factorization(&c3, &d8, &c3).unwrap_err(),
        Error::ContainmentViolation
    );
    assert!(coprime_indices(&d8, &c3, &g).unwrap());
    assert!(!coprime_indices(&d8, &d8, &g).unwrap());
    assert!(coprime_indices(&a4, &c5, &a5()).unwrap());
}

#[test]
fn connection_examples() {
    let s3 = grp(3, &["(1,2)", "(1,2,3)"]);
    let n = GroupClass::nilpotent();
    match are_connected(&s3, &s3, &n).unwrap() {
        Connection::Witness { a, b } => {
            let h = PermGroup::closure(3, &[a, b]).unwrap();
            assert!(!n.contains(&h).unwrap());
        }
        Connection::Connected => panic!("S3 is not N-connected to itself"),
    }
    let v = grp(4, &["(1,2)(3,4)", "(1,3)(2,4)"]);
    let c3 = grp(4, &["(1,2,3)"]);
    assert!(are_connected(&v, &c3, &GroupClass::nilpotent_length(2)).unwrap().is_connected());
    assert!(!are_connected(&v, &c3, &n).unwrap().is_connected());
    let one = PermGroup::trivial(4);
    assert!(are_connected(&one, &c3, &GroupClass::abelian()).unwrap().is_connected());
}

#[test]
fn restricted_connection() {
    let g = a5();
    let s = GroupClass::soluble();
    let two = |x: &Permutation| x.is_p_element(2);
    let three = |x: &Permutation| x.is_p_element(3);
    assert!(!are_connected_restricted(&g, &g, &s, two, three).unwrap().is_connected());
    let only_id = |x: &Permutation| x.is_identity();
    assert!(are_connected_restricted(&g, &g, &s, only_id, only_id).unwrap().is_connected());
    assert!(are_connected_restricted(&s4(), &s4(), &s, two, three).unwrap().is_connected());
}

#[test]
fn pair_budget_is_reported() {
    let ws = Workspace::new(&a5(), Limits { max_pairs: 100 }).unwrap();
    let all = ws.whole();
    let err = connected_in(&ws, all, all, &GroupClass::soluble(), &|_| true, &|_| true).unwrap_err();
    assert!(matches!(err, Error::Unsupported(_)));
}

#[test]
fn connection_is_symmetric_and_conjugation_invariant() {
    let g = s4();
    let ws = Workspace::new(&g, Limits::default()).unwrap();
    let subs = crate::classes::normal_subgroups(&g).unwrap();
    let extra = [grp(4, &["(1,2)"]), grp(4, &["(1,2,3)"]), grp(4, &["(1,2,3,4)", "(1,3)"])];
    let all: Vec<&PermGroup> = subs.iter().chain(extra.iter()).collect();
    let x = p(4, "(2,3,4)");
    for class in [GroupClass::nilpotent(), GroupClass::nilpotent_derived(), GroupClass::abelian()] {
        for a in &all {
            for b in &all {
                let (ia, ib) = (ws.id_of(a).unwrap(), ws.id_of(b).unwrap());
                let ab = connected_in(&ws, ia, ib, &class, &|_| true, &|_| true).unwrap();
                let ba = connected_in(&ws, ib, ia, &class, &|_| true, &|_| true).unwrap();
                assert_eq!(ab.is_connected(), ba.is_connected());
                let conj = |h: &PermGroup| {
                    let gens: Vec<_> = h.generators().iter().map(|y| y.conjugate_by(&x)).collect();
                    PermGroup::closure(4, &gens).unwrap()
                };
                let c = are_connected(&conj(a), &conj(b), &class).unwrap();
                assert_eq!(ab.is_connected(), c.is_connected());
            }
        }
    }
}

#[test]
fn radical_elements() {
    let g = s4();
    let n = GroupClass::nilpotent();
    let dt = p(4, "(1,2)(3,4)");
    let t = p(4, "(1,2)");
    assert!(locally_radical(&dt, &g, &n).unwrap());
    assert!(!locally_radical(&t, &g, &n).unwrap());
    assert!(locally_radical(&t, &g, &GroupClass::soluble()).unwrap());
    assert!(globally_radical(&t, &g, &GroupClass::soluble()).unwrap());
    assert!(!globally_radical(&p(5, "(1,2,3)"), &a5(), &GroupClass::soluble()).unwrap());
    let c6 = grp(5, &["(1,2,3)", "(4,5)"]);
    assert!(globally_radical(&p(5, "(4,5)"), &c6, &n).unwrap());
}

#[test]
fn radical_element_readings_agree() {
    let groups = [s4(), a5(), grp(5, &["(1,2)", "(1,2,3)", "(4,5)"]), grp(4, &["(1,2,3)", "(1,2)(3,4)"])];
    let classes = [
        GroupClass::nilpotent(),
        GroupClass::soluble(),
        GroupClass::nilpotent_length(2),
        GroupClass::pi_groups(crate::PrimeSet::single(2)),
    ];
    for g in &groups {
        for x in &classes {
            let r = radical(g, x).unwrap();
            for e in g.class_representatives().unwrap() {
                let local = locally_radical(&e, g, x).unwrap();
                assert_eq!(local, locally_radical_via_radical(&e, g, x).unwrap());
                assert_eq!(globally_radical(&e, g, x).unwrap(), r.includes(&e));
            }
        }
    }
}

/// Some normal subgroup `M` has `A_p` as a Sylow subgroup, for each `p`.
fn normally_embedded_oracle(a: &PermGroup, g: &PermGroup) -> bool {
    let normals = normal_subgroups(g).unwrap();
    prime_divisors(a.order()).into_iter().all(|p| {
        let ap = sylow(a, p).unwrap();
        normals
            .iter()
            .any(|m| m.contains_group(&ap) && p_part(m.order(), p) == ap.order())
    })
}

#[test]
fn normal_embedding() {
    let g = s4();
    let t = grp(4, &["(1,2)"]);
    assert!(!is_normally_embedded(&t, &g).unwrap());
    let v = grp(4, &["(1,2)(3,4)", "(1,3)(2,4)"]);
    assert!(is_normally_embedded(&v, &g).unwrap());
    let d8 = grp(4, &["(1,2,3,4)", "(1,3)"]);
    assert!(is_normally_embedded(&d8, &g).unwrap());
    for h in [t, v, d8, grp(4, &["(1,2,3)"]), grp(4, &["(1,2,3)", "(1,2)"]), grp(4, &["(1,2,3,4)"])] {
        assert_eq!(is_normally_embedded(&h, &g).unwrap(), normally_embedded_oracle(&h, &g), "{h:?}");
    }
}
