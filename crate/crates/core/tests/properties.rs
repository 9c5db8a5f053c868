use lconn_core::classes::{self, GroupClass};
use lconn_core::connection::are_connected;
use lconn_core::corpus::{self, Catalog, CorpusEntry};
use lconn_core::ops::{center, derived_subgroup, is_normal};
use lconn_core::theorems::{self as th, Named, VerifyCtx};
use lconn_core::{quotient, PermGroup, Permutation};
use proptest::prelude::*;

fn perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn perms(degree: usize, max: usize) -> impl Strategy<Value = Vec<Permutation>> {
    prop::collection::vec(perm(degree), 1..=max)
}

fn group(degree: usize, max_gens: usize) -> impl Strategy<Value = PermGroup> {
    perms(degree, max_gens).prop_map(move |gens| PermGroup::closure(degree, &gens).unwrap())
}

fn same(a: &PermGroup, b: &PermGroup) -> bool {
    a.order() == b.order() && a.contains_group(b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn permutation_laws((a, b, c) in (1usize..9).prop_flat_map(|n| (perm(n), perm(n), perm(n)))) {
        let n = a.degree();
        let id = Permutation::identity(n);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &a.inverse(), id.clone());
        prop_assert_eq!(&id * &a, a.clone());
        prop_assert_eq!(a.pow(a.order() as i64), id);
        prop_assert_eq!((&a * &b).conjugate_by(&c), &a.conjugate_by(&c) * &b.conjugate_by(&c));
    }

    #[test]
    fn cycle_strings_round_trip(p in (1usize..12).prop_flat_map(perm)) {
        let text = p.to_string();
        prop_assert_eq!(Permutation::parse_cycles(p.degree(), &text).unwrap(), p.clone());
        let lengths = p.cycles().iter().map(|c| c.len() as u64).fold(1, lconn_core::perm::lcm);
        prop_assert_eq!(lengths, p.order());
    }

    #[test]
    fn closure_is_a_group(gens in perms(6, 3)) {
        let g = PermGroup::closure(6, &gens).unwrap();
        prop_assert_eq!(720 % g.order(), 0);
        let els = g.elements().unwrap();
        prop_assert_eq!(els.len() as u128, g.order());
        for x in els.iter().take(20) {
            for y in els.iter().take(20) {
                prop_assert!(g.contains(&(x * y)).unwrap());
            }
            prop_assert!(g.contains(&x.inverse()).unwrap());
        }
    }

    #[test]
    fn series_and_radicals(g in group(6, 2)) {
        let d = derived_subgroup(&g).unwrap();
        prop_assert!(is_normal(&d, &g).unwrap());
        prop_assert!(same(&classes::residual(&g, &GroupClass::abelian()).unwrap(), &d));
        let q = quotient(&g, &d).unwrap();
        prop_assert!(q.image().is_abelian());
        prop_assert_eq!(q.image().order() * d.order(), g.order());

        let f = classes::fitting_subgroup(&g).unwrap();
        prop_assert!(is_normal(&f, &g).unwrap());
        prop_assert!(classes::is_nilpotent(&f).unwrap());
        let z = classes::hypercenter(&g).unwrap();
        prop_assert!(z.contains_group(&center(&g).unwrap()));
        prop_assert!(f.contains_group(&z));

        let s = classes::radical(&g, &GroupClass::soluble()).unwrap();
        prop_assert!(classes::is_soluble(&s).unwrap());
        prop_assert!(s.contains_group(&f));
        prop_assert_eq!(classes::is_soluble(&g).unwrap(), s.order() == g.order());
        if let Some(l) = classes::nilpotent_length(&g).unwrap() {
            prop_assert!(same(&classes::fitting_term(&g, l).unwrap(), &g));
        }
    }

    #[test]
    fn connection_is_conjugation_invariant(
        a in perms(5, 2),
        b in perms(5, 2),
        x in perm(5),
    ) {
        let ga = PermGroup::closure(5, &a).unwrap();
        let gb = PermGroup::closure(5, &b).unwrap();
        let conj = |h: &PermGroup| {
            let gens: Vec<_> = h.generators().iter().map(|y| y.conjugate_by(&x)).collect();
            PermGroup::closure(5, &gens).unwrap()
        };
        for l in [GroupClass::nilpotent(), GroupClass::nilpotent_length(2), GroupClass::soluble()] {
            let before = are_connected(&ga, &gb, &l).unwrap().is_connected();
            let after = are_connected(&conj(&ga), &conj(&gb), &l).unwrap().is_connected();
            prop_assert_eq!(before, after, "class {}", l.name());
            let swapped = are_connected(&gb, &ga, &l).unwrap().is_connected();
            prop_assert_eq!(before, swapped);
        }
    }

    #[test]
    fn group_level_theorems_hold(g in group(6, 2)) {
        let ctx = VerifyCtx::default();
        let named = Named::new("G", &g);
        for v in [
            th::verify_thm_1_2(&ctx, named),
            th::verify_thm_1_3(&ctx, named),
            th::verify_baer_suzuki(&ctx, named),
            th::verify_cor_1_11(&ctx, named, 1),
            th::verify_cor_1_13(&ctx, named, 2),
        ] {
            prop_assert!(v.holds, "{} {:?}", v.theorem_id, v.witness);
        }
    }

    #[test]
    fn factorization_theorems_hold(g in group(5, 2), pick in any::<prop::sample::Index>()) {
        let fs = corpus::find_factorizations(&g, true).unwrap();
        prop_assume!(!fs.is_empty());
        let f = &fs[pick.index(fs.len())];
        let ctx = VerifyCtx::default();
        let (ng, na, nb) = (Named::new("G", &g), Named::new("A", &f.a), Named::new("B", &f.b));
        for v in [
            th::verify_thm_1_1(&ctx, ng, na, nb),
            th::verify_thm_1_6_1(&ctx, ng, na, nb),
            th::verify_thm_1_6_2(&ctx, ng, na, nb),
            th::verify_lemma_2_1(&ctx, ng, na, nb, None),
            th::verify_lemma_2_3(&ctx, ng, na, nb),
            th::verify_lemma_2_8(&ctx, ng, na, nb),
        ] {
            prop_assert!(v.holds, "{} {:?}", v.theorem_id, v.witness);
        }
    }

    #[test]
    fn catalogs_round_trip(g in group(7, 3), h in group(4, 2)) {
        let cat = Catalog::new(
            vec![CorpusEntry::new("G", g), CorpusEntry::new("H", h)],
            "test",
        );
        let text = corpus::serialize(&cat);
        let back = corpus::parse(&text).unwrap();
        prop_assert_eq!(&back, &cat);
        prop_assert_eq!(corpus::serialize(&back), text);
    }
}
