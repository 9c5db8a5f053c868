use super::*;
use crate::connection::is_factorization;

fn orders(gs: &[PermGroup]) -> Vec<u128> {
    gs.iter().map(|g| g.order()).collect()
}

#[test]
fn builders() {
    assert_eq!(symmetric(4).unwrap().order(), 24);
    assert_eq!(alternating(5).unwrap().order(), 60);
    let p = direct_product(&symmetric(3).unwrap(), &cyclic(2).unwrap()).unwrap();
    assert_eq!((p.order(), p.degree()), (12, 5));
    assert_eq!(dihedral(5).unwrap().order(), 10);
    assert_eq!(cyclic(1).unwrap().order(), 1);
    assert_eq!(cyclic(7).unwrap().order(), 7);
    assert!(matches!(cyclic(70_000), Err(Error::DegreeTooLarge(_))));
}

#[test]
fn structural_labels() {
    let cases = [
        (cyclic(6).unwrap(), "C6"),
        (symmetric(3).unwrap(), "D6"),
        (dihedral(4).unwrap(), "D8"),
        (alternating(4).unwrap(), "A4"),
        (symmetric(4).unwrap(), "S4"),
        (alternating(5).unwrap(), "A5"),
        (symmetric(5).unwrap(), "S5"),
        (direct_product(&cyclic(2).unwrap(), &cyclic(4).unwrap()).unwrap(), "C2xC4"),
        (direct_product(&cyclic(2).unwrap(), &cyclic(2).unwrap()).unwrap(), "C2xC2"),
    ];
    for (g, label) in cases {
        assert_eq!(describe(&g), label);
    }
}

#[test]
fn subgroup_counts() {
    assert_eq!(orders(&enumerate_subgroups(&symmetric(3).unwrap()).unwrap()), vec![1, 2, 2, 2, 3, 6]);
    let klein = direct_product(&cyclic(2).unwrap(), &cyclic(2).unwrap()).unwrap();
    assert_eq!(enumerate_subgroups(&klein).unwrap().len(), 5);
    assert_eq!(enumerate_subgroups(&cyclic(1).unwrap()).unwrap().len(), 1);
    assert_eq!(enumerate_subgroups(&symmetric(4).unwrap()).unwrap().len(), 30);
    assert_eq!(enumerate_subgroups(&alternating(5).unwrap()).unwrap().len(), 59);
    assert!(enumerate_subgroups(&symmetric(6).unwrap()).is_err());
}

#[test]
fn factorization_search() {
    let s4 = symmetric(4).unwrap();
    let fs = find_factorizations(&s4, true).unwrap();
    for f in &fs {
        assert!(is_factorization(&s4, &f.a, &f.b).unwrap());
        assert!(f.a.order() < 24 && f.b.order() < 24);
    }
    let shapes: Vec<(u128, u128)> = fs.iter().map(|f| (f.a.order(), f.b.order())).collect();
    assert!(shapes.contains(&(8, 3)));
    assert!(shapes.contains(&(12, 2)));
    assert!(find_factorizations(&cyclic(7).unwrap(), true).unwrap().is_empty());
    let a5 = alternating(5).unwrap();
    let shapes: Vec<(u128, u128)> = find_factorizations(&a5, true)
        .unwrap()
        .iter()
        .map(|f| (f.a.order(), f.b.order()))
        .collect();
    assert!(shapes.contains(&(12, 5)));
}

#[test]
fn minimal_and_invalid_catalogs() {
    let c = parse("group T degree 1\nend\n").unwrap();
    assert_eq!(c.entries.len(), 1);
    assert!(c.entries[0].group.is_trivial());

    let s4 = "group S4 degree 4\ngen (1,2)\ngen (1,2,3,4)\nend\n\
              subgroup C3 of S4\ngen (1,2,3)\nend\n";
    let bad = format!("{s4}factorization S4 C3 C3\n");
    assert!(matches!(parse(&bad), Err(Error::Validation(_))));
    assert!(parse_unvalidated(&bad).is_ok());
    let dangling = format!("{s4}factorization S4 C3 D8\n");
    assert!(matches!(parse(&dangling), Err(Error::Validation(_))));
    let not_bijective = "group X degree 3\ngen (1,2,1)\nend\n";
    assert!(matches!(parse(not_bijective), Err(Error::Parse { line: 2, .. })));
    let out_of_range = "group X degree 3\ngen (1,4)\nend\n";
    assert!(matches!(parse(out_of_range), Err(Error::Parse { line: 2, .. })));
    assert!(matches!(parse("group X degree 3\n"), Err(Error::Parse { .. })));
    assert!(matches!(parse("subgroup A of Nope\nend\n"), Err(Error::Parse { .. })));
    let outside = "group X degree 3\ngen (1,2)\nend\nsubgroup Y of X\ngen (1,2,3)\nend\n";
    assert!(matches!(parse(outside), Err(Error::Validation(_))));
}

#[test]
fn comments_and_params() {
    let text = "# a comment\ngroup S3 degree 3 # trailing\ngen (1,2)\ngen (1,2,3)\nend\n\
                params S3 k=2 pi=2 rho=3 class=N^2\n";
    let c = parse(text).unwrap();
    let p = &c.entries[0].params[0];
    assert_eq!(p.k, Some(2));
    assert_eq!(p.pi, Some(crate::PrimeSet::single(2)));
    assert_eq!(p.class.as_deref(), Some("N^2"));
    assert_eq!(parse(&serialize(&c)).unwrap(), c);
    assert!(matches!(parse("group S3 degree 3\nend\nparams S3 q=1\n"), Err(Error::Parse { line: 3, .. })));
}

#[test]
fn shipped_catalog_matches_its_definition() {
    let built = build_shipped_catalog().unwrap();
    let text = serialize(&built);
    if std::env::var_os("LCONN_BLESS").is_some() {
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/shipped.gct");
        std::fs::write(path, &text).unwrap();
        return;
    }
    assert_eq!(text, SHIPPED_SOURCE, "run with LCONN_BLESS=1 to regenerate");
}

#[test]
fn shipped_catalog_round_trips() {
    let c = shipped_catalog();
    assert_eq!(serialize(&c), SHIPPED_SOURCE);
    assert_eq!(parse(&serialize(&c)).unwrap(), c);
    assert!(c.validate().is_empty());
    let s4 = c.entry("S4").unwrap();
    assert!(s4.factorizations.contains(&("Klein".into(), "S3".into())));
    let klein = s4.subgroup("Klein").unwrap();
    assert!(crate::ops::is_normal(klein, &s4.group).unwrap());
    let a5c2 = c.entry("A5xC2").unwrap();
    let rad = crate::classes::radical(&a5c2.group, &crate::classes::GroupClass::soluble()).unwrap();
    assert_eq!(rad.order(), 2);
    let sl25 = c.entry("SL25").unwrap();
    assert_eq!(sl25.group.order(), 120);
    assert_eq!(crate::ops::center(&sl25.group).unwrap().order(), 2);
    assert_eq!(c.entry("SL23").unwrap().group.order(), 24);
    assert_eq!(describe(&c.entry("Q8").unwrap().group), "Q8");
}
