use std::sync::OnceLock;

use crate::error::Result;
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::primes::PrimeSet;

use super::catalog::{parse, Catalog, CorpusEntry, Params};
use super::{alternating, cyclic, describe, dihedral, direct_product, find_factorizations, symmetric};

/// Text of the shipped catalog, as produced by [`build_shipped_catalog`].
pub const SHIPPED_SOURCE: &str = include_str!("../../data/shipped.gct");

/// Largest order for which every proper factorisation is listed.
const FULL_FACTORIZATION_ORDER: u128 = 200;

/// The catalog shipped with the library.
pub fn shipped_catalog() -> Catalog {
    static CELL: OnceLock<Catalog> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut c = parse(SHIPPED_SOURCE).expect("shipped catalog is valid");
        c.source = "shipped".into();
        c
    })
    .clone()
}

fn gens(degree: usize, cycles: &[&str]) -> Result<PermGroup> {
    let perms = cycles
        .iter()
        .map(|c| Permutation::parse_cycles(degree, c))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::closure(degree, &perms)
}

struct Spec {
    name: String,
    group: PermGroup,
    curated: Vec<(&'static str, PermGroup)>,
    /// pairs of curated names
    pairs: Vec<(&'static str, &'static str)>,
    params: Vec<Params>,
}

impl Spec {
    fn plain(name: impl Into<String>, group: PermGroup) -> Self {
        Spec {
            name: name.into(),
            group,
            curated: Vec::new(),
            pairs: Vec::new(),
            params: Vec::new(),
        }
    }
}

fn pi(p: u64) -> Params {
    Params {
        pi: Some(PrimeSet::single(p)),
        ..Params::default()
    }
}

fn specs() -> Result<Vec<Spec>> {
    let mut out = Vec::new();
    for n in 1..=12 {
        out.push(Spec::plain(format!("C{n}"), cyclic(n)?));
    }
    out.push(Spec::plain("Klein", gens(4, &["(1,2)(3,4)", "(1,3)(2,4)"])?));
    out.push(Spec::plain("D8", dihedral(4)?));
    out.push(Spec::plain("D10", dihedral(5)?));
    out.push(Spec::plain("D12", dihedral(6)?));
    out.push(Spec::plain("Q8", gens(8, &["(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"])?));
    out.push(Spec::plain("C2xC4", gens(6, &["(1,2)", "(3,4,5,6)"])?));
    out.push(Spec::plain("C2xC2xC2", gens(6, &["(1,2)", "(3,4)", "(5,6)"])?));
    out.push(Spec::plain("C3:C4", gens(7, &["(1,2,3)", "(2,3)(4,5,6,7)"])?));
    out.push(Spec {
        name: "S3".into(),
        group: symmetric(3)?,
        curated: vec![("C3", gens(3, &["(1,2,3)"])?), ("C2", gens(3, &["(1,2)"])?)],
        pairs: vec![("C3", "C2")],
        params: vec![],
    });
    out.push(Spec {
        name: "A4".into(),
        group: alternating(4)?,
        curated: vec![
            ("Klein", gens(4, &["(1,2)(3,4)", "(1,3)(2,4)"])?),
            ("C3", gens(4, &["(1,2,3)"])?),
        ],
        pairs: vec![("Klein", "C3")],
        params: vec![pi(2)],
    });
    out.push(Spec {
        name: "S4".into(),
        group: symmetric(4)?,
        curated: vec![
            ("Klein", gens(4, &["(1,2)(3,4)", "(1,3)(2,4)"])?),
            ("S3", gens(4, &["(1,2)", "(1,2,3)"])?),
            ("D8", gens(4, &["(1,2,3,4)", "(1,3)"])?),
            ("C3", gens(4, &["(1,2,3)"])?),
            ("A4", alternating(4)?),
            ("C2", gens(4, &["(1,2)"])?),
        ],
        pairs: vec![("Klein", "S3"), ("D8", "C3"), ("A4", "C2")],
        params: vec![pi(2)],
    });
    out.push(Spec {
        name: "C2wrS3".into(),
        group: gens(6, &["(1,2)", "(1,3,5)(2,4,6)", "(1,3)(2,4)"])?,
        curated: vec![
            ("M", gens(6, &["(1,2)", "(3,4)", "(5,6)"])?),
            ("S3", gens(6, &["(1,3,5)(2,4,6)", "(1,3)(2,4)"])?),
        ],
        pairs: vec![("M", "S3")],
        params: vec![pi(2)],
    });
    // F_16 ⋊ D10, D10 acting by x ↦ ωx (ω of order 5) and x ↦ x^4
    let e16 = [
        "(1,2)(3,4)(5,6)(7,8)(9,10)(11,12)(13,14)(15,16)",
        "(1,3)(2,4)(5,7)(6,8)(9,11)(10,12)(13,15)(14,16)",
        "(1,5)(2,6)(3,7)(4,8)(9,13)(10,14)(11,15)(12,16)",
        "(1,9)(2,10)(3,11)(4,12)(5,13)(6,14)(7,15)(8,16)",
    ];
    let d10 = ["(2,9,13,11,16)(3,4,12,8,14)(5,7,6,15,10)", "(3,4)(5,6)(9,16)(10,15)(11,13)(12,14)"];
    out.push(Spec {
        name: "E16:D10".into(),
        group: gens(16, &[&e16[..], &d10[..]].concat())?,
        curated: vec![("E16", gens(16, &e16)?), ("D10", gens(16, &d10)?)],
        pairs: vec![("E16", "D10")],
        params: vec![pi(2)],
    });
    // F_3^3 ⋊ A4, A4 as signed permutation matrices of determinant 1
    let e27 = [
        "(1,10,19)(2,11,20)(3,12,21)(4,13,22)(5,14,23)(6,15,24)(7,16,25)(8,17,26)(9,18,27)",
        "(1,4,7)(2,5,8)(3,6,9)(10,13,16)(11,14,17)(12,15,18)(19,22,25)(20,23,26)(21,24,27)",
        "(1,2,3)(4,5,6)(7,8,9)(10,11,12)(13,14,15)(16,17,18)(19,20,21)(22,23,24)(25,26,27)",
    ];
    let a4 = [
        "(4,7)(5,8)(6,9)(10,19)(11,20)(12,21)(13,25)(14,26)(15,27)(16,22)(17,23)(18,24)",
        "(2,10,4)(3,19,7)(5,11,13)(6,20,16)(8,12,22)(9,21,25)(15,23,17)(18,24,26)",
    ];
    out.push(Spec {
        name: "E27:A4".into(),
        group: gens(27, &[&e27[..], &a4[..]].concat())?,
        curated: vec![("E27", gens(27, &e27)?), ("A4", gens(27, &a4)?)],
        pairs: vec![("E27", "A4")],
        params: vec![pi(3)],
    });
    out.push(Spec::plain("S3xC2",direct_product(&symmetric(3)?, &cyclic(2)?)?));
    out.push(Spec::plain("C3xS3", direct_product(&cyclic(3)?, &symmetric(3)?)?));
    out.push(Spec::plain("S3xS3", direct_product(&symmetric(3)?, &symmetric(3)?)?));
    out.push(Spec {
        name: "A5".into(),
        group: alternating(5)?,
        curated: vec![("A4", alternating(4).and_then(|g| widen(&g, 5))?), ("C5", gens(5, &["(1,2,3,4,5)"])?)],
        pairs: vec![("A4", "C5")],
        params: vec![],
    });
    out.push(Spec::plain("S5", symmetric(5)?));
    out.push(Spec {
        name: "A5xC2".into(),
        group: direct_product(&alternating(5)?, &cyclic(2)?)?,
        curated: vec![
            ("A5", widen(&alternating(5)?, 7)?),
            ("C2", gens(7, &["(6,7)"])?),
        ],
        pairs: vec![("A5", "C2")],
        params: vec![],
    });
    out.push(Spec::plain("SL23", gens(8, &["(3,4,5)(6,8,7)", "(1,3,2,6)(4,5,8,7)"])?));
    out.push(Spec::plain(
        "SL25",
        gens(
            24,
            &[
                "(5,6,7,8,9)(10,12,14,11,13)(15,18,16,19,17)(20,24,23,22,21)",
                "(1,5,4,20)(2,10,3,15)(6,9,24,21)(7,14,23,16)(8,19,22,11)(12,13,18,17)",
            ],
        )?,
    ));
    Ok(out)
}

/// The same generators on more points.
fn widen(g: &PermGroup, degree: usize) -> Result<PermGroup> {
    let gens = g
        .generators()
        .iter()
        .map(|x| Permutation::from_cycles(degree, &x.cycles()))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::closure(degree, &gens)
}

/// Rebuild the shipped catalog from its definitions: the named groups,
/// their curated subgroups, and every proper factorisation up to swap and
/// conjugacy for orders up to 200.
pub fn build_shipped_catalog() -> Result<Catalog> {
    let mut entries = Vec::new();
    for spec in specs()? {
        entries.push(build_entry(spec)?);
    }
    Ok(Catalog::new(entries, "shipped"))
}

fn build_entry(spec: Spec) -> Result<CorpusEntry> {
    let g = &spec.group;
    let mut entry = CorpusEntry::new(spec.name.clone(), g.clone());
    let mut named: Vec<(String, PermGroup)> = spec
        .curated
        .iter()
        .map(|(n, h)| (n.to_string(), h.clone()))
        .collect();
    let curated_pairs: Vec<(PermGroup, PermGroup, &str, &str)> = spec
        .pairs
        .iter()
        .map(|(a, b)| {
            let find = |n: &str| named.iter().find(|(m, _)| m == n).expect("curated name").1.clone();
            (find(a), find(b), *a, *b)
        })
        .collect();
    for (_, _, a, b) in &curated_pairs {
        entry.factorizations.push((a.to_string(), b.to_string()));
    }
    if g.order() <= FULL_FACTORIZATION_ORDER {
        for f in find_factorizations(g, true)? {
            if curated_pairs
                .iter()
                .any(|(ca, cb, _, _)| conjugate_pairs(g, (&f.a, &f.b), (ca, cb)))
            {
                continue;
            }
            let a = name_for(&mut named, &f.a);
            let b = name_for(&mut named, &f.b);
            entry.factorizations.push((a, b));
        }
    }
    let used: Vec<&String> = entry
        .factorizations
        .iter()
        .flat_map(|(a, b)| [a, b])
        .collect();
    entry.subgroups = named
        .iter()
        .filter(|(n, _)| used.contains(&n) || spec.curated.iter().any(|(c, _)| c == n))
        .cloned()
        .collect();
    entry.params = spec.params;
    Ok(entry)
}

fn name_for(named: &mut Vec<(String, PermGroup)>, h: &PermGroup) -> String {
    if let Some((n, _)) = named.iter().find(|(_, k)| k == h) {
        return n.clone();
    }
    let label = describe(h);
    let taken = |s: &str| named.iter().any(|(n, _)| n == s);
    let name = if !taken(&label) {
        label
    } else {
        (0..)
            .map(|i| format!("{label}_{}", i + 2))
            .find(|s| !taken(s))
            .expect("unbounded")
    };
    named.push((name.clone(), h.clone()));
    name
}

/// `{A^x, B^x} = {C, D}` for some `x ∈ G`.
fn conjugate_pairs(g: &PermGroup, (a, b): (&PermGroup, &PermGroup), (c, d): (&PermGroup, &PermGroup)) -> bool {
    let conj = |h: &PermGroup, x: &Permutation| {
        let gens: Vec<_> = h.generators().iter().map(|y| y.conjugate_by(x)).collect();
        PermGroup::closure(h.degree(), &gens).expect("same degree")
    };
    let sizes_match = |p: &PermGroup, q: &PermGroup| p.order() == q.order();
    if !((sizes_match(a, c) && sizes_match(b, d)) || (sizes_match(a, d) && sizes_match(b, c))) {
        return false;
    }
    g.elements().expect("small group").iter().any(|x| {
        let (ax, bx) = (conj(a, x), conj(b, x));
        (ax == *c && bx == *d) || (ax == *d && bx == *c)
    })
}
