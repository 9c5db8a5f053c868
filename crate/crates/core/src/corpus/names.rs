use crate::group::PermGroup;
use crate::ops::{center, derived_subgroup};
use crate::primes::prime_divisors;

/// A short structural label such as `C6`, `C2xC2`, `D10`, `S4` or `Q8`,
/// falling back to `G<order>`. Labels are not isomorphism invariants in
/// general; they are names for catalog entries.
pub fn describe(g: &PermGroup) -> String {
    let n = g.order();
    if n == 1 {
        return "1".into();
    }
    let Ok(els) = g.elements() else {
        return format!("G{n}");
    };
    let max_order = els.iter().map(|x| x.order()).max().unwrap_or(1) as u128;
    if max_order == n {
        return format!("C{n}");
    }
    if g.is_abelian() {
        return abelian_label(g);
    }
    let involutions = els.iter().filter(|x| x.order() == 2).count();
    if n.is_multiple_of(2) && max_order == n / 2 {
        let rot = els.iter().find(|x| x.order() as u128 == n / 2).expect("max order attained");
        let outside_involutions = els
            .iter()
            .filter(|x| !(0..n as i64 / 2).any(|k| rot.pow(k) == **x))
            .all(|x| x.order() == 2);
        if outside_involutions {
            return format!("D{n}");
        }
        if n == 8 && involutions == 1 {
            return "Q8".into();
        }
    }
    let perfect = derived_subgroup(g).map(|d| d.order() == n).unwrap_or(false);
    let z = center(g).map(|c| c.order()).unwrap_or(0);
    match (n, involutions, max_order) {
        (12, 3, 3) => return "A4".into(),
        (12, 1, _) => return "C3:C4".into(),
        (24, 9, 4) => return "S4".into(),
        (24, 1, 6) => return "SL23".into(),
        (60, _, _) if perfect => return "A5".into(),
        (120, _, _) if perfect && z == 2 => return "SL25".into(),
        (120, 25, 6) => return "S5".into(),
        (120, 31, 10) => return "A5xC2".into(),
        _ => {}
    }
    format!("G{n}")
}

/// Elementary divisors, e.g. `C2xC4`.
fn abelian_label(g: &PermGroup) -> String {
    let els = g.elements().expect("caller checked");
    let mut parts = Vec::new();
    for p in prime_divisors(g.order()) {
        // ranks[k] = number of cyclic factors of order at least p^(k+1)
        let mut ranks = Vec::new();
        let mut prev = 0u32;
        let mut pk = 1u64;
        loop {
            pk *= p;
            let count = els.iter().filter(|x| x.pow(pk as i64).is_identity()).count() as u128;
            let log = log_p(count, p);
            if log == prev {
                break;
            }
            ranks.push(log - prev);
            prev = log;
        }
        for (k, &r) in ranks.iter().enumerate() {
            let next = ranks.get(k + 1).copied().unwrap_or(0);
            for _ in 0..(r - next) {
                parts.push(p.pow(k as u32 + 1));
            }
        }
    }
    parts.sort_unstable();
    parts
        .iter()
        .map(|q| format!("C{q}"))
        .collect::<Vec<_>>()
        .join("x")
}

fn log_p(mut n: u128, p: u64) -> u32 {
    let mut k = 0;
    while n.is_multiple_of(p as u128) && n > 1 {
        n /= p as u128;
        k += 1;
    }
    k
}
