use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: u128) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u128;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p as u64);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n as u64);
    }
    out
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u128, p: u64) -> u128 {
    let mut part = 1;
    while n.is_multiple_of(p as u128) {
        n /= p as u128;
        part *= p as u128;
    }
    part
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// A set of primes, possibly given by its complement (so `π′` is finite to store).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrimeSet {
    primes: BTreeSet<u64>,
    complement: bool,
}

impl PrimeSet {
    pub fn new(primes: impl IntoIterator<Item = u64>) -> Self {
        PrimeSet {
            primes: primes.into_iter().collect(),
            complement: false,
        }
    }

    pub fn empty() -> Self {
        Self::new([])
    }

    pub fn all() -> Self {
        Self::empty().complement()
    }

    pub fn single(p: u64) -> Self {
        Self::new([p])
    }

    /// `π′`
    pub fn complement(&self) -> Self {
        PrimeSet {
            primes: self.primes.clone(),
            complement: !self.complement,
        }
    }

    pub fn contains(&self, p: u64) -> bool {
        self.primes.contains(&p) != self.complement
    }

    pub fn union(&self, other: &PrimeSet) -> PrimeSet {
        match (self.complement, other.complement) {
            (false, false) => PrimeSet::new(self.primes.union(&other.primes).copied()),
            (true, true) => PrimeSet {
                primes: self.primes.intersection(&other.primes).copied().collect(),
                complement: true,
            },
            (true, false) => PrimeSet {
                primes: self.primes.difference(&other.primes).copied().collect(),
                complement: true,
            },
            (false, true) => other.union(self),
        }
    }

    /// `n` is a π-number.
    pub fn divides_only(&self, n: u128) -> bool {
        prime_divisors(n).into_iter().all(|p| self.contains(p))
    }

    /// The π-part of `n`.
    pub fn part_of(&self, n: u128) -> u128 {
        prime_divisors(n)
            .into_iter()
            .filter(|&p| self.contains(p))
            .map(|p| p_part(n, p))
            .product()
    }

    pub fn is_complement(&self) -> bool {
        self.complement
    }

    pub fn listed(&self) -> impl Iterator<Item = u64> + '_ {
        self.primes.iter().copied()
    }

    /// Bare list form, `2,3` or `2'`, as used in class names and catalogs.
    pub fn to_list(&self) -> String {
        let list: Vec<String> = self.primes.iter().map(|p| p.to_string()).collect();
        let mut s = list.join(",");
        if self.complement {
            s.push('\'');
        }
        s
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list: Vec<String> = self.primes.iter().map(|p| p.to_string()).collect();
        if self.complement {
            write!(f, "{{{}}}'", list.join(","))
        } else {
            write!(f, "{{{}}}", list.join(","))
        }
    }
}

impl fmt::Debug for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PrimeSet {
    type Err = Error;

    /// Comma-separated primes, optionally followed by `'` for the complement.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let (body, complement) = match s.strip_suffix('\'') {
            Some(b) => (b, true),
            None => (s, false),
        };
        let body = body.trim_start_matches('{').trim_end_matches('}');
        let mut primes = BTreeSet::new();
        for t in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let p: u64 = t
                .parse()
                .map_err(|_| Error::Validation(format!("`{t}` is not a number")))?;
            if !is_prime(p) {
                return Err(Error::Validation(format!("{p} is not prime")));
            }
            primes.insert(p);
        }
        Ok(PrimeSet { primes, complement })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisors_and_parts() {
        assert_eq!(prime_divisors(24), vec![2, 3]);
        assert_eq!(prime_divisors(1), Vec::<u64>::new());
        assert_eq!(p_part(24, 2), 8);
        assert_eq!(p_part(24, 5), 1);
        assert_eq!(PrimeSet::new([2, 5]).part_of(120), 40);
    }

    #[test]
    fn complement_membership() {
        let pi = PrimeSet::single(2);
        let co = pi.complement();
        assert!(pi.contains(2) && !pi.contains(3));
        assert!(!co.contains(2) && co.contains(3) && co.contains(101));
        assert!(co.divides_only(15));
        assert!(PrimeSet::all().divides_only(30));
        assert!(PrimeSet::empty().divides_only(1));
        assert!(pi.union(&co).contains(7));
    }

    #[test]
    fn parse_prime_sets() {
        assert_eq!("2,3".parse::<PrimeSet>().unwrap(), PrimeSet::new([2, 3]));
        assert_eq!("{2}'".parse::<PrimeSet>().unwrap(), PrimeSet::single(2).complement());
        assert!("4".parse::<PrimeSet>().is_err());
    }
}
