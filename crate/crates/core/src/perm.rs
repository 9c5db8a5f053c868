//! Permutations of `{1..n}`, stored 0-based.
//!
//! Products are read left to right: `(g * h)` first applies `g`, then `h`,
//! so points are acted on from the right (`x^(gh) = (x^g)^h`). Conjugation
//! is `g^x = x⁻¹ g x` and the commutator is `[g, h] = g⁻¹ h⁻¹ g h`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Point = u16;

/// Largest supported degree.
pub const MAX_DEGREE: usize = Point::MAX as usize;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: SmallVec<[Point; 24]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as Point).collect(),
        }
    }

    /// Build from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        if n > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(n));
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!(
                    "images {:?} are not a bijection of 0..{}",
                    images, n
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|i| i as Point).collect(),
        })
    }

    pub(crate) fn from_points_unchecked(images: impl IntoIterator<Item = Point>) -> Self {
        Permutation {
            images: images.into_iter().collect(),
        }
    }

    /// Build from disjoint cycles of 1-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        if degree > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(degree));
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} outside 1..{}",
                        p, degree
                    )));
                }
                if touched[p - 1] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} appears more than once",
                        p
                    )));
                }
                touched[p - 1] = true;
            }
            for (i, &p) in cycle.iter().enumerate() {
                images[p - 1] = cycle[(i + 1) % cycle.len()] - 1;
            }
        }
        Self::from_images(images)
    }

    /// Parse cycle notation such as `(1,2)(3,4)` or `()`.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let cycles = parse_cycle_list(text)?;
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[Point] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    /// Apply `self` then `other`.
    #[inline]
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&p| other.images[p as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images: SmallVec<[Point; 24]> = SmallVec::from_elem(0, self.degree());
        for (i, &p) in self.images.iter().enumerate() {
            images[p as usize] = i as Point;
        }
        Permutation { images }
    }

    /// `x⁻¹ · self · x`
    pub fn conjugate_by(&self, x: &Permutation) -> Permutation {
        // point^(x⁻¹ g x): take p = q^x, then p^(x⁻¹ g x) = (q^g)^x
        let mut images: SmallVec<[Point; 24]> = SmallVec::from_elem(0, self.degree());
        for (q, &qg) in self.images.iter().enumerate() {
            images[x.images[q] as usize] = x.images[qg as usize];
        }
        Permutation { images }
    }

    /// `[self, other] = self⁻¹ other⁻¹ self other`
    pub fn commutator(&self, other: &Permutation) -> Permutation {
        self.inverse()
            .then(&other.inverse())
            .then(self)
            .then(other)
    }

    pub fn pow(&self, exp: i64) -> Permutation {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut result = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                result = result.then(&sq);
            }
            sq = sq.then(&sq);
            e >>= 1;
        }
        result
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.images
            .iter()
            .zip(other.images.iter())
            .all(|(&a, &b)| other.images[a as usize] == self.images[b as usize])
    }

    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &p)| *i != p as usize)
            .map(|(i, _)| i)
    }

    /// Nontrivial cycles as 1-based points, each starting at its least point,
    /// ordered by least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.image(start) == start {
                continue;
            }
            let mut cycle = vec![start + 1];
            seen[start] = true;
            let mut p = self.image(start);
            while p != start {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.image(p);
            }
            out.push(cycle);
        }
        out
    }

    /// Order is a power of `p` (the identity counts).
    pub fn is_p_element(&self, p: u64) -> bool {
        let mut o = self.order();
        while o.is_multiple_of(p) {
            o /= p;
        }
        o == 1
    }
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.then(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", p)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self, self.degree())
    }
}

/// Parse a juxtaposition of parenthesised cycles into 1-based point lists.
pub fn parse_cycle_list(text: &str) -> Result<Vec<Vec<usize>>> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = |msg: &str| Error::InvalidPermutation(format!("{msg} in `{text}`"));
    if s.is_empty() {
        return Err(bad("empty cycle notation"));
    }
    let mut cycles = Vec::new();
    let mut rest = s.as_str();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| bad("expected `(`"))?;
        let close = body.find(')').ok_or_else(|| bad("unclosed cycle"))?;
        let inner = &body[..close];
        rest = &body[close + 1..];
        if inner.is_empty() {
            continue;
        }
        let cycle = inner
            .split(',')
            .map(|t| t.parse::<usize>().map_err(|_| bad("bad point")))
            .collect::<Result<Vec<_>>>()?;
        if cycle.len() > 1 {
            cycles.push(cycle);
        } else if cycle[0] == 0 {
            return Err(bad("points are 1-based"));
        }
    }
    Ok(cycles)
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses cycle notation using the largest mentioned point as degree.
    fn from_str(s: &str) -> Result<Self> {
        let cycles = parse_cycle_list(s)?;
        let degree = cycles.iter().flatten().copied().max().unwrap_or(1);
        Self::from_cycles(degree, &cycles)
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}
