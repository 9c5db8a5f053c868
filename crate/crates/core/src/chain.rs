//! Base and strong generating set via deterministic Schreier–Sims.

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone)]
struct Level {
    base_point: usize,
    gens: Vec<Permutation>,
    /// `transversal[β]` maps the base point to `β`, for `β` in the orbit.
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(degree: usize, base_point: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base_point] = Some(Permutation::identity(degree));
        Level {
            base_point,
            gens: Vec::new(),
            transversal,
            orbit: vec![base_point],
        }
    }

    fn rebuild_orbit(&mut self) {
        let degree = self.transversal.len();
        self.transversal = vec![None; degree];
        self.transversal[self.base_point] = Some(Permutation::identity(degree));
        self.orbit = vec![self.base_point];
        let mut i = 0;
        while i < self.orbit.len() {
            let beta = self.orbit[i];
            for s in &self.gens {
                let gamma = s.image(beta);
                if self.transversal[gamma].is_none() {
                    let u = self.transversal[beta].as_ref().unwrap().then(s);
                    self.transversal[gamma] = Some(u);
                    self.orbit.push(gamma);
                }
            }
            i += 1;
        }
    }
}

/// A stabilizer chain for a permutation group.
#[derive(Debug, Clone)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, gens: &[Permutation]) -> Result<Self> {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let nontrivial: Vec<_> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        if nontrivial.is_empty() {
            return Ok(chain);
        }
        let first = Level::new(degree, nontrivial[0].first_moved().unwrap());
        chain.levels.push(first);
        chain.levels[0].gens = nontrivial;
        chain.levels[0].rebuild_orbit();
        chain.schreier_sims();
        Ok(chain)
    }

    fn schreier_sims(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        'outer: while i >= 0 {
            let lvl = i as usize;
            let orbit = self.levels[lvl].orbit.clone();
            let gens = self.levels[lvl].gens.clone();
            for &beta in &orbit {
                for s in &gens {
                    let u_beta = self.levels[lvl].transversal[beta].as_ref().unwrap();
                    let gamma = s.image(beta);
                    let u_gamma = self.levels[lvl].transversal[gamma].as_ref().unwrap();
                    let schreier = u_beta.then(s).then(&u_gamma.inverse());
                    if schreier.is_identity() {
                        continue;
                    }
                    let (residue, j) = self.strip(schreier, lvl + 1);
                    if j < self.levels.len() || !residue.is_identity() {
                        if j == self.levels.len() {
                            let bp = residue.first_moved().expect("nontrivial residue");
                            self.levels.push(Level::new(self.degree, bp));
                        }
                        for l in (lvl + 1)..=j {
                            self.levels[l].gens.push(residue.clone());
                            self.levels[l].rebuild_orbit();
                        }
                        i = j as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }

    /// Sift `g` through levels starting at `from`. Returns the residue and
    /// the level at which sifting stopped (`levels.len()` if it passed all).
    fn strip(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let beta = g.image(level.base_point);
            match &level.transversal[beta] {
                Some(u) => g = g.then(&u.inverse()),
                None => return (g, l),
            }
        }
        (g, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (residue, j) = self.strip(g.clone(), 0);
        j == self.levels.len() && residue.is_identity()
    }

    pub fn order(&self) -> Option<u128> {
        self.levels
            .iter()
            .try_fold(1u128, |acc, l| acc.checked_mul(l.orbit.len() as u128))
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// All group elements as products of transversal representatives.
    pub fn elements(&self, cap: usize) -> Result<Vec<Permutation>> {
        let order = self.order().unwrap_or(u128::MAX);
        if order > cap as u128 {
            return Err(Error::too_large(format!(
                "order {} exceeds element cap {}",
                order, cap
            )));
        }
        let mut current = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(current.len() * level.orbit.len());
            for x in &current {
                for &beta in &level.orbit {
                    next.push(x.then(level.transversal[beta].as_ref().unwrap()));
                }
            }
            current = next;
        }
        Ok(current)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(degree: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(degree, s).unwrap()
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 2..=7usize {
            let gens = vec![
                p(n, "(1,2)"),
                Permutation::from_cycles(n, &[(1..=n).collect()]).unwrap(),
            ];
            let chain = StabChain::new(n, &gens).unwrap();
            let fact: u128 = (1..=n as u128).product();
            assert_eq!(chain.order(), Some(fact));
        }
    }

    #[test]
    fn membership_by_sifting() {
        let chain = StabChain::new(5, &[p(5, "(1,2,3)"), p(5, "(3,4,5)")]).unwrap();
        assert_eq!(chain.order(), Some(60));
        assert!(chain.contains(&p(5, "(1,2)(4,5)")));
        assert!(!chain.contains(&p(5, "(1,2)")));
    }

    #[test]
    fn elements_are_distinct_and_complete() {
        let chain = StabChain::new(4, &[p(4, "(1,2,3,4)"), p(4, "(1,3)")]).unwrap();
        let mut els = chain.elements(100).unwrap();
        els.sort();
        els.dedup();
        assert_eq!(els.len(), 8);
        assert!(chain.elements(7).is_err());
    }
}
