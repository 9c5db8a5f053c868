use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::ops::is_normal;
use crate::perm::{Permutation, Point};

/// `G → G/N` realised by the action of `G` on the right cosets of `N`.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    source: PermGroup,
    kernel: PermGroup,
    image: PermGroup,
    kind: Kind,
}

#[derive(Clone, Debug)]
enum Kind {
    /// `N = 1`: the image is the source itself.
    Faithful,
    /// `N = G`
    Collapse,
    Cosets {
        /// element index in `source` → coset id
        coset_of: Vec<u32>,
        /// coset id → element index of its least element
        reps: Vec<u32>,
    },
}

/// Build `G/N`.
pub fn quotient(g: &PermGroup, n: &PermGroup) -> Result<QuotientMap> {
    if !is_normal(n, g)? {
        return Err(Error::NotNormal);
    }
    QuotientMap::new_unchecked(g, n)
}

impl QuotientMap {
    pub(crate) fn new_unchecked(g: &PermGroup, n: &PermGroup) -> Result<Self> {
        if n.is_trivial() {
            return Ok(QuotientMap {
                source: g.clone(),
                kernel: n.clone(),
                image: g.clone(),
                kind: Kind::Faithful,
            });
        }
        if n.order() == g.order() {
            return Ok(QuotientMap {
                source: g.clone(),
                kernel: n.clone(),
                image: PermGroup::trivial(1),
                kind: Kind::Collapse,
            });
        }
        let els = g.elements()?;
        let kernel_els = n.elements()?;
        let mut coset_of = vec![u32::MAX; els.len()];
        let mut reps = Vec::new();
        for (i, x) in els.iter().enumerate() {
            if coset_of[i] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(i as u32);
            for k in kernel_els {
                let j = g.index_of(&k.then(x)).expect("closed");
                coset_of[j] = id;
            }
        }
        let index = reps.len();
        if index > Point::MAX as usize {
            return Err(Error::too_large(format!("quotient of degree {index}")));
        }
        let action = |x: &Permutation| -> Permutation {
            Permutation::from_points_unchecked(reps.iter().map(|&r| {
                let y = els[r as usize].then(x);
                coset_of[g.index_of(&y).expect("closed")] as Point
            }))
        };
        let gens: Vec<Permutation> = g.generators().iter().map(action).collect();
        let image = PermGroup::closure(index, &gens)?;
        debug_assert_eq!(image.order() * n.order(), g.order());
        Ok(QuotientMap {
            source: g.clone(),
            kernel: n.clone(),
            image,
            kind: Kind::Cosets { coset_of, reps },
        })
    }

    pub fn source(&self) -> &PermGroup {
        &self.source
    }

    pub fn kernel(&self) -> &PermGroup {
        &self.kernel
    }

    pub fn image(&self) -> &PermGroup {
        &self.image
    }

    /// The induced permutation of the cosets.
    pub fn forward(&self, x: &Permutation) -> Permutation {
        match &self.kind {
            Kind::Faithful => x.clone(),
            Kind::Collapse => Permutation::identity(1),
            Kind::Cosets { coset_of, reps } => {
                let els = self.source.elements().expect("cosets built from elements");
                Permutation::from_points_unchecked(reps.iter().map(|&r| {
                    let y = els[r as usize].then(x);
                    coset_of[self.source.index_of(&y).expect("x in source")] as Point
                }))
            }
        }
    }

    /// Image of a subgroup of the source.
    pub fn map_subgroup(&self, h: &PermGroup) -> Result<PermGroup> {
        let gens: Vec<Permutation> = h.generators().iter().map(|x| self.forward(x)).collect();
        PermGroup::closure(self.image.degree(), &gens)
    }

    /// Full preimage of a subgroup of the image.
    pub fn pullback(&self, h: &PermGroup) -> Result<PermGroup> {
        match &self.kind {
            Kind::Faithful => Ok(h.clone()),
            Kind::Collapse => Ok(self.source.clone()),
            Kind::Cosets { coset_of, reps } => {
                let els = self.source.elements()?;
                let rep_images: Vec<Permutation> = reps
                    .iter()
                    .map(|&r| self.forward(&els[r as usize]))
                    .collect();
                let keep: Vec<bool> = rep_images.iter().map(|p| h.includes(p)).collect();
                let elements: Vec<Permutation> = els
                    .iter()
                    .zip(coset_of)
                    .filter(|(_, &c)| keep[c as usize])
                    .map(|(x, _)| x.clone())
                    .collect();
                let mut gens = self.kernel.generators().to_vec();
                for hg in h.generators() {
                    let c = rep_images
                        .iter()
                        .position(|p| p == hg)
                        .ok_or(Error::ContainmentViolation)?;
                    gens.push(els[reps[c] as usize].clone());
                }
                Ok(PermGroup::from_sorted_elements(
                    self.source.degree(),
                    gens,
                    elements,
                ))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(degree: usize, gens: &[&str]) -> PermGroup {
        let gens: Vec<_> = gens
            .iter()
            .map(|s| Permutation::parse_cycles(degree, s).unwrap())
            .collect();
        PermGroup::closure(degree, &gens).unwrap()
    }

    #[test]
    fn s4_mod_klein() {
        let g = grp(4, &["(1,2)", "(1,2,3,4)"]);
        let v = grp(4, &["(1,2)(3,4)", "(1,3)(2,4)"]);
        let q = quotient(&g, &v).unwrap();
        assert_eq!(q.image().order(), 6);
        assert_eq!(q.image().order() * v.order(), g.order());
        let els = g.elements().unwrap();
        for a in els {
            assert_eq!(q.forward(a).is_identity(), v.includes(a));
            for b in els {
                assert_eq!(q.forward(&a.then(b)), q.forward(a).then(&q.forward(b)));
            }
        }
        // preimage of the trivial subgroup is the kernel
        assert_eq!(q.pullback(&PermGroup::trivial(q.image().degree())).unwrap(), v);
        assert_eq!(q.pullback(q.image()).unwrap(), g);
    }

    #[test]
    fn degenerate_quotients() {
        let g = grp(4, &["(1,2)", "(1,2,3,4)"]);
        assert_eq!(quotient(&g, &PermGroup::trivial(4)).unwrap().image().order(), 24);
        assert!(quotient(&g, &g).unwrap().image().is_trivial());
        let t = grp(4, &["(1,2)"]);
        assert_eq!(quotient(&g, &t).unwrap_err(), Error::NotNormal);
    }
}
