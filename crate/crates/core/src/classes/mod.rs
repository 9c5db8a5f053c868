//! Classes of groups as values: membership, closure flags, and the
//! radicals, residuals and series they induce.

mod predicates;
mod radical;
mod series;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::primes::PrimeSet;
use crate::quotient::QuotientMap;

pub use predicates::*;
pub use radical::{
    normal_subgroups, normal_subgroups_capped, radical, residual, residual_generic, DEFAULT_ORACLE_CAP,
};
pub use series::*;

/// Closure properties asserted when a class is registered.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ClassFlags {
    pub formation: bool,
    pub fitting_class: bool,
    pub saturated: bool,
    pub contains_all_nilpotent: bool,
    pub contains_all_abelian: bool,
    pub soluble_only: bool,
    pub q_closed: bool,
}

impl ClassFlags {
    const ALL: ClassFlags = ClassFlags {
        formation: true,
        fitting_class: true,
        saturated: true,
        contains_all_nilpotent: true,
        contains_all_abelian: true,
        soluble_only: true,
        q_closed: true,
    };
}

pub type MembershipFn = Arc<dyn Fn(&PermGroup) -> Result<bool> + Send + Sync>;

#[derive(Clone)]
pub enum ClassKind {
    Trivial,
    Abelian,
    Nilpotent,
    Soluble,
    /// `N^k`: soluble of nilpotent length at most `k`
    NilpotentLength(u32),
    /// derived subgroup nilpotent
    NilpotentDerived,
    /// `E_π`
    PiGroups(PrimeSet),
    /// `S_π`
    SolublePi(PrimeSet),
    /// `S_π S_ρ`
    PiByRho(PrimeSet, PrimeSet),
    Supersoluble,
    /// `N∘F`: extensions of a nilpotent normal subgroup by a member of `F`
    NilpotentBy(Box<GroupClass>),
    Custom(MembershipFn),
}

/// A named group class.
#[derive(Clone)]
pub struct GroupClass {
    name: String,
    kind: ClassKind,
    flags: ClassFlags,
}

impl fmt::Debug for GroupClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupClass({})", self.name)
    }
}

impl PartialEq for GroupClass {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
    }
}

impl GroupClass {
    fn built_in(name: impl Into<String>, kind: ClassKind, flags: ClassFlags) -> Self {
        GroupClass {
            name: name.into(),
            kind,
            flags,
        }
    }

    /// Register a class from a predicate. The flags are taken on trust.
    pub fn custom(
        name: impl Into<String>,
        flags: ClassFlags,
        member: impl Fn(&PermGroup) -> Result<bool> + Send + Sync + 'static,
    ) -> Self {
        Self::built_in(name, ClassKind::Custom(Arc::new(member)), flags)
    }

    pub fn trivial() -> Self {
        Self::built_in(
            "1",
            ClassKind::Trivial,
            ClassFlags {
                contains_all_nilpotent: false,
                contains_all_abelian: false,
                ..ClassFlags::ALL
            },
        )
    }

    pub fn abelian() -> Self {
        Self::built_in(
            "A",
            ClassKind::Abelian,
            ClassFlags {
                formation: true,
                contains_all_abelian: true,
                soluble_only: true,
                q_closed: true,
                ..ClassFlags::default()
            },
        )
    }

    pub fn nilpotent() -> Self {
        Self::built_in("N", ClassKind::Nilpotent, ClassFlags::ALL)
    }

    pub fn soluble() -> Self {
        Self::built_in("S", ClassKind::Soluble, ClassFlags::ALL)
    }

    /// `N^k`, `k ≥ 1`; `N^1` is `N`.
    pub fn nilpotent_length(k: u32) -> Self {
        assert!(k >= 1, "nilpotent length classes start at k = 1");
        if k == 1 {
            return Self::nilpotent();
        }
        Self::built_in(format!("N^{k}"), ClassKind::NilpotentLength(k), ClassFlags::ALL)
    }

    pub fn nilpotent_derived() -> Self {
        Self::built_in(
            "NA",
            ClassKind::NilpotentDerived,
            ClassFlags {
                fitting_class: false,
                ..ClassFlags::ALL
            },
        )
    }

    pub fn pi_groups(pi: PrimeSet) -> Self {
        Self::built_in(
            format!("Epi[{}]", pi.to_list()),
            ClassKind::PiGroups(pi),
            ClassFlags {
                contains_all_nilpotent: false,
                contains_all_abelian: false,
                soluble_only: false,
                ..ClassFlags::ALL
            },
        )
    }

    pub fn soluble_pi(pi: PrimeSet) -> Self {
        Self::built_in(
            format!("Spi[{}]", pi.to_list()),
            ClassKind::SolublePi(pi),
            ClassFlags {
                contains_all_nilpotent: false,
                contains_all_abelian: false,
                ..ClassFlags::ALL
            },
        )
    }

    pub fn pi_by_rho(pi: PrimeSet, rho: PrimeSet) -> Self {
        Self::built_in(
            format!("SpiSrho[{}|{}]", pi.to_list(), rho.to_list()),
            ClassKind::PiByRho(pi, rho),
            ClassFlags {
                contains_all_nilpotent: false,
                contains_all_abelian: false,
                ..ClassFlags::ALL
            },
        )
    }

    pub fn supersoluble() -> Self {
        Self::built_in(
            "U",
            ClassKind::Supersoluble,
            ClassFlags {
                fitting_class: false,
                ..ClassFlags::ALL
            },
        )
    }

    /// `N∘F`, for a formation `F`.
    pub fn nilpotent_by(f: &GroupClass) -> Result<Self> {
        if !f.flags.formation {
            return Err(Error::NotAFormation(f.name.clone()));
        }
        let flags = ClassFlags {
            formation: true,
            fitting_class: f.flags.fitting_class,
            saturated: true,
            contains_all_nilpotent: true,
            contains_all_abelian: true,
            soluble_only: f.flags.soluble_only,
            q_closed: true,
        };
        Ok(Self::built_in(
            format!("N({})", f.name),
            ClassKind::NilpotentBy(Box::new(f.clone())),
            flags,
        ))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn flags(&self) -> ClassFlags {
        self.flags
    }

    pub fn kind(&self) -> &ClassKind {
        &self.kind
    }

    /// Membership predicate.
    pub fn contains(&self, g: &PermGroup) -> Result<bool> {
        match &self.kind {
            ClassKind::Trivial => Ok(g.is_trivial()),
            ClassKind::Abelian => Ok(g.is_abelian()),
            ClassKind::Nilpotent => is_nilpotent(g),
            ClassKind::Soluble => is_soluble(g),
            ClassKind::NilpotentLength(k) => is_n_k(g, *k),
            ClassKind::NilpotentDerived => is_na(g),
            ClassKind::PiGroups(pi) => Ok(is_pi_group(g, pi)),
            ClassKind::SolublePi(pi) => Ok(is_pi_group(g, pi) && is_soluble(g)?),
            ClassKind::PiByRho(pi, rho) => is_spi_srho(g, pi, rho),
            ClassKind::Supersoluble => is_supersoluble(g),
            ClassKind::NilpotentBy(f) => {
                let fit = fitting_subgroup(g)?;
                let q = QuotientMap::new_unchecked(g, &fit)?;
                f.contains(q.image())
            }
            ClassKind::Custom(pred) => pred(g),
        }
    }

    pub fn require_fitting(&self) -> Result<()> {
        if self.flags.fitting_class {
            Ok(())
        } else {
            Err(Error::NotAFittingClass(self.name.clone()))
        }
    }

    pub fn require_formation(&self) -> Result<()> {
        if self.flags.formation {
            Ok(())
        } else {
            Err(Error::NotAFormation(self.name.clone()))
        }
    }

    /// Parse a CLI class name: `1`, `A`, `N`, `S`, `N^k`, `NA`, `U`,
    /// `Epi[2,3]`, `Spi[2]`, `SpiSrho[2|3]`, and `N(F)` for any of these.
    pub fn parse(name: &str) -> Result<Self> {
        let name = name.trim();
        let unknown = || Error::UnknownClass(name.to_string());
        let bracket = |prefix: &str| -> Option<&str> {
            name.strip_prefix(prefix)?
                .strip_prefix('[')?
                .strip_suffix(']')
        };
        let primes = |s: &str| -> Result<PrimeSet> { s.parse::<PrimeSet>().map_err(|_| unknown()) };
        Ok(match name {
            "1" => Self::trivial(),
            "A" => Self::abelian(),
            "N" => Self::nilpotent(),
            "S" => Self::soluble(),
            "NA" => Self::nilpotent_derived(),
            "U" => Self::supersoluble(),
            _ => {
                if let Some(k) = name.strip_prefix("N^") {
                    let k: u32 = k.parse().map_err(|_| unknown())?;
                    if k == 0 {
                        return Err(unknown());
                    }
                    Self::nilpotent_length(k)
                } else if let Some(inner) = name.strip_prefix("N(").and_then(|s| s.strip_suffix(')')) {
                    Self::nilpotent_by(&Self::parse(inner)?)?
                } else if let Some(body) = bracket("SpiSrho") {
                    let (pi, rho) = body.split_once('|').ok_or_else(unknown)?;
                    Self::pi_by_rho(primes(pi)?, primes(rho)?)
                } else if let Some(body) = bracket("Spi") {
                    Self::soluble_pi(primes(body)?)
                } else if let Some(body) = bracket("Epi") {
                    Self::pi_groups(primes(body)?)
                } else {
                    return Err(unknown());
                }
            }
        })
    }
}

/// Named classes available by lookup.
#[derive(Clone)]
pub struct ClassRegistry {
    classes: BTreeMap<String, GroupClass>,
}

impl ClassRegistry {
    pub fn get(&self, name: &str) -> Result<GroupClass> {
        match self.classes.get(name) {
            Some(c) => Ok(c.clone()),
            None => GroupClass::parse(name),
        }
    }

    pub fn register(&mut self, class: GroupClass) {
        self.classes.insert(class.name.clone(), class);
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.classes.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = &GroupClass> {
        self.classes.values()
    }
}

/// The standard registry; parametrised names resolve on lookup as well.
pub fn built_in_classes() -> ClassRegistry {
    let mut reg = ClassRegistry {
        classes: BTreeMap::new(),
    };
    for c in [
        GroupClass::trivial(),
        GroupClass::abelian(),
        GroupClass::nilpotent(),
        GroupClass::soluble(),
        GroupClass::nilpotent_length(2),
        GroupClass::nilpotent_length(3),
        GroupClass::nilpotent_derived(),
        GroupClass::supersoluble(),
        GroupClass::pi_groups(PrimeSet::single(2)),
        GroupClass::soluble_pi(PrimeSet::single(2)),
        GroupClass::pi_by_rho(PrimeSet::single(2), PrimeSet::single(3)),
    ] {
        reg.register(c);
    }
    for f in ["A", "N", "U"] {
        let base = reg.get(f).expect("registered");
        reg.register(GroupClass::nilpotent_by(&base).expect("formation"));
    }
    reg
}
