use std::fmt::Write as _;

use lconn_core::classes::{self, GroupClass, SeriesKind};
use lconn_core::corpus::describe;
use lconn_core::primes::prime_divisors;
use lconn_core::{PermGroup, PrimeSet, Result};
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct Sub {
    pub order: u128,
    pub label: String,
    pub generators: Vec<String>,
}

impl Sub {
    fn of(g: &PermGroup) -> Self {
        Sub {
            order: g.order(),
            label: describe(g),
            generators: g.generators().iter().map(|x| x.to_string()).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Series {
    pub derived: Vec<Sub>,
    pub lower_central: Vec<Sub>,
    pub upper_central: Vec<Sub>,
    pub fitting: Vec<Sub>,
}

#[derive(Debug, Serialize)]
pub struct Radicals {
    #[serde(rename = "N")]
    pub nilpotent: Sub,
    #[serde(rename = "S")]
    pub soluble: Sub,
    #[serde(rename = "O_pi")]
    pub o_pi: Sub,
}

#[derive(Debug, Serialize)]
pub struct Residuals {
    #[serde(rename = "A")]
    pub abelian: Sub,
    #[serde(rename = "N")]
    pub nilpotent: Sub,
    #[serde(rename = "O^pi")]
    pub o_upper_pi: Sub,
}

#[derive(Debug, Serialize)]
pub struct QueryReport {
    pub group: String,
    pub order: u128,
    pub degree: usize,
    pub label: String,
    pub primes: Vec<u64>,
    pub pi: String,
    pub series: Series,
    pub radicals: Radicals,
    pub residuals: Residuals,
    pub hypercenter: Sub,
    pub nilpotent_length: Option<usize>,
    pub pi_length: Option<usize>,
}

/// Terms up to the first repeat of the stable term.
fn terms(g: &PermGroup, kind: SeriesKind) -> Result<Vec<Sub>> {
    let s = classes::series(g, &kind)?;
    let n = s.terms.len().saturating_sub(1).max(1);
    Ok(s.terms[..n].iter().map(Sub::of).collect())
}

pub fn query(name: &str, g: &PermGroup, pi: &PrimeSet) -> Result<QueryReport> {
    Ok(QueryReport {
        group: name.to_string(),
        order: g.order(),
        degree: g.degree(),
        label: describe(g),
        primes: prime_divisors(g.order()),
        pi: pi.to_string(),
        series: Series {
            derived: terms(g, SeriesKind::Derived)?,
            lower_central: terms(g, SeriesKind::LowerCentral)?,
            upper_central: terms(g, SeriesKind::UpperCentral)?,
            fitting: terms(g, SeriesKind::Fitting)?,
        },
        radicals: Radicals {
            nilpotent: Sub::of(&classes::fitting_subgroup(g)?),
            soluble: Sub::of(&classes::radical(g, &GroupClass::soluble())?),
            o_pi: Sub::of(&classes::o_pi(g, pi)?),
        },
        residuals: Residuals {
            abelian: Sub::of(&classes::residual(g, &GroupClass::abelian())?),
            nilpotent: Sub::of(&classes::residual(g, &GroupClass::nilpotent())?),
            o_upper_pi: Sub::of(&classes::residual(g, &GroupClass::pi_groups(pi.clone()))?),
        },
        hypercenter: Sub::of(&classes::hypercenter(g)?),
        nilpotent_length: classes::nilpotent_length(g)?,
        pi_length: classes::pi_length(g, pi)?,
    })
}

fn chain(subs: &[Sub]) -> String {
    subs.iter().map(|s| s.order.to_string()).collect::<Vec<_>>().join(" < ")
}

fn sub(s: &Sub) -> String {
    format!("{} (order {})", s.label, s.order)
}

fn opt(x: Option<usize>) -> String {
    x.map_or_else(|| "undefined".into(), |n| n.to_string())
}

impl QueryReport {
    pub fn to_text(&self) -> String {
        let primes: Vec<String> = self.primes.iter().map(|p| p.to_string()).collect();
        let mut s = String::new();
        let _ = writeln!(s, "{}: {} of order {} on {} points", self.group, self.label, self.order, self.degree);
        let _ = writeln!(s, "  primes           {{{}}}", primes.join(","));
        let _ = writeln!(s, "  derived          {}", chain(&self.series.derived));
        let _ = writeln!(s, "  lower central    {}", chain(&self.series.lower_central));
        let _ = writeln!(s, "  upper central    {}", chain(&self.series.upper_central));
        let _ = writeln!(s, "  Fitting          {}", chain(&self.series.fitting));
        let _ = writeln!(s, "  F(G)             {}", sub(&self.radicals.nilpotent));
        let _ = writeln!(s, "  soluble radical  {}", sub(&self.radicals.soluble));
        let _ = writeln!(s, "  {:<16} {}", format!("O_{}", self.pi), sub(&self.radicals.o_pi));
        let _ = writeln!(s, "  G^A              {}", sub(&self.residuals.abelian));
        let _ = writeln!(s, "  G^N              {}", sub(&self.residuals.nilpotent));
        let _ = writeln!(s, "  {:<16} {}", format!("O^{}", self.pi), sub(&self.residuals.o_upper_pi));
        let _ = writeln!(s, "  hypercenter      {}", sub(&self.hypercenter));
        let _ = writeln!(s, "  nilpotent length {}", opt(self.nilpotent_length));
        let _ = writeln!(s, "  {:<16} {}", format!("{}-length", self.pi), opt(self.pi_length));
        s
    }
}
