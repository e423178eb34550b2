//! Consolidated verification report over all genera with a Mukai model.

use std::collections::BTreeSet;

use crate::divisor::{
    check_peterson_relation, decompose_default, generators, Check, GeneratorSet, SupportSet,
    MUKAI_GENERA,
};
use crate::error::Result;
use crate::lattice::{CanonicalDivisor, Genus, NlPair};
use crate::mukai::{git_facts, MukaiCatalog};
use crate::nonbn::{nonbn_closed_form, nonbn_system};
use crate::rank::{rho, RhoBreakdown};
use crate::reference;

#[derive(Debug, Clone)]
pub struct GenusReport {
    pub genus: Genus,
    pub rho: RhoBreakdown,
    pub generators: GeneratorSet,
    pub decompositions: Vec<SupportSet>,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub genera: Vec<GenusReport>,
    /// Checks not tied to one Mukai genus.
    pub global: Vec<Check>,
}

impl Report {
    pub fn all_checks(&self) -> impl Iterator<Item = (Option<u32>, &Check)> {
        self.genera
            .iter()
            .flat_map(|r| r.checks.iter().map(move |c| (Some(r.genus.get()), c)))
            .chain(self.global.iter().map(|c| (None, c)))
    }

    pub fn passed(&self) -> bool {
        self.all_checks().all(|(_, c)| c.passed)
    }
}

fn canonical_set(genus: Genus, pairs: &[(i64, i64)]) -> Result<BTreeSet<CanonicalDivisor>> {
    pairs
        .iter()
        .map(|&(d, n)| NlPair::new(genus, d, n).canonicalize())
        .collect()
}

fn join<'a>(it: impl IntoIterator<Item = &'a CanonicalDivisor>) -> String {
    it.into_iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

fn genus_report(genus: Genus, catalog: &MukaiCatalog) -> Result<GenusReport> {
    let g = genus.get();
    let mut checks = Vec::new();

    let breakdown = rho(genus)?;
    if let Some(&(_, anchor)) = reference::RANK_ANCHORS.iter().find(|(h, _)| *h == g) {
        checks.push(Check::new(
            "rho_anchor",
            breakdown.rho == anchor,
            format!("rho = {}, reference {anchor}", breakdown.rho),
        ));
    }

    let closed = nonbn_closed_form(genus);
    let system = nonbn_system(genus);
    checks.push(Check::new(
        "nonbn_methods_agree",
        closed.divisors() == system.divisors(),
        format!("{} divisors", closed.pairs.len()),
    ));
    let elliptic: Vec<u64> = closed.pairs.iter().filter(|p| p.1 == 0).map(|p| p.0).collect();
    let want: Vec<u64> = (1..=u64::from(reference::nonbn_elliptic_count(g))).collect();
    checks.push(Check::new(
        "nonbn_elliptic_part",
        elliptic == want,
        format!("d = 1..{}", elliptic.len()),
    ));
    if let Some(expected) = reference::nonbn_positive(g) {
        let got: Vec<(i64, i64)> = closed
            .pairs
            .iter()
            .filter(|p| p.1 > 0)
            .map(|&(d, n)| (d as i64, n as i64))
            .collect();
        checks.push(Check::new(
            "nonbn_positive_part",
            got == expected,
            format!("{got:?}"),
        ));
    }

    let gens = generators(genus)?;
    if let Some(expected) = reference::generators(g) {
        let expected = canonical_set(genus, &expected)?;
        let got: BTreeSet<_> = gens.members.iter().cloned().collect();
        checks.push(Check::new(
            "generators_match_reference",
            got == expected && got.len() == gens.members.len(),
            join(&gens.members),
        ));
    }
    let wanted_dim = if g == 12 { 1 } else { 0 };
    checks.push(Check::new(
        "generator_count",
        gens.relation_dim == wanted_dim,
        format!(
            "{} generators, rank {}, relation_dim {}",
            gens.members.len(),
            gens.expected_rank,
            gens.relation_dim
        ),
    ));

    let mut decompositions = Vec::new();
    let c10 = decompose_default(&NlPair::new(genus, 1, 0))?;
    checks.push(Check::new(
        "c10_support",
        c10.members == canonical_set(genus, &[(1, 0)])?,
        join(&c10.members),
    ));
    decompositions.push(c10);
    let c20 = decompose_default(&NlPair::new(genus, 2, 0))?;
    if let Some(expected) = reference::c20_support(g) {
        checks.push(Check::new(
            "c20_support",
            c20.members == canonical_set(genus, expected)?,
            join(&c20.members),
        ));
    }
    decompositions.push(c20);

    match catalog.check_dimensions(g) {
        Ok(cs) => checks.extend(cs),
        Err(e) => checks.push(Check::new("catalog_entry", false, e.to_string())),
    }
    match catalog.check_degrees(g) {
        Ok(c) => checks.push(c),
        Err(e) => checks.push(Check::new("surface_degree", false, e.to_string())),
    }

    if g == 12 {
        checks.extend(git_facts(12));
        checks.extend(check_peterson_relation());
    }

    Ok(GenusReport {
        genus,
        rho: breakdown,
        generators: gens,
        decompositions,
        checks,
    })
}

pub fn build_report(catalog: &MukaiCatalog) -> Result<Report> {
    let genera = MUKAI_GENERA
        .iter()
        .map(|&g| genus_report(Genus::new(g)?, catalog))
        .collect::<Result<Vec<_>>>()?;

    let mut global = Vec::new();
    for &(g, expected) in reference::LOW_GENUS_RANKS {
        let got = rho(Genus::new(g)?)?.rho;
        global.push(Check::new(
            format!("low_genus_rho_{g}"),
            got == expected,
            format!("rho = {got}, reference {expected}"),
        ));
    }
    let integral = (2..=200).all(|g| Genus::new(g).and_then(rho).is_ok());
    global.push(Check::new(
        "rho_integral_2_200",
        integral,
        "rank formula integral for 2 <= g <= 200",
    ));
    Ok(Report { genera, global })
}
