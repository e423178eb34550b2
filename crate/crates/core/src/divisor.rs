//! Curve-class loci `C^g_{d,n}`, generator sets of `Pic_ℚ(K_g)`, and relations among them.
//!
//! `C^g_{d,n}` is the locus of surfaces carrying some class `v` with `v·L = d`, `v² = n`.
//! It is a union of irreducible NL divisors: those whose (primitive) lattice contains such a `v`.
//! If `v = xL + yβ'` in a host lattice with discriminant `Δ'`, then `Δ_{d,n} = y²Δ'`.
//! Only the support is modeled; multiplicities are not.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{represent, CanonicalDivisor, Genus, NlPair};
use crate::nonbn::nonbn_closed_form;
use crate::rank::rho;

/// Genera with a Mukai model, for which the boundary generators are known.
pub const MUKAI_GENERA: &[u32] = &[6, 7, 8, 9, 10, 12];

/// Support of `C^g_{d,n}`, ordered by `(Δ, r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportSet {
    pub source: NlPair,
    pub members: BTreeSet<CanonicalDivisor>,
}

impl SupportSet {
    pub fn genus(&self) -> Genus {
        self.source.genus
    }
}

/// Smallest search bound accepted by [`decompose`] for `source`.
///
/// `max(4, Δ)` suffices when `|d| ≤ g − 1`; larger `|d|` push `x` out by `|d|/(2g−2)`.
pub fn minimum_bound(source: &NlPair) -> BigInt {
    let delta = source.discriminant();
    let base = if delta > BigInt::from(4) { delta } else { BigInt::from(4) };
    base + source.d.abs() / source.genus.ell_sq()
}

pub fn decompose(source: &NlPair, bound: &BigInt) -> Result<SupportSet> {
    if let Some(violation) = source.violation() {
        return Err(Error::InvalidSource {
            g: source.genus.get(),
            d: source.d.clone(),
            n: source.n.clone(),
            violation,
        });
    }
    let required = minimum_bound(source);
    if bound < &required {
        return Err(Error::BoundTooSmall {
            bound: bound.clone(),
            required,
        });
    }

    let genus = source.genus;
    let ell = genus.ell_sq();
    let modulus = genus.even_modulus();
    let delta = source.discriminant();
    let mut members = BTreeSet::new();

    let mut k = BigInt::one();
    let k_max = delta.sqrt();
    while k <= k_max {
        let k_sq = &k * &k;
        if delta.is_multiple_of(&k_sq) {
            let host_delta = &delta / &k_sq;
            for r in 0..genus.get() {
                let r_big = BigInt::from(r);
                if !(&r_big * &r_big - &host_delta).is_multiple_of(&modulus) {
                    continue;
                }
                // ±k·r ≡ d (mod 2g−2)
                let kr = &k * &r_big;
                let congruent = (&source.d - &kr).is_multiple_of(&ell)
                    || (&source.d + &kr).is_multiple_of(&ell);
                if !congruent {
                    continue;
                }
                let host = CanonicalDivisor::new(genus, host_delta.clone(), r)?;
                if !represent(&host, source, bound)?.is_empty() {
                    members.insert(host);
                }
            }
        }
        k += 1;
    }

    Ok(SupportSet {
        source: source.clone(),
        members,
    })
}

/// [`decompose`] with the bound set to [`minimum_bound`].
pub fn decompose_default(source: &NlPair) -> Result<SupportSet> {
    decompose(source, &minimum_bound(source))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    pub genus: Genus,
    /// Sorted by the standard label `(n, d)`.
    pub members: Vec<CanonicalDivisor>,
    pub expected_rank: i64,
    pub relation_dim: i64,
}

/// Boundary divisors of the Mukai-model locus: `D_{0,−2}`, the non-BN divisors,
/// and for `g = 6` the divisor `D_{4,0}` of surfaces on a singular Fano threefold.
pub fn generators(genus: Genus) -> Result<GeneratorSet> {
    let g = genus.get();
    if !MUKAI_GENERA.contains(&g) {
        return Err(Error::UnsupportedGenus {
            g,
            supported: MUKAI_GENERA,
        });
    }
    let mut set = BTreeSet::new();
    set.insert(NlPair::new(genus, 0, -2).canonicalize()?);
    set.extend(nonbn_closed_form(genus).divisors());
    if g == 6 {
        set.insert(NlPair::new(genus, 4, 0).canonicalize()?);
    }
    let mut members: Vec<_> = set.into_iter().collect();
    members.sort_by_key(|c| (c.n(), c.r()));

    let expected_rank = rho(genus)?.rho;
    let relation_dim = members.len() as i64 - expected_rank;
    debug_assert!(relation_dim >= 0);
    Ok(GeneratorSet {
        genus,
        members,
        expected_rank,
        relation_dim,
    })
}

/// `Σ cᵢ·D_{dᵢ,nᵢ} = 0` among NL divisors of one genus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearRelation {
    pub genus: Genus,
    pub terms: Vec<(i64, NlPair)>,
}

impl LinearRelation {
    pub fn new(genus: Genus, terms: &[(i64, i64, i64)]) -> Self {
        LinearRelation {
            genus,
            terms: terms
                .iter()
                .map(|&(c, d, n)| (c, NlPair::new(genus, d, n)))
                .collect(),
        }
    }
}

/// The genus-12 relation
/// `3D_{8,2} − D_{9,2} − 4D_{10,4} + 2D_{11,4} + 8D_{4,0} − 5D_{5,0} + D_{6,0} = 0`.
///
/// Coefficients come from vector-valued cusp forms of weight 21/2 and are recorded
/// as given, not recomputed.
pub fn peterson_relation() -> LinearRelation {
    LinearRelation::new(
        Genus::new(12).expect("12 >= 2"),
        &[
            (3, 8, 2),
            (-1, 9, 2),
            (-4, 10, 4),
            (2, 11, 4),
            (8, 4, 0),
            (-5, 5, 0),
            (1, 6, 0),
        ],
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }

    pub fn status(&self) -> &'static str {
        if self.passed {
            "PASS"
        } else {
            "FAIL"
        }
    }
}

/// Structural checks on a relation: labels are valid divisors, they belong to the
/// generator set of their genus, and that set carries exactly one relation.
pub fn check_relation(relation: &LinearRelation) -> Vec<Check> {
    let invalid: Vec<String> = relation
        .terms
        .iter()
        .filter(|(_, p)| !p.is_valid())
        .map(|(_, p)| p.to_string())
        .collect();
    let validity = Check::new(
        "relation_labels_valid",
        invalid.is_empty(),
        if invalid.is_empty() {
            format!("{} labels valid", relation.terms.len())
        } else {
            format!("invalid: {}", invalid.join(" "))
        },
    );

    let gens = generators(relation.genus);
    let membership = match &gens {
        Ok(set) => {
            let missing: Vec<String> = relation
                .terms
                .iter()
                .filter(|(_, p)| match p.canonicalize() {
                    Ok(c) => !set.members.contains(&c),
                    Err(_) => true,
                })
                .map(|(_, p)| p.to_string())
                .collect();
            Check::new(
                "relation_labels_in_generators",
                missing.is_empty(),
                if missing.is_empty() {
                    "all labels are generators".to_string()
                } else {
                    format!("not generators: {}", missing.join(" "))
                },
            )
        }
        Err(e) => Check::new("relation_labels_in_generators", false, e.to_string()),
    };

    let dimension = match &gens {
        Ok(set) => Check::new(
            "relation_space_one_dimensional",
            set.relation_dim == 1,
            format!(
                "{} generators, rank {}, relation_dim {}",
                set.members.len(),
                set.expected_rank,
                set.relation_dim
            ),
        ),
        Err(e) => Check::new("relation_space_one_dimensional", false, e.to_string()),
    };

    vec![validity, membership, dimension]
}

pub fn check_peterson_relation() -> Vec<Check> {
    check_relation(&peterson_relation())
}

/// Elliptic divisors `D_{d,0}`, `1 ≤ d ≤ d_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllipticDivisors {
    pub genus: Genus,
    /// Classes whose standard label is `D_{d,0}` itself.
    pub members: Vec<CanonicalDivisor>,
    /// `(d, class)` for `d ≥ g` whose standard label has `n ≠ 0`.
    pub folded: Vec<(u64, CanonicalDivisor)>,
}

pub fn elliptic_divisors(genus: Genus, d_max: u64) -> EllipticDivisors {
    let mut members = Vec::new();
    let mut folded = Vec::new();
    let mut seen = BTreeSet::new();
    for d in 1..=d_max {
        let class = NlPair::new(genus, d, 0)
            .canonicalize()
            .expect("d > 0 gives positive discriminant");
        if !seen.insert(class.clone()) {
            continue;
        }
        if class.n().is_zero() {
            members.push(class);
        } else {
            folded.push((d, class));
        }
    }
    EllipticDivisors {
        genus,
        members,
        folded,
    }
}
