//! NL divisors covering the locus of non-Brill–Noether-general K3 surfaces.
//!
//! A surface fails to be BN general when `L = M + N` with `h⁰(M)h⁰(N) ≥ g + 1`.
//! Writing `n = M²`, `d = L·M` and using Riemann–Roch on both factors yields
//!
//! ```text
//! (n/2 + 2)(g + n/2 + 1 − d) ≥ g + 1
//! g + n/2 + 1 − d ≥ n/2 + 2
//! d² − n(2g − 2) > 0
//! ```
//!
//! which rearranges to `√(2(g−1)n) < d ≤ min{g − 1, (n+2)/2 + g − (2g+2)/(n+4)}`.
//! Both forms are implemented and are expected to agree.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_bigint::BigInt;

use crate::error::Result;
use crate::lattice::{CanonicalDivisor, Genus, NlPair};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    System,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonBnList {
    pub genus: Genus,
    /// `(d, n)` with `d ≥ 1`, even `n ≥ 0`, sorted by `(n, d)`.
    pub pairs: Vec<(u64, u64)>,
    pub method: Method,
}

impl NonBnList {
    pub fn labels(&self) -> impl Iterator<Item = NlPair> + '_ {
        self.pairs
            .iter()
            .map(move |&(d, n)| NlPair::new(self.genus, d, n))
    }

    pub fn divisors(&self) -> BTreeSet<CanonicalDivisor> {
        self.labels()
            .map(|p| p.canonicalize().expect("non-BN labels are valid"))
            .collect()
    }
}

/// Largest even `n` for which `d² > n(2g−2)` has a solution with `d ≤ g − 1`.
fn n_ceiling(g: u64) -> u64 {
    let mut n = 0;
    while (g - 1) * (g - 1) > (n + 2) * (2 * g - 2) {
        n += 2;
    }
    assert!(n <= 2 * g, "enumeration ceiling exceeded 2g at g={g}");
    n
}

pub fn nonbn_closed_form(genus: Genus) -> NonBnList {
    let g = u64::from(genus.get());
    let mut pairs = Vec::new();
    for n in (0..=n_ceiling(g)).step_by(2) {
        let upper = BigRational::from_integer(BigInt::from(n + 2)) / BigInt::from(2)
            + BigRational::from_integer(BigInt::from(g))
            - BigRational::new(BigInt::from(2 * g + 2), BigInt::from(n + 4));
        for d in 1..g {
            if d * d <= n * (2 * g - 2) {
                continue;
            }
            if BigRational::from_integer(BigInt::from(d)) <= upper {
                pairs.push((d, n));
            }
        }
    }
    NonBnList {
        genus,
        pairs,
        method: Method::ClosedForm,
    }
}

pub fn nonbn_system(genus: Genus) -> NonBnList {
    let g = i64::from(genus.get());
    let mut pairs = Vec::new();
    // Generous box; the inequalities themselves do the cutting.
    for n in (0..=4 * g).step_by(2) {
        let h = n / 2;
        for d in 1..=2 * g {
            // h⁰(M)·h⁰(N) ≥ g + 1, kept in that form
            #[allow(clippy::int_plus_one)]
            let ok = (h + 2) * (g + h + 1 - d) >= g + 1
                && g + h + 1 - d >= h + 2
                && d * d - n * (2 * g - 2) > 0;
            if ok {
                pairs.push((d as u64, n as u64));
            }
        }
    }
    NonBnList {
        genus,
        pairs,
        method: Method::System,
    }
}

/// Whether `D^g_{d,n}` is one of the divisors covering the non-BN locus.
pub fn is_nonbn(pair: &NlPair) -> Result<bool> {
    let target = pair.canonicalize()?;
    Ok(nonbn_closed_form(pair.genus).divisors().contains(&target))
}
