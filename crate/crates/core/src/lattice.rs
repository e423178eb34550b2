//! Rank-two even lattices `⟨L, β⟩` with Gram matrix `[[2g−2, d], [d, n]]`.
//!
//! A label `(g, d, n)` names the NL divisor `D^g_{d,n}`. Two labels name the same
//! divisor when the lattices are isometric over a map fixing `L`, i.e. when they are
//! related by `β ↦ ±β + mL`. The invariants of that orbit are the discriminant
//! `Δ = d² − (2g−2)n` and the folded residue of `d` modulo `2g−2`, which is what
//! [`CanonicalDivisor`] stores.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result, Violation};

/// Genus of a quasi-polarization, `g ≥ 2`, so that `L² = 2g − 2 > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Genus(u32);

impl Genus {
    pub fn new(g: u32) -> Result<Self> {
        if g < 2 {
            return Err(Error::InvalidGenus(g));
        }
        Ok(Genus(g))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// `L² = 2g − 2`.
    pub fn ell_sq(self) -> BigInt {
        BigInt::from(2 * u64::from(self.0) - 2)
    }

    /// `4g − 4`, the modulus for which `r² ≡ Δ` characterizes even lattices.
    pub fn even_modulus(self) -> BigInt {
        BigInt::from(4 * u64::from(self.0) - 4)
    }

    /// Maps a residue of `d` modulo `2g − 2` to its representative in `[0, g − 1]`.
    pub fn fold(self, d: &BigInt) -> u32 {
        let m = self.ell_sq();
        let s = d.mod_floor(&m);
        let t = &m - &s;
        let r = if s <= t { s } else { t };
        r.to_u32().expect("folded residue is at most g - 1")
    }
}

impl fmt::Display for Genus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A label `(g, d, n)` with `d = L·β` and `n = β²`. Not necessarily valid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NlPair {
    pub genus: Genus,
    pub d: BigInt,
    pub n: BigInt,
}

impl NlPair {
    pub fn new(genus: Genus, d: impl Into<BigInt>, n: impl Into<BigInt>) -> Self {
        NlPair {
            genus,
            d: d.into(),
            n: n.into(),
        }
    }

    /// `Δ^g_{d,n} = d² − (2g−2)n`.
    pub fn discriminant(&self) -> BigInt {
        &self.d * &self.d - self.genus.ell_sq() * &self.n
    }

    /// The first condition that keeps this label from naming a divisor, if any.
    pub fn violation(&self) -> Option<Violation> {
        if self.n.is_odd() {
            Some(Violation::OddSelfIntersection)
        } else if !self.discriminant().is_positive() {
            Some(Violation::NonPositiveDiscriminant)
        } else {
            None
        }
    }

    pub fn is_valid(&self) -> bool {
        self.violation().is_none()
    }

    pub fn canonicalize(&self) -> Result<CanonicalDivisor> {
        if let Some(violation) = self.violation() {
            return Err(Error::InvalidDivisor {
                g: self.genus.get(),
                d: self.d.clone(),
                n: self.n.clone(),
                violation,
            });
        }
        Ok(CanonicalDivisor {
            genus: self.genus,
            delta: self.discriminant(),
            r: self.genus.fold(&self.d),
        })
    }

    /// Applies `β ↦ β + mL`.
    pub fn shift(&self, m: &BigInt) -> NlPair {
        let ell = self.genus.ell_sq();
        NlPair {
            genus: self.genus,
            d: &self.d + m * &ell,
            n: &self.n + BigInt::from(2) * m * &self.d + m * m * &ell,
        }
    }

    /// Applies `β ↦ −β`.
    pub fn negate(&self) -> NlPair {
        NlPair {
            genus: self.genus,
            d: -&self.d,
            n: self.n.clone(),
        }
    }
}

impl fmt::Display for NlPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D_{{{},{}}}", self.d, self.n)
    }
}

/// Normal form `(g, Δ, r)` of an irreducible NL divisor.
///
/// Ordered by `(g, Δ, r)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalDivisor {
    genus: Genus,
    delta: BigInt,
    r: u32,
}

impl CanonicalDivisor {
    pub fn new(genus: Genus, delta: BigInt, r: u32) -> Result<Self> {
        let invalid = |reason| Error::InvalidCanonical {
            g: genus.get(),
            delta: delta.clone(),
            r,
            reason,
        };
        if !delta.is_positive() {
            return Err(invalid("delta must be positive"));
        }
        if r > genus.get() - 1 {
            return Err(invalid("r must lie in [0, g-1]"));
        }
        let r_sq = BigInt::from(r) * BigInt::from(r);
        if !(r_sq - &delta).is_multiple_of(&genus.even_modulus()) {
            return Err(invalid("r^2 must be congruent to delta mod 4g-4"));
        }
        Ok(CanonicalDivisor { genus, delta, r })
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn delta(&self) -> &BigInt {
        &self.delta
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// `n = (r² − Δ)/(2g − 2)` of the standard representative.
    pub fn n(&self) -> BigInt {
        let r = BigInt::from(self.r);
        (&r * &r - &self.delta) / self.genus.ell_sq()
    }

    /// The label `(g, r, n(r))`, which canonicalizes back to `self`.
    pub fn standard_pair(&self) -> NlPair {
        NlPair::new(self.genus, self.r, self.n())
    }
}

impl fmt::Display for CanonicalDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D_{{{},{}}}", self.r, self.n())
    }
}

pub fn equivalent(a: &NlPair, b: &NlPair) -> Result<bool> {
    if a.genus != b.genus {
        return Err(Error::GenusMismatch {
            left: a.genus.get(),
            right: b.genus.get(),
        });
    }
    Ok(a.canonicalize()? == b.canonicalize()?)
}

fn check_same_genus(host: &CanonicalDivisor, target: &NlPair) -> Result<()> {
    if host.genus != target.genus {
        return Err(Error::GenusMismatch {
            left: host.genus.get(),
            right: target.genus.get(),
        });
    }
    Ok(())
}

/// Whether `v = xL + yβ'` in the host lattice has `v·L = target.d` and `v² = target.n`.
fn satisfies(host: &NlPair, target: &NlPair, x: &BigInt, y: &BigInt) -> bool {
    let ell = host.genus.ell_sq();
    let dot = x * &ell + y * &host.d;
    if dot != target.d {
        return false;
    }
    let sq = x * x * &ell + BigInt::from(2) * x * y * &host.d + y * y * &host.n;
    sq == target.n
}

fn sort_solutions(solutions: &mut [(BigInt, BigInt)]) {
    solutions.sort_by(|(x1, y1), (x2, y2)| {
        (y1.abs(), y1, x1).cmp(&(y2.abs(), y2, x2))
    });
}

/// All `(x, y)` with `|x|, |y| ≤ bound` such that `xL + yβ'` has invariants
/// `(target.d, target.n)`, where `β'` is the standard representative of `host`.
///
/// Uses `Δ_target = y²·Δ_host` to fix `|y|`, then solves the linear equation for `x`.
/// Ordered by `(|y|, y, x)`.
pub fn represent(
    host: &CanonicalDivisor,
    target: &NlPair,
    bound: &BigInt,
) -> Result<Vec<(BigInt, BigInt)>> {
    check_same_genus(host, target)?;
    let base = host.standard_pair();
    let ell = host.genus.ell_sq();
    let delta_t = target.discriminant();

    let ys: Vec<BigInt> = if delta_t.is_zero() {
        vec![BigInt::zero()]
    } else if delta_t.is_negative() {
        Vec::new()
    } else {
        let (q, rem) = delta_t.div_rem(&host.delta);
        if !rem.is_zero() {
            Vec::new()
        } else {
            let k = q.sqrt();
            if &k * &k != q {
                Vec::new()
            } else {
                vec![-k.clone(), k]
            }
        }
    };

    let mut solutions = Vec::new();
    for y in ys {
        if &y.abs() > bound {
            continue;
        }
        // x·(2g−2) = d − y·d'
        let (x, rem) = (&target.d - &y * &base.d).div_rem(&ell);
        if !rem.is_zero() || &x.abs() > bound {
            continue;
        }
        if satisfies(&base, target, &x, &y) {
            solutions.push((x, y));
        }
    }
    sort_solutions(&mut solutions);
    Ok(solutions)
}

/// Same contract as [`represent`], by scanning the whole box `|x|, |y| ≤ bound`.
pub fn represent_exhaustive(
    host: &CanonicalDivisor,
    target: &NlPair,
    bound: u64,
) -> Result<Vec<(BigInt, BigInt)>> {
    check_same_genus(host, target)?;
    let base = host.standard_pair();
    let b = i64::try_from(bound).expect("exhaustive bound fits in i64");
    let mut solutions = Vec::new();
    for y in -b..=b {
        let y = BigInt::from(y);
        for x in -b..=b {
            let x = BigInt::from(x);
            if satisfies(&base, target, &x, &y) {
                solutions.push((x, y.clone()));
            }
        }
    }
    sort_solutions(&mut solutions);
    Ok(solutions)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(g: u32, d: i64, n: i64) -> NlPair {
        NlPair::new(Genus::new(g).unwrap(), d, n)
    }

    fn canon(g: u32, delta: i64, r: u32) -> CanonicalDivisor {
        CanonicalDivisor::new(Genus::new(g).unwrap(), delta.into(), r).unwrap()
    }

    fn sol(x: i64, y: i64) -> (BigInt, BigInt) {
        (x.into(), y.into())
    }

    #[test]
    fn genus_below_two_rejected() {
        assert_eq!(Genus::new(1), Err(Error::InvalidGenus(1)));
        assert_eq!(Genus::new(0), Err(Error::InvalidGenus(0)));
        assert!(Genus::new(2).is_ok());
    }

    #[test]
    fn discriminant_values() {
        assert_eq!(pair(6, 5, 2).discriminant(), BigInt::from(5));
        assert_eq!(pair(12, 0, -2).discriminant(), BigInt::from(44));
        assert_eq!(pair(7, 0, 0).discriminant(), BigInt::from(0));
    }

    #[test]
    fn validity() {
        assert!(pair(6, 5, 2).is_valid());
        assert!(!pair(6, 0, 0).is_valid());
        assert!(!pair(7, 3, 1).is_valid());
        assert_eq!(pair(7, 3, 1).violation(), Some(Violation::OddSelfIntersection));
        assert_eq!(pair(6, 0, 0).violation(), Some(Violation::NonPositiveDiscriminant));
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(pair(7, 7, 4).canonicalize().unwrap(), canon(7, 1, 5));
        assert_eq!(pair(7, 17, 24).canonicalize().unwrap(), canon(7, 1, 5));
        assert_eq!(pair(6, 3, 0).canonicalize().unwrap(), canon(6, 9, 3));
        assert_eq!(canon(7, 1, 5).to_string(), "D_{5,2}");
        assert_eq!(canon(12, 44, 0).to_string(), "D_{0,-2}");
    }

    #[test]
    fn canonicalize_reports_violation() {
        match pair(7, 3, 1).canonicalize() {
            Err(Error::InvalidDivisor { violation, .. }) => {
                assert_eq!(violation, Violation::OddSelfIntersection)
            }
            other => panic!("unexpected {other:?}"),
        }
        match pair(6, 0, 0).canonicalize() {
            Err(Error::InvalidDivisor { violation, .. }) => {
                assert_eq!(violation, Violation::NonPositiveDiscriminant)
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn canonical_constructor_checks() {
        let g = Genus::new(7).unwrap();
        assert!(CanonicalDivisor::new(g, 0.into(), 0).is_err());
        assert!(CanonicalDivisor::new(g, 1.into(), 7).is_err());
        assert!(CanonicalDivisor::new(g, 2.into(), 1).is_err());
        assert!(CanonicalDivisor::new(g, 1.into(), 5).is_ok());
    }

    #[test]
    fn equivalence_examples() {
        assert!(equivalent(&pair(7, 5, 2), &pair(7, 7, 4)).unwrap());
        assert!(!equivalent(&pair(7, 1, 0), &pair(7, 2, 0)).unwrap());
        assert!(equivalent(&pair(9, 4, 0), &pair(9, 4, 0)).unwrap());
        assert_eq!(
            equivalent(&pair(7, 1, 0), &pair(8, 1, 0)),
            Err(Error::GenusMismatch { left: 7, right: 8 })
        );
    }

    #[test]
    fn represent_examples() {
        let ten = BigInt::from(10);
        let found = represent(&canon(7, 1, 5), &pair(7, 2, 0), &ten).unwrap();
        assert!(found.contains(&sol(1, -2)));

        for g in 2..=12 {
            let host = pair(g, 1, 0).canonicalize().unwrap();
            let found = represent(&host, &pair(g, 1, 0), &BigInt::from(1)).unwrap();
            assert!(found.contains(&sol(0, 1)));
        }

        let host = pair(7, 2, 0).canonicalize().unwrap();
        assert!(represent(&host, &pair(7, 5, 2), &ten).unwrap().is_empty());
    }

    #[test]
    fn represent_degenerate_targets() {
        let host = canon(7, 1, 5);
        // L itself: Δ = 0, y = 0, x = 1.
        let found = represent(&host, &pair(7, 12, 12), &BigInt::from(3)).unwrap();
        assert_eq!(found, vec![sol(1, 0)]);
        // Negative discriminant: nothing.
        assert!(represent(&host, &pair(7, 0, 2), &BigInt::from(5)).unwrap().is_empty());
        assert!(represent(&host, &pair(8, 0, 2), &BigInt::from(5)).is_err());
    }

    #[test]
    fn represent_paths_agree_on_small_box() {
        for g in 2..=9u32 {
            let genus = Genus::new(g).unwrap();
            for d in -6..=6i64 {
                for n in (-4..=4i64).step_by(2) {
                    let target = NlPair::new(genus, d, n);
                    for delta in 1..=12i64 {
                        for r in 0..g {
                            let Ok(host) = CanonicalDivisor::new(genus, delta.into(), r) else {
                                continue;
                            };
                            let fast = represent(&host, &target, &BigInt::from(6)).unwrap();
                            let slow = represent_exhaustive(&host, &target, 6).unwrap();
                            assert_eq!(fast, slow, "g={g} host={host} target={target}");
                        }
                    }
                }
            }
        }
    }
}
