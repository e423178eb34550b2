//! Closed-form rank of the span of NL divisors in `Pic_ℚ(K_g)`.
//!
//! ```text
//! ρ_g = (31g + 24)/24 − α_g/4 − β_g/6 − Σ_{k=0}^{g−1} {k²/(4g−4)} − #{0 ≤ k ≤ g−1 : (4g−4) | k²}
//! ```
//!
//! with `α_g = 0` for even `g` and `((2g−2)/(2g−3))` otherwise, and
//! `β_g = ((g−1)/(4g−5)) − 1` if `g ≡ 1 (mod 3)`, else `((g−1)/(4g−5)) + ((g−1)/3)`.
//!
//! At `g = 11` the formula evaluates to 10 and at `g = 12` to 11. Genus 11 has no Mukai
//! model in this crate and is never used as an anchor.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::jacobi::jacobi;
use crate::lattice::Genus;

/// Every term of the rank formula at one genus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhoBreakdown {
    pub g: u32,
    /// `(31g + 24)/24`
    pub leading: BigRational,
    pub alpha: i8,
    pub beta: i8,
    /// `Σ_{k=0}^{g−1} {k²/(4g−4)}`
    pub frac_sum: BigRational,
    pub square_count: u64,
    pub rho: i64,
}

pub fn alpha(genus: Genus) -> i8 {
    let g = i64::from(genus.get());
    if g % 2 == 0 {
        0
    } else {
        jacobi(&BigInt::from(2 * g - 2), &BigInt::from(2 * g - 3)).expect("2g-3 is odd and positive")
    }
}

pub fn beta(genus: Genus) -> i8 {
    let g = i64::from(genus.get());
    let first = jacobi(&BigInt::from(g - 1), &BigInt::from(4 * g - 5)).expect("4g-5 is odd and positive");
    if g % 3 == 1 {
        first - 1
    } else {
        first + jacobi(&BigInt::from(g - 1), &BigInt::from(3)).expect("3 is odd")
    }
}

fn square_residues(genus: Genus) -> impl Iterator<Item = u64> {
    let m = 4 * u64::from(genus.get()) - 4;
    (0..u64::from(genus.get())).map(move |k| ((u128::from(k) * u128::from(k)) % u128::from(m)) as u64)
}

pub fn frac_sum(genus: Genus) -> BigRational {
    let m = 4 * u64::from(genus.get()) - 4;
    let total: BigInt = square_residues(genus).map(BigInt::from).sum();
    BigRational::new(total, BigInt::from(m))
}

pub fn square_count(genus: Genus) -> u64 {
    square_residues(genus).filter(|&s| s == 0).count() as u64
}

pub fn rho(genus: Genus) -> Result<RhoBreakdown> {
    let g = genus.get();
    let leading = BigRational::new(BigInt::from(31 * i64::from(g) + 24), BigInt::from(24));
    let alpha = alpha(genus);
    let beta = beta(genus);
    let frac_sum = frac_sum(genus);
    let square_count = square_count(genus);

    let total = &leading
        - BigRational::new(alpha.into(), 4.into())
        - BigRational::new(beta.into(), 6.into())
        - &frac_sum
        - BigRational::from_integer(square_count.into());
    if !total.is_integer() {
        return Err(Error::NonIntegralRho { g, value: total });
    }
    let rho = total.to_integer().to_i64().expect("rank fits in i64");
    Ok(RhoBreakdown {
        g,
        leading,
        alpha,
        beta,
        frac_sum,
        square_count,
        rho,
    })
}

/// `b₂(Γ_g)`, which equals `ρ_g` through `Pic_ℚ(D/Γ_g) ≅ H²(Γ_g, ℚ)`.
pub fn betti2(genus: Genus) -> Result<i64> {
    rho(genus).map(|b| b.rho)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn genus(g: u32) -> Genus {
        Genus::new(g).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn alpha_values() {
        assert_eq!(alpha(genus(6)), 0);
        assert_eq!(alpha(genus(7)), 1);
        assert_eq!(alpha(genus(11)), 1);
    }

    #[test]
    fn beta_values() {
        assert_eq!(beta(genus(7)), 0);
        assert_eq!(beta(genus(6)), 0);
        assert_eq!(beta(genus(12)), 0);
    }

    #[test]
    fn frac_sum_values() {
        assert_eq!(frac_sum(genus(6)), q(7, 4));
        assert_eq!(frac_sum(genus(12)), q(9, 2));
        assert_eq!(frac_sum(genus(2)), q(1, 4));
    }

    #[test]
    fn square_count_values() {
        assert_eq!(square_count(genus(6)), 1);
        assert_eq!(square_count(genus(10)), 2);
        assert_eq!(square_count(genus(5)), 2);
    }

    #[test]
    fn rho_values() {
        let expected = [(2, 2), (5, 4), (6, 6), (7, 7), (8, 7), (9, 8), (10, 9), (12, 11)];
        for (g, r) in expected {
            assert_eq!(rho(genus(g)).unwrap().rho, r, "g={g}");
        }
        assert_eq!(betti2(genus(8)).unwrap(), 7);
        assert_eq!(betti2(genus(6)).unwrap(), 6);
        assert_eq!(betti2(genus(10)).unwrap(), 9);
    }

    #[test]
    fn g11_value_from_formula() {
        assert_eq!(rho(genus(11)).unwrap().rho, 10);
    }

    #[test]
    fn breakdown_reassembles() {
        let b = rho(genus(2)).unwrap();
        assert_eq!(b.leading, q(86, 24));
        assert_eq!((b.alpha, b.beta), (0, 2));
        assert_eq!(b.square_count, 1);
    }
}
