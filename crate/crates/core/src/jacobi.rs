//! Jacobi symbol `(a/b)` for odd positive `b`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Jacobi symbol `(a/b)`. `b` must be odd and positive.
pub fn jacobi(a: &BigInt, b: &BigInt) -> Result<i8> {
    if !b.is_positive() || b.is_even() {
        return Err(Error::JacobiDomain {
            a: a.clone(),
            b: b.clone(),
        });
    }
    if let (Some(a), Some(b)) = (a.to_i64(), b.to_u64()) {
        let a = a.rem_euclid(b as i64) as u64;
        return Ok(jacobi_odd_u64(a, b));
    }
    Ok(jacobi_odd_big(a.mod_floor(b), b.clone()))
}

/// Machine-word variant of [`jacobi`].
pub fn jacobi_i64(a: i64, b: i64) -> Result<i8> {
    if b <= 0 || b % 2 == 0 {
        return Err(Error::JacobiDomain {
            a: a.into(),
            b: b.into(),
        });
    }
    Ok(jacobi_odd_u64(a.rem_euclid(b) as u64, b as u64))
}

/// Binary algorithm; `n` odd, `0 ≤ a`.
fn jacobi_odd_u64(mut a: u64, mut n: u64) -> i8 {
    a %= n;
    if let Ok(n32) = u32::try_from(n) {
        // 32-bit division is markedly cheaper; both operands stay below n
        return jacobi_odd_u32(a as u32, n32);
    }
    let mut t = 1i8;
    while a != 0 {
        let z = a.trailing_zeros();
        a >>= z;
        // (2/n) = −1 iff n ≡ 3, 5 (mod 8)
        if z & 1 == 1 && matches!(n & 7, 3 | 5) {
            t = -t;
        }
        // reciprocity: flip iff both ≡ 3 (mod 4)
        if a & 3 == 3 && n & 3 == 3 {
            t = -t;
        }
        std::mem::swap(&mut a, &mut n);
        a %= n;
    }
    if n == 1 {
        t
    } else {
        0
    }
}

fn jacobi_odd_u32(mut a: u32, mut n: u32) -> i8 {
    let mut t = 1i8;
    while a != 0 {
        let z = a.trailing_zeros();
        a >>= z;
        if z & 1 == 1 && matches!(n & 7, 3 | 5) {
            t = -t;
        }
        if a & 3 == 3 && n & 3 == 3 {
            t = -t;
        }
        std::mem::swap(&mut a, &mut n);
        a %= n;
    }
    if n == 1 {
        t
    } else {
        0
    }
}

fn jacobi_odd_big(mut a: BigInt, mut n: BigInt) -> i8 {
    let mut t = 1i8;
    let eight = BigInt::from(8);
    let four = BigInt::from(4);
    while !a.is_zero() {
        let z = a.trailing_zeros().unwrap_or(0);
        a >>= z;
        let n8 = (&n % &eight).to_u8().unwrap_or(0);
        if z & 1 == 1 && (n8 == 3 || n8 == 5) {
            t = -t;
        }
        if &a % &four == BigInt::from(3) && &n % &four == BigInt::from(3) {
            t = -t;
        }
        std::mem::swap(&mut a, &mut n);
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        t
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn j(a: i64, b: i64) -> i8 {
        jacobi(&a.into(), &b.into()).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(j(5, 19), 1);
        assert_eq!(j(2, 3), -1);
        assert_eq!(j(7, 1), 1);
        assert_eq!(j(0, 1), 1);
        assert_eq!(j(3, 9), 0);
        assert_eq!(j(-1, 7), -1);
        assert_eq!(j(-1, 5), 1);
        assert_eq!(j(12, 11), 1);
        assert_eq!(j(6, 23), 1);
    }

    #[test]
    fn domain_errors() {
        assert!(jacobi(&1.into(), &4.into()).is_err());
        assert!(jacobi(&1.into(), &0.into()).is_err());
        assert!(jacobi(&1.into(), &(-3).into()).is_err());
        assert!(jacobi_i64(1, 2).is_err());
        assert!(jacobi_i64(1, -1).is_err());
    }

    #[test]
    fn big_path_matches_word_path() {
        for b in (1..400u64).step_by(2) {
            for a in 0..b {
                assert_eq!(
                    jacobi_odd_big(a.into(), b.into()),
                    jacobi_odd_u64(a, b),
                    "({a}/{b})"
                );
            }
        }
    }

    #[test]
    fn wide_word_path_matches_big() {
        let base = (1u64 << 33) + 1;
        for b in (base..base + 200).step_by(2) {
            for a in [1u64, 2, 3, 12345, b - 1, b / 2, b / 3 + 7] {
                assert_eq!(jacobi_odd_big(a.into(), b.into()), jacobi_odd_u64(a, b), "({a}/{b})");
            }
        }
    }

    #[test]
    fn large_arguments() {
        // p = 2^127 − 1 is prime and ≡ 7 (mod 8), so (2/p) = 1 and (−1/p) = −1.
        let p: BigInt = (BigInt::one() << 127) - 1;
        assert_eq!(jacobi(&2.into(), &p).unwrap(), 1);
        assert_eq!(jacobi(&(-1).into(), &p).unwrap(), -1);
        assert_eq!(jacobi(&p, &p).unwrap(), 0);
        // (a/p²) = (a/p)² ∈ {0, 1}
        let p2 = &p * &p;
        assert_eq!(jacobi(&3.into(), &p2).unwrap(), 1);
    }
}
