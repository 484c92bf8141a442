//! Exact rational arithmetic and dense linear algebra over ℚ.
//!
//! [`Rational`] is `num_rational::BigRational`: always reduced, positive
//! denominator. Nothing in this crate rounds.

mod matrix;

use alloc::format;
use alloc::string::String;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use matrix::RatMatrix;

pub type Rational = num_rational::BigRational;

/// `p/q` as an exact rational. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// 2^e as a big integer.
pub fn pow2(e: u32) -> BigInt {
    BigInt::one() << e as usize
}

/// 2^e as a rational; negative exponents give 1/2^|e|.
pub fn pow2_rat(e: i64) -> Rational {
    if e >= 0 {
        Rational::from_integer(pow2(e as u32))
    } else {
        Rational::new(BigInt::one(), pow2((-e) as u32))
    }
}

/// Binomial coefficient with C(n, k) = 0 whenever k < 0 or k > n.
pub fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn binom_rat(n: i64, k: i64) -> Rational {
    Rational::from_integer(binom(n, k))
}

/// Kronecker delta as a rational 0 or 1.
pub fn delta<T: PartialEq>(a: T, b: T) -> Rational {
    if a == b {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// Renders `q` as `p/q`, always with an explicit denominator.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
        None => text.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

pub(crate) fn abs(q: &Rational) -> Rational {
    q.abs()
}
