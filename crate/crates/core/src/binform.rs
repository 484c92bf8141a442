//! Homogeneous polynomials in two variables with exact coefficients.
//!
//! A [`BinaryForm`] of degree `d` stores `a_0..=a_d` for `Σ a_i X^i Y^{d-i}`.
//! The same type carries period polynomials (variables X, Y) and the
//! transfer-map polynomials (variables x₁, x₂).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::exactalg::{binom, format_rational, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    coeffs: Vec<Rational>,
}

pub type HomPoly2 = BinaryForm;
pub type BiPoly = BinaryForm;

impl BinaryForm {
    pub fn zero(degree: usize) -> Self {
        BinaryForm { coeffs: vec![Rational::zero(); degree + 1] }
    }

    /// `X^i Y^{degree-i}`.
    pub fn monomial(degree: usize, i: usize) -> Self {
        assert!(i <= degree, "exponent {i} exceeds degree {degree}");
        let mut p = Self::zero(degree);
        p.coeffs[i] = Rational::one();
        p
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs at least one coefficient");
        BinaryForm { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `X^i Y^{degree-i}`.
    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        BinaryForm { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// `P(aX + bY, cX + dY)`.
    pub fn substitute(&self, a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> Self {
        let deg = self.degree();
        let first = linear_powers(a, b, deg);
        let second = linear_powers(c, d, deg);
        let mut out = Self::zero(deg);
        for (i, ai) in self.coeffs.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            let f = &first[i];
            let g = &second[deg - i];
            for (p, fp) in f.iter().enumerate() {
                if fp.is_zero() {
                    continue;
                }
                let s = ai * fp;
                for (q, gq) in g.iter().enumerate() {
                    if !gq.is_zero() {
                        out.coeffs[p + q] += &s * gq;
                    }
                }
            }
        }
        out
    }

    /// Integer-matrix convenience for [`BinaryForm::substitute`].
    pub fn substitute_int(&self, a: i64, b: i64, c: i64, d: i64) -> Self {
        let r = |x: i64| Rational::from_integer(x.into());
        self.substitute(&r(a), &r(b), &r(c), &r(d))
    }
}

/// Coefficient lists of `(aX + bY)^e` for `e = 0..=deg`, indexed by the X exponent.
fn linear_powers(a: &Rational, b: &Rational, deg: usize) -> Vec<Vec<Rational>> {
    let mut pa = vec![Rational::one()];
    let mut pb = vec![Rational::one()];
    for _ in 0..deg {
        pa.push(pa.last().unwrap() * a);
        pb.push(pb.last().unwrap() * b);
    }
    (0..=deg)
        .map(|e| {
            (0..=e)
                .map(|p| {
                    Rational::from_integer(binom(e as i64, p as i64)) * &pa[p] * &pb[e - p]
                })
                .collect()
        })
        .collect()
}

impl Add for &BinaryForm {
    type Output = BinaryForm;

    fn add(self, rhs: &BinaryForm) -> BinaryForm {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        BinaryForm { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &BinaryForm {
    type Output = BinaryForm;

    fn sub(self, rhs: &BinaryForm) -> BinaryForm {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        BinaryForm { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &BinaryForm {
    type Output = BinaryForm;

    fn neg(self) -> BinaryForm {
        BinaryForm { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl fmt::Debug for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let deg = self.degree();
        let mut first = true;
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}*X^{}*Y^{}", format_rational(a), i, deg - i)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};

    #[test]
    fn substitution_by_translation() {
        // XY under X -> X + Y
        let p = BinaryForm::monomial(2, 1).substitute_int(1, 1, 0, 1);
        assert_eq!(p.coeffs(), &[int(1), int(1), int(0)]);
    }

    #[test]
    fn substitution_with_halves() {
        // X^2 under X -> X/2
        let p = BinaryForm::monomial(2, 2).substitute(&rat(1, 2), &int(0), &int(0), &int(1));
        assert_eq!(p.coeffs(), &[int(0), int(0), rat(1, 4)]);
    }

    #[test]
    fn swap_reverses_coefficients() {
        let p = BinaryForm::from_coeffs(vec![int(1), int(2), int(3)]);
        assert_eq!(p.substitute_int(0, 1, 1, 0).coeffs(), &[int(3), int(2), int(1)]);
    }

    #[test]
    fn display() {
        let p = BinaryForm::from_coeffs(vec![int(0), rat(-1, 2)]);
        assert_eq!(alloc::format!("{p}"), "-1/2*X^1*Y^0");
        assert_eq!(alloc::format!("{}", BinaryForm::zero(3)), "0");
    }
}
