//! Transfer maps between two-variable polynomial spaces of weight N.
//!
//! Polynomials are [`BiPoly`]s of degree N-2 in x₁ (first variable) and x₂.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::binform::BiPoly;
use crate::exactalg::{binom, delta, int, pow2_rat, rat, Rational};

fn sub(p: &BiPoly, a: Rational, b: Rational, c: Rational, d: Rational) -> BiPoly {
    p.substitute(&a, &b, &c, &d)
}

/// L_{1,1}(p) = p(x₁, x₂) + p(x₁-x₂, x₁) - p(x₁-x₂, x₂).
pub fn l11(p: &BiPoly) -> BiPoly {
    let a = sub(p, int(1), int(-1), int(1), int(0));
    let b = sub(p, int(1), int(-1), int(0), int(1));
    &(p + &a) - &b
}

/// L_{½,1}(p) = p(x₁/2, x₂) + p((x₁-x₂)/2, x₁) - p((x₁-x₂)/2, x₂).
pub fn lhalf1(p: &BiPoly) -> BiPoly {
    let h = rat(1, 2);
    let a = sub(p, h.clone(), int(0), int(0), int(1));
    let b = sub(p, h.clone(), -h.clone(), int(1), int(0));
    let c = sub(p, h.clone(), -h, int(0), int(1));
    &(&a + &b) - &c
}

/// i^od(p) = p(x₁, x₂) - p(-x₁, x₂).
pub fn i_od(p: &BiPoly) -> BiPoly {
    p - &sub(p, int(-1), int(0), int(0), int(1))
}

/// x₁ ↦ (x₁+x₂)/2, x₂ ↦ x₂.
pub fn j1(p: &BiPoly) -> BiPoly {
    sub(p, rat(1, 2), rat(1, 2), int(0), int(1))
}

/// x₁ ↦ (x₁+x₂)/2, x₂ ↦ x₁.
pub fn j2(p: &BiPoly) -> BiPoly {
    sub(p, rat(1, 2), rat(1, 2), int(1), int(0))
}

/// j = ½ i^od ∘ (j₁ - j₂).
pub fn j(p: &BiPoly) -> BiPoly {
    i_od(&(&j1(p) - &j2(p))).scale(&rat(1, 2))
}

/// x₁^{n₁-1} x₂^{n₂-1}.
pub fn monomial(n1: u32, n2: u32) -> BiPoly {
    assert!(n1 >= 1 && n2 >= 1, "exponents are n_i - 1 with n_i ≥ 1");
    BiPoly::monomial((n1 + n2 - 2) as usize, (n1 - 1) as usize)
}

/// d(m; n): the coefficient of x₁^{n₁-1}x₂^{n₂-1} in ½ j(x₁^{m₁-1}x₂^{m₂-1}),
/// for the even pairs n₁ + n₂ = N, n_i ≥ 2.
pub fn d_coeffs(m1: u32, m2: u32) -> BTreeMap<(u32, u32), Rational> {
    let weight = m1 + m2;
    let q = j(&monomial(m1, m2)).scale(&rat(1, 2));
    (1..weight / 2)
        .map(|i| (2 * i, weight - 2 * i))
        .map(|(n1, n2)| ((n1, n2), q.coeff((n1 - 1) as usize).clone()))
        .collect()
}

/// Monomials x₁^{n₁-1}x₂^{n₂-1} of V_{N,2}: n₁, n₂ ≥ 3 odd.
pub fn v_monomials(weight: u32) -> Vec<(u32, u32)> {
    (3..=weight.saturating_sub(3)).step_by(2).map(|n1| (n1, weight - n1)).collect()
}

/// Monomials on which i^od ∘ L_{½,1} and j ∘ L_{1,1} differ.
pub fn diagram_failures(weight: u32) -> Vec<(u32, u32)> {
    v_monomials(weight)
        .into_iter()
        .filter(|&(n1, n2)| {
            let p = monomial(n1, n2);
            i_od(&lhalf1(&p)) != j(&l11(&p))
        })
        .collect()
}

/// One instance of the binomial identity: both sides for given 2n and even n₁.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CalinvInstance {
    pub two_n: u32,
    pub n1: u32,
    pub n2: u32,
    pub lhs: Rational,
    pub rhs: Rational,
}

/// (1/2²ⁿ)[C(2n,n₁-1) - C(2n,n₂-1)]
///   = Σ_{m₁+m₂=N} d(m;n)[(-1)^{m₁}C(2n,m₁-1) - (-1)^{m₂}C(2n,m₂-1) + δ(2n,m₁-1)]
/// for 3 ≤ 2n+1 ≤ N-3 and every even pair (n₁, n₂).
pub fn calinv_instances(weight: u32) -> Vec<CalinvInstance> {
    let d: Vec<((u32, u32), BTreeMap<(u32, u32), Rational>)> =
        (1..weight).map(|m1| ((m1, weight - m1), d_coeffs(m1, weight - m1))).collect();
    let sign = |m: u32| if m.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
    let mut out = Vec::new();
    let mut two_n = 2;
    while two_n < weight.saturating_sub(3) {
        let nn = two_n as i64;
        let c = |k: u32| Rational::from_integer(binom(nn, k as i64 - 1));
        for i in 1..weight / 2 {
            let (n1, n2) = (2 * i, weight - 2 * i);
            let lhs = (c(n1) - c(n2)) * pow2_rat(-nn);
            let mut rhs = Rational::zero();
            for ((m1, m2), coeffs) in &d {
                let dm = &coeffs[&(n1, n2)];
                if dm.is_zero() {
                    continue;
                }
                let bracket = sign(*m1) * c(*m1) - sign(*m2) * c(*m2) + delta(nn, *m1 as i64 - 1);
                rhs += dm * bracket;
            }
            out.push(CalinvInstance { two_n, n1, n2, lhs, rhs });
        }
        two_n += 2;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    #[test]
    fn l11_example() {
        // p = x₁²x₂²: x₁²x₂² + (x₁-x₂)²x₁² - (x₁-x₂)²x₂²
        let got = l11(&monomial(3, 3));
        let expected = BiPoly::from_coeffs(vec![int(-1), int(2), int(1), int(-2), int(1)]);
        assert_eq!(got, expected);
        assert!(l11(&BiPoly::zero(4)).is_zero());
        assert_eq!(got.degree(), 4);
    }

    #[test]
    fn lhalf1_examples() {
        assert!(lhalf1(&BiPoly::zero(4)).is_zero());
        // x₂⁴ is fixed by every term's second slot pattern: x₂⁴ + x₁⁴ - x₂⁴
        assert_eq!(lhalf1(&monomial(1, 5)), monomial(5, 1));
        assert_eq!(lhalf1(&monomial(3, 3)).degree(), 4);
    }

    #[test]
    fn i_od_examples() {
        assert!(i_od(&monomial(3, 1)).is_zero());
        assert_eq!(i_od(&monomial(2, 2)), monomial(2, 2).scale(&int(2)));
    }

    #[test]
    fn j_has_odd_first_exponents() {
        for m1 in 1..8 {
            let q = j(&monomial(m1, 8 - m1));
            assert!((0..=q.degree()).step_by(2).all(|i| q.coeff(i).is_zero()));
        }
    }

    #[test]
    fn d_coefficients_resum() {
        for m1 in 1..10 {
            let q = j(&monomial(m1, 10 - m1)).scale(&rat(1, 2));
            let mut rebuilt = BiPoly::zero(8);
            for ((n1, n2), c) in d_coeffs(m1, 10 - m1) {
                rebuilt = &rebuilt + &monomial(n1, n2).scale(&c);
            }
            assert_eq!(rebuilt, q);
        }
    }

    #[test]
    fn diagram_and_identity_small() {
        for weight in (6..=16).step_by(2) {
            assert!(diagram_failures(weight).is_empty());
            for inst in calinv_instances(weight) {
                assert_eq!(inst.lhs, inst.rhs, "{inst:?}");
            }
        }
    }

    proptest! {
        #[test]
        fn maps_preserve_degree(coeffs in prop::collection::vec(-3i64..4, 3..9)) {
            let p = BiPoly::from_coeffs(coeffs.into_iter().map(int).collect());
            let deg = p.degree();
            for q in [l11(&p), lhalf1(&p), i_od(&p), j(&p)] {
                prop_assert_eq!(q.degree(), deg);
            }
        }
    }
}
