//! Period polynomials for Γ₀(2).
//!
//! Polynomials of weight k are [`HomPoly2`]s of degree k-2 with
//! `P = Σ a_i X^i Y^{k-2-i}`. The action is `P|γ = P(aX+bY, cX+dY)`, a right
//! action: `(P|g)|h = P|(gh)`.

use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::binform::HomPoly2;
use crate::cuspdim::cusp_form_dimension;
use crate::exactalg::{binom, pow2, RatMatrix, Rational};
use crate::sumodd::{closed_partial_matrix, even_pairs, odd_columns, WordPipeline};
use crate::{Error, Result};

/// A 2×2 integer matrix (a, b; c, d).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement { a: 1, b: 0, c: 0, d: 1 };
    pub const T: GroupElement = GroupElement { a: 1, b: 1, c: 0, d: 1 };
    pub const M: GroupElement = GroupElement { a: -1, b: -1, c: 2, d: 1 };
    pub const EPSILON: GroupElement = GroupElement { a: -1, b: 0, c: 0, d: 1 };

    pub fn mul(self, o: GroupElement) -> GroupElement {
        GroupElement {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }

    pub fn det(self) -> i64 {
        self.a * self.d - self.b * self.c
    }
}

pub fn act(p: &HomPoly2, g: GroupElement) -> HomPoly2 {
    p.substitute_int(g.a, g.b, g.c, g.d)
}

/// `P|(1-T)(1+M) = P - P|T + P|M - P|TM`.
pub fn period_operator(p: &HomPoly2) -> HomPoly2 {
    use GroupElement as G;
    let tm = G::T.mul(G::M);
    let mut out = p - &act(p, G::T);
    out = &out + &act(p, G::M);
    &out - &act(p, tm)
}

fn check_weight(k: u32) -> Result<()> {
    if !k.is_multiple_of(2) || k < 4 {
        return Err(Error::Contract(format!("expected even weight ≥ 4, got {k}")));
    }
    Ok(())
}

/// Even interior exponents 2, 4, …, k-4.
pub fn interior_exponents(k: u32) -> Vec<usize> {
    (2..=k.saturating_sub(4) as usize).step_by(2).collect()
}

/// Kernel of the period operator on the span of `X^i Y^{k-2-i}`, i ∈ `exponents`.
fn kernel_on(k: u32, exponents: &[usize]) -> Vec<HomPoly2> {
    let deg = (k - 2) as usize;
    let images: Vec<HomPoly2> =
        exponents.iter().map(|&i| period_operator(&HomPoly2::monomial(deg, i))).collect();
    let m = RatMatrix::from_fn(deg + 1, exponents.len(), |r, c| images[c].coeff(r).clone());
    m.kernel_basis()
        .into_iter()
        .map(|v| {
            let mut coeffs = alloc::vec![Rational::zero(); deg + 1];
            for (&i, x) in exponents.iter().zip(v) {
                coeffs[i] = x;
            }
            HomPoly2::from_coeffs(coeffs)
        })
        .collect()
}

/// W_k^{+,0} with its computed basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodSpace {
    pub k: u32,
    pub basis: Vec<HomPoly2>,
}

impl PeriodSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Kernel of P ↦ P|(1-T)(1+M) on polynomials supported on even interior exponents.
pub fn wk_plus0(k: u32) -> Result<PeriodSpace> {
    check_weight(k)?;
    Ok(PeriodSpace { k, basis: kernel_on(k, &interior_exponents(k)) })
}

/// A basis of the full W_k.
pub fn wk(k: u32) -> Result<Vec<HomPoly2>> {
    check_weight(k)?;
    let all: Vec<usize> = (0..=(k - 2) as usize).collect();
    Ok(kernel_on(k, &all))
}

/// True iff ε maps every basis element of W_k back into W_k.
pub fn is_epsilon_stable(k: u32) -> Result<bool> {
    Ok(wk(k)?.iter().all(|p| period_operator(&act(p, GroupElement::EPSILON)).is_zero()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConditionReading {
    /// Coefficient a_{k-2-j} in front of the whole sum over i.
    Verbatim,
    /// Coefficient a_i inside the sum.
    Corrected,
}

/// Conditions indexed by odd j, 1 ≤ j ≤ k-3 (rows), on the even interior
/// coefficients a_i (columns).
pub fn period_conditions(k: u32, reading: ConditionReading) -> Result<RatMatrix> {
    check_weight(k)?;
    let idx = interior_exponents(k);
    let js: Vec<i64> = (1..=k as i64 - 3).step_by(2).collect();
    let kk = k as i64;
    let b = |i: i64, j: i64| Rational::from_integer(binom(i, j) - binom(i, kk - 2 - j));
    Ok(RatMatrix::from_fn(js.len(), idx.len(), |r, c| {
        let j = js[r];
        let i = idx[c] as i64;
        match reading {
            ConditionReading::Corrected => b(i, j),
            ConditionReading::Verbatim => {
                if i == kk - 2 - j {
                    idx.iter().map(|&i2| b(i2 as i64, j)).sum()
                } else {
                    Rational::zero()
                }
            }
        }
    }))
}

/// Comparison of both readings of the linear conditions with W_k^{+,0}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionCrosscheck {
    pub k: u32,
    pub dim_w: usize,
    pub verbatim_kernel_dim: usize,
    pub corrected_kernel_dim: usize,
    pub verbatim_zero_rows: usize,
    pub corrected_zero_rows: usize,
    /// Every basis vector of W_k^{+,0} satisfies the corrected conditions as is.
    pub corrected_contains_w: bool,
    /// Every basis vector satisfies them after X ↔ Y, i.e. with a_{k-2-i} for a_i.
    pub corrected_contains_reflected_w: bool,
}

impl ConditionCrosscheck {
    pub fn verbatim_matches(&self) -> bool {
        self.verbatim_kernel_dim == self.dim_w
    }

    pub fn corrected_matches(&self) -> bool {
        self.corrected_kernel_dim == self.dim_w && self.corrected_contains_reflected_w
    }
}

pub fn conditions_crosscheck(k: u32) -> Result<ConditionCrosscheck> {
    let space = wk_plus0(k)?;
    let idx = interior_exponents(k);
    let verbatim = period_conditions(k, ConditionReading::Verbatim)?;
    let corrected = period_conditions(k, ConditionReading::Corrected)?;
    let zero_rows = |m: &RatMatrix| (0..m.rows()).filter(|&r| m.row(r).iter().all(Zero::is_zero)).count();
    let deg = (k - 2) as usize;
    let satisfied = |slot: &dyn Fn(usize) -> usize| {
        space.basis.iter().all(|p| {
            let v: Vec<Rational> = idx.iter().map(|&i| p.coeff(slot(i)).clone()).collect();
            corrected.apply(&v).map(|out| out.iter().all(Zero::is_zero)).unwrap_or(false)
        })
    };
    let corrected_contains_w = satisfied(&|i| i);
    let corrected_contains_reflected_w = satisfied(&|i| deg - i);
    Ok(ConditionCrosscheck {
        k,
        dim_w: space.dim(),
        verbatim_kernel_dim: idx.len() - verbatim.rank(),
        corrected_kernel_dim: idx.len() - corrected.rank(),
        verbatim_zero_rows: zero_rows(&verbatim),
        corrected_zero_rows: zero_rows(&corrected),
        corrected_contains_w,
        corrected_contains_reflected_w,
    })
}

/// Labels m = 3, 5, …, N-3 of the columns ζ(m̄) ⊗ ζ(N-m bar) with both factors ≥ 3.
pub fn b_columns(weight: u32) -> Vec<u32> {
    (3..=weight.saturating_sub(3)).step_by(2).collect()
}

/// Matrix of D: rows ζ(m̄) ⊗ ζ(N-m bar) for m ∈ [`b_columns`], columns the
/// W_N^{+,0} basis. The entry is (2^{N-m-1}-1)/(2^{N-m}-1) times the
/// coefficient of X^{N-m-1}Y^{m-1} in the basis polynomial. The functional
/// reads the polynomial with X and Y exchanged relative to the action `P|γ`;
/// with the unexchanged reading ∂̃·D is already nonzero at N = 8.
pub fn d_matrix(weight: u32) -> Result<RatMatrix> {
    let space = wk_plus0(weight)?;
    let ms = b_columns(weight);
    Ok(RatMatrix::from_fn(ms.len(), space.dim(), |r, c| {
        let m = ms[r];
        let e = weight - m;
        let one = num_bigint::BigInt::from(1);
        let scale = Rational::new(pow2(e - 1) - &one, pow2(e) - &one);
        scale * space.basis[c].coeff((e - 1) as usize)
    }))
}

/// Outcome of the exactness check at one weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSequenceReport {
    pub weight: u32,
    /// dim of the span of ζ(m̄) ⊗ ζ(N-m bar), m, N-m ≥ 3.
    pub middle_dim: usize,
    pub dim_w: usize,
    pub oracle_dim: u64,
    pub rank_partial: usize,
    pub rank_d: usize,
    /// ∂ of the even pairs has no ζ(1̄) ⊗ · or · ⊗ ζ(1̄) component.
    pub lands_in_b_span: bool,
    pub composition_zero: bool,
    pub word_level_matches_closed_form: bool,
}

impl ExactSequenceReport {
    /// N/2 - 1 - dim W_N^{+,0}, the bound on the span of the even pairs.
    pub fn span_bound(&self) -> i64 {
        self.weight as i64 / 2 - 1 - self.dim_w as i64
    }

    pub fn exact(&self) -> bool {
        self.composition_zero
            && self.rank_d == self.dim_w
            && self.rank_partial + self.rank_d == self.middle_dim
    }

    pub fn passed(&self) -> bool {
        self.exact()
            && self.lands_in_b_span
            && self.word_level_matches_closed_form
            && self.dim_w as u64 == self.oracle_dim
            && self.dim_w as u32 == self.weight / 4 - 1
            && (self.rank_partial as i64) <= self.span_bound()
    }
}

/// ∂̃ is the word-level ∂-matrix of the even pairs restricted to the b-columns;
/// checks ∂̃·D = 0, rank ∂̃ + rank D = dim of the b-span, and rank D = dim W_N^{+,0}.
pub fn verify_exact_sequence(weight: u32, pipeline: &mut WordPipeline) -> Result<ExactSequenceReport> {
    if !weight.is_multiple_of(2) || weight < 8 {
        return Err(Error::Contract(format!("expected even weight ≥ 8, got {weight}")));
    }
    let rows = even_pairs(weight);
    let columns = odd_columns(weight, 2);
    let full = pipeline.partial_matrix(&rows, &columns)?;
    let closed = closed_partial_matrix(&rows, &columns)?;
    let ms = b_columns(weight);
    let keep: Vec<usize> = (0..columns.len()).filter(|&j| ms.contains(&columns[j].0)).collect();
    let outer: Vec<usize> = (0..columns.len()).filter(|j| !keep.contains(j)).collect();
    let lands_in_b_span = full.select_columns(&outer).is_zero();
    let partial = full.select_columns(&keep);
    let d = d_matrix(weight)?;
    let space_dim = d.cols();
    Ok(ExactSequenceReport {
        weight,
        middle_dim: ms.len(),
        dim_w: space_dim,
        oracle_dim: cusp_form_dimension(weight, 2),
        rank_partial: partial.rank(),
        rank_d: d.rank(),
        lands_in_b_span,
        composition_zero: partial.mul(&d)?.is_zero(),
        word_level_matches_closed_form: full == closed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;
    use alloc::vec;
    use proptest::prelude::*;

    #[test]
    fn action_examples() {
        let x2 = HomPoly2::monomial(2, 2);
        assert_eq!(act(&x2, GroupElement::IDENTITY), x2);
        let xy = HomPoly2::monomial(2, 1);
        assert_eq!(act(&xy, GroupElement::T).coeffs(), &[int(1), int(1), int(0)]);
        let p = HomPoly2::from_coeffs(vec![int(1), int(2), int(3), int(4)]);
        assert_eq!(act(&p, GroupElement::EPSILON).coeffs(), &[int(1), int(-2), int(3), int(-4)]);
    }

    #[test]
    fn small_spaces() {
        assert_eq!(wk_plus0(4).unwrap().dim(), 0);
        assert_eq!(wk_plus0(6).unwrap().dim(), 0);
        assert_eq!(wk_plus0(8).unwrap().dim(), 1);
        for k in (4..=24).step_by(2) {
            assert_eq!(wk_plus0(k).unwrap().dim() as u64, cusp_form_dimension(k, 2), "k={k}");
        }
    }

    #[test]
    fn basis_elements_are_even_interior_periods() {
        for k in (8..=20).step_by(2) {
            for p in wk_plus0(k).unwrap().basis {
                assert!(period_operator(&p).is_zero());
                let deg = (k - 2) as usize;
                assert!(p.coeff(0).is_zero() && p.coeff(deg).is_zero());
                assert!((1..deg).step_by(2).all(|i| p.coeff(i).is_zero()));
            }
        }
    }

    #[test]
    fn epsilon_stability() {
        for k in (4..=16).step_by(2) {
            assert!(is_epsilon_stable(k).unwrap());
        }
    }

    #[test]
    fn condition_rows_at_eight() {
        let m = period_conditions(8, ConditionReading::Corrected).unwrap();
        // j = 1, i ∈ {2, 4}: C(i,1) - C(i,5)
        assert_eq!(m.row(0), &[int(2), int(4)]);
        let c = conditions_crosscheck(8).unwrap();
        assert!(c.corrected_matches());
        assert!(!c.corrected_contains_w);
        // j = 3 is the self-paired row
        assert_eq!(c.corrected_zero_rows, 1);
    }

    #[test]
    fn verbatim_reading_is_vacuous() {
        for k in (8..=20).step_by(2) {
            let c = conditions_crosscheck(k).unwrap();
            assert_eq!(c.verbatim_kernel_dim, interior_exponents(k).len());
            assert!(!c.verbatim_matches());
            assert!(c.corrected_matches(), "k={k}");
        }
    }

    #[test]
    fn d_matrix_shapes() {
        assert_eq!(d_matrix(8).unwrap().rank(), 1);
        assert!(d_matrix(6).unwrap().is_zero());
        assert_eq!(d_matrix(6).unwrap().cols(), 0);
    }

    #[test]
    fn exact_sequence_small_weights() {
        let mut pipe = WordPipeline::new();
        let r8 = verify_exact_sequence(8, &mut pipe).unwrap();
        assert!(r8.passed(), "{r8:?}");
        assert_eq!((r8.middle_dim, r8.dim_w, r8.rank_partial), (2, 1, 1));
        let r12 = verify_exact_sequence(12, &mut pipe).unwrap();
        assert!(r12.passed(), "{r12:?}");
        assert_eq!(r12.rank_partial, 2);
    }

    fn arb_element() -> impl Strategy<Value = GroupElement> {
        prop::collection::vec(
            prop_oneof![Just(GroupElement::T), Just(GroupElement::M), Just(GroupElement::EPSILON)],
            0..4,
        )
        .prop_map(|gs| gs.into_iter().fold(GroupElement::IDENTITY, GroupElement::mul))
    }

    proptest! {
        #[test]
        fn right_action(coeffs in prop::collection::vec(-4i64..5, 5), g in arb_element(), h in arb_element()) {
            let p = HomPoly2::from_coeffs(coeffs.into_iter().map(int).collect());
            prop_assert_eq!(act(&act(&p, g), h), act(&p, g.mul(h)));
            prop_assert_eq!(g.det().abs(), 1);
        }
    }
}
