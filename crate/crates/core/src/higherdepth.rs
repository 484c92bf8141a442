//! The closed-form ∂-matrix E on T_{N,r} for r ≥ 3, the depth-three checks,
//! and single instances of the invertibility question for deeper r.
//!
//! Orientation: rows are the differentiated tuples k, columns the targets
//! n = (n₁; n₂, …, n_r), i.e. ζ(n̄₁) ⊗ ζ^o(n₂, …, n_r). Both are ordered
//! lexicographically, so the last column is (N-r+1; 1, …, 1).

use alloc::format;
use alloc::vec::Vec;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::exactalg::{binom, delta, pow2, rat, RatMatrix, Rational};
use crate::sumodd::{compositions, odd_columns, odd_compositions, IndexTuple, OddIndexTuple, WordPipeline};
use crate::{Error, Result};

/// T_{N,r} in lexicographic order.
pub fn t_index(weight: u32, depth: usize) -> Result<Vec<OddIndexTuple>> {
    if depth == 0 || (weight as usize) < depth || !(weight as usize - depth).is_multiple_of(2) {
        return Err(Error::Contract(format!(
            "T_({weight},{depth}) is empty: need N ≥ r and N ≡ r (mod 2)"
        )));
    }
    Ok(odd_compositions(weight, depth))
}

/// e(k; n) for k, n ∈ T_{N,r}.
///
/// For n₁ = 1: -δ(k, n) + ½δ(k, (n₂, …, n_r, 1)).
/// For n₁ ≥ 3: (2^{n₁-1} - ½)δ(k, n) + ½ Σ_i (C(n₁-1, k_{i+1}-1) - C(n₁-1, k_i-1))
/// over the merges (k₁, …, k_i + k_{i+1} - n₁, …, k_r) equal to (n₂, …, n_r).
pub fn e_entry(k: &[u32], n: &[u32]) -> Rational {
    assert_eq!(k.len(), n.len(), "e(k; n) needs tuples of equal depth");
    let n1 = n[0];
    let rest = &n[1..];
    if n1 == 1 {
        let rotated_matches = k[..k.len() - 1] == *rest && k[k.len() - 1] == 1;
        let mut v = -delta(k, n);
        if rotated_matches {
            v += rat(1, 2);
        }
        return v;
    }
    let mut v = (Rational::from_integer(pow2(n1 - 1)) - rat(1, 2)) * delta(k, n);
    let top = n1 as i64 - 1;
    for i in 0..k.len() - 1 {
        let merged = k[i] as i64 + k[i + 1] as i64 - n1 as i64;
        let matches = k[..i] == rest[..i]
            && merged == rest[i] as i64
            && k[i + 2..] == rest[i + 1..];
        if matches {
            let b = binom(top, k[i + 1] as i64 - 1) - binom(top, k[i] as i64 - 1);
            v += Rational::from_integer(b) * rat(1, 2);
        }
    }
    v
}

/// E on T_{N,r} with its index set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ETan {
    pub weight: u32,
    pub depth: usize,
    pub index: Vec<OddIndexTuple>,
    pub matrix: RatMatrix,
}

pub fn e_matrix(weight: u32, depth: usize) -> Result<ETan> {
    if depth < 3 {
        return Err(Error::Unsupported(format!("the e(k; n) formula is for r ≥ 3, got r = {depth}")));
    }
    let index = t_index(weight, depth)?;
    let matrix = RatMatrix::from_fn(index.len(), index.len(), |i, j| {
        e_entry(index[i].parts(), index[j].parts())
    });
    Ok(ETan { weight, depth, index, matrix })
}

/// Word-level counterpart of [`e_matrix`].
pub fn e_matrix_word_level(weight: u32, depth: usize, pipeline: &mut WordPipeline) -> Result<RatMatrix> {
    let rows: Vec<IndexTuple> = t_index(weight, depth)?.iter().map(|t| t.as_tuple().clone()).collect();
    pipeline.partial_matrix(&rows, &odd_columns(weight, depth))
}

/// Outcome of the depth-three checks at one odd weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Depth3Report {
    pub weight: u32,
    pub order: usize,
    pub rank: usize,
    pub closed_equals_word_level: bool,
    /// Columns with n₁ ≥ 3 that fail strict column dominance, by target tuple.
    pub dominance_failures: Vec<OddIndexTuple>,
    /// The last column of Q = E, top to bottom.
    pub q_last_column: Vec<Rational>,
    /// Number of rows of P, i.e. depth-three tuples with an even part.
    pub p_rows: usize,
    /// Tuples of 𝒞 whose row of P has a nonzero last entry.
    pub p_last_column_nonzero: Vec<IndexTuple>,
    /// Tuples of 𝒞 whose row of PQ⁻¹ has a nonzero last entry.
    pub pq_inverse_last_column_nonzero: Vec<IndexTuple>,
}

impl Depth3Report {
    pub fn passed(&self) -> bool {
        self.rank == self.order
            && self.closed_equals_word_level
            && self.dominance_failures.is_empty()
            && self.p_last_column_nonzero.is_empty()
            && self.pq_inverse_last_column_nonzero.is_empty()
    }
}

/// Checks that E on T_{N,3} equals the word-level Q, is invertible and
/// column-dominant on n₁ ≥ 3 columns, and that P and PQ⁻¹ have a zero last
/// column, where P holds the rows of every depth-three tuple with an even part.
pub fn verify_depth3(weight: u32, pipeline: &mut WordPipeline) -> Result<Depth3Report> {
    if weight.is_multiple_of(2) || weight < 5 {
        return Err(Error::Contract(format!("expected odd weight ≥ 5, got {weight}")));
    }
    let e = e_matrix(weight, 3)?;
    let q = e_matrix_word_level(weight, 3, pipeline)?;
    let order = e.index.len();
    let dominance_failures = e
        .index
        .iter()
        .enumerate()
        .filter(|(j, t)| {
            t.parts()[0] >= 3 && {
                let off: Rational =
                    (0..order).filter(|i| i != j).map(|i| e.matrix[(i, *j)].abs()).sum();
                e.matrix[(*j, *j)].abs() <= off
            }
        })
        .map(|(_, t)| t.clone())
        .collect();
    let mixed: Vec<IndexTuple> =
        compositions(weight, 3).into_iter().filter(|t| !t.is_all_odd()).collect();
    let p = pipeline.partial_matrix(&mixed, &odd_columns(weight, 3))?;
    let last = order - 1;
    let p_last_column_nonzero =
        mixed.iter().enumerate().filter(|(i, _)| !p[(*i, last)].is_zero()).map(|(_, t)| t.clone()).collect();
    let pq = p.mul(&q.inverse()?)?;
    let pq_inverse_last_column_nonzero =
        mixed.iter().enumerate().filter(|(i, _)| !pq[(*i, last)].is_zero()).map(|(_, t)| t.clone()).collect();
    Ok(Depth3Report {
        weight,
        order,
        rank: e.matrix.rank(),
        closed_equals_word_level: e.matrix == q,
        dominance_failures,
        q_last_column: q.column(last),
        p_rows: mixed.len(),
        p_last_column_nonzero,
        pq_inverse_last_column_nonzero,
    })
}

/// One (r, N) instance of the invertibility question for E on T_{N,r}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvertibilityInstance {
    pub depth: usize,
    pub weight: u32,
    pub order: usize,
    pub rank: usize,
    pub invertible: bool,
    /// The full matrix, kept only when it is singular.
    pub singular_matrix: Option<ETan>,
}

pub fn analyze_instance(depth: usize, weight: u32) -> Result<InvertibilityInstance> {
    let e = e_matrix(weight, depth)?;
    let order = e.index.len();
    let rank = e.matrix.rank();
    let invertible = rank == order;
    Ok(InvertibilityInstance {
        depth,
        weight,
        order,
        rank,
        invertible,
        singular_matrix: if invertible { None } else { Some(e) },
    })
}

/// The weights N ≤ `max_weight` with N ≡ r (mod 2), starting at r + 2.
pub fn scan_weights(depth: usize, max_weight: u32) -> Vec<u32> {
    let start = depth as u32 + 2;
    (start..=max_weight).step_by(2).collect()
}

/// |T_{N,r}| without enumerating it.
pub fn t_count(weight: u32, depth: usize) -> u128 {
    if depth == 0 || (weight as usize) < depth || !(weight as usize - depth).is_multiple_of(2) {
        return 0;
    }
    let k = (weight as usize - depth) / 2;
    let b = binom((k + depth - 1) as i64, (depth - 1) as i64);
    b.to_u128().unwrap_or(u128::MAX)
}

/// Value of the last diagonal entry of E on T_{N,3}: 2^{N-3} - ½.
pub fn q_corner(weight: u32) -> Rational {
    Rational::from_integer(pow2(weight - 3)) - rat(1, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;
    use alloc::vec;
    use proptest::prelude::*;

    #[test]
    fn t_index_examples() {
        let got: Vec<_> = t_index(5, 3).unwrap().iter().map(|t| t.parts().to_vec()).collect();
        assert_eq!(got, vec![vec![1, 1, 3], vec![1, 3, 1], vec![3, 1, 1]]);
        assert_eq!(t_index(7, 3).unwrap().len(), 6);
        assert!(t_index(6, 3).is_err());
    }

    #[test]
    fn entry_examples() {
        assert_eq!(e_entry(&[1, 1, 5], &[1, 1, 5]), int(-1));
        assert_eq!(e_entry(&[1, 5, 1], &[1, 1, 5]), rat(1, 2));
        // the merge (3+1-3, 1) = (1, 1) fires with weight C(2,0) - C(2,2) = 0
        assert_eq!(e_entry(&[3, 1, 1], &[3, 1, 1]), rat(7, 2));
    }

    #[test]
    fn depth_three_small_weights() {
        let mut pipe = WordPipeline::new();
        for weight in [5, 7, 9] {
            let r = verify_depth3(weight, &mut pipe).unwrap();
            assert!(r.passed(), "{r:?}");
            let mut expected = vec![Rational::zero(); r.order - 1];
            expected.push(q_corner(weight));
            assert_eq!(r.q_last_column, expected);
        }
    }

    #[test]
    fn depth_four_closed_matches_words() {
        let mut pipe = WordPipeline::new();
        for weight in [6, 8] {
            let closed = e_matrix(weight, 4).unwrap().matrix;
            assert_eq!(closed, e_matrix_word_level(weight, 4, &mut pipe).unwrap());
        }
    }

    #[test]
    fn instances_and_counts() {
        let inst = analyze_instance(3, 9).unwrap();
        assert!(inst.invertible);
        assert_eq!(inst.order as u128, t_count(9, 3));
        assert_eq!(scan_weights(3, 11), vec![5, 7, 9, 11]);
        assert!(analyze_instance(2, 6).is_err());
    }

    proptest! {
        #[test]
        fn first_part_one_columns_are_sparse(k in 0u32..5) {
            let weight = 2 * k + 5;
            let e = e_matrix(weight, 3).unwrap();
            for (j, col) in e.index.iter().enumerate() {
                if col.parts()[0] != 1 { continue; }
                let nonzero = (0..e.index.len()).filter(|&i| !e.matrix[(i, j)].is_zero()).count();
                prop_assert!(nonzero <= 2);
            }
        }
    }
}
