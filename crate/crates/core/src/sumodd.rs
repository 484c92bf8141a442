//! Sum-odd word combinations and the maps ∂₂ₙ₊₁ into the sum-odd basis.
//!
//! A row of ∂ for a tuple `t` of weight N and depth r is indexed by
//! [`Column`]s `(m, u)`: the depth-one label ζ(m̄) with m = 2n+1 odd, tensored
//! with the sum-odd basis element ζ^o(u), u ∈ T_{N-m, r-1}. In depth two the
//! second factor is the one-part tuple (N-m), i.e. ζ(N-m bar). Columns are
//! ordered lexicographically on (m, u), which is the lexicographic order of
//! the concatenated tuple (m, u₁, …).
//!
//! Two ways to compute a row are provided: closed forms and a word-level
//! pipeline ([`WordPipeline`]) that applies ∂̄ to the defining words and
//! re-identifies the result.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Deref;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactalg::{binom, binom_rat, delta, int, pow2, pow2_rat, rat, RatMatrix, Rational};
use crate::higherdepth::e_entry;
use crate::ihara::DbarTable;
use crate::words::{Letter, NcPoly, Word};
use crate::{Error, Result};

/// Indices (n₁, …, n_r) with every part ≥ 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexTuple(Vec<u32>);

impl IndexTuple {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::Contract(format!("index parts must be positive, got {parts:?}")));
        }
        Ok(IndexTuple(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn is_all_odd(&self) -> bool {
        self.0.iter().all(|&n| n % 2 == 1)
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, n) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, ")")
    }
}

/// An element of T_{N,r}: every part odd.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OddIndexTuple(IndexTuple);

impl OddIndexTuple {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        IndexTuple::new(parts)?.try_into()
    }

    pub fn as_tuple(&self) -> &IndexTuple {
        &self.0
    }
}

impl TryFrom<IndexTuple> for OddIndexTuple {
    type Error = Error;

    fn try_from(t: IndexTuple) -> Result<Self> {
        if t.is_all_odd() {
            Ok(OddIndexTuple(t))
        } else {
            Err(Error::Contract(format!("{t} has an even part")))
        }
    }
}

impl Deref for OddIndexTuple {
    type Target = IndexTuple;

    fn deref(&self) -> &IndexTuple {
        &self.0
    }
}

impl fmt::Display for OddIndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The depth-one basis label ζ(m̄), m odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct D1Basis {
    pub m: u32,
}

/// A depth-one word rewritten in the basis; even weights reduce to zero and carry no label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthOneReduction {
    pub coeff: Rational,
    pub basis: Option<D1Basis>,
}

/// Row/column index of a ∂-matrix: (m, u) for ζ(m̄) ⊗ ζ^o(u).
pub type Column = (u32, OddIndexTuple);

/// Linear combination of index tuples.
pub type TupleCombination = BTreeMap<IndexTuple, Rational>;

/// A ∂-row: coefficients on [`Column`]s.
pub type PartialRow = BTreeMap<Column, Rational>;

fn sign_vectors(r: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u64..1 << r).map(move |bits| (0..r).map(|i| bits >> (r - 1 - i) & 1 == 0).collect())
}

/// ζ^o(t) = 2^{-r} Σ_ε ε₁⋯ε_r e^{ε₁⋯ε_r}(e⁰)^{n₁-1} e^{ε₂⋯ε_r}(e⁰)^{n₂-1} ⋯ e^{ε_r}(e⁰)^{n_r-1}.
pub fn sum_odd_word(t: &IndexTuple) -> NcPoly {
    let r = t.depth();
    let scale = pow2_rat(-(r as i64));
    let mut out = NcPoly::zero();
    for eps in sign_vectors(r) {
        let mut letter_signs = alloc::vec![true; r];
        let mut acc = true;
        for i in (0..r).rev() {
            acc = acc == eps[i];
            letter_signs[i] = acc;
        }
        let c = if letter_signs[0] { scale.clone() } else { -scale.clone() };
        out.add_term(Word::from_blocks(&letter_signs, t.parts()), c);
    }
    out
}

/// Same combination written with free letter signs η: 2^{-r} Σ_η η₁ e^{η₁}(e⁰)^{n₁-1} e^{η₂}⋯.
pub fn sum_odd_word_reduced(t: &IndexTuple) -> NcPoly {
    let scale = pow2_rat(-(t.depth() as i64));
    sign_vectors(t.depth())
        .map(|eta| {
            let c = if eta[0] { scale.clone() } else { -scale.clone() };
            (Word::from_blocks(&eta, t.parts()), c)
        })
        .collect()
}

/// Rewrites e^{±1}(e⁰)^s in the depth-one basis.
///
/// e⁻¹(e⁰)^s is ζ(s+1 bar) itself; e¹(e⁰)^s is ζ(s+1) = ζ(s+1 bar)/(2^{-s} - 1).
/// Even weights reduce to zero, and so does e¹ alone (the regularized ζ(1)).
pub fn depth1_reduce(w: &Word) -> Result<DepthOneReduction> {
    let letters = w.letters();
    let ok = letters.first().is_some_and(|l| !l.is_x0()) && letters[1..].iter().all(|l| l.is_x0());
    if !ok {
        return Err(Error::Contract(format!("{w} is not of the form e^(±1)(e^0)^s")));
    }
    let s = letters.len() - 1;
    let weight = s as u32 + 1;
    if weight.is_multiple_of(2) {
        return Ok(DepthOneReduction { coeff: Rational::zero(), basis: None });
    }
    let coeff = match letters[0] {
        Letter::XM1 => Rational::one(),
        _ if s == 0 => Rational::zero(),
        _ => (pow2_rat(-(s as i64)) - Rational::one()).recip(),
    };
    Ok(DepthOneReduction { coeff, basis: Some(D1Basis { m: weight }) })
}

/// Compositions of N into r positive parts, lexicographic ascending.
pub fn compositions(weight: u32, depth: usize) -> Vec<IndexTuple> {
    let mut out = Vec::new();
    if depth == 0 || (weight as usize) < depth {
        return out;
    }
    let mut buf = Vec::with_capacity(depth);
    fill_compositions(weight, depth, false, &mut buf, &mut |p| out.push(IndexTuple(p.to_vec())));
    out
}

/// Compositions of N into r odd parts (T_{N,r}), lexicographic ascending.
/// Empty when N ≢ r (mod 2).
pub fn odd_compositions(weight: u32, depth: usize) -> Vec<OddIndexTuple> {
    let mut out = Vec::new();
    if depth == 0 || (weight as usize) < depth || !(weight as usize - depth).is_multiple_of(2) {
        return out;
    }
    let mut buf = Vec::with_capacity(depth);
    fill_compositions(weight, depth, true, &mut buf, &mut |p| {
        out.push(OddIndexTuple(IndexTuple(p.to_vec())))
    });
    out
}

fn fill_compositions(
    left: u32,
    parts: usize,
    odd: bool,
    buf: &mut Vec<u32>,
    emit: &mut dyn FnMut(&[u32]),
) {
    if parts == 1 {
        if left >= 1 && (!odd || left % 2 == 1) {
            buf.push(left);
            emit(buf);
            buf.pop();
        }
        return;
    }
    let step = if odd { 2 } else { 1 };
    let mut a = 1;
    while a + (parts as u32 - 1) <= left {
        buf.push(a);
        fill_compositions(left - a, parts - 1, odd, buf, emit);
        buf.pop();
        a += step;
    }
}

/// Columns (m, u) of the ∂-matrix in weight N and depth r, in order.
pub fn odd_columns(weight: u32, depth: usize) -> Vec<Column> {
    odd_compositions(weight, depth)
        .into_iter()
        .map(|t| {
            let m = t.parts()[0];
            let rest = t.parts()[1..].to_vec();
            (m, OddIndexTuple(IndexTuple(rest)))
        })
        .collect()
}

fn check_partial_range(n: u32, t: &IndexTuple) -> Result<()> {
    let r = t.depth() as u32;
    if r < 2 {
        return Err(Error::Contract(format!("∂ needs depth ≥ 2, got {t}")));
    }
    if t.weight() < 2 * n + 1 + (r - 1) {
        return Err(Error::Contract(format!("∂_{} out of range for {t}", 2 * n + 1)));
    }
    Ok(())
}

/// ∂₂ₙ₊₁ in depth two by the closed forms; the target is the one-part tuple (N-2n-1).
fn partial_n_closed_depth2(n: u32, n1: u32, n2: u32) -> Result<Rational> {
    let weight = n1 + n2;
    let s = weight as i64 - 2 * n as i64 - 2;
    let one = Rational::one();
    if n1 % 2 != n2 % 2 {
        return Err(Error::Unsupported(format!("mixed parity pair ({n1},{n2})")));
    }
    let nn = 2 * n as i64;
    let bdiff = binom_rat(nn, n1 as i64 - 1) - binom_rat(nn, n2 as i64 - 1);
    let d = delta(nn, n1 as i64 - 1);
    let two_s = || Rational::from_integer(pow2(s as u32));
    let v = if n1 % 2 == 1 {
        if n == 0 {
            if n1 == 1 {
                let p = Rational::from_integer(pow2(n2));
                (&one - &p) / (int(2) - &p)
            } else if n2 == 1 {
                let p = Rational::from_integer(pow2(n1));
                let h = Rational::from_integer(pow2(n1 - 1));
                -(&one - &p) / (int(4) * (&one - &h))
            } else {
                Rational::zero()
            }
        } else if s > 0 {
            let lead = (int(2) * two_s() - &one) / (int(4) * (two_s() - &one));
            lead * (bdiff + d * (&one - Rational::from_integer(pow2(2 * n + 1))))
        } else {
            -rat(1, 4) * d * (Rational::from_integer(pow2(2 * n + 1)) - &one)
        }
    } else if n == 0 || s == 0 {
        Rational::zero()
    } else {
        (&one - int(2) * two_s()) / (int(4) * (two_s() - &one)) * bdiff
    };
    Ok(v)
}

/// ∂₂ₙ₊₁(ζ^o(t)) by closed forms, as a combination of depth r-1 tuples.
///
/// Depth two needs both parts of equal parity; depth r ≥ 3 needs t ∈ T_{N,r}.
pub fn partial_n_closed(n: u32, t: &IndexTuple) -> Result<TupleCombination> {
    check_partial_range(n, t)?;
    let mut out = TupleCombination::new();
    let target = t.weight() - 2 * n - 1;
    if t.depth() == 2 {
        let v = partial_n_closed_depth2(n, t.parts()[0], t.parts()[1])?;
        if !v.is_zero() {
            out.insert(IndexTuple(alloc::vec![target]), v);
        }
        return Ok(out);
    }
    if !t.is_all_odd() {
        return Err(Error::Unsupported(format!("closed form needs all parts odd, got {t}")));
    }
    let mut col = Vec::with_capacity(t.depth());
    for u in odd_compositions(target, t.depth() - 1) {
        col.clear();
        col.push(2 * n + 1);
        col.extend_from_slice(u.parts());
        let v = e_entry(t.parts(), &col);
        if !v.is_zero() {
            out.insert(u.0, v);
        }
    }
    Ok(out)
}

fn n_range(t: &IndexTuple) -> core::ops::RangeInclusive<u32> {
    let r = t.depth() as u32;
    0..=(t.weight() - r) / 2
}

/// The full closed-form ∂-row of an odd tuple (or a same-parity pair).
pub fn partial_row_closed(t: &IndexTuple) -> Result<PartialRow> {
    let mut row = PartialRow::new();
    for n in n_range(t) {
        for (u, c) in partial_n_closed(n, t)? {
            let u = OddIndexTuple::try_from(u)?;
            row.insert((2 * n + 1, u), c);
        }
    }
    Ok(row)
}

fn row_to_vec(row: &PartialRow, columns: &[Column]) -> Result<Vec<Rational>> {
    let index: BTreeMap<&Column, usize> = columns.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut out = alloc::vec![Rational::zero(); columns.len()];
    for (col, v) in row {
        match index.get(col) {
            Some(&i) => out[i] = v.clone(),
            None => {
                return Err(Error::Contract(format!(
                    "row has an entry outside the column set at ({}, {})",
                    col.0, col.1
                )))
            }
        }
    }
    Ok(out)
}

/// Closed-form ∂-matrix: rows `rows`, columns `columns`.
pub fn closed_partial_matrix(rows: &[IndexTuple], columns: &[Column]) -> Result<RatMatrix> {
    let rows = rows
        .iter()
        .map(|t| row_to_vec(&partial_row_closed(t)?, columns))
        .collect::<Result<Vec<_>>>()?;
    RatMatrix::from_rows(rows, columns.len())
}

/// The word-level engine: ∂̄ tables, identified ∂-rows and depth-graded
/// change-of-basis matrices, all cached.
#[derive(Default)]
pub struct WordPipeline {
    tables: BTreeMap<(u32, usize, usize), DbarTable>,
    rows: BTreeMap<IndexTuple, PartialRow>,
    inverses: BTreeMap<(u32, usize), (Vec<OddIndexTuple>, Vec<Column>, RatMatrix)>,
}

impl WordPipeline {
    pub fn new() -> Self {
        Self::default()
    }

    fn table(&mut self, n: u32, weight: usize, depth: usize) -> &DbarTable {
        self.tables.entry((n, weight, depth)).or_insert_with(|| DbarTable::new(n, weight, depth))
    }

    /// ∂̄₂ₙ₊₁ applied to ζ^o(t), before any identification.
    pub fn dbar_sum_odd(&mut self, n: u32, t: &IndexTuple) -> Result<NcPoly> {
        check_partial_range(n, t)?;
        let target = (t.weight() - 2 * n - 1) as usize;
        let table = self.table(n, target, t.depth() - 1);
        Ok(table.dbar_poly(&sum_odd_word(t)))
    }

    /// ∂₂ₙ₊₁(ζ^o(t)) from words, for any parities.
    ///
    /// Depth-one results are reduced with [`depth1_reduce`] onto the label
    /// (N-2n-1). Deeper results are matched against sum-odd combinations by
    /// their all-e¹ words; any residue is an error.
    pub fn partial_n(&mut self, n: u32, t: &IndexTuple) -> Result<TupleCombination> {
        let q = self.dbar_sum_odd(n, t)?;
        let target = t.weight() - 2 * n - 1;
        let mut out = TupleCombination::new();
        if t.depth() == 2 {
            let mut total = Rational::zero();
            for (w, c) in q.iter() {
                total += c * depth1_reduce(w)?.coeff;
            }
            if !total.is_zero() {
                out.insert(IndexTuple(alloc::vec![target]), total);
            }
            return Ok(out);
        }
        let d = t.depth() - 1;
        let mut residue = q.clone();
        let scale = Rational::from_integer(pow2(d as u32));
        for (w, c) in q.iter() {
            if !w.letters().iter().all(|&l| l != Letter::XM1) {
                continue;
            }
            let Some((_, parts)) = w.blocks() else { continue };
            let u = IndexTuple(parts);
            let cu = c * &scale;
            residue.add_scaled(&sum_odd_word(&u), &-cu.clone());
            out.insert(u, cu);
        }
        if !residue.is_zero() {
            return Err(Error::NotInSumOddSpan(format!(
                "∂_{} of ζ^o{t} leaves {} unmatched terms",
                2 * n + 1,
                residue.len()
            )));
        }
        Ok(out)
    }

    /// The word-level ∂-row of t, with every target written in the odd basis.
    pub fn partial_row(&mut self, t: &IndexTuple) -> Result<PartialRow> {
        if let Some(row) = self.rows.get(t) {
            return Ok(row.clone());
        }
        let mut row = PartialRow::new();
        for n in n_range(t) {
            for (u, c) in self.partial_n(n, t)? {
                for (o, cc) in self.coordinates(&u)? {
                    let entry = row.entry((2 * n + 1, o)).or_insert_with(Rational::zero);
                    *entry += &c * cc;
                }
            }
        }
        row.retain(|_, v| !v.is_zero());
        self.rows.insert(t.clone(), row.clone());
        Ok(row)
    }

    /// Coordinates of ζ^o(u) in the sum-odd basis of its weight and depth.
    ///
    /// Tuples with an even part are resolved through their ∂-row and the
    /// inverse of the word-level matrix on T_{W,d}.
    pub fn coordinates(&mut self, u: &IndexTuple) -> Result<BTreeMap<OddIndexTuple, Rational>> {
        let mut out = BTreeMap::new();
        if u.is_all_odd() {
            out.insert(OddIndexTuple(u.clone()), Rational::one());
            return Ok(out);
        }
        let (w, d) = (u.weight(), u.depth());
        if d == 1 {
            return Ok(out);
        }
        if (w as usize) < d || !(w as usize - d).is_multiple_of(2) {
            return Err(Error::NotInSumOddSpan(format!("T_({w},{d}) is empty for {u}")));
        }
        let row = self.partial_row(u)?;
        let (basis, columns, inverse) = self.inverse_for(w, d)?;
        let v = row_to_vec(&row, &columns)?;
        for (j, b) in basis.into_iter().enumerate() {
            let c: Rational = v.iter().enumerate().map(|(i, x)| x * &inverse[(i, j)]).sum();
            if !c.is_zero() {
                out.insert(b, c);
            }
        }
        Ok(out)
    }

    fn inverse_for(
        &mut self,
        weight: u32,
        depth: usize,
    ) -> Result<(Vec<OddIndexTuple>, Vec<Column>, RatMatrix)> {
        if let Some(hit) = self.inverses.get(&(weight, depth)) {
            return Ok(hit.clone());
        }
        let basis = odd_compositions(weight, depth);
        let columns = odd_columns(weight, depth);
        let rows: Vec<IndexTuple> = basis.iter().map(|b| b.0.clone()).collect();
        let inverse = self.partial_matrix(&rows, &columns)?.inverse()?;
        let entry = (basis, columns, inverse);
        self.inverses.insert((weight, depth), entry.clone());
        Ok(entry)
    }

    /// Word-level ∂-matrix: rows `rows`, columns `columns`.
    pub fn partial_matrix(&mut self, rows: &[IndexTuple], columns: &[Column]) -> Result<RatMatrix> {
        let rows = rows
            .iter()
            .map(|t| {
                let row = self.partial_row(t)?;
                row_to_vec(&row, columns)
            })
            .collect::<Result<Vec<_>>>()?;
        RatMatrix::from_rows(rows, columns.len())
    }

    /// Word-level E in depth two: rows the odd pairs of weight N, columns m = 1, 3, …, N-1.
    pub fn e_depth2(&mut self, weight: u32) -> Result<RatMatrix> {
        let rows: Vec<IndexTuple> = odd_compositions(weight, 2).into_iter().map(|t| t.0).collect();
        self.partial_matrix(&rows, &odd_columns(weight, 2))
    }

    /// Word-level F: rows the even pairs (n₁, n₂), n_i ≥ 2, columns as in [`WordPipeline::e_depth2`].
    pub fn f_matrix(&mut self, weight: u32) -> Result<RatMatrix> {
        self.partial_matrix(&even_pairs(weight), &odd_columns(weight, 2))
    }
}

/// (2, N-2), (4, N-4), …, (N-2, 2).
pub fn even_pairs(weight: u32) -> Vec<IndexTuple> {
    (1..weight / 2).map(|i| IndexTuple(alloc::vec![2 * i, weight - 2 * i])).collect()
}

fn check_even_weight(weight: u32, min: u32) -> Result<()> {
    if !weight.is_multiple_of(2) || weight < min {
        return Err(Error::Contract(format!("expected even weight ≥ {min}, got {weight}")));
    }
    Ok(())
}

/// Diagonal of B in E = M̃B: (1-2^{N-1})/(2-2^{N-1}), then (2^{s+1}-1)/(4(2^s-1))
/// with s = N-2j-2, and -(2^{N-1}-1)/4 last.
pub fn b_diag(weight: u32) -> Result<Vec<Rational>> {
    check_even_weight(weight, 4)?;
    let t = weight / 2;
    let one = Rational::one();
    let p = |e: u32| Rational::from_integer(pow2(e));
    let mut out = Vec::with_capacity(t as usize);
    out.push((&one - p(weight - 1)) / (int(2) - p(weight - 1)));
    for j in 1..t - 1 {
        let s = weight - 2 * j - 2;
        out.push((p(s + 1) - &one) / (int(4) * (p(s) - &one)));
    }
    out.push(-(p(weight - 1) - &one) / int(4));
    Ok(out)
}

/// a_{i,j} = C(2j,2i) - C(2j,N-2-2i) + δ(i,j)(1-2^{2j+1}).
pub fn a_entry(weight: u32, i: u32, j: u32) -> Rational {
    let (i, j, n) = (i as i64, j as i64, weight as i64);
    let mut v = Rational::from_integer(binom(2 * j, 2 * i) - binom(2 * j, n - 2 - 2 * i));
    if i == j {
        v += Rational::from_integer(BigInt::one() - pow2(2 * j as u32 + 1));
    }
    v
}

/// M = (a_{i,j}), 1 ≤ i, j ≤ N/2-2.
pub fn m_matrix(weight: u32) -> Result<RatMatrix> {
    check_even_weight(weight, 4)?;
    let t = (weight / 2 - 2) as usize;
    Ok(RatMatrix::from_fn(t, t, |i, j| a_entry(weight, i as u32 + 1, j as u32 + 1)))
}

/// M̃ with E = M̃B: first column (1, 0, …, 0, -1/2), last column (0, …, 0, 1),
/// and a_{i,j} in every row of the middle columns.
pub fn m_tilde(weight: u32) -> Result<RatMatrix> {
    check_even_weight(weight, 4)?;
    let t = (weight / 2) as usize;
    Ok(RatMatrix::from_fn(t, t, |i, j| {
        if j == 0 {
            if i == 0 {
                Rational::one()
            } else if i == t - 1 {
                rat(-1, 2)
            } else {
                Rational::zero()
            }
        } else if j == t - 1 {
            delta(i, t - 1)
        } else {
            a_entry(weight, i as u32, j as u32)
        }
    }))
}

/// Closed-form E = M̃B in depth two.
pub fn e_depth2_closed(weight: u32) -> Result<RatMatrix> {
    m_tilde(weight)?.mul(&RatMatrix::diagonal(&b_diag(weight)?))
}

/// Outcome of the depth-two basis check at one weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Depth2BasisReport {
    pub weight: u32,
    pub order: usize,
    pub rank: usize,
    pub word_level_matches_closed_form: bool,
    pub matches_mtilde_b: bool,
    pub m_entries_match: bool,
    pub m_column_dominant: bool,
    pub m_row_dominant: bool,
}

impl Depth2BasisReport {
    pub fn passed(&self) -> bool {
        self.rank == self.order
            && self.word_level_matches_closed_form
            && self.matches_mtilde_b
            && self.m_entries_match
            && self.m_column_dominant
    }
}

/// E is built from words and compared with M̃B; M is read off E·B⁻¹ and
/// compared entrywise with the a_{i,j} formula.
pub fn verify_depth2_basis(weight: u32, pipeline: &mut WordPipeline) -> Result<Depth2BasisReport> {
    check_even_weight(weight, 4)?;
    let brute = pipeline.e_depth2(weight)?;
    let rows: Vec<IndexTuple> = odd_compositions(weight, 2).into_iter().map(|t| t.0).collect();
    let closed = closed_partial_matrix(&rows, &odd_columns(weight, 2))?;
    let mtb = e_depth2_closed(weight)?;
    let b = b_diag(weight)?;
    let t = (weight / 2 - 2) as usize;
    let m = m_matrix(weight)?;
    let from_e = RatMatrix::from_fn(t, t, |i, j| &brute[(i + 1, j + 1)] / &b[j + 1]);
    Ok(Depth2BasisReport {
        weight,
        order: brute.rows(),
        rank: brute.rank(),
        word_level_matches_closed_form: brute == closed,
        matches_mtilde_b: brute == mtb,
        m_entries_match: from_e == m,
        m_column_dominant: m.is_col_diag_dominant(),
        m_row_dominant: m.is_diag_dominant(),
    })
}

/// Outcome of the spanning check at one weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanReport {
    pub weight: u32,
    pub f_times_e_inverse: RatMatrix,
    pub last_column_zero: bool,
}

/// Computes F·E⁻¹ from words and checks that its last column (ζ^o(N-1,1)) vanishes.
pub fn verify_span(weight: u32, pipeline: &mut WordPipeline) -> Result<SpanReport> {
    check_even_weight(weight, 4)?;
    let e = pipeline.e_depth2(weight)?;
    let f = pipeline.f_matrix(weight)?;
    let x = f.mul(&e.inverse()?)?;
    let last = x.cols() - 1;
    let last_column_zero = x.column(last).iter().all(Zero::is_zero);
    Ok(SpanReport { weight, f_times_e_inverse: x, last_column_zero })
}

/// Human-readable label of a column, e.g. `3|(1,5)`.
pub fn column_label(c: &Column) -> String {
    format!("{}|{}", c.0, c.1)
}
