//! Depth-one generators σ̄₂ₙ₊₁, the circle action, and the dual derivations ∂̄₂ₙ₊₁.
//!
//! Only the depth-one part of each generator is stored: the depth-graded
//! derivations never see the higher depth terms.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::exactalg::{binom, delta, pow2, Rational};
use crate::words::{Letter, NcPoly, Word};
use crate::{Error, Result};

/// σ̄₂ₙ₊₁ as an element of ℚ⟨e₀, e₁, e₋₁⟩.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaGenerator {
    pub n: u32,
    pub body: NcPoly,
}

/// σ̄₁ = e₋₁ and, for n ≥ 1,
/// σ̄₂ₙ₊₁ = (1-2²ⁿ) Σ_r (-1)^r C(2n,r) e₀^{2n-r} e₋₁ e₀^r + 2²ⁿ Σ_r (-1)^r C(2n,r) e₀^{2n-r} e₁ e₀^r.
pub fn sigma_bar(n: u32) -> SigmaGenerator {
    let mut body = NcPoly::zero();
    if n == 0 {
        body.add_term(Word::new(alloc::vec![Letter::XM1]), Rational::one());
        return SigmaGenerator { n, body };
    }
    let p = pow2(2 * n);
    let q = BigInt::one() - &p;
    let m = 2 * n as usize;
    for r in 0..=m {
        let c = binom(m as i64, r as i64) * if r % 2 == 0 { 1 } else { -1 };
        for (letter, scale) in [(Letter::XM1, &q), (Letter::X1, &p)] {
            let word = Word::x0_power(m - r)
                .concat(&Word::new(alloc::vec![letter]))
                .concat(&Word::x0_power(r));
            body.add_term(word, Rational::from_integer(&c * scale));
        }
    }
    SigmaGenerator { n, body }
}

/// The single-letter rules: `a∘e₁ = a e₁ + e₁ a*`, `a∘e₋₁ = τ(a) e₋₁ + e₋₁ τ(a)*`,
/// and `a∘e₀ = e₀ a`.
pub fn letter_action(a: &NcPoly, letter: Letter) -> NcPoly {
    let e = NcPoly::from_word(Word::new(alloc::vec![letter]));
    match letter {
        Letter::X0 => e.concat(a),
        Letter::X1 => &a.concat(&e) + &e.concat(&a.star()),
        Letter::XM1 => {
            let t = a.tau();
            &t.concat(&e) + &e.concat(&t.star())
        }
    }
}

/// The circle action `a∘w`, extended bilinearly in `w`.
pub fn circ(a: &NcPoly, w: &NcPoly) -> NcPoly {
    let plus = letter_action(a, Letter::X1);
    let minus = letter_action(a, Letter::XM1);
    let mut out = NcPoly::zero();
    for (word, c) in w.iter() {
        out.add_scaled(&circ_word(a, &plus, &minus, word), c);
    }
    out
}

/// Unrolled recursion: every e_{±1} of `w` is replaced in turn by its
/// letter action, and the whole word picks up `a` as a tail.
fn circ_word(a: &NcPoly, plus: &NcPoly, minus: &NcPoly, w: &Word) -> NcPoly {
    let letters = w.letters();
    let mut out = NcPoly::zero();
    for (j, &l) in letters.iter().enumerate() {
        let action = match l {
            Letter::X0 => continue,
            Letter::X1 => plus,
            Letter::XM1 => minus,
        };
        let prefix = &letters[..j];
        let suffix = &letters[j + 1..];
        for (mid, c) in action.iter() {
            let mut word = Vec::with_capacity(prefix.len() + mid.weight() + suffix.len());
            word.extend_from_slice(prefix);
            word.extend_from_slice(mid.letters());
            word.extend_from_slice(suffix);
            out.add_term(Word::new(word), c.clone());
        }
    }
    for (tail, c) in a.iter() {
        out.add_term(w.concat(tail), c.clone());
    }
    out
}

/// All words of the given weight and depth.
pub fn words_of(weight: usize, depth: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if depth > weight {
        return out;
    }
    let mut buf = alloc::vec![Letter::X0; weight];
    fill_words(&mut buf, 0, depth, &mut out);
    out
}

fn fill_words(buf: &mut [Letter], start: usize, left: usize, out: &mut Vec<Word>) {
    if left == 0 {
        out.push(Word::new(buf.to_vec()));
        return;
    }
    for pos in start..=buf.len() - left {
        for l in [Letter::X1, Letter::XM1] {
            buf[pos] = l;
            fill_words(buf, pos + 1, left - 1, out);
        }
        buf[pos] = Letter::X0;
    }
}

/// The transpose of `y ↦ σ̄₂ₙ₊₁∘y` over all words `y` of one weight and depth:
/// for each output word `v`, the words `y` with `coeff(σ̄∘y, v) ≠ 0`.
#[derive(Clone, Debug)]
pub struct DbarTable {
    n: u32,
    weight: usize,
    depth: usize,
    entries: BTreeMap<Word, Vec<(Word, Rational)>>,
}

impl DbarTable {
    /// Table for source words `y` of weight `weight` and depth `depth`.
    pub fn new(n: u32, weight: usize, depth: usize) -> Self {
        let sigma = sigma_bar(n).body;
        let plus = letter_action(&sigma, Letter::X1);
        let minus = letter_action(&sigma, Letter::XM1);
        let mut entries: BTreeMap<Word, Vec<(Word, Rational)>> = BTreeMap::new();
        for y in words_of(weight, depth) {
            for (v, c) in circ_word(&sigma, &plus, &minus, &y).into_terms() {
                entries.entry(v).or_default().push((y.clone(), c));
            }
        }
        DbarTable { n, weight, depth, entries }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Weight and depth of the output of [`DbarTable::dbar`].
    pub fn target_grading(&self) -> (usize, usize) {
        (self.weight, self.depth)
    }

    /// ∂̄₂ₙ₊₁(v) for `v` of weight `weight + 2n + 1` and depth `depth + 1`.
    pub fn dbar(&self, v: &Word) -> NcPoly {
        self.entries
            .get(v)
            .map(|ys| ys.iter().cloned().collect())
            .unwrap_or_else(NcPoly::zero)
    }

    /// ∂̄₂ₙ₊₁ extended linearly; terms of the wrong grading contribute nothing.
    pub fn dbar_poly(&self, p: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (v, c) in p.iter() {
            if let Some(ys) = self.entries.get(v) {
                for (y, d) in ys {
                    out.add_term(y.clone(), c * d);
                }
            }
        }
        out
    }
}

/// ∂̄₂ₙ₊₁(v) = Σ_y coeff(σ̄₂ₙ₊₁∘y, v)·y over words y of weight N-2n-1 and depth r-1.
pub fn dbar(n: u32, v: &Word) -> Result<NcPoly> {
    let (weight, depth) = (v.weight(), v.depth());
    let shift = 2 * n as usize + 1;
    if depth == 0 || weight < shift {
        return Err(Error::Contract(format!(
            "dbar({n}, ·) needs depth ≥ 1 and weight ≥ {shift}, got word {v}"
        )));
    }
    Ok(DbarTable::new(n, weight - shift, depth - 1).dbar(v))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: u32) -> Parity {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// `C(2n, n_k - 1) e^{±1}(e⁰)^s`.
fn theta(positive: bool, nk: u32, n: u32, s: usize) -> NcPoly {
    let word = Word::new(alloc::vec![Letter::from_sign(positive)]).concat(&Word::x0_power(s));
    NcPoly::term(word, Rational::from_integer(binom(2 * n as i64, nk as i64 - 1)))
}

fn lin(terms: &[(&Rational, &NcPoly)]) -> NcPoly {
    let mut out = NcPoly::zero();
    for (c, p) in terms {
        out.add_scaled(p, c);
    }
    out
}

/// Closed forms for ∂̄₂ₙ₊₁(e^{ε₁}(e⁰)^{n₁-1} e^{ε₂}(e⁰)^{n₂-1}) with n₁, n₂ of equal parity.
///
/// Signs are `true` for +1. For odd parts and n = 0 the four special cases
/// are summed, so that (n₁, n₂) = (1, 1) picks up both the n₁ = 1 and the
/// n₂ = 1 contributions.
pub fn closed_dbar_depth2(
    parity: Parity,
    signs: (bool, bool),
    n1: u32,
    n2: u32,
    n: u32,
) -> Result<NcPoly> {
    if n1 == 0 || n2 == 0 {
        return Err(Error::Contract(format!("parts must be positive, got ({n1}, {n2})")));
    }
    if Parity::of(n1) != parity || Parity::of(n2) != parity {
        return Err(Error::Unsupported(format!(
            "({n1}, {n2}) does not have {parity:?} parity in both parts"
        )));
    }
    if n1 + n2 < 2 * n + 2 {
        return Err(Error::Contract(format!("weight {} < 2n+2 = {}", n1 + n2, 2 * n + 2)));
    }
    let s = (n1 + n2 - 2 * n - 2) as usize;
    let one = Rational::one();
    let m_one = -Rational::one();
    let p = Rational::from_integer(pow2(2 * n));
    let q = &one - &p;
    let (t1a, tma) = (theta(true, n1, n, s), theta(false, n1, n, s));
    let (t1b, tmb) = (theta(true, n2, n, s), theta(false, n2, n, s));

    let out = match parity {
        Parity::Even if n == 0 => NcPoly::zero(),
        Parity::Even => match signs {
            (true, true) => lin(&[(&p, &t1a), (&-&p, &t1b)]),
            (true, false) => lin(&[(&q, &t1a), (&-&q, &t1b)]),
            (false, true) => lin(&[(&q, &tma), (&-&p, &tmb)]),
            (false, false) => lin(&[(&p, &tma), (&-&q, &tmb)]),
        },
        Parity::Odd if n == 0 => {
            let plus = |k: u32| NcPoly::from_word(Word::from_blocks(&[true], &[k]));
            let minus = |k: u32| NcPoly::from_word(Word::from_blocks(&[false], &[k]));
            let mut out = NcPoly::zero();
            if n1 == 1 && signs == (true, false) {
                out += &lin(&[(&m_one, &plus(n2)), (&one, &minus(n2))]);
            }
            if n1 == 1 && signs == (false, true) {
                out += &lin(&[(&one, &plus(n2)), (&m_one, &minus(n2))]);
            }
            if n2 == 1 && signs == (true, false) {
                out += &plus(n1);
            }
            if n2 == 1 && signs == (false, false) {
                out += &minus(n1);
            }
            out
        }
        Parity::Odd => {
            let d = delta(2 * n, n1 - 1);
            let mp = -&p;
            let mq = -&q;
            match signs {
                (true, true) => lin(&[(&mp, &t1a), (&p, &t1b), (&(&p * &d), &t1a)]),
                (true, false) => lin(&[(&mq, &t1a), (&q, &t1b), (&(&q * &d), &tma)]),
                (false, true) => lin(&[(&mq, &tma), (&(&q * &d), &t1a), (&p, &tmb)]),
                (false, false) => lin(&[(&mp, &tma), (&(&p * &d), &tma), (&q, &tmb)]),
            }
        }
    };
    Ok(out)
}

/// Every (n₁, n₂, n, signs) covered by the depth-two closed forms at weight N.
pub fn lemma_instances(weight: u32) -> Vec<(u32, u32, u32, (bool, bool))> {
    let mut out = Vec::new();
    for n1 in 1..weight {
        let n2 = weight - n1;
        if n1 % 2 != n2 % 2 {
            continue;
        }
        for n in 0..=(weight - 2) / 2 {
            for signs in [(true, true), (true, false), (false, true), (false, false)] {
                out.push((n1, n2, n, signs));
            }
        }
    }
    out
}

/// Compares word-level ∂̄ with the closed forms for every instance of weight N.
/// Returns the instances that disagree.
pub fn check_lemmas(weight: u32) -> Vec<(u32, u32, u32, (bool, bool))> {
    let mut tables: BTreeMap<u32, DbarTable> = BTreeMap::new();
    let mut bad = Vec::new();
    for (n1, n2, n, signs) in lemma_instances(weight) {
        let table = tables
            .entry(n)
            .or_insert_with(|| DbarTable::new(n, (weight - 2 * n - 1) as usize, 1));
        let v = Word::from_blocks(&[signs.0, signs.1], &[n1, n2]);
        let brute = table.dbar(&v);
        let closed = closed_dbar_depth2(Parity::of(n1), signs, n1, n2, n)
            .expect("lemma instances satisfy the closed-form preconditions");
        if brute != closed {
            bad.push((n1, n2, n, signs));
        }
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn p(s: &str) -> NcPoly {
        NcPoly::from_word(w(s))
    }

    /// The recursion exactly as stated, splitting off e₀^n e_i at the front.
    fn circ_oracle(a: &NcPoly, w: &Word) -> NcPoly {
        let letters = w.letters();
        match letters.iter().position(|l| !l.is_x0()) {
            None => NcPoly::from_word(w.clone()).concat(a),
            Some(j) => {
                let head = NcPoly::from_word(Word::new(letters[..j].to_vec()));
                let rest = Word::new(letters[j + 1..].to_vec());
                let first = head
                    .concat(&letter_action(a, letters[j]))
                    .concat(&NcPoly::from_word(rest.clone()));
                let with_letter = NcPoly::from_word(Word::new(letters[..=j].to_vec()));
                &first + &with_letter.concat(&circ_oracle(a, &rest))
            }
        }
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_bar(0).body, p("-1"));
        let expected: NcPoly = [
            ("0.0.-1", -3),
            ("0.-1.0", 6),
            ("-1.0.0", -3),
            ("0.0.1", 4),
            ("0.1.0", -8),
            ("1.0.0", 4),
        ]
        .into_iter()
        .map(|(s, c)| (w(s), int(c)))
        .collect();
        assert_eq!(sigma_bar(1).body, expected);
        for n in 0..6 {
            assert!(sigma_bar(n).body.is_homogeneous(2 * n as usize + 1, 1));
        }
    }

    #[test]
    fn letter_rule_examples() {
        assert_eq!(letter_action(&p("-1"), Letter::X1), &p("-1.1") - &p("1.-1"));
        assert_eq!(letter_action(&p("-1"), Letter::XM1), &p("1.-1") - &p("-1.1"));
    }

    #[test]
    fn single_letter_word_carries_the_tail() {
        assert_eq!(circ(&p("-1"), &p("1")), p("-1.1"));
    }

    #[test]
    fn circ_with_sigma_one() {
        let out = circ(&sigma_bar(0).body, &p("0.1.0.0"));
        let expected = &(&p("0.-1.1.0.0") - &p("0.1.-1.0.0")) + &p("0.1.0.0.-1");
        assert_eq!(out, expected);
    }

    #[test]
    fn dbar_examples() {
        assert!(dbar(0, &w("1.0.1.0")).unwrap().is_zero());
        let v = Word::from_blocks(&[true, true], &[2, 4]);
        assert_eq!(dbar(1, &v).unwrap(), NcPoly::term(w("1.0.0"), int(8)));
        let out = dbar(1, &w("-1.0.0")).unwrap();
        assert!(out.iter().all(|(y, _)| y.is_empty()));
        assert!(dbar(2, &w("1.0")).is_err());
    }

    #[test]
    fn closed_form_examples() {
        let t = |pos: bool, k: u32, s: usize| {
            NcPoly::from_word(Word::new(alloc::vec![Letter::from_sign(pos)]).concat(&Word::x0_power(s)))
                .scale(&Rational::from_integer(binom(2, k as i64 - 1)))
        };
        // even, (+,+), n = 1, (n1, n2) = (2, 4)
        let got = closed_dbar_depth2(Parity::Even, (true, true), 2, 4, 1).unwrap();
        assert_eq!(got, (&t(true, 2, 2) - &t(true, 4, 2)).scale(&int(4)));
        let got = closed_dbar_depth2(Parity::Odd, (true, false), 1, 5, 0).unwrap();
        assert_eq!(got, &p("-1.0.0.0.0") - &p("1.0.0.0.0"));
        assert!(matches!(
            closed_dbar_depth2(Parity::Odd, (true, true), 2, 4, 1),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn lemmas_hold_to_weight_sixteen() {
        for weight in 2..=16 {
            assert!(check_lemmas(weight).is_empty(), "weight {weight}");
        }
    }

    #[test]
    fn words_of_counts() {
        assert_eq!(words_of(4, 2).len(), 6 * 4);
        assert_eq!(words_of(3, 0), alloc::vec![w("0.0.0")]);
        assert!(words_of(2, 3).is_empty());
    }

    fn arb_word(max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(
            prop_oneof![Just(Letter::X0), Just(Letter::X1), Just(Letter::XM1)],
            0..max_len,
        )
        .prop_map(Word::new)
    }

    proptest! {
        #[test]
        fn unrolled_circ_matches_recursion(n in 0u32..3, y in arb_word(6)) {
            let a = sigma_bar(n).body;
            prop_assert_eq!(circ(&a, &NcPoly::from_word(y.clone())), circ_oracle(&a, &y));
        }

        #[test]
        fn circ_adds_weight_and_one_depth(n in 0u32..3, y in arb_word(6)) {
            let out = circ(&sigma_bar(n).body, &NcPoly::from_word(y.clone()));
            prop_assert!(out.is_homogeneous(y.weight() + 2 * n as usize + 1, y.depth() + 1));
        }

        #[test]
        fn dbar_lowers_weight_and_depth(n in 0u32..3, v in arb_word(8)) {
            prop_assume!(v.depth() >= 1 && v.weight() > 2 * n as usize);
            let out = dbar(n, &v).unwrap();
            prop_assert!(out.is_homogeneous(v.weight() - 2 * n as usize - 1, v.depth() - 1));
        }
    }
}
