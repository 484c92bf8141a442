//! Words over the alphabet {e₀, e₁, e₋₁} and finite rational combinations of them.
//!
//! The same types serve the Lie side (letters e₀, e₁, e₋₁) and the dual side
//! (letters e⁰, e¹, e⁻¹); words are orthonormal under the pairing, so the
//! pairing is just [`NcPoly::coeff`].
//!
//! Text syntax: letters `0`, `1`, `-1` joined by dots, e.g. `0.0.-1` is e₀e₀e₋₁.
//! The empty word is written `()`.

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Neg, Sub};
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::exactalg::{format_rational, Rational};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X0,
    X1,
    XM1,
}

impl Letter {
    /// The subscript: 0, 1 or -1.
    pub fn index(self) -> i8 {
        match self {
            Letter::X0 => 0,
            Letter::X1 => 1,
            Letter::XM1 => -1,
        }
    }

    pub fn from_index(i: i8) -> Option<Letter> {
        match i {
            0 => Some(Letter::X0),
            1 => Some(Letter::X1),
            -1 => Some(Letter::XM1),
            _ => None,
        }
    }

    /// e₁ for +1, e₋₁ for -1.
    pub fn from_sign(positive: bool) -> Letter {
        if positive {
            Letter::X1
        } else {
            Letter::XM1
        }
    }

    pub fn is_x0(self) -> bool {
        self == Letter::X0
    }

    /// e₁ ↔ e₋₁, e₀ fixed.
    pub fn swapped(self) -> Letter {
        match self {
            Letter::X0 => Letter::X0,
            Letter::X1 => Letter::XM1,
            Letter::XM1 => Letter::X1,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// `e₀^n`.
    pub fn x0_power(n: usize) -> Self {
        Word(alloc::vec![Letter::X0; n])
    }

    /// `e_{ε₁}e₀^{n₁-1} e_{ε₂}e₀^{n₂-1} ⋯` for signs `ε_i` (true = +1) and parts `n_i ≥ 1`.
    pub fn from_blocks(signs: &[bool], parts: &[u32]) -> Self {
        assert_eq!(signs.len(), parts.len(), "one sign per part");
        let mut letters = Vec::with_capacity(parts.iter().map(|&n| n as usize).sum());
        for (&s, &n) in signs.iter().zip(parts) {
            assert!(n >= 1, "parts must be positive");
            letters.push(Letter::from_sign(s));
            letters.extend(core::iter::repeat_n(Letter::X0, n as usize - 1));
        }
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.len()
    }

    pub fn depth(&self) -> usize {
        self.0.iter().filter(|l| !l.is_x0()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.0.len() + other.0.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn swapped(&self) -> Word {
        Word(self.0.iter().map(|l| l.swapped()).collect())
    }

    /// Splits a word starting with e_{±1} into its blocks: signs and block lengths.
    /// Returns `None` for the empty word or a word starting with e₀.
    pub fn blocks(&self) -> Option<(Vec<bool>, Vec<u32>)> {
        let mut signs = Vec::new();
        let mut parts: Vec<u32> = Vec::new();
        for &l in &self.0 {
            match l {
                Letter::X0 => *parts.last_mut()? += 1,
                _ => {
                    signs.push(l == Letter::X1);
                    parts.push(1);
                }
            }
        }
        if parts.is_empty() {
            None
        } else {
            Some((signs, parts))
        }
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{}", l.index())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "()" {
            return Ok(Word::empty());
        }
        s.split('.')
            .map(|tok| {
                tok.trim()
                    .parse::<i8>()
                    .ok()
                    .and_then(Letter::from_index)
                    .ok_or_else(|| Error::Contract(alloc::format!("bad letter token {tok:?}")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

/// A finite ℚ-linear combination of words. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NcPoly {
    terms: BTreeMap<Word, Rational>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly { terms: BTreeMap::new() }
    }

    pub fn from_word(w: Word) -> Self {
        Self::term(w, Rational::one())
    }

    pub fn term(w: Word, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c·other`.
    pub fn add_scaled(&mut self, other: &NcPoly, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (w, a) in &other.terms {
            self.add_term(w.clone(), a * c);
        }
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Rational) -> NcPoly {
        let mut out = NcPoly::zero();
        out.add_scaled(self, c);
        out
    }

    /// Bilinear extension of word concatenation.
    pub fn concat(&self, other: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    /// `(a₁⋯aₙ)* = (-1)ⁿ aₙ⋯a₁`.
    pub fn star(&self) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w, c) in &self.terms {
            let c = if w.weight() % 2 == 1 { -c.clone() } else { c.clone() };
            out.add_term(w.reversed(), c);
        }
        out
    }

    /// Letterwise e₁ ↔ e₋₁.
    pub fn tau(&self) -> NcPoly {
        NcPoly { terms: self.terms.iter().map(|(w, c)| (w.swapped(), c.clone())).collect() }
    }

    /// Terms of exactly the given weight and depth.
    pub fn graded_part(&self, weight: usize, depth: usize) -> NcPoly {
        NcPoly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.weight() == weight && w.depth() == depth)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// True iff every term has the given weight and depth.
    pub fn is_homogeneous(&self, weight: usize, depth: usize) -> bool {
        self.terms.keys().all(|w| w.weight() == weight && w.depth() == depth)
    }

    pub fn into_terms(self) -> BTreeMap<Word, Rational> {
        self.terms
    }
}

impl From<Word> for NcPoly {
    fn from(w: Word) -> Self {
        NcPoly::from_word(w)
    }
}

impl FromIterator<(Word, Rational)> for NcPoly {
    fn from_iter<I: IntoIterator<Item = (Word, Rational)>>(iter: I) -> Self {
        let mut p = NcPoly::zero();
        for (w, c) in iter {
            p.add_term(w, c);
        }
        p
    }
}

impl AddAssign<&NcPoly> for NcPoly {
    fn add_assign(&mut self, rhs: &NcPoly) {
        self.add_scaled(rhs, &Rational::one());
    }
}

impl Add for &NcPoly {
    type Output = NcPoly;

    fn add(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &NcPoly {
    type Output = NcPoly;

    fn sub(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;

    fn neg(self) -> NcPoly {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(w, c)| format_rational(c) + "*" + &w.to_string()).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
