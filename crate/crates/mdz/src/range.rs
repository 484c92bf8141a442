use std::fmt;
use std::str::FromStr;

use clap::ValueEnum;

/// Suites run by `mdz verify`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, ValueEnum)]
pub enum Target {
    /// Brute-force ∂̄ against the depth-two closed forms.
    #[value(name = "lemmas-4x")]
    Lemmas4x,
    /// ∂̃·D = 0 and the rank identities of the level-two exact sequence.
    ExactSequence,
    /// E = M̃B invertible, M dominant and equal to the a_{i,j} formula.
    Depth2Basis,
    /// Last column of F·E⁻¹ vanishes.
    Span,
    /// Commuting diagram of transfer maps and the binomial identity.
    Transfer,
    /// Closed-form E against the word-level ∂-matrix, at a chosen depth.
    Tran,
    /// Depth-three invertibility, dominance and the PQ⁻¹ zero column.
    Depth3,
    /// Seeded randomized identity checks.
    Properties,
}

impl Target {
    /// Smallest admissible weight and required parity (`None` for any).
    pub fn constraint(self, depth: usize) -> (u32, Option<u32>) {
        match self {
            Target::Lemmas4x => (2, None),
            Target::ExactSequence => (8, Some(0)),
            Target::Depth2Basis => (4, Some(0)),
            Target::Span | Target::Transfer => (6, Some(0)),
            Target::Tran => (depth as u32 + 2, Some(depth as u32 % 2)),
            Target::Depth3 => (5, Some(1)),
            Target::Properties => (0, None),
        }
    }

    /// The default weight range.
    pub fn default_range(self, depth: usize) -> WeightRange {
        let (lo, hi) = match self {
            Target::Lemmas4x => (2, 30),
            Target::ExactSequence => (8, 40),
            Target::Depth2Basis => (4, 40),
            Target::Span => (6, 30),
            Target::Transfer => (6, 30),
            Target::Tran if depth == 3 => (5, 21),
            Target::Tran if depth == 4 => (8, 14),
            Target::Tran => (depth as u32 + 2, depth as u32 + 8),
            Target::Depth3 => (5, 21),
            Target::Properties => (0, 0),
        };
        WeightRange { lo, hi }
    }

    pub fn name(self) -> &'static str {
        match self {
            Target::Lemmas4x => "lemmas-4x",
            Target::ExactSequence => "exact-sequence",
            Target::Depth2Basis => "depth2-basis",
            Target::Span => "span",
            Target::Transfer => "transfer",
            Target::Tran => "tran",
            Target::Depth3 => "depth3",
            Target::Properties => "properties",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Inclusive weight range `lo..hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightRange {
    pub lo: u32,
    pub hi: u32,
}

impl FromStr for WeightRange {
    type Err = String;

    /// Accepts `A..B`, `A..=B` (both inclusive) or a single weight.
    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |x: &str| x.trim().parse::<u32>().map_err(|e| format!("bad weight {x:?}: {e}"));
        match s.split_once("..") {
            Some((a, b)) => {
                let b = b.strip_prefix('=').unwrap_or(b);
                Ok(WeightRange { lo: parse(a)?, hi: parse(b)? })
            }
            None => {
                let w = parse(s)?;
                Ok(WeightRange { lo: w, hi: w })
            }
        }
    }
}

impl fmt::Display for WeightRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

impl WeightRange {
    /// The admissible weights of the range for `target`, or a usage message.
    pub fn weights(self, target: Target, depth: usize) -> Result<Vec<u32>, String> {
        let (min, parity) = target.constraint(depth);
        if self.lo > self.hi {
            return Err(format!("empty range {self}"));
        }
        if self.lo < min {
            return Err(format!("{target} needs weights ≥ {min}, got {self}"));
        }
        let mut lo = self.lo;
        if let Some(p) = parity {
            if lo % 2 != p {
                lo += 1;
            }
        }
        let step = if parity.is_some() { 2 } else { 1 };
        let out: Vec<u32> = (lo..=self.hi).step_by(step).collect();
        if out.is_empty() {
            let kind = if parity == Some(0) { "even" } else { "odd" };
            return Err(format!("{target} needs an {kind} weight in {self}"));
        }
        Ok(out)
    }
}
