//! Exact algebra for the depth-graded motivic Lie algebra relative to μ₂.
//!
//! Everything here is pure and allocation-only (`no_std` + `alloc`):
//!
//! * [`exactalg`]: exact rationals and dense rational matrices (Bareiss rank,
//!   kernels, inverses, diagonal dominance).
//! * [`words`]: the word algebra ℚ⟨e₀, e₁, e₋₁⟩ with weight/depth gradings.
//! * [`ihara`]: depth-one generators σ̄₂ₙ₊₁, the circle action and the dual
//!   derivations ∂̄₂ₙ₊₁, plus the depth-two closed forms they must reproduce.
//! * [`sumodd`]: sum-odd word combinations, depth-one reduction, the maps
//!   ∂₂ₙ₊₁ (closed form and word-level) and the depth-two matrices.
//! * [`periodpoly`]: Γ₀(2) period polynomials, W_k^{+,0}, the dual map D and
//!   the exact-sequence check.
//! * [`transfer`]: the two-variable polynomial transfer maps and the
//!   coefficients they induce.
//! * [`higherdepth`]: the closed-form matrix E in depth r ≥ 3, the depth-three
//!   verification and single conjecture instances.
//! * [`cuspdim`]: dimension formula for cusp forms on Γ₀(N), used as an
//!   independent oracle.
#![no_std]

extern crate alloc;

pub mod binform;
pub mod cuspdim;
mod error;
pub mod exactalg;
pub mod higherdepth;
pub mod ihara;
pub mod periodpoly;
pub mod sumodd;
pub mod transfer;
pub mod words;

pub use error::{Error, Result};
pub use exactalg::{RatMatrix, Rational};
pub use words::{Letter, NcPoly, Word};
