//! Explicit trigonal curves over a prime field.
//!
//! A curve of genus `g` sits on the scroll `P(O(e1) ⊕ O(e2))` as the zero
//! locus of one Cox-ring form `f` of class `3H - bR`. The scroll embeds in
//! `P^N` through the sections of `H`; the curve ideal in `P^N` is generated
//! by the `2×2` minors of the scroll matrix together with the rolled
//! translates of `f`, and can be cross-checked by elimination.

mod cox;
mod ideal;
mod model_file;
mod sample;

pub use cox::{cox_section_basis, AmbientCoordinates, CoxRing};
pub use ideal::{
    curve_ideal_elimination, curve_ideal_fast, rolling_factor_cubics, rolling_factor_quartics, scroll_ideal, vanishes_on_curve,
    ELIMINATION_MAX_AMBIENT_DIM,
};
pub use model_file::{ModelFile, ModelFileError};
pub use sample::{sample_curve, smoothness_check, SAMPLE_RETRIES};

use crate::exactalg::{AlgebraError, Polynomial, PrimeField};
use crate::groebner::GroebnerError;
use crate::scrollgeom::{ScrollData, ScrollError, VeryAmpleness};

#[derive(Debug, thiserror::Error)]
pub enum CurveError {
    #[error(transparent)]
    Scroll(#[from] ScrollError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error("K_C - {n}T is {class:?} for g = {g}, m = {m}; pass the allow-boundary flag to sample anyway")]
    NotAdmissible { g: i64, n: i64, m: i64, class: VeryAmpleness },
    #[error("no smooth member of |3H - bR| found in {0} attempts; try a larger prime")]
    RetriesExhausted(usize),
    #[error("elimination needs N <= {max}, got N = {got}; use the fast path")]
    EliminationTooLarge { got: i64, max: i64 },
    #[error("substituted generator {0} does not vanish on the curve")]
    SubstitutionFailed(usize),
}

/// A sampled curve: the scroll, the field, the seed and the equation `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveModel {
    pub scroll: ScrollData,
    pub field: PrimeField,
    pub seed: u64,
    /// Bihomogeneous of class `(3, -b)` in the Cox ring `s, t, x, y`.
    pub f: Polynomial,
    pub smooth: bool,
}

impl CurveModel {
    pub fn cox(&self) -> CoxRing {
        CoxRing::new(&self.scroll, self.field)
    }
}
