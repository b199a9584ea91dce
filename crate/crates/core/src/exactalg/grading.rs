//! (H, R)-bigradings on Cox-type rings.

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use super::poly::Polynomial;

/// Per-variable bidegrees `(dH, dR)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bigrading {
    weights: Vec<(i32, i32)>,
}

impl Bigrading {
    pub fn new(weights: Vec<(i32, i32)>) -> Self {
        Bigrading { weights }
    }

    pub fn weights(&self) -> &[(i32, i32)] {
        &self.weights
    }

    pub fn of_monomial(&self, m: &Monomial) -> (i32, i32) {
        assert_eq!(m.nvars(), self.weights.len(), "grading must cover every variable");
        m.exponents().iter().zip(&self.weights).fold((0, 0), |(h, r), (&e, &(wh, wr))| {
            (h + e as i32 * wh, r + e as i32 * wr)
        })
    }

    /// Common bidegree of all terms. `None` when the terms disagree or when
    /// `f` is zero (zero has no well-defined bidegree).
    pub fn bidegree_of(&self, f: &Polynomial) -> Option<(i32, i32)> {
        let mut it = f.terms().iter().map(|(m, _)| self.of_monomial(m));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }
}
