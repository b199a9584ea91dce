//! Exponent vectors and monomial orders.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use super::AlgebraError;

pub type Exponent = u16;

/// A monomial as its exponent vector, one entry per ring variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[Exponent; 12]>);

impl Monomial {
    pub fn new(exponents: &[Exponent]) -> Self {
        Monomial(SmallVec::from_slice(exponents))
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn exponents(&self) -> &[Exponent] {
        &self.0
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> Exponent {
        self.0[i]
    }

    pub(crate) fn exponents_mut(&mut self) -> &mut [Exponent] {
        &mut self.0
    }

    /// Standard total degree.
    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    #[inline]
    pub fn weighted_degree(&self, weights: &[u32]) -> u32 {
        self.0.iter().zip(weights).map(|(&e, &w)| e as u32 * w).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(other.0.iter().zip(self.0.iter()).map(|(a, b)| a - b).collect()))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(&a, &b)| a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Bitmask of variables with nonzero exponent (first 64 variables).
    #[inline]
    pub fn support_mask(&self) -> u64 {
        let mut m = 0u64;
        for (i, &e) in self.0.iter().enumerate().take(64) {
            if e != 0 {
                m |= 1 << i;
            }
        }
        m
    }
}

/// Monomial orders available on polynomial rings.
///
/// Both orders compare by (weighted) degree first, so they are well-orders
/// on positively graded rings. The Schreyer orders on free modules live in
/// [`crate::groebner::module`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    DegRevLex,
    /// Degrevlex on the first `front` variables, ties broken by degrevlex on
    /// the remaining ones. Any monomial involving a front variable beats
    /// every monomial that does not.
    BlockElimination { front: usize },
}

#[inline]
fn revlex_tail(a: &[Exponent], b: &[Exponent]) -> Ordering {
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            // smaller exponent in the last differing variable is bigger
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

#[inline]
fn wdeg(e: &[Exponent], w: &[u32]) -> u32 {
    e.iter().zip(w).map(|(&x, &y)| x as u32 * y).sum()
}

#[inline]
pub(crate) fn degrevlex_slices(a: &[Exponent], b: &[Exponent], w: &[u32]) -> Ordering {
    wdeg(a, w).cmp(&wdeg(b, w)).then_with(|| revlex_tail(a, b))
}

impl MonomialOrder {
    /// Compares two exponent vectors of equal length under per-variable weights.
    #[inline]
    pub fn cmp_with_weights(&self, a: &Monomial, b: &Monomial, weights: &[u32]) -> Ordering {
        match *self {
            MonomialOrder::DegRevLex => degrevlex_slices(&a.0, &b.0, weights),
            MonomialOrder::BlockElimination { front } => {
                let f = front.min(a.0.len());
                degrevlex_slices(&a.0[..f], &b.0[..f], &weights[..f])
                    .then_with(|| degrevlex_slices(&a.0[f..], &b.0[f..], &weights[f..]))
            }
        }
    }

    /// Standard-graded comparison with a variable-count check.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering, AlgebraError> {
        if a.nvars() != b.nvars() {
            return Err(AlgebraError::VariableCountMismatch(a.nvars(), b.nvars()));
        }
        let w = vec![1; a.nvars()];
        Ok(self.cmp_with_weights(a, b, &w))
    }
}
