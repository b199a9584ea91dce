//! Predicted Betti tables: Eagon–Northcott terms, the mapping cone
//! `[C^0 <- C^b ⊗ O(-3)]`, and the closed formulas it produces.

use serde::Serialize;

use crate::resolution::BettiTable;
use crate::scrollgeom::ScrollData;

/// Largest genus accepted; all binomials then fit comfortably in `u64`.
pub const MAX_GENUS: i64 = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BettiCalcError {
    #[error("closed formulas need g >= 3n + 4, got g = {g}, n = {n}")]
    OutsideClosedFormRange { g: i64, n: i64 },
    #[error("genus {0} exceeds the supported bound {MAX_GENUS}")]
    GenusTooLarge(i64),
    #[error("invalid complex parameters f_rank = {f_rank}, b = {b}")]
    InvalidParameters { f_rank: i64, b: i64 },
    #[error("integer overflow while computing Betti numbers")]
    Overflow,
}

/// Exact binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> Result<u64, BettiCalcError> {
    if k < 0 || n < 0 || k > n {
        return Ok(0);
    }
    let k = k.min(n - k) as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n as u128 - i).ok_or(BettiCalcError::Overflow)? / (i + 1);
    }
    u64::try_from(acc).map_err(|_| BettiCalcError::Overflow)
}

fn times(a: i64, b: u64) -> Result<u64, BettiCalcError> {
    u64::try_from(a).ok().and_then(|a| a.checked_mul(b)).ok_or(BettiCalcError::Overflow)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EnTerm {
    pub j: usize,
    pub twist: i32,
    pub rank: u64,
}

/// Term ranks and twists of the Eagon–Northcott type complex `C^b`
/// resolving `Sym^b` of the cokernel of `Φ: F -> G`, `rank G = 2`,
/// shifted by `extra_twist`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnComplex {
    pub f_rank: i64,
    pub g_rank: i64,
    pub b: i64,
    pub extra_twist: i32,
    pub terms: Vec<EnTerm>,
    /// Position `j` of the map `C_j -> C_{j-1}` of degree 2, if any.
    pub degree_two_step: Option<usize>,
}

impl EnComplex {
    /// Degree of the differential leaving position `j` (`j >= 1`).
    pub fn step_degree(&self, j: usize) -> Option<i32> {
        let t = self.terms.iter().find(|t| t.j == j)?;
        let s = self.terms.iter().find(|s| s.j + 1 == j)?;
        Some(t.twist - s.twist)
    }

    pub fn length(&self) -> usize {
        self.terms.last().map_or(0, |t| t.j)
    }
}

pub fn en_complex(f_rank: i64, b: i64, extra_twist: i32) -> Result<EnComplex, BettiCalcError> {
    if f_rank < 2 || b < -1 || extra_twist < 0 {
        return Err(BettiCalcError::InvalidParameters { f_rank, b });
    }
    let mut terms = Vec::new();
    for j in 0..f_rank {
        let (rank, twist) = if j <= b {
            (times(b - j + 1, binomial(f_rank, j)?)?, j)
        } else {
            (times(j - b, binomial(f_rank, j + 1)?)?, j + 1)
        };
        if rank > 0 {
            terms.push(EnTerm { j: j as usize, twist: twist as i32 + extra_twist, rank });
        }
    }
    let degree_two_step = (b >= 0 && b + 1 < f_rank).then_some((b + 1) as usize);
    Ok(EnComplex { f_rank, g_rank: 2, b, extra_twist, terms, degree_two_step })
}

/// The two halves of the mapping cone: `C^0` at positions `j`, `C^b(-3)`
/// at positions `j + 1`.
pub fn cone_parts(s: &ScrollData) -> Result<(EnComplex, EnComplex), BettiCalcError> {
    if s.g > MAX_GENUS {
        return Err(BettiCalcError::GenusTooLarge(s.g));
    }
    Ok((en_complex(s.f_rank, 0, 0)?, en_complex(s.f_rank, s.b, 3)?))
}

pub fn mapping_cone_table(s: &ScrollData) -> Result<BettiTable, BettiCalcError> {
    let (c0, cb) = cone_parts(s)?;
    let mut t = BettiTable::new();
    for e in &c0.terms {
        t.add(e.j, e.twist, e.rank);
    }
    for e in &cb.terms {
        t.add(e.j + 1, e.twist, e.rank);
    }
    Ok(t)
}

/// Every component of the cone differential raises degree: the internal
/// maps of both halves and the comparison maps `C^b_j(-3) -> C^0_j`.
pub fn cone_is_minimal(s: &ScrollData) -> Result<bool, BettiCalcError> {
    let (c0, cb) = cone_parts(s)?;
    let internal = |c: &EnComplex| (1..=c.length()).all(|j| c.step_degree(j).is_none_or(|d| d >= 1));
    let comparison = cb.terms.iter().all(|e| {
        c0.terms.iter().filter(|t| t.j == e.j).all(|t| e.twist - t.twist >= 1)
    });
    Ok(internal(&c0) && internal(&cb) && comparison)
}

/// Betti numbers of `C ⊂ P^{g-2n-1}` in closed form, `g >= 3n + 4`.
pub fn closed_form_betti(g: i64, n: i64) -> Result<BettiTable, BettiCalcError> {
    if n < 1 || g < 3 * n + 4 {
        return Err(BettiCalcError::OutsideClosedFormRange { g, n });
    }
    if g > MAX_GENUS {
        return Err(BettiCalcError::GenusTooLarge(g));
    }
    let f = g - 2 * n - 2;
    let b = g - 3 * n - 4;
    let mut t = BettiTable::new();
    t.add(0, 0, 1);
    for i in 1..f {
        t.add(i as usize, (i + 1) as i32, times(i, binomial(f, i + 1)?)?);
    }
    for i in 1..=b + 1 {
        t.add(i as usize, (i + 2) as i32, times(b + 2 - i, binomial(f, i - 1)?)?);
    }
    for i in b + 2..=f {
        t.add(i as usize, (i + 3) as i32, times(i - 1 - b, binomial(f, i)?)?);
    }
    Ok(t)
}

/// Rows `d - i` are exactly `0..=3`: row 0 only at `(0, 0)`, row 1 for
/// `1 <= i <= g-2n-3`, row 2 for `1 <= i <= g-3n-3`, row 3 for
/// `g-3n-2 <= i <= g-2n-2`.
pub fn table_shape_check(t: &BettiTable, g: i64, n: i64) -> bool {
    let row_range = |row: i32| -> (i64, i64) {
        match row {
            0 => (0, 0),
            1 => (1, g - 2 * n - 3),
            2 => (1, g - 3 * n - 3),
            3 => (g - 3 * n - 2, g - 2 * n - 2),
            _ => (1, 0),
        }
    };
    let in_support = t.entries().all(|(i, d, _)| {
        let (lo, hi) = row_range(d - i as i32);
        (lo..=hi).contains(&(i as i64))
    });
    let full = (0..=3).all(|row| {
        let (lo, hi) = row_range(row);
        (lo..=hi).all(|i| t.get(i as usize, i as i32 + row) > 0)
    });
    in_support && full
}

/// `sum (-1)^i beta_{i,d} binom(N + m - d, N)`.
pub fn hf_from_betti(t: &BettiTable, ambient_dim: i64, m: i64) -> i128 {
    t.hilbert_function(ambient_dim as usize, m)
}

pub fn rank_alternating_sum(t: &BettiTable) -> i64 {
    t.rank_alternating_sum()
}

/// `m (2g - 2 - 3n) - g + 1` for `m >= 2`, `g - 2n` for `m = 1`, `1` for `m = 0`.
pub fn hilbert_polynomial_value(g: i64, n: i64, m: i64) -> i64 {
    match m {
        0 => 1,
        1 => g - 2 * n,
        _ => m * (2 * g - 2 - 3 * n) - g + 1,
    }
}

/// The genus-6 table as it is usually printed, with a single generator at
/// `(2, 6)`; its alternating rank sum is `-1`.
pub fn printed_genus_six_table() -> BettiTable {
    BettiTable::from_entries([(0, 0, 1), (1, 2, 1), (1, 4, 2), (2, 6, 1)])
}
