//! Graded free complexes over a polynomial ring.

use std::collections::BTreeMap;

use crate::exactalg::{PolyRing, Polynomial};

/// Sparse matrix of polynomials stored by columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    nrows: usize,
    cols: Vec<BTreeMap<usize, Polynomial>>,
}

impl PolyMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        PolyMatrix { nrows, cols: vec![BTreeMap::new(); ncols] }
    }

    pub fn from_columns(nrows: usize, cols: Vec<BTreeMap<usize, Polynomial>>) -> Self {
        debug_assert!(cols.iter().all(|c| c.keys().all(|&r| r < nrows)));
        let cols = cols.into_iter().map(|c| c.into_iter().filter(|(_, p)| !p.is_zero()).collect()).collect();
        PolyMatrix { nrows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &BTreeMap<usize, Polynomial> {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[BTreeMap<usize, Polynomial>] {
        &self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&Polynomial> {
        self.cols[j].get(&i)
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        if p.is_zero() {
            self.cols[j].remove(&i);
        } else {
            self.cols[j].insert(i, p);
        }
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    /// `self * other`.
    pub fn mul(&self, ring: &PolyRing, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.ncols(), other.nrows);
        let cols = other
            .cols
            .iter()
            .map(|col| {
                let mut out: BTreeMap<usize, Polynomial> = BTreeMap::new();
                for (&k, b) in col {
                    for (&i, a) in &self.cols[k] {
                        let e = out.entry(i).or_insert_with(Polynomial::zero);
                        *e = ring.add(e, &ring.mul(a, b));
                    }
                }
                out.retain(|_, p| !p.is_zero());
                out
            })
            .collect();
        PolyMatrix { nrows: self.nrows, cols }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }
}

/// `0 <- F_0 <- F_1 <- ... <- F_L`, each `F_i = sum_j R(-degrees[i][j])`,
/// with `differentials[i - 1]` the matrix of `F_i -> F_{i-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeComplex {
    ring: PolyRing,
    modules: Vec<Vec<i32>>,
    differentials: Vec<PolyMatrix>,
    minimal: bool,
}

impl FreeComplex {
    /// Panics when the matrix shapes do not match the module ranks.
    pub fn new(ring: PolyRing, modules: Vec<Vec<i32>>, differentials: Vec<PolyMatrix>) -> Self {
        assert_eq!(modules.len(), differentials.len() + 1, "one differential per adjacent pair");
        for (k, d) in differentials.iter().enumerate() {
            assert_eq!(d.nrows(), modules[k].len(), "rows of d_{}", k + 1);
            assert_eq!(d.ncols(), modules[k + 1].len(), "columns of d_{}", k + 1);
        }
        let mut c = FreeComplex { ring, modules, differentials, minimal: false };
        c.minimal = c.has_no_unit_entries();
        c
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    /// Number of modules, `L + 1`.
    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn modules(&self) -> &[Vec<i32>] {
        &self.modules
    }

    pub fn rank(&self, i: usize) -> usize {
        self.modules.get(i).map_or(0, |m| m.len())
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(|m| m.len()).collect()
    }

    /// Matrix of `F_i -> F_{i-1}`, `i >= 1`.
    pub fn differential(&self, i: usize) -> &PolyMatrix {
        &self.differentials[i - 1]
    }

    pub fn differentials(&self) -> &[PolyMatrix] {
        &self.differentials
    }

    pub fn differential_mut(&mut self, i: usize) -> &mut PolyMatrix {
        &mut self.differentials[i - 1]
    }

    /// True when no differential has a nonzero constant entry.
    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    fn has_no_unit_entries(&self) -> bool {
        self.differentials
            .iter()
            .all(|d| d.cols.iter().all(|c| c.values().all(|p| p.total_degree().is_none_or(|deg| deg > 0))))
    }

    pub(crate) fn recompute_minimal(&mut self) {
        self.minimal = self.has_no_unit_entries();
    }
}

/// Outcome of [`verify_complex`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct ComplexReport {
    pub d2_zero: bool,
    pub graded: bool,
    pub rank_alternating_sum: i64,
}

/// Checks `d_{i-1} d_i = 0` for every `i` and that every entry of `d_i` in
/// row `r`, column `c` is homogeneous of degree `deg F_i[c] - deg F_{i-1}[r]`.
pub fn verify_complex(c: &FreeComplex) -> ComplexReport {
    let ring = c.ring();
    let d2_zero = c.differentials.windows(2).all(|w| w[0].mul(ring, &w[1]).is_zero());
    let graded = c.differentials.iter().enumerate().all(|(k, d)| {
        d.cols.iter().enumerate().all(|(j, col)| {
            col.iter().all(|(&i, p)| {
                let want = c.modules[k + 1][j] - c.modules[k][i];
                want >= 0 && ring.is_homogeneous(p) && ring.degree(p) == Some(want as u32)
            })
        })
    });
    let rank_alternating_sum =
        c.modules.iter().enumerate().map(|(i, m)| if i % 2 == 0 { m.len() as i64 } else { -(m.len() as i64) }).sum();
    ComplexReport { d2_zero, graded, rank_alternating_sum }
}
