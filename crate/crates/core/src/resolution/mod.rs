//! Free resolutions of homogeneous ideals.
//!
//! Each level of the resolution is computed with Schreyer's algorithm: the
//! syzygies of a Gröbner basis, reduced with respect to it, form a Gröbner
//! basis of the syzygy module in the induced order, so no further Buchberger
//! run is needed. The resulting resolution is usually not minimal and is
//! pruned afterwards.

mod betti;
mod complex;
mod minimal;

use std::collections::BTreeMap;

pub use betti::BettiTable;
pub use complex::{verify_complex, ComplexReport, FreeComplex, PolyMatrix};
pub use minimal::{minimalize, minimalize_with_seed};

use crate::exactalg::{MonomialOrder, Polynomial};
use crate::groebner::module::{polys_to_svecs, schreyer_syzygies, sort_for_next_level, ModuleElement, SchreyerOrder};
use crate::groebner::{GroebnerBasis, GroebnerError};
use crate::par::Exec;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ResolutionError {
    #[error("resolution did not terminate within {0} steps")]
    LengthExceeded(usize),
    #[error("free resolutions need a standard graded ring in degrevlex")]
    NeedsStandardGrading,
    #[error("complex is not minimal")]
    NotMinimal,
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

/// Free resolution of `R / I` where `basis` is a Gröbner basis of `I`.
/// `F_0 = R`; the complex has at most `max_length + 1` modules.
pub fn free_resolution(basis: &GroebnerBasis, max_length: usize) -> Result<FreeComplex, ResolutionError> {
    free_resolution_with(basis, max_length, Exec::default())
}

pub fn free_resolution_with(
    basis: &GroebnerBasis,
    max_length: usize,
    exec: Exec,
) -> Result<FreeComplex, ResolutionError> {
    let ring = basis.ring();
    if !ring.is_standard_graded() || ring.order() != MonomialOrder::DegRevLex {
        return Err(ResolutionError::NeedsStandardGrading);
    }
    let field = ring.field();
    let nvars = ring.nvars();
    let mut modules: Vec<Vec<i32>> = vec![vec![0]];
    let mut differentials: Vec<PolyMatrix> = Vec::new();
    let mut order = SchreyerOrder::base(nvars);
    let mut level = polys_to_svecs(basis.generators());
    level.retain(|v| !v.is_empty());
    let mut step = 0;
    while !level.is_empty() {
        step += 1;
        if step > max_length {
            return Err(ResolutionError::LengthExceeded(max_length));
        }
        sort_for_next_level(&mut level, (step - 1 < nvars).then_some(step - 1));
        let cols: Vec<BTreeMap<usize, Polynomial>> =
            level.iter().map(|v| ModuleElement::from_svec(ring, v).components).collect();
        let (next_order, syz) = schreyer_syzygies(field, &order, &level, exec)?;
        differentials.push(PolyMatrix::from_columns(order.rank(), cols));
        modules.push(next_order.degrees().to_vec());
        order = next_order;
        level = syz;
        level.retain(|v| !v.is_empty());
    }
    Ok(FreeComplex::new(ring.clone(), modules, differentials))
}

/// Graded Betti numbers of a minimal complex.
pub fn betti_table(c: &FreeComplex) -> Result<BettiTable, ResolutionError> {
    if !c.is_minimal() {
        return Err(ResolutionError::NotMinimal);
    }
    Ok(BettiTable::from_entries(
        c.modules().iter().enumerate().flat_map(|(i, m)| m.iter().map(move |&d| (i, d, 1))),
    ))
}

/// Minimal free resolution and its Betti table in one call.
pub fn minimal_betti_table(basis: &GroebnerBasis, exec: Exec) -> Result<BettiTable, ResolutionError> {
    let n = basis.ring().nvars();
    let c = free_resolution_with(basis, n + 1, exec)?;
    betti_table(&minimalize(&c))
}

#[cfg(test)]
mod tests;
