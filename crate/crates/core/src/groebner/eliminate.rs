//! Elimination of a front block of variables.

use crate::exactalg::{MonomialOrder, PolyRing, Polynomial};

use super::{buchberger, GroebnerError};

/// Gröbner basis of `ideal ∩ k[x_front..]`, computed in `ring` re-ordered by
/// the block-elimination order with `front_vars` leading variables. The
/// generators must be homogeneous for the ring's weights; the result lives in
/// the same ring (front exponents all zero) and is sorted by that order.
pub fn eliminate(ring: &PolyRing, ideal: &[Polynomial], front_vars: usize) -> Result<Vec<Polynomial>, GroebnerError> {
    if front_vars > ring.nvars() {
        return Err(GroebnerError::WrongOrder(front_vars));
    }
    let elim_ring = ring.clone().with_order(MonomialOrder::BlockElimination { front: front_vars });
    let gens: Vec<Polynomial> = ideal.iter().map(|f| elim_ring.reorder(f)).collect();
    let gb = buchberger(&elim_ring, &gens)?;
    Ok(gb
        .into_generators()
        .into_iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.exponents()[..front_vars].iter().all(|&e| e == 0)))
        .collect())
}

/// Drops the (unused) front variables, giving polynomials in `sub`, whose
/// variables are the trailing `sub.nvars()` variables of the source ring.
pub fn project_to_tail(sub: &PolyRing, polys: &[Polynomial]) -> Vec<Polynomial> {
    polys
        .iter()
        .map(|f| {
            let terms = f
                .terms()
                .iter()
                .map(|(m, c)| {
                    let e = m.exponents();
                    (crate::exactalg::Monomial::new(&e[e.len() - sub.nvars()..]), *c)
                })
                .collect();
            sub.from_terms(terms)
        })
        .collect()
}
