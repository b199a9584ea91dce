//! Generators of the curve ideal in `P^N`: the scroll minors, the rolled
//! translates of `f`, and the elimination oracle.

use crate::exactalg::{Monomial, PolyRing, Polynomial};
use crate::groebner::{buchberger, eliminate, project_to_tail, GroebnerBasis};
use crate::scrollgeom::{DivisorClass, ScrollData};

use super::cox::{cox_section_basis, AmbientCoordinates, CoxRing};
use super::{CurveError, CurveModel};

/// Largest ambient dimension accepted by [`curve_ideal_elimination`].
pub const ELIMINATION_MAX_AMBIENT_DIM: i64 = 7;

/// The `2×2` minors of
/// `Φ = [z_{x,0} .. z_{x,e1-1} z_{y,0} .. z_{y,e2-1}; z_{x,1} .. z_{x,e1} z_{y,1} .. z_{y,e2}]`.
pub fn scroll_ideal(amb: &AmbientCoordinates, s: &ScrollData) -> Vec<Polynomial> {
    let ring = amb.ring();
    let mut cols: Vec<(usize, usize)> = (0..s.e1 as usize).map(|a| (amb.x_index(a), amb.x_index(a + 1))).collect();
    cols.extend((0..s.e2 as usize).map(|a| (amb.y_index(a), amb.y_index(a + 1))));
    let mut out = Vec::with_capacity(cols.len() * cols.len().saturating_sub(1) / 2);
    for (k, &(a, b)) in cols.iter().enumerate() {
        for &(c, d) in &cols[k + 1..] {
            out.push(ring.sub(&ring.mul(&ring.var(a), &ring.var(d)), &ring.mul(&ring.var(c), &ring.var(b))));
        }
    }
    out
}

/// `f * s^l * t^(b-l)` for `l = 0..=b`, rewritten as cubics in the ambient
/// coordinates. Empty when `b = -1`.
pub fn rolling_factor_cubics(c: &CurveModel) -> Vec<Polynomial> {
    let s = &c.scroll;
    let cox = c.cox();
    let amb = AmbientCoordinates::new(s, c.field);
    (0..=s.b).map(|l| roll(&cox, &amb, &c.f, &Monomial::new(&[l as u16, (s.b - l) as u16, 0, 0]))).collect()
}

/// For `b = -1`: `f * u` for `u` running over the monomial sections of
/// `H - R`, rewritten as quartics. Empty otherwise.
pub fn rolling_factor_quartics(c: &CurveModel) -> Vec<Polynomial> {
    let s = &c.scroll;
    if s.b != -1 {
        return Vec::new();
    }
    let cox = c.cox();
    let amb = AmbientCoordinates::new(s, c.field);
    cox_section_basis(s, DivisorClass::new(1, -1)).iter().map(|u| roll(&cox, &amb, &c.f, u)).collect()
}

fn roll(cox: &CoxRing, amb: &AmbientCoordinates, f: &Polynomial, u: &Monomial) -> Polynomial {
    let shifted = cox.ring().mul_term(f, 1, u);
    amb.rewrite(&shifted).expect("every term of f*u has class (k, 0)")
}

/// Scroll minors followed by the rolled cubics (or quartics when `b = -1`).
/// Every generator is checked to vanish on the curve.
pub fn curve_ideal_fast(c: &CurveModel) -> Result<Vec<Polynomial>, CurveError> {
    let amb = AmbientCoordinates::new(&c.scroll, c.field);
    let mut gens = scroll_ideal(&amb, &c.scroll);
    gens.extend(rolling_factor_cubics(c));
    gens.extend(rolling_factor_quartics(c));
    let cox = c.cox();
    for (i, g) in gens.iter().enumerate() {
        if !vanishes_on_curve(&amb, &cox, &c.f, g) {
            return Err(CurveError::SubstitutionFailed(i));
        }
    }
    Ok(gens)
}

/// `g(z ↦ cox monomial)` lies in `(f)`.
pub fn vanishes_on_curve(amb: &AmbientCoordinates, cox: &CoxRing, f: &Polynomial, g: &Polynomial) -> bool {
    let pulled = amb.pull_back(g, cox);
    crate::groebner::reduce_by(cox.ring(), &pulled, std::slice::from_ref(f)).is_zero()
}

/// Kernel of `k[z] -> k[s,t,x,y]/(f)`, `z_i ↦ cox monomial`, by eliminating
/// `s, t, x, y` from `(z_i - m_i) + (f)`. The weights `s, t -> 1`,
/// `x -> A - e1`, `y -> A - e2`, `z -> A` with `A = e1 + 1` make every
/// generator homogeneous.
pub fn curve_ideal_elimination(c: &CurveModel) -> Result<GroebnerBasis, CurveError> {
    let s = &c.scroll;
    if s.ambient_dim > ELIMINATION_MAX_AMBIENT_DIM {
        return Err(CurveError::EliminationTooLarge { got: s.ambient_dim, max: ELIMINATION_MAX_AMBIENT_DIM });
    }
    let amb = AmbientCoordinates::new(s, c.field);
    let nz = amb.len();
    let a = (s.e1 + 1) as u32;
    let mut names: Vec<String> = ["s", "t", "x", "y"].iter().map(|v| v.to_string()).collect();
    names.extend(amb.ring().names().iter().cloned());
    let mut weights = vec![1, 1, a - s.e1 as u32, a - s.e2 as u32];
    weights.extend(std::iter::repeat_n(a, nz));
    let big = PolyRing::new(c.field, &names).with_weights(weights)?;
    let cox_pos = [0, 1, 2, 3];
    let z_pos: Vec<usize> = (4..4 + nz).collect();
    let cox = c.cox();
    let mut gens = vec![cox.ring().embed(&c.f, &big, &cox_pos)];
    for (i, m) in amb.cox_monomials().iter().enumerate() {
        let image = cox.ring().embed(&cox.ring().term(m.clone(), 1), &big, &cox_pos);
        let z = amb.ring().embed(&amb.ring().var(i), &big, &z_pos);
        gens.push(big.sub(&z, &image));
    }
    let eliminated = eliminate(&big, &gens, 4)?;
    let in_z = project_to_tail(amb.ring(), &eliminated);
    Ok(buchberger(amb.ring(), &in_z)?)
}
