//! Random members of `|3H - bR|` and the smoothness test.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactalg::{Monomial, PolyRing, Polynomial, PrimeField};
use crate::groebner::buchberger;
use crate::scrollgeom::{curve_class, very_ampleness_class, ScrollData};

use super::cox::{cox_section_basis, CoxRing, S, T, X, Y};
use super::{CurveError, CurveModel};

pub const SAMPLE_RETRIES: usize = 32;

/// Draws `f` with independent uniform coefficients on the monomial basis of
/// `3H - bR` until it defines a smooth curve. The very-ampleness boundary
/// (`n = m` with `g < 3m + 3`) and `b = -1` need `allow_boundary`.
pub fn sample_curve(
    s: &ScrollData,
    field: PrimeField,
    seed: u64,
    allow_boundary: bool,
) -> Result<CurveModel, CurveError> {
    let class = very_ampleness_class(s.g, s.n, s.m);
    if !allow_boundary && (!class.is_very_ample() || s.b < 0) {
        return Err(CurveError::NotAdmissible { g: s.g, n: s.n, m: s.m, class });
    }
    let cox = CoxRing::new(s, field);
    let basis = cox_section_basis(s, curve_class(s));
    let p = field.modulus();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SAMPLE_RETRIES {
        let terms: Vec<(Monomial, u32)> = basis.iter().map(|m| (m.clone(), rng.random_range(0..p))).collect();
        let f = cox.ring().from_terms(terms);
        if f.is_zero() {
            continue;
        }
        if is_smooth(&cox, &f) {
            return Ok(CurveModel { scroll: *s, field, seed, f, smooth: true });
        }
    }
    Err(CurveError::RetriesExhausted(SAMPLE_RETRIES))
}

pub fn smoothness_check(c: &CurveModel) -> bool {
    is_smooth(&c.cox(), &c.f)
}

/// Affine coordinates of the charts `{s != 0, x != 0}`, `{s != 0, y != 0}`,
/// `{t != 0, x != 0}`, `{t != 0, y != 0}`, which cover the scroll.
const CHARTS: [[usize; 2]; 4] = [[T, Y], [T, X], [S, Y], [S, X]];

/// True iff `f = ∂f/∂u = ∂f/∂v = 0` has no solution on any chart. Each affine
/// system is homogenized with `h`; it is inconsistent iff the homogenized
/// ideal contains a power of `h`, visible as a pure `h`-power in a degrevlex
/// Gröbner basis with `h` last.
pub(crate) fn is_smooth(cox: &CoxRing, f: &Polynomial) -> bool {
    if f.is_zero() {
        return false;
    }
    let field = *cox.ring().field();
    let chart = PolyRing::new(field, &["u", "v", "h"]);
    CHARTS.iter().all(|keep| {
        let local = chart.from_terms(
            f.terms()
                .iter()
                .map(|(m, c)| (Monomial::new(&[m.exponent(keep[0]), m.exponent(keep[1]), 0]), *c))
                .collect(),
        );
        let system = [local.clone(), chart.derivative(&local, 0), chart.derivative(&local, 1)];
        let homog: Vec<Polynomial> = system.iter().filter(|p| !p.is_zero()).map(|p| homogenize(&chart, p)).collect();
        let gb = buchberger(&chart, &homog).expect("homogenized system");
        gb.leading_monomials().iter().any(|m| m.exponent(0) == 0 && m.exponent(1) == 0)
    })
}

fn homogenize(ring: &PolyRing, p: &Polynomial) -> Polynomial {
    let d = p.total_degree().unwrap_or(0);
    ring.from_terms(
        p.terms()
            .iter()
            .map(|(m, c)| {
                let mut e = m.exponents().to_vec();
                e[2] = (d - m.degree()) as u16;
                (Monomial::new(&e), *c)
            })
            .collect(),
    )
}
