//! Cox ring of the scroll and the monomial sections of divisor classes.

use crate::exactalg::{Bigrading, Monomial, PolyRing, Polynomial, PrimeField};
use crate::scrollgeom::{DivisorClass, ScrollData};

pub const S: usize = 0;
pub const T: usize = 1;
pub const X: usize = 2;
pub const Y: usize = 3;

/// `k[s, t, x, y]` with `deg s = deg t = (0, 1)`, `deg x = (1, -e1)`,
/// `deg y = (1, -e2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxRing {
    ring: PolyRing,
    grading: Bigrading,
    e1: i64,
    e2: i64,
}

impl CoxRing {
    pub fn new(s: &ScrollData, field: PrimeField) -> Self {
        let ring = PolyRing::new(field, &["s", "t", "x", "y"]);
        let grading = Bigrading::new(vec![(0, 1), (0, 1), (1, -s.e1 as i32), (1, -s.e2 as i32)]);
        CoxRing { ring, grading, e1: s.e1, e2: s.e2 }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn grading(&self) -> &Bigrading {
        &self.grading
    }

    /// `x^i y^j s^alpha t^beta`.
    pub fn monomial(&self, i: u16, j: u16, alpha: u16, beta: u16) -> Monomial {
        Monomial::new(&[alpha, beta, i, j])
    }

    pub fn bidegree_of(&self, f: &Polynomial) -> Option<(i32, i32)> {
        self.grading.bidegree_of(f)
    }

    pub fn e1(&self) -> i64 {
        self.e1
    }

    pub fn e2(&self) -> i64 {
        self.e2
    }
}

/// Monomials of class `c_h H + c_r R`, ordered by decreasing power of `x`,
/// then increasing power of `s`.
pub fn cox_section_basis(s: &ScrollData, c: DivisorClass) -> Vec<Monomial> {
    let mut out = Vec::new();
    if c.c_h < 0 {
        return out;
    }
    for i in (0..=c.c_h).rev() {
        let j = c.c_h - i;
        let d = c.c_r + i * s.e1 + j * s.e2;
        for alpha in 0..=d {
            out.push(Monomial::new(&[alpha as u16, (d - alpha) as u16, i as u16, j as u16]));
        }
    }
    out
}

/// Coordinates `z0..zN` of `P^N`, tagged with their Cox monomials:
/// first `x s^a t^(e1-a)` for `a = 0..e1`, then `y s^a t^(e2-a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmbientCoordinates {
    ring: PolyRing,
    cox: Vec<Monomial>,
    e1: usize,
    e2: usize,
}

impl AmbientCoordinates {
    pub fn new(s: &ScrollData, field: PrimeField) -> Self {
        let cox = cox_section_basis(s, DivisorClass::H);
        debug_assert_eq!(cox.len() as i64, s.ambient_dim + 1);
        let ring = PolyRing::with_indexed_vars(field, "z", cox.len());
        AmbientCoordinates { ring, cox, e1: s.e1 as usize, e2: s.e2 as usize }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.cox.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cox.is_empty()
    }

    pub fn cox_monomials(&self) -> &[Monomial] {
        &self.cox
    }

    pub fn x_index(&self, alpha: usize) -> usize {
        debug_assert!(alpha <= self.e1);
        alpha
    }

    pub fn y_index(&self, alpha: usize) -> usize {
        debug_assert!(alpha <= self.e2);
        self.e1 + 1 + alpha
    }

    /// Images of `z_i` in the Cox ring.
    pub fn images(&self, cox: &CoxRing) -> Vec<Polynomial> {
        self.cox.iter().map(|m| cox.ring().term(m.clone(), 1)).collect()
    }

    /// `F(z ↦ cox monomial)`.
    pub fn pull_back(&self, f: &Polynomial, cox: &CoxRing) -> Polynomial {
        self.ring.substitute(f, cox.ring(), &self.images(cox))
    }

    /// Rewrites a Cox monomial `x^i y^j s^γ t^δ` with `γ + δ = i e1 + j e2`
    /// as a product of `i + j` coordinates, giving each `x` factor as much of
    /// `s` as it can hold (up to `e1`), then the `y` factors (up to `e2`).
    pub fn factor(&self, m: &Monomial) -> Option<Monomial> {
        let (i, j) = (m.exponent(X) as usize, m.exponent(Y) as usize);
        let (gamma, delta) = (m.exponent(S) as usize, m.exponent(T) as usize);
        if gamma + delta != i * self.e1 + j * self.e2 {
            return None;
        }
        let mut rest = gamma;
        let mut e = vec![0u16; self.len()];
        for _ in 0..i {
            let a = rest.min(self.e1);
            rest -= a;
            e[self.x_index(a)] += 1;
        }
        for _ in 0..j {
            let a = rest.min(self.e2);
            rest -= a;
            e[self.y_index(a)] += 1;
        }
        (rest == 0).then(|| Monomial::new(&e))
    }

    /// Applies [`Self::factor`] term by term.
    pub fn rewrite(&self, f: &Polynomial) -> Option<Polynomial> {
        let terms = f.terms().iter().map(|(m, c)| self.factor(m).map(|z| (z, *c))).collect::<Option<Vec<_>>>()?;
        Some(self.ring.from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scrollgeom::{curve_class, scroll_data};

    #[test]
    fn section_bases() {
        let s = scroll_data(7, 1, 2).unwrap();
        let cox = CoxRing::new(&s, PrimeField::default());
        let h = cox_section_basis(&s, DivisorClass::H);
        let want: Vec<Monomial> = ["x*t^2", "s*x*t", "s^2*x", "y*t", "s*y"]
            .iter()
            .map(|n| cox.ring().parse(n).unwrap().terms()[0].0.clone())
            .collect();
        assert_eq!(h, want);
        let r = cox_section_basis(&s, DivisorClass::R);
        assert_eq!(r.len(), 2);
        assert_eq!(cox_section_basis(&s, curve_class(&s)).len(), 22);
        for m in &h {
            assert_eq!(cox.grading().of_monomial(m), (1, 0));
        }
        assert!(cox_section_basis(&s, DivisorClass::new(0, -1)).is_empty());
        for g in 5..=30 {
            let (lo, hi) = crate::scrollgeom::maroni_range(g).unwrap();
            for m in lo..=hi {
                for n in 1..=m {
                    let Ok(s) = scroll_data(g, n, m) else { continue };
                    assert_eq!(cox_section_basis(&s, DivisorClass::H).len() as i64, s.ambient_dim + 1);
                    let want: i64 = (0..=3).map(|i| (i * s.e1 + (3 - i) * s.e2 - s.b + 1).max(0)).sum();
                    assert_eq!(cox_section_basis(&s, curve_class(&s)).len() as i64, want);
                }
            }
        }
    }

    #[test]
    fn greedy_factorization() {
        let s = scroll_data(7, 1, 2).unwrap();
        let amb = AmbientCoordinates::new(&s, PrimeField::default());
        let cox = CoxRing::new(&s, PrimeField::default());
        // x^2 y s^3 t^2 -> z_{x,2} z_{x,1} z_{y,0}
        let m = cox.monomial(2, 1, 3, 2);
        let z = amb.factor(&m).unwrap();
        assert_eq!(amb.ring().format_monomial(&z), "z1*z2*z3");
        let back = amb.pull_back(&amb.ring().term(z, 1), &cox);
        assert_eq!(back.terms()[0].0, m);
        assert!(amb.factor(&cox.monomial(1, 0, 1, 0)).is_none());
    }
}
