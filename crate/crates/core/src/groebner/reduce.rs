//! Division by a list of polynomials.

use crate::exactalg::{Coeff, Monomial, PolyRing, Polynomial};

/// Precomputed leading data of a divisor list. The first divisor (in list
/// order) whose leading monomial divides is always the one used.
pub(crate) struct Reducer<'a> {
    ring: &'a PolyRing,
    divisors: &'a [Polynomial],
    lms: Vec<Monomial>,
    masks: Vec<u64>,
    lc_inv: Vec<Coeff>,
}

impl<'a> Reducer<'a> {
    pub(crate) fn new(ring: &'a PolyRing, divisors: &'a [Polynomial]) -> Self {
        let fld = ring.field();
        let mut lms = Vec::with_capacity(divisors.len());
        let mut masks = Vec::with_capacity(divisors.len());
        let mut lc_inv = Vec::with_capacity(divisors.len());
        for g in divisors {
            let (m, c) = g.leading_term().expect("divisors must be nonzero");
            masks.push(m.support_mask());
            lms.push(m.clone());
            lc_inv.push(fld.inv_nonzero(*c));
        }
        Reducer { ring, divisors, lms, masks, lc_inv }
    }

    #[inline]
    pub(crate) fn find_divisor(&self, m: &Monomial) -> Option<usize> {
        let mask = m.support_mask();
        (0..self.lms.len()).find(|&i| self.masks[i] & !mask == 0 && self.lms[i].divides(m))
    }

    /// Full reduction: no term of the result is divisible by a leading monomial.
    pub(crate) fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let fld = self.ring.field();
        let mut p = f.clone();
        let mut rem: Vec<(Monomial, Coeff)> = Vec::new();
        while let Some((lm, lc)) = p.leading_term().cloned() {
            match self.find_divisor(&lm) {
                Some(i) => {
                    let q = self.lms[i].quotient_of(&lm).unwrap();
                    let c = fld.neg(fld.mul(lc, self.lc_inv[i]));
                    p = self.ring.add_scaled(&p, c, &q, &self.divisors[i]);
                }
                None => {
                    rem.push((lm, lc));
                    let mut t = p.into_terms();
                    t.remove(0);
                    p = Polynomial::from_sorted(t);
                }
            }
        }
        Polynomial::from_sorted(rem)
    }

    /// Reduction that also records the quotients: returns `(q, r)` with
    /// `f = sum q_i * divisor_i + r`.
    pub(crate) fn divide(&self, f: &Polynomial) -> (Vec<Polynomial>, Polynomial) {
        let fld = self.ring.field();
        let mut quot: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); self.divisors.len()];
        let mut p = f.clone();
        let mut rem: Vec<(Monomial, Coeff)> = Vec::new();
        while let Some((lm, lc)) = p.leading_term().cloned() {
            match self.find_divisor(&lm) {
                Some(i) => {
                    let q = self.lms[i].quotient_of(&lm).unwrap();
                    let c = fld.mul(lc, self.lc_inv[i]);
                    p = self.ring.add_scaled(&p, fld.neg(c), &q, &self.divisors[i]);
                    quot[i].push((q, c));
                }
                None => {
                    rem.push((lm, lc));
                    let mut t = p.into_terms();
                    t.remove(0);
                    p = Polynomial::from_sorted(t);
                }
            }
        }
        let quot = quot.into_iter().map(|t| self.ring.from_terms(t)).collect();
        (quot, Polynomial::from_sorted(rem))
    }
}

/// Remainder of `f` on division by `divisors` (all nonzero).
pub fn reduce_by(ring: &PolyRing, f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let nonzero: Vec<Polynomial> = divisors.iter().filter(|g| !g.is_zero()).cloned().collect();
    Reducer::new(ring, &nonzero).normal_form(f)
}

/// Quotients and remainder of `f` on division by nonzero `divisors`.
pub fn divide_by(ring: &PolyRing, f: &Polynomial, divisors: &[Polynomial]) -> (Vec<Polynomial>, Polynomial) {
    Reducer::new(ring, divisors).divide(f)
}
