//! Sparse multivariate polynomials over a prime field.

use std::cmp::Ordering;

use super::field::{Coeff, PrimeField};
use super::monomial::{Monomial, MonomialOrder};
use super::AlgebraError;

/// A sparse polynomial: terms sorted strictly descending in the order of the
/// owning [`PolyRing`], no zero coefficients. The zero polynomial has no terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coeff)> {
        self.terms
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn leading_term(&self) -> Option<&(Monomial, Coeff)> {
        self.terms.first()
    }

    #[inline]
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    #[inline]
    pub fn leading_coeff(&self) -> Option<Coeff> {
        self.terms.first().map(|t| t.1)
    }

    /// Wraps an already canonical term list. Callers guarantee the ordering.
    pub(crate) fn from_sorted(terms: Vec<(Monomial, Coeff)>) -> Self {
        Polynomial { terms }
    }

    /// Largest standard total degree among the terms; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }
}

/// A polynomial ring `k[x_0..x_{n-1}]` with variable names, positive integer
/// weights and a monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    field: PrimeField,
    names: Vec<String>,
    weights: Vec<u32>,
    order: MonomialOrder,
}

impl PolyRing {
    /// Standard-graded ring in degrevlex.
    pub fn new<S: AsRef<str>>(field: PrimeField, names: &[S]) -> Self {
        PolyRing {
            field,
            names: names.iter().map(|s| s.as_ref().to_string()).collect(),
            weights: vec![1; names.len()],
            order: MonomialOrder::DegRevLex,
        }
    }

    /// Ring with variables `prefix0 .. prefix{n-1}`.
    pub fn with_indexed_vars(field: PrimeField, prefix: &str, n: usize) -> Self {
        let names: Vec<String> = (0..n).map(|i| format!("{prefix}{i}")).collect();
        Self::new(field, &names)
    }

    pub fn with_order(mut self, order: MonomialOrder) -> Self {
        self.order = order;
        self
    }

    pub fn with_weights(mut self, weights: Vec<u32>) -> Result<Self, AlgebraError> {
        if weights.len() != self.names.len() {
            return Err(AlgebraError::VariableCountMismatch(weights.len(), self.names.len()));
        }
        if weights.contains(&0) {
            return Err(AlgebraError::NonPositiveWeight);
        }
        self.weights = weights;
        Ok(self)
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_standard_graded(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp_with_weights(a, b, &self.weights)
    }

    #[inline]
    pub fn monomial_degree(&self, m: &Monomial) -> u32 {
        m.weighted_degree(&self.weights)
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::from_sorted(vec![(Monomial::var(self.nvars(), i), 1)])
    }

    pub fn constant(&self, c: Coeff) -> Polynomial {
        let c = c % self.field.modulus();
        if c == 0 {
            Polynomial::zero()
        } else {
            Polynomial::from_sorted(vec![(self.one_monomial(), c)])
        }
    }

    pub fn term(&self, m: Monomial, c: Coeff) -> Polynomial {
        let c = c % self.field.modulus();
        if c == 0 {
            Polynomial::zero()
        } else {
            Polynomial::from_sorted(vec![(m, c)])
        }
    }

    /// Builds a canonical polynomial from arbitrary terms (duplicates are
    /// combined, zeros dropped).
    pub fn from_terms(&self, mut terms: Vec<(Monomial, Coeff)>) -> Polynomial {
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            let c = c % self.field.modulus();
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = self.field.add(last.1, c),
                _ => out.push((m, c)),
            }
            if let Some(last) = out.last() {
                if last.1 == 0 {
                    out.pop();
                }
            }
        }
        Polynomial::from_sorted(out)
    }

    /// Re-sorts a polynomial (e.g. one built in a ring with another order).
    pub fn reorder(&self, f: &Polynomial) -> Polynomial {
        let mut terms = f.terms.clone();
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        Polynomial::from_sorted(terms)
    }

    /// `f + c * m * g`, the workhorse of every reduction.
    pub fn add_scaled(&self, f: &Polynomial, c: Coeff, m: &Monomial, g: &Polynomial) -> Polynomial {
        if c == 0 || g.is_zero() {
            return f.clone();
        }
        let fld = &self.field;
        let mut out = Vec::with_capacity(f.len() + g.len());
        let mut gi = g.terms.iter().map(|(gm, gc)| (gm.mul(m), fld.mul(*gc, c))).peekable();
        let mut fi = f.terms.iter().peekable();
        loop {
            match (fi.peek(), gi.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(fi.next().unwrap().clone()),
                (None, Some(_)) => out.push(gi.next().unwrap()),
                (Some(a), Some(b)) => match self.cmp(&a.0, &b.0) {
                    Ordering::Greater => out.push(fi.next().unwrap().clone()),
                    Ordering::Less => out.push(gi.next().unwrap()),
                    Ordering::Equal => {
                        let a = fi.next().unwrap();
                        let b = gi.next().unwrap();
                        let s = fld.add(a.1, b.1);
                        if s != 0 {
                            out.push((b.0, s));
                        }
                    }
                },
            }
        }
        Polynomial::from_sorted(out)
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.add_scaled(f, 1, &self.one_monomial(), g)
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let m1 = self.field.neg(1);
        self.add_scaled(f, m1, &self.one_monomial(), g)
    }

    pub fn neg(&self, f: &Polynomial) -> Polynomial {
        self.scalar_mul(f, self.field.neg(1))
    }

    pub fn scalar_mul(&self, f: &Polynomial, c: Coeff) -> Polynomial {
        let c = c % self.field.modulus();
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial::from_sorted(f.terms.iter().map(|(m, a)| (m.clone(), self.field.mul(*a, c))).collect())
    }

    /// `c * m * f`; multiplication by a monomial preserves the term order.
    pub fn mul_term(&self, f: &Polynomial, c: Coeff, m: &Monomial) -> Polynomial {
        let c = c % self.field.modulus();
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial::from_sorted(f.terms.iter().map(|(fm, a)| (fm.mul(m), self.field.mul(*a, c))).collect())
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        if f.is_zero() || g.is_zero() {
            return Polynomial::zero();
        }
        let (small, big) = if f.len() <= g.len() { (f, g) } else { (g, f) };
        let mut terms = Vec::with_capacity(f.len() * g.len());
        for (m, c) in &small.terms {
            for (n, d) in &big.terms {
                terms.push((m.mul(n), self.field.mul(*c, *d)));
            }
        }
        self.from_terms(terms)
    }

    pub fn pow(&self, f: &Polynomial, e: u32) -> Polynomial {
        let mut r = self.constant(1);
        for _ in 0..e {
            r = self.mul(&r, f);
        }
        r
    }

    /// Weighted degree of the highest-degree term; `None` plays the role of
    /// minus infinity for the zero polynomial.
    pub fn degree(&self, f: &Polynomial) -> Option<u32> {
        f.terms.iter().map(|t| self.monomial_degree(&t.0)).max()
    }

    pub fn is_homogeneous(&self, f: &Polynomial) -> bool {
        let mut it = f.terms.iter().map(|t| self.monomial_degree(&t.0));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn make_monic(&self, f: &Polynomial) -> Polynomial {
        match f.leading_coeff() {
            None | Some(1) => f.clone(),
            Some(c) => self.scalar_mul(f, self.field.inv_nonzero(c)),
        }
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn derivative(&self, f: &Polynomial, i: usize) -> Polynomial {
        let terms = f
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(i) > 0)
            .map(|(m, c)| {
                let e = m.exponent(i);
                let mut m2 = m.clone();
                m2.exponents_mut()[i] -= 1;
                (m2, self.field.mul(*c, e as u32 % self.field.modulus()))
            })
            .collect();
        self.from_terms(terms)
    }

    /// Evaluates `f` at polynomials of `target`: variable `i` becomes `images[i]`.
    pub fn substitute(&self, f: &Polynomial, target: &PolyRing, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.nvars(), "one image per variable");
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![target.constant(1), p.clone()]).collect();
        let mut acc: Vec<(Monomial, Coeff)> = Vec::new();
        for (m, c) in &f.terms {
            let mut prod = target.constant(*c);
            for (i, &e) in m.exponents().iter().enumerate() {
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = target.mul(powers[i].last().unwrap(), &images[i]);
                    powers[i].push(next);
                }
                if e > 0 {
                    prod = target.mul(&prod, &powers[i][e]);
                }
            }
            acc.extend(prod.into_terms());
        }
        target.from_terms(acc)
    }

    /// Maps a polynomial to a ring with the same variables in a new position:
    /// `positions[i]` is the index in `target` of this ring's variable `i`.
    pub fn embed(&self, f: &Polynomial, target: &PolyRing, positions: &[usize]) -> Polynomial {
        let terms = f
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u16; target.nvars()];
                for (i, &x) in m.exponents().iter().enumerate() {
                    e[positions[i]] = x;
                }
                (Monomial::new(&e), *c)
            })
            .collect();
        target.from_terms(terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring(p: u32) -> PolyRing {
        PolyRing::new(PrimeField::new(p).unwrap(), &["x", "y", "z"])
    }

    #[test]
    fn difference_of_squares() {
        let r = ring(32003);
        let x = r.var(0);
        let y = r.var(1);
        let lhs = r.mul(&r.add(&x, &y), &r.sub(&x, &y));
        let rhs = r.sub(&r.mul(&x, &x), &r.mul(&y, &y));
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.len(), 2);
    }

    #[test]
    fn additive_inverse_is_empty() {
        let r = ring(32003);
        let f = r.add(&r.var(0), &r.constant(5));
        assert!(r.add(&f, &r.neg(&f)).is_zero());
        assert_eq!(r.degree(&Polynomial::zero()), None);
    }

    #[test]
    fn freshmans_dream_mod_three() {
        let r = ring(3);
        let f = r.add(&r.var(0), &r.constant(1));
        let cube = r.pow(&f, 3);
        assert_eq!(cube, r.add(&r.pow(&r.var(0), 3), &r.constant(1)));
    }

    #[test]
    fn derivative_and_substitution() {
        let r = ring(32003);
        let x = r.var(0);
        let y = r.var(1);
        let f = r.mul(&r.mul(&x, &x), &y); // x^2 y
        assert_eq!(r.derivative(&f, 0), r.scalar_mul(&r.mul(&x, &y), 2));
        // x -> y, y -> z
        let g = r.substitute(&f, &r, &[y.clone(), r.var(2), r.var(2)]);
        assert_eq!(g, r.mul(&r.mul(&y, &y), &r.var(2)));
    }

    fn arb_poly() -> impl Strategy<Value = Vec<(Vec<u16>, u32)>> {
        proptest::collection::vec((proptest::collection::vec(0u16..3, 3), 0u32..32003), 0..6)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            let r = ring(32003);
            let mk = |v: Vec<(Vec<u16>, u32)>| r.from_terms(v.into_iter().map(|(e, c)| (Monomial::new(&e), c)).collect());
            let (f, g, h) = (mk(a), mk(b), mk(c));
            prop_assert_eq!(r.mul(&f, &g), r.mul(&g, &f));
            prop_assert_eq!(r.mul(&r.mul(&f, &g), &h), r.mul(&f, &r.mul(&g, &h)));
            prop_assert_eq!(r.mul(&f, &r.add(&g, &h)), r.add(&r.mul(&f, &g), &r.mul(&f, &h)));
            for w in r.mul(&f, &g).terms().windows(2) {
                prop_assert_eq!(r.cmp(&w[0].0, &w[1].0), Ordering::Greater);
            }
        }
    }
}
