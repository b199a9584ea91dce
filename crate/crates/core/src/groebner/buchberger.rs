//! Buchberger's algorithm for homogeneous ideals.
//!
//! Pairs are processed degree by degree (normal selection). New pairs are
//! filtered with the Gebauer–Möller installation of the coprime and chain
//! criteria. All S-polynomials of one degree are reduced against the current
//! basis as a batch (in parallel when enabled) and then inserted one by one
//! after a final sequential re-reduction, so the output does not depend on
//! scheduling.

use crate::exactalg::{Monomial, PolyRing, Polynomial};
use crate::par::{self, Exec};

use super::reduce::Reducer;
use super::{GroebnerBasis, GroebnerError};

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: u32,
}

struct State<'a> {
    ring: &'a PolyRing,
    basis: Vec<Polynomial>,
    lms: Vec<Monomial>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl<'a> State<'a> {
    fn s_poly(&self, p: &Pair) -> Polynomial {
        let fld = self.ring.field();
        let (f, g) = (&self.basis[p.i], &self.basis[p.j]);
        // both monic
        let mf = self.lms[p.i].quotient_of(&p.lcm).unwrap();
        let mg = self.lms[p.j].quotient_of(&p.lcm).unwrap();
        let a = self.ring.mul_term(f, 1, &mf);
        self.ring.add_scaled(&a, fld.neg(1), &mg, g)
    }

    /// Gebauer–Möller update for the freshly appended element `h`.
    fn install(&mut self, h_poly: Polynomial) {
        let h = self.basis.len();
        let lh = h_poly.leading_monomial().unwrap().clone();
        self.basis.push(h_poly);
        self.lms.push(lh.clone());
        self.active.push(true);

        let cands: Vec<(usize, Monomial)> = (0..h)
            .filter(|&g| self.active[g])
            .map(|g| (g, lh.lcm(&self.lms[g])))
            .collect();
        let mut kept: Vec<bool> = vec![true; cands.len()];
        // chain criterion among the new pairs
        for a in 0..cands.len() {
            if lh.is_coprime(&self.lms[cands[a].0]) {
                continue;
            }
            for b in 0..cands.len() {
                if a == b || !kept[b] {
                    continue;
                }
                let (la, lb) = (&cands[a].1, &cands[b].1);
                if lb.divides(la) && (lb != la || b < a) {
                    kept[a] = false;
                    break;
                }
            }
        }
        let new_pairs: Vec<Pair> = cands
            .into_iter()
            .zip(kept)
            .filter(|((g, _), k)| *k && !lh.is_coprime(&self.lms[*g]))
            .map(|((g, lcm), _)| Pair { i: g, j: h, degree: self.ring.monomial_degree(&lcm), lcm })
            .collect();

        let lms = &self.lms;
        self.pairs.retain(|p| {
            !(lh.divides(&p.lcm) && lh.lcm(&lms[p.i]) != p.lcm && lh.lcm(&lms[p.j]) != p.lcm)
        });
        self.pairs.extend(new_pairs);

        for g in 0..h {
            if self.active[g] && lh.divides(&self.lms[g]) {
                self.active[g] = false;
            }
        }
    }
}

pub(super) fn run(ring: &PolyRing, gens: &[Polynomial], exec: Exec) -> Result<GroebnerBasis, GroebnerError> {
    for (k, g) in gens.iter().enumerate() {
        if !ring.is_homogeneous(g) {
            return Err(GroebnerError::NotHomogeneous(k));
        }
    }
    let mut pending: Vec<(u32, Polynomial)> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| (ring.degree(g).unwrap(), ring.reorder(g)))
        .collect();
    pending.sort_by_key(|p| p.0);
    let mut st = State { ring, basis: Vec::new(), lms: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    let mut next_gen = 0;

    loop {
        let pair_deg = st.pairs.iter().map(|p| p.degree).min();
        let gen_deg = pending.get(next_gen).map(|p| p.0);
        let d = match (pair_deg, gen_deg) {
            (None, None) => break,
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => a.min(b),
        };
        let (mut batch, rest): (Vec<Pair>, Vec<Pair>) = st.pairs.drain(..).partition(|p| p.degree == d);
        st.pairs = rest;
        batch.sort_by_key(|a| (a.j, a.i));

        let mut cands: Vec<Polynomial> = batch.iter().map(|p| st.s_poly(p)).collect();
        while next_gen < pending.len() && pending[next_gen].0 == d {
            cands.push(pending[next_gen].1.clone());
            next_gen += 1;
        }
        let reduced = {
            let active: Vec<Polynomial> =
                (0..st.basis.len()).filter(|&i| st.active[i]).map(|i| st.basis[i].clone()).collect();
            let red = Reducer::new(ring, &active);
            par::map(exec, &cands, |f| red.normal_form(f))
        };
        let batch_start = st.basis.len();
        for f in reduced {
            if f.is_zero() {
                continue;
            }
            let f = if st.basis.len() > batch_start {
                let fresh: Vec<Polynomial> = st.basis[batch_start..].to_vec();
                Reducer::new(ring, &fresh).normal_form(&f)
            } else {
                f
            };
            if f.is_zero() {
                continue;
            }
            st.install(ring.make_monic(&f));
        }
    }

    Ok(GroebnerBasis::from_unreduced(ring, st.basis.into_iter().zip(st.active).filter(|(_, a)| *a).map(|(g, _)| g).collect()))
}

/// Turns any Gröbner basis into the reduced one, sorted ascending by leading monomial.
pub(super) fn reduce_basis(ring: &PolyRing, mut gens: Vec<Polynomial>) -> Vec<Polynomial> {
    gens.retain(|g| !g.is_zero());
    gens.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    gens.dedup_by(|a, b| a.leading_monomial() == b.leading_monomial());
    let minimal: Vec<Polynomial> = gens
        .iter()
        .enumerate()
        .filter(|(i, g)| {
            let lm = g.leading_monomial().unwrap();
            !gens.iter().enumerate().any(|(j, h)| j != *i && h.leading_monomial().unwrap().divides(lm))
        })
        .map(|(_, g)| g.clone())
        .collect();
    let mut out = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        let others: Vec<Polynomial> = minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, h)| h.clone()).collect();
        let red = Reducer::new(ring, &others);
        let (lm, lc) = g.leading_term().unwrap().clone();
        let tail_nf = red.normal_form(&Polynomial::from_sorted(g.terms()[1..].to_vec()));
        let mut terms = vec![(lm, lc)];
        terms.extend(tail_nf.into_terms());
        out.push(ring.make_monic(&Polynomial::from_sorted(terms)));
    }
    out.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    out
}
