//! Gröbner bases of homogeneous ideals, Schreyer syzygies, elimination and
//! Hilbert functions of monomial quotients.

mod buchberger;
mod eliminate;
mod hilbert;
pub mod module;
mod reduce;

pub use eliminate::{eliminate, project_to_tail};
pub use hilbert::{hilbert_binom, hilbert_function_quotient, hilbert_numerator, MonomialIdeal};
pub use module::{syzygies, ModuleElement};
pub use reduce::{divide_by, reduce_by};

use thiserror::Error;

use crate::exactalg::{Monomial, PolyRing, Polynomial};
use crate::par::Exec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("generator {0} is not homogeneous for the ring grading")]
    NotHomogeneous(usize),
    #[error("elimination needs a block order with at least {0} front variables")]
    WrongOrder(usize),
    #[error("syzygy computation needs a standard-graded degrevlex ring")]
    NeedsDegRevLex,
    #[error("internal: S-vector did not reduce to zero (input is not a Gröbner basis)")]
    NotAGroebnerBasis,
}

/// A Gröbner basis together with the ring (and hence order) it lives in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: PolyRing,
    generators: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    pub(crate) fn from_unreduced(ring: &PolyRing, gens: Vec<Polynomial>) -> Self {
        let generators = buchberger::reduce_basis(ring, gens);
        GroebnerBasis { ring: ring.clone(), generators, reduced: true }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn into_generators(self) -> Vec<Polynomial> {
        self.generators
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Is the ideal the whole ring?
    pub fn is_unit_ideal(&self) -> bool {
        self.generators.iter().any(|g| g.leading_monomial().is_some_and(|m| m.is_one()))
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators.iter().map(|g| g.leading_monomial().unwrap().clone()).collect()
    }

    pub fn leading_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.leading_monomials())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        reduce::Reducer::new(&self.ring, &self.generators).normal_form(&self.ring.reorder(f))
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Checks the defining property directly: every S-polynomial reduces to zero.
    pub fn check_s_pairs(&self) -> bool {
        let r = &self.ring;
        let fld = r.field();
        let red = reduce::Reducer::new(r, &self.generators);
        for i in 0..self.generators.len() {
            for j in i + 1..self.generators.len() {
                let (f, g) = (&self.generators[i], &self.generators[j]);
                let (lf, cf) = f.leading_term().unwrap();
                let (lg, cg) = g.leading_term().unwrap();
                let l = lf.lcm(lg);
                let a = r.mul_term(f, fld.inv_nonzero(*cf), &lf.quotient_of(&l).unwrap());
                let b = r.mul_term(g, fld.inv_nonzero(*cg), &lg.quotient_of(&l).unwrap());
                if !red.normal_form(&r.sub(&a, &b)).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Reduced Gröbner basis of the ideal generated by homogeneous `gens`.
pub fn buchberger(ring: &PolyRing, gens: &[Polynomial]) -> Result<GroebnerBasis, GroebnerError> {
    buchberger::run(ring, gens, Exec::default())
}

pub fn buchberger_with(ring: &PolyRing, gens: &[Polynomial], exec: Exec) -> Result<GroebnerBasis, GroebnerError> {
    buchberger::run(ring, gens, exec)
}

/// Remainder of `f` modulo a Gröbner basis.
pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis) -> Polynomial {
    basis.normal_form(f)
}
