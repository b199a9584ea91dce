//! Graded Betti tables of trigonal curves embedded by `K_C - nT`.
//!
//! Two independent routes meet here. The symbolic route ([`scrollgeom`],
//! [`betticalc`]) evaluates the scroll invariants and assembles the mapping
//! cone of two Eagon–Northcott complexes into a predicted Betti table. The
//! computational route ([`curvelab`], [`groebner`], [`resolution`],
//! [`normality`]) samples an explicit curve on the scroll over a prime field,
//! writes down its ideal and computes a minimal free resolution and Hilbert
//! function from scratch.

pub mod betticalc;
pub mod curvelab;
pub mod exactalg;
pub mod groebner;
pub mod normality;
pub mod par;
pub mod resolution;
pub mod scrollgeom;
