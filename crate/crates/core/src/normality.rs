//! Projective normality via Hilbert functions: the embedding is projectively
//! normal iff `dim (R/I)_m = h^0(L^m)` for every `m`, and by regularity it
//! suffices to check finitely many degrees.

use std::fmt::Write;

use serde::Serialize;

use crate::betticalc::hilbert_polynomial_value;
use crate::groebner::{hilbert_binom, hilbert_function_quotient, GroebnerBasis};
use crate::resolution::BettiTable;
use crate::scrollgeom::ScrollData;

/// `h^0(C, L^m)` for `L = K_C ⊗ T^{-n}` of degree `2g - 3n - 2`.
pub fn expected_hf(g: i64, n: i64, m: i64) -> i64 {
    hilbert_polynomial_value(g, n, m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NormalityRow {
    pub m: u32,
    pub hf_actual: u64,
    pub hf_expected: i64,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalityReport {
    pub rows: Vec<NormalityRow>,
    pub verdict: bool,
    pub m_max: u32,
}

impl NormalityReport {
    pub fn pretty(&self) -> String {
        let mut out = String::from("   m  actual  expected\n");
        for r in &self.rows {
            let _ = writeln!(out, "{:>4}  {:>6}  {:>8}{}", r.m, r.hf_actual, r.hf_expected, if r.matches { "" } else { "  MISMATCH" });
        }
        let _ = writeln!(out, "projectively normal: {}", if self.verdict { "yes" } else { "no" });
        out
    }
}

/// Default check bound: regularity plus two, at least five.
pub fn default_m_max(table: &BettiTable) -> u32 {
    (table.regularity().max(0) as u32 + 2).max(5)
}

pub fn projective_normality_verdict(ideal: &GroebnerBasis, s: &ScrollData, m_max: u32) -> NormalityReport {
    let lt = ideal.leading_ideal();
    let nvars = ideal.ring().nvars();
    let rows: Vec<NormalityRow> = (0..=m_max)
        .map(|m| {
            let hf_actual = hilbert_function_quotient(&lt, nvars, m);
            let hf_expected = expected_hf(s.g, s.n, m as i64);
            NormalityRow { m, hf_actual, hf_expected, matches: hf_actual as i64 == hf_expected }
        })
        .collect();
    let verdict = rows.iter().all(|r| r.matches);
    NormalityReport { rows, verdict, m_max }
}

/// Dimension of the degree-2 part of the ideal.
pub fn quadric_count(ideal: &GroebnerBasis) -> u64 {
    let nvars = ideal.ring().nvars();
    let all = hilbert_binom(nvars as i64 + 1, 2) as u64;
    all - hilbert_function_quotient(&ideal.leading_ideal(), nvars, 2)
}

/// The quadrics in the ideal are exactly the `binom(f_rank, 2)` scroll minors.
pub fn quadric_count_check(ideal: &GroebnerBasis, s: &ScrollData) -> bool {
    quadric_count(ideal) as i128 == hilbert_binom(s.f_rank, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvelab::{curve_ideal_fast, sample_curve, scroll_ideal, AmbientCoordinates};
    use crate::exactalg::PrimeField;
    use crate::groebner::buchberger;
    use crate::scrollgeom::scroll_data;

    #[test]
    fn expected_values() {
        assert_eq!(expected_hf(7, 1, 1), 5);
        assert_eq!(expected_hf(7, 1, 2), 12);
        assert_eq!(expected_hf(9, 2, 0), 1);
        for n in 1..=6 {
            for g in 3 * n + 3..=40 {
                assert_eq!(expected_hf(g, n, 1), g - 2 * n);
                for m in 2..10 {
                    assert_eq!(expected_hf(g, n, m + 1) - expected_hf(g, n, m), 2 * g - 2 - 3 * n);
                }
            }
        }
    }

    fn ideals(g: i64, n: i64, m: i64) -> (ScrollData, GroebnerBasis, GroebnerBasis) {
        let s = scroll_data(g, n, m).unwrap();
        let c = sample_curve(&s, PrimeField::default(), 1, true).unwrap();
        let amb = AmbientCoordinates::new(&s, c.field);
        let curve = buchberger(amb.ring(), &curve_ideal_fast(&c).unwrap()).unwrap();
        let scroll = buchberger(amb.ring(), &scroll_ideal(&amb, &s)).unwrap();
        (s, curve, scroll)
    }

    #[test]
    fn genus_seven() {
        let (s, curve, scroll) = ideals(7, 1, 2);
        let r = projective_normality_verdict(&curve, &s, 5);
        assert!(r.verdict);
        let triples: Vec<_> = r.rows.iter().map(|r| (r.m, r.hf_actual, r.hf_expected)).take(4).collect();
        assert_eq!(triples, vec![(0, 1, 1), (1, 5, 5), (2, 12, 12), (3, 21, 21)]);
        assert!(quadric_count_check(&curve, &s));
        assert_eq!(quadric_count(&curve), 3);

        let r = projective_normality_verdict(&scroll, &s, 5);
        assert!(!r.verdict);
        assert!(r.rows[..3].iter().all(|r| r.matches));
        assert!(!r.rows[3].matches && r.rows[3].hf_actual as i64 > r.rows[3].hf_expected);

        let r = projective_normality_verdict(&curve, &s, 0);
        assert!(r.verdict && r.rows.len() == 1);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, r#"{"rows":[{"m":0,"hf_actual":1,"hf_expected":1,"match":true}],"verdict":true,"m_max":0}"#);
    }

    #[test]
    fn quadric_counts() {
        let (s, curve, _) = ideals(8, 1, 2);
        assert_eq!(quadric_count(&curve), 6);
        assert!(quadric_count_check(&curve, &s));
        let (s, curve, _) = ideals(6, 1, 2);
        assert_eq!(quadric_count(&curve), 1);
        assert!(quadric_count_check(&curve, &s));
    }

    #[test]
    fn default_bound() {
        let t = BettiTable::from_entries([(0, 0, 1), (1, 2, 3), (1, 3, 1), (2, 3, 2), (2, 5, 3), (3, 6, 2)]);
        assert_eq!(default_m_max(&t), 5);
        assert_eq!(default_m_max(&BettiTable::from_entries([(0, 0, 1), (1, 6, 1)])), 7);
    }
}
