//! Numerical invariants of a trigonal curve `C` of genus `g` with Maroni
//! invariant `m`, embedded by `K_C ⊗ T^{-n}` onto a divisor of class
//! `3H - bR` on the rational normal scroll `P(O(e1) ⊕ O(e2))`.

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScrollError {
    #[error("genus {0} is below 5 (the trigonal bundle is unique only for g >= 5)")]
    GenusTooSmall(i64),
    #[error("twist n = {0} must satisfy n >= 1")]
    TwistTooSmall(i64),
    #[error("Maroni invariant m = {m} outside [{min}, {max}] for genus {g}")]
    MaroniOutOfRange { g: i64, m: i64, min: i64, max: i64 },
    #[error("twist n = {n} exceeds the Maroni invariant m = {m} (need n <= m)")]
    TwistAboveMaroni { n: i64, m: i64 },
    #[error("g = {g} < 3n + 3 = {bound} (need g >= 3n + 3)")]
    GenusBelowBoundary { g: i64, bound: i64 },
    #[error("odd intersection value {0} in the adjunction formula")]
    OddIntersection(i64),
}

/// Admissible Maroni invariants `(m_min, m_max)` for genus `g`.
pub fn maroni_range(g: i64) -> Result<(i64, i64), ScrollError> {
    if g < 5 {
        return Err(ScrollError::GenusTooSmall(g));
    }
    let m_min = 1.max((g - 4 + 2).div_euclid(3));
    let m_max = (g - 2).div_euclid(2);
    Ok((m_min, m_max))
}

/// Balanced choice `floor((g - 2) / 2)`.
pub fn default_maroni(g: i64) -> i64 {
    (g - 2).div_euclid(2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ScrollData {
    pub g: i64,
    pub n: i64,
    pub m: i64,
    pub a_dual: i64,
    pub e1: i64,
    pub e2: i64,
    pub f_rank: i64,
    pub b: i64,
    /// Dimension of the ambient projective space.
    pub ambient_dim: i64,
    pub deg_curve: i64,
    pub scroll_degree: i64,
}

pub fn scroll_data(g: i64, n: i64, m: i64) -> Result<ScrollData, ScrollError> {
    let (min, max) = maroni_range(g)?;
    if n < 1 {
        return Err(ScrollError::TwistTooSmall(n));
    }
    if m < min || m > max {
        return Err(ScrollError::MaroniOutOfRange { g, m, min, max });
    }
    if n > m {
        return Err(ScrollError::TwistAboveMaroni { n, m });
    }
    if g < 3 * n + 3 {
        return Err(ScrollError::GenusBelowBoundary { g, bound: 3 * n + 3 });
    }
    let s = ScrollData {
        g,
        n,
        m,
        a_dual: g - 2 - m,
        e1: g - 2 - m - n,
        e2: m - n,
        f_rank: g - 2 * n - 2,
        b: g - 3 * n - 4,
        ambient_dim: g - 2 * n - 1,
        deg_curve: 2 * g - 3 * n - 2,
        scroll_degree: g - 2 * n - 2,
    };
    debug_assert!(s.e1 >= s.e2 && s.e2 >= 0);
    debug_assert_eq!(s.e1 + s.e2, s.f_rank);
    debug_assert_eq!(s.deg_curve, 3 * s.scroll_degree - s.b);
    debug_assert_eq!(s.ambient_dim + 1, s.e1 + s.e2 + 2);
    Ok(s)
}

impl ScrollData {
    pub fn hyperplane(&self) -> DivisorClass {
        DivisorClass::H
    }

    pub fn curve_class(&self) -> DivisorClass {
        curve_class(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum VeryAmpleness {
    VeryAmple,
    VeryAmpleByBNRemark,
    GloballyGeneratedUndetermined,
    NotVeryAmple,
}

impl VeryAmpleness {
    /// Cases where the embedding is known to exist.
    pub fn is_very_ample(self) -> bool {
        matches!(self, VeryAmpleness::VeryAmple | VeryAmpleness::VeryAmpleByBNRemark)
    }
}

/// Very ampleness of `K_C ⊗ T^{-n}`. For `n = m` the bundle is globally
/// generated and separates points in fibers; it is very ample once
/// `W^{m+1}_{3m+2}(C)` is empty, which holds for `g >= 3m + 3`.
pub fn very_ampleness_class(g: i64, n: i64, m: i64) -> VeryAmpleness {
    use std::cmp::Ordering::*;
    match n.cmp(&m) {
        Less => VeryAmpleness::VeryAmple,
        Equal if g >= 3 * m + 3 => VeryAmpleness::VeryAmpleByBNRemark,
        Equal => VeryAmpleness::GloballyGeneratedUndetermined,
        Greater => VeryAmpleness::NotVeryAmple,
    }
}

/// `h^0(C, T^k)` from `π_* O_C = O ⊕ O(-m-2) ⊕ O(-a-2)`.
pub fn h0_trigonal_power(g: i64, m: i64, k: i64) -> i64 {
    (k + 1).max(0) + (k - m - 1).max(0) + (k - g + m + 1).max(0)
}

/// `h^0(C, K_C ⊗ T^{-n})` for `0 <= n <= m`.
pub fn h0_residual(g: i64, m: i64, n: i64) -> Result<i64, ScrollError> {
    if n > m {
        return Err(ScrollError::TwistAboveMaroni { n, m });
    }
    Ok((g - 2 - m - n + 1) + (m - n + 1))
}

/// `c_h H + c_r R` on the scroll.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct DivisorClass {
    pub c_h: i64,
    pub c_r: i64,
}

impl DivisorClass {
    pub const H: DivisorClass = DivisorClass { c_h: 1, c_r: 0 };
    pub const R: DivisorClass = DivisorClass { c_h: 0, c_r: 1 };

    pub const fn new(c_h: i64, c_r: i64) -> Self {
        DivisorClass { c_h, c_r }
    }

    /// Canonical class `-2H + (e1 + e2 - 2)R`.
    pub fn canonical(s: &ScrollData) -> Self {
        DivisorClass { c_h: -2, c_r: s.e1 + s.e2 - 2 }
    }
}

impl std::ops::Add for DivisorClass {
    type Output = DivisorClass;

    fn add(self, o: DivisorClass) -> Self {
        DivisorClass { c_h: self.c_h + o.c_h, c_r: self.c_r + o.c_r }
    }
}

/// `H^2 = e1 + e2`, `H.R = 1`, `R^2 = 0`.
pub fn intersection_number(c1: DivisorClass, c2: DivisorClass, s: &ScrollData) -> i64 {
    c1.c_h * c2.c_h * (s.e1 + s.e2) + c1.c_h * c2.c_r + c1.c_r * c2.c_h
}

pub fn curve_class(s: &ScrollData) -> DivisorClass {
    DivisorClass { c_h: 3, c_r: -s.b }
}

pub fn adjunction_genus(c: DivisorClass, s: &ScrollData) -> Result<i64, ScrollError> {
    let v = intersection_number(c, c + DivisorClass::canonical(s), s);
    if v % 2 != 0 {
        return Err(ScrollError::OddIntersection(v));
    }
    Ok(1 + v / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn admissible() -> Vec<ScrollData> {
        let mut out = Vec::new();
        for g in 5..=40 {
            let (lo, hi) = maroni_range(g).unwrap();
            for m in lo..=hi {
                for n in 1..=m {
                    if let Ok(s) = scroll_data(g, n, m) {
                        out.push(s);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn maroni_examples() {
        assert_eq!(maroni_range(7), Ok((1, 2)));
        assert_eq!(maroni_range(5), Ok((1, 1)));
        assert_eq!(maroni_range(10), Ok((2, 4)));
        assert_eq!(maroni_range(4), Err(ScrollError::GenusTooSmall(4)));
        // brute force: smallest m with (g - 4) / 3 <= m
        for g in 5..200 {
            let (lo, hi) = maroni_range(g).unwrap();
            let brute = (1..).find(|&m| 3 * m >= g - 4).unwrap();
            assert_eq!(lo, brute);
            assert!(2 * hi <= g - 2 && 2 * (hi + 1) > g - 2);
            assert!(lo <= hi);
        }
    }

    #[test]
    fn scroll_examples() {
        let s = scroll_data(7, 1, 2).unwrap();
        assert_eq!((s.e1, s.e2, s.f_rank, s.b, s.ambient_dim, s.deg_curve), (2, 1, 3, 0, 4, 9));
        let s = scroll_data(10, 2, 2).unwrap();
        assert_eq!((s.e1, s.e2, s.f_rank, s.b, s.ambient_dim, s.deg_curve), (4, 0, 4, 0, 5, 12));
        let s = scroll_data(6, 1, 2).unwrap();
        assert_eq!((s.e1, s.e2, s.f_rank, s.b, s.ambient_dim, s.deg_curve), (1, 1, 2, -1, 3, 7));
        assert_eq!(scroll_data(7, 3, 2), Err(ScrollError::TwistAboveMaroni { n: 3, m: 2 }));
        assert_eq!(scroll_data(6, 2, 2), Err(ScrollError::GenusBelowBoundary { g: 6, bound: 9 }));
        assert!(matches!(scroll_data(7, 1, 3), Err(ScrollError::MaroniOutOfRange { .. })));
        let msg = scroll_data(6, 2, 2).unwrap_err().to_string();
        assert!(msg.contains("g >= 3n + 3"));
    }

    #[test]
    fn very_ampleness_examples() {
        assert_eq!(very_ampleness_class(7, 1, 2), VeryAmpleness::VeryAmple);
        assert_eq!(very_ampleness_class(7, 3, 2), VeryAmpleness::NotVeryAmple);
        assert_eq!(very_ampleness_class(10, 2, 2), VeryAmpleness::VeryAmpleByBNRemark);
        assert_eq!(very_ampleness_class(8, 2, 2), VeryAmpleness::GloballyGeneratedUndetermined);
    }

    #[test]
    fn section_counts() {
        assert_eq!(h0_trigonal_power(7, 2, 2), 3);
        assert_eq!(h0_trigonal_power(7, 2, 4), 6);
        assert_eq!(h0_trigonal_power(9, 3, 0), 1);
        assert_eq!(h0_residual(7, 2, 1), Ok(5));
        assert_eq!(h0_residual(9, 3, 0), Ok(9));
        assert_eq!(h0_residual(10, 2, 2), Ok(6));
        assert!(h0_residual(7, 2, 3).is_err());
        for g in 5..=40 {
            let (lo, hi) = maroni_range(g).unwrap();
            for m in lo..=hi {
                let jump = (0..).find(|&k| h0_trigonal_power(g, m, k) > k + 1).unwrap();
                assert_eq!(jump, m + 2, "g={g} m={m}");
                for n in 0..m {
                    assert_eq!(h0_residual(g, m, n).unwrap() - h0_residual(g, m, n + 1).unwrap(), 2);
                }
            }
        }
    }

    #[test]
    fn intersection_examples() {
        let s = scroll_data(7, 1, 2).unwrap();
        let (h, r) = (DivisorClass::H, DivisorClass::R);
        assert_eq!(intersection_number(h, h, &s), 3);
        assert_eq!(intersection_number(h, r, &s), 1);
        assert_eq!(intersection_number(r, r, &s), 0);
        assert_eq!(curve_class(&s), DivisorClass::new(3, 0));
        assert_eq!(intersection_number(curve_class(&s), h, &s), 9);
        let s8 = scroll_data(8, 1, 2).unwrap();
        assert_eq!(curve_class(&s8), DivisorClass::new(3, -1));
        assert_eq!(intersection_number(curve_class(&s8), h, &s8), 11);
        let s6 = scroll_data(6, 1, 2).unwrap();
        assert_eq!(curve_class(&s6), DivisorClass::new(3, 1));
        assert_eq!(intersection_number(curve_class(&s6), h, &s6), 7);
        assert_eq!(adjunction_genus(curve_class(&s), &s), Ok(7));
        assert_eq!(adjunction_genus(h, &s), Ok(0));
        let s10 = scroll_data(10, 2, 2).unwrap();
        assert_eq!(adjunction_genus(curve_class(&s10), &s10), Ok(10));
    }

    #[test]
    fn curve_class_invariants_everywhere() {
        for s in admissible() {
            let c = curve_class(&s);
            assert_eq!(adjunction_genus(c, &s), Ok(s.g));
            assert_eq!(intersection_number(c, DivisorClass::H, &s), s.deg_curve);
            assert_eq!(intersection_number(c, DivisorClass::R, &s), 3);
            assert_eq!(h0_residual(s.g, s.m, s.n), Ok(s.ambient_dim + 1));
        }
    }

    proptest! {
        #[test]
        fn intersection_is_symmetric_bilinear(a in -9i64..9, b in -9i64..9, c in -9i64..9, d in -9i64..9, e in -9i64..9, f in -9i64..9) {
            let s = scroll_data(11, 2, 3).unwrap();
            let (x, y, z) = (DivisorClass::new(a, b), DivisorClass::new(c, d), DivisorClass::new(e, f));
            prop_assert_eq!(intersection_number(x, y, &s), intersection_number(y, x, &s));
            prop_assert_eq!(
                intersection_number(x + y, z, &s),
                intersection_number(x, z, &s) + intersection_number(y, z, &s)
            );
        }
    }
}
