//! Plain-text model files.
//!
//! ```text
//! # trigonal curve model
//! g: 7
//! n: 1
//! m: 2
//! p: 32003
//! seed: 1
//! smooth: true
//! cox: s t x y
//! f: 12*s^6*x^3 + ...
//! coordinates:
//! z0 = t^2*x
//! ...
//! generators:
//! z0*z2 + 32002*z1^2
//! ...
//! ```

use std::collections::BTreeMap;

use crate::exactalg::{AlgebraError, ParseError, Polynomial, PrimeField};
use crate::scrollgeom::{scroll_data, ScrollError};

use super::cox::{AmbientCoordinates, CoxRing};
use super::{curve_ideal_fast, CurveError, CurveModel};

#[derive(Debug, thiserror::Error)]
pub enum ModelFileError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing field `{0}`")]
    Missing(&'static str),
    #[error("line {line}: {source}")]
    Polynomial { line: usize, source: ParseError },
    #[error(transparent)]
    Scroll(#[from] ScrollError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("f has bidegree {found:?}, expected {expected:?}")]
    WrongClass { found: Option<(i32, i32)>, expected: (i32, i32) },
    #[error("coordinate z{0} does not match the scroll")]
    CoordinateMismatch(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelFile {
    pub model: CurveModel,
    pub generators: Vec<Polynomial>,
}

impl ModelFile {
    /// Model plus its fast-path ideal.
    pub fn build(model: CurveModel) -> Result<Self, CurveError> {
        let generators = curve_ideal_fast(&model)?;
        Ok(ModelFile { model, generators })
    }

    pub fn coordinates(&self) -> AmbientCoordinates {
        AmbientCoordinates::new(&self.model.scroll, self.model.field)
    }

    pub fn to_text(&self) -> String {
        let c = &self.model;
        let s = &c.scroll;
        let cox = c.cox();
        let amb = self.coordinates();
        let mut out = String::from("# trigonal curve model\n");
        for (k, v) in [("g", s.g), ("n", s.n), ("m", s.m)] {
            out.push_str(&format!("{k}: {v}\n"));
        }
        out.push_str(&format!("p: {}\nseed: {}\nsmooth: {}\n", c.field.modulus(), c.seed, c.smooth));
        out.push_str("cox: s t x y\n");
        out.push_str(&format!("f: {}\n", cox.ring().format(&c.f)));
        out.push_str("coordinates:\n");
        for (i, m) in amb.cox_monomials().iter().enumerate() {
            out.push_str(&format!("{} = {}\n", amb.ring().names()[i], cox.ring().format_monomial(m)));
        }
        out.push_str("generators:\n");
        for g in &self.generators {
            out.push_str(&amb.ring().format(g));
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, ModelFileError> {
        let mut fields: BTreeMap<&str, (usize, &str)> = BTreeMap::new();
        let mut coords: Vec<(usize, &str)> = Vec::new();
        let mut gens: Vec<(usize, &str)> = Vec::new();
        let mut section = "";
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match line {
                "coordinates:" | "generators:" => {
                    section = line;
                    continue;
                }
                _ => {}
            }
            match section {
                "coordinates:" => coords.push((line_no, line)),
                "generators:" => gens.push((line_no, line)),
                _ => {
                    let Some((k, v)) = line.split_once(':') else {
                        return Err(ModelFileError::Syntax { line: line_no, msg: format!("expected `key: value`, got `{line}`") });
                    };
                    fields.insert(k.trim(), (line_no, v.trim()));
                }
            }
        }
        let get = |k: &'static str| fields.get(k).copied().ok_or(ModelFileError::Missing(k));
        let int = |k: &'static str| -> Result<i64, ModelFileError> {
            let (line, v) = get(k)?;
            v.parse().map_err(|_| ModelFileError::Syntax { line, msg: format!("`{k}` must be an integer") })
        };
        let (g, n, m) = (int("g")?, int("n")?, int("m")?);
        let p = int("p")?;
        let (seed_line, seed) = get("seed")?;
        let seed: u64 = seed.parse().map_err(|_| ModelFileError::Syntax { line: seed_line, msg: "bad seed".into() })?;
        let (smooth_line, smooth) = get("smooth")?;
        let smooth = match smooth {
            "true" => true,
            "false" => false,
            _ => return Err(ModelFileError::Syntax { line: smooth_line, msg: "`smooth` must be true or false".into() }),
        };
        let (cox_line, cox_vars) = get("cox")?;
        if cox_vars.split_whitespace().collect::<Vec<_>>() != ["s", "t", "x", "y"] {
            return Err(ModelFileError::Syntax { line: cox_line, msg: "Cox variables must be `s t x y`".into() });
        }
        let s = scroll_data(g, n, m)?;
        let p = u32::try_from(p).map_err(|_| AlgebraError::NotPrime(0))?;
        let field = PrimeField::new(p)?;
        let cox = CoxRing::new(&s, field);
        let (f_line, f_text) = get("f")?;
        let f = cox.ring().parse(f_text).map_err(|source| ModelFileError::Polynomial { line: f_line, source })?;
        let expected = (3, -s.b as i32);
        let found = cox.bidegree_of(&f);
        if found != Some(expected) {
            return Err(ModelFileError::WrongClass { found, expected });
        }
        let amb = AmbientCoordinates::new(&s, field);
        if coords.len() != amb.len() {
            return Err(ModelFileError::CoordinateMismatch(coords.len().min(amb.len())));
        }
        for (i, (line, text)) in coords.iter().enumerate() {
            let Some((name, mono)) = text.split_once('=') else {
                return Err(ModelFileError::Syntax { line: *line, msg: "expected `zi = monomial`".into() });
            };
            let mono = cox.ring().parse(mono.trim()).map_err(|source| ModelFileError::Polynomial { line: *line, source })?;
            let ok = name.trim() == amb.ring().names()[i]
                && mono.terms().len() == 1
                && mono.terms()[0] == (amb.cox_monomials()[i].clone(), 1);
            if !ok {
                return Err(ModelFileError::CoordinateMismatch(i));
            }
        }
        let generators = gens
            .iter()
            .map(|(line, text)| amb.ring().parse(text).map_err(|source| ModelFileError::Polynomial { line: *line, source }))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ModelFile { model: CurveModel { scroll: s, field, seed, f, smooth }, generators })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvelab::sample_curve;

    fn file() -> ModelFile {
        let s = scroll_data(7, 1, 2).unwrap();
        ModelFile::build(sample_curve(&s, PrimeField::default(), 1, false).unwrap()).unwrap()
    }

    #[test]
    fn round_trip() {
        let f = file();
        let text = f.to_text();
        assert!(text.contains("z0 = t^2*x\n"));
        assert_eq!(ModelFile::parse(&text).unwrap(), f);
        assert_eq!(ModelFile::parse(&text).unwrap().to_text(), text);
    }

    #[test]
    fn rejects_corruption() {
        let text = file().to_text();
        assert!(matches!(ModelFile::parse(&text.replace("g: 7", "g: 7x")), Err(ModelFileError::Syntax { .. })));
        assert!(matches!(ModelFile::parse(&text.replace("n: 1\n", "")), Err(ModelFileError::Missing("n"))));
        assert!(matches!(ModelFile::parse(&text.replace("z0 = t^2*x", "z0 = y*t")), Err(ModelFileError::CoordinateMismatch(0))));
        let broken_gen = text.replace("generators:\n", "generators:\nz0*+\n");
        assert!(matches!(ModelFile::parse(&broken_gen), Err(ModelFileError::Polynomial { .. })));
        assert!(matches!(ModelFile::parse(&text.replace("m: 2", "m: 3")), Err(ModelFileError::Scroll(_))));
        assert!(matches!(ModelFile::parse(&text.replace("p: 32003", "p: 32004")), Err(ModelFileError::Algebra(_))));
    }
}
