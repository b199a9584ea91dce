use std::fmt::Write;
use std::ops::RangeInclusive;

use serde::Serialize;
use serde_json::json;
use trigonal_core::betticalc::{
    closed_form_betti, hf_from_betti, hilbert_polynomial_value, mapping_cone_table, table_shape_check, MAX_GENUS,
};
use trigonal_core::par::{self, Exec};
use trigonal_core::scrollgeom::{maroni_range, scroll_data};

use crate::{CliError, Format, Outcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub g: i64,
    pub n: i64,
    pub shape: bool,
    pub rank_sum: bool,
    pub hilbert: bool,
    pub formula_equal: bool,
    pub pass: bool,
}

/// Symbolic checks for one `(g, n)` with `g >= 3n + 4`, over every
/// admissible Maroni invariant.
pub fn survey_cell(g: i64, n: i64) -> Cell {
    let mut cell = Cell { g, n, shape: true, rank_sum: true, hilbert: true, formula_equal: true, pass: false };
    let (Ok((lo, hi)), Ok(formula)) = (maroni_range(g), closed_form_betti(g, n)) else {
        cell.shape = false;
        return cell;
    };
    for m in lo.max(n)..=hi {
        let Ok(s) = scroll_data(g, n, m) else { continue };
        let Ok(cone) = mapping_cone_table(&s) else {
            cell.formula_equal = false;
            continue;
        };
        cell.shape &= table_shape_check(&cone, g, n);
        cell.rank_sum &= cone.rank_alternating_sum() == 0;
        cell.hilbert &= (1..=8).all(|d| hf_from_betti(&cone, s.ambient_dim, d) == hilbert_polynomial_value(g, n, d) as i128);
        cell.formula_equal &= cone == formula;
    }
    cell.pass = cell.shape && cell.rank_sum && cell.hilbert && cell.formula_equal;
    cell
}

pub(crate) fn survey(
    g: RangeInclusive<i64>,
    n: RangeInclusive<i64>,
    format: Format,
    out: &mut Outcome,
) -> Result<i32, CliError> {
    if *g.end() > MAX_GENUS {
        return Err(CliError::Usage(format!("genus range exceeds the supported bound {MAX_GENUS}")));
    }
    let jobs: Vec<(i64, i64)> =
        g.clone().flat_map(|gg| n.clone().map(move |nn| (gg, nn))).filter(|&(gg, nn)| nn >= 1 && gg >= 3 * nn + 4).collect();
    let cells = par::map(Exec::default(), &jobs, |&(gg, nn)| survey_cell(gg, nn));
    let all_pass = cells.iter().all(|c| c.pass);
    match format {
        Format::Json => {
            out.stdout.push_str(&serde_json::to_string(&json!({ "cells": cells, "all_pass": all_pass })).expect("json"));
            out.stdout.push('\n');
        }
        Format::Pretty => {
            let o = &mut out.stdout;
            let gs: Vec<i64> = g.clone().filter(|gg| cells.iter().any(|c| c.g == *gg)).collect();
            let ns: Vec<i64> = n.clone().filter(|nn| cells.iter().any(|c| c.n == *nn)).collect();
            let _ = write!(o, "g\\n ");
            for nn in &ns {
                let _ = write!(o, "{nn:>3}");
            }
            o.push('\n');
            for gg in &gs {
                let _ = write!(o, "{gg:>4}");
                for nn in &ns {
                    let mark = match cells.iter().find(|c| c.g == *gg && c.n == *nn) {
                        Some(c) if c.pass => "P",
                        Some(_) => "F",
                        None => ".",
                    };
                    let _ = write!(o, "{mark:>3}");
                }
                o.push('\n');
            }
            let _ = writeln!(o, "{} cells, {}", cells.len(), if all_pass { "all pass" } else { "FAILURES" });
        }
    }
    Ok(if all_pass { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_cells() {
        assert!(survey_cell(7, 1).pass);
        assert!(survey_cell(13, 3).pass);
    }
}
