//! Graded Betti tables: storage, JSON schema and the Macaulay-style display.

use std::collections::BTreeMap;
use std::fmt::{self, Write};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::groebner::hilbert_binom;

/// Sparse map `(i, d) -> beta_{i,d}`, positive entries only.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i32), u64>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries<I: IntoIterator<Item = (usize, i32, u64)>>(it: I) -> Self {
        let mut t = Self::new();
        for (i, d, b) in it {
            t.add(i, d, b);
        }
        t
    }

    /// Adds `beta` to entry `(i, d)`; zero contributions are ignored.
    pub fn add(&mut self, i: usize, d: i32, beta: u64) {
        if beta > 0 {
            *self.entries.entry((i, d)).or_insert(0) += beta;
        }
    }

    pub fn get(&self, i: usize, d: i32) -> u64 {
        self.entries.get(&(i, d)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, i32, u64)> + '_ {
        self.entries.iter().map(|(&(i, d), &b)| (i, d, b))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest homological position with a nonzero entry.
    pub fn length(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    /// Castelnuovo–Mumford regularity: the largest `d - i`.
    pub fn regularity(&self) -> i32 {
        self.entries.keys().map(|&(i, d)| d - i as i32).max().unwrap_or(0)
    }

    /// Total rank of the module at position `i`.
    pub fn rank(&self, i: usize) -> u64 {
        self.entries.iter().filter(|(k, _)| k.0 == i).map(|(_, b)| b).sum()
    }

    /// `sum_i (-1)^i sum_d beta_{i,d}`.
    pub fn rank_alternating_sum(&self) -> i64 {
        self.entries.iter().map(|(&(i, _), &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) }).sum()
    }

    /// Hilbert function of the resolved module in degree `m` over a ring of
    /// `ambient_dim + 1` variables.
    pub fn hilbert_function(&self, ambient_dim: usize, m: i64) -> i128 {
        self.entries
            .iter()
            .map(|(&(i, d), &b)| {
                let term = b as i128 * hilbert_binom(ambient_dim as i64 + m - d as i64, ambient_dim as i64);
                if i % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("betti table serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    /// Rows indexed by `d - i` from 0 to the regularity, columns by `i`,
    /// zero entries printed as `0`.
    pub fn pretty(&self) -> String {
        let cols = self.length() + 1;
        let rows = self.regularity().max(0) as usize + 1;
        let width = self.entries.values().map(|b| b.to_string().len()).max().unwrap_or(1).max(cols.to_string().len()) + 1;
        let label = rows.to_string().len() + 1;
        let mut out = String::new();
        let _ = write!(out, "{:>label$}", "");
        for i in 0..cols {
            let _ = write!(out, "{i:>width$}");
        }
        out.push('\n');
        for r in 0..rows {
            let _ = write!(out, "{:>label$}", format!("{r}:"));
            for i in 0..cols {
                let _ = write!(out, "{:>width$}", self.get(i, i as i32 + r as i32));
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    entries: Vec<(usize, i32, u64)>,
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Wire { entries: self.entries().collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BettiTable {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        let mut t = BettiTable::new();
        for (i, d, b) in w.entries {
            if b == 0 {
                return Err(D::Error::custom("betti entries must be positive"));
            }
            if t.get(i, d) != 0 {
                return Err(D::Error::custom("duplicate betti entry"));
            }
            t.add(i, d, b);
        }
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g7() -> BettiTable {
        BettiTable::from_entries([(0, 0, 1), (1, 2, 3), (1, 3, 1), (2, 3, 2), (2, 5, 3), (3, 6, 2)])
    }

    #[test]
    fn json_schema() {
        let t = g7();
        assert_eq!(t.to_json(), r#"{"entries":[[0,0,1],[1,2,3],[1,3,1],[2,3,2],[2,5,3],[3,6,2]]}"#);
        assert_eq!(BettiTable::from_json(&t.to_json()).unwrap(), t);
        assert!(BettiTable::from_json(r#"{"entries":[[0,0,0]]}"#).is_err());
        assert!(BettiTable::from_json(r#"{"entries":[[0,0,1],[0,0,2]]}"#).is_err());
    }

    #[test]
    fn pretty_matches_display_convention() {
        let expected = "   0 1 2 3\n0: 1 0 0 0\n1: 0 3 2 0\n2: 0 1 0 0\n3: 0 0 3 2\n";
        assert_eq!(g7().pretty(), expected);
    }

    #[test]
    fn invariants() {
        let t = g7();
        assert_eq!(t.rank_alternating_sum(), 0);
        assert_eq!(t.regularity(), 3);
        assert_eq!(t.hilbert_function(4, 0), 1);
        assert_eq!(t.hilbert_function(4, 1), 5);
        assert_eq!(t.hilbert_function(4, 2), 12);
    }
}
