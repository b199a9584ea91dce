//! Hilbert functions of quotients by monomial ideals.
//!
//! The Hilbert series numerator `N(J)` of `R/J` (series `N(t) / (1-t)^n`) is
//! computed by splitting off one minimal generator `u` at a time,
//! `N(J' + (u)) = N(J') - t^deg(u) N(J' : u)`, with memoization on the
//! (canonically sorted) generator list and a closed form when the
//! generators are pairwise coprime.

use std::collections::HashMap;

use crate::exactalg::Monomial;

/// Monomial ideal stored by its minimal generators, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(gens: Vec<Monomial>) -> Self {
        let mut gens = gens;
        gens.sort();
        gens.dedup();
        let minimal: Vec<Monomial> = gens
            .iter()
            .enumerate()
            .filter(|(i, g)| !gens.iter().enumerate().any(|(j, h)| j != *i && h.divides(g)))
            .map(|(_, g)| g.clone())
            .collect();
        MonomialIdeal { gens: minimal }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `(self : u)`.
    pub fn quotient(&self, u: &Monomial) -> MonomialIdeal {
        MonomialIdeal::new(
            self.gens
                .iter()
                .map(|g| {
                    let e: Vec<u16> = g.exponents().iter().zip(u.exponents()).map(|(&a, &b)| a.saturating_sub(b)).collect();
                    Monomial::new(&e)
                })
                .collect(),
        )
    }
}

fn poly_sub_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (k, &c) in b.iter().enumerate() {
        a[k + shift] -= c;
    }
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    v
}

fn numerator_rec(gens: &[Monomial], memo: &mut HashMap<Vec<Monomial>, Vec<i64>>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if let Some(v) = memo.get(gens) {
        return v.clone();
    }
    let pairwise_coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    let result = if pairwise_coprime {
        let mut acc = vec![1i64];
        for g in gens {
            let mut next = acc.clone();
            poly_sub_shifted(&mut next, &acc, g.degree() as usize);
            acc = next;
        }
        acc
    } else {
        // split off the generator of largest degree
        let (k, _) = gens.iter().enumerate().max_by_key(|(i, g)| (g.degree(), usize::MAX - *i)).unwrap();
        let u = &gens[k];
        let rest: Vec<Monomial> = gens.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, g)| g.clone()).collect();
        let colon = MonomialIdeal::new(rest.clone()).quotient(u);
        let mut a = numerator_rec(&rest, memo);
        let b = numerator_rec(colon.generators(), memo);
        poly_sub_shifted(&mut a, &b, u.degree() as usize);
        trim(a)
    };
    memo.insert(gens.to_vec(), result.clone());
    result
}

/// Hilbert series numerator of `R/J`, coefficients of `t^0, t^1, ...`.
pub fn hilbert_numerator(ideal: &MonomialIdeal) -> Vec<i64> {
    let mut memo = HashMap::new();
    numerator_rec(ideal.generators(), &mut memo)
}

/// `binom(n, k)` in `i128`, zero whenever `k < 0`, `n < 0` or `k > n`.
pub fn hilbert_binom(n: i64, k: i64) -> i128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r
}

/// Number of degree-`m` monomials in `nvars` variables outside `lt`.
pub fn hilbert_function_quotient(lt: &MonomialIdeal, nvars: usize, m: u32) -> u64 {
    let num = hilbert_numerator(lt);
    let n = nvars as i64;
    let mut total: i128 = 0;
    for (k, &c) in num.iter().enumerate() {
        let k = k as i64;
        if k > m as i64 {
            break;
        }
        total += c as i128 * hilbert_binom(n - 1 + m as i64 - k, n - 1);
    }
    if nvars == 0 {
        total = if m == 0 && !lt.contains(&Monomial::one(0)) { 1 } else { 0 };
    }
    total.max(0) as u64
}
