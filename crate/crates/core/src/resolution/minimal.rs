//! Pruning a graded free resolution to a minimal one by unit pivots.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactalg::{Coeff, Polynomial};

use super::complex::{FreeComplex, PolyMatrix};

fn unit_value(p: &Polynomial) -> Option<Coeff> {
    match p.terms() {
        [(m, c)] if m.is_one() => Some(*c),
        _ => None,
    }
}

/// Removes trivial summands `R(-d) -> R(-d)` until no differential has a
/// nonzero constant entry. Levels are processed from low homological
/// position upward, taking the first unit entry in column-major order.
pub fn minimalize(c: &FreeComplex) -> FreeComplex {
    prune(c, |_| 0)
}

/// Same as [`minimalize`] but picks each pivot uniformly at random among the
/// current unit entries. The resulting Betti table does not depend on the seed.
pub fn minimalize_with_seed(c: &FreeComplex, seed: u64) -> FreeComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    prune(c, move |n| rng.random_range(0..n))
}

fn prune(c: &FreeComplex, mut pick: impl FnMut(usize) -> usize) -> FreeComplex {
    let ring = c.ring().clone();
    let field = *ring.field();
    let mut mats: Vec<Vec<std::collections::BTreeMap<usize, Polynomial>>> =
        c.differentials().iter().map(|d| d.columns().to_vec()).collect();
    let mut alive: Vec<Vec<bool>> = c.modules().iter().map(|m| vec![true; m.len()]).collect();

    for k in 0..mats.len() {
        loop {
            let mut units: Vec<(usize, usize, Coeff)> = Vec::new();
            for (j, col) in mats[k].iter().enumerate() {
                if !alive[k + 1][j] {
                    continue;
                }
                for (&r, p) in col {
                    if let Some(u) = unit_value(p) {
                        units.push((j, r, u));
                    }
                }
            }
            if units.is_empty() {
                break;
            }
            let (pc, pr, u) = units[pick(units.len())];
            let u_inv = field.inv_nonzero(u);
            let pivot_col = std::mem::take(&mut mats[k][pc]);
            for j in 0..mats[k].len() {
                if j == pc || !alive[k + 1][j] {
                    continue;
                }
                let Some(a) = mats[k][j].get(&pr).cloned() else { continue };
                let factor = ring.scalar_mul(&a, field.neg(u_inv));
                for (&r, p) in &pivot_col {
                    let e = mats[k][j].entry(r).or_insert_with(Polynomial::zero);
                    *e = ring.add(e, &ring.mul(&factor, p));
                    if e.is_zero() {
                        mats[k][j].remove(&r);
                    }
                }
                debug_assert!(!mats[k][j].contains_key(&pr));
            }
            alive[k + 1][pc] = false;
            alive[k][pr] = false;
            if k + 1 < mats.len() {
                for col in mats[k + 1].iter_mut() {
                    col.remove(&pc);
                }
            }
            if k > 0 {
                mats[k - 1][pr].clear();
            }
        }
    }

    let index: Vec<Vec<Option<usize>>> = alive
        .iter()
        .map(|a| {
            let mut next = 0;
            a.iter()
                .map(|&live| {
                    live.then(|| {
                        next += 1;
                        next - 1
                    })
                })
                .collect()
        })
        .collect();
    let mut modules: Vec<Vec<i32>> = c
        .modules()
        .iter()
        .zip(&alive)
        .map(|(m, a)| m.iter().zip(a).filter(|(_, &l)| l).map(|(&d, _)| d).collect())
        .collect();
    let mut differentials: Vec<PolyMatrix> = mats
        .into_iter()
        .enumerate()
        .map(|(k, cols)| {
            let cols = cols
                .into_iter()
                .enumerate()
                .filter(|(j, _)| alive[k + 1][*j])
                .map(|(_, col)| col.into_iter().filter_map(|(r, p)| index[k][r].map(|r| (r, p))).collect())
                .collect();
            PolyMatrix::from_columns(modules[k].len(), cols)
        })
        .collect();
    while modules.len() > 1 && modules.last().is_some_and(|m| m.is_empty()) {
        modules.pop();
        differentials.pop();
    }
    let mut out = FreeComplex::new(ring, modules, differentials);
    out.recompute_minimal();
    out
}
