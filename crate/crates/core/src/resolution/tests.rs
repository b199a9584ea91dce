use super::*;
use crate::exactalg::{PolyRing, PrimeField};
use crate::groebner::{buchberger, hilbert_function_quotient};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn zring(n: usize) -> PolyRing {
    PolyRing::with_indexed_vars(PrimeField::default(), "z", n)
}

fn resolve(r: &PolyRing, gens: &[&str]) -> (FreeComplex, BettiTable) {
    let gens: Vec<_> = gens.iter().map(|s| r.parse(s).unwrap()).collect();
    let gb = buchberger(r, &gens).unwrap();
    let c = free_resolution(&gb, r.nvars() + 1).unwrap();
    let m = minimalize(&c);
    let t = betti_table(&m).unwrap();
    (c, t)
}

fn table(e: &[(usize, i32, u64)]) -> BettiTable {
    BettiTable::from_entries(e.iter().copied())
}

fn rnc_minors(n: usize) -> Vec<String> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            out.push(format!("z{a}*z{} - z{}*z{b}", b + 1, a + 1));
        }
    }
    out
}

#[test]
fn koszul_complex() {
    let r = zring(3);
    let (c, t) = resolve(&r, &["z0", "z1", "z2"]);
    assert_eq!(t, table(&[(0, 0, 1), (1, 1, 3), (2, 2, 3), (3, 3, 1)]));
    let rep = verify_complex(&c);
    assert!(rep.d2_zero && rep.graded);
    assert_eq!(rep.rank_alternating_sum, 0);
}

#[test]
fn principal_and_zero_ideals() {
    let r = zring(3);
    let (_, t) = resolve(&r, &["z0^2*z1 - z2^3"]);
    assert_eq!(t, table(&[(0, 0, 1), (1, 3, 1)]));
    let gb = buchberger(&r, &[]).unwrap();
    let c = free_resolution(&gb, 4).unwrap();
    assert_eq!(betti_table(&c).unwrap(), table(&[(0, 0, 1)]));
}

#[test]
fn rational_normal_curves() {
    let r = zring(4);
    let minors = rnc_minors(3);
    let gens: Vec<&str> = minors.iter().map(|s| s.as_str()).collect();
    let (c, t) = resolve(&r, &gens);
    assert_eq!(t, table(&[(0, 0, 1), (1, 2, 3), (2, 3, 2)]));
    assert!(verify_complex(&c).d2_zero);

    let r = zring(5);
    let minors = rnc_minors(4);
    let gens: Vec<&str> = minors.iter().map(|s| s.as_str()).collect();
    let (_, t) = resolve(&r, &gens);
    assert_eq!(t, table(&[(0, 0, 1), (1, 2, 6), (2, 3, 8), (3, 4, 3)]));
}

#[test]
fn complete_intersection() {
    let r = zring(4);
    let (_, t) = resolve(&r, &["z0^2 + z1*z2", "z3^3 - z0*z1*z2"]);
    assert_eq!(t, table(&[(0, 0, 1), (1, 2, 1), (1, 3, 1), (2, 5, 1)]));
}

#[test]
fn corrupted_differential_is_detected() {
    let r = zring(4);
    let minors = rnc_minors(3);
    let gens: Vec<&str> = minors.iter().map(|s| s.as_str()).collect();
    let (c, _) = resolve(&r, &gens);
    let mut bad = minimalize(&c);
    let d2 = bad.differential_mut(2);
    let (row, entry) = d2.column(0).iter().next().map(|(&i, p)| (i, p.clone())).unwrap();
    d2.set(row, 0, r.add(&entry, &r.var(0)));
    assert!(!verify_complex(&bad).d2_zero);
    let d1 = bad.differential_mut(1);
    d1.set(0, 0, r.parse("z0").unwrap());
    assert!(!verify_complex(&bad).graded);
}

#[test]
fn trivial_summand_is_pruned() {
    // Koszul complex of (z0, z1) with a spliced R(-1) -> R(-1).
    let r = zring(2);
    let p = |s: &str| r.parse(s).unwrap();
    let mut d1 = PolyMatrix::zeros(1, 3);
    d1.set(0, 0, p("z0"));
    d1.set(0, 1, p("z1"));
    let mut d2 = PolyMatrix::zeros(3, 2);
    d2.set(0, 0, p("z1"));
    d2.set(1, 0, p("-z0"));
    d2.set(2, 1, r.constant(5));
    let c = FreeComplex::new(r.clone(), vec![vec![0], vec![1, 1, 1], vec![2, 1]], vec![d1, d2]);
    assert!(!c.is_minimal());
    assert_eq!(betti_table(&c), Err(ResolutionError::NotMinimal));
    let rep = verify_complex(&c);
    assert!(rep.d2_zero && rep.graded);
    let m = minimalize(&c);
    assert_eq!(betti_table(&m).unwrap(), table(&[(0, 0, 1), (1, 1, 2), (2, 2, 1)]));
    assert!(verify_complex(&m).d2_zero);
}

#[test]
fn length_cap() {
    let r = zring(3);
    let gb = buchberger(&r, &[r.var(0), r.var(1), r.var(2)]).unwrap();
    assert_eq!(free_resolution(&gb, 2), Err(ResolutionError::LengthExceeded(2)));
    let graded = PolyRing::new(PrimeField::default(), &["a", "b"]).with_weights(vec![1, 2]).unwrap();
    let gb = buchberger(&graded, &[graded.var(0)]).unwrap();
    assert_eq!(free_resolution(&gb, 3), Err(ResolutionError::NeedsStandardGrading));
}

fn random_ideal(rng: &mut ChaCha8Rng, r: &PolyRing) -> Vec<crate::exactalg::Polynomial> {
    let n = r.nvars();
    let count = rng.random_range(1..=4);
    (0..count)
        .map(|_| {
            let deg = rng.random_range(1..=3u16);
            let mut terms = Vec::new();
            for _ in 0..rng.random_range(1..=4) {
                let mut e = vec![0u16; n];
                for _ in 0..deg {
                    e[rng.random_range(0..n)] += 1;
                }
                terms.push((crate::exactalg::Monomial::new(&e), rng.random_range(1..r.field().modulus())));
            }
            r.from_terms(terms)
        })
        .filter(|p| !p.is_zero())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn betti_numbers_recover_hilbert_function(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = zring(rng.random_range(2..=4));
        let gens = random_ideal(&mut rng, &r);
        let gb = buchberger(&r, &gens).unwrap();
        let c = free_resolution(&gb, r.nvars() + 1).unwrap();
        let rep = verify_complex(&c);
        prop_assert!(rep.d2_zero && rep.graded);
        let m = minimalize(&c);
        prop_assert!(m.is_minimal());
        prop_assert!(verify_complex(&m).d2_zero);
        let t = betti_table(&m).unwrap();
        prop_assert!(t.length() <= r.nvars());
        let lt = gb.leading_ideal();
        for d in 0..7 {
            let hf = hilbert_function_quotient(&lt, r.nvars(), d) as i128;
            prop_assert_eq!(t.hilbert_function(r.nvars() - 1, d as i64), hf);
        }
        let shuffled = betti_table(&minimalize_with_seed(&c, seed ^ 0x5eed)).unwrap();
        prop_assert_eq!(shuffled, t);
    }

    #[test]
    fn sequential_and_parallel_agree(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = zring(rng.random_range(2..=4));
        let gens = random_ideal(&mut rng, &r);
        let gb = buchberger(&r, &gens).unwrap();
        let a = free_resolution_with(&gb, 8, Exec::Sequential).unwrap();
        let b = free_resolution_with(&gb, 8, Exec::Parallel).unwrap();
        prop_assert_eq!(a, b);
    }
}
