use trigonal_core::betticalc::{closed_form_betti, hf_from_betti, mapping_cone_table};
use trigonal_core::curvelab::{curve_ideal_elimination, curve_ideal_fast, sample_curve, AmbientCoordinates, CurveModel};
use trigonal_core::exactalg::PrimeField;
use trigonal_core::groebner::{buchberger, buchberger_with, GroebnerBasis};
use trigonal_core::normality::{default_m_max, projective_normality_verdict, quadric_count_check};
use trigonal_core::par::Exec;
use trigonal_core::resolution::{
    betti_table, free_resolution_with, minimalize, minimalize_with_seed, verify_complex, BettiTable,
};
use trigonal_core::scrollgeom::scroll_data;

fn model(g: i64, n: i64, m: i64, seed: u64) -> CurveModel {
    let s = scroll_data(g, n, m).unwrap();
    sample_curve(&s, PrimeField::default(), seed, true).unwrap()
}

fn fast_gb(c: &CurveModel, exec: Exec) -> GroebnerBasis {
    let amb = AmbientCoordinates::new(&c.scroll, c.field);
    buchberger_with(amb.ring(), &curve_ideal_fast(c).unwrap(), exec).unwrap()
}

fn table(gb: &GroebnerBasis, exec: Exec) -> BettiTable {
    let res = free_resolution_with(gb, gb.ring().nvars(), exec).unwrap();
    let rep = verify_complex(&res);
    assert!(rep.d2_zero && rep.graded);
    assert_eq!(rep.rank_alternating_sum, 0);
    betti_table(&minimalize(&res)).unwrap()
}

#[test]
fn computed_tables_match_prediction() {
    for (g, n, m) in [(6, 1, 2), (7, 1, 2), (8, 1, 2), (10, 2, 3), (9, 2, 3)] {
        let c = model(g, n, m, 11);
        let gb = fast_gb(&c, Exec::default());
        let t = table(&gb, Exec::default());
        assert_eq!(t, mapping_cone_table(&c.scroll).unwrap(), "({g},{n},{m})");
        if c.scroll.b >= 0 {
            assert_eq!(t, closed_form_betti(g, n).unwrap());
        }
        let report = projective_normality_verdict(&gb, &c.scroll, default_m_max(&t));
        assert!(report.verdict);
        for row in &report.rows {
            assert_eq!(hf_from_betti(&t, c.scroll.ambient_dim, row.m as i64), row.hf_actual as i128);
        }
        assert!(quadric_count_check(&gb, &c.scroll));
    }
}

#[test]
fn oracle_and_fast_path_agree() {
    for (g, n, m) in [(6, 1, 2), (7, 1, 2), (8, 1, 3), (10, 2, 2)] {
        let c = model(g, n, m, 5);
        let fast = fast_gb(&c, Exec::default());
        let oracle = curve_ideal_elimination(&c).unwrap();
        assert_eq!(fast, oracle, "({g},{n},{m}): reduced bases differ");
        assert_eq!(table(&oracle, Exec::default()), table(&fast, Exec::default()));
    }
}

#[test]
fn execution_modes_agree() {
    let c = model(9, 1, 3, 2);
    let seq = fast_gb(&c, Exec::Sequential);
    let par = fast_gb(&c, Exec::Parallel);
    assert_eq!(seq, par);
    let a = free_resolution_with(&seq, 7, Exec::Sequential).unwrap();
    let b = free_resolution_with(&par, 7, Exec::Parallel).unwrap();
    assert_eq!(a, b);
    let t = betti_table(&minimalize(&a)).unwrap();
    for seed in 0..3 {
        assert_eq!(betti_table(&minimalize_with_seed(&a, seed)).unwrap(), t);
    }
    let again = minimalize(&minimalize(&a));
    assert_eq!(again, minimalize(&a));
}

#[test]
fn construction_is_deterministic() {
    let a = model(8, 1, 2, 7);
    let b = model(8, 1, 2, 7);
    assert_eq!(a, b);
    assert_eq!(curve_ideal_fast(&a).unwrap(), curve_ideal_fast(&b).unwrap());
    let other = model(8, 1, 2, 8);
    assert_ne!(a.f, other.f);
    let s = scroll_data(8, 1, 2).unwrap();
    let amb = AmbientCoordinates::new(&s, PrimeField::default());
    let gb = buchberger(amb.ring(), &curve_ideal_fast(&other).unwrap()).unwrap();
    assert_eq!(table(&gb, Exec::default()), mapping_cone_table(&s).unwrap());
}
