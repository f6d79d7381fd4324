use sombor_core::extremal::{shared_extremal_graph, swapped_theorem_claims, ClaimStatus};
use sombor_core::formulas::{so_bar_l_closed, so_bar_x_closed, so_l_closed, so_x_closed};
use sombor_core::{
    canonical_key, conjecture_report, l_graph, rank_by, verify_claims, verify_theorems, x_graph,
    ConjectureReading, Direction, Enumerator, IndexKind,
};

#[test]
fn theorems_hold_through_order_ten() {
    let reports = verify_theorems(&Enumerator::new(), 5..=10).unwrap();
    assert_eq!(reports.len(), 12);
    for r in &reports {
        for c in &r.claims {
            assert_eq!(c.status, ClaimStatus::Pass, "n = {} claim {}", r.n, c.id);
        }
    }
    for (n, same) in shared_extremal_graph(&reports) {
        assert_eq!(same, Some(true), "n = {n}");
    }
}

#[test]
fn top_two_tiers_are_the_families() {
    let e = Enumerator::new();
    for n in 5..=10 {
        let so = rank_by(&e, n, IndexKind::Sombor, Direction::Max).unwrap();
        let co = rank_by(&e, n, IndexKind::Coindex, Direction::Min).unwrap();
        let x = canonical_key(&x_graph(n).unwrap());
        let l = canonical_key(&l_graph(n).unwrap());
        for (report, first, second) in [
            (&so, so_x_closed(n).unwrap(), so_l_closed(n).unwrap()),
            (
                &co,
                so_bar_x_closed(n).unwrap(),
                so_bar_l_closed(n).unwrap(),
            ),
        ] {
            assert_eq!(report.tiers[0].members.len(), 1);
            assert_eq!(report.tiers[0].members[0].key, x);
            assert_eq!(report.tiers[0].value, first);
            assert_eq!(report.tiers[1].members.len(), 1);
            assert_eq!(report.tiers[1].members[0].key, l);
            assert_eq!(report.tiers[1].value, second);
        }
        let total: usize = so.tiers.iter().map(|t| t.members.len()).sum();
        assert_eq!(total, so.graph_count());
    }
}

#[test]
fn tiers_are_strictly_ordered() {
    let r = rank_by(&Enumerator::new(), 9, IndexKind::Sombor, Direction::Max).unwrap();
    assert!(r.tiers.windows(2).all(|w| w[0].value > w[1].value));
    let r = rank_by(&Enumerator::new(), 9, IndexKind::Coindex, Direction::Min).unwrap();
    assert!(r.tiers.windows(2).all(|w| w[0].value < w[1].value));
}

#[test]
fn swapped_witnesses_fail() {
    let reports = verify_claims(&Enumerator::new(), 5..=8, &swapped_theorem_claims()).unwrap();
    for r in &reports {
        assert!(r.failed(), "n = {}", r.n);
        assert!(r.claims.iter().all(|c| c.status.is_fail()));
    }
}

#[test]
fn conjecture_report_flags_order_five() {
    let reports = conjecture_report(&Enumerator::new(), 5..=9).unwrap();
    let r5 = &reports[0];
    assert_eq!(r5.n, 5);
    assert!((r5.min_so.value.to_f64() - 30.398).abs() < 1e-3);
    assert!((r5.min_so_bound.conjectured - 31.913).abs() < 1e-3);
    assert!(!r5.min_so_bound.bound_holds);
    for r in &reports {
        assert_eq!(r.max_coindex_bounds.len(), 2);
        assert!(r.coindex_bound(ConjectureReading::Literal).conjectured < 0.0);
        assert_eq!(r.parity_index, if r.n % 2 == 0 { 1 } else { 2 });
    }
    assert!(conjecture_report(&Enumerator::new(), 4..=6).is_err());
}
