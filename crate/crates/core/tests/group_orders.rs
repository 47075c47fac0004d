use dodecic::classifier::{classify_dodecic, theoretical_order, GroupLabel};
use dodecic::exemplars::EXEMPLARS;
use dodecic::oracles::frobenius_scan;

#[test]
fn exemplar_orders_match_split_density() {
    for e in &EXEMPLARS {
        let report = frobenius_scan(&e.pair(), 20000).unwrap();
        let order = e.g12_label().order();
        assert!(report.interval_contains(order), "{}: {:?}", e.g12_label(), report.order_interval);
        assert!(report.all_consistent(), "{:?}", report.consistency);
    }
}

#[test]
fn exemplar_orders_match_field_degrees() {
    for e in &EXEMPLARS {
        let c = classify_dodecic(&e.pair());
        let defined =
            matches!(e.g4, GroupLabel::T4_2 | GroupLabel::T4_3) && matches!(e.g6, GroupLabel::T6_3 | GroupLabel::T6_9);
        let expected = defined.then(|| e.g12_label().order());
        assert_eq!(theoretical_order(&e.pair(), &c), expected, "{}", e.g12_label());
    }
}
