use dodecic::exemplars::EXEMPLARS;
use dodecic::oracles::frobenius_scan;

fn main() {
    let budget: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(20000);
    for e in &EXEMPLARS {
        let r = frobenius_scan(&e.pair(), budget).unwrap();
        println!(
            "{:>4} {:>7} 12T{:<3} claimed {:>4} est {:>8.2} interval ({:.1}, {:?}) ok={}",
            e.a,
            e.b,
            e.g12,
            e.g12_label().order(),
            r.order_estimate.unwrap_or(f64::NAN),
            r.order_interval.0,
            r.order_interval.1.map(|h| (h * 10.0).round() / 10.0),
            r.all_consistent()
        );
    }
}
