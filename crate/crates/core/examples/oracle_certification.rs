//! Certifies a report by brute-force enumeration of subgroups of Z/N.

use brauer_pinch::oracle::{self, OracleCaps};
use brauer_pinch::{analyze, CoverData, FieldSpec, PinchPoint, PinchingConfig};

fn main() {
    let caps = OracleCaps::from_env().unwrap();
    println!("lattice laws up to 60: {:?}", oracle::check_lattice_laws(60, &caps).map(|c| c.is_ok()));

    let k = FieldSpec::p_adic(7);
    let curve = CoverData::smooth_curve(k.clone(), 12).unwrap();
    let config = PinchingConfig::new(
        curve,
        vec![
            PinchPoint::separable(&k, "y", 4, &[3, 9]).unwrap(),
            PinchPoint::separable(&k, "z", 6, &[2]).unwrap(),
        ],
    );
    let report = analyze(&config).unwrap();
    let outcome = oracle::verify_report(&config, &report, &caps).unwrap();
    println!("B(X/k) = {}", report.amitsur_pinched);
    println!("{} checks, passed: {}", outcome.checks, outcome.passed());
    for d in outcome.discrepancies.iter().chain(&outcome.skipped) {
        println!("  {d}");
    }
}
