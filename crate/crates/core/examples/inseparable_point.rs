//! The line over F_2((t)) pinched along purely inseparable fibers of
//! degree 2, 4 and 8.

use brauer_pinch::{analyze, CoverData, FieldSpec, PinchPoint, PinchingConfig};

fn main() {
    let k = FieldSpec::local_function_field(2);
    for d in 1..=3 {
        let point = PinchPoint::from_degrees(&k, "P", (1, 1), &[(1 << d, 1)]).unwrap();
        let config = PinchingConfig::new(CoverData::ch0_trivial(k.clone()), vec![point]);
        let r = analyze(&config).unwrap();
        println!(
            "fiber degree {:>2}: universal homeomorphism {}, Br1 X = {}",
            1 << d,
            r.predicates.universal_homeomorphism,
            r.br1_pinched
        );
    }
}
