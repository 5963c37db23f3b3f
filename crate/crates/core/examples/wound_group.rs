//! A regular curve over an imperfect field pinched along a purely
//! inseparable fiber. Over an abstract base the answer is only bounded.

use brauer_pinch::qz::{Exponent, QzSubgroup};
use brauer_pinch::{analyze, AbGroup, CoverData, CoverKind, FieldSpec, GroupOrder, PinchPoint, PinchingConfig};

fn main() {
    let k = FieldSpec::abstract_field(2, "F_2(t1,t2)");
    let cover = CoverData {
        base: k.clone(),
        kind: CoverKind::RegularCurve,
        amitsur: QzSubgroup::trivial(),
        br_a: AbGroup::unknown(Exponent::Unbounded, GroupOrder::Unknown, "Br_a of the cover"),
        br1: AbGroup::unknown(Exponent::Unbounded, GroupOrder::Unknown, "Br_1 of the cover"),
        closed_point_degrees: None,
        declared_index: Some(1),
        smooth_normalization: false,
    };
    let point = PinchPoint::from_degrees(&k, "Kc", (2, 1), &[(2, 1)]).unwrap();
    let r = analyze(&PinchingConfig::new(cover, vec![point])).unwrap();
    println!("ker phi1*    {}", r.ker_phi1);
    println!("coker phi_a* {}", r.coker_phi_a);
    println!("Br1 X        {}", r.br1_pinched);
    for c in &r.caveats {
        println!("caveat: {c}");
    }
}
