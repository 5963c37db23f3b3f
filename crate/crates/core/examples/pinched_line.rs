//! The projective line over Q_3 pinched at two points: Br1 splits as
//! Br k plus the intersection product.

use brauer_pinch::{analyze, CoverData, FieldSpec, PinchPoint, PinchingConfig};

fn main() {
    let k = FieldSpec::p_adic(3);
    let config = PinchingConfig::new(
        CoverData::ch0_trivial(k.clone()),
        vec![
            PinchPoint::separable(&k, "y", 1, &[2, 4]).unwrap(),
            PinchPoint::separable(&k, "z", 2, &[3]).unwrap(),
        ],
    );
    let r = analyze(&config).unwrap();
    println!("intersection product  {}", r.intersection_product);
    println!("ker phi1*             {} (split: {})", r.ker_phi1, r.ker_phi1_split);
    println!("Br1 X                 {}", r.br1_pinched);
}
