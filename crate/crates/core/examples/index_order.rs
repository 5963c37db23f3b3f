//! The order of the Amitsur subgroup from indices alone.

use brauer_pinch::pinch::pinched_index_constraint;
use brauer_pinch::theorems::roquette_lichtenbaum;
use brauer_pinch::{CoverData, FieldSpec, PinchPoint, PinchingConfig};

fn main() {
    let k = FieldSpec::p_adic(5);
    let mut curve = CoverData::smooth_curve(k.clone(), 4).unwrap();
    curve.closed_point_degrees = Some(vec![4, 8]);
    let config = PinchingConfig::new(curve, vec![PinchPoint::separable(&k, "y", 6, &[2]).unwrap()]);
    println!("I(X~) = {:?}", config.cover.index());
    println!("gcd(I(X~), I(Y)) = {}", pinched_index_constraint(&config).unwrap());
    let rl = roquette_lichtenbaum(&config).unwrap();
    println!("#B(X/k) = {}", rl.order);
}
