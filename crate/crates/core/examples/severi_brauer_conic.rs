//! A conic without rational points over Q_5, pinched at a quadratic point.

use brauer_pinch::{analyze, CoverData, FieldSpec, PinchPoint, PinchingConfig};

fn main() {
    let k = FieldSpec::p_adic(5);
    let conic = CoverData::severi_brauer(k.clone(), 2).unwrap();
    let config = PinchingConfig::new(conic, vec![PinchPoint::separable(&k, "y", 1, &[2]).unwrap()]);
    let r = analyze(&config).unwrap();
    println!("B(X~/k)   {}", r.amitsur_cover);
    println!("B(X/k)    {}", r.amitsur_pinched);
    println!("ker phi1* {}", r.ker_phi1);
    println!("Br1 X     {}", r.br1_pinched);
    for t in &r.applied {
        println!("  {:<24} {}", t.tag(), t.citation());
    }
}
