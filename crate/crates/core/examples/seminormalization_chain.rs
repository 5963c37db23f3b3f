//! A chain of pinchings that are isomorphisms on residue fields leaves
//! Br1 unchanged at every step.

use brauer_pinch::qz::QzSubgroup;
use brauer_pinch::theorems::seminormalization_chain;
use brauer_pinch::{AbGroup, CoverData, CoverKind, FieldSpec, PinchPoint, PinchingConfig};

fn main() {
    let k = FieldSpec::abstract_field(1, "k");
    let step = |label: &str, degree: u64| {
        let cover = CoverData {
            base: k.clone(),
            kind: CoverKind::General,
            amitsur: QzSubgroup::trivial(),
            br_a: AbGroup::trivial(),
            br1: AbGroup::SymbolicBr(k.label.clone()),
            closed_point_degrees: None,
            declared_index: None,
            smooth_normalization: false,
        };
        PinchingConfig::new(cover, vec![PinchPoint::separable(&k, label, degree, &[1]).unwrap()])
    };
    let chain = [step("x1", 1), step("x2", 2), step("x3", 3)];
    let r = seminormalization_chain(&chain).unwrap();
    for (i, s) in r.steps.iter().enumerate() {
        println!("step {}: ker {}, coker {}, Br1 {}", i + 1, s.ker_phi1, s.coker_phi_a, s.br1);
    }
    println!("isomorphism on Br1 at every step: {}", r.all_isomorphisms);
}
