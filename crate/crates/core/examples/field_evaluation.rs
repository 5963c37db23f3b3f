//! Brauer groups and relative Brauer groups of the supported field kinds.

use brauer_pinch::field::{brauer_group, relative_brauer};
use brauer_pinch::{ExtensionSpec, FieldKind, FieldSpec};

fn main() {
    let fields = [
        FieldSpec::p_adic(5),
        FieldSpec::local_function_field(2),
        FieldSpec::finite(3),
        FieldSpec::new(FieldKind::RealClosed, "R"),
        FieldSpec::abstract_field(2, "F_2(t)"),
    ];
    for k in &fields {
        let degree = if k.kind == FieldKind::RealClosed { 2 } else { 6 };
        let e = ExtensionSpec::separable(k.clone(), degree, "K").unwrap();
        println!(
            "{:<8} Br = {:<10} Br(K/k) for [K:k] = {degree}: {}",
            k.label,
            brauer_group(k).to_string(),
            relative_brauer(&e)
        );
    }
    // purely inseparable extensions of an imperfect field
    let k = FieldSpec::abstract_field(2, "F_2(t)");
    let e = ExtensionSpec::new(k, 4, 1, "F_2(t^(1/4))").unwrap();
    println!("{}: {}", e.label, relative_brauer(&e));
}
