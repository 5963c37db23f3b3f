//! Finite subgroups of Q/Z: meets, joins and torsion.

use brauer_pinch::qz::{self, cyclic};
use brauer_pinch::{AbGroup, Order};

fn main() {
    let a = cyclic(12).unwrap();
    let b = cyclic(18).unwrap();
    println!("{a} meet {b} = {}", a.intersect(&b));
    println!("{a} join {b} = {}", a.join(&b));
    println!("4-torsion of {b} = {}", b.torsion(&Order::from(4)));

    let g = qz::product([4u32, 6, 10].map(|n| AbGroup::cyclic(Order::from(n))));
    println!("Z/4 x Z/6 x Z/10 = {g}");
    let e = qz::extension(AbGroup::cyclic(Order::from(2)), AbGroup::cyclic(Order::from(3)));
    println!("an extension of Z/3 by Z/2: {e}");
}
