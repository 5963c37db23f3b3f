//! Random configuration generators shared by the integration tests.

#![allow(dead_code)]

use brauer_pinch::{AbGroup, CoverData, CoverKind, FieldSpec, PinchPoint, PinchingConfig, QzSubgroup};
use num_integer::gcd;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn local_base(rng: &mut impl Rng) -> FieldSpec {
    if rng.gen_bool(0.7) {
        FieldSpec::p_adic(*[2, 3, 5, 7, 11].choose(rng).unwrap())
    } else {
        FieldSpec::local_function_field(*[2, 3].choose(rng).unwrap())
    }
}

/// A cover over a local field whose Amitsur order and index are both at
/// most `max`.
pub fn local_cover(rng: &mut impl Rng, base: &FieldSpec, max: u64) -> CoverData {
    match rng.gen_range(0..4) {
        0 => CoverData::ch0_trivial(base.clone()),
        1 => CoverData::severi_brauer(base.clone(), rng.gen_range(1..=max.min(12))).unwrap(),
        2 => CoverData::smooth_curve(base.clone(), rng.gen_range(1..=max)).unwrap(),
        _ => {
            // index given by closed-point degrees i*a and i*(a+1)
            let i = rng.gen_range(1..=max);
            let a = rng.gen_range(1..=4);
            let mut c = CoverData::smooth_curve(base.clone(), i).unwrap();
            c.closed_point_degrees = Some(vec![i * a, i * (a + 1)]);
            c.declared_index = None;
            c
        }
    }
}

/// Largest `j` with `p^j | n`.
fn valuation(n: u64, p: u64) -> u32 {
    if p < 2 {
        return 0;
    }
    let mut j = 0;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
        j += 1;
    }
    j
}

/// The characteristic when the base admits inseparable extensions, 1
/// otherwise.
pub fn inseparable_prime(base: &FieldSpec) -> u64 {
    if base.is_perfect() {
        1
    } else {
        base.char_exponent()
    }
}

/// `(degree, separable degree)` with a random inseparable part when the
/// base has characteristic `p > 1`.
pub fn split_degree(rng: &mut impl Rng, d: u64, p: u64) -> (u64, u64) {
    let j = rng.gen_range(0..=valuation(d, p));
    (d, d / p.pow(j))
}

/// A point compatible with a cover of index `index`, every degree at most
/// `max`.
pub fn point(rng: &mut impl Rng, base: &FieldSpec, label: &str, index: u64, max: u64) -> PinchPoint {
    let p = inseparable_prime(base);
    let r = rng.gen_range(1..=max);
    let step = index / gcd(index, r);
    let n = rng.gen_range(1..=3);
    let fibers: Vec<(u64, u64)> = (0..n)
        .map(|_| {
            let d = step * rng.gen_range(1..=(max / step).max(1));
            split_degree(rng, d, p)
        })
        .collect();
    let residue = split_degree(rng, r, p);
    PinchPoint::from_degrees(base, label, residue, &fibers).unwrap()
}

/// A valid configuration over a local field with at most `max_points`
/// points and every degree at most `max`.
pub fn local_config(rng: &mut impl Rng, min_points: usize, max_points: usize, max: u64) -> PinchingConfig {
    let base = local_base(rng);
    let cover = local_cover(rng, &base, max);
    let index = cover.index().unwrap();
    let n = rng.gen_range(min_points..=max_points);
    let points = (0..n)
        .map(|i| point(rng, &base, &format!("y{i}"), index, max))
        .collect();
    PinchingConfig::new(cover, points)
}

/// A general cover with trivial Amitsur subgroup and `Br₁ = Br k`.
pub fn general_cover(base: &FieldSpec) -> CoverData {
    CoverData {
        base: base.clone(),
        kind: CoverKind::General,
        amitsur: QzSubgroup::trivial(),
        br_a: AbGroup::trivial(),
        br1: brauer_pinch::field::brauer_group(base),
        closed_point_degrees: None,
        declared_index: None,
        smooth_normalization: false,
    }
}

/// Any base field, including imperfect abstract ones.
pub fn any_base(rng: &mut impl Rng) -> FieldSpec {
    use brauer_pinch::FieldKind;
    match rng.gen_range(0..6) {
        0 => FieldSpec::p_adic(*[2, 3, 5].choose(rng).unwrap()),
        1 => FieldSpec::local_function_field(*[2, 3].choose(rng).unwrap()),
        2 => FieldSpec::finite(*[2, 3, 5].choose(rng).unwrap()),
        3 => FieldSpec::new(FieldKind::RealClosed, "R"),
        4 => FieldSpec::abstract_field(*[2, 3].choose(rng).unwrap(), "k"),
        _ => FieldSpec::new(FieldKind::AbstractPerfect { char_exponent: 1 }, "k"),
    }
}

/// A configuration whose normalization map is a universal homeomorphism.
pub fn universal_homeomorphism_config(rng: &mut impl Rng) -> PinchingConfig {
    let base = any_base(rng);
    let cover = if base.is_local() && rng.gen_bool(0.5) {
        local_cover(rng, &base, 12)
    } else if rng.gen_bool(0.5) {
        CoverData::ch0_trivial(base.clone())
    } else {
        general_cover(&base)
    };
    let index = cover.index().unwrap_or(1);
    let p = inseparable_prime(&base);
    let real = base.kind == brauer_pinch::FieldKind::RealClosed;
    let n = rng.gen_range(1..=4);
    let points = (0..n)
        .map(|i| {
            let r = if real { rng.gen_range(1..=2) } else { index * rng.gen_range(1..=4) };
            let residue = split_degree(rng, r, p);
            let j = if p > 1 { rng.gen_range(0..=3) } else { 0 };
            PinchPoint::from_degrees(&base, format!("y{i}"), residue, &[(p.pow(j), 1)]).unwrap()
        })
        .collect();
    PinchingConfig::new(cover, points)
}

/// One step of a seminormalization chain: every fiber is a single point
/// with the same residue field.
pub fn residue_iso_config(rng: &mut impl Rng, base: &FieldSpec) -> PinchingConfig {
    let cover = general_cover(base);
    let n = rng.gen_range(1..=3);
    let points = (0..n)
        .map(|i| PinchPoint::separable(base, format!("x{i}"), rng.gen_range(1..=6), &[1]).unwrap())
        .collect();
    PinchingConfig::new(cover, points)
}
