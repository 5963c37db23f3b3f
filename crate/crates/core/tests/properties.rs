mod common;

use brauer_pinch::cli::config::{parse_document, InputDocument};
use brauer_pinch::cli::corpus;
use brauer_pinch::field::{brauer_torsion, relative_brauer};
use brauer_pinch::oracle::{self, enumerate_subgroup, OracleCaps};
use brauer_pinch::pinch::{self, annihilator_bound, fiber_index, locus_index, pinched_index_constraint, validate};
use brauer_pinch::qz::{self, cyclic};
use brauer_pinch::theorems::{self, analyze, intersection_factor};
use brauer_pinch::{AbGroup, ExtensionSpec, FieldKind, FieldSpec, FiniteGroup, GroupOrder, Order, PinchPoint, PinchingConfig};
use proptest::prelude::*;

fn finite(g: &AbGroup) -> Option<u64> {
    match g.order() {
        GroupOrder::Finite(n) => n.to_u64(),
        _ => None,
    }
}

fn any_field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        prop::sample::select(vec![2u64, 3, 5, 7]).prop_map(FieldSpec::p_adic),
        prop::sample::select(vec![2u64, 3]).prop_map(FieldSpec::local_function_field),
        prop::sample::select(vec![2u64, 3, 5]).prop_map(FieldSpec::finite),
        Just(FieldSpec::new(FieldKind::RealClosed, "R")),
        Just(FieldSpec::new(FieldKind::AlgebraicallyClosed { char_exponent: 1 }, "C")),
        prop::sample::select(vec![1u64, 2, 3]).prop_map(|p| FieldSpec::abstract_field(p, "k")),
        Just(FieldSpec::new(FieldKind::AbstractPerfect { char_exponent: 1 }, "k")),
    ]
}

/// A valid extension of the given field of degree at most 64.
fn extension_of(base: FieldSpec) -> impl Strategy<Value = ExtensionSpec> {
    let max = match base.kind {
        FieldKind::RealClosed => 2,
        FieldKind::AlgebraicallyClosed { .. } => 1,
        _ => 64u64,
    };
    let p = common::inseparable_prime(&base);
    (1..=max, 0u32..=3).prop_map(move |(s, j)| {
        let q = if p > 1 { p.pow(j) } else { 1 };
        ExtensionSpec::new(base.clone(), s * q, s, "K").unwrap()
    })
}

proptest! {
    #[test]
    fn lattice_laws(a in 1u64..400, b in 1u64..400, c in 1u64..400) {
        let (a, b, c) = (cyclic(a).unwrap(), cyclic(b).unwrap(), cyclic(c).unwrap());
        prop_assert_eq!(a.intersect(&b), b.intersect(&a));
        prop_assert_eq!(a.join(&b), b.join(&a));
        prop_assert_eq!(a.intersect(&b).intersect(&c), a.intersect(&b.intersect(&c)));
        prop_assert_eq!(a.join(&b).join(&c), a.join(&b.join(&c)));
        prop_assert_eq!(a.intersect(&a), a.clone());
        prop_assert_eq!(a.join(&a), a.clone());
        prop_assert_eq!(a.intersect(&a.join(&b)), a.clone());
        prop_assert_eq!(a.join(&a.intersect(&b)), a.clone());
    }

    #[test]
    fn lattice_matches_enumeration(a in 1u64..300, b in 1u64..300) {
        let caps = OracleCaps::default();
        let n = num_integer::lcm(a, b);
        let (ea, eb) = (enumerate_subgroup(a, n, &caps).unwrap(), enumerate_subgroup(b, n, &caps).unwrap());
        let (qa, qb) = (cyclic(a).unwrap(), cyclic(b).unwrap());
        prop_assert_eq!(Some(ea.intersect(&eb, &caps).unwrap().order()), qa.intersect(&qb).known_order().and_then(Order::to_u64));
        prop_assert_eq!(Some(ea.join(&eb, &caps).unwrap().order()), qa.join(&qb).known_order().and_then(Order::to_u64));
    }

    #[test]
    fn enumerated_subgroups(n in 1u64..200, k in 1u64..6) {
        let caps = OracleCaps::default();
        let g = enumerate_subgroup(n, n * k, &caps).unwrap();
        prop_assert_eq!(g.order(), n);
        prop_assert!(g.is_subgroup());
        prop_assert!(g.contains(0));
    }

    #[test]
    fn census_ignores_order(mut list in prop::collection::vec(2u64..20, 0..4)) {
        let caps = OracleCaps::default();
        let before = oracle::census_invariant_factors(&list, &caps).unwrap();
        prop_assert_eq!(&before, &oracle::census_invariant_factors(&list, &caps).unwrap());
        list.reverse();
        prop_assert_eq!(before, oracle::census_invariant_factors(&list, &caps).unwrap());
    }

    #[test]
    fn invariant_factors_chain(list in prop::collection::vec(1u64..5000, 0..6)) {
        let g = qz::product(list.iter().map(|&m| AbGroup::cyclic(Order::from_u64(m).unwrap())));
        let k = g.as_known().unwrap();
        let f = k.invariant_factors();
        prop_assert!(f.windows(2).all(|w| w[0].divides(&w[1])));
        prop_assert!(f.iter().all(|d| !d.is_one()));
        let total = list.iter().fold(Order::one(), |acc, &m| acc.mul(&Order::from_u64(m).unwrap()));
        prop_assert_eq!(k.order(), total);
    }

    #[test]
    fn extension_bookkeeping(a in prop::collection::vec(2u64..50, 0..3), b in prop::collection::vec(2u64..50, 0..3)) {
        let ga = AbGroup::Known(FiniteGroup::from_cyclic_orders(&a.iter().map(|&m| Order::from_u64(m).unwrap()).collect::<Vec<_>>()));
        let gb = AbGroup::Known(FiniteGroup::from_cyclic_orders(&b.iter().map(|&m| Order::from_u64(m).unwrap()).collect::<Vec<_>>()));
        let e = qz::extension(ga.clone(), gb.clone());
        let (oa, ob) = (ga.order().finite().cloned().unwrap(), gb.order().finite().cloned().unwrap());
        prop_assert_eq!(e.order().finite().cloned(), Some(oa.mul(&ob)));
        let (xa, xb) = (ga.exponent().bound().cloned().unwrap(), gb.exponent().bound().cloned().unwrap());
        prop_assert!(e.exponent().bound().unwrap().divides(&xa.mul(&xb)));
    }

    #[test]
    fn relative_brauer_divides_degree(e in any_field().prop_flat_map(extension_of)) {
        let n = Order::from_u64(e.total_degree).unwrap();
        let r = relative_brauer(&e);
        prop_assert!(r.exponent().bound().unwrap().divides(&n));
        if e.base.is_local() {
            prop_assert_eq!(r.known_order(), Some(&n));
        }
        if e.total_degree == 1 {
            prop_assert!(r.is_trivial());
        }
        if e.base.is_perfect() {
            prop_assert_eq!(e.inseparable_degree, 1);
        }
    }

    #[test]
    fn torsion_divides(f in any_field(), m in 1u64..500) {
        let m = Order::from_u64(m).unwrap();
        prop_assert!(brauer_torsion(&f, &m).exponent().bound().unwrap().divides(&m));
    }

    #[test]
    fn perfect_bases_reject_inseparable(p in prop::sample::select(vec![2u64, 3, 5]), j in 1u32..4) {
        let q = p.pow(j);
        prop_assert!(ExtensionSpec::new(FieldSpec::finite(p), q, 1, "K").is_err());
        prop_assert!(ExtensionSpec::new(FieldSpec::local_function_field(p), q, 1, "K").is_ok());
    }

    #[test]
    fn index_divisibility(seed in any::<u64>()) {
        let c = common::local_config(&mut common::rng(seed), 1, 4, 30);
        for p in &c.points {
            let f = fiber_index(p);
            prop_assert!(p.fibers.iter().all(|x| x.total_degree % f == 0));
            let m = annihilator_bound(&c).unwrap();
            prop_assert!(Order::from_u64(f).unwrap().divides(&m));
        }
        let locus = locus_index(&c.points).unwrap();
        prop_assert!(c.points.iter().all(|p| p.residue.total_degree % locus == 0));
        let k = pinched_index_constraint(&c).unwrap();
        prop_assert_eq!(c.cover.index().unwrap() % k, 0);
        prop_assert_eq!(locus % k, 0);
        let b = theorems::amitsur_pinched(&c).known_order().and_then(Order::to_u64).unwrap();
        prop_assert_eq!(k % b, 0);
    }

    #[test]
    fn validate_is_pure(seed in any::<u64>()) {
        let c = common::local_config(&mut common::rng(seed), 0, 4, 30);
        let v = validate(&c);
        prop_assert!(v.is_empty());
        prop_assert_eq!(v, validate(&c));
        prop_assert!(analyze(&c).is_ok());
    }

    #[test]
    fn analyze_is_deterministic(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let c = if seed % 2 == 0 {
            common::local_config(&mut rng, 0, 4, 30)
        } else {
            common::universal_homeomorphism_config(&mut rng)
        };
        prop_assert_eq!(analyze(&c).unwrap(), analyze(&c.clone()).unwrap());
    }

    #[test]
    fn kernel_order(seed in any::<u64>()) {
        let c = common::local_config(&mut common::rng(seed), 1, 4, 30);
        let r = analyze(&c).unwrap();
        let (k, q, x) = (finite(&r.ker_phi1).unwrap(), finite(&r.amitsur_quotient).unwrap(), finite(&r.coker_injection).unwrap());
        prop_assert_eq!(k, q * x);
    }

    #[test]
    fn ch0_trivial_covers(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let base = common::local_base(&mut rng);
        let cover = brauer_pinch::CoverData::ch0_trivial(base.clone());
        let points = (0..3).map(|i| common::point(&mut rng, &base, &format!("y{i}"), 1, 20)).collect();
        let c = PinchingConfig::new(cover, points);
        let r = analyze(&c).unwrap();
        prop_assert_eq!(&r.ker_phi1, &r.intersection_product);
        prop_assert_eq!(r.br1_pinched, qz::product([brauer_pinch::field::brauer_group(&base), r.intersection_product.clone()]));
    }

    #[test]
    fn universal_homeomorphisms(seed in any::<u64>()) {
        let c = common::universal_homeomorphism_config(&mut common::rng(seed));
        let r = analyze(&c).unwrap();
        prop_assert!(r.coker_phi_a.is_trivial());
        let k = theorems::kernel_phi1(&c).unwrap();
        prop_assert_eq!(r.br1_pinched, if c.cover.kind == brauer_pinch::CoverKind::Ch0Trivial {
            qz::product([c.cover.br1.clone(), k.ker])
        } else {
            qz::extension(k.ker, c.cover.br1.clone())
        });
    }

    #[test]
    fn scaling_a_point(
        r in 1u64..10,
        degrees in prop::collection::vec(1u64..10, 1..4),
        c in prop::sample::select(vec![1u64, 7, 11, 13]),
    ) {
        let base = FieldSpec::p_adic(5);
        let caps = OracleCaps::default();
        let before = PinchPoint::separable(&base, "y", r, &degrees).unwrap();
        let scaled: Vec<u64> = degrees.iter().map(|d| d * c).collect();
        let after = PinchPoint::separable(&base, "y", r, &scaled).unwrap();
        let g = |p: &PinchPoint| intersection_factor(p).known_order().and_then(Order::to_u64).unwrap();
        prop_assert_eq!(g(&after), g(&before) * c);
        // the oracle agrees on the scaled point
        let cfg = PinchingConfig::new(brauer_pinch::CoverData::ch0_trivial(base), vec![after]);
        let report = analyze(&cfg).unwrap();
        prop_assert!(oracle::verify_report(&cfg, &report, &caps).unwrap().passed());
    }
}

#[test]
fn corpus_round_trips() {
    for e in corpus::ENTRIES {
        let doc = parse_document(e.config.as_bytes()).unwrap();
        let emitted = match &doc {
            InputDocument::Config(d) => serde_json::to_vec(d).unwrap(),
            InputDocument::Chain(d) => serde_json::to_vec(d).unwrap(),
        };
        assert_eq!(parse_document(&emitted).unwrap(), doc, "{}", e.name);
    }
}

#[test]
fn oracle_passes_on_the_exact_corpus() {
    let caps = OracleCaps::default();
    for e in corpus::ENTRIES {
        let Ok(InputDocument::Config(doc)) = parse_document(e.config.as_bytes()) else {
            continue;
        };
        let c = brauer_pinch::cli::config::to_config(&doc).unwrap();
        if !c.is_exact_regime() {
            continue;
        }
        let r = analyze(&c).unwrap();
        assert!(oracle::verify_report(&c, &r, &caps).unwrap().passed(), "{}", e.name);
    }
}

#[test]
fn empty_locus_is_the_identity() {
    let base = FieldSpec::p_adic(7);
    let c = PinchingConfig::new(brauer_pinch::CoverData::smooth_curve(base, 3).unwrap(), vec![]);
    let r = analyze(&c).unwrap();
    assert_eq!(r.amitsur_pinched, r.amitsur_cover);
    assert!(r.ker_phi1.is_trivial());
    assert!(r.coker_phi_a.is_trivial());
    assert_eq!(r.br1_pinched, c.cover.br1);
    assert_eq!(pinch::locus_index(&c.points).ok(), None);
}
