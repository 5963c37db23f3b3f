//! The structure theorems for pinchings, evaluated on a [`PinchingConfig`].
//!
//! Each function reads only degrees and field kinds. Exact answers come out
//! over local and finite fields; elsewhere the results carry exponent bounds
//! and a caveat saying what is left undetermined.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{self, FieldKind};
use crate::order::Order;
use crate::pinch::{self, PinchPoint, PinchingConfig};
use crate::qz::{self, AbGroup, Exponent, GroupOrder, QzSubgroup};

/// A structure result used while evaluating a configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theorem {
    LocalInvariant,
    AmitsurIntersection,
    QuotientInjection,
    KernelExtension,
    SplitCh0Trivial,
    SeveriBrauerAmitsur,
    H2Extension,
    Br1Sequence,
    UniversalHomeomorphism,
    ResidueIsomorphism,
    Seminormalization,
    IndexDivisibility,
    AnnihilatorBound,
    IndexOrder,
    RealClosedRule,
}

impl Theorem {
    pub fn tag(self) -> &'static str {
        match self {
            Theorem::LocalInvariant => "local-invariant",
            Theorem::AmitsurIntersection => "amitsur-intersection",
            Theorem::QuotientInjection => "quotient-injection",
            Theorem::KernelExtension => "kernel-extension",
            Theorem::SplitCh0Trivial => "split-ch0-trivial",
            Theorem::SeveriBrauerAmitsur => "severi-brauer-amitsur",
            Theorem::H2Extension => "h2-extension",
            Theorem::Br1Sequence => "br1-sequence",
            Theorem::UniversalHomeomorphism => "universal-homeomorphism",
            Theorem::ResidueIsomorphism => "residue-isomorphism",
            Theorem::Seminormalization => "seminormalization",
            Theorem::IndexDivisibility => "index-divisibility",
            Theorem::AnnihilatorBound => "annihilator-bound",
            Theorem::IndexOrder => "index-order",
            Theorem::RealClosedRule => "real-closed-rule",
        }
    }

    pub fn citation(self) -> &'static str {
        match self {
            Theorem::LocalInvariant => {
                "local invariant map: Br(K/k) = [K:k]^-1 Z/Z for finite K/k over a local field"
            }
            Theorem::AmitsurIntersection => {
                "intersection formula: B(X/k) = B(X~/k) meet the Br(k(y)/k) for y in Y"
            }
            Theorem::QuotientInjection => {
                "injection B(X~/k)/B(X/k) -> prod_y meet_y~ Br(k(y~)/k(y))"
            }
            Theorem::KernelExtension => {
                "ker phi1* is an extension of the injection cokernel by B(X~/k)/B(X/k)"
            }
            Theorem::SplitCh0Trivial => {
                "CH0-trivial cover: Br1 X = Br k (+) prod_y meet_y~ Br(k(y~)/k(y)) via the section f*"
            }
            Theorem::SeveriBrauerAmitsur => {
                "Severi-Brauer cover: B(X~/k) is generated by the class of X~ and Br_a X~ = 0"
            }
            Theorem::H2Extension => {
                "H^2(k, mu) is an extension of prod meet H^3(k(y~)/k(y)) by prod coker[Br k(y) -> prod Br k(y~)]"
            }
            Theorem::Br1Sequence => {
                "exact sequence 0 -> ker phi1* -> Br1 X -> Br1 X~ -> coker phi_a* -> 0"
            }
            Theorem::UniversalHomeomorphism => {
                "universal homeomorphism: H^2(k, mu) = 0, so coker phi_a* = 0 and Br(k(y~)/k(y)) = Br(k(y))_{p^n}"
            }
            Theorem::ResidueIsomorphism => {
                "residue isomorphisms: ker phi1* = 0 and coker phi_a* = 0"
            }
            Theorem::Seminormalization => {
                "seminormalization chain: every step induces an isomorphism on Br1"
            }
            Theorem::IndexDivisibility => "index divisibility: I(X) | gcd(I(X~), I(Y))",
            Theorem::AnnihilatorBound => {
                "annihilator: m(Y~/Y) = lcm_y I(Y~_y) kills prod_y meet_y~ Br(k(y~)/k(y))"
            }
            Theorem::IndexOrder => {
                "index order: #B(X/k) = gcd(I(X^N), I(Y)) = I(X) for curves with smooth normalization over a local field"
            }
            Theorem::RealClosedRule => {
                "real closed fields: Br R = Z/2 and Br(C/R) = Z/2 (standard, outside the local theory)"
            }
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// `∩_ỹ Br(κ(ỹ)/κ(y))`.
pub fn intersection_factor(p: &PinchPoint) -> QzSubgroup {
    p.fibers
        .iter()
        .fold(QzSubgroup::Full, |acc, f| acc.intersect(&field::relative_brauer(f)))
}

/// `∏_y ∩_ỹ Br(κ(ỹ)/κ(y))`.
pub fn intersection_product(config: &PinchingConfig) -> AbGroup {
    qz::product(config.points.iter().map(|p| intersection_factor(p).to_group()))
}

/// `B(X/k) = B(X̃/k) ∩ ∩_y Br(κ(y)/k)`.
pub fn amitsur_pinched(config: &PinchingConfig) -> QzSubgroup {
    config.points.iter().fold(config.cover.amitsur.clone(), |acc, p| {
        acc.intersect(&field::relative_brauer(&p.residue))
    })
}

/// `B(X̃/k)/B(X/k)`, a cyclic group.
pub fn amitsur_quotient(config: &PinchingConfig) -> Result<QzSubgroup> {
    let cover = &config.cover.amitsur;
    let pinched = amitsur_pinched(config);
    if pinched.is_trivial() {
        return match cover {
            QzSubgroup::Full => Err(Error::InconsistentConfiguration(
                "the Amitsur subgroup of the cover is infinite".into(),
            )),
            other => Ok(other.clone()),
        };
    }
    if pinched == *cover {
        return Ok(QzSubgroup::trivial());
    }
    match (cover, &pinched) {
        (QzSubgroup::Cyclic(a), QzSubgroup::Cyclic(b)) => a
            .checked_div(b)
            .map(QzSubgroup::Cyclic)
            .ok_or_else(|| {
                Error::InconsistentConfiguration(format!(
                    "B(X/k) of order {b} is not a subgroup of B(X~/k) of order {a}"
                ))
            }),
        (QzSubgroup::Full, _) => Err(Error::InconsistentConfiguration(
            "the Amitsur subgroup of the cover is infinite".into(),
        )),
        _ => Ok(QzSubgroup::bounded(
            match cover.exponent() {
                Exponent::Divides(e) => e,
                Exponent::Unbounded => unreachable!("finite cover subgroup"),
            },
            "B(X~/k)/B(X/k)",
        )),
    }
}

/// The kernel of `φ₁*: Br₁ X → Br₁ X̃` with its two layers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelPhi1 {
    pub ker: AbGroup,
    /// `B(X̃/k)/B(X/k)`.
    pub quotient: AbGroup,
    /// Cokernel of the injection of the quotient into the intersection product.
    pub coker_injection: AbGroup,
    /// The kernel is known to be the intersection product itself.
    pub split: bool,
}

pub fn kernel_phi1(config: &PinchingConfig) -> Result<KernelPhi1> {
    let product = intersection_product(config);
    if config.cover.amitsur.is_trivial() {
        return Ok(KernelPhi1 {
            ker: product.clone(),
            quotient: AbGroup::trivial(),
            coker_injection: product,
            split: true,
        });
    }
    let q = amitsur_quotient(config)?;
    let coker = qz::coker_of_injection(&q, &product).map_err(|e| match e {
        Error::InconsistentConfiguration(m) => Error::InconsistentConfiguration(format!(
            "B(X~/k)/B(X/k) must inject into the intersection product: {m}"
        )),
        other => other,
    })?;
    let quotient = q.to_group();
    Ok(KernelPhi1 {
        ker: qz::extension(quotient.clone(), coker.clone()),
        quotient,
        coker_injection: coker,
        split: false,
    })
}

/// `H²(k, μ^{Ỹ/Y})` and its two layers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H2Mu {
    pub group: AbGroup,
    /// `∏_y coker[Br κ(y) → ∏_ỹ Br κ(ỹ)]`.
    pub restriction_coker: AbGroup,
    /// `∏_y ∩_ỹ H³(κ(ỹ)/κ(y))`.
    pub h3_part: AbGroup,
}

fn restriction_coker(p: &PinchPoint) -> AbGroup {
    if p.is_residue_iso() || p.fibers.iter().all(|f| f.top_field().has_trivial_brauer_group()) {
        return AbGroup::trivial();
    }
    if p.residue.top_field().is_local() {
        // restriction multiplies invariants by the degree, so Q/Z -> Q/Z is onto
        if p.fibers.len() == 1 {
            return AbGroup::trivial();
        }
        return AbGroup::unknown(
            Exponent::Unbounded,
            GroupOrder::Infinite,
            format!("coker[Br k({0}) -> prod Br k({0}~)], divisible", p.label),
        );
    }
    AbGroup::unknown(
        Exponent::Unbounded,
        GroupOrder::Unknown,
        format!("coker[Br k({0}) -> prod Br k({0}~)]", p.label),
    )
}

fn h3_factor(p: &PinchPoint) -> QzSubgroup {
    p.fibers
        .iter()
        .fold(QzSubgroup::Full, |acc, f| acc.intersect(&field::relative_h3(f)))
}

pub fn h2_mu(config: &PinchingConfig) -> H2Mu {
    // over a universally homeomorphic point the contribution vanishes
    let points: Vec<&PinchPoint> = config
        .points
        .iter()
        .filter(|p| !p.is_universal_homeomorphism())
        .collect();
    let restriction = qz::product(points.iter().map(|p| restriction_coker(p)));
    let h3_part = qz::product(points.iter().map(|p| h3_factor(p).to_group()));
    H2Mu {
        group: qz::extension(restriction.clone(), h3_part.clone()),
        restriction_coker: restriction,
        h3_part,
    }
}

/// `coker φ_a*`, a subgroup of `H²(k, μ)` and a quotient of `Br_a X̃`.
pub fn coker_phia(config: &PinchingConfig, h2: &H2Mu) -> AbGroup {
    if h2.group.is_trivial() || config.cover.br_a.is_trivial() {
        return AbGroup::trivial();
    }
    let exponent = match (h2.group.exponent(), config.cover.br_a.exponent()) {
        (Exponent::Divides(a), Exponent::Divides(b)) => Exponent::Divides(a.gcd(&b)),
        (Exponent::Divides(a), _) | (_, Exponent::Divides(a)) => Exponent::Divides(a),
        _ => Exponent::Unbounded,
    };
    AbGroup::unknown(exponent, GroupOrder::Unknown, "coker phi_a*, a subgroup of H^2(k, mu)")
}

/// `Br₁ X`.
pub fn br1_pinched(config: &PinchingConfig, ker: &KernelPhi1, coker_phia: &AbGroup) -> AbGroup {
    if config.cover.kind == pinch::CoverKind::Ch0Trivial {
        return qz::product([field::brauer_group(config.base()), ker.ker.clone()]);
    }
    if coker_phia.is_trivial() {
        return qz::extension(ker.ker.clone(), config.cover.br1.clone());
    }
    let image = AbGroup::unknown(
        config.cover.br1.exponent(),
        GroupOrder::Unknown,
        "ker[Br1 X~ -> coker phi_a*]",
    );
    qz::extension(ker.ker.clone(), image)
}

/// Outcome of the index-order theorem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexOrder {
    pub order: u64,
    /// The order is `I(X)`.
    pub equals_index: bool,
}

/// `#B(X/k) = gcd(I(X^N), I(Y))` for a curve with smooth normalization
/// over a local field.
pub fn roquette_lichtenbaum(config: &PinchingConfig) -> Result<IndexOrder> {
    if !config.base().is_local() {
        return Err(Error::TheoremNotApplicable(format!(
            "{} is not a non-archimedean local field",
            config.base().label
        )));
    }
    if !config.cover.smooth_normalization {
        return Err(Error::TheoremNotApplicable(
            "the normalization is not declared smooth".into(),
        ));
    }
    let cover_index = config.cover.index().ok_or_else(|| {
        Error::IncompleteConfiguration("the cover has no closed-point degrees or index".into())
    })?;
    let order = if config.points.is_empty() {
        cover_index
    } else {
        pinch::pinched_index_constraint(config)?
    };
    if let Some(b) = amitsur_pinched(config).known_order() {
        if b.to_u64() != Some(order) {
            return Err(Error::InconsistentConfiguration(format!(
                "B(X/k) has order {b}, but the index formula gives {order}"
            )));
        }
    }
    Ok(IndexOrder {
        order,
        equals_index: true,
    })
}

/// Per-step outcome of a seminormalization chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainStep {
    pub ker_phi1: AbGroup,
    pub coker_phi_a: AbGroup,
    pub br1: AbGroup,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainReport {
    pub steps: Vec<ChainStep>,
    pub all_isomorphisms: bool,
}

/// Checks that every step of `X^SN = X_1 → … → X_{n+1} = X` induces an
/// isomorphism on `Br₁`.
pub fn seminormalization_chain(steps: &[PinchingConfig]) -> Result<ChainReport> {
    let mut out = Vec::with_capacity(steps.len());
    for (i, step) in steps.iter().enumerate() {
        if !step.is_residue_iso() {
            return Err(Error::InvalidChain(format!(
                "step {} does not induce isomorphisms on residue fields",
                i + 1
            )));
        }
        let violations = pinch::validate(step);
        if !violations.is_empty() {
            return Err(Error::InvalidChain(format!(
                "step {}: {}",
                i + 1,
                join_violations(&violations)
            )));
        }
        let ker = kernel_phi1(step)?;
        let h2 = h2_mu(step);
        let coker = coker_phia(step, &h2);
        let br1 = br1_pinched(step, &ker, &coker);
        out.push(ChainStep {
            ker_phi1: ker.ker,
            coker_phi_a: coker,
            br1,
        });
    }
    let all_isomorphisms = out
        .iter()
        .all(|s| s.ker_phi1.is_trivial() && s.coker_phi_a.is_trivial());
    Ok(ChainReport {
        steps: out,
        all_isomorphisms,
    })
}

/// Index data of a configuration.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IndexFacts {
    pub cover_index: Option<u64>,
    pub locus_index: Option<u64>,
    pub constraint_divisor: Option<u64>,
    pub annihilator_bound: Option<Order>,
    pub rl_order: Option<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Predicates {
    pub universal_homeomorphism: bool,
    pub residue_iso: bool,
    pub exact_regime: bool,
}

/// Everything computed for one configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerReport {
    pub intersection_product: AbGroup,
    pub amitsur_cover: QzSubgroup,
    pub amitsur_pinched: QzSubgroup,
    pub amitsur_quotient: AbGroup,
    pub coker_injection: AbGroup,
    pub ker_phi1: AbGroup,
    pub ker_phi1_split: bool,
    pub h2_mu: AbGroup,
    pub coker_phi_a: AbGroup,
    pub br1_pinched: AbGroup,
    pub index_facts: IndexFacts,
    pub predicates: Predicates,
    pub applied: Vec<Theorem>,
    pub caveats: Vec<String>,
}

fn join_violations(v: &[pinch::Violation]) -> String {
    v.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}

fn has_unknown(g: &AbGroup) -> bool {
    match g {
        AbGroup::Unknown { .. } | AbGroup::SymbolicBr(_) => true,
        AbGroup::Extension { sub, quot, .. } => has_unknown(sub) || has_unknown(quot),
        AbGroup::DirectSum(s) => s.iter().any(has_unknown),
        AbGroup::Known(_) | AbGroup::FullQmodZ => false,
    }
}

/// Runs every applicable theorem on a validated configuration.
pub fn analyze(config: &PinchingConfig) -> Result<BrauerReport> {
    let violations = pinch::validate(config);
    if !violations.is_empty() {
        return Err(Error::InconsistentConfiguration(join_violations(&violations)));
    }
    let base = config.base();
    let mut applied = vec![Theorem::AmitsurIntersection, Theorem::IndexDivisibility];
    let mut caveats = Vec::new();

    if base.is_local() {
        applied.push(Theorem::LocalInvariant);
    }
    if base.kind == FieldKind::RealClosed {
        applied.push(Theorem::RealClosedRule);
        caveats.push(
            "real closed base: evaluated with Br R = Z/2, a standard fact outside the local theory"
                .to_string(),
        );
    }
    if matches!(config.cover.kind, pinch::CoverKind::SeveriBrauer { .. }) {
        applied.push(Theorem::SeveriBrauerAmitsur);
    }

    let product = intersection_product(config);
    let pinched = amitsur_pinched(config);
    let ker = kernel_phi1(config)?;
    if !config.points.is_empty() {
        applied.extend([Theorem::QuotientInjection, Theorem::KernelExtension]);
    }

    let uh = config.is_universal_homeomorphism();
    let residue_iso = config.is_residue_iso();
    let h2 = h2_mu(config);
    if uh {
        applied.push(Theorem::UniversalHomeomorphism);
    } else {
        applied.push(Theorem::H2Extension);
        if has_unknown(&h2.group) {
            caveats.push(
                "H^2(k, mu): only triviality and exponent data are asserted; the extension is not split"
                    .to_string(),
            );
        }
    }
    if residue_iso && !config.points.is_empty() {
        applied.push(Theorem::ResidueIsomorphism);
    }
    let coker = coker_phia(config, &h2);
    let br1 = br1_pinched(config, &ker, &coker);
    applied.push(Theorem::Br1Sequence);
    if config.cover.kind == pinch::CoverKind::Ch0Trivial {
        applied.push(Theorem::SplitCh0Trivial);
    }

    let cover_index = config.cover.index();
    let locus_index = pinch::locus_index(&config.points).ok();
    let annihilator = pinch::annihilator_bound(config).ok();
    if annihilator.is_some() {
        applied.push(Theorem::AnnihilatorBound);
    }
    let constraint_divisor = match (cover_index, locus_index) {
        (Some(c), Some(l)) => Some(num_integer::gcd(c, l)),
        (Some(c), None) => Some(c),
        _ => None,
    };
    if cover_index.is_none() {
        caveats.push("no index data for the cover: index facts are incomplete".to_string());
    }

    let mut rl_order = None;
    if base.is_local() && config.cover.smooth_normalization {
        match roquette_lichtenbaum(config) {
            Ok(r) => {
                rl_order = Some(r.order);
                applied.push(Theorem::IndexOrder);
            }
            Err(Error::IncompleteConfiguration(m)) => {
                caveats.push(format!("index-order theorem skipped: {m}"));
            }
            Err(e) => return Err(e),
        }
    }

    let slots: [(&str, &AbGroup); 6] = [
        ("intersectionProduct", &product),
        ("cokerInjection", &ker.coker_injection),
        ("kerPhi1", &ker.ker),
        ("h2Mu", &h2.group),
        ("cokerPhiA", &coker),
        ("br1Pinched", &br1),
    ];
    for (name, g) in slots {
        if has_unknown(g) {
            caveats.push(format!("{name}: {g} is not fully determined"));
        }
    }
    if matches!(pinched, QzSubgroup::Bounded { .. }) {
        caveats.push(format!(
            "amitsurPinched: {} is only bounded, not computed",
            pinched.to_group()
        ));
    }
    if !matches!(config.cover.kind, pinch::CoverKind::Ch0Trivial) && !ker.split && !ker.ker.is_trivial() {
        caveats.push("kerPhi1: reported as an extension; no splitting is asserted".to_string());
    }

    applied.sort();
    applied.dedup();
    Ok(BrauerReport {
        intersection_product: product,
        amitsur_cover: config.cover.amitsur.clone(),
        amitsur_pinched: pinched,
        amitsur_quotient: ker.quotient.clone(),
        coker_injection: ker.coker_injection.clone(),
        ker_phi1: ker.ker.clone(),
        ker_phi1_split: ker.split,
        h2_mu: h2.group,
        coker_phi_a: coker,
        br1_pinched: br1,
        index_facts: IndexFacts {
            cover_index,
            locus_index,
            constraint_divisor,
            annihilator_bound: annihilator,
            rl_order,
        },
        predicates: Predicates {
            universal_homeomorphism: uh,
            residue_iso,
            exact_regime: config.is_exact_regime(),
        },
        applied,
        caveats,
    })
}
