//! Pinching configurations: a cover `X̃`, a finite pinch locus `Y`, and for
//! each point `y ∈ Y` the residue fields of the fiber `Ỹ_y`.
//!
//! Only residue-field data is modeled. A non-reduced fiber such as
//! `κ(x)[ε]/(ε²)` enters as a fiber of degree 1.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{self, ExtensionSpec, FieldSpec};
use crate::order::Order;
use crate::qz::{AbGroup, GroupOrder, QzSubgroup};

/// One failed structural check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub code: &'static str,
    pub message: String,
}

impl Violation {
    pub fn new(code: &'static str, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.code, self.message)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CoverKind {
    /// Universally CH₀-trivial: `Br F → Br X̃_F` is an isomorphism for every `F/k`.
    Ch0Trivial,
    /// A Severi–Brauer variety whose class has the given order in `Br k`.
    SeveriBrauer { class_order: u64 },
    SmoothCurve,
    RegularCurve,
    General,
}

impl CoverKind {
    pub fn name(&self) -> &'static str {
        match self {
            CoverKind::Ch0Trivial => "ch0-trivial",
            CoverKind::SeveriBrauer { .. } => "severi-brauer",
            CoverKind::SmoothCurve => "smooth-curve",
            CoverKind::RegularCurve => "regular-curve",
            CoverKind::General => "general",
        }
    }
}

/// Data of the cover `X̃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverData {
    pub base: FieldSpec,
    pub kind: CoverKind,
    /// `B(X̃/k) = ker[Br k → Br X̃]`.
    pub amitsur: QzSubgroup,
    /// `Br_a X̃ = coker[Br k → Br₁ X̃]`.
    pub br_a: AbGroup,
    /// `Br₁ X̃`.
    pub br1: AbGroup,
    pub closed_point_degrees: Option<Vec<u64>>,
    pub declared_index: Option<u64>,
    /// The normalization of the pinched variety is smooth.
    pub smooth_normalization: bool,
}

impl CoverData {
    /// A universally CH₀-trivial cover such as `ℙⁿ`.
    pub fn ch0_trivial(base: FieldSpec) -> Self {
        Self {
            br1: field::brauer_group(&base),
            base,
            kind: CoverKind::Ch0Trivial,
            amitsur: QzSubgroup::trivial(),
            br_a: AbGroup::trivial(),
            closed_point_degrees: None,
            declared_index: Some(1),
            smooth_normalization: true,
        }
    }

    /// A Severi–Brauer variety with class of order `class_order`.
    pub fn severi_brauer(base: FieldSpec, class_order: u64) -> Result<Self> {
        let m = Order::from_u64(class_order)
            .ok_or_else(|| Error::InvalidArgument("class order must be at least 1".into()))?;
        let declared_index = base.is_local().then_some(class_order);
        Ok(Self {
            br1: severi_brauer_br1(&base, &m),
            base,
            kind: CoverKind::SeveriBrauer { class_order },
            amitsur: QzSubgroup::Cyclic(m),
            br_a: AbGroup::trivial(),
            closed_point_degrees: None,
            declared_index,
            smooth_normalization: true,
        })
    }

    /// A smooth proper curve of the given index over a local field.
    ///
    /// Over a local field the Amitsur subgroup of such a curve is cyclic
    /// of order equal to the index.
    pub fn smooth_curve(base: FieldSpec, index: u64) -> Result<Self> {
        let i = Order::from_u64(index)
            .ok_or_else(|| Error::InvalidArgument("index must be at least 1".into()))?;
        let amitsur = if base.is_local() {
            QzSubgroup::Cyclic(i.clone())
        } else {
            QzSubgroup::bounded(i.clone(), format!("B({index}-index curve/{})", base.label))
        };
        Ok(Self {
            base,
            kind: CoverKind::SmoothCurve,
            amitsur,
            br_a: AbGroup::unknown(
                crate::qz::Exponent::Unbounded,
                GroupOrder::Unknown,
                "Br_a of the cover",
            ),
            br1: AbGroup::unknown(
                crate::qz::Exponent::Unbounded,
                GroupOrder::Unknown,
                "Br_1 of the cover",
            ),
            closed_point_degrees: None,
            declared_index: Some(index),
            smooth_normalization: true,
        })
    }

    /// `I(X̃)`: the gcd of the closed-point degrees when listed, the declared
    /// index otherwise.
    pub fn index(&self) -> Option<u64> {
        match &self.closed_point_degrees {
            Some(d) if !d.is_empty() && !d.contains(&0) => index_from_degrees(d).ok(),
            _ => self.declared_index,
        }
    }
}

/// `Br₁` of a Severi–Brauer variety: `Br k / ⟨class⟩`.
pub(crate) fn severi_brauer_br1(base: &FieldSpec, class_order: &Order) -> AbGroup {
    use crate::field::FieldKind;
    match base.kind {
        // ℚ/ℤ modulo a finite cyclic subgroup is again ℚ/ℤ
        FieldKind::PAdicLocal { .. } | FieldKind::LocalFunctionField { .. } => AbGroup::FullQmodZ,
        FieldKind::RealClosed if class_order.is_one() => AbGroup::cyclic(Order::from(2)),
        FieldKind::RealClosed
        | FieldKind::Finite { .. }
        | FieldKind::SeparablyClosed { .. }
        | FieldKind::AlgebraicallyClosed { .. } => AbGroup::trivial(),
        FieldKind::AbstractPerfect { .. } | FieldKind::Abstract { .. } => AbGroup::unknown(
            crate::qz::Exponent::Unbounded,
            GroupOrder::Unknown,
            format!("Br({}) modulo a class of order {class_order}", base.label),
        ),
    }
}

/// A point `y` of the pinch locus with residue field `κ(y)` and the
/// residue fields `κ(ỹ)` of the points above it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PinchPoint {
    pub label: String,
    /// `κ(y)/k`.
    pub residue: ExtensionSpec,
    /// Each `κ(ỹ)/κ(y)`.
    pub fibers: Vec<ExtensionSpec>,
}

impl PinchPoint {
    /// Builds a point from `(degree, separable degree)` pairs.
    pub fn from_degrees(
        base: &FieldSpec,
        label: impl Into<String>,
        residue: (u64, u64),
        fibers: &[(u64, u64)],
    ) -> Result<Self> {
        let label = label.into();
        let residue = ExtensionSpec::new(base.clone(), residue.0, residue.1, format!("k({label})"))?;
        let top = residue.top_field();
        let fibers = fibers
            .iter()
            .enumerate()
            .map(|(i, &(d, s))| ExtensionSpec::new(top.clone(), d, s, format!("k({label}~{})", i + 1)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            label,
            residue,
            fibers,
        })
    }

    /// A point whose residue extension and fibers are all separable.
    pub fn separable(
        base: &FieldSpec,
        label: impl Into<String>,
        residue_degree: u64,
        fiber_degrees: &[u64],
    ) -> Result<Self> {
        let fibers: Vec<(u64, u64)> = fiber_degrees.iter().map(|&d| (d, d)).collect();
        Self::from_degrees(base, label, (residue_degree, residue_degree), &fibers)
    }

    /// `ψ⁻¹(y)` is one point with purely inseparable residue extension.
    pub fn is_universal_homeomorphism(&self) -> bool {
        self.fibers.len() == 1 && self.fibers[0].is_purely_inseparable()
    }

    /// `ψ` induces an isomorphism on residue fields over `y`.
    pub fn is_residue_iso(&self) -> bool {
        self.fibers.len() == 1 && self.fibers[0].is_trivial()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PinchingConfig {
    pub cover: CoverData,
    pub points: Vec<PinchPoint>,
}

impl PinchingConfig {
    pub fn new(cover: CoverData, points: Vec<PinchPoint>) -> Self {
        Self { cover, points }
    }

    pub fn base(&self) -> &FieldSpec {
        &self.cover.base
    }

    /// Vacuously true for an empty locus.
    pub fn is_universal_homeomorphism(&self) -> bool {
        self.points.iter().all(PinchPoint::is_universal_homeomorphism)
    }

    pub fn is_residue_iso(&self) -> bool {
        self.points.iter().all(PinchPoint::is_residue_iso)
    }

    /// Every residue field in the configuration is local or finite.
    pub fn is_exact_regime(&self) -> bool {
        self.cover.base.is_exact_regime()
    }
}

/// `I = gcd` of closed-point degrees.
pub fn index_from_degrees(degrees: &[u64]) -> Result<u64> {
    if degrees.is_empty() {
        return Err(Error::InvalidArgument(
            "the index of a scheme without closed points is undefined".into(),
        ));
    }
    if degrees.contains(&0) {
        return Err(Error::InvalidArgument("degrees must be at least 1".into()));
    }
    Ok(degrees.iter().fold(0, |g, &d| num_integer::gcd(g, d)))
}

/// `I(Ỹ_y)`: gcd of the fiber degrees over `y`.
pub fn fiber_index(p: &PinchPoint) -> u64 {
    p.fibers
        .iter()
        .fold(0, |g, f| num_integer::gcd(g, f.total_degree))
}

/// `I(Y)`: gcd of the residue degrees `[κ(y):k]`.
pub fn locus_index(points: &[PinchPoint]) -> Result<u64> {
    if points.is_empty() {
        return Err(Error::InvalidArgument("the pinch locus is empty".into()));
    }
    Ok(points
        .iter()
        .fold(0, |g, p| num_integer::gcd(g, p.residue.total_degree)))
}

/// `m(Ỹ/Y) = lcm` of the fiber indices.
pub fn annihilator_bound(config: &PinchingConfig) -> Result<Order> {
    if config.points.is_empty() {
        return Err(Error::InvalidArgument("the pinch locus is empty".into()));
    }
    Ok(config.points.iter().fold(Order::one(), |acc, p| {
        acc.lcm(&Order::from_u64(fiber_index(p)).unwrap_or_default())
    }))
}

/// `gcd(I(X̃), I(Y))`, which the index of the pinched variety divides.
pub fn pinched_index_constraint(config: &PinchingConfig) -> Result<u64> {
    let cover = config.cover.index().ok_or_else(|| {
        Error::IncompleteConfiguration("the cover has no closed-point degrees or index".into())
    })?;
    let locus = locus_index(&config.points)?;
    Ok(num_integer::gcd(cover, locus))
}

/// Checks every structural invariant. An empty result means every
/// operation in [`crate::theorems`] accepts the configuration.
pub fn validate(config: &PinchingConfig) -> Vec<Violation> {
    let mut out = config.cover.base.validate();
    validate_cover(&config.cover, &mut out);
    let index = config.cover.index();
    for p in &config.points {
        validate_point(config, p, index, &mut out);
    }
    if out.is_empty() {
        check_injection(config, &mut out);
    }
    out
}

fn validate_cover(c: &CoverData, out: &mut Vec<Violation>) {
    if let Some(d) = &c.closed_point_degrees {
        if d.is_empty() {
            out.push(Violation::new(
                "empty-degree-list",
                "closedPointDegrees must list at least one degree",
            ));
        } else if d.contains(&0) {
            out.push(Violation::new(
                "degree-zero",
                "closed-point degrees must be at least 1",
            ));
        } else if let (Ok(g), Some(i)) = (index_from_degrees(d), c.declared_index) {
            if g != i {
                out.push(Violation::new(
                    "index-mismatch",
                    format!("declared index {i} differs from the gcd {g} of the closed-point degrees"),
                ));
            }
        }
    }
    if c.declared_index == Some(0) {
        out.push(Violation::new("degree-zero", "the index must be at least 1"));
    }
    match &c.kind {
        CoverKind::Ch0Trivial => {
            if !c.amitsur.is_trivial() {
                out.push(Violation::new(
                    "ch0-trivial-amitsur",
                    format!("a CH0-trivial cover has trivial Amitsur subgroup, got {}", c.amitsur),
                ));
            }
            if !c.br_a.is_trivial() {
                out.push(Violation::new(
                    "ch0-trivial-bra",
                    format!("a CH0-trivial cover has trivial Br_a, got {}", c.br_a),
                ));
            }
            if c.br1 != field::brauer_group(&c.base) {
                out.push(Violation::new(
                    "ch0-trivial-br1",
                    format!("a CH0-trivial cover has Br_1 = Br k, got {}", c.br1),
                ));
            }
            if let Some(i) = c.index().filter(|&i| i != 1) {
                out.push(Violation::new(
                    "ch0-trivial-index",
                    format!("a CH0-trivial cover has index 1, got {i}"),
                ));
            }
        }
        CoverKind::SeveriBrauer { class_order } => {
            let matches = Order::from_u64(*class_order)
                .is_some_and(|m| c.amitsur == QzSubgroup::Cyclic(m));
            if !matches {
                out.push(Violation::new(
                    "severi-brauer-amitsur-mismatch",
                    format!(
                        "the Amitsur subgroup of a Severi-Brauer variety is generated by its class of order {class_order}, got {}",
                        c.amitsur
                    ),
                ));
            }
            if !c.br_a.is_trivial() {
                out.push(Violation::new(
                    "severi-brauer-bra",
                    format!("a Severi-Brauer variety has trivial Br_a, got {}", c.br_a),
                ));
            }
        }
        _ => {}
    }
    match &c.amitsur {
        QzSubgroup::Full => out.push(Violation::new(
            "amitsur-infinite",
            "the Amitsur subgroup of a proper variety is finite",
        )),
        QzSubgroup::Cyclic(a) => {
            if let Some(i) = c.index().and_then(Order::from_u64) {
                if !a.divides(&i) {
                    out.push(Violation::new(
                        "amitsur-index",
                        format!("the Amitsur subgroup has order {a}, which does not divide the index {i}"),
                    ));
                } else if c.smooth_normalization && c.base.is_local() && *a != i {
                    out.push(Violation::new(
                        "smooth-amitsur-index",
                        format!(
                            "a smooth cover over a local field has Amitsur order equal to its index {i}, got {a}"
                        ),
                    ));
                }
            }
        }
        QzSubgroup::Bounded { .. } => {}
    }
}

fn validate_point(
    config: &PinchingConfig,
    p: &PinchPoint,
    index: Option<u64>,
    out: &mut Vec<Violation>,
) {
    let base = &config.cover.base;
    if p.residue.base != *base {
        out.push(Violation::new(
            "residue-base-mismatch",
            format!("point {}: its residue field is not an extension of {}", p.label, base.label),
        ));
    }
    out.extend(p.residue.validate());
    if p.fibers.is_empty() {
        out.push(Violation::new(
            "fibers-empty",
            format!("point {}: the fiber is empty, but the pinch map is surjective", p.label),
        ));
    }
    let top = p.residue.top_field();
    for f in &p.fibers {
        if f.base != top {
            out.push(Violation::new(
                "fiber-base-mismatch",
                format!("point {}: fiber {} is not an extension of {}", p.label, f.label, top.label),
            ));
        }
        out.extend(f.validate());
        if let Some(i) = index.filter(|&i| i > 0) {
            let deg = p.residue.total_degree.checked_mul(f.total_degree);
            if deg.is_some_and(|d| d % i != 0) {
                out.push(Violation::new(
                    "fiber-degree-index",
                    format!(
                        "point {}: fiber {} is a closed point of degree {} on the cover, not a multiple of its index {i}",
                        p.label,
                        f.label,
                        deg.unwrap_or_default()
                    ),
                ));
            }
        }
    }
}

/// `B(X̃/k)/B(X/k)` must inject into `∏_y ∩_ỹ Br(κ(ỹ)/κ(y))`.
fn check_injection(config: &PinchingConfig, out: &mut Vec<Violation>) {
    if config.points.is_empty() || config.cover.amitsur.is_trivial() {
        return;
    }
    let quotient = crate::theorems::amitsur_quotient(config);
    let target = crate::theorems::intersection_product(config);
    if let Ok(q) = quotient {
        if let Err(e) = crate::qz::coker_of_injection(&q, &target) {
            out.push(Violation::new(
                "amitsur-injection",
                format!("B(X~/k)/B(X/k) = {} does not inject into {target}: {e}", q.to_group()),
            ));
        }
    } else if let Err(e) = quotient {
        out.push(Violation::new("amitsur-injection", e.to_string()));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp() -> FieldSpec {
        FieldSpec::p_adic(5)
    }

    #[test]
    fn index_arithmetic() {
        assert_eq!(index_from_degrees(&[2, 3]).unwrap(), 1);
        assert_eq!(index_from_degrees(&[4, 6]).unwrap(), 2);
        assert_eq!(index_from_degrees(&[5]).unwrap(), 5);
        assert!(index_from_degrees(&[]).is_err());
    }

    #[test]
    fn fiber_and_locus_index() {
        let a = PinchPoint::separable(&qp(), "a", 2, &[2, 2]).unwrap();
        let b = PinchPoint::separable(&qp(), "b", 4, &[2, 3]).unwrap();
        assert_eq!(fiber_index(&a), 2);
        assert_eq!(fiber_index(&b), 1);
        assert_eq!(locus_index(&[a.clone(), b.clone()]).unwrap(), 2);
        assert!(locus_index(&[]).is_err());
        let c = PinchPoint::separable(&qp(), "c", 6, &[3]).unwrap();
        let cfg = PinchingConfig::new(CoverData::ch0_trivial(qp()), vec![a, c]);
        assert_eq!(annihilator_bound(&cfg).unwrap(), Order::from(6));
    }

    #[test]
    fn index_constraint() {
        let cover = CoverData::smooth_curve(qp(), 4).unwrap();
        let y = PinchPoint::separable(&qp(), "y", 6, &[2]).unwrap();
        let cfg = PinchingConfig::new(cover, vec![y]);
        assert_eq!(pinched_index_constraint(&cfg).unwrap(), 2);
        let mut cfg2 = cfg.clone();
        cfg2.cover.declared_index = None;
        assert!(matches!(
            pinched_index_constraint(&cfg2),
            Err(Error::IncompleteConfiguration(_))
        ));
    }

    #[test]
    fn validation_codes() {
        let mut sb = CoverData::severi_brauer(qp(), 2).unwrap();
        sb.amitsur = QzSubgroup::Cyclic(Order::from(3));
        let cfg = PinchingConfig::new(sb, vec![]);
        let codes: Vec<_> = validate(&cfg).into_iter().map(|v| v.code).collect();
        assert!(codes.contains(&"severi-brauer-amitsur-mismatch"));

        let mut y = PinchPoint::separable(&qp(), "y", 2, &[1]).unwrap();
        y.fibers[0].base = qp();
        let cfg = PinchingConfig::new(CoverData::ch0_trivial(qp()), vec![y]);
        let codes: Vec<_> = validate(&cfg).into_iter().map(|v| v.code).collect();
        assert_eq!(codes, vec!["fiber-base-mismatch"]);

        let y = PinchPoint::separable(&qp(), "y", 1, &[2, 4]).unwrap();
        let cfg = PinchingConfig::new(CoverData::ch0_trivial(qp()), vec![y]);
        assert!(validate(&cfg).is_empty());
    }

    #[test]
    fn rational_point_on_conic_rejected() {
        let mut sb = CoverData::severi_brauer(qp(), 2).unwrap();
        sb.declared_index = None;
        let y = PinchPoint::separable(&qp(), "y", 1, &[1]).unwrap();
        let codes: Vec<_> = validate(&PinchingConfig::new(sb, vec![y]))
            .into_iter()
            .map(|v| v.code)
            .collect();
        assert_eq!(codes, vec!["amitsur-injection"]);
    }

    #[test]
    fn predicates() {
        let k = FieldSpec::local_function_field(2);
        let uh = PinchPoint::from_degrees(&k, "y", (1, 1), &[(4, 1)]).unwrap();
        let iso = PinchPoint::separable(&k, "z", 3, &[1]).unwrap();
        let split = PinchPoint::separable(&k, "w", 1, &[1, 1]).unwrap();
        assert!(uh.is_universal_homeomorphism() && !uh.is_residue_iso());
        assert!(iso.is_universal_homeomorphism() && iso.is_residue_iso());
        assert!(!split.is_universal_homeomorphism());
        let empty = PinchingConfig::new(CoverData::ch0_trivial(k), vec![]);
        assert!(empty.is_universal_homeomorphism() && empty.is_residue_iso());
    }
}
