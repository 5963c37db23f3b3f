//! The JSON configuration format (schema version 1).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{self, ExtensionSpec, FieldKind, FieldSpec};
use crate::order::Order;
use crate::pinch::{self, CoverData, CoverKind, PinchPoint, PinchingConfig, Violation};
use crate::qz::{self, AbGroup, Exponent, FiniteGroup, GroupOrder, QzSubgroup};

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ConfigDocument {
    pub schema_version: u64,
    pub field: FieldDoc,
    pub cover: CoverDoc,
    pub points: Vec<PointDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct FieldDoc {
    pub kind: FieldKindDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FieldKindDoc {
    PAdicLocal,
    LocalFunctionField,
    Finite,
    RealClosed,
    SeparablyClosed,
    AlgebraicallyClosed,
    AbstractPerfect,
    Abstract,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoverKindDoc {
    Ch0Trivial,
    SeveriBrauer,
    SmoothCurve,
    RegularCurve,
    General,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct CoverDoc {
    pub cover_kind: CoverKindDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class_order: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub amitsur_order: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub br_a_order: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub br1: Option<GroupSpecDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed_point_degrees: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<u64>,
    pub smooth_normalization: bool,
}

/// A group supplied by the user, used for `Br₁ X̃`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum GroupSpecDoc {
    #[serde(rename_all = "camelCase")]
    Known { invariant_factors: Vec<u64> },
    BaseBrauer,
    QModZ,
    #[serde(rename_all = "camelCase")]
    Unknown {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        exponent_divides: Option<u64>,
    },
    DirectSum { summands: Vec<GroupSpecDoc> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct PointDoc {
    pub label: String,
    pub residue_degree: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residue_separable_degree: Option<u64>,
    pub fibers: Vec<FiberDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct FiberDoc {
    pub degree: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub separable_degree: Option<u64>,
}

/// A seminormalization chain: one configuration per step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ChainDocument {
    pub schema_version: u64,
    pub chain: Vec<ConfigDocument>,
}

/// Either kind of input document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputDocument {
    Config(ConfigDocument),
    Chain(ChainDocument),
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Schema {
        path: path.into(),
        message: message.into(),
    }
}

fn json_error(e: serde_path_to_error::Error<serde_json::Error>) -> Error {
    let path = e.path().to_string();
    let inner = e.into_inner();
    let message = strip_position(&inner.to_string());
    match inner.classify() {
        serde_json::error::Category::Data => Error::Schema { path, message },
        _ => Error::Parse {
            line: inner.line(),
            column: inner.column(),
            path,
            message,
        },
    }
}

/// serde_json appends " at line L column C"; the position is kept separately.
fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

fn deserialize<T: serde::de::DeserializeOwned>(bytes: &[u8]) -> Result<T> {
    let mut de = serde_json::Deserializer::from_slice(bytes);
    let value = serde_path_to_error::deserialize(&mut de).map_err(json_error)?;
    de.end().map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        path: ".".into(),
        message: strip_position(&e.to_string()),
    })?;
    Ok(value)
}

/// Parses either a configuration or a chain document.
pub fn parse_document(bytes: &[u8]) -> Result<InputDocument> {
    // syntax first, so that malformed input is always a parse error
    let value: serde_json::Value = deserialize(bytes)?;
    let obj = value
        .as_object()
        .ok_or_else(|| schema(".", "the document must be a JSON object"))?;
    match obj.get("schemaVersion") {
        Some(v) if v.as_u64() == Some(SCHEMA_VERSION) => {}
        Some(v) => return Err(schema("schemaVersion", format!("unsupported schema version {v}, expected 1"))),
        None => return Err(schema(".", "missing field `schemaVersion`")),
    }
    if obj.contains_key("chain") {
        let doc: ChainDocument = deserialize(bytes)?;
        for (i, step) in doc.chain.iter().enumerate() {
            check_document(step, &format!("chain[{i}]."))?;
        }
        Ok(InputDocument::Chain(doc))
    } else {
        let doc: ConfigDocument = deserialize(bytes)?;
        check_document(&doc, "")?;
        Ok(InputDocument::Config(doc))
    }
}

/// Parses and validates a configuration document.
pub fn parse_config(bytes: &[u8]) -> Result<PinchingConfig> {
    match parse_document(bytes)? {
        InputDocument::Config(doc) => to_config(&doc),
        InputDocument::Chain(_) => Err(schema(
            "chain",
            "expected a single configuration, found a chain document",
        )),
    }
}

fn positive(path: String, v: u64) -> Result<()> {
    if v == 0 {
        Err(schema(path, "must be at least 1"))
    } else {
        Ok(())
    }
}

/// Checks the parts of the schema that serde does not express.
fn check_document(doc: &ConfigDocument, prefix: &str) -> Result<()> {
    if doc.schema_version != SCHEMA_VERSION {
        return Err(schema(
            format!("{prefix}schemaVersion"),
            format!("unsupported schema version {}, expected 1", doc.schema_version),
        ));
    }
    let f = &doc.field;
    let needs_p = matches!(
        f.kind,
        FieldKindDoc::PAdicLocal | FieldKindDoc::LocalFunctionField | FieldKindDoc::Finite
    );
    match (needs_p, f.kind, f.p) {
        (true, _, None) => return Err(schema(format!("{prefix}field.p"), "this field kind requires `p`")),
        (_, FieldKindDoc::RealClosed, Some(_)) => {
            return Err(schema(format!("{prefix}field.p"), "a real closed field takes no `p`"))
        }
        (_, _, Some(p)) => positive(format!("{prefix}field.p"), p)?,
        _ => {}
    }
    let c = &doc.cover;
    let sb = c.cover_kind == CoverKindDoc::SeveriBrauer;
    match (sb, c.class_order) {
        (true, None) => {
            return Err(schema(
                format!("{prefix}cover.classOrder"),
                "a severi-brauer cover requires `classOrder`",
            ))
        }
        (false, Some(_)) => {
            return Err(schema(
                format!("{prefix}cover.classOrder"),
                "`classOrder` applies to severi-brauer covers only",
            ))
        }
        (true, Some(m)) => positive(format!("{prefix}cover.classOrder"), m)?,
        _ => {}
    }
    for (name, v) in [
        ("amitsurOrder", c.amitsur_order),
        ("brAOrder", c.br_a_order),
        ("index", c.index),
    ] {
        if let Some(v) = v {
            positive(format!("{prefix}cover.{name}"), v)?;
        }
    }
    if let Some(d) = &c.closed_point_degrees {
        if d.is_empty() {
            return Err(schema(
                format!("{prefix}cover.closedPointDegrees"),
                "must list at least one degree",
            ));
        }
        for (i, &v) in d.iter().enumerate() {
            positive(format!("{prefix}cover.closedPointDegrees[{i}]"), v)?;
        }
    }
    if let Some(g) = &c.br1 {
        check_group(g, &format!("{prefix}cover.br1"))?;
    }
    let perfect = field_spec(&doc.field).is_perfect();
    for (i, p) in doc.points.iter().enumerate() {
        let at = format!("{prefix}points[{i}]");
        positive(format!("{at}.residueDegree"), p.residue_degree)?;
        separable(&at, "residueSeparableDegree", p.residue_degree, p.residue_separable_degree, perfect)?;
        if p.fibers.is_empty() {
            return Err(schema(format!("{at}.fibers"), "must list at least one fiber"));
        }
        for (j, fb) in p.fibers.iter().enumerate() {
            let at = format!("{at}.fibers[{j}]");
            positive(format!("{at}.degree"), fb.degree)?;
            separable(&at, "separableDegree", fb.degree, fb.separable_degree, perfect)?;
        }
    }
    Ok(())
}

fn separable(at: &str, key: &str, degree: u64, sep: Option<u64>, perfect: bool) -> Result<()> {
    match sep {
        Some(s) => positive(format!("{at}.{key}"), s),
        None if perfect || degree == 1 => Ok(()),
        None => Err(schema(
            format!("{at}.{key}"),
            "required for extensions of degree > 1 over an imperfect field",
        )),
    }
}

fn check_group(g: &GroupSpecDoc, at: &str) -> Result<()> {
    match g {
        GroupSpecDoc::Known { invariant_factors } => {
            FiniteGroup::from_invariant_factors(invariant_factors)
                .map(|_| ())
                .map_err(|e| schema(format!("{at}.invariantFactors"), e.to_string()))
        }
        GroupSpecDoc::Unknown {
            exponent_divides: Some(0),
        } => Err(schema(format!("{at}.exponentDivides"), "must be at least 1")),
        GroupSpecDoc::DirectSum { summands } => summands
            .iter()
            .enumerate()
            .try_for_each(|(i, s)| check_group(s, &format!("{at}.summands[{i}]"))),
        _ => Ok(()),
    }
}

fn default_label(kind: FieldKindDoc, p: Option<u64>) -> String {
    let p = p.unwrap_or(1);
    match kind {
        FieldKindDoc::PAdicLocal => format!("Q_{p}"),
        FieldKindDoc::LocalFunctionField => format!("F_{p}((t))"),
        FieldKindDoc::Finite => format!("F_{p}"),
        FieldKindDoc::RealClosed => "R".into(),
        FieldKindDoc::SeparablyClosed => "k^s".into(),
        FieldKindDoc::AlgebraicallyClosed => "k^a".into(),
        FieldKindDoc::AbstractPerfect | FieldKindDoc::Abstract => "k".into(),
    }
}

pub fn field_spec(f: &FieldDoc) -> FieldSpec {
    let p = f.p.unwrap_or(1);
    let kind = match f.kind {
        FieldKindDoc::PAdicLocal => FieldKind::PAdicLocal { residue_char: p },
        FieldKindDoc::LocalFunctionField => FieldKind::LocalFunctionField { characteristic: p },
        FieldKindDoc::Finite => FieldKind::Finite { characteristic: p },
        FieldKindDoc::RealClosed => FieldKind::RealClosed,
        FieldKindDoc::SeparablyClosed => FieldKind::SeparablyClosed { char_exponent: p },
        FieldKindDoc::AlgebraicallyClosed => FieldKind::AlgebraicallyClosed { char_exponent: p },
        FieldKindDoc::AbstractPerfect => FieldKind::AbstractPerfect { char_exponent: p },
        FieldKindDoc::Abstract => FieldKind::Abstract { char_exponent: p },
    };
    let label = f.label.clone().unwrap_or_else(|| default_label(f.kind, f.p));
    FieldSpec::new(kind, label)
}

fn order(n: u64) -> Order {
    Order::from_u64(n).expect("checked positive")
}

fn group(g: &GroupSpecDoc, base: &FieldSpec) -> AbGroup {
    match g {
        GroupSpecDoc::Known { invariant_factors } => AbGroup::Known(
            FiniteGroup::from_invariant_factors(invariant_factors).expect("checked factors"),
        ),
        GroupSpecDoc::BaseBrauer => field::brauer_group(base),
        GroupSpecDoc::QModZ => AbGroup::FullQmodZ,
        GroupSpecDoc::Unknown { exponent_divides } => AbGroup::unknown(
            exponent_divides.map_or(Exponent::Unbounded, |e| Exponent::Divides(order(e))),
            GroupOrder::Unknown,
            "Br_1 of the cover, as supplied",
        ),
        GroupSpecDoc::DirectSum { summands } => qz::product(summands.iter().map(|s| group(s, base))),
    }
}

fn extension(base: &FieldSpec, degree: u64, sep: Option<u64>, label: String) -> ExtensionSpec {
    // a missing separable degree was checked to mean a separable extension
    let sep = sep.unwrap_or(degree);
    ExtensionSpec {
        base: base.clone(),
        total_degree: degree,
        separable_degree: sep,
        inseparable_degree: (degree / sep).max(1),
        label,
    }
}

/// Builds and validates the configuration described by a checked document.
pub fn to_config(doc: &ConfigDocument) -> Result<PinchingConfig> {
    let base = field_spec(&doc.field);
    let c = &doc.cover;
    let kind = match c.cover_kind {
        CoverKindDoc::Ch0Trivial => CoverKind::Ch0Trivial,
        CoverKindDoc::SeveriBrauer => CoverKind::SeveriBrauer {
            class_order: c.class_order.unwrap_or(1),
        },
        CoverKindDoc::SmoothCurve => CoverKind::SmoothCurve,
        CoverKindDoc::RegularCurve => CoverKind::RegularCurve,
        CoverKindDoc::General => CoverKind::General,
    };
    // a CH0-trivial cover has index 1; a Severi-Brauer variety over a local
    // field has index equal to the order of its class
    let declared_index = c.index.or(match kind {
        CoverKind::Ch0Trivial if c.closed_point_degrees.is_none() => Some(1),
        CoverKind::SeveriBrauer { class_order }
            if base.is_local() && c.closed_point_degrees.is_none() =>
        {
            Some(class_order)
        }
        _ => None,
    });
    let index = match &c.closed_point_degrees {
        Some(d) => pinch::index_from_degrees(d).ok(),
        None => declared_index,
    };
    let amitsur = match (c.amitsur_order, &kind) {
        (Some(a), _) => QzSubgroup::Cyclic(order(a)),
        (None, CoverKind::Ch0Trivial) => QzSubgroup::trivial(),
        (None, CoverKind::SeveriBrauer { class_order }) => QzSubgroup::Cyclic(order(*class_order)),
        (None, CoverKind::SmoothCurve) if base.is_local() && index.is_some() => {
            QzSubgroup::Cyclic(order(index.unwrap_or(1)))
        }
        (None, _) => match index {
            Some(i) => QzSubgroup::bounded(order(i), "B(X~/k), killed by the index"),
            None => {
                return Err(Error::Config(vec![Violation::new(
                    "amitsur-undetermined",
                    "give cover.amitsurOrder or index data for the cover",
                )]))
            }
        },
    };
    let default_trivial_bra = matches!(kind, CoverKind::Ch0Trivial | CoverKind::SeveriBrauer { .. });
    let br_a = match c.br_a_order {
        Some(n) => AbGroup::unknown(
            Exponent::Divides(order(n)),
            GroupOrder::Finite(order(n)),
            "Br_a of the cover, as supplied",
        ),
        None if default_trivial_bra => AbGroup::trivial(),
        None => AbGroup::unknown(Exponent::Unbounded, GroupOrder::Unknown, "Br_a of the cover"),
    };
    let br1 = match (&c.br1, &kind) {
        (Some(g), _) => group(g, &base),
        (None, CoverKind::Ch0Trivial) => field::brauer_group(&base),
        (None, CoverKind::SeveriBrauer { class_order }) => {
            pinch::severi_brauer_br1(&base, &order(*class_order))
        }
        (None, _) => AbGroup::unknown(Exponent::Unbounded, GroupOrder::Unknown, "Br_1 of the cover"),
    };
    let cover = CoverData {
        base: base.clone(),
        kind,
        amitsur,
        br_a,
        br1,
        closed_point_degrees: c.closed_point_degrees.clone(),
        declared_index,
        smooth_normalization: c.smooth_normalization,
    };
    let points = doc
        .points
        .iter()
        .map(|p| {
            let residue = extension(
                &base,
                p.residue_degree,
                p.residue_separable_degree,
                format!("k({})", p.label),
            );
            let top = residue.top_field();
            let fibers = p
                .fibers
                .iter()
                .enumerate()
                .map(|(j, f)| extension(&top, f.degree, f.separable_degree, format!("k({}~{})", p.label, j + 1)))
                .collect();
            PinchPoint {
                label: p.label.clone(),
                residue,
                fibers,
            }
        })
        .collect();
    let config = PinchingConfig::new(cover, points);
    let violations = pinch::validate(&config);
    if violations.is_empty() {
        Ok(config)
    } else {
        Err(Error::Config(violations))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const INSEPARABLE_FIBER: &str = r#"{
        "schemaVersion": 1,
        "field": {"kind": "local-function-field", "p": 2},
        "cover": {"coverKind": "ch0-trivial", "smoothNormalization": true},
        "points": [{"label": "P", "residueDegree": 1,
                    "fibers": [{"degree": 2, "separableDegree": 1}]}]
    }"#;

    #[test]
    fn parses_a_valid_document() {
        let c = parse_config(INSEPARABLE_FIBER.as_bytes()).unwrap();
        assert_eq!(c.points.len(), 1);
        assert!(c.is_universal_homeomorphism());
    }

    #[test]
    fn zero_degree_is_a_schema_error() {
        let doc = INSEPARABLE_FIBER.replace(r#""degree": 2"#, r#""degree": 0"#);
        let e = parse_config(doc.as_bytes()).unwrap_err();
        assert_eq!(e.class(), "schema-error");
        assert!(e.to_string().contains("points[0].fibers[0].degree"));
    }

    #[test]
    fn unknown_key_is_a_schema_error() {
        let doc = INSEPARABLE_FIBER.replace(r#""cover": {"#, r#""cover": {"genus": 3, "#);
        let e = parse_config(doc.as_bytes()).unwrap_err();
        assert_eq!(e.class(), "schema-error");
        assert!(e.to_string().contains("genus"));
    }

    #[test]
    fn malformed_json_is_a_parse_error() {
        let e = parse_config(&INSEPARABLE_FIBER.as_bytes()[..40]).unwrap_err();
        assert_eq!(e.class(), "parse-error");
        let e = parse_config(b"{\"schemaVersion\": 1,}").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn violations_are_config_errors() {
        let doc = INSEPARABLE_FIBER.replace(r#""separableDegree": 1"#, r#""separableDegree": 2, "degree2": 1"#);
        assert_eq!(parse_config(doc.as_bytes()).unwrap_err().class(), "schema-error");
        let doc = INSEPARABLE_FIBER.replace(r#""p": 2"#, r#""p": 3"#);
        let e = parse_config(doc.as_bytes()).unwrap_err();
        assert_eq!(e.class(), "config-error");
        assert!(e.to_string().contains("inseparable-degree-not-power"));
    }

    #[test]
    fn separable_degree_needed_over_imperfect_fields() {
        let doc = INSEPARABLE_FIBER.replace(r#", "separableDegree": 1"#, "");
        let e = parse_config(doc.as_bytes()).unwrap_err();
        assert_eq!(e.class(), "schema-error");
    }

    #[test]
    fn round_trip() {
        let InputDocument::Config(doc) = parse_document(INSEPARABLE_FIBER.as_bytes()).unwrap() else {
            panic!("expected a config document");
        };
        let emitted = serde_json::to_vec(&doc).unwrap();
        let InputDocument::Config(again) = parse_document(&emitted).unwrap() else {
            panic!("expected a config document");
        };
        assert_eq!(doc, again);
        assert_eq!(to_config(&doc).unwrap(), to_config(&again).unwrap());
    }

    #[test]
    fn group_specs() {
        let doc = INSEPARABLE_FIBER.replace(
            r#""coverKind": "ch0-trivial""#,
            r#""coverKind": "general", "amitsurOrder": 1, "br1": {"kind": "direct-sum", "summands": [{"kind": "q-mod-z"}, {"kind": "known", "invariantFactors": [2]}]}"#,
        );
        let c = parse_config(doc.as_bytes()).unwrap();
        assert_eq!(c.cover.br1.to_string(), "Q/Z (+) Z/2");
        let bad = INSEPARABLE_FIBER.replace(
            r#""coverKind": "ch0-trivial""#,
            r#""coverKind": "general", "br1": {"kind": "known", "invariantFactors": [2], "x": 1}"#,
        );
        assert_eq!(parse_config(bad.as_bytes()).unwrap_err().class(), "schema-error");
    }
}
