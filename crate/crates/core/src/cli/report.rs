//! Report documents: canonical JSON and aligned text.

use serde::Serialize;

use crate::cli::config::{ChainDocument, ConfigDocument};
use crate::oracle::OracleOutcome;
use crate::qz::{AbGroup, QzSubgroup};
use crate::theorems::{BrauerReport, ChainReport, Theorem};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GroupDoc {
    pub descriptor: String,
    pub order: String,
    pub exponent_divides: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl GroupDoc {
    pub fn of(g: &AbGroup) -> Self {
        let note = match g {
            AbGroup::Unknown { note, .. } => Some(note.clone()),
            _ => None,
        };
        Self {
            descriptor: g.to_string(),
            order: g.order().to_string(),
            exponent_divides: g.exponent().to_string(),
            note,
        }
    }

    pub fn of_subgroup(g: &QzSubgroup) -> Self {
        let mut doc = Self::of(&g.to_group());
        if let QzSubgroup::Bounded { note, .. } = g {
            doc.note = Some(note.clone());
        }
        doc
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IndexFactsDoc {
    pub cover_index: Option<u64>,
    pub locus_index: Option<u64>,
    pub constraint_divisor: Option<u64>,
    pub annihilator_bound: Option<String>,
    pub rl_order: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PredicatesDoc {
    pub universal_homeomorphism: bool,
    pub residue_iso: bool,
    pub exact_regime: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremDoc {
    pub tag: &'static str,
    pub citation: &'static str,
}

impl TheoremDoc {
    fn list(applied: &[Theorem]) -> Vec<Self> {
        applied
            .iter()
            .map(|t| Self {
                tag: t.tag(),
                citation: t.citation(),
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleState {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct OracleStatusDoc {
    pub status: OracleState,
    pub checks: usize,
    pub notes: Vec<String>,
}

impl OracleStatusDoc {
    pub fn not_requested() -> Self {
        Self {
            status: OracleState::Skipped,
            checks: 0,
            notes: vec!["oracle not requested".into()],
        }
    }

    pub fn from_outcome(outcome: std::result::Result<OracleOutcome, Error>) -> Self {
        match outcome {
            Ok(o) => {
                let mut notes = o.discrepancies.clone();
                notes.extend(o.skipped.iter().cloned());
                Self {
                    status: if o.passed() {
                        OracleState::Pass
                    } else {
                        OracleState::Fail
                    },
                    checks: o.checks,
                    notes,
                }
            }
            Err(e) => Self {
                status: OracleState::Skipped,
                checks: 0,
                notes: vec![format!("{}: {e}", e.class())],
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportDocument {
    pub schema_version: u64,
    pub input_echo: ConfigDocument,
    pub intersection_product: GroupDoc,
    pub amitsur_cover: GroupDoc,
    pub amitsur_pinched: GroupDoc,
    pub amitsur_quotient: GroupDoc,
    pub coker_injection: GroupDoc,
    pub ker_phi1: GroupDoc,
    pub ker_phi1_split: bool,
    pub h2_mu: GroupDoc,
    pub coker_phi_a: GroupDoc,
    pub br1_pinched: GroupDoc,
    pub index_facts: IndexFactsDoc,
    pub predicates: PredicatesDoc,
    pub applied_theorems: Vec<TheoremDoc>,
    pub caveats: Vec<String>,
    pub oracle_status: OracleStatusDoc,
}

impl ReportDocument {
    pub fn new(input: &ConfigDocument, r: &BrauerReport, oracle: OracleStatusDoc) -> Self {
        Self {
            schema_version: 1,
            input_echo: input.clone(),
            intersection_product: GroupDoc::of(&r.intersection_product),
            amitsur_cover: GroupDoc::of_subgroup(&r.amitsur_cover),
            amitsur_pinched: GroupDoc::of_subgroup(&r.amitsur_pinched),
            amitsur_quotient: GroupDoc::of(&r.amitsur_quotient),
            coker_injection: GroupDoc::of(&r.coker_injection),
            ker_phi1: GroupDoc::of(&r.ker_phi1),
            ker_phi1_split: r.ker_phi1_split,
            h2_mu: GroupDoc::of(&r.h2_mu),
            coker_phi_a: GroupDoc::of(&r.coker_phi_a),
            br1_pinched: GroupDoc::of(&r.br1_pinched),
            index_facts: IndexFactsDoc {
                cover_index: r.index_facts.cover_index,
                locus_index: r.index_facts.locus_index,
                constraint_divisor: r.index_facts.constraint_divisor,
                annihilator_bound: r.index_facts.annihilator_bound.as_ref().map(|o| o.to_string()),
                rl_order: r.index_facts.rl_order,
            },
            predicates: PredicatesDoc {
                universal_homeomorphism: r.predicates.universal_homeomorphism,
                residue_iso: r.predicates.residue_iso,
                exact_regime: r.predicates.exact_regime,
            },
            applied_theorems: TheoremDoc::list(&r.applied),
            caveats: r.caveats.clone(),
            oracle_status: oracle,
        }
    }

    pub fn to_text(&self) -> String {
        let opt = |v: Option<u64>| v.map_or_else(|| "-".to_string(), |n| n.to_string());
        let rows: Vec<(&str, String)> = vec![
            ("intersection product", self.intersection_product.descriptor.clone()),
            ("B(X~/k)", self.amitsur_cover.descriptor.clone()),
            ("B(X/k)", self.amitsur_pinched.descriptor.clone()),
            ("B(X~/k)/B(X/k)", self.amitsur_quotient.descriptor.clone()),
            ("coker of injection", self.coker_injection.descriptor.clone()),
            (
                "ker phi1*",
                format!(
                    "{}{}",
                    self.ker_phi1.descriptor,
                    if self.ker_phi1_split { " (split)" } else { "" }
                ),
            ),
            ("H^2(k, mu)", self.h2_mu.descriptor.clone()),
            ("coker phi_a*", self.coker_phi_a.descriptor.clone()),
            ("Br1 X", self.br1_pinched.descriptor.clone()),
            ("I(X~)", opt(self.index_facts.cover_index)),
            ("I(Y)", opt(self.index_facts.locus_index)),
            ("gcd(I(X~), I(Y))", opt(self.index_facts.constraint_divisor)),
            (
                "m(Y~/Y)",
                self.index_facts
                    .annihilator_bound
                    .clone()
                    .unwrap_or_else(|| "-".into()),
            ),
            ("#B(X/k) by index", opt(self.index_facts.rl_order)),
            (
                "universal homeomorphism",
                self.predicates.universal_homeomorphism.to_string(),
            ),
            ("residue isomorphisms", self.predicates.residue_iso.to_string()),
            ("oracle", oracle_word(self.oracle_status.status).to_string()),
        ];
        let mut out = aligned(&rows);
        out.push_str("theorems:\n");
        for t in &self.applied_theorems {
            out.push_str(&format!("  {:<24} {}\n", t.tag, t.citation));
        }
        section(&mut out, "caveats", &self.caveats);
        section(&mut out, "oracle notes", &self.oracle_status.notes);
        out
    }
}

fn oracle_word(s: OracleState) -> &'static str {
    match s {
        OracleState::Pass => "pass",
        OracleState::Fail => "fail",
        OracleState::Skipped => "skipped",
    }
}

fn aligned(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}

fn section(out: &mut String, title: &str, lines: &[String]) {
    if lines.is_empty() {
        return;
    }
    out.push_str(title);
    out.push_str(":\n");
    for l in lines {
        out.push_str("  ");
        out.push_str(l);
        out.push('\n');
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ChainStepDoc {
    pub step: usize,
    pub ker_phi1: GroupDoc,
    pub coker_phi_a: GroupDoc,
    pub br1: GroupDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ChainReportDocument {
    pub schema_version: u64,
    pub input_echo: ChainDocument,
    pub chain: Vec<ChainStepDoc>,
    pub all_isomorphisms: bool,
    pub applied_theorems: Vec<TheoremDoc>,
}

impl ChainReportDocument {
    pub fn new(input: &ChainDocument, r: &ChainReport) -> Self {
        Self {
            schema_version: 1,
            input_echo: input.clone(),
            chain: r
                .steps
                .iter()
                .enumerate()
                .map(|(i, s)| ChainStepDoc {
                    step: i + 1,
                    ker_phi1: GroupDoc::of(&s.ker_phi1),
                    coker_phi_a: GroupDoc::of(&s.coker_phi_a),
                    br1: GroupDoc::of(&s.br1),
                })
                .collect(),
            all_isomorphisms: r.all_isomorphisms,
            applied_theorems: TheoremDoc::list(&[
                Theorem::ResidueIsomorphism,
                Theorem::Seminormalization,
            ]),
        }
    }

    pub fn to_text(&self) -> String {
        let mut rows: Vec<(String, String)> = self
            .chain
            .iter()
            .map(|s| {
                (
                    format!("step {}", s.step),
                    format!(
                        "ker phi1* = {}, coker phi_a* = {}, Br1 = {}",
                        s.ker_phi1.descriptor, s.coker_phi_a.descriptor, s.br1.descriptor
                    ),
                )
            })
            .collect();
        rows.push(("all isomorphisms".into(), self.all_isomorphisms.to_string()));
        let borrowed: Vec<(&str, String)> = rows.iter().map(|(k, v)| (k.as_str(), v.clone())).collect();
        let mut out = aligned(&borrowed);
        out.push_str("theorems:\n");
        for t in &self.applied_theorems {
            out.push_str(&format!("  {:<24} {}\n", t.tag, t.citation));
        }
        out
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("report documents serialize");
    s.push('\n');
    s
}
