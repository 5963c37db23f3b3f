//! Symbolic base fields and finite extensions.
//!
//! Fields carry no elements. A [`FieldSpec`] records which evaluation rule
//! applies to its Brauer group, and an [`ExtensionSpec`] records the degree
//! data of a finite extension. Over a non-archimedean local field the
//! invariant map identifies `Br k` with ℚ/ℤ and `Br(K/k)` with
//! `[K:k]⁻¹ℤ/ℤ`, so degrees are all the formulas ever read.

use std::fmt;

use crate::error::{Error, Result};
use crate::order::{is_prime, Order};
use crate::pinch::Violation;
use crate::qz::{AbGroup, QzSubgroup};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    /// Finite extension of `Q_p`; characteristic exponent 1.
    PAdicLocal { residue_char: u64 },
    /// Finite extension of `F_p((t))`; characteristic exponent `p`.
    LocalFunctionField { characteristic: u64 },
    Finite { characteristic: u64 },
    RealClosed,
    SeparablyClosed { char_exponent: u64 },
    AlgebraicallyClosed { char_exponent: u64 },
    /// A perfect field with no Brauer evaluation rule.
    AbstractPerfect { char_exponent: u64 },
    /// Any field with no Brauer evaluation rule.
    Abstract { char_exponent: u64 },
}

impl FieldKind {
    pub fn name(&self) -> &'static str {
        match self {
            FieldKind::PAdicLocal { .. } => "p-adic-local",
            FieldKind::LocalFunctionField { .. } => "local-function-field",
            FieldKind::Finite { .. } => "finite",
            FieldKind::RealClosed => "real-closed",
            FieldKind::SeparablyClosed { .. } => "separably-closed",
            FieldKind::AlgebraicallyClosed { .. } => "algebraically-closed",
            FieldKind::AbstractPerfect { .. } => "abstract-perfect",
            FieldKind::Abstract { .. } => "abstract",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    pub kind: FieldKind,
    pub label: String,
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

impl FieldSpec {
    pub fn new(kind: FieldKind, label: impl Into<String>) -> Self {
        Self {
            kind,
            label: label.into(),
        }
    }

    pub fn p_adic(p: u64) -> Self {
        Self::new(FieldKind::PAdicLocal { residue_char: p }, format!("Q_{p}"))
    }

    pub fn local_function_field(p: u64) -> Self {
        Self::new(
            FieldKind::LocalFunctionField { characteristic: p },
            format!("F_{p}((t))"),
        )
    }

    pub fn finite(p: u64) -> Self {
        Self::new(FieldKind::Finite { characteristic: p }, format!("F_{p}"))
    }

    pub fn abstract_field(char_exponent: u64, label: impl Into<String>) -> Self {
        Self::new(FieldKind::Abstract { char_exponent }, label)
    }

    /// 1 in characteristic 0, otherwise the characteristic.
    pub fn char_exponent(&self) -> u64 {
        match self.kind {
            FieldKind::PAdicLocal { .. } | FieldKind::RealClosed => 1,
            FieldKind::LocalFunctionField { characteristic }
            | FieldKind::Finite { characteristic } => characteristic,
            FieldKind::SeparablyClosed { char_exponent }
            | FieldKind::AlgebraicallyClosed { char_exponent }
            | FieldKind::AbstractPerfect { char_exponent }
            | FieldKind::Abstract { char_exponent } => char_exponent,
        }
    }

    pub fn is_perfect(&self) -> bool {
        match self.kind {
            FieldKind::PAdicLocal { .. }
            | FieldKind::Finite { .. }
            | FieldKind::RealClosed
            | FieldKind::AlgebraicallyClosed { .. }
            | FieldKind::AbstractPerfect { .. } => true,
            FieldKind::LocalFunctionField { .. }
            | FieldKind::SeparablyClosed { .. }
            | FieldKind::Abstract { .. } => self.char_exponent() == 1,
        }
    }

    /// Non-archimedean local field.
    pub fn is_local(&self) -> bool {
        matches!(
            self.kind,
            FieldKind::PAdicLocal { .. } | FieldKind::LocalFunctionField { .. }
        )
    }

    /// Fields whose Brauer group is zero.
    pub fn has_trivial_brauer_group(&self) -> bool {
        matches!(
            self.kind,
            FieldKind::Finite { .. }
                | FieldKind::SeparablyClosed { .. }
                | FieldKind::AlgebraicallyClosed { .. }
        )
    }

    /// Local and finite fields: every Brauer computation is exact.
    pub fn is_exact_regime(&self) -> bool {
        self.is_local() || matches!(self.kind, FieldKind::Finite { .. })
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let (what, p, allow_one) = match self.kind {
            FieldKind::PAdicLocal { residue_char } => ("residue characteristic", residue_char, false),
            FieldKind::LocalFunctionField { characteristic }
            | FieldKind::Finite { characteristic } => ("characteristic", characteristic, false),
            FieldKind::RealClosed => return out,
            FieldKind::SeparablyClosed { char_exponent }
            | FieldKind::AlgebraicallyClosed { char_exponent }
            | FieldKind::AbstractPerfect { char_exponent }
            | FieldKind::Abstract { char_exponent } => {
                ("characteristic exponent", char_exponent, true)
            }
        };
        if !(is_prime(p) || (allow_one && p == 1)) {
            let expected = if allow_one { "1 or a prime" } else { "a prime" };
            out.push(Violation::new(
                "field-characteristic",
                format!("{} of {} must be {expected}, got {p}", what, self.label),
            ));
        }
        out
    }
}

/// A finite extension `K/k` with `[K:k] = [K:k]_s · [K:k]_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtensionSpec {
    pub base: FieldSpec,
    pub total_degree: u64,
    pub separable_degree: u64,
    pub inseparable_degree: u64,
    pub label: String,
}

impl ExtensionSpec {
    /// Builds and validates an extension of `base`.
    pub fn new(
        base: FieldSpec,
        total_degree: u64,
        separable_degree: u64,
        label: impl Into<String>,
    ) -> Result<Self> {
        if total_degree == 0 || separable_degree == 0 {
            return Err(Error::InvalidArgument("degrees must be at least 1".into()));
        }
        if !total_degree.is_multiple_of(separable_degree) {
            return Err(Error::InvalidArgument(format!(
                "separable degree {separable_degree} does not divide degree {total_degree}"
            )));
        }
        let ext = Self {
            base,
            total_degree,
            separable_degree,
            inseparable_degree: total_degree / separable_degree,
            label: label.into(),
        };
        match ext.validate().into_iter().next() {
            Some(v) => Err(Error::InvalidArgument(v.message)),
            None => Ok(ext),
        }
    }

    /// A separable extension of the given degree.
    pub fn separable(base: FieldSpec, degree: u64, label: impl Into<String>) -> Result<Self> {
        Self::new(base, degree, degree, label)
    }

    pub fn is_trivial(&self) -> bool {
        self.total_degree == 1
    }

    pub fn is_purely_inseparable(&self) -> bool {
        self.separable_degree == 1
    }

    pub fn degree(&self) -> Order {
        Order::from_u64(self.total_degree).unwrap_or_default()
    }

    /// The field `K` itself, as a base for further extensions.
    pub fn top_field(&self) -> FieldSpec {
        use FieldKind::*;
        let kind = match &self.base.kind {
            RealClosed if self.total_degree == 1 => RealClosed,
            RealClosed => AlgebraicallyClosed { char_exponent: 1 },
            other => other.clone(),
        };
        FieldSpec::new(kind, self.label.clone())
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let name = &self.label;
        if self.total_degree == 0 || self.separable_degree == 0 || self.inseparable_degree == 0 {
            out.push(Violation::new(
                "degree-zero",
                format!("{name}: degrees must be at least 1"),
            ));
            return out;
        }
        if self.separable_degree.checked_mul(self.inseparable_degree) != Some(self.total_degree) {
            out.push(Violation::new(
                "degree-factorization",
                format!(
                    "{name}: degree {} is not separable degree {} times inseparable degree {}",
                    self.total_degree, self.separable_degree, self.inseparable_degree
                ),
            ));
        }
        let p = self.base.char_exponent();
        if self.inseparable_degree > 1 {
            if self.base.is_perfect() {
                out.push(Violation::new(
                    "perfect-base-inseparable",
                    format!(
                        "{name}: {} is perfect, so it has no inseparable extensions",
                        self.base.label
                    ),
                ));
            } else if !Order::from_u64(self.inseparable_degree)
                .is_some_and(|d| d.is_power_of(p))
            {
                out.push(Violation::new(
                    "inseparable-degree-not-power",
                    format!(
                        "{name}: inseparable degree {} is not a power of the characteristic {p}",
                        self.inseparable_degree
                    ),
                ));
            }
        }
        match self.base.kind {
            FieldKind::RealClosed if self.total_degree > 2 => out.push(Violation::new(
                "real-closed-degree",
                format!(
                    "{name}: a real closed field has extensions of degree 1 or 2 only, got {}",
                    self.total_degree
                ),
            )),
            FieldKind::AlgebraicallyClosed { .. } if self.total_degree > 1 => {
                out.push(Violation::new(
                    "closed-field-degree",
                    format!(
                        "{name}: an algebraically closed field has no proper finite extensions"
                    ),
                ))
            }
            FieldKind::SeparablyClosed { .. } if self.separable_degree > 1 => {
                out.push(Violation::new(
                    "closed-field-degree",
                    format!(
                        "{name}: a separably closed field has no proper separable extensions"
                    ),
                ))
            }
            _ => {}
        }
        out
    }
}

/// `Br k`.
pub fn brauer_group(f: &FieldSpec) -> AbGroup {
    match f.kind {
        FieldKind::PAdicLocal { .. } | FieldKind::LocalFunctionField { .. } => AbGroup::FullQmodZ,
        FieldKind::RealClosed => AbGroup::cyclic(Order::from(2)),
        FieldKind::Finite { .. }
        | FieldKind::SeparablyClosed { .. }
        | FieldKind::AlgebraicallyClosed { .. } => AbGroup::trivial(),
        FieldKind::AbstractPerfect { .. } | FieldKind::Abstract { .. } => {
            AbGroup::SymbolicBr(f.label.clone())
        }
    }
}

/// `Br(K/k) = ker[Br k → Br K]`.
pub fn relative_brauer(e: &ExtensionSpec) -> QzSubgroup {
    if e.is_trivial() {
        return QzSubgroup::trivial();
    }
    match e.base.kind {
        FieldKind::PAdicLocal { .. } | FieldKind::LocalFunctionField { .. } => {
            QzSubgroup::Cyclic(e.degree())
        }
        FieldKind::Finite { .. }
        | FieldKind::SeparablyClosed { .. }
        | FieldKind::AlgebraicallyClosed { .. } => QzSubgroup::trivial(),
        FieldKind::RealClosed => QzSubgroup::Cyclic(Order::from(2)),
        FieldKind::AbstractPerfect { .. } | FieldKind::Abstract { .. } => {
            let note = if e.is_purely_inseparable() {
                format!("{}-torsion of Br({})", e.total_degree, e.base.label)
            } else {
                format!("Br({}/{})", e.label, e.base.label)
            };
            QzSubgroup::bounded(e.degree(), note)
        }
    }
}

/// `Br(k)_m`, the `m`-torsion of `Br k`.
pub fn brauer_torsion(f: &FieldSpec, m: &Order) -> QzSubgroup {
    let p = f.char_exponent();
    // a perfect field of characteristic p has no p-torsion in its Brauer group
    let m = if f.is_perfect() && p > 1 {
        m.strip_prime(p)
    } else {
        m.clone()
    };
    match f.kind {
        FieldKind::PAdicLocal { .. } | FieldKind::LocalFunctionField { .. } => {
            QzSubgroup::Full.torsion(&m)
        }
        FieldKind::RealClosed => QzSubgroup::Cyclic(Order::from(2)).torsion(&m),
        FieldKind::Finite { .. }
        | FieldKind::SeparablyClosed { .. }
        | FieldKind::AlgebraicallyClosed { .. } => QzSubgroup::trivial(),
        FieldKind::AbstractPerfect { .. } | FieldKind::Abstract { .. } => {
            let note = format!("{m}-torsion of Br({})", f.label);
            QzSubgroup::bounded(m, note)
        }
    }
}

/// `H³(K/k) = ker[H³(k, G_m) → H³(K, G_m)]`.
pub fn relative_h3(e: &ExtensionSpec) -> QzSubgroup {
    if e.is_trivial() {
        return QzSubgroup::trivial();
    }
    match e.base.kind {
        // local fields have cohomological dimension 2
        FieldKind::PAdicLocal { .. } | FieldKind::LocalFunctionField { .. } => {
            QzSubgroup::trivial()
        }
        FieldKind::Finite { .. }
        | FieldKind::SeparablyClosed { .. }
        | FieldKind::AlgebraicallyClosed { .. } => QzSubgroup::trivial(),
        FieldKind::RealClosed
        | FieldKind::AbstractPerfect { .. }
        | FieldKind::Abstract { .. } => QzSubgroup::bounded(
            e.degree(),
            format!("H^3({}/{})", e.label, e.base.label),
        ),
    }
}
