//! Finite subgroups of ℚ/ℤ and finite abelian group bookkeeping.
//!
//! A finite subgroup of ℚ/ℤ is determined by its order: the subgroup of
//! order `n` is `(1/n)ℤ/ℤ`. Intersections and joins are therefore gcds and
//! lcms of orders. Abelian groups that come out of exact sequences are
//! described by [`AbGroup`], which keeps exactly as much structure as the
//! inputs determine and nothing more: extensions are never split here.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::order::Order;

/// The order of a group descriptor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupOrder {
    Finite(Order),
    Infinite,
    Unknown,
}

impl GroupOrder {
    pub fn finite(&self) -> Option<&Order> {
        match self {
            GroupOrder::Finite(n) => Some(n),
            _ => None,
        }
    }

    fn mul(&self, other: &GroupOrder) -> GroupOrder {
        match (self, other) {
            (GroupOrder::Infinite, _) | (_, GroupOrder::Infinite) => GroupOrder::Infinite,
            (GroupOrder::Finite(a), GroupOrder::Finite(b)) => GroupOrder::Finite(a.mul(b)),
            _ => GroupOrder::Unknown,
        }
    }
}

impl fmt::Display for GroupOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupOrder::Finite(n) => write!(f, "{n}"),
            GroupOrder::Infinite => f.write_str("infinite"),
            GroupOrder::Unknown => f.write_str("unknown"),
        }
    }
}

/// An upper bound on the exponent: every element's order divides the value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Exponent {
    Divides(Order),
    Unbounded,
}

impl Exponent {
    pub fn bound(&self) -> Option<&Order> {
        match self {
            Exponent::Divides(e) => Some(e),
            Exponent::Unbounded => None,
        }
    }

    fn mul(&self, other: &Exponent) -> Exponent {
        match (self, other) {
            (Exponent::Divides(a), Exponent::Divides(b)) => Exponent::Divides(a.mul(b)),
            _ => Exponent::Unbounded,
        }
    }

    fn lcm(&self, other: &Exponent) -> Exponent {
        match (self, other) {
            (Exponent::Divides(a), Exponent::Divides(b)) => Exponent::Divides(a.lcm(b)),
            _ => Exponent::Unbounded,
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Divides(e) => write!(f, "{e}"),
            Exponent::Unbounded => f.write_str("unbounded"),
        }
    }
}

/// A subgroup of ℚ/ℤ (or, over fields without an invariant map, a subgroup
/// of `Br k` known only through an exponent bound).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum QzSubgroup {
    /// `(1/n)ℤ/ℤ`; `Cyclic(1)` is the trivial group.
    Cyclic(Order),
    Full,
    /// Some subgroup whose exponent divides `exponent`. Never an exact answer.
    Bounded { exponent: Order, note: String },
}

/// `(1/n)ℤ/ℤ`.
pub fn cyclic(n: u64) -> Result<QzSubgroup> {
    Order::from_u64(n)
        .map(QzSubgroup::Cyclic)
        .ok_or_else(|| Error::InvalidArgument("cyclic subgroup order must be at least 1".into()))
}

impl QzSubgroup {
    pub fn trivial() -> Self {
        QzSubgroup::Cyclic(Order::one())
    }

    /// A bounded unknown; a bound of 1 collapses to the trivial group.
    pub fn bounded(exponent: Order, note: impl Into<String>) -> Self {
        if exponent.is_one() {
            Self::trivial()
        } else {
            QzSubgroup::Bounded {
                exponent,
                note: note.into(),
            }
        }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, QzSubgroup::Cyclic(n) if n.is_one())
    }

    /// The exact order, if this is a known finite subgroup.
    pub fn known_order(&self) -> Option<&Order> {
        match self {
            QzSubgroup::Cyclic(n) => Some(n),
            _ => None,
        }
    }

    pub fn order(&self) -> GroupOrder {
        match self {
            QzSubgroup::Cyclic(n) => GroupOrder::Finite(n.clone()),
            QzSubgroup::Full => GroupOrder::Infinite,
            QzSubgroup::Bounded { .. } => GroupOrder::Unknown,
        }
    }

    pub fn exponent(&self) -> Exponent {
        match self {
            QzSubgroup::Cyclic(n) => Exponent::Divides(n.clone()),
            QzSubgroup::Full => Exponent::Unbounded,
            QzSubgroup::Bounded { exponent, .. } => Exponent::Divides(exponent.clone()),
        }
    }

    pub fn intersect(&self, other: &QzSubgroup) -> QzSubgroup {
        use QzSubgroup::*;
        match (self, other) {
            (Full, g) | (g, Full) => g.clone(),
            (Cyclic(m), Cyclic(n)) => Cyclic(m.gcd(n)),
            (Bounded { exponent, note }, Cyclic(n)) | (Cyclic(n), Bounded { exponent, note }) => {
                Self::bounded(exponent.gcd(n), note.clone())
            }
            (
                Bounded {
                    exponent: e,
                    note: a,
                },
                Bounded {
                    exponent: f,
                    note: b,
                },
            ) => {
                let note = if a == b { a.clone() } else { format!("{a} ∩ {b}") };
                Self::bounded(e.gcd(f), note)
            }
        }
    }

    /// The subgroup generated by both. Only used for lattice cross-checks.
    pub fn join(&self, other: &QzSubgroup) -> QzSubgroup {
        use QzSubgroup::*;
        match (self, other) {
            (Full, _) | (_, Full) => Full,
            (Cyclic(m), Cyclic(n)) => Cyclic(m.lcm(n)),
            (Bounded { exponent, note }, Cyclic(n)) | (Cyclic(n), Bounded { exponent, note }) => {
                Self::bounded(exponent.lcm(n), note.clone())
            }
            (
                Bounded {
                    exponent: e,
                    note: a,
                },
                Bounded {
                    exponent: f,
                    note: b,
                },
            ) => Self::bounded(e.lcm(f), format!("{a} + {b}")),
        }
    }

    /// The `m`-torsion subgroup.
    pub fn torsion(&self, m: &Order) -> QzSubgroup {
        match self {
            QzSubgroup::Cyclic(n) => QzSubgroup::Cyclic(n.gcd(m)),
            QzSubgroup::Full => QzSubgroup::Cyclic(m.clone()),
            QzSubgroup::Bounded { exponent, note } => Self::bounded(exponent.gcd(m), note.clone()),
        }
    }

    /// The same group viewed as an abstract abelian group.
    pub fn to_group(&self) -> AbGroup {
        match self {
            QzSubgroup::Cyclic(n) => AbGroup::cyclic(n.clone()),
            QzSubgroup::Full => AbGroup::FullQmodZ,
            QzSubgroup::Bounded { exponent, note } => AbGroup::unknown(
                Exponent::Divides(exponent.clone()),
                GroupOrder::Unknown,
                note.clone(),
            ),
        }
    }
}

impl fmt::Display for QzSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_group().fmt(f)
    }
}

/// A finite abelian group, stored by its elementary divisors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    /// prime -> exponents of the `ℤ/p^e` summands, descending.
    primary: BTreeMap<u64, Vec<u32>>,
}

impl FiniteGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// `ℤ/n₁ ⊕ ℤ/n₂ ⊕ …` for arbitrary cyclic orders.
    pub fn from_cyclic_orders<'a>(orders: impl IntoIterator<Item = &'a Order>) -> Self {
        let mut g = Self::trivial();
        for n in orders {
            g.absorb_cyclic(n);
        }
        g
    }

    /// Parses an invariant-factor list; entries must be at least 2 and chained.
    pub fn from_invariant_factors(factors: &[u64]) -> Result<Self> {
        let mut orders = Vec::with_capacity(factors.len());
        for (i, &d) in factors.iter().enumerate() {
            if d < 2 {
                return Err(Error::InvalidArgument(format!(
                    "invariant factor {d} must be at least 2"
                )));
            }
            if i > 0 && d % factors[i - 1] != 0 {
                return Err(Error::InvalidArgument(format!(
                    "invariant factors must form a divisibility chain: {} does not divide {d}",
                    factors[i - 1]
                )));
            }
            orders.push(Order::from_u64(d).expect("nonzero"));
        }
        Ok(Self::from_cyclic_orders(&orders))
    }

    fn absorb_cyclic(&mut self, n: &Order) {
        for (p, e) in n.factors() {
            let exps = self.primary.entry(p).or_default();
            let at = exps.partition_point(|&x| x >= e);
            exps.insert(at, e);
        }
    }

    fn merge(&mut self, other: &FiniteGroup) {
        for (&p, exps) in &other.primary {
            for &e in exps {
                let slot = self.primary.entry(p).or_default();
                let at = slot.partition_point(|&x| x >= e);
                slot.insert(at, e);
            }
        }
    }

    /// Invariant factors `d₁ | d₂ | … | d_r`, each at least 2. Empty for the
    /// trivial group.
    pub fn invariant_factors(&self) -> Vec<Order> {
        let rank = self.primary.values().map(Vec::len).max().unwrap_or(0);
        let mut out: Vec<Order> = (0..rank)
            .map(|i| {
                self.primary
                    .iter()
                    .filter_map(|(&p, exps)| exps.get(i).map(|&e| Order::prime_power(p, e)))
                    .fold(Order::one(), |acc, q| acc.mul(&q))
            })
            .collect();
        out.reverse();
        out
    }

    pub fn order(&self) -> Order {
        self.primary
            .iter()
            .flat_map(|(&p, exps)| exps.iter().map(move |&e| Order::prime_power(p, e)))
            .fold(Order::one(), |acc, q| acc.mul(&q))
    }

    pub fn exponent(&self) -> Order {
        self.primary
            .iter()
            .map(|(&p, exps)| Order::prime_power(p, exps[0]))
            .fold(Order::one(), |acc, q| acc.mul(&q))
    }

    pub fn is_trivial(&self) -> bool {
        self.primary.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.primary.values().all(|exps| exps.len() == 1)
    }
}

/// Descriptor of an abelian group produced by the structure theorems.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AbGroup {
    Known(FiniteGroup),
    /// `0 → sub → G → quot → 0` with no splitting asserted.
    Extension {
        sub: Box<AbGroup>,
        quot: Box<AbGroup>,
        order: GroupOrder,
        exponent: Exponent,
    },
    /// Normalized by [`product`]: no nested sums, no trivial summands, at
    /// most one `Known` summand (last).
    DirectSum(Vec<AbGroup>),
    /// `Br k` for a field with no evaluation rule; carries the field label.
    SymbolicBr(String),
    FullQmodZ,
    Unknown {
        exponent: Exponent,
        order: GroupOrder,
        note: String,
    },
}

impl AbGroup {
    pub fn trivial() -> Self {
        AbGroup::Known(FiniteGroup::trivial())
    }

    pub fn cyclic(n: Order) -> Self {
        AbGroup::Known(FiniteGroup::from_cyclic_orders([&n]))
    }

    /// An unknown group; collapses to the trivial group when the bounds force it.
    pub fn unknown(exponent: Exponent, order: GroupOrder, note: impl Into<String>) -> Self {
        let forced_trivial = matches!(&exponent, Exponent::Divides(e) if e.is_one())
            || matches!(&order, GroupOrder::Finite(n) if n.is_one());
        if forced_trivial {
            return Self::trivial();
        }
        AbGroup::Unknown {
            exponent,
            order,
            note: note.into(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        match self {
            AbGroup::Known(g) => g.is_trivial(),
            AbGroup::DirectSum(s) => s.iter().all(AbGroup::is_trivial),
            _ => false,
        }
    }

    pub fn is_known(&self) -> bool {
        matches!(self, AbGroup::Known(_))
    }

    pub fn as_known(&self) -> Option<&FiniteGroup> {
        match self {
            AbGroup::Known(g) => Some(g),
            _ => None,
        }
    }

    /// True when nothing about this group is determined.
    pub fn is_unknown(&self) -> bool {
        matches!(self, AbGroup::Unknown { .. })
    }

    pub fn order(&self) -> GroupOrder {
        match self {
            AbGroup::Known(g) => GroupOrder::Finite(g.order()),
            AbGroup::Extension { order, .. } => order.clone(),
            AbGroup::DirectSum(s) => s
                .iter()
                .fold(GroupOrder::Finite(Order::one()), |acc, g| acc.mul(&g.order())),
            AbGroup::SymbolicBr(_) => GroupOrder::Unknown,
            AbGroup::FullQmodZ => GroupOrder::Infinite,
            AbGroup::Unknown { order, .. } => order.clone(),
        }
    }

    pub fn exponent(&self) -> Exponent {
        match self {
            AbGroup::Known(g) => Exponent::Divides(g.exponent()),
            AbGroup::Extension { exponent, .. } => exponent.clone(),
            AbGroup::DirectSum(s) => s
                .iter()
                .fold(Exponent::Divides(Order::one()), |acc, g| acc.lcm(&g.exponent())),
            AbGroup::SymbolicBr(_) | AbGroup::FullQmodZ => Exponent::Unbounded,
            AbGroup::Unknown { exponent, .. } => exponent.clone(),
        }
    }

    fn sort_rank(&self) -> u8 {
        match self {
            AbGroup::SymbolicBr(_) => 0,
            AbGroup::FullQmodZ => 1,
            AbGroup::Extension { .. } => 2,
            AbGroup::Unknown { .. } => 3,
            AbGroup::DirectSum(_) => 4,
            AbGroup::Known(_) => 5,
        }
    }

    fn fmt_summand(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AbGroup::Known(g) => {
                let parts: Vec<String> = g
                    .invariant_factors()
                    .iter()
                    .map(|d| format!("Z/{d}"))
                    .collect();
                f.write_str(&parts.join(" (+) "))
            }
            AbGroup::Extension { .. } | AbGroup::Unknown { .. } => write!(f, "[{self}]"),
            other => fmt::Display::fmt(other, f),
        }
    }
}

impl fmt::Display for AbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AbGroup::Known(g) if g.is_trivial() => f.write_str("0"),
            AbGroup::Known(g) => {
                let parts: Vec<String> = g
                    .invariant_factors()
                    .iter()
                    .map(|d| format!("Z/{d}"))
                    .collect();
                f.write_str(&parts.join(" + "))
            }
            AbGroup::Extension {
                sub,
                quot,
                order,
                exponent,
            } => {
                write!(f, "ext({sub} ; {quot}) order {order}")?;
                if let Exponent::Divides(e) = exponent {
                    write!(f, ", exponent | {e}")?;
                }
                Ok(())
            }
            AbGroup::DirectSum(s) => {
                for (i, g) in s.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" (+) ")?;
                    }
                    g.fmt_summand(f)?;
                }
                Ok(())
            }
            AbGroup::SymbolicBr(label) => write!(f, "Br({label})"),
            AbGroup::FullQmodZ => f.write_str("Q/Z"),
            AbGroup::Unknown {
                exponent, order, ..
            } => {
                f.write_str("unknown")?;
                if let GroupOrder::Finite(n) = order {
                    write!(f, " of order {n}")?;
                } else if *order == GroupOrder::Infinite {
                    f.write_str(", infinite")?;
                }
                match exponent {
                    Exponent::Divides(e) => write!(f, ", exponent | {e}"),
                    Exponent::Unbounded => f.write_str(", exponent unbounded"),
                }
            }
        }
    }
}

/// Direct product, normalized: finite known summands are merged into one
/// invariant-factor group, everything else is kept and sorted.
pub fn product(groups: impl IntoIterator<Item = AbGroup>) -> AbGroup {
    let mut known = FiniteGroup::trivial();
    let mut rest = Vec::new();
    let mut stack: Vec<AbGroup> = groups.into_iter().collect();
    stack.reverse();
    while let Some(g) = stack.pop() {
        match g {
            AbGroup::Known(k) => known.merge(&k),
            AbGroup::DirectSum(s) => stack.extend(s.into_iter().rev()),
            other => rest.push(other),
        }
    }
    rest.sort_by_cached_key(|g| (g.sort_rank(), g.to_string()));
    if rest.is_empty() {
        return AbGroup::Known(known);
    }
    if !known.is_trivial() {
        rest.push(AbGroup::Known(known));
    }
    if rest.len() == 1 {
        rest.pop().expect("one summand")
    } else {
        AbGroup::DirectSum(rest)
    }
}

/// An extension `0 → sub → G → quot → 0`, with order and exponent
/// bookkeeping. Trivial ends collapse; nothing else is simplified.
pub fn extension(sub: AbGroup, quot: AbGroup) -> AbGroup {
    if quot.is_trivial() {
        return sub;
    }
    if sub.is_trivial() {
        return quot;
    }
    let order = sub.order().mul(&quot.order());
    let exponent = sub.exponent().mul(&quot.exponent());
    AbGroup::Extension {
        sub: Box::new(sub),
        quot: Box::new(quot),
        order,
        exponent,
    }
}

/// Cokernel of an injection of the cyclic group `sub` into `amb`.
///
/// The structure is determined when `amb` is cyclic, or when `sub` is
/// trivial or all of `amb`; otherwise only order and exponent are reported.
pub fn coker_of_injection(sub: &QzSubgroup, amb: &AbGroup) -> Result<AbGroup> {
    if sub.is_trivial() {
        return Ok(amb.clone());
    }
    let m = match sub {
        QzSubgroup::Cyclic(m) => m,
        QzSubgroup::Full => {
            return Err(Error::InvalidArgument(
                "cannot take the cokernel of an injection of Q/Z".into(),
            ))
        }
        QzSubgroup::Bounded { .. } => {
            let order = match amb.order() {
                GroupOrder::Infinite => GroupOrder::Infinite,
                _ => GroupOrder::Unknown,
            };
            return Ok(AbGroup::unknown(
                amb.exponent(),
                order,
                "cokernel of an injection of a group of unknown order",
            ));
        }
    };
    match amb {
        AbGroup::Known(g) => {
            let n = g.order();
            if !m.divides(&n) || !m.divides(&g.exponent()) {
                return Err(Error::InconsistentConfiguration(format!(
                    "a cyclic group of order {m} cannot inject into {amb}"
                )));
            }
            let q = n.checked_div(m).expect("checked divisibility");
            if q.is_one() {
                Ok(AbGroup::trivial())
            } else if g.is_cyclic() {
                Ok(AbGroup::cyclic(q))
            } else {
                Ok(AbGroup::unknown(
                    Exponent::Divides(g.exponent()),
                    GroupOrder::Finite(q.clone()),
                    format!("quotient of {amb} by a cyclic subgroup of order {m}; order {q}"),
                ))
            }
        }
        other => {
            if let Exponent::Divides(e) = other.exponent() {
                if !m.divides(&e) {
                    return Err(Error::InconsistentConfiguration(format!(
                        "a cyclic group of order {m} cannot inject into a group of exponent dividing {e}"
                    )));
                }
            }
            let order = match other.order() {
                GroupOrder::Finite(n) => GroupOrder::Finite(n.checked_div(m).ok_or_else(|| {
                    Error::InconsistentConfiguration(format!(
                        "a cyclic group of order {m} cannot inject into a group of order {n}"
                    ))
                })?),
                o => o,
            };
            Ok(AbGroup::unknown(
                other.exponent(),
                order,
                format!("quotient of {other} by a cyclic subgroup of order {m}"),
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(n: u64) -> Order {
        Order::from_u64(n).unwrap()
    }

    fn known(factors: &[u64]) -> AbGroup {
        AbGroup::Known(FiniteGroup::from_cyclic_orders(
            &factors.iter().map(|&n| o(n)).collect::<Vec<_>>(),
        ))
    }

    fn factors_of(g: &AbGroup) -> Vec<u64> {
        g.as_known()
            .unwrap()
            .invariant_factors()
            .iter()
            .map(|d| d.to_u64().unwrap())
            .collect()
    }

    #[test]
    fn cyclic_constructor() {
        assert!(cyclic(1).unwrap().is_trivial());
        assert_eq!(cyclic(6).unwrap().known_order(), Some(&o(6)));
        assert_eq!(cyclic(2).unwrap(), QzSubgroup::Cyclic(o(2)));
        assert!(matches!(cyclic(0), Err(Error::InvalidArgument(_))));
    }

    // Expected values below come from the enumeration oracle
    // (oracle::enumerate_subgroup inside Z/12 and Z/15).
    #[test]
    fn intersect_examples() {
        let a = cyclic(4).unwrap();
        let b = cyclic(6).unwrap();
        assert_eq!(a.intersect(&b), cyclic(2).unwrap());
        assert_eq!(a.intersect(&QzSubgroup::Full), a);
        assert!(cyclic(3).unwrap().intersect(&cyclic(5).unwrap()).is_trivial());
    }

    #[test]
    fn intersect_with_bounded() {
        let u = QzSubgroup::bounded(o(6), "x");
        assert_eq!(
            u.intersect(&cyclic(4).unwrap()),
            QzSubgroup::bounded(o(2), "x")
        );
        assert!(u.intersect(&cyclic(5).unwrap()).is_trivial());
    }

    #[test]
    fn join_examples() {
        assert_eq!(cyclic(4).unwrap().join(&cyclic(6).unwrap()), cyclic(12).unwrap());
        let g = cyclic(7).unwrap();
        assert_eq!(g.join(&QzSubgroup::trivial()), g);
        assert_eq!(cyclic(2).unwrap().join(&cyclic(3).unwrap()), cyclic(6).unwrap());
    }

    #[test]
    fn torsion_examples() {
        assert_eq!(QzSubgroup::Full.torsion(&o(4)), cyclic(4).unwrap());
        assert_eq!(cyclic(6).unwrap().torsion(&o(4)), cyclic(2).unwrap());
        assert!(cyclic(6).unwrap().torsion(&Order::one()).is_trivial());
        assert!(QzSubgroup::Full.torsion(&Order::one()).is_trivial());
    }

    #[test]
    fn product_examples() {
        assert_eq!(factors_of(&product([known(&[2]), known(&[2])])), vec![2, 2]);
        assert_eq!(factors_of(&product([known(&[2]), known(&[3])])), vec![6]);
        assert!(product([]).is_trivial());
        assert_eq!(factors_of(&product([known(&[4, 6]), known(&[10])])), vec![2, 2, 60]);
    }

    #[test]
    fn product_keeps_symbolic_summands_first() {
        let g = product([known(&[2]), AbGroup::FullQmodZ, AbGroup::trivial()]);
        assert_eq!(g.to_string(), "Q/Z (+) Z/2");
        let h = product([AbGroup::trivial(), AbGroup::FullQmodZ]);
        assert_eq!(h, AbGroup::FullQmodZ);
        let nested = product([g.clone(), known(&[3])]);
        assert_eq!(nested.to_string(), "Q/Z (+) Z/6");
    }

    #[test]
    fn extension_examples() {
        let g = known(&[5]);
        assert_eq!(extension(AbGroup::trivial(), g.clone()), g);
        let e = extension(known(&[2]), known(&[2]));
        assert_eq!(e.order(), GroupOrder::Finite(o(4)));
        assert_eq!(e.exponent(), Exponent::Divides(o(4)));
        assert!(!e.is_known());
        let e = extension(known(&[2]), known(&[3]));
        assert_eq!(e.order(), GroupOrder::Finite(o(6)));
        assert_eq!(e.exponent(), Exponent::Divides(o(6)));
        assert_eq!(e.to_string(), "ext(Z/2 ; Z/3) order 6, exponent | 6");
    }

    #[test]
    fn extension_by_infinite() {
        let e = extension(known(&[2]), AbGroup::FullQmodZ);
        assert_eq!(e.order(), GroupOrder::Infinite);
        assert_eq!(e.exponent(), Exponent::Unbounded);
    }

    #[test]
    fn coker_examples() {
        let amb = known(&[2, 2]);
        assert_eq!(coker_of_injection(&QzSubgroup::trivial(), &amb).unwrap(), amb);
        // Z/4 modulo its subgroup {0, 2}: enumeration gives the cosets {0,2}, {1,3}.
        let c = coker_of_injection(&cyclic(2).unwrap(), &known(&[4])).unwrap();
        assert_eq!(factors_of(&c), vec![2]);
        assert!(coker_of_injection(&cyclic(4).unwrap(), &known(&[4]))
            .unwrap()
            .is_trivial());
    }

    #[test]
    fn coker_non_cyclic_ambient_keeps_order_only() {
        let c = coker_of_injection(&cyclic(2).unwrap(), &known(&[2, 4])).unwrap();
        assert_eq!(c.order(), GroupOrder::Finite(o(4)));
        assert_eq!(c.exponent(), Exponent::Divides(o(4)));
        assert!(c.is_unknown());
        let full = coker_of_injection(&cyclic(8).unwrap(), &known(&[2, 4])).unwrap_err();
        assert_eq!(full.class(), "inconsistent-configuration");
        assert!(coker_of_injection(&cyclic(3).unwrap(), &known(&[4])).is_err());
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(AbGroup::trivial().to_string(), "0");
        assert_eq!(known(&[6, 2]).to_string(), "Z/2 + Z/6");
        assert_eq!(
            AbGroup::unknown(Exponent::Divides(o(4)), GroupOrder::Unknown, "n").to_string(),
            "unknown, exponent | 4"
        );
    }

    #[test]
    fn invariant_factors_parse_checks_chain() {
        assert!(FiniteGroup::from_invariant_factors(&[2, 4, 12]).is_ok());
        assert!(FiniteGroup::from_invariant_factors(&[4, 6]).is_err());
        assert!(FiniteGroup::from_invariant_factors(&[1]).is_err());
    }
}
