//! Brute-force verification by explicit enumeration.
//!
//! A finite subgroup of ℚ/ℤ is listed element by element as residues
//! `a mod N` standing for `a/N`. Nothing here calls into [`crate::qz`]; the
//! only shared arithmetic is integer gcd and lcm. [`verify_report`] reads a
//! [`BrauerReport`] and recomputes its exact part from these sets.

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::field::{ExtensionSpec, FieldKind};
use crate::pinch::PinchingConfig;
use crate::qz::{AbGroup, GroupOrder, QzSubgroup};
use crate::theorems::BrauerReport;

/// Environment variable overriding [`OracleCaps`]: `"<modulus>"` or
/// `"<modulus>,<census>"`.
pub const CAP_ENV: &str = "BRAUER_PINCH_ORACLE_CAP";

/// Enumeration limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleCaps {
    /// Largest ambient modulus `N` for subgroup enumeration.
    pub modulus: u64,
    /// Largest group order for element-order censuses.
    pub census: u64,
}

impl Default for OracleCaps {
    fn default() -> Self {
        Self {
            modulus: 1_000_000,
            census: 10_000,
        }
    }
}

impl OracleCaps {
    /// Parses a cap override.
    pub fn parse(spec: &str) -> Result<Self> {
        let mut caps = Self::default();
        let bad = || {
            Error::InvalidArgument(format!(
                "{CAP_ENV} must be `<modulus>` or `<modulus>,<census>` with positive integers, got {spec:?}"
            ))
        };
        let mut parts = spec.split(',').map(str::trim);
        let modulus: u64 = parts.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
        caps.modulus = modulus;
        if let Some(c) = parts.next() {
            caps.census = c.parse().map_err(|_| bad())?;
        }
        if parts.next().is_some() || caps.modulus == 0 || caps.census == 0 {
            return Err(bad());
        }
        Ok(caps)
    }

    /// Defaults, overridden by [`CAP_ENV`] when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(CAP_ENV) {
            Ok(s) => Self::parse(&s),
            Err(_) => Ok(Self::default()),
        }
    }
}

/// An explicit subgroup of `(1/N)ℤ/ℤ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumeratedSubgroup {
    pub modulus: u64,
    /// Sorted residues.
    pub elements: Vec<u64>,
}

fn too_large(what: &str, needed: u64, cap: u64) -> Error {
    Error::OracleTooLarge {
        what: what.to_string(),
        needed: needed.to_string(),
        cap,
    }
}

/// `{k·(N/n) mod N : 0 ≤ k < n}`.
pub fn enumerate_subgroup(n: u64, modulus: u64, caps: &OracleCaps) -> Result<EnumeratedSubgroup> {
    if n == 0 || modulus == 0 || !modulus.is_multiple_of(n) {
        return Err(Error::InvalidArgument(format!(
            "{n} does not divide the ambient modulus {modulus}"
        )));
    }
    if modulus > caps.modulus {
        return Err(too_large("ambient modulus", modulus, caps.modulus));
    }
    let step = modulus / n;
    Ok(EnumeratedSubgroup {
        modulus,
        elements: (0..n).map(|k| k * step).collect(),
    })
}

impl EnumeratedSubgroup {
    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn contains(&self, a: u64) -> bool {
        self.elements.binary_search(&(a % self.modulus)).is_ok()
    }

    /// Contains 0 and is closed under addition.
    pub fn is_subgroup(&self) -> bool {
        self.contains(0)
            && self.elements.iter().all(|&a| {
                self.elements
                    .iter()
                    .all(|&b| self.contains((a + b) % self.modulus))
            })
    }

    /// The same fractions written over `m`, a multiple of the modulus.
    fn lift(&self, m: u64) -> Vec<u64> {
        let f = m / self.modulus;
        self.elements.iter().map(|&a| a * f).collect()
    }

    /// Rewrites over the smallest modulus.
    fn reduced(mut self) -> Self {
        let g = self
            .elements
            .iter()
            .fold(self.modulus, |g, &a| g.gcd(&a));
        if g > 1 {
            self.modulus /= g;
            for a in &mut self.elements {
                *a /= g;
            }
        }
        self
    }

    fn common_modulus(&self, other: &Self, caps: &OracleCaps) -> Result<u64> {
        let m = self.modulus.lcm(&other.modulus);
        if m > caps.modulus {
            return Err(too_large("ambient modulus", m, caps.modulus));
        }
        Ok(m)
    }

    /// Set intersection of the two sets of fractions.
    pub fn intersect(&self, other: &Self, caps: &OracleCaps) -> Result<Self> {
        let m = self.common_modulus(other, caps)?;
        let mut mark = vec![false; m as usize];
        for a in self.lift(m) {
            mark[a as usize] = true;
        }
        let mut elements: Vec<u64> = other.lift(m).into_iter().filter(|&a| mark[a as usize]).collect();
        elements.sort_unstable();
        Ok(Self {
            modulus: m,
            elements,
        }
        .reduced())
    }

    /// Subgroup generated by the union, by closure under addition.
    pub fn join(&self, other: &Self, caps: &OracleCaps) -> Result<Self> {
        let m = self.common_modulus(other, caps)?;
        let gens: Vec<u64> = [self.lift(m), other.lift(m)]
            .into_iter()
            .filter_map(|v| v.into_iter().filter(|&a| a > 0).min())
            .collect();
        let mut seen = vec![false; m as usize];
        let mut queue = vec![0u64];
        seen[0] = true;
        while let Some(x) = queue.pop() {
            for &g in &gens {
                let y = (x + g) % m;
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    queue.push(y);
                }
            }
        }
        let elements = (0..m).filter(|&a| seen[a as usize]).collect();
        Ok(Self {
            modulus: m,
            elements,
        }
        .reduced())
    }

    /// Elements killed by `m`.
    pub fn torsion(&self, m: u64) -> Self {
        let elements = self
            .elements
            .iter()
            .copied()
            .filter(|&a| (a as u128 * m as u128).is_multiple_of(self.modulus as u128))
            .collect();
        Self {
            modulus: self.modulus,
            elements,
        }
        .reduced()
    }
}

/// A failed lattice check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeCounterexample {
    pub a: u64,
    pub b: u64,
    pub operation: &'static str,
    pub expected: u64,
    pub got: u64,
}

/// Checks meet and join of `(1/a)ℤ/ℤ` and `(1/b)ℤ/ℤ` for all
/// `1 ≤ a, b ≤ max_order` against `model(a, b) = (meet order, join order)`.
///
/// The enumerated intersection and join must also coincide with the
/// enumerated subgroups of order `gcd(a, b)` and `lcm(a, b)`.
pub fn lattice_counterexample(
    max_order: u64,
    caps: &OracleCaps,
    mut model: impl FnMut(u64, u64) -> (u64, u64),
) -> Result<Option<LatticeCounterexample>> {
    for a in 1..=max_order {
        for b in 1..=max_order {
            let n = a.lcm(&b);
            let sa = enumerate_subgroup(a, n, caps)?;
            let sb = enumerate_subgroup(b, n, caps)?;
            let meet = sa.intersect(&sb, caps)?;
            let join = sa.join(&sb, caps)?;
            let (model_meet, model_join) = model(a, b);
            let g = a.gcd(&b);
            let checks = [
                ("intersect", meet == enumerate_subgroup(g, g, caps)?, g, meet.order()),
                ("intersect", model_meet == meet.order(), meet.order(), model_meet),
                ("join", join == enumerate_subgroup(n, n, caps)?, n, join.order()),
                ("join", model_join == join.order(), join.order(), model_join),
            ];
            if let Some((operation, _, expected, got)) = checks.into_iter().find(|c| !c.1) {
                return Ok(Some(LatticeCounterexample {
                    a,
                    b,
                    operation,
                    expected,
                    got,
                }));
            }
        }
    }
    Ok(None)
}

/// [`lattice_counterexample`] against the gcd/lcm law.
pub fn check_lattice_laws(
    max_order: u64,
    caps: &OracleCaps,
) -> Result<std::result::Result<(), LatticeCounterexample>> {
    let found = lattice_counterexample(max_order, caps, |a, b| (a.gcd(&b), a.lcm(&b)))?;
    Ok(found.map_or(Ok(()), Err))
}

/// Element-order census `order -> count` of `ℤ/m₁ × … × ℤ/m_r`.
pub fn census_invariant_factors(factors: &[u64], caps: &OracleCaps) -> Result<BTreeMap<u64, u64>> {
    if factors.contains(&0) {
        return Err(Error::InvalidArgument("cyclic orders must be positive".into()));
    }
    let total = factors
        .iter()
        .try_fold(1u64, |acc, &m| acc.checked_mul(m))
        .filter(|&t| t <= caps.census)
        .ok_or_else(|| {
            let shown = factors
                .iter()
                .map(|m| m.to_string())
                .collect::<Vec<_>>()
                .join("*");
            Error::OracleTooLarge {
                what: "group order".into(),
                needed: shown,
                cap: caps.census,
            }
        })?;
    let mut census = BTreeMap::new();
    let mut digits = vec![0u64; factors.len()];
    for _ in 0..total {
        let ord = digits
            .iter()
            .zip(factors)
            .fold(1u64, |acc, (&x, &m)| acc.lcm(&(m / x.gcd(&m))));
        *census.entry(ord).or_insert(0) += 1;
        for (d, &m) in digits.iter_mut().zip(factors) {
            *d += 1;
            if *d < m {
                break;
            }
            *d = 0;
        }
    }
    Ok(census)
}

/// Outcome of [`verify_report`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleOutcome {
    pub checks: usize,
    pub discrepancies: Vec<String>,
    /// Checks that were skipped because a census exceeded the cap.
    pub skipped: Vec<String>,
}

impl OracleOutcome {
    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty()
    }

    fn compare(&mut self, what: &str, expected: u64, got: Option<u64>) {
        self.checks += 1;
        if got != Some(expected) {
            let got = got.map_or_else(|| "not a finite known value".to_string(), |g| g.to_string());
            self.discrepancies
                .push(format!("{what}: oracle has {expected}, report has {got}"));
        }
    }
}

/// `Br(K/k)` enumerated, for `k` local or finite.
fn enumerate_relative(e: &ExtensionSpec, caps: &OracleCaps) -> Result<EnumeratedSubgroup> {
    let order = match e.base.kind {
        FieldKind::PAdicLocal { .. } | FieldKind::LocalFunctionField { .. } => e.total_degree,
        FieldKind::Finite { .. } => 1,
        _ => {
            return Err(Error::OracleNotApplicable(format!(
                "{} is neither local nor finite",
                e.base.label
            )))
        }
    };
    enumerate_subgroup(order, order, caps)
}

fn finite_order(g: &AbGroup) -> Option<u64> {
    match g.order() {
        GroupOrder::Finite(n) => n.to_u64(),
        _ => None,
    }
}

/// The finite summand of a descriptor of the form `X (+) finite`.
fn finite_part(g: &AbGroup) -> Option<Vec<u64>> {
    let known = match g {
        AbGroup::FullQmodZ => return Some(Vec::new()),
        AbGroup::Known(k) => k,
        AbGroup::DirectSum(s) => match s.last() {
            Some(AbGroup::Known(k)) => k,
            _ => return Some(Vec::new()),
        },
        _ => return None,
    };
    known.invariant_factors().iter().map(|d| d.to_u64()).collect()
}

/// Recomputes the exact part of `report` from enumerated subgroups.
pub fn verify_report(
    config: &PinchingConfig,
    report: &BrauerReport,
    caps: &OracleCaps,
) -> Result<OracleOutcome> {
    if !config.base().is_exact_regime() {
        return Err(Error::OracleNotApplicable(format!(
            "{} is neither local nor finite",
            config.base().label
        )));
    }
    let a = match &config.cover.amitsur {
        QzSubgroup::Cyclic(a) => a.to_u64().ok_or_else(|| too_large("Amitsur order", u64::MAX, caps.modulus))?,
        _ => {
            return Err(Error::OracleNotApplicable(
                "the cover's Amitsur subgroup is not given by an order".into(),
            ))
        }
    };
    let mut out = OracleOutcome::default();

    // B(X/k): intersect inside Br k
    let cover = enumerate_subgroup(a, a, caps)?;
    let mut pinched = cover.clone();
    for p in &config.points {
        pinched = pinched.intersect(&enumerate_relative(&p.residue, caps)?, caps)?;
    }
    out.compare("amitsurPinched order", pinched.order(), report.amitsur_pinched.known_order().and_then(|o| o.to_u64()));
    let quotient = cover.order() / pinched.order();
    out.compare("amitsurQuotient order", quotient, finite_order(&report.amitsur_quotient));

    // the intersection product, one factor per point
    let mut factors = Vec::with_capacity(config.points.len());
    for p in &config.points {
        let mut it = p.fibers.iter();
        let first = match it.next() {
            Some(f) => enumerate_relative(f, caps)?,
            None => continue,
        };
        let meet = it.try_fold(first, |acc, f| acc.intersect(&enumerate_relative(f, caps)?, caps))?;
        factors.push(meet.order());
    }
    let product_order = factors.iter().try_fold(1u64, |acc, &f| acc.checked_mul(f));
    let product_order = match product_order {
        Some(n) => n,
        None => return Err(too_large("group order", u64::MAX, caps.census)),
    };
    out.compare("intersectionProduct order", product_order, finite_order(&report.intersection_product));
    out.compare(
        "cokerInjection order",
        product_order / quotient.max(1),
        finite_order(&report.coker_injection),
    );
    out.compare("kerPhi1 order", product_order, finite_order(&report.ker_phi1));

    let nontrivial: Vec<u64> = factors.iter().copied().filter(|&f| f > 1).collect();
    match census_invariant_factors(&nontrivial, caps) {
        Ok(expected) => {
            let reported: Option<Vec<u64>> = finite_part(&report.intersection_product);
            out.checks += 1;
            match reported.map(|r| census_invariant_factors(&r, caps)) {
                Some(Ok(got)) if got == expected => {}
                _ => out.discrepancies.push(format!(
                    "intersectionProduct: element-order census differs from the product of cyclic groups of orders {nontrivial:?}"
                )),
            }
            if config.cover.kind == crate::pinch::CoverKind::Ch0Trivial {
                out.checks += 1;
                match finite_part(&report.br1_pinched).map(|r| census_invariant_factors(&r, caps)) {
                    Some(Ok(got)) if got == expected => {}
                    _ => out.discrepancies.push(
                        "br1Pinched: finite summand differs from the intersection product".into(),
                    ),
                }
            }
        }
        Err(Error::OracleTooLarge { needed, cap, .. }) => out
            .skipped
            .push(format!("census of a group of order {needed} exceeds the cap {cap}")),
        Err(e) => return Err(e),
    }

    if let Some(rl) = report.index_facts.rl_order {
        out.compare("rlOrder", pinched.order(), Some(rl));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> OracleCaps {
        OracleCaps::default()
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_subgroup(2, 12, &caps()).unwrap().elements, vec![0, 6]);
        assert_eq!(enumerate_subgroup(1, 12, &caps()).unwrap().elements, vec![0]);
        assert_eq!(enumerate_subgroup(12, 12, &caps()).unwrap().order(), 12);
        assert!(enumerate_subgroup(5, 12, &caps()).is_err());
        assert!(enumerate_subgroup(12, 12, &caps()).unwrap().is_subgroup());
    }

    #[test]
    fn spot_lattice_cases() {
        let c = caps();
        let a = enumerate_subgroup(4, 12, &c).unwrap();
        let b = enumerate_subgroup(6, 12, &c).unwrap();
        assert_eq!(a.intersect(&b, &c).unwrap().order(), 2);
        assert_eq!(a.join(&b, &c).unwrap().order(), 12);
        let t = enumerate_subgroup(6, 6, &c).unwrap().torsion(4);
        assert_eq!(t.order(), 2);
        assert!(check_lattice_laws(30, &c).unwrap().is_ok());
    }

    #[test]
    fn census_examples() {
        let c = caps();
        let m = census_invariant_factors(&[2, 3], &c).unwrap();
        assert_eq!(m, BTreeMap::from([(1, 1), (2, 1), (3, 2), (6, 2)]));
        assert_eq!(m, census_invariant_factors(&[6], &c).unwrap());
        assert_ne!(
            census_invariant_factors(&[2, 2], &c).unwrap(),
            census_invariant_factors(&[4], &c).unwrap()
        );
        assert_eq!(census_invariant_factors(&[], &c).unwrap(), BTreeMap::from([(1, 1)]));
        assert!(matches!(
            census_invariant_factors(&[101, 101], &c),
            Err(Error::OracleTooLarge { .. })
        ));
    }

    #[test]
    fn cap_parsing() {
        assert_eq!(OracleCaps::parse("500").unwrap().modulus, 500);
        let c = OracleCaps::parse("500, 20").unwrap();
        assert_eq!((c.modulus, c.census), (500, 20));
        assert!(OracleCaps::parse("x").is_err());
        assert!(OracleCaps::parse("0").is_err());
        assert!(OracleCaps::parse("1,2,3").is_err());
    }

    #[test]
    fn modulus_cap_applies() {
        let c = OracleCaps { modulus: 10, census: 10 };
        assert!(matches!(
            enumerate_subgroup(4, 12, &c),
            Err(Error::OracleTooLarge { .. })
        ));
    }
}
