//! Positive integers kept in factored form.
//!
//! Group orders in this crate are products, gcds, lcms and quotients of
//! field degrees. Storing them as prime-exponent maps makes all of those
//! operations exact without overflow, and makes invariant-factor
//! normalization a merge of prime-power multisets.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_prime::nt_funcs::{factorize64, is_prime64};

/// A positive integer stored as `prime -> exponent` (exponents are never zero).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Order {
    factors: BTreeMap<u64, u32>,
}

impl Order {
    /// The integer 1.
    pub fn one() -> Self {
        Self::default()
    }

    /// Factors a machine integer. Returns `None` for zero.
    pub fn from_u64(n: u64) -> Option<Self> {
        match n {
            0 => None,
            1 => Some(Self::one()),
            _ => Some(Self {
                factors: factorize64(n)
                    .into_iter()
                    .map(|(p, e)| (p, e as u32))
                    .collect(),
            }),
        }
    }

    /// `p^e`; `p` must be prime.
    pub fn prime_power(p: u64, e: u32) -> Self {
        debug_assert!(is_prime64(p), "{p} is not prime");
        let mut factors = BTreeMap::new();
        if e > 0 {
            factors.insert(p, e);
        }
        Self { factors }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Prime factorization, ascending by prime.
    pub fn factors(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.factors.iter().map(|(&p, &e)| (p, e))
    }

    pub fn valuation(&self, p: u64) -> u32 {
        self.factors.get(&p).copied().unwrap_or(0)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let factors = self
            .factors
            .iter()
            .filter_map(|(&p, &e)| {
                let m = e.min(other.valuation(p));
                (m > 0).then_some((p, m))
            })
            .collect();
        Self { factors }
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        for (&p, &e) in &other.factors {
            let slot = factors.entry(p).or_insert(0);
            *slot = (*slot).max(e);
        }
        Self { factors }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        for (&p, &e) in &other.factors {
            *factors.entry(p).or_insert(0) += e;
        }
        Self { factors }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.factors.iter().all(|(&p, &e)| other.valuation(p) >= e)
    }

    /// `self / divisor` when the division is exact.
    pub fn checked_div(&self, divisor: &Self) -> Option<Self> {
        if !divisor.divides(self) {
            return None;
        }
        let factors = self
            .factors
            .iter()
            .filter_map(|(&p, &e)| {
                let r = e - divisor.valuation(p);
                (r > 0).then_some((p, r))
            })
            .collect();
        Some(Self { factors })
    }

    /// Removes every factor of `p`.
    pub fn strip_prime(&self, p: u64) -> Self {
        let mut factors = self.factors.clone();
        factors.remove(&p);
        Self { factors }
    }

    /// True when `self` is a power of `p` (including `p^0 = 1`).
    pub fn is_power_of(&self, p: u64) -> bool {
        self.factors.keys().all(|&q| q == p)
    }

    pub fn to_biguint(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::from(1u32), |acc, (&p, &e)| acc * BigUint::from(p).pow(e))
    }

    /// The value as a machine integer, if it fits.
    pub fn to_u64(&self) -> Option<u64> {
        self.factors.iter().try_fold(1u64, |acc, (&p, &e)| {
            acc.checked_mul(p.checked_pow(e)?)
        })
    }
}

impl From<u32> for Order {
    fn from(n: u32) -> Self {
        Self::from_u64(n.into()).expect("order must be positive")
    }
}

impl PartialOrd for Order {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Numeric order.
impl Ord for Order {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        match (self.to_u64(), other.to_u64()) {
            (Some(a), Some(b)) => a.cmp(&b),
            _ => self.to_biguint().cmp(&other.to_biguint()),
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_u64() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "{}", self.to_biguint()),
        }
    }
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn is_prime(p: u64) -> bool {
    is_prime64(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(n: u64) -> Order {
        Order::from_u64(n).unwrap()
    }

    #[test]
    fn gcd_lcm_small() {
        assert_eq!(o(4).gcd(&o(6)), o(2));
        assert_eq!(o(4).lcm(&o(6)), o(12));
        assert_eq!(o(3).gcd(&o(5)), Order::one());
        assert_eq!(o(12).checked_div(&o(4)), Some(o(3)));
        assert_eq!(o(12).checked_div(&o(5)), None);
    }

    #[test]
    fn large_prime_powers_do_not_overflow() {
        let p = 18_446_744_073_709_551_557u64; // largest 64-bit prime
        let big = Order::prime_power(p, 5);
        assert_eq!(big.to_u64(), None);
        assert_eq!(big.to_biguint(), BigUint::from(p).pow(5));
        assert!(Order::prime_power(p, 2).divides(&big));
        assert_eq!(big.to_string(), BigUint::from(p).pow(5).to_string());
    }

    #[test]
    fn zero_is_rejected() {
        assert!(Order::from_u64(0).is_none());
    }

    #[test]
    fn ordering_is_numeric() {
        let mut v = vec![o(9), o(2), o(8), Order::one()];
        v.sort();
        assert_eq!(v, vec![Order::one(), o(2), o(8), o(9)]);
    }
}
