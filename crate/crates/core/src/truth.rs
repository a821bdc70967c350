//! Exact truth values in `[0, 1] ∩ ℚ`, the Gödel arrow, and uniform chains.
//!
//! All grades, memberships and relation values in this crate are
//! [`TruthValue`]s. Arithmetic is exact rational arithmetic: comparisons used
//! by infima, suprema and the Gödel arrow are decidable, so every law checked
//! elsewhere in the crate is a zero-tolerance equality or inequality.

use crate::error::Error;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// An exact rational grade in `[0, 1]`, kept in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TruthValue(Ratio<i64>);

impl TruthValue {
    pub const ZERO: TruthValue = TruthValue(Ratio::new_raw(0, 1));
    pub const ONE: TruthValue = TruthValue(Ratio::new_raw(1, 1));

    /// Builds `numer/denom`, rejecting values outside `[0, 1]`.
    pub fn new(numer: i64, denom: i64) -> Result<Self, Error> {
        if denom == 0 {
            return Err(Error::OutOfRange(format!("{numer}/0")));
        }
        let r = Ratio::new(numer, denom);
        if r < Ratio::zero() || r > Ratio::one() {
            return Err(Error::OutOfRange(format!("{numer}/{denom}")));
        }
        Ok(TruthValue(r))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// min, the meet of the Gödel structure on `[0, 1]`.
    pub fn meet(self, other: TruthValue) -> TruthValue {
        self.min(other)
    }

    /// max, the join of the Gödel structure on `[0, 1]`.
    pub fn join(self, other: TruthValue) -> TruthValue {
        self.max(other)
    }

    /// The Gödel arrow: `1` if `self <= other`, else `other`.
    pub fn godel_arrow(self, other: TruthValue) -> TruthValue {
        if self <= other {
            TruthValue::ONE
        } else {
            other
        }
    }

    /// Łukasiewicz strong disjunction `x ⊕ y = min(1, x + y)`.
    pub fn luk_add(self, other: TruthValue) -> TruthValue {
        let sum = self.0 + other.0;
        if sum > Ratio::one() {
            TruthValue::ONE
        } else {
            TruthValue(sum)
        }
    }

    /// Łukasiewicz strong conjunction `x * y = max(0, x + y - 1)`.
    pub fn luk_mul(self, other: TruthValue) -> TruthValue {
        let s = self.0 + other.0 - Ratio::one();
        if s < Ratio::zero() {
            TruthValue::ZERO
        } else {
            TruthValue(s)
        }
    }

    /// Łukasiewicz implication `x → y = min(1, 1 - (x - y))`.
    pub fn luk_arrow(self, other: TruthValue) -> TruthValue {
        self.complement().luk_add(other)
    }

    /// Involutive complement `x^⊥ = 1 - x`.
    pub fn complement(self) -> TruthValue {
        TruthValue(Ratio::one() - self.0)
    }
}

/// Infimum of a finite family; `1` for the empty family.
pub fn inf_family<I: IntoIterator<Item = TruthValue>>(xs: I) -> TruthValue {
    xs.into_iter().fold(TruthValue::ONE, TruthValue::meet)
}

/// Supremum of a finite family; `0` for the empty family.
pub fn sup_family<I: IntoIterator<Item = TruthValue>>(xs: I) -> TruthValue {
    xs.into_iter().fold(TruthValue::ZERO, TruthValue::join)
}

/// Free-standing form of [`TruthValue::godel_arrow`].
pub fn godel_arrow(a: TruthValue, b: TruthValue) -> TruthValue {
    a.godel_arrow(b)
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            write!(f, "0")
        } else if self.0.is_one() {
            write!(f, "1")
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for TruthValue {
    type Err = Error;

    /// Accepts `"p/q"`, integer strings, and decimal strings such as
    /// `"0.25"`; decimals convert exactly.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::OutOfRange(s.to_string());
        if let Some((p, q)) = s.split_once('/') {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q <= 0 {
                return Err(bad());
            }
            return TruthValue::new(p, q);
        }
        if let Some((int, frac)) = s.split_once('.') {
            let int: i64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
            if frac.len() > 18 || frac.chars().any(|c| !c.is_ascii_digit()) {
                return Err(bad());
            }
            let scale = 10i64.checked_pow(frac.len() as u32).ok_or_else(bad)?;
            let frac_num: i64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
            return TruthValue::new(int * scale + frac_num, scale);
        }
        let n: i64 = s.parse().map_err(|_| bad())?;
        TruthValue::new(n, 1)
    }
}

impl Serialize for TruthValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for TruthValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// The chain `n̄ = {0, 1/(n-1), …, 1}` for `n >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueChain {
    n: usize,
    elements: Vec<TruthValue>,
}

impl ValueChain {
    pub fn new(n: usize) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::InvalidChain(n));
        }
        let elements = (0..n)
            .map(|k| TruthValue::new(k as i64, (n - 1) as i64).expect("k/(n-1) is in [0,1]"))
            .collect();
        Ok(ValueChain { n, elements })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Elements in strictly increasing order.
    pub fn elements(&self) -> &[TruthValue] {
        &self.elements
    }

    pub fn contains(&self, v: TruthValue) -> bool {
        // k/(n-1) in lowest terms has denominator dividing n-1
        (self.n as i64 - 1) % v.denom() == 0
    }

    /// Index of `v` in the chain, if it is a chain element.
    pub fn index_of(&self, v: TruthValue) -> Option<usize> {
        self.elements.iter().position(|&e| e == v)
    }
}

/// Free-standing form of [`ValueChain::new`].
pub fn make_chain(n: usize) -> Result<ValueChain, Error> {
    ValueChain::new(n)
}

/// An arbitrary finite sub-chain of `[0, 1]` containing `0` and `1`.
///
/// Uniform chains `n̄` are the special case [`ValueChain`]; this type carries
/// the "occurring values" chains used as hom codomains by the spectrum
/// constructions, where the grid is not uniform.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteChain {
    values: Vec<TruthValue>,
}

impl FiniteChain {
    /// Sorts, deduplicates, and adjoins `0` and `1`.
    pub fn from_values<I: IntoIterator<Item = TruthValue>>(vals: I) -> Self {
        let mut values: Vec<TruthValue> = vals.into_iter().collect();
        values.push(TruthValue::ZERO);
        values.push(TruthValue::ONE);
        values.sort();
        values.dedup();
        FiniteChain { values }
    }

    pub fn bool_chain() -> Self {
        FiniteChain::from_values([])
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // always holds 0 and 1
    }

    pub fn values(&self) -> &[TruthValue] {
        &self.values
    }

    pub fn contains(&self, v: TruthValue) -> bool {
        self.values.binary_search(&v).is_ok()
    }

    pub fn index_of(&self, v: TruthValue) -> Option<usize> {
        self.values.binary_search(&v).ok()
    }
}

impl From<&ValueChain> for FiniteChain {
    fn from(c: &ValueChain) -> Self {
        FiniteChain { values: c.elements().to_vec() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tv(p: i64, q: i64) -> TruthValue {
        TruthValue::new(p, q).unwrap()
    }

    #[test]
    fn arrow_branches() {
        // (7/10, 3/10) -> 3/10: the a > b branch
        assert_eq!(godel_arrow(tv(7, 10), tv(3, 10)), tv(3, 10));
        // a <= b gives 1
        assert_eq!(godel_arrow(tv(3, 10), tv(7, 10)), TruthValue::ONE);
        assert_eq!(godel_arrow(tv(2, 5), tv(2, 5)), TruthValue::ONE);
    }

    #[test]
    fn empty_family_conventions() {
        assert_eq!(inf_family([]), TruthValue::ONE);
        assert_eq!(sup_family([]), TruthValue::ZERO);
    }

    #[test]
    fn family_extrema() {
        let xs = [tv(1, 2), tv(1, 4), tv(3, 4)];
        assert_eq!(inf_family(xs), tv(1, 4));
        assert_eq!(sup_family(xs), tv(3, 4));
        assert_eq!(inf_family([TruthValue::ONE]), TruthValue::ONE);
        assert_eq!(sup_family([TruthValue::ZERO]), TruthValue::ZERO);
    }

    #[test]
    fn chains() {
        let two = make_chain(2).unwrap();
        assert_eq!(two.elements(), &[TruthValue::ZERO, TruthValue::ONE]);
        let three = make_chain(3).unwrap();
        assert_eq!(three.elements(), &[TruthValue::ZERO, tv(1, 2), TruthValue::ONE]);
        assert!(matches!(make_chain(1), Err(Error::InvalidChain(1))));
        assert!(three.contains(tv(1, 2)));
        assert!(!three.contains(tv(1, 3)));
    }

    #[test]
    fn parsing() {
        assert_eq!("3/10".parse::<TruthValue>().unwrap(), tv(3, 10));
        assert_eq!("0.25".parse::<TruthValue>().unwrap(), tv(1, 4));
        assert_eq!("1".parse::<TruthValue>().unwrap(), TruthValue::ONE);
        assert_eq!("0".parse::<TruthValue>().unwrap(), TruthValue::ZERO);
        assert!("7/5".parse::<TruthValue>().is_err());
        assert!("-1/2".parse::<TruthValue>().is_err());
        assert!("1/0".parse::<TruthValue>().is_err());
    }

    #[test]
    fn lukasiewicz_on_three_chain() {
        let h = tv(1, 2);
        assert_eq!(h.luk_add(h), TruthValue::ONE);
        assert_eq!(h.luk_mul(h), TruthValue::ZERO);
        assert_eq!(h.complement(), h);
        assert_eq!(tv(7, 10).luk_arrow(tv(3, 10)), tv(3, 5));
    }

    fn arb_tv() -> impl Strategy<Value = TruthValue> {
        (0i64..=60, 1i64..=60).prop_map(|(p, q)| {
            let (p, q) = if p > q { (q, p) } else { (p, q) };
            TruthValue::new(p, q).unwrap()
        })
    }

    proptest! {
        #[test]
        fn arrow_residuation(a in arb_tv(), b in arb_tv(), c in arb_tv()) {
            // a ∧ (a → b) ≤ b
            prop_assert!(a.meet(a.godel_arrow(b)) <= b);
            // a ≤ b iff a → b = 1
            prop_assert_eq!(a <= b, a.godel_arrow(b).is_one());
            // transitivity-by-min
            prop_assert!(a.godel_arrow(b).meet(b.godel_arrow(c)) <= a.godel_arrow(c));
            // arrow distributes over meet on the right
            prop_assert_eq!(
                a.godel_arrow(b).meet(a.godel_arrow(c)),
                a.godel_arrow(b.meet(c))
            );
        }

        #[test]
        fn luk_ops_stay_in_range(a in arb_tv(), b in arb_tv()) {
            for v in [a.luk_add(b), a.luk_mul(b), a.luk_arrow(b), a.complement()] {
                prop_assert!(TruthValue::ZERO <= v && v <= TruthValue::ONE);
            }
            // de Morgan pairing of ⊕ and *
            prop_assert_eq!(a.luk_mul(b), a.complement().luk_add(b.complement()).complement());
        }
    }
}
