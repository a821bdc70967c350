//! Fuzzy subsets of finite carriers: set algebra, graded inclusion, α-cuts,
//! images and preimages.

use crate::error::Error;
use crate::truth::{inf_family, sup_family, FiniteChain, TruthValue};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// A finite carrier of named points with a fixed order.
///
/// Carriers compare by content; membership maps are index-aligned with the
/// point list, so they are total by construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Carrier(Arc<Vec<String>>);

impl Carrier {
    pub fn new<I: IntoIterator<Item = S>, S: Into<String>>(points: I) -> Self {
        Carrier(Arc::new(points.into_iter().map(Into::into).collect()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn points(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|p| p == name)
    }
}

/// A fuzzy subset of a finite carrier: a total membership map into `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzySubset {
    carrier: Carrier,
    values: Vec<TruthValue>,
}

impl FuzzySubset {
    pub fn new(carrier: Carrier, values: Vec<TruthValue>) -> Result<Self, Error> {
        if values.len() != carrier.len() {
            return Err(Error::CarrierMismatch(format!(
                "membership map has {} entries for a carrier of {} points",
                values.len(),
                carrier.len()
            )));
        }
        Ok(FuzzySubset { carrier, values })
    }

    pub fn from_map(carrier: Carrier, map: &BTreeMap<String, TruthValue>) -> Result<Self, Error> {
        let mut values = Vec::with_capacity(carrier.len());
        for p in carrier.points() {
            match map.get(p) {
                Some(v) => values.push(*v),
                None => {
                    return Err(Error::CarrierMismatch(format!("no membership for point {p}")))
                }
            }
        }
        Ok(FuzzySubset { carrier, values })
    }

    /// `∅̃`: the constant-0 subset.
    pub fn empty(carrier: Carrier) -> Self {
        Self::constant(carrier, TruthValue::ZERO)
    }

    /// `X̃`: the constant-1 subset.
    pub fn full(carrier: Carrier) -> Self {
        Self::constant(carrier, TruthValue::ONE)
    }

    pub fn constant(carrier: Carrier, v: TruthValue) -> Self {
        let values = vec![v; carrier.len()];
        FuzzySubset { carrier, values }
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn values(&self) -> &[TruthValue] {
        &self.values
    }

    pub fn get(&self, idx: usize) -> TruthValue {
        self.values[idx]
    }

    pub fn get_by_name(&self, name: &str) -> Option<TruthValue> {
        self.carrier.index_of(name).map(|i| self.values[i])
    }

    pub fn is_constant(&self) -> Option<TruthValue> {
        let first = *self.values.first()?;
        self.values.iter().all(|&v| v == first).then_some(first)
    }

    fn same_carrier(&self, other: &FuzzySubset) -> Result<(), Error> {
        if self.carrier != other.carrier {
            return Err(Error::CarrierMismatch(
                "fuzzy subsets live on different carriers".into(),
            ));
        }
        Ok(())
    }

    /// Pointwise `sup`; binary case of [`union`].
    pub fn union_with(&self, other: &FuzzySubset) -> Result<FuzzySubset, Error> {
        self.same_carrier(other)?;
        let values =
            self.values.iter().zip(&other.values).map(|(&a, &b)| a.join(b)).collect();
        Ok(FuzzySubset { carrier: self.carrier.clone(), values })
    }

    /// Pointwise `min`.
    pub fn intersection(&self, other: &FuzzySubset) -> Result<FuzzySubset, Error> {
        self.same_carrier(other)?;
        let values =
            self.values.iter().zip(&other.values).map(|(&a, &b)| a.meet(b)).collect();
        Ok(FuzzySubset { carrier: self.carrier.clone(), values })
    }

    /// Pointwise `≤`.
    pub fn le(&self, other: &FuzzySubset) -> bool {
        self.carrier == other.carrier
            && self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }

    /// `gr(T̃₁ ⊆ T̃₂) = inf over points of the Gödel arrow of memberships`.
    pub fn graded_inclusion(&self, other: &FuzzySubset) -> Result<TruthValue, Error> {
        self.same_carrier(other)?;
        Ok(inf_family(
            self.values.iter().zip(&other.values).map(|(&a, &b)| a.godel_arrow(b)),
        ))
    }

    /// Crisp cut `{x | T̃(x) ≥ α}`, as point names.
    pub fn alpha_cut(&self, alpha: TruthValue) -> Vec<String> {
        self.carrier
            .points()
            .iter()
            .zip(&self.values)
            .filter(|(_, &v)| v >= alpha)
            .map(|(p, _)| p.clone())
            .collect()
    }

    /// Strict cut `{x | T̃(x) > α}`.
    pub fn strict_alpha_cut(&self, alpha: TruthValue) -> Vec<String> {
        self.carrier
            .points()
            .iter()
            .zip(&self.values)
            .filter(|(_, &v)| v > alpha)
            .map(|(p, _)| p.clone())
            .collect()
    }

    /// Fuzzy cut: keeps `T̃(x)` where `T̃(x) ≥ α`, `0` below.
    pub fn fuzzy_alpha_cut(&self, alpha: TruthValue) -> FuzzySubset {
        let values = self
            .values
            .iter()
            .map(|&v| if v >= alpha { v } else { TruthValue::ZERO })
            .collect();
        FuzzySubset { carrier: self.carrier.clone(), values }
    }
}

impl fmt::Display for FuzzySubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (p, v)) in self.carrier.points().iter().zip(&self.values).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}: {v}")?;
        }
        write!(f, "}}")
    }
}

/// Pointwise sup of a family; the empty family yields `∅̃`.
pub fn union(carrier: &Carrier, subsets: &[FuzzySubset]) -> Result<FuzzySubset, Error> {
    let mut acc = FuzzySubset::empty(carrier.clone());
    for s in subsets {
        acc = acc.union_with(s)?;
    }
    Ok(acc)
}

/// A map of finite carriers, for images and preimages of fuzzy subsets.
#[derive(Debug, Clone)]
pub struct PointMap {
    source: Carrier,
    target: Carrier,
    /// Index into `target` for each source point.
    map: Vec<usize>,
}

impl PointMap {
    pub fn new(source: Carrier, target: Carrier, map: Vec<usize>) -> Result<Self, Error> {
        if map.len() != source.len() || map.iter().any(|&i| i >= target.len()) {
            return Err(Error::Structural("point map is not total".into()));
        }
        Ok(PointMap { source, target, map })
    }

    pub fn from_names(
        source: Carrier,
        target: Carrier,
        assoc: &BTreeMap<String, String>,
    ) -> Result<Self, Error> {
        let mut map = Vec::with_capacity(source.len());
        for p in source.points() {
            let q = assoc
                .get(p)
                .ok_or_else(|| Error::Structural(format!("point map misses {p}")))?;
            let j = target
                .index_of(q)
                .ok_or_else(|| Error::Structural(format!("unknown target point {q}")))?;
            map.push(j);
        }
        Ok(PointMap { source, target, map })
    }

    pub fn identity(carrier: Carrier) -> Self {
        let map = (0..carrier.len()).collect();
        PointMap { source: carrier.clone(), target: carrier, map }
    }

    pub fn source(&self) -> &Carrier {
        &self.source
    }

    pub fn target(&self) -> &Carrier {
        &self.target
    }

    pub fn apply(&self, idx: usize) -> usize {
        self.map[idx]
    }

    pub fn compose(&self, then: &PointMap) -> Result<PointMap, Error> {
        if self.target != then.source {
            return Err(Error::CarrierMismatch("point maps do not chain".into()));
        }
        let map = self.map.iter().map(|&i| then.map[i]).collect();
        Ok(PointMap { source: self.source.clone(), target: then.target.clone(), map })
    }

    /// `f⁻¹(B̃)(x) = B̃(f(x))`.
    pub fn preimage(&self, b: &FuzzySubset) -> Result<FuzzySubset, Error> {
        if *b.carrier() != self.target {
            return Err(Error::CarrierMismatch("preimage of a subset of the wrong carrier".into()));
        }
        let values = self.map.iter().map(|&i| b.values[i]).collect();
        FuzzySubset::new(self.source.clone(), values)
    }

    /// Direct image: `f(Ã)(y) = sup over the fiber of y`, `0` on empty fibers.
    pub fn image(&self, a: &FuzzySubset) -> Result<FuzzySubset, Error> {
        if *a.carrier() != self.source {
            return Err(Error::CarrierMismatch("image of a subset of the wrong carrier".into()));
        }
        let values = (0..self.target.len())
            .map(|y| {
                sup_family(
                    self.map
                        .iter()
                        .enumerate()
                        .filter(|&(_, &fy)| fy == y)
                        .map(|(x, _)| a.values[x]),
                )
            })
            .collect();
        FuzzySubset::new(self.target.clone(), values)
    }
}

/// A fuzzy subset whose memberships live in a declared finite chain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LFuzzySet {
    subset: FuzzySubset,
    chain: FiniteChain,
}

impl LFuzzySet {
    pub fn new(subset: FuzzySubset, chain: FiniteChain) -> Result<Self, Error> {
        for (p, &v) in subset.carrier().points().iter().zip(subset.values()) {
            if !chain.contains(v) {
                return Err(Error::Structural(format!(
                    "membership {v} of point {p} is not in the value chain"
                )));
            }
        }
        Ok(LFuzzySet { subset, chain })
    }

    pub fn subset(&self) -> &FuzzySubset {
        &self.subset
    }

    pub fn chain(&self) -> &FiniteChain {
        &self.chain
    }

    pub fn carrier(&self) -> &Carrier {
        self.subset.carrier()
    }

    pub fn get(&self, idx: usize) -> TruthValue {
        self.subset.get(idx)
    }

    /// Indices of the support `|Ã| = {x : Ã(x) > 0}`.
    pub fn support(&self) -> Vec<usize> {
        (0..self.carrier().len()).filter(|&i| !self.get(i).is_zero()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tv(p: i64, q: i64) -> TruthValue {
        TruthValue::new(p, q).unwrap()
    }

    fn xy() -> Carrier {
        Carrier::new(["x", "y"])
    }

    fn subset(vals: &[(i64, i64)]) -> FuzzySubset {
        FuzzySubset::new(xy(), vals.iter().map(|&(p, q)| tv(p, q)).collect()).unwrap()
    }

    #[test]
    fn union_and_intersection_pointwise() {
        let t1 = subset(&[(1, 4), (3, 4)]);
        let t2 = subset(&[(1, 2), (1, 2)]);
        assert_eq!(t1.union_with(&t2).unwrap(), subset(&[(1, 2), (3, 4)]));
        assert_eq!(t1.intersection(&t2).unwrap(), subset(&[(1, 4), (1, 2)]));
        assert_eq!(union(&xy(), &[]).unwrap(), FuzzySubset::empty(xy()));
        assert_eq!(t1.union_with(&t1).unwrap(), t1);
        assert_eq!(t1.intersection(&FuzzySubset::full(xy())).unwrap(), t1);
        assert_eq!(t1.intersection(&FuzzySubset::empty(xy())).unwrap(), FuzzySubset::empty(xy()));
    }

    #[test]
    fn carrier_mismatch_is_an_error() {
        let t1 = subset(&[(1, 4), (3, 4)]);
        let other = FuzzySubset::new(Carrier::new(["z"]), vec![tv(1, 2)]).unwrap();
        assert!(t1.union_with(&other).is_err());
        assert!(t1.graded_inclusion(&other).is_err());
    }

    #[test]
    fn graded_inclusion_examples() {
        let t = subset(&[(2, 5), (4, 5)]);
        assert_eq!(t.graded_inclusion(&t).unwrap(), TruthValue::ONE);
        assert_eq!(t.graded_inclusion(&FuzzySubset::full(xy())).unwrap(), TruthValue::ONE);
        // arrows (1, 1/2), inf = 1/2
        let t2 = subset(&[(3, 5), (1, 2)]);
        assert_eq!(t.graded_inclusion(&t2).unwrap(), tv(1, 2));
    }

    #[test]
    fn cuts() {
        let t = subset(&[(3, 10), (7, 10)]);
        assert_eq!(t.alpha_cut(tv(1, 2)), vec!["y".to_string()]);
        let s = subset(&[(1, 2), (7, 10)]);
        assert_eq!(s.strict_alpha_cut(tv(1, 2)), vec!["y".to_string()]);
        assert_eq!(t.fuzzy_alpha_cut(tv(1, 2)), subset(&[(0, 1), (7, 10)]));
        assert_eq!(t.fuzzy_alpha_cut(TruthValue::ZERO), t);
        // antitone in alpha
        assert!(t.alpha_cut(tv(3, 4)).len() <= t.alpha_cut(tv(1, 4)).len());
    }

    #[test]
    fn images_and_preimages() {
        let f = PointMap::identity(xy());
        let b = subset(&[(1, 4), (3, 4)]);
        assert_eq!(f.preimage(&b).unwrap(), b);

        let z = Carrier::new(["z"]);
        let collapse = PointMap::new(xy(), z.clone(), vec![0, 0]).unwrap();
        let a = subset(&[(1, 4), (3, 4)]);
        assert_eq!(collapse.image(&a).unwrap(), FuzzySubset::new(z, vec![tv(3, 4)]).unwrap());

        // empty fiber gets 0
        let w = Carrier::new(["u", "v"]);
        let into_u = PointMap::new(xy(), w.clone(), vec![0, 0]).unwrap();
        let img = into_u.image(&a).unwrap();
        assert_eq!(img.get_by_name("v"), Some(TruthValue::ZERO));
    }

    #[test]
    fn gt10_pointwise_bound() {
        let t1 = subset(&[(2, 5), (9, 10)]);
        let t2 = subset(&[(3, 5), (1, 2)]);
        let g = t1.graded_inclusion(&t2).unwrap();
        for i in 0..2 {
            assert!(t1.get(i).meet(g) <= t2.get(i));
        }
    }
}
