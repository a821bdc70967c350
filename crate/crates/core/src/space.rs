//! Fuzzy topological spaces over finite carriers, continuity checks, and the
//! n-valued topological predicates.

use crate::error::Error;
use crate::fuzzyset::{Carrier, FuzzySubset, PointMap};
use crate::lattice::{FiniteFrame, FinitePoset, GradedCarrier, GradedFrame};
use crate::report::Report;
use crate::truth::{sup_family, FiniteChain, TruthValue, ValueChain};
use serde::{Deserialize, Serialize};

/// Which clauses a space is expected to satisfy on top of the plain ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Flavor {
    Plain,
    /// Löwen-style: every constant from the declared chain is open.
    Stratified { chain: FiniteChain },
    /// All membership values lie in the chain `n̄`.
    NValued { chain: ValueChain },
    /// Plain clauses plus the graded-inclusion relation on `τ`.
    Graded,
}

/// A fuzzy topological space: a finite carrier and a finite list of opens.
///
/// Opens are kept duplicate-free in first-seen order, so frame elements and
/// reports are deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzyTopSpace {
    carrier: Carrier,
    opens: Vec<FuzzySubset>,
    flavor: Flavor,
}

impl FuzzyTopSpace {
    pub fn new(
        carrier: Carrier,
        opens: Vec<FuzzySubset>,
        flavor: Flavor,
    ) -> Result<Self, Error> {
        let mut dedup: Vec<FuzzySubset> = Vec::new();
        for o in opens {
            if *o.carrier() != carrier {
                return Err(Error::CarrierMismatch("open on a different carrier".into()));
            }
            if !dedup.contains(&o) {
                dedup.push(o);
            }
        }
        Ok(FuzzyTopSpace { carrier, opens: dedup, flavor })
    }

    /// `{∅̃, X̃}`.
    pub fn indiscrete(carrier: Carrier) -> Self {
        let opens = vec![FuzzySubset::empty(carrier.clone()), FuzzySubset::full(carrier.clone())];
        FuzzyTopSpace { carrier, opens, flavor: Flavor::Plain }
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn opens(&self) -> &[FuzzySubset] {
        &self.opens
    }

    pub fn flavor(&self) -> &Flavor {
        &self.flavor
    }

    pub fn with_flavor(mut self, flavor: Flavor) -> Self {
        self.flavor = flavor;
        self
    }

    pub fn index_of(&self, open: &FuzzySubset) -> Option<usize> {
        self.opens.iter().position(|o| o == open)
    }

    pub fn contains(&self, open: &FuzzySubset) -> bool {
        self.index_of(open).is_some()
    }

    /// `(τ, ⊆)` as a finite frame with pointwise order; needs `check_space`
    /// to pass for the tables to exist.
    pub fn tau_frame(&self) -> Result<FiniteFrame, Error> {
        let names = self.opens.iter().map(|o| o.to_string()).collect();
        let leq = self
            .opens
            .iter()
            .map(|a| self.opens.iter().map(|b| a.le(b)).collect())
            .collect();
        FiniteFrame::from_poset(FinitePoset::new(names, leq)?)
    }

    /// The graded frame `(τ, graded inclusion)`.
    pub fn graded_frame(&self) -> Result<GradedFrame, Error> {
        let frame = self.tau_frame()?;
        let carrier = GradedCarrier::from(&frame);
        GradedFrame::new(carrier, self.graded_inclusion_matrix()?)
    }

    /// The graded inclusion matrix on `τ`.
    pub fn graded_inclusion_matrix(&self) -> Result<Vec<Vec<TruthValue>>, Error> {
        let n = self.opens.len();
        let mut r = vec![vec![TruthValue::ZERO; n]; n];
        for i in 0..n {
            for j in 0..n {
                r[i][j] = self.opens[i].graded_inclusion(&self.opens[j])?;
            }
        }
        Ok(r)
    }
}

/// Closure violations and flavor clauses, with witnesses.
///
/// `τ` is finite, so closure under binary unions is equivalent to closure
/// under arbitrary unions; the binary checks below are the whole law.
pub fn check_space(space: &FuzzyTopSpace) -> Report {
    let mut report = Report::new("fuzzy topological space");
    let empty = FuzzySubset::empty(space.carrier.clone());
    let full = FuzzySubset::full(space.carrier.clone());
    report.record("∅̃ ∈ τ", space.contains(&empty), || "missing the empty subset".into());
    report.record("X̃ ∈ τ", space.contains(&full), || "missing the full subset".into());

    let mut bad_meet = None;
    let mut bad_join = None;
    for (i, a) in space.opens.iter().enumerate() {
        for b in space.opens.iter().skip(i) {
            let inter = a.intersection(b).expect("same carrier");
            if !space.contains(&inter) && bad_meet.is_none() {
                bad_meet = Some((a.clone(), b.clone()));
            }
            let uni = a.union_with(b).expect("same carrier");
            if !space.contains(&uni) && bad_join.is_none() {
                bad_join = Some((a.clone(), b.clone()));
            }
        }
    }
    report.record("closed under binary intersection", bad_meet.is_none(), || {
        let (a, b) = bad_meet.unwrap();
        format!("{a} ∩ {b} is not open")
    });
    report.record("closed under binary union", bad_join.is_none(), || {
        let (a, b) = bad_join.unwrap();
        format!("{a} ∪ {b} is not open")
    });

    match &space.flavor {
        Flavor::Plain | Flavor::Graded => {}
        Flavor::Stratified { chain } => {
            let missing = chain
                .values()
                .iter()
                .find(|&&r| !space.contains(&FuzzySubset::constant(space.carrier.clone(), r)));
            report.record("every constant r̃ is open", missing.is_none(), || {
                format!("constant {} is not open", missing.unwrap())
            });
        }
        Flavor::NValued { chain } => {
            let stray = space.opens.iter().find_map(|o| {
                o.values().iter().find(|&&v| !chain.contains(v)).map(|&v| (o.clone(), v))
            });
            report.record("all membership values lie in n̄", stray.is_none(), || {
                let (o, v) = stray.unwrap();
                format!("open {o} has value {v} outside the chain")
            });
        }
    }
    report
}

/// The least topology containing a subbasis: adjoins `∅̃` and `X̃` (and the
/// flavor's constants) and iterates binary meet/join closure to a fixed
/// point; terminates because the value set on a finite carrier is finite.
pub fn generate_topology(
    carrier: &Carrier,
    subbasis: &[FuzzySubset],
    flavor: Flavor,
) -> Result<FuzzyTopSpace, Error> {
    let mut opens: Vec<FuzzySubset> = vec![
        FuzzySubset::empty(carrier.clone()),
        FuzzySubset::full(carrier.clone()),
    ];
    if let Flavor::Stratified { chain } = &flavor {
        for &r in chain.values() {
            opens.push(FuzzySubset::constant(carrier.clone(), r));
        }
    }
    for s in subbasis {
        if s.carrier() != carrier {
            return Err(Error::CarrierMismatch("subbasis member on a different carrier".into()));
        }
        opens.push(s.clone());
    }
    let mut dedup: Vec<FuzzySubset> = Vec::new();
    for o in opens {
        if !dedup.contains(&o) {
            dedup.push(o);
        }
    }
    let mut opens = dedup;
    loop {
        let mut added = Vec::new();
        for i in 0..opens.len() {
            for j in i + 1..opens.len() {
                for candidate in [
                    opens[i].intersection(&opens[j])?,
                    opens[i].union_with(&opens[j])?,
                ] {
                    if !opens.contains(&candidate) && !added.contains(&candidate) {
                        added.push(candidate);
                    }
                }
            }
        }
        if added.is_empty() {
            break;
        }
        opens.extend(added);
    }
    FuzzyTopSpace::new(carrier.clone(), opens, flavor)
}

/// Verifies that the preimage of every open of `target` is open in `source`.
pub fn check_fuzzy_continuous(
    f: &PointMap,
    source: &FuzzyTopSpace,
    target: &FuzzyTopSpace,
) -> Report {
    let mut report = Report::new("fuzzy continuous map");
    if f.source() != source.carrier() || f.target() != target.carrier() {
        report.fail("carriers", "map does not run between the two spaces");
        return report;
    }
    let mut bad = None;
    for open in target.opens() {
        let pre = f.preimage(open).expect("carrier checked");
        if !source.contains(&pre) && bad.is_none() {
            bad = Some((open.clone(), pre));
        }
    }
    report.record("preimage of every open is open", bad.is_none(), || {
        let (open, pre) = bad.unwrap();
        format!("f⁻¹({open}) = {pre} is not open")
    });
    report
}

fn n_valued_chain(space: &FuzzyTopSpace) -> Result<&ValueChain, Error> {
    match &space.flavor {
        Flavor::NValued { chain } => Ok(chain),
        _ => Err(Error::precondition("operation needs the n-valued flavor")),
    }
}

/// Kolmogorov: every pair of distinct points is separated by some open.
pub fn kolmogorov(space: &FuzzyTopSpace) -> Result<bool, Error> {
    n_valued_chain(space)?;
    let n = space.carrier.len();
    Ok((0..n).all(|x1| {
        (x1 + 1..n).all(|x2| space.opens.iter().any(|o| o.get(x1) != o.get(x2)))
    }))
}

/// Hausdorff: for distinct points there are `r` and opens with
/// `Ã₁(x₁) ≥ r`, `Ã₂(x₂) ≥ r` and `Ã₁ ∧ Ã₂ < r`, the last clause read
/// pointwise-everywhere as `sup(Ã₁ ∧ Ã₂) < r`.
pub fn hausdorff(space: &FuzzyTopSpace) -> Result<bool, Error> {
    let chain = n_valued_chain(space)?.clone();
    let n = space.carrier.len();
    Ok((0..n).all(|x1| {
        (x1 + 1..n).all(|x2| {
            chain.elements().iter().any(|&r| {
                space.opens.iter().any(|a1| {
                    a1.get(x1) >= r
                        && space.opens.iter().any(|a2| {
                            a2.get(x2) >= r && {
                                let inter = a1.intersection(a2).expect("same carrier");
                                sup_family(inter.values().iter().copied()) < r
                            }
                        })
                })
            })
        })
    }))
}

/// Compactness of the whole space: every open cover of `1` has a finite
/// subcover. `τ` is finite, so every cover is already finite; the search
/// enumerates covering subfamilies (up to a subset cap) and confirms each
/// one contains a finite — here minimal — subcover.
pub fn compact(space: &FuzzyTopSpace) -> Result<bool, Error> {
    n_valued_chain(space)?;
    let full = FuzzySubset::full(space.carrier.clone());
    let m = space.opens.len();
    let cap = 16.min(m);
    for mask in 0u32..(1u32 << cap) {
        let members: Vec<usize> = (0..cap).filter(|&i| mask & (1 << i) != 0).collect();
        let mut join = FuzzySubset::empty(space.carrier.clone());
        for &i in &members {
            join = join.union_with(&space.opens[i]).expect("same carrier");
        }
        if join == full {
            // greedy minimal subcover must exist inside the finite family
            let mut chosen: Vec<usize> = members.clone();
            let mut k = 0;
            while k < chosen.len() {
                let mut without = chosen.clone();
                without.remove(k);
                let mut j = FuzzySubset::empty(space.carrier.clone());
                for &i in &without {
                    j = j.union_with(&space.opens[i]).expect("same carrier");
                }
                if j == full {
                    chosen = without;
                } else {
                    k += 1;
                }
            }
            if chosen.len() > m {
                return Ok(false); // cannot happen: subcover within the family
            }
        }
    }
    Ok(true)
}

/// All continuous maps `X → n̄`, `n̄` carrying the discrete n̄-fuzzy topology:
/// `t` qualifies iff `Ã ∘ t` is open for every `Ã : n̄ → n̄`. Enumeration is
/// brute force over `n^|X|` candidates with a budget of 10⁶.
pub fn cont(space: &FuzzyTopSpace) -> Result<Vec<FuzzySubset>, Error> {
    let chain = n_valued_chain(space)?.clone();
    let n = chain.n();
    let size = space.carrier.len();
    let candidates = (n as u64).checked_pow(size as u32).filter(|&c| c <= 1_000_000);
    let Some(total) = candidates else {
        return Err(Error::Budget(format!("cont enumeration needs {n}^{size} candidates")));
    };
    // all maps n̄ → n̄ as index vectors
    let mut codomain_maps: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..n {
        codomain_maps = codomain_maps
            .into_iter()
            .flat_map(|m| {
                (0..n).map(move |v| {
                    let mut m2 = m.clone();
                    m2.push(v);
                    m2
                })
            })
            .collect();
    }
    let mut result = Vec::new();
    for code in 0..total {
        let mut idx = code;
        let mut t = Vec::with_capacity(size);
        for _ in 0..size {
            t.push((idx % n as u64) as usize);
            idx /= n as u64;
        }
        let continuous = codomain_maps.iter().all(|amap| {
            let composed = FuzzySubset::new(
                space.carrier.clone(),
                t.iter().map(|&ti| chain.elements()[amap[ti]]).collect(),
            )
            .expect("carrier length");
            space.contains(&composed)
        });
        if continuous {
            result.push(
                FuzzySubset::new(
                    space.carrier.clone(),
                    t.iter().map(|&ti| chain.elements()[ti]).collect(),
                )
                .expect("carrier length"),
            );
        }
    }
    Ok(result)
}

/// Zero-dimensionality: `Cont(X, τ)` is an open basis — it sits inside `τ`,
/// is closed under finite meets, and every open is a join of its members.
pub fn zero_dimensional(space: &FuzzyTopSpace) -> Result<bool, Error> {
    let basis = cont(space)?;
    for t in &basis {
        if !space.contains(t) {
            return Ok(false);
        }
    }
    for (i, a) in basis.iter().enumerate() {
        for b in basis.iter().skip(i) {
            if !basis.contains(&a.intersection(b)?) {
                return Ok(false);
            }
        }
    }
    for open in space.opens() {
        let mut join = FuzzySubset::empty(space.carrier.clone());
        for t in &basis {
            if t.le(open) {
                join = join.union_with(t)?;
            }
        }
        if join != *open {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Boolean space: zero-dimensional, compact and Kolmogorov.
pub fn is_boolean_space(space: &FuzzyTopSpace) -> Result<bool, Error> {
    Ok(zero_dimensional(space)? && compact(space)? && kolmogorov(space)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::check_graded_frame;

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
    fn indiscrete_passes() {
        assert!(check_space(&FuzzyTopSpace::indiscrete(xy())).ok());
    }

    #[test]
    fn missing_intersection_is_reported() {
        let t1 = subset(&[(1, 2), (1, 4)]);
        let t2 = subset(&[(1, 4), (1, 2)]);
        let space = FuzzyTopSpace::new(
            xy(),
            vec![
                FuzzySubset::empty(xy()),
                FuzzySubset::full(xy()),
                t1.clone(),
                t2.clone(),
                t1.union_with(&t2).unwrap(),
            ],
            Flavor::Plain,
        )
        .unwrap();
        let report = check_space(&space);
        assert!(!report.ok());
        assert!(report.failures().any(|c| c.law.contains("intersection")));
    }

    #[test]
    fn generation_closes_and_is_idempotent() {
        let t1 = subset(&[(1, 2), (1, 4)]);
        let t2 = subset(&[(1, 4), (1, 2)]);
        let space = generate_topology(&xy(), &[t1.clone(), t2.clone()], Flavor::Plain).unwrap();
        assert!(check_space(&space).ok());
        assert!(space.contains(&t1.intersection(&t2).unwrap()));
        assert!(space.contains(&t1.union_with(&t2).unwrap()));
        let again = generate_topology(&xy(), space.opens(), Flavor::Plain).unwrap();
        assert_eq!(again.opens().len(), space.opens().len());
        for o in space.opens() {
            assert!(again.contains(o));
        }
        // generate({}) → {∅̃, X̃}
        let least = generate_topology(&xy(), &[], Flavor::Plain).unwrap();
        assert_eq!(least.opens().len(), 2);
        // generate({T}) is already closed
        let single = generate_topology(&xy(), &[t1.clone()], Flavor::Plain).unwrap();
        assert_eq!(single.opens().len(), 3);
    }

    #[test]
    fn identity_and_into_indiscrete_are_continuous() {
        let t1 = subset(&[(1, 2), (1, 4)]);
        let space = generate_topology(&xy(), &[t1], Flavor::Plain).unwrap();
        let id = PointMap::identity(xy());
        assert!(check_fuzzy_continuous(&id, &space, &space).ok());
        let indiscrete = FuzzyTopSpace::indiscrete(xy());
        assert!(check_fuzzy_continuous(&id, &space, &indiscrete).ok());
        // but not from the indiscrete space into the finer one
        assert!(!check_fuzzy_continuous(&id, &indiscrete, &space).ok());
    }

    #[test]
    fn graded_frame_of_a_topology_passes() {
        let t1 = subset(&[(1, 2), (1, 4)]);
        let t2 = subset(&[(1, 4), (1, 2)]);
        let space = generate_topology(&xy(), &[t1, t2], Flavor::Graded).unwrap();
        let g = space.graded_frame().unwrap();
        assert!(check_graded_frame(&g).ok());
    }

    #[test]
    fn indiscrete_two_points_is_not_kolmogorov() {
        let chain = ValueChain::new(2).unwrap();
        let space = FuzzyTopSpace::indiscrete(xy()).with_flavor(Flavor::NValued { chain });
        assert!(!kolmogorov(&space).unwrap());
        assert!(compact(&space).unwrap());
    }

    #[test]
    fn discrete_two_valued_space_is_boolean() {
        let chain = ValueChain::new(2).unwrap();
        let opens = vec![
            subset(&[(0, 1), (0, 1)]),
            subset(&[(1, 1), (0, 1)]),
            subset(&[(0, 1), (1, 1)]),
            subset(&[(1, 1), (1, 1)]),
        ];
        let space = FuzzyTopSpace::new(xy(), opens, Flavor::NValued { chain }).unwrap();
        assert!(check_space(&space).ok());
        assert!(is_boolean_space(&space).unwrap());
    }

    #[test]
    fn flavor_mismatch_is_an_error() {
        let space = FuzzyTopSpace::indiscrete(xy());
        assert!(kolmogorov(&space).is_err());
        assert!(cont(&space).is_err());
    }
}
