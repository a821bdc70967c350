//! Topological systems over fuzzy carriers: the fixed-chain variant, the
//! variable-basis variant whose value chain travels with each object, proper
//! functions, and the α-cut sub-structures.
//!
//! Systems here satisfy the carrier bound `gr(x ⊨ p) ≤ Ã(x)`, which is
//! incompatible with an unconditional `gr(x ⊨ ⊤) = 1`; instead the top of
//! the frame is satisfied exactly to the degree of membership,
//! `gr(x ⊨ ⊤) = Ã(x)`, which is what makes the extent construction land on
//! spaces over `(X, Ã)`.

use crate::error::Error;
use crate::fuzzyset::{Carrier, FuzzySubset, LFuzzySet};
use crate::lattice::{FiniteFrame, FinitePoset, FrameHom};
use crate::report::Report;
use crate::system::chain_frame;
use crate::truth::{sup_family, FiniteChain, TruthValue};
use serde::{Deserialize, Serialize};

/// A monotone endpoint-preserving map between finite chains, standing for
/// the inverse part `φ⁻¹ : L₁ → L` of a basis change. On chains,
/// monotonicity plus endpoints is exactly frame-hom-ness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainHom {
    source: FiniteChain,
    target: FiniteChain,
    /// Target index for each source index.
    map: Vec<usize>,
}

impl ChainHom {
    pub fn new(source: FiniteChain, target: FiniteChain, map: Vec<usize>) -> Result<Self, Error> {
        if map.len() != source.len() || map.iter().any(|&i| i >= target.len()) {
            return Err(Error::structural("chain hom is not total"));
        }
        let hom = ChainHom { source, target, map };
        let report = hom.check();
        if !report.ok() {
            let first = report.failures().next().unwrap();
            return Err(Error::structural(format!("chain hom: {}", first.law)));
        }
        Ok(hom)
    }

    pub fn identity(chain: FiniteChain) -> Self {
        let map = (0..chain.len()).collect();
        ChainHom { source: chain.clone(), target: chain, map }
    }

    pub fn source(&self) -> &FiniteChain {
        &self.source
    }

    pub fn target(&self) -> &FiniteChain {
        &self.target
    }

    pub fn apply(&self, v: TruthValue) -> Result<TruthValue, Error> {
        let i = self
            .source
            .index_of(v)
            .ok_or_else(|| Error::precondition(format!("{v} is not in the source chain")))?;
        Ok(self.target.values()[self.map[i]])
    }

    /// `then ∘ self`.
    pub fn compose(&self, then: &ChainHom) -> Result<ChainHom, Error> {
        if self.target != then.source {
            return Err(Error::structural("chain homs do not chain"));
        }
        let map = self.map.iter().map(|&i| then.map[i]).collect();
        ChainHom::new(self.source.clone(), then.target.clone(), map)
    }

    pub fn check(&self) -> Report {
        let mut report = Report::new("chain hom");
        report.record("monotone", self.map.windows(2).all(|w| w[0] <= w[1]), || {
            "order not preserved".into()
        });
        report.record("preserves 0", self.map.first() == Some(&0), || "0 moves".into());
        report.record(
            "preserves 1",
            self.map.last() == Some(&(self.target.len() - 1)),
            || "1 moves".into(),
        );
        report
    }
}

/// A proper function between fuzzy sets: a fuzzy relation that assigns each
/// supported source point a unique full-weight target.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProperFunction {
    source: LFuzzySet,
    target: LFuzzySet,
    /// `matrix[x][y] = f(x, y)`.
    matrix: Vec<Vec<TruthValue>>,
}

impl ProperFunction {
    pub fn new(
        source: LFuzzySet,
        target: LFuzzySet,
        matrix: Vec<Vec<TruthValue>>,
    ) -> Result<Self, Error> {
        if matrix.len() != source.carrier().len()
            || matrix.iter().any(|row| row.len() != target.carrier().len())
        {
            return Err(Error::structural("proper function matrix is not total"));
        }
        Ok(ProperFunction { source, target, matrix })
    }

    /// `i_Ã(x, x) = Ã(x)`, zero off the diagonal.
    pub fn identity(set: &LFuzzySet) -> Self {
        let n = set.carrier().len();
        let matrix = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| if x == y { set.get(x) } else { TruthValue::ZERO })
                    .collect()
            })
            .collect();
        ProperFunction { source: set.clone(), target: set.clone(), matrix }
    }

    pub fn source(&self) -> &LFuzzySet {
        &self.source
    }

    pub fn target(&self) -> &LFuzzySet {
        &self.target
    }

    pub fn value(&self, x: usize, y: usize) -> TruthValue {
        self.matrix[x][y]
    }

    pub fn matrix(&self) -> &Vec<Vec<TruthValue>> {
        &self.matrix
    }

    /// The unique full-weight target of a supported point.
    pub fn image_of(&self, x: usize) -> Option<usize> {
        let ax = self.source.get(x);
        if ax.is_zero() {
            return None;
        }
        self.target.support().into_iter().find(|&y| self.matrix[x][y] == ax)
    }

    /// `f⁻¹(B̃₁)(a) = sup over b in |B̃| of min(f(a,b), B̃₁(b))` on the
    /// support of the source, zero elsewhere.
    pub fn preimage(&self, b1: &FuzzySubset) -> Result<FuzzySubset, Error> {
        if b1.carrier() != self.target.carrier() {
            return Err(Error::CarrierMismatch("preimage from the wrong carrier".into()));
        }
        let support: Vec<usize> = self.target.support();
        let values = (0..self.source.carrier().len())
            .map(|x| {
                if self.source.get(x).is_zero() {
                    TruthValue::ZERO
                } else {
                    sup_family(support.iter().map(|&y| self.matrix[x][y].meet(b1.get(y))))
                }
            })
            .collect();
        FuzzySubset::new(self.source.carrier().clone(), values)
    }

    /// `(g ∘ f)(x, z) = ⋁_y (f(x,y) ∧ g(y,z))`.
    pub fn compose(&self, then: &ProperFunction) -> Result<ProperFunction, Error> {
        if self.target != then.source {
            return Err(Error::CarrierMismatch("proper functions do not chain".into()));
        }
        let matrix = (0..self.source.carrier().len())
            .map(|x| {
                (0..then.target.carrier().len())
                    .map(|z| {
                        sup_family(
                            (0..self.target.carrier().len())
                                .map(|y| self.matrix[x][y].meet(then.matrix[y][z])),
                        )
                    })
                    .collect()
            })
            .collect();
        ProperFunction::new(self.source.clone(), then.target.clone(), matrix)
    }
}

/// Properness: on `|Ã|` exactly one target of full weight `Ã(x)` in `|B̃|`
/// and zero at the rest, under the relation bound `f(x,y) ≤ Ã(x) ∧ B̃(y)`.
pub fn check_proper(f: &ProperFunction) -> Report {
    let mut report = Report::new("proper function");
    let src = &f.source;
    let tgt = &f.target;
    let tgt_support = tgt.support();
    let mut bad_bound = None;
    for x in 0..src.carrier().len() {
        for y in 0..tgt.carrier().len() {
            if f.matrix[x][y] > src.get(x).meet(tgt.get(y)) && bad_bound.is_none() {
                bad_bound = Some((x, y));
            }
        }
    }
    report.record("f(x,y) ≤ Ã(x) ∧ B̃(y)", bad_bound.is_none(), || {
        let (x, y) = bad_bound.unwrap();
        format!(
            "f({}, {}) = {}",
            src.carrier().points()[x],
            tgt.carrier().points()[y],
            f.matrix[x][y]
        )
    });
    let mut bad_unique = None;
    for x in 0..src.carrier().len() {
        let ax = src.get(x);
        if ax.is_zero() {
            continue;
        }
        let full: Vec<usize> =
            tgt_support.iter().copied().filter(|&y| f.matrix[x][y] == ax).collect();
        let zero_rest =
            tgt_support.iter().all(|&y| full.contains(&y) || f.matrix[x][y].is_zero());
        if (full.len() != 1 || !zero_rest) && bad_unique.is_none() {
            bad_unique = Some(x);
        }
    }
    report.record("unique full-weight target on the support", bad_unique.is_none(), || {
        format!("at source point {}", src.carrier().points()[bad_unique.unwrap()])
    });
    report
}

/// A topological system over a fuzzy carrier `(X, Ã)` with values in the
/// object's own chain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LTopSystem {
    base: LFuzzySet,
    frame: FiniteFrame,
    sat: Vec<Vec<TruthValue>>,
}

/// In the variable-basis theory the chain is a component of the object; the
/// representation already carries it, so the two theories share a type.
pub type FuzzTopSystem = LTopSystem;

impl LTopSystem {
    pub fn new(
        base: LFuzzySet,
        frame: FiniteFrame,
        sat: Vec<Vec<TruthValue>>,
    ) -> Result<Self, Error> {
        if sat.len() != base.carrier().len() || sat.iter().any(|row| row.len() != frame.len()) {
            return Err(Error::structural("satisfaction matrix is not total on X × P"));
        }
        Ok(LTopSystem { base, frame, sat })
    }

    pub fn base(&self) -> &LFuzzySet {
        &self.base
    }

    pub fn frame(&self) -> &FiniteFrame {
        &self.frame
    }

    pub fn sat(&self, x: usize, p: usize) -> TruthValue {
        self.sat[x][p]
    }

    pub fn sat_matrix(&self) -> &Vec<Vec<TruthValue>> {
        &self.sat
    }

    pub fn column(&self, p: usize) -> FuzzySubset {
        FuzzySubset::new(
            self.base.carrier().clone(),
            self.sat.iter().map(|row| row[p]).collect(),
        )
        .expect("matrix is total")
    }
}

/// A space over a fuzzy carrier: opens are fuzzy subsets below `Ã` with
/// values in the object's chain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LTopSpace {
    base: LFuzzySet,
    opens: Vec<FuzzySubset>,
}

pub type FuzzTopSpace = LTopSpace;

impl LTopSpace {
    pub fn new(base: LFuzzySet, opens: Vec<FuzzySubset>) -> Result<Self, Error> {
        let mut dedup: Vec<FuzzySubset> = Vec::new();
        for o in opens {
            if o.carrier() != base.carrier() {
                return Err(Error::CarrierMismatch("open on a different carrier".into()));
            }
            if !dedup.contains(&o) {
                dedup.push(o);
            }
        }
        Ok(LTopSpace { base, opens: dedup })
    }

    pub fn base(&self) -> &LFuzzySet {
        &self.base
    }

    pub fn opens(&self) -> &[FuzzySubset] {
        &self.opens
    }

    pub fn contains(&self, o: &FuzzySubset) -> bool {
        self.opens.contains(o)
    }

    pub fn index_of(&self, o: &FuzzySubset) -> Option<usize> {
        self.opens.iter().position(|x| x == o)
    }

    /// `(τ, ⊆)` with pointwise order.
    pub fn tau_frame(&self) -> Result<FiniteFrame, Error> {
        let names = self.opens.iter().map(|o| o.to_string()).collect();
        let leq = self
            .opens
            .iter()
            .map(|a| self.opens.iter().map(|b| a.le(b)).collect())
            .collect();
        FiniteFrame::from_poset(FinitePoset::new(names, leq)?)
    }
}

/// Clauses of a space over `(X, Ã)`: `∅̃` and `Ã` open, every open below `Ã`
/// with values in the chain, closure under binary meets and joins.
pub fn check_l_space(s: &LTopSpace) -> Report {
    let mut report = Report::new("space over a fuzzy carrier");
    let carrier = s.base.carrier().clone();
    let empty = FuzzySubset::empty(carrier);
    report.record("∅̃ ∈ τ", s.contains(&empty), || "missing the empty subset".into());
    report.record("Ã ∈ τ", s.contains(s.base.subset()), || {
        "missing the carrier subset".into()
    });
    let mut bad_bound = None;
    let mut bad_chain = None;
    for o in &s.opens {
        for x in 0..s.base.carrier().len() {
            if o.get(x) > s.base.get(x) && bad_bound.is_none() {
                bad_bound = Some((o.clone(), x));
            }
            if !s.base.chain().contains(o.get(x)) && bad_chain.is_none() {
                bad_chain = Some((o.clone(), x));
            }
        }
    }
    report.record("U(x) ≤ Ã(x) for every open", bad_bound.is_none(), || {
        let (o, x) = bad_bound.unwrap();
        format!("{o} exceeds Ã at {}", s.base.carrier().points()[x])
    });
    report.record("open values lie in the chain", bad_chain.is_none(), || {
        let (o, x) = bad_chain.unwrap();
        format!("{o} leaves the chain at {}", s.base.carrier().points()[x])
    });
    let mut bad_meet = None;
    let mut bad_join = None;
    for (i, a) in s.opens.iter().enumerate() {
        for b in s.opens.iter().skip(i) {
            if !s.contains(&a.intersection(b).expect("same carrier")) && bad_meet.is_none() {
                bad_meet = Some((a.clone(), b.clone()));
            }
            if !s.contains(&a.union_with(b).expect("same carrier")) && bad_join.is_none() {
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
    report
}

/// The system clauses over a fuzzy carrier: chain values, the bound
/// `gr(x ⊨ p) ≤ Ã(x)`, binary meet/join, `gr(x ⊨ ⊥) = 0`, and
/// `gr(x ⊨ ⊤) = Ã(x)`.
pub fn check_l_system(d: &LTopSystem) -> Report {
    let mut report = Report::new("system over a fuzzy carrier");
    let (n, m) = (d.base.carrier().len(), d.frame.len());
    let names = d.base.carrier().points();
    let mut bad_chain = None;
    let mut bad_bound = None;
    for x in 0..n {
        for p in 0..m {
            if !d.base.chain().contains(d.sat[x][p]) && bad_chain.is_none() {
                bad_chain = Some((x, p));
            }
            if d.sat[x][p] > d.base.get(x) && bad_bound.is_none() {
                bad_bound = Some((x, p));
            }
        }
    }
    report.record("gr(x ⊨ p) ∈ L", bad_chain.is_none(), || {
        let (x, p) = bad_chain.unwrap();
        format!("gr({} ⊨ {}) = {} outside the chain", names[x], d.frame.name(p), d.sat[x][p])
    });
    report.record("gr(x ⊨ p) ≤ Ã(x)", bad_bound.is_none(), || {
        let (x, p) = bad_bound.unwrap();
        format!("at ({}, {})", names[x], d.frame.name(p))
    });
    report.record(
        "gr(x ⊨ ⊤) = Ã(x)",
        (0..n).all(|x| d.sat[x][d.frame.top()] == d.base.get(x)),
        || {
            let x = (0..n).find(|&x| d.sat[x][d.frame.top()] != d.base.get(x)).unwrap();
            format!("at {}", names[x])
        },
    );
    report.record(
        "gr(x ⊨ ⊥) = 0",
        (0..n).all(|x| d.sat[x][d.frame.bottom()].is_zero()),
        || "⊥ column is not 0".into(),
    );
    let mut bad_meet = None;
    let mut bad_join = None;
    for x in 0..n {
        for a in 0..m {
            for b in 0..m {
                if d.sat[x][d.frame.meet(a, b)] != d.sat[x][a].meet(d.sat[x][b])
                    && bad_meet.is_none()
                {
                    bad_meet = Some((x, a, b));
                }
                if d.sat[x][d.frame.join(a, b)] != d.sat[x][a].join(d.sat[x][b])
                    && bad_join.is_none()
                {
                    bad_join = Some((x, a, b));
                }
            }
        }
    }
    report.record("gr(x ⊨ p∧q) = min", bad_meet.is_none(), || {
        let (x, a, b) = bad_meet.unwrap();
        format!("at ({}, {}, {})", names[x], d.frame.name(a), d.frame.name(b))
    });
    report.record("gr(x ⊨ p∨q) = max", bad_join.is_none(), || {
        let (x, a, b) = bad_join.unwrap();
        format!("at ({}, {}, {})", names[x], d.frame.name(a), d.frame.name(b))
    });
    report
}

/// Extent of a system over a fuzzy carrier, with the column map.
#[derive(Debug, Clone)]
pub struct LExtOutcome {
    pub space: LTopSpace,
    pub open_of: Vec<usize>,
}

/// `ext_L(p)(x) = gr(x ⊨ p)`; yields a space over the same `(X, Ã)`.
pub fn ext_l(d: &LTopSystem) -> Result<LExtOutcome, Error> {
    let opens: Vec<FuzzySubset> = (0..d.frame.len()).map(|p| d.column(p)).collect();
    let space = LTopSpace::new(d.base.clone(), opens)?;
    let open_of = (0..d.frame.len())
        .map(|p| space.index_of(&d.column(p)).expect("column is an open"))
        .collect();
    Ok(LExtOutcome { space, open_of })
}

/// `J_L`: membership satisfaction over `(τ, ⊆)`.
pub fn j_l(s: &LTopSpace) -> Result<LTopSystem, Error> {
    let frame = s.tau_frame()?;
    let sat = (0..s.base.carrier().len())
        .map(|x| s.opens.iter().map(|o| o.get(x)).collect())
        .collect();
    LTopSystem::new(s.base.clone(), frame, sat)
}

/// `Lo_L`: the frame part.
pub fn lo_l(d: &LTopSystem) -> FiniteFrame {
    d.frame.clone()
}

/// `S_L(P)`: points are frame homs `v : P → L` with membership
/// `P̃(v) = ⋁_p v(p)` and `gr(v ⊨* p) = v(p)`.
pub fn s_l(p: &FiniteFrame, chain: &FiniteChain) -> Result<(LTopSystem, Vec<FrameHom>), Error> {
    let cf = chain_frame(chain);
    let homs = crate::lattice::enumerate_frame_homs(p, &cf)?;
    let values = chain.values();
    let carrier = Carrier::new((0..homs.len()).map(|i| format!("v{i}")));
    let membership: Vec<TruthValue> = homs
        .iter()
        .map(|v| sup_family((0..p.len()).map(|e| values[v.apply(e)])))
        .collect();
    let base = LFuzzySet::new(FuzzySubset::new(carrier, membership)?, chain.clone())?;
    let sat = homs
        .iter()
        .map(|v| (0..p.len()).map(|e| values[v.apply(e)]).collect())
        .collect();
    Ok((LTopSystem::new(base, p.clone(), sat)?, homs))
}

/// A morphism of fixed-chain systems: a proper function and a contravariant
/// frame hom subject to the transfer equation on the support.
#[derive(Debug, Clone)]
pub struct LSystemMap {
    pub proper: ProperFunction,
    /// `f₂ : Q → P`.
    pub frame_map: FrameHom,
}

pub fn check_l_system_map(m: &LSystemMap, d: &LTopSystem, e: &LTopSystem) -> Report {
    let mut report = Report::new("map of systems over fuzzy carriers");
    report.absorb("proper function", check_proper(&m.proper));
    report.absorb("frame hom", m.frame_map.check());
    if m.proper.source() != d.base() || m.proper.target() != e.base() {
        report.fail("carriers", "proper function does not run (X,Ã) → (Y,B̃)");
        return report;
    }
    if m.frame_map.source != *e.frame() || m.frame_map.target != *d.frame() {
        report.fail("frames", "frame hom does not run Q → P");
        return report;
    }
    let mut bad = None;
    for x in 0..d.base.carrier().len() {
        for q in 0..e.frame().len() {
            let lhs = d.sat(x, m.frame_map.apply(q));
            let expect = match m.proper.image_of(x) {
                Some(y) => e.sat(y, q).meet(d.base.get(x)),
                None => TruthValue::ZERO,
            };
            if lhs != expect && bad.is_none() {
                bad = Some((x, q, lhs, expect));
            }
        }
    }
    report.record("gr(x ⊨ f₂(q)) = gr(f₁(x) ⊨' q) on the support", bad.is_none(), || {
        let (x, q, lhs, expect) = bad.unwrap();
        format!(
            "at ({}, {}): {} ≠ {}",
            d.base.carrier().points()[x],
            e.frame().name(q),
            lhs,
            expect
        )
    });
    report
}

/// A variable-basis morphism of spaces `(f, φ)`.
#[derive(Debug, Clone)]
pub struct FuzzMorphism {
    /// `f : X × X₁ → L`.
    pub relation: Vec<Vec<TruthValue>>,
    /// `φ⁻¹ : L₁ → L`.
    pub phi_inv: ChainHom,
}

impl FuzzMorphism {
    /// The identity `(i_Ã, i_L)`.
    pub fn identity(base: &LFuzzySet) -> Self {
        FuzzMorphism {
            relation: ProperFunction::identity(base).matrix,
            phi_inv: ChainHom::identity(base.chain().clone()),
        }
    }

    /// `f⁻¹_φ(V)(x) = ⋁_y (f(x,y) ∧ φ⁻¹ V(y))`.
    pub fn preimage(
        &self,
        source_carrier: &Carrier,
        v: &FuzzySubset,
    ) -> Result<FuzzySubset, Error> {
        let values = (0..source_carrier.len())
            .map(|x| {
                let terms: Result<Vec<TruthValue>, Error> = (0..v.carrier().len())
                    .map(|y| Ok(self.relation[x][y].meet(self.phi_inv.apply(v.get(y))?)))
                    .collect();
                terms.map(sup_family)
            })
            .collect::<Result<Vec<_>, _>>()?;
        FuzzySubset::new(source_carrier.clone(), values)
    }

    /// `(g, ψ) ∘ (f, φ) = (g∘f, ψφ)` with
    /// `g∘f(x,z) = ⋁_y (f(x,y) ∧ φ⁻¹ g(y,z))`.
    pub fn compose(
        &self,
        then: &FuzzMorphism,
        mid_carrier: &Carrier,
        target_carrier: &Carrier,
    ) -> Result<FuzzMorphism, Error> {
        let relation = (0..self.relation.len())
            .map(|x| {
                (0..target_carrier.len())
                    .map(|z| {
                        let terms: Result<Vec<TruthValue>, Error> = (0..mid_carrier.len())
                            .map(|y| {
                                Ok(self.relation[x][y]
                                    .meet(self.phi_inv.apply(then.relation[y][z])?))
                            })
                            .collect();
                        terms.map(sup_family)
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FuzzMorphism { relation, phi_inv: then.phi_inv.compose(&self.phi_inv)? })
    }
}

/// Clauses (a)–(c) of a variable-basis space morphism
/// `(f, φ) : (X,L,Ã,τ) → (X₁,L₁,Ã₁,τ₁)`.
pub fn check_fuzztop_morphism(m: &FuzzMorphism, s1: &LTopSpace, s2: &LTopSpace) -> Report {
    let mut report = Report::new("variable-basis space morphism");
    report.absorb("clause (a): φ⁻¹", m.phi_inv.check());
    if m.phi_inv.source() != s2.base.chain() || m.phi_inv.target() != s1.base.chain() {
        report.fail("chains", "φ⁻¹ does not run L₁ → L");
        return report;
    }
    let (nx, ny) = (s1.base.carrier().len(), s2.base.carrier().len());
    if m.relation.len() != nx || m.relation.iter().any(|r| r.len() != ny) {
        report.fail("relation", "f is not total on X × X₁");
        return report;
    }
    let mut bad_bound = None;
    for x in 0..nx {
        for y in 0..ny {
            let bound = match m.phi_inv.apply(s2.base.get(y)) {
                Ok(b) => s1.base.get(x).meet(b),
                Err(_) => {
                    report.fail("clause (b)", "Ã₁ leaves the chain of φ⁻¹");
                    return report;
                }
            };
            if m.relation[x][y] > bound && bad_bound.is_none() {
                bad_bound = Some((x, y));
            }
        }
    }
    report.record("clause (b): f(x,y) ≤ Ã(x) ∧ φ⁻¹Ã₁(y)", bad_bound.is_none(), || {
        let (x, y) = bad_bound.unwrap();
        format!("at ({}, {})", s1.base.carrier().points()[x], s2.base.carrier().points()[y])
    });
    let mut bad_unique = None;
    let tgt_support = s2.base.support();
    for x in s1.base.support() {
        let ax = s1.base.get(x);
        let full: Vec<usize> =
            tgt_support.iter().copied().filter(|&y| m.relation[x][y] == ax).collect();
        let zero_rest =
            tgt_support.iter().all(|&y| full.contains(&y) || m.relation[x][y].is_zero());
        if (full.len() != 1 || !zero_rest) && bad_unique.is_none() {
            bad_unique = Some(x);
        }
    }
    report.record("clause (b): unique full-weight target", bad_unique.is_none(), || {
        format!("at {}", s1.base.carrier().points()[bad_unique.unwrap()])
    });
    let mut bad_open = None;
    for v in s2.opens() {
        match m.preimage(s1.base.carrier(), v) {
            Ok(u) => {
                if !s1.contains(&u) && bad_open.is_none() {
                    bad_open = Some((v.clone(), u));
                }
            }
            Err(_) => {
                report.fail("clause (c)", "open values leave the chain of φ⁻¹");
                return report;
            }
        }
    }
    report.record("clause (c): f⁻¹_φ V is open", bad_open.is_none(), || {
        let (v, u) = bad_open.unwrap();
        format!("f⁻¹_φ({v}) = {u} is not open")
    });
    report
}

/// A variable-basis morphism of systems `(f, φ, g)`.
#[derive(Debug, Clone)]
pub struct FuzzSystemMap {
    pub morphism: FuzzMorphism,
    /// `g : Q → P`.
    pub frame_map: FrameHom,
}

/// Clauses of a variable-basis system morphism, the transfer equation being
/// `gr(x ⊨ g(q)) = ⋁_y (φ⁻¹ gr(y ⊨' q) ∧ f(x,y))`.
pub fn check_fuzztopsys_morphism(
    m: &FuzzSystemMap,
    d: &FuzzTopSystem,
    e: &FuzzTopSystem,
) -> Report {
    let mut report = Report::new("variable-basis system morphism");
    report.absorb("φ⁻¹", m.morphism.phi_inv.check());
    report.absorb("frame hom", m.frame_map.check());
    if m.frame_map.source != *e.frame() || m.frame_map.target != *d.frame() {
        report.fail("frames", "g does not run Q → P");
        return report;
    }
    let (nx, ny) = (d.base.carrier().len(), e.base.carrier().len());
    let mut bad = None;
    for x in 0..nx {
        for q in 0..e.frame().len() {
            let lhs = d.sat(x, m.frame_map.apply(q));
            let terms: Result<Vec<TruthValue>, Error> = (0..ny)
                .map(|y| {
                    Ok(m.morphism.phi_inv.apply(e.sat(y, q))?.meet(m.morphism.relation[x][y]))
                })
                .collect();
            match terms {
                Ok(ts) => {
                    let rhs = sup_family(ts);
                    if lhs != rhs && bad.is_none() {
                        bad = Some((x, q, lhs, rhs));
                    }
                }
                Err(_) => {
                    report.fail("clause 3", "satisfaction values leave the chain of φ⁻¹");
                    return report;
                }
            }
        }
    }
    report.record(
        "clause 3: gr(x ⊨ g(q)) = ⋁_y (φ⁻¹ gr(y ⊨' q) ∧ f(x,y))",
        bad.is_none(),
        || {
            let (x, q, lhs, rhs) = bad.unwrap();
            format!(
                "at ({}, {}): {} ≠ {}",
                d.base.carrier().points()[x],
                e.frame().name(q),
                lhs,
                rhs
            )
        },
    );
    report
}

/// `Ext_F` with the column map, structurally the fixed-chain extent.
pub fn ext_f(d: &FuzzTopSystem) -> Result<LExtOutcome, Error> {
    ext_l(d)
}

/// `J_F` on objects.
pub fn j_f(s: &FuzzTopSpace) -> Result<FuzzTopSystem, Error> {
    j_l(s)
}

fn column_position(d: &LTopSystem, open: &FuzzySubset) -> Option<usize> {
    (0..d.frame().len()).find(|&p| d.column(p) == *open)
}

/// `J_F` on a morphism: `(f, φ) ↦ (f, φ, f⁻¹_φ)` between the membership
/// systems of the two spaces.
pub fn j_f_morphism(
    m: &FuzzMorphism,
    s1: &FuzzTopSpace,
    s2: &FuzzTopSpace,
) -> Result<FuzzSystemMap, Error> {
    let d = j_f(s1)?;
    let e = j_f(s2)?;
    let map = (0..e.frame().len())
        .map(|q| {
            let pre = m.preimage(s1.base.carrier(), &s2.opens[q])?;
            column_position(&d, &pre)
                .ok_or_else(|| Error::structural("φ-preimage of an open is not open"))
        })
        .collect::<Result<Vec<usize>, Error>>()?;
    let frame_map = FrameHom::new(e.frame().clone(), d.frame().clone(), map)?;
    Ok(FuzzSystemMap { morphism: m.clone(), frame_map })
}

/// The counit `(i_Ã, i_L, ext_F*) : J_F(Ext_F(D)) → D`.
pub fn counit_ext_f(d: &FuzzTopSystem) -> Result<(FuzzTopSystem, FuzzSystemMap), Error> {
    let out = ext_f(d)?;
    let j_ext = j_f(&out.space)?;
    let frame_map = FrameHom::new(d.frame().clone(), j_ext.frame().clone(), out.open_of.clone())?;
    let morphism = FuzzMorphism::identity(d.base());
    Ok((j_ext, FuzzSystemMap { morphism, frame_map }))
}

/// Strict α-cut subsystem: points with `Ã(x) > α`, crisp satisfaction
/// `x ⊨_α p` iff `gr(x ⊨ p) > α`, over the same frame.
pub fn alpha_subsystem_strict(
    d: &LTopSystem,
    alpha: TruthValue,
) -> Result<crate::system::FuzzyTopSystem, Error> {
    if !d.base.chain().contains(alpha) {
        return Err(Error::precondition(format!("{alpha} is not in the chain")));
    }
    let kept: Vec<usize> =
        (0..d.base.carrier().len()).filter(|&x| d.base.get(x) > alpha).collect();
    let points = Carrier::new(kept.iter().map(|&x| d.base.carrier().points()[x].clone()));
    let sat = kept
        .iter()
        .map(|&x| {
            (0..d.frame.len())
                .map(|p| if d.sat[x][p] > alpha { TruthValue::ONE } else { TruthValue::ZERO })
                .collect()
        })
        .collect();
    crate::system::FuzzyTopSystem::new(points, d.frame.clone(), sat)
}

/// Fuzzy α-cut subsystem `(X, Ã_α, ⊨_α, P)`: grades survive where
/// `Ã(x) ≥ α` and vanish below.
pub fn alpha_subsystem_fuzzy(d: &LTopSystem, alpha: TruthValue) -> Result<LTopSystem, Error> {
    if !d.base.chain().contains(alpha) {
        return Err(Error::precondition(format!("{alpha} is not in the chain")));
    }
    let cut = d.base.subset().fuzzy_alpha_cut(alpha);
    let base = LFuzzySet::new(cut, d.base.chain().clone())?;
    let sat = (0..d.base.carrier().len())
        .map(|x| {
            (0..d.frame.len())
                .map(|p| if d.base.get(x) >= alpha { d.sat[x][p] } else { TruthValue::ZERO })
                .collect()
        })
        .collect();
    LTopSystem::new(base, d.frame.clone(), sat)
}

/// Strict α-cut subspace: the crisp space `({x | Ã(x) > α}, τ_α)` with
/// `τ_α` the strict cuts of the opens.
pub fn alpha_subspace_strict(
    s: &LTopSpace,
    alpha: TruthValue,
) -> Result<crate::space::FuzzyTopSpace, Error> {
    if !s.base.chain().contains(alpha) {
        return Err(Error::precondition(format!("{alpha} is not in the chain")));
    }
    let kept: Vec<usize> =
        (0..s.base.carrier().len()).filter(|&x| s.base.get(x) > alpha).collect();
    let carrier = Carrier::new(kept.iter().map(|&x| s.base.carrier().points()[x].clone()));
    let opens = s
        .opens
        .iter()
        .map(|o| {
            FuzzySubset::new(
                carrier.clone(),
                kept.iter()
                    .map(|&x| if o.get(x) > alpha { TruthValue::ONE } else { TruthValue::ZERO })
                    .collect(),
            )
        })
        .collect::<Result<Vec<_>, _>>()?;
    crate::space::FuzzyTopSpace::new(carrier, opens, crate::space::Flavor::Plain)
}

/// Fuzzy α-cut subspace `(X, Ã_α, τ')` with `τ' = {Ã_α ∩ T̃ | T̃ ∈ τ}`.
pub fn alpha_subspace_fuzzy(s: &LTopSpace, alpha: TruthValue) -> Result<LTopSpace, Error> {
    if !s.base.chain().contains(alpha) {
        return Err(Error::precondition(format!("{alpha} is not in the chain")));
    }
    let cut = s.base.subset().fuzzy_alpha_cut(alpha);
    let base = LFuzzySet::new(cut.clone(), s.base.chain().clone())?;
    let opens =
        s.opens.iter().map(|o| cut.intersection(o)).collect::<Result<Vec<_>, _>>()?;
    LTopSpace::new(base, opens)
}
