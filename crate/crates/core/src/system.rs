//! Fuzzy topological systems, plain and graded: axioms, morphisms, the
//! extent/points/spectrum constructions, quotients, sums and products.

use crate::error::Error;
use crate::fuzzyset::{Carrier, FuzzySubset, PointMap};
use crate::lattice::{
    check_graded_frame, check_graded_frame_hom, enumerate_frame_homs, frame_coproduct,
    frame_product, FiniteFrame, FrameCoproduct, FrameHom, GradedCarrier, GradedFrame,
    GradedFrameMap,
};
use crate::report::Report;
use crate::space::{Flavor, FuzzyTopSpace};
use crate::truth::{inf_family, sup_family, FiniteChain, TruthValue};
use serde::{Deserialize, Serialize};

/// A fuzzy topological system `(X, ⊨, A)`: points, a frame, and a graded
/// satisfaction matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzyTopSystem {
    points: Carrier,
    frame: FiniteFrame,
    /// `sat[x][a] = gr(x ⊨ a)`.
    sat: Vec<Vec<TruthValue>>,
}

impl FuzzyTopSystem {
    pub fn new(
        points: Carrier,
        frame: FiniteFrame,
        sat: Vec<Vec<TruthValue>>,
    ) -> Result<Self, Error> {
        if sat.len() != points.len() || sat.iter().any(|row| row.len() != frame.len()) {
            return Err(Error::structural("satisfaction matrix is not total on X × A"));
        }
        Ok(FuzzyTopSystem { points, frame, sat })
    }

    pub fn points(&self) -> &Carrier {
        &self.points
    }

    pub fn frame(&self) -> &FiniteFrame {
        &self.frame
    }

    pub fn sat(&self, x: usize, a: usize) -> TruthValue {
        self.sat[x][a]
    }

    pub fn sat_matrix(&self) -> &Vec<Vec<TruthValue>> {
        &self.sat
    }

    pub fn set_sat(&mut self, x: usize, a: usize, v: TruthValue) {
        self.sat[x][a] = v;
    }

    /// The column of a frame element as a fuzzy subset of the points.
    pub fn column(&self, a: usize) -> FuzzySubset {
        FuzzySubset::new(self.points.clone(), self.sat.iter().map(|row| row[a]).collect())
            .expect("matrix is total")
    }

    /// All truth values occurring in the matrix, plus 0 and 1.
    pub fn occurring_chain(&self) -> FiniteChain {
        FiniteChain::from_values(self.sat.iter().flatten().copied())
    }
}

/// A graded fuzzy topological system `(X, ⊨, A, R)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedFuzzyTopSystem {
    points: Carrier,
    frame: GradedFrame,
    sat: Vec<Vec<TruthValue>>,
}

impl GradedFuzzyTopSystem {
    pub fn new(
        points: Carrier,
        frame: GradedFrame,
        sat: Vec<Vec<TruthValue>>,
    ) -> Result<Self, Error> {
        if sat.len() != points.len() || sat.iter().any(|row| row.len() != frame.len()) {
            return Err(Error::structural("satisfaction matrix is not total on X × A"));
        }
        Ok(GradedFuzzyTopSystem { points, frame, sat })
    }

    pub fn points(&self) -> &Carrier {
        &self.points
    }

    pub fn frame(&self) -> &GradedFrame {
        &self.frame
    }

    pub fn sat(&self, x: usize, a: usize) -> TruthValue {
        self.sat[x][a]
    }

    pub fn sat_matrix(&self) -> &Vec<Vec<TruthValue>> {
        &self.sat
    }

    pub fn column(&self, a: usize) -> FuzzySubset {
        FuzzySubset::new(self.points.clone(), self.sat.iter().map(|row| row[a]).collect())
            .expect("matrix is total")
    }
}

/// Checks the binary and empty meet/join clauses.
///
/// On a finite frame these imply the finite- and arbitrary-subset clauses by
/// induction; `check_system_subsets` runs the exhaustive form as an oracle.
pub fn check_system(d: &FuzzyTopSystem) -> Report {
    let mut report = Report::new("fuzzy topological system");
    let f = &d.frame;
    let (n, m) = (d.points.len(), d.frame.len());
    report.record("gr(x ⊨ ⊤) = 1", (0..n).all(|x| d.sat[x][f.top()].is_one()), || {
        let x = (0..n).find(|&x| !d.sat[x][f.top()].is_one()).unwrap();
        format!("gr({} ⊨ ⊤) = {}", d.points.points()[x], d.sat[x][f.top()])
    });
    report.record("gr(x ⊨ ⊥) = 0", (0..n).all(|x| d.sat[x][f.bottom()].is_zero()), || {
        let x = (0..n).find(|&x| !d.sat[x][f.bottom()].is_zero()).unwrap();
        format!("gr({} ⊨ ⊥) = {}", d.points.points()[x], d.sat[x][f.bottom()])
    });
    let mut bad_meet = None;
    let mut bad_join = None;
    for x in 0..n {
        for a in 0..m {
            for b in 0..m {
                if d.sat[x][f.meet(a, b)] != d.sat[x][a].meet(d.sat[x][b]) && bad_meet.is_none()
                {
                    bad_meet = Some((x, a, b));
                }
                if d.sat[x][f.join(a, b)] != d.sat[x][a].join(d.sat[x][b]) && bad_join.is_none()
                {
                    bad_join = Some((x, a, b));
                }
            }
        }
    }
    report.record("gr(x ⊨ a∧b) = min", bad_meet.is_none(), || {
        let (x, a, b) = bad_meet.unwrap();
        format!("at ({}, {}, {})", d.points.points()[x], f.name(a), f.name(b))
    });
    report.record("gr(x ⊨ a∨b) = max", bad_join.is_none(), || {
        let (x, a, b) = bad_join.unwrap();
        format!("at ({}, {}, {})", d.points.points()[x], f.name(a), f.name(b))
    });
    report
}

/// Exhaustive subset clauses: `gr(x ⊨ ⋀S) = inf` and `gr(x ⊨ ⋁S) = sup`
/// over every subset of the frame. Intended for `|A| ≤ 8`.
pub fn check_system_subsets(d: &FuzzyTopSystem) -> Result<Report, Error> {
    let m = d.frame.len();
    if m > 16 {
        return Err(Error::Budget(format!("subset check over 2^{m} subsets")));
    }
    let mut report = Report::new("system subset clauses");
    let mut bad_inf = None;
    let mut bad_sup = None;
    for mask in 0u32..(1 << m) {
        let members: Vec<usize> = (0..m).filter(|&a| mask & (1 << a) != 0).collect();
        let meet = d.frame.inf(members.iter().copied());
        let join = d.frame.sup(members.iter().copied());
        for x in 0..d.points.len() {
            let inf = inf_family(members.iter().map(|&a| d.sat[x][a]));
            let sup = sup_family(members.iter().map(|&a| d.sat[x][a]));
            if d.sat[x][meet] != inf && bad_inf.is_none() {
                bad_inf = Some((x, members.clone()));
            }
            if d.sat[x][join] != sup && bad_sup.is_none() {
                bad_sup = Some((x, members.clone()));
            }
        }
    }
    report.record("gr(x ⊨ ⋀S) = inf over S", bad_inf.is_none(), || {
        let (x, s) = bad_inf.unwrap();
        format!("x = {}, |S| = {}", d.points.points()[x], s.len())
    });
    report.record("gr(x ⊨ ⋁S) = sup over S", bad_sup.is_none(), || {
        let (x, s) = bad_sup.unwrap();
        format!("x = {}, |S| = {}", d.points.points()[x], s.len())
    });
    Ok(report)
}

/// Checks the three clauses of a graded system, including the graded-frame
/// axioms of its frame.
pub fn check_graded_system(d: &GradedFuzzyTopSystem) -> Report {
    let mut report = Report::new("graded fuzzy topological system");
    report.absorb("frame", check_graded_frame(&d.frame));
    let c = d.frame.carrier();
    let (n, m) = (d.points.len(), d.frame.len());
    let mut bad_transfer = None;
    'tr: for x in 0..n {
        for a in 0..m {
            for b in 0..m {
                if d.sat[x][a].meet(d.frame.r(a, b)) > d.sat[x][b] {
                    bad_transfer = Some((x, a, b));
                    break 'tr;
                }
            }
        }
    }
    report.record("gr(x⊨a) ∧ R(a,b) ≤ gr(x⊨b)", bad_transfer.is_none(), || {
        let (x, a, b) = bad_transfer.unwrap();
        format!("at ({}, {}, {})", d.points.points()[x], c.name(a), c.name(b))
    });
    report.record("gr(x ⊨ ⋀∅) = 1", (0..n).all(|x| d.sat[x][c.top()].is_one()), || {
        "⊤ column is not constantly 1".into()
    });
    report.record("gr(x ⊨ ⋁∅) = 0", (0..n).all(|x| d.sat[x][c.bottom()].is_zero()), || {
        "⊥ column is not constantly 0".into()
    });
    let mut bad_meet = None;
    let mut bad_join = None;
    for x in 0..n {
        for a in 0..m {
            for b in 0..m {
                if d.sat[x][c.meet(a, b)] != d.sat[x][a].meet(d.sat[x][b]) && bad_meet.is_none()
                {
                    bad_meet = Some((x, a, b));
                }
                if d.sat[x][c.join(a, b)] != d.sat[x][a].join(d.sat[x][b]) && bad_join.is_none()
                {
                    bad_join = Some((x, a, b));
                }
            }
        }
    }
    report.record("gr(x ⊨ a∧b) = min", bad_meet.is_none(), || {
        let (x, a, b) = bad_meet.unwrap();
        format!("at ({}, {}, {})", d.points.points()[x], c.name(a), c.name(b))
    });
    report.record("gr(x ⊨ a∨b) = max", bad_join.is_none(), || {
        let (x, a, b) = bad_join.unwrap();
        format!("at ({}, {}, {})", d.points.points()[x], c.name(a), c.name(b))
    });
    report
}

/// Spatial: equal columns force equal frame elements.
pub fn is_spatial(d: &FuzzyTopSystem) -> bool {
    let m = d.frame.len();
    (0..m).all(|a| (a + 1..m).all(|b| d.column(a) != d.column(b)))
}

/// Localic: distinct points have distinct rows.
pub fn is_localic(d: &FuzzyTopSystem) -> bool {
    let n = d.points.len();
    (0..n).all(|x| (x + 1..n).all(|y| d.sat[x] != d.sat[y]))
}

pub fn is_spatial_graded(d: &GradedFuzzyTopSystem) -> bool {
    let m = d.frame.len();
    (0..m).all(|a| (a + 1..m).all(|b| d.column(a) != d.column(b)))
}

/// The extent space of a system together with the column map `a ↦ ext(a)`.
#[derive(Debug, Clone)]
pub struct ExtOutcome {
    pub space: FuzzyTopSpace,
    /// For each frame element, the index of its extent among the opens.
    pub open_of: Vec<usize>,
}

/// `ext(a)(x) = gr(x ⊨ a)`; the opens are the distinct columns.
pub fn ext(d: &FuzzyTopSystem) -> ExtOutcome {
    let opens: Vec<FuzzySubset> = (0..d.frame.len()).map(|a| d.column(a)).collect();
    let space = FuzzyTopSpace::new(d.points.clone(), opens, Flavor::Plain)
        .expect("columns share the point carrier");
    let open_of = (0..d.frame.len())
        .map(|a| space.index_of(&d.column(a)).expect("column is an open"))
        .collect();
    ExtOutcome { space, open_of }
}

/// Graded extent: the same construction with the graded flavor.
pub fn ext_graded(d: &GradedFuzzyTopSystem) -> ExtOutcome {
    let opens: Vec<FuzzySubset> = (0..d.frame.len()).map(|a| d.column(a)).collect();
    let space = FuzzyTopSpace::new(d.points.clone(), opens, Flavor::Graded)
        .expect("columns share the point carrier");
    let open_of = (0..d.frame.len())
        .map(|a| space.index_of(&d.column(a)).expect("column is an open"))
        .collect();
    ExtOutcome { space, open_of }
}

/// `J`: the membership system `(X, ∈, τ)` of a space, with frame `(τ, ⊆)`.
pub fn j(space: &FuzzyTopSpace) -> Result<FuzzyTopSystem, Error> {
    let frame = space.tau_frame()?;
    let sat = (0..space.carrier().len())
        .map(|x| space.opens().iter().map(|o| o.get(x)).collect())
        .collect();
    FuzzyTopSystem::new(space.carrier().clone(), frame, sat)
}

/// Graded `J`: membership satisfaction over the graded frame `(τ, ⊆)`.
pub fn j_graded(space: &FuzzyTopSpace) -> Result<GradedFuzzyTopSystem, Error> {
    let frame = space.graded_frame()?;
    let sat = (0..space.carrier().len())
        .map(|x| space.opens().iter().map(|o| o.get(x)).collect())
        .collect();
    GradedFuzzyTopSystem::new(space.carrier().clone(), frame, sat)
}

/// `fm`: the frame part.
pub fn fm(d: &FuzzyTopSystem) -> FiniteFrame {
    d.frame.clone()
}

/// The spectrum of a frame over a finite chain of truth values.
#[derive(Debug, Clone)]
pub struct SpectrumOutcome {
    pub system: FuzzyTopSystem,
    /// The enumerated homs, aligned with the system's points.
    pub homs: Vec<FrameHom>,
    /// The chain frame used as hom codomain.
    pub chain_frame: FiniteFrame,
    /// Truth value of each chain-frame element.
    pub chain_values: Vec<TruthValue>,
}

/// Builds the linear frame of a finite chain; element ids ascend with the
/// values.
pub fn chain_frame(chain: &FiniteChain) -> FiniteFrame {
    let names = chain.values().iter().map(|v| v.to_string()).collect();
    let k = chain.len();
    let leq = (0..k).map(|i| (0..k).map(|j| i <= j).collect()).collect();
    FiniteFrame::from_poset(
        crate::lattice::FinitePoset::new(names, leq).expect("a chain is a poset"),
    )
    .expect("a chain is a frame")
}

/// `S(A)`: points are the frame homs `A → chain`, `gr(v ⊨* a) = v(a)`.
///
/// The continuum `Hom(A, [0, 1])` is replaced by a caller-selected finite
/// chain; `occurring_chain` of the ambient context is the usual choice.
pub fn spectrum(a: &FiniteFrame, chain: &FiniteChain) -> Result<SpectrumOutcome, Error> {
    let cf = chain_frame(chain);
    let homs = enumerate_frame_homs(a, &cf)?;
    let chain_values = chain.values().to_vec();
    let points = Carrier::new((0..homs.len()).map(|i| format!("v{i}")));
    let sat = homs
        .iter()
        .map(|v| (0..a.len()).map(|e| chain_values[v.apply(e)]).collect())
        .collect();
    let system = FuzzyTopSystem::new(points, a.clone(), sat)?;
    Ok(SpectrumOutcome { system, homs, chain_frame: cf, chain_values })
}

/// Graded spectrum: points are graded-frame homs into `(chain, R*)`, `R*`
/// being the Gödel-arrow structure on the chain (`1` iff `a ≤ b`, else `b`).
pub fn spectrum_graded(
    g: &GradedFrame,
    chain: &FiniteChain,
) -> Result<(GradedFuzzyTopSystem, Vec<GradedFrameMap>), Error> {
    let underlying = crate::lattice::graded_to_frame(g)?;
    let cf = chain_frame(chain);
    let chain_values = chain.values().to_vec();
    let k = chain_values.len();
    let r_star: Vec<Vec<TruthValue>> = (0..k)
        .map(|i| (0..k).map(|j| chain_values[i].godel_arrow(chain_values[j])).collect())
        .collect();
    let chain_graded = GradedFrame::new(GradedCarrier::from(&cf), r_star)?;
    let mut maps = Vec::new();
    for hom in enumerate_frame_homs(&underlying, &cf)? {
        let gm = GradedFrameMap { map: hom.map.clone() };
        if check_graded_frame_hom(&gm, g, &chain_graded).ok() {
            maps.push(gm);
        }
    }
    let points = Carrier::new((0..maps.len()).map(|i| format!("v{i}")));
    let sat = maps
        .iter()
        .map(|v| (0..g.len()).map(|e| chain_values[v.map[e]]).collect())
        .collect();
    let system = GradedFuzzyTopSystem::new(points, g.clone(), sat)?;
    Ok((system, maps))
}

/// A continuous map of systems: a point map together with a contravariant
/// frame hom.
#[derive(Debug, Clone)]
pub struct SystemMap {
    /// `f₁ : X → Y`.
    pub point_map: PointMap,
    /// `f₂ : B → A`, from the target's frame to the source's.
    pub frame_map: FrameHom,
}

impl SystemMap {
    pub fn identity(d: &FuzzyTopSystem) -> Self {
        SystemMap {
            point_map: PointMap::identity(d.points().clone()),
            frame_map: FrameHom::identity(d.frame()),
        }
    }

    /// `then ∘ self`: point maps compose forwards, frame maps backwards.
    pub fn compose(&self, then: &SystemMap) -> Result<SystemMap, Error> {
        Ok(SystemMap {
            point_map: self.point_map.compose(&then.point_map)?,
            frame_map: then.frame_map.compose(&self.frame_map)?,
        })
    }
}

/// Frame-hom laws plus the transfer equation
/// `gr(x ⊨ f₂(b)) = gr(f₁(x) ⊨' b)`.
pub fn check_system_map(m: &SystemMap, d: &FuzzyTopSystem, e: &FuzzyTopSystem) -> Report {
    let mut report = Report::new("system map");
    if m.point_map.source() != d.points() || m.point_map.target() != e.points() {
        report.fail("point map", "does not run X → Y");
        return report;
    }
    if m.frame_map.source != *e.frame() || m.frame_map.target != *d.frame() {
        report.fail("frame map", "does not run B → A");
        return report;
    }
    report.absorb("frame hom", m.frame_map.check());
    let mut bad = None;
    for x in 0..d.points().len() {
        for b in 0..e.frame().len() {
            let lhs = d.sat(x, m.frame_map.apply(b));
            let rhs = e.sat(m.point_map.apply(x), b);
            if lhs != rhs && bad.is_none() {
                bad = Some((x, b, lhs, rhs));
            }
        }
    }
    report.record("gr(x ⊨ f₂(b)) = gr(f₁(x) ⊨' b)", bad.is_none(), || {
        let (x, b, lhs, rhs) = bad.unwrap();
        format!("at ({}, {}): {} ≠ {}", d.points().points()[x], e.frame().name(b), lhs, rhs)
    });
    report
}

/// A continuous map of graded systems.
#[derive(Debug, Clone)]
pub struct GradedSystemMap {
    pub point_map: PointMap,
    /// Contravariant: from the target's graded frame to the source's.
    pub frame_map: GradedFrameMap,
}

pub fn check_graded_system_map(
    m: &GradedSystemMap,
    d: &GradedFuzzyTopSystem,
    e: &GradedFuzzyTopSystem,
) -> Report {
    let mut report = Report::new("graded system map");
    if m.point_map.source() != d.points() || m.point_map.target() != e.points() {
        report.fail("point map", "does not run X → Y");
        return report;
    }
    report.absorb(
        "graded frame hom",
        check_graded_frame_hom(&m.frame_map, e.frame(), d.frame()),
    );
    let mut bad = None;
    for x in 0..d.points().len() {
        for b in 0..e.frame().len() {
            let lhs = d.sat(x, m.frame_map.map[b]);
            let rhs = e.sat(m.point_map.apply(x), b);
            if lhs != rhs && bad.is_none() {
                bad = Some((x, b));
            }
        }
    }
    report.record("gr(x ⊨ f₂(b)) = gr(f₁(x) ⊨' b)", bad.is_none(), || {
        let (x, b) = bad.unwrap();
        format!("at point {x}, element {b}")
    });
    report
}

/// The counit `(id_X, ext*) : J(Ext(D)) → D`, where `ext* : A → (τ, ⊆)`
/// sends `a` to its extent.
pub fn counit_j_ext(d: &FuzzyTopSystem) -> Result<(FuzzyTopSystem, SystemMap), Error> {
    let out = ext(d);
    let j_ext = j(&out.space)?;
    let frame_map = FrameHom::new(d.frame.clone(), j_ext.frame().clone(), out.open_of.clone())?;
    let map = SystemMap { point_map: PointMap::identity(d.points.clone()), frame_map };
    Ok((j_ext, map))
}

/// The unit `(p*, id_A) : D → S(fm(D))` over the given chain; `p_x(a) =
/// gr(x ⊨ a)` lands among the enumerated homs for every point of a valid
/// system.
pub fn unit_fm_spectrum(
    d: &FuzzyTopSystem,
    chain: &FiniteChain,
) -> Result<(SpectrumOutcome, SystemMap), Error> {
    let spec = spectrum(&d.frame, chain)?;
    let mut point_assoc = Vec::with_capacity(d.points.len());
    for x in 0..d.points.len() {
        let v = spec
            .homs
            .iter()
            .position(|h| (0..d.frame.len()).all(|a| spec.chain_values[h.apply(a)] == d.sat[x][a]))
            .ok_or_else(|| {
                Error::structural(format!(
                    "p_x for point {} is not a frame hom into the chain",
                    d.points.points()[x]
                ))
            })?;
        point_assoc.push(v);
    }
    let point_map = PointMap::new(d.points.clone(), spec.system.points().clone(), point_assoc)?;
    let map = SystemMap { point_map, frame_map: FrameHom::identity(&d.frame) };
    Ok((spec, map))
}

/// Sum of systems: tagged disjoint union of points with the product frame;
/// `gr(z ⊨* ⟨a_λ⟩) = ⋁_λ (X̃_λ(z) ∧ gr(z ⊨_λ a_λ))` collapses, for `z` of
/// summand `μ`, to `gr(z ⊨_μ a_μ)` since the characteristic functions are
/// crisp.
pub fn system_sum(parts: &[FuzzyTopSystem]) -> Result<(FuzzyTopSystem, Vec<FrameHom>), Error> {
    if parts.is_empty() {
        return Err(Error::precondition("sum of an empty family"));
    }
    let mut names = Vec::new();
    for (tag, d) in parts.iter().enumerate() {
        for p in d.points().points() {
            names.push(format!("{tag}:{p}"));
        }
    }
    let points = Carrier::new(names);
    let frames: Vec<FiniteFrame> = parts.iter().map(|d| d.frame.clone()).collect();
    let product = frame_product(&frames)?;
    let mut sat = Vec::with_capacity(points.len());
    for (tag, d) in parts.iter().enumerate() {
        for x in 0..d.points().len() {
            let row = (0..product.frame.len())
                .map(|w| {
                    let comps = product.components(w);
                    d.sat(x, comps[tag])
                })
                .collect();
            sat.push(row);
        }
    }
    let system = FuzzyTopSystem::new(points, product.frame.clone(), sat)?;
    Ok((system, product.projections))
}

/// Product of systems: `Z = X × Y`, `C = A ⊗ B`, and
/// `gr((x,y) ⊨* ⋁ᵢ(aᵢ ⊗ bᵢ)) = ⋁ᵢ (gr(x ⊨ aᵢ) ∧ gr(y ⊨ bᵢ))` over the
/// canonical Birkhoff decomposition of each tensor element.
pub fn system_product(
    d: &FuzzyTopSystem,
    e: &FuzzyTopSystem,
) -> Result<(FuzzyTopSystem, FrameCoproduct), Error> {
    let cp = frame_coproduct(&d.frame, &e.frame)?;
    let mut names = Vec::new();
    for x in d.points().points() {
        for y in e.points().points() {
            names.push(format!("({x},{y})"));
        }
    }
    let points = Carrier::new(names);
    let mut sat = Vec::with_capacity(points.len());
    for x in 0..d.points().len() {
        for y in 0..e.points().len() {
            let row = (0..cp.frame.len())
                .map(|w| {
                    sup_family(
                        cp.decompose(w).into_iter().map(|(a, b)| d.sat(x, a).meet(e.sat(y, b))),
                    )
                })
                .collect();
            sat.push(row);
        }
    }
    let system = FuzzyTopSystem::new(points, cp.frame.clone(), sat)?;
    Ok((system, cp))
}

/// Verifies that product grades do not depend on the decomposition: the
/// value over the canonical decomposition must equal the value over the
/// maximal one (all pure tensors below the element). Any valid decomposition
/// is squeezed between the two.
pub fn product_decomposition_independent(
    product: &FuzzyTopSystem,
    cp: &FrameCoproduct,
    d: &FuzzyTopSystem,
    e: &FuzzyTopSystem,
) -> bool {
    let all_pairs: Vec<(usize, usize)> = (0..d.frame.len())
        .flat_map(|a| (0..e.frame.len()).map(move |b| (a, b)))
        .collect();
    for w in 0..cp.frame.len() {
        let below: Vec<(usize, usize)> = all_pairs
            .iter()
            .copied()
            .filter(|&(a, b)| cp.frame.le(cp.tensor(a, b), w))
            .collect();
        for x in 0..d.points().len() {
            for y in 0..e.points().len() {
                let z = x * e.points().len() + y;
                let maximal =
                    sup_family(below.iter().map(|&(a, b)| d.sat(x, a).meet(e.sat(y, b))));
                if product.sat(z, w) != maximal {
                    return false;
                }
            }
        }
    }
    true
}

/// The quotient of a system by column equality, with the class map.
#[derive(Debug, Clone)]
pub struct QuotientOutcome {
    pub system: FuzzyTopSystem,
    /// For each original frame element, its class id in the quotient frame.
    pub class_of: Vec<usize>,
}

/// Merges frame elements with equal satisfaction columns; the quotient frame
/// is the frame of distinct columns under pointwise order, classes named by
/// their least-id representative.
pub fn quotient(d: &FuzzyTopSystem) -> Result<QuotientOutcome, Error> {
    let m = d.frame.len();
    let mut reps: Vec<usize> = Vec::new();
    let mut class_of = vec![0usize; m];
    for a in 0..m {
        let col = d.column(a);
        match reps.iter().position(|&r| d.column(r) == col) {
            Some(c) => class_of[a] = c,
            None => {
                class_of[a] = reps.len();
                reps.push(a);
            }
        }
    }
    let names: Vec<String> = reps.iter().map(|&r| format!("[{}]", d.frame.name(r))).collect();
    let k = reps.len();
    let leq = (0..k)
        .map(|i| (0..k).map(|jj| d.column(reps[i]).le(&d.column(reps[jj]))).collect())
        .collect();
    let frame = FiniteFrame::from_poset(crate::lattice::FinitePoset::new(names, leq)?)?;
    let sat = (0..d.points.len()).map(|x| reps.iter().map(|&r| d.sat[x][r]).collect()).collect();
    let system = FuzzyTopSystem::new(d.points.clone(), frame, sat)?;
    Ok(QuotientOutcome { system, class_of })
}

/// Graded quotient: the same classes with
/// `R([a],[b]) = inf_x (gr(x ⊨' [a]) → gr(x ⊨' [b]))`.
pub fn quotient_graded(d: &FuzzyTopSystem) -> Result<(GradedFuzzyTopSystem, Vec<usize>), Error> {
    let q = quotient(d)?;
    let k = q.system.frame().len();
    let mut r = vec![vec![TruthValue::ZERO; k]; k];
    for (i, row) in r.iter_mut().enumerate() {
        for (jj, slot) in row.iter_mut().enumerate() {
            *slot = q.system.column(i).graded_inclusion(&q.system.column(jj))?;
        }
    }
    let graded = GradedFrame::new(GradedCarrier::from(q.system.frame()), r)?;
    let sys = GradedFuzzyTopSystem::new(
        q.system.points().clone(),
        graded,
        q.system.sat_matrix().clone(),
    )?;
    Ok((sys, q.class_of))
}
