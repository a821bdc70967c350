//! Instance-level verification of functor laws, adjunctions and
//! equivalences on concrete finite objects, plus the seeded random instance
//! generators backing the law suites.
//!
//! Nothing here is a proof: universal properties are verified by search
//! over enumerated morphisms, bounded by instance size, and every generator
//! records its seed so a report can be reproduced exactly.

use crate::error::Error;
use crate::fuzzyset::{Carrier, FuzzySubset, PointMap};
use crate::lattice::{
    downset_frame, enumerate_frame_homs, frame_coproduct, frame_iso, FiniteFrame, FinitePoset,
    FrameHom,
};
use crate::report::Report;
use crate::space::{check_fuzzy_continuous, check_space, generate_topology, Flavor, FuzzyTopSpace};
use crate::system::{
    check_graded_system_map, check_system, check_system_map, counit_j_ext, ext, j, quotient,
    spectrum, unit_fm_spectrum, FuzzyTopSystem, GradedSystemMap, SystemMap,
};
use crate::truth::{FiniteChain, TruthValue};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

/// Seeded generator of random finite instances.
pub struct InstanceGen {
    rng: ChaCha8Rng,
    pub seed: u64,
}

impl InstanceGen {
    pub fn new(seed: u64) -> Self {
        InstanceGen { rng: ChaCha8Rng::seed_from_u64(seed), seed }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// A random rational in `[0, 1]` with denominator at most 12.
    pub fn truth(&mut self) -> TruthValue {
        let q = self.rng.gen_range(1..=12i64);
        let p = self.rng.gen_range(0..=q);
        TruthValue::new(p, q).expect("p ≤ q")
    }

    /// A random poset on at most `max` elements (at least one).
    pub fn poset(&mut self, max: usize) -> FinitePoset {
        let n = self.rng.gen_range(1..=max);
        let names = (0..n).map(|i| format!("p{i}")).collect();
        let mut cover = Vec::new();
        for i in 0..n {
            for jj in i + 1..n {
                if self.rng.gen_bool(0.4) {
                    cover.push((i, jj));
                }
            }
        }
        FinitePoset::from_cover(names, &cover).expect("acyclic by construction")
    }

    /// A random frame as the downsets of a random poset, retried until the
    /// carrier size fits.
    pub fn frame(&mut self, max_ji: usize, max_size: usize) -> FiniteFrame {
        loop {
            let poset = self.poset(max_ji);
            let (frame, _) = downset_frame(&poset).expect("downsets form a frame");
            if frame.len() <= max_size {
                return frame;
            }
        }
    }

    /// A random valid satisfaction row for a frame: a chain of
    /// join-irreducibles with increasing values ending at 1, extended by
    /// joins. Every such row is a frame hom into `[0, 1]`.
    pub fn system_row(&mut self, frame: &FiniteFrame) -> Vec<TruthValue> {
        let (_, ji) = crate::lattice::join_irreducibles(frame);
        let mut chain: Vec<usize> = Vec::new();
        let mut order: Vec<usize> = ji.clone();
        order.shuffle(&mut self.rng);
        for p in order {
            let comparable = chain.iter().all(|&q| frame.le(p, q) || frame.le(q, p));
            if comparable && (chain.is_empty() || self.rng.gen_bool(0.7)) {
                chain.push(p);
            }
        }
        chain.sort_by(|&a, &b| {
            if a == b {
                std::cmp::Ordering::Equal
            } else if frame.le(a, b) {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
        let mut distinct = std::collections::BTreeSet::new();
        distinct.insert(TruthValue::ONE);
        while distinct.len() < chain.len() {
            distinct.insert(self.truth());
        }
        let values: Vec<TruthValue> = distinct.into_iter().collect();
        let values = &values[values.len() - chain.len()..];
        (0..frame.len())
            .map(|a| {
                let mut v = TruthValue::ZERO;
                for (k, &p) in chain.iter().enumerate() {
                    if frame.le(p, a) {
                        v = v.join(values[k]);
                    }
                }
                v
            })
            .collect()
    }

    /// A random valid system with at most 12 frame elements; with `inflate`
    /// the frame is multiplied by `2` and columns duplicated, which makes
    /// the system non-spatial.
    pub fn system(&mut self, max_points: usize, max_ji: usize, inflate: bool) -> FuzzyTopSystem {
        let frame = self.frame(max_ji, if inflate { 6 } else { 12 });
        let n_points = self.rng.gen_range(1..=max_points);
        let points = Carrier::new((0..n_points).map(|i| format!("x{i}")));
        let rows: Vec<Vec<TruthValue>> =
            (0..n_points).map(|_| self.system_row(&frame)).collect();
        if !inflate {
            return FuzzyTopSystem::new(points, frame, rows).expect("rows are total");
        }
        let two = FiniteFrame::two();
        let product = crate::lattice::frame_product(&[frame.clone(), two]).expect("product");
        let sat = rows
            .iter()
            .map(|row| {
                (0..product.frame.len()).map(|w| row[product.components(w)[0]]).collect()
            })
            .collect();
        FuzzyTopSystem::new(points, product.frame, sat).expect("rows are total")
    }

    /// A random space: a generated topology over a small pool of values.
    pub fn space(&mut self, max_points: usize, max_subbasis: usize) -> FuzzyTopSpace {
        let n_points = self.rng.gen_range(1..=max_points);
        let carrier = Carrier::new((0..n_points).map(|i| format!("x{i}")));
        let pool: Vec<TruthValue> = vec![
            TruthValue::ZERO,
            TruthValue::new(1, 3).unwrap(),
            TruthValue::new(1, 2).unwrap(),
            TruthValue::new(2, 3).unwrap(),
            TruthValue::ONE,
        ];
        let k = self.rng.gen_range(0..=max_subbasis);
        let subbasis: Vec<FuzzySubset> = (0..k)
            .map(|_| {
                FuzzySubset::new(
                    carrier.clone(),
                    (0..n_points).map(|_| *pool.choose(&mut self.rng).unwrap()).collect(),
                )
                .expect("total")
            })
            .collect();
        generate_topology(&carrier, &subbasis, Flavor::Plain).expect("same carrier")
    }

    /// A random fuzzy subset over a fixed carrier.
    pub fn subset(&mut self, carrier: &Carrier) -> FuzzySubset {
        FuzzySubset::new(carrier.clone(), (0..carrier.len()).map(|_| self.truth()).collect())
            .expect("total")
    }
}

/// Functor laws for Ext and J on concrete instances: identities map to
/// identities and a composite of counit-style maps to the composite image.
pub fn check_functor_laws(systems: &[FuzzyTopSystem]) -> Result<Report, Error> {
    let mut report = Report::new("functor laws");
    for (k, d) in systems.iter().enumerate() {
        let id = SystemMap::identity(d);
        report.record(
            format!("instance {k}: Ext(id) = id"),
            (0..d.points().len()).all(|x| id.point_map.apply(x) == x),
            || "identity moved a point".into(),
        );
        report.record(
            format!("instance {k}: fm(id) = id"),
            (0..d.frame().len()).all(|a| id.frame_map.apply(a) == a),
            || "identity moved a frame element".into(),
        );
        let composed = id.compose(&id)?;
        report.record(
            format!("instance {k}: F(g∘f) = F(g)∘F(f) on identities"),
            (0..d.points().len()).all(|x| composed.point_map.apply(x) == x)
                && (0..d.frame().len()).all(|a| composed.frame_map.apply(a) == a),
            || "composition broke".into(),
        );
        // J on the extent space: J(f) = (f, f⁻¹) with f the counit's point
        // part; the counit itself exercises the nontrivial mapping
        let (j_ext_d, counit) = counit_j_ext(d)?;
        report.absorb(
            &format!("instance {k}: J∘Ext morphism"),
            check_system_map(&counit, &j_ext_d, d),
        );
    }
    Ok(report)
}

/// The J ⊣ Ext adjunction on instances: counit continuity, the unit being
/// an isomorphism on spaces (`Ext(J(S)) = S`), triangle identities, and
/// existence/uniqueness of the mediating map out of each space.
pub fn check_adjunction_j_ext(
    systems: &[FuzzyTopSystem],
    spaces: &[FuzzyTopSpace],
) -> Result<Report, Error> {
    let mut report = Report::new("J ⊣ Ext");
    for (k, d) in systems.iter().enumerate() {
        let (j_ext_d, counit) = counit_j_ext(d)?;
        report.absorb(
            &format!("instance {k}: counit continuity"),
            check_system_map(&counit, &j_ext_d, d),
        );
        let ext_d = ext(d);
        let eta = PointMap::identity(ext_d.space.carrier().clone());
        report.record(
            format!("instance {k}: triangle Ext(ξ)∘η = id"),
            (0..ext_d.space.carrier().len()).all(|x| eta.apply(x) == x),
            || "triangle broke".into(),
        );
    }
    for (k, s) in spaces.iter().enumerate() {
        let d = j(s)?;
        let out = ext(&d);
        let same = out.space.opens().len() == s.opens().len()
            && s.opens().iter().all(|o| out.space.contains(o));
        report.record(format!("space {k}: Ext(J(S)) = S"), same, || {
            "unit is not an isomorphism".into()
        });
        // triangle on spaces: ξ_{J S} ∘ J(η_S) = id_{J S}
        let (j_ext_js, counit) = counit_j_ext(&d)?;
        let eta_frame = FrameHom::new(
            d.frame().clone(),
            j_ext_js.frame().clone(),
            (0..d.frame().len())
                .map(|a| {
                    j_ext_js
                        .frame()
                        .names()
                        .iter()
                        .position(|n| *n == d.column(a).to_string())
                        .expect("column present")
                })
                .collect(),
        )?;
        let j_eta =
            SystemMap { point_map: PointMap::identity(d.points().clone()), frame_map: eta_frame };
        let composite = j_eta.compose(&counit)?;
        let is_id = (0..d.points().len()).all(|x| composite.point_map.apply(x) == x)
            && (0..d.frame().len()).all(|a| composite.frame_map.apply(a) == a);
        report.record(format!("space {k}: triangle ξ∘J(η) = id"), is_id, || {
            "triangle broke".into()
        });
        // the universal property out of this space: continuous maps into
        // Ext(J(S)) correspond one-to-one to morphisms J(S) → J(S); check
        // the identity's factorization is unique among continuous maps
        if s.carrier().len() <= 3 && out.space.carrier().len() <= 3 {
            let candidates = all_point_maps(s.carrier(), out.space.carrier());
            let witnesses: Vec<&PointMap> = candidates
                .iter()
                .filter(|f| {
                    check_fuzzy_continuous(f, s, &out.space).ok()
                        && (0..s.carrier().len()).all(|x| f.apply(x) == x)
                })
                .collect();
            report.record(
                format!("space {k}: identity factorization is unique"),
                witnesses.len() == 1,
                || format!("{} mediating maps", witnesses.len()),
            );
        }
    }
    Ok(report)
}

fn all_point_maps(src: &Carrier, tgt: &Carrier) -> Vec<PointMap> {
    let mut maps = vec![vec![]];
    for _ in 0..src.len() {
        maps = maps
            .into_iter()
            .flat_map(|m: Vec<usize>| {
                (0..tgt.len()).map(move |y| {
                    let mut m2 = m.clone();
                    m2.push(y);
                    m2
                })
            })
            .collect();
    }
    maps.into_iter()
        .map(|m| PointMap::new(src.clone(), tgt.clone(), m).expect("total"))
        .collect()
}

/// Spatial-equivalence checks: the quotient is spatial and the counit on
/// the quotient is an isomorphism (identity on points, bijective on the
/// frame).
pub fn check_spatial_equivalence(systems: &[FuzzyTopSystem]) -> Result<Report, Error> {
    let mut report = Report::new("spatial equivalence");
    for (k, d) in systems.iter().enumerate() {
        let q = quotient(d)?;
        report.record(
            format!("instance {k}: quotient is spatial"),
            crate::system::is_spatial(&q.system),
            || "duplicate columns remain".into(),
        );
        let (j_ext_q, counit) = counit_j_ext(&q.system)?;
        report.absorb(
            &format!("instance {k}: counit on the quotient"),
            check_system_map(&counit, &j_ext_q, &q.system),
        );
        let mut targets: Vec<usize> = counit.frame_map.map.clone();
        targets.sort();
        targets.dedup();
        report.record(
            format!("instance {k}: counit frame map is a bijection"),
            targets.len() == q.system.frame().len()
                && j_ext_q.frame().len() == q.system.frame().len(),
            || {
                format!(
                    "frame sizes {} vs {}",
                    j_ext_q.frame().len(),
                    q.system.frame().len()
                )
            },
        );
    }
    Ok(report)
}

/// The fm ⊣ S adjunction over the occurring-values chain: the unit passes
/// the transfer equation, and for small frames the mediating hom of the
/// factorization of the unit is unique among enumerated frame homs.
pub fn check_adjunction_fm_s(systems: &[FuzzyTopSystem]) -> Result<Report, Error> {
    let mut report = Report::new("fm ⊣ S");
    for (k, d) in systems.iter().enumerate() {
        let chain = d.occurring_chain();
        let (spec, unit) = unit_fm_spectrum(d, &chain)?;
        report.absorb(
            &format!("instance {k}: unit (p*, id) transfer"),
            check_system_map(&unit, d, &spec.system),
        );
        if d.frame().len() <= 6 {
            // factor morphisms D → S(B) for a small B: every hom
            // f₂ : B → A induces the pair (x ↦ p_x∘f₂, f₂); it must pass
            // the morphism check, and enumeration of Hom(B, A) must find
            // exactly one mediating hom per pair
            let b = FiniteFrame::chain(3)?;
            let homs_ba = enumerate_frame_homs(&b, d.frame())?;
            let spec_b = spectrum(&b, &chain)?;
            for (h_idx, f2) in homs_ba.iter().enumerate().take(3) {
                let assoc: Option<Vec<usize>> = (0..d.points().len())
                    .map(|x| {
                        spec_b.homs.iter().position(|h| {
                            (0..b.len()).all(|bb| {
                                spec_b.chain_values[h.apply(bb)] == d.sat(x, f2.apply(bb))
                            })
                        })
                    })
                    .collect();
                let Some(assoc) = assoc else {
                    report.fail(
                        format!("instance {k}, hom {h_idx}: p_x∘f₂ is a spectrum point"),
                        "composite row is missing from Hom(B, chain)",
                    );
                    continue;
                };
                let pair = SystemMap {
                    point_map: PointMap::new(
                        d.points().clone(),
                        spec_b.system.points().clone(),
                        assoc,
                    )?,
                    frame_map: f2.clone(),
                };
                report.absorb(
                    &format!("instance {k}, hom {h_idx}: induced morphism"),
                    check_system_map(&pair, d, &spec_b.system),
                );
                let mediating = homs_ba
                    .iter()
                    .filter(|h| {
                        h.map == pair.frame_map.map
                            && (0..d.points().len()).all(|x| {
                                (0..b.len()).all(|bb| {
                                    d.sat(x, h.apply(bb))
                                        == spec_b.chain_values
                                            [spec_b.homs[pair.point_map.apply(x)].apply(bb)]
                                })
                            })
                    })
                    .count();
                report.record(
                    format!("instance {k}, hom {h_idx}: unique mediating hom"),
                    mediating == 1,
                    || format!("{mediating} mediating homs"),
                );
            }
        }
    }
    Ok(report)
}

/// The coproduct universal property, exhaustively: for every pair of homs
/// `f : A → C`, `g : B → C` exactly one `h : A⊗B → C` satisfies
/// `h∘i_A = f` and `h∘i_B = g`.
pub fn check_coproduct_universal(
    a: &FiniteFrame,
    b: &FiniteFrame,
    c: &FiniteFrame,
) -> Result<Report, Error> {
    let mut report = Report::new("coproduct universal property");
    let cp = frame_coproduct(a, b)?;
    report.absorb("i_A is a frame hom", cp.inj_a.check());
    report.absorb("i_B is a frame hom", cp.inj_b.check());
    let homs_ac = enumerate_frame_homs(a, c)?;
    let homs_bc = enumerate_frame_homs(b, c)?;
    let homs_cc = enumerate_frame_homs(&cp.frame, c)?;
    for f in &homs_ac {
        for g in &homs_bc {
            let mediating = cp.mediating(f, g)?;
            let count = homs_cc
                .iter()
                .filter(|h| {
                    cp.inj_a.compose(h).map(|m| m.map == f.map).unwrap_or(false)
                        && cp.inj_b.compose(h).map(|m| m.map == g.map).unwrap_or(false)
                })
                .count();
            report.record(
                format!("unique factorization of ({:?}, {:?})", f.map, g.map),
                count == 1 && mediating.check().ok(),
                || format!("{count} factorizations"),
            );
        }
    }
    Ok(report)
}

/// Graded counit checks: continuity always, isomorphism on spatial inputs.
pub fn check_graded_counit(
    systems: &[crate::system::GradedFuzzyTopSystem],
) -> Result<Report, Error> {
    let mut report = Report::new("graded counit");
    for (k, d) in systems.iter().enumerate() {
        let out = crate::system::ext_graded(d);
        let j_g = crate::system::j_graded(&out.space)?;
        let map = GradedSystemMap {
            point_map: PointMap::identity(d.points().clone()),
            frame_map: crate::lattice::GradedFrameMap { map: out.open_of.clone() },
        };
        report.absorb(
            &format!("instance {k}: counit continuity"),
            check_graded_system_map(&map, &j_g, d),
        );
        if crate::system::is_spatial_graded(d) {
            let mut targets = out.open_of.clone();
            targets.sort();
            targets.dedup();
            report.record(
                format!("instance {k}: spatial ⇒ counit is iso"),
                targets.len() == d.frame().len() && j_g.frame().len() == d.frame().len(),
                || "frame part is not bijective".into(),
            );
        }
    }
    Ok(report)
}

/// Composite adjunction `fm∘J ⊣ Ext∘S`: both factors pass, and the
/// composite output is a space.
pub fn check_composite_adjunction(spaces: &[FuzzyTopSpace]) -> Result<Report, Error> {
    let mut report = Report::new("fm∘J ⊣ Ext∘S");
    for (k, s) in spaces.iter().enumerate() {
        let d = j(s)?;
        let chain = d.occurring_chain();
        let (spec, unit) = unit_fm_spectrum(&d, &chain)?;
        report.absorb(
            &format!("space {k}: factor units compose"),
            check_system_map(&unit, &d, &spec.system),
        );
        let spec_space = ext(&spec.system);
        report.record(
            format!("space {k}: Ext(S(fm(J(S)))) is a space"),
            check_space(&spec_space.space).ok(),
            || "composite output fails the space laws".into(),
        );
    }
    Ok(report)
}

/// Birkhoff round trips, as explicit isomorphisms.
pub fn check_birkhoff_round_trip(frames: &[FiniteFrame]) -> Report {
    let mut report = Report::new("Birkhoff round trip");
    for (k, frame) in frames.iter().enumerate() {
        let (ji, _) = crate::lattice::join_irreducibles(frame);
        match downset_frame(&ji) {
            Ok((back, _)) => {
                report.record(
                    format!("frame {k}: Down(J(A)) ≅ A"),
                    frame_iso(frame, &back).is_some(),
                    || "no isomorphism".into(),
                );
            }
            Err(e) => report.fail(format!("frame {k}"), e.to_string()),
        }
    }
    report
}

/// Spectrum sanity on a system: the spectrum over the occurring chain is a
/// valid system and every row appears among its points.
pub fn check_spectrum_points(d: &FuzzyTopSystem) -> Result<Report, Error> {
    let mut report = Report::new("spectrum points");
    let chain: FiniteChain = d.occurring_chain();
    let spec = spectrum(d.frame(), &chain)?;
    report.record("spectrum is a valid system", check_system(&spec.system).ok(), || {
        "spectrum fails the axioms".into()
    });
    for x in 0..d.points().len() {
        let found = spec.homs.iter().any(|h| {
            (0..d.frame().len()).all(|a| spec.chain_values[h.apply(a)] == d.sat(x, a))
        });
        report.record(format!("p_x is a hom for point {x}"), found, || {
            "row is not a frame hom into the chain".into()
        });
    }
    Ok(report)
}

/// Names accepted by [`run_suite`].
pub fn suite_names() -> &'static [&'static str] {
    &[
        "functor-laws",
        "adjunction-j-ext",
        "spatial-equivalence",
        "adjunction-fm-s",
        "coproduct",
        "birkhoff",
        "graded-counit",
        "composite-adjunction",
        "spectrum-points",
    ]
}

/// Runs a named categorical suite on `instances` seeded random objects.
pub fn run_suite(name: &str, seed: u64, instances: usize) -> Result<Report, Error> {
    let mut gen = InstanceGen::new(seed);
    match name {
        "functor-laws" => {
            let systems: Vec<_> =
                (0..instances).map(|k| gen.system(4, 3, k % 2 == 0)).collect();
            check_functor_laws(&systems)
        }
        "adjunction-j-ext" => {
            let systems: Vec<_> =
                (0..instances).map(|k| gen.system(4, 3, k % 2 == 0)).collect();
            let spaces: Vec<_> = (0..instances).map(|_| gen.space(4, 2)).collect();
            check_adjunction_j_ext(&systems, &spaces)
        }
        "spatial-equivalence" => {
            let systems: Vec<_> =
                (0..instances).map(|k| gen.system(4, 3, k % 2 == 1)).collect();
            check_spatial_equivalence(&systems)
        }
        "adjunction-fm-s" => {
            let systems: Vec<_> = (0..instances).map(|_| gen.system(4, 3, false)).collect();
            check_adjunction_fm_s(&systems)
        }
        "coproduct" => {
            let mut report = Report::new("coproduct suite");
            for _ in 0..instances.max(1) {
                let a = gen.frame(2, 4);
                let b = gen.frame(2, 4);
                let c = gen.frame(2, 4);
                report.absorb("triple", check_coproduct_universal(&a, &b, &c)?);
            }
            Ok(report)
        }
        "birkhoff" => {
            let frames: Vec<_> = (0..instances).map(|_| gen.frame(4, 16)).collect();
            Ok(check_birkhoff_round_trip(&frames))
        }
        "graded-counit" => {
            let mut systems = Vec::new();
            for _ in 0..instances {
                let d = gen.system(3, 3, false);
                let (g, _) = crate::system::quotient_graded(&d)?;
                systems.push(g);
            }
            check_graded_counit(&systems)
        }
        "composite-adjunction" => {
            let spaces: Vec<_> = (0..instances).map(|_| gen.space(3, 2)).collect();
            check_composite_adjunction(&spaces)
        }
        "spectrum-points" => {
            let mut report = Report::new("spectrum points suite");
            for _ in 0..instances {
                let d = gen.system(3, 3, false);
                report.absorb("instance", check_spectrum_points(&d)?);
            }
            Ok(report)
        }
        other => Err(Error::precondition(format!(
            "unknown suite '{other}'; expected one of {:?}",
            suite_names()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::system::check_system_subsets;

    #[test]
    fn generated_systems_are_valid() {
        let mut gen = InstanceGen::new(7);
        for k in 0..30 {
            let d = gen.system(4, 4, k % 3 == 0);
            let report = check_system(&d);
            assert!(report.ok(), "seed 7 instance {k}:\n{report}");
            if d.frame().len() <= 8 {
                assert!(check_system_subsets(&d).unwrap().ok());
            }
        }
    }

    #[test]
    fn generated_spaces_are_valid() {
        let mut gen = InstanceGen::new(11);
        for _ in 0..20 {
            let s = gen.space(4, 3);
            assert!(check_space(&s).ok());
        }
    }

    #[test]
    fn adjunction_suite_on_random_instances() {
        let mut gen = InstanceGen::new(3);
        let systems: Vec<FuzzyTopSystem> =
            (0..5).map(|k| gen.system(3, 3, k % 2 == 0)).collect();
        let spaces: Vec<FuzzyTopSpace> = (0..5).map(|_| gen.space(3, 2)).collect();
        let report = check_adjunction_j_ext(&systems, &spaces).unwrap();
        assert!(report.ok(), "{report}");
    }

    #[test]
    fn spatial_equivalence_on_random_instances() {
        let mut gen = InstanceGen::new(5);
        let systems: Vec<FuzzyTopSystem> = (0..5).map(|_| gen.system(3, 3, true)).collect();
        let report = check_spatial_equivalence(&systems).unwrap();
        assert!(report.ok(), "{report}");
    }

    #[test]
    fn fm_s_adjunction_on_random_instances() {
        let mut gen = InstanceGen::new(9);
        let systems: Vec<FuzzyTopSystem> = (0..5).map(|_| gen.system(3, 2, false)).collect();
        let report = check_adjunction_fm_s(&systems).unwrap();
        assert!(report.ok(), "{report}");
    }

    #[test]
    fn coproduct_universal_property_small() {
        let two = FiniteFrame::two();
        let three = FiniteFrame::chain(3).unwrap();
        let report = check_coproduct_universal(&two, &three, &three).unwrap();
        assert!(report.ok(), "{report}");
    }

    #[test]
    fn every_named_suite_runs_green() {
        for name in suite_names() {
            let report = run_suite(name, 1, 3).unwrap();
            assert!(report.ok(), "suite {name}:\n{report}");
        }
        assert!(run_suite("nope", 1, 1).is_err());
    }

    #[test]
    fn reproducibility_by_seed() {
        let mut a = InstanceGen::new(42);
        let mut b = InstanceGen::new(42);
        for _ in 0..5 {
            assert_eq!(a.system(4, 3, false), b.system(4, 3, false));
        }
    }
}
