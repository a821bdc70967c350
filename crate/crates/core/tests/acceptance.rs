//! The acceptance gate: sixteen law suites with pinned instance counts and
//! zero-tolerance rational checks. Each test prints one pass/fail line.
//!
//! Run with `cargo test -p ftsys-core --test acceptance` (add
//! `-- --nocapture` to see the per-criterion lines).

use ftsys_core::cat::{
    check_adjunction_fm_s, check_adjunction_j_ext, check_coproduct_universal,
    check_spatial_equivalence, InstanceGen,
};
use ftsys_core::fuzzyset::{Carrier, FuzzySubset};
use ftsys_core::lattice::{downset_frame, FiniteFrame, FinitePoset};
use ftsys_core::logic::{
    check_derivation, check_metatheorems, check_rule_soundness, check_theory_lemmas,
    classical_sat, environments_over, grade_sat, lindenbaum, sequent_grade, theory_from_space,
    Derivation, Environment, FnTable, Formula, Interpretation, MetaSample, PredTable, RuleApp,
    RuleInstance, Sequent, Term,
};
use ftsys_core::mvn::{
    bijection_check, check_fbsys, check_lnc, counit_ext_b, enumerate_prime_filters, s_b,
    unit_s_b, FBSysN, LnAlgebra, RawTables,
};
use ftsys_core::space::{
    check_space, compact, is_boolean_space, kolmogorov, zero_dimensional, Flavor, FuzzyTopSpace,
};
use ftsys_core::system::{
    check_graded_system, check_system, check_system_subsets, ext_graded, is_spatial_graded,
    j, system_product, system_sum, product_decomposition_independent,
};
use ftsys_core::truth::{inf_family, make_chain, sup_family, TruthValue};
use rand::prelude::*;

fn tv(p: i64, q: i64) -> TruthValue {
    TruthValue::new(p, q).unwrap()
}

fn verdict(name: &str, ok: bool) {
    println!("{} criterion {name}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {name} failed");
}

/// 1. Gödel-arrow laws pga(1)–pga(8) on 10,000 random rational triples and
/// on every triple over chain(5). Exact.
#[test]
fn criterion_01_godel_arrow_laws() {
    let mut gen = InstanceGen::new(0xA1);
    let mut triples: Vec<(TruthValue, TruthValue, TruthValue)> =
        (0..10_000).map(|_| (gen.truth(), gen.truth(), gen.truth())).collect();
    let five = make_chain(5).unwrap();
    for &a in five.elements() {
        for &b in five.elements() {
            for &c in five.elements() {
                triples.push((a, b, c));
            }
        }
    }
    let mut ok = true;
    for &(a, b, c) in &triples {
        let ab = a.godel_arrow(b);
        let bc = b.godel_arrow(c);
        let ac = a.godel_arrow(c);
        ok &= a.godel_arrow(a).is_one(); // pga 1
        ok &= ab.meet(bc) <= ac; // pga 2
        if a <= b {
            ok &= b.godel_arrow(c) <= a.godel_arrow(c); // pga 3
            ok &= c.godel_arrow(a) <= c.godel_arrow(b); // pga 4
        }
        ok &= ab.meet(a.godel_arrow(c)) == a.godel_arrow(b.meet(c)); // pga 5
        // pga 6 on the family {a, b} and on the singleton {a}
        ok &= inf_family([a.godel_arrow(c), b.godel_arrow(c)])
            == sup_family([a, b]).godel_arrow(c);
        ok &= a.godel_arrow(c) == sup_family([a]).godel_arrow(c);
        ok &= (a <= b) == ab.is_one(); // pga 7
        ok &= a.meet(ab) <= b; // pga 8
    }
    verdict("1 (Gödel arrow, 10125 triples)", ok);
}

/// 2. Graded-inclusion laws gt1–gt10 on 1,000 random fuzzy-subset triples
/// over carriers of size ≤ 6. Exact.
#[test]
fn criterion_02_graded_inclusion_laws() {
    let mut gen = InstanceGen::new(0xA2);
    let mut ok = true;
    for _ in 0..1_000 {
        let n = gen.rng().gen_range(1..=6);
        let carrier = Carrier::new((0..n).map(|i| format!("x{i}")));
        let t1 = gen.subset(&carrier);
        let t2 = gen.subset(&carrier);
        let t3 = gen.subset(&carrier);
        let full = FuzzySubset::full(carrier.clone());
        let gr = |a: &FuzzySubset, b: &FuzzySubset| a.graded_inclusion(b).unwrap();
        // gt1 reflexivity
        ok &= gr(&t1, &t1).is_one();
        // gt2 antisymmetry at grade 1
        if gr(&t1, &t2).is_one() && gr(&t2, &t1).is_one() {
            ok &= t1 == t2;
        }
        // gt3 transitivity by min
        ok &= gr(&t1, &t2).meet(gr(&t2, &t3)) <= gr(&t1, &t3);
        // gt4 intersection bounds
        let meet12 = t1.intersection(&t2).unwrap();
        ok &= gr(&meet12, &t1).is_one() && gr(&meet12, &t2).is_one();
        // gt5 unit
        ok &= gr(&t1, &full).is_one();
        // gt6 meet characterization
        ok &= gr(&t1, &t2).meet(gr(&t1, &t3)) == gr(&t1, &t2.intersection(&t3).unwrap());
        // gt7 join bound
        let join12 = t1.union_with(&t2).unwrap();
        ok &= gr(&t1, &join12).is_one() && gr(&t2, &join12).is_one();
        // gt8 sup-to-inf law on the family {t1, t2}
        ok &= inf_family([gr(&t1, &t3), gr(&t2, &t3)]) == gr(&join12, &t3);
        // gt9 frame distributivity at grade 1
        let lhs = t1.intersection(&t2.union_with(&t3).unwrap()).unwrap();
        let rhs = t1
            .intersection(&t2)
            .unwrap()
            .union_with(&t1.intersection(&t3).unwrap())
            .unwrap();
        ok &= gr(&lhs, &rhs).is_one();
        // gt10 pointwise bound
        for x in 0..n {
            ok &= t1.get(x).meet(gr(&t1, &t2)) <= t2.get(x);
        }
    }
    verdict("2 (graded inclusion, 1000 triples)", ok);
}

/// 3. System axioms: 200 random systems with |X| ≤ 5, |A| ≤ 12 pass the
/// binary+empty clauses, and the exhaustive subset clauses whenever
/// |A| ≤ 8. Exact.
#[test]
fn criterion_03_system_axioms() {
    let mut gen = InstanceGen::new(0xA3);
    let mut ok = true;
    let mut exhaustive = 0;
    for k in 0..200 {
        let d = gen.system(5, 4, k % 4 == 0);
        ok &= d.points().len() <= 5 && d.frame().len() <= 12;
        ok &= check_system(&d).ok();
        if d.frame().len() <= 8 {
            ok &= check_system_subsets(&d).unwrap().ok();
            exhaustive += 1;
        }
    }
    verdict(
        &format!("3 (system axioms, 200 systems, {exhaustive} exhaustive subset checks)"),
        ok && exhaustive > 0,
    );
}

/// 4. J ⊣ Ext: counit continuity and triangle identities on 100 random
/// systems; Ext(J(S)) equals S exactly on 100 random spaces.
#[test]
fn criterion_04_adjunction_j_ext() {
    let mut gen = InstanceGen::new(0xA4);
    let systems: Vec<_> = (0..100).map(|k| gen.system(4, 3, k % 2 == 0)).collect();
    let spaces: Vec<_> = (0..100).map(|_| gen.space(4, 2)).collect();
    let report = check_adjunction_j_ext(&systems, &spaces).unwrap();
    if !report.ok() {
        eprintln!("{report}");
    }
    verdict("4 (J ⊣ Ext, 100 systems + 100 spaces)", report.ok());
}

/// 5. Spatial equivalence: quotients of 100 random systems are spatial and
/// the counit realizes the isomorphism J(Ext(quotient)) ≅ quotient.
#[test]
fn criterion_05_spatial_equivalence() {
    let mut gen = InstanceGen::new(0xA5);
    let systems: Vec<_> = (0..100).map(|k| gen.system(4, 3, k % 2 == 1)).collect();
    let report = check_spatial_equivalence(&systems).unwrap();
    if !report.ok() {
        eprintln!("{report}");
    }
    verdict("5 (spatial equivalence, 100 systems)", report.ok());
}

/// 6. fm ⊣ S: the unit (p*, id) passes the transfer equation on 100
/// instances over the occurring-values chain; mediating-morphism
/// uniqueness is verified by hom enumeration for |A| ≤ 6.
#[test]
fn criterion_06_adjunction_fm_s() {
    let mut gen = InstanceGen::new(0xA6);
    let systems: Vec<_> = (0..100).map(|_| gen.system(4, 3, false)).collect();
    let report = check_adjunction_fm_s(&systems).unwrap();
    if !report.ok() {
        eprintln!("{report}");
    }
    verdict("6 (fm ⊣ S, 100 instances)", report.ok());
}

/// 7. Frame coproduct: universal property (existence and uniqueness of the
/// mediating hom) over every frame triple with carriers ≤ 4, exhaustively;
/// and |3-chain ⊗ 3-chain| = 6 via the downset oracle.
#[test]
fn criterion_07_frame_coproduct() {
    // up to isomorphism, these are all frames with at most 4 elements
    let shapes: Vec<FiniteFrame> = vec![
        FiniteFrame::two(),
        FiniteFrame::chain(3).unwrap(),
        FiniteFrame::chain(4).unwrap(),
        ftsys_core::lattice::frame_product(&[FiniteFrame::two(), FiniteFrame::two()])
            .unwrap()
            .frame,
    ];
    let mut ok = true;
    for a in &shapes {
        for b in &shapes {
            for c in &shapes {
                let report = check_coproduct_universal(a, b, c).unwrap();
                if !report.ok() {
                    eprintln!("{report}");
                }
                ok &= report.ok();
            }
        }
    }
    // the downset oracle: the dual poset of 3⊗3 is the 2×2 grid, whose
    // downsets are counted directly
    let grid = FinitePoset::chain(2).product(&FinitePoset::chain(2));
    let (oracle_frame, _) = downset_frame(&grid).unwrap();
    let three = FiniteFrame::chain(3).unwrap();
    let cp = ftsys_core::lattice::frame_coproduct(&three, &three).unwrap();
    ok &= cp.frame.len() == 6 && oracle_frame.len() == 6;
    verdict("7 (frame coproduct, 64 exhaustive triples + 3⊗3 size)", ok);
}

/// 8. Sums and products of 100 random pairs pass the system axioms; the
/// single-tensor grade law holds entrywise and the product grades are
/// decomposition-independent.
#[test]
fn criterion_08_sum_product() {
    let mut gen = InstanceGen::new(0xA8);
    let mut ok = true;
    for k in 0..100 {
        let d = gen.system(3, 3, k % 3 == 0);
        let e = gen.system(3, 2, false);
        let (sum, _) = system_sum(&[d.clone(), e.clone()]).unwrap();
        ok &= check_system(&sum).ok();
        let (prod, cp) = system_product(&d, &e).unwrap();
        ok &= check_system(&prod).ok();
        for x in 0..d.points().len() {
            for y in 0..e.points().len() {
                let z = x * e.points().len() + y;
                for a in 0..d.frame().len() {
                    for b in 0..e.frame().len() {
                        ok &= prod.sat(z, cp.tensor(a, b)) == d.sat(x, a).meet(e.sat(y, b));
                    }
                }
            }
        }
        ok &= product_decomposition_independent(&prod, &cp, &d, &e);
    }
    verdict("8 (sums and products, 100 pairs)", ok);
}

/// 9. MVₙ axioms for chain algebras n = 2..6, exhaustively; the idempotent,
/// T₁-distribution and T-detection laws on every subalgebra of 3̄^X with
/// |X| ≤ 2.
#[test]
fn criterion_09_mvn_axioms() {
    let mut ok = true;
    for n in 2..=6 {
        let a = LnAlgebra::chain_algebra(n).unwrap();
        ok &= check_lnc(&RawTables::of(&a)).ok();
    }
    // all subalgebras of 3̄^X arise as closures of generator subsets
    for width in 1..=2usize {
        let points: Vec<String> = (0..width).map(|i| format!("x{i}")).collect();
        let size = 3usize.pow(width as u32);
        let all_maps: Vec<Vec<usize>> = (0..size)
            .map(|code| {
                let mut c = code;
                (0..width)
                    .map(|_| {
                        let v = c % 3;
                        c /= 3;
                        v
                    })
                    .collect()
            })
            .collect();
        let mut seen: Vec<Vec<Vec<usize>>> = Vec::new();
        for mask in 0u32..(1 << size) {
            let gens: Vec<Vec<usize>> = (0..size)
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| all_maps[i].clone())
                .collect();
            let algebra = LnAlgebra::function_algebra(3, &points, &gens).unwrap();
            let mut elements = algebra.elements().to_vec();
            elements.sort();
            if seen.contains(&elements) {
                continue;
            }
            seen.push(elements);
            ok &= check_lnc(&RawTables::of(&algebra)).ok();
            let m = algebra.len();
            // idempotents multiply as meets and add as joins
            for x in 0..m {
                for y in 0..m {
                    if algebra.mul(x, x) == x && algebra.mul(y, y) == y {
                        ok &= algebra.mul(x, y) == algebra.meet(x, y);
                        ok &= algebra.add(x, y) == algebra.join(x, y);
                    }
                    // T₁ distributes over binary joins and meets
                    let t1 = |e| algebra.t_term(2, e).unwrap();
                    ok &= t1(algebra.join(x, y)) == algebra.join(t1(x), t1(y));
                    ok &= t1(algebra.meet(x, y)) == algebra.meet(t1(x), t1(y));
                    // ⋀_r (T_r(a) ↔ T_r(b)) ≤ a ↔ b
                    let iff = |p, q| {
                        algebra.meet(algebra.arrow(p, q), algebra.arrow(q, p))
                    };
                    let mut acc = algebra.one();
                    for r in 0..3 {
                        let ta = algebra.t_term(r, x).unwrap();
                        let tb = algebra.t_term(r, y).unwrap();
                        acc = algebra.meet(acc, iff(ta, tb));
                    }
                    ok &= algebra.le(acc, iff(x, y));
                }
            }
        }
        assert!(seen.len() > 1 || width == 1, "expected several subalgebras");
    }
    verdict("9 (MVₙ axioms, chains 2..6 + all subalgebras of 3̄^X)", ok);
}

/// 10. Spectrum bijection: prime filters and homs into n̄ are in mutually
/// inverse bijection, by double enumeration, on subalgebras of n̄^X for
/// n ≤ 4 and |X| ≤ 2; the unique prime filter of 3̄ is {1}.
#[test]
fn criterion_10_spectrum_bijection() {
    let mut ok = true;
    for n in 2..=4usize {
        for width in 1..=2usize {
            let points: Vec<String> = (0..width).map(|i| format!("x{i}")).collect();
            // a deterministic family of generator choices
            let gens_family: Vec<Vec<Vec<usize>>> = vec![
                vec![],
                vec![(0..width).map(|i| if i == 0 { n - 1 } else { 0 }).collect()],
                vec![(0..width).map(|i| i % n).collect()],
                vec![
                    (0..width).map(|i| if i == 0 { n - 1 } else { 0 }).collect(),
                    (0..width).map(|i| if i == 0 { 0 } else { n - 1 }).collect(),
                ],
            ];
            for gens in gens_family {
                let algebra = LnAlgebra::function_algebra(n, &points, &gens).unwrap();
                let report = bijection_check(&algebra).unwrap();
                if !report.ok() {
                    eprintln!("n={n}, width={width}:\n{report}");
                }
                ok &= report.ok();
            }
        }
    }
    let three = LnAlgebra::chain_algebra(3).unwrap();
    let primes = enumerate_prime_filters(&three);
    ok &= primes == vec![vec![three.one()]];
    verdict("10 (spectrum bijection, n ≤ 4, |X| ≤ 2)", ok);
}

fn random_fbsys(gen: &mut InstanceGen) -> FBSysN {
    loop {
        let n = gen.rng().gen_range(2..=3usize);
        let width = gen.rng().gen_range(1..=2usize);
        let points: Vec<String> = (0..width).map(|i| format!("w{i}")).collect();
        let gens: Vec<Vec<usize>> = (0..gen.rng().gen_range(0..=1))
            .map(|_| (0..width).map(|_| gen.rng().gen_range(0..n)).collect())
            .collect();
        let algebra = LnAlgebra::function_algebra(n, &points, &gens).unwrap();
        if algebra.len() > 27 {
            continue;
        }
        let homs = algebra.enumerate_homs();
        if homs.is_empty() {
            continue;
        }
        // a nonempty subset of the homs as points (distinct rows)
        let mut chosen: Vec<Vec<usize>> = homs
            .iter()
            .filter(|_| gen.rng().gen_bool(0.7))
            .cloned()
            .collect();
        if chosen.is_empty() {
            chosen.push(homs[0].clone());
        }
        if chosen.len() > 4 {
            chosen.truncate(4);
        }
        let carrier = Carrier::new((0..chosen.len()).map(|i| format!("x{i}")));
        return FBSysN::new(carrier, algebra, chosen).unwrap();
    }
}

/// 11. The extent of 50 random n̄-fuzzy Boolean systems is compact,
/// Kolmogorov and zero-dimensional; the double-dual counit and unit are
/// isomorphisms on full-spectrum instances (points = all homs into n̄),
/// the class on which the equivalence theorems apply.
#[test]
fn criterion_11_boolean_space() {
    let mut gen = InstanceGen::new(0xB1);
    let mut ok = true;
    for _ in 0..50 {
        let d = random_fbsys(&mut gen);
        ok &= check_fbsys(&d).ok();
        let space = ftsys_core::mvn::ext_b(&d).unwrap();
        ok &= check_space(&space).ok();
        ok &= compact(&space).unwrap();
        ok &= kolmogorov(&space).unwrap();
        ok &= zero_dimensional(&space).unwrap();
        ok &= is_boolean_space(&space).unwrap();
        // double duals on the full spectrum over the same algebra
        let (full, _) = s_b(d.algebra()).unwrap();
        ok &= check_fbsys(&full).ok();
        let (j_ext, counit) = counit_ext_b(&full).unwrap();
        ok &= ftsys_core::mvn::check_fbsys_map(&counit, &j_ext, &full).ok();
        ok &= j_ext.algebra().len() == full.algebra().len();
        let mut cols = counit.alg_map.clone();
        cols.sort();
        cols.dedup();
        ok &= cols.len() == full.algebra().len();
        // unit: p* is a bijection onto Hom(A, n̄)
        let (spec, unit) = unit_s_b(&full).unwrap();
        ok &= ftsys_core::mvn::check_fbsys_map(&unit, &full, &spec).ok();
        let mut pts = unit.point_map.clone();
        pts.sort();
        pts.dedup();
        ok &= pts.len() == full.points().len() && spec.points().len() == full.points().len();
    }
    verdict("11 (Boolean spaces + double duals, 50 instances)", ok);
}

fn random_interpretation(gen: &mut InstanceGen) -> Interpretation {
    use std::collections::BTreeMap;
    let size = gen.rng().gen_range(2..=4usize);
    let domain: Vec<String> = (0..size).map(|i| format!("d{i}")).collect();
    let mut constants = BTreeMap::new();
    constants.insert("c1".to_string(), gen.rng().gen_range(0..size));
    let mut functions = BTreeMap::new();
    functions.insert(
        "f".to_string(),
        FnTable { arity: 1, table: (0..size).map(|_| gen.rng().gen_range(0..size)).collect() },
    );
    let mut predicates = BTreeMap::new();
    predicates.insert(
        "p".to_string(),
        PredTable { arity: 1, table: (0..size).map(|_| gen.truth()).collect() },
    );
    predicates.insert(
        "q".to_string(),
        PredTable { arity: 1, table: (0..size).map(|_| gen.truth()).collect() },
    );
    predicates.insert(
        "r".to_string(),
        PredTable { arity: 2, table: (0..size * size).map(|_| gen.truth()).collect() },
    );
    Interpretation { domain, constants, functions, predicates }
}

fn random_term(gen: &mut InstanceGen, depth: usize) -> Term {
    let vars = ["x", "y", "z"];
    match gen.rng().gen_range(0..4) {
        0 => Term::Const("c1".into()),
        1 if depth > 0 => Term::App("f".into(), vec![random_term(gen, depth - 1)]),
        _ => Term::Var(vars[gen.rng().gen_range(0..vars.len())].into()),
    }
}

fn random_formula(gen: &mut InstanceGen, depth: usize) -> Formula {
    if depth == 0 {
        return match gen.rng().gen_range(0..5) {
            0 => Formula::Top,
            1 => Formula::Bot,
            2 => Formula::Eq(random_term(gen, 1), random_term(gen, 1)),
            3 => Formula::Pred("p".into(), vec![random_term(gen, 1)]),
            _ => Formula::Pred("q".into(), vec![random_term(gen, 1)]),
        };
    }
    match gen.rng().gen_range(0..6) {
        0 => Formula::and(random_formula(gen, depth - 1), random_formula(gen, depth - 1)),
        1 => Formula::Or(
            (0..gen.rng().gen_range(0..=3)).map(|_| random_formula(gen, depth - 1)).collect(),
        ),
        2 => {
            let vars = ["x", "y", "z"];
            Formula::exists(
                vars[gen.rng().gen_range(0..vars.len())],
                random_formula(gen, depth - 1),
            )
        }
        3 => Formula::Pred(
            "r".into(),
            vec![random_term(gen, 1), random_term(gen, 1)],
        ),
        _ => random_formula(gen, 0),
    }
}

/// 12. The nine rules of inference preserve crisp validity and satisfy
/// every graded (in)equality exactly, over 500 random samples with
/// |D| ≤ 4 and formula depth ≤ 4; plus the monotonicity of graded
/// consequence and the antitone/monotone behaviour of the sequent grade.
#[test]
fn criterion_12_rule_soundness() {
    let mut gen = InstanceGen::new(0xC2);
    let mut ok = true;
    for k in 0..500 {
        let interp = random_interpretation(&mut gen);
        let (dp, dq, dr) = (
            gen.rng().gen_range(0..=4),
            gen.rng().gen_range(0..=3),
            gen.rng().gen_range(0..=2),
        );
        let phi = random_formula(&mut gen, dp);
        let psi = random_formula(&mut gen, dq);
        let chi = random_formula(&mut gen, dr);
        let instance = match k % 13 {
            0 => RuleInstance::Identity { phi: phi.clone() },
            1 => RuleInstance::Cut { phi: phi.clone(), psi: psi.clone(), chi: chi.clone() },
            2 => RuleInstance::TopIntro { phi: phi.clone() },
            3 => RuleInstance::AndProj { phi: phi.clone(), psi: psi.clone() },
            4 => RuleInstance::AndRight {
                phi: phi.clone(),
                psi: psi.clone(),
                chi: chi.clone(),
            },
            5 => RuleInstance::JoinInj {
                family: vec![phi.clone(), psi.clone(), chi.clone()],
                index: (k / 13) % 3,
            },
            6 => RuleInstance::JoinUniv {
                family: vec![phi.clone(), psi.clone()],
                psi: chi.clone(),
            },
            7 => RuleInstance::FrameDist {
                phi: phi.clone(),
                family: vec![psi.clone(), chi.clone()],
            },
            8 => RuleInstance::EqRefl { var: "x".into() },
            9 => RuleInstance::EqSubst {
                xs: vec!["x".into(), "y".into()],
                ys: vec!["y".into(), "z".into()],
                phi: phi.clone(),
            },
            10 => RuleInstance::ExistsIntro {
                phi: phi.clone(),
                psi: psi.clone(),
                x: "x".into(),
                y: "y".into(),
            },
            11 => RuleInstance::ExistsElim {
                phi: phi.clone(),
                psi: psi.clone(),
                x: "x".into(),
                y: "y".into(),
            },
            _ => RuleInstance::Frobenius { phi: phi.clone(), psi: psi.clone(), y: "y".into() },
        };
        let report = check_rule_soundness(&interp, &[instance]).unwrap();
        if !report.ok() {
            eprintln!("sample {k}

{report}");
        }
        ok &= report.ok();
        // monotonicity of graded consequence: gr(β⊢α) ≤ gr(β∧δ⊢α)
        let g1 = sequent_grade(&phi, &chi, &interp).unwrap();
        let g2 = sequent_grade(&Formula::and(phi.clone(), psi.clone()), &chi, &interp).unwrap();
        ok &= g1 <= g2;
    }
    verdict("12 (rule soundness, 500 samples)", ok);
}

/// 13. Local determination (terms and formulas) and both substitution
/// clauses over 500 random samples.
#[test]
fn criterion_13_metatheorems() {
    let mut gen = InstanceGen::new(0xC3);
    let mut ok = true;
    for k in 0..500 {
        let interp = random_interpretation(&mut gen);
        let size = interp.size();
        let vars = ["x", "y", "z"];
        let mut env = Environment::new(0);
        let mut env_prime = Environment::new(0);
        for v in vars {
            let d = gen.rng().gen_range(0..size);
            env = env.update(v, d);
            // half the time agree, half the time diverge
            let d2 =
                if gen.rng().gen_bool(0.5) { d } else { gen.rng().gen_range(0..size) };
            env_prime = env_prime.update(v, d2);
        }
        let sample = MetaSample {
            env,
            env_prime,
            phi: {
                let d = gen.rng().gen_range(0..=3);
                random_formula(&mut gen, d)
            },
            term: random_term(&mut gen, 2),
            term_prime: random_term(&mut gen, 2),
            var: vars[k % 3].into(),
        };
        let report = check_metatheorems(&interp, &[sample]).unwrap();
        if !report.ok() {
            eprintln!("sample {k}:\n{report}");
        }
        ok &= report.ok();
    }
    verdict("13 (metatheorems, 500 samples)", ok);
}

/// 14. Two-valued reduction: with 0/1 predicates the graded evaluator
/// agrees with the independent classical oracle on 1,000 samples.
#[test]
fn criterion_14_two_valued_reduction() {
    let mut gen = InstanceGen::new(0xC4);
    let mut ok = true;
    for _ in 0..1_000 {
        let mut interp = random_interpretation(&mut gen);
        // flatten every predicate to 0/1
        for table in interp.predicates.values_mut() {
            for v in table.table.iter_mut() {
                *v = if gen.rng().gen_bool(0.5) { TruthValue::ONE } else { TruthValue::ZERO };
            }
        }
        let depth = gen.rng().gen_range(0..=4);
        let phi = random_formula(&mut gen, depth);
        let vars: Vec<String> = phi.free_vars().into_iter().collect();
        for env in environments_over(&vars, interp.size(), 0).into_iter().take(8) {
            let graded = grade_sat(&env, &phi, &interp).unwrap();
            let classical = classical_sat(&env, &phi, &interp).unwrap();
            ok &= graded.is_one() == classical && (graded.is_one() || graded.is_zero());
        }
    }
    verdict("14 (two-valued reduction, 1000 samples)", ok);
}

/// 15. Lindenbaum pipeline: outputs of 50 random theories pass the graded
/// system axioms, are spatial, and their graded extents are spaces; the
/// space theory of 50 random graded spaces satisfies the sequent laws.
#[test]
fn criterion_15_lindenbaum_pipeline() {
    let mut gen = InstanceGen::new(0xC5);
    let mut ok = true;
    for _ in 0..50 {
        let interp = random_interpretation(&mut gen);
        let formulas: Vec<Formula> =
            (0..gen.rng().gen_range(1..=3)).map(|_| random_formula(&mut gen, 2)).collect();
        match lindenbaum(&interp, &formulas, 512) {
            Ok(out) => {
                ok &= check_graded_system(&out.graded).ok();
                ok &= is_spatial_graded(&out.graded);
                let ext = ext_graded(&out.graded);
                ok &= check_space(&ext.space).ok();
            }
            Err(ftsys_core::Error::Budget(_)) => {} // oversized closure: skip
            Err(e) => panic!("lindenbaum failed: {e}"),
        }
    }
    for _ in 0..50 {
        let space = gen.space(3, 2).with_flavor(Flavor::Graded);
        let theory = theory_from_space(&space);
        let report = check_theory_lemmas(&theory).unwrap();
        if !report.ok() {
            eprintln!("{report}");
        }
        ok &= report.ok();
    }
    verdict("15 (Lindenbaum pipeline, 50 + 50 instances)", ok);
}

/// 16. Derivation checker: over 100 random derivation trees with compatible
/// premises, the propagated bound never exceeds the semantic grade of the
/// conclusion.
#[test]
fn criterion_16_derivation_checker() {
    let mut gen = InstanceGen::new(0xC6);
    let mut ok = true;
    for k in 0..100 {
        let interp = random_interpretation(&mut gen);
        let phi = random_formula(&mut gen, 1);
        let psi = random_formula(&mut gen, 1);
        let chi = random_formula(&mut gen, 1);
        // premises stated at their actual grades: compatible by construction
        let g1 = sequent_grade(&phi, &psi, &interp).unwrap();
        let g2 = sequent_grade(&psi, &chi, &interp).unwrap();
        let premises = vec![
            (Sequent::new(phi.clone(), psi.clone()), g1),
            (Sequent::new(psi.clone(), chi.clone()), g2),
        ];
        let leaf = |i: usize, premises: &[(Sequent, TruthValue)]| Derivation {
            conclusion: premises[i].0.clone(),
            rule: RuleApp::Premise(i),
            children: vec![],
        };
        let tree = match k % 4 {
            0 => Derivation {
                conclusion: Sequent::new(phi.clone(), chi.clone()),
                rule: RuleApp::Cut,
                children: vec![leaf(0, &premises), leaf(1, &premises)],
            },
            1 => Derivation {
                conclusion: Sequent::new(phi.clone(), Formula::and(psi.clone(), psi.clone())),
                rule: RuleApp::AndRight,
                children: vec![leaf(0, &premises), leaf(0, &premises)],
            },
            2 => Derivation {
                conclusion: Sequent::new(
                    phi.clone(),
                    Formula::exists("y", psi.clone()),
                ),
                rule: RuleApp::ExistsIntro { x: "y".into() },
                children: vec![Derivation {
                    conclusion: Sequent::new(phi.clone(), psi.clone()),
                    rule: RuleApp::Premise(0),
                    children: vec![],
                }],
            },
            _ => Derivation {
                conclusion: Sequent::new(
                    Formula::and(phi.clone(), psi.clone()),
                    phi.clone(),
                ),
                rule: RuleApp::AndLeft1,
                children: vec![],
            },
        };
        let out = check_derivation(&premises, &tree, Some(&interp)).unwrap();
        if !out.report.ok() {
            eprintln!("tree {k}:\n{}", out.report);
        }
        ok &= out.report.ok();
        let actual =
            sequent_grade(&tree.conclusion.lhs, &tree.conclusion.rhs, &interp).unwrap();
        ok &= out.bound <= actual;
    }
    verdict("16 (derivation checker, 100 trees)", ok);
}
