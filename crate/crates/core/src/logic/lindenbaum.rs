use crate::error::Error;
use crate::fuzzyset::Carrier;
use crate::lattice::{FiniteFrame, FinitePoset, GradedCarrier, GradedFrame};
use crate::logic::semantics::{environments_over, grade_sat, Environment, Interpretation};
use crate::logic::syntax::Formula;
use crate::report::Report;
use crate::system::{FuzzyTopSystem, GradedFuzzyTopSystem};
use crate::truth::{inf_family, TruthValue};

/// The Lindenbaum systems of a finite theory: formula classes by equal
/// satisfaction columns over the environments on the free variables.
#[derive(Debug, Clone)]
pub struct LindenbaumOutcome {
    pub plain: FuzzyTopSystem,
    pub graded: GradedFuzzyTopSystem,
    /// Representative formula of each frame element.
    pub representatives: Vec<Formula>,
    /// Class of each input formula.
    pub class_of: Vec<usize>,
    /// The environments backing the points, in point order.
    pub environments: Vec<Environment>,
}

/// Builds the Lindenbaum quotient: columns are evaluated over all
/// environments on the free variables of the input list, the list is closed
/// under binary `∧`/`∨` together with `⊤` and `⊥` (new formulas are kept
/// only when they produce a new column, which is the quotient step), and
/// the frame is the set of distinct columns under pointwise order.
/// `R([φ],[ψ]) = inf_s (gr(s ⊨ φ) → gr(s ⊨ ψ))`.
pub fn lindenbaum(
    interp: &Interpretation,
    formulas: &[Formula],
    class_budget: usize,
) -> Result<LindenbaumOutcome, Error> {
    let mut vars = std::collections::BTreeSet::new();
    for phi in formulas {
        vars.extend(phi.free_vars());
    }
    let vars: Vec<String> = vars.into_iter().collect();
    let env_count = interp.size().checked_pow(vars.len() as u32);
    if env_count.map(|c| c > 4096).unwrap_or(true) {
        return Err(Error::Budget(format!(
            "{} environments over {} variables",
            interp.size(),
            vars.len()
        )));
    }
    let environments = environments_over(&vars, interp.size(), 0);

    let column = |phi: &Formula| -> Result<Vec<TruthValue>, Error> {
        environments.iter().map(|env| grade_sat(env, phi, interp)).collect()
    };

    let mut reps: Vec<(Formula, Vec<TruthValue>)> = Vec::new();
    let push = |reps: &mut Vec<(Formula, Vec<TruthValue>)>,
                    phi: Formula,
                    col: Vec<TruthValue>|
     -> usize {
        match reps.iter().position(|(_, c)| *c == col) {
            Some(i) => i,
            None => {
                reps.push((phi, col));
                reps.len() - 1
            }
        }
    };
    push(&mut reps, Formula::Top, vec![TruthValue::ONE; environments.len()]);
    push(&mut reps, Formula::Bot, vec![TruthValue::ZERO; environments.len()]);
    let mut class_of = Vec::with_capacity(formulas.len());
    for phi in formulas {
        let col = column(phi)?;
        class_of.push(push(&mut reps, phi.clone(), col));
    }
    // close the classes under ∧ and ∨
    let mut frontier = 0;
    while frontier < reps.len() {
        if reps.len() > class_budget {
            return Err(Error::Budget(format!(
                "Lindenbaum closure exceeds {class_budget} classes"
            )));
        }
        let upto = reps.len();
        for i in 0..upto {
            for jj in 0..upto {
                if i.max(jj) < frontier {
                    continue;
                }
                let meet: Vec<TruthValue> = reps[i]
                    .1
                    .iter()
                    .zip(&reps[jj].1)
                    .map(|(&a, &b)| a.meet(b))
                    .collect();
                let join: Vec<TruthValue> = reps[i]
                    .1
                    .iter()
                    .zip(&reps[jj].1)
                    .map(|(&a, &b)| a.join(b))
                    .collect();
                let and = Formula::and(reps[i].0.clone(), reps[jj].0.clone());
                let or = Formula::or2(reps[i].0.clone(), reps[jj].0.clone());
                push(&mut reps, and, meet);
                push(&mut reps, or, join);
            }
        }
        frontier = upto;
    }

    let k = reps.len();
    let names: Vec<String> = reps.iter().map(|(phi, _)| format!("[{phi}]")).collect();
    let leq: Vec<Vec<bool>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|jj| reps[i].1.iter().zip(&reps[jj].1).all(|(a, b)| a <= b))
                .collect()
        })
        .collect();
    let frame = FiniteFrame::from_poset(FinitePoset::new(names, leq)?)?;
    let points = Carrier::new((0..environments.len()).map(|i| format!("s{i}")));
    let sat: Vec<Vec<TruthValue>> = (0..environments.len())
        .map(|s| (0..k).map(|c| reps[c].1[s]).collect())
        .collect();
    let plain = FuzzyTopSystem::new(points.clone(), frame.clone(), sat.clone())?;

    let mut r = vec![vec![TruthValue::ZERO; k]; k];
    for (i, row) in r.iter_mut().enumerate() {
        for (jj, slot) in row.iter_mut().enumerate() {
            *slot = inf_family(
                reps[i].1.iter().zip(&reps[jj].1).map(|(&a, &b)| a.godel_arrow(b)),
            );
        }
    }
    let graded_frame = GradedFrame::new(GradedCarrier::from(&frame), r)?;
    let graded = GradedFuzzyTopSystem::new(points, graded_frame, sat)?;
    let representatives = reps.into_iter().map(|(phi, _)| phi).collect();
    Ok(LindenbaumOutcome { plain, graded, representatives, class_of, environments })
}

/// Propositional formulas over the opens of a graded space: a variable per
/// open, closed under `∧` and finite `⋁`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PropFormula {
    Var(usize),
    Top,
    Bot,
    And(Box<PropFormula>, Box<PropFormula>),
    Or(Vec<PropFormula>),
}

impl PropFormula {
    pub fn and(a: PropFormula, b: PropFormula) -> PropFormula {
        PropFormula::And(Box::new(a), Box::new(b))
    }
}

/// The graded propositional theory of a graded space: each formula
/// normalizes to an open (`∧ ↦ ∩`, `⋁ ↦ ∪`), and
/// `gr(α ⊢ β) = gr(T_α ⊆ T_β)`.
#[derive(Debug, Clone)]
pub struct GradedTheory {
    space: crate::space::FuzzyTopSpace,
}

impl GradedTheory {
    pub fn space(&self) -> &crate::space::FuzzyTopSpace {
        &self.space
    }

    /// The open denoted by a formula; closure of `τ` makes this total.
    pub fn open_of(&self, phi: &PropFormula) -> Result<usize, Error> {
        let subset = self.subset_of(phi)?;
        self.space
            .index_of(&subset)
            .ok_or_else(|| Error::structural("normal form left the topology"))
    }

    fn subset_of(&self, phi: &PropFormula) -> Result<crate::fuzzyset::FuzzySubset, Error> {
        let carrier = self.space.carrier().clone();
        Ok(match phi {
            PropFormula::Var(i) => self.space.opens()[*i].clone(),
            PropFormula::Top => crate::fuzzyset::FuzzySubset::full(carrier),
            PropFormula::Bot => crate::fuzzyset::FuzzySubset::empty(carrier),
            PropFormula::And(a, b) => {
                self.subset_of(a)?.intersection(&self.subset_of(b)?)?
            }
            PropFormula::Or(items) => {
                let mut acc = crate::fuzzyset::FuzzySubset::empty(carrier);
                for item in items {
                    acc = acc.union_with(&self.subset_of(item)?)?;
                }
                acc
            }
        })
    }

    /// `gr(α ⊢ β) = gr(T_α ⊆ T_β)`.
    pub fn grade(&self, alpha: &PropFormula, beta: &PropFormula) -> Result<TruthValue, Error> {
        self.subset_of(alpha)?.graded_inclusion(&self.subset_of(beta)?)
    }
}

/// Builds the propositional theory of a graded space.
pub fn theory_from_space(space: &crate::space::FuzzyTopSpace) -> GradedTheory {
    GradedTheory { space: space.clone() }
}

/// The sequent laws of the space theory, checked over all opens (pairs and
/// triples) and over every family used as a join: reflexivity,
/// transitivity, the top, meet projections and characterization, join
/// injections, the sup-to-inf law, and frame distributivity at grade 1.
pub fn check_theory_lemmas(theory: &GradedTheory) -> Result<Report, Error> {
    let mut report = Report::new("space-theory sequents");
    let m = theory.space.opens().len();
    let var = PropFormula::Var;
    let full_idx = theory
        .space
        .index_of(&crate::fuzzyset::FuzzySubset::full(theory.space.carrier().clone()))
        .ok_or_else(|| Error::structural("space misses X̃"))?;

    let mut refl = None;
    let mut top = None;
    for i in 0..m {
        if !theory.grade(&var(i), &var(i))?.is_one() && refl.is_none() {
            refl = Some(i);
        }
        if !theory.grade(&var(i), &var(full_idx))?.is_one() && top.is_none() {
            top = Some(i);
        }
    }
    report.record("gr(P_T ⊢ P_T) = 1", refl.is_none(), || format!("open {}", refl.unwrap()));
    report.record("gr(P_T ⊢ P_X̃) = 1", top.is_none(), || format!("open {}", top.unwrap()));

    let mut trans = None;
    let mut meet_char = None;
    for i in 0..m {
        for jj in 0..m {
            for kk in 0..m {
                let lhs = theory.grade(&var(i), &var(jj))?.meet(theory.grade(&var(jj), &var(kk))?);
                if lhs > theory.grade(&var(i), &var(kk))? && trans.is_none() {
                    trans = Some((i, jj, kk));
                }
                let both =
                    theory.grade(&var(i), &var(jj))?.meet(theory.grade(&var(i), &var(kk))?);
                let meet = theory
                    .grade(&var(i), &PropFormula::and(var(jj), var(kk)))?;
                if both != meet && meet_char.is_none() {
                    meet_char = Some((i, jj, kk));
                }
            }
        }
    }
    report.record("transitivity by min", trans.is_none(), || format!("{:?}", trans.unwrap()));
    report.record(
        "gr(α⊢β) ∧ gr(α⊢γ) = gr(α⊢β∧γ)",
        meet_char.is_none(),
        || format!("{:?}", meet_char.unwrap()),
    );

    let mut proj = None;
    let mut join_inj = None;
    let mut dist = None;
    for i in 0..m {
        for jj in 0..m {
            let conj = PropFormula::and(var(i), var(jj));
            if !(theory.grade(&conj, &var(i))?.is_one()
                && theory.grade(&conj.clone(), &var(jj))?.is_one())
                && proj.is_none()
            {
                proj = Some((i, jj));
            }
            let disj = PropFormula::Or(vec![var(i), var(jj)]);
            if !theory.grade(&var(i), &disj)?.is_one() && join_inj.is_none() {
                join_inj = Some((i, jj));
            }
            for kk in 0..m {
                let lhs = PropFormula::and(var(i), PropFormula::Or(vec![var(jj), var(kk)]));
                let rhs = PropFormula::Or(vec![
                    PropFormula::and(var(i), var(jj)),
                    PropFormula::and(var(i), var(kk)),
                ]);
                if !theory.grade(&lhs, &rhs)?.is_one() && dist.is_none() {
                    dist = Some((i, jj, kk));
                }
            }
        }
    }
    report.record("gr(α∧β ⊢ α) = 1 = gr(α∧β ⊢ β)", proj.is_none(), || {
        format!("{:?}", proj.unwrap())
    });
    report.record("gr(α ⊢ α∨β) = 1", join_inj.is_none(), || {
        format!("{:?}", join_inj.unwrap())
    });
    report.record("gr(α ∧ ⋁S ⊢ ⋁{α∧β}) = 1", dist.is_none(), || {
        format!("{:?}", dist.unwrap())
    });

    // sup-to-inf law over binary families and the full family
    let mut families: Vec<Vec<usize>> = Vec::new();
    for i in 0..m {
        for jj in i..m {
            families.push(vec![i, jj]);
        }
    }
    families.push((0..m).collect());
    let mut sup_inf = None;
    for family in &families {
        for t in 0..m {
            let grades = family
                .iter()
                .map(|&i| theory.grade(&var(i), &var(t)))
                .collect::<Result<Vec<TruthValue>, Error>>()?;
            let inf = inf_family(grades);
            let join = PropFormula::Or(family.iter().map(|&i| var(i)).collect());
            if inf != theory.grade(&join, &var(t))? && sup_inf.is_none() {
                sup_inf = Some((family.clone(), t));
            }
        }
    }
    report.record("inf over S of gr(α ⊢ τ) = gr(⋁S ⊢ τ)", sup_inf.is_none(), || {
        format!("{:?}", sup_inf.unwrap())
    });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::semantics::tests::two_point_interp;
    use crate::logic::syntax::Term;
    use crate::space::{generate_topology, Flavor};
    use crate::system::{check_graded_system, check_system, is_spatial, is_spatial_graded};

    fn pvar(p: &str, x: &str) -> Formula {
        Formula::Pred(p.into(), vec![Term::Var(x.into())])
    }

    #[test]
    fn top_bottom_theory_has_two_classes() {
        let interp = two_point_interp();
        let out = lindenbaum(&interp, &[Formula::Top, Formula::Bot], 64).unwrap();
        assert_eq!(out.plain.frame().len(), 2);
        assert!(check_system(&out.plain).ok());
        assert!(check_graded_system(&out.graded).ok());
    }

    #[test]
    fn idempotent_conjunction_merges() {
        let interp = two_point_interp();
        let p = pvar("p", "x");
        let pp = Formula::and(p.clone(), p.clone());
        let out = lindenbaum(&interp, &[p, pp], 64).unwrap();
        assert_eq!(out.class_of[0], out.class_of[1]);
    }

    #[test]
    fn lindenbaum_output_is_spatial_and_graded() {
        let interp = two_point_interp();
        let formulas = vec![pvar("p", "x"), pvar("q", "x"), Formula::exists("y", pvar("p", "y"))];
        let out = lindenbaum(&interp, &formulas, 256).unwrap();
        assert!(check_system(&out.plain).ok());
        assert!(is_spatial(&out.plain));
        let report = check_graded_system(&out.graded);
        assert!(report.ok(), "{report}");
        assert!(is_spatial_graded(&out.graded));
        // the order of the frame matches validity
        for i in 0..out.plain.frame().len() {
            for jj in 0..out.plain.frame().len() {
                let r_one = out.graded.frame().r(i, jj).is_one();
                assert_eq!(r_one, out.plain.frame().le(i, jj));
            }
        }
        // ext_g of the output is a space
        let ext = crate::system::ext_graded(&out.graded);
        assert!(crate::space::check_space(&ext.space).ok());
    }

    #[test]
    fn theory_of_a_space_satisfies_the_sequent_laws() {
        let tv = |p, q| TruthValue::new(p, q).unwrap();
        let carrier = crate::fuzzyset::Carrier::new(["x", "y"]);
        let t1 =
            crate::fuzzyset::FuzzySubset::new(carrier.clone(), vec![tv(1, 2), tv(1, 4)]).unwrap();
        let t2 =
            crate::fuzzyset::FuzzySubset::new(carrier.clone(), vec![tv(1, 4), tv(3, 4)]).unwrap();
        let space = generate_topology(&carrier, &[t1, t2], Flavor::Graded).unwrap();
        let theory = theory_from_space(&space);
        let report = check_theory_lemmas(&theory).unwrap();
        assert!(report.ok(), "{report}");
        // the grade of a sequent of variables is the graded inclusion
        let g = theory.grade(&PropFormula::Var(2), &PropFormula::Var(3)).unwrap();
        assert_eq!(
            g,
            space.opens()[2].graded_inclusion(&space.opens()[3]).unwrap()
        );
    }
}
