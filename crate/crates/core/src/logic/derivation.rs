use crate::error::Error;
use crate::logic::semantics::{sequent_grade, Interpretation};
use crate::logic::syntax::{subst_formula, Formula, Term};
use crate::report::Report;
use crate::truth::TruthValue;
use serde::{Deserialize, Serialize};

/// A sequent `φ ⊢ ψ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sequent {
    pub lhs: Formula,
    pub rhs: Formula,
}

impl Sequent {
    pub fn new(lhs: Formula, rhs: Formula) -> Self {
        Sequent { lhs, rhs }
    }
}

impl std::fmt::Display for Sequent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} |- {}", self.lhs, self.rhs)
    }
}

/// Which rule a derivation node claims to apply.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum RuleApp {
    /// A graded premise, by index.
    Premise(usize),
    /// 1: `φ ⊢ φ`.
    Identity,
    /// 2: from `φ ⊢ ψ` and `ψ ⊢ χ`.
    Cut,
    /// 3(i): `φ ⊢ ⊤`.
    TopIntro,
    /// 3(ii)/(iii): `φ∧ψ ⊢ φ` / `φ∧ψ ⊢ ψ`.
    AndLeft1,
    AndLeft2,
    /// 3(iv): from `φ ⊢ ψ` and `φ ⊢ χ`.
    AndRight,
    /// 4(i): `φ ⊢ ⋁S` with `φ ∈ S`.
    JoinInj,
    /// 4(ii): from `φ ⊢ ψ` for every member of the disjunction.
    JoinUniv,
    /// 5: `φ∧⋁S ⊢ ⋁{φ∧ψ}`.
    FrameDist,
    /// 6: `⊤ ⊢ (x = x)`.
    EqRefl,
    /// 7: `(x⃗=y⃗)∧φ ⊢ φ[y⃗/x⃗]`.
    EqSubst,
    /// 8(i): from `φ ⊢ ψ[x/y]` infer `φ ⊢ ∃yψ`; `x` is the witness.
    ExistsIntro { x: String },
    /// 8(ii): from `∃yφ ⊢ ψ` infer `φ[x/y] ⊢ ψ`.
    ExistsElim { x: String },
    /// 9: `φ∧∃yψ ⊢ ∃y(φ∧ψ)`.
    Frobenius,
}

/// An explicit derivation tree; each node carries its claimed conclusion.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Derivation {
    pub conclusion: Sequent,
    pub rule: RuleApp,
    pub children: Vec<Derivation>,
}

/// The result of checking a derivation.
#[derive(Debug, Clone)]
pub struct DerivationOutcome {
    /// The propagated lower bound: the minimum of the premise grades used,
    /// `1` for premise-free derivations.
    pub bound: TruthValue,
    pub report: Report,
}

fn child_count(node: &Derivation, expected: usize, report: &mut Report) -> bool {
    let ok = node.children.len() == expected;
    if !ok {
        report.fail(
            format!("{:?} expects {} premise(s)", node.rule, expected),
            format!("{} given at {}", node.children.len(), node.conclusion),
        );
    }
    ok
}

fn validate(
    node: &Derivation,
    premises: &[(Sequent, TruthValue)],
    report: &mut Report,
) -> Result<TruthValue, Error> {
    let c = &node.conclusion;
    let fail = |report: &mut Report, why: String| {
        report.fail(format!("rule {:?}", node.rule), format!("{why} at {c}"));
    };
    // premise-free rules yield bound 1; inferences take the min of children
    let mut bound = TruthValue::ONE;
    match &node.rule {
        RuleApp::Premise(i) => {
            if !child_count(node, 0, report) {
                return Ok(TruthValue::ZERO);
            }
            match premises.get(*i) {
                Some((seq, grade)) => {
                    if *seq != *c {
                        fail(report, format!("premise {i} states {seq}"));
                    }
                    bound = *grade;
                }
                None => fail(report, format!("no premise with index {i}")),
            }
        }
        RuleApp::Identity => {
            child_count(node, 0, report);
            if c.lhs != c.rhs {
                fail(report, "sides differ".into());
            }
        }
        RuleApp::Cut => {
            if child_count(node, 2, report) {
                let a = &node.children[0].conclusion;
                let b = &node.children[1].conclusion;
                if a.rhs != b.lhs || c.lhs != a.lhs || c.rhs != b.rhs {
                    fail(report, "cut formulas do not chain".into());
                }
            }
        }
        RuleApp::TopIntro => {
            child_count(node, 0, report);
            if c.rhs != Formula::Top {
                fail(report, "right side is not ⊤".into());
            }
        }
        RuleApp::AndLeft1 => {
            child_count(node, 0, report);
            match &c.lhs {
                Formula::And(a, _) if **a == c.rhs => {}
                _ => fail(report, "conclusion is not φ∧ψ ⊢ φ".into()),
            }
        }
        RuleApp::AndLeft2 => {
            child_count(node, 0, report);
            match &c.lhs {
                Formula::And(_, b) if **b == c.rhs => {}
                _ => fail(report, "conclusion is not φ∧ψ ⊢ ψ".into()),
            }
        }
        RuleApp::AndRight => {
            if child_count(node, 2, report) {
                let a = &node.children[0].conclusion;
                let b = &node.children[1].conclusion;
                let expected = Formula::and(a.rhs.clone(), b.rhs.clone());
                if a.lhs != c.lhs || b.lhs != c.lhs || c.rhs != expected {
                    fail(report, "conclusion is not φ ⊢ ψ∧χ".into());
                }
            }
        }
        RuleApp::JoinInj => {
            child_count(node, 0, report);
            match &c.rhs {
                Formula::Or(items) if items.contains(&c.lhs) => {}
                _ => fail(report, "left side is not a disjunct of the right".into()),
            }
        }
        RuleApp::JoinUniv => {
            match &c.lhs {
                Formula::Or(items) => {
                    if child_count(node, items.len(), report) {
                        for (child, phi) in node.children.iter().zip(items) {
                            if child.conclusion.lhs != *phi || child.conclusion.rhs != c.rhs {
                                fail(report, format!("premise {} expected", phi));
                            }
                        }
                    }
                }
                _ => fail(report, "left side is not a disjunction".into()),
            }
        }
        RuleApp::FrameDist => {
            child_count(node, 0, report);
            let ok = match &c.lhs {
                Formula::And(phi, join) => match (&**join, &c.rhs) {
                    (Formula::Or(items), Formula::Or(out)) => {
                        out.len() == items.len()
                            && out.iter().zip(items).all(|(o, psi)| {
                                *o == Formula::and((**phi).clone(), psi.clone())
                            })
                    }
                    _ => false,
                },
                _ => false,
            };
            if !ok {
                fail(report, "conclusion is not φ∧⋁S ⊢ ⋁{φ∧ψ}".into());
            }
        }
        RuleApp::EqRefl => {
            child_count(node, 0, report);
            let ok = c.lhs == Formula::Top
                && matches!(&c.rhs, Formula::Eq(Term::Var(a), Term::Var(b)) if a == b);
            if !ok {
                fail(report, "conclusion is not ⊤ ⊢ (x = x)".into());
            }
        }
        RuleApp::EqSubst => {
            child_count(node, 0, report);
            let ok = match &c.lhs {
                Formula::And(eqs, phi) => match collect_equalities(eqs) {
                    Some(pairs) => {
                        let subs: Vec<(String, Term)> = pairs
                            .iter()
                            .map(|(x, y)| (x.clone(), Term::Var(y.clone())))
                            .collect();
                        crate::logic::syntax::subst_formula_parallel(phi, &subs) == c.rhs
                    }
                    None => false,
                },
                _ => false,
            };
            if !ok {
                fail(report, "conclusion is not (x⃗=y⃗)∧φ ⊢ φ[y⃗/x⃗]".into());
            }
        }
        RuleApp::ExistsIntro { x } => {
            if child_count(node, 1, report) {
                let child = &node.children[0].conclusion;
                let ok = match &c.rhs {
                    Formula::Exists(y, psi) => {
                        child.lhs == c.lhs
                            && child.rhs == subst_formula(psi, &Term::Var(x.clone()), y)
                    }
                    _ => false,
                };
                if !ok {
                    fail(report, "premise is not φ ⊢ ψ[x/y]".into());
                }
            }
        }
        RuleApp::ExistsElim { x } => {
            if child_count(node, 1, report) {
                let child = &node.children[0].conclusion;
                let ok = match &child.lhs {
                    Formula::Exists(y, phi) => {
                        child.rhs == c.rhs
                            && c.lhs == subst_formula(phi, &Term::Var(x.clone()), y)
                    }
                    _ => false,
                };
                if !ok {
                    fail(report, "premise is not ∃yφ ⊢ ψ".into());
                }
            }
        }
        RuleApp::Frobenius => {
            child_count(node, 0, report);
            let ok = match (&c.lhs, &c.rhs) {
                (Formula::And(phi, ex), Formula::Exists(y2, body)) => match &**ex {
                    Formula::Exists(y, psi) => {
                        y == y2 && **body == Formula::and((**phi).clone(), (**psi).clone())
                    }
                    _ => false,
                },
                _ => false,
            };
            if !ok {
                fail(report, "conclusion is not φ∧∃yψ ⊢ ∃y(φ∧ψ)".into());
            }
        }
    }
    for child in &node.children {
        bound = bound.meet(validate(child, premises, report)?);
    }
    Ok(bound)
}

fn collect_equalities(phi: &Formula) -> Option<Vec<(String, String)>> {
    match phi {
        Formula::Eq(Term::Var(x), Term::Var(y)) => Some(vec![(x.clone(), y.clone())]),
        Formula::And(a, b) => {
            let mut out = collect_equalities(a)?;
            out.extend(collect_equalities(b)?);
            Some(out)
        }
        _ => None,
    }
}

/// Validates every step of a derivation tree and propagates the lower
/// bound: the minimum of the grades of the premises used (rules without
/// premises contribute `1`).
///
/// With an interpretation supplied, the checker first confirms the premises
/// hold at least at their stated grades and then cross-checks that the
/// bound never exceeds the semantic grade of the conclusion.
pub fn check_derivation(
    premises: &[(Sequent, TruthValue)],
    tree: &Derivation,
    interp: Option<&Interpretation>,
) -> Result<DerivationOutcome, Error> {
    let mut report = Report::new("derivation");
    let bound = validate(tree, premises, &mut report)?;
    if let Some(interp) = interp {
        let mut compatible = true;
        for (i, (seq, grade)) in premises.iter().enumerate() {
            let actual = sequent_grade(&seq.lhs, &seq.rhs, interp)?;
            let ok = actual >= *grade;
            compatible = compatible && ok;
            report.record(
                format!("premise {i} holds at its stated grade"),
                ok,
                || format!("stated {grade}, actual {actual}"),
            );
        }
        if compatible && report.ok() {
            let actual =
                sequent_grade(&tree.conclusion.lhs, &tree.conclusion.rhs, interp)?;
            report.record(
                "propagated bound ≤ semantic grade of the conclusion",
                bound <= actual,
                || format!("bound {bound} > grade {actual}"),
            );
        }
    }
    Ok(DerivationOutcome { bound, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::semantics::tests::two_point_interp;

    fn tv(p: i64, q: i64) -> TruthValue {
        TruthValue::new(p, q).unwrap()
    }

    fn pvar(p: &str) -> Formula {
        Formula::Pred(p.into(), vec![Term::Var("x".into())])
    }

    #[test]
    fn cut_propagates_the_minimum() {
        let (p, q) = (pvar("p"), pvar("q"));
        let premises = vec![
            (Sequent::new(p.clone(), q.clone()), tv(3, 5)),
            (Sequent::new(q.clone(), Formula::Top), tv(4, 5)),
        ];
        let tree = Derivation {
            conclusion: Sequent::new(p.clone(), Formula::Top),
            rule: RuleApp::Cut,
            children: vec![
                Derivation {
                    conclusion: premises[0].0.clone(),
                    rule: RuleApp::Premise(0),
                    children: vec![],
                },
                Derivation {
                    conclusion: premises[1].0.clone(),
                    rule: RuleApp::Premise(1),
                    children: vec![],
                },
            ],
        };
        let out = check_derivation(&premises, &tree, None).unwrap();
        assert!(out.report.ok(), "{}", out.report);
        assert_eq!(out.bound, tv(3, 5));
    }

    #[test]
    fn axioms_have_bound_one_and_respect_semantics() {
        let p = pvar("p");
        let tree = Derivation {
            conclusion: Sequent::new(p.clone(), p.clone()),
            rule: RuleApp::Identity,
            children: vec![],
        };
        let interp = two_point_interp();
        let out = check_derivation(&[], &tree, Some(&interp)).unwrap();
        assert!(out.report.ok(), "{}", out.report);
        assert!(out.bound.is_one());
    }

    #[test]
    fn misapplication_is_caught() {
        let (p, q) = (pvar("p"), pvar("q"));
        let tree = Derivation {
            conclusion: Sequent::new(p, q),
            rule: RuleApp::Identity,
            children: vec![],
        };
        let out = check_derivation(&[], &tree, None).unwrap();
        assert!(!out.report.ok());
    }

    #[test]
    fn semantic_cross_check_accepts_valid_bounds() {
        let interp = two_point_interp();
        let (p, q) = (pvar("p"), pvar("q"));
        // gr(p ⊢ q) = 3/5 in this interpretation; state 1/2 as the premise
        let premises = vec![(Sequent::new(p.clone(), q.clone()), tv(1, 2))];
        let tree = Derivation {
            conclusion: Sequent::new(p.clone(), Formula::and(q.clone(), q.clone())),
            rule: RuleApp::AndRight,
            children: vec![
                Derivation {
                    conclusion: premises[0].0.clone(),
                    rule: RuleApp::Premise(0),
                    children: vec![],
                },
                Derivation {
                    conclusion: premises[0].0.clone(),
                    rule: RuleApp::Premise(0),
                    children: vec![],
                },
            ],
        };
        let out = check_derivation(&premises, &tree, Some(&interp)).unwrap();
        assert!(out.report.ok(), "{}", out.report);
        assert_eq!(out.bound, tv(1, 2));
    }

    #[test]
    fn frobenius_axiom_checks_shape() {
        let (p, q) = (pvar("p"), pvar("q"));
        let tree = Derivation {
            conclusion: Sequent::new(
                Formula::and(p.clone(), Formula::exists("y", q.clone())),
                Formula::exists("y", Formula::and(p.clone(), q.clone())),
            ),
            rule: RuleApp::Frobenius,
            children: vec![],
        };
        let interp = two_point_interp();
        let out = check_derivation(&[], &tree, Some(&interp)).unwrap();
        assert!(out.report.ok(), "{}", out.report);
    }
}
