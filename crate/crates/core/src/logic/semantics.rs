use crate::error::Error;
use crate::logic::syntax::{subst_formula, subst_formula_parallel, Formula, Signature, Term};
use crate::report::Report;
use crate::truth::{inf_family, sup_family, TruthValue};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A finite first-order interpretation with fuzzy predicates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interpretation {
    pub domain: Vec<String>,
    pub constants: BTreeMap<String, usize>,
    /// Tables indexed by mixed-radix tuples over the domain.
    pub functions: BTreeMap<String, FnTable>,
    pub predicates: BTreeMap<String, PredTable>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FnTable {
    pub arity: usize,
    pub table: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredTable {
    pub arity: usize,
    pub table: Vec<TruthValue>,
}

impl Interpretation {
    pub fn signature(&self) -> Signature {
        Signature {
            constants: self.constants.keys().cloned().collect(),
            functions: self.functions.iter().map(|(k, v)| (k.clone(), v.arity)).collect(),
            predicates: self.predicates.iter().map(|(k, v)| (k.clone(), v.arity)).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.domain.len()
    }

    fn tuple_index(&self, args: &[usize]) -> usize {
        args.iter().fold(0, |acc, &a| acc * self.size() + a)
    }

    pub fn apply_fn(&self, name: &str, args: &[usize]) -> Result<usize, Error> {
        let t = self
            .functions
            .get(name)
            .ok_or_else(|| Error::structural(format!("undeclared function {name}")))?;
        if t.arity != args.len() {
            return Err(Error::structural(format!("arity mismatch for {name}")));
        }
        Ok(t.table[self.tuple_index(args)])
    }

    pub fn apply_pred(&self, name: &str, args: &[usize]) -> Result<TruthValue, Error> {
        let t = self
            .predicates
            .get(name)
            .ok_or_else(|| Error::structural(format!("undeclared predicate {name}")))?;
        if t.arity != args.len() {
            return Err(Error::structural(format!("arity mismatch for {name}")));
        }
        Ok(t.table[self.tuple_index(args)])
    }

    /// Validates table sizes against the declared arities.
    pub fn check(&self) -> Result<(), Error> {
        let n = self.size();
        if n == 0 {
            return Err(Error::structural("empty domain"));
        }
        for (name, c) in &self.constants {
            if *c >= n {
                return Err(Error::structural(format!("constant {name} outside the domain")));
            }
        }
        for (name, t) in &self.functions {
            if t.table.len() != n.pow(t.arity as u32) || t.table.iter().any(|&v| v >= n) {
                return Err(Error::structural(format!("function table {name} is not total")));
            }
        }
        for (name, t) in &self.predicates {
            if t.table.len() != n.pow(t.arity as u32) {
                return Err(Error::structural(format!("predicate table {name} is not total")));
            }
        }
        Ok(())
    }
}

/// A finite assignment of domain elements to variables with a default for
/// the unmentioned ones.
///
/// This replaces infinite sequences over the domain: by local determination
/// the grade of a formula only depends on its free variables, so the inf
/// over environments on the free variables equals the inf over all
/// sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Environment {
    map: BTreeMap<String, usize>,
    default: usize,
}

impl Environment {
    pub fn new(default: usize) -> Self {
        Environment { map: BTreeMap::new(), default }
    }

    pub fn with(mut self, var: impl Into<String>, value: usize) -> Self {
        self.map.insert(var.into(), value);
        self
    }

    /// `s(d/x)`.
    pub fn update(&self, var: &str, value: usize) -> Self {
        let mut next = self.clone();
        next.map.insert(var.to_string(), value);
        next
    }

    pub fn get(&self, var: &str) -> usize {
        self.map.get(var).copied().unwrap_or(self.default)
    }
}

/// All environments assigning domain elements to the given variables.
pub fn environments_over(vars: &[String], domain_size: usize, default: usize) -> Vec<Environment> {
    let mut out = vec![Environment::new(default)];
    for v in vars {
        out = out
            .into_iter()
            .flat_map(|env| (0..domain_size).map(move |d| env.clone().update(v, d)))
            .collect();
    }
    out
}

/// Term denotation under an environment.
pub fn eval_term(env: &Environment, t: &Term, interp: &Interpretation) -> Result<usize, Error> {
    match t {
        Term::Const(c) => interp
            .constants
            .get(c)
            .copied()
            .ok_or_else(|| Error::structural(format!("undeclared constant {c}"))),
        Term::Var(x) => Ok(env.get(x)),
        Term::App(f, args) => {
            let vals = args
                .iter()
                .map(|a| eval_term(env, a, interp))
                .collect::<Result<Vec<usize>, Error>>()?;
            interp.apply_fn(f, &vals)
        }
    }
}

/// The graded-satisfaction recursion: `⊤ ↦ 1`, `⊥ ↦ 0`, equality crisp,
/// conjunction by min, disjunction by sup, `∃` by sup over the domain.
pub fn grade_sat(
    env: &Environment,
    phi: &Formula,
    interp: &Interpretation,
) -> Result<TruthValue, Error> {
    match phi {
        Formula::Top => Ok(TruthValue::ONE),
        Formula::Bot => Ok(TruthValue::ZERO),
        Formula::Pred(p, args) => {
            let vals = args
                .iter()
                .map(|a| eval_term(env, a, interp))
                .collect::<Result<Vec<usize>, Error>>()?;
            interp.apply_pred(p, &vals)
        }
        Formula::Eq(a, b) => {
            let lhs = eval_term(env, a, interp)?;
            let rhs = eval_term(env, b, interp)?;
            Ok(if lhs == rhs { TruthValue::ONE } else { TruthValue::ZERO })
        }
        Formula::And(a, b) => {
            Ok(grade_sat(env, a, interp)?.meet(grade_sat(env, b, interp)?))
        }
        Formula::Or(items) => {
            let grades = items
                .iter()
                .map(|f| grade_sat(env, f, interp))
                .collect::<Result<Vec<TruthValue>, Error>>()?;
            Ok(sup_family(grades))
        }
        Formula::Exists(x, body) => {
            let grades = (0..interp.size())
                .map(|d| grade_sat(&env.update(x, d), body, interp))
                .collect::<Result<Vec<TruthValue>, Error>>()?;
            Ok(sup_family(grades))
        }
    }
}

/// An independent classical geometric-satisfaction oracle for crisp
/// interpretations, used as the two-valued reduction reference. Its
/// recursion goes through booleans, never through truth-value arithmetic.
pub fn classical_sat(
    env: &Environment,
    phi: &Formula,
    interp: &Interpretation,
) -> Result<bool, Error> {
    match phi {
        Formula::Top => Ok(true),
        Formula::Bot => Ok(false),
        Formula::Pred(p, args) => {
            let vals = args
                .iter()
                .map(|a| eval_term(env, a, interp))
                .collect::<Result<Vec<usize>, Error>>()?;
            let v = interp.apply_pred(p, &vals)?;
            if v.is_one() {
                Ok(true)
            } else if v.is_zero() {
                Ok(false)
            } else {
                Err(Error::precondition("classical oracle on a non-crisp predicate"))
            }
        }
        Formula::Eq(a, b) => Ok(eval_term(env, a, interp)? == eval_term(env, b, interp)?),
        Formula::And(a, b) => {
            Ok(classical_sat(env, a, interp)? && classical_sat(env, b, interp)?)
        }
        Formula::Or(items) => {
            for f in items {
                if classical_sat(env, f, interp)? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        Formula::Exists(x, body) => {
            for d in 0..interp.size() {
                if classical_sat(&env.update(x, d), body, interp)? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
    }
}

fn joint_environments(
    phi: &Formula,
    psi: &Formula,
    interp: &Interpretation,
) -> Vec<Environment> {
    let mut vars = phi.free_vars();
    vars.extend(psi.free_vars());
    let vars: Vec<String> = vars.into_iter().collect();
    environments_over(&vars, interp.size(), 0)
}

/// `gr(φ ⊢ ψ) = inf over environments of gr(s sat φ) → gr(s sat ψ)`; the
/// inf ranges over assignments to the free variables of both sides, which
/// suffices by local determination.
pub fn sequent_grade(
    phi: &Formula,
    psi: &Formula,
    interp: &Interpretation,
) -> Result<TruthValue, Error> {
    let grades = joint_environments(phi, psi, interp)
        .iter()
        .map(|env| {
            Ok(grade_sat(env, phi, interp)?.godel_arrow(grade_sat(env, psi, interp)?))
        })
        .collect::<Result<Vec<TruthValue>, Error>>()?;
    Ok(inf_family(grades))
}

/// Crisp validity: `gr(s sat φ) ≤ gr(s sat ψ)` for every environment;
/// equivalently `sequent_grade = 1`.
pub fn is_valid(phi: &Formula, psi: &Formula, interp: &Interpretation) -> Result<bool, Error> {
    for env in joint_environments(phi, psi, interp) {
        if grade_sat(&env, phi, interp)? > grade_sat(&env, psi, interp)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A concrete instance of one of the nine rules of inference.
#[derive(Debug, Clone)]
pub enum RuleInstance {
    /// 1: `φ ⊢ φ`.
    Identity { phi: Formula },
    /// 2: from `φ ⊢ ψ` and `ψ ⊢ χ` infer `φ ⊢ χ`.
    Cut { phi: Formula, psi: Formula, chi: Formula },
    /// 3(i): `φ ⊢ ⊤`.
    TopIntro { phi: Formula },
    /// 3(ii)/(iii): `φ∧ψ ⊢ φ` and `φ∧ψ ⊢ ψ`.
    AndProj { phi: Formula, psi: Formula },
    /// 3(iv): from `φ ⊢ ψ` and `φ ⊢ χ` infer `φ ⊢ ψ∧χ`.
    AndRight { phi: Formula, psi: Formula, chi: Formula },
    /// 4(i): `φ ⊢ ⋁S` for `φ ∈ S`.
    JoinInj { family: Vec<Formula>, index: usize },
    /// 4(ii): from `φ ⊢ ψ` for all `φ ∈ S` infer `⋁S ⊢ ψ`.
    JoinUniv { family: Vec<Formula>, psi: Formula },
    /// 5: `φ ∧ ⋁S ⊢ ⋁{φ∧ψ | ψ ∈ S}`.
    FrameDist { phi: Formula, family: Vec<Formula> },
    /// 6: `⊤ ⊢ (x = x)`.
    EqRefl { var: String },
    /// 7: `(x⃗ = y⃗) ∧ φ ⊢ φ[y⃗/x⃗]`, the tuple equality desugared to a
    /// conjunction of componentwise equalities.
    EqSubst { xs: Vec<String>, ys: Vec<String>, phi: Formula },
    /// 8(i): from `φ ⊢ ψ[x/y]` infer `φ ⊢ ∃yψ`.
    ExistsIntro { phi: Formula, psi: Formula, x: String, y: String },
    /// 8(ii): from `∃yφ ⊢ ψ` infer `φ[x/y] ⊢ ψ`.
    ExistsElim { phi: Formula, psi: Formula, x: String, y: String },
    /// 9: `φ ∧ ∃yψ ⊢ ∃y(φ∧ψ)`.
    Frobenius { phi: Formula, psi: Formula, y: String },
}

/// Desugars `(x₁,…,xₙ) = (y₁,…,yₙ)` into a conjunction of binary
/// equalities; the empty tuple is `⊤`.
pub fn tuple_equality(xs: &[String], ys: &[String]) -> Formula {
    let mut eqs = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| Formula::Eq(Term::Var(x.clone()), Term::Var(y.clone())));
    match eqs.next() {
        None => Formula::Top,
        Some(first) => eqs.fold(first, Formula::and),
    }
}

/// For each instance: the graded (in)equality of the rule holds exactly,
/// and crisp validity of the premises transfers to the conclusion.
pub fn check_rule_soundness(
    interp: &Interpretation,
    instances: &[RuleInstance],
) -> Result<Report, Error> {
    let mut report = Report::new("rules of inference");
    for (k, inst) in instances.iter().enumerate() {
        let tag = |law: &str| format!("instance {k}: {law}");
        match inst {
            RuleInstance::Identity { phi } => {
                let g = sequent_grade(phi, phi, interp)?;
                report.record(tag("gr(φ⊢φ) = 1"), g.is_one(), || format!("grade {g}"));
            }
            RuleInstance::Cut { phi, psi, chi } => {
                let g1 = sequent_grade(phi, psi, interp)?;
                let g2 = sequent_grade(psi, chi, interp)?;
                let g = sequent_grade(phi, chi, interp)?;
                report.record(
                    tag("gr(φ⊢ψ) ∧ gr(ψ⊢χ) ≤ gr(φ⊢χ)"),
                    g1.meet(g2) <= g,
                    || format!("{g1} ∧ {g2} > {g}"),
                );
                if is_valid(phi, psi, interp)? && is_valid(psi, chi, interp)? {
                    report.record(
                        tag("validity transfers through cut"),
                        is_valid(phi, chi, interp)?,
                        || "conclusion invalid".into(),
                    );
                }
            }
            RuleInstance::TopIntro { phi } => {
                let g = sequent_grade(phi, &Formula::Top, interp)?;
                report.record(tag("gr(φ⊢⊤) = 1"), g.is_one(), || format!("grade {g}"));
            }
            RuleInstance::AndProj { phi, psi } => {
                let conj = Formula::and(phi.clone(), psi.clone());
                let g1 = sequent_grade(&conj, phi, interp)?;
                let g2 = sequent_grade(&conj, psi, interp)?;
                report.record(tag("gr(φ∧ψ⊢φ) = 1"), g1.is_one(), || format!("grade {g1}"));
                report.record(tag("gr(φ∧ψ⊢ψ) = 1"), g2.is_one(), || format!("grade {g2}"));
            }
            RuleInstance::AndRight { phi, psi, chi } => {
                let lhs = sequent_grade(phi, psi, interp)?
                    .meet(sequent_grade(phi, chi, interp)?);
                let rhs =
                    sequent_grade(phi, &Formula::and(psi.clone(), chi.clone()), interp)?;
                report.record(
                    tag("gr(φ⊢ψ) ∧ gr(φ⊢χ) = gr(φ⊢ψ∧χ)"),
                    lhs == rhs,
                    || format!("{lhs} ≠ {rhs}"),
                );
                if is_valid(phi, psi, interp)? && is_valid(phi, chi, interp)? {
                    report.record(
                        tag("validity transfers through ∧-introduction"),
                        is_valid(phi, &Formula::and(psi.clone(), chi.clone()), interp)?,
                        || "conclusion invalid".into(),
                    );
                }
            }
            RuleInstance::JoinInj { family, index } => {
                let phi = &family[*index];
                let g = sequent_grade(phi, &Formula::Or(family.clone()), interp)?;
                report.record(tag("gr(φ⊢⋁S) = 1 for φ ∈ S"), g.is_one(), || {
                    format!("grade {g}")
                });
            }
            RuleInstance::JoinUniv { family, psi } => {
                let grades = family
                    .iter()
                    .map(|phi| sequent_grade(phi, psi, interp))
                    .collect::<Result<Vec<TruthValue>, Error>>()?;
                let inf = inf_family(grades);
                let g = sequent_grade(&Formula::Or(family.clone()), psi, interp)?;
                report.record(
                    tag("inf over S of gr(φ⊢ψ) ≤ gr(⋁S⊢ψ)"),
                    inf <= g,
                    || format!("{inf} > {g}"),
                );
                let mut all_valid = true;
                for phi in family {
                    all_valid = all_valid && is_valid(phi, psi, interp)?;
                }
                if all_valid {
                    report.record(
                        tag("validity transfers through ⋁-elimination"),
                        is_valid(&Formula::Or(family.clone()), psi, interp)?,
                        || "conclusion invalid".into(),
                    );
                }
            }
            RuleInstance::FrameDist { phi, family } => {
                let lhs = Formula::and(phi.clone(), Formula::Or(family.clone()));
                let rhs = Formula::Or(
                    family.iter().map(|psi| Formula::and(phi.clone(), psi.clone())).collect(),
                );
                let g = sequent_grade(&lhs, &rhs, interp)?;
                report.record(tag("gr(φ∧⋁S ⊢ ⋁{φ∧ψ}) = 1"), g.is_one(), || {
                    format!("grade {g}")
                });
            }
            RuleInstance::EqRefl { var } => {
                let eq = Formula::Eq(Term::Var(var.clone()), Term::Var(var.clone()));
                let g = sequent_grade(&Formula::Top, &eq, interp)?;
                report.record(tag("gr(⊤ ⊢ x=x) = 1"), g.is_one(), || format!("grade {g}"));
            }
            RuleInstance::EqSubst { xs, ys, phi } => {
                let eqs = tuple_equality(xs, ys);
                let lhs = Formula::and(eqs, phi.clone());
                let pairs: Vec<(String, Term)> = xs
                    .iter()
                    .zip(ys)
                    .map(|(x, y)| (x.clone(), Term::Var(y.clone())))
                    .collect();
                let rhs = subst_formula_parallel(phi, &pairs);
                let g = sequent_grade(&lhs, &rhs, interp)?;
                report.record(
                    tag("gr((x⃗=y⃗)∧φ ⊢ φ[y⃗/x⃗]) = 1"),
                    g.is_one(),
                    || format!("grade {g}"),
                );
            }
            RuleInstance::ExistsIntro { phi, psi, x, y } => {
                let subst = subst_formula(psi, &Term::Var(x.clone()), y);
                let g1 = sequent_grade(phi, &subst, interp)?;
                let g2 =
                    sequent_grade(phi, &Formula::exists(y.clone(), psi.clone()), interp)?;
                report.record(
                    tag("gr(φ⊢ψ[x/y]) ≤ gr(φ⊢∃yψ)"),
                    g1 <= g2,
                    || format!("{g1} > {g2}"),
                );
                if is_valid(phi, &subst, interp)? {
                    report.record(
                        tag("validity transfers through ∃-introduction"),
                        is_valid(phi, &Formula::exists(y.clone(), psi.clone()), interp)?,
                        || "conclusion invalid".into(),
                    );
                }
            }
            RuleInstance::ExistsElim { phi, psi, x, y } => {
                let g1 = sequent_grade(
                    &Formula::exists(y.clone(), phi.clone()),
                    psi,
                    interp,
                )?;
                let subst = subst_formula(phi, &Term::Var(x.clone()), y);
                let g2 = sequent_grade(&subst, psi, interp)?;
                report.record(
                    tag("gr(∃yφ⊢ψ) ≤ gr(φ[x/y]⊢ψ)"),
                    g1 <= g2,
                    || format!("{g1} > {g2}"),
                );
                if is_valid(&Formula::exists(y.clone(), phi.clone()), psi, interp)? {
                    report.record(
                        tag("validity transfers through ∃-elimination"),
                        is_valid(&subst, psi, interp)?,
                        || "conclusion invalid".into(),
                    );
                }
            }
            RuleInstance::Frobenius { phi, psi, y } => {
                let lhs = Formula::and(
                    phi.clone(),
                    Formula::exists(y.clone(), psi.clone()),
                );
                let rhs = Formula::exists(
                    y.clone(),
                    Formula::and(phi.clone(), psi.clone()),
                );
                let g = sequent_grade(&lhs, &rhs, interp)?;
                report.record(
                    tag("gr(φ∧∃yψ ⊢ ∃y(φ∧ψ)) = 1"),
                    g.is_one(),
                    || format!("grade {g}"),
                );
            }
        }
    }
    Ok(report)
}

/// A sampled configuration for the metatheorems.
#[derive(Debug, Clone)]
pub struct MetaSample {
    pub env: Environment,
    pub env_prime: Environment,
    pub phi: Formula,
    pub term: Term,
    pub term_prime: Term,
    pub var: String,
}

/// Local determination (terms and formulas) and the two substitution
/// clauses, verified on the samples.
pub fn check_metatheorems(
    interp: &Interpretation,
    samples: &[MetaSample],
) -> Result<Report, Error> {
    let mut report = Report::new("metatheorems");
    for (k, sample) in samples.iter().enumerate() {
        let tag = |law: &str| format!("sample {k}: {law}");
        // local determination for terms
        let mut tvars = std::collections::BTreeSet::new();
        sample.term.vars(&mut tvars);
        if tvars.iter().all(|v| sample.env.get(v) == sample.env_prime.get(v)) {
            report.record(
                tag("agree on term variables ⇒ s(t) = s'(t)"),
                eval_term(&sample.env, &sample.term, interp)?
                    == eval_term(&sample.env_prime, &sample.term, interp)?,
                || "term denotations differ".into(),
            );
        }
        // local determination for formulas
        let fv = sample.phi.free_vars();
        if fv.iter().all(|v| sample.env.get(v) == sample.env_prime.get(v)) {
            report.record(
                tag("agree on free variables ⇒ equal grades"),
                grade_sat(&sample.env, &sample.phi, interp)?
                    == grade_sat(&sample.env_prime, &sample.phi, interp)?,
                || "grades differ".into(),
            );
        }
        // substitution clause for terms: s(t[t'/x]) = s(s(t')/x)(t)
        let subbed = crate::logic::syntax::subst_term(&sample.term, &sample.term_prime, &sample.var);
        let lhs = eval_term(&sample.env, &subbed, interp)?;
        let tprime_val = eval_term(&sample.env, &sample.term_prime, interp)?;
        let rhs = eval_term(&sample.env.update(&sample.var, tprime_val), &sample.term, interp)?;
        report.record(tag("s(t[t'/x]) = s(s(t')/x)(t)"), lhs == rhs, || {
            format!("{lhs} ≠ {rhs}")
        });
        // substitution clause for formulas
        let phi_sub = subst_formula(&sample.phi, &sample.term, &sample.var);
        let lhs = grade_sat(&sample.env, &phi_sub, interp)?;
        let t_val = eval_term(&sample.env, &sample.term, interp)?;
        let rhs = grade_sat(&sample.env.update(&sample.var, t_val), &sample.phi, interp)?;
        report.record(
            tag("gr(s sat φ[t/x]) = gr(s(s(t)/x) sat φ)"),
            lhs == rhs,
            || format!("{lhs} ≠ {rhs}"),
        );
    }
    Ok(report)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    fn tv(p: i64, q: i64) -> TruthValue {
        TruthValue::new(p, q).unwrap()
    }

    pub(crate) fn two_point_interp() -> Interpretation {
        let mut predicates = BTreeMap::new();
        predicates.insert(
            "p".to_string(),
            PredTable { arity: 1, table: vec![tv(1, 5), tv(9, 10)] },
        );
        predicates.insert(
            "q".to_string(),
            PredTable { arity: 1, table: vec![tv(2, 5), tv(3, 5)] },
        );
        let mut functions = BTreeMap::new();
        functions.insert("f".to_string(), FnTable { arity: 1, table: vec![0, 1] });
        let mut constants = BTreeMap::new();
        constants.insert("c1".to_string(), 0);
        Interpretation {
            domain: vec!["d1".into(), "d2".into()],
            constants,
            functions,
            predicates,
        }
    }

    fn pvar(p: &str, x: &str) -> Formula {
        Formula::Pred(p.into(), vec![Term::Var(x.into())])
    }

    #[test]
    fn satisfaction_base_cases() {
        let interp = two_point_interp();
        let env = Environment::new(0);
        assert_eq!(grade_sat(&env, &Formula::Top, &interp).unwrap(), TruthValue::ONE);
        assert_eq!(grade_sat(&env, &Formula::Bot, &interp).unwrap(), TruthValue::ZERO);
        // constants and identity function
        assert_eq!(
            eval_term(&env, &Term::App("f".into(), vec![Term::Const("c1".into())]), &interp)
                .unwrap(),
            0
        );
        // sup over the domain
        let exists = Formula::exists("x", pvar("p", "x"));
        assert_eq!(grade_sat(&env, &exists, &interp).unwrap(), tv(9, 10));
        // min for conjunction: grades 1/5, 2/5 at d1
        let conj = Formula::and(pvar("p", "x"), pvar("q", "x"));
        assert_eq!(grade_sat(&env, &conj, &interp).unwrap(), tv(1, 5));
        // empty disjunction is 0
        assert_eq!(grade_sat(&env, &Formula::Or(vec![]), &interp).unwrap(), TruthValue::ZERO);
    }

    #[test]
    fn sequent_grades() {
        let interp = two_point_interp();
        let p = pvar("p", "x");
        let q = pvar("q", "x");
        assert!(sequent_grade(&p, &p, &interp).unwrap().is_one());
        assert!(sequent_grade(&p, &Formula::Top, &interp).unwrap().is_one());
        // arrows: d1: 1/5→2/5 = 1; d2: 9/10→3/5 = 3/5 ⇒ inf = 3/5
        assert_eq!(sequent_grade(&p, &q, &interp).unwrap(), tv(3, 5));
        assert!(!is_valid(&p, &q, &interp).unwrap());
        assert!(is_valid(&q, &Formula::Top, &interp).unwrap());
    }

    #[test]
    fn rule_instances_pass() {
        let interp = two_point_interp();
        let p = pvar("p", "x");
        let q = pvar("q", "x");
        let instances = vec![
            RuleInstance::Identity { phi: p.clone() },
            RuleInstance::Cut { phi: p.clone(), psi: q.clone(), chi: Formula::Top },
            RuleInstance::TopIntro { phi: p.clone() },
            RuleInstance::AndProj { phi: p.clone(), psi: q.clone() },
            RuleInstance::AndRight { phi: p.clone(), psi: q.clone(), chi: q.clone() },
            RuleInstance::JoinInj { family: vec![p.clone(), q.clone()], index: 0 },
            RuleInstance::JoinUniv { family: vec![p.clone(), q.clone()], psi: Formula::Top },
            RuleInstance::FrameDist { phi: p.clone(), family: vec![q.clone(), p.clone()] },
            RuleInstance::EqRefl { var: "x".into() },
            RuleInstance::EqSubst {
                xs: vec!["x".into()],
                ys: vec!["y".into()],
                phi: p.clone(),
            },
            RuleInstance::ExistsIntro {
                phi: p.clone(),
                psi: q.clone(),
                x: "x".into(),
                y: "x".into(),
            },
            RuleInstance::ExistsElim {
                phi: p.clone(),
                psi: Formula::Top,
                x: "x".into(),
                y: "x".into(),
            },
            RuleInstance::Frobenius { phi: p.clone(), psi: q.clone(), y: "y".into() },
        ];
        let report = check_rule_soundness(&interp, &instances).unwrap();
        assert!(report.ok(), "{report}");
    }

    #[test]
    fn metatheorem_samples_pass() {
        let interp = two_point_interp();
        let phi = Formula::and(pvar("p", "x"), Formula::exists("y", pvar("q", "y")));
        let samples = vec![
            MetaSample {
                env: Environment::new(0).with("x", 1).with("z", 0),
                env_prime: Environment::new(0).with("x", 1).with("z", 1),
                phi: phi.clone(),
                term: Term::App("f".into(), vec![Term::Var("x".into())]),
                term_prime: Term::Const("c1".into()),
                var: "x".into(),
            },
            MetaSample {
                env: Environment::new(1),
                env_prime: Environment::new(1),
                phi,
                term: Term::Var("y".into()),
                term_prime: Term::Var("x".into()),
                var: "y".into(),
            },
        ];
        let report = check_metatheorems(&interp, &samples).unwrap();
        assert!(report.ok(), "{report}");
    }

    #[test]
    fn classical_oracle_agrees_on_crisp_interpretations() {
        let mut interp = two_point_interp();
        interp.predicates.insert(
            "p".to_string(),
            PredTable { arity: 1, table: vec![TruthValue::ZERO, TruthValue::ONE] },
        );
        interp.predicates.insert(
            "q".to_string(),
            PredTable { arity: 1, table: vec![TruthValue::ONE, TruthValue::ZERO] },
        );
        let phi = Formula::or2(
            Formula::and(pvar("p", "x"), pvar("q", "x")),
            Formula::exists("y", pvar("p", "y")),
        );
        for env in environments_over(&["x".into()], 2, 0) {
            let graded = grade_sat(&env, &phi, &interp).unwrap();
            let classical = classical_sat(&env, &phi, &interp).unwrap();
            assert_eq!(graded.is_one(), classical);
        }
    }
}
