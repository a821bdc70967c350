//! Fuzzy geometric logic with graded consequence: terms and geometric
//! formulas, substitution, graded satisfaction over finite interpretations,
//! sequent grades, rule soundness, derivation checking, the Lindenbaum
//! construction, and the propositional theory of a graded space.

mod derivation;
mod lindenbaum;
mod parser;
mod semantics;
mod syntax;

pub use derivation::{check_derivation, Derivation, DerivationOutcome, RuleApp, Sequent};
pub use lindenbaum::{
    check_theory_lemmas, lindenbaum, theory_from_space, GradedTheory, LindenbaumOutcome,
    PropFormula,
};
pub use parser::{parse_formula, parse_sequent, parse_theory, Theory};
pub use semantics::{
    check_metatheorems, check_rule_soundness, classical_sat, environments_over, eval_term,
    grade_sat, is_valid, sequent_grade, Environment, FnTable, Interpretation, MetaSample,
    PredTable, RuleInstance,
};
pub use syntax::{subst_formula, subst_formula_parallel, subst_term, Formula, Signature, Term};
