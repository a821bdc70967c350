use crate::error::Error;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// First-order terms over constants, variables and function symbols.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Term {
    Const(String),
    Var(String),
    App(String, Vec<Term>),
}

impl Term {
    pub fn vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Const(_) => {}
            Term::Var(x) => {
                out.insert(x.clone());
            }
            Term::App(_, args) => args.iter().for_each(|t| t.vars(out)),
        }
    }
}

/// Geometric formulas: `⊤`, `⊥`, predicate applications, term equality,
/// binary conjunction, finite disjunction (possibly empty), and `∃`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Formula {
    Top,
    Bot,
    Pred(String, Vec<Term>),
    Eq(Term, Term),
    And(Box<Formula>, Box<Formula>),
    Or(Vec<Formula>),
    Exists(String, Box<Formula>),
}

impl Formula {
    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or2(a: Formula, b: Formula) -> Formula {
        Formula::Or(vec![a, b])
    }

    pub fn exists(x: impl Into<String>, body: Formula) -> Formula {
        Formula::Exists(x.into(), Box::new(body))
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut out, &mut BTreeSet::new());
        out
    }

    fn collect_free(&self, out: &mut BTreeSet<String>, bound: &mut BTreeSet<String>) {
        match self {
            Formula::Top | Formula::Bot => {}
            Formula::Pred(_, args) => {
                let mut vars = BTreeSet::new();
                args.iter().for_each(|t| t.vars(&mut vars));
                out.extend(vars.into_iter().filter(|v| !bound.contains(v)));
            }
            Formula::Eq(a, b) => {
                let mut vars = BTreeSet::new();
                a.vars(&mut vars);
                b.vars(&mut vars);
                out.extend(vars.into_iter().filter(|v| !bound.contains(v)));
            }
            Formula::And(a, b) => {
                a.collect_free(out, bound);
                b.collect_free(out, bound);
            }
            Formula::Or(items) => items.iter().for_each(|f| f.collect_free(out, bound)),
            Formula::Exists(x, body) => {
                let fresh = bound.insert(x.clone());
                body.collect_free(out, bound);
                if fresh {
                    bound.remove(x);
                }
            }
        }
    }

    /// Nesting depth, with atoms at depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Top | Formula::Bot | Formula::Pred(..) | Formula::Eq(..) => 0,
            Formula::And(a, b) => 1 + a.depth().max(b.depth()),
            Formula::Or(items) => 1 + items.iter().map(Formula::depth).max().unwrap_or(0),
            Formula::Exists(_, body) => 1 + body.depth(),
        }
    }
}

/// `t[t'/x]`: replace every occurrence of the variable `x` in `t` by `t'`.
pub fn subst_term(t: &Term, replacement: &Term, x: &str) -> Term {
    match t {
        Term::Const(_) => t.clone(),
        Term::Var(v) => {
            if v == x {
                replacement.clone()
            } else {
                t.clone()
            }
        }
        Term::App(f, args) => Term::App(
            f.clone(),
            args.iter().map(|a| subst_term(a, replacement, x)).collect(),
        ),
    }
}

/// `φ[t/x]`: replace every free occurrence of `x`; a quantifier binding `x`
/// stops the substitution.
pub fn subst_formula(phi: &Formula, t: &Term, x: &str) -> Formula {
    match phi {
        Formula::Top | Formula::Bot => phi.clone(),
        Formula::Pred(p, args) => {
            Formula::Pred(p.clone(), args.iter().map(|a| subst_term(a, t, x)).collect())
        }
        Formula::Eq(a, b) => Formula::Eq(subst_term(a, t, x), subst_term(b, t, x)),
        Formula::And(a, b) => Formula::and(subst_formula(a, t, x), subst_formula(b, t, x)),
        Formula::Or(items) => {
            Formula::Or(items.iter().map(|f| subst_formula(f, t, x)).collect())
        }
        Formula::Exists(y, body) => {
            if y == x {
                phi.clone()
            } else {
                Formula::exists(y.clone(), subst_formula(body, t, x))
            }
        }
    }
}

/// Simultaneous substitution `φ[t⃗/x⃗]`: all replacements happen in parallel,
/// so later pairs never rewrite the output of earlier ones.
pub fn subst_formula_parallel(phi: &Formula, pairs: &[(String, Term)]) -> Formula {
    fn term(t: &Term, pairs: &[(String, Term)]) -> Term {
        match t {
            Term::Const(_) => t.clone(),
            Term::Var(v) => pairs
                .iter()
                .find(|(x, _)| x == v)
                .map(|(_, r)| r.clone())
                .unwrap_or_else(|| t.clone()),
            Term::App(f, args) => {
                Term::App(f.clone(), args.iter().map(|a| term(a, pairs)).collect())
            }
        }
    }
    match phi {
        Formula::Top | Formula::Bot => phi.clone(),
        Formula::Pred(p, args) => {
            Formula::Pred(p.clone(), args.iter().map(|a| term(a, pairs)).collect())
        }
        Formula::Eq(a, b) => Formula::Eq(term(a, pairs), term(b, pairs)),
        Formula::And(a, b) => Formula::and(
            subst_formula_parallel(a, pairs),
            subst_formula_parallel(b, pairs),
        ),
        Formula::Or(items) => {
            Formula::Or(items.iter().map(|f| subst_formula_parallel(f, pairs)).collect())
        }
        Formula::Exists(y, body) => {
            let remaining: Vec<(String, Term)> =
                pairs.iter().filter(|(x, _)| x != y).cloned().collect();
            Formula::exists(y.clone(), subst_formula_parallel(body, &remaining))
        }
    }
}

/// A first-order signature: constants, function arities, predicate arities.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signature {
    pub constants: BTreeSet<String>,
    pub functions: BTreeMap<String, usize>,
    pub predicates: BTreeMap<String, usize>,
}

impl Signature {
    pub fn check_term(&self, t: &Term) -> Result<(), Error> {
        match t {
            Term::Const(c) => {
                if self.constants.contains(c) {
                    Ok(())
                } else {
                    Err(Error::structural(format!("undeclared constant {c}")))
                }
            }
            Term::Var(_) => Ok(()),
            Term::App(f, args) => {
                let arity = self
                    .functions
                    .get(f)
                    .ok_or_else(|| Error::structural(format!("undeclared function {f}")))?;
                if args.len() != *arity {
                    return Err(Error::structural(format!(
                        "function {f} applied to {} arguments, arity {arity}",
                        args.len()
                    )));
                }
                args.iter().try_for_each(|a| self.check_term(a))
            }
        }
    }

    pub fn check_formula(&self, phi: &Formula) -> Result<(), Error> {
        match phi {
            Formula::Top | Formula::Bot => Ok(()),
            Formula::Pred(p, args) => {
                let arity = self
                    .predicates
                    .get(p)
                    .ok_or_else(|| Error::structural(format!("undeclared predicate {p}")))?;
                if args.len() != *arity {
                    return Err(Error::structural(format!(
                        "predicate {p} applied to {} arguments, arity {arity}",
                        args.len()
                    )));
                }
                args.iter().try_for_each(|a| self.check_term(a))
            }
            Formula::Eq(a, b) => {
                self.check_term(a)?;
                self.check_term(b)
            }
            Formula::And(a, b) => {
                self.check_formula(a)?;
                self.check_formula(b)
            }
            Formula::Or(items) => items.iter().try_for_each(|f| self.check_formula(f)),
            Formula::Exists(_, body) => self.check_formula(body),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Const(c) => write!(f, "{c}"),
            Term::Var(v) => write!(f, "{v}"),
            Term::App(name, args) => {
                write!(f, "{name}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Top => write!(f, "true"),
            Formula::Bot => write!(f, "false"),
            Formula::Pred(p, args) => {
                if args.is_empty() {
                    write!(f, "{p}")
                } else {
                    write!(f, "{p}(")?;
                    for (i, a) in args.iter().enumerate() {
                        if i > 0 {
                            write!(f, ", ")?;
                        }
                        write!(f, "{a}")?;
                    }
                    write!(f, ")")
                }
            }
            Formula::Eq(a, b) => write!(f, "({a} = {b})"),
            Formula::And(a, b) => write!(f, "({a} & {b})"),
            Formula::Or(items) => {
                if items.is_empty() {
                    return write!(f, "false");
                }
                write!(f, "(")?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, " | ")?;
                    }
                    write!(f, "{item}")?;
                }
                write!(f, ")")
            }
            Formula::Exists(x, body) => write!(f, "exists {x}. {body}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(x: &str) -> Term {
        Term::Var(x.into())
    }

    #[test]
    fn substitution_base_cases() {
        let t = Term::Const("c".into());
        assert_eq!(subst_term(&var("x"), &t, "x"), t);
        assert_eq!(subst_term(&var("y"), &t, "x"), var("y"));
        let fx = Term::App("f".into(), vec![var("x")]);
        assert_eq!(subst_term(&fx, &t, "x"), Term::App("f".into(), vec![t.clone()]));
    }

    #[test]
    fn bound_variable_guard() {
        let body = Formula::Pred("p".into(), vec![var("x")]);
        let phi = Formula::exists("x", body.clone());
        let t = Term::Const("c".into());
        // substituting for the bound variable leaves the formula unchanged
        assert_eq!(subst_formula(&phi, &t, "x"), phi);
        // a different variable substitutes inside
        let psi = Formula::exists("y", body);
        let expected = Formula::exists(
            "y",
            Formula::Pred("p".into(), vec![t.clone()]),
        );
        assert_eq!(subst_formula(&psi, &t, "x"), expected);
        assert_eq!(subst_formula(&Formula::Top, &t, "x"), Formula::Top);
    }

    #[test]
    fn parallel_substitution_is_simultaneous() {
        // φ = p(x, y); [y/x, x/y] swaps rather than chains
        let phi = Formula::Pred("p".into(), vec![var("x"), var("y")]);
        let pairs = vec![("x".to_string(), var("y")), ("y".to_string(), var("x"))];
        let swapped = subst_formula_parallel(&phi, &pairs);
        assert_eq!(swapped, Formula::Pred("p".into(), vec![var("y"), var("x")]));
    }

    #[test]
    fn free_variables_respect_binders() {
        let phi = Formula::and(
            Formula::exists("x", Formula::Pred("p".into(), vec![var("x"), var("y")])),
            Formula::Pred("q".into(), vec![var("x")]),
        );
        let fv = phi.free_vars();
        assert!(fv.contains("x")); // the conjunct's x is free
        assert!(fv.contains("y"));
        assert_eq!(fv.len(), 2);
    }
}
