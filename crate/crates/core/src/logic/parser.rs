use crate::error::Error;
use crate::logic::derivation::Sequent;
use crate::logic::semantics::{FnTable, Interpretation, PredTable};
use crate::logic::syntax::{Formula, Signature, Term};
use crate::truth::TruthValue;
use std::collections::BTreeMap;

/// ASCII formula grammar:
///
/// ```text
/// formula  := disj
/// disj     := conj ('|' conj)*          n-ary disjunction via repetition
/// conj     := unit ('&' unit)*          left-associated binary conjunction
/// unit     := 'exists' IDENT '.' disj | atom
/// atom     := 'true' | 'false' | '(' formula ')'
///           | IDENT ['(' terms ')'] ['=' term]
/// ```
///
/// Identifiers are classified by the signature: declared constants and
/// function symbols build terms, declared predicate names build atoms, and
/// anything else is a variable.
struct Tokenizer<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    LParen,
    RParen,
    Comma,
    Amp,
    Pipe,
    Eq,
    Dot,
    Turnstile,
    At,
    End,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

impl<'a> Tokenizer<'a> {
    fn new(src: &'a str, line: usize) -> Self {
        Tokenizer { src, bytes: src.as_bytes(), pos: 0, line, col: 1 }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.line, col: self.col, msg: msg.into() }
    }

    fn bump(&mut self) {
        if self.bytes[self.pos] == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        self.pos += 1;
    }

    fn next_token(&mut self) -> Result<Spanned, Error> {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.bump();
        }
        let (line, col) = (self.line, self.col);
        if self.pos >= self.bytes.len() {
            return Ok(Spanned { tok: Tok::End, line, col });
        }
        let c = self.bytes[self.pos];
        let tok = match c {
            b'(' => {
                self.bump();
                Tok::LParen
            }
            b')' => {
                self.bump();
                Tok::RParen
            }
            b',' => {
                self.bump();
                Tok::Comma
            }
            b'&' => {
                self.bump();
                Tok::Amp
            }
            b'|' => {
                self.bump();
                if self.pos < self.bytes.len() && self.bytes[self.pos] == b'-' {
                    self.bump();
                    Tok::Turnstile
                } else {
                    Tok::Pipe
                }
            }
            b'=' => {
                self.bump();
                Tok::Eq
            }
            b'.' => {
                self.bump();
                Tok::Dot
            }
            b'@' => {
                self.bump();
                Tok::At
            }
            c if c.is_ascii_alphanumeric() || c == b'_' || c == b'/' => {
                let start = self.pos;
                while self.pos < self.bytes.len() {
                    let c = self.bytes[self.pos];
                    if c.is_ascii_alphanumeric() || c == b'_' || c == b'/' {
                        self.bump();
                    } else {
                        break;
                    }
                }
                Tok::Ident(self.src[start..self.pos].to_string())
            }
            other => {
                return Err(self.error(format!("unexpected character '{}'", other as char)))
            }
        };
        Ok(Spanned { tok, line, col })
    }
}

struct Parser<'a> {
    tokens: Vec<Spanned>,
    index: usize,
    sig: &'a Signature,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, sig: &'a Signature, line: usize) -> Result<Self, Error> {
        let mut tz = Tokenizer::new(src, line);
        let mut tokens = Vec::new();
        loop {
            let t = tz.next_token()?;
            let done = t.tok == Tok::End;
            tokens.push(t);
            if done {
                break;
            }
        }
        Ok(Parser { tokens, index: 0, sig })
    }

    fn peek(&self) -> &Spanned {
        &self.tokens[self.index]
    }

    fn advance(&mut self) -> Spanned {
        let t = self.tokens[self.index].clone();
        if self.index + 1 < self.tokens.len() {
            self.index += 1;
        }
        t
    }

    fn error_at(&self, msg: impl Into<String>) -> Error {
        let t = self.peek();
        Error::Parse { line: t.line, col: t.col, msg: msg.into() }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), Error> {
        if self.peek().tok == tok {
            self.advance();
            Ok(())
        } else {
            Err(self.error_at(format!("expected {what}")))
        }
    }

    fn formula(&mut self) -> Result<Formula, Error> {
        let first = self.conj()?;
        let mut items = vec![first];
        while self.peek().tok == Tok::Pipe {
            self.advance();
            items.push(self.conj()?);
        }
        Ok(if items.len() == 1 { items.pop().unwrap() } else { Formula::Or(items) })
    }

    fn conj(&mut self) -> Result<Formula, Error> {
        let mut acc = self.unit()?;
        while self.peek().tok == Tok::Amp {
            self.advance();
            acc = Formula::and(acc, self.unit()?);
        }
        Ok(acc)
    }

    fn unit(&mut self) -> Result<Formula, Error> {
        if let Tok::Ident(name) = &self.peek().tok {
            if name == "exists" {
                self.advance();
                let var = match self.advance().tok {
                    Tok::Ident(v) => v,
                    _ => return Err(self.error_at("expected a variable after 'exists'")),
                };
                self.expect(Tok::Dot, "'.' after the bound variable")?;
                let body = self.formula()?;
                return Ok(Formula::exists(var, body));
            }
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Formula, Error> {
        match self.peek().tok.clone() {
            Tok::LParen => {
                self.advance();
                let inner = self.formula()?;
                // a parenthesized term followed by '=' is not supported;
                // equality atoms parenthesize as a whole
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            Tok::Ident(name) if name == "true" => {
                self.advance();
                Ok(Formula::Top)
            }
            Tok::Ident(name) if name == "false" => {
                self.advance();
                Ok(Formula::Bot)
            }
            Tok::Ident(_) => {
                let t = self.term()?;
                if self.peek().tok == Tok::Eq {
                    self.advance();
                    let rhs = self.term()?;
                    return Ok(Formula::Eq(t, rhs));
                }
                // not an equality: the head must be a predicate
                match t {
                    Term::App(name, args) if self.sig.predicates.contains_key(&name) => {
                        Ok(Formula::Pred(name, args))
                    }
                    Term::Var(name) | Term::Const(name)
                        if self.sig.predicates.contains_key(&name) =>
                    {
                        Ok(Formula::Pred(name, vec![]))
                    }
                    other => Err(self.error_at(format!("{other} is not a predicate atom"))),
                }
            }
            _ => Err(self.error_at("expected a formula")),
        }
    }

    fn term(&mut self) -> Result<Term, Error> {
        let name = match self.advance().tok {
            Tok::Ident(n) => n,
            _ => return Err(self.error_at("expected a term")),
        };
        if self.peek().tok == Tok::LParen {
            self.advance();
            let mut args = Vec::new();
            if self.peek().tok != Tok::RParen {
                loop {
                    args.push(self.term()?);
                    if self.peek().tok == Tok::Comma {
                        self.advance();
                    } else {
                        break;
                    }
                }
            }
            self.expect(Tok::RParen, "')'")?;
            return Ok(Term::App(name, args));
        }
        if self.sig.constants.contains(&name) {
            Ok(Term::Const(name))
        } else {
            Ok(Term::Var(name))
        }
    }
}

/// Parses a single formula against a signature.
pub fn parse_formula(text: &str, sig: &Signature) -> Result<Formula, Error> {
    parse_formula_at(text, sig, 1)
}

fn parse_formula_at(text: &str, sig: &Signature, line: usize) -> Result<Formula, Error> {
    let mut parser = Parser::new(text, sig, line)?;
    let phi = parser.formula()?;
    if parser.peek().tok != Tok::End {
        return Err(parser.error_at("trailing input after the formula"));
    }
    sig.check_formula(&phi).map_err(|e| Error::Parse {
        line,
        col: 1,
        msg: e.to_string(),
    })?;
    Ok(phi)
}

/// Parses `phi |- psi` with an optional `@ p/q` grade (default 1).
pub fn parse_sequent(text: &str, sig: &Signature) -> Result<(Sequent, TruthValue), Error> {
    parse_sequent_at(text, sig, 1)
}

fn parse_sequent_at(
    text: &str,
    sig: &Signature,
    line: usize,
) -> Result<(Sequent, TruthValue), Error> {
    let mut parser = Parser::new(text, sig, line)?;
    let lhs = parser.formula()?;
    parser.expect(Tok::Turnstile, "'|-'")?;
    let rhs = parser.formula()?;
    let grade = if parser.peek().tok == Tok::At {
        parser.advance();
        match parser.advance().tok {
            Tok::Ident(v) => v
                .parse::<TruthValue>()
                .map_err(|e| Error::Parse { line, col: 1, msg: e.to_string() })?,
            _ => return Err(parser.error_at("expected a rational grade after '@'")),
        }
    } else {
        TruthValue::ONE
    };
    if parser.peek().tok != Tok::End {
        return Err(parser.error_at("trailing input after the sequent"));
    }
    for f in [&lhs, &rhs] {
        sig.check_formula(f).map_err(|e| Error::Parse { line, col: 1, msg: e.to_string() })?;
    }
    Ok((Sequent::new(lhs, rhs), grade))
}

/// A parsed theory file: signature, finite interpretation, graded sequents,
/// and auxiliary formulas.
#[derive(Debug, Clone)]
pub struct Theory {
    pub signature: Signature,
    pub interpretation: Interpretation,
    pub sequents: Vec<(Sequent, TruthValue)>,
    pub formulas: Vec<Formula>,
    pub default_element: usize,
}

/// Parses the line-based theory format:
///
/// ```text
/// # comment
/// domain: d1 d2
/// default: d1
/// constant c1 = d1
/// function f/1: d1 -> d2, d2 -> d1
/// predicate p/1: d1 = 1/2, d2 = 3/4
/// sequent: p(x) |- q(x) @ 1/2
/// formula: p(x) & q(x)
/// ```
///
/// Function tables must be total; unlisted predicate entries default to 0.
pub fn parse_theory(text: &str) -> Result<Theory, Error> {
    let mut domain: Vec<String> = Vec::new();
    let mut default_element = 0usize;
    let mut constants = BTreeMap::new();
    let mut functions: BTreeMap<String, FnTable> = BTreeMap::new();
    let mut predicates: BTreeMap<String, PredTable> = BTreeMap::new();
    let mut pending: Vec<(usize, String, String)> = Vec::new(); // sequents/formulas by line

    let err = |line: usize, msg: String| Error::Parse { line, col: 1, msg };
    let elem = |domain: &[String], name: &str, line: usize| -> Result<usize, Error> {
        domain
            .iter()
            .position(|d| d == name)
            .ok_or_else(|| err(line, format!("unknown domain element {name}")))
    };

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (head, rest) = trimmed
            .split_once(|c: char| c == ':' || c.is_whitespace())
            .ok_or_else(|| err(line, "expected 'keyword: ...'".into()))?;
        let rest = rest.trim();
        match head.trim() {
            "domain" => {
                domain = rest.split_whitespace().map(|s| s.to_string()).collect();
                if domain.is_empty() {
                    return Err(err(line, "empty domain".into()));
                }
            }
            "default" => default_element = elem(&domain, rest, line)?,
            "constant" => {
                let (name, value) = rest
                    .split_once('=')
                    .ok_or_else(|| err(line, "expected 'constant name = element'".into()))?;
                constants.insert(name.trim().to_string(), elem(&domain, value.trim(), line)?);
            }
            "function" => {
                let (decl, body) = rest
                    .split_once(':')
                    .ok_or_else(|| err(line, "expected 'function f/k: entries'".into()))?;
                let (name, arity) = decl
                    .trim()
                    .split_once('/')
                    .ok_or_else(|| err(line, "expected 'f/k'".into()))?;
                let arity: usize =
                    arity.parse().map_err(|_| err(line, "bad arity".into()))?;
                let n = domain.len();
                let mut table = vec![usize::MAX; n.pow(arity as u32)];
                for entry in body.split(',') {
                    let (args, value) = entry
                        .split_once("->")
                        .ok_or_else(|| err(line, "expected 'args -> value'".into()))?;
                    let idx = parse_tuple(args, arity, &domain, line)?;
                    table[idx] = elem(&domain, value.trim(), line)?;
                }
                if table.iter().any(|&v| v == usize::MAX) {
                    return Err(err(line, format!("function {name} is not total")));
                }
                functions.insert(name.trim().to_string(), FnTable { arity, table });
            }
            "predicate" => {
                let (decl, body) = rest
                    .split_once(':')
                    .ok_or_else(|| err(line, "expected 'predicate p/k: entries'".into()))?;
                let (name, arity) = decl
                    .trim()
                    .split_once('/')
                    .ok_or_else(|| err(line, "expected 'p/k'".into()))?;
                let arity: usize =
                    arity.parse().map_err(|_| err(line, "bad arity".into()))?;
                let n = domain.len();
                let mut table = vec![TruthValue::ZERO; n.pow(arity as u32)];
                if !body.trim().is_empty() {
                    for entry in body.split(',') {
                        let (args, value) = entry
                            .split_once('=')
                            .ok_or_else(|| err(line, "expected 'args = p/q'".into()))?;
                        let idx = parse_tuple(args, arity, &domain, line)?;
                        table[idx] = value
                            .trim()
                            .parse()
                            .map_err(|e: Error| err(line, e.to_string()))?;
                    }
                }
                predicates.insert(name.trim().to_string(), PredTable { arity, table });
            }
            "sequent" => pending.push((line, "sequent".into(), rest.to_string())),
            "formula" => pending.push((line, "formula".into(), rest.to_string())),
            other => return Err(err(line, format!("unknown keyword '{other}'"))),
        }
    }
    if domain.is_empty() {
        return Err(err(1, "theory declares no domain".into()));
    }
    let interpretation = Interpretation {
        domain,
        constants,
        functions,
        predicates,
    };
    interpretation.check().map_err(|e| err(1, e.to_string()))?;
    let signature = interpretation.signature();
    let mut sequents = Vec::new();
    let mut formulas = Vec::new();
    for (line, kind, body) in pending {
        if kind == "sequent" {
            sequents.push(parse_sequent_at(&body, &signature, line)?);
        } else {
            formulas.push(parse_formula_at(&body, &signature, line)?);
        }
    }
    Ok(Theory { signature, interpretation, sequents, formulas, default_element })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig() -> Signature {
        let mut s = Signature::default();
        s.constants.insert("c1".into());
        s.predicates.insert("p".into(), 1);
        s.predicates.insert("q".into(), 1);
        s.predicates.insert("r".into(), 2);
        s.functions.insert("f".into(), 1);
        s
    }

    #[test]
    fn connective_shapes() {
        let sig = sig();
        let phi = parse_formula("p(x) & (q(x) | r(x, c1))", &sig).unwrap();
        match phi {
            Formula::And(_, rhs) => match *rhs {
                Formula::Or(items) => assert_eq!(items.len(), 2),
                other => panic!("expected a disjunction, got {other}"),
            },
            other => panic!("expected a conjunction, got {other}"),
        }
        assert_eq!(parse_formula("true", &sig).unwrap(), Formula::Top);
        assert_eq!(parse_formula("false", &sig).unwrap(), Formula::Bot);
        let ex = parse_formula("exists x. p(x)", &sig).unwrap();
        assert!(matches!(ex, Formula::Exists(..)));
        let nary = parse_formula("p(x) | q(x) | p(c1)", &sig).unwrap();
        assert!(matches!(nary, Formula::Or(items) if items.len() == 3));
        let eq = parse_formula("f(x) = c1", &sig).unwrap();
        assert!(matches!(eq, Formula::Eq(Term::App(..), Term::Const(..))));
    }

    #[test]
    fn print_parse_round_trip() {
        let sig = sig();
        for text in [
            "p(x)",
            "(p(x) & q(x))",
            "(p(x) | q(c1) | false)",
            "exists y. (p(y) & (f(y) = c1))",
            "(x = y)",
            "true",
        ] {
            let phi = parse_formula(text, &sig).unwrap();
            let printed = phi.to_string();
            let again = parse_formula(&printed, &sig).unwrap();
            assert_eq!(phi, again, "failed on {text} -> {printed}");
        }
    }

    #[test]
    fn errors_carry_positions() {
        let sig = sig();
        match parse_formula("p(x) &", &sig) {
            Err(Error::Parse { line: 1, col, .. }) => assert!(col >= 6),
            other => panic!("expected a parse error, got {other:?}"),
        }
        assert!(parse_formula("r(x)", &sig).is_err()); // arity
    }

    #[test]
    fn theory_files_parse() {
        let text = "\
# toy theory
domain: d1 d2
default: d2
constant c1 = d1
function f/1: d1 -> d2, d2 -> d1
predicate p/1: d1 = 1/5, d2 = 9/10
predicate q/1: d1 = 2/5, d2 = 3/5
sequent: p(x) |- q(x) @ 1/2
sequent: q(x) |- true
formula: exists x. p(x)
";
        let theory = parse_theory(text).unwrap();
        assert_eq!(theory.interpretation.domain.len(), 2);
        assert_eq!(theory.default_element, 1);
        assert_eq!(theory.sequents.len(), 2);
        assert_eq!(theory.sequents[0].1, TruthValue::new(1, 2).unwrap());
        assert_eq!(theory.sequents[1].1, TruthValue::ONE);
        assert_eq!(theory.formulas.len(), 1);
        // a partial function table is an error, with its line number
        let broken = "domain: d1 d2\nfunction f/1: d1 -> d2\n";
        match parse_theory(broken) {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("expected a line-2 error, got {other:?}"),
        }
    }
}

fn parse_tuple(
    args: &str,
    arity: usize,
    domain: &[String],
    line: usize,
) -> Result<usize, Error> {
    let err = |msg: String| Error::Parse { line, col: 1, msg };
    let cleaned = args.trim().trim_start_matches('(').trim_end_matches(')');
    let parts: Vec<&str> = if cleaned.contains(',') {
        cleaned.split(',').map(|s| s.trim()).collect()
    } else {
        cleaned.split_whitespace().collect()
    };
    if parts.len() != arity {
        return Err(err(format!("expected {arity} argument(s), found {}", parts.len())));
    }
    let mut idx = 0;
    for p in parts {
        let e = domain
            .iter()
            .position(|d| d == p)
            .ok_or_else(|| err(format!("unknown domain element {p}")))?;
        idx = idx * domain.len() + e;
    }
    Ok(idx)
}
