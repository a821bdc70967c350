//! The proof-file format: a JSON object with textual graded premises and a
//! derivation tree whose conclusions are textual sequents.
//!
//! ```json
//! {
//!   "premises": ["p(x) |- q(x) @ 3/5", "q(x) |- r(x) @ 4/5"],
//!   "tree": {
//!     "conclusion": "p(x) |- r(x)",
//!     "rule": "cut",
//!     "children": [
//!       {"conclusion": "p(x) |- q(x)", "rule": {"premise": 0}},
//!       {"conclusion": "q(x) |- r(x)", "rule": {"premise": 1}}
//!     ]
//!   }
//! }
//! ```
//!
//! Rule tags: `identity`, `cut`, `top-intro`, `and-left-1`, `and-left-2`,
//! `and-right`, `join-inj`, `join-univ`, `frame-dist`, `eq-refl`,
//! `eq-subst`, `frobenius`, `{"premise": n}`, `{"exists-intro": "x"}`,
//! `{"exists-elim": "x"}`.

use ftsys_core::logic::{parse_sequent, Derivation, RuleApp, Sequent, Signature};
use ftsys_core::truth::TruthValue;
use ftsys_core::Error;
use serde::Deserialize;

#[derive(Deserialize)]
struct ProofDoc {
    premises: Vec<String>,
    tree: NodeDoc,
}

#[derive(Deserialize)]
struct NodeDoc {
    conclusion: String,
    rule: RuleDoc,
    #[serde(default)]
    children: Vec<NodeDoc>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RuleDoc {
    Name(String),
    Premise { premise: usize },
    ExistsIntro {
        #[serde(rename = "exists-intro")]
        exists_intro: String,
    },
    ExistsElim {
        #[serde(rename = "exists-elim")]
        exists_elim: String,
    },
}

fn rule_of(doc: &RuleDoc) -> Result<RuleApp, Error> {
    Ok(match doc {
        RuleDoc::Premise { premise } => RuleApp::Premise(*premise),
        RuleDoc::ExistsIntro { exists_intro } => {
            RuleApp::ExistsIntro { x: exists_intro.clone() }
        }
        RuleDoc::ExistsElim { exists_elim } => RuleApp::ExistsElim { x: exists_elim.clone() },
        RuleDoc::Name(name) => match name.as_str() {
            "identity" => RuleApp::Identity,
            "cut" => RuleApp::Cut,
            "top-intro" => RuleApp::TopIntro,
            "and-left-1" => RuleApp::AndLeft1,
            "and-left-2" => RuleApp::AndLeft2,
            "and-right" => RuleApp::AndRight,
            "join-inj" => RuleApp::JoinInj,
            "join-univ" => RuleApp::JoinUniv,
            "frame-dist" => RuleApp::FrameDist,
            "eq-refl" => RuleApp::EqRefl,
            "eq-subst" => RuleApp::EqSubst,
            "frobenius" => RuleApp::Frobenius,
            other => {
                return Err(Error::structural(format!("unknown rule '{other}'")));
            }
        },
    })
}

fn node_of(doc: &NodeDoc, sig: &Signature) -> Result<Derivation, Error> {
    let (conclusion, _) = parse_sequent(&doc.conclusion, sig)?;
    let children = doc
        .children
        .iter()
        .map(|c| node_of(c, sig))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Derivation { conclusion, rule: rule_of(&doc.rule)?, children })
}

pub fn parse_proof(
    text: &str,
    sig: &Signature,
) -> Result<(Vec<(Sequent, TruthValue)>, Derivation), Error> {
    let doc: ProofDoc = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        col: e.column(),
        msg: e.to_string(),
    })?;
    let premises = doc
        .premises
        .iter()
        .map(|p| parse_sequent(p, sig))
        .collect::<Result<Vec<_>, _>>()?;
    let tree = node_of(&doc.tree, sig)?;
    Ok((premises, tree))
}

pub use ftsys_core::logic::parse_sequent;
