//! The self-describing JSON container format: one `kind`-tagged document
//! type for frames, spaces, systems, algebras, and n̄-fuzzy Boolean
//! systems, with conversions to and from the core types.
//!
//! Frames serialize as element names plus the cover relation (Hasse
//! edges); the order is recovered as the reflexive-transitive closure.
//! Rational literals use the `"p/q"` (or `"0"`/`"1"`) syntax everywhere.

use crate::error::Error;
use crate::fuzzyset::{Carrier, FuzzySubset};
use crate::lattice::{FiniteFrame, FinitePoset};
use crate::mvn::{FBSysN, LnAlgebra};
use crate::space::{Flavor, FuzzyTopSpace};
use crate::system::FuzzyTopSystem;
use crate::truth::{FiniteChain, TruthValue, ValueChain};
use serde::{Deserialize, Serialize};

/// A named open: membership values aligned with the carrier order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OpenDoc {
    pub name: String,
    pub membership: Vec<TruthValue>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FrameDoc {
    pub elements: Vec<String>,
    /// Hasse edges `(lower, upper)` by element index.
    pub cover: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FlavorDoc {
    Plain,
    Stratified { chain: Vec<TruthValue> },
    NValued { n: usize },
    Graded,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpaceDoc {
    pub carrier: Vec<String>,
    pub flavor: FlavorDoc,
    pub opens: Vec<OpenDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SystemDoc {
    pub points: Vec<String>,
    pub frame: FrameDoc,
    /// Row-major: one row of rationals per point.
    pub sat: Vec<Vec<TruthValue>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlgebraRepr {
    Chain,
    Functions { points: Vec<String>, generators: Vec<Vec<usize>> },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub n: usize,
    pub representation: AlgebraRepr,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FbSystemDoc {
    pub points: Vec<String>,
    pub algebra: AlgebraDoc,
    /// Chain indices, row-major.
    pub sat: Vec<Vec<usize>>,
}

/// The system document extended with a fuzzy carrier and its value chain.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LSystemDoc {
    pub points: Vec<String>,
    pub membership: Vec<TruthValue>,
    pub chain: Vec<TruthValue>,
    pub frame: FrameDoc,
    pub sat: Vec<Vec<TruthValue>>,
}

/// The format's top-level object.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Document {
    Frame(FrameDoc),
    Space(SpaceDoc),
    System(SystemDoc),
    Algebra(AlgebraDoc),
    FbSystem(FbSystemDoc),
    LSystem(LSystemDoc),
}

impl Document {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn from_json(text: &str) -> Result<Document, Error> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            col: e.column(),
            msg: e.to_string(),
        })
    }
}

pub fn frame_to_doc(frame: &FiniteFrame) -> FrameDoc {
    let n = frame.len();
    let mut cover = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && frame.le(i, j) {
                let covered =
                    (0..n).any(|k| k != i && k != j && frame.le(i, k) && frame.le(k, j));
                if !covered {
                    cover.push((i, j));
                }
            }
        }
    }
    FrameDoc { elements: frame.names().to_vec(), cover }
}

pub fn frame_from_doc(doc: &FrameDoc) -> Result<FiniteFrame, Error> {
    let poset = FinitePoset::from_cover(doc.elements.clone(), &doc.cover)?;
    FiniteFrame::from_poset(poset)
}

pub fn space_to_doc(space: &FuzzyTopSpace) -> SpaceDoc {
    let flavor = match space.flavor() {
        Flavor::Plain => FlavorDoc::Plain,
        Flavor::Stratified { chain } => FlavorDoc::Stratified { chain: chain.values().to_vec() },
        Flavor::NValued { chain } => FlavorDoc::NValued { n: chain.n() },
        Flavor::Graded => FlavorDoc::Graded,
    };
    SpaceDoc {
        carrier: space.carrier().points().to_vec(),
        flavor,
        opens: space
            .opens()
            .iter()
            .enumerate()
            .map(|(i, o)| OpenDoc { name: format!("T{i}"), membership: o.values().to_vec() })
            .collect(),
    }
}

pub fn space_from_doc(doc: &SpaceDoc) -> Result<FuzzyTopSpace, Error> {
    let carrier = Carrier::new(doc.carrier.clone());
    let flavor = match &doc.flavor {
        FlavorDoc::Plain => Flavor::Plain,
        FlavorDoc::Stratified { chain } => {
            Flavor::Stratified { chain: FiniteChain::from_values(chain.iter().copied()) }
        }
        FlavorDoc::NValued { n } => Flavor::NValued { chain: ValueChain::new(*n)? },
        FlavorDoc::Graded => Flavor::Graded,
    };
    let opens = doc
        .opens
        .iter()
        .map(|o| FuzzySubset::new(carrier.clone(), o.membership.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    FuzzyTopSpace::new(carrier, opens, flavor)
}

pub fn system_to_doc(system: &FuzzyTopSystem) -> SystemDoc {
    SystemDoc {
        points: system.points().points().to_vec(),
        frame: frame_to_doc(system.frame()),
        sat: system.sat_matrix().clone(),
    }
}

pub fn system_from_doc(doc: &SystemDoc) -> Result<FuzzyTopSystem, Error> {
    let frame = frame_from_doc(&doc.frame)?;
    FuzzyTopSystem::new(Carrier::new(doc.points.clone()), frame, doc.sat.clone())
}

pub fn algebra_to_doc(algebra: &LnAlgebra) -> AlgebraDoc {
    let generators: Vec<Vec<usize>> = algebra
        .generators()
        .iter()
        .map(|&g| algebra.elements()[g].clone())
        .collect();
    if algebra.points().len() == 1 && generators.is_empty() {
        AlgebraDoc { n: algebra.n(), representation: AlgebraRepr::Chain }
    } else {
        AlgebraDoc {
            n: algebra.n(),
            representation: AlgebraRepr::Functions {
                points: algebra.points().to_vec(),
                generators,
            },
        }
    }
}

pub fn algebra_from_doc(doc: &AlgebraDoc) -> Result<LnAlgebra, Error> {
    match &doc.representation {
        AlgebraRepr::Chain => LnAlgebra::chain_algebra(doc.n),
        AlgebraRepr::Functions { points, generators } => {
            LnAlgebra::function_algebra(doc.n, points, generators)
        }
    }
}

pub fn fb_system_to_doc(system: &FBSysN) -> FbSystemDoc {
    FbSystemDoc {
        points: system.points().points().to_vec(),
        algebra: algebra_to_doc(system.algebra()),
        sat: (0..system.points().len())
            .map(|x| (0..system.algebra().len()).map(|a| system.sat_idx(x, a)).collect())
            .collect(),
    }
}

pub fn fb_system_from_doc(doc: &FbSystemDoc) -> Result<FBSysN, Error> {
    let algebra = algebra_from_doc(&doc.algebra)?;
    FBSysN::new(Carrier::new(doc.points.clone()), algebra, doc.sat.clone())
}

pub fn l_system_to_doc(system: &crate::varbasis::LTopSystem) -> LSystemDoc {
    LSystemDoc {
        points: system.base().carrier().points().to_vec(),
        membership: system.base().subset().values().to_vec(),
        chain: system.base().chain().values().to_vec(),
        frame: frame_to_doc(system.frame()),
        sat: system.sat_matrix().clone(),
    }
}

pub fn l_system_from_doc(doc: &LSystemDoc) -> Result<crate::varbasis::LTopSystem, Error> {
    let carrier = Carrier::new(doc.points.clone());
    let chain = FiniteChain::from_values(doc.chain.iter().copied());
    let base = crate::fuzzyset::LFuzzySet::new(
        FuzzySubset::new(carrier, doc.membership.clone())?,
        chain,
    )?;
    let frame = frame_from_doc(&doc.frame)?;
    crate::varbasis::LTopSystem::new(base, frame, doc.sat.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::generate_topology;
    use proptest::prelude::*;

    fn tv(p: i64, q: i64) -> TruthValue {
        TruthValue::new(p, q).unwrap()
    }

    #[test]
    fn frame_docs_round_trip() {
        let frame = FiniteFrame::chain(4).unwrap();
        let doc = frame_to_doc(&frame);
        let back = frame_from_doc(&doc).unwrap();
        assert_eq!(back.names(), frame.names());
        for i in 0..frame.len() {
            for j in 0..frame.len() {
                assert_eq!(back.le(i, j), frame.le(i, j));
            }
        }
    }

    #[test]
    fn documents_tag_their_kind() {
        let frame = FiniteFrame::two();
        let json = Document::Frame(frame_to_doc(&frame)).to_json();
        assert!(json.contains("\"kind\": \"frame\""));
        match Document::from_json(&json).unwrap() {
            Document::Frame(doc) => assert_eq!(doc.elements.len(), 2),
            other => panic!("wrong kind: {other:?}"),
        }
    }

    #[test]
    fn space_and_system_docs_round_trip() {
        let carrier = Carrier::new(["x", "y"]);
        let t = FuzzySubset::new(carrier.clone(), vec![tv(1, 2), tv(1, 4)]).unwrap();
        let space = generate_topology(&carrier, &[t], Flavor::Plain).unwrap();
        let doc = space_to_doc(&space);
        let back = space_from_doc(&doc).unwrap();
        assert_eq!(back.opens().len(), space.opens().len());

        let system = crate::system::j(&space).unwrap();
        let sys_doc = system_to_doc(&system);
        let sys_back = system_from_doc(&sys_doc).unwrap();
        assert_eq!(sys_back.sat_matrix(), system.sat_matrix());
        assert!(crate::system::check_system(&sys_back).ok());
    }

    #[test]
    fn algebra_docs_round_trip() {
        let a = LnAlgebra::function_algebra(3, &["x".into(), "y".into()], &[vec![2, 0]]).unwrap();
        let doc = algebra_to_doc(&a);
        let back = algebra_from_doc(&doc).unwrap();
        assert_eq!(back.elements(), a.elements());
        let json = Document::Algebra(doc).to_json();
        assert!(Document::from_json(&json).is_ok());
    }

    proptest! {
        // serialization is exact: rationals survive the JSON round trip
        #[test]
        fn truth_values_round_trip(p in 0i64..=60, q in 1i64..=60) {
            let (p, q) = if p > q { (q, p) } else { (p, q) };
            let v = TruthValue::new(p, q).unwrap();
            let json = serde_json::to_string(&v).unwrap();
            let back: TruthValue = serde_json::from_str(&json).unwrap();
            prop_assert_eq!(v, back);
        }
    }
}
