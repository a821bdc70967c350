//! Graded frames: a carrier with `⊤`, `∧`, finite `⋁` and a fuzzy order `R`
//! subject to nine axioms, together with their homomorphisms and the
//! crisp-order frame they induce.

use crate::error::Error;
use crate::lattice::frame::{check_frame, FiniteFrame};
use crate::lattice::poset::FinitePoset;
use crate::report::Report;
use crate::truth::{inf_family, TruthValue};
use serde::{Deserialize, Serialize};

/// The algebraic part of a graded frame: named elements with `⊤`, a binary
/// meet table, and finite joins realized by a binary join table plus the
/// empty join `⊥`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedCarrier {
    names: Vec<String>,
    top: usize,
    bottom: usize,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
}

impl GradedCarrier {
    pub fn new(
        names: Vec<String>,
        top: usize,
        bottom: usize,
        meet: Vec<Vec<usize>>,
        join: Vec<Vec<usize>>,
    ) -> Result<Self, Error> {
        let n = names.len();
        let total = |t: &Vec<Vec<usize>>| {
            t.len() == n && t.iter().all(|r| r.len() == n && r.iter().all(|&v| v < n))
        };
        if !total(&meet) || !total(&join) || top >= n || bottom >= n {
            return Err(Error::structural("carrier tables are not total"));
        }
        Ok(GradedCarrier { names, top, bottom, meet, join })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i][j]
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i][j]
    }

    /// `⋁S` as a fold of the binary join over the empty join `⊥`.
    pub fn sup<I: IntoIterator<Item = usize>>(&self, xs: I) -> usize {
        xs.into_iter().fold(self.bottom, |a, b| self.join[a][b])
    }
}

impl From<&FiniteFrame> for GradedCarrier {
    fn from(f: &FiniteFrame) -> Self {
        GradedCarrier {
            names: f.names().to_vec(),
            top: f.top(),
            bottom: f.bottom(),
            meet: (0..f.len()).map(|i| (0..f.len()).map(|j| f.meet(i, j)).collect()).collect(),
            join: (0..f.len()).map(|i| (0..f.len()).map(|j| f.join(i, j)).collect()).collect(),
        }
    }
}

/// A graded frame `(A, ⊤, ∧, ⋁, R)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedFrame {
    carrier: GradedCarrier,
    /// `r[a][b] = R(a, b)`.
    r: Vec<Vec<TruthValue>>,
}

impl GradedFrame {
    pub fn new(carrier: GradedCarrier, r: Vec<Vec<TruthValue>>) -> Result<Self, Error> {
        let n = carrier.len();
        if r.len() != n || r.iter().any(|row| row.len() != n) {
            return Err(Error::structural("R is not total on carrier²"));
        }
        Ok(GradedFrame { carrier, r })
    }

    /// The crisp graded frame of a finite frame: `R(a, b) = 1` iff `a ≤ b`,
    /// else `0`.
    pub fn crisp(frame: &FiniteFrame) -> Self {
        let n = frame.len();
        let r = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if frame.le(i, j) { TruthValue::ONE } else { TruthValue::ZERO })
                    .collect()
            })
            .collect();
        GradedFrame { carrier: GradedCarrier::from(frame), r }
    }

    pub fn carrier(&self) -> &GradedCarrier {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn r(&self, a: usize, b: usize) -> TruthValue {
        self.r[a][b]
    }
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..(1 << n)).map(move |mask| (0..n).filter(|&i| mask & (1 << i) != 0).collect())
}

/// Cap on carrier size for the exhaustive subset forms of axioms 7–9.
///
/// The binary-plus-empty forms checked for every carrier already imply the
/// finite-subset forms by induction on a finite carrier; the exhaustive pass
/// is an extra oracle at small sizes.
const SUBSET_CAP: usize = 10;

/// Checks axioms 1–9 of a graded frame, with witnesses on failure, plus the
/// derived facts `R(⋁∅, a) = 1` and
/// `R(a,b) = R(a∧b,a) ∧ R(a,a∧b) = R(a∨b,b) ∧ R(b,a∨b)`.
pub fn check_graded_frame(g: &GradedFrame) -> Report {
    let mut report = Report::new("graded frame");
    let n = g.len();
    let c = &g.carrier;
    let name = |i: usize| c.name(i);

    report.record("axiom 1: R(a,a) = 1", (0..n).all(|a| g.r(a, a).is_one()), || {
        let a = (0..n).find(|&a| !g.r(a, a).is_one()).unwrap();
        format!("R({}, {}) = {}", name(a), name(a), g.r(a, a))
    });

    let mut anti = None;
    for a in 0..n {
        for b in 0..n {
            if a != b && g.r(a, b).is_one() && g.r(b, a).is_one() && anti.is_none() {
                anti = Some((a, b));
            }
        }
    }
    report.record("axiom 2: R(a,b) = 1 = R(b,a) ⇒ a = b", anti.is_none(), || {
        let (a, b) = anti.unwrap();
        format!("distinct {} and {} with R = 1 both ways", name(a), name(b))
    });

    let mut trans = None;
    'tr: for a in 0..n {
        for b in 0..n {
            for x in 0..n {
                if g.r(a, b).meet(g.r(b, x)) > g.r(a, x) {
                    trans = Some((a, b, x));
                    break 'tr;
                }
            }
        }
    }
    report.record("axiom 3: R(a,b) ∧ R(b,c) ≤ R(a,c)", trans.is_none(), || {
        let (a, b, x) = trans.unwrap();
        format!("at ({}, {}, {})", name(a), name(b), name(x))
    });

    let mut meet_low = None;
    for a in 0..n {
        for b in 0..n {
            let m = c.meet(a, b);
            if !(g.r(m, a).is_one() && g.r(m, b).is_one()) && meet_low.is_none() {
                meet_low = Some((a, b));
            }
        }
    }
    report.record("axiom 4: R(a∧b,a) = 1 = R(a∧b,b)", meet_low.is_none(), || {
        let (a, b) = meet_low.unwrap();
        format!("at ({}, {})", name(a), name(b))
    });

    report.record("axiom 5: R(a,⊤) = 1", (0..n).all(|a| g.r(a, c.top()).is_one()), || {
        let a = (0..n).find(|&a| !g.r(a, c.top()).is_one()).unwrap();
        format!("R({}, ⊤) = {}", name(a), g.r(a, c.top()))
    });

    let mut ax6 = None;
    'six: for a in 0..n {
        for b in 0..n {
            for x in 0..n {
                if g.r(a, b).meet(g.r(a, x)) != g.r(a, c.meet(b, x)) {
                    ax6 = Some((a, b, x));
                    break 'six;
                }
            }
        }
    }
    report.record("axiom 6: R(a,b) ∧ R(a,c) = R(a,b∧c)", ax6.is_none(), || {
        let (a, b, x) = ax6.unwrap();
        format!("at ({}, {}, {})", name(a), name(b), name(x))
    });

    // binary + empty forms of the subset axioms
    let mut ax7 = None;
    for a in 0..n {
        for b in 0..n {
            if !g.r(a, c.join(a, b)).is_one() {
                ax7 = Some((a, b));
            }
        }
    }
    report.record("axiom 7 (binary): R(a, a∨b) = 1", ax7.is_none(), || {
        let (a, b) = ax7.unwrap();
        format!("at ({}, {})", name(a), name(b))
    });

    let mut ax8 = None;
    'e: for a in 0..n {
        for b in 0..n {
            for x in 0..n {
                if g.r(a, x).meet(g.r(b, x)) != g.r(c.join(a, b), x) {
                    ax8 = Some((a, b, x));
                    break 'e;
                }
            }
        }
    }
    report.record("axiom 8 (binary): R(a,b) ∧ R(a',b) = R(a∨a',b)", ax8.is_none(), || {
        let (a, b, x) = ax8.unwrap();
        format!("at ({}, {}, {})", name(a), name(b), name(x))
    });

    let mut ax9 = None;
    'nine: for a in 0..n {
        for b in 0..n {
            for x in 0..n {
                let lhs = c.meet(a, c.join(b, x));
                let rhs = c.join(c.meet(a, b), c.meet(a, x));
                if !g.r(lhs, rhs).is_one() {
                    ax9 = Some((a, b, x));
                    break 'nine;
                }
            }
        }
    }
    report.record(
        "axiom 9 (binary): R(a ∧ (b∨c), (a∧b) ∨ (a∧c)) = 1",
        ax9.is_none(),
        || {
            let (a, b, x) = ax9.unwrap();
            format!("at ({}, {}, {})", name(a), name(b), name(x))
        },
    );

    if n <= SUBSET_CAP {
        let mut s7 = None;
        let mut s8 = None;
        let mut s9 = None;
        for s in subsets(n) {
            let sup = c.sup(s.iter().copied());
            for &a in &s {
                if !g.r(a, sup).is_one() && s7.is_none() {
                    s7 = Some((a, s.clone()));
                }
            }
            for b in 0..n {
                let inf = inf_family(s.iter().map(|&a| g.r(a, b)));
                if inf != g.r(sup, b) && s8.is_none() {
                    s8 = Some((b, s.clone()));
                }
            }
            for a in 0..n {
                let lhs = c.meet(a, sup);
                let rhs = c.sup(s.iter().map(|&b| c.meet(a, b)));
                if !g.r(lhs, rhs).is_one() && s9.is_none() {
                    s9 = Some((a, s.clone()));
                }
            }
        }
        let show = |s: &[usize]| {
            let items: Vec<&str> = s.iter().map(|&i| name(i)).collect();
            format!("S = {{{}}}", items.join(","))
        };
        report.record("axiom 7 (all subsets): a ∈ S ⇒ R(a, ⋁S) = 1", s7.is_none(), || {
            let (a, s) = s7.unwrap();
            format!("a = {}, {}", name(a), show(&s))
        });
        report.record(
            "axiom 8 (all subsets): inf R(a,b) over S = R(⋁S, b)",
            s8.is_none(),
            || {
                let (b, s) = s8.unwrap();
                format!("b = {}, {}", name(b), show(&s))
            },
        );
        report.record(
            "axiom 9 (all subsets): R(a ∧ ⋁S, ⋁{a ∧ b}) = 1",
            s9.is_none(),
            || {
                let (a, s) = s9.unwrap();
                format!("a = {}, {}", name(a), show(&s))
            },
        );
    }

    // derived consequences
    report.record(
        "derived: R(⋁∅, a) = 1",
        (0..n).all(|a| g.r(c.bottom(), a).is_one()),
        || {
            let a = (0..n).find(|&a| !g.r(c.bottom(), a).is_one()).unwrap();
            format!("R(⊥, {}) = {}", name(a), g.r(c.bottom(), a))
        },
    );
    let mut r2 = None;
    for a in 0..n {
        for b in 0..n {
            let via_meet = g.r(c.meet(a, b), a).meet(g.r(a, c.meet(a, b)));
            let via_join = g.r(c.join(a, b), b).meet(g.r(b, c.join(a, b)));
            if g.r(a, b) != via_meet || g.r(a, b) != via_join {
                r2 = Some((a, b));
            }
        }
    }
    report.record(
        "derived: R(a,b) = R(a∧b,a) ∧ R(a,a∧b) = R(a∨b,b) ∧ R(b,a∨b)",
        r2.is_none(),
        || {
            let (a, b) = r2.unwrap();
            format!("at ({}, {})", name(a), name(b))
        },
    );
    report
}

/// The underlying frame of a graded frame: `a ≺ b` iff `R(a, b) = 1`.
pub fn graded_to_frame(g: &GradedFrame) -> Result<FiniteFrame, Error> {
    let pre = check_graded_frame(g);
    if !pre.ok() {
        let first = pre.failures().next().unwrap();
        return Err(Error::precondition(format!(
            "graded frame axioms fail: {} ({})",
            first.law,
            first.witness.as_deref().unwrap_or("")
        )));
    }
    let n = g.len();
    let leq = (0..n)
        .map(|i| (0..n).map(|j| g.r(i, j).is_one()).collect())
        .collect();
    let poset = FinitePoset::new(g.carrier.names().to_vec(), leq)?;
    let meet = (0..n).map(|i| (0..n).map(|j| g.carrier.meet(i, j)).collect()).collect();
    let join = (0..n).map(|i| (0..n).map(|j| g.carrier.join(i, j)).collect()).collect();
    let frame =
        FiniteFrame::from_tables(poset, g.carrier.top(), g.carrier.bottom(), meet, join)?;
    let report = check_frame(&frame);
    if !report.ok() {
        let first = report.failures().next().unwrap();
        return Err(Error::structural(format!(
            "1-cut order is not a frame: {} ({})",
            first.law,
            first.witness.as_deref().unwrap_or("")
        )));
    }
    Ok(frame)
}

/// A map between graded frames.
#[derive(Debug, Clone)]
pub struct GradedFrameMap {
    pub map: Vec<usize>,
}

/// Checks the graded-frame-hom laws for `f : G → H`: preservation of binary
/// meets and finite joins (binary plus empty), and the grade inequality
/// `R(a₁,a₂) ≤ R'(f(a₁),f(a₂))`.
pub fn check_graded_frame_hom(f: &GradedFrameMap, g: &GradedFrame, h: &GradedFrame) -> Report {
    let mut report = Report::new("graded frame hom");
    let n = g.len();
    if f.map.len() != n || f.map.iter().any(|&v| v >= h.len()) {
        report.fail("totality", "map does not cover the source carrier");
        return report;
    }
    let gc = g.carrier();
    let hc = h.carrier();
    report.record("preserves ⊤", f.map[gc.top()] == hc.top(), || {
        format!("⊤ ↦ {}", hc.name(f.map[gc.top()]))
    });
    report.record("preserves ⋁∅", f.map[gc.bottom()] == hc.bottom(), || {
        format!("⊥ ↦ {}", hc.name(f.map[gc.bottom()]))
    });
    let mut bad_meet = None;
    let mut bad_join = None;
    let mut bad_grade = None;
    for i in 0..n {
        for j in 0..n {
            if f.map[gc.meet(i, j)] != hc.meet(f.map[i], f.map[j]) && bad_meet.is_none() {
                bad_meet = Some((i, j));
            }
            if f.map[gc.join(i, j)] != hc.join(f.map[i], f.map[j]) && bad_join.is_none() {
                bad_join = Some((i, j));
            }
            if g.r(i, j) > h.r(f.map[i], f.map[j]) && bad_grade.is_none() {
                bad_grade = Some((i, j));
            }
        }
    }
    report.record("preserves binary meet", bad_meet.is_none(), || {
        let (i, j) = bad_meet.unwrap();
        format!("at ({}, {})", gc.name(i), gc.name(j))
    });
    report.record("preserves binary join", bad_join.is_none(), || {
        let (i, j) = bad_join.unwrap();
        format!("at ({}, {})", gc.name(i), gc.name(j))
    });
    report.record("grade clause: R(a₁,a₂) ≤ R'(f(a₁),f(a₂))", bad_grade.is_none(), || {
        let (i, j) = bad_grade.unwrap();
        format!(
            "R({}, {}) = {} > {}",
            gc.name(i),
            gc.name(j),
            g.r(i, j),
            h.r(f.map[i], f.map[j])
        )
    });
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crisp_graded_frame_passes_and_round_trips() {
        let frame = FiniteFrame::chain(4).unwrap();
        let g = GradedFrame::crisp(&frame);
        assert!(check_graded_frame(&g).ok());
        let back = graded_to_frame(&g).unwrap();
        assert_eq!(back.names(), frame.names());
        for i in 0..frame.len() {
            for j in 0..frame.len() {
                assert_eq!(back.le(i, j), frame.le(i, j));
            }
        }
    }

    #[test]
    fn antisymmetry_violation_is_reported() {
        let frame = FiniteFrame::chain(3).unwrap();
        let mut g = GradedFrame::crisp(&frame);
        g.r[0][1] = TruthValue::ONE;
        g.r[1][0] = TruthValue::ONE;
        let report = check_graded_frame(&g);
        assert!(!report.ok());
        assert!(report.failures().any(|c| c.law.starts_with("axiom 2")));
    }

    #[test]
    fn identity_hom_passes() {
        let g = GradedFrame::crisp(&FiniteFrame::chain(3).unwrap());
        let id = GradedFrameMap { map: (0..g.len()).collect() };
        assert!(check_graded_frame_hom(&id, &g, &g).ok());
    }
}
