use crate::error::Error;
use crate::lattice::poset::FinitePoset;
use crate::report::Report;
use serde::{Deserialize, Serialize};

/// A finite frame: a finite bounded distributive lattice with meet and join
/// tables over the underlying poset.
///
/// On a finite carrier, closure under binary meet/join plus a top and a
/// bottom is equivalent to arbitrary joins and finite meets, and binary
/// distributivity gives the frame law `x ∧ ⋁Y = ⋁{x ∧ y}`. One-element
/// carriers (`⊤ = ⊥`) are rejected.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteFrame {
    poset: FinitePoset,
    top: usize,
    bottom: usize,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
}

impl FiniteFrame {
    /// Computes meet/join tables from the order and validates all frame laws.
    pub fn from_poset(poset: FinitePoset) -> Result<Self, Error> {
        let n = poset.len();
        if n < 2 {
            return Err(Error::structural("a frame needs at least ⊥ and ⊤"));
        }
        let glb = |i: usize, j: usize| -> Option<usize> {
            let lower: Vec<usize> =
                (0..n).filter(|&k| poset.le(k, i) && poset.le(k, j)).collect();
            lower.iter().copied().find(|&g| lower.iter().all(|&k| poset.le(k, g)))
        };
        let lub = |i: usize, j: usize| -> Option<usize> {
            let upper: Vec<usize> =
                (0..n).filter(|&k| poset.le(i, k) && poset.le(j, k)).collect();
            upper.iter().copied().find(|&l| upper.iter().all(|&k| poset.le(l, k)))
        };
        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                meet[i][j] = glb(i, j).ok_or_else(|| {
                    Error::structural(format!(
                        "no meet of {} and {}",
                        poset.name(i),
                        poset.name(j)
                    ))
                })?;
                join[i][j] = lub(i, j).ok_or_else(|| {
                    Error::structural(format!(
                        "no join of {} and {}",
                        poset.name(i),
                        poset.name(j)
                    ))
                })?;
            }
        }
        let top = (0..n)
            .find(|&t| (0..n).all(|i| poset.le(i, t)))
            .ok_or_else(|| Error::structural("no top element"))?;
        let bottom = (0..n)
            .find(|&b| (0..n).all(|i| poset.le(b, i)))
            .ok_or_else(|| Error::structural("no bottom element"))?;
        let frame = FiniteFrame { poset, top, bottom, meet, join };
        let report = check_frame(&frame);
        if !report.ok() {
            let first = report.failures().next().unwrap();
            return Err(Error::structural(format!(
                "{} ({})",
                first.law,
                first.witness.as_deref().unwrap_or("")
            )));
        }
        Ok(frame)
    }

    /// Builds from raw tables without validation; pair with [`check_frame`].
    pub fn from_tables(
        poset: FinitePoset,
        top: usize,
        bottom: usize,
        meet: Vec<Vec<usize>>,
        join: Vec<Vec<usize>>,
    ) -> Result<Self, Error> {
        let n = poset.len();
        let total = |t: &Vec<Vec<usize>>| {
            t.len() == n && t.iter().all(|r| r.len() == n && r.iter().all(|&v| v < n))
        };
        if !total(&meet) || !total(&join) || top >= n || bottom >= n {
            return Err(Error::structural("meet/join tables are not total on the carrier"));
        }
        Ok(FiniteFrame { poset, top, bottom, meet, join })
    }

    /// The linear frame `0 < c1 < … < 1` with `n` elements.
    pub fn chain(n: usize) -> Result<Self, Error> {
        FiniteFrame::from_poset(FinitePoset::chain(n))
    }

    /// The initial frame `2 = {⊥, ⊤}`.
    pub fn two() -> Self {
        FiniteFrame::chain(2).expect("2 is a frame")
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        false // at least {⊥, ⊤}
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn names(&self) -> &[String] {
        self.poset.names()
    }

    pub fn name(&self, i: usize) -> &str {
        self.poset.name(i)
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.poset.le(i, j)
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i][j]
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i][j]
    }

    /// Join of a finite family; `⊥` for the empty family.
    pub fn sup<I: IntoIterator<Item = usize>>(&self, xs: I) -> usize {
        xs.into_iter().fold(self.bottom, |a, b| self.join[a][b])
    }

    /// Meet of a finite family; `⊤` for the empty family.
    pub fn inf<I: IntoIterator<Item = usize>>(&self, xs: I) -> usize {
        xs.into_iter().fold(self.top, |a, b| self.meet[a][b])
    }
}

/// Checks every frame law on the candidate, reporting all failures.
pub fn check_frame(frame: &FiniteFrame) -> Report {
    let n = frame.len();
    let mut report = Report::new("frame");
    report.absorb("order", frame.poset.check());
    report.record("nondegenerate (⊤ ≠ ⊥)", frame.top != frame.bottom, || {
        "one-element carrier".into()
    });
    report.record("⊤ is greatest", (0..n).all(|i| frame.le(i, frame.top)), || {
        let i = (0..n).find(|&i| !frame.le(i, frame.top)).unwrap();
        format!("{} ≰ ⊤", frame.name(i))
    });
    report.record("⊥ is least", (0..n).all(|i| frame.le(frame.bottom, i)), || {
        let i = (0..n).find(|&i| !frame.le(frame.bottom, i)).unwrap();
        format!("⊥ ≰ {}", frame.name(i))
    });

    let is_glb = |i: usize, j: usize| {
        let m = frame.meet[i][j];
        frame.le(m, i)
            && frame.le(m, j)
            && (0..n).all(|k| !(frame.le(k, i) && frame.le(k, j)) || frame.le(k, m))
    };
    let is_lub = |i: usize, j: usize| {
        let l = frame.join[i][j];
        frame.le(i, l)
            && frame.le(j, l)
            && (0..n).all(|k| !(frame.le(i, k) && frame.le(j, k)) || frame.le(l, k))
    };
    let mut bad_meet = None;
    let mut bad_join = None;
    for i in 0..n {
        for j in 0..n {
            if !is_glb(i, j) && bad_meet.is_none() {
                bad_meet = Some((i, j));
            }
            if !is_lub(i, j) && bad_join.is_none() {
                bad_join = Some((i, j));
            }
        }
    }
    report.record("meet table = g.l.b.", bad_meet.is_none(), || {
        let (i, j) = bad_meet.unwrap();
        format!("meet({}, {}) is not the g.l.b.", frame.name(i), frame.name(j))
    });
    report.record("join table = l.u.b.", bad_join.is_none(), || {
        let (i, j) = bad_join.unwrap();
        format!("join({}, {}) is not the l.u.b.", frame.name(i), frame.name(j))
    });
    if bad_meet.is_some() || bad_join.is_some() {
        return report; // distributivity over broken tables is noise
    }

    let mut bad_dist = None;
    'outer: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = frame.meet[x][frame.join[y][z]];
                let rhs = frame.join[frame.meet[x][y]][frame.meet[x][z]];
                if lhs != rhs {
                    bad_dist = Some((x, y, z));
                    break 'outer;
                }
            }
        }
    }
    report.record("binary meet distributes over binary join", bad_dist.is_none(), || {
        let (x, y, z) = bad_dist.unwrap();
        format!(
            "{} ∧ ({} ∨ {}) ≠ ({} ∧ {}) ∨ ({} ∧ {})",
            frame.name(x),
            frame.name(y),
            frame.name(z),
            frame.name(x),
            frame.name(y),
            frame.name(x),
            frame.name(z)
        )
    });
    report
}

/// A map between frames together with its hom-law report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameHom {
    pub source: FiniteFrame,
    pub target: FiniteFrame,
    /// `map[i]` is the target id of source element `i`.
    pub map: Vec<usize>,
}

impl FrameHom {
    pub fn new(source: FiniteFrame, target: FiniteFrame, map: Vec<usize>) -> Result<Self, Error> {
        if map.len() != source.len() || map.iter().any(|&v| v >= target.len()) {
            return Err(Error::structural("frame hom map is not total"));
        }
        Ok(FrameHom { source, target, map })
    }

    pub fn identity(frame: &FiniteFrame) -> Self {
        FrameHom {
            source: frame.clone(),
            target: frame.clone(),
            map: (0..frame.len()).collect(),
        }
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    /// `then ∘ self`.
    pub fn compose(&self, then: &FrameHom) -> Result<FrameHom, Error> {
        if self.target != then.source {
            return Err(Error::structural("frame homs do not chain"));
        }
        let map = self.map.iter().map(|&i| then.map[i]).collect();
        Ok(FrameHom { source: self.source.clone(), target: then.target.clone(), map })
    }

    /// Preservation of binary meet, binary join, ⊤ and ⊥.
    pub fn check(&self) -> Report {
        let mut report = Report::new("frame hom");
        let (s, t) = (&self.source, &self.target);
        report.record("preserves ⊤", self.map[s.top()] == t.top(), || {
            format!("⊤ ↦ {}", t.name(self.map[s.top()]))
        });
        report.record("preserves ⊥", self.map[s.bottom()] == t.bottom(), || {
            format!("⊥ ↦ {}", t.name(self.map[s.bottom()]))
        });
        let mut bad_meet = None;
        let mut bad_join = None;
        for i in 0..s.len() {
            for j in 0..s.len() {
                if self.map[s.meet(i, j)] != t.meet(self.map[i], self.map[j])
                    && bad_meet.is_none()
                {
                    bad_meet = Some((i, j));
                }
                if self.map[s.join(i, j)] != t.join(self.map[i], self.map[j])
                    && bad_join.is_none()
                {
                    bad_join = Some((i, j));
                }
            }
        }
        report.record("preserves binary meet", bad_meet.is_none(), || {
            let (i, j) = bad_meet.unwrap();
            format!("at ({}, {})", s.name(i), s.name(j))
        });
        report.record("preserves binary join", bad_join.is_none(), || {
            let (i, j) = bad_join.unwrap();
            format!("at ({}, {})", s.name(i), s.name(j))
        });
        report
    }
}

/// An n-ary frame product with projection homs.
#[derive(Debug, Clone)]
pub struct FrameProduct {
    pub frame: FiniteFrame,
    pub projections: Vec<FrameHom>,
    radices: Vec<usize>,
}

impl FrameProduct {
    /// Decomposes a product element id into component ids.
    pub fn components(&self, mut id: usize) -> Vec<usize> {
        let mut out = vec![0; self.radices.len()];
        for (slot, &radix) in out.iter_mut().zip(&self.radices).rev() {
            *slot = id % radix;
            id /= radix;
        }
        out
    }

    /// Builds a product element id from component ids.
    pub fn tuple(&self, parts: &[usize]) -> usize {
        parts.iter().zip(&self.radices).fold(0, |acc, (&p, &r)| acc * r + p)
    }
}

/// Cartesian product of frames with componentwise order, meet and join.
pub fn frame_product(factors: &[FiniteFrame]) -> Result<FrameProduct, Error> {
    if factors.is_empty() {
        return Err(Error::precondition("product of an empty family of frames"));
    }
    let mut poset = factors[0].poset().clone();
    for f in &factors[1..] {
        poset = poset.product(f.poset());
    }
    let frame = FiniteFrame::from_poset(poset)?;
    let radices: Vec<usize> = factors.iter().map(|f| f.len()).collect();
    let product = FrameProduct { frame: frame.clone(), projections: Vec::new(), radices };
    let mut projections = Vec::with_capacity(factors.len());
    for (k, factor) in factors.iter().enumerate() {
        let map = (0..frame.len()).map(|id| product.components(id)[k]).collect();
        projections.push(FrameHom::new(frame.clone(), factor.clone(), map)?);
    }
    Ok(FrameProduct { frame, projections, radices: product.radices })
}

/// All frame homomorphisms `A → L`, duplicate-free, in deterministic order.
///
/// A hom is determined by its restriction to the join-irreducibles of `A`
/// (each element is the join of the irreducibles below it), so the search
/// walks monotone assignments on the irreducibles, extends canonically by
/// joins, and keeps those extensions that satisfy every hom law.
pub fn enumerate_frame_homs(a: &FiniteFrame, l: &FiniteFrame) -> Result<Vec<FrameHom>, Error> {
    const NODE_BUDGET: usize = 20_000_000;
    let (_, ji) = super::birkhoff::join_irreducibles(a);
    let mut homs = Vec::new();
    let mut assignment = vec![0usize; ji.len()];
    let mut visited = 0usize;

    fn extend(a: &FiniteFrame, l: &FiniteFrame, ji: &[usize], m: &[usize]) -> Vec<usize> {
        (0..a.len())
            .map(|x| l.sup(ji.iter().zip(m).filter(|&(&p, _)| a.le(p, x)).map(|(_, &v)| v)))
            .collect()
    }

    fn search(
        a: &FiniteFrame,
        l: &FiniteFrame,
        ji: &[usize],
        depth: usize,
        assignment: &mut Vec<usize>,
        homs: &mut Vec<FrameHom>,
        visited: &mut usize,
    ) -> Result<(), Error> {
        *visited += 1;
        if *visited > NODE_BUDGET {
            return Err(Error::Budget("frame hom enumeration".into()));
        }
        if depth == ji.len() {
            let map = extend(a, l, ji, assignment);
            let hom = FrameHom::new(a.clone(), l.clone(), map).expect("total by construction");
            if hom.check().ok() {
                homs.push(hom);
            }
            return Ok(());
        }
        for v in 0..l.len() {
            // monotone against already-assigned irreducibles
            let consistent = (0..depth).all(|e| {
                (!a.le(ji[e], ji[depth]) || l.le(assignment[e], v))
                    && (!a.le(ji[depth], ji[e]) || l.le(v, assignment[e]))
            });
            if consistent {
                assignment[depth] = v;
                search(a, l, ji, depth + 1, assignment, homs, visited)?;
            }
        }
        Ok(())
    }

    search(a, l, &ji, 0, &mut assignment, &mut homs, &mut visited)?;
    homs.sort_by(|p, q| p.map.cmp(&q.map));
    Ok(homs)
}

/// Searches for a frame isomorphism, returning the witnessing bijection
/// `A → B` when one exists.
pub fn frame_iso(a: &FiniteFrame, b: &FiniteFrame) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    let n = a.len();
    let degree = |f: &FiniteFrame, i: usize| {
        let below = (0..n).filter(|&k| f.le(k, i)).count();
        let above = (0..n).filter(|&k| f.le(i, k)).count();
        (below, above)
    };
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn go(
        a: &FiniteFrame,
        b: &FiniteFrame,
        degree: &dyn Fn(&FiniteFrame, usize) -> (usize, usize),
        i: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = a.len();
        if i == n {
            // order preserved both ways ⇒ lattice iso on finite frames
            return (0..n)
                .all(|x| (0..n).all(|y| a.le(x, y) == b.le(map[x], map[y])));
        }
        for j in 0..n {
            if used[j] || degree(a, i) != degree(b, j) {
                continue;
            }
            let ok = (0..i).all(|x| {
                a.le(x, i) == b.le(map[x], j) && a.le(i, x) == b.le(j, map[x])
            });
            if ok {
                map[i] = j;
                used[j] = true;
                if go(a, b, degree, i + 1, map, used) {
                    return true;
                }
                used[j] = false;
                map[i] = usize::MAX;
            }
        }
        false
    }

    go(a, b, &degree, 0, &mut map, &mut used).then_some(map)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn boolean4() -> FiniteFrame {
        // ⊥ < a, b < ⊤ with a, b incomparable
        let poset = FinitePoset::from_cover(
            vec!["⊥".into(), "a".into(), "b".into(), "⊤".into()],
            &[(0, 1), (0, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        FiniteFrame::from_poset(poset).unwrap()
    }

    pub(crate) fn diamond_m3() -> Result<FiniteFrame, Error> {
        let poset = FinitePoset::from_cover(
            vec!["⊥".into(), "a".into(), "b".into(), "c".into(), "⊤".into()],
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
        )
        .unwrap();
        FiniteFrame::from_poset(poset)
    }

    #[test]
    fn two_element_chain_is_a_frame() {
        assert!(check_frame(&FiniteFrame::two()).ok());
    }

    #[test]
    fn boolean4_is_a_frame() {
        assert!(check_frame(&boolean4()).ok());
    }

    #[test]
    fn m3_fails_distributivity() {
        // from_poset rejects it; the law check pinpoints distributivity
        assert!(diamond_m3().is_err());
        let poset = FinitePoset::from_cover(
            vec!["⊥".into(), "a".into(), "b".into(), "c".into(), "⊤".into()],
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
        )
        .unwrap();
        // hand-build tables: pairwise meets of a,b,c are ⊥, joins are ⊤
        let n = 5;
        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                meet[i][j] = if poset.le(i, j) {
                    i
                } else if poset.le(j, i) {
                    j
                } else {
                    0
                };
                join[i][j] = if poset.le(i, j) {
                    j
                } else if poset.le(j, i) {
                    i
                } else {
                    4
                };
            }
        }
        let m3 = FiniteFrame::from_tables(poset, 4, 0, meet, join).unwrap();
        let report = check_frame(&m3);
        assert!(!report.ok());
        assert!(report
            .failures()
            .any(|c| c.law.contains("distributes")));
    }

    #[test]
    fn product_of_two_chains() {
        let two = FiniteFrame::two();
        let p = frame_product(&[two.clone(), two]).unwrap();
        assert_eq!(p.frame.len(), 4);
        assert!(check_frame(&p.frame).ok());
        for proj in &p.projections {
            assert!(proj.check().ok());
        }
        let three = FiniteFrame::chain(3).unwrap();
        let q = frame_product(&[three, FiniteFrame::two()]).unwrap();
        assert_eq!(q.frame.len(), 6);
        assert!(check_frame(&q.frame).ok());
    }

    #[test]
    fn hom_enumeration_counts() {
        let three = FiniteFrame::chain(3).unwrap();
        // m ↦ 0, 1/2 or 1
        assert_eq!(enumerate_frame_homs(&three, &three).unwrap().len(), 3);
        // initiality of 2
        let two = FiniteFrame::two();
        assert_eq!(enumerate_frame_homs(&two, &three).unwrap().len(), 1);
        // one hom per atom
        assert_eq!(enumerate_frame_homs(&boolean4(), &two).unwrap().len(), 2);
        for hom in enumerate_frame_homs(&boolean4(), &three).unwrap() {
            assert!(hom.check().ok());
        }
    }

    #[test]
    fn iso_detects_shape() {
        let two2 = frame_product(&[FiniteFrame::two(), FiniteFrame::two()]).unwrap().frame;
        assert!(frame_iso(&two2, &boolean4()).is_some());
        assert!(frame_iso(&two2, &FiniteFrame::chain(4).unwrap()).is_none());
    }
}
