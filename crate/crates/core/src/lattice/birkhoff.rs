//! Birkhoff duality for finite distributive lattices: join-irreducibles,
//! downset frames, and the frame coproduct computed through the dual posets.

use crate::error::Error;
use crate::lattice::frame::{FiniteFrame, FrameHom};
use crate::lattice::poset::FinitePoset;

/// The sub-poset of join-irreducible elements: `j ≠ ⊥` such that
/// `j = a ∨ b` implies `j = a` or `j = b`.
///
/// Returns the poset (with inherited order) together with the frame ids of
/// its elements, in ascending id order.
pub fn join_irreducibles(frame: &FiniteFrame) -> (FinitePoset, Vec<usize>) {
    let n = frame.len();
    let ids: Vec<usize> = (0..n)
        .filter(|&j| {
            j != frame.bottom()
                && (0..n).all(|a| {
                    (0..n).all(|b| frame.join(a, b) != j || a == j || b == j)
                })
        })
        .collect();
    let names = ids.iter().map(|&j| frame.name(j).to_string()).collect();
    let leq = ids
        .iter()
        .map(|&i| ids.iter().map(|&j| frame.le(i, j)).collect())
        .collect();
    let poset = FinitePoset::new(names, leq).expect("restriction of a partial order");
    (poset, ids)
}

fn downsets_of(poset: &FinitePoset) -> Vec<u64> {
    let n = poset.len();
    assert!(n <= 60, "downset enumeration limited to 60 generators");
    let mut sets = Vec::new();
    for mask in 0u64..(1 << n) {
        let closed = (0..n).all(|i| {
            mask & (1 << i) == 0
                || (0..n).all(|j| !poset.le(j, i) || mask & (1 << j) != 0)
        });
        if closed {
            sets.push(mask);
        }
    }
    // order by size then mask: keeps ⊥ first and ⊤ last
    sets.sort_by_key(|m| (m.count_ones(), *m));
    sets
}

fn downset_name(poset: &FinitePoset, mask: u64) -> String {
    if mask == 0 {
        return "{}".into();
    }
    let members: Vec<&str> = (0..poset.len())
        .filter(|&i| mask & (1 << i) != 0)
        .map(|i| poset.name(i))
        .collect();
    format!("{{{}}}", members.join(","))
}

/// The frame of down-closed subsets of `P`, ordered by inclusion.
///
/// Returns the frame and the bitmask carried by each frame element, indexed
/// over `P`'s elements.
pub fn downset_frame(poset: &FinitePoset) -> Result<(FiniteFrame, Vec<u64>), Error> {
    let sets = downsets_of(poset);
    let names = sets.iter().map(|&m| downset_name(poset, m)).collect();
    let leq = sets
        .iter()
        .map(|&a| sets.iter().map(|&b| a & b == a).collect())
        .collect();
    let frame = FiniteFrame::from_poset(FinitePoset::new(names, leq)?)?;
    Ok((frame, sets))
}

/// A frame coproduct `A ⊗ B` with its injections and tensor decomposition.
///
/// Computed as the downset frame of `J(A) × J(B)`: for finite frames the
/// distributive-lattice coproduct satisfies the frame universal property,
/// and downsets are directly enumerable. `i_A(a)` is the downset of pairs
/// `(p, q)` with `p ≤ a`, i.e. `a ⊗ ⊤`.
#[derive(Debug, Clone)]
pub struct FrameCoproduct {
    pub frame: FiniteFrame,
    pub inj_a: FrameHom,
    pub inj_b: FrameHom,
    /// Join-irreducible ids of `A` and `B` backing the dual poset.
    ji_a: Vec<usize>,
    ji_b: Vec<usize>,
    /// Bitmask over `J(A) × J(B)` for each coproduct element.
    masks: Vec<u64>,
    left: FiniteFrame,
    right: FiniteFrame,
}

impl FrameCoproduct {
    /// The pure tensor `a ⊗ b = i_A(a) ∧ i_B(b)`.
    pub fn tensor(&self, a: usize, b: usize) -> usize {
        self.frame.meet(self.inj_a.apply(a), self.inj_b.apply(b))
    }

    /// The canonical decomposition of a coproduct element as a finite join
    /// of pure tensors `⋁ᵢ (aᵢ ⊗ bᵢ)`, with `aᵢ, bᵢ` join-irreducible.
    pub fn decompose(&self, element: usize) -> Vec<(usize, usize)> {
        let mask = self.masks[element];
        let nb = self.ji_b.len();
        (0..self.ji_a.len() * self.ji_b.len())
            .filter(|&bit| mask & (1 << bit) != 0)
            .map(|bit| (self.ji_a[bit / nb], self.ji_b[bit % nb]))
            .collect()
    }

    /// The mediating hom of the universal property: given `f : A → C` and
    /// `g : B → C`, the unique `h` with `h ∘ i_A = f` and `h ∘ i_B = g`,
    /// namely `h(⋁ᵢ aᵢ ⊗ bᵢ) = ⋁ᵢ f(aᵢ) ∧ g(bᵢ)`.
    pub fn mediating(&self, f: &FrameHom, g: &FrameHom) -> Result<FrameHom, Error> {
        if f.source != self.left || g.source != self.right || f.target != g.target {
            return Err(Error::precondition(
                "mediating hom needs f : A → C and g : B → C",
            ));
        }
        let c = &f.target;
        let map = (0..self.frame.len())
            .map(|w| {
                c.sup(
                    self.decompose(w)
                        .into_iter()
                        .map(|(a, b)| c.meet(f.apply(a), g.apply(b))),
                )
            })
            .collect();
        FrameHom::new(self.frame.clone(), c.clone(), map)
    }
}

/// Coproduct (tensor product) of two finite frames via Birkhoff duality.
pub fn frame_coproduct(a: &FiniteFrame, b: &FiniteFrame) -> Result<FrameCoproduct, Error> {
    let (pa, ji_a) = join_irreducibles(a);
    let (pb, ji_b) = join_irreducibles(b);
    let grid = pa.product(&pb);
    let (frame, masks) = downset_frame(&grid)?;

    let nb = ji_b.len();
    let find = |mask: u64| -> usize {
        masks
            .iter()
            .position(|&m| m == mask)
            .expect("every downset of the grid is a coproduct element")
    };
    // i_A(x) = downset of pairs (p, q) with p ≤ x
    let map_a = (0..a.len())
        .map(|x| {
            let mut mask = 0u64;
            for (ia, &p) in ji_a.iter().enumerate() {
                if a.le(p, x) {
                    for ib in 0..nb {
                        mask |= 1 << (ia * nb + ib);
                    }
                }
            }
            find(mask)
        })
        .collect();
    let map_b = (0..b.len())
        .map(|y| {
            let mut mask = 0u64;
            for (ib, &q) in ji_b.iter().enumerate() {
                if b.le(q, y) {
                    for ia in 0..ji_a.len() {
                        mask |= 1 << (ia * nb + ib);
                    }
                }
            }
            find(mask)
        })
        .collect();
    let inj_a = FrameHom::new(a.clone(), frame.clone(), map_a)?;
    let inj_b = FrameHom::new(b.clone(), frame.clone(), map_b)?;
    Ok(FrameCoproduct {
        frame,
        inj_a,
        inj_b,
        ji_a,
        ji_b,
        masks,
        left: a.clone(),
        right: b.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::frame::{check_frame, enumerate_frame_homs, frame_iso};

    #[test]
    fn irreducibles_of_small_frames() {
        let three = FiniteFrame::chain(3).unwrap();
        let (p, ids) = join_irreducibles(&three);
        assert_eq!(ids.len(), 2); // {m, 1} as a 2-chain
        assert!(p.le(0, 1) || p.le(1, 0));

        let two = FiniteFrame::two();
        let (_, ids) = join_irreducibles(&two);
        assert_eq!(ids, vec![two.top()]);

        let bool4 = crate::lattice::frame::tests::boolean4();
        let (p, ids) = join_irreducibles(&bool4);
        assert_eq!(ids.len(), 2);
        assert!(!p.le(0, 1) && !p.le(1, 0)); // antichain of atoms
    }

    #[test]
    fn downsets_of_small_posets() {
        let (f, _) = downset_frame(&FinitePoset::antichain(1)).unwrap();
        assert_eq!(f.len(), 2);
        let (f, _) = downset_frame(&FinitePoset::antichain(2)).unwrap();
        assert_eq!(f.len(), 4);
        let (f, _) = downset_frame(&FinitePoset::chain(2)).unwrap();
        assert_eq!(f.len(), 3);
    }

    #[test]
    fn birkhoff_round_trip() {
        for frame in [
            FiniteFrame::two(),
            FiniteFrame::chain(4).unwrap(),
            crate::lattice::frame::tests::boolean4(),
        ] {
            let (ji, _) = join_irreducibles(&frame);
            let (back, _) = downset_frame(&ji).unwrap();
            assert!(frame_iso(&frame, &back).is_some(), "round trip failed");
        }
    }

    #[test]
    fn coproduct_injections_are_homs() {
        let three = FiniteFrame::chain(3).unwrap();
        let cp = frame_coproduct(&three, &three).unwrap();
        assert!(check_frame(&cp.frame).ok());
        assert!(cp.inj_a.check().ok());
        assert!(cp.inj_b.check().ok());
        // downsets of the 2×2 grid poset
        assert_eq!(cp.frame.len(), 6);
    }

    #[test]
    fn two_is_a_unit_for_the_tensor() {
        let b = crate::lattice::frame::tests::boolean4();
        let cp = frame_coproduct(&FiniteFrame::two(), &b).unwrap();
        assert!(frame_iso(&cp.frame, &b).is_some());
    }

    #[test]
    fn mediating_hom_factors_both_injections() {
        let a = FiniteFrame::chain(3).unwrap();
        let b = FiniteFrame::two();
        let c = FiniteFrame::chain(3).unwrap();
        let cp = frame_coproduct(&a, &b).unwrap();
        for f in enumerate_frame_homs(&a, &c).unwrap() {
            for g in enumerate_frame_homs(&b, &c).unwrap() {
                let h = cp.mediating(&f, &g).unwrap();
                assert!(h.check().ok());
                assert_eq!(cp.inj_a.compose(&h).unwrap().map, f.map);
                assert_eq!(cp.inj_b.compose(&h).unwrap().map, g.map);
            }
        }
    }
}
