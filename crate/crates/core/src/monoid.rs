//! The inverse monoid of order isomorphisms between principal filters of
//! finitely supported positive sequences.
//!
//! Every such isomorphism is a unique triple (g, d, r): it sends a point
//! `a >= d` to `r + g(a - d)` where g relabels indices. Composition follows
//! the partial-map rule and stays inside the monoid.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::seq::{NSeq, ZSeq};

/// An order isomorphism from the filter above `d` onto the filter above `r`,
/// twisting indices by `g`. Triples are unique: structural equality is
/// equality of maps.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    pub g: Perm,
    pub d: NSeq,
    pub r: NSeq,
}

/// A pair of positive sequences, the building block of the semidirect
/// product image of the monoid.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BPair {
    pub p: NSeq,
    pub q: NSeq,
}

/// A permutation acting on a sequence pair: an element of the semidirect
/// product the monoid embeds into.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SdpElem {
    pub g: Perm,
    pub pair: BPair,
}

impl Element {
    pub fn new(g: Perm, d: NSeq, r: NSeq) -> Element {
        Element { g, d, r }
    }

    /// The identity map of the whole poset.
    pub fn identity() -> Element {
        Element::new(Perm::identity(), NSeq::one(), NSeq::one())
    }

    /// The identity map of the filter above `d`; these are exactly the
    /// idempotents.
    pub fn idempotent(d: NSeq) -> Element {
        Element::new(Perm::identity(), d.clone(), d)
    }

    /// The globally defined relabeling by `g`; these are exactly the units.
    pub fn from_unit(g: Perm) -> Element {
        Element::new(g, NSeq::one(), NSeq::one())
    }

    /// The member of the maximal subgroup at the idempotent of `d` whose
    /// twist is `g`.
    pub fn h_element(g: Perm, d: NSeq) -> Element {
        Element::new(g, d.clone(), d)
    }

    /// Partial-map composition: `self` first, then `other`. Total on the
    /// monoid; the meet point is max{r, d'} pulled back through both maps.
    pub fn compose(&self, other: &Element) -> Element {
        let m = self.r.pointwise_max(&other.d);
        let d = self
            .d
            .offset_add(&self.g.inverse().act_z(&m.diff(&self.r)))
            .expect("meet point dominates the range generator");
        let r = other
            .r
            .offset_add(&other.g.act_z(&m.diff(&other.d)))
            .expect("meet point dominates the domain generator");
        Element::new(self.g.compose(&other.g), d, r)
    }

    /// The inverse map; composition either way yields the idempotent of the
    /// corresponding generator.
    pub fn inverse(&self) -> Element {
        Element::new(self.g.inverse(), self.r.clone(), self.d.clone())
    }

    pub fn is_idempotent(&self) -> bool {
        self.g.is_identity() && self.d == self.r
    }

    /// Evaluates the map at a point of its domain filter.
    pub fn apply(&self, a: &NSeq) -> Result<NSeq> {
        if let Some(x) = self.d.leq_violation(a) {
            return Err(Error::Below { index: x, have: a.get(x), need: self.d.get(x) });
        }
        Ok(self
            .r
            .offset_add(&self.g.act_z(&a.diff(&self.d)))
            .expect("points of the domain filter map into the range filter"))
    }

    /// The signed displacement `g(d) - r`, constant on congruence classes of
    /// the least group congruence.
    pub fn displacement(&self) -> ZSeq {
        self.g.act_n(&self.d).diff(&self.r)
    }

    /// The semidirect-product image `(g, (g(d), r))`; a bijective
    /// homomorphism onto the product of the unit group and the pair
    /// semigroup.
    pub fn psi(&self) -> SdpElem {
        SdpElem {
            g: self.g.clone(),
            pair: BPair { p: self.g.act_n(&self.d), q: self.r.clone() },
        }
    }
}

impl BPair {
    pub fn one() -> BPair {
        BPair { p: NSeq::one(), q: NSeq::one() }
    }

    /// `(a,b) * (c,d) = (a + max{b,c} - b, d + max{b,c} - c)`.
    pub fn mul(&self, other: &BPair) -> BPair {
        let m = self.q.pointwise_max(&other.p);
        let p = self
            .p
            .offset_add(&m.diff(&self.q))
            .expect("pointwise max dominates both pair components");
        let q = other
            .q
            .offset_add(&m.diff(&other.p))
            .expect("pointwise max dominates both pair components");
        BPair { p, q }
    }

    /// Relabels both components by `g`; an automorphism of the pair
    /// semigroup.
    pub fn act(&self, g: &Perm) -> BPair {
        BPair { p: g.act_n(&self.p), q: g.act_n(&self.q) }
    }
}

impl SdpElem {
    pub fn one() -> SdpElem {
        SdpElem { g: Perm::identity(), pair: BPair::one() }
    }

    /// `(g, u)(h, v) = (gh, u.act(h) * v)`.
    pub fn mul(&self, other: &SdpElem) -> SdpElem {
        SdpElem {
            g: self.g.compose(&other.g),
            pair: self.pair.act(&other.g).mul(&other.pair),
        }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?},{:?},{:?})", self.g, self.d, self.r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(pairs: &[(u64, i64)]) -> NSeq {
        NSeq::from_entries(pairs.iter().copied()).unwrap()
    }

    fn el(g: Perm, d: &[(u64, i64)], r: &[(u64, i64)]) -> Element {
        Element::new(g, n(d), n(r))
    }

    #[test]
    fn identity_is_neutral() {
        let a = el(Perm::transposition(0, 1), &[(0, 2)], &[(1, 3)]);
        assert_eq!(Element::identity().compose(&a), a);
        assert_eq!(a.compose(&Element::identity()), a);
        assert_eq!(Element::identity().inverse(), Element::identity());
    }

    #[test]
    fn idempotent_basics() {
        assert_eq!(Element::idempotent(NSeq::one()), Element::identity());
        let e = Element::idempotent(n(&[(0, 2)]));
        let f = Element::idempotent(n(&[(1, 2)]));
        assert_eq!(e.compose(&f), Element::idempotent(n(&[(0, 2), (1, 2)])));
        assert!(Element::idempotent(n(&[(0, 3)])).is_idempotent());
        assert!(!Element::from_unit(Perm::transposition(0, 1)).is_idempotent());
        assert!(!el(Perm::identity(), &[(0, 2)], &[(0, 3)]).is_idempotent());
    }

    #[test]
    fn unit_basics() {
        assert_eq!(Element::from_unit(Perm::identity()), Element::identity());
        let g = Perm::from_cycle(&[0, 1, 2]).unwrap();
        let h = Perm::transposition(1, 3);
        assert_eq!(
            Element::from_unit(g.clone()).compose(&Element::from_unit(h.clone())),
            Element::from_unit(g.compose(&h))
        );
        let swap = Element::from_unit(Perm::transposition(0, 1));
        assert_eq!(swap.apply(&n(&[(0, 2)])).unwrap(), n(&[(1, 2)]));
    }

    #[test]
    fn h_element_basics() {
        let g = Perm::from_cycle(&[0, 1, 2]).unwrap();
        let h = Perm::transposition(0, 2);
        assert_eq!(Element::h_element(g.clone(), NSeq::one()), Element::from_unit(g.clone()));
        assert_eq!(Element::h_element(Perm::identity(), n(&[(0, 4)])), Element::idempotent(n(&[(0, 4)])));
        assert_eq!(
            Element::h_element(g.clone(), n(&[(0, 2)])).compose(&Element::h_element(h.clone(), n(&[(0, 2)]))),
            Element::h_element(g.compose(&h), n(&[(0, 2)]))
        );
    }

    #[test]
    fn compose_single_coordinate() {
        let a = el(Perm::identity(), &[(0, 2)], &[(0, 3)]);
        let b = el(Perm::identity(), &[(0, 5)], &[(0, 1)]);
        assert_eq!(a.compose(&b), el(Perm::identity(), &[(0, 4)], &[(0, 1)]));
    }

    #[test]
    fn compose_with_twist() {
        let a = Element::new(Perm::transposition(0, 1), NSeq::one(), n(&[(0, 2)]));
        let b = el(Perm::identity(), &[(1, 2)], &[]);
        assert_eq!(
            a.compose(&b),
            Element::new(Perm::transposition(0, 1), n(&[(0, 2)]), n(&[(0, 2)]))
        );
    }

    #[test]
    fn inverse_basics() {
        let a = el(Perm::identity(), &[(0, 2)], &[(0, 5)]);
        assert_eq!(a.inverse(), el(Perm::identity(), &[(0, 5)], &[(0, 2)]));
        assert_eq!(a.compose(&a.inverse()), Element::idempotent(n(&[(0, 2)])));
        assert_eq!(a.inverse().compose(&a), Element::idempotent(n(&[(0, 5)])));

        let b = Element::new(Perm::transposition(0, 1), n(&[(0, 2)]), n(&[(1, 3)]));
        assert_eq!(b.inverse(), Element::new(Perm::transposition(0, 1), n(&[(1, 3)]), n(&[(0, 2)])));
        assert!(b.compose(&b.inverse()).is_idempotent());
        assert!(b.inverse().compose(&b).is_idempotent());
    }

    #[test]
    fn apply_basics() {
        let a = n(&[(0, 4), (1, 2)]);
        assert_eq!(Element::identity().apply(&a).unwrap(), a);
        let m = el(Perm::identity(), &[(0, 2)], &[(0, 5)]);
        assert_eq!(m.apply(&a).unwrap(), n(&[(0, 7), (1, 2)]));
        assert_eq!(
            m.apply(&n(&[(1, 2)])),
            Err(Error::Below { index: 0, have: 1, need: 2 })
        );
    }

    #[test]
    fn apply_matches_the_factored_chain() {
        // shift down by d, relabel, shift up by r: the three-step factoring
        // must agree with the closed form
        let cases = [
            el(Perm::transposition(0, 1), &[(0, 2)], &[(1, 3)]),
            el(Perm::from_cycle(&[0, 1, 2]).unwrap(), &[(1, 4)], &[(0, 2), (2, 2)]),
            el(Perm::identity(), &[(0, 2)], &[(0, 5)]),
        ];
        let points = [n(&[(0, 4), (1, 5), (2, 2)]), n(&[(0, 9), (1, 4), (2, 3), (5, 2)])];
        for m in &cases {
            for a in &points {
                let chained = m.g.act_n(&a.shifted_sub(&m.d).unwrap()).shifted_add(&m.r);
                assert_eq!(m.apply(a).unwrap(), chained);
            }
        }
    }

    #[test]
    fn pair_mul_basics() {
        let u = BPair { p: n(&[(0, 2)]), q: n(&[(0, 3)]) };
        let v = BPair { p: n(&[(0, 5)]), q: n(&[(0, 1)]) };
        assert_eq!(u.mul(&v), BPair { p: n(&[(0, 4)]), q: NSeq::one() });
        assert_eq!(BPair::one().mul(&v), v);
        assert_eq!(v.mul(&BPair::one()), v);

        let s = BPair { p: n(&[(0, 2)]), q: n(&[(1, 2)]) };
        let t = BPair { p: n(&[(0, 3)]), q: NSeq::one() };
        assert_eq!(s.mul(&t), BPair { p: n(&[(0, 4)]), q: n(&[(1, 2)]) });
    }

    #[test]
    fn pair_act_basics() {
        let u = BPair { p: n(&[(0, 2)]), q: NSeq::one() };
        let swap = Perm::transposition(0, 1);
        assert_eq!(u.act(&swap), BPair { p: n(&[(1, 2)]), q: NSeq::one() });
        assert_eq!(u.act(&Perm::identity()), u);
    }

    #[test]
    fn sdp_mul_basics() {
        let swap = Perm::transposition(0, 1);
        let t = SdpElem {
            g: swap.clone(),
            pair: BPair { p: n(&[(0, 3)]), q: n(&[(1, 2)]) },
        };
        assert_eq!(SdpElem::one().mul(&t), t);

        let u = BPair { p: n(&[(0, 2)]), q: n(&[(1, 4)]) };
        let v = BPair { p: n(&[(1, 3)]), q: NSeq::one() };
        let s = SdpElem { g: swap.clone(), pair: u.clone() };
        let w = SdpElem { g: Perm::identity(), pair: v.clone() };
        assert_eq!(s.mul(&w), SdpElem { g: swap.clone(), pair: u.mul(&v) });

        let lhs = SdpElem { g: swap.clone(), pair: BPair { p: n(&[(0, 2)]), q: NSeq::one() } };
        let rhs = SdpElem { g: swap, pair: BPair::one() };
        assert_eq!(
            lhs.mul(&rhs),
            SdpElem { g: Perm::identity(), pair: BPair { p: n(&[(1, 2)]), q: NSeq::one() } }
        );
    }

    #[test]
    fn psi_basics() {
        assert_eq!(Element::identity().psi(), SdpElem::one());
        let swap = Perm::transposition(0, 1);
        let a = Element::new(swap.clone(), n(&[(0, 2)]), n(&[(1, 3)]));
        assert_eq!(
            a.psi(),
            SdpElem { g: swap.clone(), pair: BPair { p: n(&[(1, 2)]), q: n(&[(1, 3)]) } }
        );

        // homomorphism on a pair with a twist
        let x = Element::new(swap, NSeq::one(), n(&[(0, 2)]));
        let y = el(Perm::identity(), &[(1, 2)], &[]);
        assert_eq!(x.compose(&y).psi(), x.psi().mul(&y.psi()));
    }
}
