//! The least group congruence: canonical forms, the quotient group of
//! (twist, displacement) pairs, class maxima, and the witness constructions
//! that collapse idempotents.

use std::fmt;

use crate::error::{Error, Result};
use crate::monoid::Element;
use crate::perm::Perm;
use crate::seq::{NSeq, ZSeq};

/// An element of the quotient group: a twist together with a signed
/// displacement sequence.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuotElem {
    pub g: Perm,
    pub z: ZSeq,
}

impl QuotElem {
    pub fn identity() -> QuotElem {
        QuotElem { g: Perm::identity(), z: ZSeq::zero() }
    }

    /// `(g, m)(h, n) = (gh, h(m) + n)`.
    pub fn mul(&self, other: &QuotElem) -> QuotElem {
        QuotElem {
            g: self.g.compose(&other.g),
            z: other.g.act_z(&self.z).add(&other.z),
        }
    }

    /// The group inverse: `(g^-1, -g^-1(z))`.
    pub fn inv(&self) -> QuotElem {
        let gi = self.g.inverse();
        let z = gi.act_z(&self.z).neg();
        QuotElem { g: gi, z }
    }
}

/// The class of `a` under the least group congruence, as a quotient-group
/// element.
pub fn canonical(a: &Element) -> QuotElem {
    QuotElem { g: a.g.clone(), z: a.displacement() }
}

/// True iff the two elements fall together in every group quotient.
pub fn cmg_related(a: &Element, b: &Element) -> bool {
    canonical(a) == canonical(b)
}

/// For congruent elements, an idempotent e with a e = b e: the identity map
/// above max{r_a, r_b}.
pub fn witness_idempotent(a: &Element, b: &Element) -> Result<Element> {
    if !cmg_related(a, b) {
        return Err(Error::NotRelated);
    }
    Ok(Element::idempotent(a.r.pointwise_max(&b.r)))
}

/// A preimage of `q` under `canonical`: split the displacement into its
/// positive and negative parts, shifted up to stay positive.
pub fn lift(q: &QuotElem) -> Element {
    let a = NSeq::build(q.z.entries().filter(|&(_, v)| v > 0).map(|(x, v)| (x, v + 1)));
    let b = NSeq::build(q.z.entries().filter(|&(_, v)| v < 0).map(|(x, v)| (x, -v + 1)));
    Element::new(q.g.clone(), q.g.inverse().act_n(&a), b)
}

/// The greatest element of the congruence class of `a` under the natural
/// partial order; the monoid is F-inverse, so it always exists.
pub fn top(a: &Element) -> Element {
    let d = a
        .d
        .shifted_sub(&a.d.pointwise_min(&a.g.inverse().act_n(&a.r)))
        .expect("a pointwise min never exceeds its arguments");
    let r = a
        .r
        .shifted_sub(&a.g.act_n(&a.d).pointwise_min(&a.r))
        .expect("a pointwise min never exceeds its arguments");
    Element::new(a.g.clone(), d, r)
}

/// For an idempotent i, the shift w with w w^-1 the identity and w^-1 w = i:
/// collapsing i to the top idempotent.
pub fn collapse_witness(iota: &Element) -> Result<Element> {
    if !iota.is_idempotent() {
        return Err(Error::NotIdempotent("collapse_witness"));
    }
    Ok(Element::new(Perm::identity(), NSeq::one(), iota.d.clone()))
}

/// The idempotent (g^-1)^n g^n, by literal repeated composition.
pub fn power_idempotent(gamma: &Element, n: u32) -> Element {
    let inv = gamma.inverse();
    let mut bwd = Element::identity();
    let mut fwd = Element::identity();
    for _ in 0..n {
        bwd = bwd.compose(&inv);
        fwd = fwd.compose(gamma);
    }
    bwd.compose(&fwd)
}

impl fmt::Debug for QuotElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?},{:?})", self.g, self.z)
    }
}
