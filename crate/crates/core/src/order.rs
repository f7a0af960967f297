//! The natural partial order and Green's relations.
//!
//! An element lies below another when it is the other's restriction to a
//! smaller principal filter; equivalently the twists and displacements match
//! and the generators compare. The monoid has one D-class, so D and J are
//! constant.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::monoid::Element;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GreenRel {
    L,
    R,
    H,
    D,
    J,
}

impl FromStr for GreenRel {
    type Err = Error;

    fn from_str(s: &str) -> Result<GreenRel> {
        match s {
            "L" => Ok(GreenRel::L),
            "R" => Ok(GreenRel::R),
            "H" => Ok(GreenRel::H),
            "D" => Ok(GreenRel::D),
            "J" => Ok(GreenRel::J),
            _ => Err(Error::Parse {
                at: "relation".into(),
                msg: format!("expected one of L R H D J, got {s:?}"),
            }),
        }
    }
}

/// True iff `a` is a restriction of `b`: same twist, same displacement, and
/// the domain generator of `b` below that of `a`.
pub fn nat_leq(a: &Element, b: &Element) -> bool {
    a.g == b.g && a.displacement() == b.displacement() && b.d.leq(&a.d)
}

/// The same order decided through range generators; equivalent to `nat_leq`.
pub fn nat_leq_ranges(a: &Element, b: &Element) -> bool {
    a.g == b.g && a.displacement() == b.displacement() && b.r.leq(&a.r)
}

/// Green's relations: L compares domains, R compares ranges, H both; the
/// monoid is bisimple and simple, so D and J hold everywhere.
pub fn green(rel: GreenRel, a: &Element, b: &Element) -> bool {
    match rel {
        GreenRel::L => a.d == b.d,
        GreenRel::R => a.r == b.r,
        GreenRel::H => a.d == b.d && a.r == b.r,
        GreenRel::D | GreenRel::J => true,
    }
}

/// For idempotents e and i, the shift witness w with w w^-1 = e and
/// w^-1 w = i: the one-D-class construction.
pub fn d_witness(eps: &Element, iota: &Element) -> Result<Element> {
    if !eps.is_idempotent() || !iota.is_idempotent() {
        return Err(Error::NotIdempotent("d_witness"));
    }
    Ok(Element::new(crate::perm::Perm::identity(), eps.d.clone(), iota.d.clone()))
}
