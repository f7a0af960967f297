//! Brute-force ground truth on finite grids.
//!
//! Elements are realized as explicit partial maps on a truncated box of
//! grid points, composed relationally, and compared against the algebraic
//! composition. Grid points pack one coordinate per byte into a `u64`, so
//! point order is lexicographic order.

use crate::error::{Error, Result};
use crate::monoid::Element;
use crate::seq::{Index, NSeq};

/// A finite window: an ordered index support and a coordinate bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Truncation {
    support: Vec<Index>,
    bound: u64,
}

/// An explicit partial map between grid points, kept sorted by domain
/// point. Construction checks that it is an order isomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridMap {
    support: Vec<Index>,
    bound: u64,
    pairs: Vec<(u64, u64)>,
}

// pairwise order checks are exact but quadratic; above this size rely on
// unit steps, which decide the same property on the order-convex domains
// that truncation and relational composition produce
const FULL_CHECK_LIMIT: usize = 512;

impl Truncation {
    pub fn new<I: IntoIterator<Item = Index>>(support: I, bound: u64) -> Result<Truncation> {
        let mut support: Vec<Index> = support.into_iter().collect();
        support.sort_unstable();
        support.dedup();
        if support.is_empty() {
            return Err(Error::EmptySupport);
        }
        if support.len() > 8 {
            return Err(Error::SupportTooLarge(support.len()));
        }
        if !(2..=255).contains(&bound) {
            return Err(Error::BadBound(bound));
        }
        Ok(Truncation { support, bound })
    }

    pub fn support(&self) -> &[Index] {
        &self.support
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// Packs per-support coordinates into a point.
    pub fn encode(&self, coords: &[u64]) -> u64 {
        assert_eq!(coords.len(), self.support.len());
        coords.iter().fold(0, |p, &c| {
            assert!((1..=self.bound).contains(&c));
            (p << 8) | c
        })
    }

    fn require(&self, x: Index) -> Result<()> {
        if self.support.binary_search(&x).is_ok() {
            Ok(())
        } else {
            Err(Error::SupportMissing(x))
        }
    }

    fn covers(&self, e: &Element) -> Result<()> {
        for x in e.g.moved_points() {
            self.require(x)?;
        }
        for x in e.d.support() {
            self.require(x)?;
        }
        for x in e.r.support() {
            self.require(x)?;
        }
        Ok(())
    }

    fn point_seq(&self, p: u64) -> NSeq {
        let s = self.support.len();
        NSeq::build(
            self.support
                .iter()
                .enumerate()
                .map(|(i, &x)| (x, coord(p, i, s) as i64)),
        )
    }
}

fn coord(p: u64, i: usize, s: usize) -> u64 {
    (p >> (8 * (s - 1 - i))) & 0xff
}

fn coords_ok(p: u64, s: usize, bound: u64) -> bool {
    if s < 8 && (p >> (8 * s)) != 0 {
        return false;
    }
    (0..s).all(|i| (1..=bound).contains(&coord(p, i, s)))
}

fn point_leq(a: u64, b: u64, s: usize) -> bool {
    (0..s).all(|i| coord(a, i, s) <= coord(b, i, s))
}

fn lookup(pairs: &[(u64, u64)], p: u64) -> Option<u64> {
    pairs
        .binary_search_by_key(&p, |&(a, _)| a)
        .ok()
        .map(|i| pairs[i].1)
}

impl GridMap {
    /// Validates and stores a point mapping: injective and order-preserving
    /// in both directions, i.e. an order isomorphism onto its image.
    pub fn new(t: &Truncation, mut pairs: Vec<(u64, u64)>) -> Result<GridMap> {
        let s = t.support.len();
        pairs.sort_unstable();
        for w in pairs.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::NotOrderIso("a point is mapped twice"));
            }
        }
        for &(a, b) in &pairs {
            if !coords_ok(a, s, t.bound) || !coords_ok(b, s, t.bound) {
                return Err(Error::NotOrderIso("a coordinate leaves the box"));
            }
        }
        let mut flipped: Vec<(u64, u64)> = pairs.iter().map(|&(a, b)| (b, a)).collect();
        flipped.sort_unstable();
        for w in flipped.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::NotOrderIso("two points share an image"));
            }
        }
        for (list, side) in [(&pairs, "forward"), (&flipped, "backward")] {
            for &(a, fa) in list.iter() {
                for i in 0..s {
                    if coord(a, i, s) >= t.bound {
                        continue;
                    }
                    let step = 1u64 << (8 * (s - 1 - i));
                    if let Some(fb) = lookup(list, a + step) {
                        if !point_leq(fa, fb, s) {
                            return Err(match side {
                                "forward" => Error::NotOrderIso("a unit step is not preserved"),
                                _ => Error::NotOrderIso("a unit step is not reflected"),
                            });
                        }
                    }
                }
            }
        }
        if pairs.len() <= FULL_CHECK_LIMIT {
            for (i, &(a, fa)) in pairs.iter().enumerate() {
                for &(b, fb) in &pairs[i + 1..] {
                    let fwd = (point_leq(a, b, s) == point_leq(fa, fb, s))
                        && (point_leq(b, a, s) == point_leq(fb, fa, s));
                    if !fwd {
                        return Err(Error::NotOrderIso("order differs between a point pair"));
                    }
                }
            }
        }
        Ok(GridMap { support: t.support.clone(), bound: t.bound, pairs })
    }

    pub fn get(&self, p: u64) -> Option<u64> {
        lookup(&self.pairs, p)
    }

    pub fn pairs(&self) -> &[(u64, u64)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    fn truncation(&self) -> Truncation {
        Truncation { support: self.support.clone(), bound: self.bound }
    }
}

/// Restricts an element to the grid: every box point of its domain filter
/// whose image also stays in the box, mapped explicitly.
pub fn truncate(alpha: &Element, t: &Truncation) -> Result<GridMap> {
    t.covers(alpha)?;
    let s = t.support.len();
    let lows: Vec<u64> = t.support.iter().map(|&x| alpha.d.get(x) as u64).collect();
    let mut pairs = Vec::new();
    if lows.iter().all(|&lo| lo <= t.bound) {
        let mut cur = lows.clone();
        'grid: loop {
            let a = NSeq::build(t.support.iter().zip(&cur).map(|(&x, &v)| (x, v as i64)));
            let img = alpha.apply(&a).expect("enumerated point lies in the domain filter");
            let img_coords: Vec<u64> = t.support.iter().map(|&x| img.get(x) as u64).collect();
            if img_coords.iter().all(|&c| c <= t.bound) {
                pairs.push((t.encode(&cur), t.encode(&img_coords)));
            }
            for i in (0..s).rev() {
                cur[i] += 1;
                if cur[i] <= t.bound {
                    continue 'grid;
                }
                cur[i] = lows[i];
            }
            break;
        }
    }
    GridMap::new(t, pairs)
}

/// Relational composition: `f` first, then `h`, defined where the chain is.
pub fn brute_compose(f: &GridMap, h: &GridMap) -> GridMap {
    assert_eq!(f.support, h.support, "grid maps share a window");
    assert_eq!(f.bound, h.bound, "grid maps share a window");
    let pairs = f
        .pairs
        .iter()
        .filter_map(|&(a, fa)| h.get(fa).map(|b| (a, b)))
        .collect();
    GridMap::new(&f.truncation(), pairs)
        .expect("a chain of order isomorphisms is an order isomorphism")
}

/// Differential test: the relational composite of the truncations must match
/// the truncation of the algebraic composite everywhere the box allows.
pub fn agree(alpha: &Element, beta: &Element, t: &Truncation) -> Result<bool> {
    agree_with(alpha, beta, &alpha.compose(beta), t)
}

fn agree_with(alpha: &Element, beta: &Element, claimed: &Element, t: &Truncation) -> Result<bool> {
    let ta = truncate(alpha, t)?;
    let tb = truncate(beta, t)?;
    let tc = truncate(claimed, t)?;
    let brute = brute_compose(&ta, &tb);

    // every brute point must appear in the claimed composite, with the same
    // image
    for &(a, ba) in brute.pairs() {
        if tc.get(a) != Some(ba) {
            return Ok(false);
        }
    }
    // every claimed point whose intermediate image stays inside the box must
    // be reproduced by the brute chain; points pushed out of the box by the
    // intermediate hop are exempt
    for &(a, ca) in tc.pairs() {
        let aseq = t.point_seq(a);
        if !alpha.d.leq(&aseq) {
            return Ok(false);
        }
        let mid = alpha.apply(&aseq).expect("checked against the domain generator");
        let interior = t.support.iter().all(|&x| mid.get(x) as u64 <= t.bound);
        if interior && brute.get(a) != Some(ca) {
            return Ok(false);
        }
    }
    Ok(true)
}
