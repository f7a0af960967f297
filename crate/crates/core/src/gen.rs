//! Deterministic case generators behind the property suites.
//!
//! Every case owns an independent generator: the seed picks the ChaCha key
//! and the (suite, case) pair picks the stream, so cases can run in any
//! order, or in parallel, and still see identical values.

use crate::monoid::Element;
use crate::congruence::QuotElem;
use crate::oracle::Truncation;
use crate::perm::Perm;
use crate::seq::{Index, NSeq, ZSeq};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Sampling bounds echoed in every report header.
#[derive(Clone, Copy, Debug)]
pub struct GenBounds {
    pub index_hi: Index,
    pub value_hi: i64,
    pub perm_moved_max: usize,
}

impl GenBounds {
    pub fn new(bound: u64) -> GenBounds {
        GenBounds { index_hi: 8, value_hi: bound as i64, perm_moved_max: 6 }
    }
}

pub fn case_rng(seed: u64, suite: u64, case: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((suite << 48) ^ case);
    rng
}

fn index_set(rng: &mut ChaCha8Rng, hi: Index, max_count: usize) -> Vec<Index> {
    let count = rng.gen_range(0..=max_count.min(hi as usize));
    let mut pool: Vec<Index> = (0..hi).collect();
    pool.shuffle(rng);
    pool.truncate(count);
    pool.sort_unstable();
    pool
}

pub fn nseq(rng: &mut ChaCha8Rng, b: &GenBounds) -> NSeq {
    let picked = index_set(rng, b.index_hi, 3);
    let entries: Vec<(Index, i64)> =
        picked.into_iter().map(|x| (x, rng.gen_range(1..=b.value_hi))).collect();
    NSeq::from_entries(entries).expect("sampled values are in range")
}

pub fn zseq(rng: &mut ChaCha8Rng, b: &GenBounds) -> ZSeq {
    let picked = index_set(rng, b.index_hi, 3);
    let top = (b.value_hi - 1).max(1);
    let entries: Vec<(Index, i64)> = picked
        .into_iter()
        .map(|x| {
            let mag = rng.gen_range(1..=top);
            (x, if rng.gen_range(0..2) == 0 { mag } else { -mag })
        })
        .collect();
    ZSeq::from_entries(entries).expect("sampled values are in range")
}

pub fn perm(rng: &mut ChaCha8Rng, b: &GenBounds) -> Perm {
    let picked = index_set(rng, b.index_hi, b.perm_moved_max);
    let mut image = picked.clone();
    image.shuffle(rng);
    Perm::from_pairs(picked.into_iter().zip(image))
        .expect("a shuffled relabeling of a set is a bijection")
}

pub fn element(rng: &mut ChaCha8Rng, b: &GenBounds) -> Element {
    let g = perm(rng, b);
    let d = nseq(rng, b);
    let r = nseq(rng, b);
    Element::new(g, d, r)
}

pub fn quot(rng: &mut ChaCha8Rng, b: &GenBounds) -> QuotElem {
    QuotElem { g: perm(rng, b), z: zseq(rng, b) }
}

/// A differential-test case: two elements confined to a small index window
/// with damped values, plus the matching grid.
///
/// The damping keeps at least ten interior grid points per axis whenever the
/// bound is at least ten: along each axis the interior count is at least
/// bound + 2 - 2*cap, and cap never exceeds (bound - 8) / 2.
pub fn oracle_case(rng: &mut ChaCha8Rng, bound: u64) -> (Element, Element, Truncation) {
    let mut wmax = 1u32;
    while wmax < 3 && (bound + 1).pow(wmax + 1) <= 1 << 17 {
        wmax += 1;
    }
    let roll = rng.gen_range(0u32..8);
    let w = if roll < 4 { 1 } else if roll < 7 { 2 } else { 3 }.min(wmax) as usize;
    let mut pool: Vec<Index> = (0..8).collect();
    pool.shuffle(rng);
    pool.truncate(w);
    pool.sort_unstable();
    let cap = (bound.saturating_sub(8) / 2).clamp(1, 8) as i64;

    let windowed = |rng: &mut ChaCha8Rng| {
        let entries: Vec<(Index, i64)> =
            pool.iter().map(|&x| (x, rng.gen_range(1..=cap))).collect();
        NSeq::from_entries(entries).expect("sampled values are in range")
    };
    let window_perm = |rng: &mut ChaCha8Rng| {
        let mut image = pool.clone();
        image.shuffle(rng);
        Perm::from_pairs(pool.iter().copied().zip(image))
            .expect("a shuffled relabeling of a set is a bijection")
    };

    let alpha = Element::new(window_perm(rng), windowed(rng), windowed(rng));
    let beta = Element::new(window_perm(rng), windowed(rng), windowed(rng));
    let t = Truncation::new(pool, bound).expect("window and bound are in range");
    (alpha, beta, t)
}
