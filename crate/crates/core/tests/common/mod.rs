#![allow(dead_code)]

use pfiso_core::{Element, NSeq, Perm, QuotElem, ZSeq};
use proptest::prelude::*;

pub fn nseq() -> impl Strategy<Value = NSeq> {
    proptest::collection::btree_map(0u64..8, 1i64..=12, 0..4)
        .prop_map(|m| NSeq::from_entries(m).expect("values start at 1"))
}

pub fn zseq() -> impl Strategy<Value = ZSeq> {
    proptest::collection::btree_map(0u64..8, -6i64..=6, 0..4)
        .prop_map(|m| ZSeq::from_entries(m).expect("zeros are dropped"))
}

pub fn perm() -> impl Strategy<Value = Perm> {
    proptest::sample::subsequence((0u64..8).collect::<Vec<_>>(), 0..=6usize).prop_flat_map(
        |set| {
            let domain = set.clone();
            Just(set).prop_shuffle().prop_map(move |image| {
                Perm::from_pairs(domain.iter().copied().zip(image))
                    .expect("a shuffled relabeling of a set is a bijection")
            })
        },
    )
}

pub fn element() -> impl Strategy<Value = Element> {
    (perm(), nseq(), nseq()).prop_map(|(g, d, r)| Element::new(g, d, r))
}

pub fn quot() -> impl Strategy<Value = QuotElem> {
    (perm(), zseq()).prop_map(|(g, z)| QuotElem { g, z })
}
