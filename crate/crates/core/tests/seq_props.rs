mod common;

use common::{nseq, zseq};
use pfiso_core::{NSeq, ZSeq};
use proptest::prelude::*;

proptest! {
    #[test]
    fn shifted_add_then_sub_round_trips(a in nseq(), b in nseq()) {
        let sum = a.shifted_add(&b);
        prop_assert!(b.leq(&sum));
        prop_assert_eq!(sum.shifted_sub(&b).unwrap(), a.clone());
        prop_assert_eq!(a.shifted_add(&b), b.shifted_add(&a));
        prop_assert_eq!(a.shifted_add(&NSeq::one()), a);
    }

    #[test]
    fn offset_add_inverts_diff(a in nseq(), b in nseq()) {
        prop_assert_eq!(b.offset_add(&a.diff(&b)).unwrap(), a.clone());
        prop_assert!(a.diff(&a).is_zero());
        prop_assert_eq!(a.offset_add(&ZSeq::zero()).unwrap(), a);
    }

    #[test]
    fn diff_telescopes(a in nseq(), b in nseq(), c in nseq()) {
        prop_assert_eq!(a.diff(&c), a.diff(&b).add(&b.diff(&c)));
        prop_assert_eq!(a.diff(&b).neg(), b.diff(&a));
    }

    #[test]
    fn max_min_form_a_lattice(a in nseq(), b in nseq(), c in nseq()) {
        prop_assert_eq!(a.pointwise_max(&b), b.pointwise_max(&a));
        prop_assert_eq!(a.pointwise_min(&b), b.pointwise_min(&a));
        prop_assert_eq!(
            a.pointwise_max(&b).pointwise_max(&c),
            a.pointwise_max(&b.pointwise_max(&c))
        );
        prop_assert_eq!(a.pointwise_max(&a.pointwise_min(&b)), a.clone());
        prop_assert_eq!(a.pointwise_min(&a.pointwise_max(&b)), a.clone());
        prop_assert_eq!(a.leq(&b), a.pointwise_max(&b) == b);
        prop_assert!(a.pointwise_min(&b).leq(&a));
        prop_assert!(a.leq(&a.pointwise_max(&b)));
        prop_assert!(NSeq::one().leq(&a));
    }

    #[test]
    fn leq_violation_pinpoints(a in nseq(), b in nseq()) {
        match a.leq_violation(&b) {
            None => prop_assert!(a.leq(&b)),
            Some(x) => prop_assert!(a.get(x) > b.get(x)),
        }
    }

    #[test]
    fn projection_isolates_one_index(a in nseq(), x in 0u64..8) {
        let p = a.project(x);
        prop_assert_eq!(p.get(x), a.get(x));
        for y in 0..8 {
            if y != x {
                prop_assert_eq!(p.get(y), 1);
            }
        }
        prop_assert!(p.leq(&a));
    }

    #[test]
    fn zseq_is_an_abelian_group(u in zseq(), v in zseq(), w in zseq()) {
        prop_assert_eq!(u.add(&v), v.add(&u));
        prop_assert_eq!(u.add(&v).add(&w), u.add(&v.add(&w)));
        prop_assert!(u.add(&u.neg()).is_zero());
        prop_assert_eq!(u.add(&ZSeq::zero()), u);
    }

    #[test]
    fn atoms_embed(x in 0u64..8, k in 1i64..=40) {
        let a = NSeq::atom(x, k).unwrap();
        prop_assert_eq!(a.get(x), k);
        prop_assert_eq!(a.is_one(), k == 1);
    }
}
