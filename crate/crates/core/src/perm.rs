//! Finitary permutations of the index set and their relabeling action on
//! finitely supported sequences.
//!
//! Only the moved points are stored; the stored pairs form a bijection of
//! their own key set, so any unstored index is fixed.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::seq::{Index, NSeq, ZSeq};

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Perm {
    moved: BTreeMap<Index, Index>,
}

impl Perm {
    pub fn identity() -> Perm {
        Perm::default()
    }

    /// Builds from (from, to) pairs. Explicit fixed points are dropped; pairs
    /// that are not a bijection of their own key set are rejected.
    pub fn from_pairs<I: IntoIterator<Item = (Index, Index)>>(pairs: I) -> Result<Perm> {
        let mut moved = BTreeMap::new();
        let mut images = BTreeSet::new();
        for (from, to) in pairs {
            if from == to {
                continue;
            }
            if moved.insert(from, to).is_some() {
                return Err(Error::PermDuplicate(from));
            }
            if !images.insert(to) {
                return Err(Error::PermImageDuplicate(to));
            }
        }
        for &to in &images {
            if !moved.contains_key(&to) {
                return Err(Error::PermNotClosed(to));
            }
        }
        Ok(Perm { moved })
    }

    /// The transposition swapping `a` and `b` (identity when `a = b`).
    pub fn transposition(a: Index, b: Index) -> Perm {
        Perm::from_pairs([(a, b), (b, a)]).expect("a swap is a bijection")
    }

    /// The cycle sending each listed index to the next, wrapping around.
    pub fn from_cycle(cycle: &[Index]) -> Result<Perm> {
        let n = cycle.len();
        Perm::from_pairs((0..n).map(|i| (cycle[i], cycle[(i + 1) % n])))
    }

    pub fn apply(&self, x: Index) -> Index {
        self.moved.get(&x).copied().unwrap_or(x)
    }

    pub fn is_identity(&self) -> bool {
        self.moved.is_empty()
    }

    pub fn moved_points(&self) -> impl Iterator<Item = Index> + '_ {
        self.moved.keys().copied()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Index, Index)> + '_ {
        self.moved.iter().map(|(&f, &t)| (f, t))
    }

    pub fn inverse(&self) -> Perm {
        Perm {
            moved: self.moved.iter().map(|(&f, &t)| (t, f)).collect(),
        }
    }

    /// The bijection applying `self` first, then `other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        let keys: BTreeSet<Index> = self.moved.keys().chain(other.moved.keys()).copied().collect();
        let mut moved = BTreeMap::new();
        for x in keys {
            let y = other.apply(self.apply(x));
            if y != x {
                moved.insert(x, y);
            }
        }
        Perm { moved }
    }

    /// Relabels: the entry of `a` at `x` moves to `g(x)`, so the value at `y`
    /// becomes the value of `a` at `g^-1(y)`.
    pub fn act_n(&self, a: &NSeq) -> NSeq {
        NSeq::build(a.entries().map(|(x, v)| (self.apply(x), v)))
    }

    /// The same relabeling on integer sequences.
    pub fn act_z(&self, z: &ZSeq) -> ZSeq {
        ZSeq::build(z.entries().map(|(x, v)| (self.apply(x), v)))
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (from, to)) in self.pairs().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{from}->{to}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(pairs: &[(u64, i64)]) -> NSeq {
        NSeq::from_entries(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn construction() {
        assert_eq!(Perm::from_pairs([(0, 0), (3, 3)]).unwrap(), Perm::identity());
        assert_eq!(Perm::transposition(2, 2), Perm::identity());
        assert!(Perm::from_pairs([(0, 1)]).is_err());
        assert_eq!(Perm::from_pairs([(0, 1), (0, 2)]), Err(Error::PermDuplicate(0)));
        assert_eq!(
            Perm::from_pairs([(0, 2), (1, 2), (2, 0)]),
            Err(Error::PermImageDuplicate(2))
        );
    }

    #[test]
    fn compose_basics() {
        let swap = Perm::transposition(0, 1);
        assert_eq!(swap.compose(&swap), Perm::identity());
        let expected = Perm::from_pairs([(0, 2), (1, 0), (2, 1)]).unwrap();
        assert_eq!(swap.compose(&Perm::transposition(1, 2)), expected);
        assert_eq!(swap.compose(&Perm::identity()), swap);
    }

    #[test]
    fn inverse_basics() {
        let swap = Perm::transposition(0, 1);
        assert_eq!(swap.inverse(), swap);
        let cycle = Perm::from_cycle(&[0, 1, 2]).unwrap();
        assert_eq!(cycle.inverse(), Perm::from_pairs([(0, 2), (1, 0), (2, 1)]).unwrap());
        assert_eq!(Perm::identity().inverse(), Perm::identity());
        assert_eq!(cycle.compose(&cycle.inverse()), Perm::identity());
    }

    #[test]
    fn act_relabels_entries() {
        let swap = Perm::transposition(0, 1);
        assert_eq!(swap.act_n(&n(&[(0, 7)])), n(&[(1, 7)]));
        let cycle = Perm::from_cycle(&[0, 1, 2]).unwrap();
        assert_eq!(cycle.act_n(&NSeq::one()), NSeq::one());
        assert_eq!(cycle.act_n(&n(&[(0, 2), (1, 3)])), n(&[(1, 2), (2, 3)]));

        let zs = ZSeq::from_entries([(0, -1)]).unwrap();
        assert_eq!(swap.act_z(&zs), ZSeq::from_entries([(1, -1)]).unwrap());
        assert_eq!(Perm::identity().act_z(&zs), zs);
        assert_eq!(swap.act_z(&ZSeq::zero()), ZSeq::zero());
    }
}
