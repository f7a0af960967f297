//! Finitely supported sequences over an unbounded index set.
//!
//! `NSeq` models positive-integer sequences equal to 1 almost everywhere,
//! `ZSeq` integer sequences equal to 0 almost everywhere. Only the
//! off-default entries are stored, so structural equality is mathematical
//! equality and every operation is exact.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

pub type Index = u64;

/// Largest magnitude accepted from external input; keeps all downstream
/// formulas inside checked `i64` arithmetic.
pub const VALUE_CAP: i64 = 1 << 40;

/// A finitely supported sequence of positive integers (default 1).
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct NSeq {
    entries: BTreeMap<Index, i64>,
}

/// A finitely supported sequence of integers (default 0).
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct ZSeq {
    entries: BTreeMap<Index, i64>,
}

fn union_keys(a: &BTreeMap<Index, i64>, b: &BTreeMap<Index, i64>) -> BTreeSet<Index> {
    a.keys().chain(b.keys()).copied().collect()
}

impl NSeq {
    /// The all-ones sequence, the bottom of the pointwise order.
    pub fn one() -> NSeq {
        NSeq::default()
    }

    /// The sequence with value `k` at `x` and 1 elsewhere; `k = 1` gives the
    /// all-ones sequence.
    pub fn atom(x: Index, k: i64) -> Result<NSeq> {
        if !(1..=VALUE_CAP).contains(&k) {
            return Err(Error::Value(k));
        }
        let mut entries = BTreeMap::new();
        if k > 1 {
            entries.insert(x, k);
        }
        Ok(NSeq { entries })
    }

    /// Builds from (index, value) pairs; values of 1 are dropped, values
    /// outside `1..=VALUE_CAP` or repeated indices are rejected.
    pub fn from_entries<I: IntoIterator<Item = (Index, i64)>>(iter: I) -> Result<NSeq> {
        let mut entries = BTreeMap::new();
        for (x, v) in iter {
            if !(1..=VALUE_CAP).contains(&v) {
                return Err(Error::Value(v));
            }
            if entries.insert(x, v).is_some() {
                return Err(Error::DuplicateIndex(x));
            }
        }
        entries.retain(|_, v| *v > 1);
        Ok(NSeq { entries })
    }

    pub(crate) fn build<I: IntoIterator<Item = (Index, i64)>>(iter: I) -> NSeq {
        let mut entries = BTreeMap::new();
        for (x, v) in iter {
            assert!(v >= 1, "sequence value fell below one");
            if v > 1 {
                entries.insert(x, v);
            }
        }
        NSeq { entries }
    }

    pub fn get(&self, x: Index) -> i64 {
        self.entries.get(&x).copied().unwrap_or(1)
    }

    pub fn is_one(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = Index> + '_ {
        self.entries.keys().copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = (Index, i64)> + '_ {
        self.entries.iter().map(|(&x, &v)| (x, v))
    }

    /// Per-index maximum.
    pub fn pointwise_max(&self, other: &NSeq) -> NSeq {
        NSeq::build(
            union_keys(&self.entries, &other.entries)
                .into_iter()
                .map(|x| (x, self.get(x).max(other.get(x)))),
        )
    }

    /// Per-index minimum.
    pub fn pointwise_min(&self, other: &NSeq) -> NSeq {
        NSeq::build(
            union_keys(&self.entries, &other.entries)
                .into_iter()
                .map(|x| (x, self.get(x).min(other.get(x)))),
        )
    }

    /// Per-index `a + b - 1`; the all-ones sequence is neutral.
    pub fn shifted_add(&self, other: &NSeq) -> NSeq {
        NSeq::build(
            union_keys(&self.entries, &other.entries)
                .into_iter()
                .map(|x| {
                    let v = self
                        .get(x)
                        .checked_add(other.get(x))
                        .and_then(|s| s.checked_sub(1))
                        .expect("sequence value overflow");
                    (x, v)
                }),
        )
    }

    /// Per-index `a - b + 1`; requires `other` below `self` everywhere.
    pub fn shifted_sub(&self, other: &NSeq) -> Result<NSeq> {
        let keys = union_keys(&self.entries, &other.entries);
        for &x in &keys {
            let (av, bv) = (self.get(x), other.get(x));
            if bv > av {
                return Err(Error::Below { index: x, have: av, need: bv });
            }
        }
        Ok(NSeq::build(keys.into_iter().map(|x| (x, self.get(x) - other.get(x) + 1))))
    }

    /// Per-index `a - b` as an integer sequence; always defined.
    pub fn diff(&self, other: &NSeq) -> ZSeq {
        ZSeq::build(
            union_keys(&self.entries, &other.entries)
                .into_iter()
                .map(|x| (x, self.get(x) - other.get(x))),
        )
    }

    /// Per-index `a + z`; errors where the sum leaves the positive range.
    pub fn offset_add(&self, z: &ZSeq) -> Result<NSeq> {
        let keys = union_keys(&self.entries, &z.entries);
        let mut out = Vec::with_capacity(keys.len());
        for x in keys {
            let (have, delta) = (self.get(x), z.get(x));
            let v = have.checked_add(delta).ok_or(Error::Overflow(x))?;
            if v < 1 {
                return Err(Error::Range { index: x, have, delta });
            }
            out.push((x, v));
        }
        Ok(NSeq::build(out))
    }

    /// The product (pointwise) order.
    pub fn leq(&self, other: &NSeq) -> bool {
        self.leq_violation(other).is_none()
    }

    /// First index at which `self` exceeds `other`, if any.
    pub fn leq_violation(&self, other: &NSeq) -> Option<Index> {
        union_keys(&self.entries, &other.entries)
            .into_iter()
            .find(|&x| self.get(x) > other.get(x))
    }

    /// Keeps the value at `x`, resets every other index to 1.
    pub fn project(&self, x: Index) -> NSeq {
        NSeq::build(self.entries.get(&x).map(|&v| (x, v)))
    }
}

impl ZSeq {
    pub fn zero() -> ZSeq {
        ZSeq::default()
    }

    /// Builds from (index, value) pairs; zero values are dropped, values of
    /// magnitude above `VALUE_CAP` or repeated indices are rejected.
    pub fn from_entries<I: IntoIterator<Item = (Index, i64)>>(iter: I) -> Result<ZSeq> {
        let mut entries = BTreeMap::new();
        for (x, v) in iter {
            if v.abs() > VALUE_CAP {
                return Err(Error::Value(v));
            }
            if entries.insert(x, v).is_some() {
                return Err(Error::DuplicateIndex(x));
            }
        }
        entries.retain(|_, v| *v != 0);
        Ok(ZSeq { entries })
    }

    pub(crate) fn build<I: IntoIterator<Item = (Index, i64)>>(iter: I) -> ZSeq {
        let mut entries = BTreeMap::new();
        for (x, v) in iter {
            if v != 0 {
                entries.insert(x, v);
            }
        }
        ZSeq { entries }
    }

    pub fn get(&self, x: Index) -> i64 {
        self.entries.get(&x).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = Index> + '_ {
        self.entries.keys().copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = (Index, i64)> + '_ {
        self.entries.iter().map(|(&x, &v)| (x, v))
    }

    /// Pointwise sum.
    pub fn add(&self, other: &ZSeq) -> ZSeq {
        ZSeq::build(
            union_keys(&self.entries, &other.entries)
                .into_iter()
                .map(|x| {
                    let v = self
                        .get(x)
                        .checked_add(other.get(x))
                        .expect("sequence value overflow");
                    (x, v)
                }),
        )
    }

    /// Pointwise negation.
    pub fn neg(&self) -> ZSeq {
        ZSeq::build(self.entries().map(|(x, v)| (x, -v)))
    }
}

impl fmt::Debug for NSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (x, v)) in self.entries().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}:{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for ZSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (x, v)) in self.entries().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}:{v}")?;
        }
        write!(f, "}}")
    }
}
