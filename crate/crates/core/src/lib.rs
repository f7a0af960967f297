//! Exact algebra of the inverse monoid of order isomorphisms between
//! principal filters of finitely supported positive-integer sequences.
//!
//! Elements are triples of a finitary index permutation and two sparse
//! generator sequences; every operation is exact integer arithmetic. The
//! library carries its own ground truth: a brute-force partial-map oracle on
//! finite grids, and seeded property suites that replay the algebra's laws.

pub mod batch;
pub mod congruence;
pub mod encode;
pub mod error;
pub mod gen;
pub mod monoid;
pub mod oracle;
pub mod order;
pub mod perm;
pub mod seq;
pub mod verify;

pub use congruence::QuotElem;
pub use error::{Error, Result};
pub use monoid::{BPair, Element, SdpElem};
pub use perm::Perm;
pub use seq::{Index, NSeq, ZSeq, VALUE_CAP};
