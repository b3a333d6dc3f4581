//! t-core codings, exploded tableaux and multiset hook length identities.
//!
//! The crate is organised bottom-up:
//!
//! * [`partitions`]: partitions, hooks, contents, enumeration.
//! * [`coding`]: W/V/C-sets, the bijection onto `V_t`-codings and the
//!   hook-content bijection.
//! * [`exploded`]: finite windows of the exploded tableau and the
//!   translation/fold relations on them.
//! * [`weights`]: formal products `∏ τ(k)^{e_k}` and the multiset hook
//!   length formulas as exponent identities.
//! * [`qseries`]: truncated power series over pluggable coefficient rings.
//! * [`identities`]: one verifier per generating-function identity.

pub mod coding;
pub mod error;
pub mod exploded;
pub mod identities;
pub mod partitions;
pub mod qseries;
pub mod weights;

pub use coding::{HalfInt, VtCoding, WSet};
pub use error::Error;
pub use partitions::{HookMultiset, Partition};
