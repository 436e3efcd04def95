//! Quadratic symbols of finite groups.
//!
//! An integer `a` prime to `|G|` permutes the conjugacy classes of a finite
//! group `G` by `g -> g^a`; the sign of that permutation is the quadratic
//! symbol `(a/G)`. This crate computes the symbol, the group discriminant
//! `d(G)`, and checks the reciprocity law `(a/G) = (d/a)` by exhaustion,
//! together with the character-table identities behind it.
//!
//! * [`ntheory`]: Jacobi and Kronecker symbols, factored integers.
//! * [`groups`]: group construction, conjugacy classes, power maps.
//! * [`reciprocity`]: the symbol, the discriminant and full verification.
//! * [`chartab`]: exact character tables over cyclotomic integers.
//! * [`cli`]: the command-line front end and its report formats.

pub mod chartab;
pub mod cli;
pub mod error;
pub mod groups;
pub mod ntheory;
pub mod reciprocity;
pub mod spec;

pub use error::{Error, Result};
pub use groups::{conjugacy_classes, make_group, ClassSet, GroupTable};
pub use spec::{parse_group_spec, GroupSpec};
