//! Compiles the guide's code blocks as doc-tests, one module per chapter,
//! together with the README, so that `cargo test` keeps them honest.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/semigroups.md")]
pub mod semigroups {}

#[doc = include_str!("../../../book/src/semimodules.md")]
pub mod semimodules {}

#[doc = include_str!("../../../book/src/cells.md")]
pub mod cells {}

#[doc = include_str!("../../../book/src/dual-map.md")]
pub mod dual_map {}

#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

#[doc = include_str!("../../../README.md")]
pub mod readme {}
