//! The guide in `book/`, compiled so its snippets run as doctests.

#[doc = include_str!("../../../book/src/intro.md")]
pub mod intro {}

#[doc = include_str!("../../../book/src/geometry.md")]
pub mod geometry {}

#[doc = include_str!("../../../book/src/monomial-ideals.md")]
pub mod monomial_ideals {}

#[doc = include_str!("../../../book/src/valuations.md")]
pub mod valuations {}

#[doc = include_str!("../../../book/src/filtrations.md")]
pub mod filtrations {}

#[doc = include_str!("../../../book/src/saturation.md")]
pub mod saturation {}

#[doc = include_str!("../../../book/src/b-divisors.md")]
pub mod b_divisors {}

#[doc = include_str!("../../../book/src/correspondence.md")]
pub mod correspondence {}

#[doc = include_str!("../../../book/src/oracles.md")]
pub mod oracles {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
