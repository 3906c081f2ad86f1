//! Runs the code snippets of the guide in `book/src` as doctests.
//!
//! mdbook cannot test snippets that depend on workspace crates, so each
//! chapter is pulled in here as the doc comment of an empty module and
//! `cargo test --doc` checks it. One module per chapter keeps failures
//! traceable to their file.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/graphs.md")]
pub mod graphs {}

#[doc = include_str!("../../../book/src/topologies.md")]
pub mod topologies {}

#[doc = include_str!("../../../book/src/embedding.md")]
pub mod embedding {}

#[doc = include_str!("../../../book/src/compatibility.md")]
pub mod compatibility {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
