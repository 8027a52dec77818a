//! The user guide, embedded chapter by chapter so that every code block in
//! it compiles and runs under `cargo test --doc`.
//!
//! The rendered version of the same text lives in the repository's `book/`
//! directory (an mdBook); this module is what keeps the two in sync: the
//! chapters below *are* the book sources, included verbatim.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/lattices.md")]
pub mod lattices {}

#[doc = include_str!("../../../book/src/covers.md")]
pub mod covers {}

#[doc = include_str!("../../../book/src/certificates.md")]
pub mod certificates {}

#[doc = include_str!("../../../book/src/kenergy.md")]
pub mod kenergy {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
