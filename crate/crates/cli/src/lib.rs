//! Library side of the `osalg` binary: the built-in corpus, report
//! rendering, and the isomorphism-demonstration harness.

pub mod corpus;
pub mod iso;
pub mod report;
