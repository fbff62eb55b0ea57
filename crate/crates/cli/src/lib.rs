//! Library side of the command line tool: embedding-spec files, output
//! rendering, and the verification harness that recomputes every recorded
//! reference value and reports pass/fail per claim.

pub mod embed;
pub mod output;
pub mod verify;
