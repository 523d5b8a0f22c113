//! Brute-force reference computations, written without the canonical-form
//! machinery so they can check it.

mod boolean;
mod quotient;
mod zigzag;

pub use boolean::{boolean_chain_counts, boolean_chains};
pub use quotient::{quotient_check, QuotientReport, RawTriple};
pub use zigzag::{zigzag_check, ZigZagReport};
