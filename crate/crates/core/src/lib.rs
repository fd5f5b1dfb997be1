//! Word problem and geodesics in the three-generator Artin groups
//! `<a, b, c | aba = bab, ac = ca, (bc)^n = (cb)^n>` via rightward reducing sequences.

pub mod abc_critical;
pub mod dihedral;
pub mod error;
pub mod group;
pub mod meter;
pub mod oracle;
pub mod p2g;
pub mod reducer;
pub mod rrs;

pub use error::{Error, ParseError, ResourceError};
pub use group::{format_word, free_reduce, invert, parse_word, Gen, GroupParams, Letter, Pair, Word};
pub use meter::Meter;
