pub mod cli;
pub mod error;
pub mod explorer;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod report;
pub mod semigroup;
