//! Exact computation with cyclotomic charged L-graphs: Hermitian matrices over
//! the rings of integers of Q(√d), d ∈ {−2, −7, −11, −15}, whose eigenvalues lie
//! in [−2, 2].
//!
//! The modules build on each other bottom-up: [`ring`] arithmetic, [`lgraph`]
//! graphs and forms, [`spectra`] exact characteristic polynomials, [`equiv`]
//! canonical forms, [`grow`] enumeration, [`families`] the reference catalogue,
//! [`gram`] Gram-vector extensions and [`cli`] the command-line front end.

pub mod cli;
pub mod equiv;
pub mod error;
pub mod families;
pub mod gram;
pub mod grow;
pub mod lgraph;
pub mod ring;
pub mod sample;
pub mod spectra;

pub use error::{Error, Result};
pub use lgraph::LGraph;
pub use ring::{label_set, RingElement, RingId};
