//! Exact computations for commutative quasi-local rings whose maximal ideal
//! cubes to zero: socles, colon ideals, associated graded rings, and a
//! decision procedure for whether injective hulls of simple modules are
//! locally Artinian.

pub mod error;
pub mod exactalg;
pub mod hankel;
pub mod algpres;
pub mod cli;
pub mod diamond;
pub mod oracle;
pub mod ringcore;

pub use error::{Error, Result};
