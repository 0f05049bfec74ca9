pub mod assoc;
pub mod bounds;
pub mod error;
pub mod ideal;
pub mod linsys;
pub mod monomial;
pub mod parse;
pub mod powers;
pub mod verify;

pub use assoc::{ass, AssSet, PrimeSupport};
pub use error::{Error, Result};
pub use ideal::{IdealStats, MonomialIdeal};
pub use monomial::ExponentVector;
pub use parse::{parse_ideal, render_ideal, render_monomial, IdealSource, ParsedIdeal};
