pub mod error;
pub mod fusion_blocks;
pub mod qip;
pub mod qlaurent;
pub mod qproduct;
pub mod rational;
pub mod realopt;
pub mod slopes;
pub mod series;
pub mod statesum;
pub mod tropical;

pub use error::{Error, Result};
pub use qlaurent::{LaurentFraction, LaurentPolynomial, QExponent};
pub use rational::Rational;
pub use slopes::SectorLabel;
pub use statesum::{KnotParams, LatticeState};
pub use tropical::RegionLabel;
