//! Exact computations for the orthosymplectic Lie superalgebra `osp(1,2l)`:
//! root data and Weyl group combinatorics, the group ring `ℤ[𝔥*]` and its
//! `q`-series ring, Kac characters and the graded multiplicities of the
//! harmonic space, factored Shapovalov and PRV determinants, and the
//! annihilator criterion for Verma modules.

pub mod charmult;
pub mod cli;
pub mod determinants;
pub mod error;
pub mod formal;
pub mod json;
pub mod oracle;
pub mod poly;
pub mod rootdata;
pub mod weight;
pub mod weyl;

pub use error::{Error, Result};
pub use poly::IntPoly;
pub use rootdata::{build_root_system, RootSystem};
pub use weight::{Rational, Weight};
pub use weyl::WeylElement;
