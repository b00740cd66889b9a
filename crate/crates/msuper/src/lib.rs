//! Nonsymmetric Macdonald superpolynomials: construction through the Yang-Baxter
//! graph, evaluation at the points `(1, t, ..., t^(N-1))` and `(1, 1/t, ..., t^(1-N))`,
//! and exact verification of the closed evaluation formulas.

pub mod arith;
pub mod error;
pub mod evaluation;
pub mod fermion;
pub mod linalg;
pub mod serial;
pub mod superspace;
pub mod symmetrize;
pub mod verify;
pub mod yang_baxter;

pub use arith::{PolyQT, RatQT, RatT};
pub use error::{Error, Result};
pub use fermion::{FermionPoly, FermionSet, Kind, ModuleLabel};
pub use superspace::{Composition, Coord, Key, PointSpec, SuperPoly};
