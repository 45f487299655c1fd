//! Counting matrices of finite abstract simplicial complexes and discrete CW complexes.
//!
//! For a complex `G` with `n` sets the counting matrix is `K(x,y) = |W⁻(x) ∩ W⁻(y)|`, the
//! number of common faces of `x` and `y`. The crate assembles `K`, its star-formula inverse,
//! the connection matrix `L`, the parametrized family `L_t`, and checks their algebraic
//! properties in exact arithmetic. Spectra are computed in floats; zeta evaluation polishes
//! the eigenvalues against the exact characteristic polynomial first.

pub mod complex;
pub mod error;
pub mod exact;
pub mod io;
pub mod matrices;
pub mod matrix;
pub mod ring;
pub mod rng;
pub mod spectra;
pub mod verify;

pub use complex::{AnyComplex, CellComplex, CwComplex, FVector, Graph, Simplex, SimplicialComplex};
pub use error::{Error, Result};
pub use matrix::{IntegerMatrix, Matrix, RationalMatrix};
