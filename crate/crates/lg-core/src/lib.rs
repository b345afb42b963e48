//! Exact computation of the Links-Gould invariant LG^{2,1}.

pub mod algebra;
pub mod basis;
pub mod knots;
pub mod reps;
pub mod ring;
pub mod rmatrix;
pub mod tangle;
pub mod topo;
pub mod verify;
