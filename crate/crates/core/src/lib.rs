//! Exact computations with the Hopf dual of a universal enveloping algebra:
//! noncommutative polynomials, shuffle-algebra functionals, matrix
//! coefficients of integrable modules, the group words they are evaluated
//! on, and truncated highest-weight modules of Kac-Moody algebras.

pub mod check;
pub mod cli;
pub mod duals;
pub mod error;
pub mod grp;
pub mod io;
pub mod kacmoody;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod reps;
pub mod words;
