//! Core numerics for a tangent-plane BDF discretization of the
//! Landau-Lifshitz-Gilbert equation on hexahedral tensor-product meshes.
//!
//! The crate is `no_std` (with `alloc`); all IO lives in the companion CLI
//! crate. Modules build on each other bottom-up:
//!
//! - [`mesh`]: structured hexahedral meshes of `[0,1]^2 x [0,L]`
//! - [`fem`]: Lagrange spaces, quadrature, assembly, norms
//! - [`linalg`]: CSR matrices, CG/GMRES, dense LU oracle
//! - [`tangent`]: discrete tangent-space projection and residuals
//! - [`bdf`]: BDF coefficients and the linearly implicit integrator
//! - [`stability`]: G-matrices, Nevanlinna-Odeh multipliers, energy reports
//! - [`problems`]: manufactured solutions and forcing fields

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bdf;
pub mod fem;
pub mod linalg;
pub mod mesh;
pub mod problems;
pub mod stability;
pub mod tangent;
pub mod util;
pub mod vec3;
