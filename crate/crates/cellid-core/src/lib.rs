//! Lithium-ion cell modeling and identification.
//!
//! The crate provides two cell models and the machinery to identify them
//! from current/voltage data alone:
//!
//! * [`spm`] — an electrochemical single particle model: one spherical
//!   diffusion particle per electrode, equilibrium potential curves,
//!   Butler-Volmer kinetics and a film resistance.
//! * [`ecm`] — a second-order RC equivalent circuit model, optionally with
//!   SoC-dependent parameters.
//! * [`spectral`] — Chebyshev collocation operators that reduce the radial
//!   diffusion PDE to a small linear ODE system.
//! * [`optimize`] — a bounded Levenberg-Marquardt least-squares solver with
//!   ordering constraints and trajectory penalties.
//! * [`protocols`] — excitation profile generators (pulse discharge,
//!   constant current, band-limited noise) and a synthetic dataset factory.
//! * [`ident`] — the identification pipelines: equilibrium curves and
//!   stoichiometry limits, kinetics parameters, ECM static and dynamic
//!   characterization, and validation reporting.
//! * [`config`] — run configuration, parameter files and the dataset CSV
//!   format shared with the command line front end.

pub mod config;
pub mod constants;
pub mod ecm;
pub mod error;
pub mod ident;
pub mod optimize;
pub mod protocols;
pub mod spectral;
pub mod spm;

pub use error::{CoreError, Result};
