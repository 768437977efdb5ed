//! Simulation toolkit for structured paraxial matter waves in a linear
//! potential.
//!
//! The crate provides, in reduced (waist / Rayleigh-range) units:
//!
//! * closed-form initial and propagated Hermite-Gauss and Laguerre-Gauss
//!   wavefunctions with the drift, tilt and cubic phases induced by a
//!   linear potential ([`analytic`]);
//! * an independent split-step spectral propagator and a direct
//!   kernel-quadrature propagator that serve as cross-checking oracles
//!   ([`numeric`]);
//! * densities, probability currents, current-line tracing, center of mass,
//!   orbital-angular-momentum expectations and Gouy-phase extraction
//!   ([`observables`]);
//! * grating and vortex-pair interferometer simulations with fringe
//!   analytics ([`interfere`]);
//! * Airy-eigenbasis expansion, evolution and reconstruction ([`spectral`]);
//! * snapshot / CSV / PGM emitters and a scenario runner used by the `sqw`
//!   binary ([`io`]).
//!
//! Physical (SI) quantities appear only in [`beam`]; see that module for the
//! reduction conventions.

pub mod analytic;
pub mod beam;
pub mod error;
pub mod grid;
pub mod interfere;
pub mod io;
pub mod numeric;
pub mod observables;
pub mod quad;
pub mod specfun;
pub mod spectral;
pub mod validation;

pub use beam::{nondimensionalize, ParticleBeam, PotentialSpec};
pub use error::{Result, SqwError};
pub use grid::{ComplexField2D, Grid2D};
