//! Transfer operators for quantum channels.
//!
//! This crate connects completely positive trace-preserving (CPT) maps with
//! the machinery of transfer operators on iterated function systems:
//! channel fixed points and their invariant measures, channel-induced
//! transfer entropies, Hilbert projective-metric contraction data, and an
//! empirical exponential decay-of-correlations harness for mixed-unitary
//! channels.
//!
//! Modules follow the pipeline bottom-up:
//!
//! * [`linalg`] — dense complex kernels, density matrices, random ensembles
//! * [`channels`] — Kraus / mixed-unitary / nonlinear channels, spectra, fixed points
//! * [`transfer`] — the barycentric, contractive and place-dependent transfer operators
//! * [`measures`] — empirical measures, Markov pushforwards, barycenters, Cesàro scans
//! * [`entropy`] — transfer entropy, relative transfer entropy, entanglement bounds
//! * [`projective`] — Hilbert–Birkhoff metric, Hölder cones, contraction coefficients
//! * [`decay`] — decay-of-correlations experiments and spectral convergence checks

pub mod channels;
pub mod decay;
pub mod entropy;
pub mod linalg;
pub mod measures;
pub mod projective;
pub mod transfer;

pub use channels::{Channel, KrausChannel, MixedUnitaryChannel, NonlinearChannel};
pub use linalg::{CMatrix, ConePoint, DensityMatrix, C64};
pub use transfer::Observable;
