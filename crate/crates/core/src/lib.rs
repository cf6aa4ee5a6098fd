//! Hybrid analog-digital neural beamforming for mmWave massive-MIMO links.
//!
//! The crate trains complex-valued feed-forward networks to imitate
//! fully-digital eigen-mode beamformers, realizes the analog stage as a
//! phase-shifter network (every affine layer rewritten as a scaled sum of two
//! unit-modulus matrices), and evaluates the resulting hybrid transceiver
//! against the fully-digital baseline with Monte Carlo BER / spectral
//! efficiency experiments.
//!
//! The crate is `no_std` (alloc required); all transcendental math goes
//! through `libm`, so results are bit-identical across platforms and build
//! profiles. File I/O, configuration, and the command-line front end live in
//! the companion `hybeam-cli` crate.
//!
//! Module map:
//! - [`numerics`]: complex matrices, one-sided Jacobi SVD, water-filling,
//!   seeded RNG streams
//! - [`channel`]: clustered mmWave channel generator (uniform linear arrays)
//! - [`beamforming`]: fully-digital precoder/combiner baselines, log-det
//!   spectral efficiency, unit-modulus decomposition
//! - [`cvnn`]: complex-valued MLP engine (forward/backward, MAE and
//!   end-to-end losses, Adam)
//! - [`hdnn`]: digital+analog hybrid network composition and its
//!   phase-shifter realization
//! - [`trainer`]: supervised dataset construction and the training loop
//! - [`evalsim`]: 4-QAM link simulation, BER/NMSE/SE measurements

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod beamforming;
pub mod channel;
pub mod cvnn;
pub mod error;
pub mod evalsim;
pub mod hdnn;
pub mod math;
pub mod numerics;
pub mod trainer;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use numerics::{CMatrix, RngStream, SvdFactors};
