//! Indoor drivable-area perception primitives.
//!
//! This crate implements the numeric heart of an RGB-D drivable-area
//! segmentation stack for low-power indoor robots:
//!
//! - IMU-based point-cloud alignment and a point-normal ground-plane model
//!   ([`geometry`]),
//! - the pre-fit candidate filters: anisotropic voxel-grid downsampling and
//!   kd-tree radius outlier removal ([`filter`], [`kdtree`]),
//! - seeded RANSAC with PCA plane refinement and ground/obstacle
//!   classification, composed into a timed pipeline ([`plane`]),
//! - 2D occupancy and traversability grids in workspace coordinates
//!   ([`mapping`]),
//! - ground masking of RGB frames through depth back-projection
//!   ([`masking`]),
//! - Perlin-noise collage synthesis of one-shot texture-segmentation
//!   training triples ([`perlin`], [`collage`]),
//! - the texture-segmentation model's forward kernels (convolutions, cosine
//!   similarity attention, local grouping, bilinear decoding) and the Combo
//!   Loss with analytic gradients ([`tensor`], [`kernels`], [`loss`],
//!   [`mosts`]),
//! - a synthetic labeled-scene generator and IoU metrics for benchmarking
//!   the pipeline without recorded sensor data ([`synth`], [`metrics`]).
//!
//! Everything here is pure computation over owned buffers: no IO, no global
//! state, and deterministic results for a given seed. The crate builds
//! without `std` (with `alloc`) so the same kernels can run on embedded
//! targets; the `std` feature (default) only adds wall-clock stage timings
//! and `std::error::Error` integration. File formats, configuration and the
//! command-line front end live in the companion `groundsight` crate.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod collage;
pub mod error;
pub mod filter;
pub mod geometry;
pub mod image;
pub mod kdtree;
pub mod kernels;
pub mod loss;
pub mod mapping;
pub mod masking;
pub mod math;
pub mod metrics;
pub mod mosts;
pub mod perlin;
pub mod plane;
pub mod synth;
pub mod tensor;

pub use error::{CoreError, Result};
pub use geometry::{FrameTag, ImuAttitude, PlaneModel, Point3, PointCloud};
