//! Exact computations with tilt stability and double-tilt stability conditions on P3
//! and on the local P3: numerical classes, tilt slopes and the Bogomolov-Gieseker
//! margin, numerical walls, and heart conditions for four-term exceptional collections.

pub mod cli;
pub mod error;
pub mod euler;
pub mod heartgate;
mod interval;
pub mod numclass;
pub mod rational;
pub mod scene;
pub mod surd;
pub mod tiltcalc;
pub mod walls;

pub use error::{Error, Result};
pub use numclass::NumClass;
pub use rational::Q;
