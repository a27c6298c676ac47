//! Desk-scale few-shot learning laboratory built around self-denoising
//! networks: block-structured conv nets trained with noise injected before
//! each block and per-block cosine-classifier heads, evaluated noiselessly
//! with episodic weight imprinting.

pub mod checkpoint;
pub mod config;
pub mod data;
pub mod fewshot;
pub mod heads;
pub mod model;
pub mod noise;
pub mod rng;
pub mod tensor;
pub mod train;

pub use rng::StreamRng;
pub use tensor::{Tape, TensorError, TensorId};
