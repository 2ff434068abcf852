//! Patch-landmark feature learning on synthetic posed RGB-D scenes.
//!
//! The library trains a small patch encoder so that image patches which
//! unproject to nearby 3D points receive similar embeddings, by maximizing a
//! smooth, vectorized Average Precision over patch-landmark retrieval sets
//! with an explicit don't-care region. Everything runs on procedurally
//! generated multi-room scenes rendered by a closed-form ray caster, so the
//! full pipeline (scene generation, training, retrieval / segmentation /
//! relative-pose evaluation) is deterministic and laptop-sized.
//!
//! Modules map onto pipeline stages:
//!
//! - [`geometry`]: pinhole camera model, rigid poses, unprojection.
//! - [`scenegen`]: procedural scenes and the RGB-D ray-cast renderer.
//! - [`dataset`]: patch extraction, batches, on-disk dataset format.
//! - [`landmarks`]: tentative landmark sampling and retrieval masks.
//! - [`objective`]: cosine scores, smooth AP, exact AP, analytic gradients.
//! - [`encoder`]: the trainable patch encoder, Adam, and the training loop.
//! - [`tasks`]: downstream evaluations (retrieval, co-segmentation,
//!   linear-probe segmentation, relative pose).
//! - [`cli`]: the command-line front end and run configuration.

pub mod cli;
pub mod config;
pub mod dataset;
pub mod encoder;
pub mod geometry;
pub mod landmarks;
pub mod objective;
pub mod rng;
pub mod scenegen;
pub mod tasks;
