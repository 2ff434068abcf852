//! Deterministic RNG streams.
//!
//! All randomness in a run flows from one root seed. Each component draws
//! from its own named stream so that re-seeding one component (or resuming a
//! training run at step k) never shifts the random numbers seen by another.

use rand_chacha::ChaCha8Rng;
use rand_chacha::rand_core::SeedableRng;
use sha2::{Digest, Sha256};

/// Derives a 32-byte seed from `(root, label, index)`.
pub fn derive_seed(root: u64, label: &str, index: u64) -> [u8; 32] {
    let mut hasher = Sha256::new();
    hasher.update(root.to_le_bytes());
    hasher.update(label.as_bytes());
    hasher.update([0u8]);
    hasher.update(index.to_le_bytes());
    hasher.finalize().into()
}

/// A ChaCha stream for the given component label and index.
///
/// Typical labels: `"scene"`, `"trajectory"`, `"landmark-pos"`,
/// `"encoder-init"`; the index distinguishes environments or training steps.
pub fn stream(root: u64, label: &str, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::from_seed(derive_seed(root, label, index))
}
