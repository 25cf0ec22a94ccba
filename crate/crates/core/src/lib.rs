//! Trainable sentence-boundary disambiguation.
//!
//! The pipeline: a character-class tokenizer splits text into tokens, a
//! part-of-speech lexicon assigns each token a probability distribution over
//! 18 collapsed categories, those distributions (plus a capitalization flag
//! and a follows-punctuation flag) form 20-element descriptor arrays, and a
//! small feed-forward network scores every candidate punctuation mark
//! (`.`, `!`, `?`) from the descriptor arrays of its surrounding tokens.
//! Dual sensitivity thresholds turn scores into boundary / non-boundary /
//! no-opinion labels.

pub mod descriptor;
pub mod error;
pub mod evaluation;
pub mod labeler;
pub mod lexicon;
pub mod network;
pub mod tokenizer;

pub use error::SbdError;
