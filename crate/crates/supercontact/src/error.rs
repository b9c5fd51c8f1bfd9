//! Crate-wide error type.
//!
//! Only genuinely fallible, data-driven operations return `Result`: parsing
//! user text, recovering a Hamiltonian from a non-contact field, embedding a
//! matrix outside `spo`, or exceeding the verifier's resource caps.
//! Structural misuse (mixing values from different superspaces, out-of-range
//! coordinate ids) is a programming error and panics.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Expression syntax or vocabulary error; `pos` is a byte offset into
    /// the source text.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// The field is not a contact field: bracketing with frame element
    /// `T_{frame_index}` leaves the contact distribution.
    #[error(
        "not a contact field: [X, T_{frame_index}] is not tangent \
         (alpha evaluates to {obstruction})"
    )]
    NotContact {
        frame_index: usize,
        obstruction: String,
    },

    /// The matrix violates the block conditions of `spo(2l+2|n)`.
    #[error("matrix is not in spo(2l+2|n): {0}")]
    NotInSpo(String),

    /// Verification request above the configured size caps.
    #[error(
        "dimensions l={l}, n={n} exceed the resource caps l<={max_l}, \
         n<={max_n} (use --force to override)"
    )]
    ResourceLimit {
        l: usize,
        n: usize,
        max_l: usize,
        max_n: usize,
    },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
