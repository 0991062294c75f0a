//! Test-only fault injection.
//!
//! The verification suite is only trustworthy if it can actually catch a
//! broken implementation. This hook lets the CLI (and nothing else in
//! normal operation) corrupt one well-defined step of the constructive
//! path so that a negative-control run demonstrably fails.

use core::sync::atomic::{AtomicU8, Ordering};

/// Faults that can be injected into the constructive code paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// `reciprocal` skips its monic normalization and returns the raw
    /// coefficient reversal.
    ReciprocalSkipMonic,
}

static INJECTED: AtomicU8 = AtomicU8::new(0);

/// Install or clear the injected fault. Process-global; intended for
/// negative-control runs in a dedicated process, not for concurrent tests.
#[doc(hidden)]
pub fn inject(fault: Option<Fault>) {
    let code = match fault {
        None => 0,
        Some(Fault::ReciprocalSkipMonic) => 1,
    };
    INJECTED.store(code, Ordering::SeqCst);
}

pub(crate) fn active() -> Option<Fault> {
    match INJECTED.load(Ordering::Relaxed) {
        1 => Some(Fault::ReciprocalSkipMonic),
        _ => None,
    }
}
