//! File formats, reports and the command line for `symlab-core`.

pub mod cli;
pub mod dot;
pub mod facts;
pub mod io;
pub mod report;
pub mod verify;

use symlab_core::Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_DISCREPANCY: u8 = 2;
pub const EXIT_INPUT: u8 = 3;
pub const EXIT_CAP: u8 = 4;

/// Exit status for a run that stopped with `e`.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvariantViolation(_) => EXIT_DISCREPANCY,
        Error::CapExceeded(_) | Error::Unsupported(_) | Error::Overflow { .. } => EXIT_CAP,
        _ => EXIT_INPUT,
    }
}
