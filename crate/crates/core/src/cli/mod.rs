//! Batch classification, exhaustive verification and artifact output used
//! by the `cskit` binary.

pub mod cache;
pub mod inspect;
pub mod record;
pub mod verify;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::posets::bruhat_interval;
use crate::rootsys::RootSystem;
use crate::weyl::WeylElt;
use crate::word::Word;

pub use inspect::{inspect, ElementSpec, InspectReport};
pub use record::{classify, records_to_csv, records_to_json, ClassificationRecord};
pub use verify::{verify, Property, VerifyReport};

/// Version tag written as `"schema"` into every emitted file.
pub const SCHEMA_VERSION: u32 = 1;

/// Largest group enumerated by default, `|S_8|`.
pub const DEFAULT_CAP: usize = 40320;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntervalFormat {
    Dot,
    Json,
}

/// `[e, w]` for the element of a reduced word, as DOT or JSON.
pub fn interval(rs: &Arc<RootSystem>, word: &Word, format: IntervalFormat) -> Result<String> {
    let w = WeylElt::from_word(rs, word)?;
    if w.length() != word.len() {
        return Err(Error::NotReduced(word.to_string()));
    }
    let p = bruhat_interval(&w);
    Ok(match format {
        IntervalFormat::Dot => p.to_dot(),
        IntervalFormat::Json => {
            let mut s = serde_json::to_string_pretty(&p.to_json())?;
            s.push('\n');
            s
        }
    })
}
