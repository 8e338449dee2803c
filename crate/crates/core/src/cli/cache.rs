//! On-disk cache of enumerated groups, enabled by setting `CSKIT_CACHE_DIR`.
//!
//! Layout: magic, format version, rank, element count, then each element's
//! column-major matrix as little-endian `i32`s, in enumeration order.
//! Bruhat data is not stored; it is cheap to recompute from the matrices.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::weyl::{enumerate_group, WeylElt};

pub const CACHE_ENV: &str = "CSKIT_CACHE_DIR";
const MAGIC: &[u8; 4] = b"CSKW";
const FORMAT_VERSION: u32 = 1;

pub fn cache_path(dir: &Path, rs: &RootSystem) -> PathBuf {
    dir.join(format!("{}-v{FORMAT_VERSION}.bin", rs.name()))
}

fn encode(rs: &RootSystem, group: &[WeylElt]) -> Vec<u8> {
    let mut buf = Vec::with_capacity(16 + group.len() * rs.rank() * rs.rank() * 4);
    buf.extend_from_slice(MAGIC);
    buf.extend_from_slice(&FORMAT_VERSION.to_le_bytes());
    buf.extend_from_slice(&(rs.rank() as u32).to_le_bytes());
    buf.extend_from_slice(&(group.len() as u32).to_le_bytes());
    for w in group {
        for x in w.matrix() {
            buf.extend_from_slice(&x.to_le_bytes());
        }
    }
    buf
}

fn decode(rs: &Arc<RootSystem>, bytes: &[u8]) -> Result<Vec<WeylElt>> {
    let bad = || Error::Parse("corrupt group cache".into());
    let word = |k: usize| -> Result<u32> {
        let b = bytes.get(4 * k..4 * k + 4).ok_or_else(bad)?;
        Ok(u32::from_le_bytes(b.try_into().expect("4 bytes")))
    };
    if bytes.get(..4) != Some(MAGIC.as_slice()) || word(1)? != FORMAT_VERSION {
        return Err(bad());
    }
    let n = rs.rank();
    let count = word(3)? as usize;
    if word(2)? as usize != n || bytes.len() != 16 + count * n * n * 4 {
        return Err(bad());
    }
    let ints: Vec<i32> = bytes[16..]
        .chunks_exact(4)
        .map(|b| i32::from_le_bytes(b.try_into().expect("4 bytes")))
        .collect();
    let group: Vec<WeylElt> = ints
        .chunks(n * n)
        .map(|cols| WeylElt::from_matrix(rs, cols))
        .collect::<Result<_>>()?;
    let expected = rs.kind().weyl_group_order(n).unwrap_or(0);
    if group.len() as u128 != expected || !group.first().is_some_and(WeylElt::is_identity) {
        return Err(bad());
    }
    Ok(group)
}

/// The group in breadth-first order, read from and written to the cache
/// directory when one is configured. A corrupt or stale cache file is
/// silently rebuilt.
pub fn group_elements(rs: &Arc<RootSystem>, cap: usize) -> Result<Vec<WeylElt>> {
    match std::env::var_os(CACHE_ENV) {
        Some(dir) if !dir.is_empty() => group_elements_in(rs, cap, Path::new(&dir)),
        _ => enumerate_group(rs, cap),
    }
}

pub fn group_elements_in(rs: &Arc<RootSystem>, cap: usize, dir: &Path) -> Result<Vec<WeylElt>> {
    let path = cache_path(dir, rs);
    if let Ok(bytes) = fs::read(&path) {
        if let Ok(group) = decode(rs, &bytes) {
            if group.len() <= cap {
                return Ok(group);
            }
        }
    }
    let group = enumerate_group(rs, cap)?;
    fs::create_dir_all(dir)?;
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, encode(rs, &group))?;
    fs::rename(&tmp, &path)?;
    Ok(group)
}
