//! On-disk cache of the two large group enumerations.
//!
//! Files are plain JSON: `o53.json` holds the base-3 packed keys of
//! `O(F₃⁵, q)` and `weyl_e6.json` the line permutations of `W(E₆)`. Entries
//! are validated on load; a version or validation mismatch triggers a rebuild.

use std::fs;
use std::path::{Path, PathBuf};

use cubix_core::e6_weyl::{WeylGroup, NUM_LINES};
use cubix_core::finite_orthogonal::{self, OrthogonalGroup};
use cubix_core::Result;
use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;
pub const ENV_VAR: &str = "CUBIX_CACHE";

const ORTHOGONAL_FILE: &str = "o53.json";
const WEYL_FILE: &str = "weyl_e6.json";

#[derive(Serialize, Deserialize)]
struct OrthogonalEntry {
    format_version: u32,
    order: usize,
    packed_keys: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct WeylEntry {
    format_version: u32,
    order: usize,
    permutations: Vec<[u8; NUM_LINES]>,
}

/// `CUBIX_CACHE` wins over the flag.
pub fn resolve_dir(flag: Option<PathBuf>) -> Option<PathBuf> {
    std::env::var_os(ENV_VAR)
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
        .or(flag)
}

#[derive(Debug, Clone, Default)]
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        Self { dir }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    fn read<T: for<'de> Deserialize<'de>>(&self, name: &str) -> Option<T> {
        let path = self.dir.as_ref()?.join(name);
        let text = fs::read_to_string(path).ok()?;
        serde_json::from_str(&text).ok()
    }

    /// Best effort: a cache that cannot be written is skipped.
    fn write<T: Serialize>(&self, name: &str, value: &T) {
        let Some(dir) = &self.dir else { return };
        if fs::create_dir_all(dir).is_err() {
            return;
        }
        let tmp = dir.join(format!("{name}.tmp"));
        if let Ok(text) = serde_json::to_string(value) {
            if fs::write(&tmp, text).is_ok() {
                let _ = fs::rename(&tmp, dir.join(name));
            }
        }
    }

    pub fn orthogonal_group(&self, cap: usize) -> Result<OrthogonalGroup> {
        if let Some(e) = self.read::<OrthogonalEntry>(ORTHOGONAL_FILE) {
            if e.format_version == FORMAT_VERSION && e.order == e.packed_keys.len() && e.order <= cap {
                if let Ok(g) = OrthogonalGroup::from_packed_keys(&e.packed_keys) {
                    return Ok(g);
                }
            }
        }
        let g = finite_orthogonal::orthogonal_group(cap)?;
        self.write(
            ORTHOGONAL_FILE,
            &OrthogonalEntry {
                format_version: FORMAT_VERSION,
                order: g.order(),
                packed_keys: g.packed_keys(),
            },
        );
        Ok(g)
    }

    pub fn weyl_group(&self, cap: usize) -> Result<WeylGroup> {
        if let Some(e) = self.read::<WeylEntry>(WEYL_FILE) {
            if e.format_version == FORMAT_VERSION && e.order == e.permutations.len() && e.order <= cap {
                if let Ok(g) = WeylGroup::from_permutations(&e.permutations) {
                    return Ok(g);
                }
            }
        }
        let g = WeylGroup::enumerate(cap)?;
        self.write(
            WEYL_FILE,
            &WeylEntry {
                format_version: FORMAT_VERSION,
                order: g.order(),
                permutations: g.elements().iter().map(|x| x.perm).collect(),
            },
        );
        Ok(g)
    }
}
