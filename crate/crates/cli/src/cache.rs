//! On-disk group cache.
//!
//! One file per catalog id, `<id>.group`:
//!
//! ```text
//! so7-atlas group-cache v1
//! id case3-z7
//! 0
//! 17
//! ...
//! order 448
//! ```
//!
//! Each element line is the dense index of a signed permutation. Reloading
//! rebuilds the group from its element list, which fails unless the list is
//! closed under multiplication, and then re-checks the catalog order and the
//! normality of the diagonal code.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use so7_core::atlas::{named_group_from, NamedGroup, NamedGroupId};
use so7_core::signedperm::AMBIENT_ORDER;
use so7_core::{Group, SignedPerm};

use crate::{CliError, Result};

pub const HEADER: &str = "so7-atlas group-cache v1";

#[derive(Debug, Clone)]
pub struct GroupCache {
    dir: PathBuf,
}

impl GroupCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        GroupCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, id: NamedGroupId) -> PathBuf {
        self.dir.join(format!("{id}.group"))
    }

    /// `Ok(None)` when there is no cache file for `id`.
    pub fn load(&self, id: NamedGroupId) -> Result<Option<NamedGroup>> {
        let path = self.path(id);
        let text = match fs::read_to_string(&path) {
            Ok(text) => text,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(source) => return Err(CliError::Io { path, source }),
        };
        let corrupt = |reason: String| CliError::CacheCorrupt {
            path: path.clone(),
            reason,
        };
        let elements = parse_cache(&text, id).map_err(corrupt)?;
        let group = Group::from_elements(elements).map_err(|e| corrupt(format!("element list: {e}")))?;
        named_group_from(id, group)
            .map(Some)
            .map_err(|e| corrupt(e.to_string()))
    }

    pub fn store(&self, named: &NamedGroup) -> Result<()> {
        let io = |path: &Path| {
            let path = path.to_path_buf();
            move |source| CliError::Io { path, source }
        };
        fs::create_dir_all(&self.dir).map_err(io(&self.dir))?;
        let path = self.path(named.id);
        let mut body = String::with_capacity(named.group.order() * 8 + 64);
        body.push_str(HEADER);
        body.push('\n');
        body.push_str(&format!("id {}\n", named.id));
        for g in named.group.elements() {
            body.push_str(&g.dense_index().to_string());
            body.push('\n');
        }
        body.push_str(&format!("order {}\n", named.group.order()));
        // write beside the target and rename, so readers never see a partial file
        let tmp = path.with_extension(format!("group.tmp{}", std::process::id()));
        let mut file = fs::File::create(&tmp).map_err(io(&tmp))?;
        file.write_all(body.as_bytes()).map_err(io(&tmp))?;
        file.sync_all().map_err(io(&tmp))?;
        fs::rename(&tmp, &path).map_err(io(&path))
    }
}

fn parse_cache(text: &str, id: NamedGroupId) -> std::result::Result<Vec<SignedPerm>, String> {
    let mut lines = text.lines();
    if lines.next() != Some(HEADER) {
        return Err("missing header".into());
    }
    match lines.next().and_then(|l| l.strip_prefix("id ")) {
        Some(found) if found == id.to_string() => {}
        other => return Err(format!("expected id {id}, found {other:?}")),
    }
    let mut elements = Vec::new();
    let mut declared = None;
    for line in lines {
        if let Some(n) = line.strip_prefix("order ") {
            declared = Some(n.parse::<usize>().map_err(|_| format!("bad order line {line:?}"))?);
            continue;
        }
        if declared.is_some() {
            return Err("data after order line".into());
        }
        let index: usize = line.parse().map_err(|_| format!("bad element line {line:?}"))?;
        if index >= AMBIENT_ORDER {
            return Err(format!("element index {index} out of range"));
        }
        elements.push(SignedPerm::from_dense_index(index));
    }
    match declared {
        Some(n) if n == elements.len() => Ok(elements),
        Some(n) => Err(format!("order line says {n}, found {} elements", elements.len())),
        None => Err("truncated: no order line".into()),
    }
}
