//! Matrix export.
//!
//! ```text
//! # so7-atlas export case3-z7
//! # generators 7
//! 1 0 0 0 0 0 0
//! ...            (7 rows per matrix, one blank line between matrices)
//!
//! # elements 448   (only when elements are requested)
//! ...
//! ```
//!
//! Lines starting with `#` open a section; matrices use the row format of
//! [`so7_core::signedperm::format_matrix`].

use std::path::Path;

use so7_core::atlas::{defining_generators, NamedGroup};
use so7_core::signedperm::{format_matrix, parse_matrix};
use so7_core::SignedPerm;

use crate::{CliError, Result};

pub fn render(named: &NamedGroup, with_elements: bool) -> Result<String> {
    let gens = defining_generators(named)?;
    let mut out = format!("# so7-atlas export {}\n", named.id);
    push_section(&mut out, "generators", &gens);
    if with_elements {
        out.push('\n');
        push_section(&mut out, "elements", named.group.elements());
    }
    Ok(out)
}

fn push_section(out: &mut String, name: &str, items: &[SignedPerm]) {
    out.push_str(&format!("# {name} {}\n", items.len()));
    for (k, g) in items.iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        out.push_str(&format_matrix(&g.to_matrix()));
        if !out.ends_with('\n') {
            out.push('\n');
        }
    }
}

pub fn write(named: &NamedGroup, path: &Path, with_elements: bool) -> Result<()> {
    std::fs::write(path, render(named, with_elements)?).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Matrices read back from an export, by section.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Exported {
    pub id: String,
    pub generators: Vec<SignedPerm>,
    pub elements: Vec<SignedPerm>,
}

pub fn parse(text: &str) -> Result<Exported> {
    let bad = |msg: String| CliError::Export(msg);
    let mut out = Exported::default();
    let mut section: Option<&str> = None;
    let mut declared = (None, None);
    let mut rows: Vec<&str> = Vec::new();
    let flush = |section: Option<&str>, rows: &mut Vec<&str>, out: &mut Exported| -> Result<()> {
        if rows.is_empty() {
            return Ok(());
        }
        let m = parse_matrix(&rows.join("\n"))?;
        let g = SignedPerm::from_matrix(&m)?;
        match section {
            Some("generators") => out.generators.push(g),
            Some("elements") => out.elements.push(g),
            other => return Err(bad(format!("matrix outside a known section: {other:?}"))),
        }
        rows.clear();
        Ok(())
    };
    for line in text.lines() {
        let line = line.trim();
        if let Some(header) = line.strip_prefix('#') {
            flush(section, &mut rows, &mut out)?;
            let mut words = header.split_whitespace();
            match (words.next(), words.next()) {
                (Some("so7-atlas"), Some("export")) => out.id = words.next().unwrap_or_default().to_string(),
                (Some(name @ ("generators" | "elements")), Some(n)) => {
                    let n: usize = n.parse().map_err(|_| bad(format!("bad count in {line:?}")))?;
                    if name == "generators" {
                        declared.0 = Some(n);
                    } else {
                        declared.1 = Some(n);
                    }
                    section = Some(name);
                }
                _ => return Err(bad(format!("unknown header {line:?}"))),
            }
        } else if line.is_empty() {
            flush(section, &mut rows, &mut out)?;
        } else {
            rows.push(line);
        }
    }
    flush(section, &mut rows, &mut out)?;
    if declared.0 != Some(out.generators.len()) || declared.1.is_some_and(|n| n != out.elements.len()) {
        return Err(bad("matrix count differs from section header".into()));
    }
    Ok(out)
}
