//! Per-group report: structural checks, class counts and the published
//! table values they are compared against.

use serde::Serialize;
use so7_core::atlas::{BaseGroup, NamedGroup, NamedGroupId};
use so7_core::clifford::{clifford_count, is_irreducible, is_transitive_on_axes, traces_constant_on_classes};
use so7_core::groupkit::{complement_search, conjugacy_classes, diagonal_group};
use so7_core::CliffordCount;

use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SplitStatus {
    Split,
    Nonsplit,
    NotApplicable,
}

impl std::fmt::Display for SplitStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SplitStatus::Split => "split",
            SplitStatus::Nonsplit => "nonsplit",
            SplitStatus::NotApplicable => "not-applicable",
        })
    }
}

/// Published class counts for a base group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Table1Claim {
    pub nfc: usize,
    pub fc: usize,
    pub total: usize,
}

impl Table1Claim {
    pub fn for_id(id: NamedGroupId) -> Option<Table1Claim> {
        use BaseGroup::*;
        if id.neg {
            return None;
        }
        let (nfc, fc, total) = match id.base {
            Case1Psl27 => return None,
            Case2Z7 => (7, 1, 8),
            Case2F21 => (5, 3, 8),
            Case2Psl32Split | Case2Psl32Nonsplit => (6, 5, 11),
            Case3Z7 => (7, 9, 16),
            Case3D14 => (5, 18, 23),
            Case3F21 => (5, 27, 32),
            Case3F42 => (10, 54, 64),
            Case3Psl32 => (6, 45, 51),
            Case3A7 => (9, 63, 72),
            Case3S7 => (15, 99, 114),
        };
        Some(Table1Claim { nfc, fc, total })
    }
}

/// Claimed values next to whether the computed ones agree. The FC claim is
/// compared against the orbit-corrected count and the total against the
/// direct class count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Table1Comparison {
    pub claimed_nfc: usize,
    pub claimed_fc: usize,
    pub claimed_total: usize,
    pub match_nfc: bool,
    pub match_fc: bool,
    pub match_total: bool,
}

impl Table1Comparison {
    pub fn all_match(&self) -> bool {
        self.match_nfc && self.match_fc && self.match_total
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupReport {
    pub id: String,
    pub order: usize,
    pub case: u8,
    pub split: SplitStatus,
    pub irreducible: bool,
    pub transitive: bool,
    pub traces_integral: bool,
    /// Absent for case 1, whose diagonal subgroup is trivial.
    pub clifford: Option<CliffordCount>,
    pub table1: Option<Table1Comparison>,
    /// Number of conjugacy classes, whether or not a Clifford count exists.
    #[serde(skip)]
    pub class_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl GroupReport {
    /// No internal inconsistency was detected.
    pub fn is_consistent(&self) -> bool {
        self.error.is_none()
    }
}

pub fn split_status(named: &NamedGroup) -> Result<SplitStatus> {
    let Some(code) = &named.code else {
        return Ok(SplitStatus::NotApplicable);
    };
    let a = diagonal_group(code)?;
    Ok(match complement_search(&named.group, &a)? {
        Some(_) => SplitStatus::Split,
        None => SplitStatus::Nonsplit,
    })
}

pub fn build_report(named: &NamedGroup) -> Result<GroupReport> {
    let g = &named.group;
    let classes = conjugacy_classes(g);
    let clifford = named.code.as_ref().map(|a| clifford_count(g, a)).transpose()?;
    let table1 = match (Table1Claim::for_id(named.id), &clifford) {
        (Some(claim), Some(c)) => Some(Table1Comparison {
            claimed_nfc: claim.nfc,
            claimed_fc: claim.fc,
            claimed_total: claim.total,
            match_nfc: c.nfc == claim.nfc,
            match_fc: c.fc_orbit == claim.fc,
            match_total: c.direct == claim.total,
        }),
        _ => None,
    };
    let mut report = GroupReport {
        id: named.id.to_string(),
        order: g.order(),
        case: named.id.case(),
        split: split_status(named)?,
        irreducible: is_irreducible(g),
        transitive: is_transitive_on_axes(g),
        traces_integral: traces_constant_on_classes(&classes),
        clifford,
        table1,
        class_count: classes.count(),
        error: None,
    };
    report.error = inconsistency(&report);
    Ok(report)
}

fn inconsistency(r: &GroupReport) -> Option<String> {
    let mut problems = Vec::new();
    if let Some(c) = &r.clifford {
        if !c.is_consistent() {
            problems.push(format!(
                "direct class count {} differs from nfc + fc_orbit = {}",
                c.direct,
                c.nfc + c.fc_orbit
            ));
        }
        if c.direct != r.class_count {
            problems.push("class count changed between sweeps".to_string());
        }
        if c.orbits.iter().any(|o| o.size != o.inertia_index || o.gamma == 0) {
            problems.push("orbit record violates orbit-stabilizer or has γ = 0".to_string());
        }
    }
    if !r.irreducible {
        problems.push("natural representation is reducible".to_string());
    }
    if !r.transitive {
        problems.push("not transitive on the coordinate axes".to_string());
    }
    if !r.traces_integral {
        problems.push("trace not constant on a conjugacy class".to_string());
    }
    if problems.is_empty() {
        None
    } else {
        Some(problems.join("; "))
    }
}
