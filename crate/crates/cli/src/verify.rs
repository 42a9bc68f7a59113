//! The full verification run: every catalog report plus the classification
//! checks that are not tied to a single group.

use rayon::prelude::*;
use serde::Serialize;
use so7_core::atlas::{
    build_a8, case2_quotients, case3_quotients, enumerate_invariant_codes, exclude_nonsplit_64_14, search_order_1344,
    NamedGroupId,
};
use so7_core::groupkit::{complement_search, derived_subgroup, diagonal_group};

use crate::report::{build_report, GroupReport};
use crate::{load_or_build, GroupCache, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// A case-3 row where the uniform ×9 recipe and the orbit-by-orbit count
/// disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub id: String,
    pub nfc: usize,
    pub fc_paper: usize,
    pub fc_orbit: usize,
    pub total_paper: usize,
    pub total_orbit: usize,
    pub direct_classes: usize,
    pub claimed_total: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationSummary {
    pub reports: Vec<GroupReport>,
    pub checks: Vec<CheckResult>,
    pub discrepancies: Vec<Discrepancy>,
    /// Ids whose published row is fully reproduced.
    pub table1_reproduced: Vec<String>,
    /// Ids whose published row disagrees with the computed counts.
    pub table1_disagreements: Vec<String>,
    pub internally_consistent: bool,
}

impl VerificationSummary {
    pub fn passed(&self) -> bool {
        self.internally_consistent
    }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

pub fn check_invariant_codes() -> Result<CheckResult> {
    let codes = enumerate_invariant_codes();
    let orders: Vec<usize> = codes.iter().map(|c| c.code.order()).collect();
    let fpf = codes.iter().all(|c| c.fixed_point_free);
    Ok(CheckResult {
        name: "invariant-codes",
        passed: orders == [8, 8, 64] && fpf,
        detail: format!("code orders {orders:?}, fixed-point-free: {fpf}"),
    })
}

pub fn check_quotient_lists() -> Result<CheckResult> {
    let s7 = case3_quotients()?;
    let gl = case2_quotients()?;
    let s7_merged = sorted(s7.merged_orders());
    let gl_merged = sorted(gl.merged_orders());
    Ok(CheckResult {
        name: "quotient-lists",
        passed: s7_merged == [7, 14, 21, 42, 168, 2520, 5040] && gl_merged == [7, 21, 168],
        detail: format!(
            "S7 above a 7-cycle: {s7_merged:?} up to conjugacy ({} subgroups in all, orders {:?}); \
             GL(3,2) above a Singer cycle: {gl_merged:?} ({:?} in all)",
            s7.raw.len(),
            sorted(s7.raw_orders()),
            sorted(gl.raw_orders()),
        ),
    })
}

pub fn check_search_1344() -> Result<CheckResult> {
    let found = search_order_1344()?;
    let a8 = diagonal_group(&build_a8())?;
    let mut perfect = 0;
    let mut split = 0;
    for g in &found {
        if derived_subgroup(g)?.order() == g.order() {
            perfect += 1;
        }
        if complement_search(g, &a8)?.is_some() {
            split += 1;
        }
    }
    Ok(CheckResult {
        name: "order-1344-search",
        passed: found.len() == 2 && perfect == 2 && split == 1,
        detail: format!(
            "{} distinct groups, {perfect} perfect, {split} split over A8",
            found.len()
        ),
    })
}

pub fn check_exclude_64_14() -> Result<CheckResult> {
    let all_split = exclude_nonsplit_64_14()?;
    Ok(CheckResult {
        name: "exclude-nonsplit-64-14",
        passed: all_split,
        detail: format!("every extension of A64 by an order-14 quotient splits: {all_split}"),
    })
}

pub fn classification_checks() -> Result<Vec<CheckResult>> {
    let checks: [fn() -> Result<CheckResult>; 4] = [
        check_invariant_codes,
        check_quotient_lists,
        check_search_1344,
        check_exclude_64_14,
    ];
    checks.par_iter().map(|check| check()).collect()
}

pub fn catalog_reports(cache: Option<&GroupCache>) -> Result<Vec<GroupReport>> {
    NamedGroupId::catalog()
        .into_par_iter()
        .map(|id| build_report(&load_or_build(id, cache)?))
        .collect()
}

pub fn verify_table1(cache: Option<&GroupCache>) -> Result<VerificationSummary> {
    let (reports, checks) = rayon::join(|| catalog_reports(cache), classification_checks);
    let (reports, checks) = (reports?, checks?);

    let mut discrepancies = Vec::new();
    let mut reproduced = Vec::new();
    let mut disagreements = Vec::new();
    for r in &reports {
        if let Some(t) = &r.table1 {
            if t.all_match() {
                reproduced.push(r.id.clone());
            } else {
                disagreements.push(r.id.clone());
            }
        }
        if let Some(c) = r.clifford.as_ref().filter(|c| c.fc_paper != c.fc_orbit) {
            discrepancies.push(Discrepancy {
                id: r.id.clone(),
                nfc: c.nfc,
                fc_paper: c.fc_paper,
                fc_orbit: c.fc_orbit,
                total_paper: c.nfc + c.fc_paper,
                total_orbit: c.nfc + c.fc_orbit,
                direct_classes: c.direct,
                claimed_total: r.table1.map(|t| t.claimed_total),
            });
        }
    }
    let internally_consistent = reports.iter().all(GroupReport::is_consistent) && checks.iter().all(|c| c.passed);
    Ok(VerificationSummary {
        reports,
        checks,
        discrepancies,
        table1_reproduced: reproduced,
        table1_disagreements: disagreements,
        internally_consistent,
    })
}
