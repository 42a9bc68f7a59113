use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use serde::Serialize;
use so7_atlas::{
    build_report, export, load_or_build, verify_table1, GroupCache, GroupReport, SplitStatus, VerificationSummary,
};
use so7_core::atlas::NamedGroupId;
use so7_core::groupkit::{complement_search, diagonal_group};

#[derive(Parser)]
#[command(
    name = "so7-atlas",
    version,
    about = "Build and verify the imprimitive monomial subgroups of SO(7)"
)]
struct Cli {
    /// Directory for cached group element lists.
    #[arg(long, global = true, default_value = ".so7-cache")]
    cache_dir: PathBuf,
    /// Do not read or write the group cache.
    #[arg(long, global = true)]
    no_cache: bool,
    /// JSON output; on by default for `report` and `verify-table1`.
    #[arg(long, global = true, num_args = 0..=1, default_missing_value = "true")]
    json: Option<bool>,
    /// Worker threads, 0 for one per core.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List catalog ids with their orders and cases.
    List,
    /// Report structure and class counts of one group.
    Report { id: NamedGroupId },
    /// Report every catalog group and run the classification checks.
    VerifyTable1,
    /// Write the defining generators of a group as 7×7 matrices.
    Export {
        id: NamedGroupId,
        path: PathBuf,
        /// Also write every element.
        #[arg(long)]
        elements: bool,
    },
    /// Decide whether a group splits over its diagonal subgroup.
    SplitCheck { id: NamedGroupId },
}

#[derive(Serialize)]
struct ListEntry {
    id: String,
    order: usize,
    case: u8,
}

#[derive(Serialize)]
struct SplitReport {
    id: String,
    split: String,
    complement_order: Option<usize>,
    complement_generators: Vec<String>,
}

fn print_json<T: Serialize>(value: &T) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn print_report_text(r: &GroupReport) {
    println!("{}  order {}  case {}  {}", r.id, r.order, r.case, r.split);
    println!(
        "  irreducible {}  transitive {}  traces integral {}",
        r.irreducible, r.transitive, r.traces_integral
    );
    match &r.clifford {
        Some(c) => println!(
            "  nfc {}  fc_orbit {}  fc_paper {}  direct {}",
            c.nfc, c.fc_orbit, c.fc_paper, c.direct
        ),
        None => println!("  {} classes, no diagonal subgroup", r.class_count),
    }
    if let Some(t) = &r.table1 {
        println!(
            "  published {} + {} = {}: {}",
            t.claimed_nfc,
            t.claimed_fc,
            t.claimed_total,
            if t.all_match() { "reproduced" } else { "disagrees" }
        );
    }
    if let Some(e) = &r.error {
        println!("  INCONSISTENT: {e}");
    }
}

fn print_summary_text(s: &VerificationSummary) {
    for r in &s.reports {
        print_report_text(r);
    }
    for c in &s.checks {
        println!("{} {}: {}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail);
    }
    for d in &s.discrepancies {
        println!(
            "{}: uniform recipe gives {} + {} = {}, orbit count gives {} + {} = {}, direct {}",
            d.id, d.nfc, d.fc_paper, d.total_paper, d.nfc, d.fc_orbit, d.total_orbit, d.direct_classes
        );
    }
    println!("published rows reproduced: {}", s.table1_reproduced.join(", "));
    println!("published rows disagreeing: {}", s.table1_disagreements.join(", "));
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build_global()
        .context("configuring the thread pool")?;
    let cache = (!cli.no_cache).then(|| GroupCache::new(&cli.cache_dir));
    let cache = cache.as_ref();
    match cli.command {
        Command::List => {
            let entries: Vec<ListEntry> = NamedGroupId::catalog()
                .into_iter()
                .map(|id| ListEntry {
                    id: id.to_string(),
                    order: id.order(),
                    case: id.case(),
                })
                .collect();
            if cli.json.unwrap_or(false) {
                print_json(&entries)?;
            } else {
                for e in entries {
                    println!("{:<26} {:>7}  case {}", e.id, e.order, e.case);
                }
            }
            Ok(true)
        }
        Command::Report { id } => {
            let report = build_report(&load_or_build(id, cache)?)?;
            if cli.json.unwrap_or(true) {
                print_json(&report)?;
            } else {
                print_report_text(&report);
            }
            Ok(report.is_consistent())
        }
        Command::VerifyTable1 => {
            let summary = verify_table1(cache)?;
            if cli.json.unwrap_or(true) {
                print_json(&summary)?;
            } else {
                print_summary_text(&summary);
            }
            Ok(summary.passed())
        }
        Command::Export { id, path, elements } => {
            let named = load_or_build(id, cache)?;
            export::write(&named, &path, elements)?;
            eprintln!("wrote {} to {}", id, path.display());
            Ok(true)
        }
        Command::SplitCheck { id } => {
            let named = load_or_build(id, cache)?;
            let complement = match &named.code {
                Some(code) => complement_search(&named.group, &diagonal_group(code)?)?,
                None => None,
            };
            let status = match (&named.code, &complement) {
                (None, _) => SplitStatus::NotApplicable,
                (Some(_), Some(_)) => SplitStatus::Split,
                (Some(_), None) => SplitStatus::Nonsplit,
            };
            let report = SplitReport {
                id: id.to_string(),
                split: status.to_string(),
                complement_order: complement.as_ref().map(|c| c.order()),
                complement_generators: complement
                    .map(|c| c.generators().iter().map(|g| g.to_string()).collect())
                    .unwrap_or_default(),
            };
            if cli.json.unwrap_or(true) {
                print_json(&report)?;
            } else {
                println!("{} {}", report.id, report.split);
                for g in &report.complement_generators {
                    println!("  {g}");
                }
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
