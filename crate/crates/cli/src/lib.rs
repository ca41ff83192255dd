//! The `bps` command-line tool.

pub mod args;
pub mod cache;
pub mod commands;
pub mod config;
pub mod error;
pub mod output;

use args::{Cli, Command};
use commands::{ChamberRow, ReportRow, SweepOptions};
use config::RunConfig;
use error::{exit, CliError};

/// Runs one parsed invocation and returns the process exit code.
pub fn run(cli: Cli) -> Result<u8, CliError> {
    let cfg = RunConfig::from(&cli.global);
    match cli.command {
        Command::Analyze { lengths, a, b } => {
            let rep = commands::analyze(&lengths, a, b, &cfg)?;
            output::emit(&cfg, &rep, &[ReportRow::from(&rep)])?;
            Ok(exit::OK)
        }
        Command::Chambers { r, entry_bound } => {
            let e = commands::chambers(r, entry_bound)?;
            if !e.stabilized {
                eprintln!("warning: enumeration did not stabilize at entry bound {}", e.entry_bound);
            }
            let rows: Vec<_> = e.chambers.iter().map(bps_core::lenvec::ChamberRecord::from).collect();
            output::emit(&cfg, &e, &rows)?;
            eprintln!("{} chambers for r = {}", rows.len(), r);
            Ok(exit::OK)
        }
        Command::VerifyConjecture {
            r,
            a,
            b,
            entry_bound,
            db,
            no_cache,
        } => {
            let opts = SweepOptions {
                r,
                a,
                bs: b.map_or_else(|| vec![1, 2], |b| vec![b]),
                entry_bound,
                db,
                use_cache: !no_cache,
            };
            let s = commands::verify_conjecture(&opts, &cfg)?;
            let rows: Vec<_> = s.chambers.iter().map(ChamberRow::from).collect();
            output::emit(&cfg, &s, &rows)?;
            for c in s.chambers.iter().filter(|c| c.status != commands::ChamberStatus::Pass) {
                eprintln!(
                    "{:?}: chamber {} ({}): {}",
                    c.status,
                    c.chamber_id,
                    c.representative,
                    c.error.as_deref().unwrap_or("syzord differs from mu - 1")
                );
            }
            eprintln!("{}", s.summary_line());
            Ok(s.exit_code())
        }
        Command::Koszul { r, b, k } => {
            let rep = commands::koszul(r, b, k, &cfg)?;
            output::emit(&cfg, &rep, &rep.betti)?;
            Ok(exit::OK)
        }
        Command::Selftest { budget } => {
            let results = commands::selftest(budget, &cfg)?;
            for res in &results {
                println!("{res}");
            }
            let passed = results.iter().filter(|r| r.passed).count();
            println!("selftest: {passed}/{} criteria passed", results.len());
            Ok(if passed == results.len() { exit::OK } else { exit::FAILURE })
        }
    }
}
