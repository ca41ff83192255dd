use std::fs::File;
use std::io::{self, BufWriter, Write};

use serde::Serialize;

use crate::args::Format;
use crate::config::RunConfig;
use crate::error::CliError;

fn sink(cfg: &RunConfig) -> Result<Box<dyn Write>, CliError> {
    Ok(match &cfg.out {
        Some(path) => Box::new(BufWriter::new(File::create(path).map_err(|e| CliError::io(path, e))?)),
        None => Box::new(io::stdout().lock()),
    })
}

/// Writes `doc` as pretty JSON or `rows` as CSV, per `cfg.format`.
pub fn emit<T: Serialize, R: Serialize>(cfg: &RunConfig, doc: &T, rows: &[R]) -> Result<(), CliError> {
    let mut w = sink(cfg)?;
    match cfg.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut w, doc)?;
            writeln!(w).map_err(|e| CliError::io("<output>".as_ref(), e))?;
        }
        Format::Csv => {
            let mut c = csv::Writer::from_writer(&mut w);
            for row in rows {
                c.serialize(row)?;
            }
            c.flush().map_err(|e| CliError::io("<output>".as_ref(), e))?;
        }
    }
    w.flush().map_err(|e| CliError::io("<output>".as_ref(), e))
}
