use std::path::PathBuf;
use std::time::{Duration, Instant};

use bps_core::{Error, GbConfig};

use crate::args::{Format, GlobalArgs};

/// Settings shared by every command.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub degree_cap: i64,
    pub pair_limit: Option<usize>,
    pub threads: Option<usize>,
    pub out: Option<PathBuf>,
    pub format: Format,
    pub timeout: Option<Duration>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            degree_cap: 64,
            pair_limit: None,
            threads: None,
            out: None,
            format: Format::Json,
            timeout: None,
        }
    }
}

impl From<&GlobalArgs> for RunConfig {
    fn from(g: &GlobalArgs) -> Self {
        RunConfig {
            degree_cap: g.degree_cap,
            pair_limit: g.pair_limit,
            threads: g.threads,
            out: g.out.clone(),
            format: g.format,
            timeout: g.timeout.filter(|s| *s > 0.0).map(Duration::from_secs_f64),
        }
    }
}

impl RunConfig {
    /// Engine settings; the deadline starts now.
    pub fn gb(&self) -> GbConfig {
        GbConfig {
            degree_cap: Some(self.degree_cap),
            pair_limit: self.pair_limit,
            deadline: self.timeout.map(|t| Instant::now() + t),
            ..GbConfig::default()
        }
    }

    /// The cap must admit the relation entries `t_j^b` themselves.
    pub fn check_cap(&self, b: u32) -> Result<(), Error> {
        let needed = 2 * b as i64;
        if self.degree_cap < needed {
            return Err(Error::DegreeCapExceeded {
                degree: needed,
                cap: self.degree_cap,
            });
        }
        Ok(())
    }
}
