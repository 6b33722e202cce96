use std::path::Path;

use fjump::{IterationPolicy, MonomialOrder};
use serde::Deserialize;

use crate::Failure;

pub const CAP_ENV: &str = "FJUMP_MAX_ITER";

/// Contents of the optional TOML configuration file.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub max_iter: Option<usize>,
    pub paranoid: Option<bool>,
    pub order: Option<MonomialOrder>,
    pub sugar: Option<bool>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, Failure> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| Failure::input(format!("bad config {}: {e}", path.display())))
    }
}

/// Effective settings after merging flags, config file and environment.
#[derive(Debug, Clone, Copy)]
pub struct Settings {
    pub policy: IterationPolicy,
    pub order: MonomialOrder,
    pub sugar: bool,
}

pub struct Overrides {
    pub max_iter: Option<usize>,
    pub paranoid: bool,
    pub order: Option<MonomialOrder>,
    pub sugar: bool,
}

impl Settings {
    /// Flags win over the config file, which wins over the environment.
    pub fn resolve(flags: Overrides, file: FileConfig) -> Result<Self, Failure> {
        let env_cap = match std::env::var(CAP_ENV) {
            Ok(v) => Some(
                v.trim()
                    .parse::<usize>()
                    .map_err(|_| Failure::input(format!("{CAP_ENV}={v} is not a step count")))?,
            ),
            Err(_) => None,
        };
        let cap = flags
            .max_iter
            .or(file.max_iter)
            .or(env_cap)
            .unwrap_or(IterationPolicy::default().cap);
        Ok(Settings {
            policy: IterationPolicy { cap, paranoid: flags.paranoid || file.paranoid.unwrap_or(false) },
            order: flags.order.or(file.order).unwrap_or_default(),
            sugar: flags.sugar || file.sugar.unwrap_or(false),
        })
    }
}
