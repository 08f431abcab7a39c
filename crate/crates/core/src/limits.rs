use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_CAP: u64 = 4096;
pub const DEFAULT_MAX_DEPTH: usize = 64;
pub const CAP_ENV_VAR: &str = "DSC_CAP";

/// Bounds on exhaustive enumeration and on depth searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Maximum number of words (or prefix symbols) any single enumeration may produce.
    pub cap: u64,
    /// Deepest cylinder level searched when looking for a depth with small diameter.
    pub max_depth: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            cap: DEFAULT_CAP,
            max_depth: DEFAULT_MAX_DEPTH,
        }
    }
}

impl Limits {
    pub fn with_cap(cap: u64) -> Self {
        Limits {
            cap,
            ..Limits::default()
        }
    }

    /// Defaults, with the cap overridden by `DSC_CAP` when it is set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(CAP_ENV_VAR) {
            Ok(v) => {
                let cap = v.trim().parse::<u64>().map_err(|_| {
                    Error::validation(
                        CAP_ENV_VAR,
                        format!("expected a positive integer, found `{v}`"),
                    )
                })?;
                if cap == 0 {
                    return Err(Error::validation(CAP_ENV_VAR, "cap must be positive"));
                }
                Ok(Limits::with_cap(cap))
            }
            Err(_) => Ok(Limits::default()),
        }
    }

    pub(crate) fn ensure(
        &self,
        what: impl FnOnce() -> String,
        required: Option<u64>,
    ) -> Result<u64> {
        match required {
            Some(n) if n <= self.cap => Ok(n),
            Some(n) => Err(Error::Resource {
                what: what(),
                required: n.to_string(),
                cap: self.cap,
            }),
            None => Err(Error::Resource {
                what: what(),
                required: "more than 2^64".into(),
                cap: self.cap,
            }),
        }
    }
}
