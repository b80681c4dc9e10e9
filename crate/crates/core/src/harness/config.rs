//! Run configuration: which instance, where to evaluate, how hard to
//! sample, and how to emit. Loadable from a flat TOML file in which any
//! field except `instance` may be omitted and falls back to that
//! instance's defaults.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

/// The shipped instance to build and verify.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
#[value(rename_all = "lower")]
pub enum InstanceKind {
    /// Averaging on the line: values and bounds are non-negative reals.
    Scalar,
    /// Componentwise averaging into the Euclidean plane.
    Vector,
    /// Two scalar channels with a componentwise (partial) order on bounds.
    Pair,
    /// Finite point sets under Hausdorff distance with a hull projector.
    SetValued,
}

impl InstanceKind {
    pub fn name(self) -> &'static str {
        match self {
            InstanceKind::Scalar => "scalar",
            InstanceKind::Vector => "vector",
            InstanceKind::Pair => "pair",
            InstanceKind::SetValued => "setvalued",
        }
    }
}

impl fmt::Display for InstanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which modulus of continuity defines the function class under test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
#[value(rename_all = "lower")]
pub enum OmegaKind {
    /// ω(m) = m — the plain Lipschitz class.
    Id,
    /// ω(m) = m^(1/2).
    Sqrt,
    /// ω(m) = m^(1/3).
    Cbrt,
}

impl OmegaKind {
    pub fn name(self) -> &'static str {
        match self {
            OmegaKind::Id => "id",
            OmegaKind::Sqrt => "sqrt",
            OmegaKind::Cbrt => "cbrt",
        }
    }
}

impl fmt::Display for OmegaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Report serialization format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
#[value(rename_all = "lower")]
pub enum OutputFormat {
    Csv,
    Markdown,
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Markdown => "markdown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ConfigError {
    #[error("grid_nodes must be at least 3, got {0}")]
    GridTooSmall(usize),
    #[error("trials must be at least 1")]
    NoTrials,
    #[error("tolerance must be a positive finite real, got {0}")]
    BadTolerance(f64),
    #[error("sweep point {0} lies outside the instance domain [-1, 1]")]
    SweepOutOfDomain(f64),
    #[error("{0}")]
    Parse(String),
}

/// One full verification run. Construct via [`RunConfig::defaults_for`]
/// or deserialize from flat TOML; [`RunConfig::validate`] gates a run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(from = "RawConfig")]
pub struct RunConfig {
    pub instance: InstanceKind,
    /// Points t at which bounds and sharpness are evaluated.
    pub sweep: Vec<f64>,
    /// Nodes in the uniform verification grid before sweep breakpoints.
    pub grid_nodes: usize,
    /// Master seed; every random stream is derived from it by name.
    pub seed: u64,
    /// Randomized members per property trial batch.
    pub trials: usize,
    /// Numerical tolerance for quadrature-mediated comparisons.
    pub tolerance: f64,
    pub omega: OmegaKind,
    pub output_format: OutputFormat,
}

/// Flat file form: everything but the instance is optional.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    instance: InstanceKind,
    #[serde(default)]
    sweep: Option<Vec<f64>>,
    #[serde(default)]
    grid_nodes: Option<usize>,
    #[serde(default)]
    seed: Option<u64>,
    #[serde(default)]
    trials: Option<usize>,
    #[serde(default)]
    tolerance: Option<f64>,
    #[serde(default)]
    omega: Option<OmegaKind>,
    #[serde(default)]
    output_format: Option<OutputFormat>,
}

impl From<RawConfig> for RunConfig {
    fn from(raw: RawConfig) -> RunConfig {
        let mut cfg = RunConfig::defaults_for(raw.instance);
        if let Some(v) = raw.sweep {
            cfg.sweep = v;
        }
        if let Some(v) = raw.grid_nodes {
            cfg.grid_nodes = v;
        }
        if let Some(v) = raw.seed {
            cfg.seed = v;
        }
        if let Some(v) = raw.trials {
            cfg.trials = v;
        }
        if let Some(v) = raw.tolerance {
            cfg.tolerance = v;
        }
        if let Some(v) = raw.omega {
            cfg.omega = v;
        }
        if let Some(v) = raw.output_format {
            cfg.output_format = v;
        }
        cfg
    }
}

impl RunConfig {
    /// Sensible per-instance defaults: a breakpoint-friendly grid (the
    /// set-valued instance uses a shorter one to respect its integration
    /// cap) and a tolerance matched to each instance's numerics.
    pub fn defaults_for(instance: InstanceKind) -> RunConfig {
        let (grid_nodes, tolerance) = match instance {
            InstanceKind::Scalar => (257, 1e-9),
            InstanceKind::Vector | InstanceKind::Pair => (257, 1e-6),
            InstanceKind::SetValued => (65, 1e-6),
        };
        RunConfig {
            instance,
            sweep: vec![-1.0, -0.5, 0.0, 0.5, 1.0],
            grid_nodes,
            seed: 42,
            trials: 100,
            tolerance,
            omega: OmegaKind::Id,
            output_format: OutputFormat::Csv,
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.grid_nodes < 3 {
            return Err(ConfigError::GridTooSmall(self.grid_nodes));
        }
        if self.trials < 1 {
            return Err(ConfigError::NoTrials);
        }
        if !(self.tolerance > 0.0) || !self.tolerance.is_finite() {
            return Err(ConfigError::BadTolerance(self.tolerance));
        }
        for &t in &self.sweep {
            if !t.is_finite() || !(-1.0..=1.0).contains(&t) {
                return Err(ConfigError::SweepOutOfDomain(t));
            }
        }
        Ok(())
    }

    pub fn from_toml(text: &str) -> Result<RunConfig, ConfigError> {
        toml::from_str(text).map_err(|e| ConfigError::Parse(e.to_string()))
    }

    pub fn from_toml_file(path: &Path) -> Result<RunConfig, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConfigError::Parse(format!("{}: {e}", path.display())))?;
        RunConfig::from_toml(&text)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("a flat config always serializes")
    }
}
