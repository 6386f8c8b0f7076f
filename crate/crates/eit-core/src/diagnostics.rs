//! Warning channel for soft invariants.
//!
//! Several operations have validity preconditions that are physical rather
//! than mathematical (perturbative probe, near-resonant pump, separated rate
//! scales). Violations are recorded here instead of aborting; in strict mode
//! the recording call reports the violation back to the caller so it can be
//! escalated to a hard error.

use std::fmt;

/// A recorded soft-invariant violation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Warning {
    /// Probe amplitude is not small against the pump amplitude.
    PerturbativeProbe { omega_pr: String, omega_pu: String },
    /// Pump-exciton detuning is far from the resonator frequency.
    OffResonantDetuning { delta: String, omega: String },
    /// Rate-scale separation assumed by the effective model does not hold.
    ValidityRegime { detail: String },
    /// More than one steady-state root lies in the physical branch.
    RootMultiplicity { roots: String },
    /// Population reached the top Fock level; the cutoff may be too small.
    Truncation { population: String },
    /// Observables changed more than tolerated when the cutoff was doubled.
    TruncationCheck { max_change: String },
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::PerturbativeProbe { omega_pr, omega_pu } => write!(
                f,
                "probe amplitude {omega_pr} GHz exceeds 0.1 x pump amplitude {omega_pu} GHz; \
                 linear-response routes assume omega_pr << omega_pu"
            ),
            Warning::OffResonantDetuning { delta, omega } => write!(
                f,
                "pump-exciton detuning {delta} GHz is more than 10% away from the resonator \
                 frequency {omega} GHz; the effective model assumes delta ~= omega"
            ),
            Warning::ValidityRegime { detail } => write!(f, "validity regime: {detail}"),
            Warning::RootMultiplicity { roots } => write!(
                f,
                "multiple steady-state roots in [-1, 0]: {roots}; picked the one closest to -1"
            ),
            Warning::Truncation { population } => write!(
                f,
                "top Fock level reached population {population}; increase the cutoff"
            ),
            Warning::TruncationCheck { max_change } => write!(
                f,
                "doubling the Fock cutoff changed observables by {max_change} (> 1e-4)"
            ),
        }
    }
}

/// Collector for warnings, with optional strict escalation.
#[derive(Debug, Default, Clone)]
pub struct Diagnostics {
    strict: bool,
    warnings: Vec<Warning>,
}

impl Diagnostics {
    /// Collector that records warnings and keeps going.
    pub fn lenient() -> Self {
        Self { strict: false, warnings: Vec::new() }
    }

    /// Collector that records warnings and reports them back for escalation.
    pub fn strict() -> Self {
        Self { strict: true, warnings: Vec::new() }
    }

    /// Record a warning. In strict mode the warning is returned as an `Err`
    /// so the caller can abort; it is kept in the log either way.
    pub fn record(&mut self, warning: Warning) -> Result<(), Warning> {
        self.warnings.push(warning.clone());
        if self.strict {
            Err(warning)
        } else {
            Ok(())
        }
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    pub fn warnings(&self) -> &[Warning] {
        &self.warnings
    }

    pub fn is_empty(&self) -> bool {
        self.warnings.is_empty()
    }
}
