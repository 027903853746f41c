//! Achievable-rate lower bounds for amplitude modulation with an energy detector.

mod analytic;
mod density;
mod estimate;
mod fit;
mod input_law;
mod monte_carlo;

pub use analytic::{analytic_rate_lower_bound, asymptotic_gap, bound_constant};
pub use density::{log_aux_density, log_fv};
pub use estimate::{BoundKind, RateEstimate};
pub use fit::{prelog_fit, PrelogFit, MIN_FIT_POINTS, MIN_FIT_SPAN_DB};
pub use input_law::{sample_input_power, InputLaw};
pub use monte_carlo::{
    mc_rate_lower_bound, mc_rate_lower_bound_with, McBoundOptions, SymbolPhase, MIN_BOUND_TRIALS,
};
