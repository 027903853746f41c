//! Energy statistic, its decomposition, and the filtered-fade moments.

mod energy;
mod moments;
mod oracle;

pub use energy::{decompose, energy_statistic, EnergyDecomposition};
pub use moments::{
    mean_square_g_deviation, moment_f2, moment_f2_branch, moment_f2_closed, moment_f2_series,
    moment_f4, moment_f4_branch, moment_f4_closed, moment_f4_series, ms_g_limit_ratio, Branch,
    FadeMoments, M2_SERIES_CROSSOVER, M4_SERIES_CROSSOVER,
};
pub use oracle::{
    mc_fade_oracle, mc_fade_refinement, FadeOracle, FadeRefinement, MIN_ORACLE_TRIALS,
};
