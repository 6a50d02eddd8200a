use thiserror::Error;

/// Errors reported by the invariant and audit operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("genus g = {0} is below the minimum of 3")]
    GenusTooSmall(i64),

    #[error("rank {rank} is below the minimum of {min}")]
    RankTooSmall { rank: i64, min: i64 },

    #[error("xi^{power} lies beyond the dimension of the bundle (maximum exponent {max})")]
    XiPowerTooLarge { power: usize, max: usize },

    #[error("inadmissible triple (g={g}, r={r}, d={d}): {}", reasons.join("; "))]
    Inadmissible {
        g: i64,
        r: i64,
        d: i64,
        reasons: Vec<String>,
    },

    #[error("degree n = {n} is below the bound 2g + 3 + min(1, g-1) = {min_n} for genus {g}")]
    RuledDegreeTooSmall { n: i64, g: i64, min_n: i64 },

    #[error("d = {d} lies outside the gonality window [{lo}, {hi}] for g = {g}")]
    OutsideGonalityWindow { g: i64, d: i64, lo: i64, hi: i64 },

    #[error("cohomology (h0={h0}, h1={h1}, h2={h2}) has negative entries or Euler characteristic != {chi}")]
    CohomologyInconsistent { h0: i64, h1: i64, h2: i64, chi: String },

    #[error("invalid audit grid: {0}")]
    InvalidGrid(String),

    #[error("final invariant {0} is not an integer")]
    NonIntegerInvariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
