//! Chern calculus for torsion-free sheaves on the K3: twists,
//! Riemann-Roch, Mukai vectors, and moduli-dimension bookkeeping.
//!
//! On a K3 surface Riemann-Roch for a sheaf of rank `rk` reads
//!
//! ```text
//! chi = 2 rk + c1^2 / 2 - c2
//! ```
//!
//! and with `c1 = a . L`, `c1^2 = 2 a^2 (g - 1)` the half is always exact.

use crate::brill_noether::{require_admissible, rho};
use crate::chow::K3Context;
use crate::error::{Error, Result};
use crate::rational::{rat, render, Rational};

/// Rank and Chern data of a sheaf on the K3, with optional cohomology.
///
/// Cohomology is attached only where the construction pins it down;
/// generic sheaves carry Chern data alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SheafData {
    pub rank: i64,
    /// `c1 = c1_mult . L`.
    pub c1_mult: i64,
    /// `c2 = c2_pts . pt`.
    pub c2_pts: i64,
    pub h0: Option<i64>,
    pub h1: Option<i64>,
    pub h2: Option<i64>,
}

impl SheafData {
    pub fn new(rank: i64, c1_mult: i64, c2_pts: i64) -> Result<Self> {
        if rank < 1 {
            return Err(Error::RankTooSmall { rank, min: 1 });
        }
        Ok(SheafData {
            rank,
            c1_mult,
            c2_pts,
            h0: None,
            h1: None,
            h2: None,
        })
    }

    /// Attaches full cohomology, enforcing non-negativity and the exact
    /// match `h0 - h1 + h2 = chi` with Riemann-Roch.
    pub fn with_cohomology(self, ctx: &K3Context, h0: i64, h1: i64, h2: i64) -> Result<Self> {
        let chi = riemann_roch_k3(ctx, &self);
        if h0 < 0 || h1 < 0 || h2 < 0 || rat(h0 - h1 + h2) != chi {
            return Err(Error::CohomologyInconsistent {
                h0,
                h1,
                h2,
                chi: render(&chi),
            });
        }
        Ok(SheafData {
            h0: Some(h0),
            h1: Some(h1),
            h2: Some(h2),
            ..self
        })
    }

    /// `h0 - h1 + h2` when all three are known.
    pub fn chi(&self) -> Option<i64> {
        Some(self.h0? - self.h1? + self.h2?)
    }
}

/// Mukai vector `(rank, c1, c1^2/2 - c2 + rank)` of a sheaf, with the
/// middle entry as a multiple of `L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MukaiVector {
    pub r0: i64,
    pub c1_mult: i64,
    pub s: Rational,
}

/// Euler characteristic by Riemann-Roch on the K3:
/// `2 rk + c1_mult^2 (g - 1) - c2`.
pub fn riemann_roch_k3(ctx: &K3Context, s: &SheafData) -> Rational {
    rat(2 * s.rank + s.c1_mult * s.c1_mult * (ctx.g - 1) - s.c2_pts)
}

/// Chern data of `s (x) L^n`. Cohomology fields are cleared; callers
/// recompute them where the construction provides exact values.
pub fn twist_by_l(ctx: &K3Context, s: &SheafData, n: u32) -> SheafData {
    let n = n as i64;
    let l2 = ctx.l_squared;
    let rank = s.rank;
    SheafData {
        rank,
        c1_mult: s.c1_mult + n * rank,
        c2_pts: s.c2_pts
            + (rank - 1) * n * s.c1_mult * l2
            + rank * (rank - 1) / 2 * n * n * l2,
        h0: None,
        h1: None,
        h2: None,
    }
}

/// The Mukai vector of `s`.
pub fn mukai_vector(ctx: &K3Context, s: &SheafData) -> MukaiVector {
    MukaiVector {
        r0: s.rank,
        c1_mult: s.c1_mult,
        s: rat(s.c1_mult * s.c1_mult * (ctx.g - 1) - s.c2_pts + s.rank),
    }
}

/// The expected-dimension polynomial of the moduli space of stable
/// sheaves, `2 rk c2 - (rk - 1) c1^2 - 2 (rk^2 - 1)`, reported raw:
/// the usual `min(-1, .)` clamp is never applied here.
pub fn expected_dim_raw(ctx: &K3Context, s: &SheafData) -> i64 {
    let c1_sq = s.c1_mult * s.c1_mult * ctx.l_squared;
    2 * s.rank * s.c2_pts - (s.rank - 1) * c1_sq - 2 * (s.rank * s.rank - 1)
}

/// Dimension of the moduli space of sheaves with the Mukai vector of a
/// Lazarsfeld-Mukai bundle for an admissible `(g, r, d)`: `2 rho`.
pub fn dim_moduli(g: i64, r: i64, d: i64) -> Result<i64> {
    require_admissible(g, r, d)?;
    Ok(2 * rho(g, r, d))
}
