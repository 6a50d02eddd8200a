//! The rational Chow ring of a primitively polarized K3 surface of
//! Picard rank 1.
//!
//! With `Pic(S) = Z[L]` the ring has one generator in each degree:
//! the fundamental class `1`, the polarization `L`, and the point class
//! `pt`. The single nontrivial product is
//!
//! ```text
//! L . L = (2g - 2) pt
//! ```
//!
//! and every product of three or more positive-degree classes vanishes
//! because the base is a surface.

use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::rational::{rat, Rational};

/// Numerical context of a genus-`g` polarized K3 surface, together with
/// the dimension constants used throughout the scroll computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K3Context {
    /// Genus of the polarization, `g >= 3`.
    pub g: i64,
    /// Self-intersection of the polarization, `L^2 = 2g - 2`.
    pub l_squared: i64,
    /// Euler characteristic of the structure sheaf, always 2 on a K3.
    pub chi_structure_sheaf: i64,
    /// Dimension of the moduli space of genus-`g` polarized K3 surfaces.
    pub dim_moduli_k3: i64,
    /// Dimension of the space of pairs (surface, curve in the polarization),
    /// `19 + g`.
    pub dim_pairs_space: i64,
    /// Dimension of the moduli space of genus-`g` curves, `3g - 3`.
    pub dim_mg: i64,
}

impl K3Context {
    pub fn new(g: i64) -> Result<Self> {
        if g < 3 {
            return Err(Error::GenusTooSmall(g));
        }
        Ok(K3Context {
            g,
            l_squared: 2 * g - 2,
            chi_structure_sheaf: 2,
            dim_moduli_k3: 19,
            dim_pairs_space: 19 + g,
            dim_mg: 3 * g - 3,
        })
    }
}

/// A Chow class `a0 . 1 + a1 . L + a2 . pt` with exact rational
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChowS {
    /// Coefficient of the fundamental class.
    pub a0: Rational,
    /// Coefficient of the polarization class `L`.
    pub a1: Rational,
    /// Coefficient of the point class.
    pub a2: Rational,
}

impl ChowS {
    pub fn new(a0: Rational, a1: Rational, a2: Rational) -> Self {
        ChowS { a0, a1, a2 }
    }

    pub fn zero() -> Self {
        ChowS::new(rat(0), rat(0), rat(0))
    }

    /// The multiplicative identity `1`.
    pub fn one() -> Self {
        ChowS::new(rat(1), rat(0), rat(0))
    }

    /// The divisor class `mult . L`.
    pub fn l_multiple(mult: i64) -> Self {
        ChowS::new(rat(0), rat(mult), rat(0))
    }

    /// A 0-cycle of degree `pts`.
    pub fn point(pts: Rational) -> Self {
        ChowS::new(rat(0), rat(0), pts)
    }

    pub fn is_zero(&self) -> bool {
        self.a0 == rat(0) && self.a1 == rat(0) && self.a2 == rat(0)
    }

    /// Scalar multiple, coefficient-wise.
    pub fn scale(&self, s: &Rational) -> Self {
        ChowS::new(&self.a0 * s, &self.a1 * s, &self.a2 * s)
    }
}

impl Add for &ChowS {
    type Output = ChowS;
    fn add(self, rhs: &ChowS) -> ChowS {
        ChowS::new(&self.a0 + &rhs.a0, &self.a1 + &rhs.a1, &self.a2 + &rhs.a2)
    }
}

impl Sub for &ChowS {
    type Output = ChowS;
    fn sub(self, rhs: &ChowS) -> ChowS {
        ChowS::new(&self.a0 - &rhs.a0, &self.a1 - &rhs.a1, &self.a2 - &rhs.a2)
    }
}

impl Neg for &ChowS {
    type Output = ChowS;
    fn neg(self) -> ChowS {
        ChowS::new(-&self.a0, -&self.a1, -&self.a2)
    }
}

/// Intersection product on the K3. The only relation is
/// `L . L = (2g - 2) pt`; anything of total degree above 2 is truncated.
pub fn chow_mul(ctx: &K3Context, x: &ChowS, y: &ChowS) -> ChowS {
    let l2 = rat(ctx.l_squared);
    ChowS::new(
        &x.a0 * &y.a0,
        &x.a0 * &y.a1 + &x.a1 * &y.a0,
        &x.a0 * &y.a2 + &x.a2 * &y.a0 + &x.a1 * &y.a1 * l2,
    )
}

/// Degree of the 0-cycle part of `x`.
pub fn integrate_s(x: &ChowS) -> Rational {
    x.a2.clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn context_constants() {
        let ctx = K3Context::new(8).unwrap();
        assert_eq!(ctx.l_squared, 14);
        assert_eq!(ctx.chi_structure_sheaf, 2);
        assert_eq!(ctx.dim_moduli_k3, 19);
        assert_eq!(ctx.dim_pairs_space, 27);
        assert_eq!(ctx.dim_mg, 21);
        assert_eq!(ctx.dim_pairs_space - ctx.dim_moduli_k3, ctx.g);
        assert_eq!(K3Context::new(2), Err(Error::GenusTooSmall(2)));
    }

    #[test]
    fn l_squared_is_2g_minus_2() {
        let ctx = K3Context::new(8).unwrap();
        let l = ChowS::l_multiple(1);
        assert_eq!(chow_mul(&ctx, &l, &l), ChowS::point(rat(14)));
        assert_eq!(integrate_s(&chow_mul(&ctx, &l, &l)), rat(14));
    }

    #[test]
    fn one_is_identity() {
        let ctx = K3Context::new(5).unwrap();
        let x = ChowS::new(rat(2), rat(-3), rat(7));
        assert_eq!(chow_mul(&ctx, &ChowS::one(), &x), x);
        assert_eq!(chow_mul(&ctx, &x, &ChowS::one()), x);
    }

    #[test]
    fn bilinear_over_the_single_relation() {
        // (2L) . (3L) = 6 (2g-2) pt = 24 pt at g = 3
        let ctx = K3Context::new(3).unwrap();
        let p = chow_mul(&ctx, &ChowS::l_multiple(2), &ChowS::l_multiple(3));
        assert_eq!(p, ChowS::point(rat(24)));
    }

    #[test]
    fn integrate_picks_the_point_part() {
        assert_eq!(integrate_s(&ChowS::one()), rat(0));
        assert_eq!(integrate_s(&ChowS::point(rat(5))), rat(5));
    }

    #[test]
    fn triple_products_of_positive_degree_vanish() {
        let ctx = K3Context::new(4).unwrap();
        let l = ChowS::l_multiple(1);
        let ll = chow_mul(&ctx, &l, &l);
        assert_eq!(chow_mul(&ctx, &ll, &l), ChowS::zero());
    }
}
