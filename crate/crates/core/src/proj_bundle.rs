//! The Chow ring of a projective bundle `P(F)` over the K3, used as an
//! independent route to degree computations.
//!
//! For a rank-`n` bundle `F` on a surface (so `c_3 = c_4 = ... = 0`) the
//! tautological class `xi` satisfies the Grothendieck relation
//!
//! ```text
//! xi^n = c1(F) . xi^(n-1) - c2(F) . xi^(n-2)
//! ```
//!
//! A class on `P(F)` is a `xi`-polynomial with [`ChowS`] coefficients;
//! reduction rewrites the highest power until every exponent is below
//! `n`. The same relation in Segre form gives the pushforward
//!
//! ```text
//! s_0 = 1,   s_1 = c1,   s_2 = c1^2 - c2,   s_j = 0 for j < 0
//! ```
//!
//! so `eta_*(xi^k) = s_(k-n+1)`; the two routes are kept separate on
//! purpose so each can check the other.

use std::collections::BTreeMap;

use crate::chow::{chow_mul, integrate_s, ChowS, K3Context};
use crate::error::{Error, Result};
use crate::rational::{rat, Rational};
use crate::sheaf::SheafData;

/// Chern data of a bundle on the K3: `c1 = c1_mult . L` and
/// `c2 = c2_pts . pt`. Higher Chern classes vanish on a surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleChern {
    rank: usize,
    c1_mult: i64,
    c2_pts: Rational,
}

impl BundleChern {
    /// Rank must be at least 2 so the fibers are positive-dimensional.
    pub fn new(rank: usize, c1_mult: i64, c2_pts: Rational) -> Result<Self> {
        if rank < 2 {
            return Err(Error::RankTooSmall {
                rank: rank as i64,
                min: 2,
            });
        }
        Ok(BundleChern {
            rank,
            c1_mult,
            c2_pts,
        })
    }

    pub fn from_sheaf(s: &SheafData) -> Result<Self> {
        BundleChern::new(s.rank as usize, s.c1_mult, rat(s.c2_pts))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn c1_mult(&self) -> i64 {
        self.c1_mult
    }

    pub fn c2_pts(&self) -> &Rational {
        &self.c2_pts
    }

    /// `c1` as a class on the base.
    pub fn c1_class(&self) -> ChowS {
        ChowS::l_multiple(self.c1_mult)
    }

    /// `c2` as a class on the base.
    pub fn c2_class(&self) -> ChowS {
        ChowS::point(self.c2_pts.clone())
    }

    /// `c1^2 - c2`, the second Segre class.
    pub fn segre_two(&self, ctx: &K3Context) -> ChowS {
        &chow_mul(ctx, &self.c1_class(), &self.c1_class()) - &self.c2_class()
    }
}

/// A sparse `xi`-polynomial: exponent -> coefficient on the base.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct XiPoly {
    terms: BTreeMap<usize, ChowS>,
}

impl XiPoly {
    pub fn new() -> Self {
        XiPoly::default()
    }

    /// The monomial `xi^k`.
    pub fn xi_power(k: usize) -> Self {
        XiPoly::new().with_term(k, ChowS::one())
    }

    pub fn with_term(mut self, k: usize, coeff: ChowS) -> Self {
        self.add_term(k, coeff);
        self
    }

    pub fn add_term(&mut self, k: usize, coeff: ChowS) {
        let entry = self.terms.entry(k).or_insert_with(ChowS::zero);
        *entry = &*entry + &coeff;
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &ChowS)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    /// Sum of two polynomials.
    pub fn plus(&self, other: &XiPoly) -> XiPoly {
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k, c.clone());
        }
        out
    }

    /// Coefficient-wise product with a base class.
    pub fn scaled_by(&self, ctx: &K3Context, s: &ChowS) -> XiPoly {
        let mut out = XiPoly::new();
        for (k, c) in self.terms() {
            out.add_term(k, chow_mul(ctx, c, s));
        }
        out
    }
}

/// A fully reduced class on `P(F)`: coefficients of `xi^0 .. xi^(rank-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChowP {
    coeffs: Vec<ChowS>,
}

impl ChowP {
    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> &ChowS {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[ChowS] {
        &self.coeffs
    }

    pub fn to_poly(&self) -> XiPoly {
        let mut p = XiPoly::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            p.add_term(k, c.clone());
        }
        p
    }

    /// Integral over the total space. Only `xi^(rank-1) . pt` has the
    /// right dimension, so this is the point coefficient of the top term.
    pub fn integral(&self) -> Rational {
        integrate_s(self.coeffs.last().expect("reduced form is nonempty"))
    }
}

/// Reduces a raw `xi`-polynomial modulo the Grothendieck relation of
/// `P(F)`, highest power first. Each rewrite strictly lowers the top
/// exponent, so this terminates; coefficients are multiplied in the base
/// ring, where everything of degree above 2 is truncated.
pub fn groth_reduce(ctx: &K3Context, f: &BundleChern, poly: &XiPoly) -> ChowP {
    let n = f.rank();
    let c1 = f.c1_class();
    let c2 = f.c2_class();

    let mut work: BTreeMap<usize, ChowS> = poly
        .terms()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.clone()))
        .collect();

    while let Some((&deg, _)) = work.iter().next_back() {
        if deg < n {
            break;
        }
        let coeff = work.remove(&deg).expect("key just observed");
        if coeff.is_zero() {
            continue;
        }
        // xi^deg -> c1 . xi^(deg-1) - c2 . xi^(deg-2)
        let down_one = chow_mul(ctx, &coeff, &c1);
        let down_two = chow_mul(ctx, &coeff, &c2);
        let e1 = work.entry(deg - 1).or_insert_with(ChowS::zero);
        *e1 = &*e1 + &down_one;
        let e2 = work.entry(deg - 2).or_insert_with(ChowS::zero);
        *e2 = &*e2 - &down_two;
    }

    let coeffs = (0..n)
        .map(|k| work.remove(&k).unwrap_or_else(ChowS::zero))
        .collect();
    ChowP { coeffs }
}

/// Pushforward of the monomial `xi^k` along `P(F) -> S`, in Segre form:
/// `eta_*(xi^k) = s_(k-rank+1)`. Exponents beyond `rank + 1` exceed the
/// dimension of `P(F)` and are rejected.
pub fn pushforward(ctx: &K3Context, f: &BundleChern, k: usize) -> Result<ChowS> {
    let n = f.rank();
    if k > n + 1 {
        return Err(Error::XiPowerTooLarge {
            power: k,
            max: n + 1,
        });
    }
    Ok(if k + 1 < n {
        ChowS::zero()
    } else if k + 1 == n {
        ChowS::one()
    } else if k == n {
        f.c1_class()
    } else {
        f.segre_two(ctx)
    })
}

/// Degree of the image of `P(F)` under its tautological system:
/// `xi^(rank+1)` reduced by the Grothendieck relation and integrated.
/// The Segre route computes the same number independently.
pub fn top_self_intersection(ctx: &K3Context, f: &BundleChern) -> Rational {
    let reduced = groth_reduce(ctx, f, &XiPoly::xi_power(f.rank() + 1));
    let via_reduction = reduced.integral();
    debug_assert_eq!(
        via_reduction,
        integrate_s(&pushforward(ctx, f, f.rank() + 1).expect("rank+1 is in range")),
    );
    via_reduction
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn ctx8() -> K3Context {
        K3Context::new(8).unwrap()
    }

    /// Rank-2 Chern data of the very-ample twist at (g, r, d) = (8, 1, 5).
    fn pencil_bundle() -> BundleChern {
        BundleChern::new(2, 3, rat(33)).unwrap()
    }

    #[test]
    fn rank_below_two_rejected() {
        assert!(matches!(
            BundleChern::new(1, 0, rat(0)),
            Err(Error::RankTooSmall { rank: 1, min: 2 })
        ));
    }

    #[test]
    fn rank_two_relation_instance() {
        // xi^2 -> c1 . xi - c2
        let ctx = ctx8();
        let f = pencil_bundle();
        let red = groth_reduce(&ctx, &f, &XiPoly::xi_power(2));
        assert_eq!(red.coeff(1), &ChowS::l_multiple(3));
        assert_eq!(red.coeff(0), &ChowS::point(rat(-33)));
    }

    #[test]
    fn already_reduced_input_unchanged() {
        let ctx = ctx8();
        let f = pencil_bundle();
        let p = XiPoly::new()
            .with_term(0, ChowS::l_multiple(2))
            .with_term(1, ChowS::point(ratio(1, 2)));
        let red = groth_reduce(&ctx, &f, &p);
        assert_eq!(red.coeff(0), &ChowS::l_multiple(2));
        assert_eq!(red.coeff(1), &ChowS::point(ratio(1, 2)));
    }

    #[test]
    fn xi_cubed_reduces_to_93_pt_xi() {
        // Two rewrite steps, then the pt . xi^0 term dies on degree:
        // xi^3 = (c1^2 - c2) . xi - c1 c2 and c1 c2 has degree 3.
        let ctx = ctx8();
        let f = pencil_bundle();
        let red = groth_reduce(&ctx, &f, &XiPoly::xi_power(3));
        assert_eq!(red.coeff(1), &ChowS::point(rat(93)));
        assert_eq!(red.coeff(0), &ChowS::zero());
    }

    #[test]
    fn pushforward_segre_values() {
        let ctx = ctx8();
        let f = pencil_bundle();
        // Fiber integral of xi^(rank-1) is the fundamental class.
        assert_eq!(pushforward(&ctx, &f, 1).unwrap(), ChowS::one());
        assert_eq!(pushforward(&ctx, &f, 2).unwrap(), ChowS::l_multiple(3));
        // s_2 = c1^2 - c2 = (9 . 14 - 33) pt = 93 pt
        assert_eq!(pushforward(&ctx, &f, 3).unwrap(), ChowS::point(rat(93)));
        assert_eq!(pushforward(&ctx, &f, 0).unwrap(), ChowS::zero());
        assert!(matches!(
            pushforward(&ctx, &f, 4),
            Err(Error::XiPowerTooLarge { power: 4, max: 3 })
        ));
    }

    #[test]
    fn top_self_intersection_matches_hand_reduction() {
        let ctx = ctx8();
        assert_eq!(top_self_intersection(&ctx, &pencil_bundle()), rat(93));
    }

    #[test]
    fn zero_chern_data_gives_zero() {
        let ctx = ctx8();
        let f = BundleChern::new(2, 0, rat(0)).unwrap();
        assert_eq!(top_self_intersection(&ctx, &f), rat(0));
    }
}
