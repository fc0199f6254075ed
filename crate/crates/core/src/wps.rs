//! Weighted projective spaces: Betti ranks, line orbibundles and Chern
//! numbers of the two model spaces of a weighted blow-up.
//!
//! Cohomology classes are never represented as forms. A curve class is
//! recorded by its pairings with the named divisors of the space it lives
//! in, and `c_1` is a coefficient vector over the same divisors.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::cyclic::Weight;

/// Real Betti ranks of `WP(w)` in degrees `0..=2(n-1)`; these agree with
/// those of `CP^{n-1}` since `WP(w) -> CP^{n-1}` has finite fibres.
pub fn cohomology_ranks(w: &Weight) -> Vec<u32> {
    (0..2 * w.len() - 1).map(|d| u32::from(d % 2 == 0)).collect()
}

/// The line orbibundle `O_base(chi)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineOrbibundle {
    pub base: Weight,
    pub chi: Rational,
}

impl LineOrbibundle {
    pub fn new(base: Weight, chi: Rational) -> Self {
        LineOrbibundle { base, chi }
    }
}

/// `c_1(O_m(chi)) = chi / lcm(m)`.
pub fn chern_line(b: &LineOrbibundle) -> Rational {
    &b.chi / &Rational::from(b.base.lcm())
}

/// Which side of the cut the exceptional divisor `Z = WP(w)` sits in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CutSide {
    /// The cap `WP(w, 1)`, where `Z` is the divisor at infinity.
    Cone,
    /// The blow-up, where `Z` is the exceptional divisor.
    Blowup,
}

/// Normal bundle of `Z` in the given cut: `O_w(+1)` in the cap and
/// `O_w(-1)` in the blow-up.
pub fn exceptional_normal_bundle(w: &Weight, side: CutSide) -> LineOrbibundle {
    let chi = match side {
        CutSide::Cone => Rational::one(),
        CutSide::Blowup => -Rational::one(),
    };
    LineOrbibundle::new(w.clone(), chi)
}

/// Coefficient of `c_1(T WP(w, 1))` over `eta_E`: `sum(w) + 1`.
pub fn c1_tangent_cone(w: &Weight) -> Rational {
    w.sum() + Rational::one()
}

/// Coefficients `(a, b)` of `c_1 = a eta_H + b eta_E` on the weighted
/// blow-up of `WP(w, 1)` at its smooth point: `(sum + 1, -(sum - 1))`.
pub fn c1_tangent_blowup(w: &Weight) -> (Rational, Rational) {
    let s = w.sum();
    (&s + &Rational::one(), Rational::one() - s)
}

/// `c_1(T WP(w))` as a rational number, via Whitney sum over the Euler
/// sequence `0 -> C -> sum_i O_w(m_i) -> T WP(w) -> 0`.
pub fn euler_sequence_c1(w: &Weight) -> Rational {
    // every summand has the same base, so c_1(O_w(m)) = m / lcm(w)
    let lcm = Rational::from(w.lcm());
    w.entries().iter().map(|&m| &Rational::from(m) / &lcm).sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Divisor {
    /// Exceptional divisor, or `Z` at infinity of the cap.
    E,
    /// Infinity section of `P(O_w(-1) + O)`.
    H,
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Divisor::E => "E",
            Divisor::H => "H",
        })
    }
}

/// The divisor basis of `H^2` in which classes are recorded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DivisorBasis {
    /// `WP(w, 1)`: `H^2` has rank one, spanned by `eta_E`.
    Cone,
    /// Weighted blow-up of `WP(w, 1)`, a connected sum of two copies of
    /// `WP(w, 1)`; `H^2` has rank two, spanned by `eta_H` and `eta_E`.
    Blowup,
}

impl DivisorBasis {
    pub fn names(self) -> &'static [Divisor] {
        match self {
            DivisorBasis::Cone => &[Divisor::E],
            DivisorBasis::Blowup => &[Divisor::H, Divisor::E],
        }
    }

    /// Coefficients of `c_1(T)` over `names()`.
    pub fn c1_coefficients(self, w: &Weight) -> Vec<Rational> {
        match self {
            DivisorBasis::Cone => vec![c1_tangent_cone(w)],
            DivisorBasis::Blowup => {
                let (h, e) = c1_tangent_blowup(w);
                vec![h, e]
            }
        }
    }
}

/// A curve class recorded by `c_1(A)` (when known) and its pairings with
/// named divisors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveClassData {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c1: Option<Rational>,
    #[serde(default)]
    pub pairings: BTreeMap<Divisor, Rational>,
}

impl CurveClassData {
    pub fn with_c1(c1: Rational) -> Self {
        CurveClassData { c1: Some(c1), pairings: BTreeMap::new() }
    }

    pub fn with_pairings(pairings: impl IntoIterator<Item = (Divisor, Rational)>) -> Self {
        CurveClassData { c1: None, pairings: pairings.into_iter().collect() }
    }

    pub fn pairing(&self, d: Divisor) -> Result<&Rational> {
        self.pairings.get(&d).ok_or_else(|| Error::MissingPairing(d.to_string()))
    }
}

/// `c_1(A)` for a class in one of the model spaces, from its divisor
/// pairings.
pub fn c1_of_class(basis: DivisorBasis, w: &Weight, a: &CurveClassData) -> Result<Rational> {
    let mut total = Rational::zero();
    for (name, coeff) in basis.names().iter().zip(basis.c1_coefficients(w)) {
        total += coeff * a.pairing(*name)?;
    }
    Ok(total)
}
