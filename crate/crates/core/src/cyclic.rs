//! Cyclic actions given by weight vectors.
//!
//! A weight `(m_1, ..., m_n)` defines the circle action
//! `t . z = (t^{m_1} z_1, ..., t^{m_n} z_n)`. Every local group of the
//! quotient `WP(m)` is cyclic, so a conjugacy class in a local group is just
//! a root of unity `e^{2 pi i f}` and is named by the rational `f in [0, 1)`.
//! The element fixes exactly the coordinates `j` with `f * m_j` integral.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{lcm_list, Rational};

/// Ordered list of positive integer weights. Indices are zero-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Weight(Vec<u64>);

impl Weight {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyWeight);
        }
        if let Some((index, &value)) = entries.iter().enumerate().find(|(_, &m)| m == 0) {
            return Err(Error::NonPositiveWeight { index, value });
        }
        Ok(Weight(entries))
    }

    /// The weight `(1, ..., 1)` of length `n`, i.e. ordinary projective space.
    pub fn trivial(n: usize) -> Result<Self> {
        Self::new(vec![1; n])
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn sum(&self) -> Rational {
        self.0.iter().map(|&m| Rational::from(m)).sum()
    }

    pub fn lcm(&self) -> BigUint {
        lcm_list(&self.0).expect("weights are nonempty and positive")
    }

    /// The weight with one more entry appended, e.g. `(m, 1)` for the cap
    /// `WP(m, 1)` of a weighted blow-up.
    pub fn extended(&self, extra: u64) -> Result<Self> {
        let mut entries = self.0.clone();
        entries.push(extra);
        Self::new(entries)
    }
}

impl TryFrom<Vec<u64>> for Weight {
    type Error = Error;
    fn try_from(v: Vec<u64>) -> Result<Self> {
        Weight::new(v)
    }
}

impl From<Weight> for Vec<u64> {
    fn from(w: Weight) -> Self {
        w.0
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight({self})")
    }
}

impl std::str::FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|p| p.trim().parse::<u64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidProblem(format!("bad weight list {s:?}")))?;
        Weight::new(entries)
    }
}

/// Rational `f in [0, 1)` naming the class of `e^{2 pi i f}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Rational", into = "Rational")]
pub struct SectorLabel(Rational);

impl SectorLabel {
    pub fn new(f: Rational) -> Result<Self> {
        if f.is_negative() || f >= 1 {
            return Err(Error::SectorOutOfRange(f.to_string()));
        }
        Ok(SectorLabel(f))
    }

    /// Reduces `f` modulo 1.
    pub fn reduced(f: &Rational) -> Self {
        SectorLabel(f.frac())
    }

    pub fn untwisted() -> Self {
        SectorLabel(Rational::zero())
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn is_untwisted(&self) -> bool {
        self.0.is_zero()
    }

    /// Order `r` of the group element, the denominator of `f`.
    pub fn order(&self) -> u64 {
        u64::try_from(self.0.denom()).expect("sector order fits in u64")
    }

    pub fn inverse(&self) -> Self {
        SectorLabel::reduced(&-&self.0)
    }
}

impl TryFrom<Rational> for SectorLabel {
    type Error = Error;
    fn try_from(f: Rational) -> Result<Self> {
        SectorLabel::new(f)
    }
}

impl From<SectorLabel> for Rational {
    fn from(s: SectorLabel) -> Self {
        s.0
    }
}

impl fmt::Display for SectorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for SectorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SectorLabel({})", self.0)
    }
}

/// Degree shifting number of `e^{2 pi i f}` acting on `C^n` with weights `w`:
/// the sum of `frac(f * m_j)` over all coordinates. Fixed coordinates
/// contribute zero.
pub fn degree_shift(w: &Weight, f: &Rational) -> Rational {
    w.entries()
        .iter()
        .map(|&m| (f * &Rational::from(m)).frac())
        .sum()
}

/// A connected component of the inertia orbifold of `WP(w)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwistedSector {
    pub label: SectorLabel,
    pub ambient: Weight,
    pub fixed_indices: Vec<usize>,
    pub shift: Rational,
    pub complex_dim: usize,
}

impl TwistedSector {
    pub fn new(ambient: &Weight, label: SectorLabel) -> Result<Self> {
        let f = label.value();
        let fixed_indices: Vec<usize> = ambient
            .entries()
            .iter()
            .enumerate()
            .filter(|(_, &m)| (f * &Rational::from(m)).is_integer())
            .map(|(j, _)| j)
            .collect();
        if fixed_indices.is_empty() {
            return Err(Error::EmptyFixedLocus {
                label: label.to_string(),
                weight: ambient.to_string(),
            });
        }
        let shift = degree_shift(ambient, f);
        Ok(TwistedSector {
            complex_dim: fixed_indices.len() - 1,
            label,
            ambient: ambient.clone(),
            fixed_indices,
            shift,
        })
    }

    pub fn is_fixed(&self, index: usize) -> bool {
        self.fixed_indices.binary_search(&index).is_ok()
    }

    /// Smallest fixed coordinate; the standard chart `z_a != 0` around the
    /// fixed locus.
    pub fn anchor(&self) -> usize {
        self.fixed_indices[0]
    }

    /// Shift summed over the normal (non-fixed) directions only.
    pub fn restricted_shift(&self) -> Rational {
        let f = self.label.value();
        self.ambient
            .entries()
            .iter()
            .enumerate()
            .filter(|(j, _)| !self.is_fixed(*j))
            .map(|(_, &m)| (f * &Rational::from(m)).frac())
            .sum()
    }
}

impl Serialize for TwistedSector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Record<'a> {
            f: &'a SectorLabel,
            fixed: &'a [usize],
            shift: &'a Rational,
            dim: usize,
        }
        Record {
            f: &self.label,
            fixed: &self.fixed_indices,
            shift: &self.shift,
            dim: self.complex_dim,
        }
        .serialize(serializer)
    }
}

/// All twisted sectors of `WP(w)` (the untwisted one included), ascending by
/// label.
pub fn enumerate_sectors(w: &Weight) -> Vec<TwistedSector> {
    let labels: BTreeSet<Rational> = w
        .entries()
        .iter()
        .flat_map(|&m| (0..m).map(move |c| Rational::ratio(c as i64, m as i64)))
        .collect();
    labels
        .into_iter()
        .map(|f| {
            TwistedSector::new(w, SectorLabel(f)).expect("label c/m_j fixes coordinate j")
        })
        .collect()
}

/// The sector of `g^{-1}`; it has the same fixed locus.
pub fn sector_inverse(s: &TwistedSector) -> TwistedSector {
    TwistedSector::new(&s.ambient, s.label.inverse()).expect("inverse fixes the same coordinates")
}
