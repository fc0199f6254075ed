//! Virtual dimensions of absolute and relative orbifold moduli spaces.
//!
//! All dimensions are complex. `n` is the complex dimension of the target,
//! `g` the genus, `c1a` the pairing `c_1(A)`. The genus term is always
//! written `(3 - n)(g - 1)`.

use serde::{Deserialize, Serialize};

use crate::cyclic::SectorLabel;
use crate::error::{Error, Result};
use crate::exact::Rational;

/// An absolute insertion: a class of real degree `real_degree` on a sector
/// whose degree shifting number (in the ambient orbifold) is `sector_shift`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "InsertionRecord", into = "InsertionRecord")]
pub struct Insertion {
    pub sector_shift: Rational,
    pub real_degree: u32,
}

#[derive(Serialize, Deserialize)]
struct InsertionRecord {
    shift: Rational,
    deg: u32,
}

impl Insertion {
    pub fn new(sector_shift: Rational, real_degree: u32) -> Result<Self> {
        if sector_shift.is_negative() {
            return Err(Error::InvalidProblem(format!(
                "insertion shift {sector_shift} is negative"
            )));
        }
        Ok(Insertion { sector_shift, real_degree })
    }

    /// A class of the given real degree on the untwisted sector.
    pub fn untwisted(real_degree: u32) -> Self {
        Insertion { sector_shift: Rational::zero(), real_degree }
    }
}

impl TryFrom<InsertionRecord> for Insertion {
    type Error = Error;
    fn try_from(r: InsertionRecord) -> Result<Self> {
        Insertion::new(r.shift, r.deg)
    }
}

impl From<Insertion> for InsertionRecord {
    fn from(i: Insertion) -> Self {
        InsertionRecord { shift: i.sector_shift, deg: i.real_degree }
    }
}

/// Contact data of one relative marked point: the lift has integer contact
/// order `d` at a point with local group `Z_r`, landing in the sector
/// `sector` of the divisor. `shift_g` and `shift_z` are the degree shifting
/// numbers of that sector in the ambient orbifold and in the divisor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MarkingRecord", into = "MarkingRecord")]
pub struct RelativeMarking {
    pub d: u64,
    pub r: u64,
    pub sector: SectorLabel,
    pub shift_g: Rational,
    pub shift_z: Rational,
}

#[derive(Serialize, Deserialize)]
struct MarkingRecord {
    d: u64,
    r: u64,
    sector: SectorLabel,
    #[serde(rename = "shift_G")]
    shift_g: Rational,
    #[serde(rename = "shift_Z")]
    shift_z: Rational,
}

impl RelativeMarking {
    pub fn new(
        d: u64,
        r: u64,
        sector: SectorLabel,
        shift_g: Rational,
        shift_z: Rational,
    ) -> Result<Self> {
        let m = RelativeMarking { d, r, sector, shift_g, shift_z };
        m.check().map_err(|reason| Error::InvalidMarking { index: 0, reason })?;
        Ok(m)
    }

    fn check(&self) -> std::result::Result<(), String> {
        if self.r == 0 {
            return Err("local group order r must be positive".into());
        }
        if self.d == 0 {
            return Err("contact order d must be positive".into());
        }
        if self.shift_z.is_negative() {
            return Err(format!("shift_Z = {} is negative", self.shift_z));
        }
        if self.shift_z > self.shift_g {
            return Err(format!("shift_Z = {} exceeds shift_G = {}", self.shift_z, self.shift_g));
        }
        Ok(())
    }

    /// Fractional contact order `l = d / r`.
    pub fn ell(&self) -> Rational {
        Rational::ratio(self.d as i64, self.r as i64)
    }

    /// Rotation angle of the sector on the normal direction of the divisor.
    pub fn normal_angle(&self) -> Rational {
        &self.shift_g - &self.shift_z
    }
}

impl TryFrom<MarkingRecord> for RelativeMarking {
    type Error = Error;
    fn try_from(r: MarkingRecord) -> Result<Self> {
        RelativeMarking::new(r.d, r.r, r.sector, r.shift_g, r.shift_z)
    }
}

impl From<RelativeMarking> for MarkingRecord {
    fn from(m: RelativeMarking) -> Self {
        MarkingRecord { d: m.d, r: m.r, sector: m.sector, shift_g: m.shift_g, shift_z: m.shift_z }
    }
}

/// Re-labels construction errors with the marking's position.
pub fn validate_markings(markings: &[RelativeMarking]) -> Result<()> {
    for (index, m) in markings.iter().enumerate() {
        m.check().map_err(|reason| Error::InvalidMarking { index, reason })?;
    }
    Ok(())
}

/// The contact congruence: `l - (shift_G - shift_Z)` must be a nonnegative
/// integer. Equivalent to `d = r (shift_G - shift_Z) mod r` together with
/// `floor(l) >= 0`.
pub fn contact_admissible(rm: &RelativeMarking) -> bool {
    let q = rm.ell() - rm.normal_angle();
    q.is_integer() && !q.is_negative()
}

fn genus_term(n: usize, g: u32) -> Rational {
    (Rational::from(3i64) - Rational::from(n)) * (Rational::from(g) - Rational::one())
}

fn total_shift(insertions: &[Insertion]) -> Rational {
    insertions.iter().map(|i| &i.sector_shift).sum()
}

/// `c_1(A) + (3 - n)(g - 1) + m - sum of insertion shifts`.
pub fn vdim_absolute(n: usize, g: u32, c1a: &Rational, insertions: &[Insertion]) -> Rational {
    c1a + &genus_term(n, g) + Rational::from(insertions.len()) - total_shift(insertions)
}

/// Relative virtual dimension written with integer parts of the contact
/// orders and the ambient shifts of the relative sectors. Evaluable for any
/// input, meaningful only when every marking is admissible.
pub fn vdim_relative_bracket(
    n: usize,
    g: u32,
    c1a: &Rational,
    insertions: &[Insertion],
    markings: &[RelativeMarking],
) -> Rational {
    let mut v = vdim_absolute(n, g, c1a, insertions) + Rational::from(markings.len());
    for m in markings {
        v -= &m.shift_g;
        v -= Rational::integer(m.ell().floor());
    }
    v
}

/// Relative virtual dimension with fractional contact orders and divisor
/// shifts. Requires every marking to satisfy the contact congruence.
pub fn vdim_relative(
    n: usize,
    g: u32,
    c1a: &Rational,
    insertions: &[Insertion],
    markings: &[RelativeMarking],
) -> Result<Rational> {
    if let Some(index) = markings.iter().position(|m| !contact_admissible(m)) {
        return Err(Error::ContactCongruence(index));
    }
    let mut v = vdim_absolute(n, g, c1a, insertions) + Rational::from(markings.len());
    for m in markings {
        v -= &m.shift_z;
        v -= m.ell();
    }
    Ok(v)
}

/// Half the total real insertion degree.
pub fn half_degree(insertions: &[Insertion]) -> Rational {
    let total: u64 = insertions.iter().map(|i| u64::from(i.real_degree)).sum();
    Rational::ratio(total as i64, 2)
}

/// Whether the insertions can cut the absolute moduli space down to a
/// number. When false the invariant vanishes for dimension reasons.
pub fn degree_condition(n: usize, g: u32, c1a: &Rational, insertions: &[Insertion]) -> bool {
    half_degree(insertions) == vdim_absolute(n, g, c1a, insertions)
}
