//! Degeneration of a weighted blow-up at a smooth point.
//!
//! Cutting the ambient orbifold `G` (complex dimension `n`) around the
//! blown-up point with weight `w` produces the cap `WP(w, 1)` on the plus
//! side and the blow-up on the minus side, glued along `Z = WP(w)`. A
//! degeneration component splits a stable map into pieces on both sides
//! meeting `Z` at `k` relative points.
//!
//! The comparison between invariants of `G` and of the blow-up reduces to
//! showing that every component with `k >= 1` has a minus-side virtual
//! dimension strictly below the insertion degree. That gap is
//!
//! ```text
//! deficit = (sum m_i)(sum l_j) + (3 - n)(g+ - l+) + sum_j iota^Z(h_j^-1) - (n - 2) k
//!         = [(3 - n)(g+ - l+) + k] + sum_j [(sum m_i) l_j + iota^Z(h_j^-1) - (n - 1)]
//! ```
//!
//! and each bracket in the per-marking sum reduces, in the orbifold chart
//! around the contact point, to `sum_i (m_i q + l_i - 1) + 1` with
//! nonnegative integers `q, l_i`. [`vanishing_certificate`] computes that
//! reduction, [`certify_comparison`] runs the whole argument over a bounded
//! enumeration and reports it.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclic::{degree_shift, enumerate_sectors, SectorLabel, TwistedSector, Weight};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::moduli::{
    degree_condition, half_degree, vdim_absolute, vdim_relative, Insertion, RelativeMarking,
};
use crate::wps::{c1_of_class, CurveClassData, Divisor, DivisorBasis};

/// Data of an absolute invariant of `G` together with the blow-up weight.
/// The complex dimension of `G` is the number of weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem {
    pub weights: Weight,
    pub genus: u32,
    /// `c_1(A)` of the curve class in `G`; always supplied by the caller.
    pub c1a: Rational,
    pub insertions: Vec<Insertion>,
}

impl Problem {
    pub fn n(&self) -> usize {
        self.weights.len()
    }
}

/// One side of a degeneration component, summarized by its total `c_1`,
/// total genus, number of connected pieces and absolute insertions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Side {
    pub c1a: Rational,
    pub genus: u32,
    pub components: u32,
    pub insertions: Vec<Insertion>,
}

impl Side {
    pub fn empty() -> Self {
        Side { c1a: Rational::zero(), genus: 0, components: 0, insertions: Vec::new() }
    }

    /// Relative virtual dimension of this side. With `l` connected pieces of
    /// total genus `g` the genus term is `(3 - n)(g - l)`.
    pub fn vdim(&self, n: usize, markings: &[RelativeMarking]) -> Result<Rational> {
        let single = vdim_relative(n, self.genus, &self.c1a, &self.insertions, markings)?;
        let extra = Rational::from(self.components as i64 - 1);
        Ok(single - (Rational::from(3i64) - Rational::from(n)) * extra)
    }
}

/// A splitting of a stable map along `Z`. `markings` are the plus-side
/// relative points (sectors `h_j` of `Z`); the minus side sees the inverse
/// sectors with the same contact orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegenerationComponent {
    pub plus: Side,
    pub minus: Side,
    pub markings: Vec<RelativeMarking>,
}

/// Plus-side relative marking for a contact point on `Z = WP(w)` in sector
/// `f` with integer part `q`, so `l = q + f`. The normal direction of `Z`
/// in `WP(w, 1)` has weight one, so the normal angle is `f`.
pub fn exceptional_marking(w: &Weight, sector: &SectorLabel, q: u64) -> Result<RelativeMarking> {
    TwistedSector::new(w, sector.clone())?;
    let f = sector.value();
    let r = sector.order();
    let c = u64::try_from(f.numer()).expect("label numerator fits in u64");
    let shift_z = degree_shift(w, f);
    let shift_g = &shift_z + f;
    if q == 0 && c == 0 {
        return Err(Error::ZeroContactOrder);
    }
    RelativeMarking::new(q * r + c, r, sector.clone(), shift_g, shift_z)
}

/// The same contact point seen from the minus side: inverse sector, equal
/// contact order and normal angle.
pub fn glued_marking(w: &Weight, plus: &RelativeMarking) -> Result<RelativeMarking> {
    let inverse = plus.sector.inverse();
    let shift_z = degree_shift(w, inverse.value());
    let shift_g = &shift_z + &plus.normal_angle();
    RelativeMarking::new(plus.d, plus.r, inverse, shift_g, shift_z)
}

impl DegenerationComponent {
    pub fn k(&self) -> usize {
        self.markings.len()
    }

    pub fn contact_sum(&self) -> Rational {
        self.markings.iter().map(RelativeMarking::ell).sum()
    }

    pub fn minus_markings(&self, w: &Weight) -> Result<Vec<RelativeMarking>> {
        self.markings.iter().map(|m| glued_marking(w, m)).collect()
    }

    /// Checks the bookkeeping constraints of a splitting of `problem`:
    /// genus, connectivity, insertion split, `c_1` split and the marking
    /// data on `Z = WP(w)`.
    pub fn validate(&self, problem: &Problem) -> Result<()> {
        let bad = |msg: String| Err(Error::InconsistentComponent(msg));
        let k = self.k() as i64;
        let (lp, lm) = (self.plus.components as i64, self.minus.components as i64);
        let genus = self.plus.genus as i64 + self.minus.genus as i64 + k - lp - lm + 1;
        if genus != problem.genus as i64 {
            return bad(format!("genus {genus} of the glued curve differs from {}", problem.genus));
        }
        if k == 0 {
            if lp + lm != 1 {
                return bad("a split without relative points must have one piece".into());
            }
        } else if lp < 1 || lm < 1 || lp + lm > k + 1 {
            return bad(format!("{lp} + {lm} pieces cannot be joined by {k} relative points"));
        }

        let mut split: Vec<&Insertion> =
            self.plus.insertions.iter().chain(&self.minus.insertions).collect();
        let mut total: Vec<&Insertion> = problem.insertions.iter().collect();
        let key = |i: &&Insertion| (i.sector_shift.clone(), i.real_degree);
        split.sort_by_key(key);
        total.sort_by_key(key);
        if split != total {
            return bad("insertions do not split the total insertion list".into());
        }

        let expected = &problem.c1a + &(Rational::from(2i64) * self.contact_sum());
        if &self.plus.c1a + &self.minus.c1a != expected {
            return bad(format!(
                "c1 split {} + {} does not match c1(A) + 2 sum(l) = {expected}",
                self.plus.c1a, self.minus.c1a
            ));
        }

        let w = &problem.weights;
        for (index, m) in self.markings.iter().enumerate() {
            let sector = TwistedSector::new(w, m.sector.clone())
                .map_err(|e| Error::InvalidMarking { index, reason: e.to_string() })?;
            if m.shift_z != sector.shift {
                return Err(Error::InvalidMarking {
                    index,
                    reason: format!("shift_Z = {} but the sector of Z has shift {}", m.shift_z, sector.shift),
                });
            }
        }
        Ok(())
    }
}

/// `(vdim+ + vdim-) - [sum_j (n - 1 - iota^Z(h_j) - iota^Z(h_j^-1)) + vdim of G]`.
/// Zero is necessary for the component to contribute.
pub fn dim_sum_constraint(problem: &Problem, gamma: &DegenerationComponent) -> Result<Rational> {
    let minus_markings = gamma.minus_markings(&problem.weights)?;
    dim_sum_with(problem, gamma, &minus_markings)
}

fn dim_sum_with(problem: &Problem, gamma: &DegenerationComponent, minus_markings: &[RelativeMarking]) -> Result<Rational> {
    let n = problem.n();
    let lhs = gamma.plus.vdim(n, &gamma.markings)? + gamma.minus.vdim(n, minus_markings)?;
    let mut rhs = vdim_absolute(n, problem.genus, &problem.c1a, &problem.insertions);
    for (p, m) in gamma.markings.iter().zip(minus_markings) {
        rhs += Rational::from(n as i64 - 1) - &p.shift_z - &m.shift_z;
    }
    Ok(lhs - rhs)
}

/// Whether the component survives the support argument: insertions pulled
/// back from `G` can be supported away from the blown-up point, so a
/// component with any insertion on the plus side contributes zero.
pub fn insertion_support_filter(gamma: &DegenerationComponent) -> bool {
    gamma.plus.insertions.is_empty()
}

/// `|Aut| * prod l_i`, where `|Aut|` counts permutations of the relative
/// points preserving the triples `(l_i, sector_i, label_i)`.
pub fn degeneration_coefficient<L: Ord>(markings: &[RelativeMarking], labels: &[L]) -> Result<Rational> {
    if markings.len() != labels.len() {
        return Err(Error::LengthMismatch { markings: markings.len(), labels: labels.len() });
    }
    let mut classes: BTreeMap<(Rational, &SectorLabel, &L), u64> = BTreeMap::new();
    for (m, label) in markings.iter().zip(labels) {
        *classes.entry((m.ell(), &m.sector, label)).or_default() += 1;
    }
    let aut: BigInt = classes
        .values()
        .map(|&c| (1..=c).map(BigInt::from).product::<BigInt>())
        .product();
    let product: Rational = markings.iter().map(RelativeMarking::ell).fold(Rational::one(), |a, b| a * b);
    Ok(Rational::integer(aut) * product)
}

/// Positivity witness for one relative point of a plus-side component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub marking_index: usize,
    pub sector: SectorLabel,
    pub ell: Rational,
    /// Coordinate `a` with `z_a != 0` in the chart used.
    pub anchor: usize,
    pub q: u64,
    /// `l_i = ceil(f m_i)`; at the anchor this is the chart numerator `l`.
    pub l: Vec<u64>,
    /// `(sum m_i) l + iota^Z(h^-1) - (n - 1)`.
    pub value: Rational,
}

impl Certificate {
    /// `sum_i (m_i q + l_i - 1) + 1`, evaluated in integers.
    pub fn reduced_value(&self, w: &Weight) -> BigInt {
        let mut total = BigInt::one();
        for (&m, &l) in w.entries().iter().zip(&self.l) {
            total += BigInt::from(m) * BigInt::from(self.q) + BigInt::from(l) - BigInt::one();
        }
        total
    }
}

/// Certificate in the chart anchored at the first fixed coordinate of `f`.
pub fn vanishing_certificate(w: &Weight, f: &SectorLabel, ell: &Rational) -> Result<Certificate> {
    let sector = TwistedSector::new(w, f.clone())?;
    vanishing_certificate_in_chart(w, f, ell, sector.anchor())
}

/// Certificates in every chart that contains the fixed locus of `f`.
pub fn certificates_in_all_charts(w: &Weight, f: &SectorLabel, ell: &Rational) -> Result<Vec<Certificate>> {
    let sector = TwistedSector::new(w, f.clone())?;
    sector
        .fixed_indices
        .iter()
        .map(|&a| vanishing_certificate_in_chart(w, f, ell, a))
        .collect()
}

/// Evaluates `(sum m_i) l + iota^Z(h^-1) - (n - 1)` directly and through the
/// integer chart reduction, and fails unless they agree.
pub fn vanishing_certificate_in_chart(
    w: &Weight,
    f: &SectorLabel,
    ell: &Rational,
    anchor: usize,
) -> Result<Certificate> {
    let sector = TwistedSector::new(w, f.clone())?;
    if !sector.is_fixed(anchor) {
        return Err(Error::InvalidProblem(format!(
            "chart z_{anchor} != 0 does not contain the fixed locus of sector {f}"
        )));
    }
    if ell.is_negative() || ell.frac() != *f.value() {
        return Err(Error::ContactCongruence(0));
    }
    let q = u64::try_from(ell.floor()).map_err(|_| Error::InvalidProblem(format!("contact order {ell} too large")))?;
    if q == 0 && f.is_untwisted() {
        return Err(Error::ZeroContactOrder);
    }

    let m = w.entries();
    let ma = m[anchor];
    // xi = e^{2 pi i l / m_a} in the chart; l_i is the least nonnegative
    // integer with l_i m_a - l m_i >= 0.
    let la = u64::try_from(&(f.value() * &Rational::from(ma)).floor()).expect("anchor is fixed");
    let l: Vec<u64> = m
        .iter()
        .enumerate()
        .map(|(i, &mi)| if i == anchor { la } else { (la * mi).div_ceil(ma) })
        .collect();

    let inverse_shift = degree_shift(w, &-f.value());
    let value = w.sum() * ell + inverse_shift - Rational::from(w.len() as i64 - 1);

    let cert = Certificate { marking_index: 0, sector: f.clone(), ell: ell.clone(), anchor, q, l, value };
    if Rational::integer(cert.reduced_value(w)) != cert.value {
        return Err(Error::CertificationFailed(format!(
            "w = ({w}), f = {f}, l = {ell}: direct value {} differs from chart reduction {}",
            cert.value,
            cert.reduced_value(w)
        )));
    }
    Ok(cert)
}

/// `(3 - n)(g+ - l+) + k`, the part of the deficit not attached to a
/// single relative point.
pub fn aggregate_slack(n: usize, g_plus: u32, l_plus: u32, k: usize) -> Rational {
    (Rational::from(3i64) - Rational::from(n)) * Rational::from(g_plus as i64 - l_plus as i64)
        + Rational::from(k)
}

/// The closed form of `(1/2) sum deg - vdim-` for a component with no
/// plus-side insertions.
pub fn deficit_closed_form(w: &Weight, g_plus: u32, l_plus: u32, markings: &[RelativeMarking]) -> Rational {
    let n = w.len();
    let k = markings.len();
    let ell_sum: Rational = markings.iter().map(RelativeMarking::ell).sum();
    let inverse_shifts: Rational = markings.iter().map(|m| degree_shift(w, &-m.sector.value())).sum();
    w.sum() * ell_sum
        + (Rational::from(3i64) - Rational::from(n)) * Rational::from(g_plus as i64 - l_plus as i64)
        + inverse_shifts
        - Rational::from((n as i64 - 2) * k as i64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub k: usize,
    pub q: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { k: 4, q: 4 }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CertifyOptions {
    /// Evaluate the enumeration outside the proven range without issuing a
    /// verdict.
    pub unsafe_explore: bool,
}

/// Which hypothesis places the problem in the proven range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Hypothesis {
    #[serde(rename = "g<=1,n>=2")]
    GenusAtMostOne,
    #[serde(rename = "n in {2,3}")]
    LowDimension,
    #[serde(rename = "outside proven range")]
    Outside,
}

impl Hypothesis {
    pub fn classify(n: usize, genus: u32) -> Self {
        if genus <= 1 && n >= 2 {
            Hypothesis::GenusAtMostOne
        } else if n == 2 || n == 3 {
            Hypothesis::LowDimension
        } else {
            Hypothesis::Outside
        }
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().expect("string"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "certified")]
    Certified,
    #[serde(rename = "vanishes trivially")]
    VanishesTrivially,
    #[serde(rename = "unverified")]
    Unverified,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().expect("string"))
    }
}

/// One multiset of contact points `(f_j, q_j)`, checked against every
/// enumerated `(l+, g+)` split.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentRecord {
    pub k: usize,
    pub sectors: Vec<SectorLabel>,
    pub q: Vec<u64>,
    /// Smallest deficit over the splits.
    pub deficit: Rational,
    pub min_aggregate_slack: Rational,
    pub splits: usize,
    /// Per-marking certificate values.
    pub certificates: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectorMinimum {
    pub f: SectorLabel,
    pub q: u64,
    pub value: Rational,
}

/// The unbounded statement: every certificate equals
/// `sum(m_i q + l_i - 1) + 1`, which is nondecreasing in `q`, so its minimum
/// over all `q` is attained at `q = 0` (twisted) or `q = 1` (untwisted).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicCertificate {
    pub min_value: Rational,
    pub form: String,
    pub per_sector: Vec<SectorMinimum>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub degree_condition: bool,
    pub hypothesis: Hypothesis,
    pub bounds: Bounds,
    pub components: Vec<ComponentRecord>,
    pub symbolic_certificate: Option<SymbolicCertificate>,
    pub conclusions: Vec<String>,
    pub notes: Vec<String>,
    pub verdict: Verdict,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn symbolic_certificate(w: &Weight) -> Result<SymbolicCertificate> {
    let mut per_sector = Vec::new();
    for s in enumerate_sectors(w) {
        let q = u64::from(s.label.is_untwisted());
        let ell = Rational::from(q) + s.label.value();
        let cert = vanishing_certificate(w, &s.label, &ell)?;
        per_sector.push(SectorMinimum { f: s.label, q, value: cert.value });
    }
    let min_value = per_sector.iter().map(|s| s.value.clone()).min().expect("untwisted sector exists");
    Ok(SymbolicCertificate {
        min_value,
        form: "sum(m_i*q+l_i-1)+1".to_string(),
        per_sector,
    })
}

struct ContactType {
    marking: RelativeMarking,
    certificate: Certificate,
}

fn contact_types(w: &Weight, max_q: u64) -> Result<Vec<ContactType>> {
    let mut out = Vec::new();
    for s in enumerate_sectors(w) {
        for q in 0..=max_q {
            if q == 0 && s.label.is_untwisted() {
                continue;
            }
            let marking = exceptional_marking(w, &s.label, q)?;
            let certificate = vanishing_certificate(w, &s.label, &marking.ell())?;
            out.push(ContactType { marking, certificate });
        }
    }
    Ok(out)
}

/// Nondecreasing index sequences of length `k` over `0..n`, in
/// lexicographic order.
fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, i, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

fn describe(record: &ComponentRecord) -> String {
    let pts: Vec<String> = record
        .sectors
        .iter()
        .zip(&record.q)
        .map(|(f, q)| format!("(f={f}, q={q})"))
        .collect();
    format!("k={} [{}]", record.k, pts.join(", "))
}

/// Checks one contact multiset against every `(l+, g+)` split, through the
/// closed-form deficit and through the side virtual dimensions.
fn check_component(
    problem: &Problem,
    types: &[ContactType],
    choice: &[usize],
) -> Result<ComponentRecord> {
    let w = &problem.weights;
    let n = problem.n();
    let k = choice.len();
    let markings: Vec<RelativeMarking> = choice.iter().map(|&i| types[i].marking.clone()).collect();
    let certificates: Vec<Rational> = choice.iter().map(|&i| types[i].certificate.value.clone()).collect();
    let cert_sum: Rational = certificates.iter().sum();

    // The contact points lie on Z, so the plus class pairs with eta_E (in
    // the cap) or eta_H (in the blown-up cap) to sum(l) and misses E.
    let ell_sum: Rational = markings.iter().map(RelativeMarking::ell).sum();
    let cone_class = CurveClassData::with_pairings([(Divisor::E, ell_sum.clone())]);
    let c1_plus = c1_of_class(DivisorBasis::Cone, w, &cone_class)?;
    let blowup_class = CurveClassData::with_pairings([(Divisor::H, ell_sum.clone()), (Divisor::E, Rational::zero())]);
    if c1_of_class(DivisorBasis::Blowup, w, &blowup_class)? != c1_plus {
        return Err(Error::CertificationFailed("blow-up side c1 differs from cap c1".into()));
    }
    let c1_minus = &problem.c1a + &(Rational::from(2i64) * &ell_sum) - &c1_plus;
    let half = half_degree(&problem.insertions);
    let minus_markings: Vec<RelativeMarking> =
        markings.iter().map(|m| glued_marking(w, m)).collect::<Result<_>>()?;

    let mut record = ComponentRecord {
        k,
        sectors: markings.iter().map(|m| m.sector.clone()).collect(),
        q: choice.iter().map(|&i| types[i].certificate.q).collect(),
        deficit: Rational::zero(),
        min_aggregate_slack: Rational::zero(),
        splits: 0,
        certificates,
    };

    let mut min_deficit: Option<Rational> = None;
    let mut min_slack: Option<Rational> = None;
    for l_plus in 1..=k as u32 {
        for g_plus in 0..=problem.genus {
            // Tree-shaped gluing: the remaining pieces sit on the minus side.
            let gamma = DegenerationComponent {
                plus: Side { c1a: c1_plus.clone(), genus: g_plus, components: l_plus, insertions: Vec::new() },
                minus: Side {
                    c1a: c1_minus.clone(),
                    genus: problem.genus - g_plus,
                    components: k as u32 - l_plus + 1,
                    insertions: problem.insertions.clone(),
                },
                markings: markings.clone(),
            };
            gamma.validate(problem)?;
            debug_assert!(insertion_support_filter(&gamma));
            let inconsistent = |what: &str| Error::CertificationFailed(format!("{}: {what}", describe(&record)));
            if !dim_sum_with(problem, &gamma, &minus_markings)?.is_zero() {
                return Err(inconsistent("dimension sum mismatch"));
            }

            let direct = &half - &gamma.minus.vdim(n, &minus_markings)?;
            let closed = deficit_closed_form(w, g_plus, l_plus, &markings);
            let slack = aggregate_slack(n, g_plus, l_plus, k);
            if direct != closed || closed != &slack + &cert_sum {
                return Err(inconsistent("deficit routes disagree"));
            }
            if min_deficit.as_ref().is_none_or(|d| closed < *d) {
                min_deficit = Some(closed);
            }
            if min_slack.as_ref().is_none_or(|s| slack < *s) {
                min_slack = Some(slack);
            }
            record.splits += 1;
        }
    }
    record.deficit = min_deficit.expect("k >= 1 gives at least one split");
    record.min_aggregate_slack = min_slack.expect("k >= 1 gives at least one split");
    Ok(record)
}

/// Runs the comparison argument for `problem`: hypothesis gate, degree
/// condition, then every contact multiset with `1 <= k <= bounds.k` and
/// `q <= bounds.q` and every split, requiring a positive deficit.
pub fn certify_comparison(problem: &Problem, bounds: Bounds, options: CertifyOptions) -> Result<Report> {
    let n = problem.n();
    let hypothesis = Hypothesis::classify(n, problem.genus);
    if hypothesis == Hypothesis::Outside && !options.unsafe_explore {
        return Err(Error::OutsideProvenRange { n, genus: problem.genus });
    }
    if bounds.k == 0 {
        return Err(Error::InvalidProblem("bound k must be at least 1".into()));
    }
    if problem.genus > 64 {
        return Err(Error::InvalidProblem("genus too large to enumerate".into()));
    }

    let balanced = degree_condition(n, problem.genus, &problem.c1a, &problem.insertions);
    if !balanced {
        return Ok(Report {
            degree_condition: false,
            hypothesis,
            bounds,
            components: Vec::new(),
            symbolic_certificate: None,
            conclusions: vec!["both sides vanish trivially".into()],
            notes: Vec::new(),
            verdict: Verdict::VanishesTrivially,
        });
    }

    let w = &problem.weights;
    let types = contact_types(w, bounds.q)?;
    let choices: Vec<Vec<usize>> = (1..=bounds.k).flat_map(|k| multisets(types.len(), k)).collect();
    let components: Vec<ComponentRecord> = choices
        .par_iter()
        .map(|choice| check_component(problem, &types, choice))
        .collect::<Result<_>>()?;
    let symbolic = symbolic_certificate(w)?;

    let mut notes = vec![
        "blow-up side reuses the cap computation with relative points on the infinity section H".to_string(),
    ];
    let verdict = if hypothesis == Hypothesis::Outside {
        let failing = components.iter().filter(|c| !c.deficit.is_positive()).count();
        notes.push(format!("exploration outside the proven range: {failing} component(s) with nonpositive deficit"));
        Verdict::Unverified
    } else {
        if let Some(bad) = components.iter().find(|c| !c.deficit.is_positive()) {
            return Err(Error::CertificationFailed(describe(bad)));
        }
        if symbolic.min_value < 1 {
            return Err(Error::CertificationFailed("symbolic certificate below 1".into()));
        }
        Verdict::Certified
    };
    let conclusions = if verdict == Verdict::Certified {
        vec![
            "absolute = relative on blow-down side".to_string(),
            "blow-up absolute = same relative".to_string(),
            "blow-up invariance certified".to_string(),
        ]
    } else {
        Vec::new()
    };

    Ok(Report {
        degree_condition: true,
        hypothesis,
        bounds,
        components,
        symbolic_certificate: Some(symbolic),
        conclusions,
        notes,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[u64]) -> Weight {
        Weight::new(v.to_vec()).unwrap()
    }

    fn q(p: i64, d: i64) -> Rational {
        Rational::ratio(p, d)
    }

    fn label(p: i64, d: i64) -> SectorLabel {
        SectorLabel::new(q(p, d)).unwrap()
    }

    #[test]
    fn certificate_for_ordinary_surface_blowup() {
        let c = vanishing_certificate(&w(&[1, 1]), &SectorLabel::untwisted(), &q(1, 1)).unwrap();
        assert_eq!(c.value, q(1, 1));
        assert_eq!(c.q, 1);
        assert_eq!(c.l, vec![0, 0]);
    }

    #[test]
    fn certificate_untwisted_closed_form() {
        for v in [vec![2, 3], vec![1, 4, 4], vec![5]] {
            let ww = w(&v);
            for qq in 1..4u64 {
                let c = vanishing_certificate(&ww, &SectorLabel::untwisted(), &Rational::from(qq)).unwrap();
                let expected = Rational::from(qq) * ww.sum() - Rational::from(v.len()) + Rational::one();
                assert_eq!(c.value, expected);
            }
        }
    }

    #[test]
    fn certificate_wp23_half() {
        let c = vanishing_certificate(&w(&[2, 3]), &label(1, 2), &q(1, 2)).unwrap();
        assert_eq!(c.anchor, 0);
        assert_eq!(c.l, vec![1, 2]);
        assert_eq!(c.value, q(2, 1));
        // 5 * 1/2 + frac(-3/2) - 1
        assert_eq!(c.value, q(5, 2) + q(1, 2) - q(1, 1));
    }

    #[test]
    fn certificate_errors() {
        let ww = w(&[2, 3]);
        assert_eq!(
            vanishing_certificate(&ww, &SectorLabel::untwisted(), &q(0, 1)),
            Err(Error::ZeroContactOrder)
        );
        assert_eq!(vanishing_certificate(&ww, &label(1, 2), &q(1, 3)), Err(Error::ContactCongruence(0)));
        assert!(matches!(
            vanishing_certificate(&ww, &label(1, 5), &q(1, 5)),
            Err(Error::EmptyFixedLocus { .. })
        ));
        assert!(vanishing_certificate_in_chart(&ww, &label(1, 2), &q(1, 2), 1).is_err());
    }

    #[test]
    fn certificate_is_chart_independent() {
        let ww = w(&[2, 4, 6]);
        let all = certificates_in_all_charts(&ww, &label(1, 2), &q(5, 2)).unwrap();
        assert_eq!(all.len(), 3);
        assert!(all.iter().all(|c| c.value == all[0].value));
        assert_eq!(all.iter().map(|c| c.anchor).collect::<Vec<_>>(), vec![0, 1, 2]);
    }

    #[test]
    fn coefficient_examples() {
        let one = RelativeMarking::new(1, 1, SectorLabel::untwisted(), q(0, 1), q(0, 1)).unwrap();
        assert_eq!(degeneration_coefficient(&[one.clone(), one.clone()], &["a", "a"]).unwrap(), q(2, 1));
        let three_halves = RelativeMarking::new(3, 2, label(1, 2), q(1, 2), q(0, 1)).unwrap();
        assert_eq!(degeneration_coefficient(&[three_halves], &["a"]).unwrap(), q(3, 2));
        let two = RelativeMarking::new(2, 1, SectorLabel::untwisted(), q(0, 1), q(0, 1)).unwrap();
        let half = RelativeMarking::new(1, 2, label(1, 2), q(1, 2), q(0, 1)).unwrap();
        assert_eq!(degeneration_coefficient(&[one.clone(), two, half], &["a", "a", "a"]).unwrap(), q(1, 1));
        // same contact data, different labels
        assert_eq!(degeneration_coefficient(&[one.clone(), one.clone()], &["a", "b"]).unwrap(), q(1, 1));
        assert_eq!(
            degeneration_coefficient(&[one], &["a", "b"]),
            Err(Error::LengthMismatch { markings: 1, labels: 2 })
        );
    }

    #[test]
    fn support_filter() {
        let mut gamma = DegenerationComponent { plus: Side::empty(), minus: Side::empty(), markings: vec![] };
        assert!(insertion_support_filter(&gamma));
        gamma.plus.insertions.push(Insertion::untwisted(2));
        assert!(!insertion_support_filter(&gamma));
    }

    fn problem(v: &[u64], genus: u32, c1a: Rational, insertions: Vec<Insertion>) -> Problem {
        Problem { weights: w(v), genus, c1a, insertions }
    }

    #[test]
    fn trivial_split_has_zero_dim_sum() {
        let p = problem(&[2, 3], 0, q(3, 1), vec![Insertion::untwisted(4); 2]);
        let gamma = DegenerationComponent {
            plus: Side::empty(),
            minus: Side { c1a: q(3, 1), genus: 0, components: 1, insertions: p.insertions.clone() },
            markings: vec![],
        };
        gamma.validate(&p).unwrap();
        assert_eq!(dim_sum_constraint(&p, &gamma).unwrap(), q(0, 1));
    }

    #[test]
    fn perturbed_c1_is_detected() {
        let p = problem(&[2, 3], 1, q(2, 1), vec![]);
        let m = exceptional_marking(&p.weights, &label(1, 3), 1).unwrap();
        let ell = m.ell();
        let c1_plus = Rational::from(6i64) * &ell;
        let c1_minus = &p.c1a + &(Rational::from(2i64) * &ell) - &c1_plus;
        let mut gamma = DegenerationComponent {
            plus: Side { c1a: c1_plus, genus: 1, components: 1, insertions: vec![] },
            minus: Side { c1a: c1_minus, genus: 0, components: 1, insertions: vec![] },
            markings: vec![m],
        };
        gamma.validate(&p).unwrap();
        assert_eq!(dim_sum_constraint(&p, &gamma).unwrap(), q(0, 1));
        gamma.minus.c1a += q(1, 1);
        assert!(gamma.validate(&p).is_err());
        assert_eq!(dim_sum_constraint(&p, &gamma).unwrap(), q(1, 1));
    }

    #[test]
    fn validate_rejects_bad_genus_and_insertions() {
        let p = problem(&[1, 1], 0, q(3, 1), vec![Insertion::untwisted(4)]);
        let m = exceptional_marking(&p.weights, &SectorLabel::untwisted(), 1).unwrap();
        let gamma = DegenerationComponent {
            plus: Side { c1a: q(3, 1), genus: 1, components: 1, insertions: vec![] },
            minus: Side { c1a: q(2, 1), genus: 0, components: 1, insertions: p.insertions.clone() },
            markings: vec![m.clone()],
        };
        assert!(matches!(gamma.validate(&p), Err(Error::InconsistentComponent(_))));
        let gamma = DegenerationComponent {
            plus: Side { c1a: q(3, 1), genus: 0, components: 1, insertions: vec![] },
            minus: Side { c1a: q(2, 1), genus: 0, components: 1, insertions: vec![] },
            markings: vec![m],
        };
        assert!(matches!(gamma.validate(&p), Err(Error::InconsistentComponent(_))));
    }

    #[test]
    fn exceptional_marking_data() {
        let ww = w(&[2, 3]);
        let m = exceptional_marking(&ww, &label(1, 3), 2).unwrap();
        assert_eq!((m.d, m.r), (7, 3));
        assert_eq!(m.shift_z, degree_shift(&ww, &q(1, 3)));
        assert_eq!(m.normal_angle(), q(1, 3));
        let minus = glued_marking(&ww, &m).unwrap();
        assert_eq!(minus.sector, label(2, 3));
        assert_eq!(minus.normal_angle(), q(1, 3));
        assert_eq!(exceptional_marking(&ww, &SectorLabel::untwisted(), 0), Err(Error::ZeroContactOrder));
    }

    #[test]
    fn multiset_enumeration() {
        assert_eq!(multisets(3, 2).len(), 6);
        assert_eq!(multisets(19, 4).len(), 7315);
        assert_eq!(multisets(2, 2), vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn gate() {
        assert_eq!(Hypothesis::classify(2, 0), Hypothesis::GenusAtMostOne);
        assert_eq!(Hypothesis::classify(5, 1), Hypothesis::GenusAtMostOne);
        assert_eq!(Hypothesis::classify(3, 7), Hypothesis::LowDimension);
        assert_eq!(Hypothesis::classify(4, 2), Hypothesis::Outside);
        assert_eq!(Hypothesis::classify(1, 0), Hypothesis::Outside);
    }

    #[test]
    fn certify_small_manifold_case() {
        // a line in CP^2 through two points
        let p = problem(&[1, 1], 0, q(3, 1), vec![Insertion::untwisted(4); 2]);
        let report = certify_comparison(&p, Bounds { k: 3, q: 3 }, CertifyOptions::default()).unwrap();
        assert_eq!(report.verdict, Verdict::Certified);
        assert!(report.components.iter().all(|c| c.deficit >= 1));
        assert!(report.components.iter().flat_map(|c| &c.certificates).all(|v| *v >= 1));
        assert_eq!(report.symbolic_certificate.unwrap().min_value, q(1, 1));
    }

    #[test]
    fn certify_unbalanced_and_out_of_range() {
        let p = problem(&[1, 1], 0, q(3, 1), vec![Insertion::untwisted(4)]);
        let report = certify_comparison(&p, Bounds::default(), CertifyOptions::default()).unwrap();
        assert_eq!(report.verdict, Verdict::VanishesTrivially);
        assert!(report.components.is_empty());

        let p = problem(&[1, 1, 1, 1], 2, q(0, 1), vec![]);
        assert_eq!(
            certify_comparison(&p, Bounds::default(), CertifyOptions::default()),
            Err(Error::OutsideProvenRange { n: 4, genus: 2 })
        );
    }

    #[test]
    fn exploration_of_curves_finds_nonpositive_deficits() {
        // n = 1: c1 = 2 - 2g + ... with zero insertions; g = 0, vdim = c1 - 2
        let p = problem(&[1], 0, q(2, 1), vec![]);
        let report = certify_comparison(&p, Bounds { k: 2, q: 2 }, CertifyOptions { unsafe_explore: true }).unwrap();
        assert_eq!(report.hypothesis, Hypothesis::Outside);
        assert_eq!(report.verdict, Verdict::Unverified);
        assert!(report.components.iter().any(|c| !c.deficit.is_positive()));
    }
}
