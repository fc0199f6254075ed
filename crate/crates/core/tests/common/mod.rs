//! Generators and oracles shared by the integration targets.
#![allow(dead_code)]

use orbiblow::degeneration::{exceptional_marking, DegenerationComponent, Problem, Side};
use orbiblow::moduli::{Insertion, RelativeMarking};
use orbiblow::{enumerate_sectors, Rational, SectorLabel, Weight};
use rand::seq::SliceRandom;
use rand::Rng;

/// Every weight vector of length `1..=max_n` with entries in `1..=max_m`,
/// in lexicographic order.
pub fn all_weights(max_n: usize, max_m: u64) -> Vec<Weight> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let mut cur = vec![1u64; n];
        loop {
            out.push(Weight::new(cur.clone()).unwrap());
            let Some(i) = cur.iter().rposition(|&m| m < max_m) else {
                break;
            };
            cur[i] += 1;
            for c in cur.iter_mut().skip(i + 1) {
                *c = 1;
            }
        }
    }
    out
}

pub fn q(p: i64, d: i64) -> Rational {
    Rational::ratio(p, d)
}

fn random_fraction<R: Rng>(rng: &mut R, max_den: i64, max_value: i64) -> Rational {
    let den = rng.gen_range(1..=max_den);
    q(rng.gen_range(0..max_value * den), den)
}

/// An admissible marking for an arbitrary ambient: normal angle `c / r`,
/// `l = t + c / r`, divisor shift with denominator at most `max_den`.
pub fn admissible_marking<R: Rng>(rng: &mut R, max_den: i64) -> RelativeMarking {
    let r = rng.gen_range(1..=max_den);
    let c = rng.gen_range(0..r);
    let t = rng.gen_range(if c == 0 { 1 } else { 0 }..4);
    let angle = q(c, r);
    let shift_z = random_fraction(rng, max_den, 3);
    let shift_g = &shift_z + &angle;
    RelativeMarking::new((t * r + c) as u64, r as u64, SectorLabel::new(angle).unwrap(), shift_g, shift_z).unwrap()
}

/// A marking whose fractional contact order differs from its normal angle.
pub fn inadmissible_marking<R: Rng>(rng: &mut R, max_den: i64) -> RelativeMarking {
    let r = rng.gen_range(2..=max_den);
    let c = rng.gen_range(0..r);
    let mut e = rng.gen_range(0..r - 1);
    if e >= c {
        e += 1;
    }
    let t = rng.gen_range(if e == 0 { 1 } else { 0 }..4);
    let angle = q(c, r);
    let shift_z = random_fraction(rng, max_den, 3);
    let shift_g = &shift_z + &angle;
    RelativeMarking::new((t * r + e) as u64, r as u64, SectorLabel::new(angle).unwrap(), shift_g, shift_z).unwrap()
}

pub fn random_insertions<R: Rng>(rng: &mut R, max_den: i64) -> Vec<Insertion> {
    let m = rng.gen_range(0..4);
    (0..m)
        .map(|_| Insertion::new(random_fraction(rng, max_den, 2), rng.gen_range(0..9)).unwrap())
        .collect()
}

pub fn random_weight<R: Rng>(rng: &mut R, max_n: usize, max_m: u64) -> Weight {
    let n = rng.gen_range(1..=max_n);
    Weight::new((0..n).map(|_| rng.gen_range(1..=max_m)).collect()).unwrap()
}

/// A random problem on `WP(w)` together with an admissible splitting of it
/// along the exceptional divisor: random sectors and contact orders, piece
/// counts and genera satisfying the gluing relation, random insertion split
/// and a random `c_1` split with the right total.
pub fn random_component<R: Rng>(rng: &mut R) -> (Problem, DegenerationComponent) {
    let w = random_weight(rng, 4, 6);
    let sectors = enumerate_sectors(&w);
    let k = rng.gen_range(1..=5usize);
    let markings: Vec<RelativeMarking> = (0..k)
        .map(|_| {
            let s = sectors.choose(rng).unwrap();
            let lo = u64::from(s.label.is_untwisted());
            exceptional_marking(&w, &s.label, rng.gen_range(lo..=3)).unwrap()
        })
        .collect();
    let l_plus = rng.gen_range(1..=k as u32);
    let l_minus = rng.gen_range(1..=k as u32 + 1 - l_plus);
    // g = g+ + g- + k - l+ - l- + 1 with g-, g+ >= 0
    let base = k as u32 + 1 - l_plus - l_minus;
    let g_plus = rng.gen_range(0..3);
    let g_minus = rng.gen_range(0..3);
    let genus = g_plus + g_minus + base;

    let insertions = random_insertions(rng, 12);
    let (mut plus_ins, mut minus_ins) = (Vec::new(), Vec::new());
    for i in &insertions {
        if rng.gen_bool(0.5) {
            plus_ins.push(i.clone());
        } else {
            minus_ins.push(i.clone());
        }
    }
    let c1a = q(rng.gen_range(-20..40), rng.gen_range(1..7));
    let ell_sum: Rational = markings.iter().map(RelativeMarking::ell).sum();
    let c1_plus = q(rng.gen_range(-20..40), rng.gen_range(1..7));
    let c1_minus = &c1a + &(q(2, 1) * &ell_sum) - &c1_plus;

    let problem = Problem { weights: w, genus, c1a, insertions };
    let gamma = DegenerationComponent {
        plus: Side { c1a: c1_plus, genus: g_plus, components: l_plus, insertions: plus_ins },
        minus: Side { c1a: c1_minus, genus: g_minus, components: l_minus, insertions: minus_ins },
        markings,
    };
    (problem, gamma)
}

/// Number of permutations `s` of `0..v.len()` with `v[s(i)] == v[i]`.
pub fn brute_force_automorphisms<T: PartialEq>(v: &[T]) -> u64 {
    fn rec<T: PartialEq>(v: &[T], pos: usize, used: &mut Vec<bool>) -> u64 {
        if pos == v.len() {
            return 1;
        }
        let mut total = 0;
        for j in 0..v.len() {
            if !used[j] && v[j] == v[pos] {
                used[j] = true;
                total += rec(v, pos + 1, used);
                used[j] = false;
            }
        }
        total
    }
    rec(v, 0, &mut vec![false; v.len()])
}

/// Vanishing certificate value times `r`, in machine integers, for
/// `f = c / r` and `l = q + f`:
/// `sum m (q r + c) + sum ((-c m) mod r) - (n - 1) r`.
pub fn certificate_oracle_scaled(w: &[u64], c: i64, r: i64, q: i64) -> i64 {
    let sum: i64 = w.iter().map(|&m| m as i64).sum();
    let inverse: i64 = w.iter().map(|&m| (-c * m as i64).rem_euclid(r)).sum();
    sum * (q * r + c) + inverse - (w.len() as i64 - 1) * r
}

/// `sum_i (m_i q + ceil(c m_i / r) - 1) + 1`.
pub fn reduced_oracle(w: &[u64], c: i64, r: i64, q: i64) -> i64 {
    w.iter()
        .map(|&m| {
            let m = m as i64;
            m * q + (c * m + r - 1) / r - 1
        })
        .sum::<i64>()
        + 1
}
