//! End-to-end comparison for a degree-balanced problem.
//!
//! cargo run --release --example certify_blowup

use orbiblow::cli::report_text;
use orbiblow::degeneration::{certify_comparison, Bounds, CertifyOptions, Problem};
use orbiblow::moduli::Insertion;
use orbiblow::{Rational, Weight};

fn main() -> orbiblow::Result<()> {
    // genus 0 curves with c1 = 6 through five points of a surface, blown up
    // with weights (2, 3)
    let problem = Problem {
        weights: Weight::new(vec![2, 3])?,
        genus: 0,
        c1a: Rational::from(6i64),
        insertions: vec![Insertion::untwisted(4); 5],
    };
    let report = certify_comparison(&problem, Bounds { k: 3, q: 2 }, CertifyOptions::default())?;
    print!("{}", report_text(&report));
    Ok(())
}
