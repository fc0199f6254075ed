//! Positivity certificates for relative points on the exceptional divisor.
//!
//! cargo run --example vanishing_certificate -- 2,3 1/2 1/2

use orbiblow::degeneration::certificates_in_all_charts;
use orbiblow::{Rational, SectorLabel, Weight};

fn main() -> orbiblow::Result<()> {
    let mut args = std::env::args().skip(1);
    let w: Weight = args.next().unwrap_or_else(|| "2,3".into()).parse()?;
    let f = SectorLabel::new(args.next().unwrap_or_else(|| "1/2".into()).parse()?)?;
    let ell: Rational = args.next().unwrap_or_else(|| "1/2".into()).parse()?;
    for c in certificates_in_all_charts(&w, &f, &ell)? {
        println!(
            "chart z_{} != 0: q = {}, l = {:?}, value = {} = sum(m_i q + l_i - 1) + 1 = {}",
            c.anchor,
            c.q,
            c.l,
            c.value,
            c.reduced_value(&w)
        );
    }
    Ok(())
}
