//! The contact congruence: which fractional contact orders can occur.

use orbiblow::moduli::{contact_admissible, vdim_relative, RelativeMarking};
use orbiblow::{Rational, SectorLabel};

fn main() -> orbiblow::Result<()> {
    // normal angle 1/3: only l = 1/3, 4/3, 7/3, ... are allowed
    let sector = SectorLabel::new(Rational::ratio(1, 3))?;
    for d in 1..=7u64 {
        let m = RelativeMarking::new(d, 3, sector.clone(), Rational::ratio(1, 3), Rational::zero())?;
        println!("l = {:<4} admissible: {}", m.ell().to_string(), contact_admissible(&m));
    }
    let bad = RelativeMarking::new(2, 3, sector, Rational::ratio(1, 3), Rational::zero())?;
    match vdim_relative(2, 0, &Rational::from(1i64), &[], &[bad]) {
        Ok(v) => println!("unexpected vdim {v}"),
        Err(e) => println!("error: {e}"),
    }
    Ok(())
}
