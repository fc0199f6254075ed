//! Absolute and relative virtual dimensions and the degree condition.

use orbiblow::moduli::{
    degree_condition, half_degree, vdim_absolute, vdim_relative, vdim_relative_bracket, Insertion, RelativeMarking,
};
use orbiblow::{Rational, SectorLabel};

fn main() -> orbiblow::Result<()> {
    // genus 0 curves in a surface with c1(A) = 3 through two points
    let points = vec![Insertion::untwisted(4), Insertion::untwisted(4)];
    let c1 = Rational::from(3i64);
    println!("vdim = {}", vdim_absolute(2, 0, &c1, &points));
    println!("half degree = {}", half_degree(&points));
    println!("balanced: {}", degree_condition(2, 0, &c1, &points));

    // one relative point of contact 3/2 in a Z_2 sector with normal angle 1/2
    let half = SectorLabel::new(Rational::ratio(1, 2))?;
    let m = RelativeMarking::new(3, 2, half, Rational::ratio(1, 2), Rational::zero())?;
    let c1 = Rational::from(2i64);
    println!("relative vdim            = {}", vdim_relative(2, 0, &c1, &[], std::slice::from_ref(&m))?);
    println!("relative vdim (brackets) = {}", vdim_relative_bracket(2, 0, &c1, &[], &[m]));
    Ok(())
}
