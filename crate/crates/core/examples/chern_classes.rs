//! Chern numbers of line orbibundles and of the two model spaces.

use orbiblow::wps::{
    c1_of_class, c1_tangent_blowup, c1_tangent_cone, chern_line, euler_sequence_c1, CurveClassData, Divisor,
    DivisorBasis, LineOrbibundle,
};
use orbiblow::{Rational, Weight};

fn main() -> orbiblow::Result<()> {
    for v in [vec![1, 1], vec![2, 3], vec![1, 2, 3]] {
        let w = Weight::new(v)?;
        let cap = w.extended(1)?;
        let (h, e) = c1_tangent_blowup(&w);
        println!("w = ({w})");
        println!("  c1(O_w(1))          = {}", chern_line(&LineOrbibundle::new(w.clone(), Rational::one())));
        println!("  c1(T WP(w,1))       = {} eta_E", c1_tangent_cone(&w));
        println!("  Euler sequence      = {}", euler_sequence_c1(&cap));
        println!("  c1(T blow-up)       = {h} eta_H + {e} eta_E");

        // a curve in the cap meeting Z with total contact 1
        let a = CurveClassData::with_pairings([(Divisor::E, Rational::one())]);
        println!("  c1(A), A.Z = 1      = {}", c1_of_class(DivisorBasis::Cone, &w, &a)?);
    }
    Ok(())
}
