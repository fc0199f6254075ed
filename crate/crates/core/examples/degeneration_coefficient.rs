//! The gluing coefficient |Aut| * prod(l) for a few contact patterns.

use orbiblow::degeneration::{degeneration_coefficient, exceptional_marking};
use orbiblow::{SectorLabel, Weight};

fn main() -> orbiblow::Result<()> {
    let w = Weight::new(vec![2, 3])?;
    let half = SectorLabel::new("1/2".parse()?)?;
    let third = SectorLabel::new("1/3".parse()?)?;
    let a = exceptional_marking(&w, &half, 1)?; // l = 3/2
    let b = exceptional_marking(&w, &third, 0)?; // l = 1/3

    let cases = [
        (vec![a.clone(), a.clone()], vec!["x", "x"]),
        (vec![a.clone(), a.clone()], vec!["x", "y"]),
        (vec![a.clone(), a.clone(), b.clone()], vec!["x", "x", "x"]),
        (vec![b.clone(), b.clone(), b], vec!["x", "x", "x"]),
    ];
    for (markings, labels) in cases {
        let ells: Vec<String> = markings.iter().map(|m| m.ell().to_string()).collect();
        println!("l = [{}], labels {:?}: {}", ells.join(", "), labels, degeneration_coefficient(&markings, &labels)?);
    }
    Ok(())
}
