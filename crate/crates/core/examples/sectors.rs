//! Twisted sectors of a weighted projective space.
//!
//! cargo run --example sectors -- 2,3,4

use orbiblow::{enumerate_sectors, sector_inverse, Weight};

fn main() -> orbiblow::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "2,3".to_string());
    let w: Weight = arg.parse()?;
    println!("WP({w})");
    for s in enumerate_sectors(&w) {
        let inv = sector_inverse(&s);
        println!(
            "  f = {:<5} fixed {:?}  shift {:<5} inverse shift {:<5} dim {}",
            s.label.to_string(),
            s.fixed_indices,
            s.shift.to_string(),
            inv.shift.to_string(),
            s.complex_dim
        );
    }
    Ok(())
}
