//! Jets `J_p^n X` of the cusp at the origin and their lengths.

use autoarc::arc::{jet, parse_point, AffineScheme};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cusp = AffineScheme::cusp();
    let origin = parse_point("0,0")?;
    for n in 1..=5 {
        let j = jet(&cusp, &origin, n)?;
        println!("n={n} length={} basis={:?}", j.length(), j.basis_strings());
    }

    // at a smooth point the jets are those of a line
    let smooth = parse_point("1,1")?;
    let j = jet(&cusp, &smooth, 4)?;
    println!("at (1,1): length {}", j.length());
    Ok(())
}
