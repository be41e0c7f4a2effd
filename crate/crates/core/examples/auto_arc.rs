//! Auto-arc spaces `A_n(X, p)`: arcs of `X` over its own jet.

use autoarc::arc::{auto_arc, parse_point, AffineScheme};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let origin = parse_point("0,0")?;
    for (name, x) in [("cusp", AffineScheme::cusp()), ("node", AffineScheme::node())] {
        for n in 2..=3 {
            let a = auto_arc(&x, &origin, n)?;
            println!(
                "{name} n={n}: {} variables, {} equations",
                a.ring().nvars(),
                a.generators().len()
            );
            for g in a.generators() {
                println!("  {g}");
            }
        }
    }
    Ok(())
}
