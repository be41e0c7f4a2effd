//! Point counts over prime fields, and the class in `L` interpolated from
//! them with held-out primes as a check.

use autoarc::arc::{arc_space, AffineScheme, FatPoint};
use autoarc::motive::{count_points, interpolate_class, CountBudget, InterpolationConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = arc_space(&AffineScheme::node(), &FatPoint::linear(2)?)?;
    let ideal = a.ideal();
    for p in [2u64, 3, 5, 7] {
        println!("#(F_{p}) = {}", count_points(&ideal, p, &CountBudget::default())?);
    }
    let r = interpolate_class(&ideal, &InterpolationConfig::default())?;
    println!("class {}", r.class);
    println!("samples {:?}", r.samples);
    println!("verified at {:?}", r.verification);
    Ok(())
}
