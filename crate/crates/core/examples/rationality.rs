//! Recovering a rational function in `t` from a truncated series.

use autoarc::arc::AffineScheme;
use autoarc::motive::detect_rationality;
use autoarc::verify::zeta_config;
use autoarc::zeta::{auto_zeta, Normalization};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t = 12;
    let s = auto_zeta(&zeta_config(AffineScheme::node(), t, Normalization::Codim)?)?;
    match detect_rationality(&s, 6) {
        Some(r) => {
            let show = |v: &[autoarc::motive::MotiveClass]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>();
            println!("numerator   {:?}", show(r.numerator()));
            println!("denominator {:?}", show(r.denominator()));
            println!("re-expands to the series: {}", r.expand(t) == s);
        }
        None => println!("no rational function of denominator degree <= 6"),
    }
    Ok(())
}
