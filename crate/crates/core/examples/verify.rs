//! Runs one verification suite, named on the command line (`all` by
//! default), and prints a line per check.

use autoarc::verify::{run_suite, Suite};
use clap::ValueEnum;

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "all".into());
    let suite = Suite::from_str(&name, true).unwrap_or_else(|e| {
        eprintln!("{e}");
        std::process::exit(2);
    });
    let results = run_suite(suite);
    for r in &results {
        println!("{}", r.line());
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    println!("{failed} of {} failed", results.len());
}
