//! Prints the bounds table for n = 2.

use omega_recognition::bounds::{table1_report, Table1Options};

pub fn run_example() -> omega_recognition::Result<()> {
    print!("{}", table1_report(Table1Options::new(2))?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
