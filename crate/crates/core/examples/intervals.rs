// Counting intervals by brute force and by formula; the series by size and
// number of blocks, and the functional equations they satisfy.

use dexter::intervals::series::{all_series, verify_algebraic_equation, verify_functional_equations};
use dexter::intervals::{count_intervals, interval_count_formula};

pub fn run_example() -> dexter::Result<()> {
    for n in 0..=6 {
        println!("n = {n}: {} intervals (formula {})", count_intervals(n)?, interval_count_formula(n));
    }
    let [a, r, c] = all_series(4)?;
    println!("f_A = {}", a.to_poly());
    println!("f_R = {}", r.to_poly());
    println!("f_C = {}", c.to_poly());

    let mut report = verify_functional_equations(5)?;
    report.extend(verify_algebraic_equation(12, 5)?);
    print!("{report}");
    assert!(report.all_passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> dexter::Result<()> {
    run_example()
}
