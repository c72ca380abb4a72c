// The interval F_n and its encoding by ternary words.

use dexter::hochschild::{f_interval, f_size_formula, rho, rho_inv, z_sets, TernaryWord};

pub fn run_example() -> dexter::Result<()> {
    for n in 1..=6 {
        let f = f_interval(n)?;
        println!("F_{n} = [{}, {}]: {} elements", f.bottom, f.top, f.cardinality());
        assert_eq!(f.cardinality() as u64, f_size_formula(n));
    }
    let f3 = f_interval(3)?;
    for w in f3.elements() {
        let z = rho(w)?;
        assert_eq!(rho_inv(&z)?, w);
        println!("  {w} -> {z}");
    }
    let z: TernaryWord = "102".parse()?;
    println!("rho^-1({z}) = {}", rho_inv(&z)?);
    let sets = z_sets(3)?;
    println!("|Z_3| = {}", sets.all().len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> dexter::Result<()> {
    run_example()
}
