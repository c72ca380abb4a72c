// The product # on Dyck paths and its extension to intervals, with
// factorizations into generators.

use dexter::monoid::{m1_factor, m2_factor, m2_generator_count, sharp, sharp_all, star};
use dexter::{DyckPath, Interval, PseudoDyckPath};

pub fn run_example() -> dexter::Result<()> {
    let u: PseudoDyckPath = "0110".parse()?;
    let v: PseudoDyckPath = "1010".parse()?;
    println!("{u} * {v} = {}", star(u, v));

    let a: DyckPath = "1100".parse()?;
    println!("{a} # {a} = {}", sharp(a, a)?);

    let w: DyckPath = "11010010110100".parse()?;
    let parts = m1_factor(w)?;
    println!("{w} = {}", parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" # "));
    assert_eq!(sharp_all(&parts)?, w);

    let i = Interval::new(DyckPath::w_min(4), "11011000".parse()?)?;
    println!("[{}, {}] factors as", i.bottom, i.top);
    for g in m2_factor(i)? {
        println!("  [{}, {}]", g.bottom, g.top);
    }

    let counts: Vec<u64> = (2..=7).map(m2_generator_count).collect();
    println!("interval generators by size: {counts:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> dexter::Result<()> {
    run_example()
}
