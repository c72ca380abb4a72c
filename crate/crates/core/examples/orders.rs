// Covers, slides and maximal elements; the dexter order next to the
// Tamari and comb orders.

use dexter::dexter::{cover_moves, covers, is_maximal, slide};
use dexter::related::{hasse, order_contains, Order};
use dexter::DyckPath;

pub fn run_example() -> dexter::Result<()> {
    let w: DyckPath = "10101100".parse()?;
    println!("covers of {w}:");
    for m in cover_moves(w) {
        let v = slide(w, m.span, m.i)?;
        println!("  slide {:?} over {} zeros -> {v} ({})", m.span, m.i, m.color);
    }
    assert_eq!(covers(w).len(), 2);

    for n in 1..=6 {
        let maxima = DyckPath::all(n).into_iter().filter(|&w| is_maximal(w)).count();
        println!("n = {n}: {maxima} maximal paths");
    }

    let n = 5;
    let [d, t, c] = [Order::Dexter, Order::Tamari, Order::Comb].map(|o| hasse(n, o));
    let (d, t, c) = (d?, t?, c?);
    println!(
        "n = {n}: covers dexter {}, Tamari {}, comb {}",
        d.num_covers(),
        t.num_covers(),
        c.num_covers()
    );
    assert!(order_contains(&c, &d)? && order_contains(&d, &t)?);
    println!("comb <= dexter <= Tamari");
    Ok(())
}

#[allow(dead_code)]
fn main() -> dexter::Result<()> {
    run_example()
}
