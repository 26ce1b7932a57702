//! Compares each engine with brute-force enumeration over small boxes, and
//! shows the capacity guard.
use qcomb::cli::diff_cells;
use qcomb::identities::{oracle, Span};
use qcomb::structures::{cell_size, Family, DEFAULT_CELL_CAP};

fn main() -> qcomb::Result<()> {
    for family in [Family::Partitions, Family::Perms, Family::Lah, Family::ExtLah] {
        let r = if family == Family::ExtLah { 0 } else { 2 };
        let rows = diff_cells(family, Span::new(0, 6), None, Span::new(0, r), DEFAULT_CELL_CAP)?;
        println!("{:<10} n=0..6 r=0..{r}: {} mismatches", family.name(), rows.len());
    }

    println!("partitions(12,4,0) has {} members", cell_size(Family::Partitions, 12, 4, 0));
    match oracle(Family::Partitions, 12, 4, 0, 1000) {
        Err(e) => println!("with a cap of 1000: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
