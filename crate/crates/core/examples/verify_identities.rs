//! Runs every registered identity on its default grid.
use std::time::Instant;

use qcomb::identities::{check, registry, Ctx, Grid};

fn main() -> qcomb::Result<()> {
    let ctx = Ctx::default();
    for id in registry() {
        let start = Instant::now();
        let report = check(id, &Grid::default(), &ctx)?;
        println!("{}  ({:.2?})", report.line(), start.elapsed());
    }
    Ok(())
}
