//! Lists the structures behind each family together with their statistics.
use qcomb::statistics::{ext_stats, stat_inv_c, stat_inv_rho, stat_w};
use qcomb::structures::{enum_cycle_perms, enum_extended_lah, enum_lah, enum_partitions};

fn main() {
    // r = 2: elements 1 and 2 sit in separate blocks, plus 2 more blocks
    println!("set partitions of [5] into 3 blocks with 1 and 2 apart:");
    for p in enum_partitions(3, 1, 2) {
        println!("  {p:<12} w = {}", stat_w(&p));
    }

    println!("permutations of [4] with 2 cycles:");
    for c in enum_cycle_perms(4, 2, 0) {
        println!("  {c:<12} inv = {}", stat_inv_c(&c));
    }

    println!("Lah distributions of [3] into 2 lists:");
    for d in enum_lah(3, 2, 0) {
        println!("  {d:<12} inv = {}", stat_inv_rho(&d));
    }

    println!("extended Lah distributions of [3] with 1 true block:");
    for l in enum_extended_lah(3, 1) {
        let s = ext_stats(&l);
        println!(
            "  {:<14} nrec = {} rec* = {} circ = {}",
            l.to_string(),
            s.nrec,
            s.rec_star,
            s.circ
        );
    }
}
