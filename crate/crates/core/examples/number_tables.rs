//! Triangles of q-Stirling and q-Lah numbers, printed in all three formats.
use qcomb::numbers::{bell_q, lah_q, stirling1_q, stirling2_q, FamilyTable, TableFamily};

fn main() {
    for n in 0..=5 {
        let row: Vec<String> = (0..=n).map(|k| stirling2_q(n, k, 0).coeff_sum().to_string()).collect();
        println!("S({n},*) = {}", row.join(" "));
    }
    println!("S_q^(2)(4,3) = {}", stirling2_q(4, 3, 2));
    println!("c_q(4,2)     = {}", stirling1_q(4, 2, 0));
    println!("L_q(3,2)     = {}", lah_q(3, 2, 0));
    println!("B_q(4)       = {}", bell_q(4, 0));

    let t = FamilyTable::build(TableFamily::LahQ, 0..=3, None, 0..=1);
    print!("{}", t.to_text());
    print!("{}", t.to_csv());
    let small = FamilyTable::build(TableFamily::BellQ, 2..=2, None, 0..=0);
    println!("{}", small.to_json());
}
