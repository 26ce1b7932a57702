//! Generalized Stirling numbers: the four-variable polynomials, their
//! classical specializations and the weighted count of extended Lah
//! distributions that they equal.
use qcomb::identities::oracle_ext_lah;
use qcomb::numbers::{gen_bell, hsu_shiue};
use qcomb::structures::DEFAULT_CELL_CAP;

fn main() -> qcomb::Result<()> {
    for n in 0..=3 {
        for k in 0..=n {
            println!("S({n},{k}; α,β,r) = {}", hsu_shiue(n, k));
        }
    }

    // (alpha, beta, r, x)
    let cases = [("second kind", [0, 1, 0, 0]), ("Lah", [1, 1, 0, 0]), ("first kind", [1, 0, 0, 0])];
    for (name, at) in cases {
        let row: Vec<String> = (0..=5).map(|k| hsu_shiue(5, k).eval_int(at).to_string()).collect();
        println!("{name:<12} n=5: {}", row.join(" "));
    }

    let by_count = oracle_ext_lah(4, 2, DEFAULT_CELL_CAP)?;
    assert_eq!(by_count, hsu_shiue(4, 2));
    println!("weighted count over extended Lah distributions of [4], 2 true blocks, agrees");

    println!("B_3(x) = {}", gen_bell(3));
    Ok(())
}
