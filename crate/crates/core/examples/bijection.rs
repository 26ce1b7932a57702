//! Splits extended Lah distributions of [m+n] into a part on [m] and a
//! part on [i], joins them back, and checks the weights multiply.
use qcomb::identities::{join_lah, split_lah};
use qcomb::statistics::weight;
use qcomb::structures::{enum_extended_lah, ExtLahDist};

fn main() -> qcomb::Result<()> {
    let lambda: ExtLahDist = "(1),3,2,(4),5".parse()?;
    let s = split_lah(&lambda, 2, 3)?;
    println!("{lambda} -> i={} j={} sigma={} tau={}", s.i, s.j, s.sigma, s.tau);
    assert_eq!(join_lah(&s, 2, 3)?, lambda);

    let (m, n) = (2, 3);
    let mut total = 0;
    for k in 0..=m + n {
        for lambda in enum_extended_lah(m + n, k) {
            let s = split_lah(&lambda, m, n)?;
            assert_eq!(join_lah(&s, m, n)?, lambda);
            assert_eq!(weight(&lambda), &weight(&s.sigma) * &weight(&s.tau));
            total += 1;
        }
    }
    println!("round trip and weight product hold on all {total} distributions of [{}]", m + n);
    Ok(())
}
