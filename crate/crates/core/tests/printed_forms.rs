//! Statements that fail as printed, with the smallest counterexamples, next
//! to the forms that hold.

use num_traits::One;
use qcomb::identities::{check_named, Ctx, Grid, Status};
use qcomb::numbers::{hsu_shiue, stirling2_q};
use qcomb::polyring::{BigInt, QPoly};

fn run(name: &str) -> qcomb::identities::IdentityReport {
    check_named(name, &Grid::default(), &Ctx::default()).unwrap()
}

#[test]
fn r_shift_needs_the_weight_of_the_restricted_elements() {
    let r = run("I-PE1");
    assert_eq!(r.status, Status::Fail);
    let c = r.counterexample.unwrap();
    assert_eq!((c.params["n"], c.params["k"], c.params["r"]), (0, 0, 2));
    // {1}/{2} has w = 1
    assert_eq!(c.lhs.to_string(), "q");
    assert_eq!(c.rhs.to_string(), "1");
    assert_eq!(run("I-PE1-CORR").status, Status::Pass);
    assert_eq!(stirling2_q(0, 0, 3), QPoly::q_power(3));
}

#[test]
fn odd_r_recurrence_at_minus_one_needs_the_binomial() {
    let r = run("I-BIN-7");
    assert_eq!(r.status, Status::Fail);
    let c = r.counterexample.unwrap();
    assert_eq!((c.params["m"], c.params["n"], c.params["k"]), (1, 2, 1));
    assert_eq!(run("I-BIN-7-CORR").status, Status::Pass);
}

#[test]
fn minus_one_evaluations_repeat_up_to_sign() {
    // at q = -1, S^(r) is (-1)^C(r,2) times the value for r mod 2
    let m1 = BigInt::from(-1);
    let mut saw_sign_flip = false;
    for n in 0..=12 {
        for k in 0..=n {
            for r in 0..=4usize {
                let base = stirling2_q(n, k, r % 2).eval(&m1);
                let got = stirling2_q(n, k, r).eval(&m1);
                let sign = if (r * r.saturating_sub(1) / 2) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                assert_eq!(got, &sign * &base, "n={n} k={k} r={r}");
                saw_sign_flip |= got != base;
            }
        }
    }
    assert!(saw_sign_flip);
}

#[test]
fn lah_specialization_is_alpha_one() {
    // S(n,k;1,1,0) are the Lah numbers; α = -1 turns the recurrence into δ
    let lah = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 2, 1, 0], [0, 6, 6, 1]];
    for (n, row) in lah.iter().enumerate() {
        for (k, &l) in row.iter().enumerate() {
            assert_eq!(hsu_shiue(n, k).eval_int([1, 1, 0, 0]), BigInt::from(l));
            let delta = i64::from(n == k);
            assert_eq!(hsu_shiue(n, k).eval_int([-1, 1, 0, 0]), BigInt::from(delta));
        }
    }
}
