//! The acceptance gate: every criterion of the full suite must pass at the
//! default truncation. One line is printed per criterion so a failing run
//! names the offender and its measured value.

use fnls::verification::{run_acceptance, Status, VerifyOptions};

#[test]
fn full_acceptance_suite() {
    let outcomes = run_acceptance(&VerifyOptions::default());
    assert_eq!(outcomes.len(), 12);
    for o in &outcomes {
        println!("[{:2}] {} {}  {} ({:.2}s)", o.id, o.status, o.name, o.detail, o.seconds);
    }
    for o in &outcomes {
        assert_eq!(o.status, Status::Pass, "criterion {} ({}): {}", o.id, o.name, o.detail);
    }
}
