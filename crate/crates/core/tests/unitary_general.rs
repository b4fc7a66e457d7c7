//! Unitary groups with several integral classes: the formula is checked
//! against the character oracle, and the two orbit attachments are compared.

use irrcount::counting::{count, count_table, verify, CountOptions, GroupSpec, Nu, OrbitSpec, USwap};
use num_rational::Rational64;

const MIXED: &[(usize, usize, &str)] = &[
    (2, 1, "0,1/2,3/2"),
    (2, 1, "0,1/2,1/2"),
    (1, 2, "1,1/2,-1/2"),
    (2, 2, "1/2,x,-x,3/2"),
    (2, 2, "0,1,x,-x+2"),
    (2, 2, "x,x+1,-x,-x"),
    (2, 2, "0,1,1/2,3/2"),
    (3, 2, "0,1,1,1/2,3/2"),
    (3, 2, "0,0,1/2,x,-x"),
    (3, 3, "1/2,3/2,0,0,x,-x"),
    (3, 3, "x,x,-x,-x+1,1/2,1/2"),
    (3, 3, "1/3,4/3,-1/3,2/3,1/2,5/2"),
    (2, 3, "0,1/2,-1/2,y,-y"),
    (4, 2, "0,1,1,2,x,-x"),
];

#[test]
fn unswapped_attachment_matches_oracle() {
    let opts = CountOptions::default();
    for &(p, q, nu) in MIXED {
        let report = verify(GroupSpec::U(p, q), &Nu::parse(nu).unwrap(), &opts).unwrap();
        assert!(report.agree, "U({p},{q}) {nu}: {:?}", report.first_mismatch());
    }
}

/// Attaching `ι'` to `U(p',q')` compares diagrams of sizes `e'` and `e`, so
/// it can only agree when the two classes have equal size.
#[test]
fn verbatim_attachment_fails_when_class_sizes_differ() {
    let opts = CountOptions { u_swap: USwap::Verbatim, ..Default::default() };
    let report = verify(GroupSpec::U(2, 1), &Nu::parse("0,1/2,3/2").unwrap(), &opts).unwrap();
    assert!(!report.agree);
    let row = report.first_mismatch().unwrap();
    assert_eq!((row.formula, row.oracle), (0, 1));
    // equal sizes: both readings coincide
    let report = verify(GroupSpec::U(2, 2), &Nu::parse("0,1,1/2,3/2").unwrap(), &opts).unwrap();
    assert!(report.agree);
}

#[test]
fn unswapped_mixed_examples() {
    let opts = CountOptions::default();
    let c = |p, q, nu: &str, o: &str| {
        count(GroupSpec::U(p, q), &Nu::parse(nu).unwrap(), &o.parse::<OrbitSpec>().unwrap(), &opts).unwrap().count
    };
    // lam = (0), lamp = (1/2, 3/2): U(1,0) on [1] times U(1,1) degenerate on [2]
    assert_eq!(c(2, 1, "0,1/2,3/2", "[3]"), 1);
    assert_eq!(c(2, 1, "0,1/2,3/2", "[2,1]"), 0);
    // two generic pairs of size one and a size-two integral class
    assert_eq!(c(3, 3, "1/2,3/2,0,0,x,-x", "[6]"), 2);
    assert_eq!(c(3, 3, "1/2,3/2,0,0,x,-x", "[5,1]"), 1);
}

#[test]
fn mu_offset_moves_the_genuine_count() {
    let nu = Nu::parse("1/2,1/2,3/2").unwrap();
    let default = count_table(GroupSpec::UGenuine(2, 1), &nu, &CountOptions::default()).unwrap();
    let counts: Vec<u64> = default.iter().map(|(_, r)| r.count).collect();
    assert_eq!(counts, vec![1, 2, 0]);
    let opts = CountOptions { mu_offset: Rational64::new(-1, 2), ..Default::default() };
    let other: Vec<u64> = count_table(GroupSpec::UGenuine(2, 1), &nu, &opts).unwrap().iter().map(|(_, r)| r.count).collect();
    assert_eq!(other, counts, "±1/2 differ by an integer and land in the same class");
    let opts = CountOptions { mu_offset: Rational64::new(1, 4), ..Default::default() };
    let zero: u64 = count_table(GroupSpec::UGenuine(2, 1), &nu, &opts).unwrap().iter().map(|(_, r)| r.count).sum();
    assert_eq!(zero, 0);
}
