//! Small named spaces and tables used by tests, examples and the CLI.

use crate::magma::FiniteGroupoid;
use crate::relcore::FiniteRelationSpace;

pub const EX1_LABELS: [&str; 5] = ["a", "b", "c", "e", "f"];

/// The twelve pairs listed in the worked five-element example.
pub const EX1_RAW_PAIRS: [(&str, &str); 12] = [
    ("a", "c"),
    ("a", "e"),
    ("a", "f"),
    ("b", "c"),
    ("b", "f"),
    ("c", "a"),
    ("c", "b"),
    ("c", "f"),
    ("e", "a"),
    ("e", "f"),
    ("f", "a"),
    ("f", "b"),
];

/// The worked example with the pair `(e, b)` that its drawing and granule
/// table require.
pub fn ex1() -> FiniteRelationSpace {
    let pairs = EX1_RAW_PAIRS.iter().copied().chain([("e", "b")]);
    FiniteRelationSpace::new(EX1_LABELS, pairs).expect("valid fixture")
}

/// The worked example restricted to the twelve listed pairs.
pub fn ex1_raw() -> FiniteRelationSpace {
    FiniteRelationSpace::new(EX1_LABELS, EX1_RAW_PAIRS).expect("valid fixture")
}

/// Identity relation on `1..=n`.
pub fn id(n: usize) -> FiniteRelationSpace {
    FiniteRelationSpace::numbered(n, |a, b| a == b).expect("valid fixture")
}

/// `{1,2}` with `11, 22, 12`.
pub fn toy2() -> FiniteRelationSpace {
    FiniteRelationSpace::numbered(2, |a, b| a <= b).expect("valid fixture")
}

/// The chain `1 ≤ 2 ≤ 3`.
pub fn ch3() -> FiniteRelationSpace {
    FiniteRelationSpace::numbered(3, |a, b| a <= b).expect("valid fixture")
}

/// Two atoms `1, 2` under a common top `3`.
pub fn fork() -> FiniteRelationSpace {
    FiniteRelationSpace::numbered(3, |a, b| a == b || b == 2).expect("valid fixture")
}

/// The printed five-element operation table over `a, b, c, e, f`.
pub fn table1() -> FiniteGroupoid {
    // rows: left argument a, b, c, e, f; entries index EX1_LABELS
    const A: usize = 0;
    const B: usize = 1;
    const C: usize = 2;
    const E: usize = 3;
    const F: usize = 4;
    let rows = [
        [E, C, C, E, F],
        [E, C, C, E, F],
        [A, B, F, F, F],
        [A, B, F, F, F],
        [A, B, A, A, A],
    ];
    FiniteGroupoid::new(
        EX1_LABELS.iter().map(|s| s.to_string()).collect(),
        rows.iter().flatten().copied().collect(),
    )
    .expect("valid fixture")
}

/// Every named space fixture with its file stem.
pub fn named_spaces() -> Vec<(&'static str, FiniteRelationSpace)> {
    vec![
        ("ex1", ex1()),
        ("ex1-raw", ex1_raw()),
        ("id2", id(2)),
        ("id3", id(3)),
        ("toy2", toy2()),
        ("ch3", ch3()),
        ("fork", fork()),
    ]
}
