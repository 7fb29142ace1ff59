//! End-to-end acceptance run: one PASS/FAIL line per criterion.

use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use drs_core::approx::{self, approximate_all, OperatorId};
use drs_core::claims::{AuditConfig, ClaimReport, Verdict};
use drs_core::latfca::{
    self, image_lattice, is_completely_distributive, tr23_condition, triagrp_condition,
};
use drs_core::magma::{
    bridge_audit, build_updg, count_updg, directoid_check, directoid_from_poset,
    is_tolerance_trivial, pawlak_audit, pawlak_groupoid, realization_check, Canonical,
    FiniteGroupoid,
};
use drs_core::relcore::NeighborhoodKind;
use drs_core::{classify, fixtures, gen, imgalg, quotient, shell, Error, FiniteRelationSpace};

type Outcome = Result<String, String>;

/// Criteria expected to stay red, each with its analysis in the project notes:
/// 7 checks a printed identity that fails on every equivalence with a block
/// of two or more elements.
const KNOWN_RED: [u32; 1] = [7];

fn fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn labels(space: &FiniteRelationSpace, s: drs_core::Subset) -> Vec<String> {
    space.labels_of(s)
}

fn set(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn all_hold(reports: &[ClaimReport]) -> Result<(), String> {
    match reports
        .iter()
        .find(|r| r.verdict != Verdict::HoldsExhaustively)
    {
        Some(r) => Err(format!(
            "{} is {:?} with witness {:?}",
            r.claim, r.verdict, r.witness
        )),
        None => Ok(()),
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_parthood(n: usize, rng: &mut ChaCha8Rng) -> FiniteRelationSpace {
    loop {
        let s = gen::random_reflexive_antisymmetric(n, rng);
        if classify(&s).up_directed {
            return s;
        }
    }
}

fn parthood_spaces(max_enumerated: usize) -> Vec<FiniteRelationSpace> {
    (1..=max_enumerated)
        .flat_map(|n| gen::relations_where(n, |s| classify(s).is_parthood()).unwrap())
        .collect()
}

fn criterion_1() -> Outcome {
    let ex1 = fixtures::ex1();
    let table: [(&str, [&[&str]; 3]); 5] = [
        ("a", [&["c", "e", "f"], &["c", "e", "f"], &["c", "e", "f"]]),
        ("b", [&["c", "e", "f"], &["c", "f"], &["c", "f"]]),
        ("c", [&["a", "b"], &["a", "b", "f"], &["a", "b"]]),
        ("e", [&["a"], &["a", "b", "f"], &["a"]]),
        ("f", [&["a", "b", "c", "e"], &["a", "b"], &["a", "b"]]),
    ];
    let mut cells = 0;
    for (x, row) in table {
        let i = ex1.index_of(x).map_err(|e| e.to_string())?;
        for (kind, expected) in NeighborhoodKind::ALL.into_iter().zip(row) {
            let got = labels(&ex1, ex1.neighborhood(i, kind));
            if got != set(expected) {
                return Err(format!(
                    "[{x}] {kind:?}: got {got:?}, expected {expected:?}"
                ));
            }
            cells += 1;
        }
    }
    Ok(format!("{cells} granule cells match"))
}

fn criterion_2() -> Outcome {
    let ex1 = fixtures::ex1();
    let a = ex1.subset(["e", "c"]).map_err(|e| e.to_string())?;
    let expected: [(OperatorId, &[&str]); 14] = [
        (OperatorId::L, &[]),
        (OperatorId::U, &["a", "b", "c", "e", "f"]),
        (OperatorId::TriDown, &[]),
        (OperatorId::TriUp, &["a", "b", "f"]),
        (OperatorId::BtriDown, &[]),
        (OperatorId::BtriUp, &["a", "b"]),
        (OperatorId::LI, &[]),
        (OperatorId::LS, &[]),
        (OperatorId::UI, &["c", "e", "f"]),
        (OperatorId::US, &["c", "e", "f"]),
        (OperatorId::LPlus, &[]),
        (OperatorId::UPlus, &["a", "b", "f"]),
        (OperatorId::LiPlus, &[]),
        (OperatorId::UiPlus, &["a", "b"]),
    ];
    let all = approximate_all(&ex1, a);
    for (op, want) in expected {
        let got = all
            .iter()
            .find(|(o, _)| *o == op)
            .map(|(_, s)| labels(&ex1, *s));
        if got != Some(set(want)) {
            return Err(format!("{op}: got {got:?}, expected {want:?}"));
        }
    }
    Ok("all 14 approximations of {e,c} match".into())
}

fn criterion_3() -> Outcome {
    let table = fixtures::table1();
    let show = |s: &FiniteRelationSpace| -> Result<Vec<(String, String)>, String> {
        let bad = realization_check(s, &table).map_err(|e| e.to_string())?;
        Ok(bad
            .into_iter()
            .map(|(a, b)| (s.label(a).to_string(), s.label(b).to_string()))
            .collect())
    };
    let pair = |a: &str, b: &str| (a.to_string(), b.to_string());
    let ex1 = show(&fixtures::ex1())?;
    let raw = show(&fixtures::ex1_raw())?;
    if ex1 != [pair("b", "a"), pair("b", "e")] {
        return Err(format!("EX1 violations {ex1:?}"));
    }
    if raw != [pair("b", "a"), pair("b", "e"), pair("e", "b")] {
        return Err(format!("EX1-raw violations {raw:?}"));
    }
    Ok("EX1 {(b,a),(b,e)}; EX1-raw {(b,a),(b,e),(e,b)}".into())
}

const THM6: [&str; 10] = [
    "l-id", "u-wid", "lu-inc", "l-mo", "u-mo", "bnd", "u-union", "l-union", "l-cap", "u-cap",
];
const THM7: [&str; 10] = [
    "l-id0",
    "u-wid0",
    "thm7.lu-inc",
    "thm7.l-mo",
    "thm7.u-mo",
    "bnd0",
    "thm7.u-union",
    "thm7.l-union",
    "thm7.l-cap",
    "thm7.u-cap",
];

fn criterion_4() -> Outcome {
    let mut r = rng(4);
    let reflexive: Vec<FiniteRelationSpace> = (0..24)
        .map(|_| {
            gen::random_relation_where(6, 0.4, &mut r, |s| {
                let p = classify(&s.reflexive_closure());
                p.up_directed
            })
            .reflexive_closure()
        })
        .collect();
    let plain: Vec<FiniteRelationSpace> = (0..24)
        .map(|_| {
            gen::random_relation_where(6, 0.5, &mut r, |s| {
                classify(s).up_directed && !classify(s).reflexive
            })
        })
        .collect();
    let config = AuditConfig::default();
    let refs: Vec<&FiniteRelationSpace> = reflexive.iter().collect();
    let reports = approx::audit(&refs, &THM6, &config).map_err(|e| e.to_string())?;
    all_hold(&reports)?;
    if let Some(r) = reports.iter().find(|r| r.skipped > 0) {
        return Err(format!("{} skipped {} spaces", r.claim, r.skipped));
    }
    let pairs = reports
        .iter()
        .find(|r| r.claim == "l-mo")
        .map(|r| r.sweep_size)
        .unwrap_or(0);
    let refs: Vec<&FiniteRelationSpace> = plain.iter().collect();
    let reports = approx::audit(&refs, &THM7, &config).map_err(|e| e.to_string())?;
    all_hold(&reports)?;
    Ok(format!(
        "10 reflexive laws on 24 spaces of 6 elements ({pairs} pairs for l-mo); 10 laws on 24 non-reflexive up-directed spaces"
    ))
}

fn criterion_5() -> Outcome {
    let toy2 = fixtures::toy2();
    let ids = [
        "l-union0",
        "prop5.l-eq-tri-down-tri-up",
        "prop5.l-eq-tri-down-tri-up.rtl",
        "prop5.li-eq-btri-down-btri-up",
        "prop5.li-eq-btri-down-btri-up.rtl",
    ];
    let reports =
        approx::audit(&[&toy2], &ids, &AuditConfig::default()).map_err(|e| e.to_string())?;
    let mut found = Vec::new();
    for r in &reports {
        if r.verdict != Verdict::Fails {
            return Err(format!("{} not refuted: {:?}", r.claim, r.verdict));
        }
        if !approx::recheck(&[&toy2], r).map_err(|e| e.to_string())? {
            return Err(format!("{} witness does not re-verify", r.claim));
        }
        found.push(r.claim.as_str());
    }
    let l_eq = &reports[1]
        .witness
        .as_ref()
        .expect("failing report has a witness")
        .bindings;
    Ok(format!(
        "refuted and re-verified on TOY2: {} (l=▽△ witness {:?})",
        found.join(", "),
        l_eq[0].value
    ))
}

fn criterion_6() -> Outcome {
    let six = [
        "thm4.reflexive",
        "thm4.symmetric",
        "thm4.transitive",
        "thm4.commutative-antisymmetric",
        "thm4.dir2-antisymmetric",
        "thm4.associative-transitive",
    ];
    let (mut spaces, mut groupoids) = (0usize, 0u128);
    for n in 1..=4 {
        for s in gen::relations_where(n, |s| classify(s).up_directed).unwrap() {
            let count = count_updg(&s).map_err(|e| e.to_string())?;
            if count > 200 {
                continue;
            }
            spaces += 1;
            groupoids += count;
            let reports = bridge_audit(&s).map_err(|e| e.to_string())?;
            let selected: Vec<ClaimReport> = reports
                .into_iter()
                .filter(|r| six.contains(&r.claim.as_str()))
                .collect();
            if selected.len() != six.len() {
                return Err("bridge audit lacks one of the six correspondences".into());
            }
            all_hold(&selected).map_err(|e| format!("{e} on {s:?}"))?;
        }
    }
    Ok(format!(
        "{spaces} up-directed spaces, {groupoids} realizing groupoids, zero violations"
    ))
}

fn criterion_7() -> Outcome {
    let mut spaces = 0;
    let mut failing: Vec<String> = Vec::new();
    let mut example = None;
    for n in 1..=4 {
        for s in gen::relations_where(n, |s| classify(s).is_equivalence()).unwrap() {
            spaces += 1;
            for r in pawlak_audit(&s) {
                if r.verdict == Verdict::Fails && r.asserted {
                    if !failing.contains(&r.claim) {
                        failing.push(r.claim.clone());
                    }
                    example.get_or_insert((s.clone(), r.witness.clone()));
                }
            }
        }
    }
    if failing.is_empty() {
        Ok(format!(
            "{spaces} equivalences, E1-E5 and every consequence hold"
        ))
    } else {
        let (space, witness) = example.expect("recorded with the first failure");
        Err(format!(
            "{spaces} equivalences; violated: {} (first on {space:?}, witness {:?})",
            failing.join(", "),
            witness.map(|w| w.bindings)
        ))
    }
}

fn criterion_8() -> Outcome {
    let mut r = rng(8);
    let mut up: Vec<FiniteRelationSpace> = (1..=3)
        .flat_map(|n| gen::relations_where(n, |s| classify(s).up_directed).unwrap())
        .collect();
    for n in [4, 5] {
        up.extend(
            (0..15)
                .map(|_| gen::random_relation_where(n, 0.5, &mut r, |s| classify(s).up_directed)),
        );
    }
    let mut parthood = parthood_spaces(4);
    parthood.extend((0..15).map(|_| random_parthood(5, &mut r)));
    let config = AuditConfig::default();
    let refs: Vec<&FiniteRelationSpace> = up.iter().collect();
    let uua = imgalg::audit(
        &refs,
        &["idemp1", "comm1", "comm2", "assoc1", "absfail", "mo1"],
        &config,
    )
    .map_err(|e| e.to_string())?;
    all_hold(&uua)?;
    let refs: Vec<&FiniteRelationSpace> = parthood.iter().collect();
    let ua = imgalg::audit(
        &refs,
        &["idemp3", "quasi-idemp4", "comm12", "half-absorption"],
        &config,
    )
    .map_err(|e| e.to_string())?;
    all_hold(&ua)?;
    let recorded_ids = [
        "quasi-assoc0",
        "quasi-assoc1",
        "app1",
        "app2",
        "app3",
        "app4",
        "app5",
        "app6",
    ];
    let mut recorded =
        imgalg::audit(&refs[..], &recorded_ids[..2], &config).map_err(|e| e.to_string())?;
    let refs_up: Vec<&FiniteRelationSpace> = up.iter().collect();
    recorded
        .extend(imgalg::audit(&refs_up, &recorded_ids[2..], &config).map_err(|e| e.to_string())?);
    for r in &recorded {
        if r.verdict == Verdict::Fails && r.witness.is_none() {
            return Err(format!("{} fails without a witness", r.claim));
        }
    }
    let verdicts: Vec<String> = recorded
        .iter()
        .map(|r| format!("{}={:?}", r.claim, r.verdict))
        .collect();
    Ok(format!(
        "UUA laws on {} up-directed spaces, UA laws on {} parthood spaces; recorded {}",
        up.len(),
        parthood.len(),
        verdicts.join(" ")
    ))
}

fn criterion_9() -> Outcome {
    let mut r = rng(9);
    let mut spaces = parthood_spaces(4);
    spaces.extend((0..10).map(|_| random_parthood(5, &mut r)));
    let refs: Vec<&FiniteRelationSpace> = spaces.iter().collect();
    let config = AuditConfig::default();
    let laws = [
        "Uu",
        "Ll",
        "ujoins",
        "uc",
        "rep1",
        "rep1.converse",
        "rep2",
        "rep3",
        "rep4",
    ];
    let reports = quotient::audit(&refs, &laws, &config).map_err(|e| e.to_string())?;
    all_hold(&reports)?;
    let searches = quotient::audit(&refs, &["rep5", "rep6"], &config).map_err(|e| e.to_string())?;
    let mut found = Vec::new();
    for s in &searches {
        if s.verdict == Verdict::NotApplicable {
            return Err(format!("{} search never ran", s.claim));
        }
        found.push(format!("{}={:?}", s.claim, s.verdict));
    }
    Ok(format!(
        "9 laws on {} parthood spaces; searches {}",
        spaces.len(),
        found.join(" ")
    ))
}

fn criterion_10() -> Outcome {
    let mut r = rng(10);
    let mut spaces: Vec<FiniteRelationSpace> = gen::reflexive_relations(3).unwrap().collect();
    if spaces.len() != 64 {
        return Err(format!(
            "{} reflexive relations on 3 elements",
            spaces.len()
        ));
    }
    let antisymmetric_small = spaces.iter().filter(|s| classify(s).antisymmetric).count();
    for n in [4, 5] {
        spaces.extend((0..30).map(|_| gen::random_reflexive_antisymmetric(n, &mut r)));
    }
    let refs: Vec<&FiniteRelationSpace> = spaces.iter().collect();
    let ids = [
        "cor2.6.i",
        "cor2.6.ii",
        "tr23",
        "tr24",
        "cor2.5",
        "th40",
        "concept-cd",
        "triagrp",
    ];
    let reports = latfca::audit(&refs, &ids, &AuditConfig::default()).map_err(|e| e.to_string())?;
    all_hold(&reports)?;
    // triagrp against tr23 directly, under the canonical groupoid
    let mut realizable = 0;
    for s in &spaces {
        if let Ok(g) = build_updg(s, &Canonical) {
            realizable += 1;
            let lhs = triagrp_condition(s, &g).map_err(|e| e.to_string())?.holds;
            let rhs = tr23_condition(s).holds;
            let cd = is_completely_distributive(
                &image_lattice(s, OperatorId::TriUp).map_err(|e| e.to_string())?,
            )
            .distributive;
            if lhs != rhs || rhs != cd {
                return Err(format!("triagrp {lhs}, tr23 {rhs}, cd {cd} on {s:?}"));
            }
        }
    }
    let cor = reports
        .iter()
        .find(|r| r.claim == "cor2.6.i")
        .expect("requested");
    Ok(format!(
        "{} relations (64 reflexive on 3 elements, {antisymmetric_small} of them antisymmetric, plus 60 random); cor2.6 applied to {}; triagrp compared on {realizable}; zero disagreements",
        spaces.len(),
        spaces.len() - cor.skipped
    ))
}

fn criterion_11() -> Outcome {
    let (mut directed, mut rejected, mut total) = (0, 0, 0);
    for n in 1..=4 {
        for p in gen::posets(n).unwrap() {
            total += 1;
            match directoid_from_poset(&p, &Canonical) {
                Ok(g) => {
                    let check = directoid_check(&g);
                    if !check.is_directoid() {
                        return Err(format!("directoid axioms fail on {p:?}"));
                    }
                    if check.order.as_ref() != Some(&p) {
                        return Err(format!("induced order differs from {p:?}"));
                    }
                    directed += 1;
                }
                Err(Error::PreconditionViolated(what))
                    if what == "up_directed" && !classify(&p).up_directed =>
                {
                    rejected += 1
                }
                Err(e) => return Err(format!("{e} on {p:?}")),
            }
        }
    }
    if total != 1 + 3 + 19 + 219 {
        return Err(format!("{total} posets enumerated"));
    }
    Ok(format!(
        "{total} posets: {directed} up-directed pass dir1-dir4 and recover their order, {rejected} without a top rejected"
    ))
}

/// Independent oracle: every reflexive symmetric relation, tested for
/// compatibility and transitivity by brute force.
fn oracle_trivial(g: &FiniteGroupoid) -> bool {
    let n = g.len();
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    for mask in 0u64..1 << off.len() {
        let mut t = vec![false; n * n];
        for a in 0..n {
            t[a * n + a] = true;
        }
        for (i, &(a, b)) in off.iter().enumerate() {
            if mask >> i & 1 == 1 {
                t[a * n + b] = true;
                t[b * n + a] = true;
            }
        }
        let rel = |a: usize, b: usize| t[a * n + b];
        let compatible = (0..n).all(|a| {
            (0..n).all(|b| {
                !rel(a, b)
                    || (0..n).all(|c| (0..n).all(|d| !rel(c, d) || rel(g.op(a, c), g.op(b, d))))
            })
        });
        let transitive =
            (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(rel(a, b) && rel(b, c)) || rel(a, c))));
        if compatible && !transitive {
            return false;
        }
    }
    true
}

fn criterion_12() -> Outcome {
    let mut checked = 0;
    let mut nontrivial = 0;
    let mut compare = |g: &FiniteGroupoid| -> Result<(), String> {
        let v = is_tolerance_trivial(g).map_err(|e| e.to_string())?;
        if v.trivial != oracle_trivial(g) {
            return Err(format!("disagreement on table {:?}", g.rows()));
        }
        if let Some((t, (a, b, c))) = &v.witness {
            if !(t.related(*a, *b) && t.related(*b, *c) && !t.related(*a, *c) && t.is_compatible(g))
            {
                return Err(format!("witness does not verify on table {:?}", g.rows()));
            }
        }
        checked += 1;
        nontrivial += usize::from(!v.trivial);
        Ok(())
    };
    for n in 1..=3 {
        for g in gen::all_groupoids(n).unwrap() {
            compare(&g)?;
        }
    }
    let mut extra = vec![fixtures::table1()];
    for (_, s) in fixtures::named_spaces() {
        extra.push(pawlak_groupoid(&s));
        if let Ok(g) = build_updg(&s, &Canonical) {
            extra.push(g);
        }
        if let Ok(g) = directoid_from_poset(&s, &Canonical) {
            extra.push(g);
        }
    }
    for g in &extra {
        compare(g)?;
    }
    Ok(format!("{checked} groupoids agree with the brute-force oracle ({nontrivial} not tolerance trivial)"))
}

fn drs(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_drs"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn criterion_13() -> Outcome {
    let dir = fixture_dir();
    let mut round_trips = 0;
    for (name, space) in fixtures::named_spaces() {
        let path = dir.join(format!("{name}.json"));
        let p = path.to_str().expect("utf-8 path");
        let text = std::fs::read_to_string(&path).map_err(|e| format!("{name}: {e}"))?;
        let (code, out, err) = drs(&["emit", "--space", p]);
        if code != 0 || out != text {
            return Err(format!(
                "{name}: emit is not the identity (exit {code}, {err})"
            ));
        }
        if shell::parse_space(&text).map_err(|e| e.to_string())? != space {
            return Err(format!(
                "{name}: bundled file differs from the built-in fixture"
            ));
        }
        let (_, edges, _) = drs(&["emit", "--space", p, "--edges"]);
        if shell::parse_space(&edges).map_err(|e| e.to_string())? != space {
            return Err(format!("{name}: edge-list round trip differs"));
        }
        round_trips += 1;
    }
    let table = std::fs::read_to_string(dir.join("table1.json")).map_err(|e| e.to_string())?;
    let g = shell::parse_groupoid(&table).map_err(|e| e.to_string())?;
    if g != fixtures::table1() || shell::parse_groupoid(&shell::emit_groupoid(&g)).ok() != Some(g) {
        return Err("table1 round trip differs".into());
    }
    round_trips += 1;

    let ex1 = dir.join("ex1.json");
    let ch3 = dir.join("ch3.json");
    let toy2 = dir.join("toy2.json");
    let (ex1, ch3, toy2) = (
        ex1.to_str().unwrap(),
        ch3.to_str().unwrap(),
        toy2.to_str().unwrap(),
    );
    let table1 = dir.join("table1.json");
    let table1 = table1.to_str().unwrap();
    let missing = dir.join("missing.json");
    let big = std::env::temp_dir().join(format!("drs-acceptance-{}.txt", std::process::id()));
    let big_text: String = (1..=13).map(|i| format!("{i}\n")).collect();
    std::fs::write(&big, big_text).map_err(|e| e.to_string())?;
    let big = big.to_str().unwrap().to_string();
    let cases: Vec<(Vec<&str>, i32, &str)> = vec![
        (vec!["classify", "--space", ex1], 0, "up_directed"),
        (
            vec!["approx", "--space", ex1, "--set", "e,c", "--op", "all"],
            0,
            "tri_up   : {a,b,f}",
        ),
        (
            vec!["lattice", "--space", ch3, "--op", "tri_up", "--cd"],
            0,
            "completely_distributive: true",
        ),
        (
            vec![
                "--expect-hold",
                "lattice",
                "--space",
                ch3,
                "--op",
                "tri_up",
                "--cd",
            ],
            0,
            "",
        ),
        (
            vec!["groupoid", "check", "--space", ex1, "--table", table1],
            0,
            "(b,a) (b,e)",
        ),
        (
            vec![
                "--expect-hold",
                "groupoid",
                "check",
                "--space",
                ex1,
                "--table",
                table1,
            ],
            2,
            "",
        ),
        (
            vec![
                "--expect-hold",
                "audit",
                "--space",
                toy2,
                "--claims",
                "tr23,l-id",
            ],
            0,
            "",
        ),
        (
            vec![
                "--expect-hold",
                "audit",
                "--space",
                toy2,
                "--claims",
                "l-union0",
            ],
            2,
            "",
        ),
        (
            vec!["export-dot", "--what", "space", "--space", ex1],
            0,
            "\"e\" -> \"f\"",
        ),
        (vec!["--help"], 0, "Usage"),
        (vec!["frobnicate"], 1, ""),
        (vec!["approx", "--space", ex1], 1, ""),
        (vec!["approx", "--space", ex1, "--set", "z"], 1, ""),
        (
            vec!["audit", "--space", ex1, "--claims", "no-such-claim"],
            1,
            "",
        ),
        (
            vec!["classify", "--space", missing.to_str().unwrap()],
            1,
            "",
        ),
        (vec!["lattice", "--space", &big, "--op", "tri_up"], 1, ""),
    ];
    for (args, want, needle) in &cases {
        let (code, out, err) = drs(args);
        if code != *want || !out.contains(needle) {
            return Err(format!(
                "`drs {}` exited {code} (want {want}); stdout {out:?}; stderr {err:?}",
                args.join(" ")
            ));
        }
    }
    let (_, _, err) = drs(&["lattice", "--space", &big, "--op", "tri_up"]);
    let expected = drs_core::Error::BoundExceeded { size: 13, bound: 8 }.to_string();
    if !err.contains(&expected) {
        return Err(format!("bound error not surfaced verbatim: {err:?}"));
    }
    let _ = std::fs::remove_file(&big);
    let (_, text, _) = drs(&["audit", "--space", toy2, "--claims", "approx,latfca"]);
    let (_, json, _) = drs(&[
        "--json",
        "audit",
        "--space",
        toy2,
        "--claims",
        "approx,latfca",
    ]);
    let report: serde_json::Value = serde_json::from_str(&json).map_err(|e| e.to_string())?;
    for row in report["claims"].as_array().ok_or("no claims array")? {
        let line = format!("claim={} ", row["claim"].as_str().unwrap_or_default());
        let verdict = format!("verdict={}", row["verdict"].as_str().unwrap_or_default());
        if !text
            .lines()
            .any(|l| l.contains(&line) && l.contains(&verdict))
        {
            return Err(format!("text and JSON verdicts differ for {line}"));
        }
    }
    Ok(format!(
        "{round_trips} document round trips; {} exit-code cases; text and JSON verdicts agree",
        cases.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Outcome); 13] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
        (11, criterion_11),
        (12, criterion_12),
        (13, criterion_13),
    ];
    let mut red = Vec::new();
    for (id, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {id:>2} PASS ({secs:.2}s): {detail}"),
            Err(detail) => {
                println!("criterion {id:>2} FAIL ({secs:.2}s): {detail}");
                red.push(id);
            }
        }
    }
    if red == KNOWN_RED {
        println!("acceptance: red set {red:?} matches the known red set");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: red set {red:?} differs from the known red set {KNOWN_RED:?}");
        ExitCode::FAILURE
    }
}
