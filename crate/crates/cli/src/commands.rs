use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde_json::json;

use drs_core::approx::{approximate, approximate_all, OperatorId};
use drs_core::claims::{AuditConfig, ClaimReport, SweepMode, WitnessValue};
use drs_core::imgalg::{self, build_lu_algebra, build_upper_algebra, extend_partial, AlgebraKind};
use drs_core::latfca::{
    cji, concept_lattice, concepts, context_of, dual_iso_check, ei_condition, image_lattice,
    is_completely_distributive, is_spatial, th40_condition, tr23_condition, triagrp_condition,
    EiKind,
};
use drs_core::magma::{
    bridge_audit, build_updg, count_updg, directoid_check, directoid_from_poset,
    is_tolerance_trivial, realization_check, Canonical, FiniteGroupoid,
};
use drs_core::powgrp::{self, lift_product, split_op, LiftedProductContext, SplitOp};
use drs_core::quotient::{quotient, RoughKind, Rpa, RpaOp};
use drs_core::relcore::{NeighborhoodKind, Property};
use drs_core::shell::{self, InfoTableDocument};
use drs_core::{classify, registry, FiniteRelationSpace, Subset};

use crate::report::{pairs_text, Report};
use crate::{AlgebraArg, Command, DotArg, GroupoidAction, ModeArg};

pub enum Output {
    Report(Report),
    Raw(String),
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

pub fn load_space(path: &Path) -> Result<FiniteRelationSpace> {
    shell::parse_space(&read(path)?).with_context(|| format!("in {}", path.display()))
}

fn load_groupoid(path: &Path) -> Result<FiniteGroupoid> {
    shell::parse_groupoid(&read(path)?).with_context(|| format!("in {}", path.display()))
}

/// Comma-separated labels; the empty string is the empty set.
fn parse_set(space: &FiniteRelationSpace, text: &str) -> Result<Subset> {
    let labels = text.split(',').map(str::trim).filter(|s| !s.is_empty());
    Ok(space.subset(labels)?)
}

fn labeled_pairs(space: &FiniteRelationSpace, pairs: &[(usize, usize)]) -> Vec<(String, String)> {
    pairs
        .iter()
        .map(|&(a, b)| (space.label(a).to_string(), space.label(b).to_string()))
        .collect()
}

fn witness_text(value: &WitnessValue) -> String {
    match value {
        WitnessValue::Element(x) => x.clone(),
        WitnessValue::Set(s) => format!("{{{}}}", s.join(",")),
        WitnessValue::Family(f) => f
            .iter()
            .map(|s| format!("{{{}}}", s.join(",")))
            .collect::<Vec<_>>()
            .join(" "),
        WitnessValue::Flag(b) => b.to_string(),
    }
}

/// One row per report; asserted claims that fail are the report's checks.
fn claim_rows(report: &mut Report, reports: &[(&str, ClaimReport)], space_names: &[String]) {
    let rows: Vec<serde_json::Value> = reports
        .iter()
        .map(|(module, r)| {
            let witness = r.witness.as_ref().map(|w| {
                let bindings: Vec<String> = w
                    .bindings
                    .iter()
                    .map(|b| format!("{}={}", b.name, witness_text(&b.value)))
                    .collect();
                format!("{}: {}", space_names[w.space], bindings.join(" "))
            });
            json!({
                "module": module,
                "claim": r.claim,
                "hypothesis": r.hypothesis,
                "asserted": r.asserted,
                "verdict": r.verdict,
                "sweep": r.sweep_size,
                "skipped": r.skipped,
                "witness": witness,
            })
        })
        .collect();
    for (_, r) in reports {
        report.check(!r.is_discrepancy());
    }
    let discrepancies = reports.iter().filter(|(_, r)| r.is_discrepancy()).count();
    report
        .field("claims", rows)
        .field("discrepancies", discrepancies);
}

pub fn run(command: &Command) -> Result<Output> {
    let mut r = Report::new();
    match command {
        Command::Classify(a) => {
            let space = load_space(&a.space)?;
            let p = classify(&space);
            r.field("elements", space.len())
                .field("pairs", space.pair_count());
            for prop in Property::ALL {
                r.field(prop.name(), p.holds(prop));
            }
            r.field("parthood", p.is_parthood())
                .field("equivalence", p.is_equivalence())
                .field("partial_order", p.is_partial_order());
            let witnesses: serde_json::Map<String, serde_json::Value> = p
                .witnesses
                .iter()
                .map(|(prop, w)| {
                    let labels: Vec<&str> = w.iter().map(|&x| space.label(x)).collect();
                    (prop.name().to_string(), json!(labels))
                })
                .collect();
            r.field("witnesses", witnesses);
        }
        Command::Granules(a) => {
            let space = load_space(&a.space)?;
            let rows: Vec<serde_json::Value> = (0..space.len())
                .map(|x| {
                    let mut row = serde_json::Map::new();
                    row.insert("element".into(), json!(space.label(x)));
                    for kind in NeighborhoodKind::ALL {
                        let name = serde_json::to_value(kind).expect("kind serializes");
                        let key = name.as_str().expect("string tag").to_string();
                        row.insert(key, json!(space.labels_of(space.neighborhood(x, kind))));
                    }
                    serde_json::Value::Object(row)
                })
                .collect();
            r.field("granules", rows);
        }
        Command::Approx { space, set, op } => {
            let space = load_space(&space.space)?;
            let a = parse_set(&space, set)?;
            r.field("set", space.labels_of(a));
            if op == "all" {
                for (op, value) in approximate_all(&space, a) {
                    r.field(op.name(), space.labels_of(value));
                }
            } else {
                let op: OperatorId = op.parse()?;
                r.field(op.name(), space.labels_of(approximate(&space, a, op)));
            }
        }
        Command::Groupoid { action } => return groupoid(action),
        Command::Algebra { kind, space, audit } => {
            let space = load_space(&space.space)?;
            let (alg, kind) = match kind {
                AlgebraArg::Uua => (build_upper_algebra(&space)?, AlgebraKind::Upper),
                AlgebraArg::Ua => (build_lu_algebra(&space)?, AlgebraKind::LowerUpper),
                AlgebraArg::UaStar => (
                    extend_partial(&build_lu_algebra(&space)?)?,
                    AlgebraKind::Partial,
                ),
            };
            let dump = alg.dump();
            r.field("kind", dump.kind)
                .field("size", alg.len())
                .field("carrier", &dump.carrier);
            r.field("operations", &dump.operations);
            if *audit {
                let ids = imgalg::claims_for(kind);
                let reports = imgalg::audit(&[&space], &ids, &AuditConfig::default())?;
                let tagged: Vec<_> = reports.into_iter().map(|x| ("imgalg", x)).collect();
                claim_rows(&mut r, &tagged, &["space".to_string()]);
            }
        }
        Command::Powgrp {
            space,
            table,
            a,
            b,
            audit,
        } => {
            let space = load_space(&space.space)?;
            let ctx = match table {
                Some(t) => LiftedProductContext::new(space.clone(), load_groupoid(t)?)?,
                None => LiftedProductContext::canonical(&space)?,
            };
            match (a, b) {
                (Some(a), Some(b)) => {
                    let (a, b) = (parse_set(&space, a)?, parse_set(&space, b)?);
                    r.field("product", space.labels_of(lift_product(&ctx, a, b)));
                    for op in SplitOp::ALL {
                        r.field(op.name(), space.labels_of(split_op(&ctx, op, a, b)));
                    }
                }
                (None, None) => {}
                _ => bail!("--a and --b go together"),
            }
            if *audit {
                let ids = powgrp::claim_ids();
                let reports = powgrp::audit(&[&ctx], &ids, &AuditConfig::default())?;
                let tagged: Vec<_> = reports.into_iter().map(|x| ("powgrp", x)).collect();
                claim_rows(&mut r, &tagged, &["space".to_string()]);
            }
        }
        Command::Quotient {
            space,
            kind,
            rpa_op,
            args,
        } => {
            let space = load_space(&space.space)?;
            let kind: RoughKind = kind.parse()?;
            match rpa_op {
                None => {
                    let q = quotient(&space, kind)?;
                    let classes: Vec<_> = q.classes().iter().map(|c| c.dump(&space)).collect();
                    r.field("kind", kind).field("classes", q.len());
                    r.field_with_text(
                        "members",
                        &classes,
                        classes
                            .iter()
                            .map(|c| {
                                let m: Vec<String> = c
                                    .members
                                    .iter()
                                    .map(|s| format!("{{{}}}", s.join(",")))
                                    .collect();
                                format!("[{}]", m.join(" "))
                            })
                            .collect::<Vec<_>>()
                            .join(" "),
                    );
                }
                Some(op) => {
                    if kind != RoughKind::Standard {
                        bail!("quotient operations act on the standard rough equality");
                    }
                    let op: RpaOp = op.parse()?;
                    if args.len() != op.arity() {
                        bail!("`{op}` takes {} operand(s), got {}", op.arity(), args.len());
                    }
                    let rpa = Rpa::new(&space, None)?;
                    let q = rpa.quotient();
                    let operands = args
                        .iter()
                        .map(|a| Ok(q.class_of(parse_set(&space, a)?)))
                        .collect::<Result<Vec<_>>>()?;
                    let result = rpa.apply(op, &operands)?;
                    let dump = result.dump(&space);
                    r.field("op", op.name());
                    r.field("lower", &dump.lower)
                        .field("upper", &dump.upper)
                        .field("members", &dump.members);
                }
            }
        }
        Command::Lattice {
            space,
            op,
            cd,
            tr23,
            ei3,
            ei4,
            triagrp,
            dual,
        } => {
            let space = load_space(&space.space)?;
            let op: OperatorId = op.parse()?;
            let l = image_lattice(&space, op)?;
            let elements: Vec<Vec<String>> =
                l.elements().iter().map(|&s| space.labels_of(s)).collect();
            r.field("op", op.name())
                .field("size", l.len())
                .field("elements", elements);
            r.field("covers", l.covers().len());
            let irreducible: Vec<Vec<String>> = cji(&l)
                .iter()
                .map(|&x| space.labels_of(l.elements()[x]))
                .collect();
            r.field("cji", irreducible).field("spatial", is_spatial(&l));
            if *cd {
                let check = is_completely_distributive(&l);
                r.verdict("completely_distributive", check.distributive);
                if let Some((x, y, z)) = check.witness {
                    let sets: Vec<Vec<String>> = [x, y, z]
                        .iter()
                        .map(|&i| space.labels_of(l.elements()[i]))
                        .collect();
                    r.field("distributivity_witness", sets);
                }
            }
            if *tr23 {
                let c = tr23_condition(&space);
                r.verdict("tr23", c.holds);
                if let Some((a, b)) = c.failure {
                    r.field("tr23_failure", labeled_pairs(&space, &[(a, b)]));
                }
            }
            if *ei3 || *ei4 {
                let (name, which) = if *ei3 {
                    ("ei3", EiKind::Ei3)
                } else {
                    ("ei4", EiKind::Ei4)
                };
                let c = ei_condition(&space, which)?;
                r.verdict(name, c.holds);
                if let Some(x) = c.failure {
                    r.field(&format!("{name}_failure"), space.label(x));
                }
            }
            if *triagrp {
                let g = build_updg(&space, &Canonical)?;
                let c = triagrp_condition(&space, &g)?;
                r.verdict("triagrp", c.holds);
            }
            if *dual {
                let d = dual_iso_check(&space)?;
                r.verdict("dual_tri", d.tri).verdict("dual_btri", d.btri);
            }
        }
        Command::Fca { space, th40 } => {
            let space = load_space(&space.space)?;
            let ctx = context_of(&space);
            let cs = concepts(&ctx)?;
            let rows: Vec<serde_json::Value> = cs
                .iter()
                .map(|c| json!({"extent": space.labels_of(c.extent), "intent": space.labels_of(c.intent)}))
                .collect();
            r.field("concepts", rows);
            let lattice = concept_lattice(&ctx)?;
            r.field(
                "completely_distributive",
                is_completely_distributive(&lattice).distributive,
            );
            if *th40 {
                let failure = th40_condition(&ctx);
                r.verdict("th40", failure.is_none());
                if let Some((g, m)) = failure {
                    r.field("th40_failure", labeled_pairs(&space, &[(g, m)]));
                }
            }
        }
        Command::Audit {
            spaces,
            claims,
            mode,
            samples,
            seed,
            ignore_hypotheses,
        } => {
            let loaded = spaces
                .iter()
                .map(|p| load_space(p))
                .collect::<Result<Vec<_>>>()?;
            let refs: Vec<&FiniteRelationSpace> = loaded.iter().collect();
            let mut config = match mode {
                ModeArg::Exhaustive => AuditConfig::exhaustive(),
                ModeArg::Sampled => AuditConfig::sampled(*samples, *seed),
            };
            if *ignore_hypotheses {
                config = config.ignoring_hypotheses();
            }
            let selectors: Vec<&str> = claims.iter().map(String::as_str).collect();
            let reports = registry::audit(&refs, &selectors, &config)?;
            let names: Vec<String> = spaces.iter().map(|p| p.display().to_string()).collect();
            r.field_with_text("spaces", &names, names.join(" "));
            r.field(
                "mode",
                match config.mode {
                    SweepMode::Exhaustive => json!("exhaustive"),
                    SweepMode::Sampled { samples, seed } => {
                        json!({"samples": samples, "seed": seed})
                    }
                },
            );
            let tagged: Vec<_> = reports.into_iter().map(|(m, x)| (m.name(), x)).collect();
            claim_rows(&mut r, &tagged, &names);
        }
        Command::Table { table, attributes } => {
            let doc = InfoTableDocument::parse(&read(table)?)
                .with_context(|| format!("in {}", table.display()))?;
            let space = shell::table_to_space(&doc, attributes)?;
            return Ok(Output::Raw(shell::emit_space(&space) + "\n"));
        }
        Command::ExportDot {
            what,
            space,
            table,
            op,
        } => {
            let dot = match what {
                DotArg::Space => shell::export_space(&load_space(require(space, "--space")?)?),
                DotArg::GroupoidOrder => {
                    let g = match (table, space) {
                        (Some(t), _) => load_groupoid(t)?,
                        (None, Some(s)) => build_updg(&load_space(s)?, &Canonical)?,
                        (None, None) => bail!("groupoid-order needs --table or --space"),
                    };
                    shell::export_groupoid_order(&g)
                }
                DotArg::Lattice => {
                    let space = load_space(require(space, "--space")?)?;
                    shell::export_lattice(&space, &image_lattice(&space, op.parse()?)?)
                }
            };
            return Ok(Output::Raw(dot));
        }
        Command::Emit { space, edges } => {
            let doc = shell::parse_space_document(&read(&space.space)?)
                .with_context(|| format!("in {}", space.space.display()))?;
            let s = doc.to_space()?;
            let text = if *edges {
                shell::emit_edge_list(&s)
            } else {
                shell::emit_space_document(&doc) + "\n"
            };
            return Ok(Output::Raw(text));
        }
    }
    Ok(Output::Report(r))
}

fn require<'a, T>(value: &'a Option<T>, flag: &str) -> Result<&'a T> {
    value
        .as_ref()
        .with_context(|| format!("{flag} is required here"))
}

fn groupoid(action: &GroupoidAction) -> Result<Output> {
    let mut r = Report::new();
    match action {
        GroupoidAction::Build(a) => {
            let g = build_updg(&load_space(&a.space)?, &Canonical)?;
            return Ok(Output::Raw(shell::emit_groupoid(&g) + "\n"));
        }
        GroupoidAction::Count(a) => {
            let count = count_updg(&load_space(&a.space)?)?;
            r.field("count", count.to_string());
        }
        GroupoidAction::Check { space, table } => {
            let space = load_space(&space.space)?;
            let g = load_groupoid(table)?;
            let bad = labeled_pairs(&space, &realization_check(&space, &g)?);
            r.verdict("realizes", bad.is_empty());
            let text = pairs_text(&bad);
            r.field_with_text("violations", &bad, text);
        }
        GroupoidAction::Bridge(a) => {
            let space = load_space(&a.space)?;
            let reports = bridge_audit(&space)?;
            let tagged: Vec<_> = reports.into_iter().map(|x| ("magma", x)).collect();
            claim_rows(&mut r, &tagged, &[a.space.display().to_string()]);
        }
        GroupoidAction::Directoid(a) => {
            let space = load_space(&a.space)?;
            let g = directoid_from_poset(&space, &Canonical)?;
            let check = directoid_check(&g);
            for (name, c) in &check.axioms {
                r.verdict(name, c.holds);
            }
            let rows: Vec<Vec<&str>> = g
                .rows()
                .iter()
                .map(|row| row.iter().map(|&x| g.label(x)).collect())
                .collect();
            r.field("table", rows);
        }
        GroupoidAction::Tolerance { table } => {
            let g = load_groupoid(table)?;
            let v = is_tolerance_trivial(&g)?;
            r.verdict("tolerance_trivial", v.trivial);
            if let Some((t, (a, b, c))) = v.witness {
                let pairs: Vec<(String, String)> = t
                    .pairs()
                    .into_iter()
                    .map(|(x, y)| (g.label(x).to_string(), g.label(y).to_string()))
                    .collect();
                let text = pairs_text(&pairs);
                r.field_with_text("tolerance", &pairs, text);
                r.field("intransitive", [g.label(a), g.label(b), g.label(c)]);
            }
        }
    }
    Ok(Output::Report(r))
}
