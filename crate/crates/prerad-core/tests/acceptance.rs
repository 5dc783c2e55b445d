//! Acceptance gate: one pass/fail line per criterion, all must pass.
//! Full reports for every preset are computed once and shared.

use prerad_core::config::{default_max_order, run_config, parse_config};
use prerad_core::module::FiniteModule;
use prerad_core::prerad::Preradical;
use prerad_core::report::{Status, SuiteReport};
use prerad_core::ring::make_ring;
use prerad_core::suites::{registry, run_suites};
use prerad_core::universe::default_universe;
use std::collections::HashMap;
use std::time::{Duration, Instant};

const PRESETS: [&str; 7] = [
    "zn:2",
    "zn:4",
    "zn:6",
    "zn:8",
    "product(zn:2,zn:3)",
    "triangular:2:2",
    "matrix:2:2",
];

const CAP: usize = 10_000_000;

struct Ctx {
    reports: HashMap<&'static str, SuiteReport>,
    /// wall time per preset full run (universe build + all suites)
    times: HashMap<&'static str, Duration>,
}

impl Ctx {
    fn prop<'a>(&'a self, preset: &str, id: &str) -> &'a prerad_core::report::PropResult {
        self.reports[preset]
            .propositions
            .iter()
            .find(|p| p.proposition_id == id)
            .unwrap_or_else(|| panic!("{preset} is missing {id}"))
    }

    fn status(&self, preset: &str, id: &str) -> Status {
        self.prop(preset, id).status
    }

    fn all_hold(&self, id: &str) -> Result<(), String> {
        for preset in PRESETS {
            let s = self.status(preset, id);
            if s != Status::Holds {
                return Err(format!("{id} is {s} on {preset}"));
            }
        }
        Ok(())
    }
}

fn build_ctx() -> Ctx {
    let mut reports = HashMap::new();
    let mut times = HashMap::new();
    for preset in PRESETS {
        let start = Instant::now();
        let ring = make_ring(preset).expect(preset);
        let uv = default_universe(&ring, default_max_order(preset), 2).expect(preset);
        let report = run_suites(preset, &uv, &["all".to_string()], CAP).expect(preset);
        times.insert(preset, start.elapsed());
        reports.insert(preset, report);
    }
    Ctx { reports, times }
}

fn crit_1(ctx: &Ctx) -> Result<(), String> {
    // timed dedicated pass over section1 only
    let start = Instant::now();
    for preset in PRESETS {
        let ring = make_ring(preset).unwrap();
        let uv = default_universe(&ring, default_max_order(preset), 2).unwrap();
        let report = run_suites(preset, &uv, &["section1".to_string()], CAP).unwrap();
        for p in &report.propositions {
            if p.status != Status::Holds {
                return Err(format!("{preset}: {} is {}", p.proposition_id, p.status));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(60) {
        return Err(format!("section1 pass took {elapsed:?} (> 60 s)"));
    }
    ctx.all_hold("S1.remark-interval")?;
    ctx.all_hold("S1.remark-trace-reject")
}

fn crit_2(ctx: &Ctx) -> Result<(), String> {
    let r = make_ring("zn:6").unwrap();
    let z6 = FiniteModule::diagonal_module(&r, vec![6]).unwrap();
    let z2 = FiniteModule::diagonal_module(&r, vec![2]).unwrap();
    let v = Preradical::reject(z6).eval(&z2).unwrap();
    if !v.is_zero() {
        return Err(format!("reject(Z6)(Z2) has {} elements", v.len()));
    }
    match ctx.status("zn:6", "S2.example-reject") {
        Status::Holds => Ok(()),
        s => Err(format!("S2.example-reject is {s} on zn:6")),
    }
}

fn crit_3(ctx: &Ctx) -> Result<(), String> {
    ctx.all_hold("S2.prop-comult-monotone")?;
    ctx.all_hold("S2.cor-comult-intersection")
}

fn crit_4(ctx: &Ctx) -> Result<(), String> {
    ctx.all_hold("S2.lemma-tot")
}

fn crit_5(ctx: &Ctx) -> Result<(), String> {
    ctx.all_hold("S2.lemma-BJKNco.1v3")?;
    ctx.all_hold("S2.lemma-BJKNco.xi-box")?;
    let p = ctx.prop("zn:4", "S2.lemma-BJKNco.2v3");
    if p.status != Status::Reported {
        return Err(format!("2v3 is {} on zn:4, expected reported", p.status));
    }
    let w = p
        .witnesses
        .iter()
        .find(|w| w["module"] == "Z4")
        .ok_or("no Z4 witness in the 2v3 disagreement")?;
    if w["by_hom"] != true || w["by_xi"] != false {
        return Err(format!("Z4 witness has wrong verdicts: {w}"));
    }
    if w["box_failure_pair"] != serde_json::json!([[2], [2]]) {
        return Err(format!("expected (L,N)=(2Z4,2Z4), got {}", w["box_failure_pair"]));
    }
    Ok(())
}

fn crit_6(ctx: &Ctx) -> Result<(), String> {
    ctx.all_hold("S3.prop-pf")
}

fn crit_7(ctx: &Ctx) -> Result<(), String> {
    ctx.all_hold("S3.lemma-5")
}

fn crit_8(ctx: &Ctx) -> Result<(), String> {
    ctx.all_hold("S3.prop-6")?;
    let p = ctx.prop("zn:4", "S3.prop-6-nonconverse");
    if p.status != Status::Holds {
        return Err(format!("non-converse witness missing on zn:4 ({})", p.status));
    }
    if !p.witnesses.iter().any(|w| w["module"] == "Z4") {
        return Err("Z4 is not among the dihollow non-co-first witnesses".into());
    }
    Ok(())
}

fn crit_9(ctx: &Ctx) -> Result<(), String> {
    let mut total = Duration::ZERO;
    for preset in ["zn:4", "zn:6", "triangular:2:2"] {
        total += ctx.times[preset];
        for id in ["S4.propPsig", "S4.P-hat", "S4.cor-24", "S4.prop-8.3"] {
            let s = ctx.status(preset, id);
            if s != Status::Holds {
                return Err(format!("{id} is {s} on {preset}"));
            }
        }
    }
    if total > Duration::from_secs(300) {
        return Err(format!("full runs took {total:?} (> 5 min)"));
    }
    Ok(())
}

fn crit_10(ctx: &Ctx) -> Result<(), String> {
    ctx.all_hold("S4.cftrad")?;
    ctx.all_hold("S4.coroL")?;
    ctx.all_hold("S4.rid-trad")?;
    let p = ctx.prop("zn:4", "S4.coroL");
    if !p.witnesses.iter().any(|w| w["module_in_p_not_f"] == "Z4") {
        return Err("zn:4 strictness witness (Z4 co-first, not torsion-free) missing".into());
    }
    Ok(())
}

fn crit_11(ctx: &Ctx) -> Result<(), String> {
    for preset in ["zn:4", "zn:6"] {
        let s = ctx.status(preset, "S4.conatperfect1");
        if s != Status::Holds {
            return Err(format!("S4.conatperfect1 is {s} on {preset}"));
        }
    }
    // zn:4: exactly the two trivial classes
    let r = make_ring("zn:4").unwrap();
    let uv = default_universe(&r, 16, 2).unwrap();
    let cs = prerad_core::conat::conatural_classes(&uv).unwrap();
    if cs != vec![1u64 << uv.zero_class, uv.all_mask()] {
        return Err(format!("zn:4 conatural classes: {cs:?}"));
    }
    // zn:6: four classes
    let r6 = make_ring("zn:6").unwrap();
    let uv6 = default_universe(&r6, 36, 2).unwrap();
    if prerad_core::conat::conatural_classes(&uv6).unwrap().len() != 4 {
        return Err("zn:6 should have exactly four conatural classes".into());
    }
    for preset in ["zn:4", "triangular:2:2"] {
        let s = ctx.status(preset, "S4.tpcfq");
        if s != Status::Holds {
            return Err(format!("S4.tpcfq is {s} on {preset}"));
        }
    }
    Ok(())
}

fn crit_12(ctx: &Ctx) -> Result<(), String> {
    ctx.all_hold("S5.tsvc1")?;
    let p = ctx.prop("zn:4", "S5.tsvc1");
    if p.witnesses.is_empty() {
        return Err("zn:4 strict-inclusion witness for tsvc1 missing".into());
    }
    for preset in ["product(zn:2,zn:3)", "matrix:2:2"] {
        let s = ctx.status(preset, "S5.final-prop");
        if s != Status::Holds {
            return Err(format!("S5.final-prop is {s} on {preset}"));
        }
    }
    let p = ctx.prop("zn:4", "S5.final-prop");
    if p.status != Status::Holds || p.witnesses.is_empty() {
        return Err("zn:4 must hold with a separating sigma witness".into());
    }
    ctx.all_hold("S5.psvc1")
}

fn crit_13(ctx: &Ctx) -> Result<(), String> {
    // byte-identical reruns through the config layer
    let cfg = parse_config(r#"{"ring":"zn:4","suites":["all"]}"#).unwrap();
    let a = run_config(&cfg).unwrap().to_canonical_json();
    let b = run_config(&cfg).unwrap().to_canonical_json();
    if a != b {
        return Err("reruns differ".into());
    }
    // registry completeness against the hard-coded id list
    let expected = [
        "S1.remark-interval",
        "S1.remark-trace-reject",
        "S2.prop-comult-monotone",
        "S2.cor-comult-intersection",
        "S2.lemma-tot",
        "S2.example-reject",
        "S2.lemma-BJKNco.1v3",
        "S2.lemma-BJKNco.xi-box",
        "S2.lemma-BJKNco.2v3",
        "S3.prop-pf",
        "S3.P-rad-cofirst",
        "S3.lemma-simple",
        "S3.lemma-5",
        "S3.prop-6",
        "S3.prop-6-nonconverse",
        "S3.example-zp2",
        "S4.pseudocomplement",
        "S4.CNCNC",
        "S4.conat-boolean",
        "S4.propPsig",
        "S4.P-hat",
        "S4.conatp",
        "S4.alpha-superfluous",
        "S4.cor-24",
        "S4.V-ring",
        "S4.prop-8.3",
        "S4.cftrad",
        "S4.coroL",
        "S4.rid-trad",
        "S4.propseudo",
        "S4.ECNCUC",
        "S4.MAXRing",
        "S4.tpcfq",
        "S4.conatperfect1",
        "S4.conatforleftperfect",
        "S5.remark-8s",
        "S5.tsvc1",
        "S5.ejemsvc",
        "S5.ejem4.17",
        "S5.psvc1",
        "S5.radsec-radcop",
        "S5.final-prop",
    ];
    let ids: Vec<&str> = registry().iter().map(|e| e.id).collect();
    if ids != expected {
        return Err("registry ids do not match the hard-coded list".into());
    }
    for preset in PRESETS {
        let report = &ctx.reports[preset];
        let seen: Vec<&str> = report
            .propositions
            .iter()
            .map(|p| p.proposition_id.as_str())
            .collect();
        if seen != expected {
            return Err(format!("{preset} report does not cover the registry"));
        }
        if !report.failed_assertions().is_empty() {
            return Err(format!(
                "{preset} has asserted failures: {:?}",
                report.failed_assertions()
            ));
        }
    }
    let total: Duration = ctx.times.values().sum();
    if total > Duration::from_secs(300) {
        return Err(format!("full default run took {total:?} (> 5 min)"));
    }
    Ok(())
}

#[test]
fn acceptance() {
    let ctx = build_ctx();
    let criteria: Vec<(&str, Box<dyn Fn(&Ctx) -> Result<(), String>>)> = vec![
        ("1  section-1 remarks, exact, < 60 s", Box::new(crit_1)),
        ("2  reject(Z6) kills Z2 over zn:6", Box::new(crit_2)),
        ("3  comultiplication laws, order <= 16", Box::new(crit_3)),
        ("4  totalizer universal + minimal", Box::new(crit_4)),
        ("5  coprimeness criteria + Z4 split reported", Box::new(crit_5)),
        ("6  co-first-for-all = coprime", Box::new(crit_6)),
        ("7  semisimple co-first = isotypic", Box::new(crit_7)),
        ("8  co-first => dihollow, non-converse Z4", Box::new(crit_8)),
        ("9  section-4 identities, < 5 min", Box::new(crit_9)),
        ("10 t-radical inclusions + strictness", Box::new(crit_10)),
        ("11 conatural classes = ideal torsion classes", Box::new(crit_11)),
        ("12 second vs co-first, semisimple split", Box::new(crit_12)),
        ("13 determinism, registry, < 5 min", Box::new(crit_13)),
    ];
    let mut failures = Vec::new();
    for (name, f) in &criteria {
        match f(&ctx) {
            Ok(()) => println!("criterion {name}: pass"),
            Err(why) => {
                println!("criterion {name}: FAIL ({why})");
                failures.push(format!("{name}: {why}"));
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria:\n{}", failures.join("\n"));
}
