//! Acceptance criteria 1 to 12. Prints one line per criterion and exits
//! nonzero if any fails.

use std::time::{Duration, Instant};

use pitheory_core::arith;
use pitheory_core::construct::alternating;
use pitheory_core::embed::satisfies_partial_pi;
use pitheory_core::fp::FpMatrix;
use pitheory_core::iso::is_isomorphic;
use pitheory_core::lab::{
    builtin_corpus, check_theorem_a, check_theorem_b, check_theorem_c, run_corpus, run_entry, CheckId, CheckSpec,
    Corpus, Outcome, VerdictReport,
};
use pitheory_core::lattice::SubgroupLattice;
use pitheory_core::modrep::{cyclicity_criterion_check, section_as_module};
use pitheory_core::{FpModule, Group, Permutation, Structure};

const CRIT1_LIMIT: Duration = Duration::from_secs(1);
const CRIT2_LIMIT: Duration = Duration::from_secs(120);
const CRIT12_LIMIT: Duration = Duration::from_secs(300);

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn corpus_group(name: &str) -> Group {
    let c = builtin_corpus();
    let e = c.entries.iter().find(|e| e.name == name).unwrap();
    e.recipe.build().unwrap().with_name(name)
}

fn fact<'a>(r: &'a VerdictReport, key: &str) -> &'a str {
    r.facts.get(key).map_or("", String::as_str)
}

fn perm(degree: usize, cycles: &[&[usize]]) -> Permutation {
    let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
    Permutation::from_cycles(degree, &cycles).unwrap()
}

/// Runs `checks` over the whole corpus; every report must have `pass`.
fn corpus_sweep(checks: &[CheckSpec]) -> Result<Vec<VerdictReport>, String> {
    let reports = run_corpus(&builtin_corpus(), checks);
    let bad: Vec<String> = reports
        .iter()
        .filter(|r| !r.pass)
        .map(|r| format!("{} {} p={} d={:?} {}", r.group_name, r.theorem_id, r.p, r.d, r.outcome))
        .collect();
    ensure(bad.is_empty(), || format!("{} violations: {}", bad.len(), bad.join("; ")))?;
    Ok(reports)
}

fn tally(reports: &[VerdictReport]) -> String {
    let n = |o| reports.iter().filter(|r| r.outcome == o).count();
    format!("{} reports, {} pass, {} vacuous", reports.len(), n(Outcome::Pass), n(Outcome::Vacuous))
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let a4 = alternating(4).unwrap();
    let h = a4.subgroup_generated(&[perm(4, &[&[1, 2], &[3, 4]])]).unwrap();
    let (holds, witness) = satisfies_partial_pi(&a4, &h).map_err(|e| e.to_string())?;
    ensure(!holds && witness.is_none(), || "Alt4, <(1 2)(3 4)> satisfies the property".into())?;

    let s3 = corpus_group("Sym3");
    let h = s3.subgroup_generated(&[perm(3, &[&[1, 2]])]).unwrap();
    let (holds, witness) = satisfies_partial_pi(&s3, &h).map_err(|e| e.to_string())?;
    let w = witness.ok_or("Sym3, <(1 2)> has no witness")?;
    let orders: Vec<usize> = w.series.terms().iter().map(|t| t.order()).collect();
    ensure(holds && orders == [1, 3, 6], || format!("Sym3 witness orders {orders:?}"))?;
    ensure(w.per_factor.iter().all(|r| r.passed), || "witness has a failing factor".into())?;
    let t = start.elapsed();
    ensure(t < CRIT1_LIMIT, || format!("took {t:?}"))?;
    Ok(format!("Alt4 false, Sym3 true via orders {orders:?}, {t:?}"))
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let mut checked = 0;
    let mut groups = 0;
    for e in builtin_corpus().entries {
        let g = e.recipe.build().unwrap();
        if g.order() > 48 {
            continue;
        }
        groups += 1;
        let st = Structure::new(&g);
        for p in arith::prime_divisors(g.order() as u64) {
            let sylow = st.sylow(p);
            let lat = SubgroupLattice::within(&g, &sylow).map_err(|e| e.to_string())?;
            for h in lat.all() {
                let (direct, _) = st.partial_pi(h).map_err(|e| e.to_string())?;
                let via_quotients = st.partial_pi_via_quotients(h).map_err(|e| e.to_string())?;
                let factors = st.pi_route_mismatches(h).map_err(|e| e.to_string())?;
                ensure(direct == via_quotients && factors.is_empty(), || {
                    format!("{} p={p} |H|={}: routes disagree on {factors:?}", e.name, h.order())
                })?;
                checked += 1;
            }
        }
    }
    let t = start.elapsed();
    ensure(t < CRIT2_LIMIT, || format!("took {t:?}"))?;
    Ok(format!("{checked} subgroups across {groups} groups, 0 mismatches, {t:?}"))
}

fn criterion_3() -> Check {
    let reports = corpus_sweep(&[CheckSpec::sweep(CheckId::Lemma("order-p-supersoluble".into()))])?;
    Ok(tally(&reports))
}

fn criterion_4() -> Check {
    let reports = corpus_sweep(&[CheckSpec::sweep(CheckId::Lemma("p-length-one".into()))])?;
    Ok(tally(&reports))
}

fn criterion_5() -> Check {
    let r = check_theorem_a(&corpus_group("Alt4"), 2);
    ensure(r.outcome == Outcome::Pass && r.conclusion_cases == ["2"], || format!("Alt4: {:?}", r.conclusion_cases))?;
    let r = check_theorem_a(&corpus_group("C2^4:C3-diagonal"), 2);
    ensure(
        r.outcome == Outcome::Pass
            && r.conclusion_cases == ["3"]
            && fact(&r, "h_order") == "3"
            && fact(&r, "h_cyclic") == "true"
            && fact(&r, "constituent_dims") == "2,2"
            && fact(&r, "homogeneous") == "true",
        || format!("C2^4:C3-diagonal: {:?} {:?}", r.conclusion_cases, r.facts),
    )?;
    let r = check_theorem_a(&corpus_group("Sym4"), 2);
    ensure(r.outcome == Outcome::Vacuous, || format!("Sym4: {}", r.outcome))?;
    let reports = corpus_sweep(&[CheckSpec::sweep(CheckId::TheoremA)])?;
    Ok(format!("instances ok; corpus {}", tally(&reports)))
}

fn criterion_6() -> Check {
    let sl23 = corpus_group("SL(2,3)");
    let r = check_theorem_b(&sl23, 2);
    let p = Structure::new(&sl23).sylow(2);
    let q8 = corpus_group("Q8");
    let p_is_q8 =
        is_isomorphic(&sl23.subgroup_as_group(&p).map_err(|e| e.to_string())?, &q8).map_err(|e| e.to_string())?;
    ensure(r.conclusion_cases.iter().any(|c| c == "4") && p_is_q8, || format!("SL(2,3): {:?}", r.conclusion_cases))?;
    let r = check_theorem_b(&corpus_group("Alt5"), 2);
    ensure(r.conclusion_cases == ["3"], || format!("Alt5: {:?}", r.conclusion_cases))?;
    let r = check_theorem_b(&corpus_group("Alt4"), 2);
    ensure(r.conclusion_cases.iter().any(|c| c == "2"), || format!("Alt4: {:?}", r.conclusion_cases))?;
    let reports = corpus_sweep(&[CheckSpec::sweep(CheckId::TheoremB)])?;
    Ok(format!("instances ok; corpus {}", tally(&reports)))
}

fn criterion_7() -> Check {
    let r = check_theorem_c(&corpus_group("C2^4:C3-diagonal"), 2, 4).map_err(|e| e.to_string())?;
    let expected = [
        ("frattini_order", "1"),
        ("k", "2"),
        ("m", "4"),
        ("n", "2"),
        ("homogeneous", "true"),
        ("end_dims", "2,2"),
        ("h_cyclic", "true"),
    ];
    for (k, v) in expected {
        ensure(fact(&r, k) == v, || format!("C2^4:C3-diagonal {k} = {:?}, expected {v}", fact(&r, k)))?;
    }
    ensure(r.outcome == Outcome::Pass, || format!("C2^4:C3-diagonal: {}", r.outcome))?;
    let reports = corpus_sweep(&[CheckSpec::sweep(CheckId::TheoremC)])?;
    Ok(format!("instance ok; corpus {}", tally(&reports)))
}

fn criterion_8() -> Check {
    let reports = corpus_sweep(&[CheckSpec::sweep(CheckId::Lemma("completed".into()))])?;
    let subgroups: usize = reports.iter().filter_map(|r| r.facts.get("subgroups_checked")?.parse::<usize>().ok()).sum();
    Ok(format!("{}; {subgroups} subgroups compared", tally(&reports)))
}

fn criterion_9() -> Check {
    let mut corpus = Corpus::new(Default::default());
    corpus.entries = builtin_corpus()
        .entries
        .into_iter()
        .filter(|e| ["C2^4:C3-diagonal", "C3^2:C2", "C7^2:Sym3"].contains(&e.name.as_str()))
        .collect();
    ensure(corpus.len() == 3, || "missing groups".into())?;
    let mut reports = Vec::new();
    for e in &corpus.entries {
        let rs = run_entry(e, corpus.caps, &[CheckSpec::sweep(CheckId::Lemma("Completed".into()))]);
        let applied = rs.iter().filter(|r| r.outcome == Outcome::Pass).count();
        ensure(applied > 0, || format!("{}: no d where the lemma applies", e.name))?;
        ensure(rs.iter().all(|r| r.outcome == Outcome::Pass || r.outcome == Outcome::Vacuous), || {
            let bad = rs.iter().find(|r| r.outcome != Outcome::Pass && r.outcome != Outcome::Vacuous).unwrap();
            format!("{} d={:?}: {} {:?}", e.name, bad.d, bad.outcome, bad.facts)
        })?;
        reports.extend(rs);
    }
    Ok(tally(&reports))
}

fn alt4_module() -> (Group, pitheory_core::Subgroup, FpModule) {
    let a4 = alternating(4).unwrap();
    let st = Structure::new(&a4);
    let (v4, c3) = (st.o_p(2), st.sylow(3));
    let m = section_as_module(&a4, &v4, &a4.trivial_subgroup(), &c3, 2).unwrap();
    (a4, c3, m)
}

/// The two-dimensional module of Sym3 over F7, acted on by `(1 2 3)` then
/// `(1 2)`.
fn sym3_f7() -> FpModule {
    let gens = vec![FpMatrix::square(7, &[0, 1, 6, 6]).unwrap(), FpMatrix::square(7, &[6, 0, 1, 1]).unwrap()];
    FpModule::new(7, 2, gens).unwrap()
}

fn criterion_10() -> Check {
    let (a4, c3, m) = alt4_module();
    let alt4 = cyclicity_criterion_check(&a4, &c3, &m).map_err(|e| e.to_string())?;
    let s3 = corpus_group("Sym3");
    let h = s3.subgroup_generated(&[perm(3, &[&[1, 2, 3]]), perm(3, &[&[1, 2]])]).unwrap();
    let v = sym3_f7();
    let sym3 = cyclicity_criterion_check(&s3, &h, &v).map_err(|e| e.to_string())?;
    ensure(alt4 && sym3, || format!("Alt4 C3/F2^2 {alt4}, Sym3/F7^2 {sym3}"))?;
    Ok("true on C3/F2^2 and Sym3/F7^2".into())
}

fn criterion_11() -> Check {
    let v = sym3_f7();
    let doubled = v.direct_sum(&v).map_err(|e| e.to_string())?;
    let lat = doubled.submodules().map_err(|e| e.to_string())?;
    let dims: Vec<usize> = lat.minimal().map(|s| s.dim()).collect();
    ensure(dims.len() == 8 && dims.iter().all(|&d| d == 2), || format!("Sym3/F7^2 doubled: minimal dims {dims:?}"))?;

    let (_, _, m) = alt4_module();
    let doubled = m.direct_sum(&m).map_err(|e| e.to_string())?;
    let lat = doubled.submodules().map_err(|e| e.to_string())?;
    let dims: Vec<usize> = lat.minimal().map(|s| s.dim()).collect();
    ensure(dims.len() == 5 && dims.iter().all(|&d| d == 2), || format!("C3/F2^2 doubled: minimal dims {dims:?}"))?;
    Ok("Sym3/F7^2 doubled: 8 minimal of dim 2; C3/F2^2 doubled: 5 minimal of dim 2".into())
}

fn criterion_12() -> Check {
    let start = Instant::now();
    let reports = corpus_sweep(&CheckSpec::everything())?;
    let t = start.elapsed();
    ensure(t < CRIT12_LIMIT, || format!("took {t:?}"))?;
    Ok(format!("{}, {t:?}", tally(&reports)))
}

fn main() {
    let criteria: [(u32, fn() -> Check); 12] = [
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
    ];
    let mut failed = 0;
    for (n, f) in criteria {
        match f() {
            Ok(detail) => println!("criterion {n}: PASS  {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {n}: FAIL  {why}");
            }
        }
    }
    println!("acceptance: {} of 12 criteria pass", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
