//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line; run with
//! `cargo test -p hurwitz-cli --test acceptance -- --nocapture --test-threads=1`
//! to see them in order.

use std::process::Command;
use std::time::{Duration, Instant};

use hurwitz_core::{
    brute_force_counts, check_compatibility, class_key, count, emit_dot, enumerate_rigid_classes,
    enumerate_rigid_classes_with_jobs, mirror, rotate_roles, swap_colours, to_map, twelve_table,
    BranchDatum, CountReport, Partition, Permutation,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const DEGREE_SIX_SAMPLE: [&str; 10] = [
    "6; 5,1; 2,2,2; 2,2,2",
    "6; 4,2; 3,3; 3,3",
    "6; 6; 6; 5,1",
    "6; 6; 6; 4,2",
    "6; 6; 5,1; 3,2,1",
    "6; 5,1; 5,1; 5,1",
    "6; 5,1; 4,2; 4,2",
    "6; 5,1; 3,2,1; 3,2,1",
    "6; 4,2; 3,2,1; 3,2,1",
    "6; 3,1,1,1; 6; 6",
];

fn criterion(name: &str, outcome: Result<String, String>) {
    match outcome {
        Ok(detail) => println!("PASS  {name}: {detail}"),
        Err(why) => {
            println!("FAIL  {name}: {why}");
            panic!("{name} failed: {why}");
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn datum(s: &str) -> BranchDatum {
    s.parse().unwrap()
}

/// Every compatible ordered three-point datum of degree at most 5 (including
/// ones with an unbranched point), plus the fixed degree-6 sample.
fn cross_check_data() -> Vec<BranchDatum> {
    let mut out = Vec::new();
    for d in 1..=5 {
        let parts = Partition::all(d);
        for a in &parts {
            for b in &parts {
                for c in &parts {
                    if let Ok(x) = check_compatibility(d, vec![a.clone(), b.clone(), c.clone()]) {
                        out.push(x);
                    }
                }
            }
        }
    }
    out.extend(DEGREE_SIX_SAMPLE.iter().map(|s| datum(s)));
    out
}

fn counts_of(d: &BranchDatum) -> (u64, u64, u64) {
    count(d, 1).unwrap().triple()
}

fn hurwitz() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hurwitz"))
}

#[test]
fn criterion_1_figure_census() {
    let start = Instant::now();
    let got = counts_of(&datum("7; 3,2,1,1; 3,2,1,1; 7"));
    let elapsed = start.elapsed();
    criterion(
        "1 figure census (9, 6, 4) < 1 s",
        ensure(got == (9, 6, 4), || format!("got {got:?}"))
            .and(ensure(elapsed < Duration::from_secs(1), || {
                format!("took {elapsed:?}")
            }))
            .map(|_| format!("{got:?} in {elapsed:?}")),
    );
}

#[test]
fn criterion_2_further_examples() {
    let start = Instant::now();
    let cases = [
        ("7; 7; 4,1,1,1; 3,2,1,1", (3, 3, 2)),
        ("7; 3,3,1; 3,3,1; 4,2,1", (4, 2, 2)),
        ("8; 4,2,2; 2,2,1,1,1,1; 8", (3, 3, 3)),
    ];
    let mut result = Ok(());
    for (text, expected) in cases {
        let got = counts_of(&datum(text));
        result = result.and(ensure(got == expected, || {
            format!("{text}: got {got:?}, expected {expected:?}")
        }));
    }
    let elapsed = start.elapsed();
    criterion(
        "2 further worked examples < 5 s",
        result
            .and(ensure(elapsed < Duration::from_secs(5), || {
                format!("took {elapsed:?}")
            }))
            .map(|_| format!("3 data in {elapsed:?}")),
    );
}

#[test]
fn criterion_3_oracle_equivalence() {
    let start = Instant::now();
    let data = cross_check_data();
    let mut mismatches = Vec::new();
    for d in &data {
        let main = counts_of(d);
        let (r, f, v) = brute_force_counts(d).unwrap();
        let oracle = (r as u64, f as u64, v as u64);
        if main != oracle {
            mismatches.push(format!("{d}: main {main:?} oracle {oracle:?}"));
        }
    }
    let elapsed = start.elapsed();
    criterion(
        "3 oracle equivalence (degree <= 5 exhaustive + 10 degree-6) < 5 min",
        ensure(mismatches.is_empty(), || mismatches.join("; "))
            .and(ensure(elapsed < Duration::from_secs(300), || {
                format!("took {elapsed:?}")
            }))
            .map(|_| format!("{} data agree in {elapsed:?}", data.len())),
    );
}

fn random_perm(d: usize, rng: &mut ChaCha8Rng) -> Permutation {
    let mut v: Vec<usize> = (0..d).collect();
    v.shuffle(rng);
    Permutation::new(v).unwrap()
}

fn check_invariants(d: &BranchDatum, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (r, f, v) = counts_of(d);
    ensure(r >= f && f >= v, || {
        format!("{d}: order violated {r} {f} {v}")
    })?;
    ensure((r == 0) == (v == 0) && (f == 0) == (v == 0), || {
        format!("{d}: counts do not vanish together")
    })?;
    ensure(f <= 2 * v, || {
        format!("{d}: flexible {f} > 2 * very flexible {v}")
    })?;
    let [p1, p2, p3] = d.triple().unwrap();
    if p1 != p2 && p2 != p3 && p1 != p3 {
        ensure(f == r, || {
            format!("{d}: distinct partitions but flexible {f} != rigid {r}")
        })?;
    }
    for rep in enumerate_rigid_classes(d).unwrap() {
        ensure(
            rotate_roles(&rotate_roles(&rotate_roles(&rep))) == rep,
            || format!("{d}: rotate^3 != id"),
        )?;
        ensure(mirror(&mirror(&rep)) == rep, || {
            format!("{d}: mirror^2 != id")
        })?;
        let key = class_key(&rep);
        ensure(class_key(&swap_colours(&swap_colours(&rep))) == key, || {
            format!("{d}: swap^2 not a conjugation")
        })?;
        let map = to_map(&rep, d).map_err(|e| format!("{d}: {e}"))?;
        ensure(
            map.euler_characteristic() == 2 - 2 * d.cover_genus() as i64,
            || format!("{d}: Euler identity fails"),
        )?;
        for _ in 0..100 {
            let g = random_perm(d.degree(), rng);
            ensure(class_key(&rep.conjugate(&g).unwrap()) == key, || {
                format!("{d}: class key changed under conjugation by {g}")
            })?;
        }
    }
    Ok(())
}

#[test]
fn criterion_4_invariant_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let data = cross_check_data();
    let result = data.iter().try_for_each(|d| check_invariants(d, &mut rng));
    criterion(
        "4 invariant suite",
        result.map(|_| format!("{} data checked", data.len())),
    );
}

fn table_identities(rep: &CountReport) -> Result<(), String> {
    let t = &rep.table;
    let (r, f, v) = rep.triple();
    let expect = |labels: &[&str], value: u64| {
        labels
            .iter()
            .try_for_each(|l| ensure(t[l] == value, || format!("{l} = {} expected {value}", t[l])))
    };
    ensure(t.len() == 12, || format!("{} labels", t.len()))?;
    expect(&["R", "R_+", "R_*+", "R_*"], v)?;
    expect(&["R_+^+", "R_*+^+"], f)?;
    expect(&["R_*+^*+", "R_*+^*", "R_*^*"], r)?;
    expect(&["R_*^+", "R^+"], 2 * f)?;
    expect(&["R_*^*+"], 2 * r)
}

#[test]
fn criterion_5_twelve_label_table() {
    let t = twelve_table(9, 6, 4).unwrap();
    let fixed = ensure(t["R^+"] == 12 && t["R_*^*+"] == 18, || {
        format!("R^+ = {}, R_*^*+ = {}", t["R^+"], t["R_*^*+"])
    });
    let data = cross_check_data();
    let all = data
        .iter()
        .chain(
            [
                datum("7; 3,2,1,1; 3,2,1,1; 7"),
                datum("8; 4,2,2; 2,2,1,1,1,1; 8"),
            ]
            .iter(),
        )
        .try_for_each(|d| table_identities(&count(d, 1).unwrap()).map_err(|e| format!("{d}: {e}")));
    criterion(
        "5 twelve-label table",
        fixed.and(all).map(|_| {
            format!(
                "(9,6,4) -> R^+ = 12, R_*^*+ = 18; {} tables checked",
                data.len() + 2
            )
        }),
    );
}

fn scan_output(degree: usize) -> (String, Duration) {
    let start = Instant::now();
    let out = hurwitz()
        .args(["scan", "--degree", &degree.to_string(), "--jobs", "4"])
        .output()
        .unwrap();
    let elapsed = start.elapsed();
    assert!(out.status.success(), "scan --degree {degree} failed");
    (String::from_utf8(out.stdout).unwrap(), elapsed)
}

#[test]
fn criterion_6_exceptional_detection() {
    let (four, _) = scan_output(4);
    let exceptional: Vec<&str> = four
        .lines()
        .filter(|l| l.starts_with("exceptional "))
        .collect();
    let oracle = brute_force_counts(&datum("4; 2,2; 2,2; 3,1")).unwrap();
    let deg4 = ensure(
        exceptional.len() == 1
            && exceptional[0].contains("4; 3,1; 2,2; 2,2")
            && exceptional[0].contains("rigid=0 flexible=0 very_flexible=0")
            && four.contains("exceptional: 1 / total:")
            && oracle == (0, 0, 0),
        || format!("degree 4 scan: {exceptional:?}, oracle {oracle:?}"),
    );
    let (five, _) = scan_output(5);
    let deg5 = ensure(five.contains("exceptional: 0 / total:"), || {
        format!("degree 5 summary: {:?}", five.lines().last())
    });
    let (seven, elapsed) = scan_output(7);
    let deg7 = ensure(seven.contains("exceptional: 0 / total:"), || {
        format!("degree 7 summary: {:?}", seven.lines().last())
    })
    .and(ensure(elapsed < Duration::from_secs(60), || {
        format!("degree 7 took {elapsed:?}")
    }));
    criterion(
        "6 exceptional detection",
        deg4.and(deg5).and(deg7).map(|_| {
            format!(
                "degree 4: 1 exceptional; degree 5: 0; degree 7: 0 ({}) in {elapsed:?}",
                seven.lines().last().unwrap_or_default()
            )
        }),
    );
}

#[test]
fn criterion_7_determinism() {
    let d = datum("7; 3,2,1,1; 3,2,1,1; 7");
    let snapshot = |jobs: usize| {
        let reps = enumerate_rigid_classes_with_jobs(&d, jobs).unwrap();
        let keys: Vec<_> = reps.iter().map(class_key).collect();
        let dots: Vec<String> = reps
            .iter()
            .map(|r| emit_dot(&to_map(r, &d).unwrap()))
            .collect();
        (count(&d, jobs).unwrap(), keys, dots)
    };
    let base = snapshot(1);
    let cli = |jobs: &str| {
        hurwitz()
            .args([
                "count",
                "7; 3,2,1,1; 3,2,1,1; 7",
                "--format",
                "json",
                "--jobs",
                jobs,
            ])
            .output()
            .unwrap()
            .stdout
    };
    let cli_base = cli("1");
    let result = [2, 8].iter().try_for_each(|&jobs| {
        ensure(snapshot(jobs) == base, || {
            format!("{jobs} workers differ from 1")
        })?;
        ensure(cli(&jobs.to_string()) == cli_base, || {
            format!("CLI output differs at {jobs} jobs")
        })
    });
    criterion(
        "7 determinism across 1, 2, 8 workers",
        result.map(|_| "counts, keys, DOT bytes and CLI JSON identical".to_string()),
    );
}
