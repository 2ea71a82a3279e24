//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::collections::BTreeSet;
use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rossby_resonance::cli::run_with;
use rossby_resonance::cluster_graph::ClusterReport;
use rossby_resonance::exact_core::{is_resonant_lattice, quartic_coeffs, residual};
use rossby_resonance::partner_search::jsonl::read_report;
use rossby_resonance::partner_search::{find_partners, naive_partner_oracle, quadrant_points};
use rossby_resonance::{Triad, Wavenumber};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn w(a: i64, b: i64) -> Wavenumber {
    Wavenumber::new(a, b)
}

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("rossby-resonance").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8_lossy(&out).into_owned(),
        String::from_utf8_lossy(&err).into_owned(),
    )
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn class(n: Wavenumber) -> Wavenumber {
    if n.n1 < 0 {
        n.neg()
    } else {
        n
    }
}

fn classes(pts: &[(i64, i64)]) -> BTreeSet<Wavenumber> {
    pts.iter().map(|&(a, b)| class(w(a, b))).collect()
}

fn golden_triads() -> Outcome {
    let triads = [
        [(1, 11), (8, -34), (-9, 23)],
        [(3, 19), (32, -44), (-35, 25)],
        [(8, 26), (27, -51), (-35, 25)],
        [(1, -8), (15, 10), (-16, -2)],
        [(3, -11), (13, 13), (-16, -2)],
        [(5, 25), (27, -21), (-32, -4)],
    ];
    cli(&["check", "1", "11", "-8", "34"]);
    let mut slowest = Duration::ZERO;
    for [a, b, c] in triads {
        ensure!(
            a.0 + b.0 + c.0 == 0 && a.1 + b.1 + c.1 == 0,
            "{a:?} {b:?} {c:?} do not sum to zero"
        );
        // n = -c splits as a + b.
        let args = [-c.0, -c.1, a.0, a.1].map(|v| v.to_string());
        let args: Vec<&str> = std::iter::once("check")
            .chain(args.iter().map(String::as_str))
            .collect();
        let t = Instant::now();
        let (code, out, _) = cli(&args);
        let dt = t.elapsed();
        slowest = slowest.max(dt);
        ensure!(
            code == 0 && out == "resonant, residual 0/1\n",
            "check {args:?} gave {code}: {out}"
        );
        ensure!(dt < Duration::from_millis(1), "check {args:?} took {:.3} ms", ms(dt));
    }
    Ok(format!(
        "{} triads with residual 0/1, slowest check {:.3} ms",
        triads.len(),
        ms(slowest)
    ))
}

fn cluster_reproduction(dir: &Path) -> Outcome {
    let jsonl = dir.join("lambda60.jsonl");
    let json = dir.join("clusters60.json");
    let t = Instant::now();
    let (code, _, err) = cli(&[
        "enumerate",
        "--max-norm",
        "60",
        "--jobs",
        "1",
        "--out",
        jsonl.to_str().unwrap(),
    ]);
    ensure!(code == 0, "enumerate failed: {err}");
    let (code, _, err) = cli(&[
        "clusters",
        "--in",
        jsonl.to_str().unwrap(),
        "--out",
        json.to_str().unwrap(),
    ]);
    ensure!(code == 0, "clusters failed: {err}");
    let elapsed = t.elapsed();
    let report: ClusterReport = serde_json::from_slice(&std::fs::read(&json).unwrap()).map_err(|e| e.to_string())?;

    let omega1 = classes(&[(1, 11), (8, -34), (-9, 23)]);
    let omega2 = classes(&[(3, 19), (32, -44), (-35, 25), (8, 26), (27, -51)]);
    let find = |target: &BTreeSet<Wavenumber>| {
        report.clusters.iter().position(|c| {
            let got: BTreeSet<Wavenumber> = c.members.iter().map(|m| m.rep().clone()).collect();
            got == *target
        })
    };
    let i1 = find(&omega1).ok_or("no component equal to the first finite cluster")?;
    let i2 = find(&omega2).ok_or("no component equal to the second finite cluster")?;
    let (l1, l2) = (report.clusters[i1].lambda_seq[0], report.clusters[i2].lambda_seq[0]);
    ensure!(l1 == 122 && l2 == 370, "lambda_1 values {l1}, {l2}");
    ensure!(i1 < i2, "cluster order {i1} vs {i2}");
    ensure!(
        elapsed < Duration::from_secs(300),
        "took {:.1} s",
        elapsed.as_secs_f64()
    );
    Ok(format!(
        "components #{i1} (lambda_1 = {l1}) and #{i2} (lambda_1 = {l2}) of {}, {:.1} s single-threaded",
        report.clusters.len(),
        elapsed.as_secs_f64()
    ))
}

fn axis_theorem(dir: &Path) -> Outcome {
    let t = Instant::now();
    let (code, out, err) = cli(&["--format", "json", "verify-axis", "--max", "200"]);
    let elapsed = t.elapsed();
    ensure!(code == 0, "verify-axis exit {code}: {err}");
    let v: serde_json::Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    ensure!(
        v["counterexamples"].as_array().is_some_and(Vec::is_empty),
        "counterexamples: {}",
        v["counterexamples"]
    );
    let checked = v["checked"].as_u64().unwrap_or(0);

    let mut members = 0;
    for n in [12, 60] {
        let path = dir.join(format!("axis{n}.jsonl"));
        let (code, _, err) = cli(&[
            "enumerate",
            "--max-norm",
            &n.to_string(),
            "--out",
            path.to_str().unwrap(),
        ]);
        ensure!(code == 0, "enumerate {n}: {err}");
        let report =
            read_report(std::io::BufReader::new(std::fs::File::open(&path).unwrap())).map_err(|e| e.to_string())?;
        ensure!(
            report.lambda_members.iter().all(|m| m.n2 != 0),
            "on-axis member at max_norm {n}"
        );
        ensure!(
            report.triads.keys().all(|t| t.members().iter().all(|m| m.n2 != 0)),
            "on-axis triad leg at max_norm {n}"
        );
        members += report.lambda_members.len();
    }
    Ok(format!(
        "{checked} disk points for n1 <= 200 in {:.2} s, 0 counterexamples; {members} box members at N = 12, 60, none with n2 = 0",
        elapsed.as_secs_f64()
    ))
}

fn diophantine_lemma() -> Outcome {
    let t = Instant::now();
    let (code, out, err) = cli(&["verify-lemma", "--max", "500"]);
    let elapsed = t.elapsed();
    ensure!(code == 0, "exit {code}: {out}{err}");
    ensure!(out.trim() == "0 counterexamples / 125250 cases", "output {out:?}");
    ensure!(
        elapsed <= Duration::from_secs(10),
        "took {:.2} s",
        elapsed.as_secs_f64()
    );
    Ok(format!("{} in {:.2} s", out.trim(), elapsed.as_secs_f64()))
}

fn infinite_family(dir: &Path) -> Outcome {
    let (code, out, err) = cli(&["--format", "json", "family", "--m-max", "8", "--l-max", "8"]);
    ensure!(code == 0, "family exit {code}: {err}");
    let triads: Vec<Triad> = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    ensure!(triads.len() == 56, "{} triads", triads.len());
    for t in &triads {
        let [a, _, c] = t.members();
        ensure!(
            matches!(is_resonant_lattice(&c.neg(), a), Ok(true)),
            "{t} failed the exact check"
        );
    }

    let path = dir.join("family17.jsonl");
    let (code, _, err) = cli(&["enumerate", "--max-norm", "17", "--out", path.to_str().unwrap()]);
    ensure!(code == 0, "enumerate 17: {err}");
    let report =
        read_report(std::io::BufReader::new(std::fs::File::open(&path).unwrap())).map_err(|e| e.to_string())?;
    let small = [(w(1, 8), w(16, -2)), (w(16, 2), w(1, -8))];
    for (n, k) in small {
        let t = rossby_resonance::exact_core::canonical_triad(&n, &k).map_err(|e| e.to_string())?;
        ensure!(triads.contains(&t), "{t} missing from family output");
        ensure!(report.triads.contains_key(&t), "{t} missing from enumerate 17");
    }
    Ok("56 triads pass the exact check; (m,l) = (1,2), (2,1) present in enumerate --max-norm 17".into())
}

fn oracle_equivalence() -> Outcome {
    let t = Instant::now();
    let points = quadrant_points(20);
    let mut partners = 0;
    for n in &points {
        let fast = find_partners(n).map_err(|e| e.to_string())?;
        let slow = naive_partner_oracle(n).map_err(|e| e.to_string())?;
        ensure!(fast == slow, "mismatch at {n}: {fast:?} vs {slow:?}");
        partners += fast.len();
    }
    let elapsed = t.elapsed();
    ensure!(
        elapsed <= Duration::from_secs(60),
        "took {:.1} s",
        elapsed.as_secs_f64()
    );
    Ok(format!(
        "{} quadrant points agree ({partners} partners) in {:.2} s",
        points.len(),
        elapsed.as_secs_f64()
    ))
}

struct Sampler {
    rng: ChaCha8Rng,
    known: Vec<Triad>,
}

impl Sampler {
    /// An admissible pair; resonant about half the time.
    fn pair(&mut self) -> (Wavenumber, Wavenumber) {
        loop {
            let (n, k) = if self.rng.gen_bool(0.5) {
                let t = self.known.choose(&mut self.rng).unwrap();
                let mut m = t.members().to_vec();
                m.shuffle(&mut self.rng);
                let s = self.rng.gen_range(1..=4i64);
                let (a, c) = (m[0].checked_scale(&s).unwrap(), m[2].checked_scale(&s).unwrap());
                (c.neg(), a)
            } else {
                let mut r = || self.rng.gen_range(-300i64..=300);
                (w(r(), r()), w(r(), r()))
            };
            if n.n1 != 0 && k.n1 != 0 && n.n1 != k.n1 {
                return (n, k);
            }
        }
    }
}

fn property_suite() -> Outcome {
    const CASES: usize = 1000;
    let known = rossby_resonance::partner_search::enumerate_lambda(30)
        .map_err(|e| e.to_string())?
        .triad_list();
    let mut s = Sampler {
        rng: ChaCha8Rng::seed_from_u64(0x7261_6e64),
        known,
    };
    let res = |n: &Wavenumber, k: &Wavenumber| is_resonant_lattice(n, k).unwrap();
    let mut resonant_seen = 0;

    let mut prop = |name: &str, f: &dyn Fn(&Wavenumber, &Wavenumber) -> bool| -> Result<(), String> {
        for i in 0..CASES {
            let (n, k) = s.pair();
            if res(&n, &k) {
                resonant_seen += 1;
            }
            ensure!(f(&n, &k), "{name} violated at case {i}: n = {n}, k = {k}");
        }
        Ok(())
    };

    prop("leg symmetry", &|n, k| res(n, k) == res(n, &n.checked_sub(k).unwrap()))?;
    prop("negation", &|n, k| res(n, k) == res(&n.neg(), &k.neg()))?;
    prop("meridional mirror", &|n, k| {
        res(n, k) == res(&n.mirror_meridional(), &k.mirror_meridional())
    })?;
    prop("zonal mirror", &|n, k| {
        res(n, k) == res(&n.mirror_zonal(), &k.mirror_zonal())
    })?;
    for j in [2i64, 3, 5] {
        prop(&format!("scaling by {j}"), &|n, k| {
            res(n, k) == res(&n.checked_scale(&j).unwrap(), &k.checked_scale(&j).unwrap())
        })?;
    }
    prop("residual zero iff resonant", &|n, k| {
        let r = residual(&n.widen::<BigInt>(), &k.widen::<BigInt>()).unwrap();
        r.is_zero() == res(n, k)
    })?;
    prop("quartic root iff resonant", &|n, k| {
        let q = quartic_coeffs(&n.widen::<BigInt>(), &BigInt::from(k.n1)).unwrap();
        (q.eval(&BigInt::from(k.n2)).unwrap() == BigInt::from(0)) == res(n, k)
    })?;
    let total = 10 * CASES;
    ensure!(resonant_seen > total / 4, "only {resonant_seen} resonant cases drawn");
    Ok(format!(
        "10 properties x {CASES} cases, {resonant_seen} of {total} resonant, 0 violations"
    ))
}

fn determinism(dir: &Path) -> Outcome {
    let mut bodies = Vec::new();
    for jobs in ["1", "8"] {
        let path = dir.join(format!("det{jobs}.jsonl"));
        let (code, _, err) = cli(&[
            "enumerate",
            "--max-norm",
            "40",
            "--jobs",
            jobs,
            "--out",
            path.to_str().unwrap(),
        ]);
        ensure!(code == 0, "jobs {jobs}: {err}");
        bodies.push(std::fs::read(&path).unwrap());
    }
    ensure!(bodies[0] == bodies[1], "jobs 1 and jobs 8 outputs differ");
    Ok(format!("{} bytes identical for --jobs 1 and --jobs 8", bodies[0].len()))
}

fn main() -> ExitCode {
    let dir = tempfile::tempdir().expect("temp dir");
    let criteria: Vec<Criterion> = vec![
        ("1 golden triads", Box::new(golden_triads)),
        ("2 cluster reproduction", Box::new(|| cluster_reproduction(dir.path()))),
        ("3 axis theorem", Box::new(|| axis_theorem(dir.path()))),
        ("4 diophantine lemma", Box::new(diophantine_lemma)),
        ("5 infinite family", Box::new(|| infinite_family(dir.path()))),
        ("6 oracle equivalence", Box::new(oracle_equivalence)),
        ("7 property suite", Box::new(property_suite)),
        ("8 determinism", Box::new(|| determinism(dir.path()))),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        match check() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
