//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use parbelos_core::euclid::{dist_sq, intersect};
use parbelos_core::parbelos::{verify_corollaries, verify_sondow};
use parbelos_frontend::cli::ParbelosRun;
use parbelos_frontend::fuzz::{
    check_converse, check_converse_degenerate, check_invariance, check_lambert, check_secant,
    check_tangent_at_parameter, proof_replay, Gen,
};
use parbelos_frontend::{RenderOptions, Scene};

const SEED: u64 = 0x5eed;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_parbelos"))
}

fn manifest_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    if elapsed <= limit {
        Ok(())
    } else {
        Err(format!("took {elapsed:.2?}, limit {limit:?}"))
    }
}

/// Runs `n` numbered trials and reports the first failure.
fn trials(n: usize, mut f: impl FnMut(usize) -> Result<(), String>) -> Result<(), String> {
    for i in 0..n {
        f(i).map_err(|e| format!("trial {i}: {e}"))?;
    }
    Ok(())
}

fn canonical_instance() -> Verdict {
    let start = Instant::now();
    let o =
        bin().args(["parbelos", "--c1", "0,0", "--c2", "1,0", "--c3", "4,0"]).output().map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let out = String::from_utf8_lossy(&o.stdout);
    let expected = [
        "T1=(1/2,-1/2)",
        "T2=(2,-2)",
        "T3=(5/2,-3/2)",
        "F=(2,0)",
        "O=(3/2,-1)",
        "radius_sq=5/4",
        "contact=(1,-3/4)",
        "H=(1,-2)",
        "A1=(1/2,-3/2)",
        "A3=(5/2,-1/2)",
    ];
    for line in expected {
        if !out.lines().any(|l| l == line) {
            return Err(format!("missing `{line}`"));
        }
    }
    let checks = out.lines().filter(|l| l.ends_with(": PASS") && !l.starts_with("overall")).count();
    if o.status.code() != Some(0) || checks != 11 || out.lines().any(|l| l.ends_with("FAIL")) {
        return Err(format!("expected 11 passing checks and exit 0, got {checks}, {:?}", o.status.code()));
    }
    within(elapsed, Duration::from_millis(100))?;
    Ok(format!("10 coordinates exact, 11 checks pass, {elapsed:.1?}"))
}

fn tangency_fuzz() -> Verdict {
    let start = Instant::now();
    trials(1000, |i| {
        let fig = Gen::new(SEED, i as u64, 10_000).parbelos_inputs().build().map_err(|e| e.to_string())?;
        for report in [verify_sondow(&fig), verify_corollaries(&fig)] {
            if !report.passed() {
                return Err(report.failure_detail().unwrap_or_default().to_string());
            }
        }
        Ok(())
    })?;
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(60))?;
    Ok(format!("1000 instances, heights <= 10^4, 0 failures, {elapsed:.1?}"))
}

fn tangent_suite() -> Verdict {
    let start = Instant::now();
    trials(500, |i| {
        let mut gen = Gen::new(SEED + 3, i as u64, 1000);
        let g = gen.parabola();
        let [s, t] = gen.distinct_parameters::<2>();
        check_tangent_at_parameter(&g, &s)?;
        check_secant(&g, &s, &t)
    })?;
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(30))?;
    Ok(format!("500 tangents accepted, 500 secants rejected, {elapsed:.1?}"))
}

fn lambert_forward() -> Verdict {
    trials(500, |i| {
        let mut gen = Gen::new(SEED + 4, i as u64, 1000);
        let g = gen.parabola();
        check_lambert(&g, &gen.distinct_parameters::<3>())
    })?;
    Ok("500 tangent triples".to_string())
}

fn converse_lambert() -> Verdict {
    trials(20, |pair| {
        let mut gen = Gen::new(SEED + 5, pair as u64, 1000);
        let g = gen.parabola();
        let [s, u] = gen.distinct_parameters::<2>();
        for _ in 0..100 {
            check_converse(&g, &s, &u, &gen.rational())?;
        }
        check_converse_degenerate(&g, &s, &u)?;
        check_converse_degenerate(&g, &u, &s)
    })?;
    Ok("20 tangent pairs x 100 circles, plus 40 touching circles (H = I)".to_string())
}

fn proof_replay_suite() -> Verdict {
    trials(200, |i| {
        let fig = Gen::new(SEED + 6, i as u64, 10_000).parbelos_inputs().build().map_err(|e| e.to_string())?;
        proof_replay(&fig)
    })?;
    Ok("200 instances: replayed chord equals the diagonal".to_string())
}

fn invariance() -> Verdict {
    trials(100, |i| {
        let mut gen = Gen::new(SEED + 7, i as u64, 1000);
        let inputs = gen.parbelos_inputs();
        check_invariance(&mut gen, &inputs)
    })?;
    Ok("100 instance/similarity pairs".to_string())
}

fn ft_eq_ht() -> Verdict {
    trials(1000, |i| {
        let fig = Gen::new(SEED, i as u64, 10_000).parbelos_inputs().build().map_err(|e| e.to_string())?;
        let ft = dist_sq(&fig.focus_f, &fig.contact_t);
        let ht = dist_sq(&fig.h, &fig.contact_t);
        if ft == ht {
            Ok(())
        } else {
            Err(format!("FT^2 = {ft}, HT^2 = {ht}"))
        }
    })?;
    Ok("1000 fuzz instances".to_string())
}

fn latus_angle() -> Verdict {
    let mut endpoints = 0;
    trials(1000, |i| {
        let fig = Gen::new(SEED, i as u64, 10_000).parbelos_inputs().build().map_err(|e| e.to_string())?;
        for g in [&fig.inner1, &fig.inner2, &fig.outer] {
            let latus = g.canonical_elements().latus_endpoints;
            let u = latus.start().to(latus.end());
            for e in [latus.start(), latus.end()] {
                let d = g.tangent_at(e).map_err(|e| e.to_string())?.direction();
                if d.dot(&u).square() * parbelos_core::Rational::from_integer(2) != d.norm_sq() * u.norm_sq() {
                    return Err(format!("tangent at {e} is not at 45 degrees to the latus rectum"));
                }
                endpoints += 1;
            }
        }
        Ok(())
    })?;
    Ok(format!("{endpoints} latus endpoints"))
}

fn dsl_script() -> Verdict {
    let script: PathBuf = manifest_dir().join("scripts/sondow.geo");
    let text = fs::read_to_string(&script).map_err(|e| e.to_string())?;
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let run = |path: &Path| bin().arg("check").arg(path).output().map_err(|e| e.to_string());

    let ok = run(&script)?;
    if ok.status.code() != Some(0) {
        return Err(format!("shipped script exited {:?}", ok.status.code()));
    }

    let mutated = dir.path().join("mutated.geo");
    fs::write(&mutated, text.replace("let T2 = point(2, -2)", "let T2 = point(2, -3)")).map_err(|e| e.to_string())?;
    let bad = run(&mutated)?;
    let err = String::from_utf8_lossy(&bad.stderr);
    if bad.status.code() != Some(1) || !err.contains(":18: assertion failed") {
        return Err(format!("mutated copy: exit {:?}, stderr {err}", bad.status.code()));
    }

    let malformed = dir.path().join("malformed.geo");
    fs::write(&malformed, text.replace("let C3 = point(4, 0)", "let C3 = point(4 0)")).map_err(|e| e.to_string())?;
    let broken = run(&malformed)?;
    let err = String::from_utf8_lossy(&broken.stderr);
    if broken.status.code() != Some(2) || !err.contains("line 4, column 18") {
        return Err(format!("malformed copy: exit {:?}, stderr {err}", broken.status.code()));
    }
    Ok("exit 0 / 1 (line 18) / 2 (line 4, column 18)".to_string())
}

fn svg_golden() -> Verdict {
    let golden =
        fs::read_to_string(manifest_dir().join("tests/golden/parbelos_canonical.svg")).map_err(|e| e.to_string())?;
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for k in 0..2 {
        let path = dir.path().join(format!("run{k}.svg"));
        let o = bin()
            .args(["parbelos", "--c1", "0,0", "--c2", "1,0", "--c3", "4,0", "--svg"])
            .arg(&path)
            .output()
            .map_err(|e| e.to_string())?;
        if o.status.code() != Some(0) {
            return Err("render run failed".to_string());
        }
        outputs.push(fs::read(&path).map_err(|e| e.to_string())?);
    }
    if outputs[0] != outputs[1] || outputs[0] != golden.as_bytes() {
        return Err("rendered document differs between runs or from the golden file".to_string());
    }

    let inputs = parbelos_core::ParbelosInputs::new(
        parbelos_core::Point::from_ints(0, 0),
        parbelos_core::Point::from_ints(1, 0),
        parbelos_core::Point::from_ints(4, 0),
        parbelos_core::Side::Left,
    );
    let run = ParbelosRun::new(&inputs).map_err(|e| e.to_string())?;
    let scene = Scene::parbelos(&run.figure).map_err(|e| e.to_string())?;
    let arcs: Vec<_> = scene.arcs().collect();
    for arc in &arcs {
        let exact = intersect(arc.start_tangent(), arc.end_tangent()).map_err(|e| e.to_string())?;
        if arc.control() != &exact {
            return Err(format!("control {} differs from tangent intersection {exact}", arc.control()));
        }
    }
    let outer = arcs.last().ok_or("no arcs")?;
    if arcs.len() != 3 || outer.control() != &run.figure.t2 {
        return Err("outer arc control point is not T2".to_string());
    }
    let svg = run.to_svg(&RenderOptions::default()).map_err(|e| e.to_string())?;
    if svg.as_bytes() != golden.as_bytes() {
        return Err("in-process render differs from golden".to_string());
    }
    Ok("byte-identical across runs, 3 exact control points, outer control = T2 = (2,-2)".to_string())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("canonical instance", canonical_instance),
        ("tangency fuzz", tangency_fuzz),
        ("tangent characterisation", tangent_suite),
        ("lambert forward", lambert_forward),
        ("converse lambert", converse_lambert),
        ("proof replay", proof_replay_suite),
        ("similarity invariance", invariance),
        ("FT = HT", ft_eq_ht),
        ("45-degree latus tangents", latus_angle),
        ("DSL script", dsl_script),
        ("SVG golden", svg_golden),
    ];
    let mut failed = 0;
    for (i, (name, criterion)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = criterion();
        let elapsed = start.elapsed();
        match verdict {
            Ok(detail) => println!("[PASS] {:>2}. {name}: {detail} ({elapsed:.2?})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {:>2}. {name}: {detail} ({elapsed:.2?})", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
