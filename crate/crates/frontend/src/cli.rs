//! Command implementations shared by the binary and the tests.

use std::fmt::Write as _;

use parbelos_core::parbelos::{verify_corollaries, verify_sondow};
use parbelos_core::{ParbelosFigure, ParbelosInputs, Point, Rational, TheoremReport};
use serde::Serialize;

use crate::dsl::{parse_script, ParseError};
use crate::eval::{evaluate, EvalError, EvalReport};
use crate::scene::{Scene, SceneError};
use crate::svg::{render_svg, RenderOptions};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Parses `X,Y` with integer or `p/q` coordinates.
pub fn parse_point(text: &str) -> Result<Point, String> {
    let (x, y) = text.split_once(',').ok_or_else(|| format!("expected X,Y, got `{text}`"))?;
    let coord = |s: &str| s.trim().parse::<Rational>().map_err(|e| format!("bad coordinate `{s}`: {e}"));
    Ok(Point::new(coord(x)?, coord(y)?))
}

/// Compact `(x,y)` form used in command output.
pub fn fmt_point(p: &Point) -> String {
    format!("({},{})", p.x, p.y)
}

#[derive(Debug)]
pub enum ScriptOutcome {
    Parse(ParseError),
    Eval(EvalError),
    Done(EvalReport),
}

impl ScriptOutcome {
    pub fn exit_code(&self) -> i32 {
        match self {
            ScriptOutcome::Done(r) if r.overall => EXIT_PASS,
            ScriptOutcome::Done(_) => EXIT_FAIL,
            _ => EXIT_ERROR,
        }
    }
}

pub fn run_script(text: &str) -> ScriptOutcome {
    match parse_script(text) {
        Err(e) => ScriptOutcome::Parse(e),
        Ok(program) => match evaluate(&program) {
            Err(e) => ScriptOutcome::Eval(e),
            Ok(report) => ScriptOutcome::Done(report),
        },
    }
}

/// Human-readable summary of a script run; errors carry their position.
pub fn script_text(outcome: &ScriptOutcome) -> String {
    match outcome {
        ScriptOutcome::Parse(e) => format!("parse error at {e}\n"),
        ScriptOutcome::Eval(e) => format!("evaluation error at {e}\n"),
        ScriptOutcome::Done(report) => {
            let mut out = String::new();
            for a in &report.assertions {
                let verdict = if a.pass { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "line {}: {verdict} {}", a.line, a.pred);
            }
            let failed: Vec<String> = report.failed().map(|a| a.line.to_string()).collect();
            if failed.is_empty() {
                let _ = writeln!(out, "overall: PASS ({} assertions)", report.assertions.len());
            } else {
                let _ = writeln!(out, "overall: FAIL (failed at line {})", failed.join(", "));
            }
            out
        }
    }
}

pub fn render_script(text: &str, opts: &RenderOptions) -> anyhow::Result<String> {
    let report = match run_script(text) {
        ScriptOutcome::Parse(e) => anyhow::bail!("parse error at {e}"),
        ScriptOutcome::Eval(e) => anyhow::bail!("evaluation error at {e}"),
        ScriptOutcome::Done(r) => r,
    };
    let scene = Scene::from_report(&report)?;
    Ok(render_svg(&scene, opts)?)
}

#[derive(Debug, Serialize)]
pub struct ParbelosRun {
    pub figure: ParbelosFigure,
    pub tangency: TheoremReport,
    pub corollaries: TheoremReport,
    pub overall: bool,
}

impl ParbelosRun {
    pub fn new(inputs: &ParbelosInputs) -> parbelos_core::Result<ParbelosRun> {
        let figure = inputs.build()?;
        let tangency = verify_sondow(&figure);
        let corollaries = verify_corollaries(&figure);
        let overall = tangency.passed() && corollaries.passed();
        Ok(ParbelosRun { figure, tangency, corollaries, overall })
    }

    pub fn to_text(&self) -> String {
        let f = &self.figure;
        let mut out = String::new();
        for (label, p) in [
            ("C1", &f.c1),
            ("C2", &f.c2),
            ("C3", &f.c3),
            ("T1", &f.t1),
            ("T2", &f.t2),
            ("T3", &f.t3),
            ("O", &f.center_o),
            ("F", &f.focus_f),
            ("contact", &f.contact_t),
            ("H", &f.h),
            ("A1", &f.a1),
            ("A3", &f.a3),
        ] {
            let _ = writeln!(out, "{label}={}", fmt_point(p));
        }
        let _ = writeln!(out, "radius_sq={}", f.circumcircle_k.radius_sq());
        let corners: Vec<String> = f.square_r.iter().map(fmt_point).collect();
        let _ = writeln!(out, "R={}", corners.join(" "));
        let _ = writeln!(out, "diagonal: {}", f.diagonal);
        let _ = writeln!(out, "side={}", f.side.as_str());
        for report in [&self.tangency, &self.corollaries] {
            for check in &report.checks {
                let verdict = if check.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "{} {}: {verdict}", report.name, check.name);
            }
        }
        let _ = writeln!(out, "overall: {}", if self.overall { "PASS" } else { "FAIL" });
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report values always serialize")
    }

    pub fn to_svg(&self, opts: &RenderOptions) -> Result<String, SceneError> {
        render_svg(&Scene::parbelos(&self.figure)?, opts)
    }
}
