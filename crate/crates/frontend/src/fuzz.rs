//! Seeded randomized invariant suite.
//!
//! Every case draws from its own ChaCha stream (`seed`, stream = case index),
//! so results do not depend on thread count or execution order.

use std::fmt;

use parbelos_core::euclid::{
    circle_point, circle_tangent_at, circle_through_points, circumcircle, dist_sq, intersect, is_collinear,
    line_through, on_circle, Vector,
};
use parbelos_core::parabola::parabola_from_latus_rectum;
use parbelos_core::parbelos::{similarity_transform, verify_corollaries, verify_sondow};
use parbelos_core::theorems::{converse_lambert, lambert_circumcircle_check, simson_check};
use parbelos_core::{GeomError, Parabola, ParbelosFigure, ParbelosInputs, Point, Rational, Side};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FuzzConfig {
    pub cases: usize,
    pub seed: u64,
    pub max_height: u64,
    pub parallel: bool,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig { cases: 1000, seed: 0, max_height: 10_000, parallel: false }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    Tangency,
    Corollaries,
    FtEqHt,
    LatusAngle,
    ProofReplay,
    Invariance,
    TangentAtParameter,
    SecantNotTangent,
    LambertForward,
    ConverseLambert,
    ConverseLambertDegenerate,
    Simson,
}

impl Property {
    pub const ALL: [Property; 12] = [
        Property::Tangency,
        Property::Corollaries,
        Property::FtEqHt,
        Property::LatusAngle,
        Property::ProofReplay,
        Property::Invariance,
        Property::TangentAtParameter,
        Property::SecantNotTangent,
        Property::LambertForward,
        Property::ConverseLambert,
        Property::ConverseLambertDegenerate,
        Property::Simson,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Tangency => "diagonal_tangency",
            Property::Corollaries => "corollaries",
            Property::FtEqHt => "ft_eq_ht",
            Property::LatusAngle => "latus_tangent_angle",
            Property::ProofReplay => "proof_replay",
            Property::Invariance => "similarity_invariance",
            Property::TangentAtParameter => "tangent_at_parameter",
            Property::SecantNotTangent => "secant_not_tangent",
            Property::LambertForward => "lambert_forward",
            Property::ConverseLambert => "converse_lambert",
            Property::ConverseLambertDegenerate => "converse_lambert_degenerate",
            Property::Simson => "simson",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzFailure {
    pub case: usize,
    pub property: Property,
    pub detail: String,
}

impl fmt::Display for FuzzFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case {} [{}]: {}", self.case, self.property, self.detail)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FuzzSummary {
    pub cases: usize,
    pub checks: usize,
    pub failures: Vec<FuzzFailure>,
}

impl FuzzSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

type Outcome = Result<(), String>;

fn ensure(cond: bool, detail: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(detail())
    }
}

fn geom(e: GeomError) -> String {
    format!("construction error: {e}")
}

/// Rational source with numerator and denominator heights bounded by `max_height`.
pub struct Gen {
    rng: ChaCha8Rng,
    max_height: i64,
}

impl Gen {
    pub fn new(seed: u64, stream: u64, max_height: u64) -> Gen {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Gen { rng, max_height: max_height.clamp(1, i64::MAX as u64) as i64 }
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.random_range(lo..=hi)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.random_bool(0.5)
    }

    pub fn rational(&mut self) -> Rational {
        let h = self.max_height;
        let n = self.int(-h, h);
        let d = self.int(1, h);
        Rational::new(n, d)
    }

    pub fn positive(&mut self) -> Rational {
        let h = self.max_height;
        let n = self.int(1, h);
        let d = self.int(1, h);
        Rational::new(n, d)
    }

    pub fn nonzero(&mut self) -> Rational {
        let r = self.positive();
        if self.coin() {
            -r
        } else {
            r
        }
    }

    pub fn point(&mut self) -> Point {
        Point::new(self.rational(), self.rational())
    }

    pub fn side(&mut self) -> Side {
        if self.coin() {
            Side::Left
        } else {
            Side::Right
        }
    }

    pub fn distinct_points(&mut self) -> (Point, Point) {
        let p = self.point();
        loop {
            let q = self.point();
            if q != p {
                return (p, q);
            }
        }
    }

    /// Cusps `C1`, `C1 + a·u`, `C1 + (a+b)·u` on a random rational line.
    pub fn parbelos_inputs(&mut self) -> ParbelosInputs {
        let c1 = self.point();
        let dir = loop {
            let v = Vector::new(self.rational(), self.rational());
            if !v.is_zero() {
                break v;
            }
        };
        let a = self.positive();
        let b = self.positive();
        let c2 = c1.offset(&dir.scale(&a));
        let c3 = c2.offset(&dir.scale(&b));
        ParbelosInputs::new(c1, c2, c3, self.side())
    }

    pub fn parabola(&mut self) -> Parabola {
        let (e1, e2) = self.distinct_points();
        let side = self.side();
        parabola_from_latus_rectum(&e1, &e2, side).expect("distinct latus endpoints")
    }

    /// Distinct parameters, so their points differ.
    pub fn distinct_parameters<const N: usize>(&mut self) -> [Rational; N] {
        let mut out: Vec<Rational> = Vec::with_capacity(N);
        while out.len() < N {
            let t = self.rational();
            if !out.contains(&t) {
                out.push(t);
            }
        }
        out.try_into().expect("length N")
    }

    /// Scale, rotation `(m²−n², 2mn)` up to sign, and shift.
    pub fn similarity(&mut self) -> (Rational, (Rational, Rational), Point) {
        let (m, n) = loop {
            let m = self.int(-12, 12);
            let n = self.int(-12, 12);
            if m != 0 || n != 0 {
                break (m, n);
            }
        };
        let p = Rational::from_integer(m * m - n * n);
        let q = Rational::from_integer(2 * m * n);
        let (p, q) = if self.coin() { (q, p) } else { (p, q) };
        (self.positive(), (p, q), self.point())
    }
}

/// Verdicts that should survive any orientation-preserving similarity,
/// including some that are false on every instance.
fn invariant_verdicts(fig: &ParbelosFigure) -> Vec<bool> {
    let mut v = verify_sondow(fig).verdicts();
    v.extend(verify_corollaries(fig).verdicts());
    let k = &fig.circumcircle_k;
    v.push(on_circle(k, &fig.c1));
    v.push(on_circle(k, &fig.h));
    v.push(fig.outer.contains_point(&fig.t2));
    v.push(fig.inner1.contains_point(&fig.contact_t));
    v.push(is_collinear(&fig.c1, &fig.t2, &fig.c3));
    v.push(is_collinear(&fig.c2, &fig.h, &fig.focus_f));
    v.push(fig.tangent_at_c1.is_perpendicular(&fig.tangent_at_c3));
    v.push(fig.outer.is_tangent(&fig.bisector));
    v
}

fn latus_angle(g: &Parabola) -> Outcome {
    let latus = g.canonical_elements().latus_endpoints;
    let u = latus.start().to(latus.end());
    for e in [latus.start(), latus.end()] {
        let d = g.tangent_at(e).map_err(geom)?.direction();
        let lhs = d.dot(&u).square() * Rational::from_integer(2);
        let rhs = d.norm_sq() * u.norm_sq();
        ensure(lhs == rhs, || format!("tangent at latus endpoint {e}: 2(d·u)² = {lhs}, |d|²|u|² = {rhs}"))?;
    }
    Ok(())
}

pub fn check_parbelos_instance(inputs: &ParbelosInputs) -> Vec<(Property, Outcome)> {
    let fig = match inputs.build() {
        Ok(fig) => fig,
        Err(e) => return vec![(Property::Tangency, Err(geom(e)))],
    };
    let tangency = verify_sondow(&fig);
    let corollaries = verify_corollaries(&fig);
    let ft = dist_sq(&fig.focus_f, &fig.contact_t);
    let ht = dist_sq(&fig.h, &fig.contact_t);
    let quarter = [&fig.inner1, &fig.inner2, &fig.outer].into_iter().try_for_each(latus_angle);
    vec![
        (Property::Tangency, ensure(tangency.passed(), || tangency.failure_detail().unwrap_or_default().to_string())),
        (
            Property::Corollaries,
            ensure(corollaries.passed(), || corollaries.failure_detail().unwrap_or_default().to_string()),
        ),
        (Property::FtEqHt, ensure(ft == ht, || format!("FT² = {ft}, HT² = {ht}"))),
        (Property::LatusAngle, quarter),
        (Property::ProofReplay, proof_replay(&fig)),
    ]
}

/// Converse Lambert on the outer parabola, its end tangents and K yields the diagonal.
pub fn proof_replay(fig: &ParbelosFigure) -> Outcome {
    let (line, _) =
        converse_lambert(&fig.outer, &fig.tangent_at_c1, &fig.tangent_at_c3, &fig.circumcircle_k).map_err(geom)?;
    ensure(line == fig.diagonal, || format!("replayed chord {line} differs from diagonal {}", fig.diagonal))
}

pub fn check_invariance(gen: &mut Gen, inputs: &ParbelosInputs) -> Outcome {
    let (scale, rotation, shift) = gen.similarity();
    let moved = similarity_transform(inputs, scale, rotation, shift).map_err(geom)?;
    let before = invariant_verdicts(&inputs.build().map_err(geom)?);
    let after = invariant_verdicts(&moved.build().map_err(geom)?);
    ensure(before == after, || format!("verdicts {before:?} became {after:?}"))
}

pub fn check_tangent_at_parameter(g: &Parabola, t: &Rational) -> Outcome {
    let p = g.point_at_parameter(t);
    ensure(g.contains_point(&p), || format!("point {p} at parameter {t} is off the parabola"))?;
    let l = g.tangent_at(&p).map_err(geom)?;
    ensure(g.is_tangent(&l), || format!("tangent_at({p}) = {l} fails is_tangent"))
}

pub fn check_secant(g: &Parabola, s: &Rational, t: &Rational) -> Outcome {
    let l = line_through(&g.point_at_parameter(s), &g.point_at_parameter(t)).map_err(geom)?;
    ensure(!g.is_tangent(&l), || format!("secant {l} through parameters {s}, {t} reported tangent"))
}

pub fn check_lambert(g: &Parabola, ts: &[Rational; 3]) -> Outcome {
    let tangents: Vec<_> =
        ts.iter().map(|t| g.tangent_at(&g.point_at_parameter(t))).collect::<Result<_, _>>().map_err(geom)?;
    let report = lambert_circumcircle_check(g, &tangents[0], &tangents[1], &tangents[2]).map_err(geom)?;
    ensure(report.passed(), || report.failure_detail().unwrap_or_default().to_string())
}

/// Runs converse Lambert for a circle through the focus and `I = l1 ∩ l2`
/// whose center sits at bisector offset `t`.
pub fn check_converse(g: &Parabola, s: &Rational, u: &Rational, t: &Rational) -> Outcome {
    let l1 = g.tangent_at(&g.point_at_parameter(s)).map_err(geom)?;
    let l2 = g.tangent_at(&g.point_at_parameter(u)).map_err(geom)?;
    let i = intersect(&l1, &l2).map_err(geom)?;
    let k = circle_through_points(g.focus(), &i, t).map_err(geom)?;
    let (line, _) = converse_lambert(g, &l1, &l2, &k).map_err(geom)?;
    ensure(g.is_tangent(&line), || format!("converse chord {line} not tangent"))
}

/// The circle through the focus touching `l1` at `I`, so `H1 = I`; the
/// result must be `l2` itself.
pub fn check_converse_degenerate(g: &Parabola, s: &Rational, u: &Rational) -> Outcome {
    let l1 = g.tangent_at(&g.point_at_parameter(s)).map_err(geom)?;
    let l2 = g.tangent_at(&g.point_at_parameter(u)).map_err(geom)?;
    let i = intersect(&l1, &l2).map_err(geom)?;
    let k = circle_tangent_at(&l1, &i, g.focus()).map_err(geom)?;
    let (line, report) = converse_lambert(g, &l1, &l2, &k).map_err(geom)?;
    ensure(report.get_witness("H1") == Some(&i.clone().into()), || "H1 differs from I".to_string())?;
    ensure(g.is_tangent(&line) && line == l2, || format!("degenerate chord {line} is not {l2}"))
}

pub fn check_simson(gen: &mut Gen) -> Outcome {
    let (a, b, c) = loop {
        let (a, b) = gen.distinct_points();
        let c = gen.point();
        if !is_collinear(&a, &b, &c) {
            break (a, b, c);
        }
    };
    let k = circumcircle(&a, &b, &c).map_err(geom)?;
    let slope = gen.rational();
    let on = circle_point(&k, &a, Some(&slope)).map_err(geom)?;
    let off = gen.point();
    for p in [on, off] {
        let report = simson_check(&p, &a, &b, &c).map_err(geom)?;
        ensure(report.passed(), || format!("pedal collinearity disagrees with concyclicity for {p}"))?;
    }
    Ok(())
}

/// One instance of every property, drawn from stream `case`.
pub fn run_case(cfg: &FuzzConfig, case: usize) -> Vec<(Property, Outcome)> {
    let mut gen = Gen::new(cfg.seed, case as u64, cfg.max_height);
    let inputs = gen.parbelos_inputs();
    let mut out = check_parbelos_instance(&inputs);
    out.push((Property::Invariance, check_invariance(&mut gen, &inputs)));

    let g = gen.parabola();
    let [s, t, u] = gen.distinct_parameters::<3>();
    out.push((Property::TangentAtParameter, check_tangent_at_parameter(&g, &s)));
    out.push((Property::SecantNotTangent, check_secant(&g, &s, &t)));
    out.push((Property::LambertForward, check_lambert(&g, &[s.clone(), t.clone(), u.clone()])));
    let offset = gen.rational();
    out.push((Property::ConverseLambert, check_converse(&g, &s, &t, &offset)));
    out.push((Property::ConverseLambertDegenerate, check_converse_degenerate(&g, &s, &t)));
    out.push((Property::Simson, check_simson(&mut gen)));
    out
}

pub fn run_fuzz(cfg: &FuzzConfig) -> FuzzSummary {
    let per_case = |case: usize| -> (usize, Vec<FuzzFailure>) {
        let results = run_case(cfg, case);
        let checks = results.len();
        let failures = results
            .into_iter()
            .filter_map(|(property, outcome)| outcome.err().map(|detail| FuzzFailure { case, property, detail }))
            .collect();
        (checks, failures)
    };
    let results: Vec<(usize, Vec<FuzzFailure>)> = if cfg.parallel {
        (0..cfg.cases).into_par_iter().map(per_case).collect()
    } else {
        (0..cfg.cases).map(per_case).collect()
    };
    let mut summary = FuzzSummary { cases: cfg.cases, ..FuzzSummary::default() };
    for (checks, failures) in results {
        summary.checks += checks;
        summary.failures.extend(failures);
    }
    summary
}
