//! Exact evaluation of parsed construction scripts.

use indexmap::IndexMap;
use parbelos_core::euclid::{
    circle_through_points, circumcircle, dist_sq, intersect, is_collinear, line_through, on_circle, pedal_point,
    perpendicular_through, second_intersection,
};
use parbelos_core::parabola::{is_tangent, parabola_from_latus_rectum};
use parbelos_core::parbelos::build_parbelos;
use parbelos_core::{Circle, GeomError, Line, Parabola, Point, Rational, Side};
use serde::Serialize;
use thiserror::Error;

use crate::dsl::{Arg, ArgExpr, Constructor, Pos, Predicate, Program, StatementKind};
use crate::value::{Kind, Value};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssertionResult {
    #[serde(skip)]
    pub pos: Pos,
    pub line: usize,
    pub pred: String,
    pub pass: bool,
    pub witness: IndexMap<String, Value>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvalReport {
    pub bindings: IndexMap<String, Value>,
    pub assertions: Vec<AssertionResult>,
    pub overall: bool,
}

impl EvalReport {
    pub fn failed(&self) -> impl Iterator<Item = &AssertionResult> {
        self.assertions.iter().filter(|a| !a.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report values always serialize")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EvalErrorKind {
    #[error(transparent)]
    Geometry(#[from] GeomError),
    #[error("expected {expected}, found {found}")]
    Type { expected: Kind, found: Kind },
    #[error("unbound name `{0}`")]
    Unbound(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {}, column {}: {kind}", pos.line, pos.column)]
pub struct EvalError {
    pub pos: Pos,
    pub kind: EvalErrorKind,
}

struct Env<'a> {
    bindings: &'a IndexMap<String, Value>,
}

impl Env<'_> {
    fn value(&self, arg: &Arg) -> Result<Value, EvalErrorKind> {
        match &arg.expr {
            ArgExpr::Number(r) => Ok(Value::Rational(r.clone())),
            ArgExpr::Side(_) => Err(EvalErrorKind::Unbound(arg.expr.to_string())),
            ArgExpr::Ref(path) => {
                let mut v =
                    self.bindings.get(&path[0]).cloned().ok_or_else(|| EvalErrorKind::Unbound(path[0].clone()))?;
                for field in &path[1..] {
                    v = v.field(field).ok_or_else(|| EvalErrorKind::Unbound(path.join(".")))?;
                }
                Ok(v)
            }
        }
    }

    fn rational(&self, arg: &Arg) -> Result<Rational, EvalErrorKind> {
        match self.value(arg)? {
            Value::Rational(r) => Ok(r),
            other => Err(EvalErrorKind::Type { expected: Kind::Rational, found: other.kind() }),
        }
    }

    fn point(&self, arg: &Arg) -> Result<Point, EvalErrorKind> {
        match self.value(arg)? {
            Value::Point(p) => Ok(p),
            other => Err(EvalErrorKind::Type { expected: Kind::Point, found: other.kind() }),
        }
    }

    fn line(&self, arg: &Arg) -> Result<Line, EvalErrorKind> {
        match self.value(arg)? {
            Value::Line(l) => Ok(l),
            other => Err(EvalErrorKind::Type { expected: Kind::Line, found: other.kind() }),
        }
    }

    fn circle(&self, arg: &Arg) -> Result<Circle, EvalErrorKind> {
        match self.value(arg)? {
            Value::Circle(k) => Ok(k),
            other => Err(EvalErrorKind::Type { expected: Kind::Circle, found: other.kind() }),
        }
    }

    fn parabola(&self, arg: &Arg) -> Result<Parabola, EvalErrorKind> {
        match self.value(arg)? {
            Value::Parabola(g) => Ok(g),
            other => Err(EvalErrorKind::Type { expected: Kind::Parabola, found: other.kind() }),
        }
    }

    fn side(&self, arg: &Arg) -> Result<Side, EvalErrorKind> {
        match &arg.expr {
            ArgExpr::Side(s) => Ok(*s),
            _ => Err(EvalErrorKind::Unbound(arg.expr.to_string())),
        }
    }

    fn construct(&self, ctor: Constructor, a: &[Arg]) -> Result<Value, EvalErrorKind> {
        let v = match ctor {
            Constructor::Point => Point::new(self.rational(&a[0])?, self.rational(&a[1])?).into(),
            Constructor::Line => line_through(&self.point(&a[0])?, &self.point(&a[1])?)?.into(),
            Constructor::Circle3 => circumcircle(&self.point(&a[0])?, &self.point(&a[1])?, &self.point(&a[2])?)?.into(),
            Constructor::Circle2 => {
                circle_through_points(&self.point(&a[0])?, &self.point(&a[1])?, &self.rational(&a[2])?)?.into()
            }
            Constructor::ParabolaLatus => {
                parabola_from_latus_rectum(&self.point(&a[0])?, &self.point(&a[1])?, self.side(&a[2])?)?.into()
            }
            Constructor::TangentAt => self.parabola(&a[0])?.tangent_at(&self.point(&a[1])?)?.into(),
            Constructor::Pedal => pedal_point(&self.point(&a[0])?, &self.line(&a[1])?).into(),
            Constructor::Perp => perpendicular_through(&self.line(&a[0])?, &self.point(&a[1])?).into(),
            Constructor::Intersect => intersect(&self.line(&a[0])?, &self.line(&a[1])?)?.into(),
            Constructor::SecondIntersect => {
                second_intersection(&self.line(&a[0])?, &self.circle(&a[1])?, &self.point(&a[2])?)?.into()
            }
            Constructor::Parbelos => {
                build_parbelos(&self.point(&a[0])?, &self.point(&a[1])?, &self.point(&a[2])?, self.side(&a[3])?)?.into()
            }
        };
        Ok(v)
    }

    fn check(&self, pred: Predicate, a: &[Arg]) -> Result<(bool, IndexMap<String, Value>), EvalErrorKind> {
        let mut w = IndexMap::new();
        let pass = match pred {
            Predicate::Collinear => {
                let (p, q, r) = (self.point(&a[0])?, self.point(&a[1])?, self.point(&a[2])?);
                w.insert("det".into(), p.to(&q).cross(&p.to(&r)).into());
                is_collinear(&p, &q, &r)
            }
            Predicate::Concyclic => {
                let (k, p) = (self.circle(&a[0])?, self.point(&a[1])?);
                w.insert("dist_sq".into(), dist_sq(k.center(), &p).into());
                w.insert("radius_sq".into(), k.radius_sq().clone().into());
                on_circle(&k, &p)
            }
            Predicate::OnParabola => {
                let (g, p) = (self.parabola(&a[0])?, self.point(&a[1])?);
                w.insert("focus_dist_sq".into(), dist_sq(g.focus(), &p).into());
                w.insert("directrix_dist_sq".into(), g.directrix().dist_sq(&p).into());
                g.contains_point(&p)
            }
            Predicate::Tangent => {
                let (g, l) = (self.parabola(&a[0])?, self.line(&a[1])?);
                w.insert("focus_pedal".into(), pedal_point(g.focus(), &l).into());
                w.insert("supporting_line".into(), g.supporting_line().into());
                is_tangent(&g, &l)
            }
            Predicate::Equidistant => {
                let (p, q, r) = (self.point(&a[0])?, self.point(&a[1])?, self.point(&a[2])?);
                let (dq, dr) = (dist_sq(&p, &q), dist_sq(&p, &r));
                let pass = dq == dr;
                w.insert("dist_sq_1".into(), dq.into());
                w.insert("dist_sq_2".into(), dr.into());
                pass
            }
            Predicate::Perpendicular => {
                let (l1, l2) = (self.line(&a[0])?, self.line(&a[1])?);
                w.insert("normal_dot".into(), l1.normal().dot(&l2.normal()).into());
                l1.is_perpendicular(&l2)
            }
            Predicate::Eq => {
                let (x, y) = (self.value(&a[0])?, self.value(&a[1])?);
                if x.kind() != y.kind() {
                    return Err(EvalErrorKind::Type { expected: x.kind(), found: y.kind() });
                }
                let pass = x == y;
                w.insert("left".into(), x);
                w.insert("right".into(), y);
                pass
            }
        };
        Ok((pass, w))
    }
}

/// Runs the program in order, stopping at the first construction error.
pub fn evaluate(program: &Program) -> Result<EvalReport, EvalError> {
    let mut bindings = IndexMap::new();
    let mut assertions = Vec::new();
    for stmt in &program.statements {
        let at = |kind| EvalError { pos: stmt.pos, kind };
        match &stmt.kind {
            StatementKind::Let { name, ctor, args } => {
                let v = Env { bindings: &bindings }.construct(*ctor, args).map_err(at)?;
                bindings.insert(name.clone(), v);
            }
            StatementKind::Assert { pred, args } => {
                let (pass, witness) = Env { bindings: &bindings }.check(*pred, args).map_err(at)?;
                assertions.push(AssertionResult {
                    pos: stmt.pos,
                    line: stmt.pos.line,
                    pred: stmt.kind.call_text(),
                    pass,
                    witness,
                });
            }
        }
    }
    let overall = assertions.iter().all(|a| a.pass);
    Ok(EvalReport { bindings, assertions, overall })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_script;

    fn run(src: &str) -> Result<EvalReport, EvalError> {
        evaluate(&parse_script(src).unwrap())
    }

    const CANONICAL: &str = "\
let C1 = point(0, 0)
let C2 = point(1, 0)
let C3 = point(4, 0)
let P = parbelos(C1, C2, C3, left)
assert tangent(P.outer, P.diagonal)
assert concyclic(P.circumcircle_K, P.H)
";

    #[test]
    fn canonical_script_passes() {
        let report = run(CANONICAL).unwrap();
        assert!(report.overall);
        assert_eq!(report.assertions.len(), 2);
        assert_eq!(report.assertions[0].line, 5);
        assert_eq!(
            report.assertions[0].witness["focus_pedal"],
            Value::Point(Point::new(Rational::new(3, 2), Rational::from(-1)))
        );
    }

    #[test]
    fn rational_equality() {
        let report = run("assert eq(1/2, 2/4)").unwrap();
        assert!(report.overall);
        let report = run("assert eq(1/2, 1/3)").unwrap();
        assert!(!report.overall);
    }

    #[test]
    fn empty_program_passes_vacuously() {
        assert!(run("# nothing\n").unwrap().overall);
    }

    #[test]
    fn degenerate_triangle_stops_evaluation() {
        let src = "\
let A = point(0, 0)
let B = point(1, 1)
let C = point(2, 2)
let K = circle3(A, B, C)
assert eq(1, 1)
";
        let e = run(src).unwrap_err();
        assert_eq!(e.pos, Pos { line: 4, column: 1 });
        assert_eq!(e.kind, EvalErrorKind::Geometry(GeomError::DegenerateTriangle));
    }

    #[test]
    fn failing_assertion_is_a_verdict() {
        let src = "\
let A = point(0, 0)
let B = point(4, 0)
let G = parabola_latus(A, B, left)
let L = line(A, B)
assert tangent(G, L)
assert on_parabola(G, A)
";
        let report = run(src).unwrap();
        assert!(!report.overall);
        assert_eq!(report.failed().map(|a| a.line).collect::<Vec<_>>(), vec![5]);
    }

    #[test]
    fn json_schema_and_determinism() {
        let a = run(CANONICAL).unwrap().to_json();
        let b = run(CANONICAL).unwrap().to_json();
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["overall"], true);
        assert_eq!(v["bindings"]["C2"], serde_json::json!({"x": "1", "y": "0"}));
        assert_eq!(v["bindings"]["P"]["T2"], serde_json::json!({"x": "2", "y": "-2"}));
        assert_eq!(v["assertions"][1]["line"], 6);
        assert_eq!(v["assertions"][1]["pred"], "concyclic(P.circumcircle_K, P.H)");
        assert_eq!(v["assertions"][1]["witness"]["radius_sq"], "5/4");
        let order: Vec<_> =
            ["\"bindings\"", "\"assertions\"", "\"overall\""].iter().map(|k| a.find(k).unwrap()).collect();
        assert!(order.windows(2).all(|w| w[0] < w[1]));
    }
}
