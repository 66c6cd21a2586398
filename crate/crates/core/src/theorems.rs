//! Executable forms of the Simson–Wallace theorem, Lambert's theorem on the
//! parabola, and its converse.
//!
//! Each check re-walks the argument as data: the intermediate points, lines
//! and circles are kept in the report as witnesses.

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::euclid::{
    circumcircle, intersect, is_collinear, line_through, on_circle, pedal_point, second_intersection, Circle, Line,
    Point,
};
use crate::parabola::{is_tangent, Parabola};
use crate::{GeomError, Rational, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Point(Point),
    Line(Line),
    Circle(Circle),
    Rational(Rational),
}

impl From<Point> for Witness {
    fn from(p: Point) -> Self {
        Witness::Point(p)
    }
}

impl From<Line> for Witness {
    fn from(l: Line) -> Self {
        Witness::Line(l)
    }
}

impl From<Circle> for Witness {
    fn from(k: Circle) -> Self {
        Witness::Circle(k)
    }
}

impl From<Rational> for Witness {
    fn from(r: Rational) -> Self {
        Witness::Rational(r)
    }
}

/// A single predicate evaluated by a theorem check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Reported as the failure detail when this is the first failing check.
    #[serde(skip)]
    pub failure: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub name: String,
    pub witnesses: Vec<(String, Witness)>,
    pub checks: Vec<Check>,
}

impl TheoremReport {
    pub fn new(name: impl Into<String>) -> Self {
        TheoremReport { name: name.into(), witnesses: Vec::new(), checks: Vec::new() }
    }

    pub fn witness(&mut self, label: impl Into<String>, value: impl Into<Witness>) -> &mut Self {
        self.witnesses.push((label.into(), value.into()));
        self
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, failure: impl Into<String>) -> &mut Self {
        self.checks.push(Check { name: name.into(), passed, failure: failure.into() });
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failure_detail(&self) -> Option<&str> {
        self.checks.iter().find(|c| !c.passed).map(|c| c.failure.as_str())
    }

    pub fn get_witness(&self, label: &str) -> Option<&Witness> {
        self.witnesses.iter().find(|(l, _)| l == label).map(|(_, w)| w)
    }

    /// Verdicts in check order; used to compare reports across transformed
    /// instances.
    pub fn verdicts(&self) -> Vec<bool> {
        self.checks.iter().map(|c| c.passed).collect()
    }
}

struct WitnessMap<'a>(&'a [(String, Witness)]);

impl Serialize for WitnessMap<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (label, w) in self.0 {
            map.serialize_entry(label, w)?;
        }
        map.end()
    }
}

impl Serialize for TheoremReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(5))?;
        map.serialize_entry("name", &self.name)?;
        map.serialize_entry("pass", &self.passed())?;
        map.serialize_entry("failure_detail", &self.failure_detail())?;
        map.serialize_entry("checks", &self.checks)?;
        map.serialize_entry("witnesses", &WitnessMap(&self.witnesses))?;
        map.end()
    }
}

/// Pedals of `p` onto the side lines `BC`, `CA`, `AB`.
pub fn pedal_triangle(p: &Point, a: &Point, b: &Point, c: &Point) -> Result<[Point; 3]> {
    Ok([
        pedal_point(p, &line_through(b, c)?),
        pedal_point(p, &line_through(c, a)?),
        pedal_point(p, &line_through(a, b)?),
    ])
}

/// Passes when "pedals collinear" and "P on the circumcircle" agree.
pub fn simson_check(p: &Point, a: &Point, b: &Point, c: &Point) -> Result<TheoremReport> {
    let k = circumcircle(a, b, c)?;
    let [pa, pb, pc] = pedal_triangle(p, a, b, c)?;
    let collinear = is_collinear(&pa, &pb, &pc);
    let concyclic = on_circle(&k, p);

    let mut report = TheoremReport::new("simson-wallace");
    report.witness("pedal_BC", pa).witness("pedal_CA", pb).witness("pedal_AB", pc).witness("circumcircle", k).check(
        "collinear_iff_concyclic",
        collinear == concyclic,
        if collinear {
            "pedals collinear but point off the circumcircle"
        } else {
            "point on circumcircle but pedals not collinear"
        },
    );
    Ok(report)
}

/// Lambert: the circumcircle of the triangle cut out by three tangents passes
/// through the focus.
pub fn lambert_circumcircle_check(g: &Parabola, l1: &Line, l2: &Line, l3: &Line) -> Result<TheoremReport> {
    for (i, l) in [l1, l2, l3].into_iter().enumerate() {
        if !is_tangent(g, l) {
            return Err(GeomError::NotTangent(i + 1));
        }
    }
    let meet = |p: &Line, q: &Line| intersect(p, q).map_err(|_| GeomError::DegenerateTriangle);
    let v12 = meet(l1, l2)?;
    let v23 = meet(l2, l3)?;
    let v31 = meet(l3, l1)?;
    let k = circumcircle(&v12, &v23, &v31)?;
    let focus_on = on_circle(&k, g.focus());

    let mut report = TheoremReport::new("lambert");
    report
        .witness("L1∩L2", v12)
        .witness("L2∩L3", v23)
        .witness("L3∩L1", v31)
        .witness("circumcircle", k)
        .witness("focus", g.focus().clone())
        .check("focus_on_circumcircle", focus_on, "focus not on circumcircle");
    Ok(report)
}

/// Converse of Lambert's theorem: for tangents `l1`, `l2` meeting at `I` and a
/// circle through the focus and `I`, the chord joining the second
/// intersections `H1`, `H2` of the circle with `l1`, `l2` is again tangent.
///
/// When one `Hi` coincides with `I` (the circle touches `li` there), the
/// returned line is the one through `I` and the other `H`, i.e. the other
/// tangent itself.
pub fn converse_lambert(g: &Parabola, l1: &Line, l2: &Line, k: &Circle) -> Result<(Line, TheoremReport)> {
    if !is_tangent(g, l1) {
        return Err(GeomError::NotTangent(1));
    }
    if !is_tangent(g, l2) {
        return Err(GeomError::NotTangent(2));
    }
    let i = intersect(l1, l2).map_err(|_| GeomError::ParallelTangents)?;
    if !on_circle(k, g.focus()) || !on_circle(k, &i) {
        return Err(GeomError::CircleMissesFocusOrI);
    }
    let h1 = second_intersection(l1, k, &i)?;
    let h2 = second_intersection(l2, k, &i)?;
    let line = match (h1 == i, h2 == i) {
        (true, true) => return Err(GeomError::BothIntersectionsDegenerate),
        (true, false) => line_through(&i, &h2)?,
        (false, true) => line_through(&i, &h1)?,
        (false, false) => line_through(&h1, &h2)?,
    };
    let foot = pedal_point(g.focus(), &line);
    let tangent = is_tangent(g, &line);

    let mut report = TheoremReport::new("converse-lambert");
    report
        .witness("I", i)
        .witness("H1", h1)
        .witness("H2", h2)
        .witness("line", line.clone())
        .witness("focus_pedal", foot)
        .witness("supporting_line", g.supporting_line())
        .check("chord_tangent", tangent, "chord H1H2 not tangent");
    Ok((line, report))
}
