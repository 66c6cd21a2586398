//! Rational points, lines and circles.
//!
//! Lines are stored as primitive integer triples `a·x + b·y + c = 0` with the
//! leading nonzero coefficient of `(a, b)` positive, so two lines are equal
//! exactly when their structs are. Circles keep the squared radius, which
//! stays rational for every construction in this crate even when the radius
//! does not.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize, Serializer};

use crate::{GeomError, Rational, Result};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

/// Free vector; the difference of two points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    pub x: Rational,
    pub y: Rational,
}

impl Vector {
    pub fn new(x: Rational, y: Rational) -> Self {
        Vector { x, y }
    }

    pub fn dot(&self, other: &Vector) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(&self, other: &Vector) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self)
    }

    pub fn scale(&self, k: &Rational) -> Vector {
        Vector::new(&self.x * k, &self.y * k)
    }

    /// Counter-clockwise quarter turn.
    pub fn rot90(&self) -> Vector {
        Vector::new(-&self.y, self.x.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(Rational::from(x), Rational::from(y))
    }

    /// Vector from `self` to `other`.
    pub fn to(&self, other: &Point) -> Vector {
        Vector::new(&other.x - &self.x, &other.y - &self.y)
    }

    pub fn offset(&self, v: &Vector) -> Point {
        Point::new(&self.x + &v.x, &self.y + &v.y)
    }

    pub fn as_vector(&self) -> Vector {
        Vector::new(self.x.clone(), self.y.clone())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn midpoint(p: &Point, q: &Point) -> Point {
    let half = Rational::new(1, 2);
    Point::new((&p.x + &q.x) * &half, (&p.y + &q.y) * &half)
}

pub fn dist_sq(p: &Point, q: &Point) -> Rational {
    p.to(q).norm_sq()
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Line {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl Line {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Result<Line> {
        Line::from_integers(a.into(), b.into(), c.into())
    }

    fn from_integers(mut a: BigInt, mut b: BigInt, mut c: BigInt) -> Result<Line> {
        if a.is_zero() && b.is_zero() {
            return Err(GeomError::InvalidLine);
        }
        let g = a.gcd(&b).gcd(&c);
        a /= &g;
        b /= &g;
        c /= &g;
        let leading_negative = if a.is_zero() { b.is_negative() } else { a.is_negative() };
        if leading_negative {
            a = -a;
            b = -b;
            c = -c;
        }
        Ok(Line { a, b, c })
    }

    /// Canonical line from rational coefficients.
    pub fn from_coefficients(a: &Rational, b: &Rational, c: &Rational) -> Result<Line> {
        let l = a.denom().lcm(b.denom()).lcm(c.denom());
        let scale = |r: &Rational| r.numer() * (&l / r.denom());
        Line::from_integers(scale(a), scale(b), scale(c))
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    /// `(a, b)`.
    pub fn normal(&self) -> Vector {
        Vector::new(self.a.clone().into(), self.b.clone().into())
    }

    /// Primitive integer direction `(b, -a) / gcd(a, b)`.
    pub fn direction(&self) -> Vector {
        let g = self.a.gcd(&self.b);
        Vector::new((&self.b / &g).into(), (-&self.a / &g).into())
    }

    /// `a·x + b·y + c`.
    pub fn eval(&self, p: &Point) -> Rational {
        Rational::from(self.a.clone()) * &p.x + Rational::from(self.b.clone()) * &p.y + Rational::from(self.c.clone())
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.eval(p).is_zero()
    }

    pub fn is_parallel(&self, other: &Line) -> bool {
        (&self.a * &other.b - &self.b * &other.a).is_zero()
    }

    pub fn is_perpendicular(&self, other: &Line) -> bool {
        (&self.a * &other.a + &self.b * &other.b).is_zero()
    }

    /// Line through `p` parallel to `self`.
    pub fn parallel_through(&self, p: &Point) -> Line {
        let n = self.normal();
        let c = -n.dot(&p.as_vector());
        Line::from_coefficients(&n.x, &n.y, &c).expect("normal of a valid line is nonzero")
    }

    pub fn translate(&self, v: &Vector) -> Line {
        let c = Rational::from(self.c.clone()) - self.normal().dot(v);
        Line::from_coefficients(&self.a.clone().into(), &self.b.clone().into(), &c)
            .expect("normal of a valid line is nonzero")
    }

    /// Squared distance from `p` to the line.
    pub fn dist_sq(&self, p: &Point) -> Rational {
        self.eval(p).square() / self.normal().norm_sq()
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x + {}y + {} = 0", self.a, self.b, self.c)
    }
}

impl fmt::Debug for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Line {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Line", 3)?;
        s.serialize_field("a", &self.a.to_string())?;
        s.serialize_field("b", &self.b.to_string())?;
        s.serialize_field("c", &self.c.to_string())?;
        s.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Circle {
    center: Point,
    radius_sq: Rational,
}

impl Circle {
    pub fn new(center: Point, radius_sq: Rational) -> Result<Circle> {
        if !radius_sq.is_positive() {
            return Err(GeomError::InvalidCircle);
        }
        Ok(Circle { center, radius_sq })
    }

    pub fn center(&self) -> &Point {
        &self.center
    }

    pub fn radius_sq(&self) -> &Rational {
        &self.radius_sq
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Segment {
    start: Point,
    end: Point,
}

impl Segment {
    pub fn new(start: Point, end: Point) -> Result<Segment> {
        if start == end {
            return Err(GeomError::CoincidentPoints);
        }
        Ok(Segment { start, end })
    }

    pub fn start(&self) -> &Point {
        &self.start
    }

    pub fn end(&self) -> &Point {
        &self.end
    }

    /// True when both segments have the same endpoints in either order.
    pub fn same_endpoints(&self, other: &Segment) -> bool {
        (self.start == other.start && self.end == other.end) || (self.start == other.end && self.end == other.start)
    }
}

pub fn line_through(p: &Point, q: &Point) -> Result<Line> {
    if p == q {
        return Err(GeomError::CoincidentPoints);
    }
    let n = p.to(q).rot90();
    let c = -n.dot(&p.as_vector());
    Line::from_coefficients(&n.x, &n.y, &c)
}

/// Line through `p` whose direction is the normal of `l`.
pub fn perpendicular_through(l: &Line, p: &Point) -> Line {
    let n = l.normal().rot90();
    let c = -n.dot(&p.as_vector());
    Line::from_coefficients(&n.x, &n.y, &c).expect("normal of a valid line is nonzero")
}

pub fn perpendicular_bisector(p: &Point, q: &Point) -> Result<Line> {
    if p == q {
        return Err(GeomError::CoincidentPoints);
    }
    let n = p.to(q);
    let c = -n.dot(&midpoint(p, q).as_vector());
    Line::from_coefficients(&n.x, &n.y, &c)
}

/// Orthogonal projection of `p` onto `l`.
pub fn pedal_point(p: &Point, l: &Line) -> Point {
    let n = l.normal();
    let k = l.eval(p) / n.norm_sq();
    p.offset(&n.scale(&-k))
}

/// Exact orientation test; repeated points count as collinear.
pub fn is_collinear(a: &Point, b: &Point, c: &Point) -> bool {
    a.to(b).cross(&a.to(c)).is_zero()
}

pub fn intersect(l1: &Line, l2: &Line) -> Result<Point> {
    let det = l1.a() * l2.b() - l1.b() * l2.a();
    if det.is_zero() {
        return Err(GeomError::ParallelLines);
    }
    let det = Rational::from(det);
    let x = Rational::from(l1.b() * l2.c() - l2.b() * l1.c()) / &det;
    let y = Rational::from(l1.c() * l2.a() - l2.c() * l1.a()) / &det;
    Ok(Point::new(x, y))
}

pub fn circumcircle(a: &Point, b: &Point, c: &Point) -> Result<Circle> {
    if is_collinear(a, b, c) {
        return Err(GeomError::DegenerateTriangle);
    }
    let bisector_ab = perpendicular_bisector(a, b)?;
    let bisector_ac = perpendicular_bisector(a, c)?;
    let center = intersect(&bisector_ab, &bisector_ac).map_err(|_| GeomError::DegenerateTriangle)?;
    let radius_sq = dist_sq(&center, a);
    Circle::new(center, radius_sq)
}

pub fn on_circle(k: &Circle, p: &Point) -> bool {
    dist_sq(k.center(), p) == *k.radius_sq()
}

/// The other intersection of `l` with `k`, given that `p` lies on both.
///
/// Along `p + s·d` the quadratic in `s` has the known root `s = 0`, so the
/// second root is `-2 d·(p - center) / |d|²` and stays rational. A tangent
/// line has a double root and yields `p` itself.
pub fn second_intersection(l: &Line, k: &Circle, p: &Point) -> Result<Point> {
    if !l.contains(p) || !on_circle(k, p) {
        return Err(GeomError::PointNotIncident);
    }
    let d = l.direction();
    let s = -(Rational::from(2) * d.dot(&k.center().to(p))) / d.norm_sq();
    Ok(p.offset(&d.scale(&s)))
}

/// Rational parametrization of `k` from the base point `q`: the second
/// intersection of the chord through `q` with slope `t` (`None` for a
/// vertical chord).
pub fn circle_point(k: &Circle, q: &Point, t: Option<&Rational>) -> Result<Point> {
    if !on_circle(k, q) {
        return Err(GeomError::PointNotIncident);
    }
    let chord = match t {
        Some(t) => Line::from_coefficients(t, &Rational::from(-1), &(&q.y - t * &q.x))?,
        None => Line::from_coefficients(&Rational::one(), &Rational::zero(), &-&q.x)?,
    };
    second_intersection(&chord, k, q)
}

/// Circle through `p` and `q` whose center is `midpoint(p, q) + t·d`, where
/// `d` is the primitive direction of the perpendicular bisector of `pq`.
pub fn circle_through_points(p: &Point, q: &Point, t: &Rational) -> Result<Circle> {
    let bisector = perpendicular_bisector(p, q)?;
    let center = midpoint(p, q).offset(&bisector.direction().scale(t));
    let radius_sq = dist_sq(&center, p);
    Circle::new(center, radius_sq)
}

/// Circle tangent to `l` at `p` and passing through `q` (not on `l`).
pub fn circle_tangent_at(l: &Line, p: &Point, q: &Point) -> Result<Circle> {
    if !l.contains(p) {
        return Err(GeomError::PointNotIncident);
    }
    // center = p + s·n with |center - q|² = s²|n|²
    let n = l.normal();
    let qp = q.to(p);
    let denom = Rational::from(2) * n.dot(&qp);
    if denom.is_zero() {
        return Err(GeomError::PointNotIncident);
    }
    let s = -qp.norm_sq() / denom;
    let center = p.offset(&n.scale(&s));
    let radius_sq = dist_sq(&center, p);
    Circle::new(center, radius_sq)
}
