//! Focus/directrix parabolas.
//!
//! The tangency test [`is_tangent`] is the pedal criterion: a line touches
//! the parabola exactly when the foot of the perpendicular from the focus
//! lies on the supporting line (the tangent at the vertex).

use serde::{Deserialize, Serialize};

use crate::euclid::{
    dist_sq, line_through, midpoint, pedal_point, perpendicular_bisector, perpendicular_through, Line, Point, Segment,
    Vector,
};
use crate::{GeomError, Rational, Result};

/// One of the two open half-planes bounded by a directed line, seen from its
/// start point looking toward its end point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    /// The side of the directed line `from -> to` containing `reference`.
    pub fn toward(from: &Point, to: &Point, reference: &Point) -> Result<Side> {
        let turn = from.to(to).cross(&from.to(reference));
        if turn.is_positive() {
            Ok(Side::Left)
        } else if turn.is_negative() {
            Ok(Side::Right)
        } else {
            Err(GeomError::DegenerateSide)
        }
    }

    /// `v` turned a quarter toward this side.
    pub fn turn(self, v: &Vector) -> Vector {
        match self {
            Side::Left => v.rot90(),
            Side::Right => v.rot90().scale(&Rational::from(-1)),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

impl std::str::FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            other => Err(format!("expected left or right, found {other:?}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Parabola {
    focus: Point,
    directrix: Line,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalElements {
    pub vertex: Point,
    pub axis: Line,
    pub supporting_line: Line,
    pub latus_endpoints: Segment,
}

impl Parabola {
    pub fn new(focus: Point, directrix: Line) -> Result<Parabola> {
        if directrix.contains(&focus) {
            return Err(GeomError::FocusOnDirectrix);
        }
        Ok(Parabola { focus, directrix })
    }

    pub fn focus(&self) -> &Point {
        &self.focus
    }

    pub fn directrix(&self) -> &Line {
        &self.directrix
    }

    /// Foot of the perpendicular from the focus to the directrix.
    fn directrix_foot(&self) -> Point {
        pedal_point(&self.focus, &self.directrix)
    }

    pub fn vertex(&self) -> Point {
        midpoint(&self.focus, &self.directrix_foot())
    }

    pub fn axis(&self) -> Line {
        perpendicular_through(&self.directrix, &self.focus)
    }

    pub fn supporting_line(&self) -> Line {
        self.directrix.parallel_through(&self.vertex())
    }

    /// Direction the parabola opens toward (directrix foot to focus).
    pub fn opening(&self) -> Vector {
        self.directrix_foot().to(&self.focus)
    }

    pub fn canonical_elements(&self) -> CanonicalElements {
        let w = self.opening();
        // The semi-latus rectum equals the focus-directrix distance.
        let half = w.rot90();
        let e1 = self.focus.offset(&half.scale(&Rational::from(-1)));
        let e2 = self.focus.offset(&half);
        CanonicalElements {
            vertex: self.vertex(),
            axis: self.axis(),
            supporting_line: self.supporting_line(),
            latus_endpoints: Segment::new(e1, e2).expect("focus is off the directrix"),
        }
    }

    pub fn contains_point(&self, p: &Point) -> bool {
        dist_sq(p, &self.focus) == self.directrix.dist_sq(p)
    }

    /// `vertex + t·u + t²|u|²/(4|w|²)·w`, where `u` is the primitive integer
    /// direction of the supporting line and `w` runs from the vertex to the
    /// focus. Distinct parameters give distinct points.
    pub fn point_at_parameter(&self, t: &Rational) -> Point {
        let vertex = self.vertex();
        let u = self.supporting_line().direction();
        let w = vertex.to(&self.focus);
        let k = t.square() * u.norm_sq() / (Rational::from(4) * w.norm_sq());
        vertex.offset(&u.scale(t)).offset(&w.scale(&k))
    }

    /// Tangent at `p`: the perpendicular bisector of the focus and the foot of
    /// `p` on the directrix.
    pub fn tangent_at(&self, p: &Point) -> Result<Line> {
        if !self.contains_point(p) {
            return Err(GeomError::PointNotOnParabola);
        }
        let foot = pedal_point(p, &self.directrix);
        perpendicular_bisector(&self.focus, &foot)
    }

    pub fn is_tangent(&self, l: &Line) -> bool {
        is_tangent(self, l)
    }
}

/// Parabola whose latus rectum is `e1 e2`, opening toward `side` of the
/// directed line `e1 -> e2`.
pub fn parabola_from_latus_rectum(e1: &Point, e2: &Point, side: Side) -> Result<Parabola> {
    let chord = line_through(e1, e2)?;
    let focus = midpoint(e1, e2);
    // |e1e2| = 4f and the directrix sits 2f behind the latus rectum.
    let back = side.turn(&e1.to(e2)).scale(&Rational::new(-1, 2));
    Parabola::new(focus, chord.translate(&back))
}

pub fn canonical_elements(g: &Parabola) -> CanonicalElements {
    g.canonical_elements()
}

/// Pedal criterion: `l` is tangent iff the projection of the focus onto `l`
/// lies on the supporting line.
pub fn is_tangent(g: &Parabola, l: &Line) -> bool {
    g.supporting_line().contains(&pedal_point(g.focus(), l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euclid::is_collinear;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn line(a: i64, b: i64, c: i64) -> Line {
        Line::new(a, b, c).unwrap()
    }

    fn outer() -> Parabola {
        parabola_from_latus_rectum(&Point::from_ints(0, 0), &Point::from_ints(4, 0), Side::Left).unwrap()
    }

    #[test]
    fn latus_rectum_construction() {
        let g3 = outer();
        assert_eq!(g3.focus(), &Point::from_ints(2, 0));
        assert_eq!(g3.directrix(), &line(0, 1, 2));

        let g = parabola_from_latus_rectum(&Point::from_ints(-1, 0), &Point::from_ints(1, 0), Side::Left).unwrap();
        assert_eq!(g.focus(), &Point::from_ints(0, 0));
        assert_eq!(g.directrix(), &line(0, 1, 1));

        let g1 = parabola_from_latus_rectum(&Point::from_ints(0, 0), &Point::from_ints(1, 0), Side::Left).unwrap();
        assert_eq!(g1.focus(), &Point::new(r(1, 2), Rational::zero()));
        assert_eq!(g1.directrix(), &line(0, 2, 1));

        let down = parabola_from_latus_rectum(&Point::from_ints(0, 0), &Point::from_ints(4, 0), Side::Right).unwrap();
        assert_eq!(down.directrix(), &line(0, 1, -2));

        assert_eq!(
            parabola_from_latus_rectum(&Point::from_ints(1, 1), &Point::from_ints(1, 1), Side::Left),
            Err(GeomError::CoincidentPoints)
        );
    }

    #[test]
    fn side_from_reference_point() {
        let a = Point::from_ints(0, 0);
        let b = Point::from_ints(4, 0);
        assert_eq!(Side::toward(&a, &b, &Point::from_ints(1, 5)), Ok(Side::Left));
        assert_eq!(Side::toward(&a, &b, &Point::from_ints(1, -5)), Ok(Side::Right));
        assert_eq!(Side::toward(&a, &b, &Point::from_ints(9, 0)), Err(GeomError::DegenerateSide));
    }

    #[test]
    fn canonical_elements_examples() {
        let e = outer().canonical_elements();
        assert_eq!(e.vertex, Point::from_ints(2, -1));
        assert_eq!(e.axis, line(1, 0, -2));
        assert_eq!(e.supporting_line, line(0, 1, 1));
        let expected = Segment::new(Point::from_ints(0, 0), Point::from_ints(4, 0)).unwrap();
        assert!(e.latus_endpoints.same_endpoints(&expected));

        let std = Parabola::new(Point::new(Rational::zero(), r(1, 2)), line(0, 2, 1)).unwrap();
        let e = std.canonical_elements();
        assert_eq!(e.vertex, Point::from_ints(0, 0));
        assert_eq!(e.supporting_line, line(0, 1, 0));

        let g1 = Parabola::new(Point::new(r(1, 2), Rational::zero()), line(0, 2, 1)).unwrap();
        let e = g1.canonical_elements();
        assert_eq!(e.vertex, Point::new(r(1, 2), r(-1, 4)));
        assert_eq!(e.supporting_line, line(0, 4, 1));
    }

    #[test]
    fn rejects_focus_on_directrix() {
        assert_eq!(Parabola::new(Point::from_ints(0, 0), line(0, 1, 0)), Err(GeomError::FocusOnDirectrix));
    }

    #[test]
    fn contains_point_examples() {
        let g3 = outer();
        assert!(g3.contains_point(&Point::new(Rational::one(), r(-3, 4))));
        assert!(g3.contains_point(&Point::from_ints(2, -1)));
        assert!(!g3.contains_point(&Point::from_ints(2, 0)));
    }

    #[test]
    fn point_at_parameter_examples() {
        let g3 = outer();
        assert_eq!(g3.point_at_parameter(&Rational::zero()), Point::from_ints(2, -1));
        assert_eq!(g3.point_at_parameter(&Rational::from(-1)), Point::new(Rational::one(), r(-3, 4)));
        assert_eq!(g3.point_at_parameter(&Rational::from(2)), Point::from_ints(4, 0));
    }

    #[test]
    fn tangent_at_examples() {
        let g3 = outer();
        assert_eq!(g3.tangent_at(&Point::from_ints(0, 0)).unwrap(), line(1, 1, 0));
        assert_eq!(g3.tangent_at(&Point::from_ints(2, -1)).unwrap(), line(0, 1, 1));
        assert_eq!(g3.tangent_at(&Point::from_ints(4, 0)).unwrap(), line(1, -1, -4));
        assert_eq!(g3.tangent_at(&Point::from_ints(2, 0)), Err(GeomError::PointNotOnParabola));
    }

    #[test]
    fn is_tangent_examples() {
        let g3 = outer();
        assert!(is_tangent(&g3, &line(2, 4, 1)));
        assert!(is_tangent(&g3, &line(0, 1, 1)));
        assert!(!is_tangent(&g3, &line(0, 1, 0)));
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-300i64..300, 1i64..40).prop_map(|(n, d)| Rational::new(n, d))
    }

    fn arb_point() -> impl Strategy<Value = Point> {
        (arb_rational(), arb_rational()).prop_map(|(x, y)| Point::new(x, y))
    }

    fn arb_side() -> impl Strategy<Value = Side> {
        prop_oneof![Just(Side::Left), Just(Side::Right)]
    }

    fn arb_parabola() -> impl Strategy<Value = (Point, Point, Side, Parabola)> {
        (arb_point(), arb_point(), arb_side()).prop_filter("distinct", |(a, b, _)| a != b).prop_map(|(a, b, s)| {
            let g = parabola_from_latus_rectum(&a, &b, s).unwrap();
            (a, b, s, g)
        })
    }

    proptest! {
        #[test]
        fn latus_rectum_roundtrip((a, b, _s, g) in arb_parabola()) {
            let e = g.canonical_elements();
            prop_assert!(e.latus_endpoints.same_endpoints(&Segment::new(a.clone(), b.clone()).unwrap()));
            prop_assert!(g.contains_point(&a) && g.contains_point(&b));
            prop_assert_eq!(midpoint(&g.focus().clone(), &pedal_point(g.focus(), g.directrix())), e.vertex.clone());
            prop_assert!(e.supporting_line.is_parallel(g.directrix()) && e.supporting_line.contains(&e.vertex));
            prop_assert!(e.axis.is_perpendicular(g.directrix()) && e.axis.contains(g.focus()));
        }

        #[test]
        fn opening_side_is_respected((a, b, s, g) in arb_parabola()) {
            // the vertex sits behind the latus rectum, opposite the opening side
            let vertex_side = Side::toward(&a, &b, &g.vertex()).unwrap();
            prop_assert_ne!(vertex_side, s);
        }

        #[test]
        fn tangent_at_parameter_is_tangent((_a, _b, _s, g) in arb_parabola(), t in arb_rational()) {
            let p = g.point_at_parameter(&t);
            prop_assert!(g.contains_point(&p));
            let tangent = g.tangent_at(&p).unwrap();
            prop_assert!(tangent.contains(&p));
            prop_assert!(is_tangent(&g, &tangent));
        }

        #[test]
        fn secants_are_not_tangent((_a, _b, _s, g) in arb_parabola(), t1 in arb_rational(), t2 in arb_rational()) {
            prop_assume!(t1 != t2);
            let p = g.point_at_parameter(&t1);
            let q = g.point_at_parameter(&t2);
            prop_assert!(!is_tangent(&g, &line_through(&p, &q).unwrap()));
        }

        #[test]
        fn latus_endpoint_tangents_meet_chord_at_quarter_turn((a, b, _s, g) in arb_parabola()) {
            let u = a.to(&b);
            let ta = g.tangent_at(&a).unwrap();
            let tb = g.tangent_at(&b).unwrap();
            for t in [&ta, &tb] {
                let d = t.direction();
                prop_assert_eq!(d.dot(&u).square() * Rational::from(2), d.norm_sq() * u.norm_sq());
            }
            prop_assert!(ta.is_perpendicular(&tb));
            // both tangents and the axis meet on the directrix
            let meet = crate::euclid::intersect(&ta, &tb).unwrap();
            prop_assert!(g.directrix().contains(&meet));
            prop_assert!(is_collinear(&meet, g.focus(), &g.vertex()));
        }
    }
}
