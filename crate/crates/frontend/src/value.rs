//! Runtime values of the construction language and their dotted fields.

use std::fmt;

use parbelos_core::{Circle, Line, Parabola, ParbelosFigure, Point, Rational};
use serde::{Serialize, Serializer};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Rational,
    Point,
    Line,
    Circle,
    Parabola,
    Figure,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Kind::Rational => "rational",
            Kind::Point => "point",
            Kind::Line => "line",
            Kind::Circle => "circle",
            Kind::Parabola => "parabola",
            Kind::Figure => "parbelos",
        };
        f.write_str(s)
    }
}

const FIGURE_FIELDS: &[(&str, Kind)] = &[
    ("C1", Kind::Point),
    ("C2", Kind::Point),
    ("C3", Kind::Point),
    ("inner1", Kind::Parabola),
    ("inner2", Kind::Parabola),
    ("outer", Kind::Parabola),
    ("tangent_at_C1", Kind::Line),
    ("tangent_at_C3", Kind::Line),
    ("tangent_at_C2_left", Kind::Line),
    ("tangent_at_C2_right", Kind::Line),
    ("T1", Kind::Point),
    ("T2", Kind::Point),
    ("T3", Kind::Point),
    ("square_R1", Kind::Point),
    ("square_R2", Kind::Point),
    ("square_R3", Kind::Point),
    ("square_R4", Kind::Point),
    ("center_O", Kind::Point),
    ("circumcircle_K", Kind::Circle),
    ("focus_F", Kind::Point),
    ("diagonal", Kind::Line),
    ("contact_T", Kind::Point),
    ("bisector", Kind::Line),
    ("H", Kind::Point),
    ("A1", Kind::Point),
    ("A3", Kind::Point),
];

const PARABOLA_FIELDS: &[(&str, Kind)] = &[
    ("focus", Kind::Point),
    ("directrix", Kind::Line),
    ("vertex", Kind::Point),
    ("axis", Kind::Line),
    ("supporting_line", Kind::Line),
];

const CIRCLE_FIELDS: &[(&str, Kind)] = &[("center", Kind::Point), ("radius_sq", Kind::Rational)];

const POINT_FIELDS: &[(&str, Kind)] = &[("x", Kind::Rational), ("y", Kind::Rational)];

/// Kind of `base.field`, if that field exists.
pub fn field_kind(base: Kind, field: &str) -> Option<Kind> {
    let table = match base {
        Kind::Figure => FIGURE_FIELDS,
        Kind::Parabola => PARABOLA_FIELDS,
        Kind::Circle => CIRCLE_FIELDS,
        Kind::Point => POINT_FIELDS,
        Kind::Rational | Kind::Line => return None,
    };
    table.iter().find(|(name, _)| *name == field).map(|(_, k)| *k)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Rational(Rational),
    Point(Point),
    Line(Line),
    Circle(Circle),
    Parabola(Parabola),
    Figure(Box<ParbelosFigure>),
}

impl Value {
    pub fn kind(&self) -> Kind {
        match self {
            Value::Rational(_) => Kind::Rational,
            Value::Point(_) => Kind::Point,
            Value::Line(_) => Kind::Line,
            Value::Circle(_) => Kind::Circle,
            Value::Parabola(_) => Kind::Parabola,
            Value::Figure(_) => Kind::Figure,
        }
    }

    pub fn field(&self, name: &str) -> Option<Value> {
        let v: Value = match self {
            Value::Figure(fig) => match name {
                "C1" => fig.c1.clone().into(),
                "C2" => fig.c2.clone().into(),
                "C3" => fig.c3.clone().into(),
                "inner1" => fig.inner1.clone().into(),
                "inner2" => fig.inner2.clone().into(),
                "outer" => fig.outer.clone().into(),
                "tangent_at_C1" => fig.tangent_at_c1.clone().into(),
                "tangent_at_C3" => fig.tangent_at_c3.clone().into(),
                "tangent_at_C2_left" => fig.tangent_at_c2_left.clone().into(),
                "tangent_at_C2_right" => fig.tangent_at_c2_right.clone().into(),
                "T1" => fig.t1.clone().into(),
                "T2" => fig.t2.clone().into(),
                "T3" => fig.t3.clone().into(),
                "square_R1" => fig.square_r[0].clone().into(),
                "square_R2" => fig.square_r[1].clone().into(),
                "square_R3" => fig.square_r[2].clone().into(),
                "square_R4" => fig.square_r[3].clone().into(),
                "center_O" => fig.center_o.clone().into(),
                "circumcircle_K" => fig.circumcircle_k.clone().into(),
                "focus_F" => fig.focus_f.clone().into(),
                "diagonal" => fig.diagonal.clone().into(),
                "contact_T" => fig.contact_t.clone().into(),
                "bisector" => fig.bisector.clone().into(),
                "H" => fig.h.clone().into(),
                "A1" => fig.a1.clone().into(),
                "A3" => fig.a3.clone().into(),
                _ => return None,
            },
            Value::Parabola(g) => match name {
                "focus" => g.focus().clone().into(),
                "directrix" => g.directrix().clone().into(),
                "vertex" => g.vertex().into(),
                "axis" => g.axis().into(),
                "supporting_line" => g.supporting_line().into(),
                _ => return None,
            },
            Value::Circle(k) => match name {
                "center" => k.center().clone().into(),
                "radius_sq" => k.radius_sq().clone().into(),
                _ => return None,
            },
            Value::Point(p) => match name {
                "x" => p.x.clone().into(),
                "y" => p.y.clone().into(),
                _ => return None,
            },
            Value::Rational(_) | Value::Line(_) => return None,
        };
        debug_assert_eq!(field_kind(self.kind(), name), Some(v.kind()));
        Some(v)
    }
}

impl From<Rational> for Value {
    fn from(r: Rational) -> Self {
        Value::Rational(r)
    }
}

impl From<Point> for Value {
    fn from(p: Point) -> Self {
        Value::Point(p)
    }
}

impl From<Line> for Value {
    fn from(l: Line) -> Self {
        Value::Line(l)
    }
}

impl From<Circle> for Value {
    fn from(k: Circle) -> Self {
        Value::Circle(k)
    }
}

impl From<Parabola> for Value {
    fn from(g: Parabola) -> Self {
        Value::Parabola(g)
    }
}

impl From<ParbelosFigure> for Value {
    fn from(fig: ParbelosFigure) -> Self {
        Value::Figure(Box::new(fig))
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Rational(r) => r.serialize(serializer),
            Value::Point(p) => p.serialize(serializer),
            Value::Line(l) => l.serialize(serializer),
            Value::Circle(k) => k.serialize(serializer),
            Value::Parabola(g) => g.serialize(serializer),
            Value::Figure(fig) => fig.serialize(serializer),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Rational(r) => write!(f, "{r}"),
            Value::Point(p) => write!(f, "{p}"),
            Value::Line(l) => write!(f, "{l}"),
            Value::Circle(k) => write!(f, "circle(center {}, r^2 {})", k.center(), k.radius_sq()),
            Value::Parabola(g) => write!(f, "parabola(focus {}, directrix {})", g.focus(), g.directrix()),
            Value::Figure(fig) => write!(f, "parbelos({}, {}, {}, {})", fig.c1, fig.c2, fig.c3, fig.side.as_str()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use parbelos_core::parbelos::build_parbelos;
    use parbelos_core::Side;

    #[test]
    fn every_declared_field_resolves() {
        let fig = build_parbelos(&Point::from_ints(0, 0), &Point::from_ints(1, 0), &Point::from_ints(4, 0), Side::Left)
            .unwrap();
        let v = Value::from(fig);
        for (name, kind) in FIGURE_FIELDS {
            assert_eq!(v.field(name).map(|f| f.kind()), Some(*kind), "{name}");
        }
        let g = v.field("outer").unwrap();
        for (name, kind) in PARABOLA_FIELDS {
            assert_eq!(g.field(name).map(|f| f.kind()), Some(*kind), "{name}");
        }
        assert_eq!(v.field("nope"), None);
        assert_eq!(field_kind(Kind::Line, "a"), None);
    }
}
