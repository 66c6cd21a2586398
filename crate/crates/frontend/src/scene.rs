//! Drawable scenes built from exact geometry.
//!
//! A parabola arc between two of its points is exactly a quadratic Bézier
//! curve whose control point is the intersection of the end tangents, so
//! arcs carry both tangents and the control point as rationals.

use parbelos_core::euclid::{intersect, Circle, Line, Point};
use parbelos_core::{GeomError, Parabola, ParbelosFigure};
use thiserror::Error;

use crate::eval::EvalReport;
use crate::value::Value;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SceneError {
    #[error("scene has nothing to draw")]
    EmptyScene,
    #[error("parabola arc has coincident endpoints")]
    DegenerateArc,
    #[error(transparent)]
    Geometry(#[from] GeomError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolaArc {
    parabola: Parabola,
    start: Point,
    end: Point,
    start_tangent: Line,
    end_tangent: Line,
    control: Point,
}

impl ParabolaArc {
    pub fn new(parabola: &Parabola, start: &Point, end: &Point) -> Result<ParabolaArc, SceneError> {
        if start == end {
            return Err(SceneError::DegenerateArc);
        }
        let start_tangent = parabola.tangent_at(start)?;
        let end_tangent = parabola.tangent_at(end)?;
        let control = intersect(&start_tangent, &end_tangent)?;
        Ok(ParabolaArc {
            parabola: parabola.clone(),
            start: start.clone(),
            end: end.clone(),
            start_tangent,
            end_tangent,
            control,
        })
    }

    pub fn parabola(&self) -> &Parabola {
        &self.parabola
    }

    pub fn start(&self) -> &Point {
        &self.start
    }

    pub fn end(&self) -> &Point {
        &self.end
    }

    pub fn start_tangent(&self) -> &Line {
        &self.start_tangent
    }

    pub fn end_tangent(&self) -> &Line {
        &self.end_tangent
    }

    /// Bézier control point; exact.
    pub fn control(&self) -> &Point {
        &self.control
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    Point {
        label: String,
        at: Point,
    },
    Segment {
        from: Point,
        to: Point,
    },
    /// Infinite line, clipped to the viewport when rendered.
    Line(Line),
    Polygon(Vec<Point>),
    Circle(Circle),
    Arc(Box<ParabolaArc>),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Scene {
    pub elements: Vec<Element>,
}

impl Scene {
    pub fn push(&mut self, e: Element) {
        self.elements.push(e);
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn arcs(&self) -> impl Iterator<Item = &ParabolaArc> {
        self.elements.iter().filter_map(|e| match e {
            Element::Arc(a) => Some(a.as_ref()),
            _ => None,
        })
    }

    fn point(&mut self, label: &str, at: &Point) {
        self.push(Element::Point { label: label.to_string(), at: at.clone() });
    }

    /// The parbelos arcs, tangent rectangle, circumscribed square,
    /// circumcircle and labelled points.
    pub fn parbelos(fig: &ParbelosFigure) -> Result<Scene, SceneError> {
        let mut s = Scene::default();
        s.push(Element::Polygon(fig.square_r.to_vec()));
        s.push(Element::Polygon(vec![fig.c2.clone(), fig.t1.clone(), fig.t2.clone(), fig.t3.clone()]));
        s.push(Element::Circle(fig.circumcircle_k.clone()));
        s.push(Element::Segment { from: fig.c1.clone(), to: fig.c3.clone() });
        s.push(Element::Segment { from: fig.t1.clone(), to: fig.t3.clone() });
        s.push(Element::Segment { from: fig.c2.clone(), to: fig.h.clone() });
        s.push(Element::Arc(Box::new(ParabolaArc::new(&fig.inner1, &fig.c1, &fig.c2)?)));
        s.push(Element::Arc(Box::new(ParabolaArc::new(&fig.inner2, &fig.c2, &fig.c3)?)));
        s.push(Element::Arc(Box::new(ParabolaArc::new(&fig.outer, &fig.c1, &fig.c3)?)));
        for (label, p) in [
            ("C1", &fig.c1),
            ("C2", &fig.c2),
            ("C3", &fig.c3),
            ("T1", &fig.t1),
            ("T2", &fig.t2),
            ("T3", &fig.t3),
            ("O", &fig.center_o),
            ("F", &fig.focus_f),
            ("T", &fig.contact_t),
            ("H", &fig.h),
            ("A1", &fig.a1),
            ("A3", &fig.a3),
        ] {
            s.point(label, p);
        }
        Ok(s)
    }

    /// Draws every binding of an evaluated script: points labelled by name,
    /// lines, circles, parabolas as their latus-rectum arc, and parbelos
    /// figures in full.
    pub fn from_report(report: &EvalReport) -> Result<Scene, SceneError> {
        let mut s = Scene::default();
        for (name, value) in &report.bindings {
            match value {
                Value::Point(p) => s.point(name, p),
                Value::Line(l) => s.push(Element::Line(l.clone())),
                Value::Circle(k) => s.push(Element::Circle(k.clone())),
                Value::Parabola(g) => {
                    let latus = g.canonical_elements().latus_endpoints;
                    s.push(Element::Arc(Box::new(ParabolaArc::new(g, latus.start(), latus.end())?)));
                }
                Value::Figure(fig) => s.elements.extend(Scene::parbelos(fig)?.elements),
                Value::Rational(_) => {}
            }
        }
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use parbelos_core::parbelos::build_parbelos;
    use parbelos_core::Side;

    #[test]
    fn outer_arc_control_is_t2() {
        let fig = build_parbelos(&Point::from_ints(0, 0), &Point::from_ints(1, 0), &Point::from_ints(4, 0), Side::Left)
            .unwrap();
        let arc = ParabolaArc::new(&fig.outer, &fig.c1, &fig.c3).unwrap();
        assert_eq!(arc.control(), &Point::from_ints(2, -2));
        assert_eq!(arc.control(), &fig.t2);
        assert_eq!(arc.start_tangent(), &Line::new(1, 1, 0).unwrap());
        assert_eq!(arc.end_tangent(), &Line::new(1, -1, -4).unwrap());
    }

    #[test]
    fn zero_length_arc_rejected() {
        let fig = build_parbelos(&Point::from_ints(0, 0), &Point::from_ints(1, 0), &Point::from_ints(4, 0), Side::Left)
            .unwrap();
        let v = fig.outer.vertex();
        assert_eq!(ParabolaArc::new(&fig.outer, &v, &v), Err(SceneError::DegenerateArc));
        assert_eq!(
            ParabolaArc::new(&fig.outer, &v, &Point::from_ints(9, 9)),
            Err(SceneError::Geometry(GeomError::PointNotOnParabola))
        );
    }

    #[test]
    fn arc_control_points_are_tangent_intersections() {
        let fig = build_parbelos(&Point::from_ints(0, 0), &Point::from_ints(1, 0), &Point::from_ints(4, 0), Side::Left)
            .unwrap();
        let scene = Scene::parbelos(&fig).unwrap();
        assert_eq!(scene.arcs().count(), 3);
        for arc in scene.arcs() {
            assert!(arc.start_tangent().contains(arc.control()));
            assert!(arc.end_tangent().contains(arc.control()));
            assert!(arc.parabola().is_tangent(arc.start_tangent()));
            assert!(arc.parabola().is_tangent(arc.end_tangent()));
        }
    }
}
