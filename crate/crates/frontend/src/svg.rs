//! SVG 1.1 output for scenes.
//!
//! Layout (bounding box, scale, clipping, control points) is computed with
//! rationals; numbers become decimals only when written into the document.

use std::fmt::Write as _;

use num_bigint::BigInt;
use parbelos_core::euclid::{Circle, Line, Point};
use parbelos_core::Rational;

use crate::scene::{Element, Scene, SceneError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RenderOptions {
    pub width: u32,
    pub height: u32,
    pub margin: u32,
    pub decimal_digits: usize,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { width: 800, height: 600, margin: 40, decimal_digits: 12 }
    }
}

const MARKER: i64 = 4;

#[derive(Clone, Debug)]
struct BBox {
    min_x: Rational,
    min_y: Rational,
    max_x: Rational,
    max_y: Rational,
}

impl BBox {
    fn include(bb: &mut Option<BBox>, x: &Rational, y: &Rational) {
        match bb {
            None => *bb = Some(BBox { min_x: x.clone(), min_y: y.clone(), max_x: x.clone(), max_y: y.clone() }),
            Some(b) => {
                if *x < b.min_x {
                    b.min_x = x.clone();
                }
                if *x > b.max_x {
                    b.max_x = x.clone();
                }
                if *y < b.min_y {
                    b.min_y = y.clone();
                }
                if *y > b.max_y {
                    b.max_y = y.clone();
                }
            }
        }
    }

    fn point(bb: &mut Option<BBox>, p: &Point) {
        BBox::include(bb, &p.x, &p.y);
    }
}

/// Rational r with r² ≥ radius_sq, equal to the root when it is rational.
fn radius_upper_bound(radius_sq: &Rational) -> Rational {
    if let Some(r) = radius_sq.sqrt_exact() {
        return r;
    }
    let n = radius_sq.numer();
    let d = radius_sq.denom();
    let root = (n * d).sqrt() + 1;
    Rational::from_integer(root) / Rational::from_integer(d.clone())
}

/// Decimal of √v rounded half up to `digits` places, v ≥ 0.
fn sqrt_decimal(v: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10).pow(2 * (digits as u32 + 1));
    let scaled = v.numer() * scale / v.denom();
    let root: BigInt = scaled.sqrt();
    let rounded = (root + 5) / 10;
    let q = Rational::from_integer(rounded) / Rational::from_integer(BigInt::from(10).pow(digits as u32));
    fmt_num(&q, digits)
}

fn trim(mut s: String) -> String {
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".to_string();
    }
    s
}

fn fmt_num(r: &Rational, digits: usize) -> String {
    trim(r.to_decimal_string(digits))
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for ch in text.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            _ => out.push(ch),
        }
    }
    out
}

/// World → screen map: uniform scale, y flipped, figure centred.
struct Viewport {
    scale: Rational,
    origin_x: Rational,
    origin_y: Rational,
    world: BBox,
    digits: usize,
}

impl Viewport {
    fn fit(bb: BBox, opts: &RenderOptions) -> Viewport {
        let one = Rational::one();
        let mut bb = bb;
        if bb.max_x == bb.min_x {
            bb.min_x = &bb.min_x - &one;
            bb.max_x = &bb.max_x + &one;
        }
        if bb.max_y == bb.min_y {
            bb.min_y = &bb.min_y - &one;
            bb.max_y = &bb.max_y + &one;
        }
        let margin = Rational::from_integer(opts.margin);
        let avail_w = Rational::from_integer(opts.width.max(1)) - &margin * Rational::from_integer(2);
        let avail_h = Rational::from_integer(opts.height.max(1)) - &margin * Rational::from_integer(2);
        let avail_w = if avail_w.is_positive() { avail_w } else { Rational::one() };
        let avail_h = if avail_h.is_positive() { avail_h } else { Rational::one() };
        let ww = &bb.max_x - &bb.min_x;
        let wh = &bb.max_y - &bb.min_y;
        let sx = &avail_w / &ww;
        let sy = &avail_h / &wh;
        let scale = if sx < sy { sx } else { sy };
        let half = Rational::new(1, 2);
        let pad_x = (&avail_w - &ww * &scale) * &half;
        let pad_y = (&avail_h - &wh * &scale) * &half;
        let origin_x = &margin + &pad_x;
        let origin_y = &margin + &pad_y;
        // Visible world rectangle, used to clip infinite lines.
        let world = BBox {
            min_x: &bb.min_x - &origin_x / &scale,
            max_x: &bb.min_x + (Rational::from_integer(opts.width) - &origin_x) / &scale,
            min_y: &bb.max_y - (Rational::from_integer(opts.height) - &origin_y) / &scale,
            max_y: &bb.max_y + &origin_y / &scale,
        };
        let origin_x = origin_x - &bb.min_x * &scale;
        let origin_y = origin_y + &bb.max_y * &scale;
        Viewport { scale, origin_x, origin_y, world, digits: opts.decimal_digits }
    }

    fn x(&self, p: &Point) -> Rational {
        &self.origin_x + &p.x * &self.scale
    }

    fn y(&self, p: &Point) -> Rational {
        &self.origin_y - &p.y * &self.scale
    }

    fn num(&self, r: &Rational) -> String {
        fmt_num(r, self.digits)
    }

    fn xy(&self, p: &Point) -> (String, String) {
        (self.num(&self.x(p)), self.num(&self.y(p)))
    }

    /// Segment of `l` inside the visible world rectangle.
    fn clip(&self, l: &Line) -> Option<(Point, Point)> {
        let w = &self.world;
        let a = Rational::from_integer(l.a().clone());
        let b = Rational::from_integer(l.b().clone());
        let c = Rational::from_integer(l.c().clone());
        let mut hits: Vec<Point> = Vec::new();
        if !b.is_zero() {
            for x in [&w.min_x, &w.max_x] {
                let y = -(&a * x + &c) / &b;
                if y >= w.min_y && y <= w.max_y {
                    hits.push(Point::new(x.clone(), y));
                }
            }
        }
        if !a.is_zero() {
            for y in [&w.min_y, &w.max_y] {
                let x = -(&b * y + &c) / &a;
                if x >= w.min_x && x <= w.max_x {
                    hits.push(Point::new(x, y.clone()));
                }
            }
        }
        hits.sort_by(|p, q| p.x.cmp(&q.x).then_with(|| p.y.cmp(&q.y)));
        hits.dedup();
        match hits.len() {
            0 | 1 => None,
            n => Some((hits[0].clone(), hits[n - 1].clone())),
        }
    }
}

fn scene_bbox(scene: &Scene) -> Option<BBox> {
    let mut bb = None;
    for e in &scene.elements {
        match e {
            Element::Point { at, .. } => BBox::point(&mut bb, at),
            Element::Segment { from, to } => {
                BBox::point(&mut bb, from);
                BBox::point(&mut bb, to);
            }
            Element::Polygon(pts) => pts.iter().for_each(|p| BBox::point(&mut bb, p)),
            Element::Circle(k) => {
                let r = radius_upper_bound(k.radius_sq());
                let c = k.center();
                BBox::include(&mut bb, &(&c.x - &r), &(&c.y - &r));
                BBox::include(&mut bb, &(&c.x + &r), &(&c.y + &r));
            }
            // The curve lies in the triangle of its endpoints and control point.
            Element::Arc(arc) => {
                BBox::point(&mut bb, arc.start());
                BBox::point(&mut bb, arc.end());
                BBox::point(&mut bb, arc.control());
            }
            Element::Line(_) => {}
        }
    }
    bb
}

fn write_circle(out: &mut String, vp: &Viewport, k: &Circle) {
    let (cx, cy) = vp.xy(k.center());
    let r = sqrt_decimal(&(k.radius_sq() * &vp.scale.square()), vp.digits);
    let _ = writeln!(out, r##"<circle cx="{cx}" cy="{cy}" r="{r}" fill="none" stroke="#2a9d57" stroke-width="1.5"/>"##);
}

/// Renders a scene as an SVG 1.1 document.
pub fn render_svg(scene: &Scene, opts: &RenderOptions) -> Result<String, SceneError> {
    if scene.is_empty() {
        return Err(SceneError::EmptyScene);
    }
    let bb = match scene_bbox(scene) {
        Some(bb) => bb,
        // Only lines: frame the region around the origin.
        None => BBox {
            min_x: Rational::from_integer(-5),
            min_y: Rational::from_integer(-5),
            max_x: Rational::from_integer(5),
            max_y: Rational::from_integer(5),
        },
    };
    let vp = Viewport::fit(bb, opts);
    let (w, h) = (opts.width, opts.height);
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let mut labels = String::new();
    for e in &scene.elements {
        match e {
            Element::Polygon(pts) => {
                let coords: Vec<String> = pts
                    .iter()
                    .map(|p| {
                        let (x, y) = vp.xy(p);
                        format!("{x},{y}")
                    })
                    .collect();
                let _ = writeln!(
                    out,
                    r##"<polygon points="{}" fill="none" stroke="#777777" stroke-width="1"/>"##,
                    coords.join(" ")
                );
            }
            Element::Circle(k) => write_circle(&mut out, &vp, k),
            Element::Segment { from, to } => {
                let (x1, y1) = vp.xy(from);
                let (x2, y2) = vp.xy(to);
                let _ = writeln!(
                    out,
                    r##"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#444444" stroke-width="1"/>"##
                );
            }
            Element::Line(l) => {
                if let Some((p, q)) = vp.clip(l) {
                    let (x1, y1) = vp.xy(&p);
                    let (x2, y2) = vp.xy(&q);
                    let _ = writeln!(
                        out,
                        r##"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#999999" stroke-width="1" stroke-dasharray="4 3"/>"##
                    );
                }
            }
            Element::Arc(arc) => {
                debug_assert!(arc.start_tangent().contains(arc.control()));
                debug_assert!(arc.end_tangent().contains(arc.control()));
                let (x0, y0) = vp.xy(arc.start());
                let (cx, cy) = vp.xy(arc.control());
                let (x1, y1) = vp.xy(arc.end());
                let _ = writeln!(
                    out,
                    r##"<path d="M {x0} {y0} Q {cx} {cy} {x1} {y1}" fill="none" stroke="#1f5fbf" stroke-width="2"/>"##
                );
            }
            Element::Point { label, at } => {
                let x = vp.x(at);
                let y = vp.y(at);
                let half = Rational::from_integer(MARKER / 2);
                let _ = writeln!(
                    out,
                    r##"<rect x="{}" y="{}" width="{MARKER}" height="{MARKER}" fill="#c0392b"/>"##,
                    vp.num(&(&x - &half)),
                    vp.num(&(&y - &half))
                );
                if !label.is_empty() {
                    let off = Rational::from_integer(MARKER);
                    let _ = writeln!(
                        labels,
                        r#"<text x="{}" y="{}" font-family="sans-serif" font-size="12">{}</text>"#,
                        vp.num(&(&x + &off)),
                        vp.num(&(&y - &off)),
                        escape(label)
                    );
                }
            }
        }
    }
    out.push_str(&labels);
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scene::ParabolaArc;
    use parbelos_core::parbelos::build_parbelos;
    use parbelos_core::Side;

    fn canonical_scene() -> Scene {
        let fig = build_parbelos(&Point::from_ints(0, 0), &Point::from_ints(1, 0), &Point::from_ints(4, 0), Side::Left)
            .unwrap();
        Scene::parbelos(&fig).unwrap()
    }

    #[test]
    fn empty_scene_rejected() {
        assert_eq!(render_svg(&Scene::default(), &RenderOptions::default()), Err(SceneError::EmptyScene));
    }

    #[test]
    fn parbelos_document_shape() {
        let svg = render_svg(&canonical_scene(), &RenderOptions::default()).unwrap();
        assert!(svg.starts_with("<?xml"));
        assert_eq!(svg.matches("<path").count(), 3);
        assert_eq!(svg.matches(" Q ").count(), 3);
        assert_eq!(svg.matches("<circle").count(), 1);
        assert!(svg.matches("<text").count() >= 8);
        assert_eq!(svg, render_svg(&canonical_scene(), &RenderOptions::default()).unwrap());
    }

    #[test]
    fn y_axis_is_flipped() {
        let mut s = Scene::default();
        s.push(Element::Point { label: "low".into(), at: Point::from_ints(0, 0) });
        s.push(Element::Point { label: "high".into(), at: Point::from_ints(0, 1) });
        let opts = RenderOptions { width: 100, height: 100, margin: 0, decimal_digits: 3 };
        let svg = render_svg(&s, &opts).unwrap();
        // Scale 50, centred vertically: y=0 lands at 75, y=1 at 25.
        assert!(svg.contains(r#"<rect x="48" y="73""#), "{svg}");
        assert!(svg.contains(r#"<rect x="48" y="23""#), "{svg}");
    }

    #[test]
    fn control_point_serialized_from_exact_value() {
        let fig = build_parbelos(&Point::from_ints(0, 0), &Point::from_ints(1, 0), &Point::from_ints(4, 0), Side::Left)
            .unwrap();
        let arc = ParabolaArc::new(&fig.outer, &fig.c1, &fig.c3).unwrap();
        let mut s = Scene::default();
        s.push(Element::Arc(Box::new(arc)));
        let opts = RenderOptions { width: 400, height: 200, margin: 0, decimal_digits: 6 };
        // bbox x∈[0,4], y∈[-2,0]: scale 100, origin (0,0) after flip.
        let svg = render_svg(&s, &opts).unwrap();
        assert!(svg.contains(r#"d="M 0 0 Q 200 200 400 0""#), "{svg}");
    }

    #[test]
    fn sqrt_decimal_rounds() {
        assert_eq!(sqrt_decimal(&Rational::new(5, 4), 6), "1.118034");
        assert_eq!(sqrt_decimal(&Rational::from_integer(4), 12), "2");
        assert_eq!(sqrt_decimal(&Rational::zero(), 3), "0");
    }

    #[test]
    fn radius_bound_covers_root() {
        for (n, d) in [(5, 4), (2, 1), (9, 4), (1, 3)] {
            let r2 = Rational::new(n, d);
            let ub = radius_upper_bound(&r2);
            assert!(ub.square() >= r2);
        }
        assert_eq!(radius_upper_bound(&Rational::new(9, 4)), Rational::new(3, 2));
    }

    #[test]
    fn lines_are_clipped() {
        let mut s = Scene::default();
        s.push(Element::Point { label: String::new(), at: Point::from_ints(0, 0) });
        s.push(Element::Point { label: String::new(), at: Point::from_ints(1, 1) });
        s.push(Element::Line(Line::new(1, -1, 0).unwrap()));
        let opts = RenderOptions { width: 100, height: 100, margin: 0, decimal_digits: 3 };
        let svg = render_svg(&s, &opts).unwrap();
        assert!(svg.contains(r#"<line x1="0" y1="100" x2="100" y2="0""#), "{svg}");
    }

    #[test]
    fn labels_escaped() {
        assert_eq!(escape("a<b&\"c\""), "a&lt;b&amp;&quot;c&quot;");
    }
}
