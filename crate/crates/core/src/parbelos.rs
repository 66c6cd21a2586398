//! The parbelos: three parabolas opening the same way whose latera recta are
//! `C1C2`, `C2C3` and `C1C3` for collinear cusps `C1, C2, C3`.
//!
//! The cusp tangents form the tangent rectangle `C2 T1 T2 T3`. Its diagonal
//! `T1T3` touches the outer parabola at a point of the cusp bisector; the
//! checks in [`verify_sondow`] and [`verify_corollaries`] confirm this and the
//! related incidences exactly on any instance.

use serde::Serialize;

use crate::euclid::{
    circumcircle, dist_sq, intersect, is_collinear, line_through, midpoint, on_circle, pedal_point,
    perpendicular_through, Circle, Line, Point, Vector,
};
use crate::parabola::{is_tangent, parabola_from_latus_rectum, Parabola, Side};
use crate::theorems::TheoremReport;
use crate::{GeomError, Rational, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParbelosFigure {
    #[serde(rename = "C1")]
    pub c1: Point,
    #[serde(rename = "C2")]
    pub c2: Point,
    #[serde(rename = "C3")]
    pub c3: Point,
    pub side: Side,
    pub inner1: Parabola,
    pub inner2: Parabola,
    pub outer: Parabola,
    #[serde(rename = "tangent_at_C1")]
    pub tangent_at_c1: Line,
    #[serde(rename = "tangent_at_C3")]
    pub tangent_at_c3: Line,
    /// Tangent of `inner1` at `C2`.
    #[serde(rename = "tangent_at_C2_left")]
    pub tangent_at_c2_left: Line,
    /// Tangent of `inner2` at `C2`.
    #[serde(rename = "tangent_at_C2_right")]
    pub tangent_at_c2_right: Line,
    #[serde(rename = "T1")]
    pub t1: Point,
    #[serde(rename = "T2")]
    pub t2: Point,
    #[serde(rename = "T3")]
    pub t3: Point,
    /// Square circumscribing the tangent rectangle with sides parallel and
    /// perpendicular to the cusp line, listed around the boundary starting
    /// on the cusp line below `T1`.
    #[serde(rename = "square_R")]
    pub square_r: [Point; 4],
    #[serde(rename = "center_O")]
    pub center_o: Point,
    #[serde(rename = "circumcircle_K")]
    pub circumcircle_k: Circle,
    #[serde(rename = "focus_F")]
    pub focus_f: Point,
    pub diagonal: Line,
    #[serde(rename = "contact_T")]
    pub contact_t: Point,
    pub bisector: Line,
    #[serde(rename = "H")]
    pub h: Point,
    #[serde(rename = "A1")]
    pub a1: Point,
    #[serde(rename = "A3")]
    pub a3: Point,
}

/// Cusps plus the shared opening side: everything needed to build a figure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParbelosInputs {
    pub c1: Point,
    pub c2: Point,
    pub c3: Point,
    pub side: Side,
}

impl ParbelosInputs {
    pub fn new(c1: Point, c2: Point, c3: Point, side: Side) -> Self {
        ParbelosInputs { c1, c2, c3, side }
    }

    pub fn build(&self) -> Result<ParbelosFigure> {
        build_parbelos(&self.c1, &self.c2, &self.c3, self.side)
    }
}

impl ParbelosFigure {
    pub fn cusp_line(&self) -> Line {
        line_through(&self.c1, &self.c3).expect("cusps are distinct")
    }

    pub fn inputs(&self) -> ParbelosInputs {
        ParbelosInputs::new(self.c1.clone(), self.c2.clone(), self.c3.clone(), self.side)
    }
}

pub fn build_parbelos(c1: &Point, c2: &Point, c3: &Point, side: Side) -> Result<ParbelosFigure> {
    if c1 == c2 || c2 == c3 {
        return Err(GeomError::CuspNotInterior);
    }
    if !is_collinear(c1, c2, c3) {
        return Err(GeomError::CuspsNotCollinear);
    }
    if !c1.to(c2).dot(&c2.to(c3)).is_positive() {
        return Err(GeomError::CuspNotInterior);
    }

    let inner1 = parabola_from_latus_rectum(c1, c2, side)?;
    let inner2 = parabola_from_latus_rectum(c2, c3, side)?;
    let outer = parabola_from_latus_rectum(c1, c3, side)?;

    let tangent_at_c1 = outer.tangent_at(c1)?;
    let tangent_at_c3 = outer.tangent_at(c3)?;
    let tangent_at_c2_left = inner1.tangent_at(c2)?;
    let tangent_at_c2_right = inner2.tangent_at(c2)?;

    // Each outer cusp tangent is parallel to one of the two tangents at C2
    // and meets the other one.
    let (to_t1, to_t3) = if tangent_at_c1.is_parallel(&tangent_at_c2_left) {
        (&tangent_at_c2_right, &tangent_at_c2_left)
    } else {
        (&tangent_at_c2_left, &tangent_at_c2_right)
    };
    let t1 = intersect(&tangent_at_c1, to_t1)?;
    let t3 = intersect(&tangent_at_c3, to_t3)?;
    let t2 = intersect(&tangent_at_c1, &tangent_at_c3)?;

    let cusp_line = line_through(c1, c3)?;
    let through_c2 = cusp_line.parallel_through(c2);
    let through_t2 = cusp_line.parallel_through(&t2);
    let through_t1 = perpendicular_through(&cusp_line, &t1);
    let through_t3 = perpendicular_through(&cusp_line, &t3);
    let square_r = [
        intersect(&through_c2, &through_t1)?,
        intersect(&through_c2, &through_t3)?,
        intersect(&through_t2, &through_t3)?,
        intersect(&through_t2, &through_t1)?,
    ];
    let center_o = midpoint(c2, &t2);
    let circumcircle_k = circumcircle(c2, &t1, &t2)?;
    let focus_f = pedal_point(&t2, &cusp_line);
    let diagonal = line_through(&t1, &t3)?;
    let bisector = perpendicular_through(&cusp_line, c2);
    let contact_t = intersect(&diagonal, &bisector)?;
    let h = intersect(&bisector, outer.directrix())?;
    let a1 = intersect(&inner1.axis(), inner2.directrix())?;
    let a3 = intersect(&inner2.axis(), inner1.directrix())?;

    Ok(ParbelosFigure {
        c1: c1.clone(),
        c2: c2.clone(),
        c3: c3.clone(),
        side,
        inner1,
        inner2,
        outer,
        tangent_at_c1,
        tangent_at_c3,
        tangent_at_c2_left,
        tangent_at_c2_right,
        t1,
        t2,
        t3,
        square_r,
        center_o,
        circumcircle_k,
        focus_f,
        diagonal,
        contact_t,
        bisector,
        h,
        a1,
        a3,
    })
}

fn is_square_centered(corners: &[Point; 4], center: &Point) -> bool {
    let sides: Vec<Vector> = (0..4).map(|i| corners[i].to(&corners[(i + 1) % 4])).collect();
    let equal_sides = sides.iter().all(|s| s.norm_sq() == sides[0].norm_sq()) && !sides[0].is_zero();
    let right_angles = (0..4).all(|i| sides[i].dot(&sides[(i + 1) % 4]).is_zero());
    let centered = midpoint(&corners[0], &corners[2]) == *center && midpoint(&corners[1], &corners[3]) == *center;
    equal_sides && right_angles && centered
}

/// The diagonal `T1T3` touches the outer parabola, at a point of the cusp
/// bisector; `FT = HT`; `F` is on the circumcircle; `R` is a square about `O`.
pub fn verify_sondow(fig: &ParbelosFigure) -> TheoremReport {
    let ft = dist_sq(&fig.focus_f, &fig.contact_t);
    let ht = dist_sq(&fig.h, &fig.contact_t);
    let rectangle_center = midpoint(&fig.t1, &fig.t3);

    let mut report = TheoremReport::new("diagonal-tangency");
    report
        .witness("diagonal", fig.diagonal.clone())
        .witness("focus_pedal_on_diagonal", pedal_point(fig.outer.focus(), &fig.diagonal))
        .witness("supporting_line", fig.outer.supporting_line())
        .witness("contact_T", fig.contact_t.clone())
        .witness("FT_sq", ft.clone())
        .witness("HT_sq", ht.clone())
        .witness("circumcircle_K", fig.circumcircle_k.clone())
        .witness("center_O", fig.center_o.clone())
        .check("diagonal_tangent", is_tangent(&fig.outer, &fig.diagonal), "diagonal not tangent to outer parabola")
        .check("contact_on_parabola", fig.outer.contains_point(&fig.contact_t), "contact not on parabola")
        .check("contact_on_bisector", fig.bisector.contains(&fig.contact_t), "contact not on bisector")
        .check("ft_eq_ht", ft == ht, "FT != HT")
        .check("focus_on_circumcircle", on_circle(&fig.circumcircle_k, &fig.focus_f), "focus not on circumcircle")
        .check(
            "square_r_centered",
            is_square_centered(&fig.square_r, &fig.center_o) && rectangle_center == fig.center_o,
            "R is not a square sharing its center with the tangent rectangle",
        );
    report
}

pub fn verify_corollaries(fig: &ParbelosFigure) -> TheoremReport {
    let k = &fig.circumcircle_k;
    let f_t1 = dist_sq(&fig.focus_f, &fig.t1);
    let f_t3 = dist_sq(&fig.focus_f, &fig.t3);
    let h_t1 = dist_sq(&fig.h, &fig.t1);
    let h_t3 = dist_sq(&fig.h, &fig.t3);
    let a1_c2 = dist_sq(&fig.a1, &fig.c2);
    let a1_t2 = dist_sq(&fig.a1, &fig.t2);
    let a3_c2 = dist_sq(&fig.a3, &fig.c2);
    let a3_t2 = dist_sq(&fig.a3, &fig.t2);

    let mut report = TheoremReport::new("parbelos-corollaries");
    report
        .witness("FT1_sq", f_t1.clone())
        .witness("FT3_sq", f_t3.clone())
        .witness("H", fig.h.clone())
        .witness("HT1_sq", h_t1.clone())
        .witness("HT3_sq", h_t3.clone())
        .witness("A1", fig.a1.clone())
        .witness("A3", fig.a3.clone())
        .witness("A1C2_sq", a1_c2.clone())
        .witness("A1T2_sq", a1_t2.clone())
        .witness("A3C2_sq", a3_c2.clone())
        .witness("A3T2_sq", a3_t2.clone())
        .check("item1_f_equidistant", f_t1 == f_t3, "item 1: F not equidistant from T1 and T3")
        .check("item2_h_on_circle", on_circle(k, &fig.h), "item 2: H not on circumcircle")
        .check("item3_h_equidistant", h_t1 == h_t3, "item 3: H not equidistant from T1 and T3")
        .check(
            "item4_a1_a3_on_circle",
            on_circle(k, &fig.a1) && on_circle(k, &fig.a3),
            "item 4: A1 or A3 not on circumcircle",
        )
        .check(
            "item5_a_equidistant",
            a1_c2 == a1_t2 && a3_c2 == a3_t2,
            "item 5: A1 or A3 not equidistant from C2 and T2",
        );
    report
}

/// `x ↦ s·R·x + shift` with `R` the rotation by the angle of `(p, q)`.
///
/// Orientation-preserving, so a figure's opening side keeps its label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Similarity {
    cos: Rational,
    sin: Rational,
    scale: Rational,
    shift: Point,
}

impl Similarity {
    /// Needs `p² + q²` to be the square of a nonzero rational.
    pub fn new(scale: Rational, p: Rational, q: Rational, shift: Point) -> Result<Similarity> {
        if !scale.is_positive() {
            return Err(GeomError::InvalidScale);
        }
        let r = (p.square() + q.square()).sqrt_exact().ok_or(GeomError::InvalidRotation)?;
        if r.is_zero() {
            return Err(GeomError::InvalidRotation);
        }
        Ok(Similarity { cos: &p / &r, sin: &q / &r, scale, shift })
    }

    pub fn apply(&self, pt: &Point) -> Point {
        let x = &self.cos * &pt.x - &self.sin * &pt.y;
        let y = &self.sin * &pt.x + &self.cos * &pt.y;
        Point::new(&self.scale * x + &self.shift.x, &self.scale * y + &self.shift.y)
    }
}

pub fn similarity_transform(
    inputs: &ParbelosInputs,
    scale: Rational,
    rotation: (Rational, Rational),
    shift: Point,
) -> Result<ParbelosInputs> {
    let map = Similarity::new(scale, rotation.0, rotation.1, shift)?;
    Ok(ParbelosInputs::new(map.apply(&inputs.c1), map.apply(&inputs.c2), map.apply(&inputs.c3), inputs.side))
}
