use thiserror::Error;

/// Construction and precondition failures across the kernel.
///
/// Theorem checks never use these for a failed verdict; a false predicate is
/// reported in a [`crate::TheoremReport`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),
    #[error("line coefficients a and b are both zero")]
    InvalidLine,
    #[error("circle radius must be positive")]
    InvalidCircle,
    #[error("points coincide")]
    CoincidentPoints,
    #[error("degenerate triangle (collinear or coincident vertices)")]
    DegenerateTriangle,
    #[error("lines are parallel")]
    ParallelLines,
    #[error("point is not incident to the given line and circle")]
    PointNotIncident,
    #[error("focus lies on the directrix")]
    FocusOnDirectrix,
    #[error("point is not on the parabola")]
    PointNotOnParabola,
    #[error("half-plane reference point lies on the line")]
    DegenerateSide,
    #[error("line {0} is not tangent to the parabola")]
    NotTangent(usize),
    #[error("tangent lines are parallel or equal")]
    ParallelTangents,
    #[error("circle does not pass through both the focus and the tangent intersection")]
    CircleMissesFocusOrI,
    #[error("both second intersections coincide with the tangent intersection")]
    BothIntersectionsDegenerate,
    #[error("cusps are not collinear")]
    CuspsNotCollinear,
    #[error("middle cusp is not strictly between the outer cusps")]
    CuspNotInterior,
    #[error("rotation (p, q) must satisfy p^2 + q^2 = r^2 with rational r > 0")]
    InvalidRotation,
    #[error("scale factor must be positive")]
    InvalidScale,
}
