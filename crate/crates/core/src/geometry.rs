//! Planar geometry over the complex plane.
//!
//! The reachable set of a Fourier coefficient over an interval signal is a
//! convex polygon. This module builds such polygons with Andrew's monotone
//! chain and answers the two questions the amplitude bounds need: is the
//! origin inside, and how near or far from the origin does the region reach.

use num_complex::Complex;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::interval::ComplexInterval;
use crate::scalar::Scalar;

/// A point of the plane; `x` is the real part and `y` the imaginary part.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> Point<T> {
    pub fn new(x: T, y: T) -> Self {
        Self { x, y }
    }

    pub fn origin() -> Self {
        Self::new(T::zero(), T::zero())
    }

    pub fn norm(&self) -> T {
        self.x.hypot(self.y)
    }

    pub fn distance(&self, other: &Self) -> T {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn to_complex(self) -> Complex<T> {
        Complex::new(self.x, self.y)
    }

    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y)
    }

    fn norm_sqr(&self) -> T {
        self.x * self.x + self.y * self.y
    }
}

impl<T> From<Complex<T>> for Point<T> {
    fn from(z: Complex<T>) -> Self {
        Self { x: z.re, y: z.im }
    }
}

/// `(a - o) x (b - o)`; positive for a counter-clockwise turn.
fn cross<T: Scalar>(o: Point<T>, a: Point<T>, b: Point<T>) -> T {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

/// True when `o -> a -> b` turns counter-clockwise by more than the
/// collinearity tolerance.
fn is_strict_left_turn<T: Scalar>(o: Point<T>, a: Point<T>, b: Point<T>) -> bool {
    let scale = a.sub(o).norm_sqr().max(b.sub(o).norm_sqr());
    cross(o, a, b) > T::geometric_tolerance() * scale
}

/// Distance from `p` to the closed segment `a..b`.
fn segment_distance<T: Scalar>(p: Point<T>, a: Point<T>, b: Point<T>) -> T {
    let ab = b.sub(a);
    let len2 = ab.norm_sqr();
    if len2 == T::zero() {
        return p.distance(&a);
    }
    let ap = p.sub(a);
    let t = ((ap.x * ab.x + ap.y * ab.y) / len2).max(T::zero()).min(T::one());
    p.distance(&Point::new(a.x + t * ab.x, a.y + t * ab.y))
}

fn lex_cmp<T: Scalar>(a: &Point<T>, b: &Point<T>) -> std::cmp::Ordering {
    a.x.partial_cmp(&b.x)
        .unwrap_or(std::cmp::Ordering::Equal)
        .then(a.y.partial_cmp(&b.y).unwrap_or(std::cmp::Ordering::Equal))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RegionKind {
    Polygon,
    Segment,
    Point,
}

/// A convex region of the plane.
///
/// Vertices run counter-clockwise from the lexicographically smallest one and
/// are in strictly convex position. Degenerate regions keep one vertex
/// (`Point`) or the two segment endpoints (`Segment`).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvexRegion<T> {
    vertices: Vec<Point<T>>,
    kind: RegionKind,
}

/// Convex hull by monotone chain, O(M log M).
///
/// Interior points are dropped, near-duplicates merged, and vertices whose turn
/// is collinear within tolerance removed.
pub fn convex_hull<T: Scalar>(points: &[Point<T>]) -> Result<ConvexRegion<T>> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    for p in points {
        for v in [p.x, p.y] {
            if !v.is_finite() {
                return Err(Error::NonFinite { value: v.to_f64_lossy() });
            }
        }
    }
    let mut sorted = points.to_vec();
    sorted.sort_by(lex_cmp);

    let scale = sorted
        .iter()
        .fold(T::zero(), |m, p| m.max(p.x.abs()).max(p.y.abs()));
    let merge = T::geometric_tolerance() * scale;
    sorted.dedup_by(|b, a| (a.x - b.x).abs() <= merge && (a.y - b.y).abs() <= merge);

    if sorted.len() == 1 {
        return Ok(ConvexRegion {
            vertices: sorted,
            kind: RegionKind::Point,
        });
    }

    let mut hull: Vec<Point<T>> = Vec::with_capacity(sorted.len() + 1);
    for &p in &sorted {
        while hull.len() >= 2 && !is_strict_left_turn(hull[hull.len() - 2], hull[hull.len() - 1], p) {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in sorted.iter().rev().skip(1) {
        while hull.len() >= lower_len
            && !is_strict_left_turn(hull[hull.len() - 2], hull[hull.len() - 1], p)
        {
            hull.pop();
        }
        hull.push(p);
    }
    // The upper chain ends where the lower chain began.
    hull.pop();

    let kind = match hull.len() {
        0 | 1 => unreachable!("at least two distinct points survive deduplication"),
        2 => RegionKind::Segment,
        _ => RegionKind::Polygon,
    };
    Ok(ConvexRegion { vertices: hull, kind })
}

impl<T: Scalar> ConvexRegion<T> {
    pub fn point(p: Point<T>) -> Self {
        Self {
            vertices: vec![p],
            kind: RegionKind::Point,
        }
    }

    /// The rectangle spanned by a complex interval.
    pub fn from_box(b: &ComplexInterval<T>) -> Self {
        let corners: Vec<Point<T>> = b.corners().iter().map(|&z| z.into()).collect();
        convex_hull(&corners).expect("box corners are finite")
    }

    pub fn vertices(&self) -> &[Point<T>] {
        &self.vertices
    }

    pub fn kind(&self) -> RegionKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Boundary edges as vertex pairs. A segment yields itself once; a point
    /// yields nothing.
    pub fn edges(&self) -> impl Iterator<Item = (Point<T>, Point<T>)> + '_ {
        let n = self.vertices.len();
        let count = match self.kind {
            RegionKind::Polygon => n,
            RegionKind::Segment => 1,
            RegionKind::Point => 0,
        };
        (0..count).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Largest vertex magnitude, used to scale tolerances.
    fn magnitude(&self) -> T {
        self.vertices
            .iter()
            .fold(T::zero(), |m, v| m.max(v.x.abs()).max(v.y.abs()))
    }

    /// True when `p` is inside the region or within `slack` of it.
    pub fn contains(&self, p: Point<T>, slack: T) -> bool {
        match self.kind {
            RegionKind::Polygon => self.edges().all(|(a, b)| {
                let len = a.distance(&b);
                cross(a, b, p) >= -slack * len
            }),
            _ => self.distance_to(p) <= slack,
        }
    }

    /// Euclidean distance from `p` to the region; zero inside.
    pub fn distance_to(&self, p: Point<T>) -> T {
        match self.kind {
            RegionKind::Point => p.distance(&self.vertices[0]),
            RegionKind::Segment => segment_distance(p, self.vertices[0], self.vertices[1]),
            RegionKind::Polygon => {
                if self.edges().all(|(a, b)| cross(a, b, p) >= T::zero()) {
                    T::zero()
                } else {
                    self.edges()
                        .map(|(a, b)| segment_distance(p, a, b))
                        .fold(T::infinity(), T::min)
                }
            }
        }
    }

    /// Componentwise extremes of the vertices.
    pub fn bounds(&self) -> ComplexInterval<T> {
        let (mut x0, mut x1, mut y0, mut y1) = (T::infinity(), T::neg_infinity(), T::infinity(), T::neg_infinity());
        for v in &self.vertices {
            x0 = x0.min(v.x);
            x1 = x1.max(v.x);
            y0 = y0.min(v.y);
            y1 = y1.max(v.y);
        }
        ComplexInterval::new(
            crate::interval::Interval::new(x0, x1).expect("finite vertices"),
            crate::interval::Interval::new(y0, y1).expect("finite vertices"),
        )
    }

    pub fn translate(&self, by: Point<T>) -> Self {
        Self {
            vertices: self
                .vertices
                .iter()
                .map(|v| Point::new(v.x + by.x, v.y + by.y))
                .collect(),
            kind: self.kind,
        }
    }

    /// Scales about the origin by a non-negative factor.
    pub fn scale(&self, factor: T) -> Self {
        if factor == T::zero() {
            return Self::point(Point::origin());
        }
        let scaled: Vec<Point<T>> = self
            .vertices
            .iter()
            .map(|v| Point::new(v.x * factor, v.y * factor))
            .collect();
        if factor > T::zero() {
            Self {
                vertices: scaled,
                kind: self.kind,
            }
        } else {
            convex_hull(&scaled).expect("finite vertices")
        }
    }

    /// Mirror image across the real axis.
    pub fn conjugate(&self) -> Self {
        let mirrored: Vec<Point<T>> = self.vertices.iter().map(|v| Point::new(v.x, -v.y)).collect();
        convex_hull(&mirrored).expect("finite vertices")
    }
}

/// Whether the origin lies inside the region or on its boundary, within a
/// tolerance relative to the region's magnitude.
pub fn origin_in_region<T: Scalar>(region: &ConvexRegion<T>) -> bool {
    region.contains(Point::origin(), T::geometric_tolerance() * region.magnitude())
}

/// Exact distance from the origin to the region: zero when enclosed,
/// otherwise the least point-to-edge distance, which may fall inside an edge.
pub fn min_distance_to_origin<T: Scalar>(region: &ConvexRegion<T>) -> T {
    if origin_in_region(region) {
        T::zero()
    } else {
        region.distance_to(Point::origin())
    }
}

/// Least vertex magnitude, or zero when the origin is enclosed. Only vertices
/// are examined, so this can exceed the true minimum.
pub fn min_vertex_distance_to_origin<T: Scalar>(region: &ConvexRegion<T>) -> T {
    if origin_in_region(region) {
        T::zero()
    } else {
        region
            .vertices()
            .iter()
            .map(Point::norm)
            .fold(T::infinity(), T::min)
    }
}

/// Greatest vertex magnitude; the norm is convex, so this is the maximum
/// over the whole region.
pub fn max_distance_to_origin<T: Scalar>(region: &ConvexRegion<T>) -> T {
    region
        .vertices()
        .iter()
        .map(Point::norm)
        .fold(T::zero(), T::max)
}
