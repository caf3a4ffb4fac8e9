//! Lower convex hulls of (index, valuation) point sets.

use num_traits::Zero;

use super::element::Valuation;
use crate::{Error, Rational, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Segment {
    pub slope: Rational,
    pub length: i64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NewtonPolygon {
    points: Vec<(i64, Rational)>,
    vertices: Vec<(i64, Rational)>,
    segments: Vec<Segment>,
    certain: bool,
}

fn slope(a: (i64, Rational), b: (i64, Rational)) -> Rational {
    (b.1 - a.1) / Rational::from_integer(b.0 - a.0)
}

impl NewtonPolygon {
    /// Polygon of finite points; indices may repeat (the lowest wins).
    pub fn new(points: &[(i64, Rational)]) -> Result<Self> {
        Self::with_bounds(points, &[])
    }

    /// Polygon of finite points plus points known only as lower bounds.
    /// The bound points do not shape the hull; `is_certain` reports whether
    /// all of them lie on or above it, in which case the hull is exact.
    pub fn with_bounds(points: &[(i64, Rational)], bounds: &[(i64, Rational)]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyNewtonPolygon);
        }
        let mut pts = points.to_vec();
        pts.sort();
        pts.dedup_by(|b, a| a.0 == b.0);
        let mut hull: Vec<(i64, Rational)> = Vec::with_capacity(pts.len());
        for &pt in &pts {
            while hull.len() >= 2 {
                let a = hull[hull.len() - 2];
                let b = hull[hull.len() - 1];
                if slope(a, b) >= slope(b, pt) {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(pt);
        }
        let segments: Vec<Segment> = hull
            .windows(2)
            .map(|w| Segment {
                slope: slope(w[0], w[1]),
                length: w[1].0 - w[0].0,
            })
            .collect();
        let mut poly = NewtonPolygon {
            points: pts,
            vertices: hull,
            segments,
            certain: true,
        };
        poly.certain = bounds.iter().all(|&(i, b)| match poly.height_at(i) {
            Some(h) => b >= h,
            None => false,
        });
        Ok(poly)
    }

    /// Polygon of a coefficient list `c_0, c_1, ...` given by valuations.
    pub fn from_valuations(vals: &[Valuation]) -> Result<Self> {
        let mut finite = Vec::new();
        let mut bounds = Vec::new();
        for (i, v) in vals.iter().enumerate() {
            match v {
                Valuation::Finite(r) => finite.push((i as i64, *r)),
                Valuation::AtLeast(r) => bounds.push((i as i64, *r)),
            }
        }
        Self::with_bounds(&finite, &bounds)
    }

    /// Height of the hull above index `i`, if `i` lies in its span.
    pub fn height_at(&self, i: i64) -> Option<Rational> {
        let first = self.vertices.first()?;
        if i == first.0 {
            return Some(first.1);
        }
        for w in self.vertices.windows(2) {
            if w[0].0 <= i && i <= w[1].0 {
                return Some(w[0].1 + slope(w[0], w[1]) * Rational::from_integer(i - w[0].0));
            }
        }
        None
    }

    pub fn points(&self) -> &[(i64, Rational)] {
        &self.points
    }

    pub fn vertices(&self) -> &[(i64, Rational)] {
        &self.vertices
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn is_certain(&self) -> bool {
        self.certain
    }

    /// Horizontal span of the hull.
    pub fn span(&self) -> i64 {
        match (self.vertices.first(), self.vertices.last()) {
            (Some(a), Some(b)) => b.0 - a.0,
            _ => 0,
        }
    }

    /// Root valuations (negated slopes) with multiplicities, largest first.
    pub fn root_valuations(&self) -> Vec<(Rational, i64)> {
        self.segments.iter().map(|s| (-s.slope, s.length)).collect()
    }

    /// Root valuations restricted to strictly positive values.
    pub fn positive_root_valuations(&self) -> Vec<(Rational, i64)> {
        self.root_valuations()
            .into_iter()
            .filter(|(v, _)| *v > Rational::zero())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn z_cubed_plus_3z() {
        let np = NewtonPolygon::new(&[(1, r(1, 1)), (3, r(0, 1))]).unwrap();
        assert_eq!(
            np.segments(),
            &[Segment {
                slope: r(-1, 2),
                length: 2
            }]
        );
        assert_eq!(np.root_valuations(), vec![(r(1, 2), 2)]);
    }

    #[test]
    fn collinear_points_merge() {
        let np = NewtonPolygon::new(&[(0, r(2, 1)), (1, r(1, 1)), (2, r(0, 1))]).unwrap();
        assert_eq!(np.segments().len(), 1);
        assert_eq!(np.vertices().len(), 2);
    }

    #[test]
    fn two_point_slope() {
        let np = NewtonPolygon::new(&[(2, r(5, 3)), (7, r(1, 3))]).unwrap();
        assert_eq!(np.segments()[0].slope, r(-4, 15));
        assert_eq!(np.span(), 5);
    }

    #[test]
    fn empty_is_an_error() {
        assert_eq!(NewtonPolygon::new(&[]), Err(Error::EmptyNewtonPolygon));
        let all_bounds = [Valuation::AtLeast(r(5, 1)), Valuation::AtLeast(r(5, 1))];
        assert!(NewtonPolygon::from_valuations(&all_bounds).is_err());
    }

    #[test]
    fn bound_points_below_hull_make_it_uncertain() {
        let pts = [(0, r(1, 1)), (3, r(0, 1))];
        assert!(NewtonPolygon::with_bounds(&pts, &[(1, r(1, 1))]).unwrap().is_certain());
        assert!(!NewtonPolygon::with_bounds(&pts, &[(1, r(1, 4))]).unwrap().is_certain());
    }
}
