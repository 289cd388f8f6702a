use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::PadicError;
use crate::arith::{rational_valuation, valuation_u64, Rational};
use crate::poly::{IntPoly, QPoly};

/// Edge of a Newton polygon from x-index `start` to `end`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    pub start: usize,
    pub end: usize,
    /// Rise over run; the roots attached to the edge have valuation -slope.
    #[serde(with = "crate::arith::serde_dec::rational")]
    pub slope: Rational,
}

impl Segment {
    pub fn length(&self) -> usize {
        self.end - self.start
    }

    /// Valuation of each root attached to this edge.
    pub fn root_valuation(&self) -> Rational {
        -self.slope.clone()
    }
}

/// Lower convex hull of the points (i, v_p(a_i)), a_i != 0.
///
/// Indices refer to the input polynomial. A power x^r dividing the input is
/// recorded in `zero_roots` (roots of valuation infinity) and the hull
/// starts at i = r.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewtonPolygon {
    pub p: u64,
    pub vertices: Vec<(usize, i64)>,
    pub zero_roots: usize,
}

impl NewtonPolygon {
    fn from_points(p: u64, points: Vec<(usize, i64)>) -> Result<Self, PadicError> {
        let Some(&(first, _)) = points.first() else {
            return Err(PadicError::ConstantPolynomial);
        };
        if points.last().unwrap().0 == first {
            return Err(PadicError::ConstantPolynomial);
        }
        let mut hull: Vec<(usize, i64)> = Vec::new();
        for pt in points {
            while hull.len() >= 2 {
                let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
                // Drop b unless it lies strictly below the chord a..pt.
                let cross =
                    (b.0 as i128 - a.0 as i128) * (pt.1 as i128 - a.1 as i128) - (b.1 as i128 - a.1 as i128) * (pt.0 as i128 - a.0 as i128);
                if cross <= 0 {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(pt);
        }
        Ok(Self { p, vertices: hull, zero_roots: first })
    }

    pub fn segments(&self) -> Vec<Segment> {
        self.vertices
            .windows(2)
            .map(|w| Segment {
                start: w[0].0,
                end: w[1].0,
                slope: Rational::new(BigInt::from(w[1].1 - w[0].1), BigInt::from((w[1].0 - w[0].0) as i64)),
            })
            .collect()
    }

    /// (valuation, count) per edge, left to right (decreasing valuation).
    pub fn root_valuation_partition(&self) -> Vec<(Rational, usize)> {
        self.segments().iter().map(|s| (s.root_valuation(), s.length())).collect()
    }

    /// Number of roots (with multiplicity) of valuation at least `m`,
    /// including roots at zero.
    pub fn roots_with_valuation_at_least(&self, m: &Rational) -> usize {
        self.zero_roots + self.root_valuation_partition().iter().filter(|(v, _)| v >= m).map(|(_, c)| c).sum::<usize>()
    }
}

/// Newton polygon of an integer polynomial at p.
pub fn newton_polygon(f: &IntPoly, p: u64) -> Result<NewtonPolygon, PadicError> {
    let points: Vec<(usize, i64)> =
        f.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, valuation_u64(c, p).unwrap() as i64)).collect();
    NewtonPolygon::from_points(p, points)
}

/// Newton polygon of a rational polynomial at p.
pub fn newton_polygon_rational(f: &QPoly, p: u64) -> Result<NewtonPolygon, PadicError> {
    let points: Vec<(usize, i64)> =
        f.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, rational_valuation(c, p).unwrap())).collect();
    NewtonPolygon::from_points(p, points)
}

/// Newton polygon of f(x + shift).
pub fn newton_polygon_shifted(f: &IntPoly, p: u64, shift: i64) -> Result<NewtonPolygon, PadicError> {
    newton_polygon(&f.shift(&BigInt::from(shift)), p)
}
