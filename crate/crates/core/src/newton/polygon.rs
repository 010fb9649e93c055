use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{Signed, Zero};

use crate::arith::{is_prime_u64, IntPoly, ModPoly};

use super::{gauss_valuation, phi_expand, NewtonError};

/// A side of negative slope `-h/e`, `gcd(h, e) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolygonSide {
    start: (usize, Rational64),
    end: (usize, Rational64),
    slope: Rational64,
}

impl PolygonSide {
    fn new(start: (usize, Rational64), end: (usize, Rational64)) -> Self {
        assert!(end.0 > start.0, "sides run left to right");
        let slope = (end.1 - start.1) / Rational64::from_integer((end.0 - start.0) as i64);
        assert!(slope.is_negative(), "principal sides have negative slope");
        let side = PolygonSide { start, end, slope };
        assert!(side.length().is_multiple_of(side.e()), "e must divide the length");
        let h = side.height();
        if h.is_integer() {
            assert_eq!((side.length() as i64).gcd(h.numer()) as usize, side.degree());
        }
        side
    }

    pub fn start(&self) -> (usize, Rational64) {
        self.start
    }

    pub fn end(&self) -> (usize, Rational64) {
        self.end
    }

    pub fn slope(&self) -> Rational64 {
        self.slope
    }

    /// Numerator of `-slope`.
    pub fn h(&self) -> i64 {
        -*self.slope.numer()
    }

    /// Denominator of the slope; the ramification index of the side.
    pub fn e(&self) -> usize {
        *self.slope.denom() as usize
    }

    pub fn length(&self) -> usize {
        self.end.0 - self.start.0
    }

    pub fn height(&self) -> Rational64 {
        self.start.1 - self.end.1
    }

    /// `d = l / e`.
    pub fn degree(&self) -> usize {
        self.length() / self.e()
    }

    /// Ordinate of the line through the side at abscissa `x`.
    pub fn ordinate_at(&self, x: usize) -> Rational64 {
        self.start.1 + self.slope * Rational64::from_integer(x as i64 - self.start.0 as i64)
    }
}

impl fmt::Display for PolygonSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{})-({},{}) slope {}",
            self.start.0, self.start.1, self.end.0, self.end.1, self.slope
        )
    }
}

/// Sides of negative slope of a lower convex hull, left to right.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PrincipalPolygon {
    sides: Vec<PolygonSide>,
}

fn cross(o: (usize, Rational64), a: (usize, Rational64), b: (usize, Rational64)) -> Rational64 {
    let ax = Rational64::from_integer(a.0 as i64 - o.0 as i64);
    let bx = Rational64::from_integer(b.0 as i64 - o.0 as i64);
    ax * (b.1 - o.1) - (a.1 - o.1) * bx
}

impl PrincipalPolygon {
    /// Lower convex hull of the points, keeping only negative slopes.
    /// Collinear points are absorbed into a single side.
    pub fn from_points(points: &[(usize, Rational64)]) -> Self {
        let mut pts = points.to_vec();
        pts.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
        pts.dedup_by(|b, a| a.0 == b.0);
        let mut hull: Vec<(usize, Rational64)> = Vec::new();
        for p in pts {
            while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= Rational64::zero() {
                hull.pop();
            }
            hull.push(p);
        }
        let sides = hull
            .windows(2)
            .take_while(|w| w[1].1 < w[0].1)
            .map(|w| PolygonSide::new(w[0], w[1]))
            .collect();
        PrincipalPolygon { sides }
    }

    /// Polygon with the given integer vertices, which must already be convex
    /// with strictly increasing negative slopes.
    pub fn from_vertices(vertices: &[(usize, i64)]) -> Self {
        let pts: Vec<(usize, Rational64)> =
            vertices.iter().map(|&(x, y)| (x, Rational64::from_integer(y))).collect();
        let polygon = PrincipalPolygon::from_points(&pts);
        assert_eq!(polygon.vertices().len(), vertices.len(), "vertices are not in convex position");
        polygon
    }

    pub fn sides(&self) -> &[PolygonSide] {
        &self.sides
    }

    pub fn is_empty(&self) -> bool {
        self.sides.is_empty()
    }

    pub fn vertices(&self) -> Vec<(usize, Rational64)> {
        let mut out: Vec<_> = self.sides.iter().map(|s| s.start).collect();
        if let Some(last) = self.sides.last() {
            out.push(last.end);
        }
        out
    }

    /// Total length of the principal part.
    pub fn length(&self) -> usize {
        self.sides.iter().map(PolygonSide::length).sum()
    }

    /// Lattice points `(x, y)` with `x >= 1`, `y` strictly above the terminal
    /// ordinate and on or below the polygon.
    pub fn lattice_count(&self) -> u64 {
        let Some(last) = self.sides.last() else { return 0 };
        let baseline = last.end.1;
        let mut count = 0u64;
        for side in &self.sides {
            for x in side.start.0.max(1)..side.end.0 {
                let above = (side.ordinate_at(x) - baseline).floor().to_integer();
                if above > 0 {
                    count += above as u64;
                }
            }
        }
        count
    }
}

impl fmt::Display for PrincipalPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices().iter().map(|(x, y)| format!("({x},{y})")).collect();
        write!(f, "{}", vs.join("-"))
    }
}

/// `deg(phi)` times the lattice count of the polygon.
pub fn polygon_index(polygon: &PrincipalPolygon, deg_phi: usize) -> u64 {
    deg_phi as u64 * polygon.lattice_count()
}

pub(crate) fn check_phi(f: &IntPoly, phi: &IntPoly, p: u64) -> Result<(), NewtonError> {
    if !is_prime_u64(p) {
        return Err(NewtonError::NotPrime(p));
    }
    if !phi.is_monic() || phi.degree().unwrap_or(0) == 0 {
        return Err(NewtonError::NonMonicPhi);
    }
    let phi_bar = ModPoly::from_int_poly(phi, p);
    if !phi_bar.is_irreducible() {
        return Err(NewtonError::PhiReducible(p));
    }
    if !phi_bar.divides(&ModPoly::from_int_poly(f, p)) {
        return Err(NewtonError::PhiDoesNotDivide(p));
    }
    Ok(())
}

/// The principal `phi`-Newton polygon of `f` at `p`.
pub fn principal_polygon(f: &IntPoly, phi: &IntPoly, p: u64) -> Result<PrincipalPolygon, NewtonError> {
    check_phi(f, phi, p)?;
    let expansion = phi_expand(f, phi)?;
    let points: Vec<(usize, Rational64)> = expansion
        .coefficients()
        .iter()
        .enumerate()
        .filter_map(|(i, a)| gauss_valuation(a, p).map(|v| (i, Rational64::from_integer(v))))
        .collect();
    Ok(PrincipalPolygon::from_points(&points))
}
