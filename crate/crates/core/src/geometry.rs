//! Exact rational 2-D convex hulls, support functions, edge-slope sequences,
//! and the concave-usc counterexample `g`.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{cross, Rat, Vec2Q};
use crate::potential::PotentialParams;

/// Convex hull with vertices in strictly convex position, counterclockwise,
/// starting from the lexicographically smallest vertex. Degenerate inputs
/// yield a single point or a two-point segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullQ {
    vertices: Vec<Vec2Q>,
}

impl HullQ {
    pub fn vertices(&self) -> &[Vec2Q] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Whether `p` lies in the hull (boundary included). Exact.
    pub fn contains(&self, p: &Vec2Q) -> bool {
        match self.vertices.len() {
            0 => false,
            1 => &self.vertices[0] == p,
            2 => {
                let (a, b) = (&self.vertices[0], &self.vertices[1]);
                if !cross(a, b, p).is_zero() {
                    return false;
                }
                let t = b.sub(a);
                let s = p.sub(a).dot(&t);
                s >= Rat::zero() && s <= t.dot(&t)
            }
            n => (0..n).all(|i| {
                let a = &self.vertices[i];
                let b = &self.vertices[(i + 1) % n];
                !cross(a, b, p).is_negative()
            }),
        }
    }
}

/// Monotone-chain convex hull over exact rationals. Interior points and
/// points interior to an edge are discarded; the vertex order is
/// deterministic for any input order.
pub fn convex_hull(points: &[Vec2Q]) -> Result<HullQ> {
    if points.is_empty() {
        return Err(Error::InvalidParam { field: "points", message: "need at least one point".into() });
    }
    let mut pts: Vec<Vec2Q> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() == 1 {
        return Ok(HullQ { vertices: pts });
    }
    // Strict turns only: popping on cross <= 0 removes collinear points.
    let mut lower: Vec<Vec2Q> = Vec::new();
    for p in pts.iter() {
        while lower.len() >= 2
            && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive()
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Vec2Q> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive()
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    if lower.len() == 2 && upper.len() == 2 {
        // Collinear input: keep the two extremes as a segment.
        return Ok(HullQ { vertices: lower });
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    Ok(HullQ { vertices: lower })
}

/// Support function of the hull: maximum of the dot product over vertices.
pub fn hull_support(hull: &HullQ, direction: &Vec2Q) -> Result<Rat> {
    if direction.is_zero() {
        return Err(Error::ZeroDirection);
    }
    hull.vertices
        .iter()
        .map(|v| v.dot(direction))
        .max()
        .ok_or(Error::InvalidParam { field: "hull", message: "empty hull".into() })
}

/// Slopes of consecutive segments of a vertex sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct SlopeSeq {
    slopes: Vec<Rat>,
}

impl SlopeSeq {
    pub fn slopes(&self) -> &[Rat] {
        &self.slopes
    }

    /// Strictly monotone in one direction (all increasing or all decreasing).
    pub fn strictly_monotone(&self) -> bool {
        self.slopes.windows(2).all(|p| p[0] < p[1]) || self.slopes.windows(2).all(|p| p[0] > p[1])
    }
}

/// `m_k = (y_k − y_{k−1}) / (x_k − x_{k−1})` for a sequence with strictly
/// decreasing abscissae.
pub fn edge_slopes(ws: &[Vec2Q]) -> Result<SlopeSeq> {
    let mut slopes = Vec::new();
    for (i, pair) in ws.windows(2).enumerate() {
        let dx = pair[1].x.clone() - pair[0].x.clone();
        if dx.is_zero() {
            return Err(Error::RepeatedAbscissa { index: i + 1 });
        }
        let dy = pair[1].y.clone() - pair[0].y.clone();
        slopes.push(dy / dx);
    }
    Ok(SlopeSeq { slopes })
}

/// Extreme points realizable by orbits of period at most `max_period`:
/// `{w_0, …, w_{N−λ}, w_∞}` (the generating orbit of `w_k` has period
/// `k + λ`).
pub fn predicted_vertices(params: &PotentialParams, max_period: u32) -> Vec<Vec2Q> {
    let k_max = max_period.saturating_sub(params.lambda());
    let mut out: Vec<Vec2Q> = (0..=k_max).map(|k| params.w_point(k)).collect();
    out.push(params.w_infinity());
    out
}

/// The introduction's concave upper-semi-continuous counterexample on
/// `{x1² ≤ x2 ≤ 1}`: `g = 1 − x1²/x2` for `x2 > 0` and `g(0,0) = 1`.
pub fn gkr_g(x1: f64, x2: f64) -> Result<f64> {
    if !(x1 * x1 <= x2 && x2 <= 1.0) {
        return Err(Error::OutsideDomain { x: x1, y: x2 });
    }
    if x2 == 0.0 {
        // Domain forces x1 = 0 here.
        return Ok(1.0);
    }
    Ok(1.0 - x1 * x1 / x2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn v(x: (i64, i64), y: (i64, i64)) -> Vec2Q {
        Vec2Q::new(rat(x.0, x.1), rat(y.0, y.1))
    }

    #[test]
    fn hull_drops_edge_interior_points() {
        let pts = vec![
            Vec2Q::zero(),
            Vec2Q::from_ints(1, 0),
            v((13, 16), (1, 8)),
            v((1, 2), (0, 1)),
        ];
        let hull = convex_hull(&pts).unwrap();
        assert_eq!(
            hull.vertices(),
            &[Vec2Q::zero(), Vec2Q::from_ints(1, 0), v((13, 16), (1, 8))]
        );
    }

    #[test]
    fn hull_degenerate_cases() {
        let hull = convex_hull(&[Vec2Q::zero()]).unwrap();
        assert_eq!(hull.vertices(), &[Vec2Q::zero()]);
        let seg = convex_hull(&[
            Vec2Q::from_ints(2, 2),
            Vec2Q::zero(),
            Vec2Q::from_ints(1, 1),
        ])
        .unwrap();
        assert_eq!(seg.vertices(), &[Vec2Q::zero(), Vec2Q::from_ints(2, 2)]);
        assert!(convex_hull(&[]).is_err());
    }

    #[test]
    fn hull_of_small_orbit_rotation_vectors_is_triangle() {
        let params = PotentialParams::default();
        let orbits = crate::symbolic::enumerate_orbits(3, 4).unwrap();
        assert_eq!(orbits.len(), 32);
        let rvs: Vec<Vec2Q> =
            orbits.iter().map(|o| params.rotation_vector(o).unwrap()).collect();
        let hull = convex_hull(&rvs).unwrap();
        assert_eq!(
            hull.vertices(),
            &[params.w_infinity(), params.w_point(0), params.w_point(1)]
        );
    }

    #[test]
    fn support_examples() {
        let hull = convex_hull(&[
            Vec2Q::zero(),
            Vec2Q::from_ints(1, 0),
            v((13, 16), (1, 8)),
        ])
        .unwrap();
        assert_eq!(hull_support(&hull, &Vec2Q::from_ints(0, 1)).unwrap(), rat(1, 8));
        assert_eq!(hull_support(&hull, &Vec2Q::from_ints(1, 0)).unwrap(), rat(1, 1));
        assert_eq!(hull_support(&hull, &Vec2Q::from_ints(-1, -1)).unwrap(), rat(0, 1));
        assert!(hull_support(&hull, &Vec2Q::zero()).is_err());
    }

    #[test]
    fn slope_examples() {
        let params = PotentialParams::default();
        let ws: Vec<Vec2Q> = (0..=3).map(|k| params.w_point(k)).collect();
        let slopes = edge_slopes(&ws).unwrap();
        assert_eq!(slopes.slopes(), &[rat(-2, 3), rat(-1, 6), rat(8, 207)]);
        assert!(edge_slopes(&[Vec2Q::zero(), Vec2Q::from_ints(0, 1)]).is_err());
    }

    #[test]
    fn predicted_vertex_examples() {
        let params = PotentialParams::default();
        let got = predicted_vertices(&params, 4);
        assert_eq!(got, vec![params.w_point(0), params.w_point(1), params.w_infinity()]);
        let got = predicted_vertices(&params, 5);
        assert_eq!(
            got,
            vec![params.w_point(0), params.w_point(1), params.w_point(2), params.w_infinity()]
        );
        let got = predicted_vertices(&params, 3);
        assert_eq!(got, vec![params.w_point(0), params.w_infinity()]);
    }

    #[test]
    fn gkr_examples() {
        assert_eq!(gkr_g(0.0, 0.0).unwrap(), 1.0);
        assert_eq!(gkr_g(0.5, 0.25).unwrap(), 0.0);
        assert_eq!(gkr_g(0.5, 0.5).unwrap(), 0.5);
        assert!(gkr_g(1.0, 0.5).is_err());
        assert!(gkr_g(0.1, 1.5).is_err());
    }
}
