//! Cross-module invariants: canonicalization, metric axioms, hull behavior,
//! and the geometric properties of the vertex sequence.

use num_traits::Zero;
use proptest::prelude::*;

use rotspec::exact::{rat, rat_pow, Rat, Vec2Q};
use rotspec::geometry::{convex_hull, edge_slopes, predicted_vertices};
use rotspec::potential::PotentialParams;
use rotspec::symbolic::{
    canonical_necklace, enumerate_orbits, orbit_points, theta_distance, PeriodicOrbit, Word,
};

fn word_strategy() -> impl Strategy<Value = Word> {
    proptest::collection::vec(0u8..3, 1..12).prop_map(|symbols| Word::new(symbols, 3).unwrap())
}

proptest! {
    #[test]
    fn canonical_is_idempotent_and_rotation_invariant(w in word_strategy(), j in 0usize..12) {
        let canon = canonical_necklace(&w).unwrap();
        prop_assert_eq!(canonical_necklace(&canon).unwrap(), canon.clone());
        prop_assert_eq!(canonical_necklace(&w.rotate(j)).unwrap(), canon);
    }

    #[test]
    fn theta_distance_is_symmetric(x in word_strategy(), y in word_strategy()) {
        let theta = rat(1, 2);
        let d_xy = theta_distance(&x, &y, &theta).unwrap();
        let d_yx = theta_distance(&y, &x, &theta).unwrap();
        prop_assert_eq!(d_xy, d_yx);
    }

    #[test]
    fn hull_is_idempotent(points in proptest::collection::vec((-8i64..8, -8i64..8), 1..24)) {
        let pts: Vec<Vec2Q> = points
            .into_iter()
            .map(|(x, y)| Vec2Q::new(rat(x, 3), rat(y, 5)))
            .collect();
        let hull = convex_hull(&pts).unwrap();
        let again = convex_hull(hull.vertices()).unwrap();
        prop_assert_eq!(hull.vertices(), again.vertices());
    }
}

/// Necklace count cross-check: for n <= 10, the number of aperiodic words of
/// length n over three symbols equals n times the number of orbits of prime
/// period n.
#[test]
fn necklace_counts_match_brute_force() {
    let orbits = enumerate_orbits(3, 10).unwrap();
    for n in 1..=10usize {
        let lyndon = orbits.iter().filter(|o| o.period() == n).count();
        let mut aperiodic = 0usize;
        for code in 0..3u64.pow(n as u32) {
            let mut symbols = Vec::with_capacity(n);
            let mut c = code;
            for _ in 0..n {
                symbols.push((c % 3) as u8);
                c /= 3;
            }
            if Word::new(symbols, 3).unwrap().primitive_period() == n {
                aperiodic += 1;
            }
        }
        assert_eq!(lyndon * n, aperiodic, "period {n}");
    }
}

/// The theta metric restricted to orbit points of period <= 5 satisfies the
/// metric axioms. With theta = 1/2 every distance is a dyadic power, so the
/// triangle inequality reduces to integer exponent comparisons.
#[test]
fn theta_metric_axioms_on_small_orbits() {
    let theta = rat(1, 2);
    let orbits = enumerate_orbits(3, 5).unwrap();
    let points: Vec<Word> = orbits.iter().flat_map(orbit_points).collect();
    let n = points.len();
    assert_eq!(n, 345);

    // Exponent representation: None = zero distance, Some(k) = theta^k.
    let mut expo = vec![vec![None::<u32>; n]; n];
    for i in 0..n {
        for j in 0..n {
            let d = theta_distance(&points[i], &points[j], &theta).unwrap();
            let k = rotspec::symbolic::first_difference(&points[i], &points[j]).map(|k| k as u32);
            match k {
                Some(k) => assert_eq!(d, rat_pow(&theta, k as i32)),
                None => assert!(d.is_zero()),
            }
            expo[i][j] = k;
        }
    }
    for i in 0..n {
        assert_eq!(expo[i][i], None, "identity of indiscernibles");
        for j in 0..n {
            assert_eq!(expo[i][j], expo[j][i], "symmetry");
            if i != j {
                assert!(expo[i][j].is_some(), "distinct points at distance zero");
            }
        }
    }
    // d(i,k) <= d(i,j) + d(j,k): with powers of 1/2 this holds iff
    // a >= min(b, c) or (b == c and a == b - 1).
    let triangle = |a: Option<u32>, b: Option<u32>, c: Option<u32>| -> bool {
        match (a, b, c) {
            (None, _, _) => true,
            (Some(_), None, c) => a == c,
            (Some(_), b, None) => a == b,
            (Some(a), Some(b), Some(c)) => a >= b.min(c) || (b == c && a + 1 == b),
        }
    };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                assert!(
                    triangle(expo[i][k], expo[i][j], expo[j][k]),
                    "triangle fails at ({i},{j},{k})"
                );
            }
        }
    }
}

/// Every rotation vector of period <= 10 lies in the parameter box and
/// inside the hull of the predicted extreme points.
#[test]
fn rotation_vectors_lie_in_predicted_hull() {
    let params = PotentialParams::default();
    let orbits = enumerate_orbits(3, 10).unwrap();
    let rvs = params.rotation_vectors(&orbits);
    let hull = convex_hull(&predicted_vertices(&params, 10)).unwrap();
    let zero = Rat::zero();
    for rv in &rvs {
        assert!(rv.x >= zero && rv.x <= *params.a());
        assert!(rv.y >= zero && rv.y <= *params.b());
        assert!(hull.contains(rv), "rv {rv} escapes the predicted hull");
    }
}

/// Slope monotonicity, extreme position, and the position strictly below
/// the graph of h, out to k = 20.
#[test]
fn vertex_sequence_geometry_to_k20() {
    let params = PotentialParams::default();
    let ws: Vec<Vec2Q> = (0..=20).map(|k| params.w_point(k)).collect();
    let slopes = edge_slopes(&ws).unwrap();
    assert!(slopes.strictly_monotone());
    assert_eq!(slopes.slopes()[0], rat(-2, 3));

    let mut pts = ws.clone();
    pts.push(params.w_infinity());
    let hull = convex_hull(&pts).unwrap();
    assert_eq!(hull.len(), pts.len(), "every w_k must be extreme");

    for w in &ws {
        assert!(params.strictly_below_h(w), "{w} not strictly below h");
    }
}

/// Small-scale version of the Lipschitz scan (the full period-8 scan is an
/// acceptance criterion): all orbit-point pairs with period <= 5, exact.
#[test]
fn lipschitz_ratio_small_scale() {
    let params = PotentialParams::default();
    let theta = params.theta().clone();
    let bound = params.lipschitz_bound();
    let orbits = enumerate_orbits(3, 5).unwrap();
    let points: Vec<Word> = orbits.iter().flat_map(orbit_points).collect();
    let values: Vec<Vec2Q> =
        points.iter().map(|p| params.phi_on_periodic(p).unwrap()).collect();
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            let delta = values[i].sub(&values[j]).sup_norm();
            if delta.is_zero() {
                continue;
            }
            let k = rotspec::symbolic::first_difference(&points[i], &points[j])
                .expect("distinct points differ");
            assert!(
                delta <= bound.clone() * rat_pow(&theta, k as i32),
                "pair ({}, {}) violates the bound",
                points[i],
                points[j]
            );
        }
    }
}

/// Bulk and pointwise rotation vectors agree, and the designated orbits
/// realize their vertices exactly.
#[test]
fn vertex_realizing_orbits() {
    let params = PotentialParams::default();
    for k in 1..=8u32 {
        let segment = format!("{}2", "1".repeat((k + 2) as usize));
        let orbit = PeriodicOrbit::from_segment(&Word::ternary(&segment).unwrap()).unwrap();
        assert_eq!(params.rotation_vector(&orbit).unwrap(), params.w_point(k));
    }
}
