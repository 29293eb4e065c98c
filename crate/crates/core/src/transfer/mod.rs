//! Transfer graphs for locally constant potentials and the spectral
//! machinery on top of them: topological pressure with Gibbs data, Karp
//! max-mean-cycle support functions, Markov-measure entropy, and the convex
//! dual/primal solvers for localized entropy.
//!
//! The graph is the de Bruijn graph of memory `m` over three symbols: nodes
//! are the `3^{m−1}` words of length `m−1`, and node `u` has the three
//! out-edges `u·c`. Edge ids coincide with the base-3 value of the length-`m`
//! edge word, so `tail(e) = e / 3` and `head(e) = e mod 3^{m−1}`; no
//! adjacency lists are stored.

mod dual;
mod primal;

pub use dual::{dual_localized_entropy, DualOptions};
pub use primal::primal_constrained_entropy;

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::potential::PotentialTable;

/// Number of directions probed when checking that a target lies in the
/// rotation set of a truncated potential.
pub const FEASIBILITY_DIRECTIONS: usize = 32;

/// Convergence threshold on successive log-eigenvalue estimates.
const POWER_TOL: f64 = 1e-12;
/// Hard cap on power-iteration steps; exceeding it is reported, not hidden.
const POWER_ITER_CAP: u32 = 100_000;
/// Near-degenerate spectral gaps (two classes tying for the Perron root)
/// make the iteration crawl; past this many steps with the estimate still
/// far from settled, bail out and report non-convergence.
const POWER_STALL_AT: u32 = 900;
const POWER_STALL_DELTA: f64 = 1e-10;
/// The plain (shift-and-exp) iteration is safe while the invariant vector's
/// dynamic range stays within f64; beyond that the operator is applied in
/// log space with per-node log-sum-exp.
const PLAIN_SPREAD_LIMIT: f64 = 600.0;

/// Weighted de Bruijn graph of a finite-memory potential. Immutable after
/// construction; the support-function cache is filled lazily and shared.
#[derive(Debug)]
pub struct TransferGraph {
    memory: u32,
    node_count: usize,
    fx: Vec<f64>,
    fy: Vec<f64>,
    sup_error: f64,
    support_cache: OnceLock<Vec<([f64; 2], f64)>>,
}

impl TransferGraph {
    pub fn memory(&self) -> u32 {
        self.memory
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.fx.len()
    }

    /// Plane value attached to edge `e` (the value of its length-`m` word).
    pub fn edge_value(&self, e: usize) -> (f64, f64) {
        (self.fx[e], self.fy[e])
    }

    pub fn sup_error(&self) -> f64 {
        self.sup_error
    }

    #[inline]
    pub fn tail(&self, e: usize) -> usize {
        e / 3
    }

    #[inline]
    pub fn head(&self, e: usize) -> usize {
        e % self.node_count
    }

    /// Support values over the fixed fan of feasibility directions,
    /// computed once per graph.
    pub fn feasibility_supports(&self) -> &[([f64; 2], f64)] {
        self.support_cache.get_or_init(|| {
            use rayon::prelude::*;
            let dirs: Vec<[f64; 2]> = (0..FEASIBILITY_DIRECTIONS)
                .map(|i| {
                    let angle = 2.0 * std::f64::consts::PI * i as f64
                        / FEASIBILITY_DIRECTIONS as f64;
                    [angle.cos(), angle.sin()]
                })
                .collect();
            dirs.par_iter().map(|&d| (d, karp_support(self, d))).collect()
        })
    }
}

/// Build the transfer graph of a potential table; the only place exact
/// values are lowered to floating point.
pub fn build_graph(table: &PotentialTable) -> TransferGraph {
    let m = table.memory();
    let node_count = 3usize.pow(m - 1);
    let mut fx = Vec::with_capacity(table.len());
    let mut fy = Vec::with_capacity(table.len());
    for (x, y) in table.values_f64() {
        fx.push(x);
        fy.push(y);
    }
    TransferGraph {
        memory: m,
        node_count,
        fx,
        fy,
        sup_error: table.sup_error_f64(),
        support_cache: OnceLock::new(),
    }
}

/// Pressure of `α·Φ_m` together with the Perron data of its transfer
/// operator.
#[derive(Debug, Clone)]
pub struct GibbsData {
    /// Topological pressure in nats.
    pub pressure: f64,
    pub alpha: [f64; 2],
    /// Right Perron vector, sup-normalized.
    pub right: Vec<f64>,
    /// Left Perron vector, sup-normalized.
    pub left: Vec<f64>,
    /// Rotation vector of the Gibbs measure (the pressure gradient).
    pub rv: [f64; 2],
    /// Measure-theoretic entropy of the Gibbs measure, in nats.
    pub entropy: f64,
    pub iterations: u32,
    pub converged: bool,
}

/// Topological pressure of `α·Φ_m` by power iteration on the weighted
/// transfer matrix. While the log-weight spread is moderate the operator is
/// applied with shifted exponentials and per-step sup renormalization; for
/// extreme dual variables the invariant vector's dynamic range exceeds f64
/// and the iteration switches to log space, one log-sum-exp per node.
pub fn pressure(g: &TransferGraph, alpha: [f64; 2]) -> GibbsData {
    let n = g.node_count;
    let ne = g.edge_count();
    let mut logw = vec![0.0f64; ne];
    let mut hi = f64::NEG_INFINITY;
    let mut lo = f64::INFINITY;
    for e in 0..ne {
        let lw = alpha[0] * g.fx[e] + alpha[1] * g.fy[e];
        logw[e] = lw;
        hi = hi.max(lw);
        lo = lo.min(lw);
    }
    let plain = (hi - lo) * g.memory as f64 <= PLAIN_SPREAD_LIMIT;

    let (log_right, loglam, it_r, conv_r) = if plain {
        plain_power(n, &logw, hi, false)
    } else {
        log_power(n, &logw, false)
    };
    let (log_left, _, it_l, conv_l) = if plain {
        plain_power(n, &logw, hi, true)
    } else {
        log_power(n, &logw, true)
    };

    // Gibbs data assembled in log space: stationary edge probabilities from
    // the Perron pair, rotation vector, and entropy.
    let mut log_pi = vec![0.0f64; ne];
    let mut pi_max = f64::NEG_INFINITY;
    for e in 0..ne {
        let lp = log_left[e / 3] + logw[e] + log_right[e % n];
        log_pi[e] = lp;
        pi_max = pi_max.max(lp);
    }
    let mut pi_sum = 0.0f64;
    for lp in log_pi.iter_mut() {
        *lp -= pi_max;
        pi_sum += lp.exp();
    }
    let log_norm = pi_sum.ln();
    let mut rv = [0.0f64; 2];
    let mut entropy_acc = 0.0;
    for e in 0..ne {
        let pi_e = (log_pi[e] - log_norm).exp();
        if pi_e <= 0.0 {
            continue;
        }
        rv[0] += pi_e * g.fx[e];
        rv[1] += pi_e * g.fy[e];
        // log transition probability along edge e.
        let log_p = logw[e] + log_right[e % n] - loglam - log_right[e / 3];
        entropy_acc -= pi_e * log_p;
    }

    GibbsData {
        pressure: loglam,
        alpha,
        right: log_right.iter().map(|&x| x.exp()).collect(),
        left: log_left.iter().map(|&x| x.exp()).collect(),
        rv,
        entropy: entropy_acc,
        iterations: it_r.max(it_l),
        converged: conv_r && conv_l,
    }
}

/// Pressure alone, from the right iteration only; used where the gradient
/// is not needed (line probes along rays). Returns `(P, iterations,
/// certified)`.
pub fn pressure_value(g: &TransferGraph, alpha: [f64; 2]) -> (f64, u32, bool) {
    let n = g.node_count;
    let ne = g.edge_count();
    let mut logw = vec![0.0f64; ne];
    let mut hi = f64::NEG_INFINITY;
    let mut lo = f64::INFINITY;
    for e in 0..ne {
        let lw = alpha[0] * g.fx[e] + alpha[1] * g.fy[e];
        logw[e] = lw;
        hi = hi.max(lw);
        lo = lo.min(lw);
    }
    let plain = (hi - lo) * g.memory as f64 <= PLAIN_SPREAD_LIMIT;
    let (_, loglam, it, conv) =
        if plain { plain_power(n, &logw, hi, false) } else { log_power(n, &logw, false) };
    (loglam, it, conv)
}

/// Shared convergence bookkeeping: returns `Some(done)` once the iteration
/// should stop.
fn power_verdict(it: u32, log_delta: f64, vec_delta: f64) -> Option<bool> {
    if log_delta < POWER_TOL && vec_delta < 1e-11 {
        return Some(true);
    }
    if it >= POWER_STALL_AT && log_delta > POWER_STALL_DELTA {
        return Some(false);
    }
    if it >= POWER_ITER_CAP {
        return Some(false);
    }
    None
}

/// Plain-domain iteration on weights `exp(logw - shift)`. Returns the
/// log-scaled dominant vector (sup-normalized to 0) and the log eigenvalue.
fn plain_power(n: usize, logw: &[f64], shift: f64, transpose: bool) -> (Vec<f64>, f64, u32, bool) {
    let weights: Vec<f64> = logw.iter().map(|lw| (lw - shift).exp()).collect();
    let third = n / 3;
    let mut v = vec![1.0f64; n];
    let mut next = vec![0.0f64; n];
    let mut log_rho_prev = f64::INFINITY;
    let mut it = 0u32;
    loop {
        it += 1;
        if n == 1 {
            next[0] = (weights[0] + weights[1] + weights[2]) * v[0];
        } else if transpose {
            next.fill(0.0);
            for k in 0..3usize {
                for u in k * third..(k + 1) * third {
                    let e = 3 * u;
                    let h = e - k * n;
                    let s = v[u];
                    next[h] += weights[e] * s;
                    next[h + 1] += weights[e + 1] * s;
                    next[h + 2] += weights[e + 2] * s;
                }
            }
        } else {
            for k in 0..3usize {
                for u in k * third..(k + 1) * third {
                    let e = 3 * u;
                    let h = e - k * n;
                    next[u] =
                        weights[e] * v[h] + weights[e + 1] * v[h + 1] + weights[e + 2] * v[h + 2];
                }
            }
        }
        let mut max = 0.0f64;
        for &x in next.iter() {
            if x > max {
                max = x;
            }
        }
        if max <= 0.0 {
            // Total underflow; the caller treats the result as uncertified.
            let log_v = v.iter().map(|&x| if x > 0.0 { x.ln() } else { f64::NEG_INFINITY }).collect();
            return (log_v, f64::NEG_INFINITY, it, false);
        }
        let inv = 1.0 / max;
        let mut delta = 0.0f64;
        for (dst, src) in next.iter_mut().zip(v.iter()) {
            *dst *= inv;
            let d = (*dst - *src).abs();
            if d > delta {
                delta = d;
            }
        }
        std::mem::swap(&mut v, &mut next);
        let log_rho = max.ln();
        let log_delta = (log_rho - log_rho_prev).abs();
        log_rho_prev = log_rho;
        if let Some(done) = power_verdict(it, log_delta, delta) {
            let log_v =
                v.iter().map(|&x| if x > 0.0 { x.ln() } else { f64::NEG_INFINITY }).collect();
            return (log_v, shift + log_rho, it, done);
        }
    }
}

/// Log-domain iteration: the vector is stored as logs (sup-normalized to 0)
/// and each application takes a log-sum-exp over the three incident edges.
/// Handles arbitrary weight ranges without under- or overflow.
fn log_power(n: usize, logw: &[f64], transpose: bool) -> (Vec<f64>, f64, u32, bool) {
    const DROP: f64 = -45.0;
    let lse3 = |a: f64, b: f64, c: f64| -> f64 {
        let m = a.max(b).max(c);
        if m == f64::NEG_INFINITY {
            return m;
        }
        let mut s = 0.0f64;
        if a - m > DROP {
            s += (a - m).exp();
        }
        if b - m > DROP {
            s += (b - m).exp();
        }
        if c - m > DROP {
            s += (c - m).exp();
        }
        m + s.ln()
    };
    let third = n / 3;
    let mut v = vec![0.0f64; n];
    let mut next = vec![0.0f64; n];
    let mut log_rho_prev = f64::INFINITY;
    let mut it = 0u32;
    loop {
        it += 1;
        if n == 1 {
            next[0] = lse3(logw[0], logw[1], logw[2]) + v[0];
        } else if transpose {
            next.fill(f64::NEG_INFINITY);
            for k in 0..3usize {
                for u in k * third..(k + 1) * third {
                    let e = 3 * u;
                    let h = e - k * n;
                    let s = v[u];
                    for c in 0..3 {
                        let cand = logw[e + c] + s;
                        let cur = next[h + c];
                        next[h + c] = if cur == f64::NEG_INFINITY {
                            cand
                        } else if cand > cur {
                            cand + (1.0 + (cur - cand).exp()).ln()
                        } else {
                            cur + (1.0 + (cand - cur).exp()).ln()
                        };
                    }
                }
            }
        } else {
            for k in 0..3usize {
                for u in k * third..(k + 1) * third {
                    let e = 3 * u;
                    let h = e - k * n;
                    next[u] = lse3(logw[e] + v[h], logw[e + 1] + v[h + 1], logw[e + 2] + v[h + 2]);
                }
            }
        }
        let mut max = f64::NEG_INFINITY;
        for &x in next.iter() {
            if x > max {
                max = x;
            }
        }
        let mut delta = 0.0f64;
        for (dst, src) in next.iter_mut().zip(v.iter()) {
            *dst -= max;
            let d = (*dst - *src).abs();
            if d.is_finite() && d > delta {
                delta = d;
            }
        }
        std::mem::swap(&mut v, &mut next);
        let log_rho = max;
        let log_delta = (log_rho - log_rho_prev).abs();
        log_rho_prev = log_rho;
        if let Some(done) = power_verdict(it, log_delta, delta) {
            return (v, log_rho, it, done);
        }
    }
}

/// Maximum cycle mean of `direction · value` over the graph, by Karp's
/// dynamic program; equals the support function of the truncated rotation
/// set. Two passes keep memory at `O(nodes)`.
pub fn karp_support(g: &TransferGraph, direction: [f64; 2]) -> f64 {
    assert!(
        direction[0] != 0.0 || direction[1] != 0.0,
        "karp_support needs a nonzero direction"
    );
    let n = g.node_count;
    let ne = g.edge_count();
    let wts: Vec<f64> = (0..ne)
        .map(|e| direction[0] * g.fx[e] + direction[1] * g.fy[e])
        .collect();

    // Pass 1: D_n(v), max weight of an n-edge walk from node 0.
    let mut dist = vec![f64::NEG_INFINITY; n];
    let mut next = vec![f64::NEG_INFINITY; n];
    dist[0] = 0.0;
    let third = n / 3;
    let relax = |src: &[f64], dst: &mut [f64]| {
        dst.fill(f64::NEG_INFINITY);
        if n == 1 {
            dst[0] = src[0] + wts[0].max(wts[1]).max(wts[2]);
            return;
        }
        for k in 0..3usize {
            for u in k * third..(k + 1) * third {
                let from = src[u];
                if from == f64::NEG_INFINITY {
                    continue;
                }
                let e = 3 * u;
                let h = e - k * n;
                for c in 0..3 {
                    let cand = from + wts[e + c];
                    if cand > dst[h + c] {
                        dst[h + c] = cand;
                    }
                }
            }
        }
    };
    for _ in 0..n {
        relax(&dist, &mut next);
        std::mem::swap(&mut dist, &mut next);
    }
    let d_n = dist.clone();

    // Pass 2: recompute D_k, tracking min over k of (D_n − D_k)/(n − k).
    let mut best_ratio = vec![f64::INFINITY; n];
    dist.fill(f64::NEG_INFINITY);
    dist[0] = 0.0;
    for k in 0..n {
        for v in 0..n {
            if dist[v] != f64::NEG_INFINITY && d_n[v] != f64::NEG_INFINITY {
                let ratio = (d_n[v] - dist[v]) / (n - k) as f64;
                if ratio < best_ratio[v] {
                    best_ratio[v] = ratio;
                }
            }
        }
        relax(&dist, &mut next);
        std::mem::swap(&mut dist, &mut next);
    }
    best_ratio
        .into_iter()
        .filter(|r| r.is_finite())
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Entropy rate of a stationary Markov chain given as a dense stochastic
/// matrix and its stationary distribution: `−Σ_u π_u Σ_v p_uv ln p_uv`.
pub fn markov_entropy(transitions: &[Vec<f64>], stationary: &[f64]) -> Result<f64> {
    let n = transitions.len();
    if stationary.len() != n {
        return Err(Error::NonStochastic {
            message: format!("stationary length {} != node count {}", stationary.len(), n),
        });
    }
    for (u, row) in transitions.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NonStochastic { message: format!("row {u} has length {}", row.len()) });
        }
        let sum: f64 = row.iter().sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::NonStochastic { message: format!("row {u} sums to {sum}") });
        }
        if row.iter().any(|&p| p < 0.0) {
            return Err(Error::NonStochastic { message: format!("row {u} has a negative entry") });
        }
    }
    let total: f64 = stationary.iter().sum();
    if (total - 1.0).abs() > 1e-10 || stationary.iter().any(|&p| p < 0.0) {
        return Err(Error::NonStochastic { message: "stationary is not a distribution".into() });
    }
    for v in 0..n {
        let inflow: f64 = (0..n).map(|u| stationary[u] * transitions[u][v]).sum();
        if (inflow - stationary[v]).abs() > 1e-10 {
            return Err(Error::NonStochastic {
                message: format!("stationary not invariant at node {v}: {inflow} vs {}", stationary[v]),
            });
        }
    }
    let mut h = 0.0;
    for u in 0..n {
        if stationary[u] <= 0.0 {
            continue;
        }
        for &p in &transitions[u] {
            if p > 0.0 {
                h -= stationary[u] * p * p.ln();
            }
        }
    }
    Ok(h)
}

/// One dual evaluation of the localized-entropy solver.
#[derive(Debug, Clone)]
pub struct SpectrumSample {
    /// Target rotation vector.
    pub wx: f64,
    pub wy: f64,
    /// Certified upper bound for the truncated localized entropy, nats.
    pub estimate: f64,
    /// Minimizer found.
    pub alpha: [f64; 2],
    /// Norm cap `T` the solve ran under.
    pub alpha_cap: f64,
    pub iterations: u32,
    /// True iff the gradient-norm criterion was met (interior optimum).
    pub converged: bool,
    /// Certified lower bound, when an explicit witness measure exists.
    pub primal_witness: Option<f64>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::potential::PotentialParams;

    fn graph(m: u32) -> TransferGraph {
        let params = PotentialParams::default();
        build_graph(&params.locally_constant_table(m).unwrap())
    }

    #[test]
    fn graph_shape_and_edge_values() {
        let g = graph(4);
        assert_eq!(g.node_count(), 27);
        assert_eq!(g.edge_count(), 81);
        // Edge "111" -> "112" is the word 1112 with value v_1; ids are
        // base-3 values of the words.
        let e = 27 + 9 + 3 + 2;
        assert_eq!(g.tail(e), 9 + 3 + 1);
        assert_eq!(g.head(e), 9 + 3 + 2);
        assert_eq!(g.edge_value(e), (0.25, 0.5));
        // Self-loop on "000" is the 2-free word 0000.
        assert_eq!(g.edge_value(0), (0.0, 0.0));
        assert_eq!(g.tail(0), 0);
        assert_eq!(g.head(0), 0);
    }

    #[test]
    fn pressure_at_zero_is_log3() {
        let g = graph(4);
        let gd = pressure(&g, [0.0, 0.0]);
        assert!(gd.converged);
        assert!((gd.pressure - 3.0f64.ln()).abs() < 1e-11);
        assert!((gd.entropy - 3.0f64.ln()).abs() < 1e-9);
        // Rotation vector equals the plain mean of all edge values.
        let params = PotentialParams::default();
        let table = params.locally_constant_table(4).unwrap();
        let mut mean = crate::exact::Vec2Q::zero();
        for v in table.values() {
            mean = mean.add(v);
        }
        let mean = mean.scale(&(rat(1, 81)));
        let (mx, my) = mean.to_f64();
        assert!((gd.rv[0] - mx).abs() < 1e-10);
        assert!((gd.rv[1] - my).abs() < 1e-10);
    }

    #[test]
    fn equilibrium_identity_holds() {
        let g = graph(5);
        for alpha in [[0.3, -1.2], [-2.0, 0.7], [4.0, 3.0]] {
            let gd = pressure(&g, alpha);
            assert!(gd.converged);
            let lhs = gd.pressure;
            let rhs = gd.entropy + alpha[0] * gd.rv[0] + alpha[1] * gd.rv[1];
            assert!((lhs - rhs).abs() < 1e-8, "alpha {alpha:?}: {lhs} vs {rhs}");
            assert!(gd.entropy >= -1e-12 && gd.entropy <= 3.0f64.ln() + 1e-12);
        }
    }

    #[test]
    fn pressure_shift_limit_matches_gap_automaton() {
        // P(t, 0) − t approaches the entropy of the subshift in which every
        // 3-window contains a 2, the Perron root of x^3 = x^2 + 2x + 4.
        let g = graph(5);
        let target = gap_automaton_entropy();
        let p50 = pressure(&g, [50.0, 0.0]).pressure - 50.0;
        assert!((p50 - target).abs() < 1e-3, "t=50: {p50} vs {target}");
        let p200 = pressure(&g, [200.0, 0.0]).pressure - 200.0;
        assert!((p200 - target).abs() < 1e-8, "t=200: {p200} vs {target}");
    }

    /// Independent oracle: largest root of x^3 − x^2 − 2x − 4 by bisection.
    pub(crate) fn gap_automaton_entropy() -> f64 {
        let f = |x: f64| x * x * x - x * x - 2.0 * x - 4.0;
        let (mut lo, mut hi) = (2.0f64, 3.0f64);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if f(mid) > 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        (0.5 * (lo + hi)).ln()
    }

    #[test]
    fn karp_axis_directions() {
        let g = graph(4);
        assert!((karp_support(&g, [1.0, 0.0]) - 1.0).abs() < 1e-12);
        assert!(karp_support(&g, [-1.0, 0.0]).abs() < 1e-12);
    }

    #[test]
    fn karp_matches_orbit_enumeration_small() {
        // Simple cycles of the 9-node graph have length <= 9, so orbits of
        // period <= 9 realize every cycle mean of the memory-3 truncation.
        let params = PotentialParams::default();
        let table = params.truncation_table(3);
        let g = build_graph(&table);
        let orbits = crate::symbolic::enumerate_orbits(3, 9).unwrap();
        let rvs: Vec<(f64, f64)> = orbits
            .iter()
            .map(|o| params.truncated_rotation_vector(&table, o).to_f64())
            .collect();
        for i in 0..16 {
            let angle = 2.0 * std::f64::consts::PI * i as f64 / 16.0;
            let d = [angle.cos(), angle.sin()];
            let karp = karp_support(&g, d);
            let best = rvs
                .iter()
                .map(|&(x, y)| d[0] * x + d[1] * y)
                .fold(f64::NEG_INFINITY, f64::max);
            assert!((karp - best).abs() < 1e-12, "direction {d:?}: {karp} vs {best}");
        }
    }

    #[test]
    fn markov_entropy_examples() {
        let uniform2 = vec![vec![0.5, 0.5], vec![0.5, 0.5]];
        let h = markov_entropy(&uniform2, &[0.5, 0.5]).unwrap();
        assert!((h - 2.0f64.ln()).abs() < 1e-14);

        let cycle = vec![vec![0.0, 1.0], vec![1.0, 0.0]];
        let h = markov_entropy(&cycle, &[0.5, 0.5]).unwrap();
        assert_eq!(h, 0.0);

        let uniform3 = vec![vec![1.0 / 3.0; 3]; 3];
        let h = markov_entropy(&uniform3, &[1.0 / 3.0; 3]).unwrap();
        assert!((h - 3.0f64.ln()).abs() < 1e-14);

        assert!(markov_entropy(&uniform3, &[0.5, 0.25, 0.25]).is_err());
        let bad = vec![vec![0.9, 0.2], vec![0.5, 0.5]];
        assert!(markov_entropy(&bad, &[0.5, 0.5]).is_err());
    }

    #[test]
    fn gradient_matches_finite_differences() {
        let g = graph(4);
        let h = 1e-4;
        for alpha in [[1.5, -0.8], [-3.0, 2.0]] {
            let gd = pressure(&g, alpha);
            for axis in 0..2 {
                let mut ap = alpha;
                let mut am = alpha;
                ap[axis] += h;
                am[axis] -= h;
                let fd = (pressure(&g, ap).pressure - pressure(&g, am).pressure) / (2.0 * h);
                let rel = (fd - gd.rv[axis]).abs() / gd.rv[axis].abs().max(1e-12);
                assert!(rel < 1e-5, "axis {axis}: fd {fd} vs rv {}", gd.rv[axis]);
            }
        }
    }
}
