//! Independent primal oracle for the dual solver on small graphs: maximize
//! Markov entropy over edge measures subject to stationarity and a fixed
//! rotation vector, by projected gradient ascent.
//!
//! The feasible set is the polytope of nonnegative edge measures satisfying
//! flow conservation, total mass one, and two rotation-vector equalities.
//! Projection onto the affine part uses an orthonormal row basis; projection
//! onto the polytope alternates that with clipping (Dykstra). The returned
//! value is the entropy of a feasible chain, hence a certified lower bound.

use super::TransferGraph;
use crate::error::{Error, Result};
use crate::exact::Vec2Q;

const FEAS_TOL: f64 = 1e-9;
const ASCENT_STEPS: u32 = 4000;
/// Entropy gradients blow up on vanishing coordinates; capping keeps the
/// projected steps finite without affecting the accepted ascent.
const GRAD_CAP: f64 = 40.0;

/// Feasible lower bound for `sup { h_μ : rv_{Φ_m}(μ) = w }` on graphs with
/// memory at most 3. Errors on larger graphs and on infeasible targets.
pub fn primal_constrained_entropy(g: &TransferGraph, w: &Vec2Q) -> Result<f64> {
    if g.memory() > 3 {
        return Err(Error::PrimalMemory { memory: g.memory() });
    }
    let n = g.node_count();
    let ne = g.edge_count();
    let (wx, wy) = w.to_f64();

    // Equality system A pi = b: flow conservation per node, total mass,
    // rotation vector.
    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(n + 3);
    let mut rhs: Vec<f64> = Vec::with_capacity(n + 3);
    for u in 0..n {
        let mut row = vec![0.0; ne];
        for e in 0..ne {
            if e / 3 == u {
                row[e] += 1.0;
            }
            if e % n == u {
                row[e] -= 1.0;
            }
        }
        rows.push(row);
        rhs.push(0.0);
    }
    rows.push(vec![1.0; ne]);
    rhs.push(1.0);
    rows.push((0..ne).map(|e| g.edge_value(e).0).collect());
    rhs.push(wx);
    rows.push((0..ne).map(|e| g.edge_value(e).1).collect());
    rhs.push(wy);

    let affine = AffineProjector::new(rows, rhs)?;

    let uniform = vec![1.0 / ne as f64; ne];
    let mut pi = project_polytope(&affine, &uniform);
    if constraint_residual(&affine, &pi) > FEAS_TOL {
        return Err(Error::Infeasible {
            message: format!("target ({wx}, {wy}) unreachable by a stationary edge measure"),
        });
    }

    let mut h_cur = edge_measure_entropy(&pi, n);
    let mut step = 0.5f64;
    let mut stall = 0u32;
    for _ in 0..ASCENT_STEPS {
        let grad = entropy_gradient(&pi, n);
        let mut improved = false;
        let mut trial = (step * 2.0).min(1e3);
        for _ in 0..40 {
            let cand_raw: Vec<f64> =
                pi.iter().zip(grad.iter()).map(|(p, g)| p + trial * g).collect();
            let cand = project_polytope(&affine, &cand_raw);
            if constraint_residual(&affine, &cand) <= FEAS_TOL {
                let h_cand = edge_measure_entropy(&cand, n);
                if h_cand > h_cur + 1e-15 {
                    pi = cand;
                    h_cur = h_cand;
                    step = trial;
                    improved = true;
                    break;
                }
            }
            trial *= 0.5;
        }
        if !improved {
            stall += 1;
            if stall >= 3 {
                break;
            }
            step = (step * 0.25).max(1e-12);
        } else {
            stall = 0;
        }
    }

    debug_assert!(constraint_residual(&affine, &pi) <= FEAS_TOL);
    Ok(h_cur)
}

/// Entropy rate of an edge measure: `−Σ_e π_e ln(π_e / π_{tail(e)})`.
fn edge_measure_entropy(pi: &[f64], n: usize) -> f64 {
    let node_mass = node_masses(pi, n);
    let mut h = 0.0;
    for (e, &p) in pi.iter().enumerate() {
        if p > 0.0 {
            h -= p * (p / node_mass[e / 3]).ln();
        }
    }
    h
}

fn node_masses(pi: &[f64], n: usize) -> Vec<f64> {
    let mut node_mass = vec![0.0f64; n];
    for (e, &p) in pi.iter().enumerate() {
        node_mass[e / 3] += p.max(0.0);
    }
    node_mass
}

/// `∂H/∂π_e = −ln(π_e / π_{tail(e)})`, capped.
fn entropy_gradient(pi: &[f64], n: usize) -> Vec<f64> {
    let node_mass = node_masses(pi, n);
    pi.iter()
        .enumerate()
        .map(|(e, &p)| {
            let mass = node_mass[e / 3].max(1e-300);
            (-(p.max(1e-300) / mass).ln()).clamp(-GRAD_CAP, GRAD_CAP)
        })
        .collect()
}

fn constraint_residual(affine: &AffineProjector, pi: &[f64]) -> f64 {
    let mut worst = pi.iter().fold(0.0f64, |acc, &p| acc.max(-p));
    for (q, c) in affine.basis.iter().zip(affine.coords.iter()) {
        let dot: f64 = q.iter().zip(pi.iter()).map(|(a, b)| a * b).sum();
        worst = worst.max((dot - c).abs());
    }
    worst
}

/// Orthonormalized equality system; projection is `x − Q^T (Qx − c)`.
struct AffineProjector {
    basis: Vec<Vec<f64>>,
    coords: Vec<f64>,
}

impl AffineProjector {
    fn new(rows: Vec<Vec<f64>>, rhs: Vec<f64>) -> Result<Self> {
        let mut basis: Vec<Vec<f64>> = Vec::new();
        let mut coords: Vec<f64> = Vec::new();
        for (mut row, mut c) in rows.into_iter().zip(rhs) {
            for (q, qc) in basis.iter().zip(coords.iter()) {
                let dot: f64 = row.iter().zip(q.iter()).map(|(a, b)| a * b).sum();
                for (r, qv) in row.iter_mut().zip(q.iter()) {
                    *r -= dot * qv;
                }
                c -= dot * qc;
            }
            let norm: f64 = row.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm > 1e-10 {
                let inv = 1.0 / norm;
                for r in row.iter_mut() {
                    *r *= inv;
                }
                basis.push(row);
                coords.push(c * inv);
            } else if c.abs() > 1e-9 {
                // Dependent row with an inconsistent right-hand side.
                return Err(Error::Infeasible {
                    message: "rotation-vector constraints contradict stationarity".into(),
                });
            }
        }
        Ok(AffineProjector { basis, coords })
    }

    fn project(&self, x: &[f64]) -> Vec<f64> {
        let mut out = x.to_vec();
        for (q, c) in self.basis.iter().zip(self.coords.iter()) {
            let dot: f64 = q.iter().zip(out.iter()).map(|(a, b)| a * b).sum();
            let excess = dot - c;
            for (o, qv) in out.iter_mut().zip(q.iter()) {
                *o -= excess * qv;
            }
        }
        out
    }
}

/// Dykstra's alternating projection onto (affine subspace) ∩ (nonnegative
/// orthant).
fn project_polytope(affine: &AffineProjector, x: &[f64]) -> Vec<f64> {
    let ne = x.len();
    let mut y = x.to_vec();
    let mut p_corr = vec![0.0f64; ne];
    let mut q_corr = vec![0.0f64; ne];
    for _ in 0..2000 {
        let input: Vec<f64> = y.iter().zip(p_corr.iter()).map(|(a, b)| a + b).collect();
        let proj_a = affine.project(&input);
        for i in 0..ne {
            p_corr[i] = input[i] - proj_a[i];
        }
        let input2: Vec<f64> = proj_a.iter().zip(q_corr.iter()).map(|(a, b)| a + b).collect();
        let clipped: Vec<f64> = input2.iter().map(|&v| v.max(0.0)).collect();
        for i in 0..ne {
            q_corr[i] = input2[i] - clipped[i];
        }
        let change: f64 = clipped
            .iter()
            .zip(y.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        y = clipped;
        if change < 1e-13 {
            break;
        }
    }
    y
}
