//! End-to-end reports turning the library's claims into machine-checkable
//! pass/fail results with stable file outputs.
//!
//! Every report is deterministic: the same parameters and seed produce
//! byte-identical CSV/SVG/JSON artifacts. Pass/fail of a report is decided
//! only by the checks listed inside it. Wall time is kept for console
//! rendering and never written into artifacts.

pub mod acceptance;
mod svg;

use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{rat, Rat, Vec2Q};
use crate::geometry::{convex_hull, edge_slopes, gkr_g, predicted_vertices};
use crate::potential::PotentialParams;
use crate::symbolic::enumerate_orbits;
use crate::transfer::{build_graph, dual_localized_entropy, DualOptions, SpectrumSample};

/// One named claim with its outcome.
#[derive(Debug, Clone, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    pub details: String,
}

/// Result of one report. `pass` is the conjunction of its checks.
#[derive(Debug, Clone)]
pub struct Report {
    pub name: String,
    pub pass: bool,
    pub checks: Vec<CheckLine>,
    /// Preformatted numeric table rows for console output.
    pub table_lines: Vec<String>,
    /// Parameter echo in the parameter-file format.
    pub params_echo: String,
    pub wall_secs: f64,
}

impl Report {
    fn assemble(
        name: &str,
        checks: Vec<CheckLine>,
        table_lines: Vec<String>,
        params: &PotentialParams,
        started: Instant,
    ) -> Report {
        Report {
            name: name.to_string(),
            pass: checks.iter().all(|c| c.pass),
            checks,
            table_lines,
            params_echo: params.to_param_file(),
            wall_secs: started.elapsed().as_secs_f64(),
        }
    }

    pub fn render_console(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "report {} ... {} ({:.2}s)\n",
            self.name,
            if self.pass { "PASS" } else { "FAIL" },
            self.wall_secs
        ));
        for c in &self.checks {
            out.push_str(&format!(
                "  [{}] {}: {}\n",
                if c.pass { "ok" } else { "FAIL" },
                c.name,
                c.details
            ));
        }
        for line in &self.table_lines {
            out.push_str(&format!("  {line}\n"));
        }
        out
    }
}

/// In-memory artifact set, written to disk on demand; keeping bytes in
/// memory makes determinism checks exact byte comparisons.
#[derive(Debug, Clone, Default)]
pub struct ArtifactSet {
    files: BTreeMap<String, Vec<u8>>,
}

impl ArtifactSet {
    pub fn insert(&mut self, name: &str, bytes: Vec<u8>) {
        self.files.insert(name.to_string(), bytes);
    }

    pub fn merge(&mut self, other: ArtifactSet) {
        self.files.extend(other.files);
    }

    pub fn files(&self) -> &BTreeMap<String, Vec<u8>> {
        &self.files
    }

    pub fn write_to(&self, dir: &Path) -> Result<()> {
        std::fs::create_dir_all(dir)?;
        for (name, bytes) in &self.files {
            std::fs::write(dir.join(name), bytes)?;
        }
        Ok(())
    }
}

fn label_vertex(params: &PotentialParams, v: &Vec2Q, k_max: u32) -> String {
    if v == &params.w_infinity() {
        return "winf".to_string();
    }
    for k in 0..=k_max {
        if v == &params.w_point(k) {
            return format!("w{k}");
        }
    }
    "unlisted".to_string()
}

/// Enumerates orbits to period `max_period`, computes exact rotation
/// vectors, and compares the hull vertex set with the predicted extreme
/// points. Emits `hull_N.csv` and `hull_N.svg`.
pub fn rotation_set_report(
    params: &PotentialParams,
    max_period: u32,
    artifacts: Option<&mut ArtifactSet>,
) -> Result<Report> {
    let started = Instant::now();
    if max_period < 1 {
        return Err(Error::InvalidParam { field: "max_period", message: "must be >= 1".into() });
    }
    let orbits = enumerate_orbits(3, max_period as usize)?;
    let rvs = params.rotation_vectors(&orbits);
    let mut unique = rvs.clone();
    unique.sort();
    unique.dedup();
    let hull = convex_hull(&unique)?;

    let mut predicted = predicted_vertices(params, max_period);
    predicted.sort();
    let mut got: Vec<Vec2Q> = hull.vertices().to_vec();
    got.sort();
    let vertices_match = got == predicted;

    // Every rotation vector must already lie inside the predicted hull.
    let predicted_hull = convex_hull(&predicted)?;
    let contained = unique.iter().all(|p| predicted_hull.contains(p));

    let k_max = max_period.saturating_sub(params.lambda());
    let mut table_lines = Vec::new();
    table_lines.push(format!(
        "orbits={} distinct_rv={} hull_vertices={}",
        orbits.len(),
        unique.len(),
        hull.len()
    ));
    for v in hull.vertices() {
        table_lines.push(format!("{} = ({}, {})", label_vertex(params, v, k_max), v.x, v.y));
    }

    let checks = vec![
        CheckLine {
            name: "hull vertices equal predicted extreme points".into(),
            pass: vertices_match,
            details: format!("{} vertices vs {} predicted", got.len(), predicted.len()),
        },
        CheckLine {
            name: "all rotation vectors inside predicted hull".into(),
            pass: contained,
            details: format!("{} distinct rotation vectors", unique.len()),
        },
    ];

    if let Some(artifacts) = artifacts {
        let mut csv = String::from("vertex,x,y\n");
        for v in hull.vertices() {
            csv.push_str(&format!("{},{},{}\n", label_vertex(params, v, k_max), v.x, v.y));
        }
        artifacts.insert(&format!("hull_{max_period}.csv"), csv.into_bytes());
        let svg = svg::render_hull(params, hull.vertices(), k_max);
        artifacts.insert(&format!("hull_{max_period}.svg"), svg.into_bytes());
    }

    Ok(Report::assemble(
        &format!("rotation-set N={max_period}"),
        checks,
        table_lines,
        params,
        started,
    ))
}

/// Scans all orbits of period at most `max_period` and asserts that the only
/// orbit with rotation vector exactly `w_k` is the run of ones closed by a
/// single 2.
pub fn uniqueness_report(params: &PotentialParams, k: u32, max_period: u32) -> Result<Report> {
    let started = Instant::now();
    if k == 0 {
        return Err(Error::IndexFromOne { field: "k" });
    }
    if k + params.lambda() > max_period {
        return Err(Error::InvalidParam {
            field: "k",
            message: format!("need k + lambda <= max_period, got {k} + {} > {max_period}", params.lambda()),
        });
    }
    let orbits = enumerate_orbits(3, max_period as usize)?;
    let rvs = params.rotation_vectors(&orbits);
    let target = params.w_point(k);
    let witnesses: Vec<String> = orbits
        .iter()
        .zip(rvs.iter())
        .filter(|(_, rv)| *rv == &target)
        .map(|(o, _)| o.necklace().to_string())
        .collect();
    let expected = format!("{}2", "1".repeat((k + params.lambda() - 1) as usize));
    let pass = witnesses == vec![expected.clone()];
    let checks = vec![CheckLine {
        name: format!("unique orbit with rv = w_{k}"),
        pass,
        details: format!("expected {{{expected}}}, found {{{}}}", witnesses.join(", ")),
    }];
    let table_lines = vec![format!("w_{k} = ({}, {})", target.x, target.y)];
    Ok(Report::assemble(&format!("uniqueness k={k} N={max_period}"), checks, table_lines, params, started))
}

/// One row of a spectrum scan; `sample` is absent for infeasible targets.
#[derive(Debug, Clone)]
pub struct ScanRow {
    pub target: Vec2Q,
    pub sample: Option<SpectrumSample>,
}

/// Builtin scan path: `count` evenly spaced targets from the centroid of the
/// truncated rotation set's vertices to the accumulation point, endpoint
/// included. Exact rationals.
pub fn segment_targets(params: &PotentialParams, memory: u32, count: usize) -> Vec<Vec2Q> {
    let vertices = predicted_vertices(params, memory);
    let mut centroid = Vec2Q::zero();
    for v in &vertices {
        centroid = centroid.add(v);
    }
    let centroid = centroid.scale(&(Rat::one() / Rat::from_integer(vertices.len().into())));
    let winf = params.w_infinity();
    (0..count)
        .map(|i| {
            let t = rat(i as i64, (count - 1) as i64);
            centroid.add(&winf.sub(&centroid).scale(&t))
        })
        .collect()
}

/// One dual solve per target. Infeasible targets are kept in the output with
/// an empty estimate. Rows run in parallel; results are ordered by input.
pub fn spectrum_scan(
    params: &PotentialParams,
    targets: &[Vec2Q],
    memory: u32,
    opts: DualOptions,
    artifacts: Option<&mut ArtifactSet>,
) -> Result<Vec<ScanRow>> {
    let table = params.locally_constant_table(memory)?;
    let graph = build_graph(&table);
    // Fill the support cache before the parallel scan.
    graph.feasibility_supports();
    let rows: Vec<ScanRow> = targets
        .par_iter()
        .map(|w| match dual_localized_entropy(&graph, w, opts) {
            Ok(sample) => ScanRow { target: w.clone(), sample: Some(sample) },
            Err(Error::InfeasibleTarget { .. }) => ScanRow { target: w.clone(), sample: None },
            Err(e) => panic!("unexpected solver error: {e}"),
        })
        .collect();
    if let Some(artifacts) = artifacts {
        artifacts.insert(&format!("spectrum_{memory}.csv"), scan_csv(&rows).into_bytes());
    }
    Ok(rows)
}

fn scan_csv(rows: &[ScanRow]) -> String {
    let mut csv = String::from("wx,wy,estimate_nats,alpha1,alpha2,converged,iterations\n");
    for row in rows {
        let (wx, wy) = row.target.to_f64();
        match &row.sample {
            Some(s) => csv.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                wx, wy, s.estimate, s.alpha[0], s.alpha[1], s.converged, s.iterations
            )),
            None => csv.push_str(&format!("{},{},NaN,NaN,NaN,false,0\n", wx, wy)),
        }
    }
    csv
}

/// Output of [`discontinuity_report`], exposing the raw samples so callers
/// can reuse the expensive solves.
#[derive(Debug, Clone)]
pub struct DiscontinuityOutcome {
    pub report: Report,
    /// Samples at `w_k` for the requested `k`s, in order.
    pub at_wk: Vec<(u32, SpectrumSample)>,
    /// Sample at the accumulation point.
    pub at_winf: SpectrumSample,
    /// `estimate(w_inf) − max_k estimate(w_k)`, nats.
    pub gap: f64,
}

/// Dual upper bounds at each `w_k` against the value at the accumulation
/// point. The underlying values are log 2 at the accumulation point and 0 at
/// every `w_k`; the pass threshold 0.3 nats is a solver-budget calibration
/// at memory 9, cap 10^3.
pub fn discontinuity_report(
    params: &PotentialParams,
    ks: &[u32],
    memory: u32,
    opts: DualOptions,
    artifacts: Option<&mut ArtifactSet>,
) -> Result<DiscontinuityOutcome> {
    let started = Instant::now();
    if ks.is_empty() {
        return Err(Error::InvalidParam { field: "ks", message: "need at least one k".into() });
    }
    let k_limit = memory.saturating_sub(params.lambda() + 1);
    for &k in ks {
        if k == 0 {
            return Err(Error::IndexFromOne { field: "k" });
        }
        if k > k_limit {
            return Err(Error::InvalidParam {
                field: "k",
                message: format!("need k <= memory - lambda - 1 = {k_limit}, got {k}"),
            });
        }
    }
    let table = params.locally_constant_table(memory)?;
    let graph = build_graph(&table);
    graph.feasibility_supports();

    let mut jobs: Vec<(String, Vec2Q, f64)> = ks
        .iter()
        .map(|&k| (format!("w{k}"), params.w_point(k), 0.0))
        .collect();
    jobs.push(("winf".into(), params.w_infinity(), std::f64::consts::LN_2));
    let samples: Vec<SpectrumSample> = jobs
        .par_iter()
        .map(|(_, w, _)| dual_localized_entropy(&graph, w, opts))
        .collect::<Result<Vec<_>>>()?;

    let at_winf = samples.last().expect("winf job").clone();
    let at_wk: Vec<(u32, SpectrumSample)> =
        ks.iter().copied().zip(samples.iter().cloned()).collect();
    let max_wk = at_wk.iter().map(|(_, s)| s.estimate).fold(f64::NEG_INFINITY, f64::max);
    let gap = at_winf.estimate - max_wk;

    let mut csv = String::from("target,wx,wy,estimate_nats,truth_nats,converged,iterations\n");
    let mut table_lines = Vec::new();
    for ((label, _, truth), sample) in jobs.iter().zip(samples.iter()) {
        csv.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            label, sample.wx, sample.wy, sample.estimate, truth, sample.converged, sample.iterations
        ));
        table_lines.push(format!(
            "{label}: estimate {:.6} nats (exact value {:.6})",
            sample.estimate, truth
        ));
    }
    table_lines.push(format!("gap = {gap:.6} nats"));
    if let Some(artifacts) = artifacts {
        artifacts.insert("discontinuity.csv", csv.into_bytes());
    }

    let mut checks = vec![CheckLine {
        name: "entropy gap at the accumulation point".into(),
        pass: gap >= 0.3,
        details: format!("estimate(winf) - max_k estimate(w_k) = {gap:.6} >= 0.3"),
    }];
    checks.push(CheckLine {
        name: "accumulation-point witness attached".into(),
        pass: at_winf.primal_witness == Some(std::f64::consts::LN_2),
        details: "Bernoulli(1/2,1/2) on the 2-free subshift certifies log 2".into(),
    });

    let report = Report::assemble(
        &format!("discontinuity m={memory}"),
        checks,
        table_lines,
        params,
        started,
    );
    Ok(DiscontinuityOutcome { report, at_wk, at_winf, gap })
}

/// Property suite for the concave usc counterexample `g`: concavity on
/// random triples, the zero limit along the parabola, full value range along
/// segments into the origin, and the unit limit along vertical approaches.
pub fn gkr_report(params: &PotentialParams, samples: u32, seed: u64) -> Result<Report> {
    let started = Instant::now();
    if samples < 1_000 {
        return Err(Error::InvalidParam {
            field: "samples",
            message: format!("need at least 1000 samples, got {samples}"),
        });
    }
    use rand::{rngs::StdRng, Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(seed);
    let draw_point = |rng: &mut StdRng| -> (f64, f64) {
        let x1: f64 = rng.random_range(-1.0..1.0);
        let x2: f64 = rng.random_range(x1 * x1..=1.0);
        (x1, x2)
    };

    // Concavity over random (p, q, t) triples.
    let mut max_violation = 0.0f64;
    for _ in 0..samples {
        let p = draw_point(&mut rng);
        let q = draw_point(&mut rng);
        let t: f64 = rng.random_range(0.0..=1.0);
        let mid = (t * p.0 + (1.0 - t) * q.0, t * p.1 + (1.0 - t) * q.1);
        let lhs = gkr_g(mid.0, mid.1)?;
        let rhs = t * gkr_g(p.0, p.1)? + (1.0 - t) * gkr_g(q.0, q.1)?;
        max_violation = max_violation.max(rhs - lhs);
    }
    let concave = max_violation <= 1e-12;

    // Identically zero along the parabola.
    let mut max_on_parabola = 0.0f64;
    for i in 1..=1000 {
        let t = i as f64 / 1000.0;
        max_on_parabola = max_on_parabola.max(gkr_g(t, t * t)?.abs());
    }
    let parabola_zero = max_on_parabola == 0.0;

    // Along the segment from (0.9, 0.81) to the origin the values sweep
    // [0, 1]; with 100 samples plus the origin the mesh is 0.01.
    let mut values: Vec<f64> = (1..=100)
        .map(|i| {
            let s = i as f64 / 100.0;
            gkr_g(s * 0.9, s * 0.81)
        })
        .collect::<Result<Vec<f64>>>()?;
    values.push(gkr_g(0.0, 0.0)?);
    values.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let min = values[0];
    let max = values[values.len() - 1];
    let mesh = values.windows(2).map(|p| p[1] - p[0]).fold(0.0f64, f64::max);
    let segment_covers = min == 0.0 && max == 1.0 && mesh <= 0.02;

    // Unit value along the vertical axis.
    let vertical_unit = (1..=100).all(|i| {
        let x2 = i as f64 / 100.0;
        gkr_g(0.0, x2).map(|v| v == 1.0).unwrap_or(false)
    });

    let checks = vec![
        CheckLine {
            name: "midpoint/interpolation concavity".into(),
            pass: concave,
            details: format!("max violation {max_violation:.3e} over {samples} triples"),
        },
        CheckLine {
            name: "zero along the parabola".into(),
            pass: parabola_zero,
            details: format!("max |g| = {max_on_parabola:.3e} on 1000 parabola points"),
        },
        CheckLine {
            name: "segment into origin covers [0,1]".into(),
            pass: segment_covers,
            details: format!("min {min}, max {max}, mesh {mesh}"),
        },
        CheckLine {
            name: "unit value on the vertical axis".into(),
            pass: vertical_unit,
            details: "g(0, x2) = 1 for sampled x2 > 0".into(),
        },
    ];
    Ok(Report::assemble(&format!("gkr samples={samples}"), checks, Vec::new(), params, started))
}

/// Slopes, extremality, and position below the graph of `h` for the vertex
/// sequence up to `k_max`.
pub fn slope_report(params: &PotentialParams, k_max: u32) -> Result<Report> {
    let started = Instant::now();
    let ws: Vec<Vec2Q> = (0..=k_max).map(|k| params.w_point(k)).collect();
    let slopes = edge_slopes(&ws)?;
    let monotone = slopes.strictly_monotone();

    let mut points = ws.clone();
    points.push(params.w_infinity());
    let hull = convex_hull(&points)?;
    let all_vertices = hull.len() == points.len();

    let below = ws.iter().all(|w| params.strictly_below_h(w));

    let mut table_lines = Vec::new();
    for (i, m) in slopes.slopes().iter().enumerate() {
        if i < 3 {
            table_lines.push(format!("m_{} = {}", i + 1, m));
        }
    }
    let checks = vec![
        CheckLine {
            name: "slope sequence strictly monotone".into(),
            pass: monotone,
            details: format!("{} consecutive slopes", slopes.slopes().len()),
        },
        CheckLine {
            name: "every w_k is a hull vertex".into(),
            pass: all_vertices,
            details: format!("{} of {} points extreme", hull.len(), points.len()),
        },
        CheckLine {
            name: "every w_k strictly below the graph of h".into(),
            pass: below,
            details: format!("k = 0..{k_max}, exact comparison"),
        },
    ];
    Ok(Report::assemble(&format!("slopes k<={k_max}"), checks, table_lines, params, started))
}

/// Exact empirical Lipschitz check: over all pairs of orbit points with
/// period at most `max_period`, the ratio `‖Φ(x)−Φ(y)‖ / d_θ(x,y)` never
/// exceeds the family bound. Pairs are screened through a per-value-pair
/// threshold on the first-difference index so the scan stays exact without
/// per-pair rational arithmetic.
pub fn lipschitz_report(params: &PotentialParams, max_period: u32) -> Result<Report> {
    use crate::exact::rat_pow;
    use crate::symbolic::orbit_points;

    let started = Instant::now();
    let orbits = enumerate_orbits(3, max_period as usize)?;
    let mut points: Vec<Vec<u8>> = Vec::new();
    let mut tags: Vec<usize> = Vec::new();
    let mut tag_values: Vec<Vec2Q> = Vec::new();
    let mut tag_index: BTreeMap<Vec<u8>, usize> = BTreeMap::new();
    for orbit in &orbits {
        for point in orbit_points(orbit) {
            let value = params.phi_on_periodic(&point)?;
            let key = format!("{},{}", value.x, value.y).into_bytes();
            let tag = *tag_index.entry(key).or_insert_with(|| {
                tag_values.push(value.clone());
                tag_values.len() - 1
            });
            points.push(point.symbols().to_vec());
            tags.push(tag);
        }
    }

    // Extended symbol arrays long enough to decide equality of any pair:
    // two periodic sequences with periods <= max_period agree iff they agree
    // on lcm(p, q) <= ext_len positions.
    let ext_len = {
        let mut best = 1usize;
        for p in 1..=max_period as usize {
            for q in p..=max_period as usize {
                best = best.max(p / gcd(p, q) * q);
            }
        }
        best
    };
    let ext: Vec<Vec<u8>> = points
        .iter()
        .map(|p| (0..ext_len).map(|i| p[i % p.len()]).collect())
        .collect();

    // Largest admissible first-difference index per value pair:
    // ratio <= L  iff  ‖Δ‖ <= L·θ^k  iff  k <= k_max(Δ).
    let bound = params.lipschitz_bound();
    let nt = tag_values.len();
    let mut k_max = vec![vec![0usize; nt]; nt];
    for i in 0..nt {
        for j in 0..nt {
            if i == j {
                k_max[i][j] = usize::MAX;
                continue;
            }
            let delta = tag_values[i].sub(&tag_values[j]).sup_norm();
            let mut k = 0usize;
            while k < ext_len + 2 && bound.clone() * rat_pow(params.theta(), (k + 1) as i32) >= delta {
                k += 1;
            }
            k_max[i][j] = k;
        }
    }

    let n = points.len();
    let violations: usize = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut bad = 0usize;
            let a = &ext[i];
            for j in (i + 1)..n {
                if tags[i] == tags[j] {
                    continue;
                }
                let b = &ext[j];
                let mut k = 0usize;
                while k < ext_len && a[k] == b[k] {
                    k += 1;
                }
                // Identical sequences cannot carry distinct values.
                debug_assert!(k < ext_len);
                if k + 1 > k_max[tags[i]][tags[j]] {
                    bad += 1;
                }
            }
            bad
        })
        .sum();

    let checks = vec![CheckLine {
        name: "empirical Lipschitz ratio within the family bound".into(),
        pass: violations == 0,
        details: format!(
            "{} orbit points, bound {}, {} violating pairs",
            n,
            params.lipschitz_bound(),
            violations
        ),
    }];
    Ok(Report::assemble(
        &format!("lipschitz period<={max_period}"),
        checks,
        vec![format!("{} value classes among {} points", nt, n)],
        params,
        started,
    ))
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Machine-readable summary written as `report.json`.
#[derive(Debug, Clone, Serialize)]
pub struct MachineReport {
    pub name: String,
    pub parameters: BTreeMap<String, String>,
    pub checks: Vec<MachineCheck>,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct MachineCheck {
    pub id: u32,
    pub name: String,
    pub pass: bool,
    pub details: String,
}

impl MachineReport {
    pub fn new(name: &str, params: &PotentialParams, checks: Vec<MachineCheck>) -> Self {
        let mut parameters = BTreeMap::new();
        for line in params.to_param_file().lines() {
            if let Some((k, v)) = line.split_once('=') {
                parameters.insert(k.trim().to_string(), v.trim().to_string());
            }
        }
        let pass = checks.iter().all(|c| c.pass);
        MachineReport { name: name.to_string(), parameters, checks, pass }
    }

    pub fn to_json_bytes(&self) -> Vec<u8> {
        let mut bytes = serde_json::to_vec_pretty(self).expect("report serialization");
        bytes.push(b'\n');
        bytes
    }
}

/// Convenience: the centroid-to-accumulation-point scan used by the CLI and
/// the output pipeline.
pub fn default_scan_targets(params: &PotentialParams, memory: u32) -> Vec<Vec2Q> {
    segment_targets(params, memory, 10)
}

/// Everything `verify` writes besides `report.json`: the hull artifacts at
/// period 12, the default spectrum scan at memory 8, and the discontinuity
/// table at memory 9. Returns the artifacts with the reports they came from.
pub fn run_output_pipeline(
    params: &PotentialParams,
) -> Result<(ArtifactSet, Report, Vec<ScanRow>, DiscontinuityOutcome)> {
    let mut artifacts = ArtifactSet::default();
    let hull_report = rotation_set_report(params, 12, Some(&mut artifacts))?;
    let scan = spectrum_scan(
        params,
        &default_scan_targets(params, 8),
        8,
        DualOptions::default(),
        Some(&mut artifacts),
    )?;
    let disc = discontinuity_report(params, &[1, 2, 3, 4], 9, DualOptions::default(), Some(&mut artifacts))?;
    Ok((artifacts, hull_report, scan, disc))
}

/// Helper for rendering an exact rational as `f64` in diagnostics.
pub(crate) fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().expect("rational fits f64")
}
