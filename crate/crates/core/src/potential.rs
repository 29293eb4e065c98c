//! The parameterized two-dimensional potential family on the ternary full
//! shift, with exact rational evaluation.
//!
//! The family is pinned down by parameters `(a, b, λ, θ, C, C1)` and the
//! geometric rule `x_k = a·θ^{2k}`, `h(x) = b·sqrt(x/a)`, which keeps every
//! point of interest rational:
//!
//! * `v_k = (x_k, h(x_k)) = (a·θ^{2k}, b·θ^k)` and `u_k = (x_k, 0)`;
//! * `w_0 = (a, 0)`, `w_∞ = (0, 0)`, and for `k ≥ 1`
//!   `w_k = (λ·w_0 + v_1 + … + v_k) / (k + λ)`.
//!
//! Evaluation of the potential at a point depends only on the position `l`
//! of the first `2` in its symbol sequence: `w_0` when `l ≤ λ`, `v_{l−λ}`
//! when `l > λ` and all earlier symbols are `1`, `u_{l−λ}` when `l > λ`
//! otherwise, and `w_∞` when no `2` occurs. A length-`m` prefix decides the
//! value unless it is `2`-free, in which case the value is bounded in
//! sup-norm by `C·θ^{m+1−λ}`.

use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact::{parse_rat, rat, rat_pow, Rat, Vec2Q};
use crate::symbolic::{orbit_points, PeriodicOrbit, Word};

/// Rule generating the abscissa sequence `x_k`. Only the geometric default
/// is supported; it is what makes all `v_k` rational.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum XRule {
    #[default]
    Geometric,
}

impl XRule {
    fn as_str(&self) -> &'static str {
        match self {
            XRule::Geometric => "geometric",
        }
    }
}

/// Parameters of the potential family. Immutable after validation.
#[derive(Debug, Clone, PartialEq)]
pub struct PotentialParams {
    a: Rat,
    b: Rat,
    lambda: u32,
    theta: Rat,
    decay_c: Rat,
    diameter_c1: Rat,
    x_rule: XRule,
}

impl Default for PotentialParams {
    fn default() -> Self {
        PotentialParams::new(rat(1, 1), rat(1, 1), 3, rat(1, 2), rat(2, 1), rat(1, 1), XRule::Geometric)
            .expect("default parameters are valid")
    }
}

impl PotentialParams {
    pub fn new(
        a: Rat,
        b: Rat,
        lambda: u32,
        theta: Rat,
        decay_c: Rat,
        diameter_c1: Rat,
        x_rule: XRule,
    ) -> Result<Self> {
        let zero = Rat::zero();
        let one = Rat::one();
        if a <= zero {
            return Err(Error::InvalidParam { field: "a", message: "must be > 0".into() });
        }
        if b <= zero {
            return Err(Error::InvalidParam { field: "b", message: "must be > 0".into() });
        }
        if lambda < 3 {
            return Err(Error::InvalidParam { field: "lambda", message: "must be an integer >= 3".into() });
        }
        if !(theta > zero && theta < one) {
            return Err(Error::InvalidParam { field: "theta", message: "must lie in (0, 1)".into() });
        }
        if decay_c <= zero {
            return Err(Error::InvalidParam { field: "C", message: "must be > 0".into() });
        }
        // sup-norm of v_k is max(a·θ^{2k}, b·θ^k) = θ^k·max(a·θ^k, b); the
        // strict decay ‖v_k‖ < C·θ^k for all k >= 1 reduces to these two.
        if a.clone() * theta.clone() >= decay_c || b >= decay_c {
            return Err(Error::InvalidParam {
                field: "C",
                message: "decay constant must dominate the sequence: need a*theta < C and b < C".into(),
            });
        }
        // Sup-norm diameter of the value set is max(a, b·θ).
        let diam = {
            let bt = b.clone() * theta.clone();
            if a >= bt {
                a.clone()
            } else {
                bt
            }
        };
        if diameter_c1 < diam {
            return Err(Error::InvalidParam {
                field: "C1",
                message: format!("must bound the value-set diameter {diam}"),
            });
        }
        Ok(PotentialParams { a, b, lambda, theta, decay_c, diameter_c1, x_rule })
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn b(&self) -> &Rat {
        &self.b
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    pub fn theta(&self) -> &Rat {
        &self.theta
    }

    pub fn decay_c(&self) -> &Rat {
        &self.decay_c
    }

    pub fn diameter_c1(&self) -> &Rat {
        &self.diameter_c1
    }

    pub fn x_rule(&self) -> XRule {
        self.x_rule
    }

    /// `x_k = a·θ^{2k}`.
    fn x_k(&self, k: u32) -> Rat {
        self.a.clone() * rat_pow(&self.theta, 2 * k as i32)
    }

    /// `v_k = (x_k, h(x_k))`, exact under the geometric rule.
    pub fn v_point(&self, k: u32) -> Result<Vec2Q> {
        if k == 0 {
            return Err(Error::IndexFromOne { field: "v_point" });
        }
        Ok(Vec2Q::new(self.x_k(k), self.b.clone() * rat_pow(&self.theta, k as i32)))
    }

    /// `u_k = (x_k, 0)`.
    pub fn u_point(&self, k: u32) -> Result<Vec2Q> {
        if k == 0 {
            return Err(Error::IndexFromOne { field: "u_point" });
        }
        Ok(Vec2Q::new(self.x_k(k), Rat::zero()))
    }

    /// `w_k`; `w_point(0)` is the right endpoint `(a, 0)`.
    pub fn w_point(&self, k: u32) -> Vec2Q {
        let w0 = Vec2Q::new(self.a.clone(), Rat::zero());
        if k == 0 {
            return w0;
        }
        let mut sum = w0.scale(&Rat::from_integer(self.lambda.into()));
        for j in 1..=k {
            sum = sum.add(&self.v_point(j).expect("j >= 1"));
        }
        sum.scale(&(Rat::one() / Rat::from_integer((k + self.lambda).into())))
    }

    /// The accumulation point `w_∞ = (0, 0)`.
    pub fn w_infinity(&self) -> Vec2Q {
        Vec2Q::zero()
    }

    /// Upper bound on the sup-norm of any value decided past position `m`:
    /// `C·θ^{m+1−λ}`.
    pub fn undetermined_bound(&self, m: u32) -> Rat {
        self.decay_c.clone() * rat_pow(&self.theta, m as i32 + 1 - self.lambda as i32)
    }

    /// Lipschitz constant `max{C1, 2C}·θ^{−λ}` valid for the whole family.
    pub fn lipschitz_bound(&self) -> Rat {
        let two_c = rat(2, 1) * self.decay_c.clone();
        let lead = if self.diameter_c1 >= two_c { self.diameter_c1.clone() } else { two_c };
        lead * rat_pow(&self.theta, -(self.lambda as i32))
    }

    /// Classify a finite prefix. `Undetermined` carries the norm bound on
    /// whatever value a continuation could take.
    pub fn classify_prefix(&self, w: &Word) -> Result<ValueClass> {
        if w.alphabet() != 3 {
            return Err(Error::Alphabet { symbol: w.alphabet(), alphabet: 3 });
        }
        if w.is_empty() {
            return Err(Error::EmptyWord);
        }
        let symbols = w.symbols();
        match symbols.iter().position(|&s| s == 2) {
            Some(pos) => Ok(self.classify_at(symbols, pos)),
            None => Ok(ValueClass::Undetermined(self.undetermined_bound(symbols.len() as u32))),
        }
    }

    /// Class given the index (0-based) of the first `2`; the prefix before it
    /// is all in `{0, 1}` by construction.
    fn classify_at(&self, symbols: &[u8], pos: usize) -> ValueClass {
        let l = pos + 1;
        if l <= self.lambda as usize {
            ValueClass::W0
        } else if symbols[..pos].iter().all(|&s| s == 1) {
            ValueClass::V(l as u32 - self.lambda)
        } else {
            ValueClass::U(l as u32 - self.lambda)
        }
    }

    /// Exact value of a determined class.
    pub fn class_value(&self, class: &ValueClass) -> Option<Vec2Q> {
        match class {
            ValueClass::W0 => Some(self.w_point(0)),
            ValueClass::U(j) => Some(self.u_point(*j).expect("j >= 1")),
            ValueClass::V(j) => Some(self.v_point(*j).expect("j >= 1")),
            ValueClass::WInf => Some(self.w_infinity()),
            ValueClass::Undetermined(_) => None,
        }
    }

    /// Class of the periodic point generated by `p`: a `2` either occurs in
    /// one period or never.
    pub fn classify_periodic(&self, p: &Word) -> Result<ValueClass> {
        if p.alphabet() != 3 {
            return Err(Error::Alphabet { symbol: p.alphabet(), alphabet: 3 });
        }
        if p.is_empty() {
            return Err(Error::EmptyWord);
        }
        match p.symbols().iter().position(|&s| s == 2) {
            Some(pos) => Ok(self.classify_at(p.symbols(), pos)),
            None => Ok(ValueClass::WInf),
        }
    }

    /// Exact potential value at the periodic point generated by `p`.
    pub fn phi_on_periodic(&self, p: &Word) -> Result<Vec2Q> {
        let class = self.classify_periodic(p)?;
        Ok(self.class_value(&class).expect("periodic classes are determined"))
    }

    /// Exact rotation vector of an orbit: the orbit average of the potential.
    pub fn rotation_vector(&self, orbit: &PeriodicOrbit) -> Result<Vec2Q> {
        let mut sum = Vec2Q::zero();
        for point in orbit_points(orbit) {
            sum = sum.add(&self.phi_on_periodic(&point)?);
        }
        Ok(sum.scale(&(Rat::one() / Rat::from_integer(orbit.period().into()))))
    }

    /// Exact rotation vectors of many orbits, sharing one value cache and
    /// classifying each orbit in `O(period)` by two cyclic sweeps.
    pub fn rotation_vectors(&self, orbits: &[PeriodicOrbit]) -> Vec<Vec2Q> {
        let max_j = orbits
            .iter()
            .map(|o| o.period().saturating_sub(self.lambda as usize))
            .max()
            .unwrap_or(0);
        let u: Vec<Vec2Q> = (1..=max_j as u32).map(|j| self.u_point(j).expect("j >= 1")).collect();
        let v: Vec<Vec2Q> = (1..=max_j as u32).map(|j| self.v_point(j).expect("j >= 1")).collect();
        let w0 = self.w_point(0);
        orbits
            .iter()
            .map(|orbit| {
                let symbols = orbit.necklace().symbols();
                let n = symbols.len();
                if !symbols.contains(&2) {
                    return Vec2Q::zero();
                }
                // Distance from each start to the next 2 / next non-1,
                // over the doubled word.
                let mut next2 = vec![0usize; 2 * n + 1];
                let mut non1 = vec![0usize; 2 * n + 1];
                next2[2 * n] = usize::MAX / 2;
                non1[2 * n] = usize::MAX / 2;
                for i in (0..2 * n).rev() {
                    let s = symbols[i % n];
                    next2[i] = if s == 2 { 0 } else { next2[i + 1] + 1 };
                    non1[i] = if s != 1 { 0 } else { non1[i + 1] + 1 };
                }
                let lambda = self.lambda as usize;
                let mut w0_count = 0usize;
                let mut u_counts = vec![0usize; max_j + 1];
                let mut v_counts = vec![0usize; max_j + 1];
                for start in 0..n {
                    let d = next2[start];
                    let l = d + 1;
                    if l <= lambda {
                        w0_count += 1;
                    } else if non1[start] >= d {
                        v_counts[l - lambda] += 1;
                    } else {
                        u_counts[l - lambda] += 1;
                    }
                }
                let mut sum = w0.scale(&Rat::from_integer(w0_count.into()));
                for j in 1..=max_j {
                    if v_counts[j] > 0 {
                        sum = sum.add(&v[j - 1].scale(&Rat::from_integer(v_counts[j].into())));
                    }
                    if u_counts[j] > 0 {
                        sum = sum.add(&u[j - 1].scale(&Rat::from_integer(u_counts[j].into())));
                    }
                }
                sum.scale(&(Rat::one() / Rat::from_integer(n.into())))
            })
            .collect()
    }

    /// Finite-memory truncation with the strict memory requirement
    /// `m ≥ λ + 1`; below that every `V`-value is lost.
    pub fn locally_constant_table(&self, memory: u32) -> Result<PotentialTable> {
        if memory <= self.lambda {
            return Err(Error::MemoryBelowLambda { memory, lambda: self.lambda });
        }
        Ok(self.truncation_table(memory))
    }

    /// Truncation at any memory `m ≥ 1`. Coarse tables (`m ≤ λ`) only see
    /// the `w_0`/undetermined split; they back the small primal and Karp
    /// oracles.
    pub fn truncation_table(&self, memory: u32) -> PotentialTable {
        assert!(memory >= 1, "memory must be >= 1");
        let m = memory as usize;
        let count = 3usize.pow(memory);
        let mut values = Vec::with_capacity(count);
        let mut word = vec![0u8; m];
        for id in 0..count {
            let mut rest = id;
            for i in (0..m).rev() {
                word[i] = (rest % 3) as u8;
                rest /= 3;
            }
            let value = match word.iter().position(|&s| s == 2) {
                Some(pos) => self
                    .class_value(&self.classify_at(&word, pos))
                    .expect("determined"),
                // Undetermined cylinders take the accumulation-point value.
                None => Vec2Q::zero(),
            };
            values.push(value);
        }
        PotentialTable {
            memory,
            values,
            sup_error: self.undetermined_bound(memory),
            params: self.clone(),
        }
    }

    /// Rotation vector of an orbit under the memory-`m` truncation: the
    /// average of table values over the orbit's length-`m` windows.
    pub fn truncated_rotation_vector(&self, table: &PotentialTable, orbit: &PeriodicOrbit) -> Vec2Q {
        let m = table.memory as usize;
        let symbols = orbit.necklace().symbols();
        let n = symbols.len();
        let mut sum = Vec2Q::zero();
        for start in 0..n {
            let mut id = 0usize;
            for i in 0..m {
                id = id * 3 + symbols[(start + i) % n] as usize;
            }
            sum = sum.add(&table.values[id]);
        }
        sum.scale(&(Rat::one() / Rat::from_integer(n.into())))
    }

    /// Render as the flat key = value parameter-file format.
    pub fn to_param_file(&self) -> String {
        format!(
            "a = {}\nb = {}\nlambda = {}\ntheta_num = {}\ntheta_den = {}\nC = {}\nC1 = {}\nx_rule = {}\n",
            self.a,
            self.b,
            self.lambda,
            self.theta.numer(),
            self.theta.denom(),
            self.decay_c,
            self.diameter_c1,
            self.x_rule.as_str(),
        )
    }

    /// Parse the flat key = value format. Missing keys keep their defaults;
    /// unknown keys are rejected.
    pub fn from_param_file(text: &str) -> Result<Self> {
        let mut fields: BTreeMap<&str, String> = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| Error::ParamFile {
                message: format!("line {}: expected `key = value`, got `{line}`", lineno + 1),
            })?;
            let key = key.trim();
            match key {
                "a" | "b" | "lambda" | "theta_num" | "theta_den" | "C" | "C1" | "x_rule" => {
                    fields.insert(
                        match key {
                            "a" => "a",
                            "b" => "b",
                            "lambda" => "lambda",
                            "theta_num" => "theta_num",
                            "theta_den" => "theta_den",
                            "C" => "C",
                            "C1" => "C1",
                            _ => "x_rule",
                        },
                        value.trim().to_string(),
                    );
                }
                other => {
                    return Err(Error::ParamFile { message: format!("unknown key `{other}`") });
                }
            }
        }
        let defaults = PotentialParams::default();
        let get_rat = |name: &str, fallback: &Rat| -> Result<Rat> {
            match fields.get(name) {
                Some(v) => parse_rat(v),
                None => Ok(fallback.clone()),
            }
        };
        let a = get_rat("a", &defaults.a)?;
        let b = get_rat("b", &defaults.b)?;
        let decay_c = get_rat("C", &defaults.decay_c)?;
        let diameter_c1 = get_rat("C1", &defaults.diameter_c1)?;
        let lambda = match fields.get("lambda") {
            Some(v) => v.trim().parse::<u32>().map_err(|_| Error::ParamFile {
                message: format!("lambda: not an integer: `{v}`"),
            })?,
            None => defaults.lambda,
        };
        let theta_num = match fields.get("theta_num") {
            Some(v) => parse_rat(v)?,
            None => Rat::from_integer(defaults.theta.numer().clone()),
        };
        let theta_den = match fields.get("theta_den") {
            Some(v) => parse_rat(v)?,
            None => Rat::from_integer(defaults.theta.denom().clone()),
        };
        if theta_den.is_zero() {
            return Err(Error::ParamFile { message: "theta_den: must be nonzero".into() });
        }
        let theta = theta_num / theta_den;
        let x_rule = match fields.get("x_rule").map(|s| s.as_str()) {
            None | Some("geometric") => XRule::Geometric,
            Some(other) => {
                return Err(Error::ParamFile { message: format!("x_rule: unsupported rule `{other}`") });
            }
        };
        PotentialParams::new(a, b, lambda, theta, decay_c, diameter_c1, x_rule)
            .map_err(|e| Error::ParamFile { message: e.to_string() })
    }

    /// Exact test for `y < h(x)` with `h(x) = b·sqrt(x/a)`: for `y ≥ 0` this
    /// is `a·y² < b²·x`.
    pub fn strictly_below_h(&self, p: &Vec2Q) -> bool {
        if p.x < Rat::zero() || p.x > self.a {
            return false;
        }
        if p.y.is_negative() {
            return true;
        }
        self.a.clone() * p.y.clone() * p.y.clone() < self.b.clone() * self.b.clone() * p.x.clone()
    }
}

/// Value class of a prefix or periodic point.
#[derive(Debug, Clone, PartialEq)]
pub enum ValueClass {
    W0,
    U(u32),
    V(u32),
    WInf,
    /// Prefix does not decide the value; carries the sup-norm bound.
    Undetermined(Rat),
}

/// Locally constant approximation of the potential at a fixed memory:
/// one exact plane value per length-`m` word (lexicographic id order),
/// plus the sup-norm truncation error.
#[derive(Debug, Clone)]
pub struct PotentialTable {
    memory: u32,
    values: Vec<Vec2Q>,
    sup_error: Rat,
    params: PotentialParams,
}

impl PotentialTable {
    pub fn memory(&self) -> u32 {
        self.memory
    }

    pub fn sup_error(&self) -> &Rat {
        &self.sup_error
    }

    pub fn params(&self) -> &PotentialParams {
        &self.params
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value by lexicographic word id.
    pub fn value_by_id(&self, id: usize) -> &Vec2Q {
        &self.values[id]
    }

    /// Value of a length-`m` word.
    pub fn value(&self, w: &Word) -> Result<&Vec2Q> {
        if w.len() != self.memory as usize {
            return Err(Error::InvalidParam {
                field: "word",
                message: format!("expected length {}, got {}", self.memory, w.len()),
            });
        }
        let id = w.symbols().iter().fold(0usize, |acc, &s| acc * 3 + s as usize);
        Ok(&self.values[id])
    }

    pub fn values(&self) -> &[Vec2Q] {
        &self.values
    }

    /// Values as floating-point pairs, the one sanctioned exit from exact
    /// arithmetic (consumed by the transfer graph).
    pub fn values_f64(&self) -> Vec<(f64, f64)> {
        self.values.iter().map(|v| v.to_f64()).collect()
    }

    pub fn sup_error_f64(&self) -> f64 {
        self.sup_error.to_f64().expect("sup error fits f64")
    }
}
