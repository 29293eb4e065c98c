//! Words over a finite alphabet and periodic orbits of the full shift.
//!
//! A periodic orbit is represented by its lexicographically minimal aperiodic
//! generating segment (a Lyndon word), which makes orbit deduplication and
//! uniqueness scans exact string comparisons. Enumeration order is fixed to
//! (period, then lexicographic) so every report is byte-reproducible.

use crate::error::{Error, Result};
use crate::exact::{rat_pow, Rat};
use num_traits::Zero;

/// Finite word over the alphabet `{0, …, d-1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    symbols: Vec<u8>,
    alphabet: u8,
}

impl Word {
    pub fn new(symbols: Vec<u8>, alphabet: u8) -> Result<Self> {
        for &s in &symbols {
            if s >= alphabet {
                return Err(Error::Alphabet { symbol: s, alphabet });
            }
        }
        Ok(Word { symbols, alphabet })
    }

    /// Word over the default ternary alphabet, parsed from digits.
    pub fn ternary(text: &str) -> Result<Self> {
        let symbols = text
            .bytes()
            .map(|b| {
                let s = b.wrapping_sub(b'0');
                if s < 3 {
                    Ok(s)
                } else {
                    Err(Error::Alphabet { symbol: s, alphabet: 3 })
                }
            })
            .collect::<Result<Vec<u8>>>()?;
        Word::new(symbols, 3)
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn alphabet(&self) -> u8 {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Left rotation by `j` positions.
    pub fn rotate(&self, j: usize) -> Word {
        let n = self.symbols.len();
        if n == 0 {
            return self.clone();
        }
        let j = j % n;
        let mut out = Vec::with_capacity(n);
        out.extend_from_slice(&self.symbols[j..]);
        out.extend_from_slice(&self.symbols[..j]);
        Word { symbols: out, alphabet: self.alphabet }
    }

    /// Length of the shortest word `u` with `self == u^j`.
    pub fn primitive_period(&self) -> usize {
        let n = self.symbols.len();
        for p in 1..=n {
            if n.is_multiple_of(p) && (0..n).all(|i| self.symbols[i] == self.symbols[i % p]) {
                return p;
            }
        }
        n
    }
}

impl std::fmt::Display for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &s in &self.symbols {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Periodic orbit of the full shift, keyed by its canonical necklace.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PeriodicOrbit {
    necklace: Word,
}

impl PeriodicOrbit {
    /// Canonicalizes an arbitrary generating segment.
    pub fn from_segment(w: &Word) -> Result<Self> {
        Ok(PeriodicOrbit { necklace: canonical_necklace(w)? })
    }

    pub fn necklace(&self) -> &Word {
        &self.necklace
    }

    pub fn period(&self) -> usize {
        self.necklace.len()
    }
}

impl std::fmt::Display for PeriodicOrbit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "O({})", self.necklace)
    }
}

/// Canonical representative of the rotation class of `w`: reduce a power
/// `u^j` to its primitive root `u`, then take the minimal rotation.
pub fn canonical_necklace(w: &Word) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let p = w.primitive_period();
    let root = Word { symbols: w.symbols[..p].to_vec(), alphabet: w.alphabet };
    let mut best = root.clone();
    for j in 1..p {
        let r = root.rotate(j);
        if r.symbols < best.symbols {
            best = r;
        }
    }
    Ok(best)
}

/// All Lyndon words over `d` symbols of length at most `max_len`, in
/// lexicographic order, via Duval's generation.
fn lyndon_words(d: u8, max_len: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut w: Vec<u8> = vec![0];
    loop {
        out.push(w.clone());
        // Periodic extension to max_len, then increment the last
        // non-maximal symbol.
        let prev = w.clone();
        w = (0..max_len).map(|i| prev[i % prev.len()]).collect();
        while let Some(&last) = w.last() {
            if last == d - 1 {
                w.pop();
            } else {
                break;
            }
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => return out,
        }
    }
}

/// One orbit per rotation class of prime period `<= max_period`, ordered by
/// period then lexicographically by necklace.
pub fn enumerate_orbits(d: u8, max_period: usize) -> Result<Vec<PeriodicOrbit>> {
    if d < 2 {
        return Err(Error::InvalidParam {
            field: "alphabet",
            message: format!("need at least 2 symbols, got {d}"),
        });
    }
    if max_period < 1 {
        return Err(Error::InvalidParam {
            field: "max_period",
            message: "must be >= 1".into(),
        });
    }
    let mut by_period: Vec<Vec<Word>> = vec![Vec::new(); max_period + 1];
    for symbols in lyndon_words(d, max_period) {
        let n = symbols.len();
        by_period[n].push(Word { symbols, alphabet: d });
    }
    let mut out = Vec::new();
    for bucket in by_period.into_iter().skip(1) {
        // Duval emits each length bucket already sorted.
        debug_assert!(bucket.windows(2).all(|p| p[0].symbols < p[1].symbols));
        out.extend(bucket.into_iter().map(|necklace| PeriodicOrbit { necklace }));
    }
    Ok(out)
}

/// The `period` points of the orbit, as generating segments: successive left
/// rotations of the necklace.
pub fn orbit_points(orbit: &PeriodicOrbit) -> Vec<Word> {
    (0..orbit.period()).map(|j| orbit.necklace.rotate(j)).collect()
}

/// First index (1-based) at which the infinite periodic extensions of two
/// generating segments differ, or `None` if they agree everywhere. The scan
/// is bounded by `lcm(period_x, period_y)`.
pub fn first_difference(x: &Word, y: &Word) -> Option<usize> {
    let (px, py) = (x.len(), y.len());
    let bound = px / gcd(px, py) * py;
    (0..bound).find(|&i| x.symbols[i % px] != y.symbols[i % py]).map(|i| i + 1)
}

/// `θ`-metric between the periodic points generated by `x` and `y`:
/// `θ^k` at first difference `k`, `0` for identical sequences.
pub fn theta_distance(x: &Word, y: &Word, theta: &Rat) -> Result<Rat> {
    if x.is_empty() || y.is_empty() {
        return Err(Error::EmptyWord);
    }
    if !(theta > &Rat::zero() && theta < &Rat::from_integer(1.into())) {
        return Err(Error::InvalidParam {
            field: "theta",
            message: "must lie in (0, 1)".into(),
        });
    }
    Ok(match first_difference(x, y) {
        Some(k) => rat_pow(theta, k as i32),
        None => Rat::zero(),
    })
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
