//! Valuation strategies: exhaustive enumeration, rational grids and seeded
//! random sampling.

use std::fmt;
use std::ops::ControlFlow;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::CheckError;
use crate::models::{Element, Model, Standard};
use crate::scalar::Scalar;

/// Denominator bound for random rationals unless overridden.
pub const DEFAULT_MAX_DEN: i64 = 120;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Every valuation over a finite carrier.
    Exhaustive,
    /// First coordinates `k/d` for `-d <= k <= d`; second coordinates
    /// `0, 1/2, -1/2` on pair carriers. `None` picks a denominator from the
    /// terms being checked.
    Grid(Option<u32>),
    /// `count` valuations with coordinates `k/max_den`, `k` uniform.
    Random { count: u64, seed: u64, max_den: i64 },
}

impl Strategy {
    pub fn random(count: u64, seed: u64) -> Strategy {
        Strategy::Random { count, seed, max_den: DEFAULT_MAX_DEN }
    }

    /// Parses `exhaustive`, `grid`, `grid:<d>` or `random:<n>`.
    pub fn parse(text: &str, seed: u64, max_den: i64) -> Result<Strategy, String> {
        let bad = || format!("invalid strategy `{text}` (expected exhaustive, grid:<d> or random:<n>)");
        if max_den < 1 {
            return Err("--max-den must be at least 1".into());
        }
        match text.split_once(':') {
            None if text == "exhaustive" => Ok(Strategy::Exhaustive),
            None if text == "grid" => Ok(Strategy::Grid(None)),
            Some(("grid", d)) => match d.parse::<u32>() {
                Ok(d) if d >= 1 => Ok(Strategy::Grid(Some(d))),
                _ => Err(bad()),
            },
            Some(("random", n)) => {
                let count = n.parse::<u64>().map_err(|_| bad())?;
                Ok(Strategy::Random { count, seed, max_den })
            }
            _ => Err(bad()),
        }
    }

    pub fn seed(&self) -> u64 {
        match self {
            Strategy::Random { seed, .. } => *seed,
            _ => 0,
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strategy::Exhaustive => f.write_str("exhaustive"),
            Strategy::Grid(Some(d)) => write!(f, "grid:{d}"),
            Strategy::Grid(None) => f.write_str("grid"),
            Strategy::Random { count, .. } => write!(f, "random:{count}"),
        }
    }
}

/// Grid values `0, 1/d, -1/d, 2/d, -2/d, ..., 1, -1`.
pub(crate) fn grid_values<S: Scalar>(d: u32) -> Vec<S> {
    let d = i64::from(d);
    let mut out = vec![S::zero()];
    for k in 1..=d {
        out.push(S::from_ratio(k, d));
        out.push(S::from_ratio(-k, d));
    }
    out
}

/// Candidate elements for one variable under a grid.
pub(crate) fn grid_points<S: Scalar>(m: &Model<S>, d: u32) -> Vec<Element<S>> {
    if let Some(all) = m.elements() {
        return all;
    }
    let firsts = grid_values::<S>(d);
    let half = S::half();
    let seconds = match m.standard_kind() {
        Some(Standard::HalfSquare) => vec![half, S::zero(), S::one()],
        Some(s) if s.is_pair() => vec![S::zero(), half.clone(), -half],
        _ => return firsts.into_iter().map(Element::Scalar).collect(),
    };
    let mut out = Vec::new();
    for a in &firsts {
        for b in &seconds {
            let e = Element::Pair(a.clone(), b.clone());
            if m.contains(&e) {
                out.push(e);
            }
        }
    }
    out
}

/// Visits every tuple of `points^k` in lexicographic order (first
/// variable slowest). Returns the number of tuples visited.
pub(crate) fn for_each_tuple<T: Clone>(
    points: &[T],
    k: usize,
    mut f: impl FnMut(&[T]) -> ControlFlow<()>,
) -> u64 {
    let mut idx = vec![0usize; k];
    let mut cur: Vec<T> = match points.first() {
        Some(p) => vec![p.clone(); k],
        None => return 0,
    };
    let mut visited = 0u64;
    loop {
        visited += 1;
        if f(&cur).is_break() {
            return visited;
        }
        let mut pos = k;
        loop {
            if pos == 0 {
                return visited;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < points.len() {
                cur[pos] = points[idx[pos]].clone();
                break;
            }
            idx[pos] = 0;
            cur[pos] = points[0].clone();
        }
    }
}

/// Draws one random carrier element.
pub fn random_element<S: Scalar>(m: &Model<S>, rng: &mut ChaCha8Rng, max_den: i64) -> Element<S> {
    if let Some(n) = m.size() {
        return Element::Fin(rng.gen_range(0..n));
    }
    let coord = |rng: &mut ChaCha8Rng, lo: i64| S::from_ratio(rng.gen_range(lo..=max_den), max_den);
    match m.standard_kind() {
        Some(Standard::HalfSquare) => {
            Element::Pair(coord(rng, -max_den), coord(rng, 0))
        }
        Some(s) if s.is_pair() => loop {
            let e = Element::Pair(coord(rng, -max_den), coord(rng, -max_den));
            if m.contains(&e) {
                return e;
            }
        },
        _ => Element::Scalar(coord(rng, -max_den)),
    }
}

/// Runs `f` on each valuation (as a slice aligned with the variable list)
/// chosen by `strategy`; `grid_d` resolves `Grid(None)`. Returns the number
/// of valuations visited.
pub(crate) fn for_each_valuation<S: Scalar>(
    m: &Model<S>,
    strategy: &Strategy,
    grid_d: u32,
    nvars: usize,
    mut f: impl FnMut(&[Element<S>]) -> ControlFlow<()>,
) -> Result<u64, CheckError> {
    match strategy {
        Strategy::Exhaustive => {
            let points = m.elements().ok_or_else(|| CheckError::Strategy(m.name().to_string()))?;
            Ok(for_each_tuple(&points, nvars, f))
        }
        Strategy::Grid(d) => {
            let points = grid_points(m, d.unwrap_or(grid_d));
            Ok(for_each_tuple(&points, nvars, f))
        }
        Strategy::Random { count, seed, max_den } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let mut buf = Vec::with_capacity(nvars);
            for i in 0..*count {
                buf.clear();
                for _ in 0..nvars {
                    buf.push(random_element(m, &mut rng, *max_den));
                }
                if f(&buf).is_break() {
                    return Ok(i + 1);
                }
            }
            Ok(*count)
        }
    }
}
