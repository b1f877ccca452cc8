//! Models addressed by name: `square`, `disk`, `interval`, `flat-standard`,
//! `half-square`, `chain:<n>`, `flatten:<base>:<k>`, `product:<m1>,<m2>`,
//! `ex32-grid`, `square-grid:<d>`, each optionally suffixed with `@w`.

use std::fmt;
use std::str::FromStr;

use super::{Element, FiniteAlgebra, Model, ModelError, Standard};
use crate::scalar::Scalar;
use crate::syntax::Signature;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ModelSpec {
    Square,
    Disk,
    Interval,
    StandardFlat,
    HalfSquare,
    /// `{-n/n, ..., 0, ..., n/n}` inside the interval.
    Chain(u32),
    /// The `k`-flattening of a finite base (or of the interval at 0).
    Flatten(Box<ModelSpec>, String),
    Product(Box<ModelSpec>, Box<ModelSpec>),
    /// The half-square restricted to `{-1,-1/2,0,1/2,1} x {0,1/2,1}`.
    Example32Grid,
    /// The square restricted to `{k/d} x {-1/2, 0, 1/2}`.
    SquareGrid(u32),
    /// Implicative reading of the inner model.
    Wajsberg(Box<ModelSpec>),
}

fn wrap(s: &ModelSpec) -> String {
    match s {
        ModelSpec::Product(..) | ModelSpec::Wajsberg(_) => format!("({s})"),
        _ => s.to_string(),
    }
}

impl fmt::Display for ModelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelSpec::Square => f.write_str("square"),
            ModelSpec::Disk => f.write_str("disk"),
            ModelSpec::Interval => f.write_str("interval"),
            ModelSpec::StandardFlat => f.write_str("flat-standard"),
            ModelSpec::HalfSquare => f.write_str("half-square"),
            ModelSpec::Chain(n) => write!(f, "chain:{n}"),
            ModelSpec::Flatten(b, k) => write!(f, "flatten:{}:{k}", wrap(b)),
            ModelSpec::Product(a, b) => write!(f, "product:{},{}", wrap(a), wrap(b)),
            ModelSpec::Example32Grid => f.write_str("ex32-grid"),
            ModelSpec::SquareGrid(d) => write!(f, "square-grid:{d}"),
            ModelSpec::Wajsberg(inner) => write!(f, "{inner}@w"),
        }
    }
}

fn strip_parens(s: &str) -> &str {
    let s = s.trim();
    if s.starts_with('(') && s.ends_with(')') {
        // only if the outer pair matches
        let mut depth = 0i32;
        for (i, c) in s.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 && i + 1 < s.len() {
                        return s;
                    }
                }
                _ => {}
            }
        }
        return strip_parens(&s[1..s.len() - 1]);
    }
    s
}

fn split_top_comma(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

impl FromStr for ModelSpec {
    type Err = ModelError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let s = strip_parens(text);
        let bad = || ModelError::Spec(format!("unknown model `{text}`"));
        if let Some(inner) = s.strip_suffix("@w") {
            let inner: ModelSpec = inner.parse()?;
            if matches!(inner, ModelSpec::Wajsberg(_)) {
                return Err(bad());
            }
            return Ok(ModelSpec::Wajsberg(Box::new(inner)));
        }
        let num = |t: &str| t.parse::<u32>().ok().filter(|&n| n >= 1).ok_or_else(bad);
        Ok(match s {
            "square" => ModelSpec::Square,
            "disk" => ModelSpec::Disk,
            "interval" => ModelSpec::Interval,
            "flat-standard" => ModelSpec::StandardFlat,
            "half-square" => ModelSpec::HalfSquare,
            "ex32-grid" => ModelSpec::Example32Grid,
            _ => {
                if let Some(n) = s.strip_prefix("chain:") {
                    ModelSpec::Chain(num(n)?)
                } else if let Some(d) = s.strip_prefix("square-grid:") {
                    ModelSpec::SquareGrid(num(d)?)
                } else if let Some(rest) = s.strip_prefix("flatten:") {
                    let (base, k) = rest.rsplit_once(':').ok_or_else(bad)?;
                    if k.is_empty() || k.contains(char::is_whitespace) {
                        return Err(bad());
                    }
                    ModelSpec::Flatten(Box::new(base.parse()?), k.to_string())
                } else if let Some(rest) = s.strip_prefix("product:") {
                    let (a, b) = split_top_comma(rest).ok_or_else(bad)?;
                    ModelSpec::Product(Box::new(a.parse()?), Box::new(b.parse()?))
                } else {
                    return Err(bad());
                }
            }
        })
    }
}

fn finite_mv<S: Scalar>(spec: &ModelSpec) -> Result<FiniteAlgebra, ModelError> {
    let m: Model<S> = build_spec(spec)?;
    let alg = m
        .finite_algebra()
        .ok_or_else(|| ModelError::Spec(format!("`{spec}` is not finite")))?;
    Ok(if alg.native() == Signature::Mv { alg.clone() } else { alg.converted(Signature::Mv) })
}

fn grid<S: Scalar>(firsts: &[S], seconds: &[S]) -> Vec<Element<S>> {
    firsts
        .iter()
        .flat_map(|a| seconds.iter().map(move |b| Element::Pair(a.clone(), b.clone())))
        .collect()
}

/// Builds the model named by `spec`.
pub fn build_spec<S: Scalar>(spec: &ModelSpec) -> Result<Model<S>, ModelError> {
    let name = spec.to_string();
    let std = |s: Standard| Ok(Model::standard(s, Signature::Mv));
    match spec {
        ModelSpec::Square => std(Standard::Square),
        ModelSpec::Disk => std(Standard::Disk),
        ModelSpec::Interval => std(Standard::Interval),
        ModelSpec::StandardFlat => std(Standard::Flat),
        ModelSpec::HalfSquare => std(Standard::HalfSquare),
        ModelSpec::Chain(n) => {
            let n = i64::from(*n);
            let interval = Model::standard(Standard::Interval, Signature::Mv);
            let pts: Vec<Element<S>> = (-n..=n).map(|k| Element::Scalar(S::from_ratio(k, n))).collect();
            Ok(Model::finite(name, FiniteAlgebra::from_points(&interval, &pts)?))
        }
        ModelSpec::Example32Grid => {
            let half = Model::standard(Standard::HalfSquare, Signature::Mv);
            let firsts: Vec<S> = (-2..=2).map(|k| S::from_ratio(k, 2)).collect();
            let seconds: Vec<S> = (0..=2).map(|k| S::from_ratio(k, 2)).collect();
            Ok(Model::finite(name, FiniteAlgebra::from_points(&half, &grid(&firsts, &seconds))?))
        }
        ModelSpec::SquareGrid(d) => {
            let d = i64::from(*d);
            let square = Model::standard(Standard::Square, Signature::Mv);
            let firsts: Vec<S> = (-d..=d).map(|k| S::from_ratio(k, d)).collect();
            let seconds: Vec<S> = (-1..=1).map(|k| S::from_ratio(k, 2)).collect();
            Ok(Model::finite(name, FiniteAlgebra::from_points(&square, &grid(&firsts, &seconds))?))
        }
        ModelSpec::Flatten(base, k) => {
            if **base == ModelSpec::Interval {
                return if k == "0" {
                    Ok(Model::standard(Standard::Flat, Signature::Mv).with_name(name))
                } else {
                    Err(ModelError::Spec("the interval can only be flattened onto 0".into()))
                };
            }
            Ok(Model::finite(name, finite_mv::<S>(base)?.flatten(k)?))
        }
        ModelSpec::Product(a, b) => {
            let p = finite_mv::<S>(a)?.product(&finite_mv::<S>(b)?)?;
            Ok(Model::finite(name, p))
        }
        ModelSpec::Wajsberg(inner) => {
            let m: Model<S> = build_spec(inner)?;
            if let Some(s) = m.standard_kind() {
                return Ok(Model::standard(s, Signature::W).with_name(name));
            }
            let alg = m.finite_algebra().expect("non-standard models are finite");
            Ok(Model::finite(name, alg.converted(Signature::W)))
        }
    }
}

/// Parses and builds a catalog model.
pub fn build_model<S: Scalar>(name: &str) -> Result<Model<S>, ModelError> {
    build_spec(&name.parse::<ModelSpec>()?)
}

/// Finite models used by the exhaustive audits, additive readings only.
pub fn finite_catalog() -> Vec<&'static str> {
    vec![
        "chain:1",
        "chain:2",
        "chain:3",
        "flatten:chain:1:0",
        "flatten:chain:2:0",
        "flatten:chain:3:0",
        "product:chain:1,flatten:chain:1:0",
        "product:chain:2,flatten:chain:1:0",
        "product:chain:3,flatten:chain:2:0",
        "product:chain:1,chain:2",
        "product:flatten:chain:1:0,flatten:chain:2:0",
        "ex32-grid",
        "square-grid:2",
        "product:(product:chain:1,flatten:chain:1:0),(product:chain:1,flatten:chain:1:0)",
    ]
}
