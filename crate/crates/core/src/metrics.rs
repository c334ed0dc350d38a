//! Distance and similarity functions over interest vectors.
//!
//! Euclidean distance is converted to a similarity with `1 / (1 + d)`, and the
//! default reported score scales that by 100. Pearson correlation is offered as an
//! alternative that ignores a constant offset between two raters.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::domain::InterestVector;
use crate::error::{Error, Operand, Result};

/// Euclidean distance between two interest vectors. Non-negative and finite.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Distance(f64);

impl Distance {
    /// Returns `None` for negative or non-finite input.
    pub fn new(value: f64) -> Option<Self> {
        (value.is_finite() && value >= 0.0).then_some(Self(value))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Scoring method used to rank supervisors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Metric {
    /// `100 * (1 / (1 + d))`, in `(0, 100]`.
    #[default]
    EuclideanPercent,
    /// `1 / (1 + d)`, in `(0, 1]`.
    EuclideanUnit,
    /// Sample correlation, in `[-1, 1]`.
    Pearson,
}

impl Metric {
    pub const ALL: [Metric; 3] = [
        Metric::EuclideanPercent,
        Metric::EuclideanUnit,
        Metric::Pearson,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Metric::EuclideanPercent => "euclidean-percent",
            Metric::EuclideanUnit => "euclidean-unit",
            Metric::Pearson => "pearson",
        }
    }

    /// Score of a vector against itself.
    pub fn perfect(self) -> f64 {
        match self {
            Metric::EuclideanPercent => 100.0,
            Metric::EuclideanUnit | Metric::Pearson => 1.0,
        }
    }

    pub fn score(self, a: &InterestVector, b: &InterestVector) -> Result<Score> {
        match self {
            Metric::EuclideanPercent => euclidean_distance(a, b).map(similarity_percent),
            Metric::EuclideanUnit => euclidean_distance(a, b).map(similarity_unit),
            Metric::Pearson => pearson_similarity(a, b),
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownMetric(pub String);

impl fmt::Display for UnknownMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown metric {:?} (expected euclidean-percent, euclidean-unit or pearson)",
            self.0
        )
    }
}

impl std::error::Error for UnknownMetric {}

impl FromStr for Metric {
    type Err = UnknownMetric;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Metric::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| UnknownMetric(s.to_string()))
    }
}

/// A similarity value tagged with the metric that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Score {
    pub value: f64,
    pub metric: Metric,
}

fn check_lengths(a: &InterestVector, b: &InterestVector) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    Ok(())
}

/// `sqrt(sum((a_i - b_i)^2))`, summed left to right.
pub fn euclidean_distance(a: &InterestVector, b: &InterestVector) -> Result<Distance> {
    check_lengths(a, b)?;
    let sum: f64 = a
        .as_slice()
        .iter()
        .zip(b.as_slice())
        .map(|(x, y)| (x - y) * (x - y))
        .sum();
    Ok(Distance(sum.sqrt()))
}

/// `1 / (1 + d)`.
pub fn similarity_unit(d: Distance) -> Score {
    Score {
        value: 1.0 / (1.0 + d.0),
        metric: Metric::EuclideanUnit,
    }
}

/// `100 * similarity_unit(d)`.
///
/// The unit score is computed first and then scaled; `100 / (1 + d)` differs
/// in the last bit for some inputs and would not reproduce reference output.
pub fn similarity_percent(d: Distance) -> Score {
    Score {
        value: 100.0 * similarity_unit(d).value,
        metric: Metric::EuclideanPercent,
    }
}

/// Sample Pearson correlation of paired ratings.
///
/// Errors with `ConstantVector` when either side has zero variance, which also
/// covers vectors shorter than two.
pub fn pearson_similarity(a: &InterestVector, b: &InterestVector) -> Result<Score> {
    check_lengths(a, b)?;
    let (xs, ys) = (a.as_slice(), b.as_slice());
    let n = xs.len() as f64;
    let mean_x = xs.iter().sum::<f64>() / n;
    let mean_y = ys.iter().sum::<f64>() / n;

    let mut cov = 0.0;
    let mut var_x = 0.0;
    let mut var_y = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        let dx = x - mean_x;
        let dy = y - mean_y;
        cov += dx * dy;
        var_x += dx * dx;
        var_y += dy * dy;
    }
    if xs.is_empty() || var_x == 0.0 {
        return Err(Error::ConstantVector(Operand::First));
    }
    if var_y == 0.0 {
        return Err(Error::ConstantVector(Operand::Second));
    }
    // sqrt(v * v) == v exactly, so a vector correlates with itself at exactly 1.
    let r = cov / (var_x * var_y).sqrt();
    Ok(Score {
        value: r.clamp(-1.0, 1.0),
        metric: Metric::Pearson,
    })
}
