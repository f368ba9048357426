//! Exact rational scores and rank-weighting schemes.

use std::fmt;
use std::iter::Sum;
use std::ops::Add;

use num::rational::Ratio;
use num::Zero;

use crate::error::{Error, Result};

/// An exact rational match score (always reduced, never floating point).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Score(Ratio<i64>);

impl Score {
    pub const ZERO: Score = Score(Ratio::new_raw(0, 1));

    pub fn from_int(n: i64) -> Score {
        Score(Ratio::from_integer(n))
    }

    /// `num / den` reduced. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Score {
        Score(Ratio::new(num, den))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Convert to `f64` (used only at the reporting boundary).
    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }
}

impl Add for Score {
    type Output = Score;
    fn add(self, rhs: Score) -> Score {
        Score(self.0 + rhs.0)
    }
}

impl Sum for Score {
    fn sum<I: Iterator<Item = Score>>(iter: I) -> Score {
        iter.fold(Score::ZERO, Add::add)
    }
}

impl fmt::Display for Score {
    /// Renders `3` for integers and `129/40` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

/// How a keyword's list rank translates into a match weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightingScheme {
    /// Every matched keyword counts 1.
    Uniform,
    /// A keyword at rank r counts 1/r.
    Harmonic,
    /// Ranks 1-5 count 1; rank r > 5 counts 1/r.
    TopFiveThenHarmonic,
}

impl WeightingScheme {
    /// Weight for a 1-based rank. Rank 0 is an error.
    pub fn weight(&self, rank: usize) -> Result<Score> {
        if rank < 1 {
            return Err(Error::BadRank);
        }
        Ok(match self {
            WeightingScheme::Uniform => Score::from_int(1),
            WeightingScheme::Harmonic => Score::new(1, rank as i64),
            WeightingScheme::TopFiveThenHarmonic => {
                if rank <= 5 {
                    Score::from_int(1)
                } else {
                    Score::new(1, rank as i64)
                }
            }
        })
    }

    /// Stable name used by the CLI and the linkage JSON.
    pub fn name(&self) -> &'static str {
        match self {
            WeightingScheme::Uniform => "uniform",
            WeightingScheme::Harmonic => "harmonic",
            WeightingScheme::TopFiveThenHarmonic => "top5",
        }
    }

    pub fn from_name(name: &str) -> Option<WeightingScheme> {
        match name {
            "uniform" => Some(WeightingScheme::Uniform),
            "harmonic" => Some(WeightingScheme::Harmonic),
            "top5" => Some(WeightingScheme::TopFiveThenHarmonic),
            _ => None,
        }
    }
}
