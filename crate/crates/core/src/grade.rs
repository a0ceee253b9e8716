//! Exact membership grades in `[0, 1]`.
//!
//! Every grade is a reduced rational, so equality is structural and the
//! min/max lattice operations never suffer from rounding ties.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::GradeError;

/// A rational membership value in the closed unit interval.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Grade(Ratio<u64>);

impl Grade {
    pub const ZERO: Grade = Grade(Ratio::new_raw(0, 1));
    pub const ONE: Grade = Grade(Ratio::new_raw(1, 1));

    /// Builds `numer / denom`, reducing it. Rejects a zero denominator and
    /// values above one.
    pub fn new(numer: u64, denom: u64) -> Result<Self, GradeError> {
        if denom == 0 {
            return Err(GradeError::ZeroDenominator);
        }
        if numer > denom {
            return Err(GradeError::OutOfRange(format!("{numer}/{denom}")));
        }
        Ok(Grade(Ratio::new(numer, denom)))
    }

    /// `1 / 2^k`, the default descending grade ladder.
    pub fn half_pow(k: u32) -> Self {
        assert!(k < 64, "grade ladder exhausted");
        Grade(Ratio::new(1, 1u64 << k))
    }

    pub fn numer(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> u64 {
        *self.0.denom()
    }

    pub fn is_one(&self) -> bool {
        *self == Grade::ONE
    }

    pub fn is_zero(&self) -> bool {
        self.numer() == 0
    }

    /// Lattice meet.
    pub fn meet(self, other: Grade) -> Grade {
        self.min(other)
    }

    /// Lattice join.
    pub fn join(self, other: Grade) -> Grade {
        self.max(other)
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Grade {
    type Err = GradeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parse = |part: &str| -> Result<u64, GradeError> {
            part.trim()
                .parse::<u64>()
                .map_err(|_| GradeError::Malformed(s.to_string()))
        };
        match s.split_once('/') {
            Some((n, d)) => Grade::new(parse(n)?, parse(d)?),
            None => Grade::new(parse(s)?, 1),
        }
    }
}

impl Serialize for Grade {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Grade {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
