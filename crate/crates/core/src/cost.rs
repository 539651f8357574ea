use std::fmt;
use std::iter::Sum;
use std::ops::Add;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::Zero;

/// Exact non-negative path or step cost.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Cost(Ratio<u64>);

impl Cost {
    pub const ZERO: Cost = Cost(Ratio::new_raw(0, 1));
    pub const ONE: Cost = Cost(Ratio::new_raw(1, 1));

    pub fn integer(n: u64) -> Self {
        Cost(Ratio::from_integer(n))
    }

    /// Panics if `denom` is zero.
    pub fn ratio(numer: u64, denom: u64) -> Self {
        Cost(Ratio::new(numer, denom))
    }

    pub fn numer(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> u64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl Add for Cost {
    type Output = Cost;

    fn add(self, rhs: Cost) -> Cost {
        Cost(self.0 + rhs.0)
    }
}

impl Sum for Cost {
    fn sum<I: Iterator<Item = Cost>>(iter: I) -> Cost {
        iter.fold(Cost::ZERO, Add::add)
    }
}

impl fmt::Display for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid cost literal `{0}`")]
pub struct ParseCostError(pub String);

impl FromStr for Cost {
    type Err = ParseCostError;

    /// Accepts a decimal integer or a `p/q` rational with `q > 0`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseCostError(s.to_string());
        let digits = |t: &str| -> Result<u64, ParseCostError> {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            t.parse().map_err(|_| err())
        };
        match s.split_once('/') {
            None => Ok(Cost::integer(digits(s)?)),
            Some((p, q)) => {
                let (p, q) = (digits(p)?, digits(q)?);
                if q == 0 {
                    return Err(err());
                }
                Ok(Cost::ratio(p, q))
            }
        }
    }
}
