//! Exact summary statistics over integer samples.
//!
//! Everything is held as integer tallies; rounding only happens when a value
//! is formatted, half away from zero.

use std::fmt;

use serde::Serialize;

/// `numerator / denominator` as a proportion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Share {
    pub numerator: u64,
    pub denominator: u64,
}

impl Share {
    pub fn new(numerator: u64, denominator: u64) -> Self {
        assert!(denominator > 0, "share with empty denominator");
        Share {
            numerator,
            denominator,
        }
    }

    pub fn percent(&self) -> f64 {
        100.0 * self.numerator as f64 / self.denominator as f64
    }

    /// Percentage in tenths of a percent, rounded half up.
    pub fn permille_rounded(&self) -> u64 {
        let scaled = 2 * 1000 * self.numerator + self.denominator;
        scaled / (2 * self.denominator)
    }

    /// Percentage with one decimal, e.g. `63.6`.
    pub fn percent_1dp(&self) -> String {
        let t = self.permille_rounded();
        format!("{}.{}", t / 10, t % 10)
    }
}

impl fmt::Display for Share {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}%", self.percent_1dp())
    }
}

/// Arithmetic mean of integer samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Mean {
    pub sum: i64,
    pub count: u64,
}

impl Mean {
    pub fn of(samples: &[i64]) -> Option<Self> {
        (!samples.is_empty()).then(|| Mean {
            sum: samples.iter().sum(),
            count: samples.len() as u64,
        })
    }

    pub fn value(&self) -> f64 {
        self.sum as f64 / self.count as f64
    }

    pub fn is_zero(&self) -> bool {
        self.sum == 0
    }

    /// Hundredths, rounded half away from zero.
    pub fn hundredths_rounded(&self) -> i64 {
        let count = self.count as i64;
        let scaled = 100 * self.sum.abs();
        let magnitude = (2 * scaled + count) / (2 * count);
        if self.sum < 0 {
            -magnitude
        } else {
            magnitude
        }
    }

    /// Two decimals, e.g. `-1.23`.
    pub fn to_2dp(&self) -> String {
        let h = self.hundredths_rounded();
        let sign = if h < 0 { "-" } else { "" };
        format!("{sign}{}.{:02}", h.abs() / 100, h.abs() % 100)
    }
}

impl fmt::Display for Mean {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_2dp())
    }
}

/// A median of integer samples, stored doubled so halves stay exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Median {
    pub doubled: i64,
}

impl Median {
    /// Even counts average the two central values.
    pub fn of(samples: &[i64]) -> Option<Self> {
        if samples.is_empty() {
            return None;
        }
        let mut sorted = samples.to_vec();
        sorted.sort_unstable();
        let mid = sorted.len() / 2;
        let doubled = if sorted.len() % 2 == 1 {
            2 * sorted[mid]
        } else {
            sorted[mid - 1] + sorted[mid]
        };
        Some(Median { doubled })
    }

    pub fn from_halves(doubled: i64) -> Self {
        Median { doubled }
    }

    pub fn value(&self) -> f64 {
        self.doubled as f64 / 2.0
    }
}

impl fmt::Display for Median {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.doubled < 0 { "-" } else { "" };
        let whole = self.doubled.abs() / 2;
        if self.doubled % 2 == 0 {
            write!(f, "{sign}{whole}")
        } else {
            write!(f, "{sign}{whole}.5")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn share_rounding() {
        assert_eq!(Share::new(14, 22).percent_1dp(), "63.6");
        assert_eq!(Share::new(1, 42).percent_1dp(), "2.4");
        assert_eq!(Share::new(2, 77).percent_1dp(), "2.6");
        assert_eq!(Share::new(1, 1).percent_1dp(), "100.0");
        assert_eq!(Share::new(0, 5).percent_1dp(), "0.0");
        // 1/2000 = 0.05% rounds up
        assert_eq!(Share::new(1, 2000).percent_1dp(), "0.1");
    }

    #[test]
    fn mean_rounding() {
        assert_eq!(Mean::of(&[1, 2]).unwrap().to_2dp(), "1.50");
        assert_eq!(Mean::of(&[-1, -2, -2]).unwrap().to_2dp(), "-1.67");
        assert_eq!(Mean::of(&[1, -1]).unwrap().to_2dp(), "0.00");
        // -1/200 = -0.005 rounds away from zero
        let mut v = vec![0i64; 199];
        v.push(-1);
        assert_eq!(Mean::of(&v).unwrap().to_2dp(), "-0.01");
        assert!(Mean::of(&[]).is_none());
    }

    #[test]
    fn medians() {
        assert_eq!(Median::of(&[3, 1, 2]).unwrap().to_string(), "2");
        assert_eq!(Median::of(&[1, 2]).unwrap().to_string(), "1.5");
        assert_eq!(Median::of(&[0, 1]).unwrap().to_string(), "0.5");
        assert_eq!(Median::of(&[-2, -1]).unwrap().to_string(), "-1.5");
        assert!(Median::of(&[]).is_none());
    }
}
