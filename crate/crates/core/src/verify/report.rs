use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    /// Maximum size of connected `k`-cacti equals the closed form.
    Bounds,
    /// Structural membership agrees with the cycle-count oracle.
    Characterization,
    /// Maximizers equal the realizations of the extremal recipes.
    ExtremalSets,
    /// `n + k - 1` bound and small exact cases for 2-connected `k`-cacti.
    TwoConnected,
    /// θ̃1 and θ̃2 re-derived from the order-5 census.
    ThetaTildeFixtures,
    /// Order and size identities of every recipe for larger `n`.
    RecipeArithmetic,
}

impl Claim {
    pub const ALL: [Claim; 6] = [
        Claim::Bounds,
        Claim::Characterization,
        Claim::ExtremalSets,
        Claim::TwoConnected,
        Claim::ThetaTildeFixtures,
        Claim::RecipeArithmetic,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Claim::Bounds => "bounds",
            Claim::Characterization => "characterization",
            Claim::ExtremalSets => "extremal-sets",
            Claim::TwoConnected => "two-connected",
            Claim::ThetaTildeFixtures => "theta-tilde-fixtures",
            Claim::RecipeArithmetic => "recipe-arithmetic",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown claim {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    DiscrepancyNoted,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::DiscrepancyNoted => "discrepancy-noted",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub n: usize,
    pub k: Option<usize>,
}

/// Machine-readable outcome of one claim check. Field order is the JSON
/// order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: Claim,
    pub params: Params,
    pub graphs_examined: u64,
    pub observed: serde_json::Value,
    pub witnesses: Vec<String>,
    pub mismatches: Vec<String>,
    pub verdict: Verdict,
    pub elapsed_s: f64,
}

impl VerificationReport {
    /// Zeroes the timing so that repeated runs serialize identically.
    pub fn without_timing(mut self) -> Self {
        self.elapsed_s = 0.0;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Exit status for a batch of reports: 0 all pass, 2 any failure, 3 when the
/// worst outcome is a noted discrepancy.
pub fn exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().any(|r| r.verdict == Verdict::Fail) {
        2
    } else if reports.iter().any(|r| r.verdict == Verdict::DiscrepancyNoted) {
        3
    } else {
        0
    }
}
