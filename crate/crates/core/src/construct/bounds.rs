use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Maximum size of a connected `k`-cactus of order `n`, for `k` in `1..=4`.
pub fn max_edges(n: usize, k: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::InvalidArgument("order must be positive".into()));
    }
    let m = n - 1;
    Ok(match k {
        1 => 3 * m / 2,
        2 | 3 => (2 * k + 1) * m / (k + 1),
        4 if n % 3 == 1 => 2 * n - 2,
        4 => 2 * n - 3,
        _ => return Err(Error::UnsupportedK { k, expected: "1..=4" }),
    })
}

/// Upper bound on the size of a 2-connected `k`-cactus of order `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoConnectedBound {
    pub n: usize,
    pub k: usize,
    pub bound: usize,
    /// Some graph attains the bound.
    pub tight: bool,
    /// The bound is known to be the exact maximum.
    pub exact: bool,
}

/// `n + k - 1`, tight for `n >= k + 2`, replaced by the exact small-order
/// maxima for `n` in `3..=5` and `k <= 4`.
pub fn max_edges_two_connected(n: usize, k: usize) -> Result<TwoConnectedBound> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "2-connected graphs need order >= 3, got {n}"
        )));
    }
    if k == 0 {
        return Err(Error::UnsupportedK { k, expected: ">= 1" });
    }
    let exact_small = match (n, k) {
        (3, _) => Some(3),
        (4, 2 | 3) => Some(5),
        (4, 4) => Some(6),
        (5, 2) => Some(6),
        (5, 3 | 4) => Some(7),
        _ => None,
    };
    let general = n + k - 1;
    Ok(match exact_small {
        Some(bound) => TwoConnectedBound {
            n,
            k,
            bound,
            tight: true,
            exact: true,
        },
        None => {
            let tight = n >= k + 2;
            TwoConnectedBound {
                n,
                k,
                bound: general,
                tight,
                exact: tight,
            }
        }
    })
}
