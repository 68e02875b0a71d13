//! Exact per-edge cycle counts by exhaustive path search.
//!
//! The cycles of `g` through `e = uv` are in bijection with the simple
//! `u`-`v` paths of `g - e`, so each count is a depth-first path enumeration
//! over bit-set visited masks. The cost is exponential in the order; a hard
//! cap guards against runaway searches.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, iter_bits, Edge, Graph};

pub const DEFAULT_CAP: usize = 16;

/// Per-edge cycle counts of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCycleProfile {
    counts: Vec<(Edge, u64)>,
    cactus_number: u64,
}

impl EdgeCycleProfile {
    /// `(edge, count)` pairs in edge order.
    pub fn counts(&self) -> &[(Edge, u64)] {
        &self.counts
    }

    pub fn count(&self, e: Edge) -> Option<u64> {
        self.counts
            .binary_search_by_key(&e, |(edge, _)| *edge)
            .ok()
            .map(|i| self.counts[i].1)
    }

    /// Maximum count, 0 for forests and edgeless graphs.
    pub fn cactus_number(&self) -> u64 {
        self.cactus_number
    }
}

/// Cycle counter with a configurable order cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleOracle {
    cap: usize,
}

impl Default for CycleOracle {
    fn default() -> Self {
        CycleOracle { cap: DEFAULT_CAP }
    }
}

fn count_paths(g: &Graph, at: usize, target: usize, visited: u64) -> u64 {
    let mut total = 0;
    for w in iter_bits(g.neighbor_mask(at) & !visited) {
        if w == target {
            total += 1;
        } else {
            total += count_paths(g, w, target, visited | bit(w));
        }
    }
    total
}

impl CycleOracle {
    pub fn with_cap(cap: usize) -> Self {
        CycleOracle { cap }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn check(&self, g: &Graph) -> Result<()> {
        if g.order() > self.cap {
            Err(Error::CapExceeded {
                n: g.order(),
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }

    /// Number of distinct cycles of `g` containing `e`.
    pub fn cycles_through_edge(&self, g: &Graph, e: Edge) -> Result<u64> {
        self.check(g)?;
        let h = g.without_edge(e)?;
        Ok(count_paths(&h, e.u, e.v, bit(e.u)))
    }

    pub fn edge_cycle_profile(&self, g: &Graph) -> Result<EdgeCycleProfile> {
        self.check(g)?;
        // a bridge lies on no cycle; skip the search when the endpoints are
        // disconnected in g - e
        let counts: Vec<(Edge, u64)> = g
            .edges()
            .map(|e| {
                let mut h = g.clone();
                h.remove_edge(e.u, e.v);
                let c = if h.reach_within(e.u, u64::MAX) & bit(e.v) == 0 {
                    0
                } else {
                    count_paths(&h, e.u, e.v, bit(e.u))
                };
                (e, c)
            })
            .collect();
        let cactus_number = counts.iter().map(|&(_, c)| c).max().unwrap_or(0);
        Ok(EdgeCycleProfile { counts, cactus_number })
    }

    pub fn cactus_number(&self, g: &Graph) -> Result<u64> {
        Ok(self.edge_cycle_profile(g)?.cactus_number)
    }

    /// Connected and every edge on at most `k` cycles.
    pub fn is_k_cactus(&self, g: &Graph, k: u64) -> Result<bool> {
        self.check(g)?;
        if !g.is_connected() {
            return Ok(false);
        }
        Ok(self.cactus_number(g)? <= k)
    }

    /// A `k`-cactus with some edge on exactly `k` cycles.
    pub fn is_nice_k_cactus(&self, g: &Graph, k: u64) -> Result<bool> {
        self.check(g)?;
        if !g.is_connected() {
            return Ok(false);
        }
        Ok(self.cactus_number(g)? == k)
    }
}

pub fn cycles_through_edge(g: &Graph, e: Edge) -> Result<u64> {
    CycleOracle::default().cycles_through_edge(g, e)
}

pub fn edge_cycle_profile(g: &Graph) -> Result<EdgeCycleProfile> {
    CycleOracle::default().edge_cycle_profile(g)
}

pub fn cactus_number(g: &Graph) -> Result<u64> {
    CycleOracle::default().cactus_number(g)
}

pub fn is_k_cactus(g: &Graph, k: u64) -> Result<bool> {
    CycleOracle::default().is_k_cactus(g, k)
}

pub fn is_nice_k_cactus(g: &Graph, k: u64) -> Result<bool> {
    CycleOracle::default().is_nice_k_cactus(g, k)
}
