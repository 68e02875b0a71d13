//! θ̃1 and θ̃2: the 2-connected 4-cacti of order 5 and size 7 other than
//! θ(1,2,2,2), derived by exhaustive search over all graphs of order 5 and
//! frozen here as canonical graph6 strings ordered by canonical form. The
//! verifier re-derives them.

use crate::graph::{parse_graph6, Graph};

pub const THETA_TILDE_GRAPH6: [&str; 2] = ["DL{", "DNw"];

/// `theta_tilde(1)` or `theta_tilde(2)`.
pub fn theta_tilde(which: usize) -> Graph {
    assert!(which == 1 || which == 2, "θ̃ index must be 1 or 2");
    parse_graph6(THETA_TILDE_GRAPH6[which - 1]).expect("frozen fixture is valid graph6")
}
