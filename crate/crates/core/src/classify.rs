//! Structural recognition of blocks (edge, cycle, θ_t, θ') and of
//! `k`-cacti for `k <= 4` from the block catalogue alone.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::construct::{Attachment, ThetaSpec};
use crate::decompose::{blocks, is_two_connected};
use crate::error::{Error, Result};
use crate::graph::{bit, Graph};

/// Which ear placements count as θ'. `Strict` requires both ear ends to avoid
/// the base's branch vertices; `Relaxed` also admits one end at a branch
/// vertex. Only `Relaxed` agrees with the cycle-count oracle.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EndpointRule {
    Strict,
    #[default]
    Relaxed,
}

impl FromStr for EndpointRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strict" => Ok(EndpointRule::Strict),
            "relaxed" => Ok(EndpointRule::Relaxed),
            other => Err(Error::InvalidArgument(format!("unknown θ' endpoint rule {other:?}"))),
        }
    }
}

impl fmt::Display for EndpointRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EndpointRule::Strict => "strict",
            EndpointRule::Relaxed => "relaxed",
        })
    }
}

/// A θ_3 base with one extra ear.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ThetaPrimeShape {
    pub base: ThetaSpec,
    pub ear_len: usize,
    pub attachment: Attachment,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum BlockKind {
    Edge,
    Cycle { length: usize },
    Theta { spec: ThetaSpec },
    ThetaPrime { shape: ThetaPrimeShape },
    Other,
}

impl BlockKind {
    /// Whether a block of this kind may occur in a `k`-cactus, `k` in `1..=4`.
    pub fn allowed_in(&self, k: usize) -> bool {
        match self {
            BlockKind::Edge | BlockKind::Cycle { .. } => true,
            BlockKind::Theta { spec } => (3..=k + 1).contains(&spec.paths()),
            BlockKind::ThetaPrime { .. } => k >= 4,
            BlockKind::Other => false,
        }
    }
}

impl fmt::Display for BlockKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockKind::Edge => f.write_str("K2"),
            BlockKind::Cycle { length } => write!(f, "C{length}"),
            BlockKind::Theta { spec } => write!(f, "{spec}"),
            BlockKind::ThetaPrime { shape } => write!(
                f,
                "θ'[{} + ear {} {}]",
                shape.base,
                shape.ear_len,
                match shape.attachment {
                    Attachment::SamePath => "same-path",
                    Attachment::BranchAndPath => "branch-and-path",
                    Attachment::AcrossPaths => "across-paths",
                }
            ),
            BlockKind::Other => f.write_str("other"),
        }
    }
}

/// A θ graph decomposed into its branch vertices and the vertex sequences of
/// its paths (each from `ends.0` to `ends.1`).
struct ThetaParts {
    ends: (usize, usize),
    paths: Vec<Vec<usize>>,
}

fn theta_parts(g: &Graph) -> Option<ThetaParts> {
    let n = g.order();
    let branch: Vec<usize> = (0..n).filter(|&v| g.degree(v) != 2).collect();
    let [a, b] = branch[..] else { return None };
    let t = g.degree(a);
    if t < 3 || g.degree(b) != t {
        return None;
    }
    let mut paths = Vec::with_capacity(t);
    let mut internal = 0;
    for first in g.neighbors(a) {
        let mut path = vec![a];
        let (mut prev, mut cur) = (a, first);
        while cur != b {
            if cur == a {
                return None;
            }
            path.push(cur);
            internal += 1;
            let next = g.neighbors(cur).find(|&w| w != prev)?;
            prev = cur;
            cur = next;
        }
        path.push(b);
        paths.push(path);
    }
    // every degree-2 vertex must sit on one of the traced paths
    if internal != n - 2 {
        return None;
    }
    Some(ThetaParts { ends: (a, b), paths })
}

fn spec_of(parts: &ThetaParts) -> ThetaSpec {
    ThetaSpec::new(parts.paths.iter().map(|p| p.len() - 1)).expect("traced θ graph is simple")
}

/// Maximal paths whose internal vertices have degree 2 and whose ends have
/// degree at least 3, as vertex sequences.
fn branches(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for x in (0..g.order()).filter(|&v| g.degree(v) >= 3) {
        for first in g.neighbors(x) {
            let mut path = vec![x];
            let (mut prev, mut cur) = (x, first);
            while g.degree(cur) == 2 {
                path.push(cur);
                let next = g.neighbors(cur).find(|&w| w != prev).expect("degree-2 vertex");
                prev = cur;
                cur = next;
            }
            path.push(cur);
            // keep one orientation of each branch
            if (x, path[1]) < (cur, path[path.len() - 2]) {
                out.push(path);
            }
        }
    }
    out
}

fn theta_prime_shapes(g: &Graph, rule: EndpointRule) -> Vec<ThetaPrimeShape> {
    let mut shapes = Vec::new();
    for ear in branches(g) {
        let (x, y) = (ear[0], ear[ear.len() - 1]);
        if x == y {
            continue;
        }
        let internal: u64 = ear[1..ear.len() - 1].iter().fold(0, |m, &v| m | bit(v));
        let mut rest = g.clone();
        if ear.len() == 2 {
            rest.remove_edge(x, y);
        }
        let rest = rest.without_vertices(internal);
        // vertex labels shift down past removed internal vertices
        let relabel = |v: usize| v - (internal & (bit(v) - 1)).count_ones() as usize;
        let (rx, ry) = (relabel(x), relabel(y));
        let Some(parts) = theta_parts(&rest) else { continue };
        if parts.paths.len() != 3 {
            continue;
        }
        let (a, b) = parts.ends;
        let at_branch = [rx, ry].iter().filter(|&&v| v == a || v == b).count();
        let attachment = match at_branch {
            2 => continue,
            1 if rule == EndpointRule::Strict => continue,
            1 => Attachment::BranchAndPath,
            _ => {
                let path_of = |v| parts.paths.iter().position(|p| p.contains(&v));
                if path_of(rx) == path_of(ry) {
                    Attachment::SamePath
                } else {
                    Attachment::AcrossPaths
                }
            }
        };
        shapes.push(ThetaPrimeShape {
            base: spec_of(&parts),
            ear_len: ear.len() - 1,
            attachment,
        });
    }
    shapes.sort();
    shapes.dedup();
    shapes
}

/// Classifies a single edge or 2-connected graph. When a θ' block admits
/// several (base, ear) readings the smallest shape is reported, which keeps
/// the result independent of vertex labels.
pub fn classify_block(b: &Graph, rule: EndpointRule) -> Result<BlockKind> {
    if b.order() == 2 && b.size() == 1 {
        return Ok(BlockKind::Edge);
    }
    if !is_two_connected(b) {
        return Err(Error::NotABlock);
    }
    if b.degrees().iter().all(|&d| d == 2) {
        return Ok(BlockKind::Cycle { length: b.order() });
    }
    if let Some(parts) = theta_parts(b) {
        return Ok(BlockKind::Theta { spec: spec_of(&parts) });
    }
    // θ' has exactly |E| = |V| + 2
    if b.size() == b.order() + 2 {
        if let Some(shape) = theta_prime_shapes(b, rule).into_iter().next() {
            return Ok(BlockKind::ThetaPrime { shape });
        }
    }
    Ok(BlockKind::Other)
}

/// Kinds of every block of a connected graph, in block order.
pub fn block_kinds(g: &Graph, rule: EndpointRule) -> Result<Vec<BlockKind>> {
    blocks(g)?
        .blocks
        .iter()
        .map(|b| classify_block(&b.to_graph(), rule))
        .collect()
}

/// `k`-cactus membership for `k` in `1..=4` from block kinds alone.
pub fn structural_k_cactus(g: &Graph, k: usize, rule: EndpointRule) -> Result<bool> {
    if !(1..=4).contains(&k) {
        return Err(Error::UnsupportedK { k, expected: "1..=4" });
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    Ok(block_kinds(g, rule)?.iter().all(|kind| kind.allowed_in(k)))
}
