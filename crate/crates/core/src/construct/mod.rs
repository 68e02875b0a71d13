//! Graph builders, coalescence, closed-form edge bounds and extremal recipes.

mod bounds;
mod fixtures;
mod recipes;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::decompose::add_ear;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

pub use bounds::{max_edges, max_edges_two_connected, TwoConnectedBound};
pub use fixtures::{theta_tilde, THETA_TILDE_GRAPH6};
pub use recipes::{
    extremal_recipes, realize_recipe, realize_recipe_all, stated_recipes, ExtremalRecipe, Part, Revision, RevisionKind,
    StatedRecipe,
};

/// Path lengths of a θ graph: `t >= 3` internally disjoint paths between two
/// branch vertices. Stored in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ThetaSpec(Vec<usize>);

impl ThetaSpec {
    pub fn new(lengths: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut lengths: Vec<usize> = lengths.into_iter().collect();
        lengths.sort_unstable();
        let invalid = |reason| {
            Err(Error::InvalidTheta {
                lengths: lengths.to_vec(),
                reason,
            })
        };
        if lengths.len() < 3 {
            return invalid("at least three paths are required");
        }
        if lengths[0] == 0 {
            return invalid("path lengths must be positive");
        }
        if lengths.len() > 1 && lengths[1] == 1 {
            return invalid("at most one path may have length one");
        }
        if 2 + lengths.iter().map(|l| l - 1).sum::<usize>() > crate::graph::MAX_ORDER {
            return invalid("too many vertices");
        }
        Ok(ThetaSpec(lengths))
    }

    pub fn lengths(&self) -> &[usize] {
        &self.0
    }

    /// Number of paths.
    pub fn paths(&self) -> usize {
        self.0.len()
    }

    pub fn order(&self) -> usize {
        2 + self.0.iter().map(|l| l - 1).sum::<usize>()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Vertex sequences of the paths in [`build_theta`] labels: branch
    /// vertices `0` and `1`, internal vertices numbered path by path.
    pub fn layout(&self) -> Vec<Vec<usize>> {
        let mut next = 2;
        self.0
            .iter()
            .map(|&len| {
                let mut path = vec![0];
                for _ in 1..len {
                    path.push(next);
                    next += 1;
                }
                path.push(1);
                path
            })
            .collect()
    }

    /// Every spec with `t` paths and at most `max_order` vertices.
    pub fn enumerate(t: usize, max_order: usize) -> Vec<ThetaSpec> {
        fn rec(t: usize, min: usize, budget: usize, cur: &mut Vec<usize>, out: &mut Vec<ThetaSpec>) {
            if cur.len() == t {
                if let Ok(s) = ThetaSpec::new(cur.iter().copied()) {
                    out.push(s);
                }
                return;
            }
            // each path of length l costs l - 1 internal vertices
            let mut l = min;
            while l - 1 <= budget {
                cur.push(l);
                rec(t, l.max(2), budget - (l - 1), cur, out);
                cur.pop();
                l += 1;
            }
        }
        let mut out = Vec::new();
        if t >= 3 && max_order >= 2 {
            rec(t, 1, max_order - 2, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for ThetaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("θ(")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str(")")
    }
}

/// Where the two ends of an ear sit on a θ_3 base.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Attachment {
    /// Both ends internal to the same path.
    SamePath,
    /// One end is a branch vertex, the other internal to a path.
    BranchAndPath,
    /// Ends internal to two different paths.
    AcrossPaths,
}

/// How an ear between `x` and `y` attaches to the θ graph of `spec`, or
/// `None` when both ends are the branch vertices.
pub fn theta_attachment(spec: &ThetaSpec, x: usize, y: usize) -> Option<Attachment> {
    let layout = spec.layout();
    let path_of = |v: usize| layout.iter().position(|p| p[1..p.len() - 1].contains(&v));
    match (path_of(x), path_of(y)) {
        (None, None) => None,
        (Some(_), None) | (None, Some(_)) => Some(Attachment::BranchAndPath),
        (Some(a), Some(b)) if a == b => Some(Attachment::SamePath),
        _ => Some(Attachment::AcrossPaths),
    }
}

pub fn build_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("cycle order {n} < 3")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn build_complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidArgument("complete graph order must be positive".into()));
    }
    Graph::from_edges(n, (0..n).flat_map(|j| (0..j).map(move |i| (i, j))))
}

pub fn build_complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
}

/// The θ graph of `spec` in [`ThetaSpec::layout`] labels.
pub fn build_theta(spec: &ThetaSpec) -> Result<Graph> {
    let edges: Vec<Edge> = spec
        .layout()
        .iter()
        .flat_map(|p| p.windows(2).map(|w| Edge::new(w[0], w[1])).collect::<Vec<_>>())
        .collect();
    Graph::from_edges(spec.order(), edges)
}

/// θ_3 base plus an ear of `ear_len` edges between vertices `x` and `y` of
/// the base (in [`ThetaSpec::layout`] labels). Ends at both branch vertices
/// are rejected since that yields a θ_4.
pub fn build_theta_prime(base: &ThetaSpec, x: usize, y: usize, ear_len: usize) -> Result<(Graph, Attachment)> {
    if base.paths() != 3 {
        return Err(Error::InvalidArgument(format!("θ' base {base} must have three paths")));
    }
    let attachment = theta_attachment(base, x, y)
        .ok_or_else(|| Error::InvalidArgument("an ear between the branch vertices gives a θ_4, not a θ'".into()))?;
    let g = add_ear(&build_theta(base)?, x, y, ear_len)?;
    Ok((g, attachment))
}

/// Identifies `v1` of `g1` with `v2` of `g2`. Vertices of `g1` keep their
/// labels; the remaining vertices of `g2` follow in order.
pub fn coalesce(g1: &Graph, v1: usize, g2: &Graph, v2: usize) -> Result<Graph> {
    g1.check_vertex(v1)?;
    g2.check_vertex(v2)?;
    let n1 = g1.order();
    let map = |w: usize| match w.cmp(&v2) {
        std::cmp::Ordering::Equal => v1,
        std::cmp::Ordering::Less => n1 + w,
        std::cmp::Ordering::Greater => n1 + w - 1,
    };
    let edges = g1.edges().chain(g2.edges().map(|e| Edge::new(map(e.u), map(e.v))));
    Graph::from_edges(n1 + g2.order() - 1, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_form;

    #[test]
    fn cycles_and_completes() {
        assert_eq!(
            canonical_form(&build_cycle(3).unwrap()).unwrap(),
            canonical_form(&build_complete(3).unwrap()).unwrap()
        );
        assert_eq!(build_complete(4).unwrap().size(), 6);
        let c5 = build_cycle(5).unwrap();
        assert_eq!(c5.size(), 5);
        assert!(c5.degrees().iter().all(|&d| d == 2));
        assert!(build_cycle(2).is_err());
        assert!(build_complete(0).is_err());
        assert_eq!(build_complete(1).unwrap().order(), 1);
    }

    #[test]
    fn theta_specs() {
        let t = ThetaSpec::new([2, 1, 2]).unwrap();
        assert_eq!(t.lengths(), &[1, 2, 2]);
        assert_eq!((t.order(), t.size()), (4, 5));
        let g = build_theta(&t).unwrap();
        assert_eq!((g.order(), g.size()), (4, 5));
        let g = build_theta(&ThetaSpec::new([1, 2, 2, 2]).unwrap()).unwrap();
        assert_eq!((g.order(), g.size()), (5, 7));
        assert!(matches!(ThetaSpec::new([1, 1, 2]), Err(Error::InvalidTheta { .. })));
        assert!(matches!(ThetaSpec::new([2, 2]), Err(Error::InvalidTheta { .. })));
        assert!(matches!(ThetaSpec::new([0, 2, 2]), Err(Error::InvalidTheta { .. })));
        assert_eq!(t.to_string(), "θ(1,2,2)");
    }

    #[test]
    fn theta_222_is_k23() {
        let t = build_theta(&ThetaSpec::new([2, 2, 2]).unwrap()).unwrap();
        assert_eq!(t.size(), 6);
        let k23 = build_complete_bipartite(2, 3).unwrap();
        assert_eq!(canonical_form(&t).unwrap(), canonical_form(&k23).unwrap());
    }

    #[test]
    fn theta_enumeration_counts() {
        for t in 3..=5 {
            for max_order in 2..=9 {
                let got = ThetaSpec::enumerate(t, max_order);
                let mut brute = Vec::new();
                let mut idx = vec![1usize; t];
                loop {
                    if idx.windows(2).all(|w| w[0] <= w[1]) {
                        if let Ok(s) = ThetaSpec::new(idx.iter().copied()) {
                            if s.order() <= max_order {
                                brute.push(s);
                            }
                        }
                    }
                    let mut i = 0;
                    while i < t && idx[i] == max_order {
                        idx[i] = 1;
                        i += 1;
                    }
                    if i == t {
                        break;
                    }
                    idx[i] += 1;
                }
                brute.sort();
                let mut got_sorted = got.clone();
                got_sorted.sort();
                assert_eq!(got_sorted, brute, "t={t} max_order={max_order}");
            }
        }
    }

    #[test]
    fn attachments() {
        let base = ThetaSpec::new([2, 2, 3]).unwrap();
        // layout: [0,2,1], [0,3,1], [0,4,5,1]
        assert_eq!(theta_attachment(&base, 0, 1), None);
        assert_eq!(theta_attachment(&base, 0, 2), Some(Attachment::BranchAndPath));
        assert_eq!(theta_attachment(&base, 4, 5), Some(Attachment::SamePath));
        assert_eq!(theta_attachment(&base, 2, 5), Some(Attachment::AcrossPaths));
        assert!(build_theta_prime(&base, 0, 1, 2).is_err());
        let (g, a) = build_theta_prime(&base, 2, 3, 1).unwrap();
        assert_eq!(a, Attachment::AcrossPaths);
        assert_eq!(g.size(), g.order() + 2);
    }

    #[test]
    fn coalescence_counts() {
        let k3 = build_complete(3).unwrap();
        let bowtie = coalesce(&k3, 0, &k3, 2).unwrap();
        assert_eq!((bowtie.order(), bowtie.size()), (5, 6));
        let t = build_theta(&ThetaSpec::new([1, 2, 2]).unwrap()).unwrap();
        let g = coalesce(&t, 2, &t, 0).unwrap();
        assert_eq!((g.order(), g.size()), (7, 10));
        let k4 = build_complete(4).unwrap();
        let g = coalesce(&k4, 1, &k4, 3).unwrap();
        assert_eq!((g.order(), g.size()), (7, 12));
        assert!(coalesce(&k4, 4, &k4, 0).is_err());
    }
}
