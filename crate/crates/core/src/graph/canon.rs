//! Canonical forms for graphs of order at most 10.
//!
//! The certificate of a labelling is the upper-triangle adjacency bit string
//! (graph6 bit order) read as an integer; the canonical form is the minimum
//! certificate over the leaves of an individualisation/refinement search tree.
//! The tree starts from the degree partition, refines to an equitable
//! partition at every node, and skips children that an already discovered
//! automorphism maps onto an explored sibling.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{bit, parse_graph6, write_graph6, Graph};
use crate::error::{Error, Result};

/// Largest order accepted by [`canonical_form`].
pub const CANON_MAX_ORDER: usize = 10;

/// Isomorphism-class label: the graph6 encoding of the canonically relabelled
/// graph. Equal labels iff isomorphic graphs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn to_graph(&self) -> Graph {
        parse_graph6(&self.0).expect("canonical forms are valid graph6")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

type Partition = Vec<Vec<usize>>;

fn certificate(g: &Graph, order: &[usize]) -> u64 {
    let mut key = 0u64;
    for j in 1..order.len() {
        let row = g.neighbor_mask(order[j]);
        for &vi in &order[..j] {
            key = (key << 1) | ((row >> vi) & 1);
        }
    }
    key
}

/// Refines `cells` until every cell is equitable with respect to every other.
/// New cells are ordered by neighbour count, so the result is
/// relabelling-equivariant.
fn refine(g: &Graph, cells: &mut Partition) {
    'outer: loop {
        for s in 0..cells.len() {
            let splitter: u64 = cells[s].iter().fold(0, |m, &v| m | bit(v));
            for x in 0..cells.len() {
                if cells[x].len() < 2 {
                    continue;
                }
                let count = |v: usize| (g.neighbor_mask(v) & splitter).count_ones();
                let first = count(cells[x][0]);
                if cells[x].iter().all(|&v| count(v) == first) {
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cells[x].iter().map(|&v| (count(v), v)).collect();
                keyed.sort_unstable();
                let mut parts: Vec<Vec<usize>> = Vec::new();
                let mut last = None;
                for (c, v) in keyed {
                    if last != Some(c) {
                        parts.push(Vec::new());
                        last = Some(c);
                    }
                    parts.last_mut().unwrap().push(v);
                }
                cells.splice(x..=x, parts);
                continue 'outer;
            }
        }
        break;
    }
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(u64, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

const MAX_STORED_AUTOMORPHISMS: usize = 256;

impl Search<'_> {
    fn visit(&mut self, cells: Partition, path: &mut Vec<usize>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let key = certificate(self.g, &order);
            match &self.best {
                Some((best_key, best_order)) if key == *best_key => {
                    if self.automorphisms.len() < MAX_STORED_AUTOMORPHISMS {
                        let mut gamma = vec![0; order.len()];
                        for (a, b) in best_order.iter().zip(&order) {
                            gamma[*a] = *b;
                        }
                        self.automorphisms.push(gamma);
                    }
                }
                Some((best_key, _)) if key > *best_key => {}
                _ => self.best = Some((key, order)),
            }
            return;
        };

        let mut explored: Vec<usize> = Vec::new();
        for &w in &cells[target] {
            if !explored.is_empty() && self.equivalent_to_explored(w, &explored, path) {
                continue;
            }
            explored.push(w);
            let mut child = cells.clone();
            let rest: Vec<usize> = child[target].iter().copied().filter(|&v| v != w).collect();
            child.splice(target..=target, [vec![w], rest]);
            refine(self.g, &mut child);
            path.push(w);
            self.visit(child, path);
            path.pop();
        }
    }

    /// Whether `w` shares an orbit with an explored vertex under the group
    /// generated by stored automorphisms fixing `path` pointwise.
    fn equivalent_to_explored(&self, w: usize, explored: &[usize], path: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if path.iter().any(|&v| gamma[v] != v) {
                continue;
            }
            any = true;
            for (v, &w) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, w);
        explored.iter().any(|&e| find(&mut parent, e) == root)
    }
}

fn check_order(g: &Graph) -> Result<()> {
    if g.order() > CANON_MAX_ORDER {
        Err(Error::UnsupportedOrder {
            n: g.order(),
            max: CANON_MAX_ORDER,
            what: "canonical forms",
        })
    } else {
        Ok(())
    }
}

/// Canonical vertex order: position `i` of the canonical graph holds
/// vertex `labeling[i]` of `g`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    check_order(g)?;
    let n = g.order();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut cells = vec![(0..n).collect::<Vec<_>>()];
    refine(g, &mut cells);
    let mut search = Search {
        g,
        best: None,
        automorphisms: Vec::new(),
    };
    search.visit(cells, &mut Vec::new());
    Ok(search.best.expect("search tree has at least one leaf").1)
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let order = canonical_labeling(g)?;
    let mut perm = vec![0; g.order()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    let canon = g.relabel(&perm)?;
    Ok(CanonicalForm(write_graph6(&canon)))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.size() != b.size() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn relabelled_cycle_has_same_form() {
        let c5 = cycle(5);
        let other = c5.relabel(&[3, 0, 4, 1, 2]).unwrap();
        assert_ne!(c5, other);
        assert_eq!(canonical_form(&c5).unwrap(), canonical_form(&other).unwrap());
    }

    #[test]
    fn path_labelings_agree() {
        let a = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, [(0, 2), (2, 1)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn distinguishes_k4_from_diamond() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let diamond = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_ne!(canonical_form(&k4).unwrap(), canonical_form(&diamond).unwrap());
    }

    #[test]
    fn canonical_graph_is_isomorphic_copy() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap();
        let cf = canonical_form(&g).unwrap();
        let h = cf.to_graph();
        assert_eq!(h.size(), g.size());
        assert_eq!(canonical_form(&h).unwrap(), cf);
    }

    #[test]
    fn rejects_large_orders() {
        let g = Graph::empty(11).unwrap();
        assert!(matches!(canonical_form(&g), Err(Error::UnsupportedOrder { n: 11, .. })));
        assert!(canonical_form(&Graph::empty(10).unwrap()).is_ok());
    }
}
