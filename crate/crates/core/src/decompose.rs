//! Block decomposition, 2-connectivity and ear decompositions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// A block in the labels of its parent graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Block {
    pub vertices: Vec<usize>,
    pub edges: Vec<Edge>,
}

impl Block {
    /// The block as a standalone graph; `vertices[i]` becomes vertex `i`.
    pub fn to_graph(&self) -> Graph {
        let mut pos = std::collections::HashMap::with_capacity(self.vertices.len());
        for (i, &v) in self.vertices.iter().enumerate() {
            pos.insert(v, i);
        }
        Graph::from_edges(self.vertices.len(), self.edges.iter().map(|e| (pos[&e.u], pos[&e.v])))
            .expect("block edges are simple and within the block")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    /// Ordered by vertex list, hence by smallest contained vertex first.
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<usize>,
}

struct LowLink<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    clock: usize,
    stack: Vec<Edge>,
    blocks: Vec<Block>,
    is_cut: Vec<bool>,
}

const UNSEEN: usize = usize::MAX;

impl LowLink<'_> {
    fn dfs(&mut self, v: usize, parent: Option<usize>) {
        self.disc[v] = self.clock;
        self.low[v] = self.clock;
        self.clock += 1;
        let mut children = 0;
        for w in self.g.neighbors(v) {
            if self.disc[w] == UNSEEN {
                children += 1;
                self.stack.push(Edge::new(v, w));
                self.dfs(w, Some(v));
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] >= self.disc[v] {
                    if parent.is_some() || children > 1 {
                        self.is_cut[v] = true;
                    }
                    self.pop_block(Edge::new(v, w));
                }
            } else if Some(w) != parent && self.disc[w] < self.disc[v] {
                self.stack.push(Edge::new(v, w));
                self.low[v] = self.low[v].min(self.disc[w]);
            }
        }
    }

    fn pop_block(&mut self, until: Edge) {
        let mut edges = Vec::new();
        while let Some(e) = self.stack.pop() {
            edges.push(e);
            if e == until {
                break;
            }
        }
        let mut vertices: Vec<usize> = edges.iter().flat_map(|e| [e.u, e.v]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        edges.sort_unstable();
        self.blocks.push(Block { vertices, edges });
    }
}

/// Blocks of a connected graph. `K1` has no blocks with edges and yields an
/// empty list.
pub fn blocks(g: &Graph) -> Result<BlockDecomposition> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = g.order();
    let mut ll = LowLink {
        g,
        disc: vec![UNSEEN; n],
        low: vec![UNSEEN; n],
        clock: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
        is_cut: vec![false; n],
    };
    ll.dfs(0, None);
    let mut blocks = ll.blocks;
    blocks.sort();
    let cut_vertices = (0..n).filter(|&v| ll.is_cut[v]).collect();
    Ok(BlockDecomposition { blocks, cut_vertices })
}

/// Connected, at least three vertices, no cut vertex.
pub fn is_two_connected(g: &Graph) -> bool {
    if g.order() < 3 || !g.is_connected() {
        return false;
    }
    blocks(g).map(|d| d.cut_vertices.is_empty()).unwrap_or(false)
}

/// A cycle followed by ears, each given as a vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EarDecomposition {
    /// The initial cycle, without repeating its first vertex.
    pub cycle: Vec<usize>,
    /// Paths whose end vertices lie in the union of the earlier pieces and
    /// whose internal vertices are new.
    pub ears: Vec<Vec<usize>>,
}

impl EarDecomposition {
    pub fn ear_count(&self) -> usize {
        self.ears.len()
    }

    /// Checks that the pieces are a valid ear decomposition of `g`.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        let n = g.order();
        let mut used = std::collections::BTreeSet::new();
        let mut covered = vec![false; n];
        let take = |a: usize, b: usize, used: &mut std::collections::BTreeSet<Edge>| {
            let e = Edge::new(a, b);
            if !g.has_edge(a, b) {
                return Err(format!("piece uses non-edge {e}"));
            }
            if !used.insert(e) {
                return Err(format!("edge {e} used twice"));
            }
            Ok(())
        };
        if self.cycle.len() < 3 {
            return Err("initial cycle shorter than 3".into());
        }
        for (i, &v) in self.cycle.iter().enumerate() {
            if v >= n || covered[v] {
                return Err(format!("cycle repeats or leaves the graph at {v}"));
            }
            covered[v] = true;
            take(v, self.cycle[(i + 1) % self.cycle.len()], &mut used)?;
        }
        for (idx, ear) in self.ears.iter().enumerate() {
            if ear.len() < 2 {
                return Err(format!("ear {idx} is trivial"));
            }
            let (first, last) = (ear[0], ear[ear.len() - 1]);
            if first == last || first >= n || last >= n || !covered[first] || !covered[last] {
                return Err(format!("ear {idx} has bad end vertices"));
            }
            for &v in &ear[1..ear.len() - 1] {
                if v >= n || covered[v] {
                    return Err(format!("ear {idx} reuses internal vertex {v}"));
                }
                covered[v] = true;
            }
            for w in ear.windows(2) {
                take(w[0], w[1], &mut used)?;
            }
        }
        if covered.iter().any(|c| !c) {
            return Err("some vertex is not covered".into());
        }
        if used.len() != g.size() {
            return Err(format!("{} of {} edges covered", used.len(), g.size()));
        }
        Ok(())
    }
}

/// Ear decomposition of a 2-connected graph by DFS chain decomposition: the
/// DFS-first fundamental cycle is the initial piece, and every further back
/// edge opens a chain that climbs the tree until it meets covered territory.
pub fn ear_decomposition(g: &Graph) -> Result<EarDecomposition> {
    if !is_two_connected(g) {
        return Err(Error::NotTwoConnected);
    }
    let n = g.order();
    let mut disc = vec![UNSEEN; n];
    let mut parent = vec![UNSEEN; n];
    let mut preorder = Vec::with_capacity(n);
    fn dfs(g: &Graph, v: usize, disc: &mut [usize], parent: &mut [usize], preorder: &mut Vec<usize>) {
        disc[v] = preorder.len();
        preorder.push(v);
        for w in g.neighbors(v) {
            if disc[w] == UNSEEN {
                parent[w] = v;
                dfs(g, w, disc, parent, preorder);
            }
        }
    }
    dfs(g, 0, &mut disc, &mut parent, &mut preorder);

    let mut visited = vec![false; n];
    let mut chains: Vec<Vec<usize>> = Vec::new();
    for &v in &preorder {
        let mut down: Vec<usize> = g
            .neighbors(v)
            .filter(|&w| disc[w] > disc[v] && parent[w] != v)
            .collect();
        down.sort_by_key(|&w| disc[w]);
        for w in down {
            visited[v] = true;
            let mut chain = vec![v];
            let mut x = w;
            loop {
                chain.push(x);
                if visited[x] {
                    break;
                }
                visited[x] = true;
                x = parent[x];
            }
            chains.push(chain);
        }
    }

    let mut chains = chains.into_iter();
    let mut cycle = chains.next().ok_or(Error::NotTwoConnected)?;
    if cycle.first() != cycle.last() {
        return Err(Error::NotTwoConnected);
    }
    cycle.pop();
    let ears: Vec<Vec<usize>> = chains.collect();
    let dec = EarDecomposition { cycle, ears };
    debug_assert!(dec.validate(g).is_ok(), "{:?}", dec.validate(g));
    Ok(dec)
}

/// Adds a path of `len` edges from `u` to `v` through `len - 1` new vertices
/// labelled `n, n+1, ...`.
pub fn add_ear(g: &Graph, u: usize, v: usize, len: usize) -> Result<Graph> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::InvalidArgument("ear end vertices must differ".into()));
    }
    if len == 0 {
        return Err(Error::InvalidArgument("ear length must be positive".into()));
    }
    if len == 1 && g.has_edge(u, v) {
        return Err(Error::DuplicateEdge(Edge::new(u, v)));
    }
    let n = g.order();
    let mut edges: Vec<Edge> = g.edges().collect();
    let mut prev = u;
    for i in 0..len - 1 {
        edges.push(Edge::new(prev, n + i));
        prev = n + i;
    }
    edges.push(Edge::new(prev, v));
    Graph::from_edges(n + len - 1, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build_complete, build_cycle, build_theta, ThetaSpec};
    use crate::graph::canonical_form;

    fn bowtie() -> Graph {
        Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap()
    }

    #[test]
    fn bowtie_blocks() {
        let d = blocks(&bowtie()).unwrap();
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.cut_vertices, vec![0]);
        assert_eq!(d.blocks[0].vertices, vec![0, 1, 2]);
        assert_eq!(d.blocks[1].vertices, vec![0, 3, 4]);
    }

    #[test]
    fn path_blocks() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let d = blocks(&p3).unwrap();
        assert_eq!(d.blocks.len(), 2);
        assert!(d.blocks.iter().all(|b| b.edges.len() == 1));
        assert_eq!(d.cut_vertices, vec![1]);
    }

    #[test]
    fn theta_is_one_block() {
        let t = build_theta(&ThetaSpec::new([1, 2, 2]).unwrap()).unwrap();
        let d = blocks(&t).unwrap();
        assert_eq!(d.blocks.len(), 1);
        assert!(d.cut_vertices.is_empty());
        assert_eq!(d.blocks[0].to_graph(), t);
    }

    #[test]
    fn blocks_reject_disconnected() {
        assert_eq!(blocks(&Graph::empty(2).unwrap()), Err(Error::NotConnected));
        assert!(blocks(&Graph::empty(1).unwrap()).unwrap().blocks.is_empty());
    }

    #[test]
    fn root_cut_vertex() {
        // the DFS root 0 is the centre of a star
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(blocks(&star).unwrap().cut_vertices, vec![0]);
    }

    #[test]
    fn two_connectivity() {
        assert!(is_two_connected(&build_complete(3).unwrap()));
        assert!(!is_two_connected(&bowtie()));
        assert!(!is_two_connected(&build_complete(2).unwrap()));
        assert!(!is_two_connected(&Graph::empty(0).unwrap()));
    }

    #[test]
    fn ear_decompositions() {
        let c5 = build_cycle(5).unwrap();
        let d = ear_decomposition(&c5).unwrap();
        assert_eq!(d.cycle.len(), 5);
        assert!(d.ears.is_empty());

        let t = build_theta(&ThetaSpec::new([1, 2, 2]).unwrap()).unwrap();
        let d = ear_decomposition(&t).unwrap();
        assert!(d.validate(&t).is_ok());
        assert_eq!(d.ear_count(), 1);

        let k4 = build_complete(4).unwrap();
        let d = ear_decomposition(&k4).unwrap();
        assert!(d.validate(&k4).is_ok());
        assert_eq!(d.ear_count(), 2);

        assert_eq!(ear_decomposition(&bowtie()), Err(Error::NotTwoConnected));
    }

    #[test]
    fn validate_catches_bad_pieces() {
        let k4 = build_complete(4).unwrap();
        let bad = EarDecomposition {
            cycle: vec![0, 1, 2],
            ears: vec![vec![0, 3, 1]],
        };
        assert!(bad.validate(&k4).is_err());
        let reused = EarDecomposition {
            cycle: vec![0, 1, 2, 3],
            ears: vec![vec![0, 1]],
        };
        assert!(reused.validate(&k4).is_err());
    }

    #[test]
    fn adding_ears() {
        // C3 plus a length-2 ear across an edge is θ(1,2,2)
        let c3 = build_cycle(3).unwrap();
        let g = add_ear(&c3, 0, 1, 2).unwrap();
        assert_eq!((g.order(), g.size()), (4, 5));
        let t = build_theta(&ThetaSpec::new([1, 2, 2]).unwrap()).unwrap();
        assert_eq!(canonical_form(&g).unwrap(), canonical_form(&t).unwrap());
        assert!(is_two_connected(&g));

        // C4 plus a length-2 ear between adjacent vertices: 5 vertices, 6 edges,
        // a θ(1,2,3)
        let c4 = build_cycle(4).unwrap();
        let g = add_ear(&c4, 0, 1, 2).unwrap();
        assert_eq!((g.order(), g.size()), (5, 6));
        let t = build_theta(&ThetaSpec::new([1, 2, 3]).unwrap()).unwrap();
        assert_eq!(canonical_form(&g).unwrap(), canonical_form(&t).unwrap());

        assert!(add_ear(&c3, 0, 0, 2).is_err());
        assert_eq!(add_ear(&c3, 0, 1, 1), Err(Error::DuplicateEdge(Edge::new(0, 1))));
        assert!(add_ear(&c4, 0, 2, 1).is_ok());
    }
}
