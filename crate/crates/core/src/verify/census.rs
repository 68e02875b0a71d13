use std::collections::{BTreeMap, BTreeSet};

use crate::cycles::CycleOracle;
use crate::decompose::is_two_connected;
use crate::error::{Error, Result};
use crate::graph::{bit, canonical_form, write_graph6, CanonicalForm, Graph, CANON_MAX_ORDER};

/// Largest order the built-in enumerator supports.
pub const ENUM_MAX_ORDER: usize = 8;

/// All graphs of order `1..=max_n`, level by level, each level one canonical
/// representative per isomorphism class sorted by canonical form.
fn levels(max_n: usize) -> Result<Vec<Vec<Graph>>> {
    if max_n == 0 || max_n > ENUM_MAX_ORDER {
        return Err(Error::UnsupportedOrder {
            n: max_n,
            max: ENUM_MAX_ORDER,
            what: "enumeration",
        });
    }
    let mut out = vec![vec![Graph::empty(1)?]];
    for m in 1..max_n {
        let mut seen: BTreeSet<CanonicalForm> = BTreeSet::new();
        for g in &out[m - 1] {
            for mask in 0..bit(m) {
                let mut rows: Vec<u64> = (0..m).map(|v| g.neighbor_mask(v) | ((mask >> v) & 1) << m).collect();
                rows.push(mask);
                seen.insert(canonical_form(&Graph::from_rows(m + 1, rows))?);
            }
        }
        out.push(seen.iter().map(CanonicalForm::to_graph).collect());
    }
    Ok(out)
}

/// One representative per isomorphism class of graphs of order `n`, built by
/// vertex augmentation with canonical deduplication.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    let mut graphs = levels(n)?.pop().expect("at least one level");
    if connected_only {
        graphs.retain(Graph::is_connected);
    }
    Ok(graphs)
}

#[derive(Debug, Clone)]
pub struct CensusEntry {
    pub graph: Graph,
    pub graph6: String,
    pub connected: bool,
    pub two_connected: bool,
    /// Present for connected graphs.
    pub cactus_number: Option<u64>,
}

impl CensusEntry {
    fn new(graph: Graph, oracle: &CycleOracle) -> Result<Self> {
        let connected = graph.is_connected();
        let cactus_number = if connected {
            Some(oracle.cactus_number(&graph)?)
        } else {
            None
        };
        Ok(CensusEntry {
            graph6: write_graph6(&graph),
            two_connected: is_two_connected(&graph),
            graph,
            connected,
            cactus_number,
        })
    }

    /// Connected with cactus number at most `k`.
    pub fn is_k_cactus(&self, k: u64) -> bool {
        self.cactus_number.is_some_and(|c| c <= k)
    }
}

/// Graphs grouped by order with their cycle data precomputed.
#[derive(Debug, Clone)]
pub struct Census {
    by_order: BTreeMap<usize, Vec<CensusEntry>>,
    exhaustive: bool,
}

impl Census {
    /// Every graph of order `1..=max_n`.
    pub fn enumerate(max_n: usize, oracle: &CycleOracle) -> Result<Census> {
        let mut by_order = BTreeMap::new();
        for (i, level) in levels(max_n)?.into_iter().enumerate() {
            let entries = level
                .into_iter()
                .map(|g| CensusEntry::new(g, oracle))
                .collect::<Result<_>>()?;
            by_order.insert(i + 1, entries);
        }
        Ok(Census {
            by_order,
            exhaustive: true,
        })
    }

    /// A census over externally supplied graphs. Isomorphic duplicates are
    /// dropped where canonical forms are available. Claims that need
    /// completeness only check the direction an incomplete list can support.
    pub fn from_graphs(graphs: impl IntoIterator<Item = Graph>, oracle: &CycleOracle) -> Result<Census> {
        let mut seen = BTreeSet::new();
        let mut by_order: BTreeMap<usize, Vec<CensusEntry>> = BTreeMap::new();
        for g in graphs {
            let key = if g.order() <= CANON_MAX_ORDER {
                canonical_form(&g)?.as_str().to_owned()
            } else {
                write_graph6(&g)
            };
            if seen.insert(key) {
                by_order
                    .entry(g.order())
                    .or_default()
                    .push(CensusEntry::new(g, oracle)?);
            }
        }
        Ok(Census {
            by_order,
            exhaustive: false,
        })
    }

    pub fn is_exhaustive(&self) -> bool {
        self.exhaustive
    }

    pub fn orders(&self) -> impl Iterator<Item = usize> + '_ {
        self.by_order.keys().copied()
    }

    pub fn max_order(&self) -> usize {
        self.by_order.keys().next_back().copied().unwrap_or(0)
    }

    pub fn graphs(&self, n: usize) -> &[CensusEntry] {
        self.by_order.get(&n).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Entries of order at most `n_max`, by increasing order.
    pub fn up_to(&self, n_max: usize) -> impl Iterator<Item = &CensusEntry> {
        self.by_order.range(..=n_max).flat_map(|(_, v)| v.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let all: Vec<usize> = (1..=5).map(|n| enumerate_graphs(n, false).unwrap().len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34]);
        let connected: Vec<usize> = (1..=5).map(|n| enumerate_graphs(n, true).unwrap().len()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21]);
        assert!(enumerate_graphs(0, false).is_err());
        assert!(matches!(
            enumerate_graphs(9, true),
            Err(Error::UnsupportedOrder { n: 9, .. })
        ));
    }

    #[test]
    fn external_census_dedups() {
        let oracle = CycleOracle::default();
        let p3a = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let p3b = Graph::from_edges(3, [(0, 2), (1, 2)]).unwrap();
        let c = Census::from_graphs([p3a, p3b], &oracle).unwrap();
        assert_eq!(c.graphs(3).len(), 1);
        assert!(!c.is_exhaustive());
        assert_eq!(c.graphs(3)[0].cactus_number, Some(0));
    }
}
