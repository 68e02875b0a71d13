//! Extremal `k`-cactus recipes: block multisets whose coalescences attain
//! [`max_edges`], and their realisation up to isomorphism.
//!
//! Two lists are kept per `(n, k)`. [`stated_recipes`] transcribes the
//! extremal characterisation item by item as stated, copy counts included,
//! even where its arithmetic does not close. [`extremal_recipes`] is the working list:
//! the stated items with their arithmetic repaired, plus any block multiset
//! exhaustive search showed to be missing. Every deviation carries a
//! [`Revision`] so reports can surface it.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Serialize, Serializer};

use super::{build_complete, build_theta, coalesce, max_edges, theta_tilde, ThetaSpec};
use crate::error::{Error, Result};
use crate::graph::{canonical_form, CanonicalForm, Graph, CANON_MAX_ORDER};

/// Block type of a recipe.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Part {
    K1,
    K2,
    K3,
    K4,
    Theta(ThetaSpec),
    /// The two non-θ 2-connected 4-cacti of order 5 and size 7.
    ThetaTilde1,
    ThetaTilde2,
}

impl Part {
    fn theta(lengths: &[usize]) -> Part {
        Part::Theta(ThetaSpec::new(lengths.iter().copied()).expect("static spec is valid"))
    }

    pub fn graph(&self) -> Graph {
        match self {
            Part::K1 => build_complete(1),
            Part::K2 => build_complete(2),
            Part::K3 => build_complete(3),
            Part::K4 => build_complete(4),
            Part::Theta(spec) => build_theta(spec),
            Part::ThetaTilde1 => Ok(theta_tilde(1)),
            Part::ThetaTilde2 => Ok(theta_tilde(2)),
        }
        .expect("part graphs are valid")
    }

    pub fn order(&self) -> usize {
        match self {
            Part::K1 => 1,
            Part::K2 => 2,
            Part::K3 => 3,
            Part::K4 => 4,
            Part::Theta(spec) => spec.order(),
            Part::ThetaTilde1 | Part::ThetaTilde2 => 5,
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Part::K1 => 0,
            Part::K2 => 1,
            Part::K3 => 3,
            Part::K4 => 6,
            Part::Theta(spec) => spec.size(),
            Part::ThetaTilde1 | Part::ThetaTilde2 => 7,
        }
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Part::K1 => f.write_str("K1"),
            Part::K2 => f.write_str("K2"),
            Part::K3 => f.write_str("K3"),
            Part::K4 => f.write_str("K4"),
            Part::Theta(spec) => write!(f, "{spec}"),
            Part::ThetaTilde1 => f.write_str("θ̃1"),
            Part::ThetaTilde2 => f.write_str("θ̃2"),
        }
    }
}

impl Serialize for Part {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RevisionKind {
    /// A stated item whose copy count or block was changed.
    Corrected,
    /// A block multiset missing from the stated characterisation.
    Added,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Revision {
    pub kind: RevisionKind,
    pub note: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalRecipe {
    pub n: usize,
    pub k: usize,
    /// Characterization item this recipe belongs to, e.g. `"k2:n%3=2"`.
    pub item: &'static str,
    /// `(part, copies)` with positive copy counts.
    pub parts: Vec<(Part, usize)>,
    pub revision: Option<Revision>,
}

impl ExtremalRecipe {
    pub fn part_list(&self) -> Vec<Part> {
        self.parts
            .iter()
            .flat_map(|(p, c)| std::iter::repeat_n(p.clone(), *c))
            .collect()
    }

    /// `Σ|V(part)| - (parts - 1)`.
    pub fn realized_order(&self) -> usize {
        let parts = self.part_list();
        parts.iter().map(Part::order).sum::<usize>() + 1 - parts.len()
    }

    pub fn realized_size(&self) -> usize {
        self.parts.iter().map(|(p, c)| p.size() * c).sum()
    }
}

impl fmt::Display for ExtremalRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (p, c)) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}×{c}")?;
        }
        f.write_str("}")
    }
}

/// One item of the extremal characterisation, transcribed literally.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatedRecipe {
    pub n: usize,
    pub k: usize,
    pub item: &'static str,
    /// Stated copy-count expression, e.g. `"(n-7)/3"`.
    pub copies_expr: String,
    /// `None` when the expression is not a non-negative integer at this `n`.
    pub copies: Option<usize>,
    pub base: Part,
    pub extras: Vec<(Part, usize)>,
}

impl StatedRecipe {
    /// Order and size of a coalescence of the stated parts, when the copy
    /// count is an integer.
    pub fn realized(&self) -> Option<(usize, usize)> {
        let copies = self.copies?;
        let blocks = copies + self.extras.iter().map(|(_, c)| c).sum::<usize>();
        let vertices = copies * self.base.order() + self.extras.iter().map(|(p, c)| p.order() * c).sum::<usize>();
        let edges = copies * self.base.size() + self.extras.iter().map(|(p, c)| p.size() * c).sum::<usize>();
        Some((vertices + 1 - blocks.max(1), edges))
    }
}

enum Stated {
    Same,
    Divisor(usize),
    Extras(Vec<(Part, usize)>),
    Absent,
}

struct Item {
    label: &'static str,
    base: Part,
    offset: usize,
    divisor: usize,
    extras: Vec<(Part, usize)>,
    stated: Stated,
    note: &'static str,
}

fn item(label: &'static str, base: Part, offset: usize, divisor: usize, extras: Vec<(Part, usize)>) -> Item {
    Item {
        label,
        base,
        offset,
        divisor,
        extras,
        stated: Stated::Same,
        note: "",
    }
}

/// Items that apply to order `n` (residue class and `n >= offset`).
fn items(n: usize, k: usize) -> Result<Vec<Item>> {
    let t122 = Part::theta(&[1, 2, 2]);
    let t1222 = Part::theta(&[1, 2, 2, 2]);
    let all = match k {
        1 => vec![
            item("k1:n%2=1", Part::K3, 1, 2, vec![]),
            item("k1:n%2=0", Part::K3, 2, 2, vec![(Part::K2, 1)]),
        ],
        2 => vec![
            item("k2:n%3=0", t122.clone(), 3, 3, vec![(Part::K3, 1)]),
            item("k2:n%3=1", t122.clone(), 1, 3, vec![]),
            item("k2:n%3=2", t122.clone(), 2, 3, vec![(Part::K2, 1)]),
            item("k2:n%3=2", t122.clone(), 5, 3, vec![(Part::theta(&[1, 2, 3]), 1)]),
            item("k2:n%3=2", t122.clone(), 5, 3, vec![(Part::K3, 2)]),
            Item {
                stated: Stated::Absent,
                note: "θ(2,2,2) = K(2,3) has 5 vertices and 6 edges and is a 2-cactus; \
                       exhaustive search finds it among the extremal graphs for n ≡ 2 (mod 3), n >= 5",
                ..item("k2:n%3=2", t122.clone(), 5, 3, vec![(Part::theta(&[2, 2, 2]), 1)])
            },
        ],
        3 => vec![
            item("k3:n%4=0", t1222.clone(), 4, 4, vec![(t122.clone(), 1)]),
            item("k3:n%4=1", t1222.clone(), 1, 4, vec![]),
            item("k3:n%4=2", t1222.clone(), 2, 4, vec![(Part::K2, 1)]),
            Item {
                stated: Stated::Extras(vec![(Part::theta(&[2, 2, 3]), 1)]),
                note: "θ(2,2,3) has 7 edges on 6 vertices, one short of the bound; \
                       θ(1,2,2,3) (6 vertices, 8 edges) takes its place",
                ..item("k3:n%4=2", t1222.clone(), 6, 4, vec![(Part::theta(&[1, 2, 2, 3]), 1)])
            },
            item("k3:n%4=2", t1222.clone(), 6, 4, vec![(Part::theta(&[2, 2, 2, 2]), 1)]),
            item("k3:n%4=2", t1222.clone(), 6, 4, vec![(t122.clone(), 1), (Part::K3, 1)]),
            item("k3:n%4=3", t1222.clone(), 3, 4, vec![(Part::K3, 1)]),
            Item {
                stated: Stated::Divisor(3),
                note: "the copy count (n-7)/3 violates the coalescence vertex identity; \
                       a copies of θ(1,2,2,2) plus two θ(1,2,2) have 4a + 7 vertices, so a = (n-7)/4",
                ..item("k3:n%4=3", t1222.clone(), 7, 4, vec![(t122.clone(), 2)])
            },
        ],
        4 => vec![
            item("k4:n%3=0", Part::K4, 3, 3, vec![(Part::K3, 1)]),
            item("k4:n%3=0", Part::K4, 6, 3, vec![(Part::theta(&[1, 2, 2, 2, 2]), 1)]),
            item("k4:n%3=1", Part::K4, 1, 3, vec![]),
            item("k4:n%3=2", Part::K4, 2, 3, vec![(Part::K2, 1)]),
            item("k4:n%3=2", Part::K4, 5, 3, vec![(t1222.clone(), 1)]),
            item("k4:n%3=2", Part::K4, 5, 3, vec![(Part::ThetaTilde1, 1)]),
            item("k4:n%3=2", Part::K4, 5, 3, vec![(Part::ThetaTilde2, 1)]),
        ],
        _ => return Err(Error::UnsupportedK { k, expected: "1..=4" }),
    };
    let modulus = match k {
        1 => 2,
        2 | 4 => 3,
        _ => 4,
    };
    Ok(all
        .into_iter()
        .filter(|it| n >= it.offset && n % modulus == it.offset % modulus)
        .collect())
}

fn parts_of(base: &Part, copies: usize, extras: &[(Part, usize)]) -> Vec<(Part, usize)> {
    let mut parts = Vec::new();
    if copies > 0 {
        parts.push((base.clone(), copies));
    }
    parts.extend(extras.iter().cloned());
    parts
}

/// Working extremal recipes for order `n` and `k` in `1..=4`. Every recipe
/// realises exactly [`max_edges`]`(n, k)` edges on `n` vertices.
pub fn extremal_recipes(n: usize, k: usize) -> Result<Vec<ExtremalRecipe>> {
    let bound = max_edges(n, k)?;
    if n == 1 {
        return Ok(vec![ExtremalRecipe {
            n,
            k,
            item: "K1",
            parts: vec![(Part::K1, 1)],
            revision: None,
        }]);
    }
    let mut out = Vec::new();
    for it in items(n, k)? {
        let copies = (n - it.offset) / it.divisor;
        let revision = match it.stated {
            Stated::Same => None,
            Stated::Divisor(_) | Stated::Extras(_) => Some(Revision {
                kind: RevisionKind::Corrected,
                note: it.note,
            }),
            Stated::Absent => Some(Revision {
                kind: RevisionKind::Added,
                note: it.note,
            }),
        };
        let recipe = ExtremalRecipe {
            n,
            k,
            item: it.label,
            parts: parts_of(&it.base, copies, &it.extras),
            revision,
        };
        debug_assert_eq!(recipe.realized_order(), n, "{recipe}");
        debug_assert_eq!(recipe.realized_size(), bound, "{recipe}");
        out.push(recipe);
    }
    Ok(out)
}

/// The extremal characterisation as stated, item by item.
pub fn stated_recipes(n: usize, k: usize) -> Result<Vec<StatedRecipe>> {
    max_edges(n, k)?;
    if n == 1 {
        return Ok(vec![StatedRecipe {
            n,
            k,
            item: "K1",
            copies_expr: "1".into(),
            copies: Some(1),
            base: Part::K1,
            extras: vec![],
        }]);
    }
    let mut out = Vec::new();
    for it in items(n, k)? {
        let (divisor, extras) = match it.stated {
            Stated::Absent => continue,
            Stated::Same => (it.divisor, it.extras),
            Stated::Divisor(d) => (d, it.extras),
            Stated::Extras(e) => (it.divisor, e),
        };
        let raw = n - it.offset;
        let copies = raw.is_multiple_of(divisor).then_some(raw / divisor);
        out.push(StatedRecipe {
            n,
            k,
            item: it.label,
            copies_expr: format!("(n-{})/{}", it.offset, divisor),
            copies,
            base: it.base,
            extras,
        });
    }
    Ok(out)
}

impl StatedRecipe {
    /// The stated item as a recipe, when its copy count is an integer.
    pub fn to_recipe(&self) -> Option<ExtremalRecipe> {
        let copies = self.copies?;
        Some(ExtremalRecipe {
            n: self.n,
            k: self.k,
            item: self.item,
            parts: parts_of(&self.base, copies, &self.extras),
            revision: None,
        })
    }
}

/// One realisation: all parts coalesced at their vertex 0.
pub fn realize_recipe(r: &ExtremalRecipe) -> Result<Graph> {
    let mut parts = r.part_list().into_iter();
    let mut g = parts.next().map(|p| p.graph()).unwrap_or_else(|| Part::K1.graph());
    for p in parts {
        g = coalesce(&g, 0, &p.graph(), 0)?;
    }
    Ok(g)
}

/// Every graph whose block multiset is the recipe's parts, one per
/// isomorphism class, sorted by canonical form.
pub fn realize_recipe_all(r: &ExtremalRecipe) -> Result<Vec<Graph>> {
    let order = r.realized_order();
    if order > CANON_MAX_ORDER {
        return Err(Error::UnsupportedOrder {
            n: order,
            max: CANON_MAX_ORDER,
            what: "recipe realisation",
        });
    }
    let kinds: Vec<(Graph, usize)> = r.parts.iter().map(|(p, c)| (p.graph(), *c)).collect();
    let mut layer: BTreeSet<(CanonicalForm, Vec<usize>)> = BTreeSet::new();
    for (i, (g, _)) in kinds.iter().enumerate() {
        let mut left: Vec<usize> = kinds.iter().map(|(_, c)| *c).collect();
        left[i] -= 1;
        layer.insert((canonical_form(g)?, left));
    }
    let total: usize = kinds.iter().map(|(_, c)| c).sum();
    for _ in 1..total {
        let mut next = BTreeSet::new();
        for (cf, left) in &layer {
            let g = cf.to_graph();
            for (j, (part, _)) in kinds.iter().enumerate() {
                if left[j] == 0 {
                    continue;
                }
                let mut rest = left.clone();
                rest[j] -= 1;
                for a in 0..g.order() {
                    for b in 0..part.order() {
                        let h = coalesce(&g, a, part, b)?;
                        next.insert((canonical_form(&h)?, rest.clone()));
                    }
                }
            }
        }
        layer = next;
    }
    let graphs: BTreeMap<CanonicalForm, Graph> = layer.into_iter().map(|(cf, _)| (cf.clone(), cf.to_graph())).collect();
    Ok(graphs.into_values().collect())
}
