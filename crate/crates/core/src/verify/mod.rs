//! Exhaustive small-order checks of the bounds, the structural
//! characterization and the extremal families, producing JSON reports.

mod census;
mod report;

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::classify::{classify_block, structural_k_cactus, BlockKind, EndpointRule};
use crate::construct::{
    build_complete, build_theta, extremal_recipes, max_edges, max_edges_two_connected, realize_recipe,
    realize_recipe_all, stated_recipes, theta_tilde, StatedRecipe, ThetaSpec, THETA_TILDE_GRAPH6,
};
use crate::cycles::CycleOracle;
use crate::decompose::is_two_connected;
use crate::error::{Error, Result};
use crate::graph::{canonical_form, parse_graph6, write_graph6, Graph, CANON_MAX_ORDER};

pub use census::{enumerate_graphs, Census, CensusEntry, ENUM_MAX_ORDER};
pub use report::{exit_code, Claim, Params, Verdict, VerificationReport};

/// Orders beyond the census used when checking recipe copy-count arithmetic.
pub const ARITHMETIC_MAX_ORDER: usize = 40;

fn canon(g: &Graph) -> Result<String> {
    Ok(canonical_form(g)?.as_str().to_owned())
}

fn g6_list<'a>(it: impl IntoIterator<Item = &'a CensusEntry>) -> Vec<String> {
    it.into_iter().map(|e| e.graph6.clone()).collect()
}

fn theta(lengths: &[usize]) -> Result<Graph> {
    build_theta(&ThetaSpec::new(lengths.iter().copied())?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRow {
    pub n: usize,
    pub bound: usize,
    pub observed_max: Option<usize>,
    pub k_cacti: usize,
    pub maximizers: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsObserved {
    pub exhaustive: bool,
    pub rows: Vec<BoundRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleOutcome {
    pub rule: EndpointRule,
    pub mismatches: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterizationObserved {
    pub rule: EndpointRule,
    pub k_cacti: usize,
    pub outcomes: Vec<RuleOutcome>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecipeCheck {
    pub recipe: String,
    pub item: String,
    pub revision: Option<String>,
    pub realizations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatedItemCheck {
    pub item: String,
    pub blocks: String,
    pub copies_expr: String,
    /// `(order, size)` of the stated coalescence when its copy count is an
    /// integer.
    pub realized: Option<(usize, usize)>,
    pub valid_here: bool,
    /// Orders up to [`ARITHMETIC_MAX_ORDER`] in this item's residue class
    /// where the stated recipe misses `(n, bound)`.
    pub arithmetic_failures: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalObserved {
    pub exhaustive: bool,
    pub bound: usize,
    pub observed_max: Option<usize>,
    /// The recipe family only needs to be attained, not to be exhaustive.
    pub achieved_by_only: bool,
    pub recipes: Vec<RecipeCheck>,
    pub stated_items: Vec<StatedItemCheck>,
    /// Maximizers not produced by any stated item.
    pub missing_from_stated: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatedSet {
    pub listed: Vec<String>,
    /// Listed graphs whose order is not `n`.
    pub wrong_order: Vec<String>,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoConnectedRow {
    pub n: usize,
    pub k: usize,
    pub bound: usize,
    pub tight: bool,
    pub exact: bool,
    pub observed_max: Option<usize>,
    pub maximizers: Vec<String>,
    /// A maximizer that is a θ graph with `k + 1` paths, or a cycle for
    /// `k = 1`.
    pub theta_witness: Option<String>,
    pub stated: Option<StatedSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoConnectedObserved {
    pub exhaustive: bool,
    pub rows: Vec<TwoConnectedRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureObserved {
    pub exhaustive: bool,
    pub derived: Vec<String>,
    pub frozen: Vec<String>,
    pub theta_1222_found: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArithmeticFailure {
    pub n: usize,
    pub k: usize,
    pub item: String,
    pub recipe: String,
    pub realized: Option<(usize, usize)>,
    pub expected: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArithmeticObserved {
    pub recipes_checked: usize,
    pub oracle_checked: usize,
    pub working_failures: Vec<ArithmeticFailure>,
    pub stated_failures: Vec<ArithmeticFailure>,
}

/// Claim checks over one census.
pub struct Verifier<'a> {
    census: &'a Census,
    oracle: CycleOracle,
    rule: EndpointRule,
}

#[allow(clippy::too_many_arguments)]
fn finish(
    claim: Claim,
    params: Params,
    graphs_examined: u64,
    observed: impl Serialize,
    witnesses: Vec<String>,
    mismatches: Vec<String>,
    verdict: Verdict,
    start: Instant,
) -> VerificationReport {
    debug_assert!(verdict != Verdict::Pass || mismatches.is_empty());
    VerificationReport {
        claim,
        params,
        graphs_examined,
        observed: serde_json::to_value(observed).expect("observed payload serializes"),
        witnesses,
        mismatches,
        verdict,
        elapsed_s: start.elapsed().as_secs_f64(),
    }
}

fn stated_key(s: &StatedRecipe) -> String {
    let extras: Vec<String> = s.extras.iter().map(|(p, c)| format!("{p}×{c}")).collect();
    format!("{}|{}|{}|{}", s.item, s.base, s.copies_expr, extras.join(","))
}

fn stated_blocks(s: &StatedRecipe) -> String {
    let mut parts = vec![format!("{}×{}", s.base, s.copies_expr)];
    parts.extend(s.extras.iter().map(|(p, c)| format!("{p}×{c}")));
    format!("{{{}}}", parts.join(", "))
}

/// Orders `m <= ARITHMETIC_MAX_ORDER` at which the stated item keyed like
/// `s` exists but does not realize `(m, max_edges(m, k))`.
fn stated_arithmetic_failures(s: &StatedRecipe) -> Result<Vec<usize>> {
    let key = stated_key(s);
    let mut out = Vec::new();
    for m in 1..=ARITHMETIC_MAX_ORDER {
        let bound = max_edges(m, s.k)?;
        for other in stated_recipes(m, s.k)? {
            if stated_key(&other) == key && other.realized() != Some((m, bound)) {
                out.push(m);
            }
        }
    }
    Ok(out)
}

/// Small-order maximizer lists as stated for 2-connected `k`-cacti.
fn stated_two_connected(n: usize, k: usize) -> Result<Option<Vec<(String, Graph)>>> {
    let named = |name: &str, g: Graph| (name.to_owned(), g);
    Ok(match (n, k) {
        (3, _) => Some(vec![named("K3", build_complete(3)?)]),
        (4, 2 | 3) => Some(vec![named("θ(1,2,2)", theta(&[1, 2, 2])?)]),
        (4, 4) => Some(vec![named("K4", build_complete(4)?)]),
        (5, 2) => Some(vec![
            named("θ(1,2,2)", theta(&[1, 2, 2])?),
            named("θ(1,2,3)", theta(&[1, 2, 3])?),
        ]),
        (5, 3) => Some(vec![named("θ(1,2,2,2)", theta(&[1, 2, 2, 2])?)]),
        (5, 4) => Some(vec![
            named("θ(1,2,2,2)", theta(&[1, 2, 2, 2])?),
            named("θ̃1", theta_tilde(1)),
            named("θ̃2", theta_tilde(2)),
        ]),
        _ => None,
    })
}

impl<'a> Verifier<'a> {
    pub fn new(census: &'a Census, oracle: CycleOracle, rule: EndpointRule) -> Self {
        Verifier { census, oracle, rule }
    }

    pub fn rule(&self) -> EndpointRule {
        self.rule
    }

    /// For each order up to `n_max`, the largest connected `k`-cactus has
    /// exactly `max_edges(n, k)` edges.
    pub fn bounds(&self, n_max: usize, k: usize) -> Result<VerificationReport> {
        let start = Instant::now();
        max_edges(1, k)?;
        let exhaustive = self.census.is_exhaustive();
        let (mut rows, mut witnesses, mut mismatches) = (Vec::new(), Vec::new(), Vec::new());
        let mut examined = 0u64;
        for n in self.census.orders().filter(|&n| n <= n_max) {
            let bound = max_edges(n, k)?;
            let cacti: Vec<&CensusEntry> = self
                .census
                .graphs(n)
                .iter()
                .filter(|e| e.is_k_cactus(k as u64))
                .collect();
            examined += self.census.graphs(n).iter().filter(|e| e.connected).count() as u64;
            let observed_max = cacti.iter().map(|e| e.graph.size()).max();
            let maximizers = g6_list(cacti.iter().copied().filter(|e| Some(e.graph.size()) == observed_max));
            match observed_max {
                Some(m) if m > bound => {
                    mismatches.extend(g6_list(cacti.iter().copied().filter(|e| e.graph.size() > bound)));
                }
                Some(m) if m == bound => witnesses.extend(maximizers.clone()),
                _ if exhaustive => mismatches.extend(maximizers.clone()),
                _ => {}
            }
            rows.push(BoundRow {
                n,
                bound,
                observed_max,
                k_cacti: cacti.len(),
                maximizers,
            });
        }
        // an exhaustive census with no rows at all cannot support the claim
        let verdict = if mismatches.is_empty() && !(exhaustive && rows.is_empty()) {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        let observed = BoundsObserved { exhaustive, rows };
        Ok(finish(
            Claim::Bounds,
            Params { n: n_max, k: Some(k) },
            examined,
            observed,
            witnesses,
            mismatches,
            verdict,
            start,
        ))
    }

    /// Structural membership agrees with the oracle on every connected graph
    /// of order at most `n_max`. Both endpoint rules are evaluated; the
    /// chosen one decides pass or fail, and disagreement between them is
    /// reported as a discrepancy.
    pub fn characterization(&self, n_max: usize, k: usize) -> Result<VerificationReport> {
        let start = Instant::now();
        if !(1..=4).contains(&k) {
            return Err(Error::UnsupportedK { k, expected: "1..=4" });
        }
        let rules = [EndpointRule::Strict, EndpointRule::Relaxed];
        let mut outcomes: Vec<RuleOutcome> = rules
            .iter()
            .map(|&rule| RuleOutcome {
                rule,
                mismatches: vec![],
            })
            .collect();
        let (mut examined, mut k_cacti) = (0u64, 0usize);
        for e in self.census.up_to(n_max).filter(|e| e.connected) {
            examined += 1;
            let truth = e.is_k_cactus(k as u64);
            k_cacti += truth as usize;
            for o in outcomes.iter_mut() {
                if structural_k_cactus(&e.graph, k, o.rule)? != truth {
                    o.mismatches.push(e.graph6.clone());
                }
            }
        }
        let chosen = outcomes.iter().find(|o| o.rule == self.rule).expect("rule evaluated");
        let other = outcomes.iter().find(|o| o.rule != self.rule).expect("rule evaluated");
        let mismatches = chosen.mismatches.clone();
        let witnesses = other.mismatches.clone();
        let verdict = if !mismatches.is_empty() {
            Verdict::Fail
        } else if !witnesses.is_empty() {
            Verdict::DiscrepancyNoted
        } else {
            Verdict::Pass
        };
        let observed = CharacterizationObserved {
            rule: self.rule,
            k_cacti,
            outcomes,
        };
        Ok(finish(
            Claim::Characterization,
            Params { n: n_max, k: Some(k) },
            examined,
            observed,
            witnesses,
            mismatches,
            verdict,
            start,
        ))
    }

    /// The maximizers of order `n` coincide with the realizations of the
    /// working recipes; the stated recipes are checked alongside.
    pub fn extremal_sets(&self, n: usize, k: usize) -> Result<VerificationReport> {
        let start = Instant::now();
        if n > CANON_MAX_ORDER {
            return Err(Error::UnsupportedOrder {
                n,
                max: CANON_MAX_ORDER,
                what: "extremal set comparison",
            });
        }
        let bound = max_edges(n, k)?;
        let exhaustive = self.census.is_exhaustive();
        let cacti: Vec<&CensusEntry> = self
            .census
            .graphs(n)
            .iter()
            .filter(|e| e.is_k_cactus(k as u64))
            .collect();
        let observed_max = cacti.iter().map(|e| e.graph.size()).max();
        let found: BTreeSet<String> = cacti
            .iter()
            .filter(|e| Some(e.graph.size()) == observed_max)
            .map(|e| canon(&e.graph))
            .collect::<Result<_>>()?;

        let mut recipes = Vec::new();
        let mut expected = BTreeSet::new();
        for r in extremal_recipes(n, k)? {
            let realizations: Vec<String> = realize_recipe_all(&r)?.iter().map(write_graph6).collect();
            expected.extend(realizations.iter().cloned());
            recipes.push(RecipeCheck {
                recipe: r.to_string(),
                item: r.item.to_owned(),
                revision: r.revision.as_ref().map(|rev| rev.note.to_owned()),
                realizations,
            });
        }

        let mut stated_items = Vec::new();
        let mut stated_set = BTreeSet::new();
        for s in stated_recipes(n, k)? {
            let valid_here = s.realized() == Some((n, bound));
            if valid_here {
                let r = s.to_recipe().expect("integer copy count");
                for g in realize_recipe_all(&r)? {
                    stated_set.insert(write_graph6(&g));
                }
            }
            stated_items.push(StatedItemCheck {
                item: s.item.to_owned(),
                blocks: stated_blocks(&s),
                copies_expr: s.copies_expr.clone(),
                realized: s.realized(),
                valid_here,
                arithmetic_failures: stated_arithmetic_failures(&s)?,
            });
        }

        let achieved_by_only = k == 1;
        let mut mismatches: BTreeSet<String> = BTreeSet::new();
        if observed_max != Some(bound) && (exhaustive || observed_max > Some(bound)) {
            mismatches.extend(found.iter().cloned());
        }
        if !achieved_by_only {
            mismatches.extend(found.difference(&expected).cloned());
        }
        if exhaustive {
            mismatches.extend(expected.difference(&found).cloned());
        }
        let missing_from_stated: Vec<String> = if achieved_by_only {
            stated_set.difference(&found).cloned().collect()
        } else {
            found.difference(&stated_set).cloned().collect()
        };
        let stated_trouble = !missing_from_stated.is_empty()
            || (exhaustive && !achieved_by_only && stated_set.difference(&found).next().is_some())
            || stated_items
                .iter()
                .any(|s| !s.valid_here || !s.arithmetic_failures.is_empty());
        let verdict = if !mismatches.is_empty() {
            Verdict::Fail
        } else if stated_trouble {
            Verdict::DiscrepancyNoted
        } else {
            Verdict::Pass
        };
        let observed = ExtremalObserved {
            exhaustive,
            bound,
            observed_max,
            achieved_by_only,
            recipes,
            stated_items,
            missing_from_stated,
        };
        Ok(finish(
            Claim::ExtremalSets,
            Params { n, k: Some(k) },
            cacti.len() as u64,
            observed,
            found.into_iter().collect(),
            mismatches.into_iter().collect(),
            verdict,
            start,
        ))
    }

    /// `|E| <= n + k - 1` over 2-connected `k`-cacti, equality via a θ_{k+1}
    /// whenever `n >= k + 2`, and the exact small-order maxima.
    pub fn two_connected(&self, n_max: usize, k_max: usize) -> Result<VerificationReport> {
        let start = Instant::now();
        let exhaustive = self.census.is_exhaustive();
        let (mut rows, mut mismatches) = (Vec::new(), BTreeSet::new());
        let mut witnesses = BTreeSet::new();
        let mut discrepancy = false;
        let mut examined = 0u64;
        for n in self.census.orders().filter(|&n| (3..=n_max).contains(&n)) {
            let blocks: Vec<&CensusEntry> = self.census.graphs(n).iter().filter(|e| e.two_connected).collect();
            examined += blocks.len() as u64;
            for k in 1..=k_max {
                let b = max_edges_two_connected(n, k)?;
                let cacti: Vec<&CensusEntry> = blocks.iter().copied().filter(|e| e.is_k_cactus(k as u64)).collect();
                let observed_max = cacti.iter().map(|e| e.graph.size()).max();
                let best: Vec<&CensusEntry> = cacti
                    .iter()
                    .copied()
                    .filter(|e| Some(e.graph.size()) == observed_max)
                    .collect();
                let maximizers = g6_list(best.iter().copied());
                let mut theta_witness = None;
                for e in &best {
                    // a cycle is the two-path case
                    let paths = match classify_block(&e.graph, self.rule)? {
                        BlockKind::Theta { spec } => spec.paths(),
                        BlockKind::Cycle { .. } => 2,
                        _ => 0,
                    };
                    if paths == k + 1 {
                        theta_witness = Some(e.graph6.clone());
                        break;
                    }
                }
                let general = n + k - 1;
                if observed_max > Some(general) || (b.exact && observed_max > Some(b.bound)) {
                    mismatches.extend(g6_list(
                        cacti.iter().copied().filter(|e| e.graph.size() > b.bound.min(general)),
                    ));
                }
                if exhaustive {
                    let tight_fails = n >= k + 2 && (observed_max != Some(general) || theta_witness.is_none());
                    if tight_fails || (b.exact && observed_max != Some(b.bound)) {
                        mismatches.extend(maximizers.iter().cloned());
                    }
                }
                let stated = match stated_two_connected(n, k)? {
                    None => None,
                    Some(list) => {
                        let wrong_order: Vec<String> = list
                            .iter()
                            .filter(|(_, g)| g.order() != n)
                            .map(|(name, _)| name.clone())
                            .collect();
                        let listed_set: BTreeSet<String> = list
                            .iter()
                            .filter(|(_, g)| g.order() == n)
                            .map(|(_, g)| canon(g))
                            .collect::<Result<_>>()?;
                        let found: BTreeSet<String> = best.iter().map(|e| canon(&e.graph)).collect::<Result<_>>()?;
                        let matches = wrong_order.is_empty()
                            && if exhaustive {
                                listed_set == found
                            } else {
                                found.is_subset(&listed_set)
                            };
                        discrepancy |= !matches;
                        Some(StatedSet {
                            listed: list.into_iter().map(|(name, _)| name).collect(),
                            wrong_order,
                            matches,
                        })
                    }
                };
                witnesses.extend(maximizers.iter().cloned());
                rows.push(TwoConnectedRow {
                    n,
                    k,
                    bound: b.bound,
                    tight: b.tight,
                    exact: b.exact,
                    observed_max,
                    maximizers,
                    theta_witness,
                    stated,
                });
            }
        }
        let verdict = if !mismatches.is_empty() {
            Verdict::Fail
        } else if discrepancy {
            Verdict::DiscrepancyNoted
        } else {
            Verdict::Pass
        };
        let observed = TwoConnectedObserved { exhaustive, rows };
        Ok(finish(
            Claim::TwoConnected,
            Params {
                n: n_max,
                k: Some(k_max),
            },
            examined,
            observed,
            witnesses.into_iter().collect(),
            mismatches.into_iter().collect(),
            verdict,
            start,
        ))
    }

    /// Re-derives θ̃1 and θ̃2: the 2-connected 4-cacti of order 5 and size 7
    /// other than θ(1,2,2,2), ordered by canonical form.
    pub fn theta_tilde_fixtures(&self) -> Result<VerificationReport> {
        let start = Instant::now();
        let exhaustive = self.census.is_exhaustive();
        let t1222 = canon(&theta(&[1, 2, 2, 2])?)?;
        let candidates: Vec<&CensusEntry> = self
            .census
            .graphs(5)
            .iter()
            .filter(|e| e.two_connected && e.graph.size() == 7 && e.is_k_cactus(4))
            .collect();
        let all: BTreeSet<String> = candidates.iter().map(|e| canon(&e.graph)).collect::<Result<_>>()?;
        let theta_1222_found = all.contains(&t1222);
        let derived: Vec<String> = all.iter().filter(|c| **c != t1222).cloned().collect();
        let frozen: Vec<String> = THETA_TILDE_GRAPH6.iter().map(|s| s.to_string()).collect();
        let mismatches: Vec<String> = if exhaustive {
            let d: BTreeSet<&String> = derived.iter().collect();
            let f: BTreeSet<&String> = frozen.iter().collect();
            d.symmetric_difference(&f).map(|s| s.to_string()).collect()
        } else {
            derived.iter().filter(|s| !frozen.contains(s)).cloned().collect()
        };
        let complete = !exhaustive || (theta_1222_found && derived == frozen);
        let verdict = if mismatches.is_empty() && complete {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        let observed = FixtureObserved {
            exhaustive,
            derived,
            frozen,
            theta_1222_found,
        };
        Ok(finish(
            Claim::ThetaTildeFixtures,
            Params { n: 5, k: Some(4) },
            self.census.graphs(5).len() as u64,
            observed,
            all.into_iter().collect(),
            mismatches,
            verdict,
            start,
        ))
    }

    /// Every working recipe up to order `n_max` has order `n` and size
    /// `max_edges(n, k)`; realizations within the oracle cap are connected
    /// `k`-cacti. Stated items whose arithmetic does not close are listed.
    pub fn recipe_arithmetic(&self, n_max: usize) -> Result<VerificationReport> {
        let start = Instant::now();
        let (mut recipes_checked, mut oracle_checked) = (0, 0);
        let (mut working_failures, mut stated_failures, mut mismatches) = (Vec::new(), Vec::new(), Vec::new());
        for k in 1..=4 {
            for n in 1..=n_max {
                let bound = max_edges(n, k)?;
                for r in extremal_recipes(n, k)? {
                    recipes_checked += 1;
                    let realized = (r.realized_order(), r.realized_size());
                    let mut ok = realized == (n, bound);
                    if n <= self.oracle.cap() {
                        let g = realize_recipe(&r)?;
                        oracle_checked += 1;
                        let good = (g.order(), g.size()) == (n, bound) && self.oracle.is_k_cactus(&g, k as u64)?;
                        if !good {
                            mismatches.push(write_graph6(&g));
                        }
                        ok &= good;
                    }
                    if !ok {
                        working_failures.push(ArithmeticFailure {
                            n,
                            k,
                            item: r.item.to_owned(),
                            recipe: r.to_string(),
                            realized: Some(realized),
                            expected: (n, bound),
                        });
                    }
                }
                for s in stated_recipes(n, k)? {
                    if s.realized() != Some((n, bound)) {
                        stated_failures.push(ArithmeticFailure {
                            n,
                            k,
                            item: s.item.to_owned(),
                            recipe: stated_blocks(&s),
                            realized: s.realized(),
                            expected: (n, bound),
                        });
                    }
                }
            }
        }
        let verdict = if !working_failures.is_empty() || !mismatches.is_empty() {
            Verdict::Fail
        } else if !stated_failures.is_empty() {
            Verdict::DiscrepancyNoted
        } else {
            Verdict::Pass
        };
        let observed = ArithmeticObserved {
            recipes_checked,
            oracle_checked,
            working_failures,
            stated_failures,
        };
        Ok(finish(
            Claim::RecipeArithmetic,
            Params { n: n_max, k: None },
            oracle_checked as u64,
            observed,
            vec![],
            mismatches,
            verdict,
            start,
        ))
    }
}

/// Which claims to run and over what ranges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunPlan {
    pub max_n: usize,
    pub ks: Vec<usize>,
    /// Largest `k` for the 2-connected claim.
    pub two_connected_k_max: usize,
    pub claims: Vec<Claim>,
}

impl Default for RunPlan {
    fn default() -> Self {
        RunPlan {
            max_n: ENUM_MAX_ORDER,
            ks: vec![1, 2, 3, 4],
            two_connected_k_max: 6,
            claims: Claim::ALL.to_vec(),
        }
    }
}

impl Verifier<'_> {
    /// Runs the plan in claim order, then `k`, then `n`.
    pub fn run(&self, plan: &RunPlan) -> Result<Vec<VerificationReport>> {
        let mut out = Vec::new();
        let orders: Vec<usize> = self.census.orders().filter(|&n| n <= plan.max_n).collect();
        for &claim in &plan.claims {
            match claim {
                Claim::Bounds => {
                    for &k in &plan.ks {
                        out.push(self.bounds(plan.max_n, k)?);
                    }
                }
                Claim::Characterization => {
                    for &k in &plan.ks {
                        out.push(self.characterization(plan.max_n, k)?);
                    }
                }
                Claim::ExtremalSets => {
                    for &k in &plan.ks {
                        for &n in &orders {
                            out.push(self.extremal_sets(n, k)?);
                        }
                    }
                }
                Claim::TwoConnected => out.push(self.two_connected(plan.max_n, plan.two_connected_k_max)?),
                Claim::ThetaTildeFixtures => {
                    if orders.contains(&5) {
                        out.push(self.theta_tilde_fixtures()?);
                    }
                }
                Claim::RecipeArithmetic => out.push(self.recipe_arithmetic(ARITHMETIC_MAX_ORDER)?),
            }
        }
        Ok(out)
    }
}

/// Re-checks a report from its emitted graph6 strings alone. Returns one
/// message per problem; an empty list means the report is self-consistent.
pub fn recheck_report(report: &VerificationReport, oracle: &CycleOracle, rule: EndpointRule) -> Result<Vec<String>> {
    let mut problems = Vec::new();
    let mut parsed = BTreeMap::new();
    for s in report.witnesses.iter().chain(&report.mismatches) {
        let g = parse_graph6(s)?;
        if write_graph6(&g) != *s {
            problems.push(format!("{s}: graph6 does not round-trip"));
        }
        parsed.insert(s.clone(), g);
    }
    if report.verdict == Verdict::Pass && !report.mismatches.is_empty() {
        problems.push("pass verdict with mismatches".into());
    }
    let k = report.params.k.unwrap_or(0);
    let mut expect = |s: &str, ok: bool, what: &str| {
        if !ok {
            problems.push(format!("{s}: {what}"));
        }
    };
    match report.claim {
        Claim::Bounds | Claim::ExtremalSets => {
            for s in &report.witnesses {
                let g = &parsed[s];
                let ok = g.is_connected()
                    && oracle.is_k_cactus(g, k as u64)?
                    && g.size() == max_edges(g.order(), k)?
                    && (report.claim == Claim::Bounds || g.order() == report.params.n);
                expect(s, ok, "not an extremal k-cactus");
            }
        }
        Claim::Characterization => {
            for s in &report.witnesses {
                let g = &parsed[s];
                let truth = oracle.is_k_cactus(g, k as u64)?;
                expect(
                    s,
                    structural_k_cactus(g, k, rule)? == truth,
                    "chosen rule disagrees with the oracle",
                );
            }
            for s in &report.mismatches {
                let g = &parsed[s];
                let truth = oracle.is_k_cactus(g, k as u64)?;
                expect(
                    s,
                    structural_k_cactus(g, k, rule)? != truth,
                    "listed mismatch agrees with the oracle",
                );
            }
        }
        Claim::TwoConnected => {
            let observed: TwoConnectedObserved = serde_json::from_value(report.observed.clone())
                .map_err(|e| Error::InvalidArgument(format!("two-connected payload: {e}")))?;
            for row in &observed.rows {
                for s in &row.maximizers {
                    let g = parse_graph6(s)?;
                    let ok = is_two_connected(&g)
                        && g.order() == row.n
                        && oracle.is_k_cactus(&g, row.k as u64)?
                        && Some(g.size()) == row.observed_max
                        && g.size() < row.n + row.k;
                    expect(s, ok, "not a maximal 2-connected k-cactus for its row");
                }
            }
        }
        Claim::ThetaTildeFixtures => {
            for s in &report.witnesses {
                let g = &parsed[s];
                let ok = g.order() == 5 && g.size() == 7 && is_two_connected(g) && oracle.is_k_cactus(g, 4)?;
                expect(s, ok, "not a 2-connected 4-cactus of order 5 and size 7");
            }
        }
        Claim::RecipeArithmetic => {}
    }
    Ok(problems)
}
