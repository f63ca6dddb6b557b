//! Keel-relation moves between F-curve expressions and the breadth-first
//! search for an effective expression of a given class.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::hash::{Hash, Hasher};
use std::time::Instant;

use log::{debug, info};
use serde::Serialize;

use crate::classes::{CurveClass, FCurve, FCurveExpression, KeelRelation, LabelSet};

/// The common refinement of two F-curves and the blocks they share.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RefinementData {
    pub refinement_size: usize,
    pub shared_blocks: Vec<LabelSet>,
}

/// Nonempty parts `I_i ∩ J_j`, sorted by least label.
fn common_refinement(f: &FCurve, g: &FCurve) -> Vec<LabelSet> {
    let mut parts = Vec::with_capacity(16);
    for &a in f.blocks() {
        for &b in g.blocks() {
            let x = a.intersection(b);
            if !x.is_empty() {
                parts.push(x);
            }
        }
    }
    parts.sort_unstable_by_key(|p| p.bits().trailing_zeros());
    parts
}

pub fn refinement(f: &FCurve, g: &FCurve) -> RefinementData {
    let shared_blocks = f
        .blocks()
        .iter()
        .copied()
        .filter(|b| g.blocks().contains(b))
        .collect();
    RefinementData {
        refinement_size: common_refinement(f, g).len(),
        shared_blocks,
    }
}

/// `|R_{F,G}| = 5`.
#[inline]
pub fn adjacent(f: &FCurve, g: &FCurve) -> bool {
    let mut count = 0;
    for &a in f.blocks() {
        for &b in g.blocks() {
            if !a.is_disjoint(b) {
                count += 1;
                if count > 5 {
                    return false;
                }
            }
        }
    }
    count == 5
}

/// Indices `(a, b)` of the two refinement parts merged into one block of `f`.
fn merged_pair(f: &FCurve, parts: &[LabelSet]) -> (usize, usize) {
    let big = f
        .blocks()
        .iter()
        .find(|b| !parts.contains(b))
        .expect("one block of an adjacent curve is a union of two parts");
    let mut idx = (0..parts.len()).filter(|&i| parts[i].is_subset(*big));
    (idx.next().expect("two parts"), idx.next().expect("two parts"))
}

/// The two Keel relations containing an adjacent pair, each oriented with `f`
/// on the positive side. Empty when `f` and `g` are not adjacent.
pub fn keel_relations_containing(f: &FCurve, g: &FCurve) -> Vec<KeelRelation> {
    if !adjacent(f, g) {
        return Vec::new();
    }
    let q = common_refinement(f, g);
    let n = f.n();
    let (a, b) = merged_pair(f, &q);
    let (c, d) = merged_pair(g, &q);
    let mk = |i1: usize, i2: usize, i3: usize, i4: usize, i5: usize| {
        KeelRelation::from_parts_unchecked([q[i1], q[i2], q[i3], q[i4], q[i5]], n)
    };
    let shared: Vec<usize> = [a, b].into_iter().filter(|x| *x == c || *x == d).collect();
    match shared.as_slice() {
        [] => {
            let e = (0..5).find(|x| ![a, b, c, d].contains(x)).expect("fifth part");
            vec![mk(a, b, e, c, d), mk(a, b, e, d, c)]
        }
        [x] => {
            let x = *x;
            let y = if a == x { b } else { a };
            let z = if c == x { d } else { c };
            let rest: Vec<usize> = (0..5).filter(|i| ![x, y, z].contains(i)).collect();
            let (u, v) = (rest[0], rest[1]);
            vec![mk(x, y, u, z, v), mk(x, y, v, z, u)]
        }
        _ => unreachable!("adjacent curves merge different pairs"),
    }
}

/// `m(E)`: the sum of absolute values of negative coefficients.
pub fn deficiency(e: &FCurveExpression) -> u64 {
    e.deficiency()
}

pub fn verify_expression(e: &FCurveExpression, target: &CurveClass) -> bool {
    e.n() == target.n() && e.class() == *target
}

/// A relation identified up to sign: its positive pair then its negative pair.
type RelationKey = [FCurve; 4];

fn relation_key(r: &KeelRelation) -> RelationKey {
    let (mut pos, mut neg) = r.terms();
    pos.sort_unstable();
    neg.sort_unstable();
    if pos <= neg {
        [pos[0], pos[1], neg[0], neg[1]]
    } else {
        [neg[0], neg[1], pos[0], pos[1]]
    }
}

/// Distinct relations (up to sign) through a positive and a negative term.
fn candidate_relations(e: &FCurveExpression) -> Vec<KeelRelation> {
    let pos: Vec<FCurve> = e.positive_terms().map(|(f, _)| f).collect();
    let neg: Vec<FCurve> = e.negative_terms().map(|(f, _)| f).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for f in &pos {
        for g in &neg {
            for r in keel_relations_containing(f, g) {
                if seen.insert(relation_key(&r)) {
                    out.push(r);
                }
            }
        }
    }
    out
}

/// Every edge `E → E ± R` of the move graph, positive-term-major.
pub fn tilde_neighbors(e: &FCurveExpression) -> Vec<(KeelRelation, FCurveExpression)> {
    let mut out = Vec::new();
    for r in candidate_relations(e) {
        for rr in [r, r.negated()] {
            let mut next = e.clone();
            next.add_scaled(&rr.expression(), 1);
            out.push((rr, next));
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    pub max_level: usize,
    pub node_budget: u64,
    pub restart_on_improvement: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_level: 4,
            node_budget: 5_000_000,
            restart_on_improvement: true,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Distinct expressions examined across all restarts.
    pub nodes: u64,
    pub restarts: u64,
    /// Deepest level reached in the final round.
    pub last_level: usize,
    pub millis: u128,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSuccess {
    pub expression: FCurveExpression,
    /// The relations applied, in order, from the input.
    pub moves: Vec<KeelRelation>,
    pub stats: SearchStats,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SeekError {
    #[error("search budget exhausted ({reason}); best deficiency {deficiency}")]
    BudgetExhausted {
        best: FCurveExpression,
        deficiency: u64,
        moves: Vec<KeelRelation>,
        stats: SearchStats,
        reason: String,
    },
}

/// Offsets from the round's root expression, sorted; the visited-set key.
type Delta = Vec<(FCurve, i64)>;

/// A vertex of the move graph, stored as the edge that reached it.
struct Node {
    parent: u32,
    relation: Option<KeelRelation>,
}

const NO_PARENT: u32 = u32::MAX;

fn path_to(nodes: &[Node], mut i: usize) -> Vec<KeelRelation> {
    let mut path = Vec::new();
    while let Some(r) = nodes[i].relation {
        path.push(r);
        i = nodes[i].parent as usize;
    }
    path.reverse();
    path
}

fn delta_of(nodes: &[Node], i: usize) -> Delta {
    let mut m: BTreeMap<FCurve, i64> = BTreeMap::new();
    for r in path_to(nodes, i) {
        add_relation(&mut m, &r);
    }
    m.into_iter().collect()
}

fn add_relation(m: &mut BTreeMap<FCurve, i64>, r: &KeelRelation) {
    let (pos, neg) = r.terms();
    for (f, c) in pos.iter().map(|&f| (f, 1)).chain(neg.iter().map(|&f| (f, -1))) {
        let slot = m.entry(f).or_insert(0);
        *slot += c;
        if *slot == 0 {
            m.remove(&f);
        }
    }
}

/// Exact membership over node deltas. Only a 64-bit hash is kept per node;
/// deltas are rebuilt from the node chain to settle hash hits.
#[derive(Default)]
struct Visited {
    first: HashMap<u64, u32>,
    spill: HashMap<u64, Vec<u32>>,
}

impl Visited {
    fn hash(delta: &Delta) -> u64 {
        let mut h = std::collections::hash_map::DefaultHasher::new();
        delta.hash(&mut h);
        h.finish()
    }

    fn contains(&self, nodes: &[Node], h: u64, delta: &Delta) -> bool {
        let Some(&id) = self.first.get(&h) else { return false };
        if delta_of(nodes, id as usize) == *delta {
            return true;
        }
        self.spill
            .get(&h)
            .is_some_and(|ids| ids.iter().any(|&i| delta_of(nodes, i as usize) == *delta))
    }

    fn insert(&mut self, h: u64, id: usize) {
        match self.first.entry(h) {
            std::collections::hash_map::Entry::Vacant(v) => {
                v.insert(id as u32);
            }
            std::collections::hash_map::Entry::Occupied(_) => self.spill.entry(h).or_default().push(id as u32),
        }
    }
}

fn apply_delta(root: &FCurveExpression, delta: &Delta) -> FCurveExpression {
    let mut e = root.clone();
    for &(f, c) in delta {
        e.add_term(f, c);
    }
    e
}

fn merge_delta(delta: &Delta, r: &KeelRelation) -> Delta {
    let mut m: BTreeMap<FCurve, i64> = delta.iter().copied().collect();
    add_relation(&mut m, r);
    m.into_iter().collect()
}

/// Deficiency of `e + r` from that of `e`.
fn deficiency_after(e: &FCurveExpression, base: u64, r: &KeelRelation) -> u64 {
    let neg_part = |c: i64| if c < 0 { c.unsigned_abs() } else { 0 };
    let (pos, neg) = r.terms();
    let mut change: BTreeMap<FCurve, i64> = BTreeMap::new();
    for f in pos {
        *change.entry(f).or_insert(0) += 1;
    }
    for f in neg {
        *change.entry(f).or_insert(0) -= 1;
    }
    let mut d = base as i64;
    for (f, c) in change {
        let old = e.coefficient(&f);
        d += neg_part(old + c) as i64 - neg_part(old) as i64;
    }
    d as u64
}

enum RoundEnd {
    Improved { expression: FCurveExpression, path: Vec<KeelRelation> },
    Exhausted { reason: String },
}

/// Breadth-first search over `G̃(E, l)`. The first level holding a strict
/// decrease of `m(E)` is completed and its best vertex becomes the new root.
#[allow(clippy::result_large_err)]
pub fn seek_effective_expression(e: &FCurveExpression, cfg: &SearchConfig) -> Result<SearchSuccess, SeekError> {
    let start = Instant::now();
    let mut stats = SearchStats::default();
    let mut root = e.clone();
    let mut moves: Vec<KeelRelation> = Vec::new();
    let mut best = (root.deficiency(), root.clone(), Vec::new());
    loop {
        let root_def = root.deficiency();
        if root_def == 0 {
            stats.millis = start.elapsed().as_millis();
            info!("effective expression with {} terms after {} nodes", root.len(), stats.nodes);
            return Ok(SearchSuccess { expression: root, moves, stats });
        }
        info!("round {}: deficiency {root_def}, {} terms", stats.restarts, root.len());
        match search_round(&root, root_def, cfg, &mut stats, &mut best, &moves) {
            RoundEnd::Improved { expression, path } => {
                moves.extend(path);
                root = expression;
                stats.restarts += 1;
            }
            RoundEnd::Exhausted { reason } => {
                stats.millis = start.elapsed().as_millis();
                let (deficiency, best, moves) = best;
                return Err(SeekError::BudgetExhausted {
                    best,
                    deficiency,
                    moves,
                    stats,
                    reason,
                });
            }
        }
    }
}

fn search_round(
    root: &FCurveExpression,
    root_def: u64,
    cfg: &SearchConfig,
    stats: &mut SearchStats,
    best: &mut (u64, FCurveExpression, Vec<KeelRelation>),
    prefix: &[KeelRelation],
) -> RoundEnd {
    let mut nodes: Vec<Node> = vec![Node {
        parent: NO_PARENT,
        relation: None,
    }];
    let mut visited = Visited::default();
    visited.insert(Visited::hash(&Vec::new()), 0);
    let mut frontier: Vec<u32> = vec![0];
    for level in 1..=cfg.max_level {
        stats.last_level = level;
        let mut next = Vec::new();
        let mut level_best: Option<(u64, Delta, usize)> = None;
        for &idx in &frontier {
            let idx = idx as usize;
            let base = delta_of(&nodes, idx);
            let here = apply_delta(root, &base);
            let here_def = here.deficiency();
            for r in candidate_relations(&here) {
                for rr in [r, r.negated()] {
                    let delta = merge_delta(&base, &rr);
                    let h = Visited::hash(&delta);
                    if visited.contains(&nodes, h, &delta) {
                        continue;
                    }
                    stats.nodes += 1;
                    if stats.nodes > cfg.node_budget {
                        return RoundEnd::Exhausted {
                            reason: format!("node budget {} reached", cfg.node_budget),
                        };
                    }
                    let def = deficiency_after(&here, here_def, &rr);
                    nodes.push(Node {
                        parent: idx as u32,
                        relation: Some(rr),
                    });
                    let id = nodes.len() - 1;
                    visited.insert(h, id);
                    if def < best.0 {
                        let mut full = prefix.to_vec();
                        full.extend(path_to(&nodes, id));
                        *best = (def, apply_delta(root, &delta), full);
                    }
                    if def == 0 || (def < root_def && cfg.restart_on_improvement) {
                        let better = match &level_best {
                            None => true,
                            Some((d, bd, _)) => def < *d || (def == *d && delta < *bd),
                        };
                        if better {
                            level_best = Some((def, delta, id));
                        }
                    }
                    next.push(id as u32);
                }
            }
        }
        if let Some((def, delta, id)) = level_best {
            debug!("level {level}: deficiency {root_def} -> {def} after {} nodes", stats.nodes);
            return RoundEnd::Improved {
                expression: apply_delta(root, &delta),
                path: path_to(&nodes, id),
            };
        }
        if next.is_empty() {
            return RoundEnd::Exhausted {
                reason: format!("move graph exhausted at level {level}"),
            };
        }
        frontier = next;
    }
    RoundEnd::Exhausted {
        reason: format!("no improvement within level {}", cfg.max_level),
    }
}
