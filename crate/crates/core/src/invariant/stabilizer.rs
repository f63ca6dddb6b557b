//! Order of the subgroup of `S_n` fixing a curve class.

use crate::classes::labels::subsets_of;
use crate::classes::perm::for_each_permutation;
use crate::classes::{Act, CurveClass, LabelSet};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug)]
pub struct StabilizerConfig {
    /// Maximum number of partial assignments examined by the backtracking search.
    pub node_budget: u64,
    /// Largest `n` handled by plain enumeration of `S_n`.
    pub brute_force_max_n: usize,
}

impl Default for StabilizerConfig {
    fn default() -> Self {
        StabilizerConfig {
            node_budget: 50_000_000,
            brute_force_max_n: 7,
        }
    }
}

/// `|{g ∈ S_n : g·C = C}|` by enumerating all of `S_n`.
pub fn stabilizer_order_brute_force(c: &CurveClass) -> u64 {
    let mut count = 0;
    for_each_permutation(c.n(), |g| {
        if c.act(g) == *c {
            count += 1;
        }
    });
    count
}

/// `|{g ∈ S_n : g·C = C}|`.
pub fn stabilizer_order(c: &CurveClass, cfg: &StabilizerConfig) -> Result<u64> {
    if c.n().get() <= cfg.brute_force_max_n {
        return Ok(stabilizer_order_brute_force(c));
    }
    Backtrack::new(c, cfg.node_budget).run()
}

struct Backtrack<'a> {
    class: &'a CurveClass,
    n: usize,
    signatures: Vec<Vec<(usize, i64)>>,
    images: Vec<usize>,
    used: LabelSet,
    nodes: u64,
    budget: u64,
    found: u64,
}

impl<'a> Backtrack<'a> {
    fn new(class: &'a CurveClass, budget: u64) -> Self {
        let n = class.n().get();
        let mut signatures = vec![Vec::new(); n + 1];
        for (d, v) in class.nonzero() {
            let rep = d.rep();
            for (x, sig) in signatures.iter_mut().enumerate().skip(1) {
                let side = if rep.contains(x) { rep.len() } else { n - rep.len() };
                sig.push((side, v));
            }
        }
        for s in &mut signatures {
            s.sort_unstable();
        }
        Backtrack {
            class,
            n,
            signatures,
            images: vec![0; n + 1],
            used: LabelSet::EMPTY,
            nodes: 0,
            budget,
            found: 0,
        }
    }

    fn run(mut self) -> Result<u64> {
        self.extend(1)?;
        Ok(self.found)
    }

    fn consistent(&self, x: usize) -> bool {
        let earlier = LabelSet::from_bits((1u32 << (x - 1)) - 1);
        let xs = LabelSet::singleton(x);
        subsets_of(earlier).all(|s| {
            let s = s.union(xs);
            if s.len() < 2 || s.len() + 2 > self.n {
                return true;
            }
            let img: LabelSet = s.iter().map(|l| self.images[l]).collect();
            self.class.at_subset(s) == self.class.at_subset(img)
        })
    }

    fn extend(&mut self, x: usize) -> Result<()> {
        if x > self.n {
            self.found += 1;
            return Ok(());
        }
        for y in 1..=self.n {
            if self.used.contains(y) || self.signatures[y] != self.signatures[x] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::Timeout(self.budget));
            }
            self.images[x] = y;
            if self.consistent(x) {
                self.used.insert(y);
                self.extend(x + 1)?;
                self.used.remove(y);
            }
        }
        Ok(())
    }
}
