//! Permutations of `[n]` and disjoint-cycle notation.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::labels::{label_str, parse_label_run, LabelSet, MarkedCount};
use crate::error::{Error, Result};

/// A bijection of `[n]`, stored as `images[i - 1] = g(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: MarkedCount) -> Self {
        Permutation {
            images: (1..=n.get() as u8).collect(),
        }
    }

    /// Builds a permutation from its image list `[g(1), ..., g(n)]`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(Error::Parse(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u8).collect(),
        })
    }

    /// Builds a permutation from disjoint cycles.
    pub fn from_cycles(n: MarkedCount, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n.get()).collect();
        let mut used = LabelSet::EMPTY;
        for cyc in cycles {
            for &l in cyc {
                if l == 0 || l > n.get() {
                    return Err(Error::LabelOutOfRange { label: l, n: n.get() });
                }
                if used.contains(l) {
                    return Err(Error::Parse(format!("label {l} appears in two cycles")));
                }
                used.insert(l);
            }
            for (k, &l) in cyc.iter().enumerate() {
                images[l - 1] = cyc[(k + 1) % cyc.len()];
            }
        }
        Permutation::from_images(images)
    }

    /// Parses disjoint-cycle notation such as `(1 2 3)(4 5 6)` or `(123)(abc)`.
    /// The empty string and `()` denote the identity.
    pub fn parse(n: MarkedCount, s: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {s:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {s:?}")))?;
            let cyc = parse_label_run(&body[..close])?;
            if cyc.len() > 1 {
                cycles.push(cyc);
            }
            rest = body[close + 1..].trim_start();
        }
        Permutation::from_cycles(n, &cycles)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, label: usize) -> usize {
        self.images[label - 1] as usize
    }

    pub fn apply_set(&self, s: LabelSet) -> LabelSet {
        s.iter().map(|l| self.apply(l)).collect()
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "composing permutations of different degree");
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize - 1] = i as u8 + 1;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, e: usize) -> Permutation {
        let mut acc = Permutation {
            images: (1..=self.n() as u8).collect(),
        };
        for _ in 0..e {
            acc = self.compose(&acc);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    pub fn fixed_points(&self) -> LabelSet {
        (1..=self.n()).filter(|&i| self.apply(i) == i).collect()
    }

    /// All cycles, including fixed points, each starting at its least label,
    /// sorted by least label.
    pub fn all_cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = LabelSet::EMPTY;
        let mut out = Vec::new();
        for start in 1..=self.n() {
            if seen.contains(start) {
                continue;
            }
            let mut cyc = vec![start];
            seen.insert(start);
            let mut x = self.apply(start);
            while x != start {
                cyc.push(x);
                seen.insert(x);
                x = self.apply(x);
            }
            out.push(cyc);
        }
        out
    }

    /// Cycles of length at least two.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.all_cycles().into_iter().filter(|c| c.len() > 1).collect()
    }

    pub fn order(&self) -> usize {
        self.all_cycles()
            .iter()
            .fold(1, |acc, c| num_integer::lcm(acc, c.len()))
    }

    /// Cycle notation. Labels are written compactly (`a`, `b`, `c` for 10..12)
    /// when every label fits in one character.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".into();
        }
        let compact = self.n() <= 12;
        let sep = if compact { "" } else { " " };
        cycles
            .iter()
            .map(|c| {
                let body: Vec<String> = c.iter().map(|&l| label_str(l, compact)).collect();
                format!("({})", body.join(sep))
            })
            .collect()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{}", self.to_cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

/// Calls `f` on every permutation of `[n]` (Heap's algorithm).
pub fn for_each_permutation<F: FnMut(&Permutation)>(n: MarkedCount, mut f: F) {
    let n = n.get();
    let mut a: Vec<u8> = (1..=n as u8).collect();
    let mut c = vec![0usize; n];
    f(&Permutation { images: a.clone() });
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            f(&Permutation { images: a.clone() });
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}
