//! Fixed curves `M̄_{0,n}^G` of dihedral groups `G ≅ D_k`.

use std::collections::{BTreeSet, VecDeque};

use log::debug;
use serde::Serialize;

use super::cyclic::{cyclic_curve_class, CyclicAction};
use crate::classes::{CurveClass, LabelSet, MarkedCount, Permutation};
use crate::error::{Error, Result};

/// Normalized data for a dihedral action whose fixed locus is a curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DihedralAction {
    pub n: MarkedCount,
    pub k: usize,
    /// The rotation of order `k` used for every formula.
    pub sigma: Permutation,
    /// Number of marked orbits of size 2.
    pub type_a: usize,
    /// Number of marked orbits of size `k`.
    pub type_b: usize,
    /// `σ1, σ2` split the free orbit; `σ3, σ4` are the marked `k`-orbits.
    pub cycles: Vec<Vec<usize>>,
    /// The reflection fixing `m = min σ3` (`b >= 1`).
    pub tau1: Option<Permutation>,
    /// The reflection fixing `n4 = min σ4` (`b = 2`).
    pub tau2: Option<Permutation>,
    pub m: Option<usize>,
    pub n4: Option<usize>,
    /// The size-2 orbit `{ℓ, τ(ℓ)}` (`a = 1`).
    pub ell: Option<[usize; 2]>,
    pub group_order: usize,
}

/// Closes `gens` under composition.
pub fn generate_group(n: MarkedCount, gens: &[Permutation]) -> Result<Vec<Permutation>> {
    for g in gens {
        if g.n() != n.get() {
            return Err(Error::MismatchedN(g.n(), n.get()));
        }
    }
    let id = Permutation::identity(n);
    let mut seen: BTreeSet<Permutation> = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.compose(&x);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

fn orbits(n: MarkedCount, group: &[Permutation]) -> Vec<LabelSet> {
    let mut done = LabelSet::EMPTY;
    let mut out = Vec::new();
    for x in n.labels() {
        if done.contains(x) {
            continue;
        }
        let orb: LabelSet = group.iter().map(|g| g.apply(x)).collect();
        done = done.union(orb);
        out.push(orb);
    }
    out
}

fn cycle_through(sigma: &Permutation, start: usize) -> Vec<usize> {
    let mut cyc = vec![start];
    let mut x = sigma.apply(start);
    while x != start {
        cyc.push(x);
        x = sigma.apply(x);
    }
    cyc
}

fn not_a_curve(msg: impl Into<String>) -> Error {
    Error::NotACurve(msg.into())
}

impl DihedralAction {
    /// Derives `k`, the type `(a, b)` and normalized reflections from any
    /// generating set of `G`.
    pub fn new(n: MarkedCount, gens: &[Permutation]) -> Result<Self> {
        let group = generate_group(n, gens)?;
        let order = group.len();
        if order < 6 || order % 2 != 0 {
            return Err(not_a_curve(format!("group of order {order} is not dihedral with k >= 3")));
        }
        let k = order / 2;
        let sigma = gens
            .iter()
            .find(|g| g.order() == k)
            .or_else(|| group.iter().find(|g| g.order() == k))
            .cloned()
            .ok_or_else(|| not_a_curve(format!("no element of order {k} in a group of order {order}")))?;
        let rotations: Vec<Permutation> = (0..k).map(|e| sigma.pow(e)).collect();
        let sigma_inv = sigma.inverse();
        let reflections: Vec<Permutation> = group.iter().filter(|g| !rotations.contains(g)).cloned().collect();
        for t in &reflections {
            if !t.compose(t).is_identity() || t.compose(&sigma).compose(t) != sigma_inv {
                return Err(not_a_curve(format!("group generated by the input is not dihedral (offending {t})")));
            }
        }

        let mut free = Vec::new();
        let mut k_orbits = Vec::new();
        let mut pairs = Vec::new();
        for orb in orbits(n, &group) {
            match orb.len() {
                s if s == 2 * k => free.push(orb),
                s if s == k => k_orbits.push(orb),
                2 => pairs.push(orb),
                s => return Err(not_a_curve(format!("orbit {orb} has size {s}, not 2, {k} or {}", 2 * k))),
            }
        }
        if free.len() != 1 {
            return Err(not_a_curve(format!("need exactly one orbit of size {}, found {}", 2 * k, free.len())));
        }
        if pairs.len() > 1 || k_orbits.len() > 2 {
            return Err(not_a_curve("too many special orbits"));
        }
        let free = free[0];
        let s1 = cycle_through(&sigma, free.min_label().expect("nonempty orbit"));
        let s1_set: LabelSet = s1.iter().copied().collect();
        let s2 = cycle_through(&sigma, free.difference(s1_set).min_label().expect("orbit splits"));
        if s1.len() != k || s2.len() != k {
            return Err(not_a_curve("rotation does not split the free orbit into two k-cycles"));
        }
        let mut cycles = vec![s1, s2];
        k_orbits.sort();
        for orb in &k_orbits {
            let c = cycle_through(&sigma, orb.min_label().expect("nonempty orbit"));
            if c.len() != k {
                return Err(not_a_curve(format!("rotation is not a single cycle on {orb}")));
            }
            cycles.push(c);
        }
        let ell = match pairs.as_slice() {
            [p] => {
                let v = p.to_vec();
                if sigma.apply(v[0]) != v[0] {
                    return Err(not_a_curve(format!("rotation moves the order-two orbit {p}")));
                }
                Some([v[0], v[1]])
            }
            _ => None,
        };
        let fixing = |x: usize| -> Result<Permutation> {
            reflections
                .iter()
                .find(|t| t.apply(x) == x)
                .cloned()
                .ok_or_else(|| not_a_curve(format!("no reflection fixes {x}")))
        };
        let m = k_orbits.first().and_then(|o| o.min_label());
        let n4 = k_orbits.get(1).and_then(|o| o.min_label());
        let tau1 = m.map(fixing).transpose()?;
        let tau2 = n4.map(fixing).transpose()?;
        debug!("dihedral k={k} type=({},{}) sigma={sigma}", pairs.len(), k_orbits.len());
        Ok(DihedralAction {
            n,
            k,
            sigma,
            type_a: pairs.len(),
            type_b: k_orbits.len(),
            cycles,
            tau1,
            tau2,
            m,
            n4,
            ell,
            group_order: order,
        })
    }

    pub fn parse(n: MarkedCount, gens: &[&str]) -> Result<Self> {
        let perms = gens
            .iter()
            .map(|s| Permutation::parse(n, s))
            .collect::<Result<Vec<_>>>()?;
        DihedralAction::new(n, &perms)
    }

    fn cycle_set(&self, i: usize) -> LabelSet {
        self.cycles[i].iter().copied().collect()
    }
}

/// The intersection numbers of `M̄_{0,n}^G` with every boundary divisor.
///
/// For `a = 1` both labels of the order-two orbit play the role of `ℓ`.
pub fn dihedral_curve_class(a: &DihedralAction) -> CurveClass {
    if a.type_b == 0 {
        let cyc = CyclicAction::new(a.sigma.clone()).expect("type (a,0) rotation is balanced");
        return cyclic_curve_class(&cyc);
    }
    let mut c = CurveClass::zero(a.n);
    let s1 = a.cycle_set(0);
    let s2 = a.cycle_set(1);
    let sig = &a.sigma;
    match a.ell {
        None => {
            c.set_at_subset(s1, 2);
            c.set_at_subset(s2, 2);
        }
        Some(ells) => {
            for l in ells {
                for s in [s1, s2] {
                    c.set_at_subset(s.union(LabelSet::singleton(l)), 1);
                }
            }
        }
    }
    if a.type_b == 1 {
        if a.k % 2 == 1 {
            for h in s1.iter() {
                for i in s2.iter() {
                    c.set_at_subset(LabelSet::from_iter([h, i]), 1);
                }
            }
        } else {
            let tau = a.tau1.as_ref().expect("b = 1 has a reflection");
            for &i in &a.cycles[0] {
                for t in 0..a.k / 2 {
                    let j = sig.pow(2 * t + 1).apply(tau.apply(i));
                    c.set_at_subset(LabelSet::from_iter([i, j]), 2);
                }
            }
        }
    }
    let specials = [(a.tau1.as_ref(), a.m), (a.tau2.as_ref(), a.n4)];
    for (tau, fixed) in specials {
        let (Some(tau), Some(fixed)) = (tau, fixed) else { continue };
        for &i in &a.cycles[0] {
            for t in 0..a.k {
                let st = sig.pow(t);
                let triple = LabelSet::from_iter([st.apply(i), st.apply(tau.apply(i)), st.apply(fixed)]);
                c.set_at_subset(triple, 1);
            }
        }
    }
    c
}
