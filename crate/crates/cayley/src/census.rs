//! Cyclic-subgroup censuses: the order sets pi_e / pi / pi_c, per-order
//! counts c_k, the total |C(G)|, and the deficiency delta(G) = |G| - |C(G)|.
//!
//! Two exact identities tie a census to its group and are exposed as checks:
//!
//! * sum over k of c_k * phi(k) = |G|          (every element generates
//!   exactly one cyclic subgroup, which has phi(k) generators)
//! * sum over k of c_k * (phi(k) - 1) = delta

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::group::{ElementSet, Group};

/// Euler's totient via trial-division factorization.
pub fn totient(k: usize) -> usize {
    assert!(k >= 1, "totient is defined for k >= 1");
    let mut result = k;
    for (p, _) in prime_factorization(k) {
        result = result / p * (p - 1);
    }
    result
}

/// Sorted list of (prime, exponent) pairs; empty for n = 1.
pub fn prime_factorization(mut n: usize) -> Vec<(usize, u32)> {
    assert!(n >= 1, "factorization is defined for n >= 1");
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub(crate) fn is_prime(n: usize) -> bool {
    n >= 2 && prime_factorization(n) == vec![(n, 1)]
}

/// The set `{<x> : x in G}` with duplicates removed by element-set equality,
/// sorted canonically (size, then bit order).
pub fn cyclic_subgroups(g: &Group) -> Vec<ElementSet> {
    let mut seen: HashSet<ElementSet> = HashSet::new();
    for x in g.elements() {
        let mut set = ElementSet::empty(g.order());
        set.insert(0);
        let mut y = x;
        while y != 0 {
            set.insert(y);
            y = g.mul(y, x);
        }
        seen.insert(set);
    }
    let mut subs: Vec<ElementSet> = seen.into_iter().collect();
    subs.sort();
    subs
}

/// Per-order cyclic subgroup counts plus the derived order sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicCensus {
    pub group_order: usize,
    /// c_k: number of cyclic subgroups of order exactly k, for k in pi_e.
    pub c: BTreeMap<usize, usize>,
    /// Element orders of G.
    pub pi_e: BTreeSet<usize>,
    /// Prime divisors of |G|.
    pub pi: BTreeSet<usize>,
    /// pi_e minus pi minus {1}: the composite element orders.
    pub pi_c: BTreeSet<usize>,
    /// |C(G)| = sum of c_k.
    pub num_cyclic: usize,
    /// delta(G) = |G| - |C(G)|.
    pub delta: usize,
}

impl CyclicCensus {
    /// c_k, zero when k is not a realized order.
    pub fn count_of(&self, k: usize) -> usize {
        self.c.get(&k).copied().unwrap_or(0)
    }

    /// sum c_k * phi(k) == |G|, exactly.
    pub fn order_sum_identity(&self) -> bool {
        self.c.iter().map(|(&k, &ck)| ck * totient(k)).sum::<usize>() == self.group_order
    }

    /// sum c_k * (phi(k) - 1) == delta, exactly.
    pub fn eq1_identity(&self) -> bool {
        self.c.iter().map(|(&k, &ck)| ck * (totient(k) - 1)).sum::<usize>() == self.delta
    }
}

/// Computes the census by deduplicating the cyclic subgroups themselves;
/// the totient identities then act as genuine cross-checks.
pub fn census(g: &Group) -> CyclicCensus {
    let subs = cyclic_subgroups(g);
    let mut c: BTreeMap<usize, usize> = BTreeMap::new();
    for s in &subs {
        *c.entry(s.len()).or_insert(0) += 1;
    }
    let pi_e: BTreeSet<usize> = c.keys().copied().collect();
    let pi: BTreeSet<usize> = prime_factorization(g.order()).into_iter().map(|(p, _)| p).collect();
    let pi_c: BTreeSet<usize> =
        pi_e.iter().copied().filter(|k| *k != 1 && !pi.contains(k)).collect();
    let num_cyclic = subs.len();
    CyclicCensus {
        group_order: g.order(),
        c,
        pi_e,
        pi,
        pi_c,
        num_cyclic,
        delta: g.order() - num_cyclic,
    }
}

/// Number of distinct cyclic subgroups of order exactly k.
pub fn count_of_order(g: &Group, k: usize) -> usize {
    assert!(k >= 1);
    let mut seen: HashSet<ElementSet> = HashSet::new();
    for x in g.elements() {
        if g.element_order(x) != k {
            continue;
        }
        let mut set = ElementSet::empty(g.order());
        set.insert(0);
        let mut y = x;
        while y != 0 {
            set.insert(y);
            y = g.mul(y, x);
        }
        seen.insert(set);
    }
    seen.len()
}

/// True iff G is abelian of exponent at most 2 (delta(G) = 0 exactly then).
pub fn is_elementary_abelian_2(g: &Group) -> bool {
    g.is_abelian() && g.exponent() <= 2
}
