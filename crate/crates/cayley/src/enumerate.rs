//! Exhaustive enumeration of all groups of a small order up to isomorphism
//! by backtracking multiplication-table search.
//!
//! The identity row and column are fixed, the remaining cells are filled in
//! row-major order, and branches are cut by Latin-square constraints,
//! incremental associativity (with forward propagation of forced cells), and
//! a first-use symmetry rule on row 1: values there may introduce at most
//! one new label per column, which normalizes relabelings; for even orders
//! the first interior cell is pinned to the identity (element 1 can be
//! taken to be an involution).

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::census::census;
use crate::construct;
use crate::group::Group;
use crate::structure::{self, iso_key, IsoKey};

/// Enumeration beyond this order requires the explicit opt-in.
pub const ENUM_DEFAULT_CAP: usize = 12;
/// Absolute enumeration cap.
pub const ENUM_HARD_CAP: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("order {0} is outside the supported enumeration range 1..={max}", max = ENUM_HARD_CAP)]
    OutOfRange(usize),
    #[error("order {0} requires the large-order opt-in (cap without it is {cap})", cap = ENUM_DEFAULT_CAP)]
    NeedsOptIn(usize),
}

/// Test-facing switches for the search.
#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    /// Apply the first-use symmetry rule (sound relabeling normalization).
    pub symmetry_pruning: bool,
    /// Propagate forced cells from associativity instead of only checking.
    pub propagate: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { symmetry_pruning: true, propagate: true }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct SearchStats {
    /// Decision nodes visited.
    pub nodes: u64,
    /// Complete tables produced.
    pub completed: u64,
    /// Complete tables rejected as isomorphic to an earlier representative.
    pub iso_rejections: u64,
}

/// One representative per isomorphism class of groups of a given order.
#[derive(Debug, Clone)]
pub struct IsoClassReport {
    pub order: usize,
    /// Pairwise non-isomorphic, in canonical order (invariant vector, then
    /// table bytes), labeled by [`identify`] where possible.
    pub representatives: Vec<Group>,
    pub count: usize,
    pub stats: SearchStats,
}

const EMPTY: i8 = -1;

struct Searcher {
    n: usize,
    opts: SearchOptions,
    table: Vec<i8>,
    row_used: Vec<u32>,
    col_used: Vec<u32>,
    trail: Vec<u16>,
    stats: SearchStats,
    reps: Vec<Group>,
    buckets: HashMap<IsoKey, Vec<usize>>,
}

impl Searcher {
    fn new(n: usize, opts: SearchOptions) -> Self {
        let mut s = Searcher {
            n,
            opts,
            table: vec![EMPTY; n * n],
            row_used: vec![0; n],
            col_used: vec![0; n],
            trail: Vec::with_capacity(n * n),
            stats: SearchStats::default(),
            reps: Vec::new(),
            buckets: HashMap::new(),
        };
        for a in 0..n {
            s.table[a] = a as i8;
            s.table[a * n] = a as i8;
            s.row_used[0] |= 1 << a;
            s.col_used[0] |= 1 << a;
            if a > 0 {
                s.row_used[a] |= 1 << a; // value a sits at column 0
                s.col_used[a] |= 1 << a; // value a sits at row 0
            }
        }
        s
    }

    #[inline]
    fn get(&self, a: usize, b: usize) -> i8 {
        self.table[a * self.n + b]
    }

    fn raw_assign(&mut self, a: usize, b: usize, v: usize) -> bool {
        let cell = a * self.n + b;
        let cur = self.table[cell];
        if cur >= 0 {
            return cur as usize == v;
        }
        let bit = 1u32 << v;
        if self.row_used[a] & bit != 0 || self.col_used[b] & bit != 0 {
            return false;
        }
        if self.opts.symmetry_pruning && a == 1 {
            // Row-1 staircase: a fresh label may only be the next one.
            if v > b + 1 {
                return false;
            }
            // Even order: element 1 can be taken to be an involution.
            if b == 1 && self.n % 2 == 0 && v != 0 {
                return false;
            }
        }
        self.table[cell] = v as i8;
        self.row_used[a] |= bit;
        self.col_used[b] |= bit;
        self.trail.push(cell as u16);
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let cell = self.trail.pop().unwrap() as usize;
            let v = self.table[cell] as usize;
            let (a, b) = (cell / self.n, cell % self.n);
            self.table[cell] = EMPTY;
            self.row_used[a] &= !(1u32 << v);
            self.col_used[b] &= !(1u32 << v);
        }
    }

    /// Two cells must hold the same value: check when both are known,
    /// propagate when exactly one is.
    fn unify(&mut self, p: (usize, usize), q: (usize, usize)) -> bool {
        let vp = self.get(p.0, p.1);
        let vq = self.get(q.0, q.1);
        match (vp >= 0, vq >= 0) {
            (true, true) => vp == vq,
            (true, false) => !self.opts.propagate || self.raw_assign(q.0, q.1, vp as usize),
            (false, true) => !self.opts.propagate || self.raw_assign(p.0, p.1, vq as usize),
            (false, false) => true,
        }
    }

    fn set_or_check(&mut self, a: usize, b: usize, v: usize) -> bool {
        let cur = self.get(a, b);
        if cur >= 0 {
            cur as usize == v
        } else {
            !self.opts.propagate || self.raw_assign(a, b, v)
        }
    }

    /// Associativity consequences of the newly filled cell (a, b) = v.
    /// Together the four rules check every triple once its last cell fills.
    fn fire_rules(&mut self, a: usize, b: usize, v: usize) -> bool {
        let n = self.n;
        for z in 1..n {
            // (a, b, z): (a.b).z = a.(b.z)
            let w = self.get(b, z);
            if w >= 0 && !self.unify((v, z), (a, w as usize)) {
                return false;
            }
            // (z, a, b): (z.a).b = z.(a.b)
            let u = self.get(z, a);
            if u >= 0 && !self.unify((u as usize, b), (z, v)) {
                return false;
            }
        }
        for x in 1..n {
            for y in 1..n {
                let t = self.get(x, y);
                if t < 0 {
                    continue;
                }
                let t = t as usize;
                // (x, y, b) with x.y = a: v = (x.y).b = x.(y.b)
                if t == a {
                    let yb = self.get(y, b);
                    if yb >= 0 && !self.set_or_check(x, yb as usize, v) {
                        return false;
                    }
                }
                // (a, x, y) with x.y = b: v = a.(x.y) = (a.x).y
                if t == b {
                    let ax = self.get(a, x);
                    if ax >= 0 && !self.set_or_check(ax as usize, y, v) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn assign_and_propagate(&mut self, a: usize, b: usize, v: usize) -> bool {
        let start = self.trail.len();
        if !self.raw_assign(a, b, v) {
            return false;
        }
        let mut qi = start;
        while qi < self.trail.len() {
            let cell = self.trail[qi] as usize;
            let (x, y) = (cell / self.n, cell % self.n);
            let w = self.table[cell] as usize;
            if !self.fire_rules(x, y, w) {
                return false;
            }
            qi += 1;
        }
        true
    }

    fn search(&mut self, from: usize) {
        let n = self.n;
        let mut cell = from;
        while cell < n * n && self.table[cell] >= 0 {
            cell += 1;
        }
        if cell == n * n {
            self.complete();
            return;
        }
        self.stats.nodes += 1;
        let (a, b) = (cell / n, cell % n);
        for v in 0..n {
            let mark = self.trail.len();
            if self.assign_and_propagate(a, b, v) {
                self.search(cell + 1);
            }
            self.undo_to(mark);
        }
    }

    fn complete(&mut self) {
        self.stats.completed += 1;
        let flat: Vec<u16> = self.table.iter().map(|&v| v as u16).collect();
        let g = Group::from_flat(self.n, flat, None)
            .expect("the search only completes valid group tables");
        let key = iso_key(&g);
        if let Some(bucket) = self.buckets.get(&key) {
            for &i in bucket {
                if structure::are_isomorphic(&g, &self.reps[i])
                    .expect("enumeration orders are far below the iso cap")
                {
                    self.stats.iso_rejections += 1;
                    return;
                }
            }
        }
        self.buckets.entry(key).or_default().push(self.reps.len());
        self.reps.push(g);
    }
}

/// Enumerates all groups of order n up to isomorphism. Orders above 12
/// require `allow_large` (hard cap 16).
pub fn enumerate_groups(n: usize, allow_large: bool) -> Result<IsoClassReport, EnumerationError> {
    enumerate_groups_with(n, allow_large, SearchOptions::default())
}

pub fn enumerate_groups_with(
    n: usize,
    allow_large: bool,
    opts: SearchOptions,
) -> Result<IsoClassReport, EnumerationError> {
    if n == 0 || n > ENUM_HARD_CAP {
        return Err(EnumerationError::OutOfRange(n));
    }
    if n > ENUM_DEFAULT_CAP && !allow_large {
        return Err(EnumerationError::NeedsOptIn(n));
    }
    let mut searcher = Searcher::new(n, opts);
    searcher.search(0);
    let mut reps = std::mem::take(&mut searcher.reps);
    reps.sort_by(|a, b| {
        iso_key(a).cmp(&iso_key(b)).then_with(|| a.flat_table().cmp(b.flat_table()))
    });
    let mut unknown = 0usize;
    let reps: Vec<Group> = reps
        .into_iter()
        .map(|g| {
            let name = identify(&g).unwrap_or_else(|| {
                unknown += 1;
                format!("UNKNOWN(order={n},#{unknown})")
            });
            g.with_label(name)
        })
        .collect();
    Ok(IsoClassReport { order: n, count: reps.len(), representatives: reps, stats: searcher.stats })
}

/// Number of isomorphism classes of groups of order n.
pub fn count_groups(n: usize, allow_large: bool) -> Result<usize, EnumerationError> {
    Ok(enumerate_groups(n, allow_large)?.count)
}

/// Names a group by iso-testing against a fixed candidate list: cyclic,
/// dihedral, dicyclic, elementary abelian, S(3), A(4), then the ext16
/// family. First hit wins.
pub fn identify(g: &Group) -> Option<String> {
    let n = g.order();
    let mut candidates: Vec<Group> = Vec::new();
    if let Ok(c) = construct::cyclic(n) {
        candidates.push(c);
    }
    if n % 2 == 0 {
        if let Ok(d) = construct::dihedral(n) {
            candidates.push(d);
        }
    }
    if n % 4 == 0 && n >= 8 {
        if let Ok(q) = construct::dicyclic(n) {
            candidates.push(q);
        }
    }
    let factors = crate::census::prime_factorization(n);
    if factors.len() == 1 {
        let (p, k) = factors[0];
        if let Ok(e) = construct::elementary_abelian(p, k) {
            candidates.push(e);
        }
    }
    if n == 6 {
        candidates.push(construct::symmetric(3).expect("S(3)"));
    }
    if n == 12 {
        candidates.push(construct::alternating(4).expect("A(4)"));
    }
    if n == 16 {
        for e in [1i32, -1] {
            for f in [0u32, 1] {
                candidates.push(construct::ext16(e, f).expect("ext16"));
            }
        }
    }
    for cand in candidates {
        match structure::isomorphism(g, &cand) {
            Ok(Some(_)) => return Some(cand.label_or_default()),
            Ok(None) => continue,
            Err(_) => continue, // beyond the iso cap: leave unidentified
        }
    }
    None
}

/// A group matching a deficiency scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanHit {
    pub order: usize,
    pub name: String,
    pub delta: usize,
}

/// Scans all isomorphism classes of orders 1..=max_order for a given
/// deficiency, via enumeration.
pub fn scan_enumerated(
    max_order: usize,
    delta: usize,
    allow_large: bool,
) -> Result<Vec<ScanHit>, EnumerationError> {
    let mut hits = Vec::new();
    for order in 1..=max_order {
        let report = enumerate_groups(order, allow_large)?;
        for rep in &report.representatives {
            let c = census(rep);
            if c.delta == delta {
                hits.push(ScanHit { order, name: rep.label_or_default(), delta });
            }
        }
    }
    Ok(hits)
}

/// Scans a list of labeled groups (a corpus) for a given deficiency.
/// Censuses run in parallel; output is sorted by (order, label) and each
/// hit is re-identified against the construction library.
pub fn scan_groups(entries: &[(String, Group)], delta: usize) -> Vec<ScanHit> {
    use rayon::prelude::*;
    let mut matched: Vec<(usize, &String, &Group)> = entries
        .par_iter()
        .filter_map(|(label, g)| (census(g).delta == delta).then_some((g.order(), label, g)))
        .collect();
    matched.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
    let mut unknown_at: HashMap<usize, usize> = HashMap::new();
    matched
        .into_iter()
        .map(|(order, _, g)| {
            let name = identify(g).unwrap_or_else(|| {
                let k = unknown_at.entry(order).or_insert(0);
                *k += 1;
                format!("UNKNOWN(order={order},#{k})")
            });
            ScanHit { order, name, delta }
        })
        .collect()
}
