//! Groups as validated multiplication tables over element indices.
//!
//! Index 0 is always the identity. A [`Group`] is immutable after
//! construction and every constructor in this crate goes through the same
//! validation: closure, identity at index 0, the Latin-square property,
//! associativity (Light's test over a generating set), and two-sided
//! inverses. All operations are pure, so values can be shared freely across
//! threads.

use std::fmt;
use thiserror::Error;

/// Hard cap on the order of a table group.
pub const MAX_ORDER: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("table is empty")]
    EmptyTable,
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("order {order} exceeds the supported maximum {max}")]
    TooLarge { order: usize, max: usize },
    #[error("entry table[{row}][{col}] = {value} is outside 0..{order}")]
    NotClosed { row: usize, col: usize, value: usize, order: usize },
    #[error("index 0 is not the identity: table[{row}][{col}] = {value}")]
    NoIdentityAtZero { row: usize, col: usize, value: usize },
    #[error("{axis} {index} is not a permutation: value {value} repeats")]
    NotLatin { axis: &'static str, index: usize, value: usize },
    #[error("associativity fails on the triple ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("bad table serialization: {0}")]
    BadFormat(String),
}

/// A finite group given by its full multiplication table.
///
/// `table[a * n + b]` is the index of `a · b`; index 0 is the identity.
#[derive(Clone)]
pub struct Group {
    n: usize,
    table: Vec<u16>,
    inverse: Vec<u16>,
    label: Option<String>,
}

impl PartialEq for Group {
    /// Labels are display metadata; equality is table equality.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.table == other.table
    }
}
impl Eq for Group {}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.label {
            Some(l) => write!(f, "Group({}, order {})", l, self.n),
            None => write!(f, "Group(order {})", self.n),
        }
    }
}

impl Group {
    /// Validates a multiplication table and builds the group.
    ///
    /// Checks run in order: shape, closure, identity at 0, Latin square,
    /// associativity, inverses. The first violation is reported.
    pub fn from_table(rows: Vec<Vec<usize>>, label: Option<&str>) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::EmptyTable);
        }
        if n > MAX_ORDER {
            return Err(GroupError::TooLarge { order: n, max: MAX_ORDER });
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotSquare { row: i, len: row.len(), expected: n });
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::NotClosed { row: i, col: j, value: v, order: n });
                }
                flat.push(v as u16);
            }
        }
        Self::from_flat(n, flat, label.map(str::to_owned))
    }

    pub(crate) fn from_flat(
        n: usize,
        table: Vec<u16>,
        label: Option<String>,
    ) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::EmptyTable);
        }
        if n > MAX_ORDER {
            return Err(GroupError::TooLarge { order: n, max: MAX_ORDER });
        }
        assert_eq!(table.len(), n * n, "flat table length mismatch");
        for (idx, &v) in table.iter().enumerate() {
            if (v as usize) >= n {
                return Err(GroupError::NotClosed {
                    row: idx / n,
                    col: idx % n,
                    value: v as usize,
                    order: n,
                });
            }
        }
        let at = |a: usize, b: usize| table[a * n + b] as usize;

        for a in 0..n {
            if at(0, a) != a {
                return Err(GroupError::NoIdentityAtZero { row: 0, col: a, value: at(0, a) });
            }
            if at(a, 0) != a {
                return Err(GroupError::NoIdentityAtZero { row: a, col: 0, value: at(a, 0) });
            }
        }

        // Latin square: every row and column is a permutation.
        let mut stamp = vec![usize::MAX; n];
        for r in 0..n {
            for c in 0..n {
                let v = at(r, c);
                if stamp[v] == r {
                    return Err(GroupError::NotLatin { axis: "row", index: r, value: v });
                }
                stamp[v] = r;
            }
        }
        let mut stamp = vec![usize::MAX; n];
        for c in 0..n {
            for r in 0..n {
                let v = at(r, c);
                if stamp[v] == c {
                    return Err(GroupError::NotLatin { axis: "column", index: c, value: v });
                }
                stamp[v] = c;
            }
        }

        // Light's associativity test: once the table is a Latin square, it
        // suffices to check triples whose middle element runs over a
        // generating set of the magma.
        let mut gens: Vec<usize> = Vec::new();
        let mut in_closure = vec![false; n];
        in_closure[0] = true;
        let mut closure = vec![0usize];
        let mut next = 1;
        loop {
            while next < n && in_closure[next] {
                next += 1;
            }
            if next == n {
                break;
            }
            gens.push(next);
            in_closure[next] = true;
            closure.push(next);
            let mut i = 0;
            while i < closure.len() {
                let x = closure[i];
                let mut j = 0;
                while j < closure.len() {
                    let y = closure[j];
                    for p in [at(x, y), at(y, x)] {
                        if !in_closure[p] {
                            in_closure[p] = true;
                            closure.push(p);
                        }
                    }
                    j += 1;
                }
                i += 1;
            }
        }
        for &g in &gens {
            for a in 0..n {
                let ag = at(a, g);
                for b in 0..n {
                    if at(ag, b) != at(a, at(g, b)) {
                        return Err(GroupError::NotAssociative { a, b: g, c: b });
                    }
                }
            }
        }

        let mut inverse = vec![0u16; n];
        for a in 0..n {
            let mut right = None;
            for b in 0..n {
                if at(a, b) == 0 {
                    right = Some(b);
                    break;
                }
            }
            match right {
                Some(b) if at(b, a) == 0 => inverse[a] = b as u16,
                _ => return Err(GroupError::NoInverse { element: a }),
            }
        }

        Ok(Group { n, table, inverse, label })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// Label if set, otherwise `G<order>`.
    pub fn label_or_default(&self) -> String {
        self.label.clone().unwrap_or_else(|| format!("G{}", self.n))
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        assert!(a < self.n && b < self.n, "element index out of range");
        self.table[a * self.n + b] as usize
    }

    #[inline]
    pub fn inverse_of(&self, a: usize) -> usize {
        assert!(a < self.n, "element index out of range");
        self.inverse[a] as usize
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Smallest k >= 1 with a^k = identity.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.n).map(|a| self.element_order(a)).collect()
    }

    /// a^k by square-and-multiply; negative exponents use the inverse.
    pub fn power(&self, a: usize, k: i64) -> usize {
        let (mut base, mut e) = if k < 0 {
            (self.inverse_of(a), k.unsigned_abs())
        } else {
            (a, k as u64)
        };
        let mut acc = 0usize;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> usize {
        (0..self.n).fold(1usize, |acc, a| lcm(acc, self.element_order(a)))
    }

    /// Smallest subgroup containing the generators (closure under the table).
    pub fn generated_subgroup(&self, generators: &[usize]) -> ElementSet {
        let mut set = ElementSet::empty(self.n);
        set.insert(0);
        let mut members = vec![0usize];
        for &g in generators {
            assert!(g < self.n, "generator index out of range");
            if set.insert(g) {
                members.push(g);
            }
        }
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            let mut j = 0;
            while j < members.len() {
                let y = members[j];
                for p in [self.mul(x, y), self.mul(y, x)] {
                    if set.insert(p) {
                        members.push(p);
                    }
                }
                j += 1;
            }
            i += 1;
        }
        set
    }

    /// g^{-1} · a · g.
    pub fn conjugate(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(self.inverse_of(g), a), g)
    }

    pub fn is_abelian(&self) -> bool {
        for a in 1..self.n {
            for b in a + 1..self.n {
                if self.mul(a, b) != self.mul(b, a) {
                    return false;
                }
            }
        }
        true
    }

    /// Applies a relabeling with `perm[0] == 0`: `new[p(a)][p(b)] = p(old[a][b])`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Group, GroupError> {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        assert_eq!(perm[0], 0, "relabeling must fix the identity");
        let mut seen = vec![false; self.n];
        for &p in perm {
            assert!(p < self.n && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let mut flat = vec![0u16; self.n * self.n];
        for a in 0..self.n {
            for b in 0..self.n {
                flat[perm[a] * self.n + perm[b]] = perm[self.mul(a, b)] as u16;
            }
        }
        Group::from_flat(self.n, flat, self.label.clone())
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|a| (0..self.n).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    pub(crate) fn flat_table(&self) -> &[u16] {
        &self.table
    }

    /// Serializes as `n=<order> label=<label>` followed by n table rows.
    pub fn to_table_string(&self) -> String {
        let mut out = format!("n={} label={}\n", self.n, self.label_or_default());
        for a in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|b| self.mul(a, b).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the format produced by [`Group::to_table_string`].
    pub fn from_table_string(s: &str) -> Result<Group, GroupError> {
        let mut lines = s.lines();
        let header = lines.next().ok_or_else(|| GroupError::BadFormat("empty input".into()))?;
        let mut n = None;
        let mut label = None;
        for tok in header.split_whitespace() {
            if let Some(v) = tok.strip_prefix("n=") {
                n = Some(
                    v.parse::<usize>()
                        .map_err(|e| GroupError::BadFormat(format!("bad order: {e}")))?,
                );
            } else if let Some(v) = tok.strip_prefix("label=") {
                label = Some(v.to_string());
            }
        }
        let n = n.ok_or_else(|| GroupError::BadFormat("missing n= in header".into()))?;
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let line = lines.next().ok_or_else(|| GroupError::BadFormat("missing table row".into()))?;
            let row: Result<Vec<usize>, _> = line.split_whitespace().map(str::parse).collect();
            rows.push(row.map_err(|e| GroupError::BadFormat(format!("bad entry: {e}")))?);
        }
        Group::from_table(rows, label.as_deref())
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// A subset of a group's elements as a membership bit vector.
///
/// Used for subgroups, centers, centralizers and the like. Ordering is by
/// owner order, then size, then lexicographic bit order, which gives the
/// canonical sort used throughout.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    n: usize,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(n: usize) -> Self {
        ElementSet { n, words: vec![0; n.div_ceil(64)] }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    pub fn from_members(n: usize, members: &[usize]) -> Self {
        let mut s = Self::empty(n);
        for &m in members {
            assert!(m < n, "member out of range");
            s.insert(m);
        }
        s
    }

    /// Order of the group this set lives in.
    pub fn owner_order(&self) -> usize {
        self.n
    }

    /// Inserts and reports whether the element was new.
    pub fn insert(&mut self, i: usize) -> bool {
        debug_assert!(i < self.n);
        let w = &mut self.words[i / 64];
        let bit = 1u64 << (i % 64);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.n && self.words[i / 64] & (1u64 << (i % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn members(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        assert_eq!(self.n, other.n);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect();
        ElementSet { n: self.n, words }
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        assert_eq!(self.n, other.n);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        ElementSet { n: self.n, words }
    }

    pub fn is_subset_of(&self, other: &ElementSet) -> bool {
        self.n == other.n && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Full subgroup validation: identity, closure under product and
    /// inverse, and the Lagrange divisibility check.
    pub fn is_subgroup_of(&self, g: &Group) -> bool {
        if self.n != g.order() || !self.contains(0) {
            return false;
        }
        let members = self.members();
        if g.order() % members.len() != 0 {
            return false;
        }
        for &x in &members {
            if !self.contains(g.inverse_of(x)) {
                return false;
            }
            for &y in &members {
                if !self.contains(g.mul(x, y)) {
                    return false;
                }
            }
        }
        true
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.len().cmp(&other.len()))
            .then_with(|| {
                // Lexicographic over sorted member lists: at the first
                // differing element, the set containing it sorts first.
                for (a, b) in self.words.iter().zip(&other.words) {
                    if a != b {
                        return b.reverse_bits().cmp(&a.reverse_bits());
                    }
                }
                std::cmp::Ordering::Equal
            })
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}
