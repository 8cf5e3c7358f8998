//! Subgroup-level machinery: center, centralizers, normality, commutator
//! subgroup, the full subgroup lattice, Frattini and Sylow subgroups,
//! subgroup extraction, isomorphism testing, and generating sets.

use std::collections::HashSet;

use thiserror::Error;

use crate::census::{is_prime, prime_factorization};
use crate::construct::Morphism;
use crate::group::{ElementSet, Group};

/// Order cap for lattice-based operations.
pub const LATTICE_CAP: usize = 256;
/// Order cap for isomorphism testing.
pub const ISO_CAP: usize = 512;
/// Order cap for full automorphism enumeration.
pub const AUT_CAP: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("order {order} exceeds the cap {cap} for this operation")]
    CapExceeded { order: usize, cap: usize },
    #[error("the given set is not a subgroup")]
    NotSubgroup,
    #[error("{0} is not prime")]
    NotPrime(usize),
}

/// Elements commuting with everything.
pub fn center(g: &Group) -> ElementSet {
    let mut z = ElementSet::empty(g.order());
    for a in g.elements() {
        if g.elements().all(|x| g.mul(a, x) == g.mul(x, a)) {
            z.insert(a);
        }
    }
    z
}

/// Elements commuting with x; always contains `<x>`.
pub fn centralizer(g: &Group, x: usize) -> ElementSet {
    let mut c = ElementSet::empty(g.order());
    for a in g.elements() {
        if g.mul(a, x) == g.mul(x, a) {
            c.insert(a);
        }
    }
    c
}

/// Conjugation-closure test for a subgroup.
pub fn is_normal(g: &Group, h: &ElementSet) -> Result<bool, StructureError> {
    if !h.is_subgroup_of(g) {
        return Err(StructureError::NotSubgroup);
    }
    for x in g.elements() {
        for m in h.iter() {
            if !h.contains(g.conjugate(m, x)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Largest subgroup in which h is normal.
pub fn normalizer(g: &Group, h: &ElementSet) -> Result<ElementSet, StructureError> {
    if !h.is_subgroup_of(g) {
        return Err(StructureError::NotSubgroup);
    }
    let mut n = ElementSet::empty(g.order());
    for x in g.elements() {
        if h.iter().all(|m| h.contains(g.conjugate(m, x))) {
            n.insert(x);
        }
    }
    Ok(n)
}

/// Closure of all commutators a^{-1} b^{-1} a b.
pub fn commutator_subgroup(g: &Group) -> ElementSet {
    let mut comms = ElementSet::empty(g.order());
    for a in g.elements() {
        for b in g.elements() {
            let c = g.mul(g.mul(g.inverse_of(a), g.inverse_of(b)), g.mul(a, b));
            comms.insert(c);
        }
    }
    g.generated_subgroup(&comms.members())
}

/// Closure of a subgroup and one extra element via right-coset search.
/// `base_gens` must generate `base`.
pub(crate) fn extend_subgroup(
    g: &Group,
    base: &ElementSet,
    base_gens: &[usize],
    x: usize,
) -> ElementSet {
    if base.contains(x) {
        return base.clone();
    }
    let base_members = base.members();
    let mut gens: Vec<usize> = base_gens.to_vec();
    gens.push(x);
    let mut k = base.clone();
    for &h in &base_members {
        k.insert(g.mul(h, x));
    }
    let mut reps = vec![0usize, x];
    let mut qi = 0;
    while qi < reps.len() {
        let w = reps[qi];
        for &gg in &gens {
            let y = g.mul(w, gg);
            if !k.contains(y) {
                for &h in &base_members {
                    k.insert(g.mul(h, y));
                }
                reps.push(y);
            }
        }
        qi += 1;
    }
    k
}

/// All subgroups of G plus the strict-inclusion relation.
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    /// Sorted by size, then lexicographic bit order.
    pub subgroups: Vec<ElementSet>,
    /// Pairs (i, j) with `subgroups[i]` a proper subgroup of `subgroups[j]`.
    pub inclusions: Vec<(usize, usize)>,
}

impl SubgroupLattice {
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    /// Indices of the maximal proper subgroups.
    pub fn maximal_proper(&self) -> Vec<usize> {
        let n = self.subgroups.last().map(|s| s.len()).unwrap_or(0);
        (0..self.subgroups.len())
            .filter(|&i| self.subgroups[i].len() < n)
            .filter(|&i| {
                !self
                    .inclusions
                    .iter()
                    .any(|&(a, b)| a == i && self.subgroups[b].len() < n)
            })
            .collect()
    }
}

/// Computes every subgroup by seeding with the cyclic subgroups and closing
/// under joins with cyclic seeds to a fixed point.
pub fn subgroup_lattice(g: &Group) -> Result<SubgroupLattice, StructureError> {
    if g.order() > LATTICE_CAP {
        return Err(StructureError::CapExceeded { order: g.order(), cap: LATTICE_CAP });
    }
    // One generator per cyclic subgroup.
    let mut seen_cyclic: HashSet<ElementSet> = HashSet::new();
    let mut seeds: Vec<(ElementSet, usize)> = Vec::new();
    for x in g.elements() {
        let s = g.generated_subgroup(&[x]);
        if seen_cyclic.insert(s.clone()) {
            seeds.push((s, x));
        }
    }
    let mut known: HashSet<ElementSet> = seeds.iter().map(|(s, _)| s.clone()).collect();
    let mut worklist: Vec<(ElementSet, Vec<usize>)> =
        seeds.iter().map(|(s, x)| (s.clone(), vec![*x])).collect();
    while let Some((h, h_gens)) = worklist.pop() {
        for (s_set, s_gen) in &seeds {
            if s_set.is_subset_of(&h) {
                continue;
            }
            let k = extend_subgroup(g, &h, &h_gens, *s_gen);
            if known.insert(k.clone()) {
                let mut gens = h_gens.clone();
                gens.push(*s_gen);
                worklist.push((k, gens));
            }
        }
    }
    let mut subgroups: Vec<ElementSet> = known.into_iter().collect();
    subgroups.sort();
    let mut inclusions = Vec::new();
    for i in 0..subgroups.len() {
        for j in 0..subgroups.len() {
            if i != j
                && subgroups[i].len() < subgroups[j].len()
                && subgroups[i].is_subset_of(&subgroups[j])
            {
                inclusions.push((i, j));
            }
        }
    }
    Ok(SubgroupLattice { subgroups, inclusions })
}

/// Intersection of all maximal proper subgroups.
pub fn frattini(g: &Group) -> Result<ElementSet, StructureError> {
    let lat = subgroup_lattice(g)?;
    let maximal = lat.maximal_proper();
    let mut phi = ElementSet::full(g.order());
    for i in maximal {
        phi = phi.intersection(&lat.subgroups[i]);
    }
    Ok(phi)
}

fn p_part(n: usize, p: usize) -> usize {
    let mut part = 1;
    let mut m = n;
    while m % p == 0 {
        part *= p;
        m /= p;
    }
    part
}

fn is_p_power(mut m: usize, p: usize) -> bool {
    while m % p == 0 {
        m /= p;
    }
    m == 1
}

/// A Sylow p-subgroup. Within the lattice cap the lattice answer is taken;
/// beyond it a greedy closure of p-elements is used. Returns the trivial
/// subgroup when p does not divide |G|.
pub fn sylow(g: &Group, p: usize) -> Result<ElementSet, StructureError> {
    if !is_prime(p) {
        return Err(StructureError::NotPrime(p));
    }
    if g.order() % p != 0 {
        return Ok(ElementSet::from_members(g.order(), &[0]));
    }
    let target = p_part(g.order(), p);
    if g.order() <= LATTICE_CAP {
        let lat = subgroup_lattice(g)?;
        Ok(lat
            .subgroups
            .iter()
            .find(|s| s.len() == target)
            .cloned()
            .expect("a Sylow subgroup always exists"))
    } else {
        Ok(sylow_greedy(g, p, target))
    }
}

/// Greedy deterministic p-closure: repeatedly adjoin the first p-element
/// that keeps the closure a p-group.
pub(crate) fn sylow_greedy(g: &Group, p: usize, target: usize) -> ElementSet {
    let p_elements: Vec<usize> =
        g.elements().filter(|&x| x != 0 && is_p_power(g.element_order(x), p)).collect();
    let mut h = ElementSet::from_members(g.order(), &[0]);
    let mut gens: Vec<usize> = Vec::new();
    while h.len() < target {
        let mut progressed = false;
        for &x in &p_elements {
            if h.contains(x) {
                continue;
            }
            let k = extend_subgroup(g, &h, &gens, x);
            if is_p_power(k.len(), p) {
                h = k;
                gens.push(x);
                progressed = true;
                break;
            }
        }
        if !progressed {
            break;
        }
    }
    h
}

/// Re-indexed Cayley table of a subgroup, elements in ascending original
/// index (so the identity stays at 0).
pub fn subgroup_as_group(g: &Group, h: &ElementSet) -> Result<Group, StructureError> {
    if !h.is_subgroup_of(g) {
        return Err(StructureError::NotSubgroup);
    }
    let members = h.members();
    let index_of: std::collections::HashMap<usize, usize> =
        members.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let k = members.len();
    let mut flat = vec![0u16; k * k];
    for (i, &a) in members.iter().enumerate() {
        for (j, &b) in members.iter().enumerate() {
            flat[i * k + j] = index_of[&g.mul(a, b)] as u16;
        }
    }
    Ok(Group::from_flat(k, flat, None).expect("subgroup table is a group"))
}

/// Greedy generating set: repeatedly adjoin the smallest element outside the
/// closure. At most log2 |G| generators.
fn greedy_generating_set(g: &Group) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut closure = ElementSet::from_members(g.order(), &[0]);
    loop {
        match g.elements().find(|&x| !closure.contains(x)) {
            None => return gens,
            Some(x) => {
                closure = extend_subgroup(g, &closure, &gens, x);
                gens.push(x);
            }
        }
    }
}

/// Exact lower bound on the number of generators.
fn generator_lower_bound(g: &Group) -> usize {
    let n = g.order();
    if n == 1 {
        return 0;
    }
    if g.elements().any(|x| g.element_order(x) == n) {
        return 1;
    }
    if g.is_abelian() {
        // Rank of an abelian group: max over p of the p-socle dimension.
        let mut best = 2;
        for (p, _) in prime_factorization(n) {
            let socle = g.elements().filter(|&x| {
                let o = g.element_order(x);
                o == 1 || o == p
            }).count();
            let mut m = socle;
            let mut r = 0;
            while m > 1 {
                m /= p;
                r += 1;
            }
            best = best.max(r);
        }
        best
    } else {
        2
    }
}

/// Exhaustive search for a generating set of exactly `size` elements.
/// Explores join-closures with deduplication; candidate order is ascending,
/// so the first solution is deterministic.
fn search_generating_set(g: &Group, size: usize) -> Option<Vec<usize>> {
    let n = g.order();
    let mut visited: HashSet<(usize, ElementSet)> = HashSet::new();
    fn rec(
        g: &Group,
        size: usize,
        chosen: &mut Vec<usize>,
        closure: &ElementSet,
        visited: &mut HashSet<(usize, ElementSet)>,
    ) -> Option<Vec<usize>> {
        if closure.len() == g.order() {
            return (chosen.len() == size).then(|| chosen.clone());
        }
        if chosen.len() == size {
            return None;
        }
        if !visited.insert((chosen.len(), closure.clone())) {
            return None;
        }
        for x in g.elements() {
            if closure.contains(x) {
                continue;
            }
            let k = extend_subgroup(g, closure, chosen, x);
            chosen.push(x);
            if let Some(found) = rec(g, size, chosen, &k, visited) {
                return Some(found);
            }
            chosen.pop();
        }
        None
    }
    let closure = ElementSet::from_members(n, &[0]);
    rec(g, size, &mut Vec::new(), &closure, &mut visited)
}

/// A generating set of minimum size; deterministic for a given table.
pub fn minimal_generating_set(g: &Group) -> Vec<usize> {
    if g.order() == 1 {
        return Vec::new();
    }
    let greedy = greedy_generating_set(g);
    let lb = generator_lower_bound(g);
    if greedy.len() <= lb {
        return greedy;
    }
    for size in lb..greedy.len() {
        if let Some(found) = search_generating_set(g, size) {
            return found;
        }
    }
    greedy
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct IsoKey {
    order: usize,
    abelian: bool,
    spectrum: Vec<(usize, usize)>,
    center: usize,
    derived: usize,
}

pub(crate) fn iso_key(g: &Group) -> IsoKey {
    let mut counts: std::collections::BTreeMap<usize, usize> = Default::default();
    for x in g.elements() {
        *counts.entry(g.element_order(x)).or_insert(0) += 1;
    }
    IsoKey {
        order: g.order(),
        abelian: g.is_abelian(),
        spectrum: counts.into_iter().collect(),
        center: center(g).len(),
        derived: commutator_subgroup(g).len(),
    }
}

/// Extends generator images to a full map A -> B along the Cayley graph,
/// checking consistency and injectivity. None on conflict.
fn extend_iso_map(
    a: &Group,
    b: &Group,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<Option<usize>>> {
    let n = a.order();
    let mut map: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; b.order()];
    map[0] = Some(0);
    used[0] = true;
    let mut reached = vec![0usize];
    for (&g, &im) in gens.iter().zip(images) {
        match map[g] {
            Some(prev) if prev != im => return None,
            Some(_) => {}
            None => {
                if used[im] {
                    return None;
                }
                map[g] = Some(im);
                used[im] = true;
                reached.push(g);
            }
        }
    }
    let mut i = 0;
    while i < reached.len() {
        let x = reached[i];
        let xi = map[x].unwrap();
        for (&g, &gi) in gens.iter().zip(images) {
            let y = a.mul(x, g);
            let yi = b.mul(xi, gi);
            match map[y] {
                Some(prev) => {
                    if prev != yi {
                        return None;
                    }
                }
                None => {
                    if used[yi] {
                        return None;
                    }
                    map[y] = Some(yi);
                    used[yi] = true;
                    reached.push(y);
                }
            }
        }
        i += 1;
    }
    Some(map)
}

/// Backtracking over generator images; returns true to stop the search.
#[allow(clippy::too_many_arguments)]
fn iso_search(
    a: &Group,
    b: &Group,
    gens: &[usize],
    gen_orders: &[usize],
    b_orders: &[usize],
    depth: usize,
    images: &mut Vec<usize>,
    out: &mut Vec<Morphism>,
    stop_at_first: bool,
) -> bool {
    if depth == gens.len() {
        if let Some(map) = extend_iso_map(a, b, gens, images) {
            if map.iter().all(Option::is_some) {
                let full: Vec<usize> = map.into_iter().map(Option::unwrap).collect();
                debug_assert!((0..a.order()).all(|x| {
                    (0..a.order()).all(|y| full[a.mul(x, y)] == b.mul(full[x], full[y]))
                }));
                out.push(Morphism::from_images_unchecked(a.order(), b.order(), full));
                return stop_at_first;
            }
        }
        return false;
    }
    for cand in 0..b.order() {
        if b_orders[cand] != gen_orders[depth] {
            continue;
        }
        images.push(cand);
        // The chosen prefix must already extend consistently.
        if extend_iso_map(a, b, &gens[..=depth], images).is_some()
            && iso_search(a, b, gens, gen_orders, b_orders, depth + 1, images, out, stop_at_first)
        {
            images.pop();
            return true;
        }
        images.pop();
    }
    false
}

/// Finds an isomorphism A -> B if one exists: invariant prefilter followed
/// by backtracking over images of a minimal generating set of A, candidates
/// in ascending index order.
pub fn isomorphism(a: &Group, b: &Group) -> Result<Option<Morphism>, StructureError> {
    for g in [a, b] {
        if g.order() > ISO_CAP {
            return Err(StructureError::CapExceeded { order: g.order(), cap: ISO_CAP });
        }
    }
    if a.order() != b.order() || iso_key(a) != iso_key(b) {
        return Ok(None);
    }
    let gens = minimal_generating_set(a);
    if gens.is_empty() {
        return Ok(Some(Morphism::identity(1)));
    }
    let gen_orders: Vec<usize> = gens.iter().map(|&g| a.element_order(g)).collect();
    let b_orders = b.element_orders();
    let mut images = Vec::new();
    let mut out = Vec::new();
    iso_search(a, b, &gens, &gen_orders, &b_orders, 0, &mut images, &mut out, true);
    Ok(out.into_iter().next())
}

pub fn are_isomorphic(a: &Group, b: &Group) -> Result<bool, StructureError> {
    Ok(isomorphism(a, b)?.is_some())
}

/// All automorphisms by exhaustive witness collection; capped at order 64.
pub fn automorphisms(g: &Group) -> Result<Vec<Morphism>, StructureError> {
    if g.order() > AUT_CAP {
        return Err(StructureError::CapExceeded { order: g.order(), cap: AUT_CAP });
    }
    if g.order() == 1 {
        return Ok(vec![Morphism::identity(1)]);
    }
    let gens = minimal_generating_set(g);
    let gen_orders: Vec<usize> = gens.iter().map(|&x| g.element_order(x)).collect();
    let orders = g.element_orders();
    let mut images = Vec::new();
    let mut all = Vec::new();
    iso_search(g, g, &gens, &gen_orders, &orders, 0, &mut images, &mut all, false);
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{
        alternating, cyclic, dicyclic, dihedral, direct_product, elementary_abelian,
        from_permutations, symmetric,
    };

    #[test]
    fn centers() {
        let c6 = cyclic(6).unwrap();
        assert_eq!(center(&c6).len(), 6);
        assert_eq!(center(&dicyclic(8).unwrap()).len(), 2);
        assert_eq!(center(&symmetric(3).unwrap()).members(), vec![0]);
        // center = intersection of all centralizers
        for g in [dihedral(8).unwrap(), symmetric(4).unwrap()] {
            let mut inter = ElementSet::full(g.order());
            for x in g.elements() {
                inter = inter.intersection(&centralizer(&g, x));
            }
            assert_eq!(inter, center(&g));
        }
    }

    #[test]
    fn centralizers() {
        let d10 = dihedral(10).unwrap();
        assert_eq!(centralizer(&d10, 0).len(), 10);
        for r in 1..5 {
            assert_eq!(centralizer(&d10, r).len(), 5, "rotations commute, reflections invert");
        }
        // Non-central order-3 element of D12 has centralizer of index 2.
        let d12 = dihedral(12).unwrap();
        let x = d12
            .elements()
            .find(|&a| d12.element_order(a) == 3 && !center(&d12).contains(a))
            .unwrap();
        assert_eq!(d12.order() / centralizer(&d12, x).len(), 2);
        for g in [&d10, &d12] {
            for x in g.elements() {
                assert!(g.generated_subgroup(&[x]).is_subset_of(&centralizer(g, x)));
            }
        }
    }

    #[test]
    fn normality() {
        let s3 = symmetric(3).unwrap();
        assert!(is_normal(&s3, &center(&s3)).unwrap());
        let three_cycle = s3.elements().find(|&a| s3.element_order(a) == 3).unwrap();
        let a3 = s3.generated_subgroup(&[three_cycle]);
        assert!(is_normal(&s3, &a3).unwrap(), "index-2 subgroup is normal");
        let transposition = s3.elements().find(|&a| s3.element_order(a) == 2).unwrap();
        let h = s3.generated_subgroup(&[transposition]);
        assert!(!is_normal(&s3, &h).unwrap());
        assert_eq!(normalizer(&s3, &h).unwrap(), h, "self-normalizing");
        let bad = ElementSet::from_members(6, &[0, 1]);
        if !bad.is_subgroup_of(&s3) {
            assert!(is_normal(&s3, &bad).is_err());
        }
    }

    #[test]
    fn commutators() {
        assert_eq!(commutator_subgroup(&cyclic(12).unwrap()).members(), vec![0]);
        let q8 = dicyclic(8).unwrap();
        assert_eq!(commutator_subgroup(&q8), center(&q8));
        let s3 = symmetric(3).unwrap();
        let derived = commutator_subgroup(&s3);
        assert_eq!(derived.len(), 3);
        assert!(derived.iter().all(|x| s3.element_order(x) != 2));
    }

    /// Oracle: all subgroups by scanning every subset (tiny orders only).
    fn brute_force_subgroups(g: &Group) -> Vec<ElementSet> {
        let n = g.order();
        assert!(n <= 16);
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask & 1 == 0 {
                continue;
            }
            let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let set = ElementSet::from_members(n, &members);
            if set.is_subgroup_of(g) {
                out.push(set);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn lattices_match_brute_force() {
        for g in [
            cyclic(7).unwrap(),
            cyclic(12).unwrap(),
            symmetric(3).unwrap(),
            dicyclic(8).unwrap(),
            dihedral(10).unwrap(),
            dihedral(12).unwrap(),
            alternating(4).unwrap(),
            elementary_abelian(2, 3).unwrap(),
        ] {
            let lat = subgroup_lattice(&g).unwrap();
            assert_eq!(lat.subgroups, brute_force_subgroups(&g), "{g:?}");
            // Closed under intersection and contains the extremes.
            assert_eq!(lat.subgroups.first().unwrap().len(), 1);
            assert_eq!(lat.subgroups.last().unwrap().len(), g.order());
            for a in &lat.subgroups {
                for b in &lat.subgroups {
                    let meet = a.intersection(b);
                    assert!(lat.subgroups.contains(&meet));
                }
            }
        }
        assert_eq!(subgroup_lattice(&cyclic(7).unwrap()).unwrap().len(), 2);
        assert_eq!(subgroup_lattice(&dicyclic(8).unwrap()).unwrap().len(), 6);
        assert_eq!(subgroup_lattice(&symmetric(3).unwrap()).unwrap().len(), 6);
    }

    #[test]
    fn frattini_subgroups() {
        assert_eq!(frattini(&cyclic(7).unwrap()).unwrap().members(), vec![0]);
        let q8 = dicyclic(8).unwrap();
        assert_eq!(frattini(&q8).unwrap(), center(&q8));
        let c4xc2 = direct_product(&cyclic(4).unwrap(), &cyclic(2).unwrap()).unwrap();
        let phi = frattini(&c4xc2).unwrap();
        assert_eq!(phi.len(), 2);
        assert!(phi.contains(c4xc2.mul(2, 2)), "Frattini is <x^2>");
        // Frattini is normal and inside every maximal subgroup.
        let lat = subgroup_lattice(&q8).unwrap();
        assert!(is_normal(&q8, &frattini(&q8).unwrap()).unwrap());
        for i in lat.maximal_proper() {
            assert!(frattini(&q8).unwrap().is_subset_of(&lat.subgroups[i]));
        }
    }

    #[test]
    fn sylow_subgroups() {
        let c6 = cyclic(6).unwrap();
        let s = sylow(&c6, 3).unwrap();
        assert_eq!(s.len(), 3);
        let s4 = symmetric(4).unwrap();
        let syl2 = sylow(&s4, 2).unwrap();
        assert_eq!(syl2.len(), 8);
        let as_group = subgroup_as_group(&s4, &syl2).unwrap();
        assert!(are_isomorphic(&as_group, &dihedral(8).unwrap()).unwrap());
        for q in [3usize, 5, 7] {
            let d = dihedral(2 * q).unwrap();
            let sq = sylow(&d, q).unwrap();
            assert_eq!(sq.len(), q);
            assert!(is_normal(&d, &sq).unwrap(), "unique Sylow q-subgroup is normal");
        }
        assert_eq!(sylow(&c6, 5).unwrap().members(), vec![0]);
        assert!(sylow(&c6, 4).is_err());
        // Greedy agrees with the lattice route.
        for g in [s4, dihedral(24).unwrap(), dicyclic(16).unwrap()] {
            for (p, _) in prime_factorization(g.order()) {
                let via_lattice = sylow(&g, p).unwrap().len();
                let greedy = sylow_greedy(&g, p, p_part(g.order(), p)).len();
                assert_eq!(via_lattice, greedy, "p={p} in {g:?}");
                assert_eq!(greedy, p_part(g.order(), p));
            }
        }
    }

    #[test]
    fn subgroup_extraction() {
        let s4 = symmetric(4).unwrap();
        let whole = ElementSet::full(24);
        let again = subgroup_as_group(&s4, &whole).unwrap();
        assert_eq!(crate::census::census(&again), crate::census::census(&s4));
        // Element orders carry over.
        let syl = sylow(&s4, 2).unwrap();
        let h = subgroup_as_group(&s4, &syl).unwrap();
        let members = syl.members();
        for (i, &m) in members.iter().enumerate() {
            assert_eq!(h.element_order(i), s4.element_order(m));
        }
        let bad = ElementSet::from_members(24, &[0, 1, 2]);
        if !bad.is_subgroup_of(&s4) {
            assert!(subgroup_as_group(&s4, &bad).is_err());
        }
    }

    #[test]
    fn minimal_generating_sets() {
        assert_eq!(minimal_generating_set(&cyclic(1).unwrap()), Vec::<usize>::new());
        assert_eq!(minimal_generating_set(&cyclic(12).unwrap()).len(), 1);
        assert_eq!(minimal_generating_set(&dicyclic(8).unwrap()).len(), 2);
        for k in 1..=6u32 {
            let g = elementary_abelian(2, k).unwrap();
            assert_eq!(minimal_generating_set(&g).len(), k as usize, "rank of 2^{k}");
        }
        assert_eq!(minimal_generating_set(&symmetric(4).unwrap()).len(), 2);
        // Deterministic and actually generating.
        let d12 = dihedral(12).unwrap();
        let gens = minimal_generating_set(&d12);
        assert_eq!(gens, minimal_generating_set(&d12));
        assert_eq!(d12.generated_subgroup(&gens).len(), 12);
    }

    /// Oracle: exhaustive element-by-element bijection search with hom
    /// pruning, no invariants, no generating sets.
    fn iso_bruteforce(a: &Group, b: &Group) -> bool {
        if a.order() != b.order() {
            return false;
        }
        let n = a.order();
        fn rec(a: &Group, b: &Group, map: &mut Vec<Option<usize>>, used: &mut Vec<bool>, x: usize) -> bool {
            let n = a.order();
            if x == n {
                return true;
            }
            'cand: for y in 0..n {
                if used[y] {
                    continue;
                }
                map[x] = Some(y);
                used[y] = true;
                for u in 0..=x {
                    for v in 0..=x {
                        let (mu, mv) = (map[u].unwrap(), map[v].unwrap());
                        if let Some(im) = map[a.mul(u, v)] {
                            if im != b.mul(mu, mv) {
                                map[x] = None;
                                used[y] = false;
                                continue 'cand;
                            }
                        }
                    }
                }
                if rec(a, b, map, used, x + 1) {
                    return true;
                }
                map[x] = None;
                used[y] = false;
            }
            false
        }
        let mut map = vec![None; n];
        let mut used = vec![false; n];
        map[0] = Some(0);
        used[0] = true;
        rec(a, b, &mut map, &mut used, 1)
    }

    #[test]
    fn isomorphism_testing() {
        let c4 = cyclic(4).unwrap();
        let v4 = elementary_abelian(2, 2).unwrap();
        assert!(!are_isomorphic(&c4, &v4).unwrap());
        assert!(!are_isomorphic(&dihedral(8).unwrap(), &dicyclic(8).unwrap()).unwrap());
        let perm = from_permutations(5, &[vec![1, 2, 3, 4, 0], vec![0, 4, 3, 2, 1]]).unwrap();
        let witness = isomorphism(&perm, &dihedral(10).unwrap()).unwrap().unwrap();
        assert!(witness.is_bijective());
        // The witness is a genuine homomorphism.
        let d10 = dihedral(10).unwrap();
        for x in perm.elements() {
            for y in perm.elements() {
                assert_eq!(witness.apply(perm.mul(x, y)), d10.mul(witness.apply(x), witness.apply(y)));
            }
        }
    }

    #[test]
    fn isomorphism_is_equivalence_and_matches_bruteforce() {
        let groups = vec![
            cyclic(8).unwrap(),
            elementary_abelian(2, 3).unwrap(),
            dihedral(8).unwrap(),
            dicyclic(8).unwrap(),
            direct_product(&cyclic(4).unwrap(), &cyclic(2).unwrap()).unwrap(),
            cyclic(12).unwrap(),
            dihedral(12).unwrap(),
            alternating(4).unwrap(),
            dicyclic(12).unwrap(),
            direct_product(&cyclic(6).unwrap(), &cyclic(2).unwrap()).unwrap(),
        ];
        for g in &groups {
            assert!(are_isomorphic(g, g).unwrap(), "reflexive on {g:?}");
        }
        for a in &groups {
            for b in &groups {
                let fast = are_isomorphic(a, b).unwrap();
                assert_eq!(fast, iso_bruteforce(a, b), "{a:?} vs {b:?}");
                assert_eq!(fast, are_isomorphic(b, a).unwrap(), "symmetric");
            }
        }
    }

    #[test]
    fn iso_respects_relabelings() {
        let d12 = dihedral(12).unwrap();
        let perm: Vec<usize> = vec![0, 5, 3, 7, 2, 11, 6, 1, 9, 4, 10, 8];
        let h = d12.relabeled(&perm).unwrap();
        assert!(are_isomorphic(&d12, &h).unwrap());
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphisms(&cyclic(6).unwrap()).unwrap().len(), 2);
        assert_eq!(automorphisms(&elementary_abelian(2, 2).unwrap()).unwrap().len(), 6);
        assert_eq!(automorphisms(&symmetric(3).unwrap()).unwrap().len(), 6);
        assert_eq!(automorphisms(&dicyclic(8).unwrap()).unwrap().len(), 24);
        assert_eq!(automorphisms(&dihedral(8).unwrap()).unwrap().len(), 8);
        let c4xc2 = direct_product(&cyclic(4).unwrap(), &cyclic(2).unwrap()).unwrap();
        assert_eq!(automorphisms(&c4xc2).unwrap().len(), 8);
        assert_eq!(automorphisms(&elementary_abelian(2, 3).unwrap()).unwrap().len(), 168);
        for m in automorphisms(&dicyclic(8).unwrap()).unwrap() {
            assert!(m.is_bijective());
        }
        assert!(automorphisms(&cyclic(100).unwrap()).is_err());
    }

    #[test]
    fn quotient_of_centralizer_shapes() {
        // The abelian centralizer shapes C4 and C4 x C2, modulo <x>, have
        // exponent at most 2.
        let c4 = cyclic(4).unwrap();
        let q1 = crate::construct::quotient(&c4, &c4.generated_subgroup(&[1])).unwrap();
        assert!(q1.exponent() <= 2);
        let c4xc2 = direct_product(&cyclic(4).unwrap(), &cyclic(2).unwrap()).unwrap();
        let x_span = c4xc2.generated_subgroup(&[2]);
        let q2 = crate::construct::quotient(&c4xc2, &x_span).unwrap();
        assert!(q2.exponent() <= 2 && q2.is_abelian());
    }
}
