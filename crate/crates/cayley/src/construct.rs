//! Constructors for the standard group families and product operations.
//!
//! Element orderings are fixed so tables reproduce byte-for-byte: cyclic
//! groups use the power convention (element i is g^i), dihedral and dicyclic
//! groups list rotations before reflections, products enumerate pairs
//! row-major with (0,0) first, and quotients order cosets by smallest member.

use std::collections::HashMap;

use thiserror::Error;

use crate::census::is_prime;
use crate::group::{ElementSet, Group, GroupError, MAX_ORDER};
use crate::structure;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("order must be at least 1")]
    OrderZero,
    #[error("order {order} exceeds the cap {max}")]
    CapExceeded { order: usize, max: usize },
    #[error("dihedral order must be even and at least 2, got {0}")]
    BadDihedralOrder(usize),
    #[error("dicyclic order must be a multiple of 4 and at least 8, got {0}")]
    BadDicyclicOrder(usize),
    #[error("symmetric/alternating degree must be between 1 and 6, got {0}")]
    BadDegree(usize),
    #[error("permutation degree must be between 1 and 10, got {0}")]
    BadPermDegree(usize),
    #[error("{0} is not prime")]
    NotPrime(usize),
    #[error("extraspecial order must be 8, 32, or 128, got {0}")]
    BadExtraspecialOrder(usize),
    #[error("ext16 parameters must have e in {{+1,-1}} and f in {{0,1}}")]
    BadExt16Params,
    #[error("invalid permutation: {0}")]
    BadPermutation(String),
    #[error("images do not extend to a homomorphism (conflict at ({a}, {b}))")]
    NotAHomomorphism { a: usize, b: usize },
    #[error("the extended map is not bijective")]
    NotBijective,
    #[error("the given generators do not generate the group")]
    GeneratorsDontGenerate,
    #[error("action is not a homomorphism into Aut(A): {0}")]
    ActionNotHomomorphism(String),
    #[error("the given set is not a subgroup")]
    NotSubgroup,
    #[error("the given subgroup is not normal")]
    NotNormal,
    #[error("the identified subgroup is not central")]
    NotCentral,
    #[error("the identification is not an isomorphism between the central subgroups")]
    NotIsomorphism,
    #[error(transparent)]
    Group(#[from] GroupError),
}

fn check_cap(order: usize) -> Result<(), ConstructError> {
    if order == 0 {
        Err(ConstructError::OrderZero)
    } else if order > MAX_ORDER {
        Err(ConstructError::CapExceeded { order, max: MAX_ORDER })
    } else {
        Ok(())
    }
}

/// C_n under the power convention: element i is g^i, so mul is addition mod n.
pub fn cyclic(n: usize) -> Result<Group, ConstructError> {
    check_cap(n)?;
    let mut flat = vec![0u16; n * n];
    for i in 0..n {
        for j in 0..n {
            flat[i * n + j] = ((i + j) % n) as u16;
        }
    }
    Ok(Group::from_flat(n, flat, Some(format!("C({n})")))?)
}

/// D_{2n} of the given (even) order: rotations r^i at 0..n, reflections
/// r^i s at n..2n, with s r s = r^{-1}. dihedral(2) is C2 and dihedral(4)
/// is C2 x C2 by convention.
pub fn dihedral(order: usize) -> Result<Group, ConstructError> {
    if order < 2 || order % 2 != 0 {
        return Err(ConstructError::BadDihedralOrder(order));
    }
    check_cap(order)?;
    let n = order / 2;
    let m = order;
    let mut flat = vec![0u16; m * m];
    for i in 0..n {
        for j in 0..n {
            flat[i * m + j] = ((i + j) % n) as u16;
            flat[i * m + (n + j)] = (n + (i + j) % n) as u16;
            flat[(n + i) * m + j] = (n + (i + n - j) % n) as u16;
            flat[(n + i) * m + (n + j)] = ((i + n - j) % n) as u16;
        }
    }
    Ok(Group::from_flat(m, flat, Some(format!("D({order})")))?)
}

/// Dicyclic group of order 4n: <a, b | a^{2n} = 1, b^2 = a^n, b^{-1} a b = a^{-1}>.
/// Powers of a at 0..2n, elements a^i b at 2n..4n. dicyclic(8) is Q8.
pub fn dicyclic(order: usize) -> Result<Group, ConstructError> {
    if order < 8 || order % 4 != 0 {
        return Err(ConstructError::BadDicyclicOrder(order));
    }
    check_cap(order)?;
    let m = order / 2; // order of a
    let half = m / 2; // b^2 = a^half
    let sz = order;
    let mut flat = vec![0u16; sz * sz];
    for i in 0..m {
        for j in 0..m {
            flat[i * sz + j] = ((i + j) % m) as u16;
            flat[i * sz + (m + j)] = (m + (i + j) % m) as u16;
            flat[(m + i) * sz + j] = (m + (i + m - j) % m) as u16;
            flat[(m + i) * sz + (m + j)] = ((i + m - j + half) % m) as u16;
        }
    }
    Ok(Group::from_flat(sz, flat, Some(format!("Q({order})")))?)
}

fn permutations_lex(degree: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut current: Vec<u8> = (0..degree as u8).collect();
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let n = current.len();
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    out
}

fn parity_even(p: &[u8]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 0
}

fn perm_table(perms: Vec<Vec<u8>>, label: String) -> Result<Group, ConstructError> {
    let n = perms.len();
    check_cap(n)?;
    let index: HashMap<&[u8], usize> = perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let degree = perms[0].len();
    let mut flat = vec![0u16; n * n];
    let mut buf = vec![0u8; degree];
    for (i, p) in perms.iter().enumerate() {
        for (j, q) in perms.iter().enumerate() {
            // apply p first, then q
            for (k, slot) in buf.iter_mut().enumerate() {
                *slot = q[p[k] as usize];
            }
            flat[i * n + j] = index[buf.as_slice()] as u16;
        }
    }
    Ok(Group::from_flat(n, flat, Some(label))?)
}

/// S_n as the table of all permutations of n points, listed lexicographically
/// (identity first). Capped at degree 6.
pub fn symmetric(degree: usize) -> Result<Group, ConstructError> {
    if degree == 0 || degree > 6 {
        return Err(ConstructError::BadDegree(degree));
    }
    perm_table(permutations_lex(degree), format!("S({degree})"))
}

/// A_n: the even permutations, in the same lexicographic order.
pub fn alternating(degree: usize) -> Result<Group, ConstructError> {
    if degree == 0 || degree > 6 {
        return Err(ConstructError::BadDegree(degree));
    }
    let perms: Vec<Vec<u8>> =
        permutations_lex(degree).into_iter().filter(|p| parity_even(p)).collect();
    perm_table(perms, format!("A({degree})"))
}

/// Elementary abelian group of order p^k (direct power of C_p).
pub fn elementary_abelian(p: usize, k: u32) -> Result<Group, ConstructError> {
    if !is_prime(p) {
        return Err(ConstructError::NotPrime(p));
    }
    let order = p.checked_pow(k).filter(|&o| o <= MAX_ORDER).ok_or(
        ConstructError::CapExceeded { order: MAX_ORDER + 1, max: MAX_ORDER },
    )?;
    check_cap(order)?;
    let mut g = cyclic(1)?;
    for _ in 0..k {
        g = direct_product(&g, &cyclic(p)?)?;
    }
    Ok(g.with_label(format!("E({p},{k})")))
}

/// Componentwise product on pairs (a, b), enumerated row-major with (0,0)
/// first: index of (a, b) is a * |B| + b.
pub fn direct_product(a: &Group, b: &Group) -> Result<Group, ConstructError> {
    let order = a
        .order()
        .checked_mul(b.order())
        .filter(|&o| o <= MAX_ORDER)
        .ok_or(ConstructError::CapExceeded { order: MAX_ORDER + 1, max: MAX_ORDER })?;
    let (na, nb) = (a.order(), b.order());
    let mut flat = vec![0u16; order * order];
    for a1 in 0..na {
        for b1 in 0..nb {
            let i = a1 * nb + b1;
            for a2 in 0..na {
                for b2 in 0..nb {
                    let j = a2 * nb + b2;
                    flat[i * order + j] = (a.mul(a1, a2) * nb + b.mul(b1, b2)) as u16;
                }
            }
        }
    }
    let label = format!("{}x{}", a.label_or_default(), b.label_or_default());
    Ok(Group::from_flat(order, flat, Some(label))?)
}

/// A homomorphism between table groups, stored as the image of every element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    source_order: usize,
    target_order: usize,
    images: Vec<u16>,
}

impl Morphism {
    /// Validates that `images` is a homomorphism from `source` to `target`.
    pub fn new(source: &Group, target: &Group, images: Vec<usize>) -> Result<Self, ConstructError> {
        if images.len() != source.order() {
            return Err(ConstructError::NotAHomomorphism { a: 0, b: 0 });
        }
        for &im in &images {
            if im >= target.order() {
                return Err(ConstructError::NotAHomomorphism { a: 0, b: 0 });
            }
        }
        if images[0] != 0 {
            return Err(ConstructError::NotAHomomorphism { a: 0, b: 0 });
        }
        for a in 0..source.order() {
            for b in 0..source.order() {
                if images[source.mul(a, b)] != target.mul(images[a], images[b]) {
                    return Err(ConstructError::NotAHomomorphism { a, b });
                }
            }
        }
        Ok(Morphism {
            source_order: source.order(),
            target_order: target.order(),
            images: images.into_iter().map(|x| x as u16).collect(),
        })
    }

    pub(crate) fn from_images_unchecked(source_order: usize, target_order: usize, images: Vec<usize>) -> Self {
        Morphism {
            source_order,
            target_order,
            images: images.into_iter().map(|x| x as u16).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Morphism { source_order: n, target_order: n, images: (0..n as u16).collect() }
    }

    pub fn source_order(&self) -> usize {
        self.source_order
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.images[a] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn is_bijective(&self) -> bool {
        if self.source_order != self.target_order {
            return false;
        }
        let mut seen = vec![false; self.target_order];
        for &im in &self.images {
            if seen[im as usize] {
                return false;
            }
            seen[im as usize] = true;
        }
        true
    }

    /// self after other: x maps to self(other(x)).
    pub fn compose(&self, other: &Morphism) -> Morphism {
        assert_eq!(other.target_order, self.source_order);
        let images = other.images.iter().map(|&x| self.images[x as usize]).collect();
        Morphism { source_order: other.source_order, target_order: self.target_order, images }
    }
}

/// Extends generator images to the unique endomorphism of `a` they induce
/// and requires it to be a bijection (an automorphism).
pub fn automorphism_from_images(
    a: &Group,
    generator_images: &[(usize, usize)],
) -> Result<Morphism, ConstructError> {
    let n = a.order();
    let mut map: Vec<Option<usize>> = vec![None; n];
    map[0] = Some(0);
    let mut gens = Vec::new();
    for &(g, img) in generator_images {
        assert!(g < n && img < n, "generator or image out of range");
        match map[g] {
            Some(prev) if prev != img => return Err(ConstructError::NotAHomomorphism { a: g, b: g }),
            _ => map[g] = Some(img),
        }
        gens.push(g);
    }
    // Close under right-multiplication by the generators, deriving images.
    let mut reached = vec![0usize];
    for &g in &gens {
        if !reached.contains(&g) {
            reached.push(g);
        }
    }
    let mut i = 0;
    while i < reached.len() {
        let x = reached[i];
        for &g in &gens {
            let y = a.mul(x, g);
            let img = a.mul(map[x].unwrap(), map[g].unwrap());
            match map[y] {
                None => {
                    map[y] = Some(img);
                    reached.push(y);
                }
                Some(prev) if prev != img => {
                    return Err(ConstructError::NotAHomomorphism { a: x, b: g })
                }
                _ => {}
            }
        }
        i += 1;
    }
    if reached.len() != n {
        return Err(ConstructError::GeneratorsDontGenerate);
    }
    let images: Vec<usize> = map.into_iter().map(Option::unwrap).collect();
    let mut seen = vec![false; n];
    for &im in &images {
        if seen[im] {
            return Err(ConstructError::NotBijective);
        }
        seen[im] = true;
    }
    // Derived along the Cayley graph, so this is already a homomorphism;
    // Morphism::new re-checks it.
    Morphism::new(a, a, images)
}

/// Semidirect product A x| B for an action B -> Aut(A) given pointwise.
/// Pairs (a, b) are enumerated row-major, and
/// `(a1, b1)(a2, b2) = (a1 * action[b1](a2), b1 * b2)`.
pub fn semidirect_product(
    a: &Group,
    b: &Group,
    action: &[Morphism],
) -> Result<Group, ConstructError> {
    if action.len() != b.order() {
        return Err(ConstructError::ActionNotHomomorphism(format!(
            "action has {} entries for |B| = {}",
            action.len(),
            b.order()
        )));
    }
    for (i, m) in action.iter().enumerate() {
        if m.source_order() != a.order() || m.target_order() != a.order() {
            return Err(ConstructError::ActionNotHomomorphism(format!(
                "action[{i}] is not a map of A"
            )));
        }
        if !m.is_bijective() {
            return Err(ConstructError::ActionNotHomomorphism(format!(
                "action[{i}] is not bijective"
            )));
        }
        // Caller-supplied morphisms may target a different group.
        Morphism::new(a, a, m.images())
            .map_err(|_| ConstructError::ActionNotHomomorphism(format!("action[{i}] is not a homomorphism of A")))?;
    }
    if action[0].images() != Morphism::identity(a.order()).images() {
        return Err(ConstructError::ActionNotHomomorphism(
            "action at the identity of B must be the identity map".into(),
        ));
    }
    for b1 in 0..b.order() {
        for b2 in 0..b.order() {
            let lhs = &action[b.mul(b1, b2)];
            let rhs = action[b1].compose(&action[b2]);
            if lhs.images != rhs.images {
                return Err(ConstructError::ActionNotHomomorphism(format!(
                    "action({b1} * {b2}) differs from action({b1}) after action({b2})"
                )));
            }
        }
    }
    let order = a
        .order()
        .checked_mul(b.order())
        .filter(|&o| o <= MAX_ORDER)
        .ok_or(ConstructError::CapExceeded { order: MAX_ORDER + 1, max: MAX_ORDER })?;
    let nb = b.order();
    let mut flat = vec![0u16; order * order];
    for a1 in 0..a.order() {
        for b1 in 0..nb {
            let i = a1 * nb + b1;
            for a2 in 0..a.order() {
                for b2 in 0..nb {
                    let j = a2 * nb + b2;
                    let av = a.mul(a1, action[b1].apply(a2));
                    flat[i * order + j] = (av * nb + b.mul(b1, b2)) as u16;
                }
            }
        }
    }
    Ok(Group::from_flat(order, flat, None)?)
}

/// G/N for a normal subgroup N. Cosets are indexed by their smallest member
/// in ascending order, so the identity coset is index 0.
pub fn quotient(g: &Group, n_set: &ElementSet) -> Result<Group, ConstructError> {
    if !n_set.is_subgroup_of(g) {
        return Err(ConstructError::NotSubgroup);
    }
    if !structure::is_normal(g, n_set).expect("subgroup already validated") {
        return Err(ConstructError::NotNormal);
    }
    let n = g.order();
    let members = n_set.members();
    // coset_min[x] = smallest member of the coset N x
    let mut coset_min = vec![usize::MAX; n];
    for x in 0..n {
        if coset_min[x] != usize::MAX {
            continue;
        }
        let mut coset: Vec<usize> = members.iter().map(|&h| g.mul(h, x)).collect();
        coset.sort_unstable();
        for &y in &coset {
            coset_min[y] = coset[0];
        }
    }
    let mut reps: Vec<usize> = (0..n).filter(|&x| coset_min[x] == x).collect();
    reps.sort_unstable();
    let index_of: HashMap<usize, usize> = reps.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let q = reps.len();
    let mut flat = vec![0u16; q * q];
    for (i, &ri) in reps.iter().enumerate() {
        for (j, &rj) in reps.iter().enumerate() {
            flat[i * q + j] = index_of[&coset_min[g.mul(ri, rj)]] as u16;
        }
    }
    Ok(Group::from_flat(q, flat, None)?)
}

/// Central product (A x B) / {(z, ident(z)^{-1})}: the direct product modulo
/// the anti-diagonal copy of the identified central subgroups.
pub fn central_product(
    a: &Group,
    b: &Group,
    z_a: &ElementSet,
    z_b: &ElementSet,
    ident: &Morphism,
) -> Result<Group, ConstructError> {
    if !z_a.is_subgroup_of(a) || !z_b.is_subgroup_of(b) {
        return Err(ConstructError::NotSubgroup);
    }
    if !z_a.is_subset_of(&structure::center(a)) || !z_b.is_subset_of(&structure::center(b)) {
        return Err(ConstructError::NotCentral);
    }
    let sub_a = structure::subgroup_as_group(a, z_a).expect("validated subgroup");
    let sub_b = structure::subgroup_as_group(b, z_b).expect("validated subgroup");
    if ident.source_order() != sub_a.order()
        || ident.target_order() != sub_b.order()
        || !ident.is_bijective()
        || Morphism::new(&sub_a, &sub_b, ident.images()).is_err()
    {
        return Err(ConstructError::NotIsomorphism);
    }
    let d = direct_product(a, b)?;
    let a_members = z_a.members();
    let b_members = z_b.members();
    let mut anti = ElementSet::empty(d.order());
    for (k, &za) in a_members.iter().enumerate() {
        let zb = b_members[ident.apply(k)];
        anti.insert(za * b.order() + b.inverse_of(zb));
    }
    let label = format!("{}*{}", a.label_or_default(), b.label_or_default());
    Ok(quotient(&d, &anti)?.with_label(label))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Extraspecial 2-group of the given order as an iterated central product:
/// plus type is all D8 factors, minus type has a single Q8 factor.
pub fn extraspecial(order: usize, sign: Sign) -> Result<Group, ConstructError> {
    if !matches!(order, 8 | 32 | 128) {
        return Err(ConstructError::BadExtraspecialOrder(order));
    }
    let mut e = match sign {
        Sign::Plus => dihedral(8)?,
        Sign::Minus => dicyclic(8)?,
    };
    while e.order() < order {
        let d8 = dihedral(8)?;
        let z_e = structure::center(&e);
        let z_d = structure::center(&d8);
        let ident = Morphism::from_images_unchecked(2, 2, vec![0, 1]);
        e = central_product(&e, &d8, &z_e, &z_d, &ident)?;
    }
    Ok(e.with_label(format!("ES({sign},{order})")))
}

/// The four order-16 extensions of C4 x C2 by an involution u acting by
/// x -> x^e, w -> w * x^{2f}, with e in {+1, -1} and f in {0, 1}.
pub fn ext16(e: i32, f: u32) -> Result<Group, ConstructError> {
    if !matches!(e, 1 | -1) || f > 1 {
        return Err(ConstructError::BadExt16Params);
    }
    let a = direct_product(&cyclic(4)?, &cyclic(2)?)?;
    // In the row-major pair indexing: x = (1, 0) at index 2, w = (0, 1) at 1.
    let x = 2;
    let w = 1;
    let x_img = if e == 1 { x } else { a.inverse_of(x) };
    let x2 = a.mul(x, x);
    let w_img = if f == 0 { w } else { a.mul(w, x2) };
    let phi = automorphism_from_images(&a, &[(x, x_img), (w, w_img)])?;
    let c2 = cyclic(2)?;
    let g = semidirect_product(&a, &c2, &[Morphism::identity(a.order()), phi])?;
    Ok(g.with_label(format!("EXT16({e:+},{f})")))
}

/// Closure of the given permutations of `degree` points under composition,
/// as a Cayley table. Permutations are 0-based image vectors.
pub fn from_permutations(degree: usize, generators: &[Vec<usize>]) -> Result<Group, ConstructError> {
    if degree == 0 || degree > 10 {
        return Err(ConstructError::BadPermDegree(degree));
    }
    let mut gens: Vec<Vec<u8>> = Vec::new();
    for g in generators {
        if g.len() != degree {
            return Err(ConstructError::BadPermutation(format!(
                "expected {degree} images, got {}",
                g.len()
            )));
        }
        let mut seen = vec![false; degree];
        for &v in g {
            if v >= degree || seen[v] {
                return Err(ConstructError::BadPermutation("not a bijection".into()));
            }
            seen[v] = true;
        }
        gens.push(g.iter().map(|&v| v as u8).collect());
    }
    let identity: Vec<u8> = (0..degree as u8).collect();
    let mut members: Vec<Vec<u8>> = vec![identity.clone()];
    let mut seen: HashMap<Vec<u8>, ()> = HashMap::new();
    seen.insert(identity, ());
    for g in &gens {
        if seen.insert(g.clone(), ()).is_none() {
            members.push(g.clone());
        }
    }
    let mut i = 0;
    while i < members.len() {
        let x = members[i].clone();
        for g in &gens {
            // apply x then g
            let y: Vec<u8> = x.iter().map(|&k| g[k as usize]).collect();
            if seen.insert(y.clone(), ()).is_none() {
                if members.len() + 1 > MAX_ORDER {
                    return Err(ConstructError::CapExceeded {
                        order: members.len() + 1,
                        max: MAX_ORDER,
                    });
                }
                members.push(y);
            }
        }
        i += 1;
    }
    members.sort();
    perm_table(members, String::new()).map(|g| {
        let n = g.order();
        g.with_label(format!("PermGroup(deg {degree}, order {n})"))
    })
}
