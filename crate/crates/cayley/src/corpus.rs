//! The default family corpus: every cyclic, dihedral, and dicyclic group up
//! to order 200, products of up to three small atoms up to order 64, the
//! symmetric and alternating groups through degree 5, both extraspecial
//! groups of order 32, and the four ext16 presets.

use crate::expr::parse_spec;
use crate::group::Group;

/// Canonical expression strings for the default corpus, in a fixed order.
pub fn default_corpus_specs() -> Vec<String> {
    let mut specs: Vec<String> = Vec::new();
    for n in 1..=200usize {
        specs.push(format!("C({n})"));
    }
    for n in (2..=200usize).step_by(2) {
        specs.push(format!("D({n})"));
    }
    for n in (8..=200usize).step_by(4) {
        specs.push(format!("Q({n})"));
    }

    // Products of two or three atoms, total order at most 64. Atom multisets
    // are taken in non-decreasing index order so permuted duplicates are not
    // emitted.
    let mut atoms: Vec<(String, usize)> = Vec::new();
    for n in 2..=32usize {
        atoms.push((format!("C({n})"), n));
    }
    for n in (6..=16usize).step_by(2) {
        atoms.push((format!("D({n})"), n));
    }
    for n in [8usize, 12, 16] {
        atoms.push((format!("Q({n})"), n));
    }
    for i in 0..atoms.len() {
        for j in i..atoms.len() {
            let pair_order = atoms[i].1 * atoms[j].1;
            if pair_order > 64 {
                continue;
            }
            specs.push(format!("{}x{}", atoms[i].0, atoms[j].0));
            for atom in atoms.iter().skip(j) {
                if pair_order * atom.1 <= 64 {
                    specs.push(format!("{}x{}x{}", atoms[i].0, atoms[j].0, atom.0));
                }
            }
        }
    }

    for n in 1..=5usize {
        specs.push(format!("S({n})"));
    }
    for n in 1..=5usize {
        specs.push(format!("A({n})"));
    }
    specs.push("ES(+,32)".to_string());
    specs.push("ES(-,32)".to_string());
    for e in ["+1", "-1"] {
        for f in 0..=1 {
            specs.push(format!("EXT16({e},{f})"));
        }
    }
    specs
}

/// Builds every corpus group, labeled by its canonical expression.
pub fn default_corpus() -> Vec<(String, Group)> {
    use rayon::prelude::*;
    default_corpus_specs()
        .par_iter()
        .map(|s| {
            let g = parse_spec(s)
                .unwrap_or_else(|e| panic!("corpus spec `{s}` failed to parse: {e}"))
                .realize()
                .unwrap_or_else(|e| panic!("corpus spec `{s}` failed to build: {e}"));
            (s.clone(), g)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_specs_parse_and_contain_required_families() {
        let specs = default_corpus_specs();
        for s in &specs {
            parse_spec(s).unwrap_or_else(|e| panic!("{s}: {e}"));
        }
        for needed in [
            "C(5)",
            "C(6)",
            "C(30)",
            "D(10)",
            "D(12)",
            "D(30)",
            "D(194)",
            "Q(8)",
            "S(3)",
            "S(5)",
            "A(5)",
            "C(2)xC(2)xC(3)",
            "C(2)xC(3)xC(5)",
            "C(4)xC(4)",
            "ES(+,32)",
            "ES(-,32)",
            "EXT16(+1,0)",
            "EXT16(-1,1)",
        ] {
            assert!(specs.iter().any(|s| s == needed), "missing {needed}");
        }
        // No duplicate spec strings.
        let mut sorted = specs.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), specs.len());
    }

    #[test]
    fn corpus_builds_within_bounds() {
        let corpus = default_corpus();
        assert!(corpus.len() >= 300, "corpus has {} groups", corpus.len());
        for (label, g) in &corpus {
            assert!(g.order() <= 200, "{label} exceeds order 200");
            assert_eq!(g.label(), Some(label.as_str()));
        }
    }
}
