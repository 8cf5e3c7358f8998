//! Acceptance suite: one test per shipped criterion, each printing a
//! PASS line when it holds. Run with `cargo test --test acceptance --
//! --nocapture` to see the lines.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use cayley::{
    alternating, are_isomorphic, census, count_groups, count_of_order, cyclic, dicyclic, dihedral,
    direct_product, enumerate_groups, enumerate_groups_with, frattini, is_elementary_abelian_2,
    prime_factorization, quotient, scan_enumerated, symmetric, sylow, totient, Group,
    IsoClassReport, SearchOptions, Sign,
};

fn corpus() -> &'static Vec<(String, Group)> {
    static CORPUS: OnceLock<Vec<(String, Group)>> = OnceLock::new();
    CORPUS.get_or_init(cayley::corpus::default_corpus)
}

/// Enumeration of every order up to 12, computed once, with its wall time.
fn enumerated() -> &'static (Vec<IsoClassReport>, Duration) {
    static ENUM: OnceLock<(Vec<IsoClassReport>, Duration)> = OnceLock::new();
    ENUM.get_or_init(|| {
        let t0 = Instant::now();
        let reports: Vec<IsoClassReport> =
            (1..=12).map(|n| enumerate_groups(n, false).expect("within cap")).collect();
        (reports, t0.elapsed())
    })
}

#[test]
fn criterion_01_totient_identities() {
    let t0 = Instant::now();
    let corpus = corpus();
    assert!(corpus.len() >= 300, "corpus has only {} groups", corpus.len());
    for (label, g) in corpus {
        let c = census(g);
        let order_sum: usize = c.c.iter().map(|(&k, &ck)| ck * totient(k)).sum();
        let eq1: usize = c.c.iter().map(|(&k, &ck)| ck * (totient(k) - 1)).sum();
        assert_eq!(order_sum, g.order(), "order identity fails for {label}");
        assert_eq!(eq1, c.delta, "deficiency identity fails for {label}");
    }
    let (reports, _) = enumerated();
    for report in reports {
        for rep in &report.representatives {
            let c = census(rep);
            assert!(c.order_sum_identity(), "{}", rep.label_or_default());
            assert!(c.eq1_identity(), "{}", rep.label_or_default());
        }
    }
    let elapsed = t0.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}, budget 10s");
    println!(
        "criterion 1 (totient identities, {} corpus groups + order<=12 classes): PASS in {elapsed:?}",
        corpus.len()
    );
}

#[test]
fn criterion_02_delta3_exhaustive_le12() {
    let t0 = Instant::now();
    let hits = scan_enumerated(12, 3, false).expect("within cap");
    let elapsed = t0.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}, budget 60s");
    let found: Vec<(usize, String)> = hits.iter().map(|h| (h.order, h.name.clone())).collect();
    let expected = vec![(8, "Q(8)".to_string()), (10, "D(10)".to_string())];
    if found != expected {
        println!(
            "criterion 2 (delta=3 exhaustive, order <= 12): FAIL — expected {expected:?}, scan found {found:?}"
        );
        panic!("deficiency-3 classes of order <= 12: expected {expected:?}, found {found:?}");
    }
    println!("criterion 2 (delta=3 exhaustive, order <= 12): PASS in {elapsed:?}");
}

#[test]
fn criterion_03_delta3_family_corpus() {
    let t0 = Instant::now();
    let q8 = dicyclic(8).unwrap();
    let d10 = dihedral(10).unwrap();
    let mut offenders = Vec::new();
    for (label, g) in corpus() {
        if census(g).delta != 3 {
            continue;
        }
        let known =
            are_isomorphic(g, &q8).unwrap_or(false) || are_isomorphic(g, &d10).unwrap_or(false);
        if !known {
            offenders.push(label.clone());
        }
    }
    let elapsed = t0.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}, budget 60s");
    if !offenders.is_empty() {
        println!(
            "criterion 3 (delta=3 over the family corpus <= 200): FAIL — deficiency-3 groups not isomorphic to Q(8) or D(10): {offenders:?}"
        );
        panic!("corpus groups with deficiency 3 not isomorphic to Q(8) or D(10): {offenders:?}");
    }
    println!("criterion 3 (delta=3 over the family corpus <= 200): PASS in {elapsed:?}");
}

#[test]
fn criterion_04_dihedral_and_small_deltas() {
    for q in [3usize, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
        79, 83, 89, 97]
    {
        assert_eq!(census(&dihedral(2 * q).unwrap()).delta, q - 2, "delta(D({}))", 2 * q);
    }
    assert_eq!(census(&cyclic(6).unwrap()).delta, 2);
    assert_eq!(census(&dihedral(12).unwrap()).delta, 2);
    assert_eq!(census(&symmetric(3).unwrap()).delta, 1);
    println!("criterion 4 (dihedral prime deltas and C6/D12/S3): PASS");
}

#[test]
fn criterion_05_c4_c6_and_q8_structure() {
    assert_eq!(count_of_order(&dicyclic(8).unwrap(), 4), 3);
    assert_eq!(count_of_order(&dihedral(8).unwrap(), 4), 1);
    let c4 = cyclic(4).unwrap();
    let c4xc4 = direct_product(&c4, &c4).unwrap();
    let c4_count = count_of_order(&c4xc4, 4);
    assert_eq!(c4_count, 6);
    assert!(c4_count > 3);
    let dd = cayley::extraspecial(32, Sign::Plus).unwrap();
    let dd_count = count_of_order(&dd, 4);
    assert_eq!(dd_count, 6);
    assert!(dd_count > 3);
    let c2 = cyclic(2).unwrap();
    let l = direct_product(&direct_product(&c2, &c2).unwrap(), &cyclic(3).unwrap()).unwrap();
    assert_eq!(count_of_order(&l, 6), 3);
    for e in [1i32, -1] {
        for f in [0u32, 1] {
            let g = cayley::ext16(e, f).unwrap();
            assert_ne!(count_of_order(&g, 4), 3, "EXT16({e:+},{f})");
        }
    }
    let q8 = dicyclic(8).unwrap();
    assert_eq!(q8.exponent(), 4);
    let z = cayley::center(&q8);
    assert_eq!(z.len(), 2);
    assert_eq!(frattini(&q8).unwrap(), z);
    println!("criterion 5 (c4/c6 counts and Q8 structure): PASS");
}

#[test]
fn criterion_06_three_prime_delta_floor() {
    let mut checked = 0;
    for (label, g) in corpus() {
        let primes = prime_factorization(g.order());
        if primes.len() < 3 {
            continue;
        }
        checked += 1;
        let largest = primes.last().unwrap().0;
        let delta = census(g).delta;
        assert!(delta > largest, "{label}: delta = {delta} <= largest prime {largest}");
    }
    for needed in ["C(30)", "D(30)", "C(2)xC(3)xC(5)", "A(5)", "S(5)"] {
        assert!(
            corpus().iter().any(|(l, _)| l == needed),
            "three-prime witness {needed} missing from corpus"
        );
    }
    assert!(checked >= 50, "only {checked} groups with >= 3 primes");
    println!("criterion 6 (delta > largest prime when >= 3 primes, {checked} groups): PASS");
}

#[test]
fn criterion_07_delta0_iff_elementary_abelian_2() {
    let (reports, _) = enumerated();
    let mut hits = Vec::new();
    for report in reports {
        for rep in &report.representatives {
            let zero = census(rep).delta == 0;
            assert_eq!(zero, is_elementary_abelian_2(rep), "{}", rep.label_or_default());
            if zero {
                hits.push(rep.order());
            }
        }
    }
    assert_eq!(hits, vec![1, 2, 4, 8], "elementary abelian 2-group orders <= 12");
    for (label, g) in corpus() {
        assert_eq!(census(g).delta == 0, is_elementary_abelian_2(g), "{label}");
    }
    println!("criterion 7 (delta = 0 iff elementary abelian 2-group, both directions): PASS");
}

#[test]
fn criterion_08_enumeration_counts() {
    let (reports, enum_time) = enumerated();
    let counts: Vec<usize> = reports.iter().map(|r| r.count).collect();
    assert_eq!(counts, vec![1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5]);
    assert!(
        *enum_time < Duration::from_secs(60),
        "enumeration through order 12 took {enum_time:?}"
    );
    // Independent cross-validation for orders <= 8: no symmetry pruning and
    // no propagation, only Latin constraints and associativity checking.
    let oracle_opts = SearchOptions { symmetry_pruning: false, propagate: false };
    for n in 1..=8usize {
        let oracle = enumerate_groups_with(n, false, oracle_opts).expect("within cap");
        assert_eq!(oracle.count, counts[n - 1], "oracle disagrees at order {n}");
        for rep in &oracle.representatives {
            assert!(
                reports[n - 1]
                    .representatives
                    .iter()
                    .any(|r| are_isomorphic(r, rep).unwrap()),
                "oracle class {rep:?} missing from the pruned search at order {n}"
            );
        }
    }
    println!(
        "criterion 8 (class counts 1..12 + unpruned oracle <= 8): PASS (enumeration {enum_time:?})"
    );
}

/// Stretch target, not part of the blocking suite: the full order-16 search
/// takes a few minutes. Run with
/// `cargo test --test acceptance criterion_08_stretch -- --ignored`.
#[test]
#[ignore = "multi-minute search; stretch target only"]
fn criterion_08_stretch_order16() {
    assert_eq!(count_groups(16, true).unwrap(), 14);
    println!("criterion 8 stretch (count_groups(16) = 14): PASS");
}

#[test]
fn criterion_09_structure_cross_checks() {
    for (label, g) in corpus() {
        if g.order() > 256 {
            continue;
        }
        for (p, e) in prime_factorization(g.order()) {
            let s = sylow(g, p).unwrap();
            assert_eq!(s.len(), p.pow(e), "sylow_{p} of {label}");
        }
    }
    let c4xc2 = direct_product(&cyclic(4).unwrap(), &cyclic(2).unwrap()).unwrap();
    let phi = frattini(&c4xc2).unwrap();
    assert_eq!(phi.len(), 2);
    let x_span = c4xc2.generated_subgroup(&[2]);
    let q = quotient(&c4xc2, &x_span).unwrap();
    assert!(q.exponent() <= 2, "quotient exponent is {}", q.exponent());
    println!("criterion 9 (sylow sizes, frattini(C4xC2), quotient exponent): PASS");
}

#[test]
fn criterion_10_negative_control() {
    use std::process::Command;
    let bin = env!("CARGO_BIN_EXE_cayley");
    let normal = Command::new(bin).arg("verify-paper").output().expect("run verify-paper");
    let normal_out = String::from_utf8_lossy(&normal.stdout).to_string();
    assert!(
        normal_out.contains("PASS  dihedral_prime_deficiency"),
        "dihedral check should pass on an honest run:\n{normal_out}"
    );
    let tampered = Command::new(bin)
        .args(["verify-paper", "--tamper"])
        .output()
        .expect("run verify-paper --tamper");
    let out = String::from_utf8_lossy(&tampered.stdout).to_string();
    assert!(
        !tampered.status.success(),
        "tampered run must exit nonzero, got {:?}",
        tampered.status
    );
    assert!(
        out.contains("FAIL  dihedral_prime_deficiency"),
        "tampered run must report the named FAIL:\n{out}"
    );
    println!("criterion 10 (tamper fixture produces a named FAIL and nonzero exit): PASS");
}

#[test]
fn representatives_validate_and_match_alternating_families() {
    // Enumerated representatives are genuine groups and contain the
    // expected named classes.
    let (reports, _) = enumerated();
    let a4 = alternating(4).unwrap();
    assert!(reports[11].representatives.iter().any(|g| are_isomorphic(g, &a4).unwrap()));
    for report in reports {
        for rep in &report.representatives {
            assert!(Group::from_table(rep.table(), None).is_ok());
        }
    }
}
