//! Deficiency scans: which groups satisfy |C(G)| = |G| - delta?
//!
//! The delta = 3 scan is the headline: over every isomorphism class of
//! order at most 12 it finds C(5), Q(8), and D(10) (the cyclic group of
//! order 5 has just two cyclic subgroups, so it lands at deficiency 3
//! alongside the two named groups).
//!
//! ```sh
//! cargo run --example deficiency_scan
//! ```

use cayley::corpus::default_corpus;
use cayley::{scan_enumerated, scan_groups};

fn main() {
    for delta in 0..=3 {
        let hits = scan_enumerated(12, delta, false).unwrap();
        let names: Vec<String> =
            hits.iter().map(|h| format!("{}@{}", h.name, h.order)).collect();
        println!("delta = {delta} over all classes of order <= 12: {}", names.join(", "));
    }

    println!("\ndelta = 3 over the shipped family corpus (orders <= 200):");
    let corpus = default_corpus();
    for hit in scan_groups(&corpus, 3) {
        println!("  order {:>3}  {}", hit.order, hit.name);
    }
}
