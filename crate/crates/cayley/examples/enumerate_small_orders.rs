//! Exhaustive enumeration of all groups of a small order up to isomorphism.
//!
//! ```sh
//! cargo run --example enumerate_small_orders
//! ```

use cayley::enumerate_groups;

fn main() {
    println!("order -> isomorphism classes");
    for n in 1..=12 {
        let report = enumerate_groups(n, false).unwrap();
        let labels: Vec<String> =
            report.representatives.iter().map(|g| g.label_or_default()).collect();
        println!("{n:>5} -> {:<2} {}", report.count, labels.join(", "));
    }

    let r8 = enumerate_groups(8, false).unwrap();
    println!(
        "\norder 8 search: {} nodes, {} completed tables, {} iso-rejections",
        r8.stats.nodes, r8.stats.completed, r8.stats.iso_rejections
    );
    println!("\nthe five class representatives of order 8:");
    for rep in &r8.representatives {
        println!();
        print!("{}", rep.to_table_string());
    }
}
