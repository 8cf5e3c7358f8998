//! Runs the built-in verification suite (the same checks as the
//! `verify-paper` CLI command) and prints one line per claim.
//!
//! ```sh
//! cargo run --example verification_suite
//! ```

use cayley::verify::run_checks;

fn main() {
    let checks = run_checks(false);
    let mut failed = 0;
    for c in &checks {
        let tag = if c.pass {
            "PASS"
        } else {
            failed += 1;
            "FAIL"
        };
        println!("{tag}  {:<32} {}", c.id, c.details);
    }
    println!("\n{} of {} checks pass", checks.len() - failed, checks.len());
    if failed > 0 {
        println!("(the delta-3 classification checks fail because C(5) also has deficiency 3)");
    }
}
