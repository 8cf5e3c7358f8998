//! Cyclic-subgroup censuses: counts per order, the pi sets, the deficiency
//! |G| - |C(G)|, and the exact totient identities every census satisfies.
//!
//! ```sh
//! cargo run --example census_basics
//! ```

use cayley::{census, cyclic, dicyclic, dihedral, symmetric, totient};

fn main() {
    for g in [
        cyclic(5).unwrap(),
        cyclic(6).unwrap(),
        dicyclic(8).unwrap(),
        dihedral(10).unwrap(),
        dihedral(12).unwrap(),
        symmetric(3).unwrap(),
    ] {
        let c = census(&g);
        println!("{}", g.label_or_default());
        println!("  element orders pi_e = {:?}", c.pi_e);
        println!("  c_k = {:?}", c.c);
        println!("  |C(G)| = {}, delta = {}", c.num_cyclic, c.delta);

        // sum c_k * phi(k) = |G| and sum c_k * (phi(k) - 1) = delta, exactly.
        let order_sum: usize = c.c.iter().map(|(&k, &ck)| ck * totient(k)).sum();
        let eq1: usize = c.c.iter().map(|(&k, &ck)| ck * (totient(k) - 1)).sum();
        println!("  identities: sum c_k*phi(k) = {order_sum}, sum c_k*(phi(k)-1) = {eq1}");
        assert!(c.order_sum_identity() && c.eq1_identity());
    }
}
