//! Subgroup-level structure: center, centralizers, the commutator subgroup,
//! the full subgroup lattice, and the Frattini and Sylow subgroups.
//!
//! ```sh
//! cargo run --example subgroup_structure
//! ```

use cayley::{
    center, centralizer, commutator_subgroup, dicyclic, frattini, subgroup_as_group,
    subgroup_lattice, sylow, symmetric,
};

fn main() {
    let s4 = symmetric(4).unwrap();
    println!("S(4): |Z| = {}", center(&s4).len());
    println!("S(4): derived subgroup has {} elements", commutator_subgroup(&s4).len());

    let syl2 = sylow(&s4, 2).unwrap();
    println!("S(4): Sylow 2-subgroup of size {}", syl2.len());
    let as_group = subgroup_as_group(&s4, &syl2).unwrap();
    println!(
        "  extracted as a group of order {} ({})",
        as_group.order(),
        cayley::identify(&as_group).unwrap_or_else(|| "unidentified".into())
    );

    let q8 = dicyclic(8).unwrap();
    let lat = subgroup_lattice(&q8).unwrap();
    println!("Q(8) subgroup lattice ({} subgroups):", lat.len());
    for (i, s) in lat.subgroups.iter().enumerate() {
        println!("  #{i} size {} members {:?}", s.len(), s.members());
    }
    println!("Q(8): Frattini = {:?}", frattini(&q8).unwrap().members());

    for x in q8.elements() {
        let c = centralizer(&q8, x);
        println!("Q(8): |centralizer({x})| = {}", c.len());
    }
}
