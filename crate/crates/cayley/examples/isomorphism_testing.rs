//! Isomorphism testing with witnesses, minimal generating sets, and full
//! automorphism groups for small orders.
//!
//! ```sh
//! cargo run --example isomorphism_testing
//! ```

use cayley::{
    are_isomorphic, automorphisms, dicyclic, dihedral, elementary_abelian, from_permutations,
    isomorphism, minimal_generating_set,
};

fn main() {
    let d8 = dihedral(8).unwrap();
    let q8 = dicyclic(8).unwrap();
    println!("D(8) ~ Q(8)? {}", are_isomorphic(&d8, &q8).unwrap());

    // The pentagon's symmetry group, given by permutations, is D(10).
    let pent = from_permutations(5, &[vec![1, 2, 3, 4, 0], vec![0, 4, 3, 2, 1]]).unwrap();
    let d10 = dihedral(10).unwrap();
    match isomorphism(&pent, &d10).unwrap() {
        Some(witness) => {
            println!("pentagon group ~ D(10) via {:?}", witness.images());
        }
        None => println!("pentagon group is not D(10)?!"),
    }

    for g in [d8, q8, elementary_abelian(2, 4).unwrap()] {
        let gens = minimal_generating_set(&g);
        println!("{}: minimal generating set {:?}", g.label_or_default(), gens);
    }

    for g in [dihedral(8).unwrap(), dicyclic(8).unwrap(), elementary_abelian(2, 3).unwrap()] {
        let auts = automorphisms(&g).unwrap();
        println!("|Aut({})| = {}", g.label_or_default(), auts.len());
    }
}
