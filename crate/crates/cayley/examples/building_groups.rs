//! Tour of the group constructors: families, products, quotients, and the
//! extraspecial groups.
//!
//! ```sh
//! cargo run --example building_groups
//! ```

use cayley::{
    center, cyclic, dicyclic, dihedral, direct_product, extraspecial, from_permutations, quotient,
    Morphism, Sign,
};

fn main() {
    let c6 = cyclic(6).unwrap();
    println!("{} has exponent {}", c6.label_or_default(), c6.exponent());

    let d10 = dihedral(10).unwrap();
    println!("{} multiplication table:", d10.label_or_default());
    print!("{}", d10.to_table_string());

    let q8 = dicyclic(8).unwrap();
    let involutions: Vec<usize> =
        q8.elements().filter(|&a| q8.element_order(a) == 2).collect();
    println!("{} has a unique involution: {involutions:?}", q8.label_or_default());

    let v4 = direct_product(&cyclic(2).unwrap(), &cyclic(2).unwrap()).unwrap();
    println!("{} is abelian: {}", v4.label_or_default(), v4.is_abelian());

    // Q8 modulo its center collapses to the Klein four-group.
    let q = quotient(&q8, &center(&q8)).unwrap();
    println!("Q(8)/Z(Q(8)) has order {} and exponent {}", q.order(), q.exponent());

    // The central product D8 * D8 identifies the two centers.
    let d8 = dihedral(8).unwrap();
    let z = center(&d8);
    let ident = Morphism::identity(2);
    let dd = cayley::central_product(&d8, &d8, &z, &z, &ident).unwrap();
    println!("D(8)*D(8) has order {}", dd.order());

    for sign in [Sign::Plus, Sign::Minus] {
        let e = extraspecial(32, sign).unwrap();
        println!(
            "{} center size {}",
            e.label_or_default(),
            center(&e).len()
        );
    }

    // Ad-hoc groups from permutation generators.
    let pentagon = from_permutations(5, &[vec![1, 2, 3, 4, 0], vec![0, 4, 3, 2, 1]]).unwrap();
    println!("pentagon symmetries: order {}", pentagon.order());
}
