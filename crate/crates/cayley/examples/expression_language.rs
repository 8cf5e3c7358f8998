//! The group-expression mini-language: parsing, canonical printing, and
//! realization into validated tables.
//!
//! ```sh
//! cargo run --example expression_language
//! ```

use cayley::{census, parse_spec};

fn main() {
    for text in [
        "Q(8)",
        "C(2) x C(2) x C(3)",
        "E(2,3)",
        "ES(-,32)",
        "EXT16(+1,1)",
        "PERM(5; (1 2 3 4 5), (2 5)(3 4))",
        "D(8)x(C(3)xC(3))",
    ] {
        let spec = parse_spec(text).unwrap();
        let g = spec.realize().unwrap();
        println!("{text:<40} -> {} (order {}, delta {})", spec, g.order(), census(&g).delta);
    }

    // Errors carry byte positions.
    for bad in ["D(10", "X(3)", "C(2,3)"] {
        let err = parse_spec(bad).unwrap_err();
        println!("{bad:<40} -> error at {}: {err}", err.position());
    }
}
