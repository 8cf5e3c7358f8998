//! The group-expression mini-language used by the CLI and corpus manifests.
//!
//! Grammar:
//!
//! ```text
//! expr := term ("x" term)*
//! term := atom | "(" expr ")"
//! atom := NAME "(" args ")"
//! ```
//!
//! Atoms: `C(n)`, `D(n)`, `Q(n)`, `S(n)`, `A(n)`, `E(p,k)`, `ES(sign,n)`,
//! `EXT16(e,f)`, `PERM(degree; (cycle)(cycle), ...)` with 1-based cycle
//! entries. `x` is the direct product and associates left. Printing is
//! canonical: `print(parse(s))` is a fixpoint.

use std::fmt;

use thiserror::Error;

use crate::construct::{self, ConstructError, Sign};
use crate::group::Group;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown atom `{name}` at position {position}")]
    UnknownAtom { name: String, position: usize },
    #[error("bad arguments for {atom} at position {position}: {message}")]
    BadArity { atom: String, position: usize, message: String },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { position, .. }
            | ParseError::UnknownAtom { position, .. }
            | ParseError::BadArity { position, .. } => *position,
        }
    }
}

/// Parsed group expression: atoms plus left-associated direct products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Dicyclic(usize),
    Symmetric(usize),
    Alternating(usize),
    ElementaryAbelian(usize, u32),
    Extraspecial(Sign, usize),
    Ext16(i32, u32),
    Perm { degree: usize, generators: Vec<Vec<Vec<usize>>> },
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C({n})"),
            GroupSpec::Dihedral(n) => write!(f, "D({n})"),
            GroupSpec::Dicyclic(n) => write!(f, "Q({n})"),
            GroupSpec::Symmetric(n) => write!(f, "S({n})"),
            GroupSpec::Alternating(n) => write!(f, "A({n})"),
            GroupSpec::ElementaryAbelian(p, k) => write!(f, "E({p},{k})"),
            GroupSpec::Extraspecial(sign, n) => write!(f, "ES({sign},{n})"),
            GroupSpec::Ext16(e, ff) => write!(f, "EXT16({e:+},{ff})"),
            GroupSpec::Perm { degree, generators } => {
                write!(f, "PERM({degree}; ")?;
                for (i, gen) in generators.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    for cycle in gen {
                        write!(f, "(")?;
                        for (j, entry) in cycle.iter().enumerate() {
                            if j > 0 {
                                write!(f, " ")?;
                            }
                            write!(f, "{entry}")?;
                        }
                        write!(f, ")")?;
                    }
                }
                write!(f, ")")
            }
            GroupSpec::Product(a, b) => {
                // The product associates left, so only a right-nested
                // product needs parentheses.
                write!(f, "{a}x")?;
                if matches!(**b, GroupSpec::Product(_, _)) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
        }
    }
}

impl GroupSpec {
    /// Builds the group and labels it with the canonical expression.
    pub fn realize(&self) -> Result<Group, ConstructError> {
        let g = match self {
            GroupSpec::Cyclic(n) => construct::cyclic(*n)?,
            GroupSpec::Dihedral(n) => construct::dihedral(*n)?,
            GroupSpec::Dicyclic(n) => construct::dicyclic(*n)?,
            GroupSpec::Symmetric(n) => construct::symmetric(*n)?,
            GroupSpec::Alternating(n) => construct::alternating(*n)?,
            GroupSpec::ElementaryAbelian(p, k) => construct::elementary_abelian(*p, *k)?,
            GroupSpec::Extraspecial(sign, n) => construct::extraspecial(*n, *sign)?,
            GroupSpec::Ext16(e, f) => construct::ext16(*e, *f)?,
            GroupSpec::Perm { degree, generators } => {
                let perms: Result<Vec<Vec<usize>>, ConstructError> = generators
                    .iter()
                    .map(|cycles| cycles_to_permutation(*degree, cycles))
                    .collect();
                construct::from_permutations(*degree, &perms?)?
            }
            GroupSpec::Product(a, b) => {
                construct::direct_product(&a.realize()?, &b.realize()?)?
            }
        };
        Ok(g.with_label(self.to_string()))
    }
}

/// Converts 1-based disjoint cycles to a 0-based image vector, applying the
/// cycles left to right.
fn cycles_to_permutation(degree: usize, cycles: &[Vec<usize>]) -> Result<Vec<usize>, ConstructError> {
    let mut perm: Vec<usize> = (0..degree).collect();
    for cycle in cycles {
        let mut step: Vec<usize> = (0..degree).collect();
        for w in 0..cycle.len() {
            let from = cycle[w];
            let to = cycle[(w + 1) % cycle.len()];
            if from == 0 || from > degree || to == 0 || to > degree {
                return Err(ConstructError::BadPermutation(format!(
                    "cycle entry out of range for degree {degree}"
                )));
            }
            step[from - 1] = to - 1;
        }
        // apply existing perm, then this cycle
        perm = perm.into_iter().map(|i| step[i]).collect();
    }
    Ok(perm)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Name(String),
    Num(usize),
    LParen,
    RParen,
    Comma,
    Semi,
    Plus,
    Minus,
    Eof,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Lexer {
    fn new(text: &str) -> Result<Self, ParseError> {
        let bytes = text.as_bytes();
        let mut toks = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i] as char;
            match c {
                ' ' | '\t' | '\n' | '\r' => i += 1,
                '(' => {
                    toks.push((Tok::LParen, i));
                    i += 1;
                }
                ')' => {
                    toks.push((Tok::RParen, i));
                    i += 1;
                }
                ',' => {
                    toks.push((Tok::Comma, i));
                    i += 1;
                }
                ';' => {
                    toks.push((Tok::Semi, i));
                    i += 1;
                }
                '+' => {
                    toks.push((Tok::Plus, i));
                    i += 1;
                }
                '-' => {
                    toks.push((Tok::Minus, i));
                    i += 1;
                }
                '0'..='9' => {
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let text = &text[start..i];
                    let n: usize = text.parse().map_err(|_| ParseError::Syntax {
                        position: start,
                        message: "number too large".into(),
                    })?;
                    toks.push((Tok::Num(n), start));
                }
                // Lowercase `x` is the product operator, even when glued to
                // the next atom as in `C(2)xC(3)`.
                'x' => {
                    toks.push((Tok::Name("x".to_string()), i));
                    i += 1;
                }
                c if c.is_ascii_alphabetic() => {
                    let start = i;
                    while i < bytes.len() && (bytes[i] as char).is_ascii_alphanumeric() {
                        i += 1;
                    }
                    toks.push((Tok::Name(text[start..i].to_string()), start));
                }
                other => {
                    return Err(ParseError::Syntax {
                        position: i,
                        message: format!("unexpected character `{other}`"),
                    })
                }
            }
        }
        toks.push((Tok::Eof, bytes.len()));
        Ok(Lexer { toks, pos: 0 })
    }

    fn peek(&self) -> &(Tok, usize) {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<usize, ParseError> {
        let (tok, pos) = self.next();
        if tok == want {
            Ok(pos)
        } else {
            Err(ParseError::Syntax { position: pos, message: format!("expected {what}") })
        }
    }

    fn expect_num(&mut self, what: &str) -> Result<(usize, usize), ParseError> {
        let (tok, pos) = self.next();
        match tok {
            Tok::Num(n) => Ok((n, pos)),
            _ => Err(ParseError::Syntax { position: pos, message: format!("expected {what}") }),
        }
    }
}

/// Parses a group expression; errors carry the byte offset of the problem.
pub fn parse_spec(text: &str) -> Result<GroupSpec, ParseError> {
    let mut lx = Lexer::new(text)?;
    let spec = parse_expr(&mut lx)?;
    let (tok, pos) = lx.next();
    if tok != Tok::Eof {
        return Err(ParseError::Syntax { position: pos, message: "trailing input".into() });
    }
    Ok(spec)
}

fn parse_expr(lx: &mut Lexer) -> Result<GroupSpec, ParseError> {
    let mut lhs = parse_term(lx)?;
    loop {
        match lx.peek() {
            (Tok::Name(n), _) if n == "x" => {
                lx.next();
                let rhs = parse_term(lx)?;
                lhs = GroupSpec::Product(Box::new(lhs), Box::new(rhs));
            }
            _ => return Ok(lhs),
        }
    }
}

fn parse_term(lx: &mut Lexer) -> Result<GroupSpec, ParseError> {
    match lx.peek().clone() {
        (Tok::LParen, _) => {
            lx.next();
            let inner = parse_expr(lx)?;
            lx.expect(Tok::RParen, "`)`")?;
            Ok(inner)
        }
        (Tok::Name(name), pos) if name != "x" => {
            lx.next();
            parse_atom(lx, &name, pos)
        }
        (_, pos) => {
            Err(ParseError::Syntax { position: pos, message: "expected an atom or `(`".into() })
        }
    }
}

fn parse_atom(lx: &mut Lexer, name: &str, name_pos: usize) -> Result<GroupSpec, ParseError> {
    let known = ["C", "D", "Q", "S", "A", "E", "ES", "EXT16", "PERM"];
    if !known.contains(&name) {
        return Err(ParseError::UnknownAtom { name: name.to_string(), position: name_pos });
    }
    lx.expect(Tok::LParen, "`(`")?;
    let spec = match name {
        "C" | "D" | "Q" | "S" | "A" => {
            let (n, _) = lx.expect_num("a numeric argument")?;
            match name {
                "C" => GroupSpec::Cyclic(n),
                "D" => GroupSpec::Dihedral(n),
                "Q" => GroupSpec::Dicyclic(n),
                "S" => GroupSpec::Symmetric(n),
                _ => GroupSpec::Alternating(n),
            }
        }
        "E" => {
            let (p, _) = lx.expect_num("a prime base")?;
            lx.expect(Tok::Comma, "`,`")?;
            let (k, kp) = lx.expect_num("an exponent")?;
            let k = u32::try_from(k).map_err(|_| ParseError::BadArity {
                atom: "E".into(),
                position: kp,
                message: "exponent too large".into(),
            })?;
            GroupSpec::ElementaryAbelian(p, k)
        }
        "ES" => {
            let (tok, pos) = lx.next();
            let sign = match tok {
                Tok::Plus => Sign::Plus,
                Tok::Minus => Sign::Minus,
                _ => {
                    return Err(ParseError::BadArity {
                        atom: "ES".into(),
                        position: pos,
                        message: "expected a sign (+ or -)".into(),
                    })
                }
            };
            lx.expect(Tok::Comma, "`,`")?;
            let (n, _) = lx.expect_num("an order")?;
            GroupSpec::Extraspecial(sign, n)
        }
        "EXT16" => {
            let (tok, pos) = lx.next();
            let (sign, need_num) = match tok {
                Tok::Plus => (1i32, true),
                Tok::Minus => (-1i32, true),
                Tok::Num(1) => (1i32, false),
                _ => {
                    return Err(ParseError::BadArity {
                        atom: "EXT16".into(),
                        position: pos,
                        message: "expected +1 or -1".into(),
                    })
                }
            };
            if need_num {
                let (n, np) = lx.expect_num("1 after the sign")?;
                if n != 1 {
                    return Err(ParseError::BadArity {
                        atom: "EXT16".into(),
                        position: np,
                        message: "expected +1 or -1".into(),
                    });
                }
            }
            lx.expect(Tok::Comma, "`,`")?;
            let (f, fp) = lx.expect_num("0 or 1")?;
            if f > 1 {
                return Err(ParseError::BadArity {
                    atom: "EXT16".into(),
                    position: fp,
                    message: "expected 0 or 1".into(),
                });
            }
            GroupSpec::Ext16(sign, f as u32)
        }
        "PERM" => {
            let (degree, _) = lx.expect_num("a degree")?;
            lx.expect(Tok::Semi, "`;`")?;
            let mut generators = Vec::new();
            loop {
                let mut cycles = Vec::new();
                while matches!(lx.peek().0, Tok::LParen) {
                    lx.next();
                    let mut cycle = Vec::new();
                    loop {
                        match lx.peek().clone() {
                            (Tok::Num(v), _) => {
                                lx.next();
                                cycle.push(v);
                            }
                            (Tok::RParen, _) => {
                                lx.next();
                                break;
                            }
                            (_, pos) => {
                                return Err(ParseError::Syntax {
                                    position: pos,
                                    message: "expected a cycle entry or `)`".into(),
                                })
                            }
                        }
                    }
                    if cycle.is_empty() {
                        return Err(ParseError::BadArity {
                            atom: "PERM".into(),
                            position: name_pos,
                            message: "empty cycle".into(),
                        });
                    }
                    let mut seen = cycle.clone();
                    seen.sort_unstable();
                    seen.dedup();
                    if seen.len() != cycle.len() {
                        return Err(ParseError::BadArity {
                            atom: "PERM".into(),
                            position: name_pos,
                            message: "repeated entry in cycle".into(),
                        });
                    }
                    cycles.push(cycle);
                }
                if cycles.is_empty() {
                    let pos = lx.peek().1;
                    return Err(ParseError::BadArity {
                        atom: "PERM".into(),
                        position: pos,
                        message: "expected at least one cycle".into(),
                    });
                }
                generators.push(cycles);
                if matches!(lx.peek().0, Tok::Comma) {
                    lx.next();
                } else {
                    break;
                }
            }
            GroupSpec::Perm { degree, generators }
        }
        _ => unreachable!(),
    };
    lx.expect(Tok::RParen, "`)`")?;
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::count_of_order;
    use crate::construct::dicyclic;

    #[test]
    fn atoms_realize() {
        let q8 = parse_spec("Q(8)").unwrap().realize().unwrap();
        assert_eq!(q8, dicyclic(8).unwrap());
        assert_eq!(q8.label(), Some("Q(8)"));
        assert_eq!(parse_spec("C(1)").unwrap().realize().unwrap().order(), 1);
        assert_eq!(parse_spec("E(2,3)").unwrap().realize().unwrap().order(), 8);
        assert_eq!(parse_spec("ES(-,32)").unwrap().realize().unwrap().order(), 32);
        assert_eq!(parse_spec("EXT16(-1,1)").unwrap().realize().unwrap().order(), 16);
        assert_eq!(parse_spec("S(4)").unwrap().realize().unwrap().order(), 24);
        assert_eq!(parse_spec("A(5)").unwrap().realize().unwrap().order(), 60);
    }

    #[test]
    fn products_left_associate() {
        let spec = parse_spec("C(2)xC(2)xC(3)").unwrap();
        match &spec {
            GroupSpec::Product(lhs, rhs) => {
                assert_eq!(**rhs, GroupSpec::Cyclic(3));
                assert!(matches!(**lhs, GroupSpec::Product(_, _)));
            }
            other => panic!("expected a product, got {other:?}"),
        }
        let l = spec.realize().unwrap();
        assert_eq!(count_of_order(&l, 6), 3);
        assert_eq!(l.label(), Some("C(2)xC(2)xC(3)"));
        // Parenthesization is honored.
        let spec2 = parse_spec("C(2)x(C(2)xC(3))").unwrap();
        assert_eq!(spec2.realize().unwrap().order(), 12);
    }

    #[test]
    fn unclosed_paren_position() {
        let err = parse_spec("D(10").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { .. }));
        assert_eq!(err.position(), 4);
    }

    #[test]
    fn unknown_atoms_and_bad_arity() {
        let err = parse_spec("X(3)").unwrap_err();
        assert!(matches!(err, ParseError::UnknownAtom { .. }));
        assert_eq!(err.position(), 0);
        assert!(parse_spec("C()").is_err());
        assert!(parse_spec("C(2,3)").is_err());
        assert!(parse_spec("E(2)").is_err());
        assert!(parse_spec("ES(2,8)").is_err());
        assert!(parse_spec("EXT16(2,0)").is_err());
        assert!(parse_spec("").is_err());
        assert!(parse_spec("C(2)x").is_err());
        assert!(parse_spec("C(2)C(3)").is_err());
    }

    #[test]
    fn whitespace_is_insignificant() {
        assert_eq!(parse_spec(" C(2) x C(3) ").unwrap(), parse_spec("C(2)xC(3)").unwrap());
    }

    #[test]
    fn perm_atoms() {
        let spec = parse_spec("PERM(5; (1 2 3 4 5), (2 5)(3 4))").unwrap();
        let g = spec.realize().unwrap();
        assert_eq!(g.order(), 10);
        assert!(crate::structure::are_isomorphic(&g, &crate::construct::dihedral(10).unwrap())
            .unwrap());
        assert!(parse_spec("PERM(5; (1 2 12))").unwrap().realize().is_err());
        assert!(parse_spec("PERM(5; (1 1 2))").is_err());
        assert!(parse_spec("PERM(5;)").is_err());
    }

    #[test]
    fn canonical_print_round_trip() {
        for s in [
            "Q(8)",
            "C(2)xC(2)xC(3)",
            "E(2,3)xC(5)",
            "ES(+,32)",
            "EXT16(+1,0)",
            "PERM(5; (1 2 3 4 5), (2 5)(3 4))",
            "(C(2)xC(3))xD(8)",
        ] {
            let spec = parse_spec(s).unwrap();
            let printed = spec.to_string();
            let reparsed = parse_spec(&printed).unwrap();
            assert_eq!(reparsed, spec, "round trip of {s}");
            assert_eq!(reparsed.to_string(), printed, "canonical fixpoint of {s}");
        }
        // The +1 form without an explicit sign parses to the same spec.
        assert_eq!(parse_spec("EXT16(1,0)").unwrap(), parse_spec("EXT16(+1,0)").unwrap());
    }

    #[test]
    fn realize_errors_pass_through() {
        assert!(parse_spec("C(5000)").unwrap().realize().is_err());
        assert!(parse_spec("D(7)").unwrap().realize().is_err());
        assert!(parse_spec("E(4,2)").unwrap().realize().is_err());
        assert!(parse_spec("S(7)").unwrap().realize().is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn atom_strategy() -> impl Strategy<Value = GroupSpec> {
            prop_oneof![
                (1usize..=30).prop_map(GroupSpec::Cyclic),
                (1usize..=20).prop_map(|n| GroupSpec::Dihedral(2 * n)),
                (2usize..=10).prop_map(|n| GroupSpec::Dicyclic(4 * n)),
                (1usize..=6).prop_map(GroupSpec::Symmetric),
                (1usize..=6).prop_map(GroupSpec::Alternating),
                (0u32..=3).prop_map(|k| GroupSpec::ElementaryAbelian(2, k)),
                (0u32..=2).prop_map(|k| GroupSpec::ElementaryAbelian(3, k)),
                prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]
                    .prop_map(|s| GroupSpec::Extraspecial(s, 32)),
                (prop_oneof![Just(1i32), Just(-1i32)], 0u32..=1)
                    .prop_map(|(e, f)| GroupSpec::Ext16(e, f)),
                proptest::collection::vec(
                    proptest::collection::vec(1usize..=5, 1..=3),
                    1..=2
                )
                .prop_filter_map("cycles must have distinct entries", |gens| {
                    let cleaned: Vec<Vec<Vec<usize>>> = gens
                        .into_iter()
                        .map(|cycle| {
                            let mut c = cycle;
                            c.sort_unstable();
                            c.dedup();
                            vec![c]
                        })
                        .collect();
                    Some(GroupSpec::Perm { degree: 5, generators: cleaned })
                }),
            ]
        }

        fn spec_strategy() -> impl Strategy<Value = GroupSpec> {
            atom_strategy().prop_recursive(3, 8, 2, |inner| {
                (inner.clone(), inner)
                    .prop_map(|(a, b)| GroupSpec::Product(Box::new(a), Box::new(b)))
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(128))]

            #[test]
            fn print_parse_round_trip(spec in spec_strategy()) {
                let printed = spec.to_string();
                let reparsed = parse_spec(&printed).unwrap();
                prop_assert_eq!(&reparsed, &spec);
                prop_assert_eq!(reparsed.to_string(), printed);
            }
        }
    }
}
