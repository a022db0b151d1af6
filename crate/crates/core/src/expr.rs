//! A small expression language for compound zero-divisor graphs.
//!
//! ```text
//! atom   := "zn(" INT ")" | "comp(" expr ")" | "(" expr ")"
//! copies := INT "*" atom | atom
//! prod   := copies ("x" copies)*
//! expr   := prod ("+" prod)*
//! ```
//!
//! `*` binds tightest, then the left-associative Cartesian product `x`, then
//! the variadic join `+`. Whitespace between tokens is ignored.

use std::fmt;

use thiserror::Error;

use crate::error::Result;
use crate::graph::Graph;
use crate::ops::{cartesian_product, complement, copies, join};
use crate::rings::{zero_divisor_graph, Modulus};

pub const MAX_MODULUS: u64 = 1_000_000_000_000;
pub const MAX_COPIES: u64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilyExpr {
    Zn(u64),
    Copies(u64, Box<FamilyExpr>),
    Join(Vec<FamilyExpr>),
    Product(Box<FamilyExpr>, Box<FamilyExpr>),
    Complement(Box<FamilyExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: expected {}", .expected.join(" or "))]
    Syntax {
        offset: usize,
        expected: Vec<&'static str>,
    },
    #[error("integer at byte {offset} out of bounds: {message}")]
    Bounds { offset: usize, message: String },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. } | ParseError::Bounds { offset, .. } => *offset,
        }
    }
}

pub fn parse(src: &str) -> std::result::Result<FamilyExpr, ParseError> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.syntax(&["\"+\"", "\"x\"", "end of input"]));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn syntax(&self, expected: &[&'static str]) -> ParseError {
        ParseError::Syntax {
            offset: self.pos,
            expected: expected.to_vec(),
        }
    }

    /// Consumes `tok` after optional whitespace.
    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(tok.as_bytes()) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn peek_digit(&mut self) -> bool {
        self.skip_ws();
        self.src.get(self.pos).is_some_and(u8::is_ascii_digit)
    }

    fn int(&mut self, lo: u64, hi: u64) -> std::result::Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax(&["integer"]));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        match text.parse::<u64>() {
            Ok(v) if (lo..=hi).contains(&v) => Ok(v),
            _ => Err(ParseError::Bounds {
                offset: start,
                message: format!("{text} not in {lo}..={hi}"),
            }),
        }
    }

    fn expect(
        &mut self,
        tok: &'static str,
        label: &'static str,
    ) -> std::result::Result<(), ParseError> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.syntax(&[label]))
        }
    }

    fn expr(&mut self) -> std::result::Result<FamilyExpr, ParseError> {
        let mut parts = vec![self.prod()?];
        while self.eat("+") {
            parts.push(self.prod()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().expect("one part")
        } else {
            FamilyExpr::Join(parts)
        })
    }

    fn prod(&mut self) -> std::result::Result<FamilyExpr, ParseError> {
        let mut left = self.copies()?;
        while self.eat("x") {
            let right = self.copies()?;
            left = FamilyExpr::Product(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn copies(&mut self) -> std::result::Result<FamilyExpr, ParseError> {
        if self.peek_digit() {
            let k = self.int(1, MAX_COPIES)?;
            self.expect("*", "\"*\"")?;
            let base = self.atom()?;
            Ok(FamilyExpr::Copies(k, Box::new(base)))
        } else {
            self.atom()
        }
    }

    fn atom(&mut self) -> std::result::Result<FamilyExpr, ParseError> {
        if self.eat("zn") {
            self.expect("(", "\"(\"")?;
            let n = self.int(2, MAX_MODULUS)?;
            self.expect(")", "\")\"")?;
            Ok(FamilyExpr::Zn(n))
        } else if self.eat("comp") {
            self.expect("(", "\"(\"")?;
            let inner = self.expr()?;
            self.expect(")", "\")\"")?;
            Ok(FamilyExpr::Complement(Box::new(inner)))
        } else if self.eat("(") {
            let inner = self.expr()?;
            self.expect(")", "\")\"")?;
            Ok(inner)
        } else {
            Err(self.syntax(&["\"zn(\"", "\"comp(\"", "\"(\""]))
        }
    }
}

/// Builds the graph an expression denotes.
pub fn evaluate(e: &FamilyExpr) -> Result<Graph> {
    match e {
        FamilyExpr::Zn(n) => zero_divisor_graph(Modulus::new(*n)?),
        FamilyExpr::Copies(k, base) => copies(*k as usize, &evaluate(base)?),
        FamilyExpr::Join(parts) => {
            let graphs = parts.iter().map(evaluate).collect::<Result<Vec<_>>>()?;
            join(&graphs)
        }
        FamilyExpr::Product(l, r) => cartesian_product(&evaluate(l)?, &evaluate(r)?),
        FamilyExpr::Complement(inner) => Ok(complement(&evaluate(inner)?)),
    }
}

/// Canonical text with minimal parentheses.
pub fn unparse(e: &FamilyExpr) -> String {
    e.to_string()
}

// binding strength: join < product < copies/atoms
fn level(e: &FamilyExpr) -> u8 {
    match e {
        FamilyExpr::Join(_) => 0,
        FamilyExpr::Product(..) => 1,
        FamilyExpr::Copies(..) => 2,
        FamilyExpr::Zn(_) | FamilyExpr::Complement(_) => 3,
    }
}

fn write_at(f: &mut fmt::Formatter<'_>, e: &FamilyExpr, min_level: u8) -> fmt::Result {
    if level(e) < min_level {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for FamilyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyExpr::Zn(n) => write!(f, "zn({n})"),
            FamilyExpr::Complement(inner) => write!(f, "comp({inner})"),
            FamilyExpr::Copies(k, base) => {
                write!(f, "{k}*")?;
                write_at(f, base, 3)
            }
            FamilyExpr::Product(l, r) => {
                write_at(f, l, 1)?;
                f.write_str(" x ")?;
                write_at(f, r, 2)
            }
            FamilyExpr::Join(parts) => {
                for (i, part) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("+")?;
                    }
                    write_at(f, part, 1)?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use FamilyExpr::*;

    fn zn(n: u64) -> FamilyExpr {
        Zn(n)
    }

    #[test]
    fn parses_theorem_objects() {
        assert_eq!(
            parse("2*zn(9)+zn(4)").unwrap(),
            Join(vec![Copies(2, Box::new(zn(9))), zn(4)])
        );
        assert_eq!(
            parse("(zn(9)+zn(4)) x zn(9)").unwrap(),
            Product(Box::new(Join(vec![zn(9), zn(4)])), Box::new(zn(9)))
        );
        assert_eq!(
            parse("comp(zn(6))+3*zn(9)").unwrap(),
            Join(vec![
                Complement(Box::new(zn(6))),
                Copies(3, Box::new(zn(9)))
            ])
        );
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(
            parse("zn(4) x zn(6) x zn(9)").unwrap(),
            Product(
                Box::new(Product(Box::new(zn(4)), Box::new(zn(6)))),
                Box::new(zn(9))
            )
        );
        assert_eq!(
            parse("zn(4)+zn(6)+zn(9)").unwrap(),
            Join(vec![zn(4), zn(6), zn(9)])
        );
        assert_eq!(
            parse("2*zn(4) x zn(9) + zn(6)").unwrap(),
            Join(vec![
                Product(Box::new(Copies(2, Box::new(zn(4)))), Box::new(zn(9))),
                zn(6)
            ])
        );
        assert_eq!(parse(" ( ( zn ( 10 ) ) ) ").unwrap(), zn(10));
    }

    #[test]
    fn errors_are_positioned() {
        let e = parse("zn()").unwrap_err();
        assert_eq!(e.offset(), 3);
        assert!(matches!(e, ParseError::Syntax { .. }));
        assert_eq!(parse("zn(").unwrap_err().offset(), 3);
        assert_eq!(parse("zn(9)+").unwrap_err().offset(), 6);
        assert_eq!(parse("zn(9) zn(4)").unwrap_err().offset(), 6);
        assert_eq!(parse("2 zn(4)").unwrap_err().offset(), 2);
        assert_eq!(parse("").unwrap_err().offset(), 0);
        assert!(matches!(
            parse("zn(1)").unwrap_err(),
            ParseError::Bounds { offset: 3, .. }
        ));
        assert!(matches!(
            parse("0*zn(4)").unwrap_err(),
            ParseError::Bounds { offset: 0, .. }
        ));
        assert!(matches!(
            parse("zn(99999999999999999999999)").unwrap_err(),
            ParseError::Bounds { .. }
        ));
        assert!(parse("zn(9)x").is_err());
        assert!(parse("comp(zn(9)").is_err());
        assert!(parse("zn(9) × zn(4)").is_err());
    }

    #[test]
    fn evaluates() {
        let g = evaluate(&parse("zn(10)").unwrap()).unwrap();
        assert_eq!(g.names(), &["2", "4", "5", "6", "8"]);
        assert_eq!(g.size(), 4);
        let g = evaluate(&parse("zn(6) x zn(9)").unwrap()).unwrap();
        assert_eq!((g.order(), g.size()), (6, 7));
        let g = evaluate(&parse("1*zn(4)").unwrap()).unwrap();
        assert_eq!((g.order(), g.size()), (1, 0));
        assert!(evaluate(&parse("zn(7) x zn(9)").unwrap()).is_err());
        // two-sided join: no edges between copies on one side
        let g = evaluate(&parse("3*zn(9)+2*zn(4)").unwrap()).unwrap();
        assert_eq!(g.order(), 8);
        for u in 0..6 {
            for v in 0..6 {
                if u / 2 != v / 2 {
                    assert!(!g.has_edge(u, v));
                }
            }
            assert!(g.has_edge(u, 6) && g.has_edge(u, 7));
        }
        assert!(!g.has_edge(6, 7));
    }

    #[test]
    fn unparse_canonical() {
        assert_eq!(
            unparse(&Join(vec![Copies(2, Box::new(zn(9))), zn(4)])),
            "2*zn(9)+zn(4)"
        );
        assert_eq!(
            unparse(&Product(
                Box::new(Join(vec![zn(9), zn(4)])),
                Box::new(zn(9))
            )),
            "(zn(9)+zn(4)) x zn(9)"
        );
        assert_eq!(unparse(&Complement(Box::new(zn(6)))), "comp(zn(6))");
        let nested = Join(vec![Join(vec![zn(4), zn(6)]), zn(9)]);
        assert_eq!(unparse(&nested), "(zn(4)+zn(6))+zn(9)");
        assert_eq!(parse(&unparse(&nested)).unwrap(), nested);
        let right = Product(
            Box::new(zn(4)),
            Box::new(Product(Box::new(zn(6)), Box::new(zn(9)))),
        );
        assert_eq!(unparse(&right), "zn(4) x (zn(6) x zn(9))");
        let cc = Copies(2, Box::new(Copies(3, Box::new(zn(4)))));
        assert_eq!(unparse(&cc), "2*(3*zn(4))");
        assert_eq!(parse(&unparse(&cc)).unwrap(), cc);
    }
}
