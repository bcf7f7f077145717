//! The construction language: a tree of builder applications with a
//! canonical text form, e.g. `pyramid(t=2, product(simplex(2), simplex(2)))`.
//!
//! Grammar: a builder name followed by a parenthesized comma-separated list
//! of arguments; each argument is an integer, a named integer (`t=2`), or a
//! nested expression. Integer arguments bind to the builder's integer
//! parameters (by name when named, by position otherwise) and expression
//! arguments to its child slots in order, so `pyramid(t=1, cube(3))` and
//! `pyramid(cube(3), 1)` parse to the same tree.

use std::fmt;

use crate::constructors;
use crate::error::{ParseError, Result};
use crate::incidence::IncidencePolytope;

/// A construction expression. Integer parameters use the names documented
/// by the corresponding builders in [`crate::constructors`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructionExpr {
    Point,
    Segment,
    Square,
    Simplex { d: u32 },
    Polygon { n: u32 },
    Cube { d: u32 },
    Pyramid { base: Box<ConstructionExpr>, t: u32 },
    Bipyramid { base: Box<ConstructionExpr> },
    Product(Box<ConstructionExpr>, Box<ConstructionExpr>),
    FreeJoin(Box<ConstructionExpr>, Box<ConstructionExpr>),
    Triplex { s: u32, t: u32 },
    Delta { r: u32, s: u32, t: u32 },
    Truncate { base: Box<ConstructionExpr>, v: u32 },
    Pentasm { d: u32 },
    CappedPrism { ell: u32, d: u32 },
    Sigma3,
    Cyclic { n: u32, d: u32 },
}

impl ConstructionExpr {
    /// Builds the polytope this expression denotes.
    pub fn eval(&self) -> Result<IncidencePolytope> {
        use ConstructionExpr::*;
        match self {
            Point => Ok(constructors::point()),
            Segment => Ok(constructors::segment()),
            Square => Ok(constructors::square()),
            Simplex { d } => Ok(constructors::simplex(*d as usize)),
            Polygon { n } => constructors::polygon(*n as usize),
            Cube { d } => constructors::cube(*d as usize),
            Pyramid { base, t } => constructors::pyramid(&base.eval()?, *t as usize),
            Bipyramid { base } => constructors::bipyramid(&base.eval()?),
            Product(a, b) => constructors::product(&a.eval()?, &b.eval()?),
            FreeJoin(a, b) => constructors::free_join(&a.eval()?, &b.eval()?),
            Triplex { s, t } => constructors::triplex(*s as usize, *t as usize),
            Delta { r, s, t } => constructors::delta(*r as usize, *s as usize, *t as usize),
            Truncate { base, v } => {
                constructors::truncate_simple_vertex(&base.eval()?, *v as usize)
            }
            Pentasm { d } => constructors::pentasm(*d as usize),
            CappedPrism { ell, d } => constructors::capped_prism(*ell as usize, *d as usize),
            Sigma3 => Ok(constructors::sigma3()),
            Cyclic { n, d } => constructors::cyclic(*n as usize, *d as usize),
        }
    }

    pub fn parse(input: &str) -> Result<Self> {
        let mut p = Parser::new(input);
        let expr = p.expr()?;
        p.expect_end()?;
        Ok(expr)
    }
}

impl fmt::Display for ConstructionExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ConstructionExpr::*;
        match self {
            Point => write!(f, "point()"),
            Segment => write!(f, "segment()"),
            Square => write!(f, "square()"),
            Simplex { d } => write!(f, "simplex({d})"),
            Polygon { n } => write!(f, "polygon({n})"),
            Cube { d } => write!(f, "cube({d})"),
            Pyramid { base, t } => write!(f, "pyramid(t={t}, {base})"),
            Bipyramid { base } => write!(f, "bipyramid({base})"),
            Product(a, b) => write!(f, "product({a}, {b})"),
            FreeJoin(a, b) => write!(f, "free_join({a}, {b})"),
            Triplex { s, t } => write!(f, "triplex({s}, {t})"),
            Delta { r, s, t } => write!(f, "delta({r}, {s}, {t})"),
            Truncate { base, v } => write!(f, "truncate(v={v}, {base})"),
            Pentasm { d } => write!(f, "pentasm({d})"),
            CappedPrism { ell, d } => write!(f, "capped_prism({ell}, {d})"),
            Sigma3 => write!(f, "sigma3()"),
            Cyclic { n, d } => write!(f, "cyclic({n}, {d})"),
        }
    }
}

/// One parsed argument.
enum Arg {
    Int(u32),
    Named(String, u32),
    Expr(ConstructionExpr),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let found = match self.rest().chars().next() {
            Some(c) => format!("{c:?}"),
            None => "end of input".to_string(),
        };
        ParseError {
            position: self.pos,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found,
        }
    }

    fn eat(&mut self, token: char) -> std::result::Result<(), ParseError> {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len_utf8();
            Ok(())
        } else {
            Err(self.error(&[&format!("{token:?}")]))
        }
    }

    fn ident(&mut self) -> std::result::Result<String, ParseError> {
        self.skip_ws();
        let rest = self.rest();
        let end = rest
            .char_indices()
            .find(|(_, c)| !c.is_ascii_alphanumeric() && *c != '_')
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        if end == 0 || !rest.chars().next().is_some_and(|c| c.is_ascii_alphabetic()) {
            return Err(self.error(&["builder name"]));
        }
        self.pos += end;
        Ok(rest[..end].to_string())
    }

    fn integer(&mut self) -> std::result::Result<u32, ParseError> {
        self.skip_ws();
        let rest = self.rest();
        let end = rest
            .char_indices()
            .find(|(_, c)| !c.is_ascii_digit())
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        if end == 0 {
            return Err(self.error(&["integer"]));
        }
        let value = rest[..end]
            .parse::<u32>()
            .map_err(|_| self.error(&["integer in range"]))?;
        self.pos += end;
        Ok(value)
    }

    fn expect_end(&mut self) -> std::result::Result<(), ParseError> {
        self.skip_ws();
        if self.rest().is_empty() {
            Ok(())
        } else {
            Err(self.error(&["end of input"]))
        }
    }

    fn arg(&mut self) -> std::result::Result<Arg, ParseError> {
        self.skip_ws();
        if self.rest().chars().next().is_some_and(|c| c.is_ascii_digit()) {
            return Ok(Arg::Int(self.integer()?));
        }
        let start = self.pos;
        let name = self.ident()?;
        self.skip_ws();
        if self.rest().starts_with('=') {
            self.pos += 1;
            return Ok(Arg::Named(name, self.integer()?));
        }
        if self.rest().starts_with('(') {
            self.pos = start;
            return Ok(Arg::Expr(self.expr()?));
        }
        Err(self.error(&["'='", "'('"]))
    }

    fn expr(&mut self) -> std::result::Result<ConstructionExpr, ParseError> {
        let name_pos = self.pos;
        let name = self.ident()?;
        self.eat('(')?;
        let mut args: Vec<Arg> = Vec::new();
        self.skip_ws();
        if !self.rest().starts_with(')') {
            loop {
                args.push(self.arg()?);
                self.skip_ws();
                if self.rest().starts_with(',') {
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
        self.eat(')')?;
        assemble(&name, name_pos, args, self.pos)
    }
}

/// Binds parsed arguments to the builder signature.
fn assemble(
    name: &str,
    name_pos: usize,
    args: Vec<Arg>,
    end_pos: usize,
) -> std::result::Result<ConstructionExpr, ParseError> {
    let mut ints: Vec<u32> = Vec::new();
    let mut named: Vec<(String, u32)> = Vec::new();
    let mut exprs: Vec<ConstructionExpr> = Vec::new();
    for a in args {
        match a {
            Arg::Int(v) => ints.push(v),
            Arg::Named(n, v) => named.push((n, v)),
            Arg::Expr(e) => exprs.push(e),
        }
    }
    let fail = |expected: &str| ParseError {
        position: name_pos,
        expected: vec![expected.to_string()],
        found: format!("{name}(…) ending at byte {end_pos}"),
    };
    // Resolve a builder's integer parameters from named then positional args.
    let mut take_int = |param: &str| -> Option<u32> {
        if let Some(i) = named.iter().position(|(n, _)| n == param) {
            return Some(named.remove(i).1);
        }
        if ints.is_empty() {
            None
        } else {
            Some(ints.remove(0))
        }
    };
    exprs.reverse();
    let mut take_expr = || exprs.pop();

    use ConstructionExpr::*;
    let expr = match name {
        "point" => Point,
        "segment" => Segment,
        "square" => Square,
        "simplex" => Simplex {
            d: take_int("d").ok_or_else(|| fail("simplex(d)"))?,
        },
        "polygon" => Polygon {
            n: take_int("n").ok_or_else(|| fail("polygon(n)"))?,
        },
        "cube" => Cube {
            d: take_int("d").ok_or_else(|| fail("cube(d)"))?,
        },
        "pyramid" => Pyramid {
            t: take_int("t").unwrap_or(1),
            base: Box::new(take_expr().ok_or_else(|| fail("pyramid(t=…, base)"))?),
        },
        "bipyramid" => Bipyramid {
            base: Box::new(take_expr().ok_or_else(|| fail("bipyramid(base)"))?),
        },
        "product" => {
            let a = take_expr().ok_or_else(|| fail("product(a, b)"))?;
            let b = take_expr().ok_or_else(|| fail("product(a, b)"))?;
            Product(Box::new(a), Box::new(b))
        }
        "free_join" => {
            let a = take_expr().ok_or_else(|| fail("free_join(a, b)"))?;
            let b = take_expr().ok_or_else(|| fail("free_join(a, b)"))?;
            FreeJoin(Box::new(a), Box::new(b))
        }
        "triplex" => Triplex {
            s: take_int("s").ok_or_else(|| fail("triplex(s, t)"))?,
            t: take_int("t").ok_or_else(|| fail("triplex(s, t)"))?,
        },
        "delta" => Delta {
            r: take_int("r").ok_or_else(|| fail("delta(r, s, t)"))?,
            s: take_int("s").ok_or_else(|| fail("delta(r, s, t)"))?,
            t: take_int("t").ok_or_else(|| fail("delta(r, s, t)"))?,
        },
        "truncate" => Truncate {
            v: take_int("v").ok_or_else(|| fail("truncate(v=…, base)"))?,
            base: Box::new(take_expr().ok_or_else(|| fail("truncate(v=…, base)"))?),
        },
        "pentasm" => Pentasm {
            d: take_int("d").ok_or_else(|| fail("pentasm(d)"))?,
        },
        "capped_prism" => CappedPrism {
            ell: take_int("ell").ok_or_else(|| fail("capped_prism(ell, d)"))?,
            d: take_int("d").ok_or_else(|| fail("capped_prism(ell, d)"))?,
        },
        "sigma3" => Sigma3,
        "cyclic" => Cyclic {
            n: take_int("n").ok_or_else(|| fail("cyclic(n, d)"))?,
            d: take_int("d").ok_or_else(|| fail("cyclic(n, d)"))?,
        },
        _ => {
            return Err(ParseError {
                position: name_pos,
                expected: vec!["a builder name".to_string()],
                found: format!("{name:?}"),
            })
        }
    };
    if !ints.is_empty() || !named.is_empty() || !exprs.is_empty() {
        return Err(fail("fewer arguments"));
    }
    Ok(expr)
}

/// Parses and evaluates in one step.
pub fn build(input: &str) -> Result<IncidencePolytope> {
    ConstructionExpr::parse(input)?.eval()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::lattice::enumerate_faces;
    use crate::FVector;

    #[test]
    fn parses_canonical_form() {
        let e = ConstructionExpr::parse("pyramid(t=2, product(simplex(2), simplex(2)))").unwrap();
        assert_eq!(
            e,
            ConstructionExpr::Pyramid {
                t: 2,
                base: Box::new(ConstructionExpr::Product(
                    Box::new(ConstructionExpr::Simplex { d: 2 }),
                    Box::new(ConstructionExpr::Simplex { d: 2 }),
                )),
            }
        );
        // Display emits the same canonical text.
        assert_eq!(e.to_string(), "pyramid(t=2, product(simplex(2), simplex(2)))");
    }

    #[test]
    fn positional_and_named_agree() {
        let a = ConstructionExpr::parse("pyramid(cube(3), 1)").unwrap();
        let b = ConstructionExpr::parse("pyramid(t=1, cube(3))").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn eval_matches_tables() {
        let p = build("pentasm(5)").unwrap();
        assert_eq!(
            enumerate_faces(&p).unwrap().f_vector(),
            FVector::from_usizes(&[11, 29, 36, 24, 8])
        );
        let q = build("pyramid(t=1, product(simplex(2), simplex(2)))").unwrap();
        assert_eq!(q.vertex_count(), 10);
        assert_eq!(q.facet_count(), 7);
    }

    #[test]
    fn error_reports_position_and_expectation() {
        let err = ConstructionExpr::parse("pyramid(t=2").unwrap_err();
        let Error::Parse(pe) = err else {
            panic!("expected parse error")
        };
        assert_eq!(pe.position, 11);
        assert!(pe.expected.iter().any(|e| e.contains(')') || e.contains("','")));

        let err = ConstructionExpr::parse("frustum(3)").unwrap_err();
        let Error::Parse(pe) = err else {
            panic!("expected parse error")
        };
        assert_eq!(pe.position, 0);
    }

    #[test]
    fn dimension_errors_surface() {
        assert!(matches!(
            build("capped_prism(5, 4)"),
            Err(Error::DomainError(_))
        ));
        assert!(matches!(build("cyclic(3, 4)"), Err(Error::DomainError(_))));
    }

    #[test]
    fn display_round_trips() {
        for text in [
            "sigma3()",
            "truncate(v=0, triplex(2, 2))",
            "free_join(square(), square())",
            "capped_prism(3, 5)",
            "cyclic(8, 4)",
        ] {
            let e = ConstructionExpr::parse(text).unwrap();
            assert_eq!(ConstructionExpr::parse(&e.to_string()).unwrap(), e);
        }
    }
}
