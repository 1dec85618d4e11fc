use super::{Elem, Gen, GenContext, GroupExpr, RingExpr, Term};
use crate::numtheory::prime_power;

/// A syntax or validation error at a byte offset.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("at byte {offset}: {message}{}", expected_suffix(.expected))]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
    pub expected: Vec<String>,
}

fn expected_suffix(expected: &[String]) -> String {
    if expected.is_empty() {
        String::new()
    } else {
        format!(" (expected {})", expected.join(" | "))
    }
}

const KEYWORDS: [&str; 9] = ["EndC4C2", "Gamma", "Quot", "GA", "GF", "PQ", "UT", "M", "Z"];
const MAX_DEPTH: usize = 64;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    depth: usize,
}

type PResult<T> = Result<T, ParseError>;

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn fail<T>(&self, offset: usize, message: impl Into<String>, expected: &[&str]) -> PResult<T> {
        Err(ParseError { offset, message: message.into(), expected: expected.iter().map(|s| s.to_string()).collect() })
    }

    fn unexpected<T>(&mut self, expected: &[&str]) -> PResult<T> {
        let found = match self.peek() {
            Some(c) if c.is_ascii_graphic() => format!("unexpected '{}'", c as char),
            Some(c) => format!("unexpected byte 0x{c:02x}"),
            None => "unexpected end of input".to_string(),
        };
        self.fail(self.pos, found, expected)
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            let s = (c as char).to_string();
            self.unexpected(&[s.as_str()])
        }
    }

    fn nat(&mut self) -> PResult<(u64, usize)> {
        self.skip_ws();
        let start = self.pos;
        let mut v: u64 = 0;
        while let Some(&c) = self.src.get(self.pos) {
            if !c.is_ascii_digit() {
                break;
            }
            v = match v.checked_mul(10).and_then(|v| v.checked_add(u64::from(c - b'0'))) {
                Some(v) => v,
                None => return self.fail(start, "number too large", &[]),
            };
            self.pos += 1;
        }
        if self.pos == start {
            return self.unexpected(&["number"]);
        }
        Ok((v, start))
    }

    fn positive(&mut self, what: &str) -> PResult<u64> {
        let (v, at) = self.nat()?;
        if v == 0 {
            return self.fail(at, format!("{what} must be positive"), &[]);
        }
        Ok(v)
    }

    fn int(&mut self) -> PResult<i64> {
        let neg = self.eat(b'-');
        let (v, at) = self.nat()?;
        let v = i64::try_from(v).or_else(|_| self.fail(at, "number too large", &[]))?;
        Ok(if neg { -v } else { v })
    }

    fn keyword(&mut self) -> Option<&'static str> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let kw = KEYWORDS.iter().find(|k| rest.starts_with(k.as_bytes()))?;
        self.pos += kw.len();
        Some(kw)
    }

    fn expr(&mut self) -> PResult<RingExpr> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return self.fail(self.pos, "expression nested too deeply", &[]);
        }
        let mut acc = self.atom()?;
        while self.eat(b'x') {
            let rhs = self.atom()?;
            acc = RingExpr::Prod(Box::new(acc), Box::new(rhs));
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn atom(&mut self) -> PResult<RingExpr> {
        let Some(kw) = self.keyword() else {
            return self.unexpected(&KEYWORDS);
        };
        if kw == "EndC4C2" {
            return Ok(RingExpr::EndC4C2);
        }
        self.expect(b'(')?;
        let e = match kw {
            "Z" => RingExpr::Zn(self.positive("modulus")?),
            "GF" => {
                let (q, qat) = self.nat()?;
                if prime_power(q).is_none() {
                    return self.fail(qat, format!("{q} is not a prime power"), &[]);
                }
                RingExpr::GF(q)
            }
            "M" | "UT" => {
                let m = self.positive("matrix size")?;
                self.expect(b',')?;
                let base = Box::new(self.expr()?);
                if kw == "M" {
                    RingExpr::Mat(m, base)
                } else {
                    RingExpr::UT(m, base)
                }
            }
            "GA" => {
                let base = self.expr()?;
                self.expect(b',')?;
                RingExpr::GA(Box::new(base), self.group()?)
            }
            "PQ" => {
                let base = self.expr()?;
                self.expect(b',')?;
                let poly_at = self.pos;
                let coeffs = self.poly()?;
                if coeffs.last() != Some(&1) {
                    return self.fail(poly_at, "modulus must be monic (last coefficient 1)", &[]);
                }
                RingExpr::PQ(Box::new(base), coeffs)
            }
            "Gamma" => RingExpr::Gamma(self.positive("Gamma index")?),
            "Quot" => {
                let base = self.expr()?;
                self.expect(b',')?;
                self.expect(b'[')?;
                let ctx = base.gen_context();
                let mut elems = vec![self.elem(ctx)?];
                while self.eat(b';') {
                    elems.push(self.elem(ctx)?);
                }
                self.expect(b']')?;
                RingExpr::Quot(Box::new(base), elems)
            }
            _ => unreachable!("keyword table"),
        };
        self.expect(b')')?;
        Ok(e)
    }

    fn group(&mut self) -> PResult<GroupExpr> {
        let g = match self.peek() {
            Some(b'C') => GroupExpr::Cyclic(0),
            Some(b'D') => GroupExpr::Dihedral(0),
            _ => return self.unexpected(&["C", "D"]),
        };
        self.pos += 1;
        self.expect(b'(')?;
        let (n, at) = self.nat()?;
        let g = match g {
            GroupExpr::Cyclic(_) if n == 0 => return self.fail(at, "group order must be positive", &[]),
            GroupExpr::Cyclic(_) => GroupExpr::Cyclic(n),
            GroupExpr::Dihedral(_) if n == 0 || n % 2 == 1 => {
                return self.fail(at, format!("dihedral order must be positive and even, got {n}"), &[])
            }
            GroupExpr::Dihedral(_) => GroupExpr::Dihedral(n),
        };
        self.expect(b')')?;
        Ok(g)
    }

    fn poly(&mut self) -> PResult<Vec<i64>> {
        self.expect(b'[')?;
        let mut cs = vec![self.int()?];
        while self.eat(b',') {
            cs.push(self.int()?);
        }
        self.expect(b']')?;
        Ok(cs)
    }

    fn elem(&mut self, ctx: GenContext) -> PResult<Elem> {
        let mut terms = vec![self.term(ctx)?];
        while self.eat(b'+') {
            terms.push(self.term(ctx)?);
        }
        Ok(Elem { terms })
    }

    fn exponent(&mut self) -> PResult<u64> {
        if self.eat(b'^') {
            Ok(self.nat()?.0)
        } else {
            Ok(1)
        }
    }

    fn term(&mut self, ctx: GenContext) -> PResult<Term> {
        let mut coeff = 1;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let (n, _) = self.nat()?;
            if !self.eat(b'*') {
                return Ok(Term { coeff: n, gen: Gen::One });
            }
            coeff = n;
        }
        let at = {
            self.skip_ws();
            self.pos
        };
        let gen = match self.peek() {
            Some(b'1') => {
                self.pos += 1;
                Gen::One
            }
            Some(b's') => {
                self.pos += 1;
                Gen::S
            }
            Some(b'r') => {
                self.pos += 1;
                let exp = self.exponent()?;
                let reflect = self.eat(b'*');
                if reflect && !self.eat(b's') {
                    return self.unexpected(&["s"]);
                }
                Gen::R { exp, reflect }
            }
            Some(b'x') => {
                self.pos += 1;
                Gen::X(self.exponent()?)
            }
            Some(b'g') => {
                self.pos += 1;
                Gen::G(self.exponent()?)
            }
            _ => return self.unexpected(&["1", "r", "s", "x", "g"]),
        };
        if !gen.allowed_in(ctx) {
            let name = match gen {
                Gen::R { .. } => "r",
                Gen::S => "s",
                Gen::X(_) => "x",
                Gen::G(_) => "g",
                Gen::One => "1",
            };
            let valid: &[&str] = match ctx {
                GenContext::Dihedral => &["1", "r", "s"],
                GenContext::Cyclic => &["1", "g"],
                GenContext::Poly => &["1", "x"],
                GenContext::Plain => &["1"],
            };
            return self.fail(at, format!("generator '{name}' is not available in this ring"), valid);
        }
        Ok(Term { coeff, gen })
    }
}

/// Parses raw bytes; never panics.
pub fn parse_bytes(src: &[u8]) -> Result<RingExpr, ParseError> {
    let mut p = Parser { src, pos: 0, depth: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.unexpected(&["x", "end of input"]);
    }
    Ok(e)
}

pub fn parse_ring_expr(text: &str) -> Result<RingExpr, ParseError> {
    parse_bytes(text.as_bytes())
}
