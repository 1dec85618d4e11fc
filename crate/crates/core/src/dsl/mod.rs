//! A small expression language naming finite rings, e.g. `GA(GF(2), D(6))`
//! or `Z(4) x M(2,GF(2))`.

mod eval;
mod parser;

pub use eval::{eval_ring_expr, Evaluated};
pub use parser::{parse_bytes, parse_ring_expr, ParseError};

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingExpr {
    Zn(u64),
    GF(u64),
    Mat(u64, Box<RingExpr>),
    UT(u64, Box<RingExpr>),
    GA(Box<RingExpr>, GroupExpr),
    /// Ascending coefficients of a monic modulus.
    PQ(Box<RingExpr>, Vec<i64>),
    Prod(Box<RingExpr>, Box<RingExpr>),
    Gamma(u64),
    EndC4C2,
    Quot(Box<RingExpr>, Vec<Elem>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupExpr {
    Cyclic(u64),
    /// Holds the group order, so `D(12)` has 12 elements.
    Dihedral(u64),
}

/// A formal sum of terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Elem {
    pub terms: Vec<Term>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Term {
    pub coeff: u64,
    pub gen: Gen,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gen {
    One,
    /// `r^exp`, followed by `s` when `reflect`.
    R {
        exp: u64,
        reflect: bool,
    },
    S,
    X(u64),
    G(u64),
}

/// Which generators an element expression may mention.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenContext {
    Plain,
    Dihedral,
    Cyclic,
    Poly,
}

impl RingExpr {
    pub fn gen_context(&self) -> GenContext {
        match self {
            RingExpr::GA(_, GroupExpr::Dihedral(_)) => GenContext::Dihedral,
            RingExpr::GA(_, GroupExpr::Cyclic(_)) => GenContext::Cyclic,
            RingExpr::PQ(..) => GenContext::Poly,
            RingExpr::Quot(inner, _) => inner.gen_context(),
            _ => GenContext::Plain,
        }
    }
}

impl Gen {
    pub fn allowed_in(&self, ctx: GenContext) -> bool {
        match self {
            Gen::One => true,
            Gen::R { .. } | Gen::S => ctx == GenContext::Dihedral,
            Gen::G(_) => ctx == GenContext::Cyclic,
            Gen::X(_) => ctx == GenContext::Poly,
        }
    }
}

fn power(f: &mut fmt::Formatter<'_>, name: &str, exp: u64) -> fmt::Result {
    if exp == 1 {
        write!(f, "{name}")
    } else {
        write!(f, "{name}^{exp}")
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::One => write!(f, "1"),
            Gen::S => write!(f, "s"),
            Gen::R { exp, reflect } => {
                power(f, "r", *exp)?;
                if *reflect {
                    write!(f, "*s")?;
                }
                Ok(())
            }
            Gen::X(e) => power(f, "x", *e),
            Gen::G(e) => power(f, "g", *e),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff == 1 {
            write!(f, "{}", self.gen)
        } else {
            write!(f, "{}*{}", self.coeff, self.gen)
        }
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Cyclic(n) => write!(f, "C({n})"),
            GroupExpr::Dihedral(n) => write!(f, "D({n})"),
        }
    }
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Zn(n) => write!(f, "Z({n})"),
            RingExpr::GF(q) => write!(f, "GF({q})"),
            RingExpr::Mat(m, e) => write!(f, "M({m},{e})"),
            RingExpr::UT(m, e) => write!(f, "UT({m},{e})"),
            RingExpr::GA(e, g) => write!(f, "GA({e},{g})"),
            RingExpr::PQ(e, coeffs) => {
                let cs: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
                write!(f, "PQ({e},[{}])", cs.join(","))
            }
            // no parentheses in the grammar: only left-nested products round-trip
            RingExpr::Prod(l, r) => write!(f, "{l} x {r}"),
            RingExpr::Gamma(k) => write!(f, "Gamma({k})"),
            RingExpr::EndC4C2 => write!(f, "EndC4C2"),
            RingExpr::Quot(e, elems) => {
                let es: Vec<String> = elems.iter().map(|e| e.to_string()).collect();
                write!(f, "Quot({e},[{}])", es.join(";"))
            }
        }
    }
}
