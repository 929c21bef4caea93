//! Bracket-expression parser and evaluator.
//!
//! Grammar sketch (whitespace-insensitive):
//!
//! ```text
//! expr  := ['-'] term (('+' | '-') term)*
//! term  := factor ('*' ringpow)*
//! factor:= symbol | '[' expr ',' expr ']'
//!        | 'ad' '(' expr ')' '^' INT '(' expr ')'
//!        | perm '(' expr ')' | '(' expr ')' | '0'
//! perm  := 'id' | ('(' digits ')')+
//! ```
//!
//! Ring literals admit `t`, `t'`, `t''`, integers, rationals `p/q`, sums,
//! products, quotients by units and integer powers including negative ones.
//! Symbols are resolved against an evaluation context: the loop algebra
//! (`u0..u2`, `x`, `y`, `z`, `X_ij`), the Onsager algebra (`v0..v2`, `A_m`,
//! `G_l`), or the central extension (`X_ij`, `Y_ij`, `C_01..C_03`, `K0`,
//! `K1`, and `u0..u2` for the lifted generators).

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use thiserror::Error;

use crate::extension::{
    ext_ad_power, ext_bracket, s4_ext_apply, ExtElem, LiftTable, Partition,
};
use crate::loop_alg::{ad_power, bracket, psi, xyz_to_u, LoopElem, TetGen, XYZElem};
use crate::onsager::{
    oad_power, obracket, ClassicalImages, IdealKind, OnsagerElem, OnsagerIdealSpec,
};

use crate::rat::Rat;
use crate::ring::RingElem;
use crate::s4::{apply as s4_apply, Perm4};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at position {pos}: expected {expected}")]
    Syntax { pos: usize, expected: String },
    #[error("unknown symbol `{name}` at position {pos}")]
    UnknownSymbol { pos: usize, name: String },
    #[error("arity error at position {pos}: {msg}")]
    Arity { pos: usize, msg: String },
    #[error("division by a non-unit at position {pos}")]
    NonUnit { pos: usize },
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error("symbol `{0}` is not available in the {1} context")]
    ContextError(String, &'static str),
    #[error("scalar `{0}` is not a polynomial, as the Onsager context requires")]
    ScalarNotPolynomial(String),
    #[error("scalar `{0}` must be a rational constant in the extension context")]
    ScalarNotConstant(String),
    #[error("permutations do not act in the Onsager context")]
    NoActionHere,
}

/// A resolved symbol name.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Symbol {
    U(usize),
    /// Lifted cyclic generator in the extension, `uh0`..`uh2`.
    UHat(usize),
    X,
    Y,
    Z,
    Tet(u8, u8),
    V(usize),
    A(i64),
    G(i64),
    YGen(u8, u8),
    C(Partition),
    K(usize),
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::U(i) => write!(f, "u{i}"),
            Symbol::UHat(i) => write!(f, "uh{i}"),
            Symbol::X => write!(f, "x"),
            Symbol::Y => write!(f, "y"),
            Symbol::Z => write!(f, "z"),
            Symbol::Tet(i, j) => write!(f, "X_{i}{j}"),
            Symbol::V(i) => write!(f, "v{i}"),
            Symbol::A(m) => write!(f, "A_{m}"),
            Symbol::G(l) => write!(f, "G_{l}"),
            Symbol::YGen(i, j) => write!(f, "Y_{i}{j}"),
            Symbol::C(p) => write!(f, "{}", p.name()),
            Symbol::K(i) => write!(f, "K{i}"),
        }
    }
}

/// Abstract syntax tree of an element expression.
#[derive(Clone, PartialEq, Debug)]
pub enum Expr {
    Zero,
    Sym(Symbol),
    Bracket(Box<Expr>, Box<Expr>),
    Scale(Box<Expr>, RingElem),
    Add(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Apply(Perm4, Box<Expr>),
    AdPower(Box<Expr>, u32, Box<Expr>),
}

#[derive(Clone, PartialEq, Debug)]
enum Tok {
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Int(BigInt),
    Ident(String),
    T,
    TPrime,
    TSecond,
    Ad,
    Id,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    len: usize,
}

fn lex(input: &str) -> Result<Lexer, ParseError> {
    let bytes = input.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
            }
            b'[' => {
                toks.push((Tok::LBracket, start));
                i += 1;
            }
            b']' => {
                toks.push((Tok::RBracket, start));
                i += 1;
            }
            b'(' => {
                toks.push((Tok::LParen, start));
                i += 1;
            }
            b')' => {
                toks.push((Tok::RParen, start));
                i += 1;
            }
            b',' => {
                toks.push((Tok::Comma, start));
                i += 1;
            }
            b'+' => {
                toks.push((Tok::Plus, start));
                i += 1;
            }
            b'-' => {
                toks.push((Tok::Minus, start));
                i += 1;
            }
            b'*' => {
                toks.push((Tok::Star, start));
                i += 1;
            }
            b'/' => {
                toks.push((Tok::Slash, start));
                i += 1;
            }
            b'^' => {
                toks.push((Tok::Caret, start));
                i += 1;
            }
            b'0'..=b'9' => {
                let mut j = i;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                let n: BigInt = input[i..j].parse().expect("digits parse");
                toks.push((Tok::Int(n), start));
                i = j;
            }
            b'A'..=b'Z' | b'a'..=b'z' => {
                let mut j = i;
                while j < bytes.len() && (bytes[j].is_ascii_alphanumeric()) {
                    j += 1;
                }
                // optional _ [-] digits suffix, as in X_01, A_-3
                if j < bytes.len() && bytes[j] == b'_' {
                    let mut k = j + 1;
                    if k < bytes.len() && bytes[k] == b'-' {
                        k += 1;
                    }
                    let digits_start = k;
                    while k < bytes.len() && bytes[k].is_ascii_digit() {
                        k += 1;
                    }
                    if k == digits_start {
                        return Err(ParseError::Syntax {
                            pos: j,
                            expected: "digits after `_`".into(),
                        });
                    }
                    j = k;
                }
                let word = &input[i..j];
                let tok = match word {
                    "t" => {
                        // may be followed by one or two primes
                        if j + 1 < bytes.len() && bytes[j] == b'\'' && bytes[j + 1] == b'\'' {
                            j += 2;
                            Tok::TSecond
                        } else if j < bytes.len() && bytes[j] == b'\'' {
                            j += 1;
                            Tok::TPrime
                        } else {
                            Tok::T
                        }
                    }
                    "ad" => Tok::Ad,
                    "id" => Tok::Id,
                    _ => Tok::Ident(word.to_string()),
                };
                toks.push((tok, start));
                i = j;
            }
            _ => {
                return Err(ParseError::Syntax {
                    pos: start,
                    expected: format!("a token, found {:?}", char::from(c)),
                })
            }
        }
    }
    Ok(Lexer { toks, len: input.len() })
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn peek_at(&self, offset: usize) -> Option<&Tok> {
        self.toks.get(self.pos + offset).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, p)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ParseError::Syntax { pos: self.here(), expected: what.to_string() })
        }
    }

    fn int_u32(&mut self, what: &str) -> Result<u32, ParseError> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::Int(n)) => u32::try_from(n).map_err(|_| ParseError::Arity {
                pos,
                msg: format!("{what} out of range"),
            }),
            _ => Err(ParseError::Syntax { pos, expected: what.to_string() }),
        }
    }

    // ---- ring literal grammar ----

    fn ring_expr(&mut self) -> Result<RingElem, ParseError> {
        let mut negate = false;
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            negate = true;
        }
        let mut acc = self.ring_term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.ring_term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.ring_term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn ring_term(&mut self) -> Result<RingElem, ParseError> {
        let mut acc = self.ring_pow()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.ring_pow()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let pos = self.here();
                    let d = self.ring_pow()?;
                    let inv = d.inv().ok_or(ParseError::NonUnit { pos })?;
                    acc = &acc * &inv;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn ring_pow(&mut self) -> Result<RingElem, ParseError> {
        let base = self.ring_atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let mut sign = 1i64;
            if self.peek() == Some(&Tok::Minus) {
                self.pos += 1;
                sign = -1;
            }
            let pos = self.here();
            let n = self.int_u32("exponent")?;
            let exp = sign * i64::from(n);
            return base.pow(exp).ok_or(ParseError::NonUnit { pos });
        }
        Ok(base)
    }

    fn ring_atom(&mut self) -> Result<RingElem, ParseError> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::T) => Ok(RingElem::t()),
            Some(Tok::TPrime) => Ok(RingElem::t_prime()),
            Some(Tok::TSecond) => Ok(RingElem::t_second()),
            Some(Tok::Int(n)) => Ok(RingElem::from_rat(BigRational::from_integer(n))),
            Some(Tok::LParen) => {
                let e = self.ring_expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            _ => Err(ParseError::Syntax {
                pos,
                expected: "a ring literal (t, t', t'', a number, or `(`)".into(),
            }),
        }
    }

    // ---- element grammar ----

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = Expr::Add(Box::new(acc), Box::new(Expr::Neg(Box::new(self.term()?))));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            let r = self.ring_pow()?;
            acc = Expr::Scale(Box::new(acc), r);
        }
        Ok(acc)
    }

    /// True when the tokens at the cursor look like a cycle `(digits)`.
    fn at_cycle(&self) -> bool {
        if self.peek() != Some(&Tok::LParen) {
            return false;
        }
        match (self.peek_at(1), self.peek_at(2)) {
            (Some(Tok::Int(n)), Some(Tok::RParen)) => {
                let digits = n.to_string();
                digits.len() >= 2 && digits.bytes().all(|b| (b'0'..=b'3').contains(&b))
            }
            _ => false,
        }
    }

    fn perm_cycles(&mut self) -> Result<Perm4, ParseError> {
        let mut text = String::new();
        let start = self.here();
        while self.at_cycle() {
            self.pos += 1; // (
            let Some(Tok::Int(n)) = self.bump() else { unreachable!() };
            self.pos += 1; // )
            text.push('(');
            text.push_str(&n.to_string());
            text.push(')');
        }
        Perm4::parse_cycles(&text).ok_or(ParseError::Syntax {
            pos: start,
            expected: "a permutation in cycle notation".into(),
        })
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let pos = self.here();
        match self.peek() {
            Some(Tok::LBracket) => {
                self.pos += 1;
                let a = self.expr()?;
                self.expect(Tok::Comma, "`,`")?;
                let b = self.expr()?;
                self.expect(Tok::RBracket, "`]`")?;
                Ok(Expr::Bracket(Box::new(a), Box::new(b)))
            }
            Some(Tok::Ad) => {
                self.pos += 1;
                self.expect(Tok::LParen, "`(` after ad")?;
                let base = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                self.expect(Tok::Caret, "`^`")?;
                let n = self.int_u32("power")?;
                self.expect(Tok::LParen, "`(`")?;
                let arg = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(Expr::AdPower(Box::new(base), n, Box::new(arg)))
            }
            Some(Tok::Id) => {
                self.pos += 1;
                self.expect(Tok::LParen, "`(` after id")?;
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(Expr::Apply(Perm4::identity(), Box::new(e)))
            }
            Some(Tok::LParen) if self.at_cycle() => {
                let p = self.perm_cycles()?;
                self.expect(Tok::LParen, "`(` before the permuted expression")?;
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(Expr::Apply(p, Box::new(e)))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            Some(Tok::Int(n)) if n.is_zero() => {
                self.pos += 1;
                Ok(Expr::Zero)
            }
            Some(Tok::Ident(_)) | Some(Tok::T) | Some(Tok::TPrime) | Some(Tok::TSecond) => {
                let Some(tok) = self.bump() else { unreachable!() };
                let name = match tok {
                    Tok::Ident(s) => s,
                    Tok::T => "t".to_string(),
                    Tok::TPrime => "t'".to_string(),
                    Tok::TSecond => "t''".to_string(),
                    _ => unreachable!(),
                };
                self.symbol(&name, pos).map(Expr::Sym)
            }
            _ => Err(ParseError::Syntax {
                pos,
                expected: "a symbol, `[`, `(`, `ad` or a permutation".into(),
            }),
        }
    }

    fn symbol(&self, name: &str, pos: usize) -> Result<Symbol, ParseError> {
        match name {
            "u0" => return Ok(Symbol::U(0)),
            "u1" => return Ok(Symbol::U(1)),
            "u2" => return Ok(Symbol::U(2)),
            "uh0" => return Ok(Symbol::UHat(0)),
            "uh1" => return Ok(Symbol::UHat(1)),
            "uh2" => return Ok(Symbol::UHat(2)),
            "v0" => return Ok(Symbol::V(0)),
            "v1" => return Ok(Symbol::V(1)),
            "v2" => return Ok(Symbol::V(2)),
            "x" => return Ok(Symbol::X),
            "y" => return Ok(Symbol::Y),
            "z" => return Ok(Symbol::Z),
            "K0" => return Ok(Symbol::K(0)),
            "K1" => return Ok(Symbol::K(1)),
            _ => {}
        }
        if let Some(rest) = name.strip_prefix("X_") {
            let (i, j) = parse_pair(rest, pos)?;
            return Ok(Symbol::Tet(i, j));
        }
        if let Some(rest) = name.strip_prefix("Y_") {
            let (i, j) = parse_pair(rest, pos)?;
            return Ok(Symbol::YGen(i, j));
        }
        if let Some(rest) = name.strip_prefix("C_") {
            return match rest {
                "01" | "23" => Ok(Symbol::C(Partition::P01)),
                "02" | "13" => Ok(Symbol::C(Partition::P02)),
                "03" | "12" => Ok(Symbol::C(Partition::P03)),
                _ => Err(ParseError::UnknownSymbol { pos, name: name.to_string() }),
            };
        }
        if let Some(rest) = name.strip_prefix("A_") {
            let m: i64 = rest.parse().map_err(|_| ParseError::UnknownSymbol {
                pos,
                name: name.to_string(),
            })?;
            return Ok(Symbol::A(m));
        }
        if let Some(rest) = name.strip_prefix("G_") {
            let l: i64 = rest.parse().map_err(|_| ParseError::UnknownSymbol {
                pos,
                name: name.to_string(),
            })?;
            if l < 1 {
                return Err(ParseError::Arity {
                    pos,
                    msg: format!("G index must be at least 1, got {l}"),
                });
            }
            return Ok(Symbol::G(l));
        }
        Err(ParseError::UnknownSymbol { pos, name: name.to_string() })
    }
}

fn parse_pair(rest: &str, pos: usize) -> Result<(u8, u8), ParseError> {
    let b = rest.as_bytes();
    if b.len() == 2 && b[0].is_ascii_digit() && b[1].is_ascii_digit() {
        let i = b[0] - b'0';
        let j = b[1] - b'0';
        if i <= 3 && j <= 3 && i != j {
            return Ok((i, j));
        }
        return Err(ParseError::Arity {
            pos,
            msg: format!("indices must be distinct and in 0..3, got {rest}"),
        });
    }
    Err(ParseError::Syntax { pos, expected: "two index digits".into() })
}

/// Parses an element expression.
pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let lexer = lex(input)?;
    let mut p = Parser { toks: lexer.toks, pos: 0, end: lexer.len };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(ParseError::Syntax { pos: p.here(), expected: "end of input".into() });
    }
    Ok(e)
}

/// Parses a standalone ring literal expression.
pub fn parse_ring(input: &str) -> Result<RingElem, ParseError> {
    let lexer = lex(input)?;
    let mut p = Parser { toks: lexer.toks, pos: 0, end: lexer.len };
    let e = p.ring_expr()?;
    if p.pos != p.toks.len() {
        return Err(ParseError::Syntax { pos: p.here(), expected: "end of input".into() });
    }
    Ok(e)
}

/// Parses an Onsager ideal specification of the form
/// `J=<poly>; typeI eps=..,delta=..,gamma=..,eps'=..,delta'=..,gamma'=..` or
/// `J=<poly>; typeII eta=<rational>`.
pub fn parse_ideal_spec(input: &str) -> Result<OnsagerIdealSpec, ParseError> {
    let err = |msg: &str| ParseError::Syntax { pos: 0, expected: msg.to_string() };
    let (jpart, kindpart) = input.split_once(';').ok_or_else(|| err("`;` separating J and the type"))?;
    let jpart = jpart.trim();
    let jexpr = jpart.strip_prefix("J=").ok_or_else(|| err("`J=<poly>`"))?;
    let ring = parse_ring(jexpr)?;
    let q = ring
        .as_poly()
        .ok_or_else(|| err("a polynomial generator for J"))?
        .clone();
    let kindpart = kindpart.trim();
    let kind = if let Some(flags) = kindpart.strip_prefix("typeI ") {
        let mut vals = [None; 6];
        let names = ["eps", "delta", "gamma", "eps'", "delta'", "gamma'"];
        for item in flags.split(',') {
            let (k, v) = item
                .trim()
                .split_once('=')
                .ok_or_else(|| err("flag assignments `name=0|1`"))?;
            let idx = names
                .iter()
                .position(|n| *n == k.trim())
                .ok_or_else(|| err("flag names eps, delta, gamma, eps', delta', gamma'"))?;
            let bit = match v.trim() {
                "0" => false,
                "1" => true,
                _ => return Err(err("flag values 0 or 1")),
            };
            vals[idx] = Some(bit);
        }
        let get = |i: usize| vals[i].ok_or_else(|| err("all six flags"));
        IdealKind::TypeI {
            eps: get(0)?,
            delta: get(1)?,
            gamma: get(2)?,
            eps_p: get(3)?,
            delta_p: get(4)?,
            gamma_p: get(5)?,
        }
    } else if let Some(eta) = kindpart.strip_prefix("typeII ") {
        let eta = eta.trim();
        let eta = eta.strip_prefix("eta=").ok_or_else(|| err("`eta=<rational>`"))?;
        let ring = parse_ring(eta)?;
        let p = ring.as_poly().ok_or_else(|| err("a rational eta"))?;
        if !p.is_constant() {
            return Err(err("a rational eta"));
        }
        IdealKind::TypeII { eta: p.coeff(0) }
    } else {
        return Err(err("`typeI ...` or `typeII eta=...`"));
    };
    OnsagerIdealSpec::new(q, kind).map_err(|e| ParseError::Arity { pos: 0, msg: e.to_string() })
}

/// Evaluation context.
pub enum Context<'a> {
    Loop,
    Onsager,
    Extension(&'a LiftTable),
}

impl Context<'_> {
    pub fn name(&self) -> &'static str {
        match self {
            Context::Loop => "loop",
            Context::Onsager => "onsager",
            Context::Extension(_) => "extension",
        }
    }
}

/// A context-typed value.
#[derive(Clone, PartialEq, Debug)]
pub enum Value {
    Loop(LoopElem),
    Onsager(OnsagerElem),
    Ext(ExtElem),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Loop(e) => write!(f, "{e}"),
            Value::Onsager(e) => write!(f, "{e}"),
            Value::Ext(e) => write!(f, "{e}"),
        }
    }
}

fn xyz_unit(which: usize) -> LoopElem {
    let mut e = XYZElem { x: RingElem::zero(), y: RingElem::zero(), z: RingElem::zero() };
    match which {
        0 => e.x = RingElem::one(),
        1 => e.y = RingElem::one(),
        _ => e.z = RingElem::one(),
    }
    xyz_to_u(&e)
}

/// Evaluates an expression bottom-up in a context.
pub fn eval(e: &Expr, ctx: &Context<'_>) -> Result<Value, EvalError> {
    match ctx {
        Context::Loop => eval_loop(e).map(Value::Loop),
        Context::Onsager => {
            let mut images = ClassicalImages::new();
            eval_onsager(e, &mut images).map(Value::Onsager)
        }
        Context::Extension(table) => eval_ext(e, table).map(Value::Ext),
    }
}

fn eval_loop(e: &Expr) -> Result<LoopElem, EvalError> {
    match e {
        Expr::Zero => Ok(LoopElem::zero()),
        Expr::Sym(s) => match s {
            Symbol::U(i) => Ok(LoopElem::basis(*i)),
            Symbol::X => Ok(xyz_unit(0)),
            Symbol::Y => Ok(xyz_unit(1)),
            Symbol::Z => Ok(xyz_unit(2)),
            Symbol::Tet(i, j) => Ok(psi(TetGen::new(*i, *j).expect("validated at parse"))),
            other => Err(EvalError::ContextError(other.to_string(), "loop")),
        },
        Expr::Bracket(a, b) => Ok(bracket(&eval_loop(a)?, &eval_loop(b)?)),
        Expr::Scale(a, r) => Ok(eval_loop(a)?.scale(r)),
        Expr::Add(a, b) => Ok(eval_loop(a)?.add(&eval_loop(b)?)),
        Expr::Neg(a) => Ok(eval_loop(a)?.neg()),
        Expr::Apply(p, a) => Ok(s4_apply(p, &eval_loop(a)?)),
        Expr::AdPower(base, n, arg) => Ok(ad_power(&eval_loop(base)?, *n, &eval_loop(arg)?)),
    }
}

fn eval_onsager(e: &Expr, images: &mut ClassicalImages) -> Result<OnsagerElem, EvalError> {
    match e {
        Expr::Zero => Ok(OnsagerElem::zero()),
        Expr::Sym(s) => match s {
            Symbol::V(i) => Ok(OnsagerElem::basis(*i)),
            Symbol::A(m) => Ok(images.a_image(*m)),
            Symbol::G(l) => Ok(images.g_image(*l)),
            other => Err(EvalError::ContextError(other.to_string(), "onsager")),
        },
        Expr::Bracket(a, b) => Ok(obracket(
            &eval_onsager(a, images)?,
            &eval_onsager(b, images)?,
        )),
        Expr::Scale(a, r) => {
            let p = r
                .as_poly()
                .ok_or_else(|| EvalError::ScalarNotPolynomial(r.to_string()))?
                .clone();
            Ok(eval_onsager(a, images)?.scale(&p))
        }
        Expr::Add(a, b) => Ok(eval_onsager(a, images)?.add(&eval_onsager(b, images)?)),
        Expr::Neg(a) => Ok(eval_onsager(a, images)?.neg()),
        Expr::Apply(..) => Err(EvalError::NoActionHere),
        Expr::AdPower(base, n, arg) => Ok(oad_power(
            &eval_onsager(base, images)?,
            *n,
            &eval_onsager(arg, images)?,
        )),
    }
}

fn eval_ext(e: &Expr, table: &LiftTable) -> Result<ExtElem, EvalError> {
    match e {
        Expr::Zero => Ok(ExtElem::zero()),
        Expr::Sym(s) => match s {
            Symbol::Tet(i, j) => Ok(table.lift(*i, *j)),
            Symbol::YGen(i, j) => Ok(table.y_gen(*i, *j)),
            Symbol::C(p) => Ok(table.charge(*p)),
            Symbol::K(0) => Ok(ExtElem::central(Rat::one(), Rat::zero())),
            Symbol::K(_) => Ok(ExtElem::central(Rat::zero(), Rat::one())),
            // Plain u_i is the lift with zero central part; uh_i is the
            // fitted hat generator.
            Symbol::U(i) => Ok(ExtElem::from_loop(LoopElem::basis(*i))),
            Symbol::UHat(i) => {
                let (u0, u1, u2) = table.hat_u();
                Ok(match i {
                    0 => u0,
                    1 => u1,
                    _ => u2,
                })
            }
            other => Err(EvalError::ContextError(other.to_string(), "extension")),
        },
        Expr::Bracket(a, b) => Ok(ext_bracket(&eval_ext(a, table)?, &eval_ext(b, table)?)),
        Expr::Scale(a, r) => {
            let inner = eval_ext(a, table)?;
            if let Some(c) = r.as_poly().filter(|p| p.is_constant()) {
                return Ok(inner.scale_rat(&c.coeff(0)));
            }
            // The center is not a module over the ring; ring scaling only
            // makes sense on central-free elements.
            if inner.c0.is_zero() && inner.c1.is_zero() {
                Ok(ExtElem::from_loop(inner.loop_part.scale(r)))
            } else {
                Err(EvalError::ScalarNotConstant(r.to_string()))
            }
        }
        Expr::Add(a, b) => Ok(eval_ext(a, table)?.add(&eval_ext(b, table)?)),
        Expr::Neg(a) => Ok(eval_ext(a, table)?.neg()),
        Expr::Apply(p, a) => Ok(s4_ext_apply(p, &eval_ext(a, table)?, table)),
        Expr::AdPower(base, n, arg) => Ok(ext_ad_power(
            &eval_ext(base, table)?,
            *n,
            &eval_ext(arg, table)?,
        )),
    }
}
