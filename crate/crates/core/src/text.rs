//! Text forms of rings, elements, polynomials and valuations.
//!
//! Rings: `Z`, `Z[sqrt(10)]`, `Z[omega(5),k=3]`, `Z[cbrt(12)]`, `Z[Y,Z]`,
//! `Z[sqrt(10)][X]`. Polynomials: `X^5 + 33!*X + 45!`, `(11+3g)*X - 2`.
//! Inside parentheses `g` is the order generator (`sqrt(d)`, `omega` or the
//! cube root) and `g2` its square in a cubic order. Coordinates of `g` are
//! taken literally, so in an order of index `k` the `g` coefficient must be
//! a multiple of `k`.
//!
//! The printer is canonical: printing a parsed value and parsing it back
//! gives the same value, and printing that again gives the same text.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, ParseError, Result};
use crate::poly::{MultiIndex, Polynomial, UnivariateView, WeightVector};
use crate::ring::integer::factorial;
use crate::ring::{CubicOrder, Elem, PolyRing, QuadForm, QuadOrder, Ring};
use crate::valuation::Valuation;

/// Largest argument accepted by the `!` postfix.
pub const MAX_FACTORIAL: u64 = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Name(String),
    Sym(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(n) => format!("number `{n}`"),
            Tok::Name(s) => format!("name `{s}`"),
            Tok::Sym(c) => format!("`{c}`"),
            Tok::End => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

const SYMBOLS: &str = "+-*^()[],=!:;/";

fn lex(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                bump(&mut chars);
            }
            let n = s.parse::<BigInt>().expect("digits");
            out.push(Token {
                tok: Tok::Num(n),
                line: l,
                column: col,
            });
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_alphanumeric() || **d == '_') {
                s.push(d);
                bump(&mut chars);
            }
            out.push(Token {
                tok: Tok::Name(s),
                line: l,
                column: col,
            });
        } else if SYMBOLS.contains(c) {
            bump(&mut chars);
            out.push(Token {
                tok: Tok::Sym(c),
                line: l,
                column: col,
            });
        } else {
            return Err(Error::Parse(ParseError {
                line: l,
                column: col,
                message: format!("unexpected character `{c}`"),
                expected: Vec::new(),
            }));
        }
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self> {
        Ok(Parser {
            toks: lex(text)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn here(&self) -> (usize, usize) {
        let t = &self.toks[self.pos];
        (t.line, t.column)
    }

    fn advance(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn is_sym(&self, c: char) -> bool {
        *self.peek() == Tok::Sym(c)
    }

    fn eat(&mut self, c: char) -> bool {
        let hit = self.is_sym(c);
        if hit {
            self.advance();
        }
        hit
    }

    fn unexpected(&self, expected: &[&str]) -> Error {
        let (line, column) = self.here();
        Error::Parse(ParseError {
            line,
            column,
            message: format!("unexpected {}", self.peek().describe()),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        })
    }

    fn semantic(&self, at: (usize, usize), message: impl Into<String>) -> Error {
        Error::Parse(ParseError {
            line: at.0,
            column: at.1,
            message: message.into(),
            expected: Vec::new(),
        })
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&[&format!("`{c}`")]))
        }
    }

    fn expect_name(&mut self, name: &str) -> Result<()> {
        if *self.peek() == Tok::Name(name.into()) {
            self.advance();
            Ok(())
        } else {
            Err(self.unexpected(&[&format!("`{name}`")]))
        }
    }

    fn name(&mut self) -> Result<String> {
        match self.peek().clone() {
            Tok::Name(s) => {
                self.advance();
                Ok(s)
            }
            _ => Err(self.unexpected(&["name"])),
        }
    }

    fn finish(&self) -> Result<()> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            Err(self.unexpected(&["end of input"]))
        }
    }

    /// digits, with an optional `!`.
    fn nat(&mut self) -> Result<BigInt> {
        let at = self.here();
        let Tok::Num(n) = self.peek().clone() else {
            return Err(self.unexpected(&["number"]));
        };
        self.advance();
        if self.eat('!') {
            let k = n.to_u64().filter(|&k| k <= MAX_FACTORIAL).ok_or_else(|| {
                self.semantic(at, format!("factorial argument exceeds {MAX_FACTORIAL}"))
            })?;
            return Ok(factorial(k));
        }
        Ok(n)
    }

    /// `-`? nat.
    fn int(&mut self) -> Result<BigInt> {
        if self.eat('-') {
            return Ok(-self.nat()?);
        }
        if matches!(self.peek(), Tok::Num(_)) {
            self.nat()
        } else {
            Err(self.unexpected(&["number", "`-`"]))
        }
    }

    fn small(&mut self, what: &str) -> Result<i64> {
        let at = self.here();
        let n = self.int()?;
        n.to_i64()
            .ok_or_else(|| self.semantic(at, format!("{what} {n} is out of range")))
    }

    fn ring(&mut self) -> Result<Ring> {
        self.expect_name("Z")?;
        let mut ring = Ring::Integers;
        let mut algebraic = false;
        while self.is_sym('[') {
            let at = self.here();
            self.advance();
            let generator = match (self.peek(), self.peek_at(1)) {
                (Tok::Name(s), Tok::Sym('('))
                    if ["sqrt", "omega", "cbrt"].contains(&s.as_str()) =>
                {
                    Some(s.clone())
                }
                _ => None,
            };
            match generator {
                Some(g) => {
                    if algebraic {
                        return Err(self.semantic(at, "at most one algebraic suffix is allowed"));
                    }
                    if ring != Ring::Integers {
                        return Err(
                            self.semantic(at, "the algebraic suffix must come before variables")
                        );
                    }
                    self.advance();
                    self.expect('(')?;
                    let d = self.small("parameter")?;
                    self.expect(')')?;
                    let mut k = 1;
                    if g != "cbrt" && self.eat(',') {
                        self.expect_name("k")?;
                        self.expect('=')?;
                        let kat = self.here();
                        k = self.small("index")?;
                        if k < 1 {
                            return Err(self.semantic(kat, "index k must be positive"));
                        }
                    }
                    self.expect(']')?;
                    let built = match g.as_str() {
                        "sqrt" => QuadOrder::new(d, QuadForm::Sqrt, k).map(Ring::Quadratic),
                        "omega" => QuadOrder::new(d, QuadForm::Omega, k).map(Ring::Quadratic),
                        _ => CubicOrder::new(d).map(Ring::Cubic),
                    };
                    ring = built.map_err(|e| self.semantic(at, e.to_string()))?;
                    algebraic = true;
                }
                None => {
                    let mut vars = vec![self.name()?];
                    while self.eat(',') {
                        vars.push(self.name()?);
                    }
                    if !self.is_sym(']') {
                        return Err(self.unexpected(&["`,`", "`]`"]));
                    }
                    self.advance();
                    let pr =
                        PolyRing::new(ring, vars).map_err(|e| self.semantic(at, e.to_string()))?;
                    ring = Ring::Poly(pr);
                }
            }
        }
        Ok(ring)
    }

    /// `int` or `(int (+|- nat? gen)*)`, as an element of the scalar ring.
    fn coeff(&mut self, scalar: &Ring) -> Result<Elem> {
        let at = self.here();
        if !self.eat('(') {
            return Ok(scalar.from_int(self.int()?));
        }
        let mut parts = [self.int()?, BigInt::zero(), BigInt::zero()];
        loop {
            let negative = if self.eat('+') {
                false
            } else if self.eat('-') {
                true
            } else if self.eat(')') {
                break;
            } else {
                return Err(self.unexpected(&["`+`", "`-`", "`)`"]));
            };
            let mut c = if matches!(self.peek(), Tok::Num(_)) {
                self.nat()?
            } else {
                BigInt::one()
            };
            if negative {
                c = -c;
            }
            let gat = self.here();
            let slot = match self.peek() {
                Tok::Name(s) if s == "g" => 1,
                Tok::Name(s) if s == "g2" => 2,
                _ => return Err(self.unexpected(&["`g`", "`g2`"])),
            };
            self.advance();
            match (scalar, slot) {
                (Ring::Integers, _) => return Err(self.semantic(gat, "`g` is not defined over Z")),
                (Ring::Quadratic(_), 2) => {
                    return Err(self.semantic(gat, "`g2` is only valid in cubic orders"))
                }
                _ => {}
            }
            parts[slot] += c;
        }
        let [a, b, c] = parts;
        match scalar {
            Ring::Integers => Ok(Elem::Int(a)),
            Ring::Quadratic(o) => match o.from_theta_coords(a, b) {
                Some(p) => Ok(Elem::Quad(p)),
                None => Err(self.semantic(
                    at,
                    format!("the g coefficient must be a multiple of k={}", o.k()),
                )),
            },
            Ring::Cubic(_) => Ok(Elem::Cubic([a, b, c])),
            Ring::Poly(_) => unreachable!("scalar ring"),
        }
    }

    fn atom(&mut self, ring: &Ring) -> Result<Elem> {
        let at = self.here();
        let name = self.name()?;
        let x = var_elem(ring, &name)
            .ok_or_else(|| self.semantic(at, format!("unknown variable `{name}` in {ring}")))?;
        if self.eat('^') {
            let eat = self.here();
            let e = self
                .nat()?
                .to_u32()
                .ok_or_else(|| self.semantic(eat, "exponent is too large"))?;
            return ring.pow(&x, e);
        }
        Ok(x)
    }

    fn mono(&mut self, ring: &Ring, mut acc: Elem) -> Result<Elem> {
        acc = ring.mul(&acc, &self.atom(ring)?)?;
        while self.eat('*') {
            acc = ring.mul(&acc, &self.atom(ring)?)?;
        }
        Ok(acc)
    }

    fn term(&mut self, ring: &Ring) -> Result<Elem> {
        match self.peek() {
            Tok::Name(_) => self.mono(ring, ring.one()),
            Tok::Num(_) | Tok::Sym('(') => {
                let c = lift(ring, self.coeff(scalar_ring(ring))?);
                if self.eat('*') {
                    self.mono(ring, c)
                } else {
                    Ok(c)
                }
            }
            _ => Err(self.unexpected(&["number", "`(`", "name"])),
        }
    }

    /// An optional leading `-` is accepted as well.
    fn poly(&mut self, ring: &Ring) -> Result<Elem> {
        let negative = self.eat('-');
        let mut acc = self.term(ring)?;
        if negative {
            acc = ring.neg(&acc)?;
        }
        loop {
            if self.eat('+') {
                let t = self.term(ring)?;
                acc = ring.add(&acc, &t)?;
            } else if self.eat('-') {
                let t = self.term(ring)?;
                acc = ring.sub(&acc, &t)?;
            } else {
                return Ok(acc);
            }
        }
    }
}

fn scalar_ring(ring: &Ring) -> &Ring {
    match ring {
        Ring::Poly(pr) => scalar_ring(pr.base()),
        r => r,
    }
}

fn lift(ring: &Ring, c: Elem) -> Elem {
    match ring {
        Ring::Poly(pr) => Elem::Poly(Polynomial::constant(pr, lift(pr.base(), c))),
        _ => c,
    }
}

fn var_elem(ring: &Ring, name: &str) -> Option<Elem> {
    let pr = ring.as_poly()?;
    match pr.var_index(name) {
        Some(i) => Some(Elem::Poly(Polynomial::var(pr, i))),
        None => var_elem(pr.base(), name).map(|x| Elem::Poly(Polynomial::constant(pr, x))),
    }
}

pub fn parse_ring(text: &str) -> Result<Ring> {
    let mut p = Parser::new(text)?;
    let r = p.ring()?;
    p.finish()?;
    Ok(r)
}

/// An element of `ring`, written as a polynomial in its variables.
pub fn parse_elem(text: &str, ring: &Ring) -> Result<Elem> {
    let mut p = Parser::new(text)?;
    let x = p.poly(ring)?;
    p.finish()?;
    Ok(x)
}

pub fn parse_poly(text: &str, ring: &Ring) -> Result<Polynomial> {
    if ring.as_poly().is_none() {
        return Err(Error::InvalidRing(format!(
            "{ring} is not a polynomial ring"
        )));
    }
    match parse_elem(text, ring)? {
        Elem::Poly(f) => Ok(f),
        _ => unreachable!("polynomial ring elements are polynomials"),
    }
}

/// A polynomial in `var` over `ring`, where `var` is not a variable of
/// `ring`. Without `var`, the one name in `text` unknown to `ring` is used,
/// falling back to `X`.
pub fn parse_univariate(text: &str, ring: &Ring, var: Option<&str>) -> Result<UnivariateView> {
    let var = match var {
        Some(v) => v.to_string(),
        None => {
            let mut unknown: Vec<String> = lex(text)?
                .into_iter()
                .filter_map(|t| match t.tok {
                    Tok::Name(s) if s != "g" && s != "g2" && !ring.has_var(&s) => Some(s),
                    _ => None,
                })
                .collect();
            unknown.dedup();
            unknown.sort();
            unknown.dedup();
            match unknown.len() {
                0 => "X".to_string(),
                1 => unknown.remove(0),
                _ => {
                    return Err(Error::UnknownVariable(format!(
                        "cannot pick the main variable among {}",
                        unknown.join(", ")
                    )))
                }
            }
        }
    };
    if ring.has_var(&var) {
        return Err(Error::InvalidRing(format!(
            "`{var}` is already a variable of {ring}"
        )));
    }
    let full = ring.extend(&var)?;
    let f = parse_poly(text, &full)?;
    let pr = full.as_poly().expect("extended ring");
    pr.as_univariate(&f, &var)
}

/// `deg:2,1`, `codeg:1,3` or `ord:<element>`, with an optional `;scale=d`.
pub fn parse_valuation(text: &str, ring: &Ring) -> Result<Valuation> {
    let mut p = Parser::new(text)?;
    let at = p.here();
    let family = p.name()?;
    p.expect(':')?;
    let v = match family.as_str() {
        "deg" | "codeg" => {
            let mut w = Vec::new();
            loop {
                let wat = p.here();
                let x = p
                    .nat()?
                    .to_u32()
                    .ok_or_else(|| p.semantic(wat, "weight is too large"))?;
                w.push(x);
                if !p.eat(',') {
                    break;
                }
            }
            let arity = ring.as_poly().map_or(0, PolyRing::arity);
            if w.len() != arity {
                return Err(p.semantic(
                    at,
                    format!(
                        "{} weights given for {ring}, which has {arity} variables",
                        w.len()
                    ),
                ));
            }
            let nu = WeightVector::new(w);
            if family == "deg" {
                Valuation::DegNu(nu)
            } else {
                Valuation::CodegNu(nu)
            }
        }
        "ord" => {
            let x = p.poly(ring)?;
            Valuation::ord_p(ring, x).map_err(|e| p.semantic(at, e.to_string()))?
        }
        other => return Err(p.semantic(at, format!("unknown valuation family `{other}`"))),
    };
    if p.eat(';') {
        p.expect_name("scale")?;
        p.expect('=')?;
        let sat = p.here();
        let d = p
            .nat()?
            .to_u32()
            .ok_or_else(|| p.semantic(sat, "scale is too large"))?;
        p.finish()?;
        return Valuation::scaled(v, d).map_err(|e| p.semantic(sat, e.to_string()));
    }
    p.finish()?;
    Ok(v)
}

/// Sign of the first nonzero coordinate, and the absolute body.
fn split_sign(ring: &Ring, x: &Elem) -> (bool, String) {
    match (ring, x) {
        (_, Elem::Int(n)) => (n.is_negative(), n.abs().to_string()),
        (Ring::Quadratic(o), Elem::Quad([a, b])) => {
            let [x0, x1] = o.theta_coords(a, b);
            signed_body(&[x0, x1])
        }
        (_, Elem::Cubic(c)) => signed_body(c),
        _ => unreachable!("scalar element"),
    }
}

fn signed_body(c: &[BigInt]) -> (bool, String) {
    let negative = c
        .iter()
        .find(|v| !v.is_zero())
        .is_some_and(Signed::is_negative);
    let c: Vec<BigInt> = c
        .iter()
        .map(|v| if negative { -v } else { v.clone() })
        .collect();
    if c[1..].iter().all(Zero::is_zero) {
        return (negative, c[0].to_string());
    }
    let mut s = format!("({}", c[0]);
    for (v, g) in c[1..].iter().zip(["g", "g2"]) {
        if v.is_zero() {
            continue;
        }
        s.push(if v.is_negative() { '-' } else { '+' });
        if !v.abs().is_one() {
            s.push_str(&v.abs().to_string());
        }
        s.push_str(g);
    }
    s.push(')');
    (negative, s)
}

/// Terms of `x` over the scalar ring, with the variables of every layer,
/// outermost first.
fn flatten(ring: &Ring, x: &Elem) -> (Vec<String>, Vec<(Vec<u32>, Elem)>) {
    match (ring, x) {
        (Ring::Poly(pr), Elem::Poly(f)) => {
            let mut names = pr.vars().to_vec();
            let mut inner_names = None;
            let mut out = Vec::new();
            for (i, c) in f.terms() {
                let (n, ts) = flatten(pr.base(), c);
                inner_names.get_or_insert(n);
                for (e, s) in ts {
                    let mut ex = i.exps().to_vec();
                    ex.extend(e);
                    out.push((ex, s));
                }
            }
            let inner = inner_names.unwrap_or_else(|| all_vars(pr.base()));
            names.extend(inner);
            let width = names.len();
            for (e, _) in &mut out {
                e.resize(width, 0);
            }
            (names, out)
        }
        (_, c) => (Vec::new(), vec![(Vec::new(), c.clone())]),
    }
}

fn all_vars(ring: &Ring) -> Vec<String> {
    match ring {
        Ring::Poly(pr) => {
            let mut v = pr.vars().to_vec();
            v.extend(all_vars(pr.base()));
            v
        }
        _ => Vec::new(),
    }
}

/// Canonical text of an element.
pub fn format_elem(ring: &Ring, x: &Elem) -> String {
    let scalar = scalar_ring(ring);
    let (names, mut terms) = flatten(ring, x);
    if terms.is_empty() {
        return "0".into();
    }
    terms.sort_by(|a, b| MultiIndex::new(b.0.clone()).cmp(&MultiIndex::new(a.0.clone())));
    let mut out = String::new();
    for (k, (e, c)) in terms.iter().enumerate() {
        let (negative, body) = split_sign(scalar, c);
        match (k, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mono: Vec<String> = names
            .iter()
            .zip(e)
            .filter(|(_, &p)| p > 0)
            .map(|(n, &p)| {
                if p == 1 {
                    n.clone()
                } else {
                    format!("{n}^{p}")
                }
            })
            .collect();
        if mono.is_empty() {
            out.push_str(&body);
        } else if body == "1" {
            out.push_str(&mono.join("*"));
        } else {
            out.push_str(&body);
            out.push('*');
            out.push_str(&mono.join("*"));
        }
    }
    out
}

pub fn format_poly(ring: &Ring, f: &Polynomial) -> String {
    format_elem(ring, &Elem::Poly(f.clone()))
}

/// Canonical text of `f` in its main variable, which comes first.
pub fn format_univariate(f: &UnivariateView) -> Result<String> {
    let (ring, p) = f.reassemble()?;
    Ok(format_poly(&ring, &p))
}

pub fn format_valuation(ring: &Ring, v: &Valuation) -> String {
    let weights = |w: &WeightVector| {
        w.weights()
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",")
    };
    match v {
        Valuation::DegNu(w) => format!("deg:{}", weights(w)),
        Valuation::CodegNu(w) => format!("codeg:{}", weights(w)),
        Valuation::OrdP { p, .. } => format!("ord:{}", format_elem(ring, p)),
        Valuation::Scaled { inner, d } => format!("{};scale={d}", format_valuation(ring, inner)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criterion::certify;
    use crate::criterion::Verdict;

    fn err_at(e: Error) -> (usize, usize) {
        match e {
            Error::Parse(p) => (p.line, p.column),
            other => panic!("not a parse error: {other:?}"),
        }
    }

    #[test]
    fn rings() {
        let r = parse_ring("Z[sqrt(10)]").unwrap();
        assert_eq!(r, Ring::quadratic(10, QuadForm::Sqrt, 1).unwrap());
        assert_eq!(
            parse_ring(" Z [ omega(5) , k = 3 ] ").unwrap(),
            Ring::quadratic(5, QuadForm::Omega, 3).unwrap()
        );
        assert_eq!(
            parse_ring("Z[cbrt(12)][X]").unwrap(),
            Ring::cubic(12).unwrap().poly(["X"]).unwrap()
        );
        let nested = parse_ring("Z[Y][X]").unwrap();
        assert_eq!(
            nested,
            Ring::Integers.poly(["Y"]).unwrap().poly(["X"]).unwrap()
        );
        for t in [
            "Z[sqrt(10)]",
            "Z[omega(5),k=3]",
            "Z[cbrt(12)][Y,Z]",
            "Z[Y][X]",
            "Z",
        ] {
            assert_eq!(parse_ring(t).unwrap().to_string(), t);
        }
    }

    #[test]
    fn ring_errors() {
        let e = parse_ring("Z[sqrt(8)]").unwrap_err();
        assert!(e.to_string().contains("square"), "{e}");
        assert_eq!(err_at(e), (1, 2));
        assert!(parse_ring("Z[omega(3)]").is_err());
        assert!(parse_ring("Z[sqrt(2)][cbrt(3)]").is_err());
        assert!(parse_ring("Z[X][sqrt(2)]").is_err());
        assert!(parse_ring("Z[X,X]").is_err());
        match parse_ring("Z[X Y]").unwrap_err() {
            Error::Parse(p) => {
                assert_eq!((p.line, p.column), (1, 5));
                assert_eq!(p.expected, vec!["`,`", "`]`"]);
            }
            e => panic!("{e:?}"),
        }
        assert_eq!(err_at(parse_ring("Z\n[sqrt(1$)]").unwrap_err()), (2, 8));
    }

    #[test]
    fn factorial_literals() {
        let r = parse_ring("Z[sqrt(10)]").unwrap();
        let f = parse_univariate("X^5 + 33!*X + 45!", &r, None).unwrap();
        assert_eq!(f.degree(), 5);
        assert_eq!(f.coeff(0), &r.from_int(factorial(45)));
        assert_eq!(f.coeff(1), &r.from_int(factorial(33)));
        assert!(parse_univariate("X + 10001!", &r, None).is_err());
    }

    #[test]
    fn generators() {
        let q = parse_ring("Z[sqrt(11),k=5]").unwrap();
        assert_eq!(parse_elem("(3+10g)", &q).unwrap(), Elem::quad(3, 2));
        assert!(parse_elem("(3+g)", &q).is_err());
        assert!(parse_elem("(3+g2)", &q).is_err());
        let c = parse_ring("Z[cbrt(12)]").unwrap();
        assert_eq!(parse_elem("(7-3g)", &c).unwrap(), Elem::cubic(7, -3, 0));
        assert_eq!(
            parse_elem("(0+g-g2) + 2", &c).unwrap(),
            Elem::cubic(2, 1, -1)
        );
        assert!(parse_elem("(1+g)", &Ring::Integers).is_err());
        assert!(parse_elem("Y", &Ring::Integers).is_err());
    }

    #[test]
    fn printing() {
        let r = parse_ring("Z[sqrt(11)]").unwrap();
        let w = UnivariateView::new(r.clone(), "X", vec![Elem::quad(-10, -55), r.one()]).unwrap();
        assert_eq!(format_univariate(&w).unwrap(), "X - (10+55g)");
        let zy = parse_ring("Z[Y]").unwrap();
        let f = parse_univariate("2 + Y^2*X^3 - X - 3*Y*X^5", &zy, None).unwrap();
        assert_eq!(format_univariate(&f).unwrap(), "-3*X^5*Y + X^3*Y^2 - X + 2");
        let c = parse_ring("Z[cbrt(12)]").unwrap();
        assert_eq!(format_elem(&c, &Elem::cubic(0, -1, 2)), "-(0+g-2g2)");
        assert_eq!(format_elem(&c, &Elem::cubic(-4, 0, 0)), "-4");
        let k = parse_ring("Z[sqrt(11),k=5]").unwrap();
        assert_eq!(format_elem(&k, &Elem::quad(3, 2)), "(3+10g)");
    }

    #[test]
    fn nested_print_round_trip() {
        let r = parse_ring("Z[sqrt(2)][Y][X]").unwrap();
        let x = parse_elem("X^2*Y - (1+g)*X + Y^3 - 4", &r).unwrap();
        let s = format_elem(&r, &x);
        assert_eq!(s, "X^2*Y + Y^3 - (1+g)*X - 4");
        assert_eq!(parse_elem(&s, &r).unwrap(), x);
    }

    #[test]
    fn valuations() {
        let zyz = parse_ring("Z[Y,Z]").unwrap();
        let v = parse_valuation("codeg:1,3", &zyz).unwrap();
        assert_eq!(v, Valuation::CodegNu(WeightVector::new(vec![1, 3])));
        assert!(parse_valuation("deg:1", &zyz).is_err());
        let q = parse_ring("Z[sqrt(10)]").unwrap();
        let o = parse_valuation("ord:(11+3g)", &q).unwrap();
        assert_eq!(format_valuation(&q, &o), "ord:(11+3g)");
        let s = parse_valuation("deg:2,1;scale=2", &zyz).unwrap();
        assert!(s.is_scaled());
        assert_eq!(format_valuation(&zyz, &s), "deg:2,1;scale=2");
        assert!(parse_valuation("ord:1", &q).is_err());
        assert!(parse_valuation("foo:1", &q).is_err());
    }

    #[test]
    fn eisenstein_from_text() {
        let f = parse_univariate("X^4+2*X+2", &Ring::Integers, None).unwrap();
        let v = parse_valuation("ord:2", &Ring::Integers).unwrap();
        assert_eq!(
            certify(&f, &v).unwrap().verdict,
            Verdict::IrreducibleCertified
        );
    }

    #[test]
    fn main_variable_detection() {
        let zy = parse_ring("Z[Y]").unwrap();
        assert_eq!(parse_univariate("T^2 + Y", &zy, None).unwrap().var(), "T");
        assert!(parse_univariate("T^2 + U", &zy, None).is_err());
        assert!(parse_univariate("Y^2 + 1", &zy, Some("Y")).is_err());
    }
}
