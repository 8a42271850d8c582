//! Text form of expressions: a monomial numerator over a product of
//! binomial factors in `x` and `L` (standing for λ).
//!
//! ```text
//! 1/((1 - x*L^-3)*(1 - L^5)*(1 - L^6))
//! 2*x*L^2/(1 - L)
//! ```

use num::{BigInt, BigRational, One, Signed, Zero};

use super::expr::{BinomialFactor, CtExpr, LambdaPoly};
use crate::error::{Error, Result};
use crate::exactalg::RationalFunction;

#[derive(Clone, Copy, Debug, PartialEq)]
struct Mono {
    coeff: i64,
    x: i64,
    l: i64,
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse(format!("{msg} at offset {}", self.pos)))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(&format!("expected '{}'", c as char))
        }
    }

    fn uint(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse(format!("integer out of range at offset {start}")))
    }

    fn sint(&mut self) -> Result<i64> {
        let neg = self.eat(b'-');
        let v = self.uint()?;
        Ok(if neg { -v } else { v })
    }

    fn exponent(&mut self) -> Result<i64> {
        if self.eat(b'^') {
            self.sint()
        } else {
            Ok(1)
        }
    }

    fn mono(&mut self) -> Result<Mono> {
        let mut m = Mono { coeff: 1, x: 0, l: 0 };
        if self.eat(b'-') {
            m.coeff = -1;
        }
        loop {
            match self.peek() {
                Some(b'x') => {
                    self.pos += 1;
                    m.x += self.exponent()?;
                }
                Some(b'L') => {
                    self.pos += 1;
                    m.l += self.exponent()?;
                }
                Some(c) if c.is_ascii_digit() => {
                    let v = self.uint()?;
                    m.coeff = m
                        .coeff
                        .checked_mul(v)
                        .ok_or_else(|| Error::Parse("coefficient overflow".into()))?;
                }
                _ => return self.err("expected monomial"),
            }
            if !self.eat(b'*') {
                return Ok(m);
            }
        }
    }

    fn factor(&mut self) -> Result<BinomialFactor> {
        self.expect(b'(')?;
        if self.uint()? != 1 {
            return self.err("factor must start with 1");
        }
        let sign = match self.peek() {
            Some(b'-') => 1,
            Some(b'+') => -1,
            _ => return self.err("expected '-' or '+'"),
        };
        self.pos += 1;
        let m = self.mono()?;
        self.expect(b')')?;
        if m.coeff == 0 {
            return self.err("zero monomial in factor");
        }
        BinomialFactor::new(BigRational::from_integer(BigInt::from(sign * m.coeff)), m.x, m.l)
            .map_err(|e| Error::Parse(e.to_string()))
    }

    fn denominator(&mut self) -> Result<Vec<BinomialFactor>> {
        // "(1 - ...)" is one factor; "((1 - ...)*...)" is a product
        self.skip_ws();
        let save = self.pos;
        self.expect(b'(')?;
        let grouped = self.peek() == Some(b'(');
        self.pos = save;
        if !grouped {
            return Ok(vec![self.factor()?]);
        }
        self.expect(b'(')?;
        let mut out = vec![self.factor()?];
        while self.eat(b'*') {
            out.push(self.factor()?);
        }
        self.expect(b')')?;
        Ok(out)
    }
}

/// Parse the expression grammar into an (unnormalized) [`CtExpr`].
pub fn parse_expr(text: &str) -> Result<CtExpr> {
    let mut p = Parser { s: text.as_bytes(), pos: 0 };
    let num = p.mono()?;
    let factors = if p.eat(b'/') { p.denominator()? } else { Vec::new() };
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    let c = BigRational::from_integer(BigInt::from(num.coeff));
    if c.is_zero() {
        return Ok(CtExpr::new(LambdaPoly::zero(), 0, factors));
    }
    Ok(CtExpr::monomial_over(c, num.x, num.l, factors))
}

fn pow_str(var: &str, e: i64) -> Option<String> {
    match e {
        0 => None,
        1 => Some(var.to_string()),
        _ => Some(format!("{var}^{e}")),
    }
}

fn mono_body(x: i64, l: i64) -> Vec<String> {
    [pow_str("x", x), pow_str("L", l)].into_iter().flatten().collect()
}

fn render_mono(c: &BigInt, x: i64, l: i64) -> String {
    let body = mono_body(x, l);
    let mag = c.abs();
    let sign = if c.is_negative() { "-" } else { "" };
    if body.is_empty() {
        return format!("{sign}{mag}");
    }
    if mag.is_one() {
        format!("{sign}{}", body.join("*"))
    } else {
        format!("{sign}{mag}*{}", body.join("*"))
    }
}

/// `c·x^e` when the rational function is a single monomial.
fn as_monomial(f: &RationalFunction) -> Option<(BigRational, i64)> {
    let is_mono = |p: &crate::exactalg::Poly| p.coeffs().iter().filter(|c| !c.is_zero()).count() == 1;
    if !is_mono(f.num()) || !is_mono(f.den()) {
        return None;
    }
    let (n, d) = (f.num(), f.den());
    let c = n.leading()? / d.leading()?;
    Some((c, n.valuation() as i64 - d.valuation() as i64))
}

/// Canonical text for an expression with an integer monomial numerator and
/// integer factor coefficients; `None` otherwise.
pub fn render_expr(e: &CtExpr) -> Option<String> {
    let num = if e.numerator().is_zero() {
        "0".to_string()
    } else {
        if e.numerator().degree() != Some(e.numerator().valuation()) {
            return None;
        }
        let v = e.numerator().valuation();
        let (c, x) = as_monomial(&e.numerator().coeff(v))?;
        if !c.is_integer() {
            return None;
        }
        render_mono(c.numer(), x, e.shift() + v as i64)
    };
    if e.factors().is_empty() {
        return Some(num);
    }
    let mut parts = Vec::with_capacity(e.factors().len());
    for f in e.factors() {
        if !f.coeff.is_integer() {
            return None;
        }
        let c = f.coeff.numer();
        let body = render_mono(&c.abs(), f.x_exp, f.l_exp);
        let op = if c.is_negative() { '+' } else { '-' };
        parts.push(format!("(1 {op} {body})"));
    }
    let den = if parts.len() == 1 {
        parts.pop().unwrap()
    } else {
        format!("({})", parts.join("*"))
    };
    Some(format!("{num}/{den}"))
}
