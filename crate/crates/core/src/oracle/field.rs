//! Valued coefficient fields: rationals with a p-adic valuation, and
//! rational functions in one parameter `t` valued by order at `t = 0`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{fmt_rat, parse_rat, Rat};

/// Field operations with a valuation. Constants are produced from an
/// existing element because some models carry context (the prime).
pub trait ValuedField: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn from_rat_like(&self, q: Rat) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Panics on division by zero.
    fn div(&self, other: &Self) -> Self;
    fn is_zero(&self) -> bool;
    /// `None` for zero.
    fn valuation(&self) -> Option<Rat>;

    fn one_like(&self) -> Self {
        self.from_rat_like(Rat::one())
    }

    fn neg(&self) -> Self {
        self.zero_like().sub(self)
    }

    fn from_int_like(&self, n: i64) -> Self {
        self.from_rat_like(Rat::from_integer(n.into()))
    }

    fn pow(&self, e: u32) -> Self {
        (0..e).fold(self.one_like(), |acc, _| acc.mul(self))
    }
}

/// The exponent of `p` in a nonzero integer.
pub fn p_adic_order(n: &BigInt, p: u64) -> i64 {
    assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut k = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return k;
        }
        n = q;
        k += 1;
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct PAdic {
    pub value: Rat,
    pub prime: u64,
}

impl PAdic {
    pub fn new(value: Rat, prime: u64) -> Self {
        PAdic { value, prime }
    }
}

impl fmt::Debug for PAdic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_rat(&self.value))
    }
}

impl ValuedField for PAdic {
    fn zero_like(&self) -> Self {
        PAdic::new(Rat::zero(), self.prime)
    }

    fn from_rat_like(&self, q: Rat) -> Self {
        PAdic::new(q, self.prime)
    }

    fn add(&self, o: &Self) -> Self {
        PAdic::new(&self.value + &o.value, self.prime)
    }

    fn sub(&self, o: &Self) -> Self {
        PAdic::new(&self.value - &o.value, self.prime)
    }

    fn mul(&self, o: &Self) -> Self {
        PAdic::new(&self.value * &o.value, self.prime)
    }

    fn div(&self, o: &Self) -> Self {
        assert!(!o.value.is_zero(), "division by zero");
        PAdic::new(&self.value / &o.value, self.prime)
    }

    fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    fn valuation(&self) -> Option<Rat> {
        if self.value.is_zero() {
            return None;
        }
        let k = p_adic_order(self.value.numer(), self.prime) - p_adic_order(self.value.denom(), self.prime);
        Some(Rat::from_integer(k.into()))
    }
}

/// Dense univariate polynomial over `Q`, coefficients from degree 0 up,
/// without trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QPoly(pub Vec<Rat>);

impl QPoly {
    pub fn new(mut c: Vec<Rat>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        QPoly(c)
    }

    pub fn constant(q: Rat) -> Self {
        QPoly::new(vec![q])
    }

    pub fn t() -> Self {
        QPoly::new(vec![Rat::zero(), Rat::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.0.last()
    }

    /// Order of vanishing at zero.
    pub fn order(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, o: &QPoly) -> QPoly {
        let n = self.0.len().max(o.0.len());
        let z = Rat::zero();
        QPoly::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn scale(&self, q: &Rat) -> QPoly {
        QPoly::new(self.0.iter().map(|c| c * q).collect())
    }

    pub fn sub(&self, o: &QPoly) -> QPoly {
        self.add(&o.scale(&-Rat::one()))
    }

    pub fn mul(&self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::default();
        }
        let mut c = vec![Rat::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        QPoly::new(c)
    }

    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.leading().unwrap().clone();
        let mut r = self.0.clone();
        let mut q = vec![Rat::zero(); self.0.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = r.last().unwrap() / &lead;
            for (i, x) in d.0.iter().enumerate() {
                r[k + i] -= &c * x;
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        (QPoly::new(q), QPoly::new(r))
    }

    pub fn monic(&self) -> QPoly {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => self.clone(),
        }
    }

    pub fn gcd(&self, o: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// An element of `Q(t)` in lowest terms with monic denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: QPoly,
    den: QPoly,
}

impl RationalFunction {
    pub fn new(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RationalFunction {
                num,
                den: QPoly::constant(Rat::one()),
            };
        }
        let g = num.gcd(&den);
        let (n, _) = num.div_rem(&g);
        let (d, _) = den.div_rem(&g);
        let l = d.leading().unwrap().recip();
        RationalFunction {
            num: n.scale(&l),
            den: d.scale(&l),
        }
    }

    pub fn constant(q: Rat) -> Self {
        RationalFunction::new(QPoly::constant(q), QPoly::constant(Rat::one()))
    }

    pub fn t() -> Self {
        RationalFunction::new(QPoly::t(), QPoly::constant(Rat::one()))
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QPoly {
        &self.den
    }

    /// Parses expressions in `t` built from rationals, `+ - * / ^` and
    /// parentheses, e.g. `"(1+t)/(3*t^2)"`.
    pub fn parse(s: &str) -> Result<Self> {
        let toks = tokenize(s)?;
        let mut p = Parser { toks, pos: 0 };
        let r = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(Error::InvalidInput(format!("trailing input in {s:?}")));
        }
        Ok(r)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn fmt_qpoly(p: &QPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (i, c) in p.0.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let s = match i {
            0 => fmt_rat(c),
            1 => format!("{}*t", fmt_rat(c)),
            _ => format!("{}*t^{i}", fmt_rat(c)),
        };
        parts.push(s);
    }
    parts.join("+")
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == QPoly::constant(Rat::one()) {
            write!(f, "{}", fmt_qpoly(&self.num))
        } else {
            write!(f, "({})/({})", fmt_qpoly(&self.num), fmt_qpoly(&self.den))
        }
    }
}

impl ValuedField for RationalFunction {
    fn zero_like(&self) -> Self {
        RationalFunction::constant(Rat::zero())
    }

    fn from_rat_like(&self, q: Rat) -> Self {
        RationalFunction::constant(q)
    }

    fn add(&self, o: &Self) -> Self {
        RationalFunction::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }

    fn sub(&self, o: &Self) -> Self {
        RationalFunction::new(self.num.mul(&o.den).sub(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }

    fn mul(&self, o: &Self) -> Self {
        RationalFunction::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    fn div(&self, o: &Self) -> Self {
        assert!(!o.num.is_zero(), "division by zero");
        RationalFunction::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn valuation(&self) -> Option<Rat> {
        let a = self.num.order()? as i64;
        let b = self.den.order().expect("nonzero denominator") as i64;
        Some(Rat::from_integer((a - b).into()))
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rat),
    T,
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let n: String = cs[start..i].iter().collect();
            out.push(Tok::Num(
                parse_rat(&n).ok_or_else(|| Error::InvalidInput(format!("bad number {n:?}")))?,
            ));
        } else if c == 't' {
            out.push(Tok::T);
            i += 1;
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::InvalidInput(format!("unexpected character {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek_op(&self) -> Option<char> {
        match self.toks.get(self.pos) {
            Some(Tok::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == '+' { acc.add(&rhs) } else { acc.sub(&rhs) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.unary()?;
        while let Some(c @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.unary()?;
            if c == '/' && rhs.is_zero() {
                return Err(Error::InvalidInput("division by zero".into()));
            }
            acc = if c == '*' { acc.mul(&rhs) } else { acc.div(&rhs) };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RationalFunction> {
        if self.peek_op() == Some('-') {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            match self.toks.get(self.pos) {
                Some(Tok::Num(n)) if n.is_integer() && !n.is_negative() => {
                    let e: u32 = n
                        .to_integer()
                        .try_into()
                        .map_err(|_| Error::InvalidInput("exponent too large".into()))?;
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                _ => return Err(Error::InvalidInput("expected a natural exponent".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RationalFunction> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(RationalFunction::constant(n))
            }
            Some(Tok::T) => {
                self.pos += 1;
                Ok(RationalFunction::t())
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(Error::InvalidInput("unbalanced parentheses".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            _ => Err(Error::InvalidInput("expected a number, t or '('".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn p_adic_valuations() {
        let p = PAdic::new(ratio(18, 5), 3);
        assert_eq!(p.valuation(), Some(rat(2)));
        assert_eq!(PAdic::new(ratio(5, 27), 3).valuation(), Some(rat(-3)));
        assert_eq!(p.zero_like().valuation(), None);
    }

    #[test]
    fn rational_function_arithmetic() {
        let f = RationalFunction::parse("(t^2 + t)/(3*t)").unwrap();
        assert_eq!(f, RationalFunction::parse("(t+1)/3").unwrap());
        assert_eq!(f.valuation(), Some(rat(0)));
        let g = RationalFunction::parse("t^3/(1-t)").unwrap();
        assert_eq!(g.valuation(), Some(rat(3)));
        assert_eq!(g.div(&RationalFunction::parse("t^5").unwrap()).valuation(), Some(rat(-2)));
        assert_eq!(f.sub(&f), f.zero_like());
        assert!(RationalFunction::parse("1/(t-t)").is_err());
        assert!(RationalFunction::parse("x").is_err());
    }

    #[test]
    fn rational_function_display_round_trips() {
        let f = RationalFunction::parse("(2*t^2 - 1/2)/(t+3)").unwrap();
        assert_eq!(RationalFunction::parse(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn polynomial_gcd() {
        let a = QPoly::new(vec![rat(-1), rat(0), rat(1)]);
        let b = QPoly::new(vec![rat(1), rat(1)]);
        assert_eq!(a.gcd(&b), b);
    }
}
