use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::prs::{self, Ring};
use super::rational::{display, int, parse_rational, to_f64, Rational};
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Sparse polynomial in named indeterminates with rational coefficients.
///
/// Exponent vectors follow the order of `vars`; the map is ordered
/// lexicographically, so the last key is the lex-leading monomial.
#[derive(Clone, Debug)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

/// Polynomial in two indeterminates, the common case here.
pub type BiPoly = MultiPoly;

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = unify(self, other);
        a.terms == b.terms
    }
}
impl Eq for MultiPoly {}

fn union_vars(a: &[String], b: &[String]) -> Vec<String> {
    let mut v = a.to_vec();
    for x in b {
        if !v.contains(x) {
            v.push(x.clone());
        }
    }
    v
}

fn unify(a: &MultiPoly, b: &MultiPoly) -> (MultiPoly, MultiPoly) {
    if a.vars == b.vars {
        return (a.clone(), b.clone());
    }
    let v = union_vars(&a.vars, &b.vars);
    (a.with_vars(&v), b.with_vars(&v))
}

impl MultiPoly {
    pub fn zero(vars: &[&str]) -> Self {
        MultiPoly { vars: vars.iter().map(|s| s.to_string()).collect(), terms: BTreeMap::new() }
    }

    pub fn constant(c: Rational, vars: &[&str]) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    /// The generator `name` in the ring over `vars`.
    pub fn var(name: &str, vars: &[&str]) -> Result<Self> {
        let mut p = Self::zero(vars);
        let i = p.index(name)?;
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        p.terms.insert(e, Rational::one());
        Ok(p)
    }

    /// Build from `(coefficient, exponents)` pairs.
    pub fn from_terms(vars: &[&str], terms: impl IntoIterator<Item = (Rational, Vec<u32>)>) -> Self {
        let mut p = Self::zero(vars);
        for (c, e) in terms {
            assert_eq!(e.len(), vars.len());
            p.add_term(e, c);
        }
        p
    }

    pub fn from_unipoly(u: &UniPoly) -> Self {
        Self::from_terms(
            &[u.var()],
            u.coeffs().iter().enumerate().map(|(k, c)| (c.clone(), vec![k as u32])),
        )
    }

    /// Parse an expression such as `"31104 s^9 - 3/2*c*s + (c+1)^2"`.
    ///
    /// Juxtaposition means multiplication; `/` is only allowed by a constant.
    pub fn parse(text: &str, vars: &[&str]) -> Result<Self> {
        let toks = tokenize(text)?;
        let mut ps = Parser { toks, pos: 0, vars };
        let p = ps.expr()?;
        if ps.pos != ps.toks.len() {
            return Err(Error::Parse(format!("trailing input in `{text}`")));
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    fn index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn vars(&self) -> Vec<&str> {
        self.vars.iter().map(|s| s.as_str()).collect()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    /// Re-express over a superset of the current variables.
    pub fn with_vars(&self, vars: &[String]) -> Self {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("superset of variables"))
            .collect();
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = vec![0; vars.len()];
            for (i, &k) in e.iter().enumerate() {
                ne[map[i]] = k;
            }
            terms.insert(ne, c.clone());
        }
        MultiPoly { vars: vars.to_vec(), terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&k| k == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: &str) -> usize {
        match self.index(var) {
            Ok(i) => self.terms.keys().map(|e| e[i] as usize).max().unwrap_or(0),
            Err(_) => 0,
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        self.pow_r(k as usize)
    }

    /// Coefficients with respect to `var`, lowest degree first, over the
    /// remaining variables.
    pub fn coeffs_in(&self, var: &str) -> Result<Vec<MultiPoly>> {
        let i = self.index(var)?;
        let rest: Vec<&str> = self.vars.iter().filter(|v| *v != var).map(|s| s.as_str()).collect();
        let mut out = vec![MultiPoly::zero(&rest); self.degree_in(var) + 1];
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let k = ne.remove(i) as usize;
            out[k].add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Inverse of [`coeffs_in`](Self::coeffs_in).
    pub fn from_coeffs_in(var: &str, coeffs: &[MultiPoly]) -> Self {
        let mut vars: Vec<String> = Vec::new();
        for c in coeffs {
            vars = union_vars(&vars, &c.vars);
        }
        vars.retain(|v| v != var);
        vars.push(var.to_string());
        let n = vars.len();
        let mut p = MultiPoly { vars: vars.clone(), terms: BTreeMap::new() };
        for (k, c) in coeffs.iter().enumerate() {
            let c = c.with_vars(&vars[..n - 1]);
            for (e, v) in &c.terms {
                let mut ne = e.clone();
                ne.push(k as u32);
                p.add_term(ne, v.clone());
            }
        }
        p
    }

    /// Substitute a rational value for `var`, removing it from the ring.
    pub fn eval_var(&self, var: &str, x: &Rational) -> Result<Self> {
        let cs = self.coeffs_in(var)?;
        let mut acc = cs[0].zero_like();
        for c in cs.iter().rev() {
            acc = &acc.scale(x) + c;
        }
        Ok(acc)
    }

    /// Substitute a polynomial for `var`, removing it from the ring.
    pub fn subs(&self, var: &str, value: &MultiPoly) -> Result<Self> {
        let cs = self.coeffs_in(var)?;
        let mut acc = cs[0].zero_like();
        for c in cs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        Ok(acc)
    }

    /// Exact value at an assignment covering every variable of the ring.
    pub fn eval(&self, point: &[(&str, Rational)]) -> Result<Rational> {
        let xs: Vec<&Rational> = self
            .vars
            .iter()
            .map(|v| {
                point
                    .iter()
                    .find(|(n, _)| n == v)
                    .map(|(_, x)| x)
                    .ok_or_else(|| Error::NotUnivariate(v.clone()))
            })
            .collect::<Result<_>>()?;
        let mut powers: Vec<Vec<Rational>> = xs.iter().map(|x| vec![Rational::one(), (*x).clone()]).collect();
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                let k = k as usize;
                while powers[i].len() <= k {
                    let next = powers[i].last().unwrap() * xs[i];
                    powers[i].push(next);
                }
                if k > 0 {
                    t *= &powers[i][k];
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    pub fn eval_f64(&self, point: &[(&str, f64)]) -> Result<f64> {
        let idx: Vec<f64> = self
            .vars
            .iter()
            .map(|v| {
                point
                    .iter()
                    .find(|(n, _)| n == v)
                    .map(|&(_, x)| x)
                    .ok_or_else(|| Error::UnknownVariable(v.clone()))
            })
            .collect::<Result<_>>()?;
        Ok(self
            .terms
            .iter()
            .map(|(e, c)| {
                e.iter().zip(&idx).fold(to_f64(c), |acc, (&k, &x)| acc * x.powi(k as i32))
            })
            .sum())
    }

    pub fn derivative(&self, var: &str) -> Result<Self> {
        let i = self.index(var)?;
        let mut p = MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut ne = e.clone();
                ne[i] -= 1;
                p.add_term(ne, c * int(e[i] as i64));
            }
        }
        Ok(p)
    }

    /// View as a univariate polynomial in `var`; every other variable must be absent.
    pub fn to_unipoly(&self, var: &str) -> Result<UniPoly> {
        let cs = self.coeffs_in(var)?;
        let v = cs
            .iter()
            .map(|c| c.as_constant().ok_or_else(|| Error::NotUnivariate(c.vars.join(","))))
            .collect::<Result<Vec<_>>>()?;
        Ok(UniPoly::new(v, var))
    }

    /// Remove variables that do not occur.
    pub fn prune_vars(&self) -> Self {
        let used: Vec<usize> = (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|e| e[i] > 0))
            .collect();
        MultiPoly {
            vars: used.iter().map(|&i| self.vars[i].clone()).collect(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (used.iter().map(|&i| e[i]).collect(), c.clone()))
                .collect(),
        }
    }

    /// `k` with `self = k * other`, if such a rational constant exists.
    pub fn ratio_to(&self, other: &MultiPoly) -> Option<Rational> {
        let (a, b) = unify(self, other);
        if b.is_zero() {
            return a.is_zero().then(Rational::zero);
        }
        let (e, bc) = b.terms.iter().next_back()?;
        let k = a.terms.get(e)? / bc;
        (a == b.scale(&k)).then_some(k)
    }

    /// Exact quotient; fails with `InexactDivision` otherwise.
    pub fn div_exact(&self, d: &MultiPoly) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (mut r, d) = unify(self, d);
        if let Some(k) = d.as_constant() {
            return Ok(r.scale(&(Rational::one() / k)));
        }
        let (de, dc) = d.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut q = MultiPoly { vars: r.vars.clone(), terms: BTreeMap::new() };
        while let Some((re, rc)) = r.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            if re.iter().zip(&de).any(|(a, b)| a < b) {
                return Err(Error::InexactDivision);
            }
            let te: Vec<u32> = re.iter().zip(&de).map(|(a, b)| a - b).collect();
            let tc = rc / &dc;
            for (e, c) in &d.terms {
                let ne: Vec<u32> = e.iter().zip(&te).map(|(a, b)| a + b).collect();
                r.add_term(ne, -(c * &tc));
            }
            q.add_term(te, tc);
        }
        Ok(q)
    }

    /// `Res(p, q)` with respect to `var` (Sylvester rows of `p` first).
    pub fn resultant(&self, other: &MultiPoly, var: &str) -> Result<Self> {
        let (a, b) = unify(self, other);
        let ca = a.coeffs_in(var)?;
        let cb = b.coeffs_in(var)?;
        prs::resultant(&ca, &cb)
    }

    /// Discriminant with respect to `var`.
    pub fn discriminant(&self, var: &str) -> Result<Self> {
        let c = self.coeffs_in(var)?;
        let d = self.derivative(var)?.coeffs_in(var)?;
        prs::discriminant(&c, &d)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let a = c.abs();
            let mut parts = Vec::new();
            let is_const = e.iter().all(|&k| k == 0);
            if !a.is_one() || is_const {
                parts.push(display(&a));
            }
            for (v, &k) in self.vars.iter().zip(e) {
                match k {
                    0 => {}
                    1 => parts.push(v.clone()),
                    _ => parts.push(format!("{v}^{k}")),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (mut a, b) = unify(self, rhs);
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        a
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let (mut a, b) = unify(self, rhs);
        for (e, c) in b.terms {
            a.add_term(e, -c);
        }
        a
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let (a, b) = unify(self, rhs);
        let mut p = MultiPoly { vars: a.vars.clone(), terms: BTreeMap::new() };
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                p.add_term(e, ca * cb);
            }
        }
        p
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&int(-1))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl Ring for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() }
    }
    fn one_like(&self) -> Self {
        let mut p = self.zero_like();
        p.terms.insert(vec![0; self.vars.len()], Rational::one());
        p
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_r(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_r(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_r(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_r(&self) -> Self {
        -self
    }
    fn div_exact_r(&self, o: &Self) -> Self {
        self.div_exact(o).expect("exact division in subresultant sequence")
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let ch: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < ch.len() {
        let c = ch[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let st = i;
            while i < ch.len() && (ch[i].is_ascii_digit() || ch[i] == '.') {
                i += 1;
            }
            out.push(Tok::Num(ch[st..i].iter().collect()));
        } else if c.is_alphabetic() || c == '_' {
            let st = i;
            while i < ch.len() && (ch[i].is_alphanumeric() || ch[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(ch[st..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected `{c}` in `{text}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    vars: &'a [&'a str],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = MultiPoly::zero(self.vars);
        let mut neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let t = self.term()?;
            acc = if neg { &acc - &t } else { &acc + &t };
            if self.eat('+') {
                neg = false;
            } else if self.eat('-') {
                neg = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.factor()?;
            } else if self.eat('/') {
                let d = self.factor()?;
                let k = d
                    .as_constant()
                    .filter(|k| !k.is_zero())
                    .ok_or_else(|| Error::Parse("division by a non-constant".into()))?;
                acc = acc.scale(&(Rational::one() / k));
            } else if matches!(self.peek(), Some(Tok::Num(_) | Tok::Ident(_) | Tok::Op('('))) {
                acc = &acc * &self.factor()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let k: u32 = n.parse().map_err(|_| Error::Parse(format!("bad exponent `{n}`")))?;
                    Ok(base.pow(k))
                }
                _ => Err(Error::Parse("expected exponent".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(MultiPoly::constant(parse_rational(&n)?, self.vars))
            }
            Some(Tok::Ident(v)) => {
                self.pos += 1;
                MultiPoly::var(&v, self.vars)
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing `)`".into()));
                }
                Ok(e)
            }
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::rational::rat;

    fn p(t: &str) -> MultiPoly {
        MultiPoly::parse(t, &["c", "s"]).unwrap()
    }

    #[test]
    fn parse_and_evaluate() {
        let q = p("3c^2 s - 1/2*s + (c+1)^2");
        let v = q.eval(&[("c", int(2)), ("s", int(3))]).unwrap();
        assert_eq!(v, int(36) - rat(3, 2) + int(9));
        assert!(MultiPoly::parse("x + 1", &["c", "s"]).is_err());
        assert!(MultiPoly::parse("c / s", &["c", "s"]).is_err());
    }

    #[test]
    fn exact_division() {
        let a = p("c + s");
        let b = p("c^2 - 2 s + 1");
        assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
        assert_eq!(b.div_exact(&a), Err(Error::InexactDivision));
    }

    #[test]
    fn resultant_of_linear_forms() {
        let vars = ["x", "a", "b"];
        let f = MultiPoly::parse("x - a", &vars).unwrap();
        let g = MultiPoly::parse("x - b", &vars).unwrap();
        let r = f.resultant(&g, "x").unwrap();
        assert_eq!(r, MultiPoly::parse("a - b", &["a", "b"]).unwrap());
    }

    #[test]
    fn generic_quadratic_discriminant() {
        let vars = ["x", "a", "b", "c"];
        let f = MultiPoly::parse("a x^2 + b x + c", &vars).unwrap();
        let d = f.discriminant("x").unwrap();
        assert_eq!(d, MultiPoly::parse("b^2 - 4 a c", &["a", "b", "c"]).unwrap());
    }

    #[test]
    fn coefficient_views_round_trip() {
        let q = p("c^3 s - 2 c s^2 + 7");
        let cs = q.coeffs_in("c").unwrap();
        assert_eq!(cs.len(), 4);
        assert_eq!(MultiPoly::from_coeffs_in("c", &cs), q);
        assert_eq!(q.ratio_to(&q.scale(&rat(-2, 3))), Some(rat(-3, 2)));
        assert_eq!(q.ratio_to(&p("c")), None);
    }
}
