//! The ℓ-weight lattice: the free abelian group on symbols `omega_{i,a}`,
//! with spectral parameters recorded as `(orbit, exponent)` pairs.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Mul, MulAssign};
use std::str::FromStr;
use std::sync::Arc;


use crate::cartan::{cartan_data, LieType};
use crate::error::{Error, Result};
use crate::weyl::Weight;

/// Name of a `q`-orbit in `C^x`. Distinct names never collide.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Orbit(Arc<str>);

impl Orbit {
    pub fn new(name: &str) -> Result<Self> {
        if is_identifier(name) {
            Ok(Orbit(Arc::from(name)))
        } else {
            Err(Error::Parse { pos: 0, msg: format!("invalid orbit name `{name}`") })
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

fn is_identifier(s: &str) -> bool {
    let mut bytes = s.bytes();
    matches!(bytes.next(), Some(b) if b.is_ascii_alphabetic() || b == b'_')
        && bytes.all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl fmt::Debug for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// The point `a q^exp` where `a` is the base point of `orbit`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpectralParam {
    pub orbit: Orbit,
    pub exp: i64,
}

impl SpectralParam {
    pub fn new(orbit: &str, exp: i64) -> Result<Self> {
        Ok(SpectralParam { orbit: Orbit::new(orbit)?, exp })
    }

    pub fn shifted(&self, k: i64) -> Self {
        SpectralParam { orbit: self.orbit.clone(), exp: self.exp + k }
    }
}

impl fmt::Display for SpectralParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.orbit, self.exp)
    }
}

/// An element of `P_q`: a finitely supported map `(node, param) -> exponent`,
/// never storing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LWeight {
    factors: BTreeMap<(usize, SpectralParam), i64>,
}

impl LWeight {
    pub fn one() -> Self {
        Self::default()
    }

    /// `omega_{i,p}`, without a rank check.
    pub fn omega(i: usize, p: SpectralParam) -> Self {
        Self::monomial(i, p, 1)
    }

    pub fn monomial(i: usize, p: SpectralParam, power: i64) -> Self {
        let mut w = Self::one();
        w.add_factor(i, p, power);
        w
    }

    pub fn from_factors<I: IntoIterator<Item = (usize, SpectralParam, i64)>>(it: I) -> Self {
        let mut w = Self::one();
        for (i, p, c) in it {
            w.add_factor(i, p, c);
        }
        w
    }

    /// Multiply in `omega_{i,p}^power`.
    pub fn add_factor(&mut self, i: usize, p: SpectralParam, power: i64) {
        if power == 0 {
            return;
        }
        let key = (i, p);
        let v = self.factors.entry(key.clone()).or_insert(0);
        *v += power;
        if *v == 0 {
            self.factors.remove(&key);
        }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn get(&self, i: usize, p: &SpectralParam) -> i64 {
        self.factors.get(&(i, p.clone())).copied().unwrap_or(0)
    }

    /// Factors in canonical `(node, orbit, exponent)` order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &SpectralParam, i64)> + '_ {
        self.factors.iter().map(|((i, p), c)| (*i, p, *c))
    }

    pub fn max_node(&self) -> usize {
        self.factors.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    pub fn check_rank(&self, t: LieType) -> Result<()> {
        match self.factors.keys().find(|(i, _)| *i == 0 || *i > t.rank()) {
            Some((i, _)) => Err(Error::NodeOutOfRange { node: *i, rank: t.rank() }),
            None => Ok(()),
        }
    }

    pub fn inv(&self) -> Self {
        LWeight { factors: self.factors.iter().map(|(k, c)| (k.clone(), -c)).collect() }
    }

    pub fn pow(&self, k: i64) -> Self {
        if k == 0 {
            return Self::one();
        }
        LWeight { factors: self.factors.iter().map(|(key, c)| (key.clone(), c * k)).collect() }
    }

    /// Substitute `u -> q^k u`: every parameter exponent moves by `k`.
    pub fn shift(&self, k: i64) -> Self {
        LWeight {
            factors: self.factors.iter().map(|((i, p), c)| ((*i, p.shifted(k)), *c)).collect(),
        }
    }

    /// Dominant: an `n`-tuple of polynomials, i.e. every exponent positive.
    pub fn is_dominant(&self) -> bool {
        self.factors.values().all(|&c| c > 0)
    }

    /// The classical weight `sum c * omega_i`.
    pub fn wt(&self, rank: usize) -> Weight {
        let mut v = vec![0; rank];
        for ((i, _), c) in &self.factors {
            v[i - 1] += c;
        }
        Weight(v)
    }

    /// The `i`-th entry as a map `param -> exponent`.
    pub fn entry(&self, i: usize) -> BTreeMap<SpectralParam, i64> {
        self.factors
            .range((i, SpectralParam { orbit: Orbit(Arc::from("")), exp: i64::MIN })..)
            .take_while(|((j, _), _)| *j == i)
            .map(|((_, p), c)| (p.clone(), *c))
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "factors": self.iter().map(|(i, p, c)| serde_json::json!({
                "node": i, "orbit": p.orbit.as_str(), "exp": p.exp, "power": c,
            })).collect::<Vec<_>>()
        })
    }
}

impl Mul for &LWeight {
    type Output = LWeight;

    fn mul(self, rhs: &LWeight) -> LWeight {
        let mut out = self.clone();
        out *= rhs;
        out
    }
}

impl Mul for LWeight {
    type Output = LWeight;

    fn mul(mut self, rhs: LWeight) -> LWeight {
        self *= &rhs;
        self
    }
}

impl MulAssign<&LWeight> for LWeight {
    fn mul_assign(&mut self, rhs: &LWeight) {
        for ((i, p), c) in &rhs.factors {
            self.add_factor(*i, p.clone(), *c);
        }
    }
}

impl std::iter::Product for LWeight {
    fn product<I: Iterator<Item = LWeight>>(iter: I) -> LWeight {
        iter.fold(LWeight::one(), |acc, w| acc * w)
    }
}

/// `omega_{i,p}` with the node checked against the type.
pub fn fundamental_lweight(t: LieType, i: usize, p: SpectralParam) -> Result<LWeight> {
    t.check_node(i)?;
    Ok(LWeight::omega(i, p))
}

/// The dual `omega*`: node `i` receives the node-`w0(i)` factors shifted by
/// `max(d) * h_vee`.
pub fn dual_lweight(t: LieType, omega: &LWeight) -> Result<LWeight> {
    omega.check_rank(t)?;
    if !omega.is_dominant() {
        return Err(Error::NotDominant { what: "l-weight", value: omega.to_string() });
    }
    let c = cartan_data(t);
    let k = c.twist_shift();
    Ok(LWeight::from_factors(omega.iter().map(|(i, p, e)| (c.w0(i), p.shifted(k), e))))
}

impl fmt::Display for LWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (n, ((i, p), c)) in self.factors.iter().enumerate() {
            if n > 0 {
                f.write_str("*")?;
            }
            write!(f, "w[{i};{},{}]", p.orbit, p.exp)?;
            if *c != 1 {
                write!(f, "^{c}")?;
            }
        }
        Ok(())
    }
}

/// A small hand-rolled cursor shared by the text parsers in this crate.
pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub(crate) fn pos(&self) -> usize {
        self.pos
    }

    pub(crate) fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos == self.src.len()
    }

    pub(crate) fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    pub(crate) fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    pub(crate) fn eat(&mut self, tok: &str) -> bool {
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, tok: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            self.err(format!("expected `{tok}`"))
        }
    }

    pub(crate) fn int(&mut self) -> Result<i64> {
        let rest = self.rest();
        let sign = usize::from(rest.starts_with('-') || rest.starts_with('+'));
        let digits = rest[sign..].bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return self.err("expected an integer");
        }
        let text = &rest[..sign + digits];
        match text.parse::<i64>() {
            Ok(v) => {
                self.pos += text.len();
                Ok(v)
            }
            Err(_) => self.err("integer out of range"),
        }
    }

    pub(crate) fn ident(&mut self) -> Result<&'a str> {
        let rest = self.rest();
        let len = rest
            .bytes()
            .enumerate()
            .take_while(|&(k, b)| b == b'_' || b.is_ascii_alphabetic() || (k > 0 && b.is_ascii_digit()))
            .count();
        if len == 0 {
            return self.err("expected an orbit name");
        }
        self.pos += len;
        Ok(&rest[..len])
    }

    /// `node ";" orbit ("," exp)? "]"` after the opening bracket.
    pub(crate) fn node_param(&mut self) -> Result<(usize, SpectralParam)> {
        let at = self.pos;
        let node = self.int()?;
        if node <= 0 {
            return Err(Error::Parse { pos: at, msg: "node must be positive".into() });
        }
        self.expect(";")?;
        let (orbit, exp) = self.param_body()?;
        Ok((node as usize, SpectralParam { orbit, exp }))
    }

    /// `orbit ("," exp)? "]"`.
    pub(crate) fn param_body(&mut self) -> Result<(Orbit, i64)> {
        let orbit = Orbit(Arc::from(self.ident()?));
        let exp = if self.eat(",") { self.int()? } else { 0 };
        self.expect("]")?;
        Ok((orbit, exp))
    }

    pub(crate) fn lweight(&mut self) -> Result<LWeight> {
        self.skip_ws();
        if self.eat("1") {
            return Ok(LWeight::one());
        }
        let mut w = LWeight::one();
        loop {
            self.skip_ws();
            self.expect("w[")?;
            let (i, p) = self.node_param()?;
            let power = if self.eat("^") { self.int()? } else { 1 };
            w.add_factor(i, p, power);
            let save = self.pos;
            self.skip_ws();
            if !self.eat("*") {
                self.pos = save;
                return Ok(w);
            }
        }
    }
}

pub fn parse_lweight(text: &str) -> Result<LWeight> {
    let mut c = Cursor::new(text);
    let w = c.lweight()?;
    c.skip_ws();
    if !c.at_end() {
        return c.err("unexpected trailing input");
    }
    Ok(w)
}

impl FromStr for LWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_lweight(s)
    }
}

/// An element of `Z[P_q]` with positive coefficients: an ℓ-character.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LCharacter {
    terms: BTreeMap<LWeight, u64>,
}

impl LCharacter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit() -> Self {
        Self::single(LWeight::one(), 1)
    }

    pub fn single(w: LWeight, mult: u64) -> Self {
        let mut c = Self::new();
        c.add(w, mult);
        c
    }

    pub fn add(&mut self, w: LWeight, mult: u64) {
        if mult > 0 {
            *self.terms.entry(w).or_insert(0) += mult;
        }
    }

    pub fn mult(&self, w: &LWeight) -> u64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn dimension(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&LWeight, u64)> + '_ {
        self.terms.iter().map(|(w, m)| (w, *m))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "terms": self.iter().map(|(w, m)| serde_json::json!({
                "lweight": w.to_string(), "mult": m,
            })).collect::<Vec<_>>(),
            "dimension": self.dimension(),
        })
    }
}

impl FromIterator<(LWeight, u64)> for LCharacter {
    fn from_iter<I: IntoIterator<Item = (LWeight, u64)>>(iter: I) -> Self {
        let mut c = Self::new();
        for (w, m) in iter {
            c.add(w, m);
        }
        c
    }
}

/// One term per line: `mult lweight`.
impl fmt::Display for LCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, (w, m)) in self.terms.iter().enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            write!(f, "{m} {w}")?;
        }
        Ok(())
    }
}

/// Terms separated by newlines or `+`; each is `[mult] lweight`, where a
/// multiplicity is an integer followed by whitespace.
pub fn parse_lcharacter(text: &str) -> Result<LCharacter> {
    let mut out = LCharacter::new();
    let mut c = Cursor::new(text);
    loop {
        c.skip_ws();
        if c.at_end() {
            break;
        }
        let mult = if starts_with_count(c.rest()) {
            let at = c.pos();
            let m = c.int()?;
            if m <= 0 {
                return Err(Error::Parse { pos: at, msg: "multiplicity must be positive".into() });
            }
            m as u64
        } else {
            1
        };
        let w = c.lweight()?;
        out.add(w, mult);
        c.skip_ws();
        c.eat("+");
    }
    Ok(out)
}

fn starts_with_count(s: &str) -> bool {
    let digits = s.bytes().take_while(u8::is_ascii_digit).count();
    digits > 0 && s[digits..].starts_with(|c: char| c.is_whitespace())
}

impl FromStr for LCharacter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_lcharacter(s)
    }
}
