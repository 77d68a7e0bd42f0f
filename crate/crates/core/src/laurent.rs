//! Laurent polynomials in one variable over `Z`, with just enough
//! arithmetic for normal forms in the block group.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// `sum c_e x^e`, zero coefficients never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Laurent(BTreeMap<i64, i64>);

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(e: i64, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    /// `sum x^e` over the given exponents.
    pub fn from_exponents(exps: &[i64]) -> Self {
        let mut p = Self::zero();
        for &e in exps {
            p.add_term(e, 1);
        }
        p
    }

    pub fn add_term(&mut self, e: i64, c: i64) {
        if c == 0 {
            return;
        }
        let v = self.0.entry(e).or_insert(0);
        *v += c;
        if *v == 0 {
            self.0.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, e: i64) -> i64 {
        self.0.get(&e).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.0.iter().map(|(e, c)| (*e, *c))
    }

    pub fn low(&self) -> Option<(i64, i64)> {
        self.0.iter().next().map(|(e, c)| (*e, *c))
    }

    pub fn high(&self) -> Option<(i64, i64)> {
        self.0.iter().next_back().map(|(e, c)| (*e, *c))
    }

    /// `high - low`, or `None` for zero.
    pub fn span(&self) -> Option<i64> {
        Some(self.high()?.0 - self.low()?.0)
    }

    pub fn has_unit_ends(&self) -> bool {
        matches!((self.low(), self.high()), (Some((_, a)), Some((_, b))) if a.abs() == 1 && b.abs() == 1)
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        Laurent(self.0.iter().map(|(e, c)| (e + k, *c)).collect())
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        Laurent(self.0.iter().map(|(e, c)| (*e, c * k)).collect())
    }

    /// Shift so the lowest exponent is 0.
    pub fn normalized(&self) -> Self {
        match self.low() {
            Some((e, _)) => self.shift(-e),
            None => Self::zero(),
        }
    }

    /// Exact quotient `self / d` when `d` has unit ends and divides `self`.
    pub fn exact_div(&self, d: &Laurent) -> Option<Laurent> {
        let (dl, dc) = d.low()?;
        let dspan = d.span()?;
        let mut r = self.clone();
        let mut q = Laurent::zero();
        while let Some((e, c)) = r.low() {
            let (he, _) = r.high().expect("nonzero");
            if he - e < dspan || c % dc != 0 {
                return None;
            }
            let k = c / dc;
            q.add_term(e - dl, k);
            r = &r - &d.shift(e - dl).scale(k);
        }
        Some(q)
    }

    fn to_dense_rational(&self) -> Vec<BigRational> {
        let n = self.normalized();
        let deg = n.high().map_or(0, |h| h.0) as usize;
        let mut v = vec![BigRational::zero(); deg + 1];
        for (e, c) in n.terms() {
            v[e as usize] = BigRational::from_integer(BigInt::from(c));
        }
        v
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        self.scale(-1)
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

fn trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    trim(&mut r);
    let lead = b.last().expect("nonzero divisor").clone();
    while r.len() >= b.len() && !r.is_empty() {
        let k = r.last().unwrap() / &lead;
        let off = r.len() - b.len();
        for (i, bc) in b.iter().enumerate() {
            r[off + i] -= &k * bc;
        }
        trim(&mut r);
    }
    r
}

/// Monic gcd over `Q` of the given Laurent polynomials (as ordinary
/// polynomials after normalising), returned over `Z` with lowest exponent 0
/// when its coefficients are integral, else `None`.
pub fn rational_gcd(polys: &[Laurent]) -> Option<Laurent> {
    let mut g: Vec<BigRational> = Vec::new();
    for p in polys.iter().filter(|p| !p.is_zero()) {
        let mut a = p.to_dense_rational();
        if g.is_empty() {
            g = a;
            continue;
        }
        let mut b = std::mem::take(&mut g);
        trim(&mut a);
        while !b.is_empty() {
            let r = rem(&a, &b);
            a = b;
            b = r;
        }
        g = a;
    }
    trim(&mut g);
    let lead = g.last()?.clone();
    let mut out = Laurent::zero();
    for (e, c) in g.iter().enumerate() {
        let c = c / &lead;
        if !c.is_integer() {
            return None;
        }
        out.add_term(e as i64, c.to_integer().to_i64()?);
    }
    // drop any factor of x
    let out = out.normalized();
    (out.low().is_some_and(|(_, c)| c.abs().is_one())).then_some(out)
}

/// Reduce `v` modulo the ideal generated by a polynomial `g` with unit ends:
/// the result is supported in `[0, span(g))`. Returns the remainder and the
/// quotient `h` with `v = h g + remainder`.
pub fn reduce_mod(v: &Laurent, g: &Laurent) -> (Laurent, Laurent) {
    let g = g.normalized();
    let span = g.span().expect("nonzero modulus");
    let lead = g.high().unwrap().1;
    let tail = g.low().unwrap().1;
    debug_assert!(lead.abs() == 1 && tail.abs() == 1);
    let mut r = v.clone();
    let mut h = Laurent::zero();
    while let Some((e, c)) = r.high() {
        if e < span {
            break;
        }
        let k = c * lead;
        h.add_term(e - span, k);
        r = &r - &g.shift(e - span).scale(k);
    }
    while let Some((e, c)) = r.low() {
        if e >= 0 {
            break;
        }
        let k = c * tail;
        h.add_term(e, k);
        r = &r - &g.shift(e).scale(k);
    }
    (r, h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(terms: &[(i64, i64)]) -> Laurent {
        let mut p = Laurent::zero();
        for &(e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    #[test]
    fn gcds() {
        // (1+x^2) divides 1+x^6 and 1+x^10
        let g = rational_gcd(&[Laurent::from_exponents(&[0, 6]), Laurent::from_exponents(&[0, 10])]).unwrap();
        assert_eq!(g, Laurent::from_exponents(&[0, 2]));
        // E6-style: the two relations share Phi3 Phi12 in x^2
        let g = rational_gcd(&[Laurent::from_exponents(&[0, 8, 16]), Laurent::from_exponents(&[0, 2, 4, 12, 14, 16])]).unwrap();
        assert_eq!(g, lp(&[(0, 1), (2, 1), (6, -1), (10, 1), (12, 1)]));
        assert_eq!(rational_gcd(&[Laurent::from_exponents(&[3, 5])]).unwrap(), Laurent::from_exponents(&[0, 2]));
    }

    #[test]
    fn division() {
        let a = Laurent::from_exponents(&[0, 2]);
        let b = Laurent::from_exponents(&[0, 6]);
        assert_eq!(b.exact_div(&a).unwrap(), lp(&[(0, 1), (2, -1), (4, 1)]));
        assert_eq!(a.exact_div(&b), None);
        assert_eq!(Laurent::monomial(1, 1).exact_div(&a), None);
    }

    proptest! {
        #[test]
        fn reduction_is_canonical(
            v in prop::collection::vec((-12i64..12, -3i64..=3), 0..8),
            h in prop::collection::vec((-6i64..6, -3i64..=3), 0..5),
        ) {
            let g = lp(&[(0, 1), (2, 1), (6, -1), (10, 1), (12, 1)]);
            let v = lp(&v);
            let h = lp(&h);
            let (r1, q) = reduce_mod(&v, &g);
            prop_assert!(r1.terms().all(|(e, _)| (0..12).contains(&e)));
            prop_assert_eq!(&(&q * &g) + &r1, v.clone());
            // adding a multiple of g does not change the remainder
            let (r2, _) = reduce_mod(&(&v + &(&h * &g)), &g);
            prop_assert_eq!(&r1, &r2);
            let (r3, _) = reduce_mod(&r1, &g);
            prop_assert_eq!(r1, r3);
        }
    }
}
