//! The braid group action on `P_q`, simple ℓ-roots, and membership in the
//! ℓ-root lattice `Q_q`.

use std::collections::BTreeMap;

use crate::cartan::{cartan_data, CartanData, LieType};
use crate::error::{Error, Result};
use crate::lweight::{LWeight, Orbit, SpectralParam};
use crate::weyl::WeylGroup;

/// Exponent offsets contributed to a neighbour `k` of `i` when `T_i` acts on
/// a factor at node `i`.
fn neighbour_shifts(c: &CartanData, k: usize, i: usize) -> &'static [i64] {
    match c.a(k, i) {
        -1 => match c.d(i) {
            1 => &[1],
            2 => &[2],
            _ => &[3],
        },
        -2 => &[1, 3],
        -3 => &[1, 3, 5],
        _ => &[],
    }
}

/// `T_i` on a single generator `omega_{i,p}`, as `(node, exponent offset, power)`.
fn generator_image(c: &CartanData, i: usize) -> Vec<(usize, i64, i64)> {
    let mut out = vec![(i, 2 * c.d(i), -1)];
    for k in c.neighbours(i) {
        out.extend(neighbour_shifts(c, k, i).iter().map(|&s| (k, s, 1)));
    }
    out
}

pub fn braid_act(t: LieType, i: usize, pi: &LWeight) -> Result<LWeight> {
    t.check_node(i)?;
    pi.check_rank(t)?;
    Ok(act(&cartan_data(t), i, pi))
}

fn act(c: &CartanData, i: usize, pi: &LWeight) -> LWeight {
    let image = generator_image(c, i);
    let mut out = LWeight::one();
    for (j, p, e) in pi.iter() {
        if j != i {
            out.add_factor(j, p.clone(), e);
            continue;
        }
        for &(k, s, pw) in &image {
            out.add_factor(k, p.shifted(s), pw * e);
        }
    }
    out
}

/// The result of applying `T_w` for a word, plus whether the word was reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordAction {
    pub lweight: LWeight,
    pub reduced: bool,
}

/// `T_{i_1}(T_{i_2}(... T_{i_k}(pi)))`.
pub fn braid_act_word(t: LieType, word: &[usize], pi: &LWeight) -> Result<WordAction> {
    pi.check_rank(t)?;
    for &i in word {
        t.check_node(i)?;
    }
    let c = cartan_data(t);
    let lweight = word.iter().rev().fold(pi.clone(), |acc, &i| act(&c, i, &acc));
    let reduced = WeylGroup::get(t).is_reduced(word)?;
    Ok(WordAction { lweight, reduced })
}

/// `alpha_{i,p} = T_i(omega_{i,p})^{-1} omega_{i,p}`.
pub fn simple_lroot(t: LieType, i: usize, p: SpectralParam) -> Result<LWeight> {
    t.check_node(i)?;
    let w = LWeight::omega(i, p);
    Ok(&act(&cartan_data(t), i, &w).inv() * &w)
}

/// `alpha_{i,0}` as `(node, exponent offset, power)`; its unique lowest entry
/// is `(i, 0, 1)` and its unique highest is `(i, 2 d_i, 1)`.
pub(crate) fn lroot_template(c: &CartanData, i: usize) -> Vec<(usize, i64, i64)> {
    generator_image(c, i)
        .into_iter()
        .map(|(k, s, pw)| (k, s, -pw))
        .chain(std::iter::once((i, 0, 1)))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Any,
    Plus,
    Minus,
}

impl std::str::FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "any" => Ok(Sign::Any),
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "minus" => Ok(Sign::Minus),
            _ => Err(Error::Parse { pos: 0, msg: format!("unknown sign `{s}`") }),
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Any => "any",
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// `prod alpha_{i,p}^{c_{i,p}}`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LRootDecomposition {
    pub coeffs: BTreeMap<(usize, SpectralParam), i64>,
}

impl LRootDecomposition {
    pub fn expand(&self, t: LieType) -> Result<LWeight> {
        let mut out = LWeight::one();
        for ((i, p), c) in &self.coeffs {
            out *= &simple_lroot(t, *i, p.clone())?.pow(*c);
        }
        Ok(out)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|&c| c > 0)
    }

    pub fn is_nonpositive(&self) -> bool {
        self.coeffs.values().all(|&c| c < 0)
    }

    pub fn to_json(&self, sign: Sign) -> serde_json::Value {
        serde_json::json!({
            "in_lattice": true,
            "sign": sign.to_string(),
            "coeffs": self.coeffs.iter().map(|((i, p), c)| serde_json::json!({
                "node": i, "orbit": p.orbit.as_str(), "exp": p.exp, "c": c,
            })).collect::<Vec<_>>(),
        })
    }
}

/// `a[i;orbit,exp]^c` factors joined by `*`, or `1`.
impl std::fmt::Display for LRootDecomposition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("1");
        }
        for (n, ((i, p), c)) in self.coeffs.iter().enumerate() {
            if n > 0 {
                f.write_str("*")?;
            }
            write!(f, "a[{i};{},{}]", p.orbit, p.exp)?;
            if *c != 1 {
                write!(f, "^{c}")?;
            }
        }
        Ok(())
    }
}

/// Per-orbit residue keyed by `(exponent, node)` so the lowest layer pops first.
pub(crate) type Residue = BTreeMap<(i64, usize), i64>;

pub(crate) fn split_by_orbit(pi: &LWeight) -> BTreeMap<Orbit, Residue> {
    let mut out: BTreeMap<Orbit, Residue> = BTreeMap::new();
    for (i, p, c) in pi.iter() {
        out.entry(p.orbit.clone()).or_default().insert((p.exp, i), c);
    }
    out
}

pub(crate) fn add_to(res: &mut Residue, key: (i64, usize), v: i64) {
    let e = res.entry(key).or_insert(0);
    *e += v;
    if *e == 0 {
        res.remove(&key);
    }
}

/// Eliminate every entry with exponent `<= upto` by subtracting multiples of
/// simple ℓ-roots, lowest layer first. Returns the multiples used.
///
/// Each `alpha_{i,e}` has a single entry at its lowest exponent `e`, at node
/// `i`, with coefficient 1; so this is forward substitution on a
/// unitriangular system, and the multiples are forced.
pub(crate) fn eliminate_upto(
    templates: &[Vec<(usize, i64, i64)>],
    res: &mut Residue,
    upto: i64,
) -> Vec<((usize, i64), i64)> {
    let mut used = Vec::new();
    while let Some((&(e, i), &v)) = res.iter().next() {
        if e > upto {
            break;
        }
        for &(k, s, pw) in &templates[i - 1] {
            add_to(res, (e + s, k), -v * pw);
        }
        used.push(((i, e), v));
    }
    used
}

pub(crate) fn templates(c: &CartanData) -> Vec<Vec<(usize, i64, i64)>> {
    (1..=c.rank()).map(|i| lroot_template(c, i)).collect()
}

/// Exact membership in `Q_q` (or `Q_q^+` / `Q_q^-`).
///
/// Any decomposition of `pi` only uses roots `alpha_{i,e}` with `e` inside the
/// exponent range of `pi` (compare lowest and highest entries), so running the
/// elimination across that range decides membership.
pub fn lroot_decompose(t: LieType, pi: &LWeight, sign: Sign) -> Result<Option<LRootDecomposition>> {
    pi.check_rank(t)?;
    let c = cartan_data(t);
    let tpl = templates(&c);
    let mut out = LRootDecomposition::default();
    for (orbit, mut res) in split_by_orbit(pi) {
        let hi = res.keys().map(|k| k.0).max().unwrap_or(0);
        for ((i, e), v) in eliminate_upto(&tpl, &mut res, hi) {
            let key = (i, SpectralParam { orbit: orbit.clone(), exp: e });
            let slot = out.coeffs.entry(key.clone()).or_insert(0);
            *slot += v;
            if *slot == 0 {
                out.coeffs.remove(&key);
            }
        }
        if !res.is_empty() {
            return Ok(None);
        }
    }
    let ok = match sign {
        Sign::Any => true,
        Sign::Plus => out.is_nonnegative(),
        Sign::Minus => out.is_nonpositive(),
    };
    Ok(ok.then_some(out))
}

/// `pi omega^{-1}` lies in `Q_q^-`.
pub fn cone_check(t: LieType, omega: &LWeight, pi: &LWeight) -> Result<bool> {
    Ok(lroot_decompose(t, &(pi * &omega.inv()), Sign::Minus)?.is_some())
}

/// `T_{w0}` applied through a computed reduced word for `w0`.
pub fn twist_by_w0(t: LieType, omega: &LWeight) -> Result<LWeight> {
    omega.check_rank(t)?;
    if !omega.is_dominant() {
        return Err(Error::NotDominant { what: "l-weight", value: omega.to_string() });
    }
    let w0 = WeylGroup::get(t).longest_element();
    Ok(braid_act_word(t, w0.word(), omega)?.lweight)
}

/// Closed form of `T_{w0}`: `omega_{i,p} -> omega_{w0(i), p q^{shift}}^{-1}`.
pub fn twist_by_w0_closed_form(t: LieType, omega: &LWeight) -> Result<LWeight> {
    omega.check_rank(t)?;
    let c = cartan_data(t);
    let k = c.twist_shift();
    Ok(LWeight::from_factors(omega.iter().map(|(i, p, e)| (c.w0(i), p.shifted(k), -e))))
}

/// `alpha_{i,pi}` from the `i`-th entry of `pi`: `T_i(pi) = pi alpha_{i,pi}^{-1}`.
pub fn entry_root(t: LieType, i: usize, pi: &LWeight) -> Result<LWeight> {
    t.check_node(i)?;
    let mut out = LWeight::one();
    for (p, e) in pi.entry(i) {
        out *= &simple_lroot(t, i, p)?.pow(e);
    }
    Ok(out)
}
