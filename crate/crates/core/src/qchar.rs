//! ℓ-characters: `sl_2` strings, minuscule and table-driven fundamental
//! characters, tensor products and cyclic orderings.

use std::collections::{BTreeMap, HashMap};

use crate::braid::{braid_act, cone_check, simple_lroot};
use crate::cartan::{cartan_data, Family, LieType};
use crate::error::{Error, Result};
use crate::lweight::{LCharacter, LWeight, SpectralParam};
use crate::weyl::{dominant_weights_below, Weight, WeylGroup};

/// The `q`-segment `omega_a(m)`: roots at exponents `m-1, m-3, ..., 1-m` on node 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2String {
    pub a: SpectralParam,
    pub m: u32,
}

impl Sl2String {
    pub fn new(a: SpectralParam, m: u32) -> Self {
        Sl2String { a, m }
    }

    pub fn lweight(&self) -> LWeight {
        segment(&self.a, self.m)
    }
}

fn segment(a: &SpectralParam, m: u32) -> LWeight {
    let m = i64::from(m);
    LWeight::from_factors((0..m).map(|j| (1, a.shifted(m - 1 - 2 * j), 1)))
}

/// Dominant weight `->` multiplicity of `V(omega_{i,a})` at that weight.
pub type MultTable = BTreeMap<Weight, u64>;

/// The evaluation module `V(omega_a(m))` of `sl_2`: terms
/// `omega_{a q^-r}(m-r) omega_{a q^{m-r+2}}(r)^{-1}`, `r = 0..=m`.
pub fn sl2_eval_char(a: &SpectralParam, m: u32) -> LCharacter {
    (0..=m)
        .map(|r| {
            let lo = segment(&a.shifted(-i64::from(r)), m - r);
            let hi = segment(&a.shifted(i64::from(m) - i64::from(r) + 2), r);
            (&lo * &hi.inv(), 1)
        })
        .collect()
}

/// Whether `V(omega_{a_1}(m_1)) ⊗ ...` is irreducible: no two strings in the
/// same orbit are in special position.
pub fn sl2_tensor_irreducible(strings: &[Sl2String]) -> bool {
    for (k, x) in strings.iter().enumerate() {
        for y in &strings[k + 1..] {
            if x.a.orbit != y.a.orbit {
                continue;
            }
            let diff = (x.a.exp - y.a.exp).abs();
            let (mk, ms) = (i64::from(x.m), i64::from(y.m));
            if (0..mk.min(ms)).any(|p| diff == mk + ms - 2 * p) {
                return false;
            }
        }
    }
    true
}

/// A reordering `tau` (output position `k` holds input `tau[k]`) in which no
/// parameter is a positive `q`-power multiple of an earlier one. Orbits keep
/// their slots; within an orbit, exponents decrease (stably).
pub fn cyclicity_order(factors: &[(usize, SpectralParam)]) -> Vec<usize> {
    let mut slots: BTreeMap<&crate::lweight::Orbit, Vec<usize>> = BTreeMap::new();
    for (k, (_, p)) in factors.iter().enumerate() {
        slots.entry(&p.orbit).or_default().push(k);
    }
    let mut tau = vec![0; factors.len()];
    for positions in slots.values() {
        let mut sorted = positions.clone();
        sorted.sort_by(|&x, &y| factors[y].1.exp.cmp(&factors[x].1.exp));
        for (slot, src) in positions.iter().zip(sorted) {
            tau[*slot] = src;
        }
    }
    tau
}

/// `T_w pi` for every `w` in `W_{wt pi}`, reusing `T_{s_j w} = T_j T_w`.
fn braid_orbit(t: LieType, pi: &LWeight) -> Result<Vec<LWeight>> {
    let g = WeylGroup::get(t);
    let reps = g.min_coset_reps(&pi.wt(t.rank()))?;
    let mut images: HashMap<Vec<usize>, LWeight> = HashMap::new();
    let mut out = Vec::with_capacity(reps.len());
    for w in reps {
        let img = match w.word().split_first() {
            None => pi.clone(),
            Some((&j, rest)) => braid_act(t, j, &images[rest])?,
        };
        images.insert(w.word().to_vec(), img.clone());
        out.push(img);
    }
    Ok(out)
}

/// `sum_{w in W_{omega_i}} e(T_w omega_{i,p})` for a minuscule node.
pub fn minuscule_char(t: LieType, i: usize, p: &SpectralParam) -> Result<LCharacter> {
    t.check_node(i)?;
    if let Some(bad) = WeylGroup::get(t).minuscule_witness(i)? {
        return Err(Error::NotMinuscule { ty: t.to_string(), node: i, weight: bad.to_string() });
    }
    Ok(braid_orbit(t, &LWeight::omega(i, p.clone()))?.into_iter().map(|w| (w, 1)).collect())
}

/// The zero-weight ℓ-weights `varpi_1 .. varpi_n` of `V(omega_{2,a})` in `D_n`.
pub fn dn_zero_weights(n: usize, p: &SpectralParam) -> Vec<LWeight> {
    let n_ = n as i64;
    (1..=n)
        .map(|j| {
            let j_ = j as i64;
            if j <= n - 2 {
                let mut w = LWeight::one();
                if j > 1 {
                    w.add_factor(j - 1, p.shifted(j_ + 1), -1);
                    w.add_factor(j - 1, p.shifted(2 * n_ - j_ - 3), 1);
                }
                w.add_factor(j, p.shifted(j_), 1);
                w.add_factor(j, p.shifted(2 * n_ - j_ - 2), -1);
                w
            } else {
                LWeight::from_factors([(j, p.shifted(n_ - 3), 1), (j, p.shifted(n_ + 1), -1)])
            }
        })
        .collect()
}

/// The ℓ-character of `V(omega_{2,a})` for `D_n`: the braid orbit of
/// `omega_{2,a}` plus the zero-weight terms, `varpi_{n-2}` doubled.
pub fn dn_node2_char(n: usize, p: &SpectralParam) -> Result<LCharacter> {
    let t = LieType::new(Family::D, n).map_err(|_| Error::Unsupported(format!("D{n} (rank must be at least 4)")))?;
    let mut c: LCharacter = braid_orbit(t, &LWeight::omega(2, p.clone()))?.into_iter().map(|w| (w, 1)).collect();
    for (j, w) in dn_zero_weights(n, p).into_iter().enumerate() {
        c.add(w, if j + 1 == n - 2 { 2 } else { 1 });
    }
    Ok(c)
}

/// Lower ℓ-weights reachable from `pi'` through node `j`, with a lower bound
/// on their multiplicity.
fn descendants(t: LieType, j: usize, pi: &LWeight) -> Result<Vec<(LWeight, u64)>> {
    let entry = pi.entry(j);
    if entry.values().any(|&e| e < 0) || entry.values().sum::<i64>() != 2 {
        return Ok(Vec::new());
    }
    let roots: Vec<SpectralParam> =
        entry.iter().flat_map(|(p, &e)| std::iter::repeat_n(p.clone(), e as usize)).collect();
    let (lo, hi) = (&roots[0], &roots[1]);
    let down = |r: &SpectralParam| -> Result<LWeight> { Ok(pi * &simple_lroot(t, j, r.clone())?.inv()) };
    if lo == hi {
        return Ok(vec![(down(lo)?, 2)]);
    }
    let qj2 = 2 * cartan_data(t).d(j);
    if lo.orbit == hi.orbit && hi.exp - lo.exp == qj2 {
        // a q_j-segment: only its top root lowers
        return Ok(vec![(down(hi)?, 1)]);
    }
    Ok(vec![(down(lo)?, 1), (down(hi)?, 1)])
}

/// The ℓ-character of `V(omega_{i,p})` for a classical type, by descent over
/// the dominant weights below `omega_i`. The lowering steps give lower bounds
/// on the dominant ℓ-weight multiplicities; `table` must match their sum
/// exactly at every dominant weight, otherwise the table is rejected.
pub fn fundamental_char(t: LieType, i: usize, p: &SpectralParam, table: &MultTable) -> Result<LCharacter> {
    t.check_node(i)?;
    if !t.is_classical() {
        return Err(Error::Unsupported(format!("the exceptional type {t}")));
    }
    let n = t.rank();
    let cartan = cartan_data(t);
    let top = Weight::fundamental(n, i);
    if table.get(&top) != Some(&1) {
        return Err(Error::TableInconsistent { weight: top.to_string(), msg: "highest weight must have multiplicity 1".into() });
    }
    let order = dominant_weights_below(&cartan, &top);
    for (mu, m) in table {
        if *m > 0 && !order.iter().any(|(nu, _)| nu == mu) {
            return Err(Error::TableInconsistent { weight: mu.to_string(), msg: format!("not a dominant weight below omega_{i}") });
        }
    }
    let mut ch = LCharacter::new();
    for (mu, _) in &order {
        let want = table.get(mu).copied().unwrap_or(0);
        let dominant: Vec<(LWeight, u64)> = if *mu == top {
            vec![(LWeight::omega(i, p.clone()), 1)]
        } else {
            let mut bounds: BTreeMap<LWeight, u64> = BTreeMap::new();
            for (w, _) in ch.iter() {
                let wt = w.wt(n);
                for j in 1..=n {
                    if wt.sub(mu).0 != cartan.simple_root(j) {
                        continue;
                    }
                    for (cand, lb) in descendants(t, j, w)? {
                        let slot = bounds.entry(cand).or_insert(0);
                        *slot = (*slot).max(lb);
                    }
                }
            }
            assign_multiplicities(mu, want, bounds)?
        };
        for (w, m) in dominant {
            for img in braid_orbit(t, &w)? {
                ch.add(img, m);
            }
        }
    }
    Ok(ch)
}

fn assign_multiplicities(mu: &Weight, want: u64, bounds: BTreeMap<LWeight, u64>) -> Result<Vec<(LWeight, u64)>> {
    let floor: u64 = bounds.values().sum();
    let err = |msg: String| Error::TableInconsistent { weight: mu.to_string(), msg };
    if floor > want {
        return Err(err(format!("{floor} ℓ-weights forced but the table allows {want}")));
    }
    if floor < want {
        return Err(err(format!("only {floor} ℓ-weights forced but the table expects {want}")));
    }
    Ok(bounds.into_iter().collect())
}

pub fn tensor_char(c1: &LCharacter, c2: &LCharacter) -> LCharacter {
    let mut out = LCharacter::new();
    for (w1, m1) in c1.iter() {
        for (w2, m2) in c2.iter() {
            out.add(w1 * w2, m1 * m2);
        }
    }
    out
}

pub fn weight_projection(c: &LCharacter, rank: usize) -> BTreeMap<Weight, u64> {
    let mut out = BTreeMap::new();
    for (w, m) in c.iter() {
        *out.entry(w.wt(rank)).or_insert(0) += m;
    }
    out
}

/// `prod_i fund_dims(i)^{lambda_i}` for `lambda = wt(omega)`.
pub fn weyl_module_dim(t: LieType, omega: &LWeight, fund_dims: &BTreeMap<usize, u64>) -> Result<u128> {
    omega.check_rank(t)?;
    if !omega.is_dominant() {
        return Err(Error::NotDominant { what: "l-weight", value: omega.to_string() });
    }
    let lambda = omega.wt(t.rank());
    let mut out: u128 = 1;
    for (k, &e) in lambda.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let d = *fund_dims.get(&(k + 1)).ok_or(Error::MissingNode(k + 1))?;
        let pw = u128::from(d).checked_pow(e as u32).ok_or(Error::Overflow)?;
        out = out.checked_mul(pw).ok_or(Error::Overflow)?;
    }
    Ok(out)
}

/// Every term of `c` lies in `omega Q_q^-`.
pub fn in_cone(t: LieType, omega: &LWeight, c: &LCharacter) -> Result<bool> {
    for (w, _) in c.iter() {
        if !cone_check(t, omega, w)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The multiplicity tables used by the test-suite: minuscule nodes, `D_n`
/// node 2, and the `B_n` vector representation.
pub fn builtin_table(t: LieType, i: usize) -> Option<MultTable> {
    let n = t.rank();
    let mut table = MultTable::from([(Weight::fundamental(n, i), 1)]);
    if WeylGroup::get(t).minuscule_witness(i).ok()?.is_none() {
        return Some(table);
    }
    match (t.family(), i) {
        (Family::D, 2) => {
            table.insert(Weight::zero(n), n as u64 + 1);
            Some(table)
        }
        (Family::B, 1) => {
            table.insert(Weight::zero(n), 1);
            Some(table)
        }
        _ => None,
    }
}
