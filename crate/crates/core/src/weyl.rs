//! The finite Weyl group acting on fundamental-weight coordinates.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::cartan::{cartan_data, CartanData, LieType};
use crate::error::{Error, Result};

/// A weight `sum lambda_i omega_i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

/// An element `sum c_k alpha_k` of the root lattice.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootCoords(pub Vec<i64>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    pub fn fundamental(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i - 1] = 1;
        Weight(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl RootCoords {
    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }
}

type Matrix = Vec<Vec<i64>>;

fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

fn mat_vec(a: &Matrix, v: &[i64]) -> Vec<i64> {
    a.iter().map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
}

/// A Weyl group element: a reduced word together with its action matrix.
/// Equality and hashing use the matrix only.
#[derive(Debug, Clone)]
pub struct WeylElement {
    ty: LieType,
    word: Vec<usize>,
    matrix: Matrix,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.ty == other.ty && self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.matrix.hash(h);
    }
}

impl WeylElement {
    pub fn ty(&self) -> LieType {
        self.ty
    }

    /// A reduced expression, read as `s_{w[0]} s_{w[1]} ...`.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn act(&self, lambda: &Weight) -> Weight {
        Weight(mat_vec(&self.matrix, &lambda.0))
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.word.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Per-type tables: Cartan data, simple reflections and positive roots.
#[derive(Debug)]
pub struct WeylGroup {
    cartan: CartanData,
    reflections: Vec<Matrix>,
    /// Positive roots in fundamental coordinates.
    positive: Vec<Vec<i64>>,
    positive_set: HashSet<Vec<i64>>,
}

impl WeylGroup {
    /// Shared, lazily built tables for `t`.
    pub fn get(t: LieType) -> Arc<WeylGroup> {
        static CACHE: OnceLock<Mutex<HashMap<LieType, Arc<WeylGroup>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
        guard.entry(t).or_insert_with(|| Arc::new(WeylGroup::build(t))).clone()
    }

    fn build(t: LieType) -> WeylGroup {
        let cartan = cartan_data(t);
        let n = t.rank();
        let reflections = (1..=n)
            .map(|i| {
                let alpha = cartan.simple_root(i);
                let mut m = identity(n);
                for (k, row) in m.iter_mut().enumerate() {
                    row[i - 1] -= alpha[k];
                }
                m
            })
            .collect();

        // Root strings, by height, in simple-root coordinates.
        let mut roots: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|k| i64::from(k == i)).collect())
            .collect();
        let mut seen: HashSet<Vec<i64>> = roots.iter().cloned().collect();
        let mut layer = roots.clone();
        while !layer.is_empty() {
            let mut next = Vec::new();
            for beta in &layer {
                for i in 0..n {
                    let pairing: i64 = (0..n).map(|k| cartan.matrix[i][k] * beta[k]).sum();
                    let mut p = 0;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if seen.contains(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    if p - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if seen.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            roots.extend(next.iter().cloned());
            layer = next;
        }
        let positive: Vec<Vec<i64>> = roots.iter().map(|c| mat_vec(&cartan.matrix, c)).collect();
        let positive_set = positive.iter().cloned().collect();
        WeylGroup { cartan, reflections, positive, positive_set }
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    pub fn ty(&self) -> LieType {
        self.cartan.ty
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement { ty: self.ty(), word: Vec::new(), matrix: identity(self.rank()) }
    }

    /// The element named by `word` (not necessarily reduced; the stored
    /// word is re-reduced).
    pub fn element(&self, word: &[usize]) -> Result<WeylElement> {
        let mut m = identity(self.rank());
        for &i in word {
            self.cartan.ty.check_node(i)?;
            m = mat_mul(&m, &self.reflections[i - 1]);
        }
        Ok(self.element_of(m))
    }

    /// Canonical reduced word for an action matrix: descend `w rho` to `rho`.
    fn element_of(&self, matrix: Matrix) -> WeylElement {
        let n = self.rank();
        let mut mu = mat_vec(&matrix, &vec![1; n]);
        let mut word = Vec::new();
        while let Some(i) = mu.iter().position(|&x| x < 0) {
            let alpha = self.cartan.simple_root(i + 1);
            let c = mu[i];
            for (k, x) in mu.iter_mut().enumerate() {
                *x -= c * alpha[k];
            }
            word.push(i + 1);
        }
        WeylElement { ty: self.ty(), word, matrix }
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversions(&self, matrix: &[Vec<i64>]) -> usize {
        let m: Matrix = matrix.to_vec();
        self.positive
            .iter()
            .filter(|beta| {
                let img: Vec<i64> = mat_vec(&m, beta).iter().map(|x| -x).collect();
                self.positive_set.contains(&img)
            })
            .count()
    }

    pub fn is_reduced(&self, word: &[usize]) -> Result<bool> {
        let w = self.element(word)?;
        Ok(w.length() == word.len())
    }

    pub fn compose(&self, w1: &WeylElement, w2: &WeylElement) -> Result<WeylElement> {
        if w1.ty != self.ty() || w2.ty != self.ty() {
            return Err(Error::TypeMismatch(w1.ty.to_string(), w2.ty.to_string()));
        }
        Ok(self.element_of(mat_mul(&w1.matrix, &w2.matrix)))
    }

    pub fn reflect(&self, i: usize, lambda: &Weight) -> Result<Weight> {
        self.cartan.ty.check_node(i)?;
        self.check_rank(lambda)?;
        let alpha = self.cartan.simple_root(i);
        let c = lambda.0[i - 1];
        Ok(Weight(lambda.0.iter().zip(&alpha).map(|(x, a)| x - c * a).collect()))
    }

    fn check_rank(&self, lambda: &Weight) -> Result<()> {
        if lambda.rank() == self.rank() {
            Ok(())
        } else {
            Err(Error::RankMismatch(lambda.rank(), self.rank()))
        }
    }

    pub fn longest_element(&self) -> WeylElement {
        let n = self.rank();
        let mut mu = vec![1i64; n];
        let mut pushed = Vec::new();
        while let Some(i) = mu.iter().position(|&x| x > 0) {
            let alpha = self.cartan.simple_root(i + 1);
            let c = mu[i];
            for (k, x) in mu.iter_mut().enumerate() {
                *x -= c * alpha[k];
            }
            pushed.push(i + 1);
        }
        pushed.reverse();
        let w = self.element(&pushed).expect("nodes in range");
        WeylElement { word: pushed, ..w }
    }

    /// The minimal-length coset representatives `W_lambda` paired with
    /// `w lambda`, breadth-first by length, ties broken by word.
    pub fn weight_orbit(&self, lambda: &Weight) -> Result<Vec<(WeylElement, Weight)>> {
        self.check_rank(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant { what: "weight", value: lambda.to_string() });
        }
        let mut visited: HashSet<Weight> = HashSet::from([lambda.clone()]);
        let mut out = vec![(self.identity(), lambda.clone())];
        let mut level = vec![out[0].clone()];
        while !level.is_empty() {
            let mut next: Vec<(WeylElement, Weight)> = Vec::new();
            for (w, mu) in &level {
                for j in 1..=self.rank() {
                    let nu = self.reflect(j, mu)?;
                    if visited.contains(&nu) {
                        continue;
                    }
                    let matrix = mat_mul(&self.reflections[j - 1], &w.matrix);
                    if self.inversions(&matrix) != w.length() + 1 {
                        continue;
                    }
                    let mut word = vec![j];
                    word.extend_from_slice(&w.word);
                    visited.insert(nu.clone());
                    next.push((WeylElement { ty: self.ty(), word, matrix }, nu));
                }
            }
            next.sort_by(|a, b| a.0.word.cmp(&b.0.word));
            out.extend(next.iter().cloned());
            level = next;
        }
        Ok(out)
    }

    pub fn min_coset_reps(&self, lambda: &Weight) -> Result<Vec<WeylElement>> {
        Ok(self.weight_orbit(lambda)?.into_iter().map(|(w, _)| w).collect())
    }

    /// Whether the orbit of `omega_i` consists of weights with all
    /// coordinates in `{-1, 0, 1}`; returns the first offending weight.
    pub fn minuscule_witness(&self, i: usize) -> Result<Option<Weight>> {
        self.cartan.ty.check_node(i)?;
        let orbit = self.weight_orbit(&Weight::fundamental(self.rank(), i))?;
        Ok(orbit.into_iter().map(|(_, mu)| mu).find(|mu| mu.0.iter().any(|x| x.abs() > 1)))
    }

    /// Whole group, for small ranks (used by tests and brute-force checks).
    pub fn elements(&self) -> Vec<WeylElement> {
        let rho = Weight(vec![1; self.rank()]);
        self.min_coset_reps(&rho).expect("rho is dominant")
    }

    /// `lambda - mu` in simple-root coordinates, when integral.
    pub fn dominance_diff(&self, lambda: &Weight, mu: &Weight) -> Result<Option<RootCoords>> {
        self.check_rank(lambda)?;
        self.check_rank(mu)?;
        Ok(dominance_diff(&self.cartan, lambda, mu))
    }
}

/// Solve `A c = lambda - mu` over the rationals; `Some` when `c` is integral.
pub fn dominance_diff(cartan: &CartanData, lambda: &Weight, mu: &Weight) -> Option<RootCoords> {
    let n = cartan.rank();
    let diff = lambda.sub(mu);
    let mut m: Vec<Vec<Ratio<i64>>> = (0..n)
        .map(|i| {
            let mut row: Vec<Ratio<i64>> = cartan.matrix[i].iter().map(|&x| Ratio::from(x)).collect();
            row.push(Ratio::from(diff.0[i]));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| m[r][col] != Ratio::from(0))?;
        m.swap(col, piv);
        let p = m[col][col];
        for x in m[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && m[r][col] != Ratio::from(0) {
                let f = m[r][col];
                let pivot_row = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    let coords: Option<Vec<i64>> = m
        .iter()
        .map(|row| row[n].is_integer().then(|| row[n].to_integer()))
        .collect();
    coords.map(RootCoords)
}

/// Dominant weights `mu` with `lambda - mu` in `Q^+`, sorted by increasing
/// height of the difference.
pub fn dominant_weights_below(cartan: &CartanData, lambda: &Weight) -> Vec<(Weight, RootCoords)> {
    // Walk down from lambda by subtracting positive roots, staying dominant.
    let group = WeylGroup::get(cartan.ty);
    let mut found: BTreeSet<Weight> = BTreeSet::from([lambda.clone()]);
    let mut stack = vec![lambda.clone()];
    while let Some(mu) = stack.pop() {
        for beta in group.positive_roots() {
            let nu = Weight(mu.0.iter().zip(beta).map(|(a, b)| a - b).collect());
            if nu.is_dominant() && found.insert(nu.clone()) {
                stack.push(nu);
            }
        }
    }
    let mut out: Vec<(Weight, RootCoords)> = found
        .into_iter()
        .map(|mu| {
            let c = dominance_diff(cartan, lambda, &mu).expect("difference of roots");
            (mu, c)
        })
        .collect();
    out.sort_by(|a, b| a.1.height().cmp(&b.1.height()).then(a.0.cmp(&b.0)));
    out
}
