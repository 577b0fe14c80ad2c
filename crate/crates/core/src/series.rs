//! Truncated power series in x₁..x_k (and optionally y₁..y_k') with polynomial
//! coefficients in s = q^{1/2}, a, b, c; domino functions and product identities.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::identities::shape_weight;
use crate::partition::Partition;
use crate::poly::{MultiParamPoly, Var};
use crate::tableau::enumerate_ssdt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SeriesConfig {
    pub x_vars: usize,
    pub y_vars: usize,
    /// Monomials of total degree above this are discarded.
    pub max_degree: usize,
}

impl SeriesConfig {
    pub fn x_only(x_vars: usize, max_degree: usize) -> Self {
        SeriesConfig { x_vars, y_vars: 0, max_degree }
    }

    pub fn width(&self) -> usize {
        self.x_vars + self.y_vars
    }
}

pub type Monomial = Vec<u16>;

#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSymSeries {
    config: SeriesConfig,
    terms: BTreeMap<Monomial, MultiParamPoly>,
}

fn degree(m: &[u16]) -> usize {
    m.iter().map(|&e| e as usize).sum()
}

impl TruncatedSymSeries {
    pub fn zero(config: SeriesConfig) -> Self {
        TruncatedSymSeries { config, terms: BTreeMap::new() }
    }

    pub fn one(config: SeriesConfig) -> Self {
        Self::monomial(config, vec![0; config.width()], MultiParamPoly::one())
    }

    /// `coeff · x^exps`; dropped if the degree exceeds the bound.
    pub fn monomial(config: SeriesConfig, exps: Monomial, coeff: MultiParamPoly) -> Self {
        let mut s = Self::zero(config);
        s.add_term(exps, &coeff);
        s
    }

    pub fn config(&self) -> SeriesConfig {
        self.config
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, MultiParamPoly> {
        &self.terms
    }

    pub fn coefficient(&self, exps: &[u16]) -> MultiParamPoly {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, exps: Monomial, coeff: &MultiParamPoly) {
        assert_eq!(exps.len(), self.config.width(), "monomial width");
        if degree(&exps) > self.config.max_degree || coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps.clone()).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.config == other.config {
            Ok(())
        } else {
            Err(Error::SeriesConfig(format!("{:?} vs {:?}", self.config, other.config)))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&MultiParamPoly::constant(-1)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.config);
        for (m1, c1) in &self.terms {
            let d1 = degree(m1);
            for (m2, c2) in &other.terms {
                if d1 + degree(m2) > self.config.max_degree {
                    continue;
                }
                let m = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                out.add_term(m, &(c1 * c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &MultiParamPoly) -> Self {
        self.map_coefficients(|p| p * c)
    }

    pub fn map_coefficients(&self, f: impl Fn(&MultiParamPoly) -> MultiParamPoly) -> Self {
        let mut out = Self::zero(self.config);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &f(c));
        }
        out
    }

    /// Substitute integers for some of the parameters.
    pub fn specialize(&self, values: &[(Var, i64)]) -> Self {
        self.map_coefficients(|c| c.eval_all(values))
    }

    /// Drop every monomial of degree above `n`.
    pub fn truncate(&self, n: usize) -> Self {
        let config = SeriesConfig { max_degree: n.min(self.config.max_degree), ..self.config };
        let mut out = Self::zero(config);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    /// Invariance under every permutation of the x-variables and of the y-variables.
    pub fn is_symmetric(&self) -> bool {
        let (kx, ky) = (self.config.x_vars, self.config.y_vars);
        self.terms.iter().all(|(m, c)| {
            (0..kx).permutations(kx).all(|px| {
                (0..ky).permutations(ky).all(|py| {
                    let image: Monomial = px.iter().map(|&i| m[i]).chain(py.iter().map(|&j| m[kx + j])).collect();
                    self.terms.get(&image) == Some(c)
                })
            })
        })
    }

    pub fn sum<'a>(config: SeriesConfig, items: impl IntoIterator<Item = &'a TruncatedSymSeries>) -> Result<Self> {
        items.into_iter().try_fold(Self::zero(config), |acc, s| acc.add(s))
    }
}

fn monomial_name(config: &SeriesConfig, m: &[u16]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let name = if i < config.x_vars { format!("x{}", i + 1) } else { format!("y{}", i - config.x_vars + 1) };
        parts.push(if e == 1 { name } else { format!("{name}^{e}") });
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for TruncatedSymSeries {
    /// One `coefficient · monomial` line per term, by degree then exponent vector.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<&Monomial> = self.terms.keys().collect();
        keys.sort_by_key(|m| (degree(m), std::cmp::Reverse((*m).clone())));
        if keys.is_empty() {
            return writeln!(f, "0");
        }
        for m in keys {
            writeln!(f, "({}) · {}", self.terms[m], monomial_name(&self.config, m))?;
        }
        Ok(())
    }
}

impl fmt::Debug for TruncatedSymSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for TruncatedSymSeries {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            monomial: Monomial,
            coefficient: String,
        }
        #[derive(Serialize)]
        struct Repr {
            config: SeriesConfig,
            terms: Vec<Term>,
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| Term { monomial: m.clone(), coefficient: c.to_string() })
            .collect();
        Repr { config: self.config, terms }.serialize(serializer)
    }
}

/// A factor `(1 + sign·coeff·monomial)` or its reciprocal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub coeff: MultiParamPoly,
    pub exps: Monomial,
    pub sign: i8,
    pub reciprocal: bool,
}

impl Factor {
    pub fn plus(coeff: MultiParamPoly, exps: Monomial) -> Self {
        Factor { coeff, exps, sign: 1, reciprocal: false }
    }

    pub fn minus(coeff: MultiParamPoly, exps: Monomial) -> Self {
        Factor { coeff, exps, sign: -1, reciprocal: false }
    }

    pub fn inverted(self) -> Self {
        Factor { reciprocal: !self.reciprocal, ..self }
    }

    fn expand(&self, config: SeriesConfig) -> Result<TruncatedSymSeries> {
        if self.exps.len() != config.width() || degree(&self.exps) == 0 || !matches!(self.sign, 1 | -1) {
            return Err(Error::SeriesConfig(format!("malformed factor {self:?}")));
        }
        let term = self.coeff.clone() * MultiParamPoly::constant(self.sign as i64);
        if !self.reciprocal {
            let one = TruncatedSymSeries::one(config);
            return one.add(&TruncatedSymSeries::monomial(config, self.exps.clone(), term));
        }
        // 1 / (1 + t) = Σ (−t)^k
        let neg = term * MultiParamPoly::constant(-1);
        let mut out = TruncatedSymSeries::zero(config);
        let mut power = MultiParamPoly::one();
        let mut k = 0u16;
        while degree(&self.exps) * k as usize <= config.max_degree {
            let exps = self.exps.iter().map(|&e| e * k).collect();
            out.add_term(exps, &power);
            power = &power * &neg;
            k += 1;
        }
        Ok(out)
    }
}

pub fn expand_product(factors: &[Factor], config: SeriesConfig) -> Result<TruncatedSymSeries> {
    factors.iter().try_fold(TruncatedSymSeries::one(config), |acc, f| acc.mul(&f.expand(config)?))
}

/// Exponent vector with `1` at each listed x-index and y-index.
pub fn exps(config: &SeriesConfig, xs: &[usize], ys: &[usize]) -> Monomial {
    let mut m = vec![0; config.width()];
    for &i in xs {
        m[i] += 1;
    }
    for &j in ys {
        m[config.x_vars + j] += 1;
    }
    m
}

fn s_pow(k: u16) -> MultiParamPoly {
    MultiParamPoly::monomial(&[(Var::S, k)], 1)
}

/// Schur polynomial s_λ(x₁..x_k) via semistandard Young tableaux.
pub fn schur(lambda: &Partition, config: SeriesConfig) -> TruncatedSymSeries {
    let mut out = TruncatedSymSeries::zero(config);
    if lambda.size() > config.max_degree {
        return out;
    }
    let cells: Vec<_> = lambda.cells().collect();
    let k = config.x_vars as u16;
    fn fill(
        cells: &[crate::partition::Cell],
        idx: usize,
        k: u16,
        filled: &mut BTreeMap<crate::partition::Cell, u16>,
        out: &mut Vec<Vec<u16>>,
    ) {
        if idx == cells.len() {
            let mut w = vec![0u16; k as usize];
            for &v in filled.values() {
                w[v as usize - 1] += 1;
            }
            out.push(w);
            return;
        }
        let c = cells[idx];
        let left = if c.col > 1 { filled[&crate::partition::Cell::new(c.row, c.col - 1)] } else { 1 };
        let above = if c.row > 1 { filled[&crate::partition::Cell::new(c.row - 1, c.col)] + 1 } else { 1 };
        for v in left.max(above)..=k {
            filled.insert(c, v);
            fill(cells, idx + 1, k, filled, out);
        }
        filled.remove(&c);
    }
    let mut weights = Vec::new();
    fill(&cells, 0, k, &mut BTreeMap::new(), &mut weights);
    for w in weights {
        let mut m = w;
        m.resize(config.width(), 0);
        out.add_term(m, &MultiParamPoly::one());
    }
    out
}

/// G_λ(x₁..x_k; q) = Σ s^{v(D)} x^{wt(D)} over semistandard domino tableaux of shape λ.
pub fn g_function(lambda: &Partition, config: SeriesConfig) -> TruncatedSymSeries {
    g_function_with(lambda, config, 0, |d| s_pow(d.v() as u16))
}

/// G_λ in the y-variables of a two-alphabet configuration, weighting each tableau by `weight`.
fn g_function_with(
    lambda: &Partition,
    config: SeriesConfig,
    offset: usize,
    weight: impl Fn(&crate::tableau::DominoTableau) -> MultiParamPoly,
) -> TruncatedSymSeries {
    let mut out = TruncatedSymSeries::zero(config);
    let n = (lambda.size() - lambda.two_core().size()) / 2;
    let k = if offset == 0 { config.x_vars } else { config.y_vars };
    if n > config.max_degree {
        return out;
    }
    for d in enumerate_ssdt(lambda, k) {
        let mut m = vec![0u16; config.width()];
        for (i, &c) in d.weight().iter().enumerate() {
            m[offset + i] = c as u16;
        }
        out.add_term(m, &weight(&d));
    }
    out
}

/// Shapes of P_r(n) for n ≤ max_n.
fn shapes_up_to(r: usize, max_n: usize) -> impl Iterator<Item = Partition> {
    (0..=max_n).flat_map(move |n| Partition::with_core(r, n))
}

/// Σ_{λ ∈ P_r} G_λ(X) G_λ(Y), through total degree 2N.
pub fn cauchy_sum(r: usize, k: usize, n: usize) -> TruncatedSymSeries {
    let config = SeriesConfig { x_vars: k, y_vars: k, max_degree: 2 * n };
    let mut out = TruncatedSymSeries::zero(config);
    for lambda in shapes_up_to(r, n) {
        let gx = g_function_with(&lambda, config, 0, |d| s_pow(d.v() as u16));
        let gy = g_function_with(&lambda, config, k, |d| s_pow(d.v() as u16));
        out = out.add(&gx.mul(&gy).expect("same config")).expect("same config");
    }
    out
}

/// Π_{i,j} 1 / ((1 − x_i y_j)(1 − q x_i y_j)).
pub fn cauchy_product(k: usize, n: usize) -> TruncatedSymSeries {
    let config = SeriesConfig { x_vars: k, y_vars: k, max_degree: 2 * n };
    let mut factors = Vec::new();
    for i in 0..k {
        for j in 0..k {
            let m = exps(&config, &[i], &[j]);
            factors.push(Factor::minus(MultiParamPoly::one(), m.clone()).inverted());
            factors.push(Factor::minus(s_pow(2), m).inverted());
        }
    }
    expand_product(&factors, config).expect("well-formed factors")
}

/// Σ_{λ ∈ P_r} q^{n/2} G_λ(X; q) G_{λ'}(Y; q^{-1}), n the number of dominoes, written as
/// Σ s^{v(D)} s^{n − v(D')} over pairs (D, D') of shapes (λ, λ').
pub fn dual_cauchy_sum(r: usize, k: usize, n: usize) -> TruncatedSymSeries {
    let config = SeriesConfig { x_vars: k, y_vars: k, max_degree: 2 * n };
    let mut out = TruncatedSymSeries::zero(config);
    for lambda in shapes_up_to(r, n) {
        let m = (lambda.size() - lambda.two_core().size()) / 2;
        let gx = g_function_with(&lambda, config, 0, |d| s_pow(d.v() as u16));
        let gy = g_function_with(&lambda.conjugate(), config, k, |d| s_pow((m - d.v()) as u16));
        out = out.add(&gx.mul(&gy).expect("same config")).expect("same config");
    }
    out
}

/// Π_{i,j} (1 + x_i y_j)(1 + q x_i y_j).
pub fn dual_cauchy_product(k: usize, n: usize) -> TruncatedSymSeries {
    let config = SeriesConfig { x_vars: k, y_vars: k, max_degree: 2 * n };
    let mut factors = Vec::new();
    for i in 0..k {
        for j in 0..k {
            let m = exps(&config, &[i], &[j]);
            factors.push(Factor::plus(MultiParamPoly::one(), m.clone()));
            factors.push(Factor::plus(s_pow(2), m));
        }
    }
    expand_product(&factors, config).expect("well-formed factors")
}

/// S(X; a, b, c, s) = Σ_{λ ∈ P_r} a^{…} b^{…} c^{…} G_λ(X; q) through degree N.
pub fn series_s(r: usize, k: usize, n: usize) -> TruncatedSymSeries {
    let config = SeriesConfig::x_only(k, n);
    let mut out = TruncatedSymSeries::zero(config);
    for lambda in shapes_up_to(r, n) {
        out = out.add(&g_function(&lambda, config).scale(&shape_weight(&lambda, r))).expect("same config");
    }
    out
}

fn param(v: Var) -> MultiParamPoly {
    MultiParamPoly::var(v)
}

/// Π(1 + a s x_i) / [Π(1 − b x_i) Π(1 − c s² x_i²) Π_{i<j}(1 − c x_i x_j)(1 − c s² x_i x_j)].
pub fn series_s_product(k: usize, n: usize) -> TruncatedSymSeries {
    let config = SeriesConfig::x_only(k, n);
    let (a, b, c) = (param(Var::A), param(Var::B), param(Var::C));
    let mut factors = Vec::new();
    for i in 0..k {
        let xi = exps(&config, &[i], &[]);
        factors.push(Factor::plus(&a * &s_pow(1), xi.clone()));
        factors.push(Factor::minus(b.clone(), xi).inverted());
        factors.push(Factor::minus(&c * &s_pow(2), exps(&config, &[i, i], &[])).inverted());
        for j in i + 1..k {
            let xij = exps(&config, &[i, j], &[]);
            factors.push(Factor::minus(c.clone(), xij.clone()).inverted());
            factors.push(Factor::minus(&c * &s_pow(2), xij).inverted());
        }
    }
    expand_product(&factors, config).expect("well-formed factors")
}

/// All partitions with at most `rows` rows and size at most `n`.
fn partitions_up_to(n: usize, rows: usize) -> impl Iterator<Item = Partition> {
    (0..=n).flat_map(move |m| Partition::all_of(m).into_iter().filter(move |p| p.len() <= rows))
}

fn doubled(mu: &Partition) -> Partition {
    Partition::new(mu.parts().iter().map(|p| 2 * p).collect()).expect("doubling keeps order")
}

fn paired(mu: &Partition) -> Partition {
    Partition::new(mu.parts().iter().flat_map(|&p| [p, p]).collect()).expect("repeating keeps order")
}

/// (Σ_{|λ| ≤ N} s_λ)², the a = b = c = s = 1 specialisation.
pub fn schur_sum_squared(k: usize, n: usize) -> TruncatedSymSeries {
    let config = SeriesConfig::x_only(k, n);
    let all: Vec<_> = partitions_up_to(n, k).map(|l| schur(&l, config)).collect();
    let sum = TruncatedSymSeries::sum(config, &all).expect("same config");
    sum.mul(&sum).expect("same config")
}

/// Σ_λ b^{o(λ')} c^{v(λ')} s_λ, the s = 0 specialisation.
pub fn littlewood_sum(k: usize, n: usize) -> TruncatedSymSeries {
    let config = SeriesConfig::x_only(k, n);
    let mut out = TruncatedSymSeries::zero(config);
    for lambda in partitions_up_to(n, k) {
        let st = lambda.conjugate().stats();
        let w = MultiParamPoly::monomial(&[(Var::B, st.o as u16), (Var::C, st.v as u16)], 1);
        out = out.add(&schur(&lambda, config).scale(&w)).expect("same config");
    }
    out
}

/// 1 / (Π(1 − b x_i) Π_{i<j}(1 − c x_i x_j)).
pub fn littlewood_product(k: usize, n: usize) -> TruncatedSymSeries {
    let config = SeriesConfig::x_only(k, n);
    let mut factors = Vec::new();
    for i in 0..k {
        factors.push(Factor::minus(param(Var::B), exps(&config, &[i], &[])).inverted());
        for j in i + 1..k {
            factors.push(Factor::minus(param(Var::C), exps(&config, &[i, j], &[])).inverted());
        }
    }
    expand_product(&factors, config).expect("well-formed factors")
}

/// Σ_μ G_{2μ}, the a = 0, b = c = 1 specialisation.
pub fn h_sum(k: usize, n: usize) -> TruncatedSymSeries {
    let config = SeriesConfig::x_only(k, n);
    let all: Vec<_> = partitions_up_to(n, usize::MAX).map(|mu| g_function(&doubled(&mu), config)).collect();
    TruncatedSymSeries::sum(config, &all).expect("same config")
}

/// Σ_μ G_{2(μ ∨ μ)}, the a = b = 0, c = 1 specialisation.
pub fn h_paired_sum(k: usize, n: usize) -> TruncatedSymSeries {
    let config = SeriesConfig::x_only(k, n);
    let all: Vec<_> =
        partitions_up_to(n / 2, usize::MAX).map(|mu| g_function(&doubled(&paired(&mu)), config)).collect();
    TruncatedSymSeries::sum(config, &all).expect("same config")
}

/// 1 / (Π(1 − x_i)^{[with_linear]} Π_{i<j}(1 − x_i x_j) Π_{i≤j}(1 − q x_i x_j)).
pub fn h_product(k: usize, n: usize, with_linear: bool) -> TruncatedSymSeries {
    let config = SeriesConfig::x_only(k, n);
    let mut factors = Vec::new();
    for i in 0..k {
        if with_linear {
            factors.push(Factor::minus(MultiParamPoly::one(), exps(&config, &[i], &[])).inverted());
        }
        for j in i..k {
            let xij = exps(&config, &[i, j], &[]);
            if j > i {
                factors.push(Factor::minus(MultiParamPoly::one(), xij.clone()).inverted());
            }
            factors.push(Factor::minus(s_pow(2), xij).inverted());
        }
    }
    expand_product(&factors, config).expect("well-formed factors")
}

/// Express a symmetric series in the x-variables as a combination of Schur polynomials of the
/// same degree bound, peeling off leading monomials. Returns `None` if it is not symmetric.
pub fn schur_expand(series: &TruncatedSymSeries) -> Option<BTreeMap<Partition, MultiParamPoly>> {
    let config = series.config();
    if config.y_vars != 0 || !series.is_symmetric() {
        return None;
    }
    let mut rest = series.clone();
    let mut out = BTreeMap::new();
    while let Some((m, c)) = rest.terms().iter().rev().find(|(m, _)| m.windows(2).all(|w| w[0] >= w[1])).map(|(m, c)| (m.clone(), c.clone())) {
        let lambda = Partition::new(m.iter().map(|&e| e as usize).collect()).ok()?;
        rest = rest.sub(&schur(&lambda, config).scale(&c)).ok()?;
        out.insert(lambda, c);
    }
    rest.is_zero().then_some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn x(config: SeriesConfig, e: &[u16]) -> TruncatedSymSeries {
        TruncatedSymSeries::monomial(config, e.to_vec(), MultiParamPoly::one())
    }

    #[test]
    fn ring_plumbing() {
        let c = SeriesConfig::x_only(2, 1);
        let f = TruncatedSymSeries::one(c).add(&x(c, &[1, 0])).unwrap();
        let g = TruncatedSymSeries::one(c).add(&x(c, &[0, 1])).unwrap();
        assert_eq!(f.mul(&TruncatedSymSeries::one(c)).unwrap(), f);
        let fg = f.mul(&g).unwrap();
        assert_eq!(fg, TruncatedSymSeries::one(c).add(&x(c, &[1, 0])).unwrap().add(&x(c, &[0, 1])).unwrap());
        let other = SeriesConfig::x_only(2, 2);
        assert!(matches!(f.add(&TruncatedSymSeries::one(other)), Err(Error::SeriesConfig(_))));
    }

    #[test]
    fn geometric_series() {
        let c = SeriesConfig::x_only(1, 3);
        let g = expand_product(&[Factor::minus(MultiParamPoly::one(), vec![1]).inverted()], c).unwrap();
        assert_eq!(g.terms().len(), 4);
        assert!(g.terms().values().all(|v| *v == MultiParamPoly::one()));
        let c2 = SeriesConfig::x_only(2, 2);
        let h = expand_product(
            &[
                Factor::minus(MultiParamPoly::one(), vec![1, 0]).inverted(),
                Factor::minus(MultiParamPoly::one(), vec![0, 1]).inverted(),
            ],
            c2,
        )
        .unwrap();
        assert_eq!(h.terms().len(), 6);
        let d = SeriesConfig { x_vars: 1, y_vars: 1, max_degree: 4 };
        let e = expand_product(&[Factor::plus(MultiParamPoly::one(), vec![1, 1])], d).unwrap();
        assert_eq!(e, TruncatedSymSeries::one(d).add(&x(d, &[1, 1])).unwrap());
        assert!(expand_product(&[Factor::plus(MultiParamPoly::one(), vec![0, 0])], d).is_err());
    }

    #[test]
    fn schur_examples() {
        let c = SeriesConfig::x_only(2, 4);
        assert_eq!(schur(&p("1"), c), x(c, &[1, 0]).add(&x(c, &[0, 1])).unwrap());
        assert_eq!(schur(&p("2"), c).terms().len(), 3);
        assert_eq!(schur(&p("1,1"), c), x(c, &[1, 1]));
        assert!(schur(&p("1,1,1"), c).is_zero());
    }

    #[test]
    fn domino_functions_with_equal_quotients_differ() {
        let c = SeriesConfig::x_only(2, 2);
        let g22 = g_function(&p("2,2"), c);
        let g311 = g_function(&p("3,1,1"), c);
        let expected22 = schur(&p("2"), c).scale(&s_pow(2)).add(&schur(&p("1,1"), c)).unwrap();
        let expected311 = schur(&p("2"), c).add(&schur(&p("1,1"), c)).unwrap().scale(&s_pow(1));
        assert_eq!(g22, expected22);
        assert_eq!(g311, expected311);
        assert_ne!(g22, g311);
        assert_eq!(g_function(&Partition::staircase(2), c), TruncatedSymSeries::one(c));
    }

    #[test]
    fn domino_functions_are_symmetric() {
        let c = SeriesConfig::x_only(3, 3);
        for r in 0..=2 {
            for n in 0..=3 {
                for lambda in Partition::with_core(r, n) {
                    assert!(g_function(&lambda, c).is_symmetric(), "{lambda}");
                }
            }
        }
    }

    #[test]
    fn domino_functions_at_q_zero() {
        let c = SeriesConfig::x_only(2, 3);
        for n in 0..=3 {
            for lambda in Partition::with_core(0, n) {
                let at_zero = g_function(&lambda, c).specialize(&[(Var::S, 0)]);
                if lambda.parts().iter().all(|p| p % 2 == 0) {
                    let mu = Partition::new(lambda.parts().iter().map(|p| p / 2).collect()).unwrap();
                    assert_eq!(at_zero, schur(&mu, c), "{lambda}");
                } else {
                    assert!(at_zero.is_zero(), "{lambda}");
                }
            }
        }
    }

    #[test]
    fn one_variable_dual_cauchy_by_hand() {
        let lhs = dual_cauchy_sum(0, 1, 1);
        let c = lhs.config();
        let one_plus_q = MultiParamPoly::one() + s_pow(2);
        let expected = TruncatedSymSeries::one(c).add(&TruncatedSymSeries::monomial(c, vec![1, 1], one_plus_q)).unwrap();
        assert_eq!(lhs, expected);
    }

    #[test]
    fn row_statistics_do_not_give_the_littlewood_product() {
        let config = SeriesConfig::x_only(2, 3);
        let mut rows = TruncatedSymSeries::zero(config);
        for lambda in partitions_up_to(3, 2) {
            let st = lambda.stats();
            let w = MultiParamPoly::monomial(&[(Var::B, st.o as u16), (Var::C, st.v as u16)], 1);
            rows = rows.add(&schur(&lambda, config).scale(&w)).unwrap();
        }
        assert_ne!(rows, littlewood_product(2, 3));
        assert_eq!(littlewood_sum(2, 3), littlewood_product(2, 3));
    }

    #[test]
    fn schur_expansion_of_domino_functions() {
        let c = SeriesConfig::x_only(2, 2);
        let e = schur_expand(&g_function(&p("2,2"), c)).unwrap();
        assert_eq!(e[&p("2")], s_pow(2));
        assert_eq!(e[&p("1,1")], MultiParamPoly::one());
    }

    #[test]
    fn truncation_is_consistent() {
        let big = series_s(1, 2, 4);
        assert_eq!(big.truncate(2), series_s(1, 2, 2));
        assert_eq!(series_s_product(2, 4).truncate(3), series_s_product(2, 3));
    }
}
