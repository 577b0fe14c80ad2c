//! Verification suites: each check reports a left and right side rendered as
//! strings, and passes exactly when the two renderings agree.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Display;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::identities::*;
use crate::insertion::{
    dual_alpha, dual_beta, growth_insert, growth_reverse, insert_word, semistandard_insert, semistandard_reverse,
    GrowthDiagram, SignedPermutationMatrix,
};
use crate::partition::Partition;
use crate::poly::{MultiParamPoly, Var};
use crate::series::*;
use crate::tableau::{d_poly, enumerate_sdt, enumerate_ssdt, DominoTableau};
use crate::words::{Biword, BiwordKind, ColoredPermutation};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub identity: String,
    pub params: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl VerificationReport {
    pub fn new(suite: &str, identity: &str, params: &[(&str, String)], lhs: impl Display, rhs: impl Display) -> Self {
        let (lhs, rhs) = (lhs.to_string(), rhs.to_string());
        VerificationReport {
            suite: suite.into(),
            identity: identity.into(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            pass: lhs == rhs,
            lhs,
            rhs,
            elapsed_ms: None,
        }
    }

    /// `holding` of `total` instances satisfy the property.
    fn count(suite: &str, identity: &str, params: &[(&str, String)], holding: usize, total: usize) -> Self {
        Self::new(suite, identity, params, format!("{holding} hold"), format!("{total} hold"))
    }

    pub fn params_string(&self) -> String {
        self.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Insertion,
    Semistandard,
    Dual,
    Sym,
    Sign,
    Counting,
    Series,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] =
        [Suite::Insertion, Suite::Semistandard, Suite::Dual, Suite::Sym, Suite::Sign, Suite::Counting, Suite::Series];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Insertion => "insertion",
            Suite::Semistandard => "semistandard",
            Suite::Dual => "dual",
            Suite::Sym => "sym",
            Suite::Sign => "sign",
            Suite::Counting => "counting",
            Suite::Series => "series",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse { position: 0, message: format!("unknown suite `{s}`") })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Largest n for colored permutations and involutions.
    pub max_n: usize,
    pub cores: Vec<usize>,
    /// Largest size for sign-imbalance and SDT statistics.
    pub max_size: usize,
    pub vars: usize,
    pub degree: usize,
    pub biword_len: usize,
    pub biword_values: u32,
    pub dual_len: usize,
    pub timings: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_n: 4,
            cores: vec![0, 1, 2],
            max_size: 8,
            vars: 2,
            degree: 4,
            biword_len: 4,
            biword_values: 2,
            dual_len: 3,
            timings: false,
        }
    }
}

fn nr(n: usize, r: usize) -> Vec<(&'static str, String)> {
    vec![("n", n.to_string()), ("r", r.to_string())]
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn key(d: &DominoTableau) -> String {
    serde_json::to_string(d).expect("tableaux serialize")
}

fn trim(mut w: Vec<usize>) -> Vec<usize> {
    while w.last() == Some(&0) {
        w.pop();
    }
    w
}

// ---- standard insertion ----

pub fn standard_bijection(n: usize, r: usize) -> Vec<VerificationReport> {
    let all = ColoredPermutation::all(n);
    let pairs: Vec<_> = all.par_iter().map(|pi| growth_insert(pi, r)).collect();
    let core = Partition::staircase(r);
    let shapes: BTreeSet<Partition> = Partition::with_core(r, n).into_iter().collect();
    let valid = pairs
        .iter()
        .filter(|(p, q)| {
            p.is_standard() && q.is_standard() && p.shape() == q.shape() && p.core() == &core && shapes.contains(p.shape())
        })
        .count();
    let images: BTreeSet<(String, String)> = pairs.iter().map(|(p, q)| (key(p), key(q))).collect();
    let targets: usize = shapes.iter().map(|l| enumerate_sdt(l).len().pow(2)).sum();
    let reversed = all.par_iter().zip(&pairs).filter(|(pi, (p, q))| growth_reverse(p, q).as_ref() == Ok(*pi)).count();
    let params = nr(n, r);
    vec![
        VerificationReport::count("insertion", "lands in equal-shape SDT pairs", &params, valid, all.len()),
        VerificationReport::new("insertion", "injective", &params, images.len(), (1usize << n) * factorial(n)),
        VerificationReport::new("insertion", "surjective onto SDT pairs", &params, images.len(), targets),
        VerificationReport::count("insertion", "growth_reverse inverts", &params, reversed, all.len()),
    ]
}

pub fn bumping_matches_growth(n: usize, r: usize) -> Vec<VerificationReport> {
    let all = ColoredPermutation::all(n);
    let agree = all.par_iter().filter(|pi| insert_word(pi.word(), r).ok() == Some(growth_insert(pi, r))).count();
    vec![VerificationReport::count("insertion", "bumping equals growth", &nr(n, r), agree, all.len())]
}

pub fn color_to_spin(n: usize, r: usize) -> Vec<VerificationReport> {
    let all = ColoredPermutation::all(n);
    let (mut tc_ok, mut squares_ok) = (0, 0);
    for pi in &all {
        let g = GrowthDiagram::forward(&SignedPermutationMatrix::from_permutation(pi.clone()), r)
            .expect("local rules apply");
        let (p, q) = (g.p_tableau(), g.q_tableau());
        tc_ok += (p.v() + q.v() == 2 * pi.total_color()) as usize;
        squares_ok += g.spin_defects().iter().filter(|&&(_, d)| d == 0).count();
    }
    let params = nr(n, r);
    vec![
        VerificationReport::count("insertion", "total color equals spin", &params, tc_ok, all.len()),
        VerificationReport::count("insertion", "per-square spin ledger", &params, squares_ok, all.len() * n * n),
    ]
}

/// Ascents of π (and of π⁻¹) against relative positions of consecutive dominoes of Q (and of P).
pub fn ascent_lemmas(n: usize, r: usize) -> Vec<VerificationReport> {
    let all = ColoredPermutation::all(n);
    let check = |word: &ColoredPermutation, t: &DominoTableau| {
        (1..n)
            .filter(|&i| {
                let (a, b) = (word.word()[i - 1].neg(), word.word()[i].neg());
                let (d0, d1) = (t.get(i as u32).unwrap(), t.get(i as u32 + 1).unwrap());
                (a < b) == d0.strictly_left_of(&d1) && (a > b) == d0.strictly_above(&d1)
            })
            .count()
    };
    let (mut q_ok, mut p_ok) = (0, 0);
    for pi in &all {
        let (p, q) = growth_insert(pi, r);
        q_ok += check(pi, &q);
        p_ok += check(&pi.inverse(), &p);
    }
    let total = all.len() * n.saturating_sub(1);
    let params = nr(n, r);
    vec![
        VerificationReport::count("insertion", "ascents of the word in Q", &params, q_ok, total),
        VerificationReport::count("insertion", "ascents of the inverse in P", &params, p_ok, total),
    ]
}

// ---- semistandard and dual ----

pub fn semistandard_checks(n: usize, k: u32, r: usize) -> Vec<VerificationReport> {
    let words = Biword::all(BiwordKind::Colored, n, k, false);
    let results: Vec<[bool; 6]> = words
        .par_iter()
        .map(|w| {
            let (p, q) = semistandard_insert(w, r).expect("colored biwords insert");
            let st = w.st().expect("standardizable");
            let (ps, qs) = semistandard_insert(&st, r).expect("standard biwords insert");
            let sym = semistandard_insert(&w.inv_r().expect("invertible"), r).expect("inverse inserts");
            [
                p.is_semistandard()
                    && q.is_semistandard()
                    && p.weight() == trim(w.bottom_weight())
                    && q.weight() == trim(w.top_weight()),
                p.v() + q.v() == 2 * w.total_color(),
                p.standardize().ok() == Some(ps),
                q.standardize().ok() == Some(qs),
                sym == (q.clone(), p.clone()),
                semistandard_reverse(&p, &q).as_ref() == Ok(w),
            ]
        })
        .collect();
    let images: BTreeSet<(String, String)> = words
        .iter()
        .map(|w| {
            let (p, q) = semistandard_insert(w, r).expect("colored biwords insert");
            (key(&p), key(&q))
        })
        .collect();
    let targets: usize = Partition::with_core(r, n).iter().map(|l| enumerate_ssdt(l, k as usize).len().pow(2)).sum();
    let params = vec![("n", n.to_string()), ("k", k.to_string()), ("r", r.to_string())];
    let names = [
        "weight contract",
        "total color equals spin",
        "standardization commutes (P)",
        "standardization commutes (Q)",
        "inverse swaps P and Q",
        "semistandard_reverse inverts",
    ];
    let mut out: Vec<_> = names
        .iter()
        .enumerate()
        .map(|(i, name)| {
            VerificationReport::count("semistandard", name, &params, results.iter().filter(|r| r[i]).count(), words.len())
        })
        .collect();
    out.push(VerificationReport::new("semistandard", "injective", &params, images.len(), words.len()));
    out.push(VerificationReport::new("semistandard", "surjective onto SSDT pairs", &params, images.len(), targets));
    out
}

pub fn dual_checks(n: usize, k: u32, r: usize) -> Vec<VerificationReport> {
    let duals = Biword::all(BiwordKind::DualColored, n, k, true);
    let colored = Biword::all(BiwordKind::Colored, n, k, true);
    let mut targets = BTreeSet::new();
    for lambda in Partition::with_core(r, n) {
        let rows = enumerate_ssdt(&lambda, k as usize);
        let cols: Vec<_> = enumerate_ssdt(&lambda.conjugate(), k as usize).iter().map(|d| d.conjugate()).collect();
        for p in &rows {
            for q in &cols {
                targets.insert((key(p), key(q)));
            }
        }
    }
    let params = vec![("n", n.to_string()), ("k", k.to_string()), ("r", r.to_string())];
    let mut out = Vec::new();

    let mut alpha_images = BTreeSet::new();
    let (mut in_target, mut weights, mut spin, mut duality, mut std_ok) = (0, 0, 0, 0, 0);
    for w in &duals {
        let (p, q) = dual_alpha(w, r).expect("dual colored biwords map");
        in_target += targets.contains(&(key(&p), key(&q))) as usize;
        weights += (p.weight() == trim(w.bottom_weight()) && q.weight() == trim(w.top_weight())) as usize;
        spin += (p.v() + q.v() == 2 * w.total_color()) as usize;
        let beta = dual_beta(&w.inv_d().expect("invertible"), r).expect("colored biwords map");
        duality += (beta == (q.clone(), p.clone())) as usize;
        let pi = w.std().ok().and_then(|s| s.to_permutation()).expect("standardizable");
        std_ok += ((p.standardize().ok(), q.standardize_columns().ok()) == (Some(growth_insert(&pi, r).0), Some(growth_insert(&pi, r).1)))
            as usize;
        alpha_images.insert((key(&p), key(&q)));
    }
    out.push(VerificationReport::count("dual", "alpha lands in row x column pairs", &params, in_target, duals.len()));
    out.push(VerificationReport::new("dual", "alpha injective", &params, alpha_images.len(), duals.len()));
    out.push(VerificationReport::new("dual", "alpha surjective", &params, alpha_images.len(), targets.len()));
    out.push(VerificationReport::count("dual", "alpha weights", &params, weights, duals.len()));
    out.push(VerificationReport::count("dual", "alpha total color equals spin", &params, spin, duals.len()));
    out.push(VerificationReport::count("dual", "beta of the dual inverse swaps alpha", &params, duality, duals.len()));
    out.push(VerificationReport::count("dual", "alpha commutes with standardization", &params, std_ok, duals.len()));

    let mut beta_images = BTreeSet::new();
    let (mut shaped, mut spin, mut std_ok) = (0, 0, 0);
    for w in &colored {
        let (p, q) = dual_beta(w, r).expect("colored biwords map");
        shaped += (p.is_column_semistandard() && q.is_semistandard() && p.shape() == q.shape()) as usize;
        spin += (p.v() + q.v() == 2 * w.total_color()) as usize;
        let pi = w.std().ok().and_then(|s| s.to_permutation()).expect("standardizable");
        std_ok += ((p.standardize_columns().ok(), q.standardize().ok()) == (Some(growth_insert(&pi, r).0), Some(growth_insert(&pi, r).1)))
            as usize;
        beta_images.insert((key(&q), key(&p)));
    }
    out.push(VerificationReport::count("dual", "beta lands in column x row pairs", &params, shaped, colored.len()));
    out.push(VerificationReport::new("dual", "beta injective", &params, beta_images.len(), colored.len()));
    out.push(VerificationReport::new("dual", "beta surjective", &params, beta_images.len(), targets.len()));
    out.push(VerificationReport::count("dual", "beta total color equals spin", &params, spin, colored.len()));
    out.push(VerificationReport::count("dual", "beta commutes with standardization", &params, std_ok, colored.len()));
    out
}

// ---- involutions, signs, counting ----

pub fn symmetric_growth(n: usize, r: usize) -> Vec<VerificationReport> {
    let invs = enumerate_involutions(n);
    let stats = invs.iter().filter(|pi| check_involution_shape(pi, r).map(|c| c.holds()).unwrap_or(false)).count();
    let ev = invs.iter().filter(|pi| check_involution_spin(pi, r).map(|c| c.holds()).unwrap_or(false)).count();
    let params = nr(n, r);
    let mut out = vec![
        VerificationReport::count("sym", "shape statistics from cycle type", &params, stats, invs.len()),
        VerificationReport::count("sym", "ev = d and ov = b + d", &params, ev, invs.len()),
    ];
    if r <= 1 {
        let signs = invs.iter().filter(|pi| check_involution_sign(pi, r).map(|(s, e)| s == e).unwrap_or(false)).count();
        out.push(VerificationReport::count("sym", "sign is (-1)^(barred two-cycles)", &params, signs, invs.len()));
    }
    out
}

/// Shapes of size `m` whose 2-core is δ_r for r in `cores`.
fn shapes_with_core(m: usize, cores: &[usize]) -> Vec<Partition> {
    Partition::all_of(m).into_iter().filter(|l| cores.contains(&l.core_rank())).collect()
}

pub fn sign_checks(m: usize) -> Vec<VerificationReport> {
    let params = vec![("m", m.to_string())];
    let shapes = shapes_with_core(m, &[0, 1]);
    let (mut sign_ok, mut total) = (0, 0);
    let mut sums_ok = 0;
    for lambda in &shapes {
        for d in enumerate_sdt(lambda) {
            total += 1;
            sign_ok += (d.sign().ok() == Some(if d.ev() % 2 == 0 { 1 } else { -1 })) as usize;
        }
        sums_ok += (imbalance_via_sdt(lambda).ok() == Some(imbalance(lambda))) as usize;
    }
    let big: Vec<_> = Partition::all_of(m).into_iter().filter(|l| l.core_rank() > 1).collect();
    let vanish = big.iter().filter(|l| imbalance(l) == 0).count();
    let rhs = stanley_rhs(m);
    vec![
        VerificationReport::count("sign", "sign(D) = (-1)^ev(D)", &params, sign_ok, total),
        VerificationReport::count("sign", "SYT imbalance equals SDT sum", &params, sums_ok, shapes.len()),
        VerificationReport::count("sign", "imbalance vanishes for larger cores", &params, vanish, big.len()),
        VerificationReport::new("sign", "imbalance generating polynomial", &params, stanley_sum(m), &rhs),
        VerificationReport::new("sign", "hook part of the generating polynomial", &params, stanley_hook_sum(m), &rhs),
        VerificationReport::new("sign", "signed SYT count", &params, signed_syt_sum(m), 1i64 << (m / 2)),
    ]
}

/// ov(D) − ev(D) against (o(λ) − o(λ̃))/2 over SDT with n dominoes and core δ_r.
pub fn ovev(n: usize, r: usize) -> VerificationReport {
    let core_o = Partition::staircase(r).stats().o as i64;
    let (mut ok, mut total) = (0, 0);
    for lambda in Partition::with_core(r, n) {
        let target = (lambda.stats().o as i64 - core_o) / 2;
        for d in enumerate_sdt(&lambda) {
            total += 1;
            ok += (d.ov() as i64 - d.ev() as i64 == target) as usize;
        }
    }
    VerificationReport::count("counting", "ov - ev from odd rows", &nr(n, r), ok, total)
}

pub fn spin_square_sum(n: usize, r: usize) -> VerificationReport {
    let (lhs, rhs) = sum_d_squared(n, r);
    VerificationReport::new("counting", "sum of squared spin polynomials", &nr(n, r), lhs, rhs)
}

pub fn involution_polynomial(n: usize, cores: &[usize]) -> Vec<VerificationReport> {
    let rec = h_poly_recursive(n);
    let params = vec![("n", n.to_string())];
    let mut out = vec![VerificationReport::new("counting", "recursion equals EGF", &params, &rec, h_poly_egf(n))];
    for &r in cores {
        let p = nr(n, r);
        out.push(VerificationReport::new("counting", "shape sum equals recursion", &p, h_poly_by_shapes(n, r), &rec));
        out.push(VerificationReport::new("counting", "involution sum equals recursion", &p, h_poly_by_involutions(n, r), &rec));
    }
    out
}

pub fn classical(n: usize) -> Vec<VerificationReport> {
    let c = classical_oracles(n);
    let params = vec![("n", n.to_string())];
    vec![
        VerificationReport::new("counting", "sum of squared SYT counts", &params, c.sum_fsq, c.factorial),
        VerificationReport::new("counting", "sum of SYT counts", &params, c.sum_f, c.involutions),
    ]
}

pub fn spin_polynomial_examples() -> Vec<VerificationReport> {
    let p = |s: &str| s.parse::<Partition>().expect("literal shape");
    vec![
        VerificationReport::new("counting", "d of (3,1,1)", &[], d_poly(&p("3,1,1")), "2q^{1/2}"),
        VerificationReport::new("counting", "d of (2,2)", &[], d_poly(&p("2,2")), "1 + q"),
    ]
}

// ---- series ----

fn series_report(identity: &str, params: &[(&str, String)], lhs: &TruncatedSymSeries, rhs: &TruncatedSymSeries) -> VerificationReport {
    VerificationReport::new("series", identity, params, lhs, rhs)
}

pub fn domino_function_examples() -> Vec<VerificationReport> {
    let c = SeriesConfig::x_only(2, 2);
    let p = |s: &str| s.parse::<Partition>().expect("literal shape");
    let q = MultiParamPoly::monomial(&[(Var::S, 2)], 1);
    let half = MultiParamPoly::monomial(&[(Var::S, 1)], 1);
    let (s2, s11) = (schur(&p("2"), c), schur(&p("1,1"), c));
    let g22 = s2.scale(&q).add(&s11).expect("same config");
    let g311 = s2.add(&s11).expect("same config").scale(&half);
    vec![
        series_report("G of (2,2)", &[("k", "2".into())], &g_function(&p("2,2"), c), &g22),
        series_report("G of (3,1,1)", &[("k", "2".into())], &g_function(&p("3,1,1"), c), &g311),
    ]
}

fn rkn(r: usize, k: usize, n: usize) -> Vec<(&'static str, String)> {
    vec![("r", r.to_string()), ("k", k.to_string()), ("N", n.to_string())]
}

pub fn cauchy(r: usize, k: usize, n: usize) -> Vec<VerificationReport> {
    let params = rkn(r, k, n);
    vec![
        series_report("Cauchy", &params, &cauchy_sum(r, k, n), &cauchy_product(k, n)),
        series_report("dual Cauchy", &params, &dual_cauchy_sum(r, k, n), &dual_cauchy_product(k, n)),
    ]
}

pub fn series_product(r: usize, k: usize, n: usize) -> VerificationReport {
    series_report("S equals its product", &rkn(r, k, n), &series_s(r, k, n), &series_s_product(k, n))
}

/// S computed from each core in `cores` against S from the first.
pub fn series_core_independence(cores: &[usize], k: usize, n: usize) -> Vec<VerificationReport> {
    let Some((&first, rest)) = cores.split_first() else { return Vec::new() };
    let base = series_s(first, k, n);
    rest.iter()
        .map(|&r| VerificationReport::new("series", "S independent of the core", &rkn(r, k, n), series_s(r, k, n), &base))
        .collect()
}

pub fn specializations(k: usize, n: usize) -> Vec<VerificationReport> {
    let params = vec![("k", k.to_string()), ("N", n.to_string())];
    let all_ones = [(Var::A, 1), (Var::B, 1), (Var::C, 1), (Var::S, 1)];
    let s = series_s(0, k, n);
    let config = SeriesConfig::x_only(k, n);
    let mut square_factors = Vec::new();
    for _ in 0..2 {
        for i in 0..k {
            square_factors.push(Factor::minus(MultiParamPoly::one(), exps(&config, &[i], &[])).inverted());
            for j in i + 1..k {
                square_factors.push(Factor::minus(MultiParamPoly::one(), exps(&config, &[i, j], &[])).inverted());
            }
        }
    }
    let square = expand_product(&square_factors, config).expect("well-formed factors");
    vec![
        series_report("all parameters one: S", &params, &s.specialize(&all_ones), &schur_sum_squared(k, n)),
        series_report("all parameters one: product", &params, &schur_sum_squared(k, n), &square),
        series_report("q = 0: S", &params, &s.specialize(&[(Var::S, 0)]), &littlewood_sum(k, n)),
        series_report("q = 0: product", &params, &littlewood_sum(k, n), &littlewood_product(k, n)),
        series_report("a = 0, b = c = 1: S", &params, &s.specialize(&[(Var::A, 0), (Var::B, 1), (Var::C, 1)]), &h_sum(k, n)),
        series_report("a = 0, b = c = 1: product", &params, &h_sum(k, n), &h_product(k, n, true)),
        series_report(
            "a = b = 0, c = 1: S",
            &params,
            &s.specialize(&[(Var::A, 0), (Var::B, 0), (Var::C, 1)]),
            &h_paired_sum(k, n),
        ),
        series_report("a = b = 0, c = 1: product", &params, &h_paired_sum(k, n), &h_product(k, n, false)),
    ]
}

// ---- suites ----

fn timed(opts: &VerifyOptions, f: impl FnOnce() -> Vec<VerificationReport>) -> Vec<VerificationReport> {
    let start = Instant::now();
    let mut out = f();
    if opts.timings {
        let ms = start.elapsed().as_secs_f64() * 1000.0 / out.len().max(1) as f64;
        for r in &mut out {
            r.elapsed_ms = Some(ms);
        }
    }
    out
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Vec<VerificationReport> {
    let grid = |f: fn(usize, usize) -> Vec<VerificationReport>| {
        let cases: Vec<(usize, usize)> =
            (0..=opts.max_n).flat_map(|n| opts.cores.iter().map(move |&r| (n, r))).collect();
        cases.into_par_iter().flat_map_iter(|(n, r)| f(n, r)).collect::<Vec<_>>()
    };
    match suite {
        Suite::All => Suite::EACH.iter().flat_map(|&s| run_suite(s, opts)).collect(),
        Suite::Insertion => timed(opts, || {
            let mut out = grid(standard_bijection);
            out.extend(grid(bumping_matches_growth));
            out.extend(grid(color_to_spin));
            out.extend(grid(ascent_lemmas));
            out
        }),
        Suite::Semistandard => timed(opts, || {
            (0..=opts.biword_len)
                .flat_map(|n| opts.cores.iter().flat_map(move |&r| semistandard_checks(n, opts.biword_values, r)))
                .collect()
        }),
        Suite::Dual => timed(opts, || {
            (0..=opts.dual_len)
                .flat_map(|n| opts.cores.iter().flat_map(move |&r| dual_checks(n, opts.biword_values, r)))
                .collect()
        }),
        Suite::Sym => timed(opts, || grid(symmetric_growth)),
        Suite::Sign => timed(opts, || (1..=opts.max_size).into_par_iter().flat_map_iter(sign_checks).collect()),
        Suite::Counting => timed(opts, || {
            let mut out: Vec<_> = (0..=opts.max_size / 2)
                .flat_map(|n| opts.cores.iter().map(move |&r| ovev(n, r)))
                .collect();
            out.extend((0..=opts.max_n).flat_map(|n| opts.cores.iter().map(move |&r| spin_square_sum(n, r))));
            out.extend((0..=opts.max_n).flat_map(|n| involution_polynomial(n, &opts.cores)));
            out.extend((0..=opts.max_size).flat_map(classical));
            out.extend(spin_polynomial_examples());
            out
        }),
        Suite::Series => timed(opts, || {
            let mut out = domino_function_examples();
            out.extend(opts.cores.par_iter().flat_map_iter(|&r| cauchy(r, opts.vars, opts.degree)).collect::<Vec<_>>());
            out.extend(opts.cores.par_iter().map(|&r| series_product(r, opts.vars, opts.degree)).collect::<Vec<_>>());
            out.extend(series_core_independence(&opts.cores, opts.vars, opts.degree));
            out.extend(specializations(opts.vars, opts.degree));
            out
        }),
    }
}
