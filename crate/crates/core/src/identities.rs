//! Hyperoctahedral involutions, sign-imbalance, and the enumerative identities
//! for domino tableaux.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::insertion::growth_insert;
use crate::partition::Partition;
use crate::poly::{MultiParamPoly, QHalfPoly, Var};
use crate::tableau::{d_poly, enumerate_sdt, enumerate_syt, reading_sign, syt_count, YoungTableau};
use crate::words::{ColoredPermutation, InvolutionProfile, Letter};

pub fn enumerate_involutions(n: usize) -> Vec<ColoredPermutation> {
    ColoredPermutation::involutions(n)
}

/// Shape statistics of the insertion tableau of an involution next to the
/// values predicted by its cycle type.
///
/// Order of the four entries: v(P) = 2·sp(P), (o(λ)−o(δ_r))/2,
/// (o(λ')−o(δ_r))/2, d(λ)−d(δ_r). Predicted: b + 2d, b, a, c + d.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutionShapeCheck {
    pub profile: InvolutionProfile,
    pub shape: Partition,
    pub observed: [i64; 4],
    pub predicted: [i64; 4],
}

impl InvolutionShapeCheck {
    pub fn holds(&self) -> bool {
        self.observed == self.predicted
    }
}

pub fn check_involution_shape(pi: &ColoredPermutation, r: usize) -> Result<InvolutionShapeCheck> {
    let profile = InvolutionProfile::of(pi)?;
    let (p, q) = growth_insert(pi, r);
    if p != q {
        return Err(Error::NotInvolution(format!("{pi} gives P ≠ Q")));
    }
    let (s, core) = (p.shape().stats(), Partition::staircase(r).stats());
    let half = |x: usize, y: usize| (x as i64 - y as i64) / 2;
    let observed = [p.v() as i64, half(s.o, core.o), half(s.o_conj, core.o_conj), s.d as i64 - core.d as i64];
    let InvolutionProfile { fixed: a, barred_fixed: b, two_cycles: c, barred_two_cycles: d } = profile;
    let predicted = [(b + 2 * d) as i64, b as i64, a as i64, (c + d) as i64];
    Ok(InvolutionShapeCheck { profile, shape: p.shape().clone(), observed, predicted })
}

/// (ev(P), ov(P)) against (d, b + d).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutionSpinCheck {
    pub ev: usize,
    pub ov: usize,
    pub expected_ev: usize,
    pub expected_ov: usize,
}

impl InvolutionSpinCheck {
    pub fn holds(&self) -> bool {
        self.ev == self.expected_ev && self.ov == self.expected_ov
    }
}

pub fn check_involution_spin(pi: &ColoredPermutation, r: usize) -> Result<InvolutionSpinCheck> {
    let profile = InvolutionProfile::of(pi)?;
    let (p, _) = growth_insert(pi, r);
    Ok(InvolutionSpinCheck {
        ev: p.ev(),
        ov: p.ov(),
        expected_ev: profile.barred_two_cycles,
        expected_ov: profile.barred_fixed + profile.barred_two_cycles,
    })
}

/// sign(P) for an involution against (−1)^{barred two-cycles}.
pub fn check_involution_sign(pi: &ColoredPermutation, r: usize) -> Result<(i8, i8)> {
    let profile = InvolutionProfile::of(pi)?;
    let (p, _) = growth_insert(pi, r);
    let expected = if profile.barred_two_cycles % 2 == 0 { 1 } else { -1 };
    Ok((p.sign()?, expected))
}

/// I_λ = Σ sign(T) over standard Young tableaux of shape λ.
pub fn imbalance(lambda: &Partition) -> i64 {
    enumerate_syt(lambda).iter().map(|t| reading_sign(t) as i64).sum()
}

/// Σ sign(D) over standard domino tableaux of shape λ, for core ∅ or δ_1.
pub fn imbalance_via_sdt(lambda: &Partition) -> Result<i64> {
    enumerate_sdt(lambda).iter().map(|d| d.sign().map(i64::from)).sum()
}

/// The sign-reversing involution on SYT: swap 2i−1 and 2i (r = 0) or 2i and 2i+1
/// (r = 1) for the least i where the swap keeps the tableau standard.
pub fn syt_involution(t: &YoungTableau, r: usize) -> YoungTableau {
    let n = t.iter().map(|row| row.len()).sum::<usize>() as u32;
    let find = |v: u32| {
        t.iter().enumerate().find_map(|(i, row)| row.iter().position(|&x| x == v).map(|j| (i, j))).expect("value present")
    };
    let mut lo = 1 + r as u32;
    while lo < n {
        let (a, b) = (find(lo), find(lo + 1));
        if a.0 != b.0 && a.1 != b.1 {
            let mut out = t.clone();
            out[a.0][a.1] = lo + 1;
            out[b.0][b.1] = lo;
            return out;
        }
        lo += 2;
    }
    t.clone()
}

/// x^{v(λ)} y^{v(λ')} q^{d(λ)} t^{d(λ')} I_λ summed over λ ⊢ m, optionally over hooks only.
fn stanley_terms(m: usize, hooks_only: bool) -> MultiParamPoly {
    let mut out = MultiParamPoly::zero();
    for lambda in Partition::all_of(m) {
        if hooks_only && !lambda.is_hook() {
            continue;
        }
        let (s, sc) = (lambda.stats(), lambda.conjugate().stats());
        let mono = MultiParamPoly::monomial(
            &[(Var::X, s.v as u16), (Var::Y, sc.v as u16), (Var::Q, s.d as u16), (Var::T, sc.d as u16)],
            imbalance(&lambda),
        );
        out += &mono;
    }
    out
}

pub fn stanley_sum(m: usize) -> MultiParamPoly {
    stanley_terms(m, false)
}

pub fn stanley_hook_sum(m: usize) -> MultiParamPoly {
    stanley_terms(m, true)
}

pub fn stanley_rhs(m: usize) -> MultiParamPoly {
    (MultiParamPoly::var(Var::X) + MultiParamPoly::var(Var::Y)).pow(m as u32 / 2)
}

/// Toggle the bar on the two-cycle with the smallest entry, if there is one.
pub fn toggle_first_two_cycle(pi: &ColoredPermutation) -> Option<ColoredPermutation> {
    let w = pi.word();
    let i = (0..w.len()).find(|&i| w[i].value as usize != i + 1)?;
    let j = w[i].value as usize - 1;
    let mut word = w.to_vec();
    word[i] = Letter { value: word[i].value, barred: !word[i].barred };
    word[j] = Letter { value: word[j].value, barred: !word[j].barred };
    ColoredPermutation::new(word).ok()
}

/// a^{(o(λ)−o(δ_r))/2} b^{(o(λ')−o(δ_r))/2} c^{d(λ)−d(δ_r)}.
pub fn shape_weight(lambda: &Partition, r: usize) -> MultiParamPoly {
    let (s, core) = (lambda.stats(), Partition::staircase(r).stats());
    MultiParamPoly::monomial(
        &[
            (Var::A, ((s.o - core.o) / 2) as u16),
            (Var::B, ((s.o_conj - core.o_conj) / 2) as u16),
            (Var::C, (s.d - core.d) as u16),
        ],
        1,
    )
}

/// h_r(n) as a sum over shapes of P_r(n) weighted by d^λ(q).
pub fn h_poly_by_shapes(n: usize, r: usize) -> MultiParamPoly {
    let mut out = MultiParamPoly::zero();
    for lambda in Partition::with_core(r, n) {
        out += &(&shape_weight(&lambda, r) * &d_poly(&lambda).to_poly());
    }
    out
}

/// h_r(n) as a sum over involutions, weighting each by its insertion tableau.
pub fn h_poly_by_involutions(n: usize, r: usize) -> MultiParamPoly {
    let mut out = MultiParamPoly::zero();
    for pi in enumerate_involutions(n) {
        let (p, _) = growth_insert(&pi, r);
        out += &(&shape_weight(p.shape(), r) * &MultiParamPoly::monomial(&[(Var::S, p.v() as u16)], 1));
    }
    out
}

fn fixed_weight() -> MultiParamPoly {
    MultiParamPoly::var(Var::B) + MultiParamPoly::monomial(&[(Var::A, 1), (Var::S, 1)], 1)
}

fn pair_weight() -> MultiParamPoly {
    MultiParamPoly::var(Var::C) + MultiParamPoly::monomial(&[(Var::C, 1), (Var::S, 2)], 1)
}

/// h(n) from h(n+1) = (b + a s) h(n) + n c (1 + s²) h(n−1).
pub fn h_poly_recursive(n: usize) -> MultiParamPoly {
    let (f, p) = (fixed_weight(), pair_weight());
    let mut prev = MultiParamPoly::zero();
    let mut cur = MultiParamPoly::one();
    for k in 0..n {
        let next = &(&f * &cur) + &(&(&p * &prev) * &MultiParamPoly::constant(k as i64));
        prev = cur;
        cur = next;
    }
    cur
}

/// n! times the t^n coefficient of exp((b + a s) t) · exp(c (1 + s²) t² / 2).
pub fn h_poly_egf(n: usize) -> MultiParamPoly {
    let (f, p) = (fixed_weight(), pair_weight());
    let fact = |k: usize| (1..=k as i64).product::<i64>();
    let mut out = MultiParamPoly::zero();
    for m in 0..=n / 2 {
        let coeff = fact(n) / (fact(n - 2 * m) * fact(m) * (1 << m));
        out += &(&(&f.pow((n - 2 * m) as u32) * &p.pow(m as u32)) * &MultiParamPoly::constant(coeff));
    }
    out
}

/// Σ_{λ ∈ P_r(n)} d^λ(q)² and (1 + q)^n n!.
pub fn sum_d_squared(n: usize, r: usize) -> (QHalfPoly, QHalfPoly) {
    let mut lhs = QHalfPoly::zero();
    for lambda in Partition::with_core(r, n) {
        let d = d_poly(&lambda);
        lhs = &lhs + &(&d * &d);
    }
    let rhs = QHalfPoly::one_plus_q_pow(n as u32).scale((1..=n as i64).product());
    (lhs, rhs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassicalOracles {
    pub sum_fsq: u128,
    pub factorial: u128,
    pub sum_f: u128,
    pub involutions: u128,
}

/// Σ (f^λ)² against n!, and Σ f^λ against t(n) = t(n−1) + (n−1) t(n−2).
pub fn classical_oracles(n: usize) -> ClassicalOracles {
    let shapes = Partition::all_of(n);
    let mut t = (1u128, 1u128);
    for k in 2..=n as u128 {
        t = (t.1, t.1 + (k - 1) * t.0);
    }
    ClassicalOracles {
        sum_fsq: shapes.iter().map(|l| syt_count(l).pow(2)).sum(),
        factorial: (1..=n as u128).product(),
        sum_f: shapes.iter().map(syt_count).sum(),
        involutions: t.1,
    }
}

/// Σ sign(T) over all SYT with n cells.
pub fn signed_syt_sum(n: usize) -> i64 {
    Partition::all_of(n).iter().map(imbalance).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn involution_counts() {
        assert_eq!(enumerate_involutions(1).len(), 2);
        assert_eq!(enumerate_involutions(2).len(), 6);
        assert_eq!(enumerate_involutions(3).len(), 20);
        assert_eq!(h_poly_recursive(3).eval_all(&[(Var::A, 1), (Var::B, 1), (Var::C, 1), (Var::S, 1)]).as_constant(), Some(20));
    }

    #[test]
    fn prop_sym_small_cases() {
        let bar: ColoredPermutation = "1'".parse().unwrap();
        let check = check_involution_shape(&bar, 0).unwrap();
        assert_eq!(check.shape, p("1,1"));
        assert!(check.holds());
        let id = ColoredPermutation::identity(3);
        let check = check_involution_shape(&id, 0).unwrap();
        assert_eq!(check.shape, p("6"));
        assert_eq!(check.observed, [0, 0, 3, 0]);
        assert!(check.holds());
        assert!(check_involution_shape(&"2 3 1".parse().unwrap(), 0).is_err());
    }

    #[test]
    fn cor_ev_and_thm_ev_small_cases() {
        let bar: ColoredPermutation = "1'".parse().unwrap();
        let c = check_involution_spin(&bar, 0).unwrap();
        assert_eq!((c.ev, c.ov), (0, 1));
        assert!(c.holds());
        let swap: ColoredPermutation = "2' 1'".parse().unwrap();
        assert_eq!(check_involution_sign(&swap, 0).unwrap(), (-1, -1));
        assert_eq!(check_involution_sign(&ColoredPermutation::identity(4), 1).unwrap(), (1, 1));
    }

    #[test]
    fn imbalance_examples() {
        assert_eq!(imbalance(&p("2")), 1);
        assert_eq!(imbalance(&p("1,1")), 1);
        assert_eq!(imbalance(&p("2,1")), 0);
        assert_eq!(imbalance(&p("2,2")), 0);
        assert_eq!(imbalance_via_sdt(&p("2,2")).unwrap(), 0);
        assert!(imbalance_via_sdt(&p("2,1")).is_err());
    }

    #[test]
    fn stanley_small_cases() {
        assert_eq!(stanley_sum(1), MultiParamPoly::one());
        assert_eq!(stanley_sum(2), MultiParamPoly::var(Var::X) + MultiParamPoly::var(Var::Y));
    }

    #[test]
    fn h_poly_small_cases() {
        assert_eq!(h_poly_recursive(0), MultiParamPoly::one());
        assert_eq!(h_poly_recursive(1), fixed_weight());
        assert_eq!(h_poly_recursive(2), &fixed_weight().pow(2) + &pair_weight());
        assert_eq!(h_poly_by_shapes(2, 0), h_poly_recursive(2));
    }

    #[test]
    fn d_squared_small_cases() {
        assert_eq!(sum_d_squared(0, 0).0, QHalfPoly::one());
        let (lhs, rhs) = sum_d_squared(1, 0);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, QHalfPoly::from_coeffs(vec![1, 0, 1]));
    }

    #[test]
    fn classical_small_cases() {
        let c = classical_oracles(3);
        assert_eq!((c.sum_fsq, c.sum_f), (6, 4));
        let c = classical_oracles(0);
        assert_eq!((c.sum_fsq, c.sum_f, c.factorial, c.involutions), (1, 1, 1, 1));
    }

    #[test]
    fn toggling_two_cycles() {
        let pi: ColoredPermutation = "1 6' 3' 5 4 2' 7'".parse().unwrap();
        assert_eq!(toggle_first_two_cycle(&pi).unwrap().to_string(), "1 6 3' 5 4 2 7'");
        assert_eq!(toggle_first_two_cycle(&"1' 2".parse().unwrap()), None);
    }
}
