//! Exact sparse polynomials with integer coefficients.
//!
//! `s` stands for q^{1/2}, so spins (half-integers) become integer exponents.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

/// The named indeterminates a [`MultiParamPoly`] may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    S,
    A,
    B,
    C,
    X,
    Y,
    Q,
    T,
}

impl Var {
    pub const ALL: [Var; 8] = [Var::S, Var::A, Var::B, Var::C, Var::X, Var::Y, Var::Q, Var::T];

    pub fn name(self) -> &'static str {
        match self {
            Var::S => "s",
            Var::A => "a",
            Var::B => "b",
            Var::C => "c",
            Var::X => "x",
            Var::Y => "y",
            Var::Q => "q",
            Var::T => "t",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

pub type Exponents = [u16; 8];

/// A polynomial in the parameters s (= q^{1/2}), a, b, c, x, y, q, t.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiParamPoly {
    terms: BTreeMap<Exponents, i64>,
}

impl MultiParamPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term([0; 8], c);
        p
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(&[(v, 1)], 1)
    }

    pub fn monomial(powers: &[(Var, u16)], coeff: i64) -> Self {
        let mut e = [0u16; 8];
        for &(v, k) in powers {
            e[v.index()] += k;
        }
        let mut p = Self::zero();
        p.add_term(e, coeff);
        p
    }

    pub fn add_term(&mut self, exps: Exponents, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exps).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&exps);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &i64)> {
        self.terms.iter()
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Substitutes an integer for one indeterminate.
    pub fn eval(&self, v: Var, value: i64) -> Self {
        let mut out = Self::zero();
        for (e, &c) in &self.terms {
            let k = e[v.index()] as u32;
            let mut e2 = *e;
            e2[v.index()] = 0;
            out.add_term(e2, c * value.pow(k));
        }
        out
    }

    pub fn eval_all(&self, values: &[(Var, i64)]) -> Self {
        values.iter().fold(self.clone(), |p, &(v, x)| p.eval(v, x))
    }

    /// Replaces every power q^k by s^{2k}.
    pub fn q_to_s(&self) -> Self {
        let mut out = Self::zero();
        for (e, &c) in &self.terms {
            let mut e2 = *e;
            e2[Var::S.index()] += 2 * e2[Var::Q.index()];
            e2[Var::Q.index()] = 0;
            out.add_term(e2, c);
        }
        out
    }

    /// Largest exponent of `v` in any term.
    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms.keys().map(|e| e[v.index()]).max().unwrap_or(0)
    }

    /// The value as an integer, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<i64> {
        match self.terms.len() {
            0 => Some(0),
            1 => self.terms.get(&[0; 8]).copied(),
            _ => None,
        }
    }
}

impl Add for &MultiParamPoly {
    type Output = MultiParamPoly;

    fn add(self, rhs: &MultiParamPoly) -> MultiParamPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for MultiParamPoly {
    type Output = MultiParamPoly;

    fn add(mut self, rhs: MultiParamPoly) -> MultiParamPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&MultiParamPoly> for MultiParamPoly {
    fn add_assign(&mut self, rhs: &MultiParamPoly) {
        for (e, &c) in &rhs.terms {
            self.add_term(*e, c);
        }
    }
}

impl Neg for &MultiParamPoly {
    type Output = MultiParamPoly;

    fn neg(self) -> MultiParamPoly {
        MultiParamPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Sub for &MultiParamPoly {
    type Output = MultiParamPoly;

    fn sub(self, rhs: &MultiParamPoly) -> MultiParamPoly {
        self + &(-rhs)
    }
}

impl Mul for &MultiParamPoly {
    type Output = MultiParamPoly;

    fn mul(self, rhs: &MultiParamPoly) -> MultiParamPoly {
        let mut out = MultiParamPoly::zero();
        for (e1, &c1) in &self.terms {
            for (e2, &c2) in &rhs.terms {
                let mut e = *e1;
                for (x, y) in e.iter_mut().zip(e2) {
                    *x += y;
                }
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl Mul for MultiParamPoly {
    type Output = MultiParamPoly;

    fn mul(self, rhs: MultiParamPoly) -> MultiParamPoly {
        &self * &rhs
    }
}

impl fmt::Display for MultiParamPoly {
    /// Terms in decreasing exponent order, e.g. `2*s^2*a + b + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, &c)) in self.terms.iter().rev().enumerate() {
            let factors: Vec<String> = Var::ALL
                .iter()
                .filter(|v| e[v.index()] > 0)
                .map(|v| match e[v.index()] {
                    1 => v.name().to_string(),
                    k => format!("{}^{k}", v.name()),
                })
                .collect();
            let magnitude = c.unsigned_abs();
            let body = match (factors.is_empty(), magnitude) {
                (true, m) => m.to_string(),
                (false, 1) => factors.join("*"),
                (false, m) => format!("{m}*{}", factors.join("*")),
            };
            match (i, c < 0) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for MultiParamPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// A polynomial in s = q^{1/2} with integer coefficients, stored densely.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct QHalfPoly {
    coeffs: Vec<i64>,
}

impl QHalfPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_coeffs(vec![1])
    }

    /// Coefficients indexed by the power of s.
    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QHalfPoly { coeffs }
    }

    /// (1 + q)^n.
    pub fn one_plus_q_pow(n: u32) -> Self {
        let base = QHalfPoly::from_coeffs(vec![1, 0, 1]);
        (0..n).fold(QHalfPoly::one(), |acc, _| &acc * &base)
    }

    pub fn add_s_power(&mut self, k: usize, c: i64) {
        if self.coeffs.len() <= k {
            self.coeffs.resize(k + 1, 0);
        }
        self.coeffs[k] += c;
        *self = QHalfPoly::from_coeffs(std::mem::take(&mut self.coeffs));
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn scale(&self, c: i64) -> Self {
        QHalfPoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn to_poly(&self) -> MultiParamPoly {
        let mut p = MultiParamPoly::zero();
        for (k, &c) in self.coeffs.iter().enumerate() {
            let mut e = [0u16; 8];
            e[Var::S.index()] = k as u16;
            p.add_term(e, c);
        }
        p
    }

    pub fn highest_power(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
}

impl Add for &QHalfPoly {
    type Output = QHalfPoly;

    fn add(self, rhs: &QHalfPoly) -> QHalfPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QHalfPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Mul for &QHalfPoly {
    type Output = QHalfPoly;

    fn mul(self, rhs: &QHalfPoly) -> QHalfPoly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return QHalfPoly::zero();
        }
        let mut out = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QHalfPoly::from_coeffs(out)
    }
}

impl fmt::Display for QHalfPoly {
    /// Renders in q, with half-integral powers written as q^{k/2}: `2q^{1/2}`, `1 + q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let power = match k {
                0 => String::new(),
                2 => "q".to_string(),
                k if k % 2 == 0 => format!("q^{}", k / 2),
                k => format!("q^{{{k}/2}}"),
            };
            let m = c.unsigned_abs();
            let body = match (power.is_empty(), m) {
                (true, m) => m.to_string(),
                (false, 1) => power,
                (false, m) => format!("{m}{power}"),
            };
            match (first, c < 0) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for QHalfPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for QHalfPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let s = MultiParamPoly::var(Var::S);
        let b = MultiParamPoly::var(Var::B);
        let a = MultiParamPoly::var(Var::A);
        let h1 = &b + &(&a * &s);
        assert_eq!(h1.to_string(), "s*a + b");
        let sq = h1.pow(2);
        assert_eq!(sq.to_string(), "s^2*a^2 + 2*s*a*b + b^2");
        assert_eq!(sq.eval(Var::S, 0).to_string(), "b^2");
        assert_eq!((&sq - &sq).to_string(), "0");
        assert_eq!(sq.eval_all(&[(Var::A, 1), (Var::B, 1), (Var::S, 1)]).as_constant(), Some(4));
    }

    #[test]
    fn q_half_display() {
        assert_eq!(QHalfPoly::from_coeffs(vec![0, 2]).to_string(), "2q^{1/2}");
        assert_eq!(QHalfPoly::from_coeffs(vec![1, 0, 1]).to_string(), "1 + q");
        assert_eq!(QHalfPoly::from_coeffs(vec![0, 0, 0, 3, 1]).to_string(), "3q^{3/2} + q^2");
        assert_eq!(QHalfPoly::one_plus_q_pow(2).coeffs(), &[1, 0, 2, 0, 1]);
        assert_eq!(QHalfPoly::zero().to_string(), "0");
    }

    #[test]
    fn q_to_s_doubles_exponents() {
        let q = MultiParamPoly::var(Var::Q);
        assert_eq!(q.q_to_s(), MultiParamPoly::monomial(&[(Var::S, 2)], 1));
    }
}
