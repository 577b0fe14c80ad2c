//! Letters, colored permutations, and the three flavours of colored biwords
//! together with the inversion and standardisation operators acting on them.
//!
//! A barred letter `k̄` is written `k'` (or `-k` on input). The letter order used
//! throughout is `1̄ < 1 < 2̄ < 2 < …`; the `neg` value of `k̄` is `-k`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub struct Letter {
    pub value: u32,
    pub barred: bool,
}

impl Letter {
    pub const fn plain(value: u32) -> Self {
        Letter { value, barred: false }
    }

    pub const fn bar(value: u32) -> Self {
        Letter { value, barred: true }
    }

    pub fn neg(self) -> i64 {
        if self.barred {
            -(self.value as i64)
        } else {
            self.value as i64
        }
    }

    pub fn ev(self) -> Self {
        Letter::plain(self.value)
    }

    pub fn with_bar(self, barred: bool) -> Self {
        Letter { value: self.value, barred }
    }

    /// Sort key for the order `1̄ < 1 < 2̄ < 2 < …`.
    pub fn order_key(self) -> (u32, bool) {
        (self.value, !self.barred)
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl TryFrom<i64> for Letter {
    type Error = Error;

    fn try_from(x: i64) -> Result<Self> {
        if x == 0 || x.unsigned_abs() > u32::MAX as u64 {
            return Err(Error::InvalidWord(format!("letter value {x} out of range")));
        }
        Ok(Letter { value: x.unsigned_abs() as u32, barred: x < 0 })
    }
}

impl From<Letter> for i64 {
    fn from(l: Letter) -> i64 {
        l.neg()
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, if self.barred { "'" } else { "" })
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_letter(token: &str, position: usize) -> Result<Letter> {
    let err = |message: String| Error::Parse { position, message };
    let (digits, barred) = if let Some(rest) = token.strip_suffix('\'') {
        (rest, true)
    } else if let Some(rest) = token.strip_prefix('-') {
        (rest, true)
    } else {
        (token, false)
    };
    let value: u32 = digits.parse().map_err(|_| err(format!("bad letter {token:?}")))?;
    if value == 0 {
        return Err(err("letters are positive integers".into()));
    }
    Ok(Letter { value, barred })
}

/// Splits on whitespace and commas, keeping the character offset of each token.
fn tokens(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in s.char_indices() {
        let sep = ch.is_whitespace() || ch == ',';
        match (start, sep) {
            (None, false) => start = Some(i),
            (Some(b), true) => {
                out.push((b, &s[b..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(b) = start {
        out.push((b, &s[b..]));
    }
    out
}

/// Parses a word such as `3' 4 2 1'` or `-3 4 2 -1`.
pub fn parse_word(s: &str) -> Result<Vec<Letter>> {
    tokens(s).into_iter().map(|(pos, t)| parse_letter(t, pos)).collect()
}

pub fn format_word(word: &[Letter]) -> String {
    word.iter().map(|l| l.to_string()).join(" ")
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Biletter {
    pub top: Letter,
    pub bottom: Letter,
}

impl Biletter {
    pub const fn new(top: Letter, bottom: Letter) -> Self {
        Biletter { top, bottom }
    }

    fn swap(self) -> Self {
        Biletter { top: self.bottom, bottom: self.top }
    }

    /// Swap the letters, keeping any bar on the lower letter.
    fn swap_bar_below(self) -> Self {
        let barred = self.top.barred || self.bottom.barred;
        Biletter { top: self.bottom.ev(), bottom: self.top.with_bar(barred) }
    }
}

impl fmt::Display for Biletter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.top, self.bottom)
    }
}

impl fmt::Debug for Biletter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BiwordKind {
    /// Bars may appear in both rows.
    DoublyColored,
    /// Bars only in the bottom row; same order as doubly colored biwords.
    Colored,
    /// Bars only in the bottom row; equal tops sorted by decreasing bottom.
    DualColored,
}

/// A canonically ordered sequence of biletters.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Biword {
    kind: BiwordKind,
    letters: Vec<Biletter>,
}

fn canonical_cmp(kind: BiwordKind, x: &Biletter, y: &Biletter) -> Ordering {
    x.top.order_key().cmp(&y.top.order_key()).then_with(|| match kind {
        BiwordKind::DualColored => y.bottom.neg().cmp(&x.bottom.neg()),
        _ if x.top.barred => y.bottom.neg().cmp(&x.bottom.neg()),
        _ => x.bottom.neg().cmp(&y.bottom.neg()),
    })
}

impl Biword {
    /// Every colored (or dual colored) biword of length `n` with unbarred tops and
    /// possibly barred bottoms, all values at most `k`.
    pub fn all(kind: BiwordKind, n: usize, k: u32, multiplicity_free: bool) -> Vec<Biword> {
        let alphabet: Vec<Biletter> = (1..=k)
            .flat_map(|t| (1..=k).flat_map(move |b| [Letter::plain(b), Letter::bar(b)].map(|l| Biletter::new(Letter::plain(t), l))))
            .collect();
        let picks: Vec<Vec<Biletter>> = if multiplicity_free {
            alphabet.into_iter().combinations(n).collect()
        } else {
            alphabet.into_iter().combinations_with_replacement(n).collect()
        };
        picks.into_iter().map(|l| Biword::new(kind, l).expect("unbarred tops")).collect()
    }

    /// Sorts `letters` canonically for `kind`. A doubly colored biword without
    /// top bars is reported as [`BiwordKind::Colored`].
    pub fn new(kind: BiwordKind, mut letters: Vec<Biletter>) -> Result<Self> {
        if let Some(bad) = letters.iter().find(|b| b.top.value == 0 || b.bottom.value == 0) {
            return Err(Error::InvalidWord(format!("zero letter in {bad}")));
        }
        let kind = match kind {
            BiwordKind::DoublyColored if letters.iter().all(|b| !b.top.barred) => BiwordKind::Colored,
            BiwordKind::Colored | BiwordKind::DualColored if letters.iter().any(|b| b.top.barred) => {
                return Err(Error::InvalidWord(format!("{kind:?} biwords carry no bars in the top row")));
            }
            k => k,
        };
        letters.sort_by(|x, y| canonical_cmp(kind, x, y));
        Ok(Biword { kind, letters })
    }

    /// The colored biword with top row 1..n over `word`.
    pub fn from_word(word: &[Letter]) -> Self {
        let letters = word
            .iter()
            .enumerate()
            .map(|(i, &l)| Biletter::new(Letter::plain(i as u32 + 1), l))
            .collect();
        Biword { kind: BiwordKind::Colored, letters }
    }

    pub fn kind(&self) -> BiwordKind {
        self.kind
    }

    pub fn letters(&self) -> &[Biletter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn top_word(&self) -> Vec<Letter> {
        self.letters.iter().map(|b| b.top).collect()
    }

    pub fn bottom_word(&self) -> Vec<Letter> {
        self.letters.iter().map(|b| b.bottom).collect()
    }

    pub fn top_weight(&self) -> Vec<usize> {
        weight(self.letters.iter().map(|b| b.top))
    }

    pub fn bottom_weight(&self) -> Vec<usize> {
        weight(self.letters.iter().map(|b| b.bottom))
    }

    /// Total color: the number of barred letters in either row.
    pub fn total_color(&self) -> usize {
        self.letters.iter().map(|b| b.top.barred as usize + b.bottom.barred as usize).sum()
    }

    pub fn ev(&self) -> Biword {
        let letters = self.letters.iter().map(|b| Biletter::new(b.top.ev(), b.bottom.ev())).collect();
        Biword::new(self.kind, letters).expect("removing bars keeps a valid biword")
    }

    pub fn neg(&self) -> Vec<(i64, i64)> {
        self.letters.iter().map(|b| (b.top.neg(), b.bottom.neg())).collect()
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.letters.iter().tuple_windows().all(|(x, y)| x != y)
    }

    fn require_multiplicity_free(&self) -> Result<()> {
        match self.letters.iter().tuple_windows().find(|(x, y)| x == y) {
            Some((x, _)) => Err(Error::NotMultiplicityFree(x.to_string())),
            None => Ok(()),
        }
    }

    /// ōst: replace the top row by 1, 2, …, n in canonical order, keeping bars.
    pub fn bar_st(&self) -> Biword {
        let letters = self
            .letters
            .iter()
            .enumerate()
            .map(|(i, b)| Biletter::new(b.top.with_bar(b.top.barred).with_value(i as u32 + 1), b.bottom))
            .collect();
        Biword { kind: self.kind, letters }
    }

    /// Swap the two rows of a (doubly) colored biword.
    pub fn inv(&self) -> Result<Biword> {
        if self.kind == BiwordKind::DualColored {
            return Err(Error::InvalidWord("inv is defined on (doubly) colored biwords".into()));
        }
        Biword::new(BiwordKind::DoublyColored, self.letters.iter().map(|b| b.swap()).collect())
    }

    /// Move bars to the top row, then swap rows.
    pub fn inv_r(&self) -> Result<Biword> {
        if self.kind != BiwordKind::Colored {
            return Err(Error::InvalidWord("inv_r needs a colored biword without top bars".into()));
        }
        Biword::new(BiwordKind::Colored, self.letters.iter().map(|b| b.swap_bar_below()).collect())
    }

    /// Swap rows, keeping bars below; exchanges colored and dual colored biwords.
    pub fn inv_d(&self) -> Result<Biword> {
        let target = match self.kind {
            BiwordKind::Colored => BiwordKind::DualColored,
            BiwordKind::DualColored => BiwordKind::Colored,
            BiwordKind::DoublyColored => {
                return Err(Error::InvalidWord("inv_d needs a colored or dual colored biword".into()))
            }
        };
        Biword::new(target, self.letters.iter().map(|b| b.swap_bar_below()).collect())
    }

    /// st = ōst · inv · ōst · inv, applied left to right.
    pub fn st(&self) -> Result<Biword> {
        if self.kind != BiwordKind::Colored {
            return Err(Error::InvalidWord("st needs a colored biword".into()));
        }
        self.bar_st().inv()?.bar_st().inv()
    }

    /// std = ōst · inv_d · ōst · inv_d, for multiplicity-free inputs.
    pub fn std(&self) -> Result<Biword> {
        self.require_multiplicity_free()?;
        self.bar_st().inv_d()?.bar_st().inv_d()
    }

    /// `Some(π)` when the top row is 1..n and the bottom row is a colored permutation.
    pub fn to_permutation(&self) -> Option<ColoredPermutation> {
        let top_ok = self.letters.iter().enumerate().all(|(i, b)| b.top == Letter::plain(i as u32 + 1));
        if !top_ok {
            return None;
        }
        ColoredPermutation::new(self.bottom_word()).ok()
    }
}

impl Letter {
    fn with_value(self, value: u32) -> Self {
        Letter { value, barred: self.barred }
    }
}

/// Counts of each value 1..=max, bars ignored.
pub fn weight(letters: impl Iterator<Item = Letter>) -> Vec<usize> {
    let mut w: Vec<usize> = Vec::new();
    for l in letters {
        let i = l.value as usize - 1;
        if w.len() <= i {
            w.resize(i + 1, 0);
        }
        w[i] += 1;
    }
    w
}

impl fmt::Display for Biword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letters.iter().map(|b| b.to_string()).join(" "))
    }
}

impl fmt::Debug for Biword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[{}]", self.kind, self)
    }
}

/// Parses `1/2' 1/3 2/4` (pairs) or `1 1 2 ; 2' 3 4` (two rows).
pub fn parse_biword(s: &str, kind: BiwordKind) -> Result<Biword> {
    let rows: Vec<&str> = s.split([';', '\n']).filter(|r| !r.trim().is_empty()).collect();
    let letters = if s.contains('/') {
        tokens(s)
            .into_iter()
            .map(|(pos, t)| {
                let (top, bottom) = t.split_once('/').ok_or_else(|| Error::Parse {
                    position: pos,
                    message: format!("expected top/bottom, got {t:?}"),
                })?;
                Ok(Biletter::new(parse_letter(top, pos)?, parse_letter(bottom, pos + top.len() + 1)?))
            })
            .collect::<Result<Vec<_>>>()?
    } else if rows.len() == 2 {
        let offset = s.find(rows[1]).unwrap_or(0);
        let top = parse_word(rows[0])?;
        let bottom = parse_word(rows[1]).map_err(|e| match e {
            Error::Parse { position, message } => Error::Parse { position: position + offset, message },
            e => e,
        })?;
        if top.len() != bottom.len() {
            return Err(Error::Parse { position: offset, message: "rows differ in length".into() });
        }
        top.into_iter().zip(bottom).map(|(t, b)| Biletter::new(t, b)).collect()
    } else {
        return Err(Error::Parse { position: 0, message: "expected top/bottom pairs or two rows".into() });
    };
    Biword::new(kind, letters)
}

/// An element of the hyperoctahedral group B_n, written in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Letter>", into = "Vec<Letter>")]
pub struct ColoredPermutation {
    word: Vec<Letter>,
}

impl ColoredPermutation {
    pub fn new(word: Vec<Letter>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for l in &word {
            let v = l.value as usize;
            if v == 0 || v > n || std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::InvalidWord(format!(
                    "{} is not a colored permutation",
                    format_word(&word)
                )));
            }
        }
        Ok(ColoredPermutation { word })
    }

    pub fn identity(n: usize) -> Self {
        ColoredPermutation { word: (1..=n as u32).map(Letter::plain).collect() }
    }

    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn total_color(&self) -> usize {
        self.word.iter().filter(|l| l.barred).count()
    }

    /// The group inverse: π(i) = ±j gives π⁻¹(j) = ±i.
    pub fn inverse(&self) -> Self {
        let mut word = vec![Letter::plain(1); self.len()];
        for (i, l) in self.word.iter().enumerate() {
            word[l.value as usize - 1] = Letter { value: i as u32 + 1, barred: l.barred };
        }
        ColoredPermutation { word }
    }

    pub fn is_involution(&self) -> bool {
        self.inverse() == *self
    }

    pub fn to_biword(&self) -> Biword {
        Biword::from_word(&self.word)
    }

    /// All 2ⁿ·n! elements of B_n: permutations in lexicographic order, each with all bar patterns.
    pub fn all(n: usize) -> Vec<ColoredPermutation> {
        let mut out = Vec::with_capacity((1 << n) * (1..=n).product::<usize>());
        for perm in (1..=n as u32).permutations(n) {
            for mask in 0..(1u32 << n) {
                let word = perm
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| Letter { value: v, barred: mask >> (n - 1 - i) & 1 == 1 })
                    .collect();
                out.push(ColoredPermutation { word });
            }
        }
        out
    }

    pub fn involutions(n: usize) -> Vec<ColoredPermutation> {
        ColoredPermutation::all(n).into_iter().filter(|p| p.is_involution()).collect()
    }
}

impl TryFrom<Vec<Letter>> for ColoredPermutation {
    type Error = Error;

    fn try_from(word: Vec<Letter>) -> Result<Self> {
        ColoredPermutation::new(word)
    }
}

impl From<ColoredPermutation> for Vec<Letter> {
    fn from(p: ColoredPermutation) -> Self {
        p.word
    }
}

impl FromStr for ColoredPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ColoredPermutation::new(parse_word(s)?)
    }
}

impl fmt::Display for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_word(&self.word))
    }
}

impl fmt::Debug for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Cycle counts of an involution in B_n.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvolutionProfile {
    pub fixed: usize,
    pub barred_fixed: usize,
    pub two_cycles: usize,
    pub barred_two_cycles: usize,
}

impl InvolutionProfile {
    pub fn of(pi: &ColoredPermutation) -> Result<Self> {
        if !pi.is_involution() {
            return Err(Error::NotInvolution(pi.to_string()));
        }
        let mut p = InvolutionProfile::default();
        for (i, l) in pi.word().iter().enumerate() {
            let i = i as u32 + 1;
            match (l.value.cmp(&i), l.barred) {
                (Ordering::Equal, false) => p.fixed += 1,
                (Ordering::Equal, true) => p.barred_fixed += 1,
                (Ordering::Greater, false) => p.two_cycles += 1,
                (Ordering::Greater, true) => p.barred_two_cycles += 1,
                (Ordering::Less, _) => {}
            }
        }
        Ok(p)
    }

    pub fn size(&self) -> usize {
        self.fixed + self.barred_fixed + 2 * (self.two_cycles + self.barred_two_cycles)
    }
}

/// Per-weight cycle counts of a colored involution `w = w^{inv_r}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ColoredInvolutionProfile {
    /// a_i: biletters i/i.
    pub fixed: BTreeMap<u32, usize>,
    /// b_i: biletters i/ī.
    pub barred_fixed: BTreeMap<u32, usize>,
    /// c_ij (i < j): pairs i/j, j/i.
    pub two_cycles: BTreeMap<(u32, u32), usize>,
    /// d_ij (i < j): pairs i/j̄, j/ī.
    pub barred_two_cycles: BTreeMap<(u32, u32), usize>,
}

impl ColoredInvolutionProfile {
    pub fn of(w: &Biword) -> Result<Self> {
        if w.kind() != BiwordKind::Colored || w.inv_r()? != *w {
            return Err(Error::NotInvolution(w.to_string()));
        }
        let mut p = ColoredInvolutionProfile::default();
        for b in w.letters() {
            let (i, j) = (b.top.value, b.bottom.value);
            match (i.cmp(&j), b.bottom.barred) {
                (Ordering::Equal, false) => *p.fixed.entry(i).or_insert(0) += 1,
                (Ordering::Equal, true) => *p.barred_fixed.entry(i).or_insert(0) += 1,
                (Ordering::Less, false) => *p.two_cycles.entry((i, j)).or_insert(0) += 1,
                (Ordering::Less, true) => *p.barred_two_cycles.entry((i, j)).or_insert(0) += 1,
                (Ordering::Greater, _) => {}
            }
        }
        Ok(p)
    }

    /// The raw sums Σa_i, Σb_i, Σc_ij, Σd_ij.
    pub fn totals(&self) -> InvolutionProfile {
        InvolutionProfile {
            fixed: self.fixed.values().sum(),
            barred_fixed: self.barred_fixed.values().sum(),
            two_cycles: self.two_cycles.values().sum(),
            barred_two_cycles: self.barred_two_cycles.values().sum(),
        }
    }

    /// The cycle type of the standardisation `w^{st}`: equal barred fixed points pair up into barred two-cycles.
    pub fn standardized(&self) -> InvolutionProfile {
        let t = self.totals();
        let paired: usize = self.barred_fixed.values().map(|b| b / 2).sum();
        InvolutionProfile {
            fixed: t.fixed,
            barred_fixed: t.barred_fixed - 2 * paired,
            two_cycles: t.two_cycles,
            barred_two_cycles: t.barred_two_cycles + paired,
        }
    }
}
