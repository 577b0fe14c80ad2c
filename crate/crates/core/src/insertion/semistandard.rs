//! The semistandard domino correspondence for colored biwords.

use crate::error::{Error, Result};
use crate::insertion::growth::{growth_insert, growth_reverse};
use crate::partition::Partition;
use crate::tableau::DominoTableau;
use crate::words::{Biletter, Biword, BiwordKind, ColoredPermutation, Letter};

/// Recording tableau of a colored biword whose lower word uses each of 1..n once.
fn recording_of_standard_bottom(u: &Biword, r: usize) -> Result<DominoTableau> {
    let pi = ColoredPermutation::new(u.bottom_word())?;
    let (_, q) = growth_insert(&pi, r);
    q.destandardize(&u.top_weight())
}

/// (P, Q) for a colored biword: P standardises the top row first, Q = P of the inverse.
pub fn semistandard_insert(w: &Biword, r: usize) -> Result<(DominoTableau, DominoTableau)> {
    if w.kind() != BiwordKind::Colored {
        return Err(Error::InvalidWord("semistandard insertion needs a colored biword".into()));
    }
    let p = recording_of_standard_bottom(&w.bar_st().inv_r()?, r)?;
    let q = recording_of_standard_bottom(&w.inv_r()?.bar_st().inv_r()?, r)?;
    Ok((p, q))
}

/// Maps standard labels 1..n back to values according to a weight.
pub(crate) fn blocks(weight: &[usize]) -> Vec<u32> {
    weight.iter().enumerate().flat_map(|(i, &m)| std::iter::repeat_n(i as u32 + 1, m)).collect()
}

/// The colored biword with the given pair of semistandard tableaux.
pub fn semistandard_reverse(p: &DominoTableau, q: &DominoTableau) -> Result<Biword> {
    if p.shape() != q.shape() || p.core() != q.core() {
        return Err(Error::ShapeMismatch(format!("{} vs {}", p.shape(), q.shape())));
    }
    let r = p.core().staircase_rank().expect("tableau cores are staircases");
    let pi = growth_reverse(&p.standardize()?, &q.standardize()?)?;
    let (pb, qb) = (blocks(&p.weight()), blocks(&q.weight()));
    let letters = pi
        .word()
        .iter()
        .enumerate()
        .map(|(i, l)| {
            Biletter::new(Letter::plain(qb[i]), Letter { value: pb[l.value as usize - 1], barred: l.barred })
        })
        .collect();
    let w = Biword::new(BiwordKind::Colored, letters)?;
    match semistandard_insert(&w, r) {
        Ok(pair) if pair == (p.clone(), q.clone()) => Ok(w),
        _ => Err(Error::InvalidTableau("pair is not the image of any colored biword".into())),
    }
}

/// Insertion into δ_r of a colored word with repeated values allowed.
pub fn insert_colored_word(word: &[Letter], r: usize) -> Result<(DominoTableau, DominoTableau)> {
    semistandard_insert(&Biword::from_word(word), r)
}

/// The empty pair on δ_r.
pub fn empty_pair(r: usize) -> (DominoTableau, DominoTableau) {
    let d = DominoTableau::empty(Partition::staircase(r));
    (d.clone(), d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_biword;

    fn bw(s: &str) -> Biword {
        parse_biword(s, BiwordKind::Colored).unwrap()
    }

    #[test]
    fn running_example() {
        let w = bw("1/2' 1/3 2/4 3/1' 3/1'");
        let (p, q) = semistandard_insert(&w, 0).unwrap();
        assert_eq!(p.weight(), vec![2, 1, 1, 1]);
        assert_eq!(q.weight(), vec![2, 1, 2]);
        assert_eq!(p.shape(), q.shape());
        assert_eq!(p.v() + q.v(), 2 * w.total_color());
        assert!(p.is_semistandard() && q.is_semistandard());
        assert_eq!(semistandard_reverse(&p, &q).unwrap(), w);
    }

    #[test]
    fn single_biletter() {
        let (p, q) = semistandard_insert(&bw("1/1"), 0).unwrap();
        assert_eq!(p, q);
        assert_eq!(p.shape().to_string(), "(2)");
        assert_eq!(semistandard_reverse(&p, &q).unwrap(), bw("1/1"));
        assert_eq!(semistandard_insert(&Biword::from_word(&[]), 2).unwrap(), empty_pair(2));
    }

    #[test]
    fn permutations_agree_with_standard_insertion() {
        for pi in ColoredPermutation::all(3) {
            for r in 0..=1 {
                assert_eq!(semistandard_insert(&pi.to_biword(), r).unwrap(), growth_insert(&pi, r));
            }
        }
    }

    #[test]
    fn reverse_rejects_mismatched_shapes() {
        let (p, _) = semistandard_insert(&bw("1/1"), 0).unwrap();
        let (q, _) = semistandard_insert(&bw("1/1'"), 0).unwrap();
        assert!(matches!(semistandard_reverse(&p, &q), Err(Error::ShapeMismatch(_))));
    }
}
