//! Domino insertion by bumping.

use crate::error::{Error, Result};
use crate::insertion::growth::forward_rule;
use crate::partition::{Domino, Partition};
use crate::tableau::DominoTableau;
use crate::words::Letter;

/// `D ← i` (horizontal seed) or `D ← ī` (vertical seed).
///
/// Each larger domino γ_j is compared with the region where the new tableau
/// has grown past the old one among values below j, and moved by the same
/// four cases as the growth local rules.
pub fn insert_one(d: &DominoTableau, letter: Letter) -> Result<DominoTableau> {
    let i = letter.value;
    if d.get(i).is_some() {
        return Err(Error::ValueCollision(i));
    }
    let old_below = |j: u32| d.restrict(j - 1).shape().clone();
    let a = d.restrict(i - 1);
    let seed_shape = if letter.barred {
        a.shape().add_two_to_col(1)
    } else {
        a.shape().add_two_to_row(1)
    }
    .expect("a first-row or first-column domino always fits");
    let seed = seed_shape.skew_domino(a.shape()).expect("seed is one domino");
    let mut b = a.with_entry(i, seed)?;
    for e in d.entries().iter().filter(|e| e.value > i) {
        let j = e.value;
        let lambda = old_below(j);
        let nu = d.restrict(j).shape().clone();
        let mu = b.shape().clone();
        let rho = forward_rule(&lambda, &mu, &nu, 0)
            .map_err(|message| Error::InvalidTableau(format!("while moving {j}: {message}")))?;
        let moved: Domino = rho
            .skew_domino(&mu)
            .ok_or_else(|| Error::InvalidTableau(format!("{j} does not land on a domino")))?;
        b = b.with_entry(j, moved)?;
    }
    Ok(b)
}

/// The tableau after each letter of `word`, starting from δ_r.
pub fn insertion_frames(word: &[Letter], r: usize) -> Result<Vec<DominoTableau>> {
    let mut current = DominoTableau::empty(Partition::staircase(r));
    let mut frames = Vec::with_capacity(word.len());
    for &l in word {
        current = insert_one(&current, l)?;
        frames.push(current.clone());
    }
    Ok(frames)
}

/// (P, Q) for a word with distinct values, Q recording the shape after each letter.
pub fn insert_word(word: &[Letter], r: usize) -> Result<(DominoTableau, DominoTableau)> {
    let frames = insertion_frames(word, r)?;
    let core = Partition::staircase(r);
    let mut chain = vec![core.clone()];
    chain.extend(frames.iter().map(|f| f.shape().clone()));
    let p = frames.last().cloned().unwrap_or_else(|| DominoTableau::empty(core));
    Ok((p, DominoTableau::from_chain(&chain)?))
}
