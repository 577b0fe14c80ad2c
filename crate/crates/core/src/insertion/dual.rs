//! The two dual correspondences α and β for multiplicity-free biwords.

use crate::error::{Error, Result};
use crate::insertion::semistandard::semistandard_insert;
use crate::tableau::DominoTableau;
use crate::words::{Biword, BiwordKind};

fn require(w: &Biword, kind: BiwordKind) -> Result<()> {
    if w.kind() != kind {
        return Err(Error::InvalidWord(format!("expected a {kind:?} biword, got {:?}", w.kind())));
    }
    if !w.is_multiplicity_free() {
        let dup = w.letters().windows(2).find(|p| p[0] == p[1]).map(|p| p[0].to_string()).unwrap_or_default();
        return Err(Error::NotMultiplicityFree(dup));
    }
    Ok(())
}

/// α on a dual colored biword: P semistandard, Q column-semistandard.
pub fn dual_alpha(w: &Biword, r: usize) -> Result<(DominoTableau, DominoTableau)> {
    require(w, BiwordKind::DualColored)?;
    let (p, q) = semistandard_insert(&Biword::from_word(&w.bottom_word()), r)?;
    Ok((p, q.destandardize_columns(&w.top_weight())?))
}

/// β on a colored biword: P column-semistandard, Q semistandard.
pub fn dual_beta(w: &Biword, r: usize) -> Result<(DominoTableau, DominoTableau)> {
    require(w, BiwordKind::Colored)?;
    let u = w.inv_d()?.bar_st().inv_d()?;
    let (p, q) = semistandard_insert(&u, r)?;
    Ok((p.destandardize_columns(&w.bottom_weight())?, q))
}
