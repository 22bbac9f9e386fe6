//! Evidence that `src` is not below `tgt`: a threshold witness `(c, s)` and
//! the pair of weights with entries in `{c - 1, c}` it degenerates to.

use serde::{Deserialize, Serialize};

use crate::bruhat::{TableauFailure, TableauLevels};
use crate::error::{Error, Result};
use crate::weights::{antidominant_representative, same_orbit, simple_root_cone, BlockWeight};
use crate::weyl::{apply, compose, inverse, ThetaWeylElement};

/// `src_s >= c > tgt_s`, with equally many entries `>= c` to the left of `s`
/// among blocks of size `n_s` on both sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Witness {
    /// Size `r = n_s` of the class whose tableaux disagree.
    pub class_size: usize,
    /// Tableau level `a` (1-based); `c` is the `a`-th smallest class value.
    pub level: usize,
    /// Slot `b` (1-based) inside row `a`.
    pub slot: usize,
    /// Block position (1-based).
    pub s: usize,
    /// Threshold.
    pub c: i64,
}

/// Checks both witness conditions against the pair.
pub fn check_witness(src: &BlockWeight, tgt: &BlockWeight, w: &Witness) -> Result<()> {
    let comp = src.composition();
    comp.check_index(w.s)?;
    let n_s = comp.size_of(w.s);
    if n_s != w.class_size {
        return Err(Error::WitnessMismatch(format!(
            "block {} has size {n_s}, witness names class {}",
            w.s, w.class_size
        )));
    }
    if !(src.entry(w.s) >= w.c && w.c > tgt.entry(w.s)) {
        return Err(Error::WitnessMismatch(format!(
            "need src_s >= c > tgt_s, got {} >= {} > {}",
            src.entry(w.s),
            w.c,
            tgt.entry(w.s)
        )));
    }
    let count = |x: &BlockWeight| {
        (1..w.s)
            .filter(|&i| comp.size_of(i) == n_s && x.entry(i) >= w.c)
            .count()
    };
    let (left_src, left_tgt) = (count(src), count(tgt));
    if left_src != left_tgt {
        return Err(Error::WitnessMismatch(format!(
            "left counts differ: {left_src} != {left_tgt}"
        )));
    }
    Ok(())
}

pub(crate) fn witness_from_failure(
    src: &BlockWeight,
    tgt: &BlockWeight,
    f: TableauFailure,
) -> Result<Witness> {
    let w = Witness {
        class_size: f.class_size,
        level: f.level,
        slot: f.slot,
        s: f.position,
        c: f.threshold,
    };
    check_witness(src, tgt, &w)?;
    Ok(w)
}

/// Picks the smallest failing class, then its maximal failing level `a`,
/// then the minimal failing slot `b`; `s = t^a_b[src]` and `c = eta_a`.
pub fn find_witness(src: &BlockWeight, tgt: &BlockWeight) -> Result<Witness> {
    src.require_same_composition(tgt)?;
    if !same_orbit(src, tgt)? {
        return Err(Error::NotSameOrbit);
    }
    TableauLevels::new(tgt).find_witness(src, tgt)
}

/// The element `w = x y^-1` with `apply(w, tgt) == src`, where `src = x l`
/// and `tgt = y l` for the common antidominant `l`.
pub fn relating_element(src: &BlockWeight, tgt: &BlockWeight) -> Result<ThetaWeylElement> {
    src.require_same_composition(tgt)?;
    if !same_orbit(src, tgt)? {
        return Err(Error::NotSameOrbit);
    }
    let (_, x) = antidominant_representative(src);
    let (_, y) = antidominant_representative(tgt);
    compose(&x, &inverse(&y))
}

/// Degenerated pair; entries are `c` or `c - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneratePair {
    pub mu_bar: BlockWeight,
    pub nu_bar: BlockWeight,
}

/// `c` for bigger blocks, `c - 1` for smaller ones, and for blocks of size
/// `n_s` whichever of the two sits on the same side of `c` as the entry.
pub(crate) fn collapse(x: &BlockWeight, c: i64, n_s: usize) -> BlockWeight {
    let comp = x.composition();
    let entries = (1..=x.k())
        .map(|i| {
            let n_i = comp.size_of(i);
            if n_i > n_s || (n_i == n_s && x.entry(i) >= c) {
                c
            } else {
                c - 1
            }
        })
        .collect();
    x.with_entries(entries)
}

/// Collapses the pair along the witness and checks that the result relates
/// by the same group element and fails the simple-root cone test, first
/// going negative right after block `s - 1`.
pub fn degenerate(tgt: &BlockWeight, src: &BlockWeight, w: &Witness) -> Result<DegeneratePair> {
    check_witness(src, tgt, w)?;
    let g = relating_element(src, tgt)?;
    let n_s = src.composition().size_of(w.s);
    let mu_bar = collapse(tgt, w.c, n_s);
    let nu_bar = collapse(src, w.c, n_s);

    if apply(&g, &mu_bar)? != nu_bar {
        return Err(Error::WitnessMismatch(format!(
            "{nu_bar} is not the image of {mu_bar} under the relating element"
        )));
    }
    let cone = simple_root_cone(&mu_bar, &nu_bar)?;
    if cone.in_cone() {
        return Err(Error::WitnessMismatch(format!(
            "{mu_bar} - {nu_bar} lies in the simple-root cone"
        )));
    }
    let expected = src.composition().offset(w.s - 1) + 1;
    if cone.first_negative() != Some(expected) {
        return Err(Error::WitnessMismatch(format!(
            "first negative partial sum at {:?}, expected {expected}",
            cone.first_negative()
        )));
    }
    Ok(DegeneratePair { mu_bar, nu_bar })
}
