//! Compositions, block weights and their full-coordinate expansion.
//!
//! A composition `(n_1, ..., n_k)` of `n` fixes the block shape of the
//! parabolic. A block weight `[l_1, ..., l_k]` names the scalar parameter
//! whose coordinates in block `j` are `l_j, l_j - 1, ..., l_j - n_j + 1`.
//!
//! Block indices in the public API are 1-based, as in the bracket notation;
//! slices returned by accessors are ordinary 0-based Rust slices.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::weyl::ThetaWeylElement;

/// Largest supported `n`.
pub const MAX_N: usize = 1 << 16;

/// Largest supported magnitude of a block entry. Together with [`MAX_N`] this
/// keeps every expanded coordinate and every prefix sum well inside `i64`.
pub const ENTRY_BOUND: i64 = 1 << 40;

/// The set `I_r` of block positions whose size is `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockClass {
    pub size: usize,
    /// 1-based block positions, ascending.
    pub positions: Vec<usize>,
}

#[derive(Debug)]
struct Layout {
    parts: Vec<usize>,
    offsets: Vec<usize>,
    classes: Vec<BlockClass>,
    class_of_block: Vec<usize>,
}

/// Block sizes `(n_1, ..., n_k)` with `k >= 2`.
#[derive(Clone)]
pub struct Composition {
    layout: Arc<Layout>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.len() < 2 {
            return Err(Error::InvalidComposition(format!(
                "need at least two blocks, got {}",
                parts.len()
            )));
        }
        if let Some(j) = parts.iter().position(|&p| p == 0) {
            return Err(Error::InvalidComposition(format!(
                "block {} has size zero",
                j + 1
            )));
        }
        let mut offsets = Vec::with_capacity(parts.len() + 1);
        let mut acc = 0usize;
        offsets.push(0);
        for &p in &parts {
            acc = acc.saturating_add(p);
            offsets.push(acc);
        }
        if acc > MAX_N {
            return Err(Error::InvalidComposition(format!(
                "n = {acc} exceeds the supported maximum {MAX_N}"
            )));
        }

        let mut sizes: Vec<usize> = parts.clone();
        sizes.sort_unstable();
        sizes.dedup();
        let classes: Vec<BlockClass> = sizes
            .iter()
            .map(|&r| BlockClass {
                size: r,
                positions: (1..=parts.len()).filter(|&j| parts[j - 1] == r).collect(),
            })
            .collect();
        let class_of_block = parts
            .iter()
            .map(|p| sizes.binary_search(p).expect("size listed"))
            .collect();

        Ok(Composition {
            layout: Arc::new(Layout {
                parts,
                offsets,
                classes,
                class_of_block,
            }),
        })
    }

    pub fn parts(&self) -> &[usize] {
        &self.layout.parts
    }

    /// Number of blocks.
    pub fn k(&self) -> usize {
        self.layout.parts.len()
    }

    pub fn n(&self) -> usize {
        self.layout.offsets[self.k()]
    }

    /// Size `n_j` of block `j` (1-based). Panics when out of range.
    pub fn size_of(&self, j: usize) -> usize {
        self.layout.parts[j - 1]
    }

    /// Prefix offset `n*_j = n_1 + ... + n_j`, with `n*_0 = 0`.
    pub fn offset(&self, j: usize) -> usize {
        self.layout.offsets[j]
    }

    /// The nonempty classes `I_r`, ordered by size `r`.
    pub fn classes(&self) -> &[BlockClass] {
        &self.layout.classes
    }

    /// The class `I_r`, if nonempty.
    pub fn class_of_size(&self, r: usize) -> Option<&BlockClass> {
        self.layout
            .classes
            .binary_search_by_key(&r, |c| c.size)
            .ok()
            .map(|i| &self.layout.classes[i])
    }

    /// Index into [`classes`](Self::classes) of the class holding block `j` (1-based).
    pub fn class_index(&self, j: usize) -> usize {
        self.layout.class_of_block[j - 1]
    }

    pub fn max_part(&self) -> usize {
        self.layout.parts.iter().copied().max().unwrap_or(0)
    }

    pub fn check_index(&self, j: usize) -> Result<()> {
        if j == 0 || j > self.k() {
            Err(Error::IndexOutOfRange {
                index: j,
                k: self.k(),
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn same_as(&self, other: &Composition) -> bool {
        Arc::ptr_eq(&self.layout, &other.layout) || self.parts() == other.parts()
    }
}

impl PartialEq for Composition {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Composition {}

impl Hash for Composition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.parts().hash(state);
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts().cmp(other.parts())
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition{}", self)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = strip_delimiters(s, '(', ')');
        let parts = split_list(body)
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::Parse(tok.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

/// A scalar parameter `[l_1, ..., l_k]` over a fixed composition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockWeight {
    composition: Composition,
    entries: Vec<i64>,
}

impl BlockWeight {
    pub fn new(composition: Composition, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != composition.k() {
            return Err(Error::LengthMismatch {
                expected: composition.k(),
                got: entries.len(),
            });
        }
        if let Some(&value) = entries.iter().find(|v| v.abs() > ENTRY_BOUND) {
            return Err(Error::EntryOutOfRange {
                value,
                bound: ENTRY_BOUND,
            });
        }
        Ok(BlockWeight {
            composition,
            entries,
        })
    }

    /// Parses the bracket form `[4,3,-1]` (brackets optional).
    pub fn parse(composition: &Composition, s: &str) -> Result<Self> {
        let body = strip_delimiters(s, '[', ']');
        let entries = split_list(body)
            .map(parse_integer)
            .collect::<Result<Vec<_>>>()?;
        BlockWeight::new(composition.clone(), entries)
    }

    pub fn composition(&self) -> &Composition {
        &self.composition
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.entries
    }

    /// Entry of block `j` (1-based).
    pub fn entry(&self, j: usize) -> i64 {
        self.entries[j - 1]
    }

    pub fn k(&self) -> usize {
        self.entries.len()
    }

    /// Same composition, new entries. Crate-internal: callers guarantee the
    /// length and that the entries stay in range.
    pub(crate) fn with_entries(&self, entries: Vec<i64>) -> BlockWeight {
        debug_assert_eq!(entries.len(), self.k());
        BlockWeight {
            composition: self.composition.clone(),
            entries,
        }
    }

    pub(crate) fn require_same_composition(&self, other: &BlockWeight) -> Result<()> {
        if self.composition.same_as(&other.composition) {
            Ok(())
        } else {
            Err(Error::CompositionMismatch)
        }
    }
}

impl fmt::Display for BlockWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for BlockWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.composition, self)
    }
}

fn strip_delimiters(s: &str, open: char, close: char) -> &str {
    let t = s.trim();
    match t.strip_prefix(open).and_then(|u| u.strip_suffix(close)) {
        Some(inner) => inner,
        None => t,
    }
}

fn split_list(body: &str) -> impl Iterator<Item = &str> {
    let empty = body.trim().is_empty();
    body.split(',').map(str::trim).filter(move |_| !empty)
}

/// Integers pass; numbers with a fractional part are a domain error
/// ([`Error::NonIntegral`]); anything else is a parse error.
pub fn parse_integer(tok: &str) -> Result<i64> {
    let tok = tok.trim();
    if let Ok(v) = tok.parse::<i64>() {
        return Ok(v);
    }
    if let Ok(x) = tok.parse::<f64>() {
        if x.is_finite() && x.fract() == 0.0 {
            if x.abs() > ENTRY_BOUND as f64 {
                return Err(Error::EntryOutOfRange {
                    value: x as i64,
                    bound: ENTRY_BOUND,
                });
            }
            return Ok(x as i64);
        }
        if x.is_finite() {
            return Err(Error::NonIntegral(tok.to_string()));
        }
    }
    if let Some((a, b)) = tok.split_once('/') {
        if let (Ok(a), Ok(b)) = (a.trim().parse::<i64>(), b.trim().parse::<i64>()) {
            if b != 0 && a % b == 0 {
                return Ok(a / b);
            }
            if b != 0 {
                return Err(Error::NonIntegral(tok.to_string()));
            }
        }
    }
    Err(Error::Parse(tok.to_string()))
}

/// Coefficients of a weight in the basis `e_1, ..., e_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FullWeight {
    pub coords: Vec<i64>,
}

/// Coordinates `l_j - s + 1` at position `n*_{j-1} + s`, `1 <= s <= n_j`.
pub fn expand(w: &BlockWeight) -> FullWeight {
    let comp = w.composition();
    let mut coords = Vec::with_capacity(comp.n());
    for (&l, &size) in w.entries().iter().zip(comp.parts()) {
        coords.extend((0..size as i64).map(|s| l - s));
    }
    FullWeight { coords }
}

/// Inverse of [`expand`]; fails with `NotScalar` when some block does not
/// descend by exactly one.
pub fn contract(f: &FullWeight, c: &Composition) -> Result<BlockWeight> {
    if f.coords.len() != c.n() {
        return Err(Error::LengthMismatch {
            expected: c.n(),
            got: f.coords.len(),
        });
    }
    let mut entries = Vec::with_capacity(c.k());
    for j in 1..=c.k() {
        let block = &f.coords[c.offset(j - 1)..c.offset(j)];
        if block.windows(2).any(|p| p[0].checked_sub(p[1]) != Some(1)) {
            return Err(Error::NotScalar { block: j });
        }
        entries.push(block[0]);
    }
    BlockWeight::new(c.clone(), entries)
}

/// Prefix sums of `expand(target) - expand(source)` in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootConeReport {
    /// `l_1, ..., l_{n-1}`.
    pub partial_sums: Vec<i64>,
    /// The full sum `l_n` vanishes.
    pub closes: bool,
    /// Every `l_m >= 0`.
    pub nonnegative: bool,
}

impl RootConeReport {
    /// The difference is a non-negative integer combination of simple roots.
    pub fn in_cone(&self) -> bool {
        self.closes && self.nonnegative
    }

    /// 1-based position of the first negative partial sum.
    pub fn first_negative(&self) -> Option<usize> {
        self.partial_sums.iter().position(|&l| l < 0).map(|m| m + 1)
    }
}

pub fn simple_root_cone(target: &BlockWeight, source: &BlockWeight) -> Result<RootConeReport> {
    target.require_same_composition(source)?;
    let (t, s) = (expand(target), expand(source));
    let mut acc = 0i64;
    let mut partial_sums = Vec::with_capacity(t.coords.len());
    for (a, b) in t.coords.iter().zip(&s.coords) {
        acc += a - b;
        partial_sums.push(acc);
    }
    let closes = partial_sums.pop().is_none_or(|last| last == 0);
    let nonnegative = partial_sums.iter().all(|&l| l >= 0);
    Ok(RootConeReport {
        partial_sums,
        closes,
        nonnegative,
    })
}

/// Within every class `I_r` the entries are non-decreasing left to right.
pub fn is_theta_antidominant(w: &BlockWeight) -> bool {
    w.composition().classes().iter().all(|class| {
        class
            .positions
            .windows(2)
            .all(|p| w.entry(p[0]) <= w.entry(p[1]))
    })
}

/// The unique antidominant `l` in the orbit of `w`, together with `x` such
/// that `apply(x, l) == w`.
pub fn antidominant_representative(w: &BlockWeight) -> (BlockWeight, ThetaWeylElement) {
    let comp = w.composition();
    let mut entries = w.entries().to_vec();
    let mut image = vec![0usize; comp.k()];
    for class in comp.classes() {
        let mut order = class.positions.clone();
        order.sort_by_key(|&j| (w.entry(j), j));
        for (&slot, &from) in class.positions.iter().zip(&order) {
            entries[slot - 1] = w.entry(from);
            image[slot - 1] = from - 1;
        }
    }
    let x = ThetaWeylElement::from_images(comp.clone(), image)
        .expect("per-class sort is block-size preserving");
    (w.with_entries(entries), x)
}

/// Per-class multisets of `a` and `b` coincide.
pub fn same_orbit(a: &BlockWeight, b: &BlockWeight) -> Result<bool> {
    a.require_same_composition(b)?;
    Ok(a.composition().classes().iter().all(|class| {
        let mut xs: Vec<i64> = class.positions.iter().map(|&j| a.entry(j)).collect();
        let mut ys: Vec<i64> = class.positions.iter().map(|&j| b.entry(j)).collect();
        xs.sort_unstable();
        ys.sort_unstable();
        xs == ys
    }))
}
