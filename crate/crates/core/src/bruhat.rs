//! The Bruhat-type order `<=_Theta` on a `W(Theta)`-orbit.
//!
//! `nu <= mu` when `mu` can be walked down to `nu` by elementary moves
//! `eta -> sigma_{p,q} eta` with `p < q`, `n_p = n_q` and `eta_p > eta_q`.
//! Two routes decide it: a per-class tableau comparison ([`leq_theta`]) and
//! a breadth-first search over the orbit graph ([`leq_bruteforce`]).

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::obstruction::{witness_from_failure, Witness};
use crate::weights::{antidominant_representative, same_orbit, BlockWeight, Composition};
use crate::weyl::{enumerate_orbit, orbit_size};

/// Tableau of one class `I_r` for one orbit element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassTableau {
    pub class_size: usize,
    /// `I_r`, 1-based and ascending.
    pub positions: Vec<usize>,
    /// Distinct values `eta_1 < ... < eta_M` of the class.
    pub levels: Vec<i64>,
    /// `rows[i]` lists `t^{i+1}_{(r),1} < ... ` i.e. the positions whose
    /// entry is at least `levels[i]`.
    pub rows: Vec<Vec<usize>>,
}

impl ClassTableau {
    /// `t^level_{(r),slot}`, both 1-based.
    pub fn t(&self, level: usize, slot: usize) -> usize {
        self.rows[level - 1][slot - 1]
    }

    /// `N_r^level`.
    pub fn row_len(&self, level: usize) -> usize {
        self.rows[level - 1].len()
    }
}

#[derive(Debug, Clone)]
struct ClassLevels {
    size: usize,
    /// 0-based block positions.
    positions: Vec<usize>,
    levels: Vec<i64>,
}

/// First failing tableau comparison inside one class: the maximal failing
/// level and the minimal failing slot at that level (both 1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct TableauFailure {
    pub class_size: usize,
    pub level: usize,
    pub slot: usize,
    /// `t^level_slot` of the source, a 1-based block index.
    pub position: usize,
    pub threshold: i64,
}

/// Tableau levels of one orbit, computed once from its antidominant
/// representative. Immutable, so it can be shared freely.
#[derive(Debug, Clone)]
pub struct TableauLevels {
    representative: BlockWeight,
    classes: Vec<ClassLevels>,
}

impl TableauLevels {
    pub fn new(x: &BlockWeight) -> Self {
        let (lambda, _) = antidominant_representative(x);
        let classes = lambda
            .composition()
            .classes()
            .iter()
            .map(|class| {
                let mut levels: Vec<i64> =
                    class.positions.iter().map(|&j| lambda.entry(j)).collect();
                levels.dedup();
                ClassLevels {
                    size: class.size,
                    positions: class.positions.iter().map(|j| j - 1).collect(),
                    levels,
                }
            })
            .collect();
        TableauLevels {
            representative: lambda,
            classes,
        }
    }

    /// The antidominant representative of the orbit.
    pub fn representative(&self) -> &BlockWeight {
        &self.representative
    }

    pub fn contains(&self, x: &BlockWeight) -> bool {
        same_orbit(x, &self.representative).unwrap_or(false)
    }

    pub fn tableaux(&self, x: &BlockWeight) -> Vec<ClassTableau> {
        let e = x.entries();
        self.classes
            .iter()
            .map(|cl| ClassTableau {
                class_size: cl.size,
                positions: cl.positions.iter().map(|j| j + 1).collect(),
                levels: cl.levels.clone(),
                rows: cl
                    .levels
                    .iter()
                    .map(|&eta| {
                        cl.positions
                            .iter()
                            .filter(|&&j| e[j] >= eta)
                            .map(|j| j + 1)
                            .collect()
                    })
                    .collect(),
            })
            .collect()
    }

    fn class_leq(cl: &ClassLevels, src: &[i64], tgt: &[i64]) -> bool {
        cl.levels.iter().all(|&eta| {
            let s = cl.positions.iter().filter(|&&j| src[j] >= eta);
            let t = cl.positions.iter().filter(|&&j| tgt[j] >= eta);
            s.zip(t).all(|(a, b)| a >= b)
        })
    }

    /// One verdict per class `I_r`, evaluated independently, as `(r, holds)`.
    /// Both weights are assumed to lie in this orbit.
    pub fn class_verdicts(&self, src: &BlockWeight, tgt: &BlockWeight) -> Vec<(usize, bool)> {
        self.classes
            .iter()
            .map(|cl| (cl.size, Self::class_leq(cl, src.entries(), tgt.entries())))
            .collect()
    }

    /// `src <=_Theta tgt` by the tableau criterion. Both weights are assumed
    /// to lie in this orbit.
    pub fn leq(&self, src: &BlockWeight, tgt: &BlockWeight) -> bool {
        self.leq_entries(src.entries(), tgt.entries())
    }

    pub(crate) fn leq_entries(&self, src: &[i64], tgt: &[i64]) -> bool {
        self.classes.iter().all(|cl| Self::class_leq(cl, src, tgt))
    }

    /// Smallest failing class, maximal failing level, minimal failing slot.
    pub(crate) fn first_failure(
        &self,
        src: &BlockWeight,
        tgt: &BlockWeight,
    ) -> Option<TableauFailure> {
        let (se, te) = (src.entries(), tgt.entries());
        for cl in &self.classes {
            for (a, &eta) in cl.levels.iter().enumerate().rev() {
                let s = cl.positions.iter().filter(|&&j| se[j] >= eta);
                let t = cl.positions.iter().filter(|&&j| te[j] >= eta);
                if let Some((b, (&sj, _))) = s.zip(t).enumerate().find(|(_, (a, b))| a < b) {
                    return Some(TableauFailure {
                        class_size: cl.size,
                        level: a + 1,
                        slot: b + 1,
                        position: sj + 1,
                        threshold: eta,
                    });
                }
            }
        }
        None
    }

    /// Greedy factorization of `src <= tgt` using this orbit's levels.
    pub fn factorize(&self, src: &BlockWeight, tgt: &BlockWeight) -> Result<Vec<ElementaryStep>> {
        src.require_same_composition(tgt)?;
        if !self.contains(src) || !self.contains(tgt) {
            return Err(Error::NotSameOrbit);
        }
        if !self.leq(src, tgt) {
            return Err(Error::NotComparable);
        }
        match greedy_chain(src, tgt, |a, b| self.leq(a, b)) {
            Some(chain) => Ok(chain),
            None => search_chain(src, tgt, |a, b| self.leq(a, b)).ok_or(Error::NotComparable),
        }
    }

    /// The `(c, s)` witness for a non-comparable pair in this orbit.
    pub fn find_witness(&self, src: &BlockWeight, tgt: &BlockWeight) -> Result<Witness> {
        src.require_same_composition(tgt)?;
        if !self.contains(src) || !self.contains(tgt) {
            return Err(Error::NotSameOrbit);
        }
        match self.first_failure(src, tgt) {
            None => Err(Error::Comparable),
            Some(f) => witness_from_failure(src, tgt, f),
        }
    }
}

/// One tableau per class `I_r`, with levels taken from the orbit.
pub fn class_tableaux(x: &BlockWeight) -> Vec<ClassTableau> {
    TableauLevels::new(x).tableaux(x)
}

fn orbit_levels(src: &BlockWeight, tgt: &BlockWeight) -> Result<TableauLevels> {
    src.require_same_composition(tgt)?;
    if !same_orbit(src, tgt)? {
        return Err(Error::NotSameOrbit);
    }
    Ok(TableauLevels::new(tgt))
}

/// `src <=_Theta tgt`, decided class by class with tableaux.
pub fn leq_theta(src: &BlockWeight, tgt: &BlockWeight) -> Result<bool> {
    Ok(orbit_levels(src, tgt)?.leq(src, tgt))
}

/// Per-class verdicts `(r, holds)`; [`leq_theta`] is their conjunction.
pub fn class_verdicts(src: &BlockWeight, tgt: &BlockWeight) -> Result<Vec<(usize, bool)>> {
    Ok(orbit_levels(src, tgt)?.class_verdicts(src, tgt))
}

/// One elementary move `before -> after = sigma_{p,q} before`, with
/// `before_p - before_q > 0`. Indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementaryStep {
    pub p: usize,
    pub q: usize,
    pub before: BlockWeight,
    pub after: BlockWeight,
}

impl ElementaryStep {
    /// Checks `p < q`, `n_p = n_q`, strict descent and `after = sigma_{p,q} before`.
    pub fn is_valid(&self) -> bool {
        let c = self.before.composition();
        if self.p == 0
            || self.p >= self.q
            || self.q > c.k()
            || c.size_of(self.p) != c.size_of(self.q)
        {
            return false;
        }
        if self.before.entry(self.p) <= self.before.entry(self.q) {
            return false;
        }
        let mut swapped = self.before.entries().to_vec();
        swapped.swap(self.p - 1, self.q - 1);
        self.after.composition() == c && self.after.entries() == swapped.as_slice()
    }
}

fn descents(x: &BlockWeight) -> impl Iterator<Item = (usize, usize)> + '_ {
    let c = x.composition();
    let e = x.entries();
    let k = c.k();
    (0..k).flat_map(move |p| {
        (p + 1..k)
            .filter(move |&q| c.parts()[p] == c.parts()[q] && e[p] > e[q])
            .map(move |q| (p + 1, q + 1))
    })
}

fn step(x: &BlockWeight, p: usize, q: usize) -> ElementaryStep {
    let mut e = x.entries().to_vec();
    e.swap(p - 1, q - 1);
    ElementaryStep {
        p,
        q,
        before: x.clone(),
        after: x.with_entries(e),
    }
}

/// All moves down from `x`, in lexicographic `(p, q)` order.
pub fn up_moves(x: &BlockWeight) -> Vec<ElementaryStep> {
    descents(x).map(|(p, q)| step(x, p, q)).collect()
}

fn greedy_chain<F>(src: &BlockWeight, tgt: &BlockWeight, leq: F) -> Option<Vec<ElementaryStep>>
where
    F: Fn(&BlockWeight, &BlockWeight) -> bool,
{
    let mut chain = Vec::new();
    let mut current = tgt.clone();
    while current != *src {
        let next = descents(&current)
            .map(|(p, q)| step(&current, p, q))
            .find(|s| leq(src, &s.after))?;
        current = next.after.clone();
        chain.push(next);
    }
    Some(chain)
}

/// Breadth-first search for a shortest chain from `tgt` down to `src`,
/// restricted to the interval above `src`.
fn search_chain<F>(src: &BlockWeight, tgt: &BlockWeight, leq: F) -> Option<Vec<ElementaryStep>>
where
    F: Fn(&BlockWeight, &BlockWeight) -> bool,
{
    let mut parent: HashMap<BlockWeight, Option<ElementaryStep>> = HashMap::new();
    parent.insert(tgt.clone(), None);
    let mut queue = VecDeque::from([tgt.clone()]);
    while let Some(x) = queue.pop_front() {
        if x == *src {
            let mut chain = Vec::new();
            let mut cur = x;
            while let Some(Some(s)) = parent.get(&cur) {
                let before = s.before.clone();
                chain.push(s.clone());
                cur = before;
            }
            chain.reverse();
            return Some(chain);
        }
        for (p, q) in descents(&x) {
            let s = step(&x, p, q);
            if !parent.contains_key(&s.after) && leq(src, &s.after) {
                parent.insert(s.after.clone(), Some(s.clone()));
                queue.push_back(s.after);
            }
        }
    }
    None
}

/// A chain of elementary moves from `tgt` down to `src`: greedy, taking the
/// lexicographically smallest admissible `(p, q)` at every step, with a
/// breadth-first fallback.
pub fn factorize(src: &BlockWeight, tgt: &BlockWeight) -> Result<Vec<ElementaryStep>> {
    orbit_levels(src, tgt)?.factorize(src, tgt)
}

/// Shortest chain from `tgt` down to `src` by breadth-first search over the
/// orbit graph; the same search the greedy factorization falls back to.
pub fn factorize_by_search(src: &BlockWeight, tgt: &BlockWeight) -> Result<Vec<ElementaryStep>> {
    let levels = orbit_levels(src, tgt)?;
    search_chain(src, tgt, |a, b| levels.leq(a, b)).ok_or(Error::NotComparable)
}

/// Reachability of `src` from `tgt` by elementary moves, found by plain
/// breadth-first search. Independent of the tableau criterion.
pub fn leq_bruteforce(src: &BlockWeight, tgt: &BlockWeight, cap: usize) -> Result<bool> {
    src.require_same_composition(tgt)?;
    if !same_orbit(src, tgt)? {
        return Err(Error::NotSameOrbit);
    }
    check_cap(tgt, cap)?;
    Ok(breadth_first(tgt, Some(src.entries())).is_none())
}

/// Every weight reachable from `tgt` by elementary moves (`tgt` included),
/// by the same search as [`leq_bruteforce`].
pub fn down_set_bruteforce(tgt: &BlockWeight, cap: usize) -> Result<HashSet<Vec<i64>>> {
    check_cap(tgt, cap)?;
    Ok(breadth_first(tgt, None).unwrap_or_default())
}

fn check_cap(x: &BlockWeight, cap: usize) -> Result<()> {
    let size = orbit_size(x);
    if size > cap as u128 {
        return Err(Error::OrbitTooLarge { size, cap });
    }
    Ok(())
}

/// Explores down from `tgt`; stops early with `None` once `goal` is seen,
/// otherwise returns everything visited.
fn breadth_first(tgt: &BlockWeight, goal: Option<&[i64]>) -> Option<HashSet<Vec<i64>>> {
    let mut seen: HashSet<Vec<i64>> = HashSet::from([tgt.entries().to_vec()]);
    let mut queue = VecDeque::from([tgt.entries().to_vec()]);
    let parts = tgt.composition().parts();
    while let Some(x) = queue.pop_front() {
        if goal == Some(x.as_slice()) {
            return None;
        }
        for p in 0..x.len() {
            for q in p + 1..x.len() {
                if parts[p] == parts[q] && x[p] > x[q] {
                    let mut y = x.clone();
                    y.swap(p, q);
                    if seen.insert(y.clone()) {
                        queue.push_back(y);
                    }
                }
            }
        }
    }
    Some(seen)
}

/// Why a homomorphism does or does not exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Reason {
    Comparable,
    NotSameOrbit,
    NotComparable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomDecision {
    pub exists: bool,
    pub reason: Reason,
    /// Target-to-source chain, present iff `exists`.
    pub chain: Option<Vec<ElementaryStep>>,
    /// Present iff the pair shares an orbit but is not comparable.
    pub witness: Option<Witness>,
}

/// Is there a non-zero homomorphism from the module at `src` into the one
/// at `tgt`?
pub fn decide_hom(src: &BlockWeight, tgt: &BlockWeight) -> Result<HomDecision> {
    src.require_same_composition(tgt)?;
    if !same_orbit(src, tgt)? {
        return Ok(HomDecision {
            exists: false,
            reason: Reason::NotSameOrbit,
            chain: None,
            witness: None,
        });
    }
    let levels = TableauLevels::new(tgt);
    if levels.leq(src, tgt) {
        Ok(HomDecision {
            exists: true,
            reason: Reason::Comparable,
            chain: Some(levels.factorize(src, tgt)?),
            witness: None,
        })
    } else {
        Ok(HomDecision {
            exists: false,
            reason: Reason::NotComparable,
            chain: None,
            witness: Some(levels.find_witness(src, tgt)?),
        })
    }
}

/// Square boolean relation stored as bit rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    len: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Relation {
    pub fn new(len: usize) -> Self {
        let words = len.div_ceil(64).max(1);
        Relation {
            len,
            words,
            bits: vec![0; len * words],
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    pub fn set(&mut self, a: usize, b: usize) {
        self.bits[a * self.words + b / 64] |= 1 << (b % 64);
    }

    fn row(&self, a: usize) -> &[u64] {
        &self.bits[a * self.words..(a + 1) * self.words]
    }

    /// Row `dst |= row src`.
    fn union_row(&mut self, dst: usize, src: usize) {
        let w = self.words;
        for i in 0..w {
            let v = self.bits[src * w + i];
            self.bits[dst * w + i] |= v;
        }
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.len).all(|a| self.get(a, a))
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.len).all(|a| (0..a).all(|b| !(self.get(a, b) && self.get(b, a))))
    }

    /// With `a R b` read as a row bit, transitivity is `row b ⊆ row a`
    /// whenever `a R b`.
    pub fn is_transitive(&self) -> bool {
        (0..self.len).all(|a| {
            (0..self.len).filter(|&b| self.get(a, b)).all(|b| {
                self.row(b)
                    .iter()
                    .zip(self.row(a))
                    .all(|(rb, ra)| rb & !ra == 0)
            })
        })
    }

    /// Pairs `(a, b)`, `a != b`, with `a R b` and no `c` strictly between.
    pub fn transitive_reduction(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.len {
            for b in 0..self.len {
                if a == b || !self.get(a, b) {
                    continue;
                }
                let between =
                    (0..self.len).any(|c| c != a && c != b && self.get(a, c) && self.get(c, b));
                if !between {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

/// An enumerated orbit with its elementary-move graph.
#[derive(Debug, Clone)]
pub struct OrbitGraph {
    pub nodes: Vec<BlockWeight>,
    index: HashMap<Vec<i64>, usize>,
    /// `down[i]` holds `(p, q, j)`: node `j` is `sigma_{p,q}` of node `i`,
    /// in lexicographic `(p, q)` order.
    pub down: Vec<Vec<(usize, usize, usize)>>,
}

impl OrbitGraph {
    pub fn new(x: &BlockWeight, cap: usize) -> Result<Self> {
        let nodes = enumerate_orbit(x, cap)?;
        let index: HashMap<Vec<i64>, usize> = nodes
            .iter()
            .enumerate()
            .map(|(i, w)| (w.entries().to_vec(), i))
            .collect();
        let down = nodes
            .iter()
            .map(|w| {
                descents(w)
                    .map(|(p, q)| {
                        let mut e = w.entries().to_vec();
                        e.swap(p - 1, q - 1);
                        (p, q, index[&e])
                    })
                    .collect()
            })
            .collect();
        Ok(OrbitGraph { nodes, index, down })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn index_of(&self, x: &BlockWeight) -> Option<usize> {
        self.index.get(x.entries()).copied()
    }

    /// `get(a, b)` iff node `a` is reachable from node `b` by moves down,
    /// i.e. `a <= b`.
    pub fn reachability(&self) -> Relation {
        // moves strictly drop the per-class inversion count, so processing
        // nodes by increasing inversions sees every lower node first
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| inversions(&self.nodes[i]));
        let mut below = Relation::new(self.len());
        for &b in &order {
            below.set(b, b);
            for &(_, _, c) in &self.down[b] {
                below.union_row(b, c);
            }
        }
        // below.get(b, a) means a <= b; transpose into the `a <= b` layout
        let mut le = Relation::new(self.len());
        for b in 0..self.len() {
            for a in 0..self.len() {
                if below.get(b, a) {
                    le.set(a, b);
                }
            }
        }
        le
    }

    /// The tableau order on the nodes, `get(a, b)` iff `a <= b`.
    pub fn tableau_order(&self, levels: &TableauLevels) -> Relation {
        let mut le = Relation::new(self.len());
        for a in 0..self.len() {
            for b in 0..self.len() {
                if levels.leq_entries(self.nodes[a].entries(), self.nodes[b].entries()) {
                    le.set(a, b);
                }
            }
        }
        le
    }
}

/// Number of pairs `p < q` in one class with `x_p > x_q`.
pub fn inversions(x: &BlockWeight) -> usize {
    let c = x.composition();
    let e = x.entries();
    c.classes()
        .iter()
        .map(|cl| {
            let pos = &cl.positions;
            (0..pos.len())
                .map(|i| {
                    (i + 1..pos.len())
                        .filter(|&j| e[pos[i] - 1] > e[pos[j] - 1])
                        .count()
                })
                .sum::<usize>()
        })
        .sum()
}

/// Cover relations of `<=_Theta` on one orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hasse {
    pub composition: Composition,
    /// Orbit elements in lexicographic order.
    pub nodes: Vec<BlockWeight>,
    /// `(upper, lower)` node indices, sorted.
    pub covers: Vec<(usize, usize)>,
}

impl Hasse {
    /// DOT digraph; edges run from the larger weight to the smaller one.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph bruhat {\n");
        for (i, w) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{w}\"];");
        }
        for &(u, l) in &self.covers {
            let _ = writeln!(out, "  n{u} -> n{l};");
        }
        out.push_str("}\n");
        out
    }
}

/// A move `b -> a` is a cover unless some other move down from `b` lands at
/// or above `a`; every strict interval `a < c < b` starts with such a move.
pub fn hasse(x: &BlockWeight, cap: usize) -> Result<Hasse> {
    let graph = OrbitGraph::new(x, cap)?;
    let levels = TableauLevels::new(x);
    let mut covers = Vec::new();
    for (b, moves) in graph.down.iter().enumerate() {
        for &(_, _, a) in moves {
            let shadowed = moves
                .iter()
                .any(|&(_, _, c)| c != a && levels.leq(&graph.nodes[a], &graph.nodes[c]));
            if !shadowed {
                covers.push((b, a));
            }
        }
    }
    covers.sort_unstable();
    covers.dedup();
    Ok(Hasse {
        composition: x.composition().clone(),
        nodes: graph.nodes,
        covers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{apply, sigma_pq, DEFAULT_ORBIT_CAP};

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn bw(parts: &[usize], entries: &[i64]) -> BlockWeight {
        BlockWeight::new(comp(parts), entries.to_vec()).unwrap()
    }

    const EX: [usize; 6] = [4, 1, 2, 1, 2, 4];
    const MU: [i64; 6] = [4, 3, -1, -4, 2, -2];
    const NU: [i64; 6] = [-2, -4, 2, 3, -1, 4];

    fn class(ts: &[ClassTableau], r: usize) -> &ClassTableau {
        ts.iter().find(|t| t.class_size == r).unwrap()
    }

    #[test]
    fn tableaux_of_the_worked_pair() {
        let nu = class_tableaux(&bw(&EX, &NU));
        let c2 = class(&nu, 2);
        assert_eq!(c2.positions, vec![3, 5]);
        assert_eq!(c2.levels, vec![-1, 2]);
        assert_eq!(c2.rows[1], vec![3]);
        assert_eq!(c2.t(2, 1), 3);

        let mu = class_tableaux(&bw(&EX, &MU));
        assert_eq!(class(&mu, 2).t(2, 1), 5);

        for t in nu.iter().chain(&mu) {
            assert_eq!(t.rows[0], t.positions);
            for pair in t.rows.windows(2) {
                assert!(pair[1].iter().all(|j| pair[0].contains(j)));
            }
        }
    }

    #[test]
    fn row_lengths_are_orbit_constants() {
        let lam = bw(&[1, 2, 1, 1, 2, 1], &[0, 1, 2, 2, 3, 3]);
        let base = class_tableaux(&lam);
        for x in enumerate_orbit(&lam, DEFAULT_ORBIT_CAP).unwrap() {
            let ts = class_tableaux(&x);
            for (a, b) in ts.iter().zip(&base) {
                let la: Vec<usize> = a.rows.iter().map(Vec::len).collect();
                let lb: Vec<usize> = b.rows.iter().map(Vec::len).collect();
                assert_eq!(la, lb);
            }
        }
    }

    #[test]
    fn leq_theta_examples() {
        let (mu, nu) = (bw(&EX, &MU), bw(&EX, &NU));
        assert!(!leq_theta(&nu, &mu).unwrap());
        assert!(leq_theta(&mu, &mu).unwrap());
        assert!(leq_theta(&bw(&[1, 1], &[0, 1]), &bw(&[1, 1], &[1, 0])).unwrap());
        assert_eq!(
            leq_theta(&bw(&[2, 1], &[0, 5]), &bw(&[2, 1], &[1, 5])),
            Err(Error::NotSameOrbit)
        );
    }

    #[test]
    fn bruteforce_examples() {
        let cap = DEFAULT_ORBIT_CAP;
        let mu = bw(&EX, &MU);
        assert!(leq_bruteforce(&mu, &mu, cap).unwrap());
        assert!(leq_bruteforce(&bw(&[2, 2], &[0, 1]), &bw(&[2, 2], &[1, 0]), cap).unwrap());
        assert!(!leq_bruteforce(&bw(&EX, &NU), &mu, cap).unwrap());
        assert!(matches!(
            leq_bruteforce(&mu, &mu, 4),
            Err(Error::OrbitTooLarge { size: 8, cap: 4 })
        ));
    }

    #[test]
    fn worked_orbit_oracle_agreement() {
        let lam = bw(&EX, &[-2, -4, -1, 3, 2, 4]);
        let orbit = enumerate_orbit(&lam, DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(orbit.len(), 8);
        for a in &orbit {
            for b in &orbit {
                assert_eq!(
                    leq_theta(a, b).unwrap(),
                    leq_bruteforce(a, b, DEFAULT_ORBIT_CAP).unwrap(),
                    "{a} vs {b}"
                );
            }
        }
    }

    #[test]
    fn up_moves_examples() {
        let moves: Vec<(usize, usize)> =
            up_moves(&bw(&EX, &MU)).iter().map(|s| (s.p, s.q)).collect();
        assert_eq!(moves, vec![(1, 6), (2, 4)]);
        assert!(up_moves(&bw(&EX, &[-2, -4, -1, 3, 2, 4])).is_empty());
        let moves = up_moves(&bw(&[1, 1], &[1, 0]));
        assert_eq!(moves.len(), 1);
        assert_eq!((moves[0].p, moves[0].q), (1, 2));
        assert_eq!(moves[0].after.entries(), &[0, 1]);
        for s in up_moves(&bw(&EX, &MU)) {
            assert!(s.is_valid());
            let sigma = sigma_pq(s.before.composition(), s.p, s.q).unwrap();
            assert_eq!(apply(&sigma, &s.before).unwrap(), s.after);
        }
    }

    fn replay(tgt: &BlockWeight, chain: &[ElementaryStep]) -> BlockWeight {
        let mut cur = tgt.clone();
        for s in chain {
            assert!(s.is_valid());
            assert_eq!(s.before, cur);
            let sigma = sigma_pq(cur.composition(), s.p, s.q).unwrap();
            cur = apply(&sigma, &cur).unwrap();
        }
        cur
    }

    #[test]
    fn factorize_examples() {
        let mu = bw(&EX, &MU);
        assert!(factorize(&mu, &mu).unwrap().is_empty());

        let chain = factorize(&bw(&[1, 1], &[0, 1]), &bw(&[1, 1], &[1, 0])).unwrap();
        assert_eq!(chain.len(), 1);
        assert_eq!((chain[0].p, chain[0].q), (1, 2));

        let src = bw(&[1, 1, 1], &[0, 1, 2]);
        let tgt = bw(&[1, 1, 1], &[2, 1, 0]);
        let chain = factorize(&src, &tgt).unwrap();
        let pairs: Vec<(usize, usize)> = chain.iter().map(|s| (s.p, s.q)).collect();
        assert_eq!(pairs, vec![(1, 2), (1, 3), (2, 3)]);
        assert_eq!(replay(&tgt, &chain), src);

        // the search route finds the single reflection
        let chain = factorize_by_search(&src, &tgt).unwrap();
        assert_eq!(chain.len(), 1);
        assert_eq!(replay(&tgt, &chain), src);

        assert_eq!(factorize(&bw(&EX, &NU), &mu), Err(Error::NotComparable));
        assert_eq!(
            factorize(&bw(&[2, 1], &[0, 5]), &bw(&[2, 1], &[1, 5])),
            Err(Error::NotSameOrbit)
        );
    }

    #[test]
    fn decide_examples() {
        let d = decide_hom(&bw(&EX, &NU), &bw(&EX, &MU)).unwrap();
        assert!(!d.exists);
        assert_eq!(d.reason, Reason::NotComparable);
        let w = d.witness.unwrap();
        assert_eq!((w.c, w.s), (2, 3));
        assert!(d.chain.is_none());

        let mu = bw(&EX, &MU);
        let d = decide_hom(&mu, &mu).unwrap();
        assert!(d.exists);
        assert_eq!(d.reason, Reason::Comparable);
        assert_eq!(d.chain, Some(vec![]));

        let d = decide_hom(&bw(&[2, 1], &[0, 5]), &bw(&[2, 1], &[1, 5])).unwrap();
        assert!(!d.exists);
        assert_eq!(d.reason, Reason::NotSameOrbit);
        assert!(d.witness.is_none());

        assert_eq!(
            decide_hom(&bw(&[2, 1], &[0, 5]), &bw(&[1, 2], &[0, 5])),
            Err(Error::CompositionMismatch)
        );
    }

    #[test]
    fn hasse_examples() {
        let h = hasse(&bw(&[1, 1], &[0, 1]), DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(h.nodes.len(), 2);
        assert_eq!(h.nodes[h.covers[0].0].entries(), &[1, 0]);
        assert_eq!(h.nodes[h.covers[0].1].entries(), &[0, 1]);
        assert_eq!(h.covers.len(), 1);

        let h = hasse(&bw(&[2, 2], &[5, 5]), DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(h.nodes.len(), 1);
        assert!(h.covers.is_empty());

        let dot = hasse(&bw(&[1, 1], &[0, 1]), DEFAULT_ORBIT_CAP)
            .unwrap()
            .to_dot();
        assert!(dot.contains("label=\"[1,0]\""));
        assert!(dot.contains("n1 -> n0;"));
    }

    #[test]
    fn hasse_matches_reduction_of_oracle_reachability() {
        for (parts, lam) in [
            (EX.to_vec(), vec![-2, -4, -1, 3, 2, 4]),
            (vec![1, 1, 1, 1], vec![0, 1, 2, 3]),
            (vec![1, 1, 1, 1, 1], vec![0, 0, 1, 2, 2]),
            (vec![2, 1, 2, 1, 2], vec![0, 0, 1, 1, 2]),
        ] {
            let lam = bw(&parts, &lam);
            let graph = OrbitGraph::new(&lam, DEFAULT_ORBIT_CAP).unwrap();
            let reach = graph.reachability();
            let mut expected: Vec<(usize, usize)> = reach
                .transitive_reduction()
                .into_iter()
                .map(|(a, b)| (b, a))
                .collect();
            expected.sort_unstable();
            let h = hasse(&lam, DEFAULT_ORBIT_CAP).unwrap();
            assert_eq!(h.nodes, graph.nodes);
            assert_eq!(h.covers, expected, "{lam:?}");
            // covers are exactly one inversion apart
            for &(u, l) in &h.covers {
                assert_eq!(inversions(&h.nodes[u]), inversions(&h.nodes[l]) + 1);
            }
        }
    }

    #[test]
    fn relation_axioms() {
        let mut r = Relation::new(3);
        for i in 0..3 {
            r.set(i, i);
        }
        r.set(0, 1);
        r.set(1, 2);
        assert!(r.is_reflexive() && r.is_antisymmetric());
        assert!(!r.is_transitive());
        r.set(0, 2);
        assert!(r.is_transitive());
        assert_eq!(r.transitive_reduction(), vec![(0, 1), (1, 2)]);
        r.set(1, 0);
        assert!(!r.is_antisymmetric());
    }
}
