//! Weight-level shadow of the translation-functor argument.
//!
//! A non-comparable pair `(tgt, src)` with witness `(c, s)` is pushed through
//! five steps of shifts `x -> x ± sum_{j in S} f_j`, where `f_j` moves every
//! coordinate of block `j` by one. Each shift is applied on both sides at
//! once (the source side uses the image of `S` under the element relating
//! the two sides) and must pass the matching legality test. The walk ends at
//! the degenerate pair of the witness.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::obstruction::{check_witness, collapse, degenerate, relating_element, Witness};
use crate::weights::{expand, BlockWeight};
use crate::weyl::ThetaWeylElement;

/// Counting sets of one weight at one level `g`. Block indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelCounts {
    pub g: i64,
    /// Blocks whose coordinate run `x_i, ..., x_i - n_i + 1` contains `g`.
    pub phi: Vec<usize>,
    /// Blocks whose top coordinate is `g`.
    pub psi_top: Vec<usize>,
    /// Blocks whose bottom coordinate is `g`.
    pub psi_bot: Vec<usize>,
    /// Number of full coordinates equal to `g`.
    pub norm: usize,
}

fn bottom(x: &BlockWeight, i: usize) -> i64 {
    x.entry(i) - x.composition().size_of(i) as i64 + 1
}

fn phi(x: &BlockWeight, g: i64) -> Vec<usize> {
    (1..=x.k())
        .filter(|&i| x.entry(i) >= g && g >= bottom(x, i))
        .collect()
}

fn psi_top(x: &BlockWeight, g: i64) -> Vec<usize> {
    (1..=x.k()).filter(|&i| x.entry(i) == g).collect()
}

fn psi_bot(x: &BlockWeight, g: i64) -> Vec<usize> {
    (1..=x.k()).filter(|&i| bottom(x, i) == g).collect()
}

pub fn level_counts(x: &BlockWeight, g: i64) -> LevelCounts {
    let phi = phi(x, g);
    LevelCounts {
        g,
        norm: phi.len(),
        psi_top: psi_top(x, g),
        psi_bot: psi_bot(x, g),
        phi,
    }
}

/// Multiplicity of `g` among the expanded coordinates.
pub fn coordinate_count(x: &BlockWeight, g: i64) -> usize {
    expand(x).coords.iter().filter(|&&v| v == g).count()
}

fn check_indices(x: &BlockWeight, s: &[usize]) -> Result<()> {
    s.iter().try_for_each(|&i| x.composition().check_index(i))
}

fn rest_of_phi(x: &BlockWeight, g: i64, s: &[usize]) -> Vec<usize> {
    phi(x, g).into_iter().filter(|i| !s.contains(i)).collect()
}

/// Legality of lowering the blocks `s ⊆ Psi-top(x; g)`: the smallest bottom
/// coordinate over `s` beats the largest over the rest of `Phi(x; g)`.
/// Vacuous when the rest is empty.
pub fn check_down(x: &BlockWeight, g: i64, s: &[usize]) -> Result<bool> {
    check_indices(x, s)?;
    let top = psi_top(x, g);
    if !s.iter().all(|i| top.contains(i)) {
        return Err(Error::NotInPsiTop { level: g });
    }
    let rest = rest_of_phi(x, g, s);
    if rest.is_empty() {
        return Ok(true);
    }
    let lhs = s.iter().map(|&i| bottom(x, i)).min();
    let rhs = rest.iter().map(|&j| bottom(x, j)).max();
    Ok(match (lhs, rhs) {
        (Some(l), Some(r)) => l > r,
        // min over an empty S is +infinity
        (None, _) => true,
        (_, None) => true,
    })
}

/// Legality of raising the blocks `s ⊆ Psi-bottom(x; g)`: the largest entry
/// over `s` stays below the smallest over the rest of `Phi(x; g)`. Vacuous
/// when the rest is empty.
pub fn check_up(x: &BlockWeight, g: i64, s: &[usize]) -> Result<bool> {
    check_indices(x, s)?;
    let bot = psi_bot(x, g);
    if !s.iter().all(|i| bot.contains(i)) {
        return Err(Error::NotInPsiBot { level: g });
    }
    let rest = rest_of_phi(x, g, s);
    if rest.is_empty() {
        return Ok(true);
    }
    let lhs = s.iter().map(|&i| x.entry(i)).max();
    let rhs = rest.iter().map(|&j| x.entry(j)).min();
    Ok(match (lhs, rhs) {
        (Some(l), Some(r)) => l < r,
        // max over an empty S is -infinity
        _ => true,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    #[serde(rename = "-")]
    Lower,
    #[serde(rename = "+")]
    Raise,
}

impl Direction {
    fn sign(self) -> i64 {
        match self {
            Direction::Lower => -1,
            Direction::Raise => 1,
        }
    }
}

/// `x ± sum_{j in s} f_j`.
pub fn shift(x: &BlockWeight, s: &[usize], direction: Direction) -> Result<BlockWeight> {
    check_indices(x, s)?;
    let mut e = x.entries().to_vec();
    for &j in s {
        e[j - 1] += direction.sign();
    }
    BlockWeight::new(x.composition().clone(), e)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    Step1,
    Step2,
    Step3,
    Step4,
    Step5,
}

impl Step {
    pub const ALL: [Step; 5] = [
        Step::Step1,
        Step::Step2,
        Step::Step3,
        Step::Step4,
        Step::Step5,
    ];

    pub fn number(self) -> usize {
        self as usize + 1
    }
}

/// Which legality test a stage needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Condition {
    /// Lowering test, [`check_down`].
    #[serde(rename = "a")]
    Down,
    /// Raising test, [`check_up`].
    #[serde(rename = "b")]
    Up,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightPair {
    pub target: BlockWeight,
    pub source: BlockWeight,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shift {
    pub direction: Direction,
    pub target_blocks: Vec<usize>,
    /// Image of `target_blocks` under the relating element.
    pub source_blocks: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Legality {
    pub condition: Condition,
    pub level: i64,
    pub target_ok: bool,
    pub source_ok: bool,
}

impl Legality {
    pub fn verdict(&self) -> bool {
        self.target_ok && self.source_ok
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stage {
    pub step: Step,
    pub d: i64,
    pub before: WeightPair,
    pub shift: Shift,
    pub legality: Legality,
    pub after: WeightPair,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationTrace {
    pub witness: Witness,
    /// `apply(relating, target) == source` at every stage.
    pub relating: ThetaWeylElement,
    /// Floor constant of the third step.
    pub b: i64,
    pub start: WeightPair,
    pub stages: Vec<Stage>,
    pub end: WeightPair,
}

/// Closed forms of the intermediate weights, evaluated entrywise on the
/// original entry `v` of a block of size `n`.
#[derive(Debug, Clone, Copy)]
struct Degeneration {
    c: i64,
    n_s: i64,
    n_max: i64,
    b: i64,
}

impl Degeneration {
    fn new(c: i64, n_s: usize, n_max: usize) -> Self {
        let (n_s, n_max) = (n_s as i64, n_max as i64);
        let b = if n_max > n_s { c - n_max + 1 } else { c - n_s };
        Degeneration { c, n_s, n_max, b }
    }

    /// Entries above `c + d` capped at `c + d`.
    fn capped(&self, v: i64, _n: i64, d: i64) -> i64 {
        v.min(self.c + d)
    }

    /// Entries `>= c` become `c`, or `c - 1` in blocks smaller than `n_s`.
    fn top_settled(&self, v: i64, n: i64) -> i64 {
        if v < self.c {
            v
        } else if n >= self.n_s {
            self.c
        } else {
            self.c - 1
        }
    }

    fn floored(&self, v: i64, n: i64, d: i64) -> i64 {
        if v >= self.c {
            return self.top_settled(v, n);
        }
        v.max(self.b - d + n - 1)
    }

    fn lifted(&self, v: i64, n: i64, d: i64) -> i64 {
        if v >= self.c {
            return self.top_settled(v, n);
        }
        let floor = self.c - self.n_s + n - 1 - d;
        if v >= floor {
            v
        } else if n > self.n_s + d {
            self.c
        } else {
            floor
        }
    }

    fn settled(&self, v: i64, n: i64, d: i64) -> i64 {
        let c = self.c;
        if n > self.n_s || (n == self.n_s && v >= c) {
            c
        } else if n == self.n_s || n > d || v >= c {
            c - 1
        } else {
            v.max(c + n - 2 - d)
        }
    }

    fn eval<F>(&self, x: &BlockWeight, f: F) -> BlockWeight
    where
        F: Fn(i64, i64) -> i64,
    {
        let comp = x.composition();
        let e = (1..=x.k())
            .map(|i| f(x.entry(i), comp.size_of(i) as i64))
            .collect();
        x.with_entries(e)
    }

    fn pair<F>(&self, tgt: &BlockWeight, src: &BlockWeight, f: F) -> WeightPair
    where
        F: Fn(i64, i64) -> i64,
    {
        WeightPair {
            target: self.eval(tgt, &f),
            source: self.eval(src, &f),
        }
    }
}

struct Walker<'a> {
    relating: &'a ThetaWeylElement,
    current: WeightPair,
    stages: Vec<Stage>,
}

impl Walker<'_> {
    fn expect(&self, closed: &WeightPair, what: &str) -> Result<()> {
        if self.current != *closed {
            return Err(Error::StageMismatch(format!(
                "{what}: walked to ({}, {}), closed form gives ({}, {})",
                self.current.target, self.current.source, closed.target, closed.source
            )));
        }
        Ok(())
    }

    /// One shift on both sides. `select` picks `S` from the weight and its
    /// level; the two sides are selected independently and must correspond.
    fn advance<F>(
        &mut self,
        step: Step,
        d: i64,
        level: i64,
        direction: Direction,
        select: F,
        next: WeightPair,
    ) -> Result<()>
    where
        F: Fn(&BlockWeight) -> Vec<usize>,
    {
        let before = self.current.clone();
        let target_blocks = select(&before.target);
        let source_blocks = select(&before.source);
        let mut mapped: Vec<usize> = target_blocks
            .iter()
            .map(|&i| self.relating.image_of(i))
            .collect();
        mapped.sort_unstable();
        if mapped != source_blocks {
            return Err(Error::StageMismatch(format!(
                "{step:?} d={d}: source shift set {source_blocks:?} is not the image {mapped:?}"
            )));
        }

        let (condition, target_ok, source_ok) = match direction {
            Direction::Lower => (
                Condition::Down,
                check_down(&before.target, level, &target_blocks)?,
                check_down(&before.source, level, &source_blocks)?,
            ),
            Direction::Raise => (
                Condition::Up,
                check_up(&before.target, level, &target_blocks)?,
                check_up(&before.source, level, &source_blocks)?,
            ),
        };
        if !(target_ok && source_ok) {
            return Err(Error::LegalityViolation(format!(
                "{step:?} d={d} at level {level}: target {target_ok}, source {source_ok}"
            )));
        }

        let after = WeightPair {
            target: shift(&before.target, &target_blocks, direction)?,
            source: shift(&before.source, &source_blocks, direction)?,
        };
        if after != next {
            return Err(Error::StageMismatch(format!(
                "{step:?} d={d}: shifting gives ({}, {}), closed form gives ({}, {})",
                after.target, after.source, next.target, next.source
            )));
        }
        if crate::weyl::apply(self.relating, &after.target)? != after.source {
            return Err(Error::StageMismatch(format!(
                "{step:?} d={d}: sides no longer related"
            )));
        }

        self.stages.push(Stage {
            step,
            d,
            before,
            shift: Shift {
                direction,
                target_blocks,
                source_blocks,
            },
            legality: Legality {
                condition,
                level,
                target_ok,
                source_ok,
            },
            after: after.clone(),
        });
        self.current = after;
        Ok(())
    }
}

/// Walks `(tgt, src)` down to the degenerate pair of `w`, recording every
/// shift together with its legality evidence.
pub fn degeneration_trace(
    tgt: &BlockWeight,
    src: &BlockWeight,
    w: &Witness,
) -> Result<TranslationTrace> {
    check_witness(src, tgt, w)?;
    let relating = relating_element(src, tgt)?;
    let comp = tgt.composition();
    let n_s = comp.size_of(w.s);
    let dg = Degeneration::new(w.c, n_s, comp.max_part());
    let c = dg.c;
    let size = |i: usize| comp.size_of(i);

    let start = WeightPair {
        target: tgt.clone(),
        source: src.clone(),
    };
    let mut walk = Walker {
        relating: &relating,
        current: start.clone(),
        stages: Vec::new(),
    };

    // Step 1: cap entries above c, one level at a time.
    let top = tgt.entries().iter().copied().max().unwrap_or(c);
    let d1 = (top - c).max(0);
    walk.expect(
        &dg.pair(tgt, src, |v, n| dg.capped(v, n, d1)),
        "step 1 start",
    )?;
    for d in (1..=d1).rev() {
        let g = c + d;
        let next = dg.pair(tgt, src, |v, n| dg.capped(v, n, d - 1));
        walk.advance(Step::Step1, d, g, Direction::Lower, |x| psi_top(x, g), next)?;
    }

    // Step 2: c-entries of blocks smaller than n_s drop to c - 1.
    let next = dg.pair(tgt, src, |v, n| dg.top_settled(v, n));
    walk.advance(
        Step::Step2,
        0,
        c,
        Direction::Lower,
        |x| {
            psi_top(x, c)
                .into_iter()
                .filter(|&i| size(i) < n_s)
                .collect()
        },
        next,
    )?;

    // Step 3: raise the floors b - d + n_i - 1.
    let d3 = (1..=tgt.k())
        .filter(|&i| tgt.entry(i) < c)
        .map(|i| dg.b + size(i) as i64 - 1 - tgt.entry(i))
        .max()
        .unwrap_or(0)
        .max(0);
    walk.expect(
        &dg.pair(tgt, src, |v, n| dg.floored(v, n, d3)),
        "step 3 start",
    )?;
    for d in (1..=d3).rev() {
        let g = dg.b - d;
        let next = dg.pair(tgt, src, |v, n| dg.floored(v, n, d - 1));
        walk.advance(Step::Step3, d, g, Direction::Raise, |x| psi_bot(x, g), next)?;
    }

    // Step 4: only when some block is bigger than n_s.
    if dg.n_max > dg.n_s {
        let d4 = c - dg.n_s - dg.b;
        walk.expect(
            &dg.pair(tgt, src, |v, n| dg.lifted(v, n, d4)),
            "step 4 start",
        )?;
        for d in (1..=d4).rev() {
            let g = c - dg.n_s - d;
            let next = dg.pair(tgt, src, |v, n| dg.lifted(v, n, d - 1));
            walk.advance(
                Step::Step4,
                d,
                g,
                Direction::Raise,
                |x| {
                    psi_bot(x, g)
                        .into_iter()
                        .filter(|&i| x.entry(i) < c)
                        .collect()
                },
                next,
            )?;
        }
    }

    // Step 5: blocks smaller than n_s climb to c - 1.
    let d5 = dg.n_s - 1;
    walk.expect(
        &dg.pair(tgt, src, |v, n| dg.settled(v, n, d5)),
        "step 5 start",
    )?;
    for d in (1..=d5).rev() {
        let g = c - 1 - d;
        let next = dg.pair(tgt, src, |v, n| dg.settled(v, n, d - 1));
        walk.advance(
            Step::Step5,
            d,
            g,
            Direction::Raise,
            |x| {
                psi_bot(x, g)
                    .into_iter()
                    .filter(|&i| size(i) as i64 <= d)
                    .collect()
            },
            next,
        )?;
    }

    let end = walk.current.clone();
    let expected = degenerate(tgt, src, w)?;
    let collapsed = WeightPair {
        target: collapse(tgt, c, n_s),
        source: collapse(src, c, n_s),
    };
    if end.target != expected.mu_bar || end.source != expected.nu_bar || end != collapsed {
        return Err(Error::StageMismatch(format!(
            "walk ends at ({}, {}), degenerate pair is ({}, {})",
            end.target, end.source, expected.mu_bar, expected.nu_bar
        )));
    }

    Ok(TranslationTrace {
        witness: *w,
        b: dg.b,
        start,
        stages: walk.stages,
        end,
        relating,
    })
}

fn boxed(x: &BlockWeight, marks: &[usize]) -> String {
    let body: Vec<String> = (1..=x.k())
        .map(|i| {
            if marks.contains(&i) {
                format!("|{}|", x.entry(i))
            } else {
                x.entry(i).to_string()
            }
        })
        .collect();
    format!("[{}]", body.join(","))
}

impl TranslationTrace {
    pub fn stages_of(&self, step: Step) -> impl Iterator<Item = &Stage> {
        self.stages.iter().filter(move |s| s.step == step)
    }

    /// Plain-text layout: per step, every pair before its shift with the
    /// shifted entries marked `|x|`, then the pair the step ends at.
    pub fn render_text(&self) -> String {
        let comp = self.start.target.composition();
        let n_s = comp.size_of(self.witness.s);
        let mut out = String::new();
        let _ = writeln!(
            out,
            "composition {comp}  c = {}  s = {}  n_s = {n_s}  b = {}",
            self.witness.c, self.witness.s, self.b
        );
        let _ = writeln!(out, "target {}", self.start.target);
        let _ = writeln!(out, "source {}", self.start.source);
        for step in Step::ALL {
            let stages: Vec<&Stage> = self.stages_of(step).collect();
            let _ = writeln!(out, "\nStep {}", step.number());
            if stages.is_empty() {
                let _ = writeln!(out, "  (skipped)");
                continue;
            }
            let last = stages[stages.len() - 1];
            let label = if step == Step::Step2 {
                "--".to_string()
            } else {
                (last.d - 1).to_string()
            };
            let mut lines: Vec<(String, String, String)> = stages
                .iter()
                .map(|st| {
                    (
                        st.d.to_string(),
                        boxed(&st.before.target, &st.shift.target_blocks),
                        boxed(&st.before.source, &st.shift.source_blocks),
                    )
                })
                .collect();
            lines.push((
                label,
                last.after.target.to_string(),
                last.after.source.to_string(),
            ));
            let width = lines.iter().map(|l| l.1.len()).max().unwrap_or(0);
            for (d, mu, nu) in lines {
                let _ = writeln!(out, "  d={d:<3} mu = {mu:<width$}   nu = {nu}");
            }
        }
        let _ = writeln!(
            out,
            "\nmu_bar = {}   nu_bar = {}",
            self.end.target, self.end.source
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::obstruction::find_witness;
    use crate::weights::Composition;
    use crate::weyl::{apply, sigma_pq};

    fn bw(parts: &[usize], entries: &[i64]) -> BlockWeight {
        BlockWeight::new(Composition::new(parts.to_vec()).unwrap(), entries.to_vec()).unwrap()
    }

    const EX: [usize; 6] = [4, 1, 2, 1, 2, 4];
    const MU: [i64; 6] = [4, 3, -1, -4, 2, -2];
    const NU: [i64; 6] = [-2, -4, 2, 3, -1, 4];

    #[test]
    fn level_counts_example() {
        let mu = bw(&EX, &MU);
        let lc = level_counts(&mu, 2);
        assert_eq!(lc.phi, vec![1, 5]);
        assert_eq!(lc.psi_top, vec![5]);
        assert!(lc.psi_bot.is_empty());
        assert_eq!(lc.norm, 2);
        assert_eq!(coordinate_count(&mu, 2), 2);

        let lc = level_counts(&mu, -100);
        assert!(lc.phi.is_empty());
        assert_eq!(lc.norm, 0);
    }

    #[test]
    fn norm_equals_coordinate_count_and_is_invariant() {
        let mu = bw(&EX, &MU);
        let sigma = sigma_pq(mu.composition(), 3, 5).unwrap();
        let moved = apply(&sigma, &mu).unwrap();
        for g in -8..8 {
            let lc = level_counts(&mu, g);
            assert_eq!(lc.norm, coordinate_count(&mu, g));
            assert!(lc.psi_top.iter().all(|i| lc.phi.contains(i)));
            assert!(lc.psi_bot.iter().all(|i| lc.phi.contains(i)));
            assert_eq!(level_counts(&moved, g).norm, lc.norm);
        }
    }

    #[test]
    fn check_down_examples() {
        let x = bw(&EX, &[3, 3, -1, -4, 2, -2]);
        assert!(check_down(&x, 3, &[1, 2]).unwrap());

        assert!(check_down(&bw(&[1, 2], &[3, 3]), 3, &[1]).unwrap());
        // bottom of block 1 is 2, bottom of block 2 is 3
        assert!(!check_down(&bw(&[2, 1], &[3, 3]), 3, &[1]).unwrap());

        assert_eq!(
            check_down(&x, 3, &[3]),
            Err(Error::NotInPsiTop { level: 3 })
        );
    }

    #[test]
    fn check_up_examples() {
        let x = bw(&EX, &[2, 1, 1, 0, 2, 2]);
        // blocks 1 and 6 (size 4, top 2) also reach down to 0
        assert_eq!(phi(&x, 0), vec![1, 3, 4, 6]);
        assert!(check_up(&x, 0, &[4]).unwrap());
        assert!(check_up(&x, 0, &[]).unwrap());
        assert!(check_up(&bw(&[1, 1], &[0, 5]), 0, &[1]).unwrap());
        assert_eq!(check_up(&x, 0, &[1]), Err(Error::NotInPsiBot { level: 0 }));
        // S = {1} at level 0 with block 2 ([0]) left over: 0 < 0 fails
        assert!(!check_up(&bw(&[2, 1], &[1, 0]), 0, &[1]).unwrap());
    }

    #[test]
    fn shift_examples() {
        let mu = bw(&EX, &MU);
        let s = shift(&mu, &[1, 2], Direction::Lower).unwrap();
        assert_eq!(s.entries(), &[3, 2, -1, -4, 2, -2]);
        assert_eq!(shift(&mu, &[], Direction::Raise).unwrap(), mu);
        assert_eq!(shift(&s, &[1, 2], Direction::Raise).unwrap(), mu);
        assert_eq!(
            shift(&mu, &[7], Direction::Raise),
            Err(Error::IndexOutOfRange { index: 7, k: 6 })
        );
    }

    #[test]
    fn worked_trace_endpoints() {
        let (mu, nu) = (bw(&EX, &MU), bw(&EX, &NU));
        let w = find_witness(&nu, &mu).unwrap();
        let trace = degeneration_trace(&mu, &nu, &w).unwrap();
        assert_eq!(trace.b, -1);
        assert_eq!(trace.end.target.entries(), &[2, 1, 1, 1, 2, 2]);
        assert_eq!(trace.end.source.entries(), &[2, 1, 2, 1, 1, 2]);
        let counts: Vec<usize> = Step::ALL
            .iter()
            .map(|&s| trace.stages_of(s).count())
            .collect();
        assert_eq!(counts, vec![2, 1, 4, 1, 1]);
    }

    #[test]
    fn already_degenerate_pair_has_no_net_shifts() {
        let (mu, nu) = (bw(&EX, &[2, 1, 1, 1, 2, 2]), bw(&EX, &[2, 1, 2, 1, 1, 2]));
        let w = find_witness(&nu, &mu).unwrap();
        assert_eq!((w.c, w.s), (2, 3));
        let trace = degeneration_trace(&mu, &nu, &w).unwrap();
        assert!(trace
            .stages
            .iter()
            .all(|s| s.shift.target_blocks.is_empty()));
        assert_eq!(trace.end, trace.start);
    }

    #[test]
    fn norm_drops_by_shift_size_on_both_sides() {
        let (mu, nu) = (bw(&EX, &MU), bw(&EX, &NU));
        let w = find_witness(&nu, &mu).unwrap();
        let trace = degeneration_trace(&mu, &nu, &w).unwrap();
        for st in &trace.stages {
            let g = st.legality.level;
            let k = st.shift.target_blocks.len();
            for (b, a) in [
                (&st.before.target, &st.after.target),
                (&st.before.source, &st.after.source),
            ] {
                assert_eq!(coordinate_count(b, g) - coordinate_count(a, g), k);
            }
        }
    }
}
