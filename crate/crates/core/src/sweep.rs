//! Exhaustive checks over every orbit of small compositions: the tableau
//! order against brute-force reachability, the order axioms, chain
//! replay, and witness/degeneration/trace validity for every
//! non-comparable pair.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::bruhat::{down_set_bruteforce, ElementaryStep, OrbitGraph, TableauLevels};
use crate::error::{Error, Result};
use crate::obstruction::{check_witness, degenerate};
use crate::translation::{coordinate_count, degeneration_trace};
use crate::weights::{BlockWeight, Composition};
use crate::weyl::DEFAULT_ORBIT_CAP;

/// Counterexamples kept in a report; failures beyond this are only counted.
pub const MAX_COUNTEREXAMPLES: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Checks {
    pub oracle: bool,
    pub axioms: bool,
    pub factorization: bool,
    pub obstruction: bool,
    pub trace: bool,
}

impl Default for Checks {
    fn default() -> Self {
        Checks {
            oracle: true,
            axioms: true,
            factorization: true,
            obstruction: true,
            trace: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    /// Every composition of every `n <= max_n` with at least two parts.
    pub max_n: usize,
    /// Allowed entries of the antidominant representatives.
    pub values: Vec<i64>,
    pub cap: usize,
    pub checks: Checks,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_n: 7,
            values: vec![0, 1, 2, 3],
            cap: DEFAULT_ORBIT_CAP,
            checks: Checks::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Oracle,
    Reflexivity,
    Antisymmetry,
    Transitivity,
    Factorization,
    Witness,
    Degeneration,
    Trace,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub check: Check,
    pub composition: Vec<usize>,
    pub source: Vec<i64>,
    pub target: Vec<i64>,
    pub detail: String,
}

/// Deterministic summary of a sweep; timings are reported separately.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub max_n: usize,
    pub values: Vec<i64>,
    pub compositions: usize,
    pub orbits: usize,
    pub largest_orbit: usize,
    pub pairs: u64,
    pub comparable: u64,
    pub non_comparable: u64,
    pub chain_steps: u64,
    pub trace_stages: u64,
    pub oracle_disagreements: u64,
    pub axiom_failures: u64,
    pub factorization_failures: u64,
    pub witness_failures: u64,
    pub degeneration_failures: u64,
    pub trace_failures: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl SweepReport {
    pub fn failures(&self) -> u64 {
        self.oracle_disagreements
            + self.axiom_failures
            + self.factorization_failures
            + self.witness_failures
            + self.degeneration_failures
            + self.trace_failures
    }

    pub fn is_clean(&self) -> bool {
        self.failures() == 0
    }

    fn record(&mut self, check: Check, src: &BlockWeight, tgt: &BlockWeight, detail: String) {
        let counter = match check {
            Check::Oracle => &mut self.oracle_disagreements,
            Check::Reflexivity | Check::Antisymmetry | Check::Transitivity => {
                &mut self.axiom_failures
            }
            Check::Factorization => &mut self.factorization_failures,
            Check::Witness => &mut self.witness_failures,
            Check::Degeneration => &mut self.degeneration_failures,
            Check::Trace => &mut self.trace_failures,
        };
        *counter += 1;
        if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
            self.counterexamples.push(Counterexample {
                check,
                composition: src.composition().parts().to_vec(),
                source: src.entries().to_vec(),
                target: tgt.entries().to_vec(),
                detail,
            });
        }
    }
}

/// Wall-clock time spent per phase.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PhaseTimings {
    pub enumeration: Duration,
    pub oracle: Duration,
    pub axioms: Duration,
    pub factorization: Duration,
    pub obstruction: Duration,
    pub trace: Duration,
}

impl PhaseTimings {
    pub fn total(&self) -> Duration {
        self.enumeration
            + self.oracle
            + self.axioms
            + self.factorization
            + self.obstruction
            + self.trace
    }
}

/// Compositions of `n <= max_n` with at least `min_k` parts (and never
/// fewer than two), by `n` and then lexicographically.
pub fn compositions_up_to(max_n: usize, min_k: usize) -> Vec<Composition> {
    let min_k = min_k.max(2);
    let mut out = Vec::new();
    for n in 2..=max_n {
        let mut all = Vec::new();
        compositions_of(n, &mut Vec::new(), &mut all);
        all.sort();
        out.extend(
            all.into_iter()
                .filter(|p| p.len() >= min_k)
                .map(|p| Composition::new(p).expect("positive parts")),
        );
    }
    out
}

fn compositions_of(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if rest == 0 {
        out.push(prefix.clone());
        return;
    }
    for first in 1..=rest {
        prefix.push(first);
        compositions_of(rest - first, prefix, out);
        prefix.pop();
    }
}

/// Every antidominant weight of `comp` with entries drawn from `values`.
pub fn antidominant_weights(comp: &Composition, values: &[i64]) -> Vec<BlockWeight> {
    let mut vals = values.to_vec();
    vals.sort_unstable();
    vals.dedup();
    let mut entries = vec![vec![0i64; comp.k()]];
    for class in comp.classes() {
        let mut choices = Vec::new();
        multisets(
            &vals,
            class.positions.len(),
            0,
            &mut Vec::new(),
            &mut choices,
        );
        let mut next = Vec::with_capacity(entries.len() * choices.len());
        for e in &entries {
            for choice in &choices {
                let mut e = e.clone();
                for (&pos, &v) in class.positions.iter().zip(choice) {
                    e[pos - 1] = v;
                }
                next.push(e);
            }
        }
        entries = next;
    }
    entries
        .into_iter()
        .map(|e| BlockWeight::new(comp.clone(), e).expect("entries within bounds"))
        .collect()
}

fn multisets(
    vals: &[i64],
    len: usize,
    from: usize,
    prefix: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    if prefix.len() == len {
        out.push(prefix.clone());
        return;
    }
    for i in from..vals.len() {
        prefix.push(vals[i]);
        multisets(vals, len, i, prefix, out);
        prefix.pop();
    }
}

/// Problems with a chain claimed to lead from `tgt` down to `src`.
pub fn chain_defect(
    chain: &[ElementaryStep],
    src: &BlockWeight,
    tgt: &BlockWeight,
) -> Option<String> {
    let mut current = tgt;
    for (i, st) in chain.iter().enumerate() {
        if st.before != *current {
            return Some(format!(
                "step {i} starts at {}, expected {current}",
                st.before
            ));
        }
        if !st.is_valid() {
            return Some(format!(
                "step {i} ({}, {}) is not an elementary move",
                st.p, st.q
            ));
        }
        current = &st.after;
    }
    if current != src {
        return Some(format!("chain ends at {current}, expected {src}"));
    }
    None
}

struct Sweeper {
    checks: Checks,
    report: SweepReport,
    timings: PhaseTimings,
}

impl Sweeper {
    fn orbit(&mut self, lambda: &BlockWeight, cap: usize) -> Result<()> {
        let t = Instant::now();
        let graph = OrbitGraph::new(lambda, cap)?;
        let levels = TableauLevels::new(lambda);
        let order = graph.tableau_order(&levels);
        self.timings.enumeration += t.elapsed();

        let nodes = &graph.nodes;
        let len = nodes.len();
        self.report.orbits += 1;
        self.report.largest_orbit = self.report.largest_orbit.max(len);
        self.report.pairs += (len * len) as u64;
        for a in 0..len {
            for b in 0..len {
                if order.get(a, b) {
                    self.report.comparable += 1;
                } else {
                    self.report.non_comparable += 1;
                }
            }
        }

        if self.checks.oracle {
            let t = Instant::now();
            for (b, tgt) in nodes.iter().enumerate() {
                let below = down_set_bruteforce(tgt, cap)?;
                for (a, src) in nodes.iter().enumerate() {
                    let brute = below.contains(src.entries());
                    if order.get(a, b) != brute {
                        let detail = format!("tableau {}, reachability {brute}", order.get(a, b));
                        self.report.record(Check::Oracle, src, tgt, detail);
                    }
                }
            }
            self.timings.oracle += t.elapsed();
        }

        if self.checks.axioms {
            let t = Instant::now();
            if !order.is_reflexive() {
                self.report
                    .record(Check::Reflexivity, lambda, lambda, "not reflexive".into());
            }
            if !order.is_antisymmetric() {
                self.report.record(
                    Check::Antisymmetry,
                    lambda,
                    lambda,
                    "not antisymmetric".into(),
                );
            }
            if !order.is_transitive() {
                self.report
                    .record(Check::Transitivity, lambda, lambda, "not transitive".into());
            }
            self.timings.axioms += t.elapsed();
        }

        for (b, tgt) in nodes.iter().enumerate() {
            for (a, src) in nodes.iter().enumerate() {
                if order.get(a, b) {
                    if self.checks.factorization {
                        let t = Instant::now();
                        self.factorization(&levels, src, tgt);
                        self.timings.factorization += t.elapsed();
                    }
                } else {
                    if self.checks.factorization {
                        let t = Instant::now();
                        match levels.factorize(src, tgt) {
                            Err(Error::NotComparable) => {}
                            other => {
                                let detail = format!("expected not-comparable, got {other:?}");
                                self.report.record(Check::Factorization, src, tgt, detail);
                            }
                        }
                        self.timings.factorization += t.elapsed();
                    }
                    if self.checks.obstruction || self.checks.trace {
                        self.obstruction(&levels, src, tgt);
                    }
                }
            }
        }
        Ok(())
    }

    fn factorization(&mut self, levels: &TableauLevels, src: &BlockWeight, tgt: &BlockWeight) {
        match levels.factorize(src, tgt) {
            Ok(chain) => {
                self.report.chain_steps += chain.len() as u64;
                if let Some(detail) = chain_defect(&chain, src, tgt) {
                    self.report.record(Check::Factorization, src, tgt, detail);
                }
            }
            Err(e) => self
                .report
                .record(Check::Factorization, src, tgt, e.to_string()),
        }
    }

    fn obstruction(&mut self, levels: &TableauLevels, src: &BlockWeight, tgt: &BlockWeight) {
        let t = Instant::now();
        let witness = match levels.find_witness(src, tgt) {
            Ok(w) => w,
            Err(e) => {
                self.report.record(Check::Witness, src, tgt, e.to_string());
                self.timings.obstruction += t.elapsed();
                return;
            }
        };
        if let Err(e) = check_witness(src, tgt, &witness) {
            self.report.record(Check::Witness, src, tgt, e.to_string());
        }
        let pair = degenerate(tgt, src, &witness);
        if let Err(e) = &pair {
            self.report
                .record(Check::Degeneration, src, tgt, e.to_string());
        }
        self.timings.obstruction += t.elapsed();

        if !self.checks.trace {
            return;
        }
        let t = Instant::now();
        match degeneration_trace(tgt, src, &witness) {
            Ok(trace) => {
                self.report.trace_stages += trace.stages.len() as u64;
                if let Ok(pair) = &pair {
                    if trace.end.target != pair.mu_bar || trace.end.source != pair.nu_bar {
                        self.report.record(
                            Check::Trace,
                            src,
                            tgt,
                            "end differs from degenerate pair".into(),
                        );
                    }
                }
                for st in &trace.stages {
                    if !st.legality.verdict() {
                        self.report.record(
                            Check::Trace,
                            src,
                            tgt,
                            format!("{:?} d={} illegal", st.step, st.d),
                        );
                    }
                    let g = st.legality.level;
                    let k = st.shift.target_blocks.len();
                    // lowering tops at g or raising bottoms at g both
                    // remove one coordinate g per shifted block
                    let moved = |before: &BlockWeight, after: &BlockWeight| {
                        coordinate_count(before, g).checked_sub(coordinate_count(after, g))
                    };
                    let lost_t = moved(&st.before.target, &st.after.target);
                    let lost_s = moved(&st.before.source, &st.after.source);
                    if lost_t != Some(k) || lost_s != Some(k) {
                        let detail = format!(
                            "{:?} d={}: level {g} count dropped by {lost_t:?}/{lost_s:?}, shift size {k}",
                            st.step, st.d
                        );
                        self.report.record(Check::Trace, src, tgt, detail);
                    }
                }
            }
            Err(e) => self.report.record(Check::Trace, src, tgt, e.to_string()),
        }
        self.timings.trace += t.elapsed();
    }
}

/// Runs every enabled check over every orbit of the configured range.
/// Fails only on configuration problems such as an orbit above the cap;
/// check failures are reported, not raised.
pub fn run_sweep(config: &SweepConfig) -> Result<(SweepReport, PhaseTimings)> {
    let mut values = config.values.clone();
    values.sort_unstable();
    values.dedup();
    let comps = compositions_up_to(config.max_n, 2);
    let mut s = Sweeper {
        checks: config.checks,
        report: SweepReport {
            max_n: config.max_n,
            values: values.clone(),
            compositions: comps.len(),
            ..SweepReport::default()
        },
        timings: PhaseTimings::default(),
    };
    for comp in &comps {
        for lambda in antidominant_weights(comp, &values) {
            s.orbit(&lambda, config.cap)?;
        }
    }
    Ok((s.report, s.timings))
}
