//! Exhaustive enumeration of numerical semigroups and their m-primary
//! monomial ideals, with every bound evaluated on every instance.

use std::collections::{BTreeMap, HashSet};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bounds::{full_report, InstanceReport, Value};
use crate::error::{Error, Result};
use crate::hilbert::HilbertRecord;
use crate::ideal::SemigroupIdeal;
use crate::semigroup::NumericalSemigroup;

/// Largest genus the harness accepts.
pub const MAX_GENUS: u32 = 12;

/// Semigroups grouped by genus, `0..=max_genus`, each group sorted.
pub fn enumerate_semigroups(max_genus: u32) -> Vec<Vec<NumericalSemigroup>> {
    let mut levels = vec![vec![NumericalSemigroup::naturals()]];
    for _ in 0..max_genus {
        let mut next: Vec<NumericalSemigroup> = levels
            .last()
            .unwrap()
            .iter()
            .flat_map(|s| s.tree_children())
            .collect();
        next.sort();
        levels.push(next);
    }
    levels
}

/// All proper m-primary ideals of `s` with colength at most `max_colength`,
/// sorted by colength and then by generators.
///
/// Every such ideal other than the maximal one is obtained from an ideal of
/// colength one less by deleting one minimal generator.
pub fn enumerate_ideals(s: &NumericalSemigroup, max_colength: i64) -> Vec<SemigroupIdeal> {
    let mut out = Vec::new();
    if max_colength < 1 {
        return out;
    }
    let mut level = vec![SemigroupIdeal::maximal(s)];
    for colength in 1..=max_colength {
        out.extend(level.iter().cloned());
        if colength == max_colength {
            break;
        }
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for ideal in &level {
            for &g in ideal.min_generators() {
                let gens: Vec<i64> = ideal
                    .min_generators()
                    .iter()
                    .copied()
                    .filter(|&x| x != g)
                    .chain(s.min_generators().iter().map(|&a| g + a))
                    .collect();
                let child = SemigroupIdeal::from_generators(s, &gens)
                    .expect("generators lie in the semigroup");
                if seen.insert(child.min_generators().to_vec()) {
                    next.push(child);
                }
            }
        }
        next.sort_by(|a, b| a.min_generators().cmp(b.min_generators()));
        level = next;
    }
    out
}

/// `H0(0..terms)` computed from bitsets of the value sets of the powers,
/// independently of [`HilbertRecord`].
pub fn oracle_hilbert(semigroup_gens: &[i64], ideal_gens: &[i64], terms: usize) -> Vec<i64> {
    let max_i = *ideal_gens.iter().max().expect("nonempty ideal");
    let min_s = *semigroup_gens.iter().min().expect("nonempty semigroup");
    let max_s = *semigroup_gens.iter().max().unwrap();
    // conductor <= (min - 1)(max - 1) for any generating set containing both
    let conductor_bound = ((min_s - 1) * (max_s - 1)).max(0);
    let window = ((terms as i64 + 1) * max_i + conductor_bound + 1) as usize;

    let mut in_s = vec![false; window + 1];
    in_s[0] = true;
    for x in 1..=window {
        in_s[x] = semigroup_gens
            .iter()
            .any(|&g| (g as usize) <= x && in_s[x - g as usize]);
    }
    let mut lengths = vec![0i64];
    let mut power = in_s.clone();
    for _ in 0..terms {
        let mut next = vec![false; window + 1];
        for (x, &member) in power.iter().enumerate() {
            if member {
                for &g in ideal_gens {
                    if x + (g as usize) <= window {
                        next[x + g as usize] = true;
                    }
                }
            }
        }
        power = next;
        let length = (0..=window).filter(|&x| in_s[x] && !power[x]).count() as i64;
        lengths.push(length);
    }
    lengths.windows(2).map(|w| w[1] - w[0]).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub max_genus: u32,
    pub max_colength: i64,
    /// Evaluate a seeded random sample of this many instances instead of all.
    pub sample_limit: Option<usize>,
    pub seed: u64,
    /// Run sequentially and stop at the first violation.
    pub fail_fast: bool,
    /// Worker threads; 0 lets the pool decide.
    pub parallelism: usize,
    /// Keep every [`InstanceReport`] in the suite report.
    pub keep_reports: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_genus: 4,
            max_colength: 4,
            sample_limit: None,
            seed: 0,
            fail_fast: false,
            parallelism: 0,
            keep_reports: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub semigroup: String,
    pub ideal: String,
    pub check: &'static str,
    pub target: Value,
    pub bound: Value,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TightCount {
    pub applicable: usize,
    pub holds: usize,
    pub tight: usize,
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub instances_run: usize,
    /// Number of semigroups of each genus `0..=max_genus`.
    pub semigroups_per_genus: Vec<usize>,
    pub violations: Vec<Violation>,
    /// Disagreements with the oracle or with identities the engine must satisfy.
    pub defects: Vec<String>,
    pub tightness: BTreeMap<&'static str, TightCount>,
    pub reports: Vec<InstanceReport>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty() && self.defects.is_empty()
    }
}

/// Identities of the engine's output, and agreement with [`oracle_hilbert`].
pub fn audit_instance(report: &InstanceReport) -> Vec<String> {
    let rec: &HilbertRecord = &report.record;
    let who = format!("{} in {}", report.ideal, report.semigroup);
    let mut defects = Vec::new();
    let terms = rec.h0_table.len();
    let oracle = oracle_hilbert(
        report.semigroup.min_generators(),
        report.ideal.min_generators(),
        terms,
    );
    if oracle != rec.h0_table {
        defects.push(format!(
            "{who}: H0 {:?} but oracle gives {oracle:?}",
            rec.h0_table
        ));
    }
    if rec.v_seq.iter().sum::<i64>() != rec.e1 {
        defects.push(format!(
            "{who}: e1 = {} differs from the sum of v_n",
            rec.e1
        ));
    }
    if rec.e0 != report.profile.min_value {
        defects.push(format!(
            "{who}: e0 = {} but the least value of I is {}",
            rec.e0, report.profile.min_value
        ));
    }
    if rec.h0(1) != report.profile.conormal_length {
        defects.push(format!(
            "{who}: H0(1) = {} but Length(I/I^2) = {}",
            rec.h0(1),
            report.profile.conormal_length
        ));
    }
    let h1 = rec.hilbert_sum(1, terms);
    for (n, &value) in h1.iter().enumerate().skip(rec.pn.saturating_sub(1)) {
        let expected = rec.e0 * (n as i64 + 1) - rec.e1;
        if value != expected {
            defects.push(format!(
                "{who}: H1({n}) = {value} but e0(n+1) - e1 = {expected}"
            ));
        }
    }
    let v01 = rec.v_seq.first().copied().unwrap_or(0) + rec.v_seq.get(1).copied().unwrap_or(0);
    if v01 != 2 * rec.e0 - rec.lambda - rec.b() {
        defects.push(format!(
            "{who}: v0 + v1 = {v01} differs from 2 e0 - lambda - b"
        ));
    }
    for i in 0..=1u32 {
        let series = rec.poincare_series(i);
        if series.degree() > rec.pn + rec.dimension as usize - 1 {
            defects.push(format!(
                "{who}: P{i} numerator degree {} exceeds pn + d - 1",
                series.degree()
            ));
        }
        let expanded: Vec<i128> = series.expand(terms);
        let table: Vec<i128> = rec
            .hilbert_sum(i, terms)
            .into_iter()
            .map(i128::from)
            .collect();
        if expanded != table {
            defects.push(format!(
                "{who}: P{i} re-expands to {expanded:?}, table is {table:?}"
            ));
        }
    }
    if report.ring.embedding_dim as usize != report.semigroup.embedding_dim() {
        defects.push(format!("{who}: embedding dimension mismatch"));
    }
    defects
}

fn evaluate(ideal: &SemigroupIdeal) -> Result<(InstanceReport, Vec<String>)> {
    let report = full_report(ideal)?;
    let defects = audit_instance(&report);
    Ok((report, defects))
}

pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    if config.max_genus > MAX_GENUS {
        return Err(Error::InvalidInvariants(format!(
            "max genus {} exceeds the supported limit {MAX_GENUS}",
            config.max_genus
        )));
    }
    let start = Instant::now();
    let levels = enumerate_semigroups(config.max_genus);
    let semigroups_per_genus = levels.iter().map(Vec::len).collect();
    let mut instances: Vec<SemigroupIdeal> = levels
        .iter()
        .flatten()
        .collect::<Vec<_>>()
        .par_iter()
        .flat_map_iter(|s| enumerate_ideals(s, config.max_colength))
        .collect();
    if let Some(limit) = config.sample_limit {
        if limit < instances.len() {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            instances.shuffle(&mut rng);
            instances.truncate(limit);
        }
    }

    let mut suite = SuiteReport {
        semigroups_per_genus,
        ..SuiteReport::default()
    };
    if config.fail_fast {
        for ideal in &instances {
            let (report, defects) = evaluate(ideal)?;
            let stop = report.violations().next().is_some() || !defects.is_empty();
            absorb(&mut suite, report, defects, config.keep_reports);
            if stop {
                break;
            }
        }
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.parallelism)
            .build()
            .map_err(|e| Error::InvalidInvariants(format!("thread pool: {e}")))?;
        let results: Vec<(InstanceReport, Vec<String>)> =
            pool.install(|| instances.par_iter().map(evaluate).collect::<Result<_>>())?;
        for (report, defects) in results {
            absorb(&mut suite, report, defects, config.keep_reports);
        }
    }
    suite.elapsed = start.elapsed();
    Ok(suite)
}

fn absorb(suite: &mut SuiteReport, report: InstanceReport, defects: Vec<String>, keep: bool) {
    suite.instances_run += 1;
    suite.defects.extend(defects);
    for check in &report.checks {
        let count = suite.tightness.entry(check.name).or_default();
        if check.applicable {
            count.applicable += 1;
            count.holds += usize::from(check.holds);
            count.tight += usize::from(check.tight);
        }
        if check.is_violation() {
            suite.violations.push(Violation {
                semigroup: report.semigroup.to_string(),
                ideal: report.ideal.to_string(),
                check: check.name,
                target: check.target.clone(),
                bound: check.bound.clone(),
            });
        }
    }
    if keep {
        suite.reports.push(report);
    }
}
