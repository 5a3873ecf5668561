//! Upper bounds on `e1(I)`, on the postulation number and on the first
//! Poincaré series, evaluated on a computed instance.
//!
//! Every check records whether its hypotheses hold. A check that is applicable
//! and fails is a violation; a check that is not applicable passes vacuously.

use std::fmt;

use crate::error::{Error, Result};
use crate::hilbert::{hilbert_polynomial_value, ExternalHilbertData, HilbertRecord};
use crate::ideal::{IdealProfile, SemigroupIdeal};
use crate::semigroup::NumericalSemigroup;
use crate::series::{RationalSeries, SeriesComparison, SeriesRelation};

/// Direction of the inequality between `target` and `bound`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    /// `target <= bound`
    Upper,
    /// `target >= bound`
    Lower,
    /// `target < bound`
    StrictUpper,
    /// `target = bound` as series
    Equal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Int(i64),
    Series(RationalSeries),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Series(s) => write!(f, "{s}"),
        }
    }
}

/// How much of a series comparison was actually established.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckScope {
    Exact,
    /// Only the coefficients covered by a supplied table were compared.
    SuppliedRange,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCheck {
    pub name: &'static str,
    pub statement: &'static str,
    pub applicable: bool,
    pub sense: Sense,
    pub bound: Value,
    pub target: Value,
    pub holds: bool,
    pub tight: bool,
    pub scope: CheckScope,
    pub comparison: Option<SeriesComparison>,
}

impl BoundCheck {
    fn int(
        name: &'static str,
        statement: &'static str,
        sense: Sense,
        target: i64,
        bound: i64,
        applicable: bool,
    ) -> Self {
        let (satisfied, equal) = match sense {
            Sense::Upper => (target <= bound, target == bound),
            Sense::Lower => (target >= bound, target == bound),
            Sense::StrictUpper => (target < bound, false),
            Sense::Equal => (target == bound, target == bound),
        };
        BoundCheck {
            name,
            statement,
            applicable,
            sense,
            bound: Value::Int(bound),
            target: Value::Int(target),
            holds: !applicable || satisfied,
            tight: applicable && equal,
            scope: CheckScope::Exact,
            comparison: None,
        }
    }

    fn series(
        name: &'static str,
        statement: &'static str,
        sense: Sense,
        target: RationalSeries,
        bound: RationalSeries,
        comparison: SeriesComparison,
        scope: CheckScope,
    ) -> Self {
        let equal = comparison.relation == SeriesRelation::Equal;
        let holds = match sense {
            Sense::Equal => equal,
            _ => comparison.holds(),
        };
        BoundCheck {
            name,
            statement,
            applicable: true,
            sense,
            bound: Value::Series(bound),
            target: Value::Series(target),
            holds,
            tight: equal,
            scope,
            comparison: Some(comparison),
        }
    }

    pub fn is_violation(&self) -> bool {
        self.applicable && !self.holds
    }
}

/// Derived quantities entering the bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Derived {
    /// `(e0(R) - 1)(e0(I) - e0(R) o(I)) + e1(R)`
    pub epsilon: i64,
    /// `pn(I)(e0(I) - e0(R) o(I)) + e1(R)`
    pub epsilon_pn: i64,
    /// `C(e0, 2) - C(mu - 1, 2) - lambda + 1`
    pub rho: i64,
    pub beta: i64,
    /// `e1 - e0 + lambda + 1`
    pub w: i64,
    /// `e0 - lambda + pn(e0 - 2) - C(pn + 1, 2)`
    pub alpha_pn: i64,
    /// last `n` with `C(n, 2) <= C(e0, 2) - e1 - lambda + 1`
    pub alpha: i64,
    /// `e1 - 2 e0 + (alpha + 2) lambda`
    pub delta: i64,
}

/// Invariants of the maximal ideal that the bounds use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RingData {
    pub e0: i64,
    pub e1: i64,
    pub embedding_dim: i64,
}

#[derive(Clone, Debug)]
pub struct InstanceReport {
    pub semigroup: NumericalSemigroup,
    pub ideal: SemigroupIdeal,
    pub record: HilbertRecord,
    pub profile: IdealProfile,
    pub ring_record: HilbertRecord,
    pub ring: RingData,
    pub derived: Derived,
    pub checks: Vec<BoundCheck>,
    pub notes: Vec<String>,
}

impl InstanceReport {
    pub fn violations(&self) -> impl Iterator<Item = &BoundCheck> {
        self.checks.iter().filter(|c| c.is_violation())
    }

    pub fn check(&self, name: &str) -> Option<&BoundCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Names of every check in an [`InstanceReport`], in report order.
pub const CHECK_NAMES: [&str; 19] = [
    "northcott_lower",
    "northcott_upper",
    "order_multiplicity",
    "epsilon_pn",
    "epsilon",
    "rho",
    "ring_e1",
    "epsilon_vs_rho",
    "epsilon_vs_rho_strict",
    "alpha_pn_bound",
    "epsilon_binomial",
    "stability_bound",
    "beta_postulation",
    "beta_leq_w",
    "alpha_mu",
    "beta_delta",
    "hilbert_series_beta",
    "hilbert_series_threshold",
    "ring_embedding_dim",
];

/// `C(x, 2)`, zero for `x` in `{0, 1}`.
pub fn choose2(x: i64) -> Result<i64> {
    if x < 0 {
        return Err(Error::NegativeBinomial(x));
    }
    Ok(x * (x - 1) / 2)
}

/// First matching case: `e0 = lambda` gives 0, `e0 = b` gives 1, otherwise
/// `e1 - 2 e0 + lambda + b + 2`.
pub fn beta(e0: i64, e1: i64, lambda: i64, b: i64) -> Result<i64> {
    if e0 == lambda {
        Ok(0)
    } else if e0 == b {
        Ok(1)
    } else if e0 > b {
        Ok(e1 - 2 * e0 + lambda + b + 2)
    } else {
        Err(Error::InvalidInvariants(format!("e0 = {e0} < b = {b}")))
    }
}

pub fn alpha_threshold(e0: i64, e1: i64, lambda: i64) -> Result<i64> {
    let rhs = choose2(e0)? - e1 - lambda + 1;
    if rhs < 0 {
        return Err(Error::ThresholdUndefined(rhs));
    }
    let mut n = 0;
    while choose2(n + 1)? <= rhs {
        n += 1;
    }
    Ok(n)
}

pub fn delta(e0: i64, e1: i64, lambda: i64, alpha: i64) -> i64 {
    e1 - 2 * e0 + (alpha + 2) * lambda
}

fn with_monomial(mut coeffs: Vec<i128>, exponent: i64) -> Result<Vec<i128>> {
    if exponent < 0 {
        return Err(Error::InvalidInvariants(format!(
            "negative exponent {exponent} in series bound"
        )));
    }
    let e = exponent as usize;
    if coeffs.len() <= e {
        coeffs.resize(e + 1, 0);
    }
    coeffs[e] += 1;
    Ok(coeffs)
}

/// Bound on `P^1` selected by `beta`, over `(1 - T)^2`.
pub fn beta_series_bound(lambda: i64, b: i64, e0: i64, beta: i64) -> Result<RationalSeries> {
    let (l, b, e0) = (lambda as i128, b as i128, e0 as i128);
    let num = match beta {
        0 => vec![l],
        1 => vec![l, b - l],
        _ => with_monomial(vec![l, b - l, e0 - b - 1], beta)?,
    };
    Ok(RationalSeries::new(num, 2))
}

/// `(lambda + alpha lambda T + (e0 - (alpha + 1) lambda - 1) T^2 + T^(delta + 2)) / (1 - T)^pole`.
pub fn threshold_series_bound(
    lambda: i64,
    e0: i64,
    alpha: i64,
    delta: i64,
    pole: u32,
) -> Result<RationalSeries> {
    let (l, a, e0) = (lambda as i128, alpha as i128, e0 as i128);
    let num = with_monomial(vec![l, a * l, e0 - (a + 1) * l - 1], delta + 2)?;
    Ok(RationalSeries::new(num, pole))
}

/// Lower and upper bound on `e0 - lambda`, and `e0(R) o(I) <= e0(I)`.
pub fn check_northcott(
    rec: &HilbertRecord,
    prof: &IdealProfile,
    ring: &RingData,
) -> [BoundCheck; 3] {
    let gap = rec.e0 - rec.lambda;
    [
        BoundCheck::int(
            "northcott_lower",
            "0 <= e0 - lambda",
            Sense::Lower,
            gap,
            0,
            true,
        ),
        BoundCheck::int(
            "northcott_upper",
            "e0 - lambda <= e1",
            Sense::Upper,
            gap,
            rec.e1,
            true,
        ),
        BoundCheck::int(
            "order_multiplicity",
            "e0(R) o(I) <= e0(I)",
            Sense::Upper,
            ring.e0 * prof.order,
            rec.e0,
            true,
        ),
    ]
}

pub fn epsilon_values(rec: &HilbertRecord, prof: &IdealProfile, ring: &RingData) -> (i64, i64) {
    let excess = rec.e0 - ring.e0 * prof.order;
    let epsilon = (ring.e0 - 1) * excess + ring.e1;
    let epsilon_pn = rec.pn as i64 * excess + ring.e1;
    (epsilon, epsilon_pn)
}

pub fn check_epsilon(rec: &HilbertRecord, prof: &IdealProfile, ring: &RingData) -> [BoundCheck; 2] {
    let (epsilon, epsilon_pn) = epsilon_values(rec, prof, ring);
    [
        BoundCheck::int(
            "epsilon_pn",
            "e1 <= pn (e0 - e0(R) o) + e1(R)",
            Sense::Upper,
            rec.e1,
            epsilon_pn,
            true,
        ),
        BoundCheck::int(
            "epsilon",
            "e1 <= (e0(R) - 1)(e0 - e0(R) o) + e1(R)",
            Sense::Upper,
            rec.e1,
            epsilon,
            true,
        ),
    ]
}

/// `C(e0, 2) - C(mu - d, 2) - lambda + 1`.
pub fn rho(e0: i64, mu: i64, lambda: i64, dimension: i64) -> Result<i64> {
    Ok(choose2(e0)? - choose2(mu - dimension)? - lambda + 1)
}

pub fn check_rho(rec: &HilbertRecord, prof: &IdealProfile) -> Result<BoundCheck> {
    let bound = rho(rec.e0, prof.mu, rec.lambda, 1)?;
    Ok(BoundCheck::int(
        "rho",
        "e1 <= C(e0, 2) - C(mu - 1, 2) - lambda + 1",
        Sense::Upper,
        rec.e1,
        bound,
        true,
    ))
}

pub fn check_ring_e1_bound(ring: &HilbertRecord, s: &NumericalSemigroup) -> Result<BoundCheck> {
    let b = s.embedding_dim() as i64;
    let bound = choose2(ring.e0)? - choose2(b - 1)?;
    Ok(BoundCheck::int(
        "ring_e1",
        "e1(R) <= C(e0(R), 2) - C(b(R) - 1, 2)",
        Sense::Upper,
        ring.e1,
        bound,
        true,
    ))
}

/// `epsilon <= rho` when `e0(I) >= 2 e0(R) - 1`, strictly when additionally
/// `b(R) >= 3` or `o(I) >= 3`.
pub fn check_epsilon_vs_rho(
    rec: &HilbertRecord,
    prof: &IdealProfile,
    ring: &RingData,
    epsilon: i64,
    rho: i64,
    notes: &mut Vec<String>,
) -> [BoundCheck; 2] {
    let main = rec.e0 >= 2 * ring.e0 - 1;
    let strict_case = ring.embedding_dim >= 3 || prof.order >= 3;
    if strict_case && !main && epsilon >= rho {
        notes.push(format!(
            "epsilon_vs_rho_strict: epsilon = {epsilon} >= rho = {rho} with b(R) = {} and o(I) = {}, \
             but e0(I) = {} < 2 e0(R) - 1",
            ring.embedding_dim, prof.order, rec.e0
        ));
    }
    [
        BoundCheck::int(
            "epsilon_vs_rho",
            "e0(I) >= 2 e0(R) - 1 implies epsilon <= rho",
            Sense::Upper,
            epsilon,
            rho,
            main,
        ),
        BoundCheck::int(
            "epsilon_vs_rho_strict",
            "e0(I) >= 2 e0(R) - 1 and (b(R) >= 3 or o(I) >= 3) implies epsilon < rho",
            Sense::StrictUpper,
            epsilon,
            rho,
            main && strict_case,
        ),
    ]
}

pub fn alpha_pn(rec: &HilbertRecord) -> Result<i64> {
    let pn = rec.pn as i64;
    Ok(rec.e0 - rec.lambda + pn * (rec.e0 - 2) - choose2(pn + 1)?)
}

/// The literal exclusion list for `epsilon <= C(e0(I) - 2, 2)`.
pub fn in_binomial_exclusion(rec: &HilbertRecord, prof: &IdealProfile, ring: &RingData) -> bool {
    prof.order == 1
        && rec.e0 == ring.e0 + 1
        && ((ring.embedding_dim == ring.e0 + 1 && ring.e0 <= 2)
            || (ring.embedding_dim == ring.e0 && ring.e0 <= 4))
}

pub fn check_remark_bounds(
    rec: &HilbertRecord,
    prof: &IdealProfile,
    ring: &RingData,
    epsilon: i64,
    notes: &mut Vec<String>,
) -> Result<[BoundCheck; 2]> {
    let differs = rec.e0 != ring.e0;
    let excluded = in_binomial_exclusion(rec, prof, ring);
    if differs && !excluded && prof.order == 1 && rec.e0 <= ring.e0 + 2 {
        notes.push(format!(
            "epsilon_binomial: near the exclusion boundary (o(I) = 1, e0(I) = {}, e0(R) = {}, b(R) = {})",
            rec.e0, ring.e0, ring.embedding_dim
        ));
    }
    let binom = if rec.e0 >= 2 { choose2(rec.e0 - 2)? } else { 0 };
    Ok([
        BoundCheck::int(
            "alpha_pn_bound",
            "e0(I) != e0(R) implies e1 <= e0 - lambda + pn(e0 - 2) - C(pn + 1, 2)",
            Sense::Upper,
            rec.e1,
            alpha_pn(rec)?,
            differs,
        ),
        BoundCheck::int(
            "epsilon_binomial",
            "outside the exclusion list and e0(I) != e0(R) implies epsilon <= C(e0 - 2, 2)",
            Sense::Upper,
            epsilon,
            binom,
            differs && !excluded,
        ),
    ])
}

pub fn check_postulation(
    rec: &HilbertRecord,
    prof: &IdealProfile,
    ring: &RingData,
) -> Result<([BoundCheck; 3], i64, i64)> {
    let beta = beta(rec.e0, rec.e1, rec.lambda, prof.conormal_length)?;
    let w = rec.e1 - rec.e0 + rec.lambda + 1;
    let pn = rec.pn as i64;
    Ok((
        [
            BoundCheck::int(
                "stability_bound",
                "pn <= e0(R) - 1",
                Sense::Upper,
                pn,
                ring.e0 - 1,
                true,
            ),
            BoundCheck::int(
                "beta_postulation",
                "pn <= beta",
                Sense::Upper,
                pn,
                beta,
                true,
            ),
            BoundCheck::int("beta_leq_w", "beta <= w", Sense::Upper, beta, w, true),
        ],
        beta,
        w,
    ))
}

/// `alpha >= mu - 1` and `beta <= delta + 2`; returns `(checks, alpha, delta)`.
pub fn check_threshold_invariants(
    e0: i64,
    e1: i64,
    lambda: i64,
    mu: Option<i64>,
    beta: Option<i64>,
) -> Result<(Vec<BoundCheck>, i64, i64)> {
    let alpha = alpha_threshold(e0, e1, lambda)?;
    let delta = delta(e0, e1, lambda, alpha);
    let mut checks = Vec::new();
    if let Some(mu) = mu {
        checks.push(BoundCheck::int(
            "alpha_mu",
            "alpha >= mu - 1",
            Sense::Lower,
            alpha,
            mu - 1,
            true,
        ));
    }
    if let Some(beta) = beta {
        checks.push(BoundCheck::int(
            "beta_delta",
            "beta <= delta + 2",
            Sense::Upper,
            beta,
            delta + 2,
            true,
        ));
    }
    Ok((checks, alpha, delta))
}

pub fn check_hilbert_series(
    rec: &HilbertRecord,
    prof: &IdealProfile,
    beta: i64,
) -> Result<BoundCheck> {
    let target = rec.poincare_series(1);
    let bound = beta_series_bound(rec.lambda, prof.conormal_length, rec.e0, beta)?;
    let cmp = RationalSeries::compare(
        &target,
        &bound,
        RationalSeries::default_horizon(&target, &bound),
    )?;
    let sense = if beta <= 1 {
        Sense::Equal
    } else {
        Sense::Upper
    };
    Ok(BoundCheck::series(
        "hilbert_series_beta",
        "P1 = or <= (lambda + (b - lambda)T + (e0 - b - 1)T^2 + T^beta)/(1-T)^2",
        sense,
        target,
        bound,
        cmp,
        CheckScope::Exact,
    ))
}

pub fn check_threshold_series(rec: &HilbertRecord, alpha: i64, delta: i64) -> Result<BoundCheck> {
    let target = rec.poincare_series(1);
    let bound = threshold_series_bound(rec.lambda, rec.e0, alpha, delta, 2)?;
    let cmp = RationalSeries::compare(
        &target,
        &bound,
        RationalSeries::default_horizon(&target, &bound),
    )?;
    Ok(BoundCheck::series(
        "hilbert_series_threshold",
        THRESHOLD_STATEMENT,
        Sense::Upper,
        target,
        bound,
        cmp,
        CheckScope::Exact,
    ))
}

const THRESHOLD_STATEMENT: &str =
    "P1 <= (lambda + alpha lambda T + (e0 - (alpha + 1) lambda - 1)T^2 + T^(delta + 2))/(1-T)^(d+1)";

/// Runs every check on `(S, I)`.
pub fn full_report(ideal: &SemigroupIdeal) -> Result<InstanceReport> {
    let s = ideal.ambient().clone();
    let record = HilbertRecord::compute(ideal)?;
    let profile = ideal.profile();
    if record.lambda != profile.colength {
        return Err(Error::InvalidInvariants(format!(
            "H0(0) = {} but colength = {}",
            record.lambda, profile.colength
        )));
    }
    let ring_record = HilbertRecord::compute(&SemigroupIdeal::maximal(&s))?;
    let ring = RingData {
        e0: ring_record.e0,
        e1: ring_record.e1,
        embedding_dim: s.embedding_dim() as i64,
    };
    let mut notes = Vec::new();
    let mut checks = Vec::with_capacity(CHECK_NAMES.len());

    checks.extend(check_northcott(&record, &profile, &ring));
    checks.extend(check_epsilon(&record, &profile, &ring));
    let rho_check = check_rho(&record, &profile)?;
    let rho_value = rho(record.e0, profile.mu, record.lambda, 1)?;
    checks.push(rho_check);
    checks.push(check_ring_e1_bound(&ring_record, &s)?);
    let (epsilon, epsilon_pn) = epsilon_values(&record, &profile, &ring);
    checks.extend(check_epsilon_vs_rho(
        &record, &profile, &ring, epsilon, rho_value, &mut notes,
    ));
    checks.extend(check_remark_bounds(
        &record, &profile, &ring, epsilon, &mut notes,
    )?);
    let (post, beta, w) = check_postulation(&record, &profile, &ring)?;
    checks.extend(post);
    let (thr, alpha, delta) = check_threshold_invariants(
        record.e0,
        record.e1,
        record.lambda,
        Some(profile.mu),
        Some(beta),
    )?;
    checks.extend(thr);
    checks.push(check_hilbert_series(&record, &profile, beta)?);
    checks.push(check_threshold_series(&record, alpha, delta)?);
    checks.push(BoundCheck::int(
        "ring_embedding_dim",
        "b(R) = H0_m(1)",
        Sense::Equal,
        ring.embedding_dim,
        ring_record.b(),
        true,
    ));

    // violations first
    checks.sort_by_key(|c| !c.is_violation());

    let derived = Derived {
        epsilon,
        epsilon_pn,
        rho: rho_value,
        beta,
        w,
        alpha_pn: alpha_pn(&record)?,
        alpha,
        delta,
    };
    Ok(InstanceReport {
        semigroup: s,
        ideal: ideal.clone(),
        record,
        profile,
        ring_record,
        ring,
        derived,
        checks,
        notes,
    })
}

/// Formula-only evaluation on supplied Hilbert data.
#[derive(Clone, Debug)]
pub struct ExternalReport {
    pub data: ExternalHilbertData,
    /// least index from which the table agrees with the fitted polynomial
    pub pn: usize,
    pub lambda: i64,
    pub mu: Option<i64>,
    pub b: Option<i64>,
    pub beta: Option<i64>,
    pub w: i64,
    pub rho: Option<i64>,
    pub alpha: i64,
    pub delta: i64,
    pub checks: Vec<BoundCheck>,
    /// Checks of an [`InstanceReport`] that need data not available here.
    pub skipped: Vec<&'static str>,
}

impl ExternalReport {
    pub fn violations(&self) -> impl Iterator<Item = &BoundCheck> {
        self.checks.iter().filter(|c| c.is_violation())
    }

    pub fn check(&self, name: &str) -> Option<&BoundCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub fn external_report(
    data: &ExternalHilbertData,
    mu: Option<i64>,
    lambda: Option<i64>,
) -> Result<ExternalReport> {
    let d = data.dimension;
    let table_lambda = data.lambda();
    if let Some(l) = lambda {
        if l != table_lambda {
            return Err(Error::InvalidInvariants(format!(
                "supplied lambda {l} differs from H0(0) = {table_lambda}"
            )));
        }
    }
    let lambda = table_lambda;
    let (e0, e1) = (data.e0(), data.e1());
    let agrees = |m: usize| {
        data.h0_table[m] as i128 == hilbert_polynomial_value(&data.coefficients, d, 0, m as i64)
    };
    let mut pn = data.declared_pn;
    while pn > 0 && agrees(pn - 1) {
        pn -= 1;
    }

    let mut checks = Vec::new();
    let mut skipped = vec![
        "order_multiplicity",
        "epsilon_pn",
        "epsilon",
        "ring_e1",
        "epsilon_vs_rho",
        "epsilon_vs_rho_strict",
        "alpha_pn_bound",
        "epsilon_binomial",
        "stability_bound",
        "ring_embedding_dim",
    ];

    let gap = e0 - lambda;
    checks.push(BoundCheck::int(
        "northcott_lower",
        "0 <= e0 - lambda",
        Sense::Lower,
        gap,
        0,
        true,
    ));
    checks.push(BoundCheck::int(
        "northcott_upper",
        "e0 - lambda <= e1",
        Sense::Upper,
        gap,
        e1,
        true,
    ));

    let rho_value = match mu {
        Some(mu) => {
            let r = rho(e0, mu, lambda, d as i64)?;
            checks.push(BoundCheck::int(
                "rho",
                "e1 <= C(e0, 2) - C(mu - d, 2) - lambda + 1",
                Sense::Upper,
                e1,
                r,
                true,
            ));
            Some(r)
        }
        None => {
            skipped.push("rho");
            None
        }
    };

    let w = e1 - e0 + lambda + 1;
    let (b, beta_value) = if d == 1 {
        let b = data.h0(1);
        let beta_value = beta(e0, e1, lambda, b)?;
        checks.push(BoundCheck::int(
            "beta_postulation",
            "pn <= beta",
            Sense::Upper,
            pn as i64,
            beta_value,
            true,
        ));
        checks.push(BoundCheck::int(
            "beta_leq_w",
            "beta <= w",
            Sense::Upper,
            beta_value,
            w,
            true,
        ));
        (Some(b), Some(beta_value))
    } else {
        skipped.extend([
            "beta_postulation",
            "beta_leq_w",
            "beta_delta",
            "hilbert_series_beta",
        ]);
        if d == 2 {
            checks.push(BoundCheck::int(
                "postulation_leq_w",
                "pn <= e1 - e0 + lambda + 1",
                Sense::Upper,
                pn as i64,
                w,
                true,
            ));
        }
        (None, None)
    };

    let (thr, alpha, delta) = check_threshold_invariants(e0, e1, lambda, mu, beta_value)?;
    if mu.is_none() {
        skipped.push("alpha_mu");
    }
    checks.extend(thr);

    let terms = data.h0_table.len();
    let target = data.poincare_series(1);
    if let (Some(b), Some(beta_value)) = (b, beta_value) {
        let bound = beta_series_bound(lambda, b, e0, beta_value)?;
        let cmp = RationalSeries::compare_on_range(&target, &bound, terms);
        let sense = if beta_value <= 1 {
            Sense::Equal
        } else {
            Sense::Upper
        };
        checks.push(BoundCheck::series(
            "hilbert_series_beta",
            "P1 = or <= (lambda + (b - lambda)T + (e0 - b - 1)T^2 + T^beta)/(1-T)^2",
            sense,
            target.clone(),
            bound,
            cmp,
            CheckScope::SuppliedRange,
        ));
    }
    let bound = threshold_series_bound(lambda, e0, alpha, delta, d + 1)?;
    let cmp = RationalSeries::compare_on_range(&target, &bound, terms);
    checks.push(BoundCheck::series(
        "hilbert_series_threshold",
        THRESHOLD_STATEMENT,
        Sense::Upper,
        target,
        bound,
        cmp,
        CheckScope::SuppliedRange,
    ));

    checks.sort_by_key(|c| !c.is_violation());
    Ok(ExternalReport {
        data: data.clone(),
        pn,
        lambda,
        mu,
        b,
        beta: beta_value,
        w,
        rho: rho_value,
        alpha,
        delta,
        checks,
        skipped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(s: &[i64], g: &[i64]) -> InstanceReport {
        let s = NumericalSemigroup::from_generators(s).unwrap();
        full_report(&SemigroupIdeal::from_generators(&s, g).unwrap()).unwrap()
    }

    fn int(c: &BoundCheck) -> (i64, i64) {
        match (&c.target, &c.bound) {
            (Value::Int(t), Value::Int(b)) => (*t, *b),
            _ => panic!("{} is not an integer check", c.name),
        }
    }

    fn get<'a>(r: &'a InstanceReport, name: &str) -> &'a BoundCheck {
        r.check(name).unwrap_or_else(|| panic!("missing {name}"))
    }

    #[test]
    fn every_check_appears_once() {
        for (s, g) in [
            (&[3, 4, 5][..], &[6, 7][..]),
            (&[2, 3], &[4, 5]),
            (&[1], &[3]),
        ] {
            let r = report(s, g);
            assert_eq!(r.checks.len(), CHECK_NAMES.len());
            for name in CHECK_NAMES {
                assert_eq!(
                    r.checks.iter().filter(|c| c.name == name).count(),
                    1,
                    "{name}"
                );
            }
        }
    }

    #[test]
    fn northcott_examples() {
        let r = report(&[2, 3], &[4, 5]);
        assert_eq!(int(get(&r, "northcott_upper")), (1, 1));
        assert!(get(&r, "northcott_upper").tight);
        assert_eq!(int(get(&r, "order_multiplicity")), (4, 4));
        assert!(get(&r, "order_multiplicity").tight);

        let r = report(&[1], &[4]);
        assert!(get(&r, "northcott_lower").tight);
        assert!(get(&r, "northcott_upper").tight);

        let r = report(&[3, 4, 5], &[6, 7]);
        assert_eq!(int(get(&r, "northcott_upper")), (1, 2));
        assert!(!get(&r, "northcott_upper").tight);
        assert_eq!(int(get(&r, "order_multiplicity")), (6, 6));
    }

    #[test]
    fn epsilon_examples() {
        let r = report(&[2, 3], &[4, 5]);
        assert_eq!((r.derived.epsilon, r.derived.epsilon_pn), (1, 1));
        assert!(get(&r, "epsilon").tight && get(&r, "epsilon_pn").tight);
        let r = report(&[3, 4, 5], &[6, 7]);
        assert_eq!(r.derived.epsilon, 2);
        assert!(get(&r, "epsilon").tight);
        let r = report(&[1], &[5]);
        assert_eq!(r.derived.epsilon, 0);
        assert!(get(&r, "epsilon").tight);
    }

    #[test]
    fn rho_and_ring_bound() {
        assert_eq!(report(&[2, 3], &[4, 5]).derived.rho, 4);
        assert_eq!(report(&[3, 4, 5], &[6, 7]).derived.rho, 11);
        let r = report(&[1], &[1]);
        assert_eq!(r.derived.rho, 0);
        assert!(get(&r, "rho").tight);

        assert_eq!(int(get(&report(&[2, 3], &[2, 3]), "ring_e1")), (1, 1));
        assert_eq!(int(get(&report(&[3, 4, 5], &[3, 4, 5]), "ring_e1")), (2, 2));
        assert_eq!(int(get(&report(&[1], &[1]), "ring_e1")), (0, 0));
    }

    #[test]
    fn epsilon_versus_rho() {
        let r = report(&[2, 3], &[4, 5]);
        let c = get(&r, "epsilon_vs_rho");
        assert!(c.applicable && c.holds && !c.tight);
        assert_eq!(int(c), (1, 4));

        let r = report(&[3, 4, 5], &[6, 7]);
        let c = get(&r, "epsilon_vs_rho_strict");
        assert!(c.applicable && c.holds);
        assert_eq!(int(c), (2, 11));

        let r = report(&[2, 3], &[2, 3]);
        let c = get(&r, "epsilon_vs_rho");
        assert!(!c.applicable && c.holds);
    }

    #[test]
    fn remark_bounds() {
        let r = report(&[3, 4, 5], &[6, 7]);
        assert_eq!(r.derived.alpha_pn, 6);
        assert_eq!(int(get(&r, "alpha_pn_bound")), (2, 6));
        assert_eq!(int(get(&r, "epsilon_binomial")), (2, 6));

        let r = report(&[2, 3], &[4, 5]);
        assert_eq!(int(get(&r, "alpha_pn_bound")), (1, 2));
        let c = get(&r, "epsilon_binomial");
        assert_eq!(int(c), (1, 1));
        assert!(c.tight);

        let r = report(&[2, 3], &[2, 3]);
        assert!(!get(&r, "alpha_pn_bound").applicable);
        assert!(!get(&r, "epsilon_binomial").applicable);
    }

    #[test]
    fn postulation_examples() {
        let r = report(&[3, 4, 5], &[6, 7]);
        assert_eq!((r.derived.beta, r.derived.w), (2, 2));
        for name in ["beta_postulation", "beta_leq_w", "stability_bound"] {
            assert!(get(&r, name).tight, "{name}");
        }
        let r = report(&[2, 3], &[4, 5]);
        assert_eq!((r.derived.beta, r.derived.w), (1, 1));
        assert!(get(&r, "beta_postulation").tight);
        let r = report(&[1], &[6]);
        assert_eq!(r.derived.beta, 0);
        assert!(get(&r, "beta_postulation").tight);
    }

    #[test]
    fn beta_cases() {
        assert_eq!(beta(5, 0, 5, 5), Ok(0));
        assert_eq!(beta(4, 1, 3, 4), Ok(1));
        assert_eq!(beta(6, 2, 5, 5), Ok(2));
        assert!(matches!(beta(3, 0, 1, 4), Err(Error::InvalidInvariants(_))));
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(alpha_threshold(6, 2, 5), Ok(4));
        assert_eq!(delta(6, 2, 5, 4), 20);
        assert_eq!(alpha_threshold(4, 1, 3), Ok(3));
        assert_eq!(delta(4, 1, 3, 3), 8);
        assert_eq!(alpha_threshold(1, 0, 1), Ok(1));
        assert_eq!(delta(1, 0, 1, 1), 1);
        assert_eq!(alpha_threshold(2, 3, 1), Err(Error::ThresholdUndefined(-2)));

        let r = report(&[3, 4, 5], &[6, 7]);
        assert_eq!((r.derived.alpha, r.derived.delta), (4, 20));
        assert_eq!(int(get(&r, "beta_delta")), (2, 22));
        assert_eq!(int(get(&r, "alpha_mu")), (4, 1));
        let r = report(&[2, 3], &[4, 5]);
        assert_eq!(int(get(&r, "beta_delta")), (1, 10));
        let r = report(&[1], &[1]);
        assert_eq!(int(get(&r, "beta_delta")), (0, 3));
    }

    #[test]
    fn hilbert_series_checks() {
        let r = report(&[3, 4, 5], &[6, 7]);
        let c = get(&r, "hilbert_series_beta");
        assert_eq!(
            c.bound,
            Value::Series(RationalSeries::new(vec![5, 0, 1], 2))
        );
        assert!(c.tight && c.holds);

        let r = report(&[1], &[3]);
        let c = get(&r, "hilbert_series_beta");
        assert_eq!(c.bound, Value::Series(RationalSeries::new(vec![3], 2)));
        assert!(c.tight && c.sense == Sense::Equal);

        let r = report(&[2, 3], &[4, 5]);
        let c = get(&r, "hilbert_series_beta");
        let Value::Series(b) = &c.bound else { panic!() };
        assert_eq!(b, &RationalSeries::new(vec![3, 1], 2));
        assert_eq!(b.expand(3), vec![3, 7, 11]);
        assert!(c.tight);
    }

    #[test]
    fn threshold_series_checks() {
        let r = report(&[3, 4, 5], &[6, 7]);
        let c = get(&r, "hilbert_series_threshold");
        let Value::Series(b) = &c.bound else { panic!() };
        assert_eq!(&b.numerator()[..3], &[5, 20, -20]);
        assert_eq!(b.numerator()[22], 1);
        assert_eq!(b.degree(), 22);
        assert_eq!(b.expand(4), vec![5, 30, 35, 40]);
        assert!(c.holds && !c.tight);

        let r = report(&[1], &[1]);
        let c = get(&r, "hilbert_series_threshold");
        let Value::Series(b) = &c.bound else { panic!() };
        assert_eq!(b.numerator(), &[1, 1, -2, 1]);
        assert_eq!(b.expand(5), vec![1, 3, 3, 4, 5]);
        assert!(c.holds);
    }

    #[test]
    fn worked_reports_have_no_violations() {
        for (s, g) in [
            (&[3, 4, 5][..], &[6, 7][..]),
            (&[2, 3], &[4, 5]),
            (&[1], &[3]),
        ] {
            let r = report(s, g);
            assert_eq!(
                r.violations().count(),
                0,
                "{:?}",
                r.violations().collect::<Vec<_>>()
            );
        }
        let r = report(&[3, 4, 5], &[6, 7]);
        for name in [
            "epsilon",
            "beta_postulation",
            "stability_bound",
            "beta_leq_w",
            "hilbert_series_beta",
        ] {
            assert!(get(&r, name).tight, "{name}");
        }
    }

    /// Instances where the literal statements fail; see the README.
    #[test]
    fn known_counterexamples() {
        let cases: [(&[i64], &[i64], &[&str]); 5] = [
            (&[3, 4], &[4, 6], &["epsilon_binomial"]),
            (&[4, 5], &[5], &["epsilon_binomial"]),
            (&[2, 3], &[3], &["epsilon_vs_rho"]),
            (&[3, 5], &[5], &["epsilon_vs_rho", "epsilon_binomial"]),
            (
                &[3, 4, 5],
                &[5],
                &["epsilon_vs_rho_strict", "epsilon_binomial"],
            ),
        ];
        for (s, g, expected) in cases {
            let r = report(s, g);
            let found: Vec<&str> = r.violations().map(|c| c.name).collect();
            assert_eq!(found, expected, "{s:?} {g:?}");
        }
        let r = report(&[3, 4], &[4, 6]);
        assert_eq!((r.derived.epsilon, r.ring.e1), (5, 3));
    }

    #[test]
    fn external_matches_computed() {
        let x = ExternalHilbertData::ingest(1, &[5, 5, 6, 6, 6], 2).unwrap();
        let e = external_report(&x, Some(2), None).unwrap();
        let r = report(&[3, 4, 5], &[6, 7]);
        assert_eq!(
            (e.beta, e.w, e.rho, e.alpha, e.delta),
            (Some(2), 2, Some(11), 4, 20)
        );
        for c in &e.checks {
            let other = get(&r, c.name);
            assert_eq!(
                (c.applicable, c.holds, c.tight, &c.bound, &c.target),
                (
                    other.applicable,
                    other.holds,
                    other.tight,
                    &other.bound,
                    &other.target
                ),
                "{}",
                c.name
            );
        }
        assert!(e.skipped.contains(&"epsilon"));
    }

    #[test]
    fn external_regular_plane() {
        let x = ExternalHilbertData::ingest(2, &[1, 2, 3, 4, 5], 0).unwrap();
        let e = external_report(&x, None, None).unwrap();
        assert_eq!((x.e0(), x.e1()), (1, 0));
        assert_eq!(e.violations().count(), 0);
        let c = e.check("hilbert_series_threshold").unwrap();
        assert!(c.holds && c.scope == CheckScope::SuppliedRange);
        assert!(e.skipped.contains(&"beta_postulation"));
        assert!(e.check("postulation_leq_w").unwrap().holds);

        let x = ExternalHilbertData::ingest(1, &[1, 2, 2], 1).unwrap();
        let e = external_report(&x, Some(2), Some(1)).unwrap();
        assert_eq!(e.violations().count(), 0);
        assert!(external_report(&x, None, Some(3)).is_err());
    }
}
