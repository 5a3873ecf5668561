//! Rational power series `f(T) / (1 - T)^k` with integer numerators.
//!
//! Coefficients are exact `i128`. Beyond the numerator degree, the `n`-th
//! coefficient of such a series is a polynomial in `n` of degree below `k`,
//! which is what makes a finite comparison conclusive.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalSeries {
    numerator: Vec<i128>,
    pole_order: u32,
}

/// Outcome of a coefficient-wise comparison `lhs <= rhs`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesRelation {
    Equal,
    /// `lhs <= rhs` everywhere, strictly at some index.
    LeqStrictSomewhere,
    /// Some coefficient of `lhs` exceeds the matching one of `rhs`.
    Incomparable,
}

/// Sign information on `rhs - lhs` past the explicit horizon.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TailVerdict {
    Zero,
    NonNegative,
    NonPositive,
    Mixed,
    /// Comparison was restricted to a finite range.
    Unchecked,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesComparison {
    pub relation: SeriesRelation,
    pub first_divergence: Option<usize>,
    pub checked_upto: usize,
    pub tail: TailVerdict,
}

impl SeriesComparison {
    pub fn holds(&self) -> bool {
        self.relation != SeriesRelation::Incomparable
    }
}

fn trim(mut v: Vec<i128>) -> Vec<i128> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Generalized binomial `C(x, k)` for any integer `x` and `k >= 0`.
pub fn binomial(x: i128, k: u32) -> i128 {
    let mut acc: i128 = 1;
    for j in 0..k as i128 {
        // exact: acc * (x - j) is j+1 times an integer-valued binomial
        acc = acc * (x - j) / (j + 1);
    }
    acc
}

impl RationalSeries {
    pub fn new(numerator: Vec<i128>, pole_order: u32) -> Self {
        RationalSeries {
            numerator: trim(numerator),
            pole_order,
        }
    }

    pub fn polynomial(coefficients: Vec<i128>) -> Self {
        Self::new(coefficients, 0)
    }

    /// Numerator over `(1 - T)^k` of the series whose coefficients begin with
    /// `values`, assuming the true numerator has degree below `values.len()`.
    pub fn from_leading_coefficients(values: &[i128], pole_order: u32) -> Self {
        let mut num = values.to_vec();
        for _ in 0..pole_order {
            for i in (1..num.len()).rev() {
                num[i] -= num[i - 1];
            }
        }
        Self::new(num, pole_order)
    }

    pub fn numerator(&self) -> &[i128] {
        &self.numerator
    }

    pub fn pole_order(&self) -> u32 {
        self.pole_order
    }

    pub fn degree(&self) -> usize {
        self.numerator.len().saturating_sub(1)
    }

    /// Removes common factors `(1 - T)` between numerator and denominator.
    pub fn canonical(&self) -> Self {
        let mut num = self.numerator.clone();
        let mut k = self.pole_order;
        while k > 0 && num.iter().sum::<i128>() == 0 {
            if num.is_empty() {
                k = 0;
                break;
            }
            // num = (1 - T) q
            let mut q = Vec::with_capacity(num.len() - 1);
            let mut carry = 0;
            for &c in &num[..num.len() - 1] {
                carry += c;
                q.push(carry);
            }
            num = q;
            k -= 1;
        }
        Self::new(num, k)
    }

    /// Same series written over `(1 - T)^pole_order`.
    pub fn lifted(&self, pole_order: u32) -> Self {
        assert!(pole_order >= self.pole_order);
        let mut num = self.numerator.clone();
        for _ in self.pole_order..pole_order {
            // multiply by (1 - T)
            let shifted = std::iter::once(0).chain(num.iter().copied());
            num = num
                .iter()
                .copied()
                .chain(std::iter::once(0))
                .zip(shifted)
                .map(|(a, b)| a - b)
                .collect();
        }
        Self::new(num, pole_order)
    }

    pub fn add(&self, other: &Self) -> Self {
        let k = self.pole_order.max(other.pole_order);
        let (a, b) = (self.lifted(k), other.lifted(k));
        let len = a.numerator.len().max(b.numerator.len());
        let num = (0..len).map(|i| a.coef(i) + b.coef(i)).collect::<Vec<_>>();
        Self::new(num, k)
    }

    pub fn scale(&self, factor: i128) -> Self {
        Self::new(
            self.numerator.iter().map(|c| c * factor).collect(),
            self.pole_order,
        )
    }

    fn coef(&self, i: usize) -> i128 {
        self.numerator.get(i).copied().unwrap_or(0)
    }

    /// First `terms` coefficients of the expansion.
    pub fn expand(&self, terms: usize) -> Vec<i128> {
        let mut out: Vec<i128> = (0..terms).map(|i| self.coef(i)).collect();
        for _ in 0..self.pole_order {
            for i in 1..terms {
                out[i] += out[i - 1];
            }
        }
        out
    }

    /// The `n`-th coefficient, evaluated in closed form.
    pub fn coefficient(&self, n: usize) -> i128 {
        if self.pole_order == 0 {
            return self.coef(n);
        }
        let k = self.pole_order;
        self.numerator
            .iter()
            .enumerate()
            .take_while(|(i, _)| *i <= n)
            .map(|(i, &c)| c * binomial((n - i) as i128 + k as i128 - 1, k - 1))
            .sum()
    }

    /// Default comparison horizon: past both numerators plus the pole order.
    pub fn default_horizon(lhs: &Self, rhs: &Self) -> usize {
        lhs.degree().max(rhs.degree()) + lhs.pole_order.max(rhs.pole_order) as usize + 2
    }

    /// Coefficient-wise comparison of `lhs <= rhs` over all indices.
    ///
    /// Indices up to `horizon` are compared directly. Past the horizon the
    /// difference is a polynomial in `n`; its sign is settled by stepping
    /// forward until every finite difference shares a sign.
    pub fn compare(lhs: &Self, rhs: &Self, horizon: usize) -> Result<SeriesComparison> {
        let k = lhs.pole_order.max(rhs.pole_order);
        let (a, b) = (lhs.lifted(k), rhs.lifted(k));
        let degree = a.degree().max(b.degree());
        if horizon < degree {
            return Err(Error::HorizonTooSmall { horizon, degree });
        }
        let diff = b.add(&a.scale(-1));

        let head = diff.expand(horizon + 1);
        let mut first = head.iter().position(|&c| c != 0);
        let mut pos = head.iter().any(|&c| c > 0);
        let mut neg = head.iter().any(|&c| c < 0);

        let (tail, tail_first) = diff.tail_sign(horizon + 1);
        match tail {
            TailVerdict::NonNegative => pos = true,
            TailVerdict::NonPositive => neg = true,
            TailVerdict::Mixed => {
                pos = true;
                neg = true;
            }
            TailVerdict::Zero | TailVerdict::Unchecked => {}
        }
        if first.is_none() {
            first = tail_first;
        }

        let relation = match (pos, neg) {
            (false, false) => SeriesRelation::Equal,
            (_, false) => SeriesRelation::LeqStrictSomewhere,
            _ => SeriesRelation::Incomparable,
        };
        Ok(SeriesComparison {
            relation,
            first_divergence: first,
            checked_upto: horizon,
            tail,
        })
    }

    /// Comparison restricted to indices `0..terms`.
    pub fn compare_on_range(lhs: &Self, rhs: &Self, terms: usize) -> SeriesComparison {
        let (a, b) = (lhs.expand(terms), rhs.expand(terms));
        let diff: Vec<i128> = b.iter().zip(&a).map(|(x, y)| x - y).collect();
        let relation = if diff.iter().any(|&c| c < 0) {
            SeriesRelation::Incomparable
        } else if diff.iter().any(|&c| c > 0) {
            SeriesRelation::LeqStrictSomewhere
        } else {
            SeriesRelation::Equal
        };
        SeriesComparison {
            relation,
            first_divergence: diff.iter().position(|&c| c != 0),
            checked_upto: terms.saturating_sub(1),
            tail: TailVerdict::Unchecked,
        }
    }

    /// Sign of the coefficients at indices `>= start`, which must lie past
    /// the numerator degree. Also returns the first nonzero index there.
    fn tail_sign(&self, start: usize) -> (TailVerdict, Option<usize>) {
        let k = self.pole_order as usize;
        if k == 0 || self.numerator.is_empty() {
            return (TailVerdict::Zero, None);
        }
        let mut pos = false;
        let mut neg = false;
        let mut first = None;
        let mut n = start;
        loop {
            // finite differences of orders 0..k at n; order k vanishes
            let values: Vec<i128> = (0..k).map(|t| self.coefficient(n + t)).collect();
            let mut diffs = Vec::with_capacity(k);
            let mut row = values;
            while !row.is_empty() {
                diffs.push(row[0]);
                row = row.windows(2).map(|w| w[1] - w[0]).collect();
            }
            let all_zero = diffs.iter().all(|&d| d == 0);
            let all_nonneg = diffs.iter().all(|&d| d >= 0);
            let all_nonpos = diffs.iter().all(|&d| d <= 0);
            if all_zero {
                break;
            }
            if all_nonneg || all_nonpos {
                if all_nonneg {
                    pos = true;
                } else {
                    neg = true;
                }
                if first.is_none() {
                    // nonzero polynomial of degree < k: a nonzero value
                    // appears within k steps
                    first = (n..n + k).find(|&m| self.coefficient(m) != 0);
                }
                break;
            }
            let c = self.coefficient(n);
            if c != 0 && first.is_none() {
                first = Some(n);
            }
            pos |= c > 0;
            neg |= c < 0;
            n += 1;
        }
        let verdict = match (pos, neg) {
            (false, false) => TailVerdict::Zero,
            (true, false) => TailVerdict::NonNegative,
            (false, true) => TailVerdict::NonPositive,
            (true, true) => TailVerdict::Mixed,
        };
        (verdict, first)
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(usize, i128)> = self
            .numerator
            .iter()
            .copied()
            .enumerate()
            .filter(|(_, c)| *c != 0)
            .collect();
        let mut num = String::new();
        if terms.is_empty() {
            num.push('0');
        }
        for (idx, &(i, c)) in terms.iter().enumerate() {
            let mag = c.unsigned_abs();
            if idx == 0 {
                if c < 0 {
                    num.push('-');
                }
            } else {
                num.push_str(if c < 0 { " - " } else { " + " });
            }
            let monomial = match i {
                0 => String::new(),
                1 => "T".to_string(),
                _ => format!("T^{i}"),
            };
            if mag != 1 || i == 0 {
                num.push_str(&mag.to_string());
            }
            num.push_str(&monomial);
        }
        match self.pole_order {
            0 => write!(f, "{num}"),
            k => {
                if terms.len() > 1 {
                    write!(f, "({num})")?;
                } else {
                    write!(f, "{num}")?;
                }
                if k == 1 {
                    write!(f, "/(1-T)")
                } else {
                    write!(f, "/(1-T)^{k}")
                }
            }
        }
    }
}
