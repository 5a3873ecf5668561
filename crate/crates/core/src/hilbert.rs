//! Hilbert-Samuel functions of m-primary monomial ideals.
//!
//! For an ideal with value set `E`, `H0(n) = Length(I^n / I^(n+1))` is the
//! number of integers in `nE \ (n+1)E`. Powers are iterated until the value set
//! of `I^(n+1)` is the translate `min(E) + nE`; from there on every later power
//! is a translate as well, so the function is constant equal to `min(E)`.

use crate::error::{Error, Result};
use crate::ideal::SemigroupIdeal;
use crate::series::{binomial, RationalSeries};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertRecord {
    pub dimension: u32,
    /// `H0(0), ..., H0(N)` with `N = reduction_index + 2`.
    pub h0_table: Vec<i64>,
    pub e0: i64,
    pub e1: i64,
    pub pn: usize,
    /// `v_n = e0 - H0(n)` for `n < pn`; all positive.
    pub v_seq: Vec<i64>,
    /// Least `n` with `I^(n+1) = t^e0 I^n`, a reduction number for the
    /// principal reduction `(t^e0)`.
    pub reduction_index: usize,
    pub lambda: i64,
}

/// Hilbert data for a ring of any dimension, supplied as a table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExternalHilbertData {
    pub dimension: u32,
    pub h0_table: Vec<i64>,
    pub declared_pn: usize,
    /// `e_0, ..., e_d`. The first `d` come from the tail of `H0`, the last from
    /// the first sum function `H1`.
    pub coefficients: Vec<i64>,
}

/// Iteration cap for [`HilbertRecord::compute`].
pub fn stabilization_cap(ideal: &SemigroupIdeal) -> usize {
    let s = ideal.ambient();
    let top = *ideal.min_generators().last().unwrap();
    (s.frobenius() + top + ideal.colength() + 2).max(1) as usize
}

impl HilbertRecord {
    pub fn compute(ideal: &SemigroupIdeal) -> Result<Self> {
        let e0 = ideal.min_value();
        let cap = stabilization_cap(ideal);
        let lambda = ideal.colength();

        let is_translate = |next: &SemigroupIdeal, prev: &[i64]| {
            next.min_generators().len() == prev.len()
                && next
                    .min_generators()
                    .iter()
                    .zip(prev)
                    .all(|(a, b)| *a == b + e0)
        };

        let mut h0 = vec![lambda];
        let reduction_index = if ideal.min_generators() == [e0] {
            0
        } else {
            let mut cur = ideal.clone();
            let mut cur_len = lambda;
            let mut n = 1;
            loop {
                if n > cap {
                    return Err(Error::StabilizationCapExceeded { cap });
                }
                let next = cur.product(ideal)?;
                let next_len = next.colength();
                h0.push(next_len - cur_len);
                if is_translate(&next, cur.min_generators()) {
                    break n;
                }
                cur = next;
                cur_len = next_len;
                n += 1;
            }
        };
        // I^(n+1) = t^e0 I^n for all n >= reduction_index, so H0 is e0 there.
        while h0.len() < reduction_index + 3 {
            h0.push(e0);
        }

        if let Some(&bad) = h0.iter().find(|&&h| h > e0) {
            return Err(Error::InvalidInvariants(format!(
                "H0 value {bad} exceeds multiplicity {e0}"
            )));
        }
        let pn = h0.iter().rposition(|&h| h != e0).map_or(0, |i| i + 1);
        let v_seq: Vec<i64> = h0[..pn].iter().map(|&h| e0 - h).collect();
        if v_seq.iter().any(|&v| v < 1) {
            return Err(Error::InvalidInvariants(
                "Hilbert function returned to e0 and left it again".into(),
            ));
        }
        let e1 = v_seq.iter().sum();
        Ok(HilbertRecord {
            dimension: 1,
            h0_table: h0,
            e0,
            e1,
            pn,
            v_seq,
            reduction_index,
            lambda,
        })
    }

    /// `H0(n)` for any `n`, using the stabilized value past the table.
    pub fn h0(&self, n: usize) -> i64 {
        self.h0_table.get(n).copied().unwrap_or(self.e0)
    }

    /// `H0(1) = Length(I / I^2)`.
    pub fn b(&self) -> i64 {
        self.h0(1)
    }

    /// `H^i(0), ..., H^i(terms - 1)`, the `i`-fold cumulative sums of `H0`.
    pub fn hilbert_sum(&self, i: u32, terms: usize) -> Vec<i64> {
        let mut out: Vec<i64> = (0..terms).map(|n| self.h0(n)).collect();
        for _ in 0..i {
            for n in 1..terms {
                out[n] += out[n - 1];
            }
        }
        out
    }

    /// `P^i = f(T) / (1 - T)^(1 + i)`, with `deg f <= pn`.
    pub fn poincare_series(&self, i: u32) -> RationalSeries {
        let head: Vec<i128> = self.h0_table[..=self.pn]
            .iter()
            .map(|&h| h as i128)
            .collect();
        let p0 = RationalSeries::from_leading_coefficients(&head, self.dimension);
        RationalSeries::new(p0.numerator().to_vec(), self.dimension + i)
    }
}

/// Value at `x` of the `i`-th Hilbert polynomial
/// `sum_j (-1)^j e_j C(x + d + i - j - 1, d + i - j - 1)`, `j < d + i`.
/// Missing trailing coefficients count as zero.
pub fn hilbert_polynomial_value(coeffs: &[i64], d: u32, i: u32, x: i64) -> i128 {
    let top = d + i;
    (0..top)
        .map(|j| {
            let e = coeffs.get(j as usize).copied().unwrap_or(0) as i128;
            let sign = if j % 2 == 0 { 1 } else { -1 };
            let k = top - j - 1;
            sign * e * binomial(x as i128 + k as i128, k)
        })
        .sum()
}

impl ExternalHilbertData {
    pub fn ingest(dimension: u32, table: &[i64], declared_pn: usize) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::InvalidInvariants(
                "dimension must be positive".into(),
            ));
        }
        let d = dimension as usize;
        let needed = declared_pn + d;
        if table.len() < needed {
            return Err(Error::TableTooShort {
                len: table.len(),
                needed,
            });
        }

        // Fit e_0..e_{d-1} from the last d entries. After removing the known
        // terms, the (d-1-k)-th forward difference isolates (-1)^k e_k.
        let start = table.len() - d;
        let mut coefficients: Vec<i64> = Vec::with_capacity(d + 1);
        for k in 0..d {
            let residual: Vec<i128> = (0..d - k)
                .map(|t| {
                    let x = (start + t) as i64;
                    table[start + t] as i128
                        - hilbert_polynomial_value(&coefficients, dimension, 0, x)
                })
                .collect();
            let order = d - 1 - k;
            let delta: i128 = (0..=order)
                .map(|t| {
                    let sign = if (order - t).is_multiple_of(2) { 1 } else { -1 };
                    sign * binomial(order as i128, t as u32) * residual[t]
                })
                .sum();
            let ek = if k % 2 == 0 { delta } else { -delta };
            coefficients.push(ek as i64);
        }

        for (n, &found) in table.iter().enumerate().skip(declared_pn) {
            let expected = hilbert_polynomial_value(&coefficients, dimension, 0, n as i64) as i64;
            if found != expected {
                return Err(Error::PolynomialFitInconsistent {
                    index: n,
                    found,
                    expected,
                });
            }
        }
        if coefficients[0] < 1 {
            return Err(Error::InvalidInvariants(format!(
                "fitted multiplicity {} is not positive",
                coefficients[0]
            )));
        }

        // e_d from H1 at the last index, where H1 agrees with its polynomial.
        let last = table.len() - 1;
        let h1_last: i128 = table.iter().map(|&h| h as i128).sum();
        let partial = hilbert_polynomial_value(&coefficients, dimension, 1, last as i64);
        let ed = if d.is_multiple_of(2) {
            h1_last - partial
        } else {
            partial - h1_last
        };
        coefficients.push(ed as i64);

        Ok(ExternalHilbertData {
            dimension,
            h0_table: table.to_vec(),
            declared_pn,
            coefficients,
        })
    }

    pub fn e0(&self) -> i64 {
        self.coefficients[0]
    }

    pub fn e1(&self) -> i64 {
        self.coefficients[1]
    }

    /// `Length(R/I)`, read from `H0(0)`.
    pub fn lambda(&self) -> i64 {
        self.h0_table[0]
    }

    /// `H0(n)` on the table, and the fitted polynomial past it.
    pub fn h0(&self, n: usize) -> i64 {
        match self.h0_table.get(n) {
            Some(&h) => h,
            None => {
                hilbert_polynomial_value(&self.coefficients, self.dimension, 0, n as i64) as i64
            }
        }
    }

    pub fn poincare_series(&self, i: u32) -> RationalSeries {
        let values: Vec<i128> = self.h0_table.iter().map(|&h| h as i128).collect();
        let p0 = RationalSeries::from_leading_coefficients(&values, self.dimension);
        RationalSeries::new(p0.numerator().to_vec(), self.dimension + i)
    }
}
