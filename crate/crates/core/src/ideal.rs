//! Monomial ideals of a numerical semigroup ring, modelled by their value sets.
//!
//! An m-primary monomial ideal `I` corresponds to a semigroup ideal
//! `E = (g1 + S) ∪ ... ∪ (gk + S)` with every `gi >= 1`. Products of ideals are
//! sumsets of value sets, so all lengths reduce to counting integers.

use std::fmt;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SemigroupIdeal {
    ambient: NumericalSemigroup,
    min_generators: Vec<i64>,
}

/// Length-type invariants of a single ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdealProfile {
    /// `λ(I) = |S \ E|`
    pub colength: i64,
    /// `o(I)`, the largest `n` with `I ⊆ m^n`
    pub order: i64,
    /// `b(I) = |E \ 2E|`, the length of `I/I^2`
    pub conormal_length: i64,
    /// number of minimal monomial generators
    pub mu: i64,
    pub min_value: i64,
}

/// A power `I^n`. The zeroth power is the whole ring, which is never stored as
/// a [`SemigroupIdeal`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealPower {
    Unit(NumericalSemigroup),
    Proper(SemigroupIdeal),
}

impl IdealPower {
    pub fn contains(&self, x: i64) -> bool {
        match self {
            IdealPower::Unit(s) => s.contains(x),
            IdealPower::Proper(i) => i.contains(x),
        }
    }

    /// Number of semigroup elements outside the power, `Length(R/I^n)`.
    pub fn colength(&self) -> i64 {
        match self {
            IdealPower::Unit(_) => 0,
            IdealPower::Proper(i) => i.colength(),
        }
    }

    pub fn value_set(&self, window: i64) -> Vec<i64> {
        (0..window).filter(|&x| self.contains(x)).collect()
    }

    pub fn into_ideal(self) -> Option<SemigroupIdeal> {
        match self {
            IdealPower::Unit(_) => None,
            IdealPower::Proper(i) => Some(i),
        }
    }
}

fn minimalize(ambient: &NumericalSemigroup, mut gens: Vec<i64>) -> Vec<i64> {
    gens.sort_unstable();
    gens.dedup();
    let keep: Vec<bool> = gens
        .iter()
        .map(|&g| !gens.iter().any(|&h| h < g && ambient.contains(g - h)))
        .collect();
    gens.into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect()
}

impl SemigroupIdeal {
    pub fn from_generators(ambient: &NumericalSemigroup, gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for &g in gens {
            if g == 0 {
                return Err(Error::UnitIdeal);
            }
            if !ambient.contains(g) {
                return Err(Error::GeneratorNotInSemigroup(g));
            }
        }
        Ok(Self::from_valid(ambient.clone(), gens.to_vec()))
    }

    /// Caller guarantees every generator is a nonzero element of `ambient`.
    pub(crate) fn from_valid(ambient: NumericalSemigroup, gens: Vec<i64>) -> Self {
        let min_generators = minimalize(&ambient, gens);
        SemigroupIdeal {
            ambient,
            min_generators,
        }
    }

    /// The maximal ideal `m`, generated by the minimal generators of `S`.
    pub fn maximal(ambient: &NumericalSemigroup) -> Self {
        SemigroupIdeal {
            ambient: ambient.clone(),
            min_generators: ambient.min_generators().to_vec(),
        }
    }

    pub fn ambient(&self) -> &NumericalSemigroup {
        &self.ambient
    }

    pub fn min_generators(&self) -> &[i64] {
        &self.min_generators
    }

    /// `min(E)`, which is also the multiplicity `e0(I)`.
    pub fn min_value(&self) -> i64 {
        self.min_generators[0]
    }

    pub fn contains(&self, x: i64) -> bool {
        self.min_generators
            .iter()
            .any(|&g| g <= x && self.ambient.contains(x - g))
    }

    /// Every integer at or above this bound lies in `E`.
    pub fn saturation_bound(&self) -> i64 {
        self.min_value() + self.ambient.conductor()
    }

    /// `E ∩ [0, window)`.
    pub fn value_set(&self, window: i64) -> Vec<i64> {
        (0..window).filter(|&x| self.contains(x)).collect()
    }

    pub fn product(&self, other: &SemigroupIdeal) -> Result<SemigroupIdeal> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        let sums = self
            .min_generators
            .iter()
            .flat_map(|&a| other.min_generators.iter().map(move |&b| a + b))
            .collect();
        Ok(Self::from_valid(self.ambient.clone(), sums))
    }

    pub fn power(&self, n: usize) -> IdealPower {
        if n == 0 {
            return IdealPower::Unit(self.ambient.clone());
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.product(self).expect("same ambient");
        }
        IdealPower::Proper(acc)
    }

    /// `λ(I) = |S \ E|`.
    pub fn colength(&self) -> i64 {
        (0..self.saturation_bound())
            .filter(|&x| self.ambient.contains(x) && !self.contains(x))
            .count() as i64
    }

    /// `b(I) = |E \ (E + E)|`.
    pub fn conormal_length(&self) -> i64 {
        let square = self.product(self).expect("same ambient");
        (self.min_value()..square.saturation_bound())
            .filter(|&x| self.contains(x) && !square.contains(x))
            .count() as i64
    }

    /// Largest `n` with `E` inside the value set of `m^n`.
    pub fn order(&self) -> i64 {
        let maximal = SemigroupIdeal::maximal(&self.ambient);
        let mut n = self.min_value() / self.ambient.multiplicity();
        while n > 1 {
            let mn = maximal.power(n as usize);
            if self.min_generators.iter().all(|&g| mn.contains(g)) {
                break;
            }
            n -= 1;
        }
        n
    }

    pub fn profile(&self) -> IdealProfile {
        IdealProfile {
            colength: self.colength(),
            order: self.order(),
            conormal_length: self.conormal_length(),
            mu: self.min_generators.len() as i64,
            min_value: self.min_value(),
        }
    }
}

impl fmt::Display for SemigroupIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.min_generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sg(g: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    fn ideal(s: &NumericalSemigroup, g: &[i64]) -> SemigroupIdeal {
        SemigroupIdeal::from_generators(s, g).unwrap()
    }

    /// `x ∈ E` iff `x - e ∈ S` for some `e` in a list of (not necessarily
    /// minimal) generators; the naive definition.
    fn naive_member(s: &NumericalSemigroup, gens: &[i64], x: i64) -> bool {
        gens.iter().any(|&g| s.contains(x - g))
    }

    /// Brute-force n-fold sumset of a finite set, truncated to `[0, w)`.
    fn sumset_power(base: &[i64], n: usize, w: i64, s: &NumericalSemigroup) -> Vec<i64> {
        let mut cur: Vec<i64> = (0..w).filter(|&x| s.contains(x)).collect();
        for _ in 0..n {
            let mut next = vec![false; w as usize];
            for &a in &cur {
                for &b in base {
                    if a + b < w {
                        next[(a + b) as usize] = true;
                    }
                }
            }
            cur = (0..w).filter(|&x| next[x as usize]).collect();
        }
        cur
    }

    #[test]
    fn minimal_generators() {
        let s = sg(&[2, 3]);
        assert_eq!(ideal(&s, &[4, 5, 6]).min_generators(), &[4, 5]);
        let s = sg(&[3, 4, 5]);
        assert_eq!(ideal(&s, &[6, 7]).min_generators(), &[6, 7]);
        assert_eq!(ideal(&sg(&[1]), &[3]).min_generators(), &[3]);
        assert_eq!(ideal(&sg(&[1]), &[5, 3, 9]).min_generators(), &[3]);
    }

    #[test]
    fn generator_errors() {
        let s = sg(&[2, 3]);
        assert_eq!(
            SemigroupIdeal::from_generators(&s, &[1]),
            Err(Error::GeneratorNotInSemigroup(1))
        );
        assert_eq!(
            SemigroupIdeal::from_generators(&s, &[0, 2]),
            Err(Error::UnitIdeal)
        );
        assert_eq!(
            SemigroupIdeal::from_generators(&s, &[]),
            Err(Error::EmptyGenerators)
        );
        let i = ideal(&s, &[2]);
        let j = ideal(&sg(&[3, 4, 5]), &[3]);
        assert_eq!(i.product(&j), Err(Error::AmbientMismatch));
    }

    #[test]
    fn value_sets() {
        let s = sg(&[3, 4, 5]);
        let i = ideal(&s, &[6, 7]);
        assert!(!naive_member(&s, &[6, 7], 8));
        assert_eq!(i.value_set(13), vec![6, 7, 9, 10, 11, 12]);
        let s = sg(&[2, 3]);
        assert_eq!(ideal(&s, &[2, 3]).value_set(6), vec![2, 3, 4, 5]);
        assert_eq!(ideal(&sg(&[1]), &[3]).value_set(5), vec![3, 4]);
    }

    #[test]
    fn products_and_powers() {
        let s = sg(&[3, 4, 5]);
        let i = ideal(&s, &[6, 7]);
        let sq = i.product(&i).unwrap();
        let oracle = sumset_power(&i.value_set(40), 2, 40, &s);
        assert_eq!(sq.value_set(40), oracle);
        assert_eq!(sq.value_set(40), (12..40).collect::<Vec<_>>());
        let cube = i.power(3);
        assert_eq!(cube.value_set(40), (18..40).collect::<Vec<_>>());
        assert_eq!(i.power(1), IdealPower::Proper(i.clone()));
        assert_eq!(i.power(0), IdealPower::Unit(s.clone()));

        let s = sg(&[2, 3]);
        let m = ideal(&s, &[2, 3]);
        assert_eq!(
            m.product(&m).unwrap().value_set(12),
            (4..12).collect::<Vec<_>>()
        );

        let n = sg(&[1]);
        let a = ideal(&n, &[4]);
        let b = ideal(&n, &[3]);
        assert_eq!(a.product(&b).unwrap().min_generators(), &[7]);
        assert_eq!(
            ideal(&n, &[2])
                .power(5)
                .into_ideal()
                .unwrap()
                .min_generators(),
            &[10]
        );
    }

    #[test]
    fn profiles() {
        let s = sg(&[2, 3]);
        let p = ideal(&s, &[4, 5]).profile();
        assert_eq!(
            p,
            IdealProfile {
                colength: 3,
                order: 2,
                conormal_length: 4,
                mu: 2,
                min_value: 4
            }
        );
        let s = sg(&[3, 4, 5]);
        let p = ideal(&s, &[6, 7]).profile();
        assert_eq!(
            p,
            IdealProfile {
                colength: 5,
                order: 2,
                conormal_length: 5,
                mu: 2,
                min_value: 6
            }
        );
        for k in 1..6 {
            let p = ideal(&sg(&[1]), &[k]).profile();
            assert_eq!(
                p,
                IdealProfile {
                    colength: k,
                    order: k,
                    conormal_length: k,
                    mu: 1,
                    min_value: k
                }
            );
        }
        assert_eq!(ideal(&s, &[6, 7]).power(0).colength(), 0);
    }

    #[test]
    fn profile_sets_by_enumeration() {
        // Γ \ E and E \ E² listed explicitly
        let s = sg(&[3, 4, 5]);
        let i = ideal(&s, &[6, 7]);
        let sq = i.product(&i).unwrap();
        let outside: Vec<i64> = (0..30)
            .filter(|&x| s.contains(x) && !i.contains(x))
            .collect();
        assert_eq!(outside, vec![0, 3, 4, 5, 8]);
        let conormal: Vec<i64> = (0..30)
            .filter(|&x| i.contains(x) && !sq.contains(x))
            .collect();
        assert_eq!(conormal, vec![6, 7, 9, 10, 11]);
    }

    /// Largest number of nonzero summands from S adding up to `x`.
    fn element_order(s: &NumericalSemigroup, x: i64) -> i64 {
        let mut best = vec![i64::MIN; x as usize + 1];
        best[0] = 0;
        for y in 1..=x {
            for z in 1..=y {
                if s.contains(z) && best[(y - z) as usize] >= 0 {
                    best[y as usize] = best[y as usize].max(best[(y - z) as usize] + 1);
                }
            }
        }
        best[x as usize]
    }

    fn semigroup_and_ideal() -> impl Strategy<Value = (NumericalSemigroup, SemigroupIdeal)> {
        let gens = prop::collection::vec(1i64..9, 1..4)
            .prop_filter("coprime", |g| {
                g.iter().fold(0, |a, &b| crate::semigroup::gcd(a, b)) == 1
            })
            .prop_map(|g| sg(&g));
        gens.prop_flat_map(|s| {
            let elems: Vec<i64> = (1..25).filter(|&x| s.contains(x)).collect();
            let pick = prop::collection::vec(prop::sample::select(elems), 1..4);
            (Just(s), pick)
        })
        .prop_map(|(s, g)| {
            let i = ideal(&s, &g);
            (s, i)
        })
    }

    proptest! {
        #[test]
        fn ideal_invariants((s, i) in semigroup_and_ideal()) {
            // minimality is idempotent
            let again = ideal(&s, i.min_generators());
            prop_assert_eq!(again.min_generators(), i.min_generators());
            for (a, &g) in i.min_generators().iter().enumerate() {
                for (b, &h) in i.min_generators().iter().enumerate() {
                    if a != b {
                        prop_assert!(!s.contains(g - h));
                    }
                }
            }
            // saturation
            for x in i.saturation_bound()..i.saturation_bound() + 10 {
                prop_assert!(i.contains(x));
            }
            let p = i.profile();
            prop_assert!(p.colength >= 1);
            prop_assert!(p.order >= 1);
            prop_assert!(p.order * s.multiplicity() <= p.min_value);
            prop_assert!(p.conormal_length >= 1);
            prop_assert_eq!(p.mu as usize, i.min_generators().len());
            let via_elements = i.min_generators().iter().map(|&g| element_order(&s, g)).min().unwrap();
            prop_assert_eq!(p.order, via_elements);

            // generator count equals |E \ (E + m)|
            let em = i.product(&SemigroupIdeal::maximal(&s)).unwrap();
            let top = em.saturation_bound();
            let fresh = (0..top).filter(|&x| i.contains(x) && !em.contains(x)).count() as i64;
            prop_assert_eq!(fresh, p.mu);

            // conormal length two ways: generator-based vs window-based sumset
            let w = 2 * p.min_value + s.conductor() + 2;
            let e: Vec<i64> = i.value_set(w);
            let mut twice = vec![false; w as usize];
            for &a in &e {
                for &b in &e {
                    if a + b < w {
                        twice[(a + b) as usize] = true;
                    }
                }
            }
            let windowed = e.iter().filter(|&&x| !twice[x as usize]).count() as i64;
            prop_assert_eq!(windowed, p.conormal_length);
        }

        #[test]
        fn powers_match_sumsets((s, i) in semigroup_and_ideal(), n in 1usize..4) {
            let w = n as i64 * i.min_value() + s.conductor() + 1;
            let base = i.value_set(w);
            let oracle = sumset_power(&base, n, w, &s);
            prop_assert_eq!(i.power(n).value_set(w), oracle);
        }
    }
}
