//! Numerical semigroups, the value sets of one-dimensional monomial curve rings
//! `k[[t^g1, ..., t^gk]]`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

/// A numerical semigroup `S = <g1, ..., gk>` with `gcd(gi) = 1`.
///
/// Membership below the conductor is stored explicitly; every integer at or
/// above the conductor is an element. Two semigroups are equal iff their
/// minimal generating sets agree.
#[derive(Clone, Debug)]
pub struct NumericalSemigroup {
    min_generators: Vec<i64>,
    frobenius: i64,
    gaps: Vec<i64>,
    below_conductor: Vec<bool>,
}

pub(crate) fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`, dropping redundant generators.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&g) = gens.iter().find(|&&g| g < 1) {
            return Err(Error::NonPositiveGenerator(g));
        }
        let d = gens.iter().fold(0, |acc, &g| gcd(acc, g));
        if d != 1 {
            return Err(Error::NonCoprimeGenerators(d));
        }

        // The Frobenius number is below max(gens) * min(gens).
        let lo = *gens.iter().min().unwrap();
        let hi = *gens.iter().max().unwrap();
        let window = (lo * hi) as usize;
        let mut reach = vec![false; window + 1];
        reach[0] = true;
        for x in 1..=window {
            reach[x] = gens
                .iter()
                .any(|&g| g as usize <= x && reach[x - g as usize]);
        }
        let conductor = reach
            .iter()
            .rposition(|&r| !r)
            .map_or(0, |last_gap| last_gap + 1);
        reach.truncate(conductor);
        Ok(Self::from_membership(reach))
    }

    /// Builds a semigroup from its membership vector on `[0, conductor)`.
    ///
    /// The caller guarantees closure under addition, `member[0]` and that the
    /// last entry (when present) is a gap.
    pub(crate) fn from_membership(below_conductor: Vec<bool>) -> Self {
        let conductor = below_conductor.len() as i64;
        let gaps: Vec<i64> = (1..conductor)
            .filter(|&x| !below_conductor[x as usize])
            .collect();
        let frobenius = conductor - 1;
        let mut s = NumericalSemigroup {
            min_generators: Vec::new(),
            frobenius,
            gaps,
            below_conductor,
        };
        let multiplicity = (1..).find(|&x| s.contains(x)).unwrap();
        // Minimal generators are at most conductor + multiplicity - 1, or 1 for N.
        s.min_generators = (1..=conductor + multiplicity)
            .filter(|&x| s.contains(x))
            .filter(|&x| !(1..=x / 2).any(|y| s.contains(y) && s.contains(x - y)))
            .collect();
        s
    }

    /// The ring `k[[t]]`, whose value set is all of `N`.
    pub fn naturals() -> Self {
        Self::from_membership(Vec::new())
    }

    pub fn min_generators(&self) -> &[i64] {
        &self.min_generators
    }

    /// Largest integer not in `S`, or `-1` when `S = N`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn conductor(&self) -> i64 {
        self.frobenius + 1
    }

    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    /// Smallest nonzero element, the multiplicity `e0(R)` of the ring.
    pub fn multiplicity(&self) -> i64 {
        self.min_generators[0]
    }

    /// Number of minimal generators, the embedding dimension `b(R)`.
    pub fn embedding_dim(&self) -> usize {
        self.min_generators.len()
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            false
        } else if x > self.frobenius {
            true
        } else {
            self.below_conductor[x as usize]
        }
    }

    /// The Apéry set of `n`: the least element of `S` in each residue class
    /// modulo `n`, indexed by residue.
    pub fn apery_set(&self, n: i64) -> Result<Vec<i64>> {
        if n < 1 || !self.contains(n) {
            return Err(Error::NotInSemigroup(n));
        }
        let mut out = vec![-1; n as usize];
        let mut missing = n;
        let mut x = 0;
        while missing > 0 {
            let slot = &mut out[(x % n) as usize];
            if *slot < 0 && self.contains(x) {
                *slot = x;
                missing -= 1;
            }
            x += 1;
        }
        Ok(out)
    }

    /// Children in the semigroup tree: `S \ {g}` for every minimal generator
    /// `g` above the Frobenius number.
    pub fn tree_children(&self) -> Vec<NumericalSemigroup> {
        let mut children: Vec<NumericalSemigroup> = self
            .min_generators
            .iter()
            .filter(|&&g| g > self.frobenius)
            .map(|&g| {
                let mut member: Vec<bool> = (0..=g).map(|x| self.contains(x)).collect();
                member[g as usize] = false;
                NumericalSemigroup::from_membership(member)
            })
            .collect();
        children.sort();
        children
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.min_generators == other.min_generators
    }
}

impl Eq for NumericalSemigroup {}

impl Hash for NumericalSemigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.min_generators.hash(state);
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.min_generators.cmp(&other.min_generators)
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.min_generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Closure of `gens` under addition inside `[0, limit]`, by brute force.
    fn closure(gens: &[i64], limit: i64) -> Vec<bool> {
        let mut member = vec![false; limit as usize + 1];
        member[0] = true;
        let mut changed = true;
        while changed {
            changed = false;
            for x in 0..=limit {
                if !member[x as usize] {
                    continue;
                }
                for &g in gens {
                    let y = x + g;
                    if y <= limit && !member[y as usize] {
                        member[y as usize] = true;
                        changed = true;
                    }
                }
            }
        }
        member
    }

    #[test]
    fn two_three() {
        let s = NumericalSemigroup::from_generators(&[2, 3]).unwrap();
        let oracle = closure(&[2, 3], 10);
        let oracle_gaps: Vec<i64> = (0..=10).filter(|&x| !oracle[x as usize]).collect();
        assert_eq!(oracle_gaps, vec![1]);
        assert_eq!(s.min_generators(), &[2, 3]);
        assert_eq!(s.gaps(), &oracle_gaps[..]);
        assert_eq!(s.frobenius(), 1);
        assert_eq!(s.multiplicity(), 2);
        assert_eq!(s.embedding_dim(), 2);
    }

    #[test]
    fn regular_ring() {
        let s = NumericalSemigroup::from_generators(&[1]).unwrap();
        assert_eq!(s.min_generators(), &[1]);
        assert!(s.gaps().is_empty());
        assert_eq!(s.frobenius(), -1);
        assert_eq!(s.conductor(), 0);
        assert_eq!(s.multiplicity(), 1);
        assert_eq!(s.embedding_dim(), 1);
        assert_eq!(s, NumericalSemigroup::naturals());
        // 1 absorbs everything else
        let t = NumericalSemigroup::from_generators(&[5, 1, 3]).unwrap();
        assert_eq!(t.min_generators(), &[1]);
    }

    #[test]
    fn three_four_five() {
        let s = NumericalSemigroup::from_generators(&[3, 4, 5]).unwrap();
        let oracle = closure(&[3, 4, 5], 15);
        let oracle_gaps: Vec<i64> = (0..=15).filter(|&x| !oracle[x as usize]).collect();
        assert_eq!(oracle_gaps, vec![1, 2]);
        assert_eq!(s.gaps(), &[1, 2]);
        assert_eq!(s.frobenius(), 2);
        assert_eq!(s.multiplicity(), 3);
        assert_eq!(s.embedding_dim(), 3);
        assert!(oracle[8]);
        assert!(s.contains(8));
    }

    #[test]
    fn redundant_generators_dropped() {
        let s = NumericalSemigroup::from_generators(&[6, 2, 3, 3, 4]).unwrap();
        assert_eq!(s.min_generators(), &[2, 3]);
        assert_eq!(s, NumericalSemigroup::from_generators(&[2, 3]).unwrap());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(Error::NonCoprimeGenerators(2))
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[]),
            Err(Error::EmptyGenerators)
        );
        assert_eq!(
            NumericalSemigroup::from_generators(&[0, 1]),
            Err(Error::NonPositiveGenerator(0))
        );
    }

    #[test]
    fn membership() {
        let s = NumericalSemigroup::from_generators(&[2, 3]).unwrap();
        assert!(!s.contains(1));
        assert!(s.contains(100));
        assert!(s.contains(0));
        assert!(!s.contains(-2));
    }

    #[test]
    fn apery_sets() {
        let s = NumericalSemigroup::from_generators(&[2, 3]).unwrap();
        assert_eq!(s.apery_set(2).unwrap(), vec![0, 3]);
        let s = NumericalSemigroup::from_generators(&[3, 4, 5]).unwrap();
        assert_eq!(s.apery_set(3).unwrap(), vec![0, 4, 5]);
        assert_eq!(s.apery_set(1), Err(Error::NotInSemigroup(1)));
        assert_eq!(s.apery_set(0), Err(Error::NotInSemigroup(0)));
        let s = NumericalSemigroup::naturals();
        assert_eq!(s.apery_set(1).unwrap(), vec![0]);
    }

    #[test]
    fn tree_children_of_two_three() {
        let s = NumericalSemigroup::from_generators(&[2, 3]).unwrap();
        let kids: Vec<_> = s.tree_children().iter().map(|c| c.to_string()).collect();
        assert_eq!(kids, vec!["<2,5>", "<3,4,5>"]);
    }

    fn generators() -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(1i64..14, 1..5)
            .prop_filter("coprime", |g| g.iter().fold(0, |a, &b| gcd(a, b)) == 1)
    }

    proptest! {
        #[test]
        fn invariants_hold(gens in generators()) {
            let s = NumericalSemigroup::from_generators(&gens).unwrap();
            let c = s.conductor();
            let oracle = closure(&gens, 2 * c + 2);
            for x in 0..=2 * c + 2 {
                prop_assert_eq!(s.contains(x), oracle[x as usize]);
            }
            let counted = (0..c).filter(|&x| !s.contains(x)).count();
            prop_assert_eq!(counted, s.genus());
            prop_assert_eq!(s.frobenius(), s.gaps().last().copied().unwrap_or(-1));
            for x in 0..=2 * c {
                for y in 0..=2 * c {
                    if s.contains(x) && s.contains(y) {
                        prop_assert!(s.contains(x + y));
                    }
                }
            }
            prop_assert_eq!(s.multiplicity(), *s.min_generators().iter().min().unwrap());
            prop_assert!(s.embedding_dim() as i64 <= s.multiplicity());
            // no minimal generator is a sum of two nonzero elements
            for &g in s.min_generators() {
                prop_assert!(!(1..g).any(|y| s.contains(y) && s.contains(g - y)));
            }
            // regenerating from the minimal generators is the identity
            let again = NumericalSemigroup::from_generators(s.min_generators()).unwrap();
            prop_assert_eq!(again.gaps(), s.gaps());
        }

        #[test]
        fn apery_set_shape(gens in generators(), pick in 0usize..4) {
            let s = NumericalSemigroup::from_generators(&gens).unwrap();
            let n = s.min_generators()[pick % s.embedding_dim()];
            let ap = s.apery_set(n).unwrap();
            prop_assert_eq!(ap.len() as i64, n);
            for (i, &w) in ap.iter().enumerate() {
                prop_assert_eq!(w % n, i as i64);
                prop_assert!(s.contains(w));
                prop_assert!(!s.contains(w - n));
            }
        }
    }
}
