//! Degrees in `N^k` and signed degree differences in `Z^k`.

use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

/// An element of `N^k`, ordered componentwise.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Degree(Vec<u32>);

impl Degree {
    pub fn new(coords: Vec<u32>) -> Self {
        Degree(coords)
    }

    pub fn zero(k: usize) -> Self {
        Degree(vec![0; k])
    }

    /// The generator `e_i` (0-based color index).
    pub fn unit(k: usize, i: usize) -> Self {
        let mut d = vec![0; k];
        d[i] = 1;
        Degree(d)
    }

    pub fn splat(k: usize, value: u32) -> Self {
        Degree(vec![value; k])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&c| c as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &Degree) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn meet(&self, other: &Degree) -> Degree {
        Degree(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn join(&self, other: &Degree) -> Degree {
        Degree(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// `self - other` when `other <= self`.
    pub fn checked_sub(&self, other: &Degree) -> Option<Degree> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Degree)
    }

    pub fn diff(&self, other: &Degree) -> DegreeDiff {
        DegreeDiff(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a as i64 - *b as i64)
                .collect(),
        )
    }

    pub fn to_diff(&self) -> DegreeDiff {
        DegreeDiff(self.0.iter().map(|&c| c as i64).collect())
    }

    /// All degrees `m` with `0 <= m <= self`, in lexicographic order.
    pub fn box_below(&self) -> Vec<Degree> {
        let mut out = vec![Vec::with_capacity(self.rank())];
        for &bound in &self.0 {
            let mut next = Vec::with_capacity(out.len() * (bound as usize + 1));
            for prefix in &out {
                for c in 0..=bound {
                    let mut p = prefix.clone();
                    p.push(c);
                    next.push(p);
                }
            }
            out = next;
        }
        out.into_iter().map(Degree).collect()
    }
}

impl Add for &Degree {
    type Output = Degree;
    fn add(self, rhs: &Degree) -> Degree {
        Degree(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        &self + &rhs
    }
}

impl fmt::Debug for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

/// An element of `Z^k`, used to label graded components `d(mu) - d(nu)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeDiff(Vec<i64>);

impl DegreeDiff {
    pub fn new(coords: Vec<i64>) -> Self {
        DegreeDiff(coords)
    }

    pub fn zero(k: usize) -> Self {
        DegreeDiff(vec![0; k])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn norm_sq(&self) -> i64 {
        self.0.iter().map(|c| c * c).sum()
    }

    /// Splits `n = plus - minus` with `plus, minus >= 0` and `plus ∧ minus = 0`.
    pub fn split(&self) -> (Degree, Degree) {
        let plus = self.0.iter().map(|&c| c.max(0) as u32).collect();
        let minus = self.0.iter().map(|&c| (-c).max(0) as u32).collect();
        (Degree(plus), Degree(minus))
    }

    pub fn neg(&self) -> DegreeDiff {
        DegreeDiff(self.0.iter().map(|c| -c).collect())
    }
}

impl Add for &DegreeDiff {
    type Output = DegreeDiff;
    fn add(self, rhs: &DegreeDiff) -> DegreeDiff {
        DegreeDiff(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &DegreeDiff {
    type Output = DegreeDiff;
    fn sub(self, rhs: &DegreeDiff) -> DegreeDiff {
        DegreeDiff(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Debug for DegreeDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn box_below_counts() {
        assert_eq!(Degree::new(vec![2, 1]).box_below().len(), 6);
        assert_eq!(Degree::zero(3).box_below(), vec![Degree::zero(3)]);
    }

    #[test]
    fn split_is_minimal() {
        let n = DegreeDiff::new(vec![3, -2, 0]);
        let (p, m) = n.split();
        assert_eq!(p, Degree::new(vec![3, 0, 0]));
        assert_eq!(m, Degree::new(vec![0, 2, 0]));
        assert!(p.meet(&m).is_zero());
        assert_eq!(p.diff(&m), n);
    }

    proptest! {
        #[test]
        fn meet_le_args_le_join(a in prop::collection::vec(0u32..6, 3), b in prop::collection::vec(0u32..6, 3)) {
            let (a, b) = (Degree::new(a), Degree::new(b));
            let (m, j) = (a.meet(&b), a.join(&b));
            prop_assert!(m.le(&a) && m.le(&b));
            prop_assert!(a.le(&j) && b.le(&j));
            prop_assert_eq!((&a + &b).checked_sub(&b), Some(a.clone()));
        }
    }
}
