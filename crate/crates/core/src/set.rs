//! Finite integer sets and the exact set arithmetic everything else is built on.
//!
//! An [`IntSet`] is a nonempty, strictly increasing sequence of `i64`. Sumsets of
//! sets with a narrow convex hull are computed with shifted word-ORs over a bit
//! vector; wider hulls fall back to sorting the pairwise sums.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::bits::BitVec;
use crate::error::{Error, Result};

/// Largest accepted element magnitude. Keeps `3 * max` (the reach of `2A - A`)
/// inside `i64`.
pub const ELEMENT_LIMIT: i64 = i64::MAX / 4;

/// Hull widths up to this many bits use the bit-vector sumset.
const BITSET_WIDTH: i64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct IntSet(Vec<i64>);

impl IntSet {
    /// Builds a set from elements in any order. Rejects empty input, duplicates,
    /// and elements beyond [`ELEMENT_LIMIT`].
    pub fn new(mut elements: Vec<i64>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::Empty);
        }
        if let Some(&bad) = elements.iter().find(|a| a.abs() > ELEMENT_LIMIT) {
            return Err(Error::Overflow(bad));
        }
        elements.sort_unstable();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Duplicate(w[0]));
        }
        Ok(IntSet(elements))
    }

    /// Caller guarantees a nonempty strictly increasing in-range sequence.
    pub(crate) fn from_sorted(elements: Vec<i64>) -> Self {
        debug_assert!(!elements.is_empty());
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        IntSet(elements)
    }

    /// The segment `[lo, hi]`.
    pub fn segment(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::Empty);
        }
        IntSet::new((lo..=hi).collect())
    }

    pub fn elements(&self) -> &[i64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for API symmetry with collections.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn min(&self) -> i64 {
        self.0[0]
    }

    pub fn max(&self) -> i64 {
        *self.0.last().expect("nonempty")
    }

    /// `max - min + 1`.
    pub fn length(&self) -> i64 {
        self.max() - self.min() + 1
    }

    pub fn contains(&self, x: i64) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.0.iter().copied()
    }

    /// `gcd(A - min(A))`; zero for singletons.
    pub fn gcd(&self) -> i64 {
        let m = self.min();
        self.0.iter().fold(0, |g, &a| g.gcd(&(a - m)))
    }

    /// `min = 0` and `gcd = 1`, or the singleton `{0}`.
    pub fn is_normal(&self) -> bool {
        self.min() == 0 && (self.len() == 1 || self.gcd() == 1)
    }

    /// `{a + b : a in A, b in B}`.
    pub fn sumset(&self, other: &IntSet) -> IntSet {
        let w1 = self.max() - self.min();
        let w2 = other.max() - other.min();
        let offset = self.min() + other.min();
        if w1 + w2 < BITSET_WIDTH {
            let mut base = BitVec::with_len((w1 + 1) as usize);
            for a in self.iter() {
                base.set((a - self.min()) as usize);
            }
            let mut out = BitVec::with_len((w1 + w2 + 1) as usize);
            for b in other.iter() {
                out.or_shifted(&base, (b - other.min()) as usize);
            }
            IntSet::from_sorted(out.ones().map(|i| offset + i as i64).collect())
        } else {
            let sums: BTreeSet<i64> = self
                .iter()
                .flat_map(|a| other.iter().map(move |b| a + b))
                .collect();
            IntSet::from_sorted(sums.into_iter().collect())
        }
    }

    /// `2A`.
    pub fn double(&self) -> IntSet {
        self.sumset(self)
    }

    /// `|2A|`.
    pub fn doubling(&self) -> usize {
        self.double().len()
    }

    /// `{-a : a in A}`.
    pub fn negate(&self) -> IntSet {
        IntSet::from_sorted(self.0.iter().rev().map(|a| -a).collect())
    }

    /// `A - B = {a - b}`.
    pub fn difference(&self, other: &IntSet) -> IntSet {
        self.sumset(&other.negate())
    }

    pub fn translate(&self, t: i64) -> Result<IntSet> {
        IntSet::new(self.0.iter().map(|a| a + t).collect())
    }

    /// `{factor * a}` for a positive factor.
    pub fn dilate(&self, factor: i64) -> Result<IntSet> {
        if factor <= 0 {
            return Err(Error::Domain(format!("dilation factor {factor} must be positive")));
        }
        let v: Option<Vec<i64>> = self.0.iter().map(|a| a.checked_mul(factor)).collect();
        IntSet::new(v.ok_or(Error::Overflow(self.max()))?)
    }

    pub fn with(&self, x: i64) -> Result<IntSet> {
        let mut v = self.0.clone();
        v.push(x);
        IntSet::new(v)
    }

    /// Removes `x`; `None` if that would leave the set empty or `x` is absent.
    pub fn without(&self, x: i64) -> Option<IntSet> {
        let pos = self.0.binary_search(&x).ok()?;
        if self.len() == 1 {
            return None;
        }
        let mut v = self.0.clone();
        v.remove(pos);
        Some(IntSet(v))
    }

    /// `(A - min) / gcd`, with the shift and scale that reconstruct `A`.
    pub fn normalize(&self) -> Normalized {
        let shift = self.min();
        let scale = self.gcd().max(1);
        let set = IntSet::from_sorted(self.0.iter().map(|a| (a - shift) / scale).collect());
        Normalized { set: NormalSet(set), shift, scale }
    }

    /// `-A + max(A)`; defined only when `min(A) = 0`.
    pub fn reflexion(&self) -> Result<IntSet> {
        if self.min() != 0 {
            return Err(Error::Precondition(format!(
                "reflexion needs min = 0, got min = {}",
                self.min()
            )));
        }
        let m = self.max();
        Ok(IntSet::from_sorted(self.0.iter().rev().map(|a| m - a).collect()))
    }

    /// `A ∘ B = A ∪ (max(A) + B)` for sets with minimum 0.
    pub fn concat(&self, other: &IntSet) -> Result<IntSet> {
        if self.min() != 0 || other.min() != 0 {
            return Err(Error::Precondition("concatenation needs both operands to start at 0".into()));
        }
        let m = self.max();
        let mut v = self.0.clone();
        v.extend(other.0.iter().skip(1).map(|b| m + b));
        Ok(IntSet::from_sorted(v))
    }

    /// `[min, max] \ A`, ascending.
    pub fn holes(&self) -> Vec<i64> {
        self.0
            .windows(2)
            .flat_map(|w| (w[0] + 1)..w[1])
            .collect()
    }

    /// True iff `A = {a, a+d, ..., a+(k-1)d}`. Singletons qualify for every `d`.
    pub fn is_progression(&self, d: i64) -> bool {
        d >= 1 && self.0.windows(2).all(|w| w[1] - w[0] == d)
    }

    /// `A ∩ [lo, hi]`, possibly empty.
    pub fn restrict(&self, lo: i64, hi: i64) -> Vec<i64> {
        self.iter().filter(|&a| lo <= a && a <= hi).collect()
    }

    /// Number of odd elements.
    pub fn odd_count(&self) -> usize {
        self.0.iter().filter(|a| a.rem_euclid(2) == 1).count()
    }
}

impl fmt::Display for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for IntSet {
    type Err = Error;

    /// Parses `"{0,2,3,6}"`. Whitespace around tokens is ignored and the
    /// braces are optional; elements may come in any order.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = match (t.strip_prefix('{'), t.ends_with('}')) {
            (Some(rest), true) => &rest[..rest.len() - 1],
            (None, false) => t,
            _ => return Err(Error::Parse(format!("unbalanced braces in {s:?}"))),
        };
        if inner.trim().is_empty() {
            return Err(Error::Empty);
        }
        let elements = inner
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad integer {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        IntSet::new(elements)
    }
}

impl TryFrom<Vec<i64>> for IntSet {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        IntSet::new(v)
    }
}

impl From<IntSet> for Vec<i64> {
    fn from(s: IntSet) -> Self {
        s.0
    }
}

/// A set with `min = 0` and `gcd = 1` (or `{0}`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IntSet", into = "IntSet")]
pub struct NormalSet(IntSet);

impl NormalSet {
    pub fn as_set(&self) -> &IntSet {
        &self.0
    }

    pub fn into_set(self) -> IntSet {
        self.0
    }

    // shadow Ord::min/max, which would otherwise win over Deref
    pub fn min(&self) -> i64 {
        IntSet::min(&self.0)
    }

    pub fn max(&self) -> i64 {
        IntSet::max(&self.0)
    }

    /// Reflexion of a normal set is normal.
    pub fn reflect(&self) -> NormalSet {
        NormalSet(self.0.reflexion().expect("normal sets start at 0"))
    }

    /// Lexicographic minimum of the set and its reflexion.
    pub fn canonical(&self) -> NormalSet {
        let r = self.reflect();
        if r.0 .0 < self.0 .0 {
            r
        } else {
            self.clone()
        }
    }
}

impl TryFrom<IntSet> for NormalSet {
    type Error = Error;

    fn try_from(s: IntSet) -> Result<Self> {
        if s.is_normal() {
            Ok(NormalSet(s))
        } else {
            Err(Error::Precondition(format!("{s} is not in normal form")))
        }
    }
}

impl From<NormalSet> for IntSet {
    fn from(s: NormalSet) -> Self {
        s.0
    }
}

impl Deref for NormalSet {
    type Target = IntSet;

    fn deref(&self) -> &IntSet {
        &self.0
    }
}

impl fmt::Display for NormalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for NormalSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NormalSet::try_from(s.parse::<IntSet>()?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalized {
    pub set: NormalSet,
    pub shift: i64,
    pub scale: i64,
}

impl Normalized {
    /// Maps the normal set back onto the original.
    pub fn reconstruct(&self) -> IntSet {
        IntSet::from_sorted(self.set.iter().map(|a| a * self.scale + self.shift).collect())
    }
}

/// Shorthand for tests and examples; panics on malformed literals.
pub fn set(literal: &str) -> IntSet {
    literal.parse().unwrap_or_else(|e| panic!("bad set literal {literal:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_sumset(a: &IntSet, b: &IntSet) -> Vec<i64> {
        let s: BTreeSet<i64> = a.iter().flat_map(|x| b.iter().map(move |y| x + y)).collect();
        s.into_iter().collect()
    }

    #[test]
    fn sumset_examples() {
        let a = set("{0,1,3}");
        assert_eq!(brute_sumset(&a, &a), vec![0, 1, 2, 3, 4, 6]);
        assert_eq!(a.sumset(&a), set("{0,1,2,3,4,6}"));
        assert_eq!(set("{0}").sumset(&set("{0,5}")), set("{0,5}"));
        assert_eq!(set("{0,1,2,3,4}").doubling(), 9);
    }

    #[test]
    fn wide_hull_falls_back() {
        let a = IntSet::new(vec![-(1 << 40), 0, 3]).unwrap();
        assert_eq!(a.sumset(&a).elements(), brute_sumset(&a, &a).as_slice());
    }

    #[test]
    fn difference_set() {
        let a = set("{0,1,2}");
        assert_eq!(a.double().difference(&a), IntSet::segment(-2, 4).unwrap());
    }

    #[test]
    fn normalize_examples() {
        let n = set("{4,8,12}").normalize();
        assert_eq!((n.set.as_set().clone(), n.shift, n.scale), (set("{0,1,2}"), 4, 4));
        assert_eq!(n.reconstruct(), set("{4,8,12}"));
        let n = set("{0,2,3,6}").normalize();
        assert_eq!((n.set.into_set(), n.shift, n.scale), (set("{0,2,3,6}"), 0, 1));
        let n = set("{7}").normalize();
        assert_eq!((n.set.into_set(), n.shift, n.scale), (set("{0}"), 7, 1));
    }

    #[test]
    fn reflexion_examples() {
        assert_eq!(set("{0,2,3,6}").reflexion().unwrap(), set("{0,3,4,6}"));
        assert_eq!(set("{0,1,2}").reflexion().unwrap(), set("{0,1,2}"));
        assert_eq!(set("{0,2,3,4,5}").reflexion().unwrap(), set("{0,1,2,3,5}"));
        assert!(matches!(set("{1,2}").reflexion(), Err(Error::Precondition(_))));
    }

    #[test]
    fn concat_examples() {
        assert_eq!(set("{0,2}").concat(&set("{0,3}")).unwrap(), set("{0,2,5}"));
        let b = set("{0,2,7}");
        assert_eq!(set("{0}").concat(&b).unwrap(), b);
        assert_eq!(
            set("{0,3}").concat(&set("{0,1,2,3,4}")).unwrap(),
            set("{0,3,4,5,6,7}")
        );
    }

    #[test]
    fn holes_examples() {
        assert_eq!(set("{0,2,3,6}").holes(), vec![1, 4, 5]);
        assert!(set("{0,1,2,3}").holes().is_empty());
        assert_eq!(set("{0,4,5,8,9,12}").holes(), vec![1, 2, 3, 6, 7, 10, 11]);
    }

    #[test]
    fn progression_examples() {
        assert!(set("{0,2,4}").is_progression(2));
        assert!(set("{5}").is_progression(7));
        assert!(!set("{0,2,5}").is_progression(2));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(set(" { 6, 0,3 ,2 } ").to_string(), "{0,2,3,6}");
        assert_eq!(set("1,2").to_string(), "{1,2}");
        assert_eq!("{}".parse::<IntSet>(), Err(Error::Empty));
        assert!(matches!("{1,1}".parse::<IntSet>(), Err(Error::Duplicate(1))));
        assert!(matches!("{1,x}".parse::<IntSet>(), Err(Error::Parse(_))));
        assert!(matches!("{1,2".parse::<IntSet>(), Err(Error::Parse(_))));
        assert!(matches!(
            format!("{{{}}}", i64::MAX).parse::<IntSet>(),
            Err(Error::Overflow(_))
        ));
        assert!("{0,2,4}".parse::<NormalSet>().is_err());
    }

    #[test]
    fn serde_validates() {
        let s: IntSet = serde_json::from_str("[3,1,2]").unwrap();
        assert_eq!(s, set("{1,2,3}"));
        assert!(serde_json::from_str::<IntSet>("[]").is_err());
        assert!(serde_json::from_str::<NormalSet>("[1,2]").is_err());
        assert_eq!(serde_json::to_string(&s).unwrap(), "[1,2,3]");
    }

    #[test]
    fn canonical_prefers_lexicographic_minimum() {
        let s: NormalSet = "{0,2,3,4,5}".parse().unwrap();
        assert_eq!(s.canonical().into_set(), set("{0,1,2,3,5}"));
    }
}
