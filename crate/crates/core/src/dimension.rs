//! Additive dimension through the rank of the additive-relation vectors.
//!
//! Each relation `a_i + a_j = a_r + a_s` contributes `e_i + e_j - e_r - e_s`;
//! with `lambda` the rank of their span over the rationals, the additive
//! dimension is `k - 1 - lambda`. Ranks are computed by fraction-free integer
//! elimination, so no rounding is involved.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::IntSet;

/// Largest cardinality accepted by [`f_isomorphic`].
pub const FISO_CAP: usize = 10;

/// Row-echelon basis built incrementally with integer arithmetic.
///
/// Every stored row is zero in the pivot columns of the rows stored before it,
/// so a new vector can be reduced in a single pass. Rows are divided by the gcd
/// of their entries after each elimination step.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: Vec<(usize, Vec<i64>)>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` to the span. Returns true if the rank grew.
    pub fn insert(&mut self, mut v: Vec<i64>) -> bool {
        for (pivot, row) in &self.rows {
            let f = v[*pivot];
            if f == 0 {
                continue;
            }
            let p = row[*pivot];
            for (x, r) in v.iter_mut().zip(row) {
                *x = p * *x - f * r;
            }
            let g = v.iter().fold(0i64, |g, x| g.gcd(x));
            if g > 1 {
                v.iter_mut().for_each(|x| *x /= g);
            }
        }
        match v.iter().position(|&x| x != 0) {
            Some(pivot) => {
                self.rows.push((pivot, v));
                true
            }
            None => false,
        }
    }
}

/// Index quadruple `(i, j, r, s)` with `a_i + a_j = a_r + a_s`, `i <= j`, `r <= s`
/// and `(i, j) < (r, s)`. Indices are zero-based positions in the sorted set.
pub type Relation = [usize; 4];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationBasis {
    pub k: usize,
    pub relations: Vec<Relation>,
    pub rank: usize,
}

fn pairs_by_sum(a: &[i64]) -> BTreeMap<i64, Vec<(usize, usize)>> {
    let mut by_sum: BTreeMap<i64, Vec<(usize, usize)>> = BTreeMap::new();
    for i in 0..a.len() {
        for j in i..a.len() {
            by_sum.entry(a[i] + a[j]).or_default().push((i, j));
        }
    }
    by_sum
}

fn relation_vector(k: usize, (i, j): (usize, usize), (r, s): (usize, usize)) -> Vec<i64> {
    let mut v = vec![0i64; k];
    v[i] += 1;
    v[j] += 1;
    v[r] -= 1;
    v[s] -= 1;
    v
}

/// All additive relations of `A` and the rank `lambda(A)` of their span.
pub fn relation_rank(a: &IntSet) -> Result<RelationBasis> {
    let k = a.len();
    if k < 2 {
        return Err(Error::Precondition("relation rank needs at least two elements".into()));
    }
    let mut relations = Vec::new();
    let mut basis = Echelon::new();
    for pairs in pairs_by_sum(a.elements()).values() {
        for (x, &p) in pairs.iter().enumerate() {
            for &q in &pairs[x + 1..] {
                relations.push([p.0, p.1, q.0, q.1]);
                basis.insert(relation_vector(k, p, q));
            }
        }
    }
    Ok(RelationBasis { k, relations, rank: basis.rank() })
}

/// `lambda(A)` only. Relations sharing a sum are spanned by those against the
/// first pair of the group, which is all this needs to feed the basis.
pub fn lambda(a: &[i64]) -> usize {
    let k = a.len();
    let mut basis = Echelon::new();
    for pairs in pairs_by_sum(a).values() {
        for &q in &pairs[1..] {
            basis.insert(relation_vector(k, pairs[0], q));
            if basis.rank() + 2 == k {
                return basis.rank();
            }
        }
    }
    basis.rank()
}

/// `k - 1 - lambda(A)`.
pub fn additive_dim(a: &IntSet) -> Result<usize> {
    if a.len() < 2 {
        return Err(Error::Precondition("additive dimension needs at least two elements".into()));
    }
    Ok(a.len() - 1 - lambda(a.elements()))
}

/// `lambda = k - 2`, the largest rank possible for a set of integers.
pub fn is_one_dimensional(a: &[i64]) -> bool {
    a.len() >= 2 && lambda(a) + 2 == a.len()
}

/// `(2A - A) ∩ (max(A), ∞)`: the `x > max(A)` keeping `A ∪ {x}` one-dimensional.
pub fn extension_candidates(a: &IntSet) -> Result<Vec<i64>> {
    if !is_one_dimensional(a.elements()) {
        return Err(Error::Precondition(format!("{a} is not one-dimensional")));
    }
    Ok(right_candidates(a))
}

/// Elements of `2A - A` above `max(A)`, without the dimension check.
pub(crate) fn right_candidates(a: &IntSet) -> Vec<i64> {
    let m = a.max();
    let d = a.double().difference(a);
    d.iter().filter(|&x| x > m).collect()
}

/// Elements of `2A - A` below `min(A)`.
pub(crate) fn left_candidates(a: &IntSet) -> Vec<i64> {
    let m = a.min();
    let d = a.double().difference(a);
    d.iter().filter(|&x| x < m).collect()
}

/// Searches for a Freiman isomorphism (order 2) between `A` and `B`.
///
/// Returns the bijection as `(a, b)` pairs when one exists. Sets larger than
/// [`FISO_CAP`] are refused.
pub fn f_isomorphic(a: &IntSet, b: &IntSet) -> Result<Option<Vec<(i64, i64)>>> {
    if a.len().max(b.len()) > FISO_CAP {
        return Err(Error::Capacity(format!(
            "Freiman isomorphism search is capped at {FISO_CAP} elements"
        )));
    }
    if a.len() != b.len() || a.doubling() != b.doubling() {
        return Ok(None);
    }
    if a.len() >= 2 && lambda(a.elements()) != lambda(b.elements()) {
        return Ok(None);
    }
    let (xa, xb) = (a.elements(), b.elements());
    let mut map = Vec::with_capacity(xa.len());
    let mut used = vec![false; xb.len()];
    if extend_iso(xa, xb, &mut map, &mut used) {
        Ok(Some(map.iter().enumerate().map(|(i, &j)| (xa[i], xb[j])).collect()))
    } else {
        Ok(None)
    }
}

fn extend_iso(a: &[i64], b: &[i64], map: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let n = map.len();
    if n == a.len() {
        return true;
    }
    for cand in 0..b.len() {
        if used[cand] {
            continue;
        }
        map.push(cand);
        if consistent_at(a, b, map) {
            used[cand] = true;
            if extend_iso(a, b, map, used) {
                return true;
            }
            used[cand] = false;
        }
        map.pop();
    }
    false
}

// Checks every quadruple whose largest index is the newest assignment.
fn consistent_at(a: &[i64], b: &[i64], map: &[usize]) -> bool {
    let n = map.len() - 1;
    let (an, bn) = (a[n], b[map[n]]);
    for j in 0..=n {
        for r in 0..=n {
            for s in r..=n {
                let lhs = an + a[j] == a[r] + a[s];
                let rhs = bn + b[map[j]] == b[map[r]] + b[map[s]];
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::set;

    // Brute-force oracle for 2A - A above the max: try every x in (m, 3m] and
    // look for a, a', a'' with x + a = a' + a''.
    fn brute_candidates(a: &IntSet) -> Vec<i64> {
        let m = a.max();
        ((m + 1)..=(3 * m + 1))
            .filter(|&x| {
                a.iter().any(|p| a.iter().any(|q| a.iter().any(|r| x + p == q + r)))
            })
            .collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(relation_rank(&set("{0,1,2,4}")).unwrap().rank, 2);
        let r = relation_rank(&set("{0,1,3,7}")).unwrap();
        assert_eq!((r.rank, r.relations.len()), (0, 0));
        for k in 2..9 {
            let seg = IntSet::segment(0, k as i64 - 1).unwrap();
            assert_eq!(relation_rank(&seg).unwrap().rank, k - 2);
        }
    }

    #[test]
    fn stored_relations_hold() {
        let a = set("{0,1,2,4,6,9}");
        let r = relation_rank(&a).unwrap();
        let e = a.elements();
        for [i, j, p, q] in r.relations {
            assert!(i <= j && p <= q && (i, j) < (p, q));
            assert_eq!(e[i] + e[j], e[p] + e[q]);
        }
        assert_eq!(r.rank, lambda(e));
    }

    #[test]
    fn dim_examples() {
        assert_eq!(additive_dim(&set("{0,1,2,4}")).unwrap(), 1);
        assert_eq!(additive_dim(&set("{0,1,2,5}")).unwrap(), 2);
        assert_eq!(additive_dim(&set("{0,1,3,7}")).unwrap(), 3);
        assert!(additive_dim(&set("{3}")).is_err());
    }

    #[test]
    fn candidate_examples() {
        assert_eq!(extension_candidates(&set("{0,1,2}")).unwrap(), vec![3, 4]);
        assert_eq!(extension_candidates(&set("{0,1,2,4}")).unwrap(), vec![5, 6, 7, 8]);
        assert_eq!(extension_candidates(&set("{0,2,4}")).unwrap(), vec![6, 8]);
        assert!(extension_candidates(&set("{0,1,2,5}")).is_err());
        for s in ["{0,1,2}", "{0,1,2,4}", "{0,2,3,4,6}", "{0,3,4,5,6,7}"] {
            let a = set(s);
            assert_eq!(extension_candidates(&a).unwrap(), brute_candidates(&a), "{s}");
        }
    }

    #[test]
    fn candidates_are_exactly_the_one_dimensional_extensions() {
        let a = set("{0,1,2,4}");
        let cands = extension_candidates(&a).unwrap();
        for x in 5..=12 {
            let d = additive_dim(&a.with(x).unwrap()).unwrap();
            assert_eq!(d == 1, cands.contains(&x), "x={x}");
            if !cands.contains(&x) {
                assert_eq!(d, 2);
            }
        }
    }

    #[test]
    fn fiso_examples() {
        assert!(f_isomorphic(&set("{0,1,2}"), &set("{5,7,9}")).unwrap().is_some());
        assert!(f_isomorphic(&set("{0,1,2,4}"), &set("{0,1,2,5}")).unwrap().is_none());
        let w = f_isomorphic(&set("{0,2,3,6}"), &set("{0,3,4,6}")).unwrap().unwrap();
        assert_eq!(w.len(), 4);
        let big = IntSet::segment(0, 10).unwrap();
        assert!(matches!(f_isomorphic(&big, &big), Err(Error::Capacity(_))));
    }

    #[test]
    fn fiso_witness_preserves_relations() {
        // Freiman-isomorphic but not affinely equivalent: {0,1,3} and {0,1,4}.
        let (a, b) = (set("{0,1,3}"), set("{0,1,4}"));
        let w = f_isomorphic(&a, &b).unwrap().unwrap();
        let phi = |x: i64| w.iter().find(|p| p.0 == x).unwrap().1;
        for x in a.iter() {
            for y in a.iter() {
                for z in a.iter() {
                    for t in a.iter() {
                        assert_eq!(x + y == z + t, phi(x) + phi(y) == phi(z) + phi(t));
                    }
                }
            }
        }
    }
}
