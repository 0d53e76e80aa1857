//! Integer compositions: descent sets, refinement, (near-)concatenation and
//! the table enumeration order.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::limits;

/// A finite sequence of positive integers.
///
/// The empty composition is the index of the unit; it is never produced by
/// [`compositions_of`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

/// How [`Composition::split_at_weight`] cut a composition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitKind {
    /// `K = K' . K''`
    Concat,
    /// `K = K' |> K''`, the boundary part was cut in two.
    NearConcat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub left: Composition,
    pub right: Composition,
    pub kind: SplitKind,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(parts));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// The one-part composition `(n)`.
    pub fn single(n: usize) -> Self {
        assert!(n > 0, "parts must be positive");
        Composition(vec![n])
    }

    /// `(1, 1, ..., 1)` with `n` parts.
    pub fn ones(n: usize) -> Self {
        Composition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Partial sums of all parts but the last, strictly increasing.
    pub fn descent_set(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.0.len().saturating_sub(1));
        for &p in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// Inverse of [`Composition::descent_set`]. The set may be given in any
    /// order; duplicates are ignored.
    pub fn from_descents(set: &[usize], n: usize) -> Result<Self> {
        if n == 0 || set.iter().any(|&d| d == 0 || d >= n) {
            return Err(Error::InvalidDescentSet {
                set: set.to_vec(),
                n,
            });
        }
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut parts = Vec::with_capacity(sorted.len() + 1);
        let mut prev = 0;
        for d in sorted {
            parts.push(d - prev);
            prev = d;
        }
        parts.push(n - prev);
        Ok(Composition(parts))
    }

    /// True iff `self` refines `coarser`: same weight and the descent set of
    /// `coarser` is contained in the descent set of `self`. Reflexive.
    pub fn is_finer(&self, coarser: &Composition) -> bool {
        if self.weight() != coarser.weight() {
            return false;
        }
        let fine = self.descent_set();
        // both sets are sorted, merge-style containment test
        let mut it = fine.iter().peekable();
        'outer: for d in coarser.descent_set() {
            while let Some(&&x) = it.peek() {
                it.next();
                if x == d {
                    continue 'outer;
                }
                if x > d {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.0);
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    /// `(i_1, ..., i_{r-1}, i_r + j_1, j_2, ..., j_s)`.
    pub fn near_concat(&self, other: &Composition) -> Result<Composition> {
        if self.is_empty() || other.is_empty() {
            return Err(Error::UndefinedOperation("near-concatenation"));
        }
        let mut parts = self.0.clone();
        *parts.last_mut().unwrap() += other.0[0];
        parts.extend_from_slice(&other.0[1..]);
        Ok(Composition(parts))
    }

    /// The unique `(K', K'')` with `|K'| = m` such that `K = K' . K''` or
    /// `K = K' |> K''`.
    pub fn split_at_weight(&self, m: usize) -> Result<Split> {
        let weight = self.weight();
        if m == 0 || m >= weight {
            return Err(Error::OutOfRange { m, weight });
        }
        let mut acc = 0;
        for (i, &p) in self.0.iter().enumerate() {
            if acc + p == m {
                return Ok(Split {
                    left: Composition(self.0[..=i].to_vec()),
                    right: Composition(self.0[i + 1..].to_vec()),
                    kind: SplitKind::Concat,
                });
            }
            if acc + p > m {
                let mut left = self.0[..i].to_vec();
                left.push(m - acc);
                let mut right = vec![acc + p - m];
                right.extend_from_slice(&self.0[i + 1..]);
                return Ok(Split {
                    left: Composition(left),
                    right: Composition(right),
                    kind: SplitKind::NearConcat,
                });
            }
            acc += p;
        }
        unreachable!("m < weight guarantees a cut")
    }

    /// All compositions coarser than or equal to `self`, obtained by merging
    /// adjacent parts.
    pub fn coarsenings(&self) -> Vec<Composition> {
        if self.is_empty() {
            return vec![Composition::empty()];
        }
        let descents = self.descent_set();
        let n = self.weight();
        (0u64..(1u64 << descents.len()))
            .map(|mask| {
                let kept: Vec<usize> = descents
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &d)| d)
                    .collect();
                Composition::from_descents(&kept, n).expect("subset of a valid descent set")
            })
            .collect()
    }

    /// All compositions finer than or equal to `self`.
    pub fn refinements(&self) -> Vec<Composition> {
        let mut out = vec![Composition::empty()];
        for &p in &self.0 {
            let pieces = all_compositions(p);
            out = out
                .iter()
                .flat_map(|prefix| pieces.iter().map(move |c| prefix.concat(c)))
                .collect();
        }
        out
    }
}

/// Compositions of `n` in table order (lexicographically decreasing on the
/// part sequence), with no cap check.
pub(crate) fn all_compositions(n: usize) -> Vec<Composition> {
    fn rec(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        for first in (1..=n).rev() {
            prefix.push(first);
            rec(n - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::with_capacity(1 << n.saturating_sub(1));
    if n > 0 {
        rec(n, &mut Vec::new(), &mut out);
    }
    out
}

/// All `2^(n-1)` compositions of `n` in the order used by the printed tables:
/// `4, 31, 22, 211, 13, 121, 112, 1111`.
pub fn compositions_of(n: usize) -> Result<Vec<Composition>> {
    if n == 0 {
        return Err(Error::OutOfRange { m: 0, weight: 0 });
    }
    limits::check(n)?;
    Ok(all_compositions(n))
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Accepts `[2,2,1]` (whitespace allowed) or the compact digit form `221`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidComposition(Vec::new());
        if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            if inner.trim().is_empty() {
                return Ok(Composition::empty());
            }
            let parts = inner
                .split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            Composition::new(parts)
        } else if !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) {
            Composition::new(s.bytes().map(|b| (b - b'0') as usize).collect())
        } else {
            Err(bad())
        }
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

/// Shorthand used throughout the tests: `comp(&[2, 1])`.
pub fn comp(parts: &[usize]) -> Composition {
    Composition::new(parts.to_vec()).expect("valid composition literal")
}
