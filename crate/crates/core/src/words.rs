//! Permutations and packed words, their composition-valued statistics, the
//! shifted shuffle, the convolution of packed words, and exhaustive
//! enumerators.

use std::fmt;
use std::str::FromStr;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::limits;

/// A bijection of `{1..n}` written as a word.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

/// A word whose letters form an initial interval `{1..m}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PackedWord(Vec<usize>);

impl Permutation {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        let n = letters.len();
        let mut seen = vec![false; n + 1];
        for &x in &letters {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidWord(format!(
                    "{letters:?} is not a permutation"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation(letters))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (pos, &x) in self.0.iter().enumerate() {
            inv[x - 1] = pos + 1;
        }
        Permutation(inv)
    }

    pub fn as_packed(&self) -> PackedWord {
        PackedWord(self.0.clone())
    }

    /// Descent composition of the inverse.
    pub fn recoil_composition(&self) -> Composition {
        descent_composition(&self.inverse().0)
    }

    /// The Genocchi composition GC.
    ///
    /// A value `i >= 2` is a G-descent when it is immediately followed by a
    /// smaller letter; a value in the last position never is. GC is the
    /// composition of `n` whose descent set is `{i - 1 : i G-descent}`.
    pub fn genocchi_composition(&self) -> Composition {
        let n = self.0.len();
        if n == 0 {
            return Composition::empty();
        }
        let mut set: Vec<usize> = self
            .0
            .windows(2)
            .filter(|w| w[0] >= 2 && w[1] < w[0])
            .map(|w| w[0] - 1)
            .collect();
        set.sort_unstable();
        Composition::from_descents(&set, n).expect("G-descents lie in 2..=n")
    }

    /// Values `i` in `2..=n` that are G-descents, in increasing order.
    pub fn genocchi_descents(&self) -> Vec<usize> {
        self.genocchi_composition()
            .descent_set()
            .into_iter()
            .map(|d| d + 1)
            .collect()
    }

    pub fn descent_composition(&self) -> Composition {
        descent_composition(&self.0)
    }
}

impl PackedWord {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::InvalidWord("letters must be positive".into()));
        }
        let max = letters.iter().copied().max().unwrap_or(0);
        let mut seen = vec![false; max + 1];
        for &x in &letters {
            seen[x] = true;
        }
        if seen[1..].iter().any(|s| !s) {
            return Err(Error::InvalidWord(format!("{letters:?} is not packed")));
        }
        Ok(PackedWord(letters))
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest letter, i.e. the number of distinct letters.
    pub fn max_letter(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn is_permutation(&self) -> bool {
        self.max_letter() == self.0.len()
    }

    pub fn descent_composition(&self) -> Composition {
        descent_composition(&self.0)
    }

    /// The word composition WC: its descent set is the set of positions of
    /// the last occurrence of each letter, position `|u|` excluded.
    pub fn word_composition(&self) -> Composition {
        let n = self.0.len();
        if n == 0 {
            return Composition::empty();
        }
        let mut last = vec![0; self.max_letter() + 1];
        for (pos, &x) in self.0.iter().enumerate() {
            last[x] = pos + 1;
        }
        let mut set: Vec<usize> = last[1..].iter().copied().filter(|&p| p < n).collect();
        set.sort_unstable();
        Composition::from_descents(&set, n).expect("positions lie in 1..n")
    }
}

/// Composition of `|w|` whose descent set is `{i : w_i > w_{i+1}}`.
pub fn descent_composition(w: &[usize]) -> Composition {
    if w.is_empty() {
        return Composition::empty();
    }
    let set: Vec<usize> = w
        .windows(2)
        .enumerate()
        .filter(|(_, p)| p[0] > p[1])
        .map(|(i, _)| i + 1)
        .collect();
    Composition::from_descents(&set, w.len()).expect("positions lie in 1..n")
}

/// Std(w): occurrences of the smallest letter are numbered first, left to
/// right, then those of the next letter, and so on.
pub fn standardize(w: &[usize]) -> Result<Permutation> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut order: Vec<usize> = (0..w.len()).collect();
    order.sort_by_key(|&i| (w[i], i));
    let mut out = vec![0; w.len()];
    for (rank, &i) in order.iter().enumerate() {
        out[i] = rank + 1;
    }
    Ok(Permutation(out))
}

/// Order-preserving relabeling of the distinct letters onto `{1..m}`.
pub fn pack(w: &[usize]) -> Result<PackedWord> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(PackedWord(pack_letters(w)))
}

fn pack_letters(w: &[usize]) -> Vec<usize> {
    let mut distinct = w.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    w.iter()
        .map(|x| distinct.binary_search(x).unwrap() + 1)
        .collect()
}

/// Index sets of size `k` in `0..n`, lexicographic.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n - (k - cur.len()) {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// All interleavings of `a` with `b`; `C(|a|+|b|, |a|)` words counted with
/// multiplicity.
pub fn shuffle(a: &[usize], b: &[usize]) -> Vec<Vec<usize>> {
    let total = a.len() + b.len();
    combinations(total, a.len())
        .into_iter()
        .map(|positions| {
            let mut word = Vec::with_capacity(total);
            let (mut ia, mut ib) = (0, 0);
            let mut next = positions.iter().peekable();
            for pos in 0..total {
                if next.peek() == Some(&&pos) {
                    next.next();
                    word.push(a[ia]);
                    ia += 1;
                } else {
                    word.push(b[ib]);
                    ib += 1;
                }
            }
            word
        })
        .collect()
}

/// The shifted shuffle: all interleavings of `sigma` with `tau` shifted up by
/// `|sigma|`.
pub fn shifted_shuffle(sigma: &Permutation, tau: &Permutation) -> Vec<Permutation> {
    let shift = sigma.len();
    let shifted: Vec<usize> = tau.0.iter().map(|x| x + shift).collect();
    shuffle(&sigma.0, &shifted)
        .into_iter()
        .map(Permutation)
        .collect()
}

/// The convolution: all packed words `w' w''` with `|w'| = |u|`,
/// `pack(w') = u` and `pack(w'') = v`.
pub fn convolution(u: &PackedWord, v: &PackedWord) -> Vec<PackedWord> {
    if u.is_empty() {
        return vec![v.clone()];
    }
    if v.is_empty() {
        return vec![u.clone()];
    }
    let a = u.max_letter();
    let b = v.max_letter();
    let mut out = Vec::new();
    for total in a.max(b)..=a + b {
        for left in combinations(total, a) {
            let complement: Vec<usize> = (0..total).filter(|x| !left.contains(x)).collect();
            if complement.len() > b {
                continue;
            }
            // the right alphabet is the complement plus `extra` letters of the left one
            let extra = b - complement.len();
            for shared in combinations(a, extra) {
                let mut right: Vec<usize> = complement.clone();
                right.extend(shared.iter().map(|&i| left[i]));
                right.sort_unstable();
                let mut word: Vec<usize> = u.0.iter().map(|&x| left[x - 1] + 1).collect();
                word.extend(v.0.iter().map(|&x| right[x - 1] + 1));
                out.push(PackedWord(word));
            }
        }
    }
    out.sort();
    out
}

/// Lexicographic stream over the permutations of `{1..n}`.
#[derive(Clone, Debug)]
pub struct Permutations {
    current: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.current.as_mut()?;
        let out = Permutation(cur.clone());
        // standard next-permutation step
        let n = cur.len();
        match (0..n.saturating_sub(1))
            .rev()
            .find(|&i| cur[i] < cur[i + 1])
        {
            None => self.current = None,
            Some(i) => {
                let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
                cur.swap(i, j);
                cur[i + 1..].reverse();
            }
        }
        Some(out)
    }
}

pub fn permutations_of(n: usize) -> Result<Permutations> {
    limits::check(n)?;
    Ok(Permutations {
        current: Some((1..=n).collect()),
    })
}

/// Lexicographic stream over the packed words of length `n`.
#[derive(Clone, Debug)]
pub struct PackedWords {
    n: usize,
    current: Option<Vec<usize>>,
}

impl PackedWords {
    /// Number of letters in `1..max(prefix)` missing from `prefix`.
    fn missing(prefix: &[usize]) -> usize {
        let max = prefix.iter().copied().max().unwrap_or(0);
        let mut seen = vec![false; max + 1];
        for &x in prefix {
            seen[x] = true;
        }
        seen[1..].iter().filter(|s| !**s).count()
    }

    /// Smallest packed completion of `prefix` to length `n`, if any.
    fn complete(prefix: &mut Vec<usize>, n: usize) -> bool {
        while prefix.len() < n {
            let remaining = n - prefix.len() - 1;
            let choice = (1..=n).find(|&c| {
                prefix.push(c);
                let ok = Self::missing(prefix) <= remaining;
                prefix.pop();
                ok
            });
            match choice {
                Some(c) => prefix.push(c),
                None => return false,
            }
        }
        Self::missing(prefix) == 0
    }
}

impl Iterator for PackedWords {
    type Item = PackedWord;

    fn next(&mut self) -> Option<PackedWord> {
        let cur = self.current.take()?;
        let out = PackedWord(cur.clone());
        let n = self.n;
        // bump the rightmost position that admits a feasible larger letter
        for i in (0..n).rev() {
            let mut prefix = cur[..i].to_vec();
            for c in cur[i] + 1..=n {
                prefix.push(c);
                if Self::missing(&prefix) < n - i && Self::complete(&mut prefix, n) {
                    self.current = Some(prefix);
                    return Some(out);
                }
                prefix.truncate(i);
            }
        }
        Some(out)
    }
}

pub fn packed_words_of(n: usize) -> Result<PackedWords> {
    limits::check(n)?;
    let mut first = Vec::with_capacity(n);
    let ok = PackedWords::complete(&mut first, n);
    debug_assert!(ok);
    Ok(PackedWords {
        n,
        current: Some(first),
    })
}

fn fmt_word(letters: &[usize], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if letters.iter().all(|&x| x <= 9) {
        for x in letters {
            write!(f, "{x}")?;
        }
        Ok(())
    } else {
        f.write_str("[")?;
        for (i, x) in letters.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

/// Parses `32514` (one digit per letter) or `[10,2,1]`.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    let bad = || Error::InvalidWord(format!("cannot parse word {s:?}"));
    if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        if inner.trim().is_empty() {
            return Ok(Vec::new());
        }
        inner
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
            .collect()
    } else if s.bytes().all(|b| b.is_ascii_digit()) {
        Ok(s.bytes().map(|b| (b - b'0') as usize).collect())
    } else {
        Err(bad())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_word(&self.0, f)
    }
}

impl fmt::Display for PackedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_word(&self.0, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_word(s)?)
    }
}

impl FromStr for PackedWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        PackedWord::new(parse_word(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::comp;
    use std::collections::BTreeSet;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn pw(s: &str) -> PackedWord {
        s.parse().unwrap()
    }

    #[test]
    fn standardize_examples() {
        assert_eq!(standardize(&[2, 1, 2]).unwrap(), perm("213"));
        assert_eq!(standardize(&[1, 2, 3, 4]).unwrap(), perm("1234"));
        assert_eq!(standardize(&[3, 3, 1]).unwrap(), perm("231"));
        assert_eq!(standardize(&[]), Err(Error::EmptyWord));
    }

    #[test]
    fn pack_examples() {
        assert_eq!(pack(&[3, 5, 3]).unwrap(), pw("121"));
        let w = parse_word("1543421323").unwrap();
        assert_eq!(pack(&w).unwrap().letters(), &w[..]);
        assert_eq!(pack(&[7]).unwrap(), pw("1"));
        assert_eq!(pack(&[]), Err(Error::EmptyWord));
    }

    #[test]
    fn statistics_examples() {
        assert_eq!(descent_composition(&[1, 1, 2, 1]), comp(&[3, 1]));
        assert_eq!(descent_composition(&[2, 1, 2]), comp(&[1, 2]));
        assert_eq!(descent_composition(&[1, 1, 1, 1]), comp(&[4]));

        assert_eq!(perm("231").recoil_composition(), comp(&[1, 2]));
        assert_eq!(perm("132").recoil_composition(), comp(&[2, 1]));
        assert_eq!(Permutation::identity(5).recoil_composition(), comp(&[5]));

        assert_eq!(perm("231").genocchi_composition(), comp(&[2, 1]));
        assert_eq!(perm("3142").genocchi_composition(), comp(&[2, 1, 1]));
        assert_eq!(perm("3142").genocchi_descents(), vec![3, 4]);
        assert_eq!(Permutation::identity(4).genocchi_composition(), comp(&[4]));
        assert_eq!(perm("12").genocchi_composition(), comp(&[2]));

        assert_eq!(pw("1543421323").word_composition(), comp(&[2, 3, 2, 2, 1]));
        assert_eq!(pw("111").word_composition(), comp(&[3]));
        assert_eq!(pw("1234").word_composition(), comp(&[1, 1, 1, 1]));
    }

    #[test]
    fn invalid_words() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(PackedWord::new(vec![1, 3]).is_err());
        assert!(parse_word("12a").is_err());
        assert_eq!(parse_word("[10,2,1]").unwrap(), vec![10, 2, 1]);
        assert_eq!(PackedWord(vec![10, 1]).to_string(), "[10,1]");
    }

    #[test]
    fn shifted_shuffle_examples() {
        let s: BTreeSet<String> = shifted_shuffle(&perm("12"), &perm("1"))
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(
            s,
            ["123", "132", "312"]
                .iter()
                .map(|x| x.to_string())
                .collect()
        );
        let s: BTreeSet<String> = shifted_shuffle(&perm("1"), &perm("1"))
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(s, ["12", "21"].iter().map(|x| x.to_string()).collect());

        let target = comp(&[4, 2, 1, 1, 1]);
        let found: BTreeSet<String> = shifted_shuffle(&perm("32514"), &perm("2134"))
            .into_iter()
            .filter(|p| p.genocchi_composition() == target)
            .map(|p| p.to_string())
            .collect();
        let expected: BTreeSet<String> = [
            "372685194",
            "376825194",
            "376829514",
            "736825194",
            "736829514",
            "768392514",
        ]
        .iter()
        .map(|x| x.to_string())
        .collect();
        assert_eq!(found, expected);
    }

    #[test]
    fn convolution_examples() {
        let c: Vec<String> = convolution(&pw("1"), &pw("1"))
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(c, ["11", "12", "21"]);
        assert_eq!(
            convolution(&pw("11"), &PackedWord::default()),
            vec![pw("11")]
        );

        let target = comp(&[4, 1, 1, 3]);
        let found: BTreeSet<String> = convolution(&pw("11223"), &pw("1222"))
            .into_iter()
            .filter(|w| w.word_composition() == target)
            .map(|w| w.to_string())
            .collect();
        let expected: BTreeSet<String> = ["112241333", "113341222", "112231444", "223341222"]
            .iter()
            .map(|x| x.to_string())
            .collect();
        assert_eq!(found, expected);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(packed_words_of(2).unwrap().count(), 3);
        assert_eq!(packed_words_of(4).unwrap().count(), 75);
        assert_eq!(permutations_of(4).unwrap().count(), 24);
        assert_eq!(packed_words_of(1).unwrap().count(), 1);
        assert_eq!(permutations_of(0).unwrap().count(), 1);
        assert!(matches!(
            permutations_of(99),
            Err(Error::ResourceLimit { .. })
        ));
        assert!(matches!(
            packed_words_of(99),
            Err(Error::ResourceLimit { .. })
        ));
    }

    // Independent oracle: filter all words of {1..n}^n by the definition.
    fn brute_packed_words(n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let total = n.pow(n as u32);
        for mut code in 0..total {
            let mut w = vec![0; n];
            for i in (0..n).rev() {
                w[i] = code % n + 1;
                code /= n;
            }
            if pack_letters(&w) == w {
                out.push(w);
            }
        }
        out
    }

    #[test]
    fn enumerators_are_lexicographic_and_exhaustive() {
        for n in 1..=6 {
            let words: Vec<Vec<usize>> = packed_words_of(n).unwrap().map(|w| w.0).collect();
            assert_eq!(words, brute_packed_words(n), "n = {n}");
            let perms: Vec<Permutation> = permutations_of(n).unwrap().collect();
            assert!(perms.windows(2).all(|w| w[0] < w[1]));
            assert_eq!(perms.len(), (1..=n).product::<usize>());
        }
    }

    #[test]
    fn standardization_preserves_descents() {
        for len in 1..=6 {
            for code in 0..4usize.pow(len as u32) {
                let mut c = code;
                let w: Vec<usize> = (0..len)
                    .map(|_| {
                        let x = c % 4 + 1;
                        c /= 4;
                        x
                    })
                    .collect();
                let std = standardize(&w).unwrap();
                assert_eq!(std.descent_composition(), descent_composition(&w));
                assert_eq!(standardize(std.letters()).unwrap(), std);
                let p = pack(&w).unwrap();
                assert_eq!(pack(p.letters()).unwrap(), p);
            }
        }
    }

    fn class_table(n: usize) -> Vec<(Composition, BTreeSet<String>)> {
        crate::composition::all_compositions(n)
            .into_iter()
            .map(|c| {
                let words = permutations_of(n)
                    .unwrap()
                    .filter(|p| p.genocchi_composition() == c)
                    .map(|p| p.to_string())
                    .collect();
                (c, words)
            })
            .collect()
    }

    fn set(words: &[&str]) -> BTreeSet<String> {
        words.iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn genocchi_classes_small() {
        let t2 = class_table(2);
        assert_eq!(t2[0].1, set(&["12"]));
        assert_eq!(t2[1].1, set(&["21"]));
        let t3 = class_table(3);
        assert_eq!(t3[0].1, set(&["123"]));
        assert_eq!(t3[1].1, set(&["132", "231", "312"]));
        assert_eq!(t3[2].1, set(&["213"]));
        assert_eq!(t3[3].1, set(&["321"]));
    }

    #[test]
    fn word_classes_small() {
        let table = |n: usize| -> Vec<BTreeSet<String>> {
            crate::composition::all_compositions(n)
                .into_iter()
                .map(|c| {
                    packed_words_of(n)
                        .unwrap()
                        .filter(|w| w.word_composition() == c)
                        .map(|w| w.to_string())
                        .collect()
                })
                .collect()
        };
        assert_eq!(table(2), vec![set(&["11"]), set(&["12", "21"])]);
        assert_eq!(
            table(3),
            vec![
                set(&["111"]),
                set(&["112", "121", "212", "221"]),
                set(&["122", "211"]),
                set(&["123", "132", "213", "231", "312", "321"]),
            ]
        );
    }

    #[test]
    fn shuffle_and_convolution_invariants() {
        for m in 0..=3 {
            for n in 0..=3 {
                let binom = (1..=m).fold(1usize, |acc, i| acc * (n + i) / i);
                for s in permutations_of(m).unwrap() {
                    for t in permutations_of(n).unwrap() {
                        let sh = shifted_shuffle(&s, &t);
                        assert_eq!(sh.len(), binom);
                        let distinct: BTreeSet<_> = sh.iter().collect();
                        assert_eq!(distinct.len(), binom);
                        assert!(sh.iter().all(|p| Permutation::new(p.0.clone()).is_ok()));
                    }
                }
                let us: Vec<PackedWord> = if m == 0 {
                    vec![PackedWord::default()]
                } else {
                    packed_words_of(m).unwrap().collect()
                };
                let vs: Vec<PackedWord> = if n == 0 {
                    vec![PackedWord::default()]
                } else {
                    packed_words_of(n).unwrap().collect()
                };
                for u in &us {
                    for v in &vs {
                        let conv = convolution(u, v);
                        for w in &conv {
                            assert!(PackedWord::new(w.0.clone()).is_ok());
                            if !w.is_empty() && m > 0 {
                                assert_eq!(pack_letters(&w.0[..m]), u.0);
                            }
                            if n > 0 {
                                assert_eq!(pack_letters(&w.0[m..]), v.0);
                            }
                        }
                        // oracle: filter all packed words of length m + n
                        if m + n > 0 {
                            let brute: Vec<PackedWord> = packed_words_of(m + n)
                                .unwrap()
                                .filter(|w| {
                                    (m == 0 || pack_letters(&w.0[..m]) == u.0)
                                        && (n == 0 || pack_letters(&w.0[m..]) == v.0)
                                })
                                .collect();
                            assert_eq!(conv, brute);
                        }
                    }
                }
            }
        }
    }
}
