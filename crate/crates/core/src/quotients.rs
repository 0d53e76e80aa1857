//! The quotients `T` of FQSym (permutations identified by Genocchi
//! composition) and `T'` of WQSym (packed words identified by word
//! composition).
//!
//! Products are available through the closed formulas ([`t_product`],
//! [`u_product`]) and by brute force on representatives
//! ([`brute_t_product`], [`brute_u_product`]). [`certify_ideal`] checks that
//! the brute-force products do not depend on the representatives chosen.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::composition::{all_compositions, Composition};
use crate::error::{Error, Result};
use crate::format;
use crate::limits;
use crate::sequences::binomial;
use crate::words::{
    convolution, packed_words_of, permutations_of, shifted_shuffle, PackedWord, Permutation,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Quotient {
    /// FQSym modulo equal Genocchi compositions; basis `T_I`.
    T,
    /// WQSym modulo equal word compositions; basis `U_I`.
    U,
}

impl Quotient {
    pub fn name(self) -> &'static str {
        match self {
            Quotient::T => "T",
            Quotient::U => "U",
        }
    }
}

/// `sum_K c_K X_K` with positive integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientExpansion {
    pub quotient: Quotient,
    pub terms: BTreeMap<Composition, u64>,
}

impl QuotientExpansion {
    fn new(quotient: Quotient) -> Self {
        QuotientExpansion {
            quotient,
            terms: BTreeMap::new(),
        }
    }

    pub fn coefficient(&self, k: &Composition) -> u64 {
        self.terms.get(k).copied().unwrap_or(0)
    }

    fn add(&mut self, k: Composition, c: u64) {
        if c > 0 {
            *self.terms.entry(k).or_default() += c;
        }
    }

    /// Common weight of the terms, if any.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next().map(Composition::weight)
    }
}

impl fmt::Display for QuotientExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = format::linear_combination(
            self.quotient.name(),
            self.terms
                .iter()
                .rev()
                .map(|(k, &c)| (k, crate::algebra::integer(c as i64))),
        );
        f.write_str(&s)
    }
}

/// Closed-form products only walk the `2^(n-1)` compositions of the result
/// degree, so they get a larger limit than the exhaustive enumerations.
pub const CLOSED_FORM_CAP: usize = 20;

fn check_split(i: &Composition, j: &Composition, k: &Composition) -> Result<()> {
    if i.is_empty() || j.is_empty() || k.weight() != i.weight() + j.weight() {
        return Err(Error::WeightMismatch(format!(
            "|{k}| must equal |{i}| + |{j}|"
        )));
    }
    Ok(())
}

/// Structure constant `C_{I,J}^K` of `T`.
///
/// With `K = K' . K''` or `K = K' |> K''` and `|K'| = |I|`: zero unless `K'`
/// is coarser than `I` and `K''` finer than `J`, otherwise
/// `C(|I| + l(J) - l(I), l(K) - l(I))`.
pub fn c_coefficient(i: &Composition, j: &Composition, k: &Composition) -> Result<u64> {
    check_split(i, j, k)?;
    let split = k.split_at_weight(i.weight())?;
    if !i.is_finer(&split.left) || !split.right.is_finer(j) {
        return Ok(0);
    }
    if k.len() < i.len() {
        return Ok(0);
    }
    Ok(binomial(i.weight() + j.len() - i.len(), k.len() - i.len()) as u64)
}

/// Structure constant `D_{I,J}^K` of `T'`: zero unless `K'` is coarser than
/// `I` and `K'' = J`, otherwise `C(l(K), l(I))`.
pub fn d_coefficient(i: &Composition, j: &Composition, k: &Composition) -> Result<u64> {
    check_split(i, j, k)?;
    let split = k.split_at_weight(i.weight())?;
    if !i.is_finer(&split.left) || &split.right != j {
        return Ok(0);
    }
    Ok(binomial(k.len(), i.len()) as u64)
}

fn closed_product<F>(
    quotient: Quotient,
    i: &Composition,
    j: &Composition,
    coeff: F,
) -> Result<QuotientExpansion>
where
    F: Fn(&Composition, &Composition, &Composition) -> Result<u64>,
{
    let mut out = QuotientExpansion::new(quotient);
    if i.is_empty() || j.is_empty() {
        out.add(i.concat(j), 1);
        return Ok(out);
    }
    let n = i.weight() + j.weight();
    if n > CLOSED_FORM_CAP {
        return Err(Error::ResourceLimit {
            requested: n,
            cap: CLOSED_FORM_CAP,
        });
    }
    for k in all_compositions(n) {
        out.add(k.clone(), coeff(i, j, &k)?);
    }
    Ok(out)
}

/// `T_I T_J` from the closed formula.
pub fn t_product(i: &Composition, j: &Composition) -> Result<QuotientExpansion> {
    closed_product(Quotient::T, i, j, c_coefficient)
}

/// `U_I U_J` from the closed formula.
pub fn u_product(i: &Composition, j: &Composition) -> Result<QuotientExpansion> {
    closed_product(Quotient::U, i, j, d_coefficient)
}

/// Lexicographically least permutation with Genocchi composition `i`.
pub fn t_representative(i: &Composition) -> Result<Permutation> {
    let found = permutations_of(i.weight())?.find(|s| &s.genocchi_composition() == i);
    Ok(found.unwrap_or_else(|| panic!("every composition is a Genocchi composition, {i} is not")))
}

/// Lexicographically least packed word with word composition `i`.
pub fn u_representative(i: &Composition) -> Result<PackedWord> {
    let found = packed_words_of(i.weight())?.find(|u| &u.word_composition() == i);
    Ok(found.unwrap_or_else(|| panic!("every composition is a word composition, {i} is not")))
}

fn gc_tally(sigma: &Permutation, tau: &Permutation) -> BTreeMap<Composition, u64> {
    let mut out = BTreeMap::new();
    for mu in shifted_shuffle(sigma, tau) {
        *out.entry(mu.genocchi_composition()).or_default() += 1;
    }
    out
}

fn wc_tally(u: &PackedWord, v: &PackedWord) -> BTreeMap<Composition, u64> {
    let mut out = BTreeMap::new();
    for w in convolution(u, v) {
        *out.entry(w.word_composition()).or_default() += 1;
    }
    out
}

/// `T_I T_J` as the Genocchi compositions of the shifted shuffle of two
/// representatives.
pub fn brute_t_product(i: &Composition, j: &Composition) -> Result<QuotientExpansion> {
    limits::check(i.weight().max(j.weight()))?;
    let (sigma, tau) = (t_representative(i)?, t_representative(j)?);
    Ok(QuotientExpansion {
        quotient: Quotient::T,
        terms: gc_tally(&sigma, &tau),
    })
}

/// `U_I U_J` as the word compositions of the convolution of two
/// representatives.
pub fn brute_u_product(i: &Composition, j: &Composition) -> Result<QuotientExpansion> {
    limits::check(i.weight().max(j.weight()))?;
    let (u, v) = (u_representative(i)?, u_representative(j)?);
    Ok(QuotientExpansion {
        quotient: Quotient::U,
        terms: wc_tally(&u, &v),
    })
}

/// Bilinear extension of a structure-constant product to finite sums.
pub fn multiply_expansions(
    a: &QuotientExpansion,
    b: &QuotientExpansion,
) -> Result<QuotientExpansion> {
    assert_eq!(a.quotient, b.quotient, "products stay within one quotient");
    let mut out = QuotientExpansion::new(a.quotient);
    for (i, &x) in &a.terms {
        for (j, &y) in &b.terms {
            let p = match a.quotient {
                Quotient::T => t_product(i, j)?,
                Quotient::U => u_product(i, j)?,
            };
            for (k, c) in p.terms {
                out.add(k, c * x * y);
            }
        }
    }
    Ok(out)
}

pub fn basis_element(quotient: Quotient, i: Composition) -> QuotientExpansion {
    let mut out = QuotientExpansion::new(quotient);
    out.add(i, 1);
    out
}

/// A pair of representatives whose products disagree with those of another
/// pair from the same classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealViolation {
    pub quotient: Quotient,
    pub left_class: String,
    pub right_class: String,
    pub witness: (String, String),
    pub reference: (String, String),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IdealReport {
    /// Number of representative pairs whose product multiset was compared.
    pub pairs_checked: u64,
    /// Number of `(left class, right class)` pairs.
    pub class_pairs: u64,
    pub violations: Vec<IdealViolation>,
}

impl IdealReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn merge(mut self, other: IdealReport) -> IdealReport {
        self.pairs_checked += other.pairs_checked;
        self.class_pairs += other.class_pairs;
        self.violations.extend(other.violations);
        self
    }
}

/// Compares the tallies of every pair of objects against the tally of the
/// first pair seen in the same pair of classes.
fn certify_degree<X, C, P>(
    quotient: Quotient,
    left: &[X],
    right: &[X],
    class: C,
    product: P,
) -> IdealReport
where
    X: fmt::Display + Sync,
    C: Fn(&X) -> Composition + Sync,
    P: Fn(&X, &X) -> BTreeMap<Composition, u64> + Sync,
{
    type Tally = BTreeMap<Composition, u64>;
    let tallies: Vec<((Composition, Composition), usize, usize, Tally)> = left
        .par_iter()
        .enumerate()
        .flat_map_iter(|(a, x)| {
            let product = &product;
            let class = &class;
            right
                .iter()
                .enumerate()
                .map(move |(b, y)| ((class(x), class(y)), a, b, product(x, y)))
        })
        .collect();
    let mut report = IdealReport::default();
    let mut reference: HashMap<(Composition, Composition), (usize, usize, &Tally)> = HashMap::new();
    for (key, a, b, tally) in &tallies {
        report.pairs_checked += 1;
        match reference.get(key) {
            None => {
                report.class_pairs += 1;
                reference.insert(key.clone(), (*a, *b, tally));
            }
            Some(&(ra, rb, expected)) if expected != tally => {
                report.violations.push(IdealViolation {
                    quotient,
                    left_class: key.0.to_string(),
                    right_class: key.1.to_string(),
                    witness: (left[*a].to_string(), right[*b].to_string()),
                    reference: (left[ra].to_string(), right[rb].to_string()),
                });
            }
            Some(_) => {}
        }
    }
    report
}

/// Representative independence of the Genocchi (resp. word) composition
/// multisets of shifted shuffles (resp. convolutions), for all degree pairs
/// `(m, n)` with `m, n >= 1` and `m + n <= n_max`. Both factors range over
/// whole classes, so left and right compatibility are both covered.
pub fn certify_ideal(quotient: Quotient, n_max: usize) -> Result<IdealReport> {
    limits::check(n_max)?;
    let mut report = IdealReport::default();
    for m in 1..n_max {
        for n in 1..=(n_max - m) {
            let part = match quotient {
                Quotient::T => {
                    let left: Vec<Permutation> = permutations_of(m)?.collect();
                    let right: Vec<Permutation> = permutations_of(n)?.collect();
                    certify_degree(
                        quotient,
                        &left,
                        &right,
                        Permutation::genocchi_composition,
                        gc_tally,
                    )
                }
                Quotient::U => {
                    let left: Vec<PackedWord> = packed_words_of(m)?.collect();
                    let right: Vec<PackedWord> = packed_words_of(n)?.collect();
                    certify_degree(
                        quotient,
                        &left,
                        &right,
                        PackedWord::word_composition,
                        wc_tally,
                    )
                }
            };
            report = report.merge(part);
        }
    }
    Ok(report)
}
