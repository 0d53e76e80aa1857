//! The free associative algebra on `Psi_1, Psi_2, ...` over the rationals,
//! and the bases of noncommutative symmetric functions realized in it.
//!
//! An [`Element`] is a finite sum of generator words with exact rational
//! coefficients. A word `Psi_{j1} Psi_{j2} ... Psi_{jr}` is indexed by the
//! composition `(j1, ..., jr)`; its degree is the weight of that composition.
//!
//! The complete functions come from the Newton recursion
//! `n S_n = sum_{k<n} S_k Psi_{n-k}`, ribbons from the alternating sum over
//! coarsenings of products `S^J`, and the monomial functions `Psi_I` from the
//! generalized Newton relations. Coordinates in a basis are recovered by an
//! exact Gaussian elimination per degree.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::composition::{all_compositions, Composition};
use crate::error::{Error, Result};
use crate::format;
use crate::limits;
use crate::linalg::RationalMatrix;

/// Finitely supported map from generator words to nonzero rationals.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Element {
    terms: BTreeMap<Composition, BigRational>,
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn one() -> Self {
        Element::scalar(BigRational::one())
    }

    pub fn scalar(c: BigRational) -> Self {
        Element::monomial(Composition::empty(), c)
    }

    /// The generator `Psi_n`.
    pub fn generator(n: usize) -> Self {
        Element::word(Composition::single(n))
    }

    /// The generator word indexed by `w`, with coefficient 1.
    pub fn word(w: Composition) -> Self {
        Element::monomial(w, BigRational::one())
    }

    pub fn monomial(w: Composition, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        Element { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Composition, BigRational)>>(terms: I) -> Self {
        let mut e = Element::zero();
        for (w, c) in terms {
            e.add_term(w, c);
        }
        e
    }

    pub fn add_term(&mut self, w: Composition, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self
            .terms
            .entry(w.clone())
            .or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Composition, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, w: &Composition) -> BigRational {
        self.terms.get(w).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &BigRational) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// Sorted list of the degrees carrying a nonzero term.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(Composition::weight).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// The degree, if the element is nonzero and homogeneous.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        match self.degrees().as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    pub fn homogeneous_component(&self, degree: usize) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.weight() == degree)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn multiply(&self, other: &Element) -> Element {
        let mut out = Element::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.concat(b), x * y);
            }
        }
        out
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        self.multiply(rhs)
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&-BigRational::one())
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}

impl Mul for Element {
    type Output = Element;
    fn mul(self, rhs: Element) -> Element {
        self.multiply(&rhs)
    }
}

impl fmt::Display for Element {
    /// Signed sum of `c*Psi[j1,...,jr]`, where `Psi[j1,...,jr]` is the
    /// generator word, in descending lexicographic order of the words.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s =
            format::linear_combination("Psi", self.terms.iter().rev().map(|(w, c)| (w, c.clone())));
        f.write_str(&s)
    }
}

/// The linear bases of the algebra that can be constructed and expanded in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisId {
    /// `Psi_I`, the noncommutative monomial functions.
    PsiMonomial,
    L,
    /// Ribbon functions.
    R,
    /// Products of complete functions `S^I`.
    Sproduct,
}

impl BasisId {
    pub const ALL: [BasisId; 4] = [
        BasisId::PsiMonomial,
        BasisId::L,
        BasisId::R,
        BasisId::Sproduct,
    ];

    /// Atom name in the expression syntax.
    pub fn name(self) -> &'static str {
        match self {
            BasisId::PsiMonomial => "Psi",
            BasisId::L => "L",
            BasisId::R => "R",
            BasisId::Sproduct => "S",
        }
    }

    pub fn element(self, index: &Composition) -> Element {
        match self {
            BasisId::PsiMonomial => psi_monomial(index),
            BasisId::L => l_basis(index),
            BasisId::R => ribbon(index),
            BasisId::Sproduct => product_s(index),
        }
    }
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BasisId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Psi" | "psi" | "PsiMonomial" => Ok(BasisId::PsiMonomial),
            "L" => Ok(BasisId::L),
            "R" => Ok(BasisId::R),
            "S" | "Sproduct" => Ok(BasisId::Sproduct),
            other => Err(Error::UnsupportedBasis(other.to_string())),
        }
    }
}

/// `S_0, ..., S_n` from `k S_k = sum_{j<k} S_j Psi_{k-j}`.
fn complete_up_to(n: usize) -> Vec<Element> {
    let mut s = vec![Element::one()];
    for k in 1..=n {
        let mut acc = Element::zero();
        for (j, sj) in s.iter().enumerate() {
            acc = &acc + &sj.multiply(&Element::generator(k - j));
        }
        s.push(acc.scale(&rational(1, k as i64)));
    }
    s
}

/// The complete function `S_n`; `S_0 = 1`.
pub fn complete_s(n: usize) -> Element {
    complete_up_to(n).pop().unwrap()
}

/// `S^I = S_{i1} S_{i2} ... S_{ir}`; `S^() = 1`.
pub fn product_s(index: &Composition) -> Element {
    let max = index.parts().iter().copied().max().unwrap_or(0);
    let s = complete_up_to(max);
    index
        .parts()
        .iter()
        .fold(Element::one(), |acc, &p| acc.multiply(&s[p]))
}

/// `R_I = sum over J coarser than or equal to I of (-1)^(l(I)-l(J)) S^J`.
pub fn ribbon(index: &Composition) -> Element {
    let max = index.weight();
    let s = complete_up_to(max);
    let mut out = Element::zero();
    for coarse in index.coarsenings() {
        let term = coarse
            .parts()
            .iter()
            .fold(Element::one(), |acc, &p| acc.multiply(&s[p]));
        if (index.len() - coarse.len()).is_multiple_of(2) {
            out = &out + &term;
        } else {
            out = &out - &term;
        }
    }
    out
}

/// `Psi_I` from `r Psi_I = sum_s (-1)^(s-1) Psi_{i1+...+is} Psi_{(i_{s+1},...,i_r)}`.
pub fn psi_monomial(index: &Composition) -> Element {
    let parts = index.parts();
    let r = parts.len();
    // suffix[k] = Psi of (i_{k+1}, ..., i_r); built from the shortest suffix up
    let mut suffix: Vec<Element> = vec![Element::zero(); r + 1];
    suffix[r] = Element::one();
    for start in (0..r).rev() {
        let len = r - start;
        let mut acc = Element::zero();
        let mut head = 0;
        for s in 1..=len {
            head += parts[start + s - 1];
            let term = Element::generator(head).multiply(&suffix[start + s]);
            if s % 2 == 1 {
                acc = &acc + &term;
            } else {
                acc = &acc - &term;
            }
        }
        suffix[start] = acc.scale(&rational(1, len as i64));
    }
    suffix.swap_remove(0)
}

/// `L_I = sum of Psi_J over all J finer than or equal to I`.
pub fn l_basis(index: &Composition) -> Element {
    index
        .refinements()
        .iter()
        .fold(Element::zero(), |acc, j| &acc + &psi_monomial(j))
}

/// Precomputed change of basis for one degree: rows of `matrix` are the
/// basis elements written on generator words, both indexed in table order.
struct BasisChange {
    order: Vec<Composition>,
    position: HashMap<Composition, usize>,
    inverse: RationalMatrix,
}

impl BasisChange {
    fn build(basis: BasisId, n: usize) -> Self {
        let order = all_compositions(n);
        let position: HashMap<Composition, usize> = order
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, c)| (c, i))
            .collect();
        let mut matrix = RationalMatrix::zeros(order.len());
        for (row, index) in order.iter().enumerate() {
            for (w, c) in basis.element(index).terms() {
                matrix.set(row, position[w], c.clone());
            }
        }
        let inverse = matrix
            .inverse()
            .unwrap_or_else(|| panic!("{basis} in degree {n} is not a basis"));
        BasisChange {
            order,
            position,
            inverse,
        }
    }
}

fn basis_change(basis: BasisId, n: usize) -> Arc<BasisChange> {
    type Cache = Mutex<HashMap<(BasisId, usize), Arc<BasisChange>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(&(basis, n)) {
        return Arc::clone(hit);
    }
    // built outside the lock; a concurrent duplicate build is harmless
    let built = Arc::new(BasisChange::build(basis, n));
    let mut guard = cache.lock().unwrap();
    Arc::clone(guard.entry((basis, n)).or_insert(built))
}

/// Coordinates of a homogeneous element in `basis`. The zero element has no
/// coordinates.
pub fn expand_in_basis(x: &Element, basis: BasisId) -> Result<BTreeMap<Composition, BigRational>> {
    if x.is_zero() {
        return Ok(BTreeMap::new());
    }
    let n = x.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    if n == 0 {
        return Ok(x.terms().clone());
    }
    limits::check(n)?;
    let change = basis_change(basis, n);
    let mut v = vec![BigRational::zero(); change.order.len()];
    for (w, c) in x.terms() {
        v[change.position[w]] = c.clone();
    }
    let coords = change.inverse.left_mul(&v);
    Ok(change
        .order
        .iter()
        .zip(coords)
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i.clone(), c))
        .collect())
}

/// Rebuilds an element from its coordinates in `basis`.
pub fn from_coordinates(coords: &BTreeMap<Composition, BigRational>, basis: BasisId) -> Element {
    coords.iter().fold(Element::zero(), |acc, (i, c)| {
        if i.is_empty() {
            &acc + &Element::scalar(c.clone())
        } else {
            &acc + &basis.element(i).scale(c)
        }
    })
}
