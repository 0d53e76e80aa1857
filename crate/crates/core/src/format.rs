//! Text rendering of exact linear combinations.

use std::fmt::Write;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::composition::Composition;

pub fn rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// `2*L[3,1] + 2*L[2,2] - 1/2*L[2,1,1]`, terms in the given order. The empty
/// composition is rendered as a bare constant; an empty sum as `0`.
pub fn linear_combination<'a, I>(prefix: &str, terms: I) -> String
where
    I: IntoIterator<Item = (&'a Composition, BigRational)>,
{
    let mut out = String::new();
    for (index, coeff) in terms {
        if coeff.is_zero() {
            continue;
        }
        let magnitude = coeff.abs();
        match (out.is_empty(), coeff.is_negative()) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        if index.is_empty() {
            out.push_str(&rational(&magnitude));
        } else {
            write!(out, "{}*{}{}", rational(&magnitude), prefix, index).unwrap();
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
