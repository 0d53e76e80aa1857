//! Reference integer sequences, computed by recurrence.

/// `n!` for `n = 0..=max`.
pub fn factorials(max: usize) -> Vec<u128> {
    let mut out = vec![1u128];
    for k in 1..=max {
        out.push(out[k - 1] * k as u128);
    }
    out
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Ordered Bell (Fubini) numbers `a(0..=max)`, from
/// `a(n) = sum_{k=1..n} C(n, k) a(n - k)`.
pub fn ordered_bell(max: usize) -> Vec<u128> {
    let mut a = vec![1u128];
    for n in 1..=max {
        let v = (1..=n).map(|k| binomial(n, k) * a[n - k]).sum();
        a.push(v);
    }
    a
}

/// Unsigned Genocchi numbers `G_2, G_4, ..., G_{2 count}` read off the
/// Seidel triangle.
///
/// Rows alternate: odd rows are prefix sums of the previous row with the last
/// entry repeated, even rows are suffix sums. The last entry of each odd row
/// is a Genocchi number, the first entry of each even row a median Genocchi
/// number.
pub fn genocchi(count: usize) -> Vec<u128> {
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return out;
    }
    out.push(1);
    let mut row = vec![1u128];
    let mut index = 1;
    while out.len() < count {
        index += 1;
        if index % 2 == 0 {
            let mut acc = 0;
            for x in row.iter_mut().rev() {
                acc += *x;
                *x = acc;
            }
        } else {
            let mut acc = 0;
            for x in row.iter_mut() {
                acc += *x;
                *x = acc;
            }
            row.push(acc);
            out.push(acc);
        }
    }
    out
}

/// `G_{2m}` for `m >= 1`, unsigned.
pub fn genocchi_number(m: usize) -> u128 {
    assert!(m >= 1);
    genocchi(m)[m - 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::{One, Signed, Zero};

    // Independent oracle: G_{2n} = 2 (1 - 4^n) B_{2n}, Bernoulli numbers from
    // sum_{k<m+1} C(m+1, k) B_k = 0.
    fn genocchi_via_bernoulli(count: usize) -> Vec<u128> {
        let max = 2 * count;
        let mut b: Vec<BigRational> = vec![BigRational::one()];
        for m in 1..=max {
            let mut acc = BigRational::zero();
            for (k, bk) in b.iter().enumerate() {
                acc += BigRational::from_integer(BigInt::from(binomial(m + 1, k))) * bk;
            }
            b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
        }
        (1..=count)
            .map(|n| {
                let factor = BigRational::from_integer(
                    BigInt::from(2) * (BigInt::one() - BigInt::from(4).pow(n as u32)),
                );
                let g = (factor * &b[2 * n]).abs();
                assert!(g.is_integer());
                g.to_integer().try_into().unwrap()
            })
            .collect()
    }

    #[test]
    fn genocchi_matches_bernoulli_oracle() {
        assert_eq!(genocchi(12), genocchi_via_bernoulli(12));
        assert_eq!(genocchi(6), vec![1, 1, 3, 17, 155, 2073]);
        assert_eq!(genocchi_number(5), 155);
    }

    #[test]
    fn ordered_bell_values() {
        assert_eq!(ordered_bell(6), vec![1, 1, 3, 13, 75, 541, 4683]);
    }

    #[test]
    fn small_values() {
        assert_eq!(factorials(5), vec![1, 1, 2, 6, 24, 120]);
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(0, 0), 1);
    }
}
