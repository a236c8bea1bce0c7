//! Half-enumeration primitives shared by the meet-in-the-middle engine and
//! the `#SubsetSum` oracle.

use std::ops::Add;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

/// Integer type usable as a subset sum.
pub(crate) trait SumInt: Ord + Clone + Zero + Send + Sync + for<'a> Add<&'a Self, Output = Self> {}

impl SumInt for u128 {}
impl SumInt for BigUint {}

/// All subset sums of `weights`, sorted, with multiplicities.
///
/// Equal sums are merged so that the pair sweep multiplies counts rather than
/// testing existence.
pub(crate) fn half_sums<T: SumInt>(weights: &[T]) -> Vec<(T, u128)> {
    let mut sums = Vec::with_capacity(1usize << weights.len());
    sums.push(T::zero());
    for w in weights {
        let len = sums.len();
        for i in 0..len {
            let s = sums[i].clone() + w;
            sums.push(s);
        }
    }
    sums.sort_unstable();
    let mut out: Vec<(T, u128)> = Vec::new();
    for s in sums {
        match out.last_mut() {
            Some((last, c)) if *last == s => *c += 1,
            _ => out.push((s, 1)),
        }
    }
    out
}

/// Number of pairs `(l, r)` (with multiplicity) such that `lo <= l + r <= hi`.
///
/// Two-pointer sweep: as `l` grows, both window edges in `right` move down.
pub(crate) fn count_pairs_in_range<T: SumInt>(left: &[(T, u128)], right: &[(T, u128)], lo: &T, hi: &T) -> u128 {
    if lo > hi {
        return 0;
    }
    // prefix[i] = total multiplicity of right[..i]
    let mut prefix = Vec::with_capacity(right.len() + 1);
    prefix.push(0u128);
    for (_, c) in right {
        prefix.push(prefix.last().unwrap() + c);
    }
    // a = first index with l + r >= lo, b = first index with l + r > hi
    let mut a = right.len();
    let mut b = right.len();
    let mut total = 0u128;
    for (l, lc) in left {
        while a > 0 && right[a - 1].0.clone() + l >= *lo {
            a -= 1;
        }
        while b > 0 && right[b - 1].0.clone() + l > *hi {
            b -= 1;
        }
        if b > a {
            total += lc * (prefix[b] - prefix[a]);
        }
    }
    total
}

/// Converts big weights to `u128` when every subset sum (and the bound) fits.
pub(crate) fn narrow<'a>(weights: impl IntoIterator<Item = &'a BigUint>, bound: &BigUint) -> Option<Vec<u128>> {
    let mut total: u128 = bound.to_u128()?;
    let mut out = Vec::new();
    for w in weights {
        let w = w.to_u128()?;
        total = total.checked_add(w)?;
        out.push(w);
    }
    Some(out)
}
