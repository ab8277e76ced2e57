//! Near-equal integer factorizations and partitions.

use crate::error::{Error, Result};

fn saturating_product(factors: &[u64]) -> u128 {
    factors
        .iter()
        .fold(1u128, |acc, &f| acc.saturating_mul(f as u128))
}

/// Smallest `a` with `a^k >= target`.
fn ceil_root(target: u64, k: u32) -> u64 {
    let pow = |a: u64| (a as u128).checked_pow(k).unwrap_or(u128::MAX);
    let mut a = (target as f64).powf(1.0 / k as f64).round().max(1.0) as u64;
    while pow(a) < target as u128 {
        a += 1;
    }
    while a > 1 && pow(a - 1) >= target as u128 {
        a -= 1;
    }
    a
}

/// `k` near-equal factors whose product is the smallest such product at or
/// above `target`.
///
/// Starts with every factor at `⌈target^(1/k)⌉` and lowers trailing factors by
/// one while the product stays `>= target`. The result is non-increasing, the
/// factors differ by at most one, and lowering any factor drops the product
/// below `target`. `target` and `k` of zero are treated as one.
pub fn gen_nproduct(target: u64, k: usize) -> Vec<u64> {
    let target = target.max(1);
    let k = k.max(1);
    let a = ceil_root(target, k.min(u32::MAX as usize) as u32);
    let mut factors = vec![a; k];
    for idx in (0..k).rev() {
        if factors[idx] == 1 {
            break;
        }
        factors[idx] -= 1;
        if saturating_product(&factors) < target as u128 {
            factors[idx] += 1;
            break;
        }
    }
    factors
}

/// Product of `gen_nproduct(target, k)`, saturating at `u64::MAX`.
pub fn nproduct_total(factors: &[u64]) -> u64 {
    saturating_product(factors).min(u64::MAX as u128) as u64
}

/// `k` positive integers that sum to `target` and differ by at most one.
/// Larger parts come first.
pub fn gen_nsum(target: usize, k: usize) -> Result<Vec<usize>> {
    if k == 0 {
        return Err(Error::Infeasible("cannot split into zero parts".into()));
    }
    if target < k {
        return Err(Error::Infeasible(format!(
            "cannot split {target} into {k} positive parts"
        )));
    }
    let base = target / k;
    let extra = target % k;
    Ok((0..k).map(|i| base + usize::from(i < extra)).collect())
}
