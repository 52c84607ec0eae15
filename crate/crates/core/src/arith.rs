//! Checked integer helpers shared by the oracle and the closed forms.

use crate::{Error, Int, Result};

pub fn gcd(mut a: Int, mut b: Int) -> Int {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[inline]
pub fn add(a: Int, b: Int) -> Result<Int> {
    a.checked_add(b).ok_or(Error::Overflow)
}

#[inline]
pub fn sub(a: Int, b: Int) -> Result<Int> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

#[inline]
pub fn mul(a: Int, b: Int) -> Result<Int> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// `2^e` as a checked 128-bit integer.
pub fn pow2(e: u32) -> Result<Int> {
    if e >= Int::BITS - 1 {
        return Err(Error::Overflow);
    }
    Ok(1 << e)
}

/// Exact division; a nonzero remainder means a formula that must be integral
/// was not.
pub fn div_exact(num: Int, den: Int, what: &'static str) -> Result<Int> {
    if den == 0 || num % den != 0 {
        return Err(Error::Internal(what));
    }
    Ok(num / den)
}

/// Sums a sequence of checked terms.
pub fn sum<I: IntoIterator<Item = Result<Int>>>(terms: I) -> Result<Int> {
    terms.into_iter().try_fold(0, |acc, t| add(acc, t?))
}
