//! Named sub-families of `(a, 2a+d, ..., 2^k a + (2^k - 1) d)` with fully
//! explicit invariants:
//!
//! - generalized Mersenne: `a = m(2^n - 1)`, `k = n`;
//! - generalized Thabit: `a = 3 * 2^n - 1`, `k = n + 1`;
//! - `a = m(2^k - 1) + 2^(k-1) - 1`, `k >= 3`;
//! - parameter maps for the `S(m, n)` and `GT(n, m)` semigroups.
//!
//! These are formula evaluators only. They never consult the oracle.

use alloc::vec::Vec;

use crate::arith::{self, add, gcd, mul, pow2, sub};
use crate::family::FamilyParams;
use crate::semigroup::{InvariantReport, Source};
use crate::{Error, Int, Result};

fn check_coprime(a: Int, d: Int) -> Result<()> {
    match gcd(a, d) {
        1 => Ok(()),
        g => Err(Error::NotCoprime { gcd: g }),
    }
}

fn exp(n: Int) -> Result<u32> {
    u32::try_from(n).map_err(|_| Error::Overflow)
}

/// `{top - j*d : j = 0..count}`, ascending.
fn arithmetic_run(top: Int, d: Int, count: Int) -> Result<Vec<Int>> {
    let mut out = (0..count)
        .map(|j| sub(top, mul(j, d)?))
        .collect::<Result<Vec<_>>>()?;
    out.sort_unstable();
    Ok(out)
}

fn check_type(pf: &[Int], expected: Int) -> Result<()> {
    let mut dedup = pf.to_vec();
    dedup.dedup();
    if dedup.len() as Int != expected {
        return Err(Error::Internal("pseudo-Frobenius set has the wrong cardinality"));
    }
    Ok(())
}

/// Generalized Mersenne parameters: `a = m(2^n - 1)`, `k = n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MersenneParams {
    m: Int,
    n: Int,
    d: Int,
}

impl MersenneParams {
    pub fn new(m: Int, n: Int, d: Int) -> Result<Self> {
        if m < 1 || d < 1 {
            return Err(Error::InvalidParameter("m and d must be at least 1"));
        }
        if !(2..=62).contains(&n) {
            return Err(Error::InvalidParameter("n must be in 2..=62"));
        }
        let p = Self { m, n, d };
        check_coprime(p.a()?, d)?;
        Ok(p)
    }

    pub fn m(&self) -> Int {
        self.m
    }

    pub fn n(&self) -> Int {
        self.n
    }

    pub fn d(&self) -> Int {
        self.d
    }

    pub fn a(&self) -> Result<Int> {
        mul(self.m, pow2(exp(self.n)?)? - 1)
    }

    pub fn family(&self) -> Result<FamilyParams> {
        FamilyParams::new(self.a()?, self.d, self.n as usize)
    }

    /// `F = m^2 2^(2n) - (m^2 + m - md) 2^n - dm - d + m`.
    pub fn frobenius(&self) -> Result<Int> {
        let (m, d) = (self.m, self.d);
        let p = pow2(exp(self.n)?)?;
        let m2 = mul(m, m)?;
        let lead = mul(m2, mul(p, p)?)?;
        let mid = mul(sub(add(m2, m)?, mul(m, d)?)?, p)?;
        add(sub(sub(sub(lead, mid)?, mul(d, m)?)?, d)?, m)
    }

    /// `g = m(n 2^(n-1) - 1) + (m^2 (2^n-1)^2 + (m^2 + dm - 3m)(2^n-1) - d + 1) / 2`.
    pub fn genus(&self) -> Result<Int> {
        let (m, d, n) = (self.m, self.d, self.n);
        let q = pow2(exp(n)?)? - 1;
        let half = pow2(exp(n - 1)?)?;
        let first = mul(m, sub(mul(n, half)?, 1)?)?;
        let m2 = mul(m, m)?;
        let num = arith::sum([
            mul(m2, mul(q, q)?),
            mul(sub(add(m2, mul(d, m)?)?, mul(3, m)?)?, q),
            Ok(1 - d),
        ])?;
        add(first, arith::div_exact(num, 2, "Mersenne genus numerator is odd")?)
    }

    /// `PF = {F, F - d, ..., F - (n-2)d}`, ascending.
    pub fn pseudo_frobenius(&self) -> Result<Vec<Int>> {
        let pf = arithmetic_run(self.frobenius()?, self.d, self.n - 1)?;
        check_type(&pf, self.n - 1)?;
        Ok(pf)
    }

    pub fn report(&self) -> Result<InvariantReport> {
        Ok(InvariantReport {
            frobenius: self.frobenius()?,
            genus: self.genus()?,
            pseudo_frobenius: Some(self.pseudo_frobenius()?),
            source: Source::ClosedForm,
        })
    }
}

pub fn mersenne_general(p: &MersenneParams) -> Result<InvariantReport> {
    p.report()
}

/// The Mersenne semigroup `S(n)`: `m = d = 1`.
pub fn mersenne_classic(n: Int) -> Result<InvariantReport> {
    MersenneParams::new(1, n, 1)?.report()
}

/// Generalized Thabit parameters: `a = 3 * 2^n - 1`, `k = n + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ThabitParams {
    n: Int,
    d: Int,
}

/// Thabit invariants. For `n = 1` only `F` and `g` are known in closed form,
/// so `report.pseudo_frobenius` and `max_apery` are `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThabitReport {
    pub report: InvariantReport,
    pub max_apery: Option<Vec<Int>>,
}

impl ThabitReport {
    pub fn is_partial(&self) -> bool {
        self.report.pseudo_frobenius.is_none()
    }
}

impl ThabitParams {
    pub fn new(n: Int, d: Int) -> Result<Self> {
        if d < 1 {
            return Err(Error::InvalidParameter("d must be at least 1"));
        }
        if !(1..=61).contains(&n) {
            return Err(Error::InvalidParameter("n must be in 1..=61"));
        }
        let p = Self { n, d };
        check_coprime(p.a()?, d)?;
        Ok(p)
    }

    pub fn n(&self) -> Int {
        self.n
    }

    pub fn d(&self) -> Int {
        self.d
    }

    pub fn a(&self) -> Result<Int> {
        sub(mul(3, pow2(exp(self.n)?)?)?, 1)
    }

    pub fn family(&self) -> Result<FamilyParams> {
        FamilyParams::new(self.a()?, self.d, self.n as usize + 1)
    }

    /// `F = 9 * 2^(2n) + 3(d-2) 2^n - 2d + 1`.
    pub fn frobenius(&self) -> Result<Int> {
        let p = pow2(exp(self.n)?)?;
        arith::sum([
            mul(9, mul(p, p)?),
            mul(mul(3, self.d - 2)?, p),
            Ok(1 - 2 * self.d),
        ])
    }

    /// `g = 9 * 2^(2n-1) + (3n-8) 2^(n-1) + (3 * 2^(n-1) - 1) d + 1`.
    pub fn genus(&self) -> Result<Int> {
        let n = self.n;
        let half = pow2(exp(n - 1)?)?;
        let p = mul(2, half)?;
        arith::sum([
            mul(9, mul(half, p)?),
            mul(3 * n - 8, half),
            mul(sub(mul(3, half)?, 1)?, self.d),
            Ok(1),
        ])
    }

    fn require_n2(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::HypothesisViolated("Thabit PF and Apery formulas need n >= 2"));
        }
        Ok(())
    }

    /// The element of `PF` outside the run below `F`:
    /// `6 * 2^(2n) + (2d - 5) 2^n - (n+1) d + 1`.
    pub fn extra_pseudo_frobenius(&self) -> Result<Int> {
        self.require_n2()?;
        let p = pow2(exp(self.n)?)?;
        arith::sum([
            mul(6, mul(p, p)?),
            mul(2 * self.d - 5, p),
            Ok(1),
        ])
        .and_then(|s| sub(s, mul(self.n + 1, self.d)?))
    }

    /// `PF = {F, F - d, ..., F - (n-1)d} u {extra}`, ascending; `n >= 2`.
    pub fn pseudo_frobenius(&self) -> Result<Vec<Int>> {
        self.require_n2()?;
        let mut pf = arithmetic_run(self.frobenius()?, self.d, self.n)?;
        pf.push(self.extra_pseudo_frobenius()?);
        pf.sort_unstable();
        check_type(&pf, self.n + 1)?;
        Ok(pf)
    }

    /// Maximal Apéry elements: `{3 * 2^n (a+d) - t d : t = 2..=n+1}` together
    /// with `2^(n+1) (a+d) - (n+1) d`, ascending; `n >= 2`.
    pub fn max_apery(&self) -> Result<Vec<Int>> {
        self.require_n2()?;
        let ad = add(self.a()?, self.d)?;
        let p = pow2(exp(self.n)?)?;
        let top = mul(mul(3, p)?, ad)?;
        let mut out = (2..=self.n + 1)
            .map(|t| sub(top, mul(t, self.d)?))
            .collect::<Result<Vec<_>>>()?;
        out.push(sub(mul(mul(2, p)?, ad)?, mul(self.n + 1, self.d)?)?);
        out.sort_unstable();
        Ok(out)
    }

    pub fn report(&self) -> Result<ThabitReport> {
        let full = self.n >= 2;
        Ok(ThabitReport {
            report: InvariantReport {
                frobenius: self.frobenius()?,
                genus: self.genus()?,
                pseudo_frobenius: if full { Some(self.pseudo_frobenius()?) } else { None },
                source: Source::ClosedForm,
            },
            max_apery: if full { Some(self.max_apery()?) } else { None },
        })
    }
}

pub fn thabit_general(p: &ThabitParams) -> Result<ThabitReport> {
    p.report()
}

/// The Thabit semigroup `T(n)`: `d = 1`.
pub fn thabit_classic(n: Int) -> Result<ThabitReport> {
    ThabitParams::new(n, 1)?.report()
}

/// The `d = 1` form of the extra pseudo-Frobenius number,
/// `6 * 2^(2n) - 3 * 2^n - n`.
pub fn thabit_classic_extra_pf(n: Int) -> Result<Int> {
    if n < 2 {
        return Err(Error::HypothesisViolated("Thabit PF formulas need n >= 2"));
    }
    let p = pow2(exp(n)?)?;
    sub(sub(mul(6, mul(p, p)?)?, mul(3, p)?)?, n)
}

/// Parameters for `a = m(2^k - 1) + 2^(k-1) - 1`, `k >= 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Family3Params {
    m: Int,
    k: Int,
    d: Int,
}

impl Family3Params {
    pub fn new(m: Int, k: Int, d: Int) -> Result<Self> {
        if m < 1 || d < 1 {
            return Err(Error::InvalidParameter("m and d must be at least 1"));
        }
        if !(3..=60).contains(&k) {
            return Err(Error::InvalidParameter("k must be in 3..=60"));
        }
        let p = Self { m, k, d };
        check_coprime(p.a()?, d)?;
        Ok(p)
    }

    pub fn m(&self) -> Int {
        self.m
    }

    pub fn k(&self) -> Int {
        self.k
    }

    pub fn d(&self) -> Int {
        self.d
    }

    pub fn a(&self) -> Result<Int> {
        let p = pow2(exp(self.k)?)?;
        add(mul(self.m, p - 1)?, p / 2 - 1)
    }

    pub fn family(&self) -> Result<FamilyParams> {
        FamilyParams::new(self.a()?, self.d, self.k as usize)
    }

    /// `F = c^2 + (d - m) c - md - d` with `c = (2m+1) 2^(k-1) - 1`.
    pub fn frobenius(&self) -> Result<Int> {
        let (m, d) = (self.m, self.d);
        let c = sub(mul(2 * m + 1, pow2(exp(self.k - 1)?)?)?, 1)?;
        arith::sum([mul(c, c), mul(d - m, c), Ok(-d)]).and_then(|s| sub(s, mul(m, d)?))
    }

    /// `g = 2^(k-1)(2^k-1) m^2 + (d-1)(2^k-1) m / 2 + (2^(2k-1) + k 2^(k-1) - 2^(k+1)) m
    ///      + 2^(2k-3) + (d+k) 2^(k-2) - 5 * 2^(k-2) - d + 1`.
    pub fn genus(&self) -> Result<Int> {
        let (m, d, k) = (self.m, self.d, self.k);
        let p = pow2(exp(k)?)?;
        let q = p - 1;
        let half = p / 2;
        let quarter = p / 4;
        let m2 = mul(m, m)?;
        let odd_term = arith::div_exact(mul(mul(d - 1, q)?, m)?, 2, "family-3 genus half term")?;
        let lin = sub(add(mul(p, half)?, mul(k, half)?)?, mul(2, p)?)?;
        arith::sum([
            mul(mul(half, q)?, m2),
            Ok(odd_term),
            mul(lin, m),
            mul(half, quarter),
            mul(d + k, quarter),
            mul(-5, quarter),
            Ok(1 - d),
        ])
    }

    pub fn invariants(&self) -> Result<(Int, Int)> {
        Ok((self.frobenius()?, self.genus()?))
    }
}

pub fn family3(p: &Family3Params) -> Result<(Int, Int)> {
    p.invariants()
}

/// `S(m, n)` as a member of the family: `a = (2^m - 1) 2^n - 1`, `d = 1`,
/// `k = n + m - 1`, for `n >= 1` and `2 <= m <= 2^n`.
pub fn map_smn(m: Int, n: Int) -> Result<FamilyParams> {
    if n < 1 || m < 2 {
        return Err(Error::InvalidParameter("S(m,n) needs n >= 1 and m >= 2"));
    }
    if m > pow2(exp(n).map_err(|_| Error::InvalidParameter("n too large"))?).unwrap_or(Int::MAX) {
        return Err(Error::InvalidParameter("S(m,n) needs m <= 2^n"));
    }
    let a = sub(mul(pow2(exp(m)?)? - 1, pow2(exp(n)?)?)?, 1)?;
    FamilyParams::new(a, 1, usize::try_from(n + m - 1).map_err(|_| Error::Overflow)?)
}

/// `GT(n, m)` as a member of the family: `a = (2^m + 1) 2^n - (2^m - 1)`,
/// `d = 2^m - 1`, `k = n + delta` where `delta` is 1 for `n = 0`, `m` for
/// `m <= n`, and `m - 1` otherwise. Needs `m >= 2`, `n >= 0`.
pub fn map_gt(n: Int, m: Int) -> Result<FamilyParams> {
    if n < 0 || m < 2 {
        return Err(Error::InvalidParameter("GT(n,m) needs n >= 0 and m >= 2"));
    }
    let delta = if n == 0 {
        1
    } else if m <= n {
        m
    } else {
        m - 1
    };
    let pm = pow2(exp(m)?)?;
    let a = sub(mul(pm + 1, pow2(exp(n)?)?)?, pm - 1)?;
    FamilyParams::new(a, pm - 1, usize::try_from(n + delta).map_err(|_| Error::Overflow)?)
}
