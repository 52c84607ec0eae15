//! Closed forms for `A = (a, 2a+d, 4a+3d, ..., 2^k a + (2^k - 1) d)`.
//!
//! Writing the generators as `2^i a + (2^i - 1) d`, the least element of
//! the semigroup in residue class `d*r mod a` is
//!
//! ```text
//! N_dr = min over m >= 0 of  O(ma + r) * a + (ma + r) * d
//! ```
//!
//! where `O(M) = M + opt(M)` over the coins `(1, 3, ..., 2^k - 1)`. That coin
//! system is orderly, so `opt` is the greedy count. When `a + d >= k` the
//! expression is nondecreasing in `m` and the minimum sits at `m = 0`, which
//! gives `N_dr` (and hence `F` and `g`) directly from greedy presentations of
//! `0..a`.

use crate::arith::{self, gcd};
use crate::coins::{self, CoinSystem, MAX_K};
use crate::semigroup::{GeneratorSet, InvariantReport, Source};
use crate::{Error, Int, Result};

/// Parameters `(a, d, k)` of the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    a: Int,
    d: Int,
    k: usize,
    monotone_ok: bool,
}

impl FamilyParams {
    pub fn new(a: Int, d: Int, k: usize) -> Result<Self> {
        if a < 2 {
            return Err(Error::InvalidParameter("a must be at least 2"));
        }
        if d < 1 {
            return Err(Error::InvalidParameter("d must be at least 1"));
        }
        if k == 0 || k > MAX_K {
            return Err(Error::InvalidParameter("k must be in 1..=63"));
        }
        let g = gcd(a, d);
        if g != 1 {
            return Err(Error::NotCoprime { gcd: g });
        }
        let monotone_ok = a.checked_add(d).is_none_or(|s| s >= k as Int);
        Ok(Self { a, d, k, monotone_ok })
    }

    pub fn a(&self) -> Int {
        self.a
    }

    pub fn d(&self) -> Int {
        self.d
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `a + d >= k`, the hypothesis under which the closed forms hold.
    pub fn monotone_ok(&self) -> bool {
        self.monotone_ok
    }

    fn require_monotone(&self) -> Result<()> {
        if !self.monotone_ok {
            return Err(Error::HypothesisViolated("closed forms need a + d >= k"));
        }
        Ok(())
    }

    /// `(a, 2a+d, 4a+3d, ..., 2^k a + (2^k - 1) d)`.
    pub fn generators(&self) -> Result<GeneratorSet> {
        let mut gens = alloc::vec::Vec::with_capacity(self.k + 1);
        gens.push(self.a);
        for i in 1..=self.k as u32 {
            let p = arith::pow2(i)?;
            gens.push(arith::add(arith::mul(p, self.a)?, arith::mul(p - 1, self.d)?)?);
        }
        GeneratorSet::new(gens)
    }

    /// `O(M) = M + opt(M)` over `(1, 3, ..., 2^k - 1)`, i.e. the minimum of
    /// `sum 2^i x_i` subject to `sum (2^i - 1) x_i = M`.
    pub fn obh(&self, amount: u64) -> Result<u64> {
        let change = CoinSystem::mersenne(self.k)?.grd(amount);
        amount.checked_add(change.count).ok_or(Error::Overflow)
    }

    /// `N_dr(m) = O(ma + r) * a + (ma + r) * d`.
    pub fn n_dr_m(&self, r: Int, m: Int) -> Result<Int> {
        self.check_residue(r)?;
        if m < 0 {
            return Err(Error::InvalidParameter("m must be nonnegative"));
        }
        let amount = arith::add(arith::mul(m, self.a)?, r)?;
        let o = self.obh(to_u64(amount)?)? as Int;
        arith::add(arith::mul(o, self.a)?, arith::mul(amount, self.d)?)
    }

    /// `N_dr = (sum x_i) a + r (a + d)` for the greedy presentation `X` of
    /// `r`, checked against the weight form `w(r) a + r d`.
    ///
    /// This is the Apéry entry for residue `d*r mod a` (see
    /// [`FamilyParams::apery_residue`]).
    pub fn n_dr(&self, r: Int) -> Result<Int> {
        self.require_monotone()?;
        self.check_residue(r)?;
        let x = coins::greedy_presentation(self.k, to_u64(r)?)?;
        let count = x.coin_count() as Int;
        let by_count = arith::add(arith::mul(count, self.a)?, arith::mul(r, arith::add(self.a, self.d)?)?)?;
        let by_weight = arith::add(arith::mul(x.weight()? as Int, self.a)?, arith::mul(r, self.d)?)?;
        if by_count != by_weight {
            return Err(Error::Internal("count and weight forms of N_dr disagree"));
        }
        Ok(by_count)
    }

    /// The semigroup residue `d*r mod a` whose Apéry entry is `n_dr(r)`.
    pub fn apery_residue(&self, r: Int) -> Result<Int> {
        self.check_residue(r)?;
        Ok(arith::mul(self.d % self.a, r)? % self.a)
    }

    /// `F = (a + d - 2 + c(a-1)) a - d`, with `c(r)` the coin count of the
    /// greedy presentation of `r`.
    pub fn frobenius_closed(&self) -> Result<Int> {
        self.require_monotone()?;
        let c = CoinSystem::mersenne(self.k)?.grd(to_u64(self.a - 1)?).count as Int;
        let factor = arith::add(arith::add(self.a, self.d)?, c - 2)?;
        arith::sub(arith::mul(factor, self.a)?, self.d)
    }

    /// `g = sum_{r=1}^{a-1} c(r) + (a-1)(a+d-1)/2`.
    pub fn genus_closed(&self) -> Result<Int> {
        self.require_monotone()?;
        let coins = CoinSystem::mersenne(self.k)?;
        let top = to_u64(self.a - 1)?;
        let counts: u128 = (1..=top).map(|r| coins.grd(r).count as u128).sum();
        let counts = Int::try_from(counts).map_err(|_| Error::Overflow)?;
        let tail = arith::mul(self.a - 1, arith::add(self.a, self.d - 1)?)?;
        arith::add(counts, arith::div_exact(tail, 2, "(a-1)(a+d-1) is odd")?)
    }

    /// `F` and `g` from the closed forms. The pseudo-Frobenius set is not
    /// available for the general family.
    pub fn closed_report(&self) -> Result<InvariantReport> {
        Ok(InvariantReport {
            frobenius: self.frobenius_closed()?,
            genus: self.genus_closed()?,
            pseudo_frobenius: None,
            source: Source::ClosedForm,
        })
    }

    /// Closed form when `a + d >= k`, otherwise the oracle on the generators.
    pub fn compute_best(&self) -> Result<InvariantReport> {
        if self.monotone_ok {
            self.closed_report()
        } else {
            self.generators()?.invariants()
        }
    }

    fn check_residue(&self, r: Int) -> Result<()> {
        if r < 0 || r >= self.a {
            return Err(Error::InvalidParameter("residue must be in 0..a"));
        }
        Ok(())
    }
}

fn to_u64(n: Int) -> Result<u64> {
    u64::try_from(n).map_err(|_| Error::Overflow)
}

fn check_pair(a: Int, d: Int, min_a: Int) -> Result<()> {
    if a < min_a {
        return Err(Error::HypothesisViolated("a below the bound of the piecewise formula"));
    }
    if d < 1 {
        return Err(Error::InvalidParameter("d must be at least 1"));
    }
    let g = gcd(a, d);
    if g != 1 {
        return Err(Error::NotCoprime { gcd: g });
    }
    Ok(())
}

/// Piecewise `(F, g)` for `k = 2`, i.e. `(a, 2a+d, 4a+3d)`, `a >= 2`.
pub fn k2_piecewise(a: Int, d: Int) -> Result<(Int, Int)> {
    check_pair(a, d, 2)?;
    let q = (a - 1) / 3;
    // F = 2a^2 - (3 - d + 2q) a - d
    let f = arith::sub(
        arith::sub(arith::mul(2, arith::mul(a, a)?)?, arith::mul(3 - d + 2 * q, a)?)?,
        d,
    )?;
    let base = arith::div_exact(arith::mul(a - 1, arith::add(2 * a, d - 1)?)?, 2, "k=2 genus base")?;
    let corr = if a % 3 == 0 {
        arith::div_exact(arith::mul(a, a - 3)?, 3, "k=2 genus, a = 0 mod 3")?
    } else {
        arith::div_exact(arith::mul(a - 1, a - 2)?, 3, "k=2 genus, a = 1,2 mod 3")?
    };
    Ok((f, arith::sub(base, corr)?))
}

/// Piecewise `(F, g)` for `k = 3`, i.e. `(a, 2a+d, 4a+3d, 8a+7d)`, `a >= 7`.
pub fn k3_piecewise(a: Int, d: Int) -> Result<(Int, Int)> {
    check_pair(a, d, 7)?;
    let q = (a - 1) / 7;
    let branch = a % 7;
    let shift: Int = match branch {
        1 => -2,
        2 | 4 => -1,
        0 | 3 | 5 => 0,
        _ => 1,
    };
    // F = a^2 + (q + d + shift) a - d
    let f = arith::sub(
        arith::add(arith::mul(a, a)?, arith::mul(arith::add(q + shift, d)?, a)?)?,
        d,
    )?;
    let base = arith::div_exact(arith::mul(a - 1, arith::add(a, d - 1)?)?, 2, "k=3 genus base")?;
    // (a - j)(a + 15 + j)/14 + offset for a = j mod 7, with j = 7 for a = 0.
    let (j, offset): (Int, Int) = match branch {
        0 => (0, 0),
        1 => (1, 0),
        2 => (2, 1),
        3 => (3, 3),
        4 => (4, 4),
        5 => (5, 6),
        _ => (6, 9),
    };
    let corr = arith::div_exact(arith::mul(a - j, a + 15 + j)?, 14, "k=3 genus correction")?;
    Ok((f, arith::add(arith::add(base, corr)?, offset)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn p(a: Int, d: Int, k: usize) -> FamilyParams {
        FamilyParams::new(a, d, k).unwrap()
    }

    #[test]
    fn params_validation() {
        assert_eq!(FamilyParams::new(4, 2, 2), Err(Error::NotCoprime { gcd: 2 }));
        assert!(FamilyParams::new(1, 1, 1).is_err());
        assert!(FamilyParams::new(3, 0, 1).is_err());
        assert!(FamilyParams::new(3, 1, 0).is_err());
        assert!(!p(2, 1, 4).monotone_ok());
        assert!(p(2, 1, 3).monotone_ok());
    }

    #[test]
    fn generator_examples() {
        assert_eq!(p(5, 1, 2).generators().unwrap().as_slice(), &[5, 11, 23]);
        assert_eq!(p(3, 1, 1).generators().unwrap().as_slice(), &[3, 7]);
        assert_eq!(p(11, 1, 3).generators().unwrap().as_slice(), &[11, 23, 47, 95]);
        assert_eq!(p(Int::MAX / 4, 1, 3).generators(), Err(Error::Overflow));
    }

    #[test]
    fn obh_examples() {
        assert_eq!(p(5, 1, 4).obh(20), Ok(24));
        assert_eq!(p(5, 1, 4).obh(0), Ok(0));
        assert_eq!(p(5, 1, 2).obh(7), Ok(10));
    }

    #[test]
    fn n_dr_examples() {
        let q = p(5, 1, 2);
        assert_eq!(q.n_dr_m(1, 0), Ok(11));
        assert_eq!(q.n_dr_m(0, 0), Ok(0));
        assert_eq!(q.n_dr_m(4, 0), Ok(34));
        assert_eq!(q.n_dr(4), Ok(34));
        assert_eq!(q.n_dr(0), Ok(0));
        assert_eq!(p(6, 1, 2).n_dr(3), Ok(27));
        assert!(q.n_dr(5).is_err());
        assert!(matches!(p(2, 1, 4).n_dr(1), Err(Error::HypothesisViolated(_))));
    }

    #[test]
    fn n_dr_matches_apery_through_residue_map() {
        let q = p(7, 3, 3);
        let table = q.generators().unwrap().apery().unwrap();
        for r in 0..7 {
            let idx = q.apery_residue(r).unwrap() as usize;
            assert_eq!(q.n_dr(r).unwrap(), table.entries()[idx]);
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(p(5, 1, 2).frobenius_closed(), Ok(29));
        assert_eq!(p(3, 1, 1).frobenius_closed(), Ok(11));
        assert_eq!(p(11, 1, 3).frobenius_closed(), Ok(131));
        assert_eq!(p(5, 1, 2).genus_closed(), Ok(16));
        assert_eq!(p(2, 1, 1).genus_closed(), Ok(2));
        assert_eq!(p(3, 2, 1).genus_closed(), Ok(7));
    }

    #[test]
    fn closed_forms_refuse_outside_hypothesis() {
        let q = p(2, 1, 5);
        assert!(matches!(q.frobenius_closed(), Err(Error::HypothesisViolated(_))));
        assert!(matches!(q.genus_closed(), Err(Error::HypothesisViolated(_))));
        let r = q.compute_best().unwrap();
        assert_eq!(r.source, Source::Oracle);
        // (2, 5, ...) is <2, 5>: F = 3, g = 2
        assert_eq!((r.frobenius, r.genus), (3, 2));
        assert_eq!(p(5, 1, 2).compute_best().unwrap().source, Source::ClosedForm);
    }

    #[test]
    fn piecewise_examples() {
        assert_eq!(k2_piecewise(5, 1), Ok((29, 16)));
        assert_eq!(k2_piecewise(3, 2), Ok((13, 7)));
        assert_eq!(k3_piecewise(8, 1), Ok((63, 40)));
        assert!(matches!(k3_piecewise(6, 1), Err(Error::HypothesisViolated(_))));
        assert!(matches!(k2_piecewise(1, 1), Err(Error::HypothesisViolated(_))));
        assert_eq!(k2_piecewise(4, 2), Err(Error::NotCoprime { gcd: 2 }));
    }

    #[test]
    fn residue_map_is_a_permutation() {
        let q = p(12, 5, 3);
        let mut seen: Vec<Int> = (0..12).map(|r| q.apery_residue(r).unwrap()).collect();
        seen.sort_unstable();
        assert_eq!(seen, (0..12).collect::<Vec<_>>());
    }
}
