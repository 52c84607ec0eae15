//! Change-making over coin systems, with the Mersenne-style system
//! `(1, 3, 7, ..., 2^k - 1)` as the main customer.
//!
//! `opt` is the exact minimum coin count (dynamic programming), `grd` the
//! count used by the largest-coin-first strategy. A system is *orderly* when
//! the two always agree.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::{Error, Result};

/// Largest `k` for which `2^k - 1` fits in a `u64` coin.
pub const MAX_K: usize = 63;

/// Denominations `1 = b_1 < b_2 < ... < b_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoinSystem {
    denominations: Vec<u64>,
}

/// Result of the greedy strategy: total coin count and the number of coins
/// of each denomination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Change {
    pub count: u64,
    pub coeffs: Vec<u64>,
}

/// An amount on which the greedy strategy is beaten.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub amount: u64,
    pub optimal: u64,
    pub greedy: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orderliness {
    Orderly,
    NonOrderly(Witness),
    /// The prefix `b_1..b_{prefix_len}` failed its one-point test, so the
    /// induction stops there. The witness beats greedy on that prefix but not
    /// on the full system, which may or may not be orderly.
    Undecided { prefix_len: usize, witness: Witness },
}

impl Orderliness {
    pub fn is_orderly(&self) -> bool {
        matches!(self, Orderliness::Orderly)
    }
}

impl CoinSystem {
    pub fn new(denominations: Vec<u64>) -> Result<Self> {
        match denominations.first() {
            None => return Err(Error::InvalidCoinSystem("no denominations")),
            Some(&b) if b != 1 => return Err(Error::InvalidCoinSystem("first denomination must be 1")),
            _ => {}
        }
        if denominations.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidCoinSystem("denominations must strictly increase"));
        }
        Ok(Self { denominations })
    }

    /// `(1, 3, 7, ..., 2^k - 1)`.
    pub fn mersenne(k: usize) -> Result<Self> {
        check_k(k)?;
        Ok(Self {
            denominations: (1..=k).map(|i| (1u64 << i) - 1).collect(),
        })
    }

    pub fn denominations(&self) -> &[u64] {
        &self.denominations
    }

    pub fn len(&self) -> usize {
        self.denominations.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn prefix(&self, len: usize) -> CoinSystem {
        CoinSystem {
            denominations: self.denominations[..len].to_vec(),
        }
    }

    /// Largest coin first, as many times as it fits, then the next one.
    pub fn grd(&self, amount: u64) -> Change {
        let mut rest = amount;
        let mut coeffs = vec![0; self.denominations.len()];
        for (x, &b) in coeffs.iter_mut().zip(&self.denominations).rev() {
            *x = rest / b;
            rest %= b;
        }
        Change {
            count: coeffs.iter().sum(),
            coeffs,
        }
    }

    /// Minimum number of coins summing to `amount`.
    pub fn opt(&self, amount: u64) -> Result<u64> {
        Ok(self.opt_table(amount)?[amount as usize])
    }

    /// `opt` for every amount in `0..=max`.
    fn opt_table(&self, max: u64) -> Result<Vec<u64>> {
        let len = usize::try_from(max)
            .ok()
            .and_then(|m| m.checked_add(1))
            .ok_or(Error::InvalidParameter("amount too large for a table"))?;
        let mut best = vec![0u64; len];
        for m in 1..len {
            best[m] = self
                .denominations
                .iter()
                .take_while(|&&b| b as usize <= m)
                .map(|&b| best[m - b as usize] + 1)
                .min()
                .unwrap_or(u64::MAX);
        }
        Ok(best)
    }

    /// Checks `opt == grd` for every amount up to `max` and returns the first
    /// failure.
    pub fn is_orderly_exhaustive(&self, max: u64) -> Result<Orderliness> {
        let table = self.opt_table(max)?;
        for (amount, &optimal) in table.iter().enumerate() {
            let greedy = self.grd(amount as u64).count;
            if greedy != optimal {
                return Ok(Orderliness::NonOrderly(Witness {
                    amount: amount as u64,
                    optimal,
                    greedy,
                }));
            }
        }
        Ok(Orderliness::Orderly)
    }

    /// One-point certification, one prefix at a time.
    ///
    /// `(1)` is orderly. If `(b_1, ..., b_j)` is orderly, then adding
    /// `b_{j+1}` keeps it orderly iff greedy is optimal at `s * b_j` where
    /// `s = ceil(b_{j+1} / b_j)`.
    pub fn is_orderly_onepoint(&self) -> Result<Orderliness> {
        let b = &self.denominations;
        for j in 1..b.len() {
            let s = b[j].div_ceil(b[j - 1]);
            let amount = s.checked_mul(b[j - 1]).ok_or(Error::Overflow)?;
            let prefix = self.prefix(j + 1);
            let optimal = prefix.opt(amount)?;
            let greedy = prefix.grd(amount).count;
            if optimal != greedy {
                let witness = Witness { amount, optimal, greedy };
                if j + 1 == b.len() {
                    return Ok(Orderliness::NonOrderly(witness));
                }
                let full = Witness {
                    amount,
                    optimal: self.opt(amount)?,
                    greedy: self.grd(amount).count,
                };
                if full.optimal != full.greedy {
                    return Ok(Orderliness::NonOrderly(full));
                }
                return Ok(Orderliness::Undecided {
                    prefix_len: j + 1,
                    witness,
                });
            }
        }
        Ok(Orderliness::Orderly)
    }
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 || k > MAX_K {
        return Err(Error::InvalidParameter("k must be in 1..=63"));
    }
    Ok(())
}

/// The greedy coefficient vector `(x_1, ..., x_k)` of an amount over
/// `(1, 3, ..., 2^k - 1)`.
///
/// Characterised by: `x_k = floor(M / (2^k - 1))`; `x_i` in `{0, 1, 2}` for
/// `i < k`; and a 2 below the top may only have zeros beneath it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GreedyPresentation {
    coeffs: Vec<u64>,
    value: u64,
}

impl GreedyPresentation {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn k(&self) -> usize {
        self.coeffs.len()
    }

    /// The represented amount `sum (2^i - 1) x_i`.
    pub fn value(&self) -> u64 {
        self.value
    }

    /// Number of coins `sum x_i`.
    pub fn coin_count(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    /// `w = sum 2^i x_i`, which is `value + coin_count`.
    pub fn weight(&self) -> Result<u64> {
        self.value.checked_add(self.coin_count()).ok_or(Error::Overflow)
    }

    /// Whether the three structural conditions hold.
    pub fn is_well_formed(&self) -> bool {
        let k = self.k();
        let top = (1u64 << k) - 1;
        if self.coeffs[k - 1] != self.value / top {
            return false;
        }
        let lower = &self.coeffs[..k - 1];
        if lower.iter().any(|&x| x > 2) {
            return false;
        }
        lower
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x == 2)
            .all(|(i, _)| lower[..i].iter().all(|&x| x == 0))
    }

    /// The presentation of `value + 1`: a 2 in the lowest nonzero slot
    /// carries into the next slot (`2 (2^i - 1) + 1 = 2^(i+1) - 1`),
    /// otherwise the 1-coin is incremented.
    fn successor(&self) -> Result<GreedyPresentation> {
        let mut coeffs = self.coeffs.clone();
        let k = coeffs.len();
        let lowest = coeffs.iter().position(|&x| x != 0);
        match lowest {
            Some(j) if j + 1 < k && coeffs[j] == 2 => {
                coeffs[j] = 0;
                coeffs[j + 1] += 1;
            }
            _ => coeffs[0] += 1,
        }
        let value = self.value.checked_add(1).ok_or(Error::Overflow)?;
        Ok(GreedyPresentation { coeffs, value })
    }
}

/// The greedy presentation of `amount` over `(1, 3, ..., 2^k - 1)`.
pub fn greedy_presentation(k: usize, amount: u64) -> Result<GreedyPresentation> {
    let coins = CoinSystem::mersenne(k)?;
    let change = coins.grd(amount);
    Ok(GreedyPresentation {
        coeffs: change.coeffs,
        value: amount,
    })
}

/// Greedy presentations of `0, 1, ..., max`, in order.
pub fn enumerate_presentations(k: usize, max: u64) -> Result<Vec<GreedyPresentation>> {
    check_k(k)?;
    let mut cur = GreedyPresentation {
        coeffs: vec![0; k],
        value: 0,
    };
    let mut out = Vec::new();
    loop {
        let done = cur.value == max;
        let next = if done { None } else { Some(cur.successor()?) };
        out.push(cur);
        match next {
            Some(n) => cur = n,
            None => break,
        }
    }
    Ok(out)
}

/// Colexicographic comparison: decided by the highest index at which the
/// vectors differ.
pub fn colex_cmp(left: &[u64], right: &[u64]) -> Result<Ordering> {
    if left.len() != right.len() {
        return Err(Error::LengthMismatch {
            left: left.len(),
            right: right.len(),
        });
    }
    Ok(left
        .iter()
        .rev()
        .zip(right.iter().rev())
        .map(|(l, r)| l.cmp(r))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coins(v: &[u64]) -> CoinSystem {
        CoinSystem::new(v.to_vec()).unwrap()
    }

    #[test]
    fn coin_system_validation() {
        assert!(CoinSystem::new(vec![]).is_err());
        assert!(CoinSystem::new(vec![2, 3]).is_err());
        assert!(CoinSystem::new(vec![1, 3, 3]).is_err());
        assert_eq!(CoinSystem::mersenne(3).unwrap().denominations(), &[1, 3, 7]);
        assert!(CoinSystem::mersenne(0).is_err());
        assert!(CoinSystem::mersenne(64).is_err());
    }

    #[test]
    fn grd_examples() {
        assert_eq!(coins(&[1, 5, 16]).grd(20).count, 5);
        assert_eq!(coins(&[1, 3, 7]).grd(0).count, 0);
        let c = coins(&[1, 3, 7, 15]).grd(50);
        assert_eq!(c.count, 6);
        assert_eq!(c.coeffs, [2, 1, 0, 3]);
    }

    #[test]
    fn opt_examples() {
        assert_eq!(coins(&[1, 5, 16]).opt(20), Ok(4));
        assert_eq!(coins(&[1, 5, 16]).opt(0), Ok(0));
        assert_eq!(coins(&[1, 3, 7]).opt(9), Ok(3));
    }

    #[test]
    fn exhaustive_examples() {
        assert_eq!(
            coins(&[1, 5, 16]).is_orderly_exhaustive(25),
            Ok(Orderliness::NonOrderly(Witness { amount: 20, optimal: 4, greedy: 5 }))
        );
        assert_eq!(coins(&[1]).is_orderly_exhaustive(100), Ok(Orderliness::Orderly));
        assert_eq!(coins(&[1, 3, 7, 15]).is_orderly_exhaustive(1000), Ok(Orderliness::Orderly));
    }

    #[test]
    fn onepoint_examples() {
        assert_eq!(CoinSystem::mersenne(16).unwrap().is_orderly_onepoint(), Ok(Orderliness::Orderly));
        assert_eq!(
            coins(&[1, 5, 16]).is_orderly_onepoint(),
            Ok(Orderliness::NonOrderly(Witness { amount: 20, optimal: 4, greedy: 5 }))
        );
        assert_eq!(coins(&[1, 2]).is_orderly_onepoint(), Ok(Orderliness::Orderly));
        assert_eq!(coins(&[1]).is_orderly_onepoint(), Ok(Orderliness::Orderly));
        assert_eq!(coins(&[1, 2, 5, 10]).is_orderly_onepoint(), Ok(Orderliness::Orderly));
    }

    #[test]
    fn onepoint_stops_at_failing_prefix() {
        // (1,3,4) fails at 6 = 3+3; adding 6 repairs that amount.
        let r = coins(&[1, 3, 4, 6]).is_orderly_onepoint().unwrap();
        assert_eq!(
            r,
            Orderliness::Undecided {
                prefix_len: 3,
                witness: Witness { amount: 6, optimal: 2, greedy: 3 }
            }
        );
    }

    #[test]
    fn presentation_examples() {
        assert_eq!(greedy_presentation(4, 20).unwrap().coeffs(), &[2, 1, 0, 1]);
        assert_eq!(greedy_presentation(4, 14).unwrap().coeffs(), &[0, 0, 2, 0]);
        assert_eq!(greedy_presentation(4, 0).unwrap().coeffs(), &[0, 0, 0, 0]);
        assert!(greedy_presentation(0, 3).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let rows = enumerate_presentations(1, 3).unwrap();
        let got: Vec<&[u64]> = rows.iter().map(|p| p.coeffs()).collect();
        assert_eq!(got, [&[0][..], &[1], &[2], &[3]]);

        let rows = enumerate_presentations(2, 6).unwrap();
        let got: Vec<&[u64]> = rows.iter().map(|p| p.coeffs()).collect();
        assert_eq!(got, [&[0, 0][..], &[1, 0], &[2, 0], &[0, 1], &[1, 1], &[2, 1], &[0, 2]]);

        let rows = enumerate_presentations(4, 50).unwrap();
        assert_eq!(rows.len(), 51);
        assert_eq!(rows[45].coeffs(), &[0, 0, 0, 3]);
        assert_eq!(enumerate_presentations(4, 0).unwrap().len(), 1);
    }

    #[test]
    fn colex_examples() {
        assert_eq!(colex_cmp(&[2, 1, 0, 1], &[0, 2, 0, 1]), Ok(Ordering::Less));
        assert_eq!(colex_cmp(&[0, 1, 1, 0], &[0, 1, 1, 0]), Ok(Ordering::Equal));
        assert_eq!(colex_cmp(&[0, 0, 0, 1], &[0, 0, 2, 0]), Ok(Ordering::Greater));
        assert_eq!(colex_cmp(&[0, 1], &[0, 1, 0]), Err(Error::LengthMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn weight_examples() {
        assert_eq!(greedy_presentation(4, 20).unwrap().weight(), Ok(24));
        assert_eq!(greedy_presentation(4, 0).unwrap().weight(), Ok(0));
        assert_eq!(greedy_presentation(4, 15).unwrap().weight(), Ok(16));
    }
}
