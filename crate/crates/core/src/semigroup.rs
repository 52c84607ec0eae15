//! Exact oracle for arbitrary numerical semigroups.
//!
//! Everything here goes through the Apéry set of the least generator: the
//! least element of the semigroup in each residue class. The table is built
//! by label-setting shortest paths on the residue graph and then answers
//! membership in O(1), which the other invariants are built on.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::arith::{self, gcd};
use crate::{Error, Int, Result};

/// A validated system of generators: positive, coprime, sorted ascending and
/// without duplicates. Redundant generators are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSet {
    generators: Vec<Int>,
}

impl GeneratorSet {
    pub fn new<I: IntoIterator<Item = Int>>(generators: I) -> Result<Self> {
        let mut generators: Vec<Int> = generators.into_iter().collect();
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&g) = generators.iter().find(|&&g| g <= 0) {
            return Err(Error::NonPositiveGenerator(g));
        }
        generators.sort_unstable();
        generators.dedup();
        let g = generators.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::NotCoprime { gcd: g });
        }
        Ok(Self { generators })
    }

    pub fn as_slice(&self) -> &[Int] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The least generator, i.e. the multiplicity of the semigroup.
    pub fn least(&self) -> Int {
        self.generators[0]
    }

    pub fn largest(&self) -> Int {
        self.generators[self.generators.len() - 1]
    }

    /// Apéry set with respect to the least generator.
    pub fn apery(&self) -> Result<AperyTable> {
        self.build_table(self.least())
    }

    /// Apéry set with respect to an arbitrary element `base` of the
    /// semigroup.
    pub fn apery_set(&self, base: Int) -> Result<AperyTable> {
        if base == self.least() {
            return self.apery();
        }
        table_size(base)?;
        if !self.generators.contains(&base) && !self.apery()?.contains(base) {
            return Err(Error::BaseNotInSemigroup(base));
        }
        self.build_table(base)
    }

    fn build_table(&self, base: Int) -> Result<AperyTable> {
        let size = table_size(base)?;
        let entries = residue_distances(size, &self.generators)?
            .into_iter()
            .map(|d| d.ok_or(Error::Internal("residue unreachable from 0")))
            .collect::<Result<Vec<_>>>()?;
        Ok(AperyTable {
            base,
            entries,
            generators: self.generators.clone(),
        })
    }

    /// Oracle invariants: Frobenius number, genus and pseudo-Frobenius set.
    pub fn invariants(&self) -> Result<InvariantReport> {
        let apery = self.apery()?;
        Ok(InvariantReport {
            frobenius: apery.frobenius(),
            genus: apery.genus()?,
            pseudo_frobenius: Some(apery.pseudo_frobenius()),
            source: Source::Oracle,
        })
    }

    /// Drops every generator that is a nonnegative combination of the
    /// others. The result generates the same semigroup.
    pub fn minimal(&self) -> Result<GeneratorSet> {
        let least = self.least();
        let size = table_size(least)?;
        let mut kept: Vec<Int> = vec![least];
        for &g in &self.generators[1..] {
            // Only smaller generators can take part in a representation of g.
            let dist = residue_distances(size, &kept)?;
            let idx = (g % least) as usize;
            let redundant = matches!(dist[idx], Some(n) if n <= g);
            if !redundant {
                kept.push(g);
            }
        }
        Ok(GeneratorSet { generators: kept })
    }
}

fn table_size(base: Int) -> Result<usize> {
    if base < 1 {
        return Err(Error::InvalidBase(base));
    }
    usize::try_from(base).map_err(|_| Error::InvalidBase(base))
}

/// Single-source shortest paths on the residues `0..modulus`, with an edge
/// `r -> (r + s) mod modulus` of weight `s` for each step `s`. Entry `r` is
/// the least nonnegative combination of `steps` congruent to `r`, or `None`
/// if there is none.
fn residue_distances(modulus: usize, steps: &[Int]) -> Result<Vec<Option<Int>>> {
    let m = modulus as Int;
    let steps: Vec<(Int, usize)> = steps
        .iter()
        .copied()
        .filter(|s| s % m != 0)
        .map(|s| (s, (s % m) as usize))
        .collect();

    let mut dist: Vec<Option<Int>> = vec![None; modulus];
    let mut done = vec![false; modulus];
    let mut heap = BinaryHeap::new();
    dist[0] = Some(0);
    heap.push(Reverse((0 as Int, 0usize)));

    while let Some(Reverse((d, r))) = heap.pop() {
        if done[r] {
            continue;
        }
        done[r] = true;
        for &(s, shift) in &steps {
            let next = if r + shift >= modulus {
                r + shift - modulus
            } else {
                r + shift
            };
            if done[next] {
                continue;
            }
            let cand = arith::add(d, s)?;
            if dist[next].is_none_or(|cur| cand < cur) {
                dist[next] = Some(cand);
                heap.push(Reverse((cand, next)));
            }
        }
    }
    Ok(dist)
}

/// Apéry set `Ape(S, base)`: `entries[r]` is the least element of the
/// semigroup congruent to `r` modulo `base`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperyTable {
    base: Int,
    entries: Vec<Int>,
    generators: Vec<Int>,
}

impl AperyTable {
    pub fn base(&self) -> Int {
        self.base
    }

    pub fn entries(&self) -> &[Int] {
        &self.entries
    }

    /// Membership test: `n` is in the semigroup iff it is at least the Apéry
    /// entry of its residue class.
    #[inline]
    pub fn contains(&self, n: Int) -> bool {
        n >= 0 && n >= self.entries[(n % self.base) as usize]
    }

    /// `max(Ape) - base`. For the semigroup of all naturals this is -1.
    pub fn frobenius(&self) -> Int {
        self.entries.iter().copied().max().unwrap_or(0) - self.base
    }

    /// `(1/base) * sum(N_r) - (base-1)/2`, evaluated exactly.
    pub fn genus(&self) -> Result<Int> {
        let total = arith::sum(self.entries[1..].iter().map(|&n| Ok(n)))?;
        let num = arith::sub(arith::mul(2, total)?, arith::mul(self.base, self.base - 1)?)?;
        arith::div_exact(num, arith::mul(2, self.base)?, "genus is not an integer")
    }

    /// Maximal elements of the Apéry set under `x <= y iff y - x in S`,
    /// ascending.
    ///
    /// `w` fails to be maximal exactly when `w + g` is again an Apéry entry
    /// for some generator `g`, so one lookup per generator suffices.
    pub fn maximal_elements(&self) -> Vec<Int> {
        let mut out: Vec<Int> = self
            .entries
            .iter()
            .copied()
            .filter(|&w| {
                !self.generators.iter().any(|&g| {
                    w.checked_add(g)
                        .is_some_and(|up| up == self.entries[(up % self.base) as usize])
                })
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Same set as [`AperyTable::maximal_elements`], by comparing every pair
    /// of entries. Quadratic in the base.
    pub fn maximal_elements_pairwise(&self) -> Vec<Int> {
        let mut sorted = self.entries.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mut out: Vec<Int> = sorted
            .iter()
            .enumerate()
            .filter(|&(i, &w)| !sorted[..i].iter().any(|&above| self.contains(above - w)))
            .map(|(_, &w)| w)
            .collect();
        out.sort_unstable();
        out
    }

    /// Pseudo-Frobenius numbers, ascending.
    pub fn pseudo_frobenius(&self) -> Vec<Int> {
        self.maximal_elements().into_iter().map(|w| w - self.base).collect()
    }

    /// Positive integers not in the semigroup, ascending.
    pub fn gaps(&self) -> Vec<Int> {
        (1..=self.frobenius()).filter(|&n| !self.contains(n)).collect()
    }
}

/// Which route produced an [`InvariantReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Source {
    Oracle,
    ClosedForm,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::Oracle => "oracle",
            Source::ClosedForm => "closed_form",
        }
    }
}

/// Frobenius number, genus and (when known) the pseudo-Frobenius set.
///
/// Some closed forms only give `F` and `g`; `pseudo_frobenius` is `None` for
/// those.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub frobenius: Int,
    pub genus: Int,
    pub pseudo_frobenius: Option<Vec<Int>>,
    pub source: Source,
}

impl InvariantReport {
    /// The type `t = |PF|`, when the pseudo-Frobenius set is known.
    pub fn semigroup_type(&self) -> Option<usize> {
        self.pseudo_frobenius.as_ref().map(Vec::len)
    }
}
