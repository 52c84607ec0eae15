//! Brute-force reference: plain reachability over `0..=limit`, independent of
//! the Apéry machinery.

#![allow(dead_code)]

pub struct Brute {
    reachable: Vec<bool>,
    gens: Vec<i128>,
}

impl Brute {
    pub fn new(gens: &[i128], limit: usize) -> Self {
        let mut reachable = vec![false; limit + 1];
        reachable[0] = true;
        for n in 1..=limit {
            reachable[n] = gens.iter().any(|&g| (g as usize) <= n && reachable[n - g as usize]);
        }
        Self { reachable, gens: gens.to_vec() }
    }

    /// Limit large enough to see every gap: `F < a_1 * a_n` for coprime gens.
    pub fn for_gens(gens: &[i128]) -> Self {
        let lo = *gens.iter().min().unwrap() as usize;
        let hi = *gens.iter().max().unwrap() as usize;
        Self::new(gens, lo * hi + 2 * hi)
    }

    pub fn contains(&self, n: i128) -> bool {
        if n < 0 {
            return false;
        }
        match self.reachable.get(n as usize) {
            Some(&b) => b,
            None => true,
        }
    }

    pub fn gaps(&self) -> Vec<i128> {
        (1..self.reachable.len()).filter(|&n| !self.reachable[n]).map(|n| n as i128).collect()
    }

    pub fn frobenius(&self) -> i128 {
        self.gaps().last().copied().unwrap_or(-1)
    }

    /// `u` not in S with `u + g` in S for every generator `g`.
    pub fn pseudo_frobenius(&self) -> Vec<i128> {
        (-1..=self.frobenius())
            .filter(|&u| !self.contains(u) && self.gens.iter().all(|&g| self.contains(u + g)))
            .collect()
    }

    /// Least element of each residue class modulo `base`.
    pub fn apery(&self, base: i128) -> Vec<i128> {
        (0..base)
            .map(|r| {
                (r..self.reachable.len() as i128)
                    .step_by(base as usize)
                    .find(|&n| self.reachable[n as usize])
                    .unwrap()
            })
            .collect()
    }
}

pub fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}
