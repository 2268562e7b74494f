//! Enumeration of torsion parts, non-crossing diagrams and maximal
//! non-crossing diagrams.

use rayon::prelude::*;

use crate::index::Alphabet;
use crate::{worker_pool, CensusError};

/// Largest rank for which a full 2^(n²) scan is allowed.
pub const EXHAUSTIVE_LIMIT: u32 = 5;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    Exhaustive,
    Closure,
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "exhaustive" => Ok(Method::Exhaustive),
            "closure" => Ok(Method::Closure),
            other => Err(format!("unknown method {other:?}, expected exhaustive or closure")),
        }
    }
}

/// All torsion parts at the index's rank, as masks in ascending order.
/// `Exhaustive` scans every mask (n ≤ 5); `Closure` walks the closure
/// system in lectic order, which coincides with ascending mask order.
pub fn enumerate_torsion_parts(alpha: &Alphabet, method: Method) -> Result<Vec<u64>, CensusError> {
    match method {
        Method::Exhaustive => {
            let n = alpha.n();
            if n > EXHAUSTIVE_LIMIT {
                return Err(CensusError::ResourceGuard { n, limit: EXHAUSTIVE_LIMIT });
            }
            let full = alpha.full_mask();
            // contiguous ranges keep the merged output in ascending order
            let chunk = 1u64 << 16;
            let starts: Vec<u64> = (0..=full).step_by(chunk as usize).collect();
            let pool = worker_pool();
            let found: Vec<Vec<u64>> = pool.install(|| {
                starts
                    .par_iter()
                    .map(|&lo| {
                        let hi = lo.saturating_add(chunk - 1).min(full);
                        (lo..=hi).filter(|&x| alpha.is_torsion(x)).collect()
                    })
                    .collect()
            });
            Ok(found.into_iter().flatten().collect())
        }
        Method::Closure => Ok(TorsionParts::new(alpha).collect()),
    }
}

/// Streaming enumeration of the closure system of Ptolemy diagrams in
/// lectic (= ascending mask) order, one closed set at a time.
pub struct TorsionParts<'a> {
    alpha: &'a Alphabet,
    state: Option<u64>,
    started: bool,
}

impl<'a> TorsionParts<'a> {
    pub fn new(alpha: &'a Alphabet) -> Self {
        TorsionParts { alpha, state: None, started: false }
    }
}

impl Iterator for TorsionParts<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if !self.started {
            self.started = true;
            let first = self.alpha.closure(0);
            self.state = Some(first);
            return self.state;
        }
        let cur = self.state?;
        if cur == self.alpha.full_mask() {
            self.state = None;
            return None;
        }
        // ordering the ground set by descending bit position makes lectic
        // order coincide with ascending numeric mask order
        for i in 0..self.alpha.len() {
            let bit = 1u64 << i;
            if cur & bit != 0 {
                continue;
            }
            let high = self.alpha.full_mask() & !bit & !(bit - 1);
            let candidate = self.alpha.closure((cur & high) | bit);
            // accept only when no new element appears above position i
            if candidate & !cur & high == 0 {
                self.state = Some(candidate);
                return self.state;
            }
        }
        unreachable!("the full alphabet closes the lectic walk");
    }
}

/// Every non-crossing diagram (clique of the compatibility graph),
/// ascending.
pub fn enumerate_noncrossing(alpha: &Alphabet) -> Vec<u64> {
    fn rec(alpha: &Alphabet, x: u64, start: usize, out: &mut Vec<u64>) {
        out.push(x);
        for i in start..alpha.len() {
            let bit = 1u64 << i;
            if x & !alpha.compat_mask(i) == 0 {
                rec(alpha, x | bit, i + 1, out);
            }
        }
    }
    let mut out = Vec::new();
    rec(alpha, 0, 0, &mut out);
    out.sort_unstable();
    out
}

/// All inclusion-maximal non-crossing diagrams, ascending.
pub fn enumerate_maximal_noncrossing(alpha: &Alphabet) -> Result<Vec<u64>, CensusError> {
    let n = alpha.n();
    if n > 6 {
        return Err(CensusError::ResourceGuard { n, limit: 6 });
    }
    let mut out = Vec::new();
    let neigh: Vec<u64> =
        (0..alpha.len()).map(|i| alpha.compat_mask(i) & !(1u64 << i)).collect();
    bron_kerbosch(0, alpha.full_mask(), 0, &neigh, &mut out);
    out.sort_unstable();
    Ok(out)
}

fn bron_kerbosch(r: u64, mut p: u64, mut x: u64, neigh: &[u64], out: &mut Vec<u64>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    let pivot = {
        let mut best = usize::MAX;
        let mut best_score = 0;
        let mut bits = p | x;
        while bits != 0 {
            let u = bits.trailing_zeros() as usize;
            let score = (p & neigh[u]).count_ones();
            if best == usize::MAX || score > best_score {
                best = u;
                best_score = score;
            }
            bits &= bits - 1;
        }
        best
    };
    let mut cand = p & !neigh[pivot];
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        let bit = 1u64 << v;
        bron_kerbosch(r | bit, p & neigh[v], x & neigh[v], neigh, out);
        p &= !bit;
        x |= bit;
        cand &= !bit;
    }
}

/// Independent count of maximal non-crossing diagrams:
/// (3n−2)/n · C(2n−2, n−1), evaluated exactly.
pub fn closed_form_maximal_count(n: u32) -> u128 {
    let n = u128::from(n);
    let binom = |top: u128, k: u128| -> u128 {
        let mut acc: u128 = 1;
        for i in 0..k {
            acc = acc * (top - i) / (i + 1);
        }
        acc
    };
    (3 * n - 2) * binom(2 * n - 2, n - 1) / n
}
