//! Bitmask encoding of diagrams over the canonical alphabet order.

use dgon::crossing::crossing_count;
use dgon::ptolemy::requirements;
use dgon::{full_alphabet, ArcElement, Diagram};

use crate::CensusError;

/// The alphabet of rank `n` with a fixed total order (canonical element
/// sort) and precomputed compatibility and hull-requirement masks.
/// Diagrams are masks of width n².
pub struct Alphabet {
    n: u32,
    elems: Vec<ArcElement>,
    /// bit j set iff element j does not cross element i; bit i itself set
    compat: Vec<u64>,
    /// (i, j, union of hull-requirement masks) per crossing pair, i < j
    cross_pairs: Vec<(u16, u16, u64)>,
    full: u64,
}

impl Alphabet {
    pub fn new(n: u32) -> Result<Self, CensusError> {
        if n > 8 {
            return Err(CensusError::MaskWidth(n));
        }
        let elems = full_alphabet(n)?;
        let m = elems.len();
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]), "canonical order");
        let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        let mut compat = vec![0u64; m];
        let mut cross_pairs = Vec::new();
        for (i, row) in compat.iter_mut().enumerate() {
            for j in 0..m {
                if crossing_count(&elems[i], &elems[j]).expect("equal ranks") == 0 {
                    *row |= 1 << j;
                }
            }
        }
        for (i, &row) in compat.iter().enumerate() {
            for j in i + 1..m {
                if row & (1 << j) != 0 {
                    continue;
                }
                let mut req = 0u64;
                for (a, b) in [(i, j), (j, i)] {
                    for r in requirements(&elems[a], &elems[b]) {
                        for e in &r.needed {
                            let k = elems.binary_search(e).expect("requirements stay in the alphabet");
                            req |= 1 << k;
                        }
                    }
                }
                cross_pairs.push((i as u16, j as u16, req));
            }
        }
        Ok(Alphabet { n, elems, compat, cross_pairs, full })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elements(&self) -> &[ArcElement] {
        &self.elems
    }

    pub fn element(&self, i: usize) -> ArcElement {
        self.elems[i]
    }

    pub fn index_of(&self, e: &ArcElement) -> Option<usize> {
        self.elems.binary_search(e).ok()
    }

    pub fn full_mask(&self) -> u64 {
        self.full
    }

    pub fn compat_mask(&self, i: usize) -> u64 {
        self.compat[i]
    }

    pub fn mask_of(&self, d: &Diagram) -> Result<u64, CensusError> {
        if d.n() != self.n {
            return Err(CensusError::RankMismatch { expected: self.n, got: d.n() });
        }
        let mut mask = 0;
        for e in d.iter() {
            let i = self.index_of(e).expect("rank-checked element is in the alphabet");
            mask |= 1 << i;
        }
        Ok(mask)
    }

    pub fn diagram_of(&self, mask: u64) -> Diagram {
        debug_assert_eq!(mask & !self.full, 0, "mask within width");
        let mut bits = mask;
        let mut d = Diagram::empty(self.n);
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            d.insert(self.elems[i]).expect("alphabet elements insert cleanly");
            bits &= bits - 1;
        }
        d
    }

    /// Elements crossing nothing in `x`.
    pub fn nc_mask(&self, x: u64) -> u64 {
        let mut out = self.full;
        let mut bits = x;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            out &= self.compat[i];
            bits &= bits - 1;
        }
        out
    }

    pub fn is_noncrossing(&self, x: u64) -> bool {
        let mut bits = x;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            if x & !self.compat[i] != 0 {
                return false;
            }
            bits &= bits - 1;
        }
        true
    }

    pub fn is_torsion(&self, x: u64) -> bool {
        self.nc_mask(self.nc_mask(x)) == x
    }

    /// Maximal non-crossing: nothing outside crosses nothing inside.
    pub fn is_maximal_noncrossing(&self, x: u64) -> bool {
        self.nc_mask(x) == x
    }

    /// Hull axioms: every crossing pair inside `x` has all its required
    /// elements inside `x`.
    pub fn is_ptolemy(&self, x: u64) -> bool {
        for &(i, j, req) in &self.cross_pairs {
            if x & (1 << i) != 0 && x & (1 << j) != 0 && req & !x != 0 {
                return false;
            }
        }
        true
    }

    /// Least Ptolemy superset: saturate hull requirements to a fixpoint.
    pub fn closure(&self, x: u64) -> u64 {
        let mut cur = x;
        loop {
            let mut next = cur;
            for &(i, j, req) in &self.cross_pairs {
                if cur & (1 << i) != 0 && cur & (1 << j) != 0 {
                    next |= req;
                }
            }
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// The admissible mutation cores of `x`: members crossing nothing
    /// else in `x`.
    pub fn core_mask(&self, x: u64) -> u64 {
        x & self.nc_mask(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use dgon::ptolemy::{is_ptolemy, is_torsion_part};

    #[test]
    fn masks_round_trip_diagrams() {
        let alpha = Alphabet::new(4).unwrap();
        assert_eq!(alpha.len(), 16);
        assert_eq!(alpha.full_mask(), 0xffff);
        for mask in [0u64, 1, 0b1010, 0xffff, 0x8001] {
            assert_eq!(alpha.mask_of(&alpha.diagram_of(mask)).unwrap(), mask);
        }
    }

    #[test]
    fn rank_guard() {
        assert!(matches!(Alphabet::new(9), Err(CensusError::MaskWidth(9))));
        assert!(Alphabet::new(8).is_ok());
    }

    #[test]
    fn mask_predicates_match_diagram_predicates() {
        let alpha = Alphabet::new(4).unwrap();
        // stride through the mask space for a broad, cheap sample
        for mask in (0..=0xffffu64).step_by(97) {
            let d = alpha.diagram_of(mask);
            assert_eq!(alpha.nc_mask(mask), alpha.mask_of(&d.nc()).unwrap(), "{mask:#x}");
            assert_eq!(alpha.is_noncrossing(mask), d.is_noncrossing(), "{mask:#x}");
            assert_eq!(alpha.is_torsion(mask), is_torsion_part(&d), "{mask:#x}");
            assert_eq!(alpha.is_ptolemy(mask), is_ptolemy(&d), "{mask:#x}");
        }
    }

    #[test]
    fn closure_is_monotone_idempotent_and_ptolemy() {
        let alpha = Alphabet::new(4).unwrap();
        for mask in (0..=0xffffu64).step_by(131) {
            let c = alpha.closure(mask);
            assert_eq!(c & mask, mask);
            assert_eq!(alpha.closure(c), c);
            assert!(alpha.is_ptolemy(c));
        }
    }

    #[test]
    fn core_is_noncrossing() {
        let alpha = Alphabet::new(4).unwrap();
        for mask in (0..=0xffffu64).step_by(113) {
            assert!(alpha.is_noncrossing(alpha.core_mask(mask)));
        }
    }
}
