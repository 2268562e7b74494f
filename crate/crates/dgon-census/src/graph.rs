//! Mutation graph over Ptolemy diagrams.
//!
//! Nodes are Ptolemy diagrams as masks; for every node X and every
//! subdiagram D of X ∩ nc(X) there are edges for both mutation
//! directions. Mutation is closed on the node set, so the graph is built
//! by frontier search from the seeds.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use dgon::mutation::{Direction, Mutator};

use crate::index::Alphabet;
use crate::CensusError;

#[derive(Serialize, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Edge {
    pub x: u64,
    pub d: u64,
    pub dir: Direction,
    pub x2: u64,
}

#[derive(Serialize, Debug)]
pub struct MutationGraph {
    pub n: u32,
    pub nodes: Vec<u64>,
    pub edges: Vec<Edge>,
}

impl MutationGraph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serializes")
    }
}

/// Element-index permutations realizing mutation at a fixed non-crossing
/// diagram; members map to themselves, elements outside nc(D) have no
/// image.
pub struct MaskMutator {
    plus: Vec<Option<u16>>,
    minus: Vec<Option<u16>>,
}

impl MaskMutator {
    pub fn new(alpha: &Alphabet, dmask: u64) -> Result<Self, CensusError> {
        let d = alpha.diagram_of(dmask);
        let m = Mutator::new(&d)?;
        let nc = alpha.nc_mask(dmask);
        let mut plus = vec![None; alpha.len()];
        let mut minus = vec![None; alpha.len()];
        for i in 0..alpha.len() {
            if nc & (1 << i) == 0 {
                continue;
            }
            let e = alpha.element(i);
            for (dir, slot) in [(Direction::Plus, &mut plus), (Direction::Minus, &mut minus)] {
                let image = m.mutate_element(&e, dir)?;
                let k = alpha.index_of(&image).expect("mutation stays in the alphabet");
                slot[i] = Some(k as u16);
            }
        }
        Ok(MaskMutator { plus, minus })
    }

    /// Image mask of `x`; requires x ⊆ nc(D), which holds for every
    /// Ptolemy diagram containing D.
    pub fn apply(&self, x: u64, dir: Direction) -> u64 {
        let map = match dir {
            Direction::Plus => &self.plus,
            Direction::Minus => &self.minus,
        };
        let mut out = 0;
        let mut bits = x;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            let k = map[i].expect("element lies in nc(D)");
            out |= 1u64 << k;
            bits &= bits - 1;
        }
        out
    }
}

/// Iterate all submasks of `mask`, including 0 and `mask` itself.
pub fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut cur = mask;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = cur;
        if cur == 0 {
            done = true;
        } else {
            cur = (cur - 1) & mask;
        }
        Some(out)
    })
}

/// Close the seed set under mutation in both directions over every
/// admissible subdiagram. Nodes ascending, edges sorted and deduplicated.
pub fn build_mutation_graph(alpha: &Alphabet, seeds: &[u64]) -> Result<MutationGraph, CensusError> {
    for &s in seeds {
        if !alpha.is_ptolemy(s) {
            return Err(CensusError::SeedNotPtolemy(s));
        }
    }
    let mut mutators: BTreeMap<u64, MaskMutator> = BTreeMap::new();
    let mut nodes: BTreeSet<u64> = seeds.iter().copied().collect();
    let mut edges: BTreeSet<Edge> = BTreeSet::new();
    let mut queue: VecDeque<u64> = nodes.iter().copied().collect();
    while let Some(x) = queue.pop_front() {
        let core = alpha.core_mask(x);
        for d in submasks(core) {
            let mm = match mutators.entry(d) {
                std::collections::btree_map::Entry::Occupied(e) => e.into_mut(),
                std::collections::btree_map::Entry::Vacant(e) => e.insert(MaskMutator::new(alpha, d)?),
            };
            for dir in [Direction::Plus, Direction::Minus] {
                let x2 = mm.apply(x, dir);
                debug_assert!(alpha.is_ptolemy(x2), "mutation preserves the hull axioms");
                edges.insert(Edge { x, d, dir, x2 });
                if nodes.insert(x2) {
                    queue.push_back(x2);
                }
            }
        }
    }
    Ok(MutationGraph {
        n: alpha.n(),
        nodes: nodes.into_iter().collect(),
        edges: edges.into_iter().collect(),
    })
}
