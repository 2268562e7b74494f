//! Cutting the disc along a non-crossing diagram.
//!
//! A non-crossing diagram `D` cuts the disc of the `2n`-gon into convex
//! cells. Diameters without their differently-colored copy are first
//! replaced by a pair of radii through an added center vertex; the cells
//! are then traced by always taking the sharpest anticlockwise turn,
//! with all angle comparisons done in exact integer arithmetic.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::crossing::crossing_count;
use crate::diagram::Diagram;
use crate::element::{ArcElement, ArcKind, EdgePair};

#[derive(Error, Debug)]
pub enum CellError {
    #[error("diagram is not pairwise non-crossing: {0} crosses {1}")]
    NotNoncrossing(ArcElement, ArcElement),
    #[error("element {element} has rank {element_rank}, diagram has rank {diagram_rank}")]
    RankMismatch {
        element: ArcElement,
        element_rank: u32,
        diagram_rank: u32,
    },
    #[error("element {0} crosses the diagram")]
    OutsideNc(ArcElement),
}

/// A corner of a cell: a polygon vertex or the center of the disc.
///
/// The center only occurs when the diagram holds a diameter whose
/// differently-colored copy is absent.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CellVertex {
    Boundary(u32),
    Center,
}

impl fmt::Display for CellVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellVertex::Boundary(v) => write!(f, "{v}"),
            CellVertex::Center => f.write_str("c"),
        }
    }
}

/// The image of an alphabet element under the replacement map.
///
/// Every variant keeps its source element, so the map inverts by
/// [`ReplacedElement::source`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum ReplacedElement {
    /// Pairs of arcs are never replaced.
    PairOfArcs(ArcElement),
    /// A diameter kept as a full chord (its differently-colored copy is
    /// also in the diagram).
    Diameter(ArcElement),
    /// A diameter split into the radii (a,c) and (a+n,c) of its color.
    RadiiPair(ArcElement),
}

impl ReplacedElement {
    pub fn source(&self) -> ArcElement {
        match self {
            ReplacedElement::PairOfArcs(e)
            | ReplacedElement::Diameter(e)
            | ReplacedElement::RadiiPair(e) => *e,
        }
    }

    /// The chords this element draws in the disc.
    pub fn chords(&self) -> Vec<(CellVertex, CellVertex)> {
        use CellVertex::{Boundary, Center};
        match self {
            ReplacedElement::PairOfArcs(e) => {
                let (a, b) = e.rep_chord();
                let (a2, b2) = e.partner_chord();
                vec![(Boundary(a), Boundary(b)), (Boundary(a2), Boundary(b2))]
            }
            ReplacedElement::Diameter(e) => {
                let (a, b) = e.rep_chord();
                vec![(Boundary(a), Boundary(b))]
            }
            ReplacedElement::RadiiPair(e) => {
                let (a, b) = e.rep_chord();
                vec![(Boundary(a), Center), (Boundary(b), Center)]
            }
        }
    }
}

impl fmt::Display for ReplacedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReplacedElement::PairOfArcs(e) | ReplacedElement::Diameter(e) => write!(f, "{e}"),
            ReplacedElement::RadiiPair(e) => {
                let (a, b) = e.rep_chord();
                write!(f, "radii({a},{b},{})", e.color().expect("radii source is a diameter"))
            }
        }
    }
}

/// The replacement map of a fixed non-crossing diagram, defined on the
/// whole alphabet.
#[derive(Clone, Debug)]
pub struct Replacement {
    n: u32,
    diameter_free: bool,
    diameters_in_d: BTreeSet<ArcElement>,
}

impl Replacement {
    pub fn new(d: &Diagram) -> Result<Self, CellError> {
        if let Some((e1, e2)) = d.first_crossing() {
            return Err(CellError::NotNoncrossing(e1, e2));
        }
        Ok(Replacement {
            n: d.n(),
            diameter_free: d.diameters().next().is_none(),
            diameters_in_d: d.diameters().copied().collect(),
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Does the arrangement use the center vertex? True exactly when some
    /// diameter of the diagram lacks its differently-colored copy.
    pub fn center_active(&self) -> bool {
        self.diameters_in_d
            .iter()
            .any(|e| !self.diameters_in_d.contains(&e.with_color(e.color().unwrap().other())))
    }

    pub fn apply(&self, e: &ArcElement) -> ReplacedElement {
        match e.kind() {
            ArcKind::Pair { .. } => ReplacedElement::PairOfArcs(*e),
            ArcKind::Diameter { color, .. } => {
                if self.diameter_free {
                    return ReplacedElement::Diameter(*e);
                }
                let twin = e.with_color(color.other());
                if self.diameters_in_d.contains(&twin) {
                    ReplacedElement::Diameter(*e)
                } else {
                    ReplacedElement::RadiiPair(*e)
                }
            }
        }
    }
}

/// What a cell side realizes: a polygon edge or a drawn chord of the
/// replaced diagram. A full diameter chord kept in both colors carries
/// two entries.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum SideElement {
    Edge(EdgePair),
    Element(ReplacedElement),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Side {
    pub realizes: Vec<SideElement>,
}

/// One convex cell: vertices in anticlockwise order, rotated so the
/// smallest vertex comes first. `sides[i]` joins `verts[i]` to
/// `verts[(i+1) % k]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CellData {
    verts: Vec<CellVertex>,
    sides: Vec<Side>,
}

impl CellData {
    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn verts(&self) -> &[CellVertex] {
        &self.verts
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn vertex(&self, i: usize) -> CellVertex {
        self.verts[i % self.verts.len()]
    }

    /// The side arriving at `verts[i]`, i.e. from `verts[i-1]` to `verts[i]`.
    pub fn side_into(&self, i: usize) -> &Side {
        let k = self.verts.len();
        &self.sides[(i + k - 1) % k]
    }
}

impl fmt::Display for CellData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, v) in self.verts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ">")
    }
}

/// A cell together with its image under rotation by π (which fixes the
/// center). The two coincide exactly for the unique invariant cell of a
/// diameter-free diagram.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CellPair {
    cell: CellData,
    partner: CellData,
}

impl CellPair {
    pub fn cell(&self) -> &CellData {
        &self.cell
    }

    pub fn partner(&self) -> &CellData {
        &self.partner
    }

    pub fn is_invariant(&self) -> bool {
        self.cell.verts == self.partner.verts
    }
}

/// Exact angle at `at`, turning clockwise from the chord towards `prev`
/// to the chord towards `cand`, encoded as an ordinal in (0, 2n].
///
/// At a boundary vertex the ordinal counts half-units of π/n (the
/// inscribed angle); at the center it counts full units. The degenerate
/// back-track `cand == prev` encodes as 2n, so it is never the minimum
/// when any other candidate exists.
///
/// Panics on `prev == at` or `cand == at`.
pub fn angle_rank(n: u32, prev: CellVertex, at: CellVertex, cand: CellVertex) -> u32 {
    assert!(prev != at && cand != at, "degenerate angle at {at}");
    let two_n = 2 * n;
    let dir = |to: CellVertex| -> u32 {
        match (at, to) {
            (CellVertex::Boundary(y), CellVertex::Boundary(z)) => (z + two_n - y) % two_n,
            (CellVertex::Boundary(_), CellVertex::Center) => n,
            (CellVertex::Center, CellVertex::Boundary(z)) => z,
            (CellVertex::Center, CellVertex::Center) => unreachable!("both ends at the center"),
        }
    };
    (dir(prev) + two_n - dir(cand) - 1) % two_n + 1
}

/// Interior angle in half-units of π/n, uniform across vertex kinds:
/// π itself measures as 2n.
fn angle_halfunits(n: u32, prev: CellVertex, at: CellVertex, cand: CellVertex) -> u32 {
    let r = angle_rank(n, prev, at, cand);
    match at {
        CellVertex::Boundary(_) => r,
        CellVertex::Center => 2 * r,
    }
}

/// The result of looking up an element inside a cell decomposition.
#[derive(Clone, Copy, Debug)]
pub enum Location<'a> {
    /// Members of the diagram are sides of cells, not diagonals.
    InD,
    /// The element's replacement is the diagonal from `verts[i]` to
    /// `verts[j]` of the canonical cell of `pair`, with `i < j`
    /// non-adjacent cyclically.
    Diagonal {
        pair: &'a CellPair,
        i: usize,
        j: usize,
    },
}

/// The full set of cells of a non-crossing diagram.
#[derive(Clone, Debug)]
pub struct CellDecomposition {
    d: Diagram,
    replacement: Replacement,
    pairs: Vec<CellPair>,
}

impl CellDecomposition {
    pub fn build(d: &Diagram) -> Result<Self, CellError> {
        let replacement = Replacement::new(d)?;
        let n = d.n();
        let two_n = 2 * n;

        // Drawn chords and what realizes them. Edges are realized only by
        // edge pairs; a kept diameter chord is realized by both colors.
        let mut realizes: BTreeMap<(CellVertex, CellVertex), Vec<SideElement>> = BTreeMap::new();
        for v in 0..two_n {
            let key = chord_key(CellVertex::Boundary(v), CellVertex::Boundary((v + 1) % two_n));
            realizes
                .entry(key)
                .or_default()
                .push(SideElement::Edge(EdgePair::new(n, v).expect("edge vertex in range")));
        }
        for e in d.iter() {
            let replaced = replacement.apply(e);
            for (u, v) in replaced.chords() {
                realizes.entry(chord_key(u, v)).or_default().push(SideElement::Element(replaced));
            }
        }

        let mut neighbors: BTreeMap<CellVertex, BTreeSet<CellVertex>> = BTreeMap::new();
        for &(u, v) in realizes.keys() {
            neighbors.entry(u).or_default().insert(v);
            neighbors.entry(v).or_default().insert(u);
        }
        if cfg!(debug_assertions) {
            // No two chords at a vertex may share a direction; in
            // particular a full diameter chord at y and the radius (y,c)
            // cannot coexist in a non-crossing arrangement.
            for (&at, nbrs) in &neighbors {
                let mut dirs = BTreeSet::new();
                for &to in nbrs {
                    let d0 = match (at, to) {
                        (CellVertex::Boundary(y), CellVertex::Boundary(z)) => {
                            (z + two_n - y) % two_n
                        }
                        (CellVertex::Boundary(_), CellVertex::Center) => n,
                        (CellVertex::Center, CellVertex::Boundary(z)) => z,
                        _ => unreachable!(),
                    };
                    assert!(dirs.insert(d0), "direction clash at {at}");
                }
            }
        }

        let directed: Vec<(CellVertex, CellVertex)> = realizes
            .keys()
            .flat_map(|&(u, v)| [(u, v), (v, u)])
            .collect();

        let mut visited: BTreeSet<(CellVertex, CellVertex)> = BTreeSet::new();
        let mut cells: Vec<CellData> = Vec::new();
        let mut kept_sides: Vec<(CellVertex, CellVertex)> = Vec::new();
        for &seed in &directed {
            if visited.contains(&seed) {
                continue;
            }
            let trace = walk(n, &neighbors, seed, directed.len());
            for &s in &trace {
                let fresh = visited.insert(s);
                assert!(fresh, "directed side traced twice");
            }
            let k = trace.len();
            let verts: Vec<CellVertex> = trace.iter().map(|&(from, _)| from).collect();
            // Orientation: interior cells have angle sum (k-2)·π, i.e.
            // (k-2)·2n in half-units; the single exterior trace fails this.
            let mut sum = 0u64;
            for i in 0..k {
                let prev = verts[(i + k - 1) % k];
                let at = verts[i];
                let next = verts[(i + 1) % k];
                sum += u64::from(angle_halfunits(n, prev, at, next));
            }
            if sum != (k as u64 - 2) * u64::from(two_n) {
                continue;
            }
            // Convexity holds for every kept cell; at the center the raw
            // rank bound is n, which also rules out consecutive v, c, v+1.
            for i in 0..k {
                let prev = verts[(i + k - 1) % k];
                let at = verts[i];
                let next = verts[(i + 1) % k];
                assert!(
                    angle_halfunits(n, prev, at, next) <= two_n,
                    "reflex interior angle at {at}"
                );
                if let (CellVertex::Boundary(p), CellVertex::Center, CellVertex::Boundary(q)) =
                    (prev, at, next)
                {
                    assert!((p + 1) % two_n != q, "consecutive v, c, v+1 in a cell");
                }
            }
            assert_eq!(
                verts.iter().collect::<BTreeSet<_>>().len(),
                k,
                "cell revisits a vertex"
            );
            kept_sides.extend(&trace);
            cells.push(normalize_cell(verts, &realizes));
        }

        // Every drawn chord is consumed once per direction and every
        // boundary edge once, anticlockwise; this pins the walk globally.
        let mut expected: BTreeSet<(CellVertex, CellVertex)> = BTreeSet::new();
        for &(u, v) in realizes.keys() {
            let is_edge = matches!(
                (u, v),
                (CellVertex::Boundary(a), CellVertex::Boundary(b))
                    if (b + two_n - a) % two_n == 1 || (a + two_n - b) % two_n == 1
            );
            if is_edge {
                let (CellVertex::Boundary(a), CellVertex::Boundary(b)) = (u, v) else {
                    unreachable!()
                };
                if (b + two_n - a) % two_n == 1 {
                    expected.insert((u, v));
                } else {
                    expected.insert((v, u));
                }
            } else {
                expected.insert((u, v));
                expected.insert((v, u));
            }
        }
        let got: BTreeSet<(CellVertex, CellVertex)> = kept_sides.iter().copied().collect();
        assert_eq!(got.len(), kept_sides.len(), "kept cells reuse a directed side");
        assert_eq!(got, expected, "kept cells do not tile the disc");

        cells.sort_by(|a, b| a.verts.cmp(&b.verts));
        let mut by_verts: BTreeMap<Vec<CellVertex>, CellData> =
            cells.into_iter().map(|c| (c.verts.clone(), c)).collect();
        let mut pairs = Vec::new();
        while let Some((verts, cell)) = by_verts.pop_first() {
            let rotated = rotate_verts(&verts, n);
            if rotated == verts {
                pairs.push(CellPair { partner: cell.clone(), cell });
            } else {
                let partner = by_verts
                    .remove(&rotated)
                    .expect("every cell has its π-image among the cells");
                pairs.push(CellPair { cell, partner });
            }
        }
        Ok(CellDecomposition { d: d.clone(), replacement, pairs })
    }

    pub fn n(&self) -> u32 {
        self.d.n()
    }

    pub fn diagram(&self) -> &Diagram {
        &self.d
    }

    pub fn replacement(&self) -> &Replacement {
        &self.replacement
    }

    pub fn pairs(&self) -> &[CellPair] {
        &self.pairs
    }

    /// Find the element as a diagonal of its unique containing cell pair,
    /// or report that it is a side (member of the diagram).
    pub fn locate(&self, e: &ArcElement) -> Result<Location<'_>, CellError> {
        let all = self.locate_all(e)?;
        match all {
            LocateResult::InD => Ok(Location::InD),
            LocateResult::Diagonals(v) => {
                debug_assert_eq!(v.len(), 1, "element contained in {} cell pairs", v.len());
                let (pair_idx, i, j) = *v.first().expect("containment theorem");
                Ok(Location::Diagonal { pair: &self.pairs[pair_idx], i, j })
            }
        }
    }

    /// All containing cell pairs; the containment theorem says there is
    /// exactly one, which the census sweeps verify explicitly.
    pub fn locate_all(&self, e: &ArcElement) -> Result<LocateResult, CellError> {
        if e.n() != self.d.n() {
            return Err(CellError::RankMismatch {
                element: *e,
                element_rank: e.n(),
                diagram_rank: self.d.n(),
            });
        }
        for m in self.d.iter() {
            if crossing_count(e, m).expect("equal ranks") > 0 {
                return Err(CellError::OutsideNc(*e));
            }
        }
        if self.d.contains(e) {
            return Ok(LocateResult::InD);
        }
        let chords = self.replacement.apply(e).chords();
        let mut found = Vec::new();
        for (pair_idx, pair) in self.pairs.iter().enumerate() {
            'chords: for &(u, v) in &chords {
                let verts = pair.cell.verts();
                let k = verts.len();
                let Some(i) = verts.iter().position(|&x| x == u) else { continue };
                let Some(j) = verts.iter().position(|&x| x == v) else { continue };
                let (i, j) = (i.min(j), i.max(j));
                if j - i == 1 || j - i == k - 1 {
                    continue;
                }
                found.push((pair_idx, i, j));
                break 'chords;
            }
        }
        Ok(LocateResult::Diagonals(found))
    }
}

#[derive(Clone, Debug)]
pub enum LocateResult {
    InD,
    /// (index into pairs, i, j) per containing pair.
    Diagonals(Vec<(usize, usize, usize)>),
}

fn chord_key(u: CellVertex, v: CellVertex) -> (CellVertex, CellVertex) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

fn rotate_verts(verts: &[CellVertex], n: u32) -> Vec<CellVertex> {
    let two_n = 2 * n;
    let mut rotated: Vec<CellVertex> = verts
        .iter()
        .map(|&v| match v {
            CellVertex::Boundary(x) => CellVertex::Boundary((x + n) % two_n),
            CellVertex::Center => CellVertex::Center,
        })
        .collect();
    let min_pos = rotated
        .iter()
        .enumerate()
        .min_by_key(|&(_, v)| *v)
        .map(|(i, _)| i)
        .expect("cell has vertices");
    rotated.rotate_left(min_pos);
    rotated
}

fn normalize_cell(
    mut verts: Vec<CellVertex>,
    realizes: &BTreeMap<(CellVertex, CellVertex), Vec<SideElement>>,
) -> CellData {
    // cell vertices are distinct, so the smallest vertex picks a unique
    // starting point of the cyclic order
    let min_pos = verts
        .iter()
        .enumerate()
        .min_by_key(|&(_, v)| *v)
        .map(|(i, _)| i)
        .expect("cell has vertices");
    verts.rotate_left(min_pos);
    let k = verts.len();
    let sides = (0..k)
        .map(|i| Side {
            realizes: realizes[&chord_key(verts[i], verts[(i + 1) % k])].clone(),
        })
        .collect();
    CellData { verts, sides }
}

/// Trace one cell: from each directed side take the candidate with the
/// sharpest clockwise turn (smallest angle rank) until the seed side
/// recurs. Angle ranks at a fixed corner are injective, so the minimum
/// is unique.
fn walk(
    n: u32,
    neighbors: &BTreeMap<CellVertex, BTreeSet<CellVertex>>,
    seed: (CellVertex, CellVertex),
    bound: usize,
) -> Vec<(CellVertex, CellVertex)> {
    let mut sides = vec![seed];
    let (mut prev, mut cur) = seed;
    loop {
        let next = neighbors[&cur]
            .iter()
            .copied()
            .min_by_key(|&cand| angle_rank(n, prev, cur, cand))
            .expect("every corner has a neighbor");
        if (cur, next) == seed {
            return sides;
        }
        sides.push((cur, next));
        assert!(sides.len() <= bound, "cell walk failed to close");
        prev = cur;
        cur = next;
    }
}
