//! Auslander-Reiten quiver coordinates and frames.
//!
//! Vertices `[i,j]` (and signed `[i,i+n]`) of the AR quiver biject with
//! the arc alphabet; starting and ending frames give an independent,
//! representation-side computation of extension middle terms, which the
//! cell-side mutation triangles must reproduce.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::cells::{CellVertex, Location};
use crate::crossing::crossing_count;
use crate::diagram::Diagram;
use crate::element::{ArcElement, ArcKind, Color};
use crate::mutation::{Direction, MutationError, Mutator};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn other(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

#[derive(Error, Debug)]
pub enum ArError {
    #[error("rank {0} is too small, need n >= 4")]
    Rank(u32),
    #[error("coordinates [{i},{j}] do not satisfy i+2 <= j <= i+n-1 at rank {n}")]
    BadPlain { n: u32, i: i64, j: i64 },
    #[error("vertex {0} is outside the cluster region")]
    NotCluster(ArVertex),
    #[error("vertex {0} is outside the module region")]
    NotModule(ArVertex),
    #[error("vertices {0} and {1} do not span a one-dimensional extension space")]
    ExtNotOneDim(ArVertex, ArVertex),
    #[error("element {0} is a member of the diagram")]
    InDiagram(ArcElement),
    #[error("cannot parse vertex from {0:?}")]
    Parse(String),
    #[error(transparent)]
    Mutation(#[from] MutationError),
}

/// A coordinate on the AR quiver. `Plain { i, j }` requires
/// `i+2 <= j <= i+n-1`; `Signed { i, sign }` stands for `[i, i+n]` with
/// one of the two exceptional labels.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ArCoord {
    Plain { i: i64, j: i64 },
    Signed { i: i64, sign: Sign },
}

/// A vertex of the AR quiver of rank `n`. The first coordinate is
/// unbounded in the derived category; the cluster category restricts it
/// to `0..n` and the module category to `0..n-1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ArVertex {
    n: u32,
    coord: ArCoord,
}

impl ArVertex {
    pub fn plain(n: u32, i: i64, j: i64) -> Result<Self, ArError> {
        if n < 4 {
            return Err(ArError::Rank(n));
        }
        if j < i + 2 || j > i + i64::from(n) - 1 {
            return Err(ArError::BadPlain { n, i, j });
        }
        Ok(ArVertex { n, coord: ArCoord::Plain { i, j } })
    }

    pub fn signed(n: u32, i: i64, sign: Sign) -> Result<Self, ArError> {
        if n < 4 {
            return Err(ArError::Rank(n));
        }
        Ok(ArVertex { n, coord: ArCoord::Signed { i, sign } })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn coord(&self) -> ArCoord {
        self.coord
    }

    fn first(&self) -> i64 {
        match self.coord {
            ArCoord::Plain { i, .. } | ArCoord::Signed { i, .. } => i,
        }
    }

    pub fn is_cluster(&self) -> bool {
        (0..i64::from(self.n)).contains(&self.first())
    }

    pub fn is_module(&self) -> bool {
        (0..i64::from(self.n) - 1).contains(&self.first())
    }

    /// Parse "[i,j]" or "[i,j]+" / "[i,j]-"; a trailing sign requires
    /// j = i+n.
    pub fn parse(n: u32, s: &str) -> Result<Self, ArError> {
        let t = s.trim();
        let err = || ArError::Parse(s.to_string());
        let rest = t.strip_prefix('[').ok_or_else(err)?;
        let (body, tail) = rest.split_once(']').ok_or_else(err)?;
        let (si, sj) = body.split_once(',').ok_or_else(err)?;
        let i: i64 = si.trim().parse().map_err(|_| err())?;
        let j: i64 = sj.trim().parse().map_err(|_| err())?;
        match tail.trim() {
            "" => ArVertex::plain(n, i, j),
            "+" => {
                if j != i + i64::from(n) {
                    return Err(err());
                }
                ArVertex::signed(n, i, Sign::Plus)
            }
            "-" => {
                if j != i + i64::from(n) {
                    return Err(err());
                }
                ArVertex::signed(n, i, Sign::Minus)
            }
            _ => Err(err()),
        }
    }
}

impl fmt::Display for ArVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.coord {
            ArCoord::Plain { i, j } => write!(f, "[{i},{j}]"),
            ArCoord::Signed { i, sign } => write!(f, "[{i},{}]{sign}", i + i64::from(self.n)),
        }
    }
}

/// The color of the signed vertex `[i, i+n]` under the bijection with
/// the alphabet: `+` is green at even `i`, red at odd `i`; `-` the other
/// way around.
fn signed_color(i: i64, sign: Sign) -> Color {
    let even = i.rem_euclid(2) == 0;
    match (sign, even) {
        (Sign::Plus, true) | (Sign::Minus, false) => Color::Green,
        (Sign::Plus, false) | (Sign::Minus, true) => Color::Red,
    }
}

fn color_sign(a: u32, color: Color) -> Sign {
    if signed_color(i64::from(a), Sign::Plus) == color {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// The bijection from cluster-region AR vertices to the alphabet.
pub fn b_map(v: &ArVertex) -> Result<ArcElement, ArError> {
    if !v.is_cluster() {
        return Err(ArError::NotCluster(*v));
    }
    let n = v.n;
    match v.coord {
        ArCoord::Plain { i, j } => {
            Ok(ArcElement::pair(n, i as u32, j as u32).expect("cluster coordinates form a chord"))
        }
        ArCoord::Signed { i, sign } => Ok(ArcElement::diameter(n, i as u32, signed_color(i, sign))
            .expect("cluster coordinate in range")),
    }
}

/// The inverse bijection; lands in the cluster region.
pub fn b_inv(e: &ArcElement) -> ArVertex {
    let n = e.n();
    match e.kind() {
        ArcKind::Pair { a, b } => {
            if b - a < n {
                ArVertex::plain(n, i64::from(a), i64::from(b)).expect("canonical pair coordinates")
            } else {
                ArVertex::plain(n, i64::from(b - n), i64::from(a + n))
                    .expect("partner chord coordinates")
            }
        }
        ArcKind::Diameter { a, color } => {
            ArVertex::signed(n, i64::from(a), color_sign(a, color)).expect("rank is valid")
        }
    }
}

/// The derived-category identification map whose orbits give the cluster
/// category: shift both coordinates by n; for signed vertices the sign
/// is kept at even n and flipped at odd n.
pub fn tau_inv_sigma(v: &ArVertex) -> ArVertex {
    let n = i64::from(v.n);
    match v.coord {
        ArCoord::Plain { i, j } => {
            ArVertex::plain(v.n, i + n, j + n).expect("translation preserves validity")
        }
        ArCoord::Signed { i, sign } => {
            let s = if v.n.is_multiple_of(2) { sign } else { sign.other() };
            ArVertex::signed(v.n, i + n, s).expect("translation preserves validity")
        }
    }
}

fn module_plain(n: u32, i: i64, j: i64) -> Option<ArVertex> {
    let v = ArVertex::plain(n, i, j).ok()?;
    v.is_module().then_some(v)
}

fn module_signed(n: u32, i: i64, sign: Sign) -> Option<ArVertex> {
    let v = ArVertex::signed(n, i, sign).ok()?;
    v.is_module().then_some(v)
}

/// All module vertices into which the module of `v` maps without factoring
/// through an irreducible map out of the row's end.
pub fn starting_frame(v: &ArVertex) -> Result<BTreeSet<ArVertex>, ArError> {
    if !v.is_module() {
        return Err(ArError::NotModule(*v));
    }
    let n = v.n;
    let nn = i64::from(n);
    let mut out = BTreeSet::new();
    match v.coord {
        ArCoord::Plain { i, j } => {
            for k in j..=i + nn - 1 {
                out.extend(module_plain(n, i, k));
            }
            out.extend(module_signed(n, i, Sign::Plus));
            out.extend(module_signed(n, i, Sign::Minus));
            for k in i..=j - 2 {
                out.extend(module_plain(n, k, j));
            }
            for k in j..=i + nn - 2 {
                out.extend(module_plain(n, k, i + nn));
            }
        }
        ArCoord::Signed { i, sign } => {
            for k in i + 1..=i + nn - 2 {
                out.extend(module_plain(n, k, i + nn));
            }
            for k in i..nn - 1 {
                let s = if (k - i).rem_euclid(2) == 0 { sign } else { sign.other() };
                out.extend(module_signed(n, k, s));
            }
        }
    }
    Ok(out)
}

/// All module vertices whose modules map into the module of `v` without
/// factoring through an irreducible map into the row's start.
pub fn ending_frame(v: &ArVertex) -> Result<BTreeSet<ArVertex>, ArError> {
    if !v.is_module() {
        return Err(ArError::NotModule(*v));
    }
    let n = v.n;
    let nn = i64::from(n);
    let mut out = BTreeSet::new();
    match v.coord {
        ArCoord::Plain { i, j } => {
            for k in i + 2..=j {
                out.extend(module_plain(n, i, k));
            }
            for k in j - nn + 1..=i {
                out.extend(module_plain(n, k, j));
            }
            out.extend(module_signed(n, j - nn, Sign::Plus));
            out.extend(module_signed(n, j - nn, Sign::Minus));
            for k in j - nn + 2..=i {
                out.extend(module_plain(n, j - nn, k));
            }
        }
        ArCoord::Signed { i, sign } => {
            for k in i + 2..i + nn {
                out.extend(module_plain(n, i, k));
            }
            for k in 0..=i {
                let s = if (i - k).rem_euclid(2) == 0 { sign } else { sign.other() };
                out.extend(module_signed(n, k, s));
            }
        }
    }
    Ok(out)
}

/// Middle summands of the unique non-trivial extension of the module of
/// `source` by the module of `target`: F_s(target) ∩ F_e(source).
/// Requires a one-dimensional extension space, checked as crossing
/// number one between the arc images.
pub fn middle_term(source: &ArVertex, target: &ArVertex) -> Result<BTreeSet<ArVertex>, ArError> {
    let es = b_map(source)?;
    let et = b_map(target)?;
    if crossing_count(&es, &et).map_err(|_| ArError::ExtNotOneDim(*source, *target))? != 1 {
        return Err(ArError::ExtNotOneDim(*source, *target));
    }
    let fs = starting_frame(target)?;
    let fe = ending_frame(source)?;
    Ok(fs.intersection(&fe).copied().collect())
}

/// One summand of a mutation triangle middle term; `Zero` marks a cell
/// side that is a polygon edge and contributes nothing.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum TriangleSummand {
    Zero,
    Element(ArcElement),
}

#[derive(Clone, Debug)]
pub struct MutationTriangle {
    pub first: ArcElement,
    pub summands: Vec<TriangleSummand>,
    pub third: ArcElement,
}

/// The distinguished triangle over the backward mutation of `e` at `D`:
/// first term `e`, middle summands read off the cell, third term
/// μ⁻_D(e). Every non-zero summand is a member of `D`.
pub fn mutation_triangle(d: &Diagram, e: &ArcElement) -> Result<MutationTriangle, ArError> {
    if d.contains(e) {
        return Err(ArError::InDiagram(*e));
    }
    let m = Mutator::new(d)?;
    let third = m.mutate_element(e, Direction::Minus)?;
    let (pair, i, j) = match m.cells().locate(e).map_err(MutationError::from)? {
        Location::InD => unreachable!("membership checked above"),
        Location::Diagonal { pair, i, j } => (pair, i, j),
    };
    let cell = pair.cell();
    let n = d.n();
    let summands = if e.is_diameter() && third.is_diameter() {
        // Both ends are diameters: the middle collapses to at most one
        // pair of arcs, spanned between the diagonal and the image chord.
        let a = match (cell.vertex(i), cell.vertex(j)) {
            (CellVertex::Boundary(u), _) => u,
            (CellVertex::Center, CellVertex::Boundary(u)) => u,
            (CellVertex::Center, CellVertex::Center) => unreachable!("diagonal is a chord"),
        };
        let b3 = match third.kind() {
            ArcKind::Diameter { a, .. } => a,
            ArcKind::Pair { .. } => unreachable!("branch requires a diameter"),
        };
        let dd = (b3 + n - a % n) % n;
        debug_assert_ne!(dd, 0, "backward mutation cannot fix a non-member");
        if dd == n - 1 {
            // the image is the shifted element and the middle vanishes;
            // edge sides keep their zero markers
            [cell.side_into(i), cell.side_into(j)]
                .iter()
                .filter(|s| matches!(s.realizes.as_slice(), [crate::cells::SideElement::Edge(_)]))
                .map(|_| TriangleSummand::Zero)
                .collect()
        } else {
            let two_n = 2 * n;
            let p = ArcElement::pair(n, (a + dd) % two_n, (a + n) % two_n)
                .expect("middle chord is a valid pair");
            debug_assert!(d.contains(&p), "middle summand must lie in D");
            vec![TriangleSummand::Element(p)]
        }
    } else {
        let mut out = Vec::new();
        for side in [cell.side_into(i), cell.side_into(j)] {
            for r in &side.realizes {
                match r {
                    crate::cells::SideElement::Edge(_) => out.push(TriangleSummand::Zero),
                    crate::cells::SideElement::Element(rep) => {
                        let src = rep.source();
                        debug_assert!(d.contains(&src), "middle summand must lie in D");
                        out.push(TriangleSummand::Element(src));
                    }
                }
            }
        }
        out
    };
    Ok(MutationTriangle { first: *e, summands, third })
}

/// How many shifts bring the located diagonal of `e` to start at vertex
/// 0, so that the instance matches the projective-based normal form.
pub fn reduction_shifts(d: &Diagram, e: &ArcElement) -> Result<u32, ArError> {
    let m = Mutator::new(d)?;
    let (pair, i, j) = match m.cells().locate(e).map_err(MutationError::from)? {
        Location::InD => return Err(ArError::InDiagram(*e)),
        Location::Diagonal { pair, i, j } => (pair, i, j),
    };
    let n = d.n();
    let two_n = 2 * n;
    Ok(match (pair.cell().vertex(i), pair.cell().vertex(j)) {
        (CellVertex::Boundary(u), CellVertex::Center)
        | (CellVertex::Center, CellVertex::Boundary(u)) => u,
        (CellVertex::Boundary(u), CellVertex::Boundary(v)) => {
            if (v + two_n - u) % two_n <= n {
                u
            } else {
                v
            }
        }
        (CellVertex::Center, CellVertex::Center) => unreachable!("diagonal is a chord"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::full_alphabet;
    use crate::mutation::shift;

    fn pair(a: u32, b: u32) -> ArcElement {
        ArcElement::pair(4, a, b).unwrap()
    }

    fn diam(a: u32, c: Color) -> ArcElement {
        ArcElement::diameter(4, a, c).unwrap()
    }

    fn pl(i: i64, j: i64) -> ArVertex {
        ArVertex::plain(4, i, j).unwrap()
    }

    fn sg(i: i64, s: Sign) -> ArVertex {
        ArVertex::signed(4, i, s).unwrap()
    }

    #[test]
    fn bijection_frozen_values() {
        assert_eq!(b_map(&pl(0, 2)).unwrap(), pair(0, 2));
        assert_eq!(b_map(&sg(0, Sign::Plus)).unwrap(), diam(0, Color::Green));
        assert_eq!(b_map(&sg(1, Sign::Plus)).unwrap(), diam(1, Color::Red));
        assert_eq!(b_map(&sg(2, Sign::Plus)).unwrap(), diam(2, Color::Green));
        assert_eq!(b_map(&sg(0, Sign::Minus)).unwrap(), diam(0, Color::Red));
    }

    #[test]
    fn bijection_round_trips() {
        for n in 4..=8 {
            for e in full_alphabet(n).unwrap() {
                let v = b_inv(&e);
                assert!(v.is_cluster(), "{e}");
                assert_eq!(b_map(&v).unwrap(), e, "{e}");
            }
        }
    }

    #[test]
    fn cluster_vertices_hit_whole_alphabet() {
        let mut seen = BTreeSet::new();
        for i in 0..4i64 {
            for j in i + 2..=i + 3 {
                seen.insert(b_map(&pl(i, j)).unwrap());
            }
            seen.insert(b_map(&sg(i, Sign::Plus)).unwrap());
            seen.insert(b_map(&sg(i, Sign::Minus)).unwrap());
        }
        assert_eq!(seen.len(), 16);
    }

    #[test]
    fn translation_examples() {
        assert_eq!(tau_inv_sigma(&pl(0, 2)), pl(4, 6));
        assert_eq!(tau_inv_sigma(&sg(0, Sign::Plus)), sg(4, Sign::Plus));
        let v5 = ArVertex::signed(5, 0, Sign::Plus).unwrap();
        assert_eq!(tau_inv_sigma(&v5), ArVertex::signed(5, 5, Sign::Minus).unwrap());
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(ArVertex::parse(4, "[0,2]").unwrap(), pl(0, 2));
        assert_eq!(ArVertex::parse(4, "[0,4]+").unwrap(), sg(0, Sign::Plus));
        assert_eq!(ArVertex::parse(4, "[3,7]-").unwrap(), sg(3, Sign::Minus));
        assert!(ArVertex::parse(4, "[0,3]+").is_err());
        assert!(ArVertex::parse(4, "[0,1]").is_err());
        for v in [pl(1, 4), sg(2, Sign::Minus)] {
            assert_eq!(ArVertex::parse(4, &v.to_string()).unwrap(), v);
        }
    }

    #[test]
    fn starting_frame_frozen() {
        let fs = starting_frame(&pl(0, 2)).unwrap();
        let expect: BTreeSet<ArVertex> =
            [pl(0, 2), pl(0, 3), sg(0, Sign::Plus), sg(0, Sign::Minus), pl(2, 4)]
                .into_iter()
                .collect();
        assert_eq!(fs, expect);
    }

    #[test]
    fn ending_frames_frozen() {
        let fe = ending_frame(&pl(0, 2)).unwrap();
        assert_eq!(fe, [pl(0, 2)].into_iter().collect());
        let fe13 = ending_frame(&pl(1, 3)).unwrap();
        assert_eq!(fe13, [pl(0, 3), pl(1, 3)].into_iter().collect());
    }

    #[test]
    fn signed_frames_frozen() {
        let fs = starting_frame(&sg(0, Sign::Minus)).unwrap();
        let expect: BTreeSet<ArVertex> =
            [pl(1, 4), pl(2, 4), sg(0, Sign::Minus), sg(2, Sign::Minus), sg(1, Sign::Plus)]
                .into_iter()
                .collect();
        assert_eq!(fs, expect);
        let fe = ending_frame(&sg(2, Sign::Plus)).unwrap();
        let expect_e: BTreeSet<ArVertex> =
            [pl(2, 4), pl(2, 5), sg(0, Sign::Plus), sg(2, Sign::Plus), sg(1, Sign::Minus)]
                .into_iter()
                .collect();
        assert_eq!(fe, expect_e);
    }

    #[test]
    fn signed_starting_frame_plain_members_share_the_end() {
        for i in 0..=2 {
            for s in [Sign::Plus, Sign::Minus] {
                for v in starting_frame(&sg(i, s)).unwrap() {
                    if let ArCoord::Plain { j, .. } = v.coord() {
                        assert_eq!(j, i + 4);
                    }
                }
            }
        }
    }

    #[test]
    fn middle_term_example() {
        let mid = middle_term(&pl(1, 3), &pl(0, 2)).unwrap();
        assert_eq!(mid, [pl(0, 3)].into_iter().collect());
        assert!(middle_term(&pl(0, 2), &pl(0, 2)).is_err());
    }

    #[test]
    fn triangle_pair_example() {
        let d = Diagram::from_elements(4, [pair(1, 3)]).unwrap();
        let t = mutation_triangle(&d, &pair(0, 3)).unwrap();
        assert_eq!(t.first, pair(0, 3));
        assert_eq!(t.third, pair(1, 7));
        assert_eq!(
            t.summands,
            vec![TriangleSummand::Zero, TriangleSummand::Element(pair(1, 3))]
        );
        assert_eq!(crossing_count(&t.first, &t.third).unwrap(), 1);
    }

    #[test]
    fn triangle_empty_diagram_gives_shift() {
        let d = Diagram::empty(4);
        for e in full_alphabet(4).unwrap() {
            let t = mutation_triangle(&d, &e).unwrap();
            assert_eq!(t.third, shift(&e), "{e}");
            assert_eq!(t.summands, vec![TriangleSummand::Zero, TriangleSummand::Zero], "{e}");
        }
    }

    #[test]
    fn triangle_both_diameters_nondegenerate() {
        let d = Diagram::from_elements(4, [pair(0, 6), diam(2, Color::Red)]).unwrap();
        let t = mutation_triangle(&d, &diam(0, Color::Red)).unwrap();
        assert_eq!(t.third, diam(2, Color::Green));
        assert_eq!(t.summands, vec![TriangleSummand::Element(pair(0, 6))]);
    }

    #[test]
    fn triangle_both_diameters_degenerate() {
        let d = Diagram::from_elements(4, [diam(0, Color::Red)]).unwrap();
        let t = mutation_triangle(&d, &diam(1, Color::Red)).unwrap();
        assert_eq!(t.third, diam(0, Color::Green));
        assert_eq!(t.summands, vec![TriangleSummand::Zero]);
    }

    #[test]
    fn triangle_rejects_members_and_crossers() {
        let d = Diagram::from_elements(4, [diam(0, Color::Red)]).unwrap();
        assert!(matches!(
            mutation_triangle(&d, &diam(0, Color::Red)),
            Err(ArError::InDiagram(_))
        ));
        assert!(mutation_triangle(&d, &diam(1, Color::Green)).is_err());
    }

    #[test]
    fn frame_oracle_matches_triangle_on_reduced_instances() {
        // the two hand-checked instances: a pair image and a diameter image
        let d1 = Diagram::from_elements(4, [pair(0, 3)]).unwrap();
        let t1 = mutation_triangle(&d1, &pair(0, 2)).unwrap();
        assert_eq!(t1.third, pair(1, 3));
        let mid1 = middle_term(&b_inv(&t1.third), &b_inv(&t1.first)).unwrap();
        let arcs1: BTreeSet<ArcElement> = mid1.iter().map(|v| b_map(v).unwrap()).collect();
        let nonzero1: BTreeSet<ArcElement> = t1
            .summands
            .iter()
            .filter_map(|s| match s {
                TriangleSummand::Element(e) => Some(*e),
                TriangleSummand::Zero => None,
            })
            .collect();
        assert_eq!(arcs1, nonzero1);

        let d2 = Diagram::from_elements(4, [pair(0, 6), diam(2, Color::Red)]).unwrap();
        let t2 = mutation_triangle(&d2, &diam(0, Color::Red)).unwrap();
        let mid2 = middle_term(&b_inv(&t2.third), &b_inv(&t2.first)).unwrap();
        let arcs2: BTreeSet<ArcElement> = mid2.iter().map(|v| b_map(v).unwrap()).collect();
        assert_eq!(arcs2, [pair(0, 6)].into_iter().collect());
    }

    #[test]
    fn reduction_shift_counts() {
        let d = Diagram::from_elements(4, [pair(1, 3)]).unwrap();
        // e = (0,3) locates with endpoint 0 already
        assert_eq!(reduction_shifts(&d, &pair(0, 3)).unwrap(), 0);
        // a diameter locates as a diagonal of the invariant cell
        let k = reduction_shifts(&d, &diam(0, Color::Red)).unwrap();
        assert!(k < 8);
    }
}
