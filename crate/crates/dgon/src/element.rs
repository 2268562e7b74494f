use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Color of a diameter (or of a pair of radii after replacement).
///
/// Every diameter chord of the `2n`-gon carries two distinct elements, one
/// per color. Same-colored diameters never cross; differently-colored
/// diameters on distinct chords always cross once.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Green,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Green,
            Color::Green => Color::Red,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Green => "green",
        })
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ElementError {
    #[error("rank {0} is too small, need n >= 4")]
    RankTooSmall(u32),
    #[error("vertex {vertex} out of range for a {gon}-gon")]
    OutOfRange { vertex: u32, gon: u32 },
    #[error("chord ({a},{b}) is degenerate")]
    Degenerate { a: u32, b: u32 },
    #[error("chord ({a},{b}) is an edge; pairs of edges are not alphabet elements")]
    Edge { a: u32, b: u32 },
    #[error("chord ({a},{b}) is a diameter; construct a colored diameter instead")]
    DiameterChord { a: u32, b: u32 },
}

/// The shape of an alphabet element.
///
/// `Pair { a, b }` stores the canonical representative of the orbit
/// `{(a,b), (a+n,b+n)}`: the member containing the smallest vertex of the
/// four, with `a < b`. `Diameter` stores the canonical chord coordinate
/// `0 <= a < n`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ArcKind {
    Pair { a: u32, b: u32 },
    Diameter { a: u32, color: Color },
}

/// An element of the arc alphabet of the `2n`-gon.
///
/// Elements are π-rotation orbits: a pair of centrally symmetric non-edge,
/// non-diameter arcs, or a colored diameter. The rank `n` is carried so
/// elements are self-contained values.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ArcElement {
    n: u32,
    kind: ArcKind,
}

impl ArcElement {
    /// A pair of arcs from any representative chord `(i, j)`.
    pub fn pair(n: u32, i: u32, j: u32) -> Result<Self, ElementError> {
        check_rank(n)?;
        let two_n = 2 * n;
        for v in [i, j] {
            if v >= two_n {
                return Err(ElementError::OutOfRange { vertex: v, gon: two_n });
            }
        }
        if i == j {
            return Err(ElementError::Degenerate { a: i, b: j });
        }
        let gap = (j + two_n - i) % two_n;
        if gap == 1 || gap == two_n - 1 {
            return Err(ElementError::Edge { a: i, b: j });
        }
        if gap == n {
            return Err(ElementError::DiameterChord { a: i, b: j });
        }
        let (a, b) = canonical_pair(n, i, j);
        Ok(ArcElement { n, kind: ArcKind::Pair { a, b } })
    }

    /// A colored diameter from any chord coordinate `0 <= a < 2n`.
    pub fn diameter(n: u32, a: u32, color: Color) -> Result<Self, ElementError> {
        check_rank(n)?;
        if a >= 2 * n {
            return Err(ElementError::OutOfRange { vertex: a, gon: 2 * n });
        }
        Ok(ArcElement { n, kind: ArcKind::Diameter { a: a % n, color } })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn kind(&self) -> ArcKind {
        self.kind
    }

    pub fn is_pair(&self) -> bool {
        matches!(self.kind, ArcKind::Pair { .. })
    }

    pub fn is_diameter(&self) -> bool {
        matches!(self.kind, ArcKind::Diameter { .. })
    }

    pub fn color(&self) -> Option<Color> {
        match self.kind {
            ArcKind::Diameter { color, .. } => Some(color),
            ArcKind::Pair { .. } => None,
        }
    }

    /// The stored representative chord: `(a, b)` for pairs, `(a, a+n)` for
    /// diameters.
    pub fn rep_chord(&self) -> (u32, u32) {
        match self.kind {
            ArcKind::Pair { a, b } => (a, b),
            ArcKind::Diameter { a, .. } => (a, a + self.n),
        }
    }

    /// The centrally symmetric partner of the representative chord. For a
    /// diameter this is the representative itself (as a vertex set).
    pub fn partner_chord(&self) -> (u32, u32) {
        let two_n = 2 * self.n;
        match self.kind {
            ArcKind::Pair { a, b } => ((a + self.n) % two_n, (b + self.n) % two_n),
            ArcKind::Diameter { a, .. } => (a, a + self.n),
        }
    }

    /// Rotate all vertices by `k` steps anticlockwise; colors are preserved.
    pub fn rotate(&self, k: i64) -> Self {
        let two_n = 2 * self.n as i64;
        let shift = |v: u32| -> u32 { ((v as i64 + k).rem_euclid(two_n)) as u32 };
        match self.kind {
            ArcKind::Pair { a, b } => {
                let (a, b) = canonical_pair(self.n, shift(a), shift(b));
                ArcElement { n: self.n, kind: ArcKind::Pair { a, b } }
            }
            ArcKind::Diameter { a, color } => ArcElement {
                n: self.n,
                kind: ArcKind::Diameter { a: shift(a) % self.n, color },
            },
        }
    }

    /// Same element with the diameter color replaced; identity on pairs.
    pub fn with_color(&self, color: Color) -> Self {
        match self.kind {
            ArcKind::Pair { .. } => *self,
            ArcKind::Diameter { a, .. } => {
                ArcElement { n: self.n, kind: ArcKind::Diameter { a, color } }
            }
        }
    }
}

impl fmt::Display for ArcElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ArcKind::Pair { a, b } => write!(f, "pair({a},{b})"),
            ArcKind::Diameter { a, color } => write!(f, "diameter({a},{color})"),
        }
    }
}

/// An orbit of polygon edges `{(a,a+1), (a+n,a+n+1)}`, canonical `0 <= a < n`.
///
/// Edge pairs are not alphabet elements; they only appear in Ptolemy hull
/// membership and as zero markers for cell sides.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgePair {
    n: u32,
    a: u32,
}

impl EdgePair {
    /// The edge orbit containing the edge starting at vertex `v`.
    pub fn new(n: u32, v: u32) -> Result<Self, ElementError> {
        check_rank(n)?;
        if v >= 2 * n {
            return Err(ElementError::OutOfRange { vertex: v, gon: 2 * n });
        }
        Ok(EdgePair { n, a: v % n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn a(&self) -> u32 {
        self.a
    }
}

impl fmt::Display for EdgePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "edge({},{})", self.a, self.a + 1)
    }
}

fn check_rank(n: u32) -> Result<(), ElementError> {
    if n < 4 {
        Err(ElementError::RankTooSmall(n))
    } else {
        Ok(())
    }
}

/// Canonical representative of the pair orbit `{(i,j), (i+n,j+n)}`: the
/// member containing the minimal vertex of the four, endpoints sorted.
fn canonical_pair(n: u32, i: u32, j: u32) -> (u32, u32) {
    let two_n = 2 * n;
    let (p, q) = if i < j { (i, j) } else { (j, i) };
    let (r, s) = {
        let r = (p + n) % two_n;
        let s = (q + n) % two_n;
        if r < s {
            (r, s)
        } else {
            (s, r)
        }
    };
    // The orbit minimum sits in exactly one representative: p and r = p±n
    // cannot both be the minimum.
    if p.min(q) <= r.min(s) {
        (p, q)
    } else {
        (r, s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_canonicalizes_to_orbit_member_with_min_vertex() {
        let n = 4;
        let e = ArcElement::pair(n, 2, 4).unwrap();
        assert_eq!(e.rep_chord(), (0, 6));
        let e2 = ArcElement::pair(n, 6, 0).unwrap();
        assert_eq!(e, e2);
        let e3 = ArcElement::pair(n, 0, 2).unwrap();
        assert_eq!(e3.rep_chord(), (0, 2));
        assert_eq!(e3.partner_chord(), (4, 6));
    }

    #[test]
    fn pair_rejects_edges_diameters_degenerate() {
        assert_eq!(
            ArcElement::pair(4, 3, 4).unwrap_err(),
            ElementError::Edge { a: 3, b: 4 }
        );
        assert_eq!(
            ArcElement::pair(4, 0, 7).unwrap_err(),
            ElementError::Edge { a: 0, b: 7 }
        );
        assert_eq!(
            ArcElement::pair(4, 1, 5).unwrap_err(),
            ElementError::DiameterChord { a: 1, b: 5 }
        );
        assert_eq!(
            ArcElement::pair(4, 3, 3).unwrap_err(),
            ElementError::Degenerate { a: 3, b: 3 }
        );
        assert_eq!(
            ArcElement::pair(4, 0, 8).unwrap_err(),
            ElementError::OutOfRange { vertex: 8, gon: 8 }
        );
    }

    #[test]
    fn diameter_canonicalizes_mod_n() {
        let d = ArcElement::diameter(4, 6, Color::Red).unwrap();
        assert_eq!(d.rep_chord(), (2, 6));
        assert_eq!(d.color(), Some(Color::Red));
        assert_ne!(
            ArcElement::diameter(4, 2, Color::Red).unwrap(),
            ArcElement::diameter(4, 2, Color::Green).unwrap()
        );
    }

    #[test]
    fn rotate_moves_vertices_and_keeps_color() {
        let e = ArcElement::pair(4, 0, 2).unwrap();
        assert_eq!(e.rotate(1), ArcElement::pair(4, 1, 3).unwrap());
        assert_eq!(e.rotate(8), e);
        assert_eq!(e.rotate(4), e); // π rotation fixes orbits
        let d = ArcElement::diameter(4, 0, Color::Green).unwrap();
        assert_eq!(d.rotate(-1), ArcElement::diameter(4, 3, Color::Green).unwrap());
    }

    #[test]
    fn edge_pair_canonical() {
        let e = EdgePair::new(4, 6).unwrap();
        assert_eq!(e.a(), 2);
        assert_eq!(e, EdgePair::new(4, 2).unwrap());
    }
}
