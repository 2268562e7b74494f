use thiserror::Error;

use crate::element::{ArcElement, ArcKind};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
#[error("rank mismatch: {0} vs {1}")]
pub struct RankMismatch(pub u32, pub u32);

/// Is `x` strictly inside the open anticlockwise interval `(a, b)`?
fn strictly_between(two_n: u32, a: u32, x: u32, b: u32) -> bool {
    let dx = (x + two_n - a) % two_n;
    let db = (b + two_n - a) % two_n;
    dx > 0 && dx < db
}

/// Do the chords `(i,j)` and `(k,l)` of the `2n`-gon cross in the interior
/// of the disc? Chords sharing an endpoint do not cross.
pub fn arcs_cross(two_n: u32, (i, j): (u32, u32), (k, l): (u32, u32)) -> bool {
    if i == k || i == l || j == k || j == l {
        return false;
    }
    strictly_between(two_n, i, k, j) != strictly_between(two_n, i, l, j)
}

/// The crossing number of two alphabet elements; equals the dimension of
/// the Ext^1 space between the corresponding indecomposables.
///
/// Pairs of arcs can cross twice (once per representative of the other
/// orbit); any configuration involving a diameter crosses at most once;
/// same-colored diameters never cross, differently-colored diameters cross
/// exactly when their chords differ.
pub fn crossing_count(e1: &ArcElement, e2: &ArcElement) -> Result<u8, RankMismatch> {
    if e1.n() != e2.n() {
        return Err(RankMismatch(e1.n(), e2.n()));
    }
    let n = e1.n();
    let two_n = 2 * n;
    Ok(match (e1.kind(), e2.kind()) {
        (ArcKind::Pair { .. }, ArcKind::Pair { .. }) => {
            // Counting one fixed representative of e1 against both
            // representatives of e2 counts every crossing of the orbits once.
            let r = e1.rep_chord();
            u8::from(arcs_cross(two_n, r, e2.rep_chord()))
                + u8::from(arcs_cross(two_n, r, e2.partner_chord()))
        }
        (ArcKind::Diameter { a, .. }, ArcKind::Pair { .. }) => {
            // A diameter chord is centrally symmetric, so it crosses either
            // both representatives of a pair or neither; count once.
            u8::from(arcs_cross(two_n, (a, a + n), e2.rep_chord()))
        }
        (ArcKind::Pair { .. }, ArcKind::Diameter { a, .. }) => {
            u8::from(arcs_cross(two_n, (a, a + n), e1.rep_chord()))
        }
        (ArcKind::Diameter { a: a1, color: c1 }, ArcKind::Diameter { a: a2, color: c2 }) => {
            if c1 == c2 || a1 == a2 {
                0
            } else {
                debug_assert!(arcs_cross(two_n, (a1, a1 + n), (a2, a2 + n)));
                1
            }
        }
    })
}
