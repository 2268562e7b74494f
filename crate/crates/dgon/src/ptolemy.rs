use std::collections::BTreeSet;
use std::fmt;

use crate::crossing::{arcs_cross, crossing_count};
use crate::diagram::Diagram;
use crate::element::{ArcElement, ArcKind, Color};

/// Which Ptolemy axiom a requirement or violation belongs to.
///
/// Pt1: two crossing pairs of arcs. Pt2: two crossing colored diameters.
/// Pt3: a diameter crossing a pair of arcs.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Axiom {
    Pt1,
    Pt2,
    Pt3,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Pt1 => "Pt1",
            Axiom::Pt2 => "Pt2",
            Axiom::Pt3 => "Pt3",
        })
    }
}

/// Elements that must all be present whenever the generating crossing is
/// present. Hull chords that degenerate to edges impose nothing and are
/// omitted.
#[derive(Clone, Debug)]
pub struct Requirement {
    pub axiom: Axiom,
    pub needed: Vec<ArcElement>,
}

#[derive(Clone, Debug)]
pub struct PtolemyViolation {
    pub axiom: Axiom,
    pub witnesses: (ArcElement, ArcElement),
    pub missing: Vec<ArcElement>,
}

impl fmt::Display for PtolemyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} violated by {} and {}; missing:",
            self.axiom, self.witnesses.0, self.witnesses.1
        )?;
        for m in &self.missing {
            write!(f, " {m}")?;
        }
        Ok(())
    }
}

/// The four hull chords of two crossing arcs: consecutive pairs of the four
/// endpoints in cyclic order.
fn hull_chords(c1: (u32, u32), c2: (u32, u32)) -> [(u32, u32); 4] {
    let mut vs = [c1.0, c1.1, c2.0, c2.1];
    vs.sort_unstable();
    [
        (vs[0], vs[1]),
        (vs[1], vs[2]),
        (vs[2], vs[3]),
        (vs[3], vs[0]),
    ]
}

fn classify_hull_chord(n: u32, (u, v): (u32, u32)) -> HullChord {
    let two_n = 2 * n;
    let gap = (v + two_n - u) % two_n;
    if gap == 1 || gap == two_n - 1 {
        HullChord::Edge
    } else if gap == n {
        HullChord::DiameterChord(u % n)
    } else {
        HullChord::Pair(ArcElement::pair(n, u, v).expect("hull chord is a valid pair"))
    }
}

enum HullChord {
    Edge,
    DiameterChord(u32),
    Pair(ArcElement),
}

/// All membership requirements generated by the crossing(s) of `e1` and
/// `e2`, one `Requirement` per crossing pair of representative arcs.
/// Returns an empty list when the elements do not cross.
pub fn requirements(e1: &ArcElement, e2: &ArcElement) -> Vec<Requirement> {
    let n = e1.n();
    debug_assert_eq!(n, e2.n());
    let two_n = 2 * n;
    let mut out = Vec::new();
    match (e1.kind(), e2.kind()) {
        (ArcKind::Pair { .. }, ArcKind::Pair { .. }) => {
            // One fixed representative of e1 against both representatives of
            // e2 exhausts the crossing instances up to π rotation, which
            // leaves every hull orbit unchanged.
            let r1 = e1.rep_chord();
            for r2 in [e2.rep_chord(), e2.partner_chord()] {
                if !arcs_cross(two_n, r1, r2) {
                    continue;
                }
                let mut needed = BTreeSet::new();
                for chord in hull_chords(r1, r2) {
                    match classify_hull_chord(n, chord) {
                        HullChord::Edge => {}
                        HullChord::DiameterChord(a) => {
                            // A hull diameter must be present in both colors.
                            needed.insert(ArcElement::diameter(n, a, Color::Red).unwrap());
                            needed.insert(ArcElement::diameter(n, a, Color::Green).unwrap());
                        }
                        HullChord::Pair(p) => {
                            needed.insert(p);
                        }
                    }
                }
                out.push(Requirement { axiom: Axiom::Pt1, needed: needed.into_iter().collect() });
            }
        }
        (ArcKind::Diameter { a: a1, color: c1 }, ArcKind::Diameter { a: a2, color: c2 }) => {
            if c1 == c2 || a1 == a2 {
                return out;
            }
            let mut needed = BTreeSet::new();
            for chord in hull_chords((a1, a1 + n), (a2, a2 + n)) {
                match classify_hull_chord(n, chord) {
                    HullChord::Edge => {}
                    HullChord::DiameterChord(_) => {
                        unreachable!("hull chords of crossing diameters are never diameters")
                    }
                    HullChord::Pair(p) => {
                        needed.insert(p);
                    }
                }
            }
            out.push(Requirement { axiom: Axiom::Pt2, needed: needed.into_iter().collect() });
        }
        (ArcKind::Diameter { a, color }, ArcKind::Pair { .. })
        | (ArcKind::Pair { .. }, ArcKind::Diameter { a, color }) => {
            let p = if e1.is_pair() { e1 } else { e2 };
            let rep = p.rep_chord();
            if !arcs_cross(two_n, (a, a + n), rep) {
                return out;
            }
            // Both crossing instances (the diameter against either
            // representative) have π-rotated hulls, hence the same orbits.
            let mut needed = BTreeSet::new();
            for chord in hull_chords((a, a + n), rep) {
                match classify_hull_chord(n, chord) {
                    HullChord::Edge => {}
                    HullChord::DiameterChord(_) => {
                        unreachable!("hull chords of a diameter crossing a pair are never diameters")
                    }
                    HullChord::Pair(h) => {
                        // Only the hull orbits not crossing the pair element
                        // are required.
                        if crossing_count(&h, p).expect("equal ranks") == 0 {
                            needed.insert(h);
                        }
                    }
                }
            }
            needed.insert(ArcElement::diameter(n, rep.0, color).unwrap());
            needed.insert(ArcElement::diameter(n, rep.1, color).unwrap());
            out.push(Requirement { axiom: Axiom::Pt3, needed: needed.into_iter().collect() });
        }
    }
    out
}

/// Check the Ptolemy axioms, returning the first violation in canonical
/// element order.
pub fn check_ptolemy(x: &Diagram) -> Result<(), PtolemyViolation> {
    let elems: Vec<&ArcElement> = x.iter().collect();
    for (i, e1) in elems.iter().enumerate() {
        for e2 in &elems[i + 1..] {
            for req in requirements(e1, e2) {
                let missing: Vec<ArcElement> =
                    req.needed.iter().filter(|m| !x.contains(m)).copied().collect();
                if !missing.is_empty() {
                    return Err(PtolemyViolation {
                        axiom: req.axiom,
                        witnesses: (**e1, **e2),
                        missing,
                    });
                }
            }
        }
    }
    Ok(())
}

pub fn is_ptolemy(x: &Diagram) -> bool {
    check_ptolemy(x).is_ok()
}

/// The independent oracle: `X` is a torsion part iff it is a fixed point of
/// `nc ∘ nc`.
pub fn is_torsion_part(x: &Diagram) -> bool {
    x.nc().nc() == *x
}
