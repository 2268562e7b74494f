//! Mutation of elements and diagrams at a non-crossing diagram `D`.
//!
//! An element of nc(D)∖D sits as a diagonal of a unique cell; mutation
//! rotates both diagonal endpoints one step through the cell's corners
//! and pulls the result back through the replacement map. Members of `D`
//! are fixed.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cells::{CellDecomposition, CellError, CellVertex, Location};
use crate::crossing::crossing_count;
use crate::diagram::{Diagram, DiagramError};
use crate::element::{ArcElement, ArcKind, Color};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, Debug)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// Rotate diagonal indices forward (+1).
    Plus,
    /// Rotate diagonal indices backward (−1); inverse of `Plus`.
    Minus,
}

impl Direction {
    pub fn opposite(self) -> Direction {
        match self {
            Direction::Plus => Direction::Minus,
            Direction::Minus => Direction::Plus,
        }
    }
}

#[derive(Error, Debug)]
pub enum MutationError {
    #[error(transparent)]
    Cells(#[from] CellError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("element {0} is not in nc of the mutating diagram")]
    OutsideNc(ArcElement),
}

/// Mutation at a fixed diagram; builds the cell decomposition once.
pub struct Mutator {
    cells: CellDecomposition,
}

impl Mutator {
    pub fn new(d: &Diagram) -> Result<Self, MutationError> {
        Ok(Mutator { cells: CellDecomposition::build(d)? })
    }

    pub fn cells(&self) -> &CellDecomposition {
        &self.cells
    }

    pub fn diagram(&self) -> &Diagram {
        self.cells.diagram()
    }

    pub fn mutate_element(&self, e: &ArcElement, dir: Direction) -> Result<ArcElement, MutationError> {
        let d = self.cells.diagram();
        if d.contains(e) {
            return Ok(*e);
        }
        let (pair, i, j) = match self.cells.locate(e)? {
            Location::InD => unreachable!("membership handled above"),
            Location::Diagonal { pair, i, j } => (pair, i, j),
        };
        let verts = pair.cell().verts();
        let k = verts.len();
        let (i2, j2) = match dir {
            Direction::Plus => ((i + 1) % k, (j + 1) % k),
            Direction::Minus => ((i + k - 1) % k, (j + k - 1) % k),
        };
        let out = self.pull_back(e, verts[i2], verts[j2]);
        debug_assert!(
            d.iter().all(|m| crossing_count(&out, m).expect("equal ranks") == 0),
            "mutation left nc(D)"
        );
        debug_assert!(!d.contains(&out), "mutation of a non-member hit D");
        Ok(out)
    }

    /// Element-wise mutation of `X ⊆ nc(D)`.
    pub fn mutate_diagram(&self, x: &Diagram, dir: Direction) -> Result<Diagram, MutationError> {
        let mut out = Diagram::empty(x.n());
        for e in x.iter() {
            out.insert(self.mutate_element(e, dir)?)?;
        }
        assert_eq!(out.len(), x.len(), "mutation is injective");
        Ok(out)
    }

    /// Classify the chord between two cell corners and pull it back to an
    /// alphabet element, applying the diameter color rules.
    fn pull_back(&self, e: &ArcElement, a: CellVertex, b: CellVertex) -> ArcElement {
        let n = self.cells.n();
        let two_n = 2 * n;
        match (a, b) {
            (CellVertex::Boundary(u), CellVertex::Boundary(v)) => {
                if (v + two_n - u) % two_n == n || (u + two_n - v) % two_n == n {
                    let a0 = u % n;
                    ArcElement::diameter(n, a0, self.diameter_color(e, a0))
                        .expect("valid diameter")
                } else {
                    ArcElement::pair(n, u, v).expect("mutation target is never an edge")
                }
            }
            (CellVertex::Boundary(u), CellVertex::Center)
            | (CellVertex::Center, CellVertex::Boundary(u)) => {
                let a0 = u % n;
                ArcElement::diameter(n, a0, self.diameter_color(e, a0)).expect("valid diameter")
            }
            (CellVertex::Center, CellVertex::Center) => {
                unreachable!("diagonal endpoints are distinct")
            }
        }
    }

    /// Color of a diameter image with chord (a0, a0+n):
    /// no diameters in D → flip the color of `e` (itself a diameter then);
    /// exactly one diameter in D → differ from it exactly on its own chord;
    /// several diameters in D (necessarily one color) → that color.
    fn diameter_color(&self, e: &ArcElement, a0: u32) -> Color {
        let d = self.cells.diagram();
        let diams: Vec<&ArcElement> = d.diameters().collect();
        match diams.len() {
            0 => e
                .color()
                .expect("with a diameter-free diagram only diameters map to diameters")
                .other(),
            1 => {
                let f = diams[0];
                let fc = f.color().expect("diameter has a color");
                let (fa, _) = f.rep_chord();
                if fa % self.cells.n() == a0 {
                    fc.other()
                } else {
                    fc
                }
            }
            _ => {
                let fc = diams[0].color().expect("diameter has a color");
                assert!(
                    diams.iter().all(|f| f.color() == Some(fc)),
                    "diameter image cannot arise when D keeps a chord in both colors"
                );
                fc
            }
        }
    }
}

/// Mutation of a single element at `D`.
pub fn mutate_element(
    d: &Diagram,
    e: &ArcElement,
    dir: Direction,
) -> Result<ArcElement, MutationError> {
    Mutator::new(d)?.mutate_element(e, dir)
}

/// Element-wise mutation of `X ⊆ nc(D)` at `D`.
pub fn mutate_diagram(d: &Diagram, x: &Diagram, dir: Direction) -> Result<Diagram, MutationError> {
    Mutator::new(d)?.mutate_diagram(x, dir)
}

/// Is `(X, X2)` a D-mutation pair, i.e. D ⊆ X2 ⊆ μ⁻_D(X) and
/// D ⊆ X ⊆ μ_D(X2)?
pub fn is_mutation_pair(d: &Diagram, x: &Diagram, x2: &Diagram) -> Result<bool, MutationError> {
    let m = Mutator::new(d)?;
    let down = m.mutate_diagram(x, Direction::Minus)?;
    let up = m.mutate_diagram(x2, Direction::Plus)?;
    Ok(d.is_subset(x2) && x2.is_subset(&down) && d.is_subset(x) && x.is_subset(&up))
}

/// The shift: rotate one step clockwise and flip diameter colors. Agrees
/// with mutation at the empty diagram in the `Minus` direction.
pub fn shift(e: &ArcElement) -> ArcElement {
    let moved = e.rotate(-1);
    match moved.kind() {
        ArcKind::Pair { .. } => moved,
        ArcKind::Diameter { color, .. } => moved.with_color(color.other()),
    }
}

/// Element-wise shift of a diagram; preserves crossing counts, so the
/// image of a non-crossing diagram is non-crossing.
pub fn shift_diagram(x: &Diagram) -> Diagram {
    let mut out = Diagram::empty(x.n());
    for e in x.iter() {
        out.insert(shift(e)).expect("shift preserves the rank");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::full_alphabet;
    use crate::element::Color;

    fn pair(a: u32, b: u32) -> ArcElement {
        ArcElement::pair(4, a, b).unwrap()
    }

    fn diam(a: u32, c: Color) -> ArcElement {
        ArcElement::diameter(4, a, c).unwrap()
    }

    #[test]
    fn empty_diagram_rotates_pairs() {
        let d = Diagram::empty(4);
        assert_eq!(mutate_element(&d, &pair(0, 2), Direction::Plus).unwrap(), pair(1, 3));
        assert_eq!(mutate_element(&d, &pair(0, 2), Direction::Minus).unwrap(), pair(1, 7));
    }

    #[test]
    fn empty_diagram_flips_diameter_colors() {
        let d = Diagram::empty(4);
        assert_eq!(
            mutate_element(&d, &diam(0, Color::Red), Direction::Plus).unwrap(),
            diam(1, Color::Green)
        );
    }

    #[test]
    fn one_diameter_color_rule() {
        let d = Diagram::from_elements(4, [diam(0, Color::Red)]).unwrap();
        let m = Mutator::new(&d).unwrap();
        // target chord is the diameter of D: color differs from it
        assert_eq!(
            m.mutate_element(&diam(1, Color::Red), Direction::Minus).unwrap(),
            diam(0, Color::Green)
        );
        assert_eq!(
            m.mutate_element(&diam(1, Color::Red), Direction::Plus).unwrap(),
            pair(0, 2)
        );
        // target chord differs from the diameter of D: color matches it
        assert_eq!(
            m.mutate_element(&pair(0, 2), Direction::Minus).unwrap(),
            diam(1, Color::Red)
        );
        // kept diameter: its image walks within the same half-disc
        assert_eq!(
            m.mutate_element(&diam(0, Color::Green), Direction::Minus).unwrap(),
            diam(3, Color::Red)
        );
    }

    #[test]
    fn members_are_fixed() {
        let d = Diagram::from_elements(4, [pair(1, 3), diam(0, Color::Red)]).unwrap();
        let m = Mutator::new(&d).unwrap();
        for e in d.iter() {
            assert_eq!(m.mutate_element(e, Direction::Plus).unwrap(), *e);
            assert_eq!(m.mutate_element(e, Direction::Minus).unwrap(), *e);
        }
    }

    #[test]
    fn rejects_elements_outside_nc() {
        let d = Diagram::from_elements(4, [diam(0, Color::Red)]).unwrap();
        assert!(mutate_element(&d, &diam(1, Color::Green), Direction::Plus).is_err());
    }

    #[test]
    fn plus_minus_round_trip_at_a_mixed_diagram() {
        let d = Diagram::from_elements(4, [diam(0, Color::Red), diam(2, Color::Red)]).unwrap();
        let m = Mutator::new(&d).unwrap();
        for e in d.nc().iter() {
            let up = m.mutate_element(e, Direction::Plus).unwrap();
            assert_eq!(m.mutate_element(&up, Direction::Minus).unwrap(), *e, "{e}");
            let down = m.mutate_element(e, Direction::Minus).unwrap();
            assert_eq!(m.mutate_element(&down, Direction::Plus).unwrap(), *e, "{e}");
        }
    }

    #[test]
    fn mutation_permutes_nc() {
        let d = Diagram::from_elements(4, [pair(1, 3)]).unwrap();
        let m = Mutator::new(&d).unwrap();
        let nc = d.nc();
        let image = m.mutate_diagram(&nc, Direction::Plus).unwrap();
        assert_eq!(image, nc);
    }

    #[test]
    fn shift_is_empty_minus_mutation() {
        let empty = Diagram::empty(4);
        let m = Mutator::new(&empty).unwrap();
        for e in full_alphabet(4).unwrap() {
            assert_eq!(shift(&e), m.mutate_element(&e, Direction::Minus).unwrap(), "{e}");
        }
    }

    #[test]
    fn shift_examples_and_order() {
        assert_eq!(shift(&pair(1, 3)), pair(0, 2));
        assert_eq!(shift(&diam(1, Color::Green)), diam(0, Color::Red));
        for e in full_alphabet(4).unwrap() {
            let mut cur = e;
            for _ in 0..8 {
                cur = shift(&cur);
            }
            assert_eq!(cur, e, "shift^2n is the identity at n=4");
        }
    }

    #[test]
    fn mutation_pair_examples() {
        let d = Diagram::from_elements(4, [pair(1, 3)]).unwrap();
        assert!(is_mutation_pair(&d, &d, &d).unwrap());
        let x = Diagram::from_elements(4, [pair(1, 3), pair(0, 3)]).unwrap();
        let x2 = mutate_diagram(&d, &x, Direction::Minus).unwrap();
        assert!(is_mutation_pair(&d, &x, &x2).unwrap());

        let empty = Diagram::empty(4);
        let single = Diagram::from_elements(4, [pair(0, 2)]).unwrap();
        assert!(!is_mutation_pair(&empty, &single, &single).unwrap());
    }

    #[test]
    fn color_change_on_diameter_images() {
        // wherever a diameter maps to a diameter, the colors differ
        for d in [
            Diagram::empty(4),
            Diagram::from_elements(4, [diam(0, Color::Red)]).unwrap(),
            Diagram::from_elements(4, [diam(0, Color::Red), diam(1, Color::Red)]).unwrap(),
        ] {
            let m = Mutator::new(&d).unwrap();
            for e in d.nc().iter().filter(|e| e.is_diameter() && !d.contains(e)) {
                for dir in [Direction::Plus, Direction::Minus] {
                    let img = m.mutate_element(e, dir).unwrap();
                    if img.is_diameter() {
                        assert_ne!(img.color(), e.color(), "{e} at {d}");
                    }
                }
            }
        }
    }
}
