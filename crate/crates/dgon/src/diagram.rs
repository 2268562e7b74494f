use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::crossing::crossing_count;
use crate::element::{ArcElement, ArcKind, Color, ElementError};

#[derive(Error, Debug)]
pub enum DiagramError {
    #[error(transparent)]
    Element(#[from] ElementError),
    #[error("element {element} has rank {element_rank}, diagram has rank {diagram_rank}")]
    RankMismatch {
        element: ArcElement,
        element_rank: u32,
        diagram_rank: u32,
    },
    #[error("duplicate element {0} after canonicalization")]
    Duplicate(ArcElement),
    #[error("diagram is not pairwise non-crossing: {0} crosses {1}")]
    NotNoncrossing(ArcElement, ArcElement),
    #[error("invalid diagram JSON: {0}")]
    Json(#[from] serde_json::Error),
}

/// A set of alphabet elements of a fixed rank.
///
/// Diagrams are automatically invariant under π rotation because their
/// members are orbits.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Diagram {
    n: u32,
    elements: BTreeSet<ArcElement>,
}

impl Diagram {
    pub fn empty(n: u32) -> Self {
        Diagram { n, elements: BTreeSet::new() }
    }

    pub fn from_elements<I>(n: u32, iter: I) -> Result<Self, DiagramError>
    where
        I: IntoIterator<Item = ArcElement>,
    {
        let mut d = Diagram::empty(n);
        for e in iter {
            d.insert(e)?;
        }
        Ok(d)
    }

    /// Insert an element; duplicates are not an error here (set semantics).
    pub fn insert(&mut self, e: ArcElement) -> Result<bool, DiagramError> {
        if e.n() != self.n {
            return Err(DiagramError::RankMismatch {
                element: e,
                element_rank: e.n(),
                diagram_rank: self.n,
            });
        }
        Ok(self.elements.insert(e))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, e: &ArcElement) -> bool {
        self.elements.contains(e)
    }

    pub fn remove(&mut self, e: &ArcElement) -> bool {
        self.elements.remove(e)
    }

    pub fn iter(&self) -> impl Iterator<Item = &ArcElement> {
        self.elements.iter()
    }

    pub fn is_subset(&self, other: &Diagram) -> bool {
        self.n == other.n && self.elements.is_subset(&other.elements)
    }

    /// All elements crossing no element of `self`.
    pub fn nc(&self) -> Diagram {
        let mut out = Diagram::empty(self.n);
        for cand in full_alphabet(self.n).expect("diagram rank is valid") {
            let free = self
                .elements
                .iter()
                .all(|e| crossing_count(&cand, e).expect("equal ranks") == 0);
            if free {
                out.elements.insert(cand);
            }
        }
        out
    }

    /// Are the members pairwise non-crossing?
    pub fn is_noncrossing(&self) -> bool {
        self.first_crossing().is_none()
    }

    pub(crate) fn first_crossing(&self) -> Option<(ArcElement, ArcElement)> {
        let v: Vec<&ArcElement> = self.elements.iter().collect();
        for (idx, e1) in v.iter().enumerate() {
            for e2 in &v[idx + 1..] {
                if crossing_count(e1, e2).expect("equal ranks") > 0 {
                    return Some((**e1, **e2));
                }
            }
        }
        None
    }

    /// Rotate every element by `k` vertices anticlockwise.
    pub fn rotate(&self, k: i64) -> Diagram {
        Diagram {
            n: self.n,
            elements: self.elements.iter().map(|e| e.rotate(k)).collect(),
        }
    }

    pub fn diameters(&self) -> impl Iterator<Item = &ArcElement> {
        self.elements.iter().filter(|e| e.is_diameter())
    }

    pub fn from_json_str(s: &str) -> Result<Self, DiagramError> {
        let dto: DiagramDto = serde_json::from_str(s)?;
        dto.try_into()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&DiagramDto::from(self)).expect("diagram serializes")
    }
}

impl Serialize for Diagram {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        DiagramDto::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Diagram {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let dto = DiagramDto::deserialize(deserializer)?;
        dto.try_into().map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// All canonical alphabet elements of the `2n`-gon, in canonical order.
/// There are exactly `n^2` of them.
pub fn full_alphabet(n: u32) -> Result<Vec<ArcElement>, ElementError> {
    if n < 4 {
        return Err(ElementError::RankTooSmall(n));
    }
    let mut set = BTreeSet::new();
    for i in 0..2 * n {
        for j in i + 2..2 * n {
            if let Ok(e) = ArcElement::pair(n, i, j) {
                set.insert(e);
            }
        }
    }
    for a in 0..n {
        set.insert(ArcElement::diameter(n, a, Color::Red)?);
        set.insert(ArcElement::diameter(n, a, Color::Green)?);
    }
    debug_assert_eq!(set.len() as u32, n * n);
    Ok(set.into_iter().collect())
}

/// Wire format for a single element.
#[derive(Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ElementDto {
    Pair { a: u32, b: u32 },
    Diameter { a: u32, color: Color },
}

impl ElementDto {
    pub fn into_element(self, n: u32) -> Result<ArcElement, ElementError> {
        match self {
            ElementDto::Pair { a, b } => ArcElement::pair(n, a, b),
            ElementDto::Diameter { a, color } => ArcElement::diameter(n, a, color),
        }
    }
}

impl From<&ArcElement> for ElementDto {
    fn from(e: &ArcElement) -> Self {
        match e.kind() {
            ArcKind::Pair { a, b } => ElementDto::Pair { a, b },
            ArcKind::Diameter { a, color } => ElementDto::Diameter { a, color },
        }
    }
}

/// Wire format for a diagram.
#[derive(Serialize, Deserialize, Debug)]
pub struct DiagramDto {
    pub n: u32,
    pub elements: Vec<ElementDto>,
}

impl From<&Diagram> for DiagramDto {
    fn from(d: &Diagram) -> Self {
        DiagramDto {
            n: d.n,
            elements: d.elements.iter().map(ElementDto::from).collect(),
        }
    }
}

impl TryFrom<DiagramDto> for Diagram {
    type Error = DiagramError;

    fn try_from(dto: DiagramDto) -> Result<Self, DiagramError> {
        let mut d = Diagram::empty(dto.n);
        for raw in dto.elements {
            let e = raw.into_element(dto.n)?;
            if !d.insert(e)? {
                return Err(DiagramError::Duplicate(e));
            }
        }
        Ok(d)
    }
}
