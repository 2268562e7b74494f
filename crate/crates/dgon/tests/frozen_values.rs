//! End-to-end checks of hand-verified values across the public API.

use dgon::ar::{
    b_inv, b_map, middle_term, mutation_triangle, starting_frame, tau_inv_sigma, ArVertex, Sign,
    TriangleSummand,
};
use dgon::cells::{CellDecomposition, CellVertex, Location};
use dgon::crossing::crossing_count;
use dgon::mutation::{is_mutation_pair, mutate_element, shift, Direction};
use dgon::ptolemy::{check_ptolemy, is_torsion_part};
use dgon::render::{render_svg, RenderSpec};
use dgon::{full_alphabet, ArcElement, Color, Diagram};

fn pair(a: u32, b: u32) -> ArcElement {
    ArcElement::pair(4, a, b).unwrap()
}

fn diam(a: u32, c: Color) -> ArcElement {
    ArcElement::diameter(4, a, c).unwrap()
}

#[test]
fn alphabet_sizes_are_squares() {
    for n in 4..=10 {
        assert_eq!(full_alphabet(n).unwrap().len(), (n * n) as usize);
    }
}

#[test]
fn crossing_table_examples() {
    assert_eq!(crossing_count(&pair(0, 2), &pair(1, 3)).unwrap(), 1);
    assert_eq!(crossing_count(&pair(0, 2), &pair(1, 7)).unwrap(), 1);
    assert_eq!(crossing_count(&pair(0, 3), &pair(1, 6)).unwrap(), 2);
    assert_eq!(crossing_count(&diam(0, Color::Red), &pair(1, 3)).unwrap(), 0);
    assert_eq!(crossing_count(&diam(0, Color::Red), &pair(1, 6)).unwrap(), 1);
    assert_eq!(
        crossing_count(&diam(0, Color::Red), &diam(1, Color::Green)).unwrap(),
        1
    );
    assert_eq!(crossing_count(&diam(0, Color::Red), &diam(1, Color::Red)).unwrap(), 0);
    assert_eq!(crossing_count(&diam(0, Color::Red), &diam(0, Color::Green)).unwrap(), 0);
}

#[test]
fn torsion_and_ptolemy_examples() {
    // closing {(0,2),(1,3)} under the hull axiom adds exactly (0,3)
    let x = Diagram::from_elements(4, [pair(0, 2), pair(1, 3), pair(0, 3)]).unwrap();
    assert!(check_ptolemy(&x).is_ok());
    assert!(is_torsion_part(&x));
    let bad = Diagram::from_elements(4, [pair(0, 2), pair(1, 3)]).unwrap();
    assert!(check_ptolemy(&bad).is_err());
    assert!(!is_torsion_part(&bad));
}

#[test]
fn diagram_json_round_trip() {
    let x = Diagram::from_elements(4, [pair(0, 2), diam(1, Color::Green)]).unwrap();
    let s = x.to_json_string();
    assert_eq!(Diagram::from_json_str(&s).unwrap(), x);
}

#[test]
fn cells_of_a_single_red_diameter() {
    let d = Diagram::from_elements(4, [diam(0, Color::Red)]).unwrap();
    let cells = CellDecomposition::build(&d).unwrap();
    assert_eq!(cells.pairs().len(), 1);
    let p = &cells.pairs()[0];
    assert!(!p.is_invariant());
    assert_eq!(
        p.cell().verts(),
        [
            CellVertex::Boundary(0),
            CellVertex::Boundary(1),
            CellVertex::Boundary(2),
            CellVertex::Boundary(3),
            CellVertex::Boundary(4),
            CellVertex::Center
        ]
    );
    match cells.locate(&diam(1, Color::Red)).unwrap() {
        Location::Diagonal { i, j, .. } => assert_eq!((i, j), (1, 5)),
        Location::InD => panic!("not a member"),
    }
}

#[test]
fn mutation_worked_example() {
    let d = Diagram::from_elements(4, [diam(0, Color::Red)]).unwrap();
    let e = diam(1, Color::Red);
    assert_eq!(mutate_element(&d, &e, Direction::Minus).unwrap(), diam(0, Color::Green));
    assert_eq!(mutate_element(&d, &e, Direction::Plus).unwrap(), pair(0, 2));
    let back = mutate_element(&d, &pair(0, 2), Direction::Minus).unwrap();
    assert_eq!(back, e);
}

#[test]
fn mutation_pair_rejects_non_subsets() {
    let d = Diagram::empty(4);
    let x = Diagram::from_elements(4, [pair(0, 2)]).unwrap();
    assert!(!is_mutation_pair(&d, &x, &x).unwrap());
    let x2 = Diagram::from_elements(4, [pair(1, 7)]).unwrap();
    assert!(is_mutation_pair(&d, &x, &x2).unwrap());
}

#[test]
fn shift_agrees_with_empty_mutation() {
    for n in [4, 5, 6] {
        let d = Diagram::empty(n);
        for e in full_alphabet(n).unwrap() {
            assert_eq!(mutate_element(&d, &e, Direction::Minus).unwrap(), shift(&e));
        }
    }
}

#[test]
fn ar_bridge_examples() {
    assert_eq!(b_map(&ArVertex::plain(4, 0, 2).unwrap()).unwrap(), pair(0, 2));
    assert_eq!(
        b_map(&ArVertex::signed(4, 0, Sign::Plus).unwrap()).unwrap(),
        diam(0, Color::Green)
    );
    // the canonical orbit chord of (3,5) is (1,7), whose partner recovers [3,5]
    assert_eq!(b_inv(&pair(3, 5)), ArVertex::plain(4, 3, 5).unwrap());
    assert_eq!(
        tau_inv_sigma(&ArVertex::signed(4, 0, Sign::Plus).unwrap()),
        ArVertex::signed(4, 4, Sign::Plus).unwrap()
    );
    assert_eq!(
        tau_inv_sigma(&ArVertex::signed(5, 0, Sign::Plus).unwrap()),
        ArVertex::signed(5, 5, Sign::Minus).unwrap()
    );

    let fs = starting_frame(&ArVertex::plain(4, 0, 2).unwrap()).unwrap();
    assert_eq!(fs.len(), 5);
    let mid = middle_term(&ArVertex::plain(4, 1, 3).unwrap(), &ArVertex::plain(4, 0, 2).unwrap())
        .unwrap();
    assert_eq!(mid.into_iter().collect::<Vec<_>>(), vec![ArVertex::plain(4, 0, 3).unwrap()]);
}

#[test]
fn triangle_worked_example() {
    let d = Diagram::from_elements(4, [pair(1, 3)]).unwrap();
    let t = mutation_triangle(&d, &pair(0, 3)).unwrap();
    assert_eq!(t.third, pair(1, 7));
    assert_eq!(t.summands, vec![TriangleSummand::Zero, TriangleSummand::Element(pair(1, 3))]);
}

#[test]
fn svg_output_is_stable() {
    let d = Diagram::from_elements(4, [diam(0, Color::Red), pair(1, 3)]).unwrap();
    let mut spec = RenderSpec::new(d);
    spec.shade_cells = true;
    spec.highlight = Some(spec.diagram.clone());
    let one = render_svg(&spec).unwrap();
    let two = render_svg(&spec).unwrap();
    assert_eq!(one, two);
    assert!(one.contains("</svg>"));
}
