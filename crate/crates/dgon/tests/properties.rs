//! Property-based suites over random elements and diagrams.

use proptest::prelude::*;

use dgon::ar::{b_inv, b_map};
use dgon::crossing::crossing_count;
use dgon::mutation::{mutate_diagram, mutate_element, shift, Direction, Mutator};
use dgon::ptolemy::{is_ptolemy, is_torsion_part};
use dgon::render::{render_svg, RenderSpec};
use dgon::{full_alphabet, ArcElement, Diagram};

fn arb_rank() -> impl Strategy<Value = u32> {
    4u32..=7
}

fn arb_element() -> impl Strategy<Value = ArcElement> {
    arb_rank().prop_flat_map(|n| {
        let alpha = full_alphabet(n).unwrap();
        (0..alpha.len()).prop_map(move |i| alpha[i])
    })
}

/// A random subset of the alphabet at rank `n`, as index picks.
fn arb_subset(n: u32) -> impl Strategy<Value = Diagram> {
    let alpha = full_alphabet(n).unwrap();
    let len = alpha.len();
    proptest::collection::vec(0..len, 0..=len).prop_map(move |picks| {
        Diagram::from_elements(n, picks.iter().map(|&i| alpha[i])).unwrap()
    })
}

/// A random non-crossing diagram: greedy filter of a random pick order.
fn arb_noncrossing(n: u32) -> impl Strategy<Value = Diagram> {
    arb_subset(n).prop_map(move |x| {
        let mut d = Diagram::empty(n);
        for e in x.iter() {
            if d.iter().all(|f| crossing_count(e, f).unwrap() == 0) {
                d.insert(*e).unwrap();
            }
        }
        d
    })
}

proptest! {
    #[test]
    fn crossing_is_symmetric_and_rotation_equivariant(
        e1 in arb_element(),
        e2 in arb_element(),
        k in -8i64..=8,
    ) {
        prop_assume!(e1.n() == e2.n());
        let c = crossing_count(&e1, &e2).unwrap();
        prop_assert_eq!(crossing_count(&e2, &e1).unwrap(), c);
        prop_assert_eq!(crossing_count(&e1.rotate(k), &e2.rotate(k)).unwrap(), c);
    }

    #[test]
    fn nc_is_antitone_and_idempotent_as_a_pair(x in arb_rank().prop_flat_map(arb_subset)) {
        let nc_x = x.nc();
        let ncnc = nc_x.nc();
        // x ⊆ nc(nc(x)), and nc³ = nc
        prop_assert!(x.is_subset(&ncnc));
        prop_assert_eq!(ncnc.nc(), nc_x.clone());
        // antitone against a shrunk copy
        if let Some(first) = x.iter().next().copied() {
            let mut smaller = x.clone();
            smaller.remove(&first);
            prop_assert!(nc_x.is_subset(&smaller.nc()));
        }
    }

    #[test]
    fn torsion_parts_are_exactly_ptolemy(x in arb_subset(5)) {
        prop_assert_eq!(is_ptolemy(&x), is_torsion_part(&x));
    }

    #[test]
    fn mutation_directions_invert(d in arb_rank().prop_flat_map(arb_noncrossing)) {
        let m = Mutator::new(&d).unwrap();
        for e in d.nc().iter() {
            let up = m.mutate_element(e, Direction::Plus).unwrap();
            let down = m.mutate_element(e, Direction::Minus).unwrap();
            prop_assert_eq!(m.mutate_element(&up, Direction::Minus).unwrap(), *e);
            prop_assert_eq!(m.mutate_element(&down, Direction::Plus).unwrap(), *e);
        }
    }

    #[test]
    fn diagram_mutation_preserves_size_and_members(
        d in arb_rank().prop_flat_map(arb_noncrossing),
    ) {
        let nc = d.nc();
        let x = nc.clone();
        let image = mutate_diagram(&d, &x, Direction::Minus).unwrap();
        prop_assert_eq!(image.len(), x.len());
        prop_assert!(d.is_subset(&image));
    }

    #[test]
    fn empty_mutation_is_shift(e in arb_element()) {
        let d = Diagram::empty(e.n());
        prop_assert_eq!(mutate_element(&d, &e, Direction::Minus).unwrap(), shift(&e));
        // shift has order 2n on every element
        let mut cur = e;
        for _ in 0..2 * e.n() {
            cur = shift(&cur);
        }
        prop_assert_eq!(cur, e);
    }

    #[test]
    fn ar_bijection_round_trip(e in arb_element()) {
        let v = b_inv(&e);
        prop_assert!(v.is_cluster());
        prop_assert_eq!(b_map(&v).unwrap(), e);
    }

    #[test]
    fn diagram_serde_round_trip(x in arb_rank().prop_flat_map(arb_subset)) {
        let s = x.to_json_string();
        prop_assert_eq!(Diagram::from_json_str(&s).unwrap(), x);
    }

    #[test]
    fn render_is_deterministic(d in arb_noncrossing(4)) {
        let mut spec = RenderSpec::new(d);
        spec.shade_cells = true;
        spec.highlight = Some(spec.diagram.clone());
        let a = render_svg(&spec).unwrap();
        prop_assert_eq!(render_svg(&spec).unwrap(), a);
    }
}
