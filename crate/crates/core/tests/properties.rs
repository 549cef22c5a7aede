//! Randomized invariants beyond the exhaustive desk-scale grids, plus
//! negative controls showing the checkers detect broken inputs.

use kcrystal::crystal::{enumerate, CrystalElement};
use kcrystal::icrystal::{btilde, btilde_at};
use kcrystal::kmatrix::{k_apply, k_inverse};
use kcrystal::rmatrix::r_apply;
use kcrystal::verify::{reflection_lhs, reflection_rhs};
use kcrystal::{AffineElement, Composition, Family, OrientedSlot, RFormula, RKind, SatakeDiagram};
use proptest::prelude::*;

fn composition(n: usize, max_s: u32) -> impl Strategy<Value = Composition> {
    prop::collection::vec(0..=max_s, n).prop_map(Composition::new)
}

fn diagram() -> impl Strategy<Value = SatakeDiagram> {
    prop_oneof![
        (3usize..=8).prop_map(|n| SatakeDiagram::new(Family::A1, n).unwrap()),
        (3usize..=8).prop_map(|n| SatakeDiagram::new(Family::A3, n).unwrap()),
        (2usize..=4).prop_map(|h| SatakeDiagram::new(Family::A4, 2 * h).unwrap()),
    ]
}

fn diagram_and_pair() -> impl Strategy<Value = (SatakeDiagram, Composition, Composition)> {
    diagram().prop_flat_map(|d| {
        let n = d.n();
        (Just(d), composition(n, 4), composition(n, 4))
    })
}

proptest! {
    #[test]
    fn r_is_an_involution(
        (a, b) in (2usize..=7).prop_flat_map(|n| (composition(n, 4), composition(n, 4))),
        dd in any::<bool>(),
        p1 in -9i64..=9,
        p2 in -9i64..=9,
    ) {
        let kind = if dd { RKind::DD } else { RKind::RR };
        let b1 = OrientedSlot::direct(AffineElement { dual: dd, power: p1, alpha: a });
        let b2 = OrientedSlot::direct(AffineElement { dual: dd, power: p2, alpha: b });
        let (o1, o2) = r_apply(kind, &b1, &b2).unwrap();
        prop_assert_eq!(r_apply(kind, &o1, &o2).unwrap(), (b1, b2));
    }

    #[test]
    fn k_round_trips((d, a, _) in diagram_and_pair(), p in -20i64..=20) {
        let b = AffineElement::plain(p, a);
        prop_assert_eq!(k_inverse(&d, &k_apply(&d, &b).unwrap()).unwrap(), b);
    }

    #[test]
    fn k_commutes_with_btilde((d, a, _) in diagram_and_pair(), i in 0usize..8, p in -5i64..=5) {
        let i = i % d.n();
        let b = AffineElement::plain(p, a);
        let lhs = btilde(&d, i, &b).unwrap().map_terms(|e| k_apply(&d, e)).unwrap();
        let rhs = btilde_at(&d, i, &k_apply(&d, &b).unwrap(), true).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reflection_equation_at_larger_rank((d, a, b) in diagram_and_pair(), p in -5i64..=5, q in -5i64..=5) {
        let (x, y) = (AffineElement::plain(p, a), AffineElement::plain(q, b));
        let lhs = reflection_lhs(&d, &x, &y, RFormula::Corrected).unwrap();
        let rhs = reflection_rhs(&d, &x, &y, RFormula::Corrected).unwrap();
        prop_assert_eq!((lhs.x, lhs.y), (rhs.x, rhs.y));
    }

    #[test]
    fn oriented_operators_are_partial_inverses(a in composition(6, 3), dual in any::<bool>(), inv in any::<bool>(), i in 0usize..6, p in -5i64..=5) {
        let slot = OrientedSlot::new(AffineElement { dual, power: p, alpha: a }, inv);
        if let Some(f) = slot.f(i) {
            prop_assert_eq!(f.e(i), Some(slot.clone()));
        }
        if let Some(e) = slot.e(i) {
            prop_assert_eq!(e.f(i), Some(slot));
        }
    }

    #[test]
    fn elements_round_trip_through_json(a in composition(5, 6), dual in any::<bool>(), p in -50i64..=50) {
        let e = AffineElement { dual, power: p, alpha: a };
        let js = serde_json::to_string(&e).unwrap();
        prop_assert_eq!(serde_json::from_str::<AffineElement>(&js).unwrap(), e);
    }
}

#[test]
fn literal_formulas_break_the_reflection_equation() {
    let d = SatakeDiagram::new(Family::A4, 4).unwrap();
    let mut broken = 0;
    for a in enumerate(4, 3).unwrap() {
        for b in enumerate(4, 2).unwrap() {
            let (x, y) = (AffineElement::plain(0, a.clone()), AffineElement::plain(0, b));
            let lhs = reflection_lhs(&d, &x, &y, RFormula::Literal);
            let rhs = reflection_rhs(&d, &x, &y, RFormula::Literal);
            match (lhs, rhs) {
                (Ok(l), Ok(r)) if (&l.x, &l.y) == (&r.x, &r.y) => {}
                _ => broken += 1,
            }
        }
    }
    assert!(broken > 0);
}

#[test]
fn wrong_orientation_breaks_a3_equivariance() {
    let d = SatakeDiagram::new(Family::A3, 3).unwrap();
    let mut broken = 0;
    for a in enumerate(3, 3).unwrap() {
        let b = AffineElement::plain(0, a);
        let lhs = btilde(&d, 0, &b).unwrap().map_terms(|e| k_apply(&d, e)).unwrap();
        let rhs = btilde_at(&d, 0, &k_apply(&d, &b).unwrap(), false).unwrap();
        broken += usize::from(lhs != rhs);
    }
    assert!(broken > 0);
}
