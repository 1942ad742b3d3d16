mod common;

use common::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use toric_fano::classify::{
    classify, detect_scroll, line_count_bound_report, ClassifyError, ComponentDescriptor, LineCount, ScrollForm,
};
use toric_fano::lattice::enumerate::polygon_classes_in_box;
use toric_fano::lattice::{is_scroll_width, is_smooth, LatticePolygon};

fn xi(n: i64) -> ComponentDescriptor {
    if n == 1 {
        ComponentDescriptor::ReducedPoint
    } else {
        ComponentDescriptor::FatPoint(n.into())
    }
}

fn prod(a: i64, b: i64) -> ComponentDescriptor {
    ComponentDescriptor::fat_point_product(a.into(), b.into())
}

fn sorted(mut v: Vec<ComponentDescriptor>) -> Vec<ComponentDescriptor> {
    v.sort();
    v
}

#[test]
fn scroll_table() {
    use ComponentDescriptor::*;
    let line_and_point = Disjoint(vec![ProjectiveLine, ReducedPoint]);
    let cases: [((i64, i64), ComponentDescriptor); 8] = [
        ((1, 0), ProjectivePlane),
        ((1, 1), Disjoint(vec![ProjectiveLine, ProjectiveLine])),
        ((2, 0), LineTimesDoublePoint),
        ((3, 0), LineTimesDoublePoint),
        ((2, 1), line_and_point.clone()),
        ((5, 1), line_and_point),
        ((2, 2), ProjectiveLine),
        ((4, 3), ProjectiveLine),
    ];
    for ((a, b), want) in cases {
        let p = ScrollForm::polygon(&a.into(), &b.into()).unwrap();
        let d = classify(&p).unwrap();
        assert_eq!(d.global.as_ref(), Some(&want), "P_{a},{b}");
        assert_eq!(d.total_degree, None);
        assert_eq!(d.reduced, None);
        assert_eq!(d.line_count, LineCount::Infinite);
        assert!(matches!(line_count_bound_report(&d), Err(ClassifyError::NotZeroDimensional)));
    }
}

#[test]
fn corpus_degrees() {
    let cases: Vec<(LatticePolygon, i64, Vec<ComponentDescriptor>)> = vec![
        (hexagon(), 6, vec![xi(1); 6]),
        (pentagon(), 10, vec![xi(1), xi(1), xi(2), xi(2), prod(2, 2)]),
        (square(), 16, vec![prod(2, 2); 4]),
        (cubic(), 27, vec![prod(3, 3); 3]),
        (two_fat_products(), 12, vec![prod(2, 3); 2]),
        (veronese(), 0, vec![]),
    ];
    for (p, total, comps) in cases {
        let d = classify(&p).unwrap();
        assert_eq!(d.total_degree, Some(BigInt::from(total)), "{p:?}");
        assert_eq!(d.component_multiset(), sorted(comps), "{p:?}");
        let sum: BigInt = d.components.iter().map(|c| c.degree.clone()).sum();
        assert_eq!(sum, BigInt::from(total));
    }
}

#[test]
fn veronese_is_empty() {
    let d = classify(&veronese()).unwrap();
    assert!(d.is_empty());
    assert_eq!(d.line_count, LineCount::Finite(0));
    assert_eq!(d.summary(), "∅");
    assert_eq!(line_count_bound_report(&d).unwrap(), "0 lines: F1(X_P) is empty");
}

#[test]
fn bound_report_golden() {
    let text = |p: &LatticePolygon| line_count_bound_report(&classify(p).unwrap()).unwrap();
    assert_eq!(
        text(&cubic()),
        "at most 27 lines on any surface with zero-dimensional F1 that degenerates flatly to X_P; X_P has exactly 3 lines"
    );
    assert_eq!(
        text(&square()),
        "at most 16 lines on any surface with zero-dimensional F1 that degenerates flatly to X_P; X_P has exactly 4 lines"
    );
    assert_eq!(
        text(&pentagon()),
        "at most 10 lines on any surface with zero-dimensional F1 that degenerates flatly to X_P; X_P has exactly 5 lines"
    );
}

#[test]
fn summaries() {
    assert_eq!(classify(&cubic()).unwrap().summary(), "ξ₃ × ξ₃ ⊔ ξ₃ × ξ₃ ⊔ ξ₃ × ξ₃");
    assert_eq!(classify(&scroll(3, 1)).unwrap().summary(), "ℙ¹ ⊔ ξ₁");
}

/// Over a small box, every non-scroll class satisfies the reducedness
/// equivalences and smooth ones are reduced.
#[test]
fn reducedness_equivalences_in_small_box() {
    for p in polygon_classes_in_box(-2, 2) {
        let d = classify(&p).unwrap();
        if is_scroll_width(&p) {
            assert!(d.scroll.is_some());
            continue;
        }
        let all_mu_ge_3 = d.components.iter().all(|c| c.invariants.mu >= BigInt::from(3));
        let reduced = d.reduced.unwrap();
        assert_eq!(reduced, all_mu_ge_3, "{p:?}");
        let count = match d.line_count {
            LineCount::Finite(n) => BigInt::from(n),
            LineCount::Infinite => panic!("non-scroll with infinite line count"),
        };
        assert_eq!(reduced, d.total_degree.unwrap() == count, "{p:?}");
        if is_smooth(&p) {
            assert!(reduced, "smooth non-scroll not reduced: {p:?}");
        }
    }
}

fn fingerprint(p: &LatticePolygon) -> (Vec<ComponentDescriptor>, Option<BigInt>, Option<bool>, LineCount) {
    let d = classify(p).unwrap();
    (d.component_multiset(), d.total_degree, d.reduced, d.line_count)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn classification_is_unimodular_invariant(p in arb_polygon(-3, 3), m in arb_unimodular()) {
        prop_assert_eq!(fingerprint(&p), fingerprint(&p.apply_map(&m)));
    }

    #[test]
    fn corpus_invariance(i in 0usize..11, m in arb_unimodular()) {
        let (_, p) = &corpus()[i];
        prop_assert_eq!(fingerprint(p), fingerprint(&p.apply_map(&m)));
    }

    #[test]
    fn scroll_round_trip(alpha in 1i64..8, beta_frac in 0i64..8, m in arb_unimodular()) {
        let beta = beta_frac % (alpha + 1);
        let image = scroll(alpha, beta).apply_map(&m);
        let form = detect_scroll(&image).expect("scroll not detected");
        prop_assert_eq!(&form.alpha, &BigInt::from(alpha));
        prop_assert_eq!(&form.beta, &BigInt::from(beta));
        prop_assert_eq!(image.apply_map(&form.map), scroll(alpha, beta));
    }
}
