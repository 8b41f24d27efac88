use qpwalks::algebra::{has_cyclotomic_factor, UniPoly};
use qpwalks::fixtures;
use qpwalks::par::Exec;
use qpwalks::prover::*;
use qpwalks::stepset::{enumerate_models, StepSet, Symmetry};

fn s(text: &str) -> StepSet {
    text.parse().unwrap()
}

const VALUATION_SETS: [&str; 5] = ["10010001", "01010001", "11010001", "10110001", "11110001"];

#[test]
fn tabulated_fixed_points_certify() {
    let rows = &fixtures::fixed_points().rows;
    assert_eq!(rows.len(), 14);
    for row in rows {
        let spec = FixedPointSpec::from_row(row).unwrap();
        assert!(
            verify_fixed_point(row.mask, &spec).unwrap(),
            "row {:?}",
            row.row
        );
        let chi = jacobian_charpoly_eliminated(row.mask, &spec).unwrap();
        assert_eq!(has_cyclotomic_factor(&chi), None, "row {:?}", row.row);
        if let Some(tab) = &row.chi_bar {
            let tab = UniPoly::from_ints(tab).squarefree_part().primitive();
            assert_eq!(chi, tab, "row {:?}", row.row);
        }
        match fixedpoint_certificate(row.mask, &spec).unwrap() {
            FixedPointOutcome::Certified { chi_bar } => assert_eq!(chi_bar, chi),
            other => panic!("row {:?}: {other:?}", row.row),
        }
    }
}

#[test]
fn degenerate_fixed_points_are_inconclusive() {
    let expected = [("11010001", 6), ("11110001", 3)];
    let degenerate = &fixtures::fixed_points().degenerate;
    assert_eq!(degenerate.len(), expected.len());
    for (row, (mask, n)) in degenerate.iter().zip(expected) {
        assert_eq!(row.mask, s(mask));
        let spec = FixedPointSpec::from_row(row).unwrap();
        assert!(verify_fixed_point(row.mask, &spec).unwrap());
        assert_eq!(
            fixedpoint_certificate(row.mask, &spec).unwrap(),
            FixedPointOutcome::Inconclusive {
                cyclotomic: Some(n)
            }
        );
    }
}

#[test]
fn valuation_traces_follow_the_linear_pattern() {
    for m in VALUATION_SETS {
        let ValuationOutcome::Escapes { start, trace } =
            valuation_certificate(s(m), (1, 2), VALUATION_THRESHOLD)
        else {
            panic!("{m} should escape");
        };
        assert_eq!(start, (1, 2));
        for n in 0..=20 {
            assert_eq!(trace[2 * n], (2 * n as i32 + 1, 2 * n as i32 + 2), "{m}");
            assert_eq!(
                trace[2 * n + 1],
                (2 * n as i32 + 3, 2 * n as i32 + 2),
                "{m}"
            );
        }
    }
}

#[test]
fn finite_models_never_get_infinite_certificates() {
    let rows = &fixtures::fixed_points().rows;
    for entry in fixtures::finite_models() {
        let m = entry.canonical();
        for g in Symmetry::ALL {
            let image = m.apply(g);
            assert_eq!(
                valuation_certificate(image, (1, 2), VALUATION_THRESHOLD),
                ValuationOutcome::Inconclusive
            );
            for row in rows {
                let spec = FixedPointSpec::from_row(row).unwrap();
                let out = fixedpoint_certificate(image, &spec).unwrap();
                assert!(
                    !matches!(out, FixedPointOutcome::Certified { .. }),
                    "{image} with row {:?}",
                    row.row
                );
            }
        }
    }
}

#[test]
fn decide_covers_every_model() {
    let models = enumerate_models();
    let decisions = decide_all(&models, Exec::default()).unwrap();
    let mut orders = std::collections::BTreeMap::new();
    let mut by_valuation = 0;
    let mut undetermined = 0;
    for d in &decisions {
        match &d.certificate {
            GroupCertificate::Finite { order, .. } => *orders.entry(*order).or_insert(0) += 1,
            GroupCertificate::Undetermined => undetermined += 1,
            c => {
                if matches!(c.root(), GroupCertificate::InfiniteValuation { .. }) {
                    by_valuation += 1;
                }
            }
        }
        let expected = fixtures::model_for(d.model)
            .unwrap()
            .group_order
            .map(|o| o as usize);
        assert_eq!(d.certificate.order(), expected, "{}", d.model);
    }
    assert_eq!(
        orders.into_iter().collect::<Vec<_>>(),
        vec![(4, 16), (6, 5), (8, 2)]
    );
    assert_eq!(undetermined, 0);
    assert_eq!(by_valuation, 5);
}

#[test]
fn decisions_agree_across_symmetries() {
    for m in ["10101100", "11100101", "10010001", "01101001"] {
        let base = decide(s(m)).unwrap().is_infinite();
        for g in Symmetry::ALL {
            assert_eq!(
                decide(s(m).apply(g)).unwrap().is_infinite(),
                base,
                "{m} {g:?}"
            );
        }
    }
}

#[test]
fn theta_of_row_one_model() {
    let theta = qpwalks::group::make_theta(s("10101100")).unwrap();
    assert_eq!(theta.to_string(), "(x^-1*y^-1, x + y^-1)");
}
