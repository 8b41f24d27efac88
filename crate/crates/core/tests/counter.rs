use num_bigint::BigUint;
use proptest::prelude::*;
use qpwalks::counter::*;
use qpwalks::fixtures;
use qpwalks::group::{orbit, OrbitLimits};
use qpwalks::par::Exec;
use qpwalks::stepset::{enumerate_models, StepSet, Symmetry};

fn s(text: &str) -> StepSet {
    text.parse().unwrap()
}

fn u(v: &BigUint) -> u64 {
    v.try_into().unwrap()
}

/// Motzkin numbers by their three-term recurrence.
fn motzkin(n: usize) -> Vec<u64> {
    let mut m = vec![1u64, 1];
    for k in 2..n {
        let k64 = k as u64;
        m.push(((2 * k64 + 1) * m[k - 1] + (3 * k64 - 3) * m[k - 2]) / (k64 + 2));
    }
    m.truncate(n);
    m
}

#[test]
fn tabulated_sequences_match() {
    for entry in fixtures::finite_models() {
        for m in [entry.listed, entry.canonical()] {
            let t = count_dp(m, 12);
            let totals = entry.totals.as_ref().unwrap();
            let origin = entry.origin.as_ref().unwrap();
            for (n, &v) in totals.terms.iter().enumerate().take(13) {
                assert_eq!(u(&t.total(n)), v, "{} totals n={n}", entry.id());
            }
            for (n, &v) in origin.terms.iter().enumerate().take(13) {
                assert_eq!(u(&t.get(0, 0, n)), v, "{} origin n={n}", entry.id());
            }
        }
    }
}

#[test]
fn functional_equation_on_all_models() {
    for m in enumerate_models() {
        assert!(verify_functional_equation(m, 12), "{m}");
    }
}

#[test]
fn orbit_sums_on_finite_models() {
    for entry in fixtures::finite_models() {
        let m = entry.canonical();
        assert!(verify_orbit_sum(m, 8).unwrap(), "{m}");
    }
}

#[test]
fn vanishing_orbit_sums() {
    for m in ORBIT_SUM_EXCEPTIONS {
        let m = s(m);
        let orb = orbit(m, OrbitLimits::default()).unwrap();
        let table = count_dp(m, 9);
        let (lhs, rhs) = orbit_sum_sides(m, orb.orbit().unwrap(), &table, 10).unwrap();
        assert!(lhs.iter().all(|c| c.is_empty()), "{m}: left side");
        if m != s(GESSEL) {
            assert!(rhs.iter().all(|c| c.is_empty()), "{m}: right side");
        }
    }
}

#[test]
fn orbit_extraction_matches_oracle() {
    let models: Vec<StepSet> = fixtures::finite_models()
        .map(|e| e.canonical())
        .filter(|m| !is_orbit_sum_exception(*m))
        .collect();
    assert_eq!(models.len(), 19);
    let ok = Exec::default().all(&models, |&m| {
        let table = count_dp(m, 12);
        let mut ex = OrbitExtractor::new(m).unwrap();
        (0..=12).all(|n| {
            (0..=8).all(|i| (0..=8).all(|j| ex.count(i, j, n).unwrap() == table.get(i, j, n)))
        })
    });
    assert!(ok);
}

#[test]
fn closed_forms_match_oracle() {
    let tables: Vec<CountTable> = [
        TANDEM,
        GOUYOU_BEAUCHAMPS,
        KREWERAS,
        REVERSE_KREWERAS,
        GESSEL,
    ]
    .iter()
    .map(|m| count_dp(s(m), 18))
    .collect();
    for c in ClosedForm::instances(18) {
        let t = tables.iter().find(|t| t.model() == c.model()).unwrap();
        assert_eq!(c.evaluate().unwrap(), c.from_table(t), "{c:?}");
    }
}

#[test]
fn gosper_certificates() {
    assert_eq!(gosper::first_failure(10, 6, 6), None);
}

#[test]
fn gouyou_axis_symmetry() {
    let t = count_dp(s(GOUYOU_BEAUCHAMPS), 16);
    for m in 0..=8 {
        assert_eq!(t.ending_at_height(0, 2 * m), t.ending_at_abscissa(0, 2 * m));
    }
}

#[test]
fn motzkin_totals() {
    let tandem = count_dp(s(TANDEM), 19);
    let double = count_dp(s("W,N,SE,E,S,NW"), 19);
    for (n, m) in motzkin(20).into_iter().enumerate() {
        assert_eq!(u(&tandem.total(n)), m);
        assert_eq!(double.total(n), BigUint::from(m) << n);
    }
}

fn any_step_set() -> impl Strategy<Value = StepSet> {
    (1u8..=255).prop_map(StepSet::from_mask)
}

proptest! {
    #[test]
    fn mirror_transposes_counts(m in any_step_set()) {
        let a = count_dp(m, 7);
        let b = count_dp(m.apply(Symmetry::Diagonal), 7);
        for n in 0..=7 {
            for i in 0..=n {
                for j in 0..=n {
                    prop_assert_eq!(a.get(i, j, n), b.get(j, i, n));
                }
            }
        }
    }

    #[test]
    fn counts_stay_in_reach(m in any_step_set()) {
        let t = count_dp(m, 6);
        prop_assert_eq!(u(&t.get(0, 0, 0)), 1);
        for n in 0..=6usize {
            let total: BigUint = t.entries().filter(|e| e.0 == n).map(|e| e.3.clone()).sum();
            prop_assert_eq!(&total, &t.total(n));
            prop_assert!(t.total(n) <= BigUint::from(m.len()).pow(n as u32));
        }
    }

    #[test]
    fn parallel_layers_agree(m in any_step_set()) {
        prop_assert_eq!(count_dp_with(m, 9, Exec::Parallel), count_dp(m, 9));
    }
}
