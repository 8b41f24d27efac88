use qpwalks::algebra::Ring;
use qpwalks::fixtures::{finite_models, models};
use qpwalks::group::{orbit, BiRationalMap, OrbitLimits, RatFunc2};
use qpwalks::stepset::{enumerate_models, Symmetry};

#[test]
fn orbits_match_tables() {
    for m in finite_models() {
        let out = orbit(m.listed, OrbitLimits::default()).unwrap();
        let o = out
            .orbit()
            .unwrap_or_else(|| panic!("{} should be finite", m.id()));
        assert_eq!(o.order() as u32, m.group_order.unwrap(), "{}", m.id());
        let listed = m.orbit.as_ref().unwrap();
        for (k, (e, [a, b])) in o.elements.iter().zip(listed).enumerate() {
            let want = BiRationalMap {
                x: RatFunc2::parse(a).unwrap(),
                y: RatFunc2::parse(b).unwrap(),
            };
            assert_eq!(e.image, want, "{} element {k}", m.id());
            assert_eq!(e.sign, if k % 2 == 0 { 1 } else { -1 });
        }
    }
}

#[test]
fn step_polynomial_is_invariant_on_orbits() {
    for m in finite_models() {
        let s = RatFunc2::from_poly(m.listed.poly());
        let o = orbit(m.listed, OrbitLimits::default()).unwrap();
        for e in &o.orbit().unwrap().elements {
            assert_eq!(
                s.substitute(&e.image.x, &e.image.y).unwrap(),
                s,
                "{}",
                m.id()
            );
        }
    }
}

#[test]
fn order_histogram_and_symmetry_invariance() {
    let mut hist = std::collections::BTreeMap::new();
    for s in enumerate_models() {
        let order = orbit(s, OrbitLimits::default()).unwrap().order();
        *hist.entry(order).or_insert(0) += 1;
    }
    let got: Vec<_> = hist.into_iter().collect();
    assert_eq!(
        got,
        vec![(None, 56), (Some(4), 16), (Some(6), 5), (Some(8), 2)]
    );

    for m in finite_models() {
        for g in Symmetry::ALL {
            let order = orbit(m.listed.apply(g), OrbitLimits::default())
                .unwrap()
                .order();
            assert_eq!(
                order.map(|o| o as u32),
                m.group_order,
                "{} under {g:?}",
                m.id()
            );
        }
    }
    for m in models().iter().filter(|m| m.table == 4).step_by(6) {
        for g in Symmetry::ALL {
            let order = orbit(m.listed.apply(g), OrbitLimits::default())
                .unwrap()
                .order();
            assert_eq!(order, None, "{} under {g:?}", m.id());
        }
    }
}

#[test]
fn theta_has_the_tabulated_form() {
    let s = "10101100".parse().unwrap();
    let theta = qpwalks::group::make_theta(s).unwrap();
    assert_eq!(theta.x, RatFunc2::parse("1/(x*y)").unwrap());
    assert_eq!(theta.y, RatFunc2::parse("x + 1/y").unwrap());
    assert!(!theta.x.is_zero());
}
