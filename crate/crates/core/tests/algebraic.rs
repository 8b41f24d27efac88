use qpwalks::algebra::{int, rat, Rational, Ring};
use qpwalks::algebraic::*;
use qpwalks::counter::count_dp;
use qpwalks::series::TruncSeries;

fn binom(n: i64, k: i64) -> Rational {
    (0..k).fold(int(1), |acc, i| acc.mul(&rat(n - i, i + 1)))
}

#[test]
fn closed_solutions_match_oracle() {
    for model in HalfOrbitModel::ALL {
        assert!(verify_closed_solutions(model, 14).unwrap(), "{model:?}");
    }
}

#[test]
fn identities_hold() {
    let checks = algebraic_identities(20).unwrap();
    assert_eq!(checks.len(), 13);
    for c in &checks {
        assert!(c.holds, "{}", c.name);
    }
}

#[test]
fn quartic_for_double_kreweras_totals_to_order_thirty() {
    let checks = algebraic_identities(30).unwrap();
    assert!(checks
        .iter()
        .any(|c| c.name == "double-kreweras-total-quartic" && c.holds));
}

#[test]
fn origin_series_coincide_to_order_twenty() {
    let a = half_orbit_solve(HalfOrbitModel::Kreweras, 20).unwrap();
    let b = half_orbit_solve(HalfOrbitModel::ReverseKreweras, 20).unwrap();
    assert_eq!(a.q00, b.q00);
}

#[test]
fn kreweras_axis_coefficients() {
    let order = 16;
    let w = series_w(order + 4).series;
    let sol = half_orbit_solve(HalfOrbitModel::Kreweras, order).unwrap();
    let catalan = |i: i64| binom(2 * i, i).mul(&rat(1, i + 1));
    for i in 0..5i64 {
        // W^(2i+1) / (2 4^i t) (C_i - C_(i+1) W^3 / 4)
        let bracket =
            TruncSeries::constant(catalan(i)).sub(&w.pow(3).scale(&catalan(i + 1).mul(&rat(1, 4))));
        let expected = w
            .pow(2 * i as u32 + 1)
            .mul(&bracket)
            .scale(&rat(1, 2 * 4i64.pow(i as u32)))
            .shift(-1)
            .truncate(order as i32);
        assert_eq!(expected, sol.q_x0.x_coeff(i as i32), "i = {i}");
    }
}

#[test]
fn reverse_kreweras_diagonal_coefficients() {
    let order = 16;
    let w = series_w(order + 4).series;
    let sol = half_orbit_solve(HalfOrbitModel::ReverseKreweras, order).unwrap();
    for i in 0..5i64 {
        // W^(2i+1) / (4^(i+1) t (i+2)) C(2i,i) (2i+4 - (2i+1) W^3)
        let bracket = TruncSeries::constant(int(2 * i + 4)).sub(&w.pow(3).scale(&int(2 * i + 1)));
        let expected = w
            .pow(2 * i as u32 + 1)
            .mul(&bracket)
            .scale(&binom(2 * i, i).mul(&rat(1, 4i64.pow(i as u32 + 1) * (i + 2))))
            .shift(-1)
            .truncate(order as i32);
        assert_eq!(expected, sol.q_diag.x_coeff(i as i32), "i = {i}");
    }
}

#[test]
fn reverse_kreweras_small_diagonal_value() {
    // Endpoints (i, i) are only reached at lengths 3m + 2i.
    let t = count_dp(HalfOrbitModel::ReverseKreweras.step_set(), 3);
    assert_eq!(t.get(1, 1, 2), 2u32.into());
    assert_eq!(t.get(1, 1, 3), 0u32.into());
    let sol = half_orbit_solve(HalfOrbitModel::ReverseKreweras, 4).unwrap();
    assert_eq!(sol.q_diag.coeff(2).coeff(1), int(2));
}

#[test]
fn solutions_serialize_as_tables() {
    let sol = half_orbit_solve(HalfOrbitModel::DoubleKreweras, 4).unwrap();
    let tables = sol.series_tables();
    let json = serde_json::to_value(&tables).unwrap();
    assert_eq!(json[2]["series"], "Q(0,0)");
    assert_eq!(
        json[2]["coefficients"],
        serde_json::json!(["1", "0", "3", "4"])
    );
    assert_eq!(
        json[0]["model"],
        HalfOrbitModel::DoubleKreweras.step_set().to_binary()
    );
}
