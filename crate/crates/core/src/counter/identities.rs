use crate::algebra::{int, Ring};
use crate::error::{Error, Result};
use crate::group::{
    orbit, orbit_sum_of, substitute_in_y_laurent, BiRationalMap, Orbit, OrbitLimits,
};
use crate::series::{Laurent, LaurentPoly1, LaurentPoly2, RatFunc1, TruncSeries};
use crate::stepset::StepSet;

use super::dp::{count_dp, CountTable};

/// `K xy Q = xy - t x A₋₁(x) Q(x,0) - t y B₋₁(y) Q(0,y) + t ε Q(0,0)`
/// to `O(t^order)`, with `Q` from the counting oracle.
pub fn verify_functional_equation(s: StepSet, order: usize) -> bool {
    let table = count_dp(s, order.saturating_sub(1));
    functional_equation_holds(&table, order)
}

/// The functional equation checked against a given table, which must hold
/// lengths below `order`.
pub fn functional_equation_holds(table: &CountTable, order: usize) -> bool {
    assert!(
        order >= 1 && table.max_len() + 1 >= order,
        "table too short"
    );
    let s = table.model();
    let order = order as i32;
    let q = table.series().truncate(order);
    let xy = LaurentPoly2::xy_pow(1, 1);
    let t = TruncSeries::<LaurentPoly2>::t();
    let kernel = TruncSeries::exact(0, vec![LaurentPoly2::one(), s.poly().neg()]);
    let lhs = kernel.mul(&q).mul_coeff(&xy);

    let on_x_axis = q.map(|c| LaurentPoly2::from_x(&c.y_coeff(0)));
    let on_y_axis = q.map(|c| LaurentPoly2::from_y(&c.x_coeff(0)));
    let at_origin = q.map(|c| LaurentPoly2::from_rational(&c.coeff(0, 0)));
    let x_am = LaurentPoly2::from_x(&s.a(-1).shift(1));
    let y_bm = LaurentPoly2::from_y(&s.b(-1).shift(1));
    let rhs = TruncSeries::constant(xy)
        .sub(&t.mul(&on_x_axis).mul_coeff(&x_am))
        .sub(&t.mul(&on_y_axis).mul_coeff(&y_bm))
        .add(&t.mul(&at_origin).scale(&int(s.epsilon())));
    lhs.truncate(order) == rhs.truncate(order)
}

/// Substitute an orbit element into each coefficient of `xy Q`.
fn orbit_image(coeffs: &[LaurentPoly2], image: &BiRationalMap) -> Result<Vec<Laurent<RatFunc1>>> {
    let xy = LaurentPoly2::xy_pow(1, 1);
    coeffs
        .iter()
        .map(|c| substitute_in_y_laurent(&c.mul(&xy), image))
        .collect()
}

/// Coefficients of `t⁰, t¹, ...`, each a Laurent polynomial in `y` over `Q(x)`.
pub type SliceSeries = Vec<Laurent<RatFunc1>>;

/// Both sides of the orbit-sum identity, coefficient by coefficient in `t`:
/// `Σ sign(g) g(xy Q)` and `Σ sign(g) g(xy) · Sⁿ`.
pub fn orbit_sum_sides(
    s: StepSet,
    orb: &Orbit,
    table: &CountTable,
    order: usize,
) -> Result<(SliceSeries, SliceSeries)> {
    let series = table.series();
    let coeffs: Vec<LaurentPoly2> = (0..order).map(|n| series.coeff(n as i32)).collect();
    let mut lhs = vec![Laurent::zero(); order];
    for e in &orb.elements {
        let img = orbit_image(&coeffs, &e.image)?;
        for (acc, term) in lhs.iter_mut().zip(img) {
            *acc = if e.sign > 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
    }
    let sum = orbit_sum_of(orb)?;
    let step = s.poly().to_y_ratfunc();
    let mut rhs = Vec::with_capacity(order);
    let mut power: Laurent<RatFunc1> = Laurent::one();
    for _ in 0..order {
        rhs.push(sum.mul(&power));
        power = power.mul(&step);
    }
    Ok((lhs, rhs))
}

/// `Σ sign(g) g(xy Q) = (1/K) Σ sign(g) g(xy)` to `O(t^order)`.
///
/// The identity is symmetric in `x` and `y`, so a model whose orbit is not
/// Laurent in `y` is checked through its mirror image.
pub fn verify_orbit_sum(s: StepSet, order: usize) -> Result<bool> {
    match verify_orbit_sum_as_is(s, order) {
        Err(Error::OutOfScope(_)) => verify_orbit_sum_as_is(s.mirror(), order),
        other => other,
    }
}

fn verify_orbit_sum_as_is(s: StepSet, order: usize) -> Result<bool> {
    let outcome = orbit(s, OrbitLimits::default())?;
    let orb = outcome.orbit().ok_or(Error::InfiniteGroup)?;
    let table = count_dp(s, order.saturating_sub(1));
    let (lhs, rhs) = orbit_sum_sides(s, orb, &table, order)?;
    Ok(lhs == rhs)
}

/// `Q(x, 0)` as a series with coefficients in `x`.
pub fn q_on_x_axis(table: &CountTable) -> TruncSeries<LaurentPoly1> {
    table.series().map(|c| c.y_coeff(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn s(text: &str) -> StepSet {
        text.parse().unwrap()
    }

    #[test]
    fn kreweras_functional_equation() {
        assert!(verify_functional_equation(s("W,S,NE"), 12));
        assert!(verify_functional_equation(s("E,W,NE,SW"), 12));
    }

    #[test]
    fn corrupted_table_fails() {
        let mut t = count_dp(s("W,S,NE"), 8);
        let v = t.get(1, 1, 5) + BigUint::from(1u32);
        t.set(1, 1, 5, v);
        assert!(!functional_equation_holds(&t, 9));
    }

    #[test]
    fn simple_walk_orbit_sum() {
        assert!(verify_orbit_sum(s("N,S,E,W"), 8).unwrap());
    }

    #[test]
    fn infinite_group_is_rejected() {
        assert_eq!(verify_orbit_sum(s("N,SE,NW"), 4), Err(Error::InfiniteGroup));
    }
}
