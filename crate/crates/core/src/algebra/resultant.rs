use super::poly::Poly;
use super::ring::{Domain, Ring};

/// Sylvester matrix of `p` (degree m) and `q` (degree n), size `(m+n)^2`.
///
/// Rows hold coefficients from the leading one down, `n` shifted copies of
/// `p` followed by `m` shifted copies of `q`.
pub fn sylvester_matrix<R: Ring>(p: &Poly<R>, q: &Poly<R>) -> Vec<Vec<R>> {
    let m = p.degree().unwrap_or(0);
    let n = q.degree().unwrap_or(0);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (poly, deg, copies) in [(p, m, n), (q, n, m)] {
        for shift in 0..copies {
            let mut row = vec![R::zero(); size];
            for k in 0..=deg {
                row[shift + k] = poly.coeff(deg - k);
            }
            rows.push(row);
        }
    }
    rows
}

/// Fraction-free (Bareiss) determinant over an integral domain.
pub fn determinant<R: Domain>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    let mut sign = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return R::zero();
            };
            m.swap(k, swap);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss step must divide exactly");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        det.neg()
    } else {
        det
    }
}

/// Resultant of two polynomials over an integral domain.
///
/// Zero when either input is zero. When one input is a nonzero constant `c`
/// and the other has degree `d`, the result is `c^d`.
pub fn resultant<R: Domain>(p: &Poly<R>, q: &Poly<R>) -> R {
    if p.is_zero() || q.is_zero() {
        return R::zero();
    }
    let (m, n) = (p.degree().unwrap(), q.degree().unwrap());
    if m == 0 {
        return p.lc().pow(n as u32);
    }
    if n == 0 {
        return q.lc().pow(m as u32);
    }
    determinant(sylvester_matrix(p, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, UniPoly};

    #[test]
    fn resultant_eliminates_algebraic_variable() {
        // Res_a(a^2 - 2, X - a) = X^2 - 2, computed over Q[X].
        let p: Poly<UniPoly> = Poly::new(vec![
            UniPoly::from_ints(&[-2]),
            UniPoly::zero(),
            UniPoly::one(),
        ]);
        let q: Poly<UniPoly> = Poly::new(vec![UniPoly::x(), UniPoly::from_ints(&[-1])]);
        assert_eq!(resultant(&p, &q), UniPoly::from_ints(&[-2, 0, 1]));
    }

    #[test]
    fn determinant_with_pivoting() {
        let m = vec![
            vec![int(0), int(2), int(1)],
            vec![int(1), int(1), int(0)],
            vec![int(3), int(0), int(4)],
        ];
        // 0*(4) - 2*(4 - 0) + 1*(0 - 3) = -11
        assert_eq!(determinant(m), int(-11));
    }

    #[test]
    fn resultant_detects_common_root() {
        let p = UniPoly::from_ints(&[-1, 0, 1]);
        let q = UniPoly::from_ints(&[1, 1]);
        assert_eq!(resultant(&p, &q), int(0));
        // Res(x^2 + 1, x - 2) = 5
        assert_eq!(
            resultant(
                &UniPoly::from_ints(&[1, 0, 1]),
                &UniPoly::from_ints(&[-2, 1])
            ),
            int(5)
        );
    }
}
