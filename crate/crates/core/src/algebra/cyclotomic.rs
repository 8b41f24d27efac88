use super::poly::UniPoly;
use super::ring::Ring;

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let (mut n, mut out) = (n, n);
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

/// The `n`-th cyclotomic polynomial, via `X^n - 1 = prod_{d | n} Phi_d`.
pub fn cyclotomic(n: u64) -> UniPoly {
    assert!(n >= 1, "cyclotomic index must be positive");
    let mut acc = UniPoly::monomial(Ring::one(), n as usize).sub(&UniPoly::one());
    for d in 1..n {
        if n.is_multiple_of(d) {
            acc = acc.div_rem(&cyclotomic(d)).0;
        }
    }
    acc
}

/// Smallest `n` such that `Phi_n` divides `p`, if any.
///
/// Only indices with `phi(n) <= deg p` can contribute; these all satisfy
/// `n <= 2 deg^2` (for deg >= 1), which bounds the scan.
pub fn has_cyclotomic_factor(p: &UniPoly) -> Option<u64> {
    let deg = p.degree()? as u64;
    if deg == 0 {
        return None;
    }
    let bound = (2 * deg * deg).max(6);
    (1..=bound)
        .filter(|&n| euler_phi(n) <= deg)
        .find(|&n| p.rem(&cyclotomic(n)).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), UniPoly::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic(6), UniPoly::from_ints(&[1, -1, 1]));
        assert_eq!(cyclotomic(8), UniPoly::from_ints(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic(12), UniPoly::from_ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn totient() {
        let got: Vec<u64> = (1..=12).map(euler_phi).collect();
        assert_eq!(got, [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
    }

    #[test]
    fn factor_detection() {
        let chi = UniPoly::from_ints(&[1, 9, 31, 62, 77, 62, 31, 9, 1]);
        assert_eq!(has_cyclotomic_factor(&chi), None);
        let with = chi.mul(&cyclotomic(5));
        assert_eq!(has_cyclotomic_factor(&with), Some(5));
        assert_eq!(
            has_cyclotomic_factor(&UniPoly::from_ints(&[1, 1, 1])),
            Some(3)
        );
    }
}
