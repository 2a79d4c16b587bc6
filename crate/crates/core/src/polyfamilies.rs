//! Laguerre polynomials, generalized geometric polynomials, and the
//! closed-form evaluators for harmonic-number power sums built on them.
//!
//! The geometric-polynomial coefficient uses the rising factorial
//! (p+1)(p+2)...(p+k) rather than a bare gamma value: that normalization
//! is what makes the generating-function representation
//! sum C(p+n,n) n^m z^n = (1-z)^{-(p+1)} omega_{m,p+1}(z/(1-z)) hold for
//! every tested p (see `tests::gamma_reading_fails`), and it reduces to
//! k! at p = 0.

use crate::exactnum::{
    binomial_int, binomial_rat, factorial, harmonic_diff, rising_factorial, stirling2, PoleError,
    Rat,
};
use crate::fps::{Poly, Series};

/// L_n(x) = sum_{k<=n} C(n,k) (-x)^k / k!, exact.
pub fn laguerre(n: usize) -> Poly {
    Poly::new(
        (0..=n)
            .map(|k| {
                let c = binomial_int(n, k as i64) / Rat::from_bigint(factorial(k));
                if k % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .collect(),
    )
}

/// The antiderivative of (L_n(t) - 1)/t from 0 to x, which is again a
/// polynomial: sum_{k=1..n} C(n,k) (-x)^k / (k! k). The n = 0 integrand
/// is identically zero, so the zero polynomial is returned.
pub fn laguerre_log_integral(n: usize) -> Poly {
    Poly::new(
        (0..=n)
            .map(|k| {
                if k == 0 {
                    return Rat::zero();
                }
                let c = binomial_int(n, k as i64)
                    / (Rat::from_bigint(factorial(k)) * Rat::from(k));
                if k % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .collect(),
    )
}

/// Generalized geometric polynomial
/// omega_{m,p+1}(x) = sum_{k<=m} S(m,k) (p+1)(p+2)...(p+k) x^k.
/// At p = 0 the coefficients reduce to S(m,k) k!.
pub fn geometric_poly(m: usize, p: &Rat) -> Poly {
    Poly::new(
        (0..=m)
            .map(|k| Rat::from_bigint(stirling2(m, k)) * rising_factorial(p, k))
            .collect(),
    )
}

/// Both sides of sum_n C(p+n,n) n^m z^n = (1-z)^{-(p+1)} omega_{m,p+1}(z/(1-z)).
/// The left side is built from the direct coefficient formula, the right
/// by composing the polynomial with z/(1-z); this pair pins the
/// geometric-polynomial normalization.
pub fn nbinom_power_series_sides(m: usize, p: &Rat, order: usize) -> (Series, Series) {
    let lhs = Series::from_fn(order, |n| {
        let pow = if n == 0 && m == 0 {
            Rat::one()
        } else {
            Rat::from(n).pow(m)
        };
        binomial_rat(&(p + &Rat::from(n)), n) * pow
    });
    let omega = geometric_poly(m, p);
    let u = Series::euler_sub(order);
    let composed = omega
        .to_series(order)
        .compose(&u)
        .expect("z/(1-z) has zero constant term");
    let rhs = Series::nbinom(p, order).mul(&composed);
    (lhs, rhs)
}

/// Both sides of the closed form for sum_n (H_{p+n}-H_p) C(p+n,n) n^m z^n:
/// (1-z)^{-(p+1)} { -log(1-z) omega_{m,p+1}(z/(1-z))
///   + sum_{n<=m} (z/(1-z))^n (H_{p+n}-H_p) C(p+n,n) n! S(m,n) }.
/// The inner sum is finite since S(m,n) vanishes for n > m.
pub fn hsum_closed_form_sides(
    m: usize,
    p: &Rat,
    order: usize,
) -> Result<(Series, Series), PoleError> {
    let hd: Vec<Rat> = (0..=order.max(m))
        .map(|n| harmonic_diff(p, n))
        .collect::<Result<_, _>>()?;
    let lhs = Series::from_fn(order, |n| {
        let pow = if n == 0 && m == 0 {
            Rat::one()
        } else {
            Rat::from(n).pow(m)
        };
        &hd[n] * &binomial_rat(&(p + &Rat::from(n)), n) * pow
    });

    let u = Series::euler_sub(order);
    let omega_of_u = geometric_poly(m, p)
        .to_series(order)
        .compose(&u)
        .expect("z/(1-z) has zero constant term");
    let log_term = Series::neg_log1m(order).mul(&omega_of_u);
    let finite = Poly::new(
        (0..=m)
            .map(|n| {
                &hd[n]
                    * &binomial_rat(&(p + &Rat::from(n)), n)
                    * Rat::from_bigint(factorial(n) * stirling2(m, n))
            })
            .collect(),
    );
    let finite_of_u = finite
        .to_series(order)
        .compose(&u)
        .expect("z/(1-z) has zero constant term");
    let rhs = Series::nbinom(p, order).mul(&log_term.add(&finite_of_u));
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::harmonic;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    #[test]
    fn laguerre_small() {
        assert_eq!(laguerre(0), Poly::constant(Rat::one()));
        assert_eq!(laguerre(1), Poly::new(vec![Rat::one(), -Rat::one()]));
        assert_eq!(
            laguerre(2),
            Poly::new(vec![Rat::one(), Rat::from(-2), r(1, 2)])
        );
    }

    #[test]
    fn laguerre_three_term_recurrence() {
        // (n+1) L_{n+1}(x) = (2n+1-x) L_n(x) - n L_{n-1}(x)
        let x = Poly::new(vec![Rat::zero(), Rat::one()]);
        for n in 1..=24usize {
            let lhs = laguerre(n + 1).scale(&Rat::from(n + 1));
            let factor = Poly::constant(Rat::from(2 * n as i64 + 1)).sub(&x);
            let rhs = factor
                .mul(&laguerre(n))
                .sub(&laguerre(n - 1).scale(&Rat::from(n)));
            assert_eq!(lhs, rhs, "n={n}");
        }
    }

    #[test]
    fn log_integral_small() {
        assert!(laguerre_log_integral(0).is_zero());
        assert_eq!(laguerre_log_integral(1), Poly::new(vec![Rat::zero(), -Rat::one()]));
        assert_eq!(
            laguerre_log_integral(2),
            Poly::new(vec![Rat::zero(), Rat::from(-2), r(1, 4)])
        );
        for n in 1..=10usize {
            assert_eq!(laguerre_log_integral(n).degree(), Some(n));
        }
    }

    #[test]
    fn log_integral_fundamental_theorem() {
        // x * d/dx [integral] = L_n(x) - 1
        let x = Poly::new(vec![Rat::zero(), Rat::one()]);
        for n in 1..=12usize {
            let lhs = x.mul(&laguerre_log_integral(n).derivative());
            let rhs = laguerre(n).sub(&Poly::constant(Rat::one()));
            assert_eq!(lhs, rhs, "n={n}");
        }
    }

    #[test]
    fn geometric_poly_small() {
        assert_eq!(geometric_poly(0, &r(3, 7)), Poly::constant(Rat::one()));
        assert_eq!(
            geometric_poly(2, &Rat::zero()),
            Poly::new(vec![Rat::zero(), Rat::one(), Rat::from(2)])
        );
        assert_eq!(
            geometric_poly(1, &Rat::from(2)),
            Poly::new(vec![Rat::zero(), Rat::from(3)])
        );
    }

    #[test]
    fn geometric_poly_at_zero_is_factorial_weighted() {
        for m in 0..=8usize {
            let omega = geometric_poly(m, &Rat::zero());
            for k in 0..=m {
                assert_eq!(
                    omega.coeff(k),
                    Rat::from_bigint(stirling2(m, k) * factorial(k))
                );
            }
        }
    }

    #[test]
    fn nbinom_sides_trivial_and_small() {
        let p = r(3, 7);
        let (lhs, rhs) = nbinom_power_series_sides(0, &p, 12);
        assert_eq!(lhs, Series::nbinom(&p, 12));
        assert_eq!(lhs, rhs);

        let (lhs, rhs) = nbinom_power_series_sides(1, &Rat::one(), 12);
        assert_eq!(lhs, rhs);
        for n in 0..=12 {
            assert_eq!(lhs.coeff(n), &Rat::from(n * (n + 1)));
        }

        let (lhs, rhs) = nbinom_power_series_sides(2, &r(1, 2), 12);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn nbinom_sides_grid() {
        let grid = [
            Rat::zero(),
            Rat::one(),
            Rat::from(2),
            Rat::from(3),
            r(1, 2),
            r(-1, 2),
            r(3, 7),
        ];
        for m in 0..=6usize {
            for p in &grid {
                let (lhs, rhs) = nbinom_power_series_sides(m, p, 16);
                assert_eq!(lhs, rhs, "m={m} p={p}");
            }
        }
    }

    #[test]
    fn gamma_reading_fails() {
        // Taking the polynomial coefficient to be S(m,k) * (p+k)! (the
        // unnormalized gamma value at integer p) breaks the generating
        // function identity: at m = 1, p = 2 it yields 6x where the
        // series forces 3x.
        let m = 1usize;
        let p = Rat::from(2);
        let gamma_poly = Poly::new(
            (0..=m)
                .map(|k| Rat::from_bigint(stirling2(m, k) * factorial(2 + k)))
                .collect(),
        );
        assert_eq!(gamma_poly.coeff(1), Rat::from(6));
        assert_eq!(geometric_poly(m, &p).coeff(1), Rat::from(3));

        let order = 8;
        let lhs = Series::from_fn(order, |n| {
            binomial_rat(&(&p + &Rat::from(n)), n) * Rat::from(n)
        });
        let composed = gamma_poly
            .to_series(order)
            .compose(&Series::euler_sub(order))
            .unwrap();
        let rhs_gamma = Series::nbinom(&p, order).mul(&composed);
        assert_ne!(lhs, rhs_gamma);

        let (l, r_ok) = nbinom_power_series_sides(m, &p, order);
        assert_eq!(l, lhs);
        assert_eq!(l, r_ok);
    }

    #[test]
    fn hsum_sides_p_zero() {
        // m = 0: plain harmonic generating function
        let (lhs, rhs) = hsum_closed_form_sides(0, &Rat::zero(), 12).unwrap();
        assert_eq!(lhs, rhs);
        for n in 0..=12 {
            assert_eq!(lhs.coeff(n), &harmonic(n));
        }
        // m = 1: n H_n
        let (lhs, rhs) = hsum_closed_form_sides(1, &Rat::zero(), 12).unwrap();
        assert_eq!(lhs, rhs);
        for n in 0..=12 {
            assert_eq!(lhs.coeff(n), &(harmonic(n) * Rat::from(n)));
        }
    }

    #[test]
    fn hsum_sides_grid() {
        let grid = [
            Rat::zero(),
            Rat::one(),
            Rat::from(2),
            Rat::from(3),
            r(1, 2),
            r(-1, 2),
            r(3, 7),
        ];
        for m in 0..=5usize {
            for p in &grid {
                let (lhs, rhs) = hsum_closed_form_sides(m, p, 16).unwrap();
                assert_eq!(lhs, rhs, "m={m} p={p}");
            }
        }
    }

    #[test]
    fn hsum_pole() {
        assert!(hsum_closed_form_sides(1, &Rat::from(-3), 6).is_err());
    }
}
