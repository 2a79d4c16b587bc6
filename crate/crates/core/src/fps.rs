//! Truncated formal power series and exact polynomials over rationals.
//!
//! A `Series` is a coefficient vector c_0..c_N; binary operations
//! truncate to the minimum operand order, so "equal up to order N" is
//! the one notion of equality used everywhere. `Poly` is kept separate
//! for statements that are exact polynomial identities rather than
//! truncated-series ones.

use crate::exactnum::{binomial_rat, factorial, Rat};

/// Composition requires the inner series to have zero constant term;
/// anything else is ill-defined for truncated series.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("series composition requires inner constant term 0, found {found}")]
pub struct ComposeError {
    pub found: Rat,
}

/// Truncated formal power series: coefficients c_0..c_N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rat>,
}

impl Series {
    /// Wraps a coefficient vector; `coeffs[n]` is the coefficient of z^n.
    /// Panics on an empty vector (a series always has at least c_0).
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least one coefficient");
        Series { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rat) -> Self {
        Series {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Series::from_fn(order, |_| Rat::zero())
    }

    pub fn one(order: usize) -> Self {
        Series::from_fn(order, |n| if n == 0 { Rat::one() } else { Rat::zero() })
    }

    /// 1/(1-z): all-ones coefficients.
    pub fn geometric(order: usize) -> Self {
        Series::from_fn(order, |_| Rat::one())
    }

    /// (1+z)^alpha with c_n = C(alpha, n).
    pub fn binom_pow(alpha: &Rat, order: usize) -> Self {
        Series::from_fn(order, |n| binomial_rat(alpha, n))
    }

    /// (1+lambda*z)^alpha with c_n = C(alpha, n) lambda^n.
    pub fn binom_pow_scaled(alpha: &Rat, lambda: &Rat, order: usize) -> Self {
        Series::from_fn(order, |n| binomial_rat(alpha, n) * lambda.pow(n))
    }

    /// (1-z)^{-(p+1)} with c_n = C(p+n, n).
    pub fn nbinom(p: &Rat, order: usize) -> Self {
        Series::from_fn(order, |n| binomial_rat(&(p + &Rat::from(n)), n))
    }

    /// log(1+z): c_0 = 0, c_n = (-1)^{n-1}/n.
    pub fn log1p(order: usize) -> Self {
        Series::from_fn(order, |n| {
            if n == 0 {
                Rat::zero()
            } else if n % 2 == 1 {
                Rat::from(n).recip()
            } else {
                -Rat::from(n).recip()
            }
        })
    }

    /// -log(1-z): c_0 = 0, c_n = 1/n.
    pub fn neg_log1m(order: usize) -> Self {
        Series::from_fn(order, |n| if n == 0 { Rat::zero() } else { Rat::from(n).recip() })
    }

    /// e^z with c_n = 1/n!.
    pub fn exp(order: usize) -> Self {
        Series::from_fn(order, |n| Rat::from_bigint(factorial(n)).recip())
    }

    /// t/(1-t): coefficients 0, 1, 1, 1, ...
    pub fn euler_sub(order: usize) -> Self {
        Series::from_fn(order, |n| if n == 0 { Rat::zero() } else { Rat::one() })
    }

    /// z/(1+z): coefficients 0, 1, -1, 1, -1, ...
    pub fn inv_euler_sub(order: usize) -> Self {
        Series::from_fn(order, |n| {
            if n == 0 {
                Rat::zero()
            } else if n % 2 == 1 {
                Rat::one()
            } else {
                -Rat::one()
            }
        })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &Rat {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rat> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    /// Copy truncated (or zero-padded) to the given order.
    pub fn truncated(&self, order: usize) -> Series {
        Series::from_fn(order, |n| {
            self.coeffs.get(n).cloned().unwrap_or_else(Rat::zero)
        })
    }

    pub fn add(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        Series::from_fn(order, |n| &self.coeffs[n] + &other.coeffs[n])
    }

    pub fn sub(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        Series::from_fn(order, |n| &self.coeffs[n] - &other.coeffs[n])
    }

    pub fn scale(&self, c: &Rat) -> Series {
        Series::from_fn(self.order(), |n| c * &self.coeffs[n])
    }

    pub fn neg(&self) -> Series {
        Series::from_fn(self.order(), |n| -&self.coeffs[n])
    }

    /// Cauchy product truncated to the minimum operand order.
    pub fn mul(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        let mut coeffs = vec![Rat::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Series { coeffs }
    }

    /// Coefficientwise product (Hadamard), truncated to the minimum order.
    pub fn hadamard(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        Series::from_fn(order, |n| &self.coeffs[n] * &other.coeffs[n])
    }

    /// self(inner(z)), Horner style. Fails unless inner has c_0 = 0.
    pub fn compose(&self, inner: &Series) -> Result<Series, ComposeError> {
        if !inner.coeffs[0].is_zero() {
            return Err(ComposeError {
                found: inner.coeffs[0].clone(),
            });
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncated(order);
        let mut acc = Series::zero(order);
        // only outer coefficients up to `order` can reach the result
        for k in (0..=order).rev() {
            acc = acc.mul(&inner);
            let c = self
                .coeffs
                .get(k)
                .cloned()
                .unwrap_or_else(Rat::zero);
            acc.coeffs[0] = &acc.coeffs[0] + &c;
        }
        Ok(acc)
    }

    /// c_n = sum_{k<=n} a_k; equals multiplication by 1/(1-z).
    pub fn partial_sums(&self) -> Series {
        let mut acc = Rat::zero();
        Series::from_fn(self.order(), |n| {
            acc = &acc + &self.coeffs[n];
            acc.clone()
        })
    }

    /// Multiplication by (1+lambda*z)^alpha written as the direct double
    /// sum c_n = sum_k C(alpha, n-k) a_k lambda^{n-k}.
    pub fn binom_shift_mul(&self, alpha: &Rat, lambda: &Rat) -> Series {
        Series::from_fn(self.order(), |n| {
            let mut c = Rat::zero();
            for k in 0..=n {
                c = c + binomial_rat(alpha, n - k) * &self.coeffs[k] * lambda.pow(n - k);
            }
            c
        })
    }

    /// Termwise antiderivative with zero constant; order grows by one.
    pub fn integrate(&self) -> Series {
        Series::from_fn(self.order() + 1, |n| {
            if n == 0 {
                Rat::zero()
            } else {
                &self.coeffs[n - 1] / &Rat::from(n)
            }
        })
    }

    /// Termwise derivative; order shrinks by one (order 0 input maps to
    /// the zero series of order 0).
    pub fn differentiate(&self) -> Series {
        if self.order() == 0 {
            return Series::zero(0);
        }
        Series::from_fn(self.order() - 1, |n| &self.coeffs[n + 1] * &Rat::from(n + 1))
    }
}

/// Exact univariate polynomial; coefficient of x^k at index k, no
/// trailing zeros (empty vector = zero polynomial).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..len).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Poly::new(coeffs)
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * &Rat::from(i + 1))
                .collect(),
        )
    }

    /// Embeds into a truncated series, zero-padding or dropping high
    /// coefficients as needed.
    pub fn to_series(&self, order: usize) -> Series {
        Series::from_fn(order, |n| self.coeff(n))
    }
}
