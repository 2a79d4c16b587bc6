//! Exact scalar arithmetic: arbitrary-precision rationals and the
//! integer/rational special sequences (binomial coefficients, harmonic
//! numbers, Stirling numbers of the second kind, rising factorials).

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Mutex;

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exact rational number in canonical form: positive denominator,
/// numerator and denominator coprime. Canonicalization is maintained by
/// the underlying `BigRational` after every operation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    /// Builds `num/den`. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Rat(BigRational::new(num, den))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// True when the value is an integer `<= 0` (a digamma pole site).
    pub fn is_nonpositive_integer(&self) -> bool {
        self.is_integer() && !self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        Rat(self.0.recip())
    }

    /// Nonnegative integer power.
    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = Rat::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Renders the value in scientific notation with `sig` significant
    /// digits, rounding half away from zero. Used only for display; the
    /// value itself stays exact.
    pub fn to_decimal(&self, sig: usize) -> String {
        assert!(sig >= 1);
        if self.is_zero() {
            return "0".to_string();
        }
        let neg = self.0.is_negative();
        let num = self.numer().abs();
        let den = self.denom().clone();
        // decimal exponent e with 10^e <= |x| < 10^{e+1}
        let mut e = num.to_string().len() as i64 - den.to_string().len() as i64;
        let ten = BigInt::from(10);
        let scaled = |e: i64| -> (BigInt, BigInt) {
            // compare |x| with 10^e without losing exactness
            if e >= 0 {
                (num.clone(), &den * ten.pow(e as u32))
            } else {
                (&num * ten.pow((-e) as u32), den.clone())
            }
        };
        loop {
            let (a, b) = scaled(e);
            if a < b {
                e -= 1;
            } else if a >= &b * &ten {
                e += 1;
            } else {
                break;
            }
        }
        // first `sig` digits, rounded
        let shift = sig as i64 - 1 - e;
        let (mut a, b) = if shift >= 0 {
            (&num * ten.pow(shift as u32), den.clone())
        } else {
            (num.clone(), &den * ten.pow((-shift) as u32))
        };
        let rem = &a % &b;
        a = &a / &b;
        if &rem * 2 >= b {
            a += 1;
        }
        let mut digits = a.to_string();
        if digits.len() > sig {
            // rounding carried over (e.g. 9.99 -> 10.0)
            e += 1;
            digits.truncate(sig);
        }
        let mantissa = if sig == 1 {
            digits
        } else {
            format!("{}.{}", &digits[..1], &digits[1..])
        };
        format!("{}{}e{}", if neg { "-" } else { "" }, mantissa, e)
    }
}

impl From<i32> for Rat {
    fn from(n: i32) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<usize> for Rat {
    fn from(n: usize) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Self {
        Rat::from_bigint(n)
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((self.0).$method(rhs.0))
            }
        }
        impl $trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
    };
}

impl_binop!(Add, add);
impl_binop!(Sub, sub);
impl_binop!(Mul, mul);
impl_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl fmt::Display for Rat {
    /// Wire format: `"p/q"` with the sign on the numerator, or `"p"`
    /// when the denominator is 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {input:?}")]
pub struct ParseRatError {
    pub input: String,
}

impl FromStr for Rat {
    type Err = ParseRatError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRatError {
            input: s.to_string(),
        };
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num = BigInt::from_str(num).map_err(|_| err())?;
        let den = BigInt::from_str(den).map_err(|_| err())?;
        if den.sign() != Sign::Plus {
            return Err(err());
        }
        Ok(Rat(BigRational::new(num, den)))
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A harmonic-number difference hit a digamma pole: some shifted
/// argument landed on a nonpositive integer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("digamma pole at argument {arg}")]
pub struct PoleError {
    pub arg: Rat,
}

/// C(n, k) for integer n >= 0. Out-of-range k yields 0, matching the
/// summation conventions where such terms vanish.
pub fn binomial_int(n: usize, k: i64) -> Rat {
    if k < 0 || k as usize > n {
        return Rat::zero();
    }
    let k = (k as usize).min(n - k as usize);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rat::from_bigint(acc)
}

/// Generalized binomial coefficient C(alpha, k) = alpha(alpha-1)...(alpha-k+1)/k!.
pub fn binomial_rat(alpha: &Rat, k: usize) -> Rat {
    let mut acc = Rat::one();
    for i in 0..k {
        acc = acc * (alpha - &Rat::from(i)) / Rat::from(i + 1);
    }
    acc
}

/// H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0.
pub fn harmonic(n: usize) -> Rat {
    let mut acc = Rat::zero();
    for k in 1..=n {
        acc = acc + Rat::from(k as i64).recip();
    }
    acc
}

/// H_{p+n} - H_p = sum_{k=1..n} 1/(p+k), exact for rational p.
pub fn harmonic_diff(p: &Rat, n: usize) -> Result<Rat, PoleError> {
    let mut acc = Rat::zero();
    for k in 1..=n {
        let term = p + &Rat::from(k);
        if term.is_zero() {
            return Err(PoleError { arg: p + &Rat::from(k) });
        }
        acc = acc + term.recip();
    }
    Ok(acc)
}

/// H_alpha + H_n - H_{alpha+n} = alpha * sum_{k=1..n} 1/(k(k+alpha)).
pub fn harmonic_symm(alpha: &Rat, n: usize) -> Result<Rat, PoleError> {
    let mut acc = Rat::zero();
    for k in 1..=n {
        let shifted = alpha + &Rat::from(k);
        if shifted.is_zero() {
            return Err(PoleError { arg: shifted });
        }
        acc = acc + (Rat::from(k) * shifted).recip();
    }
    Ok(alpha * &acc)
}

// Memoized rows of the Stirling triangle. The cache is write-locked per
// lookup; results are identical under any interleaving.
static STIRLING_CACHE: Mutex<Option<HashMap<(usize, usize), BigInt>>> = Mutex::new(None);

/// Stirling number of the second kind S(m, k), via the recurrence
/// S(m, k) = k*S(m-1, k) + S(m-1, k-1).
pub fn stirling2(m: usize, k: usize) -> BigInt {
    if k > m {
        return BigInt::zero();
    }
    if m == 0 {
        return BigInt::one(); // S(0,0)
    }
    if k == 0 {
        return BigInt::zero();
    }
    let mut guard = STIRLING_CACHE.lock().unwrap();
    let cache = guard.get_or_insert_with(HashMap::new);
    fn go(cache: &mut HashMap<(usize, usize), BigInt>, m: usize, k: usize) -> BigInt {
        if k > m {
            return BigInt::zero();
        }
        if m == 0 || k == m {
            return BigInt::one();
        }
        if k == 0 {
            return BigInt::zero();
        }
        if let Some(v) = cache.get(&(m, k)) {
            return v.clone();
        }
        let v = go(cache, m - 1, k) * BigInt::from(k) + go(cache, m - 1, k - 1);
        cache.insert((m, k), v.clone());
        v
    }
    go(cache, m, k)
}

/// Rising factorial (p+1)(p+2)...(p+k); 1 when k = 0. The exact-rational
/// surrogate for the gamma-function ratio Gamma(p+k+1)/Gamma(p+1).
pub fn rising_factorial(p: &Rat, k: usize) -> Rat {
    let mut acc = Rat::one();
    for i in 1..=k {
        acc = acc * (p + &Rat::from(i));
    }
    acc
}

/// n! as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}
