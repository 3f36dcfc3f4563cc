//! Exact univariate arithmetic in `t`: dense integer polynomials, truncated
//! power series, q-Pochhammer products and Gaussian binomial coefficients.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Truncation order used when the caller does not choose one.
pub const DEFAULT_ORDER: usize = 50;

/// A polynomial in `t` with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `t^i`. The highest stored coefficient is
/// never zero, so the zero polynomial is the empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * t^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c;
        Self { coeffs }
    }

    /// `1 - t^exp`. For `exp == 0` this is the zero polynomial.
    pub fn one_minus_tpow(exp: usize) -> Self {
        &Self::one() - &Self::monomial(1, exp)
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^exp`, zero beyond the degree.
    pub fn coeff(&self, exp: usize) -> BigInt {
        self.coeffs.get(exp).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Multiply by `t^exp`.
    pub fn shift(&self, exp: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder or needs non-integer coefficients.
    pub fn div_exact(&self, divisor: &QPolynomial) -> Option<QPolynomial> {
        let d = divisor.degree()?;
        let Some(n) = self.degree() else {
            return Some(Self::zero());
        };
        if n < d {
            return None;
        }
        let lead = &divisor.coeffs[d];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - d + 1];
        for i in (0..=n - d).rev() {
            let top = &rem[i + d];
            if top.is_zero() {
                continue;
            }
            if !(top % lead).is_zero() {
                return None;
            }
            let q = top / lead;
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * dc;
            }
            quot[i] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Self::from_coeffs(quot))
        } else {
            None
        }
    }

    /// Lowest exponent at which the two polynomials differ.
    pub fn first_difference(&self, other: &QPolynomial) -> Option<usize> {
        first_difference(&self.coeffs, &other.coeffs)
    }
}

fn first_difference(a: &[BigInt], b: &[BigInt]) -> Option<usize> {
    let zero = BigInt::zero();
    (0..a.len().max(b.len())).find(|&i| a.get(i).unwrap_or(&zero) != b.get(i).unwrap_or(&zero))
}

impl Add<&QPolynomial> for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Add for QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: QPolynomial) -> QPolynomial {
        &self + &rhs
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;

    fn neg(self) -> QPolynomial {
        QPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub<&QPolynomial> for &QPolynomial {
    type Output = QPolynomial;

    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        self + &(-rhs)
    }
}

impl Sub for QPolynomial {
    type Output = QPolynomial;

    fn sub(self, rhs: QPolynomial) -> QPolynomial {
        &self - &rhs
    }
}

impl Mul<&QPolynomial> for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: QPolynomial) -> QPolynomial {
        &self * &rhs
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(&self.coeffs))
    }
}

/// Renders `c0 + c1 t + ...` in ascending powers, skipping zero terms.
fn render_terms(coeffs: &[BigInt]) -> String {
    let mut out = String::new();
    for (e, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mag = c.abs();
        if e == 0 || !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        match e {
            0 => {}
            1 => out.push('t'),
            _ => {
                out.push_str("t^");
                out.push_str(&e.to_string());
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// The product `(t^m; t)_n = (1 - t^m)(1 - t^{m+1}) ... (1 - t^{m+n-1})`.
///
/// `qpochhammer(1, n)` is `(t;t)_n`.
pub fn qpochhammer(m: usize, n: usize) -> QPolynomial {
    (0..n).fold(QPolynomial::one(), |acc, j| {
        &acc * &QPolynomial::one_minus_tpow(m + j)
    })
}

static GAUSS_CACHE: LazyLock<RwLock<HashMap<(usize, usize), QPolynomial>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// The Gaussian binomial `[a over b]` in `t`.
///
/// Total: zero when `a < 0`, `b < 0` or `b > a`. Built from the Pascal
/// recurrence `[a, b] = [a-1, b-1] + t^b [a-1, b]` with a process-wide cache.
pub fn gauss_binomial(a: i64, b: i64) -> QPolynomial {
    if a < 0 || b < 0 || b > a {
        return QPolynomial::zero();
    }
    pascal(a as usize, b as usize)
}

fn pascal(a: usize, b: usize) -> QPolynomial {
    if b == 0 || b == a {
        return QPolynomial::one();
    }
    if let Some(p) = GAUSS_CACHE
        .read()
        .expect("gauss cache poisoned")
        .get(&(a, b))
    {
        return p.clone();
    }
    let p = &pascal(a - 1, b - 1) + &pascal(a - 1, b).shift(b);
    GAUSS_CACHE
        .write()
        .expect("gauss cache poisoned")
        .insert((a, b), p.clone());
    p
}

/// `[a over b]` as `(t;t)_a / ((t;t)_b (t;t)_{a-b})` by exact division.
///
/// Independent of [`gauss_binomial`]; used to cross-check it. Panics if the
/// division is not exact, which would mean the arithmetic itself is broken.
pub fn gauss_binomial_by_quotient(a: i64, b: i64) -> QPolynomial {
    if a < 0 || b < 0 || b > a {
        return QPolynomial::zero();
    }
    let (a, b) = (a as usize, b as usize);
    let den = &qpochhammer(1, b) * &qpochhammer(1, a - b);
    qpochhammer(1, a)
        .div_exact(&den)
        .unwrap_or_else(|| panic!("(t;t)_{a} not divisible by (t;t)_{b}(t;t)_{}", a - b))
}

/// A power series in `t` known exactly through `t^order`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    order: usize,
    coeffs: Vec<BigInt>,
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    order: usize,
    coeffs: Vec<String>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Builds a series from leading coefficients, zero-padding or truncating
    /// to `order`.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<BigInt>) -> Self {
        coeffs.resize(order + 1, BigInt::zero());
        Self { order, coeffs }
    }

    pub fn from_i64s(order: usize, coeffs: &[i64]) -> Self {
        Self::from_coeffs(order, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_poly(p: &QPolynomial, order: usize) -> Self {
        Self::from_coeffs(order, p.coeffs.iter().take(order + 1).cloned().collect())
    }

    /// `1 / (1 - t^i)`: ones at multiples of `i`.
    pub fn inv_one_minus_tpow(i: i64, order: usize) -> Result<Self> {
        if i <= 0 {
            return Err(Error::NonPositiveExponent(i));
        }
        let mut s = Self::zero(order);
        for e in (0..=order).step_by(i as usize) {
            s.coeffs[e] = BigInt::one();
        }
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: usize) -> &BigInt {
        &self.coeffs[exp]
    }

    fn check_order(&self, other: &TruncSeries) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(TruncSeries {
            order: self.order,
            coeffs,
        })
    }

    pub fn sub(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(TruncSeries {
            order: self.order,
            coeffs,
        })
    }

    /// Truncated product; both operands must share the same order.
    pub fn mul(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.check_order(other)?;
        let n = self.order;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Ok(TruncSeries { order: n, coeffs })
    }

    /// Multiply by `t^exp`, dropping what falls past the order.
    pub fn shift(&self, exp: usize) -> TruncSeries {
        let mut s = Self::zero(self.order);
        if exp <= self.order {
            s.coeffs[exp..].clone_from_slice(&self.coeffs[..=self.order - exp]);
        }
        s
    }

    pub fn first_difference(&self, other: &TruncSeries) -> Option<usize> {
        first_difference(&self.coeffs, &other.coeffs)
    }

    /// Header-free `exponent,coefficient` rows, one per line.
    pub fn to_csv(&self) -> String {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(e, c)| format!("{e},{c}"))
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// `{"order":N,"coeffs":["c0",...]}` with decimal-string coefficients.
    pub fn to_json(&self) -> String {
        let json = SeriesJson {
            order: self.order,
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        };
        serde_json::to_string(&json).expect("series serializes")
    }

    pub fn from_json(text: &str) -> Result<TruncSeries> {
        let json: SeriesJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if json.coeffs.len() != json.order + 1 {
            return Err(Error::Parse(format!(
                "order {} needs {} coefficients, found {}",
                json.order,
                json.order + 1,
                json.coeffs.len()
            )));
        }
        let coeffs = json
            .coeffs
            .iter()
            .map(|c| {
                c.parse::<BigInt>()
                    .map_err(|e| Error::Parse(format!("{c:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TruncSeries {
            order: json.order,
            coeffs,
        })
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(&self.coeffs))
    }
}
