//! Exact scalars in `ℚ[α, β]/(α² + β² − 1)`, stored as `P(α) + β·Q(α)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::literal::format_rational;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct AlphaBeta {
    even: Vec<BigRational>,
    odd: Vec<BigRational>,
}

fn trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn poly_add(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    trim(&mut out);
    out
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// `(1 − α²)^m` in powers of α.
fn one_minus_alpha_sq(m: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); 2 * m + 1];
    let mut c = BigInt::one();
    for i in 0..=m {
        let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        out[2 * i] = BigRational::from_integer(&c * sign);
        c = c * BigInt::from(m - i) / BigInt::from(i + 1);
    }
    out
}

impl AlphaBeta {
    pub fn zero() -> Self {
        AlphaBeta::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut even = vec![c];
        trim(&mut even);
        AlphaBeta { even, odd: Vec::new() }
    }

    /// `c · α^a β^b`.
    pub fn monomial(c: BigRational, a: usize, b: usize) -> Self {
        let mut base = vec![BigRational::zero(); a + 1];
        base[a] = c;
        let p = poly_mul(&base, &one_minus_alpha_sq(b / 2));
        if b % 2 == 0 {
            AlphaBeta { even: p, odd: Vec::new() }
        } else {
            AlphaBeta { even: Vec::new(), odd: p }
        }
    }

    /// `Σ_k c_k x^k` with `x = α²`.
    pub fn from_x_poly(coeffs: &[BigInt]) -> Self {
        let mut even = vec![BigRational::zero(); 2 * coeffs.len()];
        for (k, c) in coeffs.iter().enumerate() {
            even[2 * k] = BigRational::from_integer(c.clone());
        }
        trim(&mut even);
        AlphaBeta { even, odd: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_empty() && self.odd.is_empty()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        AlphaBeta {
            even: self.even.iter().map(|x| x * c).collect(),
            odd: self.odd.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplies by `α^a β^b`.
    pub fn mul_monomial(&self, a: usize, b: usize) -> Self {
        self * &Self::monomial(BigRational::one(), a, b)
    }

    pub fn eval(&self, alpha: f64) -> f64 {
        let beta = (1.0 - alpha * alpha).sqrt();
        let horner = |p: &[BigRational]| p.iter().rev().fold(0.0, |acc, c| acc * alpha + c.to_f64().unwrap_or(f64::NAN));
        horner(&self.even) + beta * horner(&self.odd)
    }

    /// Exact value at a rational `α` when `β` drops out.
    pub fn eval_exact_even(&self, alpha: &BigRational) -> Option<BigRational> {
        if !self.odd.is_empty() {
            return None;
        }
        Some(self.even.iter().rev().fold(BigRational::zero(), |acc, c| acc * alpha + c))
    }
}

impl Add for &AlphaBeta {
    type Output = AlphaBeta;
    fn add(self, o: &AlphaBeta) -> AlphaBeta {
        AlphaBeta { even: poly_add(&self.even, &o.even), odd: poly_add(&self.odd, &o.odd) }
    }
}

impl Neg for &AlphaBeta {
    type Output = AlphaBeta;
    fn neg(self) -> AlphaBeta {
        self.scale(&-BigRational::one())
    }
}

impl Sub for &AlphaBeta {
    type Output = AlphaBeta;
    fn sub(self, o: &AlphaBeta) -> AlphaBeta {
        self + &(-o)
    }
}

impl Mul for &AlphaBeta {
    type Output = AlphaBeta;
    fn mul(self, o: &AlphaBeta) -> AlphaBeta {
        // (P1 + βQ1)(P2 + βQ2) = P1P2 + (1−α²)Q1Q2 + β(P1Q2 + Q1P2)
        let qq = poly_mul(&poly_mul(&self.odd, &o.odd), &one_minus_alpha_sq(1));
        AlphaBeta {
            even: poly_add(&poly_mul(&self.even, &o.even), &qq),
            odd: poly_add(&poly_mul(&self.even, &o.odd), &poly_mul(&self.odd, &o.even)),
        }
    }
}

impl fmt::Display for AlphaBeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (beta, p) in [("", &self.even), ("β", &self.odd)] {
            for (i, c) in p.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mono = match i {
                    0 => String::new(),
                    1 => "α".into(),
                    _ => format!("α^{i}"),
                } + beta;
                let mag = c.abs();
                let coef = if mag.is_one() && !mono.is_empty() { String::new() } else { format_rational(&mag) };
                terms.push((c.is_negative(), format!("{coef}{mono}")));
            }
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (neg, t)) in terms.iter().enumerate() {
            match (i, neg) {
                (0, true) => write!(f, "-{t}")?,
                (0, false) => write!(f, "{t}")?,
                (_, true) => write!(f, " - {t}")?,
                (_, false) => write!(f, " + {t}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlphaBeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64) -> BigRational {
        BigRational::from_integer(a.into())
    }

    #[test]
    fn beta_squared_reduces() {
        let b2 = AlphaBeta::monomial(r(1), 0, 2);
        let one_minus = &AlphaBeta::one() - &AlphaBeta::monomial(r(1), 2, 0);
        assert_eq!(b2, one_minus);
        let b = AlphaBeta::monomial(r(1), 0, 1);
        assert_eq!(&b * &b, b2);
        let a2 = AlphaBeta::monomial(r(1), 2, 0);
        assert_eq!(&a2 + &b2, AlphaBeta::one());
    }

    #[test]
    fn evaluation_and_display() {
        let x = &AlphaBeta::monomial(r(2), 1, 1) + &AlphaBeta::monomial(r(1), 4, 0);
        let a = 0.6f64;
        assert!((x.eval(a) - (2.0 * a * 0.8 + a.powi(4))).abs() < 1e-15);
        assert_eq!(x.to_string(), "α^4 + 2αβ");
        assert_eq!(AlphaBeta::from_x_poly(&[0.into(), 0.into(), 1.into()]).to_string(), "α^4");
    }
}
