//! Exact integer polynomials and a few floating-point polynomial helpers.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A monic polynomial with integer coefficients, stored lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// `None` unless the leading coefficient is 1. Trailing zeros are dropped.
    pub fn new(mut coeffs: Vec<BigInt>) -> Option<Self> {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        coeffs.last().filter(|c| c.is_one())?;
        Some(IntPoly { coeffs })
    }

    pub fn from_i64(coeffs: &[i64]) -> Option<Self> {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    /// `y - root`.
    pub fn linear(root: i64) -> Self {
        IntPoly {
            coeffs: vec![BigInt::from(-root), BigInt::one()],
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients, constant term first.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> &BigInt {
        &self.coeffs[0]
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn eval(&self, y: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * y + c)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly { coeffs: out }
    }

    pub fn pow(&self, e: usize) -> IntPoly {
        (0..e).fold(IntPoly::one(), |acc, _| acc.mul(self))
    }

    /// Exact quotient by `y - root`, or `None` if `root` is not a root.
    pub fn divide_by_root(&self, root: &BigInt) -> Option<IntPoly> {
        if self.degree() == 0 {
            return None;
        }
        let d = self.degree();
        let mut quotient = vec![BigInt::zero(); d];
        let mut carry = BigInt::zero();
        for i in (0..=d).rev() {
            let value = &self.coeffs[i] + &carry * root;
            if i == 0 {
                return value.is_zero().then_some(IntPoly { coeffs: quotient });
            }
            quotient[i - 1] = value.clone();
            carry = value;
        }
        unreachable!()
    }

    /// Coefficients as `i64`, if they all fit.
    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }

    pub fn to_f64_vec(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    /// Decides whether every root is an integer by repeatedly dividing out
    /// `y` and `y - r` for integer divisors `r` of the constant term.
    pub fn has_only_integer_roots(&self) -> bool {
        let mut p = self.clone();
        loop {
            if p.is_one() {
                return true;
            }
            if p.constant_term().is_zero() {
                p = p.divide_by_root(&BigInt::zero()).expect("0 is a root");
                continue;
            }
            match p.find_integer_root() {
                Some(r) => p = p.divide_by_root(&r).expect("root was verified"),
                None => return false,
            }
        }
    }

    fn find_integer_root(&self) -> Option<BigInt> {
        let c0 = self.constant_term().abs();
        // Cauchy: every root has |r| <= 1 + max |c_i|
        let cauchy = self.coeffs[..self.degree()]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
            + BigInt::one();
        let bound = if cauchy < c0 { cauchy } else { c0.clone() };
        let mut d = BigInt::one();
        while d <= bound {
            if c0.is_multiple_of(&d) {
                for r in [d.clone(), -d.clone()] {
                    if self.eval(&r).is_zero() {
                        return Some(r);
                    }
                }
            }
            d += 1;
        }
        None
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && self.coeffs.len() > 1 {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !mag.is_one() || i == 0 {
                out.push_str(&alloc::format!("{mag}"));
            }
            match i {
                0 => {}
                1 => out.push('y'),
                _ => out.push_str(&alloc::format!("y^{i}")),
            }
        }
        f.write_str(&out)
    }
}

/// `a * b` for coefficient vectors stored constant term first.
pub fn mul_f64(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Quotient of `p` by `y - root`, remainder discarded.
///
/// Deflates from the top for `|root| <= 1` and from the constant term
/// otherwise, which keeps rounding errors from being amplified by `root`.
pub fn divide_by_root_f64(p: &[f64], root: f64) -> Vec<f64> {
    let d = p.len() - 1;
    let mut quotient = vec![0.0; d];
    if root.abs() <= 1.0 {
        let mut carry = 0.0;
        for i in (1..=d).rev() {
            let value = p[i] + carry * root;
            quotient[i - 1] = value;
            carry = value;
        }
    } else {
        // p_k = q_{k-1} - root * q_k
        let mut prev = 0.0;
        for (k, q) in quotient.iter_mut().enumerate() {
            *q = (prev - p[k]) / root;
            prev = *q;
        }
    }
    quotient
}

/// Whether `x` is the square of an integer.
pub fn is_perfect_square(x: u64) -> bool {
    let r = num_integer::Roots::sqrt(&x);
    r * r == x
}
