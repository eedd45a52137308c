//! Sparse polynomials in `x, y` with big-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exponent pairs `(i, j)` for `x^i y^j` mapped to non-zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polynomial2 {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl Polynomial2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(i: u32, j: u32) -> Self {
        Self::term(BigInt::one(), i, j)
    }

    pub fn term(c: BigInt, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(c, i, j);
        p
    }

    pub fn constant(c: i64) -> Self {
        Self::term(BigInt::from(c), 0, 0)
    }

    pub fn add_term(&mut self, c: BigInt, i: u32, j: u32) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The exponent pair if this is a single monomial with coefficient 1.
    pub fn as_monomial(&self) -> Option<(u32, u32)> {
        match self.terms.iter().next() {
            Some((&e, c)) if self.terms.len() == 1 && c.is_one() => Some(e),
            _ => None,
        }
    }

    pub fn eval(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (&(i, j), c) in &self.terms {
            acc += BigRational::from_integer(c.clone()) * Pow::pow(x, i) * Pow::pow(y, j);
        }
        acc
    }
}

impl Add for &Polynomial2 {
    type Output = Polynomial2;

    fn add(self, rhs: &Polynomial2) -> Polynomial2 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&Polynomial2> for Polynomial2 {
    fn add_assign(&mut self, rhs: &Polynomial2) {
        for (&(i, j), c) in &rhs.terms {
            self.add_term(c.clone(), i, j);
        }
    }
}

impl Neg for &Polynomial2 {
    type Output = Polynomial2;

    fn neg(self) -> Polynomial2 {
        Polynomial2 { terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect() }
    }
}

impl Sub for &Polynomial2 {
    type Output = Polynomial2;

    fn sub(self, rhs: &Polynomial2) -> Polynomial2 {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial2 {
    type Output = Polynomial2;

    fn mul(self, rhs: &Polynomial2) -> Polynomial2 {
        let mut out = Polynomial2::zero();
        for (&(i, j), c) in &self.terms {
            for (&(k, l), d) in &rhs.terms {
                out.add_term(c * d, i + k, j + l);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (&(i, j), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let abs = c.abs();
            let mut factors = Vec::new();
            if !abs.is_one() || (i == 0 && j == 0) {
                factors.push(abs.to_string());
            }
            for (var, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

/// Serialized as a list of `[i, j, "coeff"]`.
impl Serialize for Polynomial2 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<(u32, u32, String)> = self.terms.iter().map(|(&(i, j), c)| (i, j, c.to_string())).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial2 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Vec<(u32, u32, String)> = Vec::deserialize(d)?;
        let mut p = Polynomial2::zero();
        for (i, j, c) in v {
            p.add_term(c.parse::<BigInt>().map_err(D::Error::custom)?, i, j);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let x = Polynomial2::x();
        let y = Polynomial2::y();
        let p = &(&x * &y) * &y;
        assert_eq!(p.to_string(), "x*y^2");
        assert_eq!(p.as_monomial(), Some((1, 2)));
        let q = &(&y * &y) * &(&x - &Polynomial2::one());
        assert_eq!(q.to_string(), "x*y^2 - y^2");
        assert!((&q - &q).is_zero());
        assert_eq!(Polynomial2::zero().to_string(), "0");
        assert_eq!(Polynomial2::constant(-3).to_string(), "-3");
    }

    #[test]
    fn eval_and_json() {
        let q = &(&Polynomial2::y() * &Polynomial2::y()) * &(&Polynomial2::x() - &Polynomial2::one());
        let two = BigRational::from_integer(2.into());
        let one = BigRational::one();
        assert_eq!(q.eval(&two, &one), one);
        let js = serde_json::to_string(&q).unwrap();
        assert_eq!(js, r#"[[0,2,"-1"],[1,2,"1"]]"#);
        let back: Polynomial2 = serde_json::from_str(&js).unwrap();
        assert_eq!(back, q);
    }
}
