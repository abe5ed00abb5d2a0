use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Moduli are kept below 2^32 so residue products fit in a `u64`.
pub const MAX_MODULUS: u64 = u32::MAX as u64;

/// The ground field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Field {
    #[serde(rename = "Q")]
    Rational,
    #[serde(rename = "Fp")]
    Prime { p: u64 },
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// The prime field of order `p`. Composite and oversized moduli are rejected.
    pub fn prime(p: u64) -> Result<Field> {
        if p > MAX_MODULUS || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime { p })
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime { p } => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_int(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(Rational::from_int(n)),
            Field::Prime { p } => Scalar::Fp {
                value: n.rem_euclid(*p as i64) as u64,
                p: *p,
            },
        }
    }

    /// `num/den` in this field; fails when `den` vanishes in the field.
    pub fn fraction(&self, num: i64, den: i64) -> Result<Scalar> {
        let d = self.from_int(den);
        Ok(self.from_int(num).mul_ref(&d.inv()?))
    }

    /// Parses the interchange representation: `"num/den"` or `"num"` over ℚ,
    /// a decimal integer (reduced mod p) over 𝔽_p.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let err = |message: String| Error::Parse {
            location: format!("scalar {s:?}"),
            message,
        };
        match self {
            Field::Rational => s.parse::<Rational>().map(Scalar::Q).map_err(err),
            Field::Prime { p } => {
                let t = s.trim();
                if t.contains('/') {
                    let (n, d) = t.split_once('/').unwrap();
                    let n = self.parse(n)?;
                    let d = self.parse(d)?;
                    return d
                        .inv()
                        .map(|d| n.mul_ref(&d))
                        .map_err(|_| err("zero denominator".into()));
                }
                let v: i128 = t.parse().map_err(|_| err("not an integer".into()))?;
                Ok(Scalar::Fp {
                    value: v.rem_euclid(*p as i128) as u64,
                    p: *p,
                })
            }
        }
    }

    /// Whether `n · 1` is invertible.
    pub fn int_is_unit(&self, n: i64) -> bool {
        !self.from_int(n).is_zero()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime { p } => write!(f, "F_{p}"),
        }
    }
}

/// An exact element of ℚ or 𝔽_p.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(Rational),
    Fp { value: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::Fp { p, .. } => Field::Prime { p: *p },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp { value, .. } => *value == 1,
        }
    }

    pub fn add_ref(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.add(b)),
            (Scalar::Fp { value: a, p }, Scalar::Fp { value: b, p: q }) if p == q => Scalar::Fp {
                value: (a + b) % p,
                p: *p,
            },
            _ => panic!("field mismatch: {} vs {}", self.field(), other.field()),
        }
    }

    pub fn sub_ref(&self, other: &Scalar) -> Scalar {
        self.add_ref(&other.neg_ref())
    }

    pub fn mul_ref(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.mul(b)),
            (Scalar::Fp { value: a, p }, Scalar::Fp { value: b, p: q }) if p == q => Scalar::Fp {
                value: (a * b) % p,
                p: *p,
            },
            _ => panic!("field mismatch: {} vs {}", self.field(), other.field()),
        }
    }

    pub fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(a.neg()),
            Scalar::Fp { value, p } => Scalar::Fp {
                value: (p - value) % p,
                p: *p,
            },
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Q(a) => a.inv().map(Scalar::Q).ok_or(Error::DivisionByZero),
            Scalar::Fp { value, p } => {
                if *value == 0 {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar::Fp {
                    value: pow_mod(*value, p - 2, *p),
                    p: *p,
                })
            }
        }
    }

    pub fn div_ref(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self.mul_ref(&other.inv()?))
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, exp: i64) -> Result<Scalar> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = self.field().one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&sq);
            }
            sq = sq.mul_ref(&sq);
            e >>= 1;
        }
        Ok(acc)
    }

    /// The rational value, when this is a ℚ scalar.
    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Q(r) => Some(r),
            Scalar::Fp { .. } => None,
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => write!(f, "{r}"),
            Scalar::Fp { value, .. } => write!(f, "{value}"),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$inner(rhs)
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$inner(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$inner(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$inner(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composite_moduli_are_rejected() {
        assert_eq!(Field::prime(15), Err(Error::NotPrime(15)));
        assert_eq!(Field::prime(1), Err(Error::NotPrime(1)));
        assert!(Field::prime(13).is_ok());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(Field::Rational.zero().inv(), Err(Error::DivisionByZero));
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.from_int(10).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn residues_stay_reduced() {
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.from_int(-1).to_string(), "4");
        let two = f5.from_int(2);
        assert_eq!((two.inv().unwrap() * f5.from_int(3)).to_string(), "4");
        assert_eq!(f5.parse("17").unwrap(), f5.from_int(2));
    }

    #[test]
    fn rational_strings() {
        let q = Field::Rational;
        assert_eq!(q.parse("-2/4").unwrap().to_string(), "-1/2");
        assert_eq!(q.parse("7").unwrap().to_string(), "7");
        assert!(q.parse("1/0").is_err());
    }

    #[test]
    fn pow_handles_negative_exponents() {
        let q = Field::Rational;
        assert_eq!(q.from_int(2).pow(-2).unwrap(), q.fraction(1, 4).unwrap());
        let f13 = Field::prime(13).unwrap();
        assert!(f13.from_int(3).pow(3).unwrap().is_one());
    }
}
