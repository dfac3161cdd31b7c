use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{AlgebraError, Result};

/// Default characteristic for rings that do not name a field explicitly.
pub const DEFAULT_PRIME: u32 = 32003;

/// Coefficient field: a prime field `F_p` or the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Prime(u32),
    Rational,
}

/// A field element. The variant always matches the owning ring's [`Field`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Fp(u32),
    Q(BigRational),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

impl Field {
    /// `F_p` for a prime `2 <= p < 2^31`.
    pub fn prime(p: u64) -> Result<Field> {
        if p >= (1u64 << 31) || !is_prime(p) {
            return Err(AlgebraError::InvalidCharacteristic(p));
        }
        Ok(Field::Prime(p as u32))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Prime(p) => *p,
            Field::Rational => 0,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Prime(_) => Scalar::Fp(0),
            Field::Rational => Scalar::Q(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Prime(_) => Scalar::Fp(1),
            Field::Rational => Scalar::Q(BigRational::one()),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            Field::Prime(p) => {
                let r = n % BigInt::from(*p);
                let r = if r.is_negative() { r + BigInt::from(*p) } else { r };
                Scalar::Fp(r.to_u32().expect("residue fits in u32"))
            }
            Field::Rational => Scalar::Q(BigRational::from_integer(n.clone())),
        }
    }

    /// Image of a rational number; fails when the denominator vanishes mod p.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar> {
        let num = self.from_bigint(q.numer());
        let den = self.from_bigint(q.denom());
        if self.is_zero(&den) {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self.mul(&num, &self.inv(&den)?))
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Fp(v) => *v == 0,
            Scalar::Q(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Fp(v) => *v == 1,
            Scalar::Q(q) => q.is_one(),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp(((*x as u64 + *y as u64) % *p as u64) as u32),
            (Field::Rational, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x + y),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Prime(p), Scalar::Fp(x)) => Scalar::Fp(if *x == 0 { 0 } else { p - x }),
            (Field::Rational, Scalar::Q(x)) => Scalar::Q(-x),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp(((*x as u64 * *y as u64) % *p as u64) as u32),
            (Field::Rational, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x * y),
            _ => panic!("scalar does not belong to {self}"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if self.is_zero(a) {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(match (self, a) {
            (Field::Prime(p), Scalar::Fp(x)) => {
                // Fermat: x^(p-2)
                let (mut base, mut exp, mut acc) = (*x as u64, *p as u64 - 2, 1u64);
                let m = *p as u64;
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % m;
                    }
                    base = base * base % m;
                    exp >>= 1;
                }
                Scalar::Fp(acc as u32)
            }
            (Field::Rational, Scalar::Q(x)) => Scalar::Q(x.recip()),
            _ => panic!("scalar does not belong to {self}"),
        })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Symmetric representative used when printing prime-field coefficients,
    /// so `-1` prints as `-1` rather than `p - 1`.
    pub fn signed_repr(&self, a: &Scalar) -> BigRational {
        match (self, a) {
            (Field::Prime(p), Scalar::Fp(x)) => {
                let v = if *x > p / 2 { *x as i64 - *p as i64 } else { *x as i64 };
                BigRational::from_integer(BigInt::from(v))
            }
            (_, Scalar::Q(q)) => q.clone(),
            _ => panic!("scalar does not belong to {self}"),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "F{p}"),
            Field::Rational => write!(f, "QQ"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composite_and_oversized_characteristic() {
        assert!(Field::prime(32003).is_ok());
        assert!(Field::prime(2).is_ok());
        assert!(matches!(Field::prime(1), Err(AlgebraError::InvalidCharacteristic(1))));
        assert!(Field::prime(32004).is_err());
        assert!(Field::prime(2147483659).is_err());
    }

    #[test]
    fn prime_field_inverse() {
        let f = Field::Prime(7);
        for v in 1..7 {
            let a = Scalar::Fp(v);
            assert!(f.is_one(&f.mul(&a, &f.inv(&a).unwrap())));
        }
        assert!(f.inv(&Scalar::Fp(0)).is_err());
    }

    #[test]
    fn negative_integers_reduce_mod_p() {
        let f = Field::Prime(7);
        assert_eq!(f.from_i64(-1), Scalar::Fp(6));
        assert_eq!(f.signed_repr(&Scalar::Fp(6)), BigRational::from_integer((-1).into()));
    }

    #[test]
    fn rational_image_in_prime_field() {
        let f = Field::Prime(7);
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(f.from_rational(&half).unwrap(), Scalar::Fp(4));
        let seventh = BigRational::new(1.into(), 7.into());
        assert!(f.from_rational(&seventh).is_err());
    }
}
