//! Exact arithmetic in Q/Z.
//!
//! A `QZElem` is a rational number modulo 1, stored reduced with
//! `0 <= num < den` and `den >= 1`. Equality is literal equality of the
//! reduced representative, so values can be compared and hashed exactly.
//! There is no floating point anywhere in this module.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QZElem {
    num: BigInt,
    den: BigInt,
}

impl QZElem {
    /// Reduced representative of `n/d` mod 1 in `[0, 1)`. Rejects `d = 0`.
    pub fn new(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Self> {
        let n = n.into();
        let d = d.into();
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduce(n, d))
    }

    fn reduce(mut n: BigInt, mut d: BigInt) -> Self {
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        // representative in [0, d)
        n = n.mod_floor(&d);
        let g = n.gcd(&d);
        if !g.is_one() {
            n /= &g;
            d /= &g;
        }
        QZElem { num: n, den: d }
    }

    pub fn zero() -> Self {
        QZElem {
            num: BigInt::zero(),
            den: BigInt::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    /// The representative in `[0, 1)` as an exact rational.
    pub fn as_ratio(&self) -> BigRational {
        BigRational::new(self.num.clone(), self.den.clone())
    }

    /// Class of an exact rational mod 1.
    pub fn from_ratio(r: &BigRational) -> Self {
        Self::reduce(r.numer().clone(), r.denom().clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::reduce(
            &self.num * &other.den + &other.num * &self.den,
            &self.den * &other.den,
        )
    }

    pub fn neg(&self) -> Self {
        Self::reduce(-self.num.clone(), self.den.clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Integer scalar multiple `n * self` in Q/Z.
    pub fn scale(&self, n: &BigInt) -> Self {
        Self::reduce(&self.num * n, self.den.clone())
    }

    pub fn scale_i64(&self, n: i64) -> Self {
        self.scale(&BigInt::from(n))
    }

    /// Sum of a slice, exact.
    pub fn sum<'a>(items: impl IntoIterator<Item = &'a QZElem>) -> Self {
        items.into_iter().fold(QZElem::zero(), |acc, x| acc.add(x))
    }

    /// Parse "p/q" or a bare integer "p".
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n
            .parse()
            .map_err(|_| Error::SpecSyntax(format!("bad rational '{s}'")))?;
        let d: BigInt = d
            .parse()
            .map_err(|_| Error::SpecSyntax(format!("bad rational '{s}'")))?;
        QZElem::new(n, d)
    }

    /// The angle 2*pi*(p/q) as f64, used only for the advisory Gauss sum.
    pub fn angle(&self) -> f64 {
        use num_traits::ToPrimitive;
        let p = self.num.to_f64().unwrap_or(0.0);
        let q = self.den.to_f64().unwrap_or(1.0);
        2.0 * std::f64::consts::PI * p / q
    }
}

impl fmt::Display for QZElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for QZElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Convenience constructor used throughout: `qz(n, d)` is `n/d` mod 1.
pub fn qz(n: i64, d: i64) -> QZElem {
    QZElem::new(n, d).expect("nonzero denominator")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduction_examples() {
        assert_eq!(qz(3, 2), qz(1, 2));
        assert_eq!(qz(-1, 4), qz(3, 4));
        assert_eq!(qz(8, 4), QZElem::zero());
        assert_eq!(qz(2, -4), qz(1, 2));
        assert_eq!(qz(0, 7).to_string(), "0/1");
        assert_eq!(qz(5, 8).to_string(), "5/8");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(QZElem::new(1, 0).is_err());
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0/1", "1/2", "3/8", "5/6"] {
            assert_eq!(QZElem::parse(s).unwrap().to_string(), s);
        }
        assert_eq!(QZElem::parse("7").unwrap(), QZElem::zero());
        assert_eq!(QZElem::parse(" -1/4 ").unwrap(), qz(3, 4));
        assert!(QZElem::parse("1/0").is_err());
        assert!(QZElem::parse("x/2").is_err());
    }

    proptest! {
        #[test]
        fn group_axioms(a in -50i64..50, b in 1i64..40, c in -50i64..50, d in 1i64..40, e in -50i64..50, f in 1i64..40) {
            let x = qz(a, b);
            let y = qz(c, d);
            let z = qz(e, f);
            // associativity, commutativity, identity, inverse
            prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
            prop_assert_eq!(x.add(&y), y.add(&x));
            prop_assert_eq!(x.add(&QZElem::zero()), x.clone());
            prop_assert!(x.add(&x.neg()).is_zero());
        }

        #[test]
        fn scalar_action(a in -50i64..50, b in 1i64..40, n in -20i64..20, m in -20i64..20) {
            let x = qz(a, b);
            // (n + m) x = n x + m x and (n m) x = n (m x)
            prop_assert_eq!(x.scale_i64(n + m), x.scale_i64(n).add(&x.scale_i64(m)));
            prop_assert_eq!(x.scale_i64(n * m), x.scale_i64(m).scale_i64(n));
        }

        #[test]
        fn representative_in_unit_interval(a in -100i64..100, b in 1i64..60) {
            let x = qz(a, b);
            let r = x.as_ratio();
            prop_assert!(r >= num_rational::BigRational::from_integer(0.into()));
            prop_assert!(r < num_rational::BigRational::from_integer(1.into()));
        }
    }
}
