use std::cmp::Ordering;
use std::fmt;

use dashu::base::{BitTest, Gcd, SquareRoot};
use dashu::integer::{IBig, UBig};
use dashu::rational::RBig;

use super::precision::{pow2, signum, Enclosure};
use crate::error::{Error, Result};

/// Exact quadratic irrational `(a + b·√d) / r`.
///
/// Canonical form: `r > 0`, `gcd(a, b, r) = 1`, and either `d` is a
/// non-square with small square factors pulled into `b`, or the value is
/// rational (`b = 0`, `d = 1`). Field operations require both operands to
/// share `d` (rationals mix with anything); comparison is exact across fields.
#[derive(Clone, Debug)]
pub struct QuadraticSurd {
    a: IBig,
    b: IBig,
    d: UBig,
    r: IBig,
}

/// Trial-division bound for pulling square factors out of radicands.
const SQUARE_FACTOR_BOUND: u64 = 1 << 12;

impl QuadraticSurd {
    pub fn new(a: IBig, b: IBig, d: UBig, r: IBig) -> Result<Self> {
        if r == IBig::ZERO {
            return Err(Error::DivisionByZero);
        }
        if d == UBig::ZERO {
            return Err(Error::BadRadicand(d.to_string()));
        }
        Ok(Self::normalize(a, b, d, r, true))
    }

    pub fn from_rational(x: &RBig) -> Self {
        Self::normalize(
            x.numerator().clone(),
            IBig::ZERO,
            UBig::ONE,
            IBig::from(x.denominator().clone()),
            false,
        )
    }

    pub fn from_int(n: i64) -> Self {
        Self::normalize(IBig::from(n), IBig::ZERO, UBig::ONE, IBig::ONE, false)
    }

    /// `√n`, exact; rational when `n` is a perfect square.
    pub fn sqrt(n: UBig) -> Self {
        Self::normalize(IBig::ZERO, IBig::ONE, n, IBig::ONE, true)
    }

    /// `reduce_radicand` is only needed for radicands not already produced by
    /// a previous normalisation.
    fn normalize(mut a: IBig, mut b: IBig, mut d: UBig, mut r: IBig, reduce_radicand: bool) -> Self {
        if b != IBig::ZERO && reduce_radicand {
            let mut p = 2u64;
            while p <= SQUARE_FACTOR_BOUND {
                let p2 = UBig::from(p * p);
                if p2 > d {
                    break;
                }
                while (&d % &p2) == UBig::ZERO {
                    d /= &p2;
                    b *= IBig::from(p);
                }
                p += if p == 2 { 1 } else { 2 };
            }
            let s = d.sqrt();
            if &s * &s == d {
                a += &b * IBig::from(s);
                b = IBig::ZERO;
            }
        }
        if b == IBig::ZERO {
            d = UBig::ONE;
            if a == IBig::ZERO {
                return QuadraticSurd { a, b, d, r: IBig::ONE };
            }
        }
        if signum(&r) < 0 {
            a = -a;
            b = -b;
            r = -r;
        }
        let g = IBig::from((&a).gcd(&b).gcd(&r));
        if g > IBig::ONE {
            a /= &g;
            b /= &g;
            r /= &g;
        }
        QuadraticSurd { a, b, d, r }
    }

    pub fn parts(&self) -> (&IBig, &IBig, &UBig, &IBig) {
        (&self.a, &self.b, &self.d, &self.r)
    }

    pub fn is_rational(&self) -> bool {
        self.b == IBig::ZERO
    }

    pub fn radicand(&self) -> &UBig {
        &self.d
    }

    pub fn to_rational(&self) -> Option<RBig> {
        self.is_rational()
            .then(|| RBig::from_parts_signed(self.a.clone(), self.r.clone()))
    }

    fn common_field(&self, other: &Self) -> Result<UBig> {
        if self.is_rational() {
            Ok(other.d.clone())
        } else if other.is_rational() || self.d == other.d {
            Ok(self.d.clone())
        } else {
            Err(Error::FieldMismatch(self.d.to_string(), other.d.to_string()))
        }
    }

    pub fn same_field(&self, other: &Self) -> bool {
        self.common_field(other).is_ok()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let d = self.common_field(other)?;
        Ok(Self::normalize(
            &self.a * &other.r + &other.a * &self.r,
            &self.b * &other.r + &other.b * &self.r,
            d,
            &self.r * &other.r,
            false,
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let d = self.common_field(other)?;
        let dd = IBig::from(d.clone());
        Ok(Self::normalize(
            &self.a * &other.a + &self.b * &other.b * dd,
            &self.a * &other.b + &other.a * &self.b,
            d,
            &self.r * &other.r,
            false,
        ))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.recip()?)
    }

    pub fn neg(&self) -> Self {
        QuadraticSurd {
            a: -&self.a,
            b: -&self.b,
            d: self.d.clone(),
            r: self.r.clone(),
        }
    }

    /// Galois conjugate `(a - b√d) / r`.
    pub fn conj(&self) -> Self {
        QuadraticSurd {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d.clone(),
            r: self.r.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        // r / (a + b√d) = r (a - b√d) / (a² - b² d)
        let norm = &self.a * &self.a - &self.b * &self.b * IBig::from(self.d.clone());
        if norm == IBig::ZERO {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(
            &self.r * &self.a,
            -(&self.r * &self.b),
            self.d.clone(),
            norm,
            false,
        ))
    }

    pub fn add_int(&self, n: i64) -> Self {
        Self::normalize(
            &self.a + IBig::from(n) * &self.r,
            self.b.clone(),
            self.d.clone(),
            self.r.clone(),
            false,
        )
    }

    /// Exact sign (-1, 0, 1).
    pub fn signum(&self) -> i8 {
        sign_of(&self.a, &self.b, &self.d)
    }

    /// Certified rational enclosure of width at most `2^-bits`.
    pub fn enclosure(&self, bits: usize) -> Enclosure {
        if self.is_rational() {
            return Enclosure::point(RBig::from_parts_signed(self.a.clone(), self.r.clone()));
        }
        let bits = bits + self.b.clone().into_parts().1.bit_len() + 1;
        let scaled: UBig = &self.d << (2 * bits);
        let s = scaled.sqrt();
        let grid = pow2(-(bits as isize));
        let root_lo = RBig::from(s.clone()) * &grid;
        let root_hi = RBig::from(s + UBig::ONE) * &grid;
        let a = RBig::from(self.a.clone());
        let b = RBig::from(self.b.clone());
        let r = RBig::from(self.r.clone());
        let (x, y) = ((&a + &b * &root_lo) / &r, (&a + &b * &root_hi) / &r);
        if x <= y {
            Enclosure::new(x, y)
        } else {
            Enclosure::new(y, x)
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.enclosure(64).to_f64()
    }

    /// Exact floor of the value.
    pub fn floor(&self) -> IBig {
        let mut bits = 64;
        loop {
            let e = self.enclosure(bits);
            let (lo, hi) = (e.lo.floor(), e.hi.floor());
            if lo == hi {
                return lo;
            }
            // Rational values can sit exactly on an integer.
            if let Some(q) = self.to_rational() {
                return q.floor();
            }
            bits *= 2;
        }
    }
}

/// Exact sign of `u + v·√d` for `d` a non-square (or `v = 0`).
fn sign_of(u: &IBig, v: &IBig, d: &UBig) -> i8 {
    let (su, sv) = (signum(u), signum(v));
    if sv == 0 {
        return su;
    }
    if su == 0 || su == sv {
        return sv;
    }
    let lhs = u * u;
    let rhs = v * v * IBig::from(d.clone());
    match lhs.cmp(&rhs) {
        Ordering::Greater => su,
        Ordering::Less => sv,
        Ordering::Equal => 0,
    }
}

/// Exact sign of `u + v·√d1 - w·√d2`.
fn sign_of_two(u: &IBig, v: &IBig, d1: &UBig, w: &IBig, d2: &UBig) -> i8 {
    if signum(w) == 0 {
        return sign_of(u, v, d1);
    }
    if signum(v) == 0 {
        return sign_of(u, &-w, d2);
    }
    if d1 == d2 {
        return sign_of(u, &(v - w), d1);
    }
    let sl = sign_of(u, v, d1);
    let sr = signum(w);
    if sl != sr {
        return if sl > sr { 1 } else { -1 };
    }
    // Same nonzero sign: compare squares.
    let d1i = IBig::from(d1.clone());
    let d2i = IBig::from(d2.clone());
    let rational = u * u + v * v * &d1i - w * w * &d2i;
    let irrational = IBig::from(2) * u * v;
    sl * sign_of(&rational, &irrational, d1)
}

impl PartialEq for QuadraticSurd {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for QuadraticSurd {}

impl PartialOrd for QuadraticSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadraticSurd {
    fn cmp(&self, other: &Self) -> Ordering {
        let u = &self.a * &other.r - &other.a * &self.r;
        let v = &self.b * &other.r;
        let w = &other.b * &self.r;
        match sign_of_two(&u, &v, &self.d, &w, &other.d) {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let root = if self.b == IBig::ONE {
            format!("sqrt({})", self.d)
        } else if self.b == -IBig::ONE {
            format!("-sqrt({})", self.d)
        } else {
            format!("{}*sqrt({})", self.b, self.d)
        };
        let terms = match (self.a == IBig::ZERO, self.is_rational()) {
            (_, true) => (self.a.to_string(), false),
            (true, false) => (root, false),
            (false, false) => {
                let sep = if signum(&self.b) < 0 { " - " } else { " + " };
                (format!("{}{sep}{}", self.a, root.trim_start_matches('-')), true)
            }
        };
        if self.r == IBig::ONE {
            f.write_str(&terms.0)
        } else if terms.1 {
            write!(f, "({})/{}", terms.0, self.r)
        } else {
            write!(f, "{}/{}", terms.0, self.r)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(a: i64, b: i64, d: u64, r: i64) -> QuadraticSurd {
        QuadraticSurd::new(a.into(), b.into(), d.into(), r.into()).unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(QuadraticSurd::sqrt(8u8.into()).parts(), s(0, 2, 2, 1).parts());
        assert!(QuadraticSurd::sqrt(9u8.into()).is_rational());
        assert_eq!(QuadraticSurd::sqrt(9u8.into()), QuadraticSurd::from_int(3));
        let x = s(2, 4, 5, -6);
        assert_eq!(x.parts(), s(-1, -2, 5, 3).parts());
        assert_eq!(x.to_string(), "(-1 - 2*sqrt(5))/3");
        assert_eq!(
            QuadraticSurd::sqrt(221u8.into())
                .div(&QuadraticSurd::from_int(5))
                .unwrap()
                .to_string(),
            "sqrt(221)/5"
        );
    }

    #[test]
    fn golden_ratio_identities() {
        let phi = s(1, 1, 5, 2);
        let inv = phi.recip().unwrap();
        assert_eq!(inv, s(-1, 1, 5, 2));
        assert_eq!(phi.add(&inv).unwrap(), QuadraticSurd::sqrt(5u8.into()));
        assert_eq!(phi.mul(&phi).unwrap(), phi.add_int(1));
        assert_eq!(phi.floor(), IBig::ONE);
    }

    #[test]
    fn cross_field_comparison() {
        let r12 = QuadraticSurd::sqrt(12u8.into());
        let r13 = QuadraticSurd::sqrt(13u8.into());
        let t = s(65, 9, 3, 22);
        assert!(r12 < r13);
        assert!(r13 < t);
        assert!(r12 < t);
        assert_eq!(r12, s(0, 2, 3, 1));
        assert!(s(3, 0, 1, 1) < QuadraticSurd::sqrt(10u8.into()));
        assert!(QuadraticSurd::sqrt(2u8.into())
            .add(&QuadraticSurd::sqrt(3u8.into()))
            .is_err());
    }

    #[test]
    fn enclosure_brackets_value() {
        let x = s(-1, 1, 2, 1);
        let e = x.enclosure(100);
        assert!(e.width() <= pow2(-99));
        let f = e.to_f64();
        assert!((f - (2f64.sqrt() - 1.0)).abs() < 1e-15);
        assert!(s(1, -3, 7, 2).enclosure(40).lo < s(1, -3, 7, 2).enclosure(40).hi);
    }

    #[test]
    fn recip_of_zero_fails() {
        assert_eq!(QuadraticSurd::from_int(0).recip(), Err(Error::DivisionByZero));
    }
}
