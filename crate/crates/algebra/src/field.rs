use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// Exact coefficient field used by the polynomial and linear-algebra code.
pub trait Field: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;
    fn from_rational(q: &Rational) -> Self;

    fn from_i64(v: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(v)))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    /// Square root of -1, when the field contains one that the parser should accept as `i`.
    fn imaginary_unit() -> Option<Self> {
        None
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

/// Element `re + im·i` of the Gaussian rationals Q(i).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussianRational {
            re: Rational::from_integer(re.into()),
            im: Rational::from_integer(im.into()),
        }
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1)
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -&self.im }
    }

    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        Zero::is_zero(&self.im)
    }

    /// Exact square root in Q(i), if one exists.
    pub fn sqrt(&self) -> Option<Self> {
        if Field::is_zero(self) {
            return Some(Self::zero());
        }
        let modulus = rational_sqrt(&self.norm())?;
        let two = Rational::from_integer(2.into());
        // x² = (re + |z|)/2, y² = (|z| - re)/2, sign(xy) = sign(im)
        let x = rational_sqrt(&((&self.re + &modulus) / &two))?;
        let y = rational_sqrt(&((&modulus - &self.re) / &two))?;
        let y = if self.im.is_negative() { -y } else { y };
        let r = GaussianRational { re: x, im: y };
        if Field::mul(&r, &r) == *self {
            Some(r)
        } else {
            None
        }
    }
}

pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = int_sqrt(q.numer())?;
    let d = int_sqrt(q.denom())?;
    Some(Rational::new(n, d))
}

fn int_sqrt(n: &BigInt) -> Option<BigInt> {
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

impl Field for GaussianRational {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        GaussianRational { re: One::one(), im: Zero::zero() }
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn add(&self, o: &Self) -> Self {
        GaussianRational { re: &self.re + &o.re, im: &self.im + &o.im }
    }
    fn sub(&self, o: &Self) -> Self {
        GaussianRational { re: &self.re - &o.re, im: &self.im - &o.im }
    }
    fn mul(&self, o: &Self) -> Self {
        if Zero::is_zero(&self.im) && Zero::is_zero(&o.im) {
            return GaussianRational { re: &self.re * &o.re, im: Zero::zero() };
        }
        GaussianRational {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
    fn neg(&self) -> Self {
        GaussianRational { re: -&self.re, im: -&self.im }
    }
    fn inv(&self) -> Self {
        assert!(!Field::is_zero(self), "inverse of zero");
        let n = self.norm();
        GaussianRational { re: &self.re / &n, im: -&self.im / &n }
    }
    fn from_rational(q: &Rational) -> Self {
        GaussianRational { re: q.clone(), im: Zero::zero() }
    }
    fn imaginary_unit() -> Option<Self> {
        Some(Self::i())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (Zero::is_zero(&self.re), Zero::is_zero(&self.im)) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                if self.im.is_negative() {
                    write!(f, "({}-{}i)", self.re, -&self.im)
                } else {
                    write!(f, "({}+{}i)", self.re, self.im)
                }
            }
        }
    }
}

/// Prime field Z/PZ for a prime `P < 2^63`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Fp<const P: u64>(pub u64);

pub const PRIME_A: u64 = 2_305_843_009_213_693_951; // 2^61 - 1
pub const PRIME_B: u64 = 4_611_686_018_427_387_847; // 2^62 - 57

pub type FpA = Fp<PRIME_A>;
pub type FpB = Fp<PRIME_B>;

impl<const P: u64> Fp<P> {
    pub fn new(v: u64) -> Self {
        Fp(v % P)
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = Field::mul(&acc, &base);
            }
            base = Field::mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Reduces a rational into the field. Returns `None` if the denominator vanishes mod P.
    pub fn try_from_rational(q: &Rational) -> Option<Self> {
        let p = BigInt::from(P);
        let reduce = |v: &BigInt| -> u64 {
            let r = ((v % &p) + &p) % &p;
            u64::try_from(r).expect("residue fits")
        };
        let d = Fp::<P>(reduce(q.denom()));
        if d.0 == 0 {
            return None;
        }
        Some(Field::mul(&Fp::<P>(reduce(q.numer())), &d.inv()))
    }
}

impl<const P: u64> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, o: &Self) -> Self {
        let s = self.0 as u128 + o.0 as u128;
        Fp((s % P as u128) as u64)
    }
    fn sub(&self, o: &Self) -> Self {
        if self.0 >= o.0 {
            Fp(self.0 - o.0)
        } else {
            Fp(P - (o.0 - self.0))
        }
    }
    fn mul(&self, o: &Self) -> Self {
        Fp(((self.0 as u128 * o.0 as u128) % P as u128) as u64)
    }
    fn neg(&self) -> Self {
        if self.0 == 0 {
            *self
        } else {
            Fp(P - self.0)
        }
    }
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        self.pow(P - 2)
    }
    fn from_rational(q: &Rational) -> Self {
        Self::try_from_rational(q).expect("denominator divisible by the field characteristic")
    }
    fn from_i64(v: i64) -> Self {
        if v >= 0 {
            Fp::new(v as u64)
        } else {
            Fp::new(v.unsigned_abs()).neg()
        }
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
