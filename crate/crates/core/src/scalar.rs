//! Exact scalars: arbitrary-precision rationals and Gaussian rationals `Q(i)`.
//!
//! Every structure constant, base-change entry and decision-procedure value in
//! this crate is a [`GaussianRational`]. There is no floating point in any
//! result; the only place an `f64` appears is [`GaussianRational::exact_root`],
//! which uses it to propose candidates that are then checked exactly.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Reduced fraction with positive denominator.
pub type Rational = num_rational::BigRational;

/// Formats a rational as `p/q`, omitting `/1`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `-p`, `p/q` or `-p/q`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational literal {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if den.is_negative() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// An element `re + im·i` of `Q(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        GaussianRational::new(Rational::zero(), Rational::one())
    }

    pub fn from_int(v: i64) -> Self {
        GaussianRational::new(Rational::from_integer(v.into()), Rational::zero())
    }

    pub fn from_ratio(p: i64, q: i64) -> Self {
        GaussianRational::new(Rational::new(p.into(), q.into()), Rational::zero())
    }

    /// `(p1/q1) + (p2/q2) i`.
    pub fn from_parts(p1: i64, q1: i64, p2: i64, q2: i64) -> Self {
        GaussianRational::new(
            Rational::new(p1.into(), q1.into()),
            Rational::new(p2.into(), q2.into()),
        )
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational::new(re, Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    /// `re² + im²`.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(GaussianRational::new(&self.re / &n, -&self.im / &n))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Square-and-multiply power; negative exponents invert first.
    pub fn pow(&self, k: i64) -> Result<Self> {
        let mut base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = GaussianRational::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// True iff the value is one of the roots of unity of `Q(i)`: ±1, ±i.
    pub fn is_root_of_unity(&self) -> bool {
        self.norm().is_one() && (self.re.is_zero() || self.im.is_zero())
    }

    /// Order of `self` as a root of unity, or `None` if it is not one.
    pub fn unit_order(&self) -> Option<u32> {
        if !self.is_root_of_unity() {
            return None;
        }
        if self.is_one() {
            Some(1)
        } else if self.im.is_zero() {
            Some(2)
        } else {
            Some(4)
        }
    }

    /// Some `z` in `Q(i)` with `z^d = self`, if one exists and can be found.
    ///
    /// If `D` is the least positive integer with `D·self ∈ Z[i]`, then every
    /// root `z ∈ Q(i)` satisfies `D·z ∈ Z[i]`, so the search reduces to a
    /// Gaussian-integer root of `D^d·self` with norm `N(D^d·self)^(1/d)`.
    /// Candidates come from a floating-point estimate and are kept only when
    /// `z^d == self` holds exactly; `None` is returned when no candidate checks
    /// out (including when the magnitude is beyond `f64` rounding range).
    pub fn exact_root(&self, d: u32) -> Option<Self> {
        if d == 0 {
            return None;
        }
        if d == 1 || self.is_zero() {
            return Some(self.clone());
        }
        let den = self.re.denom().lcm(self.im.denom());
        let scale = Rational::from_integer(den.pow(d));
        let target = GaussianRational::new(&self.re * &scale, &self.im * &scale);
        let (tr, ti) = (target.re.to_integer(), target.im.to_integer());
        let norm = &tr * &tr + &ti * &ti;
        let root_norm = norm.nth_root(d);
        if root_norm.pow(d) != norm {
            return None;
        }
        let den_q = Rational::from_integer(den);
        let check = |a: BigInt, b: BigInt| -> Option<GaussianRational> {
            let z = GaussianRational::new(
                Rational::new(a, den_q.to_integer()),
                Rational::new(b, den_q.to_integer()),
            );
            (z.pow(d as i64).ok()? == *self).then_some(z)
        };
        // radius = sqrt(root_norm); angles (arg + 2πk)/d
        let radius = root_norm.sqrt();
        let radius_f = root_norm.to_f64()?.sqrt();
        if !radius_f.is_finite() || radius_f > 2f64.powi(50) {
            return None;
        }
        let (xf, yf) = scaled_f64(&tr, &ti);
        let theta = yf.atan2(xf);
        let mut tried = std::collections::BTreeSet::new();
        for k in 0..d {
            let phi = (theta + 2.0 * std::f64::consts::PI * k as f64) / d as f64;
            let (ca, cb) = (
                (radius_f * phi.cos()).round() as i64,
                (radius_f * phi.sin()).round() as i64,
            );
            for da in -1..=1 {
                for db in -1..=1 {
                    let (a, b) = (ca + da, cb + db);
                    if !tried.insert((a, b)) {
                        continue;
                    }
                    let (ba, bb) = (BigInt::from(a), BigInt::from(b));
                    if &ba * &ba + &bb * &bb != root_norm {
                        continue;
                    }
                    if let Some(z) = check(ba, bb) {
                        return Some(z);
                    }
                }
            }
        }
        // Purely real/imaginary roots whose magnitude is the integer root.
        if &radius * &radius == root_norm {
            for (a, b) in [
                (radius.clone(), BigInt::zero()),
                (-radius.clone(), BigInt::zero()),
                (BigInt::zero(), radius.clone()),
                (BigInt::zero(), -radius.clone()),
            ] {
                if let Some(z) = check(a, b) {
                    return Some(z);
                }
            }
        }
        None
    }

    /// Parses `3`, `-1/2`, `i`, `-2i`, `1/2+3i`, `1-i/2`, `2/3 i`.
    pub fn parse(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty scalar literal".into()));
        }
        // split at a sign that is not leading and not after '/'
        let bytes = compact.as_bytes();
        let mut split = None;
        for idx in (1..bytes.len()).rev() {
            if (bytes[idx] == b'+' || bytes[idx] == b'-') && bytes[idx - 1] != b'/' {
                split = Some(idx);
                break;
            }
        }
        let parts: Vec<&str> = match split {
            Some(idx) => vec![&compact[..idx], &compact[idx..]],
            None => vec![&compact[..]],
        };
        let mut out = GaussianRational::zero();
        let mut seen_re = false;
        let mut seen_im = false;
        for part in parts {
            let part = part.strip_prefix('+').unwrap_or(part);
            if part.contains('i') {
                if seen_im {
                    return Err(Error::Parse(format!("invalid scalar literal {s:?}")));
                }
                seen_im = true;
                out.im = parse_imaginary(part)
                    .map_err(|_| Error::Parse(format!("invalid scalar literal {s:?}")))?;
            } else {
                if seen_re {
                    return Err(Error::Parse(format!("invalid scalar literal {s:?}")));
                }
                seen_re = true;
                out.re = parse_rational(part)?;
            }
        }
        Ok(out)
    }
}

fn parse_imaginary(part: &str) -> Result<Rational> {
    // forms: i, -i, 3i, -3/2i, i/2, 3i/2, -i/2
    let (sign, body) = match part.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, part),
    };
    let (before, after) = body
        .split_once('i')
        .ok_or_else(|| Error::Parse(part.into()))?;
    let coeff = if before.is_empty() {
        Rational::one()
    } else {
        parse_rational(before)?
    };
    let coeff = match after {
        "" => coeff,
        rest => {
            let q = rest
                .strip_prefix('/')
                .ok_or_else(|| Error::Parse(part.into()))?;
            let q = parse_rational(q)?;
            if q.is_zero() {
                return Err(Error::DivisionByZero);
            }
            coeff / q
        }
    };
    Ok(if sign < 0 { -coeff } else { coeff })
}

/// Approximates `(x, y)` as a pair of `f64` sharing one scale, so that the
/// angle survives even when both are beyond `f64` range.
fn scaled_f64(x: &BigInt, y: &BigInt) -> (f64, f64) {
    let bits = x.bits().max(y.bits());
    let shift = bits.saturating_sub(1000);
    let xs = (x >> shift).to_f64().unwrap_or(0.0);
    let ys = (y >> shift).to_f64().unwrap_or(0.0);
    (xs, ys)
}

/// `x^k`; errors when `x = 0` and `k < 0`.
pub fn int_pow(x: &GaussianRational, k: i64) -> Result<GaussianRational> {
    x.pow(k)
}

/// `Π bases[i]^exponents[i]`.
pub fn power_product(bases: &[GaussianRational], exponents: &[i64]) -> Result<GaussianRational> {
    if bases.len() != exponents.len() {
        return Err(Error::DimensionMismatch {
            expected: bases.len(),
            found: exponents.len(),
        });
    }
    let mut acc = GaussianRational::one();
    for (b, &e) in bases.iter().zip(exponents) {
        if e != 0 {
            acc = &acc * &b.pow(e)?;
        }
    }
    Ok(acc)
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", format_rational(&self.re)),
            (true, false) => write!(f, "{}i", format_rational(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(
                    f,
                    "{}{}{}i",
                    format_rational(&self.re),
                    sign,
                    format_rational(&self.im.abs())
                )
            }
        }
    }
}

impl FromStr for GaussianRational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        GaussianRational::parse(s)
    }
}

impl From<i64> for GaussianRational {
    fn from(v: i64) -> Self {
        GaussianRational::from_int(v)
    }
}

impl From<Rational> for GaussianRational {
    fn from(v: Rational) -> Self {
        GaussianRational::real(v)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &'a GaussianRational) -> GaussianRational {
                let f: fn(&GaussianRational, &GaussianRational) -> GaussianRational = $body;
                f(self, rhs)
            }
        }
        impl $tr<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &'a GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| GaussianRational::new(
    &a.re + &b.re,
    &a.im + &b.im
));
forward_binop!(Sub, sub, |a, b| GaussianRational::new(
    &a.re - &b.re,
    &a.im - &b.im
));
forward_binop!(Mul, mul, |a, b| {
    if a.im.is_zero() && b.im.is_zero() {
        return GaussianRational::real(&a.re * &b.re);
    }
    GaussianRational::new(&a.re * &b.re - &a.im * &b.im, &a.re * &b.im + &a.im * &b.re)
});

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational::zero()
    }
    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        GaussianRational::one()
    }
}

#[derive(Serialize, Deserialize)]
struct GaussianJson {
    re: String,
    im: String,
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GaussianJson {
            re: format_rational(&self.re),
            im: format_rational(&self.im),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = GaussianJson::deserialize(d)?;
        let re = parse_rational(&raw.re).map_err(D::Error::custom)?;
        let im = parse_rational(&raw.im).map_err(D::Error::custom)?;
        Ok(GaussianRational::new(re, im))
    }
}

/// Sign helper used by the graded identities: `(-1)^(a·b)` for parities.
pub fn graded_sign(a: bool, b: bool) -> i64 {
    if a && b {
        -1
    } else {
        1
    }
}
