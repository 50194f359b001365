//! Hurwitz integer quaternions.
//!
//! Values are stored by their *doubled* coordinates: the quaternion
//! `(d0 + d1 i + d2 j + d3 k) / 2`. Lipschitz integers have four even
//! doubled coordinates, the half-odd Hurwitz integers four odd ones, and
//! mixed parity is never representable.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Which side a unit, divisor or quotient sits on.
///
/// The meaning is fixed per operation:
/// * associates: `Left` is `u = ε v`, `Right` is `u = v ε`;
/// * division: `Right` solves `a = b q + r`, `Left` solves `a = q b + r`;
/// * gcds: `Right` generates the left ideal `Hα + Hβ = Hg` (a common right
///   divisor), `Left` the right ideal `αH + βH = gH`;
/// * multiples: `Left` tests `α ∈ δH`, `Right` tests `α ∈ Hδ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

/// An exact element of the Hurwitz order.
///
/// Ordering is lexicographic on the doubled quadruple; it is the canonical
/// ordering used for associate selection and enumeration output.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HurwitzQuaternion {
    doubled: [BigInt; 4],
}

impl HurwitzQuaternion {
    /// Builds a value from doubled coordinates, rejecting mixed parity.
    pub fn from_doubled(doubled: [BigInt; 4]) -> Result<Self> {
        let parity = doubled[0].is_odd();
        if doubled.iter().any(|d| d.is_odd() != parity) {
            return Err(Error::MixedParity);
        }
        Ok(HurwitzQuaternion { doubled })
    }

    /// Convenience wrapper around [`from_doubled`](Self::from_doubled).
    pub fn make(
        d0: impl Into<BigInt>,
        d1: impl Into<BigInt>,
        d2: impl Into<BigInt>,
        d3: impl Into<BigInt>,
    ) -> Result<Self> {
        Self::from_doubled([d0.into(), d1.into(), d2.into(), d3.into()])
    }

    /// The Lipschitz integer `a + b i + c j + d k`.
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Self {
        Self::from_coords([a.into(), b.into(), c.into(), d.into()])
    }

    pub fn from_coords(coords: [BigInt; 4]) -> Self {
        HurwitzQuaternion {
            doubled: coords.map(|c| c << 1),
        }
    }

    pub(crate) fn from_doubled_unchecked(doubled: [BigInt; 4]) -> Self {
        debug_assert!(Self::from_doubled(doubled.clone()).is_ok());
        HurwitzQuaternion { doubled }
    }

    pub fn zero() -> Self {
        Self::new(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Self::new(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::new(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::new(0, 0, 0, 1)
    }

    /// `(1 + i + j + k) / 2`.
    pub fn omega() -> Self {
        HurwitzQuaternion {
            doubled: [1, 1, 1, 1].map(BigInt::from),
        }
    }

    pub fn doubled(&self) -> &[BigInt; 4] {
        &self.doubled
    }

    pub fn is_zero(&self) -> bool {
        self.doubled.iter().all(Zero::is_zero)
    }

    pub fn is_lipschitz(&self) -> bool {
        self.doubled[0].is_even()
    }

    /// Integer coordinates `[a, b, c, d]`, or `None` for half-odd values.
    pub fn lipschitz_coords(&self) -> Option<[BigInt; 4]> {
        self.is_lipschitz()
            .then(|| self.doubled.clone().map(|d| d >> 1))
    }

    pub(crate) fn require_lipschitz(&self) -> Result<[BigInt; 4]> {
        self.lipschitz_coords().ok_or(Error::NotLipschitz)
    }

    pub fn conj(&self) -> Self {
        let [a, b, c, d] = &self.doubled;
        HurwitzQuaternion {
            doubled: [a.clone(), -b, -c, -d],
        }
    }

    /// `u ū`, always a nonnegative integer.
    pub fn norm(&self) -> BigInt {
        self.doubled.iter().map(|d| d * d).sum::<BigInt>() >> 2
    }

    /// Euclidean inner product `u·v = (u v̄ + v ū) / 2`, a half-integer.
    pub fn inner_product(&self, other: &Self) -> HalfInteger {
        let dot: BigInt = self
            .doubled
            .iter()
            .zip(&other.doubled)
            .map(|(x, y)| x * y)
            .sum();
        // dot of doubled coordinates is 4 (u·v) and always even
        HalfInteger::from_twice(dot >> 1)
    }

    /// Multiplies by a rational integer.
    pub fn scale(&self, factor: &BigInt) -> Self {
        let doubled = self.doubled.clone().map(|d| d * factor);
        // an even factor can turn a half-odd value Lipschitz, never the reverse
        HurwitzQuaternion { doubled }
    }

    /// Exact division by a nonzero rational integer, if the result is Hurwitz.
    pub fn div_integer(&self, divisor: &BigInt) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let mut out = self.doubled.clone();
        for d in out.iter_mut() {
            let (q, r) = d.div_rem(divisor);
            if !r.is_zero() {
                return None;
            }
            *d = q;
        }
        Self::from_doubled(out).ok()
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// Largest positive integer `m` such that `u / m` is still Hurwitz,
    /// together with whether that content is 1.
    pub fn content(&self) -> Result<(BigInt, bool)> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let g = self
            .doubled
            .iter()
            .fold(BigInt::zero(), |acc, d| acc.gcd(d));
        let all_odd = self.doubled.iter().all(|d| (d / &g).is_odd());
        let content = if all_odd { g } else { g >> 1 };
        let primitive = content.is_one();
        Ok((content, primitive))
    }

    /// gcd of the four integer coordinates of a Lipschitz value.
    pub fn coordinate_gcd(&self) -> Result<BigInt> {
        let coords = self.require_lipschitz()?;
        Ok(coords.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c)))
    }

    /// `gcd(a, b, c, d, m) = 1` for a Lipschitz value.
    pub fn is_primitive_mod(&self, m: &BigInt) -> Result<bool> {
        if !m.is_positive() {
            return Err(Error::precondition("modulus must be positive"));
        }
        Ok(self.coordinate_gcd()?.gcd(m).is_one())
    }

    /// `u = ε v` (`Left`) or `u = v ε` (`Right`) for one of the 24 units.
    pub fn is_associate(&self, other: &Self, side: Side) -> bool {
        associate_unit(self, other, side).is_some()
    }

    /// The lexicographically smallest of `ε u` (`Left`) or `u ε` (`Right`),
    /// returned with the unit that produces it.
    pub fn canonical_associate(&self, side: Side) -> (Self, Self) {
        units()
            .iter()
            .map(|e| {
                let a = match side {
                    Side::Left => e * self,
                    Side::Right => self * e,
                };
                (a, e.clone())
            })
            .min_by(|x, y| x.0.cmp(&y.0))
            .expect("unit group is nonempty")
    }
}

/// The unit `ε` with `u = ε v` (`Left`) or `u = v ε` (`Right`), if any.
pub fn associate_unit(
    u: &HurwitzQuaternion,
    v: &HurwitzQuaternion,
    side: Side,
) -> Option<HurwitzQuaternion> {
    units()
        .iter()
        .find(|e| match side {
            Side::Left => &(*e * v) == u,
            Side::Right => &(v * *e) == u,
        })
        .cloned()
}

/// The 24 units of the Hurwitz order, in canonical order.
pub fn units() -> &'static [HurwitzQuaternion] {
    static UNITS: OnceLock<Vec<HurwitzQuaternion>> = OnceLock::new();
    UNITS.get_or_init(|| {
        let mut out = Vec::with_capacity(24);
        for axis in 0..4 {
            for sign in [-2i64, 2] {
                let mut d = [0i64; 4];
                d[axis] = sign;
                out.push(HurwitzQuaternion::from_doubled_unchecked(
                    d.map(BigInt::from),
                ));
            }
        }
        for mask in 0..16u32 {
            let d: [i64; 4] = std::array::from_fn(|t| if mask >> t & 1 == 1 { -1 } else { 1 });
            out.push(HurwitzQuaternion::from_doubled_unchecked(
                d.map(BigInt::from),
            ));
        }
        out.sort();
        out
    })
}

/// Hamilton product on doubled coordinates, halved.
fn product(x: &[BigInt; 4], y: &[BigInt; 4]) -> [BigInt; 4] {
    let [a1, b1, c1, d1] = x;
    let [a2, b2, c2, d2] = y;
    let p = [
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ];
    p.map(|v| v >> 1)
}

impl Mul for &HurwitzQuaternion {
    type Output = HurwitzQuaternion;

    fn mul(self, rhs: &HurwitzQuaternion) -> HurwitzQuaternion {
        HurwitzQuaternion::from_doubled_unchecked(product(&self.doubled, &rhs.doubled))
    }
}

impl Add for &HurwitzQuaternion {
    type Output = HurwitzQuaternion;

    fn add(self, rhs: &HurwitzQuaternion) -> HurwitzQuaternion {
        let doubled = std::array::from_fn(|t| &self.doubled[t] + &rhs.doubled[t]);
        // sum of two half-odd values is Lipschitz; half-odd plus Lipschitz is half-odd
        HurwitzQuaternion::from_doubled_unchecked(doubled)
    }
}

impl Sub for &HurwitzQuaternion {
    type Output = HurwitzQuaternion;

    fn sub(self, rhs: &HurwitzQuaternion) -> HurwitzQuaternion {
        let doubled = std::array::from_fn(|t| &self.doubled[t] - &rhs.doubled[t]);
        HurwitzQuaternion::from_doubled_unchecked(doubled)
    }
}

impl Neg for &HurwitzQuaternion {
    type Output = HurwitzQuaternion;

    fn neg(self) -> HurwitzQuaternion {
        HurwitzQuaternion {
            doubled: self.doubled.clone().map(|d| -d),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for HurwitzQuaternion {
            type Output = HurwitzQuaternion;
            fn $method(self, rhs: HurwitzQuaternion) -> HurwitzQuaternion {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&HurwitzQuaternion> for HurwitzQuaternion {
            type Output = HurwitzQuaternion;
            fn $method(self, rhs: &HurwitzQuaternion) -> HurwitzQuaternion {
                (&self).$method(rhs)
            }
        }
        impl $tr<HurwitzQuaternion> for &HurwitzQuaternion {
            type Output = HurwitzQuaternion;
            fn $method(self, rhs: HurwitzQuaternion) -> HurwitzQuaternion {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Mul mul, Add add, Sub sub);

impl Neg for HurwitzQuaternion {
    type Output = HurwitzQuaternion;

    fn neg(self) -> HurwitzQuaternion {
        -&self
    }
}

impl fmt::Debug for HurwitzQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hq({self})")
    }
}

/// An exact element of `½Z`, the value range of inner products on the
/// Hurwitz order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInteger {
    twice: BigInt,
}

impl HalfInteger {
    pub fn from_twice(twice: BigInt) -> Self {
        HalfInteger { twice }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        HalfInteger {
            twice: n.into() << 1,
        }
    }

    pub fn twice(&self) -> &BigInt {
        &self.twice
    }

    pub fn is_zero(&self) -> bool {
        self.twice.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.twice.is_even()
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| &self.twice >> 1)
    }
}

impl Mul<&BigInt> for &HalfInteger {
    type Output = HalfInteger;

    fn mul(self, rhs: &BigInt) -> HalfInteger {
        HalfInteger::from_twice(&self.twice * rhs)
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_integer() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "{}/2", self.twice),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, c: i64, d: i64) -> HurwitzQuaternion {
        HurwitzQuaternion::new(a, b, c, d)
    }

    #[test]
    fn make_checks_parity() {
        assert_eq!(HurwitzQuaternion::make(2, 4, 6, 8).unwrap(), q(1, 2, 3, 4));
        assert_eq!(
            HurwitzQuaternion::make(1, 1, 1, 1).unwrap(),
            HurwitzQuaternion::omega()
        );
        assert_eq!(HurwitzQuaternion::make(1, 2, 1, 1), Err(Error::MixedParity));
    }

    #[test]
    fn basis_relations() {
        let (i, j, k) = (
            HurwitzQuaternion::i(),
            HurwitzQuaternion::j(),
            HurwitzQuaternion::k(),
        );
        let minus_one = -HurwitzQuaternion::one();
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &i, -&k);
        assert_eq!(&i * &i, minus_one);
        assert_eq!(&j * &j, minus_one);
        assert_eq!(&k * &k, minus_one);
        assert_eq!(&(&i * &j) * &k, minus_one);
    }

    #[test]
    fn products() {
        assert_eq!(q(1, 1, 1, 0) * q(1, 2, 0, 0), q(-1, 3, 1, -2));
        let w = HurwitzQuaternion::omega();
        assert_eq!(&w * &w, HurwitzQuaternion::make(-1, 1, 1, 1).unwrap());
    }

    #[test]
    fn conjugate_and_norm() {
        assert_eq!(q(1, 2, 3, 4).conj(), q(1, -2, -3, -4));
        assert_eq!(
            HurwitzQuaternion::omega().conj(),
            HurwitzQuaternion::make(1, -1, -1, -1).unwrap()
        );
        let u = q(-1, 3, 1, -2);
        assert_eq!(u.conj().conj(), u);
        assert_eq!(q(1, 2, 0, 0).norm(), BigInt::from(5));
        assert_eq!(HurwitzQuaternion::omega().norm(), BigInt::one());
        assert_eq!(u.norm(), BigInt::from(15));
        let uu = &u * &u.conj();
        assert_eq!(uu, q(15, 0, 0, 0));
    }

    #[test]
    fn inner_products() {
        assert!(q(1, 2, 0, 0).inner_product(&q(2, -1, 0, 0)).is_zero());
        assert!(q(1, 2, 3, 4).inner_product(&q(2, -1, 0, 0)).is_zero());
        let u = q(-1, 3, 1, -2);
        assert_eq!(u.inner_product(&u), HalfInteger::from_integer(15));
        let half = HurwitzQuaternion::omega().inner_product(&HurwitzQuaternion::one());
        assert_eq!(half.to_string(), "1/2");
        assert!(!half.is_integer());
    }

    #[test]
    fn unit_group() {
        let us = units();
        assert_eq!(us.len(), 24);
        assert!(us.contains(&HurwitzQuaternion::omega()));
        assert!(!us.contains(&q(1, 1, 0, 0)));
        for a in us {
            assert!(a.is_unit());
            assert!(us.contains(&a.conj()));
            assert!((a * &a.conj()).is_unit());
            for b in us {
                assert!(us.contains(&(a * b)));
            }
        }
    }

    #[test]
    fn associates() {
        assert!(q(1, 1, 1, 0).is_associate(&q(1, -1, 0, 1), Side::Right));
        assert!(!q(1, 1, 1, 0).is_associate(&q(1, 1, 0, 1), Side::Right));
        let u = q(-1, 3, 1, -2);
        assert!(u.is_associate(&u, Side::Left));
        assert!(u.is_associate(&u, Side::Right));
    }

    #[test]
    fn content_examples() {
        assert_eq!(q(2, 4, 6, 8).content().unwrap(), (BigInt::from(2), false));
        assert_eq!(
            HurwitzQuaternion::omega().content().unwrap(),
            (BigInt::one(), true)
        );
        assert_eq!(q(-1, 3, 1, -2).content().unwrap(), (BigInt::one(), true));
        // 1+i+j+k = 2ω
        assert_eq!(q(1, 1, 1, 1).content().unwrap(), (BigInt::from(2), false));
        assert_eq!(
            HurwitzQuaternion::make(3, 3, -3, 9)
                .unwrap()
                .content()
                .unwrap(),
            (BigInt::from(3), false)
        );
        assert_eq!(HurwitzQuaternion::zero().content(), Err(Error::ZeroInput));
    }

    #[test]
    fn primitive_mod() {
        let three = BigInt::from(3);
        assert!(q(-1, 3, 1, -2).is_primitive_mod(&three).unwrap());
        assert!(!q(3, 6, 0, 0).is_primitive_mod(&three).unwrap());
        assert!(q(6, 9, 0, 3).is_primitive_mod(&BigInt::one()).unwrap());
        assert_eq!(
            HurwitzQuaternion::omega().is_primitive_mod(&three),
            Err(Error::NotLipschitz)
        );
    }

    #[test]
    fn canonical_associate_is_minimal() {
        let u = q(-1, 3, 1, -2);
        let (c, e) = u.canonical_associate(Side::Left);
        assert_eq!(&e * &u, c);
        for f in units() {
            assert!(c <= f * &u);
        }
    }

    #[test]
    fn every_hurwitz_value_has_lipschitz_associates() {
        let w = HurwitzQuaternion::make(3, -1, 5, 1).unwrap();
        assert!(units().iter().any(|e| (&w * e).is_lipschitz()));
        assert!(units().iter().any(|e| (e * &w).is_lipschitz()));
    }
}
