//! Gaussian integers `Z[i]` and their embedding into the quaternions.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::quat::HurwitzQuaternion;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianInteger {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInteger {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussianInteger {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    pub fn conj(&self) -> Self {
        GaussianInteger {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// Multiplication by `i`.
    pub fn rotate(&self) -> Self {
        GaussianInteger {
            re: -&self.im,
            im: self.re.clone(),
        }
    }

    /// The associate with `re > 0, im >= 0`; zero maps to itself.
    pub fn canonical(&self) -> Self {
        let mut z = self.clone();
        if z.is_zero() {
            return z;
        }
        while !(z.re.is_positive() && !z.im.is_negative()) {
            z = z.rotate();
        }
        z
    }

    /// `re + im·i` as a Lipschitz quaternion.
    pub fn to_quaternion(&self) -> HurwitzQuaternion {
        HurwitzQuaternion::new(self.re.clone(), self.im.clone(), 0, 0)
    }
}

impl Mul for &GaussianInteger {
    type Output = GaussianInteger;

    fn mul(self, rhs: &GaussianInteger) -> GaussianInteger {
        GaussianInteger {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Add for &GaussianInteger {
    type Output = GaussianInteger;

    fn add(self, rhs: &GaussianInteger) -> GaussianInteger {
        GaussianInteger {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussianInteger {
    type Output = GaussianInteger;

    fn sub(self, rhs: &GaussianInteger) -> GaussianInteger {
        GaussianInteger {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

/// `γ = z + w j`, i.e. `re(z) + im(z) i + re(w) j + im(w) k`.
pub fn embed_gaussian_pair(z: &GaussianInteger, w: &GaussianInteger) -> HurwitzQuaternion {
    HurwitzQuaternion::new(z.re.clone(), z.im.clone(), w.re.clone(), w.im.clone())
}
