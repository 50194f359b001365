//! One-sided Euclidean division, greatest common divisors with Bézout
//! witnesses, divisibility tests, and the Gaussian-integer gcd.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gaussian::GaussianInteger;
use crate::quat::{HurwitzQuaternion, Side};

/// Candidate lattice for quotients.
///
/// `Lipschitz` restricts quotients to integer coordinates; the remainder
/// bound then weakens to `N(r) <= N(b)` and equality can occur.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientLattice {
    Hurwitz,
    Lipschitz,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionResult {
    pub quotient: HurwitzQuaternion,
    pub remainder: HurwitzQuaternion,
    /// `Right`: `dividend = divisor·quotient + remainder`;
    /// `Left`: `dividend = quotient·divisor + remainder`.
    pub side: Side,
}

/// Division with remainder in the Hurwitz order, `N(r) <= N(divisor)/2`.
pub fn divmod(
    dividend: &HurwitzQuaternion,
    divisor: &HurwitzQuaternion,
    side: Side,
) -> Result<DivisionResult> {
    divmod_in(dividend, divisor, side, QuotientLattice::Hurwitz)
}

pub fn divmod_in(
    dividend: &HurwitzQuaternion,
    divisor: &HurwitzQuaternion,
    side: Side,
    lattice: QuotientLattice,
) -> Result<DivisionResult> {
    if divisor.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let n = divisor.norm();
    // the exact quotient is numerator / n
    let numerator = match side {
        Side::Right => divisor.conj() * dividend,
        Side::Left => dividend * divisor.conj(),
    };
    let two_n: BigInt = &n << 1;
    let mut candidates = vec![nearest_lipschitz(numerator.doubled(), &n, &two_n)];
    if lattice == QuotientLattice::Hurwitz {
        candidates.push(nearest_half_odd(numerator.doubled(), &two_n));
    }

    let mut best: Option<(BigInt, HurwitzQuaternion, HurwitzQuaternion)> = None;
    for q in candidates {
        let r = match side {
            Side::Right => dividend - divisor * &q,
            Side::Left => dividend - &q * divisor,
        };
        let rn = r.norm();
        let better = match &best {
            None => true,
            Some((bn, bq, _)) => rn < *bn || (rn == *bn && q < *bq),
        };
        if better {
            best = Some((rn, q, r));
        }
    }
    let (_, quotient, remainder) = best.expect("at least one candidate");
    Ok(DivisionResult {
        quotient,
        remainder,
        side,
    })
}

// x_t = doubled_t / (2n); round half up to the nearest integer
fn nearest_lipschitz(doubled: &[BigInt; 4], n: &BigInt, two_n: &BigInt) -> HurwitzQuaternion {
    let d = std::array::from_fn(|t| (&doubled[t] + n).div_floor(two_n) << 1);
    HurwitzQuaternion::from_doubled_unchecked(d)
}

// floor(x_t) + 1/2 is the nearest half-odd number to x_t
fn nearest_half_odd(doubled: &[BigInt; 4], two_n: &BigInt) -> HurwitzQuaternion {
    let d = std::array::from_fn(|t| (doubled[t].div_floor(two_n) << 1) + 1);
    HurwitzQuaternion::from_doubled_unchecked(d)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdResult {
    pub gcd: HurwitzQuaternion,
    pub bezout_x: HurwitzQuaternion,
    pub bezout_y: HurwitzQuaternion,
    /// `Right`: `gcd = x·α + y·β` and `Hα + Hβ = H·gcd`;
    /// `Left`: `gcd = α·x + β·y` and `αH + βH = gcd·H`.
    pub side: Side,
}

/// One-sided gcd by the Euclidean algorithm.
///
/// The result is normalised to the lexicographically smallest doubled
/// quadruple among its 24 associates on the generating side (`ε·g` for a
/// right gcd, `g·ε` for a left gcd). The choice is a convention only.
pub fn gcd(alpha: &HurwitzQuaternion, beta: &HurwitzQuaternion, side: Side) -> Result<GcdResult> {
    if alpha.is_zero() && beta.is_zero() {
        return Err(Error::BothZero);
    }
    let one = HurwitzQuaternion::one();
    let zero = HurwitzQuaternion::zero();
    let (mut r0, mut x0, mut y0) = (alpha.clone(), one.clone(), zero.clone());
    let (mut r1, mut x1, mut y1) = (beta.clone(), zero, one);

    while !r1.is_zero() {
        // right gcd: r0 = q·r1 + r; left gcd: r0 = r1·q + r
        let division_side = match side {
            Side::Right => Side::Left,
            Side::Left => Side::Right,
        };
        let DivisionResult {
            quotient: q,
            remainder: r2,
            ..
        } = divmod(&r0, &r1, division_side)?;
        let (x2, y2) = match side {
            Side::Right => (&x0 - &q * &x1, &y0 - &q * &y1),
            Side::Left => (&x0 - &x1 * &q, &y0 - &y1 * &q),
        };
        r0 = std::mem::replace(&mut r1, r2);
        x0 = std::mem::replace(&mut x1, x2);
        y0 = std::mem::replace(&mut y1, y2);
    }

    let generating = match side {
        Side::Right => Side::Left,
        Side::Left => Side::Right,
    };
    let (g, unit) = r0.canonical_associate(generating);
    let (bezout_x, bezout_y) = match side {
        Side::Right => (&unit * &x0, &unit * &y0),
        Side::Left => (&x0 * &unit, &y0 * &unit),
    };
    Ok(GcdResult {
        gcd: g,
        bezout_x,
        bezout_y,
        side,
    })
}

/// The cofactor `μ` with `α = δ·μ` (`Left`) or `α = μ·δ` (`Right`), when it
/// exists in the Hurwitz order.
pub fn cofactor(
    alpha: &HurwitzQuaternion,
    delta: &HurwitzQuaternion,
    side: Side,
) -> Result<Option<HurwitzQuaternion>> {
    if delta.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let scaled = match side {
        Side::Left => delta.conj() * alpha,
        Side::Right => alpha * delta.conj(),
    };
    Ok(scaled.div_integer(&delta.norm()))
}

/// `α ∈ δH` (`Left`) or `α ∈ Hδ` (`Right`).
pub fn is_multiple(
    alpha: &HurwitzQuaternion,
    delta: &HurwitzQuaternion,
    side: Side,
) -> Result<bool> {
    Ok(cofactor(alpha, delta, side)?.is_some())
}

/// `α ∈ δL` (`Left`) or `α ∈ Lδ` (`Right`): the cofactor must be Lipschitz.
pub fn is_lipschitz_multiple(
    alpha: &HurwitzQuaternion,
    delta: &HurwitzQuaternion,
    side: Side,
) -> Result<bool> {
    Ok(cofactor(alpha, delta, side)?.is_some_and(|m| m.is_lipschitz()))
}

fn gaussian_rem(z: &GaussianInteger, w: &GaussianInteger) -> GaussianInteger {
    let n = w.norm();
    let num = z * &w.conj();
    let two_n: BigInt = &n << 1;
    let round = |v: &BigInt| -> BigInt { ((v << 1u32) + &n).div_floor(&two_n) };
    let q = GaussianInteger {
        re: round(&num.re),
        im: round(&num.im),
    };
    z - &(&q * w)
}

/// Generator of the ideal `(z, w)` in `Z[i]`, normalised to the first
/// quadrant (`re > 0`, `im >= 0`).
pub fn gaussian_gcd(z: &GaussianInteger, w: &GaussianInteger) -> Result<GaussianInteger> {
    if z.is_zero() && w.is_zero() {
        return Err(Error::BothZero);
    }
    let (mut a, mut b) = (z.clone(), w.clone());
    while !b.is_zero() {
        let r = gaussian_rem(&a, &b);
        a = std::mem::replace(&mut b, r);
    }
    Ok(a.canonical())
}

/// Integer gcd together with Bézout coefficients `a·x + b·y = g`, `g >= 0`.
pub fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (BigInt::one(), BigInt::zero());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = r0.div_floor(&r1);
        let r2 = &r0 - &q * &r1;
        let s2 = &s0 - &q * &s1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if r0 < BigInt::zero() {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}
