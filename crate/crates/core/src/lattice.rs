//! The orthogonal lattice `α⊥ ∩ L` of a primitive Lipschitz integer, and
//! exhaustive enumeration of quaternions of a given norm.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::euclid::extended_gcd;
use crate::quat::HurwitzQuaternion;

/// Upper limit on norms handed to the exhaustive enumerators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumBound(pub u64);

impl EnumBound {
    pub const ENV_VAR: &'static str = "QUATLAT_ENUM_BOUND";
    pub const DEFAULT: EnumBound = EnumBound(10_000);

    /// Reads `QUATLAT_ENUM_BOUND`, falling back to the default when unset.
    pub fn from_env() -> Result<Self> {
        match std::env::var(Self::ENV_VAR) {
            Ok(s) => s.trim().parse().map(EnumBound).map_err(|_| Error::Parse {
                position: 0,
                message: format!("{} must be a nonnegative integer, got {s:?}", Self::ENV_VAR),
            }),
            Err(_) => Ok(Self::DEFAULT),
        }
    }

    pub fn check(self, value: u64) -> Result<()> {
        if value > self.0 {
            Err(Error::BoundExceeded {
                value,
                bound: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for EnumBound {
    fn default() -> Self {
        Self::DEFAULT
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepresentationKind {
    /// Integer coordinates only.
    Lipschitz,
    /// Integer and half-odd coordinates.
    Hurwitz,
}

/// Every quaternion of norm `n`, sorted by doubled coordinates.
pub fn representations(
    n: u64,
    kind: RepresentationKind,
    bound: EnumBound,
) -> Result<Vec<HurwitzQuaternion>> {
    if n == 0 {
        return Err(Error::precondition("norm must be positive"));
    }
    bound.check(n)?;
    let target = i64::try_from(n).map_err(|_| Error::BoundExceeded {
        value: n,
        bound: i64::MAX as u64,
    })?;
    let mut doubled: Vec<[i64; 4]> = sums_of_four_squares(target, false)
        .into_iter()
        .map(|c| c.map(|x| 2 * x))
        .collect();
    if kind == RepresentationKind::Hurwitz {
        doubled.extend(sums_of_four_squares(4 * target, true));
        doubled.sort_unstable();
    }
    Ok(doubled
        .into_iter()
        .map(|d| HurwitzQuaternion::from_doubled_unchecked(d.map(BigInt::from)))
        .collect())
}

// All (a, b, c, d) with a² + b² + c² + d² = target in lexicographic order,
// optionally restricted to odd entries.
fn sums_of_four_squares(target: i64, odd_only: bool) -> Vec<[i64; 4]> {
    let admissible = |x: i64| !odd_only || x.rem_euclid(2) == 1;
    let range = |rem: i64| {
        let m = rem.sqrt();
        (-m..=m).filter(move |&x| admissible(x))
    };
    let mut out = Vec::new();
    for a in range(target) {
        let r1 = target - a * a;
        for b in range(r1) {
            let r2 = r1 - b * b;
            for c in range(r2) {
                let r3 = r2 - c * c;
                let d = r3.sqrt();
                if d * d != r3 || !admissible(d) {
                    continue;
                }
                if d > 0 {
                    out.push([a, b, c, -d]);
                }
                out.push([a, b, c, d]);
            }
        }
    }
    out
}

/// Number of Lipschitz quaternions of odd norm `n` (classically `8σ(n)`).
pub fn representation_count(n: u64, bound: EnumBound) -> Result<BigInt> {
    if n.is_multiple_of(2) {
        return Err(Error::precondition(
            "representation_count expects an odd norm",
        ));
    }
    Ok(BigInt::from(
        representations(n, RepresentationKind::Lipschitz, bound)?.len(),
    ))
}

/// Which coordinate pairing produced the basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisKind {
    /// Both `(a, b)` and `(c, d)` are nonzero.
    Paired,
    /// `a = b = 0`: basis `{1, i, (d − ci)j}`.
    ScalarPairZero,
    /// `c = d = 0`: basis `{b − ai, j, k}`.
    VectorPairZero,
}

/// Generators of `α⊥ ∩ L` with the Bézout data used to build them.
///
/// `g1 = gcd(a, b)` and `g2 = gcd(c, d)` satisfy `a x0 + b y0 = g1` and
/// `c z0 + d t0 = g2`; in a degenerate pairing the missing pair has
/// `g = 0` and zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalBasis {
    pub alpha: HurwitzQuaternion,
    pub beta: [HurwitzQuaternion; 3],
    pub g1: BigInt,
    pub g2: BigInt,
    pub x0: BigInt,
    pub y0: BigInt,
    pub z0: BigInt,
    pub t0: BigInt,
    pub kind: BasisKind,
}

fn primitive_coords(alpha: &HurwitzQuaternion) -> Result<[BigInt; 4]> {
    if alpha.is_zero() {
        return Err(Error::ZeroInput);
    }
    let coords = alpha.require_lipschitz()?;
    if coords.iter().fold(BigInt::zero(), |g, c| g.gcd(c)) != BigInt::from(1) {
        return Err(Error::NotPrimitive);
    }
    Ok(coords)
}

/// Basis of `α⊥ ∩ L` for a primitive Lipschitz `α`, using the Bézout
/// coefficients of the extended Euclidean algorithm.
pub fn orthogonal_basis(alpha: &HurwitzQuaternion) -> Result<OrthogonalBasis> {
    let [a, b, c, d] = primitive_coords(alpha)?;
    let (_, x0, y0) = extended_gcd(&a, &b);
    let (_, z0, t0) = extended_gcd(&c, &d);
    orthogonal_basis_with(alpha, (x0, y0), (z0, t0))
}

/// Same as [`orthogonal_basis`] with caller-chosen Bézout coefficients.
pub fn orthogonal_basis_with(
    alpha: &HurwitzQuaternion,
    (x0, y0): (BigInt, BigInt),
    (z0, t0): (BigInt, BigInt),
) -> Result<OrthogonalBasis> {
    let [a, b, c, d] = primitive_coords(alpha)?;
    let g1 = a.gcd(&b);
    let g2 = c.gcd(&d);
    let zero = BigInt::zero();
    let q = |w: &BigInt, x: &BigInt, y: &BigInt, z: &BigInt| {
        HurwitzQuaternion::from_coords([w.clone(), x.clone(), y.clone(), z.clone()])
    };

    if g1.is_zero() {
        if &c * &z0 + &d * &t0 != g2 {
            return Err(Error::precondition("c·z0 + d·t0 must equal gcd(c, d)"));
        }
        return Ok(OrthogonalBasis {
            alpha: alpha.clone(),
            beta: [
                HurwitzQuaternion::one(),
                HurwitzQuaternion::i(),
                q(&zero, &zero, &d, &-&c),
            ],
            g1,
            g2,
            x0: zero.clone(),
            y0: zero,
            z0,
            t0,
            kind: BasisKind::ScalarPairZero,
        });
    }
    if g2.is_zero() {
        if &a * &x0 + &b * &y0 != g1 {
            return Err(Error::precondition("a·x0 + b·y0 must equal gcd(a, b)"));
        }
        return Ok(OrthogonalBasis {
            alpha: alpha.clone(),
            beta: [
                q(&b, &-&a, &zero, &zero),
                HurwitzQuaternion::j(),
                HurwitzQuaternion::k(),
            ],
            g1,
            g2,
            x0,
            y0,
            z0: zero.clone(),
            t0: zero,
            kind: BasisKind::VectorPairZero,
        });
    }
    if &a * &x0 + &b * &y0 != g1 || &c * &z0 + &d * &t0 != g2 {
        return Err(Error::precondition(
            "Bézout coefficients do not match gcd(a, b), gcd(c, d)",
        ));
    }

    // g2(x0 + y0 i) − g1(z0 + t0 i)j,  (b − ai)/g1,  ((d − ci)/g2) j
    let beta1 = q(&(&g2 * &x0), &(&g2 * &y0), &-(&g1 * &z0), &-(&g1 * &t0));
    let beta2 = q(&(&b / &g1), &-(&a / &g1), &zero, &zero);
    let beta3 = q(&zero, &zero, &(&d / &g2), &-(&c / &g2));
    Ok(OrthogonalBasis {
        alpha: alpha.clone(),
        beta: [beta1, beta2, beta3],
        g1,
        g2,
        x0,
        y0,
        z0,
        t0,
        kind: BasisKind::Paired,
    })
}

// Solve value = coef·step for an integer coef, given two coordinate equations
// sharing the same unknown (either step may be zero, not both).
fn solve_shared(lhs: [&BigInt; 2], step: [&BigInt; 2]) -> Option<BigInt> {
    let (l, s) = if !step[0].is_zero() {
        (lhs[0], step[0])
    } else {
        (lhs[1], step[1])
    };
    let (quot, rem) = l.div_rem(s);
    rem.is_zero().then_some(quot)
}

impl OrthogonalBasis {
    /// `r·β₁ + s·β₂ + u·β₃`.
    pub fn combine(&self, coefficients: &[BigInt; 3]) -> HurwitzQuaternion {
        self.beta
            .iter()
            .zip(coefficients)
            .fold(HurwitzQuaternion::zero(), |acc, (b, k)| acc + b.scale(k))
    }

    /// Integer coordinates of `q` in this basis, if `q` lies in its span.
    ///
    /// Follows the parametrization of the solutions of
    /// `a x + b y + c z + d t = 0`: `x = r g2 x0 + (b/g1) s`,
    /// `y = r g2 y0 − (a/g1) s`, `z = −r g1 z0 + (d/g2) u`,
    /// `t = −r g1 t0 − (c/g2) u`.
    pub fn coefficients(&self, q: &HurwitzQuaternion) -> Option<[BigInt; 3]> {
        let [x, y, z, t] = q.lipschitz_coords()?;
        let [a, b, c, d] = self.alpha.lipschitz_coords()?;
        let (g1, g2) = (&self.g1, &self.g2);
        let coefs = match self.kind {
            BasisKind::ScalarPairZero => {
                let u = solve_shared([&z, &t], [&d, &-&c])?;
                [x, y, u]
            }
            BasisKind::VectorPairZero => {
                let r = solve_shared([&x, &y], [&b, &-&a])?;
                [r, z, t]
            }
            BasisKind::Paired => {
                let (r, rem) = (&a * &x + &b * &y).div_rem(&(g1 * g2));
                if !rem.is_zero() {
                    return None;
                }
                let s = solve_shared(
                    [&(&x - &r * g2 * &self.x0), &(&y - &r * g2 * &self.y0)],
                    [&(&b / g1), &-(&a / g1)],
                )?;
                let u = solve_shared(
                    [&(&z + &r * g1 * &self.z0), &(&t + &r * g1 * &self.t0)],
                    [&(&d / g2), &-(&c / g2)],
                )?;
                [r, s, u]
            }
        };
        (&self.combine(&coefs) == q).then_some(coefs)
    }
}

/// Membership of `q` in `α⊥ ∩ L`, decided both ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeMembership {
    /// Coordinates in the generated basis, when `q` is an integer combination.
    pub combination: Option<[BigInt; 3]>,
    /// `q` is Lipschitz and `α·q = 0`.
    pub orthogonal: bool,
}

impl LatticeMembership {
    /// Both checks agree, as the generation statement requires.
    pub fn consistent(&self) -> bool {
        self.combination.is_some() == self.orthogonal
    }
}

pub fn lattice_membership(
    alpha: &HurwitzQuaternion,
    q: &HurwitzQuaternion,
) -> Result<LatticeMembership> {
    let basis = orthogonal_basis(alpha)?;
    Ok(membership_in(&basis, q))
}

pub fn membership_in(basis: &OrthogonalBasis, q: &HurwitzQuaternion) -> LatticeMembership {
    LatticeMembership {
        combination: basis.coefficients(q),
        orthogonal: q.is_lipschitz() && basis.alpha.inner_product(q).is_zero(),
    }
}

/// `q ∈ α⊥ ∩ L`, decided by expressing `q` in the generated basis.
pub fn in_orthogonal_lattice(alpha: &HurwitzQuaternion, q: &HurwitzQuaternion) -> Result<bool> {
    Ok(lattice_membership(alpha, q)?.combination.is_some())
}
