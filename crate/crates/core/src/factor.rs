//! Factorization of primitive Hurwitz integers modelled on an ordered
//! factorization of the norm, unit migration, and right-divisor enumeration.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::euclid::{cofactor, gcd, is_lipschitz_multiple};
use crate::lattice::{representations, EnumBound, RepresentationKind};
use crate::quat::{units, HurwitzQuaternion, Side};

/// An ordered list of rational primes `p₁, …, p_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimeModel {
    primes: Vec<BigInt>,
}

impl PrimeModel {
    pub fn new(primes: Vec<BigInt>) -> Result<Self> {
        if primes.is_empty() {
            return Err(Error::precondition(
                "a prime model needs at least one prime",
            ));
        }
        if let Some(p) = primes.iter().find(|p| !is_prime(p)) {
            return Err(Error::precondition(format!("{p} is not prime")));
        }
        Ok(PrimeModel { primes })
    }

    pub fn from_u64(primes: &[u64]) -> Result<Self> {
        Self::new(primes.iter().map(|&p| BigInt::from(p)).collect())
    }

    pub fn primes(&self) -> &[BigInt] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn product(&self) -> BigInt {
        self.primes.iter().product()
    }

    /// The same primes in another order.
    pub fn permuted(&self, order: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.len()];
        if order.len() != self.len()
            || order
                .iter()
                .any(|&i| i >= seen.len() || std::mem::replace(&mut seen[i], true))
        {
            return Err(Error::precondition("not a permutation of the model"));
        }
        Ok(PrimeModel {
            primes: order.iter().map(|&i| self.primes[i].clone()).collect(),
        })
    }
}

/// `α = π₁π₂⋯π_k` with `N(πᵢ) = pᵢ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelledFactorization {
    pub model: PrimeModel,
    pub factors: Vec<HurwitzQuaternion>,
}

impl ModelledFactorization {
    /// The ordered product `π₁⋯π_k`.
    pub fn product(&self) -> HurwitzQuaternion {
        self.factors
            .iter()
            .fold(HurwitzQuaternion::one(), |acc, f| acc * f)
    }
}

fn check_modelled_input(alpha: &HurwitzQuaternion, model: &PrimeModel) -> Result<()> {
    if alpha.is_zero() {
        return Err(Error::ZeroInput);
    }
    let norm = alpha.norm();
    if norm != model.product() {
        return Err(Error::ModelMismatch(format!(
            "norm {norm} differs from the model product {}",
            model.product()
        )));
    }
    if !alpha.content()?.1 {
        return Err(Error::NotPrimitive);
    }
    Ok(())
}

/// Factorization of a primitive `α` modelled on `model`.
///
/// The rightmost factor is peeled as the right gcd of `α` and `p_k`, and
/// the process repeats on the exact left cofactor.
pub fn factor_modelled(
    alpha: &HurwitzQuaternion,
    model: &PrimeModel,
) -> Result<ModelledFactorization> {
    check_modelled_input(alpha, model)?;
    let mut current = alpha.clone();
    let mut factors = Vec::with_capacity(model.len());
    for p in model.primes().iter().skip(1).rev() {
        let pi = gcd(
            &current,
            &HurwitzQuaternion::from_coords([p.clone(), 0.into(), 0.into(), 0.into()]),
            Side::Right,
        )?
        .gcd;
        if &pi.norm() != p {
            return Err(Error::precondition(format!(
                "no right divisor of norm {p} found"
            )));
        }
        current = cofactor(&current, &pi, Side::Right)?.expect("gcd is a right divisor");
        factors.push(pi);
    }
    factors.push(current);
    factors.reverse();
    Ok(ModelledFactorization {
        model: model.clone(),
        factors,
    })
}

/// Same as [`factor_modelled`] but peeling from the left: `π₁` is the left
/// gcd of `α` and `p₁`.
pub fn factor_modelled_from_left(
    alpha: &HurwitzQuaternion,
    model: &PrimeModel,
) -> Result<ModelledFactorization> {
    check_modelled_input(alpha, model)?;
    let mut current = alpha.clone();
    let mut factors = Vec::with_capacity(model.len());
    for p in &model.primes()[..model.len() - 1] {
        let pi = gcd(
            &current,
            &HurwitzQuaternion::from_coords([p.clone(), 0.into(), 0.into(), 0.into()]),
            Side::Left,
        )?
        .gcd;
        if &pi.norm() != p {
            return Err(Error::precondition(format!(
                "no left divisor of norm {p} found"
            )));
        }
        current = cofactor(&current, &pi, Side::Left)?.expect("gcd is a left divisor");
        factors.push(pi);
    }
    factors.push(current);
    Ok(ModelledFactorization {
        model: model.clone(),
        factors,
    })
}

/// Whether `f2` is `π₁ε₁ · ε₁⁻¹π₂ε₂ ⋯ ε_{k−1}⁻¹π_k` for units `εᵢ`, where
/// `f1 = π₁⋯π_k`. Each `εᵢ` is forced by the previous ones, so a greedy
/// left-to-right scan decides it.
pub fn unit_migration_equal(
    f1: &ModelledFactorization,
    f2: &ModelledFactorization,
) -> Result<bool> {
    if f1.model != f2.model || f1.factors.len() != f2.factors.len() {
        return Err(Error::ModelMismatch(
            "factorizations use different models".into(),
        ));
    }
    let k = f1.factors.len();
    let mut carried = HurwitzQuaternion::one();
    for i in 0..k {
        let left = carried.conj() * &f1.factors[i];
        if i + 1 == k {
            return Ok(left == f2.factors[i]);
        }
        match units().iter().find(|e| left.clone() * *e == f2.factors[i]) {
            Some(e) => carried = e.clone(),
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// The Lipschitz right divisors of norm `m` together with the checks the
/// eight-divisor theorem makes about them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PallReport {
    pub divisors: Vec<HurwitzQuaternion>,
    pub exactly_eight: bool,
    pub pairwise_left_associated: bool,
}

/// All Lipschitz `δ` with `N(δ) = m` and `α ∈ Lδ`.
pub fn pall_right_divisors(
    alpha: &HurwitzQuaternion,
    m: &BigInt,
    bound: EnumBound,
) -> Result<PallReport> {
    if !alpha.is_lipschitz() {
        return Err(Error::precondition("α must be a Lipschitz integer"));
    }
    if alpha.is_zero() {
        return Err(Error::ZeroInput);
    }
    if m < &BigInt::one() || m.is_even() {
        return Err(Error::precondition("m must be a positive odd integer"));
    }
    if !alpha.norm().is_multiple_of(m) {
        return Err(Error::precondition(format!("{m} does not divide the norm")));
    }
    if !alpha.is_primitive_mod(m)? {
        return Err(Error::precondition(format!("α is not primitive mod {m}")));
    }
    let m64 = m.to_u64().ok_or(Error::BoundExceeded {
        value: u64::MAX,
        bound: bound.0,
    })?;
    let mut divisors = Vec::new();
    for delta in representations(m64, RepresentationKind::Lipschitz, bound)? {
        if is_lipschitz_multiple(alpha, &delta, Side::Right)? {
            divisors.push(delta);
        }
    }
    let pairwise_left_associated = divisors
        .iter()
        .all(|d| d.is_associate(&divisors[0], Side::Left));
    Ok(PallReport {
        exactly_eight: divisors.len() == 8,
        pairwise_left_associated,
        divisors,
    })
}
