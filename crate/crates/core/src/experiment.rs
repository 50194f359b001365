//! Theorem-level checks and the semiprime gcd experiments.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::{four_squares, is_prime, rational_factorize};
use crate::error::{Error, Result};
use crate::euclid::{gaussian_gcd, gcd};
use crate::gaussian::{embed_gaussian_pair, GaussianInteger};
use crate::lattice::{representations, EnumBound, RepresentationKind};
use crate::quat::{HurwitzQuaternion, Side};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IgamaReport {
    /// The right ideal `(iγ, γ)_R` is all of `H`.
    pub ideal_trivial: bool,
    /// `gcd(z, w) = 1` in `Z[i]`.
    pub coprime: bool,
    /// Norm of the left gcd of `iγ` and `γ`.
    pub gcld_norm: BigInt,
}

impl IgamaReport {
    pub fn agrees(&self) -> bool {
        self.ideal_trivial == self.coprime
    }
}

/// Compares `(iγ, γ)_R = H` with `gcd(z, w) = 1` for `γ = z + wj`.
pub fn igama_check(z: &GaussianInteger, w: &GaussianInteger) -> Result<IgamaReport> {
    let gamma = embed_gaussian_pair(z, w);
    if gamma.norm().is_even() {
        return Err(Error::EvenNorm);
    }
    let g = gcd(&(HurwitzQuaternion::i() * &gamma), &gamma, Side::Left)?.gcd;
    Ok(IgamaReport {
        ideal_trivial: g.is_unit(),
        coprime: gaussian_gcd(z, w)?.is_unit(),
        gcld_norm: g.norm(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiIRhoReport {
    /// The left gcd of `πiρ` and `πρ` is a right associate of `π`.
    pub left_ok: bool,
    /// The right gcd of `πiρ` and `πρ` is a left associate of `ρ`.
    pub right_ok: bool,
    pub left_gcd: HurwitzQuaternion,
    pub right_gcd: HurwitzQuaternion,
}

/// Evaluates `(πiρ, πρ)_R = πH` and its mirror for two Hurwitz primes.
pub fn pi_i_rho_gcd_check(pi: &HurwitzQuaternion, rho: &HurwitzQuaternion) -> Result<PiIRhoReport> {
    let (np, nr) = (pi.norm(), rho.norm());
    for n in [&np, &nr] {
        if n.is_even() || !is_prime(n) {
            return Err(Error::precondition(format!("{n} is not an odd prime norm")));
        }
    }
    if np == nr {
        return Err(Error::precondition("π and ρ must have distinct norms"));
    }
    let pr = pi * rho;
    if !pr.content()?.1 {
        return Err(Error::precondition("πρ is not primitive"));
    }
    let pir = pi * HurwitzQuaternion::i() * rho;
    let left_gcd = gcd(&pir, &pr, Side::Left)?.gcd;
    let right_gcd = gcd(&pir, &pr, Side::Right)?.gcd;
    Ok(PiIRhoReport {
        left_ok: left_gcd.is_associate(pi, Side::Right),
        right_ok: right_gcd.is_associate(rho, Side::Left),
        left_gcd,
        right_gcd,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalPrimesReport {
    pub p: u64,
    /// Hurwitz primes of norm `p`.
    pub primes: usize,
    /// Ordered pairs with inner product zero.
    pub orthogonal_pairs: usize,
    /// Orthogonal pairs `(u, v)` with `u = εv`.
    pub left_associated: usize,
    /// Orthogonal pairs `(u, v)` with `u = vε`.
    pub right_associated: usize,
    /// Every orthogonal pair is associated on both sides.
    pub holds: bool,
    /// Every orthogonal pair is associated on at least one side.
    pub one_sided_holds: bool,
    pub counterexample: Option<(HurwitzQuaternion, HurwitzQuaternion)>,
}

/// Checks that orthogonal Hurwitz primes of norm `p` are left and right
/// associates of each other, over every Hurwitz prime of that norm.
pub fn orthogonal_primes_check(p: u64, bound: EnumBound) -> Result<OrthogonalPrimesReport> {
    if p.is_multiple_of(2) || !is_prime(&BigInt::from(p)) {
        return Err(Error::precondition(format!("{p} is not an odd prime")));
    }
    let primes = representations(p, RepresentationKind::Hurwitz, bound)?;
    let (mut orthogonal_pairs, mut left_associated, mut right_associated) = (0, 0, 0);
    let mut one_sided_holds = true;
    let mut counterexample = None;
    for u in &primes {
        for v in &primes {
            if !u.inner_product(v).is_zero() {
                continue;
            }
            orthogonal_pairs += 1;
            // association is symmetric, so one direction suffices
            let left = u.is_associate(v, Side::Left);
            let right = u.is_associate(v, Side::Right);
            left_associated += usize::from(left);
            right_associated += usize::from(right);
            one_sided_holds &= left || right;
            if !(left && right) && counterexample.is_none() {
                counterexample = Some((u.clone(), v.clone()));
            }
        }
    }
    Ok(OrthogonalPrimesReport {
        p,
        primes: primes.len(),
        orthogonal_pairs,
        left_associated,
        right_associated,
        holds: counterexample.is_none(),
        one_sided_holds,
        counterexample,
    })
}

/// Which gcd decides whether a pair shares a factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GcdConvention {
    Right,
    Left,
    /// Nontrivial on at least one side.
    Either,
}

impl GcdConvention {
    pub const ALL: [GcdConvention; 3] = [
        GcdConvention::Right,
        GcdConvention::Left,
        GcdConvention::Either,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GcdConvention::Right => "right",
            GcdConvention::Left => "left",
            GcdConvention::Either => "either",
        }
    }
}

/// `(p + q + 2) / ((p + 1)(q + 1))`.
pub fn paper_prediction(p: &BigInt, q: &BigInt) -> BigRational {
    BigRational::new(p + q + 2u32, (p + 1u32) * (q + 1u32))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairFractionReport {
    pub n: BigInt,
    pub p: BigInt,
    pub q: BigInt,
    pub convention: GcdConvention,
    pub total_pairs: u64,
    pub nontrivial_pairs: u64,
    pub fraction: BigRational,
    pub paper_prediction: BigRational,
    pub matches_prediction: bool,
    /// gcd norm → number of ordered pairs, for the right and left gcds.
    pub right_gcd_norms: BTreeMap<BigInt, u64>,
    pub left_gcd_norms: BTreeMap<BigInt, u64>,
    /// Mean number of rational primes dividing the right-gcd norm.
    pub mean_shared_primes: BigRational,
}

/// Counts ordered pairs of Lipschitz integers of norm `pq` whose gcd, per
/// `convention`, has norm other than 1 or `pq`.
///
/// The outer loop runs on the rayon pool; the counts are merged in input
/// order so the report does not depend on the thread count.
pub fn semiprime_pair_fraction(
    p: &BigInt,
    q: &BigInt,
    convention: GcdConvention,
    bound: EnumBound,
) -> Result<PairFractionReport> {
    for x in [p, q] {
        if x.is_even() || !is_prime(x) {
            return Err(Error::precondition(format!("{x} is not an odd prime")));
        }
    }
    if p == q {
        return Err(Error::precondition("p and q must differ"));
    }
    let n = p * q;
    let n64 = n.to_u64().ok_or(Error::BoundExceeded {
        value: u64::MAX,
        bound: bound.0,
    })?;
    let reps = representations(n64, RepresentationKind::Lipschitz, bound)?;

    type Row = (u64, BTreeMap<BigInt, u64>, BTreeMap<BigInt, u64>);
    let rows: Vec<Result<Row>> = reps
        .par_iter()
        .map(|alpha| {
            let mut hits = 0;
            let (mut right, mut left) = (BTreeMap::new(), BTreeMap::new());
            for beta in &reps {
                let rn = gcd(alpha, beta, Side::Right)?.gcd.norm();
                let ln = gcd(alpha, beta, Side::Left)?.gcd.norm();
                let proper = |m: &BigInt| !m.is_one() && m != &n;
                let hit = match convention {
                    GcdConvention::Right => proper(&rn),
                    GcdConvention::Left => proper(&ln),
                    GcdConvention::Either => proper(&rn) || proper(&ln),
                };
                hits += u64::from(hit);
                *right.entry(rn).or_insert(0) += 1;
                *left.entry(ln).or_insert(0) += 1;
            }
            Ok((hits, right, left))
        })
        .collect();

    let mut nontrivial_pairs = 0;
    let (mut right_gcd_norms, mut left_gcd_norms) = (BTreeMap::new(), BTreeMap::new());
    for row in rows {
        let (hits, right, left) = row?;
        nontrivial_pairs += hits;
        for (k, v) in right {
            *right_gcd_norms.entry(k).or_insert(0) += v;
        }
        for (k, v) in left {
            *left_gcd_norms.entry(k).or_insert(0) += v;
        }
    }
    let total_pairs = (reps.len() * reps.len()) as u64;
    let shared: BigInt = right_gcd_norms
        .iter()
        .map(|(m, c)| {
            let primes = if m.is_one() {
                0
            } else if m == &n {
                2
            } else {
                1
            };
            BigInt::from(primes * c)
        })
        .sum();
    let fraction = BigRational::new(nontrivial_pairs.into(), total_pairs.into());
    let prediction = paper_prediction(p, q);
    Ok(PairFractionReport {
        n,
        p: p.clone(),
        q: q.clone(),
        convention,
        total_pairs,
        nontrivial_pairs,
        matches_prediction: fraction == prediction,
        fraction,
        paper_prediction: prediction,
        right_gcd_norms,
        left_gcd_norms,
        mean_shared_primes: BigRational::new(shared, total_pairs.into()),
    })
}

/// A uniformly random signed permutation of `coords`, as a Lipschitz integer.
pub fn random_signed_permutation<R: Rng + ?Sized>(
    coords: &[BigInt; 4],
    rng: &mut R,
) -> HurwitzQuaternion {
    let mut c = coords.clone();
    c.shuffle(rng);
    HurwitzQuaternion::from_coords(c.map(|x| if rng.gen::<bool>() { -x } else { x }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonteCarloReport {
    pub n: BigInt,
    pub trials: u64,
    pub seed: u64,
    pub successes_right: u64,
    pub successes_left: u64,
    pub successes_either: u64,
    /// Proper factors of `n` obtained as `gcd(N(g), n)`.
    pub recovered_factors: BTreeSet<BigInt>,
    /// `n` is the square of a prime.
    pub degenerate: bool,
}

impl MonteCarloReport {
    pub fn successes(&self, convention: GcdConvention) -> u64 {
        match convention {
            GcdConvention::Right => self.successes_right,
            GcdConvention::Left => self.successes_left,
            GcdConvention::Either => self.successes_either,
        }
    }

    pub fn success_rate(&self, convention: GcdConvention) -> BigRational {
        BigRational::new(self.successes(convention).into(), self.trials.max(1).into())
    }
}

/// Draws random pairs of Lipschitz integers of norm `n` (four-squares
/// decomposition, then a random signed permutation) and records when a
/// one-sided gcd exposes a proper factor of `n`.
///
/// Trial `t` uses the ChaCha stream `t` of `seed`, so the result is the
/// same for any thread count.
pub fn semiprime_factor_attempt(n: &BigInt, trials: u64, seed: u64) -> Result<MonteCarloReport> {
    if n.is_even() || n < &BigInt::from(9) {
        return Err(Error::precondition("n must be an odd semiprime"));
    }
    let factors = rational_factorize(n)?;
    if factors.len() != 2 {
        return Err(Error::precondition(format!("{n} is not a semiprime")));
    }
    let degenerate = factors[0] == factors[1];

    type Trial = ([bool; 3], Vec<BigInt>);
    let results: Vec<Result<Trial>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(t);
            let a = random_signed_permutation(&four_squares(n, &mut rng)?, &mut rng);
            let b = random_signed_permutation(&four_squares(n, &mut rng)?, &mut rng);
            let mut found = Vec::new();
            let mut hit = [false; 2];
            for (slot, side) in [Side::Right, Side::Left].into_iter().enumerate() {
                let m = gcd(&a, &b, side)?.gcd.norm();
                let f = m.gcd(n);
                if !f.is_one() && &f != n {
                    hit[slot] = true;
                    found.push(f);
                }
            }
            Ok(([hit[0], hit[1], hit[0] || hit[1]], found))
        })
        .collect();

    let mut report = MonteCarloReport {
        n: n.clone(),
        trials,
        seed,
        successes_right: 0,
        successes_left: 0,
        successes_either: 0,
        recovered_factors: BTreeSet::new(),
        degenerate,
    };
    for r in results {
        let (hits, found) = r?;
        report.successes_right += u64::from(hits[0]);
        report.successes_left += u64::from(hits[1]);
        report.successes_either += u64::from(hits[2]);
        report.recovered_factors.extend(found);
    }
    Ok(report)
}

/// `|a − b| <= tolerance` on exact rationals.
pub fn within(a: &BigRational, b: &BigRational, tolerance: &BigRational) -> bool {
    let d = a - b;
    let d = if d < BigRational::zero() { -d } else { d };
    &d <= tolerance
}
