//! Named property suites, one per theorem, runnable from the command line.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cross::cross3_lipschitz;
use crate::error::{Error, Result};
use crate::euclid::is_lipschitz_multiple;
use crate::experiment::{
    igama_check, orthogonal_primes_check, semiprime_pair_fraction, GcdConvention,
};
use crate::factor::{
    factor_modelled, factor_modelled_from_left, pall_right_divisors, unit_migration_equal,
    PrimeModel,
};
use crate::gaussian::GaussianInteger;
use crate::lattice::{
    membership_in, orthogonal_basis, representations, EnumBound, RepresentationKind,
};
use crate::quat::{units, HurwitzQuaternion, Side};

pub const SUITES: [&str; 10] = [
    "inner-product-scaling",
    "associate-orthogonality",
    "orthogonal-primes",
    "gaussian-ideal",
    "unique-factorization",
    "eight-divisors",
    "orthogonal-lattice",
    "cross-two-sided",
    "cross-left-multiple",
    "semiprime-fraction",
];

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub seed: u64,
    pub bound: EnumBound,
    /// Number of random cases for the sampled suites.
    pub samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 0,
            bound: EnumBound::DEFAULT,
            samples: 1000,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub cases: u64,
    pub passed: bool,
    /// Counterexample on failure, short summary on success.
    pub detail: String,
    pub elapsed: Duration,
}

pub fn run_suite(name: &str, config: &VerifyConfig) -> Result<SuiteOutcome> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let n = config.samples;
    let (name, tally) = match name {
        "inner-product-scaling" => ("inner-product-scaling", inner_product_scaling(n, &mut rng)),
        "associate-orthogonality" => (
            "associate-orthogonality",
            associate_orthogonality(n, &mut rng),
        ),
        "orthogonal-primes" => (
            "orthogonal-primes",
            orthogonal_primes(&[3, 5, 7, 11, 13], config.bound)?,
        ),
        "gaussian-ideal" => ("gaussian-ideal", gaussian_ideal(4)?),
        "unique-factorization" => ("unique-factorization", unique_factorization(n, &mut rng)?),
        "eight-divisors" => ("eight-divisors", eight_divisors(config.bound)?),
        "orthogonal-lattice" => ("orthogonal-lattice", orthogonal_lattice(n, &mut rng)?),
        "cross-two-sided" => ("cross-two-sided", cross_two_sided(n, &mut rng)?),
        "cross-left-multiple" => ("cross-left-multiple", cross_left_multiple(n, &mut rng)?),
        "semiprime-fraction" => ("semiprime-fraction", semiprime_fraction(config.bound)?),
        other => return Err(Error::precondition(format!("unknown suite {other:?}"))),
    };
    Ok(SuiteOutcome {
        name,
        cases: tally.cases,
        passed: tally.failure.is_none(),
        detail: tally.failure.unwrap_or(tally.summary),
        elapsed: start.elapsed(),
    })
}

pub fn run_all(config: &VerifyConfig) -> Result<Vec<SuiteOutcome>> {
    SUITES.iter().map(|s| run_suite(s, config)).collect()
}

/// Result of one suite: case count, the first failure, and a summary.
#[derive(Debug, Default)]
pub struct Tally {
    pub cases: u64,
    pub failure: Option<String>,
    pub summary: String,
}

impl Tally {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }
}

pub fn random_lipschitz<R: Rng + ?Sized>(rng: &mut R, radius: i64) -> HurwitzQuaternion {
    HurwitzQuaternion::new(
        rng.gen_range(-radius..=radius),
        rng.gen_range(-radius..=radius),
        rng.gen_range(-radius..=radius),
        rng.gen_range(-radius..=radius),
    )
}

pub fn random_hurwitz<R: Rng + ?Sized>(rng: &mut R, radius: i64) -> HurwitzQuaternion {
    let q = random_lipschitz(rng, radius);
    if rng.gen() {
        q + HurwitzQuaternion::omega()
    } else {
        q
    }
}

/// A random Lipschitz integer whose coordinates have gcd 1.
pub fn random_primitive_lipschitz<R: Rng + ?Sized>(rng: &mut R, radius: i64) -> HurwitzQuaternion {
    loop {
        let q = random_lipschitz(rng, radius);
        if !q.is_zero() && q.coordinate_gcd().is_ok_and(|g| g.is_one()) {
            return q;
        }
    }
}

/// `(uv)·(uw) = N(u)(v·w)` on random Hurwitz triples.
pub fn inner_product_scaling<R: Rng + ?Sized>(samples: usize, rng: &mut R) -> Tally {
    let mut t = Tally::default();
    for _ in 0..samples {
        let (u, v, w) = (
            random_hurwitz(rng, 30),
            random_hurwitz(rng, 30),
            random_hurwitz(rng, 30),
        );
        let lhs = (&u * &v).inner_product(&(&u * &w));
        let rhs = &v.inner_product(&w) * &u.norm();
        t.check(lhs == rhs, || format!("u={u} v={v} w={w}: {lhs} != {rhs}"));
    }
    t.summary = format!("{} random Hurwitz triples", t.cases);
    t
}

/// For orthogonal units `ε ⊥ δ`: `αε ⊥ αδ` and `εα ⊥ δα`.
pub fn associate_orthogonality<R: Rng + ?Sized>(samples: usize, rng: &mut R) -> Tally {
    let mut pairs = Vec::new();
    for e in units() {
        for d in units() {
            if e.inner_product(d).is_zero() {
                pairs.push((e, d));
            }
        }
    }
    let mut t = Tally::default();
    for _ in 0..samples {
        let alpha = random_hurwitz(rng, 30);
        let &(e, d) = pairs.choose(rng).expect("orthogonal unit pairs exist");
        let right = (&alpha * e).inner_product(&(&alpha * d)).is_zero();
        let left = (e * &alpha).inner_product(&(d * &alpha)).is_zero();
        t.check(right && left, || format!("α={alpha} ε={e} δ={d}"));
    }
    t.summary = format!(
        "{} random α over {} orthogonal unit pairs",
        t.cases,
        pairs.len()
    );
    t
}

/// Orthogonal Hurwitz primes of norm `p` are left and right associates.
pub fn orthogonal_primes(primes: &[u64], bound: EnumBound) -> Result<Tally> {
    let mut t = Tally::default();
    let mut pairs = 0;
    for &p in primes {
        let r = orthogonal_primes_check(p, bound)?;
        pairs += r.orthogonal_pairs;
        t.check(r.holds, || {
            let (u, v) = r.counterexample.clone().expect("failure has a witness");
            format!("p={p}: {u} ⊥ {v} but not associated on both sides")
        });
    }
    t.summary = format!("{pairs} orthogonal pairs over p in {primes:?}");
    Ok(t)
}

/// `(iγ, γ)_R = H ⟺ gcd(z, w) = 1`, exhaustive over `|re|, |im| <= radius`.
pub fn gaussian_ideal(radius: i64) -> Result<Tally> {
    let mut t = Tally::default();
    let range = || -radius..=radius;
    for zr in range() {
        for zi in range() {
            for wr in range() {
                for wi in range() {
                    if (zr * zr + zi * zi + wr * wr + wi * wi) % 2 == 0 {
                        continue;
                    }
                    let (z, w) = (GaussianInteger::new(zr, zi), GaussianInteger::new(wr, wi));
                    let r = igama_check(&z, &w)?;
                    t.check(r.agrees(), || format!("z={z} w={w}: {r:?}"));
                }
            }
        }
    }
    t.summary = format!("{} odd-norm γ = z + wj", t.cases);
    Ok(t)
}

const SMALL_ODD_PRIMES: [u64; 9] = [3, 5, 7, 11, 13, 17, 19, 23, 29];

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..k {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

/// A random primitive Hurwitz integer with norm `p₁⋯p_k`, built as a
/// product of random Hurwitz primes.
pub fn random_primitive_with_norm<R: Rng + ?Sized>(
    primes: &[u64],
    rng: &mut R,
    bound: EnumBound,
) -> Result<HurwitzQuaternion> {
    let pools = primes
        .iter()
        .map(|&p| representations(p, RepresentationKind::Hurwitz, bound))
        .collect::<Result<Vec<_>>>()?;
    loop {
        let alpha = pools.iter().fold(HurwitzQuaternion::one(), |acc, pool| {
            acc * pool.choose(rng).expect("nonempty")
        });
        if alpha.content()?.1 {
            return Ok(alpha);
        }
    }
}

/// Modelled factorization: reconstruction on every permutation model,
/// unit migration between right and left peeling, and left-associated
/// final factors when the first two primes swap.
pub fn unique_factorization<R: Rng + ?Sized>(samples: usize, rng: &mut R) -> Result<Tally> {
    let mut t = Tally::default();
    for _ in 0..samples {
        let k = rng.gen_range(2..=3);
        let primes: Vec<u64> = (0..k)
            .map(|_| *SMALL_ODD_PRIMES.choose(rng).expect("nonempty"))
            .collect();
        let alpha = random_primitive_with_norm(&primes, rng, EnumBound::DEFAULT)?;
        let base = PrimeModel::from_u64(&primes)?;
        let mut finals = Vec::new();
        for order in permutations(k) {
            let model = base.permuted(&order)?;
            let f = factor_modelled(&alpha, &model)?;
            let norms_ok = f
                .factors
                .iter()
                .zip(model.primes())
                .all(|(pi, p)| &pi.norm() == p);
            t.check(norms_ok && f.product() == alpha, || {
                format!("α={alpha} model={:?}: {:?}", model.primes(), f.factors)
            });
            let g = factor_modelled_from_left(&alpha, &model)?;
            t.check(unit_migration_equal(&f, &g)?, || {
                format!(
                    "α={alpha}: {:?} and {:?} differ beyond unit migration",
                    f.factors, g.factors
                )
            });
            finals.push((order, f.factors.last().cloned().expect("k >= 2")));
        }
        if k == 3 {
            let find = |o: &[usize]| {
                finals
                    .iter()
                    .find(|(p, _)| p == o)
                    .map(|(_, f)| f.clone())
                    .expect("present")
            };
            let (a, b) = (find(&[0, 1, 2]), find(&[1, 0, 2]));
            t.check(a.is_associate(&b, Side::Left), || {
                format!("α={alpha}: final factors {a} and {b}")
            });
        }
    }
    t.summary = format!("{samples} random primitive α, {} checks", t.cases);
    Ok(t)
}

/// Eight pairwise left-associated Lipschitz right divisors of norm `m`, for
/// every Lipschitz `α` of norm 15, 21, 35 that is primitive mod `m`.
pub fn eight_divisors(bound: EnumBound) -> Result<Tally> {
    let mut t = Tally::default();
    for (norm, divisors) in [(15u64, [3u64, 5]), (21, [3, 7]), (35, [5, 7])] {
        for alpha in representations(norm, RepresentationKind::Lipschitz, bound)? {
            for m in divisors {
                let m = BigInt::from(m);
                if !alpha.is_primitive_mod(&m)? {
                    continue;
                }
                let r = pall_right_divisors(&alpha, &m, bound)?;
                t.check(r.exactly_eight && r.pairwise_left_associated, || {
                    format!(
                        "α={alpha} m={m}: {} divisors, associated={}",
                        r.divisors.len(),
                        r.pairwise_left_associated
                    )
                });
            }
        }
    }
    t.summary = format!("{} (α, m) cases", t.cases);
    Ok(t)
}

/// The basis is orthogonal to `α`, and orthogonal vectors built from random
/// cross products decompose with integer coefficients.
pub fn orthogonal_lattice<R: Rng + ?Sized>(samples: usize, rng: &mut R) -> Result<Tally> {
    let mut t = Tally::default();
    for _ in 0..samples {
        let alpha = random_primitive_lipschitz(rng, 20);
        let basis = orthogonal_basis(&alpha)?;
        let orthogonal = basis.beta.iter().all(|b| alpha.inner_product(b).is_zero());
        t.check(orthogonal, || {
            format!("α={alpha}: basis {:?} not orthogonal", basis.beta)
        });
        // α × u × v is orthogonal to α
        let q = cross3_lipschitz(&alpha, &random_lipschitz(rng, 5), &random_lipschitz(rng, 5))?;
        let m = membership_in(&basis, &q);
        t.check(m.orthogonal && m.consistent(), || {
            format!("α={alpha} q={q}: {m:?}")
        });
        let off = q + HurwitzQuaternion::one();
        let m = membership_in(&basis, &off);
        t.check(m.consistent(), || format!("α={alpha} q={off}: {m:?}"));
    }
    t.summary = format!("{samples} random primitive α");
    Ok(t)
}

fn random_combination<R: Rng + ?Sized>(
    basis: &crate::lattice::OrthogonalBasis,
    rng: &mut R,
    radius: i64,
) -> HurwitzQuaternion {
    let c: [BigInt; 3] = std::array::from_fn(|_| BigInt::from(rng.gen_range(-radius..=radius)));
    basis.combine(&c)
}

/// `β, γ ⊥ α` implies `α × β × γ ∈ αL ∩ Lα`.
pub fn cross_two_sided<R: Rng + ?Sized>(samples: usize, rng: &mut R) -> Result<Tally> {
    let mut t = Tally::default();
    for _ in 0..samples {
        let alpha = random_primitive_lipschitz(rng, 20);
        let basis = orthogonal_basis(&alpha)?;
        let beta = random_combination(&basis, rng, 5);
        let gamma = random_combination(&basis, rng, 5);
        let c = cross3_lipschitz(&alpha, &beta, &gamma)?;
        let ok = is_lipschitz_multiple(&c, &alpha, Side::Left)?
            && is_lipschitz_multiple(&c, &alpha, Side::Right)?;
        t.check(ok, || format!("α={alpha} β={beta} γ={gamma}: cross={c}"));
    }
    t.summary = format!("{samples} random primitive α");
    Ok(t)
}

/// `αβ × αγ × δ ∈ αL`, plus the example showing `∉ Lα` in general.
pub fn cross_left_multiple<R: Rng + ?Sized>(samples: usize, rng: &mut R) -> Result<Tally> {
    let mut t = Tally::default();
    for _ in 0..samples {
        let [alpha, beta, gamma, delta] = std::array::from_fn(|_| random_lipschitz(rng, 10));
        let c = cross3_lipschitz(&(&alpha * &beta), &(&alpha * &gamma), &delta)?;
        let ok = alpha.is_zero() || is_lipschitz_multiple(&c, &alpha, Side::Left)?;
        t.check(ok, || {
            format!("α={alpha} β={beta} γ={gamma} δ={delta}: cross={c}")
        });
    }
    let (alpha, beta, gamma) = (
        HurwitzQuaternion::new(1, 2, 0, 0),
        HurwitzQuaternion::new(1, 1, 0, 0),
        HurwitzQuaternion::new(1, 0, 1, 0),
    );
    let c = cross3_lipschitz(&(&alpha * &beta), &(&alpha * &gamma), &beta)?;
    let expected = HurwitzQuaternion::new(0, 0, -8, 4);
    let left = is_lipschitz_multiple(&c, &alpha, Side::Left)?;
    let right = is_lipschitz_multiple(&c, &alpha, Side::Right)?;
    t.check(c == expected && left && !right, || {
        format!("α=1+2i, β=δ=1+i, γ=1+j: cross={c}, in αL={left}, in Lα={right}")
    });
    t.summary = format!("{samples} random quadruples and the one-sided example");
    Ok(t)
}

/// The pair-fraction formula under every gcd convention.
pub fn semiprime_fraction(bound: EnumBound) -> Result<Tally> {
    let mut t = Tally::default();
    let mut lines = String::new();
    let mut matching: Option<Vec<GcdConvention>> = None;
    for (p, q) in [(3u64, 5u64), (3, 7), (5, 7)] {
        let mut here = Vec::new();
        for conv in GcdConvention::ALL {
            let r = semiprime_pair_fraction(&BigInt::from(p), &BigInt::from(q), conv, bound)?;
            let _ = write!(
                lines,
                "({p},{q}) {}: {} vs {}; ",
                conv.name(),
                r.fraction,
                r.paper_prediction
            );
            if r.matches_prediction {
                here.push(conv);
            }
        }
        matching = Some(match matching {
            None => here,
            Some(prev) => prev.into_iter().filter(|c| here.contains(c)).collect(),
        });
        t.cases += 1;
    }
    let matching = matching.unwrap_or_default();
    if matching.is_empty() {
        t.failure = Some(format!(
            "no convention reproduces the formula: {}",
            lines.trim_end_matches("; ")
        ));
    } else {
        let names: Vec<_> = matching.iter().map(|c| c.name()).collect();
        t.summary = format!("matching convention(s): {}", names.join(", "));
    }
    Ok(t)
}
