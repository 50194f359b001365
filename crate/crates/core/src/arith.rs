//! Rational number theory used by the experiments: primality, square
//! roots of −1, two- and four-square decompositions, factorization.

use num_bigint::{BigInt, RandBigInt};
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::euclid::gaussian_gcd;
use crate::gaussian::GaussianInteger;

/// Below this bound the first seven prime bases decide primality exactly.
pub const DETERMINISTIC_LIMIT: u64 = 341_550_071_728_321;
const SMALL_BASES: [u32; 7] = [2, 3, 5, 7, 11, 13, 17];
pub const DEFAULT_ROUNDS: u32 = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Primality {
    Prime,
    Composite,
}

fn strong_probable_prime(n: &BigInt, d: &BigInt, s: u32, base: &BigInt) -> bool {
    let n_minus_one = n - 1u32;
    let mut x = base.modpow(d, n);
    if x.is_one() || x == n_minus_one {
        return true;
    }
    for _ in 1..s {
        x = &x * &x % n;
        if x == n_minus_one {
            return true;
        }
    }
    false
}

/// Miller–Rabin test, exact below [`DETERMINISTIC_LIMIT`].
///
/// Above the limit, `rounds` extra random bases are drawn from `rng`.
pub fn miller_rabin<R: Rng + ?Sized>(n: &BigInt, rounds: u32, rng: &mut R) -> Primality {
    let two = BigInt::from(2);
    if n < &two {
        return Primality::Composite;
    }
    for p in SMALL_BASES {
        let p = BigInt::from(p);
        if n == &p {
            return Primality::Prime;
        }
        if (n % &p).is_zero() {
            return Primality::Composite;
        }
    }
    let n_minus_one = n - 1u32;
    let s = n_minus_one.trailing_zeros().expect("n > 1") as u32;
    let d = &n_minus_one >> s;
    for p in SMALL_BASES {
        if !strong_probable_prime(n, &d, s, &BigInt::from(p)) {
            return Primality::Composite;
        }
    }
    if n < &BigInt::from(DETERMINISTIC_LIMIT) {
        return Primality::Prime;
    }
    for _ in 0..rounds {
        let base = rng.gen_bigint_range(&two, &n_minus_one);
        if !strong_probable_prime(n, &d, s, &base) {
            return Primality::Composite;
        }
    }
    Primality::Prime
}

/// Primality with [`DEFAULT_ROUNDS`] rounds and a fixed internal seed.
pub fn is_prime(n: &BigInt) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    miller_rabin(n, DEFAULT_ROUNDS, &mut rng) == Primality::Prime
}

/// Some `u` in `(0, p)` with `u² ≡ −1 (mod p)`.
pub fn sqrt_minus_one_mod_p<R: Rng + ?Sized>(p: &BigInt, rng: &mut R) -> Result<BigInt> {
    if p.mod_floor(&BigInt::from(4)) != BigInt::one() {
        return Err(Error::BadResidueClass);
    }
    if !is_prime(p) {
        return Err(Error::precondition(format!("{p} is not prime")));
    }
    let exponent = (p - 1u32) >> 2;
    let minus_one = p - 1u32;
    let two = BigInt::from(2);
    loop {
        // half of all residues are non-residues, each giving a root
        let c = rng.gen_bigint_range(&two, p);
        let u = c.modpow(&exponent, p);
        if (&u * &u) % p == minus_one {
            return Ok(u);
        }
    }
}

/// `p = a² + b²` with `0 <= a <= b`, via `gcd(p, u + i)` in `Z[i]`.
pub fn two_squares<R: Rng + ?Sized>(p: &BigInt, rng: &mut R) -> Result<(BigInt, BigInt)> {
    if p == &BigInt::from(2) {
        return Ok((BigInt::one(), BigInt::one()));
    }
    if p.mod_floor(&BigInt::from(4)) != BigInt::one() || !is_prime(p) {
        return Err(Error::NotRepresentable(p.to_string()));
    }
    let u = sqrt_minus_one_mod_p(p, rng)?;
    let g = gaussian_gcd(
        &GaussianInteger::new(p.clone(), 0),
        &GaussianInteger::new(u, 1),
    )?;
    let (a, b) = (g.re.abs(), g.im.abs());
    debug_assert_eq!(&a * &a + &b * &b, *p);
    Ok(if a <= b { (a, b) } else { (b, a) })
}

/// Below this value [`four_squares`] answers by exhaustive search.
pub const BRUTE_FORCE_LIMIT: u64 = 1000;
const RANDOM_ATTEMPTS: usize = 100_000;

/// The lexicographically first `(a, b, c, d)`, `a <= b <= c <= d`, with
/// `a² + b² + c² + d² = n`.
pub fn four_squares_brute_force(n: u64) -> [u64; 4] {
    let mut a = 0;
    while 4 * a * a <= n {
        let mut b = a;
        while a * a + 3 * b * b <= n {
            let mut c = b;
            while a * a + b * b + 2 * c * c <= n {
                let rest = n - a * a - b * b - c * c;
                let d = rest.sqrt();
                if d >= c && d * d == rest {
                    return [a, b, c, d];
                }
                c += 1;
            }
            b += 1;
        }
        a += 1;
    }
    unreachable!("every nonnegative integer is a sum of four squares")
}

fn random_with_parity<R: Rng + ?Sized>(max: &BigInt, odd: Option<bool>, rng: &mut R) -> BigInt {
    match odd {
        None => rng.gen_bigint_range(&BigInt::zero(), &(max + 1u32)),
        Some(false) => rng.gen_bigint_range(&BigInt::zero(), &((max >> 1) + 1u32)) << 1,
        Some(true) => {
            (rng.gen_bigint_range(&BigInt::zero(), &(((max - 1u32) >> 1) + 1u32)) << 1) + 1u32
        }
    }
}

// p ≡ 1 (mod 4) here by the parity choices, so p ∈ {1} or an odd prime works
fn split_remainder<R: Rng + ?Sized>(p: &BigInt, rng: &mut R) -> Option<(BigInt, BigInt)> {
    if p.is_one() {
        return Some((BigInt::zero(), BigInt::one()));
    }
    if is_prime(p) {
        return two_squares(p, rng).ok();
    }
    None
}

/// Randomized decomposition `n = a² + b² + c² + d²`, sorted ascending.
///
/// Writes `n = 4^e m`, then draws `x, y` with parities chosen so that
/// `p = m − x² − y² ≡ 1 (mod 4)`, until `p` is 1 or a prime, which is then
/// split as a sum of two squares. Small `n` use the exhaustive search.
pub fn four_squares<R: Rng + ?Sized>(n: &BigInt, rng: &mut R) -> Result<[BigInt; 4]> {
    if n.is_negative() {
        return Err(Error::precondition("four_squares expects n >= 0"));
    }
    if let Some(small) = n.to_u64().filter(|&v| v < BRUTE_FORCE_LIMIT) {
        return Ok(four_squares_brute_force(small).map(BigInt::from));
    }
    let mut m = n.clone();
    let mut scale = BigInt::one();
    let four = BigInt::from(4);
    while m.is_multiple_of(&four) {
        m >>= 2;
        scale <<= 1;
    }
    let (x_odd, y_odd_given_x): (Option<bool>, fn(bool) -> bool) =
        match m.mod_floor(&four).to_u8().expect("residue") {
            1 => (Some(false), |_| false),
            2 => (None, |x_is_odd| !x_is_odd),
            _ => (Some(true), |_| true),
        };

    let finish = |x: BigInt, y: BigInt, (a, b): (BigInt, BigInt)| {
        let mut out = [x, y, a, b].map(|v| v * &scale);
        out.sort();
        out
    };

    let root = m.sqrt();
    for _ in 0..RANDOM_ATTEMPTS {
        let x = random_with_parity(&root, x_odd, rng);
        let t = &m - &x * &x;
        let y_odd = y_odd_given_x(x.is_odd());
        let t_root = t.sqrt();
        if y_odd && t_root.is_zero() {
            continue;
        }
        let y = random_with_parity(&t_root, Some(y_odd), rng);
        let p = &t - &y * &y;
        if let Some(ab) = split_remainder(&p, rng) {
            return Ok(finish(x, y, ab));
        }
    }

    // exhaustive sweep over the same (x, y) grid
    let mut x = BigInt::zero();
    while x <= root {
        if x_odd.is_none_or(|odd| odd == x.is_odd()) {
            let t = &m - &x * &x;
            let y_odd = y_odd_given_x(x.is_odd());
            let mut y = BigInt::from(y_odd as u8);
            while &y * &y <= t {
                let p = &t - &y * &y;
                if let Some(ab) = split_remainder(&p, rng) {
                    return Ok(finish(x, y, ab));
                }
                y += 2u32;
            }
        }
        x += 1u32;
    }
    Err(Error::NotRepresentable(n.to_string()))
}

fn pollard_brent(n: &BigInt, rng: &mut ChaCha8Rng) -> BigInt {
    if n.is_even() {
        return BigInt::from(2);
    }
    let one = BigInt::one();
    loop {
        let c = rng.gen_bigint_range(&one, n);
        let mut y = rng.gen_bigint_range(&BigInt::zero(), n);
        let m = 64usize;
        let (mut g, mut r, mut q) = (one.clone(), 1usize, one.clone());
        let mut x = y.clone();
        let mut ys = y.clone();
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = (&y * &y + &c) % n;
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = (&y * &y + &c) % n;
                    q = q * (&x - &y).abs() % n;
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = (&ys * &ys + &c) % n;
                g = (&x - &ys).abs().gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
    }
}

/// Prime factorization with multiplicity, ascending: trial division by
/// small primes, then Pollard–Brent rho on the cofactor.
pub fn rational_factorize(n: &BigInt) -> Result<Vec<BigInt>> {
    if n < &BigInt::from(2) {
        return Err(Error::precondition("rational_factorize expects n >= 2"));
    }
    let mut factors = Vec::new();
    let mut rest = n.clone();
    let mut d = 2u32;
    while d < 1000 {
        let p = BigInt::from(d);
        if &p * &p > rest {
            break;
        }
        while (&rest % &p).is_zero() {
            rest /= &p;
            factors.push(p.clone());
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xfac7);
    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime(&m) {
            factors.push(m);
            continue;
        }
        let f = pollard_brent(&m, &mut rng);
        stack.push(&m / &f);
        stack.push(f);
    }
    factors.sort();
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(7)
    }

    fn trial_is_prime(n: u64) -> bool {
        n >= 2
            && (2..)
                .take_while(|d| d * d <= n)
                .all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn miller_rabin_examples() {
        let mut r = rng();
        assert_eq!(miller_rabin(&BigInt::from(13), 5, &mut r), Primality::Prime);
        assert_eq!(
            miller_rabin(&BigInt::from(15), 5, &mut r),
            Primality::Composite
        );
        let m61 = (BigInt::one() << 61) - 1u32;
        assert_eq!(miller_rabin(&m61, 5, &mut r), Primality::Prime);
        let carmichael = BigInt::from(561);
        assert_eq!(miller_rabin(&carmichael, 5, &mut r), Primality::Composite);
        // a strong pseudoprime to bases 2..13, caught by 17
        assert!(!is_prime(&BigInt::from(3_215_031_751u64)));
    }

    #[test]
    fn miller_rabin_matches_trial_division() {
        for n in 0..5000u64 {
            assert_eq!(is_prime(&BigInt::from(n)), trial_is_prime(n), "{n}");
        }
    }

    #[test]
    fn sqrt_minus_one_examples() {
        let mut r = rng();
        let u = sqrt_minus_one_mod_p(&BigInt::from(5), &mut r).unwrap();
        assert!(u == BigInt::from(2) || u == BigInt::from(3));
        let u = sqrt_minus_one_mod_p(&BigInt::from(13), &mut r).unwrap();
        assert!(u == BigInt::from(5) || u == BigInt::from(8));
        assert_eq!(
            sqrt_minus_one_mod_p(&BigInt::from(7), &mut r),
            Err(Error::BadResidueClass)
        );
    }

    #[test]
    fn two_squares_examples() {
        let mut r = rng();
        let int = |x: i64| BigInt::from(x);
        assert_eq!(two_squares(&int(5), &mut r).unwrap(), (int(1), int(2)));
        assert_eq!(two_squares(&int(13), &mut r).unwrap(), (int(2), int(3)));
        assert_eq!(two_squares(&int(2), &mut r).unwrap(), (int(1), int(1)));
        assert!(matches!(
            two_squares(&int(7), &mut r),
            Err(Error::NotRepresentable(_))
        ));
        assert!(matches!(
            two_squares(&int(25), &mut r),
            Err(Error::NotRepresentable(_))
        ));
        let big = BigInt::from(1_000_000_009u64);
        let (a, b) = two_squares(&big, &mut r).unwrap();
        assert_eq!(&a * &a + &b * &b, big);
    }

    #[test]
    fn four_squares_examples() {
        let mut r = rng();
        let as_u = |v: [BigInt; 4]| v.map(|x| x.to_u64().unwrap());
        assert_eq!(
            as_u(four_squares(&BigInt::from(1), &mut r).unwrap()),
            [0, 0, 0, 1]
        );
        assert_eq!(
            as_u(four_squares(&BigInt::from(15), &mut r).unwrap()),
            [1, 1, 2, 3]
        );
        assert_eq!(
            as_u(four_squares(&BigInt::from(7), &mut r).unwrap()),
            [1, 1, 1, 2]
        );
    }

    #[test]
    fn four_squares_randomized_path() {
        for seed in 0..50 {
            let mut r = ChaCha8Rng::seed_from_u64(seed);
            for n in [1000u64, 1003, 4096, 7 * 4096, 1_000_003, 123_456_789_012] {
                let v = four_squares(&BigInt::from(n), &mut r).unwrap();
                assert!(v.windows(2).all(|w| w[0] <= w[1]));
                assert_eq!(v.iter().map(|x| x * x).sum::<BigInt>(), BigInt::from(n));
            }
        }
    }

    #[test]
    fn four_squares_is_seed_deterministic() {
        let n = BigInt::from(10u64.pow(12) + 39);
        let a = four_squares(&n, &mut ChaCha8Rng::seed_from_u64(3)).unwrap();
        let b = four_squares(&n, &mut ChaCha8Rng::seed_from_u64(3)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn factorization_examples() {
        let f = |n: u64| {
            rational_factorize(&BigInt::from(n))
                .unwrap()
                .into_iter()
                .map(|x| x.to_u64().unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(f(15), vec![3, 5]);
        assert_eq!(f(97), vec![97]);
        assert_eq!(f(8051), vec![83, 97]);
        assert_eq!(f(1 << 10), vec![2; 10]);
        assert_eq!(f(1_000_003 * 1_000_033), vec![1_000_003, 1_000_033]);
        let n = 600_851_475_143u64;
        assert_eq!(f(n).iter().product::<u64>(), n);
        assert!(rational_factorize(&BigInt::one()).is_err());
    }
}
