//! The generalized vector product of `n - 1` vectors in `n`-space, its
//! quaternion specialization, and the two closed forms for its norm.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::quat::HurwitzQuaternion;

/// Exact determinant of a square integer matrix.
///
/// Cofactor expansion up to 5×5, fraction-free Bareiss elimination above.
pub fn determinant(rows: &[Vec<BigInt>]) -> Result<BigInt> {
    let n = rows.len();
    if let Some(bad) = rows.iter().find(|r| r.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: bad.len(),
        });
    }
    if n <= 5 {
        Ok(cofactor_det(rows))
    } else {
        Ok(bareiss_det(rows.to_vec()))
    }
}

fn cofactor_det(rows: &[Vec<BigInt>]) -> BigInt {
    let cols: Vec<usize> = (0..rows.len()).collect();
    cofactor_det_cols(rows, &cols)
}

fn cofactor_det_cols(rows: &[Vec<BigInt>], cols: &[usize]) -> BigInt {
    match cols.len() {
        0 => BigInt::one(),
        1 => rows[0][cols[0]].clone(),
        2 => &rows[0][cols[0]] * &rows[1][cols[1]] - &rows[0][cols[1]] * &rows[1][cols[0]],
        _ => {
            let mut acc = BigInt::zero();
            for (pos, &c) in cols.iter().enumerate() {
                let entry = &rows[0][c];
                if entry.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let minor = cofactor_det_cols(&rows[1..], &rest);
                if pos % 2 == 0 {
                    acc += entry * minor;
                } else {
                    acc -= entry * minor;
                }
            }
            acc
        }
    }
}

pub(crate) fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v.div_floor(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// `u₁ × ⋯ × u_{n−1}`: the formal determinant with the basis vectors in the
/// last row, expanded along that row.
pub fn cross_general(vectors: &[Vec<BigInt>]) -> Result<Vec<BigInt>> {
    let n = vectors.len() + 1;
    if n < 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: n,
        });
    }
    if let Some(bad) = vectors.iter().find(|v| v.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: bad.len(),
        });
    }
    let mut out = Vec::with_capacity(n);
    for m in 0..n {
        let minor: Vec<Vec<BigInt>> = vectors
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != m)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let det = determinant(&minor)?;
        // (−1)^(n+m) with 1-based m
        if (n + m + 1).is_multiple_of(2) {
            out.push(det);
        } else {
            out.push(-det);
        }
    }
    Ok(out)
}

/// A quaternion with rational coordinates `numerators / denominator`,
/// stored in lowest terms with a positive denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledQuaternion {
    pub numerators: [BigInt; 4],
    pub denominator: BigInt,
}

impl ScaledQuaternion {
    fn reduced(numerators: [BigInt; 4], denominator: BigInt) -> Self {
        let g = numerators
            .iter()
            .fold(denominator.clone(), |acc, x| acc.gcd(x));
        ScaledQuaternion {
            numerators: numerators.map(|x| x / &g),
            denominator: denominator / g,
        }
    }

    pub fn is_lipschitz(&self) -> bool {
        self.denominator.is_one()
    }

    /// The value as a Hurwitz integer, when it is one.
    pub fn to_hurwitz(&self) -> Option<HurwitzQuaternion> {
        let two = BigInt::from(2);
        if self.denominator.is_one() {
            Some(HurwitzQuaternion::from_coords(self.numerators.clone()))
        } else if self.denominator == two {
            HurwitzQuaternion::from_doubled(self.numerators.clone()).ok()
        } else {
            None
        }
    }
}

fn as_rows(qs: &[&HurwitzQuaternion]) -> Vec<Vec<BigInt>> {
    qs.iter().map(|q| q.doubled().to_vec()).collect()
}

/// `u × v × w` for arbitrary Hurwitz arguments.
///
/// Computed on doubled coordinates, so the raw result carries a factor 8.
/// Three Lipschitz arguments always give a Lipschitz result; half-odd
/// arguments may leave a denominator of 2, 4 or 8.
pub fn cross3(
    u: &HurwitzQuaternion,
    v: &HurwitzQuaternion,
    w: &HurwitzQuaternion,
) -> ScaledQuaternion {
    let raw = cross_general(&as_rows(&[u, v, w])).expect("dimension 4");
    let numerators: [BigInt; 4] = raw.try_into().expect("four coordinates");
    ScaledQuaternion::reduced(numerators, BigInt::from(8))
}

/// `u × v × w` for Lipschitz arguments.
pub fn cross3_lipschitz(
    u: &HurwitzQuaternion,
    v: &HurwitzQuaternion,
    w: &HurwitzQuaternion,
) -> Result<HurwitzQuaternion> {
    let rows = [u, v, w]
        .iter()
        .map(|q| q.require_lipschitz().map(|c| c.to_vec()))
        .collect::<Result<Vec<_>>>()?;
    let raw = cross_general(&rows)?;
    Ok(HurwitzQuaternion::from_coords(
        raw.try_into().expect("four coordinates"),
    ))
}

/// `(u₁ × u₂ × u₃)·v`, i.e. the 4×4 determinant with rows `u₁, u₂, u₃, v`.
pub fn triple_scalar(u1: &[BigInt], u2: &[BigInt], u3: &[BigInt], v: &[BigInt]) -> Result<BigInt> {
    let rows = vec![u1.to_vec(), u2.to_vec(), u3.to_vec(), v.to_vec()];
    determinant(&rows)
}

fn lipschitz_dot(x: &HurwitzQuaternion, y: &HurwitzQuaternion) -> BigInt {
    x.inner_product(y)
        .to_integer()
        .expect("inner product of Lipschitz integers is integral")
}

fn require_all_lipschitz(qs: [&HurwitzQuaternion; 3]) -> Result<()> {
    if qs.iter().all(|q| q.is_lipschitz()) {
        Ok(())
    } else {
        Err(Error::NotLipschitz)
    }
}

/// Determinant of the Gram matrix of `u, v, w`.
pub fn gram_norm(
    u: &HurwitzQuaternion,
    v: &HurwitzQuaternion,
    w: &HurwitzQuaternion,
) -> Result<BigInt> {
    require_all_lipschitz([u, v, w])?;
    let qs = [u, v, w];
    let gram: Vec<Vec<BigInt>> = qs
        .iter()
        .map(|a| qs.iter().map(|b| lipschitz_dot(a, b)).collect())
        .collect();
    determinant(&gram)
}

/// `N(u)N(v)N(w) − N(u)(v·w)² − N(v)(u·w)² − N(w)(u·v)² + 2(u·v)(u·w)(v·w)`.
pub fn expanded_norm(
    u: &HurwitzQuaternion,
    v: &HurwitzQuaternion,
    w: &HurwitzQuaternion,
) -> Result<BigInt> {
    require_all_lipschitz([u, v, w])?;
    let (nu, nv, nw) = (u.norm(), v.norm(), w.norm());
    let (uv, uw, vw) = (
        lipschitz_dot(u, v),
        lipschitz_dot(u, w),
        lipschitz_dot(v, w),
    );
    Ok(
        &nu * &nv * &nw - &nu * &vw * &vw - &nv * &uw * &uw - &nw * &uv * &uv
            + BigInt::from(2) * &uv * &uw * &vw,
    )
}
