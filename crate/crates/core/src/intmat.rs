//! Exact integer linear algebra: Smith normal form with transforms,
//! determinants, unimodular inverses, and completion of a primitive vector
//! to a unimodular matrix (the ψ-splitting of the exponent lattice).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type IMat = Vec<Vec<BigInt>>;

pub fn from_i64(m: &[Vec<i64>]) -> IMat {
    m.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

pub fn to_i64(m: &IMat) -> Option<Vec<Vec<i64>>> {
    m.iter()
        .map(|r| r.iter().map(|x| i64::try_from(x).ok()).collect())
        .collect()
}

pub fn identity(n: usize) -> IMat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &IMat, b: &IMat) -> IMat {
    let n = a.len();
    let k = b.len();
    let m = if k > 0 { b[0].len() } else { 0 };
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).map(|l| &a[i][l] * &b[l][j]).sum())
                .collect()
        })
        .collect()
}

/// Determinant of a small i64 matrix by cofactor expansion (used only for
/// unimodularity checks on variable changes).
pub fn det_i64(m: &[Vec<i64>]) -> Option<i64> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return None;
    }
    let big = from_i64(m);
    i64::try_from(&det(&big)).ok()
}

/// Integer determinant by fraction-free (Bareiss) elimination.
pub fn det(m: &IMat) -> BigInt {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n));
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Smith normal form: returns (U, D, V, rank) with U·A·V = D diagonal,
/// U, V unimodular, and the diagonal entries satisfying the divisibility
/// chain.
pub fn smith(a0: &IMat) -> (IMat, IMat, IMat, usize) {
    let m = a0.len();
    let n = if m > 0 { a0[0].len() } else { 0 };
    let mut a = a0.to_vec();
    let mut u = identity(m);
    let mut v = identity(n);

    let mut t = 0usize;
    while t < m.min(n) {
        // find a pivot: nonzero entry of minimal absolute value in the
        // remaining submatrix
        let mut piv: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if !a[i][j].is_zero()
                    && piv
                        .map(|(pi, pj)| a[i][j].abs() < a[pi][pj].abs())
                        .unwrap_or(true)
                {
                    piv = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = piv else { break };
        a.swap(t, pi);
        u.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        for row in v.iter_mut() {
            row.swap(t, pj);
        }

        let mut clean = true;
        for i in t + 1..m {
            if !a[i][t].is_zero() {
                let q = a[i][t].div_floor(&a[t][t]);
                for j in 0..n {
                    let s = &a[t][j] * &q;
                    a[i][j] -= s;
                }
                for j in 0..m {
                    let s = &u[t][j] * &q;
                    u[i][j] -= s;
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
        }
        for j in t + 1..n {
            if !a[t][j].is_zero() {
                let q = a[t][j].div_floor(&a[t][t]);
                for i in 0..m {
                    let s = &a[i][t] * &q;
                    a[i][j] -= s;
                    let sv = &v[i][t] * &q;
                    v[i][j] -= sv;
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
        }
        if !clean {
            continue; // smaller remainders now exist; repick pivot
        }
        t += 1;
    }

    // divisibility chain
    let mut r = 0;
    while r < m.min(n) && !a[r][r].is_zero() {
        r += 1;
    }
    for i in 0..r {
        for j in i + 1..r {
            if (&a[j][j] % &a[i][i]).is_zero() {
                continue;
            }
            // 2x2 diagonal repair: P·diag(d1,d2)·Q = diag(gcd, lcm)
            let (d1, d2) = (a[i][i].clone(), a[j][j].clone());
            let g = d1.gcd(&d2);
            let l = (&d1 / &g) * &d2;
            a[i][i] = g.clone();
            a[j][j] = l;
            // adjust transforms: U rows i,j and V cols i,j via Bezout
            let e = d1.extended_gcd(&d2);
            // g = x·d1 + y·d2
            let (x, y) = (e.x, e.y);
            // row ops on U: new_ui = x·ui + y·uj ; new_uj = -(d2/g)·ui + (d1/g)·uj
            let (c1, c2) = (&d2 / &g, &d1 / &g);
            for k in 0..m {
                let ui = u[i][k].clone();
                let uj = u[j][k].clone();
                u[i][k] = &x * &ui + &y * &uj;
                u[j][k] = -&c1 * &ui + &c2 * &uj;
            }
            // col ops on V: new_vi = vi + vj ; new_vj = -y·(d2/g)·vi + x·(d1/g)·vj
            for row in v.iter_mut() {
                let vi = row[i].clone();
                let vj = row[j].clone();
                row[i] = &vi + &vj;
                row[j] = -&y * &c1 * &vi + &x * &c2 * &vj;
            }
        }
    }
    // normalize signs
    for i in 0..r {
        if a[i][i].is_negative() {
            for j in 0..n {
                a[i][j] = -a[i][j].clone();
            }
            for j in 0..m {
                u[i][j] = -u[i][j].clone();
            }
        }
    }
    (u, a, v, r)
}

/// Inverse of a unimodular integer matrix; errors when |det| ≠ 1.
pub fn inverse_unimodular(a: &IMat) -> Result<IMat> {
    let n = a.len();
    let d = det(a);
    if !d.abs().is_one() {
        return Err(Error::NotUnimodular);
    }
    // adjugate via minors (n is small here: 2g or 2g+l)
    let mut adj = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let sub: IMat = (0..n)
                .filter(|&r| r != i)
                .map(|r| {
                    (0..n)
                        .filter(|&c| c != j)
                        .map(|c| a[r][c].clone())
                        .collect()
                })
                .collect();
            let sign = if (i + j) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            adj[j][i] = sign * det(&sub);
        }
    }
    if d.is_negative() {
        for row in adj.iter_mut() {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
        }
    }
    Ok(adj)
}

/// Solves M·X = B exactly over ℤ for unimodular M.
pub fn solve_unimodular(m: &IMat, b: &IMat) -> Result<IMat> {
    Ok(mat_mul(&inverse_unimodular(m)?, b))
}

/// Completes a primitive row vector ψ to a unimodular matrix T whose LAST
/// row is ψ, via extended-gcd column reduction. Then (T·e)'s last
/// coordinate equals ψ·e for every exponent vector e.
pub fn complete_to_unimodular(psi: &[i64]) -> Result<Vec<Vec<i64>>> {
    let n = psi.len();
    if n == 0 {
        return Err(Error::ImprimitivePsi);
    }
    // build U ∈ GL(n,ℤ) with ψ·U = (1,0,…,0) by columnwise gcd steps
    let mut w: Vec<BigInt> = psi.iter().map(|&x| BigInt::from(x)).collect();
    let mut u = identity(n);
    // sequentially fold column j into column 0 by extended gcd
    for j in 1..n {
        if w[j].is_zero() {
            continue;
        }
        let e = w[0].extended_gcd(&w[j]);
        let (g, x, y) = (e.gcd, e.x, e.y);
        let (a, b) = (&w[0] / &g, &w[j] / &g);
        // new col0 = x·col0 + y·colj ; new colj = -b·col0 + a·colj
        for row in u.iter_mut() {
            let c0 = row[0].clone();
            let cj = row[j].clone();
            row[0] = &x * &c0 + &y * &cj;
            row[j] = -&b * &c0 + &a * &cj;
        }
        w[j] = BigInt::zero();
        w[0] = g;
    }
    if !w[0].abs().is_one() {
        return Err(Error::ImprimitivePsi);
    }
    if w[0].is_negative() {
        for row in u.iter_mut() {
            row[0] = -row[0].clone();
        }
    }
    // ψ = first row of U⁻¹; rotate rows so ψ becomes the last row
    let uinv = inverse_unimodular(&u)?;
    let mut t: IMat = Vec::with_capacity(n);
    for row in uinv.iter().skip(1) {
        t.push(row.clone());
    }
    t.push(uinv[0].clone());
    let t64 = to_i64(&t).ok_or_else(|| Error::Internal("psi completion overflow".into()))?;
    debug_assert_eq!(t64[n - 1], psi.to_vec());
    Ok(t64)
}

/// Inverse of a unimodular i64 matrix.
pub fn inverse_unimodular_i64(t: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let inv = inverse_unimodular(&from_i64(t))?;
    to_i64(&inv).ok_or_else(|| Error::Internal("inverse overflow".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_and_inverse() {
        let a = from_i64(&[vec![2, 1], vec![1, 1]]);
        assert_eq!(det(&a), BigInt::one());
        let inv = inverse_unimodular(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), identity(2));
    }

    #[test]
    fn smith_diagonalizes() {
        let a = from_i64(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
        let (u, d, v, r) = smith(&a);
        assert_eq!(mat_mul(&mat_mul(&u, &a), &v), d);
        assert_eq!(r, 3);
        // known invariant factors of this classic example: 2, 2, 156
        assert_eq!(d[0][0], BigInt::from(2));
        assert_eq!(d[1][1], BigInt::from(2));
        assert_eq!(d[2][2], BigInt::from(156));
    }

    #[test]
    fn smith_rectangular() {
        let a = from_i64(&[vec![1, 0], vec![0, 0], vec![0, 3]]);
        let (u, d, v, r) = smith(&a);
        assert_eq!(mat_mul(&mat_mul(&u, &a), &v), d);
        assert_eq!(r, 2);
    }

    #[test]
    fn completes_psi() {
        for psi in [vec![1, 0, 0, 0], vec![0, 0, 1, 0], vec![2, 3], vec![3, -5, 7]] {
            let t = complete_to_unimodular(&psi).unwrap();
            assert_eq!(t.last().unwrap(), &psi);
            assert_eq!(det_i64(&t).unwrap().abs(), 1);
        }
        assert!(complete_to_unimodular(&[2, 4]).is_err());
    }
}
