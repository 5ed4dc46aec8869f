//! The ψ-splitting: rewriting matrices over ℤN₂ as matrices over the
//! univariate Laurent-polynomial ring K_ψ[t±] (coefficients in the rational
//! function field of the remaining variables), Smith normal form there, and
//! ψ-primitive kernel framings.
//!
//! A primitive ψ is completed to a unimodular exponent change T with last
//! row ψ; the last variable after the change is the splitting variable t.

use crate::error::{Error, Result};
use crate::fracmat::FracMatrix;
use crate::intmat;
use crate::laurent::{Cocharacter, LaurentPoly, Vars};
use crate::ratfunc::RatFunc;

/// A Laurent polynomial in t with coefficients in the fraction field of the
/// remaining variables. `coeffs[i]` is the coefficient of t^(lo+i);
/// the first and last coefficients are nonzero unless the value is 0.
#[derive(Clone, PartialEq)]
pub struct TPoly {
    lo: i64,
    coeffs: Vec<RatFunc>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly { lo: 0, coeffs: vec![] }
    }

    pub fn from_coeffs(lo: i64, coeffs: Vec<RatFunc>) -> Self {
        let mut p = TPoly { lo, coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.lo += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.lo = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Span of occurring t-exponents; the Euclidean size function. None = ∞.
    pub fn width(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() as i64 - 1)
        }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn coeff(&self, k: i64) -> Option<&RatFunc> {
        if k < self.lo {
            return None;
        }
        self.coeffs.get((k - self.lo) as usize)
    }

    pub fn leading(&self) -> Option<&RatFunc> {
        self.coeffs.last()
    }

    /// True when the value is a unit of K_ψ[t±]: a single nonzero t-level.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn add(&self, other: &Self, vars: &Vars) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(other.lo);
        let hi = (self.lo + self.coeffs.len() as i64).max(other.lo + other.coeffs.len() as i64);
        let mut coeffs = vec![RatFunc::zero(vars); (hi - lo) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.lo - lo) as usize + i] = c.clone();
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            let k = (other.lo - lo) as usize + i;
            coeffs[k] = coeffs[k].add(c);
        }
        TPoly::from_coeffs(lo, coeffs)
    }

    pub fn neg(&self) -> Self {
        TPoly {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, other: &Self, vars: &Vars) -> Self {
        self.add(&other.neg(), vars)
    }

    pub fn mul(&self, other: &Self, vars: &Vars) -> Self {
        if self.is_zero() || other.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs =
            vec![RatFunc::zero(vars); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        TPoly::from_coeffs(self.lo + other.lo, coeffs)
    }

    /// Multiplies by c·t^k.
    pub fn scale_mono(&self, c: &RatFunc, k: i64) -> Self {
        if c.is_zero() {
            return TPoly::zero();
        }
        TPoly {
            lo: self.lo + k,
            coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect(),
        }
    }

    /// Division with remainder: self = q·other + r with width(r) < width(other).
    /// Exact in the field-coefficient Euclidean domain K_ψ[t±].
    pub fn divmod(&self, other: &Self, vars: &Vars) -> Result<(TPoly, TPoly)> {
        if other.is_zero() {
            return Err(Error::Singular);
        }
        let mut r = self.clone();
        let mut q = TPoly::zero();
        let dlead = other.leading().unwrap();
        let dw = other.width().unwrap();
        while let Some(rw) = r.width() {
            if rw < dw {
                break;
            }
            let rl = r.leading().unwrap();
            let c = rl.div(dlead)?.reduced();
            let k = (r.lo + r.coeffs.len() as i64 - 1) - (other.lo + other.coeffs.len() as i64 - 1);
            let term = TPoly::from_coeffs(0, vec![c.clone()]).scale_mono(&RatFunc::one(vars), k);
            q = q.add(&term, vars);
            r = r.sub(&other.scale_mono(&c, k), vars).reduced_coeffs();
        }
        Ok((q, r))
    }

    /// Applies best-effort fraction reduction to every coefficient.
    pub fn reduced_coeffs(&self) -> Self {
        TPoly {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|c| c.reduced()).collect(),
        }
    }

    /// Converts back to a rational function in the t-split variables
    /// (the image ring of the change of variables).
    pub fn to_ratfunc(&self, split_vars: &Vars) -> RatFunc {
        let m = split_vars.len();
        let mut num = LaurentPoly::zero(split_vars);
        let mut den = LaurentPoly::one(split_vars);
        // common denominator = product of coefficient denominators
        for c in &self.coeffs {
            if !c.is_zero() {
                den = den.mul(&lift_poly(c.den(), split_vars));
            }
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut part = lift_poly(c.num(), split_vars);
            for (j, c2) in self.coeffs.iter().enumerate() {
                if j != i && !c2.is_zero() {
                    part = part.mul(&lift_poly(c2.den(), split_vars));
                }
            }
            let mut shift_e = vec![0i64; m];
            shift_e[m - 1] = -(self.lo + i as i64);
            num = num.add(&part.shift(&shift_e));
        }
        RatFunc::new(num, den)
    }
}

impl std::fmt::Debug for TPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({})·t^{}", c, self.lo + i as i64))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Embeds a polynomial in m−1 variables into the m-variable split ring
/// (t-exponent 0).
fn lift_poly(p: &LaurentPoly, split_vars: &Vars) -> LaurentPoly {
    LaurentPoly::from_terms(
        split_vars,
        p.terms().map(|(e, c)| {
            let mut e2 = e.clone();
            e2.push(0);
            (e2, c.clone())
        }),
    )
}

/// Drops the last (t) coordinate of an exponent-sorted polynomial known to
/// be t-free.
fn drop_t(p: &LaurentPoly, rest: &Vars) -> LaurentPoly {
    LaurentPoly::from_terms(
        rest,
        p.terms().map(|(e, c)| {
            debug_assert_eq!(*e.last().unwrap(), 0);
            (e[..e.len() - 1].to_vec(), c.clone())
        }),
    )
}

/// The ψ-split context: the unimodular change T (last row ψ), the image
/// ring's variables, and the coefficient-field variables.
pub struct PsiSplit {
    pub t_mat: Vec<Vec<i64>>,
    pub t_inv: Vec<Vec<i64>>,
    pub split_vars: Vars,
    pub rest_vars: Vars,
}

impl PsiSplit {
    pub fn new(psi: &Cocharacter) -> Result<Self> {
        let m = psi.len();
        let t_mat = intmat::complete_to_unimodular(psi.entries())?;
        let t_inv = intmat::inverse_unimodular_i64(&t_mat)?;
        let mut names: Vec<String> = (1..m).map(|i| format!("s{}", i)).collect();
        names.push("t".to_string());
        let split_vars = Vars::new(names);
        let rest_vars = Vars::new((1..m).map(|i| format!("s{}", i)).collect());
        Ok(PsiSplit {
            t_mat,
            t_inv,
            split_vars,
            rest_vars,
        })
    }

    /// Rewrites a rational function as an element of K_ψ[t±]; errors when
    /// the denominator is not t-free-able (positive t-degree).
    pub fn to_tpoly(&self, x: &RatFunc) -> Result<TPoly> {
        if x.is_zero() {
            return Ok(TPoly::zero());
        }
        let num = x.num().change_vars(&self.t_mat, &self.split_vars)?;
        let den = x.den().change_vars(&self.t_mat, &self.split_vars)?;
        let m = self.split_vars.len();
        // the denominator must live at a single t-level
        let tlevels: std::collections::BTreeSet<i64> =
            den.terms().map(|(e, _)| e[m - 1]).collect();
        if tlevels.len() != 1 {
            return Err(Error::NotInKpsi);
        }
        let dlevel = *tlevels.iter().next().unwrap();
        let mut shift_e = vec![0i64; m];
        shift_e[m - 1] = dlevel;
        let den0 = drop_t(&den.shift(&shift_e), &self.rest_vars);
        // group numerator terms by t-level
        let mut levels: std::collections::BTreeMap<i64, LaurentPoly> =
            std::collections::BTreeMap::new();
        for (e, c) in num.terms() {
            let lvl = e[m - 1];
            let rest_e = e[..m - 1].to_vec();
            levels
                .entry(lvl)
                .or_insert_with(|| LaurentPoly::zero(&self.rest_vars))
                .add_term(rest_e, c.clone());
        }
        let lo = *levels.keys().next().unwrap();
        let hi = *levels.keys().next_back().unwrap();
        let coeffs: Vec<RatFunc> = (lo..=hi)
            .map(|k| {
                levels
                    .get(&k)
                    .map(|p| RatFunc::new(p.clone(), den0.clone()))
                    .unwrap_or_else(|| RatFunc::zero(&self.rest_vars))
            })
            .collect();
        Ok(TPoly::from_coeffs(lo - dlevel, coeffs))
    }

    /// Back to the original variables.
    pub fn from_tpoly(&self, p: &TPoly, original: &Vars) -> Result<RatFunc> {
        p.to_ratfunc(&self.split_vars).change_vars(&self.t_inv, original)
    }
}

/// A matrix rewritten over K_ψ[t±].
pub struct TPolyMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<TPoly>,
    pub rest_vars: Vars,
}

impl TPolyMatrix {
    pub fn at(&self, i: usize, j: usize) -> &TPoly {
        &self.data[i * self.cols + j]
    }

}

/// Converts a matrix over K_{N₂} into a TPolyMatrix for the given ψ.
pub fn to_tpoly_matrix(a: &FracMatrix, psi: &Cocharacter) -> Result<TPolyMatrix> {
    let split = PsiSplit::new(psi)?;
    let mut data = Vec::with_capacity(a.rows() * a.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            data.push(split.to_tpoly(a.at(i, j))?);
        }
    }
    Ok(TPolyMatrix {
        rows: a.rows(),
        cols: a.cols(),
        data,
        rest_vars: split.rest_vars,
    })
}

/// Diagonalization summary over the Euclidean domain K_ψ[t±].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithReport {
    /// Σ t-degrees (widths) of the nonzero non-unit diagonal entries: the
    /// K_ψ-dimension of the torsion part of the cokernel.
    pub torsion_degree_sum: i64,
    /// Number of zero rows of the diagonal: the free rank of the cokernel.
    pub free_corank: usize,
    /// Individual widths of the nonzero non-unit diagonal entries.
    pub degrees: Vec<i64>,
}

/// Smith normal form over K_ψ[t±] by width-reducing Euclidean steps.
/// Divisibility normalization is unnecessary for the degree sum (dimension
/// counts are additive over any diagonalization).
pub fn smith_tpoly(m: &TPolyMatrix) -> SmithReport {
    let vars = m.rest_vars.clone();
    let rows = m.rows;
    let cols = m.cols;
    let mut a: Vec<Vec<TPoly>> = (0..rows)
        .map(|i| (0..cols).map(|j| m.at(i, j).clone()).collect())
        .collect();

    let mut degrees = Vec::new();
    let mut t = 0usize;
    while t < rows.min(cols) {
        // pivot: nonzero entry of minimal width in the live submatrix
        let mut piv: Option<(usize, usize, i64)> = None;
        for i in t..rows {
            for j in t..cols {
                if let Some(w) = a[i][j].width() {
                    if piv.map(|(_, _, pw)| w < pw).unwrap_or(true) {
                        piv = Some((i, j, w));
                    }
                }
            }
        }
        let Some((pi, pj, _)) = piv else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        // clear row and column t by Euclidean reduction
        let mut dirty = false;
        for i in t + 1..rows {
            if a[i][t].is_zero() {
                continue;
            }
            let (q, r) = a[i][t].divmod(&a[t][t], &vars).expect("pivot nonzero");
            // row_i -= q·row_t (entrywise, aligning t-powers)
            for j in t..cols {
                let s = q.mul(&a[t][j], &vars);
                a[i][j] = a[i][j].sub(&s, &vars).reduced_coeffs();
            }
            debug_assert_eq!(a[i][t], r);
            if !a[i][t].is_zero() {
                dirty = true;
            }
        }
        for j in t + 1..cols {
            if a[t][j].is_zero() {
                continue;
            }
            let (q, r) = a[t][j].divmod(&a[t][t], &vars).expect("pivot nonzero");
            for i in t..rows {
                let s = q.mul(&a[i][t], &vars);
                a[i][j] = a[i][j].sub(&s, &vars).reduced_coeffs();
            }
            debug_assert_eq!(a[t][j], r);
            if !a[t][j].is_zero() {
                dirty = true;
            }
        }
        if dirty {
            continue; // smaller widths appeared; repick the pivot
        }
        degrees.push(a[t][t].width().unwrap());
        t += 1;
    }
    let degrees: Vec<i64> = degrees.into_iter().filter(|&d| d > 0).collect();
    SmithReport {
        torsion_degree_sum: degrees.iter().sum(),
        free_corank: rows - t,
        degrees,
    }
}

/// Degree summary without the individual invariant factors: enough for
/// every factorization formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub torsion_degree_sum: i64,
    pub free_corank: usize,
}

/// Groups a split-ring polynomial by t-level into a TPoly with polynomial
/// coefficients.
fn split_poly_to_tpoly(p: &LaurentPoly, rest: &Vars) -> TPoly {
    if p.is_zero() {
        return TPoly::zero();
    }
    let m = p.nvars();
    let mut levels: std::collections::BTreeMap<i64, LaurentPoly> = std::collections::BTreeMap::new();
    for (e, c) in p.terms() {
        levels
            .entry(e[m - 1])
            .or_insert_with(|| LaurentPoly::zero(rest))
            .add_term(e[..m - 1].to_vec(), c.clone());
    }
    let lo = *levels.keys().next().unwrap();
    let hi = *levels.keys().next_back().unwrap();
    let coeffs = (lo..=hi)
        .map(|k| {
            levels
                .get(&k)
                .map(|q| RatFunc::from_poly(q.clone()))
                .unwrap_or_else(|| RatFunc::zero(rest))
        })
        .collect();
    TPoly::from_coeffs(lo, coeffs)
}

/// Torsion degree sum and free corank of a polynomial matrix over ℤN₂,
/// computed through determinantal divisors: the degree sum equals the
/// t-width of Δ_r = gcd of the r×r minors (r = rank), since the invariant
/// factor degrees telescope. Avoids the full Smith elimination on larger
/// matrices.
pub fn degree_report(a: &FracMatrix, psi: &Cocharacter) -> Result<DegreeReport> {
    let split = PsiSplit::new(psi)?;
    let grid = a
        .to_poly_grid()
        .ok_or(Error::UnsupportedCorank(usize::MAX))?;
    let split_grid: Vec<Vec<LaurentPoly>> = grid
        .iter()
        .map(|row| {
            row.iter()
                .map(|p| p.change_vars(&split.t_mat, &split.split_vars))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let sm = FracMatrix::from_poly_grid(&split.split_vars, &split_grid);
    let r = sm.rank();
    let corank = a.rows() - r;
    if r == 0 {
        return Ok(DegreeReport {
            torsion_degree_sum: 0,
            free_corank: corank,
        });
    }
    // gcd over K_psi[t±] of all nonzero r×r minors, early exit at width 0
    let rows_sets = subsets_of(sm.rows(), r);
    let cols_sets = subsets_of(sm.cols(), r);
    let mut g = TPoly::zero();
    'outer: for rs in &rows_sets {
        for cs in &cols_sets {
            let d = sm.submatrix(rs, cs).det()?;
            if d.is_zero() {
                continue;
            }
            let p = d
                .to_laurent()
                .ok_or_else(|| Error::Internal("polynomial minor expected".into()))?;
            let t = split_poly_to_tpoly(&p, &split.rest_vars);
            g = tpoly_gcd(&g, &t, &split.rest_vars)?;
            if g.width() == Some(0) {
                break 'outer;
            }
        }
    }
    let sum = g
        .width()
        .ok_or_else(|| Error::Internal("rank-many minors all vanished".into()))?;
    Ok(DegreeReport {
        torsion_degree_sum: sum,
        free_corank: corank,
    })
}

fn subsets_of(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        if n - start < k - cur.len() {
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// ψ-primitivizes a nonzero vector over K_{N₂}: returns a scalar multiple
/// whose entries lie in K_ψ[t±] with unit entry-gcd, in the original
/// variables.
pub fn primitivize(v: &[RatFunc], psi: &Cocharacter) -> Result<Vec<RatFunc>> {
    if v.is_empty() || v.iter().all(|x| x.is_zero()) {
        return Err(Error::ZeroVector);
    }
    let original = v[0].vars().clone();
    let split = PsiSplit::new(psi)?;
    // clear all denominators into K_ψ[t±]: multiplying by the (t-split)
    // denominators themselves is a valid K_Γ-scalar operation
    let mut entries: Vec<(TPoly, TPoly)> = Vec::new(); // (num, den) as t-polys
    for x in v {
        if x.is_zero() {
            entries.push((TPoly::zero(), TPoly::from_coeffs(0, vec![RatFunc::one(&split.rest_vars)])));
            continue;
        }
        let num = split.to_tpoly(&RatFunc::from_poly(x.num().clone()))?;
        let den = split.to_tpoly(&RatFunc::from_poly(x.den().clone()))?;
        entries.push((num, den));
    }
    // common multiplier = product of all denominators
    let mut cleared: Vec<TPoly> = Vec::with_capacity(v.len());
    for i in 0..entries.len() {
        let mut val = entries[i].0.clone();
        for (j, (_, d)) in entries.iter().enumerate() {
            if j != i {
                val = val.mul(d, &split.rest_vars);
            }
        }
        cleared.push(val);
    }
    // divide by the univariate gcd of all entries
    let mut g = TPoly::zero();
    for e in &cleared {
        g = tpoly_gcd(&g, e, &split.rest_vars)?;
    }
    let out: Result<Vec<RatFunc>> = cleared
        .iter()
        .map(|e| {
            let (q, r) = e.divmod(&g, &split.rest_vars)?;
            if !r.is_zero() {
                return Err(Error::Internal("gcd does not divide entry".into()));
            }
            split.from_tpoly(&q, &original)
        })
        .collect();
    out
}

/// Euclidean gcd in K_ψ[t±] (monic-leading normalization).
pub fn tpoly_gcd(a: &TPoly, b: &TPoly, vars: &Vars) -> Result<TPoly> {
    let mut f = a.clone();
    let mut g = b.clone();
    while !g.is_zero() {
        let (_, r) = f.divmod(&g, vars)?;
        f = g;
        g = r;
    }
    if f.is_zero() {
        return Ok(f);
    }
    // normalize: monic leading coefficient, lowest power at t^0
    let lead = f.leading().unwrap().clone();
    let lo = f.lo();
    Ok(f.scale_mono(&lead.inv()?, -lo))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fracmat::{int_entry, one_entry};
    use num_bigint::BigInt;

    fn vv() -> Vars {
        Vars::gamma(2)
    }

    fn g(i: usize) -> RatFunc {
        RatFunc::from_poly(LaurentPoly::var(&vv(), i))
    }

    #[test]
    fn split_roundtrip() {
        let psi = Cocharacter::new(vec![1, 0]).unwrap();
        let split = PsiSplit::new(&psi).unwrap();
        let x = g(0).sub(&one_entry(&vv()));
        let t = split.to_tpoly(&x).unwrap();
        assert_eq!(t.width(), Some(1));
        let back = split.from_tpoly(&t, &vv()).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn constant_matrix_degree_zero() {
        let psi = Cocharacter::new(vec![1, 0]).unwrap();
        let m = FracMatrix::identity(&vv(), 2);
        let tm = to_tpoly_matrix(&m, &psi).unwrap();
        for i in 0..2 {
            assert_eq!(tm.at(i, i).width(), Some(0));
        }
    }

    #[test]
    fn t_denominator_rejected() {
        let psi = Cocharacter::new(vec![1, 0]).unwrap();
        let split = PsiSplit::new(&psi).unwrap();
        let bad = one_entry(&vv())
            .div(&g(0).sub(&one_entry(&vv())))
            .unwrap();
        assert!(matches!(split.to_tpoly(&bad), Err(Error::NotInKpsi)));
        // γ2-denominators are fine for ψ = (1,0): t-free units
        let ok = one_entry(&vv()).div(&g(1).sub(&one_entry(&vv()))).unwrap();
        assert!(split.to_tpoly(&ok).is_ok());
    }

    #[test]
    fn smith_diag_example() {
        // A = diag(t−1, 1): torsion_degree_sum = 1, free_corank = 0
        let psi = Cocharacter::new(vec![1, 0]).unwrap();
        let t_minus_1 = g(0).sub(&one_entry(&vv()));
        let a = crate::fracmat::diagonal(&vv(), &[t_minus_1, one_entry(&vv())]);
        let rep = smith_tpoly(&to_tpoly_matrix(&a, &psi).unwrap());
        assert_eq!(rep.torsion_degree_sum, 1);
        assert_eq!(rep.free_corank, 0);
        assert_eq!(rep.degrees, vec![1]);
    }

    #[test]
    fn smith_zero_matrix() {
        let psi = Cocharacter::new(vec![1, 0]).unwrap();
        let a = FracMatrix::zero(&vv(), 2, 1);
        let rep = smith_tpoly(&to_tpoly_matrix(&a, &psi).unwrap());
        assert_eq!(rep.free_corank, 2);
        assert_eq!(rep.torsion_degree_sum, 0);
    }

    #[test]
    fn smith_degree_sum_equals_det_degree() {
        // square nonsingular over ℤN₂: degree sum = deg^ψ(det)
        let psi = Cocharacter::new(vec![1, 2]).unwrap();
        let a = FracMatrix::new(
            &vv(),
            2,
            2,
            vec![
                g(0).sub(&one_entry(&vv())),
                g(1),
                int_entry(&vv(), 2),
                g(0).mul(&g(1)).add(&one_entry(&vv())),
            ],
        );
        let det_deg = a.det().unwrap().psi_degree(psi.entries()).unwrap();
        let rep = smith_tpoly(&to_tpoly_matrix(&a, &psi).unwrap());
        assert_eq!(rep.torsion_degree_sum, det_deg);
        assert_eq!(rep.free_corank, 0);
    }

    #[test]
    fn primitivize_examples() {
        let psi = Cocharacter::new(vec![1, 0]).unwrap();
        // (t−1, t−1) → (1, 1)
        let tm1 = g(0).sub(&one_entry(&vv()));
        let v = primitivize(&[tm1.clone(), tm1.clone()], &psi).unwrap();
        assert_eq!(v[0], v[1]);
        assert_eq!(v[0].psi_degree(psi.entries()), Some(0));
        // ((t−1)/q, 1/q) with q t-free → (t−1, 1) up to a t-free unit
        let q = g(1).sub(&int_entry(&vv(), 3));
        let v2 = primitivize(
            &[tm1.clone().div(&RatFunc::from_poly(q.num().clone())).unwrap(),
              one_entry(&vv()).div(&RatFunc::from_poly(q.num().clone())).unwrap()],
            &psi,
        )
        .unwrap();
        let ratio = v2[0].div(&v2[1]).unwrap();
        assert_eq!(ratio, tm1);
        assert_eq!(v2[1].psi_degree(psi.entries()), Some(0));
        // zero vector errors
        assert!(primitivize(&[RatFunc::zero(&vv())], &psi).is_err());
        let _ = BigInt::from(0);
    }
}
