//! Exact linear algebra over the fraction field K_{N₂}: fraction-free
//! (Bareiss) determinants, rank, right solves, minors, kernels, and the
//! torsion bracket Δ(A;U,V).
//!
//! Pivoting always takes the first nonzero entry in row-major order;
//! determinism matters more than speed at the scales involved.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Vars};
use crate::ratfunc::RatFunc;

/// A dense rectangular matrix over K_{N₂}.
#[derive(Clone, PartialEq)]
pub struct FracMatrix {
    vars: Vars,
    rows: usize,
    cols: usize,
    data: Vec<RatFunc>,
}

impl FracMatrix {
    pub fn new(vars: &Vars, rows: usize, cols: usize, data: Vec<RatFunc>) -> Self {
        assert_eq!(data.len(), rows * cols);
        FracMatrix {
            vars: vars.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn zero(vars: &Vars, rows: usize, cols: usize) -> Self {
        FracMatrix {
            vars: vars.clone(),
            rows,
            cols,
            data: vec![RatFunc::zero(vars); rows * cols],
        }
    }

    pub fn identity(vars: &Vars, n: usize) -> Self {
        let mut m = FracMatrix::zero(vars, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = RatFunc::one(vars);
        }
        m
    }

    pub fn from_poly_grid(vars: &Vars, grid: &[Vec<LaurentPoly>]) -> Self {
        let rows = grid.len();
        let cols = grid.first().map(|r| r.len()).unwrap_or(0);
        let data = grid
            .iter()
            .flat_map(|r| r.iter().map(|p| RatFunc::from_poly(p.clone())))
            .collect();
        FracMatrix::new(vars, rows, cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn at(&self, i: usize, j: usize) -> &RatFunc {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut RatFunc {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> Vec<RatFunc> {
        (0..self.cols).map(|j| self.at(i, j).clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<RatFunc> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = FracMatrix::zero(&self.vars, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    pub fn map(&self, f: impl Fn(&RatFunc) -> RatFunc) -> Self {
        FracMatrix {
            vars: self.vars.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn bar(&self) -> Self {
        self.map(|x| x.bar())
    }

    pub fn neg(&self) -> Self {
        self.map(|x| x.neg())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.add(b))
            .collect();
        FracMatrix::new(&self.vars, self.rows, self.cols, data)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = FracMatrix::zero(&self.vars, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = RatFunc::zero(&self.vars);
                for k in 0..self.cols {
                    if self.at(i, k).is_zero() || other.at(k, j).is_zero() {
                        continue;
                    }
                    acc = acc.add(&self.at(i, k).mul(other.at(k, j)));
                }
                *out.at_mut(i, j) = acc;
            }
        }
        out
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        self.map(|x| x.mul(c))
    }

    /// Entrywise change of variables by a unimodular exponent map.
    pub fn change_vars(&self, t: &[Vec<i64>], target: &Vars) -> Result<Self> {
        let data = self
            .data
            .iter()
            .map(|x| x.change_vars(t, target))
            .collect::<Result<Vec<_>>>()?;
        Ok(FracMatrix::new(target, self.rows, self.cols, data))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Deletes row i and column j (0-based).
    pub fn delete_row_col(&self, i: usize, j: usize) -> Result<Self> {
        if i >= self.rows || j >= self.cols {
            return Err(Error::IndexOutOfRange);
        }
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for r in 0..self.rows {
            if r == i {
                continue;
            }
            for c in 0..self.cols {
                if c == j {
                    continue;
                }
                data.push(self.at(r, c).clone());
            }
        }
        Ok(FracMatrix::new(&self.vars, self.rows - 1, self.cols - 1, data))
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let data = rows
            .iter()
            .flat_map(|&r| cols.iter().map(move |&c| self.at(r, c).clone()))
            .collect();
        FracMatrix::new(&self.vars, rows.len(), cols.len(), data)
    }

    /// True when every entry is visibly a Laurent polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.data.iter().all(|x| x.is_laurent())
    }

    /// Entries as Laurent polynomials (requires `is_polynomial`).
    pub fn to_poly_grid(&self) -> Option<Vec<Vec<LaurentPoly>>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j).to_laurent()).collect())
            .collect()
    }

    /// Matrix JSON form.
    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<Vec<serde_json::Value>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j).to_json()).collect())
            .collect();
        serde_json::json!({"rows": self.rows, "cols": self.cols, "entries": entries})
    }

    /// Clears denominators row by row; returns the polynomial grid and the
    /// product of all clearing factors (the determinant correction).
    fn clear_denominators(&self) -> (Vec<Vec<LaurentPoly>>, RatFunc) {
        let mut grid = Vec::with_capacity(self.rows);
        let mut correction = RatFunc::one(&self.vars);
        for i in 0..self.rows {
            let mut seen: Vec<&LaurentPoly> = Vec::new();
            let mut scale = LaurentPoly::one(&self.vars);
            for j in 0..self.cols {
                let e = self.at(i, j);
                if !e.is_zero() && !e.is_laurent() && !seen.contains(&e.den()) {
                    seen.push(e.den());
                    scale = scale.mul(e.den());
                }
            }
            let row: Vec<LaurentPoly> = (0..self.cols)
                .map(|j| {
                    let e = self.at(i, j);
                    let scaled = e.mul(&RatFunc::from_poly(scale.clone()));
                    scaled
                        .to_laurent()
                        .expect("denominator clearing must produce polynomials")
                })
                .collect();
            grid.push(row);
            correction = correction.mul(&RatFunc::from_poly(scale));
        }
        (grid, correction)
    }

    /// Exact determinant. Polynomial matrices go through fraction-free
    /// Bareiss elimination; otherwise row denominators are cleared first and
    /// the correction divided back out.
    pub fn det(&self) -> Result<RatFunc> {
        if self.rows != self.cols {
            return Err(Error::NotSquare);
        }
        if self.rows == 0 {
            return Ok(RatFunc::one(&self.vars));
        }
        let (grid, correction) = self.clear_denominators();
        let d = bareiss_det(&self.vars, grid);
        RatFunc::from_poly(d).div(&correction)
    }

    /// Rank over the fraction field by fraction-free elimination with full
    /// pivot search.
    pub fn rank(&self) -> usize {
        let (grid, _) = self.clear_denominators();
        bareiss_rank(&self.vars, grid)
    }

    /// det of the (i,j)-deleted matrix (0-based indices).
    pub fn minor(&self, i: usize, j: usize) -> Result<RatFunc> {
        if self.rows != self.cols || self.rows < 2 {
            return Err(Error::NotSquare);
        }
        self.delete_row_col(i, j)?.det()
    }

    /// Solves A·X = B for square nonsingular A: forward fraction-free
    /// elimination on the augmented matrix, then rational back-substitution.
    pub fn solve_right(&self, b: &FracMatrix) -> Result<FracMatrix> {
        if self.rows != self.cols {
            return Err(Error::NotSquare);
        }
        assert_eq!(self.rows, b.rows);
        let n = self.rows;
        let m = b.cols;
        // augmented polynomial matrix, denominators cleared per row
        let aug = {
            let mut big = FracMatrix::zero(&self.vars, n, n + m);
            for i in 0..n {
                for j in 0..n {
                    *big.at_mut(i, j) = self.at(i, j).clone();
                }
                for j in 0..m {
                    *big.at_mut(i, n + j) = b.at(i, j).clone();
                }
            }
            big
        };
        let (mut grid, _) = aug.clear_denominators();
        // forward Bareiss with row pivoting
        let mut prev = LaurentPoly::one(&self.vars);
        for k in 0..n {
            if grid[k][k].is_zero() {
                let pivot = (k + 1..n).find(|&r| !grid[r][k].is_zero());
                match pivot {
                    Some(r) => grid.swap(k, r),
                    None => return Err(Error::Singular),
                }
            }
            for i in k + 1..n {
                for j in k + 1..(n + m) {
                    let t = grid[k][k]
                        .mul(&grid[i][j])
                        .sub(&grid[i][k].mul(&grid[k][j]));
                    grid[i][j] = t
                        .exact_div(&prev)
                        .expect("Bareiss division must be exact");
                }
                grid[i][k] = LaurentPoly::zero(&self.vars);
            }
            prev = grid[k][k].clone();
        }
        // back substitution over the fraction field
        let mut x = FracMatrix::zero(&self.vars, n, m);
        for c in 0..m {
            for i in (0..n).rev() {
                let mut acc = RatFunc::from_poly(grid[i][n + c].clone());
                for j in i + 1..n {
                    acc = acc.sub(&RatFunc::from_poly(grid[i][j].clone()).mul(x.at(j, c)));
                }
                *x.at_mut(i, c) = acc.div(&RatFunc::from_poly(grid[i][i].clone()))?;
            }
        }
        Ok(x)
    }

    /// A basis of the right kernel {v : A·v = 0} over the fraction field.
    pub fn right_kernel(&self) -> Vec<Vec<RatFunc>> {
        // plain Gauss-Jordan over K with row-major pivot choice
        let mut a: Vec<Vec<RatFunc>> = (0..self.rows).map(|i| self.row(i)).collect();
        let n = self.cols;
        let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
        let mut r = 0;
        for c in 0..n {
            let Some(pr) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, pr);
            let inv = a[r][c].inv().unwrap();
            for j in 0..n {
                a[r][j] = a[r][j].mul(&inv);
            }
            for i in 0..self.rows {
                if i != r && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    for j in 0..n {
                        let t = a[r][j].mul(&f);
                        a[i][j] = a[i][j].sub(&t);
                    }
                }
            }
            pivots.push((r, c));
            r += 1;
            if r == self.rows {
                break;
            }
        }
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let free_cols: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
        free_cols
            .iter()
            .map(|&fc| {
                let mut v = vec![RatFunc::zero(&self.vars); n];
                v[fc] = RatFunc::one(&self.vars);
                for &(pr, pc) in &pivots {
                    v[pc] = a[pr][fc].neg();
                }
                v
            })
            .collect()
    }

    /// A basis of the left kernel {u : u·A = 0}.
    pub fn left_kernel(&self) -> Vec<Vec<RatFunc>> {
        self.transpose().right_kernel()
    }
}

impl std::fmt::Debug for FracMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format!("{}", self.at(i, j))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Fraction-free determinant of a polynomial grid (consumes it).
fn bareiss_det(vars: &Vars, mut a: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = a.len();
    if n == 0 {
        return LaurentPoly::one(vars);
    }
    let mut sign = 1i32;
    let mut prev = LaurentPoly::one(vars);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return LaurentPoly::zero(vars),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = t.exact_div(&prev).expect("Bareiss division must be exact");
            }
            a[i][k] = LaurentPoly::zero(vars);
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        d.neg()
    } else {
        d
    }
}

/// Rank of a polynomial grid by fraction-free elimination with full pivot
/// search (first nonzero in row-major order within the live submatrix).
fn bareiss_rank(vars: &Vars, mut a: Vec<Vec<LaurentPoly>>) -> usize {
    let m = a.len();
    let n = if m > 0 { a[0].len() } else { 0 };
    let mut prev = LaurentPoly::one(vars);
    let mut k = 0;
    while k < m.min(n) {
        let mut piv = None;
        'search: for i in k..m {
            for j in k..n {
                if !a[i][j].is_zero() {
                    piv = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = piv else { break };
        a.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }
        for i in k + 1..m {
            for j in k + 1..n {
                let t = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = t.exact_div(&prev).expect("Bareiss division must be exact");
            }
            a[i][k] = LaurentPoly::zero(vars);
        }
        prev = a[k][k].clone();
        k += 1;
    }
    k
}

/// Naive cofactor-expansion determinant, used as an independent oracle in
/// tests.
pub fn cofactor_det(m: &FracMatrix) -> Result<RatFunc> {
    if m.rows() != m.cols() {
        return Err(Error::NotSquare);
    }
    let n = m.rows();
    if n == 0 {
        return Ok(RatFunc::one(m.vars()));
    }
    if n == 1 {
        return Ok(m.at(0, 0).clone());
    }
    let mut acc = RatFunc::zero(m.vars());
    for j in 0..n {
        if m.at(0, j).is_zero() {
            continue;
        }
        let sub = m.delete_row_col(0, j)?;
        let term = m.at(0, j).mul(&cofactor_det(&sub)?);
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    Ok(acc)
}

/// Parity sign of the juxtaposition (I, Iᶜ) as a permutation of 1..m.
fn juxtaposition_sign(selected: &[usize], m: usize) -> i32 {
    let complement: Vec<usize> = (0..m).filter(|i| !selected.contains(i)).collect();
    let mut inversions = 0usize;
    for &i in selected {
        inversions += complement.iter().filter(|&&j| j < i).count();
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    rec(0, m, k, &mut cur, &mut out);
    out
}

/// The torsion bracket Δ(A;U,V) = sgn(I Iᶜ)·sgn(J Jᶜ)·det A_{IᶜJᶜ} /
/// (det U_I · det V_J), the common value over all admissible (I,J).
/// Preconditions: U·A = 0, A·V = 0, rank U = m−k, rank V = n−k with
/// k = rank A. `det ∅ := 1`.
pub fn delta_bracket(a: &FracMatrix, u: &FracMatrix, v: &FracMatrix) -> Result<RatFunc> {
    let (m, n) = (a.rows(), a.cols());
    let k = a.rank();
    if u.rows() != m - k || u.cols() != m {
        return Err(Error::DeltaPrecondition(format!(
            "U must be {}x{}, got {}x{}",
            m - k,
            m,
            u.rows(),
            u.cols()
        )));
    }
    if v.rows() != n || v.cols() != n - k {
        return Err(Error::DeltaPrecondition(format!(
            "V must be {}x{}, got {}x{}",
            n,
            n - k,
            v.rows(),
            v.cols()
        )));
    }
    if !u.mul(a).is_zero() {
        return Err(Error::DeltaPrecondition("U·A ≠ 0".into()));
    }
    if !a.mul(v).is_zero() {
        return Err(Error::DeltaPrecondition("A·V ≠ 0".into()));
    }
    if u.rank() != m - k {
        return Err(Error::DeltaPrecondition("rank U < m−k".into()));
    }
    if v.rank() != n - k {
        return Err(Error::DeltaPrecondition("rank V < n−k".into()));
    }
    for i_set in subsets(m, m - k) {
        let ui = u.submatrix(&(0..m - k).collect::<Vec<_>>(), &i_set);
        let det_ui = ui.det()?;
        if det_ui.is_zero() {
            continue;
        }
        for j_set in subsets(n, n - k) {
            let vj = v.submatrix(&j_set, &(0..n - k).collect::<Vec<_>>());
            let det_vj = vj.det()?;
            if det_vj.is_zero() {
                continue;
            }
            let ic: Vec<usize> = (0..m).filter(|x| !i_set.contains(x)).collect();
            let jc: Vec<usize> = (0..n).filter(|x| !j_set.contains(x)).collect();
            let sub = a.submatrix(&ic, &jc);
            let d = sub.det()?;
            let sgn = juxtaposition_sign(&i_set, m) * juxtaposition_sign(&j_set, n);
            let val = d.div(&det_ui.mul(&det_vj))?;
            return Ok(if sgn < 0 { val.neg() } else { val });
        }
    }
    Err(Error::Internal(
        "no invertible (U_I, V_J) pair exists; rank preconditions violated".into(),
    ))
}

/// All values of the bracket over admissible (I,J); test oracle for the
/// independence claim.
pub fn delta_bracket_all_choices(
    a: &FracMatrix,
    u: &FracMatrix,
    v: &FracMatrix,
) -> Result<Vec<RatFunc>> {
    let (m, n) = (a.rows(), a.cols());
    let k = a.rank();
    let mut out = Vec::new();
    for i_set in subsets(m, m - k) {
        let ui = u.submatrix(&(0..m - k).collect::<Vec<_>>(), &i_set);
        let det_ui = ui.det()?;
        if det_ui.is_zero() {
            continue;
        }
        for j_set in subsets(n, n - k) {
            let vj = v.submatrix(&j_set, &(0..n - k).collect::<Vec<_>>());
            let det_vj = vj.det()?;
            if det_vj.is_zero() {
                continue;
            }
            let ic: Vec<usize> = (0..m).filter(|x| !i_set.contains(x)).collect();
            let jc: Vec<usize> = (0..n).filter(|x| !j_set.contains(x)).collect();
            let d = a.submatrix(&ic, &jc).det()?;
            let sgn = juxtaposition_sign(&i_set, m) * juxtaposition_sign(&j_set, n);
            let val = d.div(&det_ui.mul(&det_vj))?;
            out.push(if sgn < 0 { val.neg() } else { val });
        }
    }
    Ok(out)
}

/// Diagonal matrix from the given entries.
pub fn diagonal(vars: &Vars, entries: &[RatFunc]) -> FracMatrix {
    let n = entries.len();
    let mut m = FracMatrix::zero(vars, n, n);
    for (i, e) in entries.iter().enumerate() {
        *m.at_mut(i, i) = e.clone();
    }
    m
}

/// Row vector as a 1×n matrix.
pub fn row_matrix(vars: &Vars, entries: &[RatFunc]) -> FracMatrix {
    FracMatrix::new(vars, 1, entries.len(), entries.to_vec())
}

/// Column vector as an n×1 matrix.
pub fn col_matrix(vars: &Vars, entries: &[RatFunc]) -> FracMatrix {
    FracMatrix::new(vars, entries.len(), 1, entries.to_vec())
}

/// Scalar-to-matrix convenience for tests: integer constant matrix entry.
pub fn int_entry(vars: &Vars, c: i64) -> RatFunc {
    RatFunc::from_poly(LaurentPoly::constant(vars, BigInt::from(c)))
}

pub fn one_entry(vars: &Vars) -> RatFunc {
    RatFunc::from_poly(LaurentPoly::one(vars))
}
