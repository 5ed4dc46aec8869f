//! Degree-valued and polynomial-valued invariants: torsion-degree
//! functions d/d̄, the Alexander rational function Δ(M), the N₂-torsion
//! class, the closing and mapping-torus factorization checks, presented-
//! group degrees, and the surgery-word degree kernel.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::fracmat::{col_matrix, delta_bracket, row_matrix, FracMatrix};
use crate::intmat;
use crate::laurent::{Cocharacter, LaurentPoly, Vars};
use crate::nilpotent::psi_span_mod_gamma;
use crate::presentation::{abelianize_free, stack_vertical, AdmissiblePresentation, MarkingData};
use crate::ratfunc::RatFunc;
use crate::tpoly::{smith_tpoly, to_tpoly_matrix, SmithReport};
use crate::word::{boundary_word, fox_derivative, Endomorphism, GroupRingElt, Word};

/// A torsion degree: a finite integer or ∞.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeValue {
    Finite(i64),
    Infinite,
}

impl DegreeValue {
    pub fn from_option(v: Option<i64>) -> Self {
        match v {
            Some(x) => DegreeValue::Finite(x),
            None => DegreeValue::Infinite,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, DegreeValue::Finite(_))
    }

    /// INF-absorbing addition.
    pub fn add(self, other: DegreeValue) -> DegreeValue {
        match (self, other) {
            (DegreeValue::Finite(a), DegreeValue::Finite(b)) => DegreeValue::Finite(a + b),
            _ => DegreeValue::Infinite,
        }
    }

    pub fn add_int(self, k: i64) -> DegreeValue {
        self.add(DegreeValue::Finite(k))
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            DegreeValue::Finite(v) => serde_json::json!(v),
            DegreeValue::Infinite => serde_json::json!("inf"),
        }
    }
}

impl std::fmt::Display for DegreeValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DegreeValue::Finite(v) => write!(f, "{}", v),
            DegreeValue::Infinite => write!(f, "inf"),
        }
    }
}

/// Torsion degree d^ψ(A) of a matrix over ℤN₂ (any shape): Smith-route
/// semantics, computed through determinantal divisors.
pub fn torsion_degree(a: &FracMatrix, psi: &Cocharacter) -> Result<i64> {
    Ok(degree_report(a, psi)?.torsion_degree_sum)
}

/// Degree sum and free corank of a polynomial matrix under ψ.
pub fn degree_report(a: &FracMatrix, psi: &Cocharacter) -> Result<crate::tpoly::DegreeReport> {
    crate::tpoly::degree_report(a, psi)
}

/// The full diagonalization report of a polynomial matrix under ψ (the
/// elimination route, with the individual invariant-factor degrees).
pub fn smith_report(a: &FracMatrix, psi: &Cocharacter) -> Result<SmithReport> {
    if !a.is_polynomial() {
        return Err(Error::UnsupportedCorank(usize::MAX));
    }
    Ok(smith_tpoly(&to_tpoly_matrix(a, psi)?))
}

/// Truncated torsion degree d̄^ψ(A): d when rank ≥ rows−1, else ∞.
/// Fractional matrices are handled through the Δ-bracket with computed,
/// ψ-primitivized kernel framings (corank ≤ 1 only).
pub fn truncated_degree(a: &FracMatrix, psi: &Cocharacter) -> Result<DegreeValue> {
    let m = a.rows();
    let rank = a.rank();
    if rank + 1 < m {
        return Ok(DegreeValue::Infinite);
    }
    Ok(DegreeValue::Finite(degree_via_delta(a, psi, rank)?))
}

/// d^ψ via the Δ-bracket with ψ-primitive computed kernels; requires
/// corank ≤ 1 on both sides.
pub fn degree_via_delta(a: &FracMatrix, psi: &Cocharacter, rank: usize) -> Result<i64> {
    let (m, n) = (a.rows(), a.cols());
    if rank == m && rank == n {
        let d = a.det()?;
        return d
            .psi_degree(psi.entries())
            .ok_or_else(|| Error::Internal("zero determinant at full rank".into()));
    }
    if m.saturating_sub(rank) > 1 || n.saturating_sub(rank) > 1 {
        return Err(Error::UnsupportedCorank(m.max(n) - rank));
    }
    let u = if rank == m {
        FracMatrix::zero(a.vars(), 0, m)
    } else {
        let basis = a.left_kernel();
        debug_assert_eq!(basis.len(), 1);
        row_matrix(a.vars(), &crate::tpoly::primitivize(&basis[0], psi)?)
    };
    let v = if rank == n {
        FracMatrix::zero(a.vars(), n, 0)
    } else {
        let basis = a.right_kernel();
        debug_assert_eq!(basis.len(), 1);
        col_matrix(a.vars(), &crate::tpoly::primitivize(&basis[0], psi)?)
    };
    let delta = delta_bracket(a, &u, &v)?;
    delta
        .psi_degree(psi.entries())
        .ok_or_else(|| Error::Internal("zero Δ-bracket".into()))
}

/// Row vector (1−γ₁⁻¹, …, 1−γ_{2g}⁻¹) over the given ring.
pub fn one_minus_gamma_bar(vars: &Vars, g2: usize) -> FracMatrix {
    let entries: Vec<RatFunc> = (0..g2)
        .map(|i| {
            let mut e = vec![0i64; vars.len()];
            e[i] = -1;
            RatFunc::from_poly(
                LaurentPoly::one(vars).sub(&LaurentPoly::monomial(vars, e, BigInt::one())),
            )
        })
        .collect();
    row_matrix(vars, &entries)
}

/// Column vector bar(∂ζ/∂γ_j)ᵀ of the boundary word, abelianized.
pub fn zeta_bar_col(genus: usize, vars: &Vars) -> FracMatrix {
    let g2 = 2 * genus;
    let zeta = boundary_word(genus);
    let entries: Vec<RatFunc> = (1..=g2)
        .map(|j| {
            let d = fox_derivative(&zeta, j);
            RatFunc::from_poly(
                abelianize_free(&d, g2, vars)
                    .expect("boundary word uses surface generators")
                    .bar(),
            )
        })
        .collect();
    col_matrix(vars, &entries)
}

fn is_identity_sigma(sigma: &[Vec<i64>]) -> bool {
    sigma
        .iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, &v)| v == i64::from(i == j)))
}

/// d̄^ψ(I−r₂(M)) through the canonical kernel pair ((1−γ̄ᵢ), bar(∂ζ/∂γ)ᵀ).
/// Rank-deficient cases are ∞ and full-rank cases use the determinant; the
/// canonical pair itself exists only for σ₂ = I, and its absence raises
/// the C[2] error.
pub fn dbar_magnus(p: &AdmissiblePresentation, psi: &Cocharacter) -> Result<DegreeValue> {
    let marking = p.validate()?;
    let vars = Vars::gamma(2 * p.genus());
    let r = p.magnus(&marking, &vars)?;
    dbar_of_one_minus(&r, p.genus(), psi)
}

/// d̄^ψ(I − R) for a 2g×2g Magnus matrix R via the canonical pair.
pub fn dbar_of_one_minus(
    r: &FracMatrix,
    genus: usize,
    psi: &Cocharacter,
) -> Result<DegreeValue> {
    let g2 = 2 * genus;
    let vars = r.vars().clone();
    let k = FracMatrix::identity(&vars, g2).sub(r);
    let rank = k.rank();
    if rank + 1 < g2 {
        return Ok(DegreeValue::Infinite);
    }
    if rank == g2 {
        let d = k.det()?;
        return Ok(DegreeValue::Finite(d.psi_degree(psi.entries()).ok_or_else(
            || Error::Internal("zero determinant at full rank".into()),
        )?));
    }
    let u = one_minus_gamma_bar(&vars, g2);
    let v = zeta_bar_col(genus, &vars);
    if !u.mul(&k).is_zero() || !k.mul(&v).is_zero() {
        return Err(Error::NotInC2);
    }
    let delta = delta_bracket(&k, &u, &v)?;
    Ok(DegreeValue::Finite(
        delta
            .psi_degree(psi.entries())
            .ok_or_else(|| Error::Internal("zero Δ-bracket".into()))?,
    ))
}

/// The Alexander rational function Δ(M) = (−1)^{i+j}·
/// det((I−r₂)_{(i,j)}) / ((1−γᵢ⁻¹)·bar(∂ζ/∂γ_j)): 0 when all maximal
/// minors vanish, well-defined exactly on C[2] otherwise.
pub fn alexander_rational(p: &AdmissiblePresentation) -> Result<RatFunc> {
    let marking = p.validate()?;
    let g2 = 2 * p.genus();
    let vars = Vars::gamma(g2);
    let r = p.magnus(&marking, &vars)?;
    let k = FracMatrix::identity(&vars, g2).sub(&r);
    let rank = k.rank();
    if rank + 1 < g2 {
        return Ok(RatFunc::zero(&vars));
    }
    if !is_identity_sigma(&marking.sigma2) {
        return Err(Error::NotInC2);
    }
    let u = one_minus_gamma_bar(&vars, g2);
    let v = zeta_bar_col(p.genus(), &vars);
    // all denominators (1−γᵢ⁻¹)·bar(∂ζ/∂γ_j) are nonzero; take (1,1)
    let minor = k.minor(0, 0)?;
    let den = u.at(0, 0).mul(v.at(0, 0));
    minor.div(&den)
}

/// All (i,j) values of the Δ(M) formula; oracle for well-definedness.
pub fn alexander_rational_all_pairs(p: &AdmissiblePresentation) -> Result<Vec<RatFunc>> {
    let marking = p.validate()?;
    let g2 = 2 * p.genus();
    let vars = Vars::gamma(g2);
    let r = p.magnus(&marking, &vars)?;
    let k = FracMatrix::identity(&vars, g2).sub(&r);
    let u = one_minus_gamma_bar(&vars, g2);
    let v = zeta_bar_col(p.genus(), &vars);
    let mut out = Vec::new();
    for i in 0..g2 {
        for j in 0..g2 {
            let den = u.at(0, i).mul(v.at(j, 0));
            if den.is_zero() {
                continue;
            }
            let m = k.minor(i, j)?;
            let val = m.div(&den)?;
            out.push(if (i + j) % 2 == 0 { val } else { val.neg() });
        }
    }
    Ok(out)
}

/// The N₂-torsion class τ_{N₂}(M) = det(A;B), in canonical form (defined
/// up to ±monomial).
pub fn torsion_n2(p: &AdmissiblePresentation) -> Result<LaurentPoly> {
    let marking = p.validate()?;
    let vars = Vars::gamma(2 * p.genus());
    let ab = p.ab_stacked(&marking, &vars)?;
    let det = ab.det()?;
    let poly = det
        .to_laurent()
        .ok_or_else(|| Error::Internal("det(A;B) must be a Laurent polynomial".into()))?;
    poly.canonical_form()
}

/// d^ψ(τ_{N₂}(M)) = deg^ψ det(A;B).
pub fn torsion_n2_degree(p: &AdmissiblePresentation, psi: &Cocharacter) -> Result<i64> {
    let marking = p.validate()?;
    let vars = Vars::gamma(2 * p.genus());
    let ab = p.ab_stacked(&marking, &vars)?;
    ab.det()?
        .psi_degree(psi.entries())
        .ok_or_else(|| Error::Internal("det(A;B) = 0 on validated input".into()))
}

/// A factorization-formula consistency report.
#[derive(Clone, Debug)]
pub struct FactorizationReport {
    pub lhs: DegreeValue,
    pub torsion_part: i64,
    pub magnus_part: DegreeValue,
    /// −2|ψ(λ)| for the mapping torus; 0 for the closing.
    pub extra: i64,
    pub consistent: bool,
}

impl FactorizationReport {
    fn assemble(lhs: DegreeValue, torsion_part: i64, magnus_part: DegreeValue, extra: i64) -> Self {
        let rhs = magnus_part.add_int(torsion_part + extra);
        FactorizationReport {
            lhs,
            torsion_part,
            magnus_part,
            extra,
            consistent: lhs == rhs,
        }
    }

    pub fn to_json(&self, invariant: &str, psi: &Cocharacter) -> serde_json::Value {
        serde_json::json!({
            "invariant": invariant,
            "psi": psi.entries(),
            "lhs": self.lhs.to_json(),
            "components": {
                "torsion": self.torsion_part,
                "magnus": self.magnus_part.to_json(),
                "extra": self.extra,
            },
            "consistent": self.consistent,
        })
    }
}

/// The presentation matrix J_{C_M} = (A+C; B) of the closing C_M.
pub fn closing_matrix(
    p: &AdmissiblePresentation,
    marking: &MarkingData,
    vars: &Vars,
) -> Result<FracMatrix> {
    let (a, b, c) = p.abc_matrices(marking, vars)?;
    Ok(stack_vertical(&a.add(&c), &b))
}

/// The row ξ = (1−γ̄₁,…,1−γ̄_{2g}, 1−z̄₁,…,1−z̄_l) with the z-classes taken
/// from the marking.
fn xi_row(p: &AdmissiblePresentation, marking: &MarkingData, vars: &Vars) -> FracMatrix {
    let g2 = 2 * p.genus();
    let mut entries = Vec::with_capacity(g2 + p.aux());
    for i in 0..g2 {
        let mut e = vec![0i64; vars.len()];
        e[i] = -1;
        entries.push(RatFunc::from_poly(
            LaurentPoly::one(vars).sub(&LaurentPoly::monomial(vars, e, BigInt::one())),
        ));
    }
    for j in 1..=p.aux() {
        let cls = &marking.assignment[p.z_index(j) - 1];
        let mut e: Vec<i64> = cls.iter().map(|x| -x).collect();
        e.resize(vars.len(), 0);
        entries.push(RatFunc::from_poly(
            LaurentPoly::one(vars).sub(&LaurentPoly::monomial(vars, e, BigInt::one())),
        ));
    }
    row_matrix(vars, &entries)
}

/// μ = (A;B)⁻¹ · bar(∂ζ/∂γ | 0)ᵀ; integral by the structure theorem, and
/// asserted so at runtime.
fn mu_col(
    p: &AdmissiblePresentation,
    marking: &MarkingData,
    vars: &Vars,
) -> Result<FracMatrix> {
    let g2 = 2 * p.genus();
    let l = p.aux();
    let ab = p.ab_stacked(marking, vars)?;
    let zcol = zeta_bar_col(p.genus(), vars);
    let mut rhs = FracMatrix::zero(vars, g2 + l, 1);
    for i in 0..g2 {
        *rhs.at_mut(i, 0) = zcol.at(i, 0).clone();
    }
    let mu = ab.solve_right(&rhs)?;
    for i in 0..g2 + l {
        if !mu.at(i, 0).is_zero() && mu.at(i, 0).to_laurent().is_none() {
            return Err(Error::Internal(format!(
                "mu integrality violated at row {}: {}",
                i,
                mu.at(i, 0)
            )));
        }
    }
    Ok(mu)
}

/// δ̄^ψ(C_M) with the factorization against d(τ) + d̄(I−r₂) (the closing
/// formula). Computed through disjoint code paths on the two sides.
pub fn closing_degree(p: &AdmissiblePresentation, psi: &Cocharacter) -> Result<FactorizationReport> {
    let marking = p.validate()?;
    let g2 = 2 * p.genus();
    let l = p.aux();
    let vars = Vars::gamma(g2);
    let j = closing_matrix(p, &marking, &vars)?;
    let m = g2 + l;
    let rank = j.rank();
    let lhs = if rank + 1 < m {
        DegreeValue::Infinite
    } else if rank == m {
        DegreeValue::Finite(
            j.det()?
                .psi_degree(psi.entries())
                .ok_or_else(|| Error::Internal("zero det at full rank".into()))?,
        )
    } else {
        let xi = xi_row(p, &marking, &vars);
        let mu = mu_col(p, &marking, &vars)?;
        if !xi.mul(&j).is_zero() || !j.mul(&mu).is_zero() {
            return Err(Error::NotInC2);
        }
        let delta = delta_bracket(&j, &xi, &mu)?;
        DegreeValue::Finite(
            delta
                .psi_degree(psi.entries())
                .ok_or_else(|| Error::Internal("zero Δ-bracket".into()))?,
        )
    };
    // rhs through the torsion and Magnus pipelines
    let torsion_part = torsion_n2_degree(p, psi)?;
    let r = p.magnus(&marking, &vars)?;
    let magnus_part = dbar_of_one_minus(&r, p.genus(), psi)?;
    Ok(FactorizationReport::assemble(lhs, torsion_part, magnus_part, 0))
}

/// Theorem-decomp comparison: the Alexander polynomial of the closing by
/// the minor-gcd route vs. the bar(τ·Δ(M)) product route, up to ±monomial.
#[derive(Clone, Debug)]
pub struct ClosingAlexander {
    /// gcd of the codimension-1 minors of J_{C_M} (bar-involuted,
    /// canonical); None when the gcd bounds were exceeded.
    pub gcd_route: Option<LaurentPoly>,
    pub product_route: LaurentPoly,
    pub equal_up_to_unit: bool,
}

pub fn closing_alexander(p: &AdmissiblePresentation) -> Result<ClosingAlexander> {
    let marking = p.validate()?;
    let g2 = 2 * p.genus();
    let vars = Vars::gamma(g2);
    let j = closing_matrix(p, &marking, &vars)?;
    let m = g2 + p.aux();
    // product route: bar(det(A;B)·Δ(M))
    let delta = alexander_rational(p)?;
    let tau = p.ab_stacked(&marking, &vars)?.det()?;
    let product = tau.mul(&delta).bar();
    let product_route = if product.is_zero() {
        LaurentPoly::zero(&vars)
    } else {
        product
            .to_laurent()
            .ok_or_else(|| {
                Error::Internal("bar(τ·Δ) must be a Laurent polynomial".into())
            })?
            .canonical_form()?
    };
    // gcd route over all (i,j) minors
    let mut gcd_route: Option<LaurentPoly> = Some(LaurentPoly::zero(&vars));
    'outer: for i in 0..m {
        for jj in 0..m {
            let minor = j.minor(i, jj)?;
            let poly = minor
                .to_laurent()
                .ok_or_else(|| Error::Internal("minor of polynomial matrix".into()))?;
            let acc = gcd_route.take().unwrap();
            match crate::gcd::gcd_small(&acc, &poly) {
                Ok(g) => gcd_route = Some(g),
                Err(Error::GcdOutOfRange(_)) => {
                    gcd_route = None;
                    break 'outer;
                }
                Err(e) => return Err(e),
            }
        }
    }
    let gcd_route = match gcd_route {
        Some(g) if g.is_zero() => Some(LaurentPoly::zero(&vars)),
        Some(g) => Some(g.bar().canonical_form()?),
        None => None,
    };
    let equal_up_to_unit = match &gcd_route {
        Some(g) => {
            if g.is_zero() || product_route.is_zero() {
                g.is_zero() && product_route.is_zero()
            } else {
                *g == product_route
            }
        }
        None => false,
    };
    Ok(ClosingAlexander {
        gcd_route,
        product_route,
        equal_up_to_unit,
    })
}

/// The square presentation matrix J'_{T_M} of the mapping torus, over the
/// 2g+1 variables (γ, λ):
/// [[A+λC, bar(∂ζ/∂γ)ᵀ], [B, 0], [−λ(1−γ̄)C, 0]].
pub fn torus_matrix(
    p: &AdmissiblePresentation,
    marking: &MarkingData,
    vars: &Vars,
) -> Result<FracMatrix> {
    let g2 = 2 * p.genus();
    let l = p.aux();
    let (a, b, c) = p.abc_matrices(marking, vars)?;
    let lambda = RatFunc::from_poly(LaurentPoly::var(vars, g2));
    let zcol = zeta_bar_col(p.genus(), vars);
    let top = a.add(&c.scale(&lambda));
    let bottom_row = one_minus_gamma_bar(vars, g2)
        .mul(&c)
        .scale(&lambda)
        .neg();
    let m = g2 + l + 1;
    let mut out = FracMatrix::zero(vars, m, m);
    for i in 0..g2 {
        for jj in 0..g2 + l {
            *out.at_mut(i, jj) = top.at(i, jj).clone();
        }
        *out.at_mut(i, g2 + l) = zcol.at(i, 0).clone();
    }
    for i in 0..l {
        for jj in 0..g2 + l {
            *out.at_mut(g2 + i, jj) = b.at(i, jj).clone();
        }
    }
    for jj in 0..g2 + l {
        *out.at_mut(g2 + l, jj) = bottom_row.at(0, jj).clone();
    }
    Ok(out)
}

/// The mapping-torus degree δ^{ψ⁺}(T_M) with its factorization
/// d(τ) + d(det(I−λr₂)) − 2|ψ(λ)|; the left side via Smith normal form
/// over K_{ψ⁺}[t±], the right side from determinants.
pub fn mapping_torus(
    p: &AdmissiblePresentation,
    psi_plus: &Cocharacter,
) -> Result<FactorizationReport> {
    let marking = p.validate()?;
    let g2 = 2 * p.genus();
    if psi_plus.len() != g2 + 1 {
        return Err(Error::ImprimitivePsi);
    }
    let vars = Vars::gamma_lambda(g2);
    let psi_lambda = psi_plus.entries()[g2];
    let j = torus_matrix(p, &marking, &vars)?;
    let report = degree_report(&j, psi_plus)?;
    let lhs = if report.free_corank <= 1 {
        DegreeValue::Finite(report.torsion_degree_sum)
    } else {
        DegreeValue::Infinite
    };
    // rhs components
    let ab = p.ab_stacked(&marking, &vars)?;
    let torsion_part = ab
        .det()?
        .psi_degree(psi_plus.entries())
        .ok_or_else(|| Error::Internal("det(A;B) = 0".into()))?;
    let r = p.magnus(&marking, &vars)?;
    let lambda = RatFunc::from_poly(LaurentPoly::var(&vars, g2));
    let one_minus_lambda_r = FracMatrix::identity(&vars, g2).sub(&r.scale(&lambda));
    let magnus_part = DegreeValue::from_option(
        one_minus_lambda_r.det()?.psi_degree(psi_plus.entries()),
    );
    let extra = -2 * psi_lambda.abs();
    Ok(FactorizationReport::assemble(lhs, torsion_part, magnus_part, extra))
}

/// Dual route for the mapping-torus left side: deg^ψ Δ(J'; ξ̃, μ̃) with the
/// canonical pair ξ̃ = (1−γ̄, 1−z̄, 1−λ⁻¹), μ̃ = ((A;B)⁻¹bar(ζγ|0)ᵀ; λ−1).
/// Defined on C[2]; used as a cross-check against the Smith route.
pub fn mapping_torus_delta_route(
    p: &AdmissiblePresentation,
    psi_plus: &Cocharacter,
) -> Result<DegreeValue> {
    let marking = p.validate()?;
    let g2 = 2 * p.genus();
    let l = p.aux();
    let vars = Vars::gamma_lambda(g2);
    let j = torus_matrix(p, &marking, &vars)?;
    let m = g2 + l + 1;
    let rank = j.rank();
    if rank + 1 < m {
        return Ok(DegreeValue::Infinite);
    }
    if rank == m {
        return Ok(DegreeValue::Finite(
            j.det()?
                .psi_degree(psi_plus.entries())
                .ok_or_else(|| Error::Internal("zero det".into()))?,
        ));
    }
    // ξ̃ row
    let base = xi_row(p, &marking, &vars);
    let mut entries = base.row(0);
    let mut e = vec![0i64; vars.len()];
    e[g2] = -1;
    entries.push(RatFunc::from_poly(
        LaurentPoly::one(&vars).sub(&LaurentPoly::monomial(&vars, e, BigInt::one())),
    ));
    let xi = row_matrix(&vars, &entries);
    // μ̃ column
    let mu = mu_col(p, &marking, &vars)?;
    let mut entries = mu.col(0);
    let mut e = vec![0i64; vars.len()];
    e[g2] = 1;
    entries.push(RatFunc::from_poly(
        LaurentPoly::monomial(&vars, e, BigInt::one()).sub(&LaurentPoly::one(&vars)),
    ));
    let mu_t = col_matrix(&vars, &entries);
    if !xi.mul(&j).is_zero() || !j.mul(&mu_t).is_zero() {
        return Err(Error::NotInC2);
    }
    let delta = delta_bracket(&j, &xi, &mu_t)?;
    Ok(DegreeValue::Finite(
        delta
            .psi_degree(psi_plus.entries())
            .ok_or_else(|| Error::Internal("zero Δ-bracket".into()))?,
    ))
}

/// A finite group presentation ⟨x₁..x_rank | relators⟩ for the presented-
/// group degree functions.
#[derive(Clone, Debug)]
pub struct GroupPresentation {
    pub rank: usize,
    pub relators: Vec<Word>,
}

/// Harvey-type degrees (δ, δ̄) of a finitely presented group with free
/// abelianization: Fox Jacobian, bar-involuted and abelianized, Smith-
/// diagonalized over K_ψ[t±]. δ̄ = δ exactly when the cokernel's free
/// corank is 1 (the basepoint summand), and ∞ otherwise.
pub fn harvey_degree(
    g: &GroupPresentation,
    psi: &Cocharacter,
) -> Result<(i64, DegreeValue)> {
    let n = g.rank;
    // abelianization: E (n × m) exponent matrix; H₁ = ℤⁿ / col-span
    let m = g.relators.len();
    let e: intmat::IMat = (0..n)
        .map(|i| {
            (0..m)
                .map(|j| BigInt::from(g.relators[j].exponent_sums(n)[i]))
                .collect()
        })
        .collect();
    let (u, d, _v, rank) = intmat::smith(&e);
    for i in 0..rank {
        if !d[i][i].abs().is_one() {
            return Err(Error::NonFreeAbelianization);
        }
    }
    let free_rank = n - rank;
    if psi.len() != free_rank {
        return Err(Error::ImprimitivePsi);
    }
    let vars = Vars::t(free_rank);
    // class of generator i: rows rank..n of U·e_i
    let class: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (rank..n)
                .map(|r| i64::try_from(&u[r][i]).expect("class overflow"))
                .collect()
        })
        .collect();
    let abelianize = |x: &GroupRingElt| -> LaurentPoly {
        let mut out = LaurentPoly::zero(&vars);
        for (w, c) in x.terms() {
            let mut exp = vec![0i64; free_rank];
            for &letter in w.letters() {
                let idx = letter.unsigned_abs() as usize - 1;
                let s = letter.signum() as i64;
                for (k, v) in class[idx].iter().enumerate() {
                    exp[k] += s * v;
                }
            }
            out.add_term(exp, c.clone());
        }
        out
    };
    let mut data = Vec::with_capacity(n * m);
    for i in 1..=n {
        for r in &g.relators {
            data.push(RatFunc::from_poly(abelianize(&fox_derivative(r, i)).bar()));
        }
    }
    let jac = FracMatrix::new(&vars, n, m, data);
    let report = degree_report(&jac, psi)?;
    if report.free_corank == 0 {
        return Err(Error::Internal(
            "presented-group module lost its free summand".into(),
        ));
    }
    let delta = report.torsion_degree_sum;
    let delta_bar = if report.free_corank == 1 {
        DegreeValue::Finite(delta)
    } else {
        DegreeValue::Infinite
    };
    Ok((delta, delta_bar))
}

/// Degree of the surgery-word derivative: builds α[X_{n−1}, A_{k+1}] over
/// the free group ⟨α, x, γ⟩, Fox-differentiates by α, kills α, and takes
/// the ψ-span of the result collected modulo Γ^n (ψ(x) = p, ψ(γ) = 0).
/// Closed form: (k+1)|p| for n = 2 and k|p| for n ≥ 3 — computed, not
/// hard-coded.
pub fn realization_degree(n: usize, k: usize, p: i64) -> Result<i64> {
    if n < 2 || k < 1 {
        return Err(Error::Internal("need n ≥ 2, k ≥ 1".into()));
    }
    if p == 0 {
        return Err(Error::ImprimitivePsi);
    }
    let alpha = Word::gen(1);
    let x = Word::gen(2);
    let gamma = Word::gen(3);
    let mut big_x = x.clone(); // X_1 = x
    for _ in 2..n {
        big_x = Word::commutator(&gamma, &big_x);
    }
    let mut big_a = alpha.clone(); // A_1 = α
    for _ in 2..=(k + 1) {
        big_a = Word::commutator(&x, &big_a);
    }
    let w = alpha.mul(&Word::commutator(&big_x, &big_a));
    let d = fox_derivative(&w, 1);
    // α ↦ 1
    let kill_alpha = Endomorphism::new(3, vec![Word::identity(), x, gamma])?;
    let d = kill_alpha.apply_ring(&d);
    psi_span_mod_gamma(&d, &[0, p, 0], n)
        .ok_or_else(|| Error::Internal("derivative collapsed to zero".into()))
}

/// d^ψ(r₂(f)) for a 2-connected endomorphism: the ψ-degree of the
/// determinant of the bar-involuted abelianized Fox Jacobian.
pub fn endo_degree(f: &Endomorphism, psi: &Cocharacter) -> Result<i64> {
    let vars = Vars::t(f.rank());
    let r = crate::presentation::direct_magnus(f, &vars)?;
    r.det()?
        .psi_degree(psi.entries())
        .ok_or_else(|| Error::Internal("singular Jacobian for 2-connected map".into()))
}

/// The f_k family: f_k(x₁) = x₁[Y_{k−1}, Y_k] with Y₁ = x₁,
/// Y_l = [x₂, Y_{l−1}]; all other generators fixed.
pub fn f_k_endomorphism(rank: usize, k: usize) -> Result<Endomorphism> {
    if rank < 2 || k < 2 {
        return Err(Error::Internal("f_k needs rank ≥ 2, k ≥ 2".into()));
    }
    let x1 = Word::gen(1);
    let x2 = Word::gen(2);
    let mut y_prev = x1.clone(); // Y_1
    let mut y_cur = Word::commutator(&x2, &y_prev); // Y_2
    for _ in 3..=k {
        let next = Word::commutator(&x2, &y_cur);
        y_prev = y_cur;
        y_cur = next;
    }
    let (y_km1, y_k) = if k == 2 {
        (y_prev, y_cur)
    } else {
        (y_prev, y_cur)
    };
    let mut images = vec![x1.mul(&Word::commutator(&y_km1, &y_k))];
    for i in 2..=rank {
        images.push(Word::gen(i as i32));
    }
    Endomorphism::new(rank, images)
}
