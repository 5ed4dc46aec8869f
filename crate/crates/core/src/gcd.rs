//! Bounded-scale multivariate gcd over the rationals, by recursive
//! content/primitive-part reduction to univariate gcds (primitive PRS).
//!
//! Intended for ≤ 4 variables and small total degree; inputs beyond the
//! bounds produce an explicit error rather than a wrong answer.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Vars};

const MAX_VARS: usize = 4;
const MAX_SPAN: i64 = 24;

/// Dense-keyed recursive polynomial: exponents are all ≥ 0 here (Laurent
/// content is stripped before entry).
type Poly = BTreeMap<Vec<i64>, BigInt>;

fn degree_in(p: &Poly, v: usize) -> i64 {
    p.keys().map(|e| e[v]).max().unwrap_or(-1)
}

fn add_term(p: &mut Poly, e: Vec<i64>, c: BigInt) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match p.entry(e) {
        Entry::Vacant(x) => {
            x.insert(c);
        }
        Entry::Occupied(mut x) => {
            *x.get_mut() += c;
            if x.get().is_zero() {
                x.remove();
            }
        }
    }
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (e1, c1) in a {
        for (e2, c2) in b {
            add_term(
                &mut out,
                e1.iter().zip(e2).map(|(x, y)| x + y).collect(),
                c1 * c2,
            );
        }
    }
    out
}

fn sub(a: &Poly, b: &Poly) -> Poly {
    let mut out = a.clone();
    for (e, c) in b {
        add_term(&mut out, e.clone(), -c);
    }
    out
}

/// Coefficient of x_v^k, as a polynomial with the v-exponent zeroed.
fn coeff_of(p: &Poly, v: usize, k: i64) -> Poly {
    let mut out = Poly::new();
    for (e, c) in p {
        if e[v] == k {
            let mut e2 = e.clone();
            e2[v] = 0;
            add_term(&mut out, e2, c.clone());
        }
    }
    out
}

fn shift_var(p: &Poly, v: usize, k: i64) -> Poly {
    p.iter()
        .map(|(e, c)| {
            let mut e2 = e.clone();
            e2[v] += k;
            (e2, c.clone())
        })
        .collect()
}

fn int_content(p: &Poly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p.values() {
        g = g.gcd(c);
    }
    g
}

/// gcd of all x_v-coefficients (the content w.r.t. x_v), recursing on the
/// remaining variables.
fn content_wrt(p: &Poly, v: usize, active: &[usize]) -> Poly {
    let mut g = Poly::new();
    let d = degree_in(p, v);
    for k in 0..=d {
        let c = coeff_of(p, v, k);
        if !c.is_empty() {
            g = gcd_rec(&g, &c, active);
        }
    }
    g
}

fn exact_div(p: &Poly, d: &Poly) -> Poly {
    // leading-term cancellation in lex order; inputs are exact multiples
    let mut rem = p.clone();
    let mut q = Poly::new();
    let (de, dc) = d.iter().next_back().expect("division by zero");
    while let Some((re, rc)) = rem.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
        let qe: Vec<i64> = re.iter().zip(de).map(|(a, b)| a - b).collect();
        assert!(qe.iter().all(|&x| x >= 0), "non-exact polynomial division");
        let (qc, r) = rc.div_rem(dc);
        assert!(r.is_zero(), "non-exact polynomial division");
        let mono: Poly = [(qe, qc)].into_iter().collect();
        rem = sub(&rem, &mul(&mono, d));
        for (e, c) in mono {
            add_term(&mut q, e, c);
        }
    }
    q
}

/// Euclidean-style gcd via primitive pseudo-remainder sequences in the last
/// active variable.
fn gcd_rec(a: &Poly, b: &Poly, active: &[usize]) -> Poly {
    if a.is_empty() {
        return b.clone();
    }
    if b.is_empty() {
        return a.clone();
    }
    if active.is_empty() {
        return [(a.keys().next().unwrap().clone(), int_content(a).gcd(&int_content(b)))]
            .into_iter()
            .collect::<Poly>()
        ;
    }
    let v = *active.last().unwrap();
    let rest = &active[..active.len() - 1];

    let ca = content_wrt(a, v, rest);
    let cb = content_wrt(b, v, rest);
    let cg = gcd_rec(&ca, &cb, rest);
    let pa = exact_div(a, &ca);
    let pb = exact_div(b, &cb);

    // primitive PRS in x_v
    let (mut f, mut g) = if degree_in(&pa, v) >= degree_in(&pb, v) {
        (pa, pb)
    } else {
        (pb, pa)
    };
    loop {
        if g.is_empty() {
            break;
        }
        let df = degree_in(&f, v);
        let dg = degree_in(&g, v);
        if df < dg {
            std::mem::swap(&mut f, &mut g);
            continue;
        }
        // pseudo-remainder of f by g in x_v: repeatedly cancel the leading
        // x_v-coefficient, scaling by lc(g) as needed
        let lcg = coeff_of(&g, v, dg);
        let mut r = f.clone();
        while !r.is_empty() && degree_in(&r, v) >= dg {
            let dr = degree_in(&r, v);
            let lcr = coeff_of(&r, v, dr);
            let t1 = mul(&r, &lcg);
            let t2 = shift_var(&mul(&g, &lcr), v, dr - dg);
            r = sub(&t1, &t2);
        }
        // make remainder primitive in x_v
        if !r.is_empty() {
            let cr = content_wrt(&r, v, rest);
            r = exact_div(&r, &cr);
        }
        f = g;
        g = r;
    }
    // reattach content
    let cf = content_wrt(&f, v, rest);
    let prim = exact_div(&f, &cf);
    mul(&cg, &prim)
}

fn to_poly(p: &LaurentPoly) -> (Poly, Vec<i64>) {
    let shift = p.min_exponents().unwrap_or_default();
    let mut out = Poly::new();
    for (e, c) in p.shift(&shift).terms() {
        out.insert(e.clone(), c.clone());
    }
    (out, shift)
}

fn from_poly(vars: &Vars, p: &Poly) -> LaurentPoly {
    LaurentPoly::from_terms(vars, p.iter().map(|(e, c)| (e.clone(), c.clone())))
}

/// Best-effort gcd for internal fraction reduction: `None` when the inputs
/// exceed the given bounds instead of an error. Same algorithm as
/// [`gcd_small`].
pub(crate) fn try_gcd(p: &LaurentPoly, q: &LaurentPoly, max_span: i64) -> Option<LaurentPoly> {
    if p.is_zero() || q.is_zero() {
        return None;
    }
    let nv = p.nvars();
    if nv > MAX_VARS {
        return None;
    }
    for x in [p, q] {
        for v in 0..nv {
            let mut psi = vec![0i64; nv];
            psi[v] = 1;
            if x.psi_degree(&psi).unwrap_or(0) > max_span {
                return None;
            }
        }
    }
    let (pp, _) = to_poly(p);
    let (qq, _) = to_poly(q);
    let active: Vec<usize> = (0..nv).collect();
    let g = gcd_rec(&pp, &qq, &active);
    from_poly(p.vars(), &g).canonical_form().ok()
}

/// gcd in the Laurent ring, correct up to ±monomial, returned in canonical
/// form. Bounded contract: ≤ 4 variables and ψ-span ≤ 24 in every variable.
pub fn gcd_small(p: &LaurentPoly, q: &LaurentPoly) -> Result<LaurentPoly> {
    if p.is_zero() && q.is_zero() {
        return Ok(LaurentPoly::zero(p.vars()));
    }
    if p.is_zero() {
        return q.canonical_form();
    }
    if q.is_zero() {
        return p.canonical_form();
    }
    let nv = p.nvars();
    if nv > MAX_VARS {
        return Err(Error::GcdOutOfRange(format!("{} variables (max {})", nv, MAX_VARS)));
    }
    for x in [p, q] {
        for v in 0..nv {
            let mut psi = vec![0i64; nv];
            psi[v] = 1;
            if x.psi_degree(&psi).unwrap_or(0) > MAX_SPAN {
                return Err(Error::GcdOutOfRange(format!(
                    "degree span exceeds {} in variable {}",
                    MAX_SPAN, v
                )));
            }
        }
    }
    let (pp, _) = to_poly(p);
    let (qq, _) = to_poly(q);
    let active: Vec<usize> = (0..nv).collect();
    let g = gcd_rec(&pp, &qq, &active);
    from_poly(p.vars(), &g).canonical_form()
}
