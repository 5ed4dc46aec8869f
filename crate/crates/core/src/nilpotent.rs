//! Truncated Magnus expansions: deciding equality of free-group elements
//! modulo the lower central series term Γ^n, and ψ-degree spans of
//! group-ring elements collected at that level.
//!
//! The free-group Magnus embedding sends x_i ↦ 1 + X_i into integer power
//! series in noncommuting variables; its truncation below degree n has
//! kernel exactly Γ^n, so truncated expansions are complete invariants of
//! N_n-classes.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::word::{GroupRingElt, Word};

/// A truncated series: monomials are words in letter indices (length < n),
/// with integer coefficients.
type Series = BTreeMap<Vec<u32>, BigInt>;

fn series_one() -> Series {
    let mut s = Series::new();
    s.insert(vec![], BigInt::one());
    s
}

fn series_mul(a: &Series, b: &Series, maxlen: usize) -> Series {
    let mut out = Series::new();
    for (m1, c1) in a {
        for (m2, c2) in b {
            if m1.len() + m2.len() >= maxlen + 1 {
                continue;
            }
            let mut m = m1.clone();
            m.extend_from_slice(m2);
            let e = out.entry(m).or_insert_with(BigInt::zero);
            *e += c1 * c2;
            if e.is_zero() {
                // dropped lazily below
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Expansion of a single letter x^±1 truncated below degree n:
/// x ↦ 1 + X; x⁻¹ ↦ 1 − X + X² − …
fn letter_series(letter: i32, trunc: usize) -> Series {
    let idx = letter.unsigned_abs();
    let mut s = series_one();
    if letter > 0 {
        s.insert(vec![idx], BigInt::one());
    } else {
        let mut sign = -BigInt::one();
        let mut mono = vec![];
        for _ in 0..trunc {
            mono.push(idx);
            if mono.len() > trunc {
                break;
            }
            s.insert(mono.clone(), sign.clone());
            sign = -sign;
        }
    }
    s
}

/// Magnus expansion of a word, truncated to monomials of length ≤ trunc.
fn word_series(w: &Word, trunc: usize) -> Series {
    let mut s = series_one();
    for &l in w.letters() {
        s = series_mul(&s, &letter_series(l, trunc), trunc);
    }
    s
}

/// True when u ≡ v modulo Γ^n (n ≥ 2).
pub fn equal_mod_gamma(u: &Word, v: &Word, n: usize) -> bool {
    assert!(n >= 2);
    word_series(u, n - 1) == word_series(v, n - 1)
}

/// ψ-degree span of a free-group-ring element after collecting terms
/// modulo Γ^n: words are keyed by their truncated expansion (a complete
/// N_n-invariant), coefficients summed, zero classes dropped, and the span
/// max−min of ψ-values taken over the surviving classes. ψ is given on the
/// letters (ψ of a word is its exponent-sum pairing, constant on
/// N_n-classes). Returns None for the element that collects to zero.
pub fn psi_span_mod_gamma(x: &GroupRingElt, psi: &[i64], n: usize) -> Option<i64> {
    assert!(n >= 2);
    let mut classes: BTreeMap<Vec<(Vec<u32>, BigInt)>, (BigInt, i64)> = BTreeMap::new();
    for (w, c) in x.terms() {
        let key: Vec<(Vec<u32>, BigInt)> = word_series(w, n - 1).into_iter().collect();
        let psival: i64 = w
            .exponent_sums(psi.len())
            .iter()
            .zip(psi)
            .map(|(a, b)| a * b)
            .sum();
        let entry = classes.entry(key).or_insert((BigInt::zero(), psival));
        debug_assert_eq!(entry.1, psival, "psi must be constant on N_n classes");
        entry.0 += c;
    }
    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    let mut any = false;
    for (coeff, v) in classes.values() {
        if coeff.is_zero() {
            continue;
        }
        any = true;
        lo = lo.min(*v);
        hi = hi.max(*v);
    }
    if any {
        Some(hi - lo)
    } else {
        None
    }
}
