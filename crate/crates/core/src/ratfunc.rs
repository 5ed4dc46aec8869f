//! The fraction field K_{N₂} of the Laurent ring.
//!
//! Fractions are NOT kept in lowest terms; equality is defined by
//! cross-multiplication. A common monomial factor and the integer content
//! gcd are stripped on construction to keep exponent and coefficient sizes
//! bounded during elimination.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Vars};

#[derive(Clone)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    /// `num/den`; panics on a zero denominator (library-internal
    /// constructions only divide by provably nonzero values).
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc {
                num,
                den: LaurentPoly::one(den.vars()),
            };
        }
        // strip the common monomial factor
        let mn = num.min_exponents().unwrap();
        let md = den.min_exponents().unwrap();
        let common: Vec<i64> = mn.iter().zip(&md).map(|(a, b)| *a.min(b)).collect();
        let mut num = num.shift(&common);
        let mut den = den.shift(&common);
        // strip the common integer content
        let g = num.int_content().gcd(&den.int_content());
        if !g.is_one() {
            num = num.div_int(&g);
            den = den.div_int(&g);
        }
        // deterministic sign: lexicographically smallest denominator term
        // has positive coefficient
        if den.terms().next().unwrap().1.is_negative() {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { num, den }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let one = LaurentPoly::one(p.vars());
        RatFunc::new(p, one)
    }

    pub fn zero(vars: &Vars) -> Self {
        RatFunc::from_poly(LaurentPoly::zero(vars))
    }

    pub fn one(vars: &Vars) -> Self {
        RatFunc::from_poly(LaurentPoly::one(vars))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn vars(&self) -> &Vars {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the denominator is a unit of ℤN₂ (±monomial), i.e. the
    /// value visibly lies in the Laurent ring.
    pub fn is_laurent(&self) -> bool {
        self.den.is_unit_monomial()
    }

    /// The value as a Laurent polynomial, dividing exactly if possible.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        self.num.exact_div(&self.den)
    }

    pub fn add(&self, other: &Self) -> Self {
        RatFunc::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::Singular);
        }
        Ok(RatFunc::new(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Singular);
        }
        Ok(RatFunc::new(self.den.clone(), self.num.clone()))
    }

    pub fn bar(&self) -> Self {
        RatFunc::new(self.num.bar(), self.den.bar())
    }

    /// deg^ψ extended to fractions: deg(num) − deg(den); `None` is ∞ (the
    /// zero function). Representative-independent.
    pub fn psi_degree(&self, psi: &[i64]) -> Option<i64> {
        let n = self.num.psi_degree(psi)?;
        let d = self.den.psi_degree(psi).expect("nonzero denominator");
        Some(n - d)
    }

    pub fn change_vars(&self, t: &[Vec<i64>], target: &Vars) -> Result<Self> {
        Ok(RatFunc::new(
            self.num.change_vars(t, target)?,
            self.den.change_vars(t, target)?,
        ))
    }

    /// Best-effort cancellation of a common polynomial factor (keeps
    /// elimination intermediates bounded). A no-op when the denominator is
    /// already a unit or the gcd bounds are exceeded.
    pub fn reduced(&self) -> Self {
        if self.is_zero() || self.den.is_unit_monomial() {
            return self.clone();
        }
        match crate::gcd::try_gcd(&self.num, &self.den, 40) {
            Some(g) if g.num_terms() > 1 => {
                match (self.num.exact_div(&g), self.den.exact_div(&g)) {
                    (Some(n), Some(d)) => RatFunc::new(n, d),
                    _ => self.clone(),
                }
            }
            _ => self.clone(),
        }
    }

    /// Canonical class representative up to ±monomial: when one part
    /// divides the other exactly the fraction is reduced first, then both
    /// parts are put in canonical form (sign normalized positive).
    pub fn canonical_class(&self) -> Result<(LaurentPoly, LaurentPoly)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let one = LaurentPoly::one(self.vars());
        if let Some(q) = self.num.exact_div(&self.den) {
            return Ok((q.canonical_form()?, one));
        }
        if let Some(q) = self.den.exact_div(&self.num) {
            return Ok((one, q.canonical_form()?));
        }
        Ok((self.num.canonical_form()?, self.den.canonical_form()?))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({"num": self.num.to_json(), "den": self.den.to_json()})
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        // a/b = c/d  ⇔  a·d = c·b
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for RatFunc {}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
