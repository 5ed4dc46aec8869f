//! Free-group words, the integral group ring, and the Fox free differential
//! calculus.
//!
//! A [`Word`] is a freely reduced word over generators indexed `1..=n`;
//! letters are stored as signed indices (`-i` is the inverse of generator
//! `i`). Reduction happens eagerly in every constructor, so all downstream
//! code may assume reduced input.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A freely reduced word in a free group. The empty word is the identity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    letters: Vec<i32>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    /// Builds a word from signed generator indices, reducing as it goes.
    pub fn from_letters<I: IntoIterator<Item = i32>>(letters: I) -> Self {
        let mut out: Vec<i32> = Vec::new();
        for l in letters {
            assert!(l != 0, "letter index must be nonzero");
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    /// Single generator `i` (1-based), or its inverse for negative `i`.
    pub fn gen(i: i32) -> Self {
        assert!(i != 0);
        Word { letters: vec![i] }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index appearing in the word (0 for the identity).
    pub fn max_gen(&self) -> usize {
        self.letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0)
    }

    pub fn mul(&self, other: &Word) -> Word {
        Word::from_letters(self.letters.iter().chain(other.letters.iter()).copied())
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n >= 0 { self.clone() } else { self.inverse() };
        let mut out = Word::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `[a,b] = a b a⁻¹ b⁻¹`, freely reduced.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.mul(b).mul(&a.inverse()).mul(&b.inverse())
    }

    /// Exponent-sum vector over generators `1..=n`.
    pub fn exponent_sums(&self, n: usize) -> Vec<i64> {
        let mut e = vec![0i64; n];
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            assert!(i <= n, "letter {} out of rank {}", i, n);
            e[i - 1] += l.signum() as i64;
        }
        e
    }

    /// Substitutes `images[i-1]` for generator `i` and reduces.
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut letters = Vec::new();
        for &l in &self.letters {
            let img = &images[(l.unsigned_abs() as usize) - 1];
            if l > 0 {
                letters.extend_from_slice(img.letters());
            } else {
                letters.extend(img.letters.iter().rev().map(|x| -x));
            }
        }
        Word::from_letters(letters)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&l| {
                if l > 0 {
                    format!("x{}", l)
                } else {
                    format!("x{}^-1", -l)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// The boundary word ζ = ∏_{i=1}^g [γ_i, γ_{g+i}] of a genus-g surface.
pub fn boundary_word(g: usize) -> Word {
    let mut z = Word::identity();
    for i in 1..=g {
        z = z.mul(&Word::commutator(&Word::gen(i as i32), &Word::gen((g + i) as i32)));
    }
    z
}

/// An element of the integral group ring of a free group: a finite formal
/// integer combination of reduced words. No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GroupRingElt {
    terms: BTreeMap<Word, BigInt>,
}

impl GroupRingElt {
    pub fn zero() -> Self {
        GroupRingElt::default()
    }

    pub fn one() -> Self {
        GroupRingElt::from_word(Word::identity())
    }

    pub fn from_word(w: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, BigInt::one());
        GroupRingElt { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, BigInt)>>(it: I) -> Self {
        let mut out = GroupRingElt::zero();
        for (w, c) in it {
            out.add_term(w, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, w: Word, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        GroupRingElt {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = GroupRingElt::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.mul(w2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return GroupRingElt::zero();
        }
        GroupRingElt {
            terms: self.terms.iter().map(|(w, k)| (w.clone(), k * c)).collect(),
        }
    }

    /// Left-multiplies every word by `w`.
    pub fn word_mul_left(&self, w: &Word) -> Self {
        GroupRingElt {
            terms: self.terms.iter().map(|(u, c)| (w.mul(u), c.clone())).collect(),
        }
    }

    /// Applies a word-level map to every term (a ring map when `f` is a
    /// group homomorphism).
    pub fn map_words(&self, f: impl Fn(&Word) -> Word) -> Self {
        GroupRingElt::from_terms(self.terms.iter().map(|(w, c)| (f(w), c.clone())))
    }
}

impl fmt::Debug for GroupRingElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("{}·({})", c, w)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The Fox free derivative ∂w/∂x_i ∈ ℤF, computed iteratively left to right
/// with an accumulating prefix word.
///
/// Characterized by ∂x_j/∂x_i = δ_ij, ∂x_i⁻¹/∂x_i = −x_i⁻¹ and the product
/// rule ∂(uv) = ∂u + u·∂v.
pub fn fox_derivative(w: &Word, i: usize) -> GroupRingElt {
    let mut out = GroupRingElt::zero();
    let mut prefix: Vec<i32> = Vec::new();
    for &l in w.letters() {
        if l.unsigned_abs() as usize == i {
            if l > 0 {
                out.add_term(Word::from_letters(prefix.iter().copied()), BigInt::one());
            } else {
                let mut p = prefix.clone();
                p.push(l);
                out.add_term(Word::from_letters(p), -BigInt::one());
            }
        }
        prefix.push(l);
    }
    out
}

/// An endomorphism of the free group of the given rank, stored by its
/// generator images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endomorphism {
    rank: usize,
    images: Vec<Word>,
}

impl Endomorphism {
    pub fn new(rank: usize, images: Vec<Word>) -> Result<Self> {
        if images.len() != rank {
            return Err(Error::Internal(format!(
                "endomorphism rank {} with {} images",
                rank,
                images.len()
            )));
        }
        for w in &images {
            if w.max_gen() > rank {
                return Err(Error::Internal(format!(
                    "image {} uses generator beyond rank {}",
                    w, rank
                )));
            }
        }
        Ok(Endomorphism { rank, images })
    }

    pub fn identity(rank: usize) -> Self {
        Endomorphism {
            rank,
            images: (1..=rank).map(|i| Word::gen(i as i32)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn apply(&self, w: &Word) -> Word {
        w.substitute(&self.images)
    }

    pub fn apply_ring(&self, x: &GroupRingElt) -> GroupRingElt {
        x.map_words(|w| self.apply(w))
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Endomorphism) -> Endomorphism {
        assert_eq!(self.rank, other.rank);
        Endomorphism {
            rank: self.rank,
            images: other.images.iter().map(|w| self.apply(w)).collect(),
        }
    }

    /// Abelianization matrix: column j = exponent sums of the image of x_j.
    pub fn abelianized(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut m = vec![vec![0i64; n]; n];
        for (j, w) in self.images.iter().enumerate() {
            let e = w.exponent_sums(n);
            for i in 0..n {
                m[i][j] = e[i];
            }
        }
        m
    }

    /// Fox Jacobian: entry (i,j) = ∂(image of x_j)/∂x_i.
    pub fn fox_jacobian(&self) -> Vec<Vec<GroupRingElt>> {
        let n = self.rank;
        let mut m = vec![vec![GroupRingElt::zero(); n]; n];
        for j in 0..n {
            for (i, row) in m.iter_mut().enumerate() {
                row[j] = fox_derivative(&self.images[j], i + 1);
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(ls: &[i32]) -> Word {
        Word::from_letters(ls.iter().copied())
    }

    #[test]
    fn mul_cancels_inverses() {
        assert_eq!(Word::gen(1).mul(&Word::gen(-1)), Word::identity());
        assert_eq!(w(&[1, 2]).mul(&w(&[-2, 3])), w(&[1, 3]));
        assert_eq!(Word::identity().mul(&w(&[1, 2])), w(&[1, 2]));
    }

    #[test]
    fn reduction_is_idempotent() {
        let a = w(&[1, 2, -2, 3, -3, -1, 1]);
        assert_eq!(a, w(&[1]));
        assert_eq!(Word::from_letters(a.letters().iter().copied()), a);
    }

    #[test]
    fn commutator_examples() {
        assert_eq!(Word::commutator(&Word::gen(1), &Word::gen(1)), Word::identity());
        assert_eq!(Word::commutator(&Word::gen(1), &Word::gen(2)), w(&[1, 2, -1, -2]));
        assert_eq!(boundary_word(1), w(&[1, 2, -1, -2]));
    }

    #[test]
    fn fox_basic_rules() {
        // ∂(x1 x2)/∂x1 = 1
        assert_eq!(fox_derivative(&w(&[1, 2]), 1), GroupRingElt::one());
        // ∂(x1⁻¹)/∂x1 = −x1⁻¹
        let d = fox_derivative(&w(&[-1]), 1);
        let mut expect = GroupRingElt::zero();
        expect.add_term(w(&[-1]), -BigInt::one());
        assert_eq!(d, expect);
        // ∂(x2)/∂x1 = 0
        assert!(fox_derivative(&w(&[2]), 1).is_zero());
    }

    #[test]
    fn fox_commutator_derived() {
        // ∂([γ1,γ2])/∂γ1 expanded by hand via the two base rules:
        // [γ1,γ2] = γ1 γ2 γ1⁻¹ γ2⁻¹ gives 1 − γ1γ2γ1⁻¹.
        let d = fox_derivative(&Word::commutator(&Word::gen(1), &Word::gen(2)), 1);
        let mut expect = GroupRingElt::one();
        expect.add_term(w(&[1, 2, -1]), -BigInt::one());
        assert_eq!(d, expect);
    }

    #[test]
    fn derivation_property_random() {
        // ∂(uv) = ∂u + u·∂v for a few fixed products.
        let samples = [
            (w(&[1, 2, -1]), w(&[1, -2, 2, 3])),
            (w(&[-3, -3, 1]), w(&[3, 3])),
            (w(&[2]), w(&[-2])),
        ];
        for (u, v) in samples {
            for i in 1..=3 {
                let lhs = fox_derivative(&u.mul(&v), i);
                let rhs = fox_derivative(&u, i).add(&fox_derivative(&v, i).word_mul_left(&u));
                assert_eq!(lhs, rhs, "u={} v={} i={}", u, v, i);
            }
        }
    }

    #[test]
    fn fundamental_formula_small() {
        // Σ_i (∂w/∂x_i)(x_i − 1) = w − 1
        let word = w(&[1, -2, 3, 3, -1]);
        let mut lhs = GroupRingElt::zero();
        for i in 1..=3 {
            let xi = GroupRingElt::from_word(Word::gen(i as i32));
            lhs = lhs.add(&fox_derivative(&word, i).mul(&xi.sub(&GroupRingElt::one())));
        }
        let rhs = GroupRingElt::from_word(word).sub(&GroupRingElt::one());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn apply_endo_examples() {
        let id = Endomorphism::identity(2);
        assert_eq!(id.apply(&w(&[1, 2])), w(&[1, 2]));
        let f = Endomorphism::new(2, vec![w(&[1, 2]), w(&[2])]).unwrap();
        assert_eq!(f.apply(&w(&[1, -2])), w(&[1]));
    }

    #[test]
    fn jacobian_permutation() {
        let f = Endomorphism::new(2, vec![w(&[2]), w(&[1])]).unwrap();
        let j = f.fox_jacobian();
        assert!(j[0][0].is_zero());
        assert_eq!(j[1][0], GroupRingElt::one());
        assert_eq!(j[0][1], GroupRingElt::one());
        assert!(j[1][1].is_zero());
    }

    #[test]
    fn identity_jacobian() {
        let id = Endomorphism::identity(3);
        let j = id.fox_jacobian();
        for (i, row) in j.iter().enumerate() {
            for (k, e) in row.iter().enumerate() {
                if i == k {
                    assert_eq!(*e, GroupRingElt::one());
                } else {
                    assert!(e.is_zero());
                }
            }
        }
    }
}
