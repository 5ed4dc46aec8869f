//! Pure string links from Wirtinger data, the induced homology cylinders,
//! and the independent Gassner matrix.
//!
//! Input: per-strand arc sequences (bottom to top) and one Wirtinger
//! relator per crossing. Blackboard framing: the longitude of a strand is
//! the product of over-arc^(−sign) along its undercrossing transitions.

use crate::error::{Error, Result};
use crate::fracmat::FracMatrix;
use crate::laurent::{LaurentPoly, Vars};
use crate::presentation::{stack_vertical, AdmissiblePresentation};
use crate::ratfunc::RatFunc;
use crate::word::{boundary_word, fox_derivative, GroupRingElt, Word};

/// Wirtinger data of a g-strand pure string link. Arcs are numbered by
/// positive integers; `strand_arcs[j]` lists strand j+1's arcs in order
/// from the i₋ end to the i₊ end. Each crossing is one Wirtinger relator
/// over the arc alphabet (the over-arc appears twice with opposite signs).
#[derive(Clone, Debug)]
pub struct StringLinkData {
    strands: usize,
    strand_arcs: Vec<Vec<usize>>,
    crossings: Vec<Word>,
}

/// One undercrossing transition along a strand.
#[derive(Clone, Debug)]
struct Transition {
    over: usize,
    sign: i32,
}

impl StringLinkData {
    pub fn new(strands: usize, strand_arcs: Vec<Vec<usize>>, crossings: Vec<Word>) -> Self {
        StringLinkData {
            strands,
            strand_arcs,
            crossings,
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    fn check(&self) -> Result<usize> {
        if self.strand_arcs.len() != self.strands || self.strands == 0 {
            return Err(Error::BadStringLink(
                "strand count does not match arc lists".into(),
            ));
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut total = 0usize;
        for arcs in &self.strand_arcs {
            if arcs.is_empty() {
                return Err(Error::BadStringLink("empty strand".into()));
            }
            for &a in arcs {
                if a == 0 || !seen.insert(a) {
                    return Err(Error::BadStringLink(format!(
                        "arc {} repeated or invalid",
                        a
                    )));
                }
                total += 1;
            }
        }
        if seen != (1..=total).collect() {
            return Err(Error::BadStringLink(
                "arcs must be numbered 1..=total".into(),
            ));
        }
        let transitions: usize = self.strand_arcs.iter().map(|a| a.len() - 1).sum();
        if self.crossings.len() != transitions {
            return Err(Error::BadStringLink(format!(
                "{} crossings for {} strand transitions",
                self.crossings.len(),
                transitions
            )));
        }
        Ok(total)
    }

    /// Finds the crossing realizing the transition `within` (in, out) and
    /// extracts its over-arc and sign: out = over^ε · in · over^(−ε).
    fn transition(&self, input: usize, out: usize) -> Result<Transition> {
        for w in &self.crossings {
            let occurrences: Vec<(usize, i32)> = w
                .letters()
                .iter()
                .enumerate()
                .filter(|(_, &l)| l.unsigned_abs() as usize == out)
                .map(|(p, &l)| (p, l.signum()))
                .collect();
            if occurrences.len() != 1 {
                continue; // `out` is this crossing's over-arc or absent
            }
            let (pos, sign) = occurrences[0];
            // solve w = P·out^s·S = 1 for out
            let p = Word::from_letters(w.letters()[..pos].iter().copied());
            let s = Word::from_letters(w.letters()[pos + 1..].iter().copied());
            let val = p.inverse().mul(&s.inverse());
            let solved = if sign > 0 { val } else { val.inverse() };
            // expect over^ε · in · over^(−ε)
            let ls = solved.letters();
            if ls.len() != 3 {
                continue;
            }
            let (a, b, c) = (ls[0], ls[1], ls[2]);
            if a != -c || b.unsigned_abs() as usize != input || b < 0 {
                continue;
            }
            return Ok(Transition {
                over: a.unsigned_abs() as usize,
                sign: a.signum(),
            });
        }
        Err(Error::BadStringLink(format!(
            "no crossing realizes the transition {} -> {}",
            input, out
        )))
    }
}

/// Arc-to-admissible-alphabet translation produced while assembling the
/// cylinder presentation.
struct ArcMap {
    genus: usize,
    aux: usize,
    /// flat admissible index of each arc (1-based arc ids)
    arc_to_flat: Vec<usize>,
    /// strands with a single arc get a synthetic top meridian
    synthetic_tops: Vec<(usize, usize)>, // (strand index 0-based, flat ip index)
}

fn build_arc_map(w: &StringLinkData) -> Result<ArcMap> {
    let g = w.strands();
    let total = w.check()?;
    let g2 = 2 * g;
    let singles = w.strand_arcs.iter().filter(|a| a.len() == 1).count();
    let aux = total + singles - 2 * g;
    let mut arc_to_flat = vec![0usize; total + 1];
    let mut synthetic_tops = Vec::new();
    let mut next_z = 1usize;
    for (j, arcs) in w.strand_arcs.iter().enumerate() {
        let im_flat = g + 1 + j; // i₋(γ_{g+j+1}) has flat index g+j+1
        let ip_flat = g2 + aux + g + 1 + j;
        arc_to_flat[arcs[0]] = im_flat;
        if arcs.len() == 1 {
            synthetic_tops.push((j, ip_flat));
            continue;
        }
        *arc_to_flat.get_mut(*arcs.last().unwrap()).unwrap() = ip_flat;
        for &a in &arcs[1..arcs.len() - 1] {
            arc_to_flat[a] = g2 + next_z;
            next_z += 1;
        }
    }
    Ok(ArcMap {
        genus: g,
        aux,
        arc_to_flat,
        synthetic_tops,
    })
}

fn map_arc_word(w: &Word, m: &ArcMap) -> Word {
    Word::from_letters(w.letters().iter().map(|&l| {
        let f = m.arc_to_flat[l.unsigned_abs() as usize] as i32;
        if l > 0 {
            f
        } else {
            -f
        }
    }))
}

/// γ̂_j = [γ₁,γ_{g+1}]⋯[γ_{j−1},γ_{g+j−1}]·γ_j over the 2g surface
/// generators.
fn gamma_hat(g: usize, j: usize) -> Word {
    let mut w = Word::identity();
    for i in 1..j {
        w = w.mul(&Word::commutator(&Word::gen(i as i32), &Word::gen((g + i) as i32)));
    }
    w.mul(&Word::gen(j as i32))
}

/// Renames a word over the 2g surface generators into the i₋ block
/// (identity on flat indices) or the i₊ block (shift by 2g+l).
fn surface_to_block(w: &Word, shift: usize) -> Word {
    Word::from_letters(w.letters().iter().map(|&l| {
        let f = (l.unsigned_abs() as usize + shift) as i32;
        if l > 0 {
            f
        } else {
            -f
        }
    }))
}

/// Embeds a g-strand pure string link exterior as a genus-g homology
/// cylinder: g relators i₊(γ̂_j)·δ̂_j⁻¹·i₋(γ̂_j)⁻¹ (blackboard-framed
/// longitudes δ̂_j) followed by the Wirtinger relators.
pub fn from_string_link(w: &StringLinkData) -> Result<AdmissiblePresentation> {
    let m = build_arc_map(w)?;
    let g = m.genus;
    let g2 = 2 * g;
    let ip_shift = g2 + m.aux;
    let mut relators = Vec::new();
    for j in 1..=g {
        let arcs = &w.strand_arcs[j - 1];
        // blackboard-framed longitude: product of over^(−ε) along the strand
        let mut delta = Word::identity();
        for t in 0..arcs.len() - 1 {
            let tr = w.transition(arcs[t], arcs[t + 1])?;
            let over_flat = m.arc_to_flat[tr.over] as i32;
            delta = delta.mul(&Word::gen(if tr.sign > 0 { -over_flat } else { over_flat }));
        }
        let gh = gamma_hat(g, j);
        let rel = surface_to_block(&gh, ip_shift)
            .mul(&delta.inverse())
            .mul(&surface_to_block(&gh, 0).inverse());
        relators.push(rel);
    }
    for c in &w.crossings {
        relators.push(map_arc_word(c, &m));
    }
    for &(j, ip_flat) in &m.synthetic_tops {
        let im_flat = g + 1 + j;
        relators.push(Word::from_letters([ip_flat as i32, -(im_flat as i32)]));
    }
    AdmissiblePresentation::new(g, m.aux, relators)
}

/// The Gassner matrix of the string link computed from the Wirtinger
/// presentation alone, over variables t₁..t_g (meridian classes): the
/// same −C·(A;B)⁻¹·[I;0] normalization applied to the exterior
/// presentation ⟨bottom meridians, interior arcs, top meridians | crossings⟩.
pub fn gassner(w: &StringLinkData) -> Result<FracMatrix> {
    let g = w.strands();
    let total = w.check()?;
    let singles = w.strand_arcs.iter().filter(|a| a.len() == 1).count();
    let l = total + singles - 2 * g;
    let vars = Vars::t(g);
    // local generator layout: bm 1..=g, a 1..=l, tm 1..=g
    let mut arc_to_local = vec![0usize; total + 1];
    let mut strand_of_local = vec![0usize; 2 * g + l + 1];
    let mut next_a = 0usize;
    let mut synth = Vec::new();
    for (j, arcs) in w.strand_arcs.iter().enumerate() {
        arc_to_local[arcs[0]] = 1 + j;
        strand_of_local[1 + j] = j;
        let tm_local = g + l + 1 + j;
        strand_of_local[tm_local] = j;
        if arcs.len() == 1 {
            synth.push((j, tm_local));
        } else {
            arc_to_local[*arcs.last().unwrap()] = tm_local;
            for &a in &arcs[1..arcs.len() - 1] {
                next_a += 1;
                arc_to_local[a] = g + next_a;
                strand_of_local[g + next_a] = j;
            }
        }
    }
    let mut relators: Vec<Word> = w
        .crossings
        .iter()
        .map(|c| {
            Word::from_letters(c.letters().iter().map(|&x| {
                let f = arc_to_local[x.unsigned_abs() as usize] as i32;
                if x > 0 {
                    f
                } else {
                    -f
                }
            }))
        })
        .collect();
    for &(j, tm_local) in &synth {
        relators.push(Word::from_letters([tm_local as i32, -((1 + j) as i32)]));
    }
    // abelianize with every arc of strand j ↦ t_{j+1}
    let abelianize = |x: &GroupRingElt| -> LaurentPoly {
        let mut out = LaurentPoly::zero(&vars);
        for (word, c) in x.terms() {
            let mut e = vec![0i64; g];
            for &letter in word.letters() {
                let j = strand_of_local[letter.unsigned_abs() as usize];
                e[j] += letter.signum() as i64;
            }
            out.add_term(e, c.clone());
        }
        out
    };
    let block = |offset: usize, count: usize| -> FracMatrix {
        let mut data = Vec::with_capacity(count * relators.len());
        for i in 1..=count {
            for r in &relators {
                let d = fox_derivative(r, offset + i);
                data.push(RatFunc::from_poly(abelianize(&d).bar()));
            }
        }
        FracMatrix::new(&vars, count, relators.len(), data)
    };
    let a = block(0, g);
    let b = block(g, l);
    let c = block(g + l, g);
    let ab = stack_vertical(&a, &b);
    let mut rhs = FracMatrix::zero(&vars, g + l, g);
    for i in 0..g {
        *rhs.at_mut(i, i) = RatFunc::from_poly(LaurentPoly::one(&vars));
    }
    let x = ab
        .solve_right(&rhs)
        .map_err(|_| Error::BadStringLink("Wirtinger (A;B) singular".into()))?;
    Ok(c.mul(&x).neg())
}

/// Convenience: the boundary word of the ambient surface (used by callers
/// assembling kernel vectors).
pub fn ambient_boundary(genus: usize) -> Word {
    boundary_word(genus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn eg4_matches_papers_presentation() {
        let p = fixtures::eg4();
        assert_eq!(p.genus(), 2);
        assert_eq!(p.aux(), 1);
        // flat indices: im1..4 = 1..4, z1 = 5, ip1..4 = 6..9
        let expect = [
            Word::from_letters([6, -3, 9, -1]),
            Word::from_letters([6, 8, -6, -8, 7, 5, -2, 3, 1, -3, -1]),
            Word::from_letters([9, 3, -9, -5]),
            Word::from_letters([3, -8, -3, 5]),
            Word::from_letters([4, -5, -9, 5]),
        ];
        assert_eq!(p.relators(), &expect);
    }

    #[test]
    fn eg4_marking_matches_paper() {
        let p = fixtures::eg4();
        let m = p.validate().unwrap();
        // z = γ₃, i₋(γ₄) = γ₄, i₋(γ₂) = γ₂γ₃, i₋(γ₁) = γ₁γ₃⁻¹γ₄
        assert_eq!(m.assignment[4], vec![0, 0, 1, 0]); // z (flat 5)
        assert_eq!(m.assignment[3], vec![0, 0, 0, 1]); // i₋(γ₄)
        assert_eq!(m.assignment[1], vec![0, 1, 1, 0]); // i₋(γ₂)
        assert_eq!(m.assignment[0], vec![1, 0, -1, 1]); // i₋(γ₁)
        assert_eq!(m.assignment[2], vec![0, 0, 1, 0]); // i₋(γ₃)
    }

    #[test]
    fn trivial_string_link_is_trivial_cylinder() {
        let p = fixtures::stringlink_trivial(2);
        let m = p.validate().unwrap();
        let vars = Vars::gamma(4);
        let r = p.magnus(&m, &vars).unwrap();
        assert_eq!(r, FracMatrix::identity(&vars, 4));
        // identity σ₂
        for (i, row) in m.sigma2.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(v, i64::from(i == j));
            }
        }
    }

    #[test]
    fn malformed_data_rejected() {
        // repeated arc
        let bad = StringLinkData::new(2, vec![vec![1, 2], vec![2]], vec![]);
        assert!(from_string_link(&bad).is_err());
        // wrong crossing count
        let bad2 = StringLinkData::new(1, vec![vec![1, 2]], vec![]);
        assert!(from_string_link(&bad2).is_err());
    }

    #[test]
    fn gassner_of_trivial_link_is_identity() {
        let w = StringLinkData::new(2, vec![vec![1], vec![2]], vec![]);
        let g = gassner(&w).unwrap();
        let vars = Vars::t(2);
        assert_eq!(g, FracMatrix::identity(&vars, 2));
    }
}
